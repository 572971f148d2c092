//! Raising operators on the canonical basis `{F(S)}` of `∇^ν(∇^μ E)`, the
//! highest-weight vector solver, and explicit constructions of highest-weight
//! vectors (Foulkes vectors, the tilde and star maps, products in symmetric
//! powers).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::linear::{checked_mul, Coeff, LinComb};
use crate::partition::{Composition, Partition};
use crate::plethystic::{enumerate_pssyt_weight, weight, InnerTableau, Pssyt};
use crate::polytabloid::Straightener;
use crate::tableau::{ColumnOrdered, Letter, Tableau};

/// A weight vector of `∇^ν(∇^μ E)`, `dim E = d`, in the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HwVector {
    mu: Partition,
    nu: Partition,
    d: usize,
    weight: Composition,
    coeffs: LinComb<Pssyt>,
}

impl HwVector {
    /// Checks that every key is a plethystic semistandard tableau of shape
    /// `μ^ν` with entries at most `d` and weight `weight`.
    pub fn new(mu: Partition, nu: Partition, d: usize, weight_: Composition, coeffs: LinComb<Pssyt>) -> Result<Self> {
        for key in coeffs.keys() {
            if key.shape() != &nu || key.entries().iter().any(|e| e.0.shape() != &mu) {
                return Err(Error::ShapeMismatch(format!("basis key does not have shape {mu}^{nu}")));
            }
            if !key.is_semistandard() || key.entries().iter().any(|e| !e.0.is_semistandard()) {
                return Err(Error::Precondition("basis key is not plethystic semistandard".into()));
            }
            if key.entries().iter().any(|e| e.0.entries().iter().any(|&x| x as usize > d)) {
                return Err(Error::Precondition(format!("basis key uses a letter above {d}")));
            }
            if weight(key) != weight_ {
                return Err(Error::Inconsistent(format!("basis key of weight {} in a vector of weight {weight_}", weight(key))));
            }
        }
        Ok(HwVector {
            mu,
            nu,
            d,
            weight: weight_,
            coeffs,
        })
    }

    /// `F(S)` for a single plethystic semistandard tableau.
    pub fn basis_vector(mu: &Partition, d: usize, s: Pssyt) -> Result<Self> {
        let w = weight(&s);
        let nu = s.shape().clone();
        Self::new(mu.clone(), nu, d, w, LinComb::singleton(s, 1))
    }

    /// The unit `1 ∈ Sym^0(∇^μ E)`.
    pub fn unit(mu: &Partition, d: usize) -> Self {
        HwVector {
            mu: mu.clone(),
            nu: Partition::empty(),
            d,
            weight: Composition::new(Vec::new()),
            coeffs: LinComb::singleton(Tableau::empty(), 1),
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn letters(&self) -> usize {
        self.d
    }

    pub fn weight(&self) -> &Composition {
        &self.weight
    }

    pub fn coeffs(&self) -> &LinComb<Pssyt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Same vector up to a nonzero rational scalar.
    pub fn is_proportional_to(&self, other: &HwVector) -> bool {
        let (Some((k, &a)), false) = (self.coeffs.iter().next(), other.is_zero()) else {
            return self.is_zero() && other.is_zero();
        };
        let b = other.coeffs.coeff(k);
        if b == 0 || self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        self.coeffs
            .iter()
            .all(|(key, &x)| (x as i128) * (b as i128) == (other.coeffs.coeff(key) as i128) * (a as i128))
    }

    /// Whether `X^{(c)}` kills the vector for every `c` in `2..=d`.
    pub fn is_highest_weight(&self) -> Result<bool> {
        let mut model = PlethysmModel::new(self.mu.clone(), self.nu.clone(), self.d);
        for c in 2..=self.d {
            if !model.raising_action(c, self)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Dense matrix of `X^{(c)}` from the weight space of `β` to that of
/// `β + e_{c-1} - e_c`, in the sorted canonical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaisingMatrix {
    pub c: usize,
    pub source: Vec<Pssyt>,
    pub target: Vec<Pssyt>,
    /// `entries[row][col]`, rows indexed by `target`
    pub entries: Vec<Vec<Coeff>>,
}

/// Straightening state for one `(μ, ν, d)`; keep one per worker.
#[derive(Debug, Clone)]
pub struct PlethysmModel {
    mu: Partition,
    nu: Partition,
    d: usize,
    inner: Straightener<Letter>,
    outer: Straightener<InnerTableau>,
}

impl PlethysmModel {
    pub fn new(mu: Partition, nu: Partition, d: usize) -> Self {
        PlethysmModel {
            mu,
            nu,
            d,
            inner: Straightener::new(),
            outer: Straightener::new(),
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn letters(&self) -> usize {
        self.d
    }

    /// Rewrites `F(S)`, for a `ν`-tableau `S` of arbitrary `μ`-tableaux, in the
    /// canonical basis: each entry is straightened, the result is expanded
    /// multilinearly, and each outer tableau is straightened over the inner
    /// column order.
    pub fn express(&mut self, s: &Tableau<Tableau<Letter>>) -> Result<LinComb<Pssyt>> {
        if s.shape() != &self.nu {
            return Err(Error::ShapeMismatch(format!("outer shape {} vs {}", s.shape(), self.nu)));
        }
        let mut factors = Vec::with_capacity(s.num_boxes());
        for e in s.entries() {
            if e.shape() != &self.mu {
                return Err(Error::ShapeMismatch(format!("inner shape {} vs {}", e.shape(), self.mu)));
            }
            let f = self.inner.straighten(e)?.into_vec();
            if f.is_empty() {
                return Ok(LinComb::new());
            }
            factors.push(f);
        }
        let mut out = LinComb::new();
        let mut choice = vec![0usize; factors.len()];
        loop {
            let mut coeff: Coeff = 1;
            let mut entries = Vec::with_capacity(factors.len());
            for (f, &k) in factors.iter().zip(&choice) {
                coeff = checked_mul(coeff, f[k].1)?;
                entries.push(ColumnOrdered(f[k].0.clone()));
            }
            let outer = Tableau::new(self.nu.clone(), entries)?;
            let straight = self.outer.straighten(&outer)?;
            out.add_scaled(&straight, coeff)?;
            let mut pos = 0;
            loop {
                if pos == factors.len() {
                    return Ok(out);
                }
                choice[pos] += 1;
                if choice[pos] < factors[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    /// `X^{(c)} · F(S)` for one basis key.
    pub fn raise_key(&mut self, c: usize, s: &Pssyt) -> Result<LinComb<Pssyt>> {
        let base: Tableau<Tableau<Letter>> = s.map(|e| e.0.clone());
        let mut out = LinComb::new();
        for k in 0..base.num_boxes() {
            let entry = &base.entries()[k];
            for pos in 0..entry.num_boxes() {
                if entry.entries()[pos] as usize != c {
                    continue;
                }
                let mut changed = entry.clone();
                let boxes = changed.box_list();
                let (i, j) = boxes[pos];
                changed.set(i, j, (c - 1) as Letter);
                let mut outer = base.clone();
                let (oi, oj) = base.box_list()[k];
                outer.set(oi, oj, changed);
                out.add_scaled(&self.express(&outer)?, 1)?;
            }
        }
        Ok(out)
    }

    /// `X^{(c)} · v`, for `2 ≤ c ≤ d`.
    pub fn raising_action(&mut self, c: usize, v: &HwVector) -> Result<HwVector> {
        if !(2..=self.d).contains(&c) {
            return Err(Error::IndexOutOfRange(format!("raising operator {c} with {} letters", self.d)));
        }
        self.check_same_space(v)?;
        let mut out = LinComb::new();
        for (s, &a) in v.coeffs() {
            out.add_scaled(&self.raise_key(c, s)?, a)?;
        }
        let mut w = v.weight.padded(c);
        if w[c - 1] == 0 {
            return HwVector::new(self.mu.clone(), self.nu.clone(), self.d, v.weight.clone(), LinComb::new());
        }
        w[c - 1] -= 1;
        w[c - 2] += 1;
        HwVector::new(self.mu.clone(), self.nu.clone(), self.d, Composition::new(w), out)
    }

    fn check_same_space(&self, v: &HwVector) -> Result<()> {
        if v.mu != self.mu || v.nu != self.nu || v.d != self.d {
            return Err(Error::ShapeMismatch(format!(
                "vector in ∇^{}(∇^{}) with {} letters, model for ∇^{}(∇^{}) with {} letters",
                v.nu, v.mu, v.d, self.nu, self.mu, self.d
            )));
        }
        Ok(())
    }

    /// Canonical basis of the `β`-weight space, in the column total order.
    pub fn weight_space_basis(&self, beta: &Composition) -> Vec<Pssyt> {
        if beta.len() > self.d {
            return Vec::new();
        }
        enumerate_pssyt_weight(&self.mu, &self.nu, beta)
    }

    pub fn raising_matrix(&mut self, c: usize, beta: &Composition) -> Result<RaisingMatrix> {
        if !(2..=self.d).contains(&c) {
            return Err(Error::IndexOutOfRange(format!("raising operator {c} with {} letters", self.d)));
        }
        let source = self.weight_space_basis(beta);
        let mut target_w = beta.padded(c);
        let target = if target_w[c - 1] == 0 {
            Vec::new()
        } else {
            target_w[c - 1] -= 1;
            target_w[c - 2] += 1;
            self.weight_space_basis(&Composition::new(target_w))
        };
        let index: BTreeMap<&Pssyt, usize> = target.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let mut entries = vec![vec![0; source.len()]; target.len()];
        for (col, s) in source.iter().enumerate() {
            for (key, &a) in &self.raise_key(c, s)? {
                let row = *index
                    .get(key)
                    .ok_or_else(|| Error::Inconsistent("raising produced a key outside the target weight space".into()))?;
                entries[row][col] = a;
            }
        }
        Ok(RaisingMatrix {
            c,
            source,
            target,
            entries,
        })
    }

    /// An integral basis of the highest-weight vectors of weight `λ`: the
    /// joint kernel of `X^{(2)}, …, X^{(d)}` on the `λ`-weight space.
    pub fn hwv_space(&mut self, lambda: &Partition) -> Result<Vec<HwVector>> {
        if lambda.len() > self.d {
            return Err(Error::Precondition(format!("{lambda} has more than {} parts", self.d)));
        }
        let degree = self.mu.size() * self.nu.size();
        if lambda.size() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: lambda.size(),
            });
        }
        let beta = lambda.as_composition();
        let basis = self.weight_space_basis(&beta);
        let mut rows: BTreeMap<(usize, Pssyt), Vec<(usize, Coeff)>> = BTreeMap::new();
        for c in 2..=self.d {
            for (col, s) in basis.iter().enumerate() {
                for (key, &a) in &self.raise_key(c, s)? {
                    rows.entry((c, key.clone())).or_default().push((col, a));
                }
            }
        }
        let mut ech = Echelon::new(basis.len());
        for row in rows.into_values() {
            ech.push_sparse(row)?;
        }
        ech.kernel()?
            .into_iter()
            .map(|x| {
                let coeffs = basis.iter().cloned().zip(x).collect();
                HwVector::new(self.mu.clone(), self.nu.clone(), self.d, beta.clone(), coeffs)
            })
            .collect()
    }
}

/// `w_ℓ = Σ_{σ ∈ S_ℓ} sgn(σ) (u_1 u_{1σ}) ⋯ (u_ℓ u_{ℓσ})` in `Sym^ℓ(Sym^2 E)`.
pub fn foulkes_hwv(l: usize, d: usize) -> Result<HwVector> {
    if l == 0 || l > 7 {
        return Err(Error::Precondition(format!("Foulkes vector needs 1 ≤ ℓ ≤ 7, got {l}")));
    }
    if d < l {
        return Err(Error::Precondition(format!("Foulkes vector w_{l} needs at least {l} letters")));
    }
    let mu = Partition::row(2);
    let nu = Partition::row(l);
    let mut model = PlethysmModel::new(mu.clone(), nu.clone(), d);
    let mut out = LinComb::new();
    let mut perm: Vec<usize> = (0..l).collect();
    let mut sum = |perm: &[usize], sign: Coeff, model: &mut PlethysmModel| -> Result<()> {
        let entries = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| {
                let (a, b) = (i.min(j) as Letter + 1, i.max(j) as Letter + 1);
                Tableau::from_rows(vec![vec![a, b]]).expect("one row")
            })
            .collect();
        let s = Tableau::new(nu.clone(), entries)?;
        out.add_scaled(&model.express(&s)?, sign)
    };
    for_each_signed_permutation(&mut perm, 0, 1, &mut |p, sign| sum(p, sign, &mut model))?;
    HwVector::new(mu, nu, d, Composition::new(vec![2; l]), out)
}

fn for_each_signed_permutation(
    perm: &mut Vec<usize>,
    start: usize,
    sign: Coeff,
    f: &mut dyn FnMut(&[usize], Coeff) -> Result<()>,
) -> Result<()> {
    if start == perm.len() {
        return f(perm, sign);
    }
    for k in start..perm.len() {
        perm.swap(start, k);
        for_each_signed_permutation(perm, start + 1, if k == start { sign } else { -sign }, f)?;
        perm.swap(start, k);
    }
    Ok(())
}

/// Re-expresses `Σ a_S F(φ(S))` in the canonical basis of a new model, where
/// `φ` rewrites each inner tableau.
fn transport(
    v: &HwVector,
    model: &mut PlethysmModel,
    weight_: Composition,
    mut phi: impl FnMut(&Tableau<Letter>) -> Tableau<Letter>,
) -> Result<HwVector> {
    let mut out = LinComb::new();
    for (s, &a) in v.coeffs() {
        let mapped = s.map(|e| phi(&e.0));
        out.add_scaled(&model.express(&mapped)?, a)?;
    }
    HwVector::new(model.mu.clone(), model.nu.clone(), model.d, weight_, out)
}

/// `v ↦ ṽ`: every inner tableau gets a new top row of `r` ones and all old
/// entries shift up by one letter. Lands in `∇^ν(∇^{(r)⊔μ} E)` with `d+1`
/// letters and weight `(nr) ⊔ λ`.
pub fn tilde_map(v: &HwVector, r: usize) -> Result<HwVector> {
    if r < v.mu.first_part() || r == 0 {
        return Err(Error::Precondition(format!("tilde map needs r ≥ max(1, μ_1) = {}", v.mu.first_part().max(1))));
    }
    let mu = Partition::row(r).disjoint_union(&v.mu);
    let mut model = PlethysmModel::new(mu, v.nu.clone(), v.d + 1);
    let mut w = vec![v.nu.size() * r];
    w.extend_from_slice(v.weight.parts());
    transport(v, &mut model, Composition::new(w), |t| {
        let mut rows = vec![vec![1 as Letter; r]];
        rows.extend(t.rows().map(|row| row.iter().map(|&x| x + 1).collect()));
        Tableau::from_rows(rows).expect("rows form a partition shape")
    })
}

/// `v ↦ v*`: a new column holding `1, …, r` is inserted at column
/// `e = 1` if `r ≥ ℓ(μ)`, else `e = μ_{r+1} + 1`. Lands in
/// `∇^ν(∇^{μ+(1^r)} E)` with weight `λ + n(1^r)`; the new inner tableaux need
/// not be semistandard and are straightened.
pub fn star_map(v: &HwVector, r: usize) -> Result<HwVector> {
    if r == 0 || v.d < r || v.d < v.mu.len() {
        return Err(Error::Precondition(format!(
            "star map needs 1 ≤ r ≤ d and ℓ(μ) ≤ d (r = {r}, d = {}, μ = {})",
            v.d, v.mu
        )));
    }
    let e = if r >= v.mu.len() { 1 } else { v.mu.part(r) + 1 };
    let mu = v.mu.add(&Partition::column(r));
    let mut model = PlethysmModel::new(mu, v.nu.clone(), v.d);
    let n = v.nu.size();
    let mut w = v.weight.padded(r.max(v.weight.len()));
    w.iter_mut().take(r).for_each(|x| *x += n);
    transport(v, &mut model, Composition::new(w), |t| {
        let mut rows: Vec<Vec<Letter>> = (0..r.max(t.shape().len()))
            .map(|i| if i < t.shape().len() { t.row(i).to_vec() } else { Vec::new() })
            .collect();
        for (i, row) in rows.iter_mut().enumerate().take(r) {
            row.insert(e - 1, (i + 1) as Letter);
        }
        Tableau::from_rows(rows).expect("rows form a partition shape")
    })
}

/// Product in the symmetric algebra: `F(S) · F(S') = F(S ∪ S')` for single-row
/// outer shapes, entries re-sorted.
pub fn multiply_hwv(v: &HwVector, w: &HwVector) -> Result<HwVector> {
    if v.nu.len() > 1 || w.nu.len() > 1 {
        return Err(Error::Precondition(format!(
            "products need single-row outer shapes, got {} and {}",
            v.nu, w.nu
        )));
    }
    if v.mu != w.mu || v.d != w.d {
        return Err(Error::ShapeMismatch(format!(
            "factors from ∇^{} with {} letters and ∇^{} with {} letters",
            v.mu, v.d, w.mu, w.d
        )));
    }
    let nu = Partition::row(v.nu.size() + w.nu.size());
    let mut out = LinComb::new();
    for (s, &a) in v.coeffs() {
        for (t, &b) in w.coeffs() {
            let mut entries: Vec<InnerTableau> = s.entries().iter().chain(t.entries()).cloned().collect();
            entries.sort();
            out.add_term(Tableau::new(nu.clone(), entries)?, checked_mul(a, b)?)?;
        }
    }
    let len = v.weight.len().max(w.weight.len());
    let sum: Vec<usize> = v
        .weight
        .padded(len)
        .into_iter()
        .zip(w.weight.padded(len))
        .map(|(x, y)| x + y)
        .collect();
    HwVector::new(v.mu.clone(), nu, v.d, Composition::new(sum), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plethystic::{maximal_weights, parse_pssyt};
    use crate::symfunc::plethysm_coefficient;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn s(text: &str) -> Pssyt {
        parse_pssyt(text).unwrap()
    }

    fn brion_v() -> HwVector {
        let terms = [
            ("[1 1/2/3][1 2/3/4]", 1),
            ("[1 1/2/3][1 3/2/4]", -1),
            ("[1 1/3/4][1 2/2/3]", -1),
            ("[1 1/2/4][1 3/2/3]", 1),
        ];
        let coeffs = terms.iter().map(|(t, c)| (s(t), *c)).collect();
        HwVector::new(p("2,1,1"), p("2"), 4, Composition::new(vec![3, 2, 2, 1]), coeffs).unwrap()
    }

    #[test]
    fn brion_raising_examples() {
        let mut m = PlethysmModel::new(p("2,1,1"), p("2"), 4);
        let t1 = s("[1 1/2/3][1 2/3/4]");
        let t2 = s("[1 1/2/3][1 3/2/4]");
        let t3 = s("[1 1/3/4][1 2/2/3]");
        assert_eq!(m.raise_key(2, &t1).unwrap(), LinComb::singleton(s("[1 1/2/3][1 1/3/4]"), 1));
        assert!(m.raise_key(2, &t2).unwrap().is_zero());
        assert_eq!(m.raise_key(2, &t1).unwrap(), m.raise_key(2, &t3).unwrap());
        let v = brion_v();
        for c in 2..=4 {
            assert!(m.raising_action(c, &v).unwrap().is_zero());
        }
        assert!(m.raising_action(5, &v).is_err());
    }

    #[test]
    fn brion_weight_space_and_kernel() {
        let mut m = PlethysmModel::new(p("2,1,1"), p("2"), 4);
        let basis = m.weight_space_basis(&Composition::new(vec![3, 2, 2, 1]));
        assert_eq!(basis.len(), 5);
        assert!(brion_v().coeffs().keys().all(|k| basis.contains(k)));
        assert!(basis.contains(&s("[1 1/2/3][1 4/2/3]")));
        let space = m.hwv_space(&p("3,2,2,1")).unwrap();
        assert_eq!(space.len(), 1);
        assert!(space[0].is_proportional_to(&brion_v()));
        let mut m2 = PlethysmModel::new(p("3,2,1"), p("2"), 4);
        assert_eq!(m2.hwv_space(&p("5,4,2,1")).unwrap().len(), 2);
        assert!(m.hwv_space(&p("9,1")).is_err());
    }

    #[test]
    fn raising_matrix_shapes() {
        let mut m = PlethysmModel::new(p("2,1,1"), p("2"), 4);
        let beta = Composition::new(vec![3, 2, 2, 1]);
        let rm = m.raising_matrix(2, &beta).unwrap();
        assert_eq!(rm.source.len(), 5);
        assert_eq!(rm.entries.len(), rm.target.len());
        assert!(rm.entries.iter().all(|row| row.len() == 5));
        let v: Vec<Coeff> = rm.source.iter().map(|k| brion_v().coeffs().coeff(k)).collect();
        for row in &rm.entries {
            assert_eq!(row.iter().zip(&v).map(|(a, b)| a * b).sum::<Coeff>(), 0);
        }
    }

    #[test]
    fn raising_image_of_a_non_maximal_tableau() {
        let entries = [
            "1 1/2 2", "1 1/2 3", "1 2/2 3", "1 1/3 3", "1 2/3 3", "1 1/2 4", "1 2/2 4", "1 1/3 4", "1 2/3 4",
            "1 1/4 4", "1 2/4 4",
        ];
        let column = |list: &[&str]| -> Pssyt {
            let mut inner: Vec<InnerTableau> = list.iter().map(|e| ColumnOrdered(Tableau::parse(e).unwrap())).collect();
            inner.sort();
            Tableau::from_rows(inner.into_iter().map(|e| vec![e]).collect()).unwrap()
        };
        let t = column(&entries);
        assert!(t.is_semistandard());
        let mut prime = entries;
        prime[10] = "1 3/2 4";
        let t2 = column(&prime);
        assert_eq!(t2.entries().last().unwrap().0, Tableau::parse("1 3/2 4").unwrap());
        let mu = p("2,2");
        let v = HwVector::basis_vector(&mu, 4, t.clone()).unwrap();
        let v2 = HwVector::basis_vector(&mu, 4, t2.clone()).unwrap();
        assert_eq!(v.weight(), &Composition::new(vec![17, 11, 8, 8]));
        assert_eq!(v2.weight(), &Composition::new(vec![17, 11, 9, 7]));
        let mut m = PlethysmModel::new(mu, p("1^11"), 4);
        let x4 = m.raising_action(4, &v).unwrap();
        assert_eq!(x4.coeffs(), &LinComb::singleton(t2, -1));
        assert!(!v.is_highest_weight().unwrap());
        assert!(v2.is_highest_weight().unwrap());
    }

    #[test]
    fn foulkes_vectors() {
        let w1 = foulkes_hwv(1, 1).unwrap();
        assert_eq!(w1.coeffs(), &LinComb::singleton(s("[1 1]"), 1));
        let w2 = foulkes_hwv(2, 2).unwrap();
        let expected: LinComb<_> = [(s("[1 1][2 2]"), 1), (s("[1 2][1 2]"), -1)].into_iter().collect();
        assert_eq!(w2.coeffs(), &expected);
        let w3 = foulkes_hwv(3, 3).unwrap();
        assert_eq!(w3.coeffs().coeff(&s("[1 1][2 2][3 3]")), 1);
        for l in 1..=4 {
            assert!(foulkes_hwv(l, l).unwrap().is_highest_weight().unwrap());
        }
        assert!(foulkes_hwv(3, 2).is_err());
    }

    #[test]
    fn foulkes_products() {
        let w1 = foulkes_hwv(1, 3).unwrap();
        let w2 = foulkes_hwv(2, 3).unwrap();
        let w3 = foulkes_hwv(3, 3).unwrap();
        let a = multiply_hwv(&multiply_hwv(&w1, &w1).unwrap(), &w1).unwrap();
        let b = multiply_hwv(&w2, &w1).unwrap();
        assert_eq!(a.weight(), &Composition::new(vec![6]));
        assert_eq!(b.weight(), &Composition::new(vec![4, 2]));
        assert_eq!(w3.weight(), &Composition::new(vec![2, 2, 2]));
        for v in [&a, &b, &w3] {
            assert!(v.is_highest_weight().unwrap());
        }
        let unit = HwVector::unit(&p("2"), 3);
        assert_eq!(multiply_hwv(&w2, &unit).unwrap(), w2);
        assert!(multiply_hwv(&w2, &foulkes_hwv(1, 4).unwrap()).is_err());
    }

    #[test]
    fn tilde_examples() {
        let v = HwVector::basis_vector(&p("1"), 1, s("[1]")).unwrap();
        let t = tilde_map(&v, 1).unwrap();
        assert_eq!(t.coeffs(), &LinComb::singleton(s("[1/2]"), 1));
        let empty = HwVector::basis_vector(&Partition::empty(), 0, s("[][][]")).unwrap();
        let t = tilde_map(&empty, 1).unwrap();
        assert_eq!(t.coeffs(), &LinComb::singleton(s("[1][1][1]"), 1));
        assert_eq!(t.weight(), &Composition::new(vec![3]));
        let bv = tilde_map(&brion_v(), 2).unwrap();
        assert!(bv.is_highest_weight().unwrap());
        assert_eq!(bv.weight(), &Composition::new(vec![4, 3, 2, 2, 1]));
        assert!(tilde_map(&brion_v(), 1).is_err());
    }

    #[test]
    fn star_examples() {
        let vs = star_map(&brion_v(), 2).unwrap();
        assert_eq!(vs.mu(), &p("3,2,1"));
        assert_eq!(vs.weight(), &Composition::new(vec![5, 4, 2, 1]));
        assert!(vs.is_highest_weight().unwrap());
        assert!(!vs.is_zero());
        let mut m = PlethysmModel::new(p("3,2,1"), p("2"), 4);
        let t1 = m.express(&s("[1 1 1/2 2/3][1 1 2/3 2/4]").map(|e| e.0.clone())).unwrap();
        let expected: LinComb<_> =
            [(s("[1 1 1/2 2/3][1 1 2/2 3/4]"), 1), (s("[1 1 1/2 2/3][1 1 2/2 4/3]"), -1)].into_iter().collect();
        assert_eq!(t1, expected);
        assert!(star_map(&brion_v(), 5).is_err());
    }

    #[test]
    fn star_of_the_stability_family() {
        for (lambda, cnt) in maximal_weights(&p("2"), &p("1,1,1")) {
            assert_eq!(cnt, 1);
            let m = PlethysmModel::new(p("2"), p("1,1,1"), lambda.len());
            let basis = m.weight_space_basis(&lambda.as_composition());
            let v = HwVector::basis_vector(&p("2"), lambda.len(), basis[0].clone()).unwrap();
            let vs = star_map(&v, 1).unwrap();
            assert_eq!(vs.coeffs().len(), 1);
            let key = vs.coeffs().keys().next().unwrap();
            assert!(key.entries().iter().all(|e| e.0.row(0)[0] == 1));
            assert!(vs.is_highest_weight().unwrap());
        }
    }

    #[test]
    fn kernel_dimension_matches_coefficient_small() {
        for (nu, mu) in [("2", "2"), ("2", "2,1"), ("1,1", "2,1"), ("3", "2"), ("2,1", "2")] {
            let (nu, mu) = (p(nu), p(mu));
            for lambda in crate::partition::partitions(nu.size() * mu.size(), Some(4), None) {
                let mut m = PlethysmModel::new(mu.clone(), nu.clone(), lambda.len());
                let k = m.hwv_space(&lambda).unwrap().len() as Coeff;
                assert_eq!(k, plethysm_coefficient(&nu, &mu, &lambda).unwrap(), "{nu} {mu} {lambda}");
            }
        }
    }
}
