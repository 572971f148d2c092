//! Symmetric functions of a fixed degree: Schur vectors, partition-weight
//! multiplicities, and the unitriangular change of basis between them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linear::{checked_add, checked_mul, Coeff, LinComb};
use crate::partition::{partitions, Partition};
use crate::plethystic::count_pssyt_weight;
use crate::tableau::kostka_strips;

/// `Σ c_λ s_λ` with every `λ ⊢ degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurVector {
    degree: usize,
    coeffs: LinComb<Partition>,
}

impl SchurVector {
    pub fn zero(degree: usize) -> Self {
        SchurVector {
            degree,
            coeffs: LinComb::new(),
        }
    }

    /// `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        SchurVector {
            degree: lambda.size(),
            coeffs: LinComb::singleton(lambda, 1),
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, Coeff)>) -> Result<Self> {
        let mut v = Self::zero(degree);
        for (lambda, c) in terms {
            v.add_term(lambda, c)?;
        }
        Ok(v)
    }

    pub fn add_term(&mut self, lambda: Partition, c: Coeff) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: lambda.size(),
            });
        }
        self.coeffs.add_term(lambda, c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &Partition) -> Coeff {
        self.coeffs.coeff(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in increasing lexicographic order of `λ`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, Coeff)> + '_ {
        self.coeffs.iter().map(|(k, &c)| (k, c))
    }

    /// Terms with the reverse-lexicographically greatest `λ` first.
    pub fn terms_reverse_lex(&self) -> Vec<(Partition, Coeff)> {
        self.iter().rev().map(|(k, c)| (k.clone(), c)).collect()
    }

    /// `λ` with nonzero coefficient that no other such `λ` strictly dominates.
    pub fn maximal_constituents(&self) -> Vec<(Partition, Coeff)> {
        self.extremal_constituents(|a, b| a.dominates(b).unwrap_or(false))
    }

    /// `λ` with nonzero coefficient that strictly dominate no other such `λ`.
    pub fn minimal_constituents(&self) -> Vec<(Partition, Coeff)> {
        self.extremal_constituents(|a, b| b.dominates(a).unwrap_or(false))
    }

    fn extremal_constituents(&self, above: impl Fn(&Partition, &Partition) -> bool) -> Vec<(Partition, Coeff)> {
        self.iter()
            .filter(|(l, _)| !self.iter().any(|(k, _)| k != *l && above(k, l)))
            .map(|(l, c)| (l.clone(), c))
            .collect()
    }

    /// `Σ c_λ · |SSYT(λ, ≤d)|`.
    pub fn dimension(&self, d: usize) -> Result<Coeff> {
        let mut total: Coeff = 0;
        for (lambda, c) in self.iter() {
            let dim = Coeff::try_from(dim_nabla(lambda, d)).map_err(|_| Error::Overflow)?;
            total = checked_add(total, checked_mul(c, dim)?)?;
        }
        Ok(total)
    }
}

/// Dimensions of the partition-weight spaces of a polynomial representation
/// in `d` letters, i.e. the coefficients of `m_β` for `β ⊢ degree`, `ℓ(β) ≤ d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicityMap {
    degree: usize,
    d: usize,
    weights: BTreeMap<Partition, u64>,
}

impl WeightMultiplicityMap {
    pub fn new(degree: usize, d: usize) -> Self {
        WeightMultiplicityMap {
            degree,
            d,
            weights: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> usize {
        self.d
    }

    pub fn insert(&mut self, beta: Partition, mult: u64) -> Result<()> {
        if beta.size() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: beta.size(),
            });
        }
        if beta.len() > self.d {
            return Err(Error::Precondition(format!("weight {beta} has more than {} parts", self.d)));
        }
        if mult == 0 {
            self.weights.remove(&beta);
        } else {
            self.weights.insert(beta, mult);
        }
        Ok(())
    }

    pub fn get(&self, beta: &Partition) -> u64 {
        self.weights.get(beta).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        self.weights.iter().map(|(k, &v)| (k, v))
    }

    /// Partition-weight multiplicities of `Σ c_λ s_λ` in `d` letters.
    pub fn of_schur_vector(v: &SchurVector, d: usize) -> Result<Self> {
        let mut out = Self::new(v.degree(), d);
        for beta in partitions(v.degree(), Some(d), None) {
            let mut m: Coeff = 0;
            for (lambda, c) in v.iter() {
                let k = Coeff::try_from(kostka_strips(lambda.parts(), beta.parts())).map_err(|_| Error::Overflow)?;
                m = checked_add(m, checked_mul(c, k)?)?;
            }
            let m = u64::try_from(m).map_err(|_| Error::Inconsistent(format!("negative weight multiplicity at {beta}")))?;
            out.insert(beta, m)?;
        }
        Ok(out)
    }
}

/// Formal character data of `∇^ν(∇^μ E)` with `dim E = d`: for each partition
/// `β` of `|μ||ν|` with at most `d` parts, the number of plethystic
/// semistandard tableaux of shape `μ^ν` and weight `β`.
pub fn plethysm_weights(nu: &Partition, mu: &Partition, d: usize) -> WeightMultiplicityMap {
    let degree = mu.size() * nu.size();
    let mut out = WeightMultiplicityMap::new(degree, d);
    for beta in partitions(degree, Some(d), None) {
        let m = count_pssyt_weight(mu, nu, &beta.as_composition());
        out.insert(beta, m).expect("weight has the right degree and length");
    }
    out
}

/// Peels Schur functions off partition-weight data, largest key first.
///
/// `residue` must contain every partition of the degree that lies in the
/// relevant up-set (missing keys count as 0). Returns the coefficients found at
/// each key; a negative pivot means the data is not a character.
fn peel(mut residue: BTreeMap<Partition, Coeff>) -> Result<BTreeMap<Partition, Coeff>> {
    let keys: Vec<Partition> = residue.keys().rev().cloned().collect();
    let mut out = BTreeMap::new();
    for (pos, beta) in keys.iter().enumerate() {
        let c = residue[beta];
        if c == 0 {
            continue;
        }
        if c < 0 {
            return Err(Error::Inconsistent(format!(
                "negative Schur coefficient {c} at {beta}: input is not a character"
            )));
        }
        out.insert(beta.clone(), c);
        for kappa in &keys[pos..] {
            let k = kostka_strips(beta.parts(), kappa.parts());
            if k != 0 {
                let k = Coeff::try_from(k).map_err(|_| Error::Overflow)?;
                let slot = residue.get_mut(kappa).expect("key present");
                *slot = slot.checked_sub(checked_mul(c, k)?).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(out)
}

/// The Schur vector whose partition-weight multiplicities in `w.letters()`
/// letters equal `w`. Partitions with more parts than letters are invisible,
/// so the result is the expansion truncated to `ℓ(λ) ≤ d`.
pub fn schur_expand(w: &WeightMultiplicityMap) -> Result<SchurVector> {
    let mut residue = BTreeMap::new();
    for beta in partitions(w.degree(), Some(w.letters()), None) {
        let m = Coeff::try_from(w.get(&beta)).map_err(|_| Error::Overflow)?;
        residue.insert(beta, m);
    }
    SchurVector::from_terms(w.degree(), peel(residue)?)
}

/// `s_ν ∘ s_μ` in full (computed with `|μ||ν|` letters).
pub fn plethysm(nu: &Partition, mu: &Partition) -> Result<SchurVector> {
    let degree = mu.size() * nu.size();
    schur_expand(&plethysm_weights(nu, mu, degree))
}

/// Partitions `β ⊢ |λ|` with `ℓ(β) ≤ ℓ(λ)` and `β ⊵ λ`: the weights needed
/// to extract the coefficient of `s_λ`.
pub fn dominating_weights(lambda: &Partition) -> Vec<Partition> {
    partitions(lambda.size(), Some(lambda.len()), None)
        .into_iter()
        .filter(|beta| beta.dominates(lambda).unwrap_or(false))
        .collect()
}

/// Coefficient of `s_λ` in a character, from its multiplicities at every
/// weight in [`dominating_weights`] (absent weights count as 0).
pub fn coefficient_from_weights(lambda: &Partition, counts: &BTreeMap<Partition, u64>) -> Result<Coeff> {
    let mut residue = BTreeMap::new();
    for beta in dominating_weights(lambda) {
        let m = counts.get(&beta).copied().unwrap_or(0);
        residue.insert(beta, Coeff::try_from(m).map_err(|_| Error::Overflow)?);
    }
    Ok(peel(residue)?.get(lambda).copied().unwrap_or(0))
}

/// `⟨s_ν ∘ s_μ, s_λ⟩`, using only weights `β ⊵ λ` in `ℓ(λ)` letters.
pub fn plethysm_coefficient(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<Coeff> {
    let degree = mu.size() * nu.size();
    if lambda.size() != degree {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: lambda.size(),
        });
    }
    let counts = dominating_weights(lambda)
        .into_iter()
        .map(|beta| {
            let m = count_pssyt_weight(mu, nu, &beta.as_composition());
            (beta, m)
        })
        .collect();
    coefficient_from_weights(lambda, &counts)
}

/// `ω`: `s_λ ↦ s_{λ'}`.
pub fn sign_twist(v: &SchurVector) -> SchurVector {
    SchurVector {
        degree: v.degree,
        coeffs: v.coeffs.map_keys(Partition::conjugate).expect("conjugation is injective"),
    }
}

/// Hall inner product; the Schur functions are orthonormal.
pub fn inner_product(u: &SchurVector, v: &SchurVector) -> Result<Coeff> {
    if u.degree != v.degree {
        return Err(Error::DegreeMismatch {
            left: u.degree,
            right: v.degree,
        });
    }
    let mut total: Coeff = 0;
    for (lambda, c) in u.iter() {
        total = checked_add(total, checked_mul(c, v.coeff(lambda))?)?;
    }
    Ok(total)
}

/// `dim ∇^λ(E) = |SSYT(λ, ≤d)|` by the hook-content formula.
pub fn dim_nabla(lambda: &Partition, d: usize) -> u128 {
    if lambda.len() > d {
        return 0;
    }
    let conj = lambda.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, j) in lambda.boxes() {
        num *= (d + j - i) as u128;
        den *= (lambda.part(i) - j + conj.part(j) - i - 1) as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::enumerate_ssyt;
    use alloc::vec;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn sv(terms: &[(&str, Coeff)]) -> SchurVector {
        let degree = p(terms[0].0).size();
        SchurVector::from_terms(degree, terms.iter().map(|(l, c)| (p(l), *c))).unwrap()
    }

    #[test]
    fn sym2_sym2() {
        let w = plethysm_weights(&p("2"), &p("2"), 2);
        assert_eq!(w.get(&p("2,2")), 2);
        assert_eq!(plethysm(&p("2"), &p("2")).unwrap(), sv(&[("4", 1), ("2,2", 1)]));
        let w4 = plethysm_weights(&p("2"), &p("2"), 4);
        assert_eq!(schur_expand(&w4).unwrap(), sv(&[("4", 1), ("2,2", 1)]));
    }

    #[test]
    fn sym3_sym3() {
        let w = plethysm_weights(&p("3"), &p("3"), 9);
        assert_eq!(w.get(&p("9")), 1);
        let expected = sv(&[("9", 1), ("7,2", 1), ("6,3", 1), ("5,2,2", 1), ("4,4,1", 1)]);
        let got = schur_expand(&w).unwrap();
        assert_eq!(got, expected);
        assert_eq!(inner_product(&got, &SchurVector::schur(p("6,3"))).unwrap(), 1);
        assert_eq!(got.dimension(3).unwrap(), 220);
    }

    #[test]
    fn targeted_coefficients() {
        assert_eq!(plethysm_coefficient(&p("2"), &p("2,1,1"), &p("3,2,2,1")).unwrap(), 1);
        assert_eq!(plethysm_coefficient(&p("2"), &p("3,2,1"), &p("5,4,2,1")).unwrap(), 2);
        assert_eq!(plethysm_coefficient(&p("1^4"), &p("2,1"), &p("5,5,1,1")).unwrap(), 2);
        assert!(plethysm_coefficient(&p("2"), &p("2"), &p("3")).is_err());
    }

    #[test]
    fn targeted_matches_full_expansion() {
        for (nu, mu) in [("2", "2,1"), ("1,1", "3"), ("3", "2"), ("2,1", "2"), ("1^3", "1,1")] {
            let (nu, mu) = (p(nu), p(mu));
            let full = plethysm(&nu, &mu).unwrap();
            for lambda in partitions(nu.size() * mu.size(), None, None) {
                assert_eq!(plethysm_coefficient(&nu, &mu, &lambda).unwrap(), full.coeff(&lambda), "{nu} {mu} {lambda}");
            }
        }
    }

    #[test]
    fn round_trip_of_a_single_schur_function() {
        for lambda in partitions(5, None, None) {
            let v = SchurVector::schur(lambda.clone());
            let w = WeightMultiplicityMap::of_schur_vector(&v, 5).unwrap();
            assert_eq!(schur_expand(&w).unwrap(), v);
        }
    }

    #[test]
    fn non_character_is_rejected() {
        let mut w = WeightMultiplicityMap::new(2, 2);
        w.insert(p("2"), 1).unwrap();
        assert!(matches!(schur_expand(&w), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn sign_twist_examples() {
        assert_eq!(sign_twist(&SchurVector::schur(p("2"))), SchurVector::schur(p("1,1")));
        let lhs = sign_twist(&plethysm(&p("3"), &p("3")).unwrap());
        assert_eq!(lhs, plethysm(&p("1^3"), &p("1^3")).unwrap());
        let v = plethysm(&p("2"), &p("3")).unwrap();
        assert_eq!(sign_twist(&sign_twist(&v)), v);
    }

    #[test]
    fn sign_twist_rule() {
        for n in 1..=4 {
            for m in 1..=8 / n {
                for nu in partitions(n, None, None) {
                    for mu in partitions(m, None, None) {
                        let lhs = sign_twist(&plethysm(&nu, &mu).unwrap());
                        let outer = if m % 2 == 0 { nu.clone() } else { nu.conjugate() };
                        let rhs = plethysm(&outer, &mu.conjugate()).unwrap();
                        assert_eq!(lhs, rhs, "{nu} {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn units_of_plethysm() {
        for mu in partitions(4, None, None) {
            assert_eq!(plethysm(&p("1"), &mu).unwrap(), SchurVector::schur(mu.clone()));
            assert_eq!(plethysm(&mu, &p("1")).unwrap(), SchurVector::schur(mu.clone()));
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_nabla(&p("1,1,1"), 2), 0);
        assert_eq!(dim_nabla(&p("3"), 3), 10);
        assert_eq!(dim_nabla(&p("2,2"), 2), 1);
        for n in 0..=6 {
            for lambda in partitions(n, None, None) {
                for d in 1..=4 {
                    assert_eq!(dim_nabla(&lambda, d), enumerate_ssyt(&lambda, d).len() as u128);
                }
            }
        }
    }

    #[test]
    fn extremal_constituents() {
        let v = plethysm(&p("1^4"), &p("2,1")).unwrap();
        let max = v.maximal_constituents();
        assert!(max.contains(&(p("6,4,2"), 2)));
        assert_eq!(v.coeff(&p("5,5,1,1")), 2);
        assert_eq!(v.dimension(4).unwrap(), 4845);
        assert!(!max.iter().any(|(l, _)| l == &p("5,5,1,1")));
        let v = sv(&[("4", 1), ("2,2", 1)]);
        assert_eq!(v.minimal_constituents(), vec![(p("2,2"), 1)]);
        assert!(inner_product(&v, &SchurVector::schur(p("3"))).is_err());
    }
}
