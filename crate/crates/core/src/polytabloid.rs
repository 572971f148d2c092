//! GL-tabloids, GL-polytabloids and straightening by snake relations.
//!
//! Everything here is generic over the alphabet `A: Ord + Clone`, so the same
//! code straightens `μ`-tableaux of integers and `ν`-tableaux whose entries are
//! semistandard `μ`-tableaux (under the column total order).
//!
//! Tabloid vectors live in `Sym^λ V` with basis `f(t)`, `t` row-semistandard;
//! straightened vectors live in `∇^λ V` with basis `F(s)`, `s` semistandard.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linear::{checked_mul, Coeff, LinComb};
use crate::tableau::{tableau_dominates, Tableau};

/// Element of `Sym^λ V` in the tabloid basis; keys are row-sorted tableaux.
pub type TabloidVector<A> = LinComb<Tableau<A>>;

/// Element of `∇^λ V` in the semistandard basis.
pub type StraightenedVector<A> = LinComb<Tableau<A>>;

/// All permutations of `0..k` with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, Coeff)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, 1, &mut out);
    out
}

fn permute(perm: &mut Vec<usize>, start: usize, sign: Coeff, out: &mut Vec<(Vec<usize>, Coeff)>) {
    if start == perm.len() {
        out.push((perm.clone(), sign));
        return;
    }
    for k in start..perm.len() {
        perm.swap(start, k);
        permute(perm, start + 1, if k == start { sign } else { -sign }, out);
        perm.swap(start, k);
    }
}

/// `F(t) = Σ_{σ ∈ CPP(λ)} sgn(σ) f(tσ)` in the tabloid basis.
///
/// The sum has `Π (column length)!` terms, so this is meant for checking and
/// for small shapes.
pub fn expand_polytabloid<A: Ord + Clone>(t: &Tableau<A>) -> Result<TabloidVector<A>> {
    let shape = t.shape().clone();
    let columns: Vec<Vec<(Vec<usize>, Coeff)>> = (0..shape.first_part())
        .map(|j| signed_permutations(shape.column_len(j)))
        .collect();
    let mut out = LinComb::new();
    let mut choice = alloc::vec![0usize; columns.len()];
    loop {
        let mut u = t.clone();
        let mut sign = 1;
        for (j, perms) in columns.iter().enumerate() {
            let (perm, s) = &perms[choice[j]];
            sign *= s;
            for (i, &src) in perm.iter().enumerate() {
                u.set(i, j, t.get(src, j).clone());
            }
        }
        out.add_term(u.row_semistandardize(), sign)?;
        // odometer over the column groups
        let mut j = 0;
        loop {
            if j == columns.len() {
                return Ok(out);
            }
            choice[j] += 1;
            if choice[j] < columns[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

/// Sorts each column ascending. The sign is that of the sorting permutation,
/// or 0 when some column repeats an entry (then `F(t) = 0`).
pub fn column_normalize<A: Ord + Clone>(t: &Tableau<A>) -> (Tableau<A>, i8) {
    let mut u = t.clone();
    let mut sign: i8 = 1;
    for j in 0..t.shape().first_part() {
        let len = t.shape().column_len(j);
        let mut col: Vec<A> = t.column(j).cloned().collect();
        // insertion sort, counting transpositions
        for a in 1..len {
            let mut b = a;
            while b > 0 && col[b - 1] > col[b] {
                col.swap(b - 1, b);
                sign = -sign;
                b -= 1;
            }
        }
        if col.windows(2).any(|w| w[0] == w[1]) {
            return (u, 0);
        }
        for (i, e) in col.into_iter().enumerate() {
            u.set(i, j, e);
        }
    }
    (u, sign)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Right-hand side of the snake relation `F(t) = -Σ_{c≥2} sgn(φ_c) F(tφ_c)`.
///
/// Boxes are 0-indexed: `A` is column `j` from row `i` down, `B` is column
/// `j2` from the top through row `i`. Coset representatives swap `k`-subsets
/// of `A` and `B` pairwise in vertical order, so `sgn(φ) = (-1)^k`. The
/// returned tableaux are `tφ` as is (not column-sorted); terms whose columns
/// repeat an entry are dropped.
pub fn snake_terms<A: Ord + Clone>(
    t: &Tableau<A>,
    i: usize,
    j: usize,
    j2: usize,
) -> Result<Vec<(Tableau<A>, Coeff)>> {
    let shape = t.shape();
    if !(j < j2 && j2 < shape.first_part() && i < shape.column_len(j2)) {
        return Err(Error::IndexOutOfRange(format!(
            "snake relation at row {i}, columns {j} and {j2} for shape {shape}"
        )));
    }
    let a_rows: Vec<usize> = (i..shape.column_len(j)).collect();
    let b_rows: Vec<usize> = (0..=i).collect();
    let mut out = Vec::new();
    for k in 1..=a_rows.len().min(b_rows.len()) {
        let coeff: Coeff = if k % 2 == 1 { 1 } else { -1 };
        for sa in subsets(a_rows.len(), k) {
            for sb in subsets(b_rows.len(), k) {
                let mut u = t.clone();
                for (&x, &y) in sa.iter().zip(&sb) {
                    u.swap_boxes((a_rows[x], j), (b_rows[y], j2));
                }
                if column_normalize(&u).1 != 0 {
                    out.push((u, coeff));
                }
            }
        }
    }
    Ok(out)
}

/// Straightening with a memo keyed by column-standard tableaux.
///
/// One instance per alphabet and per worker; the memo only grows.
#[derive(Debug, Clone)]
pub struct Straightener<A: Ord> {
    memo: BTreeMap<Tableau<A>, StraightenedVector<A>>,
}

impl<A: Ord + Clone> Default for Straightener<A> {
    fn default() -> Self {
        Straightener { memo: BTreeMap::new() }
    }
}

impl<A: Ord + Clone> Straightener<A> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `F(t)` in the semistandard basis.
    pub fn straighten(&mut self, t: &Tableau<A>) -> Result<StraightenedVector<A>> {
        let (s, sign) = column_normalize(t);
        match sign {
            0 => Ok(LinComb::new()),
            1 => self.straighten_column_standard(s),
            _ => self.straighten_column_standard(s)?.scaled(-1),
        }
    }

    fn straighten_column_standard(&mut self, s: Tableau<A>) -> Result<StraightenedVector<A>> {
        if let Some(hit) = self.memo.get(&s) {
            return Ok(hit.clone());
        }
        let Some((i, j)) = first_row_violation(&s) else {
            return Ok(LinComb::singleton(s, 1));
        };
        let mut out = LinComb::new();
        for (term, c) in snake_terms(&s, i, j, j + 1)? {
            let (u, sign) = column_normalize(&term);
            let part = self.straighten_column_standard(u)?;
            out.add_scaled(&part, checked_mul(c, Coeff::from(sign))?)?;
        }
        self.memo.insert(s, out.clone());
        Ok(out)
    }

    /// Straightens a linear combination of arbitrary tableaux.
    pub fn straighten_sum(&mut self, v: &LinComb<Tableau<A>>) -> Result<StraightenedVector<A>> {
        let mut out = LinComb::new();
        for (t, &c) in v {
            let s = self.straighten(t)?;
            out.add_scaled(&s, c)?;
        }
        Ok(out)
    }
}

/// Leftmost column `j`, then topmost row `i`, with `t(i,j) > t(i,j+1)`.
fn first_row_violation<A: Ord>(t: &Tableau<A>) -> Option<(usize, usize)> {
    let shape = t.shape();
    for j in 0..shape.first_part().saturating_sub(1) {
        for i in 0..shape.column_len(j + 1) {
            if t.get(i, j) > t.get(i, j + 1) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Expands a straightened vector back into the tabloid basis.
pub fn expand_straightened<A: Ord + Clone>(v: &StraightenedVector<A>) -> Result<TabloidVector<A>> {
    let mut out = LinComb::new();
    for (s, &c) in v {
        out.add_scaled(&expand_polytabloid(s)?, c)?;
    }
    Ok(out)
}

/// Checks the leading-term bounds for a column-standard `t`:
/// `F(t) = F(t̄) + (terms F(s) with t̄ ▷ s)` after straightening, and in the
/// tabloid expansion `f(t̄)` has coefficient 1 while every other tabloid is
/// strictly dominated by `t̄`.
pub fn leading_term_check<A: Ord + Clone>(
    straightener: &mut Straightener<A>,
    t: &Tableau<A>,
) -> Result<bool> {
    if !t.is_column_standard() {
        return Err(Error::Precondition(
            "leading-term check needs a column-standard tableau".into(),
        ));
    }
    let top = t.row_semistandardize();
    if !top.is_semistandard() {
        return Ok(false);
    }
    let strictly_below = |s: &Tableau<A>| -> Result<bool> { Ok(s != &top && tableau_dominates(&top, s)?) };

    let straight = straightener.straighten(t)?;
    if straight.coeff(&top) != 1 {
        return Ok(false);
    }
    for s in straight.keys() {
        if s != &top && !strictly_below(s)? {
            return Ok(false);
        }
    }
    let tabloids = expand_polytabloid(t)?;
    if tabloids.coeff(&top) != 1 {
        return Ok(false);
    }
    for u in tabloids.keys() {
        if u != &top && !strictly_below(u)? {
            return Ok(false);
        }
    }
    Ok(true)
}
