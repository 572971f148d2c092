//! Tableaux over a totally ordered alphabet.
//!
//! A [`Tableau<A>`] stores its entries row by row. The derived `Ord` is a plain
//! structural order used for map keys; the column total order used by the
//! straightening algorithm is [`column_order_cmp`] (and the [`ColumnOrdered`]
//! newtype that carries it as `Ord`).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{Composition, Partition};

/// Integer letters `1..=d`.
pub type Letter = u8;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau<A> {
    shape: Partition,
    entries: Vec<A>,
}

impl<A> Tableau<A> {
    pub fn new(shape: Partition, entries: Vec<A>) -> Result<Self> {
        if shape.size() != entries.len() {
            return Err(Error::ShapeMismatch(format!(
                "shape {shape} has {} boxes but {} entries were given",
                shape.size(),
                entries.len()
            )));
        }
        Ok(Tableau { shape, entries })
    }

    pub fn from_rows(rows: Vec<Vec<A>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let entries = rows.into_iter().flatten().collect();
        Ok(Tableau { shape, entries })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            entries: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[A] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<A> {
        self.entries
    }

    pub fn num_boxes(&self) -> usize {
        self.entries.len()
    }

    fn row_start(&self, i: usize) -> usize {
        self.shape.parts()[..i].iter().sum()
    }

    /// Row-major index of box `(i, j)` (0-indexed).
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(j < self.shape.part(i));
        self.row_start(i) + j
    }

    pub fn get(&self, i: usize, j: usize) -> &A {
        &self.entries[self.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: A) {
        let k = self.index(i, j);
        self.entries[k] = value;
    }

    pub fn row(&self, i: usize) -> &[A] {
        let start = self.row_start(i);
        &self.entries[start..start + self.shape.part(i)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[A]> + '_ {
        let mut start = 0;
        self.shape.parts().iter().map(move |&len| {
            let r = &self.entries[start..start + len];
            start += len;
            r
        })
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = &A> + '_ {
        (0..self.shape.column_len(j)).map(move |i| self.get(i, j))
    }

    /// Box `(i, j)` for each row-major index.
    pub fn box_list(&self) -> Vec<(usize, usize)> {
        self.shape.boxes().collect()
    }

    pub fn map<B>(&self, f: impl FnMut(&A) -> B) -> Tableau<B> {
        Tableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn swap_boxes(&mut self, a: (usize, usize), b: (usize, usize)) {
        let (ka, kb) = (self.index(a.0, a.1), self.index(b.0, b.1));
        self.entries.swap(ka, kb);
    }
}

impl<A: Clone> Tableau<A> {
    /// Place permutation: the entry in box `k` of `self` lands in box `sigma[k]`
    /// (boxes indexed row-major). `(tσ)_b = t_{bσ⁻¹}`.
    pub fn apply_place_permutation(&self, sigma: &[usize]) -> Result<Tableau<A>> {
        let n = self.entries.len();
        let mut seen = vec![false; n];
        if sigma.len() != n || sigma.iter().any(|&s| s >= n || core::mem::replace(&mut seen[s], true)) {
            return Err(Error::Precondition(format!(
                "not a permutation of the {n} boxes: {sigma:?}"
            )));
        }
        let mut entries = self.entries.clone();
        for (k, &s) in sigma.iter().enumerate() {
            entries[s] = self.entries[k].clone();
        }
        Ok(Tableau {
            shape: self.shape.clone(),
            entries,
        })
    }
}

impl<A: Ord> Tableau<A> {
    pub fn is_row_semistandard(&self) -> bool {
        self.rows().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        let parts = self.shape.parts();
        (1..parts.len()).all(|i| (0..parts[i]).all(|j| self.get(i - 1, j) < self.get(i, j)))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_row_semistandard() && self.is_column_standard()
    }

    /// `t̄`: every row sorted into weakly increasing order.
    pub fn row_semistandardize(&self) -> Tableau<A>
    where
        A: Clone,
    {
        let mut out = self.clone();
        let mut start = 0;
        for &len in self.shape.parts() {
            out.entries[start..start + len].sort();
            start += len;
        }
        out
    }

    /// Rank map of the union of both alphabets, used to compare tableaux over a
    /// general ordered alphabet through integer letters.
    fn joint_ranks<'a>(&'a self, other: &'a Tableau<A>) -> BTreeSet<&'a A> {
        self.entries.iter().chain(other.entries.iter()).collect()
    }
}

impl Tableau<Letter> {
    /// `result[b-1]` = number of entries equal to `b`.
    pub fn content(&self) -> Composition {
        let max = self.entries.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; max];
        for &e in &self.entries {
            if e > 0 {
                counts[e as usize - 1] += 1;
            }
        }
        Composition::new(counts)
    }

    /// `t^{≤b}`: per row, the number of entries at most `b`.
    pub fn prefix_counts(&self, b: Letter) -> Vec<usize> {
        self.rows().map(|r| r.iter().filter(|&&e| e <= b).count()).collect()
    }

    /// Parses `"1 1/2 3"` (rows split by `/`, entries by spaces or commas).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Tableau::empty());
        }
        let mut rows = Vec::new();
        for row in text.split('/') {
            let mut r = Vec::new();
            for tok in row.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let v: Letter = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad tableau entry {tok:?}")))?;
                r.push(v);
            }
            rows.push(r);
        }
        Tableau::from_rows(rows)
    }
}

impl<A: fmt::Display> fmt::Display for Tableau<A> {
    /// Rows joined by `/`, entries by single spaces: `1 1/2 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (k, e) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// The column total order: in the rightmost column where `t` and `u` differ,
/// the larger tableau holds the greatest entry not common to both columns.
///
/// For strictly increasing columns this is the lexicographic order on columns
/// read bottom to top, which is how it is computed. Tableaux of different
/// shapes are ordered by shape first.
pub fn column_order_cmp<A: Ord>(t: &Tableau<A>, u: &Tableau<A>) -> Ordering {
    if t.shape != u.shape {
        return t.shape.cmp(&u.shape);
    }
    for j in (0..t.shape.first_part()).rev() {
        let len = t.shape.column_len(j);
        for i in (0..len).rev() {
            match t.get(i, j).cmp(u.get(i, j)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    Ordering::Equal
}

/// `t < u` in the column total order; usage error on a shape mismatch.
pub fn less<A: Ord>(t: &Tableau<A>, u: &Tableau<A>) -> Result<bool> {
    if t.shape != u.shape {
        return Err(Error::ShapeMismatch(format!("{} vs {}", t.shape, u.shape)));
    }
    Ok(column_order_cmp(t, u) == Ordering::Less)
}

/// A tableau ordered by [`column_order_cmp`]; this is how semistandard
/// `μ`-tableaux become the alphabet of the outer `ν`-tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnOrdered<A>(pub Tableau<A>);

impl<A: Ord> Ord for ColumnOrdered<A> {
    fn cmp(&self, other: &Self) -> Ordering {
        column_order_cmp(&self.0, &other.0)
    }
}

impl<A: Ord> PartialOrd for ColumnOrdered<A> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<A: fmt::Display> fmt::Display for ColumnOrdered<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0)
    }
}

/// `t ⊵ u`: `t^{≤b} ⊵ u^{≤b}` for every alphabet value `b`. Entries from a
/// general ordered alphabet are compared through their joint rank.
pub fn tableau_dominates<A: Ord>(t: &Tableau<A>, u: &Tableau<A>) -> Result<bool> {
    if t.shape != u.shape {
        return Err(Error::ShapeMismatch(format!("{} vs {}", t.shape, u.shape)));
    }
    let alphabet: Vec<&A> = t.joint_ranks(u).into_iter().collect();
    for b in &alphabet {
        let tb: Vec<usize> = t.rows().map(|r| r.iter().filter(|e| e <= b).count()).collect();
        let ub: Vec<usize> = u.rows().map(|r| r.iter().filter(|e| e <= b).count()).collect();
        if !crate::partition::prefix_dominates(&tb, &ub) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `t^λ`: row `i` filled with `i`.
pub fn superstandard(shape: &Partition) -> Tableau<Letter> {
    let entries = shape.boxes().map(|(i, _)| (i + 1) as Letter).collect();
    Tableau {
        shape: shape.clone(),
        entries,
    }
}

/// All semistandard `shape`-tableaux with entries in `1..=d`, increasing in
/// the column total order.
pub fn enumerate_ssyt(shape: &Partition, d: usize) -> Vec<Tableau<Letter>> {
    let mut out = Vec::new();
    fill_ssyt(shape, d, None, &mut |t| out.push(t.clone()));
    out
}

/// Semistandard tableaux of the given content, increasing in the column order.
pub fn enumerate_ssyt_content(shape: &Partition, content: &Composition) -> Vec<Tableau<Letter>> {
    let mut out = Vec::new();
    if shape.size() == content.size() {
        fill_ssyt(shape, content.len(), Some(content.parts()), &mut |t| out.push(t.clone()));
    }
    out
}

/// Column-by-column backtracking, rightmost column first and each column
/// filled bottom to top with candidates in increasing order, which emits
/// tableaux in the column total order.
pub(crate) fn fill_ssyt(
    shape: &Partition,
    d: usize,
    content: Option<&[usize]>,
    visit: &mut dyn FnMut(&Tableau<Letter>),
) {
    if shape.len() > d && !shape.is_empty() {
        return;
    }
    let d = d.min(Letter::MAX as usize);
    let mut t = Tableau {
        shape: shape.clone(),
        entries: vec![0 as Letter; shape.size()],
    };
    // (row, col) in fill order
    let mut order = Vec::with_capacity(shape.size());
    for j in (0..shape.first_part()).rev() {
        for i in (0..shape.column_len(j)).rev() {
            order.push((i, j));
        }
    }
    let mut remaining: Vec<usize> = match content {
        Some(c) => {
            let mut v = c.to_vec();
            v.resize(d, 0);
            v
        }
        None => Vec::new(),
    };
    fill_step(&mut t, &order, 0, d, content.is_some(), &mut remaining, visit);
}

fn fill_step(
    t: &mut Tableau<Letter>,
    order: &[(usize, usize)],
    pos: usize,
    d: usize,
    restricted: bool,
    remaining: &mut Vec<usize>,
    visit: &mut dyn FnMut(&Tableau<Letter>),
) {
    if pos == order.len() {
        visit(t);
        return;
    }
    let (i, j) = order[pos];
    let col_len = t.shape.column_len(j);
    // strictly below: filled already (bottom-up within a column)
    let mut hi = d;
    if i + 1 < col_len {
        hi = hi.min(*t.get(i + 1, j) as usize - 1);
    }
    if j + 1 < t.shape.part(i) {
        hi = hi.min(*t.get(i, j + 1) as usize);
    }
    let lo = i + 1;
    for v in lo..=hi {
        if restricted {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
        }
        t.set(i, j, v as Letter);
        fill_step(t, order, pos + 1, d, restricted, remaining, visit);
        if restricted {
            remaining[v - 1] += 1;
        }
    }
}

/// Kostka number `K_{λβ} = |SSYT(λ, β)|`, computed by peeling off horizontal
/// strips for the largest letter.
pub fn kostka(lambda: &Partition, beta: &Composition) -> Result<u64> {
    if lambda.size() != beta.size() {
        return Err(Error::DegreeMismatch {
            left: lambda.size(),
            right: beta.size(),
        });
    }
    Ok(kostka_strips(lambda.parts(), beta.parts()))
}

pub(crate) fn kostka_strips(lambda: &[usize], beta: &[usize]) -> u64 {
    let Some((&last, rest)) = beta.split_last() else {
        return u64::from(lambda.iter().all(|&p| p == 0));
    };
    if lambda.len() > beta.len() {
        return 0;
    }
    let mut total = 0;
    let mut inner = vec![0usize; lambda.len()];
    strip_rec(lambda, 0, last, &mut inner, &mut |mu| total += kostka_strips(mu, rest));
    total
}

/// Visits every `μ ⊆ λ` with `λ/μ` a horizontal strip of `size` boxes.
fn strip_rec(lambda: &[usize], i: usize, size: usize, inner: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if i == lambda.len() {
        if size == 0 {
            let len = inner.iter().take_while(|&&p| p > 0).count();
            visit(&inner[..len]);
        }
        return;
    }
    let floor = lambda.get(i + 1).copied().unwrap_or(0);
    for removed in 0..=size.min(lambda[i] - floor) {
        inner[i] = lambda[i] - removed;
        strip_rec(lambda, i + 1, size - removed, inner, visit);
    }
}
