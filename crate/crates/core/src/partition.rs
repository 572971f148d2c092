//! Partitions, compositions and the dominance order.
//!
//! Partitions never store trailing zeros, and reading a part past the length
//! yields 0. The derived `Ord` on [`Partition`] is lexicographic on parts, so
//! sorting descending gives the reverse-lexicographic order that refines
//! dominance.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Fails if the parts increase.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-indexed), 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `λ ⊔ μ`: the multiset union of the parts.
    pub fn disjoint_union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// `λ + μ`, componentwise.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// `Nλ`, componentwise.
    pub fn scale(&self, factor: usize) -> Partition {
        if factor == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|p| p * factor).collect(),
        }
    }

    pub fn as_composition(&self) -> Composition {
        Composition::new(self.parts.clone())
    }

    /// Dominance `λ ⊵ μ`; usage error when the sizes differ.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        dominates_slices(&self.parts, &other.parts)
    }

    /// Box set `[λ]` as 0-indexed `(row, column)` pairs in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Length of column `j` (0-indexed).
    pub fn column_len(&self, j: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > j).count()
    }
}

impl fmt::Display for Partition {
    /// Canonical form: `[5,4,2,1]`, `[]` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Parses `5,4,2,1`, `[5,4,2,1]` and exponent shorthand such as `2^3,1` or `1^4`.
/// Whitespace is rejected; `[]`, `0` and the empty string denote `∅`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// Same grammar as [`Partition`] without the ordering requirement.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition::new(parse_parts(s)?))
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    if s.chars().any(char::is_whitespace) {
        return Err(Error::Parse(format!("whitespace in {s:?}")));
    }
    let body = match (s.strip_prefix('['), s.strip_suffix(']')) {
        (Some(_), Some(_)) if s.len() >= 2 => &s[1..s.len() - 1],
        (None, None) => s,
        _ => return Err(Error::Parse(format!("unbalanced brackets in {s:?}"))),
    };
    let mut parts = Vec::new();
    if !body.is_empty() {
        for token in body.split(',') {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, parse_usize(e)?),
                None => (token, 1),
            };
            let base = parse_usize(base)?;
            parts.extend(core::iter::repeat(base).take(exp));
        }
    }
    Ok(parts)
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::Parse(format!("{s:?} is not a non-negative integer")))
}

/// A finite sequence of non-negative integers, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        !self.parts.contains(&0) && self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partition with the same multiset of non-zero parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone())
    }

    /// `Some(λ)` when the composition is already a partition.
    pub fn to_partition(&self) -> Option<Partition> {
        self.is_partition().then(|| Partition {
            parts: self.parts.clone(),
        })
    }

    /// Padded to exactly `len` entries (never truncates).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// Dominance `β ⊵ γ` on prefix sums; usage error when the sizes differ.
    pub fn dominates(&self, other: &Composition) -> Result<bool> {
        dominates_slices(&self.parts, &other.parts)
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts.clone(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", joined.join(","))
    }
}

pub(crate) fn dominates_slices(a: &[usize], b: &[usize]) -> Result<bool> {
    let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
    if sa != sb {
        return Err(Error::DegreeMismatch {
            left: sa,
            right: sb,
        });
    }
    Ok(prefix_dominates(a, b))
}

/// Prefix-sum comparison without the degree check.
pub(crate) fn prefix_dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut pa, mut pb) = (0usize, 0usize);
    for i in 0..a.len().max(b.len()) {
        pa += a.get(i).copied().unwrap_or(0);
        pb += b.get(i).copied().unwrap_or(0);
        if pa < pb {
            return false;
        }
    }
    true
}

/// All partitions of `n` with optional bounds on length and largest part,
/// in decreasing lexicographic order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions(n: usize, max_length: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let max_len = max_length.unwrap_or(n);
    let max_part = max_part.unwrap_or(n).min(n);
    partitions_rec(n, max_part, max_len, &mut current, &mut out);
    out
}

fn partitions_rec(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        partitions_rec(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

/// Compositions of `n` with exactly `len` parts, each part positive when
/// `positive` is set, in lexicographic order.
pub fn compositions(n: usize, len: usize, positive: bool) -> Vec<Composition> {
    fn rec(rem: usize, slots: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Composition::new(cur.clone()));
            }
            return;
        }
        if rem < lo * slots {
            return;
        }
        for p in lo..=rem {
            cur.push(p);
            rec(rem - p, slots - 1, lo, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, len, usize::from(positive), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        // brute transpose of the box set
        let lam = p(&[4, 2, 1]);
        let transposed: BTreeSet<(usize, usize)> = lam.boxes().map(|(i, j)| (j, i)).collect();
        let conj = lam.conjugate();
        assert_eq!(conj.boxes().collect::<BTreeSet<_>>(), transposed);
        assert_eq!(conj, p(&[3, 2, 1, 1]));
    }

    #[test]
    fn union_add_scale() {
        assert_eq!(p(&[3]).disjoint_union(&p(&[1, 1, 1])), p(&[3, 1, 1, 1]));
        assert_eq!(Partition::empty().disjoint_union(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(p(&[2, 2]).disjoint_union(&p(&[3, 1])), p(&[3, 2, 2, 1]));
        assert_eq!(p(&[2, 1, 1]).add(&p(&[1, 1])), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 1]).add(&Partition::empty()), p(&[2, 1]));
        assert_eq!(p(&[1, 1]).scale(2), p(&[2, 2]));
    }

    #[test]
    fn dominance_examples() {
        let c = |v: &[usize]| Composition::new(v.to_vec());
        assert!(c(&[6, 4, 2]).dominates(&c(&[5, 5, 1, 1])).unwrap());
        assert!(c(&[3, 2]).dominates(&c(&[3, 2])).unwrap());
        assert!(!c(&[3, 3]).dominates(&c(&[4, 1, 1])).unwrap());
        assert!(!c(&[4, 1, 1]).dominates(&c(&[3, 3])).unwrap());
        assert!(matches!(
            c(&[2]).dominates(&c(&[1])),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(partitions(0, None, None), vec![Partition::empty()]);
        assert_eq!(partitions(4, None, None).len(), 5);
        assert_eq!(partitions(3, Some(2), None), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(partitions(5, None, Some(2)).len(), 3);
        let all = partitions(7, None, None);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn parsing_and_printing() {
        assert_eq!("5,4,2,1".parse::<Partition>().unwrap(), p(&[5, 4, 2, 1]));
        assert_eq!("[5,4,2,1]".parse::<Partition>().unwrap(), p(&[5, 4, 2, 1]));
        assert_eq!("2^3,1".parse::<Partition>().unwrap(), p(&[2, 2, 2, 1]));
        assert_eq!("1^4".parse::<Partition>().unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3, 1".parse::<Partition>().is_err());
        assert!("[3,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!("1,0,2".parse::<Composition>().unwrap(), Composition::new(vec![1, 0, 2]));
        assert!("1,x".parse::<Composition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn dominance_is_partial_order_and_reversed_by_conjugation() {
        for n in 0..=8 {
            let ps = partitions(n, None, None);
            for a in &ps {
                assert!(a.dominates(a).unwrap());
                for b in &ps {
                    let ab = a.dominates(b).unwrap();
                    let ba = b.dominates(a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    assert_eq!(ab, b.conjugate().dominates(&a.conjugate()).unwrap());
                    for c in &ps {
                        if ab && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_is_involution() {
        for n in 0..=12 {
            for lam in partitions(n, None, None) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn composition_counts() {
        // C(n-1, len-1) positive compositions
        assert_eq!(compositions(5, 3, true).len(), 6);
        assert_eq!(compositions(2, 3, false).len(), 6);
    }

    proptest::proptest! {
        #[test]
        fn disjoint_union_laws(
            a in proptest::collection::vec(1usize..6, 0..5),
            b in proptest::collection::vec(1usize..6, 0..5),
            c in proptest::collection::vec(1usize..6, 0..5),
        ) {
            let (a, b, c) = (Partition::from_unsorted(a), Partition::from_unsorted(b), Partition::from_unsorted(c));
            proptest::prop_assert_eq!(a.disjoint_union(&b).size(), a.size() + b.size());
            proptest::prop_assert_eq!(a.disjoint_union(&b), b.disjoint_union(&a));
            proptest::prop_assert_eq!(
                a.disjoint_union(&b).disjoint_union(&c),
                a.disjoint_union(&b.disjoint_union(&c))
            );
        }
    }
}
