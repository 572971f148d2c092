//! Plethystic semistandard tableaux of shape `μ^ν`: semistandard
//! `ν`-tableaux whose entries are semistandard `μ`-tableaux, ordered by the
//! column total order. They index the canonical basis of `∇^ν(∇^μ E)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{partitions, Composition, Partition};
use crate::tableau::{column_order_cmp, enumerate_ssyt, ColumnOrdered, Letter, Tableau};

/// A semistandard `μ`-tableau used as an entry of a plethystic tableau.
pub type InnerTableau = ColumnOrdered<Letter>;

/// A plethystic tableau: a `ν`-tableau over inner `μ`-tableaux.
pub type Pssyt = Tableau<InnerTableau>;

/// Total content of all inner entries.
pub fn weight(t: &Pssyt) -> Composition {
    let mut counts: Vec<usize> = Vec::new();
    for inner in t.entries() {
        for &e in inner.0.entries() {
            let e = e as usize;
            if e > counts.len() {
                counts.resize(e, 0);
            }
            if e > 0 {
                counts[e - 1] += 1;
            }
        }
    }
    Composition::new(counts)
}

/// Inner shape of a non-empty plethystic tableau.
pub fn inner_shape(t: &Pssyt) -> Option<&Partition> {
    t.entries().first().map(|e| e.0.shape())
}

/// Orders plethystic tableaux of one outer shape by the column total order.
pub fn sort_pssyt(list: &mut [Pssyt]) {
    list.sort_by(column_order_cmp);
}

/// Backtracking over semistandard `ν`-fillings by indices into a sorted
/// alphabet, optionally with an exact target weight.
struct OuterSearch<'a> {
    nu: &'a Partition,
    alphabet: &'a [Tableau<Letter>],
    /// content of each alphabet letter, padded to the target length
    contents: Vec<Vec<usize>>,
    /// `caps[b]` = `μ_1 + … + μ_{b+1}`: at most this many letters `≤ b+1` per entry
    caps: Vec<usize>,
    remaining: Option<Vec<usize>>,
    mu_size: usize,
    idx: Vec<usize>,
}

impl<'a> OuterSearch<'a> {
    fn new(mu: &Partition, nu: &'a Partition, alphabet: &'a [Tableau<Letter>], target: Option<&Composition>) -> Self {
        let len = target.map_or(0, Composition::len);
        let contents = alphabet
            .iter()
            .map(|t| {
                let mut c = vec![0usize; len];
                for &e in t.entries() {
                    if (e as usize) <= len {
                        c[e as usize - 1] += 1;
                    }
                }
                c
            })
            .collect();
        let caps = (0..len)
            .map(|b| mu.parts().iter().take(b + 1).sum())
            .collect();
        OuterSearch {
            nu,
            alphabet,
            contents,
            caps,
            remaining: target.map(|c| c.padded(len)),
            mu_size: mu.size(),
            idx: vec![0; nu.size()],
        }
    }

    /// Calls `visit` on each filling; stops early when `visit` returns false.
    fn run(&mut self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        if let Some(rem) = &self.remaining {
            if rem.iter().sum::<usize>() != self.nu.size() * self.mu_size {
                return;
            }
        }
        self.step(0, visit);
    }

    fn feasible(&self, rem: &[usize], slots: usize) -> bool {
        let mut acc = 0;
        for (b, &r) in rem.iter().enumerate() {
            acc += r;
            if acc > slots * self.caps[b] {
                return false;
            }
        }
        true
    }

    fn step(&mut self, pos: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if pos == self.idx.len() {
            return visit(&self.idx);
        }
        let row_len = |i: usize| self.nu.part(i);
        // position -> (row, col) in row-major order
        let (mut i, mut j, mut k) = (0, 0, pos);
        while k >= row_len(i) {
            k -= row_len(i);
            i += 1;
        }
        j += k;
        let flat = |r: usize, c: usize| -> usize { (0..r).map(row_len).sum::<usize>() + c };
        let mut lo = 0;
        if j > 0 {
            lo = lo.max(self.idx[flat(i, j - 1)]);
        }
        if i > 0 {
            lo = lo.max(self.idx[flat(i - 1, j)] + 1);
        }
        let slots_after = self.idx.len() - pos - 1;
        for a in lo..self.alphabet.len() {
            if let Some(rem) = self.remaining.as_mut() {
                let c = &self.contents[a];
                if c.iter().zip(rem.iter()).any(|(x, r)| x > r) {
                    continue;
                }
                rem.iter_mut().zip(c).for_each(|(r, x)| *r -= x);
                let ok = {
                    let rem = self.remaining.as_ref().unwrap();
                    self.feasible(rem, slots_after)
                };
                if ok {
                    self.idx[pos] = a;
                    if !self.step(pos + 1, visit) {
                        let rem = self.remaining.as_mut().unwrap();
                        rem.iter_mut().zip(&self.contents[a]).for_each(|(r, x)| *r += x);
                        return false;
                    }
                }
                let rem = self.remaining.as_mut().unwrap();
                rem.iter_mut().zip(&self.contents[a]).for_each(|(r, x)| *r += x);
            } else {
                self.idx[pos] = a;
                if !self.step(pos + 1, visit) {
                    return false;
                }
            }
        }
        true
    }
}

fn build(nu: &Partition, alphabet: &[Tableau<Letter>], idx: &[usize]) -> Pssyt {
    let entries = idx.iter().map(|&a| ColumnOrdered(alphabet[a].clone())).collect();
    Tableau::new(nu.clone(), entries).expect("filling matches the outer shape")
}

/// Inner alphabet for a weight-restricted search: semistandard `μ`-tableaux
/// whose content fits inside `β`.
fn weight_alphabet(mu: &Partition, beta: &Composition) -> Vec<Tableau<Letter>> {
    let len = beta.len();
    enumerate_ssyt(mu, len)
        .into_iter()
        .filter(|t| {
            let c = t.content();
            c.parts().iter().enumerate().all(|(b, &x)| x <= beta.part(b))
        })
        .collect()
}

/// All plethystic semistandard tableaux of shape `μ^ν` with entries at most `d`.
pub fn enumerate_pssyt(mu: &Partition, nu: &Partition, d: usize) -> Vec<Pssyt> {
    let alphabet = enumerate_ssyt(mu, d);
    let mut out = Vec::new();
    OuterSearch::new(mu, nu, &alphabet, None).run(&mut |idx| {
        out.push(build(nu, &alphabet, idx));
        true
    });
    sort_pssyt(&mut out);
    out
}

/// Plethystic semistandard tableaux of shape `μ^ν` and weight `β`, increasing
/// in the column total order.
pub fn enumerate_pssyt_weight(mu: &Partition, nu: &Partition, beta: &Composition) -> Vec<Pssyt> {
    if beta.size() != mu.size() * nu.size() {
        return Vec::new();
    }
    let alphabet = weight_alphabet(mu, beta);
    let mut out = Vec::new();
    OuterSearch::new(mu, nu, &alphabet, Some(beta)).run(&mut |idx| {
        out.push(build(nu, &alphabet, idx));
        true
    });
    sort_pssyt(&mut out);
    out
}

/// `|{T of shape μ^ν : wt(T) = β}|` without materializing the tableaux.
pub fn count_pssyt_weight(mu: &Partition, nu: &Partition, beta: &Composition) -> u64 {
    if beta.size() != mu.size() * nu.size() {
        return 0;
    }
    let alphabet = weight_alphabet(mu, beta);
    let mut count = 0u64;
    OuterSearch::new(mu, nu, &alphabet, Some(beta)).run(&mut |_| {
        count += 1;
        true
    });
    count
}

/// Whether some plethystic semistandard tableau of shape `μ^ν` has weight `β`.
pub fn exists_pssyt_weight(mu: &Partition, nu: &Partition, beta: &Composition) -> bool {
    if beta.size() != mu.size() * nu.size() {
        return false;
    }
    let alphabet = weight_alphabet(mu, beta);
    let mut found = false;
    OuterSearch::new(mu, nu, &alphabet, Some(beta)).run(&mut |_| {
        found = true;
        false
    });
    found
}

/// The dominance-maximal weights of plethystic semistandard tableaux of shape
/// `μ^ν`, each with the number of tableaux attaining it.
///
/// Candidates are partitions of `|μ||ν|` visited in decreasing
/// lexicographic order, so every weight dominating a candidate is visited
/// before it; a candidate is tested only when no weight found so far
/// dominates it.
pub fn maximal_weights(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let n = mu.size() * nu.size();
    let mut found: Vec<Partition> = Vec::new();
    for kappa in partitions(n, None, None) {
        if found.iter().any(|f| f.dominates(&kappa).unwrap_or(false)) {
            continue;
        }
        if exists_pssyt_weight(mu, nu, &kappa.as_composition()) {
            found.push(kappa);
        }
    }
    found
        .into_iter()
        .map(|k| {
            let c = count_pssyt_weight(mu, nu, &k.as_composition());
            (k, c)
        })
        .collect()
}

/// Closure under single decrements: whenever changing one entry `c` of a
/// member to `c-1` gives a semistandard tableau, that tableau is a member.
pub fn is_closed(set: &[Tableau<Letter>]) -> Result<bool> {
    let Some(first) = set.first() else {
        return Ok(true);
    };
    if let Some(bad) = set.iter().find(|t| t.shape() != first.shape()) {
        return Err(Error::ShapeMismatch(format!("{} vs {}", first.shape(), bad.shape())));
    }
    let members: BTreeSet<&Tableau<Letter>> = set.iter().collect();
    for t in set {
        for (i, j) in t.box_list() {
            let c = *t.get(i, j);
            if c < 2 {
                continue;
            }
            let mut s = t.clone();
            s.set(i, j, c - 1);
            if s.is_semistandard() && !members.contains(&s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Textual form: outer rows separated by `" || "`, each entry bracketed.
pub fn format_pssyt(t: &Pssyt) -> String {
    let mut out = String::new();
    for (r, row) in t.rows().enumerate() {
        if r > 0 {
            out.push_str(" || ");
        }
        for e in row {
            out.push_str(&format!("{e}"));
        }
    }
    out
}

/// Parses the textual form written by [`format_pssyt`].
pub fn parse_pssyt(text: &str) -> Result<Pssyt> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Tableau::empty());
    }
    let mut rows = Vec::new();
    for row in text.split("||") {
        let mut entries = Vec::new();
        let mut rest = row.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("expected '[' in {row:?}")))?;
            let end = body
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in {row:?}")))?;
            let inner = Tableau::parse(&body[..end])?;
            entries.push(ColumnOrdered(inner));
            rest = body[end + 1..].trim_start();
        }
        if entries.is_empty() {
            return Err(Error::Parse(format!("empty outer row in {text:?}")));
        }
        rows.push(entries);
    }
    let t = Tableau::from_rows(rows)?;
    if let Some(shape) = inner_shape(&t) {
        if t.entries().iter().any(|e| e.0.shape() != shape) {
            return Err(Error::ShapeMismatch(format!("inner tableaux of {text:?} differ in shape")));
        }
    }
    Ok(t)
}
