//! Fraction-free integer elimination.
//!
//! Rows are fed one at a time into an [`Echelon`], which keeps them in
//! reduced row echelon form scaled to primitive integer rows. Every pivot
//! column is cleared in every other row, so the kernel can be read off
//! directly.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linear::Coeff;

type Wide = i128;

fn gcd(mut a: Wide, mut b: Wide) -> Wide {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn mul(a: Wide, b: Wide) -> Result<Wide> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: Wide, b: Wide) -> Result<Wide> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Divides a row by the gcd of its entries and makes the leading entry positive.
fn make_primitive(row: &mut [Wide]) {
    let g = row.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
    if let Some(&lead) = row.iter().find(|&&x| x != 0) {
        if lead < 0 {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// `target ← a·target − b·source` where `a = source[col]`, `b = target[col]`.
fn eliminate(target: &mut [Wide], source: &[Wide], col: usize) -> Result<()> {
    let b = target[col];
    if b == 0 {
        return Ok(());
    }
    let a = source[col];
    let g = gcd(a, b);
    let (a, b) = (a / g, b / g);
    for (t, &s) in target.iter_mut().zip(source) {
        *t = sub(mul(a, *t)?, mul(b, s)?)?;
    }
    make_primitive(target);
    Ok(())
}

/// An integer matrix in reduced echelon form, built row by row.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    /// `(pivot column, row)`; the pivot entry is positive.
    rows: Vec<(usize, Vec<Wide>)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a sparse row given as `(column, value)` pairs; returns whether
    /// the rank went up.
    pub fn push_sparse(&mut self, entries: impl IntoIterator<Item = (usize, Coeff)>) -> Result<bool> {
        let mut row = vec![0 as Wide; self.ncols];
        for (c, v) in entries {
            if c >= self.ncols {
                return Err(Error::IndexOutOfRange(alloc::format!(
                    "column {c} in a matrix with {} columns",
                    self.ncols
                )));
            }
            row[c] += Wide::from(v);
        }
        self.push(row)
    }

    pub fn push(&mut self, mut row: Vec<Wide>) -> Result<bool> {
        if row.len() != self.ncols {
            return Err(Error::ShapeMismatch(alloc::format!(
                "row of length {} in a matrix with {} columns",
                row.len(),
                self.ncols
            )));
        }
        make_primitive(&mut row);
        for (p, r) in &self.rows {
            eliminate(&mut row, r, *p)?;
        }
        let Some(pivot) = row.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        for (_, r) in self.rows.iter_mut() {
            eliminate(r, &row, pivot)?;
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, row));
        Ok(true)
    }

    /// A basis of the rational kernel made of primitive integer vectors, one
    /// per free column in increasing order. Each vector has a positive entry
    /// at its free column and zeros at the other free columns.
    pub fn kernel(&self) -> Result<Vec<Vec<Coeff>>> {
        let mut is_pivot = vec![false; self.ncols];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            // x_f = L with L a common multiple of the pivots touching column f
            let mut l: Wide = 1;
            for (p, r) in &self.rows {
                if r[f] != 0 {
                    let piv = r[*p];
                    l = mul(l / gcd(l, piv), piv)?;
                }
            }
            let mut x = vec![0 as Wide; self.ncols];
            x[f] = l;
            for (p, r) in &self.rows {
                if r[f] != 0 {
                    x[*p] = -mul(r[f], l / r[*p])?;
                }
            }
            make_primitive(&mut x);
            if x[f] < 0 {
                x.iter_mut().for_each(|v| *v = -*v);
            }
            out.push(
                x.into_iter()
                    .map(|v| Coeff::try_from(v).map_err(|_| Error::Overflow))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(out)
    }
}

/// Rank of a list of integer vectors of a common length.
pub fn rank(ncols: usize, rows: &[Vec<Coeff>]) -> Result<usize> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.push(r.iter().map(|&v| Wide::from(v)).collect())?;
    }
    Ok(e.rank())
}
