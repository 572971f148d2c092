//! Parallel drivers over the core weight-enumeration pipeline.

use std::collections::BTreeMap;

use plethysm_core::partition::partitions;
use plethysm_core::plethystic::count_pssyt_weight;
use plethysm_core::symfunc::{coefficient_from_weights, dominating_weights, schur_expand};
use plethysm_core::{Coeff, Partition, SchurVector, WeightMultiplicityMap};
use rayon::prelude::*;

use crate::error::Result;

fn count_all(nu: &Partition, mu: &Partition, weights: Vec<Partition>) -> Vec<(Partition, u64)> {
    weights
        .into_par_iter()
        .map(|beta| {
            let m = count_pssyt_weight(mu, nu, &beta.as_composition());
            (beta, m)
        })
        .collect()
}

/// Partition-weight multiplicities of `∇^ν(∇^μ E)` with `dim E = d`, one
/// weight per rayon task.
pub fn plethysm_weights_par(nu: &Partition, mu: &Partition, d: usize) -> WeightMultiplicityMap {
    let degree = mu.size() * nu.size();
    let mut out = WeightMultiplicityMap::new(degree, d);
    for (beta, m) in count_all(nu, mu, partitions(degree, Some(d), None)) {
        out.insert(beta, m).expect("weight has the right degree and length");
    }
    out
}

/// Schur expansion of `s_ν ∘ s_μ` restricted to `ℓ(λ) ≤ d`; `d = None`
/// means all of it.
pub fn decompose(nu: &Partition, mu: &Partition, d: Option<usize>) -> Result<SchurVector> {
    let d = d.unwrap_or(mu.size() * nu.size());
    Ok(schur_expand(&plethysm_weights_par(nu, mu, d))?)
}

fn check_degree(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<()> {
    let degree = mu.size() * nu.size();
    if lambda.size() != degree {
        return Err(plethysm_core::Error::DegreeMismatch {
            left: degree,
            right: lambda.size(),
        }
        .into());
    }
    Ok(())
}

fn coefficient_at(nu: &Partition, mu: &Partition, lambda: &Partition, weights: Vec<Partition>) -> Result<Coeff> {
    let counts: BTreeMap<Partition, u64> = count_all(nu, mu, weights).into_iter().collect();
    Ok(coefficient_from_weights(lambda, &counts)?)
}

/// `⟨s_ν ∘ s_μ, s_λ⟩` from the weights dominating `λ`, with no change of
/// side.
pub fn coefficient_direct(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<Coeff> {
    check_degree(nu, mu, lambda)?;
    coefficient_at(nu, mu, lambda, dominating_weights(lambda))
}

/// `⟨s_ν ∘ s_μ, s_λ⟩`.
///
/// Applying `ω` gives `⟨s_ν ∘ s_μ, s_λ⟩ = ⟨s_ν̃ ∘ s_μ', s_λ'⟩` with `ν̃ = ν`
/// for `|μ|` even and `ν'` for `|μ|` odd. Whichever side has fewer
/// dominating weights is counted, so a `λ` with many short rows is handled
/// through its conjugate.
pub fn coefficient(nu: &Partition, mu: &Partition, lambda: &Partition) -> Result<Coeff> {
    check_degree(nu, mu, lambda)?;
    let direct = dominating_weights(lambda);
    let conj = lambda.conjugate();
    let twisted = dominating_weights(&conj);
    if twisted.len() < direct.len() {
        let nu_t = if mu.size() % 2 == 0 { nu.clone() } else { nu.conjugate() };
        coefficient_at(&nu_t, &mu.conjugate(), &conj, twisted)
    } else {
        coefficient_at(nu, mu, lambda, direct)
    }
}
