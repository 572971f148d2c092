//! JSON schemas and aligned text output.
//!
//! Every JSON document here is written compactly with keys in declaration
//! order, so equal values always serialize to identical bytes.

use std::collections::BTreeMap;

use plethysm_core::plethystic::{format_pssyt, parse_pssyt, weight};
use plethysm_core::{Coeff, Composition, HwVector, LinComb, Partition, Pssyt, SchurVector};
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTermJson {
    pub lambda: Vec<usize>,
    pub coeff: Coeff,
}

/// `{"degree": n, "terms": [{"lambda": [..], "coeff": c}, ..]}`, terms in
/// reverse lexicographic order of `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurVectorJson {
    pub degree: usize,
    pub terms: Vec<SchurTermJson>,
}

impl From<&SchurVector> for SchurVectorJson {
    fn from(v: &SchurVector) -> Self {
        SchurVectorJson {
            degree: v.degree(),
            terms: v
                .terms_reverse_lex()
                .into_iter()
                .map(|(lambda, coeff)| SchurTermJson {
                    lambda: lambda.parts().to_vec(),
                    coeff,
                })
                .collect(),
        }
    }
}

impl SchurVectorJson {
    pub fn to_schur_vector(&self) -> Result<SchurVector> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((Partition::new(t.lambda.clone())?, t.coeff)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SchurVector::from_terms(self.degree, terms)?)
    }
}

pub fn schur_to_json(v: &SchurVector) -> String {
    serde_json::to_string(&SchurVectorJson::from(v)).expect("plain data serializes")
}

pub fn schur_from_json(text: &str) -> Result<SchurVector> {
    serde_json::from_str::<SchurVectorJson>(text)?.to_schur_vector()
}

/// One `coeff  λ` line per term, coefficients right-aligned.
pub fn schur_to_text(v: &SchurVector) -> String {
    let terms = v.terms_reverse_lex();
    if terms.is_empty() {
        return "0\n".into();
    }
    let width = terms.iter().map(|(_, c)| c.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for (lambda, c) in terms {
        out.push_str(&format!("{c:>width$}  {lambda}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwTermJson {
    pub tableau: String,
    pub coeff: Coeff,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwVectorJson {
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub d: usize,
    pub weight: Vec<usize>,
    pub terms: Vec<HwTermJson>,
}

impl From<&HwVector> for HwVectorJson {
    fn from(v: &HwVector) -> Self {
        HwVectorJson {
            mu: v.mu().parts().to_vec(),
            nu: v.nu().parts().to_vec(),
            d: v.letters(),
            weight: v.weight().padded(v.letters()),
            terms: v
                .coeffs()
                .iter()
                .map(|(t, &coeff)| HwTermJson {
                    tableau: format_pssyt(t),
                    coeff,
                })
                .collect(),
        }
    }
}

impl HwVectorJson {
    pub fn to_hw_vector(&self) -> Result<HwVector> {
        let mut coeffs: LinComb<Pssyt> = LinComb::new();
        for t in &self.terms {
            coeffs.add_term(parse_pssyt(&t.tableau)?, t.coeff)?;
        }
        Ok(HwVector::new(
            Partition::new(self.mu.clone())?,
            Partition::new(self.nu.clone())?,
            self.d,
            Composition::new(self.weight.clone()),
            coeffs,
        )?)
    }
}

pub fn hwv_to_text(v: &HwVector) -> String {
    let terms: Vec<(String, Coeff)> = v.coeffs().iter().map(|(t, &c)| (format_pssyt(t), c)).collect();
    let width = terms.iter().map(|(_, c)| c.to_string().len()).max().unwrap_or(1);
    let mut out = format!("weight {}\n", v.weight());
    for (t, c) in terms {
        out.push_str(&format!("  {c:>width$}  {t}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCountJson {
    pub lambda: Vec<usize>,
    pub count: u64,
}

/// Maximal weights, largest first in lexicographic order.
pub fn weight_counts(map: &BTreeMap<Partition, u64>) -> Vec<WeightCountJson> {
    map.iter()
        .rev()
        .map(|(l, &count)| WeightCountJson {
            lambda: l.parts().to_vec(),
            count,
        })
        .collect()
}

pub fn weight_counts_to_text(list: &[WeightCountJson]) -> String {
    let width = list.iter().map(|w| w.count.to_string().len()).max().unwrap_or(1);
    list.iter()
        .map(|w| format!("{:>width$}  {}\n", w.count, Partition::from_unsorted(w.lambda.clone())))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PssytJson {
    pub tableau: String,
    pub weight: Vec<usize>,
}

impl From<&Pssyt> for PssytJson {
    fn from(t: &Pssyt) -> Self {
        PssytJson {
            tableau: format_pssyt(t),
            weight: weight(t).parts().to_vec(),
        }
    }
}

pub fn pssyt_to_text(list: &[PssytJson]) -> String {
    let width = list.iter().map(|p| p.tableau.chars().count()).max().unwrap_or(0);
    list.iter()
        .map(|p| {
            let pad = width - p.tableau.chars().count();
            format!("{}{}  {}\n", p.tableau, " ".repeat(pad), Composition::new(p.weight.clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use plethysm_core::symfunc::plethysm;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn schur_json_shape() {
        let v = plethysm(&p("2"), &p("2")).unwrap();
        assert_eq!(
            schur_to_json(&v),
            r#"{"degree":4,"terms":[{"lambda":[4],"coeff":1},{"lambda":[2,2],"coeff":1}]}"#
        );
        assert_eq!(schur_from_json(&schur_to_json(&v)).unwrap(), v);
        assert_eq!(schur_to_text(&v), "1  [4]\n1  [2,2]\n");
    }

    #[test]
    fn schur_json_rejects_bad_partition() {
        assert!(schur_from_json(r#"{"degree":3,"terms":[{"lambda":[1,2],"coeff":1}]}"#).is_err());
        assert!(schur_from_json(r#"{"degree":3,"terms":[{"lambda":[2,2],"coeff":1}]}"#).is_err());
        assert!(schur_from_json("{").is_err());
    }

    #[test]
    fn zero_vector_text() {
        assert_eq!(schur_to_text(&SchurVector::zero(3)), "0\n");
    }

    #[test]
    fn hwv_round_trip() {
        let w = plethysm_core::hwv::foulkes_hwv(2, 2).unwrap();
        let j = HwVectorJson::from(&w);
        assert_eq!(j.weight, vec![2, 2]);
        let back = j.to_hw_vector().unwrap();
        assert_eq!(back.coeffs(), w.coeffs());
        assert!(hwv_to_text(&w).starts_with("weight "));
    }
}
