//! Text and JSON rendering of classes.
//!
//! Terms are listed by ascending q-degree, then lexicographically
//! descending partition. `q^1` prints as `q` and the identity class prints
//! as its coefficient alone, so `s[2,2] + q` and `q^2` are typical outputs.

use serde::Serialize;

use qschubert::combination::QuantumBasis;
use qschubert::{Partition, QuantumClass, Shape};

pub fn sorted_terms(class: &QuantumClass) -> Vec<(&QuantumBasis, i64)> {
    let mut terms: Vec<_> = class.iter().map(|(b, &c)| (b, c)).collect();
    terms.sort_by(|(a, _), (b, _)| a.degree.cmp(&b.degree).then_with(|| b.partition.cmp(&a.partition)));
    terms
}

pub fn partition_literal(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(|a| a.to_string()).collect();
    format!("s[{}]", parts.join(","))
}

pub fn render_class(class: &QuantumClass) -> String {
    let terms = sorted_terms(class);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (basis, coeff)) in terms.into_iter().enumerate() {
        if i == 0 {
            if coeff < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if coeff < 0 { " - " } else { " + " });
        }
        let abs = coeff.unsigned_abs();
        let mut factors = Vec::new();
        if abs != 1 {
            factors.push(abs.to_string());
        }
        match basis.degree {
            0 => {}
            1 => factors.push("q".to_string()),
            d => factors.push(format!("q^{d}")),
        }
        if !basis.partition.is_zero() {
            factors.push(partition_literal(&basis.partition));
        }
        if factors.is_empty() {
            factors.push("1".to_string());
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeJson {
    pub n: u32,
    pub k: u32,
}

impl From<&Shape> for ShapeJson {
    fn from(s: &Shape) -> Self {
        ShapeJson { n: s.n(), k: s.k() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub q: u32,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub shape: ShapeJson,
    pub terms: Vec<TermJson>,
}

pub fn terms_json(class: &QuantumClass) -> Vec<TermJson> {
    sorted_terms(class)
        .into_iter()
        .map(|(b, c)| TermJson { partition: b.partition.parts().to_vec(), q: b.degree, coeff: c })
        .collect()
}

pub fn class_json(shape: &Shape, class: &QuantumClass) -> ClassJson {
    ClassJson { shape: shape.into(), terms: terms_json(class) }
}
