//! Polynomial presentations of `H*(G)` and `QH*(G)`.
//!
//! `Y_i` is the coefficient of `t^i` in `1 / (1 + X_1 t + ... + X_k t^k)`.
//! Under `X_a ↦ σ_a` the classical ring kills `Y_{r+1}, ..., Y_n`; the
//! quantum ring kills `Y_{r+1}, ..., Y_{n-1}` and sends `Y_n` to `±q`.

use std::collections::BTreeMap;
use std::fmt;

use crate::combination::{CohomClass, QuantumClass};
use crate::error::{Error, Result};
use crate::quantum::apply_specials;
use crate::shape::Shape;

/// Polynomial in `X_1..X_k` and `q` with integer coefficients. Exponent
/// vectors have `k + 1` entries, the last one being the power of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl XPolynomial {
    pub fn zero(vars: usize) -> Self {
        XPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: i64) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars + 1], c).expect("single term");
        p
    }

    /// The generator `X_j`, `1 <= j <= vars`.
    pub fn x(vars: usize, j: usize) -> Self {
        assert!((1..=vars).contains(&j), "X_{j} out of range");
        let mut e = vec![0; vars + 1];
        e[j - 1] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, 1).expect("single term");
        p
    }

    pub fn q(vars: usize) -> Self {
        let mut e = vec![0; vars + 1];
        e[vars] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, 1).expect("single term");
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: i64) -> Result<()> {
        debug_assert_eq!(exps.len(), self.vars + 1);
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scaled(-1)?)
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        let mut out = Self::zero(self.vars);
        for (e, &c) in &self.terms {
            out.add_term(e.clone(), c.checked_mul(factor).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero(self.vars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.checked_mul(c2).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    /// Degree with `X_j` of weight `j` and `q` of weight `q_weight`, if all
    /// terms share it.
    pub fn weighted_degree(&self, q_weight: u32) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| {
            e[..self.vars].iter().enumerate().map(|(j, &x)| (j as u32 + 1) * x).sum::<u32>() + q_weight * e[self.vars]
        });
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, &c)) in self.terms.iter().rev().enumerate() {
            let mut factors = Vec::new();
            for (j, &x) in e.iter().enumerate() {
                let name = if j == self.vars { "q".to_string() } else { format!("X{}", j + 1) };
                match x {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.unsigned_abs();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `[Y_0, ..., Y_count]` via `Y_i = -Σ_{j=1}^{min(i,k)} X_j Y_{i-j}`.
pub fn inverse_series(shape: &Shape, count: usize) -> Result<Vec<XPolynomial>> {
    let vars = shape.k() as usize;
    let mut ys = vec![XPolynomial::constant(vars, 1)];
    for i in 1..=count {
        let mut y = XPolynomial::zero(vars);
        for j in 1..=i.min(vars) {
            y = y.checked_sub(&XPolynomial::x(vars, j).checked_mul(&ys[i - j])?)?;
        }
        ys.push(y);
    }
    Ok(ys)
}

fn monomial_indices(exps: &[u32]) -> Vec<u32> {
    exps.iter()
        .enumerate()
        .flat_map(|(j, &x)| std::iter::repeat_n(j as u32 + 1, x as usize))
        .collect()
}

/// Substitutes `X_a ↦ σ_a` and expands in `H*(G)`.
pub fn evaluate_classical(shape: &Shape, poly: &XPolynomial) -> Result<CohomClass> {
    evaluate(shape, poly, false).map(|q| q.degree_part(0))
}

/// Substitutes `X_a ↦ σ_a`, `q ↦ q` and expands in `QH*(G)`.
pub fn evaluate_quantum(shape: &Shape, poly: &XPolynomial) -> Result<QuantumClass> {
    evaluate(shape, poly, true)
}

fn evaluate(shape: &Shape, poly: &XPolynomial, quantum: bool) -> Result<QuantumClass> {
    let vars = shape.k() as usize;
    assert_eq!(poly.vars(), vars, "polynomial variable count must equal k");
    let one = QuantumClass::schubert(shape.zero_partition(), 0);
    let mut out = QuantumClass::zero();
    for (exps, c) in poly.terms() {
        if !quantum && exps[vars] > 0 {
            return Err(Error::QInClassical);
        }
        let value = if quantum {
            apply_specials(shape, &monomial_indices(&exps[..vars]), &one)?
        } else {
            classical_monomial(shape, &monomial_indices(&exps[..vars]))?
        };
        out.add_scaled(&value.shifted(exps[vars]), c)?;
    }
    Ok(out)
}

fn classical_monomial(shape: &Shape, indices: &[u32]) -> Result<QuantumClass> {
    use crate::classical::multiply_classical;
    let mut acc = CohomClass::basis(shape.zero_partition());
    for &a in indices {
        acc = multiply_classical(shape, &acc, &CohomClass::basis(shape.special(a)?))?;
    }
    Ok(QuantumClass::from_classical(&acc, 0))
}

/// Sign `ε` in the quantum relation `Y_n = ε q` satisfied by the ring built
/// from quantum Pieri: `ε = (-1)^{n-k-1}`.
pub fn quantum_relation_sign(shape: &Shape) -> i64 {
    if (shape.r() - 1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn term_count(n: usize) -> String {
    match n {
        0 => "value 0".to_string(),
        1 => "1 term".to_string(),
        n => format!("{n} terms"),
    }
}

/// Evaluates every defining relation in both rings and reports each one.
pub fn verify_presentations(shape: &Shape) -> Result<PresentationReport> {
    let n = shape.n() as usize;
    let r = shape.r() as usize;
    let ys = inverse_series(shape, n)?;
    let mut checks = Vec::new();
    for (i, y) in ys.iter().enumerate().skip(r + 1) {
        let value = evaluate_classical(shape, y)?;
        checks.push(RelationCheck {
            name: format!("classical Y_{i} = 0"),
            passed: value.is_zero(),
            detail: term_count(value.len()),
        });
    }
    for (i, y) in ys.iter().enumerate().skip(r + 1) {
        let value = evaluate_quantum(shape, y)?;
        let (name, expected) = if i < n {
            (format!("quantum Y_{i} = 0"), QuantumClass::zero())
        } else {
            let eps = quantum_relation_sign(shape);
            let sign = if eps > 0 { "" } else { "-" };
            (
                format!("quantum Y_{i} = {sign}q"),
                QuantumClass::schubert(shape.zero_partition(), 1).scaled(eps)?,
            )
        };
        checks.push(RelationCheck {
            name,
            passed: value == expected,
            detail: term_count(value.len()),
        });
    }
    Ok(PresentationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::Partition;

    fn g24() -> Shape {
        Shape::new(4, 2).unwrap()
    }

    #[test]
    fn inverse_series_examples() {
        let s = Shape::new(7, 3).unwrap();
        let ys = inverse_series(&s, 3).unwrap();
        let x = |j| XPolynomial::x(3, j);
        assert_eq!(ys[1], x(1).scaled(-1).unwrap());
        assert_eq!(ys[2], x(1).checked_mul(&x(1)).unwrap().checked_sub(&x(2)).unwrap());
        let y3 = x(1)
            .checked_mul(&x(1))
            .unwrap()
            .checked_mul(&x(1))
            .unwrap()
            .scaled(-1)
            .unwrap()
            .checked_add(&x(1).checked_mul(&x(2)).unwrap().scaled(2).unwrap())
            .unwrap()
            .checked_sub(&x(3))
            .unwrap();
        assert_eq!(ys[3], y3);
        assert_eq!(ys[3].to_string(), "-X1^3 + 2*X1*X2 - X3");
    }

    #[test]
    fn series_inverts_and_is_homogeneous() {
        for k in 1..=4i64 {
            let s = Shape::new(k + 3, k).unwrap();
            let vars = k as usize;
            let ys = inverse_series(&s, 9).unwrap();
            // coefficient of t^m in (1 + Σ X_j t^j)(Σ Y_i t^i)
            for m in 0..=9 {
                let mut coeff = ys[m].clone();
                for j in 1..=m.min(vars) {
                    coeff = coeff.checked_add(&XPolynomial::x(vars, j).checked_mul(&ys[m - j]).unwrap()).unwrap();
                }
                let expected = if m == 0 { XPolynomial::constant(vars, 1) } else { XPolynomial::zero(vars) };
                assert_eq!(coeff, expected);
                assert_eq!(ys[m].weighted_degree(s.n()), Some(m as u32));
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        let s = g24();
        let ys = inverse_series(&s, 4).unwrap();
        let p = |parts: &[i64]| Partition::new(&s, parts).unwrap();
        assert_eq!(evaluate_classical(&s, &XPolynomial::x(2, 1)).unwrap(), CohomClass::basis(p(&[1, 0])));
        assert_eq!(evaluate_classical(&s, &ys[2]).unwrap(), CohomClass::basis(p(&[1, 1])));
        assert!(evaluate_classical(&s, &ys[3]).unwrap().is_zero());
        assert!(evaluate_quantum(&s, &ys[3]).unwrap().is_zero());
        assert_eq!(
            evaluate_quantum(&s, &ys[4]).unwrap(),
            QuantumClass::schubert(p(&[0, 0]), 1).scaled(-1).unwrap()
        );
        let x1q = XPolynomial::x(2, 1).checked_mul(&XPolynomial::q(2)).unwrap();
        assert_eq!(evaluate_quantum(&s, &x1q).unwrap(), QuantumClass::schubert(p(&[1, 0]), 1));
        assert_eq!(evaluate_classical(&s, &x1q), Err(Error::QInClassical));
    }

    #[test]
    fn presentation_reports() {
        let report = verify_presentations(&g24()).unwrap();
        assert_eq!(report.checks.len(), 4);
        assert!(report.all_passed(), "{report:?}");

        let p1 = Shape::new(2, 1).unwrap();
        let report = verify_presentations(&p1).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.checks.iter().filter(|c| c.name.starts_with("quantum")).count(), 1);

        let report = verify_presentations(&Shape::new(6, 3).unwrap()).unwrap();
        assert_eq!(report.checks.len(), 6);
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn relation_sign_for_odd_n() {
        // in G(2,3) the hyperplane class satisfies σ_1^3 = q, so Y_3 = -X_1^3 ↦ -q
        let s = Shape::new(3, 1).unwrap();
        assert_eq!(quantum_relation_sign(&s), -1);
        assert!(verify_presentations(&s).unwrap().all_passed());
    }
}
