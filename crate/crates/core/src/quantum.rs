//! The small quantum cohomology ring `QH*(G)`.
//!
//! Products are computed operationally: one factor is expanded as a
//! Giambelli determinant in special classes and the quantum Pieri rule is
//! folded over the other factor. No structure constants are tabulated.

use crate::classical::{check_special, for_each_bounded, leibniz, pieri_terms, SpecialExpansion};
use crate::combination::{QuantumBasis, QuantumClass};
use crate::error::{Error, Result};
use crate::shape::{ExtendedTuple, Partition, Shape};

/// Partitions `c` of the q-correction in `σ_a * σ_λ`:
/// `|c| = a + |λ| - n` and `λ_1 - 1 >= c_1 >= λ_2 - 1 >= ... >= λ_r - 1 >= c_r >= 0`.
fn quantum_correction_terms(shape: &Shape, a: u32, lambda: &Partition, mut emit: impl FnMut(Partition)) {
    let parts = lambda.parts();
    let total = a + lambda.weight();
    if total < shape.n() || parts.last().is_none_or(|&last| last == 0) {
        return;
    }
    let hi: Vec<u32> = parts.iter().map(|&x| x - 1).collect();
    let lo: Vec<u32> = (0..parts.len()).map(|i| parts.get(i + 1).map_or(0, |&x| x.saturating_sub(1))).collect();
    for_each_bounded(&lo, &hi, total - shape.n(), |c| emit(Partition::from_parts(c.to_vec())));
}

/// `σ_a * σ_λ` by the quantum Pieri rule.
pub fn pieri_quantum(shape: &Shape, a: i64, lambda: &Partition) -> Result<QuantumClass> {
    let a = check_special(shape, a)?;
    let mut out = QuantumClass::zero();
    pieri_into(shape, a, lambda, 0, 1, &mut out)?;
    Ok(out)
}

fn pieri_into(shape: &Shape, a: u32, lambda: &Partition, degree: u32, coeff: i64, out: &mut QuantumClass) -> Result<()> {
    let mut err = Ok(());
    pieri_terms(shape, a, lambda, |b| {
        if err.is_ok() {
            err = out.add_term(QuantumBasis { degree, partition: b }, coeff);
        }
    });
    quantum_correction_terms(shape, a, lambda, |c| {
        if err.is_ok() {
            err = out.add_term(QuantumBasis { degree: degree + 1, partition: c }, coeff);
        }
    });
    err
}

fn pieri_on_class(shape: &Shape, a: u32, class: &QuantumClass) -> Result<QuantumClass> {
    if a == 0 {
        return Ok(class.clone());
    }
    let mut out = QuantumClass::zero();
    for (basis, &c) in class {
        pieri_into(shape, a, &basis.partition, basis.degree, c, &mut out)?;
    }
    Ok(out)
}

/// `Π σ_{indices} * class`, one quantum Pieri step per factor.
pub(crate) fn apply_specials(shape: &Shape, indices: &[u32], class: &QuantumClass) -> Result<QuantumClass> {
    let mut acc = class.clone();
    for &a in indices {
        acc = pieri_on_class(shape, a, &acc)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

fn apply_expansion(shape: &Shape, expansion: &SpecialExpansion, class: &QuantumClass) -> Result<QuantumClass> {
    let mut out = QuantumClass::zero();
    for mono in &expansion.monomials {
        out.add_scaled(&apply_specials(shape, &mono.indices, class)?, mono.sign as i64)?;
    }
    Ok(out)
}

fn multiply_basis(shape: &Shape, lambda: &Partition, mu: &Partition) -> Result<QuantumClass> {
    let (small, large) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    apply_expansion(shape, &leibniz(small.parts(), shape.k()), &QuantumClass::schubert(large.clone(), 0))
}

/// Quantum product; q-degrees of the factors add.
pub fn quantum_multiply(shape: &Shape, lhs: &QuantumClass, rhs: &QuantumClass) -> Result<QuantumClass> {
    let mut out = QuantumClass::zero();
    for (x, &a) in lhs {
        for (y, &b) in rhs {
            let coeff = a.checked_mul(b).ok_or(Error::Overflow)?;
            let prod = multiply_basis(shape, &x.partition, &y.partition)?;
            out.add_scaled(&prod.shifted(x.degree + y.degree), coeff)?;
        }
    }
    Ok(out)
}

fn evaluate_determinant(shape: &Shape, rows: &[u32]) -> Result<QuantumClass> {
    let one = QuantumClass::schubert(shape.zero_partition(), 0);
    apply_expansion(shape, &leibniz(rows, shape.k()), &one)
}

/// Evaluates the Giambelli determinant of `λ` with quantum products. The
/// result is expected to be exactly `σ_λ`; nothing here assumes it.
pub fn giambelli_quantum(shape: &Shape, lambda: &Partition) -> Result<QuantumClass> {
    evaluate_determinant(shape, lambda.parts())
}

/// Evaluates the `(r+1) x (r+1)` determinant of an extended tuple with
/// quantum products.
pub fn extended_giambelli_direct(shape: &Shape, b: &ExtendedTuple) -> Result<QuantumClass> {
    evaluate_determinant(shape, b.parts())
}

/// Closed form of the extended determinant: drop a zero last part; vanish
/// when the last part is positive and `b_1 < k`; otherwise
/// `q σ_{(b_2-1, ..., b_{r+1}-1)}`.
pub fn extended_giambelli_reduce(shape: &Shape, b: &ExtendedTuple) -> QuantumClass {
    let parts = b.parts();
    let r = shape.r() as usize;
    if parts[r] == 0 {
        return QuantumClass::schubert(Partition::from_parts(parts[..r].to_vec()), 0);
    }
    if parts[0] < shape.k() {
        return QuantumClass::zero();
    }
    let lowered = parts[1..].iter().map(|&x| x - 1).collect();
    QuantumClass::schubert(Partition::from_parts(lowered), 1)
}

/// The degree-`d` Gromov-Witten number `<λ_1, ..., λ_N>_d`, read off as the
/// coefficient of `q^d σ_{λ_1^c}` in `σ_{λ_2} * ... * σ_{λ_N}`. Zero unless
/// the codimensions add up to `n d + k(n-k)`.
pub fn gromov_witten(shape: &Shape, insertions: &[Partition], d: u32) -> Result<i64> {
    if insertions.len() < 2 {
        return Err(Error::TooFewInsertions(insertions.len()));
    }
    let codim: u64 = insertions.iter().map(|p| p.weight() as u64).sum();
    if codim != shape.moduli_dimension(d) {
        return Ok(0);
    }
    let mut acc = QuantumClass::schubert(insertions[1].clone(), 0);
    for lambda in &insertions[2..] {
        acc = quantum_multiply(shape, &acc, &QuantumClass::schubert(lambda.clone(), 0))?;
    }
    Ok(acc.coeff_of(&shape.complement(&insertions[0]), d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(shape: &Shape, parts: &[i64]) -> Partition {
        Partition::new(shape, parts).unwrap()
    }

    fn qc(shape: &Shape, terms: &[(&[i64], u32, i64)]) -> QuantumClass {
        terms
            .iter()
            .map(|(parts, d, c)| (QuantumBasis { degree: *d, partition: p(shape, parts) }, *c))
            .collect()
    }

    fn basis(shape: &Shape, parts: &[i64]) -> QuantumClass {
        QuantumClass::schubert(p(shape, parts), 0)
    }

    #[test]
    fn quantum_pieri_examples() {
        let s = Shape::new(4, 2).unwrap();
        assert_eq!(pieri_quantum(&s, 1, &p(&s, &[2, 2])).unwrap(), qc(&s, &[(&[1, 0], 1, 1)]));
        assert_eq!(pieri_quantum(&s, 2, &p(&s, &[2, 2])).unwrap(), qc(&s, &[(&[1, 1], 1, 1)]));
        assert_eq!(
            pieri_quantum(&s, 1, &p(&s, &[1, 0])).unwrap(),
            qc(&s, &[(&[2, 0], 0, 1), (&[1, 1], 0, 1)])
        );
        let p3 = Shape::new(4, 3).unwrap();
        assert_eq!(pieri_quantum(&p3, 1, &p(&p3, &[3])).unwrap(), qc(&p3, &[(&[0], 1, 1)]));
        assert!(pieri_quantum(&s, 3, &p(&s, &[0, 0])).is_err());
    }

    #[test]
    fn quantum_product_examples() {
        let s = Shape::new(4, 2).unwrap();
        assert_eq!(
            quantum_multiply(&s, &basis(&s, &[2, 2]), &basis(&s, &[2, 2])).unwrap(),
            qc(&s, &[(&[0, 0], 2, 1)])
        );
        assert_eq!(
            quantum_multiply(&s, &basis(&s, &[1, 0]), &basis(&s, &[2, 1])).unwrap(),
            qc(&s, &[(&[2, 2], 0, 1), (&[0, 0], 1, 1)])
        );
        let mixed = qc(&s, &[(&[2, 1], 0, 2), (&[1, 0], 3, -1)]);
        assert_eq!(quantum_multiply(&s, &basis(&s, &[0, 0]), &mixed).unwrap(), mixed);
    }

    #[test]
    fn quantum_giambelli_examples() {
        let s = Shape::new(4, 2).unwrap();
        for parts in [&[2, 2][..], &[1, 1], &[2, 0], &[1, 0], &[0, 0]] {
            assert_eq!(giambelli_quantum(&s, &p(&s, parts)).unwrap(), basis(&s, parts));
        }
    }

    #[test]
    fn gromov_witten_examples() {
        let s = Shape::new(4, 2).unwrap();
        let s1 = p(&s, &[1, 0]);
        let top = p(&s, &[2, 2]);
        assert_eq!(gromov_witten(&s, &vec![s1.clone(); 4], 0).unwrap(), 2);
        assert_eq!(gromov_witten(&s, &[top.clone(), top.clone()], 1).unwrap(), 0);
        assert_eq!(gromov_witten(&s, &vec![top.clone(); 3], 2).unwrap(), 1);
        assert_eq!(gromov_witten(&s, &vec![s1.clone(); 8], 1).unwrap(), 8);
        assert_eq!(gromov_witten(&s, &[s1.clone(), s1.clone()], 1).unwrap(), 0);
        assert_eq!(gromov_witten(&s, std::slice::from_ref(&s1), 0), Err(Error::TooFewInsertions(1)));
        assert_eq!(gromov_witten(&s, &[], 0), Err(Error::TooFewInsertions(0)));
    }

    #[test]
    fn extended_determinant_examples() {
        let s = Shape::new(4, 2).unwrap();
        let t = |parts: &[i64]| ExtendedTuple::new(&s, parts).unwrap();
        let cases: [(&[i64], QuantumClass); 3] = [
            (&[2, 2, 1], qc(&s, &[(&[1, 0], 1, 1)])),
            (&[1, 1, 1], QuantumClass::zero()),
            (&[2, 1, 0], qc(&s, &[(&[2, 1], 0, 1)])),
        ];
        for (parts, expected) in cases {
            assert_eq!(extended_giambelli_reduce(&s, &t(parts)), expected);
            assert_eq!(extended_giambelli_direct(&s, &t(parts)).unwrap(), expected);
        }
    }

    #[test]
    fn q_zero_truncation_is_classical() {
        use crate::classical::multiply_classical;
        use crate::combination::CohomClass;
        for (n, k) in [(4, 2), (5, 2), (6, 3), (6, 2)] {
            let s = Shape::new(n, k).unwrap();
            let b = s.enumerate_box();
            for x in &b {
                for y in &b {
                    let q = quantum_multiply(&s, &basis_of(x), &basis_of(y)).unwrap();
                    let c = multiply_classical(&s, &CohomClass::basis(x.clone()), &CohomClass::basis(y.clone())).unwrap();
                    assert_eq!(q.degree_part(0), c);
                    for (t, _) in &q {
                        assert_eq!(t.partition.weight() + n as u32 * t.degree, x.weight() + y.weight());
                    }
                }
            }
        }
    }

    fn basis_of(x: &Partition) -> QuantumClass {
        QuantumClass::schubert(x.clone(), 0)
    }
}
