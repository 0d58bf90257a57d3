//! The cohomology ring `H*(G)` over the integers, generated by the Pieri
//! rule and the Giambelli determinant.

use crate::combination::CohomClass;
use crate::error::{Error, Result};
use crate::shape::{Partition, Shape};

/// `sign * σ_{i_1} σ_{i_2} ... σ_{i_m}`; indices sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialMonomial {
    pub sign: i8,
    pub indices: Vec<u32>,
}

/// Signed sum of products of special classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecialExpansion {
    pub monomials: Vec<SpecialMonomial>,
}

impl SpecialExpansion {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// Leibniz expansion of the determinant `det(σ_{rows[i] + j - i})` of any
/// size, dropping every permutation that touches an entry outside `[0, k]`.
pub(crate) fn leibniz(rows: &[u32], k: u32) -> SpecialExpansion {
    let m = rows.len();
    let mut out = SpecialExpansion::default();
    let mut used = vec![false; m];
    let mut picked = Vec::with_capacity(m);
    leibniz_rec(rows, k, 0, &mut used, &mut picked, 0, &mut out);
    out
}

fn leibniz_rec(
    rows: &[u32],
    k: u32,
    i: usize,
    used: &mut [bool],
    picked: &mut Vec<u32>,
    inversions: usize,
    out: &mut SpecialExpansion,
) {
    if i == rows.len() {
        let mut indices = picked.clone();
        indices.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        out.monomials.push(SpecialMonomial { sign, indices });
        return;
    }
    for j in 0..rows.len() {
        if used[j] {
            continue;
        }
        let index = rows[i] as i64 + j as i64 - i as i64;
        if index < 0 || index > k as i64 {
            continue;
        }
        // earlier rows sitting in later columns each form one inversion
        let extra = used[j + 1..].iter().filter(|&&u| u).count();
        used[j] = true;
        picked.push(index as u32);
        leibniz_rec(rows, k, i + 1, used, picked, inversions + extra, out);
        picked.pop();
        used[j] = false;
    }
}

/// Giambelli expansion of `σ_λ` as an `r x r` determinant in special classes.
pub fn giambelli_leibniz(shape: &Shape, lambda: &Partition) -> SpecialExpansion {
    leibniz(lambda.parts(), shape.k())
}

pub(crate) fn check_special(shape: &Shape, a: i64) -> Result<u32> {
    if a < 0 || a > shape.k() as i64 {
        return Err(Error::SpecialIndex { index: a, k: shape.k() });
    }
    Ok(a as u32)
}

/// Calls `emit` for every tuple `b` with `|b| = total`, `hi_i >= b_i >= lo_i`
/// and `b` weakly decreasing. Bounds are per part; the sum is pruned with
/// suffix sums.
pub(crate) fn for_each_bounded(lo: &[u32], hi: &[u32], total: u32, mut emit: impl FnMut(&[u32])) {
    let m = lo.len();
    let mut lo_suffix = vec![0u32; m + 1];
    let mut hi_suffix = vec![0u32; m + 1];
    for i in (0..m).rev() {
        lo_suffix[i] = lo_suffix[i + 1] + lo[i];
        hi_suffix[i] = hi_suffix[i + 1] + hi[i];
    }
    if total < lo_suffix[0] || total > hi_suffix[0] {
        return;
    }
    let mut cur = vec![0u32; m];
    bounded_rec(lo, hi, &lo_suffix, &hi_suffix, 0, total, &mut cur, &mut emit);
}

#[allow(clippy::too_many_arguments)]
fn bounded_rec(
    lo: &[u32],
    hi: &[u32],
    lo_suffix: &[u32],
    hi_suffix: &[u32],
    i: usize,
    remaining: u32,
    cur: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if i == lo.len() {
        if remaining == 0 {
            emit(cur);
        }
        return;
    }
    let mut top = hi[i].min(remaining);
    if i > 0 {
        top = top.min(cur[i - 1]);
    }
    for b in lo[i]..=top {
        let rest = remaining - b;
        if rest < lo_suffix[i + 1] || rest > hi_suffix[i + 1] {
            continue;
        }
        cur[i] = b;
        bounded_rec(lo, hi, lo_suffix, hi_suffix, i + 1, rest, cur, emit);
    }
}

/// Partitions `b` with `k >= b_1 >= a_1 >= b_2 >= ... >= b_r >= a_r` and
/// `|b| = a + |λ|`.
pub(crate) fn pieri_terms(shape: &Shape, a: u32, lambda: &Partition, mut emit: impl FnMut(Partition)) {
    let parts = lambda.parts();
    let hi: Vec<u32> = (0..parts.len()).map(|i| if i == 0 { shape.k() } else { parts[i - 1] }).collect();
    for_each_bounded(parts, &hi, a + lambda.weight(), |b| emit(Partition::from_parts(b.to_vec())));
}

/// `σ_a · σ_λ` by the Pieri rule.
pub fn pieri_classical(shape: &Shape, a: i64, lambda: &Partition) -> Result<CohomClass> {
    let a = check_special(shape, a)?;
    let mut out = CohomClass::zero();
    pieri_terms(shape, a, lambda, |b| out.add_term(b, 1).expect("fresh term"));
    Ok(out)
}

fn pieri_on_class(shape: &Shape, a: u32, class: &CohomClass) -> Result<CohomClass> {
    if a == 0 {
        return Ok(class.clone());
    }
    let mut out = CohomClass::zero();
    for (lambda, &c) in class {
        let mut err = None;
        pieri_terms(shape, a, lambda, |b| {
            if let Err(e) = out.add_term(b, c) {
                err = Some(e);
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
    }
    Ok(out)
}

/// `expansion · class`, folding the Pieri rule factor by factor.
pub(crate) fn apply_expansion(shape: &Shape, expansion: &SpecialExpansion, class: &CohomClass) -> Result<CohomClass> {
    let mut out = CohomClass::zero();
    for mono in &expansion.monomials {
        let mut acc = class.clone();
        for &a in &mono.indices {
            acc = pieri_on_class(shape, a, &acc)?;
            if acc.is_zero() {
                break;
            }
        }
        out.add_scaled(&acc, mono.sign as i64)?;
    }
    Ok(out)
}

fn multiply_basis(shape: &Shape, lambda: &Partition, mu: &Partition) -> Result<CohomClass> {
    let (small, large) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    if small.weight() + large.weight() > shape.dim() {
        return Ok(CohomClass::zero());
    }
    apply_expansion(shape, &giambelli_leibniz(shape, small), &CohomClass::basis(large.clone()))
}

/// Product in `H*(G)`.
pub fn multiply_classical(shape: &Shape, lhs: &CohomClass, rhs: &CohomClass) -> Result<CohomClass> {
    let mut out = CohomClass::zero();
    for (lambda, &a) in lhs {
        for (mu, &b) in rhs {
            let coeff = a.checked_mul(b).ok_or(Error::Overflow)?;
            out.add_scaled(&multiply_basis(shape, lambda, mu)?, coeff)?;
        }
    }
    Ok(out)
}

/// Intersection pairing; Schubert classes pair to 1 exactly with their duals.
pub fn poincare_pairing(shape: &Shape, lhs: &CohomClass, rhs: &CohomClass) -> Result<i64> {
    let mut total: i64 = 0;
    for (lambda, &a) in lhs {
        let b = rhs.coeff(&shape.complement(lambda));
        let term = a.checked_mul(b).ok_or(Error::Overflow)?;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}
