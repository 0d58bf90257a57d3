//! Gromov-Witten numbers from the Vafa-Intriligator residue sum.
//!
//! Each Schubert class is evaluated as its Giambelli determinant in the
//! elementary symmetric functions of `k` distinct roots of
//! `z^n = (-1)^{k-1}`, and the products are summed over all `k`-subsets of
//! roots against the weight
//!
//! ```text
//! (-1)^{k(k-1)/2} n^{-k} Π_{j<l} (z_j - z_l)^2 / Π_j z_j^{n-1}.
//! ```
//!
//! Everything is double precision; the result must land within
//! [`RESIDUAL_TOLERANCE`] of an integer or the evaluation fails.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::shape::{Partition, Shape};

/// Maximum distance of the raw sum from the integer it is rounded to, and
/// maximum imaginary part.
pub const RESIDUAL_TOLERANCE: f64 = 1e-6;

/// The `n` distinct roots of `z^n = (-1)^{k-1}`, root `j` being
/// `exp(iπ((k-1 mod 2) + 2j)/n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VacuumSet {
    roots: Vec<Complex64>,
}

impl VacuumSet {
    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    /// The value `(-1)^{k-1}` every root is an `n`-th root of.
    pub fn target(shape: &Shape) -> f64 {
        if (shape.k() - 1).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

pub fn vacuum_set(shape: &Shape) -> VacuumSet {
    let n = shape.n() as f64;
    let offset = ((shape.k() - 1) % 2) as f64;
    let roots = (0..shape.n())
        .map(|j| Complex64::from_polar(1.0, std::f64::consts::PI * (offset + 2.0 * j as f64) / n))
        .collect();
    VacuumSet { roots }
}

/// Elementary symmetric polynomial `e_a(values)`; zero outside `[0, len]`.
pub fn elem_sym(values: &[Complex64], a: i64) -> Complex64 {
    if a < 0 || a as usize > values.len() {
        return Complex64::new(0.0, 0.0);
    }
    all_elem_sym(values)[a as usize]
}

fn all_elem_sym(values: &[Complex64]) -> Vec<Complex64> {
    // coefficients of Π (1 + x t)
    let mut e = vec![Complex64::new(0.0, 0.0); values.len() + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for (m, &x) in values.iter().enumerate() {
        for a in (1..=m + 1).rev() {
            e[a] = e[a] + e[a - 1] * x;
        }
    }
    e
}

/// Giambelli determinant of `λ` evaluated at the elementary symmetric
/// functions of `values`.
pub fn giambelli_at(values: &[Complex64], lambda: &Partition) -> Complex64 {
    let e = all_elem_sym(values);
    giambelli_from_elem(&e, lambda)
}

fn giambelli_from_elem(e: &[Complex64], lambda: &Partition) -> Complex64 {
    let parts = lambda.parts();
    let m = parts.len();
    let entry = |i: usize, j: usize| {
        let idx = parts[i] as i64 + j as i64 - i as i64;
        if idx < 0 || idx as usize >= e.len() {
            Complex64::new(0.0, 0.0)
        } else {
            e[idx as usize]
        }
    };
    let mut a: Vec<Vec<Complex64>> = (0..m).map(|i| (0..m).map(|j| entry(i, j)).collect()).collect();
    determinant(&mut a)
}

/// Determinant by Gaussian elimination with partial pivoting.
fn determinant(a: &mut [Vec<Complex64>]) -> Complex64 {
    let m = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..m {
        let pivot = (col..m).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm())).unwrap();
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        let (top, rest) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest.iter_mut() {
            let factor = row[col] / p;
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= factor * y;
            }
        }
    }
    det
}

/// Raw residue sum and its nearest integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidueSum {
    pub raw: Complex64,
    pub value: i64,
}

impl ResidueSum {
    /// `|raw - value|`, imaginary part included.
    pub fn residual(&self) -> f64 {
        (self.raw - Complex64::new(self.value as f64, 0.0)).norm()
    }
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Evaluates the residue sum without rounding checks. Subsets are visited in
/// lexicographic order so the floating-point result is reproducible.
pub fn vi_residue_sum(shape: &Shape, insertions: &[Partition], d: u32) -> ResidueSum {
    let codim: u64 = insertions.iter().map(|p| p.weight() as u64).sum();
    if codim != shape.moduli_dimension(d) {
        return ResidueSum { raw: Complex64::new(0.0, 0.0), value: 0 };
    }
    let (n, k) = (shape.n() as usize, shape.k() as usize);
    let roots = vacuum_set(shape).roots;
    let mut total = Complex64::new(0.0, 0.0);
    let mut z = Vec::with_capacity(k);
    for_each_subset(n, k, |subset| {
        z.clear();
        z.extend(subset.iter().map(|&i| roots[i]));
        let e = all_elem_sym(&z);
        let mut term: Complex64 = insertions.iter().map(|p| giambelli_from_elem(&e, p)).product();
        for j in 0..k {
            for l in j + 1..k {
                let diff = z[j] - z[l];
                term *= diff * diff;
            }
            term /= z[j].powu(n as u32 - 1);
        }
        total += term;
    });
    let sign = if (k * (k - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let raw = total * (sign / (n as f64).powi(k as i32));
    ResidueSum { raw, value: raw.re.round() as i64 }
}

/// Gromov-Witten number from the residue sum, failing if the raw value is
/// not within [`RESIDUAL_TOLERANCE`] of an integer.
pub fn vi_gromov_witten(shape: &Shape, insertions: &[Partition], d: u32) -> Result<i64> {
    if insertions.len() < 2 {
        return Err(Error::TooFewInsertions(insertions.len()));
    }
    let sum = vi_residue_sum(shape, insertions, d);
    if sum.residual() > RESIDUAL_TOLERANCE || !sum.raw.re.is_finite() {
        return Err(Error::Residual { re: sum.raw.re, im: sum.raw.im, tolerance: RESIDUAL_TOLERANCE });
    }
    Ok(sum.value)
}
