//! Grassmannian shapes and the partitions indexing their Schubert classes.
//!
//! A [`Shape`] `(n, k)` stands for `G(n-k, n)`: `r = n - k` parts, each at
//! most `k`. Partitions are always stored zero-padded to exactly `r` parts.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    n: u32,
    k: u32,
}

impl Shape {
    pub fn new(n: i64, k: i64) -> Result<Self> {
        if n <= 1 || k <= 0 || k >= n || n > u32::MAX as i64 {
            return Err(Error::InvalidShape { n, k });
        }
        Ok(Shape { n: n as u32, k: k as u32 })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Upper bound on every part; also the rank of the universal quotient.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of parts, `n - k`.
    pub fn r(&self) -> u32 {
        self.n - self.k
    }

    pub fn dim(&self) -> u32 {
        self.k * self.r()
    }

    /// Dimension `n*d + k(n-k)` of the space of degree-`d` maps.
    pub fn moduli_dimension(&self, d: u32) -> u64 {
        self.n as u64 * d as u64 + self.dim() as u64
    }

    /// The degree `d` with `codim = n*d + k(n-k)`, if there is one.
    pub fn degree_for_codim(&self, codim: u64) -> Option<u32> {
        let dim = self.dim() as u64;
        if codim < dim || !(codim - dim).is_multiple_of(self.n as u64) {
            return None;
        }
        u32::try_from((codim - dim) / self.n as u64).ok()
    }

    /// `binomial(n, k)`, the rank of the cohomology.
    pub fn basis_size(&self) -> u64 {
        let (n, k) = (self.n as u64, self.k.min(self.r()) as u64);
        (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Every partition in the `r x k` box, lexicographically descending.
    pub fn enumerate_box(&self) -> Vec<Partition> {
        let r = self.r() as usize;
        let mut out = Vec::with_capacity(self.basis_size() as usize);
        let mut parts = vec![0u32; r];
        fill_box(&mut parts, 0, self.k, &mut out);
        out
    }

    pub fn zero_partition(&self) -> Partition {
        Partition(vec![0; self.r() as usize])
    }

    /// The one-row partition `(a, 0, ..., 0)` of the special class `σ_a`.
    pub fn special(&self, a: u32) -> Result<Partition> {
        if a > self.k {
            return Err(Error::SpecialIndex { index: a as i64, k: self.k });
        }
        let mut parts = vec![0; self.r() as usize];
        parts[0] = a;
        Ok(Partition(parts))
    }

    /// The Poincaré dual `(k - a_r, ..., k - a_1)`.
    pub fn complement(&self, p: &Partition) -> Partition {
        Partition(p.0.iter().rev().map(|&a| self.k - a).collect())
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.r(), self.n)
    }
}

fn fill_box(parts: &mut Vec<u32>, i: usize, bound: u32, out: &mut Vec<Partition>) {
    if i == parts.len() {
        out.push(Partition(parts.clone()));
        return;
    }
    for a in (0..=bound).rev() {
        parts[i] = a;
        fill_box(parts, i + 1, a, out);
    }
}

fn check_tuple(parts: &[i64], k: u32) -> std::result::Result<(), String> {
    for (i, &a) in parts.iter().enumerate() {
        if a < 0 {
            return Err(format!("part {a} is negative"));
        }
        if a > k as i64 {
            return Err(format!("part {a} exceeds k={k}"));
        }
        if i > 0 && parts[i - 1] < a {
            return Err("parts are not weakly decreasing".to_string());
        }
    }
    Ok(())
}

/// A weakly decreasing tuple `k >= a_1 >= ... >= a_r >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates `parts` against `shape`. Shorter inputs are zero-padded.
    pub fn new(shape: &Shape, parts: &[i64]) -> Result<Self> {
        let r = shape.r() as usize;
        let invalid = |reason: String| Error::InvalidPartition { parts: parts.to_vec(), reason };
        if parts.len() > r {
            return Err(invalid(format!("has {} parts but {} allows at most {r}", parts.len(), shape)));
        }
        check_tuple(parts, shape.k()).map_err(invalid)?;
        let mut v: Vec<u32> = parts.iter().map(|&a| a as u32).collect();
        v.resize(r, 0);
        Ok(Partition(v))
    }

    pub(crate) fn from_parts(parts: Vec<u32>) -> Self {
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Whether this partition fits the box of `shape`.
    pub fn fits(&self, shape: &Shape) -> bool {
        self.0.len() == shape.r() as usize
            && self.0.windows(2).all(|w| w[0] >= w[1])
            && self.0.first().is_none_or(|&a| a <= shape.k())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// An `(r+1)`-tuple `k >= b_1 >= ... >= b_{r+1} >= 0`, one row longer than a
/// partition in the box.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedTuple(Vec<u32>);

impl ExtendedTuple {
    pub fn new(shape: &Shape, parts: &[i64]) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidPartition { parts: parts.to_vec(), reason };
        if parts.len() != shape.r() as usize + 1 {
            return Err(invalid(format!("extended tuple needs exactly {} parts", shape.r() + 1)));
        }
        check_tuple(parts, shape.k()).map_err(invalid)?;
        Ok(ExtendedTuple(parts.iter().map(|&a| a as u32).collect()))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// All extended tuples for `shape`, lexicographically descending.
    pub fn enumerate(shape: &Shape) -> Vec<ExtendedTuple> {
        let mut out = Vec::new();
        let mut parts = vec![0u32; shape.r() as usize + 1];
        let mut flat = Vec::new();
        fill_box(&mut parts, 0, shape.k(), &mut flat);
        out.extend(flat.into_iter().map(|p| ExtendedTuple(p.0)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(shape: &Shape, parts: &[i64]) -> Partition {
        Partition::new(shape, parts).unwrap()
    }

    #[test]
    fn shape_construction() {
        let s = Shape::new(4, 2).unwrap();
        assert_eq!((s.r(), s.dim()), (2, 4));
        let s = Shape::new(5, 2).unwrap();
        assert_eq!((s.r(), s.dim()), (3, 6));
        assert!(Shape::new(4, 4).is_err());
        assert!(Shape::new(4, 0).is_err());
        assert!(Shape::new(1, 1).is_err());
        assert!(Shape::new(3, -1).is_err());
    }

    #[test]
    fn complement_examples() {
        let g24 = Shape::new(4, 2).unwrap();
        assert_eq!(g24.complement(&p(&g24, &[1, 0])), p(&g24, &[2, 1]));
        assert_eq!(g24.complement(&p(&g24, &[2, 2])), p(&g24, &[0, 0]));
        let g35 = Shape::new(5, 2).unwrap();
        assert_eq!(g35.complement(&p(&g35, &[2, 1, 0])), p(&g35, &[2, 1, 0]));
    }

    #[test]
    fn box_enumeration() {
        let g24 = Shape::new(4, 2).unwrap();
        let parts: Vec<Vec<u32>> = g24.enumerate_box().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(parts, vec![vec![2, 2], vec![2, 1], vec![2, 0], vec![1, 1], vec![1, 0], vec![0, 0]]);

        let p1 = Shape::new(2, 1).unwrap();
        let parts: Vec<Vec<u32>> = p1.enumerate_box().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(parts, vec![vec![1], vec![0]]);

        assert_eq!(Shape::new(5, 3).unwrap().enumerate_box().len(), 10);
    }

    #[test]
    fn dimension_bookkeeping() {
        let g24 = Shape::new(4, 2).unwrap();
        assert_eq!(g24.moduli_dimension(0), 4);
        assert_eq!(g24.moduli_dimension(1), 8);
        assert_eq!(Shape::new(5, 3).unwrap().moduli_dimension(2), 16);
        assert_eq!(g24.degree_for_codim(8), Some(1));
        assert_eq!(g24.degree_for_codim(4), Some(0));
        assert_eq!(g24.degree_for_codim(7), None);
        assert_eq!(g24.degree_for_codim(3), None);
    }

    #[test]
    fn partition_validation() {
        let g24 = Shape::new(4, 2).unwrap();
        assert!(Partition::new(&g24, &[3, 1]).is_err());
        assert!(Partition::new(&g24, &[1, 2]).is_err());
        assert!(Partition::new(&g24, &[1, -1]).is_err());
        assert!(Partition::new(&g24, &[1, 1, 1]).is_err());
        assert_eq!(p(&g24, &[2]).parts(), &[2, 0]);
        assert!(ExtendedTuple::new(&g24, &[2, 2, 1]).is_ok());
        assert!(ExtendedTuple::new(&g24, &[2, 2]).is_err());
        assert_eq!(ExtendedTuple::enumerate(&g24).len(), 10);
    }

    #[test]
    fn box_invariants_small_shapes() {
        for n in 2..=8i64 {
            for k in 1..n {
                let s = Shape::new(n, k).unwrap();
                let basis = s.enumerate_box();
                assert_eq!(basis.len() as u64, s.basis_size());
                let mut sorted = basis.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), basis.len());
                for lam in &basis {
                    assert!(lam.fits(&s));
                    let c = s.complement(lam);
                    assert!(c.fits(&s));
                    assert_eq!(s.complement(&c), *lam);
                    assert_eq!(lam.weight() + c.weight(), s.dim());
                }
                for d in 0..10 {
                    assert_eq!(s.degree_for_codim(s.moduli_dimension(d)), Some(d));
                }
            }
        }
    }
}
