//! Littlewood-Richardson coefficients by direct tableau enumeration.
//!
//! Counts semistandard fillings of the skew shape `ν/λ` with content `μ`
//! whose reverse reading word is a lattice word. Shares no code with the
//! Pieri/Giambelli product, so it serves as an independent check on it.

use crate::shape::{Partition, Shape};

/// Coefficient of `σ_ν` in `σ_λ · σ_μ`.
pub fn lr_tableaux_oracle(_shape: &Shape, lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let (l, m, n) = (lambda.parts(), mu.parts(), nu.parts());
    if lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    if l.iter().zip(n).any(|(a, b)| a > b) {
        return 0;
    }
    let content: Vec<u32> = m.iter().copied().take_while(|&c| c > 0).collect();
    let mut grid: Vec<Vec<u32>> = n.iter().map(|&len| vec![0; len as usize]).collect();
    let mut counts = vec![0u32; content.len()];
    let mut cells = Vec::new();
    for (i, (&start, &end)) in l.iter().zip(n).enumerate() {
        for j in (start..end).rev() {
            cells.push((i, j as usize));
        }
    }
    let mut total = 0;
    fill(l, &content, &cells, 0, &mut grid, &mut counts, &mut total);
    total
}

fn fill(
    lambda: &[u32],
    content: &[u32],
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    total: &mut i64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (i, j) = cells[idx];
    // weakly increasing along the row; the right neighbour is already filled
    let mut max = content.len() as u32;
    if j + 1 < grid[i].len() {
        max = max.min(grid[i][j + 1]);
    }
    // strictly increasing down the column
    let mut min = 1;
    if i > 0 && j >= lambda[i - 1] as usize {
        min = grid[i - 1][j] + 1;
    }
    for x in min..=max {
        let slot = (x - 1) as usize;
        if counts[slot] >= content[slot] {
            continue;
        }
        if slot > 0 && counts[slot] + 1 > counts[slot - 1] {
            continue;
        }
        counts[slot] += 1;
        grid[i][j] = x;
        fill(lambda, content, cells, idx + 1, grid, counts, total);
        grid[i][j] = 0;
        counts[slot] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(shape: &Shape, parts: &[i64]) -> Partition {
        Partition::new(shape, parts).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let s = Shape::new(4, 2).unwrap();
        assert_eq!(lr_tableaux_oracle(&s, &p(&s, &[1, 0]), &p(&s, &[1, 0]), &p(&s, &[1, 1])), 1);
        assert_eq!(lr_tableaux_oracle(&s, &p(&s, &[1, 0]), &p(&s, &[1, 0]), &p(&s, &[2, 1])), 0);
        let s = Shape::new(6, 3).unwrap();
        assert_eq!(lr_tableaux_oracle(&s, &p(&s, &[2, 1, 0]), &p(&s, &[2, 1, 0]), &p(&s, &[3, 2, 1])), 2);
    }

    #[test]
    fn containment_required() {
        let s = Shape::new(6, 3).unwrap();
        assert_eq!(lr_tableaux_oracle(&s, &p(&s, &[3, 0, 0]), &p(&s, &[1, 1, 1]), &p(&s, &[2, 2, 2])), 0);
    }

    #[test]
    fn identity_coefficients() {
        let s = Shape::new(6, 3).unwrap();
        let zero = s.zero_partition();
        for lam in s.enumerate_box() {
            for nu in s.enumerate_box() {
                let expected = (lam == nu) as i64;
                assert_eq!(lr_tableaux_oracle(&s, &lam, &zero, &nu), expected);
                assert_eq!(lr_tableaux_oracle(&s, &zero, &lam, &nu), expected);
            }
        }
    }
}
