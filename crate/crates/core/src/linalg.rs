//! Sparse exact Gaussian elimination.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalar::Field;

pub type SparseRow<F> = BTreeMap<usize, F>;

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a leading 1 in its pivot column and zeros in every
/// other pivot column, so reducing a fresh row is a single pass.
#[derive(Debug, Clone)]
pub struct Rref<F: Field> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

fn axpy<F: Field>(row: &mut SparseRow<F>, factor: &F, other: &SparseRow<F>) {
    for (&c, v) in other {
        let delta = factor.clone() * v;
        match row.get_mut(&c) {
            Some(x) => {
                *x -= &delta;
                if x.is_zero() {
                    row.remove(&c);
                }
            }
            None => {
                row.insert(c, -delta);
            }
        }
    }
}

impl<F: Field> Rref<F> {
    pub fn new(ncols: usize) -> Self {
        Rref {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        row.retain(|_, v| !v.is_zero());
        let hits: Vec<usize> = row
            .keys()
            .copied()
            .filter(|c| self.pivots.contains_key(c))
            .collect();
        for c in hits {
            if let Some(f) = row.get(&c).cloned() {
                axpy(&mut row, &f, &self.pivots[&c]);
            }
        }
        row
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn push(&mut self, row: SparseRow<F>) -> Result<bool> {
        let mut row = self.reduce(row);
        let Some((&p, lead)) = row.iter().next() else {
            return Ok(false);
        };
        let inv = lead.inv()?;
        for v in row.values_mut() {
            *v *= &inv;
        }
        for other in self.pivots.values_mut() {
            if let Some(f) = other.get(&p).cloned() {
                axpy(other, &f, &row);
            }
        }
        row.retain(|_, v| !v.is_zero());
        self.pivots.insert(p, row);
        Ok(true)
    }

    /// Basis of the solution space of the homogeneous system, one vector per
    /// free column, in increasing order of the free column.
    pub fn nullspace(&self, ctx: &F::Ctx) -> Vec<Vec<F>> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|free| {
                let mut v = vec![F::zero_in(ctx); self.ncols];
                v[free] = F::one_in(ctx);
                for (&p, row) in &self.pivots {
                    if let Some(x) = row.get(&free) {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Basis of { v : row · v = 0 for every row }.
pub fn nullspace<F: Field>(
    ctx: &F::Ctx,
    ncols: usize,
    rows: impl IntoIterator<Item = SparseRow<F>>,
) -> Result<Vec<Vec<F>>> {
    let mut r = Rref::new(ncols);
    for row in rows {
        r.push(row)?;
    }
    Ok(r.nullspace(ctx))
}

/// One solution of A v = b (free variables set to zero), or `None` if the
/// system is inconsistent. Each equation is given as (row, rhs).
pub fn solve<F: Field>(
    ctx: &F::Ctx,
    ncols: usize,
    equations: impl IntoIterator<Item = (SparseRow<F>, F)>,
) -> Result<Option<Vec<F>>> {
    // Augmented column `ncols` carries the right-hand side.
    let mut r = Rref::new(ncols + 1);
    for (mut row, rhs) in equations {
        if !rhs.is_zero() {
            row.insert(ncols, rhs);
        }
        r.push(row)?;
    }
    if r.pivots.contains_key(&ncols) {
        return Ok(None);
    }
    let mut v = vec![F::zero_in(ctx); ncols];
    for (&p, row) in &r.pivots {
        if let Some(x) = row.get(&ncols) {
            v[p] = x.clone();
        }
    }
    Ok(Some(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rat;

    fn row(entries: &[(usize, i64)]) -> SparseRow<Rat> {
        entries.iter().map(|&(c, v)| (c, Rat::from(v))).collect()
    }

    #[test]
    fn nullspace_of_rank_one_system() {
        let ns = nullspace(&(), 3, vec![row(&[(0, 1), (1, 1), (2, 1)]), row(&[(0, 2), (1, 2), (2, 2)])])
            .unwrap();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = v.iter().fold(Rat::zero(), |a, x| a + x);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let eqs = vec![
            (row(&[(0, 1), (1, 1)]), Rat::from(3)),
            (row(&[(0, 1), (1, -1)]), Rat::from(1)),
        ];
        let v = solve(&(), 2, eqs).unwrap().unwrap();
        assert_eq!(v, vec![Rat::from(2), Rat::from(1)]);

        let bad = vec![(row(&[(0, 1)]), Rat::from(1)), (row(&[(0, 2)]), Rat::from(3))];
        assert!(solve(&(), 1, bad).unwrap().is_none());
    }

    #[test]
    fn full_rank_has_trivial_nullspace() {
        let rows = (0..5).map(|i| row(&[(i, 1), ((i + 1) % 5, 1)]));
        assert!(nullspace(&(), 5, rows).unwrap().is_empty());
    }
}
