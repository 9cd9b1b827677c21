use rayon::prelude::*;

use super::{criteria, explicit_intertwiner, intertwiner_space, is_intertwiner, Shift};
use crate::error::Result;
use crate::ncalgebra::AlgebraParams;
use crate::reps::{build, Family, ParamTuple, Representation};

/// One ordered pair `(i, j)` of grid tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub families: (Family, Family),
    /// `None` for cross-family pairs or when no shift exists.
    pub criteria: Option<Shift>,
    pub oracle_dim: usize,
    /// The oracle basis element is invertible (only meaningful when `oracle_dim == 1`).
    pub oracle_invertible: bool,
    /// The explicit map built from the criteria shift is an intertwiner.
    pub explicit_map_ok: Option<bool>,
}

impl PairRecord {
    pub fn oracle_isomorphic(&self) -> bool {
        self.oracle_dim >= 1 && self.oracle_invertible
    }

    pub fn same_family(&self) -> bool {
        self.families.0 == self.families.1
    }

    /// Criteria and oracle agree.
    pub fn agrees(&self) -> bool {
        if self.same_family() {
            self.criteria.is_some() == self.oracle_isomorphic()
        } else {
            !self.oracle_isomorphic()
        }
    }
}

#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub grid_size: usize,
    pub records: Vec<PairRecord>,
}

impl CrossValidation {
    pub fn same_family_pairs(&self) -> usize {
        self.records.iter().filter(|r| r.same_family()).count()
    }

    pub fn cross_family_pairs(&self) -> usize {
        self.records.len() - self.same_family_pairs()
    }

    pub fn disagreements(&self) -> Vec<&PairRecord> {
        self.records.iter().filter(|r| !r.agrees()).collect()
    }

    /// Pairs whose intertwiner space is not 0, or 1 with an invertible generator.
    pub fn schur_violations(&self) -> Vec<&PairRecord> {
        self.records
            .iter()
            .filter(|r| r.oracle_dim > 1 || (r.oracle_dim == 1 && !r.oracle_invertible))
            .collect()
    }

    pub fn cross_family_isomorphisms(&self) -> usize {
        self.records
            .iter()
            .filter(|r| !r.same_family() && r.oracle_isomorphic())
            .count()
    }

    pub fn explicit_map_failures(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.explicit_map_ok == Some(false))
            .count()
    }

    /// The oracle relation is reflexive, symmetric and transitive on the grid.
    pub fn is_equivalence(&self) -> bool {
        let n = self.grid_size;
        let mut rel = vec![vec![false; n]; n];
        for r in &self.records {
            rel[r.i][r.j] = r.oracle_isomorphic();
        }
        let reflexive = (0..n).all(|i| rel[i][i]);
        let symmetric = (0..n).all(|i| (0..n).all(|j| rel[i][j] == rel[j][i]));
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| !rel[i][j] || (0..n).all(|k| !rel[j][k] || rel[i][k]))
        });
        reflexive && symmetric && transitive
    }

    /// Number of isomorphism classes according to the oracle.
    pub fn class_count(&self) -> usize {
        let n = self.grid_size;
        let mut class = vec![usize::MAX; n];
        let mut count = 0;
        for i in 0..n {
            if class[i] != usize::MAX {
                continue;
            }
            class[i] = count;
            for r in &self.records {
                if r.i == i && r.oracle_isomorphic() {
                    class[r.j] = count;
                }
            }
            count += 1;
        }
        count
    }

    pub fn passed(&self) -> bool {
        self.records.len() == self.grid_size * self.grid_size
            && self.disagreements().is_empty()
            && self.schur_violations().is_empty()
            && self.cross_family_isomorphisms() == 0
            && self.explicit_map_failures() == 0
            && self.is_equivalence()
    }
}

fn record(p: &AlgebraParams, grid: &[ParamTuple], reps: &[Representation], i: usize, j: usize) -> Result<PairRecord> {
    let (mu, la) = (&grid[i], &grid[j]);
    let shift = criteria(p, mu, la)?;
    let space = intertwiner_space(&reps[i], &reps[j])?;
    let explicit_map_ok = match shift {
        Some(s) => Some(is_intertwiner(&reps[i], &reps[j], &explicit_intertwiner(p, mu, la, s)?)),
        None => None,
    };
    Ok(PairRecord {
        i,
        j,
        families: (mu.family(), la.family()),
        criteria: shift,
        oracle_dim: space.dim(),
        oracle_invertible: space.basis.first().is_some_and(|t| t.is_invertible()),
        explicit_map_ok,
    })
}

/// Compare criteria and intertwiner verdicts on every ordered pair of grid tuples.
pub fn cross_validate(p: &AlgebraParams, grid: &[ParamTuple]) -> Result<CrossValidation> {
    let reps: Vec<Representation> = grid
        .par_iter()
        .map(|t| build(p, t))
        .collect::<Result<_>>()?;
    let n = grid.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let records = pairs
        .into_par_iter()
        .map(|(i, j)| record(p, grid, &reps, i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrossValidation {
        grid_size: n,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_v3_grid() {
        let p = AlgebraParams::new(3, 3, 1, 1).unwrap();
        let grid: Vec<ParamTuple> = (0..3)
            .flat_map(|e1| (0..3).map(move |e2| (e1, e2)))
            .map(|(e1, e2)| ParamTuple::roots(Family::V3, &[p.root(e1), p.root(e2)]).unwrap())
            .collect();
        let report = cross_validate(&p, &grid).unwrap();
        assert!(report.passed());
        assert_eq!(report.records.len(), 81);
    }
}
