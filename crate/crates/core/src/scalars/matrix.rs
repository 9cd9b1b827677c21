use std::fmt;

use super::{CycloElem, RootExp, ScalarError};
use crate::linalg::{normalize, Echelon, SparseVec};

/// A matrix over `Q(ζ_L)`, stored by sparse rows.
///
/// Representation matrices are weighted partial permutations, so almost every product
/// stays sparse. Rows hold `(column, value)` pairs sorted by column, without zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    order: u32,
    data: Vec<SparseVec<CycloElem>>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize, order: u32) -> Self {
        ScalarMatrix {
            rows,
            cols,
            order,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        let one = CycloElem::one(order);
        let data = (0..n).map(|i| vec![(i, one.clone())]).collect();
        ScalarMatrix {
            rows: n,
            cols: n,
            order,
            data,
        }
    }

    /// Build from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        order: u32,
        entries: impl IntoIterator<Item = (usize, usize, CycloElem)>,
    ) -> Result<Self, ScalarError> {
        let mut buckets: Vec<Vec<(usize, CycloElem)>> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            if v.field_order() != order {
                return Err(ScalarError::FieldMismatch(order, v.field_order()));
            }
            assert!(i < rows && j < cols, "entry ({i},{j}) out of bounds");
            buckets[i].push((j, v));
        }
        let data = buckets.into_iter().map(normalize).collect();
        Ok(ScalarMatrix {
            rows,
            cols,
            order,
            data,
        })
    }

    pub fn from_rows(cols: usize, order: u32, rows: Vec<SparseVec<CycloElem>>) -> Self {
        let data: Vec<_> = rows.into_iter().map(normalize).collect();
        ScalarMatrix {
            rows: data.len(),
            cols,
            order,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn field_order(&self) -> u32 {
        self.order
    }

    pub fn row(&self, i: usize) -> &[(usize, CycloElem)] {
        &self.data[i]
    }

    pub fn rows(&self) -> &[SparseVec<CycloElem>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> CycloElem {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => CycloElem::zero(self.order),
        }
    }

    /// Iterate the nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &CycloElem)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    fn check(&self, other: &ScalarMatrix) -> Result<(), ScalarError> {
        if self.order != other.order {
            return Err(ScalarError::FieldMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix, ScalarError> {
        self.check(other)?;
        if self.cols != other.rows {
            return Err(ScalarError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                normalize(row.iter().flat_map(|(k, a)| {
                    other.data[*k].iter().map(move |(j, b)| (*j, a * b))
                }))
            })
            .collect();
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: other.cols,
            order: self.order,
            data,
        })
    }

    fn combine(
        &self,
        other: &ScalarMatrix,
        sign: bool,
    ) -> Result<ScalarMatrix, ScalarError> {
        self.check(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(ScalarError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                normalize(a.iter().cloned().chain(
                    b.iter()
                        .map(|(j, v)| (*j, if sign { v.clone() } else { -v })),
                ))
            })
            .collect();
        Ok(ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data,
        })
    }

    pub fn try_add(&self, other: &ScalarMatrix) -> Result<ScalarMatrix, ScalarError> {
        self.combine(other, true)
    }

    pub fn try_sub(&self, other: &ScalarMatrix) -> Result<ScalarMatrix, ScalarError> {
        self.combine(other, false)
    }

    pub fn scale(&self, s: &CycloElem) -> ScalarMatrix {
        let data = self
            .data
            .iter()
            .map(|row| normalize(row.iter().map(|(j, v)| (*j, v * s))))
            .collect();
        ScalarMatrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn scale_root(&self, r: &RootExp) -> ScalarMatrix {
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(j, v)| (*j, v.mul_root(r))).collect())
            .collect();
        ScalarMatrix {
            data,
            ..self.clone_shape()
        }
    }

    fn clone_shape(&self) -> ScalarMatrix {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data: Vec::new(),
        }
    }

    pub fn pow(&self, k: u32) -> ScalarMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = ScalarMatrix::identity(self.rows, self.order);
        let mut sq = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                sq = sq.try_mul(&sq).expect("same field");
            }
        }
        acc
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[(usize, CycloElem)]) -> SparseVec<CycloElem> {
        normalize(
            v.iter()
                .flat_map(|(k, a)| self.data[*k].iter().map(move |(j, b)| (*j, a * b))),
        )
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut buckets: Vec<Vec<(usize, CycloElem)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                buckets[*j].push((i, v.clone()));
            }
        }
        ScalarMatrix {
            rows: self.cols,
            cols: self.rows,
            order: self.order,
            data: buckets,
        }
    }

    /// Block diagonal `diag(self, other)`.
    pub fn direct_sum(&self, other: &ScalarMatrix) -> Result<ScalarMatrix, ScalarError> {
        self.check(other)?;
        let mut data = self.data.clone();
        data.extend(other.data.iter().map(|row| {
            row.iter()
                .map(|(j, v)| (j + self.cols, v.clone()))
                .collect::<Vec<_>>()
        }));
        Ok(ScalarMatrix {
            rows: self.rows + other.rows,
            cols: self.cols + other.cols,
            order: self.order,
            data,
        })
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for row in &self.data {
            e.insert(row);
        }
        e.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ScalarMatrix {}x{} over Q(zeta_{}):",
            self.rows, self.cols, self.order
        )?;
        for (i, j, v) in self.entries() {
            writeln!(f, "  [{i},{j}] = {v}")?;
        }
        Ok(())
    }
}
