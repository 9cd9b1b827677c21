//! Incremental row reduction over an exact field.
//!
//! Vectors are sparse `(column, value)` lists sorted by column. [`Echelon`] keeps its rows in
//! reduced row echelon form, so reducing a new vector only touches the rows whose pivot
//! columns the vector hits.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use crate::scalars::CycloElem;

/// The field operations row reduction needs.
pub trait LinearScalar: Clone + PartialEq + Debug {
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Inverse of a nonzero element.
    fn recip(&self) -> Self;
    fn one_like(&self) -> Self;
}

impl LinearScalar for CycloElem {
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }
    fn one_like(&self) -> Self {
        CycloElem::one_like(self)
    }
}

pub type SparseVec<F> = Vec<(usize, F)>;

/// Drop explicit zeros and sort by column, summing duplicate columns.
pub fn normalize<F: LinearScalar>(entries: impl IntoIterator<Item = (usize, F)>) -> SparseVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (c, v) in entries {
        match acc.remove(&c) {
            Some(old) => {
                let s = old.plus(&v);
                acc.insert(c, s);
            }
            None => {
                acc.insert(c, v);
            }
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero_elem()).collect()
}

fn entry<F>(v: &[(usize, F)], col: usize) -> Option<&F> {
    v.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|i| &v[i].1)
}

/// `a - s * b` for sparse vectors.
fn axpy<F: LinearScalar>(a: &[(usize, F)], s: &F, b: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|x| x.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|x| x.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, b[j].1.times(s).negated()));
            j += 1;
        } else {
            let v = a[i].1.minus(&b[j].1.times(s));
            if !v.is_zero_elem() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A subspace of `F^ncols` held as rows in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    /// pivot column -> row index
    pivots: HashMap<usize, usize>,
}

impl<F: LinearScalar> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    /// The remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let hits: Vec<(usize, F)> = v
            .iter()
            .filter_map(|(c, x)| self.pivots.get(c).map(|&r| (r, x.clone())))
            .collect();
        let mut out = v.to_vec();
        for (r, x) in hits {
            out = axpy(&out, &x, &self.rows[r]);
        }
        out
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Add `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, F)]) -> bool {
        let r = self.reduce(v);
        let Some((pcol, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.recip();
        let row: SparseVec<F> = r.into_iter().map(|(c, x)| (c, x.times(&inv))).collect();
        for existing in self.rows.iter_mut() {
            if let Some(x) = entry(existing, pcol).cloned() {
                *existing = axpy(existing, &x, &row);
            }
        }
        self.pivots.insert(pcol, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Basis of `{x : row · x = 0 for every row}`, one vector per free column, in column order.
    pub fn nullspace(&self, one: &F) -> Vec<SparseVec<F>> {
        let mut out = Vec::new();
        for free in 0..self.ncols {
            if self.pivots.contains_key(&free) {
                continue;
            }
            let mut v = vec![(free, one.clone())];
            for row in &self.rows {
                if let Some(x) = entry(row, free) {
                    v.push((row[0].0, x.negated()));
                }
            }
            v.sort_by_key(|(c, _)| *c);
            out.push(v);
        }
        out
    }

    /// Rows sorted by pivot column: a canonical basis of the subspace.
    pub fn canonical_basis(&self) -> Vec<SparseVec<F>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|r| r[0].0);
        rows
    }
}

/// Rank of a list of sparse vectors.
pub fn rank_of<F: LinearScalar>(ncols: usize, vectors: &[SparseVec<F>]) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
