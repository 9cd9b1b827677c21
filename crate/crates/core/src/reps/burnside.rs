use std::collections::VecDeque;

use super::Representation;
use crate::linalg::{Echelon, SparseVec};
use crate::ncalgebra::Gen;
use crate::scalars::{CycloElem, ModEchelon, ModularImage, ScalarMatrix};

/// How the dimension of the image algebra was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BurnsideMethod {
    /// Full rank modulo a prime `p ≡ 1 (mod L)`.
    Modular,
    /// Exact elimination over `Q(ζ_L)`.
    Exact,
}

impl BurnsideMethod {
    pub fn name(self) -> &'static str {
        match self {
            BurnsideMethod::Modular => "modular",
            BurnsideMethod::Exact => "exact",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurnsideResult {
    /// Dimension of the span of all words in the four action matrices.
    pub dimension: usize,
    /// `d²` for a module of dimension `d`.
    pub target: usize,
    pub method: BurnsideMethod,
}

impl BurnsideResult {
    pub fn is_full(&self) -> bool {
        self.dimension == self.target
    }
}

type ModRows = Vec<Vec<(usize, u64)>>;

fn mod_matrix(m: &ScalarMatrix, img: &ModularImage) -> Option<ModRows> {
    m.rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|(j, v)| img.map(v).map(|x| (*j, x)))
                .filter(|e| !matches!(e, Some((_, 0))))
                .collect()
        })
        .collect()
}

fn mod_mul(a: &ModRows, b: &ModRows, p: u64) -> ModRows {
    a.iter()
        .map(|row| {
            let mut acc = std::collections::BTreeMap::new();
            for &(k, x) in row {
                for &(j, y) in &b[k] {
                    let e = acc.entry(j).or_insert(0u64);
                    *e = (*e + x * y) % p;
                }
            }
            acc.into_iter().filter(|(_, x)| *x != 0).collect()
        })
        .collect()
}

fn flatten_mod(m: &ModRows, d: usize) -> Vec<(usize, u64)> {
    m.iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().map(move |&(j, x)| (i * d + j, x)))
        .collect()
}

fn flatten(m: &ScalarMatrix) -> SparseVec<CycloElem> {
    let d = m.ncols();
    m.entries().map(|(i, j, v)| (i * d + j, v.clone())).collect()
}

/// Rank of the word span modulo a prime; `None` if some entry does not reduce.
fn modular_dimension(r: &Representation) -> Option<usize> {
    let d = r.dim();
    let img = ModularImage::new(r.params().field_order());
    let p = img.prime();
    let gens: Vec<ModRows> = Gen::ALL
        .iter()
        .map(|g| mod_matrix(r.matrix(*g), &img))
        .collect::<Option<_>>()?;
    let identity: ModRows = (0..d).map(|i| vec![(i, 1)]).collect();
    let mut ech = ModEchelon::new(p, d * d);
    ech.insert(&flatten_mod(&identity, d));
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        if ech.rank() == d * d {
            break;
        }
        for g in &gens {
            let next = mod_mul(&w, g, p);
            if ech.insert(&flatten_mod(&next, d)) {
                queue.push_back(next);
            }
        }
    }
    Some(ech.rank())
}

fn exact_dimension(r: &Representation) -> usize {
    let d = r.dim();
    let order = r.params().field_order();
    let identity = ScalarMatrix::identity(d, order);
    let mut ech: Echelon<CycloElem> = Echelon::new(d * d);
    ech.insert(&flatten(&identity));
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        if ech.rank() == d * d {
            break;
        }
        for g in Gen::ALL {
            let next = w.try_mul(r.matrix(g)).expect("square");
            if ech.insert(&flatten(&next)) {
                queue.push_back(next);
            }
        }
    }
    ech.rank()
}

/// Dimension of the subalgebra of `M_d(K)` generated by the action matrices.
///
/// A full modular rank is conclusive; anything less is recomputed exactly.
pub fn burnside_dimension(r: &Representation) -> BurnsideResult {
    let d = r.dim();
    let target = d * d;
    if let Some(dim) = modular_dimension(r) {
        if dim == target {
            return BurnsideResult {
                dimension: dim,
                target,
                method: BurnsideMethod::Modular,
            };
        }
    }
    BurnsideResult {
        dimension: exact_dimension(r),
        target,
        method: BurnsideMethod::Exact,
    }
}

/// Whether the module is absolutely simple, i.e. the action matrices generate `M_d(K)`.
pub fn is_absolutely_simple(r: &Representation) -> bool {
    burnside_dimension(r).is_full()
}
