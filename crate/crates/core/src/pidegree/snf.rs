use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A square integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    entries: Vec<Vec<BigInt>>,
    skew: bool,
}

impl IntMatrix {
    /// # Panics
    /// If the rows are ragged or not square.
    pub fn new(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        let skew = (0..n).all(|i| (0..n).all(|j| rows[i][j] == -&rows[j][i]));
        IntMatrix {
            entries: rows,
            skew,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.skew
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.size();
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.iter()).finish()
    }
}

/// Invariant factors `d₁ | d₂ | … | d_r`, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SNFResult {
    pub factors: Vec<BigInt>,
}

impl SNFResult {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Smith normal form by unimodular row and column operations.
///
/// The pivot is always an entry of least absolute value in the remaining block. After
/// clearing its row and column the pivot must divide the whole block; otherwise an offending
/// row is added to the pivot row and the step repeats with a strictly smaller pivot.
pub fn smith_normal_form(m: &IntMatrix) -> SNFResult {
    let n = m.size();
    let mut a = m.entries.clone();
    let mut factors = Vec::new();
    for t in 0..n {
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
            let Some((pi, pj)) = pivot else {
                return finish(factors);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..n {
                        let s = &q * &a[t][j];
                        a[i][j] -= s;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..n {
                        let s = &q * &a[i][t];
                        a[i][j] -= s;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let s = a[i][j].clone();
                        a[t][j] += s;
                    }
                }
                None => {
                    factors.push(a[t][t].abs());
                    break;
                }
            }
        }
    }
    finish(factors)
}

fn finish(factors: Vec<BigInt>) -> SNFResult {
    debug_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    SNFResult { factors }
}
