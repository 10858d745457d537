//! Character values of `S_n` by the Murnaghan–Nakayama rule.
//!
//! Rim hooks are removed on the beta-set (abacus) of a partition: a rim
//! `r`-hook corresponds to moving a bead from position `b` to the free
//! position `b - r`, and its leg length is the number of beads strictly in
//! between.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Cycle types are partitions read as multisets of cycle lengths.
pub type CycleType = Partition;

/// Default size bound for full character tables.
pub const ORACLE_BOUND: usize = 8;

type Key = (Vec<usize>, Vec<usize>);

/// Thread-safe memo of `χ^λ(t)` keyed by the pair of part sequences.
#[derive(Default)]
pub struct CharacterCache {
    values: RwLock<HashMap<Key, i64>>,
}

static GLOBAL_CACHE: LazyLock<CharacterCache> = LazyLock::new(CharacterCache::default);

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by [`mn_value`].
    pub fn global() -> &'static CharacterCache {
        &GLOBAL_CACHE
    }

    pub fn len(&self) -> usize {
        self.values.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn value(&self, lambda: &Partition, cycle_type: &CycleType) -> Result<i64> {
        if lambda.size() != cycle_type.size() {
            return Err(Error::SizeMismatch {
                expected: lambda.size(),
                found: cycle_type.size(),
            });
        }
        Ok(self.eval(lambda.parts(), cycle_type.parts()))
    }

    fn eval(&self, lambda: &[usize], cycles: &[usize]) -> i64 {
        let Some((&largest, rest)) = cycles.split_first() else {
            return 1;
        };
        if lambda.len() == 1 {
            return 1;
        }
        let key = (lambda.to_vec(), cycles.to_vec());
        if let Some(&v) = self.values.read().expect("cache lock").get(&key) {
            return v;
        }
        let value = remove_rim_hooks(lambda, largest)
            .into_iter()
            .map(|(smaller, leg)| {
                let v = self.eval(&smaller, rest);
                if leg % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum();
        self.values.write().expect("cache lock").insert(key, value);
        value
    }
}

/// Every partition obtained by removing a rim hook of length `r`, together
/// with that hook's leg length.
pub fn remove_rim_hooks(lambda: &[usize], r: usize) -> Vec<(Vec<usize>, usize)> {
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let leg = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<usize> = moved.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push((parts, leg));
    }
    out
}

/// `χ^λ` at any permutation of cycle type `t`, using the global cache.
pub fn mn_value(lambda: &Partition, cycle_type: &CycleType) -> Result<i64> {
    CharacterCache::global().value(lambda, cycle_type)
}

/// `z_t = ∏ j^{m_j} m_j!`, the centralizer order of a permutation of type `t`.
pub fn centralizer_order(cycle_type: &CycleType) -> BigUint {
    let mut z = BigUint::one();
    for c in cycle_type.clusters().clusters {
        for i in 1..=c.multiplicity {
            z *= c.part * i;
        }
    }
    z
}

/// Number of permutations of cycle type `t`, `n! / z_t`.
pub fn class_size(cycle_type: &CycleType) -> BigUint {
    let factorial = (1..=cycle_type.size()).fold(BigUint::one(), |acc, k| acc * k);
    factorial / centralizer_order(cycle_type)
}

/// Full character table of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    /// Character labels, descending dictionary order.
    rows: Vec<Partition>,
    /// Cycle types, ascending dictionary order (identity first).
    columns: Vec<CycleType>,
    values: Vec<Vec<i64>>,
}

pub fn character_table(n: usize) -> Result<CharacterTable> {
    character_table_with_bound(n, ORACLE_BOUND)
}

pub fn character_table_with_bound(n: usize, bound: usize) -> Result<CharacterTable> {
    if n > bound {
        return Err(Error::BoundExceeded(format!(
            "character table of S_{n} (bound {bound})"
        )));
    }
    let rows = partitions_of(n);
    let mut columns = rows.clone();
    columns.reverse();
    let values = rows
        .iter()
        .map(|l| columns.iter().map(|t| mn_value(l, t)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable {
        n,
        rows,
        columns,
        values,
    })
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn columns(&self) -> &[CycleType] {
        &self.columns
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[i64]> {
        self.rows
            .iter()
            .position(|r| r == lambda)
            .map(|i| self.values[i].as_slice())
    }

    pub fn value(&self, lambda: &Partition, cycle_type: &CycleType) -> Option<i64> {
        let i = self.rows.iter().position(|r| r == lambda)?;
        let j = self.columns.iter().position(|c| c == cycle_type)?;
        Some(self.values[i][j])
    }

    /// `Σ_t |t| χ^λ(t) χ^μ(t) = n! [λ = μ]` for every pair of rows.
    pub fn rows_orthonormal(&self) -> bool {
        let order = (1..=self.n).fold(BigInt::one(), |acc, k| acc * k as u64);
        let sizes: Vec<BigInt> = self.columns.iter().map(|t| BigInt::from(class_size(t))).collect();
        (0..self.rows.len()).all(|a| {
            (0..self.rows.len()).all(|b| {
                let sum: BigInt = sizes
                    .iter()
                    .enumerate()
                    .map(|(j, s)| s * self.values[a][j] * self.values[b][j])
                    .sum();
                if a == b {
                    sum == order
                } else {
                    sum.is_zero()
                }
            })
        })
    }

    /// `Σ_λ χ^λ(s) χ^λ(t) = z_t [s = t]` for every pair of columns.
    pub fn columns_orthogonal(&self) -> bool {
        (0..self.columns.len()).all(|s| {
            (0..self.columns.len()).all(|t| {
                let sum: i64 = self.values.iter().map(|row| row[s] * row[t]).sum();
                if s == t {
                    BigUint::from(sum as u64) == centralizer_order(&self.columns[s])
                } else {
                    sum == 0
                }
            })
        })
    }
}
