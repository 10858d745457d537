//! Littlewood–Richardson fillings and the restrictions they compute.
//!
//! `c^λ_{μν}` is the number of fillings of `λ ∖ μ` that are weakly increasing
//! along rows, strictly increasing down columns, and whose right-to-left,
//! top-to-bottom reading word is a good sequence of type `ν`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partitions::{padded_delta, partitions_of, skew_of_delta, Partition, SkewShape};

/// A finite sequence of positive integers (a reading word).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct EntrySequence(pub Vec<usize>);

/// Outcome of checking the good-sequence condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GoodCheck {
    pub good: bool,
    /// 1-based position of the first element that is not good.
    pub first_bad: Option<usize>,
}

impl EntrySequence {
    /// Counts `(#1s, #2s, …)`, up to the largest entry.
    pub fn sequence_type(&self) -> Vec<usize> {
        let max = self.0.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; max];
        for &c in &self.0 {
            counts[c - 1] += 1;
        }
        counts
    }

    /// An entry `c > 1` is good when strictly more `c - 1`s than `c`s
    /// precede it.
    pub fn is_good(&self) -> GoodCheck {
        let mut counts: Vec<usize> = Vec::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                return GoodCheck {
                    good: false,
                    first_bad: Some(i + 1),
                };
            }
            if counts.len() < c {
                counts.resize(c, 0);
            }
            if c > 1 && counts[c - 2] <= counts[c - 1] {
                return GoodCheck {
                    good: false,
                    first_bad: Some(i + 1),
                };
            }
            counts[c - 1] += 1;
        }
        GoodCheck {
            good: true,
            first_bad: None,
        }
    }
}

/// A filling of a skew shape, entries stored row-major left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LRFilling {
    shape: SkewShape,
    entries: Vec<usize>,
}

impl LRFilling {
    /// Wraps entries without validating them; see [`LRFilling::validate`].
    pub fn new(shape: SkewShape, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != shape.node_count() {
            return Err(Error::InvalidFilling(format!(
                "{} entries for {} nodes",
                entries.len(),
                shape.node_count()
            )));
        }
        Ok(Self { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entries of each row, left to right (empty rows included).
    pub fn rows(&self) -> Vec<&[usize]> {
        let mut out = Vec::with_capacity(self.shape.rows());
        let mut start = 0;
        for len in self.shape.row_lengths() {
            out.push(&self.entries[start..start + len]);
            start += len;
        }
        out
    }

    /// Right to left, top to bottom.
    pub fn reading_word(&self) -> EntrySequence {
        EntrySequence(self.rows().iter().flat_map(|r| r.iter().rev().copied()).collect())
    }

    fn entry_at(&self, row: usize, col: usize) -> Option<usize> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        let offset: usize = self.shape.row_lengths()[..row].iter().sum();
        Some(self.entries[offset + col - self.shape.inner()[row]])
    }

    /// Checks the three LR conditions against the content `content`.
    pub fn validate(&self, content: &Partition) -> Result<()> {
        let word = self.reading_word();
        let expected: Vec<usize> = content.parts().to_vec();
        if word.sequence_type() != expected {
            return Err(Error::InvalidFilling(format!(
                "type {:?} differs from {content}",
                word.sequence_type()
            )));
        }
        if let Some(bad) = word.is_good().first_bad {
            return Err(Error::InvalidFilling(format!(
                "reading word not good at position {bad}"
            )));
        }
        for (r, row) in self.rows().iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidFilling(format!("row {} decreases", r + 1)));
            }
            for col in self.shape.row_range(r) {
                if r > 0 {
                    if let Some(above) = self.entry_at(r - 1, col) {
                        if above >= self.entry_at(r, col).expect("cell in shape") {
                            return Err(Error::InvalidFilling(format!(
                                "column {} not strict at row {}",
                                col + 1,
                                r + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Backtracking over cells in reading order, smallest entry first; calls
/// `visit` with the row-major entries of every LR filling.
fn for_each_filling(shape: &SkewShape, content: &Partition, mut visit: impl FnMut(&[usize])) {
    if shape.node_count() != content.size() {
        return;
    }
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| shape.row_range(r).rev().map(move |c| (r, c)))
        .collect();
    let width = shape.outer().part(0);
    let mut grid = vec![vec![0usize; width]; shape.rows()];
    let mut counts = vec![0usize; content.len() + 1];
    let mut row_major = Vec::with_capacity(cells.len());

    struct Search<'a, F> {
        shape: &'a SkewShape,
        content: &'a Partition,
        cells: &'a [(usize, usize)],
        visit: F,
    }

    fn step<F: FnMut(&[usize])>(
        s: &mut Search<'_, F>,
        idx: usize,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        row_major: &mut Vec<usize>,
    ) {
        if idx == s.cells.len() {
            row_major.clear();
            for (r, row) in grid.iter().enumerate().take(s.shape.rows()) {
                row_major.extend(s.shape.row_range(r).map(|c| row[c]));
            }
            (s.visit)(row_major);
            return;
        }
        let (r, c) = s.cells[idx];
        let low = if r > 0 && s.shape.contains_cell(r - 1, c) {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let high = if s.shape.contains_cell(r, c + 1) {
            grid[r][c + 1]
        } else {
            s.content.len()
        };
        for v in low..=high.min(s.content.len()) {
            if counts[v] >= s.content.part(v - 1) {
                continue;
            }
            if v > 1 && counts[v - 1] <= counts[v] {
                continue;
            }
            counts[v] += 1;
            grid[r][c] = v;
            step(s, idx + 1, grid, counts, row_major);
            grid[r][c] = 0;
            counts[v] -= 1;
        }
    }

    let mut search = Search {
        shape,
        content,
        cells: &cells,
        visit: &mut visit,
    };
    step(&mut search, 0, &mut grid, &mut counts, &mut row_major);
}

/// All LR fillings of `shape` with content `content`, in lexicographic order
/// of their reading words.
pub fn enumerate_lr_fillings(shape: &SkewShape, content: &Partition) -> Vec<LRFilling> {
    let mut out = Vec::new();
    for_each_filling(shape, content, |entries| {
        out.push(LRFilling {
            shape: shape.clone(),
            entries: entries.to_vec(),
        });
    });
    out
}

/// `c^λ_{μν}`: multiplicity of `χ^λ` in `(χ^μ × χ^ν)↑`, equivalently of
/// `χ^μ × χ^ν` in `χ^λ↓`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size() + nu.size(),
        });
    }
    if !lambda.contains(mu) || !lambda.contains(nu) {
        return Ok(0);
    }
    let shape = SkewShape::new(lambda.clone(), mu)?;
    let mut count = 0;
    for_each_filling(&shape, nu, |_| count += 1);
    Ok(count)
}

/// Constituents of a restriction to a Young subgroup, keyed by the tuple of
/// factor labels in factor order.
pub type YoungRestriction = BTreeMap<Vec<Partition>, u64>;

/// `χ^λ↓_{S_{n_1} × … × S_{n_t}}` by iterated two-factor LR restriction.
pub fn restrict_to_young(lambda: &Partition, parts: &[usize]) -> Result<YoungRestriction> {
    let total: usize = parts.iter().sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: total,
        });
    }
    let mut out = YoungRestriction::new();
    match parts {
        [] => {
            out.insert(Vec::new(), 1);
        }
        [_] => {
            out.insert(vec![lambda.clone()], 1);
        }
        [first, rest @ ..] => {
            let rest_size = lambda.size() - first;
            let mus: Vec<Partition> = partitions_of(*first)
                .into_iter()
                .filter(|m| lambda.contains(m))
                .collect();
            let nus: Vec<Partition> = partitions_of(rest_size)
                .into_iter()
                .filter(|n| lambda.contains(n))
                .collect();
            for mu in &mus {
                for nu in &nus {
                    let c = lr_coefficient(lambda, mu, nu)?;
                    if c == 0 {
                        continue;
                    }
                    for (tail, mult) in restrict_to_young(nu, rest)? {
                        let mut key = Vec::with_capacity(parts.len());
                        key.push(mu.clone());
                        key.extend(tail);
                        *out.entry(key).or_insert(0) += c * mult;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Restriction of the hook `χ_{2n}^k = (2n - k, 1^k)` to `S_n × S_n` by the
/// closed form, as leg-length pairs `(i, j)` of the factor hooks.
pub fn hook_restriction_closed_form(n: usize, k: usize) -> Result<BTreeMap<(usize, usize), u64>> {
    if n == 0 || k >= 2 * n {
        return Err(Error::RangeError(format!("k = {k} outside 0..{} for n = {n}", 2 * n)));
    }
    let mut out = BTreeMap::new();
    let mut add = |i: usize, j: usize| *out.entry((i, j)).or_insert(0) += 1;
    if k < n {
        for i in 0..k {
            add(i, k - 1 - i);
        }
        for i in 0..=k {
            add(i, k - i);
        }
    } else {
        let j = k - n;
        for i in j..n {
            add(i, n + j - i - 1);
        }
        for i in j + 1..n {
            add(i, n + j - i);
        }
    }
    Ok(out)
}

/// Converts leg pairs of hooks of `n` into partition pairs.
pub fn hook_pairs_to_partitions(n: usize, pairs: &BTreeMap<(usize, usize), u64>) -> Result<YoungRestriction> {
    pairs
        .iter()
        .map(|(&(i, j), &m)| Ok((vec![Partition::hook(n, i)?, Partition::hook(n, j)?], m)))
        .collect()
}

/// The explicit LR filling of `S(λ) = λ ∖ Δ(λ)` with content `Δ(λ)`.
///
/// Step 1 fills every row `j` with `j`, except that a row one node longer
/// than `Δ(λ)_j` keeps its leftmost node empty. Step 2 puts the values still
/// missing from the content, sorted ascending, into those empty nodes from
/// top to bottom.
pub fn canonical_delta_filling(lambda: &Partition) -> Result<LRFilling> {
    let shape = skew_of_delta(lambda)?;
    let delta = padded_delta(lambda)?;
    let content = Partition::from_padded(&delta)?;
    let lengths = shape.row_lengths();

    let mut rows: Vec<Vec<Option<usize>>> = Vec::with_capacity(lengths.len());
    let mut step_one_counts = vec![0usize; lengths.len() + 1];
    for (j, (&s, &d)) in lengths.iter().zip(&delta).enumerate() {
        let label = j + 1;
        let mut row = vec![Some(label); s];
        if s == d + 1 {
            row[0] = None;
        }
        step_one_counts[label] += row.iter().flatten().count();
        rows.push(row);
    }

    let missing: Vec<usize> = (1..=content.len())
        .flat_map(|v| std::iter::repeat_n(v, content.part(v - 1).saturating_sub(step_one_counts[v])))
        .collect();
    let empty_rows: Vec<usize> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.first() == Some(&None))
        .map(|(j, _)| j)
        .collect();
    if missing.len() != empty_rows.len() {
        return Err(Error::InvalidFilling(format!(
            "{} empty nodes but {} missing values",
            empty_rows.len(),
            missing.len()
        )));
    }
    for (&row, &z) in empty_rows.iter().zip(&missing) {
        rows[row][0] = Some(z);
    }

    let entries: Vec<usize> = rows
        .into_iter()
        .flatten()
        .map(|e| e.expect("every node filled"))
        .collect();
    let filling = LRFilling::new(shape, entries)?;
    filling.validate(&content)?;
    Ok(filling)
}
