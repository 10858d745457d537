//! Integer partitions and the combinatorial data attached to them.
//!
//! A [`Partition`] labels both an irreducible character of `S_n` and a cycle
//! type. Besides the usual diagram operations this module provides the
//! dictionary order used to line up odd-degree characters, exact degrees via
//! the hook-length formula, and the half-size construction [`delta`] that
//! splits every cluster `r^a` of a partition of `2n` into a partition of `n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::serde_str::serde_via_str;

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` compares part sequences lexicographically, which is the
/// dictionary order whenever both sides have the same size.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing steps.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::MalformedInput(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    /// Builds a partition from a weakly decreasing sequence that may end in
    /// zeros; the zeros are dropped.
    pub fn from_padded(parts: &[usize]) -> Result<Self> {
        let end = parts.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
        Self::new(parts[..end].to_vec())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The hook `(n - leg, 1^leg)`.
    pub fn hook(n: usize, leg: usize) -> Result<Self> {
        if n == 0 || leg >= n {
            return Err(Error::RangeError(format!("hook of size {n} with leg {leg}")));
        }
        let mut parts = vec![n - leg];
        parts.extend(std::iter::repeat_n(1, leg));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Self { parts }
    }

    /// Subpartition test: `other` has at most as many rows and each row fits.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// The leg `k` of a hook `(n - k, 1^k)`.
    pub fn hook_leg(&self) -> Result<usize> {
        if self.is_empty() || !self.is_hook() {
            return Err(Error::NotAHook(self.to_string()));
        }
        Ok(self.len() - 1)
    }

    /// Hook lengths, one row of the table per row of the diagram.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| (0..row).map(|j| (row - j - 1) + (conj.part(j) - i - 1) + 1).collect())
            .collect()
    }

    /// The degree `χ^λ(1) = n! / ∏ hooks`, exactly.
    pub fn degree(&self) -> BigUint {
        let numerator: BigUint = (1..=self.size()).fold(BigUint::one(), |acc, k| acc * k);
        let denominator = self
            .hook_lengths()
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * h);
        numerator / denominator
    }

    /// Parity of the degree from 2-adic valuations, without forming `n!`.
    pub fn is_odd_degree(&self) -> bool {
        let factorial_valuation = self.size() - self.size().count_ones() as usize;
        let hook_valuation: usize = self
            .hook_lengths()
            .iter()
            .flatten()
            .map(|&h| h.trailing_zeros() as usize)
            .sum();
        factorial_valuation == hook_valuation
    }

    /// Maximal runs `r^a` of equal parts, largest part first.
    pub fn clusters(&self) -> ClusterDecomposition {
        let mut clusters: Vec<Cluster> = Vec::new();
        for &p in &self.parts {
            match clusters.last_mut() {
                Some(c) if c.part == p => c.multiplicity += 1,
                _ => clusters.push(Cluster {
                    part: p,
                    multiplicity: 1,
                    odd_rank: None,
                }),
            }
        }
        let mut rank = 0;
        for c in &mut clusters {
            if c.is_odd() {
                rank += 1;
                c.odd_rank = Some(rank);
            }
        }
        ClusterDecomposition { clusters }
    }

    /// Exponent notation, e.g. `(7^3,6,5,4,3^2,1^2)`.
    pub fn to_exponent_string(&self) -> String {
        let body: Vec<String> = self
            .clusters()
            .clusters
            .iter()
            .map(|c| {
                if c.multiplicity == 1 {
                    c.part.to_string()
                } else {
                    format!("{}^{}", c.part, c.multiplicity)
                }
            })
            .collect();
        format!("({})", body.join(","))
    }

    /// Number of cycles when read as a cycle type.
    pub fn cycle_count(&self) -> usize {
        self.len()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

serde_via_str!(Partition);

/// Parses `3,3`, `(3,3)` or exponent notation such as `7^3,6,5,4,3^2,1^2`.
///
/// Input must already be weakly decreasing; it is never sorted.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim();
    let body = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) if trimmed.len() >= 2 => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(Error::MalformedInput(format!("unbalanced parentheses in {text:?}"))),
    };
    if body.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in body.split(',') {
        let token = token.trim();
        let (base, exponent) = match token.split_once('^') {
            Some((b, e)) => (b.trim(), parse_positive(e.trim(), text)?),
            None => (token, 1),
        };
        let base = parse_positive(base, text)?;
        parts.extend(std::iter::repeat_n(base, exponent));
    }
    Partition::new(parts).map_err(|e| match e {
        Error::NotWeaklyDecreasing(_) => Error::NotWeaklyDecreasing(text.trim().to_string()),
        other => other,
    })
}

fn parse_positive(token: &str, context: &str) -> Result<usize> {
    match token.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::MalformedInput(format!("bad token {token:?} in {context:?}"))),
    }
}

/// Dictionary order on partitions of the same integer.
pub fn dictionary_compare(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            expected: a.size(),
            found: b.size(),
        });
    }
    Ok(a.parts.cmp(&b.parts))
}

/// Cycle types are ordered exactly like partitions.
pub fn cycle_type_order_compare(a: &Partition, b: &Partition) -> Result<Ordering> {
    dictionary_compare(a, b)
}

/// Dictionary order extended to tuples with componentwise equal sizes: the
/// first differing component decides.
pub fn tuple_compare(a: &[Partition], b: &[Partition]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!(
            "tuples of length {} and {}",
            a.len(),
            b.len()
        )));
    }
    for (x, y) in a.iter().zip(b) {
        if x.size() != y.size() {
            return Err(Error::ShapeMismatch(format!("components {x} and {y} differ in size")));
        }
    }
    for (x, y) in a.iter().zip(b) {
        let ord = dictionary_compare(x, y)?;
        if ord != Ordering::Equal {
            return Ok(ord);
        }
    }
    Ok(Ordering::Equal)
}

/// All partitions of `n` in descending dictionary order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The odd-degree partitions of `n`, strictly descending.
pub fn enumerate_odd_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(Partition::is_odd_degree).collect()
}

/// Binary expansion `n = 2^{k_1} + … + 2^{k_t}` with `k_1 > … > k_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoAdicExpansion {
    exponents: Vec<u32>,
}

impl TwoAdicExpansion {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The powers `2^{k_i}` in decreasing order.
    pub fn parts(&self) -> Vec<usize> {
        self.exponents.iter().map(|&k| 1usize << k).collect()
    }

    /// Offsets `m(i) = Σ_{l<i} 2^{k_l}` of the blocks.
    pub fn offsets(&self) -> Vec<usize> {
        self.parts()
            .iter()
            .scan(0, |acc, &p| {
                let m = *acc;
                *acc += p;
                Some(m)
            })
            .collect()
    }

    pub fn is_power_of_two(&self) -> bool {
        self.exponents.len() == 1
    }
}

pub fn two_adic_expansion(n: usize) -> TwoAdicExpansion {
    let exponents = (0..usize::BITS).rev().filter(|&k| n >> k & 1 == 1).collect();
    TwoAdicExpansion { exponents }
}

/// `∏ 2^{k_i}` over the binary expansion; the number of odd-degree
/// characters of `S_n`.
pub fn odd_character_count(n: usize) -> usize {
    two_adic_expansion(n).parts().iter().product()
}

/// One run `r^a` of equal parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub part: usize,
    pub multiplicity: usize,
    /// 1-based rank among odd clusters, counted from the largest part.
    pub odd_rank: Option<usize>,
}

impl Cluster {
    pub fn is_odd(&self) -> bool {
        self.part % 2 == 1 && self.multiplicity % 2 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterDecomposition {
    pub clusters: Vec<Cluster>,
}

impl ClusterDecomposition {
    pub fn odd_cluster_count(&self) -> usize {
        self.clusters.iter().filter(|c| c.is_odd()).count()
    }
}

/// `Δ(λ)` padded with zeros to `ℓ(λ)` rows, one slot per row of `λ`.
pub fn padded_delta(lambda: &Partition) -> Result<Vec<usize>> {
    if lambda.size() % 2 == 1 {
        return Err(Error::OddSize(lambda.size()));
    }
    let mut out = Vec::with_capacity(lambda.len());
    for c in lambda.clusters().clusters {
        let (r, a) = (c.part, c.multiplicity);
        if r % 2 == 0 {
            out.extend(std::iter::repeat_n(r / 2, a));
        } else if a % 2 == 0 {
            out.extend(std::iter::repeat_n(r.div_ceil(2), a / 2));
            out.extend(std::iter::repeat_n((r - 1) / 2, a / 2));
        } else {
            let middle = match c.odd_rank {
                Some(rank) if rank % 2 == 1 => r.div_ceil(2),
                _ => (r - 1) / 2,
            };
            out.extend(std::iter::repeat_n(r.div_ceil(2), (a - 1) / 2));
            out.push(middle);
            out.extend(std::iter::repeat_n((r - 1) / 2, (a - 1) / 2));
        }
    }
    Ok(out)
}

/// The half-size partition `Δ(λ) ⊢ |λ|/2` built cluster by cluster.
pub fn delta(lambda: &Partition) -> Result<Partition> {
    Partition::from_padded(&padded_delta(lambda)?)
}

/// A skew diagram `outer ∖ inner`, with `inner` padded to `ℓ(outer)` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Vec<usize>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: &Partition) -> Result<Self> {
        if !outer.contains(inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        let inner = (0..outer.len()).map(|i| inner.part(i)).collect();
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    /// Inner row lengths, one per row of `outer`.
    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn inner_partition(&self) -> Partition {
        Partition::from_padded(&self.inner).expect("inner rows come from a partition")
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.outer.parts().iter().zip(&self.inner).map(|(o, i)| o - i).collect()
    }

    /// Columns `inner_j .. outer_j` of row `j`.
    pub fn row_range(&self, row: usize) -> std::ops::Range<usize> {
        self.inner[row]..self.outer.part(row)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row < self.rows() && self.row_range(row).contains(&col)
    }

    pub fn node_count(&self) -> usize {
        self.row_lengths().iter().sum()
    }
}

/// `S(λ) = λ ∖ Δ(λ)`, keeping all `ℓ(λ)` rows.
pub fn skew_of_delta(lambda: &Partition) -> Result<SkewShape> {
    let inner = padded_delta(lambda)?;
    Ok(SkewShape {
        outer: lambda.clone(),
        inner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Counts standard Young tableaux by removing corners recursively.
    fn count_syt(parts: &mut Vec<usize>) -> u64 {
        if parts.iter().all(|&x| x == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > 0 && parts[i] > next {
                parts[i] -= 1;
                total += count_syt(parts);
                parts[i] += 1;
            }
        }
        total
    }

    #[test]
    fn parses_plain_and_exponent_notation() {
        assert_eq!(p("3,3").parts(), &[3, 3]);
        assert_eq!(p("3,3").size(), 6);
        assert_eq!(p("7^3,6,5,4,3^2,1^2").parts(), &[7, 7, 7, 6, 5, 4, 3, 3, 1, 1]);
        assert_eq!(p("(1^6)"), Partition::column(6));
        assert_eq!(p("()"), Partition::empty());
        assert!(matches!("3,4".parse::<Partition>(), Err(Error::NotWeaklyDecreasing(_))));
        assert!(matches!("3,x".parse::<Partition>(), Err(Error::MalformedInput(_))));
        assert!(matches!("3,0".parse::<Partition>(), Err(Error::MalformedInput(_))));
        assert!(matches!("(3,1".parse::<Partition>(), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn exponent_string() {
        assert_eq!(p("7,7,7,6,5,4,3,3,1,1").to_exponent_string(), "(7^3,6,5,4,3^2,1^2)");
        assert_eq!(p("2,1,1,1,1").to_string(), "(2,1,1,1,1)");
    }

    #[test]
    fn dictionary_order_examples() {
        assert_eq!(dictionary_compare(&p("6"), &p("5,1")).unwrap(), Ordering::Greater);
        assert_eq!(dictionary_compare(&p("2,1,1"), &p("2,1,1")).unwrap(), Ordering::Equal);
        assert_eq!(
            dictionary_compare(&p("2,2,1,1"), &p("2,1,1,1,1")).unwrap(),
            Ordering::Greater
        );
        assert!(matches!(
            dictionary_compare(&p("2"), &p("3")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn tuple_order_examples() {
        let t = |a: &str, b: &str| vec![p(a), p(b)];
        assert_eq!(tuple_compare(&t("4", "2"), &t("4", "1,1")).unwrap(), Ordering::Greater);
        assert_eq!(tuple_compare(&t("3,1", "2"), &t("4", "1,1")).unwrap(), Ordering::Less);
        assert_eq!(tuple_compare(&t("3,1", "2"), &t("3,1", "2")).unwrap(), Ordering::Equal);
        assert!(tuple_compare(&t("3,1", "2"), &[p("4")]).is_err());
        assert!(tuple_compare(&t("3,1", "2"), &t("3", "2")).is_err());
    }

    #[test]
    fn hook_lengths_and_degrees() {
        assert_eq!(p("2,2").hook_lengths(), vec![vec![3, 2], vec![2, 1]]);
        assert_eq!(p("5").hook_lengths(), vec![vec![5, 4, 3, 2, 1]]);
        assert!(Partition::empty().hook_lengths().is_empty());
        assert_eq!(p("3,3").degree(), BigUint::from(5u32));
        assert_eq!(p("7").degree(), BigUint::one());
        // (2^m - k, 1^k): hook product 2^m k! (2^m-1-k)! and degree C(2^m-1, k)
        let fact = |n: u64| (1..=n).product::<u64>();
        for m in 1..=4u32 {
            let n = 1u64 << m;
            for k in 0..n {
                let hook = Partition::hook(n as usize, k as usize).unwrap();
                let prod: u64 = hook.hook_lengths().iter().flatten().map(|&h| h as u64).product();
                assert_eq!(prod, n * fact(k) * fact(n - 1 - k));
                let binom = fact(n - 1) / (fact(k) * fact(n - 1 - k));
                assert_eq!(hook.degree(), BigUint::from(binom));
                assert!(hook.is_odd_degree());
            }
        }
    }

    #[test]
    fn degree_matches_tableau_count() {
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                let mut parts = lambda.parts().to_vec();
                assert_eq!(lambda.degree(), BigUint::from(count_syt(&mut parts)), "{lambda}");
            }
        }
    }

    #[test]
    fn odd_degree_agrees_with_degree_parity() {
        assert!(p("3,3").is_odd_degree());
        assert!(!p("2,2").is_odd_degree());
        for n in 1..=12 {
            for lambda in partitions_of(n) {
                let odd = lambda.degree().bit(0);
                assert_eq!(lambda.is_odd_degree(), odd, "{lambda}");
            }
        }
    }

    #[test]
    fn odd_partition_lists() {
        let show = |n| {
            enumerate_odd_partitions(n)
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(2), ["(2)", "(1,1)"]);
        assert_eq!(show(4), ["(4)", "(3,1)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(
            show(6),
            [
                "(6)",
                "(5,1)",
                "(4,2)",
                "(3,3)",
                "(2,2,2)",
                "(2,2,1,1)",
                "(2,1,1,1,1)",
                "(1,1,1,1,1,1)"
            ]
        );
        for n in 1..=30 {
            assert_eq!(enumerate_odd_partitions(n).len(), odd_character_count(n), "n = {n}");
        }
    }

    #[test]
    fn partitions_are_strictly_descending() {
        for n in 0..=12 {
            let all = partitions_of(n);
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
        assert_eq!(partitions_of(8).len(), 22);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn hooks() {
        assert!(p("5,1,1").is_hook());
        assert_eq!(p("5,1,1").hook_leg().unwrap(), 2);
        assert!(!p("3,3").is_hook());
        assert!(matches!(p("3,3").hook_leg(), Err(Error::NotAHook(_))));
        assert_eq!(p("1,1,1").hook_leg().unwrap(), 2);
        assert!(Partition::empty().hook_leg().is_err());
    }

    #[test]
    fn two_adic() {
        assert_eq!(two_adic_expansion(6).exponents(), &[2, 1]);
        assert_eq!(two_adic_expansion(1).exponents(), &[0]);
        assert_eq!(two_adic_expansion(44).exponents(), &[5, 3, 2]);
        assert_eq!(two_adic_expansion(13).offsets(), vec![0, 8, 12]);
    }

    #[test]
    fn conjugate_and_contains() {
        assert!(p("3,3").contains(&p("2,1")));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert!(!p("3,3").contains(&p("1,1,1")));
        assert!(p("3,3").contains(&Partition::empty()));
    }

    #[test]
    fn delta_worked_example() {
        let lambda = p("7^3,6,5,4,3^2,1^2");
        let clusters = lambda.clusters();
        let odd: Vec<_> = clusters
            .clusters
            .iter()
            .filter(|c| c.is_odd())
            .map(|c| (c.part, c.odd_rank))
            .collect();
        assert_eq!(odd, vec![(7, Some(1)), (5, Some(2))]);
        assert_eq!(padded_delta(&lambda).unwrap(), vec![4, 4, 3, 3, 2, 2, 2, 1, 1, 0]);
        assert_eq!(delta(&lambda).unwrap(), p("4,4,3,3,2,2,2,1,1"));
        let skew = skew_of_delta(&lambda).unwrap();
        assert_eq!(skew.row_lengths(), vec![3, 3, 4, 3, 3, 2, 1, 2, 0, 1]);
        assert_eq!(skew.node_count(), 22);
    }

    #[test]
    fn delta_small_cases() {
        assert_eq!(delta(&p("2")).unwrap(), p("1"));
        assert_eq!(delta(&p("1,1")).unwrap(), p("1"));
        assert_eq!(skew_of_delta(&p("2")).unwrap().row_lengths(), vec![1]);
        assert_eq!(skew_of_delta(&p("2,2")).unwrap().row_lengths(), vec![1, 1]);
        assert_eq!(delta(&p("3")), Err(Error::OddSize(3)));
        assert!(matches!(skew_of_delta(&p("2,1")), Err(Error::OddSize(3))));
    }

    #[test]
    fn delta_is_a_partition_of_half_size() {
        for m in (0..=20).step_by(2) {
            for lambda in partitions_of(m) {
                assert_eq!(lambda.clusters().odd_cluster_count() % 2, 0);
                let padded = padded_delta(&lambda).unwrap();
                assert!(padded.windows(2).all(|w| w[0] >= w[1]), "{lambda}: {padded:?}");
                let d = delta(&lambda).unwrap();
                assert_eq!(d.size() * 2, m);
                let skew = skew_of_delta(&lambda).unwrap();
                for (j, (&row, &s)) in lambda.parts().iter().zip(&skew.row_lengths()).enumerate() {
                    if row % 2 == 0 {
                        assert_eq!(s, padded[j]);
                    } else {
                        assert_eq!(s.abs_diff(padded[j]), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn skew_shape_rejects_non_subpartition() {
        assert!(matches!(
            SkewShape::new(p("3,3"), &p("1,1,1")),
            Err(Error::NotContained { .. })
        ));
        let s = SkewShape::new(p("3,3"), &p("2,1")).unwrap();
        assert_eq!(s.row_lengths(), vec![1, 2]);
        assert_eq!(s.node_count(), 3);
    }

    fn arb_partition(max_n: usize) -> impl Strategy<Value = Partition> {
        (0..=max_n).prop_flat_map(|n| {
            let all = partitions_of(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    fn arb_same_size_triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
        (1..=12usize).prop_flat_map(|n| {
            let all = partitions_of(n);
            let len = all.len();
            (0..len, 0..len, 0..len).prop_map(move |(a, b, c)| (all[a].clone(), all[b].clone(), all[c].clone()))
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(lambda in arb_partition(14)) {
            prop_assert_eq!(&lambda.to_string().parse::<Partition>().unwrap(), &lambda);
            prop_assert_eq!(&lambda.to_exponent_string().parse::<Partition>().unwrap(), &lambda);
        }

        #[test]
        fn dictionary_order_is_total((a, b, c) in arb_same_size_triple()) {
            let ab = dictionary_compare(&a, &b).unwrap();
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ab.reverse(), dictionary_compare(&b, &a).unwrap());
            let bc = dictionary_compare(&b, &c).unwrap();
            if ab != Ordering::Greater && bc != Ordering::Greater {
                prop_assert_ne!(dictionary_compare(&a, &c).unwrap(), Ordering::Greater);
            }
        }

        #[test]
        fn conjugation_is_an_involution(lambda in arb_partition(14)) {
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        }
    }
}
