//! The correspondences `Φ_d`, `Ψ_n` between odd-degree characters of `S_n`
//! and linear characters of `P_n`, exact restriction of `χ^λ` to `P_n`, and
//! exhaustive checks of the resulting statements at small `n`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::littlewood_richardson::{
    hook_pairs_to_partitions, hook_restriction_closed_form, lr_coefficient, restrict_to_young,
};
use crate::murnaghan_nakayama::mn_value;
use crate::partitions::{enumerate_odd_partitions, partitions_of, tuple_compare, two_adic_expansion, Partition};
use crate::serde_str::serde_via_str;
use crate::sylow2::{
    build_sylow, full_cycle_element, linear_char_value, restrict_to_base, GroupData, LinearCharLabel, Sign,
    SylowIrrLabel, SylowLinearLabel, WreathIrrLabel, MAX_DEPTH,
};

/// Largest `n` for which [`restrict_to_sylow`] also decomposes into all
/// irreducibles of `P_n`.
pub const FULL_DECOMPOSITION_BOUND: usize = 16;

/// `⌊k/2⌋`.
pub fn gamma(k: u64) -> u64 {
    k / 2
}

/// The unique linear constituent of `χ_d^k = (2^d - k, 1^k)` restricted to
/// `P_{2^d}`: its inner label is `phi(d-1, γ(k))` and its value on a
/// `2^d`-cycle is `(-1)^k`.
pub fn phi(d: u32, k: u64) -> Result<LinearCharLabel> {
    if d >= 64 || k >> d != 0 {
        return Err(Error::RangeError(format!("k = {k} outside 0..2^{d}")));
    }
    if d == 0 {
        return Ok(LinearCharLabel::new(Vec::new()));
    }
    let inner = phi(d - 1, gamma(k))?;
    let target = if k.is_multiple_of(2) { 1 } else { -1 };
    let outer = Sign::from_value(target * inner.sign_product());
    let mut bits = inner.bits().to_vec();
    bits.push(outer);
    Ok(LinearCharLabel::new(bits))
}

/// Inverse of [`phi`] for a fixed depth.
pub fn phi_inverse(label: &LinearCharLabel) -> u64 {
    // k = 2γ(k) + [outer sign disagrees with the inner product]
    let Some(inner) = label.inner() else {
        return 0;
    };
    let outer = label.bits().last().expect("non-empty").value();
    let parity = u64::from(outer * inner.sign_product() < 0);
    2 * phi_inverse(&inner) + parity
}

/// A tuple of hooks `(α(1), …, α(t))` with `α(i) ⊢ 2^{k_i}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HookTuple {
    hooks: Vec<Partition>,
}

impl HookTuple {
    pub fn new(hooks: Vec<Partition>, n: usize) -> Result<Self> {
        let parts = two_adic_expansion(n).parts();
        if hooks.len() != parts.len() || n == 0 {
            return Err(Error::InvalidTuple(format!("{} components for n = {n}", hooks.len())));
        }
        for (h, &p) in hooks.iter().zip(&parts) {
            if h.size() != p || !h.is_hook() {
                return Err(Error::InvalidTuple(format!("{h} is not a hook of {p}")));
            }
        }
        Ok(Self { hooks })
    }

    /// The tuple whose `i`-th hook has leg length `legs[i]`.
    pub fn from_legs(legs: &[usize], n: usize) -> Result<Self> {
        let parts = two_adic_expansion(n).parts();
        if legs.len() != parts.len() {
            return Err(Error::InvalidTuple(format!("{} legs for n = {n}", legs.len())));
        }
        let hooks = parts
            .iter()
            .zip(legs)
            .map(|(&p, &l)| {
                Partition::hook(p, l).map_err(|_| Error::InvalidTuple(format!("leg {l} for a hook of {p}")))
            })
            .collect::<Result<_>>()?;
        Ok(Self { hooks })
    }

    pub fn hooks(&self) -> &[Partition] {
        &self.hooks
    }

    pub fn size(&self) -> usize {
        self.hooks.iter().map(Partition::size).sum()
    }

    pub fn legs(&self) -> Vec<usize> {
        self.hooks
            .iter()
            .map(|h| h.hook_leg().expect("validated hook"))
            .collect()
    }

    /// The linear character `Φ(χ^{α(1)}) × ⋯ × Φ(χ^{α(t)})` of `P_n`.
    pub fn linear_label(&self) -> SylowLinearLabel {
        SylowLinearLabel(
            self.hooks
                .iter()
                .map(|h| {
                    let d = h.size().trailing_zeros();
                    phi(d, h.hook_leg().expect("validated hook") as u64).expect("leg below size")
                })
                .collect(),
        )
    }

    /// The hook tuple naming a linear character of `P_n`.
    pub fn from_linear_label(label: &SylowLinearLabel, n: usize) -> Result<Self> {
        let legs: Vec<usize> = label.0.iter().map(|l| phi_inverse(l) as usize).collect();
        let exps = two_adic_expansion(n);
        if label
            .0
            .iter()
            .map(LinearCharLabel::depth)
            .ne(exps.exponents().iter().copied())
        {
            return Err(Error::InvalidTuple(format!("{label} does not match n = {n}")));
        }
        Self::from_legs(&legs, n)
    }
}

impl PartialOrd for HookTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Tuple order; tuples for different `n` fall back to lexicographic order
/// of their parts.
impl Ord for HookTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        tuple_compare(&self.hooks, &other.hooks).unwrap_or_else(|_| self.hooks.cmp(&other.hooks))
    }
}

impl fmt::Display for HookTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.hooks.iter().map(Partition::to_exponent_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for HookTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::MalformedInput(format!("hook tuple {s:?}")))?;
        let mut hooks = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let rest_open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::MalformedInput(format!("hook tuple {s:?}")))?;
            let close = rest_open
                .find(')')
                .ok_or_else(|| Error::MalformedInput(format!("hook tuple {s:?}")))?;
            hooks.push(rest_open[..close].parse::<Partition>()?);
            rest = &rest_open[close + 1..];
            rest = rest.strip_prefix(',').unwrap_or(rest);
        }
        let n = hooks.iter().map(Partition::size).sum();
        Self::new(hooks, n)
    }
}

serde_via_str!(HookTuple);

/// Every hook tuple for `n`, descending in tuple order.
pub fn hook_tuples(n: usize) -> Vec<HookTuple> {
    let parts = two_adic_expansion(n).parts();
    let count: usize = parts.iter().product();
    (0..count)
        .map(|i| HookTuple::from_legs(&mixed_radix(i, &parts), n).expect("legs in range"))
        .collect()
}

/// Digits of `i` in the mixed radix `parts`, most significant first.
fn mixed_radix(mut i: usize, parts: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; parts.len()];
    for (d, &p) in digits.iter_mut().zip(parts).rev() {
        *d = i % p;
        i /= p;
    }
    digits
}

/// `Ψ_n(χ^λ)`: the `i`-th odd-degree partition in descending dictionary
/// order goes to the `i`-th hook tuple in descending tuple order.
pub fn psi(lambda: &Partition, n: usize) -> Result<HookTuple> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    if !lambda.is_odd_degree() {
        return Err(Error::NotOddDegree(lambda.to_string()));
    }
    let position = enumerate_odd_partitions(n)
        .iter()
        .position(|p| p == lambda)
        .expect("odd-degree partition");
    let parts = two_adic_expansion(n).parts();
    HookTuple::from_legs(&mixed_radix(position, &parts), n)
}

pub fn psi_inverse(h: &HookTuple, n: usize) -> Result<Partition> {
    if h.size() != n || HookTuple::new(h.hooks.clone(), n).is_err() {
        return Err(Error::InvalidTuple(format!("{h} for n = {n}")));
    }
    let parts = two_adic_expansion(n).parts();
    let position = h.legs().iter().zip(&parts).fold(0, |acc, (&leg, &p)| acc * p + leg);
    Ok(enumerate_odd_partitions(n).swap_remove(position))
}

/// The full table of `Ψ_n` in descending order of `λ`.
pub fn psi_table(n: usize) -> Vec<(Partition, HookTuple)> {
    enumerate_odd_partitions(n).into_iter().zip(hook_tuples(n)).collect()
}

/// One named pass/fail result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Self {
            name: name.into(),
            pass,
        }
    }
}

/// `χ^λ↓_{P_n}` with exact multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    pub n: usize,
    pub lambda: Partition,
    pub degree: u64,
    /// Every linear character of `P_n`, including those of multiplicity 0.
    pub linear_multiplicities: BTreeMap<SylowLinearLabel, u64>,
    /// Positive multiplicities of all irreducibles, for `n ≤ 16`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub full_decomposition: Option<BTreeMap<SylowIrrLabel, u64>>,
    pub checks: Vec<Check>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Linear constituents with positive multiplicity.
    pub fn linear_constituents(&self) -> BTreeMap<&SylowLinearLabel, u64> {
        self.linear_multiplicities
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(l, &m)| (l, m))
            .collect()
    }

    /// Linear constituents keyed by hook tuples, largest tuple first.
    pub fn linear_constituents_by_hook_tuple(&self) -> Vec<(HookTuple, u64)> {
        let mut out: Vec<(HookTuple, u64)> = self
            .linear_constituents()
            .into_iter()
            .map(|(l, m)| (HookTuple::from_linear_label(l, self.n).expect("label of P_n"), m))
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    pub fn multiplicity_of(&self, h: &HookTuple) -> u64 {
        self.linear_multiplicities.get(&h.linear_label()).copied().unwrap_or(0)
    }

    pub fn distinct_linear_count(&self) -> u64 {
        self.linear_multiplicities.values().filter(|&&m| m > 0).count() as u64
    }

    pub fn total_linear_multiplicity(&self) -> u64 {
        self.linear_multiplicities.values().sum()
    }

    /// Non-linear constituents of the full decomposition.
    pub fn nonlinear_constituents(&self) -> Vec<(&SylowIrrLabel, u64)> {
        self.full_decomposition
            .iter()
            .flatten()
            .filter(|(l, _)| l.degree() > 1)
            .map(|(l, &m)| (l, m))
            .collect()
    }
}

/// `χ^λ` evaluated on every class of `P_n`.
fn character_on_classes(group: &GroupData, lambda: &Partition) -> Result<Vec<i64>> {
    let mut memo: HashMap<&Partition, i64> = HashMap::new();
    group
        .classes()
        .iter()
        .map(|c| {
            if let Some(&v) = memo.get(&c.cycle_type) {
                return Ok(v);
            }
            let v = mn_value(lambda, &c.cycle_type)?;
            memo.insert(&c.cycle_type, v);
            Ok(v)
        })
        .collect()
}

fn multiplicity(group: &GroupData, chi: &[i64], theta: &[i64]) -> Option<u64> {
    group.inner_product(chi, theta).and_then(|m| u64::try_from(m).ok())
}

fn restrict_in(group: &GroupData, lambda: &Partition) -> Result<RestrictionReport> {
    let n = group.n();
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    let chi = character_on_classes(group, lambda)?;
    let degree = lambda
        .degree()
        .to_u64()
        .ok_or_else(|| Error::BoundExceeded(format!("degree of {lambda}")))?;
    let mut integral = true;

    let mut linear_multiplicities = BTreeMap::new();
    for label in group.linear_labels() {
        let theta = group.linear_class_function(&label)?;
        let m = multiplicity(group, &chi, &theta);
        integral &= m.is_some();
        linear_multiplicities.insert(label, m.unwrap_or(0));
    }

    let full_decomposition = if n <= FULL_DECOMPOSITION_BOUND {
        let mut full = BTreeMap::new();
        for label in group.irr_labels() {
            let theta = group.irr_class_function(&label)?;
            match multiplicity(group, &chi, &theta) {
                Some(0) => {}
                Some(m) => {
                    full.insert(label, m);
                }
                None => integral = false,
            }
        }
        Some(full)
    } else {
        None
    };

    let total: u64 = linear_multiplicities.values().sum();
    let mut checks = vec![
        Check::new("multiplicities are non-negative integers", integral),
        Check::new("linear multiplicity parity matches degree", total % 2 == degree % 2),
    ];
    if let Some(full) = &full_decomposition {
        let accounted: u64 = full.iter().map(|(l, m)| l.degree() * m).sum();
        checks.push(Check::new("constituent degrees sum to the degree", accounted == degree));
        let linear_agree = full
            .iter()
            .filter(|(l, _)| l.degree() == 1)
            .all(|(l, &m)| linear_multiplicities.get(&linear_of(l)) == Some(&m));
        checks.push(Check::new(
            "linear constituents agree with the full decomposition",
            linear_agree,
        ));
    }
    Ok(RestrictionReport {
        n,
        lambda: lambda.clone(),
        degree,
        linear_multiplicities,
        full_decomposition,
        checks,
    })
}

fn linear_of(label: &SylowIrrLabel) -> SylowLinearLabel {
    SylowLinearLabel(label.0.iter().map(|l| l.as_linear().expect("degree-1 label")).collect())
}

/// Decomposes `χ^λ↓_{P_n}` by inner products over the classes of `P_n`.
pub fn restrict_to_sylow(lambda: &Partition, n: usize) -> Result<RestrictionReport> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: lambda.size(),
        });
    }
    restrict_in(&build_sylow(n)?, lambda)
}

/// Distinct linear constituents, or their total multiplicity.
pub fn count_linear_constituents(lambda: &Partition, n: usize, distinct: bool) -> Result<u64> {
    let report = restrict_to_sylow(lambda, n)?;
    Ok(if distinct {
        report.distinct_linear_count()
    } else {
        report.total_linear_multiplicity()
    })
}

/// Named list of checks from one verifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check::new(name, pass));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.checks
                .push(Check::new(format!("{}: {}", other.name, c.name), c.pass));
        }
    }
}

/// Every hook `χ_d^k` restricted to `P_{2^d}` has exactly one linear
/// constituent, of multiplicity 1, equal to `phi(d, k)`, and all its other
/// constituents have even degree.
pub fn verify_hook_linear_constituents(d: u32) -> Result<VerificationReport> {
    if d > MAX_DEPTH {
        return Err(Error::BoundExceeded(format!("depth {d} (bound {MAX_DEPTH})")));
    }
    let n = 1usize << d;
    let group = build_sylow(n)?;
    let reports = (0..n)
        .into_par_iter()
        .map(|k| restrict_in(&group, &Partition::hook(n, k)?))
        .collect::<Result<Vec<_>>>()?;
    let mut out = VerificationReport::new(format!("hooks of S_{n}"));
    let mut images = Vec::with_capacity(n);
    for (k, report) in reports.iter().enumerate() {
        let expected = SylowLinearLabel(vec![phi(d, k as u64)?]);
        let constituents = report.linear_constituents();
        out.check(
            format!("k={k}: exactly one distinct linear constituent"),
            constituents.len() == 1,
        );
        out.check(
            format!("k={k}: linear multiplicity is 1"),
            report.total_linear_multiplicity() == 1,
        );
        out.check(
            format!("k={k}: linear constituent is phi({d},{k})"),
            constituents.contains_key(&expected),
        );
        out.check(
            format!("k={k}: remaining constituents have even degree"),
            report.full_decomposition.is_some()
                && report.nonlinear_constituents().iter().all(|(l, _)| l.degree() % 2 == 0),
        );
        let full_cycle = linear_char_value(&expected.0[0], &full_cycle_element(d))?;
        out.check(
            format!("k={k}: phi({d},{k}) is (-1)^k on a full cycle"),
            full_cycle == if k % 2 == 0 { 1 } else { -1 },
        );
        out.check(format!("k={k}: restriction checks"), report.passed());
        images.push(expected);
    }
    images.sort();
    images.dedup();
    out.check(
        format!("k -> phi({d},k) is a bijection onto the {n} linear characters"),
        images.len() == n,
    );
    Ok(out)
}

/// For each `n ≤ max_n` and `λ ⊢ n`: a linear constituent exists; for
/// degree > 1 it is unique exactly when the degree is odd and `n` is a power
/// of two; the total linear multiplicity has the parity of the degree.
pub fn verify_linear_constituent_counts(max_n: usize) -> Result<VerificationReport> {
    let mut out = VerificationReport::new(format!("linear constituents for n <= {max_n}"));
    for n in 1..=max_n {
        let group = build_sylow(n)?;
        let power_of_two = two_adic_expansion(n).is_power_of_two();
        let reports = partitions_of(n)
            .into_par_iter()
            .map(|lambda| restrict_in(&group, &lambda))
            .collect::<Result<Vec<_>>>()?;
        let mut exists = true;
        let mut uniqueness = true;
        let mut multiplicity_one = true;
        let mut parity = true;
        let mut consistent = true;
        for r in &reports {
            let distinct = r.distinct_linear_count();
            exists &= distinct >= 1;
            if r.degree > 1 {
                let expected = r.degree % 2 == 1 && power_of_two;
                uniqueness &= (distinct == 1) == expected;
                if expected {
                    multiplicity_one &= r.total_linear_multiplicity() == 1;
                }
            }
            parity &= r.total_linear_multiplicity() % 2 == r.degree % 2;
            consistent &= r.passed();
        }
        out.check(format!("n={n}: every restriction has a linear constituent"), exists);
        out.check(
            format!("n={n}: unique linear constituent iff odd degree and n a power of 2"),
            uniqueness,
        );
        out.check(
            format!("n={n}: unique linear constituents have multiplicity 1"),
            multiplicity_one,
        );
        out.check(
            format!("n={n}: total linear multiplicity has the parity of the degree"),
            parity,
        );
        out.check(format!("n={n}: restriction checks"), consistent);
    }
    Ok(out)
}

/// The odd-degree partitions of `2^m + 1`: `(n)`, `(1^n)` and
/// `(n - (k+1), 2, 1^{k-1})` for `1 ≤ k ≤ 2^m - 2`.
pub fn one_more_than_power_of_two_set(m: u32) -> Vec<Partition> {
    let n = (1usize << m) + 1;
    let mut out = vec![Partition::row(n), Partition::column(n)];
    for k in 1..=(1usize << m).saturating_sub(2) {
        let mut parts = vec![n - (k + 1), 2];
        parts.extend(std::iter::repeat_n(1, k - 1));
        out.push(Partition::new(parts).expect("weakly decreasing"));
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// For `n = 2^m + 1`: the odd-degree set has the closed form above, and
/// `Ψ_n(χ^λ)` is a constituent of `χ^λ↓_{P_n}` for each of its members.
pub fn verify_one_more_than_power_of_two(m: u32) -> Result<VerificationReport> {
    if m > MAX_DEPTH {
        return Err(Error::BoundExceeded(format!("n = 2^{m} + 1 (bound m <= {MAX_DEPTH})")));
    }
    let n = (1usize << m) + 1;
    let mut out = VerificationReport::new(format!("n = {n}"));
    let set = one_more_than_power_of_two_set(m);
    out.check(
        "odd-degree partitions equal the closed-form set",
        enumerate_odd_partitions(n) == set,
    );
    let group = build_sylow(n)?;
    let results = set
        .par_iter()
        .map(|lambda| {
            let h = psi(lambda, n)?;
            let report = restrict_in(&group, lambda)?;
            Ok((lambda, h.clone(), report.multiplicity_of(&h)))
        })
        .collect::<Result<Vec<_>>>()?;
    for (lambda, h, mult) in results {
        out.check(format!("{lambda}: Psi gives {h}, a constituent"), mult > 0);
    }
    Ok(out)
}

/// For every `n ≤ max_n` with at least two binary digits and every
/// odd-degree `λ` of degree > 1, `χ^λ` restricted to
/// `S_{2^{k_1}} × ⋯ × S_{2^{k_t}}` is reducible.
pub fn verify_young_reducibility(max_n: usize) -> Result<VerificationReport> {
    let mut out = VerificationReport::new(format!("Young restrictions for n <= {max_n}"));
    for n in 1..=max_n {
        let parts = two_adic_expansion(n).parts();
        if parts.len() < 2 {
            continue;
        }
        let candidates: Vec<Partition> = enumerate_odd_partitions(n)
            .into_iter()
            .filter(|l| l.degree() > num_bigint::BigUint::from(1u32))
            .collect();
        let counts = candidates
            .par_iter()
            .map(|l| Ok(restrict_to_young(l, &parts)?.values().sum::<u64>()))
            .collect::<Result<Vec<u64>>>()?;
        for (l, c) in candidates.iter().zip(counts) {
            out.check(format!("n={n}: {l} has {c} constituents"), c >= 2);
        }
    }
    Ok(out)
}

/// The closed form for hooks restricted to `S_n × S_n` agrees with general
/// LR restriction for all `2n ≤ max_size`.
pub fn verify_hook_lr_closed_form(max_size: usize) -> Result<VerificationReport> {
    let mut out = VerificationReport::new(format!("hook restrictions for 2n <= {max_size}"));
    for n in 1..=max_size / 2 {
        let results = (0..2 * n)
            .into_par_iter()
            .map(|k| {
                let closed = hook_pairs_to_partitions(n, &hook_restriction_closed_form(n, k)?)?;
                let general = restrict_to_young(&Partition::hook(2 * n, k)?, &[n, n])?;
                Ok(closed == general)
            })
            .collect::<Result<Vec<bool>>>()?;
        for (k, ok) in results.into_iter().enumerate() {
            out.check(format!("2n={}, k={k}", 2 * n), ok);
        }
    }
    Ok(out)
}

type PairDecomposition = BTreeMap<(WreathIrrLabel, WreathIrrLabel), u64>;

fn single_factor(report: &RestrictionReport) -> Result<BTreeMap<WreathIrrLabel, u64>> {
    let full = report
        .full_decomposition
        .as_ref()
        .ok_or_else(|| Error::BoundExceeded(format!("full decomposition for n = {}", report.n)))?;
    Ok(full.iter().map(|(l, &m)| (l.0[0].clone(), m)).collect())
}

/// For `n = 2^d`, restricting `χ^λ↓_{P_n}` further to the base group agrees
/// with restricting `χ^λ` to `S_{n/2} × S_{n/2}` by LR coefficients and then
/// each factor to `P_{n/2}`.
pub fn verify_restriction_tower(d: u32) -> Result<VerificationReport> {
    if d == 0 || d > MAX_DEPTH {
        return Err(Error::RangeError(format!("tower check needs 1 <= d <= {MAX_DEPTH}")));
    }
    let n = 1usize << d;
    let half = n / 2;
    let top = build_sylow(n)?;
    let bottom = build_sylow(half)?;
    let half_decompositions: BTreeMap<Partition, BTreeMap<WreathIrrLabel, u64>> = partitions_of(half)
        .into_iter()
        .map(|mu| {
            let r = restrict_in(&bottom, &mu)?;
            Ok((mu, single_factor(&r)?))
        })
        .collect::<Result<_>>()?;
    let mut out = VerificationReport::new(format!("base-group tower at n = {n}"));
    for lambda in partitions_of(n) {
        let mut via_sylow = PairDecomposition::new();
        for (theta, m) in single_factor(&restrict_in(&top, &lambda)?)? {
            for (pair, c) in restrict_to_base(&theta)? {
                *via_sylow.entry(pair).or_insert(0) += m * c;
            }
        }
        let mut via_young = PairDecomposition::new();
        for (mu, left) in &half_decompositions {
            for (nu, right) in &half_decompositions {
                let c = lr_coefficient(&lambda, mu, nu)?;
                if c == 0 {
                    continue;
                }
                for (a, ma) in left {
                    for (b, mb) in right {
                        *via_young.entry((a.clone(), b.clone())).or_insert(0) += c * ma * mb;
                    }
                }
            }
        }
        out.check(format!("{lambda}"), via_sylow == via_young);
    }
    Ok(out)
}
