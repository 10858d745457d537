//! The Sylow 2-subgroups `P_n ≤ S_n` as products of iterated wreath products.
//!
//! `P_{2^d} = P_{2^{d-1}} ≀ C_2` is embedded in `S_{2^d}` by letting
//! `(σ_1, σ_2; π)` send point `b` of block `a` to point `σ_{π(a)}(b)` of block
//! `π(a)`. For general `n = 2^{k_1} + … + 2^{k_t}` the factor `P_{2^{k_i}}` is
//! moved onto the points `m(i)+1 ..= m(i)+2^{k_i}` by conjugation with
//! `(1, 1+m(i)) ⋯ (2^{k_i}, 2^{k_i}+m(i))`.
//!
//! Conjugacy classes are found by full enumeration of each factor, so every
//! factor is limited to `2^{k_i} ≤ 16` points.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::partitions::{two_adic_expansion, Partition, TwoAdicExpansion};
use crate::serde_str::serde_via_str;

/// Largest wreath depth whose group is enumerated (`|P_16| = 32768`).
pub const MAX_DEPTH: u32 = 4;

/// A permutation of `{1, …, n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Self { images })
    }

    /// From 1-based disjoint cycles on `n` points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || x > n || y == 0 || y > n || std::mem::replace(&mut touched[x - 1], true) {
                    return Err(Error::NotAPermutation(format!("cycles {cycles:?} on {n} points")));
                }
                images[x - 1] = y - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// `g⁻¹ ∘ self ∘ g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(self).compose(g)
    }

    /// Disjoint cycles (1-based), fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<usize> = Vec::new();
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    /// Extends to `n` points fixing everything past the current degree.
    fn extended(&self, n: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Permutation { images }
    }
}

/// Cycle type of a permutation.
pub fn cycle_type_of(p: &Permutation) -> Partition {
    p.cycle_type()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}[{}]", self.degree())
    }
}

/// An element `(σ_1, σ_2; π)` of `P_{2^d}` in recursive wreath coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum WreathElement {
    /// The only element of the trivial group `P_1`.
    Trivial,
    Node {
        depth: u32,
        left: Box<WreathElement>,
        right: Box<WreathElement>,
        swap: bool,
    },
}

impl WreathElement {
    pub fn new(left: WreathElement, right: WreathElement, swap: bool) -> Result<Self> {
        if left.depth() != right.depth() {
            return Err(Error::DepthMismatch {
                expected: left.depth(),
                found: right.depth(),
            });
        }
        Ok(WreathElement::Node {
            depth: left.depth() + 1,
            left: Box::new(left),
            right: Box::new(right),
            swap,
        })
    }

    pub fn identity(depth: u32) -> Self {
        if depth == 0 {
            return WreathElement::Trivial;
        }
        let child = Self::identity(depth - 1);
        WreathElement::Node {
            depth,
            left: Box::new(child.clone()),
            right: Box::new(child),
            swap: false,
        }
    }

    pub fn depth(&self) -> u32 {
        match self {
            WreathElement::Trivial => 0,
            WreathElement::Node { depth, .. } => *depth,
        }
    }

    /// Whether the top coordinate swaps the two halves.
    pub fn swaps(&self) -> bool {
        matches!(self, WreathElement::Node { swap: true, .. })
    }

    /// True when the element lies in the base group `B_d`.
    pub fn in_base_group(&self) -> bool {
        !self.swaps()
    }

    pub fn children(&self) -> Option<(&WreathElement, &WreathElement)> {
        match self {
            WreathElement::Trivial => None,
            WreathElement::Node { left, right, .. } => Some((left, right)),
        }
    }

    /// Product matching composition of embeddings: `embed(a·b) = embed(a) ∘ embed(b)`.
    pub fn mul(&self, other: &WreathElement) -> Result<WreathElement> {
        match (self, other) {
            (WreathElement::Trivial, WreathElement::Trivial) => Ok(WreathElement::Trivial),
            (
                WreathElement::Node {
                    depth,
                    left: s1,
                    right: s2,
                    swap: p,
                },
                WreathElement::Node {
                    depth: d2,
                    left: t1,
                    right: t2,
                    swap: q,
                },
            ) if depth == d2 => {
                // μ_c = σ_c · τ_{π⁻¹(c)}
                let (left, right) = if *p {
                    (s1.mul(t2)?, s2.mul(t1)?)
                } else {
                    (s1.mul(t1)?, s2.mul(t2)?)
                };
                Ok(WreathElement::Node {
                    depth: *depth,
                    left: Box::new(left),
                    right: Box::new(right),
                    swap: p ^ q,
                })
            }
            _ => Err(Error::DepthMismatch {
                expected: self.depth(),
                found: other.depth(),
            }),
        }
    }

    /// The permutation of `{1, …, 2^d}` this element is identified with.
    pub fn embed(&self) -> Permutation {
        Permutation {
            images: self.embed_images(),
        }
    }

    fn embed_images(&self) -> Vec<usize> {
        match self {
            WreathElement::Trivial => vec![0],
            WreathElement::Node {
                depth,
                left,
                right,
                swap,
            } => {
                let half = 1usize << (depth - 1);
                let sigma = [left.embed_images(), right.embed_images()];
                let mut images = Vec::with_capacity(2 * half);
                for a in 0..2 {
                    let target = a ^ usize::from(*swap);
                    images.extend(sigma[target].iter().map(|&b| half * target + b));
                }
                images
            }
        }
    }

    /// Every element of `P_{2^d}`.
    pub fn enumerate(depth: u32) -> Vec<WreathElement> {
        if depth == 0 {
            return vec![WreathElement::Trivial];
        }
        let smaller = Self::enumerate(depth - 1);
        let mut out = Vec::with_capacity(2 * smaller.len() * smaller.len());
        for l in &smaller {
            for r in &smaller {
                for swap in [false, true] {
                    out.push(WreathElement::Node {
                        depth,
                        left: Box::new(l.clone()),
                        right: Box::new(r.clone()),
                        swap,
                    });
                }
            }
        }
        out
    }
}

/// Checks the depth and embeds.
pub fn embed(e: &WreathElement, depth: u32) -> Result<Permutation> {
    if e.depth() != depth {
        return Err(Error::DepthMismatch {
            expected: depth,
            found: e.depth(),
        });
    }
    Ok(e.embed())
}

/// Recovers wreath coordinates of a permutation of `{1, …, 2^d}`.
pub fn unembed(p: &Permutation, depth: u32) -> Result<WreathElement> {
    if p.degree() != 1usize << depth {
        return Err(Error::NotInSylow(format!(
            "{p} has degree {} but depth {depth} needs {}",
            p.degree(),
            1usize << depth
        )));
    }
    unembed_images(p.images(), depth).ok_or_else(|| Error::NotInSylow(p.to_string()))
}

fn unembed_images(images: &[usize], depth: u32) -> Option<WreathElement> {
    if depth == 0 {
        return (images == [0]).then_some(WreathElement::Trivial);
    }
    let half = 1usize << (depth - 1);
    let swap = images[0] >= half;
    let mut sigma = [Vec::with_capacity(half), Vec::with_capacity(half)];
    for a in 0..2 {
        let target = a ^ usize::from(swap);
        for &x in &images[a * half..(a + 1) * half] {
            if x / half != target {
                return None;
            }
            sigma[target].push(x - half * target);
        }
    }
    let [s1, s2] = sigma;
    Some(WreathElement::Node {
        depth,
        left: Box::new(unembed_images(&s1, depth - 1)?),
        right: Box::new(unembed_images(&s2, depth - 1)?),
        swap,
    })
}

/// `(full_cycle(d-1), id; swap)`, which embeds as a `2^d`-cycle.
pub fn full_cycle_element(depth: u32) -> WreathElement {
    if depth == 0 {
        return WreathElement::Trivial;
    }
    WreathElement::Node {
        depth,
        left: Box::new(full_cycle_element(depth - 1)),
        right: Box::new(WreathElement::identity(depth - 1)),
        swap: true,
    }
}

/// `(id, id; swap)`, i.e. `∏_{i ≤ 2^{d-1}} (i, i + 2^{d-1})`.
pub fn top_swap_element(depth: u32) -> Result<WreathElement> {
    if depth == 0 {
        return Err(Error::RangeError("top swap needs depth ≥ 1".into()));
    }
    WreathElement::new(
        WreathElement::identity(depth - 1),
        WreathElement::identity(depth - 1),
        true,
    )
}

/// Generators of `P_{2^d}`: the top swap of each level placed on the
/// leftmost block.
pub fn wreath_generators(depth: u32) -> Vec<WreathElement> {
    fn at_level(level: u32, depth: u32) -> WreathElement {
        if level == depth {
            top_swap_element(depth).expect("depth ≥ 1")
        } else {
            WreathElement::new(at_level(level, depth - 1), WreathElement::identity(depth - 1), false)
                .expect("equal depths")
        }
    }
    (1..=depth).map(|l| at_level(l, depth)).collect()
}

/// `±1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Self {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A linear character of `P_{2^d}`: the signs `(s_1, …, s_d)` taken on the
/// swap at each level, innermost level first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearCharLabel {
    bits: Vec<Sign>,
}

impl LinearCharLabel {
    pub fn new(bits: Vec<Sign>) -> Self {
        Self { bits }
    }

    pub fn trivial(depth: u32) -> Self {
        Self {
            bits: vec![Sign::Plus; depth as usize],
        }
    }

    pub fn bits(&self) -> &[Sign] {
        &self.bits
    }

    pub fn depth(&self) -> u32 {
        self.bits.len() as u32
    }

    /// The label obtained by dropping the outermost sign.
    pub fn inner(&self) -> Option<LinearCharLabel> {
        let (_, rest) = self.bits.split_last()?;
        Some(LinearCharLabel { bits: rest.to_vec() })
    }

    /// `∏ s_i`, the value on any `2^d`-cycle of `P_{2^d}`.
    pub fn sign_product(&self) -> i64 {
        self.bits.iter().map(|s| s.value()).product()
    }

    /// All `2^d` labels, with `s_1` varying slowest.
    pub fn all(depth: u32) -> Vec<LinearCharLabel> {
        (0..1u64 << depth)
            .map(|code| LinearCharLabel {
                bits: (0..depth)
                    .map(|i| {
                        if code >> (depth - 1 - i) & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect(),
            })
            .collect()
    }

    /// The same character as an irreducible label: an extension chain.
    pub fn to_wreath_label(&self) -> WreathIrrLabel {
        self.bits
            .iter()
            .fold(WreathIrrLabel::Trivial, |inner, &sign| WreathIrrLabel::Extended {
                inner: Box::new(inner),
                sign,
            })
    }
}

impl fmt::Display for LinearCharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return write!(f, "1");
        }
        self.bits.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for LinearCharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self { bits: Vec::new() });
        }
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(Error::MalformedInput(format!("sign string {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .and_then(|bits| {
                if bits.is_empty() {
                    Err(Error::MalformedInput("empty sign string".into()))
                } else {
                    Ok(Self { bits })
                }
            })
    }
}

serde_via_str!(LinearCharLabel);

/// `v(x)·v(y)` on `(x, y; id)` and `s_d · v(x·y)` on `(x, y; swap)`, where `v`
/// is the character of the inner signs.
pub fn linear_char_value(label: &LinearCharLabel, e: &WreathElement) -> Result<i64> {
    if label.depth() != e.depth() {
        return Err(Error::DepthMismatch {
            expected: label.depth(),
            found: e.depth(),
        });
    }
    linear_value_unchecked(&label.bits, e)
}

fn linear_value_unchecked(bits: &[Sign], e: &WreathElement) -> Result<i64> {
    match e {
        WreathElement::Trivial => Ok(1),
        WreathElement::Node { left, right, swap, .. } => {
            let (outer, inner) = bits.split_last().expect("depth checked");
            if *swap {
                Ok(outer.value() * linear_value_unchecked(inner, &left.mul(right)?)?)
            } else {
                Ok(linear_value_unchecked(inner, left)? * linear_value_unchecked(inner, right)?)
            }
        }
    }
}

/// An irreducible character of `K_d = C_2 ≀ ⋯ ≀ C_2`.
///
/// Each character of `G ≀ C_2` either extends `χ × χ` (two extensions, told
/// apart by the sign taken on the swap coset) or is induced from `χ × ψ` with
/// `χ ≠ ψ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum WreathIrrLabel {
    /// The trivial character of the trivial group `K_0`.
    Trivial,
    /// `sign = Plus` is the module `M ⊠ M` with the swap permuting tensor
    /// factors; `Minus` twists it by the sign of the top `C_2`.
    Extended { inner: Box<WreathIrrLabel>, sign: Sign },
    /// Induced from `first × second`; stored with `first < second`.
    InducedPair {
        first: Box<WreathIrrLabel>,
        second: Box<WreathIrrLabel>,
    },
}

impl WreathIrrLabel {
    pub fn extended(inner: WreathIrrLabel, sign: Sign) -> Self {
        WreathIrrLabel::Extended {
            inner: Box::new(inner),
            sign,
        }
    }

    /// Induced pair in canonical order; rejects equal or mismatched halves.
    pub fn induced(a: WreathIrrLabel, b: WreathIrrLabel) -> Result<Self> {
        if a.depth() != b.depth() {
            return Err(Error::DepthMismatch {
                expected: a.depth(),
                found: b.depth(),
            });
        }
        if a == b {
            return Err(Error::MalformedInput(format!("induced pair with equal halves {a}")));
        }
        let (first, second) = if a < b { (a, b) } else { (b, a) };
        Ok(WreathIrrLabel::InducedPair {
            first: Box::new(first),
            second: Box::new(second),
        })
    }

    pub fn depth(&self) -> u32 {
        match self {
            WreathIrrLabel::Trivial => 0,
            WreathIrrLabel::Extended { inner, .. } => inner.depth() + 1,
            WreathIrrLabel::InducedPair { first, .. } => first.depth() + 1,
        }
    }

    pub fn degree(&self) -> u64 {
        match self {
            WreathIrrLabel::Trivial => 1,
            WreathIrrLabel::Extended { inner, .. } => inner.degree().pow(2),
            WreathIrrLabel::InducedPair { first, second } => 2 * first.degree() * second.degree(),
        }
    }

    pub fn is_linear(&self) -> bool {
        self.as_linear().is_some()
    }

    /// The sign string when this is a chain of extensions of the trivial
    /// character.
    pub fn as_linear(&self) -> Option<LinearCharLabel> {
        match self {
            WreathIrrLabel::Trivial => Some(LinearCharLabel::new(Vec::new())),
            WreathIrrLabel::Extended { inner, sign } => {
                let mut label = inner.as_linear()?;
                label.bits.push(*sign);
                Some(label)
            }
            WreathIrrLabel::InducedPair { .. } => None,
        }
    }

    fn parse(s: &str) -> Result<(Self, &str)> {
        let bad = || Error::MalformedInput(format!("wreath label {s:?}"));
        if let Some(rest) = s.strip_prefix('1') {
            return Ok((WreathIrrLabel::Trivial, rest));
        }
        if let Some(rest) = s.strip_prefix("ext(") {
            let (inner, rest) = Self::parse(rest)?;
            let rest = rest.strip_prefix(',').ok_or_else(bad)?;
            let (sign, rest) = match rest.as_bytes().first() {
                Some(b'+') => (Sign::Plus, &rest[1..]),
                Some(b'-') => (Sign::Minus, &rest[1..]),
                _ => return Err(bad()),
            };
            let rest = rest.strip_prefix(')').ok_or_else(bad)?;
            return Ok((Self::extended(inner, sign), rest));
        }
        if let Some(rest) = s.strip_prefix("ind(") {
            let (a, rest) = Self::parse(rest)?;
            let rest = rest.strip_prefix(',').ok_or_else(bad)?;
            let (b, rest) = Self::parse(rest)?;
            let rest = rest.strip_prefix(')').ok_or_else(bad)?;
            return Ok((Self::induced(a, b)?, rest));
        }
        Err(bad())
    }
}

impl fmt::Display for WreathIrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WreathIrrLabel::Trivial => write!(f, "1"),
            WreathIrrLabel::Extended { inner, sign } => write!(f, "ext({inner},{})", sign.symbol()),
            WreathIrrLabel::InducedPair { first, second } => write!(f, "ind({first},{second})"),
        }
    }
}

impl FromStr for WreathIrrLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match Self::parse(&compact)? {
            (label, "") => Ok(label),
            _ => Err(Error::MalformedInput(format!("trailing text in wreath label {s:?}"))),
        }
    }
}

serde_via_str!(WreathIrrLabel);

/// All irreducible labels of `K_d`: extensions first (each inner label with
/// `+` then `-`), then induced pairs in lexicographic order of positions.
pub fn wreath_irr_labels(depth: u32) -> Result<Vec<WreathIrrLabel>> {
    if depth > MAX_DEPTH {
        return Err(Error::BoundExceeded(format!(
            "irreducibles of K_{depth} (bound {MAX_DEPTH})"
        )));
    }
    Ok(irr_labels_unbounded(depth))
}

fn irr_labels_unbounded(depth: u32) -> Vec<WreathIrrLabel> {
    if depth == 0 {
        return vec![WreathIrrLabel::Trivial];
    }
    let inner = irr_labels_unbounded(depth - 1);
    let mut out = Vec::new();
    for chi in &inner {
        for sign in [Sign::Plus, Sign::Minus] {
            out.push(WreathIrrLabel::extended(chi.clone(), sign));
        }
    }
    for (i, chi) in inner.iter().enumerate() {
        for psi in &inner[i + 1..] {
            out.push(WreathIrrLabel::induced(chi.clone(), psi.clone()).expect("distinct labels"));
        }
    }
    out
}

/// Value of an irreducible character of `K_d` at an element of `P_{2^d}`.
pub fn wreath_char_value(label: &WreathIrrLabel, e: &WreathElement) -> Result<i64> {
    if label.depth() != e.depth() {
        return Err(Error::DepthMismatch {
            expected: label.depth(),
            found: e.depth(),
        });
    }
    wreath_value_unchecked(label, e)
}

fn wreath_value_unchecked(label: &WreathIrrLabel, e: &WreathElement) -> Result<i64> {
    let WreathElement::Node { left, right, swap, .. } = e else {
        return Ok(1);
    };
    match label {
        WreathIrrLabel::Trivial => unreachable!("depth checked"),
        WreathIrrLabel::Extended { inner, sign } => {
            if *swap {
                Ok(sign.value() * wreath_value_unchecked(inner, &left.mul(right)?)?)
            } else {
                Ok(wreath_value_unchecked(inner, left)? * wreath_value_unchecked(inner, right)?)
            }
        }
        WreathIrrLabel::InducedPair { first, second } => {
            if *swap {
                Ok(0)
            } else {
                let a = wreath_value_unchecked(first, left)? * wreath_value_unchecked(second, right)?;
                let b = wreath_value_unchecked(second, left)? * wreath_value_unchecked(first, right)?;
                Ok(a + b)
            }
        }
    }
}

/// Restriction to the base group `B_d = K_{d-1} × K_{d-1}`, as ordered pairs.
pub fn restrict_to_base(label: &WreathIrrLabel) -> Result<BTreeMap<(WreathIrrLabel, WreathIrrLabel), u64>> {
    let mut out = BTreeMap::new();
    match label {
        WreathIrrLabel::Trivial => {
            return Err(Error::RangeError("the trivial group has no base group".into()));
        }
        WreathIrrLabel::Extended { inner, .. } => {
            out.insert(((**inner).clone(), (**inner).clone()), 1);
        }
        WreathIrrLabel::InducedPair { first, second } => {
            out.insert(((**first).clone(), (**second).clone()), 1);
            out.insert(((**second).clone(), (**first).clone()), 1);
        }
    }
    Ok(out)
}

/// A conjugacy class of `P_{2^d}`.
#[derive(Clone, Debug)]
pub struct WreathClass {
    /// Lexicographically least image sequence in the class.
    pub representative: Permutation,
    pub element: WreathElement,
    pub size: u64,
    pub cycle_type: Partition,
}

/// `P_{2^d}` with its classes and the values of all its irreducibles.
#[derive(Debug)]
pub struct WreathGroup {
    depth: u32,
    order: u64,
    generators: Vec<WreathElement>,
    classes: Vec<WreathClass>,
    class_of: HashMap<Vec<usize>, usize>,
    linear_labels: Vec<LinearCharLabel>,
    /// `[label][class]`
    linear_values: Vec<Vec<i64>>,
    irr_labels: Vec<WreathIrrLabel>,
    /// `[label][class]`
    irr_values: Vec<Vec<i64>>,
}

static WREATH_GROUPS: LazyLock<Mutex<HashMap<u32, Arc<WreathGroup>>>> = LazyLock::new(Default::default);

/// The enumerated group `P_{2^d}`, built once per depth and shared.
pub fn wreath_group(depth: u32) -> Result<Arc<WreathGroup>> {
    if depth > MAX_DEPTH {
        return Err(Error::BoundExceeded(format!(
            "P_{} has more than 2^{} points",
            1u64 << depth,
            MAX_DEPTH
        )));
    }
    if let Some(g) = WREATH_GROUPS.lock().expect("group cache").get(&depth) {
        return Ok(Arc::clone(g));
    }
    let group = Arc::new(WreathGroup::build(depth)?);
    WREATH_GROUPS
        .lock()
        .expect("group cache")
        .entry(depth)
        .or_insert_with(|| Arc::clone(&group));
    Ok(group)
}

fn all_embedded_images(depth: u32) -> Vec<Vec<usize>> {
    if depth == 0 {
        return vec![vec![0]];
    }
    let half = 1usize << (depth - 1);
    let smaller = all_embedded_images(depth - 1);
    let mut out = Vec::with_capacity(2 * smaller.len() * smaller.len());
    for s1 in &smaller {
        for s2 in &smaller {
            for swap in [false, true] {
                let sigma = [s1, s2];
                let mut images = Vec::with_capacity(2 * half);
                for a in 0..2 {
                    let target = a ^ usize::from(swap);
                    images.extend(sigma[target].iter().map(|&b| half * target + b));
                }
                out.push(images);
            }
        }
    }
    out
}

impl WreathGroup {
    fn build(depth: u32) -> Result<Self> {
        let elements = all_embedded_images(depth);
        let order = elements.len() as u64;
        let index: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
        let generators = wreath_generators(depth);
        let gen_perms: Vec<(Permutation, Permutation)> =
            generators.iter().map(|g| (g.embed(), g.embed().inverse())).collect();

        let mut class_idx = vec![usize::MAX; elements.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..elements.len() {
            if class_idx[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut orbit = vec![start];
            class_idx[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let px = Permutation {
                    images: elements[x].clone(),
                };
                for (g, g_inv) in &gen_perms {
                    let y = g_inv.compose(&px).compose(g);
                    let yi = index[y.images()];
                    if class_idx[yi] == usize::MAX {
                        class_idx[yi] = id;
                        orbit.push(yi);
                        queue.push_back(yi);
                    }
                }
            }
            orbits.push(orbit);
        }

        let mut classes: Vec<WreathClass> = orbits
            .iter()
            .map(|orbit| {
                let rep = orbit.iter().map(|&i| &elements[i]).min().expect("non-empty orbit");
                let representative = Permutation { images: rep.clone() };
                let element = unembed(&representative, depth)?;
                Ok(WreathClass {
                    cycle_type: representative.cycle_type(),
                    representative,
                    element,
                    size: orbit.len() as u64,
                })
            })
            .collect::<Result<_>>()?;
        classes.sort_by(|a, b| a.representative.cmp(&b.representative));
        let position: HashMap<Vec<usize>, usize> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.representative.images.clone(), i))
            .collect();
        let class_of = elements
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let rep = orbits[class_idx[i]]
                    .iter()
                    .map(|&j| &elements[j])
                    .min()
                    .expect("non-empty");
                (e.clone(), position[rep])
            })
            .collect();

        let linear_labels = LinearCharLabel::all(depth);
        let linear_values = linear_labels
            .iter()
            .map(|l| {
                classes
                    .iter()
                    .map(|c| linear_char_value(l, &c.element))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let irr_labels = irr_labels_unbounded(depth);
        let irr_values = irr_labels
            .iter()
            .map(|l| {
                classes
                    .iter()
                    .map(|c| wreath_char_value(l, &c.element))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(WreathGroup {
            depth,
            order,
            generators,
            classes,
            class_of,
            linear_labels,
            linear_values,
            irr_labels,
            irr_values,
        })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[WreathElement] {
        &self.generators
    }

    pub fn classes(&self) -> &[WreathClass] {
        &self.classes
    }

    /// Class index of an element given by its embedding.
    pub fn class_index(&self, p: &Permutation) -> Option<usize> {
        self.class_of.get(p.images()).copied()
    }

    /// Every element as a permutation of `{1, …, 2^d}`.
    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        self.class_of
            .keys()
            .map(|images| Permutation { images: images.clone() })
    }

    pub fn linear_labels(&self) -> &[LinearCharLabel] {
        &self.linear_labels
    }

    pub fn linear_values(&self, label: usize) -> &[i64] {
        &self.linear_values[label]
    }

    pub fn irr_labels(&self) -> &[WreathIrrLabel] {
        &self.irr_labels
    }

    pub fn irr_values(&self, label: usize) -> &[i64] {
        &self.irr_values[label]
    }

    /// `(1/|G|) Σ_classes |C| f(C) g(C)` for integer-valued class functions;
    /// `None` if the sum is not divisible by the group order.
    pub fn inner_product(&self, f: &[i64], g: &[i64]) -> Option<i64> {
        let sum: i128 = self
            .classes
            .iter()
            .zip(f.iter().zip(g))
            .map(|(c, (&a, &b))| c.size as i128 * a as i128 * b as i128)
            .sum();
        (sum % self.order as i128 == 0).then(|| (sum / self.order as i128) as i64)
    }
}

/// A linear character of `P_n`, one label per 2-adic factor (largest first).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SylowLinearLabel(pub Vec<LinearCharLabel>);

impl fmt::Display for SylowLinearLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for SylowLinearLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split('|')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(SylowLinearLabel)
    }
}

serde_via_str!(SylowLinearLabel);

/// An irreducible character of `P_n`, one label per 2-adic factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SylowIrrLabel(pub Vec<WreathIrrLabel>);

impl SylowIrrLabel {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(WreathIrrLabel::degree).product()
    }
}

impl fmt::Display for SylowIrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl FromStr for SylowIrrLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split('|')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(SylowIrrLabel)
    }
}

serde_via_str!(SylowIrrLabel);

/// A conjugacy class of `P_n`: one factor class per 2-adic block.
#[derive(Clone, Debug)]
pub struct ProductClass {
    pub factor_classes: Vec<usize>,
    pub representative: Permutation,
    pub size: u64,
    pub cycle_type: Partition,
}

/// The fixed Sylow 2-subgroup `P_n = P_{2^{k_1}, m(1)} × ⋯ × P_{2^{k_t}, m(t)}`.
#[derive(Debug)]
pub struct GroupData {
    n: usize,
    expansion: TwoAdicExpansion,
    factors: Vec<Arc<WreathGroup>>,
    generators: Vec<Permutation>,
    classes: Vec<ProductClass>,
    class_lookup: HashMap<Vec<usize>, usize>,
    order: u64,
}

/// `(1, 1+m) ⋯ (size, size+m)` on `n` points; the identity when `m = 0`.
pub fn block_shift_involution(n: usize, size: usize, offset: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    if offset > 0 {
        for i in 0..size {
            images.swap(i, i + offset);
        }
    }
    Permutation { images }
}

pub fn build_sylow(n: usize) -> Result<GroupData> {
    if n == 0 {
        return Err(Error::RangeError("P_n needs n ≥ 1".into()));
    }
    let expansion = two_adic_expansion(n);
    let factors = expansion
        .exponents()
        .iter()
        .map(|&k| wreath_group(k))
        .collect::<Result<Vec<_>>>()?;
    let offsets = expansion.offsets();
    let sizes = expansion.parts();

    let mut generators = Vec::new();
    for ((factor, &offset), &size) in factors.iter().zip(&offsets).zip(&sizes) {
        let shift = block_shift_involution(n, size, offset);
        for g in factor.generators() {
            generators.push(shift.compose(&g.embed().extended(n)).compose(&shift));
        }
    }

    let mut classes = vec![ProductClass {
        factor_classes: Vec::new(),
        representative: Permutation { images: Vec::new() },
        size: 1,
        cycle_type: Partition::empty(),
    }];
    for (factor, &offset) in factors.iter().zip(&offsets) {
        let mut next = Vec::with_capacity(classes.len() * factor.classes().len());
        for c in &classes {
            for (i, fc) in factor.classes().iter().enumerate() {
                let mut factor_classes = c.factor_classes.clone();
                factor_classes.push(i);
                let mut images = c.representative.images.clone();
                images.extend(fc.representative.images().iter().map(|&x| x + offset));
                let mut parts = c.cycle_type.parts().to_vec();
                parts.extend_from_slice(fc.cycle_type.parts());
                parts.sort_unstable_by(|a, b| b.cmp(a));
                next.push(ProductClass {
                    factor_classes,
                    representative: Permutation { images },
                    size: c.size * fc.size,
                    cycle_type: Partition::new(parts).expect("cycle lengths"),
                });
            }
        }
        classes = next;
    }
    let class_lookup = classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.factor_classes.clone(), i))
        .collect();
    let order = factors.iter().map(|f| f.order()).product();
    Ok(GroupData {
        n,
        expansion,
        factors,
        generators,
        classes,
        class_lookup,
        order,
    })
}

impl GroupData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn expansion(&self) -> &TwoAdicExpansion {
        &self.expansion
    }

    pub fn factors(&self) -> &[Arc<WreathGroup>] {
        &self.factors
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ProductClass] {
        &self.classes
    }

    /// Index of the class of `p`, or `None` if `p ∉ P_n`.
    pub fn class_index(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.n {
            return None;
        }
        let mut key = Vec::with_capacity(self.factors.len());
        for (factor, offset) in self.factors.iter().zip(self.expansion.offsets()) {
            let size = 1usize << factor.depth();
            let block: Vec<usize> = p.images()[offset..offset + size]
                .iter()
                .map(|&x| x.checked_sub(offset).filter(|&y| y < size))
                .collect::<Option<_>>()?;
            key.push(factor.class_index(&Permutation { images: block })?);
        }
        self.class_lookup.get(&key).copied()
    }

    /// Every element of `P_n` as a permutation of `{1, …, n}`.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Vec::new()];
        for (factor, offset) in self.factors.iter().zip(self.expansion.offsets()) {
            let block: Vec<Permutation> = factor.elements().collect();
            out = out
                .iter()
                .flat_map(|prefix| {
                    block.iter().map(move |b| {
                        let mut images = prefix.clone();
                        images.extend(b.images().iter().map(|&x| x + offset));
                        images
                    })
                })
                .collect();
        }
        out.into_iter().map(|images| Permutation { images }).collect()
    }

    /// All linear labels of `P_n` in factor order, each factor in
    /// [`LinearCharLabel::all`] order.
    pub fn linear_labels(&self) -> Vec<SylowLinearLabel> {
        self.label_tuples(|f| f.linear_labels().to_vec())
            .into_iter()
            .map(SylowLinearLabel)
            .collect()
    }

    pub fn irr_labels(&self) -> Vec<SylowIrrLabel> {
        self.label_tuples(|f| f.irr_labels().to_vec())
            .into_iter()
            .map(SylowIrrLabel)
            .collect()
    }

    fn label_tuples<T: Clone>(&self, labels: impl Fn(&WreathGroup) -> Vec<T>) -> Vec<Vec<T>> {
        let mut out = vec![Vec::new()];
        for factor in &self.factors {
            let choices = labels(factor);
            out = out
                .iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |c| {
                        let mut t = prefix.clone();
                        t.push(c.clone());
                        t
                    })
                })
                .collect();
        }
        out
    }

    fn factor_position<T: PartialEq>(labels: &[T], label: &T) -> Result<usize> {
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::MalformedInput("label of wrong depth".into()))
    }

    /// Values of a linear character of `P_n` on every class.
    pub fn linear_class_function(&self, label: &SylowLinearLabel) -> Result<Vec<i64>> {
        self.check_factor_count(label.0.len())?;
        let idx = self
            .factors
            .iter()
            .zip(&label.0)
            .map(|(f, l)| {
                if l.depth() != f.depth() {
                    return Err(Error::DepthMismatch {
                        expected: f.depth(),
                        found: l.depth(),
                    });
                }
                Self::factor_position(f.linear_labels(), l)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.product_values(&idx, |f, i| f.linear_values(i)))
    }

    /// Values of an irreducible character of `P_n` on every class.
    pub fn irr_class_function(&self, label: &SylowIrrLabel) -> Result<Vec<i64>> {
        self.check_factor_count(label.0.len())?;
        let idx = self
            .factors
            .iter()
            .zip(&label.0)
            .map(|(f, l)| {
                if l.depth() != f.depth() {
                    return Err(Error::DepthMismatch {
                        expected: f.depth(),
                        found: l.depth(),
                    });
                }
                Self::factor_position(f.irr_labels(), l)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.product_values(&idx, |f, i| f.irr_values(i)))
    }

    fn check_factor_count(&self, found: usize) -> Result<()> {
        if found != self.factors.len() {
            return Err(Error::ShapeMismatch(format!(
                "{found} factor labels for {} factors",
                self.factors.len()
            )));
        }
        Ok(())
    }

    fn product_values<'a>(&'a self, idx: &[usize], values: impl Fn(&'a WreathGroup, usize) -> &'a [i64]) -> Vec<i64> {
        self.classes
            .iter()
            .map(|c| {
                self.factors
                    .iter()
                    .zip(idx)
                    .zip(&c.factor_classes)
                    .map(|((f, &l), &k)| values(f, l)[k])
                    .product()
            })
            .collect()
    }

    /// Exact inner product of two integer class functions of `P_n`.
    pub fn inner_product(&self, f: &[i64], g: &[i64]) -> Option<i64> {
        let sum: i128 = self
            .classes
            .iter()
            .zip(f.iter().zip(g))
            .map(|(c, (&a, &b))| c.size as i128 * a as i128 * b as i128)
            .sum();
        (sum % self.order as i128 == 0).then(|| (sum / self.order as i128) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let p = perm(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(p.to_string(), "(1,3)(2,4)");
        assert_eq!(p.cycle_type(), "2,2".parse().unwrap());
        assert_eq!(Permutation::identity(5).cycle_type(), Partition::column(5));
        assert!(p.compose(&p).is_identity());
        let q = perm(3, &[&[1, 2, 3]]);
        assert_eq!(q.compose(&q.inverse()), Permutation::identity(3));
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 4]]).is_err());
    }

    #[test]
    fn embed_examples() {
        let top = top_swap_element(1).unwrap();
        assert_eq!(embed(&top, 1).unwrap(), perm(2, &[&[1, 2]]));
        let e = WreathElement::new(WreathElement::identity(1), WreathElement::identity(1), true).unwrap();
        assert_eq!(e.embed(), perm(4, &[&[1, 3], &[2, 4]]));
        let e = WreathElement::new(top_swap_element(1).unwrap(), WreathElement::identity(1), false).unwrap();
        assert_eq!(e.embed(), perm(4, &[&[1, 2]]));
        assert!(matches!(embed(&e, 3), Err(Error::DepthMismatch { .. })));
        assert!(WreathElement::new(WreathElement::identity(1), WreathElement::identity(2), false).is_err());
    }

    #[test]
    fn unembed_examples() {
        let e = unembed(&perm(4, &[&[1, 3], &[2, 4]]), 2).unwrap();
        assert_eq!(
            e,
            WreathElement::new(WreathElement::identity(1), WreathElement::identity(1), true).unwrap()
        );
        assert_eq!(
            unembed(&Permutation::identity(8), 3).unwrap(),
            WreathElement::identity(3)
        );
        assert!(matches!(unembed(&perm(4, &[&[1, 2, 3]]), 2), Err(Error::NotInSylow(_))));
        assert!(matches!(unembed(&perm(4, &[&[2, 3]]), 2), Err(Error::NotInSylow(_))));
        assert!(unembed(&Permutation::identity(5), 2).is_err());
    }

    #[test]
    fn embedding_round_trips_and_respects_products() {
        for d in 0..=3 {
            let all = WreathElement::enumerate(d);
            assert_eq!(all.len() as u64, 1u64 << ((1u64 << d) - 1));
            for e in &all {
                assert_eq!(&unembed(&e.embed(), d).unwrap(), e);
            }
            if d <= 2 {
                for a in &all {
                    for b in &all {
                        assert_eq!(a.mul(b).unwrap().embed(), a.embed().compose(&b.embed()));
                    }
                }
            }
        }
        let group = wreath_group(4).unwrap();
        let mut count = 0;
        for p in group.elements() {
            assert_eq!(unembed(&p, 4).unwrap().embed(), p);
            count += 1;
        }
        assert_eq!(count, 32768);
    }

    #[test]
    fn full_cycles() {
        assert_eq!(full_cycle_element(1).embed(), perm(2, &[&[1, 2]]));
        for d in 1..=5 {
            assert_eq!(full_cycle_element(d).embed().cycle_type(), Partition::row(1 << d));
        }
        assert_eq!(cycle_type_of(&full_cycle_element(3).embed()), Partition::row(8));
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(build_sylow(2).unwrap().order(), 2);
        assert_eq!(build_sylow(6).unwrap().order(), 16);
        assert_eq!(build_sylow(8).unwrap().order(), 128);
        for n in 1..=16usize {
            let g = build_sylow(n).unwrap();
            let nu: u32 = two_adic_expansion(n).parts().iter().map(|&p| p as u32 - 1).sum();
            assert_eq!(g.order(), 1u64 << nu, "n = {n}");
            assert_eq!(g.classes().iter().map(|c| c.size).sum::<u64>(), g.order());
            if n <= 12 {
                assert_eq!(g.elements().len() as u64, g.order());
            }
        }
        assert!(matches!(build_sylow(32), Err(Error::BoundExceeded(_))));
        assert!(build_sylow(0).is_err());
    }

    #[test]
    fn generators_generate_and_shift_by_conjugation() {
        for n in [3usize, 6, 7, 12] {
            let g = build_sylow(n).unwrap();
            let mut seen: std::collections::HashSet<Permutation> = [Permutation::identity(n)].into();
            let mut frontier = vec![Permutation::identity(n)];
            while let Some(x) = frontier.pop() {
                for s in g.generators() {
                    let y = s.compose(&x);
                    if seen.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len() as u64, g.order(), "n = {n}");
            assert!(seen.iter().all(|p| g.class_index(p).is_some()));
        }
        // P_6: second factor lives on {5, 6}
        let g = build_sylow(6).unwrap();
        assert_eq!(g.generators().last().unwrap(), &perm(6, &[&[5, 6]]));
        assert!(g.class_index(&perm(6, &[&[4, 5]])).is_none());
    }

    #[test]
    fn class_representatives_are_least() {
        let group = wreath_group(3).unwrap();
        let mut least: HashMap<usize, Permutation> = HashMap::new();
        for p in group.elements() {
            let c = group.class_index(&p).unwrap();
            let entry = least.entry(c).or_insert_with(|| p.clone());
            if p < *entry {
                *entry = p;
            }
        }
        for (i, c) in group.classes().iter().enumerate() {
            assert_eq!(least[&i], c.representative);
        }
    }

    #[test]
    fn irreducible_label_counts() {
        let counts: Vec<usize> = (1..=4).map(|d| wreath_irr_labels(d).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 5, 20, 230]);
        let d2 = wreath_irr_labels(2).unwrap();
        assert_eq!(d2.iter().filter(|l| l.is_linear()).count(), 4);
        assert_eq!(d2.iter().filter(|l| l.degree() == 2).count(), 1);
        assert!(wreath_irr_labels(5).is_err());
        for d in 1..=4 {
            let group = wreath_group(d).unwrap();
            assert_eq!(group.classes().len(), group.irr_labels().len());
            let sum: u64 = group.irr_labels().iter().map(|l| l.degree().pow(2)).sum();
            assert_eq!(sum, 1u64 << ((1u64 << d) - 1));
        }
    }

    #[test]
    fn character_values_examples() {
        for d in 1..=3 {
            for l in LinearCharLabel::all(d) {
                assert_eq!(linear_char_value(&l, &WreathElement::identity(d)).unwrap(), 1);
                assert_eq!(linear_char_value(&l, &full_cycle_element(d)).unwrap(), l.sign_product());
                assert_eq!(l.to_wreath_label().as_linear(), Some(l.clone()));
            }
            for chi in wreath_irr_labels(d - 1).unwrap() {
                for sign in [Sign::Plus, Sign::Minus] {
                    let ext = WreathIrrLabel::extended(chi.clone(), sign);
                    let v = wreath_char_value(&ext, &top_swap_element(d).unwrap()).unwrap();
                    assert_eq!(v, sign.value() * chi.degree() as i64);
                }
            }
        }
        let minus: LinearCharLabel = "-".parse().unwrap();
        assert_eq!(linear_char_value(&minus, &top_swap_element(1).unwrap()).unwrap(), -1);
        assert!(linear_char_value(&minus, &WreathElement::identity(2)).is_err());

        let induced = wreath_irr_labels(2)
            .unwrap()
            .into_iter()
            .find(|l| l.degree() == 2)
            .unwrap();
        let reflection = WreathElement::new(top_swap_element(1).unwrap(), WreathElement::identity(1), false).unwrap();
        assert_eq!(wreath_char_value(&induced, &reflection).unwrap(), 0);
        assert_eq!(wreath_char_value(&induced, &WreathElement::identity(2)).unwrap(), 2);
    }

    #[test]
    fn irreducibles_are_orthonormal() {
        for d in 1..=4 {
            let group = wreath_group(d).unwrap();
            let k = group.irr_labels().len();
            for a in 0..k {
                for b in 0..k {
                    let ip = group.inner_product(group.irr_values(a), group.irr_values(b));
                    assert_eq!(
                        ip,
                        Some(i64::from(a == b)),
                        "depth {d}: {} vs {}",
                        group.irr_labels()[a],
                        group.irr_labels()[b]
                    );
                }
            }
        }
    }

    #[test]
    fn linear_labels_are_distinct_and_match_wreath_labels() {
        for d in 0..=4 {
            let group = wreath_group(d).unwrap();
            assert_eq!(group.linear_labels().len(), 1 << d);
            let vectors: std::collections::HashSet<&[i64]> = (0..group.linear_labels().len())
                .map(|i| group.linear_values(i))
                .collect();
            assert_eq!(vectors.len(), 1 << d);
            for (i, l) in group.linear_labels().iter().enumerate() {
                let j = group
                    .irr_labels()
                    .iter()
                    .position(|x| *x == l.to_wreath_label())
                    .unwrap();
                assert_eq!(group.linear_values(i), group.irr_values(j));
            }
        }
    }

    #[test]
    fn even_degree_characters_vanish_on_full_cycles() {
        for d in 1..=3 {
            let group = wreath_group(d).unwrap();
            let full: Vec<usize> = (0..group.classes().len())
                .filter(|&i| group.classes()[i].cycle_type == Partition::row(1 << d))
                .collect();
            assert!(!full.is_empty());
            for (j, l) in group.irr_labels().iter().enumerate() {
                for &c in &full {
                    let v = group.irr_values(j)[c];
                    if l.degree() % 2 == 0 {
                        assert_eq!(v, 0, "{l}");
                    } else {
                        assert_eq!(v, l.as_linear().unwrap().sign_product());
                    }
                }
            }
        }
    }

    #[test]
    fn base_restriction_matches_inner_products() {
        for d in 1..=3u32 {
            let labels = wreath_irr_labels(d).unwrap();
            let inner = wreath_irr_labels(d - 1).unwrap();
            let base: Vec<WreathElement> = WreathElement::enumerate(d)
                .into_iter()
                .filter(WreathElement::in_base_group)
                .collect();
            for l in &labels {
                let claimed = restrict_to_base(l).unwrap();
                for a in &inner {
                    for b in &inner {
                        let sum: i64 = base
                            .iter()
                            .map(|e| {
                                let (x, y) = e.children().unwrap();
                                wreath_char_value(l, e).unwrap()
                                    * wreath_char_value(a, x).unwrap()
                                    * wreath_char_value(b, y).unwrap()
                            })
                            .sum();
                        let mult = sum / base.len() as i64;
                        assert_eq!(sum % base.len() as i64, 0);
                        let expected = claimed.get(&(a.clone(), b.clone())).copied().unwrap_or(0);
                        assert_eq!(mult as u64, expected, "{l} on ({a},{b})");
                    }
                }
            }
        }
        let triv = WreathIrrLabel::Trivial;
        let ext = WreathIrrLabel::extended(triv.clone(), Sign::Minus);
        assert_eq!(
            restrict_to_base(&ext).unwrap().into_iter().collect::<Vec<_>>(),
            vec![((triv.clone(), triv.clone()), 1)]
        );
        assert!(restrict_to_base(&triv).is_err());
        let plus = WreathIrrLabel::extended(triv.clone(), Sign::Plus);
        let pair = WreathIrrLabel::induced(plus.clone(), ext.clone()).unwrap();
        let r = restrict_to_base(&pair).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[&(plus.clone(), ext.clone())], 1);
        assert_eq!(r[&(ext, plus)], 1);
    }

    #[test]
    fn label_text_round_trips() {
        for d in 0..=3 {
            for l in wreath_irr_labels(d).unwrap() {
                assert_eq!(l.to_string().parse::<WreathIrrLabel>().unwrap(), l);
            }
            for l in LinearCharLabel::all(d) {
                assert_eq!(l.to_string().parse::<LinearCharLabel>().unwrap(), l);
            }
        }
        let t: SylowLinearLabel = "+-|-|1".parse().unwrap();
        assert_eq!(t.0.len(), 3);
        assert_eq!(t.to_string(), "+-|-|1");
        assert!("ext(1,*)".parse::<WreathIrrLabel>().is_err());
        assert!("ind(1,1)".parse::<WreathIrrLabel>().is_err());
        assert!("+x".parse::<LinearCharLabel>().is_err());
    }
}
