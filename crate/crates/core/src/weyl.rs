//! Elements of the Weyl groups of types A (symmetric groups) and C (signed
//! permutations), with the descent and cycle statistics the measures are
//! built from.
//!
//! One-line forms are 1-based throughout: `w = 4 1 3 2 5` means
//! `w(1) = 4`. A signed permutation records `w(i)` as a nonzero integer and
//! extends by `w(-i) = -w(i)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

/// Which of the two implemented Weyl group families an object lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum GroupType {
    A,
    C,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::A => write!(f, "A"),
            GroupType::C => write!(f, "C"),
        }
    }
}

/// Weakly decreasing list of positive integers; the empty partition is
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(|&p| p.into()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Conjugacy-class label: a partition of `n` in type A, a pair of
/// partitions (positive-cycle lengths, negative-cycle lengths) in type C.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassLabel {
    A(Partition),
    C { positive: Partition, negative: Partition },
}

impl ClassLabel {
    pub fn weight(&self) -> usize {
        match self {
            ClassLabel::A(p) => p.weight(),
            ClassLabel::C { positive, negative } => positive.weight() + negative.weight(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            ClassLabel::A(p) => p.to_json(),
            ClassLabel::C { positive, negative } => serde_json::json!({
                "positive": positive.to_json(),
                "negative": negative.to_json(),
            }),
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::A(p) => write!(f, "({p})"),
            ClassLabel::C { positive, negative } => write!(f, "(+{positive} | -{negative})"),
        }
    }
}

/// A cycle up to order-preserving relabeling of its support, stored as the
/// one-line word of the relabeled cycle on `{1, .., k}`. Two cycles have
/// equal shape exactly when these words are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleShape(Vec<usize>);

impl CycleShape {
    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The shape as an honest permutation, for statistics like descents of
    /// its inverse.
    pub fn as_perm(&self) -> PermA {
        PermA::new(self.0.clone()).expect("shape words are permutations by construction")
    }
}

impl fmt::Display for CycleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", strs.join(" "))
    }
}

/// Descent data for a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStatsA {
    /// Positions `i < n` with `w(i) > w(i+1)`, 1-based.
    pub descent_set: BTreeSet<usize>,
    pub descents: usize,
    /// Descents plus the affine test `w(n) > w(1)`.
    pub cyclic_descents: usize,
    /// Sum of descent positions.
    pub maj: usize,
    /// Inversion count.
    pub length: usize,
}

/// Descent data for a signed permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStatsC {
    pub descents: usize,
    /// Descents plus the affine test `w(1) > 0`.
    pub cyclic_descents: usize,
}

/// Common interface for elements of the two group families. Composition is
/// the usual function composition: `(u.compose(v))(i) = u(v(i))`.
pub trait WeylElement: Clone + Ord + std::hash::Hash + fmt::Debug + Send + Sync {
    const GROUP: GroupType;

    /// Rank of the ambient Weyl group: `n - 1` in type A, `n` in type C.
    fn group_rank(n: usize) -> usize;

    /// Order of the group on `n` letters, `None` if it overflows `u128`.
    fn group_order(n: usize) -> Option<u128>;

    fn degree(&self) -> usize;
    fn identity(n: usize) -> Self;
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn cycle_type(&self) -> ClassLabel;
    fn descent_count(&self) -> usize;
    fn cyclic_descent_count(&self) -> usize;

    /// Cyclic descent set as a bitmask over the extended simple roots:
    /// bit 0 is the affine node, bit `i >= 1` is the i-th simple root.
    fn cyclic_descent_mask(&self) -> u32;

    /// Every element exactly once, lexicographically by (signed) one-line
    /// form. Guarded at `10^7` elements.
    fn enumerate(n: usize) -> Result<Vec<Self>>;

    /// Image of an ambient-space integer vector under the element.
    fn act(&self, v: &[i64]) -> Vec<i64>;

    /// One-line form as signed integers, for reports.
    fn signed_images(&self) -> Vec<i64>;
}

const ENUMERATION_GUARD: u128 = 10_000_000;

// ---------------------------------------------------------------------------
// Type A
// ---------------------------------------------------------------------------

/// Permutation of `{1, .., n}` in one-line form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermA {
    images: Vec<usize>,
}

impl fmt::Debug for PermA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermA{:?}", self.images)
    }
}

impl PermA {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(PermA { images })
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn descent_stats(&self) -> DescentStatsA {
        let n = self.images.len();
        let mut descent_set = BTreeSet::new();
        for i in 1..n {
            if self.images[i - 1] > self.images[i] {
                descent_set.insert(i);
            }
        }
        let descents = descent_set.len();
        let maj = descent_set.iter().sum();
        let affine = n >= 2 && self.images[n - 1] > self.images[0];
        let mut length = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    length += 1;
                }
            }
        }
        DescentStatsA {
            descent_set,
            descents,
            cyclic_descents: descents + usize::from(affine),
            maj,
            length,
        }
    }

    pub fn maj(&self) -> usize {
        self.descent_stats().maj
    }

    pub fn length(&self) -> usize {
        self.descent_stats().length
    }

    /// Cycles as forward orbits, each starting at its smallest element,
    /// listed by smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Shapes of all cycles, in canonical sorted order.
    pub fn cycle_shape_multiset(&self) -> Vec<CycleShape> {
        let mut shapes: Vec<CycleShape> = self
            .cycles()
            .into_iter()
            .map(|support_cycle| {
                let mut support = support_cycle.clone();
                support.sort_unstable();
                let rank = |x: usize| support.binary_search(&x).unwrap() + 1;
                // one-line word of the cycle relabeled to {1,..,k}
                let mut word = vec![0; support.len()];
                for &i in &support_cycle {
                    word[rank(i) - 1] = rank(self.apply(i));
                }
                CycleShape(word)
            })
            .collect();
        shapes.sort();
        shapes
    }
}

impl WeylElement for PermA {
    const GROUP: GroupType = GroupType::A;

    fn group_rank(n: usize) -> usize {
        n.saturating_sub(1)
    }

    fn group_order(n: usize) -> Option<u128> {
        let mut acc: u128 = 1;
        for i in 2..=n as u128 {
            acc = acc.checked_mul(i)?;
        }
        Some(acc)
    }

    fn degree(&self) -> usize {
        self.images.len()
    }

    fn identity(n: usize) -> Self {
        PermA { images: (1..=n).collect() }
    }

    fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&j| self.images[j - 1]).collect();
        PermA { images }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j - 1] = i + 1;
        }
        PermA { images }
    }

    fn cycle_type(&self) -> ClassLabel {
        ClassLabel::A(Partition::new(self.cycles().iter().map(Vec::len).collect()))
    }

    fn descent_count(&self) -> usize {
        self.descent_stats().descents
    }

    fn cyclic_descent_count(&self) -> usize {
        self.descent_stats().cyclic_descents
    }

    fn cyclic_descent_mask(&self) -> u32 {
        let n = self.images.len();
        let mut mask = 0u32;
        for i in 1..n {
            if self.images[i - 1] > self.images[i] {
                mask |= 1 << i;
            }
        }
        if n >= 2 && self.images[n - 1] > self.images[0] {
            mask |= 1;
        }
        mask
    }

    fn enumerate(n: usize) -> Result<Vec<Self>> {
        let order = Self::group_order(n).filter(|&o| o <= ENUMERATION_GUARD).ok_or_else(|| {
            Error::SizeGuard(format!("S_{n} exceeds the enumeration guard of {ENUMERATION_GUARD}"))
        })?;
        let mut out = Vec::with_capacity(order as usize);
        let mut images: Vec<usize> = (1..=n).collect();
        loop {
            out.push(PermA { images: images.clone() });
            if !next_permutation(&mut images) {
                break;
            }
        }
        Ok(out)
    }

    fn act(&self, v: &[i64]) -> Vec<i64> {
        // w . e_i = e_{w(i)}
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.images[i] - 1] = x;
        }
        out
    }

    fn signed_images(&self) -> Vec<i64> {
        self.images.iter().map(|&x| x as i64).collect()
    }
}

/// In-place lexicographic successor; false once the last permutation is
/// reached.
fn next_permutation(images: &mut [usize]) -> bool {
    let n = images.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && images[i - 1] >= images[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while images[j] <= images[i - 1] {
        j -= 1;
    }
    images.swap(i - 1, j);
    images[i..].reverse();
    true
}

// ---------------------------------------------------------------------------
// Type C
// ---------------------------------------------------------------------------

/// Signed permutation: `images[i-1] = w(i)`, absolute values a permutation
/// of `{1, .., n}`, extended implicitly by `w(-i) = -w(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermC {
    images: Vec<i64>,
}

impl fmt::Debug for PermC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermC{:?}", self.images)
    }
}

/// Comparison key realizing the order `1 < 2 < .. < n < -n < .. < -1`,
/// the order fixed by the type C simple roots.
fn c_order_key(x: i64) -> (u8, i64) {
    if x > 0 {
        (0, x)
    } else {
        (1, x)
    }
}

impl PermC {
    pub fn new(images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a signed permutation on {n} letters"
                )));
            }
            seen[a - 1] = true;
        }
        Ok(PermC { images })
    }

    pub fn one_line(&self) -> &[i64] {
        &self.images
    }

    /// `w(i)` for any nonzero `i` with `|i| <= n`.
    pub fn apply(&self, i: i64) -> i64 {
        if i > 0 {
            self.images[(i - 1) as usize]
        } else {
            -self.images[(-i - 1) as usize]
        }
    }

    /// The underlying unsigned permutation `|w|`.
    pub fn unsigned(&self) -> PermA {
        PermA::new(self.images.iter().map(|&x| x.unsigned_abs() as usize).collect())
            .expect("absolute values form a permutation")
    }

    pub fn descent_stats(&self) -> DescentStatsC {
        let n = self.images.len();
        let mut descents = 0;
        for i in 1..n {
            if c_order_key(self.images[i - 1]) > c_order_key(self.images[i]) {
                descents += 1;
            }
        }
        if self.images[n - 1] < 0 {
            descents += 1;
        }
        let affine = self.images[0] > 0;
        DescentStatsC { descents, cyclic_descents: descents + usize::from(affine) }
    }
}

impl WeylElement for PermC {
    const GROUP: GroupType = GroupType::C;

    fn group_rank(n: usize) -> usize {
        n
    }

    fn group_order(n: usize) -> Option<u128> {
        let factorial = PermA::group_order(n)?;
        factorial.checked_mul(1u128.checked_shl(n as u32)?)
    }

    fn degree(&self) -> usize {
        self.images.len()
    }

    fn identity(n: usize) -> Self {
        PermC { images: (1..=n as i64).collect() }
    }

    fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        let images = other.images.iter().map(|&j| self.apply(j)).collect();
        PermC { images }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let (a, sign) = (x.unsigned_abs() as usize, x.signum());
            images[a - 1] = sign * (i as i64 + 1);
        }
        PermC { images }
    }

    fn cycle_type(&self) -> ClassLabel {
        let unsigned = self.unsigned();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for cycle in unsigned.cycles() {
            let sign: i64 = cycle.iter().map(|&i| self.images[i - 1].signum()).product();
            if sign > 0 {
                positive.push(cycle.len());
            } else {
                negative.push(cycle.len());
            }
        }
        ClassLabel::C {
            positive: Partition::new(positive),
            negative: Partition::new(negative),
        }
    }

    fn descent_count(&self) -> usize {
        self.descent_stats().descents
    }

    fn cyclic_descent_count(&self) -> usize {
        self.descent_stats().cyclic_descents
    }

    fn cyclic_descent_mask(&self) -> u32 {
        let n = self.images.len();
        let mut mask = 0u32;
        for i in 1..n {
            if c_order_key(self.images[i - 1]) > c_order_key(self.images[i]) {
                mask |= 1 << i;
            }
        }
        if self.images[n - 1] < 0 {
            mask |= 1 << n;
        }
        if self.images[0] > 0 {
            mask |= 1;
        }
        mask
    }

    fn enumerate(n: usize) -> Result<Vec<Self>> {
        let order = Self::group_order(n).filter(|&o| o <= ENUMERATION_GUARD).ok_or_else(|| {
            Error::SizeGuard(format!("C_{n} exceeds the enumeration guard of {ENUMERATION_GUARD}"))
        })?;
        let mut out = Vec::with_capacity(order as usize);
        let mut prefix = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, prefix: &mut Vec<i64>, used: &mut Vec<bool>, out: &mut Vec<PermC>) {
            if prefix.len() == n {
                out.push(PermC { images: prefix.clone() });
                return;
            }
            // signed values in increasing integer order: -n, .., -1, 1, .., n
            for a in (1..=n).rev() {
                if !used[a - 1] {
                    used[a - 1] = true;
                    prefix.push(-(a as i64));
                    rec(n, prefix, used, out);
                    prefix.pop();
                    used[a - 1] = false;
                }
            }
            for a in 1..=n {
                if !used[a - 1] {
                    used[a - 1] = true;
                    prefix.push(a as i64);
                    rec(n, prefix, used, out);
                    prefix.pop();
                    used[a - 1] = false;
                }
            }
        }
        rec(n, &mut prefix, &mut used, &mut out);
        debug_assert_eq!(out.len() as u128, order);
        Ok(out)
    }

    fn act(&self, v: &[i64]) -> Vec<i64> {
        // w . e_i = sign(w(i)) e_{|w(i)|}
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            let target = self.images[i];
            out[(target.unsigned_abs() - 1) as usize] = target.signum() * x;
        }
        out
    }

    fn signed_images(&self) -> Vec<i64> {
        self.images.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm_a(images: &[usize]) -> PermA {
        PermA::new(images.to_vec()).unwrap()
    }

    fn perm_c(images: &[i64]) -> PermC {
        PermC::new(images.to_vec()).unwrap()
    }

    #[test]
    fn descent_stats_a_examples() {
        let w = perm_a(&[4, 1, 3, 2, 5]);
        assert_eq!(w.descent_stats().cyclic_descents, 3);

        for n in 1..=5 {
            let id = PermA::identity(n);
            let stats = id.descent_stats();
            assert_eq!(stats.descents, 0);
            assert_eq!(stats.maj, 0);
            assert_eq!(stats.cyclic_descents, usize::from(n >= 2));
        }

        let w = perm_a(&[3, 2, 1]);
        let stats = w.descent_stats();
        assert_eq!(stats.descent_set, BTreeSet::from([1, 2]));
        assert_eq!(stats.maj, 3);
        assert_eq!(stats.cyclic_descents, 2);
        assert_eq!(stats.length, 3);
    }

    #[test]
    fn descent_stats_c_examples() {
        let w = perm_c(&[-2, 3, 1, 4, -6, -5, 7]);
        let stats = w.descent_stats();
        assert_eq!(stats.descents, 3);
        assert_eq!(stats.cyclic_descents, 3);

        for n in 1..=4 {
            let id = PermC::identity(n);
            let stats = id.descent_stats();
            assert_eq!(stats.descents, 0);
            assert_eq!(stats.cyclic_descents, 1);
        }

        let w = perm_c(&[-1]);
        let stats = w.descent_stats();
        assert_eq!(stats.descents, 1);
        assert_eq!(stats.cyclic_descents, 1);
    }

    #[test]
    fn cyclic_descents_bounded_in_type_a() {
        for n in 2..=7 {
            for w in PermA::enumerate(n).unwrap() {
                let cd = w.cyclic_descent_count();
                assert!(cd >= 1 && cd < n, "{w:?}");
            }
        }
    }

    #[test]
    fn cyclic_descents_track_first_entry_in_type_c() {
        for n in 1..=4 {
            for w in PermC::enumerate(n).unwrap() {
                let stats = w.descent_stats();
                let expected = stats.descents + usize::from(w.one_line()[0] > 0);
                assert_eq!(stats.cyclic_descents, expected, "{w:?}");
            }
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(perm_a(&[2, 3, 1]).cycle_type(), ClassLabel::A(Partition::new(vec![3])));

        let w = perm_c(&[-2, 3, 1, 4, -6, -5, 7]);
        assert_eq!(
            w.cycle_type(),
            ClassLabel::C {
                positive: Partition::new(vec![2, 1, 1]),
                negative: Partition::new(vec![3]),
            }
        );

        assert_eq!(
            PermC::identity(3).cycle_type(),
            ClassLabel::C { positive: Partition::new(vec![1, 1, 1]), negative: Partition::empty() }
        );
    }

    #[test]
    fn cycle_type_is_a_class_function() {
        for n in 1..=4 {
            let group = PermA::enumerate(n).unwrap();
            for w in &group {
                let label = w.cycle_type();
                for u in &group {
                    let conj = u.compose(w).compose(&u.inverse());
                    assert_eq!(conj.cycle_type(), label);
                }
            }
        }
        for n in 1..=3 {
            let group = PermC::enumerate(n).unwrap();
            for w in &group {
                let label = w.cycle_type();
                for u in &group {
                    let conj = u.compose(w).compose(&u.inverse());
                    assert_eq!(conj.cycle_type(), label);
                }
            }
        }
    }

    #[test]
    fn cycle_shapes() {
        assert_eq!(perm_a(&[2, 1]).cycle_shape_multiset(), vec![CycleShape(vec![2, 1])]);
        assert_eq!(
            perm_a(&[2, 1, 4, 3]).cycle_shape_multiset(),
            vec![CycleShape(vec![2, 1]), CycleShape(vec![2, 1])]
        );
        assert_eq!(perm_a(&[3, 1, 2]).cycle_shape_multiset(), vec![CycleShape(vec![3, 1, 2])]);
        // shapes are invariant under order-preserving relabeling: 5 3 4 on
        // supports {3,4,5} relabels to 3 1 2
        let w = perm_a(&[1, 2, 5, 3, 4]);
        assert_eq!(
            w.cycle_shape_multiset(),
            vec![CycleShape(vec![1]), CycleShape(vec![1]), CycleShape(vec![3, 1, 2])]
        );
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(PermA::enumerate(3).unwrap().len(), 6);
        assert_eq!(PermC::enumerate(2).unwrap().len(), 8);
        assert_eq!(
            PermC::enumerate(1).unwrap(),
            vec![perm_c(&[-1]), perm_c(&[1])]
        );

        let elements = PermA::enumerate(4).unwrap();
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(elements, sorted, "lexicographic and duplicate-free");

        let elements = PermC::enumerate(2).unwrap();
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(elements, sorted);

        assert!(PermA::enumerate(13).is_err());
        assert!(PermC::enumerate(8).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let u = perm_a(&[2, 3, 1]);
        let v = perm_a(&[2, 1, 3]);
        // (u o v)(1) = u(2) = 3
        assert_eq!(u.compose(&v), perm_a(&[3, 2, 1]));
        assert_eq!(u.compose(&u.inverse()), PermA::identity(3));

        let w = perm_c(&[-2, 3, 1, 4, -6, -5, 7]);
        assert_eq!(w.compose(&w.inverse()), PermC::identity(7));
        assert_eq!(w.inverse().inverse(), w);
        // w(1) = -2, so w^{-1}(2) = -1
        assert_eq!(w.inverse().apply(2), -1);
    }

    #[test]
    fn signed_action_on_vectors() {
        let w = perm_c(&[-2, 1]);
        // e_1 -> -e_2, e_2 -> e_1
        assert_eq!(w.act(&[1, 0]), vec![0, -1]);
        assert_eq!(w.act(&[0, 1]), vec![1, 0]);

        let u = perm_a(&[2, 3, 1]);
        assert_eq!(u.act(&[1, 0, 0]), vec![0, 1, 0]);
    }

    #[test]
    fn rejects_malformed_elements() {
        assert!(PermA::new(vec![1, 1]).is_err());
        assert!(PermA::new(vec![0, 2]).is_err());
        assert!(PermC::new(vec![2, -2]).is_err());
        assert!(PermC::new(vec![3, 1]).is_err());
    }
}
