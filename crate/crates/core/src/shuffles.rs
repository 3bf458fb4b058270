//! Physical shuffle models realized through the word model (all `k^n`
//! pile-label words equally likely), exact shuffle distributions, seeded
//! samplers, the standardization and necklace maps, unimodal permutations,
//! and the two-to-one map onto them.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cellini::{AnyMeasure, Measure};
use crate::numtheory::binomial;
use crate::rational::Rational;
use crate::weyl::{CycleShape, PermA, PermC, WeylElement};
use crate::{Error, Result};

const WORD_GUARD: u64 = 10_000_000;

/// The implemented shuffle models.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleKind {
    /// Multinomial cut into `k` piles followed by a uniform interleaving.
    GsrA(u64),
    /// Same cut, but stacks of one parity are flipped (reversed and
    /// negated): odd stacks for even `k`, even stacks for odd `k`.
    TypeC(u64),
    /// Cut an even number of cards off top and bottom into a second pile
    /// (bottom half on top), then riffle the two piles.
    HalfAndFlipX2,
}

impl ShuffleKind {
    fn piles(&self) -> u64 {
        match self {
            ShuffleKind::GsrA(k) | ShuffleKind::TypeC(k) => *k,
            ShuffleKind::HalfAndFlipX2 => 2,
        }
    }
}

/// A sampled element from either family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampledElement {
    A(PermA),
    C(PermC),
}

impl SampledElement {
    pub fn signed_images(&self) -> Vec<i64> {
        match self {
            SampledElement::A(w) => w.signed_images(),
            SampledElement::C(w) => w.signed_images(),
        }
    }
}

// ---------------------------------------------------------------------------
// Word models
// ---------------------------------------------------------------------------

/// Outcome of a GSR shuffle for the pile word `word` over `{0, .., k-1}`:
/// the standardization of the word.
fn gsr_word_to_perm(word: &[u8]) -> PermA {
    standard_permutation(word).expect("pile words are nonempty")
}

/// Outcome of a type C shuffle for the pile word: cut into consecutive
/// stacks of the pile sizes, flip the stacks of the off parity, then deal
/// stack cards to the positions labeled with that stack.
fn typec_word_to_perm(word: &[u8], k: u64) -> PermC {
    let n = word.len();
    let k = k as usize;
    let mut sizes = vec![0usize; k];
    for &s in word {
        sizes[s as usize] += 1;
    }
    // stack i holds cards start+1 ..= start+sizes[i]; flipped stacks are
    // read reversed and negated
    let mut readers: Vec<Box<dyn Iterator<Item = i64>>> = Vec::with_capacity(k);
    let mut start = 0i64;
    for (i, &size) in sizes.iter().enumerate() {
        let cards = start + 1..=start + size as i64;
        // stack numbers are 1-based: flip even stacks for odd k, odd for even
        let flip = if k % 2 == 1 { (i + 1) % 2 == 0 } else { (i + 1) % 2 == 1 };
        if flip {
            readers.push(Box::new(cards.rev().map(|c| -c)));
        } else {
            readers.push(Box::new(cards));
        }
        start += size as i64;
    }
    let mut images = Vec::with_capacity(n);
    for &s in word {
        images.push(readers[s as usize].next().expect("pile sizes match the word"));
    }
    PermC::new(images).expect("shuffles produce signed permutations")
}

/// Outcome of the half-and-flip 2-shuffle for an even-parity word over
/// `{0, 1}`: the second pile is the bottom `j` cards on top of the top `j`
/// cards, where `2j` is the number of ones.
fn halfflip_word_to_perm(word: &[u8]) -> PermA {
    let n = word.len() as i64;
    let ones = word.iter().filter(|&&s| s == 1).count() as i64;
    assert!(ones % 2 == 0, "half-and-flip words have an even number of ones");
    let j = ones / 2;
    let mut pile1 = j + 1..=n - j;
    let mut pile2 = (n - j + 1..=n).chain(1..=j);
    let images = word
        .iter()
        .map(|&s| if s == 0 { pile1.next().unwrap() } else { pile2.next().unwrap() } as usize)
        .collect();
    PermA::new(images).expect("interleavings produce permutations")
}

fn for_each_word(n: usize, k: u64, mut f: impl FnMut(&[u8])) {
    let mut word = vec![0u8; n];
    loop {
        f(&word);
        let mut pos = 0;
        loop {
            if pos == n {
                return;
            }
            word[pos] += 1;
            if (word[pos] as u64) < k {
                break;
            }
            word[pos] = 0;
            pos += 1;
        }
    }
}

fn word_guard(n: usize, k: u64) -> Result<()> {
    let total = k.checked_pow(n as u32).filter(|&t| t <= WORD_GUARD);
    total
        .map(|_| ())
        .ok_or_else(|| Error::SizeGuard(format!("{k}^{n} words exceed the enumeration guard")))
}

/// Exact distribution of a GSR `k`-shuffle on `n` cards by enumerating all
/// `k^n` pile words. Equals `binom(n+k-d(w)-1, n) / k^n` at every `w`.
pub fn exact_gsr_distribution(n: usize, k: u64) -> Result<Measure<PermA>> {
    assert!(k >= 1 && n >= 1);
    word_guard(n, k)?;
    let mut counts: BTreeMap<PermA, u64> = BTreeMap::new();
    for_each_word(n, k, |word| {
        *counts.entry(gsr_word_to_perm(word)).or_insert(0) += 1;
    });
    Measure::from_counts(n, &counts, k.pow(n as u32))
}

/// The closed form for the GSR distribution.
pub fn gsr_probability(w: &PermA, k: u64) -> Rational {
    let n = w.degree() as u64;
    let d = w.descent_count() as u64;
    Rational::from_integer(binomial(n + k - d - 1, n))
        / Rational::from_integer(num_bigint::BigInt::from(k).pow(n as u32))
}

/// Exact distribution of the type C `k`-shuffle on `n` cards.
pub fn exact_typec_distribution(n: usize, k: u64) -> Result<Measure<PermC>> {
    assert!(k >= 1 && n >= 1);
    word_guard(n, k)?;
    let mut counts: BTreeMap<PermC, u64> = BTreeMap::new();
    for_each_word(n, k, |word| {
        *counts.entry(typec_word_to_perm(word, k)).or_insert(0) += 1;
    });
    Measure::from_counts(n, &counts, k.pow(n as u32))
}

/// Exact distribution of the half-and-flip 2-shuffle on `n` cards: the
/// `2^{n-1}` even-parity words, equally likely.
pub fn exact_halfflip_distribution(n: usize) -> Result<Measure<PermA>> {
    assert!(n >= 1);
    word_guard(n, 2)?;
    let mut counts: BTreeMap<PermA, u64> = BTreeMap::new();
    for_each_word(n, 2, |word| {
        if word.iter().filter(|&&s| s == 1).count() % 2 == 0 {
            *counts.entry(halfflip_word_to_perm(word)).or_insert(0) += 1;
        }
    });
    Measure::from_counts(n, &counts, 1 << (n - 1))
}

/// Exact distribution of any shuffle kind.
pub fn exact_distribution(kind: ShuffleKind, n: usize) -> Result<AnyMeasure> {
    Ok(match kind {
        ShuffleKind::GsrA(k) => AnyMeasure::A(exact_gsr_distribution(n, k)?),
        ShuffleKind::TypeC(k) => AnyMeasure::C(exact_typec_distribution(n, k)?),
        ShuffleKind::HalfAndFlipX2 => AnyMeasure::A(exact_halfflip_distribution(n)?),
    })
}

/// Deterministic seeded sampler; a fixed seed fully determines the stream.
pub struct Sampler {
    kind: ShuffleKind,
    n: usize,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(kind: ShuffleKind, n: usize, seed: u64) -> Self {
        assert!(n >= 1 && kind.piles() >= 1);
        Sampler { kind, n, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn draw(&mut self) -> SampledElement {
        let k = self.kind.piles();
        let mut word: Vec<u8> =
            (0..self.n).map(|_| self.rng.gen_range(0..k) as u8).collect();
        match self.kind {
            ShuffleKind::GsrA(_) => SampledElement::A(gsr_word_to_perm(&word)),
            ShuffleKind::TypeC(k) => SampledElement::C(typec_word_to_perm(&word, k)),
            ShuffleKind::HalfAndFlipX2 => {
                // force even parity: the last symbol is determined by the
                // first n-1, which stays uniform over even-parity words
                let parity: u8 = word[..self.n - 1].iter().filter(|&&s| s == 1).count() as u8 % 2;
                word[self.n - 1] = parity;
                SampledElement::A(halfflip_word_to_perm(&word))
            }
        }
    }
}

/// One seeded draw.
pub fn sample(kind: ShuffleKind, n: usize, seed: u64) -> SampledElement {
    Sampler::new(kind, n, seed).draw()
}

// ---------------------------------------------------------------------------
// Standardization and necklaces
// ---------------------------------------------------------------------------

/// Standard permutation of a word: each letter replaced by its rank in the
/// word, ties resolved left to right.
pub fn standard_permutation<T: Ord>(word: &[T]) -> Result<PermA> {
    if word.is_empty() {
        return Err(Error::InvalidArgument("standardization needs a nonempty word".into()));
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| &word[i]); // stable sort breaks ties left to right
    let mut images = vec![0; word.len()];
    for (rank, &position) in order.iter().enumerate() {
        images[position] = rank + 1;
    }
    PermA::new(images)
}

/// A multiset of necklaces (cyclic words), each stored in its
/// lexicographically least rotation, the multiset sorted.
pub type NecklaceMultiset<T> = Vec<Vec<T>>;

fn canonical_rotation<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    let len = word.len();
    (0..len)
        .map(|shift| {
            let mut rotated = Vec::with_capacity(len);
            rotated.extend_from_slice(&word[shift..]);
            rotated.extend_from_slice(&word[..shift]);
            rotated
        })
        .min()
        .expect("necklaces are nonempty")
}

/// The necklace multiset of a word: cycles of the standardization with
/// positions replaced by the letters above them. Cycle sizes of the
/// standardization and of the output agree by construction.
///
/// Each cycle is walked from its smallest position through repeated
/// preimages, matching how the cycles pair with the letters; the resulting
/// cyclic words are then canonically rotated.
pub fn gr_necklace_multiset<T: Ord + Clone>(word: &[T]) -> Result<NecklaceMultiset<T>> {
    let st = standard_permutation(word)?;
    let inverse = st.inverse();
    let mut necklaces: Vec<Vec<T>> = st
        .cycles()
        .into_iter()
        .map(|cycle| {
            let start = cycle[0];
            let mut positions = Vec::with_capacity(cycle.len());
            let mut position = start;
            loop {
                positions.push(position);
                position = inverse.apply(position);
                if position == start {
                    break;
                }
            }
            let letters: Vec<T> = positions.iter().map(|&p| word[p - 1].clone()).collect();
            canonical_rotation(&letters)
        })
        .collect();
    necklaces.sort();
    Ok(necklaces)
}

// ---------------------------------------------------------------------------
// Unimodal permutations
// ---------------------------------------------------------------------------

const UNIMODAL_GUARD: u64 = 1_000_000;

/// All `2^{n-1}` unimodal permutations of `n` symbols (ascending then
/// descending), sorted by one-line form.
pub fn unimodal_enumerate(n: usize) -> Result<Vec<PermA>> {
    assert!(n >= 1);
    if 1u64.checked_shl(n as u32 - 1).filter(|&c| c <= UNIMODAL_GUARD).is_none() {
        return Err(Error::SizeGuard(format!("2^{} unimodal permutations exceed the guard", n - 1)));
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u64..1 << (n - 1) {
        // values below the peak that sit on the ascending side
        let mut images: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        images.push(n);
        images.extend((1..n).rev().filter(|i| mask >> (i - 1) & 1 == 0));
        out.push(PermA::new(images).expect("unimodal words are permutations"));
    }
    out.sort();
    Ok(out)
}

pub fn is_unimodal(w: &PermA) -> bool {
    let line = w.one_line();
    let peak = line.iter().position(|&x| x == line.len()).unwrap();
    line[..peak].windows(2).all(|p| p[0] < p[1])
        && line[peak..].windows(2).all(|p| p[0] > p[1])
}

/// Counts of each realized cycle-shape multiset among the unimodal
/// permutations of `n` symbols. Every count is `2^{l-1}` with `l` the
/// number of distinct shapes present.
pub fn gannon_census(n: usize) -> Result<BTreeMap<Vec<CycleShape>, u64>> {
    let mut census = BTreeMap::new();
    for w in unimodal_enumerate(n)? {
        *census.entry(w.cycle_shape_multiset()).or_insert(0) += 1;
    }
    Ok(census)
}

/// Exact fraction of unimodal permutations of `n` symbols with at least
/// one fixed point.
pub fn fixed_point_fraction_unimodal(n: usize) -> Result<Rational> {
    let unimodal = unimodal_enumerate(n)?;
    let with_fixed = unimodal
        .iter()
        .filter(|w| (1..=n).any(|i| w.apply(i) == i))
        .count();
    Ok(Rational::new(with_fixed.into(), unimodal.len().into()))
}

// ---------------------------------------------------------------------------
// The two-to-one map onto unimodal permutations
// ---------------------------------------------------------------------------

/// The support of the type C 2-shuffle on `n` cards: the `2^n` distinct
/// outcomes of the word model.
pub fn typec2_support(n: usize) -> Result<BTreeSet<PermC>> {
    word_guard(n, 2)?;
    let mut support = BTreeSet::new();
    for_each_word(n, 2, |word| {
        support.insert(typec_word_to_perm(word, 2));
    });
    Ok(support)
}

/// Maps a type C 2-shuffle outcome to a unimodal permutation: invert, drop
/// signs, conjugate by the reversal `i -> n+1-i`. Exactly two support
/// elements map to each unimodal permutation and unsigned cycle types are
/// preserved.
pub fn eta(w: &PermC) -> Result<PermA> {
    let n = w.degree();
    if !typec2_support(n)?.contains(w) {
        return Err(Error::OutsideSupport);
    }
    let unsigned_inverse = w.inverse().unsigned();
    let images = (1..=n).map(|i| n + 1 - unsigned_inverse.apply(n + 1 - i)).collect();
    PermA::new(images)
}

// ---------------------------------------------------------------------------
// Shape statistics of GSR shuffles
// ---------------------------------------------------------------------------

/// Exact distribution of the cycle-shape multiset under a GSR `k`-shuffle,
/// by brute force over the `k^n` words.
pub fn shape_distribution(n: usize, k: u64) -> Result<BTreeMap<Vec<CycleShape>, Rational>> {
    word_guard(n, k)?;
    let mut counts: BTreeMap<Vec<CycleShape>, u64> = BTreeMap::new();
    for_each_word(n, k, |word| {
        *counts.entry(gsr_word_to_perm(word).cycle_shape_multiset()).or_insert(0) += 1;
    });
    let total = num_bigint::BigInt::from(k.pow(n as u32));
    Ok(counts
        .into_iter()
        .map(|(shapes, c)| (shapes, Rational::new(c.into(), total.clone())))
        .collect())
}

/// Product formula for the probability of a given shape multiset under a
/// GSR `k`-shuffle: a multiset coefficient over the primitive necklaces of
/// each shape.
pub fn shape_product_probability(shapes: &[CycleShape], n: usize, k: u64) -> Rational {
    let mut grouped: BTreeMap<&CycleShape, u64> = BTreeMap::new();
    for s in shapes {
        *grouped.entry(s).or_insert(0) += 1;
    }
    let mut numerator = num_bigint::BigInt::from(1);
    for (shape, multiplicity) in grouped {
        let size = shape.len() as u64;
        let d_inv = shape.as_perm().inverse().descent_count() as u64;
        let necklaces = binomial(size + k - d_inv - 1, size);
        // multiset coefficient: choose `multiplicity` from `necklaces`
        // with repetition
        let necklaces_u64: u64 = (&necklaces).try_into().expect("necklace counts are small");
        numerator *= binomial(necklaces_u64 + multiplicity - 1, multiplicity);
    }
    Rational::new(numerator, num_bigint::BigInt::from(k).pow(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellini::{convolve, xk_coefficient_a, xk_coefficient_c};
    use crate::rational::ratio;
    use num_traits::One;

    fn perm_a(images: &[usize]) -> PermA {
        PermA::new(images.to_vec()).unwrap()
    }

    fn perm_c(images: &[i64]) -> PermC {
        PermC::new(images.to_vec()).unwrap()
    }

    #[test]
    fn gsr_examples() {
        let m = exact_gsr_distribution(2, 2).unwrap();
        assert_eq!(m.get(&perm_a(&[1, 2])), ratio(3, 4));
        assert_eq!(m.get(&perm_a(&[2, 1])), ratio(1, 4));

        for k in 1..=4 {
            let m = exact_gsr_distribution(1, k).unwrap();
            assert_eq!(m.get(&perm_a(&[1])), ratio(1, 1));
        }
    }

    #[test]
    fn gsr_matches_closed_form() {
        for n in 1..=5 {
            for k in 1..=3 {
                let m = exact_gsr_distribution(n, k).unwrap();
                for (w, value) in m.iter() {
                    assert_eq!(*value, gsr_probability(w, k), "n={n} k={k} w={w:?}");
                }
            }
        }
    }

    #[test]
    fn gsr_convolution() {
        for n in 1..=4 {
            let x2 = exact_gsr_distribution(n, 2).unwrap();
            let x4 = exact_gsr_distribution(n, 4).unwrap();
            assert_eq!(convolve(&x2, &x2).unwrap(), x4, "n={n}");
        }
    }

    #[test]
    fn typec_examples() {
        let m = exact_typec_distribution(1, 2).unwrap();
        assert_eq!(m.get(&perm_c(&[1])), ratio(1, 2));
        assert_eq!(m.get(&perm_c(&[-1])), ratio(1, 2));
    }

    #[test]
    fn typec_realizes_inverse_coefficients() {
        for n in 1..=3 {
            for k in 1..=4 {
                let m = exact_typec_distribution(n, k).unwrap();
                for (w, value) in m.iter() {
                    assert_eq!(
                        *value,
                        xk_coefficient_c(&w.inverse(), k),
                        "n={n} k={k} w={w:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn halfflip_realizes_inverse_x2() {
        for n in 2..=6 {
            let m = exact_halfflip_distribution(n).unwrap();
            for (w, value) in m.iter() {
                assert_eq!(*value, xk_coefficient_a(&w.inverse(), 2), "n={n} w={w:?}");
            }
        }
    }

    #[test]
    fn sampler_is_deterministic_and_type_correct() {
        let a = sample(ShuffleKind::GsrA(2), 5, 7);
        let b = sample(ShuffleKind::GsrA(2), 5, 7);
        assert_eq!(a, b);

        match sample(ShuffleKind::TypeC(3), 3, 1) {
            SampledElement::C(w) => assert_eq!(w.degree(), 3),
            other => panic!("expected a signed permutation, got {other:?}"),
        }
    }

    #[test]
    fn sampler_frequencies_approach_exact_distribution() {
        let exact = exact_gsr_distribution(5, 2).unwrap();
        let mut sampler = Sampler::new(ShuffleKind::GsrA(2), 5, 20260810);
        let draws = 100_000u64;
        let mut counts: BTreeMap<PermA, u64> = BTreeMap::new();
        for _ in 0..draws {
            match sampler.draw() {
                SampledElement::A(w) => *counts.entry(w).or_insert(0) += 1,
                _ => unreachable!(),
            }
        }
        let empirical = Measure::from_counts(5, &counts, draws).unwrap();
        let mut tv = Rational::new(0.into(), 1.into());
        for (w, value) in exact.iter() {
            let diff = value - empirical.get(w);
            tv += if diff < Rational::new(0.into(), 1.into()) { -diff } else { diff };
        }
        tv /= Rational::new(2.into(), 1.into());
        assert!(tv < ratio(1, 50), "total variation {tv} too large");
    }

    #[test]
    fn halfflip_sampler_stays_in_support() {
        let exact = exact_halfflip_distribution(5).unwrap();
        let mut sampler = Sampler::new(ShuffleKind::HalfAndFlipX2, 5, 99);
        for _ in 0..200 {
            match sampler.draw() {
                SampledElement::A(w) => {
                    assert!(exact.get(&w) > ratio(0, 1), "sampled outside the support")
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn standardization_paper_example() {
        let word: Vec<char> = "bbaabcccbcbb".chars().collect();
        let st = standard_permutation(&word).unwrap();
        assert_eq!(st, perm_a(&[3, 4, 1, 2, 5, 9, 10, 11, 6, 12, 7, 8]));

        assert_eq!(standard_permutation(&['a']).unwrap(), perm_a(&[1]));
        assert_eq!(standard_permutation(&['b', 'a']).unwrap(), perm_a(&[2, 1]));
        assert!(standard_permutation::<char>(&[]).is_err());
    }

    #[test]
    fn necklace_paper_example() {
        let word: Vec<char> = "bbaabcccbcbb".chars().collect();
        let necklaces = gr_necklace_multiset(&word).unwrap();
        let expected: NecklaceMultiset<char> = vec![
            vec!['a', 'b'],
            vec!['a', 'b'],
            vec!['b'],
            vec!['b', 'c'],
            vec!['b', 'c', 'b', 'c', 'c'],
        ];
        assert_eq!(necklaces, expected);

        assert_eq!(gr_necklace_multiset(&['a', 'a']).unwrap(), vec![vec!['a'], vec!['a']]);
        assert_eq!(gr_necklace_multiset(&['a', 'b']).unwrap(), vec![vec!['a'], vec!['b']]);
    }

    #[test]
    fn necklaces_preserve_cycle_sizes() {
        for len in 1..=6usize {
            let mut word = vec![0u8; len];
            loop {
                let st = standard_permutation(&word).unwrap();
                let mut cycle_sizes: Vec<usize> =
                    st.cycles().into_iter().map(|c| c.len()).collect();
                cycle_sizes.sort_unstable();
                let mut necklace_sizes: Vec<usize> =
                    gr_necklace_multiset(&word).unwrap().iter().map(Vec::len).collect();
                necklace_sizes.sort_unstable();
                assert_eq!(cycle_sizes, necklace_sizes, "{word:?}");

                let mut pos = 0;
                loop {
                    if pos == len {
                        return;
                    }
                    word[pos] += 1;
                    if word[pos] < 3 {
                        break;
                    }
                    word[pos] = 0;
                    pos += 1;
                }
            }
        }
    }

    #[test]
    fn unimodal_examples() {
        assert_eq!(
            unimodal_enumerate(2).unwrap(),
            vec![perm_a(&[1, 2]), perm_a(&[2, 1])]
        );
        assert_eq!(
            unimodal_enumerate(3).unwrap(),
            vec![perm_a(&[1, 2, 3]), perm_a(&[1, 3, 2]), perm_a(&[2, 3, 1]), perm_a(&[3, 2, 1])]
        );
        assert_eq!(unimodal_enumerate(4).unwrap().len(), 8);
        for w in unimodal_enumerate(6).unwrap() {
            assert!(is_unimodal(&w), "{w:?}");
        }
    }

    #[test]
    fn gannon_census_examples() {
        let census = gannon_census(2).unwrap();
        assert_eq!(census.len(), 2);
        assert!(census.values().all(|&c| c == 1));

        let census = gannon_census(1).unwrap();
        assert_eq!(census.len(), 1);
        assert_eq!(census.values().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn gannon_counts_are_powers_of_two_in_distinct_shapes() {
        for n in 1..=9 {
            for (shapes, count) in gannon_census(n).unwrap() {
                let distinct: BTreeSet<&CycleShape> = shapes.iter().collect();
                assert_eq!(count, 1 << (distinct.len() - 1), "n={n} shapes={shapes:?}");
            }
        }
    }

    #[test]
    fn eta_paper_example() {
        let w = perm_c(&[-6, -5, 7, 8, -4, 9, -3, 10, -2, 11, -1, 12]);
        let image = eta(&w).unwrap();
        assert_eq!(image, perm_a(&[1, 3, 5, 7, 9, 10, 12, 11, 8, 6, 4, 2]));
        assert!(is_unimodal(&image));
        // unsigned cycle type preserved
        assert_eq!(w.unsigned().cycle_type(), image.cycle_type());
    }

    #[test]
    fn eta_smallest_case() {
        assert_eq!(eta(&perm_c(&[1])).unwrap(), perm_a(&[1]));
        assert_eq!(eta(&perm_c(&[-1])).unwrap(), perm_a(&[1]));
    }

    #[test]
    fn eta_rejects_non_support_elements() {
        // (-1, -2) never arises from a 2-shuffle: the flipped block reads
        // in decreasing absolute value
        assert!(matches!(eta(&perm_c(&[-1, -2])), Err(Error::OutsideSupport)));
    }

    #[test]
    fn eta_is_two_to_one_onto_unimodal() {
        for n in 1..=8usize {
            let mut hits: BTreeMap<PermA, u64> = BTreeMap::new();
            for w in typec2_support(n).unwrap() {
                let image = eta(&w).unwrap();
                assert!(is_unimodal(&image), "{w:?}");
                assert_eq!(
                    w.unsigned().cycle_type(),
                    image.cycle_type(),
                    "cycle type preserved for {w:?}"
                );
                *hits.entry(image).or_insert(0) += 1;
            }
            let unimodal = unimodal_enumerate(n).unwrap();
            assert_eq!(hits.len(), unimodal.len());
            assert!(hits.values().all(|&c| c == 2), "n={n}");
        }
    }

    #[test]
    fn shape_distribution_examples() {
        let dist = shape_distribution(2, 2).unwrap();
        let fixed_points = perm_a(&[1, 2]).cycle_shape_multiset();
        let transposition = perm_a(&[2, 1]).cycle_shape_multiset();
        assert_eq!(dist[&fixed_points], ratio(3, 4));
        assert_eq!(dist[&transposition], ratio(1, 4));

        let dist = shape_distribution(1, 3).unwrap();
        assert_eq!(dist.len(), 1);
    }

    #[test]
    fn shape_distribution_matches_product_formula() {
        for n in 1..=5 {
            for k in 1..=3 {
                let dist = shape_distribution(n, k).unwrap();
                let mut total = Rational::new(0.into(), 1.into());
                for (shapes, probability) in &dist {
                    assert_eq!(
                        *probability,
                        shape_product_probability(shapes, n, k),
                        "n={n} k={k} shapes={shapes:?}"
                    );
                    total += probability;
                }
                assert!(total.is_one());
            }
        }
    }

    #[test]
    fn fixed_point_fraction_examples() {
        assert_eq!(fixed_point_fraction_unimodal(1).unwrap(), ratio(1, 1));
        assert_eq!(fixed_point_fraction_unimodal(2).unwrap(), ratio(1, 2));
    }
}
