//! F-stable points of the fundamental alcove in type A, the shortest
//! stabilizer element refining the class map, and the supporting checks.
//!
//! A point of the closed alcove is stable when `q v = w v + y` has a
//! solution with `w` a permutation and `y` in the coroot lattice. Stable
//! points biject with the semisimple SL(n, q) classes; picking the unique
//! shortest such `w` refines the class map to an element-level map.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::cellini::{pushforward_classes, Measure};
use crate::finite_field::{make_field, sign_conjugate, Fq, FqPoly};
use crate::numtheory::prime_power;
use crate::rational::{to_frac_string, Rational};
use crate::ss_classes::{class_distribution, enumerate_sl, phi_a, ClassKind};
use crate::weyl::{PermA, WeylElement};
use crate::{Error, Result};

const MAX_LETTERS: usize = 5;
const MAX_Q: u64 = 7;

/// Exact rational point of the closed fundamental alcove: zero sum, weakly
/// decreasing coordinates, spread at most one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlcovePoint {
    coords: Vec<Rational>,
}

impl AlcovePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let sum: Rational = coords.iter().sum();
        let decreasing = coords.windows(2).all(|p| p[0] >= p[1]);
        let spread_ok = match (coords.first(), coords.last()) {
            (Some(first), Some(last)) => first - last <= Rational::from_integer(1.into()),
            _ => false,
        };
        if sum != Rational::from_integer(0.into()) || !decreasing || !spread_ok {
            return Err(Error::InvalidArgument(format!(
                "{coords:?} is not in the closed fundamental alcove"
            )));
        }
        Ok(AlcovePoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords.iter().map(|c| to_frac_string(c).into()).collect(),
        )
    }
}

fn guard(n: usize, q: u64) -> Result<()> {
    if n > MAX_LETTERS || q > MAX_Q {
        return Err(Error::SizeGuard(format!(
            "stable-point search limited to n <= {MAX_LETTERS}, q <= {MAX_Q}"
        )));
    }
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(())
}

/// Solves `q v - w v = y` for `v`, cycle by cycle of `w`: along a cycle the
/// equations chain into `v = (weighted sum of y) / (q^len - 1)`.
fn solve_fixed_point(w: &PermA, y: &[i64], q: u64) -> Vec<Rational> {
    let n = y.len();
    let q_big = BigInt::from(q);
    let mut v = vec![Rational::from_integer(0.into()); n];
    // (w v)_i = v_{w^{-1}(i)}, so q v_i - v_{sigma(i)} = y_i with sigma = w^{-1}
    let sigma = w.inverse();
    for cycle in sigma.cycles() {
        let len = cycle.len();
        let mut numerator = BigInt::from(0);
        for (t, &position) in cycle.iter().enumerate() {
            numerator += q_big.pow((len - 1 - t) as u32) * BigInt::from(y[position - 1]);
        }
        let denominator = q_big.pow(len as u32) - 1;
        let mut value = Rational::new(numerator, denominator);
        for (t, &position) in cycle.iter().enumerate() {
            v[position - 1] = value.clone();
            if t + 1 < len {
                value = Rational::from_integer(q_big.clone()) * value
                    - Rational::from_integer(y[position - 1].into());
            }
        }
    }
    v
}

/// The `q^{n-1}` stable points of the closed alcove: per permutation and
/// per lattice translation in the search box, solve exactly and keep the
/// solutions that land in the alcove. Any other cardinality is a hard
/// invariant failure.
pub fn stable_points(n: usize, q: u64) -> Result<Vec<AlcovePoint>> {
    assert!(n >= 1);
    guard(n, q)?;
    let bound = q as i64 + 1;
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let group = PermA::enumerate(n)?;
    let mut y = vec![0i64; n];
    // odometer over the first n-1 coordinates; the last is forced by zero sum
    let mut counters = vec![-bound; n.saturating_sub(1)];
    loop {
        for (i, &c) in counters.iter().enumerate() {
            y[i] = c;
        }
        let tail: i64 = -counters.iter().sum::<i64>();
        if tail.abs() <= bound {
            if n >= 1 {
                y[n - 1] = tail;
            }
            for w in &group {
                let v = solve_fixed_point(w, &y, q);
                let decreasing = v.windows(2).all(|p| p[0] >= p[1]);
                if decreasing
                    && v[0].clone() - v[n - 1].clone() <= Rational::from_integer(1.into())
                {
                    found.insert(v);
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == counters.len() {
                let expected = q.pow(n as u32 - 1);
                if found.len() as u64 != expected {
                    return Err(Error::CountMismatch {
                        expected,
                        found: found.len() as u64,
                    });
                }
                return found.into_iter().map(AlcovePoint::new).collect();
            }
            counters[pos] += 1;
            if counters[pos] <= bound {
                break;
            }
            counters[pos] = -bound;
            pos += 1;
        }
    }
}

/// The stabilizer data of a stable point: all permutations `w` with
/// `q v - w v` integral, and the unique shortest one.
#[derive(Clone, Debug)]
pub struct StabilizerData {
    pub point: AlcovePoint,
    pub set: Vec<PermA>,
    pub minimal: PermA,
}

fn fractional(r: &Rational) -> Rational {
    r - r.floor()
}

/// Computes the stabilizer set by direct membership test, verifies it is a
/// left coset of the Young subgroup of mod-1 coordinate coincidences, and
/// extracts the unique minimal-length element. A minimal-length tie is a
/// hard error: it would falsify the uniqueness statement the refinement
/// rests on.
pub fn stabilizer_set(point: &AlcovePoint, q: u64) -> Result<StabilizerData> {
    let n = point.dimension();
    let v = point.coords();
    let q_rat = Rational::from_integer(BigInt::from(q));
    let mut set = Vec::new();
    for w in PermA::enumerate(n)? {
        let inverse = w.inverse();
        let stable = (1..=n).all(|i| {
            let moved = &v[inverse.apply(i) - 1];
            (&q_rat * &v[i - 1] - moved).is_integer()
        });
        if stable {
            set.push(w);
        }
    }
    if set.is_empty() {
        return Err(Error::InvalidArgument(format!("{point:?} is not a stable point")));
    }

    let lengths: Vec<usize> = set.iter().map(|w| w.length()).collect();
    let min_length = *lengths.iter().min().unwrap();
    let minimal_elements: Vec<&PermA> =
        set.iter().zip(&lengths).filter(|(_, &l)| l == min_length).map(|(w, _)| w).collect();
    if minimal_elements.len() != 1 {
        return Err(Error::MinimalLengthTie(format!("{:?}", point.to_json())));
    }
    let minimal = minimal_elements[0].clone();

    // the stabilizer must be minimal . (Young subgroup of the mod-1 blocks)
    let mut block_id = vec![0usize; n];
    let mut reps: Vec<Rational> = Vec::new();
    for i in 0..n {
        let frac = fractional(&v[i]);
        let id = reps.iter().position(|r| *r == frac).unwrap_or_else(|| {
            reps.push(frac.clone());
            reps.len() - 1
        });
        block_id[i] = id;
    }
    let inverse_min = minimal.inverse();
    for w in &set {
        let tail = inverse_min.compose(w);
        for i in 1..=n {
            assert_eq!(
                block_id[tail.apply(i) - 1],
                block_id[i - 1],
                "stabilizer element outside the block coset at {point:?}"
            );
        }
    }
    let block_sizes = {
        let mut sizes = vec![0u64; reps.len()];
        for &b in &block_id {
            sizes[b] += 1;
        }
        sizes
    };
    let coset_order: u64 = block_sizes.iter().map(|&s| (1..=s).product::<u64>()).product();
    assert_eq!(set.len() as u64, coset_order, "stabilizer is a full block coset");

    Ok(StabilizerData { point: point.clone(), set, minimal })
}

/// Uniform measure over the stable points pushed through the shortest
/// stabilizer element.
pub fn refined_measure(n: usize, q: u64) -> Result<Measure<PermA>> {
    let points = stable_points(n, q)?;
    let total = points.len() as u64;
    let mut counts: BTreeMap<PermA, u64> = BTreeMap::new();
    for point in &points {
        let data = stabilizer_set(point, q)?;
        *counts.entry(data.minimal).or_insert(0) += 1;
    }
    Measure::from_counts(n, &counts, total)
}

/// Class-level consistency of the refinement: the class distribution of
/// the refined measure must equal the SL class distribution, and where the
/// explicit polynomial correspondence is computable each point's shortest
/// element must have the cycle type of its polynomial.
pub fn refinement_class_consistency(n: usize, q: u64) -> Result<bool> {
    let refined = refined_measure(n, q)?;
    let classes = class_distribution(ClassKind::Sl, n, q)?;
    if pushforward_classes(&refined) != classes {
        return Ok(false);
    }
    if n <= CORRESPONDENCE_MAX_LETTERS && q <= CORRESPONDENCE_MAX_Q {
        let field = make_field(q)?;
        for (point, poly) in polynomial_correspondence(n, q)? {
            let minimal = stabilizer_set(&point, q)?.minimal;
            let label = crate::weyl::ClassLabel::A(phi_a(&field, &poly)?);
            if minimal.cycle_type() != label {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

const CORRESPONDENCE_MAX_LETTERS: usize = 3;
const CORRESPONDENCE_MAX_Q: u64 = 4;

/// Compatible extension-field data: `F_{q^i}` with an embedding of `F_q`
/// and a generator whose norm down to `F_q` is the stored base generator.
struct Extension {
    field: Fq,
    embed: Vec<u8>,
    tau: u8,
}

fn build_extension(base: &Fq, i: u32) -> Extension {
    let q = base.q();
    let ext = make_field(q.pow(i)).expect("extension stays within the field guard");

    // Embed F_q: prime subfield elements are the indices below p; a proper
    // base field embeds through a root of its modulus in the extension.
    let p = base.characteristic();
    let embed: Vec<u8> = if base.extension_degree() == 1 {
        (0..q as u8).collect()
    } else {
        let mut modulus_coeffs: Vec<u8> = base.modulus().iter().map(|&c| c as u8).collect();
        modulus_coeffs.push(1);
        let modulus_in_ext = FqPoly::from_coeffs(modulus_coeffs);
        let beta = ext
            .elements()
            .find(|&b| ext.poly_eval(&modulus_in_ext, b) == 0)
            .expect("the base modulus splits in the extension");
        (0..q)
            .map(|e| {
                // digits of e base p are the power-basis coordinates
                let mut value = 0u8;
                let mut power = 1u8;
                let mut rest = e;
                for _ in 0..base.extension_degree() {
                    let digit = (rest % p) as u8;
                    value = ext.add(value, ext.mul(digit, power));
                    power = ext.mul(power, beta);
                    rest /= p;
                }
                value
            })
            .collect()
    };
    for a in 0..q as usize {
        for b in 0..q as usize {
            assert_eq!(
                embed[base.mul(a as u8, b as u8) as usize],
                ext.mul(embed[a], embed[b]),
                "embedding is multiplicative"
            );
            assert_eq!(
                embed[base.add(a as u8, b as u8) as usize],
                ext.add(embed[a], embed[b]),
                "embedding is additive"
            );
        }
    }

    let ext_order = ext.q() - 1;
    let norm_exponent = ext_order / (q - 1);
    let target = embed[base.generator() as usize];
    let tau = ext
        .elements()
        .filter(|&t| t != 0)
        .find(|&t| ext.order(t) == ext_order && ext.pow(t, norm_exponent) == target)
        .expect("a norm-compatible generator exists");
    Extension { field: ext, embed, tau }
}

/// The explicit bijection between stable points and SL classes for small
/// parameters, through compatible generators of the extension fields:
/// a coordinate orbit `{a/(q^i - 1), ..}` becomes the minimal polynomial
/// of `tau_i^a`, and the point maps to the sign-twisted product (which is
/// what makes the constant terms equal to one).
pub fn polynomial_correspondence(n: usize, q: u64) -> Result<Vec<(AlcovePoint, FqPoly)>> {
    if n > CORRESPONDENCE_MAX_LETTERS || q > CORRESPONDENCE_MAX_Q {
        return Err(Error::SizeGuard(format!(
            "polynomial correspondence limited to n <= {CORRESPONDENCE_MAX_LETTERS}, q <= {CORRESPONDENCE_MAX_Q}"
        )));
    }
    let base = make_field(q)?;
    let extensions: Vec<Extension> =
        (1..=n as u32).map(|i| build_extension(&base, i)).collect();
    let q_rat = Rational::from_integer(BigInt::from(q));

    let mut out = Vec::new();
    for point in stable_points(n, q)? {
        let mut remaining: BTreeMap<Rational, usize> = BTreeMap::new();
        for c in point.coords() {
            *remaining.entry(fractional(c)).or_insert(0) += 1;
        }
        let mut polynomial = FqPoly::one();
        while let Some(start) = remaining.keys().next().cloned() {
            // orbit of the coordinate under multiplication by q mod 1
            let mut orbit = vec![start.clone()];
            loop {
                let next = fractional(&(&q_rat * orbit.last().unwrap()));
                if next == start {
                    break;
                }
                orbit.push(next);
            }
            for x in &orbit {
                let count = remaining.get_mut(x).expect("stable points have q-invariant orbits");
                *count -= 1;
                if *count == 0 {
                    remaining.remove(x);
                }
            }

            let degree = orbit.len();
            let ext = &extensions[degree - 1];
            let denominator = Rational::from_integer((ext.field.q() - 1).into());
            let exponent_rat = &start * &denominator;
            assert!(exponent_rat.is_integer(), "orbit denominators divide q^i - 1");
            let exponent: u64 = exponent_rat
                .to_integer()
                .try_into()
                .expect("orbit exponents are small nonnegative integers");
            let root = ext.field.pow(ext.tau, exponent);

            // minimal polynomial over F_q: product over Frobenius conjugates
            let mut minpoly = FqPoly::one();
            let mut conjugate = root;
            for _ in 0..degree {
                let factor = FqPoly::from_coeffs(vec![ext.field.neg(conjugate), 1]);
                minpoly = ext.field.poly_mul(&minpoly, &factor);
                conjugate = ext.field.pow(conjugate, q);
            }
            assert_eq!(conjugate, root, "Frobenius orbit closes at the degree");
            let reverse: BTreeMap<u8, u8> =
                ext.embed.iter().enumerate().map(|(b, &e)| (e, b as u8)).collect();
            let base_coeffs: Vec<u8> = minpoly
                .coeffs()
                .iter()
                .map(|c| *reverse.get(c).expect("minimal polynomial lives over the base field"))
                .collect();
            polynomial = base.poly_mul(&polynomial, &FqPoly::from_coeffs(base_coeffs));
        }
        let twisted = sign_conjugate(&base, &polynomial);
        assert_eq!(twisted.constant_term(), 1, "determinant-one normalization");
        out.push((point, twisted));
    }
    Ok(out)
}
