//! Small finite fields `F_q` (`q = p^m <= 64`), monic polynomial
//! arithmetic, irreducibility sieves, trial-division factorization, the two
//! involutions on polynomials, and the counting lemmas they feed.
//!
//! Field elements are `u8` indices in representation order: the index's
//! base-`p` digits, constant coefficient least significant, are the
//! coordinates in the power basis of the chosen modulus.

use std::collections::BTreeMap;
use std::fmt;

use crate::numtheory::{divisors, mobius, prime_power};
use crate::{Error, Result};

const FIELD_GUARD: u64 = 64;

/// A constructed finite field with full operation tables.
///
/// The modulus is the lexicographically least monic irreducible of degree
/// `m` over `F_p`, comparing coefficient tuples constant term first. A
/// fixed generator of the multiplicative group is chosen at construction:
/// the least element index of order `q - 1` (its existence is also the
/// cyclicity check).
#[derive(Clone)]
pub struct Fq {
    p: u64,
    m: u32,
    q: u64,
    /// Coefficients of the modulus below the leading 1, constant first.
    modulus: Vec<u64>,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    neg: Vec<u8>,
    generator: u8,
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fq(q={}, p={}, m={}, modulus={:?})", self.q, self.p, self.m, self.modulus)
    }
}

// Polynomial helpers over F_p used only during construction.
mod prime_poly {
    /// Remainder of `a` modulo monic `b`, coefficients constant-first mod `p`.
    pub fn rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
        trim(&mut a);
        let db = b.len() - 1;
        while a.len() > db {
            let lead = a[a.len() - 1];
            let shift = a.len() - 1 - db;
            if lead != 0 {
                for j in 0..=db {
                    let idx = shift + j;
                    a[idx] = (a[idx] + p * p - (lead * b[j]) % p) % p;
                }
            }
            a.pop();
            trim(&mut a);
        }
        a
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    /// Irreducibility by trial division against all monic polynomials of
    /// degree up to half of `f`'s. `f` is monic, constant-first, full
    /// coefficient vector including the leading 1.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut rest = idx;
                for _ in 0..d {
                    g.push(rest % p);
                    rest /= p;
                }
                g.push(1);
                if rem(f.to_vec(), &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Constructs `F_q` for a prime power `q <= 64`.
pub fn make_field(q: u64) -> Result<Fq> {
    let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > FIELD_GUARD {
        return Err(Error::SizeGuard(format!("fields are limited to q <= {FIELD_GUARD}")));
    }

    // Lexicographically least monic irreducible modulus of degree m,
    // constant coefficient most significant in the comparison.
    let mut modulus = None;
    'search: for idx in 0..q {
        let mut digits = Vec::with_capacity(m as usize);
        let mut rest = idx;
        for j in (0..m).rev() {
            let scale = p.pow(j);
            digits.push(rest / scale);
            rest %= scale;
        }
        let mut full = digits.clone();
        full.push(1);
        if prime_poly::is_irreducible(&full, p) {
            modulus = Some(digits);
            break 'search;
        }
    }
    let modulus = modulus.expect("an irreducible of every degree exists over F_p");

    let decode = |e: u64| -> Vec<u64> {
        let mut digits = Vec::with_capacity(m as usize);
        let mut rest = e;
        for _ in 0..m {
            digits.push(rest % p);
            rest /= p;
        }
        digits
    };
    let encode = |poly: &[u64]| -> u64 {
        let mut e = 0;
        for (j, &c) in poly.iter().enumerate() {
            e += c * p.pow(j as u32);
        }
        e
    };
    let mut full_modulus = modulus.clone();
    full_modulus.push(1);

    let qs = q as usize;
    let mut add = vec![0u8; qs * qs];
    let mut mul = vec![0u8; qs * qs];
    let mut neg = vec![0u8; qs];
    for a in 0..q {
        let da = decode(a);
        neg[a as usize] = encode(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>()) as u8;
        for b in 0..q {
            let db = decode(b);
            let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
            add[(a * q + b) as usize] = encode(&sum) as u8;
            let prod = prime_poly::rem(prime_poly::mul(&da, &db, p), &full_modulus, p);
            mul[(a * q + b) as usize] = encode(&prod) as u8;
        }
    }

    let mut inv = vec![0u8; qs];
    for a in 1..q {
        for b in 1..q {
            if mul[(a * q + b) as usize] == 1 {
                inv[a as usize] = b as u8;
                break;
            }
        }
        assert!(inv[a as usize] != 0, "every nonzero element is invertible");
    }

    let mut generator = 0u8;
    for a in 1..q as usize {
        let mut power = a as u8;
        let mut order = 1u64;
        while power != 1 {
            power = mul[a * qs + power as usize];
            order += 1;
        }
        if order == q - 1 {
            generator = a as u8;
            break;
        }
    }
    assert!(generator != 0, "the multiplicative group is cyclic");

    Ok(Fq { p, m, q, modulus, add, mul, inv, neg, generator })
}

impl Fq {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.m
    }

    /// Modulus coefficients below the leading 1, constant first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The stored generator of the multiplicative group.
    pub fn generator(&self) -> u8 {
        self.generator
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero is not invertible");
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u8, e: u64) -> u8 {
        let mut acc = 1u8;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Multiplicative order; `a` must be nonzero.
    pub fn order(&self, a: u8) -> u64 {
        assert!(a != 0);
        let mut power = a;
        let mut order = 1;
        while power != 1 {
            power = self.mul(power, a);
            order += 1;
        }
        order
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
}

/// Polynomial over some `Fq`, coefficients as element indices with the
/// constant term first; no trailing zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqPoly {
    coeffs: Vec<u8>,
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqPoly{:?}", self.coeffs)
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (j, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && j > 0 { String::new() } else { c.to_string() };
            match j {
                0 => terms.push(coeff),
                1 => terms.push(format!("{coeff}z")),
                _ => terms.push(format!("{coeff}z^{j}")),
            }
        }
        write!(f, "{}", terms.join("+"))
    }
}

impl FqPoly {
    pub fn zero() -> Self {
        FqPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        FqPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u8>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FqPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> u8 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> u8 {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|&c| c.into()).collect())
    }
}

impl Fq {
    pub fn poly_add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len).map(|j| self.add(a.coeff(j), b.coeff(j))).collect();
        FqPoly::from_coeffs(coeffs)
    }

    pub fn poly_mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.is_zero() || b.is_zero() {
            return FqPoly::zero();
        }
        let mut coeffs = vec![0u8; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            for (j, &y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.add(coeffs[i + j], self.mul(x, y));
            }
        }
        FqPoly::from_coeffs(coeffs)
    }

    pub fn poly_scale(&self, a: &FqPoly, c: u8) -> FqPoly {
        FqPoly::from_coeffs(a.coeffs.iter().map(|&x| self.mul(x, c)).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn poly_divrem(&self, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly) {
        assert!(!b.is_zero(), "division by the zero polynomial");
        let db = b.degree().unwrap();
        let lead_inv = self.inv(*b.coeffs.last().unwrap());
        let mut rem = a.coeffs.clone();
        let mut quot = vec![0u8; a.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let lead = *rem.last().unwrap();
            if lead != 0 {
                let factor = self.mul(lead, lead_inv);
                let shift = rem.len() - 1 - db;
                quot[shift] = factor;
                for j in 0..=db {
                    let t = self.mul(factor, b.coeff(j));
                    rem[shift + j] = self.sub(rem[shift + j], t);
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (FqPoly::from_coeffs(quot), FqPoly::from_coeffs(rem))
    }

    pub fn poly_divides(&self, divisor: &FqPoly, f: &FqPoly) -> bool {
        self.poly_divrem(f, divisor).1.is_zero()
    }

    pub fn poly_eval(&self, f: &FqPoly, x: u8) -> u8 {
        let mut acc = 0u8;
        for &c in f.coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }

    /// All monic polynomials of degree `d`, enumeration order sorted by
    /// coefficient vectors.
    pub fn monic_polys(&self, d: usize) -> Vec<FqPoly> {
        let mut out = Vec::with_capacity((self.q as usize).pow(d as u32));
        let mut coeffs = vec![0u8; d + 1];
        coeffs[d] = 1;
        loop {
            out.push(FqPoly { coeffs: coeffs.clone() });
            let mut pos = 0;
            loop {
                if pos == d {
                    out.sort();
                    return out;
                }
                coeffs[pos] += 1;
                if (coeffs[pos] as u64) < self.q {
                    break;
                }
                coeffs[pos] = 0;
                pos += 1;
            }
        }
    }
}

const POLY_ENUM_GUARD: u64 = 10_000_000;

/// All monic irreducibles of degree `d`, by sieve against lower-degree
/// irreducibles. The count is checked against the Gauss formula
/// `(1/d) sum_{e | d} mu(e) q^{d/e}`.
pub fn irreducibles(field: &Fq, d: usize) -> Result<Vec<FqPoly>> {
    assert!(d >= 1);
    if field.q.pow(d as u32) > POLY_ENUM_GUARD {
        return Err(Error::SizeGuard(format!("q^d = {}^{d} exceeds the sieve guard", field.q)));
    }
    let mut table: Vec<Vec<FqPoly>> = vec![Vec::new()];
    for current in 1..=d {
        let mut found = Vec::new();
        for f in field.monic_polys(current) {
            let mut irreducible = true;
            'sieve: for lower in 1..=current / 2 {
                for g in &table[lower] {
                    if field.poly_divides(g, &f) {
                        irreducible = false;
                        break 'sieve;
                    }
                }
            }
            if irreducible {
                found.push(f);
            }
        }
        let expected: i64 = divisors(current as u64)
            .into_iter()
            .map(|e| mobius(e) * (field.q as i64).pow((current as u64 / e) as u32))
            .sum();
        assert_eq!(found.len() as i64 * current as i64, expected, "Gauss count, degree {current}");
        table.push(found);
    }
    Ok(table.pop().unwrap())
}

/// Complete factorization into monic irreducibles with multiplicities,
/// factors sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(FqPoly, u32)>,
}

impl Factorization {
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(f, a)| f.degree().unwrap() * *a as usize).sum()
    }
}

/// Precomputed irreducibles by degree, for factoring many polynomials of
/// bounded degree against one sieve.
pub struct IrreducibleTable {
    by_degree: Vec<Vec<FqPoly>>,
}

impl IrreducibleTable {
    /// Table of all irreducibles of degree `1..=d`.
    pub fn up_to(field: &Fq, d: usize) -> Result<Self> {
        let mut by_degree = vec![Vec::new()];
        for degree in 1..=d {
            by_degree.push(irreducibles(field, degree)?);
        }
        Ok(IrreducibleTable { by_degree })
    }

    pub fn of_degree(&self, d: usize) -> &[FqPoly] {
        &self.by_degree[d]
    }

    /// Factors a monic `f` of degree at least 1 by trial division; the
    /// table must cover degrees up to half of `deg f`. The recomposition
    /// is checked before returning.
    pub fn factor(&self, field: &Fq, f: &FqPoly) -> Result<Factorization> {
        if !f.is_monic() || f.degree() == Some(0) {
            return Err(Error::InvalidArgument(format!(
                "factor requires a monic f of degree >= 1, got {f}"
            )));
        }
        let mut remaining = f.clone();
        let mut factors: Vec<(FqPoly, u32)> = Vec::new();
        let mut d = 1;
        while 2 * d <= remaining.degree().unwrap() {
            assert!(d < self.by_degree.len(), "irreducible table too shallow");
            for g in &self.by_degree[d] {
                let mut multiplicity = 0;
                loop {
                    let (quot, rem) = field.poly_divrem(&remaining, g);
                    if !rem.is_zero() {
                        break;
                    }
                    remaining = quot;
                    multiplicity += 1;
                }
                if multiplicity > 0 {
                    factors.push((g.clone(), multiplicity));
                }
            }
            d += 1;
        }
        if remaining.degree().unwrap() >= 1 {
            factors.push((remaining, 1));
        }
        factors.sort_by(|a, b| (a.0.degree(), &a.0).cmp(&(b.0.degree(), &b.0)));

        let mut check = FqPoly::one();
        for (g, a) in &factors {
            for _ in 0..*a {
                check = field.poly_mul(&check, g);
            }
        }
        assert_eq!(&check, f, "factorization recomposes to the input");
        Ok(Factorization { factors })
    }
}

/// One-off factorization of a monic polynomial of degree at least 1.
pub fn factor(field: &Fq, f: &FqPoly) -> Result<Factorization> {
    let half = f.degree().unwrap_or(0) / 2;
    IrreducibleTable::up_to(field, half)?.factor(field, f)
}

/// The reciprocal involution `f(z) -> f(0)^{-1} z^{deg f} f(1/z)`:
/// coefficient reversal normalized to monic. Requires monic `f` with
/// nonzero constant term; applying it twice gives `f` back.
pub fn reciprocal_conjugate(field: &Fq, f: &FqPoly) -> Result<FqPoly> {
    if f.constant_term() == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    if !f.is_monic() {
        return Err(Error::InvalidArgument("reciprocal conjugate requires a monic input".into()));
    }
    let mut coeffs: Vec<u8> = f.coeffs.iter().rev().copied().collect();
    let scale = field.inv(f.constant_term());
    for c in &mut coeffs {
        *c = field.mul(*c, scale);
    }
    Ok(FqPoly::from_coeffs(coeffs))
}

/// The sign involution `f(z) -> (-1)^{deg f} f(-z)`, again monic.
pub fn sign_conjugate(field: &Fq, f: &FqPoly) -> FqPoly {
    let Some(deg) = f.degree() else { return FqPoly::zero() };
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, &c)| if (deg - j) % 2 == 1 { field.neg(c) } else { c })
        .collect();
    FqPoly::from_coeffs(coeffs)
}

/// Number of monic irreducibles of degree `n` with nonzero constant term
/// fixed by the reciprocal involution:
/// `e` for `n = 1` (`e` counts the square roots of 1), zero for odd
/// `n > 1`, and `(1/n) sum_{d | n, d odd} mu(d) (q^{n/2d} + 1 - e)` for
/// even `n`.
pub fn count_selfreciprocal_irreducibles(field: &Fq, n: u64) -> u64 {
    assert!(n >= 1);
    let e = if field.p == 2 { 1i64 } else { 2 };
    if n == 1 {
        return e as u64;
    }
    if n % 2 == 1 {
        return 0;
    }
    let total: i64 = divisors(n)
        .into_iter()
        .filter(|d| d % 2 == 1)
        .map(|d| mobius(d) * ((field.q as i64).pow((n / (2 * d)) as u32) + 1 - e))
        .sum();
    assert!(total >= 0 && total % n as i64 == 0);
    (total / n as i64) as u64
}

/// Number of transitive unimodal permutations on `n` symbols (single
/// `n`-cycles): `(1/2n) sum_{d | n, d odd} mu(d) 2^{n/d}`.
pub fn count_transitive_unimodal(n: u64) -> u64 {
    assert!(n >= 1);
    let total: i64 = divisors(n)
        .into_iter()
        .filter(|d| d % 2 == 1)
        .map(|d| mobius(d) * 2i64.pow((n / d) as u32))
        .sum();
    assert!(total > 0 && total % (2 * n as i64) == 0);
    (total / (2 * n as i64)) as u64
}

/// Histogram of root norms over the irreducibles of degree `i` with
/// nonzero constant term: the norm of the roots of monic irreducible `f`
/// is `(-1)^i f(0)`, an element of the multiplicative group.
pub fn irreducible_count_by_norm(field: &Fq, i: usize) -> Result<BTreeMap<u8, u64>> {
    if field.q.pow(i as u32) > 1_000_000 {
        return Err(Error::SizeGuard("norm histogram limited to q^i <= 10^6".into()));
    }
    let mut histogram = BTreeMap::new();
    for f in irreducibles(field, i)? {
        let c = f.constant_term();
        if c == 0 {
            continue;
        }
        let norm = if i % 2 == 1 { field.neg(c) } else { c };
        *histogram.entry(norm).or_insert(0) += 1;
    }
    Ok(histogram)
}
