//! Exact number-theoretic primitives: Ramanujan sums, Von Sterneck counts,
//! Gaussian binomials, restricted partition counts and necklace counts.
//!
//! All arithmetic here is integer arithmetic. Ramanujan sums in particular
//! are computed through the Moebius/gcd identity rather than complex
//! exponentials, so nothing on the verification path leaves the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Divisors of `n` in increasing order. `n >= 1`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function by trial factorization.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Primality by trial division; desk-scale inputs only.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Writes `q = p^m` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut m = 0;
            while rest % p == 0 {
                rest /= p;
                m += 1;
            }
            return if rest == 1 { Some((p, m)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Ramanujan sum `C_m(n)`: the sum of `e^{2 pi i k n / m}` over `k` coprime
/// to `m`, evaluated exactly as `sum_{d | gcd(m, n)} d * mu(m / d)`.
///
/// Negative `n` is reduced mod `m` first; the value depends only on
/// `gcd(n, m)`.
pub fn ramanujan_sum(m: u64, n: i64) -> Result<i64> {
    if m == 0 {
        return Err(Error::InvalidArgument("ramanujan_sum requires m >= 1".into()));
    }
    let n = n.rem_euclid(m as i64) as u64;
    let g = n.gcd(&m);
    let mut total = 0i64;
    for d in divisors(g) {
        total += d as i64 * mobius(m / d);
    }
    Ok(total)
}

/// Number of multisets of size `k` drawn from `{0, .., m-1}` whose sum is
/// congruent to `n` mod `m`, via the Von Sterneck formula
/// `(1/m) sum_{d | gcd(m,k)} binom((m+k-d)/d, k/d) C_d(n)`.
pub fn von_sterneck_count(n: i64, m: u64, k: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("von_sterneck_count requires m >= 1".into()));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("von_sterneck_count requires k >= 1".into()));
    }
    let mut total = BigInt::zero();
    for d in divisors(m.gcd(&k)) {
        let b = binomial((m + k - d) / d, k / d);
        total += b * BigInt::from(ramanujan_sum(d, n)?);
    }
    let (q, r) = total.div_rem(&BigInt::from(m));
    assert!(r.is_zero(), "Von Sterneck sum not divisible by m");
    let count: u64 = (&q).try_into().expect("negative multiset count");
    Ok(count)
}

/// Modular reciprocity: the number of ways of writing `n` mod `y` as a
/// multiset of `x` integers from `{0, .., y-1}` equals the number of ways
/// of writing `n` mod `x` as a multiset of `y` integers from `{0, .., x-1}`.
/// Returns whether the two counts agree (they always should).
pub fn reciprocity_check(x: u64, y: u64, n: i64) -> Result<bool> {
    Ok(von_sterneck_count(n, y, x)? == von_sterneck_count(n, x, y)?)
}

/// Dense integer polynomial in one indeterminate, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> i64 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![0; self.0.len().max(other.0.len())];
        for (j, c) in out.iter_mut().enumerate() {
            *c = self.coeff(j) + other.coeff(j);
        }
        IntPoly::from_coeffs(out)
    }

    /// Multiplication by `q^s`.
    pub fn shifted(&self, s: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0; s];
        out.extend_from_slice(&self.0);
        IntPoly(out)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Gaussian binomial coefficient `[a choose b]_q` as an integer polynomial;
/// the coefficient of `q^j` counts partitions of `j` inside a
/// `b x (a-b)` box. Zero polynomial when `b > a`.
pub fn q_binomial(a: u64, b: u64) -> IntPoly {
    if b > a {
        return IntPoly::zero();
    }
    // Pascal recurrence [i, j] = [i-1, j-1] + q^j [i-1, j].
    let b = b as usize;
    let mut row: Vec<IntPoly> = vec![IntPoly::one()];
    for i in 1..=a as usize {
        let width = b.min(i);
        let mut next = Vec::with_capacity(width + 1);
        next.push(IntPoly::one());
        for j in 1..=width {
            let left = row.get(j - 1).cloned().unwrap_or_else(IntPoly::zero);
            let up = row.get(j).cloned().unwrap_or_else(IntPoly::zero);
            next.push(left.add(&up.shifted(j)));
        }
        row = next;
    }
    row.get(b).cloned().unwrap_or_else(IntPoly::zero)
}

/// Number of partitions with at most `parts_max` parts, each of size at
/// most `size_max`, whose total is congruent to `residue` mod `modulus`.
/// Extracted from the Gaussian binomial generating function.
pub fn box_partition_count_mod(parts_max: u64, size_max: u64, residue: i64, modulus: u64) -> u64 {
    assert!(modulus >= 1);
    let gf = q_binomial(parts_max + size_max, parts_max);
    let residue = residue.rem_euclid(modulus as i64) as usize;
    let mut total = 0i64;
    let mut j = residue;
    while j < gf.coeffs().len() {
        total += gf.coeff(j);
        j += modulus as usize;
    }
    total as u64
}

/// Number of words of length `d` over `{0, .., k-1}` with symbol sum `n`:
/// the coefficient of `z^n` in `(1 + z + .. + z^{k-1})^d`.
pub fn f_coeff(n: u64, k: u64, d: u64) -> u64 {
    assert!(k >= 1);
    let mut dp = vec![1u64];
    for _ in 0..d {
        let mut next = vec![0u64; dp.len() + k as usize - 1];
        for (s, &ways) in dp.iter().enumerate() {
            for symbol in 0..k as usize {
                next[s + symbol] += ways;
            }
        }
        dp = next;
    }
    dp.get(n as usize).copied().unwrap_or(0)
}

/// Number of aperiodic necklaces of length `i` over `{0, .., k-1}` with
/// total symbol sum exactly `m`, as `(1/i) sum_{d | i, d | m} mu(d)
/// f_coeff(m/d, k, i/d)`.
///
/// The divisor sum is restricted to `d | m` with the rescaled argument
/// `m/d`; the unrescaled sum does not even yield integers (see the unit
/// tests, which pin this against direct orbit enumeration).
pub fn aperiodic_necklace_count(i: u64, k: u64, m: u64) -> u64 {
    assert!(i >= 1 && k >= 1);
    let mut total = 0i64;
    for d in divisors(i) {
        if m % d == 0 {
            total += mobius(d) * f_coeff(m / d, k, i / d) as i64;
        }
    }
    assert!(total >= 0 && total % i as i64 == 0, "necklace sum not divisible by i");
    (total / i as i64) as u64
}
