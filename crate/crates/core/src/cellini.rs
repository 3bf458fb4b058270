//! The probability elements `x_k`: closed forms for both families, the
//! lattice-point definition, convolution, class pushforward and the
//! left-multiplication matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numtheory::{binomial, box_partition_count_mod, divisors, q_binomial, ramanujan_sum};
use crate::rational::{to_frac_string, Rational};
use crate::root_datum::RootDatum;
use crate::weyl::{ClassLabel, GroupType, PermA, PermC, WeylElement};
use crate::{Error, Result};

/// Finitely supported probability measure on a Weyl group, stored densely
/// over the whole group: every element appears, zeros included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measure<E: WeylElement> {
    n: usize,
    values: BTreeMap<E, Rational>,
}

impl<E: WeylElement> Measure<E> {
    /// Builds a measure from explicit coefficients, checking the measure
    /// axioms exactly: nonnegative values summing to one, support inside
    /// the group on `n` letters.
    pub fn from_coefficients(n: usize, values: BTreeMap<E, Rational>) -> Result<Self> {
        let mut total = Rational::zero();
        for (w, value) in &values {
            if w.degree() != n {
                return Err(Error::GroupMismatch);
            }
            if value.is_negative() {
                return Err(Error::InvalidArgument(format!(
                    "negative coefficient {} at {w:?}",
                    to_frac_string(value)
                )));
            }
            total += value;
        }
        if !total.is_one() {
            return Err(Error::InvalidArgument(format!(
                "coefficients sum to {}, not 1",
                to_frac_string(&total)
            )));
        }
        Ok(Measure { n, values })
    }

    /// Dense measure from a per-element formula.
    pub fn from_fn(n: usize, f: impl Fn(&E) -> Rational) -> Result<Self> {
        let mut values = BTreeMap::new();
        for w in E::enumerate(n)? {
            let value = f(&w);
            values.insert(w, value);
        }
        Measure::from_coefficients(n, values)
    }

    /// Dense measure from hit counts out of `total` equally likely draws.
    pub fn from_counts(n: usize, counts: &BTreeMap<E, u64>, total: u64) -> Result<Self> {
        let denom = BigInt::from(total);
        Measure::from_fn(n, |w| {
            let hits = counts.get(w).copied().unwrap_or(0);
            Rational::new(BigInt::from(hits), denom.clone())
        })
    }

    pub fn point_mass_at_identity(n: usize) -> Result<Self> {
        Measure::from_fn(n, |w| {
            if *w == E::identity(n) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, w: &E) -> Rational {
        self.values.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&E, &Rational)> + '_ {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.values.values().sum()
    }

    /// Pushforward along inversion: the measure of `w^{-1}`.
    pub fn inverted(&self) -> Self {
        let values = self.values.iter().map(|(w, v)| (w.inverse(), v.clone())).collect();
        Measure { n: self.n, values }
    }

    /// Report form: `{"group": .., "k": .., "entries": [..]}` with elements
    /// as signed integer arrays and values as `"num/den"` strings, in
    /// enumeration order. `k` is included when the measure is some `x_k`.
    pub fn to_json(&self, k: Option<u64>) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .values
            .iter()
            .map(|(w, v)| {
                serde_json::json!({
                    "element": w.signed_images(),
                    "value": to_frac_string(v),
                })
            })
            .collect();
        let mut obj = serde_json::json!({
            "group": { "type": E::GROUP.to_string(), "n": self.n },
            "entries": entries,
        });
        if let Some(k) = k {
            obj["k"] = k.into();
        }
        obj
    }
}

/// Group-algebra product of two probability elements on the same group:
/// the coefficient of `w` is the sum of `m1(u) m2(v)` over `uv = w`.
pub fn convolve<E: WeylElement>(m1: &Measure<E>, m2: &Measure<E>) -> Result<Measure<E>> {
    if m1.n != m2.n {
        return Err(Error::GroupMismatch);
    }
    let mut values: BTreeMap<E, Rational> =
        m1.values.keys().map(|w| (w.clone(), Rational::zero())).collect();
    for (u, a) in &m1.values {
        if a.is_zero() {
            continue;
        }
        for (v, b) in &m2.values {
            if b.is_zero() {
                continue;
            }
            *values.get_mut(&u.compose(v)).expect("products stay in the group") += a * b;
        }
    }
    Measure::from_coefficients(m1.n, values)
}

/// Probability measure on conjugacy-class labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMeasure {
    values: BTreeMap<ClassLabel, Rational>,
}

impl ClassMeasure {
    pub fn from_values(values: BTreeMap<ClassLabel, Rational>) -> Result<Self> {
        let total: Rational = values.values().sum();
        if values.values().any(|v| v.is_negative()) || !total.is_one() {
            return Err(Error::InvalidArgument("class values must be a probability vector".into()));
        }
        Ok(ClassMeasure { values })
    }

    pub fn get(&self, label: &ClassLabel) -> Rational {
        self.values.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ClassLabel, &Rational)> + '_ {
        self.values.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &ClassLabel> + '_ {
        self.values.keys()
    }

    /// Rows on which the two measures differ, missing labels reading as 0.
    pub fn diff(&self, other: &ClassMeasure) -> Vec<(ClassLabel, Rational, Rational)> {
        let mut labels: Vec<&ClassLabel> = self.values.keys().chain(other.values.keys()).collect();
        labels.sort();
        labels.dedup();
        labels
            .into_iter()
            .filter_map(|label| {
                let left = self.get(label);
                let right = other.get(label);
                (left != right).then(|| (label.clone(), left, right))
            })
            .collect()
    }

    /// Sorted `[{label, value}]` array with exact `"num/den"` values.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.values
                .iter()
                .map(|(label, v)| {
                    serde_json::json!({ "label": label.to_json(), "value": to_frac_string(v) })
                })
                .collect(),
        )
    }
}

/// Sum the coefficients of a measure over each conjugacy-class label.
pub fn pushforward_classes<E: WeylElement>(m: &Measure<E>) -> ClassMeasure {
    let mut values: BTreeMap<ClassLabel, Rational> = BTreeMap::new();
    for (w, v) in m.iter() {
        *values.entry(w.cycle_type()).or_insert_with(Rational::zero) += v;
    }
    ClassMeasure { values }
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// The four equivalent closed forms for the type A coefficient; they are
/// asserted equal wherever the measures are used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeAForm {
    /// Partitions with at most `n-1` parts of size at most `k - cd(w)`,
    /// total congruent to `-maj(w)` mod `n`.
    BoxPartitions,
    /// The transposed box: at most `k - cd(w)` parts of size at most `n-1`.
    TransposedBox,
    /// Von Sterneck style divisor sum with Ramanujan sums.
    RamanujanSum,
    /// Coefficient extraction from `q^{maj} [k+n-cd-1 choose n-1]_q`.
    QBinomial,
}

pub const TYPE_A_FORMS: [TypeAForm; 4] = [
    TypeAForm::BoxPartitions,
    TypeAForm::TransposedBox,
    TypeAForm::RamanujanSum,
    TypeAForm::QBinomial,
];

fn pow_rational(base: u64, exp: u32) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(exp))
}

/// Coefficient of `w` in `x_k` for the symmetric group, by the requested
/// form. All forms return exactly the same rational.
pub fn xk_coefficient_a_form(w: &PermA, k: u64, form: TypeAForm) -> Rational {
    assert!(k >= 1);
    let n = w.degree();
    let stats = w.descent_stats();
    let cd = stats.cyclic_descents as u64;
    let maj = stats.maj as i64;
    let scale = pow_rational(k, n as u32 - 1);
    match form {
        TypeAForm::BoxPartitions => {
            if k < cd {
                return Rational::zero();
            }
            let count = box_partition_count_mod(n as u64 - 1, k - cd, -maj, n as u64);
            Rational::from_integer(count.into()) / scale
        }
        TypeAForm::TransposedBox => {
            if k < cd {
                return Rational::zero();
            }
            let count = box_partition_count_mod(k - cd, n as u64 - 1, -maj, n as u64);
            Rational::from_integer(count.into()) / scale
        }
        TypeAForm::RamanujanSum => {
            if k < cd {
                return Rational::zero();
            }
            if k == cd {
                return if maj % n as i64 == 0 {
                    Rational::one() / scale
                } else {
                    Rational::zero()
                };
            }
            let m = k - cd;
            let mut sum = BigInt::zero();
            for d in divisors(num_integer::Integer::gcd(&(n as u64), &m)) {
                let b = binomial((n as u64 + m - d) / d, m / d);
                sum += b * BigInt::from(ramanujan_sum(d, -maj).expect("d >= 1"));
            }
            Rational::new(sum, BigInt::from(n)) / scale
        }
        TypeAForm::QBinomial => {
            let gf = q_binomial(k + n as u64 - cd - 1, n as u64 - 1);
            let maj = maj as usize;
            let mut count = 0i64;
            // coefficient of q^{rn} in q^{maj} gf, summed over r >= 0
            let mut power = maj.next_multiple_of(n);
            while power - maj < gf.coeffs().len() {
                count += gf.coeff(power - maj);
                power += n;
            }
            Rational::from_integer(count.into()) / scale
        }
    }
}

/// Canonical type A closed form (the box-partition count).
pub fn xk_coefficient_a(w: &PermA, k: u64) -> Rational {
    xk_coefficient_a_form(w, k, TypeAForm::BoxPartitions)
}

/// Coefficient of `w` in `x_k` for signed permutations: a single binomial
/// in the descent count for odd `k`, in the cyclic descent count for even
/// `k`.
pub fn xk_coefficient_c(w: &PermC, k: u64) -> Rational {
    assert!(k >= 1);
    let n = w.degree() as u64;
    let stats = w.descent_stats();
    let count = if k % 2 == 1 {
        binomial((k - 1) / 2 + n - stats.descents as u64, n)
    } else {
        let cd = stats.cyclic_descents as u64;
        if k / 2 + n < cd {
            BigInt::zero()
        } else {
            binomial(k / 2 + n - cd, n)
        }
    };
    Rational::from_integer(count) / pow_rational(k, n as u32)
}

/// Elements whose family has a closed form for the `x_k` coefficient.
pub trait CelliniElement: WeylElement {
    fn xk_coefficient(&self, k: u64) -> Rational;
}

impl CelliniElement for PermA {
    fn xk_coefficient(&self, k: u64) -> Rational {
        xk_coefficient_a(self, k)
    }
}

impl CelliniElement for PermC {
    fn xk_coefficient(&self, k: u64) -> Rational {
        xk_coefficient_c(self, k)
    }
}

/// How to build an `x_k` measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum XkMethod {
    ClosedForm,
    Definition,
}

/// The measure `x_k` on the group with `n` letters.
///
/// `Definition` counts lattice points of the dilated fundamental alcove per
/// element (rank at most 5); `ClosedForm` uses the per-family formulas. The
/// two agree exactly.
pub fn xk_measure<E: CelliniElement>(n: usize, k: u64, method: XkMethod) -> Result<Measure<E>> {
    if k == 0 {
        return Err(Error::InvalidArgument("x_k requires k >= 1".into()));
    }
    match method {
        XkMethod::ClosedForm => Measure::from_fn(n, |w: &E| w.xk_coefficient(k)),
        XkMethod::Definition => {
            let datum = RootDatum::new(E::GROUP, n);
            let rank = datum.rank();
            if rank == 0 {
                return Measure::point_mass_at_identity(n);
            }
            if rank > 5 {
                return Err(Error::SizeGuard(
                    "lattice-point definition is limited to rank <= 5".into(),
                ));
            }
            let counts = datum.a_k_counts(k);
            let scale = pow_rational(k, rank as u32);
            Measure::from_fn(n, |w: &E| {
                let avoid = !(w.cyclic_descent_mask()) & (counts.len() as u32 - 1);
                // sum a_{k,I} over subsets I of the complement of Cdes(w)
                let mut total = 0u64;
                let mut sub = avoid;
                loop {
                    total += counts[sub as usize];
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & avoid;
                }
                Rational::from_integer(total.into()) / scale.clone()
            })
        }
    }
}

/// Type-erased measure for report code that dispatches on a group flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMeasure {
    A(Measure<PermA>),
    C(Measure<PermC>),
}

impl AnyMeasure {
    pub fn group_type(&self) -> GroupType {
        match self {
            AnyMeasure::A(_) => GroupType::A,
            AnyMeasure::C(_) => GroupType::C,
        }
    }

    pub fn pushforward_classes(&self) -> ClassMeasure {
        match self {
            AnyMeasure::A(m) => pushforward_classes(m),
            AnyMeasure::C(m) => pushforward_classes(m),
        }
    }

    pub fn to_json(&self, k: Option<u64>) -> serde_json::Value {
        match self {
            AnyMeasure::A(m) => m.to_json(k),
            AnyMeasure::C(m) => m.to_json(k),
        }
    }
}

/// `x_k` for either family behind one entry point.
pub fn xk_measure_any(kind: GroupType, n: usize, k: u64, method: XkMethod) -> Result<AnyMeasure> {
    Ok(match kind {
        GroupType::A => AnyMeasure::A(xk_measure::<PermA>(n, k, method)?),
        GroupType::C => AnyMeasure::C(xk_measure::<PermC>(n, k, method)?),
    })
}

// ---------------------------------------------------------------------------
// Left multiplication
// ---------------------------------------------------------------------------

const LEFT_MULT_GUARD: usize = 384;

/// Matrix of left multiplication by the group-algebra element of a measure,
/// in the group-element basis (column order = enumeration order). Every
/// column sums to one.
pub fn left_mult_matrix<E: WeylElement>(m: &Measure<E>) -> Result<(Vec<E>, Vec<Vec<Rational>>)> {
    let elements = E::enumerate(m.degree())?;
    if elements.len() > LEFT_MULT_GUARD {
        return Err(Error::SizeGuard(format!(
            "left multiplication matrix limited to groups of order {LEFT_MULT_GUARD}"
        )));
    }
    let index: BTreeMap<&E, usize> = elements.iter().zip(0..).collect();
    let size = elements.len();
    let mut matrix = vec![vec![Rational::zero(); size]; size];
    for (w, coeff) in m.iter() {
        if coeff.is_zero() {
            continue;
        }
        for (col, v) in elements.iter().enumerate() {
            let row = index[&w.compose(v)];
            matrix[row][col] += coeff;
        }
    }
    Ok((elements, matrix))
}

/// Numerically approximated eigenvalues of a rational matrix, sorted by
/// descending real part then imaginary part.
///
/// Exploratory output only: this is the one floating-point computation in
/// the crate and is never used in any verification or acceptance path.
pub fn approx_spectrum(matrix: &[Vec<Rational>]) -> Vec<(f64, f64)> {
    let size = matrix.len();
    let m = nalgebra::DMatrix::<f64>::from_fn(size, size, |i, j| {
        let r = &matrix[i][j];
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    });
    let mut eigen: Vec<(f64, f64)> =
        m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect();
    eigen.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
    eigen
}
