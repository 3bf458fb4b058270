//! Semisimple conjugacy classes of the split classical groups as monic
//! polynomials, semisimple Lie-algebra orbits, and the map to Weyl-group
//! class labels through factorization bookkeeping.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::cellini::ClassMeasure;
use crate::finite_field::{
    make_field, reciprocal_conjugate, sign_conjugate, Fq, FqPoly, IrreducibleTable,
};
use crate::rational::Rational;
use crate::weyl::{ClassLabel, Partition};
use crate::{Error, Result};

/// Which family of classes to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ClassKind {
    /// Semisimple classes of SL(n, q): monic degree-n polynomials with
    /// constant term 1.
    Sl,
    /// Semisimple classes of Sp(2n, q): self-reciprocal monic degree-2n
    /// polynomials with nonzero constant term and even multiplicity of
    /// `z - 1` and `z + 1`.
    Sp,
    /// Semisimple adjoint orbits of Sp(2n, q) on its Lie algebra (odd
    /// characteristic): even monic degree-2n polynomials.
    SpLie,
}

const SL_GUARD: u64 = 1_000_000;
const SP_GUARD: u64 = 10_000_000;
const SP_LIE_GUARD: u64 = 1_000_000;

fn checked_pow(q: u64, e: u32, guard: u64, what: &str) -> Result<u64> {
    let value = q.checked_pow(e).filter(|&v| v <= guard);
    value.ok_or_else(|| Error::SizeGuard(format!("{what}: {q}^{e} exceeds {guard}")))
}

/// The `q^{n-1}` monic degree-`n` polynomials with constant term 1, in
/// coefficient order.
pub fn enumerate_sl(field: &Fq, n: usize) -> Result<Vec<FqPoly>> {
    assert!(n >= 1);
    let expected = checked_pow(field.q(), n as u32 - 1, SL_GUARD, "SL enumeration")?;
    let mut out = Vec::with_capacity(expected as usize);
    let mut coeffs = vec![0u8; n + 1];
    coeffs[0] = 1;
    coeffs[n] = 1;
    loop {
        out.push(FqPoly::from_coeffs(coeffs.clone()));
        let mut pos = 1;
        loop {
            if pos == n {
                out.sort();
                assert_eq!(out.len() as u64, expected, "Steinberg count for SL");
                return Ok(out);
            }
            coeffs[pos] += 1;
            if (coeffs[pos] as u64) < field.q() {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
    }
}

/// Partition of factor degrees with multiplicity: the type A class label of
/// an SL class.
pub fn phi_a_with(field: &Fq, table: &IrreducibleTable, f: &FqPoly) -> Result<Partition> {
    let factorization = table.factor(field, f)?;
    let mut parts = Vec::new();
    for (g, mult) in &factorization.factors {
        for _ in 0..*mult {
            parts.push(g.degree().unwrap());
        }
    }
    Ok(Partition::new(parts))
}

/// One-off variant of [`phi_a_with`].
pub fn phi_a(field: &Fq, f: &FqPoly) -> Result<Partition> {
    let table = IrreducibleTable::up_to(field, f.degree().unwrap_or(0) / 2)?;
    phi_a_with(field, &table, f)
}

fn linear(field: &Fq, root: u8) -> FqPoly {
    // z - root
    FqPoly::from_coeffs(vec![field.neg(root), 1])
}

fn multiplicity_of(field: &Fq, f: &FqPoly, divisor: &FqPoly) -> u32 {
    let mut remaining = f.clone();
    let mut mult = 0;
    loop {
        let (quot, rem) = field.poly_divrem(&remaining, divisor);
        if !rem.is_zero() {
            return mult;
        }
        remaining = quot;
        mult += 1;
    }
}

/// The `q^n` semisimple classes of Sp(2n, q), by filtering all monic
/// degree-`2n` polynomials. A count different from `q^n` is a hard error:
/// it would mean the defining constraints are wrong.
pub fn enumerate_sp(field: &Fq, n: usize) -> Result<Vec<FqPoly>> {
    assert!(n >= 1);
    checked_pow(field.q(), 2 * n as u32, SP_GUARD, "Sp enumeration")?;
    let z_minus_one = linear(field, 1);
    let z_plus_one = FqPoly::from_coeffs(vec![1, 1]);
    let mut out = Vec::new();
    for f in field.monic_polys(2 * n) {
        if f.constant_term() == 0 {
            continue;
        }
        if reciprocal_conjugate(field, &f)? != f {
            continue;
        }
        if multiplicity_of(field, &f, &z_minus_one) % 2 != 0 {
            continue;
        }
        if multiplicity_of(field, &f, &z_plus_one) % 2 != 0 {
            continue;
        }
        out.push(f);
    }
    let expected = field.q().pow(n as u32);
    if out.len() as u64 != expected {
        return Err(Error::CountMismatch { expected, found: out.len() as u64 });
    }
    Ok(out)
}

/// Shared pairing bookkeeping for the two type C maps: factors come in
/// conjugate pairs (contributing positive cycles) or are self-conjugate
/// (an even multiplicity contributes positive cycles, a leftover odd one a
/// negative cycle of half the degree).
fn phi_c_from_pairing(
    f: &FqPoly,
    factors: &[(FqPoly, u32)],
    conjugate: impl Fn(&FqPoly) -> Result<FqPoly>,
) -> Result<ClassLabel> {
    let by_poly: BTreeMap<&FqPoly, u32> = factors.iter().map(|(g, m)| (g, *m)).collect();
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    let mut consumed: BTreeMap<&FqPoly, bool> = factors.iter().map(|(g, _)| (g, false)).collect();
    for (g, mult) in factors {
        if consumed[g] {
            continue;
        }
        let partner = conjugate(g)?;
        if partner == *g {
            let d = g.degree().unwrap();
            let pairs = mult / 2;
            let leftover = mult % 2;
            for _ in 0..pairs {
                positive.push(d);
            }
            if leftover == 1 {
                if d % 2 != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "odd multiplicity of the self-conjugate odd-degree factor {g} in {f}"
                    )));
                }
                negative.push(d / 2);
            }
            *consumed.get_mut(g).unwrap() = true;
        } else {
            let partner_mult = by_poly.get(&partner).copied().unwrap_or(0);
            if partner_mult != *mult {
                return Err(Error::UnequalPairMultiplicity(f.to_string()));
            }
            for _ in 0..*mult {
                positive.push(g.degree().unwrap());
            }
            *consumed.get_mut(g).unwrap() = true;
            *consumed.get_mut(by_poly.get_key_value(&partner).unwrap().0).unwrap() = true;
        }
    }
    Ok(ClassLabel::C {
        positive: Partition::new(positive),
        negative: Partition::new(negative),
    })
}

/// Class label of an Sp class via the reciprocal-conjugate pairing.
pub fn phi_c_with(field: &Fq, table: &IrreducibleTable, f: &FqPoly) -> Result<ClassLabel> {
    let factorization = table.factor(field, f)?;
    phi_c_from_pairing(f, &factorization.factors, |g| reciprocal_conjugate(field, g))
}

/// One-off variant of [`phi_c_with`].
pub fn phi_c(field: &Fq, f: &FqPoly) -> Result<ClassLabel> {
    let table = IrreducibleTable::up_to(field, f.degree().unwrap_or(0) / 2)?;
    phi_c_with(field, &table, f)
}

/// The `q^n` semisimple Lie-algebra orbits in odd characteristic: the even
/// polynomials `f(z) = g(z^2)` over all monic `g` of degree `n`.
pub fn enumerate_sp_lie(field: &Fq, n: usize) -> Result<Vec<FqPoly>> {
    assert!(n >= 1);
    if field.characteristic() == 2 {
        return Err(Error::InvalidArgument(
            "Lie-algebra orbit enumeration is defined in odd characteristic".into(),
        ));
    }
    let expected = checked_pow(field.q(), n as u32, SP_LIE_GUARD, "sp enumeration")?;
    let mut out = Vec::new();
    for g in field.monic_polys(n) {
        let mut coeffs = vec![0u8; 2 * n + 1];
        for (j, &c) in g.coeffs().iter().enumerate() {
            coeffs[2 * j] = c;
        }
        out.push(FqPoly::from_coeffs(coeffs));
    }
    out.sort();
    assert_eq!(out.len() as u64, expected, "Steinberg count for sp");
    Ok(out)
}

/// Class label of a Lie-algebra orbit via the sign-conjugate pairing; the
/// factor `z` is its own conjugate and always appears with even
/// multiplicity in an even polynomial.
pub fn phi_c_lie_with(field: &Fq, table: &IrreducibleTable, f: &FqPoly) -> Result<ClassLabel> {
    let factorization = table.factor(field, f)?;
    phi_c_from_pairing(f, &factorization.factors, |g| Ok(sign_conjugate(field, g)))
}

/// One-off variant of [`phi_c_lie_with`].
pub fn phi_c_lie(field: &Fq, f: &FqPoly) -> Result<ClassLabel> {
    let table = IrreducibleTable::up_to(field, f.degree().unwrap_or(0) / 2)?;
    phi_c_lie_with(field, &table, f)
}

/// All classes of the requested kind with their labels, in enumeration
/// order.
pub fn labeled_classes(kind: ClassKind, n: usize, q: u64) -> Result<Vec<(FqPoly, ClassLabel)>> {
    let field = make_field(q)?;
    let (polys, degree) = match kind {
        ClassKind::Sl => (enumerate_sl(&field, n)?, n),
        ClassKind::Sp => (enumerate_sp(&field, n)?, 2 * n),
        ClassKind::SpLie => (enumerate_sp_lie(&field, n)?, 2 * n),
    };
    let table = IrreducibleTable::up_to(&field, degree.max(2) / 2)?;
    polys
        .into_iter()
        .map(|f| {
            let label = match kind {
                ClassKind::Sl => ClassLabel::A(phi_a_with(&field, &table, &f)?),
                ClassKind::Sp => phi_c_with(&field, &table, &f)?,
                ClassKind::SpLie => phi_c_lie_with(&field, &table, &f)?,
            };
            assert_eq!(label.weight(), n, "class labels have weight n");
            Ok((f, label))
        })
        .collect()
}

/// Uniform measure over the semisimple classes (or orbits) pushed forward
/// to Weyl-group class labels.
pub fn class_distribution(kind: ClassKind, n: usize, q: u64) -> Result<ClassMeasure> {
    let labeled = labeled_classes(kind, n, q)?;
    let total = BigInt::from(labeled.len());
    let mut values: BTreeMap<ClassLabel, Rational> = BTreeMap::new();
    for (_, label) in labeled {
        *values.entry(label).or_insert_with(|| Rational::new(0.into(), total.clone())) +=
            Rational::new(1.into(), total.clone());
    }
    ClassMeasure::from_values(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn poly(coeffs: &[u8]) -> FqPoly {
        FqPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn sl_enumeration_examples() {
        let f2 = make_field(2).unwrap();
        assert_eq!(
            enumerate_sl(&f2, 3).unwrap(),
            vec![
                poly(&[1, 0, 0, 1]), // z^3 + 1
                poly(&[1, 0, 1, 1]), // z^3 + z^2 + 1
                poly(&[1, 1, 0, 1]), // z^3 + z + 1
                poly(&[1, 1, 1, 1]), // z^3 + z^2 + z + 1
            ]
        );

        for q in [2u64, 3, 5] {
            let field = make_field(q).unwrap();
            assert_eq!(enumerate_sl(&field, 1).unwrap(), vec![poly(&[1, 1])]);
        }

        let f3 = make_field(3).unwrap();
        assert_eq!(enumerate_sl(&f3, 2).unwrap().len(), 3);
    }

    #[test]
    fn phi_a_examples() {
        let f2 = make_field(2).unwrap();
        assert_eq!(phi_a(&f2, &poly(&[1, 0, 0, 1])).unwrap(), Partition::new(vec![2, 1]));
        assert_eq!(phi_a(&f2, &poly(&[1, 1, 1, 1])).unwrap(), Partition::new(vec![1, 1, 1]));
        assert_eq!(phi_a(&f2, &poly(&[1, 1, 0, 1])).unwrap(), Partition::new(vec![3]));
    }

    #[test]
    fn sp_enumeration_examples() {
        let f2 = make_field(2).unwrap();
        assert_eq!(
            enumerate_sp(&f2, 1).unwrap(),
            vec![poly(&[1, 0, 1]), poly(&[1, 1, 1])] // z^2+1, z^2+z+1
        );

        let f3 = make_field(3).unwrap();
        let classes = enumerate_sp(&f3, 1).unwrap();
        // z^2+1, z^2+z+1 = (z-1)^2, z^2+2z+1 = (z+1)^2; z^2-1 is excluded
        assert_eq!(classes, vec![poly(&[1, 0, 1]), poly(&[1, 1, 1]), poly(&[1, 2, 1])]);

        for q in [2u64, 3, 4, 5] {
            let field = make_field(q).unwrap();
            assert_eq!(enumerate_sp(&field, 1).unwrap().len() as u64, q);
        }
    }

    #[test]
    fn phi_c_examples() {
        let f2 = make_field(2).unwrap();
        assert_eq!(
            phi_c(&f2, &poly(&[1, 1, 1])).unwrap(),
            ClassLabel::C { positive: Partition::empty(), negative: Partition::new(vec![1]) }
        );
        assert_eq!(
            phi_c(&f2, &poly(&[1, 0, 1])).unwrap(), // (z+1)^2
            ClassLabel::C { positive: Partition::new(vec![1]), negative: Partition::empty() }
        );

        let f3 = make_field(3).unwrap();
        // (z^2+1)^2 = z^4 + 2z^2 + 1
        assert_eq!(
            phi_c(&f3, &poly(&[1, 0, 2, 0, 1])).unwrap(),
            ClassLabel::C { positive: Partition::new(vec![2]), negative: Partition::empty() }
        );
    }

    #[test]
    fn sp_lie_examples() {
        let f3 = make_field(3).unwrap();
        let orbits = enumerate_sp_lie(&f3, 1).unwrap();
        assert_eq!(orbits, vec![poly(&[0, 0, 1]), poly(&[1, 0, 1]), poly(&[2, 0, 1])]);

        assert_eq!(
            phi_c_lie(&f3, &poly(&[0, 0, 1])).unwrap(), // z^2
            ClassLabel::C { positive: Partition::new(vec![1]), negative: Partition::empty() }
        );
        assert_eq!(
            phi_c_lie(&f3, &poly(&[1, 0, 1])).unwrap(), // z^2+1 irreducible even
            ClassLabel::C { positive: Partition::empty(), negative: Partition::new(vec![1]) }
        );
        assert_eq!(
            phi_c_lie(&f3, &poly(&[2, 0, 1])).unwrap(), // z^2-1 = (z-1)(z+1)
            ClassLabel::C { positive: Partition::new(vec![1]), negative: Partition::empty() }
        );

        let f2 = make_field(2).unwrap();
        assert!(enumerate_sp_lie(&f2, 1).is_err());
    }

    #[test]
    fn class_distribution_examples() {
        let d = class_distribution(ClassKind::Sl, 3, 2).unwrap();
        assert_eq!(d.get(&ClassLabel::A(Partition::new(vec![1, 1, 1]))), ratio(1, 4));
        assert_eq!(d.get(&ClassLabel::A(Partition::new(vec![2, 1]))), ratio(1, 4));
        assert_eq!(d.get(&ClassLabel::A(Partition::new(vec![3]))), ratio(1, 2));

        let d = class_distribution(ClassKind::Sl, 2, 3).unwrap();
        assert_eq!(d.get(&ClassLabel::A(Partition::new(vec![1, 1]))), ratio(2, 3));
        assert_eq!(d.get(&ClassLabel::A(Partition::new(vec![2]))), ratio(1, 3));

        let d = class_distribution(ClassKind::Sp, 1, 3).unwrap();
        assert_eq!(
            d.get(&ClassLabel::C {
                positive: Partition::new(vec![1]),
                negative: Partition::empty()
            }),
            ratio(2, 3)
        );
        assert_eq!(
            d.get(&ClassLabel::C {
                positive: Partition::empty(),
                negative: Partition::new(vec![1])
            }),
            ratio(1, 3)
        );
    }

    #[test]
    fn steinberg_counts() {
        for (n, q) in [(2usize, 2u64), (2, 3), (3, 2), (3, 3), (4, 2), (2, 4), (2, 5)] {
            let field = make_field(q).unwrap();
            assert_eq!(enumerate_sl(&field, n).unwrap().len() as u64, q.pow(n as u32 - 1));
            assert_eq!(enumerate_sp(&field, n).unwrap().len() as u64, q.pow(n as u32));
            if q % 2 == 1 {
                assert_eq!(enumerate_sp_lie(&field, n).unwrap().len() as u64, q.pow(n as u32));
            }
        }
    }

    #[test]
    fn sp_factor_multisets_closed_under_conjugation() {
        for q in [2u64, 3, 4] {
            let field = make_field(q).unwrap();
            for n in 1..=2usize {
                let table = IrreducibleTable::up_to(&field, n).unwrap();
                for f in enumerate_sp(&field, n).unwrap() {
                    let factors = table.factor(&field, &f).unwrap().factors;
                    for (g, mult) in &factors {
                        let partner = reciprocal_conjugate(&field, g).unwrap();
                        let partner_mult = factors
                            .iter()
                            .find(|(h, _)| *h == partner)
                            .map(|(_, m)| *m)
                            .unwrap_or(0);
                        assert_eq!(partner_mult, *mult, "f={f} g={g}");
                    }
                }
                if q % 2 == 1 {
                    for f in enumerate_sp_lie(&field, n).unwrap() {
                        let factors = table.factor(&field, &f).unwrap().factors;
                        for (g, mult) in &factors {
                            let partner = sign_conjugate(&field, g);
                            let partner_mult = factors
                                .iter()
                                .find(|(h, _)| *h == partner)
                                .map(|(_, m)| *m)
                                .unwrap_or(0);
                            assert_eq!(partner_mult, *mult, "f={f} g={g}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugacy_and_lie_distributions_agree_in_odd_characteristic() {
        for q in [3u64, 5] {
            for n in 1..=2usize {
                assert_eq!(
                    class_distribution(ClassKind::Sp, n, q).unwrap(),
                    class_distribution(ClassKind::SpLie, n, q).unwrap(),
                    "n={n} q={q}"
                );
            }
        }
    }

    #[test]
    fn label_weights_equal_rank() {
        for (kind, n, q) in [
            (ClassKind::Sl, 3, 3u64),
            (ClassKind::Sp, 2, 3),
            (ClassKind::SpLie, 2, 3),
        ] {
            for (_, label) in labeled_classes(kind, n, q).unwrap() {
                assert_eq!(label.weight(), n);
            }
        }
    }
}
