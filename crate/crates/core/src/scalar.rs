//! Exact field arithmetic: rationals, prime fields, and simple extensions.
//!
//! Every coefficient in the crate is a [`Scalar`] owned by a [`Field`].
//! There is no floating point anywhere; rationals are arbitrary-precision
//! fractions, prime-field elements are reduced residues, and extension
//! elements are coefficient vectors reduced modulo a validated irreducible
//! minimal polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::integer::Roots;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;

use crate::error::{Error, Result};
use crate::poly;

#[derive(Debug, PartialEq, Eq)]
pub enum FieldKind {
    /// The rational numbers.
    Rationals,
    /// The prime field of the given order.
    Prime(u64),
    /// A simple extension `base[t] / (minpoly)`.
    ///
    /// `minpoly` is monic of degree >= 2 over `base`, stored low to high
    /// including the leading 1, and validated irreducible at construction.
    Extension { base: Field, minpoly: Vec<Scalar> },
}

/// A coefficient field. Cheap to clone and share.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    /// Build `base[t]/(minpoly)`. The minimal polynomial is given low to
    /// high over `base` and must be monic of degree >= 2 and irreducible;
    /// degrees beyond the bounded irreducibility check are rejected.
    pub fn extension(base: &Field, minpoly: Vec<Scalar>) -> Result<Field> {
        if minpoly.len() < 3 {
            return Err(Error::BadMinimalPolynomial);
        }
        for c in &minpoly {
            if c.field() != base {
                return Err(Error::FieldMismatch);
            }
        }
        let lead = minpoly.last().unwrap();
        if !lead.is_one() {
            return Err(Error::BadMinimalPolynomial);
        }
        match poly::irreducible(base, &minpoly)? {
            poly::Irreducibility::Irreducible => {}
            poly::Irreducibility::Reducible(factor) => {
                return Err(Error::ReduciblePolynomial(factor));
            }
        }
        Ok(Field(Arc::new(FieldKind::Extension {
            base: base.clone(),
            minpoly,
        })))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    /// 0 for characteristic zero, p otherwise.
    pub fn characteristic(&self) -> u64 {
        match self.kind() {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
            FieldKind::Extension { base, .. } => base.characteristic(),
        }
    }

    pub fn extension_degree(&self) -> Option<usize> {
        match self.kind() {
            FieldKind::Extension { minpoly, .. } => Some(minpoly.len() - 1),
            _ => None,
        }
    }

    pub fn base(&self) -> Option<&Field> {
        match self.kind() {
            FieldKind::Extension { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.kind() {
            FieldKind::Rationals => Scalar {
                field: self.clone(),
                repr: Repr::Rational(BigRational::zero()),
            },
            FieldKind::Prime(_) => Scalar {
                field: self.clone(),
                repr: Repr::Prime(0),
            },
            FieldKind::Extension { base, minpoly } => Scalar {
                field: self.clone(),
                repr: Repr::Extension(vec![base.zero(); minpoly.len() - 1]),
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    /// The image of an integer under the unique ring map from Z.
    pub fn integer(&self, n: i64) -> Scalar {
        match self.kind() {
            FieldKind::Rationals => Scalar {
                field: self.clone(),
                repr: Repr::Rational(BigRational::from(BigInt::from(n))),
            },
            FieldKind::Prime(p) => Scalar {
                field: self.clone(),
                repr: Repr::Prime(n.rem_euclid(*p as i64) as u64),
            },
            FieldKind::Extension { base, minpoly } => {
                let mut coeffs = vec![base.zero(); minpoly.len() - 1];
                coeffs[0] = base.integer(n);
                Scalar {
                    field: self.clone(),
                    repr: Repr::Extension(coeffs),
                }
            }
        }
    }

    pub fn big_integer(&self, n: &BigInt) -> Scalar {
        match self.kind() {
            FieldKind::Rationals => Scalar {
                field: self.clone(),
                repr: Repr::Rational(BigRational::from(n.clone())),
            },
            FieldKind::Prime(p) => {
                let m = n.mod_floor(&BigInt::from(*p));
                let (_, digits) = m.to_u64_digits();
                Scalar {
                    field: self.clone(),
                    repr: Repr::Prime(digits.first().copied().unwrap_or(0)),
                }
            }
            FieldKind::Extension { base, minpoly } => {
                let mut coeffs = vec![base.zero(); minpoly.len() - 1];
                coeffs[0] = base.big_integer(n);
                Scalar {
                    field: self.clone(),
                    repr: Repr::Extension(coeffs),
                }
            }
        }
    }

    /// The class of the adjoined generator `t` of an extension field.
    pub fn generator(&self) -> Result<Scalar> {
        match self.kind() {
            FieldKind::Extension { base, minpoly } => {
                let mut coeffs = vec![base.zero(); minpoly.len() - 1];
                coeffs[1] = base.one();
                Ok(Scalar {
                    field: self.clone(),
                    repr: Repr::Extension(coeffs),
                })
            }
            _ => Err(Error::Unsupported(
                "only extension fields have a generator".into(),
            )),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
            FieldKind::Extension { base, minpoly } => {
                let coeffs: Vec<String> = minpoly.iter().map(|c| c.to_string()).collect();
                write!(f, "{}[{}]", base, coeffs.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Rational(BigRational),
    Prime(u64),
    Extension(Vec<Scalar>),
}

/// An element of a [`Field`]. Immutable; all operations are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    repr: Repr,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rational(value: BigRational) -> Scalar {
        Scalar {
            field: Field::rationals(),
            repr: Repr::Rational(value),
        }
    }

    pub fn rational_i64(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn prime_element(field: &Field, value: u64) -> Result<Scalar> {
        match field.kind() {
            FieldKind::Prime(p) => Ok(Scalar {
                field: field.clone(),
                repr: Repr::Prime(value % p),
            }),
            _ => Err(Error::FieldMismatch),
        }
    }

    /// An extension element from its coefficient vector (length = degree).
    pub fn extension_element(field: &Field, coeffs: Vec<Scalar>) -> Result<Scalar> {
        match field.kind() {
            FieldKind::Extension { base, minpoly } => {
                if coeffs.len() != minpoly.len() - 1 {
                    return Err(Error::DimensionMismatch {
                        expected: minpoly.len() - 1,
                        got: coeffs.len(),
                    });
                }
                for c in &coeffs {
                    if c.field() != base {
                        return Err(Error::FieldMismatch);
                    }
                }
                Ok(Scalar {
                    field: field.clone(),
                    repr: Repr::Extension(coeffs),
                })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            _ => None,
        }
    }

    pub fn as_prime(&self) -> Option<u64> {
        match &self.repr {
            Repr::Prime(v) => Some(*v),
            _ => None,
        }
    }

    pub fn extension_coeffs(&self) -> Option<&[Scalar]> {
        match &self.repr {
            Repr::Extension(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_zero(),
            Repr::Prime(v) => *v == 0,
            Repr::Extension(c) => c.iter().all(Scalar::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &self.field.one()
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert!(
            self.field == other.field,
            "scalar fields differ: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Prime(a), Repr::Prime(b)) => {
                let p = self.field.characteristic();
                Repr::Prime(((*a as u128 + *b as u128) % p as u128) as u64)
            }
            (Repr::Extension(a), Repr::Extension(b)) => Repr::Extension(
                a.iter().zip(b).map(|(x, y)| x.checked_add(y)).collect::<Result<_>>()?,
            ),
            _ => unreachable!("repr matches field"),
        };
        Ok(Scalar {
            field: self.field.clone(),
            repr,
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.checked_neg())
    }

    pub fn checked_neg(&self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(-a),
            Repr::Prime(a) => {
                let p = self.field.characteristic();
                Repr::Prime((p - a) % p)
            }
            Repr::Extension(a) => Repr::Extension(a.iter().map(Scalar::checked_neg).collect()),
        };
        Scalar {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Prime(a), Repr::Prime(b)) => {
                Repr::Prime(mulmod(*a, *b, self.field.characteristic()))
            }
            (Repr::Extension(a), Repr::Extension(b)) => {
                let FieldKind::Extension { base, minpoly } = self.field.kind() else {
                    unreachable!()
                };
                let product = poly::mul(base, a, b);
                let reduced = poly::rem(base, &product, minpoly)?;
                Repr::Extension(poly::pad(base, reduced, minpoly.len() - 1))
            }
            _ => unreachable!("repr matches field"),
        };
        Ok(Scalar {
            field: self.field.clone(),
            repr,
        })
    }

    /// Multiplicative inverse; `DivisionByZero` on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(a) => Repr::Rational(a.recip()),
            Repr::Prime(a) => {
                let p = self.field.characteristic();
                Repr::Prime(powmod(*a, p - 2, p))
            }
            Repr::Extension(a) => {
                let FieldKind::Extension { base, minpoly } = self.field.kind() else {
                    unreachable!()
                };
                // xgcd(a, minpoly) = 1 since minpoly is irreducible.
                let (g, s, _) = poly::xgcd(base, a, minpoly)?;
                debug_assert_eq!(g.len(), 1);
                let ginv = g[0].inv()?;
                let scaled: Vec<Scalar> =
                    s.iter().map(|c| c.checked_mul(&ginv)).collect::<Result<_>>()?;
                let reduced = poly::rem(base, &scaled, minpoly)?;
                Repr::Extension(poly::pad(base, reduced, minpoly.len() - 1))
            }
        };
        Ok(Scalar {
            field: self.field.clone(),
            repr,
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inv()?)
    }

    /// Integer power (negative exponents through the inverse).
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field.one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&b)?;
            }
            b = b.checked_mul(&b)?;
            n >>= 1;
        }
        Ok(acc)
    }

    /// A square root in the same field, if one exists. `Ok(None)` means
    /// provably not a square; `Err(Unsupported)` means the field is beyond
    /// the implemented search (extension bases of degree > 2, char 2
    /// extensions).
    pub fn sqrt(&self) -> Result<Option<Scalar>> {
        match &self.repr {
            Repr::Rational(q) => {
                if q.is_negative() {
                    return Ok(None);
                }
                let nr = exact_sqrt_bigint(q.numer());
                let dr = exact_sqrt_bigint(q.denom());
                match (nr, dr) {
                    (Some(n), Some(d)) => Ok(Some(Scalar::rational(BigRational::new(n, d)))),
                    _ => Ok(None),
                }
            }
            Repr::Prime(v) => {
                let p = self.field.characteristic();
                if p == 2 {
                    return Ok(Some(self.clone()));
                }
                for r in 0..p {
                    if mulmod(r, r, p) == *v {
                        return Ok(Some(Scalar {
                            field: self.field.clone(),
                            repr: Repr::Prime(r),
                        }));
                    }
                }
                Ok(None)
            }
            Repr::Extension(coeffs) => {
                let FieldKind::Extension { base, minpoly } = self.field.kind() else {
                    unreachable!()
                };
                if minpoly.len() != 3 {
                    return Err(Error::Unsupported(
                        "square roots implemented only for quadratic extensions".into(),
                    ));
                }
                if self.field.characteristic() == 2 {
                    return Err(Error::Unsupported(
                        "square roots in characteristic-2 extensions".into(),
                    ));
                }
                self.sqrt_quadratic_extension(base, minpoly, coeffs)
            }
        }
    }

    // Solve (p + q t)^2 = c + d t in base[t]/(t^2 + beta t + gamma).
    fn sqrt_quadratic_extension(
        &self,
        base: &Field,
        minpoly: &[Scalar],
        coeffs: &[Scalar],
    ) -> Result<Option<Scalar>> {
        let gamma = &minpoly[0];
        let beta = &minpoly[1];
        let c = &coeffs[0];
        let d = &coeffs[1];
        let two = base.integer(2);
        let four = base.integer(4);

        let verify = |cand: Scalar| -> Result<Option<Scalar>> {
            if cand.checked_mul(&cand)? == *self {
                Ok(Some(cand))
            } else {
                Ok(None)
            }
        };

        // q = 0 branch: only possible when d = 0.
        if d.is_zero() {
            if let Some(p) = c.sqrt()? {
                let cand = Scalar::extension_element(&self.field, vec![p, base.zero()])?;
                if let Some(r) = verify(cand)? {
                    return Ok(Some(r));
                }
            }
        }

        // q != 0 branch: (beta^2-4gamma) u^2 + (2 beta d - 4c) u + d^2 = 0
        // with u = q^2 and p = (d + beta q^2) / (2q).
        let a2 = beta.checked_mul(beta)?.checked_sub(&four.checked_mul(gamma)?)?;
        let b2 = two
            .checked_mul(beta)?
            .checked_mul(d)?
            .checked_sub(&four.checked_mul(c)?)?;
        let c2 = d.checked_mul(d)?;
        debug_assert!(!a2.is_zero(), "irreducible quadratic has nonzero discriminant");
        let disc = b2.checked_mul(&b2)?.checked_sub(&four.checked_mul(&a2)?.checked_mul(&c2)?)?;
        let Some(s) = disc.sqrt()? else {
            return Ok(None);
        };
        let denom = two.checked_mul(&a2)?;
        for sign in [s.clone(), s.checked_neg()] {
            let u = b2.checked_neg().checked_add(&sign)?.checked_div(&denom)?;
            let Some(q) = u.sqrt()? else { continue };
            if q.is_zero() {
                continue;
            }
            let p = d
                .checked_add(&beta.checked_mul(&u)?)?
                .checked_div(&two.checked_mul(&q)?)?;
            let cand = Scalar::extension_element(&self.field, vec![p, q])?;
            if let Some(r) = verify(cand)? {
                return Ok(Some(r));
            }
        }
        Ok(None)
    }
}

fn exact_sqrt_bigint(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Prime(v) => write!(f, "{v}"),
            Repr::Extension(coeffs) => {
                let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// Embed a base-field scalar into a simple extension of its field as the
/// constant coefficient vector; a field homomorphism.
pub fn embed(a: &Scalar, target: &Field) -> Result<Scalar> {
    match target.kind() {
        FieldKind::Extension { base, minpoly } => {
            if base != a.field() {
                return Err(Error::FieldMismatch);
            }
            let mut coeffs = vec![base.zero(); minpoly.len() - 1];
            coeffs[0] = a.clone();
            Scalar::extension_element(target, coeffs)
        }
        _ => Err(Error::FieldMismatch),
    }
}

/// Decompose a nonzero rational multiplicatively: `q = sign * prod p^e`.
/// The exponent map omits zero entries.
pub fn factor_rational_multiplicative(q: &BigRational) -> Result<(i8, BTreeMap<u64, i64>)> {
    if q.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = if q.is_negative() { -1 } else { 1 };
    let mut exponents: BTreeMap<u64, i64> = BTreeMap::new();
    accumulate_prime_exponents(&q.numer().abs(), 1, &mut exponents)?;
    accumulate_prime_exponents(&q.denom().abs(), -1, &mut exponents)?;
    exponents.retain(|_, e| *e != 0);
    Ok((sign, exponents))
}

fn accumulate_prime_exponents(
    n: &BigInt,
    direction: i64,
    out: &mut BTreeMap<u64, i64>,
) -> Result<()> {
    let (_, digits) = n.to_u64_digits();
    if digits.len() > 1 {
        return Err(Error::Unsupported(
            "rational factorization beyond 64-bit magnitudes".into(),
        ));
    }
    let mut m = digits.first().copied().unwrap_or(0);
    debug_assert!(m > 0);
    let mut p = 2u64;
    while p.saturating_mul(p) <= m && p <= 1_000_000 {
        while m % p == 0 {
            *out.entry(p).or_insert(0) += direction;
            m /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        if m > 1_000_000_000_000 {
            return Err(Error::Unsupported(
                "rational factorization hit a large unfactored part".into(),
            ));
        }
        *out.entry(m).or_insert(0) += direction;
    }
    Ok(())
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.assert_same_field(rhs);
                self.$checked(rhs).expect("checked scalar op")
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.assert_same_field(&rhs);
                self.$checked(&rhs).expect("checked scalar op")
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.checked_neg()
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.checked_neg()
    }
}
