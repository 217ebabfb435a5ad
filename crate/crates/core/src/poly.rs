//! Dense univariate polynomial arithmetic over any [`Field`], plus the
//! bounded exact factorization routines used for irreducibility checking
//! and eigenvalue computation.
//!
//! Polynomials are coefficient vectors, constant term first. The zero
//! polynomial is the empty vector; `normalize` trims trailing zeros.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::Integer;

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldKind, Scalar};

pub fn normalize(coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut v = coeffs.to_vec();
    while v.last().map_or(false, Scalar::is_zero) {
        v.pop();
    }
    v
}

pub fn pad(field: &Field, coeffs: Vec<Scalar>, len: usize) -> Vec<Scalar> {
    let mut v = coeffs;
    v.truncate(len);
    while v.len() < len {
        v.push(field.zero());
    }
    v
}

/// Degree, or None for the zero polynomial.
pub fn degree(coeffs: &[Scalar]) -> Option<usize> {
    let n = normalize(coeffs);
    if n.is_empty() {
        None
    } else {
        Some(n.len() - 1)
    }
}

pub fn add(field: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| field.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| field.zero());
        out.push(&x + &y);
    }
    normalize(&out)
}

pub fn sub(field: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let neg: Vec<Scalar> = b.iter().map(|c| -c).collect();
    add(field, a, &neg)
}

pub fn scale(_field: &Field, a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    normalize(&a.iter().map(|x| x * c).collect::<Vec<_>>())
}

pub fn mul(field: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let a = normalize(a);
    let b = normalize(b);
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    normalize(&out)
}

/// Euclidean division: `a = q*b + r` with deg r < deg b.
pub fn divrem(field: &Field, a: &[Scalar], b: &[Scalar]) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let b = normalize(b);
    if b.is_empty() {
        return Err(Error::DivisionByZero);
    }
    let lead_inv = b.last().unwrap().inv()?;
    let mut rem = normalize(a);
    let mut quot = vec![field.zero(); rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap().checked_mul(&lead_inv)?;
        quot[shift] = factor.clone();
        for (i, c) in b.iter().enumerate() {
            let t = c.checked_mul(&factor)?;
            rem[shift + i] = rem[shift + i].checked_sub(&t)?;
        }
        rem = normalize(&rem);
    }
    Ok((normalize(&quot), rem))
}

pub fn rem(field: &Field, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
    Ok(divrem(field, a, b)?.1)
}

pub fn eval(field: &Field, coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

pub fn derivative(field: &Field, coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::new();
    for (i, c) in coeffs.iter().enumerate().skip(1) {
        out.push(c * &field.integer(i as i64));
    }
    normalize(&out)
}

pub fn monic(_field: &Field, coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
    let v = normalize(coeffs);
    if v.is_empty() {
        return Ok(v);
    }
    let inv = v.last().unwrap().inv()?;
    Ok(v.iter().map(|c| c * &inv).collect())
}

/// Monic gcd via the Euclidean algorithm.
pub fn gcd(field: &Field, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut x = normalize(a);
    let mut y = normalize(b);
    while !y.is_empty() {
        let r = rem(field, &x, &y)?;
        x = y;
        y = r;
    }
    monic(field, &x)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g (g not normalized).
pub fn xgcd(
    field: &Field,
    a: &[Scalar],
    b: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>, Vec<Scalar>)> {
    let mut r0 = normalize(a);
    let mut r1 = normalize(b);
    let mut s0 = vec![field.one()];
    let mut s1: Vec<Scalar> = Vec::new();
    let mut t0: Vec<Scalar> = Vec::new();
    let mut t1 = vec![field.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(field, &r0, &r1)?;
        let s = sub(field, &s0, &mul(field, &q, &s1));
        let t = sub(field, &t0, &mul(field, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    Ok((r0, s0, t0))
}

/// `base^exp mod modulus` by square-and-multiply.
pub fn pow_mod(field: &Field, base: &[Scalar], exp: u64, modulus: &[Scalar]) -> Result<Vec<Scalar>> {
    let mut acc = vec![field.one()];
    let mut b = rem(field, base, modulus)?;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(field, &mul(field, &acc, &b), modulus)?;
        }
        b = rem(field, &mul(field, &b, &b), modulus)?;
        e >>= 1;
    }
    Ok(acc)
}

pub enum Irreducibility {
    Irreducible,
    Reducible(String),
}

/// Bounded irreducibility check for a monic polynomial of degree >= 2.
///
/// Complete over the rationals up to degree 7, complete over prime fields
/// in any degree (Rabin's test), and complete for quadratics over
/// quadratic-tower extensions of odd or zero characteristic. Anything
/// beyond is rejected with `Unsupported` rather than trusted.
pub fn irreducible(field: &Field, coeffs: &[Scalar]) -> Result<Irreducibility> {
    let v = normalize(coeffs);
    let n = v.len() - 1;
    debug_assert!(n >= 2 && v.last().unwrap().is_one());
    match field.kind() {
        FieldKind::Rationals => {
            if n > 7 {
                return Err(Error::Unsupported(
                    "irreducibility over Q checked only up to degree 7".into(),
                ));
            }
            let g = monic_integerize(&v);
            match find_integer_factor(&g, n / 2)? {
                Some(f) => Ok(Irreducibility::Reducible(format_int_poly(&f))),
                None => Ok(Irreducibility::Irreducible),
            }
        }
        FieldKind::Prime(p) => rabin_irreducible(field, &v, *p),
        FieldKind::Extension { .. } => {
            if n != 2 {
                return Err(Error::Unsupported(
                    "irreducibility over extension bases checked only for quadratics".into(),
                ));
            }
            if field.characteristic() == 2 {
                return Err(Error::Unsupported(
                    "quadratic irreducibility in characteristic-2 extensions".into(),
                ));
            }
            // x^2 + bx + c reducible iff b^2 - 4c is a square.
            let b = &v[1];
            let c = &v[0];
            let disc = &(b * b) - &(&field.integer(4) * c);
            match disc.sqrt()? {
                Some(root) => {
                    let two_inv = field.integer(2).inv()?;
                    let r = &(&root - b) * &two_inv;
                    Ok(Irreducibility::Reducible(format!("x - ({r})")))
                }
                None => Ok(Irreducibility::Irreducible),
            }
        }
    }
}

fn rabin_irreducible(field: &Field, v: &[Scalar], p: u64) -> Result<Irreducibility> {
    let n = v.len() - 1;
    let x = vec![field.zero(), field.one()];
    // powers[k] = x^(p^k) mod v
    let mut h = x.clone();
    let mut powers = vec![h.clone()];
    for _ in 0..n {
        h = pow_mod(field, &h, p, v)?;
        powers.push(h.clone());
    }
    if !normalize(&sub(field, &powers[n], &x)).is_empty() {
        return Ok(Irreducibility::Reducible(format!(
            "a proper factor exists (x^{p}^{n} != x)"
        )));
    }
    let mut m = n;
    let mut q = 2usize;
    let mut prime_divisors = Vec::new();
    while q * q <= m {
        if m % q == 0 {
            prime_divisors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    for q in prime_divisors {
        let diff = sub(field, &powers[n / q], &x);
        let g = gcd(field, &diff, v)?;
        if g.len() > 1 {
            return Ok(Irreducibility::Reducible(format_scalar_poly(&g)));
        }
    }
    Ok(Irreducibility::Irreducible)
}

fn format_scalar_poly(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn format_int_poly(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// For a monic rational polynomial f, return the monic integer polynomial
/// g(y) = L^n f(y/L) where L clears all denominators. Irreducibility and
/// factor degrees transfer both ways.
fn monic_integerize(v: &[Scalar]) -> Vec<BigInt> {
    let n = v.len() - 1;
    let mut lcm = BigInt::one();
    for c in v {
        let q = c.as_rational().expect("rational coefficients");
        lcm = lcm.lcm(q.denom());
    }
    let mut out = Vec::with_capacity(v.len());
    for (i, c) in v.iter().enumerate() {
        let q = c.as_rational().unwrap();
        // coefficient of y^i is a_i * L^(n-i)
        let scaled = q * BigRational::from(lcm.pow((n - i) as u32));
        debug_assert!(scaled.denom().is_one());
        out.push(scaled.numer().clone());
    }
    out
}

fn int_poly_eval(v: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in v.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn int_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let m = n.abs();
    if m > BigInt::from(1_000_000_000_000u64) {
        return Err(Error::Unsupported(
            "divisor enumeration on a constant term beyond 10^12".into(),
        ));
    }
    let m_u64: u64 = m.to_u64_digits().1.first().copied().unwrap_or(0);
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= m_u64 {
        if m_u64 % d == 0 {
            divs.push(BigInt::from(d));
            if d != m_u64 / d {
                divs.push(BigInt::from(m_u64 / d));
            }
        }
        d += 1;
    }
    divs.sort();
    Ok(divs)
}

/// Exact division of integer polynomials when the divisor is monic;
/// returns None if the remainder is nonzero.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    debug_assert!(den.last().map_or(false, |c| c.is_one()));
    let mut rem: Vec<BigInt> = num.to_vec();
    if rem.len() < den.len() {
        return None;
    }
    let qlen = rem.len() - den.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for shift in (0..qlen).rev() {
        let factor = rem[shift + den.len() - 1].clone();
        quot[shift] = factor.clone();
        for (i, c) in den.iter().enumerate() {
            rem[shift + i] -= c * &factor;
        }
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

/// Search for a monic integer factor of degree in 1..=max_deg of a monic
/// integer polynomial with nonzero constant term allowed to be zero (x is
/// handled first). Complete for max_deg <= 3.
fn find_integer_factor(g: &[BigInt], max_deg: usize) -> Result<Option<Vec<BigInt>>> {
    debug_assert!(g.last().map_or(false, |c| c.is_one()));
    if g[0].is_zero() {
        return Ok(Some(vec![BigInt::zero(), BigInt::one()]));
    }
    // Cauchy bound on the roots of a monic polynomial.
    let bound = BigInt::one()
        + g[..g.len() - 1]
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero);
    if max_deg >= 1 {
        // Rational (here integer) roots divide the constant term.
        for d in int_divisors(&g[0])? {
            for cand in [d.clone(), -d] {
                if int_poly_eval(g, &cand).is_zero() {
                    return Ok(Some(vec![-cand, BigInt::one()]));
                }
            }
        }
    }
    let to_i64 = |b: &BigInt| -> Result<i64> {
        i64::try_from(b).map_err(|_| Error::Unsupported("factor search bound overflow".into()))
    };
    if max_deg >= 2 {
        // x^2 + u x + v with v | g(0), |u| <= 2B.
        let ub = to_i64(&(BigInt::from(2) * &bound))?;
        if ub > 10_000 {
            return Err(Error::Unsupported("quadratic factor search too large".into()));
        }
        for v in int_divisors(&g[0])? {
            for v in [v.clone(), -v] {
                for u in -ub..=ub {
                    let cand = vec![v.clone(), BigInt::from(u), BigInt::one()];
                    if int_poly_exact_div(g, &cand).is_some() {
                        return Ok(Some(cand));
                    }
                }
            }
        }
    }
    if max_deg >= 3 {
        // x^3 + u x^2 + v x + w with w | g(0), |u| <= 3B, |v| <= 3B^2.
        let ub = to_i64(&(BigInt::from(3) * &bound))?;
        let vb = to_i64(&(BigInt::from(3) * &bound * &bound))?;
        if ub > 1_000 || vb > 100_000 {
            return Err(Error::Unsupported("cubic factor search too large".into()));
        }
        for w in int_divisors(&g[0])? {
            for w in [w.clone(), -w] {
                for u in -ub..=ub {
                    for v in -vb..=vb {
                        let cand =
                            vec![w.clone(), BigInt::from(v), BigInt::from(u), BigInt::one()];
                        if int_poly_exact_div(g, &cand).is_some() {
                            return Ok(Some(cand));
                        }
                    }
                }
            }
        }
    }
    if max_deg >= 4 {
        return Err(Error::Unsupported(
            "integer factor search implemented up to cubic factors".into(),
        ));
    }
    Ok(None)
}

/// All roots in the coefficient field, with multiplicities, plus the
/// rootless remainder of the polynomial.
///
/// Complete over Q and prime fields in any degree. Over extension fields
/// the search handles linear and quadratic remainders and base-field
/// roots of higher-degree remainders; if a remainder of degree >= 3
/// survives those steps the outcome is `Unsupported` (roots there may or
/// may not exist).
pub fn roots_in_field(field: &Field, coeffs: &[Scalar]) -> Result<(Vec<(Scalar, usize)>, Vec<Scalar>)> {
    let mut rem_poly = monic(field, &normalize(coeffs))?;
    let mut roots: Vec<(Scalar, usize)> = Vec::new();
    let mut add_root = |poly: &mut Vec<Scalar>, r: Scalar, roots: &mut Vec<(Scalar, usize)>| -> Result<()> {
        let lin = vec![-&r, field.one()];
        let mut mult = 0usize;
        loop {
            let (q, rr) = divrem(field, poly, &lin)?;
            if rr.is_empty() {
                mult += 1;
                *poly = q;
            } else {
                break;
            }
        }
        debug_assert!(mult > 0);
        roots.push((r, mult));
        Ok(())
    };

    match field.kind() {
        FieldKind::Rationals => {
            let candidates = rational_root_candidates(&rem_poly)?;
            for r in candidates {
                if rem_poly.len() <= 1 {
                    break;
                }
                if eval(field, &rem_poly, &r).is_zero() {
                    add_root(&mut rem_poly, r, &mut roots)?;
                }
            }
        }
        FieldKind::Prime(p) => {
            for v in 0..*p {
                if rem_poly.len() <= 1 {
                    break;
                }
                let r = Scalar::prime_element(field, v)?;
                if eval(field, &rem_poly, &r).is_zero() {
                    add_root(&mut rem_poly, r, &mut roots)?;
                }
            }
        }
        FieldKind::Extension { base, .. } => {
            loop {
                let deg = rem_poly.len().saturating_sub(1);
                match deg {
                    0 => break,
                    1 => {
                        let r = -&rem_poly[0];
                        add_root(&mut rem_poly, r, &mut roots)?;
                    }
                    2 => {
                        if field.characteristic() == 2 {
                            return Err(Error::Unsupported(
                                "quadratic roots in characteristic-2 extensions".into(),
                            ));
                        }
                        let b = rem_poly[1].clone();
                        let c = rem_poly[0].clone();
                        let disc = &(&b * &b) - &(&field.integer(4) * &c);
                        match disc.sqrt()? {
                            Some(s) => {
                                let half = field.integer(2).inv()?;
                                let r = &(&s - &b) * &half;
                                add_root(&mut rem_poly, r, &mut roots)?;
                            }
                            None => break,
                        }
                    }
                    _ => {
                        // Try roots coming from the base field when every
                        // coefficient is a base-field constant.
                        let mut base_coeffs = Vec::new();
                        let mut all_base = true;
                        for cf in &rem_poly {
                            let v = cf.extension_coeffs().unwrap();
                            if v[1..].iter().all(Scalar::is_zero) {
                                base_coeffs.push(v[0].clone());
                            } else {
                                all_base = false;
                                break;
                            }
                        }
                        let mut progressed = false;
                        if all_base {
                            let (base_roots, _) = roots_in_field(base, &base_coeffs)?;
                            for (r, _) in base_roots {
                                let lifted = crate::scalar::embed(&r, field)?;
                                if eval(field, &rem_poly, &lifted).is_zero() {
                                    add_root(&mut rem_poly, lifted, &mut roots)?;
                                    progressed = true;
                                }
                            }
                        }
                        if !progressed {
                            if rem_poly.len().saturating_sub(1) >= 3 {
                                return Err(Error::Unsupported(
                                    "root search over extension fields is limited to quadratic remainders".into(),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((roots, rem_poly))
}

fn rational_root_candidates(v: &[Scalar]) -> Result<Vec<Scalar>> {
    // v is monic rational; integerize to a (non-monic in general) integer
    // polynomial and apply the rational root theorem.
    let mut lcm = BigInt::one();
    for c in v {
        lcm = lcm.lcm(c.as_rational().unwrap().denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c.as_rational().unwrap() * BigRational::from(lcm.clone())).numer().clone())
        .collect();
    let mut first_nonzero = 0usize;
    while ints[first_nonzero].is_zero() {
        first_nonzero += 1;
    }
    let mut out = vec![Scalar::rational(BigRational::zero())];
    for p in int_divisors(&ints[first_nonzero])? {
        for q in int_divisors(ints.last().unwrap())? {
            let r = BigRational::new(p.clone(), q.clone());
            out.push(Scalar::rational(-r.clone()));
            out.push(Scalar::rational(r));
        }
    }
    Ok(out)
}

/// Degrees of the factors found by the bounded factorization of a monic
/// rational polynomial: all rational roots are split off, then factors of
/// degree 2 and 3 are searched; a surviving block is reported with its
/// degree (irreducible whenever its degree is at most 7).
pub fn rational_factor_degrees(field: &Field, coeffs: &[Scalar]) -> Result<Vec<usize>> {
    let (roots, mut remainder) = roots_in_field(field, coeffs)?;
    let mut degrees: Vec<usize> = Vec::new();
    for (_, m) in &roots {
        for _ in 0..*m {
            degrees.push(1);
        }
    }
    loop {
        let deg = remainder.len().saturating_sub(1);
        if deg == 0 {
            break;
        }
        let g = monic_integerize(&remainder);
        match find_integer_factor(&g, (deg / 2).min(3)) {
            Ok(Some(f)) => {
                let fdeg = f.len() - 1;
                degrees.push(fdeg);
                let q = int_poly_exact_div(&g, &f).expect("found factor divides");
                // Undo the y = Lx substitution implicitly: only degrees are
                // reported, so re-monicize the quotient over Q directly.
                let qpoly: Vec<Scalar> = q
                    .iter()
                    .map(|c| Scalar::rational(BigRational::from(c.clone())))
                    .collect();
                remainder = monic(field, &qpoly)?;
            }
            Ok(None) => {
                degrees.push(deg);
                break;
            }
            Err(_) => {
                degrees.push(deg);
                break;
            }
        }
    }
    degrees.sort();
    Ok(degrees)
}

/// Distinct-degree report for a monic polynomial over a prime field:
/// degrees (with counts) of the irreducible factors of the squarefree part.
pub fn prime_field_factor_degrees(field: &Field, coeffs: &[Scalar], p: u64) -> Result<Vec<usize>> {
    let mut f = monic(field, &normalize(coeffs))?;
    // squarefree part
    let der = derivative(field, &f);
    if der.is_empty() {
        // f = g(x^p) = (sigma g)(x)^p over F_p; recurse on the contraction.
        let mut contracted = Vec::new();
        for (i, c) in f.iter().enumerate() {
            if i % p as usize == 0 {
                contracted.push(c.clone());
            } else {
                debug_assert!(c.is_zero());
            }
        }
        let inner = prime_field_factor_degrees(field, &contracted, p)?;
        let mut out = Vec::new();
        for d in inner {
            for _ in 0..p {
                out.push(d);
            }
        }
        out.sort();
        return Ok(out);
    }
    let g = gcd(field, &f, &der)?;
    if g.len() > 1 {
        f = divrem(field, &f, &g)?.0;
    }
    let mut degrees = Vec::new();
    let x = vec![field.zero(), field.one()];
    let mut h = x.clone();
    let mut d = 0usize;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            degrees.push(f.len() - 1);
            break;
        }
        h = pow_mod(field, &h, p, &f)?;
        let diff = sub(field, &h, &x);
        let gd = gcd(field, &diff, &f)?;
        if gd.len() > 1 {
            let count = (gd.len() - 1) / d;
            for _ in 0..count {
                degrees.push(d);
            }
            f = divrem(field, &f, &gd)?.0;
            h = rem(field, &h, &f)?;
        }
    }
    degrees.sort();
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::rational_i64(n, d)
    }

    #[test]
    fn divrem_roundtrip() {
        let f = Field::rationals();
        let a = vec![q(1, 1), q(0, 1), q(3, 1), q(1, 1)];
        let b = vec![q(-2, 1), q(1, 1)];
        let (quot, rem_) = divrem(&f, &a, &b).unwrap();
        let back = add(&f, &mul(&f, &quot, &b), &rem_);
        assert_eq!(normalize(&a), back);
    }

    #[test]
    fn xgcd_bezout() {
        let f = Field::rationals();
        let a = vec![q(-1, 1), q(0, 1), q(1, 1)]; // x^2 - 1
        let b = vec![q(-1, 1), q(1, 1)]; // x - 1
        let (g, s, t) = xgcd(&f, &a, &b).unwrap();
        let lhs = add(&f, &mul(&f, &s, &a), &mul(&f, &t, &b));
        assert_eq!(lhs, g);
        assert_eq!(monic(&f, &g).unwrap(), b);
    }

    #[test]
    fn rational_roots_complete() {
        let f = Field::rationals();
        // (x - 1/2)(x + 3)^2 x
        let factors = [
            vec![q(-1, 2), q(1, 1)],
            vec![q(3, 1), q(1, 1)],
            vec![q(3, 1), q(1, 1)],
            vec![q(0, 1), q(1, 1)],
        ];
        let mut poly = vec![q(1, 1)];
        for fac in &factors {
            poly = mul(&f, &poly, fac);
        }
        let (roots, rem_) = roots_in_field(&f, &poly).unwrap();
        assert!(rem_.len() == 1);
        let mut found: Vec<(Scalar, usize)> = roots;
        found.sort_by_key(|(_, m)| *m);
        assert_eq!(found.len(), 3);
        assert!(found.iter().any(|(r, m)| *m == 2 && *r == q(-3, 1)));
        assert!(found.iter().any(|(r, m)| *m == 1 && *r == q(1, 2)));
        assert!(found.iter().any(|(r, m)| *m == 1 && r.is_zero()));
    }

    #[test]
    fn irreducibility_over_q() {
        let f = Field::rationals();
        // x^2 - 2 irreducible
        let p1 = vec![q(-2, 1), q(0, 1), q(1, 1)];
        assert!(matches!(
            irreducible(&f, &p1).unwrap(),
            Irreducibility::Irreducible
        ));
        // x^2 - 1 reducible
        let p2 = vec![q(-1, 1), q(0, 1), q(1, 1)];
        assert!(matches!(
            irreducible(&f, &p2).unwrap(),
            Irreducibility::Reducible(_)
        ));
        // x^4 + 4 = (x^2-2x+2)(x^2+2x+2): no rational roots, quadratic factors
        let p3 = vec![q(4, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)];
        assert!(matches!(
            irreducible(&f, &p3).unwrap(),
            Irreducibility::Reducible(_)
        ));
        // x^4 + 1 irreducible over Q
        let p4 = vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)];
        assert!(matches!(
            irreducible(&f, &p4).unwrap(),
            Irreducibility::Irreducible
        ));
    }

    #[test]
    fn irreducibility_over_prime_fields() {
        let f7 = Field::prime(7).unwrap();
        let c = |n: i64| f7.integer(n);
        // x^2 + 1 over F7: -1 = 6 is not a QR mod 7 -> irreducible
        let p1 = vec![c(1), c(0), c(1)];
        assert!(matches!(
            irreducible(&f7, &p1).unwrap(),
            Irreducibility::Irreducible
        ));
        // x^2 - 2 over F7: 3^2 = 2 -> reducible
        let p2 = vec![c(-2), c(0), c(1)];
        assert!(matches!(
            irreducible(&f7, &p2).unwrap(),
            Irreducibility::Reducible(_)
        ));
        // x^3 + x + 1 over F2 is irreducible
        let f2 = Field::prime(2).unwrap();
        let b = |n: i64| f2.integer(n);
        let p3 = vec![b(1), b(1), b(0), b(1)];
        assert!(matches!(
            irreducible(&f2, &p3).unwrap(),
            Irreducibility::Irreducible
        ));
    }

    #[test]
    fn factor_degrees_examples() {
        let f = Field::rationals();
        // (x^2+1)(x-3): degrees [1, 2]
        let poly = mul(&f, &[q(1, 1), q(0, 1), q(1, 1)], &[q(-3, 1), q(1, 1)]);
        assert_eq!(rational_factor_degrees(&f, &poly).unwrap(), vec![1, 2]);

        let f5 = Field::prime(5).unwrap();
        let c = |n: i64| f5.integer(n);
        // x^2 + 2 over F5: irreducible (QRs mod 5 are 1,4)
        let p = vec![c(2), c(0), c(1)];
        assert_eq!(prime_field_factor_degrees(&f5, &p, 5).unwrap(), vec![2]);
    }
}
