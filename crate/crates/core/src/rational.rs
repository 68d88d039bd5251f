//! Arbitrary-precision rationals and the small number-theoretic helpers the
//! rest of the crate needs (exact roots, perfect-power tests, parsing).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduced fraction with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact `k`-th root of a non-negative integer, if one exists.
pub fn exact_root_uint(n: &BigUint, k: u32) -> Option<BigUint> {
    if k == 0 {
        return None;
    }
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// Exact `k`-th root of an integer. Negative inputs have a root only for odd `k`.
pub fn exact_root_int(n: &BigInt, k: u32) -> Option<BigInt> {
    match n.sign() {
        Sign::Minus => {
            if k % 2 == 0 {
                return None;
            }
            exact_root_uint(n.magnitude(), k).map(|r| -BigInt::from(r))
        }
        _ => exact_root_uint(n.magnitude(), k).map(BigInt::from),
    }
}

/// Exact `k`-th root of a rational number. For even `k` the non-negative root
/// is returned.
pub fn exact_root(q: &Rational, k: u32) -> Option<Rational> {
    let n = exact_root_int(q.numer(), k)?;
    let d = exact_root_int(q.denom(), k)?;
    Some(Rational::new(n, d))
}

pub fn is_kth_power(q: &Rational, k: u32) -> bool {
    k == 1 || exact_root(q, k).is_some()
}

pub fn is_square(q: &Rational) -> bool {
    !q.is_negative() && exact_root(q, 2).is_some()
}

/// `q^e` for a signed exponent; `q` must be nonzero when `e < 0`.
pub fn pow_signed(q: &Rational, e: i64) -> Rational {
    let p = num_traits::pow(q.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
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
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd_usize(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

/// Canonical decimal text: `p` or `p/q`.
pub fn to_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale both parts down so the quotient stays representable.
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
            let n = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Integer `n` is a perfect power `y^l` with `l >= 2`, `y > 1`; returns the
/// smallest such exponent found up to `l_max`.
pub fn perfect_power_exponent(n: &BigUint, l_max: u32) -> Option<(BigUint, u32)> {
    if *n <= BigUint::one() {
        return None;
    }
    (2..=l_max).find_map(|l| exact_root_uint(n, l).map(|y| (y, l)))
}

/// Parses `p` or `p/q` with optional leading minus.
pub fn from_text(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// Serde adapter storing a rational as its canonical text.
pub mod text {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_text(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::from_text(&text)
            .ok_or_else(|| serde::de::Error::custom(format!("bad rational '{text}'")))
    }
}

/// Serde adapter for optional rationals.
pub mod text_opt {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&super::to_text(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        match Option::<String>::deserialize(d)? {
            None => Ok(None),
            Some(text) => super::from_text(&text)
                .map(Some)
                .ok_or_else(|| serde::de::Error::custom(format!("bad rational '{text}'"))),
        }
    }
}
