//! Integer solvability of `u^2 - d v^2 = n` for nonsquare `d > 0`, via the
//! continued fraction of `sqrt(d)` and the classical bound on fundamental
//! solutions of each class.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PellWitness {
    pub d: String,
    pub n: String,
    /// A solution of `u^2 - d v^2 = n`.
    pub solution: (String, String),
    /// Fundamental solution of `u^2 - d v^2 = 1`.
    pub unit: (String, String),
}

/// Fundamental solution of `x^2 - d y^2 = 1` for nonsquare `d > 0`.
pub fn fundamental_unit(d: &BigInt) -> Option<(BigInt, BigInt)> {
    if !d.is_positive() {
        return None;
    }
    let a0 = d.sqrt();
    if &a0 * &a0 == *d {
        return None;
    }
    // convergents p/q of sqrt(d)
    let (mut m, mut den, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut p_prev, mut p) = (BigInt::one(), a0.clone());
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    loop {
        if &p * &p - d * &q * &q == BigInt::one() {
            return Some((p, q));
        }
        m = &den * &a - &m;
        den = (d - &m * &m) / &den;
        a = (&a0 + &m) / &den;
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

/// Search limit on `v`, beyond which the question is left open.
pub const SEARCH_LIMIT: u64 = 2_000_000;

/// Finds a solution of `u^2 - d v^2 = n`. Every solution class has a
/// representative with `v` below the bound computed from the fundamental
/// unit, so `Ok(None)` means no integer solution exists; `Err(())` means
/// the bound exceeds [`SEARCH_LIMIT`].
pub fn solve(d: &BigInt, n: &BigInt) -> Result<Option<PellWitness>, ()> {
    let (x1, y1) = fundamental_unit(d).ok_or(())?;
    let limit = if n.is_zero() {
        0.0
    } else {
        let (x1f, y1f, nf) = (
            x1.to_f64().unwrap_or(f64::MAX),
            y1.to_f64().unwrap_or(f64::MAX),
            n.abs().to_f64().unwrap_or(f64::MAX),
        );
        let denom = if n.is_positive() { 2.0 * (x1f + 1.0) } else { 2.0 * (x1f - 1.0) };
        y1f * (nf / denom).sqrt()
    };
    if !limit.is_finite() || limit > SEARCH_LIMIT as f64 {
        return Err(());
    }
    let top = limit.floor() as u64 + 1;
    for v in 0..=top {
        let v = BigInt::from(v);
        let u2 = n + d * &v * &v;
        if u2.is_negative() {
            continue;
        }
        let u = u2.sqrt();
        if &u * &u == u2 {
            return Ok(Some(PellWitness {
                d: d.to_string(),
                n: n.to_string(),
                solution: (u.to_string(), v.to_string()),
                unit: (x1.to_string(), y1.to_string()),
            }));
        }
    }
    Ok(None)
}
