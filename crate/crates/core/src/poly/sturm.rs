use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Number of distinct real roots, and whether all roots (complex ones
/// included) are simple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealRootCount {
    pub distinct: usize,
    pub simple: bool,
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_of(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn variations_at(chain: &[Polynomial], x: &Rational) -> usize {
    sign_changes(chain.iter().map(|p| sign_of(&p.eval(x))))
}

fn variations_at_infinity(chain: &[Polynomial], positive: bool) -> usize {
    sign_changes(chain.iter().map(|p| {
        let s = sign_of(&p.leading_coeff());
        if !positive && p.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

/// Counts distinct real roots with a Sturm sequence, over the closed interval
/// `[lo, hi]` when bounds are given (either side may be open-ended).
pub fn real_root_count(
    a: &Polynomial,
    lo: Option<&Rational>,
    hi: Option<&Rational>,
) -> Result<RealRootCount> {
    if a.is_zero() {
        return Err(Error::Degenerate("real root count of the zero polynomial".into()));
    }
    let simple = a.is_squarefree();
    if a.is_constant() {
        return Ok(RealRootCount { distinct: 0, simple });
    }
    if let (Some(l), Some(h)) = (lo, hi) {
        if l > h {
            return Err(Error::invalid("empty interval: lower bound above upper bound"));
        }
    }
    let chain = sturm_chain(a);
    let v_lo = match lo {
        Some(l) => variations_at(&chain, l),
        None => variations_at_infinity(&chain, false),
    };
    let v_hi = match hi {
        Some(h) => variations_at(&chain, h),
        None => variations_at_infinity(&chain, true),
    };
    // V(lo) - V(hi) counts roots in (lo, hi]; add lo itself when it is a root.
    let mut distinct = v_lo - v_hi;
    if let Some(l) = lo {
        if a.eval(l).is_zero() {
            distinct += 1;
        }
    }
    Ok(RealRootCount { distinct, simple })
}
