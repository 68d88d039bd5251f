use serde::{Deserialize, Serialize};

use super::Polynomial;
use crate::error::{Error, Result};

pub(super) fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (mut a, mut b) = (a.monic(), b.monic());
    while !b.is_zero() {
        let r = a.rem(&b).monic();
        a = b;
        b = r;
    }
    a
}

/// One entry of a squarefree decomposition: a monic squarefree factor and the
/// exact multiplicity with which it divides the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquarefreeFactor {
    pub factor: Polynomial,
    pub multiplicity: usize,
}

/// Yun's algorithm. Returns pairwise coprime monic squarefree factors in
/// strictly increasing multiplicity, so that
/// `a = lc(a) * prod factor^multiplicity`.
pub fn squarefree_decomposition(a: &Polynomial) -> Result<Vec<SquarefreeFactor>> {
    if a.degree().unwrap_or(0) < 1 {
        return Err(Error::Degenerate(
            "squarefree decomposition needs a nonconstant polynomial".into(),
        ));
    }
    let f = a.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let ai = b.gcd(&d);
        let next_b = b.exact_div(&ai).expect("gcd divides b");
        let next_c = d.exact_div(&ai).expect("gcd divides d");
        d = &next_c - &next_b.derivative();
        if !ai.is_constant() {
            out.push(SquarefreeFactor {
                factor: ai,
                multiplicity: i,
            });
        }
        b = next_b;
        i += 1;
    }
    Ok(out)
}
