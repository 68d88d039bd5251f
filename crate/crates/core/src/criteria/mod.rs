//! Cheap indecomposability certificates: coefficient gcd tests, the
//! derivative-irreducibility test, the critical-value multiplicity `δ`, and
//! the classifier for irreducibility of `(f(x) - f(y)) / (x - y)`.

pub mod factor;
mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use factor::{factor, is_irreducible};

use crate::decompose;
use crate::dickson;
use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, Bivariate, Eliminate, Polynomial, SquarefreeFactor};
use crate::rational::{self, Rational};

/// Coefficients `c_n, ..., c_0` of the primitive integer multiple of `f`
/// and of the monic integer polynomial `c_n^(n-1) f(x / c_n)`, both indexed
/// by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerNormal {
    pub primitive: Vec<BigInt>,
    pub monic: Vec<BigInt>,
}

impl IntegerNormal {
    pub fn of(f: &Polynomial) -> Self {
        let primitive = f.content_and_primitive().1;
        let n = primitive.len() - 1;
        let lc = primitive[n].clone();
        let monic = primitive
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i == n {
                    BigInt::one()
                } else {
                    c * num_traits::pow(lc.clone(), n - 1 - i)
                }
            })
            .collect();
        Self { primitive, monic }
    }

    pub fn degree(&self) -> usize {
        self.monic.len() - 1
    }

    /// Coefficient of `x^(n - j)` in the monic form.
    pub fn monic_below(&self, j: usize) -> BigInt {
        let n = self.degree();
        if j > n {
            BigInt::zero()
        } else {
            self.monic[n - j].clone()
        }
    }
}

fn gcd_with_degree(c: &BigInt, n: usize) -> BigInt {
    c.gcd(&BigInt::from(n))
}

/// Fires when `gcd(c_(n-1), n) = 1` for the integer-normalized form.
pub fn criterion_subleading(f: &Polynomial) -> Result<bool> {
    if f.degree().unwrap_or(0) < 2 {
        return Err(Error::invalid("criterion needs deg f >= 2"));
    }
    let norm = IntegerNormal::of(f);
    Ok(gcd_with_degree(&norm.monic_below(1), norm.degree()).is_one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OuterDegreeRule {
    /// `gcd(c_(n-1), n) = 1`: no decomposition at all.
    Subleading,
    /// `gcd(c_(n-2), n) = 1`: `t = 2` unless the inner degree is 2.
    SecondCoefficient,
    /// `gcd(c_(n-3), n) = 1`: `t = 3` unless the inner degree is 2 or 3.
    ThirdCoefficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterDegreeReport {
    /// Outer degrees `t` (with `t | n`, `2 <= t <= n/2`) not excluded.
    pub admissible: Vec<usize>,
    pub rules: Vec<OuterDegreeRule>,
}

/// Constrains the outer degree `t` of any decomposition `f = g ∘ h`.
///
/// Writing the monic integer form as `g ∘ h` with `g, h` monic integral and
/// `h(0) = 0`, comparing coefficients gives `c_(n-2) = t b_(k-2) + C(t,2) b_(k-1)^2`
/// when `k >= 3`, and `c_(n-3) = t b_(k-3) + t(t-1) b_(k-1) b_(k-2) + C(t,3) b_(k-1)^3`
/// when `k >= 4`. Every prime of `t` must miss the coefficient, which
/// leaves `t = 2` and `t = 3` respectively. Smaller inner degrees pick up a
/// contribution from the second coefficient of `g`, so they are not
/// constrained.
pub fn criterion_outer_degree(f: &Polynomial) -> OuterDegreeReport {
    let norm = IntegerNormal::of(f);
    let n = norm.degree();
    let mut admissible: Vec<usize> = rational::divisors(n)
        .into_iter()
        .filter(|&t| t >= 2 && t <= n / 2)
        .collect();
    let mut rules = Vec::new();
    if gcd_with_degree(&norm.monic_below(1), n).is_one() {
        admissible.clear();
        rules.push(OuterDegreeRule::Subleading);
    }
    if n >= 4 && gcd_with_degree(&norm.monic_below(2), n).is_one() {
        admissible.retain(|&t| t == 2 || n / t == 2);
        rules.push(OuterDegreeRule::SecondCoefficient);
    }
    if n >= 4 && gcd_with_degree(&norm.monic_below(3), n).is_one() {
        admissible.retain(|&t| t == 3 || n / t <= 3);
        rules.push(OuterDegreeRule::ThirdCoefficient);
    }
    OuterDegreeReport { admissible, rules }
}

/// Fires when `f'` is irreducible over the rationals.
pub fn derivative_irreducible_criterion(f: &Polynomial) -> Result<bool> {
    if f.degree().unwrap_or(0) < 2 {
        return Err(Error::invalid("criterion needs deg f >= 2"));
    }
    Ok(is_irreducible(&f.derivative()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    /// `R(γ) = Res_x(f', f - γ)`.
    pub resultant_in_gamma: Polynomial,
    pub multiplicity_profile: Vec<SquarefreeFactor>,
    pub delta_max: usize,
}

impl DeltaReport {
    /// `δ(f, γ) ≤ 1` everywhere, so `f` is indecomposable.
    pub fn certifies_indecomposable(&self) -> bool {
        self.delta_max <= 1
    }

    /// Multiplicity of `γ0` as a root of `R`.
    pub fn multiplicity_at(&self, gamma: &Rational) -> usize {
        self.multiplicity_profile
            .iter()
            .find(|sf| sf.factor.eval(gamma).is_zero())
            .map_or(0, |sf| sf.multiplicity)
    }
}

/// `δ(f, γ) = deg gcd(f - γ, f')` evaluated directly.
pub fn delta_at(f: &Polynomial, gamma: &Rational) -> usize {
    let shifted = f - &Polynomial::constant(gamma.clone());
    shifted.gcd(&f.derivative()).degree().unwrap_or(0)
}

/// Maximum of `δ(f, γ)` over complex `γ`, read from the squarefree
/// decomposition of `R(γ)`; every inner component degree is at most this.
pub fn delta_report(f: &Polynomial) -> Result<DeltaReport> {
    match f.degree() {
        Some(n) if n >= 2 => {}
        _ => return Err(Error::invalid("δ needs deg f >= 2")),
    }
    let r = Bivariate::from_x(&f.derivative())
        .resultant(&Bivariate::x_minus_param(f), Eliminate::X)?;
    let profile = squarefree_decomposition(&r)?;
    let delta_max = profile.iter().map(|sf| sf.multiplicity).max().unwrap_or(0);
    Ok(DeltaReport {
        resultant_in_gamma: r,
        multiplicity_profile: profile,
        delta_max,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PhiVerdict {
    PhiIrreducible,
    PhiReducible,
    Undecided,
}

fn is_odd_prime(n: usize) -> bool {
    n >= 3 && n % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Irreducibility of `(f(x) - f(y)) / (x - y)` over the algebraic closure:
/// it holds iff `f` is indecomposable and, when `n` is an odd prime, `f` is
/// not `alpha D_n(x + b, a) + c`, where for `n = 3` only `a = 0` counts.
pub fn fried1_phi_classifier(f: &Polynomial) -> Result<PhiVerdict> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::invalid("classifier needs deg f >= 2")),
    };
    if !decompose::is_indecomposable(f)? {
        return Ok(PhiVerdict::PhiReducible);
    }
    if is_odd_prime(n) {
        if let Some(form) = dickson::recognize(f) {
            if n > 3 || form.a.is_zero() {
                return Ok(PhiVerdict::PhiReducible);
            }
        }
    }
    Ok(PhiVerdict::PhiIrreducible)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Indecomposable,
    Decomposable,
    UndecidedByCriteria,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub name: String,
    pub fired: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndecomposabilityVerdict {
    pub input: Polynomial,
    pub verdict: Verdict,
    pub reasons: Vec<CriterionOutcome>,
    /// Admissible outer degrees left by the coefficient rules.
    pub degree_constraints: Vec<usize>,
    /// Upper bound on every inner degree.
    pub delta_max: usize,
    /// Whether the full decomposition search ran.
    pub exhaustive: bool,
}

fn outcome(name: &str, fired: bool, detail: String) -> CriterionOutcome {
    CriterionOutcome {
        name: name.to_string(),
        fired,
        detail,
    }
}

/// Runs every criterion, cheapest first, and records each outcome. With
/// `exhaustive`, the decomposition search settles anything the criteria
/// leave open.
pub fn verdict(f: &Polynomial, exhaustive: bool) -> Result<IndecomposabilityVerdict> {
    let n = match f.degree() {
        Some(n) if n >= 2 => n,
        _ => return Err(Error::invalid("indecomposability needs deg f >= 2")),
    };
    let mut reasons = Vec::new();
    let mut decided = None;

    let prime_degree = !(2..n).any(|d| n % d == 0);
    reasons.push(outcome(
        "prime_degree",
        prime_degree,
        format!("deg f = {n}"),
    ));
    if prime_degree {
        decided = Some(Verdict::Indecomposable);
    }

    let norm = IntegerNormal::of(f);
    let sub = criterion_subleading(f)?;
    reasons.push(outcome(
        "subleading_gcd",
        sub,
        format!("gcd(c_(n-1), n) = gcd({}, {n})", norm.monic_below(1)),
    ));
    if sub {
        decided.get_or_insert(Verdict::Indecomposable);
    }

    let outer = criterion_outer_degree(f);
    let empty = outer.admissible.is_empty();
    reasons.push(outcome(
        "outer_degree",
        empty,
        format!("admissible outer degrees {:?}", outer.admissible),
    ));
    if empty {
        decided.get_or_insert(Verdict::Indecomposable);
    }

    let delta = delta_report(f)?;
    let fired = delta.certifies_indecomposable();
    reasons.push(outcome(
        "delta_max",
        fired,
        format!("delta_max = {}", delta.delta_max),
    ));
    if fired {
        decided.get_or_insert(Verdict::Indecomposable);
    }

    let deriv = derivative_irreducible_criterion(f)?;
    reasons.push(outcome(
        "derivative_irreducible",
        deriv,
        format!("f' = {}", f.derivative()),
    ));
    if deriv {
        decided.get_or_insert(Verdict::Indecomposable);
    }

    if exhaustive {
        let pairs = decompose::decompose_once(f)?;
        let found = !pairs.is_empty();
        reasons.push(outcome(
            "exhaustive_search",
            true,
            match pairs.first() {
                Some(p) => format!("{} ∘ {}", p.g, p.h),
                None => "no right component of any degree".into(),
            },
        ));
        let searched = if found {
            Verdict::Decomposable
        } else {
            Verdict::Indecomposable
        };
        if decided.is_some_and(|d| d != searched) {
            return Err(Error::internal(format!(
                "criteria and exhaustive search disagree on {f}"
            )));
        }
        decided = Some(searched);
    }

    Ok(IndecomposabilityVerdict {
        input: f.clone(),
        verdict: decided.unwrap_or(Verdict::UndecidedByCriteria),
        reasons,
        degree_constraints: outer.admissible,
        delta_max: delta.delta_max,
        exhaustive,
    })
}
