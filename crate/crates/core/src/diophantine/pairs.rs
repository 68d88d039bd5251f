//! The five kinds of standard pairs and exact matching of a reduced pair
//! `(F, G)` against them: find linears `nu, lambda, mu` and a standard pair
//! `(f1, g1)` with `F = nu ∘ f1 ∘ lambda` and `G = nu ∘ g1 ∘ mu`, or record
//! why no such data exists.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dickson;
use crate::error::{Error, Result};
use crate::poly::{real_root_count, squarefree_decomposition, LinearPoly, Polynomial};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairParams {
    /// `(x^m, a x^r p(x)^m)`, `r < m`, `gcd(r, m) = 1`, `r + deg p > 0`.
    First {
        m: usize,
        #[serde(with = "rational::text")]
        a: Rational,
        r: usize,
        p: Polynomial,
    },
    /// `(x^2, (a x^2 + b) p(x)^2)`.
    Second {
        #[serde(with = "rational::text")]
        a: Rational,
        #[serde(with = "rational::text")]
        b: Rational,
        p: Polynomial,
    },
    /// `(D_m(x, a^n), D_n(x, a^m))`, `gcd(m, n) = 1`.
    Third {
        m: usize,
        n: usize,
        #[serde(with = "rational::text")]
        a: Rational,
    },
    /// `(a^(-m/2) D_m(x, a), -b^(-n/2) D_n(x, b))`, `gcd(m, n) = 2`.
    Fourth {
        m: usize,
        n: usize,
        #[serde(with = "rational::text")]
        a: Rational,
        #[serde(with = "rational::text")]
        b: Rational,
    },
    /// `((a x^2 - 1)^3, 3x^4 - 4x^3)`.
    Fifth {
        #[serde(with = "rational::text")]
        a: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardPair {
    pub params: PairParams,
    /// The pair is used as `(second, first)`.
    pub switched: bool,
}

impl StandardPair {
    pub fn kind(&self) -> u8 {
        match self.params {
            PairParams::First { .. } => 1,
            PairParams::Second { .. } => 2,
            PairParams::Third { .. } => 3,
            PairParams::Fourth { .. } => 4,
            PairParams::Fifth { .. } => 5,
        }
    }

    /// The pair as tabulated, ignoring `switched`.
    pub fn table_pair(&self) -> (Polynomial, Polynomial) {
        let x = Polynomial::x();
        match &self.params {
            PairParams::First { m, a, r, p } => (
                Polynomial::monomial(Rational::one(), *m),
                &Polynomial::monomial(a.clone(), *r) * &p.pow(*m),
            ),
            PairParams::Second { a, b, p } => (
                Polynomial::monomial(Rational::one(), 2),
                &Polynomial::new(vec![b.clone(), Rational::zero(), a.clone()]) * &p.pow(2),
            ),
            PairParams::Third { m, n, a } => (
                dickson::dickson(*m, &num_traits::pow(a.clone(), *n)),
                dickson::dickson(*n, &num_traits::pow(a.clone(), *m)),
            ),
            PairParams::Fourth { m, n, a, b } => (
                dickson::dickson(*m, a).scale(&rational::pow_signed(a, -((*m / 2) as i64))),
                dickson::dickson(*n, b).scale(&-rational::pow_signed(b, -((*n / 2) as i64))),
            ),
            PairParams::Fifth { a } => {
                let q = &x.pow(2).scale(a) - &Polynomial::one();
                (q.pow(3), Polynomial::from_ints(&[0, 0, 0, -4, 3]))
            }
        }
    }

    /// `(f1, g1)` in the order they are used.
    pub fn instantiate(&self) -> (Polynomial, Polynomial) {
        let (p, q) = self.table_pair();
        if self.switched {
            (q, p)
        } else {
            (p, q)
        }
    }

    /// Checks the parameter restrictions of the table.
    pub fn check_restrictions(&self) -> Result<()> {
        let ok = match &self.params {
            PairParams::First { m, a, r, p } => {
                !a.is_zero() && !p.is_zero() && r < m && r.gcd(m) == 1 && r + p.deg() > 0
            }
            PairParams::Second { a, b, p } => !a.is_zero() && !b.is_zero() && !p.is_zero(),
            PairParams::Third { m, n, a } => !a.is_zero() && m.gcd(n) == 1,
            PairParams::Fourth { m, n, a, b } => !a.is_zero() && !b.is_zero() && m.gcd(n) == 2,
            PairParams::Fifth { a } => !a.is_zero(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!("{:?} violates the standard-pair restrictions", self.params)))
        }
    }
}

/// How a branch was ruled out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Tactic {
    /// Leading-coefficient quotient is not a `k`-th power.
    LeadingPower,
    /// No common left component of degree `k`.
    LeftFactor,
    /// Degrees incompatible with the kind.
    Degree,
    /// A coefficient of the centered polynomial that must vanish does not.
    ShiftedPower,
    /// Root multiplicities incompatible with the required shape.
    Multiplicity,
    /// A coefficient differs from the best Dickson fit.
    DicksonCoefficient,
    /// The Dickson parameters of the two sides are incompatible.
    DicksonParameter,
    /// The derivative has only simple real roots.
    CriticalPoints,
}

/// One ruled-out branch: the identity that would have to hold and its two
/// sides, which differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Elimination {
    pub k: usize,
    pub kind: Option<u8>,
    pub switched: bool,
    pub tactic: Tactic,
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

/// `F = outer ∘ f1 ∘ lambda`, `G = outer ∘ g1 ∘ mu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairMatch {
    pub pair: StandardPair,
    pub outer: LinearPoly,
    pub lambda: LinearPoly,
    pub mu: LinearPoly,
}

impl PairMatch {
    pub fn verify(&self, f: &Polynomial, g: &Polynomial) -> bool {
        let (f1, g1) = self.pair.instantiate();
        self.pair.check_restrictions().is_ok()
            && self.outer.apply_outer(&f1.affine_substitute(&self.lambda)) == *f
            && self.outer.apply_outer(&g1.affine_substitute(&self.mu)) == *g
    }
}

/// All standard-pair matches of `(f1, g1)` (Dickson kinds first, then 5,
/// 2 and 1), plus a record for every kind and orientation that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSearch {
    pub matches: Vec<PairMatch>,
    pub eliminations: Vec<Elimination>,
}

impl PairSearch {
    pub fn best(&self) -> Option<&PairMatch> {
        self.matches.first()
    }
}

type Attempt = std::result::Result<PairMatch, (Tactic, String, String, String)>;

fn fail<T>(tactic: Tactic, identity: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> std::result::Result<T, (Tactic, String, String, String)> {
    Err((tactic, identity.into(), lhs.to_string(), rhs.to_string()))
}

fn lin(slope: Rational, intercept: Rational) -> LinearPoly {
    LinearPoly::new(slope, intercept).expect("nonzero slope")
}

/// `nu^(-1) ∘ p`.
fn strip_outer(nu: &LinearPoly, p: &Polynomial) -> Polynomial {
    nu.invert().apply_outer(p)
}

/// `p(x + beta)` centered so that the `x^(d-1)` coefficient vanishes.
fn center(p: &Polynomial) -> (Rational, Polynomial) {
    let d = p.deg();
    let beta = -p.coeff(d - 1) / (p.leading_coeff() * rational::int(d as i64));
    let centered = p.affine_substitute(&LinearPoly::shift(beta.clone()));
    (beta, centered)
}

fn shifted_power(f_side: &Polynomial, g_side: &Polynomial) -> Attempt {
    let m = f_side.deg();
    if m == 1 {
        let nu = LinearPoly::from_polynomial(f_side).expect("degree one");
        let g = strip_outer(&nu, g_side);
        let a = g.leading_coeff();
        let pair = StandardPair {
            params: PairParams::First {
                m: 1,
                a: a.clone(),
                r: 0,
                p: g.scale(&a.recip()),
            },
            switched: false,
        };
        return Ok(PairMatch {
            pair,
            outer: nu,
            lambda: LinearPoly::identity(),
            mu: LinearPoly::identity(),
        });
    }
    let (beta, centered) = center(f_side);
    if let Some(j) = (1..m).rev().find(|&j| !centered.coeff(j).is_zero()) {
        return fail(
            Tactic::ShiftedPower,
            format!("coefficient of x^{j} in f1(x + {})", rational::to_text(&beta)),
            rational::to_text(&centered.coeff(j)),
            "0",
        );
    }
    let nu = lin(centered.leading_coeff(), centered.constant_term());
    let lambda = LinearPoly::shift(-beta);
    let g = strip_outer(&nu, g_side);
    let n = g.deg();
    let r = n % m;
    if r.gcd(&m) != 1 {
        return fail(
            Tactic::Degree,
            format!("gcd(deg g1 mod {m}, {m})"),
            r.gcd(&m),
            1,
        );
    }
    let sqf = squarefree_decomposition(&g).expect("nonzero");
    let odd: Vec<_> = sqf.iter().filter(|sf| sf.multiplicity % m != 0).collect();
    if odd.len() != 1 || odd[0].factor.deg() != 1 || odd[0].multiplicity % m != r {
        let offending: Vec<String> = odd
            .iter()
            .map(|sf| format!("({})^{}", sf.factor, sf.multiplicity))
            .collect();
        return fail(
            Tactic::Multiplicity,
            format!("g1 = a (x - beta)^{r} p(x)^{m}"),
            if offending.is_empty() { "no root of multiplicity ≢ 0".into() } else { offending.join(" ") },
            format!("one rational root of multiplicity ≡ {r} mod {m}"),
        );
    }
    let root = -odd[0].factor.coeff(0) / odd[0].factor.coeff(1);
    let mut q = Polynomial::one();
    for sf in &sqf {
        let e = if sf.multiplicity % m != 0 {
            (sf.multiplicity - r) / m
        } else {
            sf.multiplicity / m
        };
        q = &q * &sf.factor.monic().pow(e);
    }
    let shift = LinearPoly::shift(root.clone());
    let pair = StandardPair {
        params: PairParams::First {
            m,
            a: g.leading_coeff(),
            r,
            p: q.affine_substitute(&shift),
        },
        switched: false,
    };
    Ok(PairMatch {
        pair,
        outer: nu,
        lambda,
        mu: LinearPoly::shift(-root),
    })
}

fn quadratic_times_square(f_side: &Polynomial, g_side: &Polynomial) -> Attempt {
    if f_side.deg() != 2 {
        return fail(Tactic::Degree, "deg f1 = 2", f_side.deg(), 2);
    }
    let (beta, centered) = center(f_side);
    let nu = lin(centered.leading_coeff(), centered.constant_term());
    let g = strip_outer(&nu, g_side);
    let sqf = squarefree_decomposition(&g).expect("nonzero");
    let odd = sqf
        .iter()
        .filter(|sf| sf.multiplicity % 2 == 1)
        .fold(Polynomial::one(), |acc, sf| &acc * &sf.factor);
    if odd.deg() != 2 {
        return fail(
            Tactic::Multiplicity,
            "degree of the odd-multiplicity part of g1",
            odd.deg(),
            2,
        );
    }
    let (root, _) = center(&odd);
    let shift = LinearPoly::shift(root.clone());
    let e = g.affine_substitute(&shift);
    let o = odd.monic().affine_substitute(&shift);
    let rest = e.exact_div(&o).expect("odd part divides");
    let c = rest.leading_coeff();
    let mut p = Polynomial::one();
    for sf in squarefree_decomposition(&rest).unwrap_or_default() {
        p = &p * &sf.factor.monic().pow(sf.multiplicity / 2);
    }
    let pair = StandardPair {
        params: PairParams::Second {
            a: c.clone(),
            b: &c * o.constant_term(),
            p,
        },
        switched: false,
    };
    Ok(PairMatch {
        pair,
        outer: nu,
        lambda: LinearPoly::shift(-beta),
        mu: LinearPoly::shift(-root),
    })
}

fn sextic_quartic(f_side: &Polynomial, g_side: &Polynomial) -> Attempt {
    if (f_side.deg(), g_side.deg()) != (6, 4) {
        return fail(
            Tactic::Degree,
            "(deg f1, deg g1) = (6, 4)",
            format!("({}, {})", f_side.deg(), g_side.deg()),
            "(6, 4)",
        );
    }
    let dg = g_side.derivative();
    let count = real_root_count(&dg, None, None).expect("nonzero derivative");
    if count.simple && count.distinct == 3 {
        return fail(
            Tactic::CriticalPoints,
            "g1' has a multiple root",
            "3 simple real roots",
            "a double root",
        );
    }
    let sqf = squarefree_decomposition(&dg).expect("nonzero");
    let single = |mult: usize| {
        sqf.iter()
            .find(|sf| sf.multiplicity == mult && sf.factor.deg() == 1)
            .map(|sf| -sf.factor.coeff(0) / sf.factor.coeff(1))
    };
    let (Some(beta), Some(gamma)) = (single(2), single(1)) else {
        return fail(
            Tactic::Multiplicity,
            "g1' = c (x - beta)^2 (x - gamma)",
            format!("{dg}"),
            "a rational double root and a rational simple root",
        );
    };
    // 3x^4 - 4x^3 has critical points 0 (double) and 1 with values 0 and -1
    let mu_inv = lin(&gamma - &beta, beta.clone());
    let mu = mu_inv.invert();
    let e0 = g_side.eval(&beta);
    let e1 = &e0 - g_side.eval(&gamma);
    let nu = lin(e1, e0);
    let quartic = Polynomial::from_ints(&[0, 0, 0, -4, 3]);
    let rebuilt = nu.apply_outer(&quartic.affine_substitute(&mu));
    if rebuilt != *g_side {
        return fail(
            Tactic::ShiftedPower,
            "g1 = nu(3 mu^4 - 4 mu^3)",
            rebuilt,
            g_side,
        );
    }
    let f = strip_outer(&nu, f_side);
    let sqf = squarefree_decomposition(&f).expect("nonzero");
    let lc_root = rational::exact_root(&f.leading_coeff().abs(), 3)
        .map(|r| if f.leading_coeff().is_negative() { -r } else { r });
    let shape_ok = sqf.len() == 1 && sqf[0].multiplicity == 3 && sqf[0].factor.deg() == 2;
    let (true, Some(lc_root)) = (shape_ok, lc_root) else {
        return fail(
            Tactic::Multiplicity,
            "f1 is the cube of a quadratic",
            format!("{f}"),
            "q(x)^3",
        );
    };
    let q = sqf[0].factor.scale(&lc_root);
    let (t, centered) = center(&q);
    if centered.constant_term() != -Rational::one() {
        return fail(
            Tactic::ShiftedPower,
            "constant term of the centered quadratic",
            rational::to_text(&centered.constant_term()),
            "-1",
        );
    }
    let pair = StandardPair {
        params: PairParams::Fifth {
            a: centered.leading_coeff(),
        },
        switched: false,
    };
    Ok(PairMatch {
        pair,
        outer: nu,
        lambda: LinearPoly::shift(-t),
        mu,
    })
}

/// `p = alpha D_d(x + b, a) + c`.
struct DicksonFit {
    alpha: Rational,
    b: Rational,
    a: Rational,
    c: Rational,
}

fn dickson_fit(p: &Polynomial) -> std::result::Result<DicksonFit, (Tactic, String, String, String)> {
    match dickson::recognize_detailed(p) {
        Some(Ok(form)) => Ok(DicksonFit {
            alpha: form.alpha,
            b: form.b,
            a: form.a,
            c: form.c,
        }),
        Some(Err(mm)) => fail(
            Tactic::DicksonCoefficient,
            format!("coefficient of x^{} against alpha D_{}(x + b, a) + c", mm.exponent, p.deg()),
            rational::to_text(&mm.found),
            rational::to_text(&mm.expected),
        ),
        None => fail(Tactic::Degree, "deg >= 2", p.deg(), 2),
    }
}

/// A quadratic is `alpha D_2(x + b, a) + e0` for every `e0`, with `a` depending on it.
fn quadratic_fit(p: &Polynomial, e0: &Rational) -> DicksonFit {
    let (beta, centered) = center(p);
    let alpha = centered.leading_coeff();
    let a = (e0 - centered.constant_term()) / (&alpha * rational::int(2));
    DicksonFit {
        alpha,
        b: -beta,
        a,
        c: e0.clone(),
    }
}

/// Fits both sides with a common constant `e0`.
fn paired_fits(
    f_side: &Polynomial,
    g_side: &Polynomial,
) -> std::result::Result<(DicksonFit, DicksonFit), (Tactic, String, String, String)> {
    let (m, n) = (f_side.deg(), g_side.deg());
    match (m, n) {
        (2, 2) => {
            let cf = center(f_side).1.constant_term();
            let cg = center(g_side).1.constant_term();
            let e0 = (cf + cg) / rational::int(2);
            Ok((quadratic_fit(f_side, &e0), quadratic_fit(g_side, &e0)))
        }
        (2, _) => {
            let gf = dickson_fit(g_side)?;
            Ok((quadratic_fit(f_side, &gf.c), gf))
        }
        (_, 2) => {
            let ff = dickson_fit(f_side)?;
            let gf = quadratic_fit(g_side, &ff.c);
            Ok((ff, gf))
        }
        _ => {
            let ff = dickson_fit(f_side)?;
            let gf = dickson_fit(g_side)?;
            if ff.c != gf.c {
                return fail(
                    Tactic::DicksonParameter,
                    "constant terms of the two Dickson fits",
                    rational::to_text(&ff.c),
                    rational::to_text(&gf.c),
                );
            }
            Ok((ff, gf))
        }
    }
}

fn nonzero_parameters(ff: &DicksonFit, gf: &DicksonFit) -> std::result::Result<(), (Tactic, String, String, String)> {
    if ff.a.is_zero() || gf.a.is_zero() {
        return fail(
            Tactic::DicksonParameter,
            "Dickson parameters (f side, g side) nonzero",
            format!("({}, {})", rational::to_text(&ff.a), rational::to_text(&gf.a)),
            "both nonzero",
        );
    }
    Ok(())
}

fn sqrt_q(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        None
    } else {
        rational::exact_root(q, 2)
    }
}

fn coprime_dickson(f_side: &Polynomial, g_side: &Polynomial) -> Attempt {
    let (m, n) = (f_side.deg(), g_side.deg());
    if m < 2 || n < 2 || m.gcd(&n) != 1 {
        return fail(Tactic::Degree, format!("gcd({m}, {n}) = 1 with both degrees >= 2"), m.gcd(&n), 1);
    }
    let (ff, gf) = paired_fits(f_side, g_side)?;
    nonzero_parameters(&ff, &gf)?;
    // lambda1^2 = a^n / A_f, mu1^2 = a^m / A_g, e1 = alpha_f / lambda1^m = alpha_g / mu1^n
    let lhs = &ff.alpha * &ff.alpha * num_traits::pow(ff.a.clone(), m);
    let rhs = &gf.alpha * &gf.alpha * num_traits::pow(gf.a.clone(), n);
    if lhs != rhs {
        return fail(
            Tactic::DicksonParameter,
            format!("alpha_f^2 A_f^{m} = alpha_g^2 A_g^{n}"),
            rational::to_text(&lhs),
            rational::to_text(&rhs),
        );
    }
    let a = if n % 2 == 1 { ff.a.clone() } else { gf.a.clone() };
    let l2 = num_traits::pow(a.clone(), n) / &ff.a;
    let u2 = num_traits::pow(a.clone(), m) / &gf.a;
    let (Some(l1), Some(u1)) = (sqrt_q(&l2), sqrt_q(&u2)) else {
        return fail(
            Tactic::DicksonParameter,
            "a^n / A_f and a^m / A_g are rational squares",
            format!("({}, {})", rational::to_text(&l2), rational::to_text(&u2)),
            "squares",
        );
    };
    for (sl, su) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let l1 = &l1 * rational::int(sl);
        let u1 = &u1 * rational::int(su);
        let e1 = &ff.alpha / num_traits::pow(l1.clone(), m);
        if e1 != &gf.alpha / num_traits::pow(u1.clone(), n) {
            continue;
        }
        return Ok(PairMatch {
            pair: StandardPair {
                params: PairParams::Third { m, n, a: a.clone() },
                switched: false,
            },
            outer: lin(e1, ff.c.clone()),
            lambda: lin(l1.clone(), &l1 * &ff.b),
            mu: lin(u1.clone(), &u1 * &gf.b),
        });
    }
    fail(
        Tactic::DicksonParameter,
        "alpha_f / lambda1^m = alpha_g / mu1^n for some signs",
        rational::to_text(&ff.alpha),
        rational::to_text(&gf.alpha),
    )
}

fn even_dickson(f_side: &Polynomial, g_side: &Polynomial) -> Attempt {
    let (m, n) = (f_side.deg(), g_side.deg());
    if m.gcd(&n) != 2 {
        return fail(Tactic::Degree, format!("gcd({m}, {n}) = 2"), m.gcd(&n), 2);
    }
    let (ff, gf) = paired_fits(f_side, g_side)?;
    nonzero_parameters(&ff, &gf)?;
    let ef = &ff.alpha * num_traits::pow(ff.a.clone(), m / 2);
    let eg = -(&gf.alpha * num_traits::pow(gf.a.clone(), n / 2));
    if ef != eg {
        return fail(
            Tactic::DicksonParameter,
            format!("alpha_f A_f^{} = -alpha_g A_g^{}", m / 2, n / 2),
            rational::to_text(&ef),
            rational::to_text(&eg),
        );
    }
    Ok(PairMatch {
        pair: StandardPair {
            params: PairParams::Fourth {
                m,
                n,
                a: ff.a.clone(),
                b: gf.a.clone(),
            },
            switched: false,
        },
        outer: lin(ef, ff.c.clone()),
        lambda: LinearPoly::shift(ff.b.clone()),
        mu: LinearPoly::shift(gf.b.clone()),
    })
}

fn switch(m: PairMatch) -> PairMatch {
    PairMatch {
        pair: StandardPair {
            params: m.pair.params,
            switched: !m.pair.switched,
        },
        outer: m.outer,
        lambda: m.mu,
        mu: m.lambda,
    }
}

/// Tries every kind and orientation on the reduced pair; `k` labels the
/// records.
pub(crate) fn search_pairs(f: &Polynomial, g: &Polynomial, k: usize) -> Result<PairSearch> {
    type Matcher = fn(&Polynomial, &Polynomial) -> Attempt;
    let plan: [(u8, Matcher, bool); 5] = [
        (1, shifted_power, true),
        (2, quadratic_times_square, true),
        (3, coprime_dickson, false),
        (4, even_dickson, false),
        (5, sextic_quartic, true),
    ];
    let mut out = PairSearch::default();
    let mut found: Vec<(u8, PairMatch)> = Vec::new();
    for (kind, matcher, both) in plan {
        let orientations: &[bool] = if both { &[false, true] } else { &[false] };
        for &switched in orientations {
            let attempt = if switched { matcher(g, f).map(switch) } else { matcher(f, g) };
            match attempt {
                Ok(m) => {
                    if !m.verify(f, g) {
                        return Err(Error::internal(format!(
                            "kind {kind} match for ({f}, {g}) does not recompose"
                        )));
                    }
                    found.push((kind, m));
                }
                Err((tactic, identity, lhs, rhs)) => out.eliminations.push(Elimination {
                    k,
                    kind: Some(kind),
                    switched,
                    tactic,
                    identity,
                    lhs,
                    rhs,
                }),
            }
        }
    }
    let rank = |kind: u8| match kind {
        3 | 4 => 0,
        5 => 1,
        2 => 2,
        _ => 3,
    };
    found.sort_by_key(|(kind, _)| rank(*kind));
    out.matches = found.into_iter().map(|(_, m)| m).collect();
    Ok(out)
}

/// Matches `(f1, g1)` against the table up to the linears of the
/// representation, with no common left component.
pub fn match_standard_pair(f1: &Polynomial, g1: &Polynomial) -> Result<PairSearch> {
    if f1.degree().unwrap_or(0) < 1 || g1.degree().unwrap_or(0) < 1 {
        return Err(Error::invalid("standard-pair matching needs nonconstant inputs"));
    }
    search_pairs(f1, g1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::rational::{frac, int};
    use crate::testutil;
    use proptest::prelude::*;

    fn q(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn table_shapes() {
        let p = StandardPair {
            params: PairParams::Fifth { a: int(2) },
            switched: true,
        };
        assert_eq!(p.instantiate().0, q("3x^4 - 4x^3"));
        assert_eq!(p.instantiate().1, q("(2x^2 - 1)^3"));
        let p = StandardPair {
            params: PairParams::Fourth { m: 2, n: 4, a: int(4), b: int(1) },
            switched: false,
        };
        assert_eq!(p.table_pair().0, q("1/4 x^2 - 2"));
        assert_eq!(p.table_pair().1, q("-(x^4 - 4x^2 + 2)"));
        let bad = StandardPair {
            params: PairParams::First { m: 4, a: int(1), r: 2, p: q("1") },
            switched: false,
        };
        assert!(bad.check_restrictions().is_err());
    }

    #[test]
    fn kind_two_example() {
        let s = match_standard_pair(&q("x^2"), &q("2x^2 + 1")).unwrap();
        assert!(s
            .matches
            .iter()
            .any(|m| m.pair.params == PairParams::Second { a: int(2), b: int(1), p: q("1") }));
        // x^2 and 2x^2 + 1 are also a shifted Dickson pair of degree 2
        assert_eq!(s.best().unwrap().pair.kind(), 4);
    }

    #[test]
    fn kind_one_example() {
        let s = match_standard_pair(&q("x^3"), &q("x^2")).unwrap();
        let best = s.best().unwrap();
        assert_eq!(
            best.pair.params,
            PairParams::First { m: 3, a: int(1), r: 2, p: q("1") }
        );
        assert!(!best.pair.switched);
    }

    #[test]
    fn kind_three_example() {
        let s = match_standard_pair(&q("x^3 - 3x"), &q("x^2 - 2")).unwrap();
        let best = s.best().unwrap();
        assert_eq!(best.pair.kind(), 3);
        let PairParams::Third { m, n, a } = &best.pair.params else { unreachable!() };
        assert_eq!((*m, *n), (3, 2));
        assert!(!a.is_zero());
        // the same pair also has a kind-1 reading: x^2 - 2 centered, x^3 - 3x + 2 = (x-1)^2 (x+2)
        assert!(s.matches.iter().any(|m| m.pair.kind() == 1));
    }

    #[test]
    fn kind_four_and_five_round_trip() {
        let four = StandardPair {
            params: PairParams::Fourth { m: 4, n: 6, a: int(3), b: frac(-1, 2) },
            switched: false,
        };
        let (f1, g1) = four.instantiate();
        let lam = LinearPoly::new(int(2), int(1)).unwrap();
        let mu = LinearPoly::new(frac(1, 3), int(-1)).unwrap();
        let nu = LinearPoly::new(int(5), int(7)).unwrap();
        let f = nu.apply_outer(&f1.affine_substitute(&lam));
        let g = nu.apply_outer(&g1.affine_substitute(&mu));
        let s = match_standard_pair(&f, &g).unwrap();
        assert!(s.matches.iter().any(|m| m.pair.kind() == 4));

        let five = StandardPair {
            params: PairParams::Fifth { a: frac(3, 2) },
            switched: true,
        };
        let (f1, g1) = five.instantiate();
        let f = nu.apply_outer(&f1.affine_substitute(&lam));
        let g = nu.apply_outer(&g1.affine_substitute(&mu));
        let s = match_standard_pair(&f, &g).unwrap();
        let m = s.matches.iter().find(|m| m.pair.kind() == 5).unwrap();
        assert!(m.pair.switched);
    }

    #[test]
    fn no_match_records_every_kind() {
        let s = match_standard_pair(&q("x^4 + x + 1"), &q("x^3 + x")).unwrap();
        assert!(s.matches.is_empty());
        for kind in 1..=5u8 {
            assert!(s.eliminations.iter().any(|e| e.kind == Some(kind)));
        }
    }

    fn arb_linear() -> impl Strategy<Value = LinearPoly> {
        (testutil::nonzero_rational(5), testutil::rational(5))
            .prop_map(|(s, t)| LinearPoly::new(s, t).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn disguised_pairs_are_found(
            kind in 1u8..=5, switched in any::<bool>(),
            a in testutil::nonzero_rational(4), b in testutil::nonzero_rational(4),
            mn in 0usize..3,
            nu in arb_linear(), lam in arb_linear(), mu in arb_linear(),
        ) {
            let params = match kind {
                1 => PairParams::First { m: [2, 3, 5][mn], a, r: 1, p: q("x - 1") },
                2 => PairParams::Second { a, b, p: q("x + 2") },
                3 => PairParams::Third { m: [2, 3, 5][mn], n: [3, 4, 3][mn], a },
                4 => PairParams::Fourth { m: [2, 4, 2][mn], n: [4, 6, 6][mn], a, b },
                _ => PairParams::Fifth { a },
            };
            let pair = StandardPair { params, switched };
            let (f1, g1) = pair.instantiate();
            let f = nu.apply_outer(&f1.affine_substitute(&lam));
            let g = nu.apply_outer(&g1.affine_substitute(&mu));
            let s = match_standard_pair(&f, &g).unwrap();
            prop_assert!(s.matches.iter().any(|m| m.pair.kind() == kind));
        }

        #[test]
        fn quartic_with_simple_real_critical_points_kills_kind_five(
            roots in proptest::collection::btree_set(-6i64..=6, 3),
            f in testutil::poly(6, 6, 4),
        ) {
            // g' = prod (x - r_i) with distinct integer r_i
            let dg = roots.iter().fold(Polynomial::one(), |acc, &r| &acc * &Polynomial::linear_factor(int(r)));
            let g = integrate(&dg);
            let s = match_standard_pair(&f, &g).unwrap();
            let rec = s.eliminations.iter().find(|e| e.kind == Some(5) && !e.switched).unwrap();
            prop_assert_eq!(rec.tactic, Tactic::CriticalPoints);
        }
    }

    fn integrate(p: &Polynomial) -> Polynomial {
        let mut c = vec![Rational::zero()];
        for (i, a) in p.coeffs().iter().enumerate() {
            c.push(a / rational::int(i as i64 + 1));
        }
        Polynomial::new(c)
    }
}
