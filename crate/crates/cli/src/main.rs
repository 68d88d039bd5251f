use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polydecomp::certificate::{Certificate, CertificateKind};
use polydecomp::criteria::{
    criterion_outer_degree, criterion_subleading, delta_report, derivative_irreducible_criterion,
    fried1_phi_classifier, verdict,
};
use polydecomp::decompose::{complete_decompositions, decompose_once, ritt_swap, NormalizedPair};
use polydecomp::diophantine::{finiteness, solution_scan, FinitenessVerdict};
use polydecomp::lacunary::{quadrinomial_decompositions, trinomial_decompositions, zannier_bound_check};
use polydecomp::monodromy::{monodromy, DEFAULT_SEED, DEFAULT_TOLERANCE};
use polydecomp::{dickson, parse, rational, Error, Polynomial};
use serde_json::json;

#[derive(Parser)]
#[command(name = "polydecomp", version, about = "Functional decomposition of polynomials over Q")]
struct Cli {
    /// Emit a JSON certificate instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All decompositions f = g ∘ h up to equivalence
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// All complete decompositions
    Complete {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Indecomposability verdict from the criteria
    Indecomposable {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Fall back to the decomposition search when no criterion decides.
        #[arg(long)]
        exhaustive: bool,
    },
    /// The Dickson polynomial D_m(x, a)
    Dickson {
        m: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Recognize alpha * D_m(x + b, a) + c
    RecognizeDickson {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Critical-value multiplicities and the bound on inner degrees
    Delta {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Every individual criterion
    Criterion {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decompositions of a trinomial
    Trinomial {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Decompositions of a quadrinomial with n1 + n3 > 2 n2
    Quadrinomial {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Term-count bound for g ∘ h
    ZannierCheck {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Finiteness of integer solutions of f(x) = g(y)
    Finiteness {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// Also list solutions with |x|, |y| <= N.
        #[arg(long, value_name = "N")]
        max_box: Option<u64>,
        /// Scan x = i/D, y = j/D instead of integers.
        #[arg(long, value_name = "D", default_value_t = 1)]
        denominator: u64,
    },
    /// Monodromy group of f(x) - t by numeric continuation
    Monodromy {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Rewrite g ∘ h (coprime degrees) as g' ∘ h' with the degrees swapped
    Swap {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
}

/// What a command produced: text, JSON, and the exit code.
struct Output {
    text: String,
    json: serde_json::Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Self { text, json, code: 0 }
    }
}

fn certificate(
    kind: CertificateKind,
    input: &[&Polynomial],
    payload: serde_json::Value,
) -> Result<serde_json::Value, Error> {
    let c = Certificate::new(kind, input.iter().map(|p| p.canonical_text()).collect(), &payload)?;
    Ok(serde_json::to_value(c).expect("certificates serialize"))
}

fn pair_lines(pairs: &[NormalizedPair]) -> String {
    if pairs.is_empty() {
        return "indecomposable".into();
    }
    pairs
        .iter()
        .map(|p| format!("({}) ∘ ({})", p.g, p.h))
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(command: Command) -> Result<Output, Error> {
    use CertificateKind::*;
    Ok(match command {
        Command::Decompose { expr } => {
            let f = parse(&expr)?;
            let pairs = decompose_once(&f)?;
            let json = certificate(DecompositionTree, &[&f], json!({ "pairs": pairs }))?;
            Output::ok(pair_lines(&pairs), json)
        }
        Command::Complete { expr } => {
            let f = parse(&expr)?;
            let tree = complete_decompositions(&f)?;
            let text = tree
                .chains
                .iter()
                .map(|c| {
                    c.components
                        .iter()
                        .map(|p| format!("({p})"))
                        .collect::<Vec<_>>()
                        .join(" ∘ ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            Output::ok(text, certificate(DecompositionTree, &[&f], json!(tree))?)
        }
        Command::Indecomposable { expr, exhaustive } => {
            let f = parse(&expr)?;
            let v = verdict(&f, exhaustive)?;
            let mut text = format!("{:?}", v.verdict);
            for r in v.reasons.iter().filter(|r| r.fired) {
                text.push_str(&format!("\n  {}: {}", r.name, r.detail));
            }
            Output::ok(text, certificate(IndecomposableReport, &[&f], json!(v))?)
        }
        Command::Dickson { m, a } => {
            let a = parse(&a)?;
            if !a.is_constant() {
                return Err(Error::InvalidArgument(format!("parameter {a} is not a constant")));
            }
            let a = a.constant_term();
            let d = dickson::dickson_checked(m, &a)?;
            let json = json!({ "m": m, "a": rational::to_text(&a), "polynomial": d });
            Output::ok(d.canonical_text(), json)
        }
        Command::RecognizeDickson { expr } => {
            let f = parse(&expr)?;
            let form = dickson::recognize(&f);
            let text = match &form {
                Some(d) => format!(
                    "{} * D_{}(x + {}, {}) + {}",
                    rational::to_text(&d.alpha),
                    d.m,
                    rational::to_text(&d.b),
                    rational::to_text(&d.a),
                    rational::to_text(&d.c)
                ),
                None => "none".into(),
            };
            Output::ok(text, json!({ "input": f, "form": form }))
        }
        Command::Delta { expr } => {
            let f = parse(&expr)?;
            let d = delta_report(&f)?;
            let profile: Vec<String> = d
                .multiplicity_profile
                .iter()
                .map(|sf| format!("({})^{}", sf.factor, sf.multiplicity))
                .collect();
            let text = format!(
                "delta_max = {}\nR(gamma) = {}\nprofile: {}\ncertifies indecomposable: {}",
                d.delta_max,
                d.resultant_in_gamma,
                profile.join(" "),
                d.certifies_indecomposable()
            );
            Output::ok(text, certificate(IndecomposableReport, &[&f], json!(d))?)
        }
        Command::Criterion { expr } => {
            let f = parse(&expr)?;
            let subleading = criterion_subleading(&f)?;
            let outer = criterion_outer_degree(&f);
            let derivative = derivative_irreducible_criterion(&f)?;
            let delta = delta_report(&f)?;
            let phi = fried1_phi_classifier(&f)?;
            let text = format!(
                "subleading: {subleading}\nouter degrees: {:?} ({:?})\nderivative irreducible: {derivative}\ndelta_max: {}\nphi: {phi:?}",
                outer.admissible, outer.rules, delta.delta_max
            );
            let payload = json!({
                "subleading": subleading,
                "outer_degree": outer,
                "derivative_irreducible": derivative,
                "delta_max": delta.delta_max,
                "phi": phi,
            });
            Output::ok(text, certificate(IndecomposableReport, &[&f], json!(payload))?)
        }
        Command::Trinomial { expr } => {
            let f = parse(&expr)?;
            let pairs = trinomial_decompositions(&f)?;
            let json = certificate(DecompositionTree, &[&f], json!({ "pairs": pairs }))?;
            Output::ok(pair_lines(&pairs), json)
        }
        Command::Quadrinomial { expr } => {
            let f = parse(&expr)?;
            let pairs = quadrinomial_decompositions(&f)?;
            let json = certificate(DecompositionTree, &[&f], json!({ "pairs": pairs }))?;
            Output::ok(pair_lines(&pairs), json)
        }
        Command::ZannierCheck { g, h } => {
            let (g, h) = (parse(&g)?, parse(&h)?);
            let r = zannier_bound_check(&g, &h)?;
            let text = format!(
                "deg f + l - 1 = {} <= 2 l (l - 1) deg h = {}: {}",
                r.deg_f + r.l - 1,
                2 * r.l * r.l.saturating_sub(1) * r.deg_h,
                r.holds
            );
            Output::ok(text, json!({ "g": g, "h": h, "report": r }))
        }
        Command::Finiteness { f, g, max_box, denominator } => {
            let (f, g) = (parse(&f)?, parse(&g)?);
            let cert = finiteness(&f, &g)?;
            let mut text = format!("{:?}", cert.verdict);
            for c in &cert.cases {
                let kind = c.kind.map_or("-".to_string(), |k| k.to_string());
                text.push_str(&format!(
                    "\n  k = {}, kind {kind}{}: {:?} {} : {} != {}",
                    c.k,
                    if c.switched { " (switched)" } else { "" },
                    c.tactic,
                    c.identity,
                    c.lhs,
                    c.rhs
                ));
            }
            if let Some(note) = &cert.residual_note {
                text.push_str(&format!("\n{note}"));
            }
            let mut payload = serde_json::to_value(&cert).expect("certificate serializes");
            if let Some(bound) = max_box {
                let sols = solution_scan(&f, &g, bound, denominator)?;
                let listed: Vec<[String; 2]> = sols
                    .iter()
                    .map(|(x, y)| [rational::to_text(x), rational::to_text(y)])
                    .collect();
                text.push_str(&format!("\nsolutions with box {bound}: {}", listed.len()));
                for [x, y] in &listed {
                    text.push_str(&format!("\n  ({x}, {y})"));
                }
                payload["scan"] = json!({ "box": bound, "denominator": denominator, "solutions": listed });
            }
            let code = if cert.verdict == FinitenessVerdict::Undecided { 3 } else { 0 };
            Output {
                text,
                json: certificate(Finiteness, &[&f, &g], json!(payload))?,
                code,
            }
        }
        Command::Monodromy { expr, tolerance, seed } => {
            let f = parse(&expr)?;
            let r = monodromy(&f, tolerance, seed)?;
            let loops: Vec<String> = r.loop_permutations.iter().map(|p| p.to_string()).collect();
            let text = format!(
                "degree {}, {} branch points\nloops: {}\ninfinity: {}\norder {}, transitive {}, primitive {}, doubly transitive {}\nblock systems: {:?}",
                r.degree,
                r.branch_points.len(),
                loops.join(" "),
                r.infinity_permutation,
                r.order,
                r.transitive,
                r.primitive,
                r.doubly_transitive,
                r.block_systems
            );
            Output::ok(text, certificate(MonodromyReport, &[&f], json!(r))?)
        }
        Command::Swap { g, h } => {
            let (g, h) = (parse(&g)?, parse(&h)?);
            let swap = ritt_swap(&g, &h)?;
            let text = match &swap {
                Some(s) => format!("({}) ∘ ({}) [{:?}]", s.g, s.h, s.pattern),
                None => "none".into(),
            };
            let f = g.compose(&h);
            Output::ok(text, certificate(DecompositionTree, &[&f], json!({ "g": g, "h": h, "swap": swap }))?)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values print"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::Internal(_)) { 2 } else { 1 })
        }
    }
}
