//! Command-line front end for the partizan engine.
//!
//! Exit codes: 0 on success (including `verify` passes and non-refuted
//! bounded runs), 1 when a comparison is refuted, a membership test is
//! negative, or a verification check fails, 2 on usage errors
//! (including notation and domain errors), 3 on resource exhaustion.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use partizan::{
    classify_form, closure_enumerate, distinguish, enumerate_forms, equal_bounded, geq_absolute,
    outcome, parse, render, run_check, Arena, Budget, CheckConfig, CheckStatus, Convention,
    EngineError, FormId, Membership, UniverseName, UniverseSpec, Verdict, CHECK_IDS,
};

#[derive(Parser)]
#[command(
    name = "partizan",
    version,
    about = "Exact engine for short partizan game forms",
    max_term_width = 100
)]
struct Cli {
    /// Cap on the number of interned forms (for resource-limit testing).
    #[arg(long, global = true)]
    arena_limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Birthday bound for generated forms.
    #[arg(long)]
    max_birthday: Option<u32>,
    /// Summand bound for generated sums.
    #[arg(long)]
    max_summands: Option<u32>,
    /// Cap on the number of generated forms.
    #[arg(long)]
    max_forms: Option<usize>,
}

impl BudgetArgs {
    fn to_budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            max_birthday: self.max_birthday.unwrap_or(d.max_birthday),
            max_summands: self.max_summands.unwrap_or(d.max_summands),
            max_forms: self.max_forms.unwrap_or(d.max_forms),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its canonical rendering.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Solve the outcome class of a form.
    Outcome {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Play convention.
        #[arg(long, default_value = "misere")]
        convention: Convention,
        #[arg(long)]
        json: bool,
    },
    /// Disjunctive sum of two or more forms.
    Sum {
        #[arg(num_args = 2.., required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Conjugate of a form (players' roles swapped throughout).
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Adjoint of a form (its misère previous-player-win companion).
    Adjoint {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Structural flags of a form: atomicity, ends, dicot, dead-ending.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Test `G >= H` modulo a universe, with a replayable witness on
    /// refutation. Exits 1 when refuted.
    Compare {
        #[arg(long)]
        universe: UniverseName,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
        /// Also test `H >= G` and report equality instead of order.
        #[arg(long)]
        equal: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Search for a universe member whose addition separates the
    /// outcomes of two forms.
    Distinguish {
        #[arg(long)]
        universe: UniverseName,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all forms up to a birthday, or a universe closure.
    Enumerate {
        /// Enumerate this universe's closure instead of all forms.
        #[arg(long)]
        universe: Option<UniverseName>,
        /// Closure days (only with --universe).
        #[arg(long, default_value_t = 2)]
        days: u32,
        /// Option-subset width for closure assembly; 0 = unrestricted.
        #[arg(long)]
        width: Option<usize>,
        /// Print only the count, not the forms.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Bounded membership test for a form in a universe. Exits 1 on a
    /// definite `no`.
    Member {
        #[arg(long)]
        universe: UniverseName,
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification check (or `all`). Exits 1 if any check
    /// fails.
    Verify {
        /// Check id, or `all`.
        check_id: String,
        /// Seed for sampled rows.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
}

/// Appends a line to the output buffer; writing to a `String` cannot
/// fail.
macro_rules! wln {
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.0);
            failure.1
        }
    };
    // Tolerate a closed pipe (e.g. piping into `head`): the computed
    // exit code still stands.
    use std::io::Write as _;
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    ExitCode::from(code)
}

struct Failure(String, u8);

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = if e.is_resource() { 3 } else { 2 };
        Failure(e.to_string(), code)
    }
}

fn parse_expr(arena: &mut Arena, expr: &str) -> Result<FormId, Failure> {
    parse(arena, expr).map_err(|e| {
        let resource =
            matches!(&e.kind, partizan::ParseErrorKind::Engine(inner) if inner.is_resource());
        Failure(e.to_string(), if resource { 3 } else { 2 })
    })
}

fn new_arena(limit: Option<usize>) -> Arena {
    match limit {
        Some(n) => Arena::with_limit(n),
        None => Arena::new(),
    }
}

fn json_form(arena: &Arena, g: FormId) -> serde_json::Value {
    serde_json::json!({
        "form": render(arena, g),
        "birthday": arena.birthday(g),
    })
}

fn run(cli: Cli, out: &mut String) -> Result<u8, Failure> {
    use std::fmt::Write as _;
    let mut arena = new_arena(cli.arena_limit);
    let a = &mut arena;
    match cli.command {
        Command::Parse { expr, json } => {
            let g = parse_expr(a, &expr)?;
            if json {
                let mut v = json_form(a, g);
                v["input"] = serde_json::Value::from(expr);
                wln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                wln!(out, "{}", render(a, g));
            }
            Ok(0)
        }
        Command::Outcome {
            expr,
            convention,
            json,
        } => {
            let g = parse_expr(a, &expr)?;
            let o = outcome(a, g, convention)?;
            if json {
                let v = serde_json::json!({
                    "form": render(a, g),
                    "convention": convention.to_string(),
                    "outcome": o.to_string(),
                });
                wln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                wln!(out, "{o}");
            }
            Ok(0)
        }
        Command::Sum { exprs, json } => {
            let mut acc = a.zero();
            for e in &exprs {
                let g = parse_expr(a, e)?;
                acc = partizan::sum(a, acc, g)?;
            }
            emit_form(out, a, acc, json);
            Ok(0)
        }
        Command::Conjugate { expr, json } => {
            let g = parse_expr(a, &expr)?;
            let c = partizan::conjugate(a, g)?;
            emit_form(out, a, c, json);
            Ok(0)
        }
        Command::Adjoint { expr, json } => {
            let g = parse_expr(a, &expr)?;
            let d = partizan::adjoint(a, g)?;
            emit_form(out, a, d, json);
            Ok(0)
        }
        Command::Classify { expr, json } => {
            let g = parse_expr(a, &expr)?;
            let f = classify_form(a, g)?;
            if json {
                let v = serde_json::json!({
                    "form": render(a, g),
                    "birthday": a.birthday(g),
                    "left_atomic": f.left_atomic,
                    "right_atomic": f.right_atomic,
                    "left_end": f.left_end,
                    "right_end": f.right_end,
                    "dicot": f.dicot,
                    "dead_ending": f.dead_ending,
                });
                wln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                wln!(out, "form: {}", render(a, g));
                wln!(out, "birthday: {}", a.birthday(g));
                wln!(out, "left_atomic: {}", f.left_atomic);
                wln!(out, "right_atomic: {}", f.right_atomic);
                wln!(out, "left_end: {}", f.left_end);
                wln!(out, "right_end: {}", f.right_end);
                wln!(out, "dicot: {}", f.dicot);
                wln!(out, "dead_ending: {}", f.dead_ending);
            }
            Ok(0)
        }
        Command::Compare {
            universe,
            g,
            h,
            equal,
            budget,
            json,
        } => {
            let spec = UniverseSpec::new(universe)?;
            let gid = parse_expr(a, &g)?;
            let hid = parse_expr(a, &h)?;
            let b = budget.to_budget();
            let verdict = if equal {
                equal_bounded(a, &spec, gid, hid, &b)?
            } else {
                geq_absolute(a, &spec, gid, hid, &b)?
            };
            let refuted = matches!(verdict, Verdict::Refuted(_));
            if json {
                let v = serde_json::json!({
                    "universe": universe.to_string(),
                    "g": render(a, gid),
                    "h": render(a, hid),
                    "relation": if equal { "equal" } else { "geq" },
                    "verdict": partizan::describe_verdict(a, &verdict),
                    "refuted": refuted,
                });
                wln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                wln!(out, "{}", partizan::describe_verdict(a, &verdict));
            }
            Ok(if refuted { 1 } else { 0 })
        }
        Command::Distinguish {
            universe,
            g,
            h,
            budget,
            json,
        } => {
            let spec = UniverseSpec::new(universe)?;
            let gid = parse_expr(a, &g)?;
            let hid = parse_expr(a, &h)?;
            let b = budget.to_budget();
            let found = distinguish(a, &spec, gid, hid, &b)?;
            if json {
                let v = match &found {
                    Some(d) => serde_json::json!({
                        "x": render(a, d.x),
                        "outcome_g_plus_x": d.outcome_g.to_string(),
                        "outcome_h_plus_x": d.outcome_h.to_string(),
                    }),
                    None => serde_json::json!({ "x": serde_json::Value::Null }),
                };
                wln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                match &found {
                    Some(d) => {
                        wln!(out, "X = {}", render(a, d.x));
                        wln!(out, "o({}+X) = {}", render(a, gid), d.outcome_g);
                        wln!(out, "o({}+X) = {}", render(a, hid), d.outcome_h);
                    }
                    None => wln!(out, "no distinguishing form found within budget"),
                }
            }
            Ok(0)
        }
        Command::Enumerate {
            universe,
            days,
            width,
            count,
            budget,
            json,
        } => {
            let b = budget.to_budget();
            let (forms, truncated) = match universe {
                Some(u) => {
                    let spec = UniverseSpec::new(u)?;
                    let w = match width {
                        Some(0) => None,
                        Some(n) => Some(n),
                        None => Some(partizan::DEFAULT_WIDTH),
                    };
                    let base = spec.closure_base(a, &b)?;
                    let r = closure_enumerate(a, &base, days, w, &b)?;
                    (r.forms, r.truncated)
                }
                None => enumerate_forms(a, b.max_birthday, b.max_forms)?,
            };
            if json {
                let rendered: Vec<String> = if count {
                    Vec::new()
                } else {
                    forms.iter().map(|&g| render(a, g)).collect()
                };
                let v = serde_json::json!({
                    "count": forms.len(),
                    "truncated": truncated,
                    "forms": rendered,
                });
                wln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                wln!(
                    out,
                    "{} forms{}",
                    forms.len(),
                    if truncated { " (truncated)" } else { "" }
                );
                if !count {
                    for &g in &forms {
                        wln!(out, "{}", render(a, g));
                    }
                }
            }
            Ok(0)
        }
        Command::Member {
            universe,
            expr,
            budget,
            json,
        } => {
            let spec = UniverseSpec::new(universe)?;
            let g = parse_expr(a, &expr)?;
            let b = budget.to_budget();
            let m = spec.member_bounded(a, g, &b)?;
            if json {
                let v = serde_json::json!({
                    "universe": universe.to_string(),
                    "form": render(a, g),
                    "membership": m.to_string(),
                });
                wln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                wln!(out, "{m}");
            }
            Ok(if m == Membership::No { 1 } else { 0 })
        }
        Command::Verify {
            check_id,
            seed,
            budget,
            json,
        } => {
            let mut cfg = CheckConfig {
                budget: budget.to_budget(),
                arena_limit: cli.arena_limit,
                ..CheckConfig::default()
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let ids: Vec<&str> = if check_id == "all" {
                CHECK_IDS.to_vec()
            } else {
                vec![check_id.as_str()]
            };
            let mut reports = Vec::new();
            for id in ids {
                reports.push(run_check(id, &cfg)?);
            }
            let failed = reports.iter().any(|r| r.status == CheckStatus::Fail);
            if json {
                if reports.len() == 1 {
                    wln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&reports[0]).unwrap()
                    );
                } else {
                    wln!(out, "{}", serde_json::to_string_pretty(&reports).unwrap());
                }
            } else {
                for r in &reports {
                    let status = serde_json::to_value(r.status).unwrap();
                    wln!(
                        out,
                        "check {}: {} ({} rows, {} ms)",
                        r.check_id,
                        status.as_str().unwrap(),
                        r.details.len(),
                        r.elapsed_ms
                    );
                    for row in &r.details {
                        if row.expected != row.computed {
                            let label = if r.status == CheckStatus::Fail {
                                "MISMATCH"
                            } else {
                                "NOTE"
                            };
                            wln!(
                                out,
                                "  {label} {}: expected {}, computed {}",
                                row.input,
                                row.expected,
                                row.computed
                            );
                        }
                    }
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

fn emit_form(out: &mut String, arena: &Arena, g: FormId, json: bool) {
    use std::fmt::Write as _;
    if json {
        wln!(
            out,
            "{}",
            serde_json::to_string_pretty(&json_form(arena, g)).unwrap()
        );
    } else {
        wln!(out, "{}", render(arena, g));
    }
}
