//! Command-line surface over `cremona-core`.
//!
//! [`run_command`] is the whole program minus process I/O, so it can be
//! driven from tests.

use clap::{Parser, Subcommand, ValueEnum};
use cremona_core::birmap::{builtins, MapWord, RatMap};
use cremona_core::dforms::{chart, homogenize, wedge11, Proj1Form};
use cremona_core::exactalg::{Monomial, SymbolTable, Table};
use cremona_core::foliation::{degree_sequence, from_form, pullback_foliation};
use cremona_core::paperlab::families::{family, family_names, general_quadratic_form};
use cremona_core::paperlab::obstructions::{monomial_div_obstructions, remainder_obstructions};
use cremona_core::paperlab::{run_suite, SuiteConfig, DEFAULT_SEED, SEED_ENV};
use cremona_core::parse::{parse_affine_literal, parse_form_literal, parse_map_literal, parse_poly, split_top};
use cremona_core::{Error, ParamForm};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cremona", version, about = "Pullbacks of plane foliations under birational maps")]
struct Cli {
    /// Seed for sampled forms and the check suite [env: CREMONA_SEED]
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Reduced pullback of a form and its degree
    Pullback {
        #[arg(long)]
        map: String,
        /// `a,b` for `phi_ab`; `none` or omitted keeps them symbolic
        #[arg(long)]
        map_arg: Option<String>,
        #[arg(long)]
        form: String,
        /// Print the result in the chart z = 1
        #[arg(long)]
        affine: bool,
    },
    /// Degree of the foliation defined by a form
    Degree {
        #[arg(long)]
        form: String,
    },
    /// Degrees along the prefixes of a word of maps
    Degseq {
        #[arg(long)]
        word: String,
        #[arg(long)]
        form: String,
    },
    /// Wedge product of two forms, or ZERO
    Wedge {
        #[arg(long)]
        form: String,
        #[arg(long)]
        form2: String,
    },
    /// Conditions on the parameters for `P` to divide the pullback
    Obstruct {
        #[arg(long)]
        map: String,
        #[arg(long)]
        map_arg: Option<String>,
        #[arg(long)]
        monomial: String,
        #[arg(long, default_value = "general")]
        form: String,
    },
    /// Run the named checks
    Verify {
        /// Substring of the check ids to run
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
        /// Record wall-clock time per check
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Structured,
    Text,
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Output {
            code: exit_code(e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parse and naming errors exit with 2, violated mathematical
/// preconditions with 3.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnknownSymbol(_) | Error::UnknownName(_) | Error::DuplicateSymbol(_) => {
            EXIT_PARSE
        }
        _ => EXIT_MATH,
    }
}

/// Run one command line (without the program name).
pub fn run_command<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("cremona".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output::ok(text)
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let seed = cli
        .seed
        .or_else(|| std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok()))
        .unwrap_or(DEFAULT_SEED);
    match execute(cli.cmd, seed) {
        Ok(out) => out,
        Err(e) => Output::error(&e),
    }
}

fn table() -> Table {
    SymbolTable::standard()
}

fn execute(cmd: Cmd, seed: u64) -> Result<Output, Error> {
    let t = table();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match cmd {
        Cmd::Pullback {
            map,
            map_arg,
            form,
            affine,
        } => {
            let phi = resolve_map(&map, map_arg.as_deref(), &t)?;
            let w = resolve_form(&form, &t, &mut rng)?;
            let f = from_form(&w)?;
            let back = pullback_foliation(&phi, &f)?;
            let shown = if affine {
                let (_, [a, b]) = chart(back.form(), 2);
                format!("{{{a}, {b}}}")
            } else {
                back.form().to_string()
            };
            Ok(Output::ok(format!("form: {shown}\ndegree: {}\n", back.degree())))
        }
        Cmd::Degree { form } => {
            let w = resolve_form(&form, &t, &mut rng)?;
            Ok(Output::ok(format!("{}\n", from_form(&w)?.degree())))
        }
        Cmd::Degseq { word, form } => {
            let w = resolve_word(&word, &t)?;
            let f = from_form(&resolve_form(&form, &t, &mut rng)?)?;
            let seq: Vec<String> = degree_sequence(&w, &f)?.iter().map(u32::to_string).collect();
            Ok(Output::ok(format!("{}\n", seq.join(" "))))
        }
        Cmd::Wedge { form, form2 } => {
            let a = resolve_form(&form, &t, &mut rng)?;
            let b = resolve_form(&form2, &t, &mut rng)?;
            Ok(Output::ok(format!("{}\n", wedge11(&a, &b)?)))
        }
        Cmd::Obstruct {
            map,
            map_arg,
            monomial,
            form,
        } => {
            let phi = resolve_map(&map, map_arg.as_deref(), &t)?;
            let w = resolve_param_form(&form, &t, &mut rng)?;
            let p = parse_poly(&monomial, &t)?;
            let set = match as_monomial(&p) {
                Some(m) => monomial_div_obstructions(&phi, &w, &m)?,
                None => remainder_obstructions(&phi, &w, &p)?,
            };
            Ok(Output::ok(format!("{set}\n")))
        }
        Cmd::Verify {
            filter,
            format,
            timings,
        } => {
            let report = run_suite(&SuiteConfig { seed, filter, timings });
            let stdout = match format {
                Format::Structured => {
                    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
                    s.push('\n');
                    s
                }
                Format::Text => report.to_text(),
            };
            let code = if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            let stderr = if code == EXIT_OK {
                String::new()
            } else {
                format!("{} check(s) failed\n", report.fail_count)
            };
            Ok(Output { code, stdout, stderr })
        }
    }
}

fn as_monomial(p: &cremona_core::MPoly) -> Option<Monomial> {
    if p.n_terms() != 1 {
        return None;
    }
    let (m, _) = p.leading()?;
    p.is_numeric().then(|| m.clone())
}

/// A built-in map, `phi_ab` with optional `a,b`, or a literal `(A : B : C)`.
fn resolve_map(src: &str, arg: Option<&str>, t: &Table) -> Result<RatMap, Error> {
    let src = src.trim();
    if src.starts_with('(') {
        return RatMap::new(parse_map_literal(src, t)?);
    }
    if src == "phi_ab" || src == "phi" {
        let (a, b) = match arg.map(str::trim) {
            None | Some("none") => (parse_poly("a", t)?, parse_poly("b", t)?),
            Some(v) => {
                let parts = split_top(v, ',');
                if parts.len() != 2 {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: "expected `a,b`".into(),
                    });
                }
                (parse_poly(&parts[0].1, t)?, parse_poly(&parts[1].1, t)?)
            }
        };
        return builtins::phi(t, &a, &b);
    }
    builtins::named_map(src, t)
}

/// A built-in word name, or maps separated by `,` (first applied
/// first under pullback).
fn resolve_word(src: &str, t: &Table) -> Result<MapWord, Error> {
    if let Some(w) = builtins::word(src.trim(), t) {
        return Ok(w);
    }
    let letters = split_top(src, ',')
        .into_iter()
        .map(|(_, s)| resolve_map(&s, None, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MapWord::new(letters))
}

/// Family names with their parameters left symbolic, or literals.
fn resolve_param_form(src: &str, t: &Table, rng: &mut ChaCha8Rng) -> Result<ParamForm, Error> {
    match named_family(src) {
        Err(Error::UnknownName(_)) => Ok(ParamForm::new(resolve_form(src, t, rng)?)),
        r => r,
    }
}

fn named_family(src: &str) -> Result<ParamForm, Error> {
    let src = src.trim();
    if src == "general" {
        return Ok(general_quadratic_form());
    }
    if family_names().contains(&src) {
        return family(src, &[]);
    }
    Err(Error::UnknownName(src.to_string()))
}

/// `[A, B, C]`, affine `{a, b}`, a family name, `<family>_sample` or
/// `omega_rho_sample`.
fn resolve_form(src: &str, t: &Table, rng: &mut ChaCha8Rng) -> Result<Proj1Form, Error> {
    let src = src.trim();
    if src.starts_with('[') {
        return Proj1Form::new(parse_form_literal(src, t)?);
    }
    if src.starts_with('{') {
        let [(an, ad), (bn, bd)] = parse_affine_literal(src, t)?;
        return homogenize(&(&an * &bd), &(&bn * &ad));
    }
    let sample_of = match src {
        "omega_rho_sample" => Some("omega3"),
        _ => src.strip_suffix("_sample"),
    };
    if let Some(name) = sample_of {
        return sample(name, rng);
    }
    Ok(named_family(src)?.form().clone())
}

/// Random member of a family defining a foliation of degree 2.
fn sample(name: &str, rng: &mut ChaCha8Rng) -> Result<Proj1Form, Error> {
    let fam = family(name, &[])?;
    for _ in 0..50 {
        let w = fam.sample(rng)?;
        if from_form(w.form())?.degree() == 2 {
            return Ok(w.form().clone());
        }
    }
    Err(Error::Binding(format!("no degree-2 sample of {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_exit_with_two() {
        let out = run_command(["degree", "--form", "[x y, 0, 0]"]);
        assert_eq!(out.code, EXIT_PARSE);
        assert!(out.stderr.contains("parse error"));
        assert_eq!(run_command(["no-such-command"]).code, EXIT_PARSE);
        assert_eq!(run_command(["degree", "--form", "omega42"]).code, EXIT_PARSE);
    }

    #[test]
    fn euler_violation_exits_with_three() {
        let out = run_command(["degree", "--form", "[y, 0, 0]"]);
        assert_eq!(out.code, EXIT_MATH);
    }

    #[test]
    fn affine_input_is_homogenized() {
        let out = run_command(["degree", "--form", "{x^2 - y^3, x*y^2}"]);
        assert_eq!(out.stdout, "2\n");
    }

    #[test]
    fn monomial_detection() {
        let t = table();
        assert!(as_monomial(&parse_poly("x^2*y*z", &t).unwrap()).is_some());
        assert!(as_monomial(&parse_poly("x^2 + y^2", &t).unwrap()).is_none());
        assert!(as_monomial(&parse_poly("a*x", &t).unwrap()).is_none());
    }
}
