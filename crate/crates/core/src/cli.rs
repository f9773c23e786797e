//! The `shadowstates` command line.
//!
//! Every command prints text, CSV or JSON. JSON documents have the shape
//! `{"command", "params", "result"}` with keys sorted, so identical invocations
//! give identical bytes.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::bijection::{
    pairing_table, render_pairing_table, varphi, varphi_inv, verify_bijection, PAIRING_HEADERS,
};
use crate::error::Error;
use crate::families::{build, Family, FamilySpec};
use crate::genpoly::{family_poly, poly_bruteforce_capped, PolyMethod, Polynomial};
use crate::rosette::{Rosette, DEFAULT_RADIUS};
use crate::shadow::DEFAULT_BRUTEFORCE_CAP;
use crate::verify::{run_suite, SuiteConfig};
use crate::words::{
    gen_f2, gen_p, gen_t2, gen_tau2, FoilMethod, RegionMethod, TwistKnotMethod, Word, WordSet,
};

/// Environment variable overriding the brute-force crossing cap.
pub const CAP_ENV: &str = "SHADOWSTATES_MAX_BRUTEFORCE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_DISAGREEMENT: i32 = 4;
pub const EXIT_DOMAIN: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "shadowstates", version, about = "State censuses of knot shadows and rosette region codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyMethodArg {
    Closed,
    Recurrence,
    ViaParts,
    /// Brute-force state census.
    Census,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SetArg {
    #[value(name = "P")]
    P,
    #[value(name = "T2")]
    T2,
    #[value(name = "F2")]
    F2,
    #[value(name = "Tau2")]
    Tau2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WordMethodArg {
    Closed,
    Recursive,
    Filter,
    Definition,
    Psi,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generating polynomial coefficients, constant term first.
    Poly {
        family: Family,
        /// Half-twists; not used for figure-eight.
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "closed")]
        method: PolyMethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// State words of a family member, grouped by component count.
    States {
        family: Family,
        n: Option<usize>,
        #[arg(long)]
        components: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Region codes (P) or 2-state words (T2, F2, Tau2).
    Words {
        #[arg(value_enum)]
        set: SetArg,
        n: usize,
        /// One construction only; by default all are built and compared.
        #[arg(long, value_enum)]
        method: Option<WordMethodArg>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The bijection from region codes of n+1 circles to 2-states of the n-twist knot.
    Bijection {
        n: usize,
        #[arg(long, conflicts_with_all = ["inverse", "table"])]
        map: Option<String>,
        #[arg(long, conflicts_with = "table")]
        inverse: Option<String>,
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Regions of the rosette of n circles, found by sampling.
    Rosette {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: f64,
        #[arg(long)]
        codes: bool,
        /// Write an SVG drawing here.
        #[arg(long)]
        svg: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the cross-check suite.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        geometry: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// A failed command: exit code and message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::Domain { .. } => EXIT_DOMAIN,
            Error::Argument(_) | Error::Geometry(_) | Error::Parse(_) | Error::WordLength { .. } => {
                EXIT_USAGE
            }
            Error::Structure(_) | Error::NotCheckerboard(_) | Error::Tolerance { .. } => {
                EXIT_VERIFY_FAILED
            }
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_VERIFY_FAILED, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// What a command produced: the rendered output and its exit code.
struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: EXIT_OK }
    }
}

fn document(command: &str, params: Value, result: Value) -> String {
    let doc = json!({ "command": command, "params": params, "result": result });
    serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
}

fn show(word: &Word) -> String {
    format!("{word:?}")
}

fn word_list(words: &[Word]) -> Vec<String> {
    words.iter().map(show).collect()
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse().map_err(Failure::from)
}

fn spec_for(family: Family, n: Option<usize>) -> Result<FamilySpec, Failure> {
    match (family, n) {
        (Family::FigureEight, _) => Ok(FamilySpec::new(family, 2)),
        (_, Some(n)) => Ok(FamilySpec::new(family, n)),
        (_, None) => Err(usage(format!("{family} needs a half-twist count"))),
    }
}

fn read_cap() -> Result<usize, Failure> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{CAP_ENV}={v:?} is not a crossing count"))),
        Err(_) => Ok(DEFAULT_BRUTEFORCE_CAP),
    }
}

fn cmd_poly(
    family: Family,
    n: Option<usize>,
    method: PolyMethodArg,
    format: Format,
) -> Result<Output, Failure> {
    let spec = spec_for(family, n)?;
    let poly: Polynomial<BigUint> = match method {
        PolyMethodArg::Census => poly_bruteforce_capped(&build(spec), read_cap()?)?,
        PolyMethodArg::Closed => family_poly(family, spec.half_twists, PolyMethod::Closed)?,
        PolyMethodArg::Recurrence => family_poly(family, spec.half_twists, PolyMethod::Recurrence)?,
        PolyMethodArg::ViaParts => family_poly(family, spec.half_twists, PolyMethod::ViaParts)?,
    };
    let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
    let method_name = match method {
        PolyMethodArg::Census => "census",
        PolyMethodArg::Closed => "closed",
        PolyMethodArg::Recurrence => "recurrence",
        PolyMethodArg::ViaParts => "via-parts",
    };
    Ok(Output::ok(match format {
        Format::Text | Format::Csv => coeffs.join(",") + "\n",
        Format::Json => {
            // big coefficients would lose precision as JSON numbers
            let numbers: Vec<Value> = poly
                .coeffs()
                .iter()
                .map(|c| match u64::try_from(c) {
                    Ok(v) => json!(v),
                    Err(_) => json!(c.to_string()),
                })
                .collect();
            document(
                "poly",
                json!({ "family": family.name(), "n": spec.half_twists, "method": method_name }),
                json!({ "coefficients": numbers, "polynomial": poly.to_string() }),
            )
        }
    }))
}

fn cmd_states(
    family: Family,
    n: Option<usize>,
    components: Option<usize>,
    format: Format,
) -> Result<Output, Failure> {
    let spec = spec_for(family, n)?;
    let census = build(spec).state_census_capped(read_cap()?)?;
    let groups: Vec<(usize, &Vec<Word>)> = census
        .iter()
        .filter(|(k, _)| components.is_none_or(|want| **k == want))
        .map(|(k, v)| (*k, v))
        .collect();
    let body = match format {
        Format::Text => match components {
            Some(_) => {
                let words: Vec<String> = groups.iter().flat_map(|(_, v)| word_list(v)).collect();
                words.join(",") + "\n"
            }
            None => groups
                .iter()
                .map(|(k, v)| format!("{k} ({}): {}\n", v.len(), word_list(v).join(",")))
                .collect(),
        },
        Format::Csv => {
            let mut out = String::from("components,word\n");
            for (k, v) in &groups {
                for word in v.iter() {
                    out += &format!("{k},{}\n", show(word));
                }
            }
            out
        }
        Format::Json => {
            let result: serde_json::Map<String, Value> = groups
                .iter()
                .map(|(k, v)| (k.to_string(), json!(word_list(v))))
                .collect();
            document(
                "states",
                json!({ "family": family.name(), "n": spec.half_twists, "components": components }),
                json!({ "states": result }),
            )
        }
    };
    Ok(Output::ok(body))
}

fn set_name(set: SetArg) -> &'static str {
    match set {
        SetArg::P => "P",
        SetArg::T2 => "T2",
        SetArg::F2 => "F2",
        SetArg::Tau2 => "Tau2",
    }
}

fn build_words(set: SetArg, n: usize, method: WordMethodArg) -> Result<WordSet, Failure> {
    use WordMethodArg as M;
    let unsupported = || {
        usage(format!(
            "method {} does not apply to {}",
            method.to_possible_value().expect("named").get_name(),
            set_name(set)
        ))
    };
    Ok(match (set, method) {
        (SetArg::P, M::Closed) => gen_p(n, RegionMethod::Closed)?,
        (SetArg::P, M::Recursive) => gen_p(n, RegionMethod::Recursive)?,
        (SetArg::P, M::Filter) => gen_p(n, RegionMethod::Filter)?,
        (SetArg::T2, M::Closed) => gen_t2(n),
        (SetArg::F2, M::Closed) => gen_f2(n, FoilMethod::Closed),
        (SetArg::F2, M::Recursive) => gen_f2(n, FoilMethod::Recursive),
        (SetArg::Tau2, M::Definition) => gen_tau2(n, TwistKnotMethod::Definition),
        (SetArg::Tau2, M::Psi) => gen_tau2(n, TwistKnotMethod::PsiRecursion),
        _ => return Err(unsupported()),
    })
}

fn default_methods(set: SetArg, n: usize) -> Vec<WordMethodArg> {
    use WordMethodArg as M;
    match set {
        // the filter walks all 2^n words
        SetArg::P if n <= 20 => vec![M::Closed, M::Recursive, M::Filter],
        SetArg::P => vec![M::Closed, M::Recursive],
        SetArg::T2 => vec![M::Closed],
        SetArg::F2 => vec![M::Closed, M::Recursive],
        SetArg::Tau2 => vec![M::Definition, M::Psi],
    }
}

fn cmd_words(
    set: SetArg,
    n: usize,
    method: Option<WordMethodArg>,
    format: Format,
) -> Result<Output, Failure> {
    if matches!(set, SetArg::P) && n == 0 {
        return Err(usage("region codes need at least one circle"));
    }
    let methods = method.map_or_else(|| default_methods(set, n), |m| vec![m]);
    let mut built = Vec::with_capacity(methods.len());
    for &m in &methods {
        built.push(build_words(set, n, m)?);
    }
    let name = |m: WordMethodArg| m.to_possible_value().expect("named").get_name().to_string();
    for (m, other) in methods.iter().zip(&built).skip(1) {
        if other != &built[0] {
            let diff = word_list(&built[0].symmetric_difference(other));
            return Err(Failure {
                code: EXIT_DISAGREEMENT,
                message: format!(
                    "{} and {} disagree on {}",
                    name(methods[0]),
                    name(*m),
                    diff.join(",")
                ),
            });
        }
    }
    let words = word_list(built[0].members());
    let body = match format {
        Format::Text => words.join(",") + "\n",
        Format::Csv => words.iter().map(|w| format!("{w}\n")).collect(),
        Format::Json => document(
            "words",
            json!({
                "set": set_name(set),
                "n": n,
                "methods": methods.iter().map(|&m| name(m)).collect::<Vec<_>>(),
            }),
            json!({ "count": words.len(), "words": words }),
        ),
    };
    Ok(Output::ok(body))
}

fn check_len(word: &Word, want: usize, what: &str) -> Result<(), Failure> {
    if word.len() == want {
        return Ok(());
    }
    Err(Error::Domain {
        word: show(word),
        reason: format!("{what} have length {want}, got {}", word.len()),
    }
    .into())
}

fn cmd_bijection(
    n: usize,
    map: Option<String>,
    inverse: Option<String>,
    table: bool,
    format: Format,
) -> Result<Output, Failure> {
    let single = |input: &Word, output: &Word, direction: &str| match format {
        Format::Text | Format::Csv => format!("{}\n", show(output)),
        Format::Json => document(
            "bijection",
            json!({ "n": n, direction: show(input) }),
            json!({ "word": show(output) }),
        ),
    };
    if let Some(s) = map {
        let word = parse_word(&s)?;
        check_len(&word, n + 1, "region codes")?;
        return Ok(Output::ok(single(&word, &varphi(&word)?, "map")));
    }
    if let Some(s) = inverse {
        let word = parse_word(&s)?;
        check_len(&word, n + 2, "twist-knot 2-states")?;
        return Ok(Output::ok(single(&word, &varphi_inv(&word)?, "inverse")));
    }
    if table {
        let rows = pairing_table(n)?;
        let body = match format {
            Format::Text => render_pairing_table(&rows),
            Format::Csv => {
                let mut out = PAIRING_HEADERS.join(",") + "\n";
                for row in &rows {
                    let cells: Vec<String> =
                        row.iter().map(|c| c.as_ref().map(show).unwrap_or_default()).collect();
                    out += &(cells.join(",") + "\n");
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|row| json!(row.iter().map(|c| c.as_ref().map(show)).collect::<Vec<_>>()))
                    .collect();
                document(
                    "bijection",
                    json!({ "n": n, "table": true }),
                    json!({ "columns": PAIRING_HEADERS, "rows": rows }),
                )
            }
        };
        return Ok(Output::ok(body));
    }
    let report = verify_bijection(n);
    let code = if report.is_bijection { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let body = match format {
        Format::Text | Format::Csv => {
            let mut out = format!(
                "n: {}\ndomain: {}\nbijection: {}\n",
                n, report.domain_size, report.is_bijection
            );
            for c in &report.counterexamples {
                out += &format!("counterexample {}: {}\n", show(&c.word), c.issue);
            }
            out
        }
        Format::Json => document(
            "bijection",
            json!({ "n": n }),
            json!({
                "is_bijection": report.is_bijection,
                "domain_size": report.domain_size,
                "census_checked": report.census_checked,
                "counterexamples": report
                    .counterexamples
                    .iter()
                    .map(|c| json!({ "word": show(&c.word), "issue": c.issue }))
                    .collect::<Vec<_>>(),
            }),
        ),
    };
    Ok(Output { body, code })
}

fn cmd_rosette(
    n: usize,
    radius: f64,
    codes: bool,
    svg: Option<std::path::PathBuf>,
    format: Format,
) -> Result<Output, Failure> {
    let rosette = Rosette::<f64>::regular(n, radius)?;
    let samples = rosette.region_samples()?;
    if let Some(path) = svg {
        std::fs::write(path, rosette.render_svg(codes.then_some(&samples)))?;
    }
    let list: Vec<String> = samples.keys().map(show).collect();
    let body = match format {
        Format::Text => {
            let mut out = format!("regions: {}\n", list.len());
            if codes {
                out += &list.iter().map(|c| format!("{c}\n")).collect::<String>();
            }
            out
        }
        Format::Csv => {
            if codes {
                list.iter().map(|c| format!("{c}\n")).collect()
            } else {
                format!("{}\n", list.len())
            }
        }
        Format::Json => {
            let mut result = json!({
                "regions": list.len(),
                "euler_count": rosette.euler_region_count(),
                "vertices": rosette.intersections().len(),
            });
            if codes {
                result["codes"] = json!(list);
            }
            document("rosette", json!({ "n": n, "radius": radius }), result)
        }
    };
    Ok(Output::ok(body))
}

fn cmd_verify(max_n: usize, geometry: bool, format: Format) -> Result<Output, Failure> {
    let checks = run_suite(SuiteConfig { max_n, geometry, cap: read_cap()? });
    let passed = checks.iter().all(|c| c.passed);
    let body = match format {
        Format::Text | Format::Csv => checks.iter().map(|c| c.line() + "\n").collect(),
        Format::Json => document(
            "verify",
            json!({ "max_n": max_n, "geometry": geometry }),
            json!({
                "passed": passed,
                "checks": checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                    .collect::<Vec<_>>(),
            }),
        ),
    };
    Ok(Output { body, code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}

fn dispatch(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Poly { family, n, method, format } => cmd_poly(family, n, method, format),
        Command::States { family, n, components, format } => {
            cmd_states(family, n, components, format)
        }
        Command::Words { set, n, method, format } => cmd_words(set, n, method, format),
        Command::Bijection { n, map, inverse, table, format } => {
            cmd_bijection(n, map, inverse, table, format)
        }
        Command::Rosette { n, radius, codes, svg, format } => {
            cmd_rosette(n, radius, codes, svg, format)
        }
        Command::Verify { max_n, geometry, format } => cmd_verify(max_n, geometry, format),
    }
}

/// Runs one invocation, writing results to `out` and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            if out.write_all(output.body.as_bytes()).is_err() {
                return EXIT_VERIFY_FAILED;
            }
            if output.code != EXIT_OK {
                if let Some(line) = output.body.lines().find(|l| l.starts_with("FAIL")) {
                    let _ = writeln!(err, "{line}");
                }
            }
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("shadowstates").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn poly_examples() {
        assert_eq!(call(&["poly", "twist-knot", "2", "--format", "csv"]).1, "0,5,8,3\n");
        assert_eq!(call(&["poly", "twist-loop", "0"]).1, "0,1\n");
        assert_eq!(call(&["poly", "foil", "5"]).1, "0,5,11,10,5,1\n");
        assert_eq!(call(&["poly", "figure-eight", "--method", "census"]).1, "0,5,8,3\n");
        assert_eq!(call(&["poly", "pretzel", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["poly", "foil", "2", "--method", "magic"]).0, EXIT_USAGE);
        assert_eq!(call(&["poly", "twist-knot", "2", "--method", "recurrence"]).0, EXIT_USAGE);
        assert_eq!(call(&["poly", "foil"]).0, EXIT_USAGE);
    }

    #[test]
    fn states_examples() {
        assert_eq!(
            call(&["states", "twist-knot", "1", "--components", "2"]).1,
            "000,011,101,110\n"
        );
        assert_eq!(call(&["states", "twist-loop", "2", "--components", "2"]).1, "01,10\n");
        let (code, text, _) = call(&["states", "figure-eight"]);
        assert_eq!(code, 0);
        let sizes: Vec<&str> = text.lines().map(|l| l.split(':').next().unwrap()).collect();
        assert_eq!(sizes, ["1 (5)", "2 (8)", "3 (3)"]);
        assert_eq!(call(&["states", "twist-loop", "30"]).0, EXIT_CAP);
    }

    #[test]
    fn words_examples() {
        assert_eq!(call(&["words", "F2", "2"]).1, "00,11\n");
        assert_eq!(call(&["words", "P", "3"]).1.trim().split(',').count(), 8);
        assert_eq!(call(&["words", "Tau2", "2"]).1.trim().split(',').count(), 8);
        assert_eq!(call(&["words", "F2", "0"]).1, "ε\n");
        assert_eq!(call(&["words", "T2", "0"]).1, "\n");
        assert_eq!(call(&["words", "T2", "3", "--method", "psi"]).0, EXIT_USAGE);
        assert_eq!(call(&["words", "P", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(call(&["bijection", "3", "--map", "0011"]).1, "00101\n");
        assert_eq!(call(&["bijection", "8", "--inverse", "1110111111"]).1, "110000000\n");
        let (code, _, err) = call(&["bijection", "3", "--map", "0101"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("bitonic"));
        assert_eq!(call(&["bijection", "3", "--map", "001"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["bijection", "2", "--inverse", "0000"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["bijection", "5"]).1.lines().nth(2), Some("bijection: true"));
        assert!(call(&["bijection", "5", "--table"]).1.starts_with("P^01"));
    }

    #[test]
    fn rosette_examples() {
        assert_eq!(call(&["rosette", "6", "--radius", "1.5"]).1, "regions: 32\n");
        assert_eq!(call(&["rosette", "1"]).1, "regions: 2\n");
        assert_eq!(call(&["rosette", "3", "--codes"]).1.lines().count(), 9);
        assert_eq!(call(&["rosette", "3", "--radius", "1.0"]).0, EXIT_USAGE);
        assert_eq!(call(&["rosette", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_base_cases() {
        let (code, text, _) = call(&["verify", "--max-n", "0"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.lines().all(|l| l.starts_with("PASS")));
    }

    #[test]
    fn json_is_sorted_and_stable() {
        let args = ["poly", "foil", "3", "--format", "json"];
        let (_, a, _) = call(&args);
        assert_eq!(a, call(&args).1);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["command"], "poly");
        assert_eq!(v["result"]["coefficients"], json!([0, 3, 4, 1]));
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "params", "result"]);
    }
}
