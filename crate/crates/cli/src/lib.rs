//! `genchar` command-line interface.
//!
//! Exit codes: 0 success, 1 verification or validation failure, 2 element
//! not invertible, 3 parse, schema or usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use genchar_core::algebra::Side;
use genchar_core::catalog::catalog;
use genchar_core::expr::parse_value_list;
use genchar_core::field::Ring;
use genchar_core::generic::{minimal_polynomial_of, GenericError};
use genchar_core::mpoly::MPoly;
use genchar_core::oracle::{cofactor_charpoly, leibniz_det, naive_minpoly, COFACTOR_MAX, LEIBNIZ_MAX};
use genchar_core::random::DEFAULT_HEIGHT;
use genchar_core::spec_json::{load_spec, save_spec, SpecError};
use genchar_core::verify::{verify_algebra, CheckStatus, VerifyOptions, VerifyReport};
use genchar_core::{generic_minimal_polynomial, Algebra, AlgebraKind, CharPoly, Element, FieldValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_NOT_INVERTIBLE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "genchar", version, about = "Generic characteristic polynomials of finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Algebra specification (JSON)
    pub spec: PathBuf,
    /// Print JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ElementArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated coordinates, e.g. "3,1,2,2"
    #[arg(long, short = 'e', allow_hyphen_values = true)]
    pub element: String,
    /// Cross-check against the brute-force oracles on the left regular representation
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the algebra axioms on the basis
    Validate(Common),
    /// Print the generic minimal polynomial and its coefficients
    Generic(Common),
    /// Characteristic polynomial of an element
    Charpoly(ElementArgs),
    /// Determinant of an element
    Det(ElementArgs),
    /// Trace of an element
    Trace(ElementArgs),
    /// Minimal polynomial of an element
    Minpoly(ElementArgs),
    /// Inverse of an element
    Inverse(ElementArgs),
    /// Whether an element is nilpotent
    Nilpotent(ElementArgs),
    /// Run the randomized identity suite
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on random numerators and denominators
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: u32,
    },
    /// Write every catalog algebra as a JSON spec into a directory
    Export { dir: PathBuf },
}

/// Text and exit code of one invocation.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn json_text(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
}

fn load(path: &Path) -> Result<Algebra, Outcome> {
    load_spec(path).map_err(|e: SpecError| Outcome::error(EXIT_PARSE, e))
}

fn generic_of(spec: &Algebra) -> Result<CharPoly, Outcome> {
    generic_minimal_polynomial(spec).map_err(|e| Outcome::error(EXIT_FAILED, e))
}

fn parse_element(spec: &Algebra, text: &str) -> Result<Element, Outcome> {
    let coords = parse_value_list(text, spec.field())
        .map_err(|e| Outcome::error(EXIT_PARSE, format!("element: {e}")))?;
    if coords.len() != spec.dim() {
        return Err(Outcome::error(
            EXIT_PARSE,
            format!("element has {} coordinates, algebra has dimension {}", coords.len(), spec.dim()),
        ));
    }
    spec.element(coords).map_err(|e| Outcome::error(EXIT_PARSE, e))
}

fn coords_text(e: &Element) -> String {
    e.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn degree_note(c: &MPoly<FieldValue>) -> String {
    match c.degree_info() {
        Err(_) => "zero".into(),
        Ok(info) if info.is_homogeneous => format!("homogeneous of degree {}", info.total_degree),
        Ok(info) => format!("not homogeneous, total degree {}", info.total_degree),
    }
}

fn cmd_validate(c: &Common) -> Outcome {
    let spec = match load(&c.spec) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let report = spec.validate();
    let lines = report.describe(spec.basis_labels());
    let code = if report.is_valid() { EXIT_OK } else { EXIT_FAILED };
    if c.json {
        return Outcome::with_code(
            code,
            json_text(json!({
                "algebra": spec.name(),
                "kind": spec.kind().to_string(),
                "dim": spec.dim(),
                "valid": report.is_valid(),
                "violations": lines,
            })),
        );
    }
    let mut out = String::new();
    if report.is_valid() {
        out.push_str(&format!("valid {} algebra {} (dim {})\n", spec.kind(), spec.name(), spec.dim()));
    } else {
        out.push_str(&format!(
            "invalid {} algebra {}: {} violation(s)\n",
            spec.kind(),
            spec.name(),
            lines.len()
        ));
        for l in lines {
            out.push_str(&format!("  {l}\n"));
        }
    }
    Outcome::with_code(code, out)
}

fn cmd_generic(c: &Common) -> Outcome {
    let spec = match load(&c.spec) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let g = match generic_of(&spec) {
        Ok(g) => g,
        Err(o) => return o,
    };
    if c.json {
        let coeffs: Vec<Value> = g
            .coeff_polys()
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let info = p.degree_info().ok();
                json!({
                    "index": i + 1,
                    "poly": p.to_string(),
                    "total_degree": info.as_ref().map(|d| d.total_degree),
                    "homogeneous": info.as_ref().is_none_or(|d| d.is_homogeneous),
                })
            })
            .collect();
        return Outcome::ok(json_text(json!({
            "algebra": spec.name(),
            "variables": g.ring().vars(),
            "degree": g.degree(),
            "polynomial": g.render(),
            "coefficients": coeffs,
        })));
    }
    let mut out = format!("{}\n", g.render());
    out.push_str(&format!("degree: {}\n", g.degree()));
    out.push_str(&format!("variables: {}\n", g.ring().vars().join(", ")));
    for (i, p) in g.coeff_polys().iter().enumerate() {
        out.push_str(&format!("c{} = {}  [{}]\n", i + 1, p, degree_note(p)));
    }
    Outcome::ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ElementCommand {
    Charpoly,
    Det,
    Trace,
    Minpoly,
    Inverse,
    Nilpotent,
}

/// Oracle lines and whether the cross-check held.
fn oracle_lines(cmd: ElementCommand, g: &CharPoly, a: &Element) -> Result<(Vec<String>, bool), GenericError> {
    let spec = g.algebra();
    let m = spec.dim();
    let l = a.regular_representation(Side::Left);
    let mut lines = Vec::new();
    let mut ok = true;
    match cmd {
        ElementCommand::Charpoly | ElementCommand::Nilpotent => {
            if m > COFACTOR_MAX {
                lines.push(format!("oracle: skipped (dimension {m} exceeds {COFACTOR_MAX})"));
            } else {
                let reg = cofactor_charpoly(&l).expect("square and small");
                let ch = g.char_poly(a)?;
                ok = ch.divides(&reg).unwrap_or(false);
                lines.push(format!("oracle charpoly(L_a) = {reg}"));
            }
        }
        ElementCommand::Det | ElementCommand::Inverse => {
            if m > LEIBNIZ_MAX {
                lines.push(format!("oracle: skipped (dimension {m} exceeds {LEIBNIZ_MAX})"));
            } else {
                let d = leibniz_det(&l).expect("square and small");
                let det = g.det(a)?;
                ok = d.is_zero() == det.is_zero();
                lines.push(format!("oracle det(L_a) = {d}"));
            }
        }
        ElementCommand::Minpoly => {
            if spec.kind() == AlgebraKind::Jordan {
                lines.push("oracle: skipped (left multiplication is not a homomorphism)".into());
            } else {
                let naive = naive_minpoly(&l).expect("square");
                ok = naive == minimal_polynomial_of(a);
                lines.push(format!("oracle minpoly(L_a) = {naive}"));
            }
        }
        ElementCommand::Trace => {
            lines.push("oracle: not available for trace".into());
        }
    }
    lines.push(format!("oracle check: {}", if ok { "ok" } else { "FAILED" }));
    Ok((lines, ok))
}

fn cmd_element(cmd: ElementCommand, args: &ElementArgs) -> Outcome {
    let spec = match load(&args.common.spec) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let a = match parse_element(&spec, &args.element) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let g = match generic_of(&spec) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let json = args.common.json;
    let name = match cmd {
        ElementCommand::Charpoly => "charpoly",
        ElementCommand::Det => "det",
        ElementCommand::Trace => "trace",
        ElementCommand::Minpoly => "minpoly",
        ElementCommand::Inverse => "inverse",
        ElementCommand::Nilpotent => "nilpotent",
    };
    let result: Result<(String, Value, i32), GenericError> = (|| {
        Ok(match cmd {
            ElementCommand::Charpoly => {
                let p = g.char_poly(&a)?;
                (p.to_string(), json!(p.to_string()), EXIT_OK)
            }
            ElementCommand::Det => {
                let d = g.det(&a)?;
                (d.to_string(), json!(d.to_string()), EXIT_OK)
            }
            ElementCommand::Trace => {
                let t = g.trace(&a)?;
                (t.to_string(), json!(t.to_string()), EXIT_OK)
            }
            ElementCommand::Minpoly => {
                let p = minimal_polynomial_of(&a);
                (p.to_string(), json!(p.to_string()), EXIT_OK)
            }
            ElementCommand::Inverse => match g.inverse(&a) {
                Ok(inv) => {
                    let coords: Vec<String> = inv.coords().iter().map(|c| c.to_string()).collect();
                    (coords_text(&inv), json!(coords), EXIT_OK)
                }
                Err(GenericError::NotInvertible) => ("not invertible".into(), Value::Null, EXIT_NOT_INVERTIBLE),
                Err(e) => return Err(e),
            },
            ElementCommand::Nilpotent => {
                let n = g.is_nilpotent(&a)?;
                (n.to_string(), json!(n), EXIT_OK)
            }
        })
    })();
    let (text, value, mut code) = match result {
        Ok(r) => r,
        Err(e) => return Outcome::error(EXIT_FAILED, e),
    };
    let oracle = if args.oracle {
        match oracle_lines(cmd, &g, &a) {
            Ok((lines, ok)) => {
                if !ok && code == EXIT_OK {
                    code = EXIT_FAILED;
                }
                Some((lines, ok))
            }
            Err(e) => return Outcome::error(EXIT_FAILED, e),
        }
    } else {
        None
    };
    if json {
        let mut obj = json!({
            "algebra": spec.name(),
            "element": a.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "command": name,
            "result": value,
        });
        if cmd == ElementCommand::Inverse && code == EXIT_NOT_INVERTIBLE {
            obj["error"] = json!("not invertible");
        }
        if let Some((lines, ok)) = oracle {
            obj["oracle"] = json!({"lines": lines, "ok": ok});
        }
        return Outcome::with_code(code, json_text(obj));
    }
    let mut out = format!("{text}\n");
    if let Some((lines, _)) = oracle {
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    Outcome::with_code(code, out)
}

fn status_word(s: &CheckStatus) -> &'static str {
    match s {
        CheckStatus::Passed => "PASS",
        CheckStatus::Failed { .. } => "FAIL",
        CheckStatus::Skipped(_) => "SKIP",
        CheckStatus::Error(_) => "ERROR",
    }
}

pub fn render_verify_text(r: &VerifyReport) -> String {
    let mut out = format!(
        "verify {}: {} samples, seed {}, degree {}\n",
        r.algebra,
        r.samples,
        r.seed,
        r.degree.map_or("unknown".to_string(), |d| d.to_string())
    );
    for c in &r.checks {
        out.push_str(&format!("{:<5} {:<25} {}\n", status_word(&c.status), c.name, c.description));
        match &c.status {
            CheckStatus::Failed { sample, witness } => {
                if c.name == "structure" {
                    out.push_str("      violations:\n");
                } else {
                    out.push_str(&format!("      witness (sample {sample}):\n"));
                }
                for w in witness {
                    out.push_str(&format!("        {w}\n"));
                }
            }
            CheckStatus::Skipped(why) => out.push_str(&format!("      {why}\n")),
            CheckStatus::Error(e) => out.push_str(&format!("      {e}\n")),
            CheckStatus::Passed => {}
        }
    }
    let failed = r.checks.iter().filter(|c| c.failed()).count();
    if failed == 0 {
        out.push_str("result: all checks passed\n");
    } else {
        out.push_str(&format!("result: {failed} check(s) failed\n"));
    }
    out
}

fn render_verify_json(r: &VerifyReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let mut v = json!({"name": c.name, "description": c.description, "status": status_word(&c.status)});
            match &c.status {
                CheckStatus::Failed { sample, witness } => {
                    v["sample"] = json!(sample);
                    v["witness"] = json!(witness);
                }
                CheckStatus::Skipped(s) | CheckStatus::Error(s) => v["detail"] = json!(s),
                CheckStatus::Passed => {}
            }
            v
        })
        .collect();
    json!({
        "algebra": r.algebra,
        "samples": r.samples,
        "seed": r.seed,
        "degree": r.degree,
        "passed": r.passed(),
        "checks": checks,
    })
}

fn cmd_verify(c: &Common, samples: u64, seed: u64, height: u32) -> Outcome {
    let spec = match load(&c.spec) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let opts = VerifyOptions {
        samples: samples as usize,
        seed,
        height,
    };
    let report = verify_algebra(&spec, &opts);
    let code = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    let text = if c.json {
        json_text(render_verify_json(&report))
    } else {
        render_verify_text(&report)
    };
    Outcome::with_code(code, text)
}

fn cmd_export(dir: &Path) -> Outcome {
    if let Err(e) = std::fs::create_dir_all(dir) {
        return Outcome::error(EXIT_PARSE, format!("cannot create {}: {e}", dir.display()));
    }
    let mut out = String::new();
    for entry in catalog() {
        let path = dir.join(format!("{}.json", entry.id));
        if let Err(e) = save_spec(&entry.spec, &path) {
            return Outcome::error(EXIT_PARSE, e);
        }
        out.push_str(&format!("{}\n", path.display()));
    }
    Outcome::ok(out)
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate(c) => cmd_validate(c),
        Command::Generic(c) => cmd_generic(c),
        Command::Charpoly(a) => cmd_element(ElementCommand::Charpoly, a),
        Command::Det(a) => cmd_element(ElementCommand::Det, a),
        Command::Trace(a) => cmd_element(ElementCommand::Trace, a),
        Command::Minpoly(a) => cmd_element(ElementCommand::Minpoly, a),
        Command::Inverse(a) => cmd_element(ElementCommand::Inverse, a),
        Command::Nilpotent(a) => cmd_element(ElementCommand::Nilpotent, a),
        Command::Verify {
            common,
            samples,
            seed,
            height,
        } => cmd_verify(common, *samples, *seed, *height),
        Command::Export { dir } => cmd_export(dir),
    }
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_PARSE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

/// Run and write the outcome to the given streams; returns the exit code.
pub fn run_to<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let o = run(args);
    let _ = stdout.write_all(o.stdout.as_bytes());
    let _ = stderr.write_all(o.stderr.as_bytes());
    o.code
}
