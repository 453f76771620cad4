//! Command dispatch. Every command prints human text, or JSON with `--json`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use oreq::criteria::{corpus_run, default_corpus, evaluate, evaluate_selected, CorpusSummary, CriteriaReport, Status};
use oreq::finloc::{ore_denominator_check, ore_localize};
use oreq::finring::{build_ring, ElementSet, RingSpec, TableRing};
use oreq::i1::{act_kx, normalize, I1Element, KxPoly};
use oreq::ore::{localize_i1, project_a1d, reexpress_with_regular_denominator, SkewFraction};
use oreq::regularity::{self, is_gamma, is_left_regular, ore_solve, regularity_degree, regularize};
use oreq::{Error, Guards};
use serde_json::{json, Value};

use crate::parse::{expr_to_x_poly, parse_expr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Success = 0,
    /// A theorem check or an output contract failed.
    Falsified = 1,
    Input = 2,
    /// A guard or budget was exceeded.
    Resource = 3,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Resource(String),
    Falsified(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<crate::parse::ParseError> for Failure {
    fn from(e: crate::parse::ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

/// Printed output plus whether a falsification was found.
struct Output {
    human: String,
    json: Value,
    falsified: bool,
}

impl Output {
    fn ok(human: impl Into<String>, json: Value) -> Self {
        Output { human: human.into(), json, falsified: false }
    }
}

#[derive(Parser, Debug)]
#[command(name = "oreq", version, about = "Integro-differential operators and finite-ring quotient criteria")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on elements of I₁.
    #[command(subcommand)]
    I1(I1Command),
    /// Left fractions in the quotient skew field.
    #[command(subcommand)]
    Frac(FracCommand),
    /// Finite rings given by tables.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Criteria runs over collections of rings.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand, Debug)]
enum I1Command {
    /// Canonical form.
    Normalize { expr: String },
    /// Product of two elements.
    Mul { left: String, right: String },
    /// The involution swapping ∂ and ∫.
    Star { expr: String },
    /// Action on K[x].
    Act {
        expr: String,
        #[arg(long)]
        poly: String,
    },
    /// Left or right regularity.
    Regular {
        expr: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Regularity degree of an element without ∂ part and with nonzero H part.
    Degree { expr: String },
    /// Least i with ∂^i a left regular.
    Regularize { expr: String },
    /// Image in the localized Weyl algebra modulo F.
    Project { expr: String },
    /// Solve c′ r = r′ c with c′ left regular, for left regular c.
    Oresolve { c: String, r: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
enum FracCommand {
    /// The fraction ψ(DEN)⁻¹ ψ(NUM), re-expressed with a left regular denominator.
    Eval { den: String, num: String },
}

#[derive(Subcommand, Debug)]
enum RingCommand {
    /// Build a ring from a spec such as `Z4`, `gf(4)` or `triangular(F2,2)`.
    Make {
        spec: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Evaluate the quotient criteria.
    Check(CheckArgs),
    /// Localize at a left denominator set.
    Localize {
        file: PathBuf,
        /// Comma separated element indices.
        #[arg(long)]
        set: String,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    file: PathBuf,
    /// Comma separated theorem names; all when omitted.
    #[arg(long, value_delimiter = ',')]
    theorems: Option<Vec<String>>,
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Evaluate every ring; the default corpus when no directory is given.
    Run {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out`. Diagnostics go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Input } else { ExitCode::Success };
            let _ = e.print();
            return code;
        }
    };
    let guards = match Guards::from_env() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::Input;
        }
    };
    let result = dispatch(cli.command, &guards);
    match result {
        Ok(output) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&output.json).expect("json values serialize")
            } else {
                output.human
            };
            let _ = writeln!(out, "{}", text.trim_end());
            if output.falsified {
                ExitCode::Falsified
            } else {
                ExitCode::Success
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::Input
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::Resource
        }
        Err(Failure::Falsified(msg)) => {
            eprintln!("contract violation: {msg}");
            ExitCode::Falsified
        }
    }
}

fn dispatch(command: Command, guards: &Guards) -> Outcome {
    match command {
        Command::I1(c) => i1_command(c, guards),
        Command::Frac(FracCommand::Eval { den, num }) => frac_eval(&den, &num, guards),
        Command::Ring(RingCommand::Make { spec, output }) => ring_make(&spec, &output, guards),
        Command::Ring(RingCommand::Check(args)) => ring_check(&args, guards),
        Command::Ring(RingCommand::Localize { file, set }) => ring_localize(&file, &set, guards),
        Command::Corpus(CorpusCommand::Run { dir }) => corpus(dir.as_deref(), guards),
    }
}

fn element(text: &str, guards: &Guards) -> Result<I1Element, Failure> {
    Ok(normalize(&parse_expr(text)?, guards.findex)?)
}

fn i1_command(command: I1Command, guards: &Guards) -> Outcome {
    match command {
        I1Command::Normalize { expr } => {
            let a = element(&expr, guards)?;
            Ok(Output::ok(a.to_string(), json!({ "input": expr, "normal_form": a.to_string() })))
        }
        I1Command::Mul { left, right } => {
            let p = element(&left, guards)?.checked_mul(&element(&right, guards)?, guards.findex)?;
            Ok(Output::ok(p.to_string(), json!({ "product": p.to_string() })))
        }
        I1Command::Star { expr } => {
            let s = element(&expr, guards)?.star();
            Ok(Output::ok(s.to_string(), json!({ "star": s.to_string() })))
        }
        I1Command::Act { expr, poly } => {
            let a = element(&expr, guards)?;
            let p = expr_to_x_poly(&parse_expr(&poly)?).map_err(Failure::Input)?;
            let image = act_kx(&a, &KxPoly(p));
            Ok(Output::ok(image.to_string(), json!({ "image": image.to_string() })))
        }
        I1Command::Regular { expr, side } => {
            let a = element(&expr, guards)?;
            let side = match side {
                SideArg::Left => regularity::Side::Left,
                SideArg::Right => regularity::Side::Right,
            };
            let v = regularity::regularity(&a, side)?;
            let name = match side {
                regularity::Side::Left => "left",
                regularity::Side::Right => "right",
            };
            let witness: Option<Vec<String>> =
                v.kernel_witness.as_ref().map(|w| w.iter().map(ToString::to_string).collect());
            let mut human = format!("{name}-regular: {}", v.regular);
            if let Some(form) = &v.decomposition {
                human.push_str(&format!("\n∂-power m = {}, degree d(γ) = {}", form.m, form.d));
            }
            let json = json!({
                "side": name,
                "regular": v.regular,
                "reason": format!("{:?}", v.reason),
                "m": v.decomposition.as_ref().map(|f| f.m),
                "degree": v.decomposition.as_ref().map(|f| f.d),
                "kernel_witness": witness,
            });
            Ok(Output::ok(human, json))
        }
        I1Command::Degree { expr } => {
            let a = element(&expr, guards)?;
            if !is_gamma(&a) {
                return Err(Failure::Input(format!(
                    "'{a}' needs no ∂ part and a nonzero polynomial part in H"
                )));
            }
            let d = regularity_degree(&a)?;
            Ok(Output::ok(d.to_string(), json!({ "degree": d })))
        }
        I1Command::Regularize { expr } => {
            let a = element(&expr, guards)?;
            let i = regularize(&a)?;
            let di = I1Element::d_pow(i).checked_mul(&a, guards.findex)?;
            if !is_left_regular(&di)? {
                return Err(Failure::Falsified(format!("∂^{i}·a is not left regular")));
            }
            Ok(Output::ok(
                format!("{i}\n∂^{i}·a = {di}"),
                json!({ "power": i, "regular_element": di.to_string() }),
            ))
        }
        I1Command::Project { expr } => {
            let p = project_a1d(&element(&expr, guards)?);
            Ok(Output::ok(p.to_string(), json!({ "projection": p.to_string() })))
        }
        I1Command::Oresolve { c, r } => {
            let (c, r) = (element(&c, guards)?, element(&r, guards)?);
            let (c2, r2) = ore_solve(&c, &r)?;
            let lhs = c2.checked_mul(&r, guards.findex)?;
            let rhs = r2.checked_mul(&c, guards.findex)?;
            if lhs != rhs {
                return Err(Failure::Falsified(format!("c′r = {lhs} but r′c = {rhs}")));
            }
            if !is_left_regular(&c2)? {
                return Err(Failure::Falsified(format!("c′ = {c2} is not left regular")));
            }
            Ok(Output::ok(
                format!("c′ = {c2}\nr′ = {r2}"),
                json!({ "c_prime": c2.to_string(), "r_prime": r2.to_string(), "verified": true }),
            ))
        }
    }
}

fn frac_eval(den: &str, num: &str, guards: &Guards) -> Outcome {
    let (d, n) = (element(den, guards)?, element(num, guards)?);
    let f: SkewFraction = localize_i1(&d).inv()?.mul(&localize_i1(&n))?;
    let (c, r) = reexpress_with_regular_denominator(&f)?;
    let back = localize_i1(&c).inv()?.mul(&localize_i1(&r))?;
    if !back.equals(&f)? || !is_left_regular(&c)? {
        return Err(Failure::Falsified(format!("re-expression ({c}, {r}) does not represent {f}")));
    }
    Ok(Output::ok(
        format!("{f}\nregular denominator: ({c})^-1 * ({r})"),
        json!({ "fraction": f.to_string(), "regular_denominator": c.to_string(), "numerator": r.to_string() }),
    ))
}

fn ring_make(spec: &str, output: &Path, guards: &Guards) -> Outcome {
    let ring = build_ring(&RingSpec::parse(spec)?, guards)?;
    ring.save(output)?;
    Ok(Output::ok(
        format!("wrote {} (order {}) to {}", ring.name(), ring.order(), output.display()),
        json!({ "ring": ring.name(), "order": ring.order(), "path": output.display().to_string() }),
    ))
}

fn report_lines(rep: &CriteriaReport) -> String {
    let mut s = format!("ring {} (order {})\n", rep.ring, rep.order);
    for t in &rep.theorems {
        let verdict = match (t.status, t.biconditional_ok) {
            (Status::Skipped, _) => "skipped",
            (_, Some(true)) => "ok",
            _ => "FALSIFIED",
        };
        let hyps = t.hypotheses.iter().all(|h| h.holds);
        match t.conclusion {
            Some(c) => s.push_str(&format!("  {verdict:<9} {} [hypotheses {hyps}, conclusion {c}]\n", t.name)),
            None => s.push_str(&format!("  {verdict:<9} {} ({})\n", t.name, t.note.as_deref().unwrap_or(""))),
        }
    }
    s
}

fn ring_check(args: &CheckArgs, guards: &Guards) -> Outcome {
    let ring = TableRing::load(&args.file, guards)?;
    let rep = match &args.theorems {
        Some(names) => evaluate_selected(&ring, guards, names)?,
        None => evaluate(&ring, guards)?,
    };
    let falsified = !rep.falsified().is_empty();
    Ok(Output { human: report_lines(&rep), json: serde_json::to_value(&rep).expect("report serializes"), falsified })
}

fn parse_set(ring: &TableRing, text: &str) -> Result<ElementSet, Failure> {
    let mut set = ring.empty_set();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i: usize = item.parse().map_err(|_| Failure::Input(format!("'{item}' is not an element index")))?;
        if i >= ring.order() {
            return Err(Failure::Input(format!("element {i} is outside a ring of order {}", ring.order())));
        }
        set.insert(i);
    }
    Ok(set)
}

fn ring_localize(file: &Path, set: &str, guards: &Guards) -> Outcome {
    let ring = TableRing::load(file, guards)?;
    let s = parse_set(&ring, set)?;
    let rep = ore_denominator_check(&ring, &s);
    if !rep.left_denominator {
        return Err(Failure::Input(format!(
            "{s} is not a left denominator set (left Ore {}, left reversible {})",
            rep.left_ore, rep.left_reversible
        )));
    }
    let loc = ore_localize(&ring, &s)?;
    let iso = loc.iso_to_quotient(&ring).is_some();
    if !iso {
        return Err(Failure::Falsified("localization is not isomorphic to the quotient by ass(S)".into()));
    }
    let human = format!(
        "denominators {}\nass(S) = {}\nlocalization order {}\nimage of R: {:?}\nisomorphic to R/ass(S): {iso}",
        loc.denominators,
        loc.ass,
        loc.carrier.order(),
        loc.hom
    );
    let json = json!({
        "denominators": loc.denominators.to_vec(),
        "ass": loc.ass.to_vec(),
        "order": loc.carrier.order(),
        "hom": loc.hom,
        "isomorphic_to_quotient": iso,
        "carrier": serde_json::to_value(loc.carrier.to_file_data()).expect("ring file serializes"),
    });
    Ok(Output::ok(human, json))
}

fn load_dir(dir: &Path, guards: &Guards) -> Result<Vec<TableRing>, Failure> {
    let entries = std::fs::read_dir(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| TableRing::load(p, guards).map_err(Failure::from)).collect()
}

fn summary_lines(summary: &CorpusSummary) -> String {
    let mut s = String::new();
    for rep in &summary.reports {
        let checked = rep.theorems.iter().filter(|t| t.status == Status::Checked).count();
        let skipped = rep.theorems.len() - checked;
        s.push_str(&format!(
            "{:<16} order {:>3}: {checked} checked, {skipped} skipped, {} falsified\n",
            rep.ring,
            rep.order,
            rep.falsified().len()
        ));
    }
    s.push('\n');
    for (name, tally) in &summary.per_theorem {
        s.push_str(&format!(
            "{name:<52} checked {:>3}  skipped {:>3}  falsified {:>3}\n",
            tally.checked, tally.skipped, tally.falsified
        ));
    }
    s.push_str(&format!("\nrings: {}, falsifications: {}\n", summary.reports.len(), summary.falsifications.len()));
    for (ring, theorem) in &summary.falsifications {
        s.push_str(&format!("FALSIFIED {theorem} on {ring}\n"));
    }
    s
}

fn corpus(dir: Option<&Path>, guards: &Guards) -> Outcome {
    let rings = match dir {
        Some(d) => load_dir(d, guards)?,
        None => default_corpus(guards)?,
    };
    let summary = corpus_run(&rings, guards)?;
    let json = json!({
        "rings": summary.reports.iter().map(|r| r.ring.clone()).collect::<Vec<_>>(),
        "per_theorem": summary.per_theorem,
        "falsifications": summary.falsifications,
    });
    Ok(Output { human: summary_lines(&summary), json, falsified: !summary.ok() })
}
