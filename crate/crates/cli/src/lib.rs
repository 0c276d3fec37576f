//! Command layer for the `diffalg` binary.
//!
//! [`run`] parses arguments, dispatches, and returns the exit status with the
//! rendered output so it can be driven in-process.
//!
//! Exit statuses: 0 the property holds or the computation finished, 1 the
//! property is refuted (a witness is printed), 2 inconclusive at the caps,
//! 64 usage error, 65 unreadable or ill-formed input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use diffalg::gaction::{diagonal_ideal, g_invariance_check, sigma_apply_named, InvarianceReport};
use diffalg::ideal::{PrimeVerdict, PrimeWitness, TruncatedIdeal, Truncation};
use diffalg::reduction::{compare_autoreduced_sets, diff_remainder, minimal_autoreduced_subset, validate_autoreduced};
use diffalg::rosenfeld::{charset_report, delta_polynomial, ideal_equal_charsets, is_coherent, Caps, ReducedProbe};
use diffalg::text::{parse_poly_file, print_indet, print_op, print_poly};
use diffalg::{Ambient, AutoreducedSet, DiffPoly, Error, GroupSpec};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "diffalg", version, about = "Exact differential algebra over Q")]
pub struct Cli {
    /// Number of commuting derivations.
    #[arg(long, global = true, default_value_t = 1)]
    pub m: usize,
    /// Number of differential variables per group block.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// `trivial`, `cyclic:k`, `sym:k`, `klein`, or a group table file.
    #[arg(long, global = true, default_value = "trivial")]
    pub group: String,
    /// Degree cap D for bounded searches.
    #[arg(long = "degree-cap", global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree_cap: u32,
    /// Derivative-order cap O for bounded searches.
    #[arg(long = "order-cap", global = true, default_value_t = 2)]
    pub order_cap: u32,
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Leader, degree, separant and initial of each polynomial.
    Rank {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Differential remainder of each polynomial by an autoreduced set.
    Reduce {
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Checks that the listed polynomials form an autoreduced set.
    Autoreduced {
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Compares two autoreduced sets in the ranking on sets.
    CompareSets {
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
    },
    /// Coherence of an autoreduced set.
    Coherent {
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Bounded characteristic-set check.
    CharsetCheck {
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Algebraic ideal membership with cofactors.
    Member {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Reduced Gröbner basis of I : h^∞.
    Saturate {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        by: PathBuf,
    },
    /// Equality of the ideals presented by two characteristic sets.
    IdealEq {
        #[arg(long)]
        lambda: PathBuf,
        #[arg(long)]
        gamma: PathBuf,
        /// Compare the plain polynomial ideals instead.
        #[arg(long)]
        algebraic: bool,
    },
    /// Invariance of the ideal under the group action.
    GInvariant {
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Diagonal ideal of a set on the identity block.
    Diagonal {
        #[arg(long)]
        lambda: PathBuf,
    },
    /// Applies σ_g to each polynomial.
    Sigma {
        #[arg(long)]
        element: String,
        #[arg(long)]
        poly: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Rank { .. } => "rank",
            Command::Reduce { .. } => "reduce",
            Command::Autoreduced { .. } => "autoreduced",
            Command::CompareSets { .. } => "compare-sets",
            Command::Coherent { .. } => "coherent",
            Command::CharsetCheck { .. } => "charset-check",
            Command::Member { .. } => "member",
            Command::Saturate { .. } => "saturate",
            Command::IdealEq { .. } => "ideal-eq",
            Command::GInvariant { .. } => "g-invariant",
            Command::Diagonal { .. } => "diagonal",
            Command::Sigma { .. } => "sigma",
        }
    }
}

/// Ring, caps and output mode shared by every subcommand.
#[derive(Clone, Debug)]
pub struct SessionConfig {
    pub ambient: Ambient,
    pub caps: Caps,
    pub machine: bool,
}

impl SessionConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, Failure> {
        let group = load_group(&cli.group)?;
        let ambient = Ambient::new(cli.m, cli.n as usize, group).map_err(|e| Failure::usage(e.to_string()))?;
        Ok(SessionConfig {
            ambient,
            caps: Caps {
                degree: cli.degree_cap,
                order: cli.order_cap,
            },
            machine: cli.machine,
        })
    }
}

fn load_group(spec: &str) -> Result<GroupSpec, Failure> {
    if let Some(g) = GroupSpec::builtin(spec) {
        return g.map_err(|e| Failure::usage(format!("--group {spec}: {e}")));
    }
    let source = std::fs::read_to_string(spec)
        .map_err(|e| Failure::usage(format!("--group {spec}: not a built-in group and unreadable: {e}")))?;
    GroupSpec::parse(&source).map_err(|e| Failure::data(format!("{spec}: {e}")))
}

/// A usage or input error, with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: String) -> Self {
        Failure {
            code: EXIT_USAGE,
            message,
        }
    }

    fn data(message: String) -> Self {
        Failure {
            code: EXIT_DATA,
            message,
        }
    }
}

/// Status, text or JSON-lines output, and diagnostics of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Accumulates text lines and machine records.
struct Report {
    command: &'static str,
    config: SessionConfig,
    text: String,
    records: Vec<Value>,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn record(&mut self, kind: &str, status: &str, truncation: Option<&Truncation>, result: Value) {
        self.records.push(json!({
            "command": self.command,
            "kind": kind,
            "status": status,
            "caps": {"degree": self.config.caps.degree, "order": self.config.caps.order},
            "truncation": truncation.map(|t| vars(&self.config.ambient, t)),
            "result": result,
        }));
    }

    fn finish(mut self, code: i32) -> String {
        if !self.config.machine {
            return self.text;
        }
        self.records.push(json!({
            "command": self.command,
            "kind": "summary",
            "exit": code,
            "ring": {
                "m": self.config.ambient.derivations(),
                "n": self.config.ambient.vars(),
                "group": self.config.ambient.group().names(),
            },
        }));
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(out, "{r}");
        }
        out
    }
}

fn vars(ambient: &Ambient, t: &Truncation) -> Vec<String> {
    t.variables().iter().map(|v| print_indet(ambient, v)).collect()
}

fn polys_json(polys: &[DiffPoly]) -> Vec<String> {
    polys.iter().map(print_poly).collect()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = SessionConfig::from_cli(&cli).and_then(|config| run_command(&cli.command, &config));
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn read_polys(ambient: &Ambient, path: &Path) -> Result<Vec<DiffPoly>, Failure> {
    let source = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_poly_file(ambient, &source).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn read_set(ambient: &Ambient, path: &Path) -> Result<AutoreducedSet, Failure> {
    let polys = read_polys(ambient, path)?;
    validate_autoreduced(ambient, &polys).map_err(|e| Failure::data(format!("{}: {e}", path.display())))
}

fn lib(e: Error) -> Failure {
    Failure::data(e.to_string())
}

/// Search bound for saturation exponent certificates.
const MAX_SATURATION_EXPONENT: u32 = 256;

/// Runs one subcommand; returns its exit status and rendered output.
pub fn run_command(command: &Command, config: &SessionConfig) -> Result<(i32, String), Failure> {
    let mut report = Report {
        command: command.name(),
        config: config.clone(),
        text: String::new(),
        records: Vec::new(),
    };
    let a = &config.ambient;
    let code = match command {
        Command::Rank { poly } => rank(&mut report, &read_polys(a, poly)?)?,
        Command::Reduce { lambda, poly } => reduce(&mut report, &read_set(a, lambda)?, &read_polys(a, poly)?)?,
        Command::Autoreduced { lambda } => autoreduced(&mut report, &read_polys(a, lambda)?),
        Command::CompareSets { lambda, gamma } => {
            let (l, g) = (read_set(a, lambda)?, read_set(a, gamma)?);
            let ord = compare_autoreduced_sets(&l, &g).map_err(lib)?;
            let word = match ord {
                std::cmp::Ordering::Less => "lower",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "higher",
            };
            report.line(format!("lambda is {word} than gamma"));
            report.record("comparison", "done", None, json!({ "order": word }));
            EXIT_HOLDS
        }
        Command::Coherent { lambda } => coherent(&mut report, &read_set(a, lambda)?)?,
        Command::CharsetCheck { lambda } => charset(&mut report, &read_polys(a, lambda)?)?,
        Command::Member { ideal, poly } => member(&mut report, &read_polys(a, ideal)?, &read_polys(a, poly)?)?,
        Command::Saturate { ideal, by } => saturate(&mut report, &read_polys(a, ideal)?, &read_polys(a, by)?)?,
        Command::IdealEq {
            lambda,
            gamma,
            algebraic,
        } => {
            if *algebraic {
                ideal_eq_algebraic(&mut report, &read_polys(a, lambda)?, &read_polys(a, gamma)?)?
            } else {
                ideal_eq(&mut report, &read_set(a, lambda)?, &read_set(a, gamma)?)?
            }
        }
        Command::GInvariant { lambda } => {
            let set = read_set(a, lambda)?;
            let inv = g_invariance_check(&set, Some(config.caps)).map_err(lib)?;
            invariance(&mut report, &inv)
        }
        Command::Diagonal { lambda } => diagonal(&mut report, &read_polys(a, lambda)?)?,
        Command::Sigma { element, poly } => {
            a.group().index_of(element).map_err(|e| Failure::usage(e.to_string()))?;
            for f in read_polys(a, poly)? {
                let g = sigma_apply_named(element, &f).map_err(lib)?;
                report.line(print_poly(&g));
                report.record("image", "done", None, json!({"input": print_poly(&f), "image": print_poly(&g)}));
            }
            EXIT_HOLDS
        }
    };
    Ok((code, report.finish(code)))
}

fn rank(report: &mut Report, polys: &[DiffPoly]) -> Result<i32, Failure> {
    for f in polys {
        let a = f.ambient();
        match f.rank() {
            Ok(r) => {
                let sep = f.separant().map_err(lib)?;
                let init = f.initial().map_err(lib)?;
                report.line(format!("{}:", print_poly(f)));
                report.line(format!("  leader: {}", print_indet(a, &r.leader)));
                report.line(format!("  degree: {}", r.degree));
                report.line(format!("  separant: {}", print_poly(&sep)));
                report.line(format!("  initial: {}", print_poly(&init)));
                report.record(
                    "rank",
                    "done",
                    None,
                    json!({
                        "poly": print_poly(f),
                        "leader": print_indet(a, &r.leader),
                        "degree": r.degree,
                        "separant": print_poly(&sep),
                        "initial": print_poly(&init),
                    }),
                );
            }
            Err(_) => {
                report.line(format!("{}: constant, no leader", print_poly(f)));
                report.record("rank", "done", None, json!({"poly": print_poly(f), "leader": null}));
            }
        }
    }
    Ok(EXIT_HOLDS)
}

fn reduce(report: &mut Report, set: &AutoreducedSet, polys: &[DiffPoly]) -> Result<i32, Failure> {
    for f in polys {
        let cert = diff_remainder(f, set).map_err(lib)?;
        debug_assert!(cert.verify(f, set));
        report.line(format!("{}:", print_poly(f)));
        report.line(format!("  remainder: {}", print_poly(&cert.remainder)));
        report.line(format!("  exponent: {}", cert.exponent));
        if !cert.is_h_power() {
            report.line(format!(
                "  multiplier: separant exponents {:?}, initial exponents {:?}",
                cert.separant_exponents, cert.initial_exponents
            ));
        }
        let mut cofactors = Vec::new();
        for c in &cert.cofactors {
            report.line(format!(
                "  cofactor of {} on lambda[{}]: {}",
                print_op(&c.op),
                c.index + 1,
                print_poly(&c.coefficient)
            ));
            cofactors.push(json!({
                "index": c.index + 1,
                "op": print_op(&c.op),
                "coefficient": print_poly(&c.coefficient),
            }));
        }
        report.record(
            "remainder",
            "done",
            None,
            json!({
                "poly": print_poly(f),
                "remainder": print_poly(&cert.remainder),
                "exponent": cert.exponent,
                "h_power": cert.is_h_power(),
                "separant_exponents": cert.separant_exponents,
                "initial_exponents": cert.initial_exponents,
                "cofactors": cofactors,
            }),
        );
    }
    Ok(EXIT_HOLDS)
}

fn autoreduced(report: &mut Report, polys: &[DiffPoly]) -> i32 {
    let Some(first) = polys.first() else {
        report.line("autoreduced (empty set)");
        report.record("autoreduced", "holds", None, json!({"elements": []}));
        return EXIT_HOLDS;
    };
    match validate_autoreduced(first.ambient(), polys) {
        Ok(set) => {
            report.line("autoreduced");
            for f in set.elements() {
                report.line(format!("  {}", print_poly(f)));
            }
            report.record("autoreduced", "holds", None, json!({"elements": polys_json(set.elements())}));
            EXIT_HOLDS
        }
        Err(e) => {
            report.line(format!("not autoreduced: {}", violation_text(&e)));
            report.record("autoreduced", "refuted", None, json!({"violation": violation_text(&e)}));
            EXIT_REFUTED
        }
    }
}

fn violation_text(e: &Error) -> String {
    match e {
        Error::NotAutoreduced(v) => v.to_string(),
        other => other.to_string(),
    }
}

fn coherent(report: &mut Report, set: &AutoreducedSet) -> Result<i32, Failure> {
    let r = is_coherent(set).map_err(lib)?;
    let a = set.ambient();
    match &r.witness {
        None => {
            report.line(format!("coherent ({} pairs checked)", r.pairs_checked));
            report.record("coherence", "holds", None, json!({"pairs_checked": r.pairs_checked}));
            Ok(EXIT_HOLDS)
        }
        Some(w) => {
            debug_assert_eq!(w.delta, delta_polynomial(set, &w.pair));
            report.line("not coherent");
            report.line(format!(
                "  pair: {} and {}",
                print_poly(&set.elements()[w.pair.i]),
                print_poly(&set.elements()[w.pair.j])
            ));
            report.line(format!("  common derivative: {}", print_indet(a, &w.pair.u)));
            report.line(format!("  delta polynomial: {}", print_poly(&w.delta)));
            report.line(format!(
                "  normal form modulo saturated lower ideal: {}",
                print_poly(&w.saturation.normal_form(&w.delta).map_err(lib)?)
            ));
            report.record(
                "coherence",
                "refuted",
                Some(w.saturation.truncation()),
                json!({
                    "pairs_checked": r.pairs_checked,
                    "pair": [print_poly(&set.elements()[w.pair.i]), print_poly(&set.elements()[w.pair.j])],
                    "common_derivative": print_indet(a, &w.pair.u),
                    "xi": print_op(&w.pair.xi),
                    "eta": print_op(&w.pair.eta),
                    "delta": print_poly(&w.delta),
                    "saturation_basis": polys_json(&w.saturation.groebner_basis()),
                }),
            );
            Ok(EXIT_REFUTED)
        }
    }
}

fn prime_json(v: &PrimeVerdict) -> (String, Value) {
    match v {
        PrimeVerdict::NotPrime(PrimeWitness::UnitIdeal) => ("unit ideal".into(), json!({"verdict": "unit_ideal"})),
        PrimeVerdict::NotPrime(PrimeWitness::ZeroDivisors { f, g }) => (
            format!("zero divisors ({}) * ({})", print_poly(f), print_poly(g)),
            json!({"verdict": "not_prime", "f": print_poly(f), "g": print_poly(g)}),
        ),
        PrimeVerdict::NoViolationUpTo(d) => (
            format!("no violation up to degree {d}"),
            json!({"verdict": "no_violation_up_to", "degree": d}),
        ),
    }
}

fn charset(report: &mut Report, polys: &[DiffPoly]) -> Result<i32, Failure> {
    let a = report.config.ambient.clone();
    let r = charset_report(&a, polys, report.config.caps).map_err(lib)?;
    let mut result = serde_json::Map::new();
    match &r.autoreduced {
        Ok(_) => {
            report.line("autoreduced: yes");
            result.insert("autoreduced".into(), json!(true));
        }
        Err(v) => {
            report.line(format!("autoreduced: no ({v})"));
            result.insert("autoreduced".into(), json!(false));
            result.insert("violation".into(), json!(v.to_string()));
        }
    }
    if let Some(c) = &r.coherence {
        match &c.witness {
            None => report.line("coherent: yes"),
            Some(w) => report.line(format!(
                "coherent: no (delta polynomial {} at {})",
                print_poly(&w.delta),
                print_indet(&a, &w.pair.u)
            )),
        }
        result.insert("coherent".into(), json!(c.is_coherent()));
        if let Some(w) = &c.witness {
            result.insert("delta".into(), json!(print_poly(&w.delta)));
        }
    }
    if let Some(p) = &r.reduced_probe {
        match p {
            ReducedProbe::Found(f) => {
                report.line(format!("reduced element: {}", print_poly(f)));
                result.insert("reduced_element".into(), json!(print_poly(f)));
            }
            ReducedProbe::NoneUpTo(c) => {
                report.line(format!("reduced element: none up to degree {} and order {}", c.degree, c.order));
                result.insert("reduced_element".into(), Value::Null);
            }
        }
    }
    if let Some(p) = &r.prime_probe {
        let (text, value) = prime_json(p);
        report.line(format!("prime probe: {text}"));
        result.insert("prime_probe".into(), value);
    }
    let (code, status) = if r.refuted() {
        report.line("verdict: refuted");
        (EXIT_REFUTED, "refuted")
    } else {
        report.line("verdict: no violation found up to the caps (not a proof)");
        (EXIT_INCONCLUSIVE, "inconclusive")
    };
    report.record("charset", status, r.truncation.as_ref(), Value::Object(result));
    Ok(code)
}

fn joint_truncation(ambient: &Ambient, polys: &[DiffPoly]) -> Result<Truncation, Failure> {
    Truncation::spanning(ambient, polys).map_err(lib)
}

fn member(report: &mut Report, gens: &[DiffPoly], polys: &[DiffPoly]) -> Result<i32, Failure> {
    let a = report.config.ambient.clone();
    let all: Vec<DiffPoly> = gens.iter().chain(polys).cloned().collect();
    let t = joint_truncation(&a, &all)?;
    let ideal = TruncatedIdeal::new(&t, gens.to_vec()).map_err(lib)?;
    let mut code = EXIT_HOLDS;
    for f in polys {
        match ideal.member(f).map_err(lib)? {
            Some(cert) => {
                debug_assert!(cert.verify(f, &ideal));
                report.line(format!("{}: member", print_poly(f)));
                for (k, c) in cert.cofactors.iter().enumerate() {
                    if !c.is_zero() {
                        report.line(format!("  cofactor on generator {}: {}", k + 1, print_poly(c)));
                    }
                }
                report.record(
                    "membership",
                    "holds",
                    Some(&t),
                    json!({"poly": print_poly(f), "member": true, "cofactors": polys_json(&cert.cofactors)}),
                );
            }
            None => {
                code = EXIT_REFUTED;
                let nf = ideal.normal_form(f).map_err(lib)?;
                report.line(format!("{}: not a member (normal form {})", print_poly(f), print_poly(&nf)));
                report.record(
                    "membership",
                    "refuted",
                    Some(&t),
                    json!({"poly": print_poly(f), "member": false, "normal_form": print_poly(&nf)}),
                );
            }
        }
    }
    Ok(code)
}

fn saturate(report: &mut Report, gens: &[DiffPoly], by: &[DiffPoly]) -> Result<i32, Failure> {
    let a = report.config.ambient.clone();
    let [h] = by else {
        return Err(Failure::data(format!("--by must hold exactly one polynomial, found {}", by.len())));
    };
    let mut all = gens.to_vec();
    all.push(h.clone());
    let t = joint_truncation(&a, &all)?;
    let ideal = TruncatedIdeal::new(&t, gens.to_vec()).map_err(lib)?;
    let sat = ideal.saturate(h).map_err(lib)?;
    let basis = sat.groebner_basis();
    let mut exponents = Vec::new();
    report.line(format!("saturation by {}:", print_poly(h)));
    for z in &basis {
        // Every basis element carries an exponent certificate.
        let r = ideal
            .saturation_member(z, h, MAX_SATURATION_EXPONENT)
            .map_err(lib)?
            .ok_or_else(|| Failure::data(format!("no exponent up to {MAX_SATURATION_EXPONENT} for {}", print_poly(z))))?;
        report.line(format!("  {}  (exponent {})", print_poly(z), r.exponent));
        exponents.push(r.exponent);
    }
    report.record(
        "saturation",
        "done",
        Some(&t),
        json!({"by": print_poly(h), "basis": polys_json(&basis), "exponents": exponents}),
    );
    Ok(EXIT_HOLDS)
}

fn ideal_eq(report: &mut Report, l: &AutoreducedSet, g: &AutoreducedSet) -> Result<i32, Failure> {
    let r = ideal_equal_charsets(l, g).map_err(lib)?;
    let yes = |b: bool| if b { "yes" } else { "no" };
    report.line(format!("lambda in (gamma):H_gamma^inf: {}", yes(r.lambda_in_gamma)));
    report.line(format!("H_lambda outside (gamma):H_gamma^inf: {}", yes(r.h_lambda_outside_gamma)));
    report.line(format!("gamma in (lambda):H_lambda^inf: {}", yes(r.gamma_in_lambda)));
    report.line(format!("H_gamma outside (lambda):H_lambda^inf: {}", yes(r.h_gamma_outside_lambda)));
    report.line(if r.equal() { "equal" } else { "not equal" });
    report.record(
        "equality",
        if r.equal() { "holds" } else { "refuted" },
        None,
        json!({
            "equal": r.equal(),
            "lambda_in_gamma": r.lambda_in_gamma,
            "h_lambda_outside_gamma": r.h_lambda_outside_gamma,
            "gamma_in_lambda": r.gamma_in_lambda,
            "h_gamma_outside_lambda": r.h_gamma_outside_lambda,
        }),
    );
    Ok(if r.equal() { EXIT_HOLDS } else { EXIT_REFUTED })
}

fn ideal_eq_algebraic(report: &mut Report, l: &[DiffPoly], g: &[DiffPoly]) -> Result<i32, Failure> {
    let a = report.config.ambient.clone();
    let all: Vec<DiffPoly> = l.iter().chain(g).cloned().collect();
    let t = joint_truncation(&a, &all)?;
    let i = TruncatedIdeal::new(&t, l.to_vec()).map_err(lib)?;
    let j = TruncatedIdeal::new(&t, g.to_vec()).map_err(lib)?;
    let eq = i.equals(&j).map_err(lib)?;
    report.line(if eq { "equal" } else { "not equal" });
    report.record(
        "equality",
        if eq { "holds" } else { "refuted" },
        Some(&t),
        json!({
            "equal": eq,
            "lambda_basis": polys_json(&i.groebner_basis()),
            "gamma_basis": polys_json(&j.groebner_basis()),
        }),
    );
    Ok(if eq { EXIT_HOLDS } else { EXIT_REFUTED })
}

fn invariance(report: &mut Report, inv: &InvarianceReport) -> i32 {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut per = Vec::new();
    for e in &inv.elements {
        report.line(format!(
            "{}: {} (lambda in image {}, H outside image {}, image in lambda {}, moved H outside {})",
            e.element,
            if e.holds() { "ok" } else { "fails" },
            yes(e.lambda_in_transported),
            yes(e.h_outside_transported),
            yes(e.transported_in_lambda),
            yes(e.transported_h_outside),
        ));
        per.push(json!({
            "element": e.element,
            "holds": e.holds(),
            "lambda_in_transported": e.lambda_in_transported,
            "h_outside_transported": e.h_outside_transported,
            "transported_in_lambda": e.transported_in_lambda,
            "transported_h_outside": e.transported_h_outside,
        }));
    }
    let ok = inv.invariant();
    report.line(if ok { "invariant" } else { "not invariant" });
    report.record(
        "invariance",
        if ok { "holds" } else { "refuted" },
        None,
        json!({"invariant": ok, "prolongation_order": inv.order, "elements": per}),
    );
    if ok {
        EXIT_HOLDS
    } else {
        EXIT_REFUTED
    }
}

fn diagonal(report: &mut Report, lambda: &[DiffPoly]) -> Result<i32, Failure> {
    let a = report.config.ambient.clone();
    let gens = diagonal_ideal(&a, lambda).map_err(lib)?;
    report.line("generators:");
    for g in &gens {
        report.line(format!("  {}", print_poly(g)));
    }
    let set = minimal_autoreduced_subset(&gens).map_err(lib)?;
    report.line("extracted set:");
    for g in set.elements() {
        report.line(format!("  {}", print_poly(g)));
    }
    report.record(
        "diagonal",
        "done",
        None,
        json!({"generators": polys_json(&gens), "extracted": polys_json(set.elements())}),
    );
    let inv = g_invariance_check(&set, Some(report.config.caps)).map_err(lib)?;
    Ok(invariance(report, &inv))
}
