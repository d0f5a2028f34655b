use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Map, Value as J};

use trefoil_core::exactcoeff::{Coeff, CoeffError, Rational};
use trefoil_core::ideal_lab::{
    aideal_gens, classical_common_factor, is_eighth_root, kernel_basis, plane_membership_at,
    skein_membership_at, verify_aideal_gen1, Certificate, IdealError, PlaneOutcome, PlaneSearch,
};
use trefoil_core::syntax::json::{self as sj, JsonElement};
use trefoil_core::syntax::{format_skein, format_torus, format_value, parse_as, parse_value, Family, Value};
use trefoil_core::trefoil_module::{act, pi, Chirality};
use trefoil_core::verify::{summary_json, verify_all};

#[derive(Parser)]
#[command(name = "trefoil", version, about = "Skein module computations for the trefoil")]
struct Cli {
    /// Knot chirality (default: left; verify-all defaults to both).
    #[arg(long, global = true, value_enum)]
    chirality: Option<Hand>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Specialize `t` to this rational, e.g. `-1` or `2/3`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    t_value: Option<String>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Hand {
    Left,
    Right,
}

impl From<Hand> for Chirality {
    fn from(h: Hand) -> Self {
        match h {
            Hand::Left => Chirality::Left,
            Hand::Right => Chirality::Right,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AidealAction {
    Gens,
    Verify,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a product (several --expr are multiplied left to right).
    Mul {
        #[arg(long, required = true, allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Image of a torus skein element in the trefoil module.
    Pi {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Action of a torus skein element on a module element.
    Act {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true, default_value = "y")]
        on: String,
    },
    /// Kernel of pi on the span of (p,q)_T with p <= pmax, qmin <= q <= qmax.
    Kernel {
        #[arg(long)]
        pmax: i64,
        #[arg(long, allow_hyphen_values = true)]
        qmin: i64,
        #[arg(long, allow_hyphen_values = true)]
        qmax: i64,
    },
    /// Ideal membership certificate for a target against a generator file.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long)]
        gens_file: PathBuf,
        #[arg(long, default_value_t = 1)]
        bound_p: i64,
        #[arg(long, default_value_t = 8)]
        bound_q: i64,
    },
    /// A-ideal generators, or the unit linking the first one to tau.
    Aideal {
        #[arg(value_enum)]
        action: AidealAction,
    },
    /// Classical A-polynomial factor from the t = -1 generators.
    Classical,
    /// Replay the acceptance criteria.
    VerifyAll,
}

struct Failure {
    code: u8,
    status: &'static str,
    message: String,
}

impl Failure {
    fn verify(m: impl Into<String>) -> Self {
        Self { code: 1, status: "verification_failed", message: m.into() }
    }
    fn input(m: impl Into<String>) -> Self {
        Self { code: 2, status: "input_error", message: m.into() }
    }
    fn not_found(m: impl Into<String>) -> Self {
        Self { code: 3, status: "not_found", message: m.into() }
    }
    fn illegal(m: impl Into<String>) -> Self {
        Self { code: 4, status: "illegal_specialization", message: m.into() }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::EighthRoot(_) | IdealError::Coeff(CoeffError::ZeroSpecialization | CoeffError::Pole) => {
                Failure::illegal(e.to_string())
            }
            other => Failure::verify(other.to_string()),
        }
    }
}

impl From<CoeffError> for Failure {
    fn from(e: CoeffError) -> Self {
        match e {
            CoeffError::ZeroSpecialization | CoeffError::Pole => Failure::illegal(e.to_string()),
            other => Failure::verify(other.to_string()),
        }
    }
}

struct Run {
    format: Format,
    t_value: Option<Rational>,
    lines: Vec<String>,
    summary: Map<String, J>,
}

impl Run {
    fn emit(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn emit_json(&mut self, v: &J) {
        self.lines.push(v.to_string());
    }

    fn set(&mut self, key: &str, v: J) {
        self.summary.insert(key.to_string(), v);
    }

    /// Nonzero `t`; `forbid_roots` additionally rejects `t^8 = 1`.
    fn t(&self, forbid_roots: bool) -> Result<Option<&Rational>, Failure> {
        match &self.t_value {
            None => Ok(None),
            Some(t0) if t0.is_zero() => Err(Failure::illegal("t = 0: negative powers of t are undefined")),
            Some(t0) if forbid_roots && is_eighth_root(t0) => {
                Err(Failure::illegal(format!("t = {t0} is an eighth root of unity; these generators need t^8 != 1")))
            }
            Some(t0) => Ok(Some(t0)),
        }
    }

    fn show_value(&mut self, v: &Value) {
        match self.format {
            Format::Text => self.emit(format_value(v)),
            Format::Json => self.emit_json(&sj::value_to_json(v)),
        }
    }
}

fn parse(src: &str) -> Result<Value, Failure> {
    parse_value(src).map_err(|e| Failure::input(e.to_string()))
}

fn parse_family(src: &str, f: Family) -> Result<Value, Failure> {
    parse_as(src, f).map_err(|e| Failure::input(e.to_string()))
}

fn specialize(v: Value, t0: Option<&Rational>) -> Result<Value, Failure> {
    let Some(t0) = t0 else { return Ok(v) };
    Ok(match v {
        Value::Skein(s) => Value::Skein(s.specialize(t0)?),
        Value::Torus(f) => Value::Torus(f.specialize_t(t0)?),
        Value::Module(m) => Value::Module(m.specialize(t0)?),
    })
}

fn cmd_mul(run: &mut Run, exprs: &[String]) -> Result<(), Failure> {
    let mut acc: Option<Value> = None;
    for src in exprs {
        let v = parse(src)?;
        acc = Some(match (acc, v) {
            (None, v) => v,
            (Some(Value::Skein(a)), Value::Skein(b)) => Value::Skein(a.mul(&b)),
            (Some(Value::Torus(a)), Value::Torus(b)) => Value::Torus(a.mul(&b)),
            (Some(a), b) => {
                return Err(Failure::input(format!(
                    "cannot multiply {} by {}",
                    a.family().name(),
                    b.family().name()
                )))
            }
        });
    }
    let v = acc.ok_or_else(|| Failure::input("no expression"))?;
    let v = specialize(v, run.t(false)?)?;
    run.set("family", json!(family_key(v.family())));
    run.show_value(&v);
    Ok(())
}

fn cmd_pi(run: &mut Run, c: Chirality, src: &str) -> Result<(), Failure> {
    let Value::Skein(u) = parse_family(src, Family::Skein)? else { unreachable!() };
    let v = specialize(Value::Module(pi(&u, c)), run.t(false)?)?;
    if let Value::Module(m) = &v {
        run.set("zero", json!(m.is_zero()));
    }
    run.show_value(&v);
    Ok(())
}

fn cmd_act(run: &mut Run, c: Chirality, src: &str, on: &str) -> Result<(), Failure> {
    let Value::Skein(u) = parse_family(src, Family::Skein)? else { unreachable!() };
    let Value::Module(v) = parse_family(on, Family::Module)? else { unreachable!() };
    let r = specialize(Value::Module(act(&u, &v, c)), run.t(false)?)?;
    run.show_value(&r);
    Ok(())
}

fn cmd_kernel(run: &mut Run, c: Chirality, pmax: i64, qmin: i64, qmax: i64) -> Result<(), Failure> {
    if pmax < 0 || qmin > qmax {
        return Err(Failure::input("need pmax >= 0 and qmin <= qmax"));
    }
    let t0 = run.t(false)?.cloned();
    let basis = kernel_basis(pmax, qmin, qmax, c, t0.as_ref())?;
    run.set("dimension", json!(basis.len()));
    for (i, v) in basis.iter().enumerate() {
        match run.format {
            Format::Text => run.emit(format!("k{} = {}", i + 1, format_skein(v))),
            Format::Json => run.emit_json(&sj::skein_to_json(v)),
        }
    }
    if basis.is_empty() && run.format == Format::Text {
        run.emit("kernel is zero");
    }
    Ok(())
}

fn show_certificate(run: &mut Run, cert: &Certificate) {
    run.set("bound", json!([cert.bound.0, cert.bound.1]));
    run.set("terms", json!(cert.combination.len()));
    match run.format {
        Format::Json => run.emit_json(&sj::certificate_to_json(cert)),
        Format::Text => {
            run.emit(format!("found at bound ({}, {})", cert.bound.0, cert.bound.1));
            for t in &cert.combination {
                run.emit(format!("  ({}) * {} * g{}", t.coeff, t.multiplier, t.gen));
            }
        }
    }
}

fn cmd_member(run: &mut Run, target: &str, file: &PathBuf, bp: i64, bq: i64) -> Result<(), Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::input(format!("{}: {e}", file.display())))?;
    let gens = sj::elements_from_str(&text).map_err(|e| Failure::input(e.to_string()))?;
    let t0 = run.t(false)?.cloned();
    let target = parse(target)?;
    let cert = match target {
        Value::Skein(s) => {
            let gs = gens
                .into_iter()
                .map(|g| match g {
                    JsonElement::Skein(g) => Ok(g),
                    _ => Err(Failure::input("generator file must hold torus_skein elements for a skein target")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let cert = skein_membership_at(&s.to_ratfunc(), &gs, bp, bq, t0.as_ref())?;
            cert.map(|c| (c.replay_skein(&gs), c))
        }
        Value::Torus(f) => {
            let gs = gens
                .into_iter()
                .map(|g| match g {
                    JsonElement::Torus(g) => Ok(g),
                    _ => Err(Failure::input("generator file must hold qtorus elements for a torus target")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let target = f.map_coeffs(|x| x.to_ratfunc());
            match plane_membership_at(&target, &gs, bp, bq, PlaneSearch::default(), t0.as_ref())? {
                PlaneOutcome::Found(c) => Some((c.replay_plane(&gs), c)),
                PlaneOutcome::NotFound { .. } => None,
            }
        }
        Value::Module(_) => return Err(Failure::input("membership targets are skein or torus elements")),
    };
    match cert {
        None => Err(Failure::not_found(format!("no certificate with bounds ({bp}, {bq})"))),
        Some((ok, cert)) => {
            show_certificate(run, &cert);
            run.set("replays", json!(ok));
            if ok {
                Ok(())
            } else {
                Err(Failure::verify("certificate does not replay"))
            }
        }
    }
}

fn cmd_aideal(run: &mut Run, c: Chirality, action: AidealAction) -> Result<(), Failure> {
    let t0 = run.t(true)?.cloned();
    match action {
        AidealAction::Gens => {
            let gens = aideal_gens(c);
            run.set("count", json!(gens.len()));
            for (g, tag) in gens.plane_elements().iter().zip(&gens.provenance) {
                let poly = match &t0 {
                    Some(t) => g.poly().specialize_t(t)?,
                    None => g.poly().clone(),
                };
                match run.format {
                    Format::Text => run.emit(format!("{tag}: {}", format_torus(&poly))),
                    Format::Json => run.emit_json(&sj::torus_to_json(&poly)),
                }
            }
            Ok(())
        }
        AidealAction::Verify => {
            let (u, k) = verify_aideal_gen1(c)?;
            run.set("unit", json!([u.to_string(), k]));
            run.emit(format!("({u}, {k})"));
            if run.format == Format::Text {
                run.emit(format!("cleared image of tau = {u} * t^{k} * generator 1"));
            }
            Ok(())
        }
    }
}

fn cmd_classical(run: &mut Run, c: Chirality) -> Result<(), Failure> {
    if let Some(t0) = &run.t_value {
        if *t0 != Rational::from_integer((-1).into()) {
            return Err(Failure::illegal("the classical recovery is taken at t = -1"));
        }
    }
    let f = classical_common_factor(c);
    run.set("factor", json!(f.to_string()));
    run.emit(f.to_string());
    Ok(())
}

fn cmd_verify_all(run: &mut Run, cs: &[Chirality]) -> Result<(), Failure> {
    if run.t_value.is_some() {
        return Err(Failure::illegal("verify-all works over symbolic t"));
    }
    let reports = verify_all(cs);
    for r in &reports {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        run.emit(format!("[{:>2}] {tag}  {}", r.id, r.title));
        for d in &r.details {
            run.emit(format!("       {d}"));
        }
    }
    let s = summary_json(&reports);
    for (k, v) in s.as_object().into_iter().flatten() {
        run.set(k, v.clone());
    }
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::verify("some criteria failed"))
    }
}

fn family_key(f: Family) -> &'static str {
    match f {
        Family::Skein => "skein",
        Family::Torus => "torus",
        Family::Module => "module",
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Mul { .. } => "mul",
        Cmd::Pi { .. } => "pi",
        Cmd::Act { .. } => "act",
        Cmd::Kernel { .. } => "kernel",
        Cmd::Member { .. } => "member",
        Cmd::Aideal { .. } => "aideal",
        Cmd::Classical => "classical",
        Cmd::VerifyAll => "verify-all",
    }
}

fn dispatch(cli: &Cli, run: &mut Run) -> Result<(), Failure> {
    let c: Chirality = cli.chirality.map(Into::into).unwrap_or(Chirality::Left);
    match &cli.cmd {
        Cmd::Mul { expr } => cmd_mul(run, expr),
        Cmd::Pi { expr } => cmd_pi(run, c, expr),
        Cmd::Act { expr, on } => cmd_act(run, c, expr, on),
        Cmd::Kernel { pmax, qmin, qmax } => cmd_kernel(run, c, *pmax, *qmin, *qmax),
        Cmd::Member { target, gens_file, bound_p, bound_q } => cmd_member(run, target, gens_file, *bound_p, *bound_q),
        Cmd::Aideal { action } => cmd_aideal(run, c, *action),
        Cmd::Classical => cmd_classical(run, c),
        Cmd::VerifyAll => {
            let cs: Vec<Chirality> = match cli.chirality {
                Some(h) => vec![h.into()],
                None => Chirality::BOTH.to_vec(),
            };
            cmd_verify_all(run, &cs)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut run = Run {
        format: cli.format,
        t_value: None,
        lines: Vec::new(),
        summary: Map::new(),
    };
    let mut result = match &cli.t_value {
        None => Ok(()),
        Some(s) => s
            .trim()
            .parse::<Rational>()
            .map(|t| run.t_value = Some(t))
            .map_err(|_| Failure::input(format!("--t-value: not a rational: {s:?}"))),
    };
    if result.is_ok() {
        result = dispatch(&cli, &mut run);
    }
    let mut out = std::io::stdout().lock();
    for l in &run.lines {
        let _ = writeln!(out, "{l}");
    }
    let (code, status) = match &result {
        Ok(()) => (0u8, "ok"),
        Err(f) => {
            eprintln!("error: {}", f.message);
            (f.code, f.status)
        }
    };
    let mut summary = Map::new();
    summary.insert("command".into(), json!(command_name(&cli.cmd)));
    summary.insert("status".into(), json!(status));
    summary.insert("exit".into(), json!(code));
    if let Some(h) = cli.chirality {
        summary.insert("chirality".into(), json!(Chirality::from(h).name()));
    }
    if let Some(t0) = &run.t_value {
        summary.insert("t_value".into(), json!(t0.to_string()));
    }
    if let Err(f) = &result {
        summary.insert("error".into(), json!(f.message));
    }
    summary.extend(run.summary);
    let _ = writeln!(out, "{}", J::Object(summary));
    ExitCode::from(code)
}
