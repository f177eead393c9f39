//! The `coxtw` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closure::{is_biclosed, parse_biclosed, ClosureMode};
use crate::error::{Error, Result};
use crate::figures::emit_figure;
use crate::group::{format_word, GroupElement, Word};
use crate::order::{check_meet_semilattice, hasse, InversionWitness, SemilatticeReport, TwistedOrder};
use crate::roots::Root;
use crate::selftest::selftest;
use crate::system::CoxeterSystem;
use crate::words::classify_affine;

pub const DEFAULT_MAX_BALL: usize = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "coxtw", version, about = "Twisted weak orders of Coxeter groups")]
struct Cli {
    /// Cartan type such as A2, B3, G2, A~1, C~2 (products joined with `x`)
    #[arg(long = "type", global = true)]
    type_: Option<String>,
    /// File holding a Cartan matrix (and optional `symmetrizer` line)
    #[arg(long, global = true, conflicts_with = "type_")]
    cartan: Option<PathBuf>,
    /// Biclosed set expression
    #[arg(long, global = true, default_value = "empty")]
    biclosed: String,
    /// Ball radius
    #[arg(long, global = true, default_value_t = 3)]
    radius: usize,
    /// Root level bound
    #[arg(long, global = true, default_value_t = 2)]
    level: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots up to the given level
    Roots,
    /// Elements of length at most the radius
    Ball { radius: Option<usize> },
    /// Inversion set of an element
    Invset { w: String },
    /// Twisted length
    Tlen { w: String },
    /// Compare two elements
    Le { x: String, y: String },
    /// A maximal chain from x to y
    Chain { x: String, y: String },
    /// The interval [x, y]
    Interval { x: String, y: String },
    /// Meet (or join) of two elements
    Meet {
        x: String,
        y: String,
        #[arg(long)]
        join: bool,
    },
    /// Hasse diagram on a ball
    Hasse,
    /// Finite / infinite / neither classification of B
    Classify,
    /// Biclosedness near the identity and the meet-semilattice check
    Check,
    /// Reference figures: a1-twist, a2-twist
    Figure { name: String },
    /// Cross-check against brute-force oracles
    Selftest,
}

/// `ball` output; re-parses to the same value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallListing {
    pub system: String,
    pub radius: usize,
    pub elements: Vec<Word>,
}

/// Exit code for an error: 1 for parse errors, 3 for resource limits, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 1,
        Error::Resource(_) => 3,
        _ => 2,
    }
}

fn max_ball() -> usize {
    std::env::var("COXTW_MAX_BALL")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_BALL)
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = dispatch(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Domain(e.to_string())),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "coxtw: {e}");
            exit_code(&e)
        }
    }
}

fn system(cli: &Cli) -> Result<CoxeterSystem> {
    match (&cli.type_, &cli.cartan) {
        (Some(t), _) => CoxeterSystem::from_type(t),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            CoxeterSystem::from_cartan_text(&text)
        }
        (None, None) => Err(Error::Parse("a system is required: pass --type or --cartan".into())),
    }
}

fn capped(radius: usize) -> Result<usize> {
    let cap = max_ball();
    if radius > cap {
        return Err(Error::Resource(format!("radius {radius} exceeds the cap {cap} (set COXTW_MAX_BALL)")));
    }
    Ok(radius)
}

fn no_dot(cli: &Cli) -> Result<()> {
    if cli.format == Format::Dot {
        return Err(Error::Parse("--format dot is only available for hasse and figure".into()));
    }
    Ok(())
}

fn roots_json(roots: &[Root]) -> Value {
    json!(roots.iter().map(Root::coeff_level).collect::<Vec<_>>())
}

fn roots_text(roots: &[Root]) -> String {
    roots.iter().map(|r| format!("{r}\n")).collect()
}

fn words_json(ws: &[GroupElement]) -> Value {
    json!(ws.iter().map(GroupElement::word).collect::<Vec<_>>())
}

fn words_text(sys: &CoxeterSystem, ws: &[GroupElement]) -> String {
    ws.iter().map(|w| format!("{}\n", w.display(sys))).collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> Result<String> {
    if let Command::Figure { name } = &cli.command {
        let (sys, g) = emit_figure(name)?;
        if let Some(t) = &cli.type_ {
            if CoxeterSystem::from_type(t)?.label() != sys.label() {
                return Err(Error::Domain(format!("figure {name} lives in type {}", sys.label())));
            }
        }
        return Ok(match cli.format {
            Format::Dot => g.to_dot(&sys),
            Format::Json => g.to_json() + "\n",
            Format::Text => g.to_text(&sys),
        });
    }

    let sys = system(cli)?;
    let elem = |s: &str| sys.parse_element(s);
    let order = || -> Result<TwistedOrder> { Ok(TwistedOrder::new(&sys, parse_biclosed(&sys, &cli.biclosed)?)) };
    let json = cli.format == Format::Json;

    match &cli.command {
        Command::Figure { .. } => unreachable!("handled above"),
        Command::Roots => {
            no_dot(cli)?;
            let roots = sys.roots_up_to(cli.level);
            Ok(if json { pretty(&roots_json(&roots)) } else { roots_text(&roots) })
        }
        Command::Ball { radius } => {
            no_dot(cli)?;
            let r = capped(radius.unwrap_or(cli.radius))?;
            let ball = sys.ball(r);
            Ok(if json {
                let listing = BallListing {
                    system: sys.label().to_string(),
                    radius: r,
                    elements: ball.iter().map(|w| w.word().to_vec()).collect(),
                };
                serde_json::to_string_pretty(&listing).expect("serializable") + "\n"
            } else {
                words_text(&sys, &ball)
            })
        }
        Command::Invset { w } => {
            no_dot(cli)?;
            let roots = sys.inversion_set(&elem(w)?);
            Ok(if json { pretty(&roots_json(&roots)) } else { roots_text(&roots) })
        }
        Command::Tlen { w } => {
            no_dot(cli)?;
            let t = order()?.tlen(&elem(w)?);
            Ok(if json { pretty(&json!({ "tlen": t })) } else { format!("{t}\n") })
        }
        Command::Le { x, y } => {
            no_dot(cli)?;
            let b = order()?.le(&elem(x)?, &elem(y)?);
            Ok(if json { pretty(&json!({ "le": b })) } else { format!("{b}\n") })
        }
        Command::Chain { x, y } | Command::Interval { x, y } => {
            no_dot(cli)?;
            let o = order()?;
            let (x, y) = (elem(x)?, elem(y)?);
            let ws = if matches!(cli.command, Command::Chain { .. }) { o.chain(&x, &y)? } else { o.interval(&x, &y)? };
            Ok(if json { pretty(&words_json(&ws)) } else { words_text(&sys, &ws) })
        }
        Command::Meet { x, y, join } => {
            no_dot(cli)?;
            let o = if *join { order()?.dual() } else { order()? };
            let (x, y) = (elem(x)?, elem(y)?);
            let (m, exact) = match o.meet(&x, &y) {
                Ok(m) => (m, true),
                Err(Error::Unsupported(_)) => (o.bounded_meet(&x, &y, capped(cli.radius)?)?, false),
                Err(e) => return Err(e),
            };
            Ok(if json {
                pretty(&json!({ "word": m.word(), "exact": exact }))
            } else if exact {
                format!("{}\n", m.display(&sys))
            } else {
                format!("{} (within ball({}))\n", m.display(&sys), cli.radius)
            })
        }
        Command::Hasse => {
            let g = hasse(&order()?, capped(cli.radius)?);
            Ok(match cli.format {
                Format::Dot => g.to_dot(&sys),
                Format::Json => g.to_json() + "\n",
                Format::Text => g.to_text(&sys),
            })
        }
        Command::Classify => {
            no_dot(cli)?;
            let b = parse_biclosed(&sys, &cli.biclosed)?;
            let v = if sys.is_affine() {
                classify_affine(&sys, &b)?.to_json()
            } else {
                match TwistedOrder::new(&sys, b).inversion_witness()? {
                    InversionWitness::Finite(x) => json!({ "kind": "finite", "witness": x.word() }),
                    InversionWitness::Infinite(_) => unreachable!("finite groups have no infinite reduced words"),
                }
            };
            Ok(if json { pretty(&v) } else { classify_text(&sys, &v) })
        }
        Command::Check => {
            no_dot(cli)?;
            let o = order()?;
            let level = if sys.is_affine() { cli.level } else { 0 };
            let ambient = sys.positive_roots_up_to(level);
            let members: Vec<Root> = o.biclosed().members_up_to(&sys, level).into_iter().collect();
            let closed = is_biclosed(&sys, &members, &ambient, ClosureMode::TwoClosure)?;
            let report = check_meet_semilattice(&o, capped(cli.radius)?);
            let v = json!({
                "biclosed_up_to_level": { "level": level, "ok": closed },
                "semilattice": semilattice_json(&sys, &report),
            });
            Ok(if json { pretty(&v) } else { check_text(&sys, level, closed, &report) })
        }
        Command::Selftest => {
            no_dot(cli)?;
            let r = capped(cli.radius)?;
            let sets = selftest(&sys, r)?;
            let clean = sets.iter().all(|(_, rep)| rep.is_clean());
            let text = if json {
                pretty(&json!({
                    "system": sys.label(),
                    "radius": r,
                    "checked": sets.iter().map(|(_, rep)| rep.checked).sum::<usize>(),
                    "mismatches": sets.iter().map(|(_, rep)| rep.mismatches.len()).sum::<usize>(),
                    "sets": sets.iter().map(|(name, rep)| json!({
                        "biclosed": name,
                        "checked": rep.checked,
                        "mismatches": rep.mismatches,
                    })).collect::<Vec<_>>(),
                }))
            } else {
                sets.iter()
                    .map(|(name, rep)| format!("{:<5} {name}: {} checked, {} mismatches\n",
                        if rep.is_clean() { "ok" } else { "FAIL" }, rep.checked, rep.mismatches.len()))
                    .collect()
            };
            if clean {
                Ok(text)
            } else {
                Err(Error::Order(format!("selftest found mismatches\n{text}")))
            }
        }
    }
}

fn classify_text(sys: &CoxeterSystem, v: &Value) -> String {
    let kind = v["kind"].as_str().unwrap_or("?");
    let w = &v["witness"];
    let word = |x: &Value| -> String {
        let ws: Vec<usize> = serde_json::from_value(x.clone()).unwrap_or_default();
        format_word(sys, &ws)
    };
    match kind {
        "finite" => format!("finite: B = Φ_x for x = {}\n", word(w)),
        "infinite" => format!("infinite: B = Φ_x for x = {} ({})^∞\n", word(&w["prefix"]), word(&w["period"])),
        _ => format!("neither: B contains {} and {}\n", w[0], w[1]),
    }
}

fn semilattice_json(sys: &CoxeterSystem, r: &SemilatticeReport) -> Value {
    match r {
        SemilatticeReport::Ok { pairs } => json!({ "status": "ok", "pairs": pairs }),
        SemilatticeReport::Counterexample { x, y, bad_pair, reason } => json!({
            "status": "counterexample",
            "x": x.word(),
            "y": y.word(),
            "bad_pair": bad_pair.as_ref().map(|(p, q)| [p.coeff_level(), q.coeff_level()]),
            "reason": reason,
            "display": [x.display(sys), y.display(sys)],
        }),
        SemilatticeReport::Inconclusive { bound, reason } => json!({
            "status": "inconclusive", "bound": bound, "reason": reason,
        }),
    }
}

fn check_text(sys: &CoxeterSystem, level: usize, closed: bool, r: &SemilatticeReport) -> String {
    let head = format!("biclosed up to level {level}: {closed}\n");
    let tail = match r {
        SemilatticeReport::Ok { pairs } => format!("meet semilattice: ok ({pairs} pairs)\n"),
        SemilatticeReport::Counterexample { x, y, reason, .. } => {
            format!("meet semilattice: counterexample {} , {}: {reason}\n", x.display(sys), y.display(sys))
        }
        SemilatticeReport::Inconclusive { bound, reason } => {
            format!("meet semilattice: inconclusive at ball({bound}): {reason}\n")
        }
    };
    head + &tail
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("coxtw").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ball_json_round_trips() {
        let (code, out, _) = call(&["--type", "A2", "ball", "3", "--format", "json"]);
        assert_eq!(code, 0);
        let b: BallListing = serde_json::from_str(&out).unwrap();
        assert_eq!(b.elements.len(), 6);
        assert_eq!(serde_json::to_string_pretty(&b).unwrap() + "\n", out);
    }

    #[test]
    fn classify_full_a1() {
        let (code, out, _) = call(&["--type", "A~1", "classify", "--biclosed", "complement(empty)", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, json!({"kind": "neither", "witness": [[1, 1], [-1, 1]]}));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["--type", "A2", "bogus"]).0, 1);
        assert_eq!(call(&["--type", "Q7", "ball"]).0, 1);
        assert_eq!(call(&["--type", "A~1", "ball", "40"]).0, 3);
        assert_eq!(call(&["--type", "A~1", "chain", "0", "1", "--biclosed", "hat 0::"]).0, 2);
        assert_eq!(call(&["--type", "A2", "tlen", "0", "--biclosed", "explicit [[-1,0]]"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn figure_dot() {
        let (code, out, _) = call(&["--type", "A~1", "figure", "a1-twist", "--format", "dot"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches(" -> ").count(), 5);
        assert_eq!(call(&["--type", "A~2", "figure", "a1-twist"]).0, 2);
    }
}
