//! Command-line front end. Every subcommand emits a machine-readable
//! [`OutputRecord`]; all numbers are serialized exactly, rationals as
//! `"p/q"` strings and surds as `{"sqrt_of": "p/q"}` — never as floats.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::cxc::{
    epsilon_fiber_one_point, epsilon_fiber_two_points, rationality_classify, Condition,
    RationalityVerdict, TwoPointConfig,
};
use crate::exact::{parse_rational, Rational, SqrtQuantity};
use crate::lattice::{ample_necessary, arithmetic_genus, DivisorClass, Genus};
use crate::multipoint::{feasible_pairs, possible_values};
use crate::search::{enumerate_candidates, known_curve_bounds, PointConfig};
use crate::Error;

/// Validation failures exit with this code.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Error,
}

/// One record per invocation (region scans stream rows instead).
#[derive(Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Parser)]
#[command(
    name = "seshadri",
    about = "Exact Seshadri-constant computations on surfaces of general type",
    disable_help_subcommand = true
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Possible values of epsilon(K_X, x_1..x_r) in (0, 1/r)
    ClassifyMultipoint {
        #[arg(long)]
        r: u64,
        /// Also run the exhaustive (d, m) feasibility oracle
        #[arg(long)]
        oracle: bool,
    },
    /// Seshadri constant of a1*F1 + a2*F2 + a3*delta: closed form where
    /// applicable, else fiber bounds plus the rationality verdict
    Epsilon {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        a1: i64,
        #[arg(long, allow_negative_numbers = true)]
        a2: i64,
        #[arg(long, allow_negative_numbers = true)]
        a3: i64,
        /// Point configuration: one | two-general | two-f1 | two-f2
        #[arg(long, default_value = "one")]
        points: String,
    },
    /// Which of the five rationality conditions the class satisfies
    Rationality {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        a1: i64,
        #[arg(long, allow_negative_numbers = true)]
        a2: i64,
        #[arg(long, allow_negative_numbers = true)]
        a3: i64,
    },
    /// Exhaustive candidate-curve search inside a coefficient box
    Search {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        a1: i64,
        #[arg(long, allow_negative_numbers = true)]
        a2: i64,
        #[arg(long, allow_negative_numbers = true)]
        a3: i64,
        #[arg(long)]
        points: usize,
        #[arg(long = "box")]
        box_bound: u32,
        /// Strict upper bound on reported ratios, as p/q
        #[arg(long)]
        threshold: String,
        /// Fiber sharing: general | f1 | f2 (two or more points)
        #[arg(long, default_value = "general")]
        config: String,
        /// Flag one point as lying on the diagonal
        #[arg(long)]
        diagonal: bool,
    },
    /// CSV region scan of the rationality conditions
    ScanRationality {
        #[arg(long)]
        g: i64,
        #[arg(long = "a1-range", allow_hyphen_values = true)]
        a1_range: String,
        #[arg(long = "a2-range", allow_hyphen_values = true)]
        a2_range: String,
        #[arg(long = "a3-range", allow_hyphen_values = true)]
        a3_range: String,
    },
    /// Intersection-lattice utilities
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
}

#[derive(Subcommand)]
enum LatticeOp {
    /// Intersection number of (a1,a2,a3) with (b1,b2,b3)
    Intersect {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        a1: i64,
        #[arg(long, allow_negative_numbers = true)]
        a2: i64,
        #[arg(long, allow_negative_numbers = true)]
        a3: i64,
        #[arg(long, allow_negative_numbers = true)]
        b1: i64,
        #[arg(long, allow_negative_numbers = true)]
        b2: i64,
        #[arg(long, allow_negative_numbers = true)]
        b3: i64,
    },
    /// Self-intersection of (a1,a2,a3)
    Selfint {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        a1: i64,
        #[arg(long, allow_negative_numbers = true)]
        a2: i64,
        #[arg(long, allow_negative_numbers = true)]
        a3: i64,
    },
    /// Arithmetic genus of (a1,a2,a3) by adjunction
    Genus {
        #[arg(long)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        a1: i64,
        #[arg(long, allow_negative_numbers = true)]
        a2: i64,
        #[arg(long, allow_negative_numbers = true)]
        a3: i64,
    },
}

fn rational_value(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn surd_value(s: &SqrtQuantity) -> Value {
    json!({ "sqrt_of": s.radicand().to_string() })
}

fn condition_value(c: &Condition) -> Value {
    match c {
        Condition::Cond4 { k } => json!({ "cond": 4, "k": bigint_value(k) }),
        Condition::Cond5 { l } => json!({ "cond": 5, "l": bigint_value(l) }),
        other => json!({ "cond": other.index() }),
    }
}

fn bigint_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

fn verdict_value(v: &RationalityVerdict) -> Value {
    let conditions: Vec<Value> = v.matched_conditions.iter().map(condition_value).collect();
    let fiber = match &v.submaximal_fiber {
        Some(f) => Value::String(f.to_string()),
        None => Value::Null,
    };
    json!({ "conditions": conditions, "submaximal_fiber": fiber })
}

fn render_plain(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(render_plain).collect::<Vec<_>>().join(", "),
        Value::Object(_) => serde_json::to_string(v).expect("serializable"),
    }
}

fn emit(record: &OutputRecord, format: Format, out: &mut dyn Write) {
    match format {
        Format::Json => {
            let line = serde_json::to_string(record).expect("serializable");
            writeln!(out, "{line}").ok();
        }
        Format::Plain | Format::Csv => {
            if let Some(msg) = &record.message {
                writeln!(out, "error: {msg}").ok();
                return;
            }
            match &record.result {
                Value::Object(map) => {
                    for (k, v) in map {
                        writeln!(out, "{k} = {}", render_plain(v)).ok();
                    }
                }
                other => {
                    writeln!(out, "{}", render_plain(other)).ok();
                }
            }
        }
    }
}

fn inputs_from(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn ok_record(command: &str, inputs: BTreeMap<String, String>, result: Value) -> OutputRecord {
    OutputRecord {
        command: command.to_string(),
        inputs,
        result,
        status: Status::Ok,
        message: None,
    }
}

fn error_record(command: &str, inputs: BTreeMap<String, String>, message: String) -> OutputRecord {
    OutputRecord {
        command: command.to_string(),
        inputs,
        result: Value::Null,
        status: Status::Error,
        message: Some(message),
    }
}

struct RangeSpec {
    lo: i64,
    hi: i64,
}

fn parse_range(s: &str) -> Result<RangeSpec, Error> {
    let err = || Error::Parse {
        what: "range (expected LO:HI)",
        input: s.to_string(),
    };
    let (lo, hi) = s.split_once(':').ok_or_else(err)?;
    let lo: i64 = lo.trim().parse().map_err(|_| err())?;
    let hi: i64 = hi.trim().parse().map_err(|_| err())?;
    if lo > hi {
        return Err(err());
    }
    Ok(RangeSpec { lo, hi })
}

fn point_config(npoints: usize, config: &str, diagonal: bool) -> Result<PointConfig, Error> {
    let (s1, s2) = match config {
        "general" => (1, 1),
        "f1" => (npoints.max(1), 1),
        "f2" => (1, npoints.max(1)),
        _ => {
            return Err(Error::Parse {
                what: "config (expected general | f1 | f2)",
                input: config.to_string(),
            })
        }
    };
    PointConfig::new(npoints, s1, s2, diagonal)
}

/// Runs the CLI against `argv` (including the program name), writing records
/// to `out`. Returns the process exit code.
pub fn run<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                write!(out, "{e}").ok();
                return 0;
            }
            let record = error_record("", BTreeMap::new(), e.to_string());
            emit(&record, Format::Plain, out);
            return EXIT_USAGE;
        }
    };
    let format = cli.format;
    match dispatch(cli.command, format, out) {
        Ok(()) => 0,
        Err((record, code)) => {
            emit(&record, format, out);
            code
        }
    }
}

type Failure = (OutputRecord, i32);

fn genus_of(g: i64, command: &str, inputs: &BTreeMap<String, String>) -> Result<Genus, Failure> {
    Genus::new(g).map_err(|e| {
        (
            error_record(command, inputs.clone(), e.to_string()),
            EXIT_USAGE,
        )
    })
}

fn dispatch(command: Command, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::ClassifyMultipoint { r, oracle } => {
            let inputs = inputs_from(&[("r", r.to_string())]);
            let name = "classify-multipoint";
            let values = possible_values(r)
                .map_err(|e| (error_record(name, inputs.clone(), e.to_string()), EXIT_USAGE))?;
            let mut result = Map::new();
            if oracle {
                let pairs = feasible_pairs(r)
                    .map_err(|e| (error_record(name, inputs.clone(), e.to_string()), EXIT_USAGE))?;
                result.insert(
                    "pairs".to_string(),
                    Value::Array(
                        pairs
                            .iter()
                            .map(|p| json!({ "d": p.d, "m": p.m }))
                            .collect(),
                    ),
                );
            }
            result.insert(
                "values".to_string(),
                Value::Array(values.iter().map(rational_value).collect()),
            );
            emit(&ok_record(name, inputs, Value::Object(result)), format, out);
            Ok(())
        }
        Command::Epsilon { g, a1, a2, a3, points } => {
            let name = "epsilon";
            let inputs = inputs_from(&[
                ("a1", a1.to_string()),
                ("a2", a2.to_string()),
                ("a3", a3.to_string()),
                ("g", g.to_string()),
                ("points", points.clone()),
            ]);
            let fail = |e: Error| (error_record(name, inputs.clone(), e.to_string()), EXIT_USAGE);
            let gg = genus_of(g, name, &inputs)?;
            let two_cfg = match points.as_str() {
                "one" => None,
                "two-general" => Some(TwoPointConfig::General),
                "two-f1" => Some(TwoPointConfig::SameFiberF1),
                "two-f2" => Some(TwoPointConfig::SameFiberF2),
                _ => {
                    return Err(fail(Error::Parse {
                        what: "points (expected one | two-general | two-f1 | two-f2)",
                        input: points.clone(),
                    }))
                }
            };
            let result = if a3 == 0 {
                // fiber-type polarization: exact closed form
                let (a, b) = (BigInt::from(a1), BigInt::from(a2));
                let eps = match two_cfg {
                    None => epsilon_fiber_one_point(&a, &b).map_err(fail)?,
                    Some(cfg) => epsilon_fiber_two_points(&a, &b, cfg).map_err(fail)?,
                };
                rational_value(&eps)
            } else {
                let l = DivisorClass::new(a1, a2, a3);
                let verdict = rationality_classify(&l, &gg).map_err(fail)?;
                let cfg = match two_cfg {
                    None => PointConfig::single(),
                    Some(c) => PointConfig::two(c),
                };
                let bounds = known_curve_bounds(&l, &gg, &cfg).map_err(fail)?;
                let mut bound_map = Map::new();
                for (cls, r) in &bounds {
                    let key = if *cls == DivisorClass::fiber1() {
                        "F1"
                    } else {
                        "F2"
                    };
                    bound_map.insert(key.to_string(), rational_value(r));
                }
                // universal bound epsilon <= sqrt(L^2 / n)
                let n = BigInt::from(cfg.npoints() as u64);
                let max_eps = SqrtQuantity::new(crate::exact::ratio(l.self_int(&gg), n))
                    .map_err(fail)?;
                json!({
                    "rationality": verdict_value(&verdict),
                    "sqrt_bound": surd_value(&max_eps),
                    "upper_bounds": bound_map,
                })
            };
            emit(&ok_record(name, inputs, result), format, out);
            Ok(())
        }
        Command::Rationality { g, a1, a2, a3 } => {
            let name = "rationality";
            let inputs = inputs_from(&[
                ("a1", a1.to_string()),
                ("a2", a2.to_string()),
                ("a3", a3.to_string()),
                ("g", g.to_string()),
            ]);
            let gg = genus_of(g, name, &inputs)?;
            let l = DivisorClass::new(a1, a2, a3);
            let verdict = rationality_classify(&l, &gg)
                .map_err(|e| (error_record(name, inputs.clone(), e.to_string()), EXIT_USAGE))?;
            emit(&ok_record(name, inputs, verdict_value(&verdict)), format, out);
            Ok(())
        }
        Command::Search {
            g,
            a1,
            a2,
            a3,
            points,
            box_bound,
            threshold,
            config,
            diagonal,
        } => {
            let name = "search";
            let inputs = inputs_from(&[
                ("a1", a1.to_string()),
                ("a2", a2.to_string()),
                ("a3", a3.to_string()),
                ("box", box_bound.to_string()),
                ("config", config.clone()),
                ("diagonal", diagonal.to_string()),
                ("g", g.to_string()),
                ("points", points.to_string()),
                ("threshold", threshold.clone()),
            ]);
            let fail = |e: Error| (error_record(name, inputs.clone(), e.to_string()), EXIT_USAGE);
            let gg = genus_of(g, name, &inputs)?;
            let t = parse_rational(&threshold).map_err(fail)?;
            if !t.is_positive() {
                return Err(fail(Error::NonPositive {
                    what: "threshold",
                    value: t.to_integer(),
                }));
            }
            let cfg = point_config(points, &config, diagonal).map_err(fail)?;
            let l = DivisorClass::new(a1, a2, a3);
            let report = enumerate_candidates(&l, &gg, &cfg, box_bound, &t).map_err(fail)?;
            let surviving: Vec<Value> = report
                .surviving
                .iter()
                .map(|(c, r)| {
                    json!({
                        "class": c.cls.to_string(),
                        "mults": c.mults,
                        "ratio": r.to_string(),
                    })
                })
                .collect();
            let known: Vec<Value> = report
                .known
                .iter()
                .map(|(cls, r)| json!({ "class": cls.to_string(), "ratio": r.to_string() }))
                .collect();
            let result = json!({
                "box": report.box_bound,
                "floor": report.floor.to_string(),
                "known": known,
                "surviving": surviving,
                "threshold": report.threshold.to_string(),
            });
            emit(&ok_record(name, inputs, result), format, out);
            Ok(())
        }
        Command::ScanRationality { g, a1_range, a2_range, a3_range } => {
            let name = "scan-rationality";
            let inputs = inputs_from(&[
                ("a1-range", a1_range.clone()),
                ("a2-range", a2_range.clone()),
                ("a3-range", a3_range.clone()),
                ("g", g.to_string()),
            ]);
            let fail = |e: Error| (error_record(name, inputs.clone(), e.to_string()), EXIT_USAGE);
            let gg = genus_of(g, name, &inputs)?;
            let r1 = parse_range(&a1_range).map_err(fail)?;
            let r2 = parse_range(&a2_range).map_err(fail)?;
            let r3 = parse_range(&a3_range).map_err(fail)?;
            scan_rationality(&gg, g, &r1, &r2, &r3, format, out);
            Ok(())
        }
        Command::Lattice { op } => {
            let name = "lattice";
            match op {
                LatticeOp::Intersect { g, a1, a2, a3, b1, b2, b3 } => {
                    let inputs = inputs_from(&[
                        ("a1", a1.to_string()),
                        ("a2", a2.to_string()),
                        ("a3", a3.to_string()),
                        ("b1", b1.to_string()),
                        ("b2", b2.to_string()),
                        ("b3", b3.to_string()),
                        ("g", g.to_string()),
                        ("op", "intersect".to_string()),
                    ]);
                    let gg = genus_of(g, name, &inputs)?;
                    let v = DivisorClass::new(a1, a2, a3)
                        .intersect(&DivisorClass::new(b1, b2, b3), &gg);
                    let result = json!({ "value": v.to_string() });
                    emit(&ok_record(name, inputs, result), format, out);
                }
                LatticeOp::Selfint { g, a1, a2, a3 } => {
                    let inputs = inputs_from(&[
                        ("a1", a1.to_string()),
                        ("a2", a2.to_string()),
                        ("a3", a3.to_string()),
                        ("g", g.to_string()),
                        ("op", "selfint".to_string()),
                    ]);
                    let gg = genus_of(g, name, &inputs)?;
                    let v = DivisorClass::new(a1, a2, a3).self_int(&gg);
                    let result = json!({ "value": v.to_string() });
                    emit(&ok_record(name, inputs, result), format, out);
                }
                LatticeOp::Genus { g, a1, a2, a3 } => {
                    let inputs = inputs_from(&[
                        ("a1", a1.to_string()),
                        ("a2", a2.to_string()),
                        ("a3", a3.to_string()),
                        ("g", g.to_string()),
                        ("op", "genus".to_string()),
                    ]);
                    let gg = genus_of(g, name, &inputs)?;
                    let v = arithmetic_genus(&DivisorClass::new(a1, a2, a3), &gg);
                    let result = json!({ "value": v.to_string() });
                    emit(&ok_record(name, inputs, result), format, out);
                }
            }
            Ok(())
        }
    }
}

/// Streams one CSV row per ample-necessary lattice point, in lexicographic
/// (a1, a2, a3) order; byte-for-byte reproducible across runs.
fn scan_rationality(
    gg: &Genus,
    g: i64,
    r1: &RangeSpec,
    r2: &RangeSpec,
    r3: &RangeSpec,
    format: Format,
    out: &mut dyn Write,
) {
    let header = "g,a1,a2,a3,cond1,cond2,cond3,cond4,cond5,k,l,submaximal_fiber,L2";
    if format != Format::Json {
        writeln!(out, "{header}").ok();
    }
    for a1 in r1.lo..=r1.hi {
        for a2 in r2.lo..=r2.hi {
            for a3 in r3.lo..=r3.hi {
                let l = DivisorClass::new(a1, a2, a3);
                if !ample_necessary(&l, gg) {
                    continue;
                }
                let verdict = rationality_classify(&l, gg).expect("ample checked");
                let mut flags = [false; 5];
                let mut k = String::new();
                let mut lp = String::new();
                for c in &verdict.matched_conditions {
                    flags[(c.index() - 1) as usize] = true;
                    match c {
                        Condition::Cond4 { k: kk } => k = kk.to_string(),
                        Condition::Cond5 { l: ll } => lp = ll.to_string(),
                        _ => {}
                    }
                }
                let fiber = verdict
                    .submaximal_fiber
                    .map(|f| f.to_string())
                    .unwrap_or_default();
                let l2 = l.self_int(gg);
                if format == Format::Json {
                    let row = json!({
                        "L2": l2.to_string(),
                        "a1": a1, "a2": a2, "a3": a3,
                        "cond1": flags[0], "cond2": flags[1], "cond3": flags[2],
                        "cond4": flags[3], "cond5": flags[4],
                        "g": g,
                        "k": k, "l": lp,
                        "submaximal_fiber": fiber,
                    });
                    writeln!(out, "{}", serde_json::to_string(&row).expect("serializable")).ok();
                } else {
                    writeln!(
                        out,
                        "{g},{a1},{a2},{a3},{},{},{},{},{},{k},{lp},{fiber},{l2}",
                        flags[0] as u8,
                        flags[1] as u8,
                        flags[2] as u8,
                        flags[3] as u8,
                        flags[4] as u8,
                    )
                    .ok();
                }
            }
        }
    }
}
