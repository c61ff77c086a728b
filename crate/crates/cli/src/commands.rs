use crate::config::Config;
use crate::{Cli, Command, Outcome, QuiverArgs};
use clap::Args;
use quiverlab::klr::parse_expression;
use quiverlab::lweight::{enumerate_lp_plus, l_dominance_leq};
use quiverlab::reflect::{check_f_compat, reflected_height};
use quiverlab::repmod::{f_bijection, f_order_report};
use quiverlab::verify::{self, FOrderBounds, KlrBounds, SuiteReport};
use quiverlab::{
    ArQuiver, ArVertex, CartanDatum, HeightFunction, HomTable, KlrAlgebra, KpPoset, LWeight, OrientedQuiver,
    QuiverJson, Suite,
};
use serde::Serialize;
use serde_json::json;
use std::fmt::Write;

type CmdResult = Result<Outcome, String>;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// phi-bijection, mesh, bedard, f-order, lrootQ-window, klr-assoc,
    /// nilhecke or reflect-compat.
    pub suite: String,
    #[command(flatten)]
    pub quiver: QuiverArgs,
    /// Use every orientation of the chosen type(s).
    #[arg(long)]
    pub all_orientations: bool,
    /// Without --type: run every ADE type up to this rank.
    #[arg(long, default_value_t = 4)]
    pub max_rank: usize,
    /// Height bound on beta for f-order, reflect-compat and klr-assoc.
    #[arg(long)]
    pub max_height: Option<i64>,
    /// A single beta for klr-assoc.
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Graded-dimension check for |degree| up to this bound (klr-assoc).
    #[arg(long, default_value_t = 4)]
    pub max_degree: i64,
    /// Orbit-closure oracle when dim E_beta is at most this (f-order).
    #[arg(long, default_value_t = 4)]
    pub oracle_dim: i64,
    /// Largest m for nilhecke.
    #[arg(long, default_value_t = 4)]
    pub max_m: usize,
    /// Degree of test vectors in the polynomial representation.
    #[arg(long, default_value_t = 1)]
    pub polyrep_degree: u32,
}

pub fn run(cli: &Cli, config: &Config) -> CmdResult {
    let fmt = Format::new(cli)?;
    match &cli.command {
        Command::Quiver(q) => cmd_quiver(&resolve(q, config, None)?, fmt),
        Command::Phi { quiver, root, k, vertex } => {
            cmd_phi(&resolve(quiver, config, None)?, root.as_deref(), *k, vertex.as_deref(), fmt)
        }
        Command::Kp { quiver, beta } => {
            let beta = parse_vec(beta)?;
            cmd_kp(&resolve(quiver, config, Some(beta.len()))?, &beta, fmt)
        }
        Command::Lorder { quiver, mu, lambda, beta } => {
            let beta = beta.as_deref().map(parse_vec).transpose()?;
            let inst = resolve(quiver, config, beta.as_ref().map(Vec::len))?;
            match (mu, lambda, beta) {
                (Some(mu), Some(lambda), None) => cmd_lorder_pair(&inst, mu, lambda, fmt),
                (None, None, Some(beta)) => cmd_lorder_beta(&inst, &beta, fmt),
                _ => Err("lorder needs either --mu and --lambda, or --beta".into()),
            }
        }
        Command::Klr { quiver, beta, expr } => {
            let beta = parse_vec(beta)?;
            cmd_klr(&resolve(quiver, config, Some(beta.len()))?, &beta, expr, fmt)
        }
        Command::Reflect { quiver, vertex, beta } => {
            let beta = parse_vec(beta)?;
            cmd_reflect(&resolve(quiver, config, Some(beta.len()))?, *vertex, &beta, fmt)
        }
        Command::Verify(args) => cmd_verify(args, config, cli.seed.or(config.seed).unwrap_or(0), fmt),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

impl Format {
    fn new(cli: &Cli) -> Result<Self, String> {
        let dot_ok = matches!(cli.command, Command::Quiver(_) | Command::Kp { .. } | Command::Lorder { .. });
        if cli.dot && !dot_ok {
            return Err("--dot is only available for quiver, kp and lorder".into());
        }
        Ok(if cli.json {
            Format::Json
        } else if cli.dot {
            Format::Dot
        } else {
            Format::Text
        })
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_vec(s: &str) -> Result<Vec<i64>, String> {
    s.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad integer `{}` in `{s}`", t.trim())))
        .collect()
}

fn parse_lweight(s: &str) -> Result<LWeight, String> {
    serde_json::from_str(s).map_err(|e| format!("bad l-weight `{s}`: {e}"))
}

struct Instance {
    quiver: OrientedQuiver,
    height: HeightFunction,
}

/// Flags win over the config file. The config's orientation and height
/// only apply when its type is the one in use. Without any type, `A_n` is
/// inferred from the length of beta when there is one.
fn resolve(args: &QuiverArgs, config: &Config, rank_hint: Option<usize>) -> Result<Instance, String> {
    let label = args
        .type_label
        .clone()
        .or_else(|| config.type_label.clone())
        .or_else(|| rank_hint.map(|n| format!("A{n}")))
        .ok_or("no Dynkin type given (use --type or a config file)")?;
    let datum = CartanDatum::parse(&label).map_err(|e| e.to_string())?;
    let config_applies = config
        .type_label
        .as_deref()
        .is_some_and(|t| t.eq_ignore_ascii_case(&label));
    let orientation = args
        .orientation
        .clone()
        .or_else(|| config.orientation.clone().filter(|_| config_applies));
    let quiver = match orientation {
        Some(o) => OrientedQuiver::parse(datum, &o).map_err(|e| e.to_string())?,
        None => OrientedQuiver::standard(datum),
    };
    let height = match args.height.clone().or_else(|| config.height.clone().filter(|_| config_applies)) {
        Some(h) => HeightFunction::parse(&h).map_err(|e| e.to_string())?,
        None => quiver.height_function(),
    };
    quiver.check_height(&height).map_err(|e| e.to_string())?;
    if let Some(n) = rank_hint {
        if n != quiver.rank() {
            return Err(format!("beta has {n} entries but {} has rank {}", label, quiver.rank()));
        }
    }
    Ok(Instance { quiver, height })
}

impl Instance {
    fn ar(&self) -> Result<ArQuiver, String> {
        ArQuiver::new(&self.quiver, &self.height).map_err(|e| e.to_string())
    }
}

fn fmt_vec(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", s.join(","))
}

fn vertex_json(v: ArVertex) -> [i64; 2] {
    [v.i as i64 + 1, v.p]
}

fn cmd_quiver(inst: &Instance, fmt: Format) -> CmdResult {
    let q = &inst.quiver;
    let ar = inst.ar()?;
    let (word, gammas) = q.adapted_w0().map_err(|e| e.to_string())?;
    let word: Vec<usize> = word.letters.iter().map(|i| i + 1).collect();
    Ok(Outcome::Ok(match fmt {
        Format::Dot => ar.to_dot(),
        Format::Json => to_json(&json!({
            "quiver": QuiverJson::new(q, &inst.height),
            "coxeter_number": q.datum().coxeter_number(),
            "adapted_w0": word,
            "gammas": gammas,
            "phi": ar.phi_table_json(),
            "vertices": ar.vertices().iter().map(|&v| vertex_json(v)).collect::<Vec<_>>(),
            "arrows": ar.arrows().iter().map(|&(a, b)| [vertex_json(a), vertex_json(b)]).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "type {}  orientation {}", q.datum().kind(), q.orientation_string());
            let _ = writeln!(s, "height {}", fmt_vec(&inst.height.xi));
            let _ = writeln!(s, "sources {:?}  sinks {:?}", plus_one(&q.sources()), plus_one(&q.sinks()));
            let _ = writeln!(s, "adapted w0 {:?}", word);
            let _ = writeln!(s, "phi:");
            for e in ar.phi_table_json() {
                let _ = writeln!(s, "  {} -> ({}, {})", fmt_vec(&e.root), e.vertex.0, e.vertex.1);
            }
            let _ = writeln!(s, "{} vertices, {} arrows", ar.vertices().len(), ar.arrows().len());
            s
        }
    }))
}

fn plus_one(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn cmd_phi(inst: &Instance, root: Option<&str>, k: i64, vertex: Option<&str>, fmt: Format) -> CmdResult {
    let ar = inst.ar()?;
    if let Some(root) = root {
        let alpha = parse_vec(root)?;
        let v = ar.phi(&alpha, k).map_err(|e| e.to_string())?;
        return Ok(Outcome::Ok(match fmt {
            Format::Json => to_json(&json!({ "root": alpha, "k": k, "vertex": vertex_json(v) })),
            _ => format!("({}, {})\n", v.i + 1, v.p),
        }));
    }
    if let Some(vertex) = vertex {
        let ip = parse_vec(vertex)?;
        let [i, p] = ip[..] else {
            return Err(format!("vertex must be `i,p`, got `{vertex}`"));
        };
        if i < 1 {
            return Err("vertices are 1-based".into());
        }
        let (alpha, k) = ar.phi_inverse(ArVertex::new(i as usize - 1, p)).map_err(|e| e.to_string())?;
        return Ok(Outcome::Ok(match fmt {
            Format::Json => to_json(&json!({ "vertex": [i, p], "root": alpha, "k": k })),
            _ => format!("{} k={k}\n", fmt_vec(&alpha)),
        }));
    }
    Ok(Outcome::Ok(match fmt {
        Format::Json => to_json(&ar.phi_table_json()),
        _ => ar
            .phi_table_json()
            .iter()
            .map(|e| format!("{} -> ({}, {})\n", fmt_vec(&e.root), e.vertex.0, e.vertex.1))
            .collect(),
    }))
}

fn cmd_kp(inst: &Instance, beta: &[i64], fmt: Format) -> CmdResult {
    let ar = inst.ar()?;
    let table = HomTable::new(&inst.quiver).map_err(|e| e.to_string())?;
    let poset = KpPoset::new(&table, beta).map_err(|e| e.to_string())?;
    if fmt == Format::Dot {
        return Ok(Outcome::Ok(poset.to_dot(&table)));
    }
    let roots = table.roots();
    let lp = enumerate_lp_plus(&ar, beta).map_err(|e| e.to_string())?;
    let report = f_order_report(&ar, &poset);
    let one_based = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| [a + 1, b + 1]).collect::<Vec<_>>();
    let covers = one_based(&poset.covers());
    Ok(Outcome::Ok(match fmt {
        Format::Json => to_json(&json!({
            "beta": beta,
            "partitions": poset.elements.iter().enumerate().map(|(k, m)| json!({
                "index": k + 1,
                "parts": m.to_json(roots).parts,
                "f": f_bijection(&ar, m),
                "orbit_dim": table.orbit_dim(m),
            })).collect::<Vec<_>>(),
            "hasse": covers,
            "lp_plus_size": lp.len(),
            "order": {
                "comparable_pairs": report.comparable_pairs,
                "preserves": report.preserves(),
                "reflects": report.reflects(),
                "forward_failures": one_based(&report.forward_failures),
                "converse_failures": one_based(&report.converse_failures),
            },
        })),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "KP({}) has {} elements; |lP+| = {}", fmt_vec(beta), poset.len(), lp.len());
            for (k, m) in poset.elements.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  m{}: {}  f = {}  dim O = {}",
                    k + 1,
                    m.label(roots),
                    f_bijection(&ar, m),
                    table.orbit_dim(m)
                );
            }
            for [a, b] in covers {
                let _ = writeln!(s, "  m{a} < m{b}");
            }
            let _ = writeln!(
                s,
                "f preserves the order: {}; f reflects the order: {}",
                report.preserves(),
                report.reflects()
            );
            s
        }
    }))
}

fn cmd_lorder_pair(inst: &Instance, mu: &str, lambda: &str, fmt: Format) -> CmdResult {
    if fmt == Format::Dot {
        return Err("--dot needs --beta".into());
    }
    let (mu, lambda) = (parse_lweight(mu)?, parse_lweight(lambda)?);
    let nu = l_dominance_leq(inst.quiver.datum(), &mu, &lambda);
    Ok(Outcome::Ok(match fmt {
        Format::Json => to_json(&json!({ "mu": mu, "lambda": lambda, "leq": nu.is_some(), "nu": nu })),
        _ => match nu {
            Some(nu) => format!("mu <= lambda, lambda - mu = {}\n", nu.to_string().replace("w[", "a[")),
            None => "mu is not <= lambda\n".into(),
        },
    }))
}

fn cmd_lorder_beta(inst: &Instance, beta: &[i64], fmt: Format) -> CmdResult {
    let ar = inst.ar()?;
    let d = inst.quiver.datum();
    let lp = enumerate_lp_plus(&ar, beta).map_err(|e| e.to_string())?;
    let n = lp.len();
    let leq: Vec<Vec<bool>> = lp
        .iter()
        .map(|a| lp.iter().map(|b| l_dominance_leq(d, a, b).is_some()).collect())
        .collect();
    let covers: Vec<[usize; 2]> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && leq[a][b] && !(0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b]))
        .map(|(a, b)| [a + 1, b + 1])
        .collect();
    Ok(Outcome::Ok(match fmt {
        Format::Dot => {
            let mut s = format!("digraph LP {{\n  label=\"lP+ {}\";\n", fmt_vec(beta));
            for (k, w) in lp.iter().enumerate() {
                let _ = writeln!(s, "  l{} [label=\"{w}\"];", k + 1);
            }
            for [a, b] in &covers {
                let _ = writeln!(s, "  l{a} -> l{b};");
            }
            s.push_str("}\n");
            s
        }
        Format::Json => to_json(&json!({ "beta": beta, "elements": lp, "hasse": covers })),
        Format::Text => {
            let mut s = format!("lP+ of {} has {n} elements\n", fmt_vec(beta));
            for (k, w) in lp.iter().enumerate() {
                let _ = writeln!(s, "  l{}: {w}", k + 1);
            }
            for [a, b] in covers {
                let _ = writeln!(s, "  l{a} < l{b}");
            }
            s
        }
    }))
}

fn cmd_klr(inst: &Instance, beta: &[i64], expr: &str, fmt: Format) -> CmdResult {
    let alg = KlrAlgebra::new(&inst.quiver, beta).map_err(|e| e.to_string())?;
    let u = parse_expression(&alg, expr).map_err(|e| match e {
        quiverlab::Error::Parse { pos, msg } => format!("parse error at {pos}: {msg}\n  {expr}\n  {}^", " ".repeat(pos)),
        other => other.to_string(),
    })?;
    Ok(Outcome::Ok(match fmt {
        Format::Json => to_json(&alg.dump_json(&u)),
        _ => {
            let degree = match alg.degree(&u) {
                quiverlab::Degree::Zero => "zero element".to_string(),
                quiverlab::Degree::Homogeneous(k) => k.to_string(),
                quiverlab::Degree::Inhomogeneous => "inhomogeneous".to_string(),
            };
            let body = if u.is_zero() { "0\n".to_string() } else { alg.dump_text(&u) };
            format!("{body}degree: {degree}\n")
        }
    }))
}

fn cmd_reflect(inst: &Instance, vertex: usize, beta: &[i64], fmt: Format) -> CmdResult {
    if vertex == 0 {
        return Err("vertices are 1-based".into());
    }
    let i = vertex - 1;
    let h2 = reflected_height(&inst.quiver, &inst.height, i).map_err(|e| e.to_string())?;
    let q2 = inst.quiver.reflect(i);
    let report = check_f_compat(&inst.quiver, &inst.height, beta, i).map_err(|e| e.to_string())?;
    let ok = report.ok();
    let out = match fmt {
        Format::Json => to_json(&json!({
            "reflected": QuiverJson::new(&q2, &h2),
            "report": report,
            "ok": ok,
        })),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "s_{vertex}(Q) = {}  height {}", q2.orientation_string(), fmt_vec(&h2.xi));
            let _ = writeln!(s, "beta = {}  beta' = {}", fmt_vec(beta), fmt_vec(&report.beta_prime));
            for e in &report.entries {
                let _ = writeln!(
                    s,
                    "  {} -> {}: f = {}, f' = {}  {}",
                    fmt_parts(&e.partition.parts),
                    fmt_parts(&e.reflected.parts),
                    e.f,
                    e.f_prime,
                    if e.pass { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(s, "lower set: {}  order isomorphism: {}", report.lower_set, report.order_isomorphism);
            let _ = writeln!(s, "{}", if ok { "PASS" } else { "FAIL" });
            s
        }
    };
    Ok(if ok { Outcome::Ok(out) } else { Outcome::Failed(out) })
}

fn fmt_parts(parts: &[(Vec<i64>, u32)]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    parts
        .iter()
        .map(|(a, m)| if *m == 1 { fmt_vec(a) } else { format!("{m}{}", fmt_vec(a)) })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn verify_instances(args: &VerifyArgs, config: &Config) -> Result<Vec<OrientedQuiver>, String> {
    if args.quiver.type_label.is_none() && config.type_label.is_none() {
        let all = if args.all_orientations { args.max_rank } else { 0 };
        return Ok(verify::quiver_instances(args.max_rank, all));
    }
    let inst = resolve(&args.quiver, config, None)?;
    Ok(if args.all_orientations {
        OrientedQuiver::all_orientations(inst.quiver.datum())
    } else {
        vec![inst.quiver]
    })
}

fn cmd_verify(args: &VerifyArgs, config: &Config, seed: u64, fmt: Format) -> CmdResult {
    let suite: Suite = args.suite.parse().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{}` (expected one of {})", args.suite, names.join(", "))
    })?;
    let report = match suite {
        Suite::PhiBijection => verify::verify_phi_bijection(&verify_instances(args, config)?),
        Suite::Mesh => verify::verify_mesh(&verify_instances(args, config)?),
        Suite::Bedard => verify::verify_bedard(&verify_instances(args, config)?),
        Suite::LrootqWindow => {
            let qs = verify_instances(args, config)?;
            verify::combine(
                suite.name(),
                vec![verify::verify_lrootq_window(&qs), verify::verify_deg_zero(&qs)],
            )
        }
        Suite::FOrder => verify::verify_f_order(
            &verify_instances(args, config)?,
            FOrderBounds { max_height: args.max_height.unwrap_or(4), oracle_max_dim: args.oracle_dim },
        ),
        Suite::ReflectCompat => {
            verify::verify_reflect_compat(&verify_instances(args, config)?, args.max_height.unwrap_or(4))
        }
        Suite::Nilhecke => verify::verify_nilhecke(args.max_m, args.polyrep_degree.max(1)),
        Suite::KlrAssoc => {
            let beta = args.beta.as_deref().map(parse_vec).transpose()?;
            let inst = resolve(&args.quiver, config, beta.as_ref().map(Vec::len))?;
            let betas = match beta {
                Some(b) => {
                    if b.iter().any(|&c| c < 0) || b.iter().all(|&c| c == 0) {
                        return Err(format!("beta must be a nonzero element of Q+, got {}", fmt_vec(&b)));
                    }
                    vec![b]
                }
                None => verify::betas_up_to(inst.quiver.rank(), args.max_height.unwrap_or(3)),
            };
            let bounds = KlrBounds {
                samples: args.samples,
                seed,
                max_degree: args.max_degree,
                polyrep_degree: args.polyrep_degree,
            };
            verify::verify_klr_assoc(&inst.quiver, &betas, bounds)
        }
    };
    let out = render_report(&report, fmt);
    Ok(if report.ok() { Outcome::Ok(out) } else { Outcome::Failed(out) })
}

fn render_report(r: &SuiteReport, fmt: Format) -> String {
    if fmt == Format::Json {
        return to_json(&json!({ "ok": r.ok(), "report": r }));
    }
    let mut s = format!(
        "{}: {} ({} instances, {} checks, {} failures)\n",
        r.suite,
        if r.ok() { "pass" } else { "FAIL" },
        r.instances,
        r.checks,
        r.failures.len()
    );
    for f in &r.failures {
        let _ = writeln!(s, "  counterexample: {}: {}", f.instance, f.detail);
    }
    for n in &r.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiverlab::Failure;

    #[test]
    fn failing_report_lists_counterexamples() {
        let r = SuiteReport {
            suite: "mesh".into(),
            instances: 2,
            checks: 5,
            failures: vec![Failure { instance: "A2 1>2".into(), detail: "defect [1,0]".into() }],
            notes: vec![],
        };
        assert_eq!(
            render_report(&r, Format::Text),
            "mesh: FAIL (2 instances, 5 checks, 1 failures)\n  counterexample: A2 1>2: defect [1,0]\n"
        );
    }

    #[test]
    fn vectors_parse() {
        assert_eq!(parse_vec("1,2,0").unwrap(), vec![1, 2, 0]);
        assert_eq!(parse_vec("[1, -1]").unwrap(), vec![1, -1]);
        assert!(parse_vec("1,,2").is_err());
    }
}
