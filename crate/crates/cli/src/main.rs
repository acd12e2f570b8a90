//! `sp4llc`: batch command-line front end for the Sp4/GSp4 local Langlands
//! engine.  Machine-readable JSON (default) or human-readable tables.
//!
//! Exit codes: 0 success; 2 engine error (rendered to stderr); 64 unknown
//! subcommand.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sp4llc_core::characters::LabelGroup;
use sp4llc_core::galois::{
    self,
    presets::{preset, preset_names},
};
use sp4llc_core::induction::{decide_reducibility, InducedRep};
use sp4llc_core::rootdata::{facets, nilpotent_orbits, parahoric_quotients, weyl_classes, Group};
use sp4llc_core::stability::{
    character_vector, gsp4_candidates, minimal_stable_subsets, sp4_candidates, Context,
    DistVector, EtaChoice, RepLabel, SignConvention,
};
use sp4llc_core::supercuspidal::{
    depth_zero_by_name, enumerate_depth_zero, formal_degree_delta_eta2,
    formal_degree_depth_zero,
};
use sp4llc_core::{EngineError, QHalf};

/// JSON schema version stamped on every report.
const SCHEMA: &str = "v1";

#[derive(Parser)]
#[command(name = "sp4llc", version, about = "Exact local Langlands engine for Sp4 and GSp4")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "Sp4", alias = "sp4")]
    Sp4,
    #[value(name = "GSp4", alias = "gsp4")]
    Gsp4,
}

impl From<GroupArg> for Group {
    fn from(g: GroupArg) -> Group {
        match g {
            GroupArg::Sp4 => Group::Sp4,
            GroupArg::Gsp4 => Group::GSp4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ContextArg {
    #[value(name = "near-1")]
    Near1,
    #[value(name = "near-s")]
    NearS,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Plus,
    Minus,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print embedded combinatorial tables.
    Tables {
        #[arg(long, value_enum, default_value = "sp4")]
        group: GroupArg,
        /// Weyl conjugacy classes with torsion ranks.
        #[arg(long)]
        weyl: bool,
        /// Nilpotent orbits with the dual-partition pairing.
        #[arg(long)]
        nilpotent: bool,
        /// Maximal parahoric vertices and reductive quotients.
        #[arg(long)]
        parahoric: bool,
        /// Fundamental-alcove facet complex.
        #[arg(long)]
        facets: bool,
        /// Springer correspondence tables of the centralizer groups.
        #[arg(long)]
        springer: bool,
        /// Depth-zero supercuspidal enumeration.
        #[arg(long)]
        supercuspidal: bool,
    },
    /// Classify a Galois parameter: case tag and centralizer data.
    Classify {
        /// Named parameter preset (see --list).
        #[arg(long, required_unless_present = "list")]
        preset: Option<String>,
        /// List all preset names.
        #[arg(long)]
        list: bool,
    },
    /// Assemble the L-packet of a parameter preset.
    Packet {
        #[arg(long)]
        preset: String,
    },
    /// Decide reducibility of a principal series.
    Reduce {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// First torus character (e.g. "eta2", "nu^{1/2} * eta", "1").
        #[arg(long)]
        chi1: String,
        #[arg(long)]
        chi2: String,
        /// Similitude character (GSp4 only; defaults to trivial).
        #[arg(long, default_value = "1")]
        theta: String,
    },
    /// Formal degree of a supercuspidal or discrete-series member.
    Fdeg {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Machine name (e.g. pi_alpha_eta2, pi_beta_theta10, delta_eta2).
        #[arg(long)]
        rep: String,
        /// Optional evaluation point q = q0.
        #[arg(long)]
        q0: Option<u64>,
    },
    /// Minimal stable subsets of recorded character vectors.
    Stability {
        /// Candidate set: the four GSp4 members or their eight Sp4
        /// restrictions.
        #[arg(long, value_enum, default_value = "gsp4")]
        set: SetArg,
        /// JSON file with explicit candidates [{"rep": "...", "eta": "..."}].
        #[arg(long)]
        candidates: Option<String>,
        #[arg(long, value_enum, default_value = "near-s")]
        context: ContextArg,
        /// Absolute sign resolution for the eta2 Green-symbol term.
        #[arg(long, value_enum, default_value = "plus")]
        convention: ConventionArg,
    },
    /// Run the embedded invariant suite.
    Selfcheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    #[value(name = "gsp4")]
    Gsp4,
    Sp4,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    return ExitCode::SUCCESS;
                }
                ErrorKind::InvalidSubcommand | ErrorKind::UnknownArgument => 64,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            render(&report, cli.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn render(report: &Value, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report).unwrap()),
        Format::Table => print_table(report, 0),
    }
}

/// Aligned human-readable rendering of the JSON report.
fn print_table(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_table(val, indent + 1);
                    }
                    _ => println!("{pad}{k:width$}  {}", scalar(val)),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}-");
                        print_table(item, indent + 1);
                    }
                    _ => println!("{pad}- {}", scalar(item)),
                }
            }
        }
        _ => println!("{pad}{}", scalar(v)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: &Cli) -> Result<Value, EngineError> {
    match &cli.cmd {
        Cmd::Tables { group, weyl, nilpotent, parahoric, facets: f, springer, supercuspidal } => {
            let g: Group = (*group).into();
            let all = !(*weyl || *nilpotent || *parahoric || *f || *springer || *supercuspidal);
            let mut out = serde_json::Map::new();
            out.insert("schema".into(), json!(SCHEMA));
            out.insert("group".into(), json!(g.to_string()));
            if *weyl || all {
                out.insert("weyl_classes".into(), serde_json::to_value(weyl_classes(g)).unwrap());
            }
            if *nilpotent || all {
                out.insert(
                    "nilpotent_orbits".into(),
                    serde_json::to_value(nilpotent_orbits(g)).unwrap(),
                );
            }
            if *parahoric || all {
                out.insert(
                    "parahoric_quotients".into(),
                    serde_json::to_value(parahoric_quotients(g)).unwrap(),
                );
            }
            if *f || all {
                out.insert("facets".into(), serde_json::to_value(facets(g)).unwrap());
            }
            if *springer || all {
                out.insert(
                    "springer_tables".into(),
                    serde_json::to_value(galois::springer_tables()).unwrap(),
                );
            }
            if *supercuspidal || all {
                out.insert(
                    "depth_zero_supercuspidals".into(),
                    serde_json::to_value(enumerate_depth_zero(g)).unwrap(),
                );
            }
            Ok(Value::Object(out))
        }
        Cmd::Classify { preset: name, list } => {
            if *list {
                return Ok(json!({ "schema": SCHEMA, "presets": preset_names() }));
            }
            let name = name.as_deref().unwrap();
            let lg = LabelGroup::standard();
            let p = preset(name, &lg)?;
            let report = galois::centralizer(&p)?;
            let packet = galois::assemble_packet(&p)?;
            Ok(json!({
                "schema": SCHEMA,
                "preset": name,
                "centralizer": report,
                "packet_size": packet.members.len(),
            }))
        }
        Cmd::Packet { preset: name } => {
            let lg = LabelGroup::standard();
            let p = preset(name, &lg)?;
            let packet = galois::assemble_packet(&p)?;
            let inf = galois::infinitesimal(&p)?;
            Ok(json!({
                "schema": SCHEMA,
                "preset": name,
                "packet": packet,
                "infinitesimal": inf.iter().map(|e| json!({
                    "tag": e.tag, "shift": e.shift.to_string(),
                })).collect::<Vec<_>>(),
            }))
        }
        Cmd::Reduce { group, chi1, chi2, theta } => {
            let g: Group = (*group).into();
            let lg = LabelGroup::standard();
            let rep = InducedRep::principal_series(
                g,
                lg.parse_char(chi1)?,
                lg.parse_char(chi2)?,
                lg.parse_char(theta)?,
            )?;
            let report = decide_reducibility(&rep)?;
            let mut v = serde_json::to_value(&report).unwrap();
            v["schema"] = json!(SCHEMA);
            Ok(v)
        }
        Cmd::Fdeg { group, rep, q0 } => {
            let g: Group = (*group).into();
            let value = fdeg_by_name(g, rep)?;
            let mut out = serde_json::Map::new();
            out.insert("schema".into(), json!(SCHEMA));
            out.insert("group".into(), json!(g.to_string()));
            out.insert("rep".into(), json!(rep));
            out.insert("fdeg".into(), json!(value.to_string()));
            out.insert("fdeg_factored".into(), json!(value.factor()?.render()));
            if let Some(q0) = q0 {
                out.insert("q0".into(), json!(q0));
                out.insert("value".into(), json!(value.eval(*q0)?.to_string()));
            }
            Ok(Value::Object(out))
        }
        Cmd::Stability { set, candidates, context, convention } => {
            let conv = match convention {
                ConventionArg::Plus => SignConvention::PlusForEta2,
                ConventionArg::Minus => SignConvention::MinusForEta2,
            };
            let ctx = match context {
                ContextArg::Near1 => Context::NearOne,
                ContextArg::NearS => Context::NearS,
            };
            let cands: Vec<(String, DistVector)> = match candidates {
                Some(path) => read_candidates(path, conv)?,
                None => match set {
                    SetArg::Gsp4 => gsp4_candidates(conv),
                    SetArg::Sp4 => sp4_candidates(conv),
                },
            };
            let subsets = minimal_stable_subsets(&cands, ctx)?;
            Ok(json!({
                "schema": SCHEMA,
                "context": match ctx { Context::NearOne => "near-1", Context::NearS => "near-s" },
                "candidates": cands.iter().map(|(label, v)| json!({
                    "label": label,
                    "vector": vector_json(v),
                })).collect::<Vec<_>>(),
                "minimal_stable_subsets": subsets.iter().map(|s| json!({
                    "members": s.iter().map(|&i| cands[i].0.clone()).collect::<Vec<_>>(),
                    "sum": vector_json(&sum_of(&cands, s)),
                })).collect::<Vec<_>>(),
            }))
        }
        Cmd::Selfcheck => selfcheck(),
    }
}

fn sum_of(cands: &[(String, DistVector)], idx: &[usize]) -> DistVector {
    let mut v = DistVector::zero();
    for &i in idx {
        v.add(&cands[i].1);
    }
    v
}

fn vector_json(v: &DistVector) -> Value {
    let mut map = serde_json::Map::new();
    for (basis, coeff) in v.entries() {
        map.insert(basis.to_string(), json!(coeff.to_string()));
    }
    Value::Object(map)
}

fn read_candidates(
    path: &str,
    conv: SignConvention,
) -> Result<Vec<(String, DistVector)>, EngineError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| EngineError::InvalidOperand(format!("{path}: {e}")))?;
    let entries: Vec<Value> = serde_json::from_str(&text)
        .map_err(|e| EngineError::Parse(format!("{path}: {e}")))?;
    let mut out = vec![];
    for entry in entries {
        let rep_s = entry["rep"]
            .as_str()
            .ok_or_else(|| EngineError::Parse("candidate entry missing \"rep\"".into()))?;
        let eta_s = entry["eta"].as_str().unwrap_or("eta2");
        let rep = RepLabel::parse(rep_s)?;
        let eta = match eta_s {
            "eta2" => EtaChoice::Eta2,
            "eta2p" => EtaChoice::Eta2Prime,
            other => {
                return Err(EngineError::InvalidOperand(format!(
                    "unknown ramified quadratic character {other}"
                )))
            }
        };
        out.push((rep.display(eta), character_vector(rep, eta, conv)?));
    }
    Ok(out)
}

/// Formal degree lookup covering the depth-zero enumeration plus the
/// discrete-series member delta_eta2 of the mixed packet.
fn fdeg_by_name(group: Group, rep: &str) -> Result<QHalf, EngineError> {
    if rep == "delta_eta2" {
        return Ok(formal_degree_delta_eta2());
    }
    // Accept the central-character-twisted alias without the _chi suffix.
    let found = depth_zero_by_name(group, rep)
        .or_else(|_| depth_zero_by_name(group, &format!("{rep}_chi")))?;
    formal_degree_depth_zero(&found)
}

/// The embedded invariant suite: every module's cheap structural invariants,
/// with pass/fail counts.  No filesystem or network access.
fn selfcheck() -> Result<Value, EngineError> {
    let mut checks: Vec<(String, bool)> = vec![];
    let mut check = |name: &str, ok: bool| checks.push((name.to_string(), ok));

    // Formal-degree matching in the mixed GSp4 packet.
    let delta = formal_degree_delta_eta2();
    let pi_alpha = depth_zero_by_name(Group::GSp4, "pi_alpha_eta2_chi")
        .and_then(|r| formal_degree_depth_zero(&r))?;
    check("fdeg(delta) == fdeg(pi_alpha)", delta == pi_alpha);

    // All closed-form depth-zero formal degrees are positive at q = 3.
    let mut all_pos = true;
    for g in [Group::Sp4, Group::GSp4] {
        for rep in enumerate_depth_zero(g) {
            if rep.dim_tau.is_some() {
                all_pos &= formal_degree_depth_zero(&rep)?.is_positive_at(3);
            }
        }
    }
    check("depth-zero formal degrees positive at q=3", all_pos);

    // Self-duality maps invert each other on a lattice basis.
    let mut dual_ok = true;
    for v in [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]] {
        let fwd = sp4llc_core::rootdata::self_duality_map(&v)?;
        let back = sp4llc_core::rootdata::self_duality_inverse(&fwd)?;
        dual_ok &= back == v;
    }
    check("self-duality forward then inverse is the identity", dual_ok);

    // Weyl census.
    let classes = weyl_classes(Group::Sp4);
    check("Weyl group has 5 classes of total size 8", {
        classes.len() == 5 && classes.iter().map(|c| c.size).sum::<usize>() == 8
    });
    check(
        "only the A1xA1 class carries 2-torsion",
        classes.iter().all(|c| (c.torsion_rank > 0) == (c.name == "A1xA1")),
    );

    // Nilpotent orbits pair partitions of 5 and 4.
    let orbits = nilpotent_orbits(Group::Sp4);
    check("4 nilpotent orbits pairing partitions of 5 and 4", {
        orbits.len() == 4
            && orbits.iter().all(|o| {
                o.b2_partition.iter().map(|&x| x as u32).sum::<u32>() == 5
                    && o.c2_partition.iter().map(|&x| x as u32).sum::<u32>() == 4
            })
    });

    // Springer tables are injective on both columns (cuspidals excepted).
    let mut springer_ok = true;
    for t in galois::springer_tables() {
        let pairs: std::collections::BTreeSet<_> = t.rows.iter().map(|r| r.pair).collect();
        let reps: std::collections::BTreeSet<_> =
            t.rows.iter().filter(|r| r.weyl_rep != "cusp").map(|r| r.weyl_rep).collect();
        let cusp = t.rows.iter().filter(|r| r.weyl_rep == "cusp").count();
        springer_ok &= pairs.len() == t.rows.len() && reps.len() + cusp == t.rows.len();
    }
    check("Springer tables are bijections", springer_ok);

    // Packet census: |packet| = 2^{rank} over every preset.
    let lg = LabelGroup::standard();
    let mut census_ok = true;
    for name in preset_names() {
        let p = preset(name, &lg)?;
        let packet = galois::assemble_packet(&p)?;
        census_ok &= packet.members.len() == 1usize << packet.s_rank;
    }
    check("packet size is 2^rank over all presets", census_ok);

    // Cuspidal-support commutation on every preset member.
    let mut support_ok = true;
    for name in preset_names() {
        let p = preset(name, &lg)?;
        let packet = galois::assemble_packet(&p)?;
        for m in &packet.members {
            let s = galois::cuspidal_support(&p, &m.enhancement)?;
            support_ok &= s.dual_levi == galois::dual_levi_label(p.group, m.support);
        }
    }
    check("galois support Levi duals the inducing Levi", support_ok);

    // A reducibility sample: a principal series in general position (no
    // quadratic or nu-shifted coincidence) is irreducible.
    let chi1 = lg.parse_char("nu^{1/4} * eta2")?;
    let chi2 = lg.parse_char("nu^{1/3} * eta")?;
    let rep = InducedRep::principal_series(Group::Sp4, chi1, chi2, lg.one())?;
    let report = decide_reducibility(&rep)?;
    check("general-position principal series is irreducible", report.length == 1);

    // Stability: the minimal stable subsets are the matched pairs and the
    // quadruples, under both sign conventions.
    let mut stab_ok = true;
    for conv in [SignConvention::PlusForEta2, SignConvention::MinusForEta2] {
        let four = gsp4_candidates(conv);
        let pairs = minimal_stable_subsets(&four, Context::NearS)?;
        stab_ok &= pairs == vec![vec![0, 1], vec![2, 3]];
        let eight = sp4_candidates(conv);
        let quads = minimal_stable_subsets(&eight, Context::NearS)?;
        stab_ok &= quads == vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]];
    }
    check("minimal stable subsets are the matched pairs/quadruples", stab_ok);

    // Unipotent cuspidal predicate spot values.
    use sp4llc_core::finite_reductive::{has_unipotent_cuspidal, FiniteGroupLabel};
    let mut lus_ok = true;
    for (label, expect) in [
        (FiniteGroupLabel::SOOdd(2), true),
        (FiniteGroupLabel::SOOdd(3), false),
        (FiniteGroupLabel::SOEvenPlus(4), true),
        (FiniteGroupLabel::SOEvenMinus(9), true),
        (FiniteGroupLabel::GL(7), false),
    ] {
        lus_ok &= has_unipotent_cuspidal(&label)?.0 == expect;
    }
    check("unipotent-cuspidal existence pattern", lus_ok);

    let passed = checks.iter().filter(|(_, ok)| *ok).count();
    let failed = checks.len() - passed;
    let report = json!({
        "schema": SCHEMA,
        "checks": checks.iter().map(|(name, ok)| json!({
            "name": name, "status": if *ok { "pass" } else { "fail" },
        })).collect::<Vec<_>>(),
        "passed": passed,
        "failed": failed,
    });
    if failed > 0 {
        eprintln!("error: {failed} selfcheck invariant(s) failed");
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        return Err(EngineError::InvalidDatum(format!("{failed} selfcheck failures")));
    }
    Ok(report)
}
