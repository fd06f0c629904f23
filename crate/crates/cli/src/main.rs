//! `nsg` — numerical semigroups, dilatations, and their classifications
//! from the command line.
//!
//! Every subcommand reads semigroups as comma-separated generator lists
//! (`4,7,9`) or gap lists (`gaps:1,2,4,7`), prints a human-readable
//! summary by default, and emits one JSON object with `--json`.
//! Exit codes: 0 on success, 1 on input errors, 2 when a verification
//! sweep finds a violated identity.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nsg_core::scan::{
    scan_relation_count_gaps, verify_classification_coherence, verify_classification_transfers,
    verify_invariant_transfers, ScanReport,
};
use nsg_core::{CofiniteSet, NumericalSemigroup};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "nsg",
    version,
    about = "Exact arithmetic for numerical semigroups and their dilatations"
)]
struct Cli {
    /// Emit one JSON object instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a semigroup: Frobenius number, genus, and friends.
    Info { semigroup: String },
    /// Apéry set with respect to a member modulus.
    Apery {
        semigroup: String,
        /// Modulus; must be a nonzero member.
        #[arg(long = "mod")]
        modulus: i64,
    },
    /// The dilatation S + a: 0 plus every nonzero member moved up by a.
    Dilate {
        semigroup: String,
        /// Shift; must be nonnegative and lie in M - 2M.
        #[arg(long)]
        a: i64,
        #[arg(long, value_enum, default_value_t = Show::Generators)]
        show: Show,
    },
    /// Undo a dilatation, or list every shift that can be contracted.
    Contract {
        semigroup: String,
        /// Shift to contract by; omit to list all valid shifts.
        #[arg(long)]
        a: Option<i64>,
    },
    /// The set M - 2M of valid dilatation shifts.
    Domain { semigroup: String },
    /// Symmetric / almost symmetric / 2-AGL / nearly Gorenstein / MED /
    /// Arf / Wilf, with the canonical and trace ideals.
    Classify { semigroup: String },
    /// Minimal presentation: relation count and degree contributions.
    Presentation { semigroup: String },
    /// Exhaustively verify identity families over the genus tree;
    /// exits 2 if any identity fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_genus: i64,
        #[arg(long, default_value_t = 5)]
        max_a: i64,
    },
    /// Exhaustive searches over the genus tree.
    Scan {
        #[arg(value_enum)]
        search: Search,
        #[arg(long, default_value_t = 6)]
        max_genus: i64,
        #[arg(long, default_value_t = 5)]
        max_a: i64,
        /// Also write one record per (semigroup, shift) pair to a file.
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// List every numerical semigroup of one genus.
    Enumerate {
        #[arg(long)]
        genus: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Generators,
    Apery,
    Invariants,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// Invariant and Apéry/generator transfer under dilatation.
    #[value(name = "section2")]
    Section2,
    /// Canonical-ideal identities and classification transfer.
    #[value(name = "section3")]
    Section3,
    /// Per-semigroup coherence: route agreement, implications between
    /// classes, exclusion of 2-AGL and nearly Gorenstein, Wilf.
    #[value(name = "disjointness")]
    Disjointness,
}

#[derive(Clone, Copy, ValueEnum)]
enum Search {
    /// Relation counts of dilatations against the quadratic prediction.
    #[value(name = "q28")]
    Q28,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let code = if matches!(err.kind(), DisplayHelp | DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            let _ = err.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match &cli.command {
        Command::Info { semigroup } => info(&semigroup.parse()?, cli.json),
        Command::Apery { semigroup, modulus } => apery(&semigroup.parse()?, *modulus, cli.json),
        Command::Dilate { semigroup, a, show } => dilate(&semigroup.parse()?, *a, *show, cli.json),
        Command::Contract { semigroup, a } => contract(&semigroup.parse()?, *a, cli.json),
        Command::Domain { semigroup } => domain(&semigroup.parse()?, cli.json),
        Command::Classify { semigroup } => classify(&semigroup.parse()?, cli.json),
        Command::Presentation { semigroup } => presentation(&semigroup.parse()?, cli.json),
        Command::Verify {
            suite,
            max_genus,
            max_a,
        } => verify(*suite, *max_genus, *max_a, cli.json),
        Command::Scan {
            search: Search::Q28,
            max_genus,
            max_a,
            log,
        } => scan_q28(*max_genus, *max_a, log.as_deref(), cli.json),
        Command::Enumerate { genus } => enumerate(*genus, cli.json),
    }
}

/// `{1,2,3,5,6,10}`.
fn braces(values: &[i64]) -> String {
    let mut out = String::from("{");
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let _ = write!(out, "{v}");
    }
    out.push('}');
    out
}

fn semigroup_json(s: &NumericalSemigroup) -> Value {
    json!({ "generators": s.minimal_generators(), "gaps": s.gaps() })
}

fn cofinite_json(set: &CofiniteSet) -> Value {
    json!({ "sporadic": set.sporadic(), "conductor": set.conductor() })
}

fn invariants_json(s: &NumericalSemigroup) -> Value {
    let inv = s.invariants();
    json!({
        "frobenius": inv.frobenius,
        "genus": inv.genus,
        "multiplicity": inv.multiplicity,
        "sporadic_count": inv.sporadic_count,
        "type": inv.typ,
        "embedding_dimension": inv.embedding_dimension,
        "reduction_number": inv.reduction_number,
    })
}

fn invariants_line(s: &NumericalSemigroup) -> String {
    let inv = s.invariants();
    format!(
        "F={} g={} e={} n={} t={} \u{3bd}={} r={}",
        inv.frobenius,
        inv.genus,
        inv.multiplicity,
        inv.sporadic_count,
        inv.typ,
        inv.embedding_dimension,
        inv.reduction_number
    )
}

/// Prints one line to stdout. If the reader has gone away (as in
/// `nsg ... | head`), dies quietly with the conventional SIGPIPE code
/// instead of panicking.
fn emit_line(text: &str) {
    use std::io::Write as _;
    if writeln!(std::io::stdout().lock(), "{text}").is_err() {
        std::process::exit(141);
    }
}

fn emit(json_mode: bool, s: Option<&NumericalSemigroup>, result: Value, human: String) {
    if json_mode {
        let envelope = match s {
            Some(s) => json!({ "semigroup": semigroup_json(s), "result": result }),
            None => json!({ "result": result }),
        };
        emit_line(&envelope.to_string());
    } else {
        emit_line(&human);
    }
}

fn info(s: &NumericalSemigroup, json_mode: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let mut result = invariants_json(s);
    result["pseudo_frobenius"] = json!(s.pseudo_frobenius());
    let human = format!(
        "S = \u{2329}{s}\u{232a}\n{}\ngaps: {}\npseudo-Frobenius: {}",
        invariants_line(s),
        braces(s.gaps()),
        braces(&s.pseudo_frobenius()),
    );
    emit(json_mode, Some(s), result, human);
    Ok(ExitCode::SUCCESS)
}

fn apery(
    s: &NumericalSemigroup,
    modulus: i64,
    json_mode: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let apery = s.apery_set(modulus)?;
    let human = format!("Ap(S, {modulus}) = {}", braces(&apery));
    emit(
        json_mode,
        Some(s),
        json!({ "modulus": modulus, "apery": apery }),
        human,
    );
    Ok(ExitCode::SUCCESS)
}

fn dilate(
    s: &NumericalSemigroup,
    a: i64,
    show: Show,
    json_mode: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let t = s.dilate(a)?;
    let mut human = format!(
        "T = S + {a}\nmembers: {}\ngenerators ({}): {t}",
        t.to_cofinite(),
        t.embedding_dimension()
    );
    let view = match show {
        Show::Generators => json!({ "generators": t.minimal_generators() }),
        Show::Apery => {
            let modulus = t.multiplicity();
            let apery = t.apery_set(modulus)?;
            let _ = write!(human, "\nAp(T, {modulus}) = {}", braces(&apery));
            json!({ "apery": { "modulus": modulus, "elements": apery } })
        }
        Show::Invariants => {
            let report = s.transfer_report(a)?;
            let transfer = if report.pass() {
                "pass".to_string()
            } else {
                format!("FAILED: {:?}", report.failures())
            };
            let _ = write!(
                human,
                "\n{}\ntransfer identities: {transfer}",
                invariants_line(&t)
            );
            json!({ "invariants": invariants_json(&t), "transfer_pass": report.pass() })
        }
    };
    let mut result = json!({ "shift": a, "dilatation": semigroup_json(&t) });
    for (key, value) in view.as_object().unwrap() {
        result[key] = value.clone();
    }
    emit(json_mode, Some(s), result, human);
    Ok(ExitCode::SUCCESS)
}

fn contract(
    t: &NumericalSemigroup,
    a: Option<i64>,
    json_mode: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match a {
        Some(a) => {
            let s = t.contract(a)?;
            let human = format!(
                "S = T - {a}\nmembers: {}\ngenerators ({}): {s}",
                s.to_cofinite(),
                s.embedding_dimension()
            );
            emit(
                json_mode,
                Some(t),
                json!({ "shift": a, "contraction": semigroup_json(&s) }),
                human,
            );
        }
        None => {
            let candidates = t.contraction_candidates();
            let human = if candidates.is_empty() {
                "no shift contracts this semigroup".to_string()
            } else {
                format!("valid contraction shifts: {}", braces(&candidates))
            };
            emit(
                json_mode,
                Some(t),
                json!({ "candidates": candidates }),
                human,
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn domain(s: &NumericalSemigroup, json_mode: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let domain = s.dilatation_domain();
    let human = format!("M - 2M = {domain}\nvalid shifts: every a >= 0 in this set");
    emit(
        json_mode,
        Some(s),
        json!({ "domain": cofinite_json(&domain) }),
        human,
    );
    Ok(ExitCode::SUCCESS)
}

fn classify(
    s: &NumericalSemigroup,
    json_mode: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let predicates = s.predicates();
    let reduction = s.canonical_reduction();
    let omega = s.canonical_ideal();
    let trace = s.trace_ideal();
    let almost = s.is_almost_symmetric();
    let two_agl = s.is_two_agl();
    let nearly = s.is_nearly_gorenstein();
    let wilf = s.wilf_holds();
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let human = format!(
        "symmetric:         {}\n\
         almost symmetric:  {}\n\
         2-AGL:             {}\n\
         nearly Gorenstein: {}\n\
         MED:               {}\n\
         Arf:               {}\n\
         Wilf:              {}\n\
         canonical reduction: ({}, {})\n\
         \u{3a9} = {omega}\n\
         tr = {trace}",
        yes_no(predicates.symmetric),
        yes_no(almost),
        yes_no(two_agl),
        yes_no(nearly),
        yes_no(predicates.med),
        yes_no(predicates.arf),
        yes_no(wilf),
        reduction.reduction_number,
        reduction.excess,
    );
    let result = json!({
        "symmetric": predicates.symmetric,
        "almost_symmetric": almost,
        "two_agl": two_agl,
        "nearly_gorenstein": nearly,
        "med": predicates.med,
        "arf": predicates.arf,
        "wilf": wilf,
        "canonical_reduction": {
            "reduction_number": reduction.reduction_number,
            "excess": reduction.excess,
        },
        "canonical_ideal": cofinite_json(&omega),
        "trace_ideal": cofinite_json(&trace),
    });
    emit(json_mode, Some(s), result, human);
    Ok(ExitCode::SUCCESS)
}

fn presentation(
    s: &NumericalSemigroup,
    json_mode: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let profile = s.presentation_profile();
    let contributions: Vec<(i64, i64)> = profile
        .contributions
        .iter()
        .map(|(&degree, &count)| (degree, count))
        .collect();
    let mut human = format!("\u{3bc} = {}", profile.mu);
    if contributions.is_empty() {
        human.push_str("\nno relations");
    } else {
        human.push_str("\ndegree contributions:");
        for (degree, count) in &contributions {
            let _ = write!(human, " {degree}:{count}");
        }
    }
    let result = json!({ "mu": profile.mu, "contributions": contributions });
    emit(json_mode, Some(s), result, human);
    Ok(ExitCode::SUCCESS)
}

fn verify(
    suite: Suite,
    max_genus: i64,
    max_a: i64,
    json_mode: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let report: ScanReport = match suite {
        Suite::Section2 => verify_invariant_transfers(max_genus, max_a),
        Suite::Section3 => verify_classification_transfers(max_genus, max_a),
        Suite::Disjointness => verify_classification_coherence(max_genus),
    };
    let mut human = format!(
        "checked {} semigroups, {} pairs\n{} violations",
        report.semigroups,
        report.pairs,
        report.violations.len()
    );
    for violation in &report.violations {
        let _ = write!(human, "\n{violation}");
    }
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({ "semigroup": v.semigroup, "shift": v.shift, "detail": v.detail }))
        .collect();
    let result = json!({
        "semigroups": report.semigroups,
        "pairs": report.pairs,
        "violations": violations,
    });
    emit(json_mode, None, result, human);
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn scan_q28(
    max_genus: i64,
    max_a: i64,
    log: Option<&std::path::Path>,
    json_mode: bool,
) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let records = scan_relation_count_gaps(max_genus, max_a)?;
    if let Some(path) = log {
        let mut contents = String::new();
        for record in &records {
            contents.push_str(&record.log_line());
            contents.push('\n');
        }
        std::fs::write(path, contents)?;
    }
    let nonzero: Vec<&nsg_core::scan::RelationGapRecord> =
        records.iter().filter(|r| r.gap != 0).collect();
    let mut human = String::new();
    if log.is_none() {
        for record in &records {
            human.push_str(&record.log_line());
            human.push('\n');
        }
    }
    let _ = write!(
        human,
        "scanned {} pairs, {} with nonzero gap",
        records.len(),
        nonzero.len()
    );
    if let Some(worst) = nonzero.iter().max_by_key(|r| r.gap.abs()) {
        let _ = write!(human, "\nlargest |gap|: {}", worst.log_line());
    }
    let json_records: Vec<Value> = records
        .iter()
        .map(|r| {
            json!({
                "generators": r.generators,
                "shift": r.shift,
                "mu_base": r.mu_base,
                "mu_dilated": r.mu_dilated,
                "gap": r.gap,
            })
        })
        .collect();
    let result = json!({
        "pairs": records.len(),
        "nonzero_gaps": nonzero.len(),
        "records": json_records,
    });
    emit(json_mode, None, result, human);
    Ok(ExitCode::SUCCESS)
}

fn enumerate(genus: i64, json_mode: bool) -> Result<ExitCode, Box<dyn std::error::Error>> {
    if genus < 1 {
        return Err("genus must be at least 1".into());
    }
    let levels = nsg_core::enumerate::enumerate_by_genus(genus);
    let level = levels.last().expect("nonempty for genus >= 1");
    let mut human = format!("genus {genus}: {} semigroups", level.len());
    for s in level {
        let _ = write!(human, "\n{s}  gaps {}", braces(s.gaps()));
    }
    let semigroups: Vec<Value> = level.iter().map(semigroup_json).collect();
    let result = json!({ "genus": genus, "count": level.len(), "semigroups": semigroups });
    emit(json_mode, None, result, human);
    Ok(ExitCode::SUCCESS)
}
