use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use superext::setfam::{for_each_mls, EnumBudget, PairOrder};
use superext::spec::parse_spec;
use superext::structure::{
    analyze_structural, certify, cross_check, small_group_table, Certified, StructureReport, TableRow,
};
use superext::{Error, PowerSet};

const EXIT_DISAGREE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser)]
#[command(name = "superext", version, about = "Minimal left ideals of superextensions of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure of the minimal left ideals of lambda(X).
    Analyze {
        /// C<n>, D<2n>, Q<2^k>, A4, products such as C2xC4, or file:<path>
        spec: String,
        /// Also tabulate lambda(X) and cross-check (order <= 6).
        #[arg(long)]
        brute: bool,
        /// List one minimal left ideal explicitly and check it against the type.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        json: bool,
        /// Maximum number of maximal linked systems to enumerate.
        #[arg(long)]
        budget: Option<u64>,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Recompute the published table of small groups.
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Count the maximal linked systems on X.
    MlsCount {
        spec: String,
        /// Write the signatures, one hex line each, to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn exit_for(err: &Error) -> u8 {
    match err {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Violation(_) => EXIT_DISAGREE,
        _ => EXIT_INPUT,
    }
}

fn budget(b: Option<u64>) -> EnumBudget {
    b.map_or(EnumBudget::unlimited(), EnumBudget::at_most)
}

fn print_report(r: &StructureReport) {
    println!("group       {}", r.group);
    println!("|E|         {}", r.idempotents);
    println!("H_e         {}", r.max_subgroup);
    println!("L           {}", r.min_left_ideal);
    println!("provenance  {}", serde_json::to_value(r.provenance).expect("enum").as_str().unwrap_or("?"));
    if !r.per_orbit.is_empty() {
        println!("orbits of maximal 2-cogroups:");
        for o in &r.per_orbit {
            println!(
                "  K = {:?} ({} conjugates)  H(K) = {}  |T_K| = {}  |[T_K]| = {}",
                o.elements, o.conjugates, o.characteristic, o.twin_sets, o.twin_orbits
            );
        }
    }
    for n in &r.notes {
        println!("note: {n}");
    }
}

fn analyze(spec: &str, brute: bool, cert: bool, json: bool, b: Option<u64>, seed: u64) -> Result<u8, Error> {
    let g = parse_spec(spec)?;
    let mut report = analyze_structural(&g)?;
    let mut code = 0;
    if brute {
        let c = cross_check(&g, budget(b))?;
        if !c.agree() {
            code = EXIT_DISAGREE;
        }
        report = c.combined();
    }
    if cert {
        let c = certify(&g, &report, seed)?;
        let ok = c.types_agree && c.isomorphism == Certified::Yes;
        report.notes.push(format!(
            "explicit minimal left ideal: {} elements, type {}, isomorphic to the structural model: {:?}",
            c.size,
            c.ideal_type.map_or_else(|| "unclassified".to_string(), |t| t.to_string()),
            c.isomorphism
        ));
        if !ok {
            code = EXIT_DISAGREE;
        }
    }
    report.check()?;
    if json {
        println!("{}", report.to_json()?);
    } else {
        print_report(&report);
    }
    Ok(code)
}

fn table(json: bool) -> Result<u8, Error> {
    let rows = small_group_table()?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(0);
    }
    let w = |r: &TableRow| {
        (r.spec.len(), r.computed.max_subgroup.to_string().len(), r.computed.min_left_ideal.to_string().len())
    };
    let (w0, w1, w2) = rows.iter().map(w).fold((1, 3, 1), |a, b| (a.0.max(b.0), a.1.max(b.1), a.2.max(b.2)));
    println!("{:w0$}  {:>4}  {:w1$}  {:w2$}  published", "X", "|E|", "H_e", "L");
    for r in &rows {
        let c = &r.computed;
        let published = if r.matches_published {
            "same".to_string()
        } else {
            format!("{} / {} / {}", r.published_idempotents, r.published_max_subgroup, r.published_min_left_ideal)
        };
        println!(
            "{:w0$}  {:>4}  {:w1$}  {:w2$}  {published}",
            r.spec,
            c.idempotents,
            c.max_subgroup.to_string(),
            c.min_left_ideal.to_string()
        );
    }
    for r in rows.iter().filter(|r| r.annotation.is_some()) {
        println!("{}: {}", r.spec, r.annotation.as_deref().unwrap_or_default());
    }
    Ok(0)
}

fn mls_count(spec: &str, out: Option<PathBuf>, b: Option<u64>) -> Result<u8, Error> {
    let g = parse_spec(spec)?;
    let ps = PowerSet::new(g)?;
    let mut sink = match &out {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            writeln!(w, "n={} pairs={}", ps.n(), ps.pairs())?;
            Some(w)
        }
        None => None,
    };
    let mut io_err = None;
    let mut seen = 0u64;
    let res = for_each_mls(&ps, PairOrder::ById, budget(b), |s| {
        seen += 1;
        if let Some(w) = sink.as_mut() {
            if let Err(e) = writeln!(w, "{}", s.to_hex()) {
                io_err.get_or_insert(e);
            }
        }
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    if let Some(mut w) = sink {
        w.flush()?;
    }
    match res {
        Ok(count) => {
            println!("{count}");
            Ok(0)
        }
        Err(Error::Budget { budget, .. }) => {
            println!("{seen} (partial: budget of {budget} reached)");
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Analyze { spec, brute, certify, json, budget, seed } => {
            analyze(&spec, brute, certify, json, budget, seed)
        }
        Command::Table { json } => table(json),
        Command::MlsCount { spec, out, budget } => mls_count(&spec, out, budget),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
