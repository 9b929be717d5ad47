//! Command-line front-end: enumerate tree families, search labelings, build
//! and verify decomposition certificates, and run the feasibility arithmetic.
//!
//! Exit codes: 0 success/verified, 1 verification failed or a counterexample
//! was found, 2 usage or validation error, 3 search budget exhausted.

use clap::{Parser, Subcommand, ValueEnum};
use semigraceful::decomposition::{
    build_rotation_decomposition, family_pipeline, reproduce_eggleton, verify_cover,
    CoverageVerdict, DecompositionError, VerifiedFamily,
};
use semigraceful::document::{
    render_catalog, render_feasibility, render_labeling_list, CertificateDocument,
};
use semigraceful::feasibility::{minimal_family_multiplicity, FeasibilityReport};
use semigraceful::labeling::{
    find_graceful_labeling, find_semigraceful_labeling, is_graceful_labeling,
    is_semigraceful_labeling, Convention, SearchOutcome, VertexLabeling, DEFAULT_SEARCH_BUDGET,
};
use semigraceful::trees::{
    enumerate_trees_with_max, tree_count, tree_count_fixture, Tree, DEFAULT_MAX_ORDER,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Environment variable overriding the default per-tree search budget.
const BUDGET_ENV: &str = "SEMIGRACEFUL_BUDGET";

#[derive(Parser)]
#[command(
    name = "semigraceful",
    version,
    about = "Tree families, graceful/semigraceful labelings, and cyclic multigraph decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all non-isomorphic free trees of one order.
    Trees {
        #[arg(long)]
        order: usize,
        /// Raise or lower the enumeration order limit.
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// Write the catalog document here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the catalog document instead of the human summary.
        #[arg(long)]
        machine: bool,
    },
    /// Search one labeling per tree of the given order.
    Label {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        mode: LabelMode,
        /// Per-tree node-expansion limit (default 10^8, or $SEMIGRACEFUL_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        /// Write the labeling-list document here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the labeling-list document instead of per-tree lines.
        #[arg(long)]
        machine: bool,
    },
    /// Build and verify a cyclic decomposition certificate.
    Decompose {
        #[arg(long)]
        order: usize,
        /// Decompose into copies of the whole tree family.
        #[arg(long, conflicts_with = "tree_index")]
        family: bool,
        /// Decompose into rotations of this single catalog tree.
        #[arg(long)]
        tree_index: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-verify a certificate file by exact pair-coverage recount.
    Verify { certificate: PathBuf },
    /// Minimal copy count and edge multiplicity arithmetic; without --order,
    /// a survey over odd orders up to 15.
    Feasibility {
        #[arg(long)]
        order: Option<u64>,
        /// Number of trees of that order; computed when omitted and small enough.
        #[arg(long)]
        tau: Option<u64>,
        /// Print report documents instead of the table.
        #[arg(long)]
        machine: bool,
    },
    /// Build and verify the decompositions of K_5^(6) and K_7^(22).
    Eggleton {
        #[arg(long)]
        budget: Option<u64>,
        /// Directory receiving k5.cert and k7.cert (default: current directory).
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
        /// Print a summary document instead of the table.
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelMode {
    Graceful,
    Semigraceful,
}

impl From<LabelMode> for Convention {
    fn from(mode: LabelMode) -> Convention {
        match mode {
            LabelMode::Graceful => Convention::Graceful,
            LabelMode::Semigraceful => Convention::Semigraceful,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Trees {
            order,
            max_order,
            output,
            machine,
        } => cmd_trees(order, max_order, output.as_deref(), machine),
        Command::Label {
            order,
            mode,
            budget,
            output,
            machine,
        } => cmd_label(
            order,
            mode,
            resolve_budget(budget),
            output.as_deref(),
            machine,
        ),
        Command::Decompose {
            order,
            family,
            tree_index,
            budget,
            output,
        } => cmd_decompose(
            order,
            family,
            tree_index,
            resolve_budget(budget),
            output.as_deref(),
        ),
        Command::Verify { certificate } => cmd_verify(&certificate),
        Command::Feasibility {
            order,
            tau,
            machine,
        } => cmd_feasibility(order, tau, machine),
        Command::Eggleton {
            budget,
            output_dir,
            machine,
        } => cmd_eggleton(resolve_budget(budget), &output_dir, machine),
    };
    ExitCode::from(code)
}

fn resolve_budget(flag: Option<u64>) -> u64 {
    if let Some(budget) = flag {
        return budget;
    }
    if let Ok(raw) = std::env::var(BUDGET_ENV) {
        match raw.parse() {
            Ok(budget) => return budget,
            Err(_) => eprintln!("warning: ignoring unparseable {BUDGET_ENV}={raw:?}"),
        }
    }
    DEFAULT_SEARCH_BUDGET
}

fn usage_error(message: impl std::fmt::Display) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn write_file(path: &Path, contents: &str) -> Result<(), u8> {
    std::fs::write(path, contents).map_err(|e| usage_error(format!("{}: {e}", path.display())))
}

fn decomposition_exit(err: DecompositionError) -> u8 {
    let code = match err {
        DecompositionError::BudgetExhausted { .. } => EXIT_BUDGET,
        DecompositionError::SemigracefulCounterexample { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    };
    eprintln!("error: {err}");
    code
}

fn key_string(tree: &Tree) -> String {
    tree.canonical_key()
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_trees(order: usize, max_order: usize, output: Option<&Path>, machine: bool) -> u8 {
    let catalog = match enumerate_trees_with_max(order, max_order) {
        Ok(catalog) => catalog,
        Err(e) => return usage_error(e),
    };
    let doc = render_catalog(&catalog);
    if let Some(path) = output {
        if let Err(code) = write_file(path, &doc) {
            return code;
        }
    }
    if machine {
        print!("{doc}");
        return EXIT_OK;
    }
    let count = catalog.count();
    let noun = if count == 1 { "tree" } else { "trees" };
    match tree_count_fixture(order) {
        Some(tau) if tau != count => {
            println!("order {order}: {count} {noun} — MISMATCH, fixture count is {tau}");
            EXIT_FAILED
        }
        Some(_) => {
            println!("order {order}: {count} {noun} (matches the fixture count)");
            EXIT_OK
        }
        None => {
            println!("order {order}: {count} {noun}");
            EXIT_OK
        }
    }
}

fn cmd_label(
    order: usize,
    mode: LabelMode,
    budget: u64,
    output: Option<&Path>,
    machine: bool,
) -> u8 {
    let convention = Convention::from(mode);
    if convention == Convention::Semigraceful && order % 2 == 0 {
        return usage_error(format!(
            "semigraceful labelings are defined for odd orders only, got {order}"
        ));
    }
    let catalog = match enumerate_trees_with_max(order, DEFAULT_MAX_ORDER) {
        Ok(catalog) => catalog,
        Err(e) => return usage_error(e),
    };
    let mut entries: Vec<(&Tree, VertexLabeling)> = Vec::new();
    let mut exhausted: Vec<&Tree> = Vec::new();
    let mut out_of_budget: Vec<&Tree> = Vec::new();
    for tree in catalog.trees() {
        let outcome = match convention {
            Convention::Graceful => find_graceful_labeling(tree, budget),
            Convention::Semigraceful => match find_semigraceful_labeling(tree, budget) {
                Ok(outcome) => outcome,
                Err(e) => return usage_error(e),
            },
        };
        match outcome {
            SearchOutcome::Found(labeling) => {
                let verified = match convention {
                    Convention::Graceful => is_graceful_labeling(tree, &labeling),
                    Convention::Semigraceful => is_semigraceful_labeling(tree, &labeling),
                };
                if !matches!(verified, Ok(true)) {
                    eprintln!(
                        "error: search returned an invalid labeling for tree {}",
                        key_string(tree)
                    );
                    return EXIT_FAILED;
                }
                entries.push((tree, labeling));
            }
            SearchOutcome::Exhausted => exhausted.push(tree),
            SearchOutcome::BudgetExhausted => out_of_budget.push(tree),
        }
    }
    let borrowed: Vec<(&Tree, &VertexLabeling)> = entries.iter().map(|(t, l)| (*t, l)).collect();
    let doc = render_labeling_list(order, convention, &borrowed);
    if let Some(path) = output {
        if let Err(code) = write_file(path, &doc) {
            return code;
        }
    }
    if machine {
        print!("{doc}");
    } else {
        for (tree, labeling) in &entries {
            println!(
                "tree {}: labels {}",
                key_string(tree),
                labeling
                    .labels()
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        println!(
            "order {order}: {}/{} {convention} labelings found and verified",
            entries.len(),
            catalog.count()
        );
    }
    for tree in &exhausted {
        eprintln!(
            "counterexample: no {convention} labeling exists for tree {}",
            key_string(tree)
        );
    }
    for tree in &out_of_budget {
        eprintln!("budget exhausted on tree {}", key_string(tree));
    }
    if !exhausted.is_empty() {
        EXIT_FAILED
    } else if !out_of_budget.is_empty() {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

fn coverage_summary(verdict: &CoverageVerdict, multiplicity: u64) -> String {
    let pairs = verdict.table.iter().count();
    if verdict.pass {
        format!("all {pairs} pairs covered exactly {multiplicity} times")
    } else {
        format!(
            "{} of {pairs} pairs deviate from multiplicity {multiplicity}",
            verdict.table.mismatches(multiplicity).len()
        )
    }
}

fn cmd_decompose(
    order: usize,
    family: bool,
    tree_index: Option<usize>,
    budget: u64,
    output: Option<&Path>,
) -> u8 {
    if family == tree_index.is_some() {
        return usage_error("pass exactly one of --family or --tree-index");
    }
    let (doc, verdict) = if family {
        match family_pipeline_cli(order, budget) {
            Ok(pair) => pair,
            Err(code) => return code,
        }
    } else {
        match rotation_pipeline_cli(order, tree_index.unwrap(), budget) {
            Ok(pair) => pair,
            Err(code) => return code,
        }
    };
    let text = doc.render();
    let multiplicity = doc.spec.multiplicity();
    if let Some(path) = output {
        if let Err(code) = write_file(path, &text) {
            return code;
        }
        println!(
            "wrote {} certificate for K_{}^({multiplicity}) to {}",
            doc.kind,
            doc.spec.order(),
            path.display()
        );
        println!("verification: {}", coverage_summary(&verdict, multiplicity));
    } else {
        print!("{text}");
    }
    if verdict.pass {
        EXIT_OK
    } else {
        for ((a, b), count) in verdict.table.mismatches(multiplicity).iter().take(20) {
            eprintln!("pair {{{a}, {b}}}: covered {count} times, expected {multiplicity}");
        }
        EXIT_FAILED
    }
}

fn family_pipeline_cli(
    order: usize,
    budget: u64,
) -> Result<(CertificateDocument, CoverageVerdict), u8> {
    let VerifiedFamily {
        certificate,
        verdict,
    } = family_pipeline(order, budget).map_err(decomposition_exit)?;
    Ok((CertificateDocument::from_family(&certificate), verdict))
}

fn rotation_pipeline_cli(
    order: usize,
    index: usize,
    budget: u64,
) -> Result<(CertificateDocument, CoverageVerdict), u8> {
    let catalog = enumerate_trees_with_max(order, DEFAULT_MAX_ORDER).map_err(usage_error)?;
    let tree = catalog.get(index).ok_or_else(|| {
        usage_error(format!(
            "tree index {index} out of range for order {order} (catalog has {} trees)",
            catalog.count()
        ))
    })?;
    let base = match find_semigraceful_labeling(tree, budget).map_err(usage_error)? {
        SearchOutcome::Found(labeling) => labeling,
        SearchOutcome::Exhausted => {
            eprintln!(
                "counterexample: no semigraceful labeling exists for tree {}",
                key_string(tree)
            );
            return Err(EXIT_FAILED);
        }
        SearchOutcome::BudgetExhausted => {
            eprintln!(
                "error: search budget exhausted on tree {}",
                key_string(tree)
            );
            return Err(EXIT_BUDGET);
        }
    };
    let decomposition = build_rotation_decomposition(tree, &base).map_err(decomposition_exit)?;
    let verdict = verify_cover(decomposition.embeddings(), &decomposition.spec)
        .map_err(decomposition_exit)?;
    Ok((CertificateDocument::from_rotation(&decomposition), verdict))
}

fn cmd_verify(path: &Path) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => return usage_error(format!("{}: {e}", path.display())),
    };
    let doc = match CertificateDocument::parse(&text) {
        Ok(doc) => doc,
        Err(e) => return usage_error(e),
    };
    let verdict = match doc.verify() {
        Ok(verdict) => verdict,
        Err(e) => return usage_error(e),
    };
    let multiplicity = doc.spec.multiplicity();
    if verdict.pass {
        println!(
            "VERIFIED: K_{}^({multiplicity}) exactly covered by {} trees x {} rotations ({})",
            doc.spec.order(),
            doc.records.len(),
            doc.spec.order(),
            coverage_summary(&verdict, multiplicity)
        );
        EXIT_OK
    } else {
        println!("FAILED: {}", coverage_summary(&verdict, multiplicity));
        let mismatches = verdict.table.mismatches(multiplicity);
        for ((a, b), count) in mismatches.iter().take(20) {
            println!("pair {{{a}, {b}}}: covered {count} times, expected {multiplicity}");
        }
        if mismatches.len() > 20 {
            println!("... and {} more pairs", mismatches.len() - 20);
        }
        EXIT_FAILED
    }
}

fn feasibility_header() -> String {
    format!(
        "{:>5} {:>12} {:>5} {:>7} {:>12} {:>16} {:>16}",
        "p", "tau", "gcd", "k_min", "m_min", "multigraph", "family"
    )
}

fn feasibility_row(report: &FeasibilityReport) -> String {
    format!(
        "{:>5} {:>12} {:>5} {:>7} {:>12} {:>16} {:>16}",
        report.order,
        report.tau,
        report.gcd_value,
        report.k_min,
        report.m_min,
        report.multigraph_edges,
        report.family_edges
    )
}

fn cmd_feasibility(order: Option<u64>, tau: Option<u64>, machine: bool) -> u8 {
    let reports = match order {
        Some(p) => {
            let tau = match tau {
                Some(tau) => tau,
                None => match tree_count(p as usize) {
                    Ok(tau) => tau,
                    Err(e) => {
                        return usage_error(format!("{e}; pass --tau explicitly for this order"))
                    }
                },
            };
            match minimal_family_multiplicity(p, tau) {
                Ok(report) => vec![report],
                Err(e) => return usage_error(e),
            }
        }
        None => {
            if tau.is_some() {
                return usage_error("--tau needs --order");
            }
            let mut reports = Vec::new();
            for p in (3..=15u64).step_by(2) {
                let tau = tree_count(p as usize).expect("orders <= 15 are enumerable");
                reports
                    .push(minimal_family_multiplicity(p, tau).expect("odd orders >= 3 are valid"));
            }
            reports
        }
    };
    if machine {
        for report in &reports {
            print!("{}", render_feasibility(report));
        }
    } else {
        println!("{}", feasibility_header());
        for report in &reports {
            println!("{}", feasibility_row(report));
        }
    }
    EXIT_OK
}

fn cmd_eggleton(budget: u64, output_dir: &Path, machine: bool) -> u8 {
    let reproduction = match reproduce_eggleton(budget) {
        Ok(reproduction) => reproduction,
        Err(e) => return decomposition_exit(e),
    };
    if let Err(e) = std::fs::create_dir_all(output_dir) {
        return usage_error(format!("{}: {e}", output_dir.display()));
    }
    let outputs = [("k5.cert", &reproduction.k5), ("k7.cert", &reproduction.k7)];
    let mut all_pass = true;
    for (name, family) in &outputs {
        let path = output_dir.join(name);
        let doc = CertificateDocument::from_family(&family.certificate);
        if let Err(code) = write_file(&path, &doc.render()) {
            return code;
        }
        all_pass &= family.verdict.pass;
    }
    if machine {
        println!("format_version: 1");
        println!("kind: eggleton-summary");
        for (name, family) in &outputs {
            let spec = family.certificate.spec;
            println!("certificate: {name}");
            println!("order: {}", spec.order());
            println!("trees: {}", family.certificate.records.len());
            println!("multiplicity: {}", spec.multiplicity());
            println!("verified: {}", family.verdict.pass);
        }
    } else {
        println!(
            "{:>5} {:>6} {:>13} {:>6} {:>9}  certificate",
            "order", "trees", "multiplicity", "pairs", "verified"
        );
        for (name, family) in &outputs {
            let spec = family.certificate.spec;
            println!(
                "{:>5} {:>6} {:>13} {:>6} {:>9}  {}",
                spec.order(),
                family.certificate.records.len(),
                spec.multiplicity(),
                family.verdict.table.iter().count(),
                if family.verdict.pass { "yes" } else { "NO" },
                output_dir.join(name).display()
            );
        }
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}
