//! Command-line front end: load a network file, run an analysis, print a
//! deterministic report.
//!
//! Exit codes: 0 success, 2 unreadable input or parse error, 3 enumeration
//! cap exceeded, 4 bad class key, 5 wrong network kind.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use netlat::{
    check_chi_homomorphism, check_laws, check_quotient_laws, chi, count_minima, delta_class,
    enumerate_chains, is_inducible, local_max, local_minima, parse_word, ChainError, DeltaKey,
    DirectedGraph, LatticeError, Network, NetworkError, PathError, TensorId, MAX_SEARCH_TENSORS,
};

mod report;

use report::Report;

#[derive(Parser)]
#[command(
    name = "netlat",
    version,
    about = "Chain algebra of tensor networks: law checks, class structure, spanning-tree counts, and graph inverse semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a network file and print its canonical form.
    Validate {
        path: PathBuf,
        /// Emit key=value lines instead of human text.
        #[arg(long)]
        kv: bool,
    },
    /// Verify the quasi-semilattice laws and search for an associativity
    /// counterexample.
    Laws {
        path: PathBuf,
        /// Refuse networks with more tensors than this (hard cap 12).
        #[arg(long, default_value_t = netlat::MAX_ENUMERATION_TENSORS)]
        max_tensors: usize,
        #[arg(long)]
        kv: bool,
    },
    /// Analyze one class: size, maximum, spanning-tree minima and their
    /// determinant count.
    Class {
        path: PathBuf,
        /// Comma-separated tensor ids keying the class.
        #[arg(long, value_delimiter = ',', required = true)]
        tensors: Vec<String>,
        #[arg(long)]
        kv: bool,
    },
    /// List the class keys of the quotient and verify its laws.
    Quotient {
        path: PathBuf,
        #[arg(long, default_value_t = netlat::MAX_ENUMERATION_TENSORS)]
        max_tensors: usize,
        #[arg(long)]
        kv: bool,
    },
    /// Reduce two generator words of a directed network and multiply them.
    Gis {
        path: PathBuf,
        word1: String,
        word2: String,
        #[arg(long)]
        kv: bool,
    },
    /// Print the Cuntz-Krieger relations of a directed network.
    Relations {
        path: PathBuf,
        #[arg(long)]
        kv: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<NetworkError> for Failure {
    fn from(e: NetworkError) -> Self {
        Failure::new(2, e)
    }
}

impl From<PathError> for Failure {
    fn from(e: PathError) -> Self {
        match e {
            PathError::NotDirected => Failure::new(5, e),
            other => Failure::new(2, other),
        }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::TooLarge { .. } => Failure::new(3, e),
            other => Failure::new(4, other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kv, result) = run(cli.command);
    match result {
        Ok(report) => {
            print!("{}", report.render(kv));
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> (bool, Result<Report, Failure>) {
    match command {
        Command::Validate { path, kv } => (kv, cmd_validate(&path)),
        Command::Laws {
            path,
            max_tensors,
            kv,
        } => (kv, cmd_laws(&path, max_tensors)),
        Command::Class { path, tensors, kv } => (kv, cmd_class(&path, &tensors)),
        Command::Quotient {
            path,
            max_tensors,
            kv,
        } => (kv, cmd_quotient(&path, max_tensors)),
        Command::Gis {
            path,
            word1,
            word2,
            kv,
        } => (kv, cmd_gis(&path, &word1, &word2)),
        Command::Relations { path, kv } => (kv, cmd_relations(&path)),
    }
}

fn load(path: &PathBuf) -> Result<Network, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    Ok(Network::parse(&text)?)
}

fn cmd_validate(path: &PathBuf) -> Result<Report, Failure> {
    let net = load(path)?;
    let mut report = Report::new();
    report.line(format!(
        "valid, {} vertices, {} tensors",
        net.vertex_count(),
        net.tensor_count()
    ));
    for line in net.canonical_string().lines() {
        report.line(line);
    }
    report.pair("valid", true);
    report.pair("kind", net.kind());
    report.pair("vertices", net.vertex_count());
    report.pair("tensors", net.tensor_count());
    Ok(report)
}

fn cmd_laws(path: &PathBuf, max_tensors: usize) -> Result<Report, Failure> {
    let net = load(path)?;
    let laws = check_laws(&net, max_tensors)?;
    let mut report = Report::new();
    report.both("idempotent", "idempotent", laws.idempotent);
    report.both("commutative", "commutative", laws.commutative);
    match &laws.associativity_counterexample {
        Some((a, b, c)) => {
            report.line("associativity: counterexample found");
            report.pair("counterexample", true);
            for (key, chain) in [("l1", a), ("l2", b), ("l3", c)] {
                report.line(format!("{key} = {chain}"));
                report.pair(key, chain);
            }
        }
        None => {
            report.line("associativity: no counterexample exists");
            report.pair("counterexample", false);
        }
    }
    Ok(report)
}

fn cmd_class(path: &PathBuf, tensors: &[String]) -> Result<Report, Failure> {
    let net = load(path)?;
    let mut ids = Vec::new();
    for name in tensors {
        let id = TensorId::new(name.trim()).map_err(|e| Failure::new(4, e))?;
        if net.tensor(&id).is_none() {
            return Err(Failure::new(4, ChainError::UnknownTensor(id)));
        }
        ids.push(id);
    }
    let key = DeltaKey::from_ids(&ids).map_err(|e| Failure::new(4, e))?;
    if !is_inducible(&net, &key)? {
        return Err(Failure::new(4, LatticeError::NotInducible(key)));
    }

    let class = delta_class(&net, &key)?;
    let max = local_max(&net, &key)?;
    let count = count_minima(&net, &key, 0)?;

    let mut report = Report::new();
    report.line(format!("class {key}"));
    report.pair("key", key_csv(&key));
    report.both("class_size", "size", class.len());
    report.both("local_max", "local max", &max);
    report.both("minima_count", "minima count", count);
    if key.tensor_count() <= MAX_SEARCH_TENSORS {
        let minima = local_minima(&net, &key)?;
        assert_eq!(
            minima.len() as u64,
            count,
            "determinant and enumeration must agree"
        );
        report.line("minima:");
        report.pair("minima_listed", minima.len());
        for (i, chain) in minima.iter().enumerate() {
            report.line(format!("  {chain}"));
            report.pair(format!("minimum_{i}"), chain);
        }
    } else {
        report.line("minima: not listed (tensor set above the listing cap)");
        report.pair("minima_listed", 0);
    }
    Ok(report)
}

fn key_csv(key: &DeltaKey) -> String {
    key.tensors()
        .iter()
        .map(TensorId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_quotient(path: &PathBuf, max_tensors: usize) -> Result<Report, Failure> {
    let net = load(path)?;
    let chains = enumerate_chains(&net, max_tensors)?;
    let mut sizes: BTreeMap<Option<DeltaKey>, usize> = BTreeMap::new();
    for chain in &chains {
        *sizes.entry(chi(chain)).or_insert(0) += 1;
    }
    let laws = check_quotient_laws(&net, max_tensors)?;
    let homomorphism = check_chi_homomorphism(&net, max_tensors)?;

    let mut report = Report::new();
    report.both("classes", "classes", sizes.len());
    for (i, (key, size)) in sizes.iter().enumerate() {
        let shown = key.as_ref().map_or("empty".to_string(), key_csv);
        let label = key
            .as_ref()
            .map_or("class empty".to_string(), |k| format!("class {k}"));
        report.line(format!("{label}: size {size}"));
        report.pair(format!("class_{i}"), shown);
        report.pair(format!("class_{i}_size"), size);
    }
    report.both("quotient_idempotent", "quotient idempotent", laws.idempotent);
    report.both(
        "quotient_commutative",
        "quotient commutative",
        laws.commutative,
    );
    match &laws.associativity_counterexample {
        Some((a, b, c)) => {
            report.line("quotient associativity: counterexample found");
            report.pair("quotient_counterexample", true);
            for (name, key) in [("k1", a), ("k2", b), ("k3", c)] {
                report.line(format!("{name} = {key}"));
                report.pair(name, key_csv(key));
            }
        }
        None => {
            report.line("quotient associativity: no counterexample exists");
            report.pair("quotient_counterexample", false);
        }
    }
    report.both("chi_homomorphism", "chi homomorphism", homomorphism);
    Ok(report)
}

fn cmd_gis(path: &PathBuf, word1: &str, word2: &str) -> Result<Report, Failure> {
    let net = load(path)?;
    let graph = DirectedGraph::from_network(&net)?;
    let left = parse_word(&graph, word1)?;
    let right = parse_word(&graph, word2)?;
    let product = left.product(&right);
    let mut report = Report::new();
    report.both("left", "left", &left);
    report.both("right", "right", &right);
    report.both("product", "product", &product);
    Ok(report)
}

fn cmd_relations(path: &PathBuf) -> Result<Report, Failure> {
    let net = load(path)?;
    let graph = DirectedGraph::from_network(&net)?;
    let relations = netlat::ck_relations(&graph);
    let mut report = Report::new();
    report.pair("ck1_count", relations.ck1.len());
    report.pair("ck2_count", relations.ck2.len());
    if relations.ck1.is_empty() {
        report.line("no CK1 relations");
    }
    for rel in &relations.ck1 {
        let sum = rel
            .out_edges
            .iter()
            .map(|e| format!("{e} {e}*"))
            .collect::<Vec<_>>()
            .join(" + ");
        report.line(format!("CK1 {} = {sum}", rel.vertex));
        report.pair(
            format!("ck1.{}", rel.vertex),
            rel.out_edges
                .iter()
                .map(TensorId::as_str)
                .collect::<Vec<_>>()
                .join(","),
        );
    }
    if relations.ck2.is_empty() {
        report.line("no CK2 relations");
    }
    for rel in &relations.ck2 {
        report.line(format!(
            "CK2 {} {}* <= {} : {}",
            rel.edge, rel.edge, rel.source, rel.order_holds
        ));
        report.pair(
            format!("ck2.{}", rel.edge),
            format!("{}:{}", rel.source, rel.order_holds),
        );
    }
    Ok(report)
}
