//! Command-line front end.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::aggregate::{
    average_curves, compare_to_reference, fit_quadratic_loglog, CurveCollection, QuadraticLogFit,
    DEFAULT_MIN_SUPPORT_RATIO,
};
use crate::connectivity::{
    degree_distribution, knn_curve, network_summary_with, rich_club_curve, NetworkSummary,
};
use crate::error::{Error, Result};
use crate::generators::{generate_ba, generate_er, BaParams, ErParams};
use crate::graph::{DirectedGraph, UndirectedGraph};
use crate::io::{
    load_directed, load_undirected, read_curve, write_atomic, write_curve, write_edge_list,
    write_summary, Delimiter, EdgeListFormat, SummaryFile, SummaryMetadata,
};
use crate::triangles::{directed_triangle_coefficients, triangle_coefficients};

#[derive(Debug, Parser)]
#[command(
    name = "linktopo",
    version,
    about = "Structural metrics of link graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute every metric curve and the summary of one edge list.
    Analyze(AnalyzeArgs),
    /// Print the scalar summary of one edge list as JSON.
    Summary(SummaryArgs),
    /// Average curves of several networks.
    Aggregate(AggregateArgs),
    /// Fit log10(y) = a·log10²(x) + b·log10(x) + c to a curve.
    Fit(FitArgs),
    /// Measure how far a curve lies from a fitted or reference curve.
    Compare(CompareArgs),
    /// Write a synthetic graph as an edge list.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DelimiterArg {
    Whitespace,
    Tab,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge list, one `source target` pair per line.
    pub input: PathBuf,
    /// Treat pairs as arcs.
    #[arg(long)]
    pub directed: bool,
    #[arg(long, value_enum, default_value = "whitespace")]
    pub delimiter: DelimiterArg,
    /// Lines starting with this prefix are ignored.
    #[arg(long, default_value = "#")]
    pub comment_prefix: String,
}

impl InputArgs {
    fn format(&self) -> EdgeListFormat {
        EdgeListFormat {
            delimiter: match self.delimiter {
                DelimiterArg::Whitespace => Delimiter::Whitespace,
                DelimiterArg::Tab => Delimiter::Tab,
            },
            comment_prefix: self.comment_prefix.clone(),
            directed: self.directed,
        }
    }

    fn dataset_name(&self) -> String {
        self.input
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Dataset name stored in summary.json; defaults to the input file stem.
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct SummaryArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub name: Option<String>,
}

#[derive(Debug, Args)]
pub struct AggregateArgs {
    /// Curve CSV files, one per network.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MIN_SUPPORT_RATIO)]
    pub min_support_ratio: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    pub curve: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub curve: PathBuf,
    /// Fit report JSON from `fit`; the built-in reference curve if omitted.
    #[arg(long)]
    pub reference: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Model {
    Ba,
    Er,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    /// Number of nodes.
    #[arg(long)]
    pub n: usize,
    /// Links per new node (ba).
    #[arg(long)]
    pub m: Option<usize>,
    /// Seed ring size (ba); defaults to m.
    #[arg(long)]
    pub m0: Option<usize>,
    /// Link probability (er).
    #[arg(long, conflicts_with = "links")]
    pub p: Option<f64>,
    /// Exact link count (er).
    #[arg(long)]
    pub links: Option<u64>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

/// File names written by `analyze`.
pub mod files {
    pub const DEGREE_DISTRIBUTION: &str = "pk.csv";
    pub const KNN: &str = "knn.csv";
    pub const RICH_CLUB: &str = "phi.csv";
    pub const TRIANGLE_CCDF: &str = "pc_delta.csv";
    pub const DELTA_K: &str = "delta_k.csv";
    pub const C_K: &str = "c_k.csv";
    pub const DELTA_IN: &str = "delta_in.csv";
    pub const DELTA_OUT: &str = "delta_out.csv";
    pub const SUMMARY: &str = "summary.json";
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze(a) => analyze(&a),
        Command::Summary(a) => summary(&a),
        Command::Aggregate(a) => aggregate(&a),
        Command::Fit(a) => fit(&a),
        Command::Compare(a) => compare(&a),
        Command::Generate(a) => generate(&a),
    }
}

fn load(input: &InputArgs) -> Result<(UndirectedGraph, Option<DirectedGraph>)> {
    let format = input.format();
    if input.directed {
        let d = load_directed(&input.input, &format)?;
        Ok((d.to_undirected(), Some(d)))
    } else {
        Ok((load_undirected(&input.input, &format)?, None))
    }
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let mut json = serde_json::to_string_pretty(value)?;
    json.push('\n');
    match out {
        Some(p) => write_atomic(p, json.as_bytes()),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

fn analyze(args: &AnalyzeArgs) -> Result<()> {
    let (g, directed) = load(&args.input)?;
    if g.node_count() == 0 {
        return Err(Error::EmptyNetwork);
    }
    fs::create_dir_all(&args.out_dir).map_err(|e| Error::io(&args.out_dir, e))?;

    let ((pk, knn), (phi, (tri, dtri))) = rayon::join(
        || (degree_distribution(&g), knn_curve(&g)),
        || {
            rayon::join(
                || rich_club_curve(&g),
                || {
                    rayon::join(
                        || triangle_coefficients(&g),
                        || directed.as_ref().map(directed_triangle_coefficients),
                    )
                },
            )
        },
    );

    let out = |name: &str| args.out_dir.join(name);
    write_curve(&pk?, &out(files::DEGREE_DISTRIBUTION))?;
    write_curve(&knn?, &out(files::KNN))?;
    write_curve(&phi, &out(files::RICH_CLUB))?;
    write_curve(&tri.ccdf()?, &out(files::TRIANGLE_CCDF))?;
    write_curve(&tri.delta_of_k(), &out(files::DELTA_K))?;
    write_curve(&tri.c_of_k(), &out(files::C_K))?;
    if let Some(d) = &dtri {
        write_curve(&d.delta_in_of_k(), &out(files::DELTA_IN))?;
        write_curve(&d.delta_out_of_k(), &out(files::DELTA_OUT))?;
    }

    let name = args
        .name
        .clone()
        .unwrap_or_else(|| args.input.dataset_name());
    let summary = network_summary_with(&g, &tri)?;
    write_summary(
        &SummaryFile {
            metadata: SummaryMetadata::now(name),
            summary,
        },
        &out(files::SUMMARY),
    )
}

fn summary(args: &SummaryArgs) -> Result<()> {
    let (g, _) = load(&args.input)?;
    let tri = triangle_coefficients(&g);
    let summary: NetworkSummary = network_summary_with(&g, &tri)?;
    let name = args
        .name
        .clone()
        .unwrap_or_else(|| args.input.dataset_name());
    let file = SummaryFile {
        metadata: SummaryMetadata::now(name),
        summary,
    };
    match &args.out {
        Some(p) => write_summary(&file, p),
        None => emit_json(&file, None),
    }
}

fn aggregate(args: &AggregateArgs) -> Result<()> {
    let curves = args
        .inputs
        .iter()
        .map(|p| Ok((p.display().to_string(), read_curve(p)?)))
        .collect::<Result<Vec<_>>>()?;
    let coll = CurveCollection::new(curves, args.min_support_ratio)?;
    write_curve(&average_curves(&coll), &args.out)
}

fn fit(args: &FitArgs) -> Result<()> {
    let f = fit_quadratic_loglog(&read_curve(&args.curve)?)?;
    emit_json(&f, args.out.as_deref())
}

fn compare(args: &CompareArgs) -> Result<()> {
    let curve = read_curve(&args.curve)?;
    let reference = match &args.reference {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Error::io(p, e))?;
            serde_json::from_str::<QuadraticLogFit>(&text)?
        }
        None => QuadraticLogFit::reference(),
    };
    emit_json(
        &compare_to_reference(&curve, &reference)?,
        args.out.as_deref(),
    )
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let g = match args.model {
        Model::Ba => {
            let m = args
                .m
                .ok_or_else(|| Error::InvalidParams("--m is required for ba".into()))?;
            generate_ba(BaParams {
                n_final: args.n,
                m,
                m0: args.m0.unwrap_or(m),
                seed: args.seed,
            })?
        }
        Model::Er => {
            let params = match (args.p, args.links) {
                (Some(p), None) => ErParams::with_probability(args.n, p, args.seed),
                (None, Some(l)) => ErParams::with_links(args.n, l, args.seed),
                _ => {
                    return Err(Error::InvalidParams(
                        "er needs exactly one of --p or --links".into(),
                    ))
                }
            };
            generate_er(params)?
        }
    };
    write_edge_list(&g, &args.out)
}
