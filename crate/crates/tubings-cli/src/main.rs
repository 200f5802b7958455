//! Command-line front end: enumeration, f-vectors, conversions, cellular
//! projections, algebra products and coproducts, the closed simplex
//! formula, and the verification drivers.
//!
//! Exit codes: 0 success, 1 domain error (invalid input object), 2
//! verification failure, 64 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use tubings::algebra::{
    coproduct, hom_map, product, simplex_formula, Algebra, AlgebraMap, BasisElement, LinCombo,
};
use tubings::bijections::{
    partition_to_tubing, perm_to_tubing, tau_classic, tree_to_tubing, tubing_to_partition,
    tubing_to_perm, tubing_to_tree, LeveledTree, OrderedPartition, Permutation, PlanarTree,
};
use tubings::graph::{GraphFamily, SimpleGraph};
use tubings::projections::{project_map, ProjectionMap};
use tubings::tubing::{
    count_tubings, f_vector, for_each_tubing, parse_tubing_literal, RankFilter, Tubing,
};
use tubings::verify::{verify, Bounds, Property};

#[derive(Parser)]
#[command(
    name = "tubings",
    version,
    about = "Graph associahedra: tubings, projections, and their graded algebras",
    after_help = "Grammars:\n  \
        tubing      n=4;{4}{1,4}{1,3,4}     (universal tube omitted)\n  \
        graph       family:cycle,n:4  or  n=4;edges=(1-2,2-3,3-4)\n  \
        permutation 2431  or  2,4,3,1\n  \
        partition   ({1,2,4},{3})\n  \
        tree        ((..)(.(..)))           (`.` is a leaf)\n  \
        basis elt   1 | null(5) | a tubing literal\n  \
        map         tonks-p | tonks-c | tonks-w | tonks-delta | edges=1-3,2-4"
)]
struct Cli {
    /// Emit JSON (default when TUBINGS_OUTPUT=json).
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph family: complete | cycle | path | edgeless.
    #[arg(long)]
    family: Option<String>,
    /// Node count for --family.
    #[arg(long)]
    n: Option<usize>,
    /// Explicit graph literal (overrides --family/--n).
    #[arg(long)]
    graph: Option<String>,
}

impl GraphArgs {
    fn build(&self) -> Result<SimpleGraph, CliError> {
        if let Some(g) = &self.graph {
            return Ok(SimpleGraph::parse(g)?);
        }
        match (&self.family, self.n) {
            (Some(f), Some(n)) => Ok(GraphFamily::parse(f)?.build(n)?),
            _ => Err(CliError::Usage(
                "need either --graph or both --family and --n".into(),
            )),
        }
    }
}

enum CliError {
    /// Malformed command line: exit 64.
    Usage(String),
    /// Invalid domain object: exit 1.
    Domain(tubings::Error),
}

impl From<tubings::Error> for CliError {
    fn from(e: tubings::Error) -> CliError {
        CliError::Domain(e)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List or count the tubings of a graph.
    Enumerate {
        #[command(flatten)]
        graph: GraphArgs,
        /// Rank filter: all | vertices | an integer.
        #[arg(long, default_value = "all")]
        rank: String,
        /// Print only the number of tubings.
        #[arg(long)]
        count: bool,
    },
    /// Face counts of the graph associahedron, indexed by dimension.
    Fvector {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Convert between permutations, partitions, trees and tubings.
    Convert {
        /// Input kind: perm | partition | tree | tubing.
        #[arg(long)]
        from: String,
        /// Output kind: perm | partition | tree | tubing.
        #[arg(long)]
        to: String,
        /// The object, in its grammar.
        #[arg(long)]
        input: String,
    },
    /// Apply a cellular projection to a tubing.
    Project {
        /// tonks-p | tonks-c | tonks-w | tonks-delta | edges=1-3,2-4.
        #[arg(long)]
        map: String,
        /// The tubing to project.
        #[arg(long)]
        input: String,
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Multiply two basis elements in a graded algebra.
    Multiply {
        /// ssym | ysym | wsym | dsym | ssym-tilde | ... | dsym-tilde.
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Coproduct of a basis element.
    Coproduct {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        input: String,
    },
    /// Apply a projection-induced algebra homomorphism to a basis element.
    Hom {
        /// ssym-to-wsym | wsym-to-ysym | ssym-to-dsym | ssym-to-ysym.
        #[arg(long)]
        which: String,
        /// Source algebra (vertex or face flavor of the map's source).
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        input: String,
    },
    /// The closed-form simplex product e_j^p . e_l^q.
    Formula {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        q: usize,
    },
    /// Run a verification property.
    Verify {
        /// assoc | coassoc | hom | bialgebra | theta-commute |
        /// tonks-factorization | formula-vs-template | module-consistency |
        /// counting.
        #[arg(long)]
        property: String,
        /// Algebra argument for assoc/coassoc.
        #[arg(long)]
        algebra: Option<String>,
        /// Map argument for hom.
        #[arg(long)]
        which: Option<String>,
        /// Exhaustive degree bound (per-property default).
        #[arg(long)]
        n: Option<usize>,
        /// Random sample count beyond the exhaustive bound.
        #[arg(long)]
        limit: Option<u64>,
        /// Seed for the sampled part.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json || std::env::var("TUBINGS_OUTPUT").as_deref() == Ok("json");
    match run(cli.command, json) {
        Ok((text, code)) => {
            let emitted = if let Some(path) = &cli.out {
                std::fs::write(path, text.as_bytes()).map_err(|e| e.to_string())
            } else {
                writeln!(std::io::stdout(), "{}", text.trim_end_matches('\n'))
                    .map_err(|e| e.to_string())
            };
            if let Err(e) = emitted {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}\nrun `tubings --help` for the grammars");
            ExitCode::from(64)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn combo_terms_json(c: &LinCombo) -> serde_json::Value {
    json!(c
        .iter()
        .map(|(b, coeff)| json!({"coeff": coeff.to_string(), "basis": b.to_string()}))
        .collect::<Vec<_>>())
}

fn run(command: Command, json: bool) -> Result<(String, u8), CliError> {
    match command {
        Command::Enumerate { graph, rank, count } => {
            let g = graph.build()?;
            let filter = match rank.as_str() {
                "all" => RankFilter::All,
                "vertices" => RankFilter::Vertices,
                other => RankFilter::Exact(
                    other
                        .parse()
                        .map_err(|_| tubings::Error::Parse(format!("bad rank `{other}`")))?,
                ),
            };
            if count {
                let total = count_tubings(&g, filter);
                let out = if json {
                    json!({"graph": g.to_string(), "rank": rank, "count": total}).to_string()
                } else {
                    total.to_string()
                };
                return Ok((out, 0));
            }
            let mut lines = Vec::new();
            for_each_tubing(&g, filter, |t| lines.push(t.to_string()));
            let out = if json {
                json!({
                    "graph": g.to_string(),
                    "rank": rank,
                    "count": lines.len(),
                    "tubings": lines,
                })
                .to_string()
            } else {
                lines.join("\n")
            };
            Ok((out, 0))
        }
        Command::Fvector { graph } => {
            let g = graph.build()?;
            let fv = f_vector(&g);
            let out = if json {
                json!({"graph": g.to_string(), "f_vector": fv}).to_string()
            } else {
                fv.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            Ok((out, 0))
        }
        Command::Convert { from, to, input } => {
            let output = convert(&from, &to, &input)?;
            let out = if json {
                json!({"from": from, "to": to, "input": input, "output": output}).to_string()
            } else {
                output
            };
            Ok((out, 0))
        }
        Command::Project { map, input, graph } => {
            let map = ProjectionMap::parse(&map)?;
            let (n, tubes) = parse_tubing_literal(&input)?;
            let host = if graph.graph.is_some() || graph.family.is_some() {
                graph.build()?
            } else {
                map.default_host(n)?
            };
            let t = Tubing::validate(host.clone(), tubes)?;
            let image = project_map(&map, &host, &t)?;
            let out = if json {
                json!({
                    "input": t.to_string(),
                    "graph": host.to_string(),
                    "image_graph": image.graph().to_string(),
                    "output": image.to_string(),
                })
                .to_string()
            } else {
                image.to_string()
            };
            Ok((out, 0))
        }
        Command::Multiply {
            algebra,
            left,
            right,
        } => {
            let alg = Algebra::parse(&algebra)?;
            let a = BasisElement::parse(alg, &left)?;
            let b = BasisElement::parse(alg, &right)?;
            let prod = product(alg, &LinCombo::basis(a), &LinCombo::basis(b))?;
            let out = if json {
                json!({
                    "algebra": alg.name(),
                    "degree": prod.homogeneous_degree(),
                    "terms": combo_terms_json(&prod),
                })
                .to_string()
            } else {
                prod.to_string()
            };
            Ok((out, 0))
        }
        Command::Coproduct { algebra, input } => {
            let alg = Algebra::parse(&algebra)?;
            let b = BasisElement::parse(alg, &input)?;
            let degree = b.degree();
            let cop = coproduct(alg, &b)?;
            let out = if json {
                json!({
                    "algebra": alg.name(),
                    "degree": degree,
                    "terms": cop
                        .iter()
                        .map(|((l, r), c)| json!({
                            "coeff": c.to_string(),
                            "left": l.to_string(),
                            "right": r.to_string(),
                        }))
                        .collect::<Vec<_>>(),
                })
                .to_string()
            } else {
                cop.to_string()
            };
            Ok((out, 0))
        }
        Command::Hom {
            which,
            algebra,
            input,
        } => {
            let map = AlgebraMap::parse(&which)?;
            let source = Algebra::parse(&algebra)?;
            let b = BasisElement::parse(source, &input)?;
            let (target, image) = hom_map(map, source, &LinCombo::basis(b))?;
            let out = if json {
                json!({
                    "map": map.name(),
                    "algebra": target.name(),
                    "degree": image.homogeneous_degree(),
                    "terms": combo_terms_json(&image),
                })
                .to_string()
            } else {
                image.to_string()
            };
            Ok((out, 0))
        }
        Command::Formula { p, l, q } => {
            let combo = simplex_formula(p, l, q)?;
            let out = if json {
                json!({
                    "algebra": Algebra::Dsym.name(),
                    "degree": combo.homogeneous_degree(),
                    "terms": combo_terms_json(&combo),
                })
                .to_string()
            } else {
                combo.to_string()
            };
            Ok((out, 0))
        }
        Command::Verify {
            property,
            algebra,
            which,
            n,
            limit,
            seed,
        } => {
            let property = Property::parse(&property, algebra.as_deref(), which.as_deref())?;
            let bounds = Bounds {
                max_degree: n,
                limit,
                seed: seed.unwrap_or(Bounds::default().seed),
            };
            let report = verify(&property, &bounds)?;
            let code = if report.passed { 0 } else { 2 };
            let out = if json {
                json!({
                    "property": report.property,
                    "pass": report.passed,
                    "cases": report.cases,
                    "counterexample": report.counterexample,
                })
                .to_string()
            } else {
                report.to_string()
            };
            Ok((out, code))
        }
    }
}

fn convert(from: &str, to: &str, input: &str) -> tubings::Result<String> {
    let unsupported = || {
        Err(tubings::Error::Parse(format!(
            "unsupported conversion `{from}` -> `{to}`"
        )))
    };
    match (from, to) {
        ("perm", "tubing") => {
            let p = Permutation::parse(input)?;
            Ok(perm_to_tubing(&p)?.to_string())
        }
        ("perm", "tree") => {
            let p = Permutation::parse(input)?;
            Ok(tau_classic(&p).to_string())
        }
        ("perm", "partition") => {
            let p = Permutation::parse(input)?;
            Ok(OrderedPartition::from_permutation(&p).to_string())
        }
        ("partition", "tubing") => {
            let p = OrderedPartition::parse(input)?;
            Ok(partition_to_tubing(&p)?.to_string())
        }
        ("partition", "tree") => {
            let p = OrderedPartition::parse(input)?;
            Ok(LeveledTree::from_partition(p).underlying_tree().to_string())
        }
        ("tree", "tubing") => {
            let t = PlanarTree::parse(input)?;
            Ok(tree_to_tubing(&t)?.to_string())
        }
        ("tubing", "perm") => {
            let (n, tubes) = parse_tubing_literal(input)?;
            let t = Tubing::validate(GraphFamily::Complete.build(n)?, tubes)?;
            Ok(tubing_to_perm(&t)?.to_string())
        }
        ("tubing", "partition") => {
            let (n, tubes) = parse_tubing_literal(input)?;
            let t = Tubing::validate(GraphFamily::Complete.build(n)?, tubes)?;
            Ok(tubing_to_partition(&t)?.to_string())
        }
        ("tubing", "tree") => {
            let (n, tubes) = parse_tubing_literal(input)?;
            let t = Tubing::validate(GraphFamily::Path.build(n)?, tubes)?;
            Ok(tubing_to_tree(&t)?.to_string())
        }
        _ => unsupported(),
    }
}
