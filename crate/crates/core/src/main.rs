//! Command-line front end: one binary, subcommand per operation, with text
//! and schema-stable JSON output. Results go to stdout (or `--out`),
//! diagnostics to stderr. Exit codes: 0 success, 2 validation error,
//! 3 enumeration guard exceeded.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyprod::classify::{
    classify_cone_pair, classify_general, classify_moment_angle, classify_poly_join, ClaimKind,
    MooreStatus, PrimeScope, RationalType, Verdict,
};
use polyprod::format::{
    metas_for_vertices, read_input, read_metas, write_complex, write_spec, ComplexFile, InputFile,
};
use polyprod::oracle::run_checks;
use polyprod::simplicial::SimplicialComplex;
use polyprod::symbolic::{
    loop_decomposition_cone, loop_decomposition_polyjoin, loop_decomposition_pushout, parse_expr,
    rational_rank_series, simplify, PushoutAtoms, PushoutVariant, SimplifyResult, SpaceExpr,
};
use polyprod::{Error, Result};

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "polyprod",
    version,
    about = "Polyhedral join products, ellipticity classification, and \
             symbolic loop-space decompositions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a complex or product-specification file and echo it canonically.
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// List the minimal missing faces of a complex.
    Mmf {
        #[arg(long)]
        input: PathBuf,
    },
    /// Decompose a complex as a join of a simplex and simplex boundaries.
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// Classify the moment-angle-type product over a complex.
    ClassifyMac {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated cell dimension per vertex (default 2 each).
        #[arg(long)]
        dims: Option<String>,
    },
    /// Classify a cone-pair product using per-vertex space metadata.
    ClassifyCone {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        meta: PathBuf,
    },
    /// Classify a general product from fibre metadata (vertex-keyed) and
    /// ambient metadata (`ambient:`-prefixed keys).
    ClassifyGeneral {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        meta: PathBuf,
    },
    /// Build a polyhedral join product from a specification file.
    Polyjoin {
        #[arg(long)]
        input: PathBuf,
    },
    /// Classify a polyhedral join product (metadata keyed by base vertex).
    PolyjoinClassify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        meta: PathBuf,
    },
    /// Emit and simplify a loop-space decomposition for a complex (with
    /// per-vertex atoms), a product specification, or a pushout variant.
    Loops {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Pushout decomposition shape: generic | full-subcomplex |
        /// null-inclusion (used when no --input is given).
        #[arg(long)]
        variant: Option<String>,
        /// Comma-separated expressions, one per vertex (default S^1 each).
        #[arg(long)]
        atoms: Option<String>,
        /// Degree cap for the James splitting and simplification.
        #[arg(long, default_value_t = 16)]
        max_degree: u64,
    },
    /// Rational homotopy ranks of the loops on a wedge of spheres.
    Growth {
        /// Comma-separated sphere dimensions, e.g. 3,3.
        #[arg(long)]
        dims: String,
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
    },
    /// Run every brute-force oracle comparison; JSON lines, one per check.
    Oracle {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Corpus size per check.
        #[arg(long, default_value_t = 120)]
        count: usize,
    },
}

struct Output {
    text: String,
    json: Value,
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(Error::Io)
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|p| {
            p.trim().parse::<u64>().map_err(|_| Error::Schema {
                pointer: "/dims".into(),
                message: format!("`{p}` is not a nonnegative integer"),
            })
        })
        .collect()
}

fn face_lists(faces: &[polyprod::simplicial::Face]) -> Vec<Vec<String>> {
    faces
        .iter()
        .map(|f| f.vertices().iter().map(|v| v.as_str().to_owned()).collect())
        .collect()
}

fn scope_text(scope: &PrimeScope) -> String {
    match scope {
        PrimeScope::AllPrimes => "at every prime".into(),
        PrimeScope::AllOddPrimes => "at every odd prime".into(),
        PrimeScope::AllButFinitelyManyUnspecified => "at all but finitely many primes".into(),
        PrimeScope::ExplicitComplement(ps) => format!("at every prime outside {ps:?}"),
        PrimeScope::SomePrime => "at some prime".into(),
    }
}

fn verdict_output(v: &Verdict) -> Output {
    let mut line = format!(
        "{} — {}",
        match v.rational_type {
            RationalType::Elliptic => "Elliptic",
            RationalType::Hyperbolic => "Hyperbolic",
            RationalType::Indeterminate => "Indeterminate",
        },
        v.citations.join(", ")
    );
    for c in &v.claims {
        let kind = match c.kind {
            ClaimKind::NoExponent => "no homotopy exponent",
            ClaimKind::FiniteExponent => "finite homotopy exponent",
            ClaimKind::ModPrHyperbolicAllR => "mod-p^r hyperbolic for all r",
        };
        line.push_str(&format!("; {kind} {}", scope_text(&c.scope)));
    }
    line.push_str(match v.moore_status {
        MooreStatus::Holds => "; Moore criterion holds",
        MooreStatus::HoldsAtOddPrimes => "; Moore criterion holds at odd primes",
        MooreStatus::Unknown => "; Moore criterion status unknown",
    });
    let mut text = line;
    for note in &v.notes {
        text.push_str(&format!("\nnote: {note}"));
    }
    text.push('\n');
    Output {
        text,
        json: serde_json::to_value(v).expect("verdict serialization cannot fail"),
    }
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    match read_input(&read_file(path)?)? {
        InputFile::Complex(k) => Ok(k),
        InputFile::Spec(_) => Err(Error::Schema {
            pointer: "/".into(),
            message: "expected a complex file, found a product specification".into(),
        }),
    }
}

fn load_spec(path: &Path) -> Result<polyprod::polyjoin::PolyJoinSpec> {
    match read_input(&read_file(path)?)? {
        InputFile::Spec(s) => Ok(s),
        InputFile::Complex(_) => Err(Error::Schema {
            pointer: "/".into(),
            message: "expected a product specification, found a complex file".into(),
        }),
    }
}

fn simplify_output(raw: &SpaceExpr, cap: u64, extra: Value) -> Result<Output> {
    let SimplifyResult {
        expr,
        trace,
        complete,
    } = simplify(raw, cap)?;
    let mut text = format!("expression: {raw}\nnormal form: {expr}\n");
    if !complete {
        text.push_str("note: partial — James remainder or step budget reached\n");
    }
    let mut json = json!({
        "expression": raw.to_string(),
        "normal_form": expr.to_string(),
        "complete": complete,
        "steps": trace.steps.iter().map(|s| json!({
            "rule": s.rule, "before": s.before, "after": s.after,
        })).collect::<Vec<_>>(),
    });
    if let Value::Object(extra) = extra {
        json.as_object_mut().unwrap().extend(extra);
    }
    Ok(Output { text, json })
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Validate { input } => match read_input(&read_file(input)?)? {
            InputFile::Complex(k) => Ok(Output {
                text: format!(
                    "ok: complex with {} vertices, {} faces\n",
                    k.vertices().len(),
                    k.faces().len()
                ),
                json: serde_json::from_str(&write_complex(&k))?,
            }),
            InputFile::Spec(s) => Ok(Output {
                text: format!(
                    "ok: product specification with {} base vertices\n",
                    s.base().vertices().len()
                ),
                json: serde_json::from_str(&write_spec(&s))?,
            }),
        },

        Command::Mmf { input } => {
            let k = load_complex(input)?;
            let mmf = k.minimal_missing_faces();
            let faces = face_lists(&mmf.faces);
            let mut text = String::new();
            for f in &faces {
                text.push_str(&format!("missing face: {{{}}}\n", f.join(",")));
            }
            for g in &mmf.ghost_singletons {
                text.push_str(&format!("ghost vertex: {}\n", g.as_str()));
            }
            text.push_str(&format!("mutually disjoint: {}\n", mmf.mutually_disjoint()));
            Ok(Output {
                text,
                json: json!({
                    "missing_faces": faces,
                    "ghost_singletons": mmf.ghost_singletons.iter()
                        .map(|v| v.as_str().to_owned()).collect::<Vec<_>>(),
                    "mutually_disjoint": mmf.mutually_disjoint(),
                }),
            })
        }

        Command::Decompose { input } => {
            let k = load_complex(input)?;
            let d = k.join_decomposition()?;
            let simplex: Vec<String> =
                d.simplex_part.iter().map(|v| v.as_str().to_owned()).collect();
            let boundaries = face_lists(&d.boundary_parts);
            let mut text = format!("simplex part: {{{}}}\n", simplex.join(","));
            for b in &boundaries {
                text.push_str(&format!("boundary part: ∂{{{}}}\n", b.join(",")));
            }
            Ok(Output {
                text,
                json: json!({ "simplex_part": simplex, "boundary_parts": boundaries }),
            })
        }

        Command::ClassifyMac { input, dims } => {
            let k = load_complex(input)?;
            let dims = match dims {
                Some(d) => parse_u64_list(d)?,
                None => vec![2; k.vertices().len()],
            };
            Ok(verdict_output(&classify_moment_angle(&k, &dims)?))
        }

        Command::ClassifyCone { input, meta } => {
            let k = load_complex(input)?;
            let metas = read_metas(&read_file(meta)?)?;
            let metas = metas_for_vertices(&metas, k.vertices(), "")?;
            Ok(verdict_output(&classify_cone_pair(&k, &metas)?))
        }

        Command::ClassifyGeneral { input, meta } => {
            let k = load_complex(input)?;
            let metas = read_metas(&read_file(meta)?)?;
            let fibres = metas_for_vertices(&metas, k.vertices(), "")?;
            let ambient = metas_for_vertices(&metas, k.vertices(), "ambient:")?;
            let ambient_elliptic: Vec<bool> =
                ambient.iter().map(|m| m.rationally_elliptic).collect();
            Ok(verdict_output(&classify_general(&k, &fibres, &ambient_elliptic)?))
        }

        Command::Polyjoin { input } => {
            let spec = load_spec(input)?;
            let built = spec.build()?;
            Ok(Output {
                text: format!(
                    "product: {} vertices, {} faces, {} maximal faces\n",
                    built.vertices().len(),
                    built.faces().len(),
                    built.maximal_faces().len()
                ),
                json: serde_json::from_str(&write_complex(&built))?,
            })
        }

        Command::PolyjoinClassify { input, meta } => {
            let spec = load_spec(input)?;
            let metas = read_metas(&read_file(meta)?)?;
            let metas = metas_for_vertices(&metas, spec.base().vertices(), "")?;
            Ok(verdict_output(&classify_poly_join(&spec, &metas)?))
        }

        Command::Loops {
            input,
            variant,
            atoms,
            max_degree,
        } => match (input, variant) {
            (Some(path), None) => match read_input(&read_file(path)?)? {
                InputFile::Complex(k) => {
                    let atoms: Vec<SpaceExpr> = match atoms {
                        Some(list) => list
                            .split(',')
                            .map(|s| parse_expr(s.trim()))
                            .collect::<Result<_>>()?,
                        None => vec![SpaceExpr::sphere(1); k.vertices().len()],
                    };
                    let raw = loop_decomposition_cone(&k, &atoms)?;
                    simplify_output(&raw, *max_degree, json!({}))
                }
                InputFile::Spec(spec) => {
                    let d = loop_decomposition_polyjoin(&spec)?;
                    let factors: Vec<Value> = d
                        .factors
                        .iter()
                        .map(|f| {
                            json!({
                                "vertex": f.vertex,
                                "l_atom": f.l_atom,
                                "h": f.h.to_string(),
                                "g_atom": f.g_atom,
                                "g_link": serde_json::to_value(
                                    ComplexFile::from_complex(&f.g_link)).unwrap(),
                                "g_deletion": serde_json::to_value(
                                    ComplexFile::from_complex(&f.g_deletion)).unwrap(),
                            })
                        })
                        .collect();
                    simplify_output(&d.expr, *max_degree, json!({ "factors": factors }))
                }
            },
            (None, Some(variant)) => {
                let raw = loop_decomposition_pushout(
                    PushoutVariant::parse(variant)?,
                    &PushoutAtoms::default(),
                );
                simplify_output(&raw, *max_degree, json!({}))
            }
            _ => Err(Error::MissingHypothesis(
                "pass exactly one of --input or --variant".into(),
            )),
        },

        Command::Growth { dims, max_degree } => {
            let dims = parse_u64_list(dims)?;
            let ranks = rational_rank_series(&dims, *max_degree)?;
            let mut text = String::new();
            for (i, r) in ranks.iter().enumerate() {
                if *r > 0 {
                    text.push_str(&format!("degree {}: rank {}\n", i + 1, r));
                }
            }
            Ok(Output {
                text,
                json: json!({ "max_degree": max_degree, "ranks": ranks }),
            })
        }

        Command::Oracle { seed, count } => {
            let reports = run_checks(*seed, *count)?;
            let mut lines = String::new();
            for r in &reports {
                lines.push_str(&serde_json::to_string(r)?);
                lines.push('\n');
            }
            if reports.iter().any(|r| !r.passed) {
                eprint!("{lines}");
                return Err(Error::SeriesInconsistent(
                    "oracle checks reported disagreements".into(),
                ));
            }
            Ok(Output {
                text: lines.clone(),
                json: Value::Null, // JSON lines are emitted as-is in both modes.
            })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = run(&cli);
    match result {
        Ok(output) => {
            let rendered = match cli.format {
                Format::Text => output.text,
                Format::Json => {
                    if output.json.is_null() {
                        output.text
                    } else {
                        let mut s = serde_json::to_string_pretty(&output.json)
                            .expect("report serialization cannot fail");
                        s.push('\n');
                        s
                    }
                }
            };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, rendered) {
                        eprintln!("error: {e}");
                        std::process::exit(2);
                    }
                }
                None => print!("{rendered}"),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
