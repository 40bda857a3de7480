use std::process::exit;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use immaculate::compositions::Composition;
use immaculate::genfun::verify_genfun;
use immaculate::hecke::{apply_pi, apply_word, straighten, verify_hecke_relations, ActionResult, HeckeWord};
use immaculate::modstruct::{analyze, ModuleSpec};
use immaculate::poset::{build_poset, to_dot, to_json};
use immaculate::qsym::{characteristic, verify_identity, IdentityTag};
use immaculate::tableaux::{
    descent_set, enumerate_standard, special, DescentVariant, SpecialKind, Tableau, TableauClass,
};

const DEFAULT_MAX_N: usize = 9;

#[derive(Parser)]
#[command(name = "immaculate", version, about = "Immaculate tableau toolkit", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ShapeArg {
    /// Composition shape, comma-separated parts, e.g. 2,2,3
    #[arg(long)]
    shape: String,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux of a shape in one class
    Enumerate {
        #[command(flatten)]
        shape: ShapeArg,
        /// One of sit, set, sitstar, nset, set-sitstar, set-minus-sitstar,
        /// sit-minus-sitstar, nset-sitstar
        #[arg(long, default_value = "sit")]
        class: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print one of the distinguished tableaux of a shape
    Special {
        #[command(flatten)]
        shape: ShapeArg,
        /// One of s0, srow, scol, srowstar
        #[arg(long)]
        kind: String,
    },
    /// Print the descent set of a tableau under a variant
    Descents {
        /// Tableau, rows bottom to top separated by ';', e.g. 1,7;2,6;3,4,5
        #[arg(long)]
        tableau: String,
        /// One of di, rs, a, abar
        #[arg(long)]
        variant: String,
    },
    /// Apply a generator or a word of generators to a tableau
    Act {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        tableau: String,
        /// Generator index i of pi_i
        #[arg(long, conflicts_with = "word")]
        gen: Option<usize>,
        /// Space-separated word, applied rightmost first
        #[arg(long)]
        word: Option<String>,
    },
    /// Produce the straightening word linking a tableau to a distinguished one
    Straighten {
        #[arg(long)]
        tableau: String,
        /// One of s0, srow, scol, srowstar
        #[arg(long)]
        target: String,
    },
    /// Build the tableau poset of a shape and export it
    Poset {
        #[command(flatten)]
        shape: ShapeArg,
        /// One of text, json, dot
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Expand a class characteristic in the fundamental basis
    Expand {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        variant: String,
        #[arg(long, default_value = "sit")]
        class: String,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check an identity for a shape; exits 2 on mismatch
    Verify {
        /// EXT_SCHUR, REXT_SCHUR, X_CHAR, XY_QUOT, ZY_QUOT, BARA_SITSTAR,
        /// A_QUOT, ABAR_QUOT, RDI_DIFF, PSI_PAIRS, HECKE, or GENFUN
        #[arg(long)]
        identity: String,
        #[command(flatten)]
        shape: ShapeArg,
        /// Number of variables; defaults to the degree
        #[arg(long)]
        m: Option<usize>,
        /// Variant for the HECKE check
        #[arg(long)]
        variant: Option<String>,
    },
    /// Report the module structure over a basis class
    Analyze {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        variant: String,
        #[arg(long, default_value = "sit")]
        class: String,
        /// Subclass to quotient out
        #[arg(long)]
        quotient_by: Option<String>,
        #[arg(long, default_value = "json")]
        format: String,
    },
}

fn max_n() -> usize {
    std::env::var("IMMACULATE_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn parse_shape(s: &str) -> Result<Composition, String> {
    let alpha: Composition = s.parse().map_err(|e| format!("{e}"))?;
    let cap = max_n();
    if alpha.n() > cap {
        return Err(format!("degree {} exceeds IMMACULATE_MAX_N={}", alpha.n(), cap));
    }
    Ok(alpha)
}

// single-tableau operations are linear work, so the enumeration cap
// does not apply to them
fn parse_tableau(s: &str) -> Result<Tableau, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_flag<T: FromStr>(s: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| format!("{e}"))
}

fn action_text(res: &ActionResult, input: &Tableau) -> String {
    match res {
        ActionResult::Zero => "0".to_string(),
        other => other.image(input).expect("not zero").to_string(),
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Enumerate { shape, class, format } => {
            let alpha = parse_shape(&shape.shape)?;
            let class: TableauClass = parse_flag(&class)?;
            let tabs = enumerate_standard(&alpha, class);
            match format.as_str() {
                "text" => {
                    for t in &tabs {
                        println!("{t}");
                    }
                }
                "json" => {
                    let js = serde_json::json!({
                        "shape": alpha.parts(),
                        "class": class.flag(),
                        "tableaux": tabs.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    });
                    println!("{js}");
                }
                other => return Err(format!("unknown format `{other}`")),
            }
            Ok(0)
        }
        Command::Special { shape, kind } => {
            // constructing one distinguished tableau is linear work, so the
            // enumeration cap does not apply
            let alpha: Composition = shape.shape.parse().map_err(|e| format!("{e}"))?;
            let kind: SpecialKind = parse_flag(&kind)?;
            println!("{}", special(&alpha, kind));
            Ok(0)
        }
        Command::Descents { tableau, variant } => {
            let t = parse_tableau(&tableau)?;
            let v: DescentVariant = parse_flag(&variant)?;
            println!("{}", descent_set(&t, v));
            Ok(0)
        }
        Command::Act { variant, tableau, gen, word } => {
            let t = parse_tableau(&tableau)?;
            let v: DescentVariant = parse_flag(&variant)?;
            let res = match (gen, word) {
                (Some(i), None) => apply_pi(v, i, &t).map_err(|e| format!("{e}"))?,
                (None, Some(w)) => {
                    let w: HeckeWord = parse_flag(&w)?;
                    apply_word(v, &w, &t).map_err(|e| format!("{e}"))?
                }
                _ => return Err("exactly one of --gen and --word is required".into()),
            };
            println!("{}", action_text(&res, &t));
            Ok(0)
        }
        Command::Straighten { tableau, target } => {
            let t = parse_tableau(&tableau)?;
            let target: SpecialKind = parse_flag(&target)?;
            let word = straighten(&t, target).map_err(|e| format!("{e}"))?;
            println!("{word}");
            Ok(0)
        }
        Command::Poset { shape, format } => {
            let alpha = parse_shape(&shape.shape)?;
            let p = build_poset(&alpha);
            match format.as_str() {
                "dot" => print!("{}", to_dot(&p)),
                "json" => println!("{}", to_json(&p)),
                "text" => {
                    println!("vertices: {}", p.vertices.len());
                    println!("covers: {}", p.covers.len());
                    let sizes: Vec<String> = p.rank_sizes().iter().map(|s| s.to_string()).collect();
                    println!("rank sizes: {}", sizes.join(","));
                }
                other => return Err(format!("unknown format `{other}`")),
            }
            Ok(0)
        }
        Command::Expand { shape, variant, class, format } => {
            let alpha = parse_shape(&shape.shape)?;
            let v: DescentVariant = parse_flag(&variant)?;
            let class: TableauClass = parse_flag(&class)?;
            let q = characteristic(&alpha, v, class);
            match format.as_str() {
                "text" => println!("{}", q.text()),
                "json" => println!("{}", q.to_json()),
                other => return Err(format!("unknown format `{other}`")),
            }
            Ok(0)
        }
        Command::Verify { identity, shape, m, variant } => {
            let alpha = parse_shape(&shape.shape)?;
            let m = m.unwrap_or(alpha.n());
            let ok = match identity.as_str() {
                "HECKE" => {
                    let v: DescentVariant = parse_flag(variant.as_deref().unwrap_or("rs"))?;
                    verify_hecke_relations(v, &alpha)
                }
                "GENFUN" => {
                    let report = verify_genfun(&alpha, m);
                    for check in &report.checks {
                        if !check.ok {
                            eprintln!("mismatch: {}", check.name);
                        }
                    }
                    report.all_ok()
                }
                tag => {
                    let tag: IdentityTag = parse_flag(tag)?;
                    verify_identity(tag, &alpha, m).map_err(|e| format!("{e}"))?
                }
            };
            if ok {
                println!("OK");
                Ok(0)
            } else {
                println!("FAIL");
                Ok(2)
            }
        }
        Command::Analyze { shape, variant, class, quotient_by, format } => {
            let alpha = parse_shape(&shape.shape)?;
            let v: DescentVariant = parse_flag(&variant)?;
            let class: TableauClass = parse_flag(&class)?;
            let spec = match quotient_by {
                Some(sub) => ModuleSpec::quotient(v, class, parse_flag(&sub)?),
                None => ModuleSpec::plain(v, class),
            };
            match analyze(&alpha, &spec) {
                Ok(report) => {
                    match format.as_str() {
                        "json" => println!("{}", serde_json::to_string(&report).expect("serializable")),
                        "text" => {
                            println!("shape: {}", report.shape);
                            println!("variant: {}", report.variant);
                            println!("basis: {}", report.basis);
                            if let Some(sub) = &report.quotient_by {
                                println!("quotient by: {sub}");
                            }
                            println!("dim: {}", report.dim);
                            println!("cyclic generators: {}", report.cyclic_generators_found.join(","));
                            println!("commutant dim: {}", report.commutant_dim);
                            println!("radical dim: {}", report.radical_dim);
                            println!("indecomposable: {}", report.indecomposable);
                            println!("asserted indecomposable: {}", report.asserted_indecomposable);
                        }
                        other => return Err(format!("unknown format `{other}`")),
                    }
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("analysis failed: {e}");
                    Ok(2)
                }
            }
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            exit(code);
        }
    };
    match run(cli) {
        Ok(code) => exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            exit(1);
        }
    }
}
