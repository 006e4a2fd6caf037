//! `raag`: word problem, conjugacy, twisted conjugacy and conjugacy growth
//! for right-angled Artin groups given as JSON graph files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use raag::conjugacy;
use raag::extension::ExtGroup;
use raag::growth::{self, GrowthTable};
use raag::oracle;
use raag::twisted;
use raag::{DefiningGraph, Error, LengthPreservingAut, Piling, Word};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "raag",
    version,
    about = "Pilings for right-angled Artin groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Print {"answer", "witness", "stats"} as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Search for an explicit witness with the brute-force oracle (short inputs only)
    #[arg(long, global = true)]
    certify: bool,
    /// Node cap for closure searches and growth enumeration
    #[arg(long, global = true, value_name = "M")]
    budget: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a word
    Normalize {
        #[arg(long)]
        graph: PathBuf,
        word: String,
    },
    /// Decide whether two words are equal
    Wp {
        #[arg(long)]
        graph: PathBuf,
        u: String,
        v: String,
    },
    /// Decide whether two words are conjugate
    Cp {
        #[arg(long)]
        graph: PathBuf,
        u: String,
        v: String,
    },
    /// Decide whether v = phi^k(w)^-1 u w for some w
    Tcp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        aut: PathBuf,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        power: i64,
        u: String,
        v: String,
    },
    /// Decide conjugacy in the extension by the automorphism ("<word> ; t^<k>")
    ExtCp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        aut: PathBuf,
        g: String,
        h: String,
    },
    /// Conjugacy growth table as "n,c(n)" lines
    Growth {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_name = "N")]
        max: usize,
        /// Count classes of the extension by --aut instead
        #[arg(long, requires = "aut")]
        ext: bool,
        #[arg(long)]
        aut: Option<PathBuf>,
        /// Also write a gnuplot data file
        #[arg(long, value_name = "FILE")]
        gnuplot: Option<PathBuf>,
    },
}

/// Conjugator searches are exponential; only certify inputs up to this
/// length, with conjugators up to `CERTIFY_BOUND` letters.
const CERTIFY_MAX_LEN: usize = 12;
const CERTIFY_BOUND: usize = 5;

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceExhausted(_) | Error::BudgetExceeded(_) => {
                Failure::Budget(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Answer {
    answer: Value,
    witness: Option<String>,
    stats: Value,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<DefiningGraph, Failure> {
    Ok(DefiningGraph::from_json(&read(path)?)?)
}

fn load_aut(graph: &DefiningGraph, path: &Path) -> Result<LengthPreservingAut, Failure> {
    Ok(LengthPreservingAut::from_json(graph, &read(path)?)?)
}

fn verdict(yes: bool, witness: Option<String>, stats: Value) -> Answer {
    Answer {
        answer: Value::Bool(yes),
        witness,
        stats,
    }
}

fn run(cli: Cli) -> Result<Answer, Failure> {
    let budget = cli.common.budget.unwrap_or(twisted::DEFAULT_BUDGET);
    let certify = cli.common.certify;
    match cli.command {
        Command::Normalize { graph, word } => {
            let g = load_graph(&graph)?;
            let w = Word::parse(&g, &word)?;
            let n = Piling::build(&g, &w).normal_word();
            Ok(Answer {
                answer: Value::String(n.to_string(&g)),
                witness: None,
                stats: json!({ "input_length": w.len(), "length": n.len() }),
            })
        }
        Command::Wp { graph, u, v } => {
            let g = load_graph(&graph)?;
            let (u, v) = (Word::parse(&g, &u)?, Word::parse(&g, &v)?);
            let yes = Piling::build(&g, &u).equals(&Piling::build(&g, &v))?;
            let mut stats = json!({});
            if certify {
                stats["certified"] = match oracle::shuffle_equal(&g, &u, &v) {
                    Ok(agree) => Value::Bool(agree == yes),
                    Err(_) => Value::Null,
                };
            }
            Ok(verdict(yes, None, stats))
        }
        Command::Cp { graph, u, v } => {
            let g = load_graph(&graph)?;
            let (u, v) = (Word::parse(&g, &u)?, Word::parse(&g, &v)?);
            let yes = conjugacy::conjugate(&g, &u, &v);
            let witness = (certify && yes && u.len().max(v.len()) <= CERTIFY_MAX_LEN)
                .then(|| oracle::conjugate(&g, &u, &v, CERTIFY_BOUND))
                .flatten()
                .map(|w| w.to_string(&g));
            Ok(verdict(
                yes,
                witness,
                json!({ "lengths": [u.len(), v.len()] }),
            ))
        }
        Command::Tcp {
            graph,
            aut,
            power,
            u,
            v,
        } => {
            let g = load_graph(&graph)?;
            let phi = load_aut(&g, &aut)?.pow(power);
            let (u, v) = (Word::parse(&g, &u)?, Word::parse(&g, &v)?);
            let yes = twisted::tcp(&g, &u, &v, &phi, budget)?;
            let method = if phi.is_inversion() {
                "inversions"
            } else {
                "closure"
            };
            let witness = (certify && yes && u.len().max(v.len()) <= CERTIFY_MAX_LEN)
                .then(|| oracle::twisted_conjugate(&g, &u, &v, &phi, CERTIFY_BOUND))
                .flatten()
                .map(|w| w.to_string(&g));
            Ok(verdict(
                yes,
                witness,
                json!({ "lengths": [u.len(), v.len()], "method": method, "order": phi.order() }),
            ))
        }
        Command::ExtCp { graph, aut, g, h } => {
            let gr = load_graph(&graph)?;
            let grp = ExtGroup::new(&gr, load_aut(&gr, &aut)?)?;
            let (x, y) = (grp.parse(&g)?, grp.parse(&h)?);
            let yes = grp.conjugate(&x, &y, budget)?;
            let mut witness = None;
            if certify && yes && x.base.len().max(y.base.len()) <= CERTIFY_MAX_LEN {
                let gens = grp.generators();
                witness = oracle::ext_conjugator(&grp, &x, &y, CERTIFY_BOUND)?.map(|path| {
                    path.iter()
                        .map(|&i| match gens[i].texp {
                            0 => gens[i].base.to_string(&gr),
                            1 => "t".to_string(),
                            _ => "t^-1".to_string(),
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                });
            }
            Ok(verdict(yes, witness, json!({ "order": grp.order() })))
        }
        Command::Growth {
            graph,
            max,
            ext,
            aut,
            gnuplot,
        } => {
            let g = load_graph(&graph)?;
            let budget = cli.common.budget.unwrap_or(growth::DEFAULT_GROWTH_BUDGET);
            let table = match (ext, aut) {
                (true, Some(aut)) => {
                    let grp = ExtGroup::new(&g, load_aut(&g, &aut)?)?;
                    growth::ext_conj_growth(&grp, max, budget)?
                }
                _ => growth::raag_conj_growth(&g, max, budget)?,
            };
            if let Some(path) = gnuplot {
                fs::write(&path, table.to_gnuplot())
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(growth_answer(&table))
        }
    }
}

fn growth_answer(table: &GrowthTable) -> Answer {
    Answer {
        answer: json!(table.coefficients),
        witness: None,
        stats: json!({ "generators": table.generators, "note": table.note() }),
    }
}

fn print(answer: &Answer, as_json: bool) {
    if as_json {
        let out = json!({
            "answer": answer.answer,
            "witness": answer.witness,
            "stats": answer.stats,
        });
        println!("{out}");
        return;
    }
    match &answer.answer {
        Value::Bool(b) => {
            println!("{}", if *b { "YES" } else { "NO" });
            if let Some(w) = &answer.witness {
                println!("witness: {w}");
            }
        }
        Value::String(s) => println!("{s}"),
        Value::Array(cs) => {
            eprintln!("# {}", answer.stats["note"].as_str().unwrap_or_default());
            let lines: Vec<String> = cs
                .iter()
                .enumerate()
                .map(|(n, c)| format!("{n},{c}"))
                .collect();
            println!("{}", lines.join("\n"));
        }
        other => println!("{other}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.common.json;
    match run(cli) {
        Ok(answer) => {
            print(&answer, as_json);
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
