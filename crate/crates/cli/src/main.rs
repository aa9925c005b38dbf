use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use flexia::corpus::{self, Mismatch};
use flexia::wire::{self, Function, Query, Response, Server};
use flexia::{Engine, Pos};

#[derive(Parser)]
#[command(name = "flexia", version, about = "Rule-based Russian inflection")]
struct Cli {
    /// Directory of replacement exception tables.
    #[arg(long, global = true, env = "FLEXIA_DATA_DIR")]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Answer one query, e.g. `flexia inflect ru_noun машина cr nx`.
    Inflect {
        function: String,
        /// The word followed by grammeme codes.
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Print the full benchmark paradigm of a lemma as TSV.
    Paradigm { pos: Pos, lemma: String },
    /// Read a formula out in words, e.g. `2+3=5`.
    Synth { formula: String },
    /// Serve the NUL-terminated query protocol over TCP.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
        #[arg(long, default_value_t = wire::DEFAULT_PORT)]
        port: u16,
    },
    /// Send one query to a running server.
    Query {
        text: String,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = wire::DEFAULT_PORT)]
        port: u16,
    },
    /// Score the engine against an OpenCorpora dump.
    Verify {
        #[arg(long, env = "FLEXIA_CORPUS")]
        corpus: PathBuf,
        /// Families to score; all corpus-backed families by default.
        #[arg(long, value_delimiter = ',')]
        pos: Vec<Pos>,
        /// Lemmas per family; the whole population when omitted.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write mismatch rows here.
        #[arg(long)]
        mismatches: Option<PathBuf>,
    },
    /// Re-run mismatch rows and report which still reproduce.
    Reproduce { mismatches: PathBuf },
    /// Time per-lemma paradigm generation.
    Bench {
        #[arg(long, env = "FLEXIA_CORPUS")]
        corpus: PathBuf,
        #[arg(long, value_delimiter = ',')]
        pos: Vec<Pos>,
        #[arg(long, default_value_t = 1000)]
        sample: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Write a gzip fixture holding a seed-fixed sample of each family.
    Fixture {
        #[arg(long, env = "FLEXIA_CORPUS")]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_delimiter = ',')]
        pos: Vec<Pos>,
        #[arg(long, default_value_t = 1000)]
        sample: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

const CORPUS_FAMILIES: [Pos; 5] = [Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Gerund, Pos::Imperative];

fn families(pos: Vec<Pos>) -> Vec<Pos> {
    if pos.is_empty() {
        CORPUS_FAMILIES.to_vec()
    } else {
        pos
    }
}

fn run(cli: Cli) -> Result<()> {
    let engine = match &cli.data_dir {
        Some(dir) => Engine::from_data_dir(dir).with_context(|| format!("loading tables from {}", dir.display()))?,
        None => Engine::builtin(),
    };
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Inflect { function, args } => {
            let Some(function) = Function::from_name(&function) else { bail!("unknown function {function:?}") };
            match wire::dispatch(&engine, &Query::new(function, args)) {
                Response::Ok(text) => writeln!(out, "{text}")?,
                err => bail!("{}", err.text()),
            }
        }
        Command::Paradigm { pos, lemma } => {
            let paradigm = engine.paradigm(pos, &lemma)?;
            write!(out, "{}", paradigm.to_tsv())?;
        }
        Command::Synth { formula } => writeln!(out, "{}", engine.formula_str_to_text(&formula)?)?,
        Command::Serve { bind, port } => {
            let server = Server::bind((bind.as_str(), port), engine).with_context(|| format!("binding {bind}:{port}"))?;
            log::info!("listening on {}", server.local_addr()?);
            server.run()?;
        }
        Command::Query { text, host, port } => {
            let reply = wire::query((host.as_str(), port), &text, Duration::from_secs(10))?;
            writeln!(out, "{reply}")?;
        }
        Command::Verify { corpus: path, pos, sample, seed, mismatches } => {
            let lexicon = corpus::ingest_dump(&path)?;
            let mut rows = String::new();
            for pos in families(pos) {
                let report = corpus::verify(&engine, &lexicon, pos, sample, seed);
                writeln!(out, "{report}")?;
                for m in &report.mismatches {
                    rows.push_str(&m.to_tsv());
                    rows.push('\n');
                }
            }
            if let Some(file) = mismatches {
                fs::write(&file, rows).with_context(|| format!("writing {}", file.display()))?;
            }
        }
        Command::Reproduce { mismatches } => {
            let text = fs::read_to_string(&mismatches).with_context(|| format!("reading {}", mismatches.display()))?;
            let (mut ok, mut total) = (0, 0);
            for line in text.lines().filter(|l| !l.is_empty() && !l.starts_with("pos\t")) {
                total += 1;
                let row = Mismatch::from_tsv(line)?;
                if row.reproduce(&engine) {
                    ok += 1;
                } else {
                    writeln!(out, "does not reproduce: {line}")?;
                }
            }
            writeln!(out, "{ok}/{total} rows reproduce")?;
        }
        Command::Bench { corpus: path, pos, sample, seed } => {
            let lexicon = corpus::ingest_dump(&path)?;
            for pos in families(pos) {
                writeln!(out, "{}", corpus::bench(&engine, &lexicon, pos, sample, seed))?;
            }
        }
        Command::Fixture { corpus: path, out: file, pos, sample, seed } => {
            let lexicon = corpus::ingest_dump(&path)?;
            let samples: Vec<_> =
                families(pos).into_iter().map(|p| (p, lexicon.sample(p, Some(sample), seed))).collect();
            lexicon.write_fixture(&file, &samples)?;
            writeln!(out, "wrote {}", file.display())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
