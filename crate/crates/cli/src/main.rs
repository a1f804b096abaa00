//! `sdl`: parse, check, classify and lint Manchester-syntax ontologies.
//!
//! Exit codes: 0 for a positive verdict, 1 for a negative one, 2 for usage,
//! input or resource errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sdl_core::classify::{classify_with, unsatisfiable_classes_with, ClassifyError, UnsatClass};
use sdl_core::corpus::{load_corpus, verify, CorpusError};
use sdl_core::kb::{resolve_imports, Catalog, KnowledgeBase};
use sdl_core::lint::{has_errors, lint, LintConfig};
use sdl_core::logic::to_gcis;
use sdl_core::syntax::{parse_concept, parse_ontology, render_ontology, ConceptExpr, PrefixEnv, Renderer};
use sdl_core::tableau::{Clash, Reasoner, ReasonerError, TableauConfig};

#[derive(Debug, Parser)]
#[command(name = "sdl", version, about = "Ontology parser, reasoner, classifier and linter")]
struct Cli {
    /// Catalog mapping imported ontology IRIs to files [default: catalog.json next to the root file]
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Completion-graph size limit per satisfiability test
    #[arg(long, global = true, env = "SDL_MAX_NODES")]
    max_nodes: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a single file and print it in normalized form
    Parse { file: PathBuf },
    /// Check consistency of a file and its imports
    Check { file: PathBuf },
    /// Print the inferred class hierarchy
    Classify { file: PathBuf },
    /// Test satisfiability of a class expression
    Sat {
        file: PathBuf,
        #[arg(long)]
        concept: String,
    },
    /// Test whether one class expression subsumes another
    Subsumes {
        file: PathBuf,
        #[arg(long)]
        sub: String,
        #[arg(long)]
        sup: String,
    },
    /// List unsatisfiable named classes
    UnsatClasses { file: PathBuf },
    /// Check definitions, sources and declarations
    Lint {
        file: PathBuf,
        /// lint.json configuration
        #[arg(long)]
        config: Option<PathBuf>,
        /// Lint imported ontologies as well as the root
        #[arg(long)]
        include_imports: bool,
    },
    /// Verify the bundled corpus: consistency, entailment manifest and lint
    CorpusVerify,
}

/// An operational failure, reported on stderr with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(message)) => {
            eprintln!("{message}");
            ExitCode::from(2)
        }
    }
}

struct Loaded {
    kb: KnowledgeBase,
    file: String,
    env: PrefixEnv,
}

impl Loaded {
    fn renderer(&self) -> Renderer {
        Renderer::new(&self.env)
    }

    fn concept(&self, flag: &str, text: &str) -> Result<ConceptExpr, Failure> {
        parse_concept(text, &self.env).map_err(|e| Failure(format!("{flag}:{e}")))
    }

    fn reasoner(&self, config: TableauConfig) -> Result<Reasoner<'_>, Failure> {
        Reasoner::new(&self.kb, config).map_err(|e| self.reasoner_failure(e))
    }

    /// Attaches a source location to a reasoner error: the first axiom that
    /// is unsupported on its own, else the root file.
    fn reasoner_failure(&self, e: ReasonerError) -> Failure {
        let at = match &e {
            ReasonerError::Unsupported(_) => self
                .kb
                .axioms
                .iter()
                .position(|a| to_gcis(std::slice::from_ref(a)).is_err())
                .map(|i| self.kb.location(i)),
            ReasonerError::ResourceLimit { .. } => None,
        };
        let (file, line) = at.unwrap_or((&self.file, 1));
        Failure(format!("{file}:{line}:1: {e}"))
    }
}

fn load(cli: &Cli, file: &Path) -> Result<Loaded, Failure> {
    let catalog = match &cli.catalog {
        Some(path) => Catalog::load(path)?,
        None => {
            let sibling = file.parent().unwrap_or(Path::new(".")).join("catalog.json");
            if sibling.is_file() {
                Catalog::load(&sibling)?
            } else {
                Catalog::default()
            }
        }
    };
    let kb = resolve_imports(file, &catalog)?;
    let env = PrefixEnv::for_ontology(&kb.root_ontology().ast);
    Ok(Loaded { kb, file: file.display().to_string(), env })
}

fn config(cli: &Cli) -> TableauConfig {
    let mut config = TableauConfig::default();
    if let Some(n) = cli.max_nodes {
        config.max_nodes = n;
    }
    config
}

fn json(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("json value serializes")
}

fn clash_json(l: &Loaded, clash: &Option<Clash>) -> serde_json::Value {
    match clash {
        None => serde_json::Value::Null,
        Some(c) => serde_json::json!({
            "kind": c.kind.to_string(),
            "axioms": c.axioms.iter().map(|&i| {
                let (file, line) = l.kb.location(i);
                serde_json::json!({ "file": file, "line": line })
            }).collect::<Vec<_>>(),
        }),
    }
}

fn clash_text(l: &Loaded, clash: &Option<Clash>) -> String {
    let Some(c) = clash else { return String::new() };
    let mut out = format!("clash: {}\n", c.kind);
    for &i in &c.axioms {
        let (file, line) = l.kb.location(i);
        out.push_str(&format!("  {file}:{line}: {}\n", l.renderer().axiom(&l.kb.axioms[i])));
    }
    out
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Parse { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure(format!("{}:1:1: {e}", file.display())))?;
            let ast = parse_ontology(&text).map_err(|e| Failure(format!("{}:{e}", file.display())))?;
            print!("{}", render_ontology(&ast));
            Ok(true)
        }
        Command::Check { file } => {
            let l = load(cli, file)?;
            let result = l.reasoner(config(cli))?.is_consistent().map_err(|e| l.reasoner_failure(e))?;
            let ok = result.is_satisfiable();
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json(serde_json::json!({ "consistent": ok, "clash": clash_json(&l, &result.clash) }))
                ),
                Format::Text => print!("{}\n{}", if ok { "consistent" } else { "inconsistent" }, clash_text(&l, &result.clash)),
            }
            Ok(ok)
        }
        Command::Classify { file } => {
            let l = load(cli, file)?;
            match classify_with(&l.kb, config(cli)) {
                Ok(t) => {
                    let r = l.renderer();
                    let shown = t.map_names(|n| r.name(n));
                    match cli.format {
                        Format::Json => println!("{}", shown.to_json()),
                        Format::Text => print!("{}", shown.to_text()),
                    }
                    Ok(true)
                }
                Err(ClassifyError::InconsistentKB { clash }) => {
                    match cli.format {
                        Format::Json => println!(
                            "{}",
                            json(serde_json::json!({ "consistent": false, "clash": clash_json(&l, &clash) }))
                        ),
                        Format::Text => print!("inconsistent\n{}", clash_text(&l, &clash)),
                    }
                    Ok(false)
                }
                Err(ClassifyError::Reasoner(e)) => Err(l.reasoner_failure(e)),
                Err(e) => Err(e.into()),
            }
        }
        Command::Sat { file, concept } => {
            let l = load(cli, file)?;
            let c = l.concept("--concept", concept)?;
            let reasoner = l.reasoner(config(cli))?;
            let clash = reasoner.check(&c).map_err(|e| l.reasoner_failure(e))?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json(serde_json::json!({
                        "verdict": if clash.is_none() { "satisfiable" } else { "unsatisfiable" },
                        "clash": clash_json(&l, &clash),
                    }))
                ),
                Format::Text => print!(
                    "{}\n{}",
                    if clash.is_none() { "satisfiable" } else { "unsatisfiable" },
                    clash_text(&l, &clash)
                ),
            }
            Ok(clash.is_none())
        }
        Command::Subsumes { file, sub, sup } => {
            let l = load(cli, file)?;
            let (c, d) = (l.concept("--sub", sub)?, l.concept("--sup", sup)?);
            let holds = l.reasoner(config(cli))?.subsumes(&c, &d).map_err(|e| l.reasoner_failure(e))?;
            match cli.format {
                Format::Json => println!("{}", json(serde_json::json!({ "subsumes": holds }))),
                Format::Text => println!("{}", if holds { "yes" } else { "no" }),
            }
            Ok(holds)
        }
        Command::UnsatClasses { file } => {
            let l = load(cli, file)?;
            l.reasoner(config(cli))?;
            let found = unsatisfiable_classes_with(&l.kb, config(cli)).map_err(|e| l.reasoner_failure(e))?;
            let r = l.renderer();
            let found: Vec<UnsatClass> = found.into_iter().map(|u| UnsatClass { name: r.name(&u.name), ..u }).collect();
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&found)?),
                Format::Text => {
                    for u in &found {
                        println!("{} ⊑ owl:Nothing ({})", u.name, u.clash);
                        for a in &u.axioms {
                            println!("  {}:{}: {}", a.file, a.line, a.axiom);
                        }
                    }
                }
            }
            Ok(found.is_empty())
        }
        Command::Lint { file, config: path, include_imports } => {
            let l = load(cli, file)?;
            let mut lint_config = match path {
                Some(p) => {
                    let text = std::fs::read_to_string(p).map_err(|e| Failure(format!("{}:1:1: {e}", p.display())))?;
                    LintConfig::from_json(&text)
                        .map_err(|e| Failure(format!("{}:{}:{}: {e}", p.display(), e.line(), e.column())))?
                }
                None => LintConfig::default(),
            };
            lint_config.include_imports |= include_imports;
            let findings = lint(&l.kb, &lint_config);
            for f in &findings {
                match cli.format {
                    Format::Json => println!("{}", serde_json::to_string(f)?),
                    Format::Text => println!("{f}"),
                }
            }
            Ok(!has_errors(&findings))
        }
        Command::CorpusVerify => {
            let (kb, manifest) = load_corpus()?;
            let report = verify(&kb, &manifest).map_err(|e| match e {
                CorpusError::CorpusCorrupt(m) => Failure(format!("corpus/manifest.json:1:1: {m}")),
                other => Failure(format!("corpus/sde.omn:1:1: {other}")),
            })?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => {
                    println!("{}", if report.consistent { "consistent" } else { "inconsistent" });
                    println!("classes: {}", report.class_count);
                    println!("unsatisfiable classes: {}", report.unsatisfiable.len());
                    for u in &report.unsatisfiable {
                        println!("  {} ({})", u.name, u.clash);
                    }
                    let passed = report.entries.iter().filter(|e| e.passed()).count();
                    println!("manifest: {passed}/{} entries as expected", report.entries.len());
                    for e in report.entries.iter().filter(|e| !e.passed()) {
                        println!("  FAIL {} (expected {}, {})", e.entry.axiom, e.entry.expected, e.entry.source);
                    }
                    println!("lint errors: {}", report.lint_errors.len());
                    for f in &report.lint_errors {
                        println!("  {f}");
                    }
                }
            }
            Ok(report.passed())
        }
    }
}
