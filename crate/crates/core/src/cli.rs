//! The `prefsurf` command line.
//!
//! Exit codes: 0 on success, 1 when the library rejects the input, 2 when the
//! arguments do not parse.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::complex::{ComplexError, DeltaComplex, SurfaceType};
use crate::models::{arrow_check, build_model_on, punctured_variant_on, table1_report, Model, ModelError, ModelKind};
use crate::nerve::{nerve, Cover, NerveError};
use crate::preferences::{
    enumerate_strict_orders, enumerate_weak_orders, valid_cycles, AlternativeSet, Decoded, PairRelation,
    PreferenceError, StrictRelation, TernaryCode,
};
use crate::social_choice::{fairness_report, Domain, ProfileSpace, SocialChoiceError, SocialWelfareFunction};

#[derive(Debug, Parser)]
#[command(name = "prefsurf", version, about = "Surfaces built from preferences on three alternatives")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Report errors on stderr as a JSON object.
    #[arg(long, global = true)]
    pub error_json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List weak orders, strict orders, strict cycles or every ternary code.
    Enumerate {
        #[arg(long, value_enum, default_value_t = What::Weak)]
        what: What,
        #[arg(long, default_value_t = 3)]
        alternatives: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Build the nerve of cover U (strict orders) or V (orders and cycles).
    Nerve {
        #[arg(long, value_enum)]
        cover: CoverArg,
        /// Three alternatives, e.g. `1,2,3`.
        #[arg(long, default_value = "1,2,3")]
        triple: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
    /// Assemble one of the four models, optionally punctured.
    Model {
        #[command(flatten)]
        model: ModelArgs,
        /// Print only the surface name.
        #[arg(long)]
        classify: bool,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
    /// Classify a complex read from a JSON file, or stdin with `-`.
    Classify {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Remove faces from a model or from a complex file and classify the rest.
    Puncture {
        #[command(flatten)]
        source: Source,
        /// Preferences (with `--kind`) or face labels (with `--input`), comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        remove: Vec<String>,
        #[arg(long, default_value = "1,2,3")]
        triple: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Audit a social welfare function and read Arrow's theorem off its model.
    ArrowCheck {
        /// `pairwise-majority`, `dictator:<i>` (0-based) or `table:<path>`.
        #[arg(long)]
        swf: String,
        #[arg(long, default_value_t = 2)]
        individuals: usize,
        #[arg(long, default_value_t = 3)]
        alternatives: usize,
        /// Defaults to the first three alternatives.
        #[arg(long)]
        triple: Option<String>,
        /// Defaults to the function's own domain.
        #[arg(long, value_enum)]
        domain: Option<DomainArg>,
        /// Print the fairness audit instead of the verdict.
        #[arg(long)]
        audit: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Reproduce the table of the four models.
    Table1 {
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Export a model or a complex file.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "1,2,3")]
        triple: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: ModelKind,
    /// Preferences whose faces are removed, e.g. `1<2<3,1<2<3<1`.
    #[arg(long, value_delimiter = ',')]
    pub remove: Vec<String>,
    #[arg(long, default_value = "1,2,3")]
    pub triple: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<ModelKind>,
    /// Complex JSON file, or `-` for stdin.
    #[arg(long)]
    pub input: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Weak,
    Strict,
    Cycles,
    Codes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverArg {
    U,
    V,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    Weak,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Json,
    Off,
    Dot,
}

fn parse_kind(s: &str) -> Result<ModelKind, String> {
    s.parse().map_err(|e: ModelError| e.to_string())
}

/// Anything that stops a parsed command from producing output.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Preference(#[from] PreferenceError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    SocialChoice(#[from] SocialChoiceError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn category(&self) -> &'static str {
        match self {
            CliError::Preference(_) => "preference",
            CliError::Complex(_) => "complex",
            CliError::Nerve(_) => "nerve",
            CliError::SocialChoice(_) => "social_choice",
            CliError::Model(_) => "model",
            CliError::Io { .. } => "io",
            CliError::Invalid(_) => "invalid_input",
        }
    }

    /// The witness attached to the error, if the library produced one.
    pub fn certificate(&self) -> Option<Value> {
        fn social(e: &SocialChoiceError) -> Option<Value> {
            match e {
                SocialChoiceError::PreconditionFailed { audit, certificate } => {
                    Some(json!({ "audit": audit, "violation": certificate }))
                }
                SocialChoiceError::IllDefined(w) => serde_json::to_value(w).ok(),
                _ => None,
            }
        }
        fn complex(e: &ComplexError) -> Option<Value> {
            match e {
                ComplexError::NotASurface(defects) => serde_json::to_value(defects).ok(),
                _ => None,
            }
        }
        match self {
            CliError::SocialChoice(e) | CliError::Model(ModelError::SocialChoice(e)) => social(e),
            CliError::Complex(e) | CliError::Model(ModelError::Complex(e)) => complex(e),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut doc = json!({ "error": self.category(), "message": self.to_string() });
        if let Some(c) = self.certificate() {
            doc["certificate"] = c;
        }
        serde_json::to_string_pretty(&doc).expect("error serialises")
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                2
            } else {
                let _ = stdout.write_all(text.as_bytes());
                0
            };
        }
    };
    let result = execute(&cli.command).and_then(|mut text| {
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &cli.out {
            Some(path) => std::fs::write(path, text).map_err(|source| io_err(path, source)),
            None => stdout.write_all(text.as_bytes()).map_err(|source| io_err(Path::new("<stdout>"), source)),
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let text = if cli.error_json { e.to_json() } else { format!("error: {e}") };
            let _ = writeln!(stderr, "{text}");
            1
        }
    }
}

fn io_err(path: &Path, source: std::io::Error) -> CliError {
    CliError::Io { path: path.display().to_string(), source }
}

/// Runs a parsed command and returns its output.
pub fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Enumerate { what, alternatives, format } => enumerate(*what, *alternatives, *format),
        Command::Nerve { cover, triple, format } => {
            let set = parse_triple(triple)?;
            let cover = match cover {
                CoverArg::U => Cover::cover_u(&set)?,
                CoverArg::V => Cover::cover_v(&set)?,
            };
            let n = nerve(&cover)?;
            Ok(match format {
                ExportFormat::Json => n.to_json(),
                ExportFormat::Off => n.complex.to_off(),
                ExportFormat::Dot => n.complex.to_dot(),
            })
        }
        Command::Model { model, classify, format } => {
            let m = load_model(model.kind, &model.triple, &model.remove)?;
            if *classify {
                return Ok(m.complex.classify()?.tag.to_string());
            }
            Ok(match format {
                ExportFormat::Json => m.to_json(),
                ExportFormat::Off => m.complex.to_off(),
                ExportFormat::Dot => m.complex.to_dot(),
            })
        }
        Command::Classify { input, format } => {
            let c = read_complex(input)?;
            let s = c.classify()?;
            Ok(match format {
                ReportFormat::Text => s.to_string(),
                ReportFormat::Json => to_pretty(&s),
            })
        }
        Command::Puncture { source, remove, triple, format } => {
            let (complex, removed) = match (&source.kind, &source.input) {
                (Some(kind), _) => (load_model(*kind, triple, remove)?.complex, remove.clone()),
                (None, Some(input)) => {
                    let c = read_complex(input)?;
                    let faces = remove
                        .iter()
                        .map(|l| c.face_by_label(l.trim()).ok_or_else(|| ComplexError::UnknownFace(l.clone())))
                        .collect::<Result<Vec<_>, _>>()?;
                    (c.puncture_many(&faces)?, remove.clone())
                }
                (None, None) => unreachable!("clap requires a source"),
            };
            let surface = complex.classify()?;
            Ok(match format {
                ReportFormat::Text => surface.to_string(),
                ReportFormat::Json => to_pretty(&PunctureReport { removed, surface, complex: (&complex).into() }),
            })
        }
        Command::ArrowCheck { swf, individuals, alternatives, triple, domain, audit, format } => {
            let set = AlternativeSet::first(*alternatives)?;
            let swf = SocialWelfareFunction::from_spec(swf, set.clone(), *individuals)?;
            let domain = match domain {
                Some(DomainArg::Weak) => Domain::Weak,
                Some(DomainArg::Strict) => Domain::Strict,
                None => swf.native_domain(),
            };
            let space = ProfileSpace::new(swf.alternatives().clone(), swf.individuals(), domain)?;
            if *audit {
                let report = fairness_report(&swf, &space)?;
                return Ok(match format {
                    ReportFormat::Json => report.to_json(),
                    ReportFormat::Text => format!(
                        "{}: unanimity {}, IIA {}, dictator {}",
                        report.swf,
                        pass_word(report.unanimity.passed()),
                        pass_word(report.iia.passed()),
                        report.dictator.dictator.map_or("none".to_string(), |d| d.to_string())
                    ),
                });
            }
            let triple = match triple {
                Some(t) => parse_triple(t)?,
                None => AlternativeSet::new(swf.alternatives().members().iter().copied().take(3).collect())?,
            };
            let verdict = arrow_check(&swf, &space, &triple)?;
            Ok(match format {
                ReportFormat::Json => verdict.to_json(),
                ReportFormat::Text => {
                    let mut out = format!(
                        "{}: image {}; model {} = {}; non-dictatorship {}; orientable {}; theorem {}",
                        verdict.swf,
                        verdict.image,
                        verdict.model_kind,
                        verdict.surface.tag,
                        verdict.non_dictatorship,
                        verdict.orientable,
                        if verdict.theorem_holds { "holds" } else { "FAILS" }
                    );
                    if let Some(w) = &verdict.warning {
                        out.push_str(&format!("\nwarning: {w}"));
                    }
                    out
                }
            })
        }
        Command::Table1 { format } => {
            let report = table1_report();
            Ok(match format {
                ReportFormat::Text => report.to_text(),
                ReportFormat::Json => report.to_json(),
            })
        }
        Command::Export { source, triple, format } => {
            let complex = match (&source.kind, &source.input) {
                (Some(kind), _) => {
                    let m = load_model(*kind, triple, &[])?;
                    if *format == ExportFormat::Json {
                        return Ok(m.to_json());
                    }
                    m.complex
                }
                (None, Some(input)) => read_complex(input)?,
                (None, None) => unreachable!("clap requires a source"),
            };
            Ok(match format {
                ExportFormat::Json => complex.to_json(),
                ExportFormat::Off => complex.to_off(),
                ExportFormat::Dot => complex.to_dot(),
            })
        }
    }
}

#[derive(Serialize)]
struct PunctureReport {
    removed: Vec<String>,
    surface: SurfaceType,
    complex: crate::complex::ComplexJson,
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialises")
}

fn parse_triple(s: &str) -> Result<AlternativeSet, CliError> {
    let set: AlternativeSet = s.parse()?;
    if set.len() != 3 {
        return Err(CliError::Invalid(format!("--triple needs exactly 3 alternatives, got {set}")));
    }
    Ok(set)
}

fn load_model(kind: ModelKind, triple: &str, remove: &[String]) -> Result<Model, CliError> {
    let set = parse_triple(triple)?;
    if remove.is_empty() {
        return Ok(build_model_on(kind, &set)?);
    }
    let removals = remove.iter().map(|r| r.trim().parse::<StrictRelation>()).collect::<Result<Vec<_>, _>>()?;
    Ok(punctured_variant_on(kind, &set, &removals)?)
}

fn read_complex(input: &str) -> Result<DeltaComplex, CliError> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| io_err(Path::new("<stdin>"), e))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| io_err(Path::new(input), e))?
    };
    Ok(DeltaComplex::from_json(&text)?)
}

/// Largest alternative count for which every code is listed.
const MAX_CODE_ALTERNATIVES: usize = 5;

fn enumerate(what: What, n: usize, format: ListFormat) -> Result<String, CliError> {
    let set = AlternativeSet::first(n)?;
    let rows: Vec<(String, String)> = match what {
        What::Weak => enumerate_weak_orders(&set)
            .iter()
            .map(|o| (o.to_string(), TernaryCode::encode_order(o).to_string()))
            .collect(),
        What::Strict => enumerate_strict_orders(&set)
            .iter()
            .map(|o| (o.to_string(), TernaryCode::encode_order(&o.to_weak()).to_string()))
            .collect(),
        What::Cycles => {
            let mut rows = Vec::new();
            for t in set.members().iter().copied().combinations(3) {
                for c in valid_cycles(&AlternativeSet::new(t)?)? {
                    rows.push((c.to_string(), TernaryCode::encode_cycle(&c)?.to_string()));
                }
            }
            rows
        }
        What::Codes => {
            if n > MAX_CODE_ALTERNATIVES {
                return Err(CliError::Invalid(format!(
                    "listing every code is limited to {MAX_CODE_ALTERNATIVES} alternatives, got {n}"
                )));
            }
            let rels = [PairRelation::Prec, PairRelation::Succ, PairRelation::Tie];
            (0..set.pair_count())
                .map(|_| rels)
                .multi_cartesian_product()
                .map(|entries| {
                    let code = TernaryCode::new(set.clone(), entries).expect("length matches the pair count");
                    let reading = match code.decode() {
                        Decoded::Order(o) => format!("order {o}"),
                        Decoded::Cycle(c) => format!("cycle {c}"),
                        Decoded::CycleBearing(_) => "intransitive".to_string(),
                    };
                    (code.to_string(), reading)
                })
                .collect()
        }
    };
    Ok(match format {
        ListFormat::Text => rows.iter().map(|(a, b)| format!("{a}\t{b}")).join("\n"),
        ListFormat::Json => {
            let key = if what == What::Codes { "reading" } else { "code" };
            let items: Vec<Value> = rows
                .iter()
                .map(|(a, b)| {
                    let first = if what == What::Codes { "code" } else { "value" };
                    json!({ first: a, key: b })
                })
                .collect();
            to_pretty(&items)
        }
    })
}
