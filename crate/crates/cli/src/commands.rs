use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use ararank::certificates::Certificate;
use ararank::combinatorics::{stanley_reisner_ideal, MonomialIdeal, SimplicialComplex};
use ararank::fixtures::{fixture, Fixture, FixtureId, FIXTURE_NAMES};
use ararank::formats::{
    format_certificate, format_complex, format_ideal, format_identities, parse_analysis_input, parse_certificate,
    parse_identities, AnalysisInput,
};
use ararank::oracle::{compare_radicals, Identity};
use ararank::ring::{parse_field, FieldSpec, Polynomial};
use ararank::search::{ara_report_with_hint, SearchConfig, SearchStatus};

use crate::report::{BoundsSummary, CheckSummary, HeightSummary, IdentityOutcome, OracleSummary, Report};

pub const EXIT_OK: i32 = 0;
/// A search ran out of budget before the bounds met.
pub const EXIT_BUDGET: i32 = 1;
/// Bad usage or unreadable input.
pub const EXIT_USAGE: i32 = 2;
/// A certificate was rejected or an identity failed.
pub const EXIT_REJECTED: i32 = 3;
/// The oracle disagrees with an accepted certificate.
pub const EXIT_ORACLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "ararank", version, about = "Arithmetical rank bounds for squarefree monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print `key<TAB>value` lines instead of text.
    #[arg(long, global = true)]
    pub machine: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Input file; omit when using --fixture.
    pub file: Option<PathBuf>,
    /// Built-in example, e.g. example1, im (with --m) or ngon (with --n).
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Largest number of parts to try.
    #[arg(long)]
    pub max_parts: Option<usize>,
    #[arg(long, default_value_t = 10_000_000)]
    pub node_budget: u64,
    #[arg(long, default_value_t = 60_000)]
    pub time_budget_ms: u64,
}

impl BudgetArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            max_parts: self.max_parts,
            node_budget: self.node_budget,
            time_budget_ms: self.time_budget_ms,
            ..SearchConfig::default()
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    /// Cross-check with Gröbner bases.
    #[arg(long)]
    pub oracle: bool,
    /// Field for the cross-check: QQ, GF(p) or GF4.
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Heights and minimal primes; with --search, bounds on the arithmetical rank.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        search: bool,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Checks a certificate file or a fixture's certificate.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Print every step of the failing branch.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Searches for a smallest grouping and prints it as a certificate.
    Search {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        oracle: OracleArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Checks polynomial identities from a file or a fixture.
    VerifyIdentities {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Lists or writes out the built-in examples.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixturesAction {
    List,
    /// Prints a fixture's files, or writes them to --out.
    Dump {
        name: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command produced: a report (absent for `fixtures`), extra text
/// such as a certificate file, notes for stderr, and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub report: Option<Report>,
    pub text: String,
    pub notes: Vec<String>,
    pub code: i32,
}

/// Failures that end a command with [`EXIT_USAGE`].
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

fn fail(e: impl std::fmt::Display) -> CliError {
    CliError(e.to_string())
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Analyze {
            input,
            search,
            oracle,
            budget,
        } => analyze(input, search.then(|| budget.config()), oracle, true),
        Command::Check { input, trace, oracle } => check(input, *trace, oracle),
        Command::Search { input, oracle, budget } => analyze(input, Some(budget.config()), oracle, false),
        Command::VerifyIdentities { input } => verify_identities(input),
        Command::Fixtures { action } => fixtures(action),
    }
}

fn resolve_fixture(name: &str, m: Option<usize>, n: Option<usize>) -> Result<Fixture, CliError> {
    let id = if name.contains('(') {
        name.parse::<FixtureId>()
    } else {
        FixtureId::resolve(name, m, n)
    }
    .map_err(|e| CliError(format!("{e}; known fixtures: {}", FIXTURE_NAMES.join(", "))))?;
    fixture(id).map_err(fail)
}

enum Source {
    File(PathBuf, String),
    Fixture(Box<Fixture>),
}

impl Source {
    fn name(&self) -> String {
        match self {
            Source::File(p, _) => p.display().to_string(),
            Source::Fixture(f) => f.id.to_string(),
        }
    }
}

fn source(input: &InputArgs) -> Result<Source, CliError> {
    match (&input.file, &input.fixture) {
        (Some(_), Some(_)) => Err(CliError("give either a file or --fixture, not both".into())),
        (None, None) => Err(CliError("no input: give a file or --fixture".into())),
        (Some(p), None) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError(format!("{}: {e}", p.display())))?;
            Ok(Source::File(p.clone(), text))
        }
        (None, Some(name)) => Ok(Source::Fixture(Box::new(resolve_fixture(name, input.m, input.n)?))),
    }
}

fn oracle_field(args: &OracleArgs) -> Result<Option<FieldSpec>, CliError> {
    args.field
        .as_deref()
        .map(|f| parse_field(f).ok_or_else(|| CliError(format!("unknown field `{f}`; use QQ, GF(p) or GF4"))))
        .transpose()
}

/// Compares `√I` with `√(polys)` over `field` (default: the ring's own).
fn run_oracle(
    ideal: &MonomialIdeal,
    polys: &[Polynomial],
    field: Option<FieldSpec>,
    report: &mut Report,
) -> Result<bool, CliError> {
    if polys.iter().any(Polynomial::uses_params) {
        return Err(CliError("the candidates involve parameters; the oracle needs them specialized".into()));
    }
    let base = ideal.ring().without_params();
    let ring = match field {
        Some(f) => base.with_field(f).map_err(fail)?,
        None => base,
    };
    let ideal = MonomialIdeal::new(&ring, ideal.generators().iter().copied()).map_err(fail)?;
    let polys = polys
        .iter()
        .map(|p| {
            // No term mentions a parameter, so any values drop them.
            let zeros = vec![p.ring().field().zero(); p.ring().num_params()];
            let plain = p.specialize_params(&zeros, &p.ring().without_params())?;
            plain.to_ring(&ring)
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError(format!("cannot move the candidates to {}: {e}", ring.field())))?;
    let t = Instant::now();
    let cmp = compare_radicals(&ideal, &polys).map_err(fail)?;
    report.time("oracle", t.elapsed());
    let mut failures: Vec<String> = cmp
        .not_in_radical
        .iter()
        .map(|(m, v)| {
            let witness = v
                .witness
                .as_ref()
                .map(|w| {
                    let w: Vec<String> = w.iter().map(|s| s.to_string()).collect();
                    format!(", vanishing point ({})", w.join(", "))
                })
                .unwrap_or_default();
            format!("{} is not in the radical{witness}", ring.format_monomial(*m))
        })
        .collect();
    failures.extend(
        cmp.stray_terms
            .iter()
            .map(|(k, term)| format!("term {term} of candidate {k} is outside the ideal")),
    );
    let confirmed = failures.is_empty();
    report.oracle = Some(OracleSummary {
        field: ring.field().to_string(),
        confirmed,
        failures,
    });
    Ok(confirmed)
}

fn is_complete_intersection(ideal: &MonomialIdeal) -> bool {
    let g = ideal.generators();
    !g.is_empty()
        && g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| !a.support().intersects(b.support())))
}

fn parts_text(c: &ararank::certificates::GsvCertificate) -> Vec<String> {
    c.parts()
        .iter()
        .map(|p| {
            p.iter()
                .map(|&m| c.ring().format_monomial(m))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .collect()
}

/// `analyze` and `search`: heights, then bounds when `search` is given.
/// `analyze` seeds the bounds with a fixture's own certificate.
fn analyze(
    input: &InputArgs,
    search: Option<SearchConfig>,
    oracle: &OracleArgs,
    use_hint: bool,
) -> Result<Outcome, CliError> {
    let field = oracle_field(oracle)?;
    let src = source(input)?;
    let command = if use_hint { "analyze" } else { "search" };
    let mut report = Report::new(command, &src.name());
    let (ideal, complex, fix): (MonomialIdeal, Option<SimplicialComplex>, Option<Box<Fixture>>) = match src {
        Source::File(_, text) => match parse_analysis_input(&text).map_err(fail)? {
            AnalysisInput::Complex(c) => (stanley_reisner_ideal(&c, FieldSpec::Rational).map_err(fail)?, Some(c), None),
            AnalysisInput::Ideal(i) => (i, None, None),
        },
        Source::Fixture(f) => (f.ideal.clone(), f.complex.clone(), Some(f)),
    };
    let ideal = ideal.minimalize().map_err(fail)?;
    report.ideal = Some(ideal.to_string());

    let t = Instant::now();
    let h = ideal.height_report().map_err(fail)?;
    report.time("heights", t.elapsed());
    let connected = match &complex {
        Some(c) if c.max_facet_size() <= 2 => Some(c.is_connected_one_dim().map_err(fail)?),
        _ => None,
    };
    report.heights = Some(HeightSummary {
        height: h.height,
        big_height: h.big_height,
        pure: h.pure,
        minimal_primes: h.minimal_primes.iter().map(|p| p.to_string()).collect(),
        connected,
        generators: ideal.generators().len(),
        complete_intersection: is_complete_intersection(&ideal),
    });

    let mut outcome = Outcome::default();
    let mut code = EXIT_OK;
    let mut candidates: Option<Vec<Polynomial>> = None;
    if let Some(cfg) = search {
        let hint = if use_hint {
            fix.as_ref().and_then(|f| f.gsv_certificate())
        } else {
            None
        };
        let t = Instant::now();
        let ara = ara_report_with_hint(&ideal, hint.as_ref(), &cfg).map_err(fail)?;
        report.time("bounds", t.elapsed());
        let status = ara.search.as_ref().map(|s| match s.status {
            SearchStatus::Found => "found",
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::BudgetExhausted => "budget-exhausted",
        });
        if ara.ara().is_none() && ara.search.as_ref().is_some_and(|s| s.status == SearchStatus::BudgetExhausted) {
            code = EXIT_BUDGET;
        }
        if let Some(c) = &ara.certificate {
            candidates = Some(c.candidates());
            if !use_hint {
                outcome.text = format_certificate(&Certificate::Gsv(c.clone()));
            }
        }
        report.bounds = Some(BoundsSummary {
            height: ara.height,
            lower: ara.lower_bound,
            upper: ara.upper_bound,
            stci: ara.stci,
            search: status.map(str::to_string),
            nodes: ara.search.as_ref().map(|s| s.nodes),
            parts: ara.certificate.as_ref().map(parts_text).unwrap_or_default(),
        });
    }
    if oracle.oracle {
        let candidates = candidates.or_else(|| fix.as_ref().and_then(|f| f.candidates.clone()));
        match candidates {
            Some(c) => {
                if !run_oracle(&ideal, &c, field, &mut report)? {
                    code = EXIT_ORACLE;
                }
            }
            None => outcome.notes.push("oracle: no candidate generators to compare".into()),
        }
    }
    outcome.report = Some(report);
    outcome.code = code;
    Ok(outcome)
}

fn check(input: &InputArgs, trace: bool, oracle: &OracleArgs) -> Result<Outcome, CliError> {
    let field = oracle_field(oracle)?;
    let src = source(input)?;
    let mut report = Report::new("check", &src.name());
    let cert = match src {
        Source::File(_, text) => parse_certificate(&text).map_err(fail)?,
        Source::Fixture(f) => f
            .certificate
            .clone()
            .ok_or_else(|| CliError(format!("fixture {} has no certificate", f.id)))?,
    };
    let ring = cert.ring().clone();
    let ideal = MonomialIdeal::new(&ring, cert.generators()).map_err(fail)?;
    report.ideal = Some(ideal.to_string());
    let t = Instant::now();
    let result = cert.check().map_err(fail)?;
    report.time("check", t.elapsed());
    let (failure, steps) = match &result.trace {
        Some(tr) => {
            let text = tr.to_string();
            let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
            let last = lines.pop();
            (last, if trace { lines } else { Vec::new() })
        }
        None => (None, Vec::new()),
    };
    report.check = Some(CheckSummary {
        kind: cert.kind().to_string(),
        accepted: result.accepted,
        explored_states: result.explored_states,
        emitted: result.emitted.iter().map(|p| p.to_string()).collect(),
        failure,
        trace: steps,
    });
    let mut code = if result.accepted { EXIT_OK } else { EXIT_REJECTED };
    if result.accepted && oracle.oracle && !run_oracle(&ideal, &result.emitted, field, &mut report)? {
        code = EXIT_ORACLE;
    }
    Ok(Outcome {
        report: Some(report),
        code,
        ..Outcome::default()
    })
}

fn verify_identities(input: &InputArgs) -> Result<Outcome, CliError> {
    let src = source(input)?;
    let mut report = Report::new("verify-identities", &src.name());
    let ids: Vec<Identity> = match src {
        Source::File(_, text) => parse_identities(&text).map_err(fail)?,
        Source::Fixture(f) if f.identities.is_empty() => {
            return Err(CliError(format!("fixture {} has no identities", f.id)));
        }
        Source::Fixture(f) => f.identities.clone(),
    };
    let t = Instant::now();
    report.identities = ids
        .iter()
        .map(|i| IdentityOutcome {
            name: i.name.clone(),
            holds: i.holds(),
        })
        .collect();
    report.time("identities", t.elapsed());
    let code = if report.identities.iter().all(|i| i.holds) {
        EXIT_OK
    } else {
        EXIT_REJECTED
    };
    Ok(Outcome {
        report: Some(report),
        code,
        ..Outcome::default()
    })
}

/// The text files describing a fixture, as `(extension, contents)`.
pub fn fixture_files(f: &Fixture) -> Vec<(&'static str, String)> {
    let mut files = vec![("ideal", format_ideal(&f.ideal))];
    if let Some(c) = &f.complex {
        files.push(("complex", format_complex(c)));
    }
    if let Some(c) = &f.certificate {
        files.push(("cert", format_certificate(c)));
    }
    if !f.identities.is_empty() {
        files.push(("identities", format_identities(&f.identities)));
    }
    files
}

fn file_stem(id: FixtureId) -> String {
    id.to_string().replace('(', "_").replace(')', "")
}

fn fixtures(action: &FixturesAction) -> Result<Outcome, CliError> {
    let mut text = String::new();
    match action {
        FixturesAction::List => {
            for id in FixtureId::catalog() {
                text.push_str(&format!("{:<20} {}\n", id.to_string(), id.summary()));
            }
        }
        FixturesAction::Dump { name, m, n, out } => {
            let f = resolve_fixture(name, *m, *n)?;
            let files = fixture_files(&f);
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(dir).map_err(|e| CliError(format!("{}: {e}", dir.display())))?;
                    for (ext, body) in files {
                        let path: PathBuf = Path::new(dir).join(format!("{}.{ext}", file_stem(f.id)));
                        std::fs::write(&path, body).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
                        text.push_str(&format!("{}\n", path.display()));
                    }
                }
                None => {
                    for (ext, body) in files {
                        text.push_str(&format!("# {}.{ext}\n{body}\n", file_stem(f.id)));
                    }
                }
            }
        }
    }
    Ok(Outcome {
        text,
        ..Outcome::default()
    })
}
