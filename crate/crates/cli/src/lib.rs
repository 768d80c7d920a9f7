//! Command-line front end for `loewner-core`: matrix-set documents,
//! one subcommand per operation, fixtures and seeded ensembles.

pub mod args;
pub mod commands;
pub mod document;
pub mod ensemble;
pub mod error;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use loewner_core::fixtures::fixture;
use loewner_core::Tolerances;

use crate::args::{Cli, Command, GlobalArgs};
use crate::commands::{read_file, read_inline, Ctx, Loaded};
use crate::document::MatrixSetDocument;
use crate::error::{CliError, CliResult, EXIT_OK, EXIT_USAGE};
use crate::report::{InputDigest, RunReport};

/// What a finished invocation writes and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn tolerances(g: &GlobalArgs) -> CliResult<Tolerances<f64>> {
    let d = Tolerances::<f64>::default();
    Tolerances::new(
        g.tol_rank.unwrap_or(d.rank_rel),
        g.tol_psd.unwrap_or(d.psd_rel),
        g.tol_eq.unwrap_or(d.eq_rel),
    )
    .map_err(|e| CliError::Usage(e.to_string()))
}

/// Runs the CLI on `args` (including the program name). `stdin` is read only
/// when an input argument is `-`.
pub fn run<I, T>(args: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    return Invocation {
                        code: EXIT_OK,
                        stdout: text,
                        stderr: String::new(),
                    }
                }
                _ => EXIT_USAGE,
            };
            return Invocation {
                code,
                stdout: String::new(),
                stderr: text,
            };
        }
    };
    match execute(&cli, stdin) {
        Ok((stdout, stderr)) => Invocation {
            code: EXIT_OK,
            stdout,
            stderr,
        },
        Err(e) => Invocation {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(arg: &str, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> CliResult<Loaded> {
    if arg == "-" {
        let text = stdin().map_err(|e| CliError::Io {
            path: "<stdin>".into(),
            message: e.to_string(),
        })?;
        Ok(Loaded {
            name: "<stdin>".into(),
            text,
        })
    } else {
        read_file(arg)
    }
}

fn execute(cli: &Cli, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> CliResult<(String, String)> {
    let g = &cli.global;
    let tol = tolerances(g)?;
    let start = Instant::now();
    let mut digest = InputDigest::new();
    let name = cli.command.name();
    digest.add("command", name.as_bytes());

    let (verdicts, lines) = match &cli.command {
        Command::Fixture { name, truncate_n } => return emit_fixture(name, *truncate_n, g.json),
        Command::Ensemble {
            suite,
            trials,
            dims,
            serial,
        } => {
            let range = ensemble::parse_dims(dims)?;
            digest
                .add("suite", suite.as_bytes())
                .add("trials", &(*trials as u64).to_le_bytes())
                .add("dims", format!("{}-{}", range.0, range.1).as_bytes());
            let r = ensemble::run(suite, *trials, range, g.seed, *serial, &tol)?;
            (r.verdicts, r.lines)
        }
        cmd => {
            let mut ctx = Ctx {
                tol,
                digest: &mut digest,
            };
            let out = match cmd {
                Command::CheckOrder(s) => commands::check_order(&mut ctx, &load(&s.input, stdin)?)?,
                Command::Infimum(s) => commands::infimum(&mut ctx, &load(&s.input, stdin)?)?,
                Command::MaximalExtend { set, lower } => {
                    let lower = lower.as_deref().map(read_file).transpose()?;
                    commands::maximal_extend(&mut ctx, &load(&set.input, stdin)?, lower.as_ref())?
                }
                Command::CommutingGlb(s) => commands::commuting(&mut ctx, &load(&s.input, stdin)?)?,
                Command::PositiveMlb(s) => commands::positive_mlb(&mut ctx, &load(&s.input, stdin)?)?,
                Command::PositiveGlb(s) => commands::positive_glb(&mut ctx, &load(&s.input, stdin)?)?,
                Command::MlbMt { set, t } => {
                    let t = t.as_deref().map(|t| read_inline(t, "t")).transpose()?;
                    commands::mlb_mt_cmd(&mut ctx, &load(&set.input, stdin)?, t.as_ref())?
                }
                Command::Stott { p, q, x, m } => {
                    let x = x.as_deref().map(|x| read_inline(x, "x")).transpose()?;
                    let m = m.as_deref().map(read_file).transpose()?;
                    commands::stott(&mut ctx, *p, *q, x.as_ref(), m.as_ref())?
                }
                Command::Constrained { set, u } => {
                    let u = read_inline(u, "u")?;
                    commands::constrained(&mut ctx, &load(&set.input, stdin)?, &u)?
                }
                Command::Certify { set, candidate } => {
                    let c = read_file(candidate)?;
                    commands::certify(&mut ctx, &load(&set.input, stdin)?, &c)?
                }
                Command::ParallelSum(s) => commands::parallel(&mut ctx, &load(&s.input, stdin)?)?,
                Command::Ando(s) => commands::ando(&mut ctx, &load(&s.input, stdin)?)?,
                Command::Fixture { .. } | Command::Ensemble { .. } => unreachable!("handled above"),
            };
            (out.verdicts, out.lines)
        }
    };

    let report = RunReport {
        command: name.to_string(),
        inputs_digest: digest.finish(),
        tolerances: tol,
        seed: g.seed,
        verdicts,
        lines,
        elapsed_ms: g.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    let text = if g.json {
        report.render_json()
    } else {
        report.render_human()
    };
    Ok((text, String::new()))
}

/// Fixtures print the document itself so that it can be piped into other
/// commands; the human mode adds the note on standard error.
fn emit_fixture(name: &str, n: usize, json: bool) -> CliResult<(String, String)> {
    if n == 0 {
        return Err(CliError::Usage("--truncate-n must be at least 1".into()));
    }
    let f = fixture::<f64>(name, n).ok_or_else(|| CliError::UnknownFixture(name.to_string()))?;
    let mut doc = MatrixSetDocument::new(f.set, Some(f.labels));
    doc.note = Some(f.note.clone());
    let stderr = if json {
        String::new()
    } else {
        let trunc = f
            .truncation
            .map(|n| format!(" truncated at N = {n}"))
            .unwrap_or_default();
        format!("fixture {}{trunc}: {}\n", f.name, f.note)
    };
    Ok((doc.emit(), stderr))
}
