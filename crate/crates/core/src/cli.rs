//! Command-line front end: `list` and `run`.
//!
//! Exit codes: 0 when every selected case passes, 1 when any case reports a
//! mismatch, 2 for usage errors (unknown id, malformed or unknown
//! parameter), 3 when the worst outcome is a degenerate binding.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::catalog::{self, Bindings, CaseInfo, IdentityCase, Report, ROBUST_TAG};
use crate::check::Status;
use crate::error::Error;
use crate::monomial::QMonomial;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qseries", version, about = "Verify q-series identities by exact coefficient comparison")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the registered identity cases.
    List(ListArgs),
    /// Check identity cases and report the first mismatching coefficient.
    Run(RunArgs),
}

#[derive(Debug, clap::Args)]
pub struct ListArgs {
    #[arg(long)]
    pub json: bool,
    /// Only cases carrying this tag or id family.
    #[arg(long)]
    pub tag: Option<String>,
}

#[derive(Debug, clap::Args)]
pub struct RunArgs {
    /// Case ids; a family name such as `thm1` selects every `thm1/…` case.
    pub ids: Vec<String>,
    #[arg(long)]
    pub all: bool,
    /// Compare coefficients up to and including q^ORDER.
    #[arg(long)]
    pub order: Option<i64>,
    /// Override a binding, e.g. `--param z=17` or `--param a=-3/2*q^-1`.
    #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_param)]
    pub params: Vec<(String, QMonomial)>,
    #[arg(long)]
    pub json: bool,
    /// Also run random prime bindings of the robustness cases, seeded by S.
    #[arg(long, value_name = "S")]
    pub seed: Option<u64>,
    /// Number of random bindings per robustness case when `--seed` is given.
    #[arg(long, default_value_t = 3)]
    pub samples: usize,
    #[arg(long)]
    pub tag: Option<String>,
    /// Record wall-clock milliseconds per case.
    #[arg(long)]
    pub timing: bool,
}

fn parse_param(s: &str) -> Result<(String, QMonomial), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(format!("missing parameter name in `{s}`"));
    }
    let value = value.trim().parse::<QMonomial>().map_err(|e| e.to_string())?;
    Ok((name.to_string(), value))
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::List(a) => list(&a, out),
        Command::Run(a) => run_cases(&a, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_USAGE
    })
}

fn list(args: &ListArgs, out: &mut dyn Write) -> std::io::Result<i32> {
    let infos: Vec<CaseInfo> = catalog::select(args.tag.as_deref()).iter().map(IdentityCase::info).collect();
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&infos).expect("case listing serializes"))?;
        return Ok(EXIT_PASS);
    }
    for info in &infos {
        writeln!(out, "{:<28} {}", info.id, info.title)?;
        writeln!(out, "    identity:    {}", info.equation)?;
        if !info.bindings.is_empty() {
            let b: Vec<String> = info.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(out, "    bindings:    {}", b.join(" "))?;
        }
        for c in &info.constraints {
            writeln!(out, "    constraint:  {c}")?;
        }
    }
    Ok(EXIT_PASS)
}

fn select(args: &RunArgs) -> Result<Vec<IdentityCase>, String> {
    let pool = catalog::select(args.tag.as_deref());
    if args.all || args.ids.is_empty() {
        if !args.all && args.tag.is_none() {
            return Err("no cases selected: give case ids, --all or --tag".into());
        }
        return Ok(pool);
    }
    let mut picked: Vec<IdentityCase> = Vec::new();
    for id in &args.ids {
        let family = format!("{id}/");
        let hits: Vec<&IdentityCase> = pool.iter().filter(|c| &c.id == id || c.id.starts_with(&family)).collect();
        if hits.is_empty() {
            return Err(format!("unknown case id `{id}`"));
        }
        for c in hits {
            if !picked.iter().any(|p| p.id == c.id) {
                picked.push(c.clone());
            }
        }
    }
    picked.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(picked)
}

/// Applies overrides to the defaults; overridden names are no longer free.
fn bound(case: &IdentityCase, overrides: &Bindings) -> Result<IdentityCase, Error> {
    let mut c = case.clone();
    c.default_bindings = catalog::resolve(case, overrides)?;
    c.free.retain(|name| !overrides.contains_key(name));
    Ok(c)
}

fn run_cases(args: &RunArgs, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    let cases = match select(args) {
        Ok(c) => c,
        Err(msg) => {
            writeln!(err, "error: {msg}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let overrides: Bindings = args.params.iter().cloned().collect();
    let mut bound_cases = Vec::with_capacity(cases.len());
    for case in &cases {
        match bound(case, &overrides) {
            Ok(c) => bound_cases.push(c),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_USAGE);
            }
        }
    }
    let reports = execute(&bound_cases, args);
    if args.json {
        writeln!(out, "{}", render_json(&reports))?;
    } else {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        writeln!(
            out,
            "{} passed, {} mismatched, {} degenerate",
            count(Status::Pass),
            count(Status::Mismatch),
            count(Status::Degenerate)
        )?;
    }
    Ok(exit_code(&reports))
}

fn execute(cases: &[IdentityCase], args: &RunArgs) -> Vec<Report> {
    let no_overrides = Bindings::new();
    let mut reports: Vec<Report> = cases
        .par_iter()
        .map(|c| {
            let r = if args.timing {
                catalog::run_timed(c, &no_overrides, args.order)
            } else {
                catalog::run_check(c, &no_overrides, args.order)
            };
            r.expect("bindings already resolved")
        })
        .collect();
    if let Some(seed) = args.seed {
        for c in cases.iter().filter(|c| c.has_tag(ROBUST_TAG) && !c.free.is_empty()) {
            reports.extend(catalog::run_random(c, seed, args.samples, args.order));
        }
    }
    reports
}

/// Pretty JSON array of reports; parsing and re-rendering yields the same bytes.
pub fn render_json(reports: &[Report]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Mismatch) {
        EXIT_MISMATCH
    } else if reports.iter().any(|r| r.status == Status::Degenerate) {
        EXIT_DEGENERATE
    } else {
        EXIT_PASS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("qseries").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn list_names_thm1() {
        let (code, out, _) = invoke(&["list"]);
        assert_eq!(code, 0);
        assert!(out.contains("thm1"));
    }

    #[test]
    fn list_json_is_an_array() {
        let (_, out, _) = invoke(&["list", "--json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v.as_array().is_some_and(|a| a.len() >= 30));
    }

    #[test]
    fn list_by_tag() {
        let (_, out, _) = invoke(&["list", "--json", "--tag", "theta"]);
        let infos: Vec<CaseInfo> = serde_json::from_str(&out).unwrap();
        assert!(!infos.is_empty());
        assert!(infos.iter().all(|i| i.tags.iter().any(|t| t == "theta")));
    }

    #[test]
    fn family_id_with_override_passes() {
        let (code, out, _) = invoke(&["run", "thm1", "--param", "z=17", "--order", "20"]);
        assert_eq!(code, EXIT_PASS, "{out}");
        assert_eq!(out.lines().filter(|l| l.starts_with("thm1/")).count(), 4);
    }

    #[test]
    fn colliding_binding_is_degenerate() {
        let (code, out, _) = invoke(&["run", "thm1/singh", "--param", "z=3"]);
        assert_eq!(code, EXIT_DEGENERATE);
        assert!(out.contains("constraint violated"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(invoke(&["run", "no-such-case"]).0, EXIT_USAGE);
        assert_eq!(invoke(&["run", "thm1/singh", "--param", "z=0.5"]).0, EXIT_USAGE);
        assert_eq!(invoke(&["run", "thm1/singh", "--param", "w=5"]).0, EXIT_USAGE);
        assert_eq!(invoke(&["run"]).0, EXIT_USAGE);
        assert_eq!(invoke(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn json_report_round_trips() {
        let (code, out, _) = invoke(&["run", "f-closed", "aq-entry", "--order", "12", "--json"]);
        assert_eq!(code, 0);
        let reports: Vec<Report> = serde_json::from_str(&out).unwrap();
        assert_eq!(format!("{}\n", render_json(&reports)), out);
        assert!(reports.iter().all(|r| r.millis.is_none()));
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let args = ["run", "f-closed", "--order", "10", "--seed", "7", "--samples", "2", "--json"];
        let (code, first, _) = invoke(&args);
        assert_eq!(code, 0);
        assert_eq!(first, invoke(&args).1);
        let reports: Vec<Report> = serde_json::from_str(&first).unwrap();
        assert_eq!(reports.len(), 3);
    }
}
