use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use rectkron::coeffs::Method;
use rectkron::stable::published_value;
use rectkron::verify::{self, ReportKind, SuiteConfig, VerificationReport};
use rectkron::{BigInt, Engine, Partition, RectangularQuery};
use serde_json::{json, Value};

use crate::output::{aligned, csv_row, json_line, object};
use crate::{parse_partition, Format, Suite, VerifyArgs};

fn pjson(p: &Partition) -> Value {
    json!(p.parts())
}

fn method_name(m: Method) -> String {
    serde_json::to_value(m)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// Prints a single coefficient with its inputs.
fn emit_value(
    out: &mut impl Write,
    format: Format,
    inputs: &[(&str, Value, String)],
    value: &BigInt,
    method: Method,
) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{value}")?,
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (k, v, _) in inputs {
                map.insert(k.to_string(), v.clone());
            }
            map.insert("value".into(), json!(value.to_string()));
            map.insert("method".into(), json!(method_name(method)));
            json_line(out, &Value::Object(map))?;
        }
        Format::Csv => {
            let mut header: Vec<String> = inputs.iter().map(|(k, _, _)| k.to_string()).collect();
            header.extend(["value".into(), "method".into()]);
            csv_row(out, &header)?;
            let mut row: Vec<String> = inputs.iter().map(|(_, _, s)| s.clone()).collect();
            row.extend([value.to_string(), method_name(method)]);
            csv_row(out, &row)?;
        }
    }
    Ok(())
}

fn input(name: &'static str, p: &Partition) -> (&'static str, Value, String) {
    (name, pjson(p), p.to_string())
}

pub fn kron(engine: &Engine, format: Format, out: &mut impl Write, l: &str, m: &str, n: &str) -> Result<()> {
    let (l, m, n) = (parse_partition("lambda", l)?, parse_partition("mu", m)?, parse_partition("nu", n)?);
    if l.size() != m.size() || m.size() != n.size() {
        bail!(
            "size mismatch: --lambda has size {}, --mu {}, --nu {}; all three must partition the same integer",
            l.size(),
            m.size(),
            n.size()
        );
    }
    let k = engine.kronecker(&l, &m, &n)?;
    emit_value(
        out,
        format,
        &[input("lambda", &l), input("mu", &m), input("nu", &n)],
        &k,
        Method::CharacterSum,
    )
}

pub fn lr(format: Format, out: &mut impl Write, l: &str, a: &str, b: &str) -> Result<()> {
    let (l, a, b) = (parse_partition("lambda", l)?, parse_partition("alpha", a)?, parse_partition("beta", b)?);
    let c = BigInt::from(rectkron::lr(&l, &a, &b));
    emit_value(
        out,
        format,
        &[input("lambda", &l), input("alpha", &a), input("beta", &b)],
        &c,
        Method::SkewTableaux,
    )
}

pub fn rect(engine: &Engine, format: Format, out: &mut impl Write, rho: &str, d: usize, n: usize) -> Result<()> {
    let rho = parse_partition("rho", rho)?;
    if d == 0 || n == 0 {
        bail!("--d and --n must be positive");
    }
    let q = RectangularQuery::new(rho.clone(), d, n)?;
    let k = engine.rectangular_kron(&q)?;
    emit_value(
        out,
        format,
        &[
            input("rho", &rho),
            ("d", json!(d), d.to_string()),
            ("n", json!(n), n.to_string()),
        ],
        &k,
        Method::CharacterSum,
    )
}

pub fn stable(engine: &Engine, format: Format, out: &mut impl Write, rho: &str, n: Option<usize>) -> Result<()> {
    let rho = parse_partition("rho", rho)?;
    match n {
        Some(0) => bail!("--n must be positive"),
        Some(n) => {
            let k = engine.sl_invariant_dim(&rho, n)?;
            emit_value(
                out,
                format,
                &[input("rho", &rho), ("n", json!(n), n.to_string())],
                &k,
                Method::PieriInversion,
            )
        }
        None => {
            let method = if rho.size() <= engine.config().max_brute_m {
                Method::FixedPointFree
            } else {
                Method::PieriInversion
            };
            let k = engine.limit_in_dn(&rho)?;
            emit_value(out, format, &[input("rho", &rho)], &k, method)
        }
    }
}

pub fn table(engine: &Engine, format: Format, out: &mut impl Write, max_m: usize, paper_diff: bool) -> Result<()> {
    let rows = engine.stable_table(max_m)?;
    let diffs = if paper_diff {
        engine.published_diff(&rows)?
    } else {
        Vec::new()
    };
    let status = |rho: &Partition, k: &BigInt| -> (String, String) {
        match published_value(rho) {
            None => (String::new(), String::new()),
            Some(p) if BigInt::from(p) == *k => (p.to_string(), "ok".into()),
            Some(p) if rectkron::stable::is_known_erratum(rho) => (p.to_string(), "ERRATUM".into()),
            Some(p) => (p.to_string(), "MISMATCH".into()),
        }
    };
    match format {
        Format::Text => {
            let mut header = vec!["m".to_string(), "rho".into(), "k_rho".into()];
            if paper_diff {
                header.extend(["published".into(), "status".into()]);
            }
            let mut lines = vec![header];
            for row in &rows {
                for (rho, k) in &row.values {
                    let mut line = vec![row.m.to_string(), format!("({rho})"), k.to_string()];
                    if paper_diff {
                        let (p, s) = status(rho, k);
                        line.extend([p, s]);
                    }
                    lines.push(line);
                }
                lines.push(vec![
                    row.m.to_string(),
                    "D_m".into(),
                    row.derangement_total.to_string(),
                    if row.consistency_ok { "consistent".into() } else { "INCONSISTENT".into() },
                ]);
            }
            aligned(out, &lines)?;
            if paper_diff {
                writeln!(out)?;
                writeln!(out, "{} discrepancies with the published table", diffs.len())?;
                for d in &diffs {
                    writeln!(
                        out,
                        "m={} rho=({}): published {}, computed {}{}",
                        d.m,
                        d.rho,
                        d.published,
                        d.computed,
                        if d.expected { " [known erratum]" } else { " [UNEXPECTED]" }
                    )?;
                    for e in &d.evidence {
                        writeln!(out, "  - {e}")?;
                    }
                }
            }
        }
        Format::Csv => {
            let mut header = vec!["m".to_string(), "rho".into(), "value".into()];
            if paper_diff {
                header.extend(["published".into(), "discrepancy".into()]);
            }
            csv_row(out, &header)?;
            for row in &rows {
                for (rho, k) in &row.values {
                    let mut line = vec![row.m.to_string(), rho.to_string(), k.to_string()];
                    if paper_diff {
                        let (p, s) = status(rho, k);
                        line.extend([p, s]);
                    }
                    csv_row(out, &line)?;
                }
            }
        }
        Format::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut values = serde_json::Map::new();
                    for (rho, k) in &row.values {
                        values.insert(rho.to_string(), json!(k.to_string()));
                    }
                    object([
                        ("m", json!(row.m)),
                        ("values", Value::Object(values)),
                        ("derangements", json!(row.derangement_total.to_string())),
                        ("consistent", json!(row.consistency_ok)),
                    ])
                })
                .collect();
            let mut doc = serde_json::Map::new();
            doc.insert("rows".into(), Value::Array(rows_json));
            if paper_diff {
                doc.insert("discrepancies".into(), serde_json::to_value(&diffs)?);
            }
            json_line(out, &Value::Object(doc))?;
        }
    }
    Ok(())
}

fn single_report(engine: &Engine, args: &VerifyArgs, suite: Suite) -> Result<VerificationReport> {
    let need = |v: Option<usize>, name: &str| v.with_context(|| format!("--suite requires --{name}"));
    let report = match suite {
        Suite::E3 | Suite::E4 | Suite::E5 => {
            let theta = parse_partition("theta", args.theta.as_deref().context("--suite requires --theta")?)?;
            let (d, n) = (need(args.d, "d")?, need(args.n, "n")?);
            if d == 0 || n == 0 {
                bail!("--d and --n must be positive");
            }
            match suite {
                Suite::E3 => verify::check_e3(engine, &theta, d, n)?,
                Suite::E4 => verify::check_e4(engine, &theta, d, n)?,
                _ => verify::check_e5(engine, &theta, d, n)?,
            }
        }
        Suite::Stabilization => {
            let rho = parse_partition("rho", args.rho.as_deref().context("--suite requires --rho")?)?;
            verify::check_stabilization(engine, &rho, need(args.n, "n")?, need(args.d_max, "d-max")?)?
        }
        Suite::Symmetry => {
            let rho = parse_partition("rho", args.rho.as_deref().context("--suite requires --rho")?)?;
            let d_max = need(args.d_max, "d-max")?;
            let pairs: Vec<(usize, usize)> = (1..=d_max)
                .flat_map(|d| (1..=d_max).map(move |n| (d, n)))
                .filter(|&(d, n)| {
                    RectangularQuery::new(rho.clone(), d, n).is_ok()
                        && RectangularQuery::new(rho.clone(), n, d).is_ok()
                })
                .collect();
            verify::check_symmetry_monotonicity(engine, &rho, &pairs)?
        }
    };
    Ok(report)
}

pub fn verify(engine: &Engine, format: Format, out: &mut impl Write, args: &VerifyArgs) -> Result<ExitCode> {
    let reports = match args.suite {
        Some(suite) => vec![single_report(engine, args, suite)?],
        None => {
            log::info!("verification sweep: max_m={} max_dn={} seed={}", args.max_m, args.max_dn, args.seed);
            verify::run_suite(
                engine,
                &SuiteConfig {
                    max_m: args.max_m,
                    max_dn: args.max_dn,
                    seed: args.seed,
                },
            )?
        }
    };
    match format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
        }
        Format::Csv => {
            csv_row(out, &["identity".into(), "instance".into(), "lhs".into(), "rhs".into(), "passed".into(), "kind".into()])?;
            for r in &reports {
                let join = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                let kind = match r.kind {
                    ReportKind::Check => "check",
                    ReportKind::Erratum => "erratum",
                    ReportKind::Rejected => "rejected",
                };
                csv_row(out, &[r.identity.clone(), r.instance.clone(), join(&r.lhs), join(&r.rhs), r.passed.to_string(), kind.into()])?;
            }
        }
        Format::Text => write!(out, "{}", verify::summarize(&reports))?,
    }
    let failed = reports.iter().any(VerificationReport::is_failure);
    Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

pub fn derangements(format: Format, out: &mut impl Write, max_m: usize) -> Result<()> {
    let values = (0..=max_m)
        .map(|m| rectkron::derangement_count::<BigInt>(m).map(|d| (m, d)))
        .collect::<rectkron::Result<Vec<_>>>()?;
    match format {
        Format::Text => {
            let mut lines = vec![vec!["m".to_string(), "D_m".into()]];
            lines.extend(values.iter().map(|(m, d)| vec![m.to_string(), d.to_string()]));
            aligned(out, &lines)?;
        }
        Format::Csv => {
            csv_row(out, &["m".into(), "derangements".into()])?;
            for (m, d) in &values {
                csv_row(out, &[m.to_string(), d.to_string()])?;
            }
        }
        Format::Json => {
            let arr: Vec<Value> = values
                .iter()
                .map(|(m, d)| object([("m", json!(m)), ("derangements", json!(d.to_string()))]))
                .collect();
            json_line(out, &Value::Array(arr))?;
        }
    }
    Ok(())
}

fn cached_tables(dir: &Path) -> Result<Vec<(usize, u64, std::path::PathBuf)>> {
    let mut entries = Vec::new();
    let read = match fs::read_dir(dir) {
        Ok(r) => r,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(entries),
        Err(e) => return Err(e).with_context(|| format!("reading {}", dir.display())),
    };
    let prefix = format!("chartable-v{}-m", rectkron::symchar::CACHE_SCHEMA_VERSION);
    for entry in read {
        let entry = entry?;
        let name = entry.file_name().to_string_lossy().into_owned();
        let Some(m) = name
            .strip_prefix(&prefix)
            .and_then(|s| s.strip_suffix(".json"))
            .and_then(|s| s.parse::<usize>().ok())
        else {
            continue;
        };
        entries.push((m, entry.metadata()?.len(), entry.path()));
    }
    entries.sort();
    Ok(entries)
}

pub fn cache_status(format: Format, out: &mut impl Write, dir: &Path) -> Result<()> {
    let entries = cached_tables(dir)?;
    match format {
        Format::Json => {
            let arr: Vec<Value> = entries
                .iter()
                .map(|(m, bytes, _)| object([("m", json!(m)), ("bytes", json!(bytes))]))
                .collect();
            json_line(
                out,
                &object([("cache_dir", json!(dir.display().to_string())), ("tables", Value::Array(arr))]),
            )?;
        }
        Format::Csv => {
            csv_row(out, &["m".into(), "bytes".into()])?;
            for (m, bytes, _) in &entries {
                csv_row(out, &[m.to_string(), bytes.to_string()])?;
            }
        }
        Format::Text => {
            writeln!(out, "cache directory: {}", dir.display())?;
            writeln!(out, "{} cached character tables", entries.len())?;
            for (m, bytes, _) in &entries {
                writeln!(out, "  m={m:<3} {bytes} bytes")?;
            }
        }
    }
    Ok(())
}

pub fn cache_clear(out: &mut impl Write, dir: &Path) -> Result<()> {
    let entries = cached_tables(dir)?;
    for (_, _, path) in &entries {
        fs::remove_file(path).with_context(|| format!("removing {}", path.display()))?;
    }
    writeln!(out, "removed {} cached tables from {}", entries.len(), dir.display())?;
    Ok(())
}
