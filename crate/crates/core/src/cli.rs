//! Command-line front end. [`run`] parses arguments, dispatches one verb
//! and returns the exit status with the text to print.
//!
//! Exit status: 0 on success, 1 when a verification failed, 2 for invalid
//! arguments or input, 3 when the extension cap was exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::balance::{majdom_check, slabps_check};
use crate::domino::{count_p_domino, imbalance_domino};
use crate::error::{Error, Result};
use crate::poset::{cap_from_env, extension_stats, natural_labeling, LinearExtension, Poset, PosetFile};
use crate::promotion::{
    delta_stat, evac_parity, evacuate, gamma, is_consistent, is_dual_consistent, promote, promotion_chain,
    promotion_parity_class,
};
use crate::region::Region;
use crate::shapes::{
    a_lambda_quadruple, count_series, d_stat, inv_poly_shape, r_stat, shape_poset, syt_count, two_core, v_stat,
    SeriesKind, SkewShape,
};
use crate::verify::{all_pass, verify_all, verify_suite, Bounds, Record};

#[derive(Debug, Parser)]
#[command(name = "imbalance", version, about = "Sign- and maj-imbalance of posets and partition shapes")]
struct Cli {
    /// Print aligned text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    /// Seed for the random poset generator.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Imbalance polynomials and structural statistics of a poset file.
    PosetStats { file: PathBuf },
    /// Statistics of a partition or skew shape such as `4,3,1` or `4,3,1/2,1`.
    Shape {
        shape: String,
        /// Report I(-1) and whether the independent methods agree.
        #[arg(long)]
        imbalance: bool,
    },
    /// Sign, tilings and the domino identity for a region file.
    Region { file: PathBuf },
    /// Run a verification suite, or `all`.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        /// Largest size swept.
        #[arg(long)]
        n: Option<usize>,
        /// Largest parameter for the doubled-shape sums.
        #[arg(long)]
        max_m: Option<usize>,
        /// Random posets drawn in total.
        #[arg(long)]
        samples: Option<usize>,
        /// Desk-scale bounds.
        #[arg(long)]
        small: bool,
        /// Report every `millis` as 0.
        #[arg(long)]
        no_timing: bool,
    },
    /// Promote a linear extension, given as comma-separated values per element.
    Promote {
        file: PathBuf,
        #[arg(long)]
        values: Option<String>,
    },
    /// Evacuate a linear extension, given as comma-separated values per element.
    Evacuate {
        file: PathBuf,
        #[arg(long)]
        values: Option<String>,
    },
    /// Coefficients of a counting series: core-le-1, a-even-f, t, g or p.
    Series {
        kind: String,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
    },
}

/// Parses `argv` (including the program name) and runs the verb.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => {
            let code = if matches!(e, Error::CapExceeded { .. }) { 3 } else { 2 };
            (code, format!("error: {e}\n"))
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let render = |v: Value| (0, render_value(&v, cli.plain));
    match &cli.command {
        Command::PosetStats { file } => poset_stats(&read_poset(file)?).map(render),
        Command::Shape { shape, imbalance } => shape_stats(shape, *imbalance).map(render),
        Command::Region { file } => {
            let region: Region = read(file)?.parse()?;
            let out = region_stats(&region)?;
            let code = i32::from(out["pass"] == json!(false));
            Ok((code, render_value(&out, cli.plain)))
        }
        Command::Verify { suite, n, max_m, samples, small, no_timing } => {
            let bounds = Bounds {
                n: *n,
                max_m: *max_m,
                samples: *samples,
                seed: cli.seed,
                small: *small,
                timing: !no_timing,
            };
            let records = if suite == "all" { verify_all(&bounds)? } else { verify_suite(suite, &bounds)? };
            let code = i32::from(!all_pass(&records));
            Ok((code, render_records(&records, cli.plain)))
        }
        Command::Promote { file, values } => {
            let pf = read_poset(file)?;
            transform(&pf.poset, values.as_deref(), true).map(render)
        }
        Command::Evacuate { file, values } => {
            let pf = read_poset(file)?;
            transform(&pf.poset, values.as_deref(), false).map(render)
        }
        Command::Series { kind, n_max } => {
            let k: SeriesKind = kind.parse()?;
            Ok(render(json!({ "series": k, "values": count_series(k, *n_max)? })))
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_poset(path: &PathBuf) -> Result<PosetFile> {
    read(path)?.parse()
}

fn poset_stats(pf: &PosetFile) -> Result<Value> {
    let p = &pf.poset;
    let omega = pf.omega.clone().unwrap_or_else(|| natural_labeling(p));
    let stats = extension_stats(p, &omega, cap_from_env())?;
    let (w_natural, tableaux) = majdom_check(p)?;
    Ok(json!({
        "n": p.len(),
        "covers": p.covers(),
        "omega": omega.labels(),
        "natural": omega.is_natural(p),
        "extensions": stats.count,
        "inv_poly": stats.inv,
        "maj_poly": stats.maj,
        "sign_balanced": stats.inv.at_minus_one() == 0.into(),
        "maj_balanced": stats.maj.at_minus_one() == 0.into(),
        "gamma": gamma(p),
        "delta": delta_stat(p),
        "consistent": is_consistent(p),
        "dual_consistent": is_dual_consistent(p),
        "promotion_parity": promotion_parity_class(p),
        "evacuation_parity": evac_parity(p).ok(),
        "natural_w_at_minus1": w_natural,
        "domino_tableaux": tableaux,
    }))
}

fn shape_stats(text: &str, with_imbalance: bool) -> Result<Value> {
    let shape: SkewShape = text.parse()?;
    let (p, w) = shape_poset(&shape)?;
    let mut out = Map::new();
    if shape.inner.is_empty() {
        let l = &shape.outer;
        out.insert("lambda".into(), json!(l));
        out.insert("size".into(), json!(l.size()));
        out.insert("conjugate".into(), json!(l.conjugate()));
        out.insert("two_core".into(), json!(two_core(l)));
        out.insert("v".into(), json!(v_stat(l)));
        out.insert("d".into(), json!(d_stat(l)));
        out.insert("r".into(), json!(r_stat(l).ok()));
        out.insert("syt".into(), json!(syt_count(l)));
        out.insert("parity_quadruple".into(), json!(a_lambda_quadruple(l)));
        if with_imbalance {
            let recursion = inv_poly_shape(l);
            let brute = extension_stats(&p, &w, cap_from_env())?.inv;
            let value = recursion.at_minus_one();
            let mut agree = brute == recursion;
            if l.size().is_multiple_of(2) {
                agree &= imbalance_domino(l).map(num_bigint::BigInt::from).ok() == Some(value.clone());
            }
            out.insert("inv_poly".into(), json!(recursion));
            out.insert("I_at_minus1".into(), crate::poly::bigint_json(&value));
            out.insert("method_agreement".into(), json!(agree));
        }
    } else {
        out.insert("shape".into(), json!(shape.to_string()));
        out.insert("size".into(), json!(shape.size()));
        if with_imbalance {
            let inv = extension_stats(&p, &w, cap_from_env())?.inv;
            out.insert("inv_poly".into(), json!(inv));
            out.insert("I_at_minus1".into(), crate::poly::bigint_json(&inv.at_minus_one()));
        }
    }
    Ok(Value::Object(out))
}

fn region_stats(region: &Region) -> Result<Value> {
    let p = region.poset()?;
    let mut out = json!({
        "cells": region.cells(),
        "size": region.len(),
        "tilings": region.tilings().len(),
        "domino_tableaux": count_p_domino(&p),
    });
    if region.len().is_multiple_of(2) {
        let s = slabps_check(region)?;
        out["sign"] = json!(s.sign);
        out["w_at_minus1"] = json!(s.w_at_minus_one);
        out["pass"] = json!(s.pass);
    }
    Ok(out)
}

fn parse_values(p: &Poset, text: &str) -> Result<LinearExtension> {
    let values: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad value `{t}`"))))
        .collect::<Result<_>>()?;
    LinearExtension::from_values(p, &values)
}

fn transform(p: &Poset, values: Option<&str>, promotion: bool) -> Result<Value> {
    let apply = |f: &LinearExtension| -> Value {
        let image = if promotion { promote(p, f) } else { evacuate(p, f) };
        let mut v = json!({ "input": f.values(), "output": image.values() });
        if promotion && !p.is_empty() {
            v["chain"] = json!(promotion_chain(p, f).elements);
        }
        v
    };
    match values {
        Some(text) => Ok(apply(&parse_values(p, text)?)),
        None => {
            let exts = crate::poset::extensions_capped(p, cap_from_env())?;
            Ok(Value::Array(exts.iter().map(apply).collect()))
        }
    }
}

fn render_value(v: &Value, plain: bool) -> String {
    if !plain {
        return serde_json::to_string_pretty(v).expect("json") + "\n";
    }
    let mut s = String::new();
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, val) in map {
                writeln!(s, "{k:<width$}  {}", compact(val)).unwrap();
            }
        }
        Value::Array(items) => {
            for item in items {
                s.push_str(&render_value(item, true));
                s.push('\n');
            }
        }
        other => writeln!(s, "{}", compact(other)).unwrap(),
    }
    s
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_records(records: &[Record], plain: bool) -> String {
    let passed = records.iter().filter(|r| r.pass).count();
    if !plain {
        return serde_json::to_string_pretty(records).expect("json") + "\n";
    }
    let mut s = String::new();
    for r in records {
        let status = if r.pass { "PASS" } else { "FAIL" };
        writeln!(
            s,
            "{status}  {:<48} {:<32} expected={} actual={} {}ms",
            r.identity,
            r.parameter,
            compact(&r.expected),
            compact(&r.actual),
            r.millis
        )
        .unwrap();
        if let Some(note) = r.note.as_ref().filter(|_| !r.pass) {
            writeln!(s, "      {note}").unwrap();
        }
    }
    writeln!(s, "{passed}/{} checks passed", records.len()).unwrap();
    s
}
