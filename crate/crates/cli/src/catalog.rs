use std::fmt::Write;

use anyhow::Result;
use serde_json::{json, Value};
use yibre::blocks::{block_properties, BlockKind, SpectrumType, BLOCK_CATALOG};
use yibre::classical::CLASSICAL_CATALOG;
use yibre::kernel::{format_rational, rat};
use yibre::suite::{list_checks, Suite};

/// Value of q at which block properties are reported.
const SAMPLE_Q: i64 = 2;

struct BlockRow {
    kind: &'static str,
    label: &'static str,
    params: &'static [&'static str],
    n: usize,
    samples: Vec<Value>,
}

fn spectrum(s: &SpectrumType) -> String {
    let f = format_rational;
    match s {
        SpectrumType::Gl2 { major, minor } => format!("GL(2) {{{0}, {0}, {0}, {1}}}", f(major), f(minor)),
        SpectrumType::Gl11 { first, second } => format!("GL(1|1) {{{0}, {0}, {1}, {1}}}", f(first), f(second)),
        SpectrumType::Scalar(c) => format!("scalar {}", f(c)),
        SpectrumType::NonSemisimple => "non-semisimple".into(),
        SpectrumType::Irrational => "irrational".into(),
        SpectrumType::NotQuadratic => "not quadratic".into(),
    }
}

fn sample_json(kind: &BlockKind) -> Result<Value> {
    let p = block_properties(kind)?;
    Ok(json!({
        "parameters": kind
            .parameters()
            .into_iter()
            .map(|(k, v)| (k.to_string(), Value::String(format_rational(&v))))
            .collect::<serde_json::Map<_, _>>(),
        "ybe": p.ybe,
        "quadratic": p.quadratic.map(|(u, v)| [format_rational(&u), format_rational(&v)]),
        "skew_invertible": p.skew_invertible,
        "spectrum": spectrum(&p.spectrum),
    }))
}

fn blocks() -> Result<Vec<BlockRow>> {
    let samples = BlockKind::samples(&rat(SAMPLE_Q));
    BLOCK_CATALOG
        .iter()
        .map(|e| {
            let samples = samples
                .iter()
                .filter(|k| k.name() == e.kind)
                .map(sample_json)
                .collect::<Result<_>>()?;
            Ok(BlockRow { kind: e.kind, label: e.label, params: e.params, n: e.n, samples })
        })
        .collect()
}

/// The catalog as JSON.
pub fn json() -> Result<Value> {
    let blocks: Vec<Value> = blocks()?
        .into_iter()
        .map(|b| json!({ "kind": b.kind, "label": b.label, "params": b.params, "n": b.n, "samples": b.samples }))
        .collect();
    let classical: Vec<Value> = CLASSICAL_CATALOG
        .iter()
        .map(|e| json!({ "kind": e.kind, "label": e.label, "params": e.params, "n": "any n >= 2", "anchor": e.anchor }))
        .collect();
    let checks: Vec<Value> = list_checks(Suite::All)
        .into_iter()
        .map(|(name, anchor)| json!({ "name": name, "anchor": anchor }))
        .collect();
    Ok(json!({ "sample_q": SAMPLE_Q, "blocks": blocks, "classical": classical, "checks": checks }))
}

fn params(p: &[&str]) -> String {
    if p.is_empty() {
        "-".into()
    } else {
        p.join(", ")
    }
}

/// The catalog as aligned text.
pub fn text() -> Result<String> {
    let mut out = String::new();
    writeln!(out, "Blocks (n = 2; properties at q = {SAMPLE_Q})")?;
    for b in blocks()? {
        writeln!(out, "  {:<16} {:<28} params: {}", b.kind, b.label, params(b.params))?;
        for s in &b.samples {
            let quadratic = match s["quadratic"].as_array() {
                Some(uv) => format!("R^2 = ({})R + ({})", uv[0].as_str().unwrap_or(""), uv[1].as_str().unwrap_or("")),
                None => "no quadratic relation".into(),
            };
            let at: Vec<String> = s["parameters"]
                .as_object()
                .map(|m| m.iter().map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or(""))).collect())
                .unwrap_or_default();
            writeln!(
                out,
                "      at {}: ybe: {}, {}, skew-invertible: {}, spectrum: {}",
                if at.is_empty() { "-".to_string() } else { at.join(" ") },
                s["ybe"],
                quadratic,
                s["skew_invertible"],
                s["spectrum"].as_str().unwrap_or("")
            )?;
        }
    }
    writeln!(out, "\nClassical r-matrices (any n >= 2)")?;
    for e in CLASSICAL_CATALOG {
        writeln!(out, "  {:<16} {:<36} params: {}", e.kind, e.label, params(e.params))?;
    }
    writeln!(out, "\nVerification checks")?;
    for (name, anchor) in list_checks(Suite::All) {
        writeln!(out, "  {name:<40} {anchor}")?;
    }
    Ok(out)
}
