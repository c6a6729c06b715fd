//! Ideal and system file formats, monomial printing, and the JSON schema.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use koszul::monomial::{min_generators, MonomialIdeal, Multidegree};
use serde_json::{json, Value};

/// Parsed ideal file: header variable names and the (minimized) ideal.
pub struct IdealFile {
    pub names: Vec<String>,
    pub ideal: MonomialIdeal,
    /// True when minimization dropped some input monomial.
    pub reduced: bool,
}

/// Grammar: first nonempty line `vars x y z`; each following nonempty line
/// one monomial as `name^exp` factors joined by `*` (`^exp` omitted means 1).
/// The constant monomial is rejected.
pub fn parse_ideal(text: &str) -> Result<IdealFile> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| anyhow!("empty ideal file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("vars") {
        bail!("ideal file must start with a `vars` header line");
    }
    let names: Vec<String> = parts.map(str::to_string).collect();
    if names.is_empty() {
        bail!("`vars` header names no variables");
    }
    let index: BTreeMap<&str, usize> =
        names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    if index.len() != names.len() {
        bail!("duplicate variable name in header");
    }
    let n = names.len();
    let mut raw = Vec::new();
    for line in lines {
        let mut exps = vec![0u64; n];
        for factor in line.split('*').map(str::trim) {
            if factor.is_empty() {
                bail!("empty factor in monomial line `{line}`");
            }
            let (name, exp) = match factor.split_once('^') {
                None => (factor, 1u64),
                Some((name, e)) => {
                    let exp: u64 = e
                        .trim()
                        .parse()
                        .with_context(|| format!("malformed exponent in `{factor}`"))?;
                    (name.trim(), exp)
                }
            };
            let var = *index
                .get(name)
                .ok_or_else(|| anyhow!("unknown variable `{name}` in `{line}`"))?;
            exps[var] = exps[var]
                .checked_add(exp)
                .ok_or_else(|| anyhow!("exponent overflow in `{line}`"))?;
        }
        let m = Multidegree::new(exps);
        if m.is_zero() {
            bail!("the constant monomial is not allowed as a generator");
        }
        raw.push(m);
    }
    if raw.is_empty() {
        bail!("ideal file has no generators");
    }
    let count = raw.len();
    let dedup: std::collections::BTreeSet<&Multidegree> = raw.iter().collect();
    let distinct = dedup.len();
    let ideal = min_generators(n, raw);
    Ok(IdealFile { names, reduced: ideal.num_gens() < distinct || distinct < count, ideal })
}

/// Paths file: `components c1 … cn` header, then one 0/1 (or level) vector
/// per line.
pub fn parse_paths(text: &str) -> Result<(Vec<String>, Vec<Multidegree>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| anyhow!("empty paths file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("components") {
        bail!("paths file must start with a `components` header line");
    }
    let names: Vec<String> = parts.map(str::to_string).collect();
    if names.is_empty() {
        bail!("`components` header names no components");
    }
    let n = names.len();
    let mut rows = Vec::new();
    for line in lines {
        let entries: Vec<u64> = line
            .split_whitespace()
            .map(|t| t.parse::<u64>().with_context(|| format!("bad level `{t}`")))
            .collect::<Result<_>>()?;
        if entries.len() != n {
            bail!("row `{line}` has {} entries, expected {n}", entries.len());
        }
        let m = Multidegree::new(entries);
        if m.is_zero() {
            bail!("the all-zero row is not a valid minimal point");
        }
        rows.push(m);
    }
    if rows.is_empty() {
        bail!("paths file has no rows");
    }
    Ok((names, rows))
}

pub fn monomial_string(names: &[String], m: &Multidegree) -> String {
    if m.is_zero() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, name) in names.iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Canonical text form of an ideal (one monomial per line under the header).
pub fn print_ideal(names: &[String], ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars {}\n", names.join(" "));
    for g in ideal.gens() {
        out.push_str(&monomial_string(names, g));
        out.push('\n');
    }
    out
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub fn betti_json(map: &BTreeMap<(usize, Multidegree), usize>) -> Value {
    let entries: Vec<Value> = map
        .iter()
        .map(|((i, m), mult)| {
            json!({
                "i": i,
                "multidegree": m.exps(),
                "multiplicity": mult,
            })
        })
        .collect();
    json!(entries)
}

pub fn kpoly_json(p: &koszul::hilbert::KPolynomial) -> Value {
    let entries: Vec<Value> = p
        .coeffs()
        .iter()
        .map(|(m, c)| json!({"exponents": m.exps(), "coeff": c}))
        .collect();
    json!(entries)
}

pub fn unipoly_json(p: &koszul::hilbert::UnivariatePolynomial) -> Value {
    let entries: Vec<Value> = p
        .coeffs()
        .iter()
        .map(|(d, c)| json!({"degree": d, "coeff": c}))
        .collect();
    json!(entries)
}

pub fn unipoly_string(p: &koszul::hilbert::UnivariatePolynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (d, c) in p.coeffs() {
        let sign = if *c < 0 { "-" } else { "+" };
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if *c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let body = match (mag, d) {
            (_, 0) => format!("{mag}"),
            (1, 1) => var.to_string(),
            (1, _) => format!("{var}^{d}"),
            (_, 1) => format!("{mag}{var}"),
            (_, _) => format!("{mag}{var}^{d}"),
        };
        out.push_str(&body);
    }
    out
}

pub fn tree_json(tree: &koszul::mvtree::MVTree) -> Value {
    let nodes: Vec<Value> = tree
        .nodes()
        .iter()
        .map(|node| {
            json!({
                "position": node.position.to_string(),
                "dimension": node.dimension,
                "generators": node.gens.iter().map(|g| g.exps().to_vec()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!(nodes)
}
