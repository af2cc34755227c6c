use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};

use postlie::catalog::{entry_names, lookup, verify_witness, witnesses, CatalogEntry, WitnessStep};
use postlie::post_lie::{derived_bracket, inner_pa_from_rb, triple_decomposition, PAFailure};
use postlie::{parse_rational, LieAlgebra, RBOperator, Rational};
use rayon::prelude::*;

use crate::files::{load_algebra, load_operator, write_json, AlgebraFile, OperatorFile};
use crate::{CliError, Outcome};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(dims: &[usize]) -> String {
    dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// One-line structural summary such as `semisimple, dim 6, killing rank 6`.
fn summary(alg: &LieAlgebra) -> String {
    let f = alg.fingerprint();
    if alg.is_semisimple() {
        format!("semisimple, dim {}, killing rank {}", f.dim, f.killing_rank)
    } else if alg.is_abelian() {
        "nilpotent, abelian".to_string()
    } else if f.nilpotent {
        format!("nilpotent, dim {}", f.dim)
    } else if f.solvable {
        format!("solvable, dim {}", f.dim)
    } else {
        format!("not solvable, not semisimple, dim {}", f.dim)
    }
}

fn invariants(alg: &LieAlgebra) -> String {
    let f = alg.fingerprint();
    let mut s = String::new();
    writeln!(s, "dim {}", f.dim).unwrap();
    writeln!(s, "basis {}", alg.labels().join(" ")).unwrap();
    writeln!(s, "derived series dims: {}", list(&f.derived_dims)).unwrap();
    writeln!(s, "lower central series dims: {}", list(&f.lcs_dims)).unwrap();
    writeln!(s, "center dim: {}", f.center_dim).unwrap();
    writeln!(s, "killing rank: {}", f.killing_rank).unwrap();
    writeln!(s, "unimodular: {}", yes_no(f.unimodular)).unwrap();
    writeln!(s, "{}", summary(alg)).unwrap();
    s
}

pub fn check(path: &Path) -> Result<Outcome, CliError> {
    let alg = load_algebra(path)?;
    Ok(Outcome::ok(invariants(&alg)))
}

/// Loads both files and checks the RB identity; `Err(outcome)` carries the counterexample.
fn load_rb(algebra: &Path, operator: &Path) -> Result<Result<RBOperator, Outcome>, CliError> {
    let alg = load_algebra(algebra)?;
    let r = load_operator(&alg, operator)?;
    Ok(match r.identity_failure() {
        Some((i, j)) => Err(Outcome::falsified(format!(
            "RB identity fails on basis pair ({}, {})\n",
            alg.labels()[i],
            alg.labels()[j]
        ))),
        None => Ok(r),
    })
}

/// Weight-1 version of `r`, with a notice when rescaling was needed.
fn weight_one(r: RBOperator, notes: &mut String) -> Result<RBOperator, CliError> {
    let w = r.weight().clone();
    if w == postlie::int(1) {
        return Ok(r);
    }
    let scaled = r
        .rescale_to_weight_one()
        .map_err(|_| CliError::Math("weight 0 operators have no derived bracket".into()))?;
    writeln!(
        notes,
        "notice: weight {} rescaled to 1 (operator divided by {})",
        postlie::linalg::format_rational(&w),
        postlie::linalg::format_rational(&w)
    )
    .unwrap();
    Ok(scaled)
}

pub fn rb_check(algebra: &Path, operator: &Path) -> Result<Outcome, CliError> {
    Ok(match load_rb(algebra, operator)? {
        Ok(r) => Outcome::ok(format!(
            "weight {}\nRB identity holds ({} basis pairs checked)\n",
            postlie::linalg::format_rational(r.weight()),
            postlie::rota_baxter::basis_pair_count(r.dim())
        )),
        Err(o) => o,
    })
}

pub fn rb_derive(algebra: &Path, operator: &Path, out: &Path) -> Result<Outcome, CliError> {
    let r = match load_rb(algebra, operator)? {
        Ok(r) => r,
        Err(o) => return Ok(o),
    };
    let mut report = String::new();
    let r = weight_one(r, &mut report)?;
    let g = derived_bracket(&r).map_err(|e| CliError::Math(e.to_string()))?;
    write_json(out, &AlgebraFile::from_algebra(&g))?;
    writeln!(report, "derived bracket written to {}", out.display()).unwrap();
    report.push_str(&invariants(&g));
    Ok(Outcome::ok(report))
}

pub fn pa_check(algebra: &Path, operator: &Path) -> Result<Outcome, CliError> {
    let r = match load_rb(algebra, operator)? {
        Ok(r) => r,
        Err(o) => return Ok(o),
    };
    let mut report = String::new();
    let r = weight_one(r, &mut report)?;
    let pa = inner_pa_from_rb(&r).map_err(|e| CliError::Math(e.to_string()))?;
    let l = r.algebra().labels();
    if let Some(f) = pa.check_axioms() {
        let msg = match f {
            PAFailure::Commutator { i, j } => format!("commutator axiom fails on ({}, {})", l[i], l[j]),
            PAFailure::Action { i, j, k } => format!("action axiom fails on ({}, {}, {})", l[i], l[j], l[k]),
            PAFailure::Derivation { i, j, k } => {
                format!("derivation axiom fails on ({}, {}, {})", l[i], l[j], l[k])
            }
        };
        writeln!(report, "{msg}").unwrap();
        return Ok(Outcome::falsified(report));
    }
    let d = r.dim();
    writeln!(report, "post-Lie axioms hold ({} pairs, {} triples checked)", d * d, d * d * d).unwrap();
    writeln!(
        report,
        "left multiplications are derivations: {}",
        yes_no(pa.left_multiplications_are_derivations())
    )
    .unwrap();
    Ok(Outcome::ok(report))
}

pub fn decompose(algebra: &Path, operator: &Path) -> Result<Outcome, CliError> {
    let r = match load_rb(algebra, operator)? {
        Ok(r) => r,
        Err(o) => return Ok(o),
    };
    let mut report = String::new();
    let r = weight_one(r, &mut report)?;
    let t = triple_decomposition(&r).map_err(|e| CliError::Math(e.to_string()))?;
    let c = t.check(r.algebra()).map_err(|e| CliError::Math(e.to_string()))?;
    let (a, b, n3) = t.dims();
    let d = r.dim();
    writeln!(report, "n1 = ker R^{d}: dim {a}").unwrap();
    writeln!(report, "n2 = ker (R + id)^{d}: dim {b}").unwrap();
    writeln!(report, "n3 = im R^{d} and im (R + id)^{d} intersected: dim {n3}").unwrap();
    writeln!(report, "direct sum: {}", yes_no(c.direct_sum)).unwrap();
    writeln!(report, "{{n1, n3}} in n1: {}", yes_no(c.n1_stable)).unwrap();
    writeln!(report, "{{n2, n3}} in n2: {}", yes_no(c.n2_stable)).unwrap();
    writeln!(report, "n3 solvable: {}", yes_no(c.n3_solvable)).unwrap();
    Ok(if c.all() {
        Outcome::ok(report)
    } else {
        Outcome::falsified(report)
    })
}

pub fn classify3(path: &Path) -> Result<Outcome, CliError> {
    let alg = load_algebra(path)?;
    if alg.dim() != 3 {
        return Err(CliError::Format(format!(
            "classify3 needs a 3-dimensional algebra, got dim {}",
            alg.dim()
        )));
    }
    let c = postlie::classify3(&alg).map_err(|e| CliError::Math(e.to_string()))?;
    Ok(Outcome::ok(format!("{c}\n")))
}

pub fn catalog_list() -> Outcome {
    let mut s = String::new();
    for (name, desc) in entry_names() {
        writeln!(s, "{name:<36} {desc}").unwrap();
    }
    Outcome::ok(s)
}

/// Parses `key=value` with a rational value.
pub fn parse_param(s: &str) -> Result<(String, Rational), CliError> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| CliError::Format(format!("parameter {s:?} is not of the form key=value")))?;
    let q = parse_rational(v.trim()).map_err(|_| CliError::Format(format!("parameter {k}: bad rational {v:?}")))?;
    Ok((k.trim().to_string(), q))
}

pub fn catalog_emit(name: &str, params: &[String], out_dir: &Path) -> Result<Outcome, CliError> {
    let mut map = BTreeMap::new();
    for p in params {
        let (k, v) = parse_param(p)?;
        if map.insert(k.clone(), v).is_some() {
            return Err(CliError::Format(format!("parameter {k} given twice")));
        }
    }
    let entry = lookup(name, &map).map_err(|e| CliError::Format(e.to_string()))?;
    fs::create_dir_all(out_dir).map_err(|source| CliError::Io {
        path: out_dir.display().to_string(),
        source,
    })?;
    let path = |kind: &str| -> PathBuf { out_dir.join(format!("{name}.{kind}.json")) };
    let mut written = Vec::new();
    match entry {
        CatalogEntry::Algebra(alg) => {
            written.push(path("algebra"));
            write_json(&written[0], &AlgebraFile::from_algebra(&alg))?;
        }
        CatalogEntry::Operator(r) => {
            written.push(path("algebra"));
            written.push(path("operator"));
            write_json(&written[0], &AlgebraFile::from_algebra(r.algebra()))?;
            write_json(&written[1], &OperatorFile::from_operator(&r))?;
        }
    }
    let mut s = String::new();
    for p in written {
        writeln!(s, "wrote {}", p.display()).unwrap();
    }
    Ok(Outcome::ok(s))
}

/// Runs the witness checks for one type label (`8` selects both `8a` and `8b`) or for all.
pub fn verify_types(ty: Option<&str>) -> Result<Outcome, CliError> {
    let all = witnesses();
    let selected: Vec<_> = match ty {
        None => all,
        Some(t) => {
            let picked: Vec<_> = all
                .into_iter()
                .filter(|w| w.target_type.label() == t || w.target_type.number().to_string() == t)
                .collect();
            if picked.is_empty() {
                return Err(CliError::Format(format!("unknown type {t:?}; expected 1 to 8, 8a or 8b")));
            }
            picked
        }
    };
    let reports: Vec<_> = selected.par_iter().map(verify_witness).collect();
    let mut s = String::new();
    let mut failures = 0;
    for (w, rep) in selected.iter().zip(&reports) {
        let iso = match rep.steps.iter().find(|(st, _)| *st == WitnessStep::Isomorphism) {
            Some((_, Some(true))) => ", isomorphism verified",
            _ => "",
        };
        match rep.first_failure() {
            None => writeln!(s, "{}: {}: pass{iso}", w.name, w.target_type).unwrap(),
            Some(step) => {
                failures += 1;
                writeln!(s, "{}: {}: FAIL at {}", w.name, w.target_type, step.name()).unwrap();
            }
        }
    }
    let types: BTreeSet<u8> = selected.iter().map(|w| w.target_type.number()).collect();
    let noun = if types.len() == 1 { "type" } else { "types" };
    if failures == 0 {
        writeln!(s, "{} {noun}, all pass ({} witnesses)", types.len(), selected.len()).unwrap();
        Ok(Outcome::ok(s))
    } else {
        writeln!(s, "{} {noun}, {failures} of {} witnesses failed", types.len(), selected.len()).unwrap();
        Ok(Outcome::falsified(s))
    }
}
