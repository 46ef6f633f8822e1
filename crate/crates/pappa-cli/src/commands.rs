use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context as _, Result};
use pappa::rp::{self, CouplingMatrix};
use pappa::suite::Suite;
use pappa::tangle::{self, TangleValue};
use pappa::{Context, Mode, PfElement};
use serde::Serialize;
use serde_json::json;

use crate::formats::{CouplingJson, MatrixJson, PfJson, Record, Report, ScalarJson};
use crate::{Global, ModeArg};

pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_pass(pass: bool) -> Outcome {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Parses `3`, `2..5` or `2,4,6`.
pub fn parse_range(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    let out: Vec<u32> = if let Some((a, b)) = text.split_once("..") {
        let a: u32 = a.trim().parse().with_context(|| format!("bad range start in {:?}", text))?;
        let b = b.trim().trim_start_matches('=');
        let b: u32 = b.parse().with_context(|| format!("bad range end in {:?}", text))?;
        if a > b {
            bail!("empty range {:?}", text);
        }
        (a..=b).collect()
    } else {
        text.split(',')
            .map(|p| p.trim().parse().with_context(|| format!("bad value in {:?}", text)))
            .collect::<Result<_>>()?
    };
    if out.is_empty() {
        bail!("empty range {:?}", text);
    }
    Ok(out)
}

fn signs_for(g: &Global, n: u32) -> Result<Vec<i8>> {
    let all: Vec<i8> = match g.zeta_sign.as_str() {
        "both" => vec![1, -1],
        "1" | "+1" | "+" => vec![1],
        "-1" | "-" => vec![-1],
        other => bail!("--zeta-sign must be 1, -1 or both, not {:?}", other),
    };
    Ok(if n % 2 == 1 { vec![1] } else { all })
}

fn mode(g: &Global) -> Mode {
    match g.mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Approx => Mode::Approx,
    }
}

fn context(g: &Global, n: u32, sign: i8) -> Result<Context> {
    let mut b = Context::builder(n).zeta_sign(sign).mode(mode(g));
    if let Some(l) = g.order {
        b = b.order(l);
    }
    if let Some(t) = g.tol {
        b = b.tol(t);
    }
    Ok(b.build()?)
}

/// The single N for commands that act at one parameter point.
fn single_n(g: &Global, fallback: Option<u32>) -> Result<u32> {
    match (&g.n, fallback) {
        (Some(text), _) => match parse_range(text)?.as_slice() {
            [n] => Ok(*n),
            _ => bail!("this command takes a single --N"),
        },
        (None, Some(n)) => Ok(n),
        (None, None) => bail!("--N is required"),
    }
}

fn single_sign(g: &Global, n: u32) -> Result<i8> {
    Ok(signs_for(g, n)?[0])
}

fn emit<T: Serialize>(g: &Global, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match &g.out {
        Some(path) => fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))?,
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{}", text)?;
        }
    }
    Ok(())
}

struct Case {
    suite: Suite,
    n: u32,
    sign: i8,
    m: Option<usize>,
}

pub fn verify(g: &Global, suite: &str) -> Result<Outcome> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let ns = parse_range(g.n.as_deref().unwrap_or("2"))?;
    let ms = parse_range(g.m.as_deref().unwrap_or("1..3"))?;
    let all = suite == "all";
    let mut cases = Vec::new();
    for &n in &ns {
        for sign in signs_for(g, n)? {
            for &s in &suites {
                if s.uses_m() {
                    for &m in &ms {
                        if all && !fits(s, n, m as usize) {
                            continue;
                        }
                        cases.push(Case { suite: s, n, sign, m: Some(m as usize) });
                    }
                } else {
                    if all && !fits(s, n, 1) {
                        continue;
                    }
                    cases.push(Case { suite: s, n, sign, m: None });
                }
            }
        }
    }

    let mode_name = match g.mode {
        ModeArg::Exact => "exact",
        ModeArg::Approx => "approx",
    };
    let results: Vec<Result<(Vec<Record>, Vec<String>)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = cases
            .iter()
            .map(|case| {
                scope.spawn(move || -> Result<(Vec<Record>, Vec<String>)> {
                    let ctx = context(g, case.n, case.sign)?;
                    let checks = case
                        .suite
                        .run(&ctx, case.m.unwrap_or(1), g.seed)
                        .with_context(|| format!("suite {} at N = {}", case.suite.name(), case.n))?;
                    let records = checks
                        .into_iter()
                        .map(|c| Record {
                            suite: case.suite.name().to_string(),
                            identity: c.name,
                            n: case.n,
                            m: case.m,
                            zeta_sign: case.sign,
                            mode: mode_name.to_string(),
                            pass: c.pass,
                            deviation: c.deviation,
                            exact: c.exact,
                        })
                        .collect();
                    let warnings = ctx
                        .warnings()
                        .iter()
                        .map(|w| format!("N = {}, zeta sign {}: {}", case.n, case.sign, w))
                        .collect();
                    Ok((records, warnings))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });

    let mut records = Vec::new();
    let mut warnings = Vec::new();
    for r in results {
        let (rec, warn) = r?;
        records.extend(rec);
        warnings.extend(warn);
    }
    records.sort_by_key(Record::sort_key);
    warnings.sort();
    warnings.dedup();
    let pass = records.iter().all(|r| r.pass);
    emit(g, &Report { pass, records, warnings })?;
    Ok(Outcome::from_pass(pass))
}

/// Whether `all` includes a suite at (N, m); explicit requests are checked by the suite itself.
fn fits(s: Suite, n: u32, m: usize) -> bool {
    let count = |k: usize| (n as usize).pow(k as u32);
    match s {
        Suite::Jw | Suite::Sft => count(m) <= 64,
        Suite::Quadratic => n <= 3,
        Suite::Rp => count(2 * m) <= 256,
        _ => true,
    }
}

fn value_json(v: &TangleValue) -> serde_json::Value {
    match v {
        TangleValue::Scalar(s) => json!({ "kind": "scalar", "value": ScalarJson::from_scalar(s) }),
        TangleValue::Operator(m) => json!({ "kind": "operator", "value": MatrixJson::from_tangle(m) }),
    }
}

pub fn eval_tangle(g: &Global, input: Option<&Path>, word: Option<&str>) -> Result<Outcome> {
    let text = match (input, word) {
        (Some(p), _) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
        (None, Some(w)) => w.replace(';', "\n"),
        (None, None) => bail!("give --input or --word"),
    };
    let parsed = tangle::parse_tangle(&text)?;
    let n = single_n(g, parsed.n)?;
    if let Some(h) = parsed.n {
        if h != n {
            bail!("the word declares N = {} but --N is {}", h, n);
        }
    }
    let ctx = context(g, n, single_sign(g, n)?)?;
    let value = tangle::evaluate(&ctx, &parsed)?;
    let out = json!({
        "N": n,
        "zeta_sign": ctx.zeta_sign(),
        "in": parsed.in_strands,
        "out": parsed.out_strands,
        "result": value_json(&value),
        "warnings": ctx.warnings(),
    });
    emit(g, &out)?;
    Ok(Outcome::Pass)
}

fn read_coupling(path: &Path, g: &Global) -> Result<(Context, CouplingMatrix)> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let parsed: CouplingJson =
        serde_json::from_str(&text).with_context(|| format!("{} is not a coupling matrix", path.display()))?;
    let n = single_n(g, Some(parsed.n))?;
    let ctx = Context::builder(n).zeta_sign(single_sign(g, n)?).mode(Mode::Approx).build()?;
    let j = parsed.to_coupling(&ctx)?;
    j.validate()?;
    Ok((ctx, j))
}

#[derive(Serialize)]
struct ValueJson {
    beta: f64,
    x: usize,
    value: f64,
}

#[derive(Serialize)]
struct GramJson {
    beta: f64,
    grade: u32,
    min_eigenvalue: f64,
}

pub fn rp(
    g: &Global,
    input: Option<&Path>,
    betas: &[f64],
    ensemble: Option<usize>,
    xs: Option<&Path>,
) -> Result<Outcome> {
    let tol = g.tol.unwrap_or(rp::DEFAULT_TOL);
    if let Some(count) = ensemble {
        let n = single_n(g, None)?;
        let m = match &g.m {
            Some(t) => match parse_range(t)?.as_slice() {
                [m] => *m as usize,
                _ => bail!("--ensemble takes a single --m"),
            },
            None => 1,
        };
        let ctx = Context::builder(n).zeta_sign(single_sign(g, n)?).mode(Mode::Approx).build()?;
        let ens = rp::random_ensemble(&ctx, m, count, g.seed);
        let report = rp::theorem_equivalence(&ens, betas, tol)?;
        let records: Vec<_> = report
            .records
            .iter()
            .zip(&ens)
            .map(|(r, j)| {
                let coupling = (r.j0_psd != r.rp_positive).then(|| CouplingJson::from_coupling(j));
                json!({
                    "coupling": coupling,
                    "j0_psd": r.j0_psd,
                    "j0_min_eigenvalue": r.j0_min_eigenvalue,
                    "rp_positive": r.rp_positive,
                    "witness_beta": r.witness.as_ref().map(|w| w.beta),
                    "witness_value": r.witness.as_ref().map(|w| w.value),
                })
            })
            .collect();
        emit(
            g,
            &json!({
                "N": n, "m": m, "seed": g.seed, "betas": betas, "tol": tol,
                "count": ens.len(), "mismatches": report.mismatches,
                "lift_convention": rp::LIFT_CONVENTION, "records": records,
            }),
        )?;
        return Ok(Outcome::from_pass(report.mismatches == 0));
    }

    let Some(path) = input else { bail!("give --input or --ensemble") };
    let (ctx, j) = read_coupling(path, g)?;
    let elements: Vec<PfElement> = match xs {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            let list: Vec<PfJson> =
                serde_json::from_str(&text).with_context(|| format!("{} is not a list of elements", p.display()))?;
            let mut out = Vec::new();
            for x in &list {
                if x.m != j.m() {
                    bail!("test element has m = {} but the coupling has m = {}", x.m, j.m());
                }
                out.push(x.to_element(&ctx)?);
            }
            out
        }
        None => pappa::index::all(ctx.n(), j.m()).map(|d| PfElement::basis(&ctx, &d)).collect(),
    };
    let report = rp::rp_check(&j, betas, &elements, tol)?;
    let witness =
        report.witness.as_ref().map(|w| json!({ "beta": w.beta, "x": PfJson::from_element(&w.x), "value": w.value }));
    emit(
        g,
        &json!({
            "N": ctx.n(), "m": j.m(), "betas": betas, "tol": tol,
            "positive": report.positive,
            "min_value": report.min_value,
            "slope_min": report.slope_min,
            "j0_psd": rp::j0_psd(&j, tol),
            "values": report.values.iter().map(|&(beta, x, value)| ValueJson { beta, x, value }).collect::<Vec<_>>(),
            "grams": report.grams.iter().map(|r| GramJson { beta: r.beta, grade: r.grade, min_eigenvalue: r.min_eigenvalue }).collect::<Vec<_>>(),
            "witness": witness,
            "lift_convention": report.lift_convention,
        }),
    )?;
    Ok(Outcome::from_pass(report.positive))
}

pub fn pauli(g: &Global, version: &str) -> Result<Outcome> {
    let n = single_n(g, None)?;
    let ctx = context(g, n, single_sign(g, n)?)?;
    let v: pappa::pauli::Version = version.parse()?;
    let t = pappa::pauli::pauli_xyz(&ctx, v);
    emit(
        g,
        &json!({
            "N": n, "zeta_sign": ctx.zeta_sign(), "version": version,
            "X": MatrixJson::from_operator(&t.x),
            "Y": MatrixJson::from_operator(&t.y),
            "Z": MatrixJson::from_operator(&t.z),
        }),
    )?;
    Ok(Outcome::Pass)
}

pub fn braid(g: &Global) -> Result<Outcome> {
    let n = single_n(g, None)?;
    let ctx = context(g, n, single_sign(g, n)?)?;
    let (bp, bm) = pappa::braid::braid_matrices(&ctx);
    emit(
        g,
        &json!({
            "N": n, "zeta_sign": ctx.zeta_sign(),
            "b+": MatrixJson::from_operator(&bp),
            "b-": MatrixJson::from_operator(&bm),
            "warnings": ctx.warnings(),
        }),
    )?;
    Ok(Outcome::Pass)
}

pub fn clifford(g: &Global, enumerate: bool, cap: usize) -> Result<Outcome> {
    let n = single_n(g, None)?;
    let ctx = context(g, n, single_sign(g, n)?)?;
    if enumerate {
        let e = pappa::clifford::clifford_enumerate(&ctx, cap);
        emit(g, &json!({ "N": n, "order": e.order, "closed": e.closed }))?;
        return Ok(Outcome::from_pass(e.closed));
    }
    let (f, gg) = pappa::clifford::fourier_gaussian(&ctx);
    emit(
        g,
        &json!({ "N": n, "zeta_sign": ctx.zeta_sign(), "F": MatrixJson::from_operator(&f), "G": MatrixJson::from_operator(&gg) }),
    )?;
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::parse_range;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert_eq!(parse_range("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_range("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_range("2, 4").unwrap(), vec![2, 4]);
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
    }
}
