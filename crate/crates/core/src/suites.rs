//! Seeded randomized verification suites.
//!
//! Every case is drawn from its own ChaCha8 stream (`seed`, case index), so
//! a case can be rerun in isolation and the report does not depend on
//! thread scheduling. Case size grows with the index, which makes the
//! first failing case the smallest one the run found; that case is
//! reported as a self-contained JSON instance accepted by [`replay`].

use crate::combinat::{binomial_convolution_check, cycle_sum_identity_check, mobius_divisor_lemma_check};
use crate::cones::{self, Composition, ConePoint};
use crate::counting::{atable_from_ctable, c_from_a, random_weil_invariant, CTable};
use crate::error::{Error, Result};
use crate::integrality::{binom_div_check, star_congruence_check, wala_check, random_wala_instance, WalaInstance};
use crate::spectral::gm::{gm_family_limit, random_family, residue_count_integral_check, GmFamily, RationalFn};
use crate::spectral::lattice::{self, averaging_check, closed_form, closed_form_theta, direct_sum, random_point};
use crate::spectral::matrix::{
    block_det_lemma_check, kappa, kappa_lemma_check, random_matrix, random_weights, random_zero_row_col_sum,
    random_zero_row_sum, QMatrix,
};
use crate::spectral::pairs::{aggregation_check, delta_character_sum, delta_mobius_sum, matr_triple, random_datum, random_dtable, DTable, DiscretePairDatum};
use crate::spectral::permutations;
use crate::spectral::trees::{kirchhoff, spanning_tree_sum};
use crate::util::{parse_rational, rat, ratio};
use num::complex::Complex64;
use num::integer::Integer;
use num::rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub const SUITES: [&str; 11] = [
    "kappa",
    "matrix-tree",
    "matr",
    "delta",
    "gm-family",
    "cones",
    "lattice",
    "integrality",
    "combinat",
    "aggregation",
    "roundtrip",
];

pub fn default_iterations(suite: &str) -> usize {
    match suite {
        "roundtrip" => 10,
        "gm-family" | "aggregation" => 30,
        "lattice" => 40,
        _ => 100,
    }
}

/// Outcome of one case.
struct Outcome {
    pass: bool,
    tally: Option<&'static str>,
}

impl Outcome {
    fn of(pass: bool) -> Self {
        Outcome { pass, tally: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub iterations: usize,
    pub passed_cases: usize,
    pub passed: bool,
    pub tallies: BTreeMap<String, usize>,
    pub counterexample: Option<Value>,
    pub error: Option<String>,
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn size_for(index: usize, iterations: usize, max: usize) -> usize {
    1 + index * max / iterations.max(1)
}

fn generate(suite: &str, rng: &mut ChaCha8Rng, index: usize, size: usize) -> Result<Value> {
    Ok(match suite {
        "kappa" => gen_kappa(rng, index, size),
        "matrix-tree" => gen_matrix_tree(rng, size),
        "matr" => json!({ "datum": random_datum(size.clamp(1, 5), rng) }),
        "delta" => gen_delta(rng, size),
        "gm-family" => gen_gm(rng, index, size),
        "cones" => gen_cones(rng, index, size),
        "lattice" => gen_lattice(rng, size),
        "integrality" => gen_integrality(rng, index),
        "combinat" => gen_combinat(rng, index, size),
        "aggregation" => gen_aggregation(rng, size),
        "roundtrip" => gen_roundtrip(rng, size)?,
        other => return Err(Error::Argument(format!("unknown suite {other:?}; known: {}", SUITES.join(", ")))),
    })
}

fn check(suite: &str, inst: &Value) -> Result<Outcome> {
    match suite {
        "kappa" => check_kappa(inst),
        "matrix-tree" => check_matrix_tree(inst),
        "matr" => check_matr(inst),
        "delta" => check_delta(inst),
        "gm-family" => check_gm(inst),
        "cones" => check_cones(inst),
        "lattice" => check_lattice(inst),
        "integrality" => check_integrality(inst),
        "combinat" => check_combinat(inst),
        "aggregation" => check_aggregation(inst),
        "roundtrip" => check_roundtrip(inst),
        other => Err(Error::Argument(format!("unknown suite {other:?}; known: {}", SUITES.join(", ")))),
    }
}

fn run_parallel<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(count.max(1));
    let mut slots: Vec<Option<T>> = (0..count).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                scope.spawn(move || (w..count).step_by(workers).map(|i| (i, f(i))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            for (i, v) in h.join().expect("suite worker panicked") {
                slots[i] = Some(v);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("every index is visited")).collect()
}

/// Runs `iterations` cases of `suite` from `seed`.
pub fn run_suite(suite: &str, seed: u64, iterations: usize) -> Result<SuiteReport> {
    if !SUITES.contains(&suite) {
        return Err(Error::Argument(format!("unknown suite {suite:?}; known: {}", SUITES.join(", "))));
    }
    let max_size = 6;
    let results = run_parallel(iterations, |i| {
        let mut rng = case_rng(seed, i);
        let inst = generate(suite, &mut rng, i, size_for(i, iterations, max_size))?;
        let out = check(suite, &inst);
        Ok::<_, Error>((inst, out))
    });
    let mut report = SuiteReport {
        suite: suite.to_string(),
        seed,
        iterations,
        passed_cases: 0,
        passed: true,
        tallies: BTreeMap::new(),
        counterexample: None,
        error: None,
    };
    for r in results {
        let (inst, out) = r?;
        match out {
            Ok(o) => {
                if let Some(t) = o.tally {
                    *report.tallies.entry(t.to_string()).or_default() += 1;
                }
                if o.pass {
                    report.passed_cases += 1;
                } else if report.passed {
                    report.passed = false;
                    report.counterexample = Some(json!({ "suite": suite, "instance": inst }));
                }
            }
            Err(e) => {
                if report.passed {
                    report.passed = false;
                    report.error = Some(e.to_string());
                    report.counterexample = Some(json!({ "suite": suite, "instance": inst }));
                }
            }
        }
    }
    Ok(report)
}

/// Reruns a counterexample emitted by [`run_suite`].
pub fn replay(doc: &Value) -> Result<SuiteReport> {
    let suite = doc["suite"]
        .as_str()
        .ok_or_else(|| Error::Parse("replay document needs a \"suite\" string".into()))?;
    if !SUITES.contains(&suite) {
        return Err(Error::Argument(format!("unknown suite {suite:?}")));
    }
    let inst = &doc["instance"];
    let mut report = SuiteReport {
        suite: suite.to_string(),
        seed: 0,
        iterations: 1,
        passed_cases: 0,
        passed: true,
        tallies: BTreeMap::new(),
        counterexample: None,
        error: None,
    };
    match check(suite, inst) {
        Ok(o) => {
            if let Some(t) = o.tally {
                report.tallies.insert(t.to_string(), 1);
            }
            if o.pass {
                report.passed_cases = 1;
            } else {
                report.passed = false;
                report.counterexample = Some(doc.clone());
            }
        }
        Err(e @ (Error::Parse(_) | Error::Argument(_) | Error::Dimension(_))) => return Err(e),
        Err(e) => {
            report.passed = false;
            report.error = Some(e.to_string());
            report.counterexample = Some(doc.clone());
        }
    }
    Ok(report)
}

fn parse_err(what: &str) -> Error {
    Error::Parse(format!("instance field {what:?} is missing or malformed"))
}

fn field<'a>(v: &'a Value, k: &str) -> Result<&'a Value> {
    v.get(k).ok_or_else(|| parse_err(k))
}

fn get_u64(v: &Value, k: &str) -> Result<u64> {
    field(v, k)?.as_u64().ok_or_else(|| parse_err(k))
}

fn get_i64(v: &Value, k: &str) -> Result<i64> {
    field(v, k)?.as_i64().ok_or_else(|| parse_err(k))
}

fn get_str<'a>(v: &'a Value, k: &str) -> Result<&'a str> {
    field(v, k)?.as_str().ok_or_else(|| parse_err(k))
}

fn get_rat(v: &Value, k: &str) -> Result<BigRational> {
    parse_rational(get_str(v, k)?)
}

fn rats_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn parse_rats(v: &Value, what: &str) -> Result<Vec<BigRational>> {
    v.as_array()
        .ok_or_else(|| parse_err(what))?
        .iter()
        .map(|x| x.as_str().ok_or_else(|| parse_err(what)).and_then(parse_rational))
        .collect()
}

fn from_value<T: serde::de::DeserializeOwned>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

// kappa: lemma equalities on zero-sum matrices and the block determinant

fn gen_kappa(rng: &mut ChaCha8Rng, index: usize, size: usize) -> Value {
    let n = size.clamp(1, 6);
    let a = if index.is_multiple_of(2) {
        random_zero_row_col_sum(n, rng)
    } else {
        random_zero_row_sum(n, rng)
    };
    let k = n.min(4);
    let blocks: Vec<Value> = (0..k)
        .map(|_| {
            let len = rng.gen_range(1..=2);
            rats_json(&(0..len).map(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect::<Vec<_>>())
        })
        .collect();
    json!({
        "a": a,
        "u": rats_json(&random_weights(n, rng)),
        "v": rats_json(&random_weights(n, rng)),
        "block_a": random_matrix(k, rng),
        "block_u": blocks,
    })
}

fn check_kappa(v: &Value) -> Result<Outcome> {
    let a: QMatrix = from_value(field(v, "a")?, "a")?;
    let u = parse_rats(field(v, "u")?, "u")?;
    let w = parse_rats(field(v, "v")?, "v")?;
    let (ok, _) = kappa_lemma_check(&a, &u, &w)?;
    let ba: QMatrix = from_value(field(v, "block_a")?, "block_a")?;
    let us = field(v, "block_u")?
        .as_array()
        .ok_or_else(|| parse_err("block_u"))?
        .iter()
        .map(|x| parse_rats(x, "block_u"))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::of(ok && block_det_lemma_check(&ba, &us)?))
}

fn gen_matrix_tree(rng: &mut ChaCha8Rng, size: usize) -> Value {
    let r = size.clamp(1, 6);
    let mut w = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            w.push(json!([i, j, ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3)).to_string()]));
        }
    }
    json!({ "r": r, "weights": w })
}

fn check_matrix_tree(v: &Value) -> Result<Outcome> {
    let r = get_u64(v, "r")? as usize;
    let mut w = BTreeMap::new();
    for e in field(v, "weights")?.as_array().ok_or_else(|| parse_err("weights"))? {
        let i = e[0].as_u64().ok_or_else(|| parse_err("weights"))? as usize;
        let j = e[1].as_u64().ok_or_else(|| parse_err("weights"))? as usize;
        let x = parse_rational(e[2].as_str().ok_or_else(|| parse_err("weights"))?)?;
        w.insert((i.min(j), i.max(j)), x);
    }
    let y = |i: usize, j: usize| w.get(&(i, j)).cloned().unwrap_or_else(|| rat(0));
    let tree = spanning_tree_sum(r, y, &rat(1))?;
    Ok(Outcome::of(tree == kappa(&kirchhoff(r, y))?))
}

fn check_matr(v: &Value) -> Result<Outcome> {
    let datum: DiscretePairDatum = from_value(field(v, "datum")?, "datum")?;
    datum.validate()?;
    let t = matr_triple(&datum)?;
    Ok(Outcome {
        pass: t.agree,
        tally: Some(if t.nu_count_variant_agrees {
            "nu_count_variant_agrees"
        } else {
            "nu_count_variant_refuted"
        }),
    })
}

fn gen_delta(rng: &mut ChaCha8Rng, size: usize) -> Value {
    let len = size.clamp(1, 4);
    let ls: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=8)).collect();
    let fixes: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=8)).collect();
    json!({ "ls": ls, "fixes": fixes })
}

fn check_delta(v: &Value) -> Result<Outcome> {
    let ls: Vec<u64> = from_value(field(v, "ls")?, "ls")?;
    let fixes: Vec<u64> = from_value(field(v, "fixes")?, "fixes")?;
    Ok(Outcome::of(delta_character_sum(&ls, &fixes)? == delta_mobius_sum(&ls, &fixes)?))
}

// gm-family: even cases compare limits, odd cases count zeros and poles

fn roots_json(rng: &mut ChaCha8Rng, max: usize) -> Value {
    let choices = [ratio(1, 3), ratio(1, 2), rat(2), rat(3)];
    let count = rng.gen_range(0..=max);
    Value::Array(
        (0..count)
            .map(|_| {
                let x = choices[rng.gen_range(0..choices.len())].clone();
                let x = if rng.gen_bool(0.5) { -x } else { x };
                Value::String(x.to_string())
            })
            .collect(),
    )
}

fn gen_gm(rng: &mut ChaCha8Rng, index: usize, size: usize) -> Value {
    if index.is_multiple_of(2) {
        let r = 2 + size % 3;
        json!({ "kind": "limit", "family": random_family(r, 2, rng).to_json() })
    } else {
        json!({
            "kind": "residue",
            "beta": { "zeros": roots_json(rng, 3), "poles": roots_json(rng, 2) },
            "minus": { "zeros": roots_json(rng, 3), "poles": roots_json(rng, 2) },
        })
    }
}

fn rational_fn(v: &Value) -> Result<RationalFn> {
    Ok(RationalFn::from_roots(&parse_rats(field(v, "zeros")?, "zeros")?, &parse_rats(field(v, "poles")?, "poles")?))
}

fn check_gm(v: &Value) -> Result<Outcome> {
    match get_str(v, "kind")? {
        "limit" => {
            let fam = GmFamily::from_json(field(v, "family")?)?;
            Ok(Outcome::of(gm_family_limit(&fam, 1e-6)?.agrees(1e-6)))
        }
        "residue" => {
            let res = residue_count_integral_check(&rational_fn(field(v, "beta")?)?, &rational_fn(field(v, "minus")?)?, 512)?;
            Ok(Outcome::of(res.ok))
        }
        _ => Err(parse_err("kind")),
    }
}

// cones

fn point_json(p: &ConePoint) -> Value {
    json!({ "comp": p.comp.parts(), "coords": rats_json(&p.coords) })
}

fn parse_point(v: &Value) -> Result<ConePoint> {
    let parts: Vec<u32> = from_value(field(v, "comp")?, "comp")?;
    ConePoint::new(Composition::new(parts)?, parse_rats(field(v, "coords")?, "coords")?)
}

fn parse_comp(v: &Value, k: &str) -> Result<Composition> {
    Composition::new(from_value(field(v, k)?, k)?)
}

fn gen_cones(rng: &mut ChaCha8Rng, index: usize, size: usize) -> Value {
    let n = 1 + (size % 5) as u32;
    let p = cones::random_composition(n, rng);
    match index % 3 {
        0 => {
            let qs = p.coarsenings();
            let q = qs[rng.gen_range(0..qs.len())].clone();
            let h = cones::random_generic_point(&Composition::borel(n), 5, rng);
            json!({ "kind": "langlands", "p": p.parts(), "q": q.parts(), "h": point_json(&h) })
        }
        1 => {
            let h = cones::random_generic_point(&p, 6, rng);
            let t = cones::random_positive_chamber(n, 4, rng);
            json!({ "kind": "gamma", "p": p.parts(), "h": point_json(&h), "t": point_json(&t) })
        }
        _ => {
            let h = cones::random_generic_point(&Composition::borel(n), 5, rng);
            let t = cones::random_generic_point(&Composition::borel(n), 3, rng);
            json!({ "kind": "inversion", "p": p.parts(), "h": point_json(&h), "t": point_json(&t) })
        }
    }
}

fn check_cones(v: &Value) -> Result<Outcome> {
    let p = parse_comp(v, "p")?;
    let h = parse_point(field(v, "h")?)?;
    Ok(Outcome::of(match get_str(v, "kind")? {
        "langlands" => cones::langlands_identity_check(&p, &parse_comp(v, "q")?, &h)?,
        "gamma" => {
            let t = parse_point(field(v, "t")?)?;
            cones::gamma_prime(&p, &h, &t)? == i64::from(cones::gamma(&p, &h, &cones::project(&t, &p)?)?)
        }
        "inversion" => cones::gamma_inversion_check(&p, &h, &parse_point(field(v, "t")?)?)?,
        _ => return Err(parse_err("kind")),
    }))
}

// lattice

fn gen_lattice(rng: &mut ChaCha8Rng, size: usize) -> Value {
    let r = 2 + size % 2;
    let ns: Vec<u32> = (0..r).map(|_| rng.gen_range(1..=2)).collect();
    let perms = permutations(r);
    let s = perms[rng.gen_range(0..perms.len())].clone();
    let e = rng.gen_range(-3..=4);
    let lambda: Vec<[f64; 2]> = random_point(&ns, rng).iter().map(|z| [z.re, z.im]).collect();
    json!({ "ns": ns, "s": s, "e": e, "lambda": lambda, "bound": 40 })
}

fn check_lattice(v: &Value) -> Result<Outcome> {
    let ns: Vec<u32> = from_value(field(v, "ns")?, "ns")?;
    let s: Vec<usize> = from_value(field(v, "s")?, "s")?;
    let e = get_i64(v, "e")?;
    let bound = get_u64(v, "bound")? as u32;
    let pts: Vec<[f64; 2]> = from_value(field(v, "lambda")?, "lambda")?;
    let lambda: Vec<Complex64> = pts.iter().map(|p| Complex64::new(p[0], p[1])).collect();
    let d = direct_sum(&ns, &s, e, &lambda, bound)?;
    let c = closed_form(&ns, &s, e, &lambda)?;
    let th = closed_form_theta(&ns, &s, e, &lambda)?;
    let scale = 1.0 + c.norm();
    let mut ok = (d.value() - c).norm() <= d.tail_bound + 1e-9 * scale && (c - th).norm() <= 1e-9 * scale;
    let n: i64 = ns.iter().map(|&x| x as i64).sum();
    if e.gcd(&n) == 1 {
        ok &= averaging_check(&ns, &s, e, &lambda)?.inverse_ok;
    }
    ok &= lattice::degree_minus_one_check(&ns, &s, &lambda)?;
    Ok(Outcome::of(ok))
}

// integrality

fn gen_integrality(rng: &mut ChaCha8Rng, index: usize) -> Value {
    match index % 3 {
        0 | 1 => json!({ "kind": "wala", "instance": random_wala_instance(rng) }),
        _ => {
            let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
            json!({
                "kind": "arith",
                "p": p,
                "alpha": rng.gen_range(1..=3),
                "n": rng.gen_range(1..=50),
                "binom_n": rng.gen_range(-10_000i64..=10_000),
                "binom_m": rng.gen_range(1..=40),
            })
        }
    }
}

fn check_integrality(v: &Value) -> Result<Outcome> {
    match get_str(v, "kind")? {
        "wala" => {
            let inst: WalaInstance = from_value(field(v, "instance")?, "instance")?;
            let rep = wala_check(&inst)?;
            Ok(Outcome {
                pass: rep.divisible,
                tally: Some(if rep.skipped { "skipped" } else { "checked" }),
            })
        }
        "arith" => {
            let star = star_congruence_check(get_u64(v, "p")?, get_u64(v, "alpha")? as u32, get_u64(v, "n")?)?;
            let bn = get_i64(v, "binom_n")?;
            let bin = bn == 0 || binom_div_check(bn, get_u64(v, "binom_m")?)?;
            Ok(Outcome::of(star && bin))
        }
        _ => Err(parse_err("kind")),
    }
}

// combinat

fn gen_combinat(rng: &mut ChaCha8Rng, index: usize, size: usize) -> Value {
    let xi = rng.gen_range(1..=3u32);
    let mult = 1 + (size as u32 + rng.gen_range(0..3)) % 4;
    match index % 3 {
        0 => json!({ "kind": "cycle", "m": xi * mult, "xi": xi, "s": ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)).to_string() }),
        1 => json!({
            "kind": "convolution",
            "k": xi * mult,
            "xi": xi,
            "d": ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)).to_string(),
            "s": ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4)).to_string(),
        }),
        _ => json!({ "kind": "mobius", "t": rng.gen_range(1..=12), "l": rng.gen_range(1..=12), "big_l": rng.gen_range(1..=12) }),
    }
}

fn check_combinat(v: &Value) -> Result<Outcome> {
    Ok(Outcome::of(match get_str(v, "kind")? {
        "cycle" => cycle_sum_identity_check(get_u64(v, "m")? as u32, get_u64(v, "xi")? as u32, &get_rat(v, "s")?)?,
        "convolution" => binomial_convolution_check(
            get_u64(v, "k")? as u32,
            get_u64(v, "xi")? as u32,
            &get_rat(v, "d")?,
            &get_rat(v, "s")?,
        )?,
        "mobius" => mobius_divisor_lemma_check(get_u64(v, "t")?, get_u64(v, "l")?, get_u64(v, "big_l")?),
        _ => return Err(parse_err("kind")),
    }))
}

// aggregation

fn gen_aggregation(rng: &mut ChaCha8Rng, size: usize) -> Value {
    let a = 1 + (size as u32 - 1) % 4;
    let l = rng.gen_range(1..=2u32);
    json!({
        "a": a,
        "l": l,
        "g": rng.gen_range(2..=3),
        "s": ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)).to_string(),
        "table": random_dtable(a * l, rng).to_json(),
    })
}

fn check_aggregation(v: &Value) -> Result<Outcome> {
    let table = DTable::from_json(field(v, "table")?)?;
    let (ok, _) = aggregation_check(
        get_u64(v, "a")? as u32,
        get_u64(v, "l")? as u32,
        get_u64(v, "g")? as u32,
        &get_rat(v, "s")?,
        &table,
    )?;
    Ok(Outcome::of(ok))
}

// roundtrip: plant C_2..C_n, push through the forward formula, recover

fn gen_roundtrip(rng: &mut ChaCha8Rng, size: usize) -> Result<Value> {
    let g = rng.gen_range(2..=3u32);
    let n = 2 + (size as u32 - 1) % 4;
    let mut planted = CTable::with_pic0(g as usize);
    for s in 2..=n {
        planted.insert(s, 1, random_weil_invariant(g as usize, 2, 1, rng))?;
    }
    Ok(json!({ "g": g, "n": n, "planted": planted.to_json() }))
}

fn check_roundtrip(v: &Value) -> Result<Outcome> {
    let g = get_u64(v, "g")? as u32;
    let n = get_u64(v, "n")? as u32;
    let planted = CTable::from_json(field(v, "planted")?)?;
    let a = atable_from_ctable(n, g, &planted)?;
    let back = c_from_a(n, g, &a, &CTable::with_pic0(g as usize))?;
    let mut ok = true;
    for s in 1..=n {
        ok &= back.get(s, 1)? == planted.get(s, 1)?;
    }
    Ok(Outcome::of(ok))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_briefly() {
        for s in SUITES {
            let rep = run_suite(s, 1, 6).unwrap();
            assert!(rep.passed, "{s}: {rep:?}");
            assert_eq!(rep.passed_cases, 6);
        }
    }

    #[test]
    fn unknown_suite_is_an_argument_error() {
        assert!(matches!(run_suite("nope", 0, 1), Err(Error::Argument(_))));
    }

    #[test]
    fn deterministic_reports() {
        let a = serde_json::to_string(&run_suite("cones", 9, 12).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite("cones", 9, 12).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn replay_rechecks_an_instance() {
        let doc = json!({ "suite": "delta", "instance": { "ls": [2, 3], "fixes": [1, 2] } });
        assert!(replay(&doc).unwrap().passed);
        let bad = json!({ "suite": "delta", "instance": { "ls": [2] } });
        assert!(matches!(replay(&bad), Err(Error::Parse(_))));
    }

    #[test]
    fn matr_records_adjudication() {
        let rep = run_suite("matr", 3, 20).unwrap();
        assert!(rep.passed);
        assert!(rep.tallies.get("nu_count_variant_refuted").copied().unwrap_or(0) > 0);
    }
}
