//! The subcommands, each producing a [`Report`].

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use envelope_lab::arrangement::{
    default_cap_for_points, resolution_data, saturated_hilbert_window, Arrangement, ResolutionData,
};
use envelope_lab::detloci::{
    check_cramer_membership, check_decomposition, codimension_claims, witness_noninclusions, GenericMatrixRing,
};
use envelope_lab::envelope::{
    classify_envelope, envelope_profile, geometric_generating_degrees, Envelope, EnvelopeSettings, Smoothness,
};
use envelope_lab::hilbertburch::{
    d_r_for_n, expected_profile, generic_resolution_data, is_positive, points_count, verify_hb_sample, HbTrial,
};
use envelope_lab::{Error, Result};

use crate::report::{Item, Report, ReportBuilder, RunConfig};

/// Pass rate below which a Monte-Carlo item fails.
pub const PASS_RATE: f64 = 0.95;

/// Deterministic generator for item `stream` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn field(cfg: &RunConfig) -> Result<envelope_lab::algebra::Field> {
    envelope_lab::algebra::Field::new(cfg.prime)
}

fn rate_summary(passes: usize, trials: usize) -> String {
    format!("{passes}/{trials} passed ({:.1}%)", 100.0 * passes as f64 / trials.max(1) as f64)
}

fn rate_ok(passes: usize, trials: usize) -> bool {
    trials > 0 && passes as f64 >= PASS_RATE * trials as f64
}

/// Hilbert function, resolution data and envelope profile of a point file.
pub fn analyze(cfg: &RunConfig, text: &str) -> Result<Report> {
    let field = field(cfg)?;
    let z = Arrangement::parse(field, text)?;
    if z.is_empty() {
        return Err(Error::InvalidArgument("point file contains no points".into()));
    }
    let n = z.len();
    let cap = cfg.max_degree.unwrap_or_else(|| default_cap_for_points(n));
    let mut rep = ReportBuilder::new("analyze", cfg, text);
    let (window, _) = saturated_hilbert_window(&z, cap)?;
    rep.push(Item::new("points", true, format!("{n} distinct points"), n));
    let h: Vec<String> = window.values.iter().map(|v| v.to_string()).collect();
    rep.push(Item::new("hilbert-function", true, format!("h = {} ...", h.join(",")), &window));
    let r = rep.timed("resolution", || resolution_data(&z, cap))?;
    let positive = is_positive(&r);
    rep.push(Item::new(
        "resolution-data",
        true,
        format!("{r} ({})", if positive { "positive" } else { "not positive" }),
        json!({ "a": r.a(), "b": r.b(), "text": r.to_string(), "positive": positive }),
    ));
    let settings = EnvelopeSettings { cap, seed: cfg.seed };
    let profile = rep.timed("envelopes", || envelope_profile(&z, n, r.a(), &settings))?;
    for report in &profile.reports {
        let mark = if report.is_ggd { " [ggd]" } else { "" };
        rep.push(Item::new(format!("Z_{}", report.d), true, format!("{}{mark}", report.envelope.label()), report));
    }
    rep.push(Item::new("ggds", true, format!("{:?}", profile.ggds), &profile.ggds));
    Ok(rep.finish())
}

/// `n` general points, written as a point file.
pub fn sample_points(cfg: &RunConfig, n: usize) -> Result<(Report, String)> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one point".into()));
    }
    let field = field(cfg)?;
    let z = Arrangement::sample_general(field, n, &mut trial_rng(cfg.seed, 0));
    let text = z.to_text();
    let mut rep = ReportBuilder::new("sample-points", cfg, &n.to_string());
    rep.push(Item::new(
        "points",
        true,
        format!("{n} points from seed {}", cfg.seed),
        json!({ "n": n, "seed": cfg.seed, "points": text }),
    ));
    Ok((rep.finish(), text))
}

/// Expected `Z_d` and ggds for general points, by the clauses for `(d, r)`.
fn generic_clause_holds(d: usize, r: usize, envelope: &Envelope, ggds: &[usize]) -> (bool, String) {
    let (want_ggds, env_ok, what) = match r {
        1 => (
            vec![d, d + 1],
            matches!(envelope, Envelope::Curve { curve_degree, excess: 0, smooth: Smoothness::Smooth } if *curve_degree == d),
            format!("smooth curve of degree {d}"),
        ),
        2 if d > 2 => (
            vec![d, d + 1],
            *envelope == Envelope::Finite { scheme_degree: d * d, distinct_count: d * d, reduced: true },
            format!("{} reduced points", d * d),
        ),
        _ => (vec![d], matches!(envelope, Envelope::EqualsZ { .. }), "Z".to_string()),
    };
    let ok = env_ok && ggds == want_ggds.as_slice();
    let detail = if ok {
        String::new()
    } else {
        format!("Z_{d} = {} (want {what}), ggds {ggds:?} (want {want_ggds:?})", envelope.label())
    };
    (ok, detail)
}

fn generic_trial(field: envelope_lab::algebra::Field, n: usize, cap: usize, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let z = Arrangement::sample_general(field, n, rng);
    let expected = generic_resolution_data(n)?;
    let found = resolution_data(&z, cap)?;
    if found != expected {
        return Ok(Some(format!("resolution data {found}, expected {expected}")));
    }
    let (d, r) = d_r_for_n(n);
    let ggds = geometric_generating_degrees(&z, found.a(), cap)?;
    let settings = EnvelopeSettings { cap, seed: rng.gen() };
    let envelope = classify_envelope(&z, n, d, &settings)?.envelope;
    let (ok, detail) = generic_clause_holds(d, r, &envelope, &ggds);
    Ok((!ok).then_some(detail))
}

#[derive(Serialize)]
struct TrialFailure {
    trial: usize,
    reason: String,
}

/// Monte-Carlo check of the generic resolution data and envelope clauses.
pub fn verify_generic(cfg: &RunConfig, n_min: usize, n_max: usize) -> Result<Report> {
    if n_min < 2 || n_min > n_max || n_max > 60 {
        return Err(Error::InvalidArgument(format!("need 2 <= n_min <= n_max <= 60, got {n_min}..{n_max}")));
    }
    let field = field(cfg)?;
    let mut rep = ReportBuilder::new("verify-generic", cfg, &format!("{n_min}..{n_max}"));
    for n in n_min..=n_max {
        let cap = cfg.max_degree.unwrap_or_else(|| default_cap_for_points(n));
        let (d, r) = d_r_for_n(n);
        let expected = generic_resolution_data(n)?;
        let failures: Vec<TrialFailure> = rep.timed(&format!("n={n:02}"), || {
            (0..cfg.trials)
                .filter_map(|t| {
                    let mut rng = trial_rng(cfg.seed, ((n as u64) << 32) | t as u64);
                    match generic_trial(field, n, cap, &mut rng) {
                        Ok(None) => None,
                        Ok(Some(reason)) => Some(TrialFailure { trial: t, reason }),
                        Err(e) => Some(TrialFailure { trial: t, reason: e.to_string() }),
                    }
                })
                .collect()
        });
        let passes = cfg.trials - failures.len();
        let extra = if r == 2 && d > 2 { Some(d * d - n) } else { None };
        rep.push(Item::new(
            format!("n={n}"),
            rate_ok(passes, cfg.trials),
            rate_summary(passes, cfg.trials),
            json!({
                "n": n, "d": d, "r": r, "expected": expected.to_string(), "extra_points": extra,
                "passes": passes, "trials": cfg.trials, "failures": failures,
            }),
        ));
    }
    Ok(rep.finish())
}

/// Monte-Carlo check of general Hilbert-Burch matrices with data `r`.
pub fn verify_theorem(cfg: &RunConfig, r: &ResolutionData) -> Result<Report> {
    if !is_positive(r) {
        return Err(Error::NonPositive(r.to_string()));
    }
    let field = field(cfg)?;
    let expected = expected_profile(r)?;
    let n = points_count(r)?;
    let mut rep = ReportBuilder::new("verify-theorem", cfg, &r.to_string());
    let trials: Vec<std::result::Result<HbTrial, String>> = rep.timed("trials", || {
        (0..cfg.trials)
            .map(|t| verify_hb_sample(field, r, &mut trial_rng(cfg.seed, t as u64)).map_err(|e| e.to_string()))
            .collect()
    });
    let resamples: usize = trials.iter().flatten().map(|t| t.resamples).sum();
    rep.add_resamples(resamples);
    let passes = trials.iter().filter(|t| matches!(t, Ok(t) if t.passed)).count();
    let failures: Vec<TrialFailure> = trials
        .iter()
        .enumerate()
        .filter_map(|(i, t)| match t {
            Ok(t) if t.passed => None,
            Ok(t) => Some(TrialFailure {
                trial: i,
                reason: t.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; "),
            }),
            Err(e) => Some(TrialFailure { trial: i, reason: e.clone() }),
        })
        .collect();
    rep.push(Item::new(
        "full-pass",
        rate_ok(passes, cfg.trials),
        format!("{} for {r}, {n} points", rate_summary(passes, cfg.trials)),
        json!({ "data": r.to_string(), "points": n, "passes": passes, "trials": cfg.trials,
                "degenerate_resamples": resamples, "failures": failures }),
    ));
    // per-check pass rates, in the order the checks are run
    let mut order: Vec<String> = Vec::new();
    let mut counts: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    let mut observed: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for t in trials.iter().flatten() {
        for c in &t.checks {
            if !counts.contains_key(&c.name) {
                order.push(c.name.clone());
            }
            let e = counts.entry(c.name.clone()).or_default();
            e.0 += c.passed as usize;
            e.1 += 1;
            if c.name.starts_with("envelope-") {
                *observed.entry(c.name.clone()).or_default().entry(c.detail.clone()).or_default() += 1;
            }
        }
    }
    for name in order {
        let (p, total) = counts[&name];
        let mut data = json!({ "passes": p, "trials": total });
        if let Some(obs) = observed.get(&name) {
            let d: usize = name.trim_start_matches("envelope-").parse().unwrap_or(0);
            data["expected"] = serde_json::to_value(expected.at(d)).unwrap();
            data["observed"] = serde_json::to_value(obs).unwrap();
        }
        rep.push(Item::new(format!("check:{name}"), rate_ok(p, cfg.trials), rate_summary(p, cfg.trials), data));
    }
    Ok(rep.finish())
}

/// Graded checks of the determinantal-locus decomposition for each `k`.
pub fn detloci(cfg: &RunConfig, ks: &[usize]) -> Result<Report> {
    let field = field(cfg)?;
    let mut rep = ReportBuilder::new("detloci", cfg, &format!("{ks:?} {:?}", cfg.max_degree));
    for &k in ks {
        let ring = GenericMatrixRing::new(field, k)?;
        let e = cfg.max_degree.unwrap_or(k + 4);
        for r in 1..=k + 1 {
            let d = rep.timed(&format!("k={k} decomposition r={r}"), || check_decomposition(&ring, r, e))?;
            rep.push(Item::new(
                format!("k={k} I_{r} = I_{} ∩ J_{r}", k + 1),
                d.holds,
                format!("verified up to degree {e}: {}", if d.holds { "equal in every degree" } else { "mismatch" }),
                &d,
            ));
        }
        for r in 1..=k {
            let c = rep.timed(&format!("k={k} cramer r={r}"), || check_cramer_membership(&ring, r))?;
            rep.push(Item::new(
                format!("k={k} J_{r} F_{} in I_{r}", r + 1),
                c.members && c.f_next_outside_jr,
                format!(
                    "{} products {}; F_{} {} J_{r}; checked J_{r} ⊆ (I_{r} : F_{}) only",
                    c.products,
                    if c.members { "are members" } else { "NOT all members" },
                    r + 1,
                    if c.f_next_outside_jr { "outside" } else { "inside" },
                    r + 1
                ),
                &c,
            ));
            let w = witness_noninclusions(&ring, r)?;
            let ok = w.b_witness && w.a_witness != Some(false);
            let a = match w.a_witness {
                None => "A_r not applicable".to_string(),
                Some(b) => format!("A_r {}", if b { "separates" } else { "FAILS" }),
            };
            rep.push(Item::new(
                format!("k={k} witnesses r={r}"),
                ok,
                format!("{a}, B {}", if w.b_witness { "separates" } else { "FAILS" }),
                &w,
            ));
        }
        for c in codimension_claims(k) {
            rep.push(Item::new(
                format!("k={k} codim {}", c.label),
                c.value == c.expected,
                format!("({}-{})({}-{}) = {}, expected {}", c.m, c.c, c.n, c.c, c.value, c.expected),
                &c,
            ));
        }
    }
    Ok(rep.finish())
}

pub use crate::examples::examples;
