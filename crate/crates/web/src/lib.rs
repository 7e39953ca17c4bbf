//! Browser bindings: three operations returning JSON strings for the demo
//! page in `www/`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use wasm_bindgen::prelude::*;

use envelope_lab::algebra::Field;
use envelope_lab::arrangement::{default_cap_for_points, resolution_data, saturated_hilbert_window, Arrangement, ResolutionData};
use envelope_lab::envelope::{envelope_profile, EnvelopeSettings};
use envelope_lab::hilbertburch::{expected_profile, is_positive, points_count, verify_hb_sample};
use envelope_lab::Result;

/// Random general points as a point file.
pub fn sample_points_text(prime: u32, n: usize, seed: u64) -> Result<String> {
    let field = Field::new(prime as u64)?;
    if n == 0 {
        return Err(envelope_lab::Error::InvalidArgument("need at least one point".into()));
    }
    Ok(Arrangement::sample_general(field, n, &mut ChaCha8Rng::seed_from_u64(seed)).to_text())
}

/// Hilbert function, resolution data and envelope chain of a point file.
pub fn analyze_json(prime: u32, points: &str, seed: u64) -> Result<String> {
    let field = Field::new(prime as u64)?;
    let z = Arrangement::parse(field, points)?;
    if z.is_empty() {
        return Err(envelope_lab::Error::InvalidArgument("no points given".into()));
    }
    let n = z.len();
    let cap = default_cap_for_points(n);
    let (window, _) = saturated_hilbert_window(&z, cap)?;
    let r = resolution_data(&z, cap)?;
    let profile = envelope_profile(&z, n, r.a(), &EnvelopeSettings { cap, seed })?;
    let envelopes: Vec<_> = profile
        .reports
        .iter()
        .map(|rep| json!({ "d": rep.d, "dim": rep.piece_dim, "envelope": rep.envelope.label(), "ggd": rep.is_ggd }))
        .collect();
    Ok(json!({
        "points": n,
        "hilbert": window.values,
        "resolution": r.to_string(),
        "positive": is_positive(&r),
        "envelopes": envelopes,
        "ggds": profile.ggds,
    })
    .to_string())
}

/// Samples Hilbert-Burch matrices with data `data` and tallies the checks.
pub fn verify_theorem_json(prime: u32, data: &str, trials: usize, seed: u64) -> Result<String> {
    let field = Field::new(prime as u64)?;
    let r: ResolutionData = data.parse()?;
    let expected = expected_profile(&r)?;
    let mut passes = 0;
    let mut failures = Vec::new();
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let trial = verify_hb_sample(field, &r, &mut rng)?;
        if trial.passed {
            passes += 1;
        } else {
            let bad: Vec<_> = trial.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
            failures.push(json!({ "trial": t, "checks": bad }));
        }
    }
    Ok(json!({
        "data": r.to_string(),
        "points": points_count(&r)?,
        "expected": expected,
        "passes": passes,
        "trials": trials,
        "failures": failures,
    })
    .to_string())
}

fn js(r: Result<String>) -> std::result::Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen(js_name = samplePoints)]
pub fn sample_points(prime: u32, n: usize, seed: u32) -> std::result::Result<String, JsValue> {
    js(sample_points_text(prime, n, seed as u64))
}

#[wasm_bindgen]
pub fn analyze(prime: u32, points: &str, seed: u32) -> std::result::Result<String, JsValue> {
    js(analyze_json(prime, points, seed as u64))
}

#[wasm_bindgen(js_name = verifyTheorem)]
pub fn verify_theorem(prime: u32, data: &str, trials: usize, seed: u32) -> std::result::Result<String, JsValue> {
    js(verify_theorem_json(prime, data, trials, seed as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_then_analyze() {
        let text = sample_points_text(32003, 8, 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&analyze_json(32003, &text, 0).unwrap()).unwrap();
        assert_eq!(v["resolution"], "a=3,3,4 b=5,5");
        assert_eq!(v["ggds"], json!([3, 4]));
        assert_eq!(v["envelopes"][2]["envelope"], "finite(9, 9 distinct, reduced)");
    }

    #[test]
    fn theorem_tally() {
        let v: serde_json::Value = serde_json::from_str(&verify_theorem_json(32003, "a=2,2 b=4", 3, 0).unwrap()).unwrap();
        assert_eq!(v["passes"], 3);
        assert_eq!(v["points"], 4);
    }

    #[test]
    fn errors_are_reported() {
        assert!(analyze_json(32003, "1 2\n", 0).is_err());
        assert!(verify_theorem_json(32003, "a=2,2,3 b=3,4", 1, 0).is_err());
        assert!(sample_points_text(10, 3, 0).is_err());
    }
}
