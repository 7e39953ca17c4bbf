//! The six worked scenarios: complete intersection, general points,
//! collinear points and points on a smooth cubic.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use envelope_lab::algebra::{monomial_basis, Field, HomogeneousForm, Scalar};
use envelope_lab::algebra::univariate::UniPoly;
use envelope_lab::arrangement::{
    default_cap_for_points, resolution_data, saturated_hilbert_window, Arrangement, PointP2, ResolutionData,
};
use envelope_lab::envelope::{
    classify_envelope, curve_smoothness, finite_reducedness, geometric_generating_degrees, Envelope, EnvelopeSettings,
    Smoothness,
};
use envelope_lab::hilbertburch::{is_positive, Check};
use envelope_lab::ideal::{FormIdeal, GradedIdeal};
use envelope_lab::Result;

use crate::commands::trial_rng;
use crate::report::{Item, Report, ReportBuilder, RunConfig};

/// Cap used by every scenario; all of them stabilize far below it.
const CAP: usize = 30;

fn check_eq<T: PartialEq + std::fmt::Debug>(name: &str, found: T, want: T) -> Check {
    Check::new(name, found == want, format!("{found:?}, expected {want:?}"))
}

fn check_envelope(name: &str, found: &Envelope, ok: bool, want: &str) -> Check {
    Check::new(name, ok, format!("{}, expected {want}", found.label()))
}

fn smooth_curve(e: &Envelope, degree: usize) -> bool {
    matches!(e, Envelope::Curve { curve_degree, excess: 0, smooth: Smoothness::Smooth } if *curve_degree == degree)
}

fn settings(rng: &mut ChaCha8Rng) -> EnvelopeSettings {
    EnvelopeSettings { cap: CAP, seed: rng.gen() }
}

/// (1) Complete intersection of a conic and a cubic.
fn complete_intersection(field: Field, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let conic = loop {
        let q = HomogeneousForm::random(field, 3, 2, rng);
        if curve_smoothness(&q, CAP)? {
            break q;
        }
    };
    let cubic = HomogeneousForm::random(field, 3, 3, rng);
    let ideal = FormIdeal::plane(field, vec![conic, cubic]);
    let (_, n) = saturated_hilbert_window(&ideal, CAP)?;
    let s = settings(rng);
    let z2 = classify_envelope(&ideal, n, 2, &s)?.envelope;
    let z3 = classify_envelope(&ideal, n, 3, &s)?.envelope;
    let e = 8;
    let reduced = finite_reducedness(&[ideal.piece(e), ideal.piece(e + 1)], n, rng)?;
    Ok(vec![
        check_eq("points", n, 6),
        check_envelope("Z_2", &z2, smooth_curve(&z2, 2), "the conic"),
        check_envelope("Z_3", &z3, z3 == Envelope::EqualsZ { scheme_degree: 6 }, "Z"),
        check_eq("reduced", reduced, (6, true)),
        check_eq("ggds", geometric_generating_degrees(&ideal, &[2, 3], CAP)?, vec![2, 3]),
    ])
}

/// (2) Five general points.
fn five_points(field: Field, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let z = Arrangement::sample_general(field, 5, rng);
    let r = resolution_data(&z, CAP)?;
    let z2 = classify_envelope(&z, 5, 2, &settings(rng))?.envelope;
    Ok(vec![
        check_eq("ggds", geometric_generating_degrees(&z, r.a(), CAP)?, vec![2, 3]),
        check_envelope("Z_2", &z2, smooth_curve(&z2, 2), "a smooth conic"),
    ])
}

/// (3) Eight general points: the nine base points of a pencil of cubics.
fn eight_points(field: Field, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let z = Arrangement::sample_general(field, 8, rng);
    let r = resolution_data(&z, CAP)?;
    let z3 = classify_envelope(&z, 8, 3, &settings(rng))?.envelope;
    let nine = Envelope::Finite { scheme_degree: 9, distinct_count: 9, reduced: true };
    Ok(vec![
        check_envelope("Z_3", &z3, z3 == nine, "9 distinct reduced points"),
        check_eq("ggds", geometric_generating_degrees(&z, r.a(), CAP)?, vec![3, 4]),
    ])
}

/// Three random points on the line through two random points, plus one
/// random point off that line.
pub fn three_collinear_plus_one(field: Field, rng: &mut ChaCha8Rng) -> Result<Arrangement> {
    loop {
        let p = PointP2::random(&field, rng).coords();
        let q = PointP2::random(&field, rng).coords();
        let mut points = Vec::new();
        for _ in 0..3 {
            let (s, t) = (field.random(rng), field.random(rng));
            let c: Vec<Scalar> = (0..3).map(|i| field.add(field.mul(s, p[i]), field.mul(t, q[i]))).collect();
            if let Ok(pt) = PointP2::new(&field, [c[0], c[1], c[2]]) {
                points.push(pt);
            }
        }
        points.push(PointP2::random(&field, rng));
        if let Ok(z) = Arrangement::new(field, points) {
            // the fourth point must avoid the line and the three must be distinct
            if z.len() == 4 && z.hilbert_function(1) == 3 && Arrangement::new(field, z.points()[..3].to_vec())?.hilbert_function(1) == 2 {
                return Ok(z);
            }
        }
    }
}

/// (4) Three collinear points plus one.
fn collinear(field: Field, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let z = three_collinear_plus_one(field, rng)?;
    let r = resolution_data(&z, CAP)?;
    let z2 = classify_envelope(&z, 4, 2, &settings(rng))?.envelope;
    Ok(vec![
        check_eq("resolution-data", r.clone(), "a=2,2,3 b=3,4".parse::<ResolutionData>()?),
        check_eq("positive", is_positive(&r), false),
        check_envelope(
            "Z_2",
            &z2,
            matches!(z2, Envelope::Curve { curve_degree: 1, excess: 1, .. }),
            "the line plus the point off it (degree 1, excess 1)",
        ),
    ])
}

/// A random smooth plane cubic.
pub fn smooth_cubic(field: Field, rng: &mut ChaCha8Rng) -> Result<HomogeneousForm> {
    loop {
        let f = HomogeneousForm::random(field, 3, 3, rng);
        if curve_smoothness(&f, CAP)? {
            return Ok(f);
        }
    }
}

/// `count` distinct points of the curve `F = 0`: random `x, y`, then the
/// rational roots of the univariate `F(x, y, z)`.
pub fn points_on_curve(f: &HomogeneousForm, count: usize, rng: &mut ChaCha8Rng) -> Result<Arrangement> {
    let field = f.field();
    let basis = monomial_basis(3, f.degree());
    let mut points: Vec<PointP2> = Vec::new();
    while points.len() < count {
        let (x, y) = (field.random(rng), field.random(rng));
        let mut coeffs = vec![Scalar::ZERO; f.degree() + 1];
        for (i, &c) in f.coeffs().iter().enumerate() {
            let e = basis[i].exponents();
            let v = field.mul(c, field.mul(field.pow(x, e[0] as u64), field.pow(y, e[1] as u64)));
            coeffs[e[2] as usize] = field.add(coeffs[e[2] as usize], v);
        }
        for z in UniPoly::new(coeffs).rational_roots(&field, rng) {
            let Ok(p) = PointP2::new(&field, [x, y, z]) else { continue };
            if points.len() < count && !points.contains(&p) {
                points.push(p);
            }
        }
    }
    Arrangement::new(field, points)
}

/// (5) Eleven points on a smooth cubic.
fn on_cubic(field: Field, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let cubic = smooth_cubic(field, rng)?;
    let z = points_on_curve(&cubic, 11, rng)?;
    let on_curve = z.points().iter().all(|p| cubic.eval(&p.coords()).is_zero());
    let r = resolution_data(&z, CAP)?;
    let s = settings(rng);
    let z3 = classify_envelope(&z, 11, 3, &s)?.envelope;
    let z4 = classify_envelope(&z, 11, 4, &s)?.envelope;
    let z5 = classify_envelope(&z, 11, 5, &s)?.envelope;
    let twelve = Envelope::Finite { scheme_degree: 12, distinct_count: 12, reduced: true };
    Ok(vec![
        Check::new("on-cubic", on_curve, "every point satisfies the cubic"),
        check_eq("resolution-data", r.to_string(), "a=3,4,5 b=6,6".into()),
        check_eq("ggds", geometric_generating_degrees(&z, r.a(), CAP)?, vec![3, 4, 5]),
        check_envelope("Z_3", &z3, smooth_curve(&z3, 3), "the cubic"),
        check_envelope("Z_4", &z4, z4 == twelve, "12 distinct reduced points"),
        check_envelope("Z_5", &z5, z5 == Envelope::EqualsZ { scheme_degree: 11 }, "Z"),
    ])
}

/// (6) Eighteen general points.
fn eighteen_points(field: Field, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let z = Arrangement::sample_general(field, 18, rng);
    let r = resolution_data(&z, default_cap_for_points(18))?;
    Ok(vec![
        check_eq("generators", r.a().to_vec(), vec![5, 5, 5, 6]),
        check_eq("ggds", geometric_generating_degrees(&z, r.a(), CAP)?, vec![5]),
    ])
}

type Scenario = fn(Field, &mut ChaCha8Rng) -> Result<Vec<Check>>;

const SCENARIOS: [(&str, &str, Scenario); 6] = [
    ("1", "complete intersection (2,3)", complete_intersection),
    ("2", "5 general points", five_points),
    ("3", "8 general points", eight_points),
    ("4", "3 collinear + 1", collinear),
    ("5", "11 points on a smooth cubic", on_cubic),
    ("6", "18 general points", eighteen_points),
];

/// Runs the six scenarios and reports one row each.
pub fn examples(cfg: &RunConfig) -> Result<Report> {
    let field = Field::new(cfg.prime)?;
    let mut rep = ReportBuilder::new("examples", cfg, "examples");
    for (i, (id, title, scenario)) in SCENARIOS.iter().enumerate() {
        let mut rng = trial_rng(cfg.seed, i as u64);
        let checks = rep.timed(&format!("({id})"), || scenario(field, &mut rng));
        let checks = checks.unwrap_or_else(|e| vec![Check::new("error", false, e.to_string())]);
        let passed = checks.iter().all(|c| c.passed);
        let summary = checks
            .iter()
            .map(|c| format!("{}{}", c.name, if c.passed { String::new() } else { format!(" FAILED ({})", c.detail) }))
            .collect::<Vec<_>>()
            .join(", ");
        rep.push(Item::new(format!("({id}) {title}"), passed, summary, json!({ "checks": checks })));
    }
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collinear_fixture_shape() {
        let f = Field::default();
        let z = three_collinear_plus_one(f, &mut trial_rng(5, 0)).unwrap();
        assert_eq!(z.len(), 4);
        assert_eq!(z.hilbert_function(1), 3);
    }

    #[test]
    fn cubic_points_lie_on_cubic() {
        let f = Field::default();
        let mut rng = trial_rng(6, 0);
        let c = smooth_cubic(f, &mut rng).unwrap();
        let z = points_on_curve(&c, 11, &mut rng).unwrap();
        assert_eq!(z.len(), 11);
        assert!(z.points().iter().all(|p| c.eval(&p.coords()).is_zero()));
    }
}
