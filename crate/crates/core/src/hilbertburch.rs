//! Resolution-data arithmetic, the generic data of general point sets,
//! random Hilbert-Burch matrices and the envelope profile they predict.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{binomial, Field, FormMatrix, HomogeneousForm};
use crate::arrangement::{resolution_data, saturated_hilbert_window, ResolutionData};
use crate::envelope::{
    classify_envelope, finite_reducedness, geometric_generating_degrees, Envelope, EnvelopeSettings, Smoothness,
};
use crate::error::{Error, Result};
use crate::ideal::{FormIdeal, GradedIdeal, PLANE_VARS};

/// True iff every generator degree is below every syzygy degree.
pub fn is_positive(r: &ResolutionData) -> bool {
    r.a().last() < r.b().first()
}

/// `n = (sum b^2 - sum a^2) / 2`, required to be a positive integer.
pub fn points_count(r: &ResolutionData) -> Result<usize> {
    let sq = |v: &[usize]| v.iter().map(|&x| (x * x) as i64).sum::<i64>();
    let twice = sq(r.b()) - sq(r.a());
    if twice <= 0 || twice % 2 != 0 {
        return Err(Error::InvalidResolutionData(format!("{r} gives point count {twice}/2")));
    }
    Ok((twice / 2) as usize)
}

/// The unique `(d, r)` with `C(d+1, 2) <= n = C(d+2, 2) - r` and `r > 0`.
pub fn d_r_for_n(n: usize) -> (usize, usize) {
    assert!(n >= 1, "point count must be positive");
    let mut d = 0usize;
    while binomial(d + 2, 2) as usize <= n {
        d += 1;
    }
    (d, binomial(d + 2, 2) as usize - n)
}

/// Resolution data of `n` general points.
pub fn generic_resolution_data(n: usize) -> Result<ResolutionData> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("generic data needs n >= 2, got {n}")));
    }
    let (d, r) = d_r_for_n(n);
    let (a, b) = if 2 * r >= d + 2 {
        let k = r - 1;
        let low = 2 * r - d - 2;
        let b = std::iter::repeat_n(d + 1, low).chain(std::iter::repeat_n(d + 2, k - low)).collect();
        (vec![d; k + 1], b)
    } else {
        let k = d + 1 - r;
        let a = std::iter::repeat_n(d, r).chain(std::iter::repeat_n(d + 1, k + 1 - r)).collect();
        (a, vec![d + 2; k])
    };
    let data = ResolutionData::new(a, b)?;
    let count = points_count(&data)?;
    if count != n {
        return Err(Error::Assertion(format!("generic data {data} counts {count} points, not {n}")));
    }
    Ok(data)
}

fn require_positive(r: &ResolutionData) -> Result<()> {
    if is_positive(r) {
        Ok(())
    } else {
        Err(Error::NonPositive(r.to_string()))
    }
}

/// Random `(k+1) x k` matrix with entry `(i, j)` a form of degree `b_j - a_i`.
pub fn sample_hb_matrix<R: Rng + ?Sized>(field: Field, r: &ResolutionData, rng: &mut R) -> Result<FormMatrix> {
    require_positive(r)?;
    let entries = r
        .a()
        .iter()
        .map(|&ai| r.b().iter().map(|&bj| HomogeneousForm::random(field, PLANE_VARS, bj - ai, rng)).collect())
        .collect();
    FormMatrix::new(entries, r.a().to_vec(), r.b().to_vec())
}

/// The `k+1` maximal minors `F_i` (row `i` deleted, no sign).
pub fn minors_of(m: &FormMatrix) -> Result<Vec<HomogeneousForm>> {
    let minors = m.maximal_minors()?;
    if minors.iter().any(|f| f.is_zero()) {
        return Err(Error::DegenerateSample);
    }
    Ok(minors)
}

/// `r(d) = #{a_i <= d}`.
pub fn r_of(r: &ResolutionData, d: usize) -> usize {
    r.a().iter().filter(|&&a| a <= d).count()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Expected {
    Plane,
    Curve,
    Finite { degree: usize },
    EqualsZ,
}

impl Expected {
    pub fn codim(&self) -> usize {
        match self {
            Expected::Plane => 0,
            Expected::Curve => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedProfile {
    /// Entry `d - 1` is the prediction for `Z_d`, `d = 1..=a_max`.
    pub envelopes: Vec<Expected>,
    pub ggds: Vec<usize>,
}

impl ExpectedProfile {
    /// Prediction for any `d >= 1`; past `a_max` every envelope is `Z`.
    pub fn at(&self, d: usize) -> Expected {
        self.envelopes.get(d.wrapping_sub(1)).copied().unwrap_or(Expected::EqualsZ)
    }
}

/// Envelopes predicted for a general member of `HB(R)`.
pub fn expected_profile(r: &ResolutionData) -> Result<ExpectedProfile> {
    require_positive(r)?;
    let a = r.a();
    let k = r.k();
    let top = *a.last().unwrap();
    let envelopes = (1..=top)
        .map(|d| match r_of(r, d) {
            0 => Expected::Plane,
            1 => Expected::Curve,
            2 if k == 1 => Expected::EqualsZ,
            2 => Expected::Finite { degree: a[0] * a[1] },
            _ => Expected::EqualsZ,
        })
        .collect();
    let take = if k == 1 { 2 } else { 3 };
    let ggds: BTreeSet<usize> = a.iter().take(take).copied().collect();
    Ok(ExpectedProfile { envelopes, ggds: ggds.into_iter().collect() })
}

/// Codimension `(m - c)(n - c)` of the `m x n` matrices of rank at most `c`.
pub fn expected_codim_rank_locus(m: usize, n: usize, c: usize) -> usize {
    assert!(c <= m.min(n), "rank bound exceeds matrix size");
    (m - c) * (n - c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HbTrial {
    pub data: String,
    pub points: usize,
    pub resamples: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn outcome<T>(name: &str, r: Result<T>, ok: impl FnOnce(&T) -> (bool, String)) -> Check {
    match r {
        Ok(v) => {
            let (passed, detail) = ok(&v);
            Check::new(name, passed, detail)
        }
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

fn envelope_matches(found: &Envelope, expected: Expected) -> bool {
    match (expected, found) {
        (Expected::Plane, Envelope::Plane) => true,
        (Expected::Curve, Envelope::Curve { smooth, .. }) => *smooth != Smoothness::Singular,
        (Expected::Finite { .. }, Envelope::Finite { .. }) => true,
        (Expected::EqualsZ, Envelope::EqualsZ { .. }) => true,
        _ => false,
    }
}

/// Samples a general member of `HB(R)` and checks that its minors cut out
/// `points_count(R)` reduced points with resolution data `R` and the
/// predicted envelope profile. An identically vanishing minor triggers a
/// single resample.
pub fn verify_hb_sample<R: Rng + ?Sized>(field: Field, r: &ResolutionData, rng: &mut R) -> Result<HbTrial> {
    let expected = expected_profile(r)?;
    let n = points_count(r)?;
    let mut resamples = 0;
    let minors = loop {
        match minors_of(&sample_hb_matrix(field, r, rng)?) {
            Ok(m) => break Some(m),
            Err(Error::DegenerateSample) if resamples == 0 => resamples += 1,
            Err(Error::DegenerateSample) => break None,
            Err(e) => return Err(e),
        }
    };
    let mut trial = HbTrial { data: r.to_string(), points: n, resamples, passed: false, checks: Vec::new() };
    let Some(minors) = minors else {
        trial.checks.push(Check::new("sample", false, "maximal minor vanished twice"));
        return Ok(trial);
    };
    let ideal = FormIdeal::plane(field, minors);
    let top = *r.a().last().unwrap();
    let cap = r.b().last().unwrap() + n + 4;
    let settings = EnvelopeSettings { cap, seed: rng.gen() };
    let checks = &mut trial.checks;

    let window = saturated_hilbert_window(&ideal, cap);
    checks.push(outcome("hilbert-stabilization", window.clone(), |(_, m)| (*m == n, format!("stable value {m}, expected {n}"))));
    checks.push(outcome("resolution-data", resolution_data(&ideal, cap), |found| (found == r, format!("found {found}"))));

    let reduced = window.and_then(|(w, _)| {
        let e = w.end_degree().max(top);
        let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
        finite_reducedness(&[ideal.piece(e), ideal.piece(e + 1)], n, &mut rng)
    });
    checks.push(outcome("reduced", reduced, |&(distinct, reduced)| {
        (reduced && distinct == n, format!("{distinct} distinct, reduced = {reduced}"))
    }));

    for d in 1..=top {
        let want = expected.at(d);
        let found = classify_envelope(&ideal, n, d, &settings);
        checks.push(outcome(&format!("envelope-{d}"), found.clone(), |rep| {
            (envelope_matches(&rep.envelope, want), format!("{} (expected codim {})", rep.envelope.label(), want.codim()))
        }));
        if let (Expected::Finite { degree }, Ok(rep)) = (want, &found) {
            if let Envelope::Finite { scheme_degree, .. } = rep.envelope {
                checks.push(Check::new(
                    format!("bezout-degree-{d}"),
                    scheme_degree == degree,
                    format!("degree {scheme_degree}, expected {degree}"),
                ));
            }
        }
    }
    checks.push(outcome("ggds", geometric_generating_degrees(&ideal, r.a(), cap), |g| {
        (*g == expected.ggds, format!("{g:?}, expected {:?}", expected.ggds))
    }));
    trial.passed = trial.checks.iter().all(|c| c.passed);
    Ok(trial)
}
