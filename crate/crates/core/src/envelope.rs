//! Degree envelopes `Z_d = V(I_d)`: classification, reducedness and
//! smoothness tests, and geometric generating degrees.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::monomial::{monomial_basis, monomial_count, rank_of_product};
use crate::algebra::univariate::{charpoly, UniPoly};
use crate::algebra::{Field, HomogeneousForm, Monomial, Scalar};
use crate::error::{Error, Result};
use crate::gradedla::{classify_growth, stabilized_window, GeneratedIdeal, GradedPiece, Growth, HilbertWindow};
use crate::ideal::{GradedIdeal, PLANE_VARS};

/// Draws of the linear form `l` before giving up on an invertible
/// multiplication map.
pub const INVERTIBLE_DRAWS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Smoothness {
    Smooth,
    Singular,
    NotTested,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Envelope {
    Plane,
    Curve { curve_degree: usize, excess: i64, smooth: Smoothness },
    Finite { scheme_degree: usize, distinct_count: usize, reduced: bool },
    EqualsZ { scheme_degree: usize },
}

impl Envelope {
    pub fn codim(&self) -> usize {
        match self {
            Envelope::Plane => 0,
            Envelope::Curve { .. } => 1,
            Envelope::Finite { .. } | Envelope::EqualsZ { .. } => 2,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Envelope::Plane => "plane".into(),
            Envelope::Curve { curve_degree, excess, smooth } => {
                let s = match smooth {
                    Smoothness::Smooth => "smooth",
                    Smoothness::Singular => "singular",
                    Smoothness::NotTested => "not-tested",
                };
                format!("curve(deg {curve_degree}, excess {excess}, {s})")
            }
            Envelope::Finite { scheme_degree, distinct_count, reduced } => {
                format!("finite({scheme_degree}, {distinct_count} distinct, {})", if reduced { "reduced" } else { "non-reduced" })
            }
            Envelope::EqualsZ { scheme_degree } => format!("Z({scheme_degree})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnvelopeReport {
    pub d: usize,
    pub piece_dim: usize,
    pub envelope: Envelope,
    pub codim: usize,
    pub is_ggd: bool,
    pub window: Option<HilbertWindow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnvelopeProfile {
    pub reports: Vec<EnvelopeReport>,
    pub ggds: Vec<usize>,
}

impl EnvelopeProfile {
    pub fn report(&self, d: usize) -> Option<&EnvelopeReport> {
        self.reports.iter().find(|r| r.d == d)
    }
}

/// Parameters shared by envelope computations.
#[derive(Debug, Clone, Copy)]
pub struct EnvelopeSettings {
    /// Largest degree any Hilbert window may reach.
    pub cap: usize,
    /// Seed for the random forms of the reducedness test; degree `d` uses
    /// stream `d`.
    pub seed: u64,
}

impl EnvelopeSettings {
    fn rng_for(&self, d: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(d as u64 + 1);
        rng
    }
}

/// Classifies `Z_d` for an ideal whose scheme has `n` points.
pub fn classify_envelope(
    ideal: &dyn GradedIdeal,
    n: usize,
    d: usize,
    settings: &EnvelopeSettings,
) -> Result<EnvelopeReport> {
    let v = ideal.piece(d);
    let piece_dim = v.dim();
    if piece_dim == 0 {
        return Ok(report(d, 0, Envelope::Plane, None));
    }
    let (window, growth, pieces) = stabilized_window(std::slice::from_ref(&v), d, settings.cap)?;
    let envelope = match growth {
        Growth::Dim1 { curve_degree, excess } => {
            let smooth = if piece_dim == 1 {
                if curve_smoothness(&v.basis()[0], settings.cap)? {
                    Smoothness::Smooth
                } else {
                    Smoothness::Singular
                }
            } else {
                Smoothness::NotTested
            };
            Envelope::Curve { curve_degree, excess, smooth }
        }
        Growth::Finite { degree } if degree < n => {
            return Err(Error::Assertion(format!("Z_{d} has degree {degree} < {n} but must contain Z")));
        }
        Growth::Finite { degree } if degree == n => Envelope::EqualsZ { scheme_degree: n },
        Growth::Finite { degree } => {
            let mut rng = settings.rng_for(d);
            let (distinct_count, reduced) = finite_reducedness(&pieces, degree, &mut rng)?;
            Envelope::Finite { scheme_degree: degree, distinct_count, reduced }
        }
        Growth::NotStabilized => unreachable!("stabilized_window only returns stable growth"),
    };
    Ok(report(d, piece_dim, envelope, Some(window)))
}

fn report(d: usize, piece_dim: usize, envelope: Envelope, window: Option<HilbertWindow>) -> EnvelopeReport {
    EnvelopeReport { d, piece_dim, codim: envelope.codim(), envelope, is_ggd: false, window }
}

/// Quotient `(S/J)_e` by the standard monomials of `J_e`.
struct Quotient<'a> {
    piece: &'a GradedPiece,
    standard: Vec<usize>,
}

impl<'a> Quotient<'a> {
    fn new(piece: &'a GradedPiece) -> Quotient<'a> {
        Quotient { standard: piece.echelon().free_columns(), piece }
    }

    fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let r = self.piece.echelon().reduce(v);
        self.standard.iter().map(|&c| r[c]).collect()
    }
}

/// Matrix of multiplication by the linear form `coeffs` from `(S/J)_e` to
/// `(S/J)_{e+1}`, columns indexed by the source basis.
fn multiplication_matrix(src: &Quotient, dst: &Quotient, coeffs: &[Scalar; 3]) -> Vec<Vec<Scalar>> {
    let field = src.piece.field();
    let e = src.piece.degree();
    let basis = monomial_basis(PLANE_VARS, e);
    let target = monomial_count(PLANE_VARS, e + 1);
    let vars: Vec<Monomial> = (0..PLANE_VARS).map(|v| Monomial::variable(PLANE_VARS, v)).collect();
    let m = dst.standard.len();
    let mut mat = vec![vec![Scalar::ZERO; src.standard.len()]; m];
    for (j, &s) in src.standard.iter().enumerate() {
        let mut v = vec![Scalar::ZERO; target];
        for (var, &c) in vars.iter().zip(coeffs) {
            let r = rank_of_product(basis[s].exponents(), var.exponents());
            v[r] = field.add(v[r], c);
        }
        for (i, c) in dst.coords(&v).into_iter().enumerate() {
            mat[i][j] = c;
        }
    }
    mat
}

fn invert(field: &Field, m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = field.inv(a[col][col]).unwrap();
        for x in a[col].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(c, p));
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn mat_mul(field: &Field, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![0u64; n];
            let p = field.prime() as u64;
            for (k, &x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, &y) in out.iter_mut().zip(&b[k]) {
                    *o = (*o + x.value() as u64 * y.value() as u64) % p;
                }
            }
            out.into_iter().map(|v| field.elem(v as i64)).collect()
        })
        .collect()
}

/// Evaluates a polynomial at a square matrix and reports whether the
/// result vanishes.
fn annihilates(field: &Field, poly: &UniPoly, m: &[Vec<Scalar>]) -> bool {
    let n = m.len();
    let mut acc = vec![vec![Scalar::ZERO; n]; n];
    for &c in poly.coeffs().iter().rev() {
        acc = mat_mul(field, &acc, m);
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] = field.add(row[i], c);
        }
    }
    acc.iter().all(|r| r.iter().all(|c| c.is_zero()))
}

/// One draw of the reducedness test on `(S/J)_e -> (S/J)_{e+1}`.
fn reducedness_draw(
    pieces: &[GradedPiece; 2],
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(usize, bool)> {
    let field = pieces[0].field();
    let src = Quotient::new(&pieces[0]);
    let dst = Quotient::new(&pieces[1]);
    if src.standard.len() != m || dst.standard.len() != m {
        return Err(Error::Assertion(format!(
            "quotient dimensions {} and {} differ from scheme degree {m}",
            src.standard.len(),
            dst.standard.len()
        )));
    }
    let random_linear = |rng: &mut ChaCha8Rng| [field.random(rng), field.random(rng), field.random(rng)];
    let mut inverse = None;
    for _ in 0..INVERTIBLE_DRAWS {
        let l = random_linear(rng);
        if let Some(inv) = invert(&field, &multiplication_matrix(&src, &dst, &l)) {
            inverse = Some(inv);
            break;
        }
    }
    let inverse = inverse.ok_or(Error::NoInvertibleLinearForm(INVERTIBLE_DRAWS))?;
    let u = random_linear(rng);
    let op = mat_mul(&field, &inverse, &multiplication_matrix(&src, &dst, &u));
    let chi = charpoly(&field, &op);
    let radical = chi.div_rem(&field, &chi.gcd(&field, &chi.derivative(&field))).0;
    // semisimple iff the squarefree part of chi already kills the operator
    let reduced = annihilates(&field, &radical, &op);
    let distinct = if reduced { m } else { radical.degree().unwrap_or(0) };
    Ok((distinct, reduced))
}

/// Distinct point count and reducedness of the finite scheme whose
/// stabilized pieces `J_e, J_{e+1}` are given, confirmed by two
/// independent draws of the random forms.
pub fn finite_reducedness(pieces: &[GradedPiece; 2], m: usize, rng: &mut ChaCha8Rng) -> Result<(usize, bool)> {
    if m == 0 {
        return Err(Error::InvalidArgument("empty scheme".into()));
    }
    let first = reducedness_draw(pieces, m, rng)?;
    let second = reducedness_draw(pieces, m, rng)?;
    if first != second {
        return Err(Error::DrawDisagreement(first, second));
    }
    Ok(first)
}

/// True iff the plane curve `F = 0` is smooth: the partials have no common
/// projective zero.
pub fn curve_smoothness(f: &HomogeneousForm, cap: usize) -> Result<bool> {
    if f.degree() == 0 || f.is_zero() {
        return Err(Error::InvalidArgument("smoothness of a constant form".into()));
    }
    let partials = f.partials();
    let piece = GradedPiece::span_of(f.field(), f.nvars(), f.degree() - 1, &partials);
    if piece.dim() == 0 {
        return Ok(false);
    }
    let (_, growth, _) = stabilized_window(&[piece], f.degree() - 1, cap.max(3 * f.degree() + 4))?;
    Ok(growth == Growth::Finite { degree: 0 })
}

/// Compares `Z_{d1}` and `Z_{d2}` (with `d1 < d2`) through the stabilized
/// Hilbert functions of the ideals generated by `I_{d1}` and `I_{d2}`.
pub fn envelope_equals(ideal: &dyn GradedIdeal, d1: usize, d2: usize, cap: usize) -> Result<bool> {
    if d1 >= d2 {
        return Err(Error::InvalidArgument(format!("need d1 < d2, got {d1} and {d2}")));
    }
    let (v1, v2) = (ideal.piece(d1), ideal.piece(d2));
    match (v1.dim(), v2.dim()) {
        (0, 0) => return Ok(true),
        (0, _) | (_, 0) => return Ok(false),
        _ => {}
    }
    let field = ideal.field();
    let mut j1 = GeneratedIdeal::new(field, PLANE_VARS, vec![v1], d2);
    let mut j2 = GeneratedIdeal::new(field, PLANE_VARS, vec![v2], d2);
    let mut w1 = HilbertWindow { start_degree: d2, values: vec![j1.quotient_dim()] };
    let mut w2 = HilbertWindow { start_degree: d2, values: vec![j2.quotient_dim()] };
    loop {
        let (g1, g2) = (classify_growth(&w1), classify_growth(&w2));
        if g1 != Growth::NotStabilized && g2 != Growth::NotStabilized {
            return Ok(g1 == g2);
        }
        if j1.degree() >= cap {
            return Err(Error::NotStabilized { cap });
        }
        j1.advance();
        j2.advance();
        w1.values.push(j1.quotient_dim());
        w2.values.push(j2.quotient_dim());
    }
}

/// Degrees `d` among the generator degrees where `Z_d != Z_{d-1}`.
pub fn geometric_generating_degrees(ideal: &dyn GradedIdeal, generator_degrees: &[usize], cap: usize) -> Result<Vec<usize>> {
    let distinct: BTreeSet<usize> = generator_degrees.iter().copied().collect();
    let Some(&lowest) = distinct.first() else {
        return Err(Error::InvalidArgument("no generator degrees".into()));
    };
    let mut out = vec![lowest];
    for &d in distinct.iter().skip(1) {
        if !envelope_equals(ideal, d - 1, d, cap)? {
            out.push(d);
        }
    }
    Ok(out)
}

/// Full chain `Z_1, ..., Z_{a_max}` with geometric generating degrees flagged.
pub fn envelope_profile(
    ideal: &dyn GradedIdeal,
    n: usize,
    generator_degrees: &[usize],
    settings: &EnvelopeSettings,
) -> Result<EnvelopeProfile> {
    let top = *generator_degrees.iter().max().ok_or_else(|| Error::InvalidArgument("no generator degrees".into()))?;
    let ggds = geometric_generating_degrees(ideal, generator_degrees, settings.cap)?;
    let mut reports = Vec::with_capacity(top);
    for d in 1..=top {
        let mut r = classify_envelope(ideal, n, d, settings)?;
        r.is_ggd = ggds.contains(&d);
        reports.push(r);
    }
    let profile = EnvelopeProfile { reports, ggds };
    check_profile(&profile, generator_degrees)?;
    Ok(profile)
}

/// Hard invariants of every profile: ggds among generator degrees, the
/// lowest generator degree a ggd, envelopes weakly decreasing, stabilization
/// at `Z` by the top generator degree.
pub fn check_profile(profile: &EnvelopeProfile, generator_degrees: &[usize]) -> Result<()> {
    let lowest = generator_degrees.iter().min().copied().unwrap_or(0);
    if !profile.ggds.iter().all(|d| generator_degrees.contains(d)) {
        return Err(Error::Assertion(format!("ggds {:?} not among generator degrees", profile.ggds)));
    }
    if !profile.ggds.contains(&lowest) {
        return Err(Error::Assertion(format!("lowest generator degree {lowest} is not a ggd")));
    }
    for pair in profile.reports.windows(2) {
        if !contains_envelope(&pair[0].envelope, &pair[1].envelope) {
            return Err(Error::Assertion(format!(
                "Z_{} = {} does not contain Z_{} = {}",
                pair[0].d,
                pair[0].envelope.label(),
                pair[1].d,
                pair[1].envelope.label()
            )));
        }
    }
    if let Some(last) = profile.reports.last() {
        if !matches!(last.envelope, Envelope::EqualsZ { .. }) {
            return Err(Error::Assertion(format!("Z_{} is {}, expected Z", last.d, last.envelope.label())));
        }
    }
    Ok(())
}

/// Whether a scheme classified as `big` can contain one classified as `small`.
pub fn contains_envelope(big: &Envelope, small: &Envelope) -> bool {
    use Envelope::*;
    match (big, small) {
        (Plane, _) => true,
        (_, Plane) => false,
        (Curve { curve_degree: a, .. }, Curve { curve_degree: b, .. }) => b <= a,
        (Curve { .. }, _) => true,
        (_, Curve { .. }) => false,
        (Finite { scheme_degree: a, .. } | EqualsZ { scheme_degree: a }, Finite { scheme_degree: b, .. } | EqualsZ { scheme_degree: b }) => b <= a,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{generator_degrees, Arrangement};
    use crate::ideal::FormIdeal;

    fn fl() -> Field {
        Field::default()
    }

    fn settings() -> EnvelopeSettings {
        EnvelopeSettings { cap: 40, seed: 7 }
    }

    fn form(terms: &[(i64, &[u16])]) -> HomogeneousForm {
        HomogeneousForm::from_terms(fl(), 3, terms).unwrap()
    }

    fn general(n: usize, seed: u64) -> Arrangement {
        Arrangement::sample_general(fl(), n, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    #[test]
    fn smoothness_examples() {
        let sphere = form(&[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])]);
        assert!(curve_smoothness(&sphere, 20).unwrap());
        let xy = form(&[(1, &[1, 1, 0])]);
        assert!(!curve_smoothness(&xy, 20).unwrap());
        let fermat = form(&[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 3])]);
        assert!(curve_smoothness(&fermat, 20).unwrap());
        let line = form(&[(1, &[1, 0, 0]), (2, &[0, 0, 1])]);
        assert!(curve_smoothness(&line, 20).unwrap());
        let double_line = form(&[(1, &[2, 0, 0])]);
        assert!(!curve_smoothness(&double_line, 20).unwrap());
        // nodal cubic y^2 z = x^3 + x^2 z
        let nodal = form(&[(1, &[0, 2, 1]), (-1, &[3, 0, 0]), (-1, &[2, 0, 1])]);
        assert!(!curve_smoothness(&nodal, 20).unwrap());
    }

    #[test]
    fn reducedness_of_conic_intersection() {
        let f = fl();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let q1 = HomogeneousForm::random(f, 3, 2, &mut rng);
        let q2 = HomogeneousForm::random(f, 3, 2, &mut rng);
        let v = GradedPiece::span_of(f, 3, 2, &[q1, q2]);
        let (_, growth, pieces) = stabilized_window(&[v], 2, 20).unwrap();
        assert_eq!(growth, Growth::Finite { degree: 4 });
        assert_eq!(finite_reducedness(&pieces, 4, &mut rng).unwrap(), (4, true));
    }

    #[test]
    fn reducedness_of_single_and_double_point() {
        let f = fl();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        // the point (0:0:1) has ideal (x, y); its square is a fat point of degree 3
        let x = form(&[(1, &[1, 0, 0])]);
        let y = form(&[(1, &[0, 1, 0])]);
        let single = GradedPiece::span_of(f, 3, 1, &[x.clone(), y.clone()]);
        let (_, g, pieces) = stabilized_window(&[single], 1, 20).unwrap();
        assert_eq!(g, Growth::Finite { degree: 1 });
        assert_eq!(finite_reducedness(&pieces, 1, &mut rng).unwrap(), (1, true));
        let double = GradedPiece::span_of(f, 3, 2, &[x.mul(&x), x.mul(&y), y.mul(&y)]);
        let (_, g, pieces) = stabilized_window(&[double], 2, 20).unwrap();
        assert_eq!(g, Growth::Finite { degree: 3 });
        assert_eq!(finite_reducedness(&pieces, 3, &mut rng).unwrap(), (1, false));
    }

    #[test]
    fn draws_are_independent() {
        let f = fl();
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c1 = HomogeneousForm::random(f, 3, 3, &mut rng);
            let c2 = HomogeneousForm::random(f, 3, 3, &mut rng);
            let v = GradedPiece::span_of(f, 3, 3, &[c1, c2]);
            let (_, _, pieces) = stabilized_window(&[v], 3, 20).unwrap();
            let a = finite_reducedness(&pieces, 9, &mut ChaCha8Rng::seed_from_u64(100 + seed)).unwrap();
            let b = finite_reducedness(&pieces, 9, &mut ChaCha8Rng::seed_from_u64(200 + seed)).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, (9, true));
        }
    }

    #[test]
    fn classify_examples() {
        let z5 = general(5, 1);
        let r = classify_envelope(&z5, 5, 2, &settings()).unwrap();
        assert_eq!(r.envelope, Envelope::Curve { curve_degree: 2, excess: 0, smooth: Smoothness::Smooth });
        assert_eq!(r.codim, 1);
        let z8 = general(8, 2);
        let r = classify_envelope(&z8, 8, 3, &settings()).unwrap();
        assert_eq!(r.envelope, Envelope::Finite { scheme_degree: 9, distinct_count: 9, reduced: true });
        assert_eq!(classify_envelope(&z8, 8, 2, &settings()).unwrap().envelope, Envelope::Plane);
        assert_eq!(classify_envelope(&z8, 8, 4, &settings()).unwrap().envelope, Envelope::EqualsZ { scheme_degree: 8 });
    }

    #[test]
    fn equality_and_ggds() {
        let z18 = general(18, 3);
        assert!(envelope_equals(&z18, 5, 6, 40).unwrap());
        let z8 = general(8, 4);
        assert!(!envelope_equals(&z8, 3, 4, 40).unwrap());
        assert!(envelope_equals(&z8, 1, 2, 40).unwrap());
        let z5 = general(5, 5);
        assert_eq!(geometric_generating_degrees(&z5, &[2, 3, 3], 40).unwrap(), vec![2, 3]);
        assert_eq!(geometric_generating_degrees(&z18, &[5, 5, 5, 6], 40).unwrap(), vec![5]);
    }

    #[test]
    fn profile_of_thirteen_points() {
        let z = general(13, 6);
        let a = generator_degrees(&z, 40).unwrap();
        let p = envelope_profile(&z, 13, &a, &settings()).unwrap();
        for d in 1..=3 {
            assert_eq!(p.report(d).unwrap().envelope, Envelope::Plane);
        }
        assert_eq!(p.report(4).unwrap().envelope, Envelope::Finite { scheme_degree: 16, distinct_count: 16, reduced: true });
        assert_eq!(p.report(5).unwrap().envelope, Envelope::EqualsZ { scheme_degree: 13 });
        assert_eq!(p.ggds, vec![4, 5]);
    }

    #[test]
    fn complete_intersection_ideal() {
        let f = fl();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let q = HomogeneousForm::random(f, 3, 2, &mut rng);
        let c = HomogeneousForm::random(f, 3, 3, &mut rng);
        let ideal = FormIdeal::plane(f, vec![q, c]);
        let r = classify_envelope(&ideal, 6, 2, &settings()).unwrap();
        assert!(matches!(r.envelope, Envelope::Curve { curve_degree: 2, excess: 0, smooth: Smoothness::Smooth }));
        let r = classify_envelope(&ideal, 6, 3, &settings()).unwrap();
        assert_eq!(r.envelope, Envelope::EqualsZ { scheme_degree: 6 });
    }

    #[test]
    fn containment_order() {
        let c = Envelope::Curve { curve_degree: 2, excess: 0, smooth: Smoothness::Smooth };
        let fin = Envelope::Finite { scheme_degree: 9, distinct_count: 9, reduced: true };
        assert!(contains_envelope(&Envelope::Plane, &c));
        assert!(contains_envelope(&c, &fin));
        assert!(!contains_envelope(&fin, &c));
        assert!(contains_envelope(&fin, &Envelope::EqualsZ { scheme_degree: 8 }));
    }
}
