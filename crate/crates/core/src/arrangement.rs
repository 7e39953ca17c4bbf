//! Point arrangements in the projective plane, their graded ideals and
//! resolution data.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::monomial::{monomial_basis, monomial_count};
use crate::algebra::{Field, Scalar};
use crate::error::{Error, Result};
use crate::gradedla::{classify_growth, kernel_basis, Echelon, GradedPiece, Growth, HilbertWindow, STABILITY_WINDOW};
use crate::ideal::{GradedIdeal, PLANE_VARS};

/// A point of the projective plane, scaled so its last nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointP2 {
    coords: [Scalar; 3],
}

impl PointP2 {
    pub fn new(field: &Field, coords: [Scalar; 3]) -> Result<PointP2> {
        let last = coords
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidArgument("(0:0:0) is not a projective point".into()))?;
        let inv = field.inv(coords[last]).unwrap();
        Ok(PointP2 { coords: coords.map(|c| field.mul(c, inv)) })
    }

    pub fn from_ints(field: &Field, c: [i64; 3]) -> Result<PointP2> {
        PointP2::new(field, c.map(|v| field.elem(v)))
    }

    pub fn coords(&self) -> [Scalar; 3] {
        self.coords
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, rng: &mut R) -> PointP2 {
        loop {
            let c = [field.random(rng), field.random(rng), field.random(rng)];
            if let Ok(p) = PointP2::new(field, c) {
                return p;
            }
        }
    }
}

/// A finite set of distinct points, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    field: Field,
    points: Vec<PointP2>,
}

impl Arrangement {
    pub fn new(field: Field, points: Vec<PointP2>) -> Result<Arrangement> {
        let mut seen = HashSet::new();
        for (i, p) in points.iter().enumerate() {
            if !seen.insert(*p) {
                return Err(Error::DuplicatePoint { line: i + 1 });
            }
        }
        Ok(Arrangement { field, points })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn points(&self) -> &[PointP2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Parses the point file format: three integers per line, `#` comments
    /// and blank lines ignored. Duplicate points are rejected with the line
    /// number of the repeat.
    pub fn parse(field: Field, text: &str) -> Result<Arrangement> {
        let mut points = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?;
            if nums.len() != 3 {
                return Err(Error::Parse { line: lineno, msg: format!("expected 3 integers, found {}", nums.len()) });
            }
            let p = PointP2::from_ints(&field, [nums[0], nums[1], nums[2]])
                .map_err(|e| Error::Parse { line: lineno, msg: e.to_string() })?;
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint { line: lineno });
            }
            points.push(p);
        }
        Ok(Arrangement { field, points })
    }

    /// Point file text, normalized coordinates, one point per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("# {} points over F_{}\n", self.len(), self.field.prime());
        for p in &self.points {
            let c = p.coords();
            s.push_str(&format!("{} {} {}\n", c[0].value(), c[1].value(), c[2].value()));
        }
        s
    }

    /// `n x C(d+2, 2)` matrix of monomial values at the points.
    pub fn evaluation_matrix(&self, d: usize) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let basis = monomial_basis(PLANE_VARS, d);
        self.points
            .iter()
            .map(|p| {
                let c = p.coords();
                let pows: Vec<Vec<Scalar>> = c
                    .iter()
                    .map(|&x| {
                        let mut v = Vec::with_capacity(d + 1);
                        let mut acc = Scalar::ONE;
                        for _ in 0..=d {
                            v.push(acc);
                            acc = f.mul(acc, x);
                        }
                        v
                    })
                    .collect();
                basis
                    .iter()
                    .map(|m| {
                        let e = m.exponents();
                        f.mul(f.mul(pows[0][e[0] as usize], pows[1][e[1] as usize]), pows[2][e[2] as usize])
                    })
                    .collect()
            })
            .collect()
    }

    /// `I_d`: forms of degree `d` vanishing at every point.
    pub fn ideal_piece(&self, d: usize) -> GradedPiece {
        let ncols = monomial_count(PLANE_VARS, d);
        let kernel = kernel_basis(self.field, &self.evaluation_matrix(d), ncols);
        GradedPiece::from_echelon(PLANE_VARS, d, Echelon::from_rows(self.field, ncols, kernel))
    }

    /// Rank of the degree-`e` evaluation matrix.
    pub fn hilbert_function(&self, e: usize) -> usize {
        let ncols = monomial_count(PLANE_VARS, e);
        Echelon::from_rows(self.field, ncols, self.evaluation_matrix(e)).rank()
    }

    /// `n` distinct uniformly random points; exact collisions are redrawn.
    pub fn sample_general<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> Arrangement {
        let mut points = Vec::with_capacity(n);
        let mut seen = HashSet::new();
        while points.len() < n {
            let p = PointP2::random(&field, rng);
            if seen.insert(p) {
                points.push(p);
            }
        }
        Arrangement { field, points }
    }

    /// Appends a point; fails if it is already present.
    pub fn with_point(&self, p: PointP2) -> Result<Arrangement> {
        let mut pts = self.points.clone();
        pts.push(p);
        Arrangement::new(self.field, pts)
    }
}

impl GradedIdeal for Arrangement {
    fn field(&self) -> Field {
        self.field
    }

    fn piece(&self, d: usize) -> GradedPiece {
        self.ideal_piece(d)
    }

    fn known_point_count(&self) -> Option<usize> {
        Some(self.len())
    }
}

/// Generator degrees `a` (k+1 of them) and syzygy degrees `b` (k of them)
/// of a length-one graded free resolution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResolutionData {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl ResolutionData {
    /// Sorts both lists and checks the shape and degree-sum conditions.
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>) -> Result<ResolutionData> {
        a.sort_unstable();
        b.sort_unstable();
        if b.is_empty() || a.len() != b.len() + 1 {
            return Err(Error::InvalidResolutionData(format!(
                "need k+1 generator degrees and k >= 1 syzygy degrees, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        if a[0] == 0 || b[0] == 0 {
            return Err(Error::InvalidResolutionData("degrees must be positive".into()));
        }
        if a.iter().sum::<usize>() != b.iter().sum::<usize>() {
            return Err(Error::InvalidResolutionData("sum of a must equal sum of b".into()));
        }
        Ok(ResolutionData { a, b })
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    /// Number of syzygies; the Hilbert-Burch matrix is `(k+1) x k`.
    pub fn k(&self) -> usize {
        self.b.len()
    }
}

impl fmt::Display for ResolutionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "a={} b={}", join(&self.a), join(&self.b))
    }
}

impl FromStr for ResolutionData {
    type Err = Error;

    /// Parses `a=3,3,4 b=5,5`.
    fn from_str(s: &str) -> Result<ResolutionData> {
        let bad = |m: &str| Error::InvalidResolutionData(format!("{m} in {s:?}; expected e.g. `a=3,3,4 b=5,5`"));
        let mut a = None;
        let mut b = None;
        for part in s.split_whitespace() {
            let (key, vals) = part.split_once('=').ok_or_else(|| bad("missing '='"))?;
            let list: Vec<usize> = vals
                .split(',')
                .map(|v| v.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad("non-integer degree"))?;
            match key {
                "a" if a.is_none() => a = Some(list),
                "b" if b.is_none() => b = Some(list),
                _ => return Err(bad("unexpected key")),
            }
        }
        ResolutionData::new(a.ok_or_else(|| bad("missing a"))?, b.ok_or_else(|| bad("missing b"))?)
    }
}

/// Hilbert function of `S/I` from degree 0 until it is constant over the
/// stability window; returns the window and the stable value.
pub fn saturated_hilbert_window(ideal: &dyn GradedIdeal, cap: usize) -> Result<(HilbertWindow, usize)> {
    let mut w = HilbertWindow { start_degree: 0, values: Vec::new() };
    for e in 0..=cap {
        let piece = ideal.piece(e);
        w.values.push(piece.ambient_dim() - piece.dim());
        if let Some(n) = ideal.known_point_count() {
            // for a reduced point set h is non-decreasing and bounded by n
            if w.values[e] == n {
                return Ok((w, n));
            }
        } else if let Growth::Finite { degree } = classify_growth(&w) {
            return Ok((w, degree));
        }
    }
    Err(Error::NotStabilized { cap })
}

/// Multiset of minimal generator degrees, one entry per generator.
pub fn generator_degrees(ideal: &dyn GradedIdeal, cap: usize) -> Result<Vec<usize>> {
    let (window, n) = saturated_hilbert_window(ideal, cap)?;
    let t = window.values.iter().position(|&v| v == n).unwrap();
    let mut degrees = Vec::new();
    let mut prev = ideal.piece(0);
    if prev.dim() > 0 {
        return Err(Error::DegenerateInput("ideal contains a nonzero constant".into()));
    }
    let mut quiet = 0usize;
    let mut d = 1;
    loop {
        if d > cap {
            return Err(Error::NotStabilized { cap });
        }
        let cur = ideal.piece(d);
        let generated = prev.times_linear().dim();
        let fresh = cur.dim().checked_sub(generated).ok_or_else(|| {
            Error::Assertion(format!("S_1 * I_{} is larger than I_{d}: pieces are not an ideal", d - 1))
        })?;
        degrees.extend(std::iter::repeat_n(d, fresh));
        quiet = if fresh == 0 { quiet + 1 } else { 0 };
        if d > t + 1 && quiet >= STABILITY_WINDOW {
            break;
        }
        prev = cur;
        d += 1;
    }
    Ok(degrees)
}

/// Syzygy degrees from the numerator of the Hilbert series of `I` and the
/// known generator degrees.
pub fn syzygy_degrees(ideal: &dyn GradedIdeal, a: &[usize], cap: usize) -> Result<Vec<usize>> {
    let (window, n) = saturated_hilbert_window(ideal, cap)?;
    let t = window.values.iter().position(|&v| v == n).unwrap();
    let top = (t + 2 + STABILITY_WINDOW).max(a.iter().copied().max().unwrap_or(0) + STABILITY_WINDOW);
    let dims: Vec<i64> = (0..=top).map(|e| ideal.piece(e).dim() as i64).collect();
    let mut a_count: BTreeMap<usize, i64> = BTreeMap::new();
    for &x in a {
        *a_count.entry(x).or_default() += 1;
    }
    let mut b = Vec::new();
    for d in 0..=top {
        // coefficient of t^d in (1-t)^3 * sum_e dim I_e t^e
        let c: i64 = [1i64, -3, 3, -1]
            .iter()
            .enumerate()
            .filter(|&(i, _)| i <= d)
            .map(|(i, &s)| s * dims[d - i])
            .sum();
        let count = a_count.get(&d).copied().unwrap_or(0) - c;
        if count < 0 {
            return Err(Error::Assertion(format!("negative syzygy count in degree {d}")));
        }
        b.extend(std::iter::repeat_n(d, count as usize));
    }
    if b.len() + 1 != a.len() || b.iter().sum::<usize>() != a.iter().sum::<usize>() {
        return Err(Error::Assertion(format!(
            "syzygy degrees {b:?} inconsistent with generator degrees {a:?}"
        )));
    }
    Ok(b)
}

/// Resolution data of a point ideal with the point-count identity enforced.
pub fn resolution_data(ideal: &dyn GradedIdeal, cap: usize) -> Result<ResolutionData> {
    let a = generator_degrees(ideal, cap)?;
    let b = syzygy_degrees(ideal, &a, cap)?;
    let r = ResolutionData::new(a, b).map_err(|e| Error::Assertion(e.to_string()))?;
    let (_, n) = saturated_hilbert_window(ideal, cap)?;
    let from_degrees = crate::hilbertburch::points_count(&r)?;
    if from_degrees != n {
        return Err(Error::Assertion(format!("point count {n} but resolution data {r} gives {from_degrees}")));
    }
    Ok(r)
}

/// Degree cap for resolution work on `n` points: regularity is at most `n`.
pub fn default_cap_for_points(n: usize) -> usize {
    (n + 4).max(20)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fl() -> Field {
        Field::default()
    }

    fn general(n: usize, seed: u64) -> Arrangement {
        Arrangement::sample_general(fl(), n, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Three points on a line through two random points plus one point off it.
    fn three_collinear_plus_one(seed: u64) -> Arrangement {
        let f = fl();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = PointP2::random(&f, &mut rng).coords();
        let q = PointP2::random(&f, &mut rng).coords();
        let mut pts = Vec::new();
        for (l, m) in [(1, 0), (0, 1), (1, 1)] {
            let c = [0, 1, 2].map(|i| f.add(f.mul(f.elem(l), p[i]), f.mul(f.elem(m), q[i])));
            pts.push(PointP2::new(&f, c).unwrap());
        }
        pts.push(PointP2::random(&f, &mut rng));
        Arrangement::new(f, pts).unwrap()
    }

    #[test]
    fn normalization_is_canonical() {
        let f = fl();
        let a = PointP2::from_ints(&f, [2, 4, 2]).unwrap();
        let b = PointP2::from_ints(&f, [1, 2, 1]).unwrap();
        assert_eq!(a, b);
        let c = PointP2::from_ints(&f, [3, 6, 0]).unwrap();
        assert_eq!(c.coords()[1], Scalar::ONE);
        assert!(PointP2::from_ints(&f, [0, 0, 0]).is_err());
    }

    #[test]
    fn parse_point_file() {
        let f = fl();
        let z = Arrangement::parse(f, "# header\n1 0 0\n\n0 1 0\n  0 0 1 \n").unwrap();
        assert_eq!(z.len(), 3);
        assert!(matches!(Arrangement::parse(f, "1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Arrangement::parse(f, "1 0 0\n2 0 0\n"), Err(Error::DuplicatePoint { line: 2 })));
        assert!(matches!(Arrangement::parse(f, "1 x 0\n"), Err(Error::Parse { .. })));
        let back = Arrangement::parse(f, &z.to_text()).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn ideal_piece_examples() {
        assert_eq!(general(1, 0).ideal_piece(1).dim(), 2);
        assert_eq!(general(5, 1).ideal_piece(2).dim(), 1);
        assert_eq!(general(8, 2).ideal_piece(3).dim(), 2);
    }

    #[test]
    fn hilbert_function_examples() {
        let z = general(5, 3);
        assert_eq!(z.hilbert_function(0), 1);
        assert_eq!(z.hilbert_function(2), 5);
        assert_eq!(z.hilbert_function(9), 5);
        for e in 0..6 {
            assert_eq!(z.hilbert_function(e) + z.ideal_piece(e).dim(), monomial_count(3, e));
        }
    }

    #[test]
    fn generic_resolution_examples() {
        let cap = 30;
        let z5 = general(5, 4);
        assert_eq!(generator_degrees(&z5, cap).unwrap(), vec![2, 3, 3]);
        assert_eq!(syzygy_degrees(&z5, &[2, 3, 3], cap).unwrap(), vec![4, 4]);
        let z8 = general(8, 5);
        assert_eq!(resolution_data(&z8, cap).unwrap(), ResolutionData::new(vec![3, 3, 4], vec![5, 5]).unwrap());
        let z18 = general(18, 6);
        let r = resolution_data(&z18, cap).unwrap();
        assert_eq!(r.a(), &[5, 5, 5, 6]);
        assert_eq!(r.b(), &[7, 7, 7]);
        let z4 = general(4, 7);
        assert_eq!(resolution_data(&z4, cap).unwrap().to_string(), "a=2,2 b=4");
    }

    #[test]
    fn collinear_resolution() {
        let z = three_collinear_plus_one(8);
        let r = resolution_data(&z, 30).unwrap();
        assert_eq!(r.to_string(), "a=2,2,3 b=3,4");
    }

    #[test]
    fn adding_points_shrinks_pieces() {
        let f = fl();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let mut z = Arrangement::new(f, vec![]).unwrap();
        let mut last = [usize::MAX; 6];
        for _ in 0..12 {
            z = z.with_point(PointP2::random(&f, &mut rng)).unwrap();
            for (d, l) in last.iter_mut().enumerate() {
                let dim = z.ideal_piece(d).dim();
                assert!(dim <= *l);
                *l = dim;
            }
        }
    }

    #[test]
    fn resolution_text_roundtrip() {
        let r: ResolutionData = "a=3,3,4 b=5,5".parse().unwrap();
        assert_eq!(r.a(), &[3, 3, 4]);
        assert_eq!(r.to_string().parse::<ResolutionData>().unwrap(), r);
        assert!("a=3,3 b=5,5".parse::<ResolutionData>().is_err());
        assert!("a=1,2 b=4".parse::<ResolutionData>().is_err());
        assert!("a=2,2 c=4".parse::<ResolutionData>().is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(general(5, 42), general(5, 42));
        assert_ne!(general(5, 42), general(5, 43));
        assert_eq!(general(1, 0).len(), 1);
    }
}
