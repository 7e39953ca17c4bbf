//! Exact linear algebra on graded pieces of polynomial rings.
//!
//! Vectors are dense coefficient vectors over the graded-lex monomial basis
//! of one degree. [`Echelon`] keeps a span in reduced row-echelon form with
//! first-nonzero pivoting, which makes every derived basis canonical.

use serde::Serialize;

use crate::algebra::monomial::{monomial_basis, monomial_count, rank_of_product};
use crate::algebra::{Field, HomogeneousForm, Scalar};
use crate::error::{Error, Result};

/// Consecutive equal first differences required to call a Hilbert function
/// stable.
pub const STABILITY_WINDOW: usize = 3;

/// A subspace of `F_p^ncols` in reduced row-echelon form.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    row_of_col: Vec<Option<usize>>,
    lazy_limit: u64,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Echelon {
        let pm1 = field.prime() as u64 - 1;
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            row_of_col: vec![None; ncols],
            lazy_limit: ((u64::MAX >> 1) / (pm1 * pm1)).max(1),
        }
    }

    pub fn from_rows(field: Field, ncols: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Echelon {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_col[col].is_some()
    }

    /// Normal form of `v` modulo the span: zero at every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(v.len(), self.ncols);
        let p = self.field.prime() as u64;
        let mut acc: Vec<u64> = v.iter().map(|s| s.0 as u64).collect();
        let mut pending = 0u64;
        for (row, &q) in self.rows.iter().zip(&self.pivots) {
            let c = acc[q] % p;
            if c == 0 {
                acc[q] = 0;
                continue;
            }
            let neg = p - c;
            for (a, r) in acc[q..].iter_mut().zip(&row[q..]) {
                *a += neg * r.0 as u64;
            }
            pending += 1;
            if pending >= self.lazy_limit {
                acc.iter_mut().for_each(|a| *a %= p);
                pending = 0;
            }
        }
        acc.into_iter().map(|a| Scalar((a % p) as u32)).collect()
    }

    /// Adds `v` to the span; returns true if the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(&v);
        let Some(q) = v.iter().position(|c| !c.is_zero()) else { return false };
        let f = self.field;
        let inv = f.inv(v[q]).unwrap();
        for c in v[q..].iter_mut() {
            *c = f.mul(*c, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[q];
            if c.is_zero() {
                continue;
            }
            let neg = f.neg(c);
            for (r, &x) in row[q..].iter_mut().zip(&v[q..]) {
                if !x.is_zero() {
                    *r = f.add(*r, f.mul(neg, x));
                }
            }
        }
        self.row_of_col[q] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(q);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Rows sorted by pivot column: the canonical reduced echelon basis.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    /// Pivot columns, ascending.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Non-pivot columns, ascending; they index a basis of the quotient.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.row_of_col[c].is_none()).collect()
    }

    pub fn rows_unordered(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

/// Basis of the right kernel of `m` (rows of equal length `ncols`), in
/// reduced echelon form.
pub fn kernel_basis(field: Field, m: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let ech = Echelon::from_rows(field, ncols, m.iter().cloned());
    let mut kernel = Echelon::new(field, ncols);
    for free in ech.free_columns() {
        let mut v = vec![Scalar::ZERO; ncols];
        v[free] = Scalar::ONE;
        for (row, &q) in ech.rows.iter().zip(&ech.pivots) {
            v[q] = field.neg(row[free]);
        }
        kernel.insert(v);
    }
    kernel.basis()
}

/// A subspace of the degree-`d` forms in `nvars` variables.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    nvars: usize,
    degree: usize,
    span: Echelon,
}

impl GradedPiece {
    pub fn zero(field: Field, nvars: usize, degree: usize) -> GradedPiece {
        GradedPiece { nvars, degree, span: Echelon::new(field, monomial_count(nvars, degree)) }
    }

    pub fn full(field: Field, nvars: usize, degree: usize) -> GradedPiece {
        let n = monomial_count(nvars, degree);
        let rows = (0..n).map(|i| {
            let mut v = vec![Scalar::ZERO; n];
            v[i] = Scalar::ONE;
            v
        });
        GradedPiece { nvars, degree, span: Echelon::from_rows(field, n, rows) }
    }

    pub fn from_echelon(nvars: usize, degree: usize, span: Echelon) -> GradedPiece {
        assert_eq!(span.ncols(), monomial_count(nvars, degree));
        GradedPiece { nvars, degree, span }
    }

    /// Span of the given forms; all must have `degree`.
    pub fn span_of(field: Field, nvars: usize, degree: usize, forms: &[HomogeneousForm]) -> GradedPiece {
        let mut piece = GradedPiece::zero(field, nvars, degree);
        for f in forms {
            assert_eq!(f.degree(), degree, "form of wrong degree in span");
            piece.span.insert(f.coeffs().to_vec());
        }
        piece
    }

    pub fn field(&self) -> Field {
        self.span.field()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    /// Dimension of the ambient space `S_d`.
    pub fn ambient_dim(&self) -> usize {
        self.span.ncols()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.span
    }

    pub fn basis(&self) -> Vec<HomogeneousForm> {
        self.span
            .basis()
            .into_iter()
            .map(|c| HomogeneousForm::from_coeffs(self.field(), self.nvars, self.degree, c).unwrap())
            .collect()
    }

    pub fn contains(&self, f: &HomogeneousForm) -> bool {
        f.degree() == self.degree && self.span.contains(f.coeffs())
    }

    pub fn insert(&mut self, f: &HomogeneousForm) -> bool {
        assert_eq!(f.degree(), self.degree);
        self.span.insert(f.coeffs().to_vec())
    }

    /// `S_1 * self`, a piece of degree `d + 1`.
    pub fn times_linear(&self) -> GradedPiece {
        let field = self.field();
        let basis = monomial_basis(self.nvars, self.degree);
        let target = monomial_count(self.nvars, self.degree + 1);
        let shifts: Vec<Vec<usize>> = (0..self.nvars)
            .map(|v| {
                let var = crate::algebra::Monomial::variable(self.nvars, v);
                basis.iter().map(|m| rank_of_product(m.exponents(), var.exponents())).collect()
            })
            .collect();
        let mut out = Echelon::new(field, target);
        for row in self.span.rows_unordered() {
            for shift in &shifts {
                let mut v = vec![Scalar::ZERO; target];
                for (i, &c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        v[shift[i]] = c;
                    }
                }
                out.insert(v);
            }
        }
        GradedPiece { nvars: self.nvars, degree: self.degree + 1, span: out }
    }

    /// Span of `m * F` over basis forms `F` and monomials `m` of degree `e - d`.
    pub fn product(&self, e: usize) -> GradedPiece {
        assert!(e >= self.degree, "product into a lower degree");
        let mut cur = self.clone();
        while cur.degree < e {
            cur = cur.times_linear();
        }
        cur
    }

    pub fn sum(&self, other: &GradedPiece) -> GradedPiece {
        assert_eq!(self.degree, other.degree, "sum of pieces of different degree");
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for r in other.span.rows_unordered() {
            out.span.insert(r.clone());
        }
        out
    }

    pub fn intersection_dim(&self, other: &GradedPiece) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    pub fn is_subspace_of(&self, other: &GradedPiece) -> bool {
        self.degree == other.degree && self.span.rows_unordered().iter().all(|r| other.span.contains(r))
    }
}

/// Values of a Hilbert function `h(e)` for consecutive `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertWindow {
    pub start_degree: usize,
    pub values: Vec<usize>,
}

impl HilbertWindow {
    pub fn end_degree(&self) -> usize {
        self.start_degree + self.values.len() - 1
    }

    pub fn value_at(&self, e: usize) -> Option<usize> {
        e.checked_sub(self.start_degree).and_then(|i| self.values.get(i).copied())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Growth {
    NotStabilized,
    Finite { degree: usize },
    Dim1 { curve_degree: usize, excess: i64 },
}

/// Reads off the dimension of `V(J)` from the tail of the Hilbert function
/// of `S/J` in three variables.
pub fn classify_growth(h: &HilbertWindow) -> Growth {
    let v = &h.values;
    if v.len() < STABILITY_WINDOW + 1 {
        return Growth::NotStabilized;
    }
    let tail = &v[v.len() - STABILITY_WINDOW - 1..];
    let diffs: Vec<i64> = tail.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    if diffs.iter().all(|&d| d == 0) {
        return Growth::Finite { degree: *v.last().unwrap() };
    }
    let delta = diffs[0];
    if delta > 0 && diffs.iter().all(|&d| d == delta) {
        let e = h.end_degree() as i64;
        // plane curve of degree delta: h(e) = delta*e - delta(delta-3)/2
        let poly = delta * e - delta * (delta - 3) / 2;
        return Growth::Dim1 { curve_degree: delta as usize, excess: *v.last().unwrap() as i64 - poly };
    }
    Growth::NotStabilized
}

/// Successive graded pieces `J_e` of the ideal generated by some pieces.
#[derive(Debug, Clone)]
pub struct GeneratedIdeal {
    field: Field,
    nvars: usize,
    generators: Vec<GradedPiece>,
    current: GradedPiece,
}

impl GeneratedIdeal {
    /// Starts at degree `e_from`; generators of lower degree are multiplied up.
    pub fn new(field: Field, nvars: usize, generators: Vec<GradedPiece>, e_from: usize) -> GeneratedIdeal {
        let mut current = GradedPiece::zero(field, nvars, e_from);
        for g in generators.iter().filter(|g| g.degree() <= e_from) {
            current = current.sum(&g.product(e_from));
        }
        GeneratedIdeal { field, nvars, generators, current }
    }

    pub fn piece(&self) -> &GradedPiece {
        &self.current
    }

    pub fn degree(&self) -> usize {
        self.current.degree()
    }

    pub fn advance(&mut self) {
        let mut next = self.current.times_linear();
        let e = next.degree();
        for g in self.generators.iter().filter(|g| g.degree() == e) {
            next = next.sum(g);
        }
        self.current = next;
    }

    pub fn quotient_dim(&self) -> usize {
        monomial_count(self.nvars, self.current.degree()) - self.current.dim()
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

/// `h(e) = dim S_e - dim J_e` for `e` in `[e_from, e_to]`, where `J` is
/// generated by the given pieces.
pub fn hilbert_window(generators: &[GradedPiece], e_from: usize, e_to: usize) -> Result<HilbertWindow> {
    if e_from > e_to {
        return Err(Error::InvalidArgument("empty degree window".into()));
    }
    let first = generators.first().ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
    let mut ideal = GeneratedIdeal::new(first.field(), first.nvars(), generators.to_vec(), e_from);
    let mut values = vec![ideal.quotient_dim()];
    while ideal.degree() < e_to {
        ideal.advance();
        values.push(ideal.quotient_dim());
    }
    Ok(HilbertWindow { start_degree: e_from, values })
}

/// Extends the Hilbert window of `J` from `e_from` until [`classify_growth`]
/// stabilizes, or fails once `cap` is passed. Returns the final two pieces
/// as well, for quotient computations.
pub fn stabilized_window(
    generators: &[GradedPiece],
    e_from: usize,
    cap: usize,
) -> Result<(HilbertWindow, Growth, [GradedPiece; 2])> {
    let first = generators.first().ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
    let mut ideal = GeneratedIdeal::new(first.field(), first.nvars(), generators.to_vec(), e_from);
    let mut window = HilbertWindow { start_degree: e_from, values: vec![ideal.quotient_dim()] };
    let mut prev = ideal.piece().clone();
    loop {
        let g = classify_growth(&window);
        if g != Growth::NotStabilized {
            return Ok((window, g, [prev, ideal.piece().clone()]));
        }
        if ideal.degree() >= cap {
            return Err(Error::NotStabilized { cap });
        }
        prev = ideal.piece().clone();
        ideal.advance();
        window.values.push(ideal.quotient_dim());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> Field {
        Field::default()
    }

    fn unit(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; n];
        v[i] = Scalar::ONE;
        v
    }

    fn form(terms: &[(i64, &[u16])]) -> HomogeneousForm {
        HomogeneousForm::from_terms(f(), 3, terms).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let id: Vec<Vec<Scalar>> = (0..3).map(|i| unit(3, i)).collect();
        assert!(kernel_basis(f(), &id, 3).is_empty());
        let zero = vec![vec![Scalar::ZERO; 4]; 2];
        assert_eq!(kernel_basis(f(), &zero, 4).len(), 4);
        let ones = vec![vec![Scalar::ONE; 3]];
        let k = kernel_basis(f(), &ones, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = v.iter().fold(Scalar::ZERO, |a, &b| f().add(a, b));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        let fl = f();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for t in 0..40 {
            let rows = 1 + t % 7;
            let cols = 1 + (t * 3) % 9;
            // low-rank products hit interesting ranks
            let inner = 1 + t % 4;
            let a: Vec<Vec<Scalar>> = (0..rows).map(|_| (0..inner).map(|_| fl.random(&mut rng)).collect()).collect();
            let b: Vec<Vec<Scalar>> = (0..inner).map(|_| (0..cols).map(|_| fl.random(&mut rng)).collect()).collect();
            let m: Vec<Vec<Scalar>> = a
                .iter()
                .map(|r| {
                    (0..cols)
                        .map(|j| (0..inner).fold(Scalar::ZERO, |acc, k| fl.add(acc, fl.mul(r[k], b[k][j]))))
                        .collect()
                })
                .collect();
            let rank = Echelon::from_rows(fl, cols, m.iter().cloned()).rank();
            let ker = kernel_basis(fl, &m, cols);
            assert_eq!(rank + ker.len(), cols);
            for v in &ker {
                for r in &m {
                    let dot = r.iter().zip(v).fold(Scalar::ZERO, |acc, (&x, &y)| fl.add(acc, fl.mul(x, y)));
                    assert!(dot.is_zero());
                }
            }
        }
    }

    #[test]
    fn echelon_is_canonical() {
        let fl = f();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rows: Vec<Vec<Scalar>> = (0..4).map(|_| (0..7).map(|_| fl.random(&mut rng)).collect()).collect();
        let a = Echelon::from_rows(fl, 7, rows.iter().cloned());
        let b = Echelon::from_rows(fl, 7, rows.iter().rev().cloned());
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn product_examples() {
        let x = GradedPiece::span_of(f(), 3, 1, &[form(&[(1, &[1, 0, 0])])]);
        let p = x.product(2);
        assert_eq!(p.dim(), 3);
        for m in [[2, 0, 0], [1, 1, 0], [1, 0, 1]] {
            assert!(p.contains(&form(&[(1, &m)])));
        }
        assert_eq!(GradedPiece::full(f(), 3, 2).product(3).dim(), 10);
        let conic = GradedPiece::span_of(f(), 3, 2, &[form(&[(1, &[2, 0, 0]), (-1, &[0, 1, 1])])]);
        assert_eq!(conic.product(3).dim(), 3);
    }

    #[test]
    fn sum_and_intersection_examples() {
        let x2 = GradedPiece::span_of(f(), 3, 2, &[form(&[(1, &[2, 0, 0])])]);
        let y2 = GradedPiece::span_of(f(), 3, 2, &[form(&[(1, &[0, 2, 0])])]);
        let both = x2.sum(&y2);
        assert_eq!(x2.sum(&x2).dim(), 1);
        assert_eq!(both.dim(), 2);
        assert_eq!(x2.sum(&GradedPiece::zero(f(), 3, 2)).dim(), 1);
        assert_eq!(both.intersection_dim(&both), 2);
        assert_eq!(x2.intersection_dim(&y2), 0);
        assert_eq!(x2.intersection_dim(&both), 1);
        assert!(x2.is_subspace_of(&both));
        assert!(!both.is_subspace_of(&x2));
    }

    #[test]
    fn window_examples() {
        let lin = GradedPiece::full(f(), 3, 1);
        let w = hilbert_window(&[lin], 1, 4).unwrap();
        assert_eq!(w.values, vec![0, 0, 0, 0]);
        let conic = GradedPiece::span_of(f(), 3, 2, &[form(&[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])])]);
        let w = hilbert_window(&[conic], 2, 6).unwrap();
        assert_eq!(w.values, (2..=6).map(|e| 2 * e + 1).collect::<Vec<_>>());
        assert_eq!(classify_growth(&w), Growth::Dim1 { curve_degree: 2, excess: 0 });
    }

    #[test]
    fn growth_examples() {
        let w = |v: Vec<usize>| HilbertWindow { start_degree: 3, values: v };
        assert_eq!(classify_growth(&w(vec![5, 5, 5, 5])), Growth::Finite { degree: 5 });
        let conic = HilbertWindow { start_degree: 1, values: vec![3, 5, 7, 9] };
        assert_eq!(classify_growth(&conic), Growth::Dim1 { curve_degree: 2, excess: 0 });
        // line plus a point: h(e) = e + 2
        let lp = HilbertWindow { start_degree: 2, values: vec![4, 5, 6, 7] };
        assert_eq!(classify_growth(&lp), Growth::Dim1 { curve_degree: 1, excess: 1 });
        assert_eq!(classify_growth(&w(vec![1, 3, 6, 8])), Growth::NotStabilized);
        assert_eq!(classify_growth(&w(vec![5, 5, 5])), Growth::NotStabilized);
    }

    #[test]
    fn adding_generators_never_raises_h() {
        let fl = f();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let g1 = GradedPiece::span_of(fl, 3, 2, &[HomogeneousForm::random(fl, 3, 2, &mut rng)]);
            let g2 = GradedPiece::span_of(fl, 3, 3, &[HomogeneousForm::random(fl, 3, 3, &mut rng)]);
            let a = hilbert_window(std::slice::from_ref(&g1), 3, 7).unwrap();
            let b = hilbert_window(&[g1, g2], 3, 7).unwrap();
            assert!(a.values.iter().zip(&b.values).all(|(x, y)| y <= x));
        }
    }
}
