//! Determinantal loci of the generic `(k+1) x k` matrix, checked one graded
//! piece at a time: `I_r = I_{k+1} ∩ J_r`, the Cramer memberships behind it
//! and the witness matrices separating its components.
//!
//! All ideals here are generated by minors, so they are homogeneous for the
//! grading by row and column degrees; every graded piece splits into blocks
//! of fixed multidegree, which keeps the linear algebra small.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::matrix::determinant;
use crate::algebra::monomial::{monomial_basis, monomial_count, rank_of_product};
use crate::algebra::{Field, FormMatrix, HomogeneousForm, Scalar};
use crate::error::{Error, Result};
use crate::gradedla::Echelon;
use crate::hilbertburch::expected_codim_rank_locus;

/// Largest `k` handled: degree-(k+4) pieces in `k(k+1)` variables.
pub const MAX_K: usize = 3;

/// Polynomial ring on the entries `x_{ij}` of a generic `(k+1) x k` matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericMatrixRing {
    pub field: Field,
    pub k: usize,
}

impl GenericMatrixRing {
    pub fn new(field: Field, k: usize) -> Result<GenericMatrixRing> {
        if k == 0 || k > MAX_K {
            return Err(Error::InvalidArgument(format!("k must lie in 1..={MAX_K}, got {k}")));
        }
        Ok(GenericMatrixRing { field, k })
    }

    pub fn nvars(&self) -> usize {
        self.k * (self.k + 1)
    }

    /// Variable index of `x_{ij}`, 1-based row and column.
    pub fn var(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.k + (j - 1)
    }

    fn matrix(&self) -> FormMatrix {
        let entries = (1..=self.k + 1)
            .map(|i| (1..=self.k).map(|j| HomogeneousForm::variable(self.field, self.nvars(), self.var(i, j))).collect())
            .collect();
        FormMatrix::new(entries, vec![0; self.k + 1], vec![1; self.k]).expect("generic matrix has linear entries")
    }

    /// Row-degree and column-degree vector of a monomial.
    fn multidegree(&self, exps: &[u16]) -> Vec<u16> {
        let mut key = vec![0u16; 2 * self.k + 1];
        for (v, &x) in exps.iter().enumerate() {
            key[v / self.k] += x;
            key[self.k + 1 + v % self.k] += x;
        }
        key
    }

    /// `F_i`: the minor with row `i` (1-based) deleted.
    pub fn generic_f(&self, i: usize) -> HomogeneousForm {
        assert!((1..=self.k + 1).contains(&i), "row index out of range");
        self.matrix().minor_determinant(i - 1).expect("generic matrix is (k+1) x k")
    }

    /// Generators of `I_r = (F_1, ..., F_r)`.
    pub fn ir_generators(&self, r: usize) -> Vec<HomogeneousForm> {
        (1..=r).map(|i| self.generic_f(i)).collect()
    }

    /// Generators of `J_r`: maximal minors of the last `k+1-r` rows.
    pub fn jr_generators(&self, r: usize) -> JrGenerators {
        assert!((1..=self.k + 1).contains(&r), "r out of range");
        if r == self.k + 1 {
            return JrGenerators::Unit;
        }
        let m = self.matrix();
        let rows: Vec<usize> = (r..=self.k).collect();
        let size = rows.len();
        let forms = column_subsets(self.k, size).iter().map(|cols| determinant(&m, &rows, cols)).collect();
        JrGenerators::Forms(forms)
    }

    /// Unit generator `1` of the whole ring.
    fn one(&self) -> HomogeneousForm {
        HomogeneousForm::constant(self.field, self.nvars(), Scalar::ONE)
    }
}

/// `J_{k+1}` is the unit ideal by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JrGenerators {
    Unit,
    Forms(Vec<HomogeneousForm>),
}

fn column_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            rec(c + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

type SparseRow = Vec<(usize, Scalar)>;

/// Spanning rows `m * g` of a degree-`e` piece, grouped by multidegree.
fn block_rows(ring: &GenericMatrixRing, gens: &[HomogeneousForm], e: usize) -> BTreeMap<Vec<u16>, Vec<SparseRow>> {
    let nv = ring.nvars();
    let mut blocks: BTreeMap<Vec<u16>, Vec<SparseRow>> = BTreeMap::new();
    for g in gens.iter().filter(|g| g.degree() <= e && !g.is_zero()) {
        let terms = g.terms();
        let lead = ring.multidegree(terms[0].0.exponents());
        for m in monomial_basis(nv, e - g.degree()).iter() {
            let mut row: SparseRow = terms
                .iter()
                .map(|(t, c)| (rank_of_product(m.exponents(), t.exponents()), *c))
                .collect();
            row.sort_unstable_by_key(|&(r, _)| r);
            let key: Vec<u16> = ring.multidegree(m.exponents()).iter().zip(&lead).map(|(a, b)| a + b).collect();
            blocks.entry(key).or_default().push(row);
        }
    }
    blocks
}

/// Rank of the union of several row sets living in one block.
fn union_rank(field: Field, sets: &[&[SparseRow]]) -> usize {
    let mut local: HashMap<usize, usize> = HashMap::new();
    for row in sets.iter().flat_map(|s| s.iter()) {
        for &(c, _) in row {
            let next = local.len();
            local.entry(c).or_insert(next);
        }
    }
    let mut ech = Echelon::new(field, local.len());
    for row in sets.iter().flat_map(|s| s.iter()) {
        let mut dense = vec![Scalar::ZERO; local.len()];
        for &(c, x) in row {
            dense[local[&c]] = x;
        }
        ech.insert(dense);
        if ech.rank() == local.len() {
            break;
        }
    }
    ech.rank()
}

/// Dimension of a degree-`e` piece of the ideal spanned by `gens`.
pub fn piece_dim(ring: &GenericMatrixRing, gens: &[HomogeneousForm], e: usize) -> usize {
    block_rows(ring, gens, e).values().map(|rows| union_rank(ring.field, &[rows])).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionRow {
    pub e: usize,
    pub dim_ir: usize,
    pub dim_ik1: usize,
    pub dim_jr: usize,
    pub dim_sum: usize,
    /// `dim I_{k+1} + dim J_r - dim (I_{k+1} + J_r)`.
    pub dim_intersection: usize,
    pub contained: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub k: usize,
    pub r: usize,
    pub max_degree: usize,
    pub holds: bool,
    pub table: Vec<DecompositionRow>,
}

/// Verifies `(I_r)_e = (I_{k+1})_e ∩ (J_r)_e` for every `e <= max_degree`.
pub fn check_decomposition(ring: &GenericMatrixRing, r: usize, max_degree: usize) -> Result<Decomposition> {
    let k = ring.k;
    if !(1..=k + 1).contains(&r) {
        return Err(Error::InvalidArgument(format!("r must lie in 1..={}, got {r}", k + 1)));
    }
    if max_degree < k + 2 {
        return Err(Error::InvalidArgument(format!("degree cap must be at least {}", k + 2)));
    }
    let ir = ring.ir_generators(r);
    let ik1 = ring.ir_generators(k + 1);
    let jr = match ring.jr_generators(r) {
        JrGenerators::Unit => vec![ring.one()],
        JrGenerators::Forms(f) => f,
    };
    let table = decomposition_table(ring, &ir, &ik1, &jr, max_degree);
    Ok(Decomposition { k, r, max_degree, holds: table.iter().all(|t| t.holds), table })
}

/// Per-degree comparison of `(ir)` with `(ik1) ∩ (jr)`.
fn decomposition_table(
    ring: &GenericMatrixRing,
    ir: &[HomogeneousForm],
    ik1: &[HomogeneousForm],
    jr: &[HomogeneousForm],
    max_degree: usize,
) -> Vec<DecompositionRow> {
    let field = ring.field;
    let mut table = Vec::with_capacity(max_degree + 1);
    for e in 0..=max_degree {
        let (bi, bk, bj) = (block_rows(ring, ir, e), block_rows(ring, ik1, e), block_rows(ring, jr, e));
        let get = |b: &BTreeMap<Vec<u16>, Vec<SparseRow>>, key: &Vec<u16>| -> Vec<SparseRow> {
            b.get(key).cloned().unwrap_or_default()
        };
        let mut keys: Vec<&Vec<u16>> = bi.keys().chain(bk.keys()).chain(bj.keys()).collect();
        keys.sort();
        keys.dedup();
        let mut row = DecompositionRow {
            e,
            dim_ir: 0,
            dim_ik1: 0,
            dim_jr: 0,
            dim_sum: 0,
            dim_intersection: 0,
            contained: true,
            holds: false,
        };
        for key in keys {
            let (i, kk, j) = (get(&bi, key), get(&bk, key), get(&bj, key));
            let (di, dk, dj) = (union_rank(field, &[&i]), union_rank(field, &[&kk]), union_rank(field, &[&j]));
            let ds = union_rank(field, &[&kk, &j]);
            row.dim_ir += di;
            row.dim_ik1 += dk;
            row.dim_jr += dj;
            row.dim_sum += ds;
            row.dim_intersection += dk + dj - ds;
            if !i.is_empty() {
                row.contained &= union_rank(field, &[&kk, &i]) == dk && union_rank(field, &[&j, &i]) == dj;
            }
        }
        row.holds = row.contained && row.dim_ir == row.dim_intersection;
        table.push(row);
    }
    table
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CramerReport {
    pub k: usize,
    pub r: usize,
    pub products: usize,
    /// Every `P * F_{r+1}` with `P` a generator of `J_r` lies in `I_r`.
    pub members: bool,
    /// `F_{r+1}` itself is not in `(J_r)` at degree `k`.
    pub f_next_outside_jr: bool,
}

fn in_span(ring: &GenericMatrixRing, gens: &[HomogeneousForm], f: &HomogeneousForm) -> bool {
    let e = f.degree();
    let rows = block_rows(ring, gens, e);
    // f as a sparse row; it must be multihomogeneous to sit in one block
    let mut by_key: BTreeMap<Vec<u16>, SparseRow> = BTreeMap::new();
    for (m, c) in f.terms() {
        by_key.entry(ring.multidegree(m.exponents())).or_default().push((m.rank(), c));
    }
    by_key.into_iter().all(|(key, frow)| {
        let span = rows.get(&key).cloned().unwrap_or_default();
        let frow = vec![frow];
        union_rank(ring.field, &[&span]) == union_rank(ring.field, &[&span, &frow])
    })
}

/// Half of the colon identity `J_r = (I_r : F_{r+1})`: `J_r F_{r+1} ⊆ I_r`.
pub fn check_cramer_membership(ring: &GenericMatrixRing, r: usize) -> Result<CramerReport> {
    let k = ring.k;
    if !(1..=k).contains(&r) {
        return Err(Error::InvalidArgument(format!("r must lie in 1..={k}, got {r}")));
    }
    let JrGenerators::Forms(jr) = ring.jr_generators(r) else { unreachable!("r <= k") };
    let ir = ring.ir_generators(r);
    let f_next = ring.generic_f(r + 1);
    let members = jr.iter().all(|p| in_span(ring, &ir, &p.mul(&f_next)));
    let f_next_outside_jr = !in_span(ring, &jr, &f_next);
    Ok(CramerReport { k, r, products: jr.len(), members, f_next_outside_jr })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub k: usize,
    pub r: usize,
    /// `A_r` lies on `L_{k+1}` but off `N_r` (checked for `r >= 2`).
    pub a_witness: Option<bool>,
    /// `B` lies on `N_r` but off `L_{k+1}`.
    pub b_witness: bool,
}

/// Evaluates the `F_i` and the generators of `J_r` at the block witnesses
/// `A_r = [[0, 0], [I_{k+1-r}, 0]]` and `B = [I_k; 0]`.
pub fn witness_noninclusions(ring: &GenericMatrixRing, r: usize) -> Result<WitnessReport> {
    let k = ring.k;
    if !(1..=k).contains(&r) {
        return Err(Error::InvalidArgument(format!("r must lie in 1..={k}, got {r}")));
    }
    let JrGenerators::Forms(jr) = ring.jr_generators(r) else { unreachable!("r <= k") };
    let fs = ring.ir_generators(k + 1);
    let point = |ones: &[(usize, usize)]| {
        let mut p = vec![Scalar::ZERO; ring.nvars()];
        for &(i, j) in ones {
            p[ring.var(i, j)] = Scalar::ONE;
        }
        p
    };
    let a_witness = (r >= 2).then(|| {
        let a: Vec<(usize, usize)> = (1..=k + 1 - r).map(|t| (r + t, t)).collect();
        let a = point(&a);
        fs.iter().all(|f| f.eval(&a).is_zero()) && jr.iter().any(|g| g.eval(&a) == Scalar::ONE)
    });
    let b = point(&(1..=k).map(|t| (t, t)).collect::<Vec<_>>());
    let f_last = ring.generic_f(k + 1).eval(&b);
    let b_witness =
        jr.iter().all(|g| g.eval(&b).is_zero()) && (f_last == Scalar::ONE || f_last == ring.field.neg(Scalar::ONE));
    Ok(WitnessReport { k, r, a_witness, b_witness })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodimClaim {
    pub label: String,
    pub m: usize,
    pub n: usize,
    pub c: usize,
    pub value: usize,
    pub expected: usize,
}

/// The four codimension claims for the loci attached to `k`: `L_{k+1}`
/// (2), its singular locus (6), `N_r` (r) and the singular locus of `N_r`
/// (2(r+1)), each for every admissible `r`.
pub fn codimension_claims(k: usize) -> Vec<CodimClaim> {
    let mut out = Vec::new();
    let mut push = |label: String, m: usize, n: usize, c: usize, expected: usize| {
        out.push(CodimClaim { label, m, n, c, value: expected_codim_rank_locus(m, n, c), expected });
    };
    push("L_{k+1}".into(), k + 1, k, k - 1, 2);
    if k >= 2 {
        push("sing L_{k+1}".into(), k + 1, k, k - 2, 6);
    }
    for r in 1..=k {
        push(format!("N_{r}"), k + 1 - r, k, k - r, r);
    }
    for r in 1..k {
        push(format!("sing N_{r}"), k + 1 - r, k, k - r - 1, 2 * (r + 1));
    }
    out
}

/// Monomial count of the largest piece touched by [`check_decomposition`].
pub fn largest_piece(k: usize, max_degree: usize) -> usize {
    monomial_count(k * (k + 1), max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedla::GradedPiece;

    fn ring(k: usize) -> GenericMatrixRing {
        GenericMatrixRing::new(Field::default(), k).unwrap()
    }

    /// a..f for the 3 x 2 case.
    fn letters(g: &GenericMatrixRing) -> Vec<HomogeneousForm> {
        (0..6).map(|v| HomogeneousForm::variable(g.field, 6, v)).collect()
    }

    #[test]
    fn claim_labels_for_k2() {
        let g = ring(2);
        let l = letters(&g);
        let (a, b, c, d, e, f) = (&l[0], &l[1], &l[2], &l[3], &l[4], &l[5]);
        assert_eq!(g.generic_f(1), c.mul(f).sub(&d.mul(e)));
        assert_eq!(g.generic_f(2), a.mul(f).sub(&b.mul(e)));
        assert_eq!(g.jr_generators(2), JrGenerators::Forms(vec![e.clone(), f.clone()]));
        assert_eq!(g.jr_generators(1), JrGenerators::Forms(vec![c.mul(f).sub(&d.mul(e))]));
        assert_eq!(g.jr_generators(3), JrGenerators::Unit);
        let g1 = ring(1);
        assert_eq!(g1.generic_f(1), HomogeneousForm::variable(g1.field, 2, 1));
    }

    #[test]
    fn block_dims_match_dense_pieces() {
        for k in 1..=2 {
            let g = ring(k);
            for r in 1..=k + 1 {
                let gens = g.ir_generators(r);
                for e in 0..=k + 3 {
                    let mut dense = GradedPiece::zero(g.field, g.nvars(), 0);
                    for d in 1..=e {
                        dense = dense.times_linear();
                        for f in gens.iter().filter(|f| f.degree() == d) {
                            dense.insert(f);
                        }
                    }
                    assert_eq!(piece_dim(&g, &gens, e), dense.dim(), "k={k} r={r} e={e}");
                }
            }
        }
    }

    #[test]
    fn decomposition_k2() {
        let g = ring(2);
        for r in 1..=3 {
            let d = check_decomposition(&g, r, 6).unwrap();
            assert!(d.holds, "r={r}: {:?}", d.table);
        }
        let d = check_decomposition(&g, 2, 6).unwrap();
        // I_2 is generated by two quadrics sharing no factor
        assert_eq!(d.table[2].dim_ir, 2);
        assert_eq!(d.table[3].dim_ir, 12);
    }

    #[test]
    fn decomposition_detects_wrong_ideal() {
        // I_1 is strictly smaller than I_3 ∩ J_2, so the table must flag it
        let g = ring(2);
        let JrGenerators::Forms(j2) = g.jr_generators(2) else { panic!() };
        let table = decomposition_table(&g, &g.ir_generators(1), &g.ir_generators(3), &j2, 4);
        assert!(!table.iter().all(|t| t.holds));
        assert!(table[2].contained && table[2].dim_ir < table[2].dim_intersection);
    }

    #[test]
    fn cramer_and_witnesses() {
        for k in 1..=3 {
            let g = ring(k);
            for r in 1..=k {
                let c = check_cramer_membership(&g, r).unwrap();
                assert!(c.members && c.f_next_outside_jr, "{c:?}");
                let w = witness_noninclusions(&g, r).unwrap();
                assert_eq!(w.a_witness, (r >= 2).then_some(true));
                assert!(w.b_witness);
            }
        }
    }

    #[test]
    fn codims() {
        for k in 1..=3 {
            assert!(codimension_claims(k).iter().all(|c| c.value == c.expected));
        }
        assert_eq!(codimension_claims(3).len(), 1 + 1 + 3 + 2);
    }

    #[test]
    fn rejects_large_k() {
        assert!(GenericMatrixRing::new(Field::default(), 4).is_err());
        assert!(GenericMatrixRing::new(Field::default(), 0).is_err());
    }
}
