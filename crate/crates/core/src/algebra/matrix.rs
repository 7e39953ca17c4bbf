//! Matrices of homogeneous forms and their determinants.

use std::collections::HashMap;

use super::field::{Field, Scalar};
use super::form::HomogeneousForm;
use crate::error::{Error, Result};

/// A `rows x cols` matrix of forms whose `(i, j)` entry has degree
/// `col_degrees[j] - row_degrees[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatrix {
    field: Field,
    nvars: usize,
    entries: Vec<Vec<HomogeneousForm>>,
    row_degrees: Vec<usize>,
    col_degrees: Vec<usize>,
}

impl FormMatrix {
    pub fn new(
        entries: Vec<Vec<HomogeneousForm>>,
        row_degrees: Vec<usize>,
        col_degrees: Vec<usize>,
    ) -> Result<FormMatrix> {
        if entries.len() != row_degrees.len() || entries.is_empty() {
            return Err(Error::DegenerateInput("row count does not match row degrees".into()));
        }
        let first = &entries[0]
            .first()
            .ok_or_else(|| Error::DegenerateInput("matrix has no columns".into()))?;
        let (field, nvars) = (first.field(), first.nvars());
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_degrees.len() {
                return Err(Error::DegenerateInput(format!("row {i} has {} entries", row.len())));
            }
            for (j, e) in row.iter().enumerate() {
                let want = col_degrees[j] as i64 - row_degrees[i] as i64;
                if e.degree() as i64 != want || e.nvars() != nvars || e.field() != field {
                    return Err(Error::DegenerateInput(format!(
                        "entry ({i},{j}) has degree {} but b_j - a_i = {want}",
                        e.degree()
                    )));
                }
            }
        }
        Ok(FormMatrix { field, nvars, entries, row_degrees, col_degrees })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &HomogeneousForm {
        &self.entries[i][j]
    }

    pub fn row_degrees(&self) -> &[usize] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[usize] {
        &self.col_degrees
    }

    /// Entry degrees `b_j - a_i` as a grid.
    pub fn degree_grid(&self) -> Vec<Vec<usize>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.degree()).collect()).collect()
    }

    /// Evaluate every entry at a point.
    pub fn eval(&self, point: &[Scalar]) -> Vec<Vec<Scalar>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.eval(point)).collect()).collect()
    }

    /// Determinant of the `k x k` submatrix left after deleting row
    /// `omit_row` (0-based) of a `(k+1) x k` matrix.
    pub fn minor_determinant(&self, omit_row: usize) -> Result<HomogeneousForm> {
        if self.rows() != self.cols() + 1 {
            return Err(Error::DegenerateInput(format!(
                "maximal minors need a (k+1) x k matrix, got {} x {}",
                self.rows(),
                self.cols()
            )));
        }
        if omit_row >= self.rows() {
            return Err(Error::InvalidArgument(format!("row {omit_row} out of range")));
        }
        let rows: Vec<usize> = (0..self.rows()).filter(|&i| i != omit_row).collect();
        let out = determinant(self, &rows, &(0..self.cols()).collect::<Vec<_>>());
        let expected = self.col_degrees.iter().sum::<usize>() as i64
            - rows.iter().map(|&i| self.row_degrees[i]).sum::<usize>() as i64;
        if out.degree() as i64 != expected {
            return Err(Error::DegenerateInput("minor degree bookkeeping violated".into()));
        }
        Ok(out)
    }

    /// All maximal minors, `F_i` = determinant with row `i` deleted.
    pub fn maximal_minors(&self) -> Result<Vec<HomogeneousForm>> {
        (0..self.rows()).map(|i| self.minor_determinant(i)).collect()
    }
}

/// Determinant of the square submatrix on `rows x cols`, by cofactor
/// expansion along the top row with memoized sub-minors.
pub fn determinant(m: &FormMatrix, rows: &[usize], cols: &[usize]) -> HomogeneousForm {
    assert_eq!(rows.len(), cols.len(), "determinant of a non-square selection");
    assert!(cols.len() < 32);
    let mut memo: HashMap<u32, HomogeneousForm> = HashMap::new();
    let full = if cols.is_empty() { 0 } else { (1u32 << cols.len()) - 1 };
    det_rec(m, rows, cols, full, &mut memo)
}

fn det_rec(
    m: &FormMatrix,
    rows: &[usize],
    cols: &[usize],
    mask: u32,
    memo: &mut HashMap<u32, HomogeneousForm>,
) -> HomogeneousForm {
    if mask == 0 {
        return HomogeneousForm::constant(m.field, m.nvars, Scalar::ONE);
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let level = cols.len() - mask.count_ones() as usize;
    let row = rows[level];
    let mut acc: Option<HomogeneousForm> = None;
    let mut sign_pos = 0usize;
    for (c, &col) in cols.iter().enumerate() {
        if mask & (1 << c) == 0 {
            continue;
        }
        let sub = det_rec(m, rows, cols, mask & !(1 << c), memo);
        let mut term = m.entries[row][col].mul(&sub);
        if sign_pos % 2 == 1 {
            term = term.neg();
        }
        sign_pos += 1;
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    let out = acc.expect("nonempty mask");
    memo.insert(mask, out.clone());
    out
}

/// Determinant of a square matrix by cofactor expansion along `row`.
pub fn determinant_along_row(m: &FormMatrix, row: usize) -> HomogeneousForm {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let rows: Vec<usize> = (0..n).filter(|&i| i != row).collect();
    let mut acc: Option<HomogeneousForm> = None;
    for j in 0..n {
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let mut term = m.entries[row][j].mul(&determinant(m, &rows, &cols));
        if (row + j) % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("nonempty matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f() -> Field {
        Field::default()
    }

    fn random_matrix(rows: usize, cols: usize, a: &[usize], b: &[usize], seed: u64) -> FormMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..rows)
            .map(|i| (0..cols).map(|j| HomogeneousForm::random(f(), 3, b[j] - a[i], &mut rng)).collect())
            .collect();
        FormMatrix::new(entries, a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn one_by_one_minors() {
        let m = random_matrix(2, 1, &[1, 2], &[4], 1);
        assert_eq!(m.minor_determinant(0).unwrap(), *m.entry(1, 0));
        assert_eq!(m.minor_determinant(1).unwrap(), *m.entry(0, 0));
    }

    #[test]
    fn rejects_bad_degree_grid() {
        let x = HomogeneousForm::variable(f(), 3, 0);
        let err = FormMatrix::new(vec![vec![x.clone()], vec![x.mul(&x)]], vec![1, 1], vec![2]);
        assert!(matches!(err, Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn cofactor_rows_agree() {
        for seed in 0..20 {
            let n = 1 + (seed as usize % 3);
            let m = random_matrix(n, n, &vec![0; n], &vec![1; n], seed);
            let d0 = determinant_along_row(&m, 0);
            for r in 1..n {
                assert_eq!(determinant_along_row(&m, r), d0);
            }
            let all: Vec<usize> = (0..n).collect();
            assert_eq!(determinant(&m, &all, &all), d0);
        }
    }

    #[test]
    fn signed_minor_relation() {
        let fi = f();
        for seed in 0..10 {
            let m = random_matrix(3, 2, &[3, 3, 4], &[5, 5], seed);
            let minors = m.maximal_minors().unwrap();
            for (i, g) in minors.iter().enumerate() {
                assert_eq!(g.degree(), [3, 3, 4][i]);
            }
            for j in 0..2 {
                let mut acc = HomogeneousForm::zero(fi, 3, 5);
                for (i, g) in minors.iter().enumerate() {
                    let t = g.mul(m.entry(i, j));
                    acc = if i % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
                }
                assert!(acc.is_zero());
            }
        }
    }
}
