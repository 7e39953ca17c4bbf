//! Dense univariate polynomials over `F_p`: the characteristic polynomial,
//! squarefree parts and rational roots.

use rand::Rng;

use super::field::{Field, Scalar};

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> UniPoly {
        UniPoly { coeffs: vec![Scalar::ONE] }
    }

    /// `x + c`
    pub fn linear(c: Scalar) -> UniPoly {
        UniPoly::new(vec![c, Scalar::ONE])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, f: &Field, x: Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn add(&self, f: &Field, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |p: &UniPoly, i: usize| p.coeffs.get(i).copied().unwrap_or(Scalar::ZERO);
        UniPoly::new((0..n).map(|i| f.add(get(self, i), get(o, i))).collect())
    }

    pub fn sub(&self, f: &Field, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |p: &UniPoly, i: usize| p.coeffs.get(i).copied().unwrap_or(Scalar::ZERO);
        UniPoly::new((0..n).map(|i| f.sub(get(self, i), get(o, i))).collect())
    }

    pub fn scale(&self, f: &Field, c: Scalar) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &Field, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, f: &Field, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(d.coeffs[dd]).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, dc));
            }
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, f: &Field, d: &UniPoly) -> UniPoly {
        self.div_rem(f, d).1
    }

    pub fn monic(&self, f: &Field) -> UniPoly {
        match self.coeffs.last() {
            None => UniPoly::zero(),
            Some(&l) => self.scale(f, f.inv(l).unwrap()),
        }
    }

    pub fn derivative(&self, f: &Field) -> UniPoly {
        UniPoly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(c, f.elem(i as i64))).collect(),
        )
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, f: &Field, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, f: &Field, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.rem(f, m);
        let mut acc = UniPoly::one().rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// Degree of `self / gcd(self, self')`, i.e. the number of distinct roots
    /// over the algebraic closure (valid when the degree is below `p`).
    pub fn squarefree_degree(&self, f: &Field) -> usize {
        let Some(d) = self.degree() else { return 0 };
        let g = self.gcd(f, &self.derivative(f));
        d - g.degree().unwrap_or(0)
    }

    pub fn is_squarefree(&self, f: &Field) -> bool {
        self.gcd(f, &self.derivative(f)).degree() == Some(0)
    }

    /// Distinct roots in `F_p`, sorted.
    pub fn rational_roots<R: Rng + ?Sized>(&self, f: &Field, rng: &mut R) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let m = self.monic(f);
        let x = UniPoly::linear(Scalar::ZERO);
        let xp = x.pow_mod(f, f.prime() as u64, &m);
        let split = m.gcd(f, &xp.sub(f, &x));
        let mut roots = Vec::new();
        split_linear(f, &split, rng, &mut roots);
        roots.sort();
        roots
    }
}

// `g` is monic and a product of distinct linear factors.
fn split_linear<R: Rng + ?Sized>(f: &Field, g: &UniPoly, rng: &mut R, out: &mut Vec<Scalar>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(g.coeffs[0])),
        Some(_) => loop {
            let shift = UniPoly::linear(f.random(rng));
            let h = shift.pow_mod(f, (f.prime() as u64 - 1) / 2, g).sub(f, &UniPoly::one());
            let c = g.gcd(f, &h);
            let dc = c.degree().unwrap_or(0);
            if dc > 0 && dc < g.degree().unwrap() {
                let (q, _) = g.div_rem(f, &c);
                split_linear(f, &c, rng, out);
                split_linear(f, &q.monic(f), rng, out);
                return;
            }
        },
    }
}

/// Characteristic polynomial `det(tI - M)` of a square matrix, via
/// reduction to Hessenberg form.
pub fn charpoly(f: &Field, m: &[Vec<Scalar>]) -> UniPoly {
    let n = m.len();
    let mut h: Vec<Vec<Scalar>> = m.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else { continue };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]).unwrap();
        for i in j + 2..n {
            let u = f.mul(h[i][j], inv);
            if u.is_zero() {
                continue;
            }
            let pivot_row = h[j + 1].clone();
            for (dst, &src) in h[i].iter_mut().zip(&pivot_row) {
                *dst = f.sub(*dst, f.mul(u, src));
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[i]);
                row[j + 1] = f.add(row[j + 1], t);
            }
        }
    }
    let mut p: Vec<UniPoly> = Vec::with_capacity(n + 1);
    p.push(UniPoly::one());
    for mm in 1..=n {
        let mut next = UniPoly::linear(f.neg(h[mm - 1][mm - 1])).mul(f, &p[mm - 1]);
        let mut prod = Scalar::ONE;
        for i in (1..mm).rev() {
            prod = f.mul(prod, h[i][i - 1]);
            let c = f.mul(h[i - 1][mm - 1], prod);
            next = next.sub(f, &p[i - 1].scale(f, c));
        }
        p.push(next);
    }
    p.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fl() -> Field {
        Field::default()
    }

    fn mat_mul(f: &Field, a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Scalar::ZERO, |acc, k| f.add(acc, f.mul(a[i][k], b[k][j]))))
                    .collect()
            })
            .collect()
    }

    // Cayley-Hamilton: chi(M) = 0, evaluated by Horner on matrices.
    fn satisfies_cayley_hamilton(f: &Field, m: &[Vec<Scalar>], chi: &UniPoly) -> bool {
        let n = m.len();
        let mut acc = vec![vec![Scalar::ZERO; n]; n];
        for &c in chi.coeffs().iter().rev() {
            acc = mat_mul(f, &acc, m);
            for (i, row) in acc.iter_mut().enumerate() {
                row[i] = f.add(row[i], c);
            }
        }
        acc.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }

    #[test]
    fn charpoly_random_matrices() {
        let f = fl();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 1..9 {
            let m: Vec<Vec<Scalar>> = (0..n).map(|_| (0..n).map(|_| f.random(&mut rng)).collect()).collect();
            let chi = charpoly(&f, &m);
            assert_eq!(chi.degree(), Some(n));
            assert_eq!(chi.coeffs()[n], Scalar::ONE);
            let trace = (0..n).fold(Scalar::ZERO, |a, i| f.add(a, m[i][i]));
            assert_eq!(chi.coeffs()[n - 1], f.neg(trace));
            assert!(satisfies_cayley_hamilton(&f, &m, &chi));
        }
    }

    #[test]
    fn charpoly_sparse_and_diagonal() {
        let f = fl();
        let d = |v: &[i64]| -> Vec<Vec<Scalar>> {
            (0..v.len())
                .map(|i| (0..v.len()).map(|j| if i == j { f.elem(v[i]) } else { Scalar::ZERO }).collect())
                .collect()
        };
        let chi = charpoly(&f, &d(&[2, 2, 5]));
        assert_eq!(chi.squarefree_degree(&f), 2);
        assert!(!chi.is_squarefree(&f));
        let chi = charpoly(&f, &d(&[1, 2, 3, 4]));
        assert!(chi.is_squarefree(&f));
        // nilpotent Jordan block
        let mut j = d(&[0, 0, 0]);
        j[0][1] = Scalar::ONE;
        j[1][2] = Scalar::ONE;
        let chi = charpoly(&f, &j);
        assert_eq!(chi, UniPoly::new(vec![Scalar::ZERO, Scalar::ZERO, Scalar::ZERO, Scalar::ONE]));
    }

    #[test]
    fn roots_of_split_polynomial() {
        let f = fl();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let roots = [3i64, 17, 31000];
        let mut p = UniPoly::one();
        for r in roots {
            p = p.mul(&f, &UniPoly::linear(f.elem(-r)));
        }
        // times an irreducible quadratic x^2 - nonresidue
        let nonres = (2..).map(|v| f.elem(v)).find(|&v| f.pow(v, (f.prime() as u64 - 1) / 2) != Scalar::ONE).unwrap();
        p = p.mul(&f, &UniPoly::new(vec![f.neg(nonres), Scalar::ZERO, Scalar::ONE]));
        let got = p.rational_roots(&f, &mut rng);
        assert_eq!(got, vec![f.elem(3), f.elem(17), f.elem(31000)]);
    }

    #[test]
    fn gcd_and_division() {
        let f = fl();
        let a = UniPoly::linear(f.elem(1)).mul(&f, &UniPoly::linear(f.elem(2)));
        let b = UniPoly::linear(f.elem(1)).mul(&f, &UniPoly::linear(f.elem(3)));
        assert_eq!(a.gcd(&f, &b), UniPoly::linear(f.elem(1)));
        let (q, r) = a.div_rem(&f, &UniPoly::linear(f.elem(2)));
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::linear(f.elem(1)));
    }
}
