//! Monomials and graded-lexicographic monomial bases.
//!
//! Degree-`d` monomials in `v` variables are ordered lexicographically by
//! descending exponent vector, so `x^2, xy, xz, y^2, yz, z^2` in degree 2.
//! The position of a monomial in that order is its *rank*; dense forms are
//! coefficient vectors indexed by rank.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

const TABLE_N: usize = 320;
const TABLE_K: usize = 24;

fn pascal() -> &'static Vec<[u64; TABLE_K]> {
    static TABLE: OnceLock<Vec<[u64; TABLE_K]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![[0u64; TABLE_K]; TABLE_N];
        for n in 0..TABLE_N {
            t[n][0] = 1;
            for k in 1..TABLE_K.min(n + 1) {
                t[n][k] = t[n - 1][k - 1].saturating_add(if k < n { t[n - 1][k] } else { 0 });
            }
        }
        t
    })
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    if n < TABLE_N && k < TABLE_K {
        return pascal()[n][k];
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Number of monomials of total degree `d` in `nvars` variables.
pub fn monomial_count(nvars: usize, d: usize) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    binomial(d + nvars - 1, nvars - 1) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Monomial {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn variable(nvars: usize, i: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Position in the graded-lex basis of its own degree.
    pub fn rank(&self) -> usize {
        rank_of(&self.exps)
    }
}

/// Rank of an exponent vector inside the degree-`sum(exps)` basis.
#[inline]
pub fn rank_of(exps: &[u16]) -> usize {
    let v = exps.len();
    let mut rem: usize = exps.iter().map(|&e| e as usize).sum();
    let mut rank = 0u64;
    for (i, &e) in exps.iter().enumerate().take(v.saturating_sub(1)) {
        let e = e as usize;
        let w = v - i - 1;
        if e < rem {
            // monomials with the same prefix and a larger exponent here
            rank += binomial(rem - e - 1 + w, w);
        }
        rem -= e;
    }
    rank as usize
}

/// Rank of the product of two monomials, without allocating.
#[inline]
pub fn rank_of_product(a: &[u16], b: &[u16]) -> usize {
    let v = a.len();
    let mut rem: usize = a.iter().chain(b).map(|&e| e as usize).sum();
    let mut rank = 0u64;
    for i in 0..v.saturating_sub(1) {
        let e = (a[i] + b[i]) as usize;
        let w = v - i - 1;
        if e < rem {
            rank += binomial(rem - e - 1 + w, w);
        }
        rem -= e;
    }
    rank as usize
}

fn enumerate(nvars: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(monomial_count(nvars, d));
    let mut cur = vec![0u16; nvars];
    fn rec(pos: usize, rem: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if pos + 1 == n {
            cur[pos] = rem as u16;
            out.push(Monomial { exps: cur.clone() });
            return;
        }
        for e in (0..=rem).rev() {
            cur[pos] = e as u16;
            rec(pos + 1, rem - e, cur, out);
        }
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial { exps: vec![] });
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// All monomials of degree `d` in `nvars` variables, graded-lex order.
///
/// Bases are cached process-wide.
pub fn monomial_basis(nvars: usize, d: usize) -> Arc<Vec<Monomial>> {
    type BasisCache = Mutex<HashMap<(usize, usize), Arc<Vec<Monomial>>>>;
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&(nvars, d)) {
        return Arc::clone(b);
    }
    let basis = Arc::new(enumerate(nvars, d));
    cache
        .lock()
        .unwrap()
        .entry((nvars, d))
        .or_insert_with(|| Arc::clone(&basis))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(3, 0).len(), 1);
        assert_eq!(monomial_basis(3, 2).len(), 6);
        // C(8,5) = 56
        assert_eq!(monomial_basis(6, 3).len(), 56);
        assert_eq!(binomial(8, 5), 56);
        assert_eq!(monomial_count(12, 7), 31824);
    }

    #[test]
    fn degree_two_order() {
        let b = monomial_basis(3, 2);
        let exps: Vec<&[u16]> = b.iter().map(|m| m.exponents()).collect();
        assert_eq!(
            exps,
            vec![&[2, 0, 0][..], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]
        );
    }

    #[test]
    fn rank_inverts_enumeration() {
        for (nv, d) in [(1, 4), (2, 5), (3, 7), (6, 3), (12, 3)] {
            let b = monomial_basis(nv, d);
            for (i, m) in b.iter().enumerate() {
                assert_eq!(m.rank(), i);
                assert_eq!(m.degree(), d);
            }
        }
    }

    #[test]
    fn product_rank() {
        let a = Monomial::new(vec![1, 0, 2]);
        let b = Monomial::new(vec![0, 3, 1]);
        assert_eq!(rank_of_product(a.exponents(), b.exponents()), a.mul(&b).rank());
    }

    #[test]
    fn large_binomials_fall_back() {
        assert_eq!(binomial(400, 2), 79800);
        assert_eq!(binomial(30, 29), 30);
    }
}
