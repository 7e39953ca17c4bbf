//! Dense homogeneous forms over `F_p`.

use std::fmt;

use rand::Rng;

use super::field::{Field, Scalar};
use super::monomial::{monomial_basis, monomial_count, rank_of_product, Monomial};
use crate::error::{Error, Result};

/// A degree-`d` form stored as coefficients over the graded-lex degree-`d`
/// monomial basis. The zero form keeps its nominal degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousForm {
    field: Field,
    nvars: usize,
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl HomogeneousForm {
    pub fn zero(field: Field, nvars: usize, degree: usize) -> Self {
        HomogeneousForm {
            field,
            nvars,
            degree,
            coeffs: vec![Scalar::ZERO; monomial_count(nvars, degree)],
        }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Self {
        HomogeneousForm { field, nvars, degree: 0, coeffs: vec![c] }
    }

    pub fn from_coeffs(field: Field, nvars: usize, degree: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != monomial_count(nvars, degree) {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients for degree {degree} in {nvars} variables, got {}",
                monomial_count(nvars, degree),
                coeffs.len()
            )));
        }
        Ok(HomogeneousForm { field, nvars, degree, coeffs })
    }

    /// Builds a form from `(coefficient, exponents)` pairs; all exponents
    /// must share one total degree.
    pub fn from_terms(field: Field, nvars: usize, terms: &[(i64, &[u16])]) -> Result<Self> {
        let degree = match terms.first() {
            Some((_, e)) => e.iter().map(|&x| x as usize).sum(),
            None => 0,
        };
        let mut f = HomogeneousForm::zero(field, nvars, degree);
        for (c, e) in terms {
            let m = Monomial::new(e.to_vec());
            if m.nvars() != nvars || m.degree() != degree {
                return Err(Error::InvalidArgument(format!("term {e:?} is not a degree-{degree} monomial")));
            }
            let r = m.rank();
            f.coeffs[r] = field.add(f.coeffs[r], field.elem(*c));
        }
        Ok(f)
    }

    pub fn monomial(field: Field, m: &Monomial) -> Self {
        let mut f = HomogeneousForm::zero(field, m.nvars(), m.degree());
        f.coeffs[m.rank()] = Scalar::ONE;
        f
    }

    pub fn variable(field: Field, nvars: usize, i: usize) -> Self {
        HomogeneousForm::monomial(field, &Monomial::variable(nvars, i))
    }

    /// Uniformly random coefficients.
    pub fn random<R: Rng + ?Sized>(field: Field, nvars: usize, degree: usize, rng: &mut R) -> Self {
        let coeffs = (0..monomial_count(nvars, degree)).map(|_| field.random(rng)).collect();
        HomogeneousForm { field, nvars, degree, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.coeffs[m.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero terms as `(rank, coefficient)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| (i, c))
    }

    /// Nonzero terms as `(monomial, coefficient)`.
    pub fn terms(&self) -> Vec<(Monomial, Scalar)> {
        let basis = monomial_basis(self.nvars, self.degree);
        self.support().map(|(i, c)| (basis[i].clone(), c)).collect()
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.field, other.field, "forms over different fields");
        assert_eq!(self.nvars, other.nvars, "forms in different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let f = self.field;
        HomogeneousForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compatible(other);
        assert_eq!(self.degree, other.degree, "subtracting forms of different degree");
        let f = self.field;
        HomogeneousForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.sub(a, b)).collect(),
            ..self.clone()
        }
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        HomogeneousForm { coeffs: self.coeffs.iter().map(|&a| f.neg(a)).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let f = self.field;
        HomogeneousForm { coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let f = self.field;
        let mut out = HomogeneousForm::zero(f, self.nvars, self.degree + other.degree);
        let ba = monomial_basis(self.nvars, self.degree);
        let bb = monomial_basis(other.nvars, other.degree);
        let rhs: Vec<(usize, Scalar)> = other.support().collect();
        for (i, a) in self.support() {
            let ea = ba[i].exponents();
            for &(j, b) in &rhs {
                let r = rank_of_product(ea, bb[j].exponents());
                out.coeffs[r] = f.add(out.coeffs[r], f.mul(a, b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let f = self.field;
        let mut out = HomogeneousForm::zero(f, self.nvars, self.degree + m.degree());
        let ba = monomial_basis(self.nvars, self.degree);
        for (i, a) in self.support() {
            out.coeffs[rank_of_product(ba[i].exponents(), m.exponents())] = a;
        }
        out
    }

    /// Value at a point given by its coordinates.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "point has wrong number of coordinates");
        let f = self.field;
        let basis = monomial_basis(self.nvars, self.degree);
        let mut acc = Scalar::ZERO;
        for (i, c) in self.support() {
            let mut v = c;
            for (&x, &e) in point.iter().zip(basis[i].exponents()) {
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Self {
        assert!(self.degree >= 1, "derivative of a constant form");
        let f = self.field;
        let mut out = HomogeneousForm::zero(f, self.nvars, self.degree - 1);
        let basis = monomial_basis(self.nvars, self.degree);
        for (i, c) in self.support() {
            let e = basis[i].exponents();
            if e[var] == 0 {
                continue;
            }
            let mut ex = e.to_vec();
            ex[var] -= 1;
            let r = super::monomial::rank_of(&ex);
            out.coeffs[r] = f.add(out.coeffs[r], f.mul(c, f.elem(e[var] as i64)));
        }
        out
    }

    /// All first partials, in variable order.
    pub fn partials(&self) -> Vec<Self> {
        (0..self.nvars).map(|v| self.partial(v)).collect()
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        let terms = self.terms();
        if terms.is_empty() {
            return write!(fm, "0");
        }
        for (t, (m, c)) in terms.iter().enumerate() {
            if t > 0 {
                write!(fm, " + ")?;
            }
            let mut parts = Vec::new();
            if c.value() != 1 || m.degree() == 0 {
                parts.push(c.value().to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                let name = if self.nvars <= 3 { NAMES[v].to_string() } else { format!("x{v}") };
                match e {
                    0 => {}
                    1 => parts.push(name),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(fm, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
