use std::fmt;

use crate::finite_field::{Field, FieldElem};
use crate::linalg::matrix::Matrix;

/// Dense univariate polynomial over GF(2^k), ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
    field: Field,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c.0 == 1 && i > 0 {
                String::new()
            } else {
                c.0.to_string()
            };
            let sep = if coeff.is_empty() || i == 0 { "" } else { "*" };
            match i {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}{sep}x")?,
                _ => write!(f, "{coeff}{sep}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            field: field.clone(),
        }
    }

    pub fn from_u32(field: &Field, coeffs: &[u32]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| FieldElem(c as u16)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![FieldElem::ONE])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![FieldElem::ZERO, FieldElem::ONE])
    }

    pub fn constant(field: &Field, c: FieldElem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// x^n + 1 (= x^n - 1 in characteristic 2).
    pub fn x_pow_plus_one(field: &Field, n: usize) -> Poly {
        let mut c = vec![FieldElem::ZERO; n + 1];
        c[0] = FieldElem::ONE;
        c[n].0 ^= 1;
        Poly::new(field, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn to_u32(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0 as u32).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElem::ONE
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn lead(&self) -> FieldElem {
        self.coeffs.last().copied().unwrap_or(FieldElem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == FieldElem::ONE
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv_nz(self.lead()))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(&self.field, c)
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        let mut v = self.coeffs.clone();
        self.field.scale(&mut v, c);
        Poly::new(&self.field, v)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![FieldElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            self.field
                .axpy(&mut out[i..i + other.coeffs.len()], a, &other.coeffs);
        }
        Poly::new(&self.field, out)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let f = &self.field;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let inv = f.inv_nz(d.lead());
        let mut q = vec![FieldElem::ZERO; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = r[i];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, inv);
            q[i - dd] = t;
            f.axpy(&mut r[i - dd..=i], t, &d.coeffs);
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact division; panics if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        // d/dx x^i = i x^(i-1), and i vanishes mod 2 for even i
        let c = (1..self.coeffs.len())
            .map(|i| {
                if i % 2 == 1 {
                    self.coeffs[i]
                } else {
                    FieldElem::ZERO
                }
            })
            .collect();
        Poly::new(&self.field, c)
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add(self.field.mul(acc, x), c);
        }
        acc
    }

    /// base^e mod m.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// p(A) for a square matrix A (Horner).
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(&self.field, n, n);
        let id = Matrix::identity(&self.field, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(a);
            acc.add_scaled(c, &id);
        }
        acc
    }

    /// Returns `g` with `g^2 = self` when one exists.
    ///
    /// Squaring in characteristic 2 sends sum a_i x^i to sum a_i^2 x^(2i), and
    /// every element of a finite field of characteristic 2 has a square root,
    /// so `self` is a square exactly when its odd-degree coefficients vanish.
    pub fn square_root(&self) -> Option<Poly> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        let c = self
            .coeffs
            .iter()
            .step_by(2)
            .map(|&a| self.field.sqrt(a))
            .collect();
        Some(Poly::new(&self.field, c))
    }
}

/// Whether `c` is the square of a polynomial, with the witness when it is.
pub fn is_square_poly(c: &Poly) -> (bool, Option<Poly>) {
    match c.square_root() {
        Some(g) => (true, Some(g)),
        None => (false, None),
    }
}
