//! Factorization of polynomials over GF(2^k) into monic irreducibles:
//! square-free decomposition, distinct-degree splitting, and equal-degree
//! splitting with the trace map.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finite_field::FieldElem;
use crate::linalg::poly::Poly;

/// Square-free decomposition of a monic polynomial: pairs (s_i, i) with
/// `f = prod s_i^i` and each `s_i` square-free.
pub fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    squarefree_into(&f.monic(), 1, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

fn squarefree_into(f: &Poly, mult: usize, out: &mut Vec<(Poly, usize)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let d = f.derivative();
    let mut c = f.gcd(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i * mult));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        // c is a perfect square
        let r = c.square_root().expect("remaining cofactor is a square");
        squarefree_into(&r, 2 * mult, out);
    }
}

/// Splits a square-free monic polynomial into products of irreducibles of
/// equal degree: pairs (g_d, d).
pub fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    let q = field.q() as u64;
    let x = Poly::x(&field);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &rest);
        let g = h.add(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let dr = rest.degree().unwrap();
        out.push((rest, dr));
    }
    out
}

/// Splits a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Poly>) {
    let n = f.degree().expect("nonzero");
    if n == d {
        out.push(f.monic());
        return;
    }
    let field = f.field().clone();
    // trace from GF(q^d) to GF(2): sum of a^(2^j), j < k*d
    let steps = field.k() as usize * d;
    loop {
        let coeffs: Vec<FieldElem> = (0..n)
            .map(|_| FieldElem(rng.gen_range(0..field.q()) as u16))
            .collect();
        let a = Poly::new(&field, coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut t = a.clone();
        let mut acc = a;
        for _ in 1..steps {
            t = t.mul(&t).rem(f);
            acc = acc.add(&t);
        }
        let g = acc.gcd(f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.div_exact(&g);
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
pub fn factor(f: &Poly) -> Vec<(Poly, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (s, mult) in squarefree(f) {
        for (g, d) in distinct_degree(&s) {
            let mut parts = Vec::new();
            equal_degree(&g, d, &mut rng, &mut parts);
            out.extend(parts.into_iter().map(|p| (p, mult)));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.to_u32().cmp(&b.0.to_u32()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_field::Field;

    fn product(field: &crate::finite_field::Field, fs: &[(Poly, usize)]) -> Poly {
        fs.iter()
            .fold(Poly::one(field), |acc, (p, m)| acc.mul(&p.pow(*m as u64)))
    }

    #[test]
    fn factors_x3_plus_1_over_gf2_and_gf4() {
        let f2 = Field::new(1).unwrap();
        let fs = factor(&Poly::x_pow_plus_one(&f2, 3));
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0.to_u32(), vec![1, 1]);
        assert_eq!(fs[1].0.to_u32(), vec![1, 1, 1]);
        let f4 = Field::new(2).unwrap();
        let fs = factor(&Poly::x_pow_plus_one(&f4, 3));
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(p, m)| p.degree() == Some(1) && *m == 1));
    }

    #[test]
    fn repeated_factors() {
        let f = Field::new(3).unwrap();
        let a = Poly::from_u32(&f, &[3, 1]);
        let b = Poly::from_u32(&f, &[1, 1, 1]);
        let c = Poly::from_u32(&f, &[5, 0, 1]);
        let p = a.pow(4).mul(&b.pow(3)).mul(&c);
        let fs = factor(&p);
        assert_eq!(product(&f, &fs), p.monic());
        let total: usize = fs.iter().map(|(q, m)| q.degree().unwrap() * m).sum();
        assert_eq!(total, p.degree().unwrap());
    }

    #[test]
    fn x15_plus_1_over_gf2() {
        let f = Field::new(1).unwrap();
        let fs = factor(&Poly::x_pow_plus_one(&f, 15));
        let degs: Vec<usize> = fs.iter().map(|(p, _)| p.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 2, 4, 4, 4]);
    }
}
