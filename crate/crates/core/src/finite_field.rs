//! Arithmetic in GF(2^k) and the number-theoretic classification of odd
//! integers relative to a field size `q` (orders mod n, 2-adic valuations,
//! the `omega` function and the `pi_i(q)` classes).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Conway polynomials over GF(2) for k = 1..=16, bit i = coefficient of x^i.
const CONWAY: [u32; 16] = [
    0b11,                // x + 1
    0b111,               // x^2 + x + 1
    0b1011,              // x^3 + x + 1
    0b10011,             // x^4 + x + 1
    0b100101,            // x^5 + x^2 + 1
    0b1011011,           // x^6 + x^4 + x^3 + x + 1
    0b10000011,          // x^7 + x + 1
    0b100011101,         // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,        // x^9 + x^4 + 1
    0b10001101111,       // x^10 + x^6 + x^5 + x^3 + x^2 + x + 1
    0b100000000101,      // x^11 + x^2 + 1
    0b1000011101011,     // x^12 + x^7 + x^6 + x^5 + x^3 + x + 1
    0b10000000011011,    // x^13 + x^4 + x^3 + x + 1
    0b100000010101001,   // x^14 + x^7 + x^5 + x^3 + 1
    0b1000000000110101,  // x^15 + x^5 + x^4 + x^2 + 1
    0b10000000000101101, // x^16 + x^5 + x^3 + x^2 + 1
];

/// An element of GF(2^k): bit i is the coefficient of x^i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(pub u16);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldInner {
    k: u32,
    modulus: u32,
    q: u32,
    exp: Vec<u16>,
    log: Vec<u32>,
}

/// The field GF(2^k) with its fixed Conway modulus. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.k == other.0.k
    }
}
impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.k.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.0.k)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.0.k)
    }
}

/// Carry-less multiply of two GF(2) polynomials packed in integers.
fn clmul(a: u32, b: u32) -> u64 {
    let mut r = 0u64;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= (a as u64) << i;
        }
        b >>= 1;
        i += 1;
    }
    r
}

fn gf2_reduce(mut a: u64, modulus: u32) -> u32 {
    let deg = 31 - modulus.leading_zeros();
    while a >> deg != 0 {
        let top = 63 - a.leading_zeros();
        a ^= (modulus as u64) << (top - deg);
    }
    a as u32
}

fn gf2_mulmod(a: u32, b: u32, modulus: u32) -> u32 {
    gf2_reduce(clmul(a, b), modulus)
}

fn gf2_powmod(mut base: u32, mut e: u64, modulus: u32) -> u32 {
    let mut r = 1u32;
    base = gf2_reduce(base as u64, modulus);
    while e > 0 {
        if e & 1 == 1 {
            r = gf2_mulmod(r, base, modulus);
        }
        base = gf2_mulmod(base, base, modulus);
        e >>= 1;
    }
    r
}

fn gf2_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let db = 63 - b.leading_zeros();
        while a != 0 && 63 - a.leading_zeros() >= db {
            let da = 63 - a.leading_zeros();
            a ^= b << (da - db);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin irreducibility test for a GF(2) polynomial of degree k.
fn gf2_is_irreducible(modulus: u32, k: u32) -> bool {
    if k == 1 {
        return true;
    }
    // x^(2^k) == x mod f
    let x = 0b10u32;
    let mut t = x;
    for _ in 0..k {
        t = gf2_mulmod(t, t, modulus);
    }
    if t != gf2_reduce(x as u64, modulus) {
        return false;
    }
    for p in prime_factors(k as u64) {
        let mut t = x;
        for _ in 0..(k as u64 / p) {
            t = gf2_mulmod(t, t, modulus);
        }
        if gf2_gcd(modulus as u64, (t ^ x) as u64) != 1 {
            return false;
        }
    }
    true
}

fn gf2_is_primitive(modulus: u32, k: u32) -> bool {
    let order = (1u64 << k) - 1;
    if gf2_powmod(0b10, order, modulus) != 1 {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|p| gf2_powmod(0b10, order / p, modulus) != 1)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Field {
    /// GF(2^k) with the built-in Conway modulus, verified on construction.
    pub fn new(k: u32) -> Result<Field> {
        if !(1..=16).contains(&k) {
            return Err(Error::UnsupportedDegree(k));
        }
        Self::with_modulus(k, CONWAY[k as usize - 1])
    }

    fn with_modulus(k: u32, modulus: u32) -> Result<Field> {
        if 31 - modulus.leading_zeros() != k
            || !gf2_is_irreducible(modulus, k)
            || !gf2_is_primitive(modulus, k)
        {
            return Err(Error::InternalModulusError(k));
        }
        let q = 1u32 << k;
        let n = (q - 1) as usize;
        let mut exp = vec![0u16; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let gen = if k == 1 { 1 } else { 0b10 };
        let mut cur = 1u32;
        for i in 0..n {
            exp[i] = cur as u16;
            log[cur as usize] = i as u32;
            cur = gf2_mulmod(cur, gen, modulus);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        Ok(Field(Arc::new(FieldInner {
            k,
            modulus,
            q,
            exp,
            log,
        })))
    }

    /// Parses "GF(2^k)", "GF(q)" or a bare integer q.
    pub fn parse(name: &str) -> Result<Field> {
        let s = name.trim();
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let q: u64 = if let Some(e) = inner.strip_prefix("2^") {
            let e: u32 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad field name {name:?}")))?;
            if e > 16 {
                return Err(Error::UnsupportedDegree(e));
            }
            1u64 << e
        } else {
            inner
                .parse()
                .map_err(|_| Error::Parse(format!("bad field name {name:?}")))?
        };
        Self::from_order(q)
    }

    /// The field with `q` elements; `q` must be a power of two.
    pub fn from_order(q: u64) -> Result<Field> {
        if q < 2 || !q.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "field order {q} is not a power of 2"
            )));
        }
        Field::new(q.trailing_zeros())
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> u32 {
        self.0.modulus
    }

    pub fn name(&self) -> String {
        format!("GF(2^{})", self.0.k)
    }

    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if bits >= self.0.q {
            return Err(Error::InvalidArgument(format!(
                "{bits} is not an element of {}",
                self.name()
            )));
        }
        Ok(FieldElem(bits as u16))
    }

    /// All field elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.0.q).map(|b| FieldElem(b as u16))
    }

    /// A generator of the multiplicative group (the residue class of x).
    pub fn primitive(&self) -> FieldElem {
        FieldElem(self.0.exp[if self.0.q > 2 { 1 } else { 0 }])
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let inner = &*self.0;
        FieldElem(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let n = inner.q - 1;
        Ok(FieldElem(
            inner.exp[((n - inner.log[a.0 as usize]) % n) as usize],
        ))
    }

    /// Inverse of a known nonzero element.
    #[inline]
    pub(crate) fn inv_nz(&self, a: FieldElem) -> FieldElem {
        debug_assert!(!a.is_zero());
        let inner = &*self.0;
        let n = inner.q - 1;
        FieldElem(inner.exp[((n - inner.log[a.0 as usize]) % n) as usize])
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        let inner = &*self.0;
        let n = (inner.q - 1) as u64;
        let l = (inner.log[a.0 as usize] as u64 * (e % n)) % n;
        FieldElem(inner.exp[l as usize])
    }

    #[inline]
    pub fn square(&self, a: FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    /// The unique square root: a^(2^(k-1)), the inverse of Frobenius.
    pub fn sqrt(&self, a: FieldElem) -> FieldElem {
        let mut b = a;
        for _ in 0..self.0.k - 1 {
            b = self.square(b);
        }
        b
    }

    /// dst += c * src, elementwise.
    #[inline]
    pub fn axpy(&self, dst: &mut [FieldElem], c: FieldElem, src: &[FieldElem]) {
        if c.is_zero() {
            return;
        }
        let inner = &*self.0;
        if inner.q == 2 {
            for (d, s) in dst.iter_mut().zip(src) {
                d.0 ^= s.0;
            }
            return;
        }
        let lc = inner.log[c.0 as usize];
        for (d, s) in dst.iter_mut().zip(src) {
            if s.0 != 0 {
                d.0 ^= inner.exp[(lc + inner.log[s.0 as usize]) as usize];
            }
        }
    }

    /// v *= c, elementwise.
    #[inline]
    pub fn scale(&self, v: &mut [FieldElem], c: FieldElem) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Sum of a_i * b_i.
    #[inline]
    pub fn dot(&self, a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
        let mut acc = 0u16;
        for (x, y) in a.iter().zip(b) {
            acc ^= self.mul(*x, *y).0;
        }
        FieldElem(acc)
    }

    /// Reference multiplication by shift-and-reduce, independent of the tables.
    pub fn mul_slow(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(gf2_mulmod(a.0 as u32, b.0 as u32, self.0.modulus) as u16)
    }
}

/// Least e >= 1 with q^e = 1 (mod n), for odd n coprime to q.
pub fn ord_mod(n: u64, q: u64) -> Result<u64> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "{n} is not a positive odd integer"
        )));
    }
    if gcd(n, q) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({n}, {q}) != 1")));
    }
    if n == 1 {
        return Ok(1);
    }
    let qm = q % n;
    let mut x = qm;
    let mut e = 1;
    while x != 1 {
        x = ((x as u128 * qm as u128) % n as u128) as u64;
        e += 1;
    }
    Ok(e)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// 2-adic valuation of n >= 1.
pub fn nu2(n: u64) -> u32 {
    assert!(n >= 1, "nu2 of zero");
    n.trailing_zeros()
}

/// nu2(ord_n(q)).
pub fn omega_q(n: u64, q: u64) -> Result<u32> {
    Ok(nu2(ord_mod(n, q)?))
}

/// Which pi_i(q) class an odd integer belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiClass {
    /// m = 1, a pi_i(q)-number for every i.
    All,
    /// Every prime divisor lies in pi_i(q).
    Index(u32),
    /// Prime divisors in different classes.
    Mixed,
}

impl PiClass {
    /// True if m is a pi_i(q)-number for some i >= 1.
    pub fn is_positive_index(self) -> bool {
        matches!(self, PiClass::All | PiClass::Index(1..))
    }
}

pub fn pi_number_index(m: u64, q: u64) -> Result<PiClass> {
    if m == 0 || m % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "{m} is not a positive odd integer"
        )));
    }
    if gcd(m, q) != 1 {
        return Err(Error::InvalidArgument(format!("gcd({m}, {q}) != 1")));
    }
    if m == 1 {
        return Ok(PiClass::All);
    }
    let mut idx = None;
    for p in prime_factors(m) {
        let w = omega_q(p, q)?;
        match idx {
            None => idx = Some(w),
            Some(i) if i != w => return Ok(PiClass::Mixed),
            _ => {}
        }
    }
    Ok(PiClass::Index(idx.expect("m > 1 has a prime divisor")))
}
