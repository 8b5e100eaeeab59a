//! Dense univariate polynomials in the lattice parameter `k` with
//! arbitrary-precision rational coefficients.
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical: the vector is empty for the zero polynomial and the last
//! element is nonzero otherwise.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Render a rational as `n` or `n/d`.
pub fn rat_string(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KPoly {
    coeffs: Vec<Rat>,
}

impl KPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn zero() -> Self {
        KPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        KPoly::new(vec![c])
    }

    /// The variable `k` itself.
    pub fn k() -> Self {
        KPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c * k^d`
    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut v = vec![Rat::zero(); d + 1];
        v[d] = c;
        KPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return KPoly::zero();
        }
        KPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = KPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder over the rational field.
    pub fn divrem(&self, d: &KPoly) -> (KPoly, KPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = Rat::one() / d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let c = rem.last().unwrap() * &lead_inv;
            let shift = rem.len() - 1 - dd;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[shift + i] = &rem[shift + i] - t;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (KPoly::new(quot), KPoly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &KPoly) -> KPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Write `self = factor * primitive` with `primitive` having coprime
    /// integer coefficients and positive leading coefficient.
    pub fn int_normalize(&self) -> (Rat, Vec<BigInt>) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num::integer::lcm(den_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num::integer::gcd(content, c.clone());
        }
        if ints.last().unwrap().sign() == Sign::Minus {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (Rat::new(content, den_lcm), prim)
    }

    /// The primitive integer-coefficient associate (positive leading coeff).
    pub fn primitive_part(&self) -> KPoly {
        let (_, prim) = self.int_normalize();
        KPoly::new(prim.into_iter().map(Rat::from_integer).collect())
    }

    /// Polynomial gcd by the subresultant pseudo-remainder sequence,
    /// returned primitive with positive leading coefficient.
    pub fn gcd(&self, other: &KPoly) -> KPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (_, a) = self.int_normalize();
        let (_, b) = other.int_normalize();
        let g = int_poly_gcd(a, b);
        KPoly::new(g.into_iter().map(Rat::from_integer).collect())
    }
}

fn deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn int_primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let p = trim(p);
    if p.is_empty() {
        return p;
    }
    let mut content = BigInt::zero();
    for c in &p {
        content = num::integer::gcd(content, c.clone());
    }
    if p.last().unwrap().sign() == Sign::Minus {
        content = -content;
    }
    p.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, with the full
/// classical power of the leading coefficient (required for the exactness
/// of the subresultant divisions).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = trim(a.to_vec());
    let db = deg(b);
    let lb = b.last().unwrap().clone();
    let mut remaining = (deg(&r) + 1).saturating_sub(db);
    while !r.is_empty() && deg(&r) >= db {
        let lr = r.last().unwrap().clone();
        let shift = deg(&r) - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        remaining -= 1;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - bc * &lr;
        }
        r = trim(r);
    }
    for _ in 0..remaining {
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
    }
    r
}

fn int_poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = deg(&a) - deg(&b);
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return int_primitive(b);
        }
        if deg(&r) == 0 {
            return vec![BigInt::one()];
        }
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = trim(
            r.into_iter()
                .map(|c| {
                    debug_assert!((&c % &divisor).is_zero(), "subresultant division");
                    c / &divisor
                })
                .collect(),
        );
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta as u32);
            let den = h.pow((delta - 1) as u32);
            num / den
        };
    }
}

impl Add for &KPoly {
    type Output = KPoly;
    fn add(self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = Rat::zero();
            if let Some(a) = self.coeffs.get(i) {
                c += a;
            }
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            v.push(c);
        }
        KPoly::new(v)
    }
}

impl Sub for &KPoly {
    type Output = KPoly;
    fn sub(self, rhs: &KPoly) -> KPoly {
        self + &(-rhs)
    }
}

impl Neg for &KPoly {
    type Output = KPoly;
    fn neg(self) -> KPoly {
        KPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &KPoly) -> KPoly {
        if self.is_zero() || rhs.is_zero() {
            return KPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + a * b;
            }
        }
        KPoly::new(v)
    }
}

impl fmt::Display for KPoly {
    /// Canonical form `c_d*k^d + ... + c_0`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match d {
                0 => write!(f, "{}", rat_string(&a))?,
                1 if a.is_one() => write!(f, "k")?,
                1 => write!(f, "{}*k", rat_string(&a))?,
                _ if a.is_one() => write!(f, "k^{}", d)?,
                _ => write!(f, "{}*k^{}", rat_string(&a), d)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> KPoly {
        KPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[9, -40, 16]); // 16k^2 - 40k + 9
        let b = p(&[-1, 4]); // 4k - 1
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[-9, 4])); // 4k - 9
    }

    #[test]
    fn gcd_common_factor() {
        // gcd((4k-1)(4k-9), (4k-9)) = 4k - 9
        let a = &p(&[-1, 4]) * &p(&[-9, 4]);
        let b = p(&[-9, 4]);
        assert_eq!(a.gcd(&b), p(&[-9, 4]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = p(&[1, 0, 1]);
        let b = p(&[3, 1]);
        assert_eq!(a.gcd(&b), KPoly::one());
    }

    #[test]
    fn gcd_high_degree() {
        let f = p(&[2, 3, 0, 1]);
        let g = p(&[-5, 7, 11]);
        let h = p(&[1, 0, 0, 2, 4]);
        let fg = &f * &g;
        let fh = &f * &h;
        let d = fg.gcd(&fh);
        assert!(fg.divrem(&d).1.is_zero());
        assert!(fh.divrem(&d).1.is_zero());
        assert_eq!(d, f.primitive_part());
    }

    #[test]
    fn display_canonical() {
        let a = p(&[-18, -16, 64]);
        assert_eq!(a.to_string(), "64*k^2 - 16*k - 18");
        assert_eq!(KPoly::zero().to_string(), "0");
        assert_eq!(KPoly::k().to_string(), "k");
        assert_eq!(p(&[0, -1]).to_string(), "-k");
    }

    #[test]
    fn eval_horner() {
        let a = p(&[9, -40, 16]);
        assert_eq!(a.eval(&rat(3)), rat(33)); // (4*3-1)(4*3-9) = 11*3
        assert_eq!(a.eval(&ratio(1, 4)), rat(0));
        assert_eq!(a.eval(&ratio(9, 4)), rat(0));
    }
}
