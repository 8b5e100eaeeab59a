//! Exact scalars: rational numbers for computations at a fixed lattice
//! parameter, and reduced rational functions of `k` for symbolic ones.
//!
//! A computation context fixes one of the two modes; arithmetic between the
//! modes is a programming error and panics.

use crate::poly::{rat, rat_string, KPoly, Rat};
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A reduced rational function in `k`.
///
/// Invariants: the two polynomials have no nonconstant common factor; after
/// clearing denominators both are integer polynomials with coprime contents;
/// the denominator has positive leading coefficient; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFn {
    num: KPoly,
    den: KPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    /// The denominator vanishes at the requested evaluation point.
    Pole(String),
    NotSymbolic,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::Pole(at) => write!(f, "denominator vanishes at k = {}", at),
            ScalarError::NotSymbolic => write!(f, "scalar is not in symbolic mode"),
        }
    }
}

impl std::error::Error for ScalarError {}

impl RatFn {
    /// Canonicalize `num/den`: cancel the polynomial gcd, clear coefficient
    /// denominators, cancel the integer content, and give the denominator a
    /// positive leading coefficient.
    pub fn reduce(num: KPoly, den: KPoly) -> Result<RatFn, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFn {
                num: KPoly::zero(),
                den: KPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let (fn_, np) = num.int_normalize();
        let (fd, dp) = den.int_normalize();
        // num/den = (fn_/fd) * np/dp with np, dp primitive and dp positive-lead
        let q = fn_ / fd;
        let num = KPoly::new(np.into_iter().map(Rat::from_integer).collect())
            .scale(&Rat::from_integer(q.numer().clone()));
        let den = KPoly::new(dp.into_iter().map(Rat::from_integer).collect())
            .scale(&Rat::from_integer(q.denom().clone()));
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: KPoly) -> RatFn {
        RatFn {
            num: p,
            den: KPoly::one(),
        }
    }

    pub fn from_rat(q: Rat) -> RatFn {
        RatFn::from_poly(KPoly::constant(q))
    }

    pub fn zero() -> RatFn {
        RatFn::from_poly(KPoly::zero())
    }

    pub fn one() -> RatFn {
        RatFn::from_poly(KPoly::one())
    }

    pub fn k() -> RatFn {
        RatFn::from_poly(KPoly::k())
    }

    pub fn numerator(&self) -> &KPoly {
        &self.num
    }

    pub fn denominator(&self) -> &KPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<RatFn, ScalarError> {
        RatFn::reduce(self.den.clone(), self.num.clone())
    }

    /// Exact substitution of a rational value for `k`.
    pub fn evaluate(&self, k_value: &Rat) -> Result<Rat, ScalarError> {
        let d = self.den.eval(k_value);
        if d.is_zero() {
            return Err(ScalarError::Pole(rat_string(k_value)));
        }
        Ok(self.num.eval(k_value) / d)
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFn::reduce(num, den).unwrap()
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::reduce(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        assert!(!rhs.is_zero(), "rational function division by zero");
        RatFn::reduce(&self.num * &rhs.den, &self.den * &rhs.num).unwrap()
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl KPoly {
    fn is_one_poly(&self) -> bool {
        self.as_constant().map_or(false, |c| c.is_one())
    }
}

/// An exact scalar in one of the two computation modes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Q(Rat),
    F(RatFn),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::F(r) => r.is_zero(),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "scalar division by zero");
                Scalar::Q(Rat::one() / q)
            }
            Scalar::F(r) => Scalar::F(r.inv().expect("scalar division by zero")),
        }
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::F(_) => None,
        }
    }

    pub fn as_ratfn(&self) -> Option<&RatFn> {
        match self {
            Scalar::F(r) => Some(r),
            Scalar::Q(_) => None,
        }
    }

    /// Substitute a fixed `k` into a symbolic scalar.
    pub fn evaluate(&self, k_value: &Rat) -> Result<Rat, ScalarError> {
        match self {
            Scalar::F(r) => r.evaluate(k_value),
            Scalar::Q(_) => Err(ScalarError::NotSymbolic),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            // sign of the leading behaviour; only used for display choices
            Scalar::F(r) => r.numerator().leading().is_negative(),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $m:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a $op b),
                    (Scalar::F(a), Scalar::F(b)) => Scalar::F(a $op b),
                    _ => panic!("mixed fixed-k and symbolic scalars in one computation"),
                }
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::F(r) => Scalar::F(-r),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{}", rat_string(q)),
            Scalar::F(r) => write!(f, "{}", r),
        }
    }
}

/// The lattice parameter: `<alpha, alpha> = 2k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KParam {
    Fixed(u32),
    Symbolic,
}

/// Rank-one lattice configuration fixing the scalar mode.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LatticeConfig {
    pub k: KParam,
}

impl LatticeConfig {
    pub fn fixed(k: u32) -> LatticeConfig {
        assert!(k >= 1, "lattice parameter must be a positive integer");
        LatticeConfig {
            k: KParam::Fixed(k),
        }
    }

    pub fn symbolic() -> LatticeConfig {
        LatticeConfig {
            k: KParam::Symbolic,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.k, KParam::Symbolic)
    }

    pub fn fixed_k(&self) -> Option<u32> {
        match self.k {
            KParam::Fixed(k) => Some(k),
            KParam::Symbolic => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.k {
            KParam::Fixed(_) => Scalar::Q(Rat::zero()),
            KParam::Symbolic => Scalar::F(RatFn::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(&self, q: Rat) -> Scalar {
        match self.k {
            KParam::Fixed(_) => Scalar::Q(q),
            KParam::Symbolic => Scalar::F(RatFn::from_rat(q)),
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rat(rat(n))
    }

    /// The scalar value of `k` in this mode.
    pub fn k_scalar(&self) -> Scalar {
        match self.k {
            KParam::Fixed(k) => Scalar::Q(rat(k as i64)),
            KParam::Symbolic => Scalar::F(RatFn::k()),
        }
    }

    /// `2k * c` for an integer `c`; the ubiquitous commutator factor.
    pub fn two_k(&self, c: i64) -> Scalar {
        &self.k_scalar() * &self.from_int(2 * c)
    }
}

// ---- parsing of scalar expressions (used for reference/golden data) ----

/// Parse an exact scalar expression in `k`: integers, `+ - * / ^` and
/// parentheses, e.g. `-(16*k^2 - 40*k + 9)/(16*k^2)`.
pub fn parse_ratfn(text: &str) -> Result<RatFn, String> {
    let mut p = RfParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(format!("unexpected trailing input at byte {}", p.pos));
    }
    Ok(v)
}

struct RfParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> RfParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFn, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFn, String> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if d.is_zero() {
                        return Err("division by zero".into());
                    }
                    acc = &acc / &d;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFn, String> {
        let base = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                return Ok(-&self.factor()?);
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(format!("expected ')' at byte {}", self.pos));
                }
                self.pos += 1;
                v
            }
            Some(b'k') => {
                self.pos += 1;
                RatFn::k()
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let n: num::BigInt = s.parse().map_err(|e| format!("bad integer: {}", e))?;
                RatFn::from_rat(Rat::from_integer(n))
            }
            other => {
                return Err(format!(
                    "unexpected input {:?} at byte {}",
                    other.map(|c| c as char),
                    self.pos
                ))
            }
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let e: u32 = std::str::from_utf8(&self.bytes[start..self.pos])
                        .unwrap()
                        .parse()
                        .map_err(|e| format!("bad exponent: {}", e))?;
                    let num = base.numerator().pow(e);
                    let den = base.denominator().pow(e);
                    return RatFn::reduce(num, den).map_err(|e| e.to_string());
                }
                _ => return Err(format!("expected exponent at byte {}", self.pos)),
            }
        }
        Ok(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> KPoly {
        KPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn reduce_common_factor() {
        // (2k, 4k^2) -> 1/(2k)
        let r = RatFn::reduce(p(&[0, 2]), p(&[0, 0, 4])).unwrap();
        assert_eq!(r.to_string(), "(1)/(2*k)");
        // zero numerator
        let z = RatFn::reduce(KPoly::zero(), p(&[9, -40, 16])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denominator(), &KPoly::one());
        // ((4k-1)(4k-9), (4k-9)) -> 4k-1
        let r = RatFn::reduce(&p(&[-1, 4]) * &p(&[-9, 4]), p(&[-9, 4])).unwrap();
        assert_eq!(r, RatFn::from_poly(p(&[-1, 4])));
    }

    #[test]
    fn reduce_zero_denominator() {
        assert_eq!(
            RatFn::reduce(p(&[1]), KPoly::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn reduce_idempotent_and_mul_invariant() {
        let a = RatFn::reduce(p(&[3, 5]), p(&[0, 0, 7])).unwrap();
        let again = RatFn::reduce(a.numerator().clone(), a.denominator().clone()).unwrap();
        assert_eq!(a, again);
        // reduce(a*c, b*c) = reduce(a, b)
        let c = p(&[-2, 0, 3]);
        let scaled = RatFn::reduce(&p(&[3, 5]) * &c, &p(&[0, 0, 7]) * &c).unwrap();
        assert_eq!(a, scaled);
    }

    #[test]
    fn evaluate_beta_at_3() {
        // beta = (64k^2 - 16k - 18)/((4k-1)(4k-9)) -> 170/11 at k = 3
        let beta = RatFn::reduce(p(&[-18, -16, 64]), &p(&[-1, 4]) * &p(&[-9, 4])).unwrap();
        assert_eq!(beta.evaluate(&rat(3)).unwrap(), ratio(510, 33));
        assert_eq!(beta.evaluate(&rat(3)).unwrap(), ratio(170, 11));
    }

    #[test]
    fn evaluate_identity_and_root() {
        assert_eq!(RatFn::k().evaluate(&rat(5)).unwrap(), rat(5));
        // det(A) = -(16k^2-40k+9)/(16k^2) has a numerator root at k = 1/4
        let det = RatFn::reduce(-&p(&[9, -40, 16]), p(&[0, 0, 16])).unwrap();
        assert_eq!(det.evaluate(&ratio(1, 4)).unwrap(), rat(0));
        assert_eq!(det.evaluate(&ratio(9, 4)).unwrap(), rat(0));
        // pole at k = 0
        assert!(matches!(
            det.evaluate(&rat(0)),
            Err(ScalarError::Pole(_))
        ));
    }

    #[test]
    fn denominator_sign_normalization() {
        let r = RatFn::reduce(p(&[1]), p(&[0, -2])).unwrap();
        assert_eq!(r.to_string(), "(-1)/(2*k)");
    }

    #[test]
    #[should_panic(expected = "mixed fixed-k and symbolic")]
    fn mode_mixing_panics() {
        let a = LatticeConfig::fixed(3).one();
        let b = LatticeConfig::symbolic().one();
        let _ = &a + &b;
    }

    #[test]
    fn parse_round_trip() {
        let det = parse_ratfn("-(16*k^2 - 40*k + 9)/(16*k^2)").unwrap();
        assert_eq!(det.to_string(), "(-16*k^2 + 40*k - 9)/(16*k^2)");
        let b = parse_ratfn("(64*k^2-16*k-18)/((4*k-1)*(4*k-9))").unwrap();
        assert_eq!(b.evaluate(&rat(3)).unwrap(), ratio(170, 11));
        assert!(parse_ratfn("1164704*k^3/1345").is_ok());
        assert!(parse_ratfn("k +").is_err());
    }

    fn small_ratfn() -> impl Strategy<Value = RatFn> {
        (
            proptest::collection::vec(-6i64..7, 1..4),
            proptest::collection::vec(-6i64..7, 1..4),
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                let den = KPoly::new(d.into_iter().map(rat).collect());
                if den.is_zero() {
                    return None;
                }
                Some(RatFn::reduce(KPoly::new(n.into_iter().map(rat).collect()), den).unwrap())
            })
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_ratfn(), b in small_ratfn(), c in small_ratfn()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RatFn::one());
            }
            prop_assert_eq!(&a + &(-&a), RatFn::zero());
        }

        #[test]
        fn evaluate_is_ring_morphism(a in small_ratfn(), b in small_ratfn(), kv in 1i64..30) {
            let kv = rat(kv);
            let lhs_add = (&a + &b).evaluate(&kv);
            let lhs_mul = (&a * &b).evaluate(&kv);
            if let (Ok(ea), Ok(eb)) = (a.evaluate(&kv), b.evaluate(&kv)) {
                if let Ok(l) = lhs_add { prop_assert_eq!(l, &ea + &eb); }
                if let Ok(l) = lhs_mul { prop_assert_eq!(l, &ea * &eb); }
            }
        }
    }
}
