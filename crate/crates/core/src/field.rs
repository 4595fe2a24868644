//! Coefficient fields.
//!
//! Every algebraic object in this crate (polynomials, matrices, curve
//! models) is generic over [`Field`]. An element carries enough context to
//! synthesize constants of its own field (`x.zero()`, `x.from_i64(3)`),
//! which lets the same code run over Q, Q(sqrt(D)), Q(t), Q(sqrt(D))(t) and
//! F_p without a separate ring-object layer.
//!
//! [`Rat`] is the exact rational scalar (a thin wrapper over
//! `num_rational::BigRational`; the wrapper keeps this crate's field methods
//! from colliding with the `num_traits` ones).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops;

/// An exact field. All operations are total except `inv`/`div`, which panic
/// on zero divisors (callers check `is_zero` where the spec demands an
/// error).
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
    fn is_one(&self) -> bool {
        *self == self.one()
    }
    /// Embed a small integer into the field of `self`.
    fn from_i64(&self, n: i64) -> Self;
    /// Embed a rational into the field of `self`. Panics if the denominator
    /// is not invertible (only possible over F_p).
    fn from_rational(&self, q: &Rat) -> Self;

    /// Scalar used to renormalize polynomial remainders in gcd chains.
    /// Dividing a nonzero coefficient vector by this scalar must leave a
    /// nonzero vector on the same line. The default (leading coefficient)
    /// yields monic remainders; Q-like fields override it to clear
    /// denominators and content, which keeps Euclidean sequences small.
    fn poly_scale(coeffs: &[Self]) -> Self {
        coeffs
            .last()
            .cloned()
            .expect("poly_scale of empty coefficient vector")
    }

    /// Exact square root, if one exists in the field.
    fn sqrt(&self) -> Option<Self>;

    /// Canonical sign used for deterministic tie-breaking (e.g. the choice
    /// of lambda among the two roots of its quadratic).
    fn is_canonical_positive(&self) -> bool;
}

/// Exact square root of a nonnegative `BigInt`, if it is a perfect square.
pub fn bigint_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// An exact rational number, always reduced, denominator positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Test-oracle helper; the library itself never computes with floats.
    pub fn to_f64_lossy(&self) -> f64 {
        self.numer().to_f64().unwrap_or(f64::NAN) / self.denom().to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl ops::$trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(ops::$trait::$method(self.0, rhs.0))
            }
        }
        impl ops::$trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(ops::$trait::$method(self.0, &rhs.0))
            }
        }
        impl ops::$trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(ops::$trait::$method(&self.0, rhs.0))
            }
        }
        impl ops::$trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(ops::$trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl ops::Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl ops::Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::from_int(0), |a, b| a + b)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rat {
    fn zero(&self) -> Self {
        Rat::from_int(0)
    }
    fn one(&self) -> Self {
        Rat::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.0.numer().is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        Rat(self.0.recip())
    }
    fn from_i64(&self, n: i64) -> Self {
        Rat::from_int(n)
    }
    fn from_rational(&self, q: &Rat) -> Self {
        q.clone()
    }

    fn poly_scale(coeffs: &[Self]) -> Self {
        // Scale so the vector becomes primitive with integer entries and
        // positive leading coefficient: divide by content * lcm-of-denoms.
        use num_integer::Integer;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            panic!("poly_scale of zero vector");
        }
        let mut scale = Rat::new(num_gcd, den_lcm);
        if coeffs.last().map(|c| c.is_negative()).unwrap_or(false) {
            scale = -scale;
        }
        scale
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = bigint_sqrt(self.numer())?;
        let d = bigint_sqrt(self.denom())?;
        Some(Rat::new(n, d))
    }

    fn is_canonical_positive(&self) -> bool {
        self.is_positive()
    }
}

/// Parse a rational from the textual form used throughout the data files:
/// an optional sign, digits, and an optional "/denominator" part. No floats.
pub fn parse_rational(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("bad numerator {num_str:?}"))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| format!("bad denominator {den_str:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    if den.is_negative() {
        return Err(format!("negative denominator in {s:?}"));
    }
    Ok(Rat::new(num, den))
}

/// Render a rational as "num" or "num/den" (never a float).
pub fn rational_string(q: &Rat) -> String {
    format!("{q}")
}

pub fn big(n: i64) -> Rat {
    Rat::from_int(n)
}

pub fn bigfrac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("-3/8").unwrap(), bigfrac(-3, 8));
        assert_eq!(parse_rational("24").unwrap(), big(24));
        assert_eq!(rational_string(&bigfrac(-3, 8)), "-3/8");
        assert_eq!(rational_string(&big(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(bigfrac(9, 4).sqrt(), Some(bigfrac(3, 2)));
        assert_eq!(big(2).sqrt(), None);
        assert_eq!(big(-4).sqrt(), None);
        assert_eq!(big(0).sqrt(), Some(big(0)));
    }

    #[test]
    fn poly_scale_makes_primitive() {
        let v = vec![bigfrac(4, 3), bigfrac(-2, 9)];
        let s = <Rat as Field>::poly_scale(&v);
        let scaled: Vec<_> = v.iter().map(|c| c.div(&s)).collect();
        assert_eq!(scaled, vec![big(-6), big(1)]);
    }

    #[test]
    fn field_axioms_spot_check() {
        let a = bigfrac(3, 7);
        let b = bigfrac(-2, 5);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&b).div(&b), a);
        assert_eq!(a.mul(&a.inv()), a.one());
    }
}

impl ops::MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl ops::AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}
