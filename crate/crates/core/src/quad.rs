//! The real quadratic field Q(sqrt(D)).
//!
//! An element is `u + v*sqrt(D)` with rational `u`, `v`. The discriminant
//! travels with the element; purely rational values (v = 0) use the sentinel
//! disc 0 and combine with any field, so `zero()`/`one()`/`from_i64` work
//! without a separate field handle. Mixing two genuinely irrational elements
//! of different discriminants is a programming error and panics.

use crate::field::{bigint_sqrt, Field, Rat};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug)]
pub struct Quad {
    pub u: Rat,
    pub v: Rat,
    disc: i64,
}

impl PartialEq for Quad {
    fn eq(&self, other: &Self) -> bool {
        // purely rational values (v = 0) compare equal across ambient
        // fields; irrational values require the same discriminant
        self.u == other.u
            && self.v == other.v
            && (Field::is_zero(&self.v) || self.disc == other.disc)
    }
}

/// D must be positive, not a perfect square, and congruent to 0 or 1 mod 4.
pub fn valid_disc(d: i64) -> bool {
    if d <= 0 || !(d % 4 == 0 || d.rem_euclid(4) == 1) {
        return false;
    }
    bigint_sqrt(&BigInt::from(d)).is_none()
}

impl Quad {
    pub fn new(u: Rat, v: Rat, disc: i64) -> Self {
        // disc 0 is the "plain rational" sentinel, accepted only with v = 0;
        // a valid disc is kept even for v = 0 so the ambient field is known
        if disc != 0 || !Field::is_zero(&v) {
            assert!(valid_disc(disc), "invalid discriminant {disc}");
        }
        Quad { u, v, disc }
    }

    pub fn rational(u: Rat) -> Self {
        let v = Rat::from_int(0);
        Quad { u, v, disc: 0 }
    }

    /// sqrt(D) itself.
    pub fn sqrt_disc(disc: i64) -> Self {
        Quad::new(Rat::from_int(0), Rat::from_int(1), disc)
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// Galois conjugate u - v*sqrt(D).
    pub fn conj(&self) -> Self {
        Quad {
            u: self.u.clone(),
            v: -self.v.clone(),
            disc: self.disc,
        }
    }

    /// Field norm u^2 - D*v^2 (a rational).
    pub fn norm(&self) -> Rat {
        &self.u * &self.u - Rat::from_bigint(BigInt::from(self.disc)) * &self.v * &self.v
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    fn unified_disc(&self, rhs: &Self) -> i64 {
        let a_live = !Field::is_zero(&self.v);
        let b_live = !Field::is_zero(&rhs.v);
        if a_live && b_live {
            assert_eq!(
                self.disc, rhs.disc,
                "mixed quadratic fields sqrt({}) vs sqrt({})",
                self.disc, rhs.disc
            );
            self.disc
        } else if a_live {
            self.disc
        } else if b_live {
            rhs.disc
        } else if self.disc != 0 {
            self.disc
        } else {
            rhs.disc
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            write!(f, "{}", crate::field::rational_string(&self.u))
        } else if self.u.is_zero() {
            write!(
                f,
                "{}*sqrt({})",
                crate::field::rational_string(&self.v),
                self.disc
            )
        } else {
            write!(
                f,
                "{}{}{}*sqrt({})",
                crate::field::rational_string(&self.u),
                if self.v.is_negative() { "" } else { "+" },
                crate::field::rational_string(&self.v),
                self.disc
            )
        }
    }
}

impl Field for Quad {
    fn zero(&self) -> Self {
        Quad::new(Rat::from_int(0), Rat::from_int(0), self.disc)
    }
    fn one(&self) -> Self {
        Quad::new(Rat::from_int(1), Rat::from_int(0), self.disc)
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        let d = self.unified_disc(rhs);
        Quad::new(&self.u + &rhs.u, &self.v + &rhs.v, d)
    }
    fn neg(&self) -> Self {
        Quad {
            u: -self.u.clone(),
            v: -self.v.clone(),
            disc: self.disc,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let d = self.unified_disc(rhs);
        let dd = Rat::from_bigint(BigInt::from(d));
        Quad::new(
            &self.u * &rhs.u + &dd * &self.v * &rhs.v,
            &self.u * &rhs.v + &self.v * &rhs.u,
            d,
        )
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm();
        Quad::new(&self.u / &n, -(&self.v / &n), self.disc)
    }
    fn from_i64(&self, n: i64) -> Self {
        Quad::rational(Rat::from_bigint(BigInt::from(n)))
    }
    fn from_rational(&self, q: &Rat) -> Self {
        Quad::rational(q.clone())
    }

    fn poly_scale(coeffs: &[Self]) -> Self {
        // Rational content of all u and v parts, sign from the leading term.
        use num_integer::Integer;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in coeffs {
            for part in [&c.u, &c.v] {
                num_gcd = num_gcd.gcd(part.numer());
                den_lcm = den_lcm.lcm(part.denom());
            }
        }
        if num_gcd.is_zero() {
            panic!("poly_scale of zero vector");
        }
        let mut scale = Rat::new(num_gcd, den_lcm);
        let lead = coeffs.last().unwrap();
        let lead_sign = if lead.u.is_zero() {
            lead.v.is_negative()
        } else {
            lead.u.is_negative()
        };
        if lead_sign {
            scale = -scale;
        }
        Quad::rational(scale)
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.v.is_zero() {
            if let Some(r) = self.u.sqrt() {
                return Some(Quad::rational(r));
            }
            // u < 0, or u not a rational square: maybe u = D * square.
            if self.disc == 0 {
                return None;
            }
            let dd = Rat::from_bigint(BigInt::from(self.disc));
            if let Some(r) = (&self.u / &dd).sqrt() {
                return Some(Quad::new(Rat::from_int(0), r, self.disc));
            }
            return None;
        }
        // (p + q sqrt(D))^2 = u + v sqrt(D): p^2 + D q^2 = u, 2pq = v.
        // p^2 is a root of 4*X^2 - 4*u*X + D*v^2 = 0.
        let n = self.norm().sqrt()?;
        let two = Rat::from_bigint(BigInt::from(2));
        for root in [(&self.u + &n) / &two, (&self.u - &n) / &two] {
            if let Some(p) = root.sqrt() {
                if !p.is_zero() {
                    let q = &self.v / (&two * &p);
                    let cand = Quad::new(p, q, self.disc);
                    if cand.mul(&cand) == *self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }

    fn is_canonical_positive(&self) -> bool {
        if !self.u.is_zero() {
            self.u.is_positive()
        } else {
            self.v.is_positive()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{big, bigfrac};

    fn q(u: i64, v: i64, d: i64) -> Quad {
        Quad::new(big(u), big(v), d)
    }

    #[test]
    fn arithmetic_and_norm() {
        let a = q(2, 4, 44);
        let b = q(1, -1, 44);
        assert_eq!(a.mul(&b), q(2 - 176, 4 - 2, 44));
        assert_eq!(a.mul(&a.inv()), a.one());
        assert_eq!(a.norm(), big(4 - 44 * 16));
    }

    #[test]
    fn conjugation_is_ring_hom() {
        let a = q(3, 2, 12);
        let b = q(-1, 5, 12);
        assert_eq!(a.conj().mul(&b.conj()), a.mul(&b).conj());
        assert_eq!(a.conj().add(&b.conj()), a.add(&b).conj());
        // norm is multiplicative
        assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn disc_mixing_panics() {
        let _ = q(1, 1, 12).add(&q(1, 1, 17));
    }

    #[test]
    fn rational_sentinel_mixes_freely() {
        let a = q(1, 1, 12);
        assert_eq!(a.add(&a.one()).u, big(2));
        assert_eq!(a.one().add(&a).disc(), 12);
    }

    #[test]
    fn quad_sqrt() {
        // (2 + sqrt(5))^2 = 9 + 4 sqrt(5)
        let s = q(9, 4, 5).sqrt().unwrap();
        assert!(s == q(2, 1, 5) || s == q(-2, -1, 5));
        assert_eq!(q(1, 1, 5).sqrt(), None);
        // sqrt of a rational multiple of D: sqrt(20) = 2 sqrt(5) in Q(sqrt 5)
        let twenty = Quad::new(big(20), big(0), 5);
        assert_eq!(twenty.sqrt(), Some(q(0, 2, 5)));
        assert_eq!(bigfrac(1, 4), q(1, 0, 0).u.div(&big(4)));
    }

    #[test]
    fn disc_validation() {
        assert!(valid_disc(5) && valid_disc(12) && valid_disc(44));
        assert!(!valid_disc(7) && !valid_disc(16) && !valid_disc(-4) && !valid_disc(0));
    }
}
