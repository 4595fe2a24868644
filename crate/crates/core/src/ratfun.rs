//! The rational function field K(t) over any coefficient field K.
//!
//! Fractions are kept reduced (gcd cancelled) with a monic denominator, so
//! equality is plain structural equality. The tower Q(sqrt(D))(t) is just
//! `RatFun<Quad>`.

use crate::field::{Field, Rat};
use crate::unipoly::UniPoly;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFun<F: Field> {
    num: UniPoly<F>,
    den: UniPoly<F>, // monic, coprime to num
    witness: F,
}

impl<F: Field> RatFun<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>, witness: F) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = RatFun {
            num,
            den,
            witness,
        };
        out.reduce();
        out
    }

    pub fn from_poly(num: UniPoly<F>, witness: F) -> Self {
        let den = UniPoly::constant(witness.one());
        RatFun {
            num,
            den,
            witness,
        }
    }

    pub fn constant(c: F) -> Self {
        let witness = c.zero();
        RatFun::from_poly(UniPoly::constant(c), witness)
    }

    /// The generator t of K(t).
    pub fn var(witness: F) -> Self {
        RatFun::from_poly(UniPoly::monomial(witness.one(), 1), witness)
    }

    pub fn numerator(&self) -> &UniPoly<F> {
        &self.num
    }
    pub fn denominator(&self) -> &UniPoly<F> {
        &self.den
    }

    /// A zero of the base coefficient field K of K(t).
    pub fn base_witness(&self) -> F {
        self.witness.clone()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial itself when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&UniPoly<F>> {
        if self.den.is_monic() && self.den.degree() == Some(0) {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Evaluate at t0; None at poles.
    pub fn eval_at(&self, t0: &F) -> Option<F> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t0).div(&d))
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::constant(self.witness.one());
            return;
        }
        if self.den.degree().unwrap_or(0) >= 1 && self.num.degree().unwrap_or(0) >= 1 {
            let g = self.num.gcd(&self.den);
            if g.degree().unwrap_or(0) >= 1 {
                self.num = self.num.div_rem(&g).0;
                self.den = self.den.div_rem(&g).0;
            }
        }
        let lc = self.den.leading().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }
}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: Field> Field for RatFun<F> {
    fn zero(&self) -> Self {
        RatFun::from_poly(UniPoly::zero(), self.witness.clone())
    }
    fn one(&self) -> Self {
        RatFun::from_poly(UniPoly::constant(self.witness.one()), self.witness.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        let self_poly = self.den.degree() == Some(0);
        let rhs_poly = rhs.den.degree() == Some(0);
        if self_poly && rhs_poly {
            // both denominators are 1 after normalization
            return RatFun {
                num: self.num.add(&rhs.num),
                den: self.den.clone(),
                witness: self.witness.clone(),
            };
        }
        let num = self
            .num
            .mul(&rhs.den)
            .add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        RatFun::new(num, den, self.witness.clone())
    }
    fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
            witness: self.witness.clone(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.den.degree() == Some(0) && rhs.den.degree() == Some(0) {
            return RatFun {
                num: self.num.mul(&rhs.num),
                den: self.den.clone(),
                witness: self.witness.clone(),
            };
        }
        // cross-reduce before multiplying to keep degrees down
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.degree().unwrap_or(0) >= 1 {
            (self.num.div_rem(&g1).0, rhs.den.div_rem(&g1).0)
        } else {
            (self.num.clone(), rhs.den.clone())
        };
        let (n2, d1) = if g2.degree().unwrap_or(0) >= 1 {
            (rhs.num.div_rem(&g2).0, self.den.div_rem(&g2).0)
        } else {
            (rhs.num.clone(), self.den.clone())
        };
        RatFun::new(n1.mul(&n2), d1.mul(&d2), self.witness.clone())
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFun::new(
            self.den.clone(),
            self.num.clone(),
            self.witness.clone(),
        )
    }
    fn from_i64(&self, n: i64) -> Self {
        RatFun::from_poly(
            UniPoly::constant(self.witness.from_i64(n)),
            self.witness.clone(),
        )
    }
    fn from_rational(&self, q: &Rat) -> Self {
        RatFun::from_poly(
            UniPoly::constant(self.witness.from_rational(q)),
            self.witness.clone(),
        )
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let n = self.num.poly_sqrt()?;
        let d = self.den.poly_sqrt()?;
        Some(RatFun::new(n, d, self.witness.clone()))
    }

    fn is_canonical_positive(&self) -> bool {
        self.num
            .leading()
            .map(|c| c.is_canonical_positive())
            .unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use crate::field::Rat;
    use super::*;
    use crate::field::big;
    
    type Qt = RatFun<Rat>;

    fn poly(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_coeffs(cs.iter().map(|&c| big(c)).collect())
    }

    fn qt(num: &[i64], den: &[i64]) -> Qt {
        RatFun::new(poly(num), poly(den), big(0))
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (t^2 - 1)/(2t - 2) = (t + 1)/2
        let f = qt(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(f.numerator(), &poly(&[1, 1]).scale(&crate::field::bigfrac(1, 2)));
        assert_eq!(f.denominator(), &poly(&[1]));
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let f = qt(&[1, 2], &[3, 0, 1]);
        let g = qt(&[-5, 0, 0, 1], &[2, 1]);
        let t0 = big(7);
        let sum = f.add(&g);
        assert_eq!(
            sum.eval_at(&t0).unwrap(),
            f.eval_at(&t0).unwrap() + g.eval_at(&t0).unwrap()
        );
        let prod = f.mul(&g);
        assert_eq!(
            prod.eval_at(&t0).unwrap(),
            f.eval_at(&t0).unwrap() * g.eval_at(&t0).unwrap()
        );
        assert_eq!(f.mul(&f.inv()), f.one());
    }

    #[test]
    fn pole_detection() {
        let f = qt(&[1], &[-2, 1]); // 1/(t-2)
        assert!(f.eval_at(&big(2)).is_none());
        assert_eq!(f.eval_at(&big(3)).unwrap(), big(1));
    }
}
