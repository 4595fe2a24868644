//! Chord-tangent group law on a long Weierstrass model
//! y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, exact over any field.

use crate::field::Field;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct EllipticCurve<F: Field> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
    pub a6: F,
}

#[derive(Clone, PartialEq, Debug)]
pub enum EcPoint<F: Field> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: Field> EllipticCurve<F> {
    /// Short-ish constructor for y^2 = x^3 + a2 x^2 + a4 x + a6.
    pub fn with_even_model(a2: F, a4: F, a6: F) -> Self {
        let zero = a2.zero();
        EllipticCurve {
            a1: zero.clone(),
            a3: zero,
            a2,
            a4,
            a6,
        }
    }

    pub fn b_invariants(&self) -> (F, F, F, F) {
        let EllipticCurve { a1, a2, a3, a4, a6 } = self;
        let b2 = a1.mul(a1).add(&a2.mul(&a2.from_i64(4)));
        let b4 = a4.mul(&a4.from_i64(2)).add(&a1.mul(a3));
        let b6 = a3.mul(a3).add(&a6.mul(&a6.from_i64(4)));
        let b8 = a1
            .mul(a1)
            .mul(a6)
            .add(&a2.mul(a6).mul(&a2.from_i64(4)))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(a3).mul(a3))
            .sub(&a4.mul(a4));
        (b2, b4, b6, b8)
    }

    pub fn discriminant(&self) -> F {
        let (b2, b4, b6, b8) = self.b_invariants();
        // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
        let t1 = b2.mul(&b2).mul(&b8).neg();
        let t2 = b4.mul(&b4).mul(&b4).mul(&b4.from_i64(8)).neg();
        let t3 = b6.mul(&b6).mul(&b6.from_i64(27)).neg();
        let t4 = b2.mul(&b4).mul(&b6).mul(&b2.from_i64(9));
        t1.add(&t2).add(&t3).add(&t4)
    }

    pub fn c4(&self) -> F {
        let (b2, b4, _, _) = self.b_invariants();
        b2.mul(&b2).sub(&b4.mul(&b4.from_i64(24)))
    }

    /// j = c4^3 / disc; errors on singular curves.
    pub fn j_invariant(&self) -> Result<F> {
        let disc = self.discriminant();
        if disc.is_zero() {
            return Err(Error::Math("singular curve: discriminant is zero".into()));
        }
        let c4 = self.c4();
        Ok(c4.mul(&c4).mul(&c4).div(&disc))
    }

    pub fn contains(&self, p: &EcPoint<F>) -> bool {
        match p {
            EcPoint::Infinity => true,
            EcPoint::Affine { x, y } => {
                let lhs = y
                    .mul(y)
                    .add(&self.a1.mul(x).mul(y))
                    .add(&self.a3.mul(y));
                let rhs = x
                    .mul(x)
                    .mul(x)
                    .add(&self.a2.mul(x).mul(x))
                    .add(&self.a4.mul(x))
                    .add(&self.a6.clone());
                lhs == rhs
            }
        }
    }

    pub fn negate(&self, p: &EcPoint<F>) -> EcPoint<F> {
        match p {
            EcPoint::Infinity => EcPoint::Infinity,
            EcPoint::Affine { x, y } => EcPoint::Affine {
                x: x.clone(),
                y: y.neg().sub(&self.a1.mul(x)).sub(&self.a3),
            },
        }
    }

    pub fn add(&self, p: &EcPoint<F>, q: &EcPoint<F>) -> Result<EcPoint<F>> {
        if self.discriminant().is_zero() {
            return Err(Error::Math("singular curve".into()));
        }
        Ok(self.add_unchecked(p, q))
    }

    /// Group law without the singularity recheck (for inner loops).
    pub fn add_unchecked(&self, p: &EcPoint<F>, q: &EcPoint<F>) -> EcPoint<F> {
        let (x1, y1) = match p {
            EcPoint::Infinity => return q.clone(),
            EcPoint::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match q {
            EcPoint::Infinity => return p.clone(),
            EcPoint::Affine { x, y } => (x, y),
        };
        let lambda = if x1 == x2 {
            if *q == self.negate(p) {
                return EcPoint::Infinity;
            }
            // tangent: (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
            let num = x1
                .mul(x1)
                .mul(&x1.from_i64(3))
                .add(&self.a2.mul(x1).mul(&x1.from_i64(2)))
                .add(&self.a4)
                .sub(&self.a1.mul(y1));
            let den = y1
                .mul(&y1.from_i64(2))
                .add(&self.a1.mul(x1))
                .add(&self.a3);
            num.div(&den)
        } else {
            y2.sub(y1).div(&x2.sub(x1))
        };
        let nu = y1.sub(&lambda.mul(x1));
        let x3 = lambda
            .mul(&lambda)
            .add(&self.a1.mul(&lambda))
            .sub(&self.a2)
            .sub(x1)
            .sub(x2);
        let y3 = lambda
            .add(&self.a1)
            .mul(&x3)
            .add(&nu)
            .add(&self.a3)
            .neg();
        EcPoint::Affine { x: x3, y: y3 }
    }

    pub fn scalar_mul(&self, n: i64, p: &EcPoint<F>) -> Result<EcPoint<F>> {
        if self.discriminant().is_zero() {
            return Err(Error::Math("singular curve".into()));
        }
        let (mut n, mut base) = if n < 0 {
            (-n, self.negate(p))
        } else {
            (n, p.clone())
        };
        let mut acc = EcPoint::Infinity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            n >>= 1;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use crate::field::Rat;
    use super::*;
    use crate::field::big;
    
    fn curve() -> EllipticCurve<Rat> {
        // y^2 = x^3 - x
        EllipticCurve::with_even_model(big(0), big(-1), big(0))
    }

    #[test]
    fn j_invariants_of_model_curves() {
        assert_eq!(curve().j_invariant().unwrap(), big(1728));
        let e = EllipticCurve::with_even_model(big(0), big(0), big(-1));
        assert_eq!(e.j_invariant().unwrap(), big(0));
        let singular = EllipticCurve::with_even_model(big(0), big(0), big(0));
        assert!(singular.j_invariant().is_err());
    }

    #[test]
    fn group_law_basics() {
        let e = curve();
        let p = EcPoint::Affine { x: big(0), y: big(0) };
        assert!(e.contains(&p));
        // 2-torsion point: P + P = O
        assert_eq!(e.add(&p, &p).unwrap(), EcPoint::Infinity);
        assert_eq!(e.scalar_mul(2, &p).unwrap(), EcPoint::Infinity);
        // P + (-P) = O and P + O = P
        assert_eq!(e.add(&p, &e.negate(&p)).unwrap(), EcPoint::Infinity);
        assert_eq!(e.add(&p, &EcPoint::Infinity).unwrap(), p);
    }

    #[test]
    fn associativity_on_a_rank_one_curve() {
        // y^2 = x^3 - 2 has the point (3, 5)
        let e = EllipticCurve::with_even_model(big(0), big(0), big(-2));
        let p = EcPoint::Affine { x: big(3), y: big(5) };
        assert!(e.contains(&p));
        let p2 = e.scalar_mul(2, &p).unwrap();
        let p3 = e.scalar_mul(3, &p).unwrap();
        assert!(e.contains(&p2) && e.contains(&p3));
        let left = e.add(&e.add(&p, &p2).unwrap(), &p3).unwrap();
        let right = e.add(&p, &e.add(&p2, &p3).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(e.scalar_mul(6, &p).unwrap(), left);
        // n(P + Q) = nP + nQ along the cyclic subgroup
        let five_p = e.scalar_mul(5, &p).unwrap();
        let sum = e.add(&p2, &p3).unwrap();
        assert_eq!(five_p, sum);
    }
}
