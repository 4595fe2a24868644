//! Univariate polynomials over a [`Field`].
//!
//! Coefficients are stored ascending by degree with a nonzero leading
//! coefficient; the empty vector is the zero polynomial. Euclidean remainder
//! chains renormalize through [`Field::poly_scale`], which keeps rational
//! coefficient growth linear instead of quadratic.

use crate::field::Field;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

/// `g` is not invertible modulo `f`; carries the offending gcd.
#[derive(Clone, Debug)]
pub struct NotInvertible<F: Field> {
    pub gcd: UniPoly<F>,
}

impl<F: Field> fmt::Display for NotInvertible<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not invertible modulo f (gcd = {})", self.gcd)
    }
}

impl<F: Field> UniPoly<F> {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: F) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// x^n with coefficient c, in the field of `c`.
    pub fn monomial(c: F, n: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![c.zero(); n + 1];
        coeffs[n] = c;
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    /// Coefficient of x^i as an owned value, zero-padded (needs a witness
    /// when the polynomial is zero).
    pub fn coeff_or_zero(&self, i: usize, witness: &F) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| witness.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let zero = self.coeffs[0].zero();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Normalize to a monic polynomial (no-op on zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64(i as i64)))
            .collect();
        UniPoly::from_coeffs(out)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Evaluate with coefficients mapped into another field by `lift`.
    pub fn eval_in<G: Field>(&self, x: &G, lift: impl Fn(&F) -> G) -> G {
        let mut acc = x.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&lift(c));
        }
        acc
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc: Option<UniPoly<F>> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.unwrap_or_else(|| {
            UniPoly::constant(
                self.coeffs
                    .first()
                    .map(|c| c.one())
                    .expect("0^0 of zero polynomial without witness"),
            )
        })
    }

    /// Quotient and remainder; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (UniPoly::zero(), self.clone());
        }
        let zero = divisor.coeffs[0].zero();
        let mut quot = vec![zero.clone(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&lc_inv);
            for j in 0..d {
                rem[i - d + j] = rem[i - d + j].sub(&q.mul(&divisor.coeffs[j]));
            }
            rem[i] = zero.clone();
            quot[i - d] = q;
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Remainder of lc(d)^(deg self - deg d + 1) * self modulo d, computed
    /// without coefficient division (primitive pseudo-remainder step).
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        if self.degree().map(|n| n < dd).unwrap_or(true) {
            return self.clone();
        }
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        for i in (dd..rem.len()).rev() {
            let top = rem[i].clone();
            for c in rem.iter_mut().take(i) {
                *c = c.mul(&lc);
            }
            if !top.is_zero() {
                for j in 0..dd {
                    rem[i - dd + j] = rem[i - dd + j].sub(&top.mul(&d.coeffs[j]));
                }
            }
            rem[i] = lc.zero();
        }
        UniPoly::from_coeffs(rem)
    }

    /// Monic gcd via the primitive pseudo-remainder sequence: no coefficient
    /// division inside the loop, `poly_scale` renormalization between steps.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let normalize = |p: UniPoly<F>| -> UniPoly<F> {
            if p.is_zero() {
                p
            } else {
                let s = F::poly_scale(&p.coeffs);
                p.scale(&s.inv())
            }
        };
        let mut a = normalize(self.clone());
        let mut b = normalize(rhs.clone());
        if a.degree().unwrap_or(0) < b.degree().unwrap_or(0) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return UniPoly::constant(b.coeffs[0].one());
            }
            let r = normalize(a.pseudo_rem(&b));
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, u, v) monicized with u*self + v*rhs = g.
    pub fn extended_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let witness = self
            .coeffs
            .first()
            .or_else(|| rhs.coeffs.first())
            .expect("extended_gcd of two zero polynomials");
        let one = UniPoly::constant(witness.one());
        let mut r0 = self.clone();
        let mut r1 = rhs.clone();
        let mut s0 = one.clone();
        let mut s1 = UniPoly::zero();
        let mut t0 = UniPoly::zero();
        let mut t1 = one;
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = lc.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Inverse of `self` modulo the monic `modulus`; errors with the gcd if
    /// the two are not coprime.
    pub fn inv_mod(&self, modulus: &Self) -> Result<Self, NotInvertible<F>> {
        assert!(
            modulus.degree().map(|d| d >= 1).unwrap_or(false),
            "modulus must have degree >= 1"
        );
        let (g, u, _) = self.extended_gcd(modulus);
        if g.degree() == Some(0) {
            Ok(u.rem(modulus))
        } else {
            Err(NotInvertible { gcd: g })
        }
    }

    /// Resultant of `self` and `rhs` via the Euclidean remainder sequence
    /// with scale bookkeeping. Errors if both inputs are zero.
    pub fn resultant(&self, rhs: &Self) -> Result<F, String> {
        if self.is_zero() && rhs.is_zero() {
            return Err("undefined resultant of two zero polynomials".into());
        }
        let witness = self
            .coeffs
            .first()
            .or_else(|| rhs.coeffs.first())
            .unwrap()
            .clone();
        // Res(f, 0) = 0 unless f is a nonzero constant (empty product = 1).
        if self.is_zero() || rhs.is_zero() {
            let other = if self.is_zero() { rhs } else { self };
            return Ok(if other.degree() == Some(0) {
                witness.one()
            } else {
                witness.zero()
            });
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        let mut acc = witness.one();
        let mut neg = false;
        loop {
            let da = a.degree().unwrap();
            let db = match b.degree() {
                Some(d) => d,
                None => return Ok(witness.zero()), // b became 0 with deg a >= 1
            };
            if db == 0 {
                // Res(a, c) = c^deg(a)
                let mut c_pow = witness.one();
                let c = b.leading().unwrap();
                for _ in 0..da {
                    c_pow = c_pow.mul(c);
                }
                let mut out = acc.mul(&c_pow);
                if neg {
                    out = out.neg();
                }
                return Ok(out);
            }
            // Res(a,b) = (-1)^(da*db) lc(b)^(da - dr) Res(b, r), r = a mod b
            let r = a.rem(&b);
            let dr = r.degree();
            if r.is_zero() {
                return Ok(witness.zero());
            }
            // renormalize the remainder: r = s * r', fold s^db into acc
            let s = F::poly_scale(&r.coeffs);
            let r = r.scale(&s.inv());
            let lcb = b.leading().unwrap().clone();
            let drop = da - dr.unwrap();
            let mut factor = witness.one();
            for _ in 0..drop {
                factor = factor.mul(&lcb);
            }
            for _ in 0..db {
                factor = factor.mul(&s);
            }
            acc = acc.mul(&factor);
            if (da * db) % 2 == 1 {
                neg = !neg;
            }
            a = b;
            b = r;
        }
    }

    /// Discriminant with the sign convention
    /// disc(f) = (-1)^(n(n-1)/2) * Res(f, f') / lc(f).
    pub fn discriminant(&self) -> Result<F, String> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err("discriminant of a constant polynomial".into()),
        };
        let res = self.resultant(&self.derivative())?;
        let mut d = res.div(self.leading().unwrap());
        if (n * (n - 1) / 2) % 2 == 1 {
            d = d.neg();
        }
        Ok(d)
    }

    /// Monic squarefree part f / gcd(f, f').
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Exact polynomial square root, if `self` is a perfect square.
    pub fn poly_sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let d = self.degree().unwrap();
        if d % 2 != 0 {
            return None;
        }
        let lc_root = self.leading().unwrap().sqrt()?;
        let h = d / 2;
        let zero = self.coeffs[0].zero();
        let mut root = vec![zero.clone(); h + 1];
        root[h] = lc_root;
        // solve for coefficients from the top down
        for i in (0..h).rev() {
            // coefficient of x^(i+h) in root^2 must match self
            let mut acc = self.coeff_or_zero(i + h, &zero);
            for j in (i + 1)..=h {
                let k = i + h - j;
                if k > h || k <= i {
                    continue;
                }
                acc = acc.sub(&root[j].mul(&root[k]));
            }
            let two_lc = root[h].add(&root[h]);
            root[i] = acc.div(&two_lc);
        }
        let cand = UniPoly::from_coeffs(root);
        if cand.mul(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
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
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{big, bigfrac, Rat};
    
    fn poly(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_coeffs(cs.iter().map(|&c| big(c)).collect())
    }

    #[test]
    fn resultant_shared_root_vanishes() {
        // Res(w-1, w-1) = 0
        let f = poly(&[-1, 1]);
        assert_eq!(f.resultant(&f).unwrap(), big(0));
    }

    #[test]
    fn resultant_of_coprime_quadratics() {
        // Res(w^2-2, w^2-3) = 1: product of (r_i - s_j) over roots
        let f = poly(&[-2, 0, 1]);
        let g = poly(&[-3, 0, 1]);
        assert_eq!(f.resultant(&g).unwrap(), big(1));
        // Sylvester-style oracle through the root products of split examples:
        // Res(f, g) = lc(f)^deg g * prod g(r_i) for f = (w-1)(w-2)
        let f = poly(&[2, -3, 1]);
        let g = poly(&[-3, 0, 1]);
        let expect = g.eval(&big(1)) * g.eval(&big(2));
        assert_eq!(f.resultant(&g).unwrap(), expect);
    }

    #[test]
    fn resultant_both_zero_is_error() {
        let z = UniPoly::<Rat>::zero();
        assert!(z.resultant(&z).is_err());
    }

    #[test]
    fn discriminants() {
        assert_eq!(poly(&[-1, 0, 1]).discriminant().unwrap(), big(4));
        // t^2 + 10t + 13 has discriminant 100 - 52 = 48 = 2^4 * 3
        assert_eq!(poly(&[13, 10, 1]).discriminant().unwrap(), big(48));
        assert_eq!(poly(&[1, -2, 1]).discriminant().unwrap(), big(0));
        assert!(poly(&[5]).discriminant().is_err());
        // disc(f) = -Res(f, f') relation for the quadratic w^2+10w+13
        let f = poly(&[13, 10, 1]);
        assert_eq!(f.resultant(&f.derivative()).unwrap(), big(-48));
    }

    #[test]
    fn invmod_and_gcd() {
        // invmod(w, w^2 - 2) = w/2
        let w = poly(&[0, 1]);
        let m = poly(&[-2, 0, 1]);
        let inv = w.inv_mod(&m).unwrap();
        assert_eq!(inv, UniPoly::from_coeffs(vec![big(0), bigfrac(1, 2)]));
        assert!(w.mul(&inv).rem(&m).degree() == Some(0));

        // gcd(w^2-1, w-1) = w-1
        assert_eq!(poly(&[-1, 0, 1]).gcd(&poly(&[-1, 1])), poly(&[-1, 1]));

        // invmod(w-1, (w-1)(w-2)) errors with gcd = w-1
        let f = poly(&[-1, 1]);
        let m = poly(&[2, -3, 1]);
        let err = f.inv_mod(&m).unwrap_err();
        assert_eq!(err.gcd, poly(&[-1, 1]));
    }

    #[test]
    fn squarefree_part() {
        // (w-1)^2 (w+2) -> (w-1)(w+2)
        let f = poly(&[-1, 1]).pow(2).mul(&poly(&[2, 1]));
        assert_eq!(f.squarefree_part(), poly(&[-1, 1]).mul(&poly(&[2, 1])));
    }

    #[test]
    fn poly_sqrt_roundtrip() {
        let f = poly(&[3, -2, 5]);
        let sq = f.mul(&f);
        let r = sq.poly_sqrt().unwrap();
        assert!(r == f || r == f.neg());
        assert!(poly(&[1, 1]).poly_sqrt().is_none());
        assert!(poly(&[0, 0, 2]).poly_sqrt().is_none()); // 2x^2 not a square over Q
    }

    #[test]
    fn division_identity() {
        let f = poly(&[3, 1, 0, 2, 7]);
        let g = poly(&[1, 2, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree().unwrap_or(0) < g.degree().unwrap());
    }
}
