//! Genus-two curve models z^2 = f_a(w) and their Igusa-Clebsch invariants.
//!
//! Invariants are evaluated from fixed integer polynomial tables in the five
//! coefficients (see [`ic_tables`]), never from roots, so they work verbatim
//! over every supported field. Derivatives of the invariant map are taken in
//! the affine chart (I4/I2^2, I6/I2^3, I10/I2^5), which is invariant under
//! the weighted scaling action and therefore independent of the chosen
//! projective representative.

pub mod ic_tables;

use crate::field::Field;
use crate::matrix::Matrix;
use crate::multipoly::MultiPoly;
use crate::{Error, Result};

/// Halved weights of (I2, I4, I6, I10); weighted scaling acts through
/// lambda^2, so orbit equality is polynomial in these exponents.
pub const HALF_WEIGHTS: [u32; 4] = [1, 2, 3, 5];

/// The curve z^2 = f_a(w) with f_a = w^5 + a4 w^4 + ... + a1 w + a0.
#[derive(Clone, PartialEq, Debug)]
pub struct QuinticModel<F: Field> {
    pub a: [F; 5],
}

impl<F: Field> QuinticModel<F> {
    pub fn new(a: [F; 5]) -> Self {
        QuinticModel { a }
    }

    pub fn from_i64(witness: &F, a: [i64; 5]) -> Self {
        QuinticModel {
            a: [
                witness.from_i64(a[0]),
                witness.from_i64(a[1]),
                witness.from_i64(a[2]),
                witness.from_i64(a[3]),
                witness.from_i64(a[4]),
            ],
        }
    }

    pub fn witness(&self) -> &F {
        &self.a[0]
    }

    /// f_a as a univariate polynomial in w.
    pub fn poly(&self) -> crate::unipoly::UniPoly<F> {
        let mut coeffs = self.a.to_vec();
        coeffs.push(self.witness().one());
        crate::unipoly::UniPoly::from_coeffs(coeffs)
    }

    /// disc(f_a); zero iff the model is degenerate. Evaluated through the
    /// I10 table (which equals the discriminant exactly).
    pub fn disc(&self) -> F {
        ic_poly(ic_tables::I10_QUINTIC, self.witness()).eval(&self.a)
    }

    pub fn is_degenerate(&self) -> bool {
        self.disc().is_zero()
    }
}

/// A point (I2 : I4 : I6 : I10) of the weighted projective space
/// P(2, 4, 6, 10), stored as one explicit representative.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightedPoint<F: Field> {
    pub i2: F,
    pub i4: F,
    pub i6: F,
    pub i10: F,
}

impl<F: Field> WeightedPoint<F> {
    pub fn new(i2: F, i4: F, i6: F, i10: F) -> Self {
        WeightedPoint { i2, i4, i6, i10 }
    }

    pub fn coords(&self) -> [&F; 4] {
        [&self.i2, &self.i4, &self.i6, &self.i10]
    }

    pub fn is_all_zero(&self) -> bool {
        self.coords().iter().all(|c| c.is_zero())
    }

    /// Scale by lambda^2 = mu: (mu I2, mu^2 I4, mu^3 I6, mu^5 I10).
    pub fn scale_by_mu(&self, mu: &F) -> Self {
        let mu2 = mu.mul(mu);
        let mu3 = mu2.mul(mu);
        let mu5 = mu2.mul(&mu3);
        WeightedPoint {
            i2: self.i2.mul(mu),
            i4: self.i4.mul(&mu2),
            i6: self.i6.mul(&mu3),
            i10: self.i10.mul(&mu5),
        }
    }
}

/// A quadratic differential (x0 + x1 w + x2 w^2) dw^2 / f_a(w) on a quintic
/// model, up to scale.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadraticDifferential<F: Field> {
    pub x: [F; 3],
}

/// Instantiate one of the generated invariant tables over F.
pub fn ic_poly<F: Field>(table: &[(i64, [u8; 5])], witness: &F) -> MultiPoly<F> {
    let mut p = MultiPoly::zero(5, witness.zero());
    for (c, exps) in table {
        p.add_term(
            exps.iter().map(|&e| e as u32).collect(),
            witness.from_i64(*c),
        );
    }
    p
}

/// The four quintic-model invariant polynomials over F.
pub fn ic_polys<F: Field>(witness: &F) -> [MultiPoly<F>; 4] {
    [
        ic_poly(ic_tables::I2_QUINTIC, witness),
        ic_poly(ic_tables::I4_QUINTIC, witness),
        ic_poly(ic_tables::I6_QUINTIC, witness),
        ic_poly(ic_tables::I10_QUINTIC, witness),
    ]
}

/// Igusa-Clebsch invariants of the model, as one explicit representative.
/// Degenerate models are allowed; they land on the hyperplane I10 = 0.
pub fn igusa_clebsch<F: Field>(m: &QuinticModel<F>) -> WeightedPoint<F> {
    let [p2, p4, p6, p10] = ic_polys(m.witness());
    WeightedPoint {
        i2: p2.eval(&m.a),
        i4: p4.eval(&m.a),
        i6: p6.eval(&m.a),
        i10: p10.eval(&m.a),
    }
}

/// Equality in P(2,4,6,10): zero patterns must match and all cross
/// relations P_i^(d_j) Q_j^(d_i) = Q_i^(d_j) P_j^(d_i) must hold, where d
/// are the halved weights (1,2,3,5). This characterizes equality of orbits
/// under scaling by any lambda^2 in the closure of the field.
pub fn weighted_equal<F: Field>(p: &WeightedPoint<F>, q: &WeightedPoint<F>) -> Result<bool> {
    if p.is_all_zero() || q.is_all_zero() {
        return Err(Error::Math("not a projective point: all coordinates zero".into()));
    }
    let pc = p.coords();
    let qc = q.coords();
    for i in 0..4 {
        if pc[i].is_zero() != qc[i].is_zero() {
            return Ok(false);
        }
    }
    let pow = |x: &F, e: u32| -> F {
        let mut acc = x.one();
        for _ in 0..e {
            acc = acc.mul(x);
        }
        acc
    };
    for i in 0..4 {
        for j in (i + 1)..4 {
            let (di, dj) = (HALF_WEIGHTS[i], HALF_WEIGHTS[j]);
            let lhs = pow(pc[i], dj).mul(&pow(qc[j], di));
            let rhs = pow(qc[i], dj).mul(&pow(pc[j], di));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The affine chart (j1, j2, j3) = (I4/I2^2, I6/I2^3, I10/I2^5) of a
/// weighted point. Falls back to normalizing by I4 or I6 when I2 = 0.
pub fn chart<F: Field>(p: &WeightedPoint<F>) -> Result<[F; 3]> {
    if !p.i2.is_zero() {
        let i2_2 = p.i2.mul(&p.i2);
        let i2_3 = i2_2.mul(&p.i2);
        let i2_5 = i2_2.mul(&i2_3);
        return Ok([
            p.i4.div(&i2_2),
            p.i6.div(&i2_3),
            p.i10.div(&i2_5),
        ]);
    }
    if !p.i4.is_zero() {
        // normalize by I4^(1/2)-weights: (I6^2/I4^3, I10^2/I4^5, I2 = 0 slot)
        let i4_3 = p.i4.mul(&p.i4).mul(&p.i4);
        let i4_5 = i4_3.mul(&p.i4).mul(&p.i4);
        return Ok([
            p.i6.mul(&p.i6).div(&i4_3),
            p.i10.mul(&p.i10).div(&i4_5),
            p.i2.clone(),
        ]);
    }
    if !p.i6.is_zero() {
        let i6_5 = p.i6.mul(&p.i6).mul(&p.i6).mul(&p.i6).mul(&p.i6);
        let i10_3 = p.i10.mul(&p.i10).mul(&p.i10);
        return Ok([i10_3.div(&i6_5), p.i2.clone(), p.i4.clone()]);
    }
    Err(Error::Math("chart undefined: I2 = I4 = I6 = 0".into()))
}

/// Exact 3x5 Jacobian of a |-> chart(IC(Y(a))) at the model, from symbolic
/// partial derivatives of the invariant tables. Requires I2(a) != 0.
pub fn ic_jacobian<F: Field>(m: &QuinticModel<F>) -> Result<Matrix<F>> {
    let [p2, p4, p6, p10] = ic_polys(m.witness());
    let i2 = p2.eval(&m.a);
    if i2.is_zero() {
        return Err(Error::Math("chart undefined: I2 = 0 at this model".into()));
    }
    let numerators = [&p4, &p6, &p10];
    let exps: [u32; 3] = [2, 3, 5];
    let mut entries = Vec::with_capacity(15);
    for (pk, &e) in numerators.iter().zip(exps.iter()) {
        let vk = pk.eval(&m.a);
        // d(Pk / I2^e) = (dPk * I2 - e * Pk * dI2) / I2^(e+1)
        let mut i2_e1 = i2.one();
        for _ in 0..(e + 1) {
            i2_e1 = i2_e1.mul(&i2);
        }
        for var in 0..5 {
            let dpk = pk.partial_derivative(var).eval(&m.a);
            let di2 = p2.partial_derivative(var).eval(&m.a);
            let num = dpk.mul(&i2).sub(
                &vk.mul(&di2).mul(&i2.from_i64(e as i64)),
            );
            entries.push(num.div(&i2_e1));
        }
    }
    Ok(Matrix::new(3, 5, entries))
}

/// Whether the differential's eigenform pair contains the double-zero form
/// dw/z up to scale. From the factorization (lambda w + x0)(x2 w + lambda),
/// a constant factor appears iff x2 = 0 (then lambda = x1, factor lambda)
/// or x0 = 0 (then one factor is x2 w + x1 or the differential is w * dw^2/f).
/// The fully degenerate x = (0, 0, x2) (square of w dw/z) is reported
/// separately.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DoubleZero {
    /// Pair contains dw/z.
    Yes,
    /// Pair contains dw/z but the product is a perfect square.
    Degenerate,
    /// Pair does not contain dw/z over this field.
    No,
}

pub fn differential_double_zero<F: Field>(
    m: &QuinticModel<F>,
    q: &QuadraticDifferential<F>,
) -> DoubleZero {
    assert!(!m.is_degenerate(), "degenerate model");
    let [x0, x1, x2] = &q.x;
    if x0.is_zero() && x2.is_zero() {
        // x1 w dw^2/f = (w dw/z)(dw/z)
        return DoubleZero::Yes;
    }
    if x2.is_zero() || x0.is_zero() {
        if x1.is_zero() {
            // pure w^2 or pure constant: a square of a single form
            return DoubleZero::Degenerate;
        }
        return DoubleZero::Yes;
    }
    DoubleZero::No
}

#[cfg(test)]
mod float_oracle {
    //! Floating-point oracles, test-only: the library itself is float-free.
    use crate::field::Rat;

    pub fn rat_f64(q: &Rat) -> f64 {
        q.to_f64_lossy()
    }

    pub fn ic_f64(a: [f64; 5]) -> [f64; 4] {
        let tables = [
            super::ic_tables::I2_QUINTIC,
            super::ic_tables::I4_QUINTIC,
            super::ic_tables::I6_QUINTIC,
            super::ic_tables::I10_QUINTIC,
        ];
        let mut out = [0.0; 4];
        for (slot, table) in out.iter_mut().zip(tables) {
            for (c, e) in table {
                let mut term = *c as f64;
                for (k, &exp) in e.iter().enumerate() {
                    term *= a[k].powi(exp as i32);
                }
                *slot += term;
            }
        }
        out
    }

    pub fn chart_f64(a: [f64; 5]) -> [f64; 3] {
        let [i2, i4, i6, i10] = ic_f64(a);
        [
            i4 / i2.powi(2),
            i6 / i2.powi(3),
            i10 / i2.powi(5),
        ]
    }

    type C = (f64, f64);

    fn cmul(a: C, b: C) -> C {
        (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
    }

    fn cdiv(a: C, b: C) -> C {
        let n = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / n, (a.1 * b.0 - a.0 * b.1) / n)
    }

    /// All complex roots of a monic polynomial (ascending coefficients,
    /// leading 1) by Durand-Kerner iteration.
    pub fn durand_kerner(coeffs: &[f64]) -> Vec<C> {
        let n = coeffs.len() - 1;
        assert!((coeffs[n] - 1.0).abs() < 1e-12, "monic input expected");
        let eval = |z: C| -> C {
            let mut acc = (0.0, 0.0);
            for &c in coeffs.iter().rev() {
                acc = cmul(acc, z);
                acc = (acc.0 + c, acc.1);
            }
            acc
        };
        let radius = 1.0
            + coeffs[..n]
                .iter()
                .fold(0.0f64, |m, c| m.max(c.abs()));
        let mut roots: Vec<C> = (0..n)
            .map(|k| {
                let th = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
                (radius.powf(0.5) * th.cos(), radius.powf(0.5) * th.sin())
            })
            .collect();
        for _ in 0..500 {
            let mut delta = 0.0f64;
            for i in 0..n {
                let mut denom = (1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        denom = cmul(denom, (roots[i].0 - roots[j].0, roots[i].1 - roots[j].1));
                    }
                }
                let step = cdiv(eval(roots[i]), denom);
                roots[i] = (roots[i].0 - step.0, roots[i].1 - step.1);
                delta = delta.max(step.0.abs() + step.1.abs());
            }
            if delta < 1e-13 {
                break;
            }
        }
        roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{big, bigfrac, Rat};
    
    fn model(a: [i64; 5]) -> QuinticModel<Rat> {
        QuinticModel::from_i64(&big(0), a)
    }

    fn wp(v: [i64; 4]) -> WeightedPoint<Rat> {
        WeightedPoint::new(big(v[0]), big(v[1]), big(v[2]), big(v[3]))
    }

    #[test]
    fn anchor_curve_invariants() {
        // z^2 = w^5 - 2w^4 - 12w^3 - 8w^2 + 52w + 24
        let m = model([24, 52, -8, -12, -2]);
        let ic = igusa_clebsch(&m);
        // equals (56 : -32 : -348 : -324) in P(2,4,6,10); the representative
        // computed from the tables is the lambda^2 = 48 scaling
        assert!(weighted_equal(&ic, &wp([56, -32, -348, -324])).unwrap());
        assert_eq!(ic.i2, big(56 * 48));
        assert_eq!(ic.i4, big(-32 * 48 * 48));
    }

    #[test]
    fn i10_is_discriminant() {
        let m = model([24, 52, -8, -12, -2]);
        assert_eq!(igusa_clebsch(&m).i10, m.poly().discriminant().unwrap());
        let degenerate = model([0, 0, 0, 0, 0]); // w^5, repeated root
        assert!(igusa_clebsch(&degenerate).i10.is_zero());
        assert!(degenerate.is_degenerate());
    }

    #[test]
    fn i2_reduces_to_the_classical_weight_two_formula() {
        // for the sextic c6 x^6 + ... the weight-2 invariant is
        // -240 c0 c6 + 40 c1 c5 - 16 c2 c4 + 6 c3^2; with c6 = 0, c5 = 1
        // this is 40 a1 - 16 a2 a4 + 6 a3^2
        let m = model([7, -3, 11, 2, -5]);
        let expect = big(40 * -3 - 16 * 11 * -5 + 6 * 4);
        assert_eq!(igusa_clebsch(&m).i2, expect);
    }

    #[test]
    fn weighted_equality_is_scale_invariant() {
        let p = wp([56, -32, -348, -324]);
        let q = p.scale_by_mu(&big(4)); // lambda^2 = 4
        assert!(weighted_equal(&p, &q).unwrap());
        let r = p.scale_by_mu(&bigfrac(-8, 3)); // non-square scaling
        assert!(weighted_equal(&p, &r).unwrap());
        assert!(!weighted_equal(&p, &wp([56, -32, -348, 0])).unwrap());
    }

    #[test]
    fn stable_limit_mismatch_from_the_open_question() {
        // the two candidate limit tuples are NOT in the same orbit
        let a = wp([96, 144, 4032, 0]);
        let b = wp([96, 289, 8092, 0]);
        assert!(!weighted_equal(&a, &b).unwrap());
    }

    #[test]
    fn all_zero_point_is_rejected() {
        assert!(weighted_equal(&wp([0, 0, 0, 0]), &wp([1, 0, 0, 0])).is_err());
    }

    #[test]
    fn jacobian_rank_at_anchor_point() {
        let m = model([24, 52, -8, -12, -2]);
        let j = ic_jacobian(&m).unwrap();
        assert_eq!(j.rank(), 3);
    }

    #[test]
    fn jacobian_matches_float_finite_differences() {
        // independent oracle: float finite differences with step 1e-6 must
        // agree with the exact Jacobian to 1e-3 relative
        let m = model([24, 52, -8, -12, -2]);
        let j = ic_jacobian(&m).unwrap();
        let a0 = [24.0, 52.0, -8.0, -12.0, -2.0];
        let dirs = [
            [3.0, -1.0, 2.0, 0.0, 5.0],
            [1.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, -2.0, 0.0, 1.0, 7.0],
        ];
        let eps = 1e-6;
        for v in dirs {
            let jv: Vec<f64> = (0..3)
                .map(|i| {
                    (0..5)
                        .map(|k| float_oracle::rat_f64(j.at(i, k)) * v[k])
                        .sum()
                })
                .collect();
            let mut a1 = a0;
            for k in 0..5 {
                a1[k] += eps * v[k];
            }
            let c0 = float_oracle::chart_f64(a0);
            let c1 = float_oracle::chart_f64(a1);
            for i in 0..3 {
                let fd = (c1[i] - c0[i]) / eps;
                let scale = jv[i].abs().max(1.0);
                assert!(
                    (fd - jv[i]).abs() / scale < 1e-3,
                    "direction {v:?} row {i}: fd {fd} vs exact {}",
                    jv[i]
                );
            }
        }
    }

    #[test]
    fn i10_matches_float_root_product_oracle() {
        // Y12(0): a = (4536, -972, -216, 12, 6); I10 = disc(f_a) by the
        // exact path, and lc^8 * prod (r_i - r_j)^2 by floating roots
        let m = model([4536, -972, -216, 12, 6]);
        let exact = float_oracle::rat_f64(&igusa_clebsch(&m).i10);
        let coeffs = [4536.0, -972.0, -216.0, 12.0, 6.0, 1.0];
        let roots = float_oracle::durand_kerner(&coeffs);
        let mut prod = (1.0, 0.0);
        for i in 0..5 {
            for j in (i + 1)..5 {
                let d = (roots[i].0 - roots[j].0, roots[i].1 - roots[j].1);
                let d2 = (d.0 * d.0 - d.1 * d.1, 2.0 * d.0 * d.1);
                prod = (
                    prod.0 * d2.0 - prod.1 * d2.1,
                    prod.0 * d2.1 + prod.1 * d2.0,
                );
            }
        }
        assert!(prod.1.abs() / prod.0.abs() < 1e-6, "imaginary residue");
        assert!((prod.0 - exact).abs() / exact.abs() < 1e-6);
    }

    #[test]
    fn double_zero_classification() {
        let m = model([24, 52, -8, -12, -2]);
        let mk = |x: [i64; 3]| QuadraticDifferential {
            x: [big(x[0]), big(x[1]), big(x[2])],
        };
        assert_eq!(differential_double_zero(&m, &mk([0, 1, 0])), DoubleZero::Yes);
        assert_eq!(differential_double_zero(&m, &mk([1, 0, 1])), DoubleZero::No);
        assert_eq!(
            differential_double_zero(&m, &mk([0, 0, 1])),
            DoubleZero::Degenerate
        );
    }
}
