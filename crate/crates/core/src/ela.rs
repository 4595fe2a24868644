//! The eigenform location algorithm.
//!
//! Input: a weighted-projective parametrization IC_D of a Hilbert modular
//! surface, a quintic model a and a surface point b. If IC_D(b) equals
//! IC(Y(a)) in P(2,4,6,10) and the rank conditions hold, the algorithm
//! produces the line of quadratic differentials annihilating the deformation
//! directions that stay inside the moduli of real-multiplication surfaces,
//! and factors it into the pair of eigenforms.
//!
//! All steps are linear algebra over the coefficient field, so running this
//! over Q(t) certifies a whole family at once; the rank and equality
//! conditions then hold as identities of rational functions away from a
//! finite bad set that is reported with the certificate.

use crate::field::Field;
use crate::genus2::{self, QuinticModel, WeightedPoint};
use crate::matrix::Matrix;
use crate::multipoly::MultiPoly;
use crate::pairing;
use crate::ratfun::RatFun;
use crate::unipoly::UniPoly;
use crate::{Error, Result};

/// A parametrization H_D -> P(2,4,6,10) of (the generic part of) a Hilbert
/// modular surface by the (r, s)-plane, with coordinate polynomials of
/// weights (2, 4, 6, 10), plus the branch polynomial of the double cover.
#[derive(Clone, Debug)]
pub struct ICParametrization<F: Field> {
    pub disc: i64,
    pub coords: [MultiPoly<F>; 4],
    pub branch: Option<MultiPoly<F>>,
}

impl<F: Field> ICParametrization<F> {
    pub fn eval(&self, b: &[F; 2]) -> WeightedPoint<F> {
        let point = [b[0].clone(), b[1].clone()];
        WeightedPoint::new(
            self.coords[0].eval(&point),
            self.coords[1].eval(&point),
            self.coords[2].eval(&point),
            self.coords[3].eval(&point),
        )
    }

    /// Exact 3x2 Jacobian of (r, s) |-> chart(IC_D(r, s)) at b.
    /// Requires the weight-2 coordinate to be nonzero at b.
    pub fn chart_jacobian(&self, b: &[F; 2]) -> Result<Matrix<F>> {
        let point = [b[0].clone(), b[1].clone()];
        let p2 = self.coords[0].eval(&point);
        if p2.is_zero() {
            return Err(Error::Math("chart undefined: I2 coordinate vanishes at b".into()));
        }
        let exps: [u32; 3] = [2, 3, 5];
        let mut entries = Vec::with_capacity(6);
        for (idx, &e) in [1usize, 2, 3].iter().zip(exps.iter()) {
            let pk = &self.coords[*idx];
            let vk = pk.eval(&point);
            let mut p2_e1 = p2.one();
            for _ in 0..(e + 1) {
                p2_e1 = p2_e1.mul(&p2);
            }
            for var in 0..2 {
                let dpk = pk.partial_derivative(var).eval(&point);
                let dp2 = self.coords[0].partial_derivative(var).eval(&point);
                let num = dpk.mul(&p2).sub(&vk.mul(&dp2).mul(&p2.from_i64(e as i64)));
                entries.push(num.div(&p2_e1));
            }
        }
        Ok(Matrix::new(3, 2, entries))
    }

    /// Map coefficients into another field (e.g. Q into Q(t)).
    pub fn lift<G: Field>(&self, witness: &G, f: impl Fn(&F) -> G + Copy) -> ICParametrization<G> {
        ICParametrization {
            disc: self.disc,
            coords: [
                self.coords[0].map_coeffs(witness.zero(), f),
                self.coords[1].map_coeffs(witness.zero(), f),
                self.coords[2].map_coeffs(witness.zero(), f),
                self.coords[3].map_coeffs(witness.zero(), f),
            ],
            branch: self
                .branch
                .as_ref()
                .map(|b| b.map_coeffs(witness.zero(), f)),
        }
    }
}

/// How the quadratic lambda^2 - x1 lambda + x0 x2 = 0 resolved.
#[derive(Clone, PartialEq, Debug)]
pub enum Lambda<F: Field> {
    /// A nonzero root in the field (the canonical-positive one when both
    /// roots are nonzero).
    InField(F),
    /// Irreducible over the field: the monic quadratic's coefficients
    /// (x1, x0*x2) and its discriminant x1^2 - 4 x0 x2, for the caller to
    /// extend the field.
    Extension { trace: F, norm: F, disc: F },
}

/// The factored eigenform pair: coefficient pairs (c1, c0) of the forms
/// (c1 w + c0) dw/z.
pub type FormPair<F> = [(F, F); 2];

#[derive(Clone, PartialEq, Debug)]
pub enum Factorization<F: Field> {
    Pair { lambda: F, forms: FormPair<F> },
    Extension { trace: F, norm: F, disc: F },
}

/// Factor the quadratic differential with coefficients x into the pair of
/// one-forms (lambda w + x0) dw/z, (x2 w + lambda) dw/z where
/// lambda^2 + x0 x2 = x1 lambda, lambda != 0.
pub fn factor_eigenforms<F: Field>(x: &[F; 3]) -> Result<Factorization<F>> {
    if x.iter().all(|c| c.is_zero()) {
        return Err(Error::Math("cannot factor the zero differential".into()));
    }
    let [x0, x1, x2] = x;
    // roots of lambda^2 - x1 lambda + x0 x2
    let norm = x0.mul(x2);
    let four = x1.from_i64(4);
    let disc = x1.mul(x1).sub(&four.mul(&norm));
    let root = match disc.sqrt() {
        Some(r) => r,
        None => {
            return Ok(Factorization::Extension {
                trace: x1.clone(),
                norm,
                disc,
            })
        }
    };
    let two_inv = x1.from_i64(2).inv();
    let r1 = x1.add(&root).mul(&two_inv);
    let r2 = x1.sub(&root).mul(&two_inv);
    let lambda = match (r1.is_zero(), r2.is_zero()) {
        (true, true) => {
            return Ok(Factorization::Extension {
                trace: x1.clone(),
                norm,
                disc,
            })
        }
        (false, true) => r1,
        (true, false) => r2,
        (false, false) => {
            // both roots give the same unordered pair of forms (swapped);
            // pick the canonical-positive one deterministically
            if r1.is_canonical_positive() {
                r1
            } else {
                r2
            }
        }
    };
    let forms = [
        (lambda.clone(), x0.clone()),
        (x2.clone(), lambda.clone()),
    ];
    Ok(Factorization::Pair { lambda, forms })
}

#[derive(Clone, PartialEq, Debug)]
pub enum CertStatus {
    Certified,
    /// One of the input conditions failed; the payload names it.
    Rejected(String),
}

/// Machine-checkable certificate: the inputs plus everything the run
/// produced. Two runs on identical input produce identical records.
#[derive(Clone, Debug)]
pub struct CertificationRecord<F: Field> {
    pub disc: i64,
    pub a: [F; 5],
    pub b: [F; 2],
    pub status: CertStatus,
    pub ela1_ok: bool,
    pub ela2_ok: bool,
    pub x: Option<[F; 3]>,
    pub factorization: Option<Factorization<F>>,
    /// For function-field runs: a squarefree polynomial (rendered) whose
    /// zeros contain every parameter where the generic certificate can
    /// degenerate (denominators, disc(f_a), the chart normalizer).
    pub bad_set: Option<String>,
}

impl<F: Field> CertificationRecord<F> {
    pub fn is_certified(&self) -> bool {
        self.status == CertStatus::Certified
    }

    fn rejected(disc: i64, a: &QuinticModel<F>, b: &[F; 2], why: &str, ela1: bool) -> Self {
        CertificationRecord {
            disc,
            a: a.a.clone(),
            b: b.clone(),
            status: CertStatus::Rejected(why.into()),
            ela1_ok: ela1,
            ela2_ok: false,
            x: None,
            factorization: None,
            bad_set: None,
        }
    }
}

/// Run the eigenform location algorithm over any supported exact field.
///
/// Fails closed: any unmet condition yields a `Rejected` record naming the
/// condition. Hard errors are reserved for malformed input (degenerate
/// model).
pub fn ela_run<F: Field>(
    icd: &ICParametrization<F>,
    a: &QuinticModel<F>,
    b: &[F; 2],
) -> Result<CertificationRecord<F>> {
    // ELA1: IC_D(b) = IC(Y(a)) in weighted projective space; the I10
    // component of IC(Y(a)) is disc(f_a), so degeneracy falls out for free
    let icd_b = icd.eval(b);
    let ic_a = genus2::igusa_clebsch(a);
    if ic_a.i10.is_zero() {
        return Err(Error::Math("degenerate model: disc(f_a) = 0".into()));
    }
    if icd_b.is_all_zero() {
        return Ok(CertificationRecord::rejected(
            icd.disc,
            a,
            b,
            "ELA1 failed: IC_D(b) is not a projective point",
            false,
        ));
    }
    if !genus2::weighted_equal(&icd_b, &ic_a)? {
        return Ok(CertificationRecord::rejected(
            icd.disc,
            a,
            b,
            "ELA1 failed: IC_D(b) != IC(Y(a))",
            false,
        ));
    }
    // ELA2: rank M(a) = 3, rank d(chart . IC . Y)_a = 3, rank d(chart . IC_D)_b = 2
    let m = pairing::matrix_m_unchecked(a)?;
    if m.rank() != 3 {
        return Ok(CertificationRecord::rejected(
            icd.disc,
            a,
            b,
            "ELA2 failed: rank M(a) != 3",
            true,
        ));
    }
    let ja = match genus2::ic_jacobian(a) {
        Ok(j) => j,
        Err(e) => {
            return Ok(CertificationRecord::rejected(
                icd.disc,
                a,
                b,
                &format!("ELA2 failed: {e}"),
                true,
            ))
        }
    };
    if ja.rank() != 3 {
        return Ok(CertificationRecord::rejected(
            icd.disc,
            a,
            b,
            "ELA2 failed: rank d(IC o Y)_a != 3",
            true,
        ));
    }
    let jb = match icd.chart_jacobian(b) {
        Ok(j) => j,
        Err(e) => {
            return Ok(CertificationRecord::rejected(
                icd.disc,
                a,
                b,
                &format!("ELA2 failed: {e}"),
                true,
            ))
        }
    };
    if jb.rank() != 2 {
        return Ok(CertificationRecord::rejected(
            icd.disc,
            a,
            b,
            "ELA2 failed: rank d(IC_D)_b != 2",
            true,
        ));
    }
    // ELA3: 5x2 matrix L with d(chart.IC.Y)_a * L = d(chart.IC_D)_b,
    // solved with the deterministic pivot rule (free variables zero)
    let l = ja
        .solve(&jb)
        .map_err(|e| Error::Math(format!("ELA3 failed unexpectedly: {e}")))?;
    // ELA4: x spans the nullspace of (M(a) L)^T
    let ml_t = m.mul(&l).transpose();
    let kernel = ml_t.nullspace();
    if kernel.len() != 1 {
        return Ok(CertificationRecord::rejected(
            icd.disc,
            a,
            b,
            &format!("ELA4 failed: nullspace of (M L)^T has dimension {}", kernel.len()),
            true,
        ));
    }
    let x: [F; 3] = [
        kernel[0][0].clone(),
        kernel[0][1].clone(),
        kernel[0][2].clone(),
    ];
    let factorization = factor_eigenforms(&x)?;
    let status = match &factorization {
        Factorization::Pair { .. } => CertStatus::Certified,
        Factorization::Extension { disc, .. } => {
            if disc.is_zero() {
                CertStatus::Rejected("no nonzero lambda solves the factor quadratic".into())
            } else {
                // eigenforms exist over the quadratic extension
                CertStatus::Certified
            }
        }
    };
    Ok(CertificationRecord {
        disc: icd.disc,
        a: a.a.clone(),
        b: b.clone(),
        status,
        ela1_ok: true,
        ela2_ok: true,
        x: Some(x),
        factorization: Some(factorization),
        bad_set: None,
    })
}

/// Run ELA over K(t) and report the bad set: zeros of input denominators,
/// of disc(f_{a(t)}) and of the chart normalizer I2(t).
pub fn ela_run_family<F: Field>(
    icd: &ICParametrization<RatFun<F>>,
    a: &QuinticModel<RatFun<F>>,
    b: &[RatFun<F>; 2],
) -> Result<CertificationRecord<RatFun<F>>> {
    let mut record = ela_run(icd, a, b)?;
    let ic = genus2::igusa_clebsch(a);
    let mut bad = UniPoly::constant(a.witness().base_witness().one());
    for v in a.a.iter().chain(b.iter()) {
        bad = bad.mul(v.denominator());
    }
    bad = bad.mul(ic.i10.numerator()); // disc(f_a(t))
    if !ic.i2.is_zero() {
        bad = bad.mul(ic.i2.numerator());
    }
    record.bad_set = Some(bad.squarefree_part().to_string());
    Ok(record)
}

/// Outcome of certifying a one-parameter family against a plane curve
/// w_D(r, s) = 0.
#[derive(Clone, Debug)]
pub struct FamilyReport<F: Field> {
    pub record: CertificationRecord<RatFun<F>>,
    /// w_D(b(t)) reduced to zero as an exact identity.
    pub wd_identity_ok: bool,
    /// residual numerator if the identity failed
    pub wd_residual: Option<String>,
    /// the composed invariant map t -> chart(IC(Y(a(t)))) is nonconstant
    pub nonconstant_ok: bool,
    /// cardinality (with multiplicity) of the fiber of the chart map over
    /// the image of a probe parameter value; 1 is birationality evidence
    pub fiber_degree: Option<usize>,
}

impl<F: Field> FamilyReport<F> {
    pub fn is_certified(&self) -> bool {
        self.record.is_certified() && self.wd_identity_ok && self.nonconstant_ok
    }
}

/// Certify a family: ELA over K(t), the exact identity w_D(r(t), s(t)) = 0,
/// nonconstancy of the composed invariant map, and a single-fiber probe.
/// Full birationality onto the image is reported as evidence, not proved.
pub fn certify_family<F: Field>(
    icd: &ICParametrization<RatFun<F>>,
    a: &QuinticModel<RatFun<F>>,
    b: &[RatFun<F>; 2],
    w_d: &MultiPoly<F>,
    probe: &F,
) -> Result<FamilyReport<F>> {
    let record = ela_run_family(icd, a, b)?;
    // w_D(b(t)) = 0 as an identity in K(t)
    let wd_val = w_d.eval_in(&[b[0].clone(), b[1].clone()], |c| {
        RatFun::constant(c.clone())
    });
    let wd_identity_ok = wd_val.is_zero();
    let wd_residual = if wd_identity_ok {
        None
    } else {
        Some(wd_val.numerator().to_string())
    };
    // chart of the composed map as rational functions of t
    let ic_t = genus2::igusa_clebsch(a);
    let chart_t = genus2::chart(&ic_t)?;
    let nonconstant_ok = chart_t.iter().any(|c| {
        c.numerator().degree().unwrap_or(0) > 0 || c.denominator().degree().unwrap_or(0) > 0
    });
    // fiber probe: the ideal of { t : chart(t) = chart(probe) } is generated
    // by the gcd of the numerators of chart_i(t) - chart_i(probe)
    let fiber_degree = if nonconstant_ok {
        fiber_cardinality(&chart_t, probe)
    } else {
        None
    };
    Ok(FamilyReport {
        record,
        wd_identity_ok,
        wd_residual,
        nonconstant_ok,
        fiber_degree,
    })
}

fn fiber_cardinality<F: Field>(chart_t: &[RatFun<F>; 3], probe: &F) -> Option<usize> {
    let mut gcd_poly: Option<UniPoly<F>> = None;
    for c in chart_t {
        let v0 = c.eval_at(probe)?;
        let diff = c.sub(&RatFun::constant(v0));
        if diff.is_zero() {
            continue;
        }
        let num = diff.numerator().clone();
        gcd_poly = Some(match gcd_poly {
            None => num,
            Some(g) => g.gcd(&num),
        });
    }
    gcd_poly.map(|g| g.degree().unwrap_or(0))
}

/// Specialize a K(t) certification input at t = t0 and re-run pointwise.
/// Returns None when t0 hits the bad set (a denominator or disc vanishes).
pub fn specialize_and_run<F: Field>(
    icd_base: &ICParametrization<F>,
    a: &QuinticModel<RatFun<F>>,
    b: &[RatFun<F>; 2],
    t0: &F,
) -> Option<Result<CertificationRecord<F>>> {
    let mut a0: Vec<F> = Vec::with_capacity(5);
    for v in a.a.iter() {
        a0.push(v.eval_at(t0)?);
    }
    let b0 = [b[0].eval_at(t0)?, b[1].eval_at(t0)?];
    let model = QuinticModel::new([
        a0[0].clone(),
        a0[1].clone(),
        a0[2].clone(),
        a0[3].clone(),
        a0[4].clone(),
    ]);
    if model.is_degenerate() {
        return None;
    }
    Some(ela_run(icd_base, &model, &b0))
}

#[cfg(test)]
mod tests {
    use crate::field::Rat;
    use super::*;
    use crate::field::big;
    
    #[test]
    fn factorization_cases() {
        let x = [big(0), big(1), big(0)];
        match factor_eigenforms(&x).unwrap() {
            Factorization::Pair { lambda, forms } => {
                assert_eq!(lambda, big(1));
                assert_eq!(forms[0], (big(1), big(0))); // w * dw/z
                assert_eq!(forms[1], (big(0), big(1))); // dw/z
            }
            _ => panic!("expected a pair"),
        }
        // (1, 0, -1): lambda^2 - 1 = 0, both roots nonzero, pick +1
        let x = [big(1), big(0), big(-1)];
        match factor_eigenforms(&x).unwrap() {
            Factorization::Pair { lambda, forms } => {
                assert_eq!(lambda, big(1));
                assert_eq!(forms[0], (big(1), big(1)));
                assert_eq!(forms[1], (big(-1), big(1)));
            }
            _ => panic!("expected a pair"),
        }
        // (1, 1, 1): lambda^2 - lambda + 1 irreducible over Q, disc -3
        let x = [big(1), big(1), big(1)];
        match factor_eigenforms(&x).unwrap() {
            Factorization::Extension { trace, norm, disc } => {
                assert_eq!(trace, big(1));
                assert_eq!(norm, big(1));
                assert_eq!(disc, big(-3));
            }
            _ => panic!("expected extension"),
        }
        // zero differential errors
        assert!(factor_eigenforms(&[big(0), big(0), big(0)]).is_err());
    }

    #[test]
    fn product_of_returned_forms_is_lambda_qx() {
        // (c1 w + c0)(d1 w + d0) = lambda (x2 w^2 + x1 w + x0)
        let x = [big(3), big(4), big(1)];
        if let Factorization::Pair { lambda, forms } = factor_eigenforms(&x).unwrap() {
            let [(c1, c0), (d1, d0)] = forms;
            assert_eq!(&c1 * &d1, &lambda * &x[2]);
            assert_eq!(&c1 * &d0 + &c0 * &d1, &lambda * &x[1]);
            assert_eq!(&c0 * &d0, &lambda * &x[0]);
        } else {
            panic!("expected pair");
        }
    }

    #[test]
    fn scale_invariance_of_the_form_pair() {
        // rescaling x by mu != 0 rescales the root lines but not the
        // unordered pair of lines {x2 w + lambda, lambda w + x0} in P^1
        let x = [big(3), big(4), big(1)];
        let mu = big(7);
        let xs = [&x[0] * &mu, &x[1] * &mu, &x[2] * &mu];
        let f1 = factor_eigenforms(&x).unwrap();
        let f2 = factor_eigenforms(&xs).unwrap();
        let lines = |f: &Factorization<Rat>| -> Vec<(Rat, Rat)> {
            match f {
                Factorization::Pair { forms, .. } => {
                    let mut v: Vec<(Rat, Rat)> = forms
                        .iter()
                        .map(|(c1, c0)| {
                            if c1.is_zero() {
                                (big(0), big(1))
                            } else {
                                (big(1), c0 / c1)
                            }
                        })
                        .collect();
                    v.sort_by_key(|p| format!("{p:?}"));
                    v
                }
                _ => panic!("expected pair"),
            }
        };
        assert_eq!(lines(&f1), lines(&f2));
    }
}
