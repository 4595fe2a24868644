//! Cusps of Weierstrass curves: splitting prototypes, spin invariants,
//! stable limits of the invariant map and cuspidal polynomials.

use crate::ela::CertificationRecord;
use crate::field::{Field, Rat};
use crate::genus2::{self, WeightedPoint};
use crate::quad::Quad;
use crate::ratfun::RatFun;
use crate::unipoly::UniPoly;
use crate::{Error, Result};

/// A splitting prototype (a, b, c, e) of discriminant D = e^2 + 4bc with
///   0 <= a < gcd(b, c),  c + e < b,  b > 0,  c > 0,  gcd(a, b, c, e) = 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SplittingPrototype {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e: i64,
    pub disc: i64,
}

impl SplittingPrototype {
    pub fn is_valid(&self) -> bool {
        let SplittingPrototype { a, b, c, e, disc } = *self;
        disc == e * e + 4 * b * c
            && b > 0
            && c > 0
            && c + e < b
            && (0..gcd(b, c)).contains(&a)
            && gcd(gcd(a, b), gcd(c, e.abs())) == 1
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// All splitting prototypes of discriminant D, in lexicographic order of
/// (e, b, c, a). D must be positive, congruent to 0 or 1 mod 4, nonsquare.
pub fn enumerate_prototypes(d: i64) -> Result<Vec<SplittingPrototype>> {
    if !crate::quad::valid_disc(d) {
        return Err(Error::Math(format!(
            "invalid discriminant {d}: need D > 0, D = 0,1 mod 4, nonsquare"
        )));
    }
    let mut out = Vec::new();
    let parity = d.rem_euclid(2);
    // all e with e^2 < D and e = D mod 2 (D nonsquare, so isqrt(D)^2 < D)
    let bound = d.isqrt();
    let mut e = if bound.rem_euclid(2) == parity {
        -bound
    } else {
        -bound + 1
    };
    while e * e < d {
        let rest = d - e * e; // = 4bc
        debug_assert_eq!(rest % 4, 0);
        let bc = rest / 4;
        let mut b = 1;
        while b <= bc {
            if bc % b == 0 {
                let c = bc / b;
                if c + e < b {
                    for a in 0..gcd(b, c) {
                        let p = SplittingPrototype { a, b, c, e, disc: d };
                        if gcd(gcd(a, b), gcd(c, e.abs())) == 1 {
                            debug_assert!(p.is_valid());
                            out.push(p);
                        }
                    }
                }
            }
            b += 1;
        }
        e += 2;
    }
    out.sort();
    Ok(out)
}

/// Spin invariant (e - f)/2 + (c + 1)(a + b + ab) mod 2 for D = 1 mod 8,
/// with f the conductor (1 for fundamental discriminants).
pub fn spin(p: &SplittingPrototype, conductor: i64) -> Result<u8> {
    if p.disc.rem_euclid(8) != 1 {
        return Err(Error::Math(format!(
            "spin undefined: D = {} is not 1 mod 8",
            p.disc
        )));
    }
    assert!(conductor.rem_euclid(2) == 1, "conductor must be odd");
    let val = (p.e - conductor) / 2 + (p.c + 1) * (p.a + p.b + p.a * p.b);
    Ok(val.rem_euclid(2) as u8)
}

/// The stable limit of the invariants along a degeneration to the cusp of
/// prototype p, over Q(sqrt(D)):
///
///   I2  = 12b^4 - 8b^3 c + 12b^2 c^2 - 4b^2 e^2 + 24 b c e^2 + 6 e^4
///         + e (3e^2 + 3D - 4b^2) sqrt(D)
///   I4  = b^4 (e + sqrt(D))^4
///   I6  = I4 * (4b^4 - 4b^3 c + 4b^2 c^2 - 2b^2 e^2 + 8 b c e^2 + 2 e^4
///         + e (e^2 + D - 2b^2) sqrt(D))
///   I10 = 0
///
/// The first prototype coordinate a does not enter.
pub fn prototype_limit(p: &SplittingPrototype) -> WeightedPoint<Quad> {
    let d = p.disc;
    let q = |n: i64| Quad::rational(Rat::from_bigint(n.into()));
    let sqrt_d = Quad::sqrt_disc(d);
    let (b, c, e) = (p.b, p.c, p.e);
    let i2 = q(12 * b.pow(4) - 8 * b.pow(3) * c + 12 * b.pow(2) * c.pow(2)
        - 4 * b.pow(2) * e.pow(2)
        + 24 * b * c * e.pow(2)
        + 6 * e.pow(4))
    .add(&q(e * (3 * e.pow(2) + 3 * d - 4 * b.pow(2))).mul(&sqrt_d));
    let e_plus = q(e).add(&sqrt_d);
    let e_plus_2 = e_plus.mul(&e_plus);
    let i4 = q(b.pow(4)).mul(&e_plus_2).mul(&e_plus_2);
    let inner = q(4 * b.pow(4) - 4 * b.pow(3) * c + 4 * b.pow(2) * c.pow(2)
        - 2 * b.pow(2) * e.pow(2)
        + 8 * b * c * e.pow(2)
        + 2 * e.pow(4))
    .add(&q(e * (e.pow(2) + d - 2 * b.pow(2))).mul(&sqrt_d));
    let i6 = i4.mul(&inner);
    WeightedPoint::new(i2, i4, i6, q(0))
}

/// All prototypes of discriminant D whose stable limit equals P in weighted
/// projective space. The first coordinate a never affects the limit, so
/// matches come in blocks sharing (b, c, e).
pub fn match_prototypes(d: i64, point: &WeightedPoint<Quad>) -> Result<Vec<SplittingPrototype>> {
    let mut out = Vec::new();
    for p in enumerate_prototypes(d)? {
        let limit = prototype_limit(&p);
        if genus2::weighted_equal(&limit, point)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// The invariants along a certified Q(t)-family, as reduced rational
/// functions of t.
pub fn family_invariants(
    record: &CertificationRecord<RatFun<Rat>>,
) -> [RatFun<Rat>; 4] {
    let model = crate::genus2::QuinticModel::new(record.a.clone());
    let ic = genus2::igusa_clebsch(&model);
    [ic.i2, ic.i4, ic.i6, ic.i10]
}

/// The cuspidal polynomial of a certified genus-zero family: the monic
/// squarefree polynomial vanishing exactly at the affine parameters where
/// I2^5 / I10 has a pole.
pub fn cuspidal_polynomial(
    record: &CertificationRecord<RatFun<Rat>>,
) -> Result<UniPoly<Rat>> {
    if !record.is_certified() {
        return Err(Error::Math("family is not certified".into()));
    }
    let [i2, i4, i6, i10] = family_invariants(record);
    if i10.is_zero() {
        return Err(Error::Math("family is degenerate: I10 = 0 identically".into()));
    }
    if i2.is_zero() {
        return Err(Error::Math("family has I2 = 0 identically".into()));
    }
    let constant = |f: &RatFun<Rat>| {
        f.numerator().degree().unwrap_or(0) == 0 && f.denominator().degree().unwrap_or(0) == 0
    };
    if constant(&i2) && constant(&i4) && constant(&i6) && constant(&i10) {
        return Err(Error::Math("constant family has no cuspidal polynomial".into()));
    }
    let mut ratio = i2.clone();
    for _ in 0..4 {
        ratio = ratio.mul(&i2);
    }
    let ratio = ratio.div(&i10); // I2^5 / I10, reduced
    let den = ratio.denominator();
    if den.degree().unwrap_or(0) == 0 {
        // no affine poles at all
        return Ok(UniPoly::constant(Rat::from_int(1)));
    }
    Ok(den.squarefree_part())
}

/// The weighted-projective limit of the family invariants as t -> infinity:
/// with m = max_k deg(I_k(t)) / w_k over the weights w = (2,4,6,10), the
/// limit representative is the coefficient of t^(w_k m) in I_k (zero when
/// the degree falls short). Inputs must be polynomial in t, so the family's
/// common denominator is cleared first by scaling with its lcm.
pub fn stable_limit_at_infinity(
    record: &CertificationRecord<RatFun<Rat>>,
) -> Result<WeightedPoint<Rat>> {
    let inv = family_invariants(record);
    // clear denominators weight-consistently: replace I_k by I_k * L^(w_k)
    // where L is the lcm of all denominators; this moves along the weighted
    // orbit over Q(t) and cannot change the projective limit
    let mut lcm = UniPoly::constant(Rat::from_int(1));
    for f in &inv {
        let den = f.denominator();
        let g = lcm.gcd(den);
        lcm = lcm.mul(&den.div_rem(&g).0);
    }
    let weights = [2u32, 4, 6, 10];
    let mut polys: Vec<UniPoly<Rat>> = Vec::with_capacity(4);
    for (f, &w) in inv.iter().zip(weights.iter()) {
        let mut scaled = f.clone();
        let lfun = RatFun::from_poly(lcm.clone(), Rat::from_int(0));
        for _ in 0..w {
            scaled = scaled.mul(&lfun);
        }
        let p = scaled
            .as_polynomial()
            .cloned()
            .ok_or_else(|| Error::Math("could not clear denominators".into()))?;
        polys.push(p);
    }
    // m = max over k of deg(I_k)/w_k, as an exact fraction
    let (mut num, mut den) = (0i64, 1i64);
    for (p, &w) in polys.iter().zip(weights.iter()) {
        if let Some(d) = p.degree() {
            if !p.is_zero() && (d as i64) * den > num * (w as i64) {
                num = d as i64;
                den = w as i64;
            }
        }
    }
    let zero = Rat::from_int(0);
    let coords: Vec<Rat> = polys
        .iter()
        .zip(weights.iter())
        .map(|(p, &w)| {
            let target = num * (w as i64);
            if target % den != 0 {
                return zero.clone();
            }
            p.coeff_or_zero((target / den) as usize, &zero)
        })
        .collect();
    let point = WeightedPoint::new(
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
        coords[3].clone(),
    );
    if point.is_all_zero() {
        return Err(Error::Math("stable limit undefined: all leading terms vanish".into()));
    }
    Ok(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::big;

    #[test]
    fn prototypes_of_disc_12() {
        let ps = enumerate_prototypes(12).unwrap();
        let tuples: Vec<(i64, i64, i64, i64)> =
            ps.iter().map(|p| (p.a, p.b, p.c, p.e)).collect();
        assert_eq!(
            tuples,
            vec![(0, 1, 2, -2), (0, 2, 1, -2), (0, 3, 1, 0)]
        );
    }

    #[test]
    fn prototypes_of_disc_44_match_the_table() {
        let ps = enumerate_prototypes(44).unwrap();
        assert_eq!(ps.len(), 9);
        let tuples: Vec<(i64, i64, i64, i64)> =
            ps.iter().map(|p| (p.a, p.b, p.c, p.e)).collect();
        for expected in [(0, 11, 1, 0), (0, 7, 1, 4), (0, 7, 1, -4), (0, 5, 2, -2)] {
            assert!(tuples.contains(&expected), "missing {expected:?}");
        }
    }

    #[test]
    fn seventeen_prototypes_and_spins() {
        let ps = enumerate_prototypes(17).unwrap();
        assert_eq!(ps.len(), 6);
        let even: Vec<_> = ps.iter().filter(|p| spin(p, 1).unwrap() == 0).collect();
        let odd: Vec<_> = ps.iter().filter(|p| spin(p, 1).unwrap() == 1).collect();
        assert_eq!((even.len(), odd.len()), (3, 3));
        let p = SplittingPrototype { a: 0, b: 4, c: 1, e: 1, disc: 17 };
        assert_eq!(spin(&p, 1).unwrap(), 0);
        let p = SplittingPrototype { a: 0, b: 4, c: 1, e: -1, disc: 17 };
        assert_eq!(spin(&p, 1).unwrap(), 1);
    }

    #[test]
    fn spin_undefined_off_the_split_case() {
        let p = SplittingPrototype { a: 0, b: 3, c: 1, e: 0, disc: 12 };
        assert!(spin(&p, 1).is_err());
    }

    #[test]
    fn invalid_discriminants_rejected() {
        assert!(enumerate_prototypes(16).is_err()); // square
        assert!(enumerate_prototypes(7).is_err()); // 3 mod 4
        assert!(enumerate_prototypes(-4).is_err());
    }

    #[test]
    fn limit_of_the_e0_prototype() {
        let p = SplittingPrototype { a: 0, b: 1, c: 3, e: 0, disc: 12 };
        // not a valid prototype (c + e < b fails) but the limit formula is
        // still the displayed tuple; the valid one with the same limit shape:
        let limit = prototype_limit(&p);
        assert!(limit.i2.is_rational() && limit.i4.is_rational() && limit.i6.is_rational());
        assert_eq!(limit.i2.u, big(96));
        assert_eq!(limit.i4.u, big(144));
        assert_eq!(limit.i6.u, big(144 * 28));
        assert!(limit.i10.is_zero());
    }

    #[test]
    fn e_zero_limits_are_rational() {
        for p in enumerate_prototypes(44).unwrap() {
            let l = prototype_limit(&p);
            assert!(l.i10.is_zero());
            if p.e == 0 {
                assert!(l.i2.is_rational() && l.i4.is_rational() && l.i6.is_rational());
            }
        }
    }

    #[test]
    fn match_prototypes_ignores_a() {
        // D = 17 has prototypes (0,2,2,-1) and (1,2,2,-1): same limit
        let p0 = SplittingPrototype { a: 0, b: 2, c: 2, e: -1, disc: 17 };
        let matches = match_prototypes(17, &prototype_limit(&p0)).unwrap();
        let tuples: Vec<(i64, i64, i64, i64)> =
            matches.iter().map(|p| (p.a, p.b, p.c, p.e)).collect();
        assert!(tuples.contains(&(0, 2, 2, -1)));
        assert!(tuples.contains(&(1, 2, 2, -1)));
    }

    #[test]
    fn nondegenerate_point_matches_nothing() {
        // a weighted point with I10 != 0 cannot be a stable limit
        let pt = WeightedPoint::new(
            Quad::rational(big(1)),
            Quad::rational(big(1)),
            Quad::rational(big(1)),
            Quad::rational(big(1)),
        );
        assert!(match_prototypes(12, &pt).unwrap().is_empty());
    }
}
