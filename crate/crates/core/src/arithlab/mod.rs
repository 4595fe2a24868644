//! Arithmetic of integral models of Weierstrass curves: the bad-prime bound
//! N(D), singular primes by the discriminant and elimination routes, the
//! elliptic group law, and divisor-support tools.

pub mod ec;
pub mod factorint;
pub mod groebner;
pub mod polyfactor;

pub use ec::{EcPoint, EllipticCurve};
pub use factorint::{prime_support, prime_support_exact, PrimeSupport};

use crate::field::{Field, Rat};
use crate::fp::Fp;
use crate::multipoly::MultiPoly;
use crate::quad::Quad;
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// N(D) = 2 D prod (D - e^2)/4 over e > 0, e = D mod 2, e^2 < D.
pub fn n_of_d(d: i64) -> Result<BigInt> {
    if !crate::quad::valid_disc(d) {
        return Err(Error::Math(format!("invalid discriminant {d}")));
    }
    let mut n = BigInt::from(2) * BigInt::from(d);
    let mut e = if d % 2 == 0 { 2 } else { 1 };
    while e * e < d {
        n *= BigInt::from((d - e * e) / 4);
        e += 2;
    }
    Ok(n)
}

/// A plane model of a Weierstrass curve over Z (or Z[sqrt(D)] for the
/// hyperelliptic kind): either y^2 + h(x) y + f(x) = 0, or a plane quartic
/// g(x, y) = 0 that is smooth over Q.
#[derive(Clone, Debug)]
pub enum PlaneCurveModel {
    Hyperelliptic {
        h: UniPoly<Quad>,
        f: UniPoly<Quad>,
    },
    Quartic {
        g: MultiPoly<Rat>,
    },
}

fn quad_is_integral(p: &UniPoly<Quad>) -> bool {
    p.coeffs()
        .iter()
        .all(|c| c.u.denom().is_one() && c.v.denom().is_one())
}

/// Report from a singular-prime computation.
#[derive(Clone, Debug, Default)]
pub struct SingularPrimesReport {
    pub primes: BTreeSet<u64>,
    /// rational primes dividing the field discriminant D (they ramify in
    /// Q(sqrt(D))); set only for models with irrational coefficients
    pub ramified_flagged: BTreeSet<u64>,
    /// composite cofactor that resisted factoring, if any
    pub unresolved: Option<String>,
}

/// Singular primes of a hyperelliptic model: the primes dividing
/// disc(h^2 - 4f). Over Q(sqrt(D)) the discriminant is an algebraic
/// number; the reported primes divide its absolute norm, and rational
/// primes dividing D are flagged as ramified.
pub fn singular_primes_hyperelliptic(h: &UniPoly<Quad>, f: &UniPoly<Quad>) -> Result<SingularPrimesReport> {
    if !quad_is_integral(h) || !quad_is_integral(f) {
        return Err(Error::Math("non-integral hyperelliptic model".into()));
    }
    let four = UniPoly::constant(Quad::rational(Rat::from_int(4)));
    let poly = h.mul(h).sub(&four.mul(f));
    let disc = poly.discriminant().map_err(Error::Math)?;
    if disc.is_zero() {
        return Err(Error::Math("degenerate model: disc(h^2 - 4f) = 0".into()));
    }
    let mut report = SingularPrimesReport::default();
    let norm: Rat = disc.norm();
    debug_assert!(norm.denom().is_one());
    let support = prime_support(norm.numer());
    report.primes = support.primes;
    report.unresolved = support.unresolved.map(|u| u.to_string());
    if !disc.is_rational() {
        let field_disc = disc.disc();
        if field_disc > 0 {
            for p in prime_support(&BigInt::from(field_disc)).primes {
                report.ramified_flagged.insert(p);
            }
        }
    }
    Ok(report)
}

/// The three affine charts g(x,y,1), g(x,1,z), g(1,y,z) of the projective
/// closure of a degree-4 plane curve.
pub fn quartic_charts(g: &MultiPoly<Rat>) -> Result<[MultiPoly<Rat>; 3]> {
    assert_eq!(g.arity(), 2);
    let zero = Rat::from_int(0);
    let total = 4u32;
    if g.total_degree() > total {
        return Err(Error::Math("not a quartic: total degree exceeds 4".into()));
    }
    // homogenize to X^i Y^j Z^(4-i-j), then de-homogenize in each chart
    let mut chart_xy = MultiPoly::zero(2, zero.clone()); // (x, y), Z = 1
    let mut chart_xz = MultiPoly::zero(2, zero.clone()); // (x, z), Y = 1
    let mut chart_yz = MultiPoly::zero(2, zero.clone()); // (y, z), X = 1
    for (e, c) in g.terms() {
        let (i, j) = (e[0], e[1]);
        let k = total - i - j;
        chart_xy.add_term(vec![i, j], c.clone());
        chart_xz.add_term(vec![i, k], c.clone());
        chart_yz.add_term(vec![j, k], c.clone());
    }
    Ok([chart_xy, chart_xz, chart_yz])
}

fn poly_to_fp(g: &MultiPoly<Rat>, p: u64) -> MultiPoly<Fp> {
    let witness = Fp::new(0, p);
    g.map_coeffs(witness, |c| {
        debug_assert!(c.denom().is_one());
        Fp::from_bigint(c.numer(), p)
    })
}

/// Resultant of two bivariate integer polynomials with respect to the
/// second variable, as a univariate polynomial in the first.
fn resultant_bivariate(
    a: &MultiPoly<Rat>,
    b: &MultiPoly<Rat>,
    eliminate: usize,
) -> Result<UniPoly<Rat>> {
    // present both as UniPoly in `eliminate` with UniPoly coefficients in
    // the other variable, i.e. over the field Q(x) embedded as RatFun
    use crate::ratfun::RatFun;
    let zero = Rat::from_int(0);
    let keep = 1 - eliminate;
    let to_tower = |g: &MultiPoly<Rat>| -> UniPoly<RatFun<Rat>> {
        let deg = g.degree_in(eliminate) as usize;
        let mut coeffs: Vec<UniPoly<Rat>> = vec![UniPoly::zero(); deg + 1];
        for (e, c) in g.terms() {
            let d = e[eliminate] as usize;
            let inner = UniPoly::monomial(c.clone(), e[keep] as usize);
            coeffs[d] = coeffs[d].add(&inner);
        }
        UniPoly::from_coeffs(
            coeffs
                .into_iter()
                .map(|p| RatFun::from_poly(p, zero.clone()))
                .collect(),
        )
    };
    let ra = to_tower(a);
    let rb = to_tower(b);
    let res = ra.resultant(&rb).map_err(Error::Math)?;
    let den_deg = res.denominator().degree().unwrap_or(0);
    if den_deg != 0 {
        return Err(Error::Math("resultant denominator not constant".into()));
    }
    Ok(res.numerator().clone())
}

fn integer_content_primes(p: &UniPoly<Rat>, acc: &mut PrimeSupport) {
    for c in p.coeffs() {
        debug_assert!(c.denom().is_one());
        let _ = c;
    }
    // content = gcd of numerators
    use num_integer::Integer;
    let mut g = BigInt::from(0);
    for c in p.coeffs() {
        g = g.gcd(c.numer());
    }
    if g.abs() > BigInt::one() {
        let s = prime_support(&g);
        acc.primes.extend(s.primes);
        if let Some(u) = s.unresolved {
            acc.unresolved = Some(match acc.unresolved.take() {
                None => u,
                Some(v) => v * u,
            });
        }
    }
}

/// Candidate singular primes of one affine chart from iterated resultants:
/// the gcd over elimination orders of Res(Res(g, g_y), Res(g, g_x)) plus
/// the integer contents encountered along the way. Every singular prime of
/// the chart divides the candidate set; spurious candidates are weeded out
/// by the per-prime ideal check.
fn chart_candidate_primes(g: &MultiPoly<Rat>) -> Result<PrimeSupport> {
    let gx = g.partial_derivative(0);
    let gy = g.partial_derivative(1);
    let mut acc = PrimeSupport::default();
    let mut gcd_of_orders: Option<BigInt> = None;
    for eliminate in [1usize, 0] {
        let r1 = resultant_bivariate(g, &gy, eliminate)?;
        let r2 = resultant_bivariate(g, &gx, eliminate)?;
        if r1.is_zero() || r2.is_zero() {
            return Err(Error::Math("singular generic fiber: iterated resultant vanished".into()));
        }
        integer_content_primes(&r1, &mut acc);
        integer_content_primes(&r2, &mut acc);
        let res = r1.resultant(&r2).map_err(Error::Math)?;
        debug_assert!(res.denom().is_one());
        let val = res.numer().clone();
        if val.is_zero() {
            return Err(Error::Math("singular generic fiber: common factor across charts".into()));
        }
        use num_integer::Integer;
        gcd_of_orders = Some(match gcd_of_orders {
            None => val,
            Some(old) => old.gcd(&val),
        });
    }
    if let Some(v) = gcd_of_orders {
        let s = prime_support(&v);
        acc.primes.extend(s.primes);
        if let Some(u) = s.unresolved {
            acc.unresolved = Some(match acc.unresolved.take() {
                None => u,
                Some(w) => w * u,
            });
        }
    }
    Ok(acc)
}

/// Is the chart singular over the algebraic closure of F_p? Decided
/// rigorously by Buchberger: singular iff 1 is NOT in (g, g_x, g_y).
pub fn chart_singular_mod_p(g: &MultiPoly<Rat>, p: u64) -> bool {
    let gp = poly_to_fp(g, p);
    let gens = [
        gp.clone(),
        gp.partial_derivative(0),
        gp.partial_derivative(1),
    ];
    !groebner::ideal_is_trivial(&gens)
}

/// An explicit singular point over F_(p^k), as a witness that the
/// Buchberger verdict is sound: the minimal polynomial m(x) of the
/// x-coordinate and the minimal polynomial of the y-coordinate over
/// F_p[x]/(m).
#[derive(Clone, Debug)]
pub struct SingularWitness {
    pub p: u64,
    pub x_min_poly: String,
    pub y_min_poly: String,
    pub extension_degree: u32,
}

/// Search for an explicit common zero of (g, g_x, g_y) over extensions of
/// F_p of degree <= max_degree, via factorization of Res_y(g, g_y).
pub fn singular_witness(
    g: &MultiPoly<Rat>,
    p: u64,
    max_degree: u32,
) -> Result<Option<SingularWitness>> {
    let gp = poly_to_fp(g, p);
    let gens = [
        gp.clone(),
        gp.partial_derivative(0),
        gp.partial_derivative(1),
    ];
    // eliminate y between pairs of generators over F_p
    let rxy = fp_resultant_bivariate(&gens[0], &gens[2], 1, p)
        .or_else(|| fp_resultant_bivariate(&gens[0], &gens[1], 1, p))
        .ok_or_else(|| Error::Math("degenerate chart mod p".into()))?;
    if rxy.is_zero() {
        // the two generators share a curve component mod p; fall back to
        // scanning x in F_p itself
        return Ok(scan_witness_over_prime_field(&gens, p));
    }
    for (mx, _) in polyfactor::factor(&rxy) {
        let k = mx.degree().unwrap_or(0) as u32;
        if k == 0 || k > max_degree {
            continue;
        }
        // work in F = F_p[x]/(m): check gcd of the generators as
        // polynomials in y over F
        if let Some(ydeg) = common_root_degree_over_extension(&gens, &mx, p) {
            if k * ydeg <= max_degree.max(1) {
                return Ok(Some(SingularWitness {
                    p,
                    x_min_poly: mx.to_string(),
                    y_min_poly: format!("degree {ydeg} factor over F_p[x]/(m)"),
                    extension_degree: k * ydeg,
                }));
            }
        }
    }
    Ok(None)
}

fn scan_witness_over_prime_field(gens: &[MultiPoly<Fp>; 3], p: u64) -> Option<SingularWitness> {
    for xv in 0..p.min(5000) {
        for yv in 0..p.min(5000) {
            let pt = [Fp::new(xv as i64, p), Fp::new(yv as i64, p)];
            if gens.iter().all(|g| g.eval(&pt).is_zero()) {
                return Some(SingularWitness {
                    p,
                    x_min_poly: format!("x - {xv}"),
                    y_min_poly: format!("y - {yv}"),
                    extension_degree: 1,
                });
            }
        }
    }
    None
}

/// Resultant of two bivariate polynomials over F_p eliminating `eliminate`;
/// None if either is zero.
fn fp_resultant_bivariate(
    a: &MultiPoly<Fp>,
    b: &MultiPoly<Fp>,
    eliminate: usize,
    p: u64,
) -> Option<UniPoly<Fp>> {
    use crate::ratfun::RatFun;
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let keep = 1 - eliminate;
    let zero = Fp::new(0, p);
    let to_tower = |g: &MultiPoly<Fp>| -> UniPoly<RatFun<Fp>> {
        let deg = g.degree_in(eliminate) as usize;
        let mut coeffs: Vec<UniPoly<Fp>> = vec![UniPoly::zero(); deg + 1];
        for (e, c) in g.terms() {
            let d = e[eliminate] as usize;
            coeffs[d] = coeffs[d].add(&UniPoly::monomial(*c, e[keep] as usize));
        }
        UniPoly::from_coeffs(
            coeffs
                .into_iter()
                .map(|q| RatFun::from_poly(q, zero))
                .collect(),
        )
    };
    let res = to_tower(a).resultant(&to_tower(b)).ok()?;
    res.as_polynomial().cloned()
}

/// True iff (g, g_x, g_y) has a common y-root over F_p[x]/(mx); returns the
/// degree of the common factor in y.
fn common_root_degree_over_extension(
    gens: &[MultiPoly<Fp>; 3],
    mx: &UniPoly<Fp>,
    _p: u64,
) -> Option<u32> {
    let field = extfield::ExtFieldCtx::new(mx.clone());
    let alpha = field.generator();
    // each generator becomes univariate in y over F = F_p[x]/(mx) by
    // substituting x = alpha
    let lift = |g: &MultiPoly<Fp>| -> UniPoly<extfield::ExtField> {
        let dy = g.degree_in(1) as usize;
        let mut coeffs = vec![alpha.zero(); dy + 1];
        for (e, c) in g.terms() {
            let mut xk = alpha.one();
            for _ in 0..e[0] {
                xk = xk.mul(&alpha);
            }
            coeffs[e[1] as usize] =
                coeffs[e[1] as usize].add(&xk.mul(&field.embed(*c)));
        }
        UniPoly::from_coeffs(coeffs)
    };
    let g0 = lift(&gens[0]);
    let g1 = lift(&gens[1]);
    let g2 = lift(&gens[2]);
    let mut g = g0;
    for other in [g1, g2] {
        if other.is_zero() {
            continue;
        }
        g = if g.is_zero() { other } else { g.gcd(&other) };
    }
    match g.degree() {
        Some(d) if d >= 1 => Some(d as u32),
        _ => None,
    }
}

mod extfield {
    //! The field F_p[x]/(m) for irreducible m, as a [`Field`] so the
    //! generic polynomial gcd machinery applies verbatim.

    use crate::field::{Field, Rat};
    use crate::fp::Fp;
    use crate::unipoly::UniPoly;
        use std::fmt;
    use std::rc::Rc;

    pub struct ExtFieldCtx {
        modulus: Rc<UniPoly<Fp>>,
    }

    impl ExtFieldCtx {
        pub fn new(modulus: UniPoly<Fp>) -> Self {
            assert!(modulus.degree().unwrap_or(0) >= 1);
            ExtFieldCtx {
                modulus: Rc::new(modulus.monic()),
            }
        }

        pub fn embed(&self, c: Fp) -> ExtField {
            ExtField {
                rep: UniPoly::constant(c),
                modulus: self.modulus.clone(),
            }
        }

        pub fn generator(&self) -> ExtField {
            let one = self.modulus.leading().unwrap().one();
            ExtField {
                rep: UniPoly::monomial(one, 1).rem(&self.modulus),
                modulus: self.modulus.clone(),
            }
        }
    }

    #[derive(Clone, Debug)]
    pub struct ExtField {
        rep: UniPoly<Fp>,
        modulus: Rc<UniPoly<Fp>>,
    }

    impl PartialEq for ExtField {
        fn eq(&self, other: &Self) -> bool {
            self.rep == other.rep
        }
    }

    impl fmt::Display for ExtField {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.rep)
        }
    }

    impl ExtField {
        fn with(&self, rep: UniPoly<Fp>) -> Self {
            ExtField {
                rep,
                modulus: self.modulus.clone(),
            }
        }

        fn fp_witness(&self) -> Fp {
            self.modulus.leading().unwrap().zero()
        }
    }

    impl Field for ExtField {
        fn zero(&self) -> Self {
            self.with(UniPoly::zero())
        }
        fn one(&self) -> Self {
            self.with(UniPoly::constant(self.fp_witness().one()))
        }
        fn is_zero(&self) -> bool {
            self.rep.is_zero()
        }
        fn add(&self, rhs: &Self) -> Self {
            self.with(self.rep.add(&rhs.rep))
        }
        fn neg(&self) -> Self {
            self.with(self.rep.neg())
        }
        fn mul(&self, rhs: &Self) -> Self {
            self.with(self.rep.mul(&rhs.rep).rem(&self.modulus))
        }
        fn inv(&self) -> Self {
            let inv = self
                .rep
                .inv_mod(&self.modulus)
                .expect("modulus is irreducible");
            self.with(inv)
        }
        fn from_i64(&self, n: i64) -> Self {
            self.with(UniPoly::constant(self.fp_witness().from_i64(n)))
        }
        fn from_rational(&self, q: &Rat) -> Self {
            self.with(UniPoly::constant(self.fp_witness().from_rational(q)))
        }
        fn sqrt(&self) -> Option<Self> {
            None // not needed in this field
        }
        fn is_canonical_positive(&self) -> bool {
            !self.is_zero()
        }
    }
}

/// Singular primes of a plane quartic by the elimination route: candidates
/// from iterated resultants over all three charts (2 and 3 always tested),
/// each candidate confirmed or rejected by the Buchberger ideal check.
pub fn singular_primes_quartic(g: &MultiPoly<Rat>) -> Result<SingularPrimesReport> {
    let charts = quartic_charts(g)?;
    // reject models that are singular over Q: the affine singular ideal
    // must be trivial over Q for at least... every chart must be checked
    let mut candidates = PrimeSupport::default();
    candidates.primes.insert(2);
    candidates.primes.insert(3);
    for chart in &charts {
        let c = chart_candidate_primes(chart)?;
        candidates.primes.extend(c.primes);
        if let Some(u) = c.unresolved {
            candidates.unresolved = Some(match candidates.unresolved.take() {
                None => u,
                Some(v) => v * u,
            });
        }
    }
    let mut report = SingularPrimesReport {
        unresolved: candidates.unresolved.as_ref().map(|u| u.to_string()),
        ..Default::default()
    };
    for &p in &candidates.primes {
        if p >= (1 << 31) {
            report.unresolved = Some(format!("candidate prime {p} exceeds the modulus bound"));
            continue;
        }
        if charts.iter().any(|c| chart_singular_mod_p(c, p)) {
            report.primes.insert(p);
        }
    }
    Ok(report)
}

/// A divisor on a curve: closed points presented by minimal polynomials,
/// with multiplicities. Degree = sum of deg(min poly) * multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Divisor {
    pub points: Vec<(String, usize, usize)>, // (min poly of coordinate, its degree, multiplicity)
}

impl Divisor {
    pub fn degree(&self) -> usize {
        self.points.iter().map(|(_, d, m)| d * m).sum()
    }
}

/// Intersection of the hyperelliptic model y^2 + h(x) y + f(x) = 0 with a
/// vertical line x = x0: the divisor cut out by the quadratic
/// y^2 + h(x0) y + f(x0), of degree 2 (an orbit of the hyperelliptic
/// involution).
pub fn hyperelliptic_vertical_divisor(
    h: &UniPoly<Quad>,
    f: &UniPoly<Quad>,
    x0: &Quad,
) -> Divisor {
    let hv = h.eval(x0);
    let fv = f.eval(x0);
    // y^2 + hv y + fv: split or irreducible according to the discriminant
    let disc = hv.mul(&hv).sub(&fv.mul(&fv.from_i64(4)));
    let two_inv = fv.from_i64(2).inv();
    match disc.sqrt() {
        Some(root) => {
            let y1 = hv.neg().add(&root).mul(&two_inv);
            let y2 = hv.neg().sub(&root).mul(&two_inv);
            if y1 == y2 {
                Divisor {
                    points: vec![(format!("y - ({y1})"), 1, 2)],
                }
            } else {
                Divisor {
                    points: vec![
                        (format!("y - ({y1})"), 1, 1),
                        (format!("y - ({y2})"), 1, 1),
                    ],
                }
            }
        }
        None => Divisor {
            points: vec![(format!("y^2 + ({hv})*y + ({fv})"), 2, 1)],
        },
    }
}

/// Intersection of a plane quartic with the line alpha X + beta Y + gamma Z
/// (integral coefficients, not all zero): a degree-4 divisor presented by
/// the squarefree factors (with multiplicity) of the restricted binary
/// form. Errors if the line is contained in the curve.
pub fn line_quartic_intersection(
    g: &MultiPoly<Rat>,
    line: [Rat; 3],
) -> Result<Divisor> {
    let [alpha, beta, gamma] = line;
    let zero = Rat::from_int(0);
    if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
        return Err(Error::Math("zero line".into()));
    }
    // parametrize the line and restrict the homogenized quartic; the result
    // is a binary quartic in the parameter (u : v)
    // pick the parametrization by which variable has a nonzero coefficient
    // X = x, Y = y, Z = z with alpha X + beta Y + gamma Z = 0
    // if beta != 0: (X, Z) = (u, v), Y = -(alpha u + gamma v)/beta
    // if beta == 0, alpha != 0: (Y, Z) = (u, v), X = -(gamma/alpha) v
    // else: Z = 0 line: (X, Y) = (u, v)
    let total = 4u32;
    let homog_terms: Vec<([u32; 3], Rat)> = g
        .terms()
        .map(|(e, c)| ([e[0], e[1], total - e[0] - e[1]], c.clone()))
        .collect();
    // restricted(u, v) as a univariate in u of degree <= 4 (v = 1 chart of
    // the parameter line), plus we track the pure-u^4 coefficient by
    // evaluating the binary form properly: use two variables
    let mut restricted = MultiPoly::zero(2, zero.clone());
    for (e, c) in &homog_terms {
        // substitute X, Y, Z as linear forms in (u, v)
        let (xf, yf, zf): ([Rat; 2], [Rat; 2], [Rat; 2]) =
            if !beta.is_zero() {
                let bi = beta.inv();
                (
                    [Rat::from_int(1), zero.clone()],
                    [-(&alpha * &bi), -(&gamma * &bi)],
                    [zero.clone(), Rat::from_int(1)],
                )
            } else if !alpha.is_zero() {
                let ai = alpha.inv();
                (
                    [zero.clone(), -(&gamma * &ai)],
                    [Rat::from_int(1), zero.clone()],
                    [zero.clone(), Rat::from_int(1)],
                )
            } else {
                (
                    [Rat::from_int(1), zero.clone()],
                    [zero.clone(), Rat::from_int(1)],
                    [zero.clone(), zero.clone()],
                )
            };
        let lin = |f: &[Rat; 2]| -> MultiPoly<Rat> {
            let mut p = MultiPoly::zero(2, zero.clone());
            p.add_term(vec![1, 0], f[0].clone());
            p.add_term(vec![0, 1], f[1].clone());
            p
        };
        let mut term = MultiPoly::constant(2, c.clone());
        for (form, exp) in [(&xf, e[0]), (&yf, e[1]), (&zf, e[2])] {
            let l = lin(form);
            for _ in 0..exp {
                term = term.mul(&l);
            }
        }
        restricted = restricted.add(&term);
    }
    if restricted.is_zero() {
        return Err(Error::Math("line is contained in the curve".into()));
    }
    // as a binary form of degree 4 in (u, v): factor the u-dehomogenization
    // and account for the root at v = 0 separately
    let mut uni = UniPoly::zero(); // in u, at v = 1
    let mut v_mult = 4i64;
    for (e, c) in restricted.terms() {
        uni = uni.add(&UniPoly::monomial(c.clone(), e[0] as usize));
        v_mult = v_mult.min((4 - e[0] - e[1]) as i64);
    }
    let infinity_mult = (4 - uni.degree().unwrap_or(0)) as usize;
    let mut points: Vec<(String, usize, usize)> = Vec::new();
    if infinity_mult > 0 {
        points.push(("point at parameter infinity".into(), 1, infinity_mult));
    }
    // squarefree factorization over Q by repeated gcd
    let mut rem = uni.monic();
    let mut mult = 1usize;
    while rem.degree().unwrap_or(0) >= 1 {
        let g1 = rem.gcd(&rem.derivative());
        let squarefree = rem.div_rem(&g1).0;
        let next = g1;
        // factors in `squarefree` but not in `next` have exact mult `mult`
        let exact = match next.degree() {
            Some(d) if d >= 1 => squarefree.div_rem(&squarefree.gcd(&next)).0,
            _ => squarefree.clone(),
        };
        if exact.degree().unwrap_or(0) >= 1 {
            points.push((exact.to_string(), exact.degree().unwrap(), mult));
        }
        rem = next;
        mult += 1;
    }
    Ok(Divisor { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::big;

    #[test]
    fn n_of_d_values() {
        assert_eq!(n_of_d(12).unwrap(), BigInt::from(48)); // 2*12*2
        assert_eq!(n_of_d(5).unwrap(), BigInt::from(10)); // 2*5*1
        assert_eq!(n_of_d(44).unwrap(), BigInt::from(2 * 44 * 10 * 7 * 2));
        assert!(n_of_d(16).is_err());
    }

    fn qpoly(cs: &[i64]) -> UniPoly<Quad> {
        UniPoly::from_coeffs(
            cs.iter()
                .map(|&c| Quad::rational(big(c)))
                .collect(),
        )
    }

    #[test]
    fn hyperelliptic_route_on_a_small_curve() {
        // y^2 = x^3 - x: h = 0, f = -(x^3 - x); disc(4(x^3-x)) supported at 2
        let h = UniPoly::zero();
        let f = qpoly(&[0, 1, 0, -1]);
        let report = singular_primes_hyperelliptic(&h, &f).unwrap();
        assert_eq!(report.primes.iter().copied().collect::<Vec<_>>(), vec![2]);
        assert!(report.unresolved.is_none());
    }

    #[test]
    fn non_integral_model_rejected() {
        let h = UniPoly::zero();
        let f = UniPoly::from_coeffs(vec![Quad::rational(crate::field::bigfrac(1, 2))]);
        assert!(singular_primes_hyperelliptic(&h, &f).is_err());
    }

    #[test]
    fn fermat_like_quartic_candidates() {
        // x^4 + y^4 + 1: smooth; singular primes must be within {2}
        let mut g = MultiPoly::zero(2, big(0));
        g.add_term(vec![4, 0], big(1));
        g.add_term(vec![0, 4], big(1));
        g.add_term(vec![0, 0], big(1));
        let report = singular_primes_quartic(&g).unwrap();
        assert!(report.primes.iter().all(|&p| p == 2), "{report:?}");
        assert_eq!(report.primes.iter().copied().collect::<Vec<_>>(), vec![2]);
        // brute-force confirmation over F_2: (1,1) hmm -- verify via the
        // witness machinery instead
        assert!(chart_singular_mod_p(&quartic_charts(&g).unwrap()[0], 2));
        assert!(!chart_singular_mod_p(&quartic_charts(&g).unwrap()[0], 5));
        assert!(!chart_singular_mod_p(&quartic_charts(&g).unwrap()[0], 7));
    }

    #[test]
    fn vertical_divisor_has_degree_two() {
        // y^2 + y = x^3 at x0 = 2: y^2 + y - 8, disc 33 not a square -> one
        // closed point of degree 2
        let h = qpoly(&[1]);
        let f = qpoly(&[0, 0, 0, -1]);
        let d = hyperelliptic_vertical_divisor(&h, &f, &Quad::rational(big(2)));
        assert_eq!(d.degree(), 2);
        assert_eq!(d.points.len(), 1);
        // at x0 = 0: y^2 + y = y(y+1): two rational points
        let d0 = hyperelliptic_vertical_divisor(&h, &f, &Quad::rational(big(0)));
        assert_eq!(d0.degree(), 2);
        assert_eq!(d0.points.len(), 2);
    }

    #[test]
    fn line_meets_quartic_in_four_points() {
        // Fermat-like quartic x^4 + y^4 - 1 = 0 (affine), line y = 0:
        // x^4 - 1 has 4 simple roots over the closure
        let mut g = MultiPoly::zero(2, big(0));
        g.add_term(vec![4, 0], big(1));
        g.add_term(vec![0, 4], big(1));
        g.add_term(vec![0, 0], big(-1));
        let d = line_quartic_intersection(&g, [big(0), big(1), big(0)]).unwrap();
        assert_eq!(d.degree(), 4);
    }
}
