//! The on-disk data registry: one JSON file per discriminant with the
//! branch polynomial, the Weierstrass-locus polynomial, homeomorphism data,
//! cuspidal polynomials, singular primes and plane models, plus the D = 12
//! certification input and the standalone tables.
//!
//! Every number is an exact rational rendered as a string ("num" or
//! "num/den"); a coefficient is u + v*sqrt(D) with optional v. Floats never
//! appear. See docs/data-format.md at the repository root.

mod schema;

pub use schema::*;

use crate::ela::{CertStatus, CertificationRecord, Factorization, ICParametrization, Lambda};
use crate::field::{parse_rational, rational_string, Field, Rat};
use crate::multipoly::MultiPoly;
use crate::quad::Quad;
use crate::ratfun::RatFun;
use crate::unipoly::UniPoly;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// A loaded, validated-on-parse registry record.
#[derive(Clone, Debug)]
pub struct DiscriminantRecord {
    pub disc: i64,
    pub fundamental: bool,
    pub spin_reducible: bool,
    pub status: RecordStatus,
    pub notes: Option<String>,
    pub b_poly: MultiPoly<Quad>,
    /// w_D (irreducible case) or w_D^0 (the registry derives w_D^1 by
    /// Galois conjugation)
    pub w_poly: MultiPoly<Quad>,
    pub homeotype: Vec<Homeotype>,
    pub cusp_poly: Option<UniPoly<Rat>>,
    pub cusp_poly_disc_support: Option<Vec<u64>>,
    pub singular_primes: Option<Vec<u64>>,
    pub plane_model: Option<PlaneModel>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecordStatus {
    Ok,
    TranscriptionSuspect,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Homeotype {
    pub genus: i64,
    pub e2: i64,
    pub cusps: i64,
    pub chi: Rat,
}

#[derive(Clone, Debug)]
pub enum PlaneModel {
    /// g(x, y) = 0 with deg_y g = 2; normalizes to y^2 + h y + f = 0.
    Hyperelliptic {
        h: UniPoly<Quad>,
        f: UniPoly<Quad>,
        verbatim: MultiPoly<Quad>,
    },
    Quartic {
        g: MultiPoly<Rat>,
    },
}

/// One validation finding; `fatal` findings fail the record.
#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    pub disc: i64,
    pub fatal: bool,
    pub message: String,
}

fn parse_coeff(c: &schema::CoeffJson, disc: i64) -> Result<Quad> {
    let u = parse_rational(&c.u).map_err(Error::Data)?;
    let v = match &c.v {
        None => Rat::from_int(0),
        Some(vs) => parse_rational(vs).map_err(Error::Data)?,
    };
    Ok(Quad::new(u, v, disc))
}

pub fn parse_poly(p: &schema::PolyJson, disc: i64) -> Result<MultiPoly<Quad>> {
    let witness = Quad::rational(Rat::from_int(0));
    let mut out = MultiPoly::zero(p.arity, witness);
    for (idx, term) in p.terms.iter().enumerate() {
        if term.e.len() != p.arity {
            return Err(Error::Data(format!(
                "term {idx}: exponent vector arity {} != {}",
                term.e.len(),
                p.arity
            )));
        }
        let c = parse_coeff(&term.c, disc)
            .map_err(|e| Error::Data(format!("term {idx}: {e}")))?;
        out.add_term(term.e.clone(), c);
    }
    Ok(out)
}

pub fn serialize_poly(p: &MultiPoly<Quad>) -> schema::PolyJson {
    schema::PolyJson {
        arity: p.arity(),
        terms: p
            .terms()
            .map(|(e, c)| schema::TermJson {
                e: e.clone(),
                c: schema::CoeffJson {
                    u: rational_string(&c.u),
                    v: if c.v.is_zero() {
                        None
                    } else {
                        Some(rational_string(&c.v))
                    },
                },
            })
            .collect(),
    }
}

fn poly_to_rational(p: &MultiPoly<Quad>) -> Result<MultiPoly<Rat>> {
    let zero = Rat::from_int(0);
    let mut out = MultiPoly::zero(p.arity(), zero);
    for (e, c) in p.terms() {
        if !c.is_rational() {
            return Err(Error::Data("expected rational coefficients".into()));
        }
        out.add_term(e.clone(), c.u.clone());
    }
    Ok(out)
}

fn univariate_from_multipoly(p: &MultiPoly<Rat>) -> Result<UniPoly<Rat>> {
    if p.arity() != 1 {
        return Err(Error::Data("expected a univariate polynomial".into()));
    }
    let zero = Rat::from_int(0);
    let deg = p.degree_in(0) as usize;
    let mut coeffs = vec![zero; deg + 1];
    for (e, c) in p.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Split a deg_y = 2 plane model polynomial g(x, y) = 0 into the normalized
/// y^2 + h(x) y + f(x) = 0 presentation.
fn hyperelliptic_split(g: &MultiPoly<Quad>) -> Result<(UniPoly<Quad>, UniPoly<Quad>)> {
    let witness = Quad::rational(Rat::from_int(0));
    if g.degree_in(1) != 2 {
        return Err(Error::Data("hyperelliptic model must be quadratic in y".into()));
    }
    let mut c2: Option<Quad> = None;
    let mut h_terms: Vec<(usize, Quad)> = Vec::new();
    let mut f_terms: Vec<(usize, Quad)> = Vec::new();
    for (e, c) in g.terms() {
        match e[1] {
            2 => {
                if e[0] != 0 {
                    return Err(Error::Data("y^2 coefficient must be constant".into()));
                }
                c2 = Some(c.clone());
            }
            1 => h_terms.push((e[0] as usize, c.clone())),
            0 => f_terms.push((e[0] as usize, c.clone())),
            _ => unreachable!(),
        }
    }
    let c2 = c2.ok_or_else(|| Error::Data("missing y^2 term".into()))?;
    let scale = c2.inv();
    let build = |terms: &[(usize, Quad)]| -> UniPoly<Quad> {
        let deg = terms.iter().map(|(d, _)| *d).max().unwrap_or(0);
        let mut coeffs = vec![witness.clone(); deg + 1];
        for (d, c) in terms {
            coeffs[*d] = c.mul(&scale);
        }
        UniPoly::from_coeffs(coeffs)
    };
    Ok((build(&h_terms), build(&f_terms)))
}

fn parse_record(json: &schema::RegistryJson) -> Result<DiscriminantRecord> {
    let disc = json.disc;
    if !crate::quad::valid_disc(disc) {
        return Err(Error::Data(format!("invalid discriminant {disc}")));
    }
    let status = match json.status.as_str() {
        "ok" => RecordStatus::Ok,
        "transcription-suspect" => RecordStatus::TranscriptionSuspect,
        other => return Err(Error::Data(format!("unknown status {other:?}"))),
    };
    let b_poly = parse_poly(&json.b_poly, disc)
        .map_err(|e| Error::Data(format!("D{disc} b_poly: {e}")))?;
    let w_poly = parse_poly(&json.w_poly, disc)
        .map_err(|e| Error::Data(format!("D{disc} w_poly: {e}")))?;
    let homeotype = json
        .homeotype
        .iter()
        .map(|h| -> Result<Homeotype> {
            let chi = parse_rational(&h.chi).map_err(Error::Data)?;
            Ok(Homeotype {
                genus: h.genus,
                e2: h.e2,
                cusps: h.cusps,
                chi,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let cusp_poly = match &json.cusp_poly {
        None => None,
        Some(p) => {
            let mp = poly_to_rational(&parse_poly(p, disc)?)?;
            Some(univariate_from_multipoly(&mp)?)
        }
    };
    let plane_model = match &json.plane_model {
        None => None,
        Some(pm) => {
            let g = parse_poly(&pm.poly, disc)
                .map_err(|e| Error::Data(format!("D{disc} plane model: {e}")))?;
            Some(match pm.kind.as_str() {
                "hyperelliptic" => {
                    let (h, f) = hyperelliptic_split(&g)?;
                    PlaneModel::Hyperelliptic {
                        h,
                        f,
                        verbatim: g,
                    }
                }
                "quartic" => PlaneModel::Quartic {
                    g: poly_to_rational(&g)?,
                },
                other => return Err(Error::Data(format!("unknown model kind {other:?}"))),
            })
        }
    };
    Ok(DiscriminantRecord {
        disc,
        fundamental: json.fundamental,
        spin_reducible: json.spin_reducible,
        status,
        notes: json.notes.clone(),
        b_poly,
        w_poly,
        homeotype,
        cusp_poly,
        cusp_poly_disc_support: json.cusp_poly_disc_support.clone(),
        singular_primes: json.singular_primes.clone(),
        plane_model,
    })
}

/// Structural and arithmetic validation of one record.
pub fn validate_record(rec: &DiscriminantRecord) -> Vec<Finding> {
    let mut out = Vec::new();
    let d = rec.disc;
    let mut finding = |fatal: bool, message: String| {
        out.push(Finding {
            disc: d,
            fatal,
            message,
        });
    };
    // spin reducibility is D = 1 mod 8
    if rec.spin_reducible != (d.rem_euclid(8) == 1) {
        finding(
            true,
            format!("spin_reducible flag disagrees with D mod 8 (D = {d})"),
        );
    }
    // Euler characteristic: chi = 2 - 2g - C - e2/2 for D > 8
    if d > 8 {
        for (i, h) in rec.homeotype.iter().enumerate() {
            let expected = Rat::new(
                (2 * (2 - 2 * h.genus - h.cusps) - h.e2).into(),
                2.into(),
            );
            if expected != h.chi {
                finding(
                    true,
                    format!(
                        "Euler characteristic mismatch in component {i}: chi = {} but 2 - 2g - C - e2/2 = {expected}",
                        h.chi
                    ),
                );
            }
        }
    } else {
        finding(false, "exempt: orbifold Euler characteristic (D <= 8)".into());
    }
    // component count: split discriminants carry two homeomorphic components
    let expect_components = if rec.spin_reducible { 2 } else { 1 };
    if rec.homeotype.len() != expect_components {
        finding(
            true,
            format!(
                "expected {expect_components} homeotype component(s), found {}",
                rec.homeotype.len()
            ),
        );
    }
    if rec.spin_reducible && rec.homeotype.len() == 2 && rec.homeotype[0] != rec.homeotype[1] {
        finding(true, "split components must be homeomorphic".into());
    }
    // b_D degree sanity
    if rec.b_poly.is_zero() || rec.b_poly.total_degree() == 0 {
        finding(true, "branch polynomial is constant".into());
    }
    if rec.b_poly.terms().any(|(_, c)| !c.is_rational()) {
        finding(true, "branch polynomial must be rational".into());
    }
    // w_D field of definition vs spin reducibility
    let w_has_sqrt = rec.w_poly.terms().any(|(_, c)| !c.is_rational());
    if rec.spin_reducible && !w_has_sqrt {
        finding(
            false,
            "w_D^0 has purely rational coefficients; components would coincide".into(),
        );
    }
    if !rec.spin_reducible && w_has_sqrt {
        finding(true, "irreducible w_D must be defined over Q".into());
    }
    if rec.status == RecordStatus::TranscriptionSuspect {
        finding(
            false,
            format!(
                "transcription-suspect: {}",
                rec.notes.as_deref().unwrap_or("see notes")
            ),
        );
    }
    out
}

/// Galois conjugate of a polynomial over Q(sqrt(D)), coefficient-wise.
pub fn galois_conjugate_poly(p: &MultiPoly<Quad>) -> MultiPoly<Quad> {
    let witness = Quad::rational(Rat::from_int(0));
    let mut out = MultiPoly::zero(p.arity(), witness);
    for (e, c) in p.terms() {
        out.add_term(e.clone(), c.conj());
    }
    out
}

/// Load the whole registry directory (files named D<disc>.json).
pub fn load_registry(dir: &Path) -> Result<BTreeMap<i64, DiscriminantRecord>> {
    let mut out = BTreeMap::new();
    let mut errors = Vec::new();
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension().map(|e| e == "json").unwrap_or(false)
                && p.file_name()
                    .and_then(|n| n.to_str())
                    .map(|n| n.starts_with('D'))
                    .unwrap_or(false)
        })
        .collect();
    entries.sort();
    for path in entries {
        let text = std::fs::read_to_string(&path)?;
        let json: schema::RegistryJson = serde_json::from_str(&text)
            .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        match parse_record(&json) {
            Ok(rec) => {
                out.insert(rec.disc, rec);
            }
            Err(e) => errors.push(format!("{}: {e}", path.display())),
        }
    }
    if !errors.is_empty() {
        return Err(Error::Data(errors.join("; ")));
    }
    Ok(out)
}

/// The D = 12 (or user-supplied) certification input: the surface
/// parametrization and the family/point data.
#[derive(Clone, Debug)]
pub struct CertInput {
    pub disc: i64,
    pub ic: ICParametrization<Rat>,
    pub family_a: [RatFun<Rat>; 5],
    pub family_b: [RatFun<Rat>; 2],
    pub point_a: [Rat; 5],
    pub point_b: [Rat; 2],
}

fn parse_ratfun(j: &schema::RatFunJson, disc: i64) -> Result<RatFun<Rat>> {
    let zero = Rat::from_int(0);
    let num = univariate_from_multipoly(&poly_to_rational(&parse_poly(&j.num, disc)?)?)?;
    let den = match &j.den {
        None => UniPoly::constant(Rat::from_int(1)),
        Some(d) => univariate_from_multipoly(&poly_to_rational(&parse_poly(d, disc)?)?)?,
    };
    if den.is_zero() {
        return Err(Error::Data("zero denominator in rational function".into()));
    }
    Ok(RatFun::new(num, den, zero))
}

pub fn load_cert(path: &Path) -> Result<CertInput> {
    let text = std::fs::read_to_string(path)?;
    let json: schema::CertJson = serde_json::from_str(&text)
        .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
    let disc = json.disc;
    let coord = |p: &schema::PolyJson| -> Result<MultiPoly<Rat>> {
        let q = parse_poly(p, disc)?;
        poly_to_rational(&q)
    };
    let ic = ICParametrization {
        disc,
        coords: [
            coord(&json.ic.i2)?,
            coord(&json.ic.i4)?,
            coord(&json.ic.i6)?,
            coord(&json.ic.i10)?,
        ],
        branch: None,
    };
    let fam_a_vec = json
        .family
        .a
        .iter()
        .map(|f| parse_ratfun(f, disc))
        .collect::<Result<Vec<_>>>()?;
    let fam_b_vec = json
        .family
        .b
        .iter()
        .map(|f| parse_ratfun(f, disc))
        .collect::<Result<Vec<_>>>()?;
    if fam_a_vec.len() != 5 || fam_b_vec.len() != 2 {
        return Err(Error::Data("family must have 5 model and 2 surface coordinates".into()));
    }
    let pa = json
        .point
        .a
        .iter()
        .map(|s| parse_rational(s).map_err(Error::Data))
        .collect::<Result<Vec<_>>>()?;
    let pb = json
        .point
        .b
        .iter()
        .map(|s| parse_rational(s).map_err(Error::Data))
        .collect::<Result<Vec<_>>>()?;
    if pa.len() != 5 || pb.len() != 2 {
        return Err(Error::Data("point must have 5 model and 2 surface coordinates".into()));
    }
    Ok(CertInput {
        disc,
        ic,
        family_a: fam_a_vec.try_into().map_err(|_| Error::Data("arity".into()))?,
        family_b: fam_b_vec.try_into().map_err(|_| Error::Data("arity".into()))?,
        point_a: pa.try_into().map_err(|_| Error::Data("arity".into()))?,
        point_b: pb.try_into().map_err(|_| Error::Data("arity".into()))?,
    })
}

/// Load the W44 cusp table.
pub fn load_w44_table(path: &Path) -> Result<schema::W44CuspsJson> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)
        .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?)
}

/// Load the homeotype table.
pub fn load_homeotype_table(path: &Path) -> Result<schema::HomeotypeTableJson> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)
        .map_err(|e| Error::Data(format!("{}: {e}", path.display())))?)
}

/// Render a certification record as deterministic JSON.
pub fn record_to_json<F: Field>(rec: &CertificationRecord<F>) -> serde_json::Value {
    let show = |f: &F| serde_json::Value::String(format!("{f}"));
    let status = match &rec.status {
        CertStatus::Certified => serde_json::json!({"certified": true}),
        CertStatus::Rejected(why) => serde_json::json!({"certified": false, "reason": why}),
    };
    let factorization = rec.factorization.as_ref().map(|f| match f {
        Factorization::Pair { lambda, forms } => serde_json::json!({
            "lambda": format!("{lambda}"),
            "forms": forms
                .iter()
                .map(|(c1, c0)| format!("({c1})*w + ({c0})"))
                .collect::<Vec<_>>(),
        }),
        Factorization::Extension { trace, norm, disc } => serde_json::json!({
            "extension": {
                "quadratic": format!("l^2 - ({trace})*l + ({norm})"),
                "disc": format!("{disc}"),
            }
        }),
    });
    serde_json::json!({
        "disc": rec.disc,
        "a": rec.a.iter().map(|v| show(v)).collect::<Vec<_>>(),
        "b": rec.b.iter().map(|v| show(v)).collect::<Vec<_>>(),
        "status": status,
        "ela1_ok": rec.ela1_ok,
        "ela2_ok": rec.ela2_ok,
        "x": rec.x.as_ref().map(|x| x.iter().map(|v| show(v)).collect::<Vec<_>>()),
        "factorization": factorization,
        "bad_set": rec.bad_set,
    })
}

/// Convenience for callers that only need lambda out of a record.
pub fn record_lambda<F: Field>(rec: &CertificationRecord<F>) -> Option<Lambda<F>> {
    rec.factorization.as_ref().map(|f| match f {
        Factorization::Pair { lambda, .. } => Lambda::InField(lambda.clone()),
        Factorization::Extension { trace, norm, disc } => Lambda::Extension {
            trace: trace.clone(),
            norm: norm.clone(),
            disc: disc.clone(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_roundtrip() {
        let json = r#"{"arity":2,"terms":[
            {"e":[1,0],"c":{"u":"27"}},
            {"e":[0,3],"c":{"u":"13","v":"-1/2"}}
        ]}"#;
        let p: schema::PolyJson = serde_json::from_str(json).unwrap();
        let poly = parse_poly(&p, 17).unwrap();
        let back = serialize_poly(&poly);
        let poly2 = parse_poly(&back, 17).unwrap();
        assert_eq!(poly, poly2);
    }

    #[test]
    fn malformed_rational_is_an_error() {
        let json = r#"{"arity":1,"terms":[{"e":[0],"c":{"u":"1/0"}}]}"#;
        let p: schema::PolyJson = serde_json::from_str(json).unwrap();
        let err = parse_poly(&p, 12).unwrap_err();
        assert!(format!("{err}").contains("term 0"));
    }

    #[test]
    fn hyperelliptic_split_normalizes_sign() {
        // g = f0(x) - y^2  =>  y^2 + 0*y - f0
        let witness = Quad::rational(Rat::from_int(0));
        let mut g = MultiPoly::zero(2, witness.clone());
        g.add_term(vec![0, 2], witness.from_i64(-1));
        g.add_term(vec![3, 0], witness.from_i64(1));
        g.add_term(vec![0, 0], witness.from_i64(7));
        let (h, f) = hyperelliptic_split(&g).unwrap();
        assert!(h.is_zero());
        assert_eq!(f.coeffs()[0], witness.from_i64(-7));
        assert_eq!(f.coeffs()[3], witness.from_i64(-1));
    }

    #[test]
    fn chi_validation_catches_tampering() {
        let rec = DiscriminantRecord {
            disc: 12,
            fundamental: true,
            spin_reducible: false,
            status: RecordStatus::Ok,
            notes: None,
            b_poly: MultiPoly::var(2, 0, Quad::rational(Rat::from_int(0))),
            w_poly: MultiPoly::var(2, 0, Quad::rational(Rat::from_int(0))),
            homeotype: vec![Homeotype {
                genus: 0,
                e2: 1,
                cusps: 3,
                chi: crate::field::big(-2), // tampered: should be -3/2
            }],
            cusp_poly: None,
            cusp_poly_disc_support: None,
            singular_primes: None,
            plane_model: None,
        };
        let findings = validate_record(&rec);
        assert!(findings
            .iter()
            .any(|f| f.fatal && f.message.contains("Euler characteristic")));
    }
}
