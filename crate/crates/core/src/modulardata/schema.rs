//! Serde mirror of the JSON files under data/. Numbers are strings.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoeffJson {
    /// rational part, "num" or "num/den"
    pub u: String,
    /// sqrt(D) part, omitted when zero
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<u32>,
    pub c: CoeffJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub arity: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RatFunJson {
    pub num: PolyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub den: Option<PolyJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomeotypeJson {
    pub genus: i64,
    pub e2: i64,
    pub cusps: i64,
    /// exact rational, usually a half-integer
    pub chi: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlaneModelJson {
    /// "hyperelliptic" (deg_y = 2) or "quartic"
    pub kind: String,
    pub poly: PolyJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RegistryJson {
    pub schema: String,
    pub disc: i64,
    pub fundamental: bool,
    pub spin_reducible: bool,
    /// "ok" or "transcription-suspect"
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    pub b_poly: PolyJson,
    pub w_poly: PolyJson,
    pub homeotype: Vec<HomeotypeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cusp_poly: Option<PolyJson>,
    /// primes dividing disc(c_D), as printed
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cusp_poly_disc_support: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_primes: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plane_model: Option<PlaneModelJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IcJson {
    pub i2: PolyJson,
    pub i4: PolyJson,
    pub i6: PolyJson,
    pub i10: PolyJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub a: Vec<RatFunJson>,
    pub b: Vec<RatFunJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertJson {
    pub schema: String,
    pub disc: i64,
    pub ic: IcJson,
    pub family: FamilyJson,
    pub point: PointJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct W44CuspJson {
    pub prototype: [i64; 4],
    /// "inf" for the point at infinity, else [u, v] strings for x and y
    pub x: serde_json::Value,
    pub y: serde_json::Value,
    pub mw: [i64; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct W44CuspsJson {
    pub schema: String,
    pub curve: PolyJson,
    pub p1: [CoeffJson; 2],
    pub p2: [CoeffJson; 2],
    pub cusps: Vec<W44CuspJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomeotypeTableJson {
    pub schema: String,
    pub rows: Vec<HomeotypeRowJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomeotypeRowJson {
    pub disc: i64,
    pub components: Vec<HomeotypeJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CuspPolyTableJson {
    pub schema: String,
    pub rows: Vec<CuspPolyRowJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CuspPolyRowJson {
    pub disc: i64,
    pub poly: PolyJson,
    /// factorization of disc(c_D) as printed: [prime, exponent] pairs
    pub disc_factors: Vec<[u64; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SingularPrimesTableJson {
    pub schema: String,
    pub rows: Vec<SingularPrimesRowJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SingularPrimesRowJson {
    pub disc: i64,
    pub primes: Vec<u64>,
}
