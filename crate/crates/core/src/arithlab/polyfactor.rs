//! Univariate factorization over F_p by squarefree decomposition,
//! distinct-degree splitting and Cantor-Zassenhaus equal-degree splitting.
//! Randomness comes from a fixed-seed ChaCha stream so runs reproduce.

use crate::field::Field;
use crate::fp::Fp;
use crate::unipoly::UniPoly;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Poly = UniPoly<Fp>;

fn poly_pow_mod(base: &Poly, mut e: u64, modulus: &Poly) -> Poly {
    let one = UniPoly::constant(Fp::new(1, base_prime(base, modulus)));
    let mut acc = one;
    let mut b = base.rem(modulus);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(modulus);
        }
        b = b.mul(&b).rem(modulus);
        e >>= 1;
    }
    acc
}

fn base_prime(a: &Poly, b: &Poly) -> u64 {
    a.coeffs()
        .first()
        .or_else(|| b.coeffs().first())
        .map(|c| c.p)
        .expect("prime from polynomial")
}

/// Monic squarefree factors with multiplicities (Yun-style via gcds; in
/// characteristic p the perfect-power case x^p -> x is handled by the
/// p-th-root fallback).
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    let mut f = f.monic();
    let p = base_prime(&f, &f);
    let mut mult_scale = 1u32;
    loop {
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = f.derivative();
        if df.is_zero() {
            // f = g(x^p); replace by the p-th root (Frobenius is bijective)
            let mut root_coeffs = Vec::new();
            for (i, c) in f.coeffs().iter().enumerate() {
                if i % (p as usize) == 0 {
                    root_coeffs.push(*c);
                } else {
                    debug_assert!(c.is_zero());
                }
            }
            f = UniPoly::from_coeffs(root_coeffs);
            mult_scale *= p as u32;
            continue;
        }
        let mut c = f.gcd(&df);
        let mut w = f.div_rem(&c).0;
        let mut i = 1u32;
        while w.degree().unwrap_or(0) > 0 {
            let y = w.gcd(&c);
            let factor = w.div_rem(&y).0;
            if factor.degree().unwrap_or(0) > 0 {
                out.push((factor.monic(), i * mult_scale));
            }
            w = y.clone();
            c = c.div_rem(&y).0;
            i += 1;
        }
        if c.degree().unwrap_or(0) == 0 {
            return out;
        }
        f = c;
        mult_scale *= 1;
        // remaining c is a p-th power contribution; loop handles it
    }
}

/// Distinct-degree decomposition of a squarefree monic f: list of
/// (product-of-irreducibles-of-degree-d, d).
fn distinct_degree(f: &Poly) -> Vec<(Poly, u32)> {
    let p = base_prime(f, f);
    let mut out = Vec::new();
    let mut f = f.monic();
    let x = UniPoly::monomial(Fp::new(1, p), 1);
    let mut d = 1u32;
    let mut frob = x.clone(); // x^(p^d) mod f, updated as f shrinks
    while f.degree().unwrap_or(0) >= 1 {
        if (f.degree().unwrap() as u32) < 2 * d {
            out.push((f.clone(), f.degree().unwrap() as u32));
            break;
        }
        frob = poly_pow_mod(&frob.rem(&f), p, &f);
        let g = f.gcd(&frob.sub(&x));
        if g.degree().unwrap_or(0) >= 1 {
            out.push((g.clone(), d));
            f = f.div_rem(&g).0;
        }
        d += 1;
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: factor a squarefree monic
/// product of irreducibles all of degree d.
fn equal_degree_split(f: &Poly, d: u32, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().unwrap() as u32;
    if n == d {
        return vec![f.clone()];
    }
    let p = base_prime(f, f);
    loop {
        // random polynomial of degree < n
        let coeffs: Vec<Fp> = (0..n)
            .map(|_| Fp::new(rng.gen_range(0..p) as i64, p))
            .collect();
        let r = UniPoly::from_coeffs(coeffs);
        if r.degree().is_none() {
            continue;
        }
        let g = f.gcd(&r);
        let candidate = if g.degree().unwrap_or(0) >= 1 {
            g
        } else if p == 2 {
            // trace map sum_{i<d} r^(2^i)
            let mut tr = r.clone();
            let mut cur = r.clone();
            for _ in 1..d {
                cur = cur.mul(&cur).rem(f);
                tr = tr.add(&cur);
            }
            f.gcd(&tr)
        } else {
            // r^((p^d - 1)/2) - 1 splits the roots into squares/non-squares
            let mut e = 1u128;
            for _ in 0..d {
                e *= p as u128;
            }
            let e = ((e - 1) / 2) as u64;
            let s = poly_pow_mod_u128(&r, e, f);
            let one = UniPoly::constant(Fp::new(1, p));
            f.gcd(&s.sub(&one))
        };
        let dc = candidate.degree().unwrap_or(0) as u32;
        if dc >= 1 && dc < n {
            let rest = f.div_rem(&candidate).0;
            let mut out = equal_degree_split(&candidate.monic(), d, rng);
            out.extend(equal_degree_split(&rest.monic(), d, rng));
            return out;
        }
    }
}

fn poly_pow_mod_u128(base: &Poly, e: u64, modulus: &Poly) -> Poly {
    poly_pow_mod(base, e, modulus)
}

/// Full monic factorization over F_p: (irreducible, multiplicity) pairs,
/// deterministic for a given input.
pub fn factor(f: &Poly) -> Vec<(Poly, u32)> {
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut out = Vec::new();
    for (sf, mult) in squarefree_decomposition(f) {
        for (prod, d) in distinct_degree(&sf) {
            for irr in equal_degree_split(&prod, d, &mut rng) {
                out.push((irr, mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| format!("{a}").cmp(&format!("{b}")))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, cs: &[i64]) -> Poly {
        UniPoly::from_coeffs(cs.iter().map(|&c| Fp::new(c, p)).collect())
    }

    #[test]
    fn splits_a_product_of_linears() {
        // (x-1)(x-2)(x-3) over F_7
        let f = poly(7, &[-1, 1]).mul(&poly(7, &[-2, 1])).mul(&poly(7, &[-3, 1]));
        let fs = factor(&f);
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
    }

    #[test]
    fn keeps_irreducible_quadratic_whole() {
        // x^2 + 1 is irreducible over F_7 (-1 is not a QR mod 7)
        let f = poly(7, &[1, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0.degree(), Some(2));
    }

    #[test]
    fn multiplicities_recovered() {
        // (x-1)^2 (x^2+1) over F_7
        let f = poly(7, &[-1, 1]).pow(2).mul(&poly(7, &[1, 0, 1]));
        let fs = factor(&f);
        let mut degs: Vec<(usize, u32)> = fs
            .iter()
            .map(|(g, m)| (g.degree().unwrap(), *m))
            .collect();
        degs.sort();
        assert_eq!(degs, vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn char_two_works() {
        // x^2 + x + 1 irreducible over F_2; x^2 + x = x(x+1)
        let f = poly(2, &[1, 1, 1]);
        assert_eq!(factor(&f).len(), 1);
        let g = poly(2, &[0, 1, 1]);
        assert_eq!(factor(&g).len(), 2);
    }

    #[test]
    fn reconstructs_the_input() {
        let p = 13;
        let f = poly(p, &[3, 0, 5, 1, 0, 2, 1]);
        let fs = factor(&f);
        let mut prod = UniPoly::constant(Fp::new(1, p));
        for (g, m) in &fs {
            for _ in 0..*m {
                prod = prod.mul(g);
            }
        }
        assert_eq!(prod, f.monic());
    }
}
