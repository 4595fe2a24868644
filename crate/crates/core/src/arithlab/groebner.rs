//! Bivariate Buchberger over F_p, graded-lex order.
//!
//! Only what the singular-prime confirmation needs: decide whether the
//! ideal (g, g_x, g_y) is trivial over F_p, i.e. whether 1 lies in it. The
//! ideal is trivial iff the chart has no singular point over the algebraic
//! closure.

use crate::field::Field;
use crate::fp::Fp;
use crate::multipoly::MultiPoly;

type Exp = Vec<u32>;

/// grlex: compare total degree first, then lexicographically.
fn grlex(a: &Exp, b: &Exp) -> std::cmp::Ordering {
    let (ta, tb): (u32, u32) = (a.iter().sum(), b.iter().sum());
    ta.cmp(&tb).then_with(|| a.cmp(b))
}

fn leading_term(p: &MultiPoly<Fp>) -> Option<(Exp, Fp)> {
    p.terms()
        .max_by(|(ea, _), (eb, _)| grlex(ea, eb))
        .map(|(e, c)| (e.clone(), *c))
}

fn divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exp_lcm(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn mono_mul(p: &MultiPoly<Fp>, e: &Exp, c: &Fp) -> MultiPoly<Fp> {
    let mut shifted = MultiPoly::zero(p.arity(), *c);
    for (pe, pc) in p.terms() {
        let ne: Exp = pe.iter().zip(e).map(|(x, y)| x + y).collect();
        shifted.add_term(ne, pc.mul(c));
    }
    shifted
}

/// Remainder of p on division by the basis.
fn reduce(p: &MultiPoly<Fp>, basis: &[(MultiPoly<Fp>, Exp, Fp)]) -> MultiPoly<Fp> {
    let mut rem = MultiPoly::zero(p.arity(), Fp::new(0, leading_prime(p, basis)));
    let mut cur = p.clone();
    'outer: while let Some((lt_e, lt_c)) = leading_term(&cur) {
        for (g, ge, gc) in basis {
            if divides(ge, &lt_e) {
                let factor_e = exp_sub(&lt_e, ge);
                let factor_c = lt_c.mul(&gc.inv());
                cur = cur.sub(&mono_mul(g, &factor_e, &factor_c));
                continue 'outer;
            }
        }
        rem.add_term(lt_e.clone(), lt_c);
        let mut stripped = cur.clone();
        stripped.add_term(lt_e, lt_c.neg());
        cur = stripped;
    }
    rem
}

fn leading_prime(p: &MultiPoly<Fp>, basis: &[(MultiPoly<Fp>, Exp, Fp)]) -> u64 {
    p.terms()
        .next()
        .map(|(_, c)| c.p)
        .or_else(|| basis.first().map(|(_, _, c)| c.p))
        .unwrap_or(2)
}

/// Buchberger's algorithm; returns the (unreduced) basis.
pub fn groebner_basis(gens: &[MultiPoly<Fp>]) -> Vec<MultiPoly<Fp>> {
    let mut basis: Vec<(MultiPoly<Fp>, Exp, Fp)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let (e, c) = leading_term(g).unwrap();
            (g.clone(), e, c)
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| ((i + 1)..basis.len()).map(move |j| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (gi, ei, ci) = &basis[i];
        let (gj, ej, cj) = &basis[j];
        let l = exp_lcm(ei, ej);
        // Buchberger's first criterion: coprime leading monomials
        if l.iter().sum::<u32>() == ei.iter().sum::<u32>() + ej.iter().sum::<u32>() {
            continue;
        }
        let s = mono_mul(gi, &exp_sub(&l, ei), &ci.inv())
            .sub(&mono_mul(gj, &exp_sub(&l, ej), &cj.inv()));
        let r = reduce(&s, &basis);
        if let Some((e, c)) = leading_term(&r) {
            let new_idx = basis.len();
            basis.push((r, e, c));
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }
    basis.into_iter().map(|(g, _, _)| g).collect()
}

/// True iff 1 is in the ideal generated by `gens` over F_p, i.e. the
/// generators have no common zero over the algebraic closure.
pub fn ideal_is_trivial(gens: &[MultiPoly<Fp>]) -> bool {
    for g in gens {
        if !g.is_zero() && g.total_degree() == 0 {
            return true;
        }
    }
    let gb = groebner_basis(gens);
    gb.iter().any(|g| !g.is_zero() && g.total_degree() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, terms: &[(i64, [u32; 2])]) -> MultiPoly<Fp> {
        MultiPoly::from_terms(
            2,
            terms
                .iter()
                .map(|&(c, e)| (e.to_vec(), Fp::new(c, p)))
                .collect(),
            Fp::new(0, p),
        )
    }

    #[test]
    fn trivial_ideal_detected() {
        // x and x + 1 generate (1)
        let p = 7;
        let gens = [poly(p, &[(1, [1, 0])]), poly(p, &[(1, [1, 0]), (1, [0, 0])])];
        assert!(ideal_is_trivial(&gens));
    }

    #[test]
    fn common_zero_means_nontrivial() {
        // (x, y) has the common zero (0, 0)
        let p = 7;
        let gens = [poly(p, &[(1, [1, 0])]), poly(p, &[(1, [0, 1])])];
        assert!(!ideal_is_trivial(&gens));
    }

    #[test]
    fn smooth_conic_has_trivial_singular_ideal() {
        // g = x^2 + y^2 - 1 over F_7: (g, 2x, 2y) has no common zero
        let p = 7;
        let g = poly(p, &[(1, [2, 0]), (1, [0, 2]), (-1, [0, 0])]);
        let gx = poly(p, &[(2, [1, 0])]);
        let gy = poly(p, &[(2, [0, 1])]);
        assert!(ideal_is_trivial(&[g, gx, gy]));
    }

    #[test]
    fn nodal_cubic_is_singular_everywhere_it_should_be() {
        // y^2 - x^2(x+1): singular at the origin over any F_p
        let p = 13;
        let g = poly(p, &[(1, [0, 2]), (-1, [3, 0]), (-1, [2, 0])]);
        let gx = poly(p, &[(-3, [2, 0]), (-2, [1, 0])]);
        let gy = poly(p, &[(2, [0, 1])]);
        assert!(!ideal_is_trivial(&[g, gx, gy]));
    }
}
