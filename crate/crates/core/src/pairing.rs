//! The pairing between quadratic differentials and deformations of the
//! quintic coefficient vector.
//!
//! For x in K^3 and v in K^5 the pairing is proportional to x^T M(a) v,
//! where M(a) is the 3x5 Hankel matrix with (j,k) entry M_{j+k}(a) and
//!
//!   M_k(a) = sum over roots r of f_a of r^(k-2) / f_a'(r)^2,   2 <= k <= 8.
//!
//! The sum is computed root-free as the trace of multiplication by
//! w^(k-2) * u^2 in K[w]/(f_a) with u = (f_a')^{-1} mod f_a. The companion
//! root-based matrix N(r) and the exact identity
//!
//!   N(r) * Disc(f_{a(r)}) = M(a(r)) * da_r
//!
//! tie the two presentations together. The overall 2*pi factor of the
//! analytic pairing is dropped: everything downstream consumes kernels and
//! ranges only, which are scale-invariant.

use crate::field::Field;
use crate::genus2::QuinticModel;
use crate::matrix::Matrix;
use crate::unipoly::UniPoly;
use crate::{Error, Result};

/// Power sums p_0..p_max of the roots of the monic quintic, from Newton's
/// identities on the coefficients.
fn power_sums<F: Field>(m: &QuinticModel<F>, max: usize) -> Vec<F> {
    let one = m.witness().one();
    // elementary symmetric: f = w^5 + a4 w^4 + ... <=> e_i = (-1)^i a_{5-i}
    let e: Vec<F> = (1..=5)
        .map(|i| {
            let c = m.a[5 - i].clone();
            if i % 2 == 1 {
                c.neg()
            } else {
                c
            }
        })
        .collect();
    let mut p: Vec<F> = vec![one.from_i64(5)];
    for k in 1..=max {
        let mut s = one.zero();
        let upper = k.min(5);
        for i in 1..upper {
            let term = e[i - 1].mul(&p[k - i]);
            s = if i % 2 == 1 { s.add(&term) } else { s.sub(&term) };
        }
        if k <= 5 {
            let term = e[k - 1].mul(&one.from_i64(k as i64));
            s = if k % 2 == 1 { s.add(&term) } else { s.sub(&term) };
        } else {
            let term = e[4].mul(&p[k - 5]);
            s = if 5 % 2 == 1 { s.add(&term) } else { s.sub(&term) };
        }
        p.push(s);
    }
    p
}

/// Trace of multiplication by g on K[w]/(f_a): sum of g over the roots.
fn trace_mod<F: Field>(m: &QuinticModel<F>, g: &UniPoly<F>, sums: &[F]) -> F {
    let reduced = g.rem(&m.poly());
    let mut acc = m.witness().zero();
    for (j, c) in reduced.coeffs().iter().enumerate() {
        acc = acc.add(&c.mul(&sums[j]));
    }
    acc
}

/// M_k(a) = sum_r r^(k-2) / f'(r)^2 for 2 <= k <= 8, exactly, without
/// computing roots. Errors on degenerate models.
pub fn trace_mk<F: Field>(m: &QuinticModel<F>, k: usize) -> Result<F> {
    assert!((2..=8).contains(&k), "k must be in 2..=8");
    if m.is_degenerate() {
        return Err(Error::Math("singular model: disc(f_a) = 0".into()));
    }
    let f = m.poly();
    let u = f
        .derivative()
        .inv_mod(&f)
        .map_err(|e| Error::Math(e.to_string()))?;
    let u2 = u.mul(&u).rem(&f);
    let sums = power_sums(m, 8);
    let g = UniPoly::monomial(m.witness().one(), k - 2).mul(&u2);
    Ok(trace_mod(m, &g, &sums))
}

/// The 3x5 pairing matrix M(a) with Hankel entries M_{j+k}(a), rows j in
/// 1..=3 and columns k in 1..=5.
pub fn matrix_m<F: Field>(m: &QuinticModel<F>) -> Result<Matrix<F>> {
    if m.is_degenerate() {
        return Err(Error::Math("singular model: disc(f_a) = 0".into()));
    }
    matrix_m_unchecked(m)
}

/// As [`matrix_m`] but trusting the caller's nondegeneracy check (the
/// inverse of f' modulo f still fails loudly on a truly singular model).
pub(crate) fn matrix_m_unchecked<F: Field>(m: &QuinticModel<F>) -> Result<Matrix<F>> {
    let f = m.poly();
    let u = f
        .derivative()
        .inv_mod(&f)
        .map_err(|e| Error::Math(e.to_string()))?;
    let u2 = u.mul(&u).rem(&f);
    let sums = power_sums(m, 8);
    let mk: Vec<F> = (2..=8)
        .map(|k| {
            let g = UniPoly::monomial(m.witness().one(), k - 2).mul(&u2);
            trace_mod(m, &g, &sums)
        })
        .collect();
    Ok(Matrix::from_fn(3, 5, |j, k| mk[j + k].clone()))
}

/// The 3x5 residue matrix N(r) for pairwise distinct roots: column j holds
/// -(1, r_j, r_j^2) * prod_{m != j} 1/(r_m - r_j). (The classical display
/// indexes this transposed; a single stored orientation avoids a silent
/// transpose between the two pairing formulas.)
pub fn matrix_n<F: Field>(roots: &[F; 5]) -> Result<Matrix<F>> {
    for i in 0..5 {
        for j in (i + 1)..5 {
            if roots[i] == roots[j] {
                return Err(Error::Math("repeated roots in N(r)".into()));
            }
        }
    }
    let one = roots[0].one();
    let mut entries = vec![one.zero(); 15];
    for (j, rj) in roots.iter().enumerate() {
        let mut prod = one.clone();
        for (mm, rm) in roots.iter().enumerate() {
            if mm != j {
                prod = prod.mul(&rm.sub(rj));
            }
        }
        let base = prod.inv().neg();
        let mut pow = one.clone();
        for k in 0..3 {
            entries[k * 5 + j] = base.mul(&pow);
            if k < 2 {
                pow = pow.mul(rj);
            }
        }
    }
    Ok(Matrix::new(3, 5, entries))
}

/// Monic quintic with the given roots, by expanding the product.
pub fn model_from_roots<F: Field>(roots: &[F; 5]) -> QuinticModel<F> {
    let one = roots[0].one();
    let mut f = UniPoly::constant(one);
    for r in roots {
        let lin = UniPoly::from_coeffs(vec![r.neg(), r.one()]);
        f = f.mul(&lin);
    }
    QuinticModel::new([
        f.coeffs()[0].clone(),
        f.coeffs()[1].clone(),
        f.coeffs()[2].clone(),
        f.coeffs()[3].clone(),
        f.coeffs()[4].clone(),
    ])
}

/// Exact 5x5 Jacobian da_r of the roots-to-coefficients map. Since
/// f = prod (w - r_i), da/dr_i is read off -f/(w - r_i).
pub fn roots_to_coeffs_jacobian<F: Field>(roots: &[F; 5]) -> Matrix<F> {
    let one = roots[0].one();
    let mut cols: Vec<Vec<F>> = Vec::with_capacity(5);
    for i in 0..5 {
        let mut partial = UniPoly::constant(one.clone());
        for (j, r) in roots.iter().enumerate() {
            if j != i {
                partial = partial.mul(&UniPoly::from_coeffs(vec![r.neg(), r.one()]));
            }
        }
        // d a_k / d r_i = -[w^k] prod_{j != i} (w - r_j)
        let col: Vec<F> = (0..5)
            .map(|k| partial.coeff_or_zero(k, &one).neg())
            .collect();
        cols.push(col);
    }
    Matrix::from_fn(5, 5, |k, i| cols[i][k].clone())
}

/// Verify the compatibility identity between the root-based and the
/// coefficient-based pairing matrices:
///
///   N(r) * Disc(f_{a(r)}) = [Disc * M](a(r)) * da_r,
///
/// i.e. N(r) = M(a(r)) * da_r with M the rational-entry matrix (the
/// polynomial presentation of the pairing matrix absorbs one factor of the
/// discriminant). Returns the difference matrix on failure.
pub fn verify_nr_mada<F: Field>(roots: &[F; 5]) -> Result<std::result::Result<(), Matrix<F>>> {
    let n = matrix_n(roots)?;
    let m = model_from_roots(roots);
    let disc = m.poly().discriminant().map_err(Error::Math)?;
    if disc.is_zero() {
        return Err(Error::Math("repeated roots".into()));
    }
    let mm = matrix_m(&m)?;
    let da = roots_to_coeffs_jacobian(roots);
    let rhs = mm.mul(&da);
    if n == rhs {
        Ok(Ok(()))
    } else {
        let diff = Matrix::from_fn(3, 5, |i, j| n.at(i, j).sub(rhs.at(i, j)));
        Ok(Err(diff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{big, bigfrac, Rat};
    use crate::quad::Quad;
    
    fn model(a: [i64; 5]) -> QuinticModel<Rat> {
        QuinticModel::from_i64(&big(0), a)
    }

    #[test]
    fn trace_equals_root_sum_on_split_quintic() {
        // f = (w-1)(w-2)(w-3)(w-4)(w-5)
        let roots: [Rat; 5] = [big(1), big(2), big(3), big(4), big(5)];
        let m = model_from_roots(&roots);
        let fp = m.poly().derivative();
        for k in 2..=8usize {
            let direct: Rat = roots
                .iter()
                .map(|r| {
                    let mut rk = big(1);
                    for _ in 0..(k - 2) {
                        rk *= r;
                    }
                    let d = fp.eval(r);
                    rk / (&d * &d)
                })
                .sum();
            assert_eq!(trace_mk(&m, k).unwrap(), direct, "k = {k}");
        }
    }

    #[test]
    fn m2_vanishes_for_w5_minus_1() {
        // f = w^5 - 1: M_2 = sum 1/(5 r^4)^2 = (1/25) sum r^2 = 0
        let m = model([-1, 0, 0, 0, 0]);
        assert_eq!(trace_mk(&m, 2).unwrap(), big(0));
    }

    #[test]
    fn anchor_matrix_m() {
        let m = model([24, 52, -8, -12, -2]);
        let mm = matrix_m(&m).unwrap();
        let expect: [[i64; 5]; 3] = [
            [95, -8, 74, 328, 44],
            [-8, 74, 328, 44, 2752],
            [74, 328, 44, 2752, 5000],
        ];
        let den = big(256 * 729); // 2^8 * 3^6
        for i in 0..3 {
            for j in 0..5 {
                assert_eq!(mm.at(i, j), &(big(expect[i][j]) / &den), "entry {i},{j}");
            }
        }
        // Hankel structure: entry depends only on i + j
        for i in 0..3 {
            for j in 0..5 {
                assert_eq!(mm.at(i, j), &trace_mk(&m, i + j + 2).unwrap());
            }
        }
    }

    #[test]
    fn singular_model_is_rejected() {
        let m = model([0, 0, 0, 0, 0]);
        assert!(trace_mk(&m, 2).is_err());
        assert!(matrix_m(&m).is_err());
    }

    #[test]
    fn n_matrix_entries_and_permutation() {
        let roots: [Rat; 5] = [big(0), big(1), big(2), big(3), big(4)];
        let n = matrix_n(&roots).unwrap();
        // entry for root 0, power 0: -prod 1/(r_m - 0) = -1/24
        assert_eq!(n.at(0, 0), &bigfrac(-1, 24));
        // column for root r_j is (1, r_j, r_j^2) times a common factor
        for j in 0..5 {
            let base = n.at(0, j).clone();
            assert_eq!(n.at(1, j), &(&base * &roots[j]));
            assert_eq!(n.at(2, j), &(&base * &roots[j] * &roots[j]));
        }
        // permuting the roots permutes columns
        let perm: [Rat; 5] = [big(1), big(0), big(2), big(3), big(4)];
        let np = matrix_n(&perm).unwrap();
        for k in 0..3 {
            assert_eq!(np.at(k, 0), n.at(k, 1));
            assert_eq!(np.at(k, 1), n.at(k, 0));
        }
        // repeated roots error
        let bad: [Rat; 5] = [big(1), big(1), big(2), big(3), big(4)];
        assert!(matrix_n(&bad).is_err());
    }

    #[test]
    fn nr_mada_identity_at_consecutive_integers() {
        let roots: [Rat; 5] = [big(1), big(2), big(3), big(4), big(5)];
        assert!(verify_nr_mada(&roots).unwrap().is_ok());
    }

    #[test]
    fn galois_equivariance_of_m() {
        // over Q(sqrt(12)): conj(M(a)) = M(conj(a))
        let sq = Quad::sqrt_disc(12);
        let w = sq.zero();
        let a: [Quad; 5] = [
            w.from_i64(3).add(&sq),
            w.from_i64(-1),
            sq.mul(&w.from_i64(2)),
            w.from_i64(5).sub(&sq),
            w.from_i64(1),
        ];
        let m = QuinticModel::new(a.clone());
        let mc = QuinticModel::new([
            a[0].conj(),
            a[1].conj(),
            a[2].conj(),
            a[3].conj(),
            a[4].conj(),
        ]);
        let mm = matrix_m(&m).unwrap();
        let mmc = matrix_m(&mc).unwrap();
        for i in 0..3 {
            for j in 0..5 {
                assert_eq!(&mm.at(i, j).conj(), mmc.at(i, j));
            }
        }
    }
}
