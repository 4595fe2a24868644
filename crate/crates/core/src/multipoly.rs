//! Sparse multivariate polynomials with a fixed arity.
//!
//! Terms live in a BTreeMap keyed by exponent vectors, so iteration order
//! (and therefore every derived computation) is deterministic. Arity is 2
//! for the (r, s)-plane polynomials and 5 for invariant polynomials in the
//! quintic coefficients.

use crate::field::Field;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<F: Field> {
    arity: usize,
    terms: BTreeMap<Vec<u32>, F>,
    witness: F,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(arity: usize, witness: F) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
            witness,
        }
    }

    pub fn constant(arity: usize, c: F) -> Self {
        let mut p = MultiPoly::zero(arity, c.zero());
        p.add_term(vec![0; arity], c);
        p
    }

    /// The i-th variable.
    pub fn var(arity: usize, i: usize, witness: F) -> Self {
        assert!(i < arity);
        let mut e = vec![0; arity];
        e[i] = 1;
        let mut p = MultiPoly::zero(arity, witness.clone());
        p.add_term(e, witness.one());
        p
    }

    pub fn from_terms(arity: usize, terms: Vec<(Vec<u32>, F)>, witness: F) -> Self {
        let mut p = MultiPoly::zero(arity, witness);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Instantiate an integer table like the generated invariant tables.
    pub fn from_integer_table(arity: usize, table: &[(i64, &[u8])], witness: &F) -> Self {
        let mut p = MultiPoly::zero(arity, witness.zero());
        for (c, exps) in table {
            assert_eq!(exps.len(), arity);
            p.add_term(
                exps.iter().map(|&e| e as u32).collect(),
                witness.from_i64(*c),
            );
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: F) {
        assert_eq!(exps.len(), self.arity, "arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
            witness: self.witness.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.arity, rhs.arity);
        let mut out = MultiPoly::zero(self.arity, self.witness.clone());
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = MultiPoly::zero(self.arity, self.witness.clone());
        for (e, a) in self.terms.iter() {
            out.add_term(e.clone(), a.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::constant(self.arity, self.witness.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.arity);
        let mut out = MultiPoly::zero(self.arity, self.witness.clone());
        for (e, c) in self.terms.iter() {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c.mul(&c.from_i64(e[var] as i64)));
        }
        out
    }

    /// Evaluate at a point whose coordinates live in any field G, mapping
    /// coefficients through `lift`. Powers of each coordinate are cached,
    /// so the cost is one multiplication per (term, variable) pair.
    pub fn eval_in<G: Field>(&self, point: &[G], lift: impl Fn(&F) -> G) -> G {
        assert_eq!(point.len(), self.arity);
        let witness = point
            .first()
            .map(|x| x.zero())
            .expect("evaluation needs at least one coordinate");
        let mut max_exp = vec![0u32; self.arity];
        for e in self.terms.keys() {
            for (m, &x) in max_exp.iter_mut().zip(e) {
                *m = (*m).max(x);
            }
        }
        let pow_tables: Vec<Vec<G>> = point
            .iter()
            .zip(max_exp.iter())
            .map(|(x, &m)| {
                let mut tab = Vec::with_capacity(m as usize + 1);
                tab.push(x.one());
                for k in 1..=m as usize {
                    let next = tab[k - 1].mul(x);
                    tab.push(next);
                }
                tab
            })
            .collect();
        let mut acc = witness.zero();
        for (e, c) in self.terms.iter() {
            let mut term = lift(c);
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&pow_tables[i][exp as usize]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn eval(&self, point: &[F]) -> F {
        self.eval_in(point, |c| c.clone())
    }

    /// Map coefficients through a field homomorphism-like closure.
    pub fn map_coeffs<G: Field>(&self, witness: G, f: impl Fn(&F) -> G) -> MultiPoly<G> {
        let mut out = MultiPoly::zero(self.arity, witness);
        for (e, c) in self.terms.iter() {
            out.add_term(e.clone(), f(c));
        }
        out
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: Vec<String> = match self.arity {
            1 => vec!["t".into()],
            2 => vec!["r".into(), "s".into()],
            _ => (0..self.arity).map(|i| format!("x{i}")).collect(),
        };
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &exp) in e.iter().enumerate() {
                match exp {
                    0 => {}
                    1 => write!(f, "*{}", names[i])?,
                    _ => write!(f, "*{}^{}", names[i], exp)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::field::Rat;
    use super::*;
    use crate::field::big;
    
    fn rs(pairs: &[(i64, [u32; 2])]) -> MultiPoly<Rat> {
        MultiPoly::from_terms(
            2,
            pairs.iter().map(|&(c, e)| (e.to_vec(), big(c))).collect(),
            big(0),
        )
    }

    #[test]
    fn ring_ops_and_eval() {
        let p = rs(&[(27, [1, 0]), (8, [0, 0]), (-12, [0, 1]), (-9, [0, 2]), (13, [0, 3])]);
        // w12 at r = -3/8-ish sanity: eval at integers
        let v = p.eval(&[big(1), big(2)]);
        assert_eq!(v, big(27 + 8 - 24 - 36 + 104));
        let q = p.mul(&p);
        assert_eq!(
            q.eval(&[big(1), big(2)]),
            v.clone() * v
        );
    }

    #[test]
    fn derivative() {
        let p = rs(&[(3, [2, 1]), (5, [0, 2])]);
        let dr = p.partial_derivative(0);
        assert_eq!(dr, rs(&[(6, [1, 1])]));
        let ds = p.partial_derivative(1);
        assert_eq!(ds, rs(&[(3, [2, 0]), (10, [0, 1])]));
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = rs(&[(1, [1, 0]), (-1, [1, 0])]);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }
}
