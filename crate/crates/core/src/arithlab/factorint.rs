//! Prime support of big integers: trial division, deterministic
//! Miller-Rabin for word-sized values, probabilistic Miller-Rabin and
//! Pollard-Brent rho for the rest.

use crate::fp::{is_prime_u64, mulmod_u64};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

const TRIAL_BOUND: u64 = 100_000;

/// Outcome of a prime-support computation. `unresolved` holds a composite
/// cofactor that resisted factoring; callers must surface it rather than
/// silently dropping candidate primes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeSupport {
    pub primes: BTreeSet<u64>,
    pub unresolved: Option<BigInt>,
}

pub fn is_probable_prime(n: &BigInt) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    if n.is_negative() || n.is_zero() || n.is_one() {
        return false;
    }
    // Miller-Rabin with fixed small bases; probabilistic for > 64 bits
    let n_minus_1: BigInt = n - BigInt::one();
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
        let a_big = BigInt::from(a);
        if &a_big >= n {
            continue;
        }
        let mut x = a_big.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&BigInt::from(2u32), n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_brent_u64(n: u64) -> Option<u64> {
    if n % 2 == 0 {
        return Some(2);
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod_u64(x, x, n) + c) % n;
        let (mut x, mut ys);
        let mut y = 2u64;
        let mut d = 1u64;
        let m = 128u64;
        let mut r = 1u64;
        let mut q = 1u64;
        x = y;
        ys = y;
        while d == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && d == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mulmod_u64(q, x.abs_diff(y), n);
                }
                d = gcd_u64(q, n);
                k += m;
            }
            r *= 2;
        }
        if d == n {
            d = 1;
            while d == 1 {
                ys = f(ys);
                d = gcd_u64(x.abs_diff(ys), n);
            }
        }
        if d != n {
            return Some(d);
        }
        c += 1;
        if c > 20 {
            return None;
        }
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn factor_u64_into(n: u64, out: &mut BTreeSet<u64>) {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m <= 1 {
            continue;
        }
        if is_prime_u64(m) {
            out.insert(m);
            continue;
        }
        match pollard_brent_u64(m) {
            Some(d) => {
                stack.push(d);
                stack.push(m / d);
            }
            None => {
                // effectively unreachable for composite u64 with the retry
                // loop above, but never silently drop a factor
                out.insert(m);
            }
        }
    }
}

/// Pollard-Brent rho over BigInt with a step budget.
fn pollard_brent_big(n: &BigInt, budget: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let _one = BigInt::one();
    for c in 1u64..8 {
        let cc = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &cc) % n;
        let mut y = BigInt::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut d = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut steps: u64 = 0;
        while d.is_one() && steps < budget {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0u64;
            while k < r && d.is_one() {
                ys = y.clone();
                let m = 128u64.min(r - k);
                for _ in 0..m {
                    y = f(&y);
                    let diff = (&x - &y).abs();
                    q = (&q * &diff) % n;
                }
                d = q.gcd(n);
                k += m;
                steps += m;
            }
            r *= 2;
        }
        if d == *n {
            d = BigInt::one();
            while d.is_one() {
                ys = f(&ys);
                d = (&x - &ys).abs().gcd(n);
            }
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
    }
    None
}

/// Set of primes dividing |n|, with an honest `unresolved` cofactor when a
/// composite piece resists Pollard rho within budget.
pub fn prime_support(n: &BigInt) -> PrimeSupport {
    let mut out = PrimeSupport::default();
    let mut n = n.abs();
    if n.is_zero() {
        return out;
    }
    // trial division by everything below the bound
    let mut p: u64 = 2;
    while p < TRIAL_BOUND {
        if n.is_one() {
            return out;
        }
        let pb = BigInt::from(p);
        if (&n % &pb).is_zero() {
            out.primes.insert(p);
            while (&n % &pb).is_zero() {
                n /= &pb;
            }
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    // remaining cofactor: perfect powers of primes, rho, or unresolved
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(v) = m.to_u64() {
            factor_u64_into(v, &mut out.primes);
            continue;
        }
        if is_probable_prime(&m) {
            // prime too large for the u64 set: treat as unresolved evidence
            out.unresolved = Some(match out.unresolved.take() {
                None => m,
                Some(u) => u * m,
            });
            continue;
        }
        match pollard_brent_big(&m, 2_000_000) {
            Some(d) => {
                let q = &m / &d;
                stack.push(d);
                stack.push(q);
            }
            None => {
                out.unresolved = Some(match out.unresolved.take() {
                    None => m,
                    Some(u) => u * m,
                });
            }
        }
    }
    out
}

/// Prime support when everything is expected to resolve; errors otherwise.
pub fn prime_support_exact(n: &BigInt) -> Result<BTreeSet<u64>, String> {
    let s = prime_support(n);
    match s.unresolved {
        None => Ok(s.primes),
        Some(u) => Err(format!("unresolved cofactor {u} while factoring")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_supports() {
        let n = BigInt::from(-281_600_000i64); // -2^13 * 5^5 * 11
        let s = prime_support(&n);
        assert_eq!(s.primes.iter().copied().collect::<Vec<_>>(), vec![2, 5, 11]);
        assert!(s.unresolved.is_none());
    }

    #[test]
    fn medium_primes_resolve() {
        let n = BigInt::from(1500529u64) * BigInt::from(1933u64) * BigInt::from(2u64).pow(40);
        let s = prime_support(&n);
        assert_eq!(
            s.primes.iter().copied().collect::<Vec<_>>(),
            vec![2, 1933, 1500529]
        );
    }

    #[test]
    fn big_semiprime_resolves_with_rho() {
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let s = prime_support(&(p * q));
        assert_eq!(
            s.primes.iter().copied().collect::<Vec<_>>(),
            vec![1_000_003, 1_000_033]
        );
    }

    #[test]
    fn zero_and_one() {
        assert!(prime_support(&BigInt::zero()).primes.is_empty());
        assert!(prime_support(&BigInt::one()).primes.is_empty());
    }
}
