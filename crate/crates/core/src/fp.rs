//! The prime field F_p for word-sized p.
//!
//! Used as a search field when deciding singularity of integral models at a
//! prime. p must be an odd-or-two prime below 2^31 so products fit in u64.

use crate::field::{Field, Rat};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub val: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(val: i64, p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31), "modulus out of range");
        Fp {
            val: val.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn from_bigint(n: &BigInt, p: u64) -> Self {
        let m = n.mod_floor_u64(p);
        Fp { val: m, p }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp { val: 1, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        m.to_u64().expect("mod_floor in range")
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.val)
    }
}

impl Field for Fp {
    fn zero(&self) -> Self {
        Fp { val: 0, p: self.p }
    }
    fn one(&self) -> Self {
        Fp { val: 1, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.val == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: (self.val + rhs.val) % self.p,
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            val: (self.p - self.val) % self.p,
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            val: (self.val * rhs.val) % self.p,
            p: self.p,
        }
    }
    fn inv(&self) -> Self {
        assert!(self.val != 0, "inverse of zero in F_{}", self.p);
        self.pow(self.p - 2)
    }
    fn from_i64(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }
    fn from_rational(&self, q: &Rat) -> Self {
        let d = Fp::from_bigint(q.denom(), self.p);
        assert!(d.val != 0, "denominator divisible by {}", self.p);
        Fp::from_bigint(q.numer(), self.p).mul(&d.inv())
    }

    fn sqrt(&self) -> Option<Self> {
        if self.val == 0 {
            return Some(*self);
        }
        if self.p == 2 {
            return Some(*self);
        }
        if self.pow((self.p - 1) / 2).val != 1 {
            return None;
        }
        if self.p % 4 == 3 {
            return Some(self.pow((self.p + 1) / 4));
        }
        // Tonelli-Shanks
        let p = self.p;
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = Fp { val: 2, p };
        while z.pow((p - 1) / 2).val == 1 {
            z = Fp {
                val: z.val + 1,
                p,
            };
        }
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow((q + 1) / 2);
        while t.val != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt.val != 1 {
                tt = tt.mul(&tt);
                i += 1;
                if i == m {
                    return None;
                }
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = b.mul(&b);
            }
            m = i;
            c = b.mul(&b);
            t = t.mul(&c);
            r = r.mul(&b);
        }
        Some(r)
    }

    fn is_canonical_positive(&self) -> bool {
        self.val != 0 && self.val <= (self.p - 1) / 2
    }
}

/// Deterministic Miller-Rabin for u64 (the first twelve primes are a
/// proven-complete witness set below 3.3 * 10^24).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = modpow_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn modpow_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        e >>= 1;
    }
    acc
}
