//! Arithmetic in a prime field `F_p` with `2^30 < p < 2^32`.

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 1 << 30 || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Determinant by elimination.
    pub fn det(&self, mut m: Vec<Vec<u64>>) -> u64 {
        let n = m.len();
        let mut det = 1;
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            if piv != c {
                m.swap(piv, c);
                det = self.neg(det);
            }
            det = self.mul(det, m[c][c]);
            let inv = self.inv(m[c][c]);
            for r in c + 1..n {
                if m[r][c] == 0 {
                    continue;
                }
                let f = self.mul(m[r][c], inv);
                for k in c..n {
                    let sub = self.mul(f, m[c][k]);
                    m[r][k] = self.sub(m[r][k], sub);
                }
            }
        }
        det
    }

    /// Rank of a rectangular matrix.
    pub fn rank(&self, mut m: Vec<Vec<u64>>) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
                continue;
            };
            m.swap(piv, rank);
            let inv = self.inv(m[rank][c]);
            for r in 0..rows {
                if r == rank || m[r][c] == 0 {
                    continue;
                }
                let f = self.mul(m[r][c], inv);
                for k in c..cols {
                    let sub = self.mul(f, m[rank][k]);
                    m[r][k] = self.sub(m[r][k], sub);
                }
            }
            rank += 1;
        }
        rank
    }
}
