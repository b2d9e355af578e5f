//! Random points of Schubert and opposite Schubert varieties of `SL(n)/B`
//! over a prime field, and minors evaluated at them.
//!
//! A point of the cell `BwB/B` is `x_{i_1}(t_1) s_{i_1} ... x_{i_k}(t_k) s_{i_k}`
//! along a reduced word, with `x_i(t) = 1 + t E_{i,i+1}` and `s_i` the
//! permutation matrix of `(i, i+1)`. Permutations act by `e_j -> e_{w(j)}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::PlueckerIndex;
use crate::error::{Error, Result};
use crate::rootdata::Family;
use crate::weyl::{WeylElement, WeylGroup};

/// A permutation of `{0..n-1}` given by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// `j -> n-1-j`.
    pub fn longest(n: usize) -> Self {
        Perm((0..n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `(self o other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    /// `s_{i_1} o ... o s_{i_k}`, with `s_i` swapping `i` and `i+1` (0-based).
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut p = Perm::identity(n);
        for &i in word {
            p.0.swap(i, i + 1);
        }
        p
    }

    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.0[a] > self.0[b])
            .count()
    }

    /// A reduced word, found by peeling right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..p.n().saturating_sub(1)).find(|&i| p.0[i] > p.0[i + 1]) {
            p.0.swap(i, i + 1);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// `w({0..k-1})`, sorted, as a 1-based Pluecker index.
    pub fn image_index(&self, k: usize) -> Result<PlueckerIndex> {
        let mut e: Vec<usize> = self.0[..k].iter().map(|j| j + 1).collect();
        e.sort_unstable();
        PlueckerIndex::new(e, self.n())
    }

    /// The minimal permutation with `w({1..r}) = I`.
    pub fn grassmann(idx: &PlueckerIndex) -> Perm {
        let n = idx.n();
        let mut images: Vec<usize> = idx.entries().iter().map(|i| i - 1).collect();
        images.extend((0..n).filter(|j| !idx.entries().contains(&(j + 1))));
        Perm(images)
    }

    /// The permutation of a type A Weyl group element.
    pub fn of_element(group: &WeylGroup, w: WeylElement) -> Result<Perm> {
        let ct = group.root_system().cartan_type();
        if ct.family != Family::A {
            return Err(Error::NotTypeA(ct.to_string()));
        }
        Ok(Perm::from_word(ct.rank + 1, group.word(w)))
    }
}

/// An `n x n` matrix over the field, representing a point `gB`.
#[derive(Debug, Clone)]
pub struct FlagSample {
    field: PrimeField,
    g: Vec<Vec<u64>>,
}

impl FlagSample {
    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.g
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// The minor on the given 0-based rows and the first `rows.len()` columns.
    pub fn minor(&self, rows: &[usize]) -> u64 {
        let k = rows.len();
        let m: Vec<Vec<u64>> = rows.iter().map(|&r| self.g[r][..k].to_vec()).collect();
        self.field.det(m)
    }

    /// `p_I` of the span of the first `r` columns.
    pub fn pluecker(&self, idx: &PlueckerIndex) -> u64 {
        let rows: Vec<usize> = idx.entries().iter().map(|i| i - 1).collect();
        self.minor(&rows)
    }

    /// `p_{x(omega_k)}` for the permutation `x`: the minor on rows `x({1..k})`.
    pub fn extremal(&self, x: &Perm, k: usize) -> u64 {
        let mut rows: Vec<usize> = x.0[..k].to_vec();
        rows.sort_unstable();
        self.minor(&rows)
    }

    fn left_mul_perm(&self, p: &Perm) -> FlagSample {
        let n = self.g.len();
        let mut g = vec![vec![0; n]; n];
        for j in 0..n {
            g[p.0[j]] = self.g[j].clone();
        }
        FlagSample {
            field: self.field,
            g,
        }
    }
}

/// Reproducible sampler of points over `F_p`.
#[derive(Debug, Clone)]
pub struct Sampler {
    field: PrimeField,
    rng: ChaCha8Rng,
}

const MAX_RETRIES: usize = 8;

impl Sampler {
    pub fn new(seed: u64, prime: u64) -> Result<Self> {
        Ok(Sampler {
            field: PrimeField::new(prime)?,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// A random point of the cell of `w`, dense in the Schubert variety.
    pub fn schubert(&mut self, w: &Perm) -> FlagSample {
        let n = w.n();
        let f = self.field;
        let mut g: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        for i in w.reduced_word() {
            let t = self.rng.gen_range(0..f.prime());
            // right multiplication by x_i(t): column i+1 += t * column i
            for row in g.iter_mut() {
                row[i + 1] = f.add(row[i + 1], f.mul(t, row[i]));
            }
            // then by s_i: swap columns i and i+1
            for row in g.iter_mut() {
                row.swap(i, i + 1);
            }
        }
        FlagSample { field: f, g }
    }

    /// A point of the opposite Schubert variety `X^v = w_o X_{w_o v}`.
    pub fn opposite(&mut self, v: &Perm) -> FlagSample {
        let wo = Perm::longest(v.n());
        self.schubert(&wo.compose(v)).left_mul_perm(&wo)
    }

    /// A point of the Grassmannian Schubert variety `X_I`, rejecting samples
    /// whose `p_I` vanishes.
    pub fn grassmann_schubert(&mut self, idx: &PlueckerIndex) -> Result<FlagSample> {
        let w = Perm::grassmann(idx);
        for _ in 0..MAX_RETRIES {
            let s = self.schubert(&w);
            if s.pluecker(idx) != 0 {
                return Ok(s);
            }
        }
        Err(Error::DegenerateSample(MAX_RETRIES))
    }

    /// A point of the opposite Grassmannian Schubert variety `X^I`.
    pub fn grassmann_opposite(&mut self, idx: &PlueckerIndex) -> Result<FlagSample> {
        let w = Perm::grassmann(idx);
        for _ in 0..MAX_RETRIES {
            let s = self.opposite(&w);
            if s.pluecker(idx) != 0 {
                return Ok(s);
            }
        }
        Err(Error::DegenerateSample(MAX_RETRIES))
    }
}
