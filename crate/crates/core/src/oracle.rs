//! Independent dimension and character oracles: the Weyl dimension formula
//! and Demazure operators. Neither uses admissible pairs or standard
//! monomials, so agreement with those counts is a genuine cross-check.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{RootSystem, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// A finite formal sum of weights with integer multiplicities. Zero
/// multiplicities are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(mu: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(mu, 1);
        c
    }

    pub fn add_term(&mut self, mu: Weight, mult: i64) {
        if mult == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(mult);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += mult;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(weights: I) -> Self {
        let mut c = Self::new();
        for w in weights {
            c.add_term(w, 1);
        }
        c
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn multiplicity(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    /// Sum of the multiplicities.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Image under `mu -> f(mu)`.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Character {
        let mut c = Character::new();
        for (mu, &m) in &self.terms {
            c.add_term(f(mu), m);
        }
        c
    }

    pub fn negate_weights(&self) -> Character {
        self.map_weights(|mu| -mu)
    }
}

/// `dim V(lambda) = prod_{beta > 0} <lambda + rho, beta^vee> / <rho, beta^vee>`.
pub fn weyl_dim(rs: &RootSystem, lam: &Weight) -> Result<u128> {
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.0.clone()));
    }
    let shifted = lam + &rs.rho();
    let rho = rs.rho();
    let mut prod = BigRational::one();
    for k in 0..rs.positive_roots().len() {
        let num = BigInt::from(rs.pairing_index(&shifted, k));
        let den = BigInt::from(rs.pairing_index(&rho, k));
        prod *= BigRational::new(num, den);
    }
    if !prod.is_integer() || prod.is_zero() {
        return Err(Error::Invariant(format!(
            "Weyl dimension {prod} is not a positive integer"
        )));
    }
    prod.to_integer()
        .to_u128()
        .ok_or_else(|| Error::Invariant("Weyl dimension overflows u128".into()))
}

/// Demazure operator `D_alpha` on one exponential:
/// `e^mu + e^{mu - alpha} + ... + e^{s_alpha mu}` when `n = <mu, alpha^vee> >= 0`,
/// zero when `n = -1`, and `-(e^{mu + alpha} + ... + e^{mu + (-n-1) alpha})`
/// when `n <= -2`.
fn demazure_monomial(rs: &RootSystem, i: usize, mu: &Weight, mult: i64, out: &mut Character) {
    let n = mu.0[i];
    let alpha = rs.simple_root_weight(i);
    if n >= 0 {
        let mut cur = mu.clone();
        for _ in 0..=n {
            out.add_term(cur.clone(), mult);
            cur = &cur - &alpha;
        }
    } else if n <= -2 {
        let mut cur = mu + &alpha;
        for _ in 1..=(-n - 1) {
            out.add_term(cur.clone(), -mult);
            cur = &cur + &alpha;
        }
    }
}

/// Applies `D_{alpha_i}` to a character.
pub fn demazure_apply(rs: &RootSystem, i: usize, c: &Character) -> Result<Character> {
    if i >= rs.rank() {
        return Err(Error::BadSimpleIndex(i));
    }
    let mut out = Character::new();
    for (mu, &m) in c.terms() {
        rs.check_weight(mu)?;
        demazure_monomial(rs, i, mu, m, &mut out);
    }
    Ok(out)
}

/// `D_{i_1} ... D_{i_k} e^lambda` along a reduced word `s_{i_1} ... s_{i_k}`;
/// the rightmost operator is applied first.
pub fn demazure_character_word(
    group: &WeylGroup,
    word: &[usize],
    lam: &Weight,
) -> Result<Character> {
    let rs = group.root_system();
    rs.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.0.clone()));
    }
    group.from_reduced_word(word)?;
    let mut c = Character::monomial(lam.clone());
    for &i in word.iter().rev() {
        c = demazure_apply(rs, i, &c)?;
    }
    Ok(c)
}

/// Demazure character of `w` along its canonical reduced word.
pub fn demazure_character(group: &WeylGroup, w: WeylElement, lam: &Weight) -> Result<Character> {
    demazure_character_word(group, group.word(w), lam)
}
