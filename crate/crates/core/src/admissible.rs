//! Admissible pairs for a dominant weight of classical type.
//!
//! A pair `v <= w` in `W^lambda` is admissible when `v = w`, or when `w`
//! descends to `v` through a chain of covers each of Chevalley multiplicity 2
//! (a double chain). The relation is computed as the reflexive-transitive
//! closure of the double covers, bottom-up by length.

use crate::error::{Error, Result};
use crate::rootdata::Weight;
use crate::schubert::chevalley_multiplicity;
use crate::weyl::{stabilizer_subset, ParabolicQuotient, WeylElement, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub v: WeylElement,
    pub w: WeylElement,
    /// `w = w_1 > w_2 > ... > w_r = v`, empty for a trivial pair
    pub chain: Vec<WeylElement>,
    /// `-(w(lambda) + v(lambda))`, twice the weight of the pair
    pub xi2: Weight,
}

impl AdmissiblePair {
    pub fn is_trivial(&self) -> bool {
        self.v == self.w
    }

    /// The weight `xi = -(w(lambda) + v(lambda)) / 2`.
    pub fn xi(&self) -> Weight {
        self.xi2
            .halve()
            .expect("divisibility checked at construction")
    }
}

/// Bitset over positions in `W^lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

#[derive(Debug, Clone)]
pub struct AdmissibleSet {
    lambda: Weight,
    quotient: ParabolicQuotient,
    /// double lower covers of each element of `W^lambda`, in group order
    double_down: Vec<Vec<WeylElement>>,
    /// `reach[w]` holds every `v` with `(v, w)` admissible
    reach: Vec<Bits>,
    pairs: Vec<AdmissiblePair>,
}

fn require_classical(group: &WeylGroup, lam: &Weight) -> Result<()> {
    if !group.root_system().is_classical_type(lam)? {
        return Err(Error::NotClassicalType(lam.0.clone()));
    }
    Ok(())
}

/// All admissible pairs of `W^lambda`, each with its lexicographically least
/// double chain (comparing canonical words entry by entry).
pub fn enumerate_admissible(group: &WeylGroup, lam: &Weight) -> Result<AdmissibleSet> {
    group.root_system().check_weight(lam)?;
    require_classical(group, lam)?;
    let q = ParabolicQuotient::new(group, &stabilizer_subset(lam)?)?;
    let n = q.len();

    let mut double_down = vec![Vec::new(); n];
    for (p, &w) in q.elements().iter().enumerate() {
        for u in q.lower_covers(group, w) {
            let m = chevalley_multiplicity(group, &q, u, w, lam)?;
            if m <= 0 {
                return Err(Error::Invariant(format!(
                    "non-positive Chevalley multiplicity {m} for {} < {}",
                    group.format(u),
                    group.format(w)
                )));
            }
            if m == 2 {
                double_down[p].push(u);
            }
        }
        // canonical words within a length level follow group order
        double_down[p].sort_by(|a, b| group.word(*a).cmp(group.word(*b)));
    }

    // elements are in length order, so covers are processed first
    let mut reach: Vec<Bits> = Vec::with_capacity(n);
    for p in 0..n {
        let mut bits = Bits::new(n);
        bits.set(p);
        for u in &double_down[p] {
            let up = q.position(*u).unwrap();
            let below = reach[up].clone();
            bits.union_with(&below);
        }
        reach.push(bits);
    }

    let mut set = AdmissibleSet {
        lambda: lam.clone(),
        quotient: q,
        double_down,
        reach,
        pairs: Vec::new(),
    };
    let mut pairs = Vec::new();
    for &w in set.quotient.elements() {
        for &v in set.quotient.elements() {
            if let Some(chain) = set.is_admissible(v, w) {
                let xi2 = -&(&group.act(w, lam) + &group.act(v, lam));
                if xi2.halve().is_none() {
                    return Err(Error::Invariant(format!(
                        "w(lambda)+v(lambda) not divisible by 2 for ({}, {})",
                        group.format(v),
                        group.format(w)
                    )));
                }
                pairs.push(AdmissiblePair { v, w, chain, xi2 });
            }
        }
    }
    set.pairs = pairs;
    Ok(set)
}

impl AdmissibleSet {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    /// `W^lambda`.
    pub fn quotient(&self) -> &ParabolicQuotient {
        &self.quotient
    }

    /// All admissible pairs, ordered by `w` then `v` in group order.
    pub fn pairs(&self) -> &[AdmissiblePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The witnessing double chain if `(v, w)` is admissible (empty when
    /// `v = w`), `None` otherwise.
    pub fn is_admissible(&self, v: WeylElement, w: WeylElement) -> Option<Vec<WeylElement>> {
        let (pv, pw) = (self.quotient.position(v)?, self.quotient.position(w)?);
        if !self.reach[pw].get(pv) {
            return None;
        }
        if v == w {
            return Some(Vec::new());
        }
        let mut chain = vec![w];
        let mut cur = pw;
        while cur != pv {
            // smallest double cover from which v is still reachable
            let next = self.double_down[cur]
                .iter()
                .copied()
                .find(|u| self.reach[self.quotient.position(*u).unwrap()].get(pv))
                .expect("reachability implies a next step");
            chain.push(next);
            cur = self.quotient.position(next).unwrap();
        }
        Some(chain)
    }

    /// The admissible pairs with the given upper element.
    pub fn pairs_with_top(&self, w: WeylElement) -> impl Iterator<Item = &AdmissiblePair> {
        self.pairs.iter().filter(move |p| p.w == w)
    }

    pub fn pair(&self, v: WeylElement, w: WeylElement) -> Option<&AdmissiblePair> {
        self.pairs.iter().find(|p| p.v == v && p.w == w)
    }
}

/// Enumerates every saturated chain from `w` down to `v` in `W^lambda` and
/// checks that all its covers have Chevalley multiplicity 2.
pub fn all_chains_double(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    v: WeylElement,
    w: WeylElement,
    lam: &Weight,
) -> Result<bool> {
    fn walk(
        group: &WeylGroup,
        q: &ParabolicQuotient,
        v: WeylElement,
        cur: WeylElement,
        lam: &Weight,
    ) -> Result<bool> {
        if cur == v {
            return Ok(true);
        }
        for u in q.lower_covers(group, cur) {
            if !q.leq(group, v, u) {
                continue;
            }
            if chevalley_multiplicity(group, q, u, cur, lam)? != 2 || !walk(group, q, v, u, lam)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    if !q.leq(group, v, w) {
        return Err(Error::InvalidPair(group.format(v), group.format(w)));
    }
    walk(group, q, v, w, lam)
}

/// `xi = -(w(lambda) + v(lambda)) / 2`; an odd sum is an invariant violation.
pub fn pair_weight(group: &WeylGroup, pair: &AdmissiblePair, lam: &Weight) -> Result<Weight> {
    let sum = &group.act(pair.w, lam) + &group.act(pair.v, lam);
    (-&sum)
        .halve()
        .ok_or_else(|| Error::Invariant(format!("odd weight sum {sum}")))
}
