//! Standard monomials for a sequence of classical-type weights on Richardson
//! varieties of `G/P`, and their counts on unions.

use std::collections::{BTreeSet, HashMap};

use crate::admissible::{enumerate_admissible, AdmissiblePair, AdmissibleSet};
use crate::error::{Error, Result};
use crate::rootdata::Weight;
use crate::schubert::{richardson_contains, RichardsonPair};
use crate::weyl::{stabilizer_subset, CosetLifts, ParabolicQuotient, WeylElement, WeylGroup};

/// A standard sequence `pi_1, ..., pi_m` with its certifying lifts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomial {
    pub factors: Vec<AdmissiblePair>,
    /// `v~_m <= w~_m <= ... <= v~_1 <= w~_1` in `W^P`
    pub lifts: Vec<WeylElement>,
    pub total_weight: Weight,
}

impl StandardMonomial {
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// The factor classes as `(v, w)` pairs.
    pub fn classes(&self) -> Vec<(WeylElement, WeylElement)> {
        self.factors.iter().map(|p| (p.v, p.w)).collect()
    }
}

#[derive(Debug, Clone)]
struct Factor {
    lambda: Weight,
    admissible: AdmissibleSet,
    lifts: CosetLifts,
}

/// The data shared by every standardness question for fixed `P` and weights
/// `lambda_1, ..., lambda_m`.
#[derive(Debug, Clone)]
pub struct SmtContext<'g> {
    group: &'g WeylGroup,
    quotient: ParabolicQuotient,
    factors: Vec<Factor>,
}

impl<'g> SmtContext<'g> {
    /// Each weight must be dominant, of classical type, and a character of the
    /// parabolic generated by `parabolic`.
    pub fn new(group: &'g WeylGroup, parabolic: &[usize], weights: &[Weight]) -> Result<Self> {
        let rs = group.root_system();
        for &j in parabolic {
            if j >= rs.rank() {
                return Err(Error::BadSimpleIndex(j));
            }
        }
        let quotient = ParabolicQuotient::new(group, parabolic)?;
        let mut factors: Vec<Factor> = Vec::with_capacity(weights.len());
        for lam in weights {
            rs.check_weight(lam)?;
            if !lam.is_dominant() {
                return Err(Error::NotDominant(lam.0.clone()));
            }
            if parabolic.iter().any(|&j| lam.0[j] != 0) {
                return Err(Error::NotCharacterOfParabolic(lam.0.clone()));
            }
            if let Some(f) = factors.iter().find(|f| &f.lambda == lam) {
                let f = f.clone();
                factors.push(f);
                continue;
            }
            let admissible = enumerate_admissible(group, lam)?;
            let lifts = CosetLifts::new(group, quotient.clone(), admissible.quotient().clone())?;
            factors.push(Factor {
                lambda: lam.clone(),
                admissible,
                lifts,
            });
        }
        Ok(SmtContext {
            group,
            quotient,
            factors,
        })
    }

    /// A single weight with `P = P_lambda`.
    pub fn for_weight(group: &'g WeylGroup, lam: &Weight) -> Result<Self> {
        group.root_system().check_weight(lam)?;
        Self::new(group, &stabilizer_subset(lam)?, std::slice::from_ref(lam))
    }

    pub fn group(&self) -> &'g WeylGroup {
        self.group
    }

    /// `W^P`.
    pub fn quotient(&self) -> &ParabolicQuotient {
        &self.quotient
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Simple roots fixing every weight; `P` must be generated by them for
    /// the weights to give an embedding of `G/P`.
    pub fn common_stabilizer(&self) -> Vec<usize> {
        (0..self.group.rank())
            .filter(|&j| self.factors.iter().all(|f| f.lambda.0[j] == 0))
            .collect()
    }

    /// Counting on unions needs `P` equal to the common stabilizer: otherwise
    /// distinct points of `G/P` can share all their monomials.
    pub fn require_ample(&self) -> Result<()> {
        let stabilizer = self.common_stabilizer();
        if self.quotient.subset() != stabilizer.as_slice() {
            return Err(Error::NotAmple {
                parabolic: self.quotient.subset().to_vec(),
                stabilizer,
            });
        }
        Ok(())
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.factors.iter().map(|f| f.lambda.clone()).collect()
    }

    pub fn admissible(&self, i: usize) -> &AdmissibleSet {
        &self.factors[i].admissible
    }

    pub fn lifts(&self, i: usize) -> &CosetLifts {
        &self.factors[i].lifts
    }

    pub fn pair(&self, v: WeylElement, w: WeylElement) -> Result<RichardsonPair> {
        RichardsonPair::new(self.group, &self.quotient, v, w)
    }

    pub fn full_pair(&self) -> RichardsonPair {
        RichardsonPair::full(self.group, &self.quotient)
    }

    /// Looks up the admissible pair `(v, w)` for factor `i`.
    pub fn factor_pair(&self, i: usize, v: WeylElement, w: WeylElement) -> Result<&AdmissiblePair> {
        let f = self
            .factors
            .get(i)
            .ok_or_else(|| Error::Invariant(format!("no factor {i}")))?;
        f.admissible
            .pair(v, w)
            .ok_or_else(|| Error::InvalidPair(self.group.format(v), self.group.format(w)))
    }

    /// The monomial with the given factor classes, without lifts.
    pub fn monomial(&self, classes: &[(WeylElement, WeylElement)]) -> Result<StandardMonomial> {
        if classes.len() != self.degree() {
            return Err(Error::WeightLength {
                got: classes.len(),
                expected: self.degree(),
            });
        }
        let factors = classes
            .iter()
            .enumerate()
            .map(|(i, &(v, w))| self.factor_pair(i, v, w).cloned())
            .collect::<Result<Vec<_>>>()?;
        let total_weight = total_weight(self.group.rank(), &factors);
        Ok(StandardMonomial {
            factors,
            lifts: Vec::new(),
            total_weight,
        })
    }

    /// One greedy step: minimal lifts of factor `i` above `cur`.
    fn step(
        &self,
        i: usize,
        p: &AdmissiblePair,
        cur: WeylElement,
    ) -> Result<Option<(WeylElement, WeylElement)>> {
        let lifts = &self.factors[i].lifts;
        let Some(vt) = lifts.lambda_minimal_lift(self.group, p.v, cur)? else {
            return Ok(None);
        };
        let Some(wt) = lifts.lambda_minimal_lift(self.group, p.w, vt)? else {
            return Ok(None);
        };
        Ok(Some((vt, wt)))
    }

    /// Certifying lifts `v~_m, w~_m, ..., v~_1, w~_1` if the monomial is
    /// standard on `X_w^v`, found greedily from below.
    pub fn certify(
        &self,
        factors: &[AdmissiblePair],
        pair: &RichardsonPair,
    ) -> Result<Option<Vec<WeylElement>>> {
        if factors.len() != self.degree() {
            return Err(Error::WeightLength {
                got: factors.len(),
                expected: self.degree(),
            });
        }
        let mut cur = pair.v;
        let mut out = Vec::with_capacity(2 * factors.len());
        for (i, p) in factors.iter().enumerate().rev() {
            match self.step(i, p, cur)? {
                Some((vt, wt)) => {
                    out.push(vt);
                    out.push(wt);
                    cur = wt;
                }
                None => return Ok(None),
            }
        }
        Ok(self.quotient.leq(self.group, cur, pair.w).then_some(out))
    }

    /// Reference search over every tuple of lifts; exponential, for testing
    /// the greedy certificate on small cases.
    pub fn certify_exhaustive(
        &self,
        factors: &[AdmissiblePair],
        pair: &RichardsonPair,
    ) -> Option<Vec<WeylElement>> {
        let mut choices: Vec<&[WeylElement]> = Vec::new();
        for (i, p) in factors.iter().enumerate().rev() {
            choices.push(self.factors[i].lifts.lifts(p.v));
            choices.push(self.factors[i].lifts.lifts(p.w));
        }
        let mut acc = Vec::new();
        self.exhaustive_rec(&choices, pair.v, pair.w, &mut acc)
            .then_some(acc)
    }

    fn exhaustive_rec(
        &self,
        choices: &[&[WeylElement]],
        cur: WeylElement,
        top: WeylElement,
        acc: &mut Vec<WeylElement>,
    ) -> bool {
        let Some((first, rest)) = choices.split_first() else {
            return self.quotient.leq(self.group, cur, top);
        };
        for &u in *first {
            if self.quotient.leq(self.group, cur, u) {
                acc.push(u);
                if self.exhaustive_rec(rest, u, top, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }

    /// Every standard monomial on `X_w^v`, ordered by the positions of their
    /// factors in the admissible-pair lists.
    pub fn enumerate_standard(&self, pair: &RichardsonPair) -> Result<Vec<StandardMonomial>> {
        self.quotient.require(self.group, pair.v)?;
        self.quotient.require(self.group, pair.w)?;
        let m = self.degree();
        let mut found: Vec<(Vec<usize>, Vec<WeylElement>)> = Vec::new();
        let mut chosen = vec![0usize; m];
        let mut lifts = Vec::with_capacity(2 * m);
        self.enumerate_rec(m, pair.v, pair.w, &mut chosen, &mut lifts, &mut found)?;
        found.sort();
        Ok(found
            .into_iter()
            .map(|(idx, lifts)| {
                let factors: Vec<AdmissiblePair> = idx
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| self.factors[i].admissible.pairs()[k].clone())
                    .collect();
                let total_weight = total_weight(self.group.rank(), &factors);
                StandardMonomial {
                    factors,
                    lifts,
                    total_weight,
                }
            })
            .collect())
    }

    fn enumerate_rec(
        &self,
        i: usize,
        cur: WeylElement,
        top: WeylElement,
        chosen: &mut Vec<usize>,
        lifts: &mut Vec<WeylElement>,
        found: &mut Vec<(Vec<usize>, Vec<WeylElement>)>,
    ) -> Result<()> {
        if i == 0 {
            found.push((chosen.clone(), lifts.clone()));
            return Ok(());
        }
        let i = i - 1;
        for (k, p) in self.factors[i].admissible.pairs().iter().enumerate() {
            let Some((vt, wt)) = self.step(i, p, cur)? else {
                continue;
            };
            if !self.quotient.leq(self.group, wt, top) {
                continue;
            }
            chosen[i] = k;
            lifts.push(vt);
            lifts.push(wt);
            self.enumerate_rec(i, wt, top, chosen, lifts, found)?;
            lifts.truncate(lifts.len() - 2);
        }
        Ok(())
    }

    pub fn count_standard(&self, pair: &RichardsonPair) -> Result<usize> {
        Ok(self.enumerate_standard(pair)?.len())
    }
}

fn total_weight(rank: usize, factors: &[AdmissiblePair]) -> Weight {
    factors
        .iter()
        .fold(Weight::zero(rank), |acc, p| &acc + &p.xi())
}

/// Whether `mono` is standard on `X_w^v`; on success the certifying lifts are
/// returned.
pub fn is_standard_on(
    ctx: &SmtContext<'_>,
    mono: &StandardMonomial,
    pair: &RichardsonPair,
) -> Result<Option<Vec<WeylElement>>> {
    ctx.certify(&mono.factors, pair)
}

/// A union of Richardson varieties with no component contained in another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichardsonUnion {
    components: Vec<RichardsonPair>,
}

impl RichardsonUnion {
    /// Drops duplicate and contained components; the rest keep their order.
    pub fn new(group: &WeylGroup, q: &ParabolicQuotient, components: Vec<RichardsonPair>) -> Self {
        let mut kept: Vec<RichardsonPair> = Vec::new();
        for (i, c) in components.iter().enumerate() {
            let redundant = components.iter().enumerate().any(|(j, d)| {
                j != i
                    && richardson_contains(group, q, d, c)
                    && (!richardson_contains(group, q, c, d) || j < i)
            });
            if !redundant {
                kept.push(*c);
            }
        }
        RichardsonUnion { components: kept }
    }

    pub fn components(&self) -> &[RichardsonPair] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    fn key(&self) -> Vec<(usize, usize)> {
        let mut k: Vec<(usize, usize)> = self.components.iter().map(|p| (p.v.0, p.w.0)).collect();
        k.sort();
        k
    }
}

/// Minimal elements of the common upper bounds of `a` and `b` in `W^P`.
pub fn minimal_upper_bounds(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    a: WeylElement,
    b: WeylElement,
) -> Vec<WeylElement> {
    let ub: Vec<WeylElement> = q
        .elements()
        .iter()
        .copied()
        .filter(|&c| q.leq(group, a, c) && q.leq(group, b, c))
        .collect();
    ub.iter()
        .copied()
        .filter(|&c| !ub.iter().any(|&d| d != c && q.leq(group, d, c)))
        .collect()
}

/// Maximal elements of the common lower bounds of `a` and `b` in `W^P`.
pub fn maximal_lower_bounds(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    a: WeylElement,
    b: WeylElement,
) -> Vec<WeylElement> {
    let lb: Vec<WeylElement> = q
        .elements()
        .iter()
        .copied()
        .filter(|&c| q.leq(group, c, a) && q.leq(group, c, b))
        .collect();
    lb.iter()
        .copied()
        .filter(|&c| !lb.iter().any(|&d| d != c && q.leq(group, c, d)))
        .collect()
}

/// `X_w^v` meet `X_{w'}^{v'}` as a union of Richardson varieties `X_b^a`,
/// `a` a minimal upper bound of the `v`s and `b` a maximal lower bound of the
/// `w`s.
pub fn intersect_pairs(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    x: &RichardsonPair,
    y: &RichardsonPair,
) -> RichardsonUnion {
    let mut comps = Vec::new();
    for a in minimal_upper_bounds(group, q, x.v, y.v) {
        for b in maximal_lower_bounds(group, q, x.w, y.w) {
            if q.leq(group, a, b) {
                comps.push(RichardsonPair { v: a, w: b });
            }
        }
    }
    RichardsonUnion::new(group, q, comps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnionCount {
    /// monomials standard on at least one component
    pub direct: usize,
    /// `h(X) + h(Y) - h(X cap Y)` applied recursively
    pub inclusion_exclusion: i64,
}

impl UnionCount {
    pub fn agrees(&self) -> bool {
        self.direct as i64 == self.inclusion_exclusion
    }
}

/// Memoized counts on single Richardson varieties and on unions.
pub struct UnionCounter<'c, 'g> {
    ctx: &'c SmtContext<'g>,
    single: HashMap<(usize, usize), usize>,
    unions: HashMap<Vec<(usize, usize)>, i64>,
}

impl<'c, 'g> UnionCounter<'c, 'g> {
    pub fn new(ctx: &'c SmtContext<'g>) -> Self {
        UnionCounter {
            ctx,
            single: HashMap::new(),
            unions: HashMap::new(),
        }
    }

    pub fn single(&mut self, pair: &RichardsonPair) -> Result<usize> {
        if let Some(&n) = self.single.get(&(pair.v.0, pair.w.0)) {
            return Ok(n);
        }
        let n = self.ctx.count_standard(pair)?;
        self.single.insert((pair.v.0, pair.w.0), n);
        Ok(n)
    }

    /// `h(X_1 cup ... cup X_k) = h(X_1) + h(X_2 cup ...) - h((X_1 cap X_2) cup ...)`.
    pub fn inclusion_exclusion(&mut self, z: &RichardsonUnion) -> Result<i64> {
        let key = z.key();
        if let Some(&n) = self.unions.get(&key) {
            return Ok(n);
        }
        let (group, q) = (self.ctx.group, &self.ctx.quotient);
        let n = match z.components() {
            [] => 0,
            [x] => self.single(x)? as i64,
            [x, rest @ ..] => {
                let rest_union = RichardsonUnion::new(group, q, rest.to_vec());
                let mut meets = Vec::new();
                for y in rest {
                    meets.extend_from_slice(intersect_pairs(group, q, x, y).components());
                }
                let meet_union = RichardsonUnion::new(group, q, meets);
                self.single(x)? as i64 + self.inclusion_exclusion(&rest_union)?
                    - self.inclusion_exclusion(&meet_union)?
            }
        };
        self.unions.insert(key, n);
        Ok(n)
    }

    /// Monomials standard on some component.
    pub fn direct(&mut self, z: &RichardsonUnion) -> Result<usize> {
        let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        for c in z.components() {
            for mono in self.ctx.enumerate_standard(c)? {
                seen.insert(mono.factors.iter().map(|p| (p.v.0, p.w.0)).collect());
            }
        }
        Ok(seen.len())
    }
}

/// Counts on a union both directly and by inclusion-exclusion.
pub fn count_on_union(ctx: &SmtContext<'_>, z: &RichardsonUnion) -> Result<UnionCount> {
    ctx.require_ample()?;
    let mut counter = UnionCounter::new(ctx);
    Ok(UnionCount {
        direct: counter.direct(z)?,
        inclusion_exclusion: counter.inclusion_exclusion(z)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationBlock {
    pub x: WeylElement,
    /// `h(X_w^x) - h(union of X_w^{x'} over covers x' of x below w)`
    pub by_difference: i64,
    /// monomials standard on `X_w^x` and on none of those `X_w^{x'}`
    pub direct: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationPartition {
    pub pair: RichardsonPair,
    pub total: usize,
    pub blocks: Vec<FiltrationBlock>,
}

impl FiltrationPartition {
    /// Whether the difference blocks sum to `h(X_w^v)`.
    pub fn sums_to_total(&self) -> bool {
        self.blocks.iter().map(|b| b.by_difference).sum::<i64>() == self.total as i64
    }

    /// Whether each block computed by difference matches the direct count.
    pub fn blocks_agree(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.by_difference == b.direct as i64)
    }
}

/// The blocks of the filtration of `H^0(X_w^v)` by the opposite Schubert
/// varieties `X^x`, `v <= x <= w`.
pub fn filtration_partition(
    ctx: &SmtContext<'_>,
    pair: &RichardsonPair,
) -> Result<FiltrationPartition> {
    ctx.require_ample()?;
    let (group, q) = (ctx.group, &ctx.quotient);
    let mut counter = UnionCounter::new(ctx);
    let total = counter.single(pair)?;
    let mut blocks = Vec::new();
    for &x in q.elements() {
        if !(q.leq(group, pair.v, x) && q.leq(group, x, pair.w)) {
            continue;
        }
        let here = RichardsonPair { v: x, w: pair.w };
        let covers: Vec<RichardsonPair> = q
            .upper_covers(group, x)
            .into_iter()
            .filter(|&y| q.leq(group, y, pair.w))
            .map(|y| RichardsonPair { v: y, w: pair.w })
            .collect();
        let boundary = RichardsonUnion::new(group, q, covers.clone());
        let by_difference =
            counter.single(&here)? as i64 - counter.inclusion_exclusion(&boundary)?;
        let mut direct = 0;
        for mono in ctx.enumerate_standard(&here)? {
            let mut on_boundary = false;
            for c in &covers {
                if ctx.certify(&mono.factors, c)?.is_some() {
                    on_boundary = true;
                    break;
                }
            }
            if !on_boundary {
                direct += 1;
            }
        }
        blocks.push(FiltrationBlock {
            x,
            by_difference,
            direct,
        });
    }
    Ok(FiltrationPartition {
        pair: *pair,
        total,
        blocks,
    })
}
