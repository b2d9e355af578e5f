//! Randomized checks of the restriction and basis statements for Pluecker
//! monomials, and evaluation of extremal monomials on `SL(n)/B`.

use super::field::PrimeField;
use super::sample::{FlagSample, Perm, Sampler};
use super::{index_leq, standard_monomials_grassmann, PlueckerIndex};
use crate::error::{Error, Result};
use crate::smt::StandardMonomial;
use crate::weyl::WeylGroup;

/// Product of Pluecker coordinates at a point.
pub fn evaluate_chain(point: &FlagSample, chain: &[PlueckerIndex]) -> u64 {
    let f = point.field();
    chain.iter().fold(1, |acc, i| f.mul(acc, point.pluecker(i)))
}

/// Rank of the matrix with one row per monomial and one column per point.
pub fn evaluation_rank(
    field: PrimeField,
    chains: &[Vec<PlueckerIndex>],
    points: &[FlagSample],
) -> usize {
    let m: Vec<Vec<u64>> = chains
        .iter()
        .map(|c| points.iter().map(|p| evaluate_chain(p, c)).collect())
        .collect();
    field.rank(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub count: usize,
    /// rank observed for each seed
    pub ranks: Vec<usize>,
}

impl RankReport {
    /// One seed reaching full rank suffices.
    pub fn pass(&self) -> bool {
        self.ranks.contains(&self.count)
    }
}

fn sample_count(monomials: usize) -> usize {
    monomials + 8
}

/// Standard chains of length `m` on `Gr(r, n)` against the rank of their
/// evaluations at random points.
pub fn verify_hodge_i(
    r: usize,
    n: usize,
    m: usize,
    seeds: &[u64],
    prime: u64,
) -> Result<RankReport> {
    let chains = standard_monomials_grassmann(r, n, m)?;
    let top = PlueckerIndex::maximal(r, n)?;
    let mut ranks = Vec::new();
    for &seed in seeds {
        let mut s = Sampler::new(seed, prime)?;
        let points = (0..sample_count(chains.len()))
            .map(|_| s.grassmann_schubert(&top))
            .collect::<Result<Vec<_>>>()?;
        ranks.push(evaluation_rank(s.field(), &chains, &points));
    }
    Ok(RankReport {
        count: chains.len(),
        ranks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertBasisReport {
    pub index: PlueckerIndex,
    pub standard: RankReport,
    /// chains of length `m` not standard on `X_I`
    pub other_count: usize,
    /// whether every such chain vanished at every sample, for every seed
    pub others_vanish: bool,
}

impl SchubertBasisReport {
    pub fn pass(&self) -> bool {
        self.standard.pass() && self.others_vanish
    }
}

/// Chains `I_1 <= ... <= I_m` are standard on `X_I` when `I_m <= I`.
pub fn standard_on_schubert(chain: &[PlueckerIndex], idx: &PlueckerIndex) -> Result<bool> {
    match chain.last() {
        Some(top) => index_leq(top, idx),
        None => Ok(true),
    }
}

/// The monomials standard on `X_I` restrict to independent functions and all
/// other standard chains vanish there.
pub fn verify_hodge_iii(
    idx: &PlueckerIndex,
    m: usize,
    seeds: &[u64],
    prime: u64,
) -> Result<SchubertBasisReport> {
    let chains = standard_monomials_grassmann(idx.r(), idx.n(), m)?;
    let mut on = Vec::new();
    let mut off = Vec::new();
    for c in chains {
        if standard_on_schubert(&c, idx)? {
            on.push(c);
        } else {
            off.push(c);
        }
    }
    let mut ranks = Vec::new();
    let mut others_vanish = true;
    for &seed in seeds {
        let mut s = Sampler::new(seed, prime)?;
        let points = (0..sample_count(on.len()))
            .map(|_| s.grassmann_schubert(idx))
            .collect::<Result<Vec<_>>>()?;
        ranks.push(evaluation_rank(s.field(), &on, &points));
        others_vanish &= off
            .iter()
            .all(|c| points.iter().all(|p| evaluate_chain(p, c) == 0));
    }
    Ok(SchubertBasisReport {
        index: idx.clone(),
        standard: RankReport {
            count: on.len(),
            ranks,
        },
        other_count: off.len(),
        others_vanish,
    })
}

/// A disagreement between the sampled support of `p_J` on a Schubert variety
/// and the predicted one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionMismatch {
    pub variety: PlueckerIndex,
    pub coordinate: PlueckerIndex,
    pub opposite: bool,
    pub observed_nonzero: bool,
}

/// Checks `p_J|_{X_I} != 0 <=> J <= I` and `p_J|_{X^I} != 0 <=> J >= I` over
/// all `I`, `J`, pooling samples from every seed.
pub fn verify_restriction(
    r: usize,
    n: usize,
    samples: usize,
    seeds: &[u64],
    prime: u64,
) -> Result<Vec<RestrictionMismatch>> {
    let all = PlueckerIndex::all(r, n)?;
    let mut mismatches = Vec::new();
    for opposite in [false, true] {
        for i in &all {
            let mut points = Vec::new();
            for &seed in seeds {
                let mut s = Sampler::new(seed, prime)?;
                for _ in 0..samples {
                    points.push(if opposite {
                        s.grassmann_opposite(i)?
                    } else {
                        s.grassmann_schubert(i)?
                    });
                }
            }
            for j in &all {
                let expected = if opposite {
                    index_leq(i, j)?
                } else {
                    index_leq(j, i)?
                };
                let observed = points.iter().any(|p| p.pluecker(j) != 0);
                if observed != expected {
                    mismatches.push(RestrictionMismatch {
                        variety: i.clone(),
                        coordinate: j.clone(),
                        opposite,
                        observed_nonzero: observed,
                    });
                }
            }
        }
    }
    Ok(mismatches)
}

/// Value at a point of `SL(n)/B` of a monomial whose factors are all trivial
/// pairs: `p_{x(lambda)} = prod_k p_{x(omega_k)}^{lambda_k}`, with
/// `p_{x(omega_k)}` the minor on rows `x({1..k})` and the first `k` columns.
pub fn flag_monomial_evaluate(
    group: &WeylGroup,
    mono: &StandardMonomial,
    point: &FlagSample,
) -> Result<u64> {
    let f = point.field();
    let mut value = 1;
    for pair in &mono.factors {
        if !pair.is_trivial() {
            return Err(Error::InvalidPair(
                group.format(pair.v),
                group.format(pair.w),
            ));
        }
        let x = Perm::of_element(group, pair.w)?;
        // a trivial pair has xi = -x(lambda)
        let lam = group.act(group.inverse(pair.w), &(-&pair.xi()));
        for (k, &e) in lam.0.iter().enumerate() {
            let minor = point.extremal(&x, k + 1);
            value = f.mul(value, f.pow(minor, e as u64));
        }
    }
    Ok(value)
}
