//! Type A realization: Pluecker coordinates of Grassmannians, quadratic
//! straightening relations by exact linear algebra, and random-point checks
//! over a prime field.
//!
//! `p_I` is the determinant of the `r x r` submatrix on columns `I` of a
//! generic `r x n` matrix, rows in order. Indices are 1-based.

pub mod field;
pub mod hodge;
pub mod poly;
pub mod sample;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use poly::Poly;

/// A strictly increasing tuple `i_1 < ... < i_r` in `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlueckerIndex {
    entries: Vec<usize>,
    n: usize,
}

impl PlueckerIndex {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if entries.is_empty() || entries.len() >= n {
            return Err(Error::Parse(format!(
                "index {entries:?} has bad size for n = {n}"
            )));
        }
        if entries.windows(2).any(|w| w[0] >= w[1])
            || entries[0] < 1
            || *entries.last().unwrap() > n
        {
            return Err(Error::Parse(format!(
                "index {entries:?} not strictly increasing in 1..{n}"
            )));
        }
        Ok(PlueckerIndex { entries, n })
    }

    /// Parses `"14"` (one digit per entry) or `"1-4"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let entries = if s.contains('-') {
            s.split('-')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad index {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad index {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(entries, n)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn r(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `{1, ..., r}`, the point of the Grassmannian.
    pub fn minimal(r: usize, n: usize) -> Result<Self> {
        Self::new((1..=r).collect(), n)
    }

    pub fn maximal(r: usize, n: usize) -> Result<Self> {
        Self::new((n - r + 1..=n).collect(), n)
    }

    /// All `r`-subsets of `{1..n}` in lexicographic order.
    pub fn all(r: usize, n: usize) -> Result<Vec<Self>> {
        if r == 0 || r >= n {
            return Err(Error::Parse(format!(
                "need 1 <= r < n, got r = {r}, n = {n}"
            )));
        }
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=r).collect();
        loop {
            out.push(PlueckerIndex {
                entries: cur.clone(),
                n,
            });
            let Some(k) = (0..r).rev().find(|&k| cur[k] < n - (r - 1 - k)) else {
                break;
            };
            cur[k] += 1;
            for j in k + 1..r {
                cur[j] = cur[j - 1] + 1;
            }
        }
        Ok(out)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.r() != other.r() {
            return Err(Error::Parse(format!(
                "shape mismatch between {self} and {other}"
            )));
        }
        Ok(())
    }

    pub fn meet(&self, other: &Self) -> Self {
        let e = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| *a.min(b))
            .collect();
        PlueckerIndex {
            entries: e,
            n: self.n,
        }
    }

    pub fn join(&self, other: &Self) -> Self {
        let e = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| *a.max(b))
            .collect();
        PlueckerIndex {
            entries: e,
            n: self.n,
        }
    }

    /// `n+1-i` applied entrywise, the action of the longest permutation.
    pub fn reversed(&self) -> Self {
        let mut e: Vec<usize> = self.entries.iter().map(|&i| self.n + 1 - i).collect();
        e.reverse();
        PlueckerIndex {
            entries: e,
            n: self.n,
        }
    }
}

impl fmt::Display for PlueckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n < 10 { "" } else { "-" };
        let parts: Vec<String> = self.entries.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl FromStr for PlueckerIndex {
    type Err = Error;
    /// Without `n` the index is read as a subset of `{1..9}`.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, 9)
    }
}

/// `i_1 <= j_1, ..., i_r <= j_r`.
pub fn index_leq(a: &PlueckerIndex, b: &PlueckerIndex) -> Result<bool> {
    a.check_shape(b)?;
    Ok(a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y))
}

fn leq(a: &PlueckerIndex, b: &PlueckerIndex) -> bool {
    a.entries.iter().zip(&b.entries).all(|(x, y)| x <= y)
}

/// `p_I p_J` is standard when `I` and `J` are comparable.
pub fn is_standard_pair(a: &PlueckerIndex, b: &PlueckerIndex) -> Result<bool> {
    Ok(index_leq(a, b)? || index_leq(b, a)?)
}

/// All chains `I_1 <= ... <= I_m` in lexicographic order.
pub fn standard_monomials_grassmann(
    r: usize,
    n: usize,
    m: usize,
) -> Result<Vec<Vec<PlueckerIndex>>> {
    let all = PlueckerIndex::all(r, n)?;
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(m);
    fn rec(
        all: &[PlueckerIndex],
        m: usize,
        acc: &mut Vec<PlueckerIndex>,
        out: &mut Vec<Vec<PlueckerIndex>>,
    ) {
        if acc.len() == m {
            out.push(acc.clone());
            return;
        }
        for i in all {
            if acc.last().is_none_or(|last| leq(last, i)) {
                acc.push(i.clone());
                rec(all, m, acc, out);
                acc.pop();
            }
        }
    }
    rec(&all, m, &mut acc, &mut out);
    Ok(out)
}

/// The symbolic minor `p_I` in the entries `x_{a,b}` (variable `a*n + b`).
pub fn symbolic_minor(idx: &PlueckerIndex) -> Poly {
    let (r, n) = (idx.r(), idx.n());
    let cols: Vec<usize> = idx.entries.iter().map(|c| c - 1).collect();
    let mut out = Poly::zero();
    let mut perm: Vec<usize> = (0..r).collect();
    // Heap's algorithm, tracking the sign through swaps
    let mut c = vec![0usize; r];
    let mut sign = 1i64;
    let push = |perm: &[usize], sign: i64, out: &mut Poly| {
        let mono: Vec<u16> = (0..r).map(|a| (a * n + cols[perm[a]]) as u16).collect();
        out.add_term(mono, BigRational::from_integer(sign.into()));
    };
    push(&perm, sign, &mut out);
    let mut i = 1;
    while i < r {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            push(&perm, sign, &mut out);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Symbolic expansion of a product of Pluecker coordinates.
pub fn symbolic_monomial(indices: &[PlueckerIndex]) -> Poly {
    indices
        .iter()
        .fold(Poly::constant(BigRational::one()), |acc, i| {
            &acc * &symbolic_minor(i)
        })
}

/// `p_I p_J = sum c p_{I'} p_{J'}` with every `(I', J')` standard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraighteningRelation {
    pub lhs: (PlueckerIndex, PlueckerIndex),
    /// `(c, I', J')` with `I' <= J'`, in lexicographic order of the pairs
    pub rhs: Vec<(BigRational, PlueckerIndex, PlueckerIndex)>,
}

impl StraighteningRelation {
    /// `p_I p_J - sum c p_{I'} p_{J'}` expands to the zero polynomial.
    pub fn verify_exact(&self) -> bool {
        let mut diff = symbolic_monomial(&[self.lhs.0.clone(), self.lhs.1.clone()]);
        for (c, a, b) in &self.rhs {
            diff = &diff - &symbolic_monomial(&[a.clone(), b.clone()]).scale(c);
        }
        diff.is_zero()
    }

    /// Every `(I', J')` satisfies `I' <= I` and `J <= J'`, for `I` the
    /// lexicographically smaller factor of the left side.
    pub fn order_condition(&self) -> bool {
        let (i, j) = &self.lhs;
        self.rhs.iter().all(|(_, a, b)| leq(a, i) && leq(j, b))
    }

    /// Every `(I', J')` satisfies `I' <= I meet J` and `I join J <= J'`.
    pub fn strong_order_condition(&self) -> bool {
        let (i, j) = &self.lhs;
        let (lo, hi) = (i.meet(j), i.join(j));
        self.rhs.iter().all(|(_, a, b)| leq(a, &lo) && leq(&hi, b))
    }

    pub fn integral_unit_coefficients(&self) -> bool {
        self.rhs
            .iter()
            .all(|(c, _, _)| c.is_integer() && c.abs().is_one())
    }
}

/// Multiset of columns used by `p_I p_J`; straightening preserves it.
fn content(a: &PlueckerIndex, b: &PlueckerIndex) -> Vec<usize> {
    let mut c: Vec<usize> = a.entries.iter().chain(&b.entries).copied().collect();
    c.sort_unstable();
    c
}

/// Standard pairs `I <= J` with the given column content.
fn standard_pairs_with_content(
    r: usize,
    n: usize,
    target: &[usize],
) -> Result<Vec<(PlueckerIndex, PlueckerIndex)>> {
    let all = PlueckerIndex::all(r, n)?;
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if leq(a, b) && content(a, b) == target {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// Solves `sum_k c_k cols[k] = target` exactly. Returns `None` when the
/// columns are dependent or the target is outside their span.
fn solve_exact(cols: &[Poly], target: &Poly) -> Option<Vec<BigRational>> {
    let mut rows: BTreeMap<&Vec<u16>, usize> = BTreeMap::new();
    for p in cols.iter().chain(std::iter::once(target)) {
        for m in p.terms().keys() {
            let next = rows.len();
            rows.entry(m).or_insert(next);
        }
    }
    let (nr, nc) = (rows.len(), cols.len());
    let mut a = vec![vec![BigRational::zero(); nc + 1]; nr];
    for (k, p) in cols.iter().enumerate() {
        for (m, c) in p.terms() {
            a[rows[m]][k] = c.clone();
        }
    }
    for (m, c) in target.terms() {
        a[rows[m]][nc] = c.clone();
    }
    let mut row = 0;
    for c in 0..nc {
        let piv = (row..nr).find(|&r| !a[r][c].is_zero())?;
        a.swap(piv, row);
        let inv = a[row][c].recip();
        for k in c..=nc {
            a[row][k] = &a[row][k] * &inv;
        }
        for r in 0..nr {
            if r != row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in c..=nc {
                    let sub = &f * &a[row][k];
                    a[r][k] -= sub;
                }
            }
        }
        row += 1;
    }
    if (row..nr).any(|r| !a[r][nc].is_zero()) {
        return None;
    }
    Some((0..nc).map(|k| a[k][nc].clone()).collect())
}

/// Straightens the non-standard product `p_I p_J`.
pub fn straighten(i: &PlueckerIndex, j: &PlueckerIndex) -> Result<StraighteningRelation> {
    if is_standard_pair(i, j)? {
        return Err(Error::AlreadyStandard);
    }
    let (i, j) = if i <= j {
        (i.clone(), j.clone())
    } else {
        (j.clone(), i.clone())
    };
    let basis = standard_pairs_with_content(i.r(), i.n(), &content(&i, &j))?;
    let cols: Vec<Poly> = basis
        .iter()
        .map(|(a, b)| symbolic_monomial(&[a.clone(), b.clone()]))
        .collect();
    let target = symbolic_monomial(&[i.clone(), j.clone()]);
    let coeffs = solve_exact(&cols, &target)
        .ok_or_else(|| Error::SingularSystem(format!("straightening {i} {j}")))?;
    let rhs = basis
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|((a, b), c)| (c, a, b))
        .collect();
    let rel = StraighteningRelation { lhs: (i, j), rhs };
    if !rel.order_condition() {
        return Err(Error::Invariant(format!(
            "order condition fails for {} {}",
            rel.lhs.0, rel.lhs.1
        )));
    }
    Ok(rel)
}

/// All non-standard degree-2 products of `Gr(r, n)`, each straightened.
pub fn all_relations(r: usize, n: usize) -> Result<Vec<StraighteningRelation>> {
    let all = PlueckerIndex::all(r, n)?;
    let mut out = Vec::new();
    for (k, a) in all.iter().enumerate() {
        for b in &all[k + 1..] {
            if !is_standard_pair(a, b)? {
                out.push(straighten(a, b)?);
            }
        }
    }
    Ok(out)
}

/// Whether the standard degree-2 products are linearly independent
/// polynomials (checked content by content).
pub fn standard_pairs_independent(r: usize, n: usize) -> Result<bool> {
    let all = PlueckerIndex::all(r, n)?;
    let mut by_content: BTreeMap<Vec<usize>, Vec<Poly>> = BTreeMap::new();
    for a in &all {
        for b in &all {
            if leq(a, b) {
                by_content
                    .entry(content(a, b))
                    .or_default()
                    .push(symbolic_monomial(&[a.clone(), b.clone()]));
            }
        }
    }
    // with a zero target, failure means some column has no pivot
    for cols in by_content.values() {
        if solve_exact(cols, &Poly::zero()).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rewrites a product of Pluecker coordinates as a combination of standard
/// chains by repeated degree-2 straightening. Keys are sorted chains.
pub fn straighten_monomial(
    indices: &[PlueckerIndex],
) -> Result<BTreeMap<Vec<PlueckerIndex>, BigRational>> {
    let mut cache: BTreeMap<(PlueckerIndex, PlueckerIndex), StraighteningRelation> =
        BTreeMap::new();
    let mut done: BTreeMap<Vec<PlueckerIndex>, BigRational> = BTreeMap::new();
    let mut todo: Vec<(Vec<PlueckerIndex>, BigRational)> =
        vec![(indices.to_vec(), BigRational::one())];
    while let Some((mut mono, c)) = todo.pop() {
        mono.sort();
        let bad = (0..mono.len())
            .flat_map(|a| (a + 1..mono.len()).map(move |b| (a, b)))
            .find(|&(a, b)| !(leq(&mono[a], &mono[b]) || leq(&mono[b], &mono[a])));
        let Some((a, b)) = bad else {
            let e = done.entry(mono).or_insert_with(BigRational::zero);
            *e += c;
            continue;
        };
        let key = (mono[a].clone(), mono[b].clone());
        if !cache.contains_key(&key) {
            cache.insert(key.clone(), straighten(&key.0, &key.1)?);
        }
        for (d, x, y) in &cache[&key].rhs {
            let mut next: Vec<PlueckerIndex> = mono
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != a && k != b)
                .map(|(_, p)| p.clone())
                .collect();
            next.push(x.clone());
            next.push(y.clone());
            todo.push((next, &c * d));
        }
    }
    done.retain(|_, c| !c.is_zero());
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str, n: usize) -> PlueckerIndex {
        PlueckerIndex::parse(s, n).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn index_order() {
        assert!(index_leq(&idx("13", 4), &idx("24", 4)).unwrap());
        assert!(!index_leq(&idx("14", 4), &idx("23", 4)).unwrap());
        assert!(!index_leq(&idx("23", 4), &idx("14", 4)).unwrap());
        assert!(index_leq(&idx("14", 4), &idx("14", 4)).unwrap());
        assert!(index_leq(&idx("14", 4), &idx("124", 5)).is_err());
        assert!(PlueckerIndex::parse("41", 4).is_err());
        assert!(PlueckerIndex::parse("15", 4).is_err());
        assert_eq!(idx("2-11", 12).to_string(), "2-11");
    }

    #[test]
    fn chain_counts() {
        for (m, count) in [(0, 1), (1, 6), (2, 20), (3, 50)] {
            assert_eq!(standard_monomials_grassmann(2, 4, m).unwrap().len(), count);
        }
        assert_eq!(PlueckerIndex::all(3, 6).unwrap().len(), 20);
    }

    #[test]
    fn minor_expansion() {
        // x00 x11 - x01 x10 on columns 1, 2 of a 2 x 4 matrix
        let p = symbolic_minor(&idx("12", 4));
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.coefficient(&[0, 5]), q(1));
        assert_eq!(p.coefficient(&[1, 4]), q(-1));
        assert_eq!(symbolic_minor(&idx("135", 5)).terms().len(), 6);
    }

    #[test]
    fn three_term_relation_gr24() {
        let rel = straighten(&idx("14", 4), &idx("23", 4)).unwrap();
        assert_eq!(
            rel.rhs,
            vec![
                (q(-1), idx("12", 4), idx("34", 4)),
                (q(1), idx("13", 4), idx("24", 4))
            ]
        );
        assert!(rel.verify_exact());
        assert!(rel.strong_order_condition());
        assert!(matches!(
            straighten(&idx("13", 4), &idx("24", 4)),
            Err(Error::AlreadyStandard)
        ));
    }

    #[test]
    fn gr25_relations() {
        let rels = all_relations(2, 5).unwrap();
        assert!(!rels.is_empty());
        for rel in &rels {
            assert!(rel.verify_exact());
            assert!(rel.order_condition() && rel.strong_order_condition());
            assert!(rel.integral_unit_coefficients());
        }
        assert!(standard_pairs_independent(2, 5).unwrap());
    }

    #[test]
    fn gr36_relation() {
        let rel = straighten(&idx("146", 6), &idx("235", 6)).unwrap();
        assert!(rel.rhs.len() >= 3);
        assert!(rel.verify_exact());
        assert!(rel.order_condition());
    }

    #[test]
    fn cubic_rewriting() {
        let mono = [idx("14", 5), idx("23", 5), idx("15", 5)];
        let expanded = straighten_monomial(&mono).unwrap();
        let mut diff = symbolic_monomial(&mono);
        for (chain, c) in &expanded {
            for w in chain.windows(2) {
                assert!(leq(&w[0], &w[1]));
            }
            diff = &diff - &symbolic_monomial(chain).scale(c);
        }
        assert!(diff.is_zero());
    }
}
