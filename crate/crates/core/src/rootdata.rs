//! Finite crystallographic root systems built from Cartan matrices.
//!
//! Roots are stored in simple-root coordinates, weights in fundamental-weight
//! coordinates and coroots in simple-coroot coordinates, so that both the
//! pairing `<weight, coroot>` and the simple reflections are integer
//! operations. The Cartan matrix uses the convention
//! `cartan[i][j] = <alpha_j, alpha_i^vee>`; with it, the column `j` of the
//! matrix is `alpha_j` written in the fundamental-weight basis.
//!
//! Simple roots follow Bourbaki numbering, except in type G2 where `alpha_1`
//! is the long simple root.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::rational::Ratio;
use num::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on the rank of a root system.
pub const DEFAULT_RANK_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A Cartan type label such as `A3`, `C2` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!(
                "{}{}",
                family.letter(),
                rank
            )))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidCartanType(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let rank = rest.parse::<usize>().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// An integral weight in the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Halves every coordinate, if all of them are even.
    pub fn halve(&self) -> Option<Weight> {
        if self.0.iter().all(|c| c % 2 == 0) {
            Some(Weight(self.0.iter().map(|c| c / 2).collect()))
        } else {
            None
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses comma-separated fundamental-weight coordinates, e.g. `0,1`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// A root in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negate(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 => terms.push(format!("a{}", i + 1)),
                -1 => terms.push(format!("-a{}", i + 1)),
                c => terms.push(format!("{c}a{}", i + 1)),
            }
        }
        write!(f, "{}", terms.join("+").replace("+-", "-"))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    /// `coroots[k]` is the coroot of `positive_roots[k]` in simple-coroot coordinates.
    coroots: Vec<Vec<i64>>,
    /// Squared lengths of the simple roots for the invariant form, scaled to
    /// coprime integers.
    simple_norms: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
}

/// Builds the root system of the given family and rank, with the default
/// rank cap.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::with_cap(CartanType::new(family, rank)?, DEFAULT_RANK_CAP)
}

fn cartan_matrix(ct: CartanType) -> Vec<Vec<i64>> {
    let n = ct.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // Symmetric simply-laced edges, then the non-simply-laced bonds as
    // (i, j, cartan[i][j], cartan[j][i]).
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ct.family {
        Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n short
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n long
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            for &(i, j) in edges.iter().filter(|&&(i, j)| i < n && j < n) {
                link(i, j, -1, -1);
            }
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -1, -3),
    }
    a
}

/// Squared lengths `(alpha_i, alpha_i)` solving
/// `cartan[j][i] * d_j = cartan[i][j] * d_i`, scaled to coprime integers.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::from_integer(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                let di = d[i].unwrap();
                d[j] = Some(di * Ratio::new(cartan[i][j], cartan[j][i]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d
        .into_iter()
        .map(|x| x.expect("connected Dynkin diagram"))
        .collect();
    let lcm = d.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

impl RootSystem {
    pub fn new(ct: CartanType) -> Result<Self> {
        Self::with_cap(ct, DEFAULT_RANK_CAP)
    }

    pub fn with_cap(ct: CartanType, rank_cap: usize) -> Result<Self> {
        if ct.rank > rank_cap {
            return Err(Error::RankTooLarge {
                rank: ct.rank,
                cap: rank_cap,
            });
        }
        let n = ct.rank;
        let cartan = cartan_matrix(ct);
        let simple_norms = symmetrizer(&cartan);

        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e.clone());
            roots.push(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let p: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if p == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= p;
                if img.iter().all(|&c| c >= 0) && !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push_back(img.clone());
                    roots.push(img);
                }
            }
        }
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let mut coroots = Vec::with_capacity(roots.len());
        for beta in &roots {
            // (beta, beta) = sum_ij c_i c_j (alpha_i, alpha_j), with
            // 2 (alpha_i, alpha_j) = cartan[j][i] d_j.
            let mut twice_norm = 0i64;
            for i in 0..n {
                for j in 0..n {
                    twice_norm += beta[i] * beta[j] * cartan[j][i] * simple_norms[j];
                }
            }
            let co: Vec<i64> = (0..n)
                .map(|j| {
                    let num = 2 * beta[j] * simple_norms[j];
                    assert_eq!(num % twice_norm, 0, "coroot not integral");
                    num / twice_norm
                })
                .collect();
            coroots.push(co);
        }

        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        Ok(RootSystem {
            cartan_type: ct,
            cartan,
            positive_roots: roots.into_iter().map(Root).collect(),
            coroots,
            simple_norms,
            index,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        Root(c)
    }

    pub fn simple_norms(&self) -> &[i64] {
        &self.simple_norms
    }

    /// Coroot of the k-th positive root, in simple-coroot coordinates.
    pub fn coroot(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    /// Position of a root (or of its negative) among the positive roots,
    /// together with its sign.
    pub fn root_index(&self, beta: &Root) -> Option<(usize, i64)> {
        if let Some(&k) = self.index.get(&beta.0) {
            return Some((k, 1));
        }
        self.index.get(&beta.negate().0).map(|&k| (k, -1))
    }

    pub fn check_weight(&self, lam: &Weight) -> Result<()> {
        if lam.rank() != self.rank() {
            return Err(Error::WeightLength {
                got: lam.rank(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    /// `<lam, beta^vee>`.
    pub fn pairing(&self, lam: &Weight, beta: &Root) -> Result<i64> {
        self.check_weight(lam)?;
        let (k, sign) = self
            .root_index(beta)
            .ok_or_else(|| Error::NotARoot(beta.0.clone()))?;
        Ok(sign * self.pairing_index(lam, k))
    }

    /// `<lam, beta_k^vee>` for the k-th positive root.
    pub fn pairing_index(&self, lam: &Weight, k: usize) -> i64 {
        lam.0.iter().zip(&self.coroots[k]).map(|(a, b)| a * b).sum()
    }

    /// The root written in the fundamental-weight basis.
    pub fn root_to_weight(&self, beta: &Root) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * beta.0[j]).sum())
                .collect(),
        )
    }

    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| self.cartan[k][i]).collect())
    }

    /// `s_i(lam) = lam - <lam, alpha_i^vee> alpha_i`.
    pub fn reflect_weight(&self, i: usize, lam: &Weight) -> Weight {
        let p = lam.0[i];
        Weight(
            lam.0
                .iter()
                .enumerate()
                .map(|(k, &c)| c - p * self.cartan[k][i])
                .collect(),
        )
    }

    /// `s_i(beta)` on a root in simple-root coordinates.
    pub fn reflect_root(&self, i: usize, beta: &Root) -> Root {
        let p: i64 = (0..self.rank())
            .map(|j| beta.0[j] * self.cartan[i][j])
            .sum();
        let mut c = beta.0.clone();
        c[i] -= p;
        Root(c)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::fundamental(self.rank(), i)
    }

    /// True iff `<lam, beta^vee> <= 2` for every positive root.
    pub fn is_classical_type(&self, lam: &Weight) -> Result<bool> {
        self.check_weight(lam)?;
        if !lam.is_dominant() {
            return Err(Error::NotDominant(lam.0.clone()));
        }
        Ok((0..self.positive_roots.len()).all(|k| self.pairing_index(lam, k) <= 2))
    }

    /// All dominant weights of classical type, including zero.
    pub fn classical_type_weights(&self) -> Vec<Weight> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        loop {
            let w = Weight(cur.clone());
            if self.is_classical_type(&w).unwrap_or(false) {
                out.push(w);
            }
            // every coordinate is bounded by <lam, alpha_i^vee> <= 2
            let mut i = 0;
            while i < n {
                cur[i] += 1;
                if cur[i] <= 2 {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        out.sort_by(|a, b| {
            let sa: i64 = a.0.iter().sum();
            let sb: i64 = b.0.iter().sum();
            sa.cmp(&sb).then_with(|| b.cmp(a))
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C2", 4),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ];
        for (t, n) in expected {
            assert_eq!(rs(t).positive_roots().len(), n, "{t}");
        }
    }

    #[test]
    fn c2_roots() {
        let r = rs("C2");
        let mut got: Vec<Vec<i64>> = r.positive_roots().iter().map(|b| b.0.clone()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn cartan_diagonal_and_signs() {
        for t in ["A3", "B3", "C3", "D4", "E6", "F4", "G2"] {
            let r = rs(t);
            for (i, row) in r.cartan_matrix().iter().enumerate() {
                for (j, &a) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(a, 2);
                    } else {
                        assert!(a <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let r = rs("A2");
        let w1 = r.fundamental_weight(0);
        assert_eq!(r.pairing(&w1, &Root(vec![1, 0])).unwrap(), 1);
        assert_eq!(r.pairing(&w1, &Root(vec![0, 1])).unwrap(), 0);
        assert_eq!(r.pairing(&w1, &Root(vec![1, 1])).unwrap(), 1);
        assert_eq!(r.pairing(&w1, &Root(vec![-1, -1])).unwrap(), -1);
        assert!(matches!(
            r.pairing(&w1, &Root(vec![2, 1])),
            Err(Error::NotARoot(_))
        ));
        for t in ["B3", "G2", "F4"] {
            let r = rs(t);
            for i in 0..r.rank() {
                assert_eq!(r.pairing(&r.rho(), &r.simple_root(i)).unwrap(), 1);
            }
        }
    }

    #[test]
    fn classical_type_examples() {
        let a3 = rs("A3");
        for i in 0..3 {
            assert!(a3.is_classical_type(&a3.fundamental_weight(i)).unwrap());
        }
        assert!(a3.is_classical_type(&Weight::zero(3)).unwrap());
        let g2 = rs("G2");
        // alpha_1 is the long simple root
        assert!(!g2.is_classical_type(&Weight(vec![1, 0])).unwrap());
        assert!(g2.is_classical_type(&Weight(vec![0, 1])).unwrap());
        assert!(matches!(
            a3.is_classical_type(&Weight(vec![1, -1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn classical_groups_have_classical_fundamentals() {
        for t in ["A4", "B4", "C4", "D5", "G2", "F4", "E8"] {
            let r = rs(t);
            let all = (0..r.rank()).all(|i| r.is_classical_type(&r.fundamental_weight(i)).unwrap());
            let classical = matches!(
                r.cartan_type().family,
                Family::A | Family::B | Family::C | Family::D
            );
            assert_eq!(all, classical, "{t}");
        }
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for t in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let r = rs(t);
            for i in 0..r.rank() {
                let alpha = r.simple_root(i);
                for beta in r.positive_roots().iter().filter(|b| **b != alpha) {
                    let img = r.reflect_root(i, beta);
                    assert!(
                        img.is_positive() && r.root_index(&img).is_some(),
                        "{t}: s{i} {beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_labels() {
        assert_eq!(
            "A3".parse::<CartanType>().unwrap(),
            CartanType {
                family: Family::A,
                rank: 3
            }
        );
        assert!("A0".parse::<CartanType>().is_err());
        assert!("D3".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("X2".parse::<CartanType>().is_err());
        assert!("A 2".parse::<CartanType>().is_err());
        assert!(RootSystem::with_cap("A9".parse().unwrap(), 8).is_err());
    }

    #[test]
    fn classical_weight_sweep_a2() {
        let r = rs("A2");
        let ws: Vec<Vec<i64>> = r
            .classical_type_weights()
            .into_iter()
            .map(|w| w.0)
            .collect();
        // zero, two fundamentals, and the three sums of two minuscule weights
        assert_eq!(ws.len(), 6);
        assert!(ws.contains(&vec![1, 1]) && ws.contains(&vec![2, 0]) && ws.contains(&vec![0, 2]));
    }

    #[test]
    fn reflect_weight_matches_root_pairing() {
        let r = rs("B3");
        let lam = Weight(vec![2, -1, 3]);
        for i in 0..3 {
            let img = r.reflect_weight(i, &lam);
            let expect = &lam - &(lam.0[i] * &r.simple_root_weight(i));
            assert_eq!(img, expect);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn pairing_is_additive(a in proptest::collection::vec(-5i64..5, 3), b in proptest::collection::vec(-5i64..5, 3)) {
                let r = rs("C3");
                let (wa, wb) = (Weight(a), Weight(b));
                let sum = &wa + &wb;
                for beta in r.positive_roots() {
                    prop_assert_eq!(
                        r.pairing(&sum, beta).unwrap(),
                        r.pairing(&wa, beta).unwrap() + r.pairing(&wb, beta).unwrap()
                    );
                }
            }
        }
    }
}
