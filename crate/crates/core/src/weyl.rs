//! Weyl groups: enumeration, lengths, reduced words, Bruhat order, parabolic
//! quotients `W^P` and the lifting of cosets `W/W_lambda` to `W^P`.
//!
//! Every element is identified by its action matrix on the weight lattice.
//! The group is enumerated once, in the order (length, canonical word), and
//! elements are then handled through the copyable index [`WeylElement`].
//! That enumeration order is also the total order used wherever a linear
//! extension of the Bruhat order is needed.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rootdata::{Root, RootSystem, Weight};

/// Default upper bound on the order of an enumerated Weyl group.
pub const DEFAULT_GROUP_CAP: usize = 60_000;

/// Handle to an element of a [`WeylGroup`]; the index into the group's
/// enumeration, which is sorted by (length, canonical word).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub usize);

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement(0);

    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone)]
struct ElementData {
    matrix: Vec<i64>,
    length: usize,
    word: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<ElementData>,
    lookup: HashMap<Vec<i64>, usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    /// Some right descent of each non-identity element.
    descent: Vec<Option<usize>>,
    /// Reflection `s_beta` for each positive root, and the inverse map.
    reflections: Vec<usize>,
    reflection_root: HashMap<usize, usize>,
    longest: usize,
}

/// Enumerates the Weyl group of `rs` with the default size cap.
pub fn enumerate_weyl(rs: &RootSystem) -> Result<WeylGroup> {
    WeylGroup::new(rs.clone(), DEFAULT_GROUP_CAP)
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl WeylGroup {
    pub fn new(rs: RootSystem, cap: usize) -> Result<Self> {
        let n = rs.rank();
        let cartan = rs.cartan_matrix().to_vec();

        // M * S_i: column i becomes col_i - M * (column i of the Cartan matrix).
        let times_simple = |m: &[i64], i: usize| -> Vec<i64> {
            let mut out = m.to_vec();
            for a in 0..n {
                let s: i64 = (0..n).map(|k| m[a * n + k] * cartan[k][i]).sum();
                out[a * n + i] -= s;
            }
            out
        };

        let mut elements = vec![ElementData {
            matrix: identity_matrix(n),
            length: 0,
            word: vec![],
        }];
        let mut lookup: HashMap<Vec<i64>, usize> = HashMap::new();
        lookup.insert(elements[0].matrix.clone(), 0);
        let mut level_start = 0;
        let mut length = 0;
        loop {
            let level_end = elements.len();
            // candidate canonical words for the next level, keyed by matrix
            let mut next: HashMap<Vec<i64>, Vec<usize>> = HashMap::new();
            for idx in level_start..level_end {
                for i in 0..n {
                    let m = times_simple(&elements[idx].matrix, i);
                    if lookup.contains_key(&m) {
                        continue;
                    }
                    let mut word = elements[idx].word.clone();
                    word.push(i);
                    next.entry(m)
                        .and_modify(|w| {
                            if word < *w {
                                *w = word.clone();
                            }
                        })
                        .or_insert(word);
                }
            }
            if next.is_empty() {
                break;
            }
            length += 1;
            let mut level: Vec<(Vec<i64>, Vec<usize>)> = next.into_iter().collect();
            level.sort_by(|a, b| a.1.cmp(&b.1));
            for (matrix, word) in level {
                if elements.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                lookup.insert(matrix.clone(), elements.len());
                elements.push(ElementData {
                    matrix,
                    length,
                    word,
                });
            }
            level_start = level_end;
        }

        let size = elements.len();
        let mut right = vec![vec![0; n]; size];
        let mut left = vec![vec![0; n]; size];
        let mut descent = vec![None; size];
        for (idx, e) in elements.iter().enumerate() {
            for i in 0..n {
                let m = times_simple(&e.matrix, i);
                right[idx][i] = lookup[&m];
                // S_i * M: row k becomes row_k - cartan[k][i] * row_i.
                let mut l = e.matrix.clone();
                for k in 0..n {
                    for c in 0..n {
                        l[k * n + c] -= cartan[k][i] * e.matrix[i * n + c];
                    }
                }
                left[idx][i] = lookup[&l];
                if descent[idx].is_none() && elements[right[idx][i]].length < e.length {
                    descent[idx] = Some(i);
                }
            }
        }
        let longest = size - 1;

        let mut reflections = Vec::with_capacity(rs.positive_roots().len());
        let mut reflection_root = HashMap::new();
        for (k, beta) in rs.positive_roots().iter().enumerate() {
            let bw = rs.root_to_weight(beta);
            // s_beta(omega_c) = omega_c - <omega_c, beta^vee> beta
            let co = rs.coroot(k);
            let mut m = identity_matrix(n);
            for a in 0..n {
                for c in 0..n {
                    m[a * n + c] -= bw.0[a] * co[c];
                }
            }
            let idx = *lookup
                .get(&m)
                .ok_or_else(|| Error::Invariant(format!("reflection of {beta} not in group")))?;
            reflections.push(idx);
            reflection_root.insert(idx, k);
        }

        Ok(WeylGroup {
            rs,
            elements,
            lookup,
            right,
            left,
            descent,
            reflections,
            reflection_root,
            longest,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.elements.len()).map(WeylElement)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::IDENTITY
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.longest)
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.elements[w.0].length
    }

    /// The lexicographically least reduced word (0-based simple indices).
    pub fn word(&self, w: WeylElement) -> &[usize] {
        &self.elements[w.0].word
    }

    /// Action matrix on fundamental-weight coordinates, row-major.
    pub fn matrix(&self, w: WeylElement) -> &[i64] {
        &self.elements[w.0].matrix
    }

    pub fn from_matrix(&self, m: &[i64]) -> Option<WeylElement> {
        self.lookup.get(m).map(|&i| WeylElement(i))
    }

    pub fn simple(&self, i: usize) -> WeylElement {
        WeylElement(self.right[0][i])
    }

    /// `w * s_i`.
    pub fn mul_simple_right(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[w.0][i])
    }

    /// `s_i * w`.
    pub fn mul_simple_left(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[w.0][i])
    }

    pub fn mul(&self, x: WeylElement, y: WeylElement) -> WeylElement {
        self.word(y)
            .iter()
            .fold(x, |acc, &i| self.mul_simple_right(acc, i))
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        self.word(w)
            .iter()
            .rev()
            .fold(self.identity(), |acc, &i| self.mul_simple_right(acc, i))
    }

    /// Product of an arbitrary word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            if i >= self.rank() {
                return Err(Error::BadSimpleIndex(i));
            }
            w = self.mul_simple_right(w, i);
        }
        Ok(w)
    }

    /// Product of a word that must be reduced.
    pub fn from_reduced_word(&self, word: &[usize]) -> Result<WeylElement> {
        let w = self.from_word(word)?;
        if self.length(w) != word.len() {
            return Err(Error::NonReducedWord(word.to_vec()));
        }
        Ok(w)
    }

    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.mul_simple_right(w, i)) < self.length(w)
    }

    pub fn is_left_descent(&self, i: usize, w: WeylElement) -> bool {
        self.length(self.mul_simple_left(i, w)) < self.length(w)
    }

    pub fn act(&self, w: WeylElement, lam: &Weight) -> Weight {
        let n = self.rank();
        let m = self.matrix(w);
        Weight(
            (0..n)
                .map(|a| (0..n).map(|c| m[a * n + c] * lam.0[c]).sum())
                .collect(),
        )
    }

    /// `w(beta)` for a root in simple-root coordinates.
    pub fn act_root(&self, w: WeylElement, beta: &Root) -> Root {
        self.word(w)
            .iter()
            .rev()
            .fold(beta.clone(), |b, &i| self.rs.reflect_root(i, &b))
    }

    /// The reflection `s_beta` of the k-th positive root.
    pub fn reflection(&self, k: usize) -> WeylElement {
        WeylElement(self.reflections[k])
    }

    /// If `t` is a reflection, the index of its positive root.
    pub fn reflection_root(&self, t: WeylElement) -> Option<usize> {
        self.reflection_root.get(&t.0).copied()
    }

    /// Bruhat order by the lifting criterion: with `s` a right descent of `y`,
    /// `x <= y` iff `min(x, xs) <= ys`.
    pub fn bruhat_leq(&self, x: WeylElement, y: WeylElement) -> bool {
        let (mut x, mut y) = (x, y);
        loop {
            let (lx, ly) = (self.length(x), self.length(y));
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            if lx == 0 {
                return true;
            }
            let s = self.descent[y.0].expect("non-identity element has a descent");
            let xs = self.mul_simple_right(x, s);
            if self.length(xs) < lx {
                x = xs;
            }
            y = self.mul_simple_right(y, s);
        }
    }

    pub fn bruhat_lt(&self, x: WeylElement, y: WeylElement) -> bool {
        x != y && self.bruhat_leq(x, y)
    }

    /// Longest element of the parabolic subgroup generated by `subset`.
    pub fn longest_in(&self, subset: &[usize]) -> WeylElement {
        let mut w = self.identity();
        'outer: loop {
            for &j in subset {
                let u = self.mul_simple_right(w, j);
                if self.length(u) > self.length(w) {
                    w = u;
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Elements of the parabolic subgroup generated by `subset`.
    pub fn parabolic_subgroup(&self, subset: &[usize]) -> Vec<WeylElement> {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![self.identity()];
        seen[0] = true;
        let mut out = Vec::new();
        while let Some(w) = stack.pop() {
            out.push(w);
            for &j in subset {
                let u = self.mul_simple_right(w, j);
                if !seen[u.0] {
                    seen[u.0] = true;
                    stack.push(u);
                }
            }
        }
        out.sort();
        out
    }

    /// Dot-joined 1-based reduced word, e.g. `s2.s1`; `e` for the identity.
    pub fn format(&self, w: WeylElement) -> String {
        format_word(self.word(w))
    }

    /// Parses `e`, `w0`, or a dot-joined word such as `s1.s2.s1` (any word,
    /// reduced or not, is multiplied out).
    pub fn parse(&self, s: &str) -> Result<WeylElement> {
        let s = s.trim();
        match s {
            "e" | "" => return Ok(self.identity()),
            "w0" => return Ok(self.longest()),
            _ => {}
        }
        let word = parse_word(s)?;
        self.from_word(&word)
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Parses a dot-joined word `s1.s2` into 0-based indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    if s == "e" {
        return Ok(vec![]);
    }
    s.split('.')
        .map(|t| {
            let t = t.trim();
            t.strip_prefix('s')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&d| d >= 1)
                .map(|d| d - 1)
                .ok_or_else(|| Error::Parse(format!("bad generator {t:?} in {s:?}")))
        })
        .collect()
}

/// `<lam, alpha_i^vee> = 0` indices: the simple roots generating `W_lambda`.
pub fn stabilizer_subset(lam: &Weight) -> Result<Vec<usize>> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.0.clone()));
    }
    Ok(lam
        .0
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == 0)
        .map(|(i, _)| i)
        .collect())
}

/// The set `W^P` of minimal-length representatives of `W / W_P`.
#[derive(Debug, Clone)]
pub struct ParabolicQuotient {
    subset: Vec<usize>,
    min_reps: Vec<WeylElement>,
    /// position in `min_reps`, per group element
    position: Vec<Option<usize>>,
    /// bitset of `min_reps[a] <= min_reps[b]`, when small enough to store
    order: Option<Vec<u64>>,
    longest_p: WeylElement,
}

const ORDER_TABLE_LIMIT: usize = 4096;

/// Builds `W^P` for the parabolic subgroup generated by `subset`.
pub fn minimal_coset_reps(group: &WeylGroup, subset: &[usize]) -> Result<ParabolicQuotient> {
    ParabolicQuotient::new(group, subset)
}

impl ParabolicQuotient {
    pub fn new(group: &WeylGroup, subset: &[usize]) -> Result<Self> {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&j) = subset.iter().find(|&&j| j >= group.rank()) {
            return Err(Error::BadSimpleIndex(j));
        }
        // group order is already (length, word), so the filter keeps that order
        let min_reps: Vec<WeylElement> = group
            .elements()
            .filter(|&w| subset.iter().all(|&j| !group.is_right_descent(w, j)))
            .collect();
        let mut position = vec![None; group.order()];
        for (p, w) in min_reps.iter().enumerate() {
            position[w.0] = Some(p);
        }
        let m = min_reps.len();
        let order = (m <= ORDER_TABLE_LIMIT).then(|| {
            let words = m.div_ceil(64);
            let mut bits = vec![0u64; m * words];
            for a in 0..m {
                for b in 0..m {
                    if group.bruhat_leq(min_reps[a], min_reps[b]) {
                        bits[a * words + b / 64] |= 1 << (b % 64);
                    }
                }
            }
            bits
        });
        let longest_p = group.longest_in(&subset);
        Ok(ParabolicQuotient {
            subset,
            min_reps,
            position,
            order,
            longest_p,
        })
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn len(&self) -> usize {
        self.min_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.min_reps.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.min_reps
    }

    pub fn contains(&self, w: WeylElement) -> bool {
        self.position[w.0].is_some()
    }

    pub fn position(&self, w: WeylElement) -> Option<usize> {
        self.position[w.0]
    }

    pub fn require(&self, group: &WeylGroup, w: WeylElement) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::NotInQuotient(group.format(w)))
        }
    }

    /// Longest element `w_{o,P}` of `W_P`.
    pub fn longest_parabolic(&self) -> WeylElement {
        self.longest_p
    }

    /// Maximum of `W^P`, i.e. the representative of `w_o W_P`.
    pub fn top(&self) -> WeylElement {
        *self.min_reps.last().expect("W^P is never empty")
    }

    /// Minimal representative of the coset `w W_P`.
    pub fn project(&self, group: &WeylGroup, w: WeylElement) -> WeylElement {
        let mut w = w;
        'outer: loop {
            for &j in &self.subset {
                if group.is_right_descent(w, j) {
                    w = group.mul_simple_right(w, j);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Bruhat order restricted to `W^P`.
    pub fn leq(&self, group: &WeylGroup, x: WeylElement, y: WeylElement) -> bool {
        match (&self.order, self.position[x.0], self.position[y.0]) {
            (Some(bits), Some(a), Some(b)) => {
                let words = self.min_reps.len().div_ceil(64);
                bits[a * words + b / 64] >> (b % 64) & 1 == 1
            }
            _ => group.bruhat_leq(x, y),
        }
    }

    /// The order-reversing involution `w -> w_o w w_{o,P}` of `W^P`.
    pub fn involution(&self, group: &WeylGroup, w: WeylElement) -> WeylElement {
        group.mul(group.mul(group.longest(), w), self.longest_p)
    }

    /// Elements of `W^P` that are covered by `w` (length one less, below `w`).
    pub fn lower_covers(&self, group: &WeylGroup, w: WeylElement) -> Vec<WeylElement> {
        let l = group.length(w);
        if l == 0 {
            return vec![];
        }
        self.min_reps
            .iter()
            .copied()
            .filter(|&v| group.length(v) + 1 == l && self.leq(group, v, w))
            .collect()
    }

    /// Elements of `W^P` that cover `v`.
    pub fn upper_covers(&self, group: &WeylGroup, v: WeylElement) -> Vec<WeylElement> {
        let l = group.length(v);
        self.min_reps
            .iter()
            .copied()
            .filter(|&w| group.length(w) == l + 1 && self.leq(group, v, w))
            .collect()
    }
}

/// Lifting data between `W^P` and a coarser quotient `W^lambda`
/// (the parabolic of `lambda` contains `P`).
#[derive(Debug, Clone)]
pub struct CosetLifts {
    fine: ParabolicQuotient,
    coarse: ParabolicQuotient,
    /// lifts in `W^P` of each element of `W^lambda`, in group order
    lifts: Vec<Vec<WeylElement>>,
    class_of: HashMap<WeylElement, WeylElement>,
}

impl CosetLifts {
    pub fn new(
        group: &WeylGroup,
        fine: ParabolicQuotient,
        coarse: ParabolicQuotient,
    ) -> Result<Self> {
        if !fine.subset().iter().all(|j| coarse.subset().contains(j)) {
            return Err(Error::Invariant(
                "coarse parabolic must contain the fine one".into(),
            ));
        }
        let mut lifts = vec![Vec::new(); coarse.len()];
        let mut class_of = HashMap::new();
        for &u in fine.elements() {
            let x = coarse.project(group, u);
            lifts[coarse.position(x).expect("projection lands in W^lambda")].push(u);
            class_of.insert(u, x);
        }
        Ok(CosetLifts {
            fine,
            coarse,
            lifts,
            class_of,
        })
    }

    pub fn fine(&self) -> &ParabolicQuotient {
        &self.fine
    }

    pub fn coarse(&self) -> &ParabolicQuotient {
        &self.coarse
    }

    /// All lifts in `W^P` of a class in `W^lambda`.
    pub fn lifts(&self, x_class: WeylElement) -> &[WeylElement] {
        match self.coarse.position(x_class) {
            Some(p) => &self.lifts[p],
            None => &[],
        }
    }

    /// The class in `W^lambda` of an element of `W^P`.
    pub fn class_of(&self, u: WeylElement) -> Option<WeylElement> {
        self.class_of.get(&u).copied()
    }

    /// The lift of `x_class` that is lambda-maximal in `w`: the largest lift
    /// below `w`. `None` when no lift lies below `w`. A set of lifts below `w`
    /// without a maximum contradicts Deodhar's lemma and is reported as an
    /// invariant violation.
    pub fn lambda_maximal_lift(
        &self,
        group: &WeylGroup,
        x_class: WeylElement,
        w: WeylElement,
    ) -> Result<Option<WeylElement>> {
        let below: Vec<WeylElement> = self
            .lifts(x_class)
            .iter()
            .copied()
            .filter(|&u| self.fine.leq(group, u, w))
            .collect();
        extremum(group, &self.fine, &below, true)
    }

    /// The lift of `x_class` that is lambda-minimal on `v`: the smallest lift
    /// above `v`.
    pub fn lambda_minimal_lift(
        &self,
        group: &WeylGroup,
        x_class: WeylElement,
        v: WeylElement,
    ) -> Result<Option<WeylElement>> {
        let above: Vec<WeylElement> = self
            .lifts(x_class)
            .iter()
            .copied()
            .filter(|&u| self.fine.leq(group, v, u))
            .collect();
        extremum(group, &self.fine, &above, false)
    }
}

fn extremum(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    set: &[WeylElement],
    maximum: bool,
) -> Result<Option<WeylElement>> {
    if set.is_empty() {
        return Ok(None);
    }
    // group order is a linear extension, so the candidate is the last (first)
    let cand = if maximum {
        *set.iter().max().unwrap()
    } else {
        *set.iter().min().unwrap()
    };
    let ok = set.iter().all(|&u| {
        if maximum {
            q.leq(group, u, cand)
        } else {
            q.leq(group, cand, u)
        }
    });
    if ok {
        Ok(Some(cand))
    } else {
        Err(Error::Invariant(format!(
            "lift set without unique {} element",
            if maximum { "maximal" } else { "minimal" }
        )))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;

    fn group(t: &str) -> WeylGroup {
        enumerate_weyl(&RootSystem::new(t.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn group_orders() {
        for (t, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("C2", 8),
            ("B3", 48),
            ("C3", 48),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
        ] {
            assert_eq!(group(t).order(), n, "{t}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let rs = RootSystem::new("A3".parse().unwrap()).unwrap();
        assert_eq!(
            WeylGroup::new(rs, 10).unwrap_err(),
            Error::GroupTooLarge { cap: 10 }
        );
    }

    #[test]
    fn identity_first_and_words_reduced() {
        let g = group("B3");
        assert_eq!(g.word(g.identity()), &[] as &[usize]);
        for w in g.elements() {
            assert_eq!(g.word(w).len(), g.length(w));
            assert_eq!(g.from_word(g.word(w)).unwrap(), w);
        }
    }

    #[test]
    fn length_counts_inversions() {
        for t in ["A3", "C3", "G2"] {
            let g = group(t);
            for w in g.elements() {
                let inv = g
                    .root_system()
                    .positive_roots()
                    .iter()
                    .filter(|b| !g.act_root(w, b).is_positive())
                    .count();
                assert_eq!(inv, g.length(w), "{t}");
            }
        }
    }

    #[test]
    fn longest_element() {
        for t in ["A2", "B3", "D4", "G2"] {
            let g = group(t);
            let w0 = g.longest();
            assert_eq!(g.length(w0), g.root_system().positive_roots().len());
            assert_eq!(g.mul(w0, w0), g.identity());
            assert_eq!(g.longest_in(&(0..g.rank()).collect::<Vec<_>>()), w0);
            assert!(g.elements().all(|x| g.bruhat_leq(x, w0)));
        }
    }

    #[test]
    fn bruhat_examples_a2() {
        let g = group("A2");
        let s1 = g.parse("s1").unwrap();
        let s2 = g.parse("s2").unwrap();
        let s1s2 = g.parse("s1.s2").unwrap();
        assert!(g.bruhat_leq(s1, s1s2));
        assert!(!g.bruhat_leq(s1, s2));
        assert!(g.elements().all(|w| g.bruhat_leq(g.identity(), w)));
    }

    #[test]
    fn canonical_word_is_lex_least() {
        let g = group("A3");
        // s2.s1.s2 = s1.s2.s1 in A; lex least is s1.s2.s1
        let w = g.parse("s2.s1.s2").unwrap();
        assert_eq!(g.format(w), "s1.s2.s1");
    }

    #[test]
    fn minimal_coset_reps_examples() {
        let g = group("A2");
        let q = minimal_coset_reps(&g, &[1]).unwrap();
        let names: Vec<String> = q.elements().iter().map(|&w| g.format(w)).collect();
        assert_eq!(names, vec!["e", "s1", "s2.s1"]);
        assert_eq!(
            minimal_coset_reps(&g, &[0, 1]).unwrap().elements(),
            &[g.identity()]
        );
        assert_eq!(minimal_coset_reps(&g, &[]).unwrap().len(), 6);
        assert!(minimal_coset_reps(&g, &[5]).is_err());
    }

    #[test]
    fn cosets_have_unique_minimal_rep() {
        let g = group("B3");
        for subset in [vec![0], vec![1, 2], vec![0, 2]] {
            let q = minimal_coset_reps(&g, &subset).unwrap();
            let wp = g.parabolic_subgroup(&subset);
            assert_eq!(q.len() * wp.len(), g.order());
            for &u in q.elements() {
                for &y in &wp {
                    let uy = g.mul(u, y);
                    assert_eq!(q.project(&g, uy), u);
                    assert!(g.length(uy) >= g.length(u));
                }
            }
        }
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(stabilizer_subset(&Weight(vec![1, 0])).unwrap(), vec![1]);
        assert_eq!(
            stabilizer_subset(&Weight(vec![1, 2])).unwrap(),
            Vec::<usize>::new()
        );
        assert_eq!(stabilizer_subset(&Weight(vec![0, 0])).unwrap(), vec![0, 1]);
        assert!(stabilizer_subset(&Weight(vec![1, -1])).is_err());
    }

    #[test]
    fn maximal_lift_example_a2() {
        let g = group("A2");
        let fine = minimal_coset_reps(&g, &[]).unwrap();
        let coarse = minimal_coset_reps(&g, &[1]).unwrap();
        let lifts = CosetLifts::new(&g, fine, coarse).unwrap();
        let s1 = g.parse("s1").unwrap();
        let w = g.parse("s2.s1.s2").unwrap();
        let top = lifts.lambda_maximal_lift(&g, s1, w).unwrap().unwrap();
        assert_eq!(g.format(top), "s1.s2");
        // s2.s1 class is not below s1
        let s2s1 = g.parse("s2.s1").unwrap();
        assert_eq!(lifts.lambda_maximal_lift(&g, s2s1, s1).unwrap(), None);
        assert_eq!(
            g.format(
                lifts
                    .lambda_minimal_lift(&g, s1, g.identity())
                    .unwrap()
                    .unwrap()
            ),
            "s1"
        );
    }

    #[test]
    fn lift_is_identity_when_quotients_agree() {
        let g = group("C2");
        let q = minimal_coset_reps(&g, &[0]).unwrap();
        let lifts = CosetLifts::new(&g, q.clone(), q.clone()).unwrap();
        for &x in q.elements() {
            for &w in q.elements() {
                let got = lifts.lambda_maximal_lift(&g, x, w).unwrap();
                assert_eq!(got, q.leq(&g, x, w).then_some(x));
            }
        }
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("s1.s2.s1").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert!(parse_word("s0").is_err());
        assert!(parse_word("t1").is_err());
        let g = group("A2");
        assert!(g.parse("s3").is_err());
        assert_eq!(g.parse("w0").unwrap(), g.longest());
        assert_eq!(format_word(&[1, 0]), "s2.s1");
    }
}
