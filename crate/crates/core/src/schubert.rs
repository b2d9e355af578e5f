//! Richardson pairs and the divisor combinatorics of Schubert varieties:
//! boundaries, lambda-boundaries, Chevalley multiplicities, moving and
//! double divisors. Boundaries are lists of the divisor elements.

use crate::error::{Error, Result};
use crate::rootdata::Weight;
use crate::weyl::{CosetLifts, ParabolicQuotient, WeylElement, WeylGroup};

/// A pair `v <= w` in `W^P`, indexing the Richardson variety `X_w^v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RichardsonPair {
    pub v: WeylElement,
    pub w: WeylElement,
}

impl RichardsonPair {
    pub fn new(
        group: &WeylGroup,
        q: &ParabolicQuotient,
        v: WeylElement,
        w: WeylElement,
    ) -> Result<Self> {
        q.require(group, v)?;
        q.require(group, w)?;
        if !q.leq(group, v, w) {
            return Err(Error::InvalidPair(group.format(v), group.format(w)));
        }
        Ok(RichardsonPair { v, w })
    }

    /// The whole flag variety `G/P`.
    pub fn full(group: &WeylGroup, q: &ParabolicQuotient) -> Self {
        RichardsonPair {
            v: group.identity(),
            w: q.top(),
        }
    }

    pub fn dimension(&self, group: &WeylGroup) -> usize {
        group.length(self.w) - group.length(self.v)
    }

    /// T-fixed points `e_x` with `v <= x <= w`.
    pub fn fixed_points(&self, group: &WeylGroup, q: &ParabolicQuotient) -> Vec<WeylElement> {
        q.elements()
            .iter()
            .copied()
            .filter(|&x| q.leq(group, self.v, x) && q.leq(group, x, self.w))
            .collect()
    }

    pub fn format(&self, group: &WeylGroup) -> String {
        format!("{}:{}", group.format(self.v), group.format(self.w))
    }
}

/// `X_y^x` is contained in `X_w^v` iff `v <= x <= y <= w`.
pub fn richardson_contains(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    outer: &RichardsonPair,
    inner: &RichardsonPair,
) -> bool {
    q.leq(group, outer.v, inner.v) && q.leq(group, inner.w, outer.w)
}

/// A Schubert divisor `X_child` of `X_parent`, with `child = parent * s_beta`
/// and `child = s_gamma * parent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorStep {
    pub parent: WeylElement,
    pub child: WeylElement,
    /// positive root index with `child = parent * s_beta`
    pub beta: usize,
    /// positive root index with `child = s_gamma * parent`
    pub gamma: usize,
    /// `<lambda, beta^vee>` when computed for a weight
    pub multiplicity: Option<i64>,
}

impl DivisorStep {
    /// Moving divisor: `gamma` is a simple root.
    pub fn moved_by(&self, group: &WeylGroup) -> Option<usize> {
        let rs = group.root_system();
        let gamma = &rs.positive_roots()[self.gamma];
        (gamma.height() == 1).then(|| gamma.0.iter().position(|&c| c == 1).unwrap())
    }
}

fn covering_step(
    group: &WeylGroup,
    parent: WeylElement,
    child: WeylElement,
) -> Result<DivisorStep> {
    let t_right = group.mul(group.inverse(parent), child);
    let t_left = group.mul(child, group.inverse(parent));
    match (
        group.reflection_root(t_right),
        group.reflection_root(t_left),
    ) {
        (Some(beta), Some(gamma)) => Ok(DivisorStep {
            parent,
            child,
            beta,
            gamma,
            multiplicity: None,
        }),
        _ => Err(Error::Invariant(format!(
            "{} and {} differ by a non-reflection",
            group.format(child),
            group.format(parent)
        ))),
    }
}

/// All Schubert divisors of `X_w` in `G/P`: the `v` in `W^P` covered by `w`.
pub fn schubert_divisors(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    w: WeylElement,
) -> Result<Vec<DivisorStep>> {
    q.require(group, w)?;
    q.lower_covers(group, w)
        .into_iter()
        .map(|v| covering_step(group, w, v))
        .collect()
}

/// Divisors of the opposite boundary `dX^v`: the `u` in `W^P` covering `v`.
pub fn opposite_divisors(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    v: WeylElement,
) -> Result<Vec<DivisorStep>> {
    q.require(group, v)?;
    q.upper_covers(group, v)
        .into_iter()
        .map(|u| covering_step(group, u, v))
        .collect()
}

/// The covering step `v < w` in `W^P`, or an error if it is not one.
pub fn covering_pair(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    v: WeylElement,
    w: WeylElement,
) -> Result<DivisorStep> {
    let ok = q.contains(v)
        && q.contains(w)
        && group.length(v) + 1 == group.length(w)
        && q.leq(group, v, w);
    if !ok {
        return Err(Error::NotCoveringPair(group.format(v), group.format(w)));
    }
    covering_step(group, w, v)
}

/// `m_lambda(v, w) = <lambda, beta^vee>` for a covering pair `v = w s_beta`.
pub fn chevalley_multiplicity(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    v: WeylElement,
    w: WeylElement,
    lam: &Weight,
) -> Result<i64> {
    group.root_system().check_weight(lam)?;
    let step = covering_pair(group, q, v, w)?;
    Ok(group.root_system().pairing_index(lam, step.beta))
}

fn require_character(q: &ParabolicQuotient, lam: &Weight) -> Result<()> {
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.0.clone()));
    }
    if q.subset().iter().any(|&j| lam.0[j] != 0) {
        return Err(Error::NotCharacterOfParabolic(lam.0.clone()));
    }
    Ok(())
}

/// The divisors of `dX_w` contained in the lambda-boundary: those with
/// `<lambda, beta^vee> > 0`, each carrying its multiplicity.
pub fn lambda_boundary(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    w: WeylElement,
    lam: &Weight,
) -> Result<Vec<DivisorStep>> {
    group.root_system().check_weight(lam)?;
    require_character(q, lam)?;
    let rs = group.root_system();
    Ok(schubert_divisors(group, q, w)?
        .into_iter()
        .map(|mut d| {
            d.multiplicity = Some(rs.pairing_index(lam, d.beta));
            d
        })
        .filter(|d| d.multiplicity.unwrap() > 0)
        .collect())
}

/// `X_v` is a moving divisor of `X_w`: `v = s_alpha w` with `alpha` simple.
pub fn is_moving_divisor(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    v: WeylElement,
    w: WeylElement,
) -> Result<bool> {
    Ok(covering_pair(group, q, v, w)?.moved_by(group).is_some())
}

/// `X_v` is a double divisor of `X_w`: Chevalley multiplicity 2.
pub fn is_double_divisor(
    group: &WeylGroup,
    q: &ParabolicQuotient,
    v: WeylElement,
    w: WeylElement,
    lam: &Weight,
) -> Result<bool> {
    Ok(chevalley_multiplicity(group, q, v, w, lam)? == 2)
}

/// Whether the extremal section `p_{x(lambda)}` restricts to a nonzero
/// section on `X_w^v`: some lift of `x_class` lies in `[v, w]`.
pub fn extremal_restricts_nonzero(
    group: &WeylGroup,
    lifts: &CosetLifts,
    x_class: WeylElement,
    pair: &RichardsonPair,
) -> bool {
    let q = lifts.fine();
    lifts
        .lifts(x_class)
        .iter()
        .any(|&x| q.leq(group, pair.v, x) && q.leq(group, x, pair.w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::RootSystem;
    use crate::weyl::{enumerate_weyl, minimal_coset_reps, stabilizer_subset};

    fn group(t: &str) -> WeylGroup {
        enumerate_weyl(&RootSystem::new(t.parse().unwrap()).unwrap()).unwrap()
    }

    fn names(g: &WeylGroup, steps: &[DivisorStep]) -> Vec<String> {
        let mut v: Vec<String> = steps.iter().map(|d| g.format(d.child)).collect();
        v.sort();
        v
    }

    #[test]
    fn divisors_a2() {
        let g = group("A2");
        let q = minimal_coset_reps(&g, &[]).unwrap();
        assert!(schubert_divisors(&g, &q, g.identity()).unwrap().is_empty());
        let s1s2 = g.parse("s1.s2").unwrap();
        assert_eq!(
            names(&g, &schubert_divisors(&g, &q, s1s2).unwrap()),
            vec!["s1", "s2"]
        );
        assert_eq!(schubert_divisors(&g, &q, g.longest()).unwrap().len(), 2);
    }

    #[test]
    fn divisor_roots_satisfy_relations() {
        let g = group("C3");
        let q = minimal_coset_reps(&g, &[1]).unwrap();
        for &w in q.elements() {
            for d in schubert_divisors(&g, &q, w).unwrap() {
                assert_eq!(g.mul(w, g.reflection(d.beta)), d.child);
                assert_eq!(g.mul(g.reflection(d.gamma), w), d.child);
            }
        }
    }

    #[test]
    fn minuscule_multiplicities_are_one() {
        let g = group("A3");
        let lam = Weight(vec![0, 1, 0]);
        let q = minimal_coset_reps(&g, &stabilizer_subset(&lam).unwrap()).unwrap();
        let mut seen = 0;
        for &w in q.elements() {
            for d in schubert_divisors(&g, &q, w).unwrap() {
                assert_eq!(chevalley_multiplicity(&g, &q, d.child, w, &lam).unwrap(), 1);
                assert!(!is_double_divisor(&g, &q, d.child, w, &lam).unwrap());
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn c2_has_double_divisor() {
        let g = group("C2");
        let lam = Weight(vec![0, 1]);
        let q = minimal_coset_reps(&g, &stabilizer_subset(&lam).unwrap()).unwrap();
        let mut doubles = 0;
        for &w in q.elements() {
            for d in schubert_divisors(&g, &q, w).unwrap() {
                if is_double_divisor(&g, &q, d.child, w, &lam).unwrap() {
                    assert!(is_moving_divisor(&g, &q, d.child, w).unwrap());
                    doubles += 1;
                }
            }
        }
        assert_eq!(doubles, 1);
    }

    #[test]
    fn non_covering_pairs_are_rejected() {
        let g = group("A2");
        let q = minimal_coset_reps(&g, &[]).unwrap();
        let lam = Weight(vec![1, 1]);
        assert!(matches!(
            chevalley_multiplicity(&g, &q, g.identity(), g.longest(), &lam),
            Err(Error::NotCoveringPair(..))
        ));
        let (s1, s2) = (g.parse("s1").unwrap(), g.parse("s2").unwrap());
        assert!(is_moving_divisor(&g, &q, s1, s2).is_err());
    }

    #[test]
    fn lambda_boundary_cases() {
        let g = group("A2");
        let q = minimal_coset_reps(&g, &[]).unwrap();
        let regular = Weight(vec![1, 1]);
        for &w in q.elements() {
            let all = names(&g, &schubert_divisors(&g, &q, w).unwrap());
            assert_eq!(
                names(&g, &lambda_boundary(&g, &q, w, &regular).unwrap()),
                all
            );
            assert!(lambda_boundary(&g, &q, w, &Weight(vec![0, 0]))
                .unwrap()
                .is_empty());
        }
        // s2.s1 covers s1 (beta = a1+a2... pairing 1) and s2 (beta = a1, pairing 1)
        let s2s1 = g.parse("s2.s1").unwrap();
        let lb = lambda_boundary(&g, &q, s2s1, &Weight(vec![1, 0])).unwrap();
        for d in &lb {
            assert!(d.multiplicity.unwrap() > 0);
        }
        let expect: Vec<String> = schubert_divisors(&g, &q, s2s1)
            .unwrap()
            .into_iter()
            .filter(|d| g.root_system().pairing_index(&Weight(vec![1, 0]), d.beta) > 0)
            .map(|d| g.format(d.child))
            .collect();
        assert_eq!(names(&g, &lb), expect);
        // omega_2 is not a character of the parabolic generated by s2
        let qp = minimal_coset_reps(&g, &[1]).unwrap();
        assert!(matches!(
            lambda_boundary(&g, &qp, g.identity(), &Weight(vec![0, 1])),
            Err(Error::NotCharacterOfParabolic(_))
        ));
    }

    #[test]
    fn containment_matches_fixed_points_a2() {
        let g = group("A2");
        let q = minimal_coset_reps(&g, &[]).unwrap();
        let pairs: Vec<RichardsonPair> = q
            .elements()
            .iter()
            .flat_map(|&v| q.elements().iter().map(move |&w| (v, w)))
            .filter_map(|(v, w)| RichardsonPair::new(&g, &q, v, w).ok())
            .collect();
        let full = RichardsonPair::full(&g, &q);
        for a in &pairs {
            assert!(richardson_contains(&g, &q, a, a));
            assert!(richardson_contains(&g, &q, &full, a));
            let fa = a.fixed_points(&g, &q);
            for b in &pairs {
                let fb = b.fixed_points(&g, &q);
                assert_eq!(
                    richardson_contains(&g, &q, a, b),
                    fb.iter().all(|x| fa.contains(x))
                );
            }
        }
    }

    #[test]
    fn invalid_pair_rejected() {
        let g = group("A2");
        let q = minimal_coset_reps(&g, &[]).unwrap();
        let (s1, s2) = (g.parse("s1").unwrap(), g.parse("s2").unwrap());
        assert!(matches!(
            RichardsonPair::new(&g, &q, s1, s2),
            Err(Error::InvalidPair(..))
        ));
    }

    #[test]
    fn extremal_nonvanishing_a2() {
        let g = group("A2");
        let fine = minimal_coset_reps(&g, &[]).unwrap();
        let coarse = minimal_coset_reps(&g, &[1]).unwrap();
        let lifts = CosetLifts::new(&g, fine.clone(), coarse.clone()).unwrap();
        // brute force over the coset members x W_lambda
        let wl = g.parabolic_subgroup(&[1]);
        for &x in coarse.elements() {
            for &v in fine.elements() {
                for &w in fine.elements() {
                    let Ok(pair) = RichardsonPair::new(&g, &fine, v, w) else {
                        continue;
                    };
                    let brute = wl.iter().any(|&y| {
                        let u = g.mul(x, y);
                        g.bruhat_leq(v, u) && g.bruhat_leq(u, w)
                    });
                    assert_eq!(extremal_restricts_nonzero(&g, &lifts, x, &pair), brute);
                }
            }
            let top = RichardsonPair::new(&g, &fine, g.identity(), x).unwrap();
            assert!(extremal_restricts_nonzero(&g, &lifts, x, &top));
        }
    }
}
