use smt_core::oracle::{demazure_character, weyl_dim, Character};
use smt_core::schubert::{richardson_contains, RichardsonPair};
use smt_core::smt::{
    count_on_union, filtration_partition, intersect_pairs, RichardsonUnion, SmtContext,
};
use smt_core::{enumerate_weyl, RootSystem, Weight, WeylGroup};

fn group(t: &str) -> WeylGroup {
    enumerate_weyl(&RootSystem::new(t.parse().unwrap()).unwrap()).unwrap()
}

fn all_pairs(ctx: &SmtContext<'_>) -> Vec<RichardsonPair> {
    let q = ctx.quotient();
    let mut out = Vec::new();
    for &v in q.elements() {
        for &w in q.elements() {
            if let Ok(p) = ctx.pair(v, w) {
                out.push(p);
            }
        }
    }
    out
}

fn sum(ws: &[Weight]) -> Weight {
    ws.iter().skip(1).fold(ws[0].clone(), |a, b| &a + b)
}

#[test]
fn full_flag_counts_match_weyl_dimension() {
    let cases: [(&str, &[&str]); 5] = [
        ("A2", &["1,0", "0,1"]),
        ("A2", &["1,0", "1,0"]),
        ("B2", &["1,0", "0,1"]),
        ("C2", &["0,1", "1,0", "0,1"]),
        ("A3", &["0,1,0", "1,0,1"]),
    ];
    for (t, ws) in cases {
        let g = group(t);
        let weights: Vec<Weight> = ws.iter().map(|s| s.parse().unwrap()).collect();
        let ctx = SmtContext::new(&g, &[], &weights).unwrap();
        let monos = ctx.enumerate_standard(&ctx.full_pair()).unwrap();
        let total = sum(&weights);
        assert_eq!(
            monos.len() as u128,
            weyl_dim(g.root_system(), &total).unwrap(),
            "{t} {ws:?}"
        );
        let chars = Character::from_weights(monos.iter().map(|m| -&m.total_weight));
        assert_eq!(
            chars,
            demazure_character(&g, g.longest(), &total).unwrap(),
            "{t} {ws:?}"
        );
        for m in &monos {
            let xi = m
                .factors
                .iter()
                .fold(Weight::zero(g.rank()), |a, p| &a + &p.xi());
            assert_eq!(xi, m.total_weight);
        }
    }
}

#[test]
fn schubert_counts_match_demazure_mass() {
    let g = group("B2");
    let weights = [Weight(vec![1, 0]), Weight(vec![0, 1])];
    let ctx = SmtContext::new(&g, &[], &weights).unwrap();
    for &w in ctx.quotient().elements() {
        let pair = ctx.pair(g.identity(), w).unwrap();
        let monos = ctx.enumerate_standard(&pair).unwrap();
        let oracle = demazure_character(&g, w, &sum(&weights)).unwrap();
        assert_eq!(monos.len() as i64, oracle.mass(), "{}", g.format(w));
        let chars = Character::from_weights(monos.iter().map(|m| -&m.total_weight));
        assert_eq!(chars, oracle);
    }
}

#[test]
fn standardness_is_monotone_in_the_variety() {
    let g = group("A2");
    let ctx = SmtContext::new(&g, &[], &[Weight(vec![1, 0]), Weight(vec![1, 1])]).unwrap();
    let pairs = all_pairs(&ctx);
    for inner in &pairs {
        let monos = ctx.enumerate_standard(inner).unwrap();
        for outer in pairs
            .iter()
            .filter(|o| richardson_contains(&g, ctx.quotient(), o, inner))
        {
            for m in &monos {
                assert!(ctx.certify(&m.factors, outer).unwrap().is_some());
            }
        }
    }
}

#[test]
fn unions_agree_with_inclusion_exclusion() {
    let cases: [(&str, &[usize], &[&str]); 5] = [
        ("A2", &[], &["1,1"]),
        ("A2", &[], &["1,0", "0,1"]),
        ("B2", &[0], &["0,1"]),
        ("C2", &[1], &["2,0"]),
        ("B2", &[], &["1,0", "0,1"]),
    ];
    for (t, para, ws) in cases {
        let g = group(t);
        let weights: Vec<Weight> = ws.iter().map(|s| s.parse().unwrap()).collect();
        let ctx = SmtContext::new(&g, para, &weights).unwrap();
        let pairs = all_pairs(&ctx);
        for (k, x) in pairs.iter().enumerate() {
            for y in &pairs[k..] {
                let z = RichardsonUnion::new(&g, ctx.quotient(), vec![*x, *y]);
                let c = count_on_union(&ctx, &z).unwrap();
                assert!(
                    c.agrees(),
                    "{t} {ws:?} {} {} {c:?}",
                    x.format(&g),
                    y.format(&g)
                );
            }
        }
    }
}

#[test]
fn unions_need_the_common_stabilizer() {
    let g = group("B2");
    let ctx = SmtContext::new(&g, &[], &[Weight(vec![0, 1])]).unwrap();
    let e = g.identity();
    let s1 = g.parse("s1").unwrap();
    let z = RichardsonUnion::new(
        &g,
        ctx.quotient(),
        vec![ctx.pair(e, e).unwrap(), ctx.pair(s1, s1).unwrap()],
    );
    assert!(matches!(
        count_on_union(&ctx, &z),
        Err(smt_core::Error::NotAmple { .. })
    ));
    assert!(filtration_partition(&ctx, &ctx.full_pair()).is_err());
}

#[test]
fn three_component_union() {
    let g = group("A3");
    let ctx = SmtContext::new(&g, &[0, 2], &[Weight(vec![0, 1, 0])]).unwrap();
    let q = ctx.quotient();
    let e = g.identity();
    let tops: Vec<_> = q
        .elements()
        .iter()
        .copied()
        .filter(|&w| g.length(w) == 2)
        .collect();
    let comps: Vec<RichardsonPair> = tops.iter().map(|&w| ctx.pair(e, w).unwrap()).collect();
    let z = RichardsonUnion::new(&g, q, comps);
    assert!(count_on_union(&ctx, &z).unwrap().agrees());
}

#[test]
fn non_lattice_meet_splits_into_components() {
    let g = group("A2");
    let ctx = SmtContext::new(&g, &[], &[Weight(vec![1, 1])]).unwrap();
    let e = g.identity();
    let x = ctx.pair(e, g.parse("s1.s2").unwrap()).unwrap();
    let y = ctx.pair(e, g.parse("s2.s1").unwrap()).unwrap();
    let meet = intersect_pairs(&g, ctx.quotient(), &x, &y);
    let tops: Vec<String> = meet.components().iter().map(|p| g.format(p.w)).collect();
    assert_eq!(tops, vec!["s1".to_string(), "s2".to_string()]);
}

#[test]
fn filtration_blocks_single_weight_all_pairs() {
    for t in ["A2", "B2", "G2", "A3"] {
        let g = group(t);
        for lam in g.root_system().classical_type_weights() {
            let ctx = SmtContext::for_weight(&g, &lam).unwrap();
            for pair in all_pairs(&ctx) {
                let part = filtration_partition(&ctx, &pair).unwrap();
                assert!(part.sums_to_total(), "{t} {lam} {}", pair.format(&g));
                assert!(part.blocks_agree(), "{t} {lam} {}", pair.format(&g));
                let top = part.blocks.iter().find(|b| b.x == pair.w).unwrap();
                assert_eq!(top.direct, 1);
                let set = ctx.admissible(0);
                let q = ctx.quotient();
                for b in &part.blocks {
                    let expect = set
                        .pairs()
                        .iter()
                        .filter(|p| p.v == b.x && q.leq(&g, p.w, pair.w))
                        .count();
                    assert_eq!(b.direct, expect);
                }
            }
        }
    }
}

#[test]
fn filtration_sums_mixed_weights() {
    for (t, ws) in [
        ("A2", ["1,0", "0,1"]),
        ("B2", ["1,0", "0,1"]),
        ("A2", ["1,1", "1,0"]),
    ] {
        let g = group(t);
        let weights: Vec<Weight> = ws.iter().map(|s| s.parse().unwrap()).collect();
        let ctx = SmtContext::new(&g, &[], &weights).unwrap();
        for pair in all_pairs(&ctx) {
            assert!(
                filtration_partition(&ctx, &pair).unwrap().sums_to_total(),
                "{t} {}",
                pair.format(&g)
            );
        }
    }
}

#[test]
fn enumeration_order_is_deterministic() {
    let g = group("C2");
    let ctx = SmtContext::new(&g, &[], &[Weight(vec![0, 1]), Weight(vec![1, 0])]).unwrap();
    let a = ctx.enumerate_standard(&ctx.full_pair()).unwrap();
    let b = ctx.enumerate_standard(&ctx.full_pair()).unwrap();
    assert_eq!(a, b);
}
