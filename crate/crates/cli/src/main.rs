//! `smtk`: admissible pairs, standard monomials and Pluecker straightening
//! from the command line.
//!
//! Exit status: 0 when every check passed, 1 when a check failed, 2 for
//! usage errors and invalid input.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use smt_core::admissible::enumerate_admissible;
use smt_core::oracle::{demazure_character, weyl_dim, Character};
use smt_core::pluecker::field::DEFAULT_PRIME;
use smt_core::pluecker::hodge::{verify_hodge_i, verify_hodge_iii};
use smt_core::pluecker::{all_relations, straighten, PlueckerIndex, StraighteningRelation};
use smt_core::schubert::RichardsonPair;
use smt_core::smt::{
    count_on_union, filtration_partition, RichardsonUnion, SmtContext, StandardMonomial,
};
use smt_core::{enumerate_weyl, CartanType, RootSystem, Weight, WeylElement, WeylGroup};

#[derive(Parser)]
#[command(name = "smtk", version, about = "Standard monomial theory toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible pairs of a classical-type weight, checked against dim V(lambda)
    Admissible(AdmissibleArgs),
    /// Standard monomials on a Richardson variety or a union of them
    Smt(SmtArgs),
    /// Quadratic straightening relations and rank checks on Gr(r, n)
    Straighten(StraightenArgs),
}

#[derive(Args)]
struct AdmissibleArgs {
    /// Cartan type, e.g. C2
    #[arg(long = "type")]
    cartan: CartanType,
    /// Fundamental-weight coordinates, e.g. 0,1
    #[arg(long)]
    weight: Weight,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SmtArgs {
    #[arg(long = "type")]
    cartan: CartanType,
    /// Simple roots of the parabolic, 1-based ("1,3"), "none" for the Borel,
    /// or "auto" for the common stabilizer of the weights
    #[arg(long, default_value = "auto")]
    parabolic: String,
    /// Weights joined by '+', e.g. 1,0+0,1
    #[arg(long)]
    weights: String,
    /// Richardson pair v:w with elements as words ("s2.s1"), "e" or "w0"
    #[arg(long, default_value = "e:w0", conflicts_with = "union")]
    pair: String,
    /// Union of Richardson pairs joined by '+', e.g. e:s1.s2+e:s2.s1
    #[arg(long)]
    union: Option<String>,
    /// Check the filtration blocks of the pair
    #[arg(long)]
    verify_filtration: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StraightenArgs {
    /// r,n for Gr(r, n)
    #[arg(long)]
    grassmann: String,
    /// A non-standard pair I,J, e.g. 14,23
    #[arg(long)]
    pair: Option<String>,
    /// Straighten every non-standard pair
    #[arg(long)]
    all: bool,
    /// Run the evaluation-rank checks on Gr(r, n) and its Schubert varieties
    #[arg(long)]
    verify_hodge: bool,
    #[arg(long, default_value_t = 2)]
    degree: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    seeds: Vec<u64>,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long)]
    json: bool,
}

/// Outcome of a command whose input was valid.
struct Report {
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Admissible(a) => cmd_admissible(&a),
        Command::Smt(a) => cmd_smt(&a),
        Command::Straighten(a) => cmd_straighten(&a),
    };
    match result {
        Ok(Report { pass: true }) => ExitCode::SUCCESS,
        Ok(Report { pass: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Serialize)]
struct AdmissibleJson {
    v: String,
    w: String,
    xi: Vec<i64>,
    chain: Vec<String>,
}

#[derive(Serialize)]
struct AdmissibleReport {
    r#type: String,
    weight: Vec<i64>,
    pairs: Vec<AdmissibleJson>,
    count: usize,
    expected: u128,
    character_match: bool,
    pass: bool,
}

fn cmd_admissible(a: &AdmissibleArgs) -> Result<Report> {
    let rs = RootSystem::new(a.cartan)?;
    let g = enumerate_weyl(&rs)?;
    let set = enumerate_admissible(&g, &a.weight)?;
    let expected = weyl_dim(&rs, &a.weight)?;
    let chars = Character::from_weights(set.pairs().iter().map(|p| -&p.xi()));
    let character_match = chars == demazure_character(&g, g.longest(), &a.weight)?;
    let pass = set.len() as u128 == expected && character_match;
    let pairs: Vec<AdmissibleJson> = set
        .pairs()
        .iter()
        .map(|p| AdmissibleJson {
            v: g.format(p.v),
            w: g.format(p.w),
            xi: p.xi().0,
            chain: p.chain.iter().map(|&x| g.format(x)).collect(),
        })
        .collect();
    if a.json {
        print_json(&AdmissibleReport {
            r#type: a.cartan.to_string(),
            weight: a.weight.0.clone(),
            count: pairs.len(),
            pairs,
            expected,
            character_match,
            pass,
        })?;
    } else {
        println!("{:<16} {:<16} {:<14} chain", "v", "w", "xi");
        for p in &pairs {
            let xi = Weight(p.xi.clone()).to_string();
            println!("{:<16} {:<16} {:<14} {}", p.v, p.w, xi, p.chain.join(" > "));
        }
        println!(
            "count {}, dim V(lambda) {expected}, character {}",
            pairs.len(),
            if character_match {
                "matches"
            } else {
                "differs"
            }
        );
        println!("{}", verdict(pass));
    }
    Ok(Report { pass })
}

fn parse_weights(s: &str, rank: usize) -> Result<Vec<Weight>> {
    let ws: Vec<Weight> = s
        .split('+')
        .map(|t| {
            t.trim()
                .parse::<Weight>()
                .with_context(|| format!("bad weight {t:?}"))
        })
        .collect::<Result<_>>()?;
    if let Some(w) = ws.iter().find(|w| w.0.len() != rank) {
        bail!("weight {w} should have {rank} coordinates");
    }
    Ok(ws)
}

fn parse_parabolic(s: &str, rank: usize, weights: &[Weight]) -> Result<Vec<usize>> {
    match s.trim() {
        "auto" => Ok((0..rank)
            .filter(|&j| weights.iter().all(|w| w.0[j] == 0))
            .collect()),
        "none" | "" => Ok(Vec::new()),
        list => list
            .split(',')
            .map(|t| {
                let i: usize = t
                    .trim()
                    .parse()
                    .with_context(|| format!("bad simple root index {t:?}"))?;
                if i == 0 || i > rank {
                    bail!("simple root index {i} out of range 1..{rank}");
                }
                Ok(i - 1)
            })
            .collect(),
    }
}

fn parse_element(g: &WeylGroup, top: WeylElement, s: &str) -> Result<WeylElement> {
    match s.trim() {
        "w0" => Ok(top),
        t => Ok(g.parse(t)?),
    }
}

fn parse_pair(ctx: &SmtContext<'_>, s: &str) -> Result<RichardsonPair> {
    let (v, w) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("pair {s:?} should look like v:w"))?;
    let g = ctx.group();
    let top = ctx.quotient().top();
    let v = parse_element(g, top, v)?;
    let w = parse_element(g, top, w)?;
    // words name cosets; use their minimal representatives
    let q = ctx.quotient();
    Ok(ctx.pair(q.project(g, v), q.project(g, w))?)
}

#[derive(Serialize)]
struct FactorJson {
    v: String,
    w: String,
}

#[derive(Serialize)]
struct MonomialJson {
    factors: Vec<FactorJson>,
    lifts: Vec<String>,
    weight: Vec<i64>,
}

fn monomial_json(g: &WeylGroup, m: &StandardMonomial) -> MonomialJson {
    MonomialJson {
        factors: m
            .factors
            .iter()
            .map(|p| FactorJson {
                v: g.format(p.v),
                w: g.format(p.w),
            })
            .collect(),
        lifts: m.lifts.iter().map(|&x| g.format(x)).collect(),
        weight: m.total_weight.0.clone(),
    }
}

#[derive(Serialize)]
struct BlockJson {
    x: String,
    by_difference: i64,
    direct: usize,
}

#[derive(Serialize)]
struct FiltrationJson {
    blocks: Vec<BlockJson>,
    total: usize,
    sums_to_total: bool,
    blocks_agree: bool,
    pass: bool,
}

#[derive(Serialize)]
struct UnionJson {
    components: Vec<String>,
    direct: usize,
    inclusion_exclusion: i64,
}

#[derive(Serialize)]
struct SmtReport {
    r#type: String,
    parabolic: Vec<usize>,
    weights: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    union: Option<UnionJson>,
    monomials: Vec<MonomialJson>,
    count: usize,
    expected: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    filtration: Option<FiltrationJson>,
    pass: bool,
}

fn cmd_smt(a: &SmtArgs) -> Result<Report> {
    let rs = RootSystem::new(a.cartan)?;
    let g = enumerate_weyl(&rs)?;
    let weights = parse_weights(&a.weights, rs.rank())?;
    let parabolic = parse_parabolic(&a.parabolic, rs.rank(), &weights)?;
    let ctx = SmtContext::new(&g, &parabolic, &weights)?;
    let total = weights
        .iter()
        .fold(Weight::zero(rs.rank()), |acc, w| &acc + w);
    let mut pass = true;

    let mut report = SmtReport {
        r#type: a.cartan.to_string(),
        parabolic: parabolic.iter().map(|j| j + 1).collect(),
        weights: weights.iter().map(|w| w.0.clone()).collect(),
        pair: None,
        union: None,
        monomials: Vec::new(),
        count: 0,
        expected: None,
        filtration: None,
        pass: true,
    };

    if let Some(u) = &a.union {
        let comps = u
            .split('+')
            .map(|s| parse_pair(&ctx, s))
            .collect::<Result<Vec<_>>>()?;
        let z = RichardsonUnion::new(&g, ctx.quotient(), comps);
        let c = count_on_union(&ctx, &z)?;
        pass &= c.agrees();
        report.count = c.direct;
        report.expected = Some(c.inclusion_exclusion);
        report.union = Some(UnionJson {
            components: z.components().iter().map(|p| p.format(&g)).collect(),
            direct: c.direct,
            inclusion_exclusion: c.inclusion_exclusion,
        });
    } else {
        let pair = parse_pair(&ctx, &a.pair)?;
        let monos = ctx.enumerate_standard(&pair)?;
        report.count = monos.len();
        // on a Schubert variety the Demazure character gives the count
        if pair.v == g.identity() {
            let mass = demazure_character(&g, pair.w, &total)?.mass();
            pass &= mass == monos.len() as i64;
            report.expected = Some(mass);
        }
        report.monomials = monos.iter().map(|m| monomial_json(&g, m)).collect();
        report.pair = Some(pair.format(&g));
        if a.verify_filtration {
            let part = filtration_partition(&ctx, &pair)?;
            let single = weights.len() == 1;
            let ok = part.sums_to_total() && (!single || part.blocks_agree());
            pass &= ok;
            report.filtration = Some(FiltrationJson {
                blocks: part
                    .blocks
                    .iter()
                    .map(|b| BlockJson {
                        x: g.format(b.x),
                        by_difference: b.by_difference,
                        direct: b.direct,
                    })
                    .collect(),
                total: part.total,
                sums_to_total: part.sums_to_total(),
                blocks_agree: part.blocks_agree(),
                pass: ok,
            });
        }
    }
    report.pass = pass;

    if a.json {
        print_json(&report)?;
    } else {
        print_smt_table(&report);
    }
    Ok(Report { pass })
}

fn print_smt_table(r: &SmtReport) {
    println!("{} P = {:?} weights {:?}", r.r#type, r.parabolic, r.weights);
    if let Some(u) = &r.union {
        println!("union {}", u.components.join(" + "));
        println!(
            "direct {}, inclusion-exclusion {}",
            u.direct, u.inclusion_exclusion
        );
    } else {
        println!("pair {}", r.pair.as_deref().unwrap_or(""));
        for m in &r.monomials {
            let f: Vec<String> = m
                .factors
                .iter()
                .map(|f| format!("({}, {})", f.v, f.w))
                .collect();
            println!(
                "  {:<40} lifts {:<40} weight {:?}",
                f.join(" "),
                m.lifts.join(" "),
                m.weight
            );
        }
        match r.expected {
            Some(e) => println!("count {}, Demazure {e}", r.count),
            None => println!("count {}", r.count),
        }
    }
    if let Some(f) = &r.filtration {
        println!("filtration blocks (x, by difference, direct):");
        for b in &f.blocks {
            println!("  {:<16} {:>4} {:>4}", b.x, b.by_difference, b.direct);
        }
        println!(
            "sum {} of {}",
            f.blocks.iter().map(|b| b.by_difference).sum::<i64>(),
            f.total
        );
    }
    println!("{}", verdict(r.pass));
}

fn parse_grassmann(s: &str) -> Result<(usize, usize)> {
    let (r, n) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("--grassmann expects r,n"))?;
    let (r, n): (usize, usize) = (r.trim().parse()?, n.trim().parse()?);
    if r == 0 || r >= n {
        bail!("need 1 <= r < n");
    }
    // desk-scale cap for symbolic expansion and rank checks
    if r * (n - r) > 9 {
        bail!("Gr({r},{n}) is larger than supported (r*(n-r) <= 9)");
    }
    Ok((r, n))
}

#[derive(Serialize)]
struct TermJson {
    c: String,
    pair: [Vec<usize>; 2],
}

#[derive(Serialize)]
struct RelationJson {
    lhs: [Vec<usize>; 2],
    rhs: Vec<TermJson>,
}

fn relation_json(rel: &StraighteningRelation) -> RelationJson {
    RelationJson {
        lhs: [rel.lhs.0.entries().to_vec(), rel.lhs.1.entries().to_vec()],
        rhs: rel
            .rhs
            .iter()
            .map(|(c, a, b)| TermJson {
                c: c.to_string(),
                pair: [a.entries().to_vec(), b.entries().to_vec()],
            })
            .collect(),
    }
}

fn relation_text(rel: &StraighteningRelation) -> String {
    let mut s = format!("p{} p{} =", rel.lhs.0, rel.lhs.1);
    for (k, (c, a, b)) in rel.rhs.iter().enumerate() {
        let c = c.to_string();
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        let coef = if mag == "1" {
            String::new()
        } else {
            format!("{mag} ")
        };
        let sign = match (k, neg) {
            (0, false) => " ",
            (0, true) => " -",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        s.push_str(&format!("{sign}{coef}p{a} p{b}"));
    }
    s
}

#[derive(Serialize)]
struct RankJson {
    index: Option<Vec<usize>>,
    count: usize,
    ranks: Vec<usize>,
    others_vanish: bool,
    pass: bool,
}

#[derive(Serialize)]
struct StraightenReport {
    grassmann: [usize; 2],
    relations: Vec<RelationJson>,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    seeds: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hodge: Option<Vec<RankJson>>,
    pass: bool,
}

fn cmd_straighten(a: &StraightenArgs) -> Result<Report> {
    let (r, n) = parse_grassmann(&a.grassmann)?;
    if a.pair.is_none() && !a.all && !a.verify_hodge {
        bail!("nothing to do: give --pair, --all or --verify-hodge");
    }
    let mut rels = Vec::new();
    if let Some(p) = &a.pair {
        let (i, j) = p
            .split_once(',')
            .ok_or_else(|| anyhow!("--pair expects I,J"))?;
        let (i, j) = (PlueckerIndex::parse(i, n)?, PlueckerIndex::parse(j, n)?);
        if i.r() != r || j.r() != r {
            bail!("indices must have {r} entries");
        }
        rels.push(straighten(&i, &j)?);
    }
    if a.all {
        rels.extend(all_relations(r, n)?);
    }
    let mut pass = rels
        .iter()
        .all(|rel| rel.verify_exact() && rel.order_condition());

    let mut hodge = None;
    if a.verify_hodge {
        if a.seeds.is_empty() {
            bail!("--seeds must not be empty");
        }
        if a.degree > 3 {
            bail!("--degree is capped at 3");
        }
        let mut rows = Vec::new();
        let top = verify_hodge_i(r, n, a.degree, &a.seeds, a.prime)?;
        rows.push(RankJson {
            index: None,
            count: top.count,
            pass: top.pass(),
            ranks: top.ranks,
            others_vanish: true,
        });
        for idx in PlueckerIndex::all(r, n)? {
            let rep = verify_hodge_iii(&idx, a.degree, &a.seeds, a.prime)?;
            rows.push(RankJson {
                index: Some(idx.entries().to_vec()),
                count: rep.standard.count,
                pass: rep.pass(),
                ranks: rep.standard.ranks.clone(),
                others_vanish: rep.others_vanish,
            });
        }
        pass &= rows.iter().all(|row| row.pass);
        hodge = Some(rows);
    }

    let report = StraightenReport {
        grassmann: [r, n],
        relations: rels.iter().map(relation_json).collect(),
        count: rels.len(),
        seeds: a.verify_hodge.then(|| a.seeds.clone()),
        hodge,
        pass,
    };
    if a.json {
        print_json(&report)?;
    } else {
        for rel in &rels {
            println!("{}", relation_text(rel));
        }
        if let Some(rows) = &report.hodge {
            println!("seeds {:?}, prime {}", a.seeds, a.prime);
            for row in rows {
                let name = match &row.index {
                    None => format!("Gr({r},{n})"),
                    Some(i) => format!(
                        "X_{}",
                        i.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
                    ),
                };
                println!(
                    "  {name:<10} degree {} count {:>3} ranks {:?} others vanish {} {}",
                    a.degree,
                    row.count,
                    row.ranks,
                    row.others_vanish,
                    verdict(row.pass)
                );
            }
        }
        println!("{}", verdict(pass));
    }
    Ok(Report { pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabolic_forms() {
        let ws = [Weight(vec![0, 1, 0])];
        assert_eq!(parse_parabolic("auto", 3, &ws).unwrap(), vec![0, 2]);
        assert_eq!(
            parse_parabolic("none", 3, &ws).unwrap(),
            Vec::<usize>::new()
        );
        assert_eq!(parse_parabolic("1,3", 3, &ws).unwrap(), vec![0, 2]);
        assert!(parse_parabolic("0", 3, &ws).is_err());
        assert!(parse_parabolic("4", 3, &ws).is_err());
    }

    #[test]
    fn weights_need_matching_rank() {
        assert_eq!(parse_weights("1,0+0,1", 2).unwrap().len(), 2);
        assert!(parse_weights("1,0+1", 2).is_err());
    }

    #[test]
    fn grassmann_bounds() {
        assert_eq!(parse_grassmann("2,4").unwrap(), (2, 4));
        assert!(parse_grassmann("4,4").is_err());
        assert!(parse_grassmann("3,7").is_err());
    }
}
