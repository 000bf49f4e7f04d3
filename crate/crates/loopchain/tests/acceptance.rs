//! One pass/fail line per acceptance criterion.

mod common;

use std::time::{Duration, Instant};

use loopchain::algebra::{fp_homology_basis, smith_homology, FreeElement, Homology, Ring};
use loopchain::cobar::{fundamental_presentation, h0_group_ring, Cobar, ExtendedCobar, GroupType};
use loopchain::einfty::{chains, nu, steenrod_sq, Simp};
use loopchain::algebra::Graded as _;
use loopchain::prop::{PropGraph, PsiTable, Standard};
use loopchain::simplicial::{aw_coproduct, models, Simplicial as _};
use loopchain::verify::{self, SuiteReport};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Wall-clock budgets for the criteria that carry one.
const BUDGET_COALGEBRA: Duration = Duration::from_secs(10);
const BUDGET_PROP: Duration = Duration::from_secs(60);
const BUDGET_COBAR: Duration = Duration::from_secs(120);

/// Large prime used for the rational rank oracle.
const BIG_PRIME: i64 = 1_000_003;

struct Line {
    passed: bool,
    detail: String,
}

fn from_report(r: &SuiteReport) -> Line {
    let mut detail = format!("{} checks", r.checks);
    for f in r.failures.iter().take(3) {
        detail.push_str(&format!("; {f}"));
    }
    Line { passed: r.passed(), detail }
}

fn merge(reports: &[SuiteReport]) -> Line {
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    let failed: Vec<&String> = reports.iter().flat_map(|r| r.failures.iter()).take(3).collect();
    let mut detail = format!("{checks} checks");
    for f in failed {
        detail.push_str(&format!("; {f}"));
    }
    Line { passed: reports.iter().all(SuiteReport::passed), detail }
}

fn criterion_1() -> Line {
    merge(&[verify::aw_coalgebra(5), verify::serre_coalgebra(5), verify::serre_equivariance(4)])
}

fn criterion_2() -> Line {
    let relations = verify::prop_relations(4);
    let (signs, survivors) = verify::join_signs(4);
    let mut line = merge(&[relations, signs]);
    line.passed &= survivors.len() == 1;
    if let Some(s) = survivors.first() {
        line.detail.push_str(&format!("; convention {}", s.describe()));
    }
    line
}

fn criterion_3() -> Line {
    let mut r = verify::hopf_suite(&[]);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let pool: Vec<PropGraph> =
        PropGraph::enumerate(2, 4, 3, 2).into_iter().filter(|g| g.degree() <= 3 && g.vertices().len() >= 2).collect();
    let sample: Vec<&PropGraph> = pool.choose_multiple(&mut rng, 20).collect();
    for g in &sample {
        let mut order: Vec<usize> = (0..g.vertices().len()).collect();
        order.shuffle(&mut rng);
        verify::hopf_order_independence(&mut r, g, &order);
    }
    let mut line = from_report(&r);
    line.passed &= sample.len() == 20;
    line.detail.push_str(&format!("; {} random graphs", sample.len()));
    line
}

fn criterion_4() -> Line {
    let r = verify::monoidality(5);
    let mut line = from_report(&r);
    let saw_81 = r.notes.iter().any(|n| n.ends_with(": 81"));
    line.passed &= saw_81;
    line.detail.push_str(if saw_81 { "; 81 pairs at p=q=1" } else { "; p=q=1 pairs missing" });
    line
}

fn criterion_5() -> Line {
    from_report(&verify::phi_suite(5, 4))
}

fn rows(x: loopchain::simplicial::SimplicialSet, max: usize) -> (Vec<Homology>, Vec<[usize; 3]>) {
    let c = Cobar::new(x).expect("reduced").complex(max + 1, None).expect("no 1-cells");
    let h = (0..=max).map(|n| smith_homology(&c, n as i64, Ring::Integers).expect("in range")).collect();
    let oracle = (0..=max)
        .map(|n| [2, 3, BIG_PRIME].map(|p| common::betti_mod(&c, n as i64, p)))
        .collect();
    (h, oracle)
}

fn criterion_6() -> Line {
    let (s2, s2_oracle) = rows(models::sphere(2), 5);
    let (s3, s3_oracle) = rows(models::sphere(3), 4);
    let z = Homology::free(1);
    let zero = Homology::free(0);
    let mut ok = s2.iter().all(|h| *h == z) && s2_oracle.iter().all(|b| *b == [1, 1, 1]);
    for n in 0..=4 {
        let (want, betti) = if n % 2 == 0 { (&z, [1; 3]) } else { (&zero, [0; 3]) };
        ok &= s3[n] == *want && s3_oracle[n] == betti;
    }
    let show = |v: &[Homology]| v.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(", ");
    Line { passed: ok, detail: format!("S²: [{}]; S³: [{}]", show(&s2), show(&s3)) }
}

fn criterion_7() -> Line {
    let mut ok = true;
    let mut detail = Vec::new();
    let rp2 = ExtendedCobar::new(models::rp2()).expect("reduced");
    for cutoff in 3..=4 {
        let c = h0_group_ring(&rp2, cutoff);
        ok &= c.rank == 2 && c.conclusive;
        detail.push(format!("RP² cutoff {cutoff}: rank {}", c.rank));
    }
    let s1 = ExtendedCobar::new(models::circle()).expect("reduced");
    for cutoff in 1..=5usize {
        let c = h0_group_ring(&s1, cutoff);
        // Laurent monomials t^k, |k| ≤ cutoff
        let laurent = (-(cutoff as i64)..=cutoff as i64).count();
        ok &= c.rank == laurent && c.rank == 2 * cutoff + 1;
    }
    detail.push("S¹ counts 2L+1 for L ≤ 5".into());
    let g = fundamental_presentation(&models::circle()).classify();
    ok &= g == GroupType::Free { rank: 1 };
    detail.push(format!("S¹ presentation: {g}"));
    Line { passed: ok, detail: detail.join("; ") }
}

fn criterion_8() -> Line {
    let mut reports = vec![verify::cup_i_suite(4, 4)];
    let mut r = SuiteReport::default();
    let x = Simp(models::rp2());
    let table = PsiTable::new(2, Standard::Simplex(0), 2, 2);
    let cx = chains(&x, 3);
    let cell = |n: &str| x.0.cell(n).expect("model cell");
    let mu = FreeElement::from_terms([(cell("U"), 1), (cell("L"), 1)]);
    // Sq¹ on H¹ is dual to P_{−1} on H₂
    let sq1 = steenrod_sq(&x, &cx, &table, -1, &mu).expect("cycle");
    r.check(sq1.coordinates.iter().any(|&c| c != 0), || format!("Sq¹ vanishes on H¹(RP²): {sq1:?}"));
    // top square against the cup square straight from Alexander–Whitney
    let h1 = fp_homology_basis(&cx, 1, 2).expect("in range");
    for (a, alpha) in h1.duals.iter().enumerate() {
        let direct: i64 = aw_coproduct(&x.0, &mu).iter().map(|((u, v), c)| c * alpha.coeff(u) * alpha.coeff(v)).sum();
        r.check(direct.rem_euclid(2) as u64 == sq1.coordinates[a], || "top square ≠ cup square on RP²".into());
    }
    let point = Simp(models::simplex(0));
    let cp = chains(&point, 1);
    let v = FreeElement::basis(point.0.cells(0)[0]);
    let sq0 = steenrod_sq(&point, &cp, &table, 0, &v).expect("cycle");
    r.check(sq0.coordinates == vec![1], || "Sq⁰ on H⁰(point) is not the cup square".into());
    r.check(nu(0, 3) == 1 && nu(2, 3) == -1, || format!("ν(0)={}, ν(2)={}", nu(0, 3), nu(2, 3)));
    // a, b and a + ∂U all represent the generator of H₁(RP²; F₂)
    let a = FreeElement::basis(cell("a"));
    let b = FreeElement::basis(cell("b"));
    let mut shifted = a.clone();
    shifted.add_scaled(&cx.diff(&cell("U")), 1);
    let base = steenrod_sq(&x, &cx, &table, 0, &a).expect("cycle");
    for rep in [&b, &shifted] {
        let other = steenrod_sq(&x, &cx, &table, 0, rep).expect("cycle");
        r.check(other == base, || format!("Sq depends on the representative: {base:?} vs {other:?}"));
    }
    reports.push(r);
    merge(&reports)
}

fn criterion_9() -> Line {
    let r = verify::kan_suite(3);
    let mut line = from_report(&r);
    line.detail.push_str(&format!("; {}", r.notes.join("; ")));
    line
}

fn criterion_10() -> Line {
    from_report(&verify::cartan_serre_suite())
}

/// Up to `limit` items, drawn without replacement when there are more.
fn sample<T: Clone>(items: Vec<T>, limit: usize, rng: &mut ChaCha8Rng) -> Vec<T> {
    if items.len() <= limit {
        items
    } else {
        items.choose_multiple(rng, limit).cloned().collect()
    }
}

/// Random pairs (u, v) with |u| + |v| ≤ max_degree.
fn pairs<T: Clone + loopchain::algebra::Graded>(by_degree: &[Vec<T>], count: usize, rng: &mut ChaCha8Rng) -> Vec<(T, T)> {
    let mut out = Vec::new();
    let max = by_degree.len() - 1;
    for _ in 0..count {
        let du = rng.gen_range(0..=max);
        let dv = rng.gen_range(0..=max - du);
        if let (Some(u), Some(v)) = (by_degree[du].choose(rng), by_degree[dv].choose(rng)) {
            out.push((u.clone(), v.clone()));
        }
    }
    out
}

fn criterion_11() -> Line {
    const MAX_DEGREE: usize = 4;
    const CUTOFF: usize = 3;
    const WORDS_PER_DEGREE: usize = 4000;
    const PAIRS: usize = 3000;
    let mut r = SuiteReport::default();
    let mut shapes = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    for seed in 1..=5u64 {
        let x = common::random_reduced(seed, 3);
        shapes.push(format!("{:?}", (1..=3).map(|d| x.count(d)).collect::<Vec<_>>()));
        let cobar = Cobar::new(x.clone()).expect("reduced");
        let by_degree: Vec<_> = (0..=MAX_DEGREE)
            .map(|n| sample(cobar.words(n, Some(CUTOFF)).expect("cutoff given"), WORDS_PER_DEGREE, &mut rng))
            .collect();
        let ps = pairs(&by_degree, PAIRS, &mut rng);
        verify::cobar_fuzz_checks(&mut r, &cobar, &by_degree.concat(), &ps);
        let ext = ExtendedCobar::new(x).expect("reduced");
        let by_degree: Vec<_> =
            (0..=MAX_DEGREE).map(|n| sample(ext.words(n, CUTOFF), WORDS_PER_DEGREE, &mut rng)).collect();
        let ps = pairs(&by_degree, PAIRS, &mut rng);
        verify::extended_fuzz_checks(&mut r, &ext, &by_degree.concat(), &ps);
    }
    let mut line = from_report(&r);
    line.detail.push_str(&format!("; cells per degree 1..3: {}", shapes.join(" ")));
    line
}

fn main() {
    let criteria: [(&str, fn() -> Line, Option<Duration>); 11] = [
        ("coalgebra axioms", criterion_1, Some(BUDGET_COALGEBRA)),
        ("prop-M relations and join signs", criterion_2, Some(BUDGET_PROP)),
        ("Hopf prop", criterion_3, None),
        ("monoidality", criterion_4, None),
        ("φ certification", criterion_5, None),
        ("cobar homology", criterion_6, Some(BUDGET_COBAR)),
        ("extended cobar H₀", criterion_7, None),
        ("Steenrod suite", criterion_8, None),
        ("Kan loop group", criterion_9, None),
        ("Cartan–Serre", criterion_10, None),
        ("fuzz", criterion_11, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut line = run();
        let took = start.elapsed();
        if let Some(b) = budget {
            if took > *b {
                line.passed = false;
                line.detail.push_str(&format!("; over budget {:?}", b));
            }
        }
        if !line.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({:.2}s) {}",
            i + 1,
            name,
            if line.passed { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            line.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
