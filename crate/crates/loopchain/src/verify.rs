//! Invariant suites with pass/fail reports, shared by the command line and
//! the acceptance run.

use serde::Serialize;

use crate::algebra::{koszul_sign, sign, Cell, FreeElement, Graded, Ring};
use crate::cobar::Cobar;
use crate::cubical::{cell_word, serre_cell, word_cell, StandardCube, I};
use crate::einfty::{cup_i_defect, Cub, Simp};
use crate::loopspace::{
    certify_cartan_serre, certify_phi, msl_naturality_defect, zigzag_report, CobarAction, CubicalCobar, KanLoopGroup,
};
use crate::prop::{
    basis_words, evaluate, evaluate_element, evaluate_pair, hom_boundary, hopf_coproduct, hopf_counit,
    hopf_coproduct_element, monoidality_sides, msl_generator, pair_boundary, MHooks, PropGraph, PsiTable,
    SimplexHooks, Standard, TensorHooks,
};
use crate::simplicial::{aw_cell, models, StandardSimplex};

pub const SUITES: &[&str] = &[
    "aw-coalgebra",
    "serre-coalgebra",
    "join-signs",
    "prop-relations",
    "hopf",
    "monoidality",
    "phi",
    "kan",
    "cartan-serre",
    "cup-i",
];

const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Failures beyond the listed ones.
    pub unlisted: usize,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    pub fn fail(&mut self, what: String) {
        if self.failures.len() < MAX_LISTED {
            self.failures.push(what);
        } else {
            self.unlisted += 1;
        }
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        for f in other.failures {
            self.fail(f);
        }
        self.unlisted += other.unlisted;
        self.notes.extend(other.notes);
    }
}

/// Runs a suite by name; `None` for unknown names.
pub fn run_suite(name: &str) -> Option<SuiteReport> {
    Some(match name {
        "aw-coalgebra" => aw_coalgebra(5),
        "serre-coalgebra" => {
            let mut r = serre_coalgebra(5);
            r.absorb(serre_equivariance(4));
            r.suite = name.into();
            r
        }
        "join-signs" => join_signs(3).0,
        "prop-relations" => prop_relations(4),
        "hopf" => {
            let graphs: Vec<PropGraph> = PropGraph::enumerate(2, 4, 3, 2)
                .into_iter()
                .filter(|g| g.degree() >= 1 && g.vertices().len() >= 2)
                .collect();
            let step = (graphs.len() / 20).max(1);
            let sample: Vec<PropGraph> = graphs.into_iter().step_by(step).take(20).collect();
            hopf_suite(&sample)
        }
        "monoidality" => monoidality(5),
        "phi" => phi_suite(5, 4),
        "kan" => kan_suite(3),
        "cartan-serre" => cartan_serre_suite(),
        "cup-i" => cup_i_suite(4, 4),
        _ => return None,
    })
}

fn iterate<F: Fn(&Cell) -> FreeElement<(Cell, Cell)>>(d: F, x: &FreeElement<(Cell, Cell)>, left: bool) -> FreeElement<Vec<Cell>> {
    let mut out = FreeElement::zero();
    for ((a, b), c) in x.iter() {
        if left {
            for ((a1, a2), e) in d(a).iter() {
                out.add_term(vec![*a1, *a2, *b], c * e);
            }
        } else {
            for ((b1, b2), e) in d(b).iter() {
                out.add_term(vec![*a, *b1, *b2], c * e);
            }
        }
    }
    out
}

fn counit_sides(d: &FreeElement<(Cell, Cell)>) -> (FreeElement<Cell>, FreeElement<Cell>) {
    let mut l = FreeElement::zero();
    let mut r = FreeElement::zero();
    for ((a, b), c) in d.iter() {
        if a.dim == 0 {
            l.add_term(*b, c);
        }
        if b.dim == 0 {
            r.add_term(*a, c);
        }
    }
    (l, r)
}

fn coalgebra_checks<F: Fn(&Cell) -> FreeElement<(Cell, Cell)>>(r: &mut SuiteReport, label: &str, cells: &[Cell], d: F) {
    for c in cells {
        let dc = d(c);
        let (l, rr) = counit_sides(&dc);
        let id = FreeElement::basis(*c);
        r.check(l == id && rr == id, || format!("{label}: counit fails on {c:?}"));
        r.check(iterate(&d, &dc, true) == iterate(&d, &dc, false), || format!("{label}: coassociativity fails on {c:?}"));
    }
}

/// Counit and coassociativity of the Alexander–Whitney diagonal on Δⁿ.
pub fn aw_coalgebra(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("aw-coalgebra");
    for n in 0..=max_n {
        let x = StandardSimplex::new(n);
        coalgebra_checks(&mut r, &format!("Δ^{n}"), &x.all_cells(), |c| aw_cell(&x, *c));
    }
    r
}

/// Counit and coassociativity of the Serre diagonal on □ⁿ.
pub fn serre_coalgebra(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("serre-coalgebra");
    for n in 0..=max_n {
        let y = StandardCube::new(n);
        coalgebra_checks(&mut r, &format!("□^{n}"), &y.all_cells(), |c| serre_cell(&y, c));
    }
    r
}

/// σ acting on a cube cell by moving coordinate i to σ(i), with the Koszul
/// sign of the interval factors.
fn permute_cube_cell(c: Cell, n: usize, perm: &[usize]) -> (Cell, i64) {
    let w = cell_word(c, n);
    let mut out = vec![0u8; n];
    for (i, &d) in w.iter().enumerate() {
        out[perm[i]] = d;
    }
    // factors listed in target order, each tagged with its source position
    let mut src = vec![0usize; n];
    for (i, &t) in perm.iter().enumerate() {
        src[t] = i;
    }
    let degrees: Vec<i64> = w.iter().map(|&d| i64::from(d == I)).collect();
    (word_cell(&out), koszul_sign(&degrees, &src))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Δ(σ·c) = (σ⊗σ)Δ(c) for every coordinate permutation σ of □ᵈ.
pub fn serre_equivariance(max_d: usize) -> SuiteReport {
    let mut r = SuiteReport::new("serre-equivariance");
    for n in 0..=max_d {
        let y = StandardCube::new(n);
        for perm in permutations(n) {
            for c in y.all_cells() {
                let (pc, s) = permute_cube_cell(c, n, &perm);
                let lhs = serre_cell(&y, &pc).scale(s);
                let rhs = serre_cell(&y, &c).map_keys(|(a, b)| {
                    let (pa, sa) = permute_cube_cell(*a, n, &perm);
                    let (pb, sb) = permute_cube_cell(*b, n, &perm);
                    Some(((pa, pb), sa * sb))
                });
                r.check(lhs == rhs, || format!("□^{n}: σ={perm:?} on {c:?}"));
            }
        }
    }
    r
}

/// A candidate correction pair for ∂(a∗b) + ∂a∗b + (−1)^{|a|}a∗∂b:
/// `left·ε(a)b + right·ε(b)a`, each coefficient possibly twisted by the
/// parity of the surviving factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JoinConvention {
    pub left: i64,
    pub left_twisted: bool,
    pub right: i64,
    pub right_twisted: bool,
}

impl JoinConvention {
    pub fn all() -> Vec<JoinConvention> {
        let mut out = Vec::new();
        for left in [1, -1] {
            for left_twisted in [false, true] {
                for right in [1, -1] {
                    for right_twisted in [false, true] {
                        out.push(JoinConvention { left, left_twisted, right, right_twisted });
                    }
                }
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        let term = |c: i64, tw: bool, eps: &str, other: &str, deg: &str| {
            let s = if c > 0 { "+" } else { "−" };
            if tw {
                format!("{s}(−1)^|{deg}| {eps}{other}")
            } else {
                format!("{s}{eps}{other}")
            }
        };
        format!(
            "∂(a∗b) = −∂a∗b − (−1)^|a| a∗∂b {} {}",
            term(self.left, self.left_twisted, "ε(a)", "b", "b"),
            term(self.right, self.right_twisted, "ε(b)", "a", "a")
        )
    }

    fn holds<H: MHooks<K = Cell>>(&self, h: &H, a: &Cell, b: &Cell) -> bool {
        let mut lhs = FreeElement::zero();
        for (ab, c) in h.join(a, b).iter() {
            lhs.add_scaled(&h.boundary(ab), c);
        }
        for (da, c) in h.boundary(a).iter() {
            lhs.add_scaled(&h.join(da, b), c);
        }
        for (db, c) in h.boundary(b).iter() {
            lhs.add_scaled(&h.join(a, db), c * sign(a.degree()));
        }
        let mut rhs = FreeElement::zero();
        let tw = |t: bool, d: i64| if t { sign(d) } else { 1 };
        rhs.add_term(*b, self.left * tw(self.left_twisted, b.degree()) * h.counit(a));
        rhs.add_term(*a, self.right * tw(self.right_twisted, a.degree()) * h.counit(b));
        lhs == rhs
    }
}

/// Brute force over all candidate conventions on Δⁿ and □ⁿ, n ≤ max_n.
/// Passes when exactly one convention survives.
pub fn join_signs(max_n: usize) -> (SuiteReport, Vec<JoinConvention>) {
    let mut r = SuiteReport::new("join-signs");
    let mut survivors = Vec::new();
    for conv in JoinConvention::all() {
        let mut ok = true;
        'models: for n in 0..=max_n {
            for h in [Standard::Simplex(n), Standard::Cube(n)] {
                let basis = h.basis();
                for a in &basis {
                    for b in &basis {
                        r.checks += 1;
                        if !conv.holds(&h, a, b) {
                            ok = false;
                            break 'models;
                        }
                    }
                }
            }
        }
        if ok {
            survivors.push(conv);
        }
    }
    for s in &survivors {
        r.notes.push(format!("passing convention: {}", s.describe()));
    }
    if survivors.len() != 1 {
        r.fail(format!("{} of {} conventions pass", survivors.len(), JoinConvention::all().len()));
    }
    (r, survivors)
}

fn relation_pairs() -> Vec<(&'static str, PropGraph, PropGraph)> {
    let id = PropGraph::identity(1);
    let d = PropGraph::coproduct();
    let e = PropGraph::counit();
    let compose = |a: &PropGraph, b: &PropGraph| PropGraph::compose(a, b).expect("arities match");
    vec![
        ("(id⊗ε)Δ = id", compose(&PropGraph::disjoint_union(&id, &e), &d), id.clone()),
        ("(ε⊗id)Δ = id", compose(&PropGraph::disjoint_union(&e, &id), &d), id.clone()),
        (
            "(Δ⊗id)Δ = (id⊗Δ)Δ",
            compose(&PropGraph::disjoint_union(&d, &id), &d),
            compose(&PropGraph::disjoint_union(&id, &d), &d),
        ),
    ]
}

/// The product-counit graph ε∘∗.
pub fn product_counit() -> PropGraph {
    PropGraph::compose(&PropGraph::counit(), &PropGraph::join()).expect("arities match")
}

fn relations_on<H: MHooks<K = Cell>>(r: &mut SuiteReport, label: &str, h: &H) {
    for (name, a, b) in relation_pairs() {
        for w in basis_words(h, 1) {
            let x = FreeElement::basis(w);
            let ok = evaluate(&a, h, &x).ok() == evaluate(&b, h, &x).ok();
            r.check(ok, || format!("{label}: {name} on {x:?}"));
        }
    }
    let pc = product_counit();
    let j = PropGraph::join();
    let dj = j.boundary();
    for w in basis_words(h, 2) {
        let x = FreeElement::basis(w);
        let zero = evaluate(&pc, h, &x).map(|v| v.is_zero()).unwrap_or(false);
        r.check(zero, || format!("{label}: ε∘∗ ≠ 0 on {x:?}"));
        let ok = evaluate_element(&dj, h, &x).ok() == hom_boundary(&j, h, &x).ok();
        r.check(ok, || format!("{label}: ∂(∗) relation fails on {x:?}"));
    }
}

/// The defining relations of M and the boundary of ∗ on Δⁿ, □ⁿ.
pub fn prop_relations(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("prop-relations");
    for n in 0..=max_n {
        relations_on(&mut r, &format!("Δ^{n}"), &Standard::Simplex(n));
        relations_on(&mut r, &format!("□^{n}"), &Standard::Cube(n));
    }
    r
}

fn hopf_models() -> (Standard, Standard) {
    (Standard::Simplex(1), Standard::Cube(1))
}

/// ∂Δ_M(Γ) = Δ_M(∂Γ) evaluated on a pair of models.
pub fn hopf_chain_map(r: &mut SuiteReport, g: &PropGraph) {
    let (ha, hb) = hopf_models();
    let lhs = pair_boundary(&hopf_coproduct(g));
    let rhs = hopf_coproduct_element(&g.boundary());
    for x in basis_words(&ha, g.inputs()) {
        for y in basis_words(&hb, g.inputs()) {
            let ok = evaluate_pair(&lhs, &ha, &hb, &x, &y).ok() == evaluate_pair(&rhs, &ha, &hb, &x, &y).ok();
            r.check(ok, || format!("Δ_M not a chain map at {} on {x:?}⊗{y:?}", g.to_sexpr()));
        }
    }
}

/// Δ_M(Γ) and Δ_M(Γ reordered) act identically.
pub fn hopf_order_independence(r: &mut SuiteReport, g: &PropGraph, order: &[usize]) {
    let (ha, hb) = hopf_models();
    let Ok(h) = g.reorder(order) else {
        r.fail(format!("cannot reorder {}", g.to_sexpr()));
        return;
    };
    let (dg, dh) = (hopf_coproduct(g), hopf_coproduct(&h));
    for x in basis_words(&ha, g.inputs()) {
        for y in basis_words(&hb, g.inputs()) {
            let ok = evaluate_pair(&dg, &ha, &hb, &x, &y).ok() == evaluate_pair(&dh, &ha, &hb, &x, &y).ok();
            r.check(ok, || format!("Δ_M depends on vertex order {order:?} of {}", g.to_sexpr()));
        }
    }
}

/// The Hopf suite: chain-map squares on generators and composites of
/// degree ≤ 2, counitality, Δ_M(ε∘∗) acting as zero, and order independence
/// on the given sample (each graph tested with its reversed order).
pub fn hopf_suite(sample: &[PropGraph]) -> SuiteReport {
    let mut r = SuiteReport::new("hopf");
    let mut graphs = vec![PropGraph::counit(), PropGraph::coproduct(), PropGraph::join()];
    graphs.extend(PropGraph::enumerate(2, 3, 2, 2).into_iter().filter(|g| g.degree() <= 2));
    for g in &graphs {
        hopf_chain_map(&mut r, g);
        let dg = hopf_coproduct(g);
        let left = FreeElement::from_terms(dg.iter().map(|((a, b), c)| (b.clone(), c * hopf_counit(a))));
        let right = FreeElement::from_terms(dg.iter().map(|((a, b), c)| (a.clone(), c * hopf_counit(b))));
        let id = FreeElement::basis(g.clone());
        r.check(left == id && right == id, || format!("Δ_M not counital on {}", g.to_sexpr()));
    }
    let (ha, hb) = hopf_models();
    let dpc = hopf_coproduct(&product_counit());
    for x in basis_words(&ha, 2) {
        for y in basis_words(&hb, 2) {
            let z = evaluate_pair(&dpc, &ha, &hb, &x, &y).map(|v| v.is_zero()).unwrap_or(false);
            r.check(z, || format!("Δ_M(ε∘∗) ≠ 0 on {x:?}⊗{y:?}"));
        }
    }
    for g in sample {
        let order: Vec<usize> = (0..g.vertices().len()).rev().collect();
        hopf_order_independence(&mut r, g, &order);
    }
    r.notes.push(format!("{} graphs for chain map and counit, {} for vertex order", graphs.len(), sample.len()));
    r
}

/// Γ acting on Δᵖ⊗Δ^q equals Δ_M(Γ) acting factorwise, for each generator
/// and p+q ≤ max_total.
pub fn monoidality(max_total: usize) -> SuiteReport {
    let mut r = SuiteReport::new("monoidality");
    let gens = [PropGraph::counit(), PropGraph::coproduct(), PropGraph::join()];
    for total in 0..=max_total {
        for p in 0..=total {
            let q = total - p;
            let (a, b) = (SimplexHooks(StandardSimplex::new(p)), SimplexHooks(StandardSimplex::new(q)));
            let th = TensorHooks(&a, &b);
            for g in &gens {
                let mut count = 0usize;
                for w in basis_words(&th, g.inputs()) {
                    count += 1;
                    let ok = match monoidality_sides(g, &a, &b, &w) {
                        Ok((direct, via)) => direct == via,
                        Err(_) => false,
                    };
                    r.check(ok, || format!("Δ^{p}⊗Δ^{q}: {} on {w:?}", g.to_sexpr()));
                }
                if p == 1 && q == 1 && g.inputs() == 2 {
                    r.notes.push(format!("p=q=1 join inputs checked: {count}"));
                }
            }
        }
    }
    r
}

/// φ certificates for S¹, S², RP²; the cutoff bounds word length where
/// 1-cells make it necessary.
pub fn phi_suite(max_degree: usize, cutoff: usize) -> SuiteReport {
    let mut r = SuiteReport::new("phi");
    for (name, x, cut) in [
        ("S¹", models::circle(), Some(cutoff)),
        ("S²", models::sphere(2), None),
        ("RP²", models::rp2(), Some(cutoff)),
    ] {
        match certify_phi(&x, max_degree, cut) {
            Ok(c) => {
                r.checks += c.cells + c.pairs;
                r.check(c.passed(), || format!("{name}: {:?}", c.failures));
                r.notes.push(format!(
                    "{name}: degrees ≤ {max_degree}, cutoff {:?}, {} cells, {} products",
                    c.cutoff, c.cells, c.pairs
                ));
            }
            Err(e) => r.fail(format!("{name}: {e}")),
        }
    }
    r
}

/// Simplicial identities, the s₀ relation and π₀ for S¹, S², RP².
pub fn kan_suite(max_degree: usize) -> SuiteReport {
    let mut r = SuiteReport::new("kan");
    for (name, x) in [("S¹", models::circle()), ("S²", models::sphere(2)), ("RP²", models::rp2())] {
        let g = KanLoopGroup::new(x);
        let ids = g.check_identities(max_degree);
        r.check(ids.is_ok(), || format!("{name}: {}", ids.clone().unwrap_err()));
        let s0 = g.check_s0_relation(max_degree);
        r.check(s0.is_ok(), || format!("{name}: {}", s0.clone().unwrap_err()));
        let p = crate::loopspace::pi0_report(&g);
        r.notes.push(format!("π₀ G{name}: {}, abelianization rank {} torsion {:?}", p.group, p.abelian_rank, p.abelian_torsion));
        match name {
            "S¹" => r.check(p.abelian_rank == 1 && p.abelian_torsion.is_empty(), || format!("π₀ GS¹ = {}", p.group)),
            "RP²" => r.check(p.abelian_rank == 0 && p.abelian_torsion == vec![2], || format!("π₀ G RP² = {}", p.group)),
            _ => {}
        }
    }
    r
}

/// Cartan–Serre certificates on Δⁿ (n ≤ 3), arity-2 naturality (n ≤ 2)
/// and the zigzag for S² in range ≤ 3.
pub fn cartan_serre_suite() -> SuiteReport {
    let mut r = SuiteReport::new("cartan-serre");
    for n in 0..=3 {
        let c = certify_cartan_serre(&models::simplex(n), n);
        r.checks += c.cells;
        r.check(c.chain_map && c.coalgebra_morphism, || format!("Δ^{n}: {:?}", c.failures));
    }
    let assignments = [vec![vec![0], vec![1]], vec![vec![0, 2], vec![1]], vec![vec![0, 1], vec![2]], vec![vec![0], vec![1, 2]]];
    for n in 0..=2 {
        let x = models::simplex(n);
        for a in &assignments {
            let g = match msl_generator(a) {
                Ok(g) => g,
                Err(e) => {
                    r.fail(format!("{a:?}: {e}"));
                    continue;
                }
            };
            for d in 0..=n {
                for c in crate::simplicial::Simplicial::cells(&x, d) {
                    let ok = msl_naturality_defect(&x, &g, c).map(|v| v.is_zero()).unwrap_or(false);
                    r.check(ok, || format!("M_sl {a:?} not natural on Δ^{n} cell {c:?}"));
                }
            }
        }
    }
    let y = CubicalCobar::new(models::sphere(2), None);
    match zigzag_report(&y, 3, Ring::Integers) {
        Ok(z) => {
            r.check(z.passed(), || format!("zigzag for S²: {z:?}"));
            r.notes.push(format!("zigzag S² range {}: homology agrees = {}", z.range, z.homology_agrees));
        }
        Err(e) => r.fail(format!("zigzag for S²: {e}")),
    }
    r
}

/// ∂Δ_i = (1+T)Δ_{i−1} mod 2 on Δⁿ, □ⁿ (n ≤ max_n) and on cobar(S²) in
/// degrees ≤ max_degree.
pub fn cup_i_suite(max_n: usize, max_degree: usize) -> SuiteReport {
    let mut r = SuiteReport::new("cup-i");
    let max_i = max_n;
    let st = PsiTable::new(2, Standard::Simplex(0), max_n, max_i);
    let ct = PsiTable::new(2, Standard::Cube(0), max_n.max(max_degree), max_i);
    for n in 0..=max_n {
        let x = Simp(StandardSimplex::new(n));
        let y = Cub(StandardCube::new(n));
        for i in 0..=max_i {
            let ok = cup_i_defect(&x, &st, i, &x.0.top()).map(|v| v.is_zero()).unwrap_or(false);
            r.check(ok, || format!("Δ^{n}: cup-{i} relation fails"));
            let ok = cup_i_defect(&y, &ct, i, &y.0.top()).map(|v| v.is_zero()).unwrap_or(false);
            r.check(ok, || format!("□^{n}: cup-{i} relation fails"));
        }
    }
    match CobarAction::new(models::sphere(2)) {
        Ok(a) => {
            for n in 0..=max_degree {
                let words = a.cobar().words(n, None).unwrap_or_default();
                for w in words {
                    for i in 0..=max_i.min(max_degree) {
                        let ok = a.cup_i_defect(&ct, i, &w).map(|v| v.is_zero()).unwrap_or(false);
                        r.check(ok, || format!("cobar(S²): cup-{i} relation fails on {w:?}"));
                    }
                }
            }
        }
        Err(e) => r.fail(format!("cobar(S²): {e}")),
    }
    r
}

/// d² = 0 on the given words and the derivation law on the given pairs.
pub fn cobar_fuzz_checks<S: crate::simplicial::Simplicial>(
    r: &mut SuiteReport,
    cobar: &Cobar<S>,
    words: &[crate::cobar::CobarWord],
    pairs: &[(crate::cobar::CobarWord, crate::cobar::CobarWord)],
) {
    use crate::cobar::product;
    for w in words {
        let dd = cobar.differential_of(&cobar.differential(w));
        r.check(dd.is_zero(), || format!("d² ≠ 0 on {w:?}"));
    }
    for (u, v) in pairs {
        let (eu, ev) = (FreeElement::basis(u.clone()), FreeElement::basis(v.clone()));
        let lhs = cobar.differential_of(&product(&eu, &ev));
        let mut rhs = product(&cobar.differential(u), &ev);
        rhs.add_scaled(&product(&eu, &cobar.differential(v)), sign(u.degree()));
        r.check(lhs == rhs, || format!("Leibniz fails on {u:?}·{v:?}"));
    }
}

/// The same two laws on the extended cobar construction.
pub fn extended_fuzz_checks<S: crate::simplicial::Simplicial>(
    r: &mut SuiteReport,
    ext: &crate::cobar::ExtendedCobar<S>,
    words: &[crate::cobar::LocalizedWord],
    pairs: &[(crate::cobar::LocalizedWord, crate::cobar::LocalizedWord)],
) {
    use crate::cobar::mul_elements;
    for w in words {
        let dd = ext.differential_of(&ext.differential(w));
        r.check(dd.is_zero(), || format!("d² ≠ 0 on {w:?}"));
    }
    for (u, v) in pairs {
        let (eu, ev) = (FreeElement::basis(u.clone()), FreeElement::basis(v.clone()));
        let lhs = ext.differential_of(&mul_elements(&eu, &ev));
        let mut rhs = mul_elements(&ext.differential(u), &ev);
        rhs.add_scaled(&mul_elements(&eu, &ext.differential(v)), sign(u.degree()));
        r.check(lhs == rhs, || format!("Leibniz fails on {u:?}·{v:?}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_of_cube_cells() {
        // I⊗I swapped picks up a sign
        let c = word_cell(&[I, I]);
        assert_eq!(permute_cube_cell(c, 2, &[1, 0]), (c, -1));
        let c = word_cell(&[I, 0]);
        assert_eq!(permute_cube_cell(c, 2, &[1, 0]), (word_cell(&[0, I]), 1));
    }

    #[test]
    fn join_oracle_is_decisive() {
        let (r, survivors) = join_signs(2);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(survivors.len(), 1);
    }

    #[test]
    fn small_suites_pass() {
        for r in [aw_coalgebra(3), serre_coalgebra(3), serre_equivariance(3), prop_relations(2), monoidality(3)] {
            assert!(r.passed(), "{}: {:?}", r.suite, r.failures);
        }
    }
}
