//! End-to-end verification sweeps: every combinatorial computation is
//! cross-checked against the linear-algebra oracle, the counting and
//! lattice statements are re-derived, and the two counterexample
//! scripts are replayed. Shared by the test suite and the CLI.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::ExactStructure;
use crate::grid::ArGrid;
use crate::mar::{catalan, conflict_graph, enumerate_mar, mar_poset, verify_bijection};
use crate::oracle::ext::pushout;
use crate::oracle::rep::{hom_basis, hom_dim, kernel_rep, Morphism, Rep};
use crate::oracle::typea::{catalog, interval_rep};
use crate::oracle::{
    decompose, ext1_basis, ext1_dim, extension_realization, section5, BoundQuiver, Field, F101,
};
use crate::quiver::{Interval, ModuleSum, TypeAQuiver};

type F = F101;

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: usize,
    pub label: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {:2}. {}: {}", self.id, self.label, self.detail)
    }
}

fn done(id: usize, label: &'static str, failures: Vec<String>, detail: String) -> Criterion {
    if failures.is_empty() {
        Criterion { id, label, pass: true, detail }
    } else {
        Criterion { id, label, pass: false, detail: failures.join("; ") }
    }
}

fn orientations(n: usize) -> Vec<TypeAQuiver> {
    TypeAQuiver::all_orientations(n).expect("n >= 2")
}

fn sum_rep(bq: &BoundQuiver, parts: &[Interval]) -> Rep<F> {
    if parts.is_empty() {
        return Rep::zero(bq);
    }
    let reps: Vec<Rep<F>> = parts.iter().map(|&p| interval_rep(bq, p)).collect();
    let refs: Vec<&Rep<F>> = reps.iter().collect();
    Rep::direct_sum(bq, &refs).0
}

/// Krull-Schmidt decomposition of an oracle representation back into
/// interval labels; None when a summand falls outside the catalog.
fn decompose_to_intervals(
    bq: &BoundQuiver,
    rep: &Rep<F>,
    cat: &[(Interval, Rep<F>)],
) -> Option<ModuleSum> {
    let reps: Vec<Rep<F>> = cat.iter().map(|(_, r)| r.clone()).collect();
    let idx = decompose(bq, rep, &reps).ok()?;
    Some(ModuleSum::new(idx.into_iter().map(|i| cat[i].0).collect()))
}

/// Finds a surjection middle -> quot whose kernel is isomorphic to sub
/// and reports whether every generator sees the sequence as exact.
/// Fully independent of the combinatorial layer: only representations
/// and linear algebra.
fn step_admissible_oracle(
    bq: &BoundQuiver,
    cat: &[(Interval, Rep<F>)],
    gens: &[Rep<F>],
    sub: &ModuleSum,
    middle: &ModuleSum,
    quot: &ModuleSum,
) -> bool {
    if sub.is_empty() {
        return middle == quot;
    }
    let mid = sum_rep(bq, middle.summands());
    let qt = sum_rep(bq, quot.summands());
    if mid.total_dim() != qt.total_dim() + sum_rep(bq, sub.summands()).total_dim() {
        return false;
    }
    let basis = hom_basis(bq, &mid, &qt);
    if basis.is_empty() {
        return false;
    }
    // a generic combination of the hom basis realizes the cover; scan a
    // few geometric coefficient patterns to hit one
    for c in 1..=32i64 {
        let mut f = Morphism::zero(&mid, &qt);
        let mut coeff = F::one();
        for b in &basis {
            f = f.add(&b.scale(&coeff));
            coeff = coeff.mul(&F::from_int(c));
        }
        if !f.is_surjective() {
            continue;
        }
        let (ker, _) = kernel_rep(bq, &f, &mid);
        match decompose_to_intervals(bq, &ker, cat) {
            Some(parts) if &parts == sub => {
                return gens
                    .iter()
                    .all(|x| hom_dim(bq, x, &mid) == hom_dim(bq, x, &ker) + hom_dim(bq, x, &qt));
            }
            _ => continue,
        }
    }
    false
}

fn boundary_generators(grid: &ArGrid) -> Vec<Interval> {
    let mut gens = grid.orbit_row(1);
    for m in grid.orbit_row(grid.n()) {
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    gens
}

// -- criterion 1 ---------------------------------------------------------

pub fn check_hom_equivalence(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for n in 3..=max_n.min(7) {
        for q in orientations(n) {
            let grid = ArGrid::build(&q);
            let (bq, cat) = catalog::<F>(&q);
            for &(a, ref ra) in &cat {
                for &(b, ref rb) in &cat {
                    pairs += 1;
                    let comb = grid.hom_dim(a, b) as usize;
                    let or = hom_dim(&bq, ra, rb);
                    if comb != or {
                        failures.push(format!(
                            "n={n} Q={} hom({a},{b}): grid {comb} vs oracle {or}",
                            q.orientation_word()
                        ));
                    }
                }
            }
        }
    }
    done(1, "hom oracle equivalence", failures, format!("{pairs} ordered pairs agree"))
}

// -- criterion 2 ---------------------------------------------------------

pub fn check_ext_equivalence(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for n in 3..=max_n.min(6) {
        for q in orientations(n) {
            let grid = ArGrid::build(&q);
            let (bq, cat) = catalog::<F>(&q);
            for &(quot, ref rq) in &cat {
                for &(sub, ref rs) in &cat {
                    pairs += 1;
                    let comb = grid.ext_class(quot, sub);
                    let dim = ext1_dim(&bq, rq, rs).expect("path basis fits");
                    if dim != usize::from(comb.is_some()) {
                        failures.push(format!(
                            "n={n} Q={} ext({quot},{sub}): presence mismatch (oracle dim {dim})",
                            q.orientation_word()
                        ));
                        continue;
                    }
                    let Some(ses) = comb else { continue };
                    let cocycles = ext1_basis(&bq, rq, rs).expect("path basis fits");
                    let real = extension_realization(&bq, rq, rs, &cocycles[0])
                        .expect("realization");
                    if !real.verify(&bq) {
                        failures.push(format!("n={n} ext({quot},{sub}): realization not exact"));
                        continue;
                    }
                    match decompose_to_intervals(&bq, &real.mid, &cat) {
                        Some(mid) if mid == ses.middle => {}
                        other => failures.push(format!(
                            "n={n} Q={} ext({quot},{sub}): middle {:?} vs oracle {other:?}",
                            q.orientation_word(),
                            ses.middle
                        )),
                    }
                }
            }
        }
    }
    done(2, "ext oracle equivalence", failures, format!("{pairs} ordered pairs agree"))
}

// -- criterion 3 ---------------------------------------------------------

pub fn check_diamond_characterization(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for n in 3..=max_n.min(6) {
        for q in orientations(n) {
            let ex = ExactStructure::e_diamond(&q);
            let (bq, cat) = catalog::<F>(&q);
            for &(quot, ref rq) in &cat {
                for &(sub, ref rs) in &cat {
                    pairs += 1;
                    let adm = ex.admissible_class_dim(quot, sub);
                    let cocycles = ext1_basis(&bq, rq, rs).expect("path basis fits");
                    let two_summands = if cocycles.is_empty() {
                        false
                    } else {
                        let real = extension_realization(&bq, rq, rs, &cocycles[0])
                            .expect("realization");
                        decompose_to_intervals(&bq, &real.mid, &cat)
                            .map(|m| m.len() == 2)
                            .unwrap_or(false)
                    };
                    if (adm == 1) != two_summands {
                        failures.push(format!(
                            "n={n} Q={} pair ({quot},{sub}): admissible {adm}, oracle diamond {two_summands}",
                            q.orientation_word()
                        ));
                    }
                }
            }
        }
    }
    done(
        3,
        "diamond characterization",
        failures,
        format!("{pairs} pairs: admissible = split-or-diamond"),
    )
}

// -- criterion 4 ---------------------------------------------------------

pub fn check_zero_auslander(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut resolutions = 0usize;
    for n in 3..=max_n.min(7) {
        for q in orientations(n) {
            let ex = ExactStructure::e_diamond(&q);
            let report = ex.zero_auslander_report();
            if !(report.global_dim <= 1 && report.dominant_dim_ok && report.is_0_auslander) {
                failures.push(format!(
                    "n={n} Q={}: gl.dim {} dom ok {}",
                    q.orientation_word(),
                    report.global_dim,
                    report.dominant_dim_ok
                ));
                continue;
            }
            let grid = ex.grid();
            let (bq, cat) = catalog::<F>(&q);
            let gens: Vec<Rep<F>> = boundary_generators(grid)
                .into_iter()
                .map(|g| interval_rep(&bq, g))
                .collect();
            for m in q.indecomposables() {
                let (pd, res) = ex.pd_e(m);
                if pd > 1 {
                    failures.push(format!("n={n} Q={} pd({m}) = {pd}", q.orientation_word()));
                }
                for step in &res.steps {
                    resolutions += 1;
                    if !step_admissible_oracle(&bq, &cat, &gens, &step.sub, &step.middle, &step.quot)
                    {
                        failures.push(format!(
                            "n={n} Q={} resolution step at {m} not oracle-admissible",
                            q.orientation_word()
                        ));
                    }
                }
            }
            let (ok, witnesses) = ex.dominant_dim_check();
            if !ok {
                failures.push(format!("n={n} Q={}: dominant witness missing", q.orientation_word()));
            }
            for w in witnesses {
                let Some(ses) = w.embedding else { continue };
                resolutions += 1;
                let sub = ModuleSum::new(alloc::vec![ses.sub]);
                let quot = ModuleSum::new(alloc::vec![ses.quot]);
                if !step_admissible_oracle(&bq, &cat, &gens, &sub, &ses.middle, &quot) {
                    failures.push(format!(
                        "n={n} Q={} dominant witness for {} not oracle-admissible",
                        q.orientation_word(),
                        w.projective
                    ));
                }
            }
        }
    }
    done(
        4,
        "0-Auslander property",
        failures,
        format!("{resolutions} resolutions and witnesses re-verified"),
    )
}

// -- criterion 5 ---------------------------------------------------------

struct XorShift64(u64);

impl XorShift64 {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

fn predicates_coincide(
    ex: &ExactStructure,
    mar_set: &alloc::collections::BTreeSet<ModuleSum>,
    t: &ModuleSum,
) -> Result<bool, String> {
    let tilting = ex.is_tilting(t).map_err(|e| format!("{e:?}"))?;
    let maximal = ex.is_maximal_rigid(t).map_err(|e| format!("{e:?}"))?;
    let complete = ex.is_complete_rigid(t).map_err(|e| format!("{e:?}"))?;
    let mar = mar_set.contains(t);
    Ok(tilting == maximal && maximal == complete && complete == mar)
}

pub fn check_mar_tilting(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut modules = 0usize;
    // exhaustive over basic modules at small n
    for n in 3..=max_n.min(4) {
        for q in orientations(n) {
            let ex = ExactStructure::e_diamond(&q);
            let mar_set: alloc::collections::BTreeSet<ModuleSum> =
                enumerate_mar(&q).expect("n >= 3").into_iter().collect();
            let indec = q.indecomposables();
            for mask in 0u32..(1 << indec.len()) {
                modules += 1;
                let t = ModuleSum::new(
                    indec
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &m)| m)
                        .collect(),
                );
                match predicates_coincide(&ex, &mar_set, &t) {
                    Ok(true) => {}
                    Ok(false) => {
                        failures.push(format!("n={n} Q={} {t:?}", q.orientation_word()))
                    }
                    Err(e) => failures.push(format!("n={n}: {e}")),
                }
            }
        }
    }
    // all MAR modules plus random non-MAR rigid modules at n = 5, 6
    let mut rng = XorShift64(0x9e3779b97f4a7c15);
    for n in 5..=max_n.min(6) {
        for q in orientations(n) {
            let ex = ExactStructure::e_diamond(&q);
            let cg = conflict_graph(&q).expect("n >= 3");
            let mars = enumerate_mar(&q).expect("n >= 3");
            let mar_set: alloc::collections::BTreeSet<ModuleSum> = mars.iter().cloned().collect();
            for t in &mars {
                modules += 1;
                match predicates_coincide(&ex, &mar_set, t) {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!("n={n} Q={} MAR {t:?}", q.orientation_word())),
                    Err(e) => failures.push(format!("n={n}: {e}")),
                }
            }
            let indec = q.indecomposables();
            let per_orientation = 1000 / (1 << (n - 1)) + 1;
            let mut produced = 0;
            while produced < per_orientation {
                // random greedy rigid module, truncated below maximality
                let target = rng.below(2 * n - 1);
                let mut order: Vec<Interval> = indec.clone();
                for i in (1..order.len()).rev() {
                    order.swap(i, rng.below(i + 1));
                }
                let mut t = ModuleSum::empty();
                for m in order {
                    if t.len() >= target {
                        break;
                    }
                    let mut grown = t.clone();
                    grown.push(m);
                    if cg.is_independent(&grown) {
                        t = grown;
                    }
                }
                if mar_set.contains(&t) {
                    continue;
                }
                produced += 1;
                modules += 1;
                match predicates_coincide(&ex, &mar_set, &t) {
                    Ok(true) => {}
                    Ok(false) => {
                        failures.push(format!("n={n} Q={} rigid {t:?}", q.orientation_word()))
                    }
                    Err(e) => failures.push(format!("n={n}: {e}")),
                }
            }
        }
    }
    done(
        5,
        "MAR = tilting = maximal rigid = complete rigid",
        failures,
        format!("{modules} modules checked"),
    )
}

// -- criterion 6 ---------------------------------------------------------

pub fn check_counting(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut counted = 0usize;
    for n in 3..=max_n.min(7) {
        for q in orientations(n) {
            let grid = ArGrid::build(&q);
            let boundary = boundary_generators(&grid);
            let mars = enumerate_mar(&q).expect("n >= 3");
            if mars.len() as u64 != catalan(n - 1) {
                failures.push(format!(
                    "n={n} Q={}: {} MAR modules, expected {}",
                    q.orientation_word(),
                    mars.len(),
                    catalan(n - 1)
                ));
            }
            if boundary.len() != n + 1 {
                failures.push(format!("n={n}: boundary has {} modules", boundary.len()));
            }
            for t in &mars {
                counted += 1;
                if t.len() != 2 * n - 1 {
                    failures.push(format!("n={n}: MAR with {} summands", t.len()));
                }
                if !boundary.iter().all(|&b| t.contains(b)) {
                    failures.push(format!("n={n}: MAR missing a boundary module"));
                }
            }
        }
    }
    done(6, "Catalan count and summand structure", failures, format!("{counted} MAR modules"))
}

// -- criterion 7 ---------------------------------------------------------

pub fn check_bijection_lattice(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut posets = 0usize;
    for n in 3..=max_n.min(6) {
        for q in orientations(n) {
            posets += 1;
            match verify_bijection(&q) {
                Ok(Some(_)) => {}
                Ok(None) => failures.push(format!(
                    "n={n} Q={}: no flip-graph isomorphism",
                    q.orientation_word()
                )),
                Err(e) => failures.push(format!("n={n}: {e:?}")),
            }
            let poset = match mar_poset(&q) {
                Ok(p) => p,
                Err(e) => {
                    failures.push(format!("n={n}: {e:?}"));
                    continue;
                }
            };
            let projs: Vec<Interval> =
                (1..=n).map(|i| q.projective(i).expect("valid vertex")).collect();
            let injs: Vec<Interval> =
                (1..=n).map(|i| q.injective(i).expect("valid vertex")).collect();
            match poset.minimum() {
                Some(i) if projs.iter().all(|&p| poset.elements[i].contains(p)) => {}
                _ => failures.push(format!(
                    "n={n} Q={}: minimum missing a projective",
                    q.orientation_word()
                )),
            }
            match poset.maximum() {
                Some(i) if injs.iter().all(|&p| poset.elements[i].contains(p)) => {}
                _ => failures.push(format!(
                    "n={n} Q={}: maximum missing an injective",
                    q.orientation_word()
                )),
            }
            if !poset.is_lattice() {
                failures.push(format!("n={n} Q={}: not a lattice", q.orientation_word()));
            }
        }
    }
    done(7, "flip-graph bijection and lattice", failures, format!("{posets} posets verified"))
}

// -- criteria 8 and 9 ----------------------------------------------------

pub fn check_d4() -> Criterion {
    let report = section5::verify_d4();
    let detail: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.label, c.detail))
        .collect();
    done(8, "four-subspace counterexample", detail, format!("{} checks", report.checks.len()))
}

pub fn check_gentle() -> Criterion {
    let report = section5::verify_gentle();
    let detail: Vec<String> = report
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.label, c.detail))
        .collect();
    done(9, "gentle-algebra counterexample", detail, format!("{} checks", report.checks.len()))
}

// -- criterion 10 --------------------------------------------------------

/// The class of a sequence 0 -> a -> e -> c -> 0 (given by the rep of e
/// and the interval labels of a and c) is admissible when it is split or
/// every generator sees it as exact.
fn class_admissible(
    bq: &BoundQuiver,
    cat: &[(Interval, Rep<F>)],
    gens: &[Rep<F>],
    a: &ModuleSum,
    e: &Rep<F>,
    c: &ModuleSum,
) -> bool {
    let Some(parts) = decompose_to_intervals(bq, e, cat) else { return false };
    let mut split = a.clone();
    for &s in c.summands() {
        split.push(s);
    }
    if parts == split {
        return true;
    }
    let ra = sum_rep(bq, a.summands());
    let rc = sum_rep(bq, c.summands());
    gens.iter()
        .all(|x| hom_dim(bq, x, e) == hom_dim(bq, x, &ra) + hom_dim(bq, x, &rc))
}

pub fn check_exact_axioms(max_n: usize) -> Criterion {
    let mut failures = Vec::new();
    let mut closures = 0usize;
    for n in 3..=max_n.min(5) {
        for q in orientations(n) {
            let ex = ExactStructure::e_diamond(&q);
            let (bq, cat) = catalog::<F>(&q);
            let gens: Vec<Rep<F>> = boundary_generators(ex.grid())
                .into_iter()
                .map(|g| interval_rep(&bq, g))
                .collect();
            for &(quot, ref rq) in &cat {
                for &(sub, ref rs) in &cat {
                    if ex.admissible_class_dim(quot, sub) != 1 {
                        continue;
                    }
                    let cocycle = &ext1_basis(&bq, rq, rs).expect("path basis fits")[0];
                    let ses =
                        extension_realization(&bq, rq, rs, cocycle).expect("realization");
                    debug_assert!(ses.verify(&bq));
                    for &(x, ref rx) in &cat {
                        // pullback along every f: X -> quot
                        for f in hom_basis(&bq, rx, rq) {
                            closures += 1;
                            let (big, incls, projs) = Rep::direct_sum(&bq, &[&ses.mid, rx]);
                            let _ = incls;
                            let to_c = ses
                                .proj
                                .compose(&projs[0])
                                .add(&f.compose(&projs[1]).scale(&F::one().neg()));
                            let (pb, _) = kernel_rep(&bq, &to_c, &big);
                            let a = ModuleSum::new(alloc::vec![sub]);
                            let c = ModuleSum::new(alloc::vec![x]);
                            if !class_admissible(&bq, &cat, &gens, &a, &pb, &c) {
                                failures.push(format!(
                                    "n={n} Q={}: pullback of ({quot},{sub}) along {x} escapes",
                                    q.orientation_word()
                                ));
                            }
                        }
                        // pushout along every g: sub -> X
                        for g in hom_basis(&bq, rs, rx) {
                            closures += 1;
                            let (po, _, _, _, _) =
                                pushout(&bq, &ses.incl, &g, rs, &ses.mid, rx);
                            let a = ModuleSum::new(alloc::vec![x]);
                            let c = ModuleSum::new(alloc::vec![quot]);
                            if !class_admissible(&bq, &cat, &gens, &a, &po, &c) {
                                failures.push(format!(
                                    "n={n} Q={}: pushout of ({quot},{sub}) along {x} escapes",
                                    q.orientation_word()
                                ));
                            }
                        }
                    }
                }
            }
            // split classes are admissible
            for &(a, _) in &cat {
                for &(c, _) in &cat {
                    let e = sum_rep(&bq, &[a, c]);
                    if !class_admissible(
                        &bq,
                        &cat,
                        &gens,
                        &ModuleSum::new(alloc::vec![a]),
                        &e,
                        &ModuleSum::new(alloc::vec![c]),
                    ) {
                        failures.push(format!("n={n}: split class ({a},{c}) rejected"));
                    }
                }
            }
        }
    }
    // composition closure of admissible monos between indecomposables
    for n in 3..=max_n.min(4) {
        for q in orientations(n) {
            let ex = ExactStructure::e_diamond(&q);
            let (bq, cat) = catalog::<F>(&q);
            let gens: Vec<Rep<F>> = boundary_generators(ex.grid())
                .into_iter()
                .map(|g| interval_rep(&bq, g))
                .collect();
            // admissible monos a -> b with indecomposable ends: injective
            // hom basis element whose cokernel class every generator sees
            let mut monos: Vec<(usize, usize, Morphism<F>)> = Vec::new();
            for (ai, &(_, ref ra)) in cat.iter().enumerate() {
                for (bi, &(_, ref rb)) in cat.iter().enumerate() {
                    for f in hom_basis(&bq, ra, rb) {
                        if !f.is_injective() {
                            continue;
                        }
                        let (coker, _, _) = crate::oracle::cokernel_rep(&bq, &f, ra, rb);
                        let Some(cparts) = decompose_to_intervals(&bq, &coker, &cat) else {
                            continue;
                        };
                        let a = ModuleSum::new(alloc::vec![cat[ai].0]);
                        if class_admissible(&bq, &cat, &gens, &a, rb, &cparts) {
                            monos.push((ai, bi, f));
                        }
                    }
                }
            }
            for &(ai, bi, ref f) in &monos {
                for &(bi2, ci, ref g) in &monos {
                    if bi != bi2 {
                        continue;
                    }
                    closures += 1;
                    let h = g.compose(f);
                    if !h.is_injective() {
                        failures.push(format!("n={n}: composite not injective"));
                        continue;
                    }
                    let (coker, _, _) =
                        crate::oracle::cokernel_rep(&bq, &h, &cat[ai].1, &cat[ci].1);
                    let Some(cparts) = decompose_to_intervals(&bq, &coker, &cat) else {
                        failures.push(format!("n={n}: composite cokernel undecomposable"));
                        continue;
                    };
                    let a = ModuleSum::new(alloc::vec![cat[ai].0]);
                    if !class_admissible(&bq, &cat, &gens, &a, &cat[ci].1, &cparts) {
                        failures.push(format!(
                            "n={n} Q={}: composite of admissible monos {} -> {} -> {} escapes",
                            q.orientation_word(),
                            cat[ai].0,
                            cat[bi].0,
                            cat[ci].0
                        ));
                    }
                }
            }
        }
    }
    done(10, "exact-structure axiom closure", failures, format!("{closures} closures checked"))
}

/// The full acceptance sweep; `max_n` caps every range (the shipped
/// criteria use their stated ranges when `max_n >= 7`).
pub fn run_all(max_n: usize) -> Vec<Criterion> {
    alloc::vec![
        check_hom_equivalence(max_n),
        check_ext_equivalence(max_n),
        check_diamond_characterization(max_n),
        check_zero_auslander(max_n),
        check_mar_tilting(max_n),
        check_counting(max_n),
        check_bijection_lattice(max_n),
        check_d4(),
        check_gentle(),
        check_exact_axioms(max_n),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        for c in run_all(3) {
            assert!(c.pass, "{c}");
        }
    }

    #[test]
    fn rng_is_deterministic() {
        let mut a = XorShift64(7);
        let mut b = XorShift64(7);
        for _ in 0..100 {
            assert_eq!(a.next(), b.next());
        }
    }
}
