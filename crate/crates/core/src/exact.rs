//! Relative exact structures F_X on type A module categories: the
//! diamond structure, admissibility, relative homological algebra, and
//! the tilting predicates.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::grid::{ArGrid, RayDir, SesClass, SesKind};
use crate::oracle::field::{Field, Rat};
use crate::oracle::ext::{ext1_basis, extension_realization};
use crate::oracle::rep::{decompose, hom_basis, hom_dim as rep_hom_dim, kernel_rep, Morphism, Rep};
use crate::oracle::typea::{bound_quiver, interval_rep};
use crate::quiver::{ArrowDir, Interval, ModuleSum, TypeAQuiver};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// is_admissible was asked about a pair with vanishing extension group.
    NoExtension { quot: Interval, sub: Interval },
    /// The module sum repeats a summand.
    NotBasic,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::NoExtension { quot, sub } => {
                write!(f, "Ext^1({quot}, {sub}) = 0: no class to test")
            }
            ExactError::NotBasic => write!(f, "module is not basic"),
        }
    }
}

/// The relative structure F_X: a short exact sequence is admissible when
/// Hom(X, -) stays exact on it for every generator X.
#[derive(Debug, Clone)]
pub struct ExactStructure {
    quiver: TypeAQuiver,
    grid: ArGrid,
    generators: BTreeSet<Interval>,
}

/// One admissible step 0 -> sub -> middle -> quot -> 0, with possibly
/// decomposable entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResStep {
    pub sub: ModuleSum,
    pub middle: ModuleSum,
    pub quot: ModuleSum,
}

/// A relative projective resolution; `length` counts the steps, so a
/// relatively projective target has length 0.
#[derive(Debug, Clone)]
pub struct ResolutionE {
    pub target: Interval,
    pub steps: Vec<ResStep>,
    pub length: usize,
}

#[derive(Debug, Clone)]
pub struct AuslanderReport {
    pub relative_projectives: Vec<Interval>,
    pub relative_injectives: Vec<Interval>,
    pub relative_proj_injectives: Vec<Interval>,
    pub global_dim: usize,
    pub dominant_dim_ok: bool,
    pub is_0_auslander: bool,
}

/// A dominant-dimension witness for one relative projective: `None`
/// middle means the trivial witness (P is already projective-injective).
#[derive(Debug, Clone)]
pub struct DominantWitness {
    pub projective: Interval,
    pub embedding: Option<SesClass>,
}

impl ExactStructure {
    pub fn f_x(quiver: &TypeAQuiver, generators: impl IntoIterator<Item = Interval>) -> Self {
        ExactStructure {
            quiver: quiver.clone(),
            grid: ArGrid::build(quiver),
            generators: generators.into_iter().collect(),
        }
    }

    /// The diamond structure: generated by the two boundary tau-orbits.
    pub fn e_diamond(quiver: &TypeAQuiver) -> Self {
        let grid = ArGrid::build(quiver);
        let mut generators: BTreeSet<Interval> = grid.orbit_row(1).into_iter().collect();
        generators.extend(grid.orbit_row(quiver.n()));
        ExactStructure { quiver: quiver.clone(), grid, generators }
    }

    /// F with no generators: every short exact sequence is admissible.
    pub fn full(quiver: &TypeAQuiver) -> Self {
        Self::f_x(quiver, core::iter::empty())
    }

    /// F generated by everything: only split sequences survive.
    pub fn split(quiver: &TypeAQuiver) -> Self {
        let all = quiver.indecomposables();
        Self::f_x(quiver, all)
    }

    pub fn quiver(&self) -> &TypeAQuiver {
        &self.quiver
    }

    pub fn grid(&self) -> &ArGrid {
        &self.grid
    }

    pub fn generators(&self) -> &BTreeSet<Interval> {
        &self.generators
    }

    pub fn is_diamond(&self) -> bool {
        let mut boundary: BTreeSet<Interval> = self.grid.orbit_row(1).into_iter().collect();
        boundary.extend(self.grid.orbit_row(self.quiver.n()));
        self.generators == boundary
    }

    /// Does every generator see the class as exact? Hom dimensions in
    /// type A are 0 or 1, so Hom(X, p) is surjective exactly when some
    /// middle summand carries the map to the quotient.
    fn admits(&self, ses: &SesClass) -> bool {
        self.generators.iter().all(|&x| {
            self.grid.hom_dim(x, ses.quot) == 0
                || ses
                    .middle
                    .summands()
                    .iter()
                    .any(|&e| self.grid.hom_dim(x, e) == 1)
        })
    }

    /// Admissibility of the unique nonsplit class with the given
    /// indecomposable end terms.
    pub fn is_admissible(&self, sub: Interval, quot: Interval) -> Result<bool, ExactError> {
        match self.grid.ext_class(quot, sub) {
            Some(ses) => Ok(self.admits(&ses)),
            None => Err(ExactError::NoExtension { quot, sub }),
        }
    }

    /// dim of the admissible part of Ext^1(quot, sub): 0 or 1.
    pub fn admissible_class_dim(&self, quot: Interval, sub: Interval) -> usize {
        match self.grid.ext_class(quot, sub) {
            Some(ses) => usize::from(self.admits(&ses)),
            None => 0,
        }
    }

    /// Indecomposable relative projectives: the generators together with
    /// the projectives of the path algebra.
    pub fn relative_projectives(&self) -> Vec<Interval> {
        let mut set: BTreeSet<Interval> = self.generators.clone();
        for i in 1..=self.quiver.n() {
            set.insert(self.quiver.projective(i).expect("valid vertex"));
        }
        set.into_iter().collect()
    }

    /// Indecomposable relative injectives: tau of the generators together
    /// with the injectives.
    pub fn relative_injectives(&self) -> Vec<Interval> {
        let mut set: BTreeSet<Interval> =
            self.generators.iter().filter_map(|&x| self.grid.tau(x)).collect();
        for i in 1..=self.quiver.n() {
            set.insert(self.quiver.injective(i).expect("valid vertex"));
        }
        set.into_iter().collect()
    }

    pub fn relative_proj_injectives(&self) -> Vec<Interval> {
        let inj: BTreeSet<Interval> = self.relative_injectives().into_iter().collect();
        self.relative_projectives().into_iter().filter(|p| inj.contains(p)).collect()
    }

    /// Definition-level scan: relatively projective iff no admissible
    /// class ends at M. Cross-checks `relative_projectives`.
    pub fn is_relative_projective_scan(&self, m: Interval) -> bool {
        self.quiver
            .indecomposables()
            .into_iter()
            .all(|n| self.admissible_class_dim(m, n) == 0)
    }

    /// Dual scan: relatively injective iff no admissible class starts
    /// at M.
    pub fn is_relative_injective_scan(&self, m: Interval) -> bool {
        self.quiver
            .indecomposables()
            .into_iter()
            .all(|c| self.admissible_class_dim(c, m) == 0)
    }

    // -- relative homological algebra ---------------------------------

    /// Source vertices ("tops") of the interval module: one projective
    /// cover summand P(j) per top j.
    fn tops(&self, m: Interval) -> Vec<usize> {
        (m.lo..=m.hi)
            .filter(|&j| {
                (j == m.lo || self.quiver.dir(j - 1) == ArrowDir::Left)
                    && (j == m.hi || self.quiver.dir(j) == ArrowDir::Right)
            })
            .collect()
    }

    /// The admissible cover of M by relative projectives: the sum of all
    /// indecomposable relative projectives mapping to M (one copy each,
    /// since hom spaces are at most one-dimensional), plus nothing else.
    /// Returns the kernel decomposed into indecomposables; the epi is
    /// verified admissible with exact linear algebra.
    fn cover_kernel(&self, parts: &[Interval], m: Interval) -> Vec<Interval> {
        let bq = bound_quiver(&self.quiver);
        let target: Rep<Rat> = interval_rep(&bq, m);
        let reps: Vec<Rep<Rat>> = parts.iter().map(|&p| interval_rep(&bq, p)).collect();
        let refs: Vec<&Rep<Rat>> = reps.iter().collect();
        let (sum, _, projs) = Rep::direct_sum(&bq, &refs);
        let mut f = Morphism::zero(&sum, &target);
        for (k, r) in reps.iter().enumerate() {
            let basis = hom_basis(&bq, r, &target);
            assert_eq!(basis.len(), 1, "cover component must be a nonzero map");
            f = f.add(&basis[0].compose(&projs[k]));
        }
        assert!(f.is_surjective(), "relative projective cover must be onto");
        let (ker, _) = kernel_rep(&bq, &f, &sum);
        // admissibility audit: every generator sees the sequence as exact
        for &x in &self.generators {
            let xr: Rep<Rat> = interval_rep(&bq, x);
            assert_eq!(
                rep_hom_dim(&bq, &xr, &ker) + rep_hom_dim(&bq, &xr, &target),
                rep_hom_dim(&bq, &xr, &sum),
                "cover of {m} is not admissible"
            );
        }
        let (catalog_iv, catalog): (Vec<Interval>, Vec<Rep<Rat>>) = self
            .quiver
            .indecomposables()
            .into_iter()
            .map(|iv| (iv, interval_rep::<Rat>(&bq, iv)))
            .unzip();
        decompose(&bq, &ker, &catalog)
            .expect("kernel decomposes over the interval catalog")
            .into_iter()
            .map(|i| catalog_iv[i])
            .collect()
    }

    /// Relative projective dimension, capped at 2 (the return value 2
    /// means "at least 2"): 0 for relative projectives, 1 when the
    /// kernel of the canonical cover is relatively projective, which by
    /// Schanuel's argument is independent of the chosen cover.
    pub fn pd(&self, m: Interval) -> usize {
        let rel_proj: BTreeSet<Interval> = self.relative_projectives().into_iter().collect();
        if rel_proj.contains(&m) {
            return 0;
        }
        let parts: Vec<Interval> = rel_proj
            .iter()
            .copied()
            .filter(|&p| self.grid.hom_dim(p, m) == 1)
            .collect();
        let kernel = self.cover_kernel(&parts, m);
        if kernel.iter().all(|k| rel_proj.contains(k)) {
            1
        } else {
            2
        }
    }

    /// Constructive projective dimension for the diamond structure,
    /// following the two cases of the hereditarity proof: the coray-end
    /// diamond when the opposite rectangle corner is occupied, otherwise
    /// the augmented cover through the ordinary projective cover.
    pub fn pd_e(&self, m: Interval) -> (usize, ResolutionE) {
        let rel_proj: BTreeSet<Interval> = self.relative_projectives().into_iter().collect();
        if rel_proj.contains(&m) {
            return (0, ResolutionE { target: m, steps: Vec::new(), length: 0 });
        }
        let e1 = self.grid.end_of_ray(m, RayDir::SW);
        let e2 = self.grid.end_of_ray(m, RayDir::NW);
        let meet = self
            .grid
            .ray(e1, RayDir::NW)
            .into_iter()
            .find(|x| self.grid.ray(e2, RayDir::SW).contains(x));
        let step = if let Some(n) = meet {
            let ses = self.grid.ext_class(m, n).expect("corner module yields the diamond");
            debug_assert_eq!(ses.kind, SesKind::Diamond);
            debug_assert_eq!(ses.middle, ModuleSum::new(alloc::vec![e1, e2]));
            debug_assert!(self.admits(&ses));
            debug_assert!(rel_proj.contains(&n));
            ResStep {
                sub: ModuleSum::new(alloc::vec![n]),
                middle: ses.middle,
                quot: ModuleSum::new(alloc::vec![m]),
            }
        } else {
            let mut parts: Vec<Interval> = self
                .tops(m)
                .into_iter()
                .map(|j| self.quiver.projective(j).expect("valid vertex"))
                .collect();
            parts.push(e1);
            parts.push(e2);
            let kernel = self.cover_kernel(&parts, m);
            debug_assert!(kernel.iter().all(|k| rel_proj.contains(k)));
            ResStep {
                sub: ModuleSum::new(kernel),
                middle: ModuleSum::new(parts),
                quot: ModuleSum::new(alloc::vec![m]),
            }
        };
        (1, ResolutionE { target: m, steps: alloc::vec![step], length: 1 })
    }

    /// For every relative projective, an admissible embedding into a
    /// relative projective-injective whose cokernel is relative
    /// injective; for the diamond structure the witness is the
    /// projective hammock. The search for non-diamond structures is
    /// bounded to indecomposable cokernels.
    pub fn dominant_dim_check(&self) -> (bool, Vec<DominantWitness>) {
        let proj_inj: BTreeSet<Interval> =
            self.relative_proj_injectives().into_iter().collect();
        let rel_inj: BTreeSet<Interval> = self.relative_injectives().into_iter().collect();
        let mut witnesses = Vec::new();
        let mut ok = true;
        for p in self.relative_projectives() {
            if proj_inj.contains(&p) {
                witnesses.push(DominantWitness { projective: p, embedding: None });
                continue;
            }
            let found = self.quiver.indecomposables().into_iter().find_map(|c| {
                let ses = self.grid.ext_class(c, p)?;
                let fits = self.admits(&ses)
                    && rel_inj.contains(&c)
                    && ses.middle.summands().iter().all(|e| proj_inj.contains(e));
                fits.then_some(ses)
            });
            match found {
                Some(ses) => witnesses.push(DominantWitness { projective: p, embedding: Some(ses) }),
                None => ok = false,
            }
        }
        (ok, witnesses)
    }

    pub fn zero_auslander_report(&self) -> AuslanderReport {
        let relative_projectives = self.relative_projectives();
        let relative_injectives = self.relative_injectives();
        let relative_proj_injectives = self.relative_proj_injectives();
        let diamond = self.is_diamond();
        let rel_proj: BTreeSet<Interval> = relative_projectives.iter().copied().collect();
        let global_dim = self
            .quiver
            .indecomposables()
            .into_iter()
            .map(|m| {
                if rel_proj.contains(&m) {
                    0
                } else if diamond {
                    self.pd_e(m).0
                } else {
                    self.pd(m)
                }
            })
            .max()
            .unwrap_or(0);
        let (dominant_dim_ok, _) = self.dominant_dim_check();
        AuslanderReport {
            relative_projectives,
            relative_injectives,
            relative_proj_injectives,
            global_dim,
            dominant_dim_ok,
            is_0_auslander: global_dim <= 1 && dominant_dim_ok,
        }
    }

    // -- rigidity and tilting ------------------------------------------

    /// No admissible extension between any two summands.
    pub fn is_rigid(&self, t: &ModuleSum) -> bool {
        t.summands().iter().all(|&a| {
            t.summands()
                .iter()
                .all(|&b| self.admissible_class_dim(b, a) == 0)
        })
    }

    pub fn is_maximal_rigid(&self, t: &ModuleSum) -> Result<bool, ExactError> {
        if !t.is_basic() {
            return Err(ExactError::NotBasic);
        }
        if !self.is_rigid(t) {
            return Ok(false);
        }
        let extendable = self.quiver.indecomposables().into_iter().any(|n| {
            !t.contains(n)
                && t.summands().iter().all(|&a| {
                    self.admissible_class_dim(n, a) == 0 && self.admissible_class_dim(a, n) == 0
                })
        });
        Ok(!extendable)
    }

    pub fn is_complete_rigid(&self, t: &ModuleSum) -> Result<bool, ExactError> {
        if !t.is_basic() {
            return Err(ExactError::NotBasic);
        }
        Ok(self.is_rigid(t) && t.len() == self.relative_projectives().len())
    }

    /// Rigid, everywhere of relative projective dimension at most 1, and
    /// every relative projective coresolves inside add(T).
    pub fn is_tilting(&self, t: &ModuleSum) -> Result<bool, ExactError> {
        if !t.is_basic() {
            return Err(ExactError::NotBasic);
        }
        if !self.is_rigid(t) {
            return Ok(false);
        }
        let diamond = self.is_diamond();
        for &m in t.summands() {
            let pd = if diamond { self.pd_e(m).0 } else { self.pd(m) };
            if pd > 1 {
                return Ok(false);
            }
        }
        for p in self.relative_projectives() {
            if t.contains(p) {
                continue;
            }
            // candidate coresolution quotients: summands carrying an
            // admissible class onto p; any subset sums to an admissible
            // class again, with an amalgamated middle computed below
            let cands: Vec<Interval> = t
                .summands()
                .iter()
                .copied()
                .filter(|&t2| self.admissible_class_dim(t2, p) == 1)
                .collect();
            let mut witnessed = false;
            'subsets: for mask in 1u32..(1u32 << cands.len().min(16)) {
                let quot: Vec<Interval> = cands
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect();
                for mid in self.glued_middles(p, &quot) {
                    if mid.summands().iter().all(|e| t.contains(*e)) {
                        witnessed = true;
                        break 'subsets;
                    }
                }
            }
            if !witnessed {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Middles of the summed classes (eta_i) in Ext^1(q_1 (+) ... (+)
    /// q_k, p): realized by the oracle over a few coefficient patterns
    /// so that each component survives in at least one of them.
    fn glued_middles(&self, p: Interval, quot: &[Interval]) -> Vec<ModuleSum> {
        let bq = bound_quiver(&self.quiver);
        let rp: Rep<Rat> = interval_rep(&bq, p);
        let reps: Vec<Rep<Rat>> = quot.iter().map(|&qv| interval_rep(&bq, qv)).collect();
        let refs: Vec<&Rep<Rat>> = reps.iter().collect();
        let (rq, _, _) = Rep::direct_sum(&bq, &refs);
        let Ok(basis) = ext1_basis(&bq, &rq, &rp) else { return Vec::new() };
        if basis.is_empty() {
            return Vec::new();
        }
        let (catalog_iv, catalog): (Vec<Interval>, Vec<Rep<Rat>>) = self
            .quiver
            .indecomposables()
            .into_iter()
            .map(|iv| (iv, interval_rep::<Rat>(&bq, iv)))
            .unzip();
        let mut middles = Vec::new();
        for c in 1..=8i64 {
            let mut f = basis[0].clone();
            let mut coeff = Rat::from_int(c);
            for b in &basis[1..] {
                f = f.add(&b.scale(&coeff));
                coeff = coeff.mul(&Rat::from_int(c));
            }
            let Ok(ses) = extension_realization(&bq, &rq, &rp, &f) else { continue };
            let Ok(parts) = decompose(&bq, &ses.mid, &catalog) else { continue };
            let mid = ModuleSum::new(parts.into_iter().map(|i| catalog_iv[i]).collect());
            if !middles.contains(&mid) {
                middles.push(mid);
            }
        }
        middles
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: usize, hi: usize) -> Interval {
        Interval::new(lo, hi, 5).unwrap()
    }

    fn rlrr() -> ExactStructure {
        ExactStructure::e_diamond(&TypeAQuiver::new(5, "RLRR").unwrap())
    }

    #[test]
    fn diamond_generators_rlrr() {
        let es = rlrr();
        let expect: BTreeSet<Interval> =
            [iv(1, 2), iv(3, 5), iv(5, 5), iv(4, 4), iv(2, 3), iv(1, 1)]
                .into_iter()
                .collect();
        assert_eq!(*es.generators(), expect);
        assert!(es.is_diamond());
    }

    #[test]
    fn diamond_generator_counts() {
        // n = 2: everything is a generator
        let q2 = TypeAQuiver::new(2, "R").unwrap();
        assert_eq!(ExactStructure::e_diamond(&q2).generators().len(), 3);
        // linear A_5: n + 1 boundary modules
        let q5 = TypeAQuiver::new(5, "RRRR").unwrap();
        assert_eq!(ExactStructure::e_diamond(&q5).generators().len(), 6);
    }

    #[test]
    fn admissibility_examples() {
        let es = rlrr();
        let q = es.quiver().clone();
        let p4 = q.projective(4).unwrap();
        let i4 = q.injective(4).unwrap();
        let i3 = q.injective(3).unwrap();
        assert_eq!(es.is_admissible(p4, i4), Ok(true));
        assert_eq!(es.is_admissible(iv(4, 4), i3), Ok(false));
        assert_eq!(es.admissible_class_dim(i4, p4), 1);
        assert_eq!(es.admissible_class_dim(i3, iv(4, 4)), 0);
        // no self-extensions anywhere
        for m in q.indecomposables() {
            assert_eq!(es.admissible_class_dim(m, m), 0);
        }
        // the empty generator set admits every nonsplit class
        let full = ExactStructure::full(&q);
        assert_eq!(full.is_admissible(iv(4, 4), i3), Ok(true));
        // error on a vanishing extension group
        assert!(es.is_admissible(i4, p4).is_err());
    }

    #[test]
    fn relative_projectives_rlrr() {
        let es = rlrr();
        let projs = es.relative_projectives();
        assert_eq!(projs.len(), 9);
        let pi = es.relative_proj_injectives();
        assert_eq!(pi.len(), 6);
        let boundary: BTreeSet<Interval> = es.generators().iter().copied().collect();
        assert_eq!(pi.into_iter().collect::<BTreeSet<_>>(), boundary);
        // scans agree with the closed form
        for m in es.quiver().indecomposables() {
            assert_eq!(
                es.is_relative_projective_scan(m),
                projs.contains(&m),
                "scan mismatch at {m}"
            );
        }
        // the full structure only keeps the ordinary projectives
        let full = ExactStructure::full(es.quiver());
        assert_eq!(full.relative_projectives().len(), 5);
    }

    #[test]
    fn pd_examples() {
        let es = rlrr();
        let q = es.quiver().clone();
        let i3 = q.injective(3).unwrap();
        let (pd, res) = es.pd_e(i3);
        assert_eq!(pd, 1);
        let step = &res.steps[0];
        assert_eq!(step.sub, ModuleSum::new(alloc::vec![q.projective(3).unwrap()]));
        // dimension count: (0,1,1,1,1) + (0,0,1,0,0) = (0,1,2,1,1)
        assert_eq!(step.middle, ModuleSum::new(alloc::vec![iv(2, 3), iv(3, 5)]));
        assert_eq!(es.pd_e(q.projective(2).unwrap()).0, 0);
        // the 5-dimensional module needs the augmented cover
        let (pd, res) = es.pd_e(iv(1, 5));
        assert_eq!(pd, 1);
        let mid = &res.steps[0].middle;
        assert_eq!(
            *mid,
            ModuleSum::new(alloc::vec![
                q.projective(1).unwrap(),
                q.projective(3).unwrap(),
                q.projective(1).unwrap(),
                q.projective(5).unwrap()
            ])
        );
        // oracle-backed pd agrees everywhere
        for m in q.indecomposables() {
            assert_eq!(es.pd(m), es.pd_e(m).0, "pd mismatch at {m}");
        }
    }

    #[test]
    fn zero_auslander_rlrr() {
        let es = rlrr();
        let report = es.zero_auslander_report();
        assert_eq!(report.global_dim, 1);
        assert!(report.dominant_dim_ok);
        assert!(report.is_0_auslander);
        assert_eq!(report.relative_proj_injectives.len(), 6);
        // the split structure is trivially 0-Auslander
        let split = ExactStructure::split(es.quiver());
        let sreport = split.zero_auslander_report();
        assert_eq!(sreport.global_dim, 0);
        assert!(sreport.is_0_auslander);
    }

    #[test]
    fn dominant_witness_p4() {
        let es = rlrr();
        let q = es.quiver().clone();
        let (ok, witnesses) = es.dominant_dim_check();
        assert!(ok);
        let w = witnesses
            .iter()
            .find(|w| w.projective == q.projective(4).unwrap())
            .unwrap();
        let ses = w.embedding.as_ref().unwrap();
        assert_eq!(ses.quot, q.injective(4).unwrap());
        assert_eq!(
            ses.middle,
            ModuleSum::new(alloc::vec![q.injective(5).unwrap(), iv(4, 4)])
        );
    }

    #[test]
    fn minimum_mar_is_tilting() {
        let es = rlrr();
        let t = ModuleSum::new(es.relative_projectives());
        assert_eq!(t.len(), 9);
        assert_eq!(es.is_tilting(&t), Ok(true));
        assert_eq!(es.is_maximal_rigid(&t), Ok(true));
        assert_eq!(es.is_complete_rigid(&t), Ok(true));
        // a single non-relative-projective is far from complete
        let single = ModuleSum::new(alloc::vec![es.quiver().injective(3).unwrap()]);
        assert_eq!(es.is_complete_rigid(&single), Ok(false));
    }
}
