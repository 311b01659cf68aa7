//! The 24 bases, the displayed transition formulas between them, and the
//! sweep comparing every formula with the change-of-basis oracle.

mod mutation;
mod table;
mod tags;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dagger::{AnchorVectors, GramForm};
use crate::field::FieldElement;
use crate::leonard::{eta_roots, tau_roots, LeonardError, LeonardSystem};
use crate::matrix::{is_basis, Matrix, MatrixError, Vector};
use crate::relatives::D4Element;
use crate::report::Verdict;
use crate::scalars::Scalars;

pub use mutation::{seeded_mutations, Mutation};
pub use table::{standard_table, Deg, FormulaTable, GlobalScalar, Power, Slot, Template, TermScalar, WordFactor};
pub use tags::{legal_tag_names, Anchor, BasisTag, Family, Orientation, TagError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    #[error("zero denominator {0}")]
    ZeroDenominator(String),
    #[error("sequence {0} is not a basis")]
    NotBasis(BasisTag),
    #[error(transparent)]
    Leonard(#[from] LeonardError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// E_i, E*_i, τ_i(A), η_i(A), τ*_i(A*), η*_i(A*) for i = 0..=d.
#[derive(Debug, Clone)]
pub struct XFamilies {
    members: [Vec<Matrix>; 6],
}

impl XFamilies {
    pub fn new(sys: &LeonardSystem) -> Result<XFamilies, TransitionError> {
        let d = sys.d();
        let polys = |x: &Matrix, theta: &[FieldElement], roots: fn(&[FieldElement], usize) -> Vec<FieldElement>| {
            (0..=d).map(|i| x.poly_eval_roots(&roots(theta, i))).collect::<Result<Vec<_>, _>>()
        };
        Ok(XFamilies {
            members: [
                sys.e().to_vec(),
                sys.e_star().to_vec(),
                polys(sys.a(), sys.theta(), tau_roots)?,
                polys(sys.a(), sys.theta(), eta_roots)?,
                polys(sys.a_star(), sys.theta_star(), tau_roots)?,
                polys(sys.a_star(), sys.theta_star(), eta_roots)?,
            ],
        })
    }

    pub fn family(&self, f: Family) -> &[Matrix] {
        &self.members[f as usize]
    }

    pub fn d(&self) -> usize {
        self.members[0].len() - 1
    }

    /// Member i of the family read in the given orientation.
    pub fn member(&self, f: Family, o: Orientation, i: usize) -> &Matrix {
        &self.family(f)[o.index(self.d(), i)]
    }
}

fn anchor(anchors: &AnchorVectors, a: Anchor) -> &Vector {
    match a {
        Anchor::Xi0 => &anchors.xi0,
        Anchor::Xid => &anchors.xid,
        Anchor::Xis0 => &anchors.xis0,
        Anchor::Xisd => &anchors.xisd,
    }
}

/// The anchors of Φ^g, drawn from those of Φ.
pub fn relabel_anchors(g: D4Element, anchors: &AnchorVectors) -> AnchorVectors {
    g.generators().into_iter().fold(anchors.clone(), |a, h| match h {
        D4Element::DOWN => AnchorVectors { xis0: a.xisd, xisd: a.xis0, ..a },
        D4Element::DDOWN => AnchorVectors { xi0: a.xid, xid: a.xi0, ..a },
        _ => AnchorVectors {
            xi0: a.xis0,
            xid: a.xisd,
            xis0: a.xi0,
            xisd: a.xid,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    pub tag: BasisTag,
    pub vectors: Vec<Vector>,
}

impl BasisSet {
    /// The vectors as columns.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_columns(self.vectors[0].field(), &self.vectors).expect("basis vectors share a length")
    }
}

/// All 24 sequences, each checked to be a basis. Reversed sequences reuse
/// the forward vectors.
pub fn enumerate_bases(sys: &LeonardSystem, anchors: &AnchorVectors) -> Result<BTreeMap<BasisTag, BasisSet>, TransitionError> {
    enumerate_with(&XFamilies::new(sys)?, anchors)
}

fn enumerate_with(x: &XFamilies, anchors: &AnchorVectors) -> Result<BTreeMap<BasisTag, BasisSet>, TransitionError> {
    let mut out = BTreeMap::new();
    for tag in BasisTag::all() {
        let vectors = match tag.orientation {
            Orientation::Fwd => x.family(tag.family).iter().map(|m| m.mul_vec(anchor(anchors, tag.anchor))).collect::<Result<Vec<_>, _>>()?,
            Orientation::Rev => {
                let fwd = BasisTag { orientation: Orientation::Fwd, ..tag };
                let mut v = out.get(&fwd).map(|b: &BasisSet| b.vectors.clone()).expect("fwd sorts before rev");
                v.reverse();
                v
            }
        };
        if !is_basis(&vectors)? {
            return Err(TransitionError::NotBasis(tag));
        }
        out.insert(tag, BasisSet { tag, vectors });
    }
    Ok(out)
}

/// One rank check per tag, without stopping at the first failure.
pub fn basis_verdicts(sys: &LeonardSystem, anchors: &AnchorVectors) -> Result<Vec<Verdict>, TransitionError> {
    let x = XFamilies::new(sys)?;
    BasisTag::all()
        .into_iter()
        .map(|tag| {
            let vectors = (0..=x.d())
                .map(|i| x.member(tag.family, tag.orientation, i).mul_vec(anchor(anchors, tag.anchor)))
                .collect::<Result<Vec<_>, _>>()?;
            let ok = is_basis(&vectors)?;
            Ok(Verdict::new(format!("lem:24bases {} = {{{}}}", tag, tag.expression()), ok, if ok { "" } else { "rank deficient" }))
        })
        .collect()
}

/// One displayed equation specialized to a source and target basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionFormula {
    pub source: BasisTag,
    pub target: BasisTag,
    pub template: Template,
}

impl TransitionFormula {
    /// e.g. `eq:Eivs0toXivs0 (X = E)`.
    pub fn equation_tag(&self) -> String {
        let x = match self.target.orientation {
            Orientation::Fwd => self.target.family.name().to_string(),
            Orientation::Rev => format!("{}.rev", self.target.family.name()),
        };
        format!("{} (X = {x})", self.template.equation(self.source.orientation))
    }

    /// The operator, with X spelled out.
    pub fn describe(&self) -> String {
        let x = self.target.family.symbol(match self.target.orientation {
            Orientation::Fwd => "i",
            Orientation::Rev => "{d-i}",
        });
        format!("{}\n  T = {}\n  X_i = {x}\n  T·{} = {}", self.equation_tag(), self.template.render(self.source.orientation), self.source.expression(), self.target.expression())
    }
}

impl fmt::Display for TransitionFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

fn shared_table() -> &'static FormulaTable {
    static TABLE: OnceLock<FormulaTable> = OnceLock::new();
    TABLE.get_or_init(standard_table)
}

/// The closed-form transition formula for a pair of tags.
pub fn formula(source: BasisTag, target: BasisTag) -> TransitionFormula {
    formula_in(shared_table(), source, target)
}

pub fn formula_in(table: &FormulaTable, source: BasisTag, target: BasisTag) -> TransitionFormula {
    TransitionFormula {
        source,
        target,
        template: table.lookup(source.family, source.anchor, target.anchor).clone(),
    }
}

/// Everything a formula evaluation reads, computed once per system.
#[derive(Debug, Clone)]
pub struct Evaluator {
    d: usize,
    x: XFamilies,
    scalars: Scalars,
    /// tr(E_i E*_j)
    traces: Vec<Vec<FieldElement>>,
    /// ⟨a,b⟩ indexed by anchor
    inner: Vec<Vec<FieldElement>>,
    anchors: AnchorVectors,
}

impl Evaluator {
    pub fn new(sys: &LeonardSystem, g: &GramForm, anchors: &AnchorVectors) -> Result<Evaluator, TransitionError> {
        let all = [Anchor::Xi0, Anchor::Xid, Anchor::Xis0, Anchor::Xisd];
        let inner = all
            .iter()
            .map(|a| all.iter().map(|b| g.inner(anchor(anchors, *a), anchor(anchors, *b))).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let traces = sys
            .e()
            .iter()
            .map(|e| sys.e_star().iter().map(|es| e.trace_of_product(es)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Evaluator {
            d: sys.d(),
            x: XFamilies::new(sys)?,
            scalars: Scalars::new(&sys.parameter_array()?),
            traces,
            inner,
            anchors: anchors.clone(),
        })
    }

    pub fn families(&self) -> &XFamilies {
        &self.x
    }

    pub fn bases(&self) -> Result<BTreeMap<BasisTag, BasisSet>, TransitionError> {
        enumerate_with(&self.x, &self.anchors)
    }

    fn slot(&self, s: Slot, r: usize) -> usize {
        match s {
            Slot::Zero => 0,
            Slot::D => self.d,
            Slot::R => r,
        }
    }

    fn deg(&self, k: Deg, r: usize) -> usize {
        match k {
            Deg::R => r,
            Deg::DMinusR => self.d - r,
        }
    }

    fn global(&self, s: GlobalScalar) -> FieldElement {
        let sc = &self.scalars;
        match s {
            GlobalScalar::Td => sc.td(),
            GlobalScalar::N0 => sc.n0(),
            GlobalScalar::Tsd => sc.tsd(),
            GlobalScalar::Ns0 => sc.ns0(),
            GlobalScalar::Vp => sc.vp(),
            GlobalScalar::Ph => sc.ph(),
            GlobalScalar::Inner(a, b) => self.inner[a as usize][b as usize].clone(),
            GlobalScalar::Trace(a, b) => self.traces[self.slot(a, 0)][self.slot(b, 0)].clone(),
        }
    }

    fn term(&self, s: TermScalar, r: usize) -> FieldElement {
        let sc = &self.scalars;
        match s {
            TermScalar::Trace(a, b) => self.traces[self.slot(a, r)][self.slot(b, r)].clone(),
            TermScalar::VpLeft => sc.vp_left(r),
            TermScalar::VpRight => sc.vp_right(r),
            TermScalar::PhLeft => sc.ph_left(r),
            TermScalar::PhRight => sc.ph_right(r),
            TermScalar::KA => sc.k_a(r),
            TermScalar::KS => sc.k_s(r),
        }
    }

    fn factor(&self, w: WordFactor, r: usize) -> &Matrix {
        let (family, k) = match w {
            WordFactor::E(s) => (Family::E, self.slot(s, r)),
            WordFactor::Es(s) => (Family::Es, self.slot(s, r)),
            WordFactor::Tau(k) => (Family::TauA, self.deg(k, r)),
            WordFactor::Eta(k) => (Family::EtaA, self.deg(k, r)),
            WordFactor::TauS(k) => (Family::TauAs, self.deg(k, r)),
            WordFactor::EtaS(k) => (Family::EtaAs, self.deg(k, r)),
        };
        &self.x.family(family)[k]
    }

    fn powers<T: Copy + fmt::Display>(&self, ps: &[Power<T>], value: impl Fn(T) -> FieldElement) -> Result<FieldElement, TransitionError> {
        let mut acc = self.scalars.field.one();
        for p in ps {
            let v = value(p.base);
            if p.exp < 0 {
                acc = acc.checked_div(&v).map_err(|_| TransitionError::ZeroDenominator(p.base.to_string()))?;
            } else {
                acc = &acc * &v;
            }
        }
        Ok(acc)
    }

    /// T = sign · κ · Σ_r c_r X_{σ(r)} W_r.
    pub fn evaluate(&self, f: &TransitionFormula) -> Result<Matrix, TransitionError> {
        let t = &f.template;
        let field = self.scalars.field;
        let n = self.d + 1;
        let mut kappa = self.powers(&t.global, |s| self.global(s))?;
        if t.sign < 0 {
            kappa = -kappa;
        }
        let mut sum = Matrix::zeros(field, n, n);
        for r in 0..=self.d {
            let c = self.powers(&t.coefficient, |s| self.term(s, r))?;
            let k = f.source.orientation.index(self.d, r);
            let mut m = self.x.member(f.target.family, f.target.orientation, k).clone();
            for w in &t.word {
                m = &m * self.factor(*w, r);
            }
            sum = &sum + &(&m * &c);
        }
        Ok(&sum * &kappa)
    }
}

/// Convenience wrapper building an [`Evaluator`] for a single formula.
pub fn evaluate(f: &TransitionFormula, sys: &LeonardSystem, g: &GramForm, anchors: &AnchorVectors) -> Result<Matrix, TransitionError> {
    Evaluator::new(sys, g, anchors)?.evaluate(f)
}

/// The unique T with T u_i = v_i, as V U⁻¹.
pub fn oracle_change_of_basis(u: &BasisSet, v: &BasisSet) -> Result<Matrix, TransitionError> {
    Ok(&v.matrix() * &u.matrix().inverse()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairResult {
    pub source: BasisTag,
    pub target: BasisTag,
    pub equation: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitionReport {
    pub pairs: Vec<PairResult>,
}

impl TransitionReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.passed).count()
    }

    pub fn failures(&self) -> Vec<&PairResult> {
        self.pairs.iter().filter(|p| !p.passed).collect()
    }

    pub fn verdicts(&self) -> Vec<Verdict> {
        self.pairs
            .iter()
            .map(|p| Verdict::new(format!("{} -> {}: {}", p.source, p.target, p.equation), p.passed, p.detail.clone()))
            .collect()
    }

    /// Just the pass/fail pattern, for comparing runs.
    pub fn outcome(&self) -> Vec<bool> {
        self.pairs.iter().map(|p| p.passed).collect()
    }
}

/// Compare all 576 closed forms with the oracle.
pub fn verify_all(sys: &LeonardSystem, g: &GramForm, anchors: &AnchorVectors) -> Result<TransitionReport, TransitionError> {
    verify_with_table(shared_table(), &Evaluator::new(sys, g, anchors)?)
}

/// As [`verify_all`], against an arbitrary formula table.
pub fn verify_with_table(table: &FormulaTable, ev: &Evaluator) -> Result<TransitionReport, TransitionError> {
    let bases = ev.bases()?;
    let inverses: BTreeMap<BasisTag, Matrix> = bases.iter().map(|(t, b)| Ok((*t, b.matrix().inverse()?))).collect::<Result<_, TransitionError>>()?;
    let tags = BasisTag::all();
    let pairs: Vec<(BasisTag, BasisTag)> = tags.iter().flat_map(|s| tags.iter().map(move |t| (*s, *t))).collect();
    let pairs = pairs
        .into_par_iter()
        .map(|(source, target)| {
            let f = formula_in(table, source, target);
            let equation = f.equation_tag();
            let oracle = &bases[&target].matrix() * &inverses[&source];
            let (passed, detail) = match ev.evaluate(&f) {
                Ok(t) => {
                    let v = Verdict::matrix("", &t, &oracle);
                    (v.passed, v.detail)
                }
                Err(e) => (false, e.to_string()),
            };
            PairResult { source, target, equation, passed, detail }
        })
        .collect();
    Ok(TransitionReport { pairs })
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::catalog;
    use crate::dagger::{anchor_vectors, compute_gram};
    use crate::field::Field;
    use crate::relatives::apply;

    fn setup(field: Field, d: usize) -> (LeonardSystem, GramForm, AnchorVectors) {
        let sys = LeonardSystem::from_split_form(&catalog::sample(field, d).unwrap()).unwrap();
        let g = compute_gram(&sys).unwrap();
        let a = anchor_vectors(&sys, None).unwrap();
        (sys, g, a)
    }

    fn gf101() -> Field {
        Field::prime(101).unwrap()
    }

    #[test]
    fn bases_on_small_instances() {
        for field in [Field::rational(), gf101()] {
            for d in 0..=4 {
                let (sys, _, a) = setup(field, d);
                let bases = enumerate_bases(&sys, &a).unwrap();
                assert_eq!(bases.len(), 24);
                let tau0: BasisTag = "tauA.fwd.xis0".parse().unwrap();
                assert_eq!(bases[&tau0].vectors[0], a.xis0);
                let rev: BasisTag = "tauAs.rev.xi0".parse().unwrap();
                let want = sys.a_star().poly_eval_roots(&tau_roots(sys.theta_star(), d)).unwrap().mul_vec(&a.xi0).unwrap();
                assert_eq!(bases[&rev].vectors[0], want);
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let f = Field::rational();
        let (sys, _, a) = setup(f, 3);
        let bases = enumerate_bases(&sys, &a).unwrap();
        let u = &bases[&"E.fwd.xis0".parse().unwrap()];
        assert!(oracle_change_of_basis(u, u).unwrap().is_identity());
        let doubled = BasisSet {
            tag: u.tag,
            vectors: u.vectors.iter().map(|v| v.scale(&f.from_i64(2))).collect(),
        };
        assert_eq!(oracle_change_of_basis(u, &doubled).unwrap(), &Matrix::identity(f, 4) * &f.from_i64(2));
    }

    #[test]
    fn identity_pairs_give_identity() {
        for field in [Field::rational(), gf101()] {
            let (sys, g, a) = setup(field, 3);
            let ev = Evaluator::new(&sys, &g, &a).unwrap();
            for t in BasisTag::all() {
                assert!(ev.evaluate(&formula(t, t)).unwrap().is_identity(), "{t}");
            }
        }
    }

    #[test]
    fn full_sweep_rational_and_prime() {
        for field in [Field::rational(), gf101()] {
            for d in 0..=4 {
                let (sys, g, a) = setup(field, d);
                let report = verify_all(&sys, &g, &a).unwrap();
                assert_eq!(report.pairs.len(), 576);
                let bad: Vec<_> = report.failures().iter().map(|p| format!("{} -> {} {}", p.source, p.target, p.equation)).collect();
                assert!(bad.is_empty(), "{field} d={d}: {} failures, first {:?}", bad.len(), &bad[..bad.len().min(8)]);
            }
        }
    }

    #[test]
    fn sweep_on_every_catalog_family() {
        for s in catalog::samples(Field::rational(), 3) {
            let sys = LeonardSystem::from_split_form(&s.array).unwrap();
            let g = compute_gram(&sys).unwrap();
            let a = anchor_vectors(&sys, None).unwrap();
            assert!(verify_all(&sys, &g, &a).unwrap().passed(), "{}", s.name);
        }
    }

    #[test]
    fn evaluated_maps_are_invertible_and_compose() {
        let (sys, g, a) = setup(Field::rational(), 3);
        let ev = Evaluator::new(&sys, &g, &a).unwrap();
        let tags = BasisTag::all();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let (u, v, w) = (tags[rng.gen_range(0..24)], tags[rng.gen_range(0..24)], tags[rng.gen_range(0..24)]);
            let uv = ev.evaluate(&formula(u, v)).unwrap();
            let vw = ev.evaluate(&formula(v, w)).unwrap();
            let uw = ev.evaluate(&formula(u, w)).unwrap();
            assert_eq!(uw, &vw * &uv, "{u} {v} {w}");
            assert!(!uv.determinant().unwrap().is_zero());
        }
    }

    #[test]
    fn rescaling_keeps_verdicts() {
        let (sys, g, a) = setup(Field::rational(), 2);
        let base = verify_all(&sys, &g, &a).unwrap();
        let f = sys.field();
        let c = [f.from_i64(3), f.from_i64(-2), f.ratio(1, 5).unwrap(), f.from_i64(7)];
        let scaled = verify_all(&sys, &g.rescaled(&f.from_i64(-4)).unwrap(), &a.rescaled(&c)).unwrap();
        assert_eq!(base.outcome(), scaled.outcome());
    }

    #[test]
    fn relatives_follow_relabeled_tags() {
        let (sys, g, a) = setup(Field::rational(), 3);
        let ev = Evaluator::new(&sys, &g, &a).unwrap();
        for h in D4Element::all() {
            let rel = apply(h, &sys);
            let ah = relabel_anchors(h, &a);
            let bases_h = enumerate_bases(&rel, &ah).unwrap();
            let bases = ev.bases().unwrap();
            for t in BasisTag::all() {
                assert_eq!(bases_h[&t].vectors, bases[&t.relabel(h)].vectors, "{h} {t}");
            }
            let ev_h = Evaluator::new(&rel, &compute_gram(&rel).unwrap(), &ah).unwrap();
            let s0: BasisTag = "E.fwd.xis0".parse().unwrap();
            for t in BasisTag::all() {
                let on_rel = ev_h.evaluate(&formula(s0, t)).unwrap();
                let on_sys = ev.evaluate(&formula(s0.relabel(h), t.relabel(h))).unwrap();
                assert_eq!(on_rel, on_sys, "{h} {t}");
            }
        }
    }

    #[test]
    fn evaluate_wrapper_matches_evaluator() {
        let (sys, g, a) = setup(gf101(), 2);
        let f = formula("E.fwd.xis0".parse().unwrap(), "tauA.fwd.xisd".parse().unwrap());
        assert_eq!(f.equation_tag(), "eq:Eivs0toXivsd (X = tauA)");
        let t = evaluate(&f, &sys, &g, &a).unwrap();
        let bases = enumerate_bases(&sys, &a).unwrap();
        assert_eq!(t, oracle_change_of_basis(&bases[&f.source], &bases[&f.target]).unwrap());
    }
}
