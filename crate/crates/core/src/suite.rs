//! Runs the verification suites on a system (and optionally its relatives)
//! and collects a versioned report.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::dagger::{anchor_vectors, compute_gram, verify_scalar_lemmas, AnchorVectors, DaggerError, GramForm, TraceProbe};
use crate::field::FieldElement;
use crate::identities::verify_identities;
use crate::leonard::{validate_system, LeonardError, LeonardSystem, ParameterArray};
use crate::matrix::Vector;
use crate::relatives::{apply, transform_parameter_array, D4Element};
use crate::report::Verdict;
use crate::transition::{basis_verdicts, verify_all, TransitionError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Axioms,
    Bases,
    Identities,
    Scalars,
    D4,
    Transitions,
}

impl Suite {
    /// Fixed run order.
    pub const ALL: [Suite; 6] = [Suite::Axioms, Suite::Bases, Suite::Identities, Suite::Scalars, Suite::D4, Suite::Transitions];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Bases => "bases",
            Suite::Identities => "identities",
            Suite::Scalars => "scalars",
            Suite::D4 => "d4",
            Suite::Transitions => "transitions",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            format!("unknown suite {s:?}; expected one of {}", names.join(", "))
        })
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Leonard(#[from] LeonardError),
    #[error(transparent)]
    Dagger(#[from] DaggerError),
    #[error(transparent)]
    Transition(#[from] TransitionError),
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub suites: Vec<Suite>,
    pub relatives: bool,
    pub seed: Option<Vector>,
    /// Rerun with rescaled anchors and Gram form, drawing scalars from this seed.
    pub rescale_check: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            suites: Suite::ALL.to_vec(),
            relatives: false,
            seed: None,
            rescale_check: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    /// Name of the relative, `1` for Φ itself.
    pub relative: String,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub elapsed_ms: u128,
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RescaleResult {
    pub relative: String,
    pub anchor_scalars: Vec<String>,
    pub gram_scalar: String,
    pub identical: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    pub field: String,
    pub d: usize,
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    pub varphi: Vec<String>,
    pub phi: Vec<String>,
}

impl Instance {
    pub fn new(pa: &ParameterArray) -> Instance {
        let s = |xs: &[FieldElement]| xs.iter().map(|x| x.to_string()).collect();
        Instance {
            field: pa.field().to_string(),
            d: pa.d(),
            theta: s(pa.theta()),
            theta_star: s(pa.theta_star()),
            varphi: s(pa.varphi()),
            phi: s(pa.phi()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub instance: Instance,
    pub results: Vec<SuiteResult>,
    pub probe: Option<TraceProbe>,
    pub rescale: Vec<RescaleResult>,
    pub passed: bool,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn result(&self, suite: Suite, relative: &str) -> Option<&SuiteResult> {
        self.results.iter().find(|r| r.suite == suite && r.relative == relative)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = &self.instance;
        writeln!(f, "instance: d={} over {}", i.d, i.field)?;
        for r in &self.results {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{mark}] {:<11} {:<16} {}/{} ({} ms)", r.suite.name(), r.relative, r.total - r.failed, r.total, r.elapsed_ms)?;
            for v in r.verdicts.iter().filter(|v| !v.passed).take(20) {
                writeln!(f, "       failed: {} {}", v.tag, v.detail)?;
            }
        }
        if let Some(p) = &self.probe {
            writeln!(f, "trace probe: adopted {:?}, discriminating {}", p.adopted, p.discriminating)?;
        }
        for r in &self.rescale {
            writeln!(f, "[{}] rescale-check {:<16} anchors ({}) gram {}", if r.identical { "PASS" } else { "FAIL" }, r.relative, r.anchor_scalars.join(", "), r.gram_scalar)?;
        }
        writeln!(f, "overall: {} ({} ms)", if self.passed { "PASS" } else { "FAIL" }, self.elapsed_ms)
    }
}

fn check_verdicts(sys: &LeonardSystem) -> Vec<Verdict> {
    let report = validate_system(sys.a(), sys.a_star());
    let mut out: Vec<Verdict> = report.checks.iter().map(|c| Verdict::new(format!("validate: {}", c.name), c.passed, c.detail.clone())).collect();
    out.push(Verdict::new("validate: admissible ordering", report.system.is_some(), format!("{} orderings", report.orderings.len())));
    out.extend(sys.axiom_checks().into_iter().map(|c| Verdict::new(format!("axiom: {}", c.name), c.passed, c.detail)));
    match sys.split_sequences() {
        Ok((_, phi)) => {
            for (i, p) in phi.iter().enumerate() {
                out.push(Verdict::nonzero(format!("phi_{} nonzero", i + 1), p));
            }
        }
        Err(e) => out.push(Verdict::new("split sequences", false, e.to_string())),
    }
    out
}

fn d4_verdicts(sys: &LeonardSystem) -> Result<Vec<Verdict>, LeonardError> {
    let pa = sys.parameter_array()?;
    let mut out = Vec::new();
    for g in D4Element::all() {
        let rel = apply(g, sys);
        let got = rel.parameter_array()?;
        let want = transform_parameter_array(g, &pa);
        out.push(Verdict::new(format!("lem:D4 parameter array of {g}"), got == want, if got == want { String::new() } else { format!("{got} != {want}") }));
    }
    let (s, dn, dd) = (D4Element::STAR, D4Element::DOWN, D4Element::DDOWN);
    let via = |gs: &[D4Element]| gs.iter().fold(sys.clone(), |acc, g| apply(*g, &acc));
    for (name, lhs, rhs) in [
        ("eq:relation1 ** = 1", vec![s, s], vec![]),
        ("eq:relation1 down down = 1", vec![dn, dn], vec![]),
        ("eq:relation1 ddown ddown = 1", vec![dd, dd], vec![]),
        ("eq:relation2 ddown * = * down", vec![dd, s], vec![s, dn]),
        ("eq:relation2 down * = * ddown", vec![dn, s], vec![s, dd]),
        ("eq:relation2 down ddown = ddown down", vec![dn, dd], vec![dd, dn]),
    ] {
        out.push(Verdict::new(name.to_string(), via(&lhs) == via(&rhs), ""));
    }
    Ok(out)
}

fn rescale_scalars(sys: &LeonardSystem, seed: u64) -> ([FieldElement; 4], FieldElement) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = sys.field();
    let mut draw = || f.sample_nonzero(&mut rng, 9);
    ([draw(), draw(), draw(), draw()], draw())
}

struct Context {
    relative: String,
    sys: LeonardSystem,
    g: GramForm,
    anchors: AnchorVectors,
}

fn timed(suite: Suite, relative: &str, run: impl FnOnce() -> Result<Vec<Verdict>, SuiteError>) -> Result<SuiteResult, SuiteError> {
    let start = Instant::now();
    let verdicts = run()?;
    let failed = verdicts.iter().filter(|v| !v.passed).count();
    Ok(SuiteResult {
        suite,
        relative: relative.to_string(),
        passed: failed == 0,
        total: verdicts.len(),
        failed,
        elapsed_ms: start.elapsed().as_millis(),
        verdicts,
    })
}

/// Run the selected suites on Φ, or on all eight relatives.
pub fn run_suites(sys: &LeonardSystem, opts: &SuiteOptions) -> Result<VerificationReport, SuiteError> {
    let start = Instant::now();
    let pa = sys.parameter_array()?;
    let elements: Vec<D4Element> = if opts.relatives { D4Element::all().to_vec() } else { vec![D4Element::IDENTITY] };
    let mut suites = opts.suites.clone();
    suites.sort();
    suites.dedup();
    let mut results = Vec::new();
    let mut probe = None;
    let mut rescale = Vec::new();
    for g in elements {
        let rel = apply(g, sys);
        let ctx = Context {
            relative: g.name(),
            g: compute_gram(&rel)?,
            anchors: anchor_vectors(&rel, opts.seed.as_ref())?,
            sys: rel,
        };
        for &suite in &suites {
            let r = timed(suite, &ctx.relative, || match suite {
                Suite::Axioms => Ok(check_verdicts(&ctx.sys)),
                Suite::Bases => Ok(basis_verdicts(&ctx.sys, &ctx.anchors)?),
                Suite::Identities => {
                    let s = verify_identities(&ctx.sys)?;
                    Ok([s.reduction, s.simplify, s.auxiliary].concat())
                }
                Suite::Scalars => {
                    let rep = verify_scalar_lemmas(&ctx.sys, &ctx.g, &ctx.anchors)?;
                    if g == D4Element::IDENTITY {
                        probe = Some(rep.probe.clone());
                    }
                    Ok(rep.verdicts)
                }
                Suite::D4 => Ok(d4_verdicts(&ctx.sys)?),
                Suite::Transitions => Ok(verify_all(&ctx.sys, &ctx.g, &ctx.anchors)?.verdicts()),
            })?;
            results.push(r);
        }
        if let Some(seed) = opts.rescale_check {
            rescale.push(rescale_check(&ctx, &suites, seed, &results)?);
        }
    }
    let passed = results.iter().all(|r| r.passed) && rescale.iter().all(|r| r.identical);
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        instance: Instance::new(&pa),
        results,
        probe,
        rescale,
        passed,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Rerun the scale-sensitive suites with rescaled anchors and G and compare
/// the pass/fail pattern with the run already recorded.
fn rescale_check(ctx: &Context, suites: &[Suite], seed: u64, done: &[SuiteResult]) -> Result<RescaleResult, SuiteError> {
    let (c, k) = rescale_scalars(&ctx.sys, seed);
    let anchors = ctx.anchors.rescaled(&c);
    let g = ctx.g.rescaled(&k)?;
    let pattern = |vs: &[Verdict]| vs.iter().map(|v| v.passed).collect::<Vec<_>>();
    let mut identical = true;
    for &suite in suites {
        let again = match suite {
            Suite::Transitions => verify_all(&ctx.sys, &g, &anchors)?.verdicts(),
            Suite::Scalars => verify_scalar_lemmas(&ctx.sys, &g, &anchors)?.verdicts,
            Suite::Bases => basis_verdicts(&ctx.sys, &anchors)?,
            _ => continue,
        };
        let before = done.iter().find(|r| r.suite == suite && r.relative == ctx.relative).expect("suite already ran");
        identical &= pattern(&before.verdicts) == pattern(&again);
    }
    Ok(RescaleResult {
        relative: ctx.relative.clone(),
        anchor_scalars: c.iter().map(|x| x.to_string()).collect(),
        gram_scalar: k.to_string(),
        identical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Field;

    fn sys(field: Field, d: usize) -> LeonardSystem {
        LeonardSystem::from_split_form(&catalog::sample(field, d).unwrap()).unwrap()
    }

    #[test]
    fn full_run_passes() {
        let opts = SuiteOptions {
            rescale_check: Some(3),
            ..Default::default()
        };
        let r = run_suites(&sys(Field::rational(), 3), &opts).unwrap();
        assert!(r.passed, "{r}");
        assert_eq!(r.results.len(), 6);
        assert_eq!(r.result(Suite::Transitions, "1").unwrap().total, 576);
        assert_eq!(r.result(Suite::Bases, "1").unwrap().total, 24);
        assert!(r.rescale[0].identical);
        assert_eq!(r.schema_version, SCHEMA_VERSION);
    }

    #[test]
    fn relatives_and_filtering() {
        let opts = SuiteOptions {
            suites: vec![Suite::Identities, Suite::Axioms],
            relatives: true,
            ..Default::default()
        };
        let r = run_suites(&sys(Field::prime(101).unwrap(), 2), &opts).unwrap();
        assert!(r.passed);
        assert_eq!(r.results.len(), 16);
        // fixed order: axioms before identities within each relative
        assert_eq!(r.results[0].suite, Suite::Axioms);
        assert_eq!(r.results[1].suite, Suite::Identities);
        assert_eq!(r.results[15].relative, "down.ddown.star");
        assert!(r.probe.is_none());
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn text_report_names_the_probe() {
        let opts = SuiteOptions {
            suites: vec![Suite::Scalars],
            ..Default::default()
        };
        // the two readings first differ at d = 4
        let r = run_suites(&sys(Field::rational(), 4), &opts).unwrap();
        let text = r.to_string();
        assert!(text.contains("[PASS] scalars"));
        assert!(text.contains("trace probe: adopted Uniform"));
    }
}
