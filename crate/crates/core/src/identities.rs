//! Reduction rules and the element S.
//!
//! Left sides are explicit matrix products; right sides are a scalar from
//! [`Scalars`] times a short product. The two never share a helper.

use serde::Serialize;

use crate::field::FieldElement;
use crate::leonard::{eta_roots, tau_roots, LeonardError, LeonardSystem};
use crate::matrix::Matrix;
use crate::report::Verdict;
use crate::scalars::Scalars;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub tag: String,
    pub lhs: Matrix,
    pub rhs: Matrix,
    pub passed: bool,
}

impl IdentityReport {
    fn new(tag: String, lhs: Matrix, rhs: Matrix) -> IdentityReport {
        let passed = lhs == rhs;
        IdentityReport { tag, lhs, rhs, passed }
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::matrix(self.tag.clone(), &self.lhs, &self.rhs)
    }
}

/// S = Σ_i (ϕ_d ⋯ ϕ_{d-i+1})/(φ_1 ⋯ φ_i) E_i.
pub fn s_element(sys: &LeonardSystem, s: &Scalars) -> Matrix {
    let n = sys.d() + 1;
    sys.e()
        .iter()
        .enumerate()
        .fold(Matrix::zeros(sys.field(), n, n), |acc, (i, e)| &acc + &(e * &(&s.ph_right(i) / &s.vp_left(i))))
}

/// τ_i(X), η_i(X) for i = 0..=d, by explicit products.
struct PolyMatrices {
    tau: Vec<Matrix>,
    eta: Vec<Matrix>,
}

impl PolyMatrices {
    fn new(x: &Matrix, theta: &[FieldElement]) -> Result<PolyMatrices, LeonardError> {
        let d = theta.len() - 1;
        let tau = (0..=d).map(|i| x.poly_eval_roots(&tau_roots(theta, i))).collect::<Result<_, _>>()?;
        let eta = (0..=d).map(|i| x.poly_eval_roots(&eta_roots(theta, i))).collect::<Result<_, _>>()?;
        Ok(PolyMatrices { tau, eta })
    }
}

fn scalars(sys: &LeonardSystem) -> Result<Scalars, LeonardError> {
    Ok(Scalars::new(&sys.parameter_array()?))
}

/// (tag, left idempotent, first poly, second poly, right idempotent, coefficient, tail)
type Row<'a> = (&'static str, &'a Matrix, &'a Matrix, &'a Matrix, &'a Matrix, FieldElement, (&'a Matrix, &'a Matrix));

/// All eight delta identities for every (i, j): 8 (d+1)² reports.
pub fn verify_reduction_rules(sys: &LeonardSystem) -> Result<Vec<IdentityReport>, LeonardError> {
    let s = scalars(sys)?;
    let d = sys.d();
    let pa = PolyMatrices::new(sys.a(), sys.theta())?;
    let ps = PolyMatrices::new(sys.a_star(), sys.theta_star())?;
    let (e, es) = (sys.e(), sys.e_star());
    let zero = Matrix::zeros(sys.field(), d + 1, d + 1);
    let mut out = Vec::with_capacity(8 * (d + 1) * (d + 1));
    for i in 0..=d {
        for j in 0..=d {
            let rows: [Row; 8] = [
                ("eq:basic", &e[0], &ps.tau[i], &pa.tau[j], &es[0], s.vp_left(i), (&e[0], &es[0])),
                ("eq:basicd", &e[0], &ps.eta[i], &pa.tau[j], &es[d], s.ph_right(i), (&e[0], &es[d])),
                ("eq:basicD", &e[d], &ps.tau[i], &pa.eta[j], &es[0], s.ph_left(i), (&e[d], &es[0])),
                ("eq:basicdD", &e[d], &ps.eta[i], &pa.eta[j], &es[d], s.vp_right(i), (&e[d], &es[d])),
                ("eq:basics", &es[0], &pa.tau[i], &ps.tau[j], &e[0], s.vp_left(i), (&es[0], &e[0])),
                ("eq:basicsds", &es[0], &pa.eta[i], &ps.tau[j], &e[d], s.ph_left(i), (&es[0], &e[d])),
                ("eq:basicsDs", &es[d], &pa.tau[i], &ps.eta[j], &e[0], s.ph_right(i), (&es[d], &e[0])),
                ("eq:basicdDs", &es[d], &pa.eta[i], &ps.eta[j], &e[d], s.vp_right(i), (&es[d], &e[d])),
            ];
            for (tag, l, p, q, r, c, (t0, t1)) in rows {
                let lhs = &(&(l * p) * q) * r;
                let rhs = if i == j { &(t0 * t1) * &c } else { zero.clone() };
                out.push(IdentityReport::new(format!("{tag} i={i} j={j}"), lhs, rhs));
            }
        }
    }
    Ok(out)
}

/// The diagonal coefficients of the delta identities; all must be nonzero.
pub fn reduction_coefficients(sys: &LeonardSystem) -> Result<Vec<Verdict>, LeonardError> {
    let s = scalars(sys)?;
    let mut out = Vec::new();
    for i in 0..=sys.d() {
        for (name, c) in [("vp_left", s.vp_left(i)), ("vp_right", s.vp_right(i)), ("ph_left", s.ph_left(i)), ("ph_right", s.ph_right(i))] {
            out.push(Verdict::nonzero(format!("lem:tauiA coefficient {name}({i})"), &c));
        }
    }
    Ok(out)
}

/// The eight four-factor simplifications for every r: 8 (d+1) reports.
pub fn verify_simplify_rules(sys: &LeonardSystem) -> Result<Vec<IdentityReport>, LeonardError> {
    let s = scalars(sys)?;
    let d = sys.d();
    let (e, es) = (sys.e(), sys.e_star());
    let (vp, ph) = (s.vp(), s.ph());
    let (td, n0, tsd, ns0) = (s.td(), s.n0(), s.tsd(), s.ns0());
    let mut out = Vec::with_capacity(8 * (d + 1));
    for r in 0..=d {
        let (vl, pl, pr) = (s.vp_left(r), s.ph_left(r), s.ph_right(r));
        let c = |num: &FieldElement, a: &FieldElement, b: &FieldElement, top: &FieldElement, bot: &FieldElement| &(num / &(a * b)) * &(top / bot);
        let rows: [(&str, [&Matrix; 4], FieldElement, [&Matrix; 2]); 8] = [
            ("eq:Es0EdEsdEr", [&es[0], &e[d], &es[d], &e[r]], c(&vp, &td, &tsd, &pr, &vl), [&es[0], &e[r]]),
            ("eq:Es0E0EsdEr", [&es[0], &e[0], &es[d], &e[r]], c(&vp, &n0, &tsd, &pr, &vl), [&es[0], &e[r]]),
            ("eq:EsdEdEs0Er", [&es[d], &e[d], &es[0], &e[r]], c(&ph, &td, &ns0, &vl, &pr), [&es[d], &e[r]]),
            ("eq:EsdE0Es0Er", [&es[d], &e[0], &es[0], &e[r]], c(&ph, &n0, &ns0, &vl, &pr), [&es[d], &e[r]]),
            ("eq:E0EsdEdEsr", [&e[0], &es[d], &e[d], &es[r]], c(&vp, &td, &tsd, &pl, &vl), [&e[0], &es[r]]),
            ("eq:E0Es0EdEsr", [&e[0], &es[0], &e[d], &es[r]], c(&vp, &td, &ns0, &pl, &vl), [&e[0], &es[r]]),
            ("eq:EdEsdE0Esr", [&e[d], &es[d], &e[0], &es[r]], c(&ph, &n0, &tsd, &vl, &pl), [&e[d], &es[r]]),
            ("eq:EdEs0E0Esr", [&e[d], &es[0], &e[0], &es[r]], c(&ph, &n0, &ns0, &vl, &pl), [&e[d], &es[r]]),
        ];
        for (tag, [w, x, y, z], coeff, [p, q]) in rows {
            let lhs = &(&(w * x) * y) * z;
            let rhs = &(p * q) * &coeff;
            out.push(IdentityReport::new(format!("{tag} r={r}"), lhs, rhs));
        }
    }
    Ok(out)
}

/// The S-element identities used to prove the simplifications.
pub fn verify_s_identities(sys: &LeonardSystem) -> Result<Vec<IdentityReport>, LeonardError> {
    let s = scalars(sys)?;
    let d = sys.d();
    let (e, es) = (sys.e(), sys.e_star());
    let sm = s_element(sys, &s);
    let k = &(&s.td() * &s.tsd()) / &s.vp();
    let mut out = vec![IdentityReport::new(
        "eq:simplifyaux1".into(),
        &sm * &es[0],
        &(&(&es[d] * &e[d]) * &es[0]) * &k,
    )];
    for r in 0..=d {
        out.push(IdentityReport::new(format!("eq:simplifyaux3 r={r}"), &(&es[0] * &sm) * &e[r], &(&(&(&es[0] * &e[d]) * &es[d]) * &e[r]) * &k));
        out.push(IdentityReport::new(format!("eq:simplifyaux4 r={r}"), &sm * &e[r], &e[r] * &(&s.ph_right(r) / &s.vp_left(r))));
    }
    // eq:defS: S is a polynomial in A, so it commutes with A
    out.push(IdentityReport::new("eq:defS commutes with A".into(), &sm * sys.a(), sys.a() * &sm));
    Ok(out)
}

fn mu_reports(sys: &LeonardSystem, coeff: impl Fn(&Scalars, usize) -> FieldElement) -> Result<Vec<IdentityReport>, LeonardError> {
    let s = scalars(sys)?;
    let d = sys.d();
    let pa = PolyMatrices::new(sys.a(), sys.theta())?;
    let ps = PolyMatrices::new(sys.a_star(), sys.theta_star())?;
    let (e, es) = (sys.e(), sys.e_star());
    Ok((0..=d)
        .map(|r| {
            let lhs = &(&es[d] * &e[0]) * &ps.tau[r];
            let rhs = &(&es[d] * &pa.eta[d - r]) * &coeff(&s, r);
            IdentityReport::new(format!("eq:mu r={r}"), lhs, rhs)
        })
        .collect())
}

/// E*_d E_0 τ*_r(A*) = (φ_1 ⋯ φ_r)/η_d(θ_0) E*_d η_{d-r}(A).
pub fn verify_mu_identity(sys: &LeonardSystem) -> Result<Vec<IdentityReport>, LeonardError> {
    mu_reports(sys, |s, r| &s.vp_left(r) / &s.n0())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentitySuite {
    pub reduction: Vec<Verdict>,
    pub simplify: Vec<Verdict>,
    pub auxiliary: Vec<Verdict>,
}

impl IdentitySuite {
    pub fn passed(&self) -> bool {
        [&self.reduction, &self.simplify, &self.auxiliary].iter().all(|vs| vs.iter().all(|v| v.passed))
    }

    pub fn len(&self) -> usize {
        self.reduction.len() + self.simplify.len() + self.auxiliary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn verify_identities(sys: &LeonardSystem) -> Result<IdentitySuite, LeonardError> {
    let v = |rs: Vec<IdentityReport>| rs.iter().map(IdentityReport::verdict).collect::<Vec<_>>();
    let mut auxiliary = v(verify_s_identities(sys)?);
    auxiliary.extend(v(verify_mu_identity(sys)?));
    auxiliary.extend(reduction_coefficients(sys)?);
    Ok(IdentitySuite {
        reduction: v(verify_reduction_rules(sys)?),
        simplify: v(verify_simplify_rules(sys)?),
        auxiliary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Field;
    use crate::relatives::orbit;

    fn sys(f: Field, d: usize) -> LeonardSystem {
        LeonardSystem::from_split_form(&catalog::sample(f, d).unwrap()).unwrap()
    }

    #[test]
    fn s_for_d0_is_identity() {
        let s = sys(Field::rational(), 0);
        let sc = Scalars::new(&s.parameter_array().unwrap());
        assert!(s_element(&s, &sc).is_identity());
    }

    #[test]
    fn s_fixes_e0() {
        let s = sys(Field::rational(), 3);
        let sc = Scalars::new(&s.parameter_array().unwrap());
        let sm = s_element(&s, &sc);
        assert_eq!(&sm * &s.e()[0], s.e()[0]);
    }

    #[test]
    fn counts_and_delta_structure() {
        let s = sys(Field::rational(), 3);
        let red = verify_reduction_rules(&s).unwrap();
        assert_eq!(red.len(), 8 * 16);
        for (k, r) in red.iter().enumerate() {
            assert!(r.passed, "{}", r.tag);
            let (i, j) = (k / 8 / 4, k / 8 % 4);
            if i != j {
                assert!(r.lhs.is_zero(), "{}", r.tag);
            }
        }
        let r00 = red.iter().find(|r| r.tag == "eq:basic i=0 j=0").unwrap();
        assert_eq!(r00.lhs, &s.e()[0] * &s.e_star()[0]);
        assert_eq!(verify_simplify_rules(&s).unwrap().len(), 8 * 4);
    }

    #[test]
    fn everything_holds_on_all_relatives() {
        for f in [Field::rational(), Field::prime(101).unwrap()] {
            for d in 0..=4 {
                let s = sys(f, d);
                for (g, rel) in orbit(&s) {
                    let suite = verify_identities(&rel).unwrap();
                    let bad: Vec<_> = [&suite.reduction, &suite.simplify, &suite.auxiliary]
                        .into_iter()
                        .flatten()
                        .filter(|v| !v.passed)
                        .map(|v| v.tag.clone())
                        .collect();
                    assert!(bad.is_empty(), "{f} d={d} {g}: {bad:?}");
                }
            }
        }
    }

    #[test]
    fn mu_mutation_is_detected() {
        let s = sys(Field::rational(), 3);
        let pa = s.parameter_array().unwrap();
        let mutated = mu_reports(&s, |sc, r| {
            let v: Vec<_> = (0..r).map(|k| pa.phi()[k].clone()).collect();
            &crate::field::product(pa.field(), &v) / &sc.n0()
        })
        .unwrap();
        assert!(mutated.iter().any(|r| !r.passed));
        assert!(verify_mu_identity(&s).unwrap().iter().all(|r| r.passed));
    }
}
