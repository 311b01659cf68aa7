//! Leonard systems: construction from parameter arrays, the defining axioms,
//! primitive idempotents and split sequences.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{product, Field, FieldElement, FieldError};
use crate::matrix::{Matrix, MatrixError};
use crate::poly::characteristic_polynomial;

/// Largest diameter for which [`validate_system`] searches idempotent orderings.
pub const RAW_SEARCH_MAX_D: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LeonardError {
    #[error("invalid parameter array: {0}")]
    Invariant(String),
    #[error("not a Leonard system: {}", .0.failures().join("; "))]
    Invalid(Box<ValidationReport>),
    #[error("zero trace denominator: {0}")]
    ZeroTrace(String),
    #[error("split sequence mismatch: {0}")]
    SplitMismatch(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `(θ_i; θ*_i; φ_i; ϕ_i)`. `varphi[k]` holds φ_{k+1}, likewise `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterArray {
    field: Field,
    theta: Vec<FieldElement>,
    theta_star: Vec<FieldElement>,
    varphi: Vec<FieldElement>,
    phi: Vec<FieldElement>,
}

fn check_field(field: Field, xs: &[FieldElement], name: &str) -> Result<(), LeonardError> {
    match xs.iter().find(|x| x.field() != field) {
        Some(x) => Err(LeonardError::Invariant(format!("{name} has an entry over {} in a {field} array", x.field()))),
        None => Ok(()),
    }
}

fn check_distinct(xs: &[FieldElement], name: &str) -> Result<(), LeonardError> {
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] == xs[j] {
                return Err(LeonardError::Invariant(format!("{name}_{i} = {name}_{j} = {}; entries must be distinct", xs[i])));
            }
        }
    }
    Ok(())
}

fn check_nonzero(xs: &[FieldElement], name: &str) -> Result<(), LeonardError> {
    match xs.iter().position(FieldElement::is_zero) {
        Some(k) => Err(LeonardError::Invariant(format!("{name}_{} = 0; entries must be nonzero", k + 1))),
        None => Ok(()),
    }
}

impl ParameterArray {
    pub fn new(
        field: Field,
        theta: Vec<FieldElement>,
        theta_star: Vec<FieldElement>,
        varphi: Vec<FieldElement>,
        phi: Vec<FieldElement>,
    ) -> Result<ParameterArray, LeonardError> {
        check_split_data(field, &theta, &theta_star, &varphi)?;
        if phi.len() != varphi.len() {
            return Err(LeonardError::Invariant(format!("phi has length {}, expected {}", phi.len(), varphi.len())));
        }
        check_field(field, &phi, "phi")?;
        check_nonzero(&phi, "phi")?;
        Ok(ParameterArray {
            field,
            theta,
            theta_star,
            varphi,
            phi,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn theta(&self) -> &[FieldElement] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[FieldElement] {
        &self.theta_star
    }

    pub fn varphi(&self) -> &[FieldElement] {
        &self.varphi
    }

    pub fn phi(&self) -> &[FieldElement] {
        &self.phi
    }

    /// φ = φ_1 φ_2 ⋯ φ_d.
    pub fn varphi_product(&self) -> FieldElement {
        product(self.field, &self.varphi)
    }

    /// ϕ = ϕ_1 ϕ_2 ⋯ ϕ_d.
    pub fn phi_product(&self) -> FieldElement {
        product(self.field, &self.phi)
    }
}

impl fmt::Display for ParameterArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |xs: &[FieldElement]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        write!(
            f,
            "theta=({}) theta*=({}) varphi=({}) phi=({})",
            j(&self.theta),
            j(&self.theta_star),
            j(&self.varphi),
            j(&self.phi)
        )
    }
}

fn check_split_data(field: Field, theta: &[FieldElement], theta_star: &[FieldElement], varphi: &[FieldElement]) -> Result<(), LeonardError> {
    if theta.is_empty() {
        return Err(LeonardError::Invariant("theta must have length d+1 >= 1".into()));
    }
    let d = theta.len() - 1;
    if theta_star.len() != d + 1 {
        return Err(LeonardError::Invariant(format!("theta_star has length {}, expected {}", theta_star.len(), d + 1)));
    }
    if varphi.len() != d {
        return Err(LeonardError::Invariant(format!("varphi has length {}, expected {d}", varphi.len())));
    }
    check_field(field, theta, "theta")?;
    check_field(field, theta_star, "theta_star")?;
    check_field(field, varphi, "varphi")?;
    check_distinct(theta, "theta")?;
    check_distinct(theta_star, "theta_star")?;
    check_nonzero(varphi, "varphi")
}

/// `Π_{k<i} (x - roots_k)`.
pub fn eval_prefix_product(roots: &[FieldElement], i: usize, x: &FieldElement) -> FieldElement {
    roots[..i].iter().fold(x.field().one(), |acc, r| &acc * &(x - r))
}

/// Roots of τ_i: θ_0, …, θ_{i-1}.
pub fn tau_roots(theta: &[FieldElement], i: usize) -> Vec<FieldElement> {
    theta[..i].to_vec()
}

/// Roots of η_i: θ_d, …, θ_{d-i+1}.
pub fn eta_roots(theta: &[FieldElement], i: usize) -> Vec<FieldElement> {
    theta.iter().rev().take(i).cloned().collect()
}

/// τ_i(x) = (x-θ_0)⋯(x-θ_{i-1}).
pub fn tau(theta: &[FieldElement], i: usize, x: &FieldElement) -> FieldElement {
    eval_prefix_product(theta, i, x)
}

/// η_i(x) = (x-θ_d)⋯(x-θ_{d-i+1}).
pub fn eta(theta: &[FieldElement], i: usize, x: &FieldElement) -> FieldElement {
    eval_prefix_product(&eta_roots(theta, i), i, x)
}

/// One verdict of a validation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// Every admissible pair (eigenvalue order, dual eigenvalue order).
    pub orderings: Vec<(Vec<FieldElement>, Vec<FieldElement>)>,
    /// The system for the first admissible ordering, when there is one.
    pub system: Option<LeonardSystem>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.system.is_some()
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Φ = (A; {E_i}; A*; {E*_i}) with its eigenvalue sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeonardSystem {
    field: Field,
    a: Matrix,
    a_star: Matrix,
    e: Vec<Matrix>,
    e_star: Vec<Matrix>,
    theta: Vec<FieldElement>,
    theta_star: Vec<FieldElement>,
}

/// E_i = Π_{j≠i} (A - θ_j I)/(θ_i - θ_j).
pub fn primitive_idempotents(a: &Matrix, theta: &[FieldElement]) -> Result<Vec<Matrix>, LeonardError> {
    check_distinct(theta, "theta")?;
    let field = a.field();
    let n = a.rows();
    if !a.is_square() || theta.len() != n {
        return Err(LeonardError::Invariant(format!("{} eigenvalues for a {}x{} matrix", theta.len(), a.rows(), a.cols())));
    }
    check_field(field, theta, "theta")?;
    let id = Matrix::identity(field, n);
    let shifted: Vec<Matrix> = theta.iter().map(|t| a - &(&id * t)).collect();
    let mut es = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = id.clone();
        let mut denom = field.one();
        for j in (0..n).filter(|&j| j != i) {
            m = &m * &shifted[j];
            denom = &denom * &(&theta[i] - &theta[j]);
        }
        es.push(&m * &denom.inv()?);
    }
    let sum = es.iter().fold(Matrix::zeros(field, n, n), |acc, e| &acc + e);
    if !sum.is_identity() {
        return Err(LeonardError::Invariant("sum of idempotents is not I; some theta_i is not an eigenvalue".into()));
    }
    for (i, e) in es.iter().enumerate() {
        if (a * e) != (e * &theta[i]) || e.is_zero() {
            return Err(LeonardError::Invariant(format!("theta_{i} = {} is not an eigenvalue", theta[i])));
        }
    }
    Ok(es)
}

fn idempotent_checks(label: &str, a: &Matrix, theta: &[FieldElement], es: &[Matrix]) -> Check {
    let field = a.field();
    let n = a.rows();
    let mut problems = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = &es[i] * &es[j];
            let want = if i == j { es[i].clone() } else { Matrix::zeros(field, n, n) };
            if prod != want {
                problems.push(format!("E_{i}E_{j}"));
            }
        }
        if es[i].rank() != 1 {
            problems.push(format!("rank E_{i} = {}", es[i].rank()));
        }
    }
    let sum = es.iter().fold(Matrix::zeros(field, n, n), |acc, e| &acc + e);
    if !sum.is_identity() {
        problems.push("sum E_i != I".into());
    }
    let spectral = es.iter().zip(theta).fold(Matrix::zeros(field, n, n), |acc, (e, t)| &acc + &(e * t));
    if &spectral != a {
        problems.push("sum theta_i E_i != A".into());
    }
    let detail = if problems.is_empty() {
        format!("{n} primitive idempotents of rank 1")
    } else {
        problems.join(", ")
    };
    Check::new(label, problems.is_empty(), detail)
}

fn band_check(label: &str, es: &[Matrix], other: &Matrix) -> Check {
    let n = es.len();
    let mut problems = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let zero = (&(&es[i] * other) * &es[j]).is_zero();
            let gap = i.abs_diff(j);
            if gap > 1 && !zero {
                problems.push(format!("({i},{j}) nonzero"));
            }
            if gap == 1 && zero {
                problems.push(format!("({i},{j}) zero"));
            }
        }
    }
    let detail = if problems.is_empty() { "tridiagonal and irreducible".to_string() } else { problems.join(", ") };
    Check::new(label, problems.is_empty(), detail)
}

fn shape_check(a: &Matrix, a_star: &Matrix) -> Check {
    let ok = a.is_square() && a_star.is_square() && a.rows() == a_star.rows() && a.rows() > 0 && a.field() == a_star.field();
    Check::new(
        "shape",
        ok,
        format!("A is {}x{} over {}, A* is {}x{} over {}", a.rows(), a.cols(), a.field(), a_star.rows(), a_star.cols(), a_star.field()),
    )
}

impl LeonardSystem {
    /// Check the axioms for the given eigenvalue orderings.
    pub fn with_ordering(a: Matrix, a_star: Matrix, theta: Vec<FieldElement>, theta_star: Vec<FieldElement>) -> Result<LeonardSystem, LeonardError> {
        let shape = shape_check(&a, &a_star);
        if !shape.passed {
            return Err(invalid(vec![shape]));
        }
        let e = primitive_idempotents(&a, &theta)?;
        let e_star = primitive_idempotents(&a_star, &theta_star)?;
        let sys = LeonardSystem {
            field: a.field(),
            a,
            a_star,
            e,
            e_star,
            theta,
            theta_star,
        };
        let checks = sys.axiom_checks();
        if checks.iter().all(|c| c.passed) {
            Ok(sys)
        } else {
            Err(invalid(checks))
        }
    }

    /// The axiom checks of a Leonard system for the stored orderings.
    pub fn axiom_checks(&self) -> Vec<Check> {
        vec![
            shape_check(&self.a, &self.a_star),
            idempotent_checks("A idempotents", &self.a, &self.theta, &self.e),
            idempotent_checks("A* idempotents", &self.a_star, &self.theta_star, &self.e_star),
            band_check("E_i A* E_j band", &self.e, &self.a_star),
            band_check("E*_i A E*_j band", &self.e_star, &self.a),
        ]
    }

    /// Split form: A lower bidiagonal with diagonal θ and subdiagonal 1,
    /// A* upper bidiagonal with diagonal θ* and superdiagonal φ.
    pub fn split_form_matrices(theta: &[FieldElement], theta_star: &[FieldElement], varphi: &[FieldElement]) -> Result<(Matrix, Matrix), LeonardError> {
        let field = theta[0].field();
        let n = theta.len();
        let a = Matrix::from_fn(field, n, n, |i, j| {
            if i == j {
                theta[i].clone()
            } else if i == j + 1 {
                field.one()
            } else {
                field.zero()
            }
        })?;
        let a_star = Matrix::from_fn(field, n, n, |i, j| {
            if i == j {
                theta_star[i].clone()
            } else if j == i + 1 {
                varphi[i].clone()
            } else {
                field.zero()
            }
        })?;
        Ok((a, a_star))
    }

    /// Build from (θ, θ*, φ) alone; ϕ is then whatever the system yields.
    pub fn from_split_data(theta: Vec<FieldElement>, theta_star: Vec<FieldElement>, varphi: Vec<FieldElement>) -> Result<LeonardSystem, LeonardError> {
        let field = theta.first().map(FieldElement::field).ok_or_else(|| LeonardError::Invariant("empty theta".into()))?;
        check_split_data(field, &theta, &theta_star, &varphi)?;
        let (a, a_star) = Self::split_form_matrices(&theta, &theta_star, &varphi)?;
        let sys = LeonardSystem::with_ordering(a, a_star, theta, theta_star)?;
        let (got, phi) = sys.split_sequences()?;
        if got != varphi {
            return Err(LeonardError::SplitMismatch(format!("recomputed varphi ({}) differs from input", join(&got))));
        }
        if let Some(k) = phi.iter().position(FieldElement::is_zero) {
            return Err(LeonardError::SplitMismatch(format!("phi_{} = 0", k + 1)));
        }
        Ok(sys)
    }

    /// Build from a full parameter array, cross-checking ϕ.
    pub fn from_split_form(pa: &ParameterArray) -> Result<LeonardSystem, LeonardError> {
        let sys = Self::from_split_data(pa.theta.clone(), pa.theta_star.clone(), pa.varphi.clone())?;
        let (_, phi) = sys.split_sequences()?;
        if phi != pa.phi {
            return Err(LeonardError::SplitMismatch(format!("computed phi ({}) differs from given phi ({})", join(&phi), join(&pa.phi))));
        }
        Ok(sys)
    }

    /// Assemble a relative without re-deriving anything; the caller
    /// guarantees the data is a valid system.
    pub(crate) fn from_parts_unchecked(
        a: Matrix,
        a_star: Matrix,
        e: Vec<Matrix>,
        e_star: Vec<Matrix>,
        theta: Vec<FieldElement>,
        theta_star: Vec<FieldElement>,
    ) -> LeonardSystem {
        LeonardSystem {
            field: a.field(),
            a,
            a_star,
            e,
            e_star,
            theta,
            theta_star,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn a_star(&self) -> &Matrix {
        &self.a_star
    }

    pub fn e(&self) -> &[Matrix] {
        &self.e
    }

    pub fn e_star(&self) -> &[Matrix] {
        &self.e_star
    }

    pub fn theta(&self) -> &[FieldElement] {
        &self.theta
    }

    pub fn theta_star(&self) -> &[FieldElement] {
        &self.theta_star
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field, self.d() + 1)
    }

    /// (φ_1..φ_d, ϕ_1..ϕ_d) from the trace ratios.
    pub fn split_sequences(&self) -> Result<(Vec<FieldElement>, Vec<FieldElement>), LeonardError> {
        let d = self.d();
        let es0 = &self.e_star[0];
        let id = self.identity();
        let ratio = |roots: Vec<FieldElement>, name: &str| -> Result<Vec<FieldElement>, LeonardError> {
            let mut out = Vec::with_capacity(d);
            let mut prev_poly = id.clone();
            let mut prev_tr = prev_poly.trace_of_product(es0)?;
            for i in 1..=d {
                let next_poly = &prev_poly * &(&self.a - &(&id * &roots[i - 1]));
                let next_tr = next_poly.trace_of_product(es0)?;
                if prev_tr.is_zero() {
                    return Err(LeonardError::ZeroTrace(format!("tr({name}_{}(A)E*_0) = 0", i - 1)));
                }
                let v = &(&(&self.theta_star[0] - &self.theta_star[i]) * &next_tr) / &prev_tr;
                if v.is_zero() {
                    return Err(LeonardError::ZeroTrace(format!("{name} ratio {i} vanishes")));
                }
                out.push(v);
                prev_poly = next_poly;
                prev_tr = next_tr;
            }
            Ok(out)
        };
        let varphi = ratio(tau_roots(&self.theta, d), "tau")?;
        let phi = ratio(eta_roots(&self.theta, d), "eta")?;
        Ok((varphi, phi))
    }

    pub fn parameter_array(&self) -> Result<ParameterArray, LeonardError> {
        let (varphi, phi) = self.split_sequences()?;
        ParameterArray::new(self.field, self.theta.clone(), self.theta_star.clone(), varphi, phi)
    }

    pub fn tau(&self, i: usize, x: &FieldElement) -> FieldElement {
        tau(&self.theta, i, x)
    }

    pub fn eta(&self, i: usize, x: &FieldElement) -> FieldElement {
        eta(&self.theta, i, x)
    }

    pub fn tau_star(&self, i: usize, x: &FieldElement) -> FieldElement {
        tau(&self.theta_star, i, x)
    }

    pub fn eta_star(&self, i: usize, x: &FieldElement) -> FieldElement {
        eta(&self.theta_star, i, x)
    }
}

fn join(xs: &[FieldElement]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn invalid(checks: Vec<Check>) -> LeonardError {
    LeonardError::Invalid(Box::new(ValidationReport {
        checks,
        orderings: Vec::new(),
        system: None,
    }))
}

/// Eigenvalues of `m` in the ground field if it is multiplicity-free.
fn spectrum(label: &str, m: &Matrix) -> (Check, Option<Vec<FieldElement>>) {
    let n = m.rows();
    let roots = match characteristic_polynomial(m) {
        Ok(p) => p.roots(),
        Err(e) => return (Check::new(label, false, e.to_string()), None),
    };
    let simple = roots.iter().all(|(_, k)| *k == 1);
    if roots.len() == n && simple {
        let vals: Vec<FieldElement> = roots.into_iter().map(|(r, _)| r).collect();
        (Check::new(label, true, format!("eigenvalues {}", join(&vals))), Some(vals))
    } else {
        let found: usize = roots.iter().map(|(_, k)| k).sum();
        let detail = if found < n {
            format!("only {found} of {n} eigenvalues lie in {}", m.field())
        } else {
            "repeated eigenvalue".to_string()
        };
        (Check::new(label, false, detail), None)
    }
}

/// Orders of `es` for which E_i X E_j vanishes exactly when |i-j| > 1.
fn band_orderings(es: &[Matrix], x: &Matrix) -> Vec<Vec<usize>> {
    let n = es.len();
    let zero: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| (&(&es[i] * x) * &es[j]).is_zero()).collect()).collect();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(path: &mut Vec<usize>, used: &mut [bool], zero: &[Vec<bool>], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if path.len() == n {
            out.push(path.clone());
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            if let Some(&last) = path.last() {
                if zero[last][v] || zero[v][last] {
                    continue;
                }
                let far = &path[..path.len() - 1];
                if far.iter().any(|&u| !zero[u][v] || !zero[v][u]) {
                    continue;
                }
            }
            used[v] = true;
            path.push(v);
            extend(path, used, zero, out);
            path.pop();
            used[v] = false;
        }
    }
    extend(&mut path, &mut used, &zero, &mut out);
    out
}

/// Check (A, A*) against the axioms with no ordering given, searching
/// for every admissible ordering of both idempotent families.
pub fn validate_system(a: &Matrix, a_star: &Matrix) -> ValidationReport {
    let mut checks = vec![shape_check(a, a_star)];
    let fail = |checks, orderings| ValidationReport {
        checks,
        orderings,
        system: None,
    };
    if !checks[0].passed {
        return fail(checks, Vec::new());
    }
    let (c1, th) = spectrum("A multiplicity-free", a);
    let (c2, ths) = spectrum("A* multiplicity-free", a_star);
    checks.push(c1);
    checks.push(c2);
    let (Some(th), Some(ths)) = (th, ths) else {
        return fail(checks, Vec::new());
    };
    let d = th.len() - 1;
    if d > RAW_SEARCH_MAX_D {
        checks.push(Check::new("ordering search", false, format!("d = {d} exceeds the search limit {RAW_SEARCH_MAX_D}")));
        return fail(checks, Vec::new());
    }
    let (e, es) = match (primitive_idempotents(a, &th), primitive_idempotents(a_star, &ths)) {
        (Ok(e), Ok(es)) => (e, es),
        (Err(err), _) | (_, Err(err)) => {
            checks.push(Check::new("idempotents", false, err.to_string()));
            return fail(checks, Vec::new());
        }
    };
    let ord = band_orderings(&e, a_star);
    let ord_star = band_orderings(&es, a);
    checks.push(Check::new(
        "E_i A* E_j band",
        !ord.is_empty(),
        format!("{} admissible orderings of the E_i", ord.len()),
    ));
    checks.push(Check::new(
        "E*_i A E*_j band",
        !ord_star.is_empty(),
        format!("{} admissible orderings of the E*_i", ord_star.len()),
    ));
    let pick = |order: &[usize], xs: &[FieldElement]| order.iter().map(|&k| xs[k].clone()).collect::<Vec<_>>();
    let mut orderings = Vec::new();
    for o in &ord {
        for os in &ord_star {
            orderings.push((pick(o, &th), pick(os, &ths)));
        }
    }
    let Some((theta, theta_star)) = orderings.first().cloned() else {
        return fail(checks, orderings);
    };
    let system = LeonardSystem {
        field: a.field(),
        a: a.clone(),
        a_star: a_star.clone(),
        e: ord[0].iter().map(|&k| e[k].clone()).collect(),
        e_star: ord_star[0].iter().map(|&k| es[k].clone()).collect(),
        theta,
        theta_star,
    };
    for c in system.axiom_checks().into_iter().skip(1) {
        checks.push(Check {
            name: format!("canonical: {}", c.name),
            ..c
        });
    }
    ValidationReport {
        checks,
        orderings,
        system: Some(system),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn ints(f: Field, xs: &[i64]) -> Vec<FieldElement> {
        xs.iter().map(|&x| f.from_i64(x)).collect()
    }

    #[test]
    fn d0_system_is_trivial() {
        let f = q();
        let sys = LeonardSystem::from_split_data(ints(f, &[5]), ints(f, &[7]), vec![]).unwrap();
        assert_eq!(sys.a(), &Matrix::from_i64(f, &[&[5]]).unwrap());
        assert!(sys.e()[0].is_identity());
        let pa = sys.parameter_array().unwrap();
        assert!(pa.varphi().is_empty() && pa.phi().is_empty());
        assert!(pa.varphi_product().is_one());
    }

    #[test]
    fn d1_example_matrices() {
        let f = q();
        let sys = LeonardSystem::from_split_data(ints(f, &[0, 1]), ints(f, &[0, 1]), ints(f, &[1])).unwrap();
        assert_eq!(sys.a(), &Matrix::from_i64(f, &[&[0, 0], &[1, 1]]).unwrap());
        assert_eq!(sys.a_star(), &Matrix::from_i64(f, &[&[0, 1], &[0, 1]]).unwrap());
        let report = validate_system(sys.a(), sys.a_star());
        assert!(report.passed(), "{report}");
        // ϕ_1 by brute force: (θ*_0-θ*_1) tr(η_1(A)E*_0)/tr(E*_0)
        let eta1 = sys.a() - &(&sys.identity() * &sys.theta()[1]);
        let es0 = &sys.e_star()[0];
        let brute = &(&(&sys.theta_star()[0] - &sys.theta_star()[1]) * &(&eta1 * es0).trace().unwrap()) / &es0.trace().unwrap();
        let (_, phi) = sys.split_sequences().unwrap();
        assert_eq!(phi[0], brute);
        assert!(!phi[0].is_zero());
    }

    #[test]
    fn repeated_theta_is_rejected() {
        let f = q();
        let err = LeonardSystem::from_split_data(ints(f, &[0, 1, 0]), ints(f, &[0, 1, 2]), ints(f, &[1, 1])).unwrap_err();
        assert!(matches!(err, LeonardError::Invariant(ref m) if m.contains("distinct")), "{err}");
    }

    #[test]
    fn diagonal_pair_fails_band_condition() {
        let f = q();
        let a = Matrix::diagonal(f, &ints(f, &[0, 1, 2])).unwrap();
        let report = validate_system(&a, &a);
        assert!(!report.passed());
        assert!(report.checks.iter().any(|c| c.name == "E_i A* E_j band" && !c.passed));
    }

    #[test]
    fn rotation_is_not_multiplicity_free_over_q() {
        let f = q();
        let r = Matrix::from_i64(f, &[&[0, -1], &[1, 0]]).unwrap();
        let report = validate_system(&r, &Matrix::identity(f, 2));
        assert!(report.checks.iter().any(|c| c.name == "A multiplicity-free" && !c.passed));
    }

    #[test]
    fn idempotents_of_diagonal() {
        let f = q();
        let a = Matrix::diagonal(f, &ints(f, &[0, 1])).unwrap();
        let es = primitive_idempotents(&a, &ints(f, &[0, 1])).unwrap();
        assert_eq!(es[0], Matrix::diagonal(f, &ints(f, &[1, 0])).unwrap());
        assert_eq!(es[1], Matrix::diagonal(f, &ints(f, &[0, 1])).unwrap());
        assert!(primitive_idempotents(&a, &ints(f, &[0, 2])).is_err());
    }

    #[test]
    fn validate_reports_both_orientations() {
        let f = q();
        let sys = LeonardSystem::from_split_data(ints(f, &[0, 1, 2]), ints(f, &[0, 1, 2]), ints(f, &[-1, -1])).unwrap();
        let report = validate_system(sys.a(), sys.a_star());
        assert!(report.passed(), "{report}");
        assert_eq!(report.orderings.len(), 4);
        assert!(report.orderings.iter().any(|(t, ts)| t == sys.theta() && ts == sys.theta_star()));
    }
}
