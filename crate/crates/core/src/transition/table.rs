//! The displayed transition formulas, one template per (source sequence,
//! target anchor). A template reads
//!
//! ```text
//! T = sign · κ · Σ_r c_r · X_{σ(r)} · W_r
//! ```
//!
//! where κ and c_r are products of signed powers of named scalars, W_r is a
//! word in fixed factors, σ(r) = r for a forward source and d−r for a
//! reversed one, and X runs over the target's family and orientation.

use std::fmt;

use super::tags::{Anchor, Family, Orientation};

/// Index slot of an idempotent inside a word or trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Zero,
    D,
    R,
}

impl Slot {
    fn show(self) -> &'static str {
        match self {
            Slot::Zero => "0",
            Slot::D => "d",
            Slot::R => "r",
        }
    }
}

/// Degree of a polynomial factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Deg {
    R,
    DMinusR,
}

impl Deg {
    fn show(self) -> &'static str {
        match self {
            Deg::R => "r",
            Deg::DMinusR => "{d-r}",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordFactor {
    E(Slot),
    Es(Slot),
    Tau(Deg),
    Eta(Deg),
    TauS(Deg),
    EtaS(Deg),
}

impl fmt::Display for WordFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            WordFactor::E(s) => write!(f, "E_{}", s.show()),
            WordFactor::Es(s) => write!(f, "E*_{}", s.show()),
            WordFactor::Tau(k) => write!(f, "τ_{}(A)", k.show()),
            WordFactor::Eta(k) => write!(f, "η_{}(A)", k.show()),
            WordFactor::TauS(k) => write!(f, "τ*_{}(A*)", k.show()),
            WordFactor::EtaS(k) => write!(f, "η*_{}(A*)", k.show()),
        }
    }
}

/// Scalars independent of r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlobalScalar {
    /// τ_d(θ_d)
    Td,
    /// η_d(θ_0)
    N0,
    /// τ*_d(θ*_d)
    Tsd,
    /// η*_d(θ*_0)
    Ns0,
    /// φ_1 ⋯ φ_d
    Vp,
    /// ϕ_1 ⋯ ϕ_d
    Ph,
    Inner(Anchor, Anchor),
    /// tr(E_a E*_b), slots 0 or d.
    Trace(Slot, Slot),
}

impl fmt::Display for GlobalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GlobalScalar::Td => f.write_str("τ_d(θ_d)"),
            GlobalScalar::N0 => f.write_str("η_d(θ_0)"),
            GlobalScalar::Tsd => f.write_str("τ*_d(θ*_d)"),
            GlobalScalar::Ns0 => f.write_str("η*_d(θ*_0)"),
            GlobalScalar::Vp => f.write_str("φ"),
            GlobalScalar::Ph => f.write_str("ϕ"),
            GlobalScalar::Inner(a, b) => write!(f, "⟨{},{}⟩", a.symbol(), b.symbol()),
            GlobalScalar::Trace(a, b) => write!(f, "tr(E_{}E*_{})", a.show(), b.show()),
        }
    }
}

/// Scalars depending on r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermScalar {
    /// tr(E_a E*_b), one slot being r.
    Trace(Slot, Slot),
    /// φ_1 ⋯ φ_r
    VpLeft,
    /// φ_d ⋯ φ_{d-r+1}
    VpRight,
    /// ϕ_1 ⋯ ϕ_r
    PhLeft,
    /// ϕ_d ⋯ ϕ_{d-r+1}
    PhRight,
    /// τ_r(θ_r) η_{d-r}(θ_r)
    KA,
    /// τ*_r(θ*_r) η*_{d-r}(θ*_r)
    KS,
}

impl fmt::Display for TermScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TermScalar::Trace(a, b) => write!(f, "tr(E_{}E*_{})", a.show(), b.show()),
            TermScalar::VpLeft => f.write_str("φ_1⋯φ_r"),
            TermScalar::VpRight => f.write_str("φ_d⋯φ_{d-r+1}"),
            TermScalar::PhLeft => f.write_str("ϕ_1⋯ϕ_r"),
            TermScalar::PhRight => f.write_str("ϕ_d⋯ϕ_{d-r+1}"),
            TermScalar::KA => f.write_str("τ_r(θ_r)η_{d-r}(θ_r)"),
            TermScalar::KS => f.write_str("τ*_r(θ*_r)η*_{d-r}(θ*_r)"),
        }
    }
}

/// `base^exp` with exp = ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Power<T> {
    pub base: T,
    pub exp: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    pub theorem: &'static str,
    /// LaTeX labels of the forward and reversed displays, when the source
    /// labels them.
    pub labels: Option<[&'static str; 2]>,
    pub source_family: Family,
    pub source_anchor: Anchor,
    pub target_anchor: Anchor,
    pub sign: i8,
    pub global: Vec<Power<GlobalScalar>>,
    pub coefficient: Vec<Power<TermScalar>>,
    pub word: Vec<WordFactor>,
}

impl Template {
    /// `(i)` for A-side targets, `(ii)` otherwise.
    pub fn clause(&self) -> &'static str {
        if self.target_anchor.starred() {
            "(i)"
        } else {
            "(ii)"
        }
    }

    /// Position 1..4 of the display inside its clause.
    pub fn display(&self, source_orientation: Orientation) -> usize {
        let second = matches!(self.target_anchor, Anchor::Xid | Anchor::Xisd) as usize;
        let rev = (source_orientation == Orientation::Rev) as usize;
        1 + second + 2 * rev
    }

    /// The equation tag for one source orientation, without the X suffix.
    pub fn equation(&self, source_orientation: Orientation) -> String {
        match self.labels {
            Some([fwd, rev]) => match source_orientation {
                Orientation::Fwd => fwd.to_string(),
                Orientation::Rev => rev.to_string(),
            },
            None => format!("{} {} display {}", self.theorem, self.clause(), self.display(source_orientation)),
        }
    }

    /// Human-readable operator, e.g. `Σ_r X_r E*_0 E_r / tr(E_rE*_0)`.
    pub fn render(&self, source_orientation: Orientation) -> String {
        let x = match source_orientation {
            Orientation::Fwd => "X_r",
            Orientation::Rev => "X_{d-r}",
        };
        let mut out = String::new();
        if self.sign < 0 {
            out.push('-');
        }
        let global = render_powers(&self.global);
        if !global.is_empty() {
            out.push_str(&format!("({global}) "));
        }
        out.push_str("Σ_r ");
        let coefficient = render_powers(&self.coefficient);
        if !coefficient.is_empty() {
            out.push_str(&format!("({coefficient}) "));
        }
        out.push_str(x);
        for w in &self.word {
            out.push(' ');
            out.push_str(&w.to_string());
        }
        out
    }
}

fn render_powers<T: fmt::Display>(ps: &[Power<T>]) -> String {
    let num: Vec<String> = ps.iter().filter(|p| p.exp > 0).map(|p| p.base.to_string()).collect();
    let den: Vec<String> = ps.iter().filter(|p| p.exp < 0).map(|p| p.base.to_string()).collect();
    match (num.is_empty(), den.is_empty()) {
        (true, true) => String::new(),
        (false, true) => num.join("·"),
        (true, false) => format!("1/({})", den.join("·")),
        (false, false) => format!("{}/({})", num.join("·"), den.join("·")),
    }
}

/// All 48 templates, indexed by source (family, anchor) and target anchor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaTable {
    pub templates: Vec<Template>,
}

impl FormulaTable {
    pub fn lookup(&self, source_family: Family, source_anchor: Anchor, target_anchor: Anchor) -> &Template {
        self.templates
            .iter()
            .find(|t| t.source_family == source_family && t.source_anchor == source_anchor && t.target_anchor == target_anchor)
            .expect("the table covers every legal source and anchor")
    }
}

fn up<T>(base: T) -> Power<T> {
    Power { base, exp: 1 }
}

fn down<T>(base: T) -> Power<T> {
    Power { base, exp: -1 }
}

/// ⟨a,b⟩/⟨c,e⟩
fn ratio(a: Anchor, b: Anchor, c: Anchor, e: Anchor) -> [Power<GlobalScalar>; 2] {
    [up(GlobalScalar::Inner(a, b)), down(GlobalScalar::Inner(c, e))]
}

struct Row {
    target: Anchor,
    global: Vec<Power<GlobalScalar>>,
    coefficient: Vec<Power<TermScalar>>,
    word: Vec<WordFactor>,
}

fn row(target: Anchor, global: &[Power<GlobalScalar>], coefficient: &[Power<TermScalar>], word: &[WordFactor]) -> Row {
    Row {
        target,
        global: global.to_vec(),
        coefficient: coefficient.to_vec(),
        word: word.to_vec(),
    }
}

fn theorem(out: &mut Vec<Template>, name: &'static str, family: Family, anchor: Anchor, labels: Option<[[&'static str; 2]; 4]>, rows: [Row; 4]) {
    for (k, r) in rows.into_iter().enumerate() {
        out.push(Template {
            theorem: name,
            labels: labels.map(|l| l[k]),
            source_family: family,
            source_anchor: anchor,
            target_anchor: r.target,
            sign: 1,
            global: r.global,
            coefficient: r.coefficient,
            word: r.word,
        });
    }
}

/// The 48 closed forms, one per source family and target anchor.
pub fn standard_table() -> FormulaTable {
    use Anchor::{Xi0 as X0, Xid as Xd, Xis0 as S0, Xisd as Sd};
    use Deg::{DMinusR, R as Dr};
    use GlobalScalar::{Ns0, Ph, Td, Tsd, Vp, N0};
    use Slot::{Zero as Z, D, R};
    use TermScalar::{PhLeft, PhRight, VpLeft, VpRight, KA, KS};
    use WordFactor::{Eta, EtaS, Tau, TauS, E, Es};

    let tr = |a, b| GlobalScalar::Trace(a, b);
    let trr = |a, b| down(TermScalar::Trace(a, b));
    let g = |xs: &[&[Power<GlobalScalar>]]| xs.concat();
    let mut t = Vec::with_capacity(48);

    theorem(
        &mut t,
        "thm:Eivs0",
        Family::E,
        S0,
        Some([
            ["eq:Eivs0toXivs0", "eq:Ed-ivs0toXivs0"],
            ["eq:Eivs0toXivsd", "eq:Ed-ivs0toXivsd"],
            ["eq:Eivs0toXiv0", "eq:Ed-ivs0toXiv0"],
            ["eq:Eivs0toXivd", "eq:Ed-ivs0toXivd"],
        ]),
        [
            row(S0, &[], &[trr(R, Z)], &[Es(Z), E(R)]),
            row(Sd, &g(&[&[up(Tsd), down(Ph)], &ratio(Xd, Sd, Xd, S0)]), &[up(KA)], &[Es(D), E(R)]),
            row(X0, &ratio(X0, X0, X0, S0), &[trr(R, Z)], &[E(Z), Es(Z), E(R)]),
            row(Xd, &ratio(Xd, Xd, Xd, S0), &[trr(R, Z)], &[E(D), Es(Z), E(R)]),
        ],
    );
    theorem(
        &mut t,
        "thm:Eivsd",
        Family::E,
        Sd,
        None,
        [
            row(S0, &g(&[&[up(Ns0), down(Vp)], &ratio(Xd, S0, Xd, Sd)]), &[up(KA)], &[Es(Z), E(R)]),
            row(Sd, &[], &[trr(R, D)], &[Es(D), E(R)]),
            row(X0, &ratio(X0, X0, X0, Sd), &[trr(R, D)], &[E(Z), Es(D), E(R)]),
            row(Xd, &ratio(Xd, Xd, Xd, Sd), &[trr(R, D)], &[E(D), Es(D), E(R)]),
        ],
    );
    theorem(
        &mut t,
        "thm:Esiv0",
        Family::Es,
        X0,
        None,
        [
            row(S0, &ratio(S0, S0, X0, S0), &[trr(Z, R)], &[Es(Z), E(Z), Es(R)]),
            row(Sd, &ratio(Sd, Sd, X0, Sd), &[trr(Z, R)], &[Es(D), E(Z), Es(R)]),
            row(X0, &[], &[trr(Z, R)], &[E(Z), Es(R)]),
            row(Xd, &g(&[&[up(Td), down(Ph)], &ratio(Xd, Sd, X0, Sd)]), &[up(KS)], &[E(D), Es(R)]),
        ],
    );
    theorem(
        &mut t,
        "thm:Esivd",
        Family::Es,
        Xd,
        None,
        [
            row(S0, &ratio(S0, S0, Xd, S0), &[trr(D, R)], &[Es(Z), E(D), Es(R)]),
            row(Sd, &ratio(Sd, Sd, Xd, Sd), &[trr(D, R)], &[Es(D), E(D), Es(R)]),
            row(X0, &g(&[&[up(N0), down(Vp)], &ratio(X0, Sd, Xd, Sd)]), &[up(KS)], &[E(Z), Es(R)]),
            row(Xd, &[], &[trr(D, R)], &[E(D), Es(R)]),
        ],
    );
    theorem(
        &mut t,
        "thm:1",
        Family::TauA,
        S0,
        Some([
            ["eq:tauiAvs0toXivs0", "eq:taud-iAvs0toXivs0"],
            ["eq:tauiAvs0toXivsd", "eq:taud-iAvs0toXivsd"],
            ["eq:tauiAvs0toXiv0", "eq:taud-iAvs0toXiv0"],
            ["eq:tauiAvs0toXivd", "eq:taud-iAvs0toXivd"],
        ]),
        [
            row(S0, &[down(tr(Z, Z))], &[down(VpLeft)], &[Es(Z), E(Z), TauS(Dr)]),
            row(Sd, &g(&[&[up(Tsd), down(Vp)], &ratio(X0, Sd, X0, S0)]), &[], &[Es(D), Eta(DMinusR)]),
            row(X0, &ratio(X0, X0, X0, S0), &[down(VpLeft)], &[E(Z), TauS(Dr)]),
            row(Xd, &g(&[&[up(Tsd), down(Ph)], &ratio(Xd, Xd, Xd, S0)]), &[], &[E(D), Es(D), Eta(DMinusR)]),
        ],
    );
    theorem(
        &mut t,
        "thm:D",
        Family::EtaA,
        S0,
        None,
        [
            row(S0, &[down(tr(D, Z))], &[down(PhLeft)], &[Es(Z), E(D), TauS(Dr)]),
            row(Sd, &g(&[&[up(Tsd), down(Ph)], &ratio(Xd, Sd, Xd, S0)]), &[], &[Es(D), Tau(DMinusR)]),
            row(X0, &g(&[&[up(Tsd), down(Vp)], &ratio(X0, X0, X0, S0)]), &[], &[E(Z), Es(D), Tau(DMinusR)]),
            row(Xd, &ratio(Xd, Xd, Xd, S0), &[down(PhLeft)], &[E(D), TauS(Dr)]),
        ],
    );
    theorem(
        &mut t,
        "thm:d",
        Family::TauA,
        Sd,
        None,
        [
            row(S0, &g(&[&[up(Ns0), down(Ph)], &ratio(X0, S0, X0, Sd)]), &[], &[Es(Z), Eta(DMinusR)]),
            row(Sd, &[down(tr(Z, D))], &[down(PhRight)], &[Es(D), E(Z), EtaS(Dr)]),
            row(X0, &ratio(X0, X0, X0, Sd), &[down(PhRight)], &[E(Z), EtaS(Dr)]),
            row(Xd, &g(&[&[up(Ns0), down(Vp)], &ratio(Xd, Xd, Xd, Sd)]), &[], &[E(D), Es(Z), Eta(DMinusR)]),
        ],
    );
    theorem(
        &mut t,
        "thm:dD",
        Family::EtaA,
        Sd,
        None,
        [
            row(S0, &g(&[&[up(Ns0), down(Vp)], &ratio(Xd, S0, Xd, Sd)]), &[], &[Es(Z), Tau(DMinusR)]),
            row(Sd, &[down(tr(D, D))], &[down(VpRight)], &[Es(D), E(D), EtaS(Dr)]),
            row(X0, &g(&[&[up(Ns0), down(Ph)], &ratio(X0, X0, X0, Sd)]), &[], &[E(Z), Es(Z), Tau(DMinusR)]),
            row(Xd, &ratio(Xd, Xd, Xd, Sd), &[down(VpRight)], &[E(D), EtaS(Dr)]),
        ],
    );
    theorem(
        &mut t,
        "thm:s",
        Family::TauAs,
        X0,
        None,
        [
            row(S0, &ratio(S0, S0, X0, S0), &[down(VpLeft)], &[Es(Z), Tau(Dr)]),
            row(Sd, &g(&[&[up(Td), down(Ph)], &ratio(Sd, Sd, X0, Sd)]), &[], &[Es(D), E(D), EtaS(DMinusR)]),
            row(X0, &[down(tr(Z, Z))], &[down(VpLeft)], &[E(Z), Es(Z), Tau(Dr)]),
            row(Xd, &g(&[&[up(Td), down(Vp)], &ratio(Xd, S0, X0, S0)]), &[], &[E(D), EtaS(DMinusR)]),
        ],
    );
    theorem(
        &mut t,
        "thm:Ds",
        Family::EtaAs,
        X0,
        None,
        [
            row(S0, &g(&[&[up(Td), down(Vp)], &ratio(S0, S0, X0, S0)]), &[], &[Es(Z), E(D), TauS(DMinusR)]),
            row(Sd, &ratio(Sd, Sd, X0, Sd), &[down(PhRight)], &[Es(D), Tau(Dr)]),
            row(X0, &[down(tr(Z, D))], &[down(PhRight)], &[E(Z), Es(D), Tau(Dr)]),
            row(Xd, &g(&[&[up(Td), down(Ph)], &ratio(Xd, Sd, X0, Sd)]), &[], &[E(D), TauS(DMinusR)]),
        ],
    );
    theorem(
        &mut t,
        "thm:ds",
        Family::TauAs,
        Xd,
        None,
        [
            row(S0, &ratio(S0, S0, Xd, S0), &[down(PhLeft)], &[Es(Z), Eta(Dr)]),
            row(Sd, &g(&[&[up(N0), down(Vp)], &ratio(Sd, Sd, Xd, Sd)]), &[], &[Es(D), E(Z), EtaS(DMinusR)]),
            row(X0, &g(&[&[up(N0), down(Ph)], &ratio(X0, S0, Xd, S0)]), &[], &[E(Z), EtaS(DMinusR)]),
            row(Xd, &[down(tr(D, Z))], &[down(PhLeft)], &[E(D), Es(Z), Eta(Dr)]),
        ],
    );
    theorem(
        &mut t,
        "thm:dDs",
        Family::EtaAs,
        Xd,
        None,
        [
            row(S0, &g(&[&[up(N0), down(Ph)], &ratio(S0, S0, Xd, S0)]), &[], &[Es(Z), E(Z), TauS(DMinusR)]),
            row(Sd, &ratio(Sd, Sd, Xd, Sd), &[down(VpRight)], &[Es(D), Eta(Dr)]),
            row(X0, &g(&[&[up(N0), down(Vp)], &ratio(X0, Sd, Xd, Sd)]), &[], &[E(Z), TauS(DMinusR)]),
            row(Xd, &[down(tr(D, D))], &[down(VpRight)], &[E(D), Es(D), Eta(Dr)]),
        ],
    );
    FormulaTable { templates: t }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forty_eight_distinct_templates() {
        let table = standard_table();
        assert_eq!(table.templates.len(), 48);
        let mut keys: Vec<_> = table.templates.iter().map(|t| (t.source_family, t.source_anchor, t.target_anchor)).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 48);
        for t in &table.templates {
            // source sequences come from the source's own side; clause by target
            assert_eq!(t.source_family.a_side(), t.source_anchor.starred());
        }
    }

    #[test]
    fn equation_tags() {
        let table = standard_table();
        let t = table.lookup(Family::E, Anchor::Xis0, Anchor::Xis0);
        assert_eq!(t.equation(Orientation::Fwd), "eq:Eivs0toXivs0");
        assert_eq!(t.equation(Orientation::Rev), "eq:Ed-ivs0toXivs0");
        let t = table.lookup(Family::EtaA, Anchor::Xisd, Anchor::Xid);
        assert_eq!(t.equation(Orientation::Rev), "thm:dD (ii) display 4");
        let t = table.lookup(Family::TauAs, Anchor::Xi0, Anchor::Xi0);
        assert_eq!(t.render(Orientation::Fwd), "(1/(tr(E_0E*_0))) Σ_r (1/(φ_1⋯φ_r)) X_r E_0 E*_0 τ_r(A)");
    }
}
