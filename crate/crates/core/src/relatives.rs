//! The D4 action generated by `*`, `↓`, `⇓` on Leonard systems and on
//! parameter arrays.
//!
//! Words act on the right, as superscripts: `Φ^{↓*}` is `(Φ^↓)^*`. Every
//! element has a unique normal form `↓^a ⇓^b *^c`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::field::FieldElement;
use crate::leonard::{LeonardSystem, ParameterArray};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct D4Element {
    pub down: bool,
    pub ddown: bool,
    pub star: bool,
}

impl D4Element {
    pub const IDENTITY: D4Element = D4Element::new(false, false, false);
    pub const DOWN: D4Element = D4Element::new(true, false, false);
    pub const DDOWN: D4Element = D4Element::new(false, true, false);
    pub const STAR: D4Element = D4Element::new(false, false, true);

    pub const fn new(down: bool, ddown: bool, star: bool) -> D4Element {
        D4Element { down, ddown, star }
    }

    /// 1, ↓, ⇓, ↓⇓, *, ↓*, ⇓*, ↓⇓*.
    pub fn all() -> [D4Element; 8] {
        let mut out = [D4Element::IDENTITY; 8];
        for (k, g) in out.iter_mut().enumerate() {
            *g = D4Element::new(k & 1 != 0, k & 2 != 0, k & 4 != 0);
        }
        out
    }

    /// Position in [`D4Element::all`].
    pub fn index(self) -> usize {
        self.down as usize | (self.ddown as usize) << 1 | (self.star as usize) << 2
    }

    /// The element acting as `self` followed by `next`.
    pub fn then(self, next: D4Element) -> D4Element {
        // * ↓^a ⇓^b = ⇓^a ↓^b *
        let (a, b) = if self.star { (next.ddown, next.down) } else { (next.down, next.ddown) };
        D4Element::new(self.down ^ a, self.ddown ^ b, self.star ^ next.star)
    }

    pub fn inverse(self) -> D4Element {
        D4Element::all().into_iter().find(|g| self.then(*g) == D4Element::IDENTITY).expect("D4 is a group")
    }

    /// The generators in the order they act.
    pub fn generators(self) -> Vec<D4Element> {
        let mut out = Vec::new();
        if self.down {
            out.push(D4Element::DOWN);
        }
        if self.ddown {
            out.push(D4Element::DDOWN);
        }
        if self.star {
            out.push(D4Element::STAR);
        }
        out
    }

    /// ASCII name: `1`, `down`, `ddown.star`, ...
    pub fn name(self) -> String {
        let parts: Vec<&str> = self
            .generators()
            .into_iter()
            .map(|g| match g {
                D4Element::DOWN => "down",
                D4Element::DDOWN => "ddown",
                _ => "star",
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(".")
        }
    }

    /// `Φ`, `Φ↓`, `Φ↓⇓*`, ...
    pub fn symbol(self) -> String {
        let mut s = String::from("Φ");
        if self.down {
            s.push('↓');
        }
        if self.ddown {
            s.push('⇓');
        }
        if self.star {
            s.push('*');
        }
        s
    }
}

impl fmt::Display for D4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

impl FromStr for D4Element {
    type Err = String;

    /// Accepts `1` or any dot-separated word over `down`, `ddown`, `star`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "1" {
            return Ok(D4Element::IDENTITY);
        }
        s.split('.').try_fold(D4Element::IDENTITY, |acc, part| {
            let g = match part {
                "down" => D4Element::DOWN,
                "ddown" => D4Element::DDOWN,
                "star" => D4Element::STAR,
                other => return Err(format!("unknown D4 generator {other:?}")),
            };
            Ok(acc.then(g))
        })
    }
}

fn reversed<T: Clone>(xs: &[T]) -> Vec<T> {
    xs.iter().rev().cloned().collect()
}

fn apply_generator(g: D4Element, sys: &LeonardSystem) -> LeonardSystem {
    let (a, a_star) = (sys.a().clone(), sys.a_star().clone());
    let (e, e_star) = (sys.e().to_vec(), sys.e_star().to_vec());
    let (th, ths) = (sys.theta().to_vec(), sys.theta_star().to_vec());
    match g {
        D4Element::DOWN => LeonardSystem::from_parts_unchecked(a, a_star, e, reversed(&e_star), th, reversed(&ths)),
        D4Element::DDOWN => LeonardSystem::from_parts_unchecked(a, a_star, reversed(&e), e_star, reversed(&th), ths),
        _ => LeonardSystem::from_parts_unchecked(a_star, a, e_star, e, ths, th),
    }
}

/// `Φ^g`, by relabeling only.
pub fn apply(g: D4Element, sys: &LeonardSystem) -> LeonardSystem {
    g.generators().into_iter().fold(sys.clone(), |s, h| apply_generator(h, &s))
}

fn transform_generator(g: D4Element, pa: &ParameterArray) -> ParameterArray {
    let f = pa.field();
    let (th, ths) = (pa.theta().to_vec(), pa.theta_star().to_vec());
    let (vp, ph) = (pa.varphi().to_vec(), pa.phi().to_vec());
    let build = |a: Vec<FieldElement>, b, c, d| ParameterArray::new(f, a, b, c, d).expect("relatives preserve the invariants");
    match g {
        D4Element::DOWN => build(th, reversed(&ths), reversed(&ph), reversed(&vp)),
        D4Element::DDOWN => build(reversed(&th), ths, ph, vp),
        _ => build(ths, th, vp, reversed(&ph)),
    }
}

/// The parameter array of `Φ^g` from that of `Φ`.
pub fn transform_parameter_array(g: D4Element, pa: &ParameterArray) -> ParameterArray {
    g.generators().into_iter().fold(pa.clone(), |p, h| transform_generator(h, &p))
}

/// All eight relatives in canonical order.
pub fn orbit(sys: &LeonardSystem) -> Vec<(D4Element, LeonardSystem)> {
    D4Element::all().into_iter().map(|g| (g, apply(g, sys))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Field;
    use crate::leonard::validate_system;

    fn sys(d: usize) -> LeonardSystem {
        LeonardSystem::from_split_form(&catalog::sample(Field::rational(), d).unwrap()).unwrap()
    }

    #[test]
    fn relations_hold_on_elements() {
        let (s, dn, dd) = (D4Element::STAR, D4Element::DOWN, D4Element::DDOWN);
        for g in [s, dn, dd] {
            assert_eq!(g.then(g), D4Element::IDENTITY);
        }
        assert_eq!(dd.then(s), s.then(dn));
        assert_eq!(dn.then(s), s.then(dd));
        assert_eq!(dn.then(dd), dd.then(dn));
    }

    #[test]
    fn names_round_trip() {
        let names: Vec<String> = D4Element::all().iter().map(|g| g.name()).collect();
        assert_eq!(names, ["1", "down", "ddown", "down.ddown", "star", "down.star", "ddown.star", "down.ddown.star"]);
        for g in D4Element::all() {
            assert_eq!(g.name().parse::<D4Element>().unwrap(), g);
            assert_eq!(g.index(), D4Element::all().iter().position(|h| *h == g).unwrap());
        }
        assert!("up".parse::<D4Element>().is_err());
    }

    #[test]
    fn table_rows() {
        let s = sys(3);
        let r = apply("down.star".parse().unwrap(), &s);
        assert_eq!(r.a(), s.a_star());
        assert_eq!(r.e(), reversed(s.e_star()).as_slice());
        assert_eq!(r.e_star(), s.e());
        let r = apply("ddown.star".parse().unwrap(), &s);
        assert_eq!(r.e(), s.e_star());
        assert_eq!(r.e_star(), reversed(s.e()).as_slice());
    }

    #[test]
    fn relations_hold_on_systems() {
        let s = sys(3);
        assert_eq!(apply(D4Element::IDENTITY, &s), s);
        assert_eq!(apply(D4Element::STAR, &apply(D4Element::STAR, &s)), s);
        let via = |gs: &[D4Element]| gs.iter().fold(s.clone(), |acc, g| apply(*g, &acc));
        let (st, dn, dd) = (D4Element::STAR, D4Element::DOWN, D4Element::DDOWN);
        assert_eq!(via(&[dd, st]), via(&[st, dn]));
        assert_eq!(via(&[dn, st]), via(&[st, dd]));
        assert_eq!(via(&[dn, dd]), via(&[dd, dn]));
    }

    #[test]
    fn group_law_and_commuting_square() {
        let s = sys(3);
        let pa = s.parameter_array().unwrap();
        for g in D4Element::all() {
            let sg = apply(g, &s);
            assert_eq!(sg.parameter_array().unwrap(), transform_parameter_array(g, &pa), "{g}");
            for h in D4Element::all() {
                assert_eq!(apply(h, &sg), apply(g.then(h), &s));
            }
            assert_eq!(apply(g.inverse(), &sg), s);
        }
    }

    #[test]
    fn star_keeps_varphi_and_reverses_phi() {
        let pa = sys(4).parameter_array().unwrap();
        let t = transform_parameter_array(D4Element::STAR, &pa);
        assert_eq!(t.varphi(), pa.varphi());
        assert_eq!(t.phi(), reversed(pa.phi()).as_slice());
        assert_eq!(transform_parameter_array(D4Element::STAR, &t), pa);
    }

    #[test]
    fn orbit_members_are_valid_and_distinct() {
        let s = sys(2);
        let o = orbit(&s);
        assert_eq!(o.len(), 8);
        for (i, (_, a)) in o.iter().enumerate() {
            assert!(validate_system(a.a(), a.a_star()).passed());
            assert!(a.axiom_checks().iter().all(|c| c.passed));
            for (_, b) in &o[i + 1..] {
                assert_ne!(a, b);
            }
        }
        // orbit of a member is the original orbit relabeled
        let g = D4Element::new(true, false, true);
        let og = orbit(&apply(g, &s));
        for (h, m) in og {
            assert_eq!(m, apply(g.then(h), &s));
        }
    }
}
