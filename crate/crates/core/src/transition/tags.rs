//! The 24 bases: a family of polynomials in A or A*, an index orientation
//! and an anchor vector.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::relatives::D4Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    Es,
    TauA,
    EtaA,
    TauAs,
    EtaAs,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::E, Family::Es, Family::TauA, Family::EtaA, Family::TauAs, Family::EtaAs];

    pub fn name(self) -> &'static str {
        match self {
            Family::E => "E",
            Family::Es => "Es",
            Family::TauA => "tauA",
            Family::EtaA => "etaA",
            Family::TauAs => "tauAs",
            Family::EtaAs => "etaAs",
        }
    }

    /// Polynomial in A (as opposed to A*).
    pub fn a_side(self) -> bool {
        matches!(self, Family::E | Family::TauA | Family::EtaA)
    }

    /// Member i written out, e.g. `τ*_i(A*)`.
    pub fn symbol(self, index: &str) -> String {
        match self {
            Family::E => format!("E_{index}"),
            Family::Es => format!("E*_{index}"),
            Family::TauA => format!("τ_{index}(A)"),
            Family::EtaA => format!("η_{index}(A)"),
            Family::TauAs => format!("τ*_{index}(A*)"),
            Family::EtaAs => format!("η*_{index}(A*)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Fwd,
    Rev,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Fwd => "fwd",
            Orientation::Rev => "rev",
        }
    }

    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Fwd => Orientation::Rev,
            Orientation::Rev => Orientation::Fwd,
        }
    }

    /// The index used at position i.
    pub fn index(self, d: usize, i: usize) -> usize {
        match self {
            Orientation::Fwd => i,
            Orientation::Rev => d - i,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Anchor {
    Xi0,
    Xid,
    Xis0,
    Xisd,
}

impl Anchor {
    pub fn name(self) -> &'static str {
        match self {
            Anchor::Xi0 => "xi0",
            Anchor::Xid => "xid",
            Anchor::Xis0 => "xis0",
            Anchor::Xisd => "xisd",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Anchor::Xi0 => "ξ_0",
            Anchor::Xid => "ξ_d",
            Anchor::Xis0 => "ξ*_0",
            Anchor::Xisd => "ξ*_d",
        }
    }

    /// Eigenvector of A* (as opposed to A).
    pub fn starred(self) -> bool {
        matches!(self, Anchor::Xis0 | Anchor::Xisd)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisTag {
    pub family: Family,
    pub orientation: Orientation,
    pub anchor: Anchor,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown basis tag {given:?}; legal tags: {}", legal_tag_names().join(", "))]
pub struct TagError {
    pub given: String,
}

impl BasisTag {
    /// A-side families pair with ξ*_0, ξ*_d and A*-side families with ξ_0, ξ_d.
    pub fn new(family: Family, orientation: Orientation, anchor: Anchor) -> Option<BasisTag> {
        (family.a_side() == anchor.starred()).then_some(BasisTag { family, orientation, anchor })
    }

    /// All 24 tags sorted by name.
    pub fn all() -> Vec<BasisTag> {
        let mut out = Vec::with_capacity(24);
        for family in Family::ALL {
            for orientation in [Orientation::Fwd, Orientation::Rev] {
                for anchor in [Anchor::Xi0, Anchor::Xid, Anchor::Xis0, Anchor::Xisd] {
                    out.extend(BasisTag::new(family, orientation, anchor));
                }
            }
        }
        out.sort_by_key(|t| t.name());
        out
    }

    pub fn name(&self) -> String {
        format!("{}.{}.{}", self.family.name(), self.orientation.name(), self.anchor.name())
    }

    /// The defining expression of vector i, e.g. `τ*_{d-i}(A*)ξ_0`.
    pub fn expression(&self) -> String {
        let index = match self.orientation {
            Orientation::Fwd => "i",
            Orientation::Rev => "{d-i}",
        };
        format!("{}{}", self.family.symbol(index), self.anchor.symbol())
    }

    /// The tag on Φ naming the same sequence as `self` does on Φ^g.
    pub fn relabel(self, g: D4Element) -> BasisTag {
        g.generators().into_iter().rev().fold(self, |t, h| t.relabel_generator(h))
    }

    fn relabel_generator(self, g: D4Element) -> BasisTag {
        use Anchor::*;
        use Family::*;
        let BasisTag { family, orientation, anchor } = self;
        let (family, orientation, anchor) = match g {
            D4Element::DOWN => {
                let family = match family {
                    TauAs => EtaAs,
                    EtaAs => TauAs,
                    f => f,
                };
                let orientation = if self.family == Es { orientation.flip() } else { orientation };
                let anchor = match anchor {
                    Xis0 => Xisd,
                    Xisd => Xis0,
                    a => a,
                };
                (family, orientation, anchor)
            }
            D4Element::DDOWN => {
                let family = match family {
                    TauA => EtaA,
                    EtaA => TauA,
                    f => f,
                };
                let orientation = if self.family == E { orientation.flip() } else { orientation };
                let anchor = match anchor {
                    Xi0 => Xid,
                    Xid => Xi0,
                    a => a,
                };
                (family, orientation, anchor)
            }
            _ => {
                let family = match family {
                    E => Es,
                    Es => E,
                    TauA => TauAs,
                    TauAs => TauA,
                    EtaA => EtaAs,
                    EtaAs => EtaA,
                };
                let anchor = match anchor {
                    Xi0 => Xis0,
                    Xis0 => Xi0,
                    Xid => Xisd,
                    Xisd => Xid,
                };
                (family, orientation, anchor)
            }
        };
        BasisTag { family, orientation, anchor }
    }
}

pub fn legal_tag_names() -> Vec<String> {
    BasisTag::all().iter().map(|t| t.name()).collect()
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for BasisTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl FromStr for BasisTag {
    type Err = TagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BasisTag::all().into_iter().find(|t| t.name() == s).ok_or_else(|| TagError { given: s.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_legal_tags() {
        let all = BasisTag::all();
        assert_eq!(all.len(), 24);
        let names = legal_tag_names();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, names);
        assert!(BasisTag::new(Family::TauA, Orientation::Fwd, Anchor::Xi0).is_none());
        assert!(BasisTag::new(Family::TauAs, Orientation::Rev, Anchor::Xi0).is_some());
    }

    #[test]
    fn names_parse_back() {
        for t in BasisTag::all() {
            assert_eq!(t.name().parse::<BasisTag>().unwrap(), t);
        }
        let err = "bogus".parse::<BasisTag>().unwrap_err();
        assert!(err.to_string().contains("tauA.rev.xisd"));
        assert!("tauA.fwd.xi0".parse::<BasisTag>().is_err());
    }

    #[test]
    fn expressions() {
        let t: BasisTag = "tauAs.rev.xi0".parse().unwrap();
        assert_eq!(t.expression(), "τ*_{d-i}(A*)ξ_0");
        let t: BasisTag = "E.fwd.xis0".parse().unwrap();
        assert_eq!(t.expression(), "E_iξ*_0");
    }

    #[test]
    fn relabel_is_a_right_action() {
        for t in BasisTag::all() {
            assert_eq!(t.relabel(D4Element::IDENTITY), t);
            for g in D4Element::all() {
                for h in D4Element::all() {
                    assert_eq!(t.relabel(g.then(h)), t.relabel(h).relabel(g));
                }
                let r = t.relabel(g);
                assert!(BasisTag::new(r.family, r.orientation, r.anchor).is_some());
            }
        }
    }
}
