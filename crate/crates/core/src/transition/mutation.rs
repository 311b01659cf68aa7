//! Single-coefficient corruptions of a formula table, used to show that the
//! sweep can fail.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::table::{FormulaTable, GlobalScalar, Slot, TermScalar, WordFactor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Flip the overall sign.
    Negate { template: usize },
    /// Invert one factor of κ.
    InvertGlobal { template: usize, factor: usize },
    /// Invert one factor of c_r.
    InvertCoefficient { template: usize, factor: usize },
    /// Swap a φ product for the matching ϕ product (or back).
    SwapSplit { template: usize },
    /// Move an E_0/E*_0 in the word to index d (or back).
    ShiftWord { template: usize, factor: usize },
}

impl Mutation {
    pub fn template(&self) -> usize {
        match *self {
            Mutation::Negate { template }
            | Mutation::InvertGlobal { template, .. }
            | Mutation::InvertCoefficient { template, .. }
            | Mutation::SwapSplit { template }
            | Mutation::ShiftWord { template, .. } => template,
        }
    }

    pub fn apply(&self, table: &mut FormulaTable) {
        let t = &mut table.templates[self.template()];
        match *self {
            Mutation::Negate { .. } => t.sign = -t.sign,
            Mutation::InvertGlobal { factor, .. } => t.global[factor].exp = -t.global[factor].exp,
            Mutation::InvertCoefficient { factor, .. } => t.coefficient[factor].exp = -t.coefficient[factor].exp,
            Mutation::SwapSplit { .. } => {
                for p in &mut t.global {
                    p.base = match p.base {
                        GlobalScalar::Vp => GlobalScalar::Ph,
                        GlobalScalar::Ph => GlobalScalar::Vp,
                        b => b,
                    };
                }
                for p in &mut t.coefficient {
                    p.base = match p.base {
                        TermScalar::VpLeft => TermScalar::PhLeft,
                        TermScalar::PhLeft => TermScalar::VpLeft,
                        TermScalar::VpRight => TermScalar::PhRight,
                        TermScalar::PhRight => TermScalar::VpRight,
                        b => b,
                    };
                }
            }
            Mutation::ShiftWord { factor, .. } => {
                let flip = |s: Slot| match s {
                    Slot::Zero => Slot::D,
                    Slot::D => Slot::Zero,
                    Slot::R => Slot::R,
                };
                t.word[factor] = match t.word[factor] {
                    WordFactor::E(s) => WordFactor::E(flip(s)),
                    WordFactor::Es(s) => WordFactor::Es(flip(s)),
                    w => w,
                };
            }
        }
    }

    /// The mutations that change something in template `k`.
    fn candidates(table: &FormulaTable, k: usize) -> Vec<Mutation> {
        let t = &table.templates[k];
        let mut out = vec![Mutation::Negate { template: k }];
        out.extend((0..t.global.len()).map(|factor| Mutation::InvertGlobal { template: k, factor }));
        out.extend((0..t.coefficient.len()).map(|factor| Mutation::InvertCoefficient { template: k, factor }));
        let split = t.global.iter().any(|p| matches!(p.base, GlobalScalar::Vp | GlobalScalar::Ph))
            || t.coefficient.iter().any(|p| matches!(p.base, TermScalar::VpLeft | TermScalar::VpRight | TermScalar::PhLeft | TermScalar::PhRight));
        if split {
            out.push(Mutation::SwapSplit { template: k });
        }
        for (factor, w) in t.word.iter().enumerate() {
            if matches!(w, WordFactor::E(Slot::Zero | Slot::D) | WordFactor::Es(Slot::Zero | Slot::D)) {
                out.push(Mutation::ShiftWord { template: k, factor });
            }
        }
        out
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Mutation::Negate { template } => write!(f, "negate template {template}"),
            Mutation::InvertGlobal { template, factor } => write!(f, "invert global factor {factor} of template {template}"),
            Mutation::InvertCoefficient { template, factor } => write!(f, "invert coefficient factor {factor} of template {template}"),
            Mutation::SwapSplit { template } => write!(f, "swap split products in template {template}"),
            Mutation::ShiftWord { template, factor } => write!(f, "shift word factor {factor} of template {template}"),
        }
    }
}

/// `n` mutations on distinct templates, reproducible from `seed`.
pub fn seeded_mutations(table: &FormulaTable, seed: u64, n: usize) -> Vec<Mutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut templates: Vec<usize> = (0..table.templates.len()).collect();
    templates.shuffle(&mut rng);
    templates
        .into_iter()
        .take(n)
        .map(|k| {
            let c = Mutation::candidates(table, k);
            c[rng.gen_range(0..c.len())]
        })
        .collect()
}
