//! Pass/fail records shared by every verification suite.

use serde::Serialize;

use crate::field::FieldElement;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub tag: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(tag: impl Into<String>, passed: bool, detail: impl Into<String>) -> Verdict {
        Verdict {
            tag: tag.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn scalar(tag: impl Into<String>, lhs: &FieldElement, rhs: &FieldElement) -> Verdict {
        let passed = lhs == rhs;
        let detail = if passed { format!("{lhs}") } else { format!("lhs {lhs} != rhs {rhs}") };
        Verdict::new(tag, passed, detail)
    }

    pub fn matrix(tag: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> Verdict {
        let passed = lhs == rhs;
        let detail = if passed {
            String::new()
        } else {
            let diff = lhs.entries().iter().zip(rhs.entries()).filter(|(a, b)| a != b).count();
            format!("{diff} entries differ")
        };
        Verdict::new(tag, passed, detail)
    }

    pub fn nonzero(tag: impl Into<String>, x: &FieldElement) -> Verdict {
        Verdict::new(tag, !x.is_zero(), format!("{x}"))
    }
}

pub fn all_passed(vs: &[Verdict]) -> bool {
    vs.iter().all(|v| v.passed)
}
