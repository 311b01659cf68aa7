//! Parameter-array files.
//!
//! ```json
//! {"d": 2, "field": "rational", "theta": ["0","1","2"], "theta_star": ["0","1","2"],
//!  "varphi": ["-1","-1"], "phi": ["1","1"]}
//! ```
//!
//! `field` is `"rational"` or `{"prime": p}`. Scalars are strings such as
//! `"-3/4"`. `phi` may be omitted.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use leonard_core::{Field, FieldElement, Vector};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(String),
    Prime { prime: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterArrayFile {
    pub d: usize,
    pub field: FieldSpec,
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    pub varphi: Vec<String>,
    #[serde(default)]
    pub phi: Option<Vec<String>>,
}

/// Parsed scalars, before any invariant is checked.
#[derive(Debug, Clone)]
pub struct RawArray {
    pub field: Field,
    pub theta: Vec<FieldElement>,
    pub theta_star: Vec<FieldElement>,
    pub varphi: Vec<FieldElement>,
    pub phi: Option<Vec<FieldElement>>,
}

fn scalars(field: Field, xs: &[String], name: &str, want: usize) -> Result<Vec<FieldElement>> {
    if xs.len() != want {
        bail!("{name} has {} entries, expected {want}", xs.len());
    }
    xs.iter().enumerate().map(|(i, s)| field.parse(s).with_context(|| format!("{name}[{i}]"))).collect()
}

impl ParameterArrayFile {
    pub fn read(path: &Path) -> Result<ParameterArrayFile> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn field(&self) -> Result<Field> {
        match &self.field {
            FieldSpec::Named(s) if s == "rational" => Ok(Field::rational()),
            FieldSpec::Named(s) => Err(anyhow!("unknown field {s:?}; use \"rational\" or {{\"prime\": p}}")),
            FieldSpec::Prime { prime } => Field::prime(*prime).map_err(|e| anyhow!("field: {e}")),
        }
    }

    /// Check lengths against d and parse every scalar.
    pub fn parse(&self) -> Result<RawArray> {
        let field = self.field()?;
        let d = self.d;
        Ok(RawArray {
            field,
            theta: scalars(field, &self.theta, "theta", d + 1)?,
            theta_star: scalars(field, &self.theta_star, "theta_star", d + 1)?,
            varphi: scalars(field, &self.varphi, "varphi", d)?,
            phi: self.phi.as_ref().map(|p| scalars(field, p, "phi", d)).transpose()?,
        })
    }
}

/// `"v0,v1,..."` as a vector over `field`.
pub fn parse_seed(field: Field, text: &str) -> Result<Vector> {
    let entries = text
        .split(',')
        .map(|s| field.parse(s.trim()).with_context(|| format!("seed entry {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Vector::new(field, entries)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(json: &str) -> Result<ParameterArrayFile> {
        Ok(serde_json::from_str(json)?)
    }

    #[test]
    fn prime_field_and_missing_phi() {
        let f = file(r#"{"d":1,"field":{"prime":7},"theta":["0","1"],"theta_star":["0","3"],"varphi":["2"]}"#).unwrap();
        let raw = f.parse().unwrap();
        assert_eq!(raw.field, Field::prime(7).unwrap());
        assert!(raw.phi.is_none());
        assert_eq!(raw.theta_star[1], raw.field.from_i64(3));
    }

    #[test]
    fn structural_errors() {
        assert!(file(r#"{"d":1,"theta":["0","1"],"theta_star":["0","1"],"varphi":["1"]}"#).is_err());
        let f = file(r#"{"d":2,"field":"rational","theta":["0","1"],"theta_star":["0","1","2"],"varphi":["1","1"]}"#).unwrap();
        assert!(f.parse().unwrap_err().to_string().contains("theta has 2 entries"));
        let f = file(r#"{"d":1,"field":"real","theta":["0","1"],"theta_star":["0","1"],"varphi":["1"]}"#).unwrap();
        assert!(f.parse().is_err());
        let f = file(r#"{"d":1,"field":{"prime":8},"theta":["0","1"],"theta_star":["0","1"],"varphi":["1"]}"#).unwrap();
        assert!(f.parse().is_err());
    }

    #[test]
    fn seeds() {
        let q = Field::rational();
        assert_eq!(parse_seed(q, "1, -1/2,3").unwrap().len(), 3);
        assert!(parse_seed(q, "1,x").is_err());
    }
}
