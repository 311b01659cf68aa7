//! Sample parameter arrays.
//!
//! θ and θ* are drawn from sequences whose three-term ratio
//! (θ_{i-2} - θ_{i+1})/(θ_{i-1} - θ_i) is a common constant; given those and
//! a free nonzero ϕ_1, the remaining split entries follow from
//!
//! ```text
//! φ_i = ϕ_1 S_i + (θ*_i - θ*_0)(θ_{i-1} - θ_d)
//! ϕ_i = φ_1 S_i + (θ*_i - θ*_0)(θ_{d-i+1} - θ_0)
//! S_i = Σ_{h<i} (θ_h - θ_{d-h})/(θ_0 - θ_d)
//! ```
//!
//! Every array returned here has also been run through
//! [`LeonardSystem::from_split_form`], so it is a genuine parameter array.

use crate::field::{Field, FieldElement};
use crate::leonard::{LeonardError, LeonardSystem, ParameterArray};

/// Split entries for the given eigenvalue data and ϕ_1.
pub fn complete_array(theta: &[FieldElement], theta_star: &[FieldElement], phi1: &FieldElement) -> Result<ParameterArray, LeonardError> {
    let field = phi1.field();
    let d = theta.len() - 1;
    if d == 0 {
        return ParameterArray::new(field, theta.to_vec(), theta_star.to_vec(), vec![], vec![]);
    }
    let span = &theta[0] - &theta[d];
    let mut s = field.zero();
    let mut sums = Vec::with_capacity(d);
    for h in 0..d {
        s = &s + &(&theta[h] - &theta[d - h]).checked_div(&span)?;
        sums.push(s.clone());
    }
    let ds = |i: usize| &theta_star[i] - &theta_star[0];
    let varphi: Vec<FieldElement> = (1..=d).map(|i| &(phi1 * &sums[i - 1]) + &(&ds(i) * &(&theta[i - 1] - &theta[d]))).collect();
    let varphi1 = varphi[0].clone();
    let phi: Vec<FieldElement> = (1..=d).map(|i| &(&varphi1 * &sums[i - 1]) + &(&ds(i) * &(&theta[d - i + 1] - &theta[0]))).collect();
    ParameterArray::new(field, theta.to_vec(), theta_star.to_vec(), varphi, phi)
}

type Seq = fn(Field, usize, usize) -> Option<FieldElement>;

fn int(f: Field, n: i64) -> Option<FieldElement> {
    Some(f.from_i64(n))
}

fn pow(f: Field, base: i64, e: i64) -> Option<FieldElement> {
    let b = f.from_i64(base);
    if e >= 0 {
        Some(b.pow(e as u32))
    } else {
        b.pow((-e) as u32).inv().ok()
    }
}

/// (name, θ_i, θ*_i) families; each pair shares its three-term constant.
const FAMILIES: &[(&str, Seq, Seq)] = &[
    ("linear", |f, _, i| int(f, i as i64), |f, _, i| int(f, i as i64)),
    ("krawtchouk", |f, d, i| int(f, d as i64 - 2 * i as i64), |f, d, i| int(f, d as i64 - 2 * i as i64)),
    ("quadratic", |f, _, i| int(f, (i * i) as i64), |f, _, i| int(f, (i * (i + 1)) as i64)),
    ("mixed", |f, _, i| int(f, 3 * i as i64 + 1), |f, _, i| int(f, 2 * (i * i) as i64 + 1)),
    ("geometric", |f, _, i| pow(f, 2, i as i64), |f, _, i| pow(f, 2, -(i as i64))),
    (
        "q-racah",
        |f, _, i| pow(f, 3, -(i as i64)),
        |f, _, i| Some(&pow(f, 3, i as i64)? + &pow(f, 3, -(i as i64))?),
    ),
];

const PHI1_CANDIDATES: &[(i64, i64)] = &[(1, 1), (2, 1), (-1, 1), (3, 1), (1, 2), (5, 1), (-7, 3), (11, 1)];

/// A named sample instance.
#[derive(Debug, Clone)]
pub struct Sample {
    pub name: String,
    pub array: ParameterArray,
}

/// The first ϕ_1 candidate that yields a valid array for this family.
fn family_sample(field: Field, d: usize, name: &str, th: Seq, ths: Seq) -> Option<Sample> {
    let theta: Vec<FieldElement> = (0..=d).map(|i| th(field, d, i)).collect::<Option<_>>()?;
    let theta_star: Vec<FieldElement> = (0..=d).map(|i| ths(field, d, i)).collect::<Option<_>>()?;
    PHI1_CANDIDATES.iter().find_map(|&(n, m)| {
        let phi1 = field.ratio(n, m).ok()?;
        let pa = complete_array(&theta, &theta_star, &phi1).ok()?;
        LeonardSystem::from_split_form(&pa).ok()?;
        Some(Sample {
            name: format!("{name}(d={d}, phi1={phi1})"),
            array: pa,
        })
    })
}

/// Every family that produces a valid instance of diameter `d` over `field`.
pub fn samples(field: Field, d: usize) -> Vec<Sample> {
    FAMILIES.iter().filter_map(|&(name, th, ths)| family_sample(field, d, name, th, ths)).collect()
}

/// The first available sample; handy for tests and the benchmarks.
pub fn sample(field: Field, d: usize) -> Option<ParameterArray> {
    samples(field, d).into_iter().next().map(|s| s.array)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_rational_families_per_diameter() {
        for d in 1..=5 {
            let s = samples(Field::rational(), d);
            assert!(s.len() >= 3, "d = {d}: only {} samples", s.len());
        }
    }

    #[test]
    fn prime_field_samples_exist() {
        let f = Field::prime(101).unwrap();
        for d in 0..=5 {
            assert!(!samples(f, d).is_empty(), "d = {d}");
        }
    }

    #[test]
    fn linear_d2_by_hand() {
        // θ = θ* = (0,1,2), ϕ_1 = 1 gives φ = (-1,-1), ϕ = (1,1).
        let f = Field::rational();
        let t: Vec<_> = (0..3).map(|i| f.from_i64(i)).collect();
        let pa = complete_array(&t, &t, &f.one()).unwrap();
        assert_eq!(pa.varphi(), &[f.from_i64(-1), f.from_i64(-1)]);
        assert_eq!(pa.phi(), &[f.one(), f.one()]);
    }

    #[test]
    fn wrong_phi_is_rejected() {
        let f = Field::rational();
        let pa = sample(f, 3).unwrap();
        let mut phi = pa.phi().to_vec();
        phi[1] = &phi[1] + &f.one();
        if phi[1].is_zero() {
            phi[1] = &phi[1] + &f.one();
        }
        let bad = ParameterArray::new(f, pa.theta().to_vec(), pa.theta_star().to_vec(), pa.varphi().to_vec(), phi).unwrap();
        assert!(matches!(LeonardSystem::from_split_form(&bad), Err(LeonardError::SplitMismatch(_))));
    }
}
