//! Scalars built from a parameter array: partial products of the split
//! sequences and the polynomial values that appear in closed forms.

use crate::field::{product, Field, FieldElement};
use crate::leonard::{eta, tau, ParameterArray};

#[derive(Debug, Clone)]
pub struct Scalars {
    pub field: Field,
    pub d: usize,
    pa: ParameterArray,
}

impl Scalars {
    pub fn new(pa: &ParameterArray) -> Scalars {
        Scalars {
            field: pa.field(),
            d: pa.d(),
            pa: pa.clone(),
        }
    }

    pub fn array(&self) -> &ParameterArray {
        &self.pa
    }

    fn varphi_at(&self, i: usize) -> &FieldElement {
        &self.pa.varphi()[i - 1]
    }

    fn phi_at(&self, i: usize) -> &FieldElement {
        &self.pa.phi()[i - 1]
    }

    /// φ_1 φ_2 ⋯ φ_r.
    pub fn vp_left(&self, r: usize) -> FieldElement {
        product(self.field, (1..=r).map(|i| self.varphi_at(i)))
    }

    /// φ_d φ_{d-1} ⋯ φ_{d-r+1}.
    pub fn vp_right(&self, r: usize) -> FieldElement {
        product(self.field, (self.d + 1 - r..=self.d).map(|i| self.varphi_at(i)))
    }

    /// ϕ_1 ϕ_2 ⋯ ϕ_r.
    pub fn ph_left(&self, r: usize) -> FieldElement {
        product(self.field, (1..=r).map(|i| self.phi_at(i)))
    }

    /// ϕ_d ϕ_{d-1} ⋯ ϕ_{d-r+1}.
    pub fn ph_right(&self, r: usize) -> FieldElement {
        product(self.field, (self.d + 1 - r..=self.d).map(|i| self.phi_at(i)))
    }

    /// φ.
    pub fn vp(&self) -> FieldElement {
        self.pa.varphi_product()
    }

    /// ϕ.
    pub fn ph(&self) -> FieldElement {
        self.pa.phi_product()
    }

    pub fn tau(&self, i: usize, j: usize) -> FieldElement {
        tau(self.pa.theta(), i, &self.pa.theta()[j])
    }

    pub fn eta(&self, i: usize, j: usize) -> FieldElement {
        eta(self.pa.theta(), i, &self.pa.theta()[j])
    }

    pub fn tau_s(&self, i: usize, j: usize) -> FieldElement {
        tau(self.pa.theta_star(), i, &self.pa.theta_star()[j])
    }

    pub fn eta_s(&self, i: usize, j: usize) -> FieldElement {
        eta(self.pa.theta_star(), i, &self.pa.theta_star()[j])
    }

    /// τ_d(θ_d).
    pub fn td(&self) -> FieldElement {
        self.tau(self.d, self.d)
    }

    /// η_d(θ_0).
    pub fn n0(&self) -> FieldElement {
        self.eta(self.d, 0)
    }

    /// τ*_d(θ*_d).
    pub fn tsd(&self) -> FieldElement {
        self.tau_s(self.d, self.d)
    }

    /// η*_d(θ*_0).
    pub fn ns0(&self) -> FieldElement {
        self.eta_s(self.d, 0)
    }

    /// τ_r(θ_r) η_{d-r}(θ_r).
    pub fn k_a(&self, r: usize) -> FieldElement {
        &self.tau(r, r) * &self.eta(self.d - r, r)
    }

    /// τ*_r(θ*_r) η*_{d-r}(θ*_r).
    pub fn k_s(&self, r: usize) -> FieldElement {
        &self.tau_s(r, r) * &self.eta_s(self.d - r, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_products() {
        let f = Field::rational();
        let n = |x: i64| f.from_i64(x);
        let pa = ParameterArray::new(f, vec![n(0), n(1), n(2)], vec![n(0), n(1), n(2)], vec![n(2), n(3)], vec![n(5), n(7)]).unwrap();
        let s = Scalars::new(&pa);
        assert_eq!(s.vp_left(0), n(1));
        assert_eq!(s.vp_left(1), n(2));
        assert_eq!(s.vp_right(1), n(3));
        assert_eq!(s.ph_right(2), n(35));
        assert_eq!(s.ph_left(1), n(5));
        // τ_2(θ_2) = (2-0)(2-1), η_2(θ_0) = (0-2)(0-1)
        assert_eq!(s.td(), n(2));
        assert_eq!(s.n0(), n(2));
        // τ_1(θ_1) η_1(θ_1) = (1-0)(1-2)
        assert_eq!(s.k_a(1), n(-1));
    }
}
