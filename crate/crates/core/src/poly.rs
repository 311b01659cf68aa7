//! Univariate polynomials over a [`Field`]: characteristic polynomials and
//! roots in the ground field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, FieldElement};
use crate::matrix::{Matrix, MatrixError};

/// Coefficients lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_roots(field: Field, roots: &[FieldElement]) -> Poly {
        let mut p = Poly::new(field, vec![field.one()]);
        for r in roots {
            p = p.mul_linear(r);
        }
        p
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `self * (X - r)`.
    fn mul_linear(&self, r: &FieldElement) -> Poly {
        let mut out = vec![self.field.zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] = &out[k + 1] + c;
            out[k] = &out[k] - &(c * r);
        }
        Poly::new(self.field, out)
    }

    fn sub_scaled_shift(&self, other: &Poly, c: &FieldElement) -> Poly {
        // self - c * other
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&z);
                let b = other.coeffs.get(k).unwrap_or(&z);
                a - &(c * b)
            })
            .collect();
        Poly::new(self.field, out)
    }

    /// Synthetic division by `(X - r)`; returns the quotient when `r` is a root.
    fn deflate(&self, r: &FieldElement) -> Option<Poly> {
        let n = self.coeffs.len();
        if n < 2 {
            return None;
        }
        let mut q = vec![self.field.zero(); n - 1];
        let mut carry = self.field.zero();
        for k in (1..n).rev() {
            carry = &(&carry * r) + &self.coeffs[k];
            q[k - 1] = carry.clone();
        }
        let rem = &(&carry * r) + &self.coeffs[0];
        rem.is_zero().then(|| Poly::new(self.field, q))
    }

    /// Roots in the ground field with multiplicities, in increasing order of
    /// discovery. Over GF(p) every residue is tried; over ℚ the rational
    /// root theorem supplies the candidates.
    pub fn roots(&self) -> Vec<(FieldElement, usize)> {
        if self.degree().is_none_or(|d| d == 0) {
            return Vec::new();
        }
        let candidates: Vec<FieldElement> = match self.field.modulus() {
            Some(p) => (0..p).map(|v| self.field.from_i64(v as i64)).collect(),
            None => rational_candidates(self),
        };
        let mut rest = self.clone();
        let mut out = Vec::new();
        for r in candidates {
            let mut mult = 0;
            while let Some(q) = rest.deflate(&r) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((r, mult));
            }
            if rest.degree() == Some(0) {
                break;
            }
        }
        out
    }
}

fn rational_candidates(p: &Poly) -> Vec<FieldElement> {
    let field = p.field;
    // clear denominators
    let lcm = p
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational field").denom().clone())
        .fold(BigInt::one(), |a, b| a.lcm(&b));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| {
            let q = c.as_rational().unwrap();
            q.numer() * (&lcm / q.denom())
        })
        .collect();
    let mut out = vec![field.zero()];
    // strip the factor X^k so the constant term is nonzero
    let Some(low) = ints.iter().position(|c| !c.is_zero()) else {
        return out;
    };
    let c0 = ints[low].abs();
    let cn = ints.last().unwrap().abs();
    let nums = divisors(&c0);
    let dens = divisors(&cn);
    let mut seen = std::collections::BTreeSet::new();
    for a in &nums {
        for b in &dens {
            if !a.gcd(b).is_one() {
                continue;
            }
            for s in [a.clone(), -a.clone()] {
                if seen.insert((s.clone(), b.clone())) {
                    let r = field.from_bigint(&s).checked_div(&field.from_bigint(b)).unwrap();
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Positive divisors by trial division; fine for the magnitudes that arise
/// from desk-scale eigenvalue products.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut k = BigInt::from(2);
    while &k * &k <= m {
        let mut e = 0;
        while (&m % &k).is_zero() {
            m /= &k;
            e += 1;
        }
        if e > 0 {
            primes.push((k.clone(), e));
        }
        k += 1;
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut x = d.clone();
            for _ in 0..=e {
                next.push(x.clone());
                x *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Characteristic polynomial `det(X I - M)` via reduction to upper
/// Hessenberg form followed by the standard determinant recurrence.
pub fn characteristic_polynomial(m: &Matrix) -> Result<Poly, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let field = m.field();
    let n = m.rows();
    let mut h: Vec<Vec<FieldElement>> = (0..n).map(|i| m.row(i).to_vec()).collect();

    for k in 0..n.saturating_sub(2) {
        let Some(p) = (k + 1..n).find(|&i| !h[i][k].is_zero()) else {
            continue;
        };
        if p != k + 1 {
            h.swap(p, k + 1);
            for row in h.iter_mut() {
                row.swap(p, k + 1);
            }
        }
        let pivot_inv = h[k + 1][k].inv().expect("nonzero pivot");
        for j in k + 2..n {
            if h[j][k].is_zero() {
                continue;
            }
            let u = &h[j][k] * &pivot_inv;
            let pivot_row = h[k + 1].clone();
            for (x, y) in h[j].iter_mut().zip(&pivot_row) {
                *x = &*x - &(&u * y);
            }
            for row in h.iter_mut() {
                let x = &row[k + 1] + &(&u * &row[j]);
                row[k + 1] = x;
            }
        }
    }

    // p[m] is the characteristic polynomial of the leading m x m block.
    let mut p: Vec<Poly> = vec![Poly::new(field, vec![field.one()])];
    for mm in 1..=n {
        let hmm = &h[mm - 1][mm - 1];
        let mut next = p[mm - 1].mul_linear(hmm);
        let mut sub = field.one();
        for i in (1..mm).rev() {
            sub = &sub * &h[i][i - 1];
            let coeff = &h[i - 1][mm - 1] * &sub;
            next = next.sub_scaled_shift(&p[i - 1], &coeff);
        }
        p.push(next);
    }
    Ok(p.pop().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::tests::{arb_field, arb_matrix};
    use proptest::prelude::*;

    fn q() -> Field {
        Field::rational()
    }

    #[test]
    fn roots_of_product_form() {
        let f = q();
        let rs = [f.ratio(1, 2).unwrap(), f.from_i64(-3), f.from_i64(-3), f.zero()];
        let p = Poly::from_roots(f, &rs);
        let mut got = p.roots();
        got.sort_by_key(|(r, _)| r.to_string());
        assert_eq!(got, vec![(f.from_i64(-3), 2), (f.zero(), 1), (f.ratio(1, 2).unwrap(), 1)]);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_roots() {
        // x^2 + 1
        let p = Poly::new(q(), vec![q().one(), q().zero(), q().one()]);
        assert!(p.roots().is_empty());
        // but over GF(5), 2 and 3 are roots
        let f = Field::prime(5).unwrap();
        let p = Poly::new(f, vec![f.one(), f.zero(), f.one()]);
        assert_eq!(p.roots(), vec![(f.from_i64(2), 1), (f.from_i64(3), 1)]);
    }

    #[test]
    fn charpoly_of_companion_like_matrix() {
        let m = Matrix::from_i64(q(), &[&[0, -1], &[1, 0]]).unwrap();
        let p = characteristic_polynomial(&m).unwrap();
        assert_eq!(p.coeffs(), &[q().one(), q().zero(), q().one()]);
    }

    fn det_oracle(m: &Matrix, x: &FieldElement) -> FieldElement {
        let n = m.rows();
        (&(&Matrix::identity(m.field(), n) * x) - m).determinant().unwrap()
    }

    proptest! {
        #[test]
        fn charpoly_matches_determinant(m in (arb_field(), 1usize..6).prop_flat_map(|(f, n)| arb_matrix(f, n, n))) {
            let p = characteristic_polynomial(&m).unwrap();
            prop_assert_eq!(p.degree(), Some(m.rows()));
            prop_assert!(p.coeffs().last().unwrap().is_one());
            for t in -3..4 {
                let x = m.field().from_i64(t);
                prop_assert_eq!(p.eval(&x), det_oracle(&m, &x));
            }
        }

        #[test]
        fn roots_are_recovered(raw in proptest::collection::vec((-12i64..12, 1i64..4), 1..6)) {
            let f = q();
            let rs: Vec<FieldElement> = raw.iter().map(|&(n, d)| f.ratio(n, d).unwrap()).collect();
            let found = Poly::from_roots(f, &rs).roots();
            let total: usize = found.iter().map(|(_, k)| k).sum();
            prop_assert_eq!(total, rs.len());
            for (r, k) in &found {
                prop_assert_eq!(rs.iter().filter(|x| *x == r).count(), *k);
            }
        }
    }
}
