//! Fixed instances shared by the benchmarks.

use leonard_core::catalog;
use leonard_core::{anchor_vectors, compute_gram, AnchorVectors, Field, GramForm, LeonardSystem, Matrix};

/// A catalog system of diameter `d` with its Gram form and anchors.
pub fn instance(field: Field, d: usize) -> (LeonardSystem, GramForm, AnchorVectors) {
    let pa = catalog::sample(field, d).expect("catalog covers d");
    let sys = LeonardSystem::from_split_form(&pa).expect("catalog arrays are valid");
    let g = compute_gram(&sys).expect("gram form");
    let anchors = anchor_vectors(&sys, None).expect("anchors");
    (sys, g, anchors)
}

/// A dense invertible matrix: the product of the system's A and A*, shifted by the identity.
pub fn dense(field: Field, d: usize) -> Matrix {
    let (sys, _, _) = instance(field, d);
    let m = sys.a().checked_mul(sys.a_star()).unwrap();
    m.checked_add(&Matrix::identity(field, d + 1)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_build() {
        for d in [3, 5] {
            let (sys, _, _) = instance(Field::rational(), d);
            assert_eq!(sys.d(), d);
        }
        assert_eq!(dense(Field::prime(101).unwrap(), 4).rows(), 5);
    }
}
