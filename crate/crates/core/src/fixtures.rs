//! Small named examples used by tests, the acceptance suite and the CLI corpus.

use std::sync::Arc;

use crate::algebra::{Algebra, Triple};
use crate::coalgebra::{comatrix_coalgebra, Coalgebra};
use crate::graded::{GradedCategory, GradedSpace};
use crate::linalg::{Field, Scalar};

fn build(space: GradedSpace, triples: &[(usize, usize, usize, i64)], unit: &[i64]) -> Algebra {
    let field = space.field();
    let triples: Vec<Triple> = triples
        .iter()
        .map(|&(i, j, k, c)| (i, j, k, field.from_i64(c)))
        .collect();
    let unit: Vec<Scalar> = unit.iter().map(|&c| field.from_i64(c)).collect();
    Algebra::from_structure_constants(space, &triples, &unit).expect("fixture is valid")
}

/// 2×2 matrices with basis `E11, E12, E21, E22` (index `2a + b`).
pub fn m2(field: Field) -> Algebra {
    let cat = GradedCategory::ungraded(field);
    let mut t = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                t.push((2 * a + b, 2 * b + d, 2 * a + d, 1));
            }
        }
    }
    build(GradedSpace::even(&cat, 4), &t, &[1, 0, 0, 1])
}

/// `k × k` with orthogonal idempotents.
pub fn q_times_q(field: Field) -> Algebra {
    let cat = GradedCategory::ungraded(field);
    build(
        GradedSpace::even(&cat, 2),
        &[(0, 0, 0, 1), (1, 1, 1, 1)],
        &[1, 1],
    )
}

/// `k[x]/(x²)`.
pub fn dual_numbers(field: Field) -> Algebra {
    let cat = GradedCategory::ungraded(field);
    build(
        GradedSpace::even(&cat, 2),
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
        &[1, 0],
    )
}

/// Hamilton quaternions, basis `1, i, j, k`.
pub fn quaternions(field: Field) -> Algebra {
    let cat = GradedCategory::ungraded(field);
    let mut t = vec![(0, 0, 0, 1)];
    for u in 1..4 {
        t.push((0, u, u, 1));
        t.push((u, 0, u, 1));
        t.push((u, u, 0, -1));
    }
    t.extend([
        (1, 2, 3, 1),
        (2, 1, 3, -1),
        (2, 3, 1, 1),
        (3, 2, 1, -1),
        (3, 1, 2, 1),
        (1, 3, 2, -1),
    ]);
    build(GradedSpace::even(&cat, 4), &t, &[1, 0, 0, 0])
}

fn clifford_table() -> [(usize, usize, usize, i64); 4] {
    [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)]
}

/// `{1, x}` with `x² = 1`, `x` odd, in super vector spaces.
pub fn super_cl1(field: Field) -> Algebra {
    let cat = GradedCategory::super_vector_spaces(field);
    let space = GradedSpace::new(&cat, vec![cat.group().zero(), odd(&cat)]).expect("ℤ/2");
    build(space, &clifford_table(), &[1, 0])
}

/// The same multiplication table with trivial grading.
pub fn cl1_trivial(field: Field) -> Algebra {
    let cat = GradedCategory::ungraded(field);
    build(GradedSpace::even(&cat, 2), &clifford_table(), &[1, 0])
}

fn odd(cat: &Arc<GradedCategory>) -> crate::graded::GroupElement {
    cat.group().element(&[1]).expect("cyclic group")
}

/// `k[x]/(x³ − 1)` with `x` of degree 1 in `ℤ/3`-graded spaces with `χ(1,1) = q`.
pub fn cyclic_cubic(field: Field, q: Scalar) -> Algebra {
    let cat = GradedCategory::cyclic(field, 3, q).expect("q³ = 1");
    let space = GradedSpace::new(
        &cat,
        (0..3).map(|d| cat.group().element(&[d]).unwrap()).collect(),
    )
    .expect("ℤ/3");
    let mut t = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            t.push((i, j, (i + j) % 3, 1));
        }
    }
    build(space, &t, &[1, 0, 0])
}

/// The ground field.
pub fn ground(field: Field) -> Algebra {
    Algebra::ground(&GradedCategory::ungraded(field))
}

/// The comatrix coalgebra on an ungraded plane.
pub fn m2_comatrix(field: Field) -> Coalgebra {
    comatrix_coalgebra(&GradedSpace::even(&GradedCategory::ungraded(field), 2))
        .expect("comatrix coalgebra is valid")
}

/// Two group-like elements.
pub fn grouplike(field: Field, n: usize) -> Coalgebra {
    let cat = GradedCategory::ungraded(field);
    let triples: Vec<Triple> = (0..n).map(|i| (i, i, i, field.one())).collect();
    Coalgebra::from_structure_constants(GradedSpace::even(&cat, n), &triples, &vec![field.one(); n])
        .expect("group-like coalgebra is valid")
}

/// The one-dimensional coalgebra `k`.
pub fn trivial_coalgebra(field: Field) -> Coalgebra {
    grouplike(field, 1)
}
