//! Seeded generators of graded spaces, algebras, modules and comodules.
//!
//! Every generator draws from a caller-owned [`ChaCha8Rng`], so a seed fixes
//! the whole sequence of objects.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::algebra::{Algebra, Module, Side, Triple};
use crate::coalgebra::{Coalgebra, Comodule};
use crate::error::Result;
use crate::graded::{GradedCategory, GradedMap, GradedSpace, GradingGroup, GroupElement};
use crate::linalg::{Field, Matrix, Scalar};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over `F_p`; integers in `[-3, 3]` over `ℚ`.
pub fn scalar(rng: &mut Rng64, field: Field) -> Scalar {
    match field {
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
    }
}

/// A cyclic grading group of order in `{1, 2, 3, 6}` with `χ(1,1) = q` for a random
/// `q` satisfying `qⁿ = 1`.
pub fn category(rng: &mut Rng64, field: Field) -> Arc<GradedCategory> {
    let n = *[1u64, 2, 3, 6].choose(rng).expect("nonempty");
    if n == 1 {
        return GradedCategory::ungraded(field);
    }
    let roots: Vec<Scalar> = match field {
        Field::Prime(p) => (1..p as i64)
            .map(|v| field.from_i64(v))
            .filter(|q| q.pow(n as i64).is_one())
            .collect(),
        Field::Rational => {
            let mut r = vec![field.one()];
            if n.is_multiple_of(2) {
                r.push(field.from_i64(-1));
            }
            r
        }
    };
    let q = roots.choose(rng).expect("1 is a root").clone();
    GradedCategory::cyclic(field, n, q).expect("qⁿ = 1")
}

pub fn degree(rng: &mut Rng64, cat: &GradedCategory) -> GroupElement {
    cat.group()
        .elements()
        .choose(rng)
        .expect("nonempty group")
        .clone()
}

pub fn space(rng: &mut Rng64, cat: &Arc<GradedCategory>, dim: usize) -> GradedSpace {
    let degrees = (0..dim).map(|_| degree(rng, cat)).collect();
    GradedSpace::new(cat, degrees).expect("degrees drawn from the group")
}

/// A random invertible degree-0 endomorphism of `space`, block diagonal by degree.
pub fn automorphism(rng: &mut Rng64, space: &GradedSpace) -> GradedMap {
    let field = space.field();
    let n = space.dim();
    let mut m = Matrix::zeros(field, n, n);
    let mut seen: Vec<&GroupElement> = Vec::new();
    for g in space.degrees() {
        if seen.contains(&g) {
            continue;
        }
        seen.push(g);
        let idx: Vec<usize> = (0..n).filter(|&i| space.degree(i) == g).collect();
        let block = loop {
            let b = Matrix::from_fn(field, idx.len(), idx.len(), |_, _| scalar(rng, field));
            if b.rank() == idx.len() {
                break b;
            }
        };
        for (r, &i) in idx.iter().enumerate() {
            for (c, &j) in idx.iter().enumerate() {
                m.set(i, j, block.get(r, c).clone());
            }
        }
    }
    GradedMap::new(space.clone(), space.clone(), m).expect("block diagonal by degree")
}

fn multiply(group: &GradingGroup, g: &GroupElement, k: usize) -> GroupElement {
    (0..k).fold(group.zero(), |acc, _| group.add(&acc, g))
}

/// `k[x]/(xᵐ − Σ cᵢ xⁱ)` with `x` of degree `g`; `cᵢ` vanishes unless `(m − i)g = 0`.
fn monogenic(rng: &mut Rng64, cat: &Arc<GradedCategory>, m: usize) -> Result<Algebra> {
    let field = cat.field();
    let group = cat.group();
    let g = degree(rng, cat);
    let coeffs: Vec<Scalar> = (0..m)
        .map(|i| {
            if multiply(group, &g, m - i) == group.zero() {
                scalar(rng, field)
            } else {
                field.zero()
            }
        })
        .collect();
    // powers[k] = coordinates of xᵏ in the basis 1, x, …, x^{m−1}.
    let mut powers: Vec<Vec<Scalar>> = Vec::with_capacity(2 * m);
    for k in 0..2 * m - 1 {
        if k < m {
            let mut v = vec![field.zero(); m];
            v[k] = field.one();
            powers.push(v);
        } else {
            let prev = &powers[k - 1];
            let mut v = vec![field.zero(); m];
            v[1..m].clone_from_slice(&prev[..m - 1]);
            let top = prev[m - 1].clone();
            for i in 0..m {
                v[i] = &v[i] + &(&top * &coeffs[i]);
            }
            powers.push(v);
        }
    }
    let mut triples: Vec<Triple> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for (k, c) in powers[i + j].iter().enumerate() {
                if !c.is_zero() {
                    triples.push((i, j, k, c.clone()));
                }
            }
        }
    }
    let degrees = (0..m).map(|i| multiply(group, &g, i)).collect();
    let space = GradedSpace::new(cat, degrees)?;
    let mut unit = vec![field.zero(); m];
    unit[0] = field.one();
    Algebra::from_structure_constants(space, &triples, &unit)
}

/// `k ⊕ V` with `V² = 0`.
fn square_zero(rng: &mut Rng64, cat: &Arc<GradedCategory>, v: usize) -> Result<Algebra> {
    let field = cat.field();
    let mut degrees = vec![cat.group().zero()];
    degrees.extend((0..v).map(|_| degree(rng, cat)));
    let space = GradedSpace::new(cat, degrees)?;
    let mut triples: Vec<Triple> = vec![(0, 0, 0, field.one())];
    for i in 1..=v {
        triples.push((0, i, i, field.one()));
        triples.push((i, 0, i, field.one()));
    }
    let mut unit = vec![field.zero(); v + 1];
    unit[0] = field.one();
    Algebra::from_structure_constants(space, &triples, &unit)
}

/// Upper triangular 2×2 matrices with the off-diagonal unit of a random degree.
fn upper_triangular(rng: &mut Rng64, cat: &Arc<GradedCategory>) -> Result<Algebra> {
    let field = cat.field();
    let zero = cat.group().zero();
    let space = GradedSpace::new(cat, vec![zero.clone(), degree(rng, cat), zero])?;
    let one = field.one();
    // e11 = 0, e12 = 1, e22 = 2.
    let triples: Vec<Triple> = vec![
        (0, 0, 0, one.clone()),
        (0, 1, 1, one.clone()),
        (1, 2, 1, one.clone()),
        (2, 2, 2, one.clone()),
    ];
    Algebra::from_structure_constants(space, &triples, &[one.clone(), field.zero(), one])
}

/// Direct product of algebras in the same category.
pub fn product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let (p, q) = (a.dim(), b.dim());
    let mut degrees = a.space().degrees().to_vec();
    degrees.extend_from_slice(b.space().degrees());
    let space = GradedSpace::new(a.category(), degrees)?;
    let mut triples = a.structure_constants();
    triples.extend(
        b.structure_constants()
            .into_iter()
            .map(|(i, j, k, c)| (i + p, j + p, k + p, c)),
    );
    let mut unit = a.unit_vector();
    unit.extend(b.unit_vector());
    debug_assert_eq!(unit.len(), p + q);
    Algebra::from_structure_constants(space, &triples, &unit)
}

fn base_algebra(rng: &mut Rng64, cat: &Arc<GradedCategory>, max_dim: usize) -> Result<Algebra> {
    let choice = rng.gen_range(0..6);
    match (choice, max_dim) {
        (_, 1) | (0, _) => Ok(Algebra::ground(cat)),
        (1, _) => monogenic(rng, cat, 2),
        (2, 2) => square_zero(rng, cat, 1),
        (2, _) => {
            let v = rng.gen_range(1..=2);
            square_zero(rng, cat, v)
        }
        (3, 2) | (4, 2) => monogenic(rng, cat, 2),
        (3, _) => monogenic(rng, cat, 3),
        (4, _) => upper_triangular(rng, cat),
        _ => {
            let first = base_algebra(rng, cat, max_dim - 1)?;
            let second = base_algebra(rng, cat, max_dim - first.dim())?;
            product(&first, &second)
        }
    }
}

/// A valid algebra of dimension at most `max_dim` (at most 3 is supported),
/// drawn from a catalogue of graded families and presented in a random basis.
pub fn algebra(rng: &mut Rng64, cat: &Arc<GradedCategory>, max_dim: usize) -> Result<Algebra> {
    let a = base_algebra(rng, cat, max_dim.clamp(1, 3))?;
    let iso = automorphism(rng, a.space());
    a.transport(&iso)
}

/// A random category followed by a random algebra in it.
pub fn graded_algebra(rng: &mut Rng64, field: Field, max_dim: usize) -> Result<Algebra> {
    let cat = category(rng, field);
    algebra(rng, &cat, max_dim)
}

/// A free left module of rank `copies`, presented in a random basis.
pub fn module(rng: &mut Rng64, a: &Algebra, copies: usize) -> Result<Module> {
    let regular = Module::regular(a);
    let mut m = regular.clone();
    for _ in 1..copies.max(1) {
        m = m.direct_sum(&regular)?;
    }
    let iso = automorphism(rng, m.space());
    m.transport(&iso)
}

/// A cofree comodule `D ⊗ U` (or `U ⊗ D`) with `dim U ≤ max_extra`, in a random basis.
pub fn comodule(rng: &mut Rng64, d: &Coalgebra, side: Side, max_extra: usize) -> Result<Comodule> {
    let extra = rng.gen_range(1..=max_extra.max(1));
    let u = space(rng, d.category(), extra);
    let iu = GradedMap::identity(&u);
    let (space, coaction) = match side {
        Side::Left => (d.space().tensor(&u)?, d.comult().tensor(&iu)?),
        Side::Right => (u.tensor(d.space())?, iu.tensor(d.comult())?),
    };
    let cofree = Comodule::new(d.clone(), space, coaction, side)?;
    let iso = automorphism(rng, cofree.space());
    cofree.transport(&iso)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_algebras_are_valid_and_reproducible() {
        let f7 = Field::prime(7).unwrap();
        let mut r1 = rng(11);
        let mut r2 = rng(11);
        for _ in 0..40 {
            let a = graded_algebra(&mut r1, f7, 3).unwrap();
            let b = graded_algebra(&mut r2, f7, 3).unwrap();
            assert!(a.dim() >= 1 && a.dim() <= 3);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn generated_modules_and_comodules() {
        let q = Field::Rational;
        let mut r = rng(3);
        let a = crate::fixtures::m2(q);
        assert_eq!(module(&mut r, &a, 2).unwrap().dim(), 8);
        let d = crate::fixtures::grouplike(q, 2);
        let c = comodule(&mut r, &d, Side::Left, 3).unwrap();
        assert_eq!(c.dim() % 2, 0);
    }
}
