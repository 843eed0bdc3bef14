//! Splittings: conservativity, separability and the progenerator conditions.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::coalgebra::matrix_algebra;
use crate::error::{ensure, Result};
use crate::graded::{braiding_inverse, compose_all, left_dual, tensor_all, GradedMap, GradedSpace};
use crate::linalg::{Matrix, Scalar, Vector};

/// `V ⊗ −` is conservative iff `V ≠ 0`; decided both by `ev` being onto `I`
/// and by `db` being injective, and the two answers must agree.
pub fn conservativity_check(v: &GradedSpace) -> Result<bool> {
    let ld = left_dual(v);
    let ev_onto = ld.ev.rank() == 1;
    let db_mono = ld.db.rank() == 1;
    ensure(ev_onto == db_mono, || {
        format!("ev surjective = {ev_onto} but db injective = {db_mono}")
    })?;
    Ok(ev_onto)
}

/// A degree-0 vector `x ∈ space` with `m x = b`, free variables zeroed.
pub(crate) fn solve_degree_zero(
    space: &GradedSpace,
    m: &Matrix,
    b: &[Scalar],
) -> Result<Option<Vector>> {
    let zero = space.category().group().zero();
    let vars: Vec<usize> = (0..space.dim())
        .filter(|&i| space.degree(i) == &zero)
        .collect();
    let field = space.field();
    let restricted = Matrix::from_fn(field, m.rows(), vars.len(), |i, j| {
        m.get(i, vars[j]).clone()
    });
    Ok(restricted.solve(b)?.map(|sol| {
        let mut x = vec![field.zero(); space.dim()];
        for (j, &v) in vars.iter().enumerate() {
            x[v] = sol[j].clone();
        }
        x
    }))
}

/// Left multiplication `x ⊗ y ↦ (e_a x) ⊗ y` and right multiplication
/// `x ⊗ y ↦ x ⊗ (y e_a)` on `A ⊗ A`.
fn outer_multiplications(a: &Algebra, basis: usize) -> (Matrix, Matrix) {
    let n = a.dim();
    let field = a.field();
    let m = a.mult().matrix();
    let left = Matrix::from_fn(field, n * n, n * n, |row, col| {
        let (p, q) = (row / n, row % n);
        let (x, y) = (col / n, col % n);
        if q == y {
            m.get(p, basis * n + x).clone()
        } else {
            field.zero()
        }
    });
    let right = Matrix::from_fn(field, n * n, n * n, |row, col| {
        let (p, q) = (row / n, row % n);
        let (x, y) = (col / n, col % n);
        if p == x {
            m.get(q, y * n + basis).clone()
        } else {
            field.zero()
        }
    });
    (left, right)
}

/// Checks `m ∘ ξ = id` and `(A ⊗ m)(ξ ⊗ A) = ξ ∘ m = (m ⊗ A)(A ⊗ ξ)`.
pub fn verify_separability(a: &Algebra, xi: &GradedMap) -> Result<bool> {
    let id = GradedMap::identity(a.space());
    let m = a.mult();
    let section = m.compose(xi)?;
    let left = compose_all(&[&id.tensor(m)?, &xi.tensor(&id)?])?;
    let mid = xi.compose(m)?;
    let right = compose_all(&[&m.tensor(&id)?, &id.tensor(xi)?])?;
    Ok(section.matrix().is_identity() && left == mid && mid == right)
}

/// A bimodule section `ξ : A → A ⊗ A` of `m`, if one exists.
///
/// Such a `ξ` is `a ↦ a·p = p·a` for the degree-0 element `p = ξ(1)` with
/// `m(p) = 1`, so the solve runs over `p`; the result is re-verified against
/// the full system.
pub fn separability(a: &Algebra) -> Result<Option<GradedMap>> {
    let n = a.dim();
    let field = a.field();
    let a2 = a.space().tensor(a.space())?;
    let (system, rhs, lefts) = separability_system(a);
    let Some(p) = solve_degree_zero(&a2, &system, &rhs)? else {
        return Ok(None);
    };
    let columns: Vec<Vector> = lefts.iter().map(|l| l.apply(&p)).collect();
    let xi = GradedMap::new(
        a.space().clone(),
        a2,
        Matrix::from_columns(field, n * n, &columns),
    )?;
    ensure(verify_separability(a, &xi)?, || {
        "separability element does not give a bimodule section".into()
    })?;
    Ok(Some(xi))
}

/// The stacked system `(L_a − R_a) p = 0`, `m(p) = 1`, plus the left multiplications.
fn separability_system(a: &Algebra) -> (Matrix, Vector, Vec<Matrix>) {
    let n = a.dim();
    let field = a.field();
    let mut blocks = Vec::with_capacity(n + 1);
    let mut rhs = Vec::new();
    let mut lefts = Vec::with_capacity(n);
    for basis in 0..n {
        let (l, r) = outer_multiplications(a, basis);
        blocks.push(l.sub(&r));
        rhs.extend(std::iter::repeat_n(field.zero(), n * n));
        lefts.push(l);
    }
    blocks.push(a.mult().matrix().clone());
    rhs.extend(a.unit_vector());
    (Matrix::vstack(&blocks), rhs, lefts)
}

/// Ranks of the degree-0 separability system and of its augmented matrix.
/// They differ exactly when no separability element exists.
pub fn separability_ranks(a: &Algebra) -> Result<(usize, usize)> {
    let a2 = a.space().tensor(a.space())?;
    let (system, rhs, _) = separability_system(a);
    let zero = a.category().group().zero();
    let vars: Vec<usize> = (0..a2.dim()).filter(|&i| a2.degree(i) == &zero).collect();
    let field = a.field();
    let coefficient = Matrix::from_fn(field, system.rows(), vars.len(), |i, j| {
        system.get(i, vars[j]).clone()
    });
    let augmented = Matrix::from_fn(field, system.rows(), vars.len() + 1, |i, j| {
        if j < vars.len() {
            system.get(i, vars[j]).clone()
        } else {
            rhs[i].clone()
        }
    });
    Ok((coefficient.rank(), augmented.rank()))
}

/// Outcome of the six progenerator conditions for the underlying object of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgeneratorReport {
    /// `ev : A* ⊗ A → I` is a split epimorphism.
    pub ev_split: bool,
    /// `db : I → A ⊗ A*` is a split monomorphism.
    pub db_split: bool,
    /// `τ⁻¹_{A*,A} ∘ db : I → A* ⊗ A` is a split monomorphism.
    pub db_twisted_split: bool,
    /// `e : I → A` is a split monomorphism.
    pub unit_split: bool,
    /// `A ⊗ −` is conservative.
    pub conservative: bool,
    /// `S_{A,A*}` is nonzero and separable.
    pub matrix_algebra_separable: bool,
    pub witnesses: BTreeMap<String, Matrix>,
}

impl ProgeneratorReport {
    pub fn conditions(&self) -> [bool; 6] {
        [
            self.ev_split,
            self.db_split,
            self.db_twisted_split,
            self.unit_split,
            self.conservative,
            self.matrix_algebra_separable,
        ]
    }
}

/// Degree-0 functional `r` on `target` with `r(x) = 1`.
fn retraction(target: &GradedSpace, x: &[Scalar]) -> Result<Option<Vector>> {
    let field = target.field();
    let row = Matrix::from_fn(field, 1, x.len(), |_, j| x[j].clone());
    solve_degree_zero(target, &row, &[field.one()])
}

pub fn progenerator_checks(a: &Algebra) -> Result<ProgeneratorReport> {
    let s = a.space();
    let field = a.field();
    let ld = left_dual(s);
    let mut witnesses = BTreeMap::new();
    let one = [field.one()];

    // (1) ζ : I → A* ⊗ A with ev ∘ ζ = 1.
    let dual_a = ld.dual.tensor(s)?;
    let zeta = solve_degree_zero(&dual_a, ld.ev.matrix(), &one)?
        .map(|z| GradedMap::from_vector(&dual_a, &z))
        .transpose()?;
    if let Some(z) = &zeta {
        witnesses.insert("ev_splitting".into(), z.matrix().clone());
    }

    // (2) r ∘ db = 1.
    let a_dual = s.tensor(&ld.dual)?;
    let db_retraction = retraction(&a_dual, &ld.db.matrix().column(0))?;
    if let Some(r) = &db_retraction {
        witnesses.insert(
            "db_retraction".into(),
            Matrix::from_fn(field, 1, r.len(), |_, j| r[j].clone()),
        );
    }

    // (3) r ∘ τ⁻¹_{A*,A} ∘ db = 1.
    let twisted = braiding_inverse(&ld.dual, s)?.compose(&ld.db)?;
    let twisted_retraction = retraction(&dual_a, &twisted.matrix().column(0))?;
    if let Some(r) = &twisted_retraction {
        witnesses.insert(
            "twisted_db_retraction".into(),
            Matrix::from_fn(field, 1, r.len(), |_, j| r[j].clone()),
        );
    }

    // (4) r ∘ e = 1, cross-checked against φ = ev (A* ⊗ m)(ζ ⊗ A).
    let unit_retraction = retraction(s, &a.unit_vector())?;
    if let Some(r) = &unit_retraction {
        witnesses.insert(
            "unit_retraction".into(),
            Matrix::from_fn(field, 1, r.len(), |_, j| r[j].clone()),
        );
    }
    if let Some(z) = &zeta {
        let ia = GradedMap::identity(s);
        let idual = GradedMap::identity(&ld.dual);
        let phi = compose_all(&[&ld.ev, &idual.tensor(a.mult())?, &z.tensor(&ia)?])?;
        ensure(phi.compose(a.unit())?.matrix().is_identity(), || {
            "φ built from the ev splitting is not a retraction of the unit".into()
        })?;
        witnesses.insert("unit_retraction_from_ev".into(), phi.into_matrix());
    }

    // (5)
    let conservative = conservativity_check(s)?;

    // (6) ξ = A ⊗ ζ ⊗ A* on S_{A,A*}; the solver is the fallback when ζ is absent.
    let sa = matrix_algebra(s)?;
    let mut sep_witness = None;
    if let Some(z) = &zeta {
        let ia = GradedMap::identity(s);
        let idual = GradedMap::identity(&ld.dual);
        let xi = tensor_all(&[&ia, z, &idual])?;
        let xi = GradedMap::new(
            sa.space().clone(),
            sa.space().tensor(sa.space())?,
            xi.into_matrix(),
        )?;
        ensure(verify_separability(&sa, &xi)?, || {
            "A ⊗ ζ ⊗ A* is not a separability witness for the matrix algebra".into()
        })?;
        sep_witness = Some(xi);
    }
    if sep_witness.is_none() {
        sep_witness = separability(&sa)?;
    }
    let matrix_algebra_separable = !sa.is_zero() && sep_witness.is_some();
    if let (true, Some(xi)) = (matrix_algebra_separable, sep_witness) {
        witnesses.insert("matrix_algebra_separability".into(), xi.into_matrix());
    }

    let report = ProgeneratorReport {
        ev_split: zeta.is_some(),
        db_split: db_retraction.is_some(),
        db_twisted_split: twisted_retraction.is_some(),
        unit_split: unit_retraction.is_some(),
        conservative,
        matrix_algebra_separable,
        witnesses,
    };
    let [c1, c2, c3, c4, c5, c6] = report.conditions();
    ensure(c1 == c2 && c2 == c3 && c3 == c4, || {
        format!("progenerator conditions (1)-(4) disagree: {c1} {c2} {c3} {c4}")
    })?;
    ensure(!c1 || (c5 && c6), || {
        format!("condition (1) holds but (5) = {c5}, (6) = {c6}")
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graded::GradedCategory;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn conservativity() {
        let cat = GradedCategory::ungraded(Q);
        assert!(!conservativity_check(&GradedSpace::even(&cat, 0)).unwrap());
        assert!(conservativity_check(&GradedSpace::even(&cat, 1)).unwrap());
        assert!(conservativity_check(fixtures::super_cl1(Q).space()).unwrap());
    }

    #[test]
    fn separability_examples() {
        let k = fixtures::ground(Q);
        let xi = separability(&k).unwrap().unwrap();
        assert!(xi.matrix().is_identity());

        let m2 = fixtures::m2(Q);
        assert!(separability(&m2).unwrap().is_some());
        // ξ(a) = a · Σᵢ Eᵢ₁ ⊗ E₁ᵢ.
        let mut p = vec![Q.zero(); 16];
        p[0] = Q.one(); // E11 ⊗ E11
        p[2 * 4 + 1] = Q.one(); // E21 ⊗ E12
        let cols: Vec<Vector> = (0..4)
            .map(|b| {
                let (l, _) = outer_multiplications(&m2, b);
                l.apply(&p)
            })
            .collect();
        let a2 = m2.space().tensor(m2.space()).unwrap();
        let xi =
            GradedMap::new(m2.space().clone(), a2, Matrix::from_columns(Q, 16, &cols)).unwrap();
        assert!(verify_separability(&m2, &xi).unwrap());

        assert!(separability(&fixtures::dual_numbers(Q)).unwrap().is_none());
        assert!(separability(&fixtures::q_times_q(Q)).unwrap().is_some());
        assert!(separability(&fixtures::super_cl1(Q)).unwrap().is_some());
    }

    #[test]
    fn progenerator_examples() {
        let cat = GradedCategory::ungraded(Q);
        let zero = Algebra::zero(&cat);
        assert_eq!(progenerator_checks(&zero).unwrap().conditions(), [false; 6]);
        for a in [
            fixtures::m2(Q),
            fixtures::ground(Q),
            fixtures::dual_numbers(Q),
            fixtures::super_cl1(Q),
        ] {
            assert_eq!(progenerator_checks(&a).unwrap().conditions(), [true; 6]);
        }
    }
}
