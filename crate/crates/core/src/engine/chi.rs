//! The comparison morphisms whose invertibility decides the Azumaya property.

use crate::algebra::{Algebra, Module, Side};
use crate::coalgebra::{matrix_algebra, Coalgebra};
use crate::error::{ensure, Error, Result};
use crate::graded::{
    braiding, compose_all, left_dual, right_dual, tensor_all, GradedMap, GradedSpace,
};

fn id(space: &GradedSpace) -> GradedMap {
    GradedMap::identity(space)
}

/// `(m ⊗ A*)(m ⊗ A ⊗ A*)(A ⊗ τ_{A,A} ⊗ A*)(A ⊗ A ⊗ db) : A ⊗ A → A ⊗ A*`.
pub fn chi0(a: &Algebra) -> Result<GradedMap> {
    let s = a.space();
    let ld = left_dual(s);
    let (ia, idual) = (id(s), id(&ld.dual));
    let tau = braiding(s, s)?;
    let m = a.mult();
    Ok(compose_all(&[
        &m.tensor(&idual)?,
        &tensor_all(&[m, &ia, &idual])?,
        &tensor_all(&[&ia, &tau, &idual])?,
        &tensor_all(&[&ia, &ia, &ld.db])?,
    ])?)
}

/// `(A^♯ ⊗ m)(A^♯ ⊗ m ⊗ A)(A^♯ ⊗ τ_{A,A} ⊗ A)(db′ ⊗ A ⊗ A) : A ⊗ A → A^♯ ⊗ A`.
pub fn chi1(a: &Algebra) -> Result<GradedMap> {
    let s = a.space();
    let rd = right_dual(s);
    let (ia, isharp) = (id(s), id(&rd.dual));
    let tau = braiding(s, s)?;
    let m = a.mult();
    Ok(compose_all(&[
        &isharp.tensor(m)?,
        &tensor_all(&[&isharp, m, &ia])?,
        &tensor_all(&[&isharp, &tau, &ia])?,
        &tensor_all(&[&rd.db, &ia, &ia])?,
    ])?)
}

/// `(A^♯ ⊗ m)(A^♯ ⊗ τ_{A,A})(A^♯ ⊗ m ⊗ A)(db′ ⊗ A ⊗ A) : A ⊗ A → A^♯ ⊗ A`.
pub fn chi_bar(a: &Algebra) -> Result<GradedMap> {
    let s = a.space();
    let rd = right_dual(s);
    let (ia, isharp) = (id(s), id(&rd.dual));
    let tau = braiding(s, s)?;
    let m = a.mult();
    Ok(compose_all(&[
        &isharp.tensor(m)?,
        &isharp.tensor(&tau)?,
        &tensor_all(&[&isharp, m, &ia])?,
        &tensor_all(&[&rd.db, &ia, &ia])?,
    ])?)
}

/// `(m ⊗ A*)(τ_{A,A} ⊗ A*)(A ⊗ m ⊗ A*)(A ⊗ A ⊗ db) : A ⊗ A → A ⊗ A*`.
pub fn chi2(a: &Algebra) -> Result<GradedMap> {
    let s = a.space();
    let ld = left_dual(s);
    let (ia, idual) = (id(s), id(&ld.dual));
    let tau = braiding(s, s)?;
    let m = a.mult();
    Ok(compose_all(&[
        &m.tensor(&idual)?,
        &tau.tensor(&idual)?,
        &tensor_all(&[&ia, m, &idual])?,
        &tensor_all(&[&ia, &ia, &ld.db])?,
    ])?)
}

/// `t = (ρ ⊗ V*)(B ⊗ db) : B → V ⊗ V*`, checked to be an algebra map into `S_{V,V*}`.
pub fn galois_map(module: &Module) -> Result<GradedMap> {
    if module.side() != Side::Left {
        return Err(Error::Precondition("Galois map needs a left module".into()));
    }
    let b = module.algebra();
    let v = module.space();
    let ld = left_dual(v);
    let t = compose_all(&[
        &module.action().tensor(&id(&ld.dual))?,
        &id(b.space()).tensor(&ld.db)?,
    ])?;
    let s = matrix_algebra(v)?;
    let t = GradedMap::new(b.space().clone(), s.space().clone(), t.into_matrix())?;
    let lhs = t.compose(b.mult())?;
    let rhs = s.mult().compose(&t.tensor(&t)?)?;
    ensure(lhs == rhs, || "Galois map is not multiplicative".into())?;
    ensure(&t.compose(b.unit())? == s.unit(), || {
        "Galois map does not preserve the unit".into()
    })?;
    Ok(t)
}

pub fn is_galois(module: &Module) -> Result<bool> {
    Ok(galois_map(module)?.is_invertible())
}

pub fn is_faithfully_galois(module: &Module) -> Result<bool> {
    Ok(is_galois(module)? && super::conservativity_check(module.space())?)
}

/// `(C ⊗ C ⊗ ev′)(C ⊗ τ_{C,C} ⊗ C^♯)(C ⊗ Δ ⊗ C^♯)(Δ ⊗ C^♯) : C ⊗ C^♯ → C ⊗ C`.
pub fn coalgebra_chi0(c: &Coalgebra) -> Result<GradedMap> {
    let s = c.space();
    let rd = right_dual(s);
    let (ic, isharp) = (id(s), id(&rd.dual));
    let tau = braiding(s, s)?;
    let d = c.comult();
    Ok(compose_all(&[
        &tensor_all(&[&ic, &ic, &rd.ev])?,
        &tensor_all(&[&ic, &tau, &isharp])?,
        &tensor_all(&[&ic, d, &isharp])?,
        &d.tensor(&isharp)?,
    ])?)
}

/// `(ev ⊗ C ⊗ C)(C* ⊗ Δ ⊗ C)(C* ⊗ τ_{C,C})(C* ⊗ Δ) : C* ⊗ C → C ⊗ C`.
pub fn coalgebra_chi(c: &Coalgebra) -> Result<GradedMap> {
    let s = c.space();
    let ld = left_dual(s);
    let (ic, idual) = (id(s), id(&ld.dual));
    let tau = braiding(s, s)?;
    let d = c.comult();
    Ok(compose_all(&[
        &tensor_all(&[&ld.ev, &ic, &ic])?,
        &tensor_all(&[&idual, d, &ic])?,
        &idual.tensor(&tau)?,
        &idual.tensor(d)?,
    ])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::canonical_actions;
    use crate::fixtures;
    use crate::linalg::{Field, Matrix};

    const Q: Field = Field::Rational;

    #[test]
    fn chi0_examples() {
        let k = fixtures::ground(Q);
        assert!(chi0(&k).unwrap().matrix().is_identity());
        assert_eq!(chi0(&fixtures::dual_numbers(Q)).unwrap().rank(), 2);
        let c = chi0(&fixtures::m2(Q)).unwrap();
        assert_eq!(c.matrix().rows(), 16);
        assert!(c.is_invertible());
    }

    /// Brute force: (a ⊗ b) ↦ Σ_c χ(|b|,|c|) (a c b) ⊗ c*.
    fn chi0_oracle(a: &Algebra) -> Matrix {
        let n = a.dim();
        let field = a.field();
        let cat = a.category();
        let unit = |i: usize| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            v
        };
        Matrix::from_fn(field, n * n, n * n, |row, col| {
            let (x, c) = (row / n, row % n);
            let (i, j) = (col / n, col % n);
            let acb = a.product(&a.product(&unit(i), &unit(c)), &unit(j));
            &cat.chi(a.space().degree(j), a.space().degree(c)) * &acb[x]
        })
    }

    #[test]
    fn chi_maps_on_fixtures() {
        for a in [
            fixtures::ground(Q),
            fixtures::m2(Q),
            fixtures::q_times_q(Q),
            fixtures::dual_numbers(Q),
            fixtures::quaternions(Q),
            fixtures::super_cl1(Q),
            fixtures::cl1_trivial(Q),
        ] {
            let c0 = chi0(&a).unwrap();
            assert_eq!(c0.matrix(), &chi0_oracle(&a));
            let tau = braiding(a.space(), a.space()).unwrap();
            let c1 = chi1(&a).unwrap();
            let cb = chi_bar(&a).unwrap();
            let c2 = chi2(&a).unwrap();
            assert_eq!(cb, c1.compose(&tau).unwrap());
            assert_eq!(c2, c0.compose(&tau).unwrap());
            let ranks = [c0.rank(), c1.rank(), cb.rank(), c2.rank()];
            assert!(ranks.iter().all(|&r| r == ranks[0]), "{ranks:?}");
        }
        assert_eq!(chi1(&fixtures::q_times_q(Q)).unwrap().rank(), 2);
        assert_eq!(chi0(&fixtures::super_cl1(Q)).unwrap().rank(), 4);
        assert_eq!(chi0(&fixtures::cl1_trivial(Q)).unwrap().rank(), 2);
    }

    #[test]
    fn galois_examples() {
        let k = fixtures::ground(Q);
        assert!(galois_map(&Module::regular(&k))
            .unwrap()
            .matrix()
            .is_identity());
        for a in [
            fixtures::m2(Q),
            fixtures::q_times_q(Q),
            fixtures::super_cl1(Q),
        ] {
            let acts = canonical_actions(&a).unwrap();
            let t = galois_map(&acts.left).unwrap();
            assert_eq!(t.matrix(), chi0(&a).unwrap().matrix());
        }
        let qq = canonical_actions(&fixtures::q_times_q(Q)).unwrap();
        assert_eq!(galois_map(&qq.left).unwrap().rank(), 2);
        assert!(!is_galois(&qq.left).unwrap());
        let m2 = canonical_actions(&fixtures::m2(Q)).unwrap();
        assert!(is_faithfully_galois(&m2.left).unwrap());
    }

    #[test]
    fn coalgebra_chis() {
        let t = fixtures::trivial_coalgebra(Q);
        assert!(coalgebra_chi0(&t).unwrap().matrix().is_identity());
        assert!(coalgebra_chi0(&fixtures::m2_comatrix(Q))
            .unwrap()
            .is_invertible());
        assert!(coalgebra_chi(&fixtures::m2_comatrix(Q))
            .unwrap()
            .is_invertible());
        assert_eq!(
            coalgebra_chi0(&fixtures::grouplike(Q, 2)).unwrap().rank(),
            2
        );
        assert_eq!(coalgebra_chi(&fixtures::grouplike(Q, 2)).unwrap().rank(), 2);
    }
}
