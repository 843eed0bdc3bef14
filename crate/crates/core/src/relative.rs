//! Cotensor products over a cocommutative coalgebra `D` and coalgebras over `D`.

use crate::algebra::Side;
use crate::coalgebra::{Coalgebra, Comodule};
use crate::error::{ensure, Error, Result};
use crate::graded::{braiding, braiding_inverse, GradedMap, Subobject};
use crate::linalg::Matrix;

/// `τ_{D,D} ∘ Δ_D = Δ_D`.
pub fn is_cocommutative(d: &Coalgebra) -> Result<bool> {
    let tau = braiding(d.space(), d.space())?;
    Ok(tau.compose(d.comult())? == *d.comult())
}

/// Converts a comodule to the requested side using `ρ ↦ τ^{±1} ∘ ρ`.
/// Only meaningful over a cocommutative coalgebra; the result is re-validated.
pub fn convert_side(m: &Comodule, side: Side) -> Result<Comodule> {
    if m.side() == side {
        return Ok(m.clone());
    }
    let d = m.coalgebra();
    if !is_cocommutative(d)? {
        return Err(Error::Precondition(
            "side conversion needs a cocommutative coalgebra".into(),
        ));
    }
    let coaction = match side {
        Side::Right => braiding_inverse(m.space(), d.space())?.compose(m.coaction())?,
        Side::Left => braiding(m.space(), d.space())?.compose(m.coaction())?,
    };
    Comodule::new(d.clone(), m.space().clone(), coaction, side)
}

/// `V □_D W`: the kernel of `ϱ_V ⊗ W − V ⊗ ρ_W : V ⊗ W → V ⊗ D ⊗ W`.
/// Operands on the wrong side are converted first.
pub fn cotensor(v: &Comodule, w: &Comodule) -> Result<Subobject> {
    if v.coalgebra() != w.coalgebra() {
        return Err(Error::Precondition(
            "cotensor operands are comodules over different coalgebras".into(),
        ));
    }
    let v = convert_side(v, Side::Right)?;
    let w = convert_side(w, Side::Left)?;
    let diff = v
        .coaction()
        .tensor(&GradedMap::identity(w.space()))?
        .sub(&GradedMap::identity(v.space()).tensor(w.coaction())?)?;
    let domain = v.space().tensor(w.space())?;
    Ok(Subobject::kernel(&domain, diff.matrix())?)
}

fn is_coalgebra_morphism(gamma: &GradedMap, c: &Coalgebra, d: &Coalgebra) -> Result<bool> {
    if gamma.domain() != c.space() || gamma.codomain() != d.space() {
        return Ok(false);
    }
    let lhs = gamma.tensor(gamma)?.compose(c.comult())?;
    let rhs = d.comult().compose(gamma)?;
    Ok(lhs == rhs && d.counit().compose(gamma)? == *c.counit())
}

/// `(γ ⊗ C) ∘ Δ_C = τ_{C,D} ∘ (C ⊗ γ) ∘ Δ_C`.
pub fn is_cocentral(gamma: &GradedMap, c: &Coalgebra, d: &Coalgebra) -> Result<bool> {
    if !is_coalgebra_morphism(gamma, c, d)? {
        return Err(Error::Precondition("γ is not a coalgebra morphism".into()));
    }
    let ic = GradedMap::identity(c.space());
    let lhs = gamma.tensor(&ic)?.compose(c.comult())?;
    let rhs = braiding(c.space(), d.space())?
        .compose(&ic.tensor(gamma)?)?
        .compose(c.comult())?;
    Ok(lhs == rhs)
}

/// A coalgebra `C` over a cocommutative `D` through a cocentral morphism `γ : C → D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCoalgebra {
    base: Coalgebra,
    total: Coalgebra,
    structure: GradedMap,
}

impl DCoalgebra {
    pub fn new(base: Coalgebra, total: Coalgebra, structure: GradedMap) -> Result<DCoalgebra> {
        if !is_cocommutative(&base)? {
            return Err(Error::Precondition(
                "base coalgebra is not cocommutative".into(),
            ));
        }
        if !is_cocentral(&structure, &total, &base)? {
            return Err(Error::Precondition("structure map is not cocentral".into()));
        }
        Ok(DCoalgebra {
            base,
            total,
            structure,
        })
    }

    /// `D` over itself through the identity.
    pub fn over_itself(d: &Coalgebra) -> Result<DCoalgebra> {
        DCoalgebra::new(d.clone(), d.clone(), GradedMap::identity(d.space()))
    }

    pub fn base(&self) -> &Coalgebra {
        &self.base
    }

    pub fn total(&self) -> &Coalgebra {
        &self.total
    }

    pub fn structure(&self) -> &GradedMap {
        &self.structure
    }

    /// `C` as a comodule over `D` via `(C ⊗ γ) ∘ Δ` or `(γ ⊗ C) ∘ Δ`.
    pub fn comodule(&self, side: Side) -> Result<Comodule> {
        let ic = GradedMap::identity(self.total.space());
        let outer = match side {
            Side::Right => ic.tensor(&self.structure)?,
            Side::Left => self.structure.tensor(&ic)?,
        };
        Comodule::new(
            self.base.clone(),
            self.total.space().clone(),
            outer.compose(self.total.comult())?,
            side,
        )
    }
}

/// `Δ_C` corestricted to `C □_D C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub cotensor: Subobject,
    pub comult: GradedMap,
}

/// Solves `i ∘ Δ′ = Δ_C` for the inclusion `i : C □_D C → C ⊗ C`.
pub fn factor_comultiplication(dc: &DCoalgebra) -> Result<Factorization> {
    let cot = cotensor(&dc.comodule(Side::Right)?, &dc.comodule(Side::Left)?)?;
    let c = dc.total();
    let inc = cot.inclusion.matrix();
    let delta = c.comult().matrix();
    let mut columns = Vec::with_capacity(c.dim());
    for k in 0..c.dim() {
        let col = inc.solve(&delta.column(k))?.ok_or_else(|| {
            Error::Inconsistency(format!(
                "Δ(e{k}) does not lie in the cotensor product over D"
            ))
        })?;
        columns.push(col);
    }
    let m = Matrix::from_columns(c.field(), cot.dim(), &columns);
    let comult = GradedMap::new(c.space().clone(), cot.space.clone(), m)?;
    let through = cot.inclusion.compose(&comult)?;
    ensure(through == *c.comult(), || "i ∘ Δ′ differs from Δ".into())?;
    let ic = GradedMap::identity(c.space());
    let left = c.comult().tensor(&ic)?.compose(&through)?;
    let right = ic.tensor(c.comult())?.compose(&through)?;
    ensure(left == right, || {
        "Δ′ is not coassociative inside the cotensor".into()
    })?;
    Ok(Factorization {
        cotensor: cot,
        comult,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::dual_coalgebra;
    use crate::fixtures;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn cocommutativity() {
        assert!(is_cocommutative(&fixtures::grouplike(Q, 3)).unwrap());
        assert!(is_cocommutative(&fixtures::trivial_coalgebra(Q)).unwrap());
        assert!(!is_cocommutative(&fixtures::m2_comatrix(Q)).unwrap());
    }

    #[test]
    fn cotensor_over_trivial_is_full_tensor() {
        let d = fixtures::trivial_coalgebra(Q);
        let c = fixtures::m2_comatrix(Q);
        let gamma = GradedMap::functional(c.space(), &c.counit_vector()).unwrap();
        let dc = DCoalgebra::new(d, c.clone(), gamma).unwrap();
        let f = factor_comultiplication(&dc).unwrap();
        assert_eq!(f.cotensor.dim(), 16);
        assert!(f.cotensor.inclusion.matrix().is_identity());
        assert_eq!(f.comult, *c.comult());
    }

    #[test]
    fn grouplike_diagonal() {
        let d = fixtures::grouplike(Q, 2);
        let reg_r = Comodule::regular(&d, Side::Right);
        let reg_l = Comodule::regular(&d, Side::Left);
        let cot = cotensor(&reg_r, &reg_l).unwrap();
        assert_eq!(cot.dim(), 2);
        // Mismatched sides are converted.
        assert_eq!(cotensor(&reg_l, &reg_r).unwrap().dim(), 2);

        let f = factor_comultiplication(&DCoalgebra::over_itself(&d).unwrap()).unwrap();
        assert_eq!(f.comult.matrix(), &Matrix::identity(Q, 2));
    }

    #[test]
    fn dual_of_product_over_itself() {
        let d = dual_coalgebra(&fixtures::q_times_q(Q)).unwrap();
        let f = factor_comultiplication(&DCoalgebra::over_itself(&d).unwrap()).unwrap();
        assert_eq!(
            f.cotensor.inclusion.compose(&f.comult).unwrap(),
            *d.comult()
        );
    }

    #[test]
    fn cocentrality() {
        let c = fixtures::m2_comatrix(Q);
        let id = GradedMap::identity(c.space());
        assert!(!is_cocentral(&id, &c, &c).unwrap());
        let g = fixtures::grouplike(Q, 3);
        assert!(is_cocentral(&GradedMap::identity(g.space()), &g, &g).unwrap());
        let zero = GradedMap::zero(g.space(), g.space());
        assert!(matches!(
            is_cocentral(&zero, &g, &g),
            Err(Error::Precondition(_))
        ));
    }
}
