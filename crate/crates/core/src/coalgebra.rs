//! Coalgebras, comodules and the algebra/coalgebra dualities.

use std::sync::Arc;

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::graded::{
    braiding, compose_all, left_dual, right_dual, tensor_all, GradedCategory, GradedMap,
    GradedSpace,
};
use crate::linalg::{Field, LinalgError, Matrix, Scalar, Vector};

/// Sparse comultiplication entry `(k, i, j, c)`: `Δ(e_k)` contains `c · eᵢ ⊗ eⱼ`.
pub type CoTriple = (usize, usize, usize, Scalar);

/// `(C, Δ, ε)` with `Δ : C → C ⊗ C`, `ε : C → I`, validated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coalgebra {
    space: GradedSpace,
    comult: GradedMap,
    counit: GradedMap,
}

impl Coalgebra {
    pub fn new(space: GradedSpace, comult: GradedMap, counit: GradedMap) -> Result<Coalgebra> {
        let c2 = space.tensor(&space)?;
        let one = GradedSpace::unit(space.category());
        if comult.domain() != &space || comult.codomain() != &c2 {
            return Err(Error::Precondition(
                "comultiplication must map C → C⊗C".into(),
            ));
        }
        if counit.domain() != &space || counit.codomain() != &one {
            return Err(Error::Precondition("counit must map C → I".into()));
        }
        let c = Coalgebra {
            space,
            comult,
            counit,
        };
        c.check_axioms()?;
        Ok(c)
    }

    pub fn from_structure_constants(
        space: GradedSpace,
        triples: &[CoTriple],
        counit: &[Scalar],
    ) -> Result<Coalgebra> {
        let n = space.dim();
        let field = space.field();
        let mut d = Matrix::zeros(field, n * n, n);
        for (k, i, j, c) in triples {
            let (k, i, j) = (*k, *i, *j);
            if i >= n || j >= n || k >= n {
                return Err(Error::IndexOutOfRange { i, j, k, dim: n });
            }
            if c.field() != field {
                return Err(LinalgError::FieldMismatch {
                    expected: field,
                    found: c.field(),
                }
                .into());
            }
            let sum = d.get(i * n + j, k) + c;
            d.set(i * n + j, k, sum);
        }
        if counit.len() != n {
            return Err(Error::VectorLength {
                expected: n,
                found: counit.len(),
            });
        }
        let zero = space.category().group().zero();
        if let Some(bad) = (0..n).find(|&i| !counit[i].is_zero() && space.degree(i) != &zero) {
            return Err(Error::UnitDegree(bad));
        }
        let c2 = space.tensor(&space)?;
        for row in 0..n * n {
            for k in 0..n {
                if !d.get(row, k).is_zero() && c2.degree(row) != space.degree(k) {
                    return Err(Error::NonHomogeneous(format!(
                        "Δ(e{k}) has a component e{}⊗e{} of a different degree",
                        row / n,
                        row % n
                    )));
                }
            }
        }
        let comult = GradedMap::new(space.clone(), c2, d)?;
        let counit = GradedMap::functional(&space, counit)?;
        Coalgebra::new(space, comult, counit)
    }

    pub(crate) fn derived(
        space: GradedSpace,
        comult: GradedMap,
        counit: GradedMap,
        what: &str,
    ) -> Result<Coalgebra> {
        Coalgebra::new(space, comult, counit)
            .map_err(|e| Error::Inconsistency(format!("{what} is not a valid coalgebra: {e}")))
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        let id = GradedMap::identity(&self.space);
        let d = &self.comult;
        let left = d.tensor(&id)?.compose(d)?;
        let right = id.tensor(d)?.compose(d)?;
        if let Some((row, k)) = left.matrix().first_difference(right.matrix()) {
            let (i, j, l) = crate::algebra::basis_triple(row, n);
            return Err(Error::Axiom {
                law: "coassociativity",
                witness: format!("Δ(e{k}) differs at e{i}⊗e{j}⊗e{l}"),
            });
        }
        let lu = self.counit.tensor(&id)?.compose(d)?;
        if let Some((row, k)) = lu.matrix().first_difference(id.matrix()) {
            return Err(Error::Axiom {
                law: "left counit",
                witness: format!("(ε⊗C)Δ(e{k}) ≠ e{k} at coordinate {row}"),
            });
        }
        let ru = id.tensor(&self.counit)?.compose(d)?;
        if let Some((row, k)) = ru.matrix().first_difference(id.matrix()) {
            return Err(Error::Axiom {
                law: "right counit",
                witness: format!("(C⊗ε)Δ(e{k}) ≠ e{k} at coordinate {row}"),
            });
        }
        Ok(())
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn category(&self) -> &Arc<GradedCategory> {
        self.space.category()
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn comult(&self) -> &GradedMap {
        &self.comult
    }

    pub fn counit(&self) -> &GradedMap {
        &self.counit
    }

    pub fn counit_vector(&self) -> Vector {
        self.counit.matrix().row(0)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn structure_constants(&self) -> Vec<CoTriple> {
        let n = self.dim();
        let d = self.comult.matrix();
        let mut out = Vec::new();
        for k in 0..n {
            for row in 0..n * n {
                let c = d.get(row, k);
                if !c.is_zero() {
                    out.push((k, row / n, row % n, c.clone()));
                }
            }
        }
        out
    }

    /// Same coalgebra in a new basis: `iso : C → D` becomes a coalgebra isomorphism.
    pub fn transport(&self, iso: &GradedMap) -> Result<Coalgebra> {
        let inv = iso
            .inverse()
            .ok_or_else(|| Error::Precondition("transport map is not invertible".into()))?;
        let comult = compose_all(&[&iso.tensor(iso)?, &self.comult, &inv])?;
        let counit = self.counit.compose(&inv)?;
        Coalgebra::new(iso.codomain().clone(), comult, counit)
    }
}

impl Algebra {
    /// Same algebra in a new basis: `iso : A → B` becomes an algebra isomorphism.
    pub fn transport(&self, iso: &GradedMap) -> Result<Algebra> {
        let inv = iso
            .inverse()
            .ok_or_else(|| Error::Precondition("transport map is not invertible".into()))?;
        let mult = compose_all(&[iso, self.mult(), &inv.tensor(&inv)?])?;
        let unit = iso.compose(self.unit())?;
        Algebra::new(iso.codomain().clone(), mult, unit)
    }
}

/// `C^τ`: `Δ^τ = τ_{C,C} ∘ Δ`, same counit.
pub fn opposite_coalgebra(c: &Coalgebra) -> Result<Coalgebra> {
    let tau = braiding(&c.space, &c.space)?;
    Coalgebra::derived(
        c.space.clone(),
        tau.compose(&c.comult)?,
        c.counit.clone(),
        "opposite coalgebra",
    )
}

/// `C ⊗ D` with `(C ⊗ τ_{C,D} ⊗ D)(Δ_C ⊗ Δ_D)` and `ε_C ⊗ ε_D`.
pub fn braided_tensor_coalgebra(c: &Coalgebra, d: &Coalgebra) -> Result<Coalgebra> {
    let space = c.space.tensor(&d.space)?;
    let tau = braiding(&c.space, &d.space)?;
    let ic = GradedMap::identity(&c.space);
    let id = GradedMap::identity(&d.space);
    let comult = compose_all(&[
        &tensor_all(&[&ic, &tau, &id])?,
        &c.comult.tensor(&d.comult)?,
    ])?;
    let counit = c.counit.tensor(&d.counit)?;
    Coalgebra::derived(space, comult, counit, "braided tensor coalgebra")
}

/// `C^e = C ⊗ C^τ`.
pub fn co_enveloping(c: &Coalgebra) -> Result<Coalgebra> {
    braided_tensor_coalgebra(c, &opposite_coalgebra(c)?)
}

/// Convolution algebra on `C*`: `f * g = (g ⊗ f) ∘ Δ`, unit `ε`.
pub fn dual_algebra(c: &Coalgebra) -> Result<Algebra> {
    let n = c.dim();
    let field = c.field();
    let dual = c.space.dual();
    let d = c.comult.matrix();
    let mult = Matrix::from_fn(field, n, n * n, |k, col| {
        let (a, b) = (col / n, col % n);
        d.get(b * n + a, k).clone()
    });
    let mult = GradedMap::new(dual.tensor(&dual)?, dual.clone(), mult)?;
    let unit = GradedMap::from_vector(&dual, &c.counit_vector())?;
    Algebra::derived(dual, mult, unit, "dual algebra")
}

/// Coalgebra on `A*` whose convolution algebra is `A` again:
/// `Δ(e_k*) = Σ m^k_{ji} eᵢ* ⊗ eⱼ*`, `ε(f) = f(1)`.
pub fn dual_coalgebra(a: &Algebra) -> Result<Coalgebra> {
    let n = a.dim();
    let field = a.field();
    let dual = a.space().dual();
    let m = a.mult().matrix();
    let comult = Matrix::from_fn(field, n * n, n, |row, k| {
        let (i, j) = (row / n, row % n);
        m.get(k, j * n + i).clone()
    });
    let comult = GradedMap::new(dual.clone(), dual.tensor(&dual)?, comult)?;
    let counit = GradedMap::functional(&dual, &a.unit_vector())?;
    Coalgebra::derived(dual, comult, counit, "dual coalgebra")
}

/// `S_{V,V*}` on `V ⊗ V*`: multiplication `V ⊗ ev ⊗ V*`, unit `db`.
pub fn matrix_algebra(v: &GradedSpace) -> Result<Algebra> {
    let ld = left_dual(v);
    let iv = GradedMap::identity(v);
    let id = GradedMap::identity(&ld.dual);
    let mult = tensor_all(&[&iv, &ld.ev, &id])?;
    let space = v.tensor(&ld.dual)?;
    let mult = GradedMap::new(space.tensor(&space)?, space.clone(), mult.into_matrix())?;
    let unit = GradedMap::new(
        GradedSpace::unit(v.category()),
        space.clone(),
        ld.db.into_matrix(),
    )?;
    Algebra::derived(space, mult, unit, "matrix algebra")
}

/// Comatrix coalgebra on `V ⊗ V*`: comultiplication `V ⊗ db′ ⊗ V*`, counit `ev′`.
pub fn comatrix_coalgebra(v: &GradedSpace) -> Result<Coalgebra> {
    let rd = right_dual(v);
    let iv = GradedMap::identity(v);
    let id = GradedMap::identity(&rd.dual);
    let comult = tensor_all(&[&iv, &rd.db, &id])?;
    let space = v.tensor(&rd.dual)?;
    let comult = GradedMap::new(space.clone(), space.tensor(&space)?, comult.into_matrix())?;
    let counit = GradedMap::new(
        space.clone(),
        GradedSpace::unit(v.category()),
        rd.ev.into_matrix(),
    )?;
    Coalgebra::derived(space, comult, counit, "comatrix coalgebra")
}

/// Checks `ω ∘ Δ = id` and `(ω ⊗ C)(C ⊗ Δ) = Δ ∘ ω = (C ⊗ ω)(Δ ⊗ C)`.
pub fn verify_coseparability(c: &Coalgebra, omega: &GradedMap) -> Result<bool> {
    let id = GradedMap::identity(&c.space);
    let d = &c.comult;
    let retraction = omega.compose(d)?;
    let left = compose_all(&[&omega.tensor(&id)?, &id.tensor(d)?])?;
    let mid = d.compose(omega)?;
    let right = compose_all(&[&id.tensor(omega)?, &d.tensor(&id)?])?;
    Ok(retraction.matrix().is_identity() && left == mid && mid == right)
}

/// A bicomodule retraction `ω : C ⊗ C → C` of `Δ`, if one exists.
///
/// Such an `ω` is determined by `f = ε ∘ ω` through `ω = (f ⊗ C)(C ⊗ Δ)`;
/// the solve runs over degree-0 functionals `f` and the result is re-verified
/// against the full system.
pub fn coseparability(c: &Coalgebra) -> Result<Option<GradedMap>> {
    let n = c.dim();
    let field = c.field();
    let c2 = c.space.tensor(&c.space)?;
    let zero = c.category().group().zero();
    let vars: Vec<usize> = (0..n * n).filter(|&u| c2.degree(u) == &zero).collect();
    let d = c.comult.matrix();
    // Δ(e_y) = Σ d[(p,q), y] e_p ⊗ e_q.
    // (f ⊗ C)(C ⊗ Δ)(e_x ⊗ e_y) = Σ f(x,p) d[(p,q),y] e_q
    // (C ⊗ f)(Δ ⊗ C)(e_x ⊗ e_y) = Σ d[(p,q),x] f(q,y) e_p
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let var_index = |u: usize| vars.iter().position(|&v| v == u);
    for x in 0..n {
        for y in 0..n {
            for out in 0..n {
                let mut row = vec![field.zero(); vars.len()];
                for p in 0..n {
                    if let Some(v) = var_index(x * n + p) {
                        row[v] = &row[v] + d.get(p * n + out, y);
                    }
                }
                for q in 0..n {
                    if let Some(v) = var_index(q * n + y) {
                        row[v] = &row[v] - d.get(out * n + q, x);
                    }
                }
                rows.push(row);
                rhs.push(field.zero());
            }
        }
    }
    let eps = c.counit_vector();
    for (k, e) in eps.iter().enumerate().take(n) {
        let row = vars.iter().map(|&u| d.get(u, k).clone()).collect();
        rows.push(row);
        rhs.push(e.clone());
    }
    let system = if rows.is_empty() {
        Matrix::zeros(field, 0, vars.len())
    } else {
        Matrix::from_rows(field, rows)?
    };
    let Some(sol) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let mut f = vec![field.zero(); n * n];
    for (v, &u) in vars.iter().enumerate() {
        f[u] = sol[v].clone();
    }
    let f = GradedMap::functional(&c2, &f)?;
    let id = GradedMap::identity(&c.space);
    let omega = compose_all(&[&f.tensor(&id)?, &id.tensor(&c.comult)?])?;
    let omega = GradedMap::new(c2, c.space.clone(), omega.into_matrix())?;
    if !verify_coseparability(c, &omega)? {
        return Err(Error::Inconsistency(
            "solved coseparability functional does not give a retraction".into(),
        ));
    }
    Ok(Some(omega))
}

/// A comodule with coaction `V → C ⊗ V` (left) or `V → V ⊗ C` (right), validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    coalgebra: Coalgebra,
    space: GradedSpace,
    coaction: GradedMap,
    side: Side,
}

impl Comodule {
    pub fn new(
        coalgebra: Coalgebra,
        space: GradedSpace,
        coaction: GradedMap,
        side: Side,
    ) -> Result<Comodule> {
        let expected = match side {
            Side::Left => coalgebra.space.tensor(&space)?,
            Side::Right => space.tensor(&coalgebra.space)?,
        };
        if coaction.domain() != &space || coaction.codomain() != &expected {
            return Err(Error::Precondition("coaction has the wrong shape".into()));
        }
        let m = Comodule {
            coalgebra,
            space,
            coaction,
            side,
        };
        m.check_axioms()?;
        Ok(m)
    }

    /// `C` coacting on itself through `Δ`.
    pub fn regular(c: &Coalgebra, side: Side) -> Comodule {
        Comodule {
            coalgebra: c.clone(),
            space: c.space.clone(),
            coaction: c.comult.clone(),
            side,
        }
    }

    fn check_axioms(&self) -> Result<()> {
        let ic = GradedMap::identity(&self.coalgebra.space);
        let iv = GradedMap::identity(&self.space);
        let (d, e, rho) = (
            &self.coalgebra.comult,
            &self.coalgebra.counit,
            &self.coaction,
        );
        let (l, r, u) = match self.side {
            Side::Left => (
                d.tensor(&iv)?.compose(rho)?,
                ic.tensor(rho)?.compose(rho)?,
                e.tensor(&iv)?.compose(rho)?,
            ),
            Side::Right => (
                rho.tensor(&ic)?.compose(rho)?,
                iv.tensor(d)?.compose(rho)?,
                iv.tensor(e)?.compose(rho)?,
            ),
        };
        if let Some((row, col)) = l.matrix().first_difference(r.matrix()) {
            return Err(Error::Axiom {
                law: "comodule coassociativity",
                witness: format!("basis vector {col}, coordinate {row}"),
            });
        }
        if let Some((row, col)) = u.matrix().first_difference(iv.matrix()) {
            return Err(Error::Axiom {
                law: "comodule counit",
                witness: format!("basis vector {col}, coordinate {row}"),
            });
        }
        Ok(())
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn coaction(&self) -> &GradedMap {
        &self.coaction
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Transports the coaction along an invertible degree-0 map `V → W`.
    pub fn transport(&self, iso: &GradedMap) -> Result<Comodule> {
        let inv = iso
            .inverse()
            .ok_or_else(|| Error::Precondition("transport map is not invertible".into()))?;
        let ic = GradedMap::identity(&self.coalgebra.space);
        let outer = match self.side {
            Side::Left => ic.tensor(iso)?,
            Side::Right => iso.tensor(&ic)?,
        };
        let coaction = compose_all(&[&outer, &self.coaction, &inv])?;
        Comodule::new(
            self.coalgebra.clone(),
            iso.codomain().clone(),
            coaction,
            self.side,
        )
    }

    /// Direct sum over the same coalgebra and side.
    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if self.coalgebra != other.coalgebra || self.side != other.side {
            return Err(Error::Precondition(
                "direct sum of unrelated comodules".into(),
            ));
        }
        let mut degrees = self.space.degrees().to_vec();
        degrees.extend_from_slice(other.space.degrees());
        let space = GradedSpace::new(self.space.category(), degrees)?;
        let (n, p, q) = (self.coalgebra.dim(), self.dim(), other.dim());
        let s = p + q;
        let field = self.coalgebra.field();
        let mut m = Matrix::zeros(field, n * s, s);
        let place = |m: &mut Matrix, src: &Matrix, dim: usize, offset: usize| {
            for v in 0..dim {
                for c in 0..n {
                    for w in 0..dim {
                        let (src_row, dst_row) = match self.side {
                            Side::Left => (c * dim + w, c * s + offset + w),
                            Side::Right => (w * n + c, (offset + w) * n + c),
                        };
                        m.set(dst_row, offset + v, src.get(src_row, v).clone());
                    }
                }
            }
        };
        place(&mut m, self.coaction.matrix(), p, 0);
        place(&mut m, other.coaction.matrix(), q, p);
        let codomain = match self.side {
            Side::Left => self.coalgebra.space.tensor(&space)?,
            Side::Right => space.tensor(&self.coalgebra.space)?,
        };
        let coaction = GradedMap::new(space.clone(), codomain, m)?;
        Comodule::new(self.coalgebra.clone(), space, coaction, self.side)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::opposite;
    use crate::fixtures;

    const Q: Field = Field::Rational;

    /// Permutation map sending basis vector `i` to `perm[i]`.
    fn permutation(from: &GradedSpace, to: &GradedSpace, perm: &[usize]) -> GradedMap {
        let n = perm.len();
        let m = Matrix::from_fn(
            Q,
            n,
            n,
            |r, c| if perm[c] == r { Q.one() } else { Q.zero() },
        );
        GradedMap::new(from.clone(), to.clone(), m).unwrap()
    }

    #[test]
    fn validation_examples() {
        let t = fixtures::trivial_coalgebra(Q);
        assert_eq!(t.dim(), 1);
        let g = fixtures::grouplike(Q, 2);
        assert_eq!(g.structure_constants().len(), 2);
        let mc = fixtures::m2_comatrix(Q);
        assert_eq!(mc.dim(), 4);

        let cat = GradedCategory::ungraded(Q);
        let err = Coalgebra::from_structure_constants(
            GradedSpace::even(&cat, 1),
            &[(0, 0, 0, Q.one())],
            &[Q.from_i64(3)],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::Axiom {
                law: "left counit",
                ..
            }
        ));
    }

    #[test]
    fn opposite_examples() {
        let g = fixtures::grouplike(Q, 2);
        assert_eq!(opposite_coalgebra(&g).unwrap(), g);
        let mc = fixtures::m2_comatrix(Q);
        assert_ne!(opposite_coalgebra(&mc).unwrap(), mc);

        let cl = fixtures::super_cl1(Q);
        let dc = dual_coalgebra(&cl).unwrap();
        let op = opposite_coalgebra(&dc).unwrap();
        // Δ(x*) ∋ x* ⊗ 1*... the odd⊗odd component of Δ(1*) flips sign.
        assert_eq!(dc.comult().matrix().get(3, 0), &Q.one());
        assert_eq!(op.comult().matrix().get(3, 0), &Q.from_i64(-1));
    }

    #[test]
    fn co_enveloping_examples() {
        let t = fixtures::trivial_coalgebra(Q);
        assert_eq!(co_enveloping(&t).unwrap().dim(), 1);
        let g = fixtures::grouplike(Q, 2);
        let ge = co_enveloping(&g).unwrap();
        assert_eq!(ge, fixtures::grouplike(Q, 4));
        assert_eq!(co_enveloping(&fixtures::m2_comatrix(Q)).unwrap().dim(), 16);
    }

    #[test]
    fn dual_algebra_examples() {
        let g = fixtures::grouplike(Q, 2);
        assert_eq!(dual_algebra(&g).unwrap(), fixtures::q_times_q(Q));
        let t = fixtures::trivial_coalgebra(Q);
        assert_eq!(dual_algebra(&t).unwrap(), fixtures::ground(Q));

        // (eᵢ⊗eⱼ*)* ↦ E_{ji}.
        let mc = fixtures::m2_comatrix(Q);
        let d = dual_algebra(&mc).unwrap();
        let m2 = fixtures::m2(Q);
        let iso = permutation(d.space(), m2.space(), &[0, 2, 1, 3]);
        assert_eq!(d.transport(&iso).unwrap(), m2);
    }

    #[test]
    fn dual_coalgebra_examples() {
        let m2 = fixtures::m2(Q);
        let dc = dual_coalgebra(&m2).unwrap();
        let mc = fixtures::m2_comatrix(Q);
        let iso = permutation(dc.space(), mc.space(), &[0, 2, 1, 3]);
        assert_eq!(dc.transport(&iso).unwrap(), mc);
        assert_eq!(
            dual_coalgebra(&fixtures::ground(Q)).unwrap(),
            fixtures::trivial_coalgebra(Q)
        );
        for a in [
            fixtures::m2(Q),
            fixtures::quaternions(Q),
            fixtures::dual_numbers(Q),
            fixtures::super_cl1(Q),
        ] {
            let back = dual_algebra(&dual_coalgebra(&a).unwrap()).unwrap();
            assert_eq!(back.mult().matrix(), a.mult().matrix());
            assert_eq!(back.unit().matrix(), a.unit().matrix());
        }
    }

    #[test]
    fn comatrix_and_matrix_algebra() {
        let cat = GradedCategory::ungraded(Q);
        let line = GradedSpace::even(&cat, 1);
        assert_eq!(matrix_algebra(&line).unwrap(), fixtures::ground(Q));
        assert_eq!(
            comatrix_coalgebra(&line).unwrap(),
            fixtures::trivial_coalgebra(Q)
        );
        let plane = GradedSpace::even(&cat, 2);
        assert_eq!(
            matrix_algebra(&plane).unwrap().mult().matrix(),
            fixtures::m2(Q).mult().matrix()
        );
        for dim in 1..=3 {
            let v = GradedSpace::even(&cat, dim);
            let da = dual_algebra(&comatrix_coalgebra(&v).unwrap()).unwrap();
            let s = matrix_algebra(&v).unwrap();
            let perm: Vec<usize> = (0..dim * dim).map(|u| (u % dim) * dim + u / dim).collect();
            let iso = permutation(da.space(), s.space(), &perm);
            assert_eq!(da.transport(&iso).unwrap(), s);
        }
        // Graded: an odd line inside a super plane still gives valid structures.
        let sup = GradedCategory::super_vector_spaces(Q);
        let v = GradedSpace::new(
            &sup,
            vec![sup.group().zero(), sup.group().element(&[1]).unwrap()],
        )
        .unwrap();
        assert_eq!(matrix_algebra(&v).unwrap().dim(), 4);
        assert_eq!(comatrix_coalgebra(&v).unwrap().dim(), 4);
    }

    #[test]
    fn coseparability_examples() {
        let t = fixtures::trivial_coalgebra(Q);
        let w = coseparability(&t).unwrap().unwrap();
        assert!(w.matrix().is_identity());
        assert!(coseparability(&fixtures::m2_comatrix(Q)).unwrap().is_some());
        assert!(coseparability(&fixtures::grouplike(Q, 2))
            .unwrap()
            .is_some());
        let dn = dual_coalgebra(&fixtures::dual_numbers(Q)).unwrap();
        assert!(coseparability(&dn).unwrap().is_none());
    }

    #[test]
    fn dual_of_opposite() {
        for c in [fixtures::m2_comatrix(Q), fixtures::grouplike(Q, 2)] {
            assert_eq!(
                dual_algebra(&opposite_coalgebra(&c).unwrap()).unwrap(),
                opposite(&dual_algebra(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn comodule_sums() {
        let g = fixtures::grouplike(Q, 2);
        for side in [Side::Left, Side::Right] {
            let r = Comodule::regular(&g, side);
            let s = r.direct_sum(&r).unwrap();
            assert_eq!(s.dim(), 4);
        }
        let mc = fixtures::m2_comatrix(Q);
        let r = Comodule::regular(&mc, Side::Left);
        let bad = GradedMap::identity(mc.space());
        assert!(Comodule::new(mc.clone(), mc.space().clone(), bad, Side::Left).is_err());
        assert_eq!(r.direct_sum(&r).unwrap().dim(), 8);
    }
}
