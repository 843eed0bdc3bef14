//! Algebras and their modules in the graded category.

use std::sync::Arc;

use crate::error::{ensure, Error, Result};
use crate::graded::{
    braiding, compose_all, tensor_all, GradedCategory, GradedMap, GradedSpace, Subobject,
};
use crate::linalg::{Field, Matrix, Scalar, Vector};

/// `(A, m, e)` with `m : A ⊗ A → A` and `e : I → A`, validated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    space: GradedSpace,
    mult: GradedMap,
    unit: GradedMap,
}

/// Sparse structure constant: `eᵢ · eⱼ` contains `c · e_k`.
pub type Triple = (usize, usize, usize, Scalar);

pub(crate) fn basis_triple(col: usize, n: usize) -> (usize, usize, usize) {
    (col / (n * n), (col / n) % n, col % n)
}

impl Algebra {
    /// Validates associativity and both unit laws.
    pub fn new(space: GradedSpace, mult: GradedMap, unit: GradedMap) -> Result<Algebra> {
        let a2 = space.tensor(&space)?;
        let one = GradedSpace::unit(space.category());
        if mult.domain() != &a2 || mult.codomain() != &space {
            return Err(Error::Precondition(
                "multiplication must map A⊗A → A".into(),
            ));
        }
        if unit.domain() != &one || unit.codomain() != &space {
            return Err(Error::Precondition("unit must map I → A".into()));
        }
        let alg = Algebra { space, mult, unit };
        alg.check_axioms()?;
        Ok(alg)
    }

    /// Densifies sparse structure constants and validates.
    pub fn from_structure_constants(
        space: GradedSpace,
        triples: &[Triple],
        unit: &[Scalar],
    ) -> Result<Algebra> {
        let n = space.dim();
        let field = space.field();
        let mut m = Matrix::zeros(field, n, n * n);
        for (i, j, k, c) in triples {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(Error::IndexOutOfRange { i, j, k, dim: n });
            }
            if c.field() != field {
                return Err(crate::linalg::LinalgError::FieldMismatch {
                    expected: field,
                    found: c.field(),
                }
                .into());
            }
            let sum = m.get(k, i * n + j) + c;
            m.set(k, i * n + j, sum);
        }
        if unit.len() != n {
            return Err(Error::VectorLength {
                expected: n,
                found: unit.len(),
            });
        }
        let zero = space.category().group().zero();
        if let Some(bad) = (0..n).find(|&i| !unit[i].is_zero() && space.degree(i) != &zero) {
            return Err(Error::UnitDegree(bad));
        }
        let a2 = space.tensor(&space)?;
        for k in 0..n {
            for col in 0..n * n {
                if !m.get(k, col).is_zero() && a2.degree(col) != space.degree(k) {
                    let (i, j) = (col / n.max(1), col % n.max(1));
                    return Err(Error::NonHomogeneous(format!(
                        "e{i}·e{j} has a component along e{k} of a different degree"
                    )));
                }
            }
        }
        let mult = GradedMap::new(a2, space.clone(), m)?;
        let unit = GradedMap::from_vector(&space, unit)?;
        Algebra::new(space, mult, unit)
    }

    /// Constructor for structures already known to be valid; still checked.
    pub(crate) fn derived(
        space: GradedSpace,
        mult: GradedMap,
        unit: GradedMap,
        what: &str,
    ) -> Result<Algebra> {
        Algebra::new(space, mult, unit)
            .map_err(|e| Error::Inconsistency(format!("{what} is not a valid algebra: {e}")))
    }

    /// The ground field `k` as an algebra.
    pub fn ground(cat: &Arc<GradedCategory>) -> Algebra {
        let field = cat.field();
        Algebra::from_structure_constants(
            GradedSpace::unit(cat),
            &[(0, 0, 0, field.one())],
            &[field.one()],
        )
        .expect("k is an algebra")
    }

    /// The zero algebra.
    pub fn zero(cat: &Arc<GradedCategory>) -> Algebra {
        Algebra::from_structure_constants(GradedSpace::even(cat, 0), &[], &[])
            .expect("0 is an algebra")
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.dim();
        let id = GradedMap::identity(&self.space);
        let left = self.mult.compose(&self.mult.tensor(&id)?)?;
        let right = self.mult.compose(&id.tensor(&self.mult)?)?;
        if let Some((k, col)) = left.matrix().first_difference(right.matrix()) {
            let (i, j, l) = basis_triple(col, n);
            return Err(Error::Axiom {
                law: "associativity",
                witness: format!("(e{i}·e{j})·e{l} ≠ e{i}·(e{j}·e{l}) at coordinate {k}"),
            });
        }
        let left_unit = self.mult.compose(&self.unit.tensor(&id)?)?;
        if let Some((k, j)) = left_unit.matrix().first_difference(id.matrix()) {
            return Err(Error::Axiom {
                law: "left unit",
                witness: format!("1·e{j} ≠ e{j} at coordinate {k}"),
            });
        }
        let right_unit = self.mult.compose(&id.tensor(&self.unit)?)?;
        if let Some((k, j)) = right_unit.matrix().first_difference(id.matrix()) {
            return Err(Error::Axiom {
                law: "right unit",
                witness: format!("e{j}·1 ≠ e{j} at coordinate {k}"),
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

    pub fn mult(&self) -> &GradedMap {
        &self.mult
    }

    pub fn unit(&self) -> &GradedMap {
        &self.unit
    }

    pub fn unit_vector(&self) -> Vector {
        self.unit.matrix().column(0)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// `x · y` for coordinate vectors.
    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let field = self.field();
        let mut xy = vec![field.zero(); n * n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                xy[i * n + j] = a * b;
            }
        }
        self.mult.apply(&xy)
    }

    /// Structure constants in the sparse input format, sorted.
    pub fn structure_constants(&self) -> Vec<Triple> {
        let n = self.dim();
        let m = self.mult.matrix();
        let mut out = Vec::new();
        for col in 0..n * n {
            for k in 0..n {
                let c = m.get(k, col);
                if !c.is_zero() {
                    out.push((col / n, col % n, k, c.clone()));
                }
            }
        }
        out
    }

    /// `true` if `m ∘ τ_{A,A} = m`.
    pub fn is_braided_commutative(&self) -> Result<bool> {
        Ok(opposite(self)?.mult == self.mult)
    }
}

/// `A^τ`: multiplication `m ∘ τ_{A,A}`, same unit.
pub fn opposite(a: &Algebra) -> Result<Algebra> {
    let tau = braiding(&a.space, &a.space)?;
    Algebra::derived(
        a.space.clone(),
        a.mult.compose(&tau)?,
        a.unit.clone(),
        "opposite algebra",
    )
}

/// `A ⊗ B` with multiplication `(m_A ⊗ m_B)(A ⊗ τ_{B,A} ⊗ B)` and unit `e_A ⊗ e_B`.
pub fn braided_tensor_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    let space = a.space.tensor(&b.space)?;
    let tau = braiding(&b.space, &a.space)?;
    let ia = GradedMap::identity(&a.space);
    let ib = GradedMap::identity(&b.space);
    let mult = compose_all(&[&a.mult.tensor(&b.mult)?, &tensor_all(&[&ia, &tau, &ib])?])?;
    let unit = a.unit.tensor(&b.unit)?;
    Algebra::derived(space, mult, unit, "braided tensor product")
}

/// `A^e = A ⊗ A^τ`.
pub fn enveloping(a: &Algebra) -> Result<Algebra> {
    braided_tensor_algebra(a, &opposite(a)?)
}

/// `^eA = A^τ ⊗ A`.
pub fn co_enveloping(a: &Algebra) -> Result<Algebra> {
    braided_tensor_algebra(&opposite(a)?, a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A module with action `A ⊗ V → V` (left) or `V ⊗ A → V` (right), validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    algebra: Algebra,
    space: GradedSpace,
    action: GradedMap,
    side: Side,
}

impl Module {
    pub fn new(
        algebra: Algebra,
        space: GradedSpace,
        action: GradedMap,
        side: Side,
    ) -> Result<Module> {
        let expected = match side {
            Side::Left => algebra.space.tensor(&space)?,
            Side::Right => space.tensor(&algebra.space)?,
        };
        if action.domain() != &expected || action.codomain() != &space {
            return Err(Error::Precondition("action has the wrong shape".into()));
        }
        let module = Module {
            algebra,
            space,
            action,
            side,
        };
        module.check_axioms()?;
        Ok(module)
    }

    pub fn left(algebra: Algebra, space: GradedSpace, action: GradedMap) -> Result<Module> {
        Module::new(algebra, space, action, Side::Left)
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: &Algebra) -> Module {
        Module {
            algebra: algebra.clone(),
            space: algebra.space.clone(),
            action: algebra.mult.clone(),
            side: Side::Left,
        }
    }

    fn check_axioms(&self) -> Result<()> {
        let ia = GradedMap::identity(&self.algebra.space);
        let iv = GradedMap::identity(&self.space);
        let (m, e, rho) = (&self.algebra.mult, &self.algebra.unit, &self.action);
        let (assoc_l, assoc_r, unit) = match self.side {
            Side::Left => (
                rho.compose(&m.tensor(&iv)?)?,
                rho.compose(&ia.tensor(rho)?)?,
                rho.compose(&e.tensor(&iv)?)?,
            ),
            Side::Right => (
                rho.compose(&iv.tensor(m)?)?,
                rho.compose(&rho.tensor(&ia)?)?,
                rho.compose(&iv.tensor(e)?)?,
            ),
        };
        if let Some((k, col)) = assoc_l.matrix().first_difference(assoc_r.matrix()) {
            return Err(Error::Axiom {
                law: "module associativity",
                witness: format!("basis tensor {col}, coordinate {k}"),
            });
        }
        if let Some((k, col)) = unit.matrix().first_difference(iv.matrix()) {
            return Err(Error::Axiom {
                law: "module unit",
                witness: format!("basis vector {col}, coordinate {k}"),
            });
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn action(&self) -> &GradedMap {
        &self.action
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Transports the module structure along an invertible degree-0 map `V → W`.
    pub fn transport(&self, iso: &GradedMap) -> Result<Module> {
        let inv = iso
            .inverse()
            .ok_or_else(|| Error::Precondition("transport map is not invertible".into()))?;
        let ia = GradedMap::identity(&self.algebra.space);
        let action = match self.side {
            Side::Left => compose_all(&[iso, &self.action, &ia.tensor(&inv)?])?,
            Side::Right => compose_all(&[iso, &self.action, &inv.tensor(&ia)?])?,
        };
        Module::new(
            self.algebra.clone(),
            iso.codomain().clone(),
            action,
            self.side,
        )
    }

    /// Direct sum of two modules on the same side over the same algebra.
    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        if self.algebra != other.algebra || self.side != other.side {
            return Err(Error::Precondition(
                "direct sum of unrelated modules".into(),
            ));
        }
        let mut degrees = self.space.degrees().to_vec();
        degrees.extend_from_slice(other.space.degrees());
        let space = GradedSpace::new(self.space.category(), degrees)?;
        let (n, p, q) = (self.algebra.dim(), self.dim(), other.dim());
        let field = self.algebra.field();
        let mut m = Matrix::zeros(field, p + q, n * (p + q));
        let r1 = self.action.matrix();
        let r2 = other.action.matrix();
        for a in 0..n {
            for v in 0..p {
                let (col_src, col_dst) = match self.side {
                    Side::Left => (a * p + v, a * (p + q) + v),
                    Side::Right => (v * n + a, v * n + a),
                };
                for k in 0..p {
                    m.set(k, col_dst, r1.get(k, col_src).clone());
                }
            }
            for w in 0..q {
                let (col_src, col_dst) = match self.side {
                    Side::Left => (a * q + w, a * (p + q) + p + w),
                    Side::Right => (w * n + a, (p + w) * n + a),
                };
                for k in 0..q {
                    m.set(p + k, col_dst, r2.get(k, col_src).clone());
                }
            }
        }
        let domain = match self.side {
            Side::Left => self.algebra.space.tensor(&space)?,
            Side::Right => space.tensor(&self.algebra.space)?,
        };
        let action = GradedMap::new(domain, space.clone(), m)?;
        Module::new(self.algebra.clone(), space, action, self.side)
    }
}

/// The two canonical bimodule actions on `A`.
#[derive(Clone, Debug)]
pub struct CanonicalActions {
    /// `A^e ⊗ A → A`, `(a ⊗ b)·x = χ(|b|,|x|) a x b`.
    pub left: Module,
    /// `A ⊗ ^eA → A`, `x·(b ⊗ c) = χ(|x|,|b|) b x c`.
    pub right: Module,
}

pub fn canonical_actions(a: &Algebra) -> Result<CanonicalActions> {
    let ia = GradedMap::identity(&a.space);
    let tau = braiding(&a.space, &a.space)?;
    let m = &a.mult;
    let left_action = compose_all(&[m, &ia.tensor(m)?, &ia.tensor(&tau)?])?;
    let right_action = compose_all(&[m, &m.tensor(&ia)?, &tau.tensor(&ia)?])?;
    let wrap = |e: Error| Error::Inconsistency(format!("canonical action invalid: {e}"));
    let left = Module::left(enveloping(a)?, a.space.clone(), left_action).map_err(wrap)?;
    let right = Module::new(
        co_enveloping(a)?,
        a.space.clone(),
        right_action,
        Side::Right,
    )
    .map_err(wrap)?;
    Ok(CanonicalActions { left, right })
}

/// `^A V`: the `v` with `h(a ⊗ 1 ⊗ v) = h(1 ⊗ a ⊗ v)` for every basis `a`.
pub fn invariants(base: &Algebra, module: &Module) -> Result<Subobject> {
    if module.side != Side::Left || module.algebra != enveloping(base)? {
        return Err(Error::Precondition(
            "invariants need a left module over the enveloping algebra".into(),
        ));
    }
    let n = base.dim();
    let d = module.dim();
    let field = base.field();
    let one = base.unit_vector();
    let h = module.action.matrix();
    let mut blocks = Vec::with_capacity(n);
    for a in 0..n {
        // Column j of h at index (x ⊗ y ⊗ v_j) is x*n*d + y*d + j.
        let block = Matrix::from_fn(field, d, d, |k, j| {
            let mut acc = field.zero();
            for (u, c) in one.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let lhs = h.get(k, a * n * d + u * d + j);
                let rhs = h.get(k, u * n * d + a * d + j);
                acc = &acc + &(c * &(lhs - rhs));
            }
            acc
        });
        blocks.push(block);
    }
    let stacked = if blocks.is_empty() {
        Matrix::zeros(field, 0, d)
    } else {
        Matrix::vstack(&blocks)
    };
    Ok(Subobject::kernel(&module.space, &stacked)?)
}

#[derive(Clone, Debug)]
pub struct Center {
    pub basis: Vec<Vector>,
    pub dimension: usize,
    /// Dimension 1 and spanned by the unit.
    pub central: bool,
}

/// Braided center: invariants of the canonical `A^e`-module `A`.
pub fn center(a: &Algebra) -> Result<Center> {
    let actions = canonical_actions(a)?;
    let sub = invariants(a, &actions.left)?;
    let basis: Vec<Vector> = (0..sub.dim())
        .map(|j| sub.inclusion.matrix().column(j))
        .collect();
    let unit = a.unit_vector();
    let central = basis.len() == 1 && !unit.iter().all(Scalar::is_zero) && {
        let pair = Matrix::from_columns(a.field(), a.dim(), &[basis[0].clone(), unit]);
        pair.rank() == 1
    };
    ensure(a.is_zero() || !basis.is_empty(), || {
        "the unit is not invariant".into()
    })?;
    Ok(Center {
        dimension: basis.len(),
        basis,
        central,
    })
}
