//! Distributive laws `λ : A ⊗ A → A ⊗ A` satisfying the Yang–Baxter equation.

use std::collections::BTreeMap;

use crate::algebra::{basis_triple, Algebra};
use crate::engine::conservativity_check;
use crate::error::{ensure, Error, Result};
use crate::graded::{braiding, compose_all, left_dual, tensor_all, transposition, GradedMap};

/// Outcome of one diagram: the first differing entry when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramCheck {
    pub passed: bool,
    /// `(row, column)` of the first differing entry, and a readable basis label.
    pub witness: Option<(usize, usize, String)>,
}

impl DiagramCheck {
    fn compare(lhs: &GradedMap, rhs: &GradedMap, label: impl Fn(usize) -> String) -> DiagramCheck {
        match lhs.matrix().first_difference(rhs.matrix()) {
            None => DiagramCheck {
                passed: true,
                witness: None,
            },
            Some((r, c)) => DiagramCheck {
                passed: false,
                witness: Some((r, c, label(c))),
            },
        }
    }
}

/// Per-diagram report of the monad distributive-law axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributiveReport {
    pub diagrams: BTreeMap<&'static str, DiagramCheck>,
}

impl DistributiveReport {
    pub fn all_pass(&self) -> bool {
        self.diagrams.values().all(|d| d.passed)
    }
}

/// A candidate law on an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BDLaw {
    algebra: Algebra,
    lambda: GradedMap,
}

impl BDLaw {
    pub fn new(algebra: Algebra, lambda: GradedMap) -> Result<BDLaw> {
        let a2 = algebra.space().tensor(algebra.space())?;
        if lambda.domain() != &a2 || lambda.codomain() != &a2 {
            return Err(Error::Precondition(
                "λ must be an endomorphism of A ⊗ A".into(),
            ));
        }
        Ok(BDLaw { algebra, lambda })
    }

    /// `λ = τ_{A,A}`.
    pub fn braiding(a: &Algebra) -> Result<BDLaw> {
        BDLaw::new(a.clone(), braiding(a.space(), a.space())?)
    }

    /// The plain flip, ignoring the bicharacter.
    pub fn transposition(a: &Algebra) -> Result<BDLaw> {
        BDLaw::new(a.clone(), transposition(a.space(), a.space())?)
    }

    pub fn identity(a: &Algebra) -> Result<BDLaw> {
        let a2 = a.space().tensor(a.space())?;
        BDLaw::new(a.clone(), GradedMap::identity(&a2))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn lambda(&self) -> &GradedMap {
        &self.lambda
    }

    fn is_valid(&self) -> Result<bool> {
        Ok(check_yang_baxter(self)? && check_monad_distributive_law(self)?.all_pass())
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid()? {
            Ok(())
        } else {
            Err(Error::Precondition(
                "λ fails the Yang–Baxter or distributive-law axioms".into(),
            ))
        }
    }
}

/// `(λ ⊗ A)(A ⊗ λ)(λ ⊗ A) = (A ⊗ λ)(λ ⊗ A)(A ⊗ λ)`.
pub fn check_yang_baxter(l: &BDLaw) -> Result<bool> {
    Ok(yang_baxter_check(l)?.passed)
}

pub fn yang_baxter_check(l: &BDLaw) -> Result<DiagramCheck> {
    let id = GradedMap::identity(l.algebra.space());
    let la = l.lambda.tensor(&id)?;
    let al = id.tensor(&l.lambda)?;
    let lhs = compose_all(&[&la, &al, &la])?;
    let rhs = compose_all(&[&al, &la, &al])?;
    let n = l.algebra.dim();
    Ok(DiagramCheck::compare(&lhs, &rhs, |c| {
        let (i, j, k) = basis_triple(c, n);
        format!("e{i}⊗e{j}⊗e{k}")
    }))
}

/// The four diagrams for `T = S = A ⊗ −`.
pub fn check_monad_distributive_law(l: &BDLaw) -> Result<DistributiveReport> {
    let a = &l.algebra;
    let n = a.dim();
    let id = GradedMap::identity(a.space());
    let (m, e, lambda) = (a.mult(), a.unit(), &l.lambda);
    let single = |c: usize| format!("e{c}");
    let triple = |c: usize| {
        let (i, j, k) = basis_triple(c, n);
        format!("e{i}⊗e{j}⊗e{k}")
    };
    let mut diagrams = BTreeMap::new();
    diagrams.insert(
        "unit_left",
        DiagramCheck::compare(&lambda.compose(&e.tensor(&id)?)?, &id.tensor(e)?, single),
    );
    diagrams.insert(
        "unit_right",
        DiagramCheck::compare(&lambda.compose(&id.tensor(e)?)?, &e.tensor(&id)?, single),
    );
    diagrams.insert(
        "mult_left",
        DiagramCheck::compare(
            &lambda.compose(&m.tensor(&id)?)?,
            &compose_all(&[&id.tensor(m)?, &lambda.tensor(&id)?, &id.tensor(lambda)?])?,
            triple,
        ),
    );
    diagrams.insert(
        "mult_right",
        DiagramCheck::compare(
            &lambda.compose(&id.tensor(m)?)?,
            &compose_all(&[&m.tensor(&id)?, &id.tensor(lambda)?, &lambda.tensor(&id)?])?,
            triple,
        ),
    );
    Ok(DistributiveReport { diagrams })
}

/// `A^λ` with multiplication `m ∘ λ`.
pub fn opposite_via_law(l: &BDLaw) -> Result<Algebra> {
    l.require_valid()?;
    Algebra::derived(
        l.algebra.space().clone(),
        l.algebra.mult().compose(&l.lambda)?,
        l.algebra.unit().clone(),
        "A^λ",
    )
}

/// `A ⊗ A` with multiplication `(m ⊗ m^λ)(A ⊗ λ ⊗ A)` and unit `e ⊗ e`.
pub fn composite_monad(l: &BDLaw) -> Result<Algebra> {
    l.require_valid()?;
    let a = &l.algebra;
    let id = GradedMap::identity(a.space());
    let m_lambda = a.mult().compose(&l.lambda)?;
    let mult = compose_all(&[
        &a.mult().tensor(&m_lambda)?,
        &tensor_all(&[&id, &l.lambda, &id])?,
    ])?;
    let space = a.space().tensor(a.space())?;
    Algebra::derived(space, mult, a.unit().tensor(a.unit())?, "composite monad")
}

/// `λ ∘ λ = 1`.
pub fn is_involutive(l: &BDLaw) -> Result<bool> {
    Ok(l.lambda.compose(&l.lambda)?.matrix().is_identity())
}

/// `(m ⊗ A*)(m ⊗ A ⊗ A*)(A ⊗ λ ⊗ A*)(A ⊗ A ⊗ db)`; equals `χ̄₀` for `λ = τ`.
pub fn chi0_relative(l: &BDLaw) -> Result<GradedMap> {
    let a = &l.algebra;
    let s = a.space();
    let ld = left_dual(s);
    let ia = GradedMap::identity(s);
    let idual = GradedMap::identity(&ld.dual);
    let m = a.mult();
    Ok(compose_all(&[
        &m.tensor(&idual)?,
        &tensor_all(&[m, &ia, &idual])?,
        &tensor_all(&[&ia, &l.lambda, &idual])?,
        &tensor_all(&[&ia, &ia, &ld.db])?,
    ])?)
}

/// Azumaya criterion relative to `λ`: conservative and `χ̄₀^λ` invertible.
pub fn is_azumaya_relative(l: &BDLaw) -> Result<bool> {
    Ok(conservativity_check(l.algebra.space())? && chi0_relative(l)?.is_invertible())
}

/// For a valid involutive law, `A` is Azumaya relative to `λ` iff `A^λ` is.
/// Returns `None` when the hypotheses fail.
pub fn involutive_transfer(l: &BDLaw) -> Result<Option<(bool, bool)>> {
    if !is_involutive(l)? || !l.is_valid()? {
        return Ok(None);
    }
    let twisted = BDLaw::new(opposite_via_law(l)?, l.lambda.clone())?;
    let original = is_azumaya_relative(l)?;
    let transferred = is_azumaya_relative(&twisted)?;
    ensure(original == transferred, || {
        format!("A is Azumaya relative to λ: {original}, A^λ: {transferred}")
    })?;
    Ok(Some((original, transferred)))
}
