//! Azumaya verdicts with every equivalent route computed and compared.

use std::collections::BTreeMap;

use crate::algebra::{
    braided_tensor_algebra, canonical_actions, center, enveloping, invariants, opposite, Algebra,
    Module,
};
use crate::coalgebra::{coseparability, dual_algebra, Coalgebra};
use crate::error::{ensure, Error, Result};
use crate::graded::{braiding, compose_all, GradedMap};
use crate::linalg::Matrix;

use super::chi::{chi0, chi1, chi2, chi_bar, coalgebra_chi, coalgebra_chi0, is_galois};
use super::split::{conservativity_check, progenerator_checks, separability};

/// Every sub-condition of the Azumaya decision for one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub finite: bool,
    pub conservative: bool,
    pub chi0_invertible: bool,
    pub chi1_invertible: bool,
    pub chi_bar_invertible: bool,
    pub chi2_invertible: bool,
    pub separable: bool,
    pub progenerator: bool,
    pub central: bool,
    pub left_azumaya: bool,
    pub right_azumaya: bool,
    /// Rank of each comparison map and the dimension of the center.
    pub ranks: BTreeMap<String, usize>,
    pub witnesses: BTreeMap<String, Matrix>,
}

impl Verdict {
    pub fn azumaya(&self) -> bool {
        self.left_azumaya
    }

    /// Named booleans in a fixed order.
    pub fn flags(&self) -> BTreeMap<&'static str, bool> {
        BTreeMap::from([
            ("finite", self.finite),
            ("conservative", self.conservative),
            ("chi0_invertible", self.chi0_invertible),
            ("chi1_invertible", self.chi1_invertible),
            ("chi_bar_invertible", self.chi_bar_invertible),
            ("chi2_invertible", self.chi2_invertible),
            ("separable", self.separable),
            ("progenerator", self.progenerator),
            ("central", self.central),
            ("left_azumaya", self.left_azumaya),
            ("right_azumaya", self.right_azumaya),
        ])
    }
}

fn record(
    name: &str,
    map: &GradedMap,
    ranks: &mut BTreeMap<String, usize>,
    witnesses: &mut BTreeMap<String, Matrix>,
) -> bool {
    let rank = map.rank();
    ranks.insert(name.to_string(), rank);
    let invertible = map.matrix().is_square() && rank == map.matrix().rows();
    if invertible {
        if let Some(inv) = map.inverse() {
            witnesses.insert(format!("{name}_inverse"), inv.into_matrix());
        }
    } else {
        let kernel = map.matrix().kernel_basis();
        if let Some(v) = kernel.first() {
            witnesses.insert(
                format!("{name}_kernel_vector"),
                Matrix::column_vector(map.matrix().field(), v),
            );
        }
    }
    invertible
}

/// All sub-conditions, without the cross-route assertions.
fn raw_verdict(a: &Algebra) -> Result<Verdict> {
    let mut ranks = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let c0 = chi0(a)?;
    let c1 = chi1(a)?;
    let cb = chi_bar(a)?;
    let c2 = chi2(a)?;
    let chi0_invertible = record("chi0", &c0, &mut ranks, &mut witnesses);
    let chi1_invertible = record("chi1", &c1, &mut ranks, &mut witnesses);
    let chi_bar_invertible = record("chi_bar", &cb, &mut ranks, &mut witnesses);
    let chi2_invertible = record("chi2", &c2, &mut ranks, &mut witnesses);
    let tau = braiding(a.space(), a.space())?;
    ensure(cb == c1.compose(&tau)?, || "χ̄ ≠ χ̄₁ ∘ τ".into())?;
    ensure(c2 == c0.compose(&tau)?, || "χ̄₂ ≠ χ̄₀ ∘ τ".into())?;

    let conservative = conservativity_check(a.space())?;
    let sep = separability(a)?;
    if let Some(xi) = &sep {
        witnesses.insert("separability".into(), xi.matrix().clone());
    }
    let prog = progenerator_checks(a)?;
    if let Some(z) = prog.witnesses.get("ev_splitting") {
        witnesses.insert("ev_splitting".into(), z.clone());
    }
    let cen = center(a)?;
    ranks.insert("center".into(), cen.dimension);
    if !cen.basis.is_empty() {
        witnesses.insert(
            "center_basis".into(),
            Matrix::from_columns(a.field(), a.dim(), &cen.basis),
        );
    }
    Ok(Verdict {
        finite: true,
        conservative,
        chi0_invertible,
        chi1_invertible,
        chi_bar_invertible,
        chi2_invertible,
        separable: sep.is_some(),
        progenerator: prog.ev_split,
        central: cen.central,
        left_azumaya: conservative && chi0_invertible,
        right_azumaya: conservative && chi1_invertible,
        ranks,
        witnesses,
    })
}

/// Full verdict. Fails with an inconsistency if any two equivalent routes disagree.
pub fn is_left_azumaya(a: &Algebra) -> Result<Verdict> {
    let v = raw_verdict(a)?;
    let chis = [
        v.chi0_invertible,
        v.chi1_invertible,
        v.chi_bar_invertible,
        v.chi2_invertible,
    ];
    ensure(chis.iter().all(|&c| c == chis[0]), || {
        format!("comparison maps disagree on invertibility: {chis:?}")
    })?;
    ensure(v.left_azumaya == v.right_azumaya, || {
        "left and right Azumaya verdicts differ".into()
    })?;
    let op = raw_verdict(&opposite(a)?)?;
    ensure(v.left_azumaya == op.right_azumaya, || {
        "A is left Azumaya but its opposite is not right Azumaya (or conversely)".into()
    })?;
    ensure(!v.left_azumaya || v.central, || {
        "Azumaya algebra is not central".into()
    })?;
    ensure(!v.left_azumaya || v.separable, || {
        "Azumaya algebra has no separability witness".into()
    })?;
    Ok(v)
}

/// Same verdict; left and right agree by the assertions above.
pub fn is_right_azumaya(a: &Algebra) -> Result<Verdict> {
    is_left_azumaya(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparableAzumaya {
    /// Separable and Azumaya.
    pub via_separability: bool,
    /// Progenerator and `χ̄₀` invertible.
    pub via_progenerator: bool,
    /// Unit split and the canonical `A^e`-module Galois.
    pub via_galois: bool,
}

impl SeparableAzumaya {
    pub fn value(&self) -> bool {
        self.via_separability
    }
}

pub fn is_separable_azumaya(a: &Algebra) -> Result<SeparableAzumaya> {
    let v = is_left_azumaya(a)?;
    let prog = progenerator_checks(a)?;
    let galois = is_galois(&canonical_actions(a)?.left)?;
    let out = SeparableAzumaya {
        via_separability: v.separable && v.left_azumaya,
        via_progenerator: prog.ev_split && v.chi0_invertible,
        via_galois: prog.unit_split && galois,
    };
    ensure(
        out.via_separability == out.via_progenerator && out.via_progenerator == out.via_galois,
        || format!("separable-Azumaya routes disagree: {out:?}"),
    )?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descent {
    pub tensor_separable: bool,
    pub factor_separable: bool,
}

/// `A ⊗ B` separable ⇒ `A` separable, for nonzero `B`.
pub fn tensor_separability_descent(a: &Algebra, b: &Algebra) -> Result<Descent> {
    if b.is_zero() {
        return Err(Error::Precondition("second factor must be nonzero".into()));
    }
    let tensor_separable = separability(&braided_tensor_algebra(a, b)?)?.is_some();
    let factor_separable = separability(a)?.is_some();
    ensure(!tensor_separable || factor_separable, || {
        "A ⊗ B is separable but A is not".into()
    })?;
    Ok(Descent {
        tensor_separable,
        factor_separable,
    })
}

/// `h ∘ (A ⊗ e ⊗ V) ∘ (A ⊗ i_V) : A ⊗ ^A V → V`.
pub fn evaluation_map(a: &Algebra, module: &Module) -> Result<GradedMap> {
    let sub = invariants(a, module)?;
    let ia = GradedMap::identity(a.space());
    let iv = GradedMap::identity(module.space());
    let insert = crate::graded::tensor_all(&[&ia, a.unit(), &iv])?;
    let insert = GradedMap::new(
        a.space().tensor(module.space())?,
        module.algebra().space().tensor(module.space())?,
        insert.into_matrix(),
    )?;
    Ok(compose_all(&[
        module.action(),
        &insert,
        &ia.tensor(&sub.inclusion)?,
    ])?)
}

/// Per-module bijectivity of the evaluation map.
///
/// For Azumaya `A` every module must pass; otherwise the regular
/// `A^e`-module must fail.
pub fn azumaya_evaluation_test(a: &Algebra, modules: &[Module]) -> Result<Vec<bool>> {
    if a.is_zero() {
        return Err(Error::Precondition("algebra must be nonzero".into()));
    }
    let results = modules
        .iter()
        .map(|m| Ok(evaluation_map(a, m)?.is_invertible()))
        .collect::<Result<Vec<bool>>>()?;
    let azumaya = is_left_azumaya(a)?.left_azumaya;
    if azumaya {
        ensure(results.iter().all(|&r| r), || {
            "evaluation map fails on a module over an Azumaya algebra".into()
        })?;
    } else {
        let regular = Module::regular(&enveloping(a)?);
        ensure(!evaluation_map(a, &regular)?.is_invertible(), || {
            "evaluation map is bijective on A^e for a non-Azumaya algebra".into()
        })?;
    }
    Ok(results)
}

/// Verdict for a coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraVerdict {
    pub nonzero: bool,
    pub chi0_invertible: bool,
    pub chi_invertible: bool,
    pub coseparable: bool,
    pub azumaya: bool,
    /// Verdict of the dual algebra, computed only for symmetric braidings.
    pub dual_algebra_azumaya: Option<bool>,
    pub ranks: BTreeMap<String, usize>,
    pub witnesses: BTreeMap<String, Matrix>,
}

pub fn is_azumaya_coalgebra(c: &Coalgebra) -> Result<CoalgebraVerdict> {
    let mut ranks = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let chi0_invertible = record("chi0", &coalgebra_chi0(c)?, &mut ranks, &mut witnesses);
    let chi_invertible = record("chi_bar", &coalgebra_chi(c)?, &mut ranks, &mut witnesses);
    ensure(chi0_invertible == chi_invertible, || {
        "coalgebra comparison maps disagree on invertibility".into()
    })?;
    let omega = coseparability(c)?;
    if let Some(w) = &omega {
        witnesses.insert("coseparability".into(), w.matrix().clone());
    }
    let nonzero = !c.is_zero();
    let azumaya = nonzero && chi0_invertible;
    let dual_algebra_azumaya = if c.category().is_symmetric() {
        let d = is_left_azumaya(&dual_algebra(c)?)?.left_azumaya;
        ensure(d == azumaya, || {
            format!("coalgebra verdict {azumaya} but dual algebra verdict {d}")
        })?;
        Some(d)
    } else {
        None
    };
    Ok(CoalgebraVerdict {
        nonzero,
        chi0_invertible,
        chi_invertible,
        coseparable: omega.is_some(),
        azumaya,
        dual_algebra_azumaya,
        ranks,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::dual_coalgebra;
    use crate::fixtures;
    use crate::graded::GradedCategory;
    use crate::linalg::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn algebra_verdicts() {
        let v = is_left_azumaya(&fixtures::m2(Q)).unwrap();
        assert!(v.left_azumaya && v.right_azumaya && v.separable && v.central && v.progenerator);
        assert!(v.witnesses.contains_key("chi0_inverse"));

        let v = is_left_azumaya(&fixtures::q_times_q(Q)).unwrap();
        assert!(!v.left_azumaya && v.separable && !v.central);
        assert_eq!(v.ranks["chi0"], 2);

        let v = is_left_azumaya(&fixtures::dual_numbers(Q)).unwrap();
        assert!(!v.left_azumaya && !v.separable);
        assert_eq!(v.ranks["chi0"], 2);
        assert!(v.witnesses.contains_key("chi0_kernel_vector"));

        assert!(
            is_left_azumaya(&fixtures::super_cl1(Q))
                .unwrap()
                .left_azumaya
        );
        assert!(
            !is_left_azumaya(&fixtures::cl1_trivial(Q))
                .unwrap()
                .left_azumaya
        );
        assert!(
            is_right_azumaya(&fixtures::quaternions(Q))
                .unwrap()
                .right_azumaya
        );

        let zero = Algebra::zero(&GradedCategory::ungraded(Q));
        let v = is_left_azumaya(&zero).unwrap();
        assert!(!v.conservative && !v.left_azumaya);
    }

    #[test]
    fn cyclic_cubic_needs_primitive_root() {
        let f7 = Field::prime(7).unwrap();
        assert!(
            is_left_azumaya(&fixtures::cyclic_cubic(f7, f7.from_i64(2)))
                .unwrap()
                .left_azumaya
        );
        assert!(
            is_left_azumaya(&fixtures::cyclic_cubic(f7, f7.from_i64(4)))
                .unwrap()
                .left_azumaya
        );
        assert!(
            !is_left_azumaya(&fixtures::cyclic_cubic(f7, f7.one()))
                .unwrap()
                .left_azumaya
        );
    }

    #[test]
    fn separable_azumaya_routes() {
        assert!(is_separable_azumaya(&fixtures::m2(Q)).unwrap().value());
        assert!(!is_separable_azumaya(&fixtures::dual_numbers(Q))
            .unwrap()
            .value());
        assert!(is_separable_azumaya(&fixtures::ground(Q)).unwrap().value());
        assert!(!is_separable_azumaya(&fixtures::q_times_q(Q))
            .unwrap()
            .value());
    }

    #[test]
    fn descent() {
        let m2 = fixtures::m2(Q);
        let d = tensor_separability_descent(&m2, &m2).unwrap();
        assert!(d.tensor_separable && d.factor_separable);
        let d = tensor_separability_descent(&fixtures::dual_numbers(Q), &m2).unwrap();
        assert!(!d.tensor_separable);
        let k = fixtures::ground(Q);
        for b in [fixtures::q_times_q(Q), fixtures::dual_numbers(Q)] {
            let d = tensor_separability_descent(&k, &b).unwrap();
            assert_eq!(d.tensor_separable, separability(&b).unwrap().is_some());
        }
        let zero = Algebra::zero(&GradedCategory::ungraded(Q));
        assert!(tensor_separability_descent(&m2, &zero).is_err());
    }

    #[test]
    fn evaluation() {
        let m2 = fixtures::m2(Q);
        let ae = Module::regular(&enveloping(&m2).unwrap());
        let canon = canonical_actions(&m2).unwrap().left;
        assert_eq!(
            azumaya_evaluation_test(&m2, &[ae, canon]).unwrap(),
            vec![true, true]
        );

        let qq = fixtures::q_times_q(Q);
        let ae = Module::regular(&enveloping(&qq).unwrap());
        assert_eq!(
            azumaya_evaluation_test(&qq, std::slice::from_ref(&ae)).unwrap(),
            vec![false]
        );
        assert_eq!(evaluation_map(&qq, &ae).unwrap().rank(), 2);

        let k = fixtures::ground(Q);
        let kk = canonical_actions(&k).unwrap().left;
        assert_eq!(azumaya_evaluation_test(&k, &[kk]).unwrap(), vec![true]);
    }

    #[test]
    fn coalgebra_verdicts() {
        let v = is_azumaya_coalgebra(&fixtures::m2_comatrix(Q)).unwrap();
        assert!(v.azumaya && v.coseparable);
        assert_eq!(v.dual_algebra_azumaya, Some(true));
        let v = is_azumaya_coalgebra(&fixtures::grouplike(Q, 2)).unwrap();
        assert!(!v.azumaya && v.coseparable);
        assert_eq!(v.ranks["chi0"], 2);
        assert!(
            is_azumaya_coalgebra(&fixtures::trivial_coalgebra(Q))
                .unwrap()
                .azumaya
        );
        let hq = dual_coalgebra(&fixtures::quaternions(Q)).unwrap();
        assert!(is_azumaya_coalgebra(&hq).unwrap().azumaya);
    }
}
