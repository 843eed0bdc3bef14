//! Dispatch of named checks to the decision procedures.

use std::collections::BTreeMap;
use std::time::Instant;

use azumaya::algebra::{canonical_actions, center, enveloping, Algebra};
use azumaya::coalgebra::{coseparability, Coalgebra};
use azumaya::engine::{
    galois_map, is_azumaya_coalgebra, is_faithfully_galois, is_left_azumaya, is_separable_azumaya,
    progenerator_checks, separability, separability_ranks,
};
use azumaya::graded::GradedMap;
use azumaya::laws::{
    check_monad_distributive_law, composite_monad, involutive_transfer, is_involutive,
    yang_baxter_check, BDLaw,
};
use azumaya::linalg::Matrix;
use azumaya::relative::{factor_comultiplication, is_cocentral, is_cocommutative, DCoalgebra};
use azumaya::Error;

use crate::document::{CheckRequest, Document, Object};
use crate::report::{CheckError, CheckReport, Report, Witness};

pub const ALGEBRA_CHECKS: &[&str] = &[
    "azumaya",
    "separable_azumaya",
    "separability",
    "center",
    "progenerator",
    "galois",
    "bd_laws",
];

pub const COALGEBRA_CHECKS: &[&str] = &[
    "coalgebra_azumaya",
    "coseparability",
    "cocommutative",
    "relative",
];

/// Checks run on an object when the document requests none.
pub fn default_checks(object: &Object) -> &'static [&'static str] {
    match object {
        Object::Algebra(_) => &["azumaya", "separability", "center", "progenerator"],
        Object::Coalgebra(_) => &["coalgebra_azumaya", "coseparability", "cocommutative"],
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Restrict to these check names.
    pub only: Option<Vec<String>>,
    pub full_witness: bool,
    pub timings: bool,
}

struct Builder<'a> {
    report: CheckReport,
    full: &'a bool,
}

impl Builder<'_> {
    fn verdict(&mut self, name: impl Into<String>, value: bool) {
        self.report.verdicts.insert(name.into(), value);
    }

    fn rank(&mut self, name: impl Into<String>, value: usize) {
        self.report.ranks.insert(name.into(), value);
    }

    fn witness(&mut self, name: impl Into<String>, m: &Matrix) {
        self.report
            .witnesses
            .insert(name.into(), Witness::new(m, *self.full));
    }

    fn detail(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.report.details.insert(name.into(), value.into());
    }
}

/// The requests to execute: the document's own, or the defaults for every object.
pub fn requests(doc: &Document, only: Option<&[String]>) -> Vec<CheckRequest> {
    let mut out: Vec<CheckRequest> = if doc.checks.is_empty() {
        doc.objects
            .iter()
            .flat_map(|(name, obj)| {
                default_checks(obj).iter().map(move |c| CheckRequest {
                    check: c.to_string(),
                    object: name.clone(),
                    base: None,
                    structure: None,
                })
            })
            .collect()
    } else {
        doc.checks.clone()
    };
    if let Some(only) = only {
        out.retain(|r| only.iter().any(|o| o == &r.check));
    }
    out
}

/// Report key of a request: the check name, suffixed `@base` for an explicit base.
pub fn check_label(req: &CheckRequest) -> String {
    match &req.base {
        Some(base) => format!("{}@{base}", req.check),
        None => req.check.clone(),
    }
}

pub fn run(doc: &Document, options: &RunOptions) -> Report {
    let mut report = Report {
        schema: crate::document::SCHEMA_VERSION,
        ..Report::default()
    };
    let mut timings = BTreeMap::new();
    for req in requests(doc, options.only.as_deref()) {
        let start = Instant::now();
        let result = run_one(doc, &req, options.full_witness);
        let label = check_label(&req);
        let key = format!("{}/{}", req.object, label);
        timings.insert(key.clone(), start.elapsed().as_millis());
        let entry = match result {
            Ok(r) => r,
            Err(e) => {
                let kind = if e.is_inconsistency() {
                    report.inconsistencies.push(format!("{key}: {e}"));
                    "inconsistency"
                } else {
                    report.input_errors.push(format!("{key}: {e}"));
                    "input"
                };
                CheckReport {
                    error: Some(CheckError {
                        kind: kind.into(),
                        message: e.to_string(),
                    }),
                    ..CheckReport::default()
                }
            }
        };
        report
            .results
            .entry(req.object.clone())
            .or_default()
            .insert(label, entry);
    }
    if options.timings {
        report.timings = Some(timings);
    }
    report
}

fn run_one(doc: &Document, req: &CheckRequest, full: bool) -> Result<CheckReport, Error> {
    let object = &doc.objects[&req.object];
    let mut b = Builder {
        report: CheckReport::default(),
        full: &full,
    };
    match (object, req.check.as_str()) {
        (Object::Algebra(a), "azumaya") => azumaya(a, &mut b)?,
        (Object::Algebra(a), "separable_azumaya") => {
            let s = is_separable_azumaya(a)?;
            b.verdict("separable_azumaya", s.value());
            b.verdict("via_separability", s.via_separability);
            b.verdict("via_progenerator", s.via_progenerator);
            b.verdict("via_galois", s.via_galois);
        }
        (Object::Algebra(a), "separability") => separable(a, &mut b)?,
        (Object::Algebra(a), "center") => {
            let c = center(a)?;
            b.verdict("central", c.central);
            b.rank("center", c.dimension);
            if !c.basis.is_empty() {
                b.witness(
                    "center_basis",
                    &Matrix::from_columns(a.field(), a.dim(), &c.basis),
                );
            }
        }
        (Object::Algebra(a), "progenerator") => {
            let p = progenerator_checks(a)?;
            let names = [
                "ev_split",
                "db_split",
                "db_twisted_split",
                "unit_split",
                "conservative",
                "matrix_algebra_separable",
            ];
            for (name, value) in names.iter().zip(p.conditions()) {
                b.verdict(*name, value);
            }
            for (name, m) in &p.witnesses {
                b.witness(name.clone(), m);
            }
            b.rank("dim", a.dim());
        }
        (Object::Algebra(a), "galois") => {
            let module = canonical_actions(a)?.left;
            let t = galois_map(&module)?;
            b.rank("galois_map", t.rank());
            b.verdict("galois", t.is_invertible());
            b.verdict("faithfully_galois", is_faithfully_galois(&module)?);
            match t.inverse() {
                Some(inv) => b.witness("galois_map_inverse", inv.matrix()),
                None => b.witness("galois_map", t.matrix()),
            }
        }
        (Object::Algebra(a), "bd_laws") => bd_laws(a, &mut b)?,
        (Object::Coalgebra(c), "coalgebra_azumaya") => {
            let v = is_azumaya_coalgebra(c)?;
            b.verdict("nonzero", v.nonzero);
            b.verdict("chi0_invertible", v.chi0_invertible);
            b.verdict("chi_invertible", v.chi_invertible);
            b.verdict("coseparable", v.coseparable);
            b.verdict("azumaya", v.azumaya);
            if let Some(d) = v.dual_algebra_azumaya {
                b.verdict("dual_algebra_azumaya", d);
            }
            for (k, r) in &v.ranks {
                b.rank(k.clone(), *r);
            }
            for (k, m) in &v.witnesses {
                b.witness(k.clone(), m);
            }
        }
        (Object::Coalgebra(c), "coseparability") => {
            let omega = coseparability(c)?;
            b.verdict("coseparable", omega.is_some());
            match omega {
                Some(w) => b.witness("coseparability", w.matrix()),
                None => {
                    let v = is_azumaya_coalgebra(c)?;
                    for (k, r) in &v.ranks {
                        b.rank(k.clone(), *r);
                    }
                    b.detail("coseparability", "no degree-0 bicomodule retraction of Δ");
                }
            }
        }
        (Object::Coalgebra(c), "cocommutative") => {
            b.verdict("cocommutative", is_cocommutative(c)?);
        }
        (Object::Coalgebra(c), "relative") => relative(doc, req, c, &mut b)?,
        (obj, name) => {
            let known = ALGEBRA_CHECKS.contains(&name) || COALGEBRA_CHECKS.contains(&name);
            let message = if known {
                format!("check `{name}` does not apply to a {}", obj.kind())
            } else {
                format!("unknown check `{name}`")
            };
            return Err(Error::Precondition(message));
        }
    }
    Ok(b.report)
}

fn azumaya(a: &Algebra, b: &mut Builder<'_>) -> Result<(), Error> {
    let v = is_left_azumaya(a)?;
    for (k, value) in v.flags() {
        b.verdict(k, value);
    }
    b.verdict("azumaya", v.azumaya());
    for (k, r) in &v.ranks {
        b.rank(k.clone(), *r);
    }
    for (k, m) in &v.witnesses {
        b.witness(k.clone(), m);
    }
    Ok(())
}

fn separable(a: &Algebra, b: &mut Builder<'_>) -> Result<(), Error> {
    match separability(a)? {
        Some(xi) => {
            b.verdict("separable", true);
            b.witness("separability", xi.matrix());
            let p = xi.apply(&a.unit_vector());
            b.witness(
                "separability_idempotent",
                &Matrix::column_vector(a.field(), &p),
            );
        }
        None => {
            b.verdict("separable", false);
            let (rank, augmented) = separability_ranks(a)?;
            b.rank("system", rank);
            b.rank("augmented_system", augmented);
        }
    }
    Ok(())
}

fn bd_laws(a: &Algebra, b: &mut Builder<'_>) -> Result<(), Error> {
    let tau = BDLaw::braiding(a)?;
    for (prefix, law) in [
        ("tau", tau.clone()),
        ("transposition", BDLaw::transposition(a)?),
    ] {
        let yb = yang_baxter_check(&law)?;
        b.verdict(format!("{prefix}.yang_baxter"), yb.passed);
        if let Some((r, c, label)) = yb.witness {
            b.detail(
                format!("{prefix}.yang_baxter"),
                format!("entry ({r}, {c}) at {label}"),
            );
        }
        let report = check_monad_distributive_law(&law)?;
        for (name, d) in &report.diagrams {
            b.verdict(format!("{prefix}.{name}"), d.passed);
            if let Some((r, c, label)) = &d.witness {
                b.detail(
                    format!("{prefix}.{name}"),
                    format!("entry ({r}, {c}) at {label}"),
                );
            }
        }
        b.verdict(format!("{prefix}.involutive"), is_involutive(&law)?);
        if let Some((x, _)) = involutive_transfer(&law)? {
            b.verdict(format!("{prefix}.azumaya_relative"), x);
        }
    }
    let composite = composite_monad(&tau)?;
    b.verdict(
        "tau.composite_equals_enveloping",
        composite == enveloping(a)?,
    );
    Ok(())
}

fn relative(
    doc: &Document,
    req: &CheckRequest,
    c: &Coalgebra,
    b: &mut Builder<'_>,
) -> Result<(), Error> {
    let base = match &req.base {
        None => c.clone(),
        Some(name) => match &doc.objects[name] {
            Object::Coalgebra(d) => d.clone(),
            Object::Algebra(_) => {
                return Err(Error::Precondition(format!(
                    "base `{name}` is not a coalgebra"
                )))
            }
        },
    };
    let gamma = match &req.structure {
        Some(m) => GradedMap::new(c.space().clone(), base.space().clone(), m.clone())?,
        None if base == *c => GradedMap::identity(c.space()),
        None if base.dim() == 1 => {
            let scale = base.counit_vector()[0]
                .inv()
                .ok_or_else(|| Error::Precondition("base counit vanishes".into()))?;
            GradedMap::functional(c.space(), &c.counit_vector())?.scale(&scale)
        }
        None => {
            return Err(Error::Precondition(
                "a structure map is required for this base".into(),
            ))
        }
    };
    let cocommutative = is_cocommutative(&base)?;
    let cocentral = is_cocentral(&gamma, c, &base)?;
    b.verdict("base_cocommutative", cocommutative);
    b.verdict("cocentral", cocentral);
    if cocommutative && cocentral {
        let dc = DCoalgebra::new(base, c.clone(), gamma)?;
        let f = factor_comultiplication(&dc)?;
        b.verdict("factorized", true);
        b.rank("cotensor", f.cotensor.dim());
        b.witness("cotensor_inclusion", f.cotensor.inclusion.matrix());
        b.witness("factored_comultiplication", f.comult.matrix());
    } else {
        b.verdict("factorized", false);
    }
    Ok(())
}
