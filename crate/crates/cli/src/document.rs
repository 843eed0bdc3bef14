//! The versioned JSON input format and its validation.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use azumaya::algebra::Algebra;
use azumaya::coalgebra::Coalgebra;
use azumaya::graded::{
    validate_bicharacter, GradedCategory, GradedSpace, GradingGroup, GroupElement,
};
use azumaya::linalg::{Field, Matrix, Scalar};
use serde::{Deserialize, Serialize};

use crate::InputError;

pub const SCHEMA_VERSION: u32 = 1;

/// `"Q"` or `{"Fp": p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

/// A group element: a bare integer for cyclic groups, or one component per generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DegreeSpec {
    Cyclic(i64),
    Components(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ObjectSpec {
    /// `structure` entries `[i, j, k, c]` mean `eᵢ eⱼ ∋ c e_k`.
    Algebra {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degrees: Option<Vec<DegreeSpec>>,
        structure: Vec<(usize, usize, usize, String)>,
        unit: Vec<String>,
    },
    /// `structure` entries `[k, i, j, c]` mean `Δ(e_k) ∋ c eᵢ ⊗ eⱼ`.
    Coalgebra {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        dim: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degrees: Option<Vec<DegreeSpec>>,
        structure: Vec<(usize, usize, usize, String)>,
        counit: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub check: String,
    pub object: String,
    /// Base coalgebra for relative checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    /// Structure map for relative checks, as rows of scalar strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDocument {
    pub schema: u32,
    pub field: FieldSpec,
    #[serde(default)]
    pub group: Vec<u64>,
    #[serde(default)]
    pub bicharacter: Vec<Vec<String>>,
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Coalgebra(_) => "coalgebra",
        }
    }
}

/// A relative check's extra operands, resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRequest {
    pub check: String,
    pub object: String,
    pub base: Option<String>,
    pub structure: Option<Matrix>,
}

/// A validated document.
#[derive(Clone, Debug)]
pub struct Document {
    pub category: Arc<GradedCategory>,
    pub objects: BTreeMap<String, Object>,
    pub checks: Vec<CheckRequest>,
    pub raw: RawDocument,
}

fn invalid(field: impl Into<String>, message: impl std::fmt::Display) -> InputError {
    InputError::Invalid {
        field: field.into(),
        message: message.to_string(),
    }
}

pub fn parse_path(path: &Path) -> Result<Document, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<Document, InputError> {
    let raw: RawDocument =
        serde_json::from_str(text).map_err(|e| InputError::Syntax(e.to_string()))?;
    validate(raw)
}

fn field_of(spec: &FieldSpec) -> Result<Field, InputError> {
    match spec {
        FieldSpec::Q => Ok(Field::Rational),
        FieldSpec::Fp(p) => {
            Field::prime(*p).map_err(|_| invalid("field.Fp", format!("p = {p} not prime")))
        }
    }
}

fn scalar(field: Field, text: &str, at: impl FnOnce() -> String) -> Result<Scalar, InputError> {
    field.parse(text).map_err(|e| invalid(at(), e))
}

fn scalars(field: Field, texts: &[String], at: &str) -> Result<Vec<Scalar>, InputError> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| scalar(field, t, || format!("{at}[{i}]")))
        .collect()
}

fn degree(group: &GradingGroup, spec: &DegreeSpec, at: &str) -> Result<GroupElement, InputError> {
    let components = match spec {
        DegreeSpec::Cyclic(g) => vec![*g],
        DegreeSpec::Components(c) => c.clone(),
    };
    group.element(&components).map_err(|e| invalid(at, e))
}

fn space(
    cat: &Arc<GradedCategory>,
    dim: Option<usize>,
    degrees: &Option<Vec<DegreeSpec>>,
    at: &str,
) -> Result<GradedSpace, InputError> {
    let degrees = match (degrees, dim) {
        (Some(d), Some(n)) if d.len() != n => {
            return Err(invalid(
                format!("{at}.degrees"),
                format!("{} degrees given for dimension {n}", d.len()),
            ))
        }
        (Some(d), _) => d
            .iter()
            .enumerate()
            .map(|(i, g)| degree(cat.group(), g, &format!("{at}.degrees[{i}]")))
            .collect::<Result<Vec<_>, _>>()?,
        (None, Some(n)) => vec![cat.group().zero(); n],
        (None, None) => return Err(invalid(at, "either `dim` or `degrees` is required")),
    };
    GradedSpace::new(cat, degrees).map_err(|e| invalid(format!("{at}.degrees"), e))
}

fn triples(
    field: Field,
    entries: &[(usize, usize, usize, String)],
    at: &str,
) -> Result<Vec<(usize, usize, usize, Scalar)>, InputError> {
    entries
        .iter()
        .enumerate()
        .map(|(n, (a, b, c, s))| {
            Ok((
                *a,
                *b,
                *c,
                scalar(field, s, || format!("{at}.structure[{n}]"))?,
            ))
        })
        .collect()
}

fn object(cat: &Arc<GradedCategory>, spec: &ObjectSpec, at: &str) -> Result<Object, InputError> {
    let field = cat.field();
    match spec {
        ObjectSpec::Algebra {
            dim,
            degrees,
            structure,
            unit,
        } => {
            let space = space(cat, *dim, degrees, at)?;
            let t = triples(field, structure, at)?;
            let u = scalars(field, unit, &format!("{at}.unit"))?;
            Algebra::from_structure_constants(space, &t, &u)
                .map(Object::Algebra)
                .map_err(|e| invalid(at, e))
        }
        ObjectSpec::Coalgebra {
            dim,
            degrees,
            structure,
            counit,
        } => {
            let space = space(cat, *dim, degrees, at)?;
            let t = triples(field, structure, at)?;
            let u = scalars(field, counit, &format!("{at}.counit"))?;
            Coalgebra::from_structure_constants(space, &t, &u)
                .map(Object::Coalgebra)
                .map_err(|e| invalid(at, e))
        }
    }
}

pub fn validate(raw: RawDocument) -> Result<Document, InputError> {
    if raw.schema != SCHEMA_VERSION {
        return Err(invalid(
            "schema",
            format!(
                "unsupported version {} (expected {SCHEMA_VERSION})",
                raw.schema
            ),
        ));
    }
    let field = field_of(&raw.field)?;
    let group = GradingGroup::new(raw.group.clone()).map_err(|e| invalid("group", e))?;
    let mut table = Vec::with_capacity(raw.bicharacter.len());
    for (i, row) in raw.bicharacter.iter().enumerate() {
        table.push(scalars(field, row, &format!("bicharacter[{i}]"))?);
    }
    let chi = if raw.bicharacter.is_empty() && group.rank() > 0 {
        return Err(invalid("bicharacter", "required for a nontrivial group"));
    } else {
        validate_bicharacter(&group, field, table).map_err(|e| invalid("bicharacter", e))?
    };
    let cat = GradedCategory::new(field, group, chi);

    let mut objects = BTreeMap::new();
    for (name, spec) in &raw.objects {
        let at = format!("objects.{name}");
        objects.insert(name.clone(), object(&cat, spec, &at)?);
    }

    let mut checks = Vec::with_capacity(raw.checks.len());
    for (n, c) in raw.checks.iter().enumerate() {
        let at = format!("checks[{n}]");
        if !objects.contains_key(&c.object) {
            return Err(invalid(
                format!("{at}.object"),
                format!("undefined object `{}`", c.object),
            ));
        }
        if let Some(base) = &c.base {
            if !objects.contains_key(base) {
                return Err(invalid(
                    format!("{at}.base"),
                    format!("undefined object `{base}`"),
                ));
            }
        }
        let structure = match &c.structure {
            None => None,
            Some(rows) => {
                let parsed = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| scalars(field, row, &format!("{at}.structure[{r}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(
                    Matrix::from_rows(field, parsed)
                        .map_err(|e| invalid(format!("{at}.structure"), e))?,
                )
            }
        };
        checks.push(CheckRequest {
            check: c.check.clone(),
            object: c.object.clone(),
            base: c.base.clone(),
            structure,
        });
    }
    Ok(Document {
        category: cat,
        objects,
        checks,
        raw,
    })
}

fn degree_spec(g: &GroupElement) -> DegreeSpec {
    match g.components() {
        [c] => DegreeSpec::Cyclic(*c as i64),
        cs => DegreeSpec::Components(cs.iter().map(|&c| c as i64).collect()),
    }
}

/// The presentation of an object, using the header (field, group, bicharacter) of `raw`.
pub fn object_spec(object: &Object) -> ObjectSpec {
    // Ungraded spaces are written by dimension alone.
    let shape = |s: &GradedSpace| -> (Option<usize>, Option<Vec<DegreeSpec>>) {
        if s.category().group().rank() == 0 {
            (Some(s.dim()), None)
        } else {
            (None, Some(s.degrees().iter().map(degree_spec).collect()))
        }
    };
    match object {
        Object::Algebra(a) => ObjectSpec::Algebra {
            dim: shape(a.space()).0,
            degrees: shape(a.space()).1,
            structure: a
                .structure_constants()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
            unit: a.unit_vector().iter().map(|s| s.to_string()).collect(),
        },
        Object::Coalgebra(c) => ObjectSpec::Coalgebra {
            dim: shape(c.space()).0,
            degrees: shape(c.space()).1,
            structure: c
                .structure_constants()
                .into_iter()
                .map(|(k, i, j, s)| (k, i, j, s.to_string()))
                .collect(),
            counit: c.counit_vector().iter().map(|s| s.to_string()).collect(),
        },
    }
}

/// A document header for a category, without objects or checks.
pub fn header(cat: &GradedCategory) -> RawDocument {
    RawDocument {
        schema: SCHEMA_VERSION,
        field: match cat.field() {
            Field::Rational => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::Fp(p),
        },
        group: cat.group().orders().to_vec(),
        bicharacter: cat
            .bicharacter()
            .table()
            .iter()
            .map(|row| row.iter().map(|s| s.to_string()).collect())
            .collect(),
        objects: BTreeMap::new(),
        checks: Vec::new(),
    }
}
