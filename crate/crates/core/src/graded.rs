//! The braided monoidal category of `G`-graded vector spaces.
//!
//! `G` is a finite abelian group `ℤ/n₁ × … × ℤ/n_r` and the braiding comes from
//! a bicharacter `χ`: `τ(v ⊗ w) = χ(|v|, |w|) w ⊗ v` on homogeneous vectors.
//! Morphisms are degree-0 linear maps stored as matrices in the row-major
//! tensor index convention.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::{Field, LinalgError, Matrix, Scalar, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("cyclic order must be positive (factor {0})")]
    ZeroOrder(usize),
    #[error("bicharacter table must be {expected}x{expected}")]
    TableShape { expected: usize },
    #[error("bicharacter value χ(g{i}, g{j}) is zero")]
    ZeroValue { i: usize, j: usize },
    #[error("bicharacter value χ(g{i}, g{j}) is not over {field}")]
    TableField { i: usize, j: usize, field: Field },
    #[error(
        "bicharacter value χ(g{i}, g{j}) = {value} is incompatible with the orders {ni}, {nj}"
    )]
    OrderIncompatible {
        i: usize,
        j: usize,
        value: String,
        ni: u64,
        nj: u64,
    },
    #[error("degree {0:?} does not belong to the grading group")]
    BadDegree(Vec<u64>),
    #[error("objects live in different categories")]
    CategoryMismatch,
    #[error("shape mismatch: matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("map is not homogeneous of degree 0: entry ({row}, {col}) links degrees {from:?} and {to:?}")]
    NotDegreeZero {
        row: usize,
        col: usize,
        from: Vec<u64>,
        to: Vec<u64>,
    },
    #[error("domain/codomain mismatch in composition")]
    Composition,
    #[error("kernel vector is not homogeneous")]
    NotHomogeneous,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `ℤ/n₁ × … × ℤ/n_r`; the empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    orders: Vec<u64>,
}

/// An element of a [`GradingGroup`], each component reduced into `[0, nᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn components(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl GradingGroup {
    pub fn new(orders: Vec<u64>) -> Result<GradingGroup, GradedError> {
        if let Some(i) = orders.iter().position(|&n| n == 0) {
            return Err(GradedError::ZeroOrder(i));
        }
        Ok(GradingGroup { orders })
    }

    pub fn trivial() -> GradingGroup {
        GradingGroup { orders: Vec::new() }
    }

    pub fn cyclic(n: u64) -> GradingGroup {
        GradingGroup::new(vec![n]).expect("positive order")
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    /// Reduces arbitrary integer components into the group.
    pub fn element(&self, components: &[i64]) -> Result<GroupElement, GradedError> {
        if components.len() != self.orders.len() {
            return Err(GradedError::BadDegree(
                components.iter().map(|&c| c as u64).collect(),
            ));
        }
        Ok(GroupElement(
            components
                .iter()
                .zip(&self.orders)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        ))
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.orders.len() && g.0.iter().zip(&self.orders).all(|(c, n)| c < n)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), n)| (x + y) % n)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.orders)
                .map(|(x, n)| (n - x) % n)
                .collect(),
        )
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![self.zero()];
        for (pos, &n) in self.orders.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|g| {
                    (0..n).map(move |c| {
                        let mut h = g.clone();
                        h.0[pos] = c;
                        h
                    })
                })
                .collect();
        }
        out
    }
}

/// A bicharacter `χ : G × G → k^×`, stored on generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicharacter {
    field: Field,
    table: Vec<Vec<Scalar>>,
}

/// Checks that `table[i][j] = χ(gᵢ, gⱼ)` defines a bicharacter on `group`.
pub fn validate_bicharacter(
    group: &GradingGroup,
    field: Field,
    table: Vec<Vec<Scalar>>,
) -> Result<Bicharacter, GradedError> {
    let r = group.rank();
    if table.len() != r || table.iter().any(|row| row.len() != r) {
        return Err(GradedError::TableShape { expected: r });
    }
    for (i, row) in table.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            if value.field() != field {
                return Err(GradedError::TableField { i, j, field });
            }
            if value.is_zero() {
                return Err(GradedError::ZeroValue { i, j });
            }
            let (ni, nj) = (group.orders[i], group.orders[j]);
            if !value.pow(ni as i64).is_one() || !value.pow(nj as i64).is_one() {
                return Err(GradedError::OrderIncompatible {
                    i,
                    j,
                    value: value.to_string(),
                    ni,
                    nj,
                });
            }
        }
    }
    Ok(Bicharacter { field, table })
}

impl Bicharacter {
    pub fn trivial(group: &GradingGroup, field: Field) -> Bicharacter {
        let r = group.rank();
        Bicharacter {
            field,
            table: vec![vec![field.one(); r]; r],
        }
    }

    pub fn table(&self) -> &[Vec<Scalar>] {
        &self.table
    }

    /// `χ(g, h) = ∏ χ(gᵢ, gⱼ)^{g_i h_j}`.
    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        let mut acc = self.field.one();
        for (i, &gi) in g.0.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (j, &hj) in h.0.iter().enumerate() {
                if hj == 0 {
                    continue;
                }
                acc = &acc * &self.table[i][j].pow((gi * hj) as i64);
            }
        }
        acc
    }

    /// `τ_{V,W} τ_{W,V} = 1` for all V, W.
    pub fn is_symmetric(&self) -> bool {
        let r = self.table.len();
        (0..r).all(|i| (0..r).all(|j| (&self.table[i][j] * &self.table[j][i]).is_one()))
    }
}

/// Field, grading group and bicharacter: everything the braiding depends on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedCategory {
    field: Field,
    group: GradingGroup,
    chi: Bicharacter,
}

impl GradedCategory {
    pub fn new(field: Field, group: GradingGroup, chi: Bicharacter) -> Arc<GradedCategory> {
        assert_eq!(chi.field, field);
        assert_eq!(chi.table.len(), group.rank());
        Arc::new(GradedCategory { field, group, chi })
    }

    /// Ordinary vector spaces with the plain flip as braiding.
    pub fn ungraded(field: Field) -> Arc<GradedCategory> {
        let group = GradingGroup::trivial();
        let chi = Bicharacter::trivial(&group, field);
        GradedCategory::new(field, group, chi)
    }

    /// `ℤ/n` with `χ(1, 1) = q`.
    pub fn cyclic(field: Field, n: u64, q: Scalar) -> Result<Arc<GradedCategory>, GradedError> {
        let group = GradingGroup::cyclic(n);
        let chi = validate_bicharacter(&group, field, vec![vec![q]])?;
        Ok(GradedCategory::new(field, group, chi))
    }

    /// Super vector spaces: `ℤ/2` with the sign rule.
    pub fn super_vector_spaces(field: Field) -> Arc<GradedCategory> {
        GradedCategory::cyclic(field, 2, field.from_i64(-1)).expect("(-1)^2 = 1")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.chi
    }

    pub fn chi(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        self.chi.eval(g, h)
    }

    pub fn is_symmetric(&self) -> bool {
        self.chi.is_symmetric()
    }
}

/// Convenience wrapper for the symmetry test on a bare bicharacter.
pub fn is_symmetric(b: &Bicharacter) -> bool {
    b.is_symmetric()
}

/// A finite-dimensional graded space given by the degrees of its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    cat: Arc<GradedCategory>,
    degrees: Vec<GroupElement>,
}

fn same_category(a: &Arc<GradedCategory>, b: &Arc<GradedCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl GradedSpace {
    pub fn new(
        cat: &Arc<GradedCategory>,
        degrees: Vec<GroupElement>,
    ) -> Result<GradedSpace, GradedError> {
        if let Some(bad) = degrees.iter().find(|g| !cat.group.contains(g)) {
            return Err(GradedError::BadDegree(bad.0.clone()));
        }
        Ok(GradedSpace {
            cat: Arc::clone(cat),
            degrees,
        })
    }

    /// Space whose basis vectors all have degree 0.
    pub fn even(cat: &Arc<GradedCategory>, dim: usize) -> GradedSpace {
        GradedSpace {
            cat: Arc::clone(cat),
            degrees: vec![cat.group.zero(); dim],
        }
    }

    /// The unit object `I`.
    pub fn unit(cat: &Arc<GradedCategory>) -> GradedSpace {
        GradedSpace::even(cat, 1)
    }

    pub fn category(&self) -> &Arc<GradedCategory> {
        &self.cat
    }

    pub fn field(&self) -> Field {
        self.cat.field
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn same_category(&self, other: &GradedSpace) -> bool {
        same_category(&self.cat, &other.cat)
    }

    /// `V ⊗ W` with degree `|vᵢ| + |wⱼ|` at index `i·dim(W) + j`.
    pub fn tensor(&self, other: &GradedSpace) -> Result<GradedSpace, GradedError> {
        if !self.same_category(other) {
            return Err(GradedError::CategoryMismatch);
        }
        let group = &self.cat.group;
        let degrees = self
            .degrees
            .iter()
            .flat_map(|g| other.degrees.iter().map(move |h| group.add(g, h)))
            .collect();
        Ok(GradedSpace {
            cat: Arc::clone(&self.cat),
            degrees,
        })
    }

    /// Tensor power `V^{⊗n}`; `V^{⊗0} = I`.
    pub fn power(&self, n: usize) -> GradedSpace {
        (0..n).fold(GradedSpace::unit(&self.cat), |acc, _| {
            acc.tensor(self).expect("same category")
        })
    }

    /// Same basis with inverted degrees: the object underlying both duals.
    pub fn dual(&self) -> GradedSpace {
        GradedSpace {
            cat: Arc::clone(&self.cat),
            degrees: self.degrees.iter().map(|g| self.cat.group.neg(g)).collect(),
        }
    }

    /// `true` if `v` is supported on basis vectors of a single degree; returns that degree.
    pub fn homogeneous_degree(&self, v: &[Scalar]) -> Option<GroupElement> {
        let mut degree = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match &degree {
                None => degree = Some(self.degrees[i].clone()),
                Some(d) if d != &self.degrees[i] => return None,
                _ => {}
            }
        }
        Some(degree.unwrap_or_else(|| self.cat.group.zero()))
    }
}

/// A degree-0 linear map between graded spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMap {
    domain: GradedSpace,
    codomain: GradedSpace,
    matrix: Matrix,
}

impl GradedMap {
    /// Checks shape, field, and that every nonzero entry links equal degrees.
    pub fn new(
        domain: GradedSpace,
        codomain: GradedSpace,
        matrix: Matrix,
    ) -> Result<GradedMap, GradedError> {
        if !domain.same_category(&codomain) {
            return Err(GradedError::CategoryMismatch);
        }
        if matrix.field() != domain.field() {
            return Err(LinalgError::FieldMismatch {
                expected: domain.field(),
                found: matrix.field(),
            }
            .into());
        }
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(GradedError::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: codomain.dim(),
                expected_cols: domain.dim(),
            });
        }
        for (row, col, _) in matrix.nonzero_entries() {
            if codomain.degrees[row] != domain.degrees[col] {
                return Err(GradedError::NotDegreeZero {
                    row,
                    col,
                    from: domain.degrees[col].0.clone(),
                    to: codomain.degrees[row].0.clone(),
                });
            }
        }
        Ok(GradedMap {
            domain,
            codomain,
            matrix,
        })
    }

    fn trusted(domain: GradedSpace, codomain: GradedSpace, matrix: Matrix) -> GradedMap {
        debug_assert!(GradedMap::new(domain.clone(), codomain.clone(), matrix.clone()).is_ok());
        GradedMap {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn identity(space: &GradedSpace) -> GradedMap {
        GradedMap::trusted(
            space.clone(),
            space.clone(),
            Matrix::identity(space.field(), space.dim()),
        )
    }

    pub fn zero(domain: &GradedSpace, codomain: &GradedSpace) -> GradedMap {
        GradedMap::trusted(
            domain.clone(),
            codomain.clone(),
            Matrix::zeros(domain.field(), codomain.dim(), domain.dim()),
        )
    }

    /// The map `I → V` sending `1` to `v`.
    pub fn from_vector(codomain: &GradedSpace, v: &[Scalar]) -> Result<GradedMap, GradedError> {
        let unit = GradedSpace::unit(codomain.category());
        GradedMap::new(
            unit,
            codomain.clone(),
            Matrix::column_vector(codomain.field(), v),
        )
    }

    /// The functional `V → I` with the given row.
    pub fn functional(domain: &GradedSpace, row: &[Scalar]) -> Result<GradedMap, GradedError> {
        let unit = GradedSpace::unit(domain.category());
        GradedMap::new(
            domain.clone(),
            unit,
            Matrix::from_fn(domain.field(), 1, row.len(), |_, j| row[j].clone()),
        )
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GradedMap) -> Result<GradedMap, GradedError> {
        if first.codomain != self.domain {
            return Err(GradedError::Composition);
        }
        Ok(GradedMap::trusted(
            first.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&first.matrix),
        ))
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        Ok(GradedMap::trusted(
            self.domain.tensor(&other.domain)?,
            self.codomain.tensor(&other.codomain)?,
            self.matrix.kronecker(&other.matrix),
        ))
    }

    pub fn add(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        self.check_parallel(other)?;
        Ok(GradedMap::trusted(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix),
        ))
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        self.check_parallel(other)?;
        Ok(GradedMap::trusted(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.sub(&other.matrix),
        ))
    }

    pub fn scale(&self, c: &Scalar) -> GradedMap {
        GradedMap::trusted(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.scale(c),
        )
    }

    fn check_parallel(&self, other: &GradedMap) -> Result<(), GradedError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(GradedError::Composition);
        }
        Ok(())
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_square() && self.rank() == self.matrix.rows()
    }

    /// Inverse as a graded map, `None` if singular.
    pub fn inverse(&self) -> Option<GradedMap> {
        let inv = self.matrix.invert().ok()??;
        Some(GradedMap::trusted(
            self.codomain.clone(),
            self.domain.clone(),
            inv,
        ))
    }
}

/// Composite of maps written in the usual order: `compose_all(&[f, g, h]) = f ∘ g ∘ h`.
pub fn compose_all(maps: &[&GradedMap]) -> Result<GradedMap, GradedError> {
    let (last, rest) = maps.split_last().expect("at least one map");
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, f| f.compose(&acc))
}

/// `f₁ ⊗ f₂ ⊗ … ⊗ fₙ`.
pub fn tensor_all(maps: &[&GradedMap]) -> Result<GradedMap, GradedError> {
    let (first, rest) = maps.split_first().expect("at least one map");
    rest.iter()
        .try_fold((*first).clone(), |acc, f| acc.tensor(f))
}

/// A graded subspace together with its inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subobject {
    pub space: GradedSpace,
    pub inclusion: GradedMap,
}

impl Subobject {
    /// Kernel of a matrix acting on `domain`. The matrix need not be degree-0
    /// but must map homogeneous vectors to homogeneous rows so that the kernel is
    /// graded; each basis vector is checked to be homogeneous.
    pub fn kernel(domain: &GradedSpace, matrix: &Matrix) -> Result<Subobject, GradedError> {
        assert_eq!(matrix.cols(), domain.dim());
        let basis = matrix.kernel_basis();
        let degrees = basis
            .iter()
            .map(|v| {
                domain
                    .homogeneous_degree(v)
                    .ok_or(GradedError::NotHomogeneous)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let space = GradedSpace::new(domain.category(), degrees)?;
        let inclusion = GradedMap::new(
            space.clone(),
            domain.clone(),
            Matrix::from_columns(domain.field(), domain.dim(), &basis),
        )?;
        Ok(Subobject { space, inclusion })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// `τ_{V,W} : V ⊗ W → W ⊗ V`, `vᵢ ⊗ wⱼ ↦ χ(|vᵢ|, |wⱼ|) wⱼ ⊗ vᵢ`.
pub fn braiding(v: &GradedSpace, w: &GradedSpace) -> Result<GradedMap, GradedError> {
    braiding_with(v, w, |cat, g, h| cat.chi(g, h))
}

/// `τ_{V,W}⁻¹ : W ⊗ V → V ⊗ W`, `wⱼ ⊗ vᵢ ↦ χ(|vᵢ|, |wⱼ|)⁻¹ vᵢ ⊗ wⱼ`.
pub fn braiding_inverse(v: &GradedSpace, w: &GradedSpace) -> Result<GradedMap, GradedError> {
    let forward = braiding(v, w)?;
    let (m, n) = (v.dim(), w.dim());
    let field = v.field();
    let cat = v.category();
    let mut matrix = Matrix::zeros(field, m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            let c = cat
                .chi(v.degree(i), w.degree(j))
                .inv()
                .expect("χ takes unit values");
            matrix.set(i * n + j, j * m + i, c);
        }
    }
    Ok(GradedMap::trusted(
        forward.codomain.clone(),
        forward.domain.clone(),
        matrix,
    ))
}

/// The plain flip `vᵢ ⊗ wⱼ ↦ wⱼ ⊗ vᵢ`, ignoring the bicharacter.
pub fn transposition(v: &GradedSpace, w: &GradedSpace) -> Result<GradedMap, GradedError> {
    braiding_with(v, w, |cat, _, _| cat.field().one())
}

fn braiding_with(
    v: &GradedSpace,
    w: &GradedSpace,
    coeff: impl Fn(&GradedCategory, &GroupElement, &GroupElement) -> Scalar,
) -> Result<GradedMap, GradedError> {
    let domain = v.tensor(w)?;
    let codomain = w.tensor(v)?;
    let (m, n) = (v.dim(), w.dim());
    let cat = v.category();
    let mut matrix = Matrix::zeros(v.field(), m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            matrix.set(j * m + i, i * n + j, coeff(cat, v.degree(i), w.degree(j)));
        }
    }
    Ok(GradedMap::trusted(domain, codomain, matrix))
}

/// Left dual `(V*, db : I → V ⊗ V*, ev : V* ⊗ V → I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftDual {
    pub dual: GradedSpace,
    pub db: GradedMap,
    pub ev: GradedMap,
}

/// Right dual `(V^♯, db′ : I → V^♯ ⊗ V, ev′ : V ⊗ V^♯ → I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightDual {
    pub dual: GradedSpace,
    pub db: GradedMap,
    pub ev: GradedMap,
}

/// Dual basis with inverted degrees; `db(1) = Σ eᵢ ⊗ eᵢ*`, `ev(eᵢ* ⊗ eⱼ) = δᵢⱼ`.
pub fn left_dual(v: &GradedSpace) -> LeftDual {
    let dual = v.dual();
    let n = v.dim();
    let field = v.field();
    let unit = GradedSpace::unit(v.category());
    let mut diag = vec![field.zero(); n * n];
    for i in 0..n {
        diag[i * n + i] = field.one();
    }
    let db = GradedMap::trusted(
        unit.clone(),
        v.tensor(&dual).expect("same category"),
        Matrix::column_vector(field, &diag),
    );
    let ev = GradedMap::trusted(
        dual.tensor(v).expect("same category"),
        unit,
        Matrix::column_vector(field, &diag).transpose(),
    );
    LeftDual { dual, db, ev }
}

/// `db′ = τ⁻¹_{V*,V} ∘ db` and `ev′ = ev ∘ τ_{V,V*}`.
pub fn right_dual(v: &GradedSpace) -> RightDual {
    let LeftDual { dual, db, ev } = left_dual(v);
    let db_r = braiding_inverse(&dual, v)
        .and_then(|t| t.compose(&db))
        .expect("well-typed");
    let ev_r = braiding(v, &dual)
        .and_then(|t| ev.compose(&t))
        .expect("well-typed");
    RightDual {
        dual,
        db: db_r,
        ev: ev_r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn odd_line(cat: &Arc<GradedCategory>) -> GradedSpace {
        GradedSpace::new(cat, vec![cat.group().element(&[1]).unwrap()]).unwrap()
    }

    #[test]
    fn bicharacter_validation() {
        let trivial = validate_bicharacter(&GradingGroup::trivial(), Q, vec![]).unwrap();
        assert!(trivial.is_symmetric());

        let z2 = GradingGroup::cyclic(2);
        let sign = validate_bicharacter(&z2, Q, vec![vec![Q.from_i64(-1)]]).unwrap();
        assert!(is_symmetric(&sign));

        let z3 = GradingGroup::cyclic(3);
        let err = validate_bicharacter(&z3, Q, vec![vec![Q.from_i64(-1)]]).unwrap_err();
        assert!(matches!(
            err,
            GradedError::OrderIncompatible { i: 0, j: 0, .. }
        ));

        let err = validate_bicharacter(&z2, Q, vec![vec![Q.zero()]]).unwrap_err();
        assert_eq!(err, GradedError::ZeroValue { i: 0, j: 0 });

        let f5 = Field::prime(5).unwrap();
        let z4 = GradingGroup::cyclic(4);
        let b = validate_bicharacter(&z4, f5, vec![vec![f5.from_i64(2)]]).unwrap();
        assert!(!b.is_symmetric());
    }

    #[test]
    fn bicharacter_is_bimultiplicative() {
        let f7 = Field::prime(7).unwrap();
        let g = GradingGroup::new(vec![6, 3]).unwrap();
        let chi = validate_bicharacter(
            &g,
            f7,
            vec![
                vec![f7.from_i64(3), f7.from_i64(2)],
                vec![f7.from_i64(4), f7.from_i64(1)],
            ],
        )
        .unwrap();
        let els = g.elements();
        assert_eq!(els.len(), 18);
        for a in &els {
            for b in &els {
                for c in &els {
                    assert_eq!(chi.eval(&g.add(a, b), c), &chi.eval(a, c) * &chi.eval(b, c));
                    assert_eq!(chi.eval(a, &g.add(b, c)), &chi.eval(a, b) * &chi.eval(a, c));
                }
            }
        }
    }

    #[test]
    fn tensor_degrees() {
        let cat = GradedCategory::super_vector_spaces(Q);
        let unit = GradedSpace::unit(&cat);
        let v = GradedSpace::new(
            &cat,
            vec![cat.group().zero(), cat.group().element(&[1]).unwrap()],
        )
        .unwrap();
        assert_eq!(unit.tensor(&v).unwrap(), v);
        let w = GradedSpace::even(&cat, 3);
        let vw = v.tensor(&w).unwrap();
        assert_eq!(vw.dim(), 6);
        assert_eq!(vw.degree(3).components(), &[1]);
        assert_eq!(vw.degree(2).components(), &[0]);
        let odd = odd_line(&cat);
        assert_eq!(odd.tensor(&odd).unwrap().degree(0).components(), &[0]);

        let other = GradedCategory::ungraded(Q);
        assert_eq!(
            GradedSpace::unit(&other).tensor(&v),
            Err(GradedError::CategoryMismatch)
        );
    }

    #[test]
    fn braiding_examples() {
        let cat = GradedCategory::ungraded(Q);
        let v = GradedSpace::even(&cat, 2);
        let w = GradedSpace::even(&cat, 3);
        let t = braiding(&v, &w).unwrap();
        // Plain permutation matrix.
        assert_eq!(t.matrix().nonzero_count(), 6);
        assert!(t.matrix().nonzero_entries().all(|(_, _, e)| e.is_one()));
        assert_eq!(t.matrix().get(2, 1), &Q.one()); // v0⊗w1 ↦ w1⊗v0

        let sup = GradedCategory::super_vector_spaces(Q);
        let odd = odd_line(&sup);
        let t = braiding(&odd, &odd).unwrap();
        assert_eq!(t.matrix(), &Matrix::from_i64(Q, &[&[-1]]));

        let cat = GradedCategory::cyclic(Q, 2, Q.from_i64(-1)).unwrap();
        let g = cat.group().element(&[1]).unwrap();
        let h = cat.group().zero();
        let v = GradedSpace::new(&cat, vec![g.clone()]).unwrap();
        let w = GradedSpace::new(&cat, vec![h.clone()]).unwrap();
        assert_eq!(
            braiding(&v, &w).unwrap().matrix().get(0, 0),
            &cat.chi(&g, &h)
        );
    }

    #[test]
    fn braiding_inverse_is_inverse() {
        let f5 = Field::prime(5).unwrap();
        let cat = GradedCategory::cyclic(f5, 4, f5.from_i64(2)).unwrap();
        let el = |k| cat.group().element(&[k]).unwrap();
        let v = GradedSpace::new(&cat, vec![el(0), el(1), el(3)]).unwrap();
        let w = GradedSpace::new(&cat, vec![el(1), el(2)]).unwrap();
        let t = braiding(&v, &w).unwrap();
        let ti = braiding_inverse(&v, &w).unwrap();
        assert!(ti.compose(&t).unwrap().matrix().is_identity());
        assert!(t.compose(&ti).unwrap().matrix().is_identity());
        // Non-symmetric: τ_{W,V} τ_{V,W} ≠ 1.
        let back = braiding(&w, &v).unwrap();
        assert!(!back.compose(&t).unwrap().matrix().is_identity());
    }

    fn check_left_triangles(v: &GradedSpace) {
        let LeftDual { dual, db, ev } = left_dual(v);
        let id_v = GradedMap::identity(v);
        let id_d = GradedMap::identity(&dual);
        let first = id_v
            .tensor(&ev)
            .unwrap()
            .compose(&db.tensor(&id_v).unwrap())
            .unwrap();
        assert!(first.matrix().is_identity());
        let second = ev
            .tensor(&id_d)
            .unwrap()
            .compose(&id_d.tensor(&db).unwrap())
            .unwrap();
        assert!(second.matrix().is_identity());
    }

    fn check_right_triangles(v: &GradedSpace) {
        let RightDual { dual, db, ev } = right_dual(v);
        let id_v = GradedMap::identity(v);
        let id_d = GradedMap::identity(&dual);
        let first = ev
            .tensor(&id_v)
            .unwrap()
            .compose(&id_v.tensor(&db).unwrap())
            .unwrap();
        assert!(first.matrix().is_identity());
        let second = id_d
            .tensor(&ev)
            .unwrap()
            .compose(&db.tensor(&id_d).unwrap())
            .unwrap();
        assert!(second.matrix().is_identity());
    }

    #[test]
    fn duals() {
        let cat = GradedCategory::ungraded(Q);
        let zero = GradedSpace::even(&cat, 0);
        let LeftDual { dual, db, ev } = left_dual(&zero);
        assert_eq!(dual.dim(), 0);
        assert!(db.matrix().is_zero() && ev.matrix().is_zero());
        assert_eq!((db.matrix().rows(), ev.matrix().cols()), (0, 0));

        let v = GradedSpace::even(&cat, 2);
        let LeftDual { db, .. } = left_dual(&v);
        assert_eq!(
            db.matrix().column(0),
            vec![Q.one(), Q.zero(), Q.zero(), Q.one()]
        );
        let RightDual { db: db_r, .. } = right_dual(&v);
        assert_eq!(db_r.matrix(), db.matrix());
        check_left_triangles(&v);
        check_right_triangles(&v);

        let sup = GradedCategory::super_vector_spaces(Q);
        let odd = odd_line(&sup);
        let LeftDual { dual, db, .. } = left_dual(&odd);
        assert_eq!(dual.degree(0).components(), &[1]);
        let RightDual { db: db_r, .. } = right_dual(&odd);
        assert_eq!(db_r.matrix(), &db.matrix().scale(&Q.from_i64(-1)));
        check_left_triangles(&odd);
        check_right_triangles(&odd);
        check_left_triangles(&zero);
        check_right_triangles(&zero);
    }

    #[test]
    fn degree_zero_enforced() {
        let sup = GradedCategory::super_vector_spaces(Q);
        let odd = odd_line(&sup);
        let unit = GradedSpace::unit(&sup);
        let err =
            GradedMap::new(unit.clone(), odd.clone(), Matrix::from_i64(Q, &[&[1]])).unwrap_err();
        assert!(matches!(
            err,
            GradedError::NotDegreeZero { row: 0, col: 0, .. }
        ));
        assert!(GradedMap::new(unit, odd, Matrix::from_i64(Q, &[&[0]])).is_ok());
    }
}
