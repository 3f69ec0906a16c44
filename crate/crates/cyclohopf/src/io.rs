//! JSON interchange formats for the objects the command line moves between
//! runs: Hopf algebras, plain algebras, representations, group-like lists,
//! twists, cocycles, and comodules.
//!
//! Scalars travel as strings in the canonical text grammar of the field
//! module, so files are exact and emitting the same object twice produces
//! identical bytes. Sparse tensors are stored as coordinate lists with
//! 0-based indices; omitted entries are zero. Loaders check every index
//! against the declared dimension, reject duplicate coordinates, and cap the
//! dimension and conductor before allocating anything proportional to them.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::field::{parse_scalar, ContextOps, Cyclotomic, CyclotomicContext};
use crate::hopfcore::{AlgebraData, HopfAlgebraData, SparseVec};
use crate::hopfimage::Representation;
use crate::linalg::Matrix;
use crate::pointed::{verify_grouplikes, GroupLikeSet};
use crate::tannaka::Comodule;
use crate::twisting::{Cocycle, TwistElement};
use crate::{Error, Result};

/// Largest dimension a file may declare. Tensors are quadratic or cubic in
/// this, so the cap keeps hostile inputs from forcing huge allocations.
pub const MAX_DIM: usize = 512;

/// Largest conductor a file may declare; the field degree and the arithmetic
/// tables grow with it.
pub const MAX_CONDUCTOR: u64 = 10_000;

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if dim > MAX_DIM {
        return Err(Error::InvalidInput(format!(
            "dimension {dim} exceeds the supported maximum {MAX_DIM}"
        )));
    }
    Ok(())
}

fn context_for(conductor: u64) -> Result<Arc<CyclotomicContext>> {
    if conductor > MAX_CONDUCTOR {
        return Err(Error::InvalidInput(format!(
            "conductor {conductor} exceeds the supported maximum {MAX_CONDUCTOR}"
        )));
    }
    CyclotomicContext::new(conductor)
}

fn check_index(index: usize, dim: usize) -> Result<()> {
    if index >= dim {
        return Err(Error::IndexOutOfRange { index, dim });
    }
    Ok(())
}

fn parse_dense(
    ctx: &Arc<CyclotomicContext>,
    values: &[String],
    dim: usize,
    what: &str,
) -> Result<Vec<Cyclotomic>> {
    if values.len() != dim {
        return Err(Error::InvalidInput(format!(
            "{what} has {} entries, expected {dim}",
            values.len()
        )));
    }
    values.iter().map(|s| parse_scalar(ctx, s)).collect()
}

fn format_dense(values: &[Cyclotomic]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

/// Structure constants of a Hopf algebra. `mult` entries [i, j, k, c] give
/// the coefficient of e_k in e_i * e_j; `comult` entries [i, j, k, c] give
/// the coefficient of e_j (x) e_k in Delta(e_i); `antipode` entries
/// [i, j, c] give the coefficient of e_i in S(e_j).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfFile {
    pub conductor: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
    #[serde(default)]
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<String>,
    #[serde(default)]
    pub antipode: Vec<(usize, usize, String)>,
}

/// Structure constants of a plain associative algebra, the target side of a
/// representation. Same `mult` convention as [`HopfFile`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub conductor: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<String>,
}

/// The source Hopf algebra of a representation file: inline structure
/// constants or a path to another file, which the caller resolves.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfSource {
    Path(String),
    Inline(Box<HopfFile>),
}

/// A representation: the host (optional when the caller supplies one), the
/// target algebra, and the matrix as [row, col, c] entries.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfSource>,
    pub algebra: AlgebraFile,
    #[serde(default)]
    pub matrix: Vec<(usize, usize, String)>,
}

/// A list of group-like elements, each a dense vector over the host basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GrouplikesFile {
    pub elements: Vec<Vec<String>>,
}

/// A twist element in e_i (x) e_j coordinates; the inverse is solved for
/// when omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwistFile {
    pub omega: Vec<(usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_inv: Option<Vec<(usize, usize, String)>>,
}

/// A cocycle as the dense matrix of its values on basis pairs; the
/// convolution inverse is solved for when omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleFile {
    pub sigma: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_inv: Option<Vec<Vec<String>>>,
}

/// A comodule over a host the caller supplies: its dimension and the
/// coefficient matrix, entry [i, j, v] giving the vector in H at position
/// (i, j).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComoduleFile {
    pub dim: usize,
    pub coefficients: Vec<(usize, usize, Vec<String>)>,
    #[serde(default)]
    pub self_dual: bool,
}

/// Several comodules sharing one host.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComodulesFile {
    pub comodules: Vec<ComoduleFile>,
}

fn sparse_tensor(
    ctx: &Arc<CyclotomicContext>,
    entries: &[(usize, usize, usize, String)],
    dim: usize,
    what: &str,
) -> Result<Vec<SparseVec>> {
    let mut maps: Vec<BTreeMap<usize, Cyclotomic>> = vec![BTreeMap::new(); dim * dim];
    for (i, j, k, s) in entries {
        check_index(*i, dim)?;
        check_index(*j, dim)?;
        check_index(*k, dim)?;
        let slot = &mut maps[i * dim + j];
        if slot.contains_key(k) {
            return Err(Error::InvalidInput(format!(
                "duplicate {what} entry at ({i}, {j}, {k})"
            )));
        }
        slot.insert(*k, parse_scalar(ctx, s)?);
    }
    Ok(maps.into_iter().map(SparseVec::from_map).collect())
}

fn tensor_entries(
    tensor: impl Iterator<Item = SparseVec>,
    dim: usize,
) -> Vec<(usize, usize, usize, String)> {
    let mut out = Vec::new();
    for (slot, v) in tensor.enumerate() {
        let (i, j) = (slot / dim, slot % dim);
        for (k, c) in v.entries() {
            if !c.is_zero() {
                out.push((i, j, *k, c.to_string()));
            }
        }
    }
    out
}

fn parse_labels(labels: &Option<Vec<String>>, dim: usize) -> Result<Vec<String>> {
    match labels {
        None => Ok((0..dim).map(|i| format!("e{i}")).collect()),
        Some(l) => {
            if l.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "labels list has {} entries, expected {dim}",
                    l.len()
                )));
            }
            Ok(l.clone())
        }
    }
}

/// Builds the algebra described by a parsed document.
pub fn algebra_from_file(file: &AlgebraFile) -> Result<AlgebraData> {
    check_dim(file.dim)?;
    let ctx = context_for(file.conductor)?;
    let labels = parse_labels(&file.labels, file.dim)?;
    let mult = sparse_tensor(&ctx, &file.mult, file.dim, "mult")?;
    let unit = parse_dense(&ctx, &file.unit, file.dim, "unit")?;
    AlgebraData::new(ctx, labels, mult, unit)
}

/// Builds the Hopf algebra described by a parsed document. Shapes and
/// indices are checked here; the axioms are the job of `validate`.
pub fn hopf_from_file(file: &HopfFile) -> Result<HopfAlgebraData> {
    check_dim(file.dim)?;
    let ctx = context_for(file.conductor)?;
    let d = file.dim;
    let labels = parse_labels(&file.labels, d)?;
    let mult = sparse_tensor(&ctx, &file.mult, d, "mult")?;
    let unit = parse_dense(&ctx, &file.unit, d, "unit")?;
    let algebra = AlgebraData::new(ctx.clone(), labels, mult, unit)?;

    let mut comult_maps: Vec<BTreeMap<usize, Cyclotomic>> = vec![BTreeMap::new(); d];
    for (i, j, k, s) in &file.comult {
        check_index(*i, d)?;
        check_index(*j, d)?;
        check_index(*k, d)?;
        let slot = &mut comult_maps[*i];
        let key = j * d + k;
        if slot.contains_key(&key) {
            return Err(Error::InvalidInput(format!(
                "duplicate comult entry at ({i}, {j}, {k})"
            )));
        }
        slot.insert(key, parse_scalar(&ctx, s)?);
    }
    let comult: Vec<SparseVec> = comult_maps.into_iter().map(SparseVec::from_map).collect();

    let counit = parse_dense(&ctx, &file.counit, d, "counit")?;

    let mut antipode = Matrix::zero(&ctx, d, d);
    let mut seen = BTreeMap::new();
    for (i, j, s) in &file.antipode {
        check_index(*i, d)?;
        check_index(*j, d)?;
        if seen.insert((*i, *j), ()).is_some() {
            return Err(Error::InvalidInput(format!(
                "duplicate antipode entry at ({i}, {j})"
            )));
        }
        *antipode.at_mut(*i, *j) = parse_scalar(&ctx, s)?;
    }

    HopfAlgebraData::new(algebra, comult, counit, antipode)
}

/// Parses a Hopf algebra document from JSON text.
pub fn parse_hopf(s: &str) -> Result<HopfAlgebraData> {
    let file: HopfFile = serde_json::from_str(s)?;
    hopf_from_file(&file)
}

/// Parses a plain algebra document from JSON text.
pub fn parse_algebra(s: &str) -> Result<AlgebraData> {
    let file: AlgebraFile = serde_json::from_str(s)?;
    algebra_from_file(&file)
}

/// Parses a representation document from JSON text. The caller may supply
/// the host (e.g. from a separate command-line argument); otherwise the
/// document must carry it inline. A `hopf` path reference must be resolved
/// by the caller beforehand.
pub fn parse_rep(s: &str, host: Option<HopfAlgebraData>) -> Result<Representation> {
    let file: RepFile = serde_json::from_str(s)?;
    rep_from_file(&file, host)
}

/// Builds a representation from a parsed document plus an optional
/// caller-supplied host.
pub fn rep_from_file(file: &RepFile, host: Option<HopfAlgebraData>) -> Result<Representation> {
    let host = match (host, &file.hopf) {
        (Some(h), _) => h,
        (None, Some(HopfSource::Inline(f))) => hopf_from_file(f)?,
        (None, Some(HopfSource::Path(p))) => {
            return Err(Error::InvalidInput(format!(
                "host reference '{p}' must be resolved by the caller"
            )));
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "representation file names no host Hopf algebra".into(),
            ));
        }
    };
    let target = algebra_from_file(&file.algebra)?;
    if target.context().conductor() != host.context().conductor() {
        return Err(Error::ContextMismatch(
            host.context().conductor(),
            target.context().conductor(),
        ));
    }
    let ctx = host.context().clone();
    let mut matrix = Matrix::zero(&ctx, target.dim(), host.dim());
    let mut seen = BTreeMap::new();
    for (r, c, s) in &file.matrix {
        check_index(*r, target.dim())?;
        check_index(*c, host.dim())?;
        if seen.insert((*r, *c), ()).is_some() {
            return Err(Error::InvalidInput(format!(
                "duplicate matrix entry at ({r}, {c})"
            )));
        }
        *matrix.at_mut(*r, *c) = parse_scalar(&ctx, s)?;
    }
    Representation::new(host, target, matrix)
}

/// Parses a group-like list and verifies it forms a group under the host's
/// multiplication.
pub fn parse_grouplikes(s: &str, host: &HopfAlgebraData) -> Result<GroupLikeSet> {
    let file: GrouplikesFile = serde_json::from_str(s)?;
    let ctx = host.context();
    let mut elements = Vec::with_capacity(file.elements.len());
    for v in &file.elements {
        elements.push(parse_dense(ctx, v, host.dim(), "group-like element")?);
    }
    verify_grouplikes(host, &elements)
}

fn sparse_square_vector(
    ctx: &Arc<CyclotomicContext>,
    entries: &[(usize, usize, String)],
    dim: usize,
    what: &str,
) -> Result<Vec<Cyclotomic>> {
    let mut out = vec![ctx.zero(); dim * dim];
    let mut seen = BTreeMap::new();
    for (i, j, s) in entries {
        check_index(*i, dim)?;
        check_index(*j, dim)?;
        if seen.insert((*i, *j), ()).is_some() {
            return Err(Error::InvalidInput(format!(
                "duplicate {what} entry at ({i}, {j})"
            )));
        }
        out[i * dim + j] = parse_scalar(ctx, s)?;
    }
    Ok(out)
}

/// Parses a twist document against a host, solving for the inverse when the
/// file omits it.
pub fn parse_twist(s: &str, host: &HopfAlgebraData) -> Result<TwistElement> {
    let file: TwistFile = serde_json::from_str(s)?;
    let ctx = host.context();
    let d = host.dim();
    let omega = sparse_square_vector(ctx, &file.omega, d, "omega")?;
    let omega_inv = match &file.omega_inv {
        Some(entries) => Some(sparse_square_vector(ctx, entries, d, "omega_inv")?),
        None => None,
    };
    TwistElement::new(host.clone(), omega, omega_inv)
}

fn dense_matrix(
    ctx: &Arc<CyclotomicContext>,
    rows: &[Vec<String>],
    dim: usize,
    what: &str,
) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(Error::InvalidInput(format!(
            "{what} has {} rows, expected {dim}",
            rows.len()
        )));
    }
    let mut m = Matrix::zero(ctx, dim, dim);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::InvalidInput(format!(
                "{what} row {i} has {} entries, expected {dim}",
                row.len()
            )));
        }
        for (j, s) in row.iter().enumerate() {
            *m.at_mut(i, j) = parse_scalar(ctx, s)?;
        }
    }
    Ok(m)
}

/// Parses a cocycle document against a host, solving for the convolution
/// inverse when the file omits it.
pub fn parse_cocycle(s: &str, host: &HopfAlgebraData) -> Result<Cocycle> {
    let file: CocycleFile = serde_json::from_str(s)?;
    let ctx = host.context();
    let d = host.dim();
    let sigma = dense_matrix(ctx, &file.sigma, d, "sigma")?;
    let sigma_inv = match &file.sigma_inv {
        Some(rows) => Some(dense_matrix(ctx, rows, d, "sigma_inv")?),
        None => None,
    };
    Cocycle::new(host.clone(), sigma, sigma_inv)
}

fn comodule_from_file(file: &ComoduleFile, host: &HopfAlgebraData) -> Result<Comodule> {
    check_dim(file.dim)?;
    let ctx = host.context();
    let hd = host.dim();
    let mut coeffs = vec![vec![ctx.zero(); hd]; file.dim * file.dim];
    let mut seen = BTreeMap::new();
    for (i, j, v) in &file.coefficients {
        check_index(*i, file.dim)?;
        check_index(*j, file.dim)?;
        if seen.insert((*i, *j), ()).is_some() {
            return Err(Error::InvalidInput(format!(
                "duplicate coefficient entry at ({i}, {j})"
            )));
        }
        coeffs[i * file.dim + j] = parse_dense(ctx, v, hd, "coefficient vector")?;
    }
    let mut c = Comodule::new(host.clone(), file.dim, coeffs)?;
    c.self_dual = file.self_dual;
    Ok(c)
}

/// Parses a single comodule document against a host.
pub fn parse_comodule(s: &str, host: &HopfAlgebraData) -> Result<Comodule> {
    let file: ComoduleFile = serde_json::from_str(s)?;
    comodule_from_file(&file, host)
}

/// Parses a list of comodules sharing one host.
pub fn parse_comodules(s: &str, host: &HopfAlgebraData) -> Result<Vec<Comodule>> {
    let file: ComodulesFile = serde_json::from_str(s)?;
    file.comodules
        .iter()
        .map(|f| comodule_from_file(f, host))
        .collect()
}

/// Renders a Hopf algebra as an interchange document.
pub fn hopf_to_file(h: &HopfAlgebraData) -> HopfFile {
    let d = h.dim();
    let mut comult = Vec::new();
    for i in 0..d {
        for (jk, c) in h.comult_basis(i).entries() {
            if !c.is_zero() {
                comult.push((i, jk / d, jk % d, c.to_string()));
            }
        }
    }
    let mut antipode = Vec::new();
    for j in 0..d {
        for i in 0..d {
            let c = h.antipode().at(i, j);
            if !c.is_zero() {
                antipode.push((i, j, c.to_string()));
            }
        }
    }
    HopfFile {
        conductor: h.context().conductor(),
        dim: d,
        labels: Some(h.labels().to_vec()),
        mult: tensor_entries(
            (0..d * d).map(|p| h.algebra().mult_basis(p / d, p % d).clone()),
            d,
        ),
        unit: format_dense(h.unit()),
        comult,
        counit: format_dense(h.counit()),
        antipode,
    }
}

/// Renders a plain algebra as an interchange document.
pub fn algebra_to_file(a: &AlgebraData) -> AlgebraFile {
    let d = a.dim();
    AlgebraFile {
        conductor: a.context().conductor(),
        dim: d,
        labels: Some(a.labels().to_vec()),
        mult: tensor_entries((0..d * d).map(|p| a.mult_basis(p / d, p % d).clone()), d),
        unit: format_dense(a.unit()),
    }
}

/// Renders a representation with its host inline, so the document reloads
/// without extra context.
pub fn rep_to_file(r: &Representation) -> RepFile {
    let mut matrix = Vec::new();
    for i in 0..r.matrix.rows() {
        for j in 0..r.matrix.cols() {
            let c = r.matrix.at(i, j);
            if !c.is_zero() {
                matrix.push((i, j, c.to_string()));
            }
        }
    }
    RepFile {
        hopf: Some(HopfSource::Inline(Box::new(hopf_to_file(&r.source)))),
        algebra: algebra_to_file(&r.target),
        matrix,
    }
}

/// Renders a comodule as a reloadable coefficient list, keeping only the
/// nonzero coefficient vectors in row-major order.
pub fn comodule_to_file(c: &Comodule) -> ComoduleFile {
    let mut coefficients = Vec::new();
    for i in 0..c.dim {
        for j in 0..c.dim {
            let v = &c.coeffs[i * c.dim + j];
            if v.iter().any(|x| !x.is_zero()) {
                coefficients.push((i, j, format_dense(v)));
            }
        }
    }
    ComoduleFile {
        dim: c.dim,
        coefficients,
        self_dual: c.self_dual,
    }
}

/// Renders a group-like set as a reloadable element list.
pub fn grouplikes_to_file(gl: &GroupLikeSet) -> GrouplikesFile {
    GrouplikesFile {
        elements: gl.elements.iter().map(|v| format_dense(v)).collect(),
    }
}

/// Serializes any of the document types with a stable layout and a trailing
/// newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document serialization");
    s.push('\n');
    s
}
