//! Finite-dimensional algebras and Hopf algebras given by structure
//! constants, together with an exact validator for every axiom.
//!
//! Conventions, used consistently across the crate:
//! - elements of H are dense coordinate vectors over the chosen basis;
//! - the multiplication tensor stores e_i * e_j as a sparse vector;
//! - the comultiplication stores Delta(e_i) as a sparse vector over H (x) H,
//!   where the pair (j, k) is flattened to the index j * dim + k;
//! - the antipode matrix has S(e_j) in column j;
//! - linear functionals are row vectors paired coordinatewise.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::field::{ContextOps, Cyclotomic, CyclotomicContext};
use crate::linalg::{quotient_data, Matrix, Subspace};
use crate::{Error, Result};

/// Sorted sparse vector of field coefficients.
#[derive(Clone, PartialEq)]
pub struct SparseVec {
    entries: Vec<(usize, Cyclotomic)>,
}

impl SparseVec {
    pub fn empty() -> Self {
        SparseVec { entries: vec![] }
    }

    pub fn singleton(index: usize, value: Cyclotomic) -> Self {
        if value.is_zero() {
            Self::empty()
        } else {
            SparseVec {
                entries: vec![(index, value)],
            }
        }
    }

    pub fn from_map(map: BTreeMap<usize, Cyclotomic>) -> Self {
        SparseVec {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_dense(v: &[Cyclotomic]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, ctx: &Arc<CyclotomicContext>, len: usize) -> Vec<Cyclotomic> {
        let mut out = vec![ctx.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Cyclotomic)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::empty();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(i, c)| format!("{i}: {c}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub(crate) fn acc_add(map: &mut BTreeMap<usize, Cyclotomic>, index: usize, value: &Cyclotomic) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&index) {
        Some(c) => *c += value,
        None => {
            map.insert(index, value.clone());
        }
    }
}

/// One axiom check inside a [`ValidationReport`].
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Outcome of validating an algebra, Hopf algebra, or morphism: one entry
/// per axiom, in a fixed documented order.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub(crate) fn push(&mut self, name: &'static str, witness: Option<String>) {
        self.checks.push(CheckResult {
            name,
            passed: witness.is_none(),
            witness,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "ok   {}", c.name)?;
            } else {
                let w = c.witness.as_deref().unwrap_or("");
                writeln!(f, "FAIL {} ({w})", c.name)?;
            }
        }
        Ok(())
    }
}

/// A finite-dimensional associative unital algebra via structure constants.
#[derive(Clone)]
pub struct AlgebraData {
    ctx: Arc<CyclotomicContext>,
    dim: usize,
    labels: Vec<String>,
    /// e_i * e_j at index i * dim + j.
    mult: Vec<SparseVec>,
    unit: Vec<Cyclotomic>,
}

impl AlgebraData {
    pub fn new(
        ctx: Arc<CyclotomicContext>,
        labels: Vec<String>,
        mult: Vec<SparseVec>,
        unit: Vec<Cyclotomic>,
    ) -> Result<Self> {
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("algebra dimension is zero".into()));
        }
        if mult.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication tensor has {} slots, expected {}",
                mult.len(),
                dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit vector has length {}, expected {dim}",
                unit.len()
            )));
        }
        for s in &mult {
            if let Some(m) = s.max_index() {
                if m >= dim {
                    return Err(Error::IndexOutOfRange { index: m, dim });
                }
            }
        }
        Ok(AlgebraData {
            ctx,
            dim,
            labels,
            mult,
            unit,
        })
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
    }

    pub fn unit(&self) -> &[Cyclotomic] {
        &self.unit
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    /// All nonzero structure constants (i, j, k, c) with e_i e_j = sum c e_k.
    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, Cyclotomic)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in self.mult_basis(i, j).entries() {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let mut acc = BTreeMap::new();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let f = ai * bj;
                for (k, c) in self.mult_basis(i, j).entries() {
                    let t = &f * c;
                    acc_add(&mut acc, *k, &t);
                }
            }
        }
        SparseVec::from_map(acc).to_dense(&self.ctx, self.dim)
    }

    pub fn product_sparse(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, ai) in a.entries() {
            for (j, bj) in b.entries() {
                let f = ai * bj;
                for (k, c) in self.mult_basis(*i, *j).entries() {
                    let t = &f * c;
                    acc_add(&mut acc, *k, &t);
                }
            }
        }
        SparseVec::from_map(acc)
    }

    /// Matrix of left multiplication by `v`.
    pub fn left_mult_matrix(&self, v: &[Cyclotomic]) -> Matrix {
        let mut m = Matrix::zero(&self.ctx, self.dim, self.dim);
        for j in 0..self.dim {
            let mut col = vec![self.ctx.zero(); self.dim];
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                for (k, c) in self.mult_basis(i, j).entries() {
                    let t = vi * c;
                    col[*k] += &t;
                }
            }
            for (k, x) in col.into_iter().enumerate() {
                *m.at_mut(k, j) = x;
            }
        }
        m
    }

    /// Matrix of right multiplication by `v`.
    pub fn right_mult_matrix(&self, v: &[Cyclotomic]) -> Matrix {
        let mut m = Matrix::zero(&self.ctx, self.dim, self.dim);
        for j in 0..self.dim {
            let mut col = vec![self.ctx.zero(); self.dim];
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                for (k, c) in self.mult_basis(j, i).entries() {
                    let t = vi * c;
                    col[*k] += &t;
                }
            }
            for (k, x) in col.into_iter().enumerate() {
                *m.at_mut(k, j) = x;
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.mult_basis(i, j) != self.mult_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Product inside A (x) A of two flattened sparse tensors.
    pub fn tensor_square_product(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let d = self.dim;
        let mut acc = BTreeMap::new();
        for (p, cp) in x.entries() {
            let (a, b) = (p / d, p % d);
            for (q, cq) in y.entries() {
                let (c, e) = (q / d, q % d);
                let f = cp * cq;
                for (k1, m1) in self.mult_basis(a, c).entries() {
                    for (k2, m2) in self.mult_basis(b, e).entries() {
                        let t = &(&f * m1) * m2;
                        acc_add(&mut acc, k1 * d + k2, &t);
                    }
                }
            }
        }
        SparseVec::from_map(acc)
    }

    /// Tensor product algebra with componentwise multiplication.
    pub fn tensor(&self, other: &AlgebraData) -> Result<AlgebraData> {
        let (na, nb) = (self.ctx.conductor(), other.ctx.conductor());
        if na != nb {
            return Err(Error::ContextMismatch(na, nb));
        }
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let flat = |i: usize, k: usize| i * db + k;
        let mut labels = Vec::with_capacity(d);
        for i in 0..da {
            for k in 0..db {
                labels.push(format!("({},{})", self.labels[i], other.labels[k]));
            }
        }
        let mut mult = vec![SparseVec::empty(); d * d];
        for i in 0..da {
            for k in 0..db {
                for j in 0..da {
                    for l in 0..db {
                        let mut acc = BTreeMap::new();
                        for (p, cp) in self.mult_basis(i, j).entries() {
                            for (q, cq) in other.mult_basis(k, l).entries() {
                                let t = cp * cq;
                                acc_add(&mut acc, flat(*p, *q), &t);
                            }
                        }
                        mult[flat(i, k) * d + flat(j, l)] = SparseVec::from_map(acc);
                    }
                }
            }
        }
        let mut unit = vec![self.ctx.zero(); d];
        for (i, a) in self.unit.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.unit.iter().enumerate() {
                if !b.is_zero() {
                    unit[flat(i, k)] = a * b;
                }
            }
        }
        AlgebraData::new(self.ctx.clone(), labels, mult, unit)
    }

    /// Checks associativity and the unit laws.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport { checks: vec![] };
        report.push("associativity", self.associativity_witness());
        report.push("unit_left", self.unit_witness(true));
        report.push("unit_right", self.unit_witness(false));
        report
    }

    fn associativity_witness(&self) -> Option<String> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.mult_basis(i, j).clone();
                for k in 0..self.dim {
                    let mut lhs = BTreeMap::new();
                    for (m, c) in ij.entries() {
                        for (l, c2) in self.mult_basis(*m, k).entries() {
                            let t = c * c2;
                            acc_add(&mut lhs, *l, &t);
                        }
                    }
                    let mut rhs = BTreeMap::new();
                    for (m, c) in self.mult_basis(j, k).entries() {
                        for (l, c2) in self.mult_basis(i, *m).entries() {
                            let t = c * c2;
                            acc_add(&mut rhs, *l, &t);
                        }
                    }
                    if SparseVec::from_map(lhs) != SparseVec::from_map(rhs) {
                        return Some(format!("basis triple ({i}, {j}, {k})"));
                    }
                }
            }
        }
        None
    }

    fn unit_witness(&self, left: bool) -> Option<String> {
        for j in 0..self.dim {
            let mut e = vec![self.ctx.zero(); self.dim];
            e[j] = self.ctx.one();
            let p = if left {
                self.product(&self.unit, &e)
            } else {
                self.product(&e, &self.unit)
            };
            if p != e {
                return Some(format!("basis {j}"));
            }
        }
        None
    }
}

impl PartialEq for AlgebraData {
    /// Structural equality: same conductor, dimension, products, and unit.
    /// Labels are presentation only and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.ctx.conductor() == other.ctx.conductor()
            && self.dim == other.dim
            && self.unit == other.unit
            && self.mult == other.mult
    }
}

impl fmt::Debug for AlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraData(dim {}, N={})", self.dim, self.ctx.conductor())
    }
}

/// A finite-dimensional Hopf algebra via structure constants.
#[derive(Clone)]
pub struct HopfAlgebraData {
    algebra: AlgebraData,
    /// Delta(e_i) at index i, flattened over H (x) H.
    comult: Vec<SparseVec>,
    counit: Vec<Cyclotomic>,
    /// S(e_j) in column j.
    antipode: Matrix,
}

impl HopfAlgebraData {
    pub fn new(
        algebra: AlgebraData,
        comult: Vec<SparseVec>,
        counit: Vec<Cyclotomic>,
        antipode: Matrix,
    ) -> Result<Self> {
        let dim = algebra.dim();
        if comult.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication has {} slots, expected {dim}",
                comult.len()
            )));
        }
        for s in &comult {
            if let Some(m) = s.max_index() {
                if m >= dim * dim {
                    return Err(Error::IndexOutOfRange {
                        index: m,
                        dim: dim * dim,
                    });
                }
            }
        }
        if counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "counit has length {}, expected {dim}",
                counit.len()
            )));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "antipode is {}x{}, expected {dim}x{dim}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        Ok(HopfAlgebraData {
            algebra,
            comult,
            counit,
            antipode,
        })
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn context(&self) -> &Arc<CyclotomicContext> {
        self.algebra.context()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        self.algebra.set_labels(labels);
    }

    pub fn unit(&self) -> &[Cyclotomic] {
        self.algebra.unit()
    }

    pub fn comult_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    pub fn counit(&self) -> &[Cyclotomic] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn comult_of(&self, v: &[Cyclotomic]) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (jk, c) in self.comult[i].entries() {
                let t = vi * c;
                acc_add(&mut acc, *jk, &t);
            }
        }
        SparseVec::from_map(acc)
    }

    pub fn counit_of(&self, v: &[Cyclotomic]) -> Cyclotomic {
        let mut out = self.context().zero();
        for (vi, ci) in v.iter().zip(&self.counit) {
            if !vi.is_zero() && !ci.is_zero() {
                let t = vi * ci;
                out += &t;
            }
        }
        out
    }

    pub fn antipode_of(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.antipode.mul_vec(v)
    }

    /// Product inside H (x) H of two flattened sparse tensors.
    pub fn tensor_square_product(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.algebra.tensor_square_product(x, y)
    }

    /// Iterated comultiplication: terms of Delta^(parts-1)(v) as
    /// multi-indexed tensors with `parts` legs.
    pub fn iterated_comult(&self, v: &[Cyclotomic], parts: usize) -> Vec<(Vec<usize>, Cyclotomic)> {
        assert!(parts >= 1);
        let d = self.dim();
        let mut terms: BTreeMap<Vec<usize>, Cyclotomic> = BTreeMap::new();
        for (i, vi) in v.iter().enumerate() {
            if !vi.is_zero() {
                terms.insert(vec![i], vi.clone());
            }
        }
        for _ in 1..parts {
            let mut next: BTreeMap<Vec<usize>, Cyclotomic> = BTreeMap::new();
            for (idx, c) in &terms {
                let last = *idx.last().unwrap();
                for (jk, c2) in self.comult[last].entries() {
                    let mut key = idx[..idx.len() - 1].to_vec();
                    key.push(jk / d);
                    key.push(jk % d);
                    let t = c * c2;
                    match next.get_mut(&key) {
                        Some(acc) => *acc += &t,
                        None => {
                            next.insert(key, t);
                        }
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            terms = next;
        }
        terms.into_iter().collect()
    }

    /// Convolution product of two functionals: (f * g)(x) = (f (x) g)(Delta x).
    pub fn convolve(&self, f: &[Cyclotomic], g: &[Cyclotomic]) -> Vec<Cyclotomic> {
        let d = self.dim();
        let mut out = vec![self.context().zero(); d];
        for k in 0..d {
            let mut acc = self.context().zero();
            for (jl, c) in self.comult[k].entries() {
                let (j, l) = (jl / d, jl % d);
                if !f[j].is_zero() && !g[l].is_zero() {
                    let t = &(&f[j] * &g[l]) * c;
                    acc += &t;
                }
            }
            out[k] = acc;
        }
        out
    }

    /// The Hopf algebra on the dual space, with multiplication the
    /// convolution and comultiplication the transpose of the product.
    pub fn dual(&self) -> HopfAlgebraData {
        let d = self.dim();
        let ctx = self.context().clone();
        let mut mult: Vec<BTreeMap<usize, Cyclotomic>> = vec![BTreeMap::new(); d * d];
        for k in 0..d {
            for (ij, c) in self.comult[k].entries() {
                acc_add(&mut mult[*ij], k, c);
            }
        }
        let mut comult: Vec<BTreeMap<usize, Cyclotomic>> = vec![BTreeMap::new(); d];
        for i in 0..d {
            for j in 0..d {
                for (k, c) in self.algebra.mult_basis(i, j).entries() {
                    acc_add(&mut comult[*k], i * d + j, c);
                }
            }
        }
        let labels = self
            .labels()
            .iter()
            .map(|l| format!("{l}*"))
            .collect::<Vec<_>>();
        let algebra = AlgebraData::new(
            ctx,
            labels,
            mult.into_iter().map(SparseVec::from_map).collect(),
            self.counit.clone(),
        )
        .expect("dual shapes are consistent");
        HopfAlgebraData {
            algebra,
            comult: comult.into_iter().map(SparseVec::from_map).collect(),
            counit: self.algebra.unit().to_vec(),
            antipode: self.antipode.transpose(),
        }
    }

    /// Tensor product Hopf algebra with componentwise operations.
    pub fn tensor(&self, other: &HopfAlgebraData) -> Result<HopfAlgebraData> {
        let ctx = self.context().clone();
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let flat = |i: usize, k: usize| i * db + k;
        let algebra = self.algebra.tensor(&other.algebra)?;
        let mut comult = Vec::with_capacity(d);
        for i in 0..da {
            for k in 0..db {
                let mut acc = BTreeMap::new();
                for (pq, c1) in self.comult[i].entries() {
                    let (p, q) = (pq / da, pq % da);
                    for (rs, c2) in other.comult[k].entries() {
                        let (r, s) = (rs / db, rs % db);
                        let t = c1 * c2;
                        acc_add(&mut acc, flat(p, r) * d + flat(q, s), &t);
                    }
                }
                comult.push(SparseVec::from_map(acc));
            }
        }
        let mut counit = vec![ctx.zero(); d];
        for i in 0..da {
            for k in 0..db {
                counit[flat(i, k)] = &self.counit[i] * &other.counit[k];
            }
        }
        let mut antipode = Matrix::zero(&ctx, d, d);
        for j in 0..da {
            for l in 0..db {
                for p in 0..da {
                    let a = self.antipode.at(p, j);
                    if a.is_zero() {
                        continue;
                    }
                    for q in 0..db {
                        let b = other.antipode.at(q, l);
                        if !b.is_zero() {
                            *antipode.at_mut(flat(p, q), flat(j, l)) = a * b;
                        }
                    }
                }
            }
        }
        HopfAlgebraData::new(algebra, comult, counit, antipode)
    }

    /// Checks every algebra, coalgebra, bialgebra, and antipode axiom.
    /// Check order is fixed and documented by the report itself.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let ctx = self.context().clone();
        let mut report = self.algebra.validate();

        // Coassociativity.
        let mut witness = None;
        'outer: for i in 0..d {
            let mut lhs: BTreeMap<(usize, usize, usize), Cyclotomic> = BTreeMap::new();
            let mut rhs = lhs.clone();
            for (jk, c) in self.comult[i].entries() {
                let (j, k) = (jk / d, jk % d);
                for (ab, c2) in self.comult[j].entries() {
                    let (a, b) = (ab / d, ab % d);
                    let t = c * c2;
                    lhs.entry((a, b, k))
                        .and_modify(|x| *x += &t)
                        .or_insert(t.clone());
                }
                for (ab, c2) in self.comult[k].entries() {
                    let (a, b) = (ab / d, ab % d);
                    let t = c * c2;
                    rhs.entry((j, a, b))
                        .and_modify(|x| *x += &t)
                        .or_insert(t.clone());
                }
            }
            lhs.retain(|_, c| !c.is_zero());
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                witness = Some(format!("basis {i}"));
                break 'outer;
            }
        }
        report.push("coassociativity", witness);

        // Counit laws.
        let mut left = None;
        let mut right = None;
        for i in 0..d {
            let mut l = vec![ctx.zero(); d];
            let mut r = vec![ctx.zero(); d];
            for (jk, c) in self.comult[i].entries() {
                let (j, k) = (jk / d, jk % d);
                if !self.counit[j].is_zero() {
                    let t = c * &self.counit[j];
                    l[k] += &t;
                }
                if !self.counit[k].is_zero() {
                    let t = c * &self.counit[k];
                    r[j] += &t;
                }
            }
            let mut e = vec![ctx.zero(); d];
            e[i] = ctx.one();
            if left.is_none() && l != e {
                left = Some(format!("basis {i}"));
            }
            if right.is_none() && r != e {
                right = Some(format!("basis {i}"));
            }
        }
        report.push("counit_left", left);
        report.push("counit_right", right);

        // Delta and epsilon are algebra maps.
        let mut comult_mult = None;
        let mut counit_mult = None;
        'pairs: for i in 0..d {
            for j in 0..d {
                let prod = self.algebra.mult_basis(i, j);
                if comult_mult.is_none() {
                    let mut lhs = BTreeMap::new();
                    for (m, c) in prod.entries() {
                        for (pq, c2) in self.comult[*m].entries() {
                            let t = c * c2;
                            acc_add(&mut lhs, *pq, &t);
                        }
                    }
                    let rhs = self.tensor_square_product(&self.comult[i], &self.comult[j]);
                    if SparseVec::from_map(lhs) != rhs {
                        comult_mult = Some(format!("basis pair ({i}, {j})"));
                    }
                }
                if counit_mult.is_none() {
                    let mut lhs = ctx.zero();
                    for (m, c) in prod.entries() {
                        if !self.counit[*m].is_zero() {
                            let t = c * &self.counit[*m];
                            lhs += &t;
                        }
                    }
                    if lhs != &self.counit[i] * &self.counit[j] {
                        counit_mult = Some(format!("basis pair ({i}, {j})"));
                    }
                }
                if comult_mult.is_some() && counit_mult.is_some() {
                    break 'pairs;
                }
            }
        }
        report.push("comult_respects_product", comult_mult);

        let delta_unit = self.comult_of(self.unit());
        let mut unit_tensor = BTreeMap::new();
        for (i, a) in self.unit().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in self.unit().iter().enumerate() {
                if !b.is_zero() {
                    let t = a * b;
                    acc_add(&mut unit_tensor, i * d + k, &t);
                }
            }
        }
        report.push(
            "comult_respects_unit",
            (delta_unit != SparseVec::from_map(unit_tensor)).then(|| "unit".to_string()),
        );
        report.push("counit_respects_product", counit_mult);
        report.push(
            "counit_respects_unit",
            (!self.counit_of(self.unit()).is_one()).then(|| "unit".to_string()),
        );

        // Antipode axioms.
        let mut ant_left = None;
        let mut ant_right = None;
        for i in 0..d {
            let mut l = vec![ctx.zero(); d];
            let mut r = vec![ctx.zero(); d];
            for (jk, c) in self.comult[i].entries() {
                let (j, k) = (jk / d, jk % d);
                // S(e_j) e_k and e_j S(e_k).
                for a in 0..d {
                    let s = self.antipode.at(a, j);
                    if !s.is_zero() {
                        for (m, c2) in self.algebra.mult_basis(a, k).entries() {
                            let t = &(c * s) * c2;
                            l[*m] += &t;
                        }
                    }
                    let s = self.antipode.at(a, k);
                    if !s.is_zero() {
                        for (m, c2) in self.algebra.mult_basis(j, a).entries() {
                            let t = &(c * s) * c2;
                            r[*m] += &t;
                        }
                    }
                }
            }
            let expect: Vec<Cyclotomic> = self
                .unit()
                .iter()
                .map(|u| u * &self.counit[i])
                .collect();
            if ant_left.is_none() && l != expect {
                ant_left = Some(format!("basis {i}"));
            }
            if ant_right.is_none() && r != expect {
                ant_right = Some(format!("basis {i}"));
            }
        }
        report.push("antipode_left", ant_left);
        report.push("antipode_right", ant_right);
        report
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            let mut flipped = BTreeMap::new();
            for (jk, c) in self.comult[i].entries() {
                acc_add(&mut flipped, (jk % d) * d + jk / d, c);
            }
            if SparseVec::from_map(flipped) != self.comult[i] {
                return false;
            }
        }
        true
    }
}

impl PartialEq for HopfAlgebraData {
    /// Structural equality of all five tensors; labels do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl fmt::Debug for HopfAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "HopfAlgebraData(dim {}, N={})",
            self.dim(),
            self.context().conductor()
        )
    }
}

/// A linear map between Hopf algebras, stored as a target-dim x source-dim
/// matrix over the common field.
#[derive(Clone)]
pub struct HopfMorphism {
    pub source: HopfAlgebraData,
    pub target: HopfAlgebraData,
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn new(source: HopfAlgebraData, target: HopfAlgebraData, matrix: Matrix) -> Result<Self> {
        if source.context().conductor() != target.context().conductor() {
            return Err(Error::ContextMismatch(
                source.context().conductor(),
                target.context().conductor(),
            ));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(HopfMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.matrix.mul_vec(v)
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    /// Checks that the matrix intertwines products, units, comultiplication,
    /// counits, and antipodes.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport { checks: vec![] };
        let ds = self.source.dim();
        let ctx = self.source.context().clone();

        let mut prod = None;
        'outer: for i in 0..ds {
            for j in 0..ds {
                let mut ei = vec![ctx.zero(); ds];
                ei[i] = ctx.one();
                let mut ej = vec![ctx.zero(); ds];
                ej[j] = ctx.one();
                let lhs = self.apply(
                    &self
                        .source
                        .algebra()
                        .mult_basis(i, j)
                        .to_dense(&ctx, ds),
                );
                let rhs = self
                    .target
                    .algebra()
                    .product(&self.apply(&ei), &self.apply(&ej));
                if lhs != rhs {
                    prod = Some(format!("basis pair ({i}, {j})"));
                    break 'outer;
                }
            }
        }
        report.push("respects_product", prod);
        report.push(
            "respects_unit",
            (self.apply(self.source.unit()) != self.target.unit()).then(|| "unit".to_string()),
        );

        let dt = self.target.dim();
        let mut comult = None;
        for i in 0..ds {
            // (f (x) f)(Delta_source e_i) vs Delta_target(f e_i).
            let mut lhs = BTreeMap::new();
            for (jk, c) in self.source.comult_basis(i).entries() {
                let (j, k) = (jk / ds, jk % ds);
                for a in 0..dt {
                    let fa = self.matrix.at(a, j);
                    if fa.is_zero() {
                        continue;
                    }
                    for b in 0..dt {
                        let fb = self.matrix.at(b, k);
                        if !fb.is_zero() {
                            let t = &(c * fa) * fb;
                            acc_add(&mut lhs, a * dt + b, &t);
                        }
                    }
                }
            }
            let mut ei = vec![ctx.zero(); ds];
            ei[i] = ctx.one();
            let rhs = self.target.comult_of(&self.apply(&ei));
            if SparseVec::from_map(lhs) != rhs {
                comult = Some(format!("basis {i}"));
                break;
            }
        }
        report.push("respects_comult", comult);

        let mut counit = None;
        for i in 0..ds {
            let mut ei = vec![ctx.zero(); ds];
            ei[i] = ctx.one();
            if self.target.counit_of(&self.apply(&ei)) != self.source.counit()[i] {
                counit = Some(format!("basis {i}"));
                break;
            }
        }
        report.push("respects_counit", counit);

        let mut antipode = None;
        for i in 0..ds {
            let mut ei = vec![ctx.zero(); ds];
            ei[i] = ctx.one();
            let lhs = self.apply(&self.source.antipode_of(&ei));
            let rhs = self.target.antipode_of(&self.apply(&ei));
            if lhs != rhs {
                antipode = Some(format!("basis {i}"));
                break;
            }
        }
        report.push("respects_antipode", antipode);
        report
    }
}

/// First reason `v` fails to be a Hopf ideal of `h`, or `None` when it is
/// one: a two-sided ideal, a coideal (Delta v inside v (x) H + H (x) v,
/// checked through the quotient projection), killed by the counit, and
/// stable under the antipode.
pub fn hopf_ideal_failure(h: &HopfAlgebraData, v: &Subspace) -> Result<Option<String>> {
    let d = h.dim();
    if v.ambient() != d {
        return Err(Error::DimensionMismatch(format!(
            "subspace of k^{} inside a dimension-{d} Hopf algebra",
            v.ambient()
        )));
    }
    let ctx = h.context().clone();
    for r in 0..v.dim() {
        let w = v.basis().row(r);
        for i in 0..d {
            let mut e = vec![ctx.zero(); d];
            e[i] = ctx.one();
            if !v.contains_vector(&h.algebra().product(&e, w)) {
                return Ok(Some(format!("not a left ideal: e_{i} * basis {r}")));
            }
            if !v.contains_vector(&h.algebra().product(w, &e)) {
                return Ok(Some(format!("not a right ideal: basis {r} * e_{i}")));
            }
        }
    }
    // Coideal: (p (x) p)(Delta w) = 0 for the quotient projection p, since
    // ker(p (x) p) = v (x) H + H (x) v.
    let (proj, _) = quotient_data(v);
    let q = proj.rows();
    let proj_cols: Vec<SparseVec> = (0..d)
        .map(|j| SparseVec::from_dense(&proj.col(j)))
        .collect();
    for r in 0..v.dim() {
        let w = v.basis().row(r);
        let delta = h.comult_of(w);
        let mut acc: BTreeMap<usize, Cyclotomic> = BTreeMap::new();
        for (jk, c) in delta.entries() {
            let (j, k) = (jk / d, jk % d);
            for (a, pa) in proj_cols[j].entries() {
                for (b, pb) in proj_cols[k].entries() {
                    let t = &(c * pa) * pb;
                    acc_add(&mut acc, a * q + b, &t);
                }
            }
        }
        if !SparseVec::from_map(acc).is_empty() {
            return Ok(Some(format!("not a coideal: basis {r}")));
        }
    }
    for r in 0..v.dim() {
        let w = v.basis().row(r);
        if !h.counit_of(w).is_zero() {
            return Ok(Some(format!("counit does not vanish: basis {r}")));
        }
        if !v.contains_vector(&h.antipode_of(w)) {
            return Ok(Some(format!("not antipode-stable: basis {r}")));
        }
    }
    Ok(None)
}

/// Whether `v` is a Hopf ideal of `h`.
pub fn is_hopf_ideal(h: &HopfAlgebraData, v: &Subspace) -> Result<bool> {
    Ok(hopf_ideal_failure(h, v)?.is_none())
}

/// The quotient Hopf algebra H / v together with the projection morphism.
/// The quotient basis consists of the non-pivot coordinates of `v`, so the
/// output is a deterministic function of the canonical basis of `v`.
pub fn quotient_hopf(
    h: &HopfAlgebraData,
    v: &Subspace,
) -> Result<(HopfAlgebraData, HopfMorphism)> {
    if let Some(reason) = hopf_ideal_failure(h, v)? {
        return Err(Error::NotAHopfIdeal(reason));
    }
    let d = h.dim();
    let ctx = h.context().clone();
    let (proj, sect) = quotient_data(v);
    let q = proj.rows();
    if q == 0 {
        return Err(Error::NotAHopfIdeal(
            "quotient by the whole space is not unital".into(),
        ));
    }
    let free: Vec<usize> = (0..d).filter(|j| !v.pivots().contains(j)).collect();
    let proj_cols: Vec<SparseVec> = (0..d)
        .map(|j| SparseVec::from_dense(&proj.col(j)))
        .collect();

    let labels: Vec<String> = free.iter().map(|&j| h.labels()[j].clone()).collect();
    let mut mult = vec![SparseVec::empty(); q * q];
    for (a, &i) in free.iter().enumerate() {
        for (b, &j) in free.iter().enumerate() {
            let mut acc = BTreeMap::new();
            for (k, c) in h.algebra().mult_basis(i, j).entries() {
                for (t, p) in proj_cols[*k].entries() {
                    let x = c * p;
                    acc_add(&mut acc, *t, &x);
                }
            }
            mult[a * q + b] = SparseVec::from_map(acc);
        }
    }
    let unit = proj.mul_vec(h.unit());
    let algebra = AlgebraData::new(ctx.clone(), labels, mult, unit)?;

    let mut comult = Vec::with_capacity(q);
    for &i in &free {
        let mut acc = BTreeMap::new();
        for (jk, c) in h.comult_basis(i).entries() {
            let (j, k) = (jk / d, jk % d);
            for (a, pa) in proj_cols[j].entries() {
                for (b, pb) in proj_cols[k].entries() {
                    let t = &(c * pa) * pb;
                    acc_add(&mut acc, a * q + b, &t);
                }
            }
        }
        comult.push(SparseVec::from_map(acc));
    }
    let counit: Vec<Cyclotomic> = free.iter().map(|&j| h.counit()[j].clone()).collect();
    let antipode = proj.mul(&h.antipode().mul(&sect)?)?;
    let quotient = HopfAlgebraData::new(algebra, comult, counit, antipode)?;
    let morphism = HopfMorphism::new(h.clone(), quotient.clone(), proj)?;
    Ok((quotient, morphism))
}
