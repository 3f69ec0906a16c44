//! The engine: algebra representations of a Hopf algebra, the convolution
//! closure of their coefficient functionals, and the resulting Hopf image.
//!
//! For a representation pi: H -> A the coefficient functionals are the rows
//! of its matrix. The smallest quotient Hopf algebra of H through which pi
//! factors is H / I_pi, where I_pi is the annihilator of the unital
//! convolution subalgebra of H* generated by those functionals and closed
//! under the dual antipode. Everything here is an exact fixpoint
//! computation in the dual space.

use crate::field::{ContextOps, Cyclotomic};
use crate::hopfcore::{
    quotient_hopf, AlgebraData, HopfAlgebraData, HopfMorphism, ValidationReport,
};
use crate::linalg::{quotient_data, Matrix, Subspace};
use crate::{Error, Result};

/// An algebra morphism pi: H -> A given by its matrix; column j holds
/// pi(e_j) in the coordinates of the target algebra.
#[derive(Clone)]
pub struct Representation {
    pub source: HopfAlgebraData,
    pub target: AlgebraData,
    pub matrix: Matrix,
}

impl Representation {
    pub fn new(source: HopfAlgebraData, target: AlgebraData, matrix: Matrix) -> Result<Self> {
        if source.context().conductor() != target.context().conductor() {
            return Err(Error::ContextMismatch(
                source.context().conductor(),
                target.context().conductor(),
            ));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "representation matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(Representation {
            source,
            target,
            matrix,
        })
    }

    pub fn apply(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        self.matrix.mul_vec(v)
    }

    /// The counit as a representation on the one-dimensional algebra.
    pub fn counit_rep(source: &HopfAlgebraData) -> Representation {
        let ctx = source.context().clone();
        let target = AlgebraData::new(
            ctx.clone(),
            vec!["1".into()],
            vec![crate::hopfcore::SparseVec::singleton(0, ctx.one())],
            vec![ctx.one()],
        )
        .expect("one-dimensional algebra");
        let mut matrix = Matrix::zero(&ctx, 1, source.dim());
        for (j, c) in source.counit().iter().enumerate() {
            *matrix.at_mut(0, j) = c.clone();
        }
        Representation {
            source: source.clone(),
            target,
            matrix,
        }
    }

    /// The identity of the underlying algebra as a representation.
    pub fn identity_rep(source: &HopfAlgebraData) -> Representation {
        Representation {
            source: source.clone(),
            target: source.algebra().clone(),
            matrix: Matrix::identity(source.context(), source.dim()),
        }
    }
}

/// Checks that the matrix is unital and multiplicative on all basis pairs.
pub fn validate_rep(r: &Representation) -> ValidationReport {
    let mut report = ValidationReport { checks: vec![] };
    let ctx = r.source.context().clone();
    let d = r.source.dim();

    let unit_ok = r.apply(r.source.unit()) == r.target.unit();
    report.push("unital", (!unit_ok).then(|| "image of 1".to_string()));

    let mut witness = None;
    let columns: Vec<Vec<Cyclotomic>> = (0..d).map(|j| r.matrix.col(j)).collect();
    'outer: for i in 0..d {
        for j in 0..d {
            let lhs = r.apply(&r.source.algebra().mult_basis(i, j).to_dense(&ctx, d));
            let rhs = r.target.product(&columns[i], &columns[j]);
            if lhs != rhs {
                witness = Some(format!("basis pair ({i}, {j})"));
                break 'outer;
            }
        }
    }
    report.push("multiplicative", witness);
    report
}

/// Dimension of each space after every stabilization round.
#[derive(Clone, Debug)]
pub struct ClosureTrace {
    pub s_closure_dims: Vec<usize>,
    pub convolution_dims: Vec<usize>,
}

/// The convolution closure C_pi of a representation: the coefficient
/// functionals, their closure, and the annihilator ideal I_pi.
#[derive(Clone)]
pub struct ConvolutionClosure {
    /// Dual-antipode-stable span of the coefficient functionals.
    pub generators: Subspace,
    /// Unital convolution subalgebra of H* generated by `generators`.
    pub closure: Subspace,
    /// Annihilator of `closure` inside H.
    pub ideal: Subspace,
    pub trace: ClosureTrace,
}

/// Computes C_pi and I_pi by two exact fixpoints in H*:
/// first the span of the coefficient functionals is closed under
/// composition with the antipode, then the unital convolution subalgebra
/// generated by that span is grown one product round at a time.
pub fn compute_closure(r: &Representation) -> Result<ConvolutionClosure> {
    let report = validate_rep(r);
    if let Some(fail) = report.first_failure() {
        return Err(Error::InvalidRepresentation(format!(
            "{}: {}",
            fail.name,
            fail.witness.as_deref().unwrap_or("")
        )));
    }
    let h = &r.source;
    let ctx = h.context().clone();
    let d = h.dim();

    // Row space of the matrix: the functionals psi o pi for psi in A*.
    let mut w = Subspace::from_spanning(&ctx, d, r.matrix.row_vecs());
    let mut s_closure_dims = vec![w.dim()];
    loop {
        let mapped: Vec<Vec<Cyclotomic>> = w
            .basis()
            .row_vecs()
            .into_iter()
            .map(|f| h.antipode().vec_mul(&f))
            .collect();
        let next = w.sum(&Subspace::from_spanning(&ctx, d, mapped));
        if next.dim() == w.dim() {
            break;
        }
        s_closure_dims.push(next.dim());
        w = next;
    }

    let w_rows = w.basis().row_vecs();
    let mut c = w.sum(&Subspace::from_spanning(&ctx, d, vec![h.counit().to_vec()]));
    let mut convolution_dims = vec![c.dim()];
    // Left-iterated products reach every word of generators, so each round
    // only convolves the newly found functionals against the generators.
    let mut frontier = c.basis().row_vecs();
    loop {
        let mut products = Vec::new();
        for f in &frontier {
            for g in &w_rows {
                products.push(h.convolve(f, g));
            }
        }
        let next = c.sum(&Subspace::from_spanning(&ctx, d, products));
        if next.dim() == c.dim() {
            break;
        }
        frontier = next
            .basis()
            .row_vecs()
            .into_iter()
            .filter(|row| !c.contains_vector(row))
            .collect();
        convolution_dims.push(next.dim());
        c = next;
    }

    let ideal = c.annihilator();
    Ok(ConvolutionClosure {
        generators: w,
        closure: c,
        ideal,
        trace: ClosureTrace {
            s_closure_dims,
            convolution_dims,
        },
    })
}

/// The Hopf image of a representation: the quotient by I_pi, the
/// projection onto it, and the induced representation.
#[derive(Clone)]
pub struct HopfImageResult {
    pub ideal: Subspace,
    pub image: HopfAlgebraData,
    pub projection: HopfMorphism,
    pub induced: Representation,
    pub trace: ClosureTrace,
}

pub fn hopf_image(r: &Representation) -> Result<HopfImageResult> {
    let closure = compute_closure(r)?;
    let (image, projection) = quotient_hopf(&r.source, &closure.ideal)?;
    let (_, section) = quotient_data(&closure.ideal);
    let induced = Representation::new(
        image.clone(),
        r.target.clone(),
        r.matrix.mul(&section)?,
    )?;
    Ok(HopfImageResult {
        ideal: closure.ideal,
        image,
        projection,
        induced,
        trace: closure.trace,
    })
}

/// True when I_pi = 0, i.e. the closure is all of H*.
pub fn is_inner_faithful(r: &Representation) -> Result<bool> {
    Ok(compute_closure(r)?.ideal.is_zero())
}

/// External tensor product: a representation of H (x) L on A (x) B whose
/// matrix is the Kronecker product.
pub fn tensor_rep(r: &Representation, s: &Representation) -> Result<Representation> {
    let hopf = r.source.tensor(&s.source)?;
    let target = r.target.tensor(&s.target)?;
    Representation::new(hopf, target, r.matrix.kronecker(&s.matrix))
}

/// True when pi (x) pi is inner faithful on H (x) H.
pub fn is_projectively_inner_faithful(r: &Representation) -> Result<bool> {
    is_inner_faithful(&tensor_rep(r, r)?)
}

/// Checks a candidate factorization (L, q, phi) of `r`: the shapes must
/// be compatible, phi o q must equal r, and the universal map L -> H_pi
/// must exist, which happens exactly when Ker(q) is contained in I_pi.
pub fn check_factorization(
    r: &Representation,
    q: &HopfMorphism,
    phi: &Representation,
) -> Result<bool> {
    if q.source != r.source {
        return Err(Error::ShapeMismatch(
            "factorization starts at a different Hopf algebra".into(),
        ));
    }
    if phi.source != q.target {
        return Err(Error::ShapeMismatch(
            "intermediate Hopf algebras do not match".into(),
        ));
    }
    if phi.target != r.target {
        return Err(Error::ShapeMismatch(
            "factorization lands in a different algebra".into(),
        ));
    }
    if phi.matrix.mul(&q.matrix)? != r.matrix {
        return Ok(false);
    }
    let ideal = compute_closure(r)?.ideal;
    let kernel = q.kernel();
    Ok(kernel.dim() == 0 || ideal.contains(&kernel))
}
