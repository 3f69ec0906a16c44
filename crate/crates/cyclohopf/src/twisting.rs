//! Twists of the comultiplication by an invertible element of H (x) H and
//! cotwists of the multiplication by a convolution-invertible bilinear form,
//! together with the transport facts that make Hopf images stable under both
//! deformations.

use crate::field::{ContextOps, Cyclotomic};
use crate::hopfcore::{
    is_hopf_ideal, AlgebraData, HopfAlgebraData, HopfMorphism, SparseVec, ValidationReport,
};
use crate::hopfimage::{compute_closure, hopf_image, Representation};
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// An invertible element Omega of H (x) H, stored in flattened coordinates
/// (index i*d + j for e_i (x) e_j), together with its inverse and the
/// canonical element u = m.(id (x) S)(Omega) used to conjugate the antipode.
///
/// The constructor only enforces invertibility of Omega.  Whether Omega
/// actually deforms the comultiplication into a coalgebra, including the
/// counit normalization of Omega itself, is the job of [`check_pseudo_twist`],
/// which reports a classification instead of an error.
#[derive(Clone)]
pub struct TwistElement {
    host: HopfAlgebraData,
    square: AlgebraData,
    omega: Vec<Cyclotomic>,
    omega_inv: Vec<Cyclotomic>,
    u: Vec<Cyclotomic>,
    u_inv: Option<Vec<Cyclotomic>>,
}

impl TwistElement {
    /// Wraps Omega, solving for Omega^-1 in H (x) H when it is not supplied
    /// and for u^-1 in H.  Fails if Omega is not invertible or if a supplied
    /// inverse does not invert it; a non-invertible u is tolerated and only
    /// rules out the pseudo-twist classification later.
    pub fn new(
        host: HopfAlgebraData,
        omega: Vec<Cyclotomic>,
        omega_inv: Option<Vec<Cyclotomic>>,
    ) -> Result<Self> {
        let d = host.dim();
        if omega.len() != d * d {
            return Err(Error::DimensionMismatch(format!(
                "omega has {} coordinates, expected {}",
                omega.len(),
                d * d
            )));
        }
        let square = host.algebra().tensor(host.algebra())?;
        let one_one = square.unit().to_vec();
        let omega_inv = match omega_inv {
            Some(v) => {
                if v.len() != d * d {
                    return Err(Error::DimensionMismatch(format!(
                        "omega_inv has {} coordinates, expected {}",
                        v.len(),
                        d * d
                    )));
                }
                v
            }
            None => square
                .left_mult_matrix(&omega)
                .solve(&one_one)
                .ok_or_else(|| Error::NotATwist("omega is not invertible".into()))?,
        };
        if square.product(&omega, &omega_inv) != one_one
            || square.product(&omega_inv, &omega) != one_one
        {
            return Err(Error::NotATwist(
                "omega_inv does not invert omega in H (x) H".into(),
            ));
        }

        // u = m.(id (x) S)(Omega) = sum omega_ij e_i * S(e_j).
        let ctx = host.context().clone();
        let mut u = vec![ctx.zero(); d];
        for i in 0..d {
            for j in 0..d {
                let w = &omega[i * d + j];
                if w.is_zero() {
                    continue;
                }
                let s_col: Vec<Cyclotomic> = (0..d).map(|m| host.antipode().at(m, j).clone()).collect();
                let mut ei = vec![ctx.zero(); d];
                ei[i] = ctx.one();
                let prod = host.algebra().product(&ei, &s_col);
                for (slot, p) in u.iter_mut().zip(&prod) {
                    let t = w * p;
                    *slot += &t;
                }
            }
        }
        let u_inv = host
            .algebra()
            .left_mult_matrix(&u)
            .solve(host.unit())
            .filter(|cand| host.algebra().product(cand, &u) == host.unit());

        Ok(TwistElement {
            host,
            square,
            omega,
            omega_inv,
            u,
            u_inv,
        })
    }

    pub fn host(&self) -> &HopfAlgebraData {
        &self.host
    }

    pub fn omega(&self) -> &[Cyclotomic] {
        &self.omega
    }

    pub fn omega_inv(&self) -> &[Cyclotomic] {
        &self.omega_inv
    }

    pub fn u(&self) -> &[Cyclotomic] {
        &self.u
    }

    pub fn u_inv(&self) -> Option<&[Cyclotomic]> {
        self.u_inv.as_deref()
    }

    /// Columns of delta_Omega(x) = Omega * Delta(x), dense in d^2 coordinates.
    fn delta_omega(&self) -> Vec<Vec<Cyclotomic>> {
        let d = self.host.dim();
        let ctx = self.host.context();
        (0..d)
            .map(|j| {
                let dj = self.host.comult_basis(j).to_dense(ctx, d * d);
                self.square.product(&self.omega, &dj)
            })
            .collect()
    }

    /// Columns of Delta_Omega(x) = Omega * Delta(x) * Omega^-1.
    fn conjugated_comult(&self) -> Vec<Vec<Cyclotomic>> {
        let d = self.host.dim();
        let ctx = self.host.context();
        (0..d)
            .map(|j| {
                let dj = self.host.comult_basis(j).to_dense(ctx, d * d);
                let left = self.square.product(&self.omega, &dj);
                self.square.product(&left, &self.omega_inv)
            })
            .collect()
    }

    /// Antipode matrix of the twisted algebra, S_u(x) = u S(x) u^-1, when u
    /// is invertible.
    fn s_u_matrix(&self) -> Option<Matrix> {
        let u_inv = self.u_inv.as_ref()?;
        let d = self.host.dim();
        let ctx = self.host.context();
        let alg = self.host.algebra();
        let mut m = Matrix::zero(ctx, d, d);
        for j in 0..d {
            let s_col: Vec<Cyclotomic> = (0..d).map(|r| self.host.antipode().at(r, j).clone()).collect();
            let col = alg.product(&alg.product(&self.u, &s_col), u_inv);
            for (r, val) in col.into_iter().enumerate() {
                *m.at_mut(r, j) = val;
            }
        }
        Some(m)
    }
}

/// Which comultiplication deformation Omega produces, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistKind {
    /// (H, Omega*Delta, eps) is already a coalgebra.
    Twist,
    /// Omega is counit-normalized, conjugation Omega*Delta*Omega^-1 is a
    /// coalgebra, and the canonical u makes S_u an antipode for it.
    PseudoTwist,
    /// Some identity fails; the witness names the first one.
    Neither,
}

/// Classification outcome with the first violated identity when the element
/// is neither kind of twist.
#[derive(Clone, Debug)]
pub struct TwistClassification {
    pub kind: TwistKind,
    pub witness: Option<String>,
}

/// Checks the coalgebra axioms for a candidate comultiplication given by
/// dense d^2 columns, reusing the host's counit.  Returns the first violated
/// identity.
fn coalgebra_witness(h: &HopfAlgebraData, comult: &[Vec<Cyclotomic>]) -> Option<String> {
    let d = h.dim();
    let ctx = h.context();
    let counit = h.counit();

    // Counit laws (eps (x) id) delta = id = (id (x) eps) delta.
    for (j, col) in comult.iter().enumerate() {
        let mut left = vec![ctx.zero(); d];
        let mut right = vec![ctx.zero(); d];
        for a in 0..d {
            for b in 0..d {
                let c = &col[a * d + b];
                if c.is_zero() {
                    continue;
                }
                let tl = &counit[a] * c;
                left[b] += &tl;
                let tr = c * &counit[b];
                right[a] += &tr;
            }
        }
        let mut ej = vec![ctx.zero(); d];
        ej[j] = ctx.one();
        if left != ej {
            return Some(format!("counit law (eps (x) id) fails at basis {j}"));
        }
        if right != ej {
            return Some(format!("counit law (id (x) eps) fails at basis {j}"));
        }
    }

    // Coassociativity in d^3 coordinates: apply the candidate to the first
    // leg versus the second leg.
    for (j, col) in comult.iter().enumerate() {
        let mut first = vec![ctx.zero(); d * d * d];
        let mut second = vec![ctx.zero(); d * d * d];
        for a in 0..d {
            for b in 0..d {
                let c = &col[a * d + b];
                if c.is_zero() {
                    continue;
                }
                for p in 0..d {
                    for q in 0..d {
                        let inner = &comult[a][p * d + q];
                        if !inner.is_zero() {
                            let t = c * inner;
                            first[p * d * d + q * d + b] += &t;
                        }
                        let inner = &comult[b][p * d + q];
                        if !inner.is_zero() {
                            let t = c * inner;
                            second[a * d * d + p * d + q] += &t;
                        }
                    }
                }
            }
        }
        if first != second {
            return Some(format!("coassociativity fails at basis {j}"));
        }
    }
    None
}

/// Classifies Omega: a twist if Omega*Delta with the original counit is a
/// coalgebra, a pseudo-twist if Omega is counit-normalized and conjugation
/// by Omega yields a Hopf algebra with antipode S_u for the canonical u,
/// and neither otherwise.
pub fn check_pseudo_twist(t: &TwistElement) -> TwistClassification {
    let h = &t.host;
    let d = h.dim();
    let ctx = h.context();

    let twist_witness = coalgebra_witness(h, &t.delta_omega());
    if twist_witness.is_none() {
        return TwistClassification {
            kind: TwistKind::Twist,
            witness: None,
        };
    }

    // Pseudo-twist path.  The definition starts from the counit
    // normalization of Omega itself.
    let counit = h.counit();
    let mut eps_id = vec![ctx.zero(); d];
    let mut id_eps = vec![ctx.zero(); d];
    for a in 0..d {
        for b in 0..d {
            let w = &t.omega[a * d + b];
            if w.is_zero() {
                continue;
            }
            let tl = &counit[a] * w;
            eps_id[b] += &tl;
            let tr = w * &counit[b];
            id_eps[a] += &tr;
        }
    }
    if eps_id != h.unit() || id_eps != h.unit() {
        return TwistClassification {
            kind: TwistKind::Neither,
            witness: Some("counit normalization fails: (eps (x) id)(omega) or (id (x) eps)(omega) differs from 1".into()),
        };
    }

    let conjugated = t.conjugated_comult();
    if let Some(w) = coalgebra_witness(h, &conjugated) {
        return TwistClassification {
            kind: TwistKind::Neither,
            witness: Some(format!("conjugated comultiplication: {w}")),
        };
    }

    let Some(s_u) = t.s_u_matrix() else {
        return TwistClassification {
            kind: TwistKind::Neither,
            witness: Some("u = m.(id (x) S)(omega) is not invertible".into()),
        };
    };

    let comult: Vec<SparseVec> = conjugated.iter().map(|c| SparseVec::from_dense(c)).collect();
    let candidate = HopfAlgebraData::new(h.algebra().clone(), comult, counit.to_vec(), s_u);
    match candidate {
        Ok(hopf) => {
            let report = hopf.validate();
            if report.all_passed() {
                TwistClassification {
                    kind: TwistKind::PseudoTwist,
                    witness: None,
                }
            } else {
                let f = report.first_failure().unwrap();
                TwistClassification {
                    kind: TwistKind::Neither,
                    witness: Some(format!("twisted structure fails {}", f.name)),
                }
            }
        }
        Err(e) => TwistClassification {
            kind: TwistKind::Neither,
            witness: Some(format!("twisted structure is malformed: {e}")),
        },
    }
}

/// Builds H_Omega: the same algebra with comultiplication conjugated by
/// Omega and antipode conjugated by u.  For a plain twist the conjugated
/// comultiplication equals Omega*Delta composed with right multiplication by
/// Omega^-1, which the coalgebra axioms force to agree with the twist's own
/// deformation, so both classifications share this construction.
pub fn twist_hopf(t: &TwistElement) -> Result<HopfAlgebraData> {
    let cls = check_pseudo_twist(t);
    if cls.kind == TwistKind::Neither {
        return Err(Error::NotATwist(
            cls.witness.unwrap_or_else(|| "unclassified".into()),
        ));
    }
    let h = &t.host;
    let comult: Vec<SparseVec> = t
        .conjugated_comult()
        .iter()
        .map(|c| SparseVec::from_dense(c))
        .collect();
    let s_u = t
        .s_u_matrix()
        .ok_or_else(|| Error::NotATwist("u = m.(id (x) S)(omega) is not invertible".into()))?;
    let twisted = HopfAlgebraData::new(h.algebra().clone(), comult, h.counit().to_vec(), s_u)?;
    let report = twisted.validate();
    if !report.all_passed() {
        let f = report.first_failure().unwrap();
        return Err(Error::NotATwist(format!(
            "twisted structure fails {}",
            f.name
        )));
    }
    Ok(twisted)
}

/// Twisting does not move the lattice of Hopf ideals: a subspace is a Hopf
/// ideal of H exactly when it is one of H_Omega.  Returns whether the two
/// verdicts agree, which they always should; exposed as a checkable property
/// rather than an assertion.
pub fn hopf_ideal_transport(
    h: &HopfAlgebraData,
    t: &TwistElement,
    i: &Subspace,
) -> Result<bool> {
    if h.dim() != t.host.dim() || h.context().conductor() != t.host.context().conductor() {
        return Err(Error::HostMismatch(
            "twist element lives on a different Hopf algebra".into(),
        ));
    }
    let twisted = twist_hopf(t)?;
    Ok(is_hopf_ideal(h, i)? == is_hopf_ideal(&twisted, i)?)
}

/// Pushes Omega forward along a surjection p, giving (p (x) p)(Omega) with
/// inverse (p (x) p)(Omega^-1) on the target.
pub fn pushforward_twist(t: &TwistElement, p: &HopfMorphism) -> Result<TwistElement> {
    if p.source.dim() != t.host.dim()
        || p.source.context().conductor() != t.host.context().conductor()
    {
        return Err(Error::HostMismatch(
            "morphism source differs from the twist's host".into(),
        ));
    }
    if !p.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let d = t.host.dim();
    let dq = p.target.dim();
    let ctx = t.host.context();
    let push = |v: &[Cyclotomic]| -> Vec<Cyclotomic> {
        let mut out = vec![ctx.zero(); dq * dq];
        for i in 0..d {
            for j in 0..d {
                let w = &v[i * d + j];
                if w.is_zero() {
                    continue;
                }
                for a in 0..dq {
                    let pa = p.matrix.at(a, i);
                    if pa.is_zero() {
                        continue;
                    }
                    for b in 0..dq {
                        let pb = p.matrix.at(b, j);
                        if pb.is_zero() {
                            continue;
                        }
                        let term = &(w * pa) * pb;
                        out[a * dq + b] += &term;
                    }
                }
            }
        }
        out
    };
    TwistElement::new(p.target.clone(), push(&t.omega), Some(push(&t.omega_inv)))
}

/// The Hopf image ideal of a representation is blind to twisting: computes
/// I_pi over H and over H_Omega (same underlying algebra, same matrix) and
/// reports whether the two ideals coincide and whether the pushforward of
/// Omega along the Hopf image projection is still a twist or pseudo-twist.
pub fn twisted_hopf_image_check(r: &Representation, t: &TwistElement) -> Result<bool> {
    if r.source.dim() != t.host.dim()
        || r.source.context().conductor() != t.host.context().conductor()
    {
        return Err(Error::HostMismatch(
            "representation source differs from the twist's host".into(),
        ));
    }
    let plain = compute_closure(r)?.ideal;
    let twisted_host = twist_hopf(t)?;
    let twisted_rep = Representation::new(twisted_host, r.target.clone(), r.matrix.clone())?;
    let twisted = compute_closure(&twisted_rep)?.ideal;
    if plain != twisted {
        return Ok(false);
    }
    let image = hopf_image(r)?;
    let pushed = pushforward_twist(t, &image.projection)?;
    let cls = check_pseudo_twist(&pushed);
    Ok(cls.kind != TwistKind::Neither)
}

/// A bilinear form sigma on H, stored as the d x d matrix of its values on
/// basis pairs, together with its convolution inverse.  The constructor
/// solves for the inverse when it is not supplied; all other cocycle axioms
/// are verified by [`check_cocycle`].
#[derive(Clone)]
pub struct Cocycle {
    host: HopfAlgebraData,
    sigma: Matrix,
    sigma_inv: Matrix,
}

impl Cocycle {
    pub fn new(host: HopfAlgebraData, sigma: Matrix, sigma_inv: Option<Matrix>) -> Result<Self> {
        let d = host.dim();
        if sigma.rows() != d || sigma.cols() != d {
            return Err(Error::ShapeMismatch(format!(
                "sigma is {}x{}, expected {d}x{d}",
                sigma.rows(),
                sigma.cols()
            )));
        }
        let sigma_inv = match sigma_inv {
            Some(m) => {
                if m.rows() != d || m.cols() != d {
                    return Err(Error::ShapeMismatch(format!(
                        "sigma_inv is {}x{}, expected {d}x{d}",
                        m.rows(),
                        m.cols()
                    )));
                }
                m
            }
            None => solve_convolution_inverse(&host, &sigma)?,
        };
        Ok(Cocycle {
            host,
            sigma,
            sigma_inv,
        })
    }

    pub fn host(&self) -> &HopfAlgebraData {
        &self.host
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &Matrix {
        &self.sigma_inv
    }

    /// Evaluates sigma on a pair of vectors by bilinearity.
    pub fn apply(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> Cyclotomic {
        bilinear_eval(&self.sigma, x, y)
    }

    /// Evaluates the convolution inverse on a pair of vectors.
    pub fn apply_inv(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> Cyclotomic {
        bilinear_eval(&self.sigma_inv, x, y)
    }
}

fn bilinear_eval(m: &Matrix, x: &[Cyclotomic], y: &[Cyclotomic]) -> Cyclotomic {
    let ctx = m.context();
    let mut out = ctx.zero();
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let t = &(xi * m.at(i, j)) * yj;
            out += &t;
        }
    }
    out
}

/// Convolution product of two bilinear forms on basis pair (i, j):
/// sum over Delta(e_i), Delta(e_j) of f(leg1, leg1) g(leg2, leg2).
fn convolution(h: &HopfAlgebraData, f: &Matrix, g: &Matrix, i: usize, j: usize) -> Cyclotomic {
    let ctx = h.context();
    let d = h.dim();
    let mut out = ctx.zero();
    for (pq, ci) in h.comult_basis(i).entries() {
        let (p, q) = (pq / d, pq % d);
        for (rs, cj) in h.comult_basis(j).entries() {
            let (r, s) = (rs / d, rs % d);
            let t = &(&(ci * cj) * f.at(p, r)) * g.at(q, s);
            out += &t;
        }
    }
    out
}

/// Solves sigma * tau = eps (x) eps for tau as a d^2 x d^2 linear system and
/// checks the two-sided identity.
fn solve_convolution_inverse(h: &HopfAlgebraData, sigma: &Matrix) -> Result<Matrix> {
    let d = h.dim();
    let ctx = h.context();
    let counit = h.counit();
    let mut m = Matrix::zero(ctx, d * d, d * d);
    let mut rhs = vec![ctx.zero(); d * d];
    for i in 0..d {
        for j in 0..d {
            let row = i * d + j;
            rhs[row] = &counit[i] * &counit[j];
            for (pq, ci) in h.comult_basis(i).entries() {
                let (p, q) = (pq / d, pq % d);
                for (rs, cj) in h.comult_basis(j).entries() {
                    let (r, s) = (rs / d, rs % d);
                    let coeff = &(ci * cj) * sigma.at(p, r);
                    *m.at_mut(row, q * d + s) += &coeff;
                }
            }
        }
    }
    let sol = m
        .solve(&rhs)
        .ok_or_else(|| Error::NotACocycle("sigma has no convolution inverse".into()))?;
    let mut inv = Matrix::zero(ctx, d, d);
    for a in 0..d {
        for b in 0..d {
            *inv.at_mut(a, b) = sol[a * d + b].clone();
        }
    }
    for i in 0..d {
        for j in 0..d {
            if convolution(h, &inv, sigma, i, j) != &counit[i] * &counit[j] {
                return Err(Error::NotACocycle(
                    "sigma has a right but no two-sided convolution inverse".into(),
                ));
            }
        }
    }
    Ok(inv)
}

/// Verifies the cocycle axioms on every basis pair and triple: normalization
/// against the unit, the convolution-inverse identity in both orders, and
/// the two-cocycle identity
/// sigma(x1, y1) sigma(x2 y2, z) = sigma(y1, z1) sigma(x, y2 z2).
pub fn check_cocycle(c: &Cocycle) -> ValidationReport {
    let h = &c.host;
    let d = h.dim();
    let ctx = h.context();
    let counit = h.counit();
    let unit = h.unit();
    let mut report = ValidationReport { checks: vec![] };

    let mut witness = None;
    for i in 0..d {
        let mut ei = vec![ctx.zero(); d];
        ei[i] = ctx.one();
        if c.apply(&ei, unit) != counit[i] {
            witness = Some(format!("sigma(e_{i}, 1) differs from eps(e_{i})"));
            break;
        }
        if c.apply(unit, &ei) != counit[i] {
            witness = Some(format!("sigma(1, e_{i}) differs from eps(e_{i})"));
            break;
        }
    }
    report.push("normalization", witness);

    let mut witness = None;
    'conv: for i in 0..d {
        for j in 0..d {
            let expected = &counit[i] * &counit[j];
            if convolution(h, &c.sigma, &c.sigma_inv, i, j) != expected {
                witness = Some(format!("(sigma * sigma_inv)(e_{i}, e_{j}) differs from eps eps"));
                break 'conv;
            }
            if convolution(h, &c.sigma_inv, &c.sigma, i, j) != expected {
                witness = Some(format!("(sigma_inv * sigma)(e_{i}, e_{j}) differs from eps eps"));
                break 'conv;
            }
        }
    }
    report.push("convolution_inverse", witness);

    let mut witness = None;
    'cocycle: for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                // Left side: sum sigma(x1, y1) sigma(x2 y2, z).
                let mut lhs = ctx.zero();
                for (pq, cx) in h.comult_basis(x).entries() {
                    let (p, q) = (pq / d, pq % d);
                    for (rs, cy) in h.comult_basis(y).entries() {
                        let (r, s) = (rs / d, rs % d);
                        let mut inner = ctx.zero();
                        for (m, cm) in h.algebra().mult_basis(q, s).entries() {
                            let t = cm * c.sigma.at(*m, z);
                            inner += &t;
                        }
                        let t = &(&(cx * cy) * c.sigma.at(p, r)) * &inner;
                        lhs += &t;
                    }
                }
                // Right side: sum sigma(y1, z1) sigma(x, y2 z2).
                let mut rhs = ctx.zero();
                for (pq, cy) in h.comult_basis(y).entries() {
                    let (p, q) = (pq / d, pq % d);
                    for (rs, cz) in h.comult_basis(z).entries() {
                        let (r, s) = (rs / d, rs % d);
                        let mut inner = ctx.zero();
                        for (m, cm) in h.algebra().mult_basis(q, s).entries() {
                            let t = cm * c.sigma.at(x, *m);
                            inner += &t;
                        }
                        let t = &(&(cy * cz) * c.sigma.at(p, r)) * &inner;
                        rhs += &t;
                    }
                }
                if lhs != rhs {
                    witness = Some(format!("cocycle identity fails at (e_{x}, e_{y}, e_{z})"));
                    break 'cocycle;
                }
            }
        }
    }
    report.push("cocycle_identity", witness);
    report
}

fn cocycle_gate(c: &Cocycle) -> Result<()> {
    let report = check_cocycle(c);
    if let Some(f) = report.first_failure() {
        return Err(Error::NotACocycle(format!(
            "{}: {}",
            f.name,
            f.witness.as_deref().unwrap_or("")
        )));
    }
    Ok(())
}

/// Deforms the multiplication on both sides,
/// [x][y] = sigma(x1, y1) sigma_inv(x3, y3) [x2 y2], keeping the
/// comultiplication, counit, and unit, and rebuilds the antipode from
/// S_sigma([x]) = sigma(x1, S(x2)) sigma_inv(S(x4), x5) [S(x3)].
pub fn cotwist_hopf(c: &Cocycle) -> Result<HopfAlgebraData> {
    cocycle_gate(c)?;
    let h = &c.host;
    let d = h.dim();
    let ctx = h.context().clone();

    let mut mult = Vec::with_capacity(d * d);
    for i in 0..d {
        let mut ei = vec![ctx.zero(); d];
        ei[i] = ctx.one();
        let legs_i = h.iterated_comult(&ei, 3);
        for j in 0..d {
            let mut ej = vec![ctx.zero(); d];
            ej[j] = ctx.one();
            let legs_j = h.iterated_comult(&ej, 3);
            let mut acc = vec![ctx.zero(); d];
            for (ia, ca) in &legs_i {
                for (jb, cb) in &legs_j {
                    let coeff = &(&(ca * cb) * c.sigma.at(ia[0], jb[0])) * c.sigma_inv.at(ia[2], jb[2]);
                    if coeff.is_zero() {
                        continue;
                    }
                    for (m, cm) in h.algebra().mult_basis(ia[1], jb[1]).entries() {
                        let t = &coeff * cm;
                        acc[*m] += &t;
                    }
                }
            }
            mult.push(SparseVec::from_dense(&acc));
        }
    }
    let algebra = AlgebraData::new(
        ctx.clone(),
        h.labels().to_vec(),
        mult,
        h.unit().to_vec(),
    )?;

    // sigma(e_a, S(e_b)) and sigma_inv(S(e_a), e_b) as precomputed matrices.
    let s = h.antipode();
    let mut sig_s = Matrix::zero(&ctx, d, d);
    let mut siginv_s = Matrix::zero(&ctx, d, d);
    for a in 0..d {
        for b in 0..d {
            let mut acc = ctx.zero();
            for m in 0..d {
                let sm = s.at(m, b);
                if !sm.is_zero() {
                    let t = c.sigma.at(a, m) * sm;
                    acc += &t;
                }
            }
            *sig_s.at_mut(a, b) = acc;
            let mut acc = ctx.zero();
            for m in 0..d {
                let sm = s.at(m, a);
                if !sm.is_zero() {
                    let t = sm * c.sigma_inv.at(m, b);
                    acc += &t;
                }
            }
            *siginv_s.at_mut(a, b) = acc;
        }
    }

    let mut antipode = Matrix::zero(&ctx, d, d);
    for x in 0..d {
        let mut ex = vec![ctx.zero(); d];
        ex[x] = ctx.one();
        let mut col = vec![ctx.zero(); d];
        for (legs, cl) in h.iterated_comult(&ex, 5) {
            let coeff = &(&cl * sig_s.at(legs[0], legs[1])) * siginv_s.at(legs[3], legs[4]);
            if coeff.is_zero() {
                continue;
            }
            for r in 0..d {
                let sm = s.at(r, legs[2]);
                if !sm.is_zero() {
                    let t = &coeff * sm;
                    col[r] += &t;
                }
            }
        }
        for (r, val) in col.into_iter().enumerate() {
            *antipode.at_mut(r, x) = val;
        }
    }

    let comult: Vec<SparseVec> = (0..d).map(|i| h.comult_basis(i).clone()).collect();
    let cotwisted = HopfAlgebraData::new(algebra, comult, h.counit().to_vec(), antipode)?;
    let report = cotwisted.validate();
    if !report.all_passed() {
        let f = report.first_failure().unwrap();
        return Err(Error::NotACocycle(format!(
            "cotwisted structure fails {}",
            f.name
        )));
    }
    Ok(cotwisted)
}

/// The two one-sided deformations: {x}{y} = sigma(x1, y1) {x2 y2} and
/// <x><y> = sigma_inv(x2, y2) <x1 y1>, both associative unital algebras on
/// the same underlying space.
pub fn one_sided_twisted_algebras(c: &Cocycle) -> Result<(AlgebraData, AlgebraData)> {
    cocycle_gate(c)?;
    let h = &c.host;
    let d = h.dim();
    let ctx = h.context().clone();

    let mut left_mult = Vec::with_capacity(d * d);
    let mut right_mult = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut left = vec![ctx.zero(); d];
            let mut right = vec![ctx.zero(); d];
            for (pq, ci) in h.comult_basis(i).entries() {
                let (p, q) = (pq / d, pq % d);
                for (rs, cj) in h.comult_basis(j).entries() {
                    let (r, s) = (rs / d, rs % d);
                    let base = ci * cj;
                    let coeff = &base * c.sigma.at(p, r);
                    if !coeff.is_zero() {
                        for (m, cm) in h.algebra().mult_basis(q, s).entries() {
                            let t = &coeff * cm;
                            left[*m] += &t;
                        }
                    }
                    let coeff = &base * c.sigma_inv.at(q, s);
                    if !coeff.is_zero() {
                        for (m, cm) in h.algebra().mult_basis(p, r).entries() {
                            let t = &coeff * cm;
                            right[*m] += &t;
                        }
                    }
                }
            }
            left_mult.push(SparseVec::from_dense(&left));
            right_mult.push(SparseVec::from_dense(&right));
        }
    }
    let left = AlgebraData::new(
        ctx.clone(),
        h.labels().to_vec(),
        left_mult,
        h.unit().to_vec(),
    )?;
    let right = AlgebraData::new(ctx, h.labels().to_vec(), right_mult, h.unit().to_vec())?;
    for (name, alg) in [("sigma H", &left), ("H sigma_inv", &right)] {
        let report = alg.validate();
        if !report.all_passed() {
            let f = report.first_failure().unwrap();
            return Err(Error::NotACocycle(format!(
                "one-sided algebra {name} fails {}",
                f.name
            )));
        }
    }
    Ok((left, right))
}

/// Pulls a cocycle on K back along a surjective Hopf algebra map p: H -> K,
/// giving sigma_p(x, y) = sigma(p(x), p(y)) with the inverse pulled back the
/// same way.
pub fn induced_cocycle(sigma_on_k: &Cocycle, p: &HopfMorphism) -> Result<Cocycle> {
    if p.target.dim() != sigma_on_k.host.dim()
        || p.target.context().conductor() != sigma_on_k.host.context().conductor()
    {
        return Err(Error::HostMismatch(
            "morphism target differs from the cocycle's host".into(),
        ));
    }
    if !p.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let d = p.source.dim();
    let ctx = p.source.context();
    let pull = |m: &Matrix| -> Matrix {
        let mut out = Matrix::zero(ctx, d, d);
        for i in 0..d {
            let pi: Vec<Cyclotomic> = (0..p.target.dim()).map(|a| p.matrix.at(a, i).clone()).collect();
            for j in 0..d {
                let pj: Vec<Cyclotomic> = (0..p.target.dim()).map(|b| p.matrix.at(b, j).clone()).collect();
                *out.at_mut(i, j) = bilinear_eval(m, &pi, &pj);
            }
        }
        out
    };
    Cocycle::new(
        p.source.clone(),
        pull(&sigma_on_k.sigma),
        Some(pull(&sigma_on_k.sigma_inv)),
    )
}
