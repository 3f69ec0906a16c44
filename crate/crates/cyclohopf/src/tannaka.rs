//! Comodules, spaces of comodule morphisms, and the representation-level
//! morphism spaces used by the Tannaka-style inner-faithfulness checks:
//! a representation is inner faithful exactly when the morphism spaces
//! computed through it agree with the honest comodule morphism spaces on
//! all simple comodules.

use std::collections::BTreeMap;

use crate::field::{ContextOps, Cyclotomic};
use crate::hopfcore::{acc_add, HopfAlgebraData, HopfMorphism, SparseVec, ValidationReport};
use crate::hopfimage::{hopf_image, Representation};
use crate::linalg::{Matrix, Subspace};
use crate::pointed::GroupLikeSet;
use crate::{Error, Result};

/// A finite-dimensional right comodule given by its coefficient matrix:
/// the coaction is alpha(e_i) = sum_j e_j (x) u[j][i].
#[derive(Clone)]
pub struct Comodule {
    pub host: HopfAlgebraData,
    pub dim: usize,
    /// Flattened n x n matrix of vectors in H; entry (i, j) at i * n + j.
    pub coeffs: Vec<Vec<Cyclotomic>>,
    /// Marks a comodule isomorphic to its dual, which lets word
    /// enumeration collapse the two-letter alphabet to one.
    pub self_dual: bool,
}

impl Comodule {
    pub fn new(host: HopfAlgebraData, dim: usize, coeffs: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        if coeffs.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "comodule coefficient matrix has {} entries, expected {}",
                coeffs.len(),
                dim * dim
            )));
        }
        for v in &coeffs {
            if v.len() != host.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "comodule coefficient vector has length {}, expected {}",
                    v.len(),
                    host.dim()
                )));
            }
        }
        Ok(Comodule {
            host,
            dim,
            coeffs,
            self_dual: false,
        })
    }

    pub fn coeff(&self, i: usize, j: usize) -> &[Cyclotomic] {
        &self.coeffs[i * self.dim + j]
    }

    /// The one-dimensional comodule with coefficient 1.
    pub fn trivial(host: &HopfAlgebraData) -> Comodule {
        Comodule {
            host: host.clone(),
            dim: 1,
            coeffs: vec![host.unit().to_vec()],
            self_dual: true,
        }
    }

    /// The one-dimensional comodule attached to a group-like element.
    pub fn from_grouplike(host: &HopfAlgebraData, g: &[Cyclotomic]) -> Comodule {
        Comodule {
            host: host.clone(),
            dim: 1,
            coeffs: vec![g.to_vec()],
            self_dual: false,
        }
    }

    /// H coacting on itself by comultiplication.
    pub fn regular(host: &HopfAlgebraData) -> Comodule {
        let d = host.dim();
        let ctx = host.context().clone();
        let mut coeffs = vec![vec![ctx.zero(); d]; d * d];
        for i in 0..d {
            for (jk, c) in host.comult_basis(i).entries() {
                let (j, k) = (jk / d, jk % d);
                coeffs[j * d + i][k] = c.clone();
            }
        }
        Comodule {
            host: host.clone(),
            dim: d,
            coeffs,
            self_dual: false,
        }
    }

    /// Checks the coefficient identities: Delta(u_ij) = sum_k u_ik (x) u_kj
    /// and eps(u_ij) = delta_ij.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport { checks: vec![] };
        let h = &self.host;
        let d = h.dim();
        let n = self.dim;
        let mut coassoc = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = h.comult_of(self.coeff(i, j));
                let mut rhs = BTreeMap::new();
                for k in 0..n {
                    let a = self.coeff(i, k);
                    let b = self.coeff(k, j);
                    for (p, ap) in a.iter().enumerate() {
                        if ap.is_zero() {
                            continue;
                        }
                        for (q, bq) in b.iter().enumerate() {
                            if !bq.is_zero() {
                                let t = ap * bq;
                                acc_add(&mut rhs, p * d + q, &t);
                            }
                        }
                    }
                }
                if lhs != SparseVec::from_map(rhs) {
                    coassoc = Some(format!("coefficient ({i}, {j})"));
                    break 'outer;
                }
            }
        }
        report.push("comodule_coassociativity", coassoc);
        let mut counit = None;
        'outer2: for i in 0..n {
            for j in 0..n {
                let e = h.counit_of(self.coeff(i, j));
                let ok = if i == j { e.is_one() } else { e.is_zero() };
                if !ok {
                    counit = Some(format!("coefficient ({i}, {j})"));
                    break 'outer2;
                }
            }
        }
        report.push("comodule_counit", counit);
        report
    }

    /// The dual comodule, whose coefficients are the antipode images with
    /// transposed indices.
    pub fn dual(&self) -> Comodule {
        let n = self.dim;
        let mut coeffs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                coeffs.push(self.host.antipode_of(self.coeff(j, i)));
            }
        }
        Comodule {
            host: self.host.clone(),
            dim: n,
            coeffs,
            self_dual: self.self_dual,
        }
    }

    /// Tensor product comodule; coefficients multiply in H.
    pub fn tensor(&self, other: &Comodule) -> Result<Comodule> {
        if self.host != other.host {
            return Err(Error::HostMismatch(
                "tensor product of comodules over different Hopf algebras".into(),
            ));
        }
        let (na, nb) = (self.dim, other.dim);
        let n = na * nb;
        let mut coeffs = Vec::with_capacity(n * n);
        for i in 0..na {
            for k in 0..nb {
                for j in 0..na {
                    for l in 0..nb {
                        coeffs.push(
                            self.host
                                .algebra()
                                .product(self.coeff(i, j), other.coeff(k, l)),
                        );
                    }
                }
            }
        }
        let mut out = Comodule::new(self.host.clone(), n, coeffs)?;
        out.self_dual = self.self_dual && other.self_dual;
        Ok(out)
    }

    /// The comodule over the quotient with coefficients pushed through a
    /// Hopf morphism.
    pub fn pushforward(&self, p: &HopfMorphism) -> Result<Comodule> {
        if p.source != self.host {
            return Err(Error::HostMismatch(
                "pushforward along a morphism from a different Hopf algebra".into(),
            ));
        }
        let mut out = Comodule::new(
            p.target.clone(),
            self.dim,
            self.coeffs.iter().map(|v| p.apply(v)).collect(),
        )?;
        out.self_dual = self.self_dual;
        Ok(out)
    }
}

/// A solution space of intertwiner matrices between two comodules.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    /// Matrices f: source -> target, flattened row-major into vectors of
    /// length target_dim * source_dim.
    pub space: Subspace,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// The space of comodule morphisms U -> V: matrices f with
/// sum_l v[m][l] f[l][i] = sum_j f[m][j] u[j][i] in H for all m, i.
pub fn hom_comodule(u: &Comodule, v: &Comodule) -> Result<HomSpace> {
    if u.host != v.host {
        return Err(Error::HostMismatch(
            "comodule morphisms require a common Hopf algebra".into(),
        ));
    }
    let d = u.host.dim();
    hom_space_from_coefficients(u, v, d, |w| w.to_vec())
}

/// The space of morphisms between the images of two comodules under a
/// representation: the same linear system with pi applied to every
/// coefficient.
pub fn hom_pi(r: &Representation, u: &Comodule, v: &Comodule) -> Result<HomSpace> {
    if u.host != v.host {
        return Err(Error::HostMismatch(
            "comodule morphisms require a common Hopf algebra".into(),
        ));
    }
    if r.source != u.host {
        return Err(Error::HostMismatch(
            "representation acts on a different Hopf algebra".into(),
        ));
    }
    hom_space_from_coefficients(u, v, r.target.dim(), |w| r.apply(w))
}

fn hom_space_from_coefficients(
    u: &Comodule,
    v: &Comodule,
    coeff_len: usize,
    map: impl Fn(&[Cyclotomic]) -> Vec<Cyclotomic>,
) -> Result<HomSpace> {
    let ctx = u.host.context().clone();
    let (nu, nv) = (u.dim, v.dim);
    let unknowns = nv * nu;
    let mut m = Matrix::zero(&ctx, nv * nu * coeff_len, unknowns);
    let ucoe: Vec<Vec<Cyclotomic>> = u.coeffs.iter().map(|w| map(w)).collect();
    let vcoe: Vec<Vec<Cyclotomic>> = v.coeffs.iter().map(|w| map(w)).collect();
    for mm in 0..nv {
        for i in 0..nu {
            let base = (mm * nu + i) * coeff_len;
            // + v[mm][l] f[l][i]
            for l in 0..nv {
                let coeff = &vcoe[mm * nv + l];
                for k in 0..coeff_len {
                    if !coeff[k].is_zero() {
                        *m.at_mut(base + k, l * nu + i) += &coeff[k];
                    }
                }
            }
            // - f[mm][j] u[j][i]
            for j in 0..nu {
                let coeff = &ucoe[j * nu + i];
                for k in 0..coeff_len {
                    if !coeff[k].is_zero() {
                        *m.at_mut(base + k, mm * nu + j) -= &coeff[k];
                    }
                }
            }
        }
    }
    Ok(HomSpace {
        source_dim: nu,
        target_dim: nv,
        space: m.kernel(),
    })
}

/// One comparison row of [`tannaka_equality_check`].
#[derive(Clone, Debug)]
pub struct TannakaRow {
    pub dim_hom_host: usize,
    pub dim_hom_image: usize,
    pub dim_hom_pi: usize,
    /// Exact equality between the quotient Hom space and the pi-morphisms.
    pub image_equals_pi: bool,
    /// Strict defect of the host Hom space against the pi-morphisms.
    pub host_strictly_smaller: bool,
}

#[derive(Clone, Debug)]
pub struct TannakaReport {
    pub rows: Vec<TannakaRow>,
    /// All three dimensions agree on every supplied pair.
    pub all_equal: bool,
}

/// For each pair (U, V): computes Hom over the host, Hom over the Hopf
/// image (coefficients pushed through the projection), and the space of
/// pi-morphisms. The middle always equals the right; the left is smaller
/// exactly where inner faithfulness fails, provided the pairs exhaust the
/// simple comodules.
pub fn tannaka_equality_check(
    r: &Representation,
    pairs: &[(Comodule, Comodule)],
) -> Result<TannakaReport> {
    let image = hopf_image(r)?;
    let mut rows = Vec::with_capacity(pairs.len());
    let mut all_equal = true;
    for (u, v) in pairs {
        let host = hom_comodule(u, v)?;
        let up = u.pushforward(&image.projection)?;
        let vp = v.pushforward(&image.projection)?;
        let quotient = hom_comodule(&up, &vp)?;
        let pi = hom_pi(r, u, v)?;
        let image_equals_pi = quotient.space == pi.space;
        let host_strictly_smaller = host.dim() < pi.dim();
        if host.dim() != pi.dim() || !image_equals_pi {
            all_equal = false;
        }
        rows.push(TannakaRow {
            dim_hom_host: host.dim(),
            dim_hom_image: quotient.dim(),
            dim_hom_pi: pi.dim(),
            image_equals_pi,
            host_strictly_smaller,
        });
    }
    Ok(TannakaReport { rows, all_equal })
}

/// The tensor-word comodule over the alphabet {a: U, b: dual of U}. A
/// self-dual U collapses b to a. The empty word gives the trivial comodule.
pub fn word_comodule(u: &Comodule, word: &str) -> Result<Comodule> {
    let mut out = Comodule::trivial(&u.host);
    let dual = if u.self_dual { None } else { Some(u.dual()) };
    for ch in word.chars() {
        let factor = match ch {
            'a' => u,
            'b' => dual.as_ref().unwrap_or(u),
            other => {
                return Err(Error::InvalidInput(format!(
                    "word letters must be 'a' or 'b', found {other:?}"
                )))
            }
        };
        out = out.tensor(factor)?;
    }
    Ok(out)
}

/// Verdict of the truncated fixed-point criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TruncationVerdict {
    /// The invariant spaces differ at this word: certainly not inner
    /// faithful.
    ViolatedAt(String),
    /// No difference among words up to this length: inconclusive evidence
    /// in favor (the full criterion quantifies over all words).
    NoViolationUpTo(usize),
}

/// Compares dim Hom(1, U^w) with dim Hom(1_pi, U^w_pi) over all words w of
/// length at most `max_len` (alphabet {a, b}, or {a} when U is self-dual).
pub fn truncated_fixedpoint_criterion(
    r: &Representation,
    u: &Comodule,
    max_len: usize,
) -> Result<TruncationVerdict> {
    if r.source != u.host {
        return Err(Error::HostMismatch(
            "representation acts on a different Hopf algebra".into(),
        ));
    }
    let trivial = Comodule::trivial(&u.host);
    let mut words: Vec<String> = vec![String::new()];
    for len in 1..=max_len {
        if u.self_dual {
            words.push("a".repeat(len));
        } else {
            let mut level: Vec<String> = vec![String::new()];
            for _ in 0..len {
                let mut next = Vec::new();
                for w in &level {
                    next.push(format!("{w}a"));
                    next.push(format!("{w}b"));
                }
                level = next;
            }
            words.extend(level);
        }
    }
    for w in &words {
        let uw = word_comodule(u, w)?;
        let host_dim = hom_comodule(&trivial, &uw)?.dim();
        let pi_dim = hom_pi(r, &trivial, &uw)?.dim();
        if host_dim != pi_dim {
            return Ok(TruncationVerdict::ViolatedAt(w.clone()));
        }
    }
    Ok(TruncationVerdict::NoViolationUpTo(max_len))
}

/// Checks the five sufficient conditions for inner faithfulness of a
/// representation of a Hopf algebra whose simple comodules have dimension
/// at most 2, given the group-likes and a transversal of the simple
/// two-dimensional comodules:
/// (1) the images of the group-likes are pairwise distinct;
/// (2) both diagonal coefficients of every 2-dim comodule map to zero;
/// (3) each pi(u12) is linearly independent from each group-like image;
/// (4) each pi(u12) is linearly independent from each pi(u21);
/// (5) the pi(u12) are pairwise linearly independent.
pub fn corep_level2_checker(
    r: &Representation,
    gl: &GroupLikeSet,
    twodim: &[Comodule],
) -> Result<ValidationReport> {
    let ctx = r.source.context().clone();
    for c in twodim {
        if c.dim != 2 {
            return Err(Error::InvalidInput(format!(
                "expected 2-dimensional comodules, found dimension {}",
                c.dim
            )));
        }
        if c.host != r.source {
            return Err(Error::HostMismatch(
                "comodule lives over a different Hopf algebra".into(),
            ));
        }
    }
    let mut report = ValidationReport { checks: vec![] };
    let images: Vec<Vec<Cyclotomic>> =
        gl.elements.iter().map(|g| r.apply(g)).collect();

    let mut distinct = None;
    'gl: for i in 0..images.len() {
        for j in 0..i {
            if images[i] == images[j] {
                distinct = Some(format!("group-likes {j} and {i} collide"));
                break 'gl;
            }
        }
    }
    report.push("grouplike_images_distinct", distinct);

    let pi12: Vec<Vec<Cyclotomic>> = twodim.iter().map(|c| r.apply(c.coeff(0, 1))).collect();
    let pi21: Vec<Vec<Cyclotomic>> = twodim.iter().map(|c| r.apply(c.coeff(1, 0))).collect();

    let mut diag = None;
    for (idx, c) in twodim.iter().enumerate() {
        let d00 = r.apply(c.coeff(0, 0));
        let d11 = r.apply(c.coeff(1, 1));
        if d00.iter().any(|x| !x.is_zero()) || d11.iter().any(|x| !x.is_zero()) {
            diag = Some(format!("comodule {idx}"));
            break;
        }
    }
    report.push("diagonal_coefficients_vanish", diag);

    let independent = |a: &[Cyclotomic], b: &[Cyclotomic]| {
        Matrix::from_rows(&ctx, vec![a.to_vec(), b.to_vec()]).rank() == 2
    };

    let mut vs_grouplike = None;
    'c3: for (li, u12) in pi12.iter().enumerate() {
        for (gi, g) in images.iter().enumerate() {
            if !independent(u12, g) {
                vs_grouplike = Some(format!("comodule {li} against group-like {gi}"));
                break 'c3;
            }
        }
    }
    report.push("offdiagonal_vs_grouplikes_independent", vs_grouplike);

    let mut vs_opposite = None;
    'c4: for (li, u12) in pi12.iter().enumerate() {
        for (mi, u21) in pi21.iter().enumerate() {
            if !independent(u12, u21) {
                vs_opposite = Some(format!("comodules {li} and {mi}"));
                break 'c4;
            }
        }
    }
    report.push("offdiagonal_vs_transposed_independent", vs_opposite);

    let mut pairwise = None;
    'c5: for li in 0..pi12.len() {
        for mi in 0..li {
            if !independent(&pi12[li], &pi12[mi]) {
                pairwise = Some(format!("comodules {mi} and {li}"));
                break 'c5;
            }
        }
    }
    report.push("offdiagonal_pairwise_independent", pairwise);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{ake, cyclic_group, group_algebra, pi_q};
    use crate::field::ContextOps;
    use crate::hopfimage::{hopf_image, Representation};
    use crate::testutil::ctx;

    fn z4_with_basis() -> (
        std::sync::Arc<crate::field::CyclotomicContext>,
        HopfAlgebraData,
        Vec<Vec<Cyclotomic>>,
    ) {
        let c = ctx(4);
        let (h, _) = group_algebra(&c, &cyclic_group(4).unwrap()).unwrap();
        let basis = (0..4)
            .map(|i| {
                let mut v = vec![c.zero(); 4];
                v[i] = c.one();
                v
            })
            .collect();
        (c, h, basis)
    }

    #[test]
    fn stock_comodules_validate() {
        let (_, h, basis) = z4_with_basis();
        assert!(Comodule::trivial(&h).validate().all_passed());
        assert!(Comodule::regular(&h).validate().all_passed());
        for b in &basis {
            assert!(Comodule::from_grouplike(&h, b).validate().all_passed());
        }
        // A coefficient that is not group-like breaks coassociativity.
        let (c, _, _) = z4_with_basis();
        let mut sum = basis[0].clone();
        sum[1] = c.one();
        let broken = Comodule::from_grouplike(&h, &sum);
        assert!(!broken.validate().all_passed());
    }

    #[test]
    fn hom_spaces_between_grouplike_comodules() {
        let (_, h, basis) = z4_with_basis();
        let cx = Comodule::from_grouplike(&h, &basis[1]);
        let cx3 = Comodule::from_grouplike(&h, &basis[3]);
        assert_eq!(hom_comodule(&cx, &cx).unwrap().dim(), 1);
        assert_eq!(hom_comodule(&cx, &cx3).unwrap().dim(), 0);
        assert_eq!(hom_comodule(&Comodule::trivial(&h), &cx).unwrap().dim(), 0);
        // The dual of C_x is C_(x inverse).
        assert_eq!(cx.dual().coeff(0, 0), &basis[3][..]);
        // Invariants of the regular comodule form a line.
        let reg = Comodule::regular(&h);
        assert_eq!(hom_comodule(&Comodule::trivial(&h), &reg).unwrap().dim(), 1);
        // Tensor of group-like comodules multiplies the group elements.
        let prod = cx.tensor(&cx).unwrap();
        assert_eq!(prod.coeff(0, 0), &basis[2][..]);
    }

    #[test]
    fn hom_under_representation_detects_collapsed_weights() {
        let (c, h, basis) = z4_with_basis();
        let cx = Comodule::from_grouplike(&h, &basis[1]);
        let cx3 = Comodule::from_grouplike(&h, &basis[3]);
        let target = crate::builders::diagonal_algebra(&c, 1).unwrap();
        // pi(x) = -1 identifies x with x^3.
        let m = Matrix::from_rows(
            &c,
            vec![vec![c.one(), c.from_int(-1), c.one(), c.from_int(-1)]],
        );
        let r = Representation::new(h.clone(), target.clone(), m).unwrap();
        assert_eq!(hom_pi(&r, &cx, &cx3).unwrap().dim(), 1);
        // pi(x) = i keeps them apart.
        let i = c.imaginary_unit().unwrap();
        let m = Matrix::from_rows(
            &c,
            vec![vec![c.one(), i.clone(), c.from_int(-1), -&i]],
        );
        let r = Representation::new(h, target, m).unwrap();
        assert_eq!(hom_pi(&r, &cx, &cx3).unwrap().dim(), 0);
    }

    #[test]
    fn tannaka_rows_compare_three_hom_spaces() {
        let (c, h, basis) = z4_with_basis();
        let cx = Comodule::from_grouplike(&h, &basis[1]);
        let cx3 = Comodule::from_grouplike(&h, &basis[3]);
        let pairs = vec![(cx, cx3)];

        let faithful = crate::builders::cyclic_rep(&c, 4, &c.imaginary_unit().unwrap()).unwrap();
        let report = tannaka_equality_check(&faithful, &pairs).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.rows[0].dim_hom_host, 0);
        assert_eq!(report.rows[0].dim_hom_pi, 0);
        assert!(report.rows[0].image_equals_pi);
        assert!(!report.rows[0].host_strictly_smaller);

        let halved = crate::builders::cyclic_rep(&c, 4, &c.from_int(-1)).unwrap();
        let report = tannaka_equality_check(&halved, &pairs).unwrap();
        assert!(!report.all_equal);
        let row = &report.rows[0];
        assert_eq!(row.dim_hom_host, 0);
        assert_eq!(row.dim_hom_image, 1);
        assert_eq!(row.dim_hom_pi, 1);
        // The image always computes the same hom spaces as pi itself; the
        // defect is between the host and the image.
        assert!(row.image_equals_pi);
        assert!(row.host_strictly_smaller);
    }

    #[test]
    fn word_comodules_and_the_truncated_criterion() {
        let (c, h, basis) = z4_with_basis();
        let cx = Comodule::from_grouplike(&h, &basis[1]);
        assert!(!cx.self_dual);
        let w = word_comodule(&cx, "ab").unwrap();
        assert_eq!(w.dim, 1);
        assert_eq!(w.coeff(0, 0), &basis[0][..]);
        assert!(word_comodule(&cx, "ac").is_err());

        let faithful = crate::builders::cyclic_rep(&c, 4, &c.imaginary_unit().unwrap()).unwrap();
        assert_eq!(
            truncated_fixedpoint_criterion(&faithful, &cx, 4).unwrap(),
            TruncationVerdict::NoViolationUpTo(4)
        );

        let halved = crate::builders::cyclic_rep(&c, 4, &c.from_int(-1)).unwrap();
        assert_eq!(
            truncated_fixedpoint_criterion(&halved, &cx, 4).unwrap(),
            TruncationVerdict::ViolatedAt("aa".into())
        );
    }

    #[test]
    fn level2_conditions_on_the_half_liberated_family() {
        let c = ctx(3);
        let a = ake(&c, 3, 1).unwrap();
        let good = pi_q(&a, &c.zeta()).unwrap();
        let report = corep_level2_checker(&good, &a.grouplikes, &a.comodules).unwrap();
        assert!(report.all_passed(), "{report}");

        // q = 1 sends both u12 and a group-like to the flip matrix.
        let degenerate = pi_q(&a, &c.one()).unwrap();
        let report = corep_level2_checker(&degenerate, &a.grouplikes, &a.comodules).unwrap();
        assert!(!report.all_passed());
        assert_eq!(
            report.first_failure().unwrap().name,
            "offdiagonal_vs_grouplikes_independent"
        );
    }

    #[test]
    fn pushforward_transports_coefficients() {
        let (c, h, basis) = z4_with_basis();
        let halved = crate::builders::cyclic_rep(&c, 4, &c.from_int(-1)).unwrap();
        let image = hopf_image(&halved).unwrap();
        let cx = Comodule::from_grouplike(&h, &basis[1]);
        let pushed = cx.pushforward(&image.projection).unwrap();
        assert!(pushed.validate().all_passed());
        assert_eq!(pushed.coeff(0, 0), image.projection.apply(&basis[1]));
    }
}
