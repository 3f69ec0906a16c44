//! Constructors for the stock objects the rest of the library is exercised
//! on: finite group tables, their group and function algebras, Taft algebras,
//! the half-liberated family A(k, e), and the canonical representations of
//! all of these.
//!
//! Everything here produces plain structure-constant data, so each builder is
//! also a test fixture: the output can be revalidated from scratch with
//! [`HopfAlgebraData::validate`].

use std::sync::Arc;

use crate::field::{ContextOps, Cyclotomic, CyclotomicContext};
use crate::hopfcore::{AlgebraData, HopfAlgebraData, SparseVec};
use crate::hopfimage::Representation;
use crate::linalg::Matrix;
use crate::pointed::{find_grouplikes, verify_grouplikes, GroupLikeSet};
use crate::tannaka::Comodule;
use crate::{Error, Result};

/// Multiplication table of a finite group, validated on construction.
///
/// Elements are indices `0..order`; `table[i * order + j]` is the index of
/// the product of element `i` by element `j`. An optional character table
/// carries the irreducible characters when they are known exactly.
#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    characters: Option<CharacterTable>,
}

/// Irreducible characters of a group, stored as exact integer values per
/// element. Only groups whose character values are rational integers get a
/// hard-coded table; abelian groups are handled separately because their
/// characters live in a cyclotomic field.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    /// Display names of the irreducible characters, in table order.
    pub names: Vec<String>,
    /// `rows[r][i]` is the value of character `r` on group element `i`.
    pub rows: Vec<Vec<i64>>,
}

impl GroupTable {
    /// Builds a table from raw data and checks the group axioms by brute
    /// force: closure and index bounds, a two-sided identity, associativity,
    /// and two-sided inverses.
    pub fn new(name: &str, labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidTable("a group has at least one element".into()));
        }
        if table.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "table for {n} elements must have {} entries, got {}",
                n * n,
                table.len()
            )));
        }
        for &v in &table {
            if v >= n {
                return Err(Error::InvalidTable(format!(
                    "product index {v} out of range for order {n}"
                )));
            }
        }
        let mut identity = None;
        for e in 0..n {
            if (0..n).all(|i| table[e * n + i] == i && table[i * n + e] == i) {
                identity = Some(e);
                break;
            }
        }
        let identity = identity
            .ok_or_else(|| Error::InvalidTable("no two-sided identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a * n + b] == identity && table[b * n + a] == identity)
            {
                Some(b) => inverse[a] = b,
                None => {
                    return Err(Error::InvalidTable(format!("element {a} has no inverse")))
                }
            }
        }
        Ok(GroupTable {
            name: name.to_string(),
            labels,
            table,
            identity,
            inverse,
            characters: None,
        })
    }

    /// Name the group was constructed under, e.g. `Z4` or `S3`.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Display labels of the elements, in index order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the product of elements `i` and `j`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    /// Index of the identity element.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Index of the inverse of element `i`.
    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Whether all elements commute.
    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// The exact character table, when one was attached by the constructor.
    pub fn characters(&self) -> Option<&CharacterTable> {
        self.characters.as_ref()
    }

    /// Indices of the subgroup generated by `gens`, sorted ascending.
    /// Computed by closing `{identity} ∪ gens` under the product.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Vec<usize>> {
        let n = self.order();
        for &g in gens {
            if g >= n {
                return Err(Error::IndexOutOfRange { index: g, dim: n });
            }
        }
        let mut member = vec![false; n];
        member[self.identity] = true;
        let mut frontier: Vec<usize> = vec![self.identity];
        for &g in gens {
            if !member[g] {
                member[g] = true;
                frontier.push(g);
            }
        }
        while let Some(a) = frontier.pop() {
            for b in 0..n {
                if !member[b] {
                    continue;
                }
                for p in [self.product(a, b), self.product(b, a)] {
                    if !member[p] {
                        member[p] = true;
                        frontier.push(p);
                    }
                }
            }
        }
        Ok((0..n).filter(|&i| member[i]).collect())
    }

    /// Direct product table; element `(i, k)` sits at index `i * other.order() + k`.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let na = self.order();
        let nb = other.order();
        let n = na * nb;
        let mut labels = Vec::with_capacity(n);
        for i in 0..na {
            for k in 0..nb {
                labels.push(format!("({},{})", self.labels[i], other.labels[k]));
            }
        }
        let mut table = vec![0usize; n * n];
        for i in 0..na {
            for k in 0..nb {
                for j in 0..na {
                    for l in 0..nb {
                        let x = i * nb + k;
                        let y = j * nb + l;
                        table[x * n + y] = self.product(i, j) * nb + other.product(k, l);
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for i in 0..na {
            for k in 0..nb {
                inverse[i * nb + k] = self.inverse(i) * nb + other.inverse(k);
            }
        }
        GroupTable {
            name: format!("{}x{}", self.name, other.name),
            labels,
            table,
            identity: self.identity * nb + other.identity,
            inverse,
            characters: None,
        }
    }
}

/// Cyclic group of order `n`, generator `x`, elements `x^i` at index `i`.
pub fn cyclic_group(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidTable("cyclic group order must be positive".into()));
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = (i + j) % n;
        }
    }
    GroupTable::new(&format!("Z{n}"), labels, table)
}

/// Dihedral group of order `2n`: rotations `r^i` at indices `0..n`,
/// reflections `r^i f` at indices `n..2n`, with `f r = r^(n-1) f`.
pub fn dihedral_group(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidTable("dihedral parameter must be positive".into()));
    }
    let rot = |i: usize| match i {
        0 => "1".to_string(),
        1 => "r".to_string(),
        _ => format!("r^{i}"),
    };
    let refl = |i: usize| match i {
        0 => "f".to_string(),
        1 => "r f".to_string(),
        _ => format!("r^{i} f"),
    };
    let mut labels = Vec::with_capacity(2 * n);
    labels.extend((0..n).map(rot));
    labels.extend((0..n).map(refl));
    let m = 2 * n;
    let mut table = vec![0usize; m * m];
    for i in 0..n {
        for j in 0..n {
            table[i * m + j] = (i + j) % n;
            table[i * m + (n + j)] = n + (i + j) % n;
            table[(n + i) * m + j] = n + (i + n - j % n) % n;
            table[(n + i) * m + (n + j)] = (i + n - j % n) % n;
        }
    }
    GroupTable::new(&format!("D{n}"), labels, table)
}

/// All permutations of `0..n` in lexicographic one-line order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        depth: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current[depth] = v;
                rec(n, depth + 1, current, used, out);
                used[v] = false;
            }
        }
    }
    rec(n, 0, &mut current, &mut used, &mut out);
    out
}

/// Cycle decomposition on points `1..=n`, fixed points omitted.
fn cycle_label(perm: &[usize]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            cycle.push((p + 1).to_string());
            p = perm[p];
        }
        parts.push(format!("({})", cycle.join(" ")));
    }
    if parts.is_empty() {
        "e".to_string()
    } else {
        parts.join("")
    }
}

/// Cycle lengths sorted descending, fixed points included.
fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            len += 1;
            p = perm[p];
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// Symmetric group on `n` letters for `n <= 4`, with its exact character
/// table attached. Elements are the permutations of `0..n` in lexicographic
/// order (so the identity is index 0), labelled in cycle notation, and the
/// product `p * q` acts by `q` first, then `p`.
pub fn symmetric_group(n: usize) -> Result<GroupTable> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidTable(format!(
            "symmetric group builder covers n in 1..=4, got {n}"
        )));
    }
    let perms = permutations(n);
    let m = perms.len();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let labels: Vec<String> = perms.iter().map(|p| cycle_label(p)).collect();
    let mut table = vec![0usize; m * m];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
            table[i * m + j] = index_of(&composed);
        }
    }
    let mut t = GroupTable::new(&format!("S{n}"), labels, table)?;

    // Character values by cycle type, rows in the order the names list them.
    let (names, types, values): (Vec<&str>, Vec<Vec<usize>>, Vec<Vec<i64>>) = match n {
        1 => (vec!["trivial"], vec![vec![1]], vec![vec![1]]),
        2 => (
            vec!["trivial", "sign"],
            vec![vec![1, 1], vec![2]],
            vec![vec![1, 1], vec![1, -1]],
        ),
        3 => (
            vec!["trivial", "sign", "standard"],
            vec![vec![1, 1, 1], vec![2, 1], vec![3]],
            vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]],
        ),
        4 => (
            vec!["trivial", "sign", "plane", "standard", "standard*sign"],
            vec![
                vec![1, 1, 1, 1],
                vec![2, 1, 1],
                vec![2, 2],
                vec![3, 1],
                vec![4],
            ],
            vec![
                vec![1, 1, 1, 1, 1],
                vec![1, -1, 1, 1, -1],
                vec![2, 0, 2, -1, 0],
                vec![3, 1, -1, 0, -1],
                vec![3, -1, -1, 0, 1],
            ],
        ),
        _ => unreachable!(),
    };
    let type_index = |p: &[usize]| {
        let ct = cycle_type(p);
        types.iter().position(|t| *t == ct).expect("complete type list")
    };
    let rows = (0..names.len())
        .map(|r| perms.iter().map(|p| values[r][type_index(p)]).collect())
        .collect();
    t.characters = Some(CharacterTable {
        names: names.into_iter().map(str::to_string).collect(),
        rows,
    });
    Ok(t)
}

/// Group algebra k[G]: basis vectors are the group elements, the product is
/// the linearized group law, every basis vector is group-like, and the
/// antipode inverts group elements. The returned group-like set is complete.
pub fn group_algebra(
    ctx: &Arc<CyclotomicContext>,
    t: &GroupTable,
) -> Result<(HopfAlgebraData, GroupLikeSet)> {
    let n = t.order();
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mult.push(SparseVec::singleton(t.product(i, j), ctx.one()));
        }
    }
    let mut unit = vec![ctx.zero(); n];
    unit[t.identity()] = ctx.one();
    let algebra = AlgebraData::new(ctx.clone(), t.labels().to_vec(), mult, unit)?;
    let comult = (0..n)
        .map(|i| SparseVec::singleton(i * n + i, ctx.one()))
        .collect();
    let counit = vec![ctx.one(); n];
    let mut antipode = Matrix::zero(ctx, n, n);
    for i in 0..n {
        *antipode.at_mut(t.inverse(i), i) = ctx.one();
    }
    let h = HopfAlgebraData::new(algebra, comult, counit, antipode)?;
    let candidates: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|i| {
            let mut v = vec![ctx.zero(); n];
            v[i] = ctx.one();
            v
        })
        .collect();
    let grouplikes = verify_grouplikes(&h, &candidates)?;
    Ok((h, grouplikes))
}

/// Function algebra k^G: pointwise products of delta functions, comultiplication
/// dual to the group law. Group-likes of k^G are the characters of G; the set
/// is complete exactly when the builder can enumerate them (abelian G whose
/// exponent divides the conductor, plus any characters shipped with the table).
pub fn function_algebra(
    ctx: &Arc<CyclotomicContext>,
    t: &GroupTable,
) -> Result<(HopfAlgebraData, GroupLikeSet)> {
    let (group_hopf, _) = group_algebra(ctx, t)?;
    let mut h = group_hopf.dual();
    h.set_labels(t.labels().iter().map(|l| format!("d[{l}]")).collect());
    let declared = linear_characters(ctx, t);
    let grouplikes = find_grouplikes(&h, &declared)?;
    Ok((h, grouplikes))
}

/// Degree-one rows of a shipped character table, as coordinate vectors of k^G.
fn linear_characters(ctx: &Arc<CyclotomicContext>, t: &GroupTable) -> Vec<Vec<Cyclotomic>> {
    let mut out = Vec::new();
    if let Some(chars) = t.characters() {
        for row in &chars.rows {
            if row[t.identity()] == 1 {
                out.push(row.iter().map(|&v| ctx.from_int(v)).collect());
            }
        }
    }
    out
}

/// Exact character vectors of `t` as elements of k^G, one per irreducible.
///
/// Uses the shipped integer table when present; for abelian groups without
/// one, enumerates the characters as the group-likes of k^G, which succeeds
/// precisely when the exponent of the group divides the conductor.
pub fn irreducible_characters(
    ctx: &Arc<CyclotomicContext>,
    t: &GroupTable,
) -> Result<Vec<Vec<Cyclotomic>>> {
    if let Some(chars) = t.characters() {
        return Ok(chars
            .rows
            .iter()
            .map(|row| row.iter().map(|&v| ctx.from_int(v)).collect())
            .collect());
    }
    if t.is_abelian() {
        let (h, _) = group_algebra(ctx, t)?;
        let dual = h.dual();
        let gl = find_grouplikes(&dual, &[])?;
        if gl.len() == t.order() && gl.complete {
            return Ok(gl.elements.clone());
        }
        return Err(Error::MissingCharacterTable(format!(
            "characters of {} need a conductor divisible by the group exponent",
            t.name()
        )));
    }
    Err(Error::MissingCharacterTable(format!(
        "no character table shipped for {}",
        t.name()
    )))
}

/// Commutative algebra k^m of functions on m points, delta-function basis.
pub fn diagonal_algebra(ctx: &Arc<CyclotomicContext>, m: usize) -> Result<AlgebraData> {
    if m == 0 {
        return Err(Error::DimensionMismatch(
            "diagonal algebra needs at least one point".into(),
        ));
    }
    let mut mult = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            mult.push(if i == j {
                SparseVec::singleton(i, ctx.one())
            } else {
                SparseVec::empty()
            });
        }
    }
    let unit = vec![ctx.one(); m];
    let labels = (0..m).map(|i| format!("d{i}")).collect();
    AlgebraData::new(ctx.clone(), labels, mult, unit)
}

/// Full matrix algebra M_m(k) on the elementary matrices E_ab, where E_ab
/// sits at index `a * m + b`.
pub fn matrix_algebra(ctx: &Arc<CyclotomicContext>, m: usize) -> Result<AlgebraData> {
    if m == 0 {
        return Err(Error::DimensionMismatch(
            "matrix algebra needs positive size".into(),
        ));
    }
    let d = m * m;
    let mut mult = Vec::with_capacity(d * d);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for e in 0..m {
                    mult.push(if b == c {
                        SparseVec::singleton(a * m + e, ctx.one())
                    } else {
                        SparseVec::empty()
                    });
                }
            }
        }
    }
    let mut unit = vec![ctx.zero(); d];
    for a in 0..m {
        unit[a * m + a] = ctx.one();
    }
    let mut labels = Vec::with_capacity(d);
    for a in 0..m {
        for b in 0..m {
            labels.push(format!("E{}{}", a + 1, b + 1));
        }
    }
    AlgebraData::new(ctx.clone(), labels, mult, unit)
}

/// One-dimensional representation of k[Z_n] sending the generator to the
/// scalar `w`, which must satisfy `w^n = 1`.
pub fn cyclic_rep(
    ctx: &Arc<CyclotomicContext>,
    n: usize,
    w: &Cyclotomic,
) -> Result<Representation> {
    if n == 0 {
        return Err(Error::InvalidTable("cyclic group order must be positive".into()));
    }
    if !w.pow(n as u64).is_one() {
        return Err(Error::NotAnNthRoot(format!("{w}"), n as u64));
    }
    let (h, _) = group_algebra(ctx, &cyclic_group(n)?)?;
    let target = diagonal_algebra(ctx, 1)?;
    let mut row = Vec::with_capacity(n);
    let mut acc = ctx.one();
    for _ in 0..n {
        row.push(acc.clone());
        acc = &acc * w;
    }
    let matrix = Matrix::from_rows(ctx, vec![row]);
    Representation::new(h, target, matrix)
}

/// Representation of k^G on k^m by evaluating functions at the listed group
/// elements: the i-th diagonal entry of the image of f is f(points[i]).
pub fn evaluation_rep(
    ctx: &Arc<CyclotomicContext>,
    t: &GroupTable,
    points: &[usize],
) -> Result<Representation> {
    if points.is_empty() {
        return Err(Error::InvalidInput(
            "evaluation needs at least one point".into(),
        ));
    }
    let n = t.order();
    for &p in points {
        if p >= n {
            return Err(Error::IndexOutOfRange { index: p, dim: n });
        }
    }
    let (h, _) = function_algebra(ctx, t)?;
    let target = diagonal_algebra(ctx, points.len())?;
    let mut matrix = Matrix::zero(ctx, points.len(), n);
    for (i, &p) in points.iter().enumerate() {
        *matrix.at_mut(i, p) = ctx.one();
    }
    Representation::new(h, target, matrix)
}

/// Whether a representation of k^G separates the irreducible characters of G:
/// the images of distinct irreducible characters must be distinct. For a
/// representation built from evaluation points this holds exactly when the
/// points generate a subgroup on which the characters stay distinguishable.
pub fn character_span_injectivity(
    ctx: &Arc<CyclotomicContext>,
    t: &GroupTable,
    r: &Representation,
) -> Result<bool> {
    if r.source.dim() != t.order() {
        return Err(Error::ShapeMismatch(format!(
            "representation source has dimension {}, group has order {}",
            r.source.dim(),
            t.order()
        )));
    }
    let chars = irreducible_characters(ctx, t)?;
    let images: Vec<Vec<Cyclotomic>> = chars.iter().map(|c| r.apply(c)).collect();
    for i in 0..images.len() {
        for j in (i + 1)..images.len() {
            if images[i] == images[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Taft algebra of dimension n^2: generated by a group-like g and a skew
/// primitive x with g^n = 1, x^n = 0, xg = q gx, where q must be a primitive
/// n-th root of unity. Basis g^i x^j at index `i * n + j`.
pub fn taft(
    ctx: &Arc<CyclotomicContext>,
    n: usize,
    q: &Cyclotomic,
) -> Result<(HopfAlgebraData, GroupLikeSet)> {
    if n < 2 {
        return Err(Error::WrongOrder(format!(
            "Taft algebra needs n >= 2, got {n}"
        )));
    }
    if crate::field::root_of_unity_order(q) != Some(n as u64) {
        return Err(Error::WrongOrder(format!(
            "parameter {q} is not a primitive root of unity of order {n}"
        )));
    }
    let d = n * n;
    let qpow = |e: usize| q.pow((e % n) as u64);
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // (g^i x^j)(g^k x^l) = q^(jk) g^(i+k) x^(j+l), zero past x^n.
                    mult.push(if j + l >= n {
                        SparseVec::empty()
                    } else {
                        SparseVec::singleton(((i + k) % n) * n + (j + l), qpow(j * k))
                    });
                }
            }
        }
    }
    let mut unit = vec![ctx.zero(); d];
    unit[0] = ctx.one();
    let mut labels = Vec::with_capacity(d);
    for i in 0..n {
        for j in 0..n {
            let gs = match i {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            };
            let xs = match j {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{j}"),
            };
            labels.push(match (gs.is_empty(), xs.is_empty()) {
                (true, true) => "1".to_string(),
                (false, true) => gs,
                (true, false) => xs,
                (false, false) => format!("{gs} {xs}"),
            });
        }
    }
    let algebra = AlgebraData::new(ctx.clone(), labels, mult, unit)?;

    // Comultiplication from the generator images: g and x determine the rest
    // through multiplicativity in H (x) H.
    let idx = |i: usize, j: usize| i * n + j;
    let delta_g = SparseVec::singleton(idx(1, 0) * d + idx(1, 0), ctx.one());
    let delta_x = SparseVec::from_dense(&{
        let mut v = vec![ctx.zero(); d * d];
        v[idx(0, 0) * d + idx(0, 1)] = ctx.one();
        v[idx(0, 1) * d + idx(1, 0)] = ctx.one();
        v
    });
    let delta_unit = SparseVec::singleton(0, ctx.one());
    let mut comult = Vec::with_capacity(d);
    for i in 0..n {
        for j in 0..n {
            let mut acc = delta_unit.clone();
            for _ in 0..i {
                acc = algebra.tensor_square_product(&acc, &delta_g);
            }
            for _ in 0..j {
                acc = algebra.tensor_square_product(&acc, &delta_x);
            }
            comult.push(acc);
        }
    }
    let mut counit = vec![ctx.zero(); d];
    for i in 0..n {
        counit[idx(i, 0)] = ctx.one();
    }

    // S(g) = g^(n-1), S(x) = -x g^(n-1) = -q^(n-1) g^(n-1) x; extend as an
    // algebra antihomomorphism, so S(g^i x^j) = S(x)^j S(g)^i.
    let basis = |i: usize, j: usize| {
        let mut v = vec![ctx.zero(); d];
        v[idx(i, j)] = ctx.one();
        v
    };
    let s_g = basis(n - 1, 0);
    let mut s_x = basis(n - 1, 1);
    let coeff = -&qpow(n - 1);
    s_x[idx(n - 1, 1)] = coeff;
    let mut antipode = Matrix::zero(ctx, d, d);
    for i in 0..n {
        for j in 0..n {
            let mut acc = basis(0, 0);
            for _ in 0..j {
                acc = algebra.product(&acc, &s_x);
            }
            for _ in 0..i {
                acc = algebra.product(&acc, &s_g);
            }
            for (row, value) in acc.into_iter().enumerate() {
                *antipode.at_mut(row, idx(i, j)) = value;
            }
        }
    }
    let h = HopfAlgebraData::new(algebra, comult, counit, antipode)?;
    let candidates: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|i| {
            let mut v = vec![ctx.zero(); d];
            v[idx(i, 0)] = ctx.one();
            v
        })
        .collect();
    let grouplikes = verify_grouplikes(&h, &candidates)?;
    Ok((h, grouplikes))
}

// ---------------------------------------------------------------------------
// The half-liberated family A(k, e).
// ---------------------------------------------------------------------------

/// Letters of the length-graded word basis of A(k, e). Words alternate
/// letters, so a word is determined by its starting letter and its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Letter {
    S,
    U,
}

impl Letter {
    fn flip(self) -> Letter {
        match self {
            Letter::S => Letter::U,
            Letter::U => Letter::S,
        }
    }
}

/// An alternating word: empty when `len == 0` (the start letter is then
/// irrelevant and normalized to S).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Word {
    start: Letter,
    len: usize,
}

impl Word {
    fn empty() -> Word {
        Word { start: Letter::S, len: 0 }
    }

    fn last(self) -> Letter {
        if self.len % 2 == 1 {
            self.start
        } else {
            self.start.flip()
        }
    }

    /// Letter at 1-based position `p`.
    fn letter_at(self, p: usize) -> Letter {
        if p % 2 == 1 {
            self.start
        } else {
            self.start.flip()
        }
    }

    /// Concatenation in the free product with full cancellation: adjacent
    /// equal letters square to 1 and the collapse cascades inward.
    fn concat(self, other: Word) -> Word {
        if self.len == 0 {
            return other;
        }
        if other.len == 0 {
            return self;
        }
        if self.last() != other.start {
            return Word { start: self.start, len: self.len + other.len };
        }
        if self.len > other.len {
            return Word { start: self.start, len: self.len - other.len };
        }
        if other.len > self.len {
            // The surviving suffix of `other` starts at position self.len + 1.
            return Word {
                start: other.letter_at(self.len + 1),
                len: other.len - self.len,
            };
        }
        Word::empty()
    }
}

/// The two idempotent components of A(k, e): the diagonal one carries the
/// words in v11, v22, the antidiagonal one the words in v12, v21.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Component {
    Diagonal,
    Antidiagonal,
}

/// Word model of A(k, e). Each component has basis: the empty word, the words
/// of length 1..k-1 with either starting letter, and the single length-k word
/// (normalized to start with S). Words longer than k, or length-k words
/// starting with U, rewrite into this basis with coefficient 1 on the
/// diagonal component and coefficient e on the antidiagonal one.
struct WordModel {
    k: usize,
    e: i64,
}

impl WordModel {
    fn dim(&self) -> usize {
        4 * self.k
    }

    fn offset(&self, comp: Component) -> usize {
        match comp {
            Component::Diagonal => 0,
            Component::Antidiagonal => 2 * self.k,
        }
    }

    /// Index of a basis word (must already be reduced).
    fn index(&self, comp: Component, w: Word) -> usize {
        let local = if w.len == 0 {
            0
        } else if w.len == self.k {
            debug_assert_eq!(w.start, Letter::S);
            2 * self.k - 1
        } else {
            match w.start {
                Letter::S => 2 * w.len - 1,
                Letter::U => 2 * w.len,
            }
        };
        self.offset(comp) + local
    }

    /// Basis word and component at a given index.
    fn word_at(&self, index: usize) -> (Component, Word) {
        let (comp, local) = if index < 2 * self.k {
            (Component::Diagonal, index)
        } else {
            (Component::Antidiagonal, index - 2 * self.k)
        };
        let w = if local == 0 {
            Word::empty()
        } else if local == 2 * self.k - 1 {
            Word { start: Letter::S, len: self.k }
        } else if local % 2 == 1 {
            Word { start: Letter::S, len: local.div_ceil(2) }
        } else {
            Word { start: Letter::U, len: local / 2 }
        };
        (comp, w)
    }

    /// Rewrites an arbitrary concatenation result into the basis, returning
    /// the coefficient picked up (1 or e, as an integer).
    fn reduce(&self, comp: Component, w: Word) -> (i64, Word) {
        let sign = match comp {
            Component::Diagonal => 1,
            Component::Antidiagonal => self.e,
        };
        if w.len > self.k {
            // Replace the length-k prefix by the same word with the other
            // starting letter; the swap cancels against the remainder.
            let reduced = Word { start: w.start.flip(), len: 2 * self.k - w.len };
            (sign, reduced)
        } else if w.len == self.k && w.start == Letter::U {
            (sign, Word { start: Letter::S, len: self.k })
        } else {
            (1, w)
        }
    }
}

/// Output of the A(k, e) builder: the Hopf algebra with its verified
/// group-like set and the distinguished two-dimensional comodules C(1)..C(k-1).
pub struct AkeAlgebra {
    /// The 4k-dimensional Hopf algebra itself.
    pub hopf: HopfAlgebraData,
    /// Word length bound of the presentation.
    pub k: usize,
    /// Sign parameter, +1 or -1.
    pub e: i64,
    /// The four group-like elements, verified and complete.
    pub grouplikes: GroupLikeSet,
    /// The comodules C(j) for j in 1..k, each of dimension 2.
    pub comodules: Vec<Comodule>,
}

/// Builds A(k, e), the 4k-dimensional Hopf algebra presented by a 2x2 matrix
/// of generators v = (v_ij) with v a multiplicative matrix, the entries of
/// v^t v and v v^t diagonal, and the length-k alternating words in the two
/// diagonal (respectively antidiagonal) entries identified up to the sign e.
///
/// Requires k >= 1 and e in {+1, -1}; when e = -1 the group-like elements
/// involve a square root of -1, so the conductor must be divisible by 4.
pub fn ake(ctx: &Arc<CyclotomicContext>, k: usize, e: i64) -> Result<AkeAlgebra> {
    if k == 0 {
        return Err(Error::InvalidInput("the word length bound k must be positive".into()));
    }
    if e != 1 && e != -1 {
        return Err(Error::InvalidInput(format!("the sign parameter must be +1 or -1, got {e}")));
    }
    if e == -1 && !ctx.conductor().is_multiple_of(4) {
        return Err(Error::BadConductor(
            ctx.conductor(),
            "the group-likes of A(k, -1) need i, so the conductor must be divisible by 4"
                .into(),
        ));
    }
    let model = WordModel { k, e };
    let d = model.dim();

    let scaled = |index: usize, sign: i64| {
        if sign == 1 {
            SparseVec::singleton(index, ctx.one())
        } else {
            SparseVec::singleton(index, ctx.from_int(sign))
        }
    };

    // Multiplication: words multiply within a component by concatenation
    // plus reduction; across components the product is zero.
    let mut mult = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let (ca, wa) = model.word_at(i);
            let (cb, wb) = model.word_at(j);
            if ca != cb {
                mult.push(SparseVec::empty());
            } else {
                let (sign, w) = model.reduce(ca, wa.concat(wb));
                mult.push(scaled(model.index(ca, w), sign));
            }
        }
    }
    let mut unit = vec![ctx.zero(); d];
    unit[model.index(Component::Diagonal, Word::empty())] = ctx.one();
    unit[model.index(Component::Antidiagonal, Word::empty())] = ctx.one();
    let mut labels = Vec::with_capacity(d);
    for i in 0..d {
        let (comp, w) = model.word_at(i);
        let mut s = String::new();
        for p in 1..=w.len {
            s.push(match w.letter_at(p) {
                Letter::S => 's',
                Letter::U => 'u',
            });
        }
        if s.is_empty() {
            s.push('1');
        }
        s.push(match comp {
            Component::Diagonal => '+',
            Component::Antidiagonal => '-',
        });
        labels.push(s);
    }
    let algebra = AlgebraData::new(ctx.clone(), labels, mult, unit)?;

    // Images of the four generators as (possibly reduced) basis elements.
    let generator = |comp: Component, start: Letter| {
        let (sign, w) = model.reduce(comp, Word { start, len: 1 });
        scaled(model.index(comp, w), sign)
    };
    let v11 = generator(Component::Diagonal, Letter::S);
    let v22 = generator(Component::Diagonal, Letter::U);
    let v12 = generator(Component::Antidiagonal, Letter::S);
    let v21 = generator(Component::Antidiagonal, Letter::U);

    // Comultiplication: v is multiplicative, so Delta(v_ij) = sum_l v_il (x) v_lj,
    // and every basis word is the product of its letters.
    let tensor_pair = |a: &SparseVec, b: &SparseVec| {
        let mut entries = std::collections::BTreeMap::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                entries.insert(i * d + j, x * y);
            }
        }
        SparseVec::from_map(entries)
    };
    let sum_pair = |a: SparseVec, b: SparseVec| {
        let mut entries = std::collections::BTreeMap::new();
        for (i, x) in a.entries().iter().chain(b.entries()) {
            crate::hopfcore::acc_add(&mut entries, *i, x);
        }
        SparseVec::from_map(entries)
    };
    let delta_v11 = sum_pair(tensor_pair(&v11, &v11), tensor_pair(&v12, &v21));
    let delta_v12 = sum_pair(tensor_pair(&v11, &v12), tensor_pair(&v12, &v22));
    let delta_v21 = sum_pair(tensor_pair(&v21, &v11), tensor_pair(&v22, &v21));
    let delta_v22 = sum_pair(tensor_pair(&v21, &v12), tensor_pair(&v22, &v22));
    // The empty words are the squares of the length-1 generators.
    let delta_of_word = |comp: Component, w: Word| -> SparseVec {
        let letter_image = |p: usize| match (comp, w.letter_at(p)) {
            (Component::Diagonal, Letter::S) => &delta_v11,
            (Component::Diagonal, Letter::U) => &delta_v22,
            (Component::Antidiagonal, Letter::S) => &delta_v12,
            (Component::Antidiagonal, Letter::U) => &delta_v21,
        };
        if w.len == 0 {
            let first = match comp {
                Component::Diagonal => &delta_v11,
                Component::Antidiagonal => &delta_v12,
            };
            return algebra.tensor_square_product(first, first);
        }
        let mut acc = letter_image(1).clone();
        for p in 2..=w.len {
            acc = algebra.tensor_square_product(&acc, letter_image(p));
        }
        acc
    };
    let mut comult = Vec::with_capacity(d);
    for i in 0..d {
        let (comp, w) = model.word_at(i);
        comult.push(delta_of_word(comp, w));
    }

    // Counit: 1 on the diagonal component, 0 on the antidiagonal one.
    let mut counit = vec![ctx.zero(); d];
    for entry in counit.iter_mut().take(2 * k) {
        *entry = ctx.one();
    }

    // Antipode: reverse the word; on the antidiagonal component also swap
    // the letters. Reduction restores the basis normal form.
    let mut antipode = Matrix::zero(ctx, d, d);
    for i in 0..d {
        let (comp, w) = model.word_at(i);
        let image = if w.len == 0 {
            Word::empty()
        } else {
            match comp {
                Component::Diagonal => Word { start: w.last(), len: w.len },
                Component::Antidiagonal => Word { start: w.last().flip(), len: w.len },
            }
        };
        let (sign, reduced) = model.reduce(comp, image);
        let value = if sign == 1 { ctx.one() } else { ctx.from_int(sign) };
        *antipode.at_mut(model.index(comp, reduced), i) = value;
    }

    let hopf = HopfAlgebraData::new(algebra, comult, counit, antipode)?;

    // Group-likes: 1, d = e+ - e-, and g, h = P +- c Q where P, Q are the
    // length-k words of the two components and c^2 = e.
    let diag_empty = model.index(Component::Diagonal, Word::empty());
    let anti_empty = model.index(Component::Antidiagonal, Word::empty());
    let p_index = model.index(Component::Diagonal, Word { start: Letter::S, len: k });
    let q_index = model.index(Component::Antidiagonal, Word { start: Letter::S, len: k });
    let c = if e == 1 { ctx.one() } else { ctx.imaginary_unit()? };
    let dense = |entries: &[(usize, Cyclotomic)]| {
        let mut v = vec![ctx.zero(); d];
        for (i, val) in entries {
            v[*i] = val.clone();
        }
        v
    };
    let candidates = vec![
        dense(&[(diag_empty, ctx.one()), (anti_empty, ctx.one())]),
        dense(&[(diag_empty, ctx.one()), (anti_empty, ctx.from_int(-1))]),
        dense(&[(p_index, ctx.one()), (q_index, c.clone())]),
        dense(&[(p_index, ctx.one()), (q_index, -&c)]),
    ];
    let grouplikes = verify_grouplikes(&hopf, &candidates)?;

    // Comodules C(j): coefficient matrix made of the four length-j words,
    // arranged like the generator matrix itself.
    let elem = |comp: Component, start: Letter, len: usize| {
        let (sign, w) = model.reduce(comp, Word { start, len });
        scaled(model.index(comp, w), sign).to_dense(ctx, d)
    };
    let mut comodules = Vec::new();
    for j in 1..k {
        let coeffs = vec![
            elem(Component::Diagonal, Letter::S, j),
            elem(Component::Antidiagonal, Letter::S, j),
            elem(Component::Antidiagonal, Letter::U, j),
            elem(Component::Diagonal, Letter::U, j),
        ];
        let mut c = Comodule::new(hopf.clone(), 2, coeffs)?;
        // C(j) is isomorphic to its dual: reversal fixes or letter-swaps the
        // underlying words, and letter swap is the symmetry of the family.
        c.self_dual = true;
        comodules.push(c);
    }

    Ok(AkeAlgebra { hopf, k, e, grouplikes, comodules })
}

/// The two-dimensional representation pi_q of A(k, e): the diagonal component
/// is killed, the antidiagonal empty word maps to the identity, and the
/// letters s, u of antidiagonal words map to the antidiagonal matrices with
/// entries (q^-1, q) and (1, 1) respectively. Fails with an order mismatch
/// when q does not satisfy the defining length-k relation.
pub fn pi_q(a: &AkeAlgebra, q: &Cyclotomic) -> Result<Representation> {
    let ctx = a.hopf.context().clone();
    if q.is_zero() {
        return Err(Error::InvalidInput("the parameter q must be nonzero".into()));
    }
    let q_inv = q.inv()?;
    let model = WordModel { k: a.k, e: a.e };
    let d = model.dim();
    let zero2 = || vec![ctx.zero(); 4];
    let mat = |a00: Cyclotomic, a01: Cyclotomic, a10: Cyclotomic, a11: Cyclotomic| {
        vec![a00, a01, a10, a11]
    };
    let mul2 = |x: &[Cyclotomic], y: &[Cyclotomic]| {
        mat(
            &(&x[0] * &y[0]) + &(&x[1] * &y[2]),
            &(&x[0] * &y[1]) + &(&x[1] * &y[3]),
            &(&x[2] * &y[0]) + &(&x[3] * &y[2]),
            &(&x[2] * &y[1]) + &(&x[3] * &y[3]),
        )
    };
    let x_mat = mat(ctx.zero(), q_inv, q.clone(), ctx.zero());
    let y_mat = mat(ctx.zero(), ctx.one(), ctx.one(), ctx.zero());
    let word_image = |w: Word| -> Vec<Cyclotomic> {
        let mut acc = mat(ctx.one(), ctx.zero(), ctx.zero(), ctx.one());
        for p in 1..=w.len {
            let step = match w.letter_at(p) {
                Letter::S => &x_mat,
                Letter::U => &y_mat,
            };
            acc = mul2(&acc, step);
        }
        acc
    };

    // The presentation identifies the length-k words of the antidiagonal
    // component up to the sign e; q must respect that identification.
    let lhs = word_image(Word { start: Letter::S, len: a.k });
    let rhs_raw = word_image(Word { start: Letter::U, len: a.k });
    let rhs: Vec<Cyclotomic> = rhs_raw
        .iter()
        .map(|v| if a.e == 1 { v.clone() } else { -v })
        .collect();
    if lhs != rhs {
        return Err(Error::OrderMismatch(format!(
            "q = {q} does not satisfy the length-{} identification of A({}, {})",
            a.k, a.k, a.e
        )));
    }

    let target = matrix_algebra(&ctx, 2)?;
    let mut matrix = Matrix::zero(&ctx, 4, d);
    for i in 0..d {
        let (comp, w) = model.word_at(i);
        let image = match comp {
            Component::Diagonal => zero2(),
            Component::Antidiagonal => word_image(w),
        };
        for (row, value) in image.into_iter().enumerate() {
            *matrix.at_mut(row, i) = value;
        }
    }
    Representation::new(a.hopf.clone(), target, matrix)
}
