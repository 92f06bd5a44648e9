//! Finite-dimensional associative unital algebras over the rationals.
//!
//! An [`Algebra`] is a validated multiplication table: associativity and
//! the unit laws are checked on all basis triples and pairs at
//! construction, the Jacobson radical is computed and certified (ideal,
//! nilpotent, semisimple quotient), and a complete family of primitive
//! idempotents is attached — either verified from the construction (quiver
//! vertices, factor idempotents of products and tensors) or found by
//! splitting the semisimple quotient.
//!
//! Derived algebras keep hold of their provenance: products and tensors
//! remember their factors, corners remember the ambient algebra and the
//! idempotent, the Morita context algebra remembers its bimodule basis.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::idem::{primitive_family, RawAlg};
use crate::mat::{Mat, RowSpace};
use crate::quiver::{self, BoundQuiver};
use crate::rat::Rat;

pub struct Algebra {
    name: String,
    labels: Vec<String>,
    raw: RawAlg,
    radical: RowSpace,
    generators: Vec<usize>,
    idempotents: Result<Vec<Vec<Rat>>>,
    presentation: Option<BoundQuiver>,
    opposite: OnceBox<Arc<Algebra>>,
}

impl Algebra {
    /// Builds and validates an algebra from a full multiplication table.
    /// `mult[i * dim + j]` must hold the coordinates of `b_i · b_j`.
    pub fn from_structure_constants(
        name: &str,
        labels: Vec<String>,
        unit: Vec<Rat>,
        mult: Vec<Vec<Rat>>,
    ) -> Result<Arc<Algebra>> {
        let dim = labels.len();
        if unit.len() != dim || mult.len() != dim * dim || mult.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch {
                detail: format!("structure constants of `{name}` have inconsistent sizes"),
            });
        }
        let raw = RawAlg { dim, unit, mult };
        finish(String::from(name), labels, raw, None, None)
    }

    /// Builds the path algebra of `q` modulo its relation ideal, with basis
    /// the residues of paths of length `< max_path_length`.
    pub fn from_bound_quiver(name: &str, q: BoundQuiver) -> Result<Arc<Algebra>> {
        q.validate()?;
        let cutoff = q.max_path_length;
        let paths_le = q.enumerate_paths(cutoff);
        let index_of = |p: &quiver::Path| paths_le.binary_search_by(|x| x.cmp(p)).ok();
        let n_le = paths_le.len();

        // Spanning vectors of the truncated relation ideal, once in the
        // space of paths of length <= L (for the admissibility check) and
        // once in length < L (for the quotient basis).
        let mut rows_le: Vec<Vec<Rat>> = Vec::new();
        let mut rows_lt: Vec<Vec<Rat>> = Vec::new();
        let lt_count = paths_le.iter().take_while(|p| p.len < cutoff).count();
        for rel in &q.relations {
            let term_paths: Vec<(Rat, quiver::Path)> = rel
                .terms
                .iter()
                .map(|(c, w)| Ok((c.clone(), q.word_to_path(w)?)))
                .collect::<Result<_>>()?;
            let min_len = term_paths.iter().map(|(_, p)| p.len).min().unwrap();
            let (src, tgt) = (term_paths[0].1.source, term_paths[0].1.target);
            for p in &paths_le {
                if p.len + min_len > cutoff || p.target != src {
                    continue;
                }
                for s in &paths_le {
                    if p.len + min_len + s.len > cutoff || s.source != tgt {
                        continue;
                    }
                    let mut vec_le = vec![Rat::zero(); n_le];
                    for (c, t) in &term_paths {
                        let total = p.len + t.len + s.len;
                        if total > cutoff {
                            continue;
                        }
                        let full = quiver::concat(&quiver::concat(p, t).unwrap(), s).unwrap();
                        let idx = index_of(&full).expect("enumerated path missing");
                        vec_le[idx] += c;
                    }
                    if vec_le.iter().all(Rat::is_zero) {
                        continue;
                    }
                    if p.len + min_len + s.len < cutoff {
                        let mut vec_lt = vec![Rat::zero(); lt_count];
                        for (idx, v) in vec_le.iter().enumerate() {
                            if !v.is_zero() && idx < lt_count {
                                vec_lt[idx] = v.clone();
                            }
                        }
                        if !vec_lt.iter().all(Rat::is_zero) {
                            rows_lt.push(vec_lt);
                        }
                    }
                    rows_le.push(vec_le);
                }
            }
        }
        let ideal_le = RowSpace::from_vectors(n_le, rows_le);
        for (idx, p) in paths_le.iter().enumerate() {
            if p.len == cutoff {
                let mut v = vec![Rat::zero(); n_le];
                v[idx] = Rat::one();
                if !ideal_le.contains(&v) {
                    return Err(Error::NotAdmissible {
                        detail: format!(
                            "path `{}` of length {} is not in the relation ideal",
                            q.path_name(p),
                            cutoff
                        ),
                    });
                }
            }
        }
        let ideal_lt = RowSpace::from_vectors(lt_count, rows_lt);
        let survivors = ideal_lt.complement_cols();
        let dim = survivors.len();
        let labels: Vec<String> = survivors
            .iter()
            .map(|&i| q.path_name(&paths_le[i]))
            .collect();
        let class_of = |p: &quiver::Path| -> Vec<Rat> {
            if p.len >= cutoff {
                return vec![Rat::zero(); dim];
            }
            let idx = index_of(p).unwrap();
            let mut v = vec![Rat::zero(); lt_count];
            v[idx] = Rat::one();
            ideal_lt.quotient_coords(&v)
        };
        // b_i · b_j is the class of "path j, then path i": the algebra
        // composes like functions, while words in files read left-to-right
        // in diagram order.
        let mut mult = Vec::with_capacity(dim * dim);
        for &pi in &survivors {
            for &pj in &survivors {
                let prod = quiver::concat(&paths_le[pj], &paths_le[pi]);
                mult.push(match prod {
                    Some(ref w) => class_of(w),
                    None => vec![Rat::zero(); dim],
                });
            }
        }
        let mut unit = vec![Rat::zero(); dim];
        let mut vertex_idems = Vec::new();
        for v in 0..q.vertices.len() {
            let cls = class_of(&quiver::Path::trivial(v));
            for (k, c) in cls.iter().enumerate() {
                unit[k] += c;
            }
            vertex_idems.push(cls);
        }
        let raw = RawAlg { dim, unit, mult };
        finish(String::from(name), labels, raw, Some(q), Some(vertex_idems))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.raw.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Rat] {
        &self.raw.unit
    }

    pub fn presentation(&self) -> Option<&BoundQuiver> {
        self.presentation.as_ref()
    }

    /// Coordinates of `b_i · b_j`.
    pub fn mult_coords(&self, i: usize, j: usize) -> &[Rat] {
        &self.raw.mult[i * self.raw.dim + j]
    }

    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        self.raw.mul_vec(x, y)
    }

    pub fn left_mult(&self, x: &[Rat]) -> Mat {
        self.raw.left_mult_mat(x)
    }

    pub fn right_mult(&self, x: &[Rat]) -> Mat {
        self.raw.right_mult_mat(x)
    }

    pub fn is_idempotent(&self, e: &[Rat]) -> bool {
        e.len() == self.raw.dim && self.raw.is_idempotent(e)
    }

    /// Basis of the Jacobson radical, certified at construction.
    pub fn radical(&self) -> &RowSpace {
        &self.radical
    }

    /// Indices of a generating set of basis elements (together with the
    /// unit). Commuting with their action matrices is equivalent to
    /// commuting with the whole algebra.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The cached complete family of pairwise-orthogonal primitive
    /// idempotents, or `NotSplit`.
    pub fn primitive_idempotents(&self) -> Result<Vec<Vec<Rat>>> {
        self.idempotents.clone()
    }

    pub(crate) fn raw(&self) -> &RawAlg {
        &self.raw
    }

    /// The opposite algebra; built once and cached, with the back link set
    /// so that `opposite` is an involution on the nose.
    pub fn opposite(self: &Arc<Algebra>) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let dim = self.raw.dim;
                let mut mult = Vec::with_capacity(dim * dim);
                for i in 0..dim {
                    for j in 0..dim {
                        mult.push(self.raw.mult[j * dim + i].clone());
                    }
                }
                let raw = RawAlg {
                    dim,
                    unit: self.raw.unit.clone(),
                    mult,
                };
                let idems = self.idempotents.clone().ok();
                let op = finish(
                    format!("{}^op", self.name),
                    self.labels.clone(),
                    raw,
                    None,
                    idems,
                )
                .expect("opposite of a validated algebra must validate");
                let _ = op.opposite.set(alloc::boxed::Box::new(self.clone()));
                alloc::boxed::Box::new(op)
            })
            .clone()
    }

    /// The center as a subspace: everything commuting with the generators.
    pub fn center(&self) -> RowSpace {
        let d = self.raw.dim;
        let mut rows: Option<Mat> = None;
        for &g in &self.generators {
            let mut x = vec![Rat::zero(); d];
            x[g] = Rat::one();
            let diff = self.raw.left_mult_mat(&x).sub(&self.raw.right_mult_mat(&x));
            rows = Some(match rows {
                None => diff,
                Some(m) => m.vstack(&diff),
            });
        }
        match rows {
            None => RowSpace::full(d),
            Some(m) => RowSpace::from_vectors(d, m.kernel_basis()),
        }
    }

    /// Primitive idempotents of the center: the block decomposition.
    pub fn central_primitive_idempotents(&self) -> Result<Vec<Vec<Rat>>> {
        let z = self.center();
        let zdim = z.dim();
        let mut mult = Vec::with_capacity(zdim * zdim);
        for i in 0..zdim {
            for j in 0..zdim {
                let p = self.raw.mul_vec(z.basis().row(i), z.basis().row(j));
                mult.push(z.express(&p).ok_or_else(|| Error::InternalInconsistency {
                    detail: String::from("center not closed under multiplication"),
                })?);
            }
        }
        let unit = z
            .express(&self.raw.unit)
            .ok_or_else(|| Error::InternalInconsistency {
                detail: String::from("unit not central"),
            })?;
        let zraw = RawAlg {
            dim: zdim,
            unit,
            mult,
        };
        let fam = primitive_family(&zraw)?;
        Ok(fam
            .into_iter()
            .map(|coords| {
                let mut v = vec![Rat::zero(); self.raw.dim];
                for (row, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        for k in 0..self.raw.dim {
                            let t = c * z.basis().get(row, k);
                            v[k] += &t;
                        }
                    }
                }
                v
            })
            .collect())
    }
}

impl core::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Algebra({}, dim {})", self.name, self.raw.dim)
    }
}

/// Pointer identity: modules may only be combined over the same algebra
/// instance.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b)
}

fn finish(
    name: String,
    labels: Vec<String>,
    raw: RawAlg,
    presentation: Option<BoundQuiver>,
    known_idems: Option<Vec<Vec<Rat>>>,
) -> Result<Arc<Algebra>> {
    let dim = raw.dim;
    if dim == 0 {
        return Err(Error::DimensionMismatch {
            detail: format!("algebra `{name}` has dimension zero"),
        });
    }
    // unit laws on every basis element
    for j in 0..dim {
        let mut bj = vec![Rat::zero(); dim];
        bj[j] = Rat::one();
        if raw.mul_vec(&raw.unit, &bj) != bj || raw.mul_vec(&bj, &raw.unit) != bj {
            return Err(Error::NoUnit);
        }
    }
    // associativity on all basis triples, via the regular representation:
    // L_i L_j = L_(b_i b_j) pins down (b_i b_j) b_k = b_i (b_j b_k) for all k.
    let lefts: Vec<Mat> = (0..dim)
        .map(|i| {
            let mut x = vec![Rat::zero(); dim];
            x[i] = Rat::one();
            raw.left_mult_mat(&x)
        })
        .collect();
    for i in 0..dim {
        for j in 0..dim {
            let composite = lefts[i].mul(&lefts[j]);
            let expanded = raw.left_mult_mat(&raw.mult[i * dim + j]);
            if composite != expanded {
                let k = (0..dim)
                    .find(|&k| composite.col_vec(k) != expanded.col_vec(k))
                    .unwrap_or(0);
                return Err(Error::NotAssociative { i, j, k });
            }
        }
    }
    let radical = raw.radical();
    verify_radical(&raw, &radical)?;
    let generators = greedy_generators(&raw);
    let idempotents = match known_idems {
        Some(fam) => {
            verify_idempotent_family(&raw, &fam)?;
            Ok(fam)
        }
        None => primitive_family(&raw),
    };
    Ok(Arc::new(Algebra {
        name,
        labels,
        raw,
        radical,
        generators,
        idempotents,
        presentation,
        opposite: OnceBox::new(),
    }))
}

/// The radical must be a nilpotent two-sided ideal with semisimple
/// quotient; anything else means the input table was not an algebra.
fn verify_radical(raw: &RawAlg, rad: &RowSpace) -> Result<()> {
    let dim = raw.dim;
    for r in 0..rad.dim() {
        for i in 0..dim {
            let mut bi = vec![Rat::zero(); dim];
            bi[i] = Rat::one();
            let left = raw.mul_vec(&bi, rad.basis().row(r));
            let right = raw.mul_vec(rad.basis().row(r), &bi);
            if !rad.contains(&left) || !rad.contains(&right) {
                return Err(Error::InternalInconsistency {
                    detail: String::from("radical is not a two-sided ideal"),
                });
            }
        }
    }
    // nilpotency: powers of the subspace must hit zero
    let mut power = rad.clone();
    for _ in 0..=dim {
        if power.dim() == 0 {
            break;
        }
        let mut rows = Vec::new();
        for i in 0..power.dim() {
            for j in 0..rad.dim() {
                rows.push(raw.mul_vec(power.basis().row(i), rad.basis().row(j)));
            }
        }
        let next = RowSpace::from_vectors(dim, rows);
        if next.dim() >= power.dim() && next.dim() > 0 {
            return Err(Error::InternalInconsistency {
                detail: String::from("radical candidate is not nilpotent"),
            });
        }
        power = next;
    }
    if power.dim() != 0 {
        return Err(Error::InternalInconsistency {
            detail: String::from("radical candidate is not nilpotent"),
        });
    }
    // semisimple quotient: nondegenerate trace form
    let (quo, _) = raw.quotient(rad);
    if quo.dim > 0 && quo.trace_form().rank() != quo.dim {
        return Err(Error::InternalInconsistency {
            detail: String::from("quotient by the radical has a degenerate trace form"),
        });
    }
    Ok(())
}

fn verify_idempotent_family(raw: &RawAlg, fam: &[Vec<Rat>]) -> Result<()> {
    let bad = |detail: &str| Error::InternalInconsistency {
        detail: format!("injected idempotent family rejected: {detail}"),
    };
    let mut sum = vec![Rat::zero(); raw.dim];
    for (i, e) in fam.iter().enumerate() {
        if e.len() != raw.dim || !raw.is_idempotent(e) {
            return Err(bad("member is not idempotent"));
        }
        for (k, c) in e.iter().enumerate() {
            sum[k] += c;
        }
        for (j, f) in fam.iter().enumerate() {
            if i != j && !raw.mul_vec(e, f).iter().all(Rat::is_zero) {
                return Err(bad("members are not orthogonal"));
            }
        }
        let (corner, _) = raw.corner(e);
        let crad = corner.radical();
        if corner.dim - crad.dim() != 1 {
            return Err(bad("member is not primitive"));
        }
    }
    if sum != raw.unit {
        return Err(bad("members do not sum to the unit"));
    }
    Ok(())
}

fn greedy_generators(raw: &RawAlg) -> Vec<usize> {
    let dim = raw.dim;
    let mut gens: Vec<usize> = Vec::new();
    let mut span = RowSpace::from_vectors(dim, vec![raw.unit.clone()]);
    for i in 0..dim {
        let mut ei = vec![Rat::zero(); dim];
        ei[i] = Rat::one();
        if span.contains(&ei) {
            continue;
        }
        gens.push(i);
        // right-multiplication closure of the unit under the generators
        loop {
            let mut rows: Vec<Vec<Rat>> = (0..span.dim()).map(|r| span.basis().row(r).to_vec()).collect();
            let before = span.dim();
            for r in 0..before {
                let x = span.basis().row(r).to_vec();
                for &g in &gens {
                    let mut bg = vec![Rat::zero(); dim];
                    bg[g] = Rat::one();
                    rows.push(raw.mul_vec(&x, &bg));
                }
            }
            let next = RowSpace::from_vectors(dim, rows);
            let grown = next.dim() > before;
            span = next;
            if !grown {
                break;
            }
        }
    }
    gens
}

// ---- derived constructions ----

pub struct ProductAlgebra {
    pub algebra: Arc<Algebra>,
    pub left: Arc<Algebra>,
    pub right: Arc<Algebra>,
}

/// `A × B` with blockwise multiplication and unit `(1, 1)`.
pub fn product_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<ProductAlgebra> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("l.{l}")).collect();
    labels.extend(b.labels().iter().map(|l| format!("r.{l}")));
    let mut unit = vec![Rat::zero(); dim];
    unit[..da].clone_from_slice(a.unit());
    unit[da..].clone_from_slice(b.unit());
    let zero = vec![Rat::zero(); dim];
    let mut mult = vec![zero; dim * dim];
    for i in 0..da {
        for j in 0..da {
            let mut v = vec![Rat::zero(); dim];
            v[..da].clone_from_slice(a.mult_coords(i, j));
            mult[i * dim + j] = v;
        }
    }
    for i in 0..db {
        for j in 0..db {
            let mut v = vec![Rat::zero(); dim];
            v[da..].clone_from_slice(b.mult_coords(i, j));
            mult[(da + i) * dim + (da + j)] = v;
        }
    }
    let raw = RawAlg { dim, unit, mult };
    let idems = match (a.primitive_idempotents(), b.primitive_idempotents()) {
        (Ok(fa), Ok(fb)) => {
            let mut fam = Vec::new();
            for e in fa {
                let mut v = vec![Rat::zero(); dim];
                v[..da].clone_from_slice(&e);
                fam.push(v);
            }
            for f in fb {
                let mut v = vec![Rat::zero(); dim];
                v[da..].clone_from_slice(&f);
                fam.push(v);
            }
            Some(fam)
        }
        _ => None,
    };
    let algebra = finish(
        format!("({} x {})", a.name(), b.name()),
        labels,
        raw,
        None,
        idems,
    )?;
    Ok(ProductAlgebra {
        algebra,
        left: a.clone(),
        right: b.clone(),
    })
}

pub struct TensorAlgebra {
    pub algebra: Arc<Algebra>,
    pub left: Arc<Algebra>,
    pub right: Arc<Algebra>,
}

/// `A ⊗ B` over the rationals, basis `(i, j) ↦ i·dim B + j`, with
/// `(x ⊗ y)(x' ⊗ y') = xx' ⊗ yy'`.
pub fn tensor_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<TensorAlgebra> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let mut labels = Vec::with_capacity(dim);
    for i in 0..da {
        for j in 0..db {
            labels.push(format!("{}(x){}", a.labels()[i], b.labels()[j]));
        }
    }
    let kron_vec = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut v = Vec::with_capacity(dim);
        for xi in x {
            for yj in y {
                v.push(xi * yj);
            }
        }
        v
    };
    let mut mult = Vec::with_capacity(dim * dim);
    for idx in 0..dim {
        let (i, j) = (idx / db, idx % db);
        for jdx in 0..dim {
            let (k, l) = (jdx / db, jdx % db);
            mult.push(kron_vec(a.mult_coords(i, k), b.mult_coords(j, l)));
        }
    }
    let unit = kron_vec(a.unit(), b.unit());
    let raw = RawAlg { dim, unit, mult };
    let idems = match (a.primitive_idempotents(), b.primitive_idempotents()) {
        (Ok(fa), Ok(fb)) => {
            let mut fam = Vec::new();
            for e in &fa {
                for f in &fb {
                    fam.push(kron_vec(e, f));
                }
            }
            Some(fam)
        }
        _ => None,
    };
    let algebra = finish(
        format!("({} (x) {})", a.name(), b.name()),
        labels,
        raw,
        None,
        idems,
    )?;
    Ok(TensorAlgebra {
        algebra,
        left: a.clone(),
        right: b.clone(),
    })
}

pub struct CornerAlgebra {
    pub algebra: Arc<Algebra>,
    pub parent: Arc<Algebra>,
    pub e: Vec<Rat>,
    /// Rows: the corner basis expressed in parent coordinates.
    pub basis: Mat,
    /// Rows: a basis of `eA` in parent coordinates.
    pub ea_basis: Mat,
    /// Rows: a basis of `Ae` in parent coordinates.
    pub ae_basis: Mat,
}

/// The corner `eAe` with unit `e`, together with the subspaces `eA` and
/// `Ae` it acts on.
pub fn corner_algebra(a: &Arc<Algebra>, e: &[Rat]) -> Result<CornerAlgebra> {
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let dim = a.dim();
    let (craw, basis) = a.raw().corner(e);
    if craw.dim == 0 {
        return Err(Error::DimensionMismatch {
            detail: String::from("corner at the zero idempotent is empty"),
        });
    }
    let labels = (0..craw.dim).map(|i| format!("c{i}")).collect();
    // primitive idempotents transport when e is a subsum of the parent family
    let idems = a.primitive_idempotents().ok().and_then(|fam| {
        let members: Vec<&Vec<Rat>> = fam
            .iter()
            .filter(|ei| {
                a.multiply(e, ei) == **ei && a.multiply(ei, e) == **ei
            })
            .collect();
        let mut sum = vec![Rat::zero(); dim];
        for m in &members {
            for (k, c) in m.iter().enumerate() {
                sum[k] += c;
            }
        }
        if sum == e {
            members
                .iter()
                .map(|m| {
                    let mut v = Vec::new();
                    v.extend_from_slice(m);
                    // express in corner coordinates
                    RowSpace::from_rows(&basis).express(&v)
                })
                .collect::<Option<Vec<_>>>()
        } else {
            None
        }
    });
    let algebra = finish(
        format!("{}.corner", a.name()),
        labels,
        craw,
        None,
        idems,
    )?;
    let mut ea_rows = Vec::new();
    let mut ae_rows = Vec::new();
    for i in 0..dim {
        let mut bi = vec![Rat::zero(); dim];
        bi[i] = Rat::one();
        ea_rows.push(a.multiply(e, &bi));
        ae_rows.push(a.multiply(&bi, e));
    }
    let ea = RowSpace::from_vectors(dim, ea_rows);
    let ae = RowSpace::from_vectors(dim, ae_rows);
    Ok(CornerAlgebra {
        algebra,
        parent: a.clone(),
        e: e.to_vec(),
        basis,
        ea_basis: ea.basis().clone(),
        ae_basis: ae.basis().clone(),
    })
}

pub struct MoritaContextAlgebra {
    pub algebra: Arc<Algebra>,
    pub base: Arc<Algebra>,
    pub e: Vec<Rat>,
    pub f: Vec<Rat>,
    /// Rows: basis of `Ae` in base coordinates.
    pub ae_basis: Mat,
    /// Rows: basis of `fA` in base coordinates.
    pub fa_basis: Mat,
    pub n_dim: usize,
}

/// The Morita context algebra `[[A, N], [N, A]]` with `N = Ae ⊗ fA` and
/// both crossed multiplication maps zero. Requires `fAe = 0`; the tensor
/// product is taken over the rationals — the precondition makes the only
/// internal composite `fA ⊗_A Ae = fAe` vanish, which is what forces the
/// zero maps.
pub fn morita_context_zero(
    a: &Arc<Algebra>,
    e: &[Rat],
    f: &[Rat],
) -> Result<MoritaContextAlgebra> {
    if !a.is_idempotent(e) || !a.is_idempotent(f) {
        return Err(Error::NotIdempotent);
    }
    let d = a.dim();
    for i in 0..d {
        let mut bi = vec![Rat::zero(); d];
        bi[i] = Rat::one();
        let fae = a.multiply(f, &a.multiply(&bi, e));
        if !fae.iter().all(Rat::is_zero) {
            return Err(Error::ContextNotZero { witness: fae });
        }
    }
    let mut ae_rows = Vec::new();
    let mut fa_rows = Vec::new();
    for i in 0..d {
        let mut bi = vec![Rat::zero(); d];
        bi[i] = Rat::one();
        ae_rows.push(a.multiply(&bi, e));
        fa_rows.push(a.multiply(f, &bi));
    }
    let ae = RowSpace::from_vectors(d, ae_rows);
    let fa = RowSpace::from_vectors(d, fa_rows);
    let (na, nf) = (ae.dim(), fa.dim());
    let n_dim = na * nf;
    let dim = 2 * d + 2 * n_dim;
    // layout: [A11 | N12 | N21 | A22]
    let off = [0, d, d + n_dim, d + 2 * n_dim];
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("d1.{l}")).collect();
    for u in 0..na {
        for w in 0..nf {
            labels.push(format!("n12.{u}x{w}"));
        }
    }
    for u in 0..na {
        for w in 0..nf {
            labels.push(format!("n21.{u}x{w}"));
        }
    }
    labels.extend(a.labels().iter().map(|l| format!("d2.{l}")));

    let zero = || vec![Rat::zero(); dim];
    let mut mult = vec![zero(); dim * dim];
    let put = |mult: &mut Vec<Vec<Rat>>, i: usize, j: usize, v: Vec<Rat>| {
        mult[i * dim + j] = v;
    };
    let embed = |block: usize, v: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); dim];
        out[off[block]..off[block] + v.len()].clone_from_slice(v);
        out
    };
    // diagonal copies of A
    for i in 0..d {
        for j in 0..d {
            put(&mut mult, off[0] + i, off[0] + j, embed(0, a.mult_coords(i, j)));
            put(&mut mult, off[3] + i, off[3] + j, embed(3, a.mult_coords(i, j)));
        }
    }
    // bimodule actions on N = Ae ⊗ fA: the left factor carries the left
    // A-action, the right factor the right A-action; both corner copies
    // use the same structure.
    let n_index = |u: usize, w: usize| u * nf + w;
    for i in 0..d {
        let mut bi = vec![Rat::zero(); d];
        bi[i] = Rat::one();
        for u in 0..na {
            let au = a.multiply(&bi, ae.basis().row(u));
            let au_coords = ae.express(&au).expect("Ae is a left ideal");
            for w in 0..nf {
                // a · (u ⊗ w)
                for (u2, c) in au_coords.iter().enumerate() {
                    if !c.is_zero() {
                        for (nblock, arow) in [(1usize, 0usize), (2, 3)] {
                            let mut v = mult[(off[arow] + i) * dim + (off[nblock] + n_index(u, w))]
                                .clone();
                            v[off[nblock] + n_index(u2, w)] += c;
                            put(
                                &mut mult,
                                off[arow] + i,
                                off[nblock] + n_index(u, w),
                                v,
                            );
                        }
                    }
                }
            }
        }
        for w in 0..nf {
            let wa = a.multiply(fa.basis().row(w), &bi);
            let wa_coords = fa.express(&wa).expect("fA is a right ideal");
            for u in 0..na {
                // (u ⊗ w) · a
                for (w2, c) in wa_coords.iter().enumerate() {
                    if !c.is_zero() {
                        for (nblock, acol) in [(1usize, 3usize), (2, 0)] {
                            let mut v = mult[(off[nblock] + n_index(u, w)) * dim + (off[acol] + i)]
                                .clone();
                            v[off[nblock] + n_index(u, w2)] += c;
                            put(
                                &mut mult,
                                off[nblock] + n_index(u, w),
                                off[acol] + i,
                                v,
                            );
                        }
                    }
                }
            }
        }
    }
    // (1,2)(2,1) and (2,1)(1,2) products are the zero maps: already zero.
    let mut unit = zero();
    unit[off[0]..off[0] + d].clone_from_slice(a.unit());
    unit[off[3]..off[3] + d].clone_from_slice(a.unit());
    let raw = RawAlg { dim, unit, mult };
    let idems = a.primitive_idempotents().ok().map(|fam| {
        let mut out = Vec::new();
        for ei in &fam {
            out.push(embed(0, ei));
        }
        for ei in &fam {
            out.push(embed(3, ei));
        }
        out
    });
    let algebra = finish(
        format!("Morita00({})", a.name()),
        labels,
        raw,
        None,
        idems,
    )?;
    Ok(MoritaContextAlgebra {
        algebra,
        base: a.clone(),
        e: e.to_vec(),
        f: f.to_vec(),
        ae_basis: ae.basis().clone(),
        fa_basis: fa.basis().clone(),
        n_dim,
    })
}

impl MoritaContextAlgebra {
    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    /// Offset of the four blocks `[A11, N12, N21, A22]` in the basis.
    pub fn offsets(&self) -> [usize; 4] {
        let d = self.base.dim();
        [0, d, d + self.n_dim, d + 2 * self.n_dim]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::nakayama_quiver;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    pub(crate) fn ground_field() -> Arc<Algebra> {
        Algebra::from_structure_constants(
            "Q",
            vec![String::from("1")],
            vec![r(1)],
            vec![vec![r(1)]],
        )
        .unwrap()
    }

    pub(crate) fn dual_numbers() -> Arc<Algebra> {
        Algebra::from_structure_constants(
            "D2",
            vec![String::from("1"), String::from("x")],
            vec![r(1), r(0)],
            vec![
                vec![r(1), r(0)],
                vec![r(0), r(1)],
                vec![r(0), r(1)],
                vec![r(0), r(0)],
            ],
        )
        .unwrap()
    }

    pub(crate) fn nakayama(n: usize, l: usize) -> Arc<Algebra> {
        Algebra::from_bound_quiver(&format!("N({n},{l})"), nakayama_quiver(n, l)).unwrap()
    }

    #[test]
    fn ground_field_basics() {
        let q = ground_field();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.radical().dim(), 0);
        assert_eq!(q.primitive_idempotents().unwrap().len(), 1);
    }

    #[test]
    fn dual_numbers_radical_and_idempotents() {
        let d2 = dual_numbers();
        assert_eq!(d2.radical().dim(), 1);
        assert!(d2.radical().contains(&[r(0), r(1)]));
        let fam = d2.primitive_idempotents().unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0], vec![r(1), r(0)]);
    }

    #[test]
    fn rejects_no_unit() {
        // claims x·x = 1 but passes the zero vector as unit
        let res = Algebra::from_structure_constants(
            "bad",
            vec![String::from("1"), String::from("x")],
            vec![r(0), r(0)],
            vec![
                vec![r(1), r(0)],
                vec![r(0), r(1)],
                vec![r(0), r(1)],
                vec![r(1), r(0)],
            ],
        );
        assert!(matches!(res, Err(Error::NoUnit)));
    }

    #[test]
    fn rejects_non_associative() {
        let mut mult = vec![vec![r(0), r(0), r(0)]; 9];
        for j in 0..3 {
            let mut v = vec![r(0), r(0), r(0)];
            v[j] = r(1);
            mult[j] = v.clone(); // 1·b_j
            mult[j * 3] = v; // b_j·1
        }
        // x·x = y but x·y = 1: then (x·x)·x = y·x = 0 while x·(x·x) = 1
        mult[4] = vec![r(0), r(0), r(1)];
        mult[5] = vec![r(1), r(0), r(0)];
        let res = Algebra::from_structure_constants(
            "bad",
            vec![String::from("1"), String::from("x"), String::from("y")],
            vec![r(1), r(0), r(0)],
            mult,
        );
        assert!(matches!(res, Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn nakayama_32_shape() {
        let a = nakayama(3, 2);
        assert_eq!(a.dim(), 6);
        assert_eq!(a.radical().dim(), 3);
        let fam = a.primitive_idempotents().unwrap();
        assert_eq!(fam.len(), 3);
        // vertex idempotents are basis vectors of the path basis
        for e in &fam {
            assert!(a.is_idempotent(e));
        }
    }

    #[test]
    fn quiver_examples_from_operations() {
        // one vertex, no arrows: the ground field
        let q = BoundQuiver {
            vertices: vec![String::from("v")],
            arrows: vec![],
            relations: vec![],
            max_path_length: 2,
        };
        let a = Algebra::from_bound_quiver("Q", q).unwrap();
        assert_eq!(a.dim(), 1);

        // one vertex, loop x, relation x², L = 2: dual numbers
        let q = BoundQuiver {
            vertices: vec![String::from("v")],
            arrows: vec![quiver::Arrow {
                name: String::from("x"),
                source: 0,
                target: 0,
            }],
            relations: vec![quiver::Relation::monomial(vec![0, 0])],
            max_path_length: 2,
        };
        let a = Algebra::from_bound_quiver("D2q", q).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.radical().dim(), 1);
    }

    #[test]
    fn inadmissible_quiver_rejected() {
        // one loop with no relations: paths of length 2 survive
        let q = BoundQuiver {
            vertices: vec![String::from("v")],
            arrows: vec![quiver::Arrow {
                name: String::from("x"),
                source: 0,
                target: 0,
            }],
            relations: vec![],
            max_path_length: 2,
        };
        assert!(matches!(
            Algebra::from_bound_quiver("bad", q),
            Err(Error::NotAdmissible { .. })
        ));
    }

    #[test]
    fn product_dims_and_radical() {
        let p = product_algebra(&nakayama(3, 2), &dual_numbers()).unwrap();
        assert_eq!(p.algebra.dim(), 8);
        assert_eq!(p.algebra.radical().dim(), 4); // 3 arrows + x
        assert_eq!(p.algebra.primitive_idempotents().unwrap().len(), 4);
    }

    #[test]
    fn tensor_dims_and_radical() {
        let d2 = dual_numbers();
        let t = tensor_algebra(&d2, &d2).unwrap();
        assert_eq!(t.algebra.dim(), 4);
        // rad(A⊗B) = rad⊗B + A⊗rad in the split characteristic-zero case
        assert_eq!(t.algebra.radical().dim(), 3);
        let n22 = nakayama(2, 2);
        let big = tensor_algebra(&n22, &n22).unwrap();
        assert_eq!(big.algebra.dim(), 16);
    }

    #[test]
    fn tensor_with_ground_field_is_isomorphic() {
        let b = nakayama(3, 2);
        let t = tensor_algebra(&ground_field(), &b).unwrap();
        assert_eq!(t.algebra.dim(), b.dim());
        // identical structure constants under the evident index map
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                assert_eq!(t.algebra.mult_coords(i, j), b.mult_coords(i, j));
            }
        }
    }

    #[test]
    fn corner_examples() {
        let a = nakayama(3, 2);
        let fam = a.primitive_idempotents().unwrap();
        // e = 1: the algebra itself
        let full = corner_algebra(&a, &a.unit().to_vec()).unwrap();
        assert_eq!(full.algebra.dim(), a.dim());
        // e = e1: one-dimensional corner
        let c1 = corner_algebra(&a, &fam[0]).unwrap();
        assert_eq!(c1.algebra.dim(), 1);
        // e = e1 + e2: two vertices and the arrow between them
        let mut e12 = fam[0].clone();
        for (k, c) in fam[1].iter().enumerate() {
            e12[k] += c;
        }
        let c12 = corner_algebra(&a, &e12).unwrap();
        assert_eq!(c12.algebra.dim(), 3);
        // non-idempotent input
        let mut bad = vec![r(0); a.dim()];
        bad[a.dim() - 1] = r(1);
        assert!(matches!(
            corner_algebra(&a, &bad),
            Err(Error::NotIdempotent)
        ));
    }

    #[test]
    fn opposite_involution() {
        let a = nakayama(3, 2);
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        let back = op.opposite();
        assert!(same_algebra(&a, &back));
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(op.mult_coords(i, j), a.mult_coords(j, i));
            }
        }
    }

    #[test]
    fn morita_context_examples() {
        let a = nakayama(3, 2);
        let fam = a.primitive_idempotents().unwrap();
        // e = e1, f = e3: fAe = 0 since there is no path 1 -> 3 of length < 2
        let ctx = morita_context_zero(&a, &fam[0], &fam[2]).unwrap();
        assert_eq!(ctx.n_dim, 4);
        assert_eq!(ctx.algebra.dim(), 2 * 6 + 2 * 4);
        assert_eq!(ctx.algebra.primitive_idempotents().unwrap().len(), 6);

        // e = f = 1 over the dual numbers: fAe = A ≠ 0
        let d2 = dual_numbers();
        let one = d2.unit().to_vec();
        assert!(matches!(
            morita_context_zero(&d2, &one, &one),
            Err(Error::ContextNotZero { .. })
        ));

        // e = 0: N = 0 and the context is A × A
        let zero_e = vec![r(0); a.dim()];
        let ctx0 = morita_context_zero(&a, &zero_e, &fam[2]).unwrap();
        assert_eq!(ctx0.n_dim, 0);
        assert_eq!(ctx0.algebra.dim(), 12);
    }

    #[test]
    fn center_of_product_has_two_blocks() {
        let p = product_algebra(&dual_numbers(), &dual_numbers()).unwrap();
        let blocks = p.algebra.central_primitive_idempotents().unwrap();
        assert_eq!(blocks.len(), 2);
        let n32 = nakayama(3, 2);
        assert_eq!(n32.central_primitive_idempotents().unwrap().len(), 1);
    }
}
