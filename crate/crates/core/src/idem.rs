//! Radicals and primitive idempotents.
//!
//! The radical comes from Dickson's trace-form criterion (characteristic
//! zero). Primitive idempotents are found by splitting the semisimple
//! quotient: take an element, factor its minimal polynomial into coprime
//! pieces through rational roots, turn the factorization into an idempotent
//! via Bezout, lift it through the nilpotent radical by Newton iteration,
//! and recurse into the two corners. When no element with a usable minimal
//! polynomial shows up within the retry budget, the algebra is declared not
//! split over the rationals.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::mat::{Mat, RowSpace};
use crate::rat::Rat;
use crate::RETRY_BUDGET;

/// A bare multiplication table: enough structure to do idempotent work
/// without the validation and caches of a full [`crate::Algebra`].
#[derive(Clone)]
pub(crate) struct RawAlg {
    pub dim: usize,
    pub unit: Vec<Rat>,
    /// `mult[i * dim + j]` holds the coordinates of `b_i · b_j`.
    pub mult: Vec<Vec<Rat>>,
}

impl RawAlg {
    pub fn mul_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for (k, m) in self.mult[i * self.dim + j].iter().enumerate() {
                    if !m.is_zero() {
                        let t = &c * m;
                        out[k] += &t;
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` on coordinate vectors.
    pub fn left_mult_mat(&self, x: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.mult[i * self.dim + j].iter().enumerate() {
                    if !c.is_zero() {
                        let t = &x[i] * c;
                        let v = m.get(k, j) + &t;
                        m.set(k, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn right_mult_mat(&self, x: &[Rat]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for j in 0..self.dim {
            if x[j].is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for (k, c) in self.mult[i * self.dim + j].iter().enumerate() {
                    if !c.is_zero() {
                        let t = &x[j] * c;
                        let v = m.get(k, i) + &t;
                        m.set(k, i, v);
                    }
                }
            }
        }
        m
    }

    pub fn is_idempotent(&self, x: &[Rat]) -> bool {
        self.mul_vec(x, x) == x
    }

    /// Trace form `T[i][j] = tr(L_i ∘ L_j)`, computed without materializing
    /// the products: `tr(AB) = Σ A[k][l] B[l][k]`.
    pub fn trace_form(&self) -> Mat {
        let lefts: Vec<Mat> = (0..self.dim)
            .map(|i| {
                let mut x = vec![Rat::zero(); self.dim];
                x[i] = Rat::one();
                self.left_mult_mat(&x)
            })
            .collect();
        Mat::from_fn(self.dim, self.dim, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..self.dim {
                for l in 0..self.dim {
                    let a = lefts[i].get(k, l);
                    if a.is_zero() {
                        continue;
                    }
                    let b = lefts[j].get(l, k);
                    if !b.is_zero() {
                        let t = a * b;
                        acc += &t;
                    }
                }
            }
            acc
        })
    }

    /// Jacobson radical by the Dickson criterion (characteristic zero):
    /// the kernel of the trace form of the regular representation.
    pub fn radical(&self) -> RowSpace {
        let kernel = self.trace_form().kernel_basis();
        RowSpace::from_vectors(self.dim, kernel)
    }

    /// Quotient by a subspace that is assumed to be a two-sided ideal;
    /// returns the quotient table and the projection onto quotient coords.
    pub fn quotient(&self, ideal: &RowSpace) -> (RawAlg, QuotientMap) {
        let free = ideal.complement_cols();
        let qdim = free.len();
        let project = |v: &[Rat]| ideal.quotient_coords(v);
        let mut mult = Vec::with_capacity(qdim * qdim);
        for &ci in &free {
            for &cj in &free {
                let mut bi = vec![Rat::zero(); self.dim];
                bi[ci] = Rat::one();
                let mut bj = vec![Rat::zero(); self.dim];
                bj[cj] = Rat::one();
                mult.push(project(&self.mul_vec(&bi, &bj)));
            }
        }
        let quo = RawAlg {
            dim: qdim,
            unit: project(&self.unit),
            mult,
        };
        (
            quo,
            QuotientMap {
                ideal: ideal.clone(),
                free,
                parent_dim: self.dim,
            },
        )
    }

    /// The corner `e·self·e` with its basis expressed in parent coordinates
    /// (rows of the returned matrix).
    pub fn corner(&self, e: &[Rat]) -> (RawAlg, Mat) {
        let mut span_rows = Vec::new();
        for i in 0..self.dim {
            let mut b = vec![Rat::zero(); self.dim];
            b[i] = Rat::one();
            let ebe = self.mul_vec(&self.mul_vec(e, &b), e);
            span_rows.push(ebe);
        }
        let space = RowSpace::from_rows(&Mat::from_rows(span_rows));
        let basis = space.basis().clone();
        let cdim = basis.rows();
        let mut mult = Vec::with_capacity(cdim * cdim);
        for i in 0..cdim {
            for j in 0..cdim {
                let p = self.mul_vec(basis.row(i), basis.row(j));
                mult.push(
                    space
                        .express(&p)
                        .expect("corner not closed under multiplication"),
                );
            }
        }
        let unit = space.express(e).expect("idempotent outside its corner");
        (RawAlg { dim: cdim, unit, mult }, basis)
    }

    /// Minimal polynomial of `x`, monic, coefficients low to high.
    pub fn minpoly(&self, x: &[Rat]) -> Vec<Rat> {
        let mut powers: Vec<Vec<Rat>> = vec![self.unit.clone()];
        loop {
            let next = self.mul_vec(powers.last().unwrap(), x);
            let stacked = Mat::from_rows(powers.clone()).transpose();
            if let Some(sol) = stacked.solve(&next) {
                let k = powers.len();
                let mut mp = vec![Rat::zero(); k + 1];
                for (i, c) in sol.iter().enumerate() {
                    mp[i] = -c;
                }
                mp[k] = Rat::one();
                return mp;
            }
            powers.push(next);
        }
    }
}

/// Projection data for a quotient by an ideal.
pub(crate) struct QuotientMap {
    pub ideal: RowSpace,
    pub free: Vec<usize>,
    pub parent_dim: usize,
}

impl QuotientMap {
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        self.ideal.quotient_coords(v)
    }

    /// A preimage of a quotient vector (coefficients on the free columns).
    pub fn lift(&self, q: &[Rat]) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.parent_dim];
        for (slot, &col) in self.free.iter().enumerate() {
            v[col] = q[slot].clone();
        }
        v
    }
}

/// A complete list of pairwise-orthogonal primitive idempotents summing to
/// the unit, or `NotSplit` when minimal-polynomial splitting stalls.
pub(crate) fn primitive_family(raw: &RawAlg) -> Result<Vec<Vec<Rat>>> {
    if raw.dim == 0 {
        return Ok(Vec::new());
    }
    let rad = raw.radical();
    let (quo, qmap) = raw.quotient(&rad);
    if quo.dim == 1 {
        return Ok(vec![raw.unit.clone()]);
    }
    let eq = find_split_idempotent(&quo)?;
    let e = newton_lift(raw, &qmap.lift(&eq))?;
    let one_minus_e: Vec<Rat> = raw
        .unit
        .iter()
        .zip(&e)
        .map(|(u, x)| u - x)
        .collect();
    let mut family = Vec::new();
    for part in [&e, &one_minus_e] {
        let (corner, basis) = raw.corner(part);
        for idem in primitive_family(&corner)? {
            // map back to parent coordinates
            let mut v = vec![Rat::zero(); raw.dim];
            for (row, c) in idem.iter().enumerate() {
                if !c.is_zero() {
                    for k in 0..raw.dim {
                        let t = c * basis.get(row, k);
                        v[k] += &t;
                    }
                }
            }
            family.push(v);
        }
    }
    Ok(family)
}

/// Searches a semisimple algebra of dimension at least 2 for a nontrivial
/// idempotent: deterministic candidates first, then seeded random ones.
fn find_split_idempotent(ss: &RawAlg) -> Result<Vec<Rat>> {
    let mut candidates: Vec<Vec<Rat>> = Vec::new();
    for i in 0..ss.dim {
        let mut v = vec![Rat::zero(); ss.dim];
        v[i] = Rat::one();
        candidates.push(v);
    }
    for i in 0..ss.dim {
        for j in (i + 1)..ss.dim.min(i + 5) {
            let mut v = vec![Rat::zero(); ss.dim];
            v[i] = Rat::one();
            v[j] = Rat::one();
            candidates.push(v);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xA15E_BA5E ^ ss.dim as u64);
    for _ in 0..RETRY_BUDGET {
        let v: Vec<Rat> = (0..ss.dim)
            .map(|_| Rat::from_int((rng.next_u32() % 7) as i64 - 3))
            .collect();
        candidates.push(v);
    }
    for x in &candidates {
        if let Some(e) = idempotent_from_minpoly(ss, x) {
            return Ok(e);
        }
    }
    Err(Error::NotSplit {
        detail: format!(
            "no splitting idempotent found in a {}-dimensional semisimple quotient \
             within the retry budget",
            ss.dim
        ),
    })
}

/// If the minimal polynomial of `x` admits a coprime factorization through
/// a rational root, returns the corresponding nontrivial idempotent.
fn idempotent_from_minpoly(alg: &RawAlg, x: &[Rat]) -> Option<Vec<Rat>> {
    let mp = alg.minpoly(x);
    let (f1, f2) = coprime_split(&mp)?;
    // u·f1 + v·f2 = 1; (v·f2)(x) projects onto ker f1(x) along ker f2(x).
    let (_, v) = poly_ext_gcd(&f1, &f2);
    let vf2 = poly_mod(&poly_mul(&v, &f2), &mp);
    let e = eval_poly(alg, &vf2, x);
    if alg.is_idempotent(&e) && !e.iter().all(Rat::is_zero) && e != alg.unit {
        Some(e)
    } else {
        None
    }
}

/// Newton iteration `x ← 3x² − 2x³` converges to an idempotent lifting the
/// class of `x` whenever `x² − x` is nilpotent.
fn newton_lift(raw: &RawAlg, seed: &[Rat]) -> Result<Vec<Rat>> {
    let mut x = seed.to_vec();
    for _ in 0..(usize::BITS - raw.dim.leading_zeros() + 3) {
        if raw.is_idempotent(&x) {
            return Ok(x);
        }
        let x2 = raw.mul_vec(&x, &x);
        let x3 = raw.mul_vec(&x2, &x);
        let three = Rat::from_int(3);
        let two = Rat::from_int(2);
        x = x2
            .iter()
            .zip(&x3)
            .map(|(a, b)| &(&three * a) - &(&two * b))
            .collect();
    }
    if raw.is_idempotent(&x) {
        Ok(x)
    } else {
        Err(Error::InternalInconsistency {
            detail: String::from("idempotent lifting did not converge; radical not nilpotent?"),
        })
    }
}

// ---- polynomial helpers (dense, low-to-high coefficients) ----

pub(crate) fn poly_trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.len() > 1 && p.last().is_some_and(Rat::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn poly_deg(p: &[Rat]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let t = x * y;
                out[i + j] += &t;
            }
        }
    }
    poly_trim(out)
}

/// Division with remainder by a nonzero divisor.
pub(crate) fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = poly_trim(b.to_vec());
    assert!(!b.iter().all(Rat::is_zero), "division by zero polynomial");
    let mut rem = poly_trim(a.to_vec());
    let db = poly_deg(&b);
    let lead = b[db].clone();
    if poly_deg(&rem) < db || rem.iter().all(Rat::is_zero) {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); poly_deg(&rem) - db + 1];
    while !rem.iter().all(Rat::is_zero) && poly_deg(&rem) >= db {
        let dr = poly_deg(&rem);
        let c = &rem[dr] / &lead;
        quot[dr - db] = c.clone();
        for k in 0..=db {
            let t = &c * &b[k];
            rem[dr - db + k] -= &t;
        }
        rem = poly_trim(rem);
        if dr == 0 {
            break;
        }
    }
    (poly_trim(quot), rem)
}

pub(crate) fn poly_mod(a: &[Rat], m: &[Rat]) -> Vec<Rat> {
    poly_divrem(a, m).1
}

pub(crate) fn poly_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = poly_trim(a.to_vec());
    let mut y = poly_trim(b.to_vec());
    while !y.iter().all(Rat::is_zero) {
        let r = poly_divrem(&x, &y).1;
        x = y;
        y = r;
    }
    // normalize monic
    if let Some(lead) = x.last().cloned() {
        if !lead.is_zero() && !lead.is_one() {
            let inv = lead.recip();
            for c in &mut x {
                *c *= &inv;
            }
        }
    }
    x
}

/// Bezout coefficients `(u, v)` with `u·a + v·b = gcd(a, b)`, where the gcd
/// of coprime inputs is normalized to 1.
pub(crate) fn poly_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    let (mut u0, mut u1) = (vec![Rat::one()], vec![Rat::zero()]);
    let (mut v0, mut v1) = (vec![Rat::zero()], vec![Rat::one()]);
    while !r1.iter().all(Rat::is_zero) {
        let (q, r) = poly_divrem(&r0, &r1);
        let qu = poly_mul(&q, &u1);
        let qv = poly_mul(&q, &v1);
        let nu = poly_sub(&u0, &qu);
        let nv = poly_sub(&v0, &qv);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    // scale so the gcd is monic (1 for coprime inputs)
    let lead = r0.last().cloned().unwrap_or_else(Rat::one);
    if !lead.is_zero() && !lead.is_one() {
        let inv = lead.recip();
        u0 = u0.iter().map(|c| c * &inv).collect();
        v0 = v0.iter().map(|c| c * &inv).collect();
    }
    (u0, v0)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

pub(crate) fn poly_derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return vec![Rat::zero()];
    }
    poly_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rat::from_int(i as i64))
            .collect(),
    )
}

/// Splits `mp` as `(x − λ)^k · rest` for a rational root `λ` of its
/// square-free part, when one exists and both factors are nonconstant.
pub(crate) fn coprime_split(mp: &[Rat]) -> Option<(Vec<Rat>, Vec<Rat>)> {
    let sq = {
        let d = poly_derivative(mp);
        let g = poly_gcd(mp, &d);
        poly_divrem(mp, &g).0
    };
    let root = rational_roots(&sq).into_iter().next()?;
    let linear = vec![-&root, Rat::one()];
    let mut k = 0usize;
    let mut rest = poly_trim(mp.to_vec());
    loop {
        let (q, r) = poly_divrem(&rest, &linear);
        if r.iter().all(Rat::is_zero) {
            rest = q;
            k += 1;
        } else {
            break;
        }
    }
    if k == 0 || poly_deg(&rest) == 0 {
        return None;
    }
    let mut factor = vec![Rat::one()];
    for _ in 0..k {
        factor = poly_mul(&factor, &linear);
    }
    Some((factor, rest))
}

/// All rational roots of `p` (with the rational root theorem on the
/// primitive integer form). Gives up on coefficients too large to factor
/// by trial division, returning what has been found so far.
pub(crate) fn rational_roots(p: &[Rat]) -> Vec<Rat> {
    let p = poly_trim(p.to_vec());
    if p.iter().all(Rat::is_zero) || p.len() == 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut q = p;
    // peel off roots at zero
    while q.first().is_some_and(Rat::is_zero) && q.len() > 1 {
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
        q.remove(0);
    }
    if q.len() == 1 {
        return roots;
    }
    // integerize
    let mut lcm = BigInt::from(1);
    for c in &q {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = q.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let a0 = ints[0].abs();
    let al = ints[ints.len() - 1].abs();
    let (Some(d0), Some(dl)) = (divisors(&a0), divisors(&al)) else {
        return roots;
    };
    for num in &d0 {
        for den in &dl {
            for sign in [1i64, -1] {
                let cand = Rat::new(num * BigInt::from(sign), den.clone());
                if roots.contains(&cand) {
                    continue;
                }
                if eval_poly_scalar(&q, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn eval_poly_scalar(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Positive divisors by trial division; `None` when the number is too big
/// to factor that way.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 {
        return Some(vec![BigInt::from(1)]);
    }
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            divs.push(BigInt::from(d));
            if d != n / d {
                divs.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if divs.len() > 4096 {
            return None;
        }
    }
    divs.sort();
    Some(divs)
}

/// Evaluates a polynomial at an algebra element by Horner's rule.
pub(crate) fn eval_poly(alg: &RawAlg, p: &[Rat], x: &[Rat]) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); alg.dim];
    for c in p.iter().rev() {
        acc = alg.mul_vec(&acc, x);
        for (k, u) in alg.unit.iter().enumerate() {
            let t = c * u;
            acc[k] += &t;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    /// Q[x]/(x² − x): basis {1, x}; x is idempotent.
    fn split_two_dim() -> RawAlg {
        let z = || vec![r(0), r(0)];
        let mut mult = vec![z(); 4];
        mult[0] = vec![r(1), r(0)]; // 1·1
        mult[1] = vec![r(0), r(1)]; // 1·x
        mult[2] = vec![r(0), r(1)]; // x·1
        mult[3] = vec![r(0), r(1)]; // x·x = x
        RawAlg {
            dim: 2,
            unit: vec![r(1), r(0)],
            mult,
        }
    }

    /// Q[i] = Q[x]/(x² + 1): a field, not split.
    fn gaussian_field() -> RawAlg {
        let mut mult = vec![vec![r(0), r(0)]; 4];
        mult[0] = vec![r(1), r(0)];
        mult[1] = vec![r(0), r(1)];
        mult[2] = vec![r(0), r(1)];
        mult[3] = vec![r(-1), r(0)];
        RawAlg {
            dim: 2,
            unit: vec![r(1), r(0)],
            mult,
        }
    }

    /// Dual numbers Q[x]/(x²): local, radical spanned by x.
    fn dual_numbers() -> RawAlg {
        let mut mult = vec![vec![r(0), r(0)]; 4];
        mult[0] = vec![r(1), r(0)];
        mult[1] = vec![r(0), r(1)];
        mult[2] = vec![r(0), r(1)];
        mult[3] = vec![r(0), r(0)];
        RawAlg {
            dim: 2,
            unit: vec![r(1), r(0)],
            mult,
        }
    }

    #[test]
    fn radical_of_dual_numbers() {
        let rad = dual_numbers().radical();
        assert_eq!(rad.dim(), 1);
        assert!(rad.contains(&[r(0), r(1)]));
    }

    #[test]
    fn splits_q_times_q() {
        let fam = primitive_family(&split_two_dim()).unwrap();
        assert_eq!(fam.len(), 2);
        let alg = split_two_dim();
        for e in &fam {
            assert!(alg.is_idempotent(e));
        }
        let sum: Vec<Rat> = (0..2).map(|k| &fam[0][k] + &fam[1][k]).collect();
        assert_eq!(sum, alg.unit);
        assert!(alg.mul_vec(&fam[0], &fam[1]).iter().all(Rat::is_zero));
    }

    #[test]
    fn local_algebra_has_one_idempotent() {
        let fam = primitive_family(&dual_numbers()).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0], dual_numbers().unit);
    }

    #[test]
    fn gaussian_rationals_not_split() {
        assert!(matches!(
            primitive_family(&gaussian_field()),
            Err(Error::NotSplit { .. })
        ));
    }

    #[test]
    fn minpoly_of_idempotent() {
        let alg = split_two_dim();
        let mp = alg.minpoly(&[r(0), r(1)]);
        assert_eq!(mp, vec![r(0), r(-1), r(1)]); // x² − x
    }

    #[test]
    fn poly_ext_gcd_bezout() {
        // (x) and (x − 1)
        let f = vec![r(0), r(1)];
        let g = vec![r(-1), r(1)];
        let (u, v) = poly_ext_gcd(&f, &g);
        let lhs = poly_sub_pub(&poly_mul(&u, &f), &poly_mul(&v, &g).iter().map(|c| -c).collect::<Vec<_>>());
        assert_eq!(poly_trim(lhs), vec![r(1)]);
    }

    fn poly_sub_pub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        super::poly_sub(a, b)
    }

    #[test]
    fn rational_roots_small() {
        // (x − 2)(x + 3)(2x − 1)
        let p = poly_mul(&poly_mul(&[r(-2), r(1)], &[r(3), r(1)]), &[r(-1), r(2)]);
        let roots = rational_roots(&p);
        assert_eq!(roots, vec![r(-3), Rat::parse("1/2").unwrap(), r(2)]);
    }
}
