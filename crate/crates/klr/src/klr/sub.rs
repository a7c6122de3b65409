//! Submodules, quotients and an irreducibility test for finite modules.
//!
//! Subspaces are spanned by vectors homogeneous in word and degree and kept
//! in fully reduced echelon form, so the non-pivot basis vectors give a graded
//! complement and quotients inherit a homogeneous basis.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::module::{vec_add_scaled, BasisVector, FiniteModule, Matrix, Vector};
use super::poly::Coeff;
use crate::error::{KlrError, Result};
use crate::words::Word;

/// A subspace in reduced echelon form, keyed by pivot index.
#[derive(Clone, Debug, Default)]
pub struct Subspace {
    rows: BTreeMap<usize, Vector>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &Vector)> {
        self.rows.iter().map(|(p, r)| (*p, r))
    }

    /// The representative of `v` modulo the subspace supported off the pivots.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (p, row) in &self.rows {
            if let Some(c) = out.get(p).cloned() {
                vec_add_scaled(&mut out, row, &-c);
            }
        }
        out
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_empty()
    }

    /// Add `v`; returns the new normalised row, or `None` if `v` was already in the span.
    pub fn insert(&mut self, v: &Vector) -> Option<Vector> {
        let r = self.reduce(v);
        let (&p, c) = r.iter().next()?;
        let inv = c.recip();
        let r: Vector = r.iter().map(|(k, x)| (*k, x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                vec_add_scaled(row, &r, &-c);
            }
        }
        self.rows.insert(p, r.clone());
        Some(r)
    }

    /// Coordinates of a member in the row basis, by pivot order.
    fn coords(&self, v: &Vector) -> Vec<(usize, Coeff)> {
        self.rows.keys().enumerate().filter_map(|(n, p)| v.get(p).map(|c| (n, c.clone()))).collect()
    }
}

fn generators(m: &FiniteModule) -> Vec<&Matrix> {
    m.y.iter().chain(m.psi.iter().flatten()).collect()
}

/// Split a vector into its word- and degree-homogeneous parts.
pub fn homogeneous_parts(m: &FiniteModule, v: &Vector) -> Vec<Vector> {
    let mut parts: BTreeMap<(&Word, i64), Vector> = BTreeMap::new();
    for (k, c) in v {
        let b = &m.basis[*k];
        parts.entry((&b.word, b.degree)).or_default().insert(*k, c.clone());
    }
    parts.into_values().collect()
}

/// The submodule generated by `seeds`.
pub fn generated(m: &FiniteModule, seeds: &[Vector]) -> Subspace {
    let gens = generators(m);
    let mut sub = Subspace::new();
    let mut queue: Vec<Vector> = seeds.iter().flat_map(|v| homogeneous_parts(m, v)).collect();
    while let Some(v) = queue.pop() {
        if let Some(r) = sub.insert(&v) {
            for g in &gens {
                let w = g.apply(&r);
                if !w.is_empty() {
                    queue.push(w);
                }
            }
        }
    }
    sub
}

/// The action restricted to a submodule, in the basis of its echelon rows.
pub fn submodule(m: &FiniteModule, sub: &Subspace) -> Result<FiniteModule> {
    let basis: Vec<BasisVector> = sub.pivots().map(|p| m.basis[p].clone()).collect();
    let mut out = FiniteModule::zero_action(&m.datum, m.blocks.clone(), basis)?;
    let restrict = |g: &Matrix| -> Result<Matrix> {
        let mut mat = Matrix::zero(sub.dim());
        for (col, (_, row)) in sub.rows().enumerate() {
            let img = g.apply(row);
            if !sub.contains(&img) {
                return Err(KlrError::Module("subspace is not a submodule".into()));
            }
            for (r, c) in sub.coords(&img) {
                mat.set(r, col, c);
            }
        }
        Ok(mat)
    };
    for (t, g) in m.y.iter().enumerate() {
        out.y[t] = restrict(g)?;
    }
    for (a, g) in m.psi.iter().enumerate() {
        if let Some(g) = g {
            out.psi[a] = Some(restrict(g)?);
        }
    }
    Ok(out)
}

/// `M / N` on the basis vectors of `M` that are not pivots of `N`.
pub fn quotient(m: &FiniteModule, sub: &Subspace) -> Result<FiniteModule> {
    let keep: Vec<usize> = (0..m.dim()).filter(|k| !sub.rows.contains_key(k)).collect();
    let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(n, &k)| (k, n)).collect();
    let basis = keep.iter().map(|&k| m.basis[k].clone()).collect();
    let mut out = FiniteModule::zero_action(&m.datum, m.blocks.clone(), basis)?;
    let project = |g: &Matrix| {
        let mut mat = Matrix::zero(keep.len());
        for (col, &k) in keep.iter().enumerate() {
            for (r, c) in sub.reduce(&g.cols[k]) {
                mat.set(pos[&r], col, c);
            }
        }
        mat
    };
    for (t, g) in m.y.iter().enumerate() {
        out.y[t] = project(g);
    }
    for (a, g) in m.psi.iter().enumerate() {
        if let Some(g) = g {
            out.psi[a] = Some(project(g));
        }
    }
    Ok(out)
}

const PRIMES: [u64; 2] = [2_147_483_629, 2_147_483_587];

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, p - 2, a % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn reduce_mod(c: &Coeff, p: u64) -> Option<u64> {
    let pb = num_bigint::BigInt::from(p);
    let d = c.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = c.numer().mod_floor(&pb).to_u64()?;
    Some(n * inv_mod(d, p) % p)
}

/// Dimension of the algebra generated by the action, computed modulo `p`.
fn algebra_rank_mod(m: &FiniteModule, p: u64, stop_at: usize) -> Option<usize> {
    let n = m.dim();
    let dense = |g: &Matrix| -> Option<Vec<u64>> {
        let mut out = vec![0u64; n * n];
        for (col, v) in g.cols.iter().enumerate() {
            for (row, c) in v {
                out[row * n + col] = reduce_mod(c, p)?;
            }
        }
        Some(out)
    };
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for g in generators(m) {
        gens.push(dense(g)?);
    }
    // idempotents e(i) as diagonal projections
    let mut words: BTreeMap<&Word, Vec<usize>> = BTreeMap::new();
    for (k, b) in m.basis.iter().enumerate() {
        words.entry(&b.word).or_default().push(k);
    }
    for ks in words.values() {
        let mut e = vec![0u64; n * n];
        for &k in ks {
            e[k * n + k] = 1;
        }
        gens.push(e);
    }
    let mul = |a: &[u64], b: &[u64]| {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % p;
                }
            }
        }
        out
    };
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    let insert = |mut v: Vec<u64>, echelon: &mut Vec<(usize, Vec<u64>)>| -> bool {
        for (piv, row) in echelon.iter() {
            let c = v[*piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * r) % p;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(piv) => {
                let inv = inv_mod(v[piv], p);
                for x in v.iter_mut() {
                    *x = *x * inv % p;
                }
                echelon.push((piv, v));
                true
            }
        }
    };
    let mut id = vec![0u64; n * n];
    for k in 0..n {
        id[k * n + k] = 1;
    }
    let mut members = vec![id.clone()];
    insert(id, &mut echelon);
    let mut next = 0;
    while next < members.len() && echelon.len() < stop_at {
        let x = members[next].clone();
        next += 1;
        for g in &gens {
            let y = mul(g, &x);
            if insert(y.clone(), &mut echelon) {
                members.push(y);
            }
        }
    }
    Some(echelon.len())
}

/// Burnside's criterion: the action generates the full matrix algebra, so the
/// module is absolutely irreducible. A full rank modulo a prime forces full rank
/// over the rationals; `None` means the test was skipped for size.
pub fn is_absolutely_irreducible(m: &FiniteModule, max_dim: usize) -> Option<bool> {
    let n = m.dim();
    if n == 0 {
        return Some(false);
    }
    if n > max_dim {
        return None;
    }
    for p in PRIMES {
        if let Some(r) = algebra_rank_mod(m, p, n * n) {
            return Some(r == n * n);
        }
    }
    None
}

/// Vectors of the weight space `w` killed by every `y`, grouped by degree.
fn y_kernel(m: &FiniteModule, w: &Word) -> Vec<Vector> {
    let mut by_deg: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for k in m.weight_space(w) {
        by_deg.entry(m.basis[k].degree).or_default().push(k);
    }
    let mut out = Vec::new();
    for ks in by_deg.values() {
        // rows: all y-images stacked; solve for the null space over the weight-space coordinates
        let mut sub = Subspace::new();
        let mut images: Vec<Vector> = Vec::new();
        for &k in ks {
            let mut img = Vector::new();
            for (t, y) in m.y.iter().enumerate() {
                for (r, c) in &y.cols[k] {
                    img.insert(t * m.dim() + r, c.clone());
                }
            }
            images.push(img);
        }
        // null space via echelon on augmented vectors [image | unit]
        let off = m.y.len() * m.dim();
        for (n, &k) in ks.iter().enumerate() {
            let mut v = images[n].clone();
            v.insert(off + k, Coeff::one());
            sub.insert(&v);
        }
        for (_, row) in sub.rows() {
            if row.keys().all(|&i| i >= off) {
                out.push(row.iter().map(|(i, c)| (i - off, c.clone())).collect());
            }
        }
    }
    out
}

/// A simple submodule of a module all of whose composition factors share the
/// highest weight `top`, found by descending through cyclic submodules.
pub fn simple_submodule(m: &FiniteModule, top: &Word, max_dim: usize) -> Result<FiniteModule> {
    let mut cur = m.clone();
    loop {
        match is_absolutely_irreducible(&cur, max_dim) {
            Some(true) => return Ok(cur),
            None => return Err(KlrError::SizeGuard(format!("irreducibility test on a module of dimension {}", cur.dim()))),
            Some(false) => {}
        }
        let mut seeds: Vec<Vector> = Vec::new();
        let mut ks = cur.weight_space(top);
        ks.sort_by_key(|&k| std::cmp::Reverse(cur.basis[k].degree));
        seeds.extend(ks.iter().map(|&k| super::module::unit(k)));
        seeds.extend(y_kernel(&cur, top));
        let mut next = None;
        for s in seeds {
            let sub = generated(&cur, &[s]);
            if sub.dim() > 0 && sub.dim() < cur.dim() {
                next = Some(sub);
                break;
            }
        }
        let sub = next.ok_or_else(|| KlrError::Module("could not isolate a simple submodule".into()))?;
        cur = submodule(&cur, &sub)?;
    }
}

/// Shift the grading so that the degrees are symmetric about zero.
pub fn center_grading(m: &FiniteModule) -> Result<FiniteModule> {
    let lo = m.basis.iter().map(|b| b.degree).min().unwrap_or(0);
    let hi = m.basis.iter().map(|b| b.degree).max().unwrap_or(0);
    if (lo + hi).is_odd() {
        return Err(KlrError::Module(format!("degrees {lo}..{hi} have no centre")));
    }
    Ok(m.shift(-(lo + hi) / 2))
}
