//! Weight graphs of simply-laced data and the homogeneous modules `S(C)`.
//!
//! Two words of the same weight are joined when they differ by swapping
//! adjacent letters `i, j` with `a_ij = 0`. A connected component `C` is
//! homogeneous when its words avoid repeated letters without two neighbours
//! in between; then `S(C)` has basis `C`, concentrated in degree 0.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fs;
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanDatum, RootVector};
use crate::error::{KlrError, Result};
use crate::klr::module::{BasisVector, FiniteModule, Matrix};
use crate::klr::poly::coeff;
use crate::words::{lex_cmp, weight, words_of_weight, Word};

/// Default cap on the number of words visited by a breadth-first search.
pub const DEFAULT_COMPONENT_GUARD: usize = 200_000;

/// A connected component of the weight graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub weight: RootVector,
    /// Members in increasing lexicographic order.
    pub members: Vec<Word>,
    /// The smallest member.
    pub representative: Word,
    pub homogeneous: bool,
    pub strongly_homogeneous: bool,
    /// Column `j` is `w_C(alpha_j)`.
    pub w_c: Vec<Vec<i64>>,
    /// Positive roots sent to negative roots by `w_C^{-1}`.
    pub phi: Vec<RootVector>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }
}

fn check_simply_laced(datum: &CartanDatum) -> Result<()> {
    if datum.is_simply_laced() {
        Ok(())
    } else {
        Err(KlrError::NotSimplyLaced)
    }
}

/// Breadth-first closure of `word` under admissible transpositions.
pub fn component_members(datum: &CartanDatum, word: &Word, guard: usize) -> Result<Vec<Word>> {
    check_simply_laced(datum)?;
    word.check(datum)?;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.0.clone());
    queue.push_back(word.0.clone());
    while let Some(w) = queue.pop_front() {
        for r in 0..w.len().saturating_sub(1) {
            if w[r] != w[r + 1] && datum.a(w[r], w[r + 1]) == 0 {
                let mut s = w.clone();
                s.swap(r, r + 1);
                if seen.insert(s.clone()) {
                    if seen.len() > guard {
                        return Err(KlrError::SizeGuard(format!("component exceeds {guard} words")));
                    }
                    queue.push_back(s);
                }
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().map(Word).collect();
    out.sort_by(|a, b| lex_cmp(datum, &a.0, &b.0));
    Ok(out)
}

/// Repeated letters are separated by at least two neighbours.
pub fn enc(datum: &CartanDatum, w: &[u8]) -> bool {
    for r in 0..w.len() {
        for s in r + 1..w.len() {
            if w[r] == w[s] {
                let nb = (r + 1..s).filter(|&t| datum.a(w[r], w[t]) == -1).count();
                if nb < 2 {
                    return false;
                }
            }
        }
    }
    true
}

/// Consecutive repeats of a letter are separated by exactly two neighbours.
pub fn enc1(datum: &CartanDatum, w: &[u8]) -> bool {
    for r in 0..w.len() {
        if let Some(s) = (r + 1..w.len()).find(|&s| w[s] == w[r]) {
            let nb = (r + 1..s).filter(|&t| datum.a(w[r], w[t]) == -1).count();
            if nb != 2 {
                return false;
            }
        }
    }
    true
}

/// A first occurrence of a letter has at most one neighbour before it.
pub fn enc2(datum: &CartanDatum, w: &[u8]) -> bool {
    for s in 0..w.len() {
        if w[..s].contains(&w[s]) {
            continue;
        }
        if (0..s).filter(|&t| datum.a(w[t], w[s]) == -1).count() > 1 {
            return false;
        }
    }
    true
}

fn reflect(datum: &CartanDatum, i: u8, v: &mut [i64]) {
    // r_i(v) = v - <v, alpha_i^vee> alpha_i
    let mut p = 0;
    for j in datum.letters() {
        p += v[j as usize - 1] * datum.a(i, j);
    }
    v[i as usize - 1] -= p;
}

/// Apply `r_{i_d} ... r_{i_1}` (first letter first) to a lattice vector.
fn apply_word(datum: &CartanDatum, w: &[u8], v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    for &i in w {
        reflect(datum, i, &mut v);
    }
    v
}

/// `w_C` as the matrix of images of the simple roots.
pub fn weyl_matrix(datum: &CartanDatum, w: &Word) -> Vec<Vec<i64>> {
    let n = datum.rank();
    (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            apply_word(datum, &w.0, &e)
        })
        .collect()
}

/// `{beta > 0 : w^{-1}(beta) < 0}` for `w = r_{i_d} ... r_{i_1}`.
pub fn inversion_roots(datum: &CartanDatum, w: &Word) -> Vec<RootVector> {
    let inv: Vec<u8> = w.0.iter().rev().copied().collect();
    datum
        .positive_roots()
        .into_iter()
        .filter(|b| {
            let v: Vec<i64> = b.0.iter().map(|&c| c as i64).collect();
            apply_word(datum, &inv, &v).iter().all(|&c| c <= 0)
        })
        .collect()
}

/// The component of the weight graph containing `word`.
pub fn component(datum: &CartanDatum, word: &Word, guard: usize) -> Result<Component> {
    let members = component_members(datum, word, guard)?;
    Ok(describe(datum, members))
}

fn describe(datum: &CartanDatum, members: Vec<Word>) -> Component {
    let rep = members[0].clone();
    Component {
        weight: weight(datum, &rep.0),
        homogeneous: enc(datum, &rep.0),
        strongly_homogeneous: enc1(datum, &rep.0) && enc2(datum, &rep.0),
        w_c: weyl_matrix(datum, &rep),
        phi: inversion_roots(datum, &rep),
        representative: rep,
        members,
    }
}

/// All components of the weight graph `G_alpha`, ordered by representative.
pub fn all_components(datum: &CartanDatum, alpha: &RootVector, guard: usize) -> Result<Vec<Component>> {
    check_simply_laced(datum)?;
    let words = words_of_weight(datum, alpha);
    if words.len() > guard {
        return Err(KlrError::SizeGuard(format!("{} words of weight {alpha}", words.len())));
    }
    let mut done: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for w in words {
        if done.contains(&w.0) {
            continue;
        }
        let members = component_members(datum, &w, guard)?;
        done.extend(members.iter().map(|m| m.0.clone()));
        out.push(describe(datum, members));
    }
    out.sort_by(|a, b| lex_cmp(datum, &a.representative.0, &b.representative.0));
    Ok(out)
}

/// `d! / prod_{beta in Phi(C)} ht(beta)`.
pub fn hook_dimension(c: &Component) -> Result<BigInt> {
    if !c.strongly_homogeneous {
        return Err(KlrError::NotStronglyHomogeneous);
    }
    let d = c.weight.height();
    let mut num = BigInt::one();
    for k in 2..=d {
        num *= k;
    }
    let mut den = BigInt::one();
    for b in &c.phi {
        den *= b.height();
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(KlrError::NotDivisible(format!("{d}! by the product of hook heights {den}")));
    }
    Ok(q)
}

/// The homogeneous module `S(C)`.
pub fn build_s(datum: &CartanDatum, c: &Component) -> Result<FiniteModule> {
    if !c.homogeneous {
        return Err(KlrError::NotHomogeneous);
    }
    let index: HashMap<&[u8], usize> = c.members.iter().enumerate().map(|(k, w)| (w.0.as_slice(), k)).collect();
    let basis = c.members.iter().map(|w| BasisVector { word: w.clone(), degree: 0 }).collect();
    let mut m = FiniteModule::zero_action(datum, vec![c.weight.clone()], basis)?;
    let d = c.weight.height() as usize;
    for r in 0..d.saturating_sub(1) {
        let mut mat = Matrix::zero(c.size());
        for (k, w) in c.members.iter().enumerate() {
            let mut s = w.0.clone();
            s.swap(r, r + 1);
            if let Some(&j) = index.get(s.as_slice()) {
                mat.set(j, k, coeff(1));
            }
        }
        m.psi[r] = Some(mat);
    }
    Ok(m)
}

/// Memo of components keyed by their smallest member, optionally persisted
/// as JSON files in a directory.
pub struct ComponentCache {
    dir: Option<PathBuf>,
    mem: RwLock<HashMap<(String, Vec<u8>), Arc<Component>>>,
}

impl ComponentCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir, mem: RwLock::new(HashMap::new()) }
    }

    /// Reads the directory from `KLR_CACHE_DIR` when set.
    pub fn from_env() -> Self {
        Self::new(std::env::var_os("KLR_CACHE_DIR").map(PathBuf::from))
    }

    fn file(&self, datum: &CartanDatum, rep: &[u8]) -> Option<PathBuf> {
        let name = rep.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("-");
        self.dir.as_ref().map(|d| d.join(format!("component-{}-{name}.json", datum.name())))
    }

    /// The component containing `word`, computed at most once per representative.
    pub fn get(&self, datum: &CartanDatum, word: &Word, guard: usize) -> Result<Arc<Component>> {
        let key_name = datum.name();
        if let Some(c) = self.lookup(&key_name, &word.0) {
            return Ok(c);
        }
        let members = component_members(datum, word, guard)?;
        let rep = members[0].0.clone();
        if let Some(c) = self.mem.read().unwrap().get(&(key_name.clone(), rep.clone())) {
            return Ok(c.clone());
        }
        if let Some(path) = self.file(datum, &rep) {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Ok(c) = serde_json::from_str::<Component>(&text) {
                    if c.members.len() == members.len() {
                        let c = Arc::new(c);
                        self.mem.write().unwrap().insert((key_name, rep), c.clone());
                        return Ok(c);
                    }
                }
            }
        }
        let c = Arc::new(describe(datum, members));
        if let Some(path) = self.file(datum, &rep) {
            // a failed write only loses the memo
            if fs::create_dir_all(path.parent().unwrap()).is_ok() {
                let _ = fs::write(&path, serde_json::to_string(&*c).unwrap_or_default());
            }
        }
        self.mem.write().unwrap().insert((key_name, rep), c.clone());
        Ok(c)
    }

    fn lookup(&self, name: &str, w: &[u8]) -> Option<Arc<Component>> {
        self.mem
            .read()
            .unwrap()
            .iter()
            .find(|((n, _), c)| n == name && c.members.iter().any(|m| m.0 == w))
            .map(|(_, c)| c.clone())
    }
}
