//! The catalogue of cuspidal modules `L_beta`, one per positive root, and the
//! characters of standard modules built from them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::cartan::{CartanDatum, CartanType, RootVector};
use crate::error::{KlrError, Result};
use crate::goodlyndon::{GoodWord, KappaSource, LyndonTable};
use crate::homog::{build_s, component, enc, DEFAULT_COMPONENT_GUARD};
use crate::klr::algebra::{KlrAlgebra, Term};
use crate::klr::module::{set_int, BasisVector, FiniteModule, Matrix};
use crate::klr::perm;
use crate::klr::poly::{coeff, YPoly};
use crate::klr::verify::{poly_acts_as_zero, verify_relations, Witness};
use crate::klr::sub::{center_grading, generated, is_absolutely_irreducible, quotient, simple_submodule};
use crate::klr::{induce, induction_product, quotient_module, DEFAULT_INDUCE_GUARD};
use crate::laurent::{qint, LaurentPoly};
use crate::shuffle::{shuffle_power, WordSum};
use crate::words::{lex_cmp, standard_factorization, Word};

/// How a cuspidal module is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    OneDimensional,
    Homogeneous,
    #[serde(rename = "doubled-B1")]
    DoubledB1,
    #[serde(rename = "induced-B")]
    InducedB,
    #[serde(rename = "extended-C")]
    ExtendedC,
    #[serde(rename = "quotient-G2")]
    QuotientG2,
    SubdiagramReduction,
    InducedHead,
    Unsupported,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        write!(f, "{}", s.as_str().unwrap())
    }
}

/// One row of the catalogue.
#[derive(Clone, Debug, Serialize)]
pub struct CuspidalEntry {
    pub root: RootVector,
    pub word: Word,
    pub construction: Construction,
    /// Coefficient of `word` in the character; absent when unsupported.
    pub kappa: Option<LaurentPoly>,
    /// The known character, when one is available in closed form.
    #[serde(skip)]
    pub fixture: Option<WordSum>,
    /// Why the root is unsupported.
    pub reason: Option<String>,
}

/// The twelve roots of `E8` with `alpha_1`-coefficient 2 other than
/// `2,2,3,4,3,2,1,1` and `2,2,3,4,3,2,1,0`.
pub fn e8_exceptional(datum: &CartanDatum) -> Vec<RootVector> {
    if datum.cartan_type() != CartanType::E || datum.rank() != 8 {
        return Vec::new();
    }
    let delta = RootVector(vec![2, 2, 3, 4, 3, 2, 1, 1]);
    let eps = RootVector(vec![2, 2, 3, 4, 3, 2, 1, 0]);
    datum
        .positive_roots()
        .into_iter()
        .filter(|r| r.0[0] == 2 && r != &delta && r != &eps)
        .collect()
}

fn segment(from: u8, to: u8) -> Word {
    Word::range(from, to)
}

/// Every letter of `w` is adjacent in the diagram to the next one and no letter repeats.
fn chain_word(datum: &CartanDatum, w: &Word) -> bool {
    let mut seen = std::collections::HashSet::new();
    w.0.iter().all(|l| seen.insert(*l)) && w.0.windows(2).all(|p| datum.dot(p[0], p[1]) != 0)
}

fn multiplicity_free(b: &RootVector) -> bool {
    b.0.iter().all(|&c| c <= 1)
}

/// `m` = last index with coefficient 2 and `n` = last index in the support.
fn doubled_range(b: &RootVector) -> (u8, u8) {
    let m = b.0.iter().rposition(|&c| c == 2).map_or(0, |k| k + 1) as u8;
    let n = b.0.iter().rposition(|&c| c > 0).unwrap() as u8 + 1;
    (m, n)
}

fn b_fixture(datum: &CartanDatum, m: u8, n: u8) -> WordSum {
    let inner = WordSum::word(segment(1, n)).shuffle(&WordSum::word(segment(2, m)), datum);
    inner.prepend(&Word(vec![1])).scale(&(LaurentPoly::q() + LaurentPoly::monomial(-1, 1)))
}

fn c_fixture(datum: &CartanDatum, m: u8, n: u8) -> WordSum {
    let inner = WordSum::word(segment(2, n)).shuffle(&WordSum::word(segment(2, m)), datum);
    inner.prepend(&Word(vec![1])).scale(&LaurentPoly::monomial(if m == n { 1 } else { 0 }, 1))
}

fn g2_fixtures(root: &RootVector) -> Option<WordSum> {
    let q1 = |n| qint(n, 2).unwrap();
    let w = |v: &[u8]| Word(v.to_vec());
    Some(match root.0.as_slice() {
        [1, 0] => WordSum::word(w(&[1])),
        [0, 1] => WordSum::word(w(&[2])),
        [1, 1] => WordSum::word(w(&[1, 2])),
        [2, 1] => WordSum::term(w(&[1, 1, 2]), q1(2)),
        [3, 1] => WordSum::term(w(&[1, 1, 1, 2]), &q1(2) * &q1(3)),
        [3, 2] => {
            let k = &q1(2) * &q1(3);
            let mut s = WordSum::term(w(&[1, 1, 2, 1, 2]), k.clone());
            s.add_term(w(&[1, 1, 1, 2, 2]), &k * &qint(2, 6).unwrap());
            s
        }
        _ => return None,
    })
}

const HEAD_MAX_DIM: usize = 64;
const REPORT_MAX_DIM: usize = 40;

/// Cuspidal modules for every positive root of one Cartan datum.
pub struct Catalog {
    datum: CartanDatum,
    table: LyndonTable,
    entries: Vec<CuspidalEntry>,
    index: HashMap<RootVector, usize>,
    modules: RwLock<HashMap<RootVector, Arc<FiniteModule>>>,
    /// Size guard for induced modules and component searches.
    pub guard: usize,
}

impl Catalog {
    pub fn new(datum: &CartanDatum) -> Result<Self> {
        let table = LyndonTable::new(datum);
        let exceptional = e8_exceptional(datum);
        let mut entries = Vec::new();
        for (root, word) in table.entries() {
            entries.push(classify(datum, root, word, &exceptional)?);
        }
        let index = entries.iter().enumerate().map(|(k, e)| (e.root.clone(), k)).collect();
        Ok(Self {
            datum: datum.clone(),
            table,
            entries,
            index,
            modules: RwLock::new(HashMap::new()),
            guard: DEFAULT_INDUCE_GUARD,
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn table(&self) -> &LyndonTable {
        &self.table
    }

    pub fn entries(&self) -> &[CuspidalEntry] {
        &self.entries
    }

    pub fn entry(&self, beta: &RootVector) -> Result<&CuspidalEntry> {
        self.index
            .get(beta)
            .map(|&k| &self.entries[k])
            .ok_or_else(|| KlrError::NotARoot(beta.to_string()))
    }

    fn supported(&self, beta: &RootVector) -> Result<&CuspidalEntry> {
        let e = self.entry(beta)?;
        if e.construction == Construction::Unsupported {
            return Err(KlrError::UnsupportedRoot(e.reason.clone().unwrap_or_default()));
        }
        Ok(e)
    }

    /// The cuspidal module `L_beta`, built once and cached.
    pub fn module(&self, beta: &RootVector) -> Result<Arc<FiniteModule>> {
        if let Some(m) = self.modules.read().unwrap().get(beta) {
            return Ok(m.clone());
        }
        let e = self.supported(beta)?;
        let m = Arc::new(self.build(e)?);
        self.modules.write().unwrap().insert(beta.clone(), m.clone());
        Ok(m)
    }

    fn build(&self, e: &CuspidalEntry) -> Result<FiniteModule> {
        let d = &self.datum;
        match e.construction {
            Construction::OneDimensional => one_dimensional(d, &e.word),
            Construction::Homogeneous => {
                let c = component(d, &e.word, DEFAULT_COMPONENT_GUARD)?;
                build_s(d, &c)
            }
            Construction::DoubledB1 => doubled(d, &e.word),
            Construction::InducedB => {
                let (m, n) = doubled_range(&e.root);
                induced_b(d, m, n, self.guard)
            }
            Construction::ExtendedC => {
                let (m, n) = doubled_range(&e.root);
                extended_c(d, m, n, self.guard)
            }
            Construction::QuotientG2 => g2_quotient(d, &e.root),
            Construction::SubdiagramReduction => {
                let r = &e.root.0;
                if r[0] == 0 {
                    // nodes 2, 3, 4 form a C3 in its natural order
                    let inner = Catalog::new(&CartanDatum::new(CartanType::C, 3)?)?;
                    inner.module(&RootVector(r[1..].to_vec()))?.relabel(d, &[0, 2, 3, 4])
                } else {
                    // nodes 1, 2, 3 form a B3 read backwards
                    let b3 = CartanDatum::with_order(CartanType::B, 3, Some(vec![3, 2, 1]))?;
                    let inner = Catalog::new(&b3)?;
                    inner.module(&RootVector(vec![r[2], r[1], r[0]]))?.relabel(d, &[0, 3, 2, 1])
                }
            }
            Construction::InducedHead => self.induced_head(&e.root),
            Construction::Unsupported => Err(KlrError::UnsupportedRoot(e.reason.clone().unwrap_or_default())),
        }
    }

    /// `L_beta` as the simple submodule of `(L_u o L_v) / N`, where `i(beta) = u v` is the
    /// standard factorisation and `N` is generated by the weight spaces of words above
    /// `i(beta)`. Every composition factor of the quotient is `L_beta`; simplicity is
    /// certified by Burnside's criterion.
    pub fn induced_head(&self, beta: &RootVector) -> Result<FiniteModule> {
        let d = &self.datum;
        let word = self.table.word(beta)?.clone();
        if word.len() == 1 {
            return one_dimensional(d, &word);
        }
        let (u, v) = standard_factorization(d, &word.0).expect("length at least 2");
        let root = |w: &Word| {
            self.table
                .root_of(w)
                .cloned()
                .ok_or_else(|| KlrError::Module(format!("factor {w} of {word} is not a good Lyndon word")))
        };
        let prod = induction_product(&*self.module(&root(&u)?)?, &*self.module(&root(&v)?)?, self.guard)?;
        let above: Vec<_> = (0..prod.dim())
            .filter(|&k| lex_cmp(d, &prod.basis[k].word.0, &word.0) == std::cmp::Ordering::Greater)
            .map(crate::klr::module::unit)
            .collect();
        let q = quotient(&prod, &generated(&prod, &above))?;
        if q.weight_space(&word).is_empty() {
            return Err(KlrError::Module(format!("the quotient for {beta} has no {word} weight space")));
        }
        let m = center_grading(&simple_submodule(&q, &word, HEAD_MAX_DIM)?)?;
        match m.q_character().max_word(d) {
            Ok((top, _)) if top == word => Ok(m),
            _ => Err(KlrError::Module(format!("the module built for {beta} does not have highest word {word}"))),
        }
    }

    /// Coefficient of `i(beta)` in `ch_q L_beta`, read off the module when no closed form is known.
    pub fn kappa(&self, beta: &RootVector) -> Result<LaurentPoly> {
        let e = self.supported(beta)?;
        match &e.kappa {
            Some(k) => Ok(k.clone()),
            None => Ok(self.character(beta)?.coeff(&e.word)),
        }
    }

    /// `ch_q L_beta`.
    pub fn character(&self, beta: &RootVector) -> Result<WordSum> {
        Ok(self.module(beta)?.q_character())
    }

    /// `ch_q (L_beta o ... o L_beta)` with `n` factors; the coefficient of `i(beta)^n`
    /// is checked against `q_beta^{-n(n-1)/2} kappa^n [n]!_beta`.
    pub fn power_character(&self, beta: &RootVector, n: u32) -> Result<WordSum> {
        let e = self.supported(beta)?;
        let ch = shuffle_power(&self.datum, &self.character(beta)?, n);
        let top = e.word.repeat(n as usize);
        let norm = self.datum.norm(beta);
        let nn = n as i64;
        let expect = &self.kappa(beta)?.pow(n) * &crate::laurent::qfact(n, norm)?.shift(-(norm / 2) * nn * (nn - 1) / 2);
        let (max, c) = ch.max_word(&self.datum)?;
        if max != top || c != expect {
            return Err(KlrError::CharacterMismatch(format!(
                "power {n} of L_{beta}: leading term {c}*{max}, expected {expect}*{top}"
            )));
        }
        Ok(ch)
    }

    /// `ch_q Delta(i) = q^{s(i)} ch(L_{beta_1}^{o n_1}) o ... o ch(L_{beta_m}^{o n_m})`,
    /// with its leading term checked to be `kappa_i * i`.
    pub fn standard_character(&self, gw: &GoodWord) -> Result<WordSum> {
        let mut acc = WordSum::word(Word::empty());
        for f in &gw.factors {
            acc = acc.shuffle(&self.power_character(&f.root, f.mult)?, &self.datum);
        }
        let acc = acc.scale(&LaurentPoly::monomial(gw.s, 1));
        let kappa = gw.kappa(&self.datum, self)?;
        let (max, c) = acc.max_word(&self.datum)?;
        if max != gw.word || c != kappa {
            return Err(KlrError::CharacterMismatch(format!(
                "standard module of {}: leading term {c}*{max}, expected {kappa}*{}",
                gw.word, gw.word
            )));
        }
        Ok(acc)
    }

    /// Build and check one entry.
    pub fn validate(&self, beta: &RootVector) -> EntryReport {
        let e = match self.entry(beta) {
            Ok(e) => e,
            Err(err) => return EntryReport::failed(beta, err.to_string()),
        };
        let mut r = EntryReport {
            root: e.root.clone(),
            word: e.word.clone(),
            construction: e.construction,
            dim: None,
            relations: None,
            witness: None,
            bar_invariant: None,
            leading_term: None,
            fixture: None,
            irreducible: None,
            error: e.reason.clone(),
        };
        if e.construction == Construction::Unsupported {
            return r;
        }
        let m = match self.module(beta) {
            Ok(m) => m,
            Err(err) => {
                r.error = Some(err.to_string());
                return r;
            }
        };
        r.dim = Some(m.dim());
        let rep = verify_relations(&m);
        r.relations = Some(rep.passed());
        r.witness = rep.first_failure().cloned();
        let ch = m.q_character();
        r.bar_invariant = Some(ch.bar() == ch);
        r.leading_term = Some(match ch.max_word(&self.datum) {
            Ok((w, c)) => w == e.word && e.kappa.as_ref().is_none_or(|k| k == &c),
            Err(_) => false,
        });
        r.fixture = e.fixture.as_ref().map(|f| f == &ch);
        r.irreducible = is_absolutely_irreducible(&m, REPORT_MAX_DIM);
        if e.construction == Construction::ExtendedC {
            // y1 - y2^2 vanishes on the module
            let d = m.strands();
            let p = YPoly::var(d, 0).add(&YPoly::var(d, 1).mul(&YPoly::var(d, 1)).scale(&coeff(-1)));
            if poly_acts_as_zero(&m, &p).is_some() {
                r.error = Some("y1 - y2^2 does not act as zero".into());
            }
        }
        r
    }

    pub fn validate_all(&self) -> Vec<EntryReport> {
        self.entries.iter().map(|e| self.validate(&e.root)).collect()
    }
}

impl KappaSource for Catalog {
    fn lyndon_kappa(&self, beta: &RootVector) -> Result<LaurentPoly> {
        self.kappa(beta)
    }
}

/// Outcome of building and checking one catalogue entry.
#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub root: RootVector,
    pub word: Word,
    pub construction: Construction,
    pub dim: Option<usize>,
    pub relations: Option<bool>,
    pub witness: Option<Witness>,
    pub bar_invariant: Option<bool>,
    pub leading_term: Option<bool>,
    pub fixture: Option<bool>,
    /// Burnside certificate; `None` above the size limit.
    pub irreducible: Option<bool>,
    pub error: Option<String>,
}

impl EntryReport {
    fn failed(root: &RootVector, err: String) -> Self {
        Self {
            root: root.clone(),
            word: Word::empty(),
            construction: Construction::Unsupported,
            dim: None,
            relations: None,
            witness: None,
            bar_invariant: None,
            leading_term: None,
            fixture: None,
            irreducible: None,
            error: Some(err),
        }
    }

    pub fn supported(&self) -> bool {
        self.construction != Construction::Unsupported
    }

    /// Every check that applies passed.
    pub fn passed(&self) -> bool {
        self.supported()
            && self.error.is_none()
            && self.relations == Some(true)
            && self.bar_invariant == Some(true)
            && self.leading_term == Some(true)
            && self.fixture != Some(false)
            && self.irreducible != Some(false)
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |x: Option<bool>| match x {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        write!(f, "{:<22} {:<24} {:<20}", self.root.to_string(), self.word.to_string(), self.construction.to_string())?;
        if !self.supported() {
            return write!(f, " {}", self.error.as_deref().unwrap_or("unsupported"));
        }
        write!(
            f,
            " dim {:<5} relations {:<4} bar {:<4} top {:<4} fixture {:<4} simple {}",
            self.dim.map_or("-".to_string(), |d| d.to_string()),
            flag(self.relations),
            flag(self.bar_invariant),
            flag(self.leading_term),
            flag(self.fixture),
            flag(self.irreducible)
        )?;
        if let Some(e) = &self.error {
            write!(f, " error: {e}")?;
        }
        Ok(())
    }
}

fn unsupported(root: &RootVector, word: &Word, reason: &str) -> CuspidalEntry {
    CuspidalEntry {
        root: root.clone(),
        word: word.clone(),
        construction: Construction::Unsupported,
        kappa: None,
        fixture: None,
        reason: Some(reason.into()),
    }
}

fn entry(root: &RootVector, word: &Word, c: Construction, fixture: Option<WordSum>) -> CuspidalEntry {
    let kappa = match &fixture {
        Some(f) => f.coeff(word),
        None => LaurentPoly::one(),
    };
    CuspidalEntry { root: root.clone(), word: word.clone(), construction: c, kappa: Some(kappa), fixture, reason: None }
}

fn classify(datum: &CartanDatum, root: &RootVector, word: &Word, exceptional: &[RootVector]) -> Result<CuspidalEntry> {
    use Construction::*;
    let ty = datum.cartan_type();
    if ty == CartanType::A {
        return Ok(entry(root, word, Homogeneous, None));
    }
    if datum.is_simply_laced() {
        if exceptional.contains(root) {
            return Ok(unsupported(root, word, "𝓔 set"));
        }
        if datum.is_natural_order() || enc(datum, &word.0) {
            return Ok(entry(root, word, Homogeneous, None));
        }
        return Ok(head(root, word));
    }
    if multiplicity_free(root) && chain_word(datum, word) {
        let fixture = (ty == CartanType::G && datum.is_natural_order()).then(|| g2_fixtures(root)).flatten();
        return Ok(entry(root, word, OneDimensional, fixture));
    }
    if !datum.is_natural_order() {
        return Ok(head(root, word));
    }
    let (m, n) = doubled_range(root);
    Ok(match ty {
        CartanType::B if m == 1 => entry(root, word, DoubledB1, Some(b_fixture(datum, m, n))),
        CartanType::B => entry(root, word, InducedB, Some(b_fixture(datum, m, n))),
        CartanType::C => entry(root, word, ExtendedC, Some(c_fixture(datum, m, n))),
        CartanType::G if root.0 == [2, 1] => entry(root, word, DoubledB1, g2_fixtures(root)),
        CartanType::G => entry(root, word, QuotientG2, g2_fixtures(root)),
        CartanType::F if root.0[0] == 0 => {
            let c3 = CartanDatum::new(CartanType::C, 3)?;
            let (m, n) = doubled_range(&RootVector(root.0[1..].to_vec()));
            let map = |w: &Word| Word(w.0.iter().map(|l| l + 1).collect());
            let f = c_fixture(&c3, m, n);
            let mut mapped = WordSum::zero();
            for (w, c) in f.terms() {
                mapped.add_term(map(w), c.clone());
            }
            entry(root, word, SubdiagramReduction, Some(mapped))
        }
        CartanType::F if root.0[3] == 0 => sub_entry(root, word),
        CartanType::F => unsupported(root, word, "F4 root with full support and a coefficient above 1"),
        _ => unsupported(root, word, "no construction available"),
    })
}

fn head(root: &RootVector, word: &Word) -> CuspidalEntry {
    CuspidalEntry {
        root: root.clone(),
        word: word.clone(),
        construction: Construction::InducedHead,
        kappa: None,
        fixture: None,
        reason: None,
    }
}

fn sub_entry(root: &RootVector, word: &Word) -> CuspidalEntry {
    CuspidalEntry { construction: Construction::SubdiagramReduction, ..head(root, word) }
}

fn one_dimensional(datum: &CartanDatum, word: &Word) -> Result<FiniteModule> {
    let alpha = crate::words::weight(datum, &word.0);
    FiniteModule::zero_action(datum, vec![alpha], vec![BasisVector { word: word.clone(), degree: 0 }])
}

/// Two-dimensional module on the word `(1, 1, ...)`: basis `v_1, v_-1` in degrees `1, -1`,
/// `y_1 v_-1 = -v_1`, `y_2 v_-1 = v_1`, `psi_1 v_1 = v_-1`, everything else zero.
fn doubled(datum: &CartanDatum, word: &Word) -> Result<FiniteModule> {
    let alpha = crate::words::weight(datum, &word.0);
    let basis = vec![BasisVector { word: word.clone(), degree: 1 }, BasisVector { word: word.clone(), degree: -1 }];
    let mut m = FiniteModule::zero_action(datum, vec![alpha], basis)?;
    set_int(&mut m.y[0], 0, 1, -1);
    set_int(&mut m.y[1], 0, 1, 1);
    set_int(m.psi[0].as_mut().unwrap(), 1, 0, 1);
    Ok(m)
}

/// Type B, `beta(m, n)` with `m >= 2`: induce `Res L_{beta(1,n)} (x) L_{alpha(2,m)}` over the
/// last two blocks, then let `psi_1` send `psi_w (x) v_1 (x) v` to `psi_w (x) v_-1 (x) v` when `w` fixes 2.
fn induced_b(datum: &CartanDatum, m: u8, n: u8, guard: usize) -> Result<FiniteModule> {
    let mut w = vec![1u8];
    w.extend(segment(1, n).0);
    let l1n = doubled(datum, &Word(w))?;
    let res = l1n.restrict(&RootVector::simple(datum.rank(), 1))?;
    let lg = one_dimensional(datum, &segment(2, m))?;
    let ind = induce(&res.boxtimes(&lg)?, 1, guard)?;
    let inner = res.dim() * lg.dim();
    let cosets = perm::shuffles(n as usize, m as usize - 1);
    let mut psi = Matrix::zero(ind.dim());
    for (wi, w) in cosets.iter().enumerate() {
        if w[0] == 0 {
            // v_1 (x) v has index 0 and v_-1 (x) v index 1
            set_int(&mut psi, wi * inner + 1, wi * inner, 1);
        }
    }
    Ok(ind.with_blocks_merged(vec![(0, psi)]))
}

/// Type C, `beta(m, n)`: `L_{alpha_1} (x) (L_{alpha(2,n)} o L_{alpha(2,m)}) <delta_mn>` with `psi_1 = 0`.
fn extended_c(datum: &CartanDatum, m: u8, n: u8, guard: usize) -> Result<FiniteModule> {
    let a = one_dimensional(datum, &segment(2, n))?;
    let b = one_dimensional(datum, &segment(2, m))?;
    let prod = induction_product(&a, &b, guard)?.shift(if m == n { 1 } else { 0 });
    let full = one_dimensional(datum, &Word(vec![1]))?.boxtimes(&prod)?;
    let dim = full.dim();
    Ok(full.with_blocks_merged(vec![(0, Matrix::zero(dim))]))
}

/// `G2`: `3a1+a2` and `3a1+2a2` as quotients of the regular module.
fn g2_quotient(datum: &CartanDatum, root: &RootVector) -> Result<FiniteModule> {
    let s3 = perm::all_perms(3);
    let (word, prefixes, shift): (Vec<u8>, Vec<Vec<usize>>, i64) = match root.0.as_slice() {
        [3, 1] => (vec![1, 1, 1, 2], vec![vec![]], 3),
        [3, 2] => (vec![1, 1, 1, 2, 2], vec![vec![], vec![3], vec![2, 3]], 6),
        _ => return Err(KlrError::UnsupportedRoot(format!("{root} is not a quotient root"))),
    };
    let d = word.len();
    let alg = KlrAlgebra::new(datum, d);
    let mut keep = Vec::new();
    for p in &prefixes {
        for u in &s3 {
            let mut full = u.clone();
            full.extend(3..d as u8);
            let mut letters = p.clone();
            letters.extend(perm::canonical_word(&full));
            keep.push(Term::new(perm::from_word(d, &letters), vec![0; d], word.clone()));
        }
    }
    quotient_module(&alg, root, &keep, shift)
}
