//! Exhaustive check of the defining relations on a finite module.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::module::{unit, vec_add_scaled, FiniteModule, ModGen, Vector};
use super::poly::{braid_correction, q_poly, Coeff};
use crate::words::{weight, Word};

/// A located failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub relation: String,
    pub basis_index: usize,
    pub word: Word,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails on basis vector {} (word {}): {}", self.relation, self.basis_index, self.word, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub checked: usize,
    /// Instances whose polynomial degree would exceed a truncation bound.
    pub untestable: usize,
    pub failure: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failure.is_none())
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.checks.iter().find_map(|c| c.failure.as_ref())
    }

    pub fn untestable(&self) -> usize {
        self.checks.iter().map(|c| c.untestable).sum()
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => write!(f, "{:<8} ok     checked {}", c.relation, c.checked)?,
                Some(w) => write!(f, "{:<8} FAILED {w}", c.relation)?,
            }
            if c.untestable > 0 {
                write!(f, " ({} untestable at bound)", c.untestable)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Checker<'a> {
    m: &'a FiniteModule,
    current: RelationCheck,
    out: Vec<RelationCheck>,
}

impl<'a> Checker<'a> {
    fn start(&mut self, name: &str) {
        let prev = std::mem::replace(
            &mut self.current,
            RelationCheck { relation: name.into(), checked: 0, untestable: 0, failure: None },
        );
        if !prev.relation.is_empty() {
            self.out.push(prev);
        }
    }

    fn finish(mut self) -> RelationReport {
        self.start("");
        RelationReport { checks: self.out }
    }

    fn within_bound(&mut self, k: usize, raise: u32) -> bool {
        if let Some(t) = &self.m.truncation {
            if t.poly_degree[k] + raise > t.bound {
                self.current.untestable += 1;
                return false;
            }
        }
        true
    }

    fn expect_zero(&mut self, k: usize, v: &Vector, detail: impl FnOnce() -> String) {
        self.current.checked += 1;
        if self.current.failure.is_none() && !v.is_empty() {
            self.current.failure = Some(Witness {
                relation: self.current.relation.clone(),
                basis_index: k,
                word: self.m.basis[k].word.clone(),
                detail: format!(
                    "{}; residual {}",
                    detail(),
                    v.iter().map(|(i, c)| format!("{c} v{i}")).collect::<Vec<_>>().join(" + ")
                ),
            });
        }
    }

    fn fail(&mut self, k: usize, detail: String) {
        self.current.checked += 1;
        if self.current.failure.is_none() {
            self.current.failure = Some(Witness {
                relation: self.current.relation.clone(),
                basis_index: k,
                word: self.m.basis[k].word.clone(),
                detail,
            });
        }
    }
}

fn ap(m: &FiniteModule, g: ModGen, v: &Vector) -> Vector {
    m.apply(g, v).expect("generator defined")
}

fn diff(a: &Vector, b: &Vector) -> Vector {
    let mut out = a.clone();
    vec_add_scaled(&mut out, b, &-Coeff::one());
    out
}

/// Check every defining relation of the algebra (and its parabolic
/// subalgebra for multi-block modules) on every basis vector.
pub fn verify_relations(m: &FiniteModule) -> RelationReport {
    let d = m.strands();
    let n = m.dim();
    let datum = &m.datum;
    let mut c = Checker {
        m,
        current: RelationCheck { relation: String::new(), checked: 0, untestable: 0, failure: None },
        out: Vec::new(),
    };
    let has_psi = |a: usize| m.psi.get(a).is_some_and(|x| x.is_some());

    c.start("R1");
    if let Err(e) = m.check_words() {
        c.fail(0, e.to_string());
    }
    for k in 0..n {
        c.current.checked += 1;
        if m.basis[k].word.len() != d || weight(datum, &m.basis[k].word.0) != m.weight() {
            c.fail(k, "basis word has the wrong weight".into());
        }
    }

    c.start("R2");
    for k in 0..n {
        let w = &m.basis[k].word.0;
        for t in 0..d {
            for r in m.y[t].cols[k].keys() {
                c.current.checked += 1;
                if &m.basis[*r].word.0 != w {
                    c.fail(k, format!("y{} leaves the weight space", t + 1));
                }
            }
        }
        for a in (0..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
            let mut sw = w.clone();
            sw.swap(a, a + 1);
            for r in m.psi[a].as_ref().unwrap().cols[k].keys() {
                c.current.checked += 1;
                if m.basis[*r].word.0 != sw {
                    c.fail(k, format!("psi{} does not map e(i) to e(s i)", a + 1));
                }
            }
        }
    }

    c.start("grading");
    for k in 0..n {
        let w = &m.basis[k].word.0;
        let deg = m.basis[k].degree;
        for t in 0..d {
            for r in m.y[t].cols[k].keys() {
                c.current.checked += 1;
                if m.basis[*r].degree != deg + datum.dot(w[t], w[t]) {
                    c.fail(k, format!("y{} has the wrong degree", t + 1));
                }
            }
        }
        for a in (0..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
            for r in m.psi[a].as_ref().unwrap().cols[k].keys() {
                c.current.checked += 1;
                if m.basis[*r].degree != deg - datum.dot(w[a], w[a + 1]) {
                    c.fail(k, format!("psi{} has the wrong degree", a + 1));
                }
            }
        }
    }

    c.start("R3Y");
    for k in 0..n {
        if !c.within_bound(k, 2) {
            continue;
        }
        let v = unit(k);
        for r in 0..d {
            for s in r + 1..d {
                let lhs = ap(m, ModGen::Y(r), &ap(m, ModGen::Y(s), &v));
                let rhs = ap(m, ModGen::Y(s), &ap(m, ModGen::Y(r), &v));
                c.expect_zero(k, &diff(&lhs, &rhs), || format!("y{} y{} != y{} y{}", r + 1, s + 1, s + 1, r + 1));
            }
        }
    }

    c.start("R3YPsi");
    for k in 0..n {
        if !c.within_bound(k, 1) {
            continue;
        }
        let v = unit(k);
        for s in (0..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
            for r in (0..d).filter(|&r| r != s && r != s + 1) {
                let lhs = ap(m, ModGen::Y(r), &ap(m, ModGen::Psi(s), &v));
                let rhs = ap(m, ModGen::Psi(s), &ap(m, ModGen::Y(r), &v));
                c.expect_zero(k, &diff(&lhs, &rhs), || format!("y{} psi{} != psi{} y{}", r + 1, s + 1, s + 1, r + 1));
            }
        }
    }

    c.start("R3Psi");
    for k in 0..n {
        let v = unit(k);
        for r in (0..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
            for s in (r + 2..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
                let lhs = ap(m, ModGen::Psi(r), &ap(m, ModGen::Psi(s), &v));
                let rhs = ap(m, ModGen::Psi(s), &ap(m, ModGen::Psi(r), &v));
                c.expect_zero(k, &diff(&lhs, &rhs), || format!("psi{} psi{} != psi{} psi{}", r + 1, s + 1, s + 1, r + 1));
            }
        }
    }

    c.start("R4");
    for k in 0..n {
        let w = m.basis[k].word.0.clone();
        let v = unit(k);
        for r in (0..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
            let q = q_poly(datum, w[r], w[r + 1]);
            if !c.within_bound(k, q.degree()) {
                continue;
            }
            let lhs = ap(m, ModGen::Psi(r), &ap(m, ModGen::Psi(r), &v));
            let rhs = m.apply_poly(&q.at(d, r, r + 1), &v);
            c.expect_zero(k, &diff(&lhs, &rhs), || format!("psi{0}^2 != Q(y{0}, y{1})", r + 1, r + 2));
        }
    }

    c.start("R5");
    for k in 0..n {
        if !c.within_bound(k, 1) {
            continue;
        }
        let w = m.basis[k].word.0.clone();
        let v = unit(k);
        for r in (0..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
            let mut lhs = diff(
                &ap(m, ModGen::Y(r + 1), &ap(m, ModGen::Psi(r), &v)),
                &ap(m, ModGen::Psi(r), &ap(m, ModGen::Y(r), &v)),
            );
            if w[r] == w[r + 1] {
                lhs = diff(&lhs, &v);
            }
            c.expect_zero(k, &lhs, || format!("y{} psi{r1} - psi{r1} y{r1}", r + 2, r1 = r + 1));
        }
    }

    c.start("R6");
    for k in 0..n {
        if !c.within_bound(k, 1) {
            continue;
        }
        let w = m.basis[k].word.0.clone();
        let v = unit(k);
        for r in (0..d.saturating_sub(1)).filter(|&a| has_psi(a)) {
            let mut lhs = diff(
                &ap(m, ModGen::Y(r), &ap(m, ModGen::Psi(r), &v)),
                &ap(m, ModGen::Psi(r), &ap(m, ModGen::Y(r + 1), &v)),
            );
            if w[r] == w[r + 1] {
                vec_add_scaled(&mut lhs, &v, &Coeff::one());
            }
            c.expect_zero(k, &lhs, || format!("y{r1} psi{r1} - psi{r1} y{}", r + 2, r1 = r + 1));
        }
    }

    c.start("R7");
    for k in 0..n {
        let w = m.basis[k].word.0.clone();
        let v = unit(k);
        for r in (0..d.saturating_sub(2)).filter(|&a| has_psi(a) && has_psi(a + 1)) {
            let corr = if w[r] == w[r + 2] {
                Some(braid_correction(datum, d, r, w[r], w[r + 1]))
            } else {
                None
            };
            let raise = corr.as_ref().map_or(0, |p| p.degree());
            if !c.within_bound(k, raise) {
                continue;
            }
            let a = ap(m, ModGen::Psi(r + 1), &ap(m, ModGen::Psi(r), &ap(m, ModGen::Psi(r + 1), &v)));
            let b = ap(m, ModGen::Psi(r), &ap(m, ModGen::Psi(r + 1), &ap(m, ModGen::Psi(r), &v)));
            let mut lhs = diff(&a, &b);
            if let Some(p) = corr {
                lhs = diff(&lhs, &m.apply_poly(&p, &v));
            }
            c.expect_zero(k, &lhs, || format!("braid relation at psi{} psi{}", r + 1, r + 2));
        }
    }

    c.finish()
}

/// Whether `y_1^a - y_2^b`-style operators vanish: apply `p` to every basis vector.
pub fn poly_acts_as_zero(m: &FiniteModule, p: &super::poly::YPoly) -> Option<usize> {
    (0..m.dim()).find(|&k| !m.apply_poly(p, &unit(k)).values().all(|c| c.is_zero()))
}
