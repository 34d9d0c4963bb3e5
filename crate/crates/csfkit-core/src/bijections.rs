//! The maps behind the models of `m^U_{l,1^k}`, `m^U_{l,2}` and
//! `m^U_{l,2,1}`, and a harness that checks them exhaustively on one UIO.
//!
//! Every map comes in two readings. [`Reading::Printed`] follows the case
//! analysis as written. [`Reading::Repaired`] adds the corrections needed
//! for the maps to be mutually inverse.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::corrects::{
    enumerate_chains, enumerate_corrects, in_m_l1, in_m_l1k, in_m_l2, in_m_l21_with, is_chain, is_correct,
    monomial_sum, theta0, MElement, Set3Reading,
};
use crate::ganalogue::GHom;
use crate::partitions::Partition;
use crate::symfunc::{ProductIdentity, SymF};
use crate::uio::Uio;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Which {
    L1k,
    L2,
    L21,
}

impl Which {
    pub fn name(self) -> &'static str {
        match self {
            Which::L1k => "l1k",
            Which::L2 => "l2",
            Which::L21 => "l21",
        }
    }

    pub fn parse(s: &str) -> Option<Which> {
        match s {
            "l1k" => Some(Which::L1k),
            "l2" => Some(Which::L2),
            "l21" => Some(Which::L21),
            _ => None,
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reading {
    Printed,
    Repaired,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::Printed => "printed",
            Reading::Repaired => "repaired",
        }
    }

    fn set3(self) -> Set3Reading {
        match self {
            Reading::Printed => Set3Reading::Printed,
            Reading::Repaired => Set3Reading::Figure,
        }
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An image under one of the `φ` maps.
///
/// `part` indexes the codomain pieces: for `l1k` 0 is `M_{l,1^{k+1}}` and 1
/// is `M_{l+1,1^k}`; for `l2` 0 is `P_{l+2}`; for `l21` 0, 1, 2 are
/// `M_{l+2,1}`, `M_{l+1,2}` and `M_{l,2,1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mapped {
    pub part: usize,
    pub payload: MElement,
    pub case: &'static str,
}

fn mapped(part: usize, blocks: &[&[usize]], case: &'static str) -> Option<Mapped> {
    Some(Mapped { part, payload: MElement::from_blocks(blocks), case })
}

fn above_all(u: &Uio, z: usize, w: &[usize]) -> bool {
    w.iter().all(|&x| u.succ(z, x))
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn without(x: &[usize], a: usize, b: usize) -> Vec<usize> {
    x.iter().enumerate().filter(|&(i, _)| i != a && i != b).map(|(_, &v)| v).collect()
}

// ---- (l, 1^{k+1}) ----

fn phi_l1k_raw(u: &Uio, w: &[usize], eps: &[usize]) -> Option<Mapped> {
    match (0..eps.len()).rev().find(|&i| !in_m_l1(u, w, eps[i])) {
        None => mapped(0, &[w, eps], "1"),
        Some(m) => {
            let w2 = cat(&[w, &eps[m..=m]]);
            let e2 = without(eps, m, m);
            mapped(1, &[&w2, &e2], "2")
        }
    }
}

fn psi_l1k_raw(u: &Uio, part: usize, y: &MElement) -> Option<(MElement, &'static str)> {
    let (w, eps) = (y.block(0), y.block(1));
    if part == 0 {
        return Some((y.clone(), "1"));
    }
    let (z, w) = w.split_last()?;
    let j = eps.iter().position(|&e| u.prec(*z, e)).unwrap_or(eps.len());
    let e2 = cat(&[&eps[..j], &[*z], &eps[j..]]);
    Some((MElement::from_blocks(&[w, &e2]), "2"))
}

pub fn phi_l1k(u: &Uio, w: &[usize], eps: &[usize]) -> Result<Mapped> {
    if w.is_empty() || !is_correct(u, w) || !is_chain(u, eps) || eps.is_empty() {
        return Err(Error::NotInDomain(format!("({w:?};{eps:?})")));
    }
    phi_l1k_raw(u, w, eps).ok_or_else(|| Error::NoCase(format!("({w:?};{eps:?})")))
}

pub fn psi_l1k(u: &Uio, part: usize, y: &MElement) -> Result<MElement> {
    let ok = y.num_blocks() == 2
        && is_correct(u, y.block(0))
        && !y.block(0).is_empty()
        && is_chain(u, y.block(1))
        && in_m_l1k(u, y.block(0), y.block(1))
        && part < 2;
    if !ok {
        return Err(Error::NotInDomain(format!("{y}")));
    }
    psi_l1k_raw(u, part, y).map(|r| r.0).ok_or_else(|| Error::NoCase(format!("{y}")))
}

// ---- (l, 2) ----

/// `τ = max{i ≤ l : q_1 ⊀ w_i or w_i ∼ w_{i+1}}`, 0-based, the second clause
/// being false at `i = l`.
fn tau_l2(u: &Uio, w: &[usize], q1: usize) -> Option<usize> {
    let l = w.len();
    (0..l).rev().find(|&i| !u.prec(q1, w[i]) || (i + 1 < l && u.sim(w[i], w[i + 1])))
}

fn phi_l2_raw(u: &Uio, w: &[usize], q: &[usize], r: Reading) -> Option<(Vec<usize>, &'static str)> {
    let (q0, q1) = (q[0], q[1]);
    let l = w.len();
    if w.iter().all(|&x| u.prec(x, q0)) {
        if r == Reading::Repaired && w[..l - 1].iter().all(|&x| u.prec(x, q1)) {
            return Some((cat(&[w, &[q1, q0]]), "1b"));
        }
        return Some((cat(&[&w[..l - 1], &[q1, w[l - 1], q0]]), "1"));
    }
    let t = tau_l2(u, w, q1)?;
    if u.prec(q0, w[t]) {
        Some((cat(&[&w[..=t], &[q1, q0], &w[t + 1..]]), "2"))
    } else {
        Some((cat(&[&w[..=t], &[q0, q1], &w[t + 1..]]), "3"))
    }
}

fn psi_l2_raw(u: &Uio, x: &[usize], l: usize, r: Reading) -> Option<(Vec<usize>, [usize; 2], &'static str)> {
    if x.len() != l + 2 {
        return None;
    }
    let top = x[l + 1];
    if above_all(u, top, &x[..l - 1]) && u.succ(top, x[l]) {
        let mut w = x[..l - 1].to_vec();
        w.push(x[l]);
        return Some((w, [top, x[l - 1]], "1"));
    }
    if r == Reading::Repaired
        && above_all(u, top, &x[..l])
        && u.sim(top, x[l])
        && x[..l - 1].iter().all(|&y| u.prec(y, x[l]))
    {
        return Some((x[..l].to_vec(), [top, x[l]], "1b"));
    }
    let t = theta0(u, x);
    let rest = without(x, t, t + 1);
    let mut two = t >= 1 && u.prec(x[t + 1], x[t - 1]);
    if r == Reading::Repaired {
        two = two && (t + 2 >= x.len() || u.prec(x[t - 1], x[t + 2]));
    }
    if two {
        Some((rest, [x[t + 1], x[t]], "2"))
    } else {
        Some((rest, [x[t], x[t + 1]], "3"))
    }
}

pub fn phi_l2(u: &Uio, w: &[usize], q: &[usize], r: Reading) -> Result<Mapped> {
    let ok = w.len() >= 2 && q.len() == 2 && is_correct(u, w) && is_correct(u, q) && !in_m_l2(u, w, q);
    if !ok {
        return Err(Error::NotInDomain(format!("({w:?};{q:?})")));
    }
    let (x, case) = phi_l2_raw(u, w, q, r).ok_or_else(|| Error::NoCase(format!("({w:?};{q:?})")))?;
    Ok(Mapped { part: 0, payload: MElement::from_blocks(&[&x]), case })
}

/// Inverse of [`phi_l2`] on correct sequences of length `l + 2`.
pub fn psi_l2(u: &Uio, x: &[usize], l: usize, r: Reading) -> Result<MElement> {
    if l < 2 || x.len() != l + 2 || !is_correct(u, x) {
        return Err(Error::NotInDomain(format!("{x:?}")));
    }
    let (w, q, _) = psi_l2_raw(u, x, l, r).ok_or_else(|| Error::NoCase(format!("{x:?}")))?;
    Ok(MElement::from_blocks(&[&w, &q]))
}

// ---- (l, 2, 1) ----

/// The `ψ` case that inverts each `φ` case. Cases that land in `M_{l,2,1}`
/// are fixed points.
pub const L21_PAIRING: [(&str, &str); 20] = [
    ("111", "1"),
    ("112", "2"),
    ("121", "3"),
    ("1221", "411"),
    ("1222", "412"),
    ("131", "5"),
    ("1321", "6"),
    ("1322", "7"),
    ("211", "8"),
    ("212", "9"),
    ("22", "10"),
    ("231", "11"),
    ("232", "12"),
    ("2331", "13"),
    ("2332", "14"),
    ("31", "15"),
    ("321", "16"),
    ("322", "17"),
    ("331", "18"),
    ("332", "19"),
];

fn l21_pair(phi_case: &str) -> &'static str {
    L21_PAIRING.iter().find(|(a, _)| *a == phi_case).map_or("?", |(_, b)| b)
}

fn tau_122(u: &Uio, w: &[usize], q1: usize, z: usize, r: Reading) -> Option<usize> {
    let l = w.len();
    match r {
        Reading::Printed => (0..l - 1)
            .rev()
            .find(|&i| !u.succ(w[i], q1) || u.sim(w[i], w[i + 1]) || u.sim(w[i], z)),
        Reading::Repaired => (0..l).rev().find(|&i| {
            let next = if i + 1 < l { w[i + 1] } else { z };
            !u.succ(w[i], q1) || u.sim(w[i], next) || u.sim(w[i], z)
        }),
    }
}

fn tau_233(u: &Uio, w: &[usize], q1: usize) -> Option<usize> {
    (0..w.len() - 1).rev().find(|&i| !u.succ(w[i], q1) || u.sim(w[i], w[i + 1]))
}

fn phi_l21_raw(u: &Uio, w: &[usize], q: &[usize], z: usize, r: Reading) -> Option<Mapped> {
    let (q0, q1) = (q[0], q[1]);
    let l = w.len();
    let t = theta0(u, w);
    let wl = w[l - 1];
    let zs = [z];
    let fixed = |case| mapped(2, &[w, q, &zs], case);
    let via_l2 = |case| {
        let (x, _) = phi_l2_raw(u, w, q, r)?;
        mapped(0, &[&x, &zs], case)
    };
    let wz = cat(&[w, &zs]);
    if u.succ(z, q0) && u.succ(z, q1) {
        if above_all(u, z, w) {
            if in_m_l2(u, w, q) {
                return fixed("111");
            }
            return via_l2("112");
        }
        if !u.prec(z, wl) {
            let (a, b) = if u.sim(wl, z) { (wl, z) } else { (w[t], w[t + 1]) };
            if u.succ(a, q0) && u.succ(b, q1) {
                return mapped(1, &[&wz, q], "121");
            }
            let tt = tau_122(u, w, q1, z, r)?;
            if u.prec(q0, w[tt]) {
                let x = cat(&[&w[..=tt], &[q1], &w[tt + 1..], &zs]);
                return mapped(0, &[&x, &[q0]], "1221");
            }
            let x = cat(&[&w[..=tt], &[q0], &w[tt + 1..], &zs]);
            return mapped(0, &[&x, &[q1]], "1222");
        }
        if u.succ(w[t + 1], q1) && u.succ(w[t], q0) {
            return fixed("131");
        }
        let gamma = (t + 1..l - 1).rev().find(|&i| u.sim(w[i], z));
        let tau = tau_l2(u, w, q1);
        if let Some(g) = gamma {
            if tau.is_none_or(|tt| g > tt) {
                return fixed("1321");
            }
        }
        return via_l2("1322");
    }
    if u.succ(q1, z) && u.sim(q0, z) {
        if above_all(u, q0, w) {
            if above_all(u, z, w) {
                return fixed("211");
            }
            return mapped(1, &[&wz, q], "212");
        }
        if !u.prec(q0, wl) {
            return mapped(0, &[&cat(&[w, q]), &zs], "22");
        }
        if u.sim(q1, wl) {
            return mapped(1, &[&cat(&[w, &[q1]]), &[q0, z]], "231");
        }
        if u.succ(w[t], q0) && u.succ(w[t + 1], q1) {
            return fixed("232");
        }
        let tt = tau_233(u, w, q1)?;
        if u.prec(q0, w[tt]) {
            return fixed("2331");
        }
        let x = cat(&[&w[..=tt], &[q0, z], &w[tt + 1..]]);
        return mapped(0, &[&x, &[q1]], "2332");
    }
    if !(u.succ(q1, z) && u.succ(q0, z)) {
        return None;
    }
    if above_all(u, z, w) {
        return fixed("31");
    }
    if !u.prec(z, wl) {
        if above_all(u, q0, w) {
            return mapped(1, &[&wz, q], "321");
        }
        return mapped(0, &[&cat(&[w, q]), &zs], "322");
    }
    if in_m_l2(u, w, q) {
        return fixed("331");
    }
    via_l2("332")
}

type Preimage = (MElement, &'static str);

fn psi1_printed(u: &Uio, x: &[usize], xi: usize, l: usize) -> Option<Preimage> {
    let big_l = l + 2;
    let tb = theta0(u, x);
    let back = |w: &[usize], q: &[usize], z: usize, case| Some((MElement::from_blocks(&[w, q, &[z]]), case));
    let via_l2 = |case| {
        let (w, q, _) = psi_l2_raw(u, x, l, Reading::Printed)?;
        back(&w, &q, xi, case)
    };
    if above_all(u, xi, x) {
        return via_l2("2");
    }
    let eta = (tb..big_l).rev().find(|&i| u.sim(x[i], xi));
    if let Some(e) = eta {
        if e == tb + 1 && u.succ(x[tb], xi) {
            return back(&without(x, e, big_l - 1), &[xi, x[e]], x[big_l - 1], "411");
        }
        let c412 = (e == tb && u.prec(xi, x[tb + 1]))
            || (e == tb + 1 && ((tb + 2 < big_l && u.sim(x[tb], x[tb + 2])) || !u.succ(x[tb], xi)))
            || e > tb + 1;
        if c412 {
            return back(&without(x, e, big_l - 1), &[x[e], xi], x[big_l - 1], "412");
        }
    }
    if eta.is_none() && u.succ(xi, x[tb + 1]) && u.succ(xi, x[tb]) {
        return via_l2("7");
    }
    if u.sim(x[l], xi) && u.sim(x[l], x[l + 1]) && u.succ(x[l + 1], xi) {
        return back(&x[..l], &[x[l], x[l + 1]], xi, "10");
    }
    if eta == Some(tb) && u.succ(xi, x[tb + 1]) {
        return back(&without(x, tb, tb + 1), &[x[tb], xi], x[tb + 1], "14");
    }
    // the condition is printed as the same clause twice
    if u.prec(xi, x[big_l - 1]) {
        return back(&x[..l], &[x[l], x[l + 1]], xi, "17");
    }
    if eta.is_none() && u.prec(xi, x[tb + 1]) && u.prec(xi, x[tb]) {
        return via_l2("19");
    }
    None
}

fn psi1_repaired(u: &Uio, x: &[usize], xi: usize, l: usize) -> Option<Preimage> {
    let big_l = l + 2;
    let tb = theta0(u, x);
    let back = |w: &[usize], q: &[usize], z: usize, case| Some((MElement::from_blocks(&[w, q, &[z]]), case));
    let via_l2 = |case| {
        let (w, q, _) = psi_l2_raw(u, x, l, Reading::Repaired)?;
        back(&w, &q, xi, case)
    };
    if above_all(u, xi, x) {
        return via_l2("2");
    }
    match (tb..big_l).rev().find(|&i| u.sim(x[i], xi)) {
        Some(e) => {
            if u.sim(x[l], xi) && u.sim(x[l], x[l + 1]) && u.succ(x[l + 1], xi) {
                return back(&x[..l], &[x[l], x[l + 1]], xi, "10");
            }
            if e == tb && u.succ(xi, x[tb + 1]) {
                return back(&without(x, tb, tb + 1), &[x[tb], xi], x[tb + 1], "14");
            }
            if e == tb + 1 && u.succ(x[tb], xi) && !(tb + 2 < big_l && u.sim(x[tb], x[tb + 2])) {
                return back(&without(x, e, big_l - 1), &[xi, x[e]], x[big_l - 1], "411");
            }
            back(&without(x, e, big_l - 1), &[x[e], xi], x[big_l - 1], "412")
        }
        None => {
            if tb == l && !u.prec(xi, x[l - 1]) {
                return back(&x[..l], &[x[l], x[l + 1]], xi, "17");
            }
            if u.succ(xi, x[tb + 1]) && u.succ(xi, x[tb]) {
                return via_l2("7");
            }
            via_l2("19")
        }
    }
}

fn psi2_l21(u: &Uio, wx: &[usize], q: &[usize], l: usize) -> Option<Preimage> {
    let (w, xi) = (&wx[..l], wx[l]);
    let (q0, q1) = (q[0], q[1]);
    let t = theta0(u, w);
    let wl = w[l - 1];
    let back = |q: &[usize], z: usize, case| Some((MElement::from_blocks(&[w, q, &[z]]), case));
    let three = (u.succ(xi, wl) && u.succ(w[t], q0) && u.succ(w[t + 1], q1) && u.succ(xi, q0))
        || (u.sim(xi, wl) && u.succ(wl, q0) && u.succ(xi, q1) && u.succ(xi, q0));
    if three {
        return back(q, xi, "3");
    }
    if above_all(u, q0, w) && u.sim(q0, xi) && u.succ(q1, xi) {
        return back(q, xi, "9");
    }
    if u.sim(xi, wl) && u.sim(xi, q0) && u.prec(q0, wl) && u.prec(q1, xi) {
        return back(&[q0, xi], q1, "11");
    }
    if above_all(u, q0, w) && u.succ(q1, xi) {
        return back(q, xi, "16");
    }
    None
}

fn psi_l21_raw(u: &Uio, part: usize, y: &MElement, l: usize, r: Reading) -> Option<Preimage> {
    match part {
        0 => {
            let (x, xi) = (y.block(0), y.block(1)[0]);
            match r {
                Reading::Printed => psi1_printed(u, x, xi, l),
                Reading::Repaired => psi1_repaired(u, x, xi, l),
            }
        }
        1 => psi2_l21(u, y.block(0), y.block(1), l),
        _ => {
            let case = phi_l21_raw(u, y.block(0), y.block(1), y.block(2)[0], r).map_or("?", |m| l21_pair(m.case));
            Some((y.clone(), case))
        }
    }
}

fn in_l21_domain(u: &Uio, w: &[usize], q: &[usize], z: usize) -> bool {
    w.len() >= 2 && q.len() == 2 && z < u.n() && is_correct(u, w) && is_correct(u, q) && in_m_l1(u, q, z)
}

pub fn phi_l21(u: &Uio, w: &[usize], q: &[usize], z: usize, r: Reading) -> Result<Mapped> {
    if !in_l21_domain(u, w, q, z) {
        return Err(Error::NotInDomain(format!("({w:?};{q:?};{z})")));
    }
    phi_l21_raw(u, w, q, z, r).ok_or_else(|| Error::NoCase(format!("({w:?};{q:?};{z})")))
}

/// Inverse of [`phi_l21`] on one codomain piece; returns the preimage and
/// the `ψ` case label.
pub fn psi_l21(u: &Uio, part: usize, y: &MElement, l: usize, r: Reading) -> Result<(MElement, &'static str)> {
    if !l21_codomain_member(u, part, y, l, r) {
        return Err(Error::NotInDomain(format!("{y}")));
    }
    psi_l21_raw(u, part, y, l, r).ok_or_else(|| Error::NoCase(format!("{y}")))
}

fn l21_codomain_member(u: &Uio, part: usize, y: &MElement, l: usize, r: Reading) -> bool {
    let lens = y.block_lengths();
    let correct = y.blocks().all(|b| is_correct(u, b));
    correct
        && match part {
            0 => lens == [l + 2, 1] && in_m_l1(u, y.block(0), y.block(1)[0]),
            1 => lens == [l + 1, 2] && in_m_l2(u, y.block(0), y.block(1)),
            2 => {
                lens == [l, 2, 1]
                    && l >= 2
                    && in_m_l21_with(u, y.block(0), y.block(1), y.block(2)[0], r.set3())
            }
            _ => false,
        }
}

// ---- harness ----

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FailureKind {
    /// `φ(x)` is not in the codomain piece it was sent to.
    PhiOutsideCodomain,
    /// `ψ(φ(x)) ≠ x`.
    PhiRoundTrip,
    /// `ψ(y)` is not in the domain.
    PsiOutsideDomain,
    /// `φ(ψ(y)) ≠ y`.
    PsiRoundTrip,
    /// A codomain element of the fixed piece is not fixed by `φ`.
    NotFixed,
}

impl FailureKind {
    pub fn name(self) -> &'static str {
        match self {
            FailureKind::PhiOutsideCodomain => "phi-outside-codomain",
            FailureKind::PhiRoundTrip => "phi-roundtrip",
            FailureKind::PsiOutsideDomain => "psi-outside-domain",
            FailureKind::PsiRoundTrip => "psi-roundtrip",
            FailureKind::NotFixed => "not-fixed",
        }
    }
}

/// One offending input with what the maps did to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub kind: String,
    pub input: MElement,
    pub part: Option<usize>,
    pub output: Option<MElement>,
    pub cases: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub which: Which,
    pub reading: Reading,
    pub uio: Uio,
    pub l: u32,
    pub k: u32,
    pub domain_size: usize,
    pub codomain_sizes: Vec<usize>,
    pub phi_cases: BTreeMap<&'static str, usize>,
    pub psi_cases: BTreeMap<&'static str, usize>,
    pub failures: BTreeMap<FailureKind, usize>,
    pub no_case: usize,
    pub pairing_mismatches: usize,
    /// The first offending input of each kind, in enumeration order.
    pub findings: Vec<Finding>,
    /// Σ over the domain of monomials equals Σ over the codomain.
    pub content_preserved: bool,
    /// Both sides equal the G-images of the product identity, when it holds.
    pub identity_check: Option<bool>,
}

impl BijectionReport {
    pub fn failure_count(&self) -> usize {
        self.failures.values().sum()
    }

    pub fn cardinality_conserved(&self) -> bool {
        self.domain_size == self.codomain_sizes.iter().sum::<usize>()
    }

    /// No failures, no diagnostics, equal cardinalities.
    pub fn passed(&self) -> bool {
        self.failure_count() == 0
            && self.no_case == 0
            && self.pairing_mismatches == 0
            && self.cardinality_conserved()
            && self.content_preserved
            && self.identity_check != Some(false)
    }

    /// The first finding, which is the smallest offending input in
    /// enumeration order.
    pub fn counterexample(&self) -> Option<&Finding> {
        self.findings.first()
    }
}

struct Recorder {
    failures: BTreeMap<FailureKind, usize>,
    no_case: usize,
    pairing: usize,
    findings: Vec<Finding>,
    seen: Vec<String>,
}

impl Recorder {
    fn note(&mut self, kind: &str, input: &MElement, part: Option<usize>, output: Option<MElement>, cases: Vec<&'static str>) {
        if !self.seen.iter().any(|k| k == kind) {
            self.seen.push(kind.into());
            self.findings.push(Finding { kind: kind.into(), input: input.clone(), part, output, cases });
        }
    }

    fn fail(&mut self, kind: FailureKind, input: &MElement, part: Option<usize>, output: Option<MElement>, cases: Vec<&'static str>) {
        *self.failures.entry(kind).or_insert(0) += 1;
        self.note(kind.name(), input, part, output, cases);
    }
}

/// A bijection `φ: D → C_0 ⊔ C_1 ⊔ ...` with inverse `ψ`.
struct Instance<'a> {
    domain: Vec<MElement>,
    parts: Vec<Vec<MElement>>,
    /// Pieces on which `φ` is the identity.
    fixed_part: Option<usize>,
    phi: &'a dyn Fn(&MElement) -> Option<Mapped>,
    psi: &'a dyn Fn(usize, &MElement) -> Option<Preimage>,
    pairing: &'a dyn Fn(&str) -> &'static str,
}

fn run_instance(inst: &Instance<'_>, rec: &mut Recorder) -> (BTreeMap<&'static str, usize>, BTreeMap<&'static str, usize>) {
    let mut phi_cases = BTreeMap::new();
    let mut psi_cases = BTreeMap::new();
    let members: Vec<alloc::collections::BTreeSet<&MElement>> =
        inst.parts.iter().map(|p| p.iter().collect()).collect();
    let domain: alloc::collections::BTreeSet<&MElement> = inst.domain.iter().collect();
    for x in &inst.domain {
        let Some(m) = (inst.phi)(x) else {
            rec.no_case += 1;
            rec.note("phi-no-case", x, None, None, Vec::new());
            continue;
        };
        *phi_cases.entry(m.case).or_insert(0) += 1;
        if !members[m.part].contains(&m.payload) {
            rec.fail(FailureKind::PhiOutsideCodomain, x, Some(m.part), Some(m.payload), alloc::vec![m.case]);
            continue;
        }
        match (inst.psi)(m.part, &m.payload) {
            Some((back, c)) if back == *x => {
                if (inst.pairing)(m.case) != c {
                    rec.pairing += 1;
                    rec.note("pairing", x, Some(m.part), Some(m.payload), alloc::vec![m.case, c]);
                }
            }
            Some((back, c)) => {
                rec.fail(FailureKind::PhiRoundTrip, x, Some(m.part), Some(back), alloc::vec![m.case, c]);
            }
            None => {
                rec.fail(FailureKind::PhiRoundTrip, x, Some(m.part), Some(m.payload), alloc::vec![m.case]);
            }
        }
    }
    for (part, ys) in inst.parts.iter().enumerate() {
        for y in ys {
            let Some((x, c)) = (inst.psi)(part, y) else {
                rec.no_case += 1;
                rec.note("psi-no-case", y, Some(part), None, Vec::new());
                continue;
            };
            *psi_cases.entry(c).or_insert(0) += 1;
            if !domain.contains(&x) {
                rec.fail(FailureKind::PsiOutsideDomain, y, Some(part), Some(x), alloc::vec![c]);
                continue;
            }
            match (inst.phi)(&x) {
                Some(m) if m.part == part && m.payload == *y => {}
                Some(m) => {
                    let kind = if Some(part) == inst.fixed_part { FailureKind::NotFixed } else { FailureKind::PsiRoundTrip };
                    rec.fail(kind, y, Some(part), Some(m.payload), alloc::vec![c, m.case]);
                }
                None => rec.fail(FailureKind::PsiRoundTrip, y, Some(part), Some(x), alloc::vec![c]),
            }
        }
    }
    (phi_cases, psi_cases)
}

fn identity_sides(which: Which, l: u32, k: u32) -> Result<Option<(SymF, Vec<SymF>)>> {
    let part = |v: &[u32]| Partition::new(v.to_vec());
    let hook = |l: u32, k: u32| -> Result<Partition> {
        let mut v = alloc::vec![l];
        v.extend(core::iter::repeat_n(1, k as usize));
        part(&v)
    };
    let (id, domain, codomain) = match which {
        Which::L1k => {
            let id = ProductIdentity::Hook { l, k: k + 1 };
            let (lhs, _) = id.sides()?;
            (id, lhs, alloc::vec![SymF::m(hook(l, k + 1)?), SymF::m(hook(l + 1, k)?)])
        }
        Which::L2 => {
            let id = ProductIdentity::TwoRow { l };
            let lhs = crate::symfunc::multiply(&SymF::p(l), &SymF::p(2))?.sub(&SymF::m(part(&[l, 2])?))?;
            (id, lhs, alloc::vec![SymF::p(l + 2)])
        }
        Which::L21 => {
            let id = ProductIdentity::HookTwoOne { l };
            let (lhs, _) = id.sides()?;
            let rhs = alloc::vec![
                SymF::m(part(&[l + 2, 1])?),
                SymF::m(part(&[l + 1, 2])?),
                SymF::m(part(&[l, 2, 1])?),
            ];
            (id, lhs, rhs)
        }
    };
    Ok(if id.holds()? { Some((domain, codomain)) } else { None })
}

/// Checks `φ` and `ψ` on every element of their domains for one UIO.
///
/// `k` is only used by `l1k`, where the domain is `P_l × E_{k+1}`.
pub fn verify_bijection(which: Which, u: &Uio, l: u32, k: u32, r: Reading) -> Result<BijectionReport> {
    let lu = l as usize;
    let min_l = if which == Which::L1k { 1 } else { 2 };
    if lu < min_l {
        return Err(Error::Gated { family: which.name(), detail: format!("l must be at least {min_l}") });
    }
    crate::limits::check("degree", lu + 3 + k as usize, crate::limits::max_degree())?;
    let n = u.n();
    let singles: Vec<usize> = (0..n).collect();
    let p = |len: usize| enumerate_corrects(u, len);
    let mut rec = Recorder { failures: BTreeMap::new(), no_case: 0, pairing: 0, findings: Vec::new(), seen: Vec::new() };
    let (domain, parts, phi_cases, psi_cases) = match which {
        Which::L1k => {
            let ku = k as usize;
            let mut domain = Vec::new();
            let mut c0 = Vec::new();
            for w in p(lu)? {
                for e in enumerate_chains(u, ku + 1)? {
                    let m = MElement::from_blocks(&[&w, &e]);
                    if in_m_l1k(u, &w, &e) {
                        c0.push(m.clone());
                    }
                    domain.push(m);
                }
            }
            let mut c1 = Vec::new();
            for w in p(lu + 1)? {
                for e in enumerate_chains(u, ku)? {
                    if in_m_l1k(u, &w, &e) {
                        c1.push(MElement::from_blocks(&[&w, &e]));
                    }
                }
            }
            let phi = |x: &MElement| phi_l1k_raw(u, x.block(0), x.block(1));
            let psi = |part: usize, y: &MElement| psi_l1k_raw(u, part, y);
            let pairing = |c: &str| if c == "1" { "1" } else { "2" };
            let inst = Instance { domain, parts: alloc::vec![c0, c1], fixed_part: Some(0), phi: &phi, psi: &psi, pairing: &pairing };
            let (a, b) = run_instance(&inst, &mut rec);
            (inst.domain, inst.parts, a, b)
        }
        Which::L2 => {
            let qs = p(2)?;
            let mut domain = Vec::new();
            for w in p(lu)? {
                for q in &qs {
                    if !in_m_l2(u, &w, q) {
                        domain.push(MElement::from_blocks(&[&w, q]));
                    }
                }
            }
            let cod: Vec<MElement> = p(lu + 2)?.iter().map(|x| MElement::from_blocks(&[x])).collect();
            let phi = |x: &MElement| {
                let (y, case) = phi_l2_raw(u, x.block(0), x.block(1), r)?;
                mapped(0, &[&y], case)
            };
            let psi = |_: usize, y: &MElement| {
                let (w, q, case) = psi_l2_raw(u, y.block(0), lu, r)?;
                Some((MElement::from_blocks(&[&w, &q]), case))
            };
            let pairing = |c: &str| match c {
                "1" => "1",
                "1b" => "1b",
                "2" => "2",
                _ => "3",
            };
            let inst = Instance { domain, parts: alloc::vec![cod], fixed_part: None, phi: &phi, psi: &psi, pairing: &pairing };
            let (a, b) = run_instance(&inst, &mut rec);
            (inst.domain, inst.parts, a, b)
        }
        Which::L21 => {
            let qs = p(2)?;
            let ws = p(lu)?;
            let mut domain = Vec::new();
            let mut fixed = Vec::new();
            for w in &ws {
                for q in &qs {
                    for &z in &singles {
                        let member = in_m_l21_with(u, w, q, z, r.set3());
                        if in_m_l1(u, q, z) {
                            domain.push(MElement::from_blocks(&[w, q, &[z]]));
                        }
                        if member {
                            fixed.push(MElement::from_blocks(&[w, q, &[z]]));
                        }
                    }
                }
            }
            let mut c0 = Vec::new();
            for x in p(lu + 2)? {
                for &xi in &singles {
                    if in_m_l1(u, &x, xi) {
                        c0.push(MElement::from_blocks(&[&x, &[xi]]));
                    }
                }
            }
            let mut c1 = Vec::new();
            for x in p(lu + 1)? {
                for q in &qs {
                    if in_m_l2(u, &x, q) {
                        c1.push(MElement::from_blocks(&[&x, q]));
                    }
                }
            }
            let phi = |x: &MElement| phi_l21_raw(u, x.block(0), x.block(1), x.block(2)[0], r);
            let psi = |part: usize, y: &MElement| psi_l21_raw(u, part, y, lu, r);
            let inst = Instance {
                domain,
                parts: alloc::vec![c0, c1, fixed],
                fixed_part: Some(2),
                phi: &phi,
                psi: &psi,
                pairing: &l21_pair,
            };
            let (a, b) = run_instance(&inst, &mut rec);
            (inst.domain, inst.parts, a, b)
        }
    };

    let dom_sum = monomial_sum(n, &domain);
    let part_sums: Vec<_> = parts.iter().map(|ps| monomial_sum(n, ps)).collect();
    let mut cod_sum = crate::polyring::VPoly::zero(n);
    for s in &part_sums {
        cod_sum = cod_sum.add(s)?;
    }
    let content_preserved = dom_sum == cod_sum;
    let identity_check = match identity_sides(which, l, k)? {
        None => None,
        Some((d, cs)) => {
            let hom = GHom::new(&u.incomparability_graph());
            let mut ok = hom.phi(&d)? == dom_sum;
            for (c, s) in cs.iter().zip(&part_sums) {
                ok &= hom.phi(c)? == *s;
            }
            Some(ok)
        }
    };
    Ok(BijectionReport {
        which,
        reading: r,
        uio: u.clone(),
        l,
        k: if which == Which::L1k { k } else { 0 },
        domain_size: domain.len(),
        codomain_sizes: parts.iter().map(Vec::len).collect(),
        phi_cases,
        psi_cases,
        failures: rec.failures,
        no_case: rec.no_case,
        pairing_mismatches: rec.pairing,
        findings: rec.findings,
        content_preserved,
        identity_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uio::enumerate_uios;

    #[test]
    fn l1k_small() {
        for n in 1..=4 {
            for u in enumerate_uios(n).unwrap() {
                let rep = verify_bijection(Which::L1k, &u, 2, 1, Reading::Printed).unwrap();
                assert!(rep.passed(), "{u}: {rep:?}");
            }
        }
    }

    #[test]
    fn l2_repaired_small() {
        for n in 1..=4 {
            for u in enumerate_uios(n).unwrap() {
                for l in 2..=3 {
                    let rep = verify_bijection(Which::L2, &u, l, 0, Reading::Repaired).unwrap();
                    assert!(rep.passed(), "{u} l={l}: {:?}", rep.findings);
                }
            }
        }
    }

    #[test]
    fn l21_repaired_small() {
        for n in 1..=4 {
            for u in enumerate_uios(n).unwrap() {
                let rep = verify_bijection(Which::L21, &u, 3, 0, Reading::Repaired).unwrap();
                assert!(rep.passed(), "{u}: {:?} {:?}", rep.failures, rep.findings);
            }
        }
    }

    #[test]
    fn single_maps() {
        let u: Uio = "s:3,4,4".parse().unwrap();
        let m = phi_l1k(&u, &[0, 1], &[0, 2]).unwrap();
        let back = psi_l1k(&u, m.part, &m.payload).unwrap();
        assert_eq!(back, MElement::from_blocks(&[&[0, 1], &[0, 2]]));
        assert!(phi_l1k(&u, &[0, 2], &[0]).is_err());
    }
}
