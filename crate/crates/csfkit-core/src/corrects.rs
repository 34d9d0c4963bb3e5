//! Correct sequences over a unit interval order, chains, and the explicit
//! sets `M_λ` whose monomial sums give `m^U_λ`.
//!
//! Sequences hold 0-based element indices. A sequence `w` is correct when it
//! has no descent `w_i ≻ w_{i+1}` and every `w_j` with `j > 1` has some
//! earlier `w_i ⊀ w_j`. Repetition is allowed.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::limits;
use crate::partitions::Partition;
use crate::polyring::{VPoly, VertexMonomial};
use crate::symfunc::ProductIdentity;
use crate::uio::Uio;
use crate::{Error, Result};

/// The literal definition. Out-of-range indices make a sequence incorrect;
/// the empty sequence is vacuously correct.
pub fn is_correct(u: &Uio, w: &[usize]) -> bool {
    if w.iter().any(|&x| x >= u.n()) {
        return false;
    }
    for i in 1..w.len() {
        if u.succ(w[i - 1], w[i]) {
            return false;
        }
        if !w[..i].iter().any(|&a| !u.prec(a, w[i])) {
            return false;
        }
    }
    true
}

/// Whether every prefix of `w` is connected in the incomparability graph.
pub fn prefixes_connected(u: &Uio, w: &[usize]) -> bool {
    let mut comp: Vec<usize> = Vec::new();
    for (j, &x) in w.iter().enumerate() {
        if x >= u.n() {
            return false;
        }
        if j == 0 {
            comp.push(x);
            continue;
        }
        // a prefix is connected iff the new element touches it, since the
        // previous prefix already was
        if !comp.iter().any(|&y| u.sim(x, y)) {
            return false;
        }
        comp.push(x);
    }
    true
}

/// Whether `x` may follow the correct sequence `w` and keep it correct.
#[inline]
fn extends(u: &Uio, w: &[usize], x: usize) -> bool {
    match w.last() {
        None => true,
        Some(&last) => !u.succ(last, x) && w.iter().any(|&a| !u.prec(a, x)),
    }
}

/// All correct sequences of length `k`, in lexicographic order.
pub fn enumerate_corrects(u: &Uio, k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::NotInDomain("correct sequences have positive length".into()));
    }
    limits::check("sequence length", k, limits::max_seq_len())?;
    let mut out = Vec::new();
    let mut w = Vec::with_capacity(k);
    fn rec(u: &Uio, k: usize, w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if w.len() == k {
            out.push(w.clone());
            return;
        }
        for x in 0..u.n() {
            if extends(u, w, x) {
                w.push(x);
                rec(u, k, w, out);
                w.pop();
            }
        }
    }
    rec(u, k, &mut w, &mut out);
    Ok(out)
}

/// Tuples of correct blocks with lengths `λ_1, λ_2, ...`, concatenated.
pub fn enumerate_lambda_corrects(u: &Uio, lambda: &Partition) -> Result<Vec<MElement>> {
    limits::check("sequence length", lambda.weight() as usize, limits::max_seq_len())?;
    let mut out = vec![MElement { entries: Vec::new(), blocks: Vec::new() }];
    for &part in lambda.parts() {
        let block = enumerate_corrects(u, part as usize)?;
        let mut next = Vec::with_capacity(out.len() * block.len());
        for prefix in &out {
            for b in &block {
                next.push(prefix.with_block(b));
            }
        }
        out = next;
    }
    Ok(out)
}

/// All `≺`-increasing sequences of length `k`; one empty chain for `k = 0`.
pub fn enumerate_chains(u: &Uio, k: usize) -> Result<Vec<Vec<usize>>> {
    limits::check("sequence length", k, limits::max_seq_len())?;
    let mut out = Vec::new();
    fn rec(u: &Uio, k: usize, c: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if c.len() == k {
            out.push(c.clone());
            return;
        }
        let start = c.last().map_or(0, |&x| x + 1);
        for x in start..u.n() {
            if c.last().is_none_or(|&y| u.prec(y, x)) {
                c.push(x);
                rec(u, k, c, out);
                c.pop();
            }
        }
    }
    rec(u, k, &mut Vec::with_capacity(k), &mut out);
    Ok(out)
}

pub fn is_chain(u: &Uio, c: &[usize]) -> bool {
    c.iter().all(|&x| x < u.n()) && c.windows(2).all(|p| u.prec(p[0], p[1]))
}

/// `Σ_w ∏ v_{w_i}` over the given sequences, in `n` variables.
pub fn monomial_sum<I, S>(n: usize, seqs: I) -> VPoly
where
    I: IntoIterator<Item = S>,
    S: AsRef<[usize]>,
{
    let mut out = VPoly::zero(n);
    for s in seqs {
        out.add_term(VertexMonomial::from_vertices(n, s.as_ref()), BigInt::one());
    }
    out
}

/// 0-based index `t` of the last adjacent incomparable pair `w_t ∼ w_{t+1}`.
pub(crate) fn theta0(u: &Uio, w: &[usize]) -> usize {
    (0..w.len() - 1)
        .rev()
        .find(|&i| u.sim(w[i], w[i + 1]))
        .expect("a correct sequence of length >= 2 starts with an incomparable pair")
}

/// `θ(w) = max{i < l : w_i ∼ w_{i+1}}`, counted from 1.
pub fn theta(u: &Uio, w: &[usize]) -> Result<usize> {
    if w.len() < 2 {
        return Err(Error::TooShort(2));
    }
    if !is_correct(u, w) {
        return Err(Error::NotInDomain(format!("{w:?} is not correct")));
    }
    Ok(theta0(u, w) + 1)
}

/// Number of orderings of the whole of `U` that are correct.
pub fn hamiltonian_corrects_count(u: &Uio) -> Result<u64> {
    limits::check("UIO size", u.n(), 9)?;
    fn rec(u: &Uio, w: &mut Vec<usize>, used: u32) -> u64 {
        if w.len() == u.n() {
            return 1;
        }
        let mut total = 0;
        for x in 0..u.n() {
            if used >> x & 1 == 0 && extends(u, w, x) {
                w.push(x);
                total += rec(u, w, used | 1 << x);
                w.pop();
            }
        }
        total
    }
    if u.n() == 0 {
        return Ok(1);
    }
    Ok(rec(u, &mut Vec::with_capacity(u.n()), 0))
}

/// A tuple of sequences stored end to end, with its block lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MElement {
    entries: Vec<usize>,
    blocks: Vec<usize>,
}

impl MElement {
    pub fn from_blocks(blocks: &[&[usize]]) -> Self {
        let mut m = MElement { entries: Vec::new(), blocks: Vec::new() };
        for b in blocks {
            m = m.with_block(b);
        }
        m
    }

    fn with_block(&self, b: &[usize]) -> Self {
        let mut m = self.clone();
        m.entries.extend_from_slice(b);
        m.blocks.push(b.len());
        m
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn block_lengths(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, i: usize) -> &[usize] {
        let start: usize = self.blocks[..i].iter().sum();
        &self.entries[start..start + self.blocks[i]]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[usize]> {
        (0..self.blocks.len()).map(move |i| self.block(i))
    }
}

impl AsRef<[usize]> for MElement {
    fn as_ref(&self) -> &[usize] {
        &self.entries
    }
}

impl fmt::Display for MElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (bi, b) in self.blocks().enumerate() {
            if bi > 0 {
                f.write_str(";")?;
            }
            for (i, x) in b.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
        }
        f.write_str(")")
    }
}

fn above_all(u: &Uio, z: usize, w: &[usize]) -> bool {
    w.iter().all(|&x| u.succ(z, x))
}

/// `z ≻ w` (every entry) or `z ≺ w_l`.
pub fn in_m_l1(u: &Uio, w: &[usize], z: usize) -> bool {
    above_all(u, z, w) || u.prec(z, w[w.len() - 1])
}

/// Every chain entry satisfies the condition of [`in_m_l1`].
pub fn in_m_l1k(u: &Uio, w: &[usize], eps: &[usize]) -> bool {
    eps.iter().all(|&e| in_m_l1(u, w, e))
}

/// `(J_{l-1} ≺ q_0 and w_l ≺ q_1)` or `(w_θ ≻ q_0 and w_{θ+1} ≻ q_1)`.
pub fn in_m_l2(u: &Uio, w: &[usize], q: &[usize]) -> bool {
    let l = w.len();
    let first = w[..l - 1].iter().all(|&x| u.prec(x, q[0])) && u.prec(w[l - 1], q[1]);
    if first {
        return true;
    }
    let t = theta0(u, w);
    u.succ(w[t], q[0]) && u.succ(w[t + 1], q[1])
}

/// Two readings of the third clause of the `(l,2,1)` set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Set3Reading {
    /// `w_l ≻ q_1 ≻ z`, `q_0 ∼ z`, and some `w_γ ∼ q_1` with `w_γ ≻ q_0`.
    Figure,
    /// `w_l ≻ z ≻ q_1`, and some `w_γ ∼ z ∼ q_0` with `w_γ ≻ q_0`.
    Printed,
}

fn gammas(u: &Uio, w: &[usize]) -> core::ops::Range<usize> {
    theta0(u, w) + 1..w.len() - 1
}

/// First clause: `(w;q) ∈ M_{l,2}`, `(w;z) ∈ M_{l,1}` and `(q;z) ∈ M_{2,1}`.
pub fn l21_set1(u: &Uio, w: &[usize], q: &[usize], z: usize) -> bool {
    in_m_l2(u, w, q) && in_m_l1(u, w, z) && in_m_l1(u, q, z)
}

/// First exceptional family.
pub fn l21_set2(u: &Uio, w: &[usize], q: &[usize], z: usize) -> bool {
    let wl = w[w.len() - 1];
    u.succ(wl, z)
        && u.succ(z, q[0])
        && u.succ(z, q[1])
        && gammas(u, w).any(|g| u.sim(w[g], z) && u.succ(w[g], q[1]))
}

/// Second exceptional family.
pub fn l21_set3(u: &Uio, w: &[usize], q: &[usize], z: usize, reading: Set3Reading) -> bool {
    let wl = w[w.len() - 1];
    match reading {
        Set3Reading::Figure => {
            u.succ(wl, q[1])
                && u.succ(q[1], z)
                && u.sim(q[0], z)
                && gammas(u, w).any(|g| u.sim(w[g], q[1]) && u.succ(w[g], q[0]))
        }
        Set3Reading::Printed => {
            u.succ(wl, z)
                && u.succ(z, q[1])
                && gammas(u, w).any(|g| u.sim(w[g], z) && u.sim(z, q[0]) && u.succ(w[g], q[0]))
        }
    }
}

pub fn in_m_l21(u: &Uio, w: &[usize], q: &[usize], z: usize) -> bool {
    in_m_l21_with(u, w, q, z, Set3Reading::Figure)
}

pub fn in_m_l21_with(u: &Uio, w: &[usize], q: &[usize], z: usize, reading: Set3Reading) -> bool {
    l21_set1(u, w, q, z) || l21_set2(u, w, q, z) || l21_set3(u, w, q, z, reading)
}

/// Some increasing `i_1 < ... < i_l` with `ξ_j ∼ ε_{i_j}`, where the last
/// index is at most `k + l` (or strictly below it when `strict`).
pub fn in_m_2l1k(u: &Uio, xi: &[usize], eps: &[usize], strict: bool) -> bool {
    let lim = if strict { eps.len().saturating_sub(1) } else { eps.len() };
    // greedy leftmost matching is optimal for a subsequence test
    let mut pos = 0;
    for &x in xi {
        while pos < lim && !u.sim(x, eps[pos]) {
            pos += 1;
        }
        if pos >= lim {
            return false;
        }
        pos += 1;
    }
    true
}

/// The five families of explicit sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `M_{l,1} ⊂ P_l × U`.
    L1 { l: u32 },
    /// `M_{l,1^k} ⊂ P_l × E_k`.
    L1k { l: u32, k: u32 },
    /// `M_{l,2} ⊂ P_l × P_2`.
    L2 { l: u32 },
    /// `M_{l,2,1} ⊂ P_l × P_2 × U`.
    L21 { l: u32 },
    /// `M_{2^l,1^k} ⊂ E_l × E_{k+l}`.
    TwoL1k { l: u32, k: u32, strict: bool },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::L1 { .. } => "l1",
            Family::L1k { .. } => "l1k",
            Family::L2 { .. } => "l2",
            Family::L21 { .. } => "l21",
            Family::TwoL1k { .. } => "2l1k",
        }
    }

    /// The partition `λ` whose `m^U_λ` the set models.
    pub fn partition(&self) -> Partition {
        let mut parts = Vec::new();
        match *self {
            Family::L1 { l } => parts.extend([l, 1]),
            Family::L1k { l, k } => {
                parts.push(l);
                parts.extend(core::iter::repeat_n(1, k as usize));
            }
            Family::L2 { l } => parts.extend([l, 2]),
            Family::L21 { l } => parts.extend([l, 2, 1]),
            Family::TwoL1k { l, k, .. } => {
                parts.extend(core::iter::repeat_n(2, l as usize));
                parts.extend(core::iter::repeat_n(1, k as usize));
            }
        }
        parts.retain(|&p| p > 0);
        Partition::new(parts).expect("parts are positive")
    }

    /// The product identity the model relies on, if any.
    pub fn identity(&self) -> Option<ProductIdentity> {
        match *self {
            Family::L1 { l } => Some(ProductIdentity::Hook { l, k: 1 }),
            Family::L1k { l, k } => Some(ProductIdentity::Hook { l, k }),
            Family::L2 { l } => Some(ProductIdentity::TwoRow { l }),
            Family::L21 { l } => Some(ProductIdentity::HookTwoOne { l }),
            Family::TwoL1k { .. } => None,
        }
    }

    /// Rejects parameters where the model cannot equal `m^U_λ`.
    pub fn check_gate(&self) -> Result<()> {
        let gated = |detail: &str| Err(Error::Gated { family: self.name(), detail: detail.into() });
        match *self {
            Family::L1 { l } | Family::L1k { l, k: _ } | Family::L2 { l } | Family::L21 { l } if l == 0 => {
                gated("l must be positive")
            }
            Family::L1k { k: 0, .. } => gated("k must be positive"),
            // the predicates read θ(w), which needs two entries
            Family::L2 { l: 1 } | Family::L21 { l: 1 } => gated("l must be at least 2"),
            Family::TwoL1k { l: 0, .. } => gated("l must be positive"),
            Family::TwoL1k { .. } => Ok(()),
            _ => {
                let id = self.identity().expect("hook families carry an identity");
                if id.holds()? {
                    Ok(())
                } else {
                    gated(&format!("{id} fails"))
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.partition().weight() as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::L1 { l } => write!(f, "l1(l={l})"),
            Family::L1k { l, k } => write!(f, "l1k(l={l},k={k})"),
            Family::L2 { l } => write!(f, "l2(l={l})"),
            Family::L21 { l } => write!(f, "l21(l={l})"),
            Family::TwoL1k { l, k, strict } => {
                write!(f, "2l1k(l={l},k={k},{})", if strict { "strict" } else { "non-strict" })
            }
        }
    }
}

/// Streams every member of the set to `visit`, without the gate check.
pub fn for_each_member(u: &Uio, family: Family, mut visit: impl FnMut(&[&[usize]])) -> Result<()> {
    limits::check("degree", family.degree(), limits::max_degree())?;
    let singles: Vec<usize> = (0..u.n()).collect();
    match family {
        Family::L1 { l } => {
            for w in enumerate_corrects(u, l as usize)? {
                for z in &singles {
                    if in_m_l1(u, &w, *z) {
                        visit(&[&w, core::slice::from_ref(z)]);
                    }
                }
            }
        }
        Family::L1k { l, k } => {
            let chains = enumerate_chains(u, k as usize)?;
            for w in enumerate_corrects(u, l as usize)? {
                for e in &chains {
                    if in_m_l1k(u, &w, e) {
                        visit(&[&w, e]);
                    }
                }
            }
        }
        Family::L2 { l } => {
            let qs = enumerate_corrects(u, 2)?;
            for w in enumerate_corrects(u, l as usize)? {
                for q in &qs {
                    if in_m_l2(u, &w, q) {
                        visit(&[&w, q]);
                    }
                }
            }
        }
        Family::L21 { l } => {
            let qs = enumerate_corrects(u, 2)?;
            for w in enumerate_corrects(u, l as usize)? {
                for q in &qs {
                    for z in &singles {
                        if in_m_l21(u, &w, q, *z) {
                            visit(&[&w, q, core::slice::from_ref(z)]);
                        }
                    }
                }
            }
        }
        Family::TwoL1k { l, k, strict } => {
            let eps = enumerate_chains(u, (k + l) as usize)?;
            for xi in enumerate_chains(u, l as usize)? {
                for e in &eps {
                    if in_m_2l1k(u, &xi, e, strict) {
                        visit(&[&xi, e]);
                    }
                }
            }
        }
    }
    Ok(())
}

/// The set `M^U_λ` of the given family, after the parameter gate.
pub fn build_m_set(u: &Uio, family: Family) -> Result<Vec<MElement>> {
    family.check_gate()?;
    let mut out = Vec::new();
    for_each_member(u, family, |blocks| out.push(MElement::from_blocks(blocks)))?;
    Ok(out)
}

pub fn build_m_l1(u: &Uio, l: u32) -> Result<Vec<MElement>> {
    build_m_set(u, Family::L1 { l })
}

pub fn build_m_l1k(u: &Uio, l: u32, k: u32) -> Result<Vec<MElement>> {
    build_m_set(u, Family::L1k { l, k })
}

pub fn build_m_l2(u: &Uio, l: u32) -> Result<Vec<MElement>> {
    build_m_set(u, Family::L2 { l })
}

pub fn build_m_l21(u: &Uio, l: u32) -> Result<Vec<MElement>> {
    build_m_set(u, Family::L21 { l })
}

pub fn build_m_2l1k(u: &Uio, l: u32, k: u32, strict: bool) -> Result<Vec<MElement>> {
    build_m_set(u, Family::TwoL1k { l, k, strict })
}

/// Size and monomial sum of a set, streamed. The gate is not applied, so
/// degenerate parameters can be inspected.
pub fn m_set_summary(u: &Uio, family: Family) -> Result<(usize, VPoly)> {
    let n = u.n();
    let mut count = 0;
    let mut sum = VPoly::zero(n);
    let mut buf = Vec::new();
    for_each_member(u, family, |blocks| {
        buf.clear();
        for b in blocks {
            buf.extend_from_slice(b);
        }
        count += 1;
        sum.add_term(VertexMonomial::from_vertices(n, &buf), BigInt::one());
    })?;
    Ok((count, sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ganalogue::{m_g, p_g};
    use crate::uio::enumerate_uios;

    fn u344() -> Uio {
        "s:3,4,4".parse().unwrap()
    }

    #[test]
    fn small_corrects() {
        let c2 = Uio::chain(2);
        assert_eq!(enumerate_corrects(&c2, 2).unwrap(), vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(enumerate_corrects(&Uio::antichain(2), 2).unwrap().len(), 4);
        assert_eq!(enumerate_corrects(&u344(), 1).unwrap().len(), 3);
        assert!(!is_correct(&c2, &[0, 1]));
        assert!(is_correct(&Uio::antichain(2), &[1, 0]));
        assert!(enumerate_corrects(&c2, 0).is_err());
    }

    #[test]
    fn theta_examples() {
        let a = Uio::antichain(3);
        assert_eq!(theta(&a, &[0, 1]).unwrap(), 1);
        assert_eq!(theta(&a, &[0, 1, 2]).unwrap(), 2);
        assert_eq!(theta(&u344(), &[0, 1, 2]).unwrap(), 2);
        assert_eq!(theta(&a, &[0]), Err(Error::TooShort(2)));
    }

    #[test]
    fn power_sum_model() {
        let c2 = Uio::chain(2);
        let s = monomial_sum(2, enumerate_corrects(&c2, 2).unwrap());
        assert_eq!(s, p_g(2, &c2.incomparability_graph()).unwrap());
        assert!(monomial_sum(3, Vec::<Vec<usize>>::new()).is_zero());
    }

    #[test]
    fn hamiltonian_counts() {
        assert_eq!(hamiltonian_corrects_count(&Uio::antichain(4)).unwrap(), 24);
        assert_eq!(hamiltonian_corrects_count(&Uio::chain(3)).unwrap(), 0);
        assert_eq!(hamiltonian_corrects_count(&u344()).unwrap(), 3);
    }

    #[test]
    fn gates() {
        assert!(matches!(build_m_l1(&Uio::chain(2), 1), Err(Error::Gated { .. })));
        assert!(matches!(build_m_l2(&u344(), 2), Err(Error::Gated { .. })));
        assert!(build_m_l2(&u344(), 3).is_ok());
    }

    #[test]
    fn models_match_small() {
        for n in 1..=4 {
            for u in enumerate_uios(n).unwrap() {
                let g = u.incomparability_graph();
                for fam in [Family::L1 { l: 2 }, Family::L1k { l: 2, k: 2 }, Family::L2 { l: 3 }] {
                    let (_, s) = m_set_summary(&u, fam).unwrap();
                    assert_eq!(s, m_g(&fam.partition(), &g).unwrap(), "{u} {fam}");
                }
            }
        }
    }
}
