//! Homogeneous symmetric functions of a fixed degree in the elementary,
//! power-sum, monomial and Schur bases, with exact conversions.
//!
//! The monomial basis is the pivot: `e` and `p` are expanded into `m`
//! directly, `s` goes through `e` (Jacobi–Trudi), and the only inverse
//! problem is `m → e`, which is unitriangular.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use crate::limits;
use crate::partitions::{partitions_of, Partition};
use crate::polyring::{determinant, VPoly, VertexMonomial};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    E,
    P,
    M,
    S,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::P => "p",
            Basis::M => "m",
            Basis::S => "s",
        }
    }

    pub fn parse(s: &str) -> Option<Basis> {
        match s {
            "e" => Some(Basis::E),
            "p" => Some(Basis::P),
            "m" => Some(Basis::M),
            "s" => Some(Basis::S),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Σ c_λ b_λ` over partitions `λ` of `degree`, for one basis `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymF {
    basis: Basis,
    degree: u32,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymF {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        SymF { basis, degree, coeffs: BTreeMap::new() }
    }

    /// A single basis element `b_λ`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = Self::zero(basis, lambda.weight());
        f.coeffs.insert(lambda, BigInt::one());
        f
    }

    pub fn e(k: u32) -> Self {
        Self::basis_element(Basis::E, Partition::row(k))
    }

    pub fn p(k: u32) -> Self {
        Self::basis_element(Basis::P, Partition::row(k))
    }

    pub fn m(lambda: Partition) -> Self {
        Self::basis_element(Basis::M, lambda)
    }

    pub fn s(lambda: Partition) -> Self {
        Self::basis_element(Basis::S, lambda)
    }

    /// Builds from `(λ, c)` pairs, summing repeats; every `λ` must have weight
    /// `degree`.
    pub fn from_terms<I>(basis: Basis, degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut f = Self::zero(basis, degree);
        for (lambda, c) in terms {
            if lambda.weight() != degree {
                return Err(Error::UnequalWeights(lambda.weight(), degree));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Terms in canonical (lexicographically decreasing) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.basis, self.degree);
        for (l, a) in &self.coeffs {
            out.add_term(l.clone(), a * c);
        }
        out
    }

    /// Sum; operands in different bases are both expanded in `m`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &BigInt::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &-BigInt::one())
    }

    fn combine(&self, other: &Self, sign: &BigInt) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::UnequalWeights(self.degree, other.degree));
        }
        let (mut out, rhs) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (expand_in_monomials(self)?, expand_in_monomials(other)?)
        };
        for (l, c) in rhs.coeffs {
            out.add_term(l, c * sign);
        }
        Ok(out)
    }
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{}{l}", self.basis)?;
        }
        Ok(())
    }
}

fn check_degree(d: u32) -> Result<()> {
    limits::check("degree", d as usize, limits::max_degree())
}

const CACHED_DEGREES: usize = 32;

/// Transition data for one degree.
struct DegreeTable {
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    /// `e_in_m[i][j] = [m_{parts[j]}] e_{parts[i]}`.
    e_in_m: Vec<Vec<BigInt>>,
    /// `m_{parts[i]} = Σ_j c_j e_{parts[j]}`, sparse.
    m_in_e: Vec<Vec<(usize, BigInt)>>,
}

static TABLES: [OnceBox<DegreeTable>; CACHED_DEGREES] = [const { OnceBox::new() }; CACHED_DEGREES];

fn table(d: u32) -> Result<&'static DegreeTable> {
    check_degree(d)?;
    limits::check("degree", d as usize, CACHED_DEGREES - 1)?;
    Ok(TABLES[d as usize].get_or_init(|| alloc::boxed::Box::new(build_table(d))))
}

fn build_table(d: u32) -> DegreeTable {
    let parts = partitions_of(d);
    let index: BTreeMap<Partition, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let e_in_m: Vec<Vec<BigInt>> = parts
        .iter()
        .map(|mu| {
            parts
                .iter()
                .map(|lambda| factor_product_coefficient(Factor::E, mu.parts(), lambda.parts()))
                .collect()
        })
        .collect();
    // Peel: e_{λ'} = m_λ + (terms strictly below λ in dominance), and the
    // partitions are listed lexicographically decreasing.
    let mut m_in_e = Vec::with_capacity(parts.len());
    for start in 0..parts.len() {
        let mut residual: Vec<BigInt> = vec![BigInt::zero(); parts.len()];
        residual[start] = BigInt::one();
        let mut out = Vec::new();
        for i in start..parts.len() {
            if residual[i].is_zero() {
                continue;
            }
            let c = residual[i].clone();
            let j = index[&parts[i].conjugate()];
            debug_assert!(e_in_m[j][i].is_one());
            for (r, a) in residual.iter_mut().zip(&e_in_m[j]).skip(i) {
                if !a.is_zero() {
                    *r -= &c * a;
                }
            }
            out.push((j, c));
        }
        out.sort_by_key(|(j, _)| *j);
        m_in_e.push(out);
    }
    DegreeTable { parts, index, e_in_m, m_in_e }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Factor {
    E,
    P,
}

/// `[x^target] ∏_i f_{factors[i]}(x)` for `f = e` or `f = p`.
///
/// Only the multiset of remaining exponents matters, so the memo key sorts
/// them.
fn factor_product_coefficient(kind: Factor, factors: &[u32], target: &[u32]) -> BigInt {
    let total: u32 = factors.iter().sum();
    if total != target.iter().sum::<u32>() {
        return BigInt::zero();
    }
    type Memo = BTreeMap<(usize, Vec<u32>), BigInt>;
    fn rec(kind: Factor, factors: &[u32], t: usize, rest: Vec<u32>, memo: &mut Memo) -> BigInt {
        if t == factors.len() {
            return if rest.is_empty() { BigInt::one() } else { BigInt::zero() };
        }
        let key = (t, rest);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let rest = &key.1;
        let k = factors[t];
        let mut acc = BigInt::zero();
        let mut descend = |chosen: &[usize], amount: u32, memo: &mut Memo| {
            let mut r = rest.clone();
            for &j in chosen {
                r[j] -= amount;
            }
            r.retain(|&x| x > 0);
            r.sort_unstable_by(|a, b| b.cmp(a));
            acc += rec(kind, factors, t + 1, r, memo);
        };
        match kind {
            Factor::P => {
                for (j, &r) in rest.iter().enumerate() {
                    if r >= k {
                        descend(&[j], k, memo);
                    }
                }
            }
            Factor::E => {
                // every k-subset of the positions still carrying exponent
                fn subsets(m: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
                    if cur.len() == k {
                        f(cur);
                        return;
                    }
                    for j in from..m {
                        if m - j < k - cur.len() {
                            break;
                        }
                        cur.push(j);
                        subsets(m, k, j + 1, cur, f);
                        cur.pop();
                    }
                }
                let mut chosen_sets: Vec<Vec<usize>> = Vec::new();
                subsets(rest.len(), k as usize, 0, &mut Vec::new(), &mut |c| chosen_sets.push(c.to_vec()));
                for c in &chosen_sets {
                    descend(c, 1, memo);
                }
            }
        }
        memo.insert(key.clone(), acc.clone());
        acc
    }
    let mut memo = Memo::new();
    let mut start: Vec<u32> = target.iter().copied().filter(|&x| x > 0).collect();
    start.sort_unstable_by(|a, b| b.cmp(a));
    rec(kind, factors, 0, start, &mut memo)
}

/// `m_λ` expressed in the elementary basis (cached per degree).
pub fn m_in_e(lambda: &Partition) -> Result<SymF> {
    let d = lambda.weight();
    let t = table(d)?;
    let row = &t.m_in_e[t.index[lambda]];
    Ok(SymF {
        basis: Basis::E,
        degree: d,
        coeffs: row.iter().map(|(j, c)| (t.parts[*j].clone(), c.clone())).collect(),
    })
}

/// `e_λ` expressed in the monomial basis (cached per degree).
pub fn e_in_m(lambda: &Partition) -> Result<SymF> {
    let d = lambda.weight();
    let t = table(d)?;
    let row = &t.e_in_m[t.index[lambda]];
    let mut f = SymF::zero(Basis::M, d);
    for (j, c) in row.iter().enumerate() {
        f.add_term(t.parts[j].clone(), c.clone());
    }
    Ok(f)
}

/// The monomial expansion of `f`.
///
/// Each `e_μ` or `p_μ` is read off as the coefficient of `x^λ` in the
/// product over `degree` variables, for every partition `λ` of the degree.
pub fn expand_in_monomials(f: &SymF) -> Result<SymF> {
    check_degree(f.degree)?;
    match f.basis {
        Basis::M => Ok(f.clone()),
        Basis::E => {
            let t = table(f.degree)?;
            let mut out = SymF::zero(Basis::M, f.degree);
            for (mu, c) in &f.coeffs {
                for (j, a) in t.e_in_m[t.index[mu]].iter().enumerate() {
                    if !a.is_zero() {
                        out.add_term(t.parts[j].clone(), a * c);
                    }
                }
            }
            Ok(out)
        }
        Basis::P => {
            let parts = partitions_of(f.degree);
            let mut out = SymF::zero(Basis::M, f.degree);
            for (mu, c) in &f.coeffs {
                for lambda in &parts {
                    let a = factor_product_coefficient(Factor::P, mu.parts(), lambda.parts());
                    out.add_term(lambda.clone(), a * c);
                }
            }
            Ok(out)
        }
        Basis::S => expand_in_monomials(&to_e_basis(f)?),
    }
}

/// The elementary expansion of `f`.
pub fn to_e_basis(f: &SymF) -> Result<SymF> {
    check_degree(f.degree)?;
    let mut out = SymF::zero(Basis::E, f.degree);
    match f.basis {
        Basis::E => return Ok(f.clone()),
        Basis::M => {
            let t = table(f.degree)?;
            for (lambda, c) in &f.coeffs {
                for (j, a) in &t.m_in_e[t.index[lambda]] {
                    out.add_term(t.parts[*j].clone(), a * c);
                }
            }
        }
        Basis::P => {
            for (mu, c) in &f.coeffs {
                let mut prod = SymF::basis_element(Basis::E, Partition::empty());
                for &k in mu.parts() {
                    prod = mul_same_basis(&prod, &p_to_e(k)?);
                }
                for (l, a) in prod.coeffs {
                    out.add_term(l, a * c);
                }
            }
        }
        Basis::S => {
            for (lambda, c) in &f.coeffs {
                for (l, a) in schur_in_e(lambda)?.coeffs {
                    out.add_term(l, a * c);
                }
            }
        }
    }
    Ok(out)
}

/// Converts to `e` or `m`; other targets are not integral in general.
pub fn convert(f: &SymF, target: Basis) -> Result<SymF> {
    match target {
        Basis::E => to_e_basis(f),
        Basis::M => expand_in_monomials(f),
        _ if f.basis == target => Ok(f.clone()),
        _ => Err(Error::NotInDomain(alloc::format!(
            "conversion into the {target} basis is not supported"
        ))),
    }
}

/// `p_k` in the elementary basis, by Newton's recurrence
/// `p_k = Σ_{i<k} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k`.
pub fn p_to_e(k: u32) -> Result<SymF> {
    if k == 0 {
        return Err(Error::NotInDomain("p_0 is undefined".into()));
    }
    check_degree(k)?;
    let mut ps: Vec<SymF> = Vec::with_capacity(k as usize);
    for j in 1..=k {
        let sign = |i: u32| if i % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        let mut pj = SymF::basis_element(Basis::E, Partition::row(j)).scale(&(sign(j) * BigInt::from(j)));
        for i in 1..j {
            let term = mul_same_basis(&SymF::e(i), &ps[(j - i - 1) as usize]).scale(&sign(i));
            for (l, a) in term.coeffs {
                pj.add_term(l, a);
            }
        }
        ps.push(pj);
    }
    Ok(ps.pop().expect("k >= 1"))
}

/// `s_λ = det(e_{λ'_i + j - i})` expanded in the elementary basis.
pub fn schur_in_e(lambda: &Partition) -> Result<SymF> {
    let d = lambda.weight();
    check_degree(d)?;
    let conj = lambda.conjugate();
    let k = conj.len();
    let nv = d as usize;
    // e_j is the variable j-1 of a polynomial ring in d variables
    let entry = |idx: i64| -> VPoly {
        if idx == 0 {
            VPoly::one(nv)
        } else if idx < 0 || idx > d as i64 {
            VPoly::zero(nv)
        } else {
            VPoly::var(nv, idx as usize - 1)
        }
    };
    let matrix: Vec<Vec<VPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| entry(conj.parts()[i] as i64 + j as i64 - i as i64))
                .collect()
        })
        .collect();
    if k == 0 {
        return Ok(SymF::basis_element(Basis::E, Partition::empty()));
    }
    let det = determinant(&matrix)?;
    let mut out = SymF::zero(Basis::E, d);
    for (m, c) in det.terms() {
        out.add_term(exponents_to_partition(m), c.clone());
    }
    Ok(out)
}

fn exponents_to_partition(m: &VertexMonomial) -> Partition {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate().rev() {
        for _ in 0..e {
            parts.push(i as u32 + 1);
        }
    }
    Partition::from_sorted(parts)
}

/// Product within `e` or `p`, where `b_λ b_μ = b_{λ∪μ}`.
fn mul_same_basis(f: &SymF, g: &SymF) -> SymF {
    debug_assert!(f.basis == g.basis && matches!(f.basis, Basis::E | Basis::P));
    let mut out = SymF::zero(f.basis, f.degree + g.degree);
    for (a, ca) in &f.coeffs {
        for (b, cb) in &g.coeffs {
            out.add_term(a.union(b), ca * cb);
        }
    }
    out
}

/// Exact product. Two `e` (or two `p`) operands multiply in place; anything
/// else is first brought to the elementary basis.
pub fn multiply(f: &SymF, g: &SymF) -> Result<SymF> {
    check_degree(f.degree + g.degree)?;
    if f.basis == g.basis && matches!(f.basis, Basis::E | Basis::P) {
        return Ok(mul_same_basis(f, g));
    }
    Ok(mul_same_basis(&to_e_basis(f)?, &to_e_basis(g)?))
}

/// True iff both sides agree in the monomial basis. Different degrees are
/// never equal.
pub fn check_identity(lhs: &SymF, rhs: &SymF) -> Result<bool> {
    if lhs.degree != rhs.degree {
        return Ok(false);
    }
    Ok(expand_in_monomials(lhs)? == expand_in_monomials(rhs)?)
}

/// Evaluates `f` in `nvars` concrete variables.
pub fn to_polynomial(f: &SymF, nvars: usize) -> Result<VPoly> {
    let m = expand_in_monomials(f)?;
    let mut out = VPoly::zero(nvars);
    for (lambda, c) in m.terms() {
        if lambda.len() > nvars {
            continue;
        }
        let mut exps: Vec<u16> = lambda.parts().iter().map(|&p| p as u16).collect();
        exps.resize(nvars, 0);
        // distinct permutations, starting from the decreasing arrangement
        loop {
            out.add_term(VertexMonomial::from_exponents(exps.clone()), c.clone());
            if !prev_permutation(&mut exps) {
                break;
            }
        }
    }
    Ok(out)
}

/// Steps to the previous permutation in lexicographic order; false once the
/// increasing arrangement has been passed.
fn prev_permutation(a: &mut [u16]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] <= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] >= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The product identities that the correct-sequence models rest on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductIdentity {
    /// `p_l e_k = m_{l,1^k} + m_{l+1,1^{k-1}}`.
    Hook { l: u32, k: u32 },
    /// `p_l p_2 - p_{l+2} = m_{l,2}`.
    TwoRow { l: u32 },
    /// `p_l m_{2,1} = m_{l+2,1} + m_{l+1,2} + m_{l,2,1}`.
    HookTwoOne { l: u32 },
}

impl ProductIdentity {
    /// Left- and right-hand sides, with the partitions sorted as written.
    pub fn sides(&self) -> Result<(SymF, SymF)> {
        let part = |v: &[u32]| Partition::new(v.to_vec());
        match *self {
            ProductIdentity::Hook { l, k } => {
                if l == 0 || k == 0 {
                    return Err(Error::NotInDomain("hook identity needs l, k >= 1".into()));
                }
                let lhs = multiply(&SymF::p(l), &SymF::e(k))?;
                let mut a = alloc::vec![l];
                a.extend(core::iter::repeat_n(1, k as usize));
                let mut b = alloc::vec![l + 1];
                b.extend(core::iter::repeat_n(1, k as usize - 1));
                let rhs = SymF::m(part(&a)?).add(&SymF::m(part(&b)?))?;
                Ok((lhs, rhs))
            }
            ProductIdentity::TwoRow { l } => {
                if l == 0 {
                    return Err(Error::NotInDomain("two-row identity needs l >= 1".into()));
                }
                let lhs = multiply(&SymF::p(l), &SymF::p(2))?.sub(&SymF::p(l + 2))?;
                Ok((lhs, SymF::m(part(&[l, 2])?)))
            }
            ProductIdentity::HookTwoOne { l } => {
                if l == 0 {
                    return Err(Error::NotInDomain("identity needs l >= 1".into()));
                }
                let lhs = multiply(&SymF::p(l), &SymF::m(part(&[2, 1])?))?;
                let rhs = SymF::m(part(&[l + 2, 1])?)
                    .add(&SymF::m(part(&[l + 1, 2])?))?
                    .add(&SymF::m(part(&[l, 2, 1])?))?;
                Ok((lhs, rhs))
            }
        }
    }

    pub fn holds(&self) -> Result<bool> {
        let (lhs, rhs) = self.sides()?;
        check_identity(&lhs, &rhs)
    }
}

impl fmt::Display for ProductIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ProductIdentity::Hook { l, k } => write!(f, "p_{l}*e_{k} = m_({l},1^{k}) + m_({},1^{})", l + 1, k - 1),
            ProductIdentity::TwoRow { l } => write!(f, "p_{l}*p_2 - p_{} = m_({l},2)", l + 2),
            ProductIdentity::HookTwoOne { l } => {
                write!(f, "p_{l}*m_(2,1) = m_({},1) + m_({},2) + m_({l},2,1)", l + 2, l + 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sf(basis: Basis, terms: &[(&[u32], i64)]) -> SymF {
        let d = terms[0].0.iter().sum();
        SymF::from_terms(basis, d, terms.iter().map(|(l, c)| (p(l), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn monomial_expansions() {
        assert_eq!(expand_in_monomials(&SymF::e(2)).unwrap(), SymF::m(p(&[1, 1])));
        assert_eq!(expand_in_monomials(&SymF::p(2)).unwrap(), SymF::m(p(&[2])));
        let e11 = SymF::basis_element(Basis::E, p(&[1, 1]));
        assert_eq!(
            expand_in_monomials(&e11).unwrap(),
            sf(Basis::M, &[(&[2], 1), (&[1, 1], 2)])
        );
    }

    #[test]
    fn elementary_expansions() {
        assert_eq!(to_e_basis(&SymF::m(p(&[1, 1]))).unwrap(), SymF::e(2));
        assert_eq!(
            to_e_basis(&SymF::m(p(&[2]))).unwrap(),
            sf(Basis::E, &[(&[1, 1], 1), (&[2], -2)])
        );
        assert_eq!(
            to_e_basis(&SymF::p(3)).unwrap(),
            sf(Basis::E, &[(&[1, 1, 1], 1), (&[2, 1], -3), (&[3], 3)])
        );
        assert_eq!(
            to_e_basis(&SymF::m(p(&[2, 1]))).unwrap(),
            sf(Basis::E, &[(&[2, 1], 1), (&[3], -3)])
        );
    }

    #[test]
    fn newton() {
        assert_eq!(p_to_e(1).unwrap(), SymF::e(1));
        assert_eq!(p_to_e(2).unwrap(), sf(Basis::E, &[(&[1, 1], 1), (&[2], -2)]));
        assert_eq!(
            p_to_e(4).unwrap(),
            sf(
                Basis::E,
                &[(&[1, 1, 1, 1], 1), (&[2, 1, 1], -4), (&[2, 2], 2), (&[3, 1], 4), (&[4], -4)]
            )
        );
    }

    #[test]
    fn jacobi_trudi() {
        assert_eq!(schur_in_e(&p(&[1, 1])).unwrap(), SymF::e(2));
        assert_eq!(schur_in_e(&p(&[2])).unwrap(), sf(Basis::E, &[(&[1, 1], 1), (&[2], -1)]));
        assert_eq!(schur_in_e(&p(&[2, 1])).unwrap(), sf(Basis::E, &[(&[2, 1], 1), (&[3], -1)]));
    }

    #[test]
    fn products_and_identities() {
        let e1 = SymF::e(1);
        assert_eq!(multiply(&e1, &e1).unwrap(), SymF::basis_element(Basis::E, p(&[1, 1])));
        let lhs = multiply(&SymF::p(2), &SymF::p(1)).unwrap().sub(&SymF::p(3)).unwrap();
        assert_eq!(expand_in_monomials(&lhs).unwrap(), SymF::m(p(&[2, 1])));
        let prod = multiply(&SymF::p(3), &SymF::e(2)).unwrap();
        assert_eq!(
            expand_in_monomials(&prod).unwrap(),
            sf(Basis::M, &[(&[4, 1], 1), (&[3, 1, 1], 1)])
        );
        assert!(ProductIdentity::Hook { l: 3, k: 2 }.holds().unwrap());
        assert!(ProductIdentity::HookTwoOne { l: 4 }.holds().unwrap());
        // degenerate l = 1: p_1 e_2 = m_{2,1} + 3 m_{1,1,1}
        let bad = multiply(&SymF::p(1), &SymF::e(2)).unwrap();
        let rhs = SymF::m(p(&[1, 1, 1])).add(&SymF::m(p(&[2, 1]))).unwrap();
        assert!(!check_identity(&bad, &rhs).unwrap());
    }

    #[test]
    fn gates() {
        assert!(!ProductIdentity::Hook { l: 1, k: 1 }.holds().unwrap());
        assert!(ProductIdentity::Hook { l: 2, k: 1 }.holds().unwrap());
        assert!(!ProductIdentity::TwoRow { l: 2 }.holds().unwrap());
        assert!(ProductIdentity::TwoRow { l: 3 }.holds().unwrap());
        assert!(!ProductIdentity::HookTwoOne { l: 2 }.holds().unwrap());
        assert!(ProductIdentity::HookTwoOne { l: 3 }.holds().unwrap());
    }

    #[test]
    fn polynomial_evaluation() {
        let f = to_polynomial(&SymF::m(p(&[2, 1])), 3).unwrap();
        assert_eq!(f.len(), 6);
        assert!(to_polynomial(&SymF::m(p(&[1, 1, 1])), 2).unwrap().is_zero());
    }

    #[test]
    fn degree_cap() {
        let big = SymF::e(limits::max_degree() as u32 + 1);
        assert!(matches!(expand_in_monomials(&big), Err(Error::OverCap { .. })));
    }
}
