//! Sparse polynomials with exact integer coefficients in a fixed number of
//! vertex variables `v_1, ..., v_n`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A monomial `v^α`, stored as a dense exponent vector over all `n` variables.
///
/// Ordered graded-lexicographically: lower total degree first, then larger
/// exponent vectors first (`v_1^2 < v_1 v_2 < v_2^2`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexMonomial {
    exps: Vec<u16>,
}

impl VertexMonomial {
    pub fn one(n: usize) -> Self {
        VertexMonomial { exps: vec![0; n] }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        VertexMonomial { exps }
    }

    /// The variable `v_i`, with `i` counted from 0.
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m
    }

    /// Product of the given variables (repetition raises the exponent).
    pub fn from_vertices(n: usize, vs: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &v in vs {
            m.exps[v] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Nonzero exponents as `(vertex, exponent)`, vertices counted from 1.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        VertexMonomial { exps }
    }
}

impl Ord for VertexMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for VertexMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `n` vertex variables. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VPoly {
    n: usize,
    terms: BTreeMap<VertexMonomial, BigInt>,
}

impl VPoly {
    pub fn zero(n: usize) -> Self {
        VPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigInt::one())
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut p = Self::zero(n);
        p.add_term(VertexMonomial::one(n), c);
        p
    }

    /// `v_i`, with `i` counted from 0.
    pub fn var(n: usize, i: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(VertexMonomial::var(n, i), BigInt::one());
        p
    }

    pub fn monomial(m: VertexMonomial, c: BigInt) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VertexMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Adds `c·m` in place, pruning a coefficient that cancels to zero.
    pub fn add_term(&mut self, m: VertexMonomial, c: BigInt) {
        assert_eq!(m.nvars(), self.n, "monomial has the wrong number of variables");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::MismatchedVars(self.n, other.n))
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) -> Result<()> {
        self.same_ring(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigInt::one())?;
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        VPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(self.n);
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                out.add_term(ma.mul(mb), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..k {
            out = out.mul(self).expect("same ring");
        }
        out
    }

    /// `[v^α] p`; zero when absent.
    pub fn coeff_of(&self, alpha: &VertexMonomial) -> BigInt {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    /// True iff every stored coefficient is positive (so the zero polynomial
    /// qualifies).
    pub fn is_monomial_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl fmt::Display for VPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = c.abs();
            let is_const = m.degree() == 0;
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
            }
            for (v, e) in m.support() {
                if e == 1 {
                    write!(f, "v{v}")?;
                } else {
                    write!(f, "v{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Exact determinant by Laplace expansion, memoised over column subsets.
///
/// The empty matrix has determinant 1 in the ring with zero variables.
pub fn determinant(m: &[Vec<VPoly>]) -> Result<VPoly> {
    let k = m.len();
    if m.iter().any(|row| row.len() != k) {
        return Err(Error::NonSquare);
    }
    if k == 0 {
        return Ok(VPoly::one(0));
    }
    if k > 20 {
        return Err(Error::OverCap { what: "matrix size", size: k, cap: 20 });
    }
    let n = m[0][0].nvars();
    for row in m {
        for x in row {
            if x.nvars() != n {
                return Err(Error::MismatchedVars(n, x.nvars()));
            }
        }
    }
    // minors[S] = det of rows (k - |S|)..k against the columns in S
    let mut minors: Vec<Option<VPoly>> = vec![None; 1 << k];
    minors[0] = Some(VPoly::one(n));
    let mut masks: Vec<usize> = (1..(1usize << k)).collect();
    masks.sort_by_key(|s| s.count_ones());
    for s in masks {
        let row = k - s.count_ones() as usize;
        let mut acc = VPoly::zero(n);
        let mut seen = 0;
        for j in 0..k {
            if s & (1 << j) == 0 {
                continue;
            }
            let entry = &m[row][j];
            if !entry.is_zero() {
                let minor = minors[s & !(1 << j)].as_ref().expect("smaller minor computed");
                let term = entry.mul(minor)?;
                let sign = if seen % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                acc.add_scaled(&term, &sign)?;
            }
            seen += 1;
        }
        minors[s] = Some(acc);
    }
    Ok(minors[(1 << k) - 1].take().expect("full minor computed"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn binomial_square() {
        let u = VPoly::var(2, 0);
        let v = VPoly::var(2, 1);
        let s = u.add(&v).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff_of(&VertexMonomial::from_exponents(vec![1, 1])), int(2));
        assert_eq!(sq.coeff_of(&VertexMonomial::from_exponents(vec![2, 0])), int(1));
        assert_eq!(sq.to_string(), "v1^2 + 2v1v2 + v2^2");
    }

    #[test]
    fn identity_and_cancellation() {
        let u = VPoly::var(2, 0);
        assert_eq!(u.add(&VPoly::zero(2)).unwrap(), u);
        assert!(u.sub(&u).unwrap().is_zero());
        assert_eq!(u.add(&VPoly::var(3, 0)), Err(Error::MismatchedVars(2, 3)));
    }

    #[test]
    fn small_determinants() {
        let v = |i| VPoly::var(4, i);
        let d = determinant(&[vec![v(0), v(1)], vec![v(2), v(3)]]).unwrap();
        let expect = v(0).mul(&v(3)).unwrap().sub(&v(1).mul(&v(2)).unwrap()).unwrap();
        assert_eq!(d, expect);
        let one = VPoly::one(1);
        let zero = VPoly::zero(1);
        let id = [
            vec![one.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), one.clone()],
        ];
        assert_eq!(determinant(&id).unwrap(), one);
        assert_eq!(determinant(&[vec![one.clone(), one]]), Err(Error::NonSquare));
    }

    #[test]
    fn positivity() {
        let u = VPoly::var(2, 0);
        let v = VPoly::var(2, 1);
        assert!(u.mul(&u).unwrap().add(&u.mul(&v).unwrap()).unwrap().is_monomial_positive());
        assert!(!u.sub(&v).unwrap().is_monomial_positive());
        assert_eq!(VPoly::zero(3).coeff_of(&VertexMonomial::var(3, 1)), int(0));
    }
}
