//! Stanley's G-homomorphism `φ_G: e_i ↦ e_i^G` and the G-analogues of the
//! classical bases, as polynomials in the vertices of `G`.
//!
//! These polynomials need not be symmetric in the vertices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::chromatic::e_coefficients;
use crate::limits;
use crate::partitions::{partitions_of, Partition};
use crate::polyring::{determinant, VPoly, VertexMonomial};
use crate::symfunc::{expand_in_monomials, to_e_basis, Basis, SymF};
use crate::uio::{clique_expand, Graph};
use crate::{Error, Result};

/// `e_i^G`: the sum of `∏_{v∈S} v` over stable `i`-sets `S`; `e_0^G = 1`
/// and `e_i^G = 0` for `i < 0` or `i > n`.
pub fn e_g(i: i64, g: &Graph) -> VPoly {
    let n = g.n();
    if i < 0 || i > n as i64 {
        return VPoly::zero(n);
    }
    let mut out = VPoly::zero(n);
    fn rec(g: &Graph, from: usize, left: usize, chosen: u64, out: &mut VPoly) {
        if left == 0 {
            let mut exps = alloc::vec![0u16; g.n()];
            for (v, e) in exps.iter_mut().enumerate() {
                *e = (chosen >> v & 1) as u16;
            }
            out.add_term(VertexMonomial::from_exponents(exps), BigInt::one());
            return;
        }
        for v in from..g.n() {
            if g.neighbors(v) & chosen == 0 {
                rec(g, v + 1, left - 1, chosen | 1 << v, out);
            }
        }
    }
    rec(g, 0, i as usize, 0, &mut out);
    out
}

/// A graph together with its `e_i^G`, reused across many evaluations.
#[derive(Clone, Debug)]
pub struct GHom {
    g: Graph,
    e: Vec<VPoly>,
}

impl GHom {
    pub fn new(g: &Graph) -> Self {
        let e = (0..=g.n() as i64).map(|i| e_g(i, g)).collect();
        GHom { g: g.clone(), e }
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn e(&self, i: i64) -> VPoly {
        if i < 0 || i as usize >= self.e.len() {
            VPoly::zero(self.n())
        } else {
            self.e[i as usize].clone()
        }
    }

    /// `e_λ^G = ∏ e_{λ_i}^G`.
    pub fn e_lambda(&self, lambda: &Partition) -> VPoly {
        let mut out = VPoly::one(self.n());
        for &k in lambda.parts() {
            let f = &self.e.get(k as usize);
            match f {
                Some(f) if !f.is_zero() => out = out.mul(f).expect("same ring"),
                _ => return VPoly::zero(self.n()),
            }
        }
        out
    }

    /// `φ_G(f)`: expand `f` in `e`, then substitute `e_i ↦ e_i^G`.
    pub fn phi(&self, f: &SymF) -> Result<VPoly> {
        let e = to_e_basis(f)?;
        let mut out = VPoly::zero(self.n());
        // products of shared prefixes are reused (terms come in lex order)
        let mut prefix: Vec<(u32, VPoly)> = Vec::new();
        for (lambda, c) in e.terms() {
            let parts = lambda.parts();
            let keep = prefix.iter().zip(parts).take_while(|((a, _), b)| a == *b).count();
            prefix.truncate(keep);
            for &k in &parts[keep..] {
                let base = prefix.last().map_or_else(|| VPoly::one(self.n()), |(_, p)| p.clone());
                let next = if base.is_zero() { base } else { base.mul(&self.e(k as i64))? };
                prefix.push((k, next));
            }
            match prefix.last() {
                Some((_, prod)) => out.add_scaled(prod, c)?,
                None => out.add_scaled(&VPoly::one(self.n()), c)?,
            }
        }
        Ok(out)
    }

    pub fn p(&self, k: u32) -> Result<VPoly> {
        self.phi(&SymF::p(k))
    }

    pub fn p_lambda(&self, lambda: &Partition) -> Result<VPoly> {
        self.phi(&SymF::basis_element(Basis::P, lambda.clone()))
    }

    pub fn m(&self, lambda: &Partition) -> Result<VPoly> {
        self.phi(&SymF::m(lambda.clone()))
    }

    pub fn s(&self, lambda: &Partition) -> Result<VPoly> {
        self.phi(&SymF::s(lambda.clone()))
    }

    /// `s_λ^G` as `det(e^G_{λ'_i + j - i})`, without going through `φ_G`.
    pub fn s_det(&self, lambda: &Partition) -> Result<VPoly> {
        let conj = lambda.conjugate();
        let k = conj.len();
        if k == 0 {
            return Ok(VPoly::one(self.n()));
        }
        let matrix: Vec<Vec<VPoly>> = (0..k)
            .map(|i| (0..k).map(|j| self.e(conj.parts()[i] as i64 + j as i64 - i as i64)).collect())
            .collect();
        determinant(&matrix)
    }
}

pub fn phi_g(f: &SymF, g: &Graph) -> Result<VPoly> {
    GHom::new(g).phi(f)
}

pub fn p_g(k: u32, g: &Graph) -> Result<VPoly> {
    GHom::new(g).p(k)
}

pub fn m_g(lambda: &Partition, g: &Graph) -> Result<VPoly> {
    GHom::new(g).m(lambda)
}

pub fn s_g(lambda: &Partition, g: &Graph) -> Result<VPoly> {
    GHom::new(g).s(lambda)
}

/// Largest graph accepted by [`cauchy_check`].
pub const MAX_CAUCHY_GRAPH: usize = 6;

/// Coefficients of `m_μ(x)` in `Σ_λ m_λ(x) e^G_λ(v)`, `Σ_λ s_λ(x) s^G_{λ'}(v)`
/// and `Σ_λ e_λ(x) m^G_λ(v)` at degree `d`.
pub fn cauchy_sides(hom: &GHom, d: u32) -> Result<[BTreeMap<Partition, VPoly>; 3]> {
    let parts = partitions_of(d);
    let n = hom.n();
    let mut sides: [BTreeMap<Partition, VPoly>; 3] = Default::default();
    for mu in &parts {
        for side in sides.iter_mut() {
            side.insert(mu.clone(), VPoly::zero(n));
        }
    }
    for lambda in &parts {
        sides[0].insert(lambda.clone(), hom.e_lambda(lambda));
        let s_dual = hom.s(&lambda.conjugate())?;
        let m_g = hom.m(lambda)?;
        let s_in_m = expand_in_monomials(&SymF::s(lambda.clone()))?;
        let e_in_m = expand_in_monomials(&SymF::basis_element(Basis::E, lambda.clone()))?;
        for (mu, k) in s_in_m.terms() {
            sides[1].get_mut(mu).expect("same degree").add_scaled(&s_dual, k)?;
        }
        for (mu, k) in e_in_m.terms() {
            sides[2].get_mut(mu).expect("same degree").add_scaled(&m_g, k)?;
        }
    }
    Ok(sides)
}

/// The three Cauchy-type expansions agree for every degree `d ≤ n`.
pub fn cauchy_check(g: &Graph) -> Result<bool> {
    limits::check("graph size for the Cauchy check", g.n(), MAX_CAUCHY_GRAPH)?;
    let hom = GHom::new(g);
    for d in 1..=g.n() as u32 {
        let [a, b, c] = cauchy_sides(&hom, d)?;
        if a != b || a != c {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two sides compared by [`alpha_coefficient_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCoefficient {
    /// `c_λ^α`, the `e_λ`-coefficient of `X_{G^α}`.
    pub c_alpha: BigInt,
    /// `[v^α] m^G_λ`.
    pub bracket: BigInt,
    /// `∏_v α(v)!`.
    pub factorial: BigInt,
}

impl AlphaCoefficient {
    pub fn holds(&self) -> bool {
        self.c_alpha == &self.factorial * &self.bracket
    }
}

pub fn alpha_coefficient(g: &Graph, alpha: &[u32], lambda: &Partition) -> Result<AlphaCoefficient> {
    let size: u32 = alpha.iter().sum();
    if size != lambda.weight() {
        return Err(Error::UnequalWeights(size, lambda.weight()));
    }
    let expanded = clique_expand(g, alpha)?;
    let c_alpha = e_coefficients(&expanded)?.remove(lambda).unwrap_or_default();
    let mono = VertexMonomial::from_exponents(alpha.iter().map(|&a| a as u16).collect());
    let bracket = m_g(lambda, g)?.coeff_of(&mono);
    let factorial = alpha
        .iter()
        .flat_map(|&a| 1..=a)
        .fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    Ok(AlphaCoefficient { c_alpha, bracket, factorial })
}

/// `c_λ^α = ∏ α(v)! · [v^α] m^G_λ`, where `c_λ^α` is read from `X_{G^α}`.
pub fn alpha_coefficient_check(g: &Graph, alpha: &[u32], lambda: &Partition) -> Result<bool> {
    Ok(alpha_coefficient(g, alpha, lambda)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uio::{incomparability_graph, Uio};
    use num_traits::Zero;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(e: &[u16]) -> VertexMonomial {
        VertexMonomial::from_exponents(e.to_vec())
    }

    #[test]
    fn elementary_analogues() {
        let g = Graph::path(3);
        let e1 = e_g(1, &g);
        assert_eq!(e1.len(), 3);
        assert!(e_g(2, &Graph::complete(2)).is_zero());
        let e2 = e_g(2, &Graph::edgeless(2));
        assert_eq!(e2, VPoly::monomial(mono(&[1, 1]), BigInt::one()));
        assert_eq!(e_g(0, &g), VPoly::one(3));
        assert!(e_g(-1, &g).is_zero());
        assert!(e_g(4, &g).is_zero());
    }

    #[test]
    fn homomorphism_examples() {
        let edgeless = Graph::edgeless(3);
        assert_eq!(phi_g(&SymF::e(3), &edgeless).unwrap(), VPoly::monomial(mono(&[1, 1, 1]), BigInt::one()));
        assert_eq!(phi_g(&SymF::p(1), &Graph::path(3)).unwrap(), e_g(1, &Graph::path(3)));
        // 2-chain: no edge in the incomparability graph
        let g = incomparability_graph(&Uio::chain(2));
        let p2 = p_g(2, &g).unwrap();
        assert_eq!(p2, VPoly::monomial(mono(&[2, 0]), BigInt::one()).add(&VPoly::monomial(mono(&[0, 2]), BigInt::one())).unwrap());
        // 2-antichain: u ∼ v
        let a = incomparability_graph(&Uio::antichain(2));
        let p2 = p_g(2, &a).unwrap();
        assert_eq!(p2.coeff_of(&mono(&[1, 1])), BigInt::from(2));
        assert_eq!(p2.len(), 3);
    }

    #[test]
    fn analogues_of_e2() {
        for g in [Graph::path(3), Graph::complete(3), Graph::edgeless(4)] {
            let e2 = e_g(2, &g);
            assert_eq!(m_g(&p(&[1, 1]), &g).unwrap(), e2);
            assert_eq!(s_g(&p(&[1, 1]), &g).unwrap(), e2);
        }
        let chain = incomparability_graph(&Uio::chain(2));
        assert_eq!(m_g(&p(&[1, 1]), &chain).unwrap().coeff_of(&mono(&[1, 1])), BigInt::one());
    }

    #[test]
    fn schur_determinant_agrees() {
        let g = incomparability_graph(&Uio::from_successors(&[3, 4, 4]).unwrap());
        let hom = GHom::new(&g);
        for d in 1..=4 {
            for lambda in partitions_of(d) {
                assert_eq!(hom.s(&lambda).unwrap(), hom.s_det(&lambda).unwrap());
            }
        }
        // the 2-vertex edgeless example: det [[e1, e2], [1, e1]]
        let h = GHom::new(&Graph::edgeless(2));
        let s2 = h.s_det(&p(&[2])).unwrap();
        assert_eq!(s2.len(), 3);
        assert_eq!(s2.coeff_of(&mono(&[1, 1])), BigInt::one());
    }

    #[test]
    fn cauchy_small() {
        assert!(cauchy_check(&Graph::edgeless(1)).unwrap());
        let g = incomparability_graph(&Uio::from_successors(&[3, 4, 4]).unwrap());
        assert!(cauchy_check(&g).unwrap());
    }

    #[test]
    fn alpha_examples() {
        let g = incomparability_graph(&Uio::chain(3));
        assert!(alpha_coefficient_check(&g, &[1, 1, 1], &p(&[2, 1])).unwrap());
        let single = Graph::edgeless(1);
        let r = alpha_coefficient(&single, &[2], &p(&[2])).unwrap();
        assert_eq!((r.c_alpha.clone(), r.bracket.clone()), (BigInt::from(2), BigInt::one()));
        assert!(r.holds());
        let chain = incomparability_graph(&Uio::chain(2));
        assert!(alpha_coefficient_check(&chain, &[2, 1], &p(&[2, 1])).unwrap());
        assert!(alpha_coefficient(&chain, &[2, 2], &p(&[2, 1])).is_err());
        let zero = alpha_coefficient(&chain, &[1, 1], &p(&[2])).unwrap();
        assert!(zero.c_alpha.is_zero() && zero.holds());
    }
}
