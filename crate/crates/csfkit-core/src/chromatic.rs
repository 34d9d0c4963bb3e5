//! The chromatic symmetric function `X_G` and its elementary expansion.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::limits;
use crate::partitions::{partitions_of, Partition};
use crate::polyring::{VPoly, VertexMonomial};
use crate::symfunc::{to_e_basis, Basis, SymF};
use crate::uio::{acyclic_sink_counts, Graph};
use crate::{Error, Result};

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Number of partitions of the vertex set into stable blocks, by block-size
/// type.
pub fn stable_partition_counts(g: &Graph) -> Result<BTreeMap<Partition, u64>> {
    let n = g.n();
    limits::check("degree", n, limits::max_degree())?;
    fn rec(g: &Graph, remaining: u64, sizes: &mut Vec<u32>, out: &mut BTreeMap<Partition, u64>) {
        if remaining == 0 {
            let mut s = sizes.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            *out.entry(Partition::from_sorted(s)).or_insert(0) += 1;
            return;
        }
        let v = remaining.trailing_zeros() as usize;
        let candidates = remaining & !g.neighbors(v) & !(1u64 << v);
        // every subset of the candidates that is stable joins v's block
        let mut sub = candidates;
        loop {
            if g.is_stable(sub) {
                sizes.push(sub.count_ones() + 1);
                rec(g, remaining & !sub & !(1u64 << v), sizes, out);
                sizes.pop();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & candidates;
        }
    }
    let mut out = BTreeMap::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    rec(g, all, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `X_G` in the monomial basis: each stable partition of type `λ`
/// contributes `∏ r_i! · m_λ`, where `r_i` are the part multiplicities.
pub fn csf(g: &Graph) -> Result<SymF> {
    let counts = stable_partition_counts(g)?;
    let terms = counts.into_iter().map(|(lambda, c)| {
        let weight = lambda
            .multiplicities()
            .iter()
            .fold(BigInt::one(), |acc, &(_, r)| acc * factorial(r));
        (lambda, weight * BigInt::from(c))
    });
    SymF::from_terms(Basis::M, g.n() as u32, terms)
}

/// `Σ x^c` over proper colourings `c` with palette `1..=colors`.
pub fn csf_coloring_oracle(g: &Graph, colors: usize) -> Result<VPoly> {
    let n = g.n();
    let edges = g.edges();
    let mut out = VPoly::zero(colors);
    if colors == 0 {
        if n == 0 {
            out = VPoly::one(0);
        }
        return Ok(out);
    }
    let total = (colors as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > 1 << 26 {
        return Err(Error::OverCap { what: "colourings", size: usize::MAX, cap: 1 << 26 });
    }
    let mut c = vec![0usize; n];
    loop {
        if edges.iter().all(|&(a, b)| c[a] != c[b]) {
            let mut exps = vec![0u16; colors];
            for &x in &c {
                exps[x] += 1;
            }
            out.add_term(VertexMonomial::from_exponents(exps), BigInt::one());
        }
        // odometer step
        let mut i = 0;
        while i < n {
            c[i] += 1;
            if c[i] < colors {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(out)
}

/// Largest edge count accepted by [`csf_p_oracle`].
pub const MAX_P_ORACLE_EDGES: usize = 24;

/// `Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`, where `λ(S)` lists the component sizes
/// of `(V, S)`.
pub fn csf_p_oracle(g: &Graph) -> Result<SymF> {
    let edges = g.edges();
    limits::check("edge count", edges.len(), MAX_P_ORACLE_EDGES)?;
    let n = g.n();
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut parent = vec![0usize; n];
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nxt = p[y];
            p[y] = r;
            y = nxt;
        }
        r
    }
    for s in 0u32..(1u32 << edges.len()) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        for (k, &(a, b)) in edges.iter().enumerate() {
            if s >> k & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let mut size = vec![0u32; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            size[r] += 1;
        }
        size.retain(|&x| x > 0);
        size.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
        *counts.entry(Partition::from_sorted(size)).or_insert(0) += sign;
    }
    SymF::from_terms(Basis::P, n as u32, counts.into_iter().map(|(l, c)| (l, BigInt::from(c))))
}

/// The coefficients `c_λ` of `X_G = Σ c_λ e_λ` (zero coefficients omitted).
pub fn e_coefficients(g: &Graph) -> Result<BTreeMap<Partition, BigInt>> {
    let e = to_e_basis(&csf(g)?)?;
    Ok(e.terms().map(|(l, c)| (l.clone(), c.clone())).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EPositivity {
    pub positive: bool,
    /// Minimum over all partitions of `n`, absent ones counting as zero.
    pub min_coeff: BigInt,
    /// A partition carrying the most negative coefficient, if any is negative.
    pub witness: Option<Partition>,
    pub coeffs: BTreeMap<Partition, BigInt>,
}

pub fn is_e_positive(g: &Graph) -> Result<EPositivity> {
    let coeffs = e_coefficients(g)?;
    let n = g.n() as u32;
    let some_absent = coeffs.len() < partitions_of(n).len();
    let min_coeff = match coeffs.values().min() {
        Some(m) if !some_absent => m.clone(),
        Some(m) => m.clone().min(BigInt::zero()),
        None => BigInt::zero(),
    };
    let witness = if min_coeff.is_negative() {
        coeffs.iter().find(|(_, c)| **c == min_coeff).map(|(l, _)| l.clone())
    } else {
        None
    };
    Ok(EPositivity { positive: !min_coeff.is_negative(), min_coeff, witness, coeffs })
}

/// Per `j`: (acyclic orientations with `j` sinks, `Σ_{l(λ)=j} c_λ`).
pub fn sink_comparison(g: &Graph) -> Result<BTreeMap<usize, (BigInt, BigInt)>> {
    let sinks = acyclic_sink_counts(g)?;
    let coeffs = e_coefficients(g)?;
    let mut out: BTreeMap<usize, (BigInt, BigInt)> = BTreeMap::new();
    for (j, c) in sinks {
        out.entry(j).or_insert_with(|| (BigInt::zero(), BigInt::zero())).0 = BigInt::from(c);
    }
    for (l, c) in coeffs {
        out.entry(l.len()).or_insert_with(|| (BigInt::zero(), BigInt::zero())).1 += c;
    }
    Ok(out)
}

/// Stanley's sink theorem on `g`: true iff every `j` matches.
pub fn sink_crosscheck(g: &Graph) -> Result<bool> {
    Ok(sink_comparison(g)?.values().all(|(a, b)| a == b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::expand_in_monomials;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_graphs() {
        let k3 = csf(&Graph::complete(3)).unwrap();
        assert_eq!(k3, SymF::from_terms(Basis::M, 3, [(p(&[1, 1, 1]), BigInt::from(6))]).unwrap());
        assert_eq!(csf(&Graph::edgeless(1)).unwrap(), SymF::m(p(&[1])));
        let path = csf(&Graph::path(3)).unwrap();
        assert_eq!(path.coeff(&p(&[2, 1])), BigInt::from(1));
        assert_eq!(path.coeff(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(path.terms().count(), 2);
    }

    #[test]
    fn e_expansions() {
        let k3 = e_coefficients(&Graph::complete(3)).unwrap();
        assert_eq!(k3.into_iter().collect::<Vec<_>>(), vec![(p(&[3]), BigInt::from(6))]);
        let path = e_coefficients(&Graph::path(3)).unwrap();
        assert_eq!(path[&p(&[2, 1])], BigInt::from(1));
        assert_eq!(path[&p(&[3])], BigInt::from(3));
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = is_e_positive(&claw).unwrap();
        assert!(!r.positive);
        assert_eq!(r.witness, Some(p(&[2, 2])));
        let k4 = is_e_positive(&Graph::complete(4)).unwrap();
        assert!(k4.positive);
        assert_eq!(k4.coeffs[&p(&[4])], BigInt::from(24));
        assert_eq!(k4.min_coeff, BigInt::zero());
    }

    #[test]
    fn oracles() {
        let k2 = csf_coloring_oracle(&Graph::complete(2), 2).unwrap();
        assert_eq!(k2.coeff_of(&VertexMonomial::from_exponents(vec![1, 1])), BigInt::from(2));
        let e2 = csf_coloring_oracle(&Graph::edgeless(2), 1).unwrap();
        assert_eq!(e2.coeff_of(&VertexMonomial::from_exponents(vec![2])), BigInt::one());
        let path = csf_coloring_oracle(&Graph::path(3), 3).unwrap();
        let total: BigInt = path.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(12));
        assert_eq!(csf_p_oracle(&Graph::edgeless(3)).unwrap(), SymF::basis_element(Basis::P, p(&[1, 1, 1])));
        let edge = csf_p_oracle(&Graph::complete(2)).unwrap();
        assert_eq!(edge.coeff(&p(&[1, 1])), BigInt::one());
        assert_eq!(edge.coeff(&p(&[2])), -BigInt::one());
        let k3 = csf_p_oracle(&Graph::complete(3)).unwrap();
        assert_eq!(expand_in_monomials(&k3).unwrap(), csf(&Graph::complete(3)).unwrap());
    }

    #[test]
    fn sinks() {
        assert!(sink_crosscheck(&Graph::complete(3)).unwrap());
        assert!(sink_crosscheck(&Graph::edgeless(3)).unwrap());
        assert!(sink_crosscheck(&Graph::path(4)).unwrap());
    }
}
