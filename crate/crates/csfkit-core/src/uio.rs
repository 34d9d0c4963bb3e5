//! Unit interval orders in successor form, their incomparability graphs,
//! clique expansions and acyclic-orientation sink counts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;

use crate::limits;
use crate::{Error, Result};

/// An `n`-element unit interval order.
///
/// Elements are `0..n` in weakly increasing order of their real
/// representatives. `succ[i]` is the least `j` with `i ≺ j`, or `n` when
/// there is none; so `i ≺ j` iff `j ≥ succ[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Uio {
    succ: Vec<usize>,
}

impl Uio {
    /// From the 1-based successor sequence (`n + 1` meaning none), as in
    /// the text form `s:3,4,4`.
    pub fn from_successors(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        let mut succ = Vec::with_capacity(n);
        for (i, &s) in one_based.iter().enumerate() {
            if s < i + 2 || s > n + 1 {
                return Err(Error::InvalidUio(format!(
                    "successor of element {} must lie in {}..={}, got {s}",
                    i + 1,
                    i + 2,
                    n + 1
                )));
            }
            if i > 0 && s < one_based[i - 1] {
                return Err(Error::InvalidUio(String::from("successors must be weakly increasing")));
            }
            succ.push(s - 1);
        }
        Ok(Uio { succ })
    }

    /// Sorts the representatives; `i ≺ j` iff `rep_j ≥ rep_i + 1`.
    pub fn from_intervals(reps: &[Ratio<i64>]) -> Result<Self> {
        if reps.is_empty() {
            return Err(Error::InvalidUio(String::from("no representatives")));
        }
        let mut r = reps.to_vec();
        r.sort();
        let one = Ratio::from_integer(1);
        let succ = (0..r.len())
            .map(|i| (i + 1..r.len()).find(|&j| r[j] >= r[i] + one).unwrap_or(r.len()))
            .collect();
        Ok(Uio { succ })
    }

    /// All elements pairwise incomparable.
    pub fn antichain(n: usize) -> Self {
        Uio { succ: vec![n; n] }
    }

    /// `0 ≺ 1 ≺ ... ≺ n-1`.
    pub fn chain(n: usize) -> Self {
        Uio { succ: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    /// 1-based successor sequence.
    pub fn successors(&self) -> Vec<usize> {
        self.succ.iter().map(|s| s + 1).collect()
    }

    /// `i ≺ j`.
    #[inline]
    pub fn prec(&self, i: usize, j: usize) -> bool {
        j >= self.succ[i]
    }

    /// `i ≻ j`.
    #[inline]
    pub fn succ(&self, i: usize, j: usize) -> bool {
        self.prec(j, i)
    }

    /// `i ∼ j`: neither is below the other. Reflexive.
    #[inline]
    pub fn sim(&self, i: usize, j: usize) -> bool {
        !self.prec(i, j) && !self.prec(j, i)
    }

    pub fn incomparability_graph(&self) -> Graph {
        incomparability_graph(self)
    }
}

impl fmt::Display for Uio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("s:")?;
        for (i, s) in self.succ.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s + 1)?;
        }
        Ok(())
    }
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>> {
    let bad = || Error::Parse(format!("bad rational: {s}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(a, b))
        }
        None => Ok(Ratio::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// Parses `s:3,4,4` (successor form) or `u:0,1/2,1` (representatives).
impl FromStr for Uio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("s:") {
            let succ = rest
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad successor: {x}"))))
                .collect::<Result<Vec<_>>>()?;
            Uio::from_successors(&succ)
        } else if let Some(rest) = s.strip_prefix("u:") {
            let reps = rest.split(',').map(parse_ratio).collect::<Result<Vec<_>>>()?;
            Uio::from_intervals(&reps)
        } else {
            Err(Error::Parse(format!("expected s:... or u:..., got {s}")))
        }
    }
}

/// Every `n`-element unit interval order once.
///
/// Successor sequences are listed in decreasing colexicographic order (the
/// last entry varies slowest), so the antichain comes first and the chain
/// last.
pub fn enumerate_uios(n: usize) -> Result<Vec<Uio>> {
    limits::check("UIO size", n, limits::max_uio_size())?;
    fn rec(i: usize, upper: usize, succ: &mut Vec<usize>, out: &mut Vec<Uio>) {
        // fill position i given succ[i+1] = upper
        for s in (i + 1..=upper).rev() {
            succ[i] = s;
            if i == 0 {
                out.push(Uio { succ: succ.clone() });
            } else {
                rec(i - 1, s, succ, out);
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Uio { succ: Vec::new() });
    } else {
        rec(n - 1, n, &mut vec![0; n], &mut out);
    }
    Ok(out)
}

/// All chains `c_1 ≺ c_2 ≺ ... ≺ c_len` of a relation on `0..n`.
fn chains_of(n: usize, prec: &dyn Fn(usize, usize) -> bool, len: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, prec: &dyn Fn(usize, usize) -> bool, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if cur.contains(&v) {
                continue;
            }
            if let Some(&last) = cur.last() {
                if !prec(last, v) {
                    continue;
                }
            }
            cur.push(v);
            rec(n, prec, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        rec(n, prec, len, &mut Vec::new(), &mut out);
    }
    out
}

/// True iff no `a`-chain and `b`-chain are disjoint with every cross pair
/// incomparable, for an arbitrary strict order `prec` on `0..n`.
pub fn is_ab_free_relation(n: usize, prec: &dyn Fn(usize, usize) -> bool, a: usize, b: usize) -> bool {
    if a == 0 || b == 0 || a + b > n {
        return true;
    }
    let ca = chains_of(n, prec, a);
    let cb = chains_of(n, prec, b);
    let incomparable = |x: usize, y: usize| x != y && !prec(x, y) && !prec(y, x);
    for x in &ca {
        for y in &cb {
            if x.iter().all(|&p| y.iter().all(|&q| incomparable(p, q))) {
                return false;
            }
        }
    }
    true
}

/// `(a+b)`-freeness of the order of `u`.
pub fn is_ab_free(u: &Uio, a: usize, b: usize) -> bool {
    is_ab_free_relation(u.n(), &|i, j| u.prec(i, j), a, b)
}

/// A finite simple graph on at most 64 vertices, as adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub const MAX_VERTICES: usize = 64;

    pub fn edgeless(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES, "graph too large");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for i in 0..n {
            for j in i + 1..n {
                g.put_edge(i, j);
            }
        }
        g
    }

    /// `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for i in 1..n {
            g.put_edge(i - 1, i);
        }
        g
    }

    /// Edges given as 0-based vertex pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::OverCap { what: "graph size", size: n, cap: Self::MAX_VERTICES });
        }
        let mut g = Self::edgeless(n);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n {
            return Err(Error::VertexOutOfRange(a));
        }
        if b >= self.n {
            return Err(Error::VertexOutOfRange(b));
        }
        if a == b {
            return Err(Error::NotInDomain(format!("self-loop at vertex {a}")));
        }
        self.put_edge(a, b);
        Ok(())
    }

    fn put_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// True iff no two vertices of `mask` are adjacent.
    pub fn is_stable(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if self.adj[v] & mask != 0 {
                return false;
            }
            m &= m - 1;
        }
        true
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}; ", self.n)?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        f.write_str(")")
    }
}

/// Edge `{i, j}` iff `i ∼ j` and `i ≠ j`.
pub fn incomparability_graph(u: &Uio) -> Graph {
    let mut g = Graph::edgeless(u.n());
    for i in 0..u.n() {
        for j in i + 1..u.n() {
            if u.sim(i, j) {
                g.put_edge(i, j);
            }
        }
    }
    g
}

/// `G^α`: vertex `v` becomes a clique of `α(v)` copies, and copies of
/// adjacent vertices are adjacent. Copies of vertex `v` are numbered
/// consecutively, in vertex order.
pub fn clique_expand(g: &Graph, alpha: &[u32]) -> Result<Graph> {
    if alpha.len() != g.n {
        return Err(Error::NotInDomain(format!(
            "multiplicity vector has length {}, graph has {} vertices",
            alpha.len(),
            g.n
        )));
    }
    if let Some(v) = alpha.iter().position(|&a| a == 0) {
        return Err(Error::ZeroMultiplicity(v + 1));
    }
    let total: usize = alpha.iter().map(|&a| a as usize).sum();
    if total > Graph::MAX_VERTICES {
        return Err(Error::OverCap { what: "expanded graph size", size: total, cap: Graph::MAX_VERTICES });
    }
    let mut owner = Vec::with_capacity(total);
    for (v, &a) in alpha.iter().enumerate() {
        owner.extend(core::iter::repeat_n(v, a as usize));
    }
    let mut h = Graph::edgeless(total);
    for x in 0..total {
        for y in x + 1..total {
            if owner[x] == owner[y] || g.has_edge(owner[x], owner[y]) {
                h.put_edge(x, y);
            }
        }
    }
    Ok(h)
}

/// Largest graph accepted by [`acyclic_sink_counts`].
pub const MAX_SINK_GRAPH: usize = 16;

/// For each `j`, the number of acyclic orientations with exactly `j` sinks.
///
/// Uses inclusion-exclusion over sink sets: making every vertex of a stable
/// set `T` a sink leaves an arbitrary acyclic orientation of `G - T`.
pub fn acyclic_sink_counts(g: &Graph) -> Result<BTreeMap<usize, u128>> {
    let n = g.n;
    limits::check("graph size for sink counting", n, MAX_SINK_GRAPH)?;
    let full: usize = (1usize << n) - 1;
    let stable: Vec<bool> = (0..=full).map(|m| g.is_stable(m as u64)).collect();
    // acyc[S] = number of acyclic orientations of G[S]
    let mut acyc: Vec<i128> = vec![0; full + 1];
    acyc[0] = 1;
    for s in 1..=full {
        let mut total = 0i128;
        let mut t = s;
        while t != 0 {
            if stable[t] {
                let sign = if t.count_ones() % 2 == 1 { 1 } else { -1 };
                total += sign * acyc[s & !t];
            }
            t = (t - 1) & s;
        }
        acyc[s] = total;
    }
    let mut binom = vec![vec![0i128; n + 1]; n + 1];
    for a in 0..=n {
        binom[a][0] = 1;
        for b in 1..=a {
            binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
        }
    }
    let mut counts = vec![0i128; n + 1];
    for t in 1..=full {
        if !stable[t] {
            continue;
        }
        let size = t.count_ones() as usize;
        let rest = acyc[full & !t];
        for (j, c) in counts.iter_mut().enumerate().take(size + 1).skip(1) {
            let sign = if (size - j).is_multiple_of(2) { 1 } else { -1 };
            *c += sign * binom[size][j] * rest;
        }
    }
    let mut out = BTreeMap::new();
    if n == 0 {
        out.insert(0, 1);
    }
    for (j, c) in counts.into_iter().enumerate() {
        if c != 0 {
            out.insert(j, u128::try_from(c).expect("counts are nonnegative"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn intervals() {
        let r = |a: i64, b: i64| Ratio::new(a, b);
        assert_eq!(Uio::from_intervals(&[r(0, 1)]).unwrap().successors(), vec![2]);
        assert_eq!(
            Uio::from_intervals(&[r(0, 1), r(1, 2), r(1, 1)]).unwrap().successors(),
            vec![3, 4, 4]
        );
        assert_eq!(Uio::from_intervals(&[r(0, 1), r(2, 1)]).unwrap().successors(), vec![2, 3]);
        assert_eq!("u:0,1/2,1".parse::<Uio>().unwrap().to_string(), "s:3,4,4");
    }

    #[test]
    fn successor_validation() {
        assert!(Uio::from_successors(&[3, 2, 4]).is_err());
        assert!(Uio::from_successors(&[1, 4, 4]).is_err());
        assert!(Uio::from_successors(&[3, 4, 5]).is_err());
        assert!("x:1".parse::<Uio>().is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_uios(1).unwrap().len(), 1);
        let three: Vec<String> = enumerate_uios(3).unwrap().iter().map(|u| u.to_string()).collect();
        assert_eq!(three, ["s:4,4,4", "s:3,4,4", "s:2,4,4", "s:3,3,4", "s:2,3,4"]);
        assert_eq!(enumerate_uios(4).unwrap().len(), 14);
        assert!(enumerate_uios(limits::max_uio_size() + 1).is_err());
    }

    #[test]
    fn freeness() {
        // a ≺ b, c ≺ d and nothing else: exactly a 2+2
        let rel = |x: usize, y: usize| (x, y) == (0, 1) || (x, y) == (2, 3);
        assert!(!is_ab_free_relation(4, &rel, 2, 2));
        assert!(is_ab_free_relation(1, &|_, _| false, 1, 1));
        for u in enumerate_uios(5).unwrap() {
            assert!(is_ab_free(&u, 2, 2) && is_ab_free(&u, 3, 1));
        }
    }

    #[test]
    fn graphs() {
        let chain2 = Uio::from_successors(&[2, 3]).unwrap();
        assert_eq!(incomparability_graph(&chain2).edge_count(), 0);
        let u = Uio::from_successors(&[3, 4, 4]).unwrap();
        assert_eq!(incomparability_graph(&u), Graph::path(3));
        assert_eq!(incomparability_graph(&Uio::antichain(4)), Graph::complete(4));
    }

    #[test]
    fn clique_expansions() {
        let g = Graph::path(3);
        assert_eq!(clique_expand(&g, &[1, 1, 1]).unwrap(), g);
        assert_eq!(clique_expand(&Graph::edgeless(1), &[3]).unwrap(), Graph::complete(3));
        assert_eq!(clique_expand(&Graph::complete(2), &[2, 1]).unwrap(), Graph::complete(3));
        assert_eq!(clique_expand(&g, &[1, 0, 1]), Err(Error::ZeroMultiplicity(2)));
    }

    #[test]
    fn sinks() {
        let k3 = acyclic_sink_counts(&Graph::complete(3)).unwrap();
        assert_eq!(k3.into_iter().collect::<Vec<_>>(), vec![(1, 6)]);
        let e4 = acyclic_sink_counts(&Graph::edgeless(4)).unwrap();
        assert_eq!(e4.into_iter().collect::<Vec<_>>(), vec![(4, 1)]);
        let k2 = acyclic_sink_counts(&Graph::complete(2)).unwrap();
        assert_eq!(k2.into_iter().collect::<Vec<_>>(), vec![(1, 2)]);
    }
}
