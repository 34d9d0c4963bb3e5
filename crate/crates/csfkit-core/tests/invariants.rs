use std::collections::BTreeSet;

use csfkit_core::corrects::{enumerate_lambda_corrects, is_correct, monomial_sum, prefixes_connected};
use csfkit_core::ganalogue::GHom;
use csfkit_core::partitions::{dominance_leq, partitions_of, Dominance};
use csfkit_core::symfunc::{expand_in_monomials, multiply, p_to_e, to_e_basis, to_polynomial};
use csfkit_core::uio::enumerate_uios;
use csfkit_core::{Basis, BigInt, Partition, SymF, Uio, VPoly, VertexMonomial};
use proptest::prelude::*;

fn uio(max_n: usize) -> impl Strategy<Value = Uio> {
    (1..=max_n).prop_flat_map(|n| {
        let all = enumerate_uios(n).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    (1..=max_weight).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn symf(basis: Basis, degree: u32) -> impl Strategy<Value = SymF> {
    let all = partitions_of(degree);
    let len = all.len();
    prop::collection::vec((0..len, -4i64..=4), 0..5).prop_map(move |ts| {
        SymF::from_terms(basis, degree, ts.into_iter().map(|(i, c)| (all[i].clone(), BigInt::from(c)))).unwrap()
    })
}

fn vpoly() -> impl Strategy<Value = VPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), -5i64..=5), 0..5).prop_map(|ts| {
        let mut p = VPoly::zero(3);
        for (e, c) in ts {
            p.add_term(VertexMonomial::from_exponents(e), BigInt::from(c));
        }
        p
    })
}

fn correct_oracle(u: &Uio, w: &[usize]) -> bool {
    if w.windows(2).any(|p| u.succ(p[0], p[1])) {
        return false;
    }
    (1..=w.len()).all(|len| {
        let verts: BTreeSet<usize> = w[..len].iter().copied().collect();
        let mut reached = BTreeSet::from([w[0]]);
        let mut frontier = vec![w[0]];
        while let Some(v) = frontier.pop() {
            for &x in &verts {
                if u.sim(v, x) && reached.insert(x) {
                    frontier.push(x);
                }
            }
        }
        reached == verts
    })
}

#[test]
fn partition_counts() {
    // p(n) by the largest-part recurrence
    fn count(n: u32, max: u32) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| count(n - k, k)).sum()
    }
    for n in 0..=14 {
        assert_eq!(partitions_of(n).len(), count(n, n), "n={n}");
    }
}

#[test]
fn newton_identities_in_variables() {
    for k in 1..=6u32 {
        let nv = k as usize + 1;
        let mut want = VPoly::zero(nv);
        for i in 0..nv {
            want = want.add(&VPoly::var(nv, i).pow(k)).unwrap();
        }
        assert_eq!(to_polynomial(&p_to_e(k).unwrap(), nv).unwrap(), want, "k={k}");
    }
}

#[test]
fn column_schur_is_elementary() {
    for n in 1..=7 {
        assert_eq!(to_e_basis(&SymF::s(Partition::column(n))).unwrap(), SymF::e(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(l in partition(10)) {
        let c = l.conjugate();
        prop_assert_eq!(c.weight(), l.weight());
        prop_assert_eq!(c.len() as u32, l.parts().first().copied().unwrap_or(0));
        prop_assert_eq!(c.conjugate(), l);
    }

    #[test]
    fn conjugation_reverses_dominance(n in 1u32..=8, i in 0usize..100, j in 0usize..100) {
        let all = partitions_of(n);
        let (mu, la) = (&all[i % all.len()], &all[j % all.len()]);
        let fwd = dominance_leq(mu, la).unwrap() == Dominance::Leq;
        let back = dominance_leq(&la.conjugate(), &mu.conjugate()).unwrap() == Dominance::Leq;
        prop_assert_eq!(fwd, back);
    }

    #[test]
    fn ring_axioms(a in vpoly(), b in vpoly(), c in vpoly()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&VPoly::one(3)).unwrap(), a.clone());
    }

    #[test]
    fn m_to_e_round_trip(f in (1u32..=6).prop_flat_map(|d| symf(Basis::M, d))) {
        prop_assert_eq!(expand_in_monomials(&to_e_basis(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn e_to_m_round_trip(f in (1u32..=6).prop_flat_map(|d| symf(Basis::E, d))) {
        prop_assert_eq!(to_e_basis(&expand_in_monomials(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn kostka_numbers_are_nonnegative(l in partition(7)) {
        let m = expand_in_monomials(&SymF::s(l.clone())).unwrap();
        prop_assert_eq!(m.coeff(&l), BigInt::from(1));
        for (mu, c) in m.terms() {
            prop_assert!(*c > BigInt::from(0));
            prop_assert_eq!(dominance_leq(mu, &l).unwrap(), Dominance::Leq);
        }
    }

    #[test]
    fn g_map_is_a_homomorphism(
        u in uio(4),
        f in (1u32..=3).prop_flat_map(|d| symf(Basis::E, d)),
        g in (1u32..=3).prop_flat_map(|d| symf(Basis::P, d)),
    ) {
        let hom = GHom::new(&u.incomparability_graph());
        let lhs = hom.phi(&multiply(&f, &g).unwrap()).unwrap();
        let rhs = hom.phi(&f).unwrap().mul(&hom.phi(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn schur_determinant_agrees(u in uio(4), l in partition(5)) {
        let hom = GHom::new(&u.incomparability_graph());
        prop_assert_eq!(hom.s_det(&l).unwrap(), hom.s(&l).unwrap());
    }

    #[test]
    fn power_sum_products_count_lambda_corrects(u in uio(4), l in partition(5)) {
        let hom = GHom::new(&u.incomparability_graph());
        let seqs = enumerate_lambda_corrects(&u, &l).unwrap();
        prop_assert_eq!(hom.p_lambda(&l).unwrap(), monomial_sum(u.n(), &seqs));
    }

    #[test]
    fn correctness_is_prefix_connectivity(
        (u, w) in uio(4).prop_flat_map(|u| {
            let n = u.n();
            (Just(u), prop::collection::vec(0..n, 1..=6))
        })
    ) {
        let want = correct_oracle(&u, &w);
        prop_assert_eq!(is_correct(&u, &w), want);
        let no_descent = !w.windows(2).any(|p| u.succ(p[0], p[1]));
        prop_assert_eq!(no_descent && prefixes_connected(&u, &w), want);
        if want {
            for len in 1..w.len() {
                prop_assert!(is_correct(&u, &w[..len]));
            }
        }
    }

    #[test]
    fn interval_orders_are_enumerated(reps in prop::collection::vec(0i64..12, 1..=5)) {
        let reps: Vec<_> = reps.into_iter().map(|r| num_rational::Ratio::new(r, 4)).collect();
        let u = Uio::from_intervals(&reps).unwrap();
        prop_assert!(enumerate_uios(u.n()).unwrap().contains(&u));
    }
}
