mod common;

use std::collections::HashSet;

use cartesian_decomp::search::{coset_intersection, Coset};
use cartesian_decomp::{intersect, setwise_stabiliser, Limits, PermGroup, Permutation};
use common::*;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn gens(n: usize, max: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(n), 1..=max)
}

fn set(g: &PermGroup) -> HashSet<Permutation> {
    g.elements().into_iter().collect()
}

fn product(a: &PermGroup, b: &PermGroup) -> HashSet<Permutation> {
    let bs = b.elements();
    a.elements()
        .iter()
        .flat_map(|x| bs.iter().map(move |y| x * y))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn right_action_and_inverses(a in perm(7), b in perm(7), c in perm(7), x in 0usize..7) {
        prop_assert_eq!((&a * &b).apply(x), b.apply(a.apply(x)));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert_eq!(a.conjugate_by(&b), &(&b.inverse() * &a) * &b);
        prop_assert_eq!(Permutation::new(a.images()).unwrap(), a.clone());
    }

    #[test]
    fn element_order_divides_group_order(gs in gens(6, 2)) {
        let g = PermGroup::new(6, gs.clone()).unwrap();
        for x in &gs {
            prop_assert_eq!(g.order() % x.order(), 0);
        }
    }

    #[test]
    fn orbit_stabiliser(gs in gens(7, 3), x in 0usize..7) {
        let g = PermGroup::new(7, gs).unwrap();
        let orbit = g.orbit(x).unwrap();
        let stab = g.point_stabiliser(x).unwrap();
        prop_assert_eq!(orbit.len() as u128 * stab.order(), g.order());
        prop_assert!(stab.generators().iter().all(|s| s.apply(x) == x));
    }

    #[test]
    fn order_matches_closure(gs in gens(6, 3)) {
        let g = PermGroup::new(6, gs.clone()).unwrap();
        let all = closure(6, &gs);
        prop_assert_eq!(all.len() as u128, g.order());
        prop_assert!(all.iter().all(|x| g.contains(x)));
        let sym = PermGroup::symmetric(6);
        let outside = sym.elements().into_iter().filter(|x| g.contains(x)).count();
        prop_assert_eq!(outside as u128, g.order());
    }

    #[test]
    fn product_order_law(ga in gens(5, 2), gb in gens(5, 2)) {
        let (a, b) = (PermGroup::new(5, ga).unwrap(), PermGroup::new(5, gb).unwrap());
        let meet = intersect(&a, &b, &Limits::default()).unwrap();
        prop_assert_eq!(set(&meet), set(&a).intersection(&set(&b)).cloned().collect::<HashSet<_>>());
        prop_assert_eq!(product(&a, &b).len() as u128 * meet.order(), a.order() * b.order());
    }

    #[test]
    fn dedekind_modular_law(ga in gens(5, 1), gc in gens(5, 1), gb in gens(5, 2)) {
        let a = PermGroup::new(5, ga.clone()).unwrap();
        let c = PermGroup::new(5, [ga, gc].concat()).unwrap();
        let b = PermGroup::new(5, gb).unwrap();
        let lim = Limits::default();
        let left = product(&a, &intersect(&b, &c, &lim).unwrap());
        let right: HashSet<Permutation> = product(&a, &b).intersection(&set(&c)).cloned().collect();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coset_intersection_matches_sets(
        g1 in gens(5, 2), g2 in gens(5, 2), x1 in perm(5), x2 in perm(5)
    ) {
        let (k1, k2) = (PermGroup::new(5, g1).unwrap(), PermGroup::new(5, g2).unwrap());
        let s1: HashSet<Permutation> = Coset::new(k1.clone(), x1.clone()).unwrap().elements().into_iter().collect();
        let s2: HashSet<Permutation> = Coset::new(k2.clone(), x2.clone()).unwrap().elements().into_iter().collect();
        let expected: HashSet<Permutation> = s1.intersection(&s2).cloned().collect();
        let found = coset_intersection(&[(k1, x1), (k2, x2)], &Limits::default()).unwrap();
        match found {
            None => prop_assert!(expected.is_empty()),
            Some(c) => {
                let got: HashSet<Permutation> = c.elements().into_iter().collect();
                prop_assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn setwise_stabiliser_matches_filter(gs in gens(6, 2), mask in 1u32..63) {
        let g = PermGroup::new(6, gs).unwrap();
        let s: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
        let st = setwise_stabiliser(&g, &s, &Limits::default()).unwrap();
        let filtered = g.elements().into_iter().filter(|x| image_of_set(x, &s) == s).count();
        prop_assert_eq!(st.order(), filtered as u128);
    }

    #[test]
    fn deterministic(gs in gens(7, 3)) {
        let a = PermGroup::new(7, gs.clone()).unwrap();
        let b = PermGroup::new(7, gs).unwrap();
        prop_assert_eq!(a.base(), b.base());
        prop_assert_eq!(a.strong_generators(), b.strong_generators());
        let lim = Limits::default();
        let (s1, s2) = (setwise_stabiliser(&a, &[0, 1], &lim).unwrap(), setwise_stabiliser(&b, &[0, 1], &lim).unwrap());
        prop_assert_eq!(s1.generators(), s2.generators());
    }
}
