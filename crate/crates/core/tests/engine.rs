mod common;

use std::collections::HashSet;

use cartesian_decomp::blocks::block_stabiliser;
use cartesian_decomp::normal::{is_innately_transitive, minimal_normal_subgroups};
use cartesian_decomp::partition::Partition;
use cartesian_decomp::search::{coset_intersection, Coset};
use cartesian_decomp::{
    block_systems, intersect, load_case, schreier_sims, setwise_stabiliser, Error, Limits,
    PermGroup, Permutation,
};
use common::*;

#[test]
fn schreier_sims_orders() {
    let s4 = schreier_sims(vec![p(4, &[&[0, 1, 2, 3]]), p(4, &[&[0, 1]])]).unwrap();
    assert_eq!(s4.order(), 24);
    assert_eq!(PermGroup::alternating(6).order(), 360);
    assert!(matches!(schreier_sims(vec![]), Err(Error::InvalidInput(_))));
    assert!(matches!(
        PermGroup::new(4, vec![Permutation::identity(5)]),
        Err(Error::DegreeMismatch { .. })
    ));
    assert!(matches!(
        Permutation::new(vec![0, 0, 1]),
        Err(Error::NonBijection(_))
    ));
}

#[test]
fn bundled_m12_order_matches_closure() {
    let case = load_case("M12_144").unwrap();
    let elements = closure(12, case.group.generators());
    assert_eq!(elements.len() as u128, case.group.order());
    assert_eq!(case.group.order(), 95040);
    assert!(elements.iter().all(|x| case.group.contains(x)));
}

#[test]
fn orbits_and_stabilisers() {
    let s4 = PermGroup::symmetric(4);
    assert_eq!(s4.orbit(0).unwrap(), vec![0, 1, 2, 3]);
    let t = group(4, vec![p(4, &[&[0, 1]])]);
    assert_eq!(t.orbit(2).unwrap(), vec![2]);
    assert_eq!(klein().orbit(0).unwrap(), vec![0, 1, 2, 3]);
    assert!(matches!(s4.orbit(4), Err(Error::PointOutOfRange { .. })));

    assert_eq!(s4.point_stabiliser(0).unwrap().order(), 6);
    assert!(klein().point_stabiliser(0).unwrap().is_trivial());
    assert_eq!(
        PermGroup::alternating(6)
            .point_stabiliser(0)
            .unwrap()
            .order(),
        60
    );
}

#[test]
fn setwise_stabilisers_against_filter() {
    let lim = Limits::default();
    let s4 = PermGroup::symmetric(4);
    let st = setwise_stabiliser(&s4, &[0, 1], &lim).unwrap();
    assert_eq!(st.order(), 4);
    assert!(st.contains(&p(4, &[&[0, 1]])) && st.contains(&p(4, &[&[2, 3]])));
    assert!(setwise_stabiliser(&s4, &[0, 1, 2, 3], &lim)
        .unwrap()
        .same_group(&s4));

    let a6 = PermGroup::alternating(6);
    for set in [vec![0, 1, 2], vec![0, 3], vec![1, 2, 4, 5]] {
        let filtered = a6
            .elements()
            .into_iter()
            .filter(|x| image_of_set(x, &set) == set)
            .count();
        assert_eq!(
            setwise_stabiliser(&a6, &set, &lim).unwrap().order(),
            filtered as u128
        );
    }
    assert_eq!(
        setwise_stabiliser(&a6, &[0, 1, 2], &lim).unwrap().order(),
        18
    );
}

#[test]
fn intersections_against_filter() {
    let lim = Limits::default();
    let s4 = PermGroup::symmetric(4);
    let c3 = group(4, vec![p(4, &[&[0, 1, 2]])]);
    assert!(intersect(&s4, &c3, &lim).unwrap().same_group(&c3));
    assert!(intersect(&s4, &s4, &lim).unwrap().same_group(&s4));

    let case = load_case("A6_36").unwrap();
    let (a, b) = (&case.subgroups[0].group, &case.subgroups[1].group);
    let both = case
        .group
        .elements()
        .into_iter()
        .filter(|x| a.contains(x) && b.contains(x))
        .count();
    assert_eq!(both, 10);
    assert_eq!(intersect(a, b, &lim).unwrap().order(), 10);
}

#[test]
fn coset_intersection_examples() {
    let lim = Limits::default();
    let k = group(4, vec![p(4, &[&[0, 1], &[2, 3]])]);
    let x = p(4, &[&[0, 2]]);
    let single = coset_intersection(&[(k.clone(), x.clone())], &lim)
        .unwrap()
        .unwrap();
    assert_eq!(single, Coset::new(k.clone(), x).unwrap());

    let k1 = group(4, vec![p(4, &[&[0, 1], &[2, 3]])]);
    let k2 = group(4, vec![p(4, &[&[0, 2], &[1, 3]])]);
    let x2 = p(4, &[&[0, 1], &[2, 3]]);
    let c = coset_intersection(
        &[
            (k1.clone(), Permutation::identity(4)),
            (k2.clone(), x2.clone()),
        ],
        &lim,
    )
    .unwrap()
    .unwrap();
    let set1: HashSet<Permutation> = Coset::new(k1, Permutation::identity(4))
        .unwrap()
        .elements()
        .into_iter()
        .collect();
    let set2: HashSet<Permutation> = Coset::new(k2, x2.clone())
        .unwrap()
        .elements()
        .into_iter()
        .collect();
    let expected: Vec<&Permutation> = set1.intersection(&set2).collect();
    assert_eq!(expected, vec![&x2]);
    assert!(c.subgroup.is_trivial());
    assert_eq!(c.representative, x2);

    let t = group(4, vec![p(4, &[&[0, 1]])]);
    let none = coset_intersection(
        &[(t.clone(), Permutation::identity(4)), (t, p(4, &[&[0, 2]]))],
        &lim,
    )
    .unwrap();
    assert!(none.is_none());
}

#[test]
fn klein_block_systems_against_all_partitions() {
    let v = klein();
    let invariant: Vec<Partition> = all_set_partitions(4)
        .into_iter()
        .map(|l| Partition::from_labels(&l))
        .filter(|q| v.generators().iter().all(|g| q.image(g) == *q))
        .filter(|q| q.uniform_block_size().is_some())
        .collect();
    let systems = block_systems(&v, 0, &Limits::default()).unwrap();
    let mut found: Vec<Partition> = systems.iter().map(|s| s.partition.clone()).collect();
    let mut expected = invariant;
    found.sort();
    expected.sort();
    assert_eq!(found, expected);
    assert_eq!(systems.len(), 5);
    assert_eq!(systems.iter().filter(|s| s.trivial).count(), 2);
    assert!(matches!(
        block_systems(&group(4, vec![p(4, &[&[0, 1]])]), 0, &Limits::default()),
        Err(Error::NotTransitive)
    ));
}

#[test]
fn a6_on_36_points_has_two_six_block_systems() {
    let lim = Limits::default();
    let case = load_case("A6_36").unwrap();
    let (a, b) = (&case.subgroups[0].group, &case.subgroups[1].group);
    let meet = intersect(a, b, &lim).unwrap();
    let action = cartesian_decomp::CosetAction::new(&case.group, &meet, &lim).unwrap();
    let g = action.image();
    let systems = block_systems(g, 0, &lim).unwrap();
    let six: Vec<_> = systems
        .iter()
        .filter(|s| s.partition.num_blocks() == 6 && s.block.len() == 6)
        .collect();
    assert_eq!(six.len(), 2);
    let stab = g.point_stabiliser(0).unwrap();
    for s in six {
        assert_eq!(block_stabiliser(g, &stab, 0, &s.block).unwrap().order(), 60);
    }
}

#[test]
fn minimal_normal_and_innate_transitivity() {
    let lim = Limits::default();
    let m = minimal_normal_subgroups(&PermGroup::symmetric(4), &lim).unwrap();
    assert_eq!(m.len(), 1);
    assert!(m[0].same_group(&klein()));
    assert_eq!(minimal_normal_subgroups(&klein(), &lim).unwrap().len(), 3);
    let r = is_innately_transitive(&PermGroup::alternating(6), &lim).unwrap();
    assert!(r.innately_transitive && r.quasiprimitive);
    assert_eq!(r.plinths[0].order(), 360);
    let r = is_innately_transitive(&group(4, vec![p(4, &[&[0, 1]])]), &lim).unwrap();
    assert!(!r.innately_transitive && r.plinths.is_empty());
}

#[test]
fn bsgs_order_matches_closure_for_small_groups() {
    let cases = [
        PermGroup::symmetric(5),
        PermGroup::alternating(6),
        klein(),
        group(
            8,
            vec![
                p(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]),
                p(8, &[&[1, 7], &[2, 6], &[3, 5]]),
            ],
        ),
        group(
            7,
            vec![
                p(7, &[&[0, 1, 2, 3, 4, 5, 6]]),
                p(7, &[&[1, 2, 4], &[3, 6, 5]]),
            ],
        ),
    ];
    for g in cases {
        assert_eq!(closure(g.degree(), g.generators()).len() as u128, g.order());
    }
}
