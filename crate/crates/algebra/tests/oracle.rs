use gbei_algebra::complex::{reduced_euler_characteristic, reduced_homology_ranks, SimplicialComplex};
use gbei_algebra::groebner::{groebner_basis, normal_form, GbLimits};
use gbei_algebra::ideal::{build_ideal, build_prime_component, intersect_all};
use gbei_algebra::initial::initial_ideal;
use gbei_algebra::monomial::{MonomialOrder, OrderKind};
use gbei_algebra::oracle::{depth, depth_oracle, projective_dimension};
use gbei_core::bounds::exact_depth;
use gbei_core::cutsets::enumerate_cutsets;
use gbei_core::generate::all_graphs;
use gbei_core::{Caps, Exec, SimpleGraph};

fn small_graphs() -> Vec<SimpleGraph> {
    (1..=4).flat_map(all_graphs).collect()
}

#[test]
fn oracle_agrees_with_closed_forms() {
    let caps = Caps::default();
    for g in small_graphs() {
        for m in 2..=3 {
            let oracle = depth(m, &g, &caps).unwrap();
            if let Some(e) = exact_depth(m, &g, &caps).unwrap() {
                assert_eq!(oracle, e.value, "{g:?} m={m} via {:?}", e.source);
            }
        }
    }
}

#[test]
fn lex_initial_ideals_are_squarefree() {
    let l = GbLimits::default();
    for g in (1..=5).flat_map(all_graphs) {
        let ord = MonomialOrder::default_for(2 * g.n());
        let init = initial_ideal(&build_ideal(2, &g, &ord).unwrap(), &l).unwrap();
        assert!(init.squarefree, "{g:?}");
    }
}

#[test]
fn depth_is_additive_over_components() {
    let caps = Caps::default();
    for g in (2..=5).flat_map(all_graphs).filter(|g| !g.is_connected()) {
        let parts: usize = g
            .components()
            .iter()
            .map(|&c| depth(2, &g.induced_subgraph(c).graph, &caps).unwrap())
            .sum();
        assert_eq!(depth(2, &g, &caps).unwrap(), parts, "{g:?}");
    }
}

#[test]
fn depth_survives_relabeling() {
    let caps = Caps::default();
    let g = gbei_core::fixtures::fig4();
    let base = depth(2, &g, &caps).unwrap();
    for perm in [[5, 4, 3, 2, 1], [2, 4, 1, 5, 3], [3, 1, 5, 2, 4]] {
        assert_eq!(depth(2, &g.relabel(&perm), &caps).unwrap(), base);
    }
}

#[test]
fn pd_survives_ground_set_permutation() {
    let caps = Caps::default();
    let l = GbLimits::default();
    let g = SimpleGraph::cycle(4).unwrap();
    let ord = MonomialOrder::default_for(8);
    let init = initial_ideal(&build_ideal(2, &g, &ord).unwrap(), &l).unwrap();
    let c = SimplicialComplex::stanley_reisner(&init).unwrap();
    let pd = projective_dimension(&c, &caps, Exec::Sequential).unwrap().pd;
    let perm = [5u32, 2, 7, 0, 3, 6, 1, 4];
    let moved = SimplicialComplex::from_nonfaces(
        8,
        c.min_nonfaces.iter().map(|&k| {
            (0..8).filter(|&b| k >> b & 1 == 1).fold(0u32, |acc, b| acc | 1 << perm[b])
        }),
    );
    assert_eq!(projective_dimension(&moved, &caps, Exec::Parallel).unwrap().pd, pd);
}

#[test]
fn euler_characteristic_matches_betti_numbers() {
    let l = GbLimits::default();
    for g in [SimpleGraph::cycle(4).unwrap(), SimpleGraph::path(4).unwrap(), gbei_core::fixtures::fig4()] {
        let ord = MonomialOrder::default_for(2 * g.n());
        let init = initial_ideal(&build_ideal(2, &g, &ord).unwrap(), &l).unwrap();
        let c = SimplicialComplex::stanley_reisner(&init).unwrap();
        for w in (0..=c.ground()).step_by(7) {
            let alt: i64 = reduced_homology_ranks(&c, w, 15)
                .unwrap()
                .iter()
                .map(|&(j, b)| if j % 2 == 0 { b as i64 } else { -(b as i64) })
                .sum();
            assert_eq!(reduced_euler_characteristic(&c, w), alt);
        }
    }
}

#[test]
fn degrevlex_agrees_when_squarefree() {
    let caps = Caps::default();
    let l = GbLimits::default();
    for g in (2..=4).flat_map(all_graphs) {
        let ord = MonomialOrder::row_major(OrderKind::Degrevlex, 2 * g.n());
        let init = initial_ideal(&build_ideal(2, &g, &ord).unwrap(), &l).unwrap();
        if init.squarefree {
            let cert = depth_oracle(2, &g, &ord, &caps, Exec::Sequential).unwrap();
            assert_eq!(cert.depth, depth(2, &g, &caps).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn primes_contain_the_ideal() {
    let caps = Caps::default();
    let l = GbLimits::default();
    for g in (2..=4).flat_map(all_graphs) {
        let ord = MonomialOrder::default_for(3 * g.n());
        let j = build_ideal(3, &g, &ord).unwrap();
        for cs in enumerate_cutsets(&g, &caps).unwrap().cutsets {
            let p = build_prime_component(3, &g, cs.t, &ord).unwrap().to_ideal();
            let gb = groebner_basis(&p.generators, &ord, &l).unwrap();
            for f in &j.generators {
                assert!(normal_form(f, &gb, &ord).is_zero());
            }
        }
    }
}

#[test]
fn ideal_is_the_intersection_of_its_primes() {
    let caps = Caps::default();
    let l = GbLimits::default();
    for g in (1..=4).flat_map(all_graphs).filter(|g| g.is_connected()) {
        let ord = MonomialOrder::default_for(2 * g.n());
        let j = build_ideal(2, &g, &ord).unwrap();
        let primes: Vec<_> = enumerate_cutsets(&g, &caps)
            .unwrap()
            .cutsets
            .iter()
            .map(|cs| build_prime_component(2, &g, cs.t, &ord).unwrap().to_ideal())
            .collect();
        let meet = intersect_all(&primes, &l).unwrap();
        assert!(meet.same_ideal(&j, &l).unwrap(), "{g:?}");
    }
}
