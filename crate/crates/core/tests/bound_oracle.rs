mod common;

use common::*;
use costzdd::{
    build_path_zdd, naive_call_count, BigUint, Bounder, CostVector, ExtInt, Forest, NodeId, PathKind,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A forest holding one random family, either explicit or the paths of a small graph.
struct Instance {
    forest: Forest,
    f: NodeId,
    family: Family,
    costs: Vec<i64>,
}

fn random_instance<R: Rng>(rng: &mut R) -> Instance {
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(1..=14);
        let family = random_family(rng, n, 40);
        let costs = (0..n).map(|_| rng.gen_range(-50..=50)).collect();
        let mut forest = Forest::new(n);
        let f = build(&mut forest, &family);
        Instance { forest, f, family, costs }
    } else {
        let nv = rng.gen_range(2..=7);
        let g = random_connected_graph(rng, nv, 14, -50, 50);
        let (s, t) = (1, nv);
        let kind = if rng.gen_bool(0.3) { PathKind::Hamiltonian } else { PathKind::Simple };
        let mut forest = Forest::new(g.n_edges() as u32);
        let f = build_path_zdd(&mut forest, &g, s, t, kind).unwrap();
        let family = dfs_paths(&g, s, t, kind == PathKind::Hamiltonian);
        Instance { forest, f, family, costs: g.costs().as_slice().to_vec() }
    }
}

fn random_bound<R: Rng>(rng: &mut R, inst: &Instance) -> ExtInt {
    let totals: Vec<i64> = inst.family.iter().map(|s| cost_of(&inst.costs, s)).collect();
    let lo = totals.iter().copied().min().unwrap_or(0) - 5;
    let hi = totals.iter().copied().max().unwrap_or(0) + 5;
    match rng.gen_range(0..20) {
        0 => ExtInt::NegInf,
        1 => ExtInt::PosInf,
        2 if !totals.is_empty() => ExtInt::Finite(totals[rng.gen_range(0..totals.len())]),
        _ => ExtInt::Finite(rng.gen_range(lo..=hi)),
    }
}

fn brute(inst: &Instance, b: ExtInt) -> Family {
    match b {
        ExtInt::NegInf => Family::new(),
        ExtInt::PosInf => inst.family.clone(),
        ExtInt::Finite(v) => filter(&inst.family, &inst.costs, Some(v)),
    }
}

#[test]
fn all_methods_agree_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for trial in 0..1000 {
        let mut inst = random_instance(&mut rng);
        let b = random_bound(&mut rng, &inst);
        let want = brute(&inst, b);
        let expected = build(&mut inst.forest, &want);
        let mut bd = Bounder::new(&mut inst.forest, CostVector::new(inst.costs.clone())).unwrap();
        let naive = bd.backtrack_naive(inst.f, b).unwrap().h;
        let memo = bd.backtrack_memo(inst.f, b).unwrap().h;
        let iv = bd.backtrack_interval_memo(inst.f, b).unwrap().h;
        let via = bd.bound_via_intersection(inst.f, b).unwrap();
        bd.set_lower_bound_cut(true);
        let cut = bd.backtrack_memo(inst.f, b).unwrap().h;
        for (name, h) in [("naive", naive), ("memo", memo), ("interval", iv), ("intersection", via), ("cut", cut)] {
            assert_eq!(h, expected, "trial {trial}: {name} at b = {b}");
        }
    }
}

#[test]
fn stored_intervals_are_sound_and_tight() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut checked = 0usize;
    for trial in 0..200 {
        let mut inst = random_instance(&mut rng);
        let bounds: Vec<ExtInt> = (0..4).map(|_| random_bound(&mut rng, &inst)).collect();
        let mut bd = Bounder::new(&mut inst.forest, CostVector::new(inst.costs.clone())).unwrap();
        for &b in &bounds {
            let r = bd.backtrack_interval_memo(inst.f, b).unwrap();
            let iv = r.interval.unwrap();
            assert!(iv.aw <= b && iv.contains(b), "trial {trial}: {b} outside {iv:?}");
        }
        let entries: Vec<_> = bd.interval_memo().iter().collect();
        for (node, iv, h) in entries {
            assert!(iv.aw < iv.rb);
            let (lo, hi) = match (iv.aw, iv.rb) {
                (ExtInt::Finite(a), ExtInt::Finite(r)) => (a, r - 1),
                (ExtInt::Finite(a), _) => (a, a + 200),
                (_, ExtInt::Finite(r)) => (r - 200, r - 1),
                _ => (-200, 200),
            };
            let mut probes: Vec<ExtInt> = (0..32).map(|_| ExtInt::Finite(rng.gen_range(lo..=hi))).collect();
            if iv.aw == ExtInt::NegInf {
                probes.push(ExtInt::NegInf);
            }
            if iv.rb == ExtInt::PosInf {
                probes.push(ExtInt::PosInf);
            }
            for p in probes {
                assert_eq!(bd.backtrack_naive(node, p).unwrap().h, h, "trial {trial}: probe {p} in {iv:?}");
            }
            if let ExtInt::Finite(a) = iv.aw {
                assert_ne!(bd.backtrack_naive(node, (a - 1).into()).unwrap().h, h, "trial {trial}: aw not tight");
            }
            if iv.rb.is_finite() {
                assert_ne!(bd.backtrack_naive(node, iv.rb).unwrap().h, h, "trial {trial}: rb not tight");
            }
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn results_grow_with_the_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let mut inst = random_instance(&mut rng);
        let mut bounds: Vec<ExtInt> = (0..6).map(|_| random_bound(&mut rng, &inst)).collect();
        bounds.sort();
        let mut bd = Bounder::new(&mut inst.forest, CostVector::new(inst.costs.clone())).unwrap();
        let hs: Vec<NodeId> = bounds.iter().map(|&b| bd.backtrack_interval_memo(inst.f, b).unwrap().h).collect();
        for w in hs.windows(2) {
            assert_eq!(bd.forest_mut().difference(w[0], w[1]).unwrap(), NodeId::ZERO);
        }
    }
}

#[test]
fn call_counts_are_ordered() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for trial in 0..300 {
        let mut inst = random_instance(&mut rng);
        let b = random_bound(&mut rng, &inst);
        let costs = CostVector::new(inst.costs.clone());
        let predicted = naive_call_count(&inst.forest, inst.f);
        let naive = Bounder::new(&mut inst.forest, costs.clone()).unwrap().backtrack_naive(inst.f, b).unwrap().calls;
        let memo = Bounder::new(&mut inst.forest, costs.clone()).unwrap().backtrack_memo(inst.f, b).unwrap().calls;
        let iv = Bounder::new(&mut inst.forest, costs.clone())
            .unwrap()
            .backtrack_interval_memo(inst.f, b)
            .unwrap()
            .calls;
        let mut with_cut = Bounder::new(&mut inst.forest, costs).unwrap();
        with_cut.set_lower_bound_cut(true);
        let cut = with_cut.backtrack_memo(inst.f, b).unwrap().calls;
        assert_eq!(BigUint::from(naive), predicted, "trial {trial}");
        assert!(iv <= memo && memo <= naive, "trial {trial}: {iv} / {memo} / {naive}");
        assert!(cut <= memo, "trial {trial}");
    }
}

#[test]
fn extreme_bounds_expose_min_and_max() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for trial in 0..300 {
        let mut inst = random_instance(&mut rng);
        let costs = CostVector::new(inst.costs.clone());
        let (min, max) = inst.forest.min_max_cost(inst.f, &costs).unwrap();
        let size = inst.forest.node_count(inst.f) as u64;
        let mut bd = Bounder::new(&mut inst.forest, costs).unwrap();
        let lo = bd.backtrack_interval_memo(inst.f, ExtInt::NegInf).unwrap();
        assert_eq!((lo.h, lo.rb()), (NodeId::ZERO, Some(min)), "trial {trial}");
        let mut bd = Bounder::new(&mut inst.forest, CostVector::new(inst.costs.clone())).unwrap();
        let hi = bd.backtrack_interval_memo(inst.f, ExtInt::PosInf).unwrap();
        assert_eq!((hi.h, hi.aw(), hi.calls), (inst.f, Some(max), 2 * size + 1), "trial {trial}");
    }
}

#[test]
fn repeated_query_costs_one_call() {
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..200 {
        let mut inst = random_instance(&mut rng);
        let b = random_bound(&mut rng, &inst);
        let mut bd = Bounder::new(&mut inst.forest, CostVector::new(inst.costs.clone())).unwrap();
        let first = bd.backtrack_interval_memo(inst.f, b).unwrap();
        let second = bd.backtrack_interval_memo(inst.f, b).unwrap();
        assert_eq!((second.h, second.calls), (first.h, 1));
        let first = bd.backtrack_memo(inst.f, b).unwrap();
        let second = bd.backtrack_memo(inst.f, b).unwrap();
        assert_eq!(second.h, first.h);
        assert_eq!(second.calls, 1);
    }
}

#[test]
fn range_and_rank_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    for trial in 0..300 {
        let mut inst = random_instance(&mut rng);
        let mut pair = [random_bound(&mut rng, &inst), random_bound(&mut rng, &inst)];
        pair.sort();
        let [lb, ub] = pair;
        let lower = brute(&inst, lb);
        let want: Family = brute(&inst, ub).difference(&lower).cloned().collect();
        let expected = build(&mut inst.forest, &want);
        let mut bd = Bounder::new(&mut inst.forest, CostVector::new(inst.costs.clone())).unwrap();
        assert_eq!(bd.range_query(inst.f, lb, ub).unwrap(), expected, "trial {trial}");
        assert_eq!(bd.rank(inst.f, ub).unwrap(), BigUint::from(brute(&inst, ub).len()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn prop_interval_contains_query(seed in any::<u64>(), b in -120i64..120) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut inst = random_instance(&mut rng);
        let mut bd = Bounder::new(&mut inst.forest, CostVector::new(inst.costs.clone())).unwrap();
        let r = bd.backtrack_interval_memo(inst.f, b.into()).unwrap();
        let iv = r.interval.unwrap();
        prop_assert!(iv.aw <= ExtInt::Finite(b) && ExtInt::Finite(b) < iv.rb);
        let n = bd.forest_mut().count(r.h);
        prop_assert_eq!(n, BigUint::from(brute(&inst, b.into()).len()));
    }

    #[test]
    fn prop_memo_shared_across_bounds(seed in any::<u64>(), mut bs in prop::collection::vec(-120i64..120, 1..8)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut inst = random_instance(&mut rng);
        let costs = CostVector::new(inst.costs.clone());
        let mut shared = Bounder::new(&mut inst.forest, costs.clone()).unwrap();
        let hs: Vec<NodeId> = bs.iter().map(|&b| shared.backtrack_interval_memo(inst.f, b.into()).unwrap().h).collect();
        bs.reverse();
        let mut fresh_hs: Vec<NodeId> = bs
            .iter()
            .map(|&b| Bounder::new(&mut inst.forest, costs.clone()).unwrap().backtrack_interval_memo(inst.f, b.into()).unwrap().h)
            .collect();
        fresh_hs.reverse();
        prop_assert_eq!(hs, fresh_hs);
    }
}
