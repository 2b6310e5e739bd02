use proptest::prelude::*;

use ybe_core::brace::{is_two_sided, Level};
use ybe_core::catalog::{builtin_brace, builtins};
use ybe_core::deform::{check_d_equivalences, deformed_solution, right_distributor};
use ybe_core::io::{parse, render, StructureDoc};
use ybe_core::ybe::{
    canonical_solution, check_braid, check_y1y2y3, find_equivalence, intertwines, properties,
    PairMap, DEFAULT_BUDGET,
};

fn pair_map(max_n: usize) -> impl Strategy<Value = PairMap> {
    (1..=max_n).prop_flat_map(|n| {
        let table = proptest::collection::vec(proptest::collection::vec(0..n, n), n);
        (table.clone(), table).prop_map(|(s, t)| PairMap::new(s, t).unwrap())
    })
}

fn relabel(r: &PairMap, phi: &[usize]) -> PairMap {
    // s = (phi x phi) r (phi x phi)^-1
    let n = r.size();
    let mut inv = vec![0; n];
    for (i, &p) in phi.iter().enumerate() {
        inv[p] = i;
    }
    PairMap::from_fn(n, |a, b| {
        let (x, y) = r.apply(inv[a], inv[b]);
        (phi[x], phi[y])
    })
}

proptest! {
    #[test]
    fn braid_is_conjunction_of_components(r in pair_map(4)) {
        prop_assert_eq!(check_braid(&r).holds, check_y1y2y3(&r).iter().all(|&b| b));
    }

    #[test]
    fn equivalence_search_is_symmetric(
        r in pair_map(5),
        seed in any::<u64>(),
    ) {
        let n = r.size();
        let mut phi: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            phi.swap(i, (s >> 33) as usize % (i + 1));
        }
        let other = relabel(&r, &phi);
        let found = find_equivalence(&r, &other, DEFAULT_BUDGET).unwrap().expect("relabeling is an equivalence");
        prop_assert!(intertwines(&r, &other, &found));
        let mut back = vec![0; n];
        for (i, &p) in found.iter().enumerate() {
            back[p] = i;
        }
        prop_assert!(intertwines(&other, &r, &back));
        prop_assert!(find_equivalence(&other, &r, DEFAULT_BUDGET).unwrap().is_some());
    }

    #[test]
    fn table_documents_round_trip(
        rows in (1usize..5).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(0..n, n), n)),
        labelled in any::<bool>(),
    ) {
        let n = rows.len();
        let labels = labelled.then(|| (0..n).map(|i| format!("x{i}")).collect());
        let doc = StructureDoc::Table { payload: rows, labels };
        let text = render(&doc);
        prop_assert_eq!(parse(&text).unwrap(), doc.clone());
        prop_assert_eq!(render(&parse(&text).unwrap()), text);
    }

    #[test]
    fn distributor_forms_agree(idx in 0usize..12, z in 0usize..24) {
        let (name, _) = builtins()[idx].clone();
        let w = builtin_brace(name).unwrap();
        let z = z % w.size();
        prop_assert!(check_d_equivalences(&w, z).agree());
    }
}

#[test]
fn canonical_solutions_of_builtins() {
    for (name, _) in builtins() {
        let w = builtin_brace(name).unwrap();
        let r = canonical_solution(&w);
        assert!(check_braid(&r).holds, "{name}");
        if w.level() >= Level::Skew {
            let p = properties(&r);
            assert!(p.bijective && p.left_nondeg && p.right_nondeg, "{name}");
            assert_eq!(p.involutive, w.level() == Level::Brace, "{name}");
            assert_eq!(deformed_solution(&w, w.identity().unwrap()), r, "{name}");
        }
    }
}

#[test]
fn two_sided_iff_distributor_is_everything() {
    for (name, _) in builtins() {
        let w = builtin_brace(name).unwrap();
        assert_eq!(
            is_two_sided(&w),
            right_distributor(&w).len() == w.size(),
            "{name}"
        );
    }
}
