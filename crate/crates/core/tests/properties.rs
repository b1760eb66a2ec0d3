mod common;

use proptest::prelude::*;
use proptest::sample::Index;

use lcmlattice::enumerate::{admissible_quotients, generate_all, EnumerationDag};
use lcmlattice::homology::betti_table;
use lcmlattice::sdepth::{char_poset, sdepth_decision, sdepth_of_poset, Mode};
use lcmlattice::{are_isomorphic, canonical_form, lcm_lattice, parse_ideal, realize, Lattice, MonomialIdeal};

use common::oracles;

fn dag4() -> &'static EnumerationDag {
    static DAG: std::sync::OnceLock<EnumerationDag> = std::sync::OnceLock::new();
    DAG.get_or_init(|| generate_all(4).unwrap())
}

fn node_lattice(i: &Index) -> Lattice {
    let dag = dag4();
    dag.nodes[i.index(dag.len())].representative.clone()
}

/// Permutation of `0..n` from a shuffle key.
fn permutation(keys: &[u32], n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (keys[i % keys.len()].wrapping_mul(i as u32 + 1), i));
    let mut perm = vec![0; n];
    for (to, &from) in order.iter().enumerate() {
        perm[from] = to;
    }
    perm
}

fn ideals(max_vars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens)
            .prop_filter("unit ideal", |gens| gens.iter().all(|g| g.iter().any(|&e| e > 0)))
            .prop_map(move |gens| MonomialIdeal::minimalized(n, gens).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels(i in any::<Index>(), keys in prop::collection::vec(any::<u32>(), 1..20)) {
        let l = node_lattice(&i);
        let relabeled = l.relabel(&permutation(&keys, l.size())).unwrap();
        prop_assert_eq!(canonical_form(&l), canonical_form(&relabeled));
        prop_assert!(are_isomorphic(&l, &relabeled));
    }

    #[test]
    fn realization_round_trips(i in any::<Index>()) {
        let l = node_lattice(&i);
        let ideal = realize(&l).unwrap();
        prop_assert!(ideal.is_squarefree());
        prop_assert!(are_isomorphic(&lcm_lattice(&ideal).unwrap().lattice, &l));
    }

    #[test]
    fn quotients_are_lattices(i in any::<Index>()) {
        let l = node_lattice(&i);
        l.check_axioms().unwrap();
        for q in admissible_quotients(&l) {
            q.check_axioms().unwrap();
            prop_assert_eq!(q.atoms().len(), l.atoms().len());
            prop_assert!(q.size() < l.size());
        }
    }

    #[test]
    fn betti_numbers_alternate_to_zero(ideal in ideals(4, 2, 5)) {
        let l = lcm_lattice(&ideal).unwrap().lattice;
        let totals = betti_table(&l).unwrap().totals();
        prop_assert_eq!(totals[0], 1);
        let sum: i64 = totals.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(sum, 0);
    }

    #[test]
    fn betti_numbers_match_taylor(ideal in ideals(4, 2, 5)) {
        let l = lcm_lattice(&ideal).unwrap().lattice;
        prop_assert_eq!(betti_table(&l).unwrap().totals(), oracles::taylor_betti_totals(&ideal));
    }

    #[test]
    fn ideal_text_round_trips(ideal in ideals(5, 3, 5)) {
        let back = parse_ideal(&ideal.to_string()).unwrap().with_num_vars(ideal.num_vars()).unwrap();
        prop_assert_eq!(back.generators(), ideal.generators());
    }

    #[test]
    fn certificates_verify_and_are_optimal(ideal in ideals(4, 2, 4), quotient in any::<bool>()) {
        let mode = if quotient { Mode::Quotient } else { Mode::Ideal };
        let poset = char_poset(&ideal, mode).unwrap();
        let (d, partition) = sdepth_of_poset(&poset);
        partition.verify(&poset, d).unwrap();
        prop_assert!(sdepth_decision(&poset, d + 1).is_none() || d == poset.num_vars());
        if poset.len() <= 64 {
            prop_assert_eq!(d, oracles::sdepth_brute_force(&ideal, quotient));
        }
    }
}
