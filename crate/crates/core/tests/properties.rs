//! Property tests for the algebra of uti matrices, bigraphs and inflations,
//! checked against the exact Gaussian oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use pdtest_core::dynkin::DynkinType;
use pdtest_core::generators::{random_positive_bigraph, PositiveGenOptions};
use pdtest_core::inflation::{
    inflate_at_pair, inflate_at_vertex, inflations_at_pair_bounded, inflations_to_pos_sincere_root,
};
use pdtest_core::oracle::{brute_force_roots, gauss_pos_def_test};
use pdtest_core::posdef::{igfpos, test_bigraph};
use pdtest_core::{Algorithm, GramBigraph, InputMatrix, SelectionRng, Strategy as Selection, TestOptions};

fn bigraph(max_n: usize, coeff: i64) -> impl Strategy<Value = GramBigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-coeff..=coeff, n * (n - 1) / 2)
            .prop_map(move |upper| GramBigraph::from_upper(n, upper).unwrap())
    })
}

fn connected_bigraph(max_n: usize, coeff: i64) -> impl Strategy<Value = GramBigraph> {
    bigraph(max_n, coeff).prop_filter("connected", |g| g.is_connected())
}

fn positive_bigraph(max_n: usize) -> impl Strategy<Value = GramBigraph> {
    (2..=max_n, any::<u64>(), 0..60usize).prop_map(|(n, seed, steps)| {
        random_positive_bigraph(n, seed, steps, &PositiveGenOptions::default())
    })
}

/// A uti matrix with random rational entries: `a_ij = p/q` and
/// `a_ji = k - p/q` for an integer `k`.
fn uti_matrix(max_n: usize) -> impl Strategy<Value = InputMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec((-6i64..=6, 1i64..=5, -3i64..=3), pairs).prop_map(move |cells| {
            let mut a = InputMatrix::identity(n);
            let mut it = cells.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let (p, q, k) = it.next().unwrap();
                    let x = BigRational::new(BigInt::from(p), BigInt::from(q));
                    let y = BigRational::from_integer(BigInt::from(k)) - &x;
                    a.set(i, j, x);
                    a.set(j, i, y);
                }
            }
            a
        })
    })
}

fn gauss(g: &GramBigraph) -> bool {
    gauss_pos_def_test(&InputMatrix::from_gram(g))
}

fn root_count(t: DynkinType) -> usize {
    match t {
        DynkinType::A(n) => n * (n + 1),
        DynkinType::D(n) => 2 * n * (n - 1),
        DynkinType::E6 => 72,
        DynkinType::E7 => 126,
        DynkinType::E8 => 240,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn form_of_triangularisation_matches_matrix(
        a in uti_matrix(6),
        v in proptest::collection::vec(-4i64..=4, 6),
    ) {
        let n = a.n();
        let v = &v[..n];
        let g = a.triangularise().unwrap();
        let q = BigRational::from_integer(BigInt::from(g.eval_form(v).unwrap()));
        prop_assert_eq!(&q, &a.quadratic_form(v).unwrap());
        prop_assert_eq!(&q, &a.symmetrize().quadratic_form(v).unwrap());
    }

    #[test]
    fn triangularise_ignores_symmetrization(a in uti_matrix(6)) {
        prop_assert_eq!(a.symmetrize().triangularise().unwrap(), a.triangularise().unwrap());
    }

    #[test]
    fn gauss_agrees_on_sym_and_triangularisation(a in uti_matrix(6)) {
        let verdict = gauss_pos_def_test(&a);
        prop_assert_eq!(verdict, gauss_pos_def_test(&a.symmetrize()));
        prop_assert_eq!(verdict, gauss(&a.triangularise().unwrap()));
    }

    #[test]
    fn components_partition_vertices(g in bigraph(9, 1)) {
        let comps = g.connected_components();
        let mut seen = vec![0usize; g.n()];
        for c in &comps {
            prop_assert!(c.bigraph.is_connected());
            for &v in &c.vertices {
                seen[v - 1] += 1;
            }
            for (a, &i) in c.vertices.iter().enumerate() {
                for (b, &j) in c.vertices.iter().enumerate().skip(a + 1) {
                    prop_assert_eq!(c.bigraph.d(a + 1, b + 1), g.d(i, j));
                }
            }
        }
        prop_assert!(seen.iter().all(|&k| k == 1));
        for (x, cx) in comps.iter().enumerate() {
            for cy in comps.iter().skip(x + 1) {
                for &i in &cx.vertices {
                    for &j in &cy.vertices {
                        prop_assert_eq!(g.d(i, j), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn failed_precheck_means_not_positive(
        g in bigraph(7, 3).prop_filter("has |d| >= 2", |g| !g.coefficient_precheck()),
    ) {
        prop_assert!(!gauss(&g));
    }

    #[test]
    fn vertex_inflation_is_an_involution(g in bigraph(9, 3), a in 1usize..=9) {
        let a = 1 + (a - 1) % g.n();
        let h = inflate_at_vertex(&g, a).unwrap();
        prop_assert_eq!(inflate_at_vertex(&h, a).unwrap(), g);
    }

    #[test]
    fn pair_inflation_touches_only_b(g in bigraph(9, 2), pick in any::<prop::sample::Index>(), flip in any::<bool>()) {
        let dotted: Vec<_> = g.entries().filter(|e| e.2 > 0).map(|e| (e.0, e.1)).collect();
        prop_assume!(!dotted.is_empty());
        let (i, j) = dotted[pick.index(dotted.len())];
        let (a, b) = if flip { (j, i) } else { (i, j) };
        let h = inflate_at_pair(&g, a, b).unwrap();
        prop_assert_eq!(h.d(a, b), -g.d(a, b));
        for (x, y, d) in g.entries() {
            if x != b && y != b {
                prop_assert_eq!(h.d(x, y), d);
            } else if (x, y) != (i, j) {
                let c = if x == b { y } else { x };
                prop_assert_eq!(h.d(b, c), g.d(b, c) - g.d(a, c) * g.d(a, b));
            }
        }
    }

    #[test]
    fn inflations_preserve_connectivity_and_positivity(
        g in connected_bigraph(8, 1),
        pick in any::<prop::sample::Index>(),
        v in 1usize..=8,
        strategy in 0u8..4,
        seed in any::<u64>(),
    ) {
        let verdict = gauss(&g);
        let v = 1 + (v - 1) % g.n();
        let h = inflate_at_vertex(&g, v).unwrap();
        prop_assert!(h.is_connected());
        prop_assert_eq!(gauss(&h), verdict);

        let dotted: Vec<_> = g.entries().filter(|e| e.2 > 0).map(|e| (e.0, e.1)).collect();
        if !dotted.is_empty() {
            let (a, b) = dotted[pick.index(dotted.len())];
            for (x, y) in [(a, b), (b, a)] {
                let h = inflate_at_pair(&g, x, y).unwrap();
                prop_assert!(h.is_connected());
                prop_assert_eq!(gauss(&h), verdict);
            }
        }

        let (h, _) = inflations_to_pos_sincere_root(&g, false).unwrap();
        prop_assert!(h.is_connected());
        prop_assert_eq!(gauss(&h), verdict);

        let strategy = Selection::from_tag(strategy).unwrap();
        let mut rng = SelectionRng::new(seed);
        // A short bound keeps non-positive coefficients from overflowing.
        let (h, _) = inflations_at_pair_bounded(&g, strategy, 6, &mut rng).unwrap();
        prop_assert!(h.is_connected());
        prop_assert_eq!(gauss(&h), verdict);
    }

    #[test]
    fn verdict_matches_oracle_without_precheck(g in connected_bigraph(7, 1), strategy in 0u8..4, seed in any::<u64>()) {
        let opts = TestOptions {
            strategy: Selection::from_tag(strategy).unwrap(),
            seed: Some(seed),
            precheck: false,
            early_exit: true,
        };
        let expected = gauss(&g);
        for alg in [Algorithm::Inflations, Algorithm::RootInflations] {
            match test_bigraph(alg, &g, &opts) {
                Ok(out) => prop_assert_eq!(out.positive, expected, "{}", alg),
                // Unchecked runs may overflow on non-positive input.
                Err(e) => prop_assert!(!expected, "{} failed on positive input: {}", alg, e),
            }
        }
    }

    #[test]
    fn positive_bigraphs_stay_within_bound(g in positive_bigraph(10), strategy in 0u8..4, seed in any::<u64>()) {
        let mut rng = SelectionRng::new(seed);
        let strategy = Selection::from_tag(strategy).unwrap();
        let (h, log) = inflations_at_pair_bounded(&g, strategy, igfpos(g.n()), &mut rng).unwrap();
        prop_assert!(!h.has_dotted());
        prop_assert!(log.pair_count() <= igfpos(g.n()));
    }

    #[test]
    fn roots_are_closed_under_negation(g in bigraph(4, 2)) {
        let roots = brute_force_roots(&g, 3).unwrap();
        for r in &roots {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            prop_assert!(roots.contains(&neg.into()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Box 6 already holds every root of a positive unit form: the count
    /// equals the size of the Dynkin root system and a larger box adds none.
    #[test]
    fn root_box_six_is_exhaustive(g in positive_bigraph(6)) {
        let t = test_bigraph(Algorithm::Inflations, &g, &TestOptions::default())
            .unwrap()
            .dynkin
            .unwrap();
        let roots = brute_force_roots(&g, 6).unwrap();
        prop_assert_eq!(roots.len(), root_count(t));
        if g.n() <= 5 {
            prop_assert_eq!(brute_force_roots(&g, 8).unwrap(), roots);
        }
    }
}
