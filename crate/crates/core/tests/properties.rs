mod common;

use proptest::prelude::*;
use raag::conjugacy;
use raag::extension::ExtGroup;
use raag::growth::raag_conj_growth;
use raag::oracle::{self, ClassPartition};
use raag::twisted::{self, tcp_general, DEFAULT_BUDGET};
use raag::{DefiningGraph, LengthPreservingAut, Letter, Piling, Sign, Word};

use common::*;

fn letter(r: usize) -> impl Strategy<Value = Letter> {
    (0..r, any::<bool>())
        .prop_map(|(v, s)| Letter::new(v, if s { Sign::Plus } else { Sign::Minus }))
}

fn word(r: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter(r), 0..=max).prop_map(Word::from)
}

fn small_graph() -> impl Strategy<Value = DefiningGraph> {
    (2usize..=5).prop_flat_map(|r| {
        prop::collection::vec(any::<bool>(), r * (r - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..r {
                for b in a + 1..r {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            DefiningGraph::new((1..=r).map(|i| format!("a{i}")), edges).unwrap()
        })
    })
}

fn graph_and_words() -> impl Strategy<Value = (DefiningGraph, Word, Word)> {
    small_graph().prop_flat_map(|g| {
        let r = g.len();
        (Just(g), word(r, 7), word(r, 7))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn piling_equality_matches_rewriting((g, u, v) in graph_and_words()) {
        let fast = Piling::build(&g, &u) == Piling::build(&g, &v);
        prop_assert_eq!(fast, oracle::shuffle_equal(&g, &u, &v).unwrap());
    }

    #[test]
    fn normal_word_is_least_geodesic((g, u, _) in graph_and_words()) {
        let p = Piling::build(&g, &u);
        prop_assert_eq!(p.normal_word(), oracle::shortlex_min(&g, &u).unwrap());
        prop_assert_eq!(p.normal_word(), oracle::canonical(&g, &u));
    }

    #[test]
    fn normal_word_round_trips((g, u, _) in graph_and_words()) {
        let p = Piling::build(&g, &u);
        let n = p.normal_word();
        prop_assert_eq!(n.len(), p.len());
        prop_assert_eq!(Piling::build(&g, &n), p);
    }

    #[test]
    fn inverse_cancels((g, u, _) in graph_and_words()) {
        prop_assert!(Piling::build(&g, &u.concat(&u.inverse())).is_empty());
    }

    #[test]
    fn conjugate_verdicts_are_certified((g, u, v) in graph_and_words()) {
        let u = Word::from(u[..u.len().min(4)].to_vec());
        let v = Word::from(v[..v.len().min(4)].to_vec());
        let verdict = conjugacy::conjugate(&g, &u, &v);
        if let Some(x) = oracle::conjugate(&g, &u, &v, 3) {
            prop_assert!(verdict);
            let moved = x.inverse().concat(&u).concat(&x);
            prop_assert_eq!(Piling::build(&g, &moved), Piling::build(&g, &v));
        }
        if verdict {
            // conjugate reduced forms are cyclic shuffles, so a conjugator
            // no longer than both words exists
            prop_assert!(oracle::conjugate(&g, &u, &v, u.len() + v.len()).is_some());
        }
    }

    #[test]
    fn class_keys_decide_conjugacy((g, u, v) in graph_and_words()) {
        let same = conjugacy::class_key(&g, &u) == conjugacy::class_key(&g, &v);
        prop_assert_eq!(same, conjugacy::conjugate(&g, &u, &v));
    }
}

/// Order-three automorphisms, where the twist direction of tile moves matters.
#[test]
fn order_three_twists_match_oracle() {
    let edgeless = DefiningGraph::edgeless(3);
    let triangle = DefiningGraph::complete(3);
    let cases = [
        (&edgeless, vec![1, 2, 0], vec![1, 1, 1]),
        (&edgeless, vec![1, 2, 0], vec![1, -1, 1]),
        (&triangle, vec![1, 2, 0], vec![1, 1, 1]),
        (&triangle, vec![2, 0, 1], vec![-1, 1, 1]),
    ];
    for (g, perm, sign) in cases {
        let phi = g.validate_aut(perm, sign).unwrap();
        let part = ClassPartition::new(g, &phi, 5, 1_000_000).unwrap();
        let elems: Vec<Word> = part
            .elements()
            .iter()
            .filter(|w| w.len() <= 3)
            .cloned()
            .collect();
        let keys: Vec<Word> = elems
            .iter()
            .map(|u| twisted::twisted_class_key(g, u, &phi, DEFAULT_BUDGET).unwrap())
            .collect();
        for i in 0..elems.len() {
            for j in i..elems.len() {
                let slow = part.same_class(g, &elems[i], &elems[j]).unwrap();
                assert_eq!(
                    keys[i] == keys[j],
                    slow,
                    "{} vs {} under {:?}",
                    elems[i].to_string(g),
                    elems[j].to_string(g),
                    phi
                );
            }
        }
    }
}

#[test]
fn twisted_verdicts_are_certified() {
    let g = DefiningGraph::example4();
    let mut rng = rng(11);
    for phi in [example_inversion(), example_swap(&g)] {
        for _ in 0..200 {
            let u = random_word(&mut rng, 4, 3);
            let x = random_word(&mut rng, 4, 2);
            let v = twisted_conjugate_of(&u, &x, &phi);
            assert!(tcp_general(&g, &u, &v, &phi, DEFAULT_BUDGET).unwrap());
            let found =
                oracle::twisted_conjugate(&g, &u, &v, &phi, 2).expect("witness within bound");
            let moved = twisted_conjugate_of(&u, &found, &phi);
            assert_eq!(Piling::build(&g, &moved), Piling::build(&g, &v));
        }
    }
}

#[test]
fn class_set_is_closed_and_minimal() {
    let g = DefiningGraph::example4();
    let phi = example_swap(&g);
    let mut rng = rng(12);
    for _ in 0..50 {
        let u = random_word(&mut rng, 4, 6);
        let d = twisted::twisted_class_set(&g, &u, &phi, DEFAULT_BUDGET).unwrap();
        for p in &d.pilings {
            assert_eq!(p.len(), d.len());
            assert!(twisted::phi_reduction_step_general(p, &phi).is_none());
            for (_, q) in twisted::phi_tile_moves(p, &phi) {
                assert!(d.contains(&q));
            }
        }
        assert!(d.pilings.iter().any(|p| p.normal_word() == d.min_rep));
    }
}

#[test]
fn extension_conjugates_are_recognised() {
    let g = DefiningGraph::example4();
    let mut rng = rng(13);
    for phi in [example_inversion(), example_swap(&g)] {
        let grp = ExtGroup::new(&g, phi).unwrap();
        for _ in 0..500 {
            let base = random_word(&mut rng, 4, 8);
            let k = rand::Rng::gen_range(&mut rng, 0..grp.order() as i64);
            let x = grp.element(&random_word(&mut rng, 4, 8), k + 1);
            let y = grp.element(&base, k);
            let conj = grp
                .multiply(&grp.multiply(&grp.inverse(&x).unwrap(), &y).unwrap(), &x)
                .unwrap();
            assert!(grp.conjugate(&y, &conj, DEFAULT_BUDGET).unwrap());
            assert_eq!(
                grp.class_key(&y, DEFAULT_BUDGET).unwrap(),
                grp.class_key(&conj, DEFAULT_BUDGET).unwrap()
            );
        }
    }
}

#[test]
fn extension_conjugacy_is_an_equivalence() {
    let g = DefiningGraph::edgeless(2);
    let phi = g.validate_aut(vec![1, 0], vec![-1, 1]).unwrap();
    let grp = ExtGroup::new(&g, phi).unwrap();
    let ball = oracle::ext_ball(&grp, 3).unwrap();
    let keys: Vec<_> = ball
        .iter()
        .map(|(x, _)| grp.class_key(x, DEFAULT_BUDGET).unwrap())
        .collect();
    for (i, (x, _)) in ball.iter().enumerate() {
        for (j, (y, _)) in ball.iter().enumerate() {
            assert_eq!(
                grp.conjugate(x, y, DEFAULT_BUDGET).unwrap(),
                keys[i] == keys[j]
            );
        }
    }
}

#[test]
fn extension_growth_partitions_the_ball() {
    let g = DefiningGraph::edgeless(2);
    let phi = g.validate_aut(vec![1, 0], vec![1, 1]).unwrap();
    let grp = ExtGroup::new(&g, phi).unwrap();
    let table = raag::growth::ext_conj_growth(&grp, 3, 100_000).unwrap();
    let part = oracle::ext_partition(&grp, 5).unwrap();
    let ball = oracle::ext_ball(&grp, 3).unwrap();
    let mut shortest = std::collections::HashMap::new();
    for (x, d) in &ball {
        let e = shortest.entry(part[x]).or_insert(*d);
        *e = (*e).min(*d);
    }
    let mut counts = vec![0u64; 4];
    for d in shortest.values() {
        counts[*d] += 1;
    }
    assert_eq!(table.coefficients, counts);
}

#[test]
fn abelian_growth_counts_lattice_points() {
    // points of 1-norm n in Z^r
    fn sphere(r: usize, n: usize) -> u64 {
        if r == 0 {
            return (n == 0) as u64;
        }
        sphere(r - 1, n) + 2 * (1..=n).map(|k| sphere(r - 1, n - k)).sum::<u64>()
    }
    for r in 1..=3 {
        let t = raag_conj_growth(&DefiningGraph::complete(r), 8, 10_000_000).unwrap();
        let expect: Vec<u64> = (0..=8).map(|n| sphere(r, n)).collect();
        assert_eq!(t.coefficients, expect, "rank {r}");
    }
}

#[test]
fn growth_matches_partition_oracle() {
    let graphs = [
        DefiningGraph::path(3),
        DefiningGraph::example4(),
        DefiningGraph::edgeless(3),
    ];
    for g in &graphs {
        let part =
            ClassPartition::new(g, &LengthPreservingAut::identity(g.len()), 4, 1_000_000).unwrap();
        let t = raag_conj_growth(g, 4, 1_000_000).unwrap();
        assert_eq!(t.coefficients, part.growth(), "{g:?}");
    }
}

#[test]
fn edgeless_growth_ignores_vertex_names() {
    let a = DefiningGraph::edgeless(3);
    let b = DefiningGraph::new(["z", "y", "x"], []).unwrap();
    assert_eq!(
        raag_conj_growth(&a, 5, 1_000_000).unwrap().coefficients,
        raag_conj_growth(&b, 5, 1_000_000).unwrap().coefficients
    );
}
