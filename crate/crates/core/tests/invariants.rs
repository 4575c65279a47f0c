use std::collections::BTreeMap;

use hurwitz_core::enumerate::{admissible_transpositions, enumerate, product_word};
use hurwitz_core::jack::{hurwitz_by_zonal, jack_polynomial, verify_cauchy};
use hurwitz_core::partition::{integer, partitions_of, rational};
use hurwitz_core::perm::doubled_type;
use hurwitz_core::surgery::{analyze, orientation_cover, xi, Gluing, RibbonDecomposition, Sign};
use hurwitz_core::symfunc::{apply_laplace_beltrami, cutjoin_iterates};
use hurwitz_core::{PSeries, Partition, Permutation, Rational, Transposition, TranspositionSequence};
use num_bigint::BigUint;
use proptest::prelude::*;

/// A signed permutation of `2n` points: commutes with τ.
fn signed_permutation(n: usize) -> impl Strategy<Value = Permutation> {
    (
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(move |(pi, flips)| {
            let mut images = vec![0; 2 * n];
            for k in 0..n {
                let (a, b) = if flips[k] {
                    (pi[k] + n + 1, pi[k] + 1)
                } else {
                    (pi[k] + 1, pi[k] + n + 1)
                };
                images[k] = a;
                images[k + n] = b;
            }
            Permutation::from_images(&images).unwrap()
        })
}

fn conjugate_sequence(seq: &TranspositionSequence, x: &Permutation) -> TranspositionSequence {
    let sigmas = seq
        .sigmas()
        .iter()
        .map(|s| Transposition::new(x.apply(s.a()), x.apply(s.b())).unwrap())
        .collect();
    TranspositionSequence::new(seq.n(), sigmas).unwrap()
}

fn sequence(n: usize, max_m: usize) -> impl Strategy<Value = TranspositionSequence> {
    let gens = admissible_transpositions(n);
    prop::collection::vec(prop::sample::select(gens), 0..=max_m)
        .prop_map(move |sigmas| TranspositionSequence::new(n, sigmas).unwrap())
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

fn word(max_n: usize, max_m: usize) -> impl Strategy<Value = RibbonDecomposition> {
    (2..=max_n).prop_flat_map(move |n| {
        let gluing = (1..=n, 1..=n, sign(), sign())
            .prop_filter("distinct disks", |(i, j, _, _)| i != j)
            .prop_map(|(i, j, e, d)| Gluing::new(i, j, e, d).unwrap());
        prop::collection::vec(gluing, 0..=max_m).prop_map(move |g| RibbonDecomposition::new(n, g).unwrap())
    })
}

fn partition_of_weight(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=4, 0..=max / 2).prop_map(Partition::from_parts_unsorted)
}

proptest! {
    #[test]
    fn conjugation_preserves_product_word_type((seq, x) in (2usize..=5).prop_flat_map(|n| (sequence(n, 4), signed_permutation(n)))) {
        let moved = conjugate_sequence(&seq, &x);
        prop_assert_eq!(doubled_type(&product_word(&moved)), doubled_type(&product_word(&seq)));
    }

    #[test]
    fn surfaces_satisfy_euler_and_boundary_type(rd in word(5, 5)) {
        let report = analyze(&rd);
        prop_assert_eq!(report.euler_characteristic(), rd.n() as i64 - rd.len() as i64);
        let via_xi = doubled_type(&product_word(&xi(&rd)));
        prop_assert_eq!(Some(report.boundary_type.clone()), via_xi);
    }

    // Holds for up to three ribbons; see the four-ribbon counterexample in
    // the surgery unit tests.
    #[test]
    fn sign_flip_invariance_up_to_three_ribbons(rd in word(6, 3), k in any::<prop::sample::Index>()) {
        let report = analyze(&rd);
        if !rd.is_empty() {
            let k = k.index(rd.len());
            let mut gluings = rd.gluings().to_vec();
            gluings[k] = gluings[k].flipped();
            let flipped = RibbonDecomposition::new(rd.n(), gluings).unwrap();
            prop_assert_eq!(analyze(&flipped), report);
        }
    }

    #[test]
    fn cover_is_orientable_and_doubles_euler(rd in word(4, 4)) {
        let cover = analyze(&orientation_cover(&rd));
        prop_assert!(cover.components.iter().all(|c| c.orientable));
        prop_assert_eq!(cover.euler_characteristic(), 2 * analyze(&rd).euler_characteristic());
    }

    #[test]
    fn laplace_beltrami_preserves_degree(
        lambda in partition_of_weight(10),
        num in 1i64..6,
        den in 1i64..6,
        c in -5i64..5,
    ) {
        let alpha = rational(num, den);
        let input = PSeries::term(lambda.clone(), integer(c));
        let image = apply_laplace_beltrami(&alpha, &input);
        prop_assert!(image.terms().all(|(mu, _)| mu.weight() == lambda.weight()));
    }
}

#[test]
fn conjugation_leaves_counts_unchanged() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let (n, m) = (3, 2);
    let reference = enumerate(n, m).unwrap().counts;
    let gens = admissible_transpositions(n);
    let mut runner = TestRunner::deterministic();
    for _ in 0..10 {
        let x = signed_permutation(n).new_tree(&mut runner).unwrap().current();
        let mut tally: BTreeMap<Partition, BigUint> =
            partitions_of(n).into_iter().map(|p| (p, BigUint::default())).collect();
        for a in &gens {
            for b in &gens {
                let seq = TranspositionSequence::new(n, vec![*a, *b]).unwrap();
                let lambda = doubled_type(&product_word(&conjugate_sequence(&seq, &x))).unwrap();
                *tally.get_mut(&lambda).unwrap() += 1u32;
            }
        }
        assert_eq!(tally, reference, "x = {x}");
    }
}

#[test]
fn eigenvalue_formula_matches_operator() {
    for alpha in [integer(1), integer(2), rational(1, 2)] {
        for n in 1..=8 {
            for lambda in partitions_of(n) {
                let j = jack_polynomial(&lambda, &alpha).unwrap();
                let image = apply_laplace_beltrami(&alpha, &j.expansion);
                // [p_1^n] J = 1, so the eigenvalue is the p_1^n coefficient of the image.
                let recovered: Rational = image.coeff(&Partition::ones(n));
                assert_eq!(recovered, lambda.lb_eigenvalue(&alpha), "{lambda} α={alpha}");
                assert_eq!(image, j.expansion.scale(&recovered));
            }
        }
    }
}

#[test]
fn jack_eigenvectors_at_alpha_three() {
    let alpha = integer(3);
    for n in 1..=7 {
        for lambda in partitions_of(n) {
            let j = jack_polynomial(&lambda, &alpha).unwrap();
            assert_eq!(
                apply_laplace_beltrami(&alpha, &j.expansion),
                j.expansion.scale(&j.eigenvalue())
            );
        }
    }
}

#[test]
fn cauchy_at_alpha_half() {
    for n in 1..=7 {
        assert!(verify_cauchy(n, &rational(1, 2)).unwrap(), "n={n}");
    }
}

#[test]
fn zonal_matches_cutjoin_through_degree_six() {
    for n in 1..=6 {
        let iterates = cutjoin_iterates(n, 6);
        for (m, series) in iterates.iter().enumerate() {
            for lambda in partitions_of(n) {
                assert_eq!(
                    hurwitz_by_zonal(m, &lambda).unwrap(),
                    series.coeff(&lambda),
                    "m={m} {lambda}"
                );
            }
        }
    }
}
