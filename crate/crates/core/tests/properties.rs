use std::collections::BTreeSet;

use num_rational::BigRational;
use proptest::prelude::*;
use surjalg::characters::{
    centralizer_order, character_table, induce_product, inner_product, mn_character, restrict_to_young, ClassFunction,
};
use surjalg::partitions::{add_boxes_no_two_same_column, enumerate_partitions, hook_dimension, removable_boxes};
use surjalg::perm::{factorial, Perm};
use surjalg::tableaux::{lr_coefficient, lr_expand, pieri_expand};
use surjalg::Partition;

fn partition_of(k: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(k);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn partition_up_to(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(partition_of)
}

/// Every way to add one box, row by row.
fn single_additions(lambda: &Partition) -> BTreeSet<Partition> {
    let parts = lambda.parts();
    (0..=parts.len())
        .filter(|&i| i == 0 || parts.get(i).copied().unwrap_or(0) < parts[i - 1])
        .map(|i| {
            let mut v = parts.to_vec();
            if i == v.len() {
                v.push(1);
            } else {
                v[i] += 1;
            }
            Partition::new(v).unwrap()
        })
        .collect()
}

fn partition_count(n: usize) -> u64 {
    // p(n) by the coin-change recurrence over part sizes
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p[n]
}

#[test]
fn hook_dimensions_square_sum_to_factorial() {
    for k in 0..=8 {
        let s: u64 = enumerate_partitions(k).iter().map(|l| hook_dimension(l).pow(2)).sum();
        assert_eq!(s, factorial(k), "k = {k}");
    }
}

#[test]
fn partition_counts_match_recurrence() {
    for n in 0..=30 {
        assert_eq!(enumerate_partitions(n).len() as u64, partition_count(n), "n = {n}");
    }
}

#[test]
fn character_columns_are_orthogonal() {
    for k in 1..=7 {
        let table = character_table(k);
        let classes = enumerate_partitions(k);
        for (a, mu) in classes.iter().enumerate() {
            for (b, _) in classes.iter().enumerate() {
                let s: i64 = table.iter().map(|row| row[a] * row[b]).sum();
                let want = if a == b { centralizer_order(mu) as i64 } else { 0 };
                assert_eq!(s, want, "k = {k}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn one_box_additions(lambda in partition_up_to(9)) {
        let got: BTreeSet<Partition> = add_boxes_no_two_same_column(&lambda, 1).into_iter().collect();
        prop_assert_eq!(got, single_additions(&lambda));
    }

    #[test]
    fn two_box_strips_are_two_step_additions(lambda in partition_up_to(8)) {
        let two_step: BTreeSet<Partition> =
            single_additions(&lambda).iter().flat_map(single_additions).collect();
        for alpha in add_boxes_no_two_same_column(&lambda, 2) {
            prop_assert!(two_step.contains(&alpha));
        }
    }

    #[test]
    fn removal_inverts_addition(lambda in partition_up_to(9)) {
        for mu in removable_boxes(&lambda) {
            prop_assert!(add_boxes_no_two_same_column(&mu, 1).contains(&lambda));
        }
        for alpha in add_boxes_no_two_same_column(&lambda, 1) {
            prop_assert!(removable_boxes(&alpha).contains(&lambda));
        }
    }

    #[test]
    fn lr_is_symmetric(a in 0usize..=4, b in 0usize..=3, seed in any::<u64>()) {
        let lambdas = enumerate_partitions(a);
        let deltas = enumerate_partitions(b);
        let lambda = &lambdas[seed as usize % lambdas.len()];
        let delta = &deltas[(seed >> 20) as usize % deltas.len()];
        for gamma in enumerate_partitions(a + b) {
            prop_assert_eq!(
                lr_coefficient(lambda, delta, &gamma).unwrap(),
                lr_coefficient(delta, lambda, &gamma).unwrap()
            );
        }
    }

    #[test]
    fn lr_dimension_identity(lambda in partition_up_to(4), delta in partition_up_to(3)) {
        let total: u64 = lr_expand(&lambda, &delta).iter().map(|(g, c)| c * hook_dimension(g)).sum();
        let n = lambda.size() + delta.size();
        let binom = factorial(n) / (factorial(lambda.size()) * factorial(delta.size()));
        prop_assert_eq!(total, binom * hook_dimension(&lambda) * hook_dimension(&delta));
    }

    #[test]
    fn pieri_is_lr_with_a_row(lambda in partition_up_to(6), r in 0usize..=4) {
        let pieri = pieri_expand(&lambda, r);
        prop_assert_eq!(&pieri, &lr_expand(&lambda, &Partition::row(r)));
        prop_assert!(pieri.values().all(|&m| m == 1));
    }

    #[test]
    fn conjugation_twists_by_sign(k in 1usize..=7, seed in any::<u64>()) {
        let all = enumerate_partitions(k);
        let lambda = &all[seed as usize % all.len()];
        let mu = &all[(seed >> 24) as usize % all.len()];
        let sign = Perm::class_representative(mu).sign();
        prop_assert_eq!(mn_character(&lambda.conjugate(), mu).unwrap(), sign * mn_character(lambda, mu).unwrap());
    }

    #[test]
    fn frobenius_reciprocity(phi in partition_up_to(3), psi in partition_up_to(3), seed in any::<u64>()) {
        let (a, b) = (phi.size(), psi.size());
        let all = enumerate_partitions(a + b);
        let chi = ClassFunction::irreducible(&all[seed as usize % all.len()]);
        let phi = ClassFunction::irreducible(&phi).add(&ClassFunction::trivial(a)).unwrap();
        let psi = ClassFunction::irreducible(&psi);
        let lhs = inner_product(&induce_product(&phi, &psi).unwrap(), &chi).unwrap();
        let rhs = inner_product(&phi.tensor(&psi), &restrict_to_young(&chi, a, b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_products_decompose_by_lr(lambda in partition_up_to(3), delta in partition_up_to(3)) {
        let ind = induce_product(&ClassFunction::irreducible(&lambda), &ClassFunction::irreducible(&delta)).unwrap();
        let expanded = lr_expand(&lambda, &delta);
        for gamma in enumerate_partitions(lambda.size() + delta.size()) {
            let want = BigRational::from_integer(expanded.get(&gamma).copied().unwrap_or(0).into());
            prop_assert_eq!(inner_product(&ClassFunction::irreducible(&gamma), &ind).unwrap(), want);
        }
    }
}
