mod common;

use common::*;
use imbalance::domino::{enumerate_sdt, imbalance_domino, max_ev};
use imbalance::generate::{natural_posets, random_posets};
use imbalance::identities::{g_shifted, hook_survivors, rectangle_imbalance, survivor_formula};
use imbalance::perm::Permutation;
use imbalance::poset::{extension_stats, natural_labeling, perm_of, Labeling, DEFAULT_CAP};
use imbalance::promotion::{evacuate, gamma};
use imbalance::shapes::{
    count_series, imbalance, inv_poly_shape, partitions as lib_partitions, r_stat, shape_poset, strict_partitions,
    syt_count, two_core, Partition, SeriesKind,
};
use imbalance::Poset;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

#[test]
fn corner_recursion_matches_syt_enumeration() {
    for n in 0..=8 {
        for p in partitions(n) {
            let lambda = part(&p);
            let brute = syt_inv_coeffs(&p);
            assert_eq!(inv_poly_shape(&lambda).to_i64s().unwrap(), brute, "λ={lambda}");
            assert_eq!(syt_count(&lambda), syt(&p).len() as u64);
        }
    }
}

#[test]
fn domino_signed_count_matches_syt_imbalance() {
    for n in (0..=10).step_by(2) {
        for p in partitions(n) {
            let lambda = part(&p);
            assert_eq!(imbalance_domino(&lambda).unwrap(), syt_imbalance(&p), "λ={lambda}");
        }
    }
}

#[test]
fn extension_statistics_match_permutation_filter() {
    for p in random_posets(60, 7, 11) {
        let n = p.len();
        for omega in [natural_labeling(&p), Labeling::new((1..=n).rev().collect()).unwrap()] {
            let stats = extension_stats(&p, &omega, DEFAULT_CAP).unwrap();
            let orders = extensions_by_filter(n, |s, t| p.lt(s, t));
            let mut inv = vec![0i64; n * n.saturating_sub(1) / 2 + 1];
            let mut maj = inv.clone();
            for order in &orders {
                let word: Vec<usize> = order.iter().map(|&e| omega.label(e)).collect();
                inv[inversions(&word)] += 1;
                maj[major_index(&word)] += 1;
            }
            let trim = |mut v: Vec<i64>| {
                while v.last() == Some(&0) {
                    v.pop();
                }
                v
            };
            assert_eq!(stats.count, orders.len() as u64);
            assert_eq!(stats.inv.to_i64s().unwrap(), trim(inv));
            assert_eq!(stats.maj.to_i64s().unwrap(), trim(maj));
            let listed: Vec<Vec<usize>> = p.linear_extensions().map(|f| f.order().to_vec()).collect();
            assert_eq!(listed, orders, "lexicographic order");
        }
    }
}

#[test]
fn covers_are_the_transitive_reduction() {
    for p in random_posets(80, 8, 3) {
        assert_eq!(p.covers().to_vec(), transitive_reduction(p.len(), |s, t| p.lt(s, t)));
    }
    let redundant = Poset::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
    assert_eq!(redundant, Poset::chain(4));
}

#[test]
fn two_core_matches_abacus() {
    for n in 0..=14 {
        for p in partitions(n) {
            assert_eq!(two_core(&part(&p)).parts(), abacus_core(&p).as_slice(), "λ={p:?}");
        }
    }
}

#[test]
fn shifted_counts_match_enumeration() {
    for n in 0..=10 {
        for mu in strict_partitions(n) {
            let parts: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
            assert_eq!(g_shifted(&parts), shifted_syt_count(mu.parts()) as i64, "μ={mu}");
        }
    }
}

#[test]
fn rectangles_against_brute_force() {
    for m in 1..=12 {
        for n in 1..=12 / m {
            let r = rectangle_imbalance(m, n);
            let brute = syt_imbalance(&vec![n; m]);
            assert_eq!(r.actual, brute, "{m}x{n}");
            assert_eq!(r.predicted_abs, brute.abs(), "{m}x{n}");
        }
    }
}

#[test]
fn series_against_direct_counts() {
    let f = count_series(SeriesKind::CoreLe1, 20).unwrap();
    for n in 0..=20 {
        let direct = partitions(n).iter().filter(|p| abacus_core(p).iter().sum::<usize>() <= 1).count();
        assert_eq!(f[n], direct as i64, "f({n})");
    }
    let t = count_series(SeriesKind::TN, 16).unwrap();
    for n in 0..=16 {
        let direct = partitions(n).iter().filter(|p| content_sum(p) % 2 == 0).count();
        assert_eq!(t[n], direct as i64, "t({n})");
    }
    let g = count_series(SeriesKind::GN, 8).unwrap();
    for n in 0..=8 {
        let mut direct = 0;
        for lambda in lib_partitions(n) {
            let (p, w) = shape_poset(&lambda.into()).unwrap();
            let flips = p.linear_extensions().all(|f| perm_of(&evacuate(&p, &f), &w).sign() != perm_of(&f, &w).sign());
            direct += i64::from(flips);
        }
        assert_eq!(g[n], direct, "g({n})");
    }
    let p = count_series(SeriesKind::P, 20).unwrap();
    assert!((0..=20).all(|n| p[n] == partitions(n).len() as i64));
}

#[test]
fn gamma_parity_matches_content_sum() {
    for n in 0..=10 {
        for p in partitions(n) {
            let (poset, _) = shape_poset(&part(&p).into()).unwrap();
            assert_eq!((gamma(&poset) as i64 - content_sum(&p)).rem_euclid(2), 0);
        }
    }
}

#[test]
fn r_statistic_matches_tableau_enumeration() {
    for n in (0..=10).step_by(2) {
        for p in partitions(n) {
            let lambda = part(&p);
            let Ok(tableaux) = enumerate_sdt(&lambda) else { continue };
            let best = tableaux.iter().map(|t| t.ev()).max();
            assert_eq!(max_ev(&lambda), best);
            if two_core(&lambda).is_empty() {
                assert_eq!(r_stat(&lambda).ok(), best);
                let signed: i64 = tableaux.iter().map(|t| if t.ev() % 2 == 0 { 1 } else { -1 }).sum();
                assert_eq!(signed, imbalance(&lambda));
            }
        }
    }
}

#[test]
fn survivors_against_filtered_tableaux() {
    for n in 2..=10 {
        for k in 0..n {
            let mut parts = vec![n - k];
            parts.extend(std::iter::repeat_n(1, k));
            // Survivors: every pair (a, a+1) in the pairing shares a row or
            // a column of the hook.
            let first = if n % 2 == 0 { 1 } else { 2 };
            let direct = syt(&parts)
                .into_iter()
                .filter(|t| {
                    let arm: Vec<usize> = t[0][1..].to_vec();
                    let leg: Vec<usize> = t[1..].iter().map(|r| r[0]).collect();
                    (first..n).step_by(2).all(|a| {
                        let split = (arm.contains(&a) && leg.contains(&(a + 1))) || (leg.contains(&a) && arm.contains(&(a + 1)));
                        !split
                    })
                })
                .count();
            let lambda = part(&parts);
            assert_eq!(hook_survivors(&lambda).unwrap().len(), direct, "n={n} k={k}");
            assert_eq!(survivor_formula(n, k), direct as u64, "n={n} k={k}");
            for word in hook_survivors(&lambda).unwrap() {
                assert_eq!(Permutation::new(word).unwrap().inv() % 2, 0);
            }
        }
    }
}

#[test]
fn natural_poset_counts_match_labelled_filter() {
    // Posets on 0..n whose order refines the integer order, counted by
    // brute force over all relations on pairs i < j.
    for n in 0..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut count = 0;
        for mask in 0u32..(1 << pairs.len()) {
            let lt = |s: usize, t: usize| pairs.iter().position(|&p| p == (s, t)).is_some_and(|i| mask & (1 << i) != 0);
            let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(lt(a, b) && lt(b, c)) || lt(a, c))));
            count += usize::from(transitive);
        }
        assert_eq!(natural_posets(n).len(), count, "n={n}");
    }
}

#[test]
fn vertical_domino_statistic_symmetries() {
    use imbalance::shapes::d_stat;
    for n in 0..=20 {
        for lambda in lib_partitions(n) {
            assert_eq!(d_stat(&lambda), d_stat(&lambda.conjugate()), "λ={lambda}");
            assert_eq!(d_stat(&lambda) == 0, lambda.is_hook(), "λ={lambda}");
        }
    }
}

#[test]
fn syt_counts_satisfy_the_corner_recursion() {
    for n in 1..=12 {
        for lambda in lib_partitions(n) {
            let sum: u64 = lambda.corners().iter().map(|&c| syt_count(&lambda.remove_corner(c).unwrap())).sum();
            assert_eq!(syt_count(&lambda), sum);
            assert_eq!(inv_poly_shape(&lambda).at_one(), syt_count(&lambda).into());
        }
    }
}
