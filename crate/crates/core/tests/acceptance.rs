//! Acceptance suite: one test per criterion, each named `criterion_NN_*`.
//! All comparisons are exact; there are no floating-point tolerances.

use fibpart::chi_analysis::{
    computed_hull, count_zero_chi, h_rec, hull_points, nonzero_runs, x_sum,
    zero_run_length_allowed, zero_runs, NONZERO_PATTERNS,
};
use fibpart::counting::{chi, count_f, fib_poly};
use fibpart::enumeration::{
    circle, is_primitive, list_essential, minimal_essential, psi, psi_sigma, stability_count,
};
use fibpart::fibcore::{fib_u64, mu_first};
use fibpart::oracle::{brute_poly, product_chi};
use fibpart::orbits::{act_omega, act_s, act_tau, essential_from_m, is_essential, star};
use fibpart::Natural;

fn n(v: u64) -> Natural {
    Natural::from(v)
}

fn f(i: usize) -> u64 {
    fib_u64(i).unwrap()
}

fn nat_list(v: &[u64]) -> Vec<Natural> {
    v.iter().map(|&x| n(x)).collect()
}

fn report(id: u32, what: &str, ok: bool) {
    println!(
        "{} criterion {id:02}: {what}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} failed: {what}");
}

#[test]
fn criterion_01_oracle_equivalence() {
    let first_bad = (0..=20_000u64).find(|&v| fib_poly(&n(v)) != brute_poly(&n(v)).unwrap());
    report(
        1,
        &format!("fib_poly = brute_poly on [0, 20000], first mismatch {first_bad:?}"),
        first_bad.is_none(),
    );
}

#[test]
fn criterion_02_chi_bounded_and_matches_product() {
    let limit = 200_000u64;
    let product = product_chi(limit);
    let first_bad = (0..=limit).find(|&v| {
        let c = chi(&n(v));
        c.abs() > 1 || i64::from(c) != product[v as usize]
    });
    report(
        2,
        &format!("|chi| <= 1 and chi = product_chi on [0, {limit}], first failure {first_bad:?}"),
        first_bad.is_none(),
    );
}

#[test]
fn criterion_03_x_sum_at_f26() {
    let x = x_sum(196_418);
    report(
        3,
        &format!("x_sum(196418) = 46299 (computed {x})"),
        x == 46_299,
    );
}

#[test]
fn criterion_04_psi_table() {
    let want = nat_list(&[
        1, 1, 2, 3, 4, 6, 6, 9, 10, 12, 10, 22, 12, 18, 24, 27, 16, 38, 18, 44,
    ]);
    let got: Vec<Natural> = (1..=20).map(|k| psi(k).unwrap()).collect();
    let sizes_ok = (1..=30u64)
        .all(|k| Natural::from(list_essential(k).unwrap().members.len()) == psi(k).unwrap());
    report(
        4,
        "psi(1..=20) matches and |list_essential(k)| = psi(k) for k <= 30",
        got == want && sizes_ok,
    );
}

#[test]
fn criterion_05_psi_sigma_table() {
    let want = nat_list(&[
        1, 1, 2, 3, 4, 4, 6, 7, 10, 8, 10, 10, 12, 12, 16, 18, 16, 19, 18, 24,
    ]);
    let got: Vec<Natural> = (1..=20).map(|k| psi_sigma(k).unwrap()).collect();
    let diffs: Vec<(usize, String, String)> = got
        .iter()
        .zip(&want)
        .enumerate()
        .filter(|(_, (g, w))| g != w)
        .map(|(i, (g, w))| (i + 1, g.to_string(), w.to_string()))
        .collect();
    report(
        5,
        &format!("psi_sigma(1..=20) matches the table; (k, computed, table) differences {diffs:?}"),
        diffs.is_empty(),
    );
}

#[test]
fn criterion_06_essential_classes() {
    let five = list_essential(5).unwrap().members;
    let six = list_essential(6).unwrap().members;
    let ok = five == nat_list(&[24, 29, 55, 87]) && six == nat_list(&[37, 42, 45, 50, 144, 231]);
    report(6, "essential 5- and 6-numbers", ok);
}

#[test]
fn criterion_07_monoid_products() {
    let s = |a: u64, b: u64| star(&n(a), &n(b)).unwrap();
    let c = |a: u64, b: u64| circle(&n(a), &n(b)).unwrap();
    let ok = s(11, 29) == n(333)
        && s(29, 11) == n(351)
        && c(8, 63) == n(673)
        && s(8, 63) == n(707)
        && c(37, 92) == n(4341)
        && s(37, 92) == n(4362)
        && s(92, 37) == n(4650);
    report(7, "star and circle examples", ok);
}

#[test]
fn criterion_08_minimal_table_and_primitives() {
    let ks: [u64; 20] = [
        1, 2, 3, 5, 7, 8, 11, 13, 18, 17, 19, 21, 23, 29, 27, 34, 31, 37, 41, 47,
    ];
    let ms: [u64; 20] = [
        0, 3, 8, 24, 58, 63, 152, 168, 401, 406, 435, 440, 1011, 1050, 1066, 1155, 1160, 2647,
        2736, 2752,
    ];
    let table_ok = ks
        .iter()
        .zip(&ms)
        .all(|(&k, &m)| minimal_essential(k).unwrap() == n(m));
    // Every primitive k whose M(k) is within the table is listed, in M order.
    let mut found: Vec<(Natural, u64)> = (1..=60u64)
        .filter(|&k| is_primitive(k).unwrap())
        .map(|k| (minimal_essential(k).unwrap(), k))
        .filter(|(m, _)| *m <= n(2752))
        .collect();
    found.sort();
    let order: Vec<u64> = found.iter().map(|p| p.1).collect();
    report(8, "M(k) table and primitive list", table_ok && order == ks);
}

#[test]
fn criterion_09_stability() {
    let mut ok = (2..=12).all(|r| stability_count(r, 1) == n(1));
    for k in 2..=6u64 {
        for r in 2 * k..=2 * k + 3 {
            ok &= stability_count(r as usize, k) == psi(k).unwrap() * 2u32;
        }
    }
    report(9, "stability counts L_r(k)", ok);
}

#[test]
fn criterion_10_square_root_bound() {
    let mut ok = true;
    let mut equal = Vec::new();
    for v in 0..=100_000u64 {
        let c = count_f(&n(v));
        let root = n((v + 1).isqrt());
        ok &= c <= root;
        if &c * &c == n(v + 1) {
            equal.push(v);
        }
    }
    let want = vec![0, 3, 8, 24, 63, 168, 440, 1155, 3024, 7920, 20735, 54288];
    report(
        10,
        &format!("F(n) <= isqrt(n+1) on [0, 1e5], equality at {equal:?}"),
        ok && equal == want,
    );
}

#[test]
fn criterion_11_zero_count_recurrence() {
    let bad: Vec<usize> = (0..=25)
        .filter(|&r| n(count_zero_chi(f(r) - 1)) != h_rec(r))
        .collect();
    report(
        11,
        &format!("count_zero_chi(f_r - 1) = h(r) for r <= 25, failures {bad:?}"),
        bad.is_empty(),
    );
}

#[test]
fn criterion_12_chi_symmetries() {
    let chi_u = |v: u64| chi(&n(v));
    let mut ok = true;
    for r in 2..=18usize {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        for v in f(r) - 1..=f(r + 1) - 1 {
            let mirror = f(r + 2) - 2 - v;
            ok &= chi_u(v) == sign * chi_u(mirror);
            ok &= count_f(&n(v)) == count_f(&n(mirror));
        }
        for v in 2 * f(r) - 1..=f(r - 1) + f(r + 1) - 1 {
            ok &= chi_u(v) == 0;
        }
    }
    for r in 2..=15usize {
        for a in r..=r + 3 {
            let shift = f(a) + f(a + 2);
            ok &= (0..f(r)).all(|v| chi_u(v) == chi_u(v + shift));
        }
    }
    for v in 0..=10_000u64 {
        let x = n(v);
        let c = chi(&x);
        ok &= chi(&act_s(&x)) == -c;
        if v >= 1 {
            ok &= chi(&act_omega(&x).unwrap()) == c;
        }
        if let Ok(t) = act_tau(&x) {
            ok &= chi(&t) == -c;
        }
    }
    report(
        12,
        "reflection, plateau, translation, F-reflection and T-equivariance",
        ok,
    );
}

#[test]
fn criterion_13_run_structure() {
    let hi = f(18);
    let nonzero = nonzero_runs(0, hi).unwrap();
    let zeros = zero_runs(0, hi).unwrap();
    let ok = nonzero
        .iter()
        .all(|run| run.length <= 4 && NONZERO_PATTERNS.contains(&run.values.as_slice()))
        && zeros.iter().all(|run| zero_run_length_allowed(run.length));
    report(
        13,
        "interior nonzero runs follow the ten patterns; zero-run lengths in {1} U {f_r + 1}",
        ok,
    );
}

#[test]
fn criterion_14_essential_characterization() {
    let limit = 10_000u64;
    let by_test: Vec<u64> = (0..=limit).filter(|&v| is_essential(&n(v))).collect();
    let by_index: Vec<u64> = (0..=limit)
        .filter(|&v| {
            v == 0 || {
                let m = mu_first(&n(v));
                m % 2 == 1 && m >= 3
            }
        })
        .collect();
    let by_beatty: Vec<u64> = (0u64..)
        .map(|m| essential_from_m(&n(m)))
        .take_while(|e| *e <= n(limit))
        .map(|e| e.try_into().unwrap())
        .collect();
    report(
        14,
        "essential sets coincide on [0, 1e4]",
        by_test == by_index && by_test == by_beatty,
    );
}

#[test]
fn criterion_15_hull() {
    let bad: Vec<usize> = [9, 11, 12, 14]
        .into_iter()
        .filter(|&r| hull_points(r).unwrap() != computed_hull(r).unwrap())
        .collect();
    report(
        15,
        &format!("predicted hull vertices match the exact hull, failures {bad:?}"),
        bad.is_empty(),
    );
}
