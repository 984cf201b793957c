//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewtab::asymptotics::{
    mw_t_estimate, p_expansion_row, par_eps, par_eps_mass, rectangle_product, ssum_identity_check,
    super_schur_eval, LogScaled,
};
use skewtab::characters::{character, character_oracle, chi_transposition, f_count};
use skewtab::containment::{
    check_genpoly, check_stability, closed_form_for, e_coeff, leading_coefficient, n_direct, n_eq8, n_row,
    n_thm1, CLOSED_FORMS,
};
use skewtab::partitions::{partitions_of, Partition, SkewShape};
use skewtab::sequences::t;
use skewtab::skew_count::{f_skew_brute, f_skew_char, f_skew_det};
use skewtab::Rat;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let elapsed = start.elapsed();
    check(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn r(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    r(rng.gen_range(0..=12), rng.gen_range(1..=12))
}

fn random_partition(rng: &mut ChaCha8Rng, max_weight: usize, max_len: usize) -> Partition {
    loop {
        let w = rng.gen_range(0..=max_weight);
        let all: Vec<Partition> = partitions_of(w).into_iter().filter(|p| p.len() <= max_len).collect();
        if !all.is_empty() {
            return all[rng.gen_range(0..all.len())].clone();
        }
    }
}

/// Every valid skew pair with `|outer| <= max_outer`, `|inner| <= max_inner`.
fn skew_pairs(max_outer: usize, max_inner: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 0..=max_outer {
        for lambda in partitions_of(n) {
            for k in 0..=max_inner.min(n) {
                for alpha in partitions_of(k) {
                    if lambda.contains(&alpha) {
                        out.push(SkewShape::new(lambda.clone(), alpha).unwrap());
                    }
                }
            }
        }
    }
    out
}

fn golden_table() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut shapes = 0;
    for form in CLOSED_FORMS {
        for alpha in form.shapes() {
            shapes += 1;
            for n in alpha.weight()..=15 {
                let expected = form.evaluate(n);
                let got = n_thm1(n, &alpha).map_err(|e| e.to_string())?;
                check(expected == Rat::from_integer(got.clone()), || {
                    format!("N({n};{alpha}) = {got}, closed form gives {expected}")
                })?;
                checked += 1;
            }
        }
    }
    check(CLOSED_FORMS.len() == 11, || "expected 11 closed forms".into())?;
    within(start, Duration::from_secs(10))?;
    Ok(format!("{} forms, {shapes} shapes, {checked} values exact", CLOSED_FORMS.len()))
}

fn triple_containment() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for k in 1..=5 {
        for alpha in partitions_of(k) {
            for n in k..=12 {
                let direct = n_direct(n, &alpha);
                let thm1 = n_thm1(n, &alpha).map_err(|e| e.to_string())?;
                let eq8 = n_eq8(n, &alpha);
                check(direct == thm1 && thm1 == eq8, || {
                    format!("N({n};{alpha}): direct {direct}, thm1 {thm1}, eq8 {eq8}")
                })?;
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} (n, alpha) pairs agree"))
}

fn triple_skew() -> Outcome {
    let start = Instant::now();
    let pairs = skew_pairs(10, 4);
    for shape in &pairs {
        let brute = f_skew_brute(shape).map_err(|e| e.to_string())?;
        let det = f_skew_det(shape).map_err(|e| e.to_string())?;
        let chr = f_skew_char(shape).map_err(|e| e.to_string())?;
        check(brute == det && det == chr, || {
            format!("{shape}: brute {brute}, det {det}, char {chr}")
        })?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} skew shapes agree", pairs.len()))
}

fn rsk_mass() -> Outcome {
    let start = Instant::now();
    for n in 0..=25 {
        let total: BigInt = partitions_of(n).iter().map(f_count).sum();
        check(total == t(n as i64), || format!("n = {n}: {total} != {}", t(n as i64)))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok("sum f^lambda = t_n for n <= 25".into())
}

fn character_correctness() -> Outcome {
    let mut pairs = 0;
    for n in 0..=7 {
        let shapes = partitions_of(n);
        for lambda in &shapes {
            for mu in &shapes {
                let mn = character(lambda, mu).map_err(|e| e.to_string())?;
                let oracle = character_oracle(lambda, mu).map_err(|e| e.to_string())?;
                check(mn == oracle, || format!("chi^{lambda}({mu}): {mn} vs oracle {oracle}"))?;
                pairs += 1;
            }
        }
        for lambda in &shapes {
            for rho in &shapes {
                let inner: Rat = shapes
                    .iter()
                    .map(|mu| {
                        Rat::new(
                            character(lambda, mu).unwrap() * character(rho, mu).unwrap(),
                            mu.centralizer_order(),
                        )
                    })
                    .sum();
                let expected = if lambda == rho { Rat::one() } else { Rat::zero() };
                check(inner == expected, || format!("<chi^{lambda}, chi^{rho}> = {inner}"))?;
            }
        }
    }
    for k in 2..=8 {
        for alpha in partitions_of(k) {
            let content = chi_transposition(&alpha).map_err(|e| e.to_string())?;
            let mn = character(&alpha, &Partition::row(2).with_ones(k - 2)).unwrap();
            check(content == Rat::from_integer(mn.clone()), || {
                format!("chi^{alpha}(2,1^{}) = {mn}, content formula {content}", k - 2)
            })?;
        }
    }
    Ok(format!("{pairs} oracle pairs, orthogonality to weight 7, transposition to weight 8"))
}

fn vanishing_coefficients() -> Outcome {
    let mut count = 0;
    for k in 0..=8 {
        for alpha in partitions_of(k) {
            let e0 = e_coeff(0, &alpha).map_err(|e| e.to_string())?;
            let e1 = e_coeff(1, &alpha).map_err(|e| e.to_string())?;
            let e2 = e_coeff(2, &alpha).map_err(|e| e.to_string())?;
            check(e0 == leading_coefficient(&alpha), || format!("e_0({alpha}) = {e0}"))?;
            check(e1.is_zero() && e2.is_zero(), || format!("e_1({alpha}) = {e1}, e_2 = {e2}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} shapes with |alpha| <= 8"))
}

fn conjugate_symmetry() -> Outcome {
    let mut count = 0;
    for k in 1..=5 {
        for alpha in partitions_of(k) {
            let conj = alpha.conjugate();
            for n in k..=12 {
                let a = n_thm1(n, &alpha).map_err(|e| e.to_string())?;
                let b = n_thm1(n, &conj).map_err(|e| e.to_string())?;
                check(a == b, || format!("N({n};{alpha}) = {a} but N({n};{conj}) = {b}"))?;
                check(n_direct(n, &alpha) == n_direct(n, &conj), || format!("direct N({n};{alpha})"))?;
                count += 1;
            }
        }
    }
    for shape in skew_pairs(10, 4) {
        let a = f_skew_det(&shape).map_err(|e| e.to_string())?;
        let b = f_skew_det(&shape.conjugate()).map_err(|e| e.to_string())?;
        check(a == b, || format!("f^{shape} = {a} but conjugate gives {b}"))?;
        count += 1;
    }
    Ok(format!("{count} symmetric pairs"))
}

fn stability_and_genpoly() -> Outcome {
    for k in 0..=8 {
        check(check_stability(k).map_err(|e| e.to_string())?, || format!("stability fails at k = {k}"))?;
    }
    for n in 0..=6 {
        check(check_genpoly(n, 8).map_err(|e| e.to_string())?, || format!("A_{n}(x)/(1-x) mismatch"))?;
    }
    let mut rows = 0;
    for total in 0..=20 {
        for k in 0..=total {
            n_row(total, k).map_err(|e| e.to_string())?;
            rows += 1;
        }
    }
    Ok(format!("k <= 8 stable, A_n for n <= 6, {rows} row evaluations agree"))
}

fn moser_wyman() -> Outcome {
    let rel = |n: u64, order: u8| -> f64 {
        let est: LogScaled<f64> = mw_t_estimate(n, order).unwrap();
        est.relative_error(&t(n as i64)).abs()
    };
    let e10 = rel(10, 2);
    let e100 = rel(100, 2);
    check(e10 < 5e-3, || format!("n = 10 relative error {e10:.3e} >= 0.5%"))?;
    check(e100 < 5e-4, || format!("n = 100 relative error {e100:.3e} >= 0.05%"))?;
    let by_order: Vec<f64> = (0..=2).map(|o| rel(50, o)).collect();
    check(by_order[0] > by_order[1] && by_order[1] > by_order[2], || {
        format!("n = 50 errors by order {by_order:?} not decreasing")
    })?;
    Ok(format!(
        "rel err n=10: {e10:.2e}, n=100: {e100:.2e}, n=50 by order: {:.2e} > {:.2e} > {:.2e}",
        by_order[0], by_order[1], by_order[2]
    ))
}

fn two_row_law() -> Outcome {
    let two = Partition::row(2);
    for m in 2..=200usize {
        let lambda = Partition::new(vec![m, m]).unwrap();
        let skew = f_skew_det(&SkewShape::new(lambda.clone(), two.clone()).unwrap()).map_err(|e| e.to_string())?;
        let ratio = Rat::new(skew, f_count(&lambda));
        let m = m as i64;
        check(ratio == r(3 * (m - 1), 2 * (2 * m - 1)), || format!("m = {m}: ratio {ratio}"))?;
        let gap = (&ratio - r(3, 4)).abs();
        check(gap == r(3, 4 * (2 * m - 1)), || format!("m = {m}: gap {gap}"))?;
    }
    let limit = super_schur_eval(&two, &[r(1, 2), r(1, 2)], &[]).map_err(|e| e.to_string())?;
    check(limit == r(3, 4), || format!("s_2(1/2,1/2) = {limit}"))?;
    Ok("m = 2..200 exact, limit 3/4".into())
}

fn super_schur_factorization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    for trial in 0..20 {
        let i = rng.gen_range(1..=3);
        let j = rng.gen_range(1..=3);
        let mu = random_partition(&mut rng, 3, i);
        let nu = random_partition(&mut rng, 3, j);
        let a: Vec<Rat> = (0..i).map(|_| random_rat(&mut rng)).collect();
        let b: Vec<Rat> = (0..j).map(|_| random_rat(&mut rng)).collect();
        let (alpha, product) = rectangle_product(i, j, &mu, &nu, &a, &b).map_err(|e| e.to_string())?;
        let direct = super_schur_eval(&alpha, &a, &b).map_err(|e| e.to_string())?;
        check(product == direct, || {
            format!("trial {trial}: alpha = {alpha}, product {product} vs power-sum {direct}")
        })?;
    }
    Ok("20 random instances exact".into())
}

fn schur_sum_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0012);
    let vectors: Vec<Vec<Rat>> = (0..10)
        .map(|_| {
            let len = rng.gen_range(1..=4);
            (0..len).map(|_| random_rat(&mut rng)).collect()
        })
        .collect();
    for n in 0..=6 {
        for v in &vectors {
            check(ssum_identity_check(n, v), || format!("identity fails at n = {n}, v = {v:?}"))?;
        }
    }
    Ok("n <= 6 over 10 random vectors".into())
}

fn p_expansion_consistency() -> Outcome {
    let shapes = [vec![2, 1], vec![3], vec![2, 2]];
    let mut lines = Vec::new();
    for parts in shapes {
        let alpha = Partition::new(parts).unwrap();
        println!("    P-expansion table for alpha = ({alpha}):");
        println!("      {:>4} {:>22} {:>14} {:>14}", "n", "exact P", "residual", "resid*n^2.5");
        for n in (20..=60).step_by(5) {
            let row = p_expansion_row(n, &alpha).map_err(|e| e.to_string())?;
            println!(
                "      {:>4} {:>22.15} {:>14.4e} {:>14.6}",
                n,
                skewtab::scalar::rat_to_f64(&row.exact),
                row.residual,
                row.scaled_residual
            );
        }
        let s30 = p_expansion_row(30, &alpha).unwrap().scaled_residual.abs();
        let s60 = p_expansion_row(60, &alpha).unwrap().scaled_residual.abs();
        check(s60 <= 2.0 * s30, || format!("alpha = {alpha}: scaled residual {s60} at 60 vs {s30} at 30"))?;
        lines.push(format!("({alpha}) {s30:.3}->{s60:.3}"));
    }
    Ok(format!("scaled residual 30->60: {}", lines.join(", ")))
}

fn par_eps_report() -> Outcome {
    let eps_values = [r(1, 4), r(1, 2), r(1, 1)];
    println!("    Par_eps mass table:");
    println!("      {:>4} {:>12} {:>12} {:>12}", "n", "eps=1/4", "eps=1/2", "eps=1");
    for n in [16usize, 25, 36, 49] {
        let mut masses = Vec::new();
        let mut prev_set: Option<HashSet<Partition>> = None;
        let mut prev_mass = Rat::zero();
        for eps in &eps_values {
            let set: HashSet<Partition> = par_eps(n, eps).map_err(|e| e.to_string())?.into_iter().collect();
            if let Some(prev) = &prev_set {
                check(prev.iter().all(|l| set.contains(l)), || format!("n = {n}: sets not nested at eps = {eps}"))?;
            }
            let mass = par_eps_mass(n, eps).map_err(|e| e.to_string())?;
            check(mass >= prev_mass && mass <= Rat::one(), || format!("n = {n}: mass {mass} not monotone"))?;
            masses.push(skewtab::scalar::rat_to_f64(&mass));
            prev_mass = mass;
            prev_set = Some(set);
        }
        println!("      {:>4} {:>12.6} {:>12.6} {:>12.6}", n, masses[0], masses[1], masses[2]);
    }
    Ok("monotone in eps at n = 16, 25, 36, 49".into())
}

fn main() {
    // forms with distinct shapes are looked up by the table harness too
    assert!(closed_form_for(&Partition::row(3)).is_some());

    let criteria: [(&str, fn() -> Outcome); 14] = [
        ("golden table reproduction", golden_table),
        ("triple-method containment agreement", triple_containment),
        ("skew triple agreement", triple_skew),
        ("RSK mass identity", rsk_mass),
        ("character correctness", character_correctness),
        ("vanishing coefficients", vanishing_coefficients),
        ("conjugate symmetry", conjugate_symmetry),
        ("stability and generating polynomials", stability_and_genpoly),
        ("involution expansion accuracy", moser_wyman),
        ("two-row limit law", two_row_law),
        ("super-Schur factorization", super_schur_factorization),
        ("Schur-sum identity", schur_sum_identity),
        ("probability expansion consistency", p_expansion_consistency),
        ("Par_eps mass report", par_eps_report),
    ];

    let mut failures = 0;
    for (index, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({elapsed:.2?})", index + 1),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {:>2} {name}: {detail} ({elapsed:.2?})", index + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
