//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod printed;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use permstat::combinat::{binomial_u64, factorial};
use permstat::cosine::{self, EXCLUDED};
use permstat::distributions::{self as dist, closed::*};
use permstat::enumeration::{self, Sweep};
use permstat::poly::special::eulerian;
use permstat::statistics::{cosine as dot_identity, ninvsum, PairKind, Statistic};
use permstat::verify::{self, Suite};
use permstat::{IntPoly, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn sweep() -> Sweep {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    Sweep::default().jobs(jobs)
}

fn parse(text: &str) -> Result<IntPoly, String> {
    text.parse().map_err(|e| format!("cannot parse {text:?}: {e}"))
}

fn brute(stat: Statistic, n: usize) -> Result<IntPoly, String> {
    dist::brute(&stat, n, &sweep()).map_err(|e| e.to_string())
}

fn expect_poly(what: impl std::fmt::Display, expected: &IntPoly, actual: &IntPoly) -> Result<(), String> {
    if expected == actual {
        Ok(())
    } else {
        Err(format!("{what}: expected {expected}, got {actual}"))
    }
}

/// The n = 6 big factor lost a "+" at a line break ("27x^{14} 14x^{13}").
fn restore_table1_plus(n: usize, big: &str) -> Result<String, String> {
    const BROKEN: &str = "27x^{14} 14x^{13}";
    if n != 6 {
        return Ok(big.to_owned());
    }
    if big.parse::<IntPoly>().is_ok() || !big.contains(BROKEN) {
        return Err("the n = 6 big factor no longer has the known defect".into());
    }
    Ok(big.replace(BROKEN, "27x^{14} + 14x^{13}"))
}

fn table1() -> Outcome {
    for &(n, small, big) in printed::N {
        let printed = &parse(small)? * &parse(&restore_table1_plus(n, big)?)?;
        expect_poly(format!("N_{n}"), &printed, &brute(Statistic::NinvSum, n)?)?;
    }
    Ok(format!("{} rows, n = 1..=8; n = 6 read with a restored '+'", printed::N.len()))
}

fn table2() -> Outcome {
    for &(n, k, cell) in printed::H {
        expect_poly(format!("H_({n},{k})"), &parse(cell)?, &brute(Statistic::InvK { k }, n)?)?;
    }
    let mut closed = 0;
    for n in 1..=8 {
        for k in 1..=n {
            let formula = kstep_closed(n, k).map_err(|e| e.to_string())?;
            expect_poly(format!("closed H_({n},{k})"), &brute(Statistic::InvK { k }, n)?, &formula)?;
            closed += 1;
        }
    }
    Ok(format!("{} printed cells; closed form on {closed} (n,k)", printed::H.len()))
}

fn table3() -> Outcome {
    for &(n, k1, k2, cell) in printed::HK1K2 {
        expect_poly(format!("H_({n},({k1},{k2}))"), &parse(cell)?, &brute(Statistic::InvK1K2 { k1, k2 }, n)?)?;
    }
    let mut regime = 0;
    for n in 1..=8 {
        for k1 in 1..n {
            for k2 in 1..n {
                let Ok((deg, lead)) = k1k2_extremal(n, k1, k2) else { continue };
                let h = brute(Statistic::InvK1K2 { k1, k2 }, n)?;
                if (h.degree(), h.leading()) != (deg, &lead) {
                    return Err(format!(
                        "extremal ({n},{k1},{k2}): predicted ({deg}, {lead}), brute ({}, {})",
                        h.degree(),
                        h.leading()
                    ));
                }
                regime += 1;
            }
        }
    }
    Ok(format!("{} printed cells; extremal form on {regime} in-regime triples", printed::HK1K2.len()))
}

fn table4() -> Outcome {
    for &(n, k, cell) in printed::J {
        expect_poly(format!("J_({n},<={k})"), &parse(cell)?, &brute(Statistic::InvLeK { k }, n)?)?;
    }
    for n in 1..=8usize {
        let cases = [(1, LeKCase::One, 1), (n.wrapping_sub(1), LeKCase::RankMinusOne, 2), (n.wrapping_sub(2), LeKCase::RankMinusTwo, 3)];
        for (k, case, min) in cases {
            if n < min {
                continue;
            }
            let formula = le_k_special(n, case).map_err(|e| e.to_string())?;
            // k = n-2 uses the [n-2]_x! left factor; the printed statement's
            // subscript is a suspected misprint and brute force decides
            expect_poly(format!("{case:?} at n={n}"), &brute(Statistic::InvLeK { k }, n)?, &formula)?;
        }
    }
    for n in 1..=7 {
        for k in 1..=n {
            let deg = le_k_degree(n, k).map_err(|e| e.to_string())?;
            let actual = brute(Statistic::InvLeK { k }, n + 1)?.degree();
            if deg != actual {
                return Err(format!("deg J_({},<={k}): predicted {deg}, brute {actual}", n + 1));
            }
        }
    }
    Ok(format!("{} printed cells; special cases n <= 8; degrees n <= 7", printed::J.len()))
}

fn table_l() -> Outcome {
    for &(n, k, cell) in printed::L {
        expect_poly(format!("L_({n},2,{k})"), &parse(cell)?, &brute(Statistic::ModInv { d: 2, k }, n)?)?;
    }
    for n in 2..=8 {
        let formula = modinv_last_step(n).map_err(|e| e.to_string())?;
        expect_poly(format!("L_({n},2,{})", n - 1), &brute(Statistic::ModInv { d: 2, k: n - 1 }, n)?, &formula)?;
    }
    let mut regime = 0;
    for n in 1..=8 {
        for d in 2..=3 {
            for k in 1..n {
                let Ok((deg, lead)) = modinv_leading(n, d, k) else { continue };
                let l = brute(Statistic::ModInv { d, k }, n)?;
                if (l.degree(), l.leading()) != (deg, &lead) {
                    return Err(format!(
                        "leading L_({n},{d},{k}): predicted ({deg}, {lead}), brute ({}, {})",
                        l.degree(),
                        l.leading()
                    ));
                }
                regime += 1;
            }
        }
    }
    Ok(format!("{} printed cells (y read as x); last step n = 2..=8; leading term on {regime} triples", printed::L.len()))
}

fn table_k() -> Outcome {
    let mut corrupt = 0;
    for &(n, k, cell) in printed::K {
        let b = brute(Statistic::Ipcni { k }, n)?;
        if (n, k) == (7, 1) {
            // printed as "...2416x^3119x^2...", two terms fused together
            if cell.parse::<IntPoly>().is_ok_and(|p| p == b) {
                return Err("the (7,1) cell unexpectedly matches as printed".into());
            }
            if b.mass() != factorial(7) || b.coeff(0) != BigInt::from(1) {
                return Err(format!("K_(7,1) brute is not self-consistent: {b}"));
            }
            expect_poly("K_(7,1) = A_7", &eulerian(7), &b)?;
            corrupt += 1;
            continue;
        }
        expect_poly(format!("K_({n},{k})"), &parse(cell)?, &b)?;
    }
    for n in 1..=8 {
        for k in 1..=n {
            let b = brute(Statistic::Ipcni { k }, n)?;
            if b.coeff(0) != ipcni_constant_term(k) {
                return Err(format!("constant term of K_({n},{k}) is {}", b.coeff(0)));
            }
            if n >= 2 && k == n - 1 {
                expect_poly(format!("K_({n},{k})"), &b, &ipcni_special(n, IpcniCase::RankMinusOne).unwrap())?;
            }
            if n >= 4 && k == n - 2 {
                expect_poly(format!("K_({n},{k})"), &b, &ipcni_special(n, IpcniCase::RankMinusTwo).unwrap())?;
            }
        }
    }
    Ok(format!("{} printed cells, {corrupt} fused cell checked against brute only", printed::K.len()))
}

fn dot_with_identity() -> Outcome {
    for n in 1..=8 {
        let floor = binomial_u64(n as u64 + 2, 3);
        let bad = enumeration::find_counterexample(n, &sweep(), |p| dot_identity(p) == floor + ninvsum(p))
            .map_err(|e| e.to_string())?;
        if let Some(p) = bad {
            return Err(format!("1.pi != C(n+2,3) + ninvsum at {p}"));
        }
    }
    Ok("all of S_1..S_8".into())
}

fn zone_distribution() -> Outcome {
    for n in 2..=8 {
        for k in 1..n {
            let closed = zone_coordinate_dist(n, k).map_err(|e| e.to_string())?;
            for kind in [PairKind::Inversions, PairKind::NonInversions] {
                let b = dist::zone_coordinate_brute(n, k, kind, &sweep()).map_err(|e| e.to_string())?;
                expect_poly(format!("zone coordinate {k} at n={n} ({kind:?})"), &b, &closed)?;
            }
        }
    }
    Ok("1 <= k < n <= 8, both pair kinds".into())
}

fn ninvsum_recurrence() -> Outcome {
    for n in 2..=8 {
        let rec = dist::ninvsum_recurrence(n, &sweep()).map_err(|e| e.to_string())?;
        expect_poly(format!("recurrence N_{n}"), &brute(Statistic::NinvSum, n)?, &rec)?;
    }
    Ok("n = 2..=8".into())
}

fn construction() -> Outcome {
    let start = Instant::now();
    let mut refused = Vec::new();
    for k in 1..=100_000u64 {
        match cosine::construct(k) {
            Ok(pi) => {
                let id = Permutation::identity(pi.rank()).unwrap();
                let dot = id.dot(&pi).unwrap();
                if dot != k {
                    return Err(format!("construct({k}) = {pi} has dot product {dot}"));
                }
            }
            Err(_) => refused.push(k),
        }
    }
    let elapsed = start.elapsed();
    if refused != EXCLUDED {
        return Err(format!("refused {refused:?}"));
    }
    if elapsed > Duration::from_secs(10) {
        return Err(format!("construction sweep took {elapsed:?}"));
    }
    let capped = Sweep::with_max_rank(6);
    for k in 1..=60u64 {
        let count = cosine::count_with_cosine(k, &capped).map_err(|e| e.to_string())?;
        if (count == 0) != cosine::is_excluded(k) {
            return Err(format!("count_with_cosine({k}) = {count}"));
        }
    }
    Ok(format!("k = 1..=100000 in {elapsed:.2?}; refused exactly the 16 excluded values; counts k <= 60"))
}

fn patterns() -> Outcome {
    let report = verify::run(Suite::Patterns, 7, &sweep()).map_err(|e| e.to_string())?;
    if report.passed() {
        Ok("six pattern families over S_1..S_7".into())
    } else {
        Err(report.to_string())
    }
}

fn properties() -> Outcome {
    const SUITES: [Suite; 5] = [Suite::Permutation, Suite::Sums, Suite::Zone, Suite::Steps, Suite::Boundary];
    for suite in SUITES {
        let report = verify::run(suite, 7, &sweep()).map_err(|e| e.to_string())?;
        if !report.passed() {
            return Err(report.to_string());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut values: Vec<usize> = (1..=9).collect();
    let mut draw = |rng: &mut ChaCha8Rng| {
        values.shuffle(rng);
        Permutation::new(values.clone()).unwrap()
    };
    for _ in 0..10_000 {
        let pi = draw(&mut rng);
        let rho = draw(&mut rng);
        for suite in SUITES {
            if let Some(c) = verify::check_permutation(suite, &pi) {
                return Err(format!("{suite} at [{pi}]: {}", c.check));
            }
        }
        if let Some(c) = verify::check_pair(&pi, &rho) {
            return Err(format!("composition at [{pi}] ; [{rho}]: {}", c.check));
        }
    }
    Ok("five suites over S_1..S_7; 10000 seeded samples at n = 9".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("N_n table", table1),
        ("H_(n,k) table and closed form", table2),
        ("H_(n,(k1,k2)) table and extremal form", table3),
        ("J_(n,<=k) table, special cases, degree", table4),
        ("L_(n,2,k) table, last step, leading term", table_l),
        ("K_(n,k) table, special cases, constant term", table_k),
        ("1.pi = C(n+2,3) + ninvsum", dot_with_identity),
        ("zone coordinate distribution", zone_distribution),
        ("ninvsum recurrence", ninvsum_recurrence),
        ("cosine construction and counts", construction),
        ("pattern identities", patterns),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
