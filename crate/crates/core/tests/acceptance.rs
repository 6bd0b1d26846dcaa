//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Time limits are pinned below.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;

use simcore::abacus::{
    c_to_partition, c_to_x, is_bcore_c, is_bcore_x, is_selfconjugate_c, partition_to_c, size_from_c,
};
use simcore::counting::{cat, count_abc};
use simcore::numtheory::coprime;
use simcore::verify::{
    abc_valid, oracle_family, sweep_average, sweep_catalan, sweep_consecutive_triples,
    sweep_largest_part, sweep_lattice, sweep_progressions, sweep_three_moduli, sweep_tripathi,
    SweepRow,
};
use simcore::zcoords::{for_each_composition, rotate, weighted_orbit_check, WindowConstraint};
use simcore::{CCoords, Partition};

const CEILING: u64 = 1000;
const ROUND_TRIP_LIMIT: Duration = Duration::from_millis(1);
const PAIR_SWEEP_LIMIT: Duration = Duration::from_secs(30);
const TRIPLE_SWEEP_LIMIT: Duration = Duration::from_secs(120);
const WHOLE_RUN_LIMIT: Duration = Duration::from_secs(300);

type Verdict = Result<String, String>;

fn rows_ok(rows: Vec<SweepRow>, limit: Option<Duration>, started: Instant) -> Verdict {
    let elapsed = started.elapsed();
    if let Some(bad) = rows.iter().find(|r| !r.matches) {
        return Err(format!("mismatch: {bad}"));
    }
    if let Some(limit) = limit {
        if elapsed > limit {
            return Err(format!("{} rows took {elapsed:.2?}, limit {limit:?}", rows.len()));
        }
    }
    Ok(format!("{} rows agree in {elapsed:.2?}", rows.len()))
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn abacus_round_trip() -> Verdict {
    let p = Partition::new(vec![9, 6, 3, 1, 1, 1]).map_err(fail)?;
    let expected = CCoords::new(4, vec![1, 2, 0, -3]).map_err(fail)?;
    let mut best = Duration::MAX;
    for _ in 0..50 {
        let t = Instant::now();
        let c = partition_to_c(&p, 4).map_err(fail)?;
        let back = c_to_partition(&c);
        let size = size_from_c(&c);
        best = best.min(t.elapsed());
        if c != expected || back != p || size != BigUint::from(21u32) {
            return Err(format!("got c = {:?}, back = {back}, size = {size}", c.values()));
        }
    }
    if best > ROUND_TRIP_LIMIT {
        return Err(format!("round trip took {best:?}"));
    }
    Ok(format!("(9,6,3,1,1,1) <-> (1,2,0,-3), size 21, {best:.2?}"))
}

fn catalan() -> Verdict {
    let t = Instant::now();
    let rows = sweep_catalan(14, CEILING).map_err(fail)?;
    if cat(3, 4).map_err(fail)? != BigUint::from(5u32) || cat(4, 5).map_err(fail)? != BigUint::from(14u32) {
        return Err("anchor values wrong".into());
    }
    rows_ok(rows, Some(PAIR_SWEEP_LIMIT), t)
}

fn average() -> Verdict {
    let t = Instant::now();
    rows_ok(sweep_average(12, CEILING).map_err(fail)?, Some(PAIR_SWEEP_LIMIT), t)
}

fn tripathi() -> Verdict {
    let t = Instant::now();
    let rows = sweep_tripathi(12, CEILING).map_err(fail)?;
    let stats = simcore::oracle::OracleStats::from_cores(&oracle_family(&[3, 4], CEILING).map_err(fail)?);
    if stats.maximizers != vec![Partition::new(vec![3, 1, 1]).map_err(fail)?] {
        return Err(format!("(3,4) maximizers {:?}", stats.maximizers));
    }
    rows_ok(rows, Some(PAIR_SWEEP_LIMIT), t)
}

fn consecutive_triples() -> Verdict {
    let t = Instant::now();
    rows_ok(sweep_consecutive_triples(10, CEILING).map_err(fail)?, Some(TRIPLE_SWEEP_LIMIT), t)
}

fn largest_part() -> Verdict {
    let t = Instant::now();
    let rows = sweep_largest_part(5, 6).map_err(fail)?;
    let zeros = rows.iter().filter(|r| r.formula == "0").count();
    if zeros == 0 {
        return Err("no zero branches exercised".into());
    }
    rows_ok(rows, None, t).map(|s| format!("{s}, {zeros} zero cases"))
}

fn lattice() -> Verdict {
    let t = Instant::now();
    rows_ok(sweep_lattice(6, 9, CEILING).map_err(fail)?, None, t)
}

fn progressions() -> Verdict {
    let t = Instant::now();
    rows_ok(sweep_progressions(12, CEILING).map_err(fail)?, None, t)
}

fn three_moduli() -> Verdict {
    let t = Instant::now();
    let rows = sweep_three_moduli((4, 6), 9, 30, CEILING).map_err(fail)?;
    let mut degenerate = 0;
    for a in 4..=6 {
        for b in a + 1..=9 {
            for c in (a * b - a - b + 1..=30).filter(|&c| abc_valid(a, b, c)) {
                if count_abc(a, b, c).map_err(fail)? != cat(a, b).map_err(fail)? {
                    return Err(format!("({a},{b},{c}) does not reduce to the pair count"));
                }
                degenerate += 1;
            }
        }
    }
    if count_abc(4, 5, 6).map_err(fail)? != BigUint::from(9u32) {
        return Err("(4,5,6) != 9".into());
    }
    rows_ok(rows, None, t).map(|s| format!("{s}, {degenerate} degenerate cases"))
}

fn partitions_of(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::new(prefix.clone()).expect("non-increasing"));
        return;
    }
    for part in (1..=n.min(max)).rev() {
        prefix.push(part);
        partitions_of(n - part, part, prefix, out);
        prefix.pop();
    }
}

fn zero_sum_vectors(a: usize, bound: i64) -> Vec<CCoords> {
    let mut out = Vec::new();
    let mut c = vec![-bound; a];
    loop {
        if c.iter().sum::<i64>() == 0 {
            out.push(CCoords::new(a, c.clone()).expect("zero sum"));
        }
        let mut k = 0;
        while k < a && c[k] == bound {
            c[k] = -bound;
            k += 1;
        }
        if k == a {
            return out;
        }
        c[k] += 1;
    }
}

fn properties() -> Verdict {
    let t = Instant::now();
    let mut all = Vec::new();
    for n in 0..=12 {
        partitions_of(n, n, &mut Vec::new(), &mut all);
    }
    for p in &all {
        let q = p.conjugate();
        if q.conjugate() != *p {
            return Err(format!("conjugation is not an involution on {p}"));
        }
        let (mut h, mut k) = (p.hook_lengths(), q.hook_lengths());
        h.sort_unstable();
        k.sort_unstable();
        if h != k {
            return Err(format!("hook multisets differ for {p}"));
        }
    }

    let mut cores_checked = 0;
    for a in 2..=13u64 {
        for b in (a + 1..=14 - a).filter(|&b| coprime(a, b)) {
            for p in oracle_family(&[a, b], CEILING).map_err(fail)? {
                for m in [a, b] {
                    let mut parts = p.parts().to_vec();
                    parts.push(0);
                    let gaps = parts.windows(2).all(|w| w[0] - w[1] < m);
                    let reps = p.parts().iter().all(|v| (p.parts().iter().filter(|u| *u == v).count() as u64) < m);
                    if !gaps || !reps {
                        return Err(format!("part bounds fail for {p} as a {m}-core"));
                    }
                }
                cores_checked += 1;
            }
        }
    }

    let mut vectors = 0;
    for a in 2..=6 {
        for c in zero_sum_vectors(a, 3) {
            let p = c_to_partition(&c);
            if is_selfconjugate_c(&c) != p.is_self_conjugate() {
                return Err(format!("self-conjugacy criterion fails at {:?}", c.values()));
            }
            let x = c_to_x(&c);
            for b in 1..=12 {
                let direct = p.is_t_core(b).map_err(fail)?;
                if is_bcore_c(&c, b) != direct || is_bcore_x(&x, b) != direct {
                    return Err(format!("core criterion fails at {:?}, b = {b}", c.values()));
                }
            }
            vectors += 1;
        }
    }

    let one = |_: &[u64]| Ratio::from_integer(BigInt::from(1));
    let max = |z: &[u64]| Ratio::from_integer(BigInt::from(*z.iter().max().unwrap_or(&0)));
    let squares = |z: &[u64]| Ratio::from_integer(BigInt::from(z.iter().map(|v| v * v).sum::<u64>()));
    for a in 2..=6usize {
        for b0 in (1..=7u64).filter(|&b| coprime(a as u64, b)) {
            let mut broken = None;
            for_each_composition(a, b0, |z| {
                let mut w = z.to_vec();
                for _ in 0..a {
                    w = rotate(&w);
                }
                if w != z && broken.is_none() {
                    broken = Some(z.to_vec());
                }
            });
            if let Some(z) = broken {
                return Err(format!("rotate^{a} moves {z:?}"));
            }
            let mut windows = vec![None];
            windows.extend((b0 + 1..=b0 + 3).filter(|b| b % a as u64 != 0).map(|b| {
                Some(WindowConstraint::from_modulus(a, b0, b).expect("valid modulus"))
            }));
            for w in &windows {
                let pred = |z: &[u64]| w.as_ref().map_or(true, |w| w.satisfied_by(z));
                weighted_orbit_check(a, b0, pred, one).map_err(fail)?;
                weighted_orbit_check(a, b0, pred, max).map_err(fail)?;
                weighted_orbit_check(a, b0, pred, squares).map_err(fail)?;
            }
        }
    }
    Ok(format!(
        "{} partitions, {cores_checked} cores, {vectors} c-vectors, orbit weights ok in {:.2?}",
        all.len(),
        t.elapsed()
    ))
}

fn main() {
    let started = Instant::now();
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("abacus round trip", abacus_round_trip),
        ("pair counts", catalan),
        ("pair mean size", average),
        ("pair largest size", tripathi),
        ("consecutive triples", consecutive_triples),
        ("largest-part counts", largest_part),
        ("lattice-point counts", lattice),
        ("arithmetic progressions", progressions),
        ("three moduli", three_moduli),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", n + 1);
            }
        }
    }
    let total = started.elapsed();
    if total > WHOLE_RUN_LIMIT {
        failed += 1;
        println!("acceptance run took {total:.2?}, limit {WHOLE_RUN_LIMIT:?}");
    }
    println!("acceptance: {} of 10 criteria passed in {total:.2?}", 10 - failed.min(10));
    if failed > 0 {
        std::process::exit(1);
    }
}
