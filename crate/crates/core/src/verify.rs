//! Formula-versus-oracle sweeps.
//!
//! Each sweep walks a parameter range, evaluates a closed form and the
//! brute-force oracle, and records one [`SweepRow`] per comparison. Families
//! whose enumeration bound exceeds the configured ceiling are refused up
//! front.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::counting::{
    average_size_formula, cat, count_abc, count_firstcor, count_largest, count_largest_exact,
    count_largest_second, count_ssd, count_ssd3, count_via_lattice,
};
use crate::error::{Error, Result};
use crate::extremal::{
    construct_largest_selfconj_sss, largest_size_ab, largest_size_sss, largest_size_selfconj_sss,
    selfconj_gap,
};
use crate::numtheory::coprime;
use crate::oracle::{enumerate_cores, enumerate_cores_by_largest_part, EnumerationBudget, OracleStats};
use crate::partition::{CoreSpec, Partition};
use crate::zcoords::orbit_count_check;

/// One comparison between a formula and the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub check: &'static str,
    pub params: String,
    pub formula: String,
    pub oracle: String,
    pub matches: bool,
}

impl SweepRow {
    fn new(check: &'static str, params: String, formula: impl ToString, oracle: impl ToString) -> Self {
        let formula = formula.to_string();
        let oracle = oracle.to_string();
        let matches = formula == oracle;
        Self {
            check,
            params,
            formula,
            oracle,
            matches,
        }
    }
}

impl fmt::Display for SweepRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.check,
            self.params,
            self.formula,
            self.oracle,
            if self.matches { "ok" } else { "MISMATCH" }
        )
    }
}

/// Which family of statements to sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Catalan,
    Average,
    Tripathi,
    ConsecutiveTriples,
    LargestPart,
    Lattice,
    Progressions,
    ThreeModuli,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Catalan,
        Check::Average,
        Check::Tripathi,
        Check::ConsecutiveTriples,
        Check::LargestPart,
        Check::Lattice,
        Check::Progressions,
        Check::ThreeModuli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Catalan => "catalan",
            Check::Average => "average",
            Check::Tripathi => "tripathi",
            Check::ConsecutiveTriples => "sss",
            Check::LargestPart => "largest-part",
            Check::Lattice => "lattice",
            Check::Progressions => "progressions",
            Check::ThreeModuli => "abc",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }
}

/// Parameter ranges for the sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Coprime `(a, b)` pairs with `a + b <= max_sum` (Catalan count).
    pub max_sum: u64,
    /// Same for the mean and largest size.
    pub max_sum_sizes: u64,
    /// `s` range for `(s, s+1, s+2)`-cores.
    pub max_s: u64,
    /// `a` and `x` ranges for the largest-part counts.
    pub max_a_parts: u64,
    pub max_x: u64,
    /// `a` range and extra-modulus range for the lattice-point count.
    pub max_a_lattice: u64,
    pub max_b_lattice: u64,
    /// `s + d` range for the arithmetic progressions.
    pub max_progression: u64,
    /// `(a, b, c)` ranges for the three-moduli closed form.
    pub abc_a: (u64, u64),
    pub max_b_abc: u64,
    pub max_c_abc: u64,
    /// Largest enumeration size bound the sweep may request.
    pub ceiling: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_sum: 14,
            max_sum_sizes: 12,
            max_s: 10,
            max_a_parts: 5,
            max_x: 6,
            max_a_lattice: 6,
            max_b_lattice: 9,
            max_progression: 12,
            abc_a: (4, 6),
            max_b_abc: 9,
            max_c_abc: 30,
            ceiling: 1000,
        }
    }
}

/// Enumerates a family given by arbitrary moduli `>= 1`. A modulus of 1 only
/// admits the empty partition.
pub fn oracle_family(moduli: &[u64], ceiling: u64) -> Result<Vec<Partition>> {
    if moduli.contains(&1) {
        return Ok(vec![Partition::empty()]);
    }
    let spec = CoreSpec::new(moduli.iter().copied())?;
    let budget = EnumerationBudget::tripathi(&spec)?;
    if budget.max_size > ceiling {
        return Err(Error::BudgetExceeded {
            params: spec.to_string(),
            bound: budget.max_size,
            ceiling,
        });
    }
    enumerate_cores(&spec, &budget)
}

fn coprime_pairs(max_sum: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..max_sum).flat_map(move |a| {
        (a + 1..=max_sum - a)
            .filter(move |&b| coprime(a, b))
            .map(move |b| (a, b))
    })
}

pub fn sweep_catalan(max_sum: u64, ceiling: u64) -> Result<Vec<SweepRow>> {
    coprime_pairs(max_sum)
        .map(|(a, b)| {
            let cores = oracle_family(&[a, b], ceiling)?;
            Ok(SweepRow::new("catalan", format!("({a},{b})"), cat(a, b)?, cores.len()))
        })
        .collect()
}

pub fn sweep_average(max_sum: u64, ceiling: u64) -> Result<Vec<SweepRow>> {
    coprime_pairs(max_sum)
        .map(|(a, b)| {
            let stats = OracleStats::from_cores(&oracle_family(&[a, b], ceiling)?);
            let mean = stats.mean_size().expect("the empty partition is always a core");
            Ok(SweepRow::new("average", format!("({a},{b})"), average_size_formula(a, b)?, mean))
        })
        .collect()
}

pub fn sweep_tripathi(max_sum: u64, ceiling: u64) -> Result<Vec<SweepRow>> {
    coprime_pairs(max_sum)
        .map(|(a, b)| {
            let stats = OracleStats::from_cores(&oracle_family(&[a, b], ceiling)?);
            Ok(SweepRow::new("tripathi", format!("({a},{b})"), largest_size_ab(a, b)?, stats.max_size))
        })
        .collect()
}

/// Largest `(s, s+1, s+2)`-cores: both maxima, the gap, the shape of the
/// maximizers, and the constructed self-conjugate maximizer.
pub fn sweep_consecutive_triples(max_s: u64, ceiling: u64) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for s in 1..=max_s {
        let params = format!("s={s}");
        let stats = OracleStats::from_cores(&oracle_family(&[s, s + 1, s + 2], ceiling)?);
        let (sc_max, sc_who) = stats.self_conjugate_max();
        rows.push(SweepRow::new("sss-largest", params.clone(), largest_size_sss(s)?, stats.max_size));
        rows.push(SweepRow::new(
            "sss-selfconj-largest",
            params.clone(),
            largest_size_selfconj_sss(s)?,
            sc_max,
        ));
        rows.push(SweepRow::new("sss-selfconj-unique", params.clone(), 1, sc_who.len()));
        let shape = maximizer_shape(&stats.maximizers);
        let expected = if s % 2 == 0 { "one self-conjugate" } else { "conjugate pair" };
        // s = 1 only has the empty partition
        let expected = if s == 1 { "one self-conjugate" } else { expected };
        rows.push(SweepRow::new("sss-maximizer-shape", params.clone(), expected, shape));
        if s % 2 == 1 {
            let gap = stats.max_size - sc_max;
            rows.push(SweepRow::new("sss-gap", params.clone(), selfconj_gap(s)?, gap));
        }
        let (built, _) = construct_largest_selfconj_sss(s)?;
        let oracle_best = sc_who.first().map(ToString::to_string).unwrap_or_default();
        rows.push(SweepRow::new("sss-constructor", params, built, oracle_best));
    }
    Ok(rows)
}

fn maximizer_shape(maximizers: &[Partition]) -> &'static str {
    match maximizers {
        [p] if p.is_self_conjugate() => "one self-conjugate",
        [p, q] if !p.is_self_conjugate() && p.conjugate() == *q => "conjugate pair",
        _ => "other",
    }
}

/// Largest-part counts, including the zero branches.
pub fn sweep_largest_part(max_a: u64, max_x: u64) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for a in 2..=max_a {
        for x in 0..=max_x {
            let cores = enumerate_cores_by_largest_part(a, x, None, None)?;
            rows.push(SweepRow::new(
                "largest",
                format!("a={a} x={x}"),
                count_largest(a, x)?,
                cores.len(),
            ));
            if x == 0 {
                continue;
            }
            let mut by_mult: BTreeMap<usize, usize> = BTreeMap::new();
            let mut by_second: BTreeMap<u64, usize> = BTreeMap::new();
            for p in &cores {
                *by_mult.entry(p.parts().iter().filter(|&&v| v == x).count()).or_default() += 1;
                if let Some(&y) = p.parts().get(1) {
                    *by_second.entry(y).or_default() += 1;
                }
            }
            for i in 1..=a + 1 {
                rows.push(SweepRow::new(
                    "largest-exact",
                    format!("a={a} x={x} i={i}"),
                    count_largest_exact(a, x, i)?,
                    by_mult.get(&(i as usize)).copied().unwrap_or(0),
                ));
            }
            for y in 1..=x {
                rows.push(SweepRow::new(
                    "largest-second",
                    format!("a={a} x={x} y={y}"),
                    count_largest_second(a, x, y)?,
                    by_second.get(&y).copied().unwrap_or(0),
                ));
            }
        }
    }
    Ok(rows)
}

/// Lattice-point counts for `(a, b0, b1, b2)` with `a <= max_a`, `b0`
/// coprime to `a`, and up to two extra moduli `<= max_b` that are not
/// multiples of `a`. Each instance also checks the orbit identity.
pub fn sweep_lattice(max_a: u64, max_b: u64, ceiling: u64) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for a in 2..=max_a {
        for b0 in (a + 1..=max_b).filter(|&b| coprime(a, b)) {
            let extras: Vec<u64> = (2..=max_b).filter(|b| b % a != 0 && *b != b0).collect();
            let mut specs: Vec<Vec<u64>> = vec![vec![]];
            for (i, &b1) in extras.iter().enumerate() {
                specs.push(vec![b1]);
                for &b2 in &extras[i + 1..] {
                    specs.push(vec![b1, b2]);
                }
            }
            for rest in specs {
                let mut moduli = vec![a, b0];
                moduli.extend(&rest);
                let cores = oracle_family(&moduli, ceiling)?;
                let params = format!("{moduli:?}");
                let formula = count_via_lattice(a, b0, &rest)?;
                rows.push(SweepRow::new("lattice", params.clone(), &formula, cores.len()));
                let constraints = crate::counting::derived_constraints(a, b0, &rest)?;
                let orbits = orbit_count_check(a as usize, b0, |z| {
                    constraints.iter().all(|w| w.satisfied_by(z))
                })?;
                rows.push(SweepRow::new("lattice-orbits", params, &formula, orbits.y2 / a));
            }
        }
    }
    Ok(rows)
}

/// `(s, s+d, s+2d)` and `(s, s+d, s+2d, s+3d)` counts, plus the `(a, b0, b1)`
/// sum, for coprime `s, d` with `s + d <= max_sum`.
pub fn sweep_progressions(max_sum: u64, ceiling: u64) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for s in 1..max_sum {
        for d in (1..=max_sum - s).filter(|&d| coprime(s, d)) {
            let params = format!("s={s} d={d}");
            let three = oracle_family(&[s, s + d, s + 2 * d], ceiling)?.len();
            let four = oracle_family(&[s, s + d, s + 2 * d, s + 3 * d], ceiling)?.len();
            rows.push(SweepRow::new("ssd", params.clone(), count_ssd(s, d)?, three));
            rows.push(SweepRow::new("ssd3", params.clone(), count_ssd3(s, d)?, four));
            rows.push(SweepRow::new(
                "firstcor",
                params,
                count_firstcor(s + d, s, s + 2 * d)?,
                three,
            ));
        }
    }
    Ok(rows)
}

/// Whether `(a, b, c)` meets the hypotheses of the three-moduli closed form.
pub fn abc_valid(a: u64, b: u64, c: u64) -> bool {
    a > 3 && a < b && coprime(a, b) && (2 * b + c) % a == 0 && 2 * c + 4 * b > a * b
}

pub fn sweep_three_moduli(
    a_range: (u64, u64),
    max_b: u64,
    max_c: u64,
    ceiling: u64,
) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for a in a_range.0..=a_range.1 {
        for b in a + 1..=max_b {
            for c in (1..=max_c).filter(|&c| abc_valid(a, b, c)) {
                let cores = oracle_family(&[a, b, c], ceiling)?;
                rows.push(SweepRow::new(
                    "abc",
                    format!("({a},{b},{c})"),
                    count_abc(a, b, c)?,
                    cores.len(),
                ));
            }
        }
    }
    Ok(rows)
}

pub fn run_check(check: Check, limits: &Limits) -> Result<Vec<SweepRow>> {
    match check {
        Check::Catalan => sweep_catalan(limits.max_sum, limits.ceiling),
        Check::Average => sweep_average(limits.max_sum_sizes, limits.ceiling),
        Check::Tripathi => sweep_tripathi(limits.max_sum_sizes, limits.ceiling),
        Check::ConsecutiveTriples => sweep_consecutive_triples(limits.max_s, limits.ceiling),
        Check::LargestPart => sweep_largest_part(limits.max_a_parts, limits.max_x),
        Check::Lattice => sweep_lattice(limits.max_a_lattice, limits.max_b_lattice, limits.ceiling),
        Check::Progressions => sweep_progressions(limits.max_progression, limits.ceiling),
        Check::ThreeModuli => {
            sweep_three_moduli(limits.abc_a, limits.max_b_abc, limits.max_c_abc, limits.ceiling)
        }
    }
}

pub fn first_mismatch(rows: &[SweepRow]) -> Option<&SweepRow> {
    rows.iter().find(|r| !r.matches)
}

/// Sequence values for `s = 1..=n`, for external cross-checks.
pub fn sequence(name: &str, n: u64) -> Result<Vec<BigUint>> {
    (1..=n)
        .map(|s| match name {
            "sss-count" => count_ssd(s, 1),
            "sss-largest" => largest_size_sss(s),
            "sss-selfconj-largest" => largest_size_selfconj_sss(s),
            "ssd3-count" => count_ssd3(s, 1),
            "catalan" => cat(s, s + 1),
            _ => Err(Error::InvariantViolation(format!("unknown sequence {name}"))),
        })
        .collect()
}

pub const SEQUENCES: [&str; 5] = [
    "sss-count",
    "sss-largest",
    "sss-selfconj-largest",
    "ssd3-count",
    "catalan",
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceiling_guard() {
        match oracle_family(&[10, 11], 100) {
            Err(Error::BudgetExceeded { params, bound, ceiling }) => {
                assert_eq!(params, "(10,11)");
                assert_eq!(bound, 495);
                assert_eq!(ceiling, 100);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn modulus_one_family() {
        assert_eq!(oracle_family(&[1, 2, 3], 10).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn small_sweeps_match() {
        for rows in [
            sweep_catalan(9, 1000).unwrap(),
            sweep_average(8, 1000).unwrap(),
            sweep_consecutive_triples(5, 1000).unwrap(),
            sweep_largest_part(3, 3).unwrap(),
        ] {
            assert!(!rows.is_empty());
            assert_eq!(first_mismatch(&rows), None);
        }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::from_name(c.name()), Some(c));
        }
        assert_eq!(Check::from_name("nope"), None);
    }

    #[test]
    fn sequences() {
        let motzkin: Vec<BigUint> = [1u32, 2, 4, 9, 21, 51, 127, 323].into_iter().map(BigUint::from).collect();
        assert_eq!(sequence("sss-count", 8).unwrap(), motzkin);
        assert!(sequence("bogus", 3).is_err());
    }
}
