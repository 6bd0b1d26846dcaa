//! Brute-force ground truth: partitions enumerated row by row and filtered by
//! hook lengths only. Nothing here depends on the coordinate machinery.
//!
//! While a partition is built top-down, the cells in columns beyond the newest
//! part can no longer gain leg length, so their hooks are final. A prefix is
//! dropped as soon as one of those final hooks is a multiple of a modulus.
//! Lowering the next part only finalizes more cells, so the candidates for the
//! next part are tried from largest to smallest and the loop stops at the
//! first failure.

use std::io::{self, Write};

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{CoreSpec, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Justification {
    Explicit,
    /// Largest size of an `(a, b)`-core for a coprime pair in the spec.
    TripathiBound,
}

/// Inclusive size bound for an enumeration, with the reason it is complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_size: u64,
    pub justification: Justification,
}

impl EnumerationBudget {
    pub fn explicit(max_size: u64) -> Self {
        Self {
            max_size,
            justification: Justification::Explicit,
        }
    }

    /// Smallest `(a²-1)(b²-1)/24` over the coprime pairs of `spec`. Every core
    /// in the family has at most this size.
    pub fn tripathi(spec: &CoreSpec) -> Result<Self> {
        spec.coprime_pairs()
            .into_iter()
            .map(|(a, b)| tripathi_bound(a, b))
            .min()
            .map(|max_size| Self {
                max_size,
                justification: Justification::TripathiBound,
            })
            .ok_or(Error::PossiblyInfinite)
    }
}

/// `(a²-1)(b²-1)/24`; only meaningful for coprime `a`, `b`.
pub fn tripathi_bound(a: u64, b: u64) -> u64 {
    (a * a - 1) * (b * b - 1) / 24
}

/// Does appending `next` (0 closes the partition) keep every newly final hook
/// off the multiples of the moduli?
fn extension_ok(parts: &[u64], next: u64, moduli: &[u64]) -> bool {
    let k = parts.len() as u64;
    let last = *parts.last().expect("non-empty prefix");
    if next >= last {
        return true;
    }
    parts.iter().enumerate().all(|(r, &row)| {
        // hooks of row r in columns next+1..=last
        let lo = row - last + k - r as u64;
        let hi = row - next - 1 + k - r as u64;
        moduli.iter().all(|&t| hi / t == (lo - 1) / t)
    })
}

struct Search<'a> {
    moduli: &'a [u64],
    parts: Vec<u64>,
    found: Vec<Partition>,
}

impl Search<'_> {
    fn run(&mut self, remaining: u64) {
        let last = *self.parts.last().expect("non-empty prefix");
        let mut closed_ok = true;
        for next in (1..=last.min(remaining)).rev() {
            if !extension_ok(&self.parts, next, self.moduli) {
                closed_ok = false;
                break;
            }
            self.parts.push(next);
            self.run(remaining - next);
            self.parts.pop();
        }
        if closed_ok && extension_ok(&self.parts, 0, self.moduli) {
            self.found.push(Partition::from_sorted(self.parts.clone()));
        }
    }
}

fn search_from(moduli: &[u64], first: u64, max_size: u64) -> Vec<Partition> {
    let mut search = Search {
        moduli,
        parts: vec![first],
        found: Vec::new(),
    };
    search.run(max_size - first);
    search.found
}

/// All partitions of size at most `budget.max_size` satisfying `spec`, sorted
/// by size and then lexicographically.
pub fn enumerate_cores(spec: &CoreSpec, budget: &EnumerationBudget) -> Result<Vec<Partition>> {
    let moduli = spec.moduli();
    let mut all: Vec<Partition> = (1..=budget.max_size)
        .into_par_iter()
        .flat_map_iter(|first| search_from(moduli, first, budget.max_size))
        .collect();
    all.push(Partition::empty());
    all.sort();
    Ok(all)
}

/// [`enumerate_cores`] with the Tripathi budget; fails for families without a
/// coprime pair, which may be infinite.
pub fn enumerate_all_cores(spec: &CoreSpec) -> Result<Vec<Partition>> {
    enumerate_cores(spec, &EnumerationBudget::tripathi(spec)?)
}

/// Reference enumeration: every partition of every size up to `max_size`,
/// filtered by [`Partition::satisfies`]. Exponential; for tiny bounds only.
pub fn enumerate_by_full_sweep(spec: &CoreSpec, max_size: u64) -> Vec<Partition> {
    fn go(n: u64, cap: u64, parts: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_sorted(parts.clone()));
            return;
        }
        for p in (1..=n.min(cap)).rev() {
            parts.push(p);
            go(n - p, p, parts, out);
            parts.pop();
        }
    }
    let mut all = Vec::new();
    for n in 0..=max_size {
        go(n, n, &mut Vec::new(), &mut all);
    }
    let mut cores: Vec<Partition> = all.into_iter().filter(|p| p.satisfies(spec)).collect();
    cores.sort();
    cores
}

/// Aggregates over an enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleStats {
    pub count: u64,
    pub total_size: BigUint,
    pub max_size: u64,
    pub maximizers: Vec<Partition>,
    pub self_conjugate: Vec<Partition>,
}

impl OracleStats {
    pub fn from_cores(cores: &[Partition]) -> Self {
        let max_size = cores.iter().map(Partition::size).max().unwrap_or(0);
        Self {
            count: cores.len() as u64,
            total_size: cores.iter().map(|p| BigUint::from(p.size())).sum(),
            max_size,
            maximizers: cores.iter().filter(|p| p.size() == max_size).cloned().collect(),
            self_conjugate: cores.iter().filter(|p| p.is_self_conjugate()).cloned().collect(),
        }
    }

    /// Exact mean size; `None` for an empty enumeration.
    pub fn mean_size(&self) -> Option<Ratio<BigInt>> {
        (self.count > 0).then(|| {
            Ratio::new(
                BigInt::from(self.total_size.clone()),
                BigInt::from(self.count),
            )
        })
    }

    /// Largest self-conjugate size and the partitions attaining it.
    pub fn self_conjugate_max(&self) -> (u64, Vec<Partition>) {
        let best = self.self_conjugate.iter().map(Partition::size).max().unwrap_or(0);
        let who = self
            .self_conjugate
            .iter()
            .filter(|p| p.size() == best)
            .cloned()
            .collect();
        (best, who)
    }
}

pub fn oracle_stats(spec: &CoreSpec, budget: &EnumerationBudget) -> Result<OracleStats> {
    Ok(OracleStats::from_cores(&enumerate_cores(spec, budget)?))
}

/// All `a`-cores with largest part exactly `x`, optionally restricted to a
/// second largest part `y` or to exactly `i` parts equal to `x`.
///
/// Parts are at most `x` and each value occurs fewer than `a` times, so the
/// search is bounded by size `x²(a-1)`.
pub fn enumerate_cores_by_largest_part(
    a: u64,
    x: u64,
    y: Option<u64>,
    i: Option<usize>,
) -> Result<Vec<Partition>> {
    if a < 2 {
        return Err(Error::BelowMinimum {
            name: "a",
            min: 2,
            value: a,
        });
    }
    if x == 0 {
        let empty_ok = y.is_none() && i.is_none();
        return Ok(if empty_ok { vec![Partition::empty()] } else { Vec::new() });
    }
    let bound = x * x * (a - 1);
    let mut found = search_from(&[a], x, bound);
    found.retain(|p| {
        let second_ok = y.map_or(true, |y| p.parts().get(1) == Some(&y));
        let mult_ok = i.map_or(true, |i| p.parts().iter().filter(|&&v| v == x).count() == i);
        second_ok && mult_ok
    });
    found.sort();
    Ok(found)
}

/// One JSON array per line.
pub fn write_json_lines(mut w: impl Write, cores: &[Partition]) -> io::Result<()> {
    for p in cores {
        let parts: Vec<String> = p.parts().iter().map(u64::to_string).collect();
        writeln!(w, "[{}]", parts.join(","))?;
    }
    Ok(())
}

/// `size,parts,self_conjugate` with the parts space-separated.
pub fn write_csv(mut w: impl Write, cores: &[Partition]) -> io::Result<()> {
    writeln!(w, "size,parts,self_conjugate")?;
    for p in cores {
        let parts: Vec<String> = p.parts().iter().map(u64::to_string).collect();
        writeln!(w, "{},{},{}", p.size(), parts.join(" "), p.is_self_conjugate())?;
    }
    Ok(())
}
