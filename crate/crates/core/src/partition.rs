//! Integer partitions, hook lengths and direct core tests.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::coprime;

/// A partition stored as its non-increasing list of positive parts.
///
/// Serializes as the bare part list, e.g. `[9,6,3,1,1,1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
    size: u64,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        let ordered = parts.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || parts.last() == Some(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from arbitrary positive parts, sorting them.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest_part() as usize;
        let mut conj = vec![0u64; cols];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self {
            parts: conj,
            size: self.size,
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate().parts == self.parts
    }

    /// Hook length of the cell in row `row` and column `col`, both 1-based.
    pub fn hook_length(&self, row: usize, col: u64) -> Result<u64> {
        if row == 0 || col == 0 || row > self.parts.len() || col > self.parts[row - 1] {
            return Err(Error::NotACell { row, col });
        }
        let arm = self.parts[row - 1] - col;
        // rows are non-increasing, so the rows reaching column `col` form a prefix
        let height = self.parts.partition_point(|&p| p >= col);
        let leg = (height - row) as u64;
        Ok(arm + leg + 1)
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size as usize);
        for (r, &p) in self.parts.iter().enumerate() {
            for c in 0..p as usize {
                let arm = p - c as u64 - 1;
                let leg = conj.parts[c] - r as u64 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// True iff no hook length is a multiple of `t`.
    pub fn is_t_core(&self, t: u64) -> Result<bool> {
        if t == 0 {
            return Err(Error::NonPositiveModulus(t));
        }
        Ok(self.hook_lengths().iter().all(|h| h % t != 0))
    }

    pub fn satisfies(&self, spec: &CoreSpec) -> bool {
        let hooks = self.hook_lengths();
        spec.moduli
            .iter()
            .all(|&t| hooks.iter().all(|h| h % t != 0))
    }
}

impl Ord for Partition {
    /// By size, then lexicographically by parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses comma-separated parts, with optional surrounding brackets or
/// parentheses. An empty string is the empty partition.
impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|e| format!("bad part {t:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Partition::new(parts).map_err(|e| e.to_string())
    }
}

pub fn hook_length(p: &Partition, row: usize, col: u64) -> Result<u64> {
    p.hook_length(row, col)
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn is_t_core(p: &Partition, t: u64) -> Result<bool> {
    p.is_t_core(t)
}

pub fn satisfies_spec(p: &Partition, spec: &CoreSpec) -> bool {
    p.satisfies(spec)
}

/// A set of moduli, each at least 2, describing a simultaneous-core condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct CoreSpec {
    moduli: Vec<u64>,
    has_coprime_pair: bool,
}

impl CoreSpec {
    pub fn new(moduli: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut moduli: Vec<u64> = moduli.into_iter().collect();
        if moduli.is_empty() {
            return Err(Error::EmptyModuli);
        }
        if let Some(&bad) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::ModulusTooSmall(bad));
        }
        moduli.sort_unstable();
        moduli.dedup();
        let has_coprime_pair = coprime_pairs(&moduli).next().is_some();
        Ok(Self {
            moduli,
            has_coprime_pair,
        })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn has_coprime_pair(&self) -> bool {
        self.has_coprime_pair
    }

    /// All pairs `(a, b)` with `a < b` and `gcd(a, b) = 1`.
    pub fn coprime_pairs(&self) -> Vec<(u64, u64)> {
        coprime_pairs(&self.moduli).collect()
    }

    /// Drops every modulus that is a multiple of another one; an `a`-core is
    /// automatically a `ka`-core, so the set of cores is unchanged.
    pub fn reduced(&self) -> CoreSpec {
        let moduli: Vec<u64> = self
            .moduli
            .iter()
            .copied()
            .filter(|&m| !self.moduli.iter().any(|&d| d < m && m % d == 0))
            .collect();
        CoreSpec::new(moduli).expect("reduction keeps at least the smallest modulus")
    }
}

fn coprime_pairs(moduli: &[u64]) -> impl Iterator<Item = (u64, u64)> + '_ {
    moduli.iter().enumerate().flat_map(move |(i, &a)| {
        moduli[i + 1..]
            .iter()
            .filter(move |&&b| coprime(a, b))
            .map(move |&b| (a, b))
    })
}

impl TryFrom<Vec<u64>> for CoreSpec {
    type Error = Error;

    fn try_from(moduli: Vec<u64>) -> Result<Self> {
        Self::new(moduli)
    }
}

impl From<CoreSpec> for Vec<u64> {
    fn from(spec: CoreSpec) -> Self {
        spec.moduli
    }
}

impl fmt::Display for CoreSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined: Vec<String> = self.moduli.iter().map(u64::to_string).collect();
        write!(f, "({})", joined.join(","))
    }
}
