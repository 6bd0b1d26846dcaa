//! z-coordinates: `(a, b0, b1, ...)`-cores as lattice points.
//!
//! For coprime `a` and `b0`, an `(a, b0)`-core with x-coordinates `x` maps to
//! `z_m = x_{m b0 + k} - x_{(m+1) b0 + k} + b0/a` where `k ≡ -(b0+1)/2 (mod a)`.
//! The image is the set of `z ∈ N^a` with `Σ z_m = b0` and `a | Σ m z_m`;
//! every further modulus `b_i` adds the cyclic window bounds of a
//! [`WindowConstraint`].

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abacus::XCoords;
use crate::error::{Error, Result};
use crate::numtheory::{mod_inverse, require_coprime};

/// Non-negative integer vector with `Σ z = b0` and `a | Σ m z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawZ")]
pub struct ZCoords {
    a: usize,
    b0: u64,
    z: Vec<u64>,
}

#[derive(Deserialize)]
struct RawZ {
    a: usize,
    b0: u64,
    z: Vec<u64>,
}

impl TryFrom<RawZ> for ZCoords {
    type Error = Error;

    fn try_from(raw: RawZ) -> Result<Self> {
        ZCoords::new(raw.a, raw.b0, raw.z)
    }
}

impl ZCoords {
    pub fn new(a: usize, b0: u64, z: Vec<u64>) -> Result<Self> {
        check_pair(a, b0)?;
        if z.len() != a {
            return Err(Error::WrongLength {
                expected: a,
                got: z.len(),
            });
        }
        let sum: u64 = z.iter().sum();
        if sum != b0 {
            return Err(Error::WrongZSum { b0, got: sum });
        }
        let weighted = weighted_sum(&z);
        if weighted % a as u64 != 0 {
            return Err(Error::ZNotDivisible {
                a: a as u64,
                weighted,
            });
        }
        Ok(Self { a, b0, z })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b0(&self) -> u64 {
        self.b0
    }

    pub fn values(&self) -> &[u64] {
        &self.z
    }
}

fn check_pair(a: usize, b0: u64) -> Result<()> {
    if a < 2 {
        return Err(Error::AbacusTooSmall(a));
    }
    require_coprime(a as u64, b0)
}

/// `Σ m z_m`.
pub fn weighted_sum(z: &[u64]) -> u64 {
    z.iter().enumerate().map(|(m, &v)| m as u64 * v).sum()
}

/// The index `k ≡ -(b0+1)/2 (mod a)`; halving uses the inverse of 2 when
/// `b0 + 1` is odd (then `a` is odd, since `a` and `b0` are coprime).
pub fn base_index(a: usize, b0: u64) -> usize {
    let a_i = a as i64;
    let b = b0 as i64;
    let k = if (b + 1) % 2 == 0 {
        -(b + 1) / 2
    } else {
        let inv2 = mod_inverse(2, a_i).expect("a is odd when b0 is even");
        -(b + 1) * inv2
    };
    k.rem_euclid(a_i) as usize
}

/// z-coordinates of the `(a, b0)`-core with x-coordinates `x`.
pub fn x_to_z(x: &XCoords, b0: u64) -> Result<ZCoords> {
    let a = x.a();
    check_pair(a, b0)?;
    let a_i = a as i64;
    let b = b0 as i64;
    let k = base_index(a, b0) as i64;
    let mut z = Vec::with_capacity(a);
    for m in 0..a_i {
        let i = m * b + k;
        let diff = x.numerator(i) - x.numerator(i + b) + 2 * b;
        if diff < 0 {
            return Err(Error::NegativeZ {
                b0,
                index: m as usize,
            });
        }
        debug_assert_eq!(diff % (2 * a_i), 0);
        z.push((diff / (2 * a_i)) as u64);
    }
    ZCoords::new(a, b0, z)
        .map_err(|e| Error::InvariantViolation(format!("x_to_z produced an invalid vector: {e}")))
}

/// Inverse of [`x_to_z`].
pub fn z_to_x(z: &ZCoords) -> Result<XCoords> {
    let a = z.a;
    let a_i = a as i64;
    let b = z.b0 as i64;
    let k = base_index(a, z.b0) as i64;
    let mut num2a = vec![0i64; a];
    // 2a * x_k = b0 (a-1) - 2 Σ m z_m
    let mut current = b * (a_i - 1) - 2 * weighted_sum(&z.z) as i64;
    for m in 0..a_i {
        let idx = (m * b + k).rem_euclid(a_i) as usize;
        num2a[idx] = current;
        current = current - 2 * a_i * z.z[m as usize] as i64 + 2 * b;
    }
    debug_assert_eq!(current, num2a[k as usize]);
    XCoords::new(a, num2a)
}

/// Cyclic left shift `(z_0, ..., z_{a-1}) -> (z_1, ..., z_{a-1}, z_0)`.
pub fn rotate<T: Clone>(z: &[T]) -> Vec<T> {
    let mut out = z.to_vec();
    if !out.is_empty() {
        out.rotate_left(1);
    }
    out
}

/// Bound on every cyclic window of `len` consecutive z-entries, contributed
/// by one extra modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WindowConstraint {
    pub len: usize,
    pub bound: u64,
}

impl WindowConstraint {
    pub fn new(a: usize, len: usize, bound: u64) -> Result<Self> {
        if len == 0 || len >= a {
            return Err(Error::InvariantViolation(format!(
                "window length must lie in [1, {}], got {len}",
                a.saturating_sub(1)
            )));
        }
        Ok(Self { len, bound })
    }

    /// The constraint imposed by modulus `b`: `len` is the unique value in
    /// `[1, a-1]` with `a | b0*len + b`, and `bound = (b0*len + b)/a`.
    pub fn from_modulus(a: usize, b0: u64, b: u64) -> Result<Self> {
        check_pair(a, b0)?;
        let a_u = a as u64;
        if b % a_u == 0 {
            return Err(Error::MultipleOfA { a: a_u, b });
        }
        let a_i = a as i64;
        let inv = mod_inverse(b0 as i64, a_i).expect("coprime");
        let len = (-(b as i64) * inv).rem_euclid(a_i) as usize;
        let total = b0 * len as u64 + b;
        debug_assert_eq!(total % a_u, 0);
        Self::new(a, len, total / a_u)
    }

    pub fn satisfied_by(&self, z: &[u64]) -> bool {
        let a = z.len();
        (0..a).all(|j| (j..j + self.len).map(|m| z[m % a]).sum::<u64>() <= self.bound)
    }
}

/// Calls `visit` on every `z ∈ N^a` with `Σ z = total`, in lexicographic order.
pub fn for_each_composition(a: usize, total: u64, mut visit: impl FnMut(&[u64])) {
    fn go(z: &mut Vec<u64>, a: usize, left: u64, visit: &mut impl FnMut(&[u64])) {
        if z.len() + 1 == a {
            z.push(left);
            visit(z);
            z.pop();
            return;
        }
        for v in 0..=left {
            z.push(v);
            go(z, a, left - v, visit);
            z.pop();
        }
    }
    if a == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let mut z = Vec::with_capacity(a);
    go(&mut z, a, total, &mut visit);
}

/// All z-vectors for `(a, b0)` satisfying every window constraint, in
/// lexicographic order.
pub fn solution_set(
    a: usize,
    b0: u64,
    constraints: &[WindowConstraint],
) -> Result<Vec<ZCoords>> {
    check_pair(a, b0)?;
    for w in constraints {
        WindowConstraint::new(a, w.len, w.bound)?;
    }
    let per_first: Vec<Vec<Vec<u64>>> = (0..=b0)
        .into_par_iter()
        .map(|z0| {
            let mut found = Vec::new();
            let mut z = Vec::with_capacity(a);
            z.push(z0);
            if prefix_ok(&z, constraints) {
                search(&mut z, a, b0 - z0, 0, constraints, &mut found);
            }
            found
        })
        .collect();
    Ok(per_first
        .into_iter()
        .flatten()
        .map(|z| ZCoords { a, b0, z })
        .collect())
}

fn search(
    z: &mut Vec<u64>,
    a: usize,
    left: u64,
    weighted: u64,
    constraints: &[WindowConstraint],
    found: &mut Vec<Vec<u64>>,
) {
    let m = z.len();
    if m + 1 == a {
        z.push(left);
        let total = weighted + m as u64 * left;
        if total % a as u64 == 0
            && prefix_ok(z, constraints)
            && constraints.iter().all(|w| w.satisfied_by(z))
        {
            found.push(z.clone());
        }
        z.pop();
        return;
    }
    for v in 0..=left {
        z.push(v);
        if prefix_ok(z, constraints) {
            search(z, a, left - v, weighted + m as u64 * v, constraints, found);
        }
        z.pop();
    }
}

/// Checks the non-wrapping windows that end at the last entry of `z`.
fn prefix_ok(z: &[u64], constraints: &[WindowConstraint]) -> bool {
    let end = z.len();
    constraints.iter().all(|w| {
        end < w.len || z[end - w.len..].iter().sum::<u64>() <= w.bound
    })
}

/// `|Y1|` and `|Y2|` for a rotation-stable subset of compositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitCounts {
    /// Members with `a | Σ m z_m`.
    pub y1: u64,
    /// All members with `Σ z = b0`.
    pub y2: u64,
}

/// Counts `Y2 = {z : Σ z = b0, predicate(z)}` and `Y1 = {z ∈ Y2 : a | Σ m z_m}`,
/// checking that the predicate is rotation-stable and that `a |Y1| = |Y2|`.
pub fn orbit_count_check(
    a: usize,
    b0: u64,
    predicate: impl Fn(&[u64]) -> bool,
) -> Result<OrbitCounts> {
    let (y1, y2) = weighted_orbit_check(a, b0, predicate, |_| Ratio::from_integer(BigInt::from(1)))?;
    let to_u64 = |r: Ratio<BigInt>| -> u64 { r.to_integer().try_into().expect("count fits in u64") };
    Ok(OrbitCounts {
        y1: to_u64(y1),
        y2: to_u64(y2),
    })
}

/// Weighted form: sums of a rotation-invariant `weight` over `Y1` and `Y2`,
/// returned as `(Σ_{Y1}, Σ_{Y2})` after checking `a Σ_{Y1} = Σ_{Y2}`.
pub fn weighted_orbit_check(
    a: usize,
    b0: u64,
    predicate: impl Fn(&[u64]) -> bool,
    weight: impl Fn(&[u64]) -> Ratio<BigInt>,
) -> Result<(Ratio<BigInt>, Ratio<BigInt>)> {
    check_pair(a, b0)?;
    let mut failure = None;
    let mut y1 = Ratio::zero();
    let mut y2 = Ratio::zero();
    for_each_composition(a, b0, |z| {
        if failure.is_some() {
            return;
        }
        let inside = predicate(z);
        let turned = rotate(z);
        if inside != predicate(&turned) {
            failure = Some(Error::NotRotationStable(z.to_vec()));
            return;
        }
        if !inside {
            return;
        }
        let w = weight(z);
        if w != weight(&turned) {
            failure = Some(Error::NotRotationInvariant(z.to_vec()));
            return;
        }
        if weighted_sum(z) % a as u64 == 0 {
            y1 += &w;
        }
        y2 += w;
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if &y1 * BigInt::from(a) != y2 {
        return Err(Error::InvariantViolation(format!(
            "orbit identity failed for a = {a}, b0 = {b0}: {y1} * {a} != {y2}"
        )));
    }
    Ok((y1, y2))
}
