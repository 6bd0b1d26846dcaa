//! Largest sizes of simultaneous cores, and an explicit constructor for the
//! largest self-conjugate `(s, s+1, s+2)`-core.
//!
//! For `a = s + 1`, an `a`-core is also an `s`- and `(s+2)`-core exactly when
//! its c-coordinates satisfy the chain
//! `|c_{k+1} - c_k| <= 1` for `0 <= k < s` and `0 <= c_0 - c_s <= 2`
//! (see [`CConstraintSystem`]). Self-conjugacy adds `c_k = -c_{s-k}`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::abacus::{c_to_partition, size_from_c, CCoords};
use crate::counting::binom;
use crate::error::{Error, Result};
use crate::numtheory::require_coprime;
use crate::partition::Partition;

fn require_s(s: u64) -> Result<()> {
    if s == 0 {
        Err(Error::BelowMinimum {
            name: "s",
            min: 1,
            value: s,
        })
    } else {
        Ok(())
    }
}

fn exact_third(n: BigInt) -> BigUint {
    let (q, r) = n.div_rem(&BigInt::from(3));
    assert!(r.is_zero(), "non-exact division by 3");
    q.to_biguint().expect("sizes are non-negative")
}

/// Largest size of an `(s, s+1, s+2)`-core.
pub fn largest_size_sss(s: u64) -> Result<BigUint> {
    require_s(s)?;
    Ok(if s % 2 == 1 {
        let m = (s + 1) / 2;
        BigUint::from(m) * binom(m as i64 + 1, 3)
    } else {
        let m = s / 2;
        BigUint::from(m + 1) * binom(m as i64 + 1, 3) + binom(m as i64 + 2, 3)
    })
}

/// Largest size of a self-conjugate `(s, s+1, s+2)`-core.
pub fn largest_size_selfconj_sss(s: u64) -> Result<BigUint> {
    require_s(s)?;
    let w = s.div_ceil(4);
    let w = BigInt::from(w);
    let one = BigInt::from(1);
    let value = match 4 * s.div_ceil(4) - s {
        0 => &w * (2 * &w + &one) * (4 * &w * &w + 2 * &w + &one),
        1 => &w * &w * (8 * &w * &w - 6 * &w + &one),
        2 => &w * (2 * &w - &one) * (4 * &w * &w - 2 * &w + &one),
        _ => (&w - &one) * (2 * &w - &one) * (4 * &w * &w - 5 * &w + 3),
    };
    Ok(exact_third(value))
}

/// Gap between the unrestricted and the self-conjugate maximum, odd `s`.
pub fn selfconj_gap(s: u64) -> Result<BigUint> {
    if s % 2 == 0 {
        return Err(Error::EvenS(s));
    }
    let w = BigUint::from(s.div_ceil(4));
    let one = BigUint::from(1u32);
    Ok(if s % 4 == 3 {
        (2u32 * &w - &one) * &w * &w
    } else {
        let v = &w - &one;
        (2u32 * &w - &one) * &v * &v
    })
}

/// Largest size of an `(a, b)`-core, `(a²-1)(b²-1)/24`.
pub fn largest_size_ab(a: u64, b: u64) -> Result<BigUint> {
    require_coprime(a, b)?;
    let n = (BigUint::from(a) * a - 1u32) * (BigUint::from(b) * b - 1u32);
    let (q, r) = n.div_rem(&BigUint::from(24u32));
    assert!(r.is_zero(), "non-exact division by 24");
    Ok(q)
}

/// The c-coordinate chain describing `(s, s+1, s+2)`-cores on the
/// `(s+1)`-abacus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CConstraintSystem {
    pub s: u64,
}

impl CConstraintSystem {
    pub fn new(s: u64) -> Result<Self> {
        require_s(s)?;
        Ok(Self { s })
    }

    pub fn a(&self) -> usize {
        self.s as usize + 1
    }

    pub fn contains(&self, c: &CCoords) -> bool {
        let v = c.values();
        let s = self.s as usize;
        v.len() == s + 1
            && v.iter().sum::<i64>() == 0
            && v.windows(2).all(|w| (w[1] - w[0]).abs() <= 1)
            && (0..=2).contains(&(v[0] - v[s]))
    }
}

/// Extends a half-vector `c_0..c_{h-1}` antisymmetrically to length `a`.
fn antisymmetric(a: usize, half: &[i64]) -> CCoords {
    let mut c = vec![0i64; a];
    for (k, &v) in half.iter().enumerate() {
        c[k] = v;
        c[a - 1 - k] = -v;
    }
    if a % 2 == 1 {
        c[a / 2] = 0;
    }
    CCoords::new(a, c).expect("antisymmetric vectors sum to zero")
}

/// The two extremal candidates for odd `s`: entries "as large as possible"
/// (`c_k = min(k+1, h-1-k)`) and "as small as possible"
/// (`c_k = -min(k, h-1-k)`) on the first half `h = (s+1)/2`.
pub fn odd_case_candidates(s: u64) -> Option<(CCoords, CCoords)> {
    if s % 2 == 0 {
        return None;
    }
    let a = s as usize + 1;
    let h = (a / 2) as i64;
    let high: Vec<i64> = (0..h).map(|k| (k + 1).min(h - 1 - k)).collect();
    let low: Vec<i64> = (0..h).map(|k| -k.min(h - 1 - k)).collect();
    Some((antisymmetric(a, &high), antisymmetric(a, &low)))
}

/// The unique self-conjugate `(s, s+1, s+2)`-core of largest size, found by
/// maximizing the size over antisymmetric members of [`CConstraintSystem`].
///
/// Fails with [`Error::InvariantViolation`] if the maximum is attained twice
/// or disagrees with [`largest_size_selfconj_sss`].
pub fn construct_largest_selfconj_sss(s: u64) -> Result<(Partition, BigUint)> {
    let system = CConstraintSystem::new(s)?;
    let a = system.a();
    let a_i = a as i64;
    let h = a.div_ceil(2);
    let span = h as i64;

    // Pairing c_k with c_{a-1-k} = -c_k, the size becomes
    // Σ_{k < h} (a c_k² + (2k - a + 1) c_k). The chain forces c_0 ∈ {0, 1}
    // (from 0 <= 2 c_0 <= 2) and c_{h-1} = 0 (the middle entry for odd a;
    // |c_{h-1} - c_h| = 2|c_{h-1}| <= 1 for even a).
    let gain = |k: usize, v: i64| a_i * v * v + (2 * k as i64 - a_i + 1) * v;
    let allowed = |k: usize, v: i64| {
        (k != 0 || (0..=1).contains(&v)) && (k != h - 1 || v == 0)
    };

    #[derive(Clone, Copy)]
    struct Cell {
        best: i128,
        ways: u64,
        prev: i64,
    }
    let width = (2 * span + 1) as usize;
    let idx = |v: i64| (v + span) as usize;
    let mut layers: Vec<Vec<Option<Cell>>> = Vec::with_capacity(h);

    let mut first = vec![None; width];
    for v in -span..=span {
        if allowed(0, v) {
            first[idx(v)] = Some(Cell {
                best: gain(0, v) as i128,
                ways: 1,
                prev: 0,
            });
        }
    }
    layers.push(first);
    for k in 1..h {
        let mut layer = vec![None; width];
        for v in -span..=span {
            if !allowed(k, v) {
                continue;
            }
            let mut cell: Option<Cell> = None;
            for u in (v - 1).max(-span)..=(v + 1).min(span) {
                let Some(from) = layers[k - 1][idx(u)] else {
                    continue;
                };
                let value = from.best + gain(k, v) as i128;
                cell = match cell {
                    Some(c) if c.best > value => Some(c),
                    Some(c) if c.best == value => Some(Cell {
                        ways: c.ways.saturating_add(from.ways),
                        ..c
                    }),
                    _ => Some(Cell {
                        best: value,
                        ways: from.ways,
                        prev: u,
                    }),
                };
            }
            layer[idx(v)] = cell;
        }
        layers.push(layer);
    }

    let last = layers[h - 1][idx(0)]
        .ok_or_else(|| Error::InvariantViolation(format!("no feasible vector for s = {s}")))?;
    if last.ways != 1 {
        return Err(Error::InvariantViolation(format!(
            "{} self-conjugate maximizers for s = {s}",
            last.ways
        )));
    }
    let mut half = vec![0i64; h];
    let mut v = 0i64;
    for k in (0..h).rev() {
        half[k] = v;
        v = layers[k][idx(v)].expect("on the optimal path").prev;
    }

    let c = antisymmetric(a, &half);
    if !system.contains(&c) {
        return Err(Error::InvariantViolation(format!(
            "optimizer left the constraint system: {:?}",
            c.values()
        )));
    }
    let size = size_from_c(&c);
    if BigInt::from(size.clone()) != BigInt::from(last.best) {
        return Err(Error::InvariantViolation(format!(
            "objective {} disagrees with size {size}",
            last.best
        )));
    }
    let formula = largest_size_selfconj_sss(s)?;
    if size != formula {
        return Err(Error::InvariantViolation(format!(
            "constructed size {size} disagrees with closed form {formula} for s = {s}"
        )));
    }
    Ok((c_to_partition(&c), size))
}

/// c-coordinates of the largest self-conjugate `(s, s+1, s+2)`-core.
pub fn largest_selfconj_c(s: u64) -> Result<CCoords> {
    let (p, _) = construct_largest_selfconj_sss(s)?;
    crate::abacus::partition_to_c(&p, s as usize + 1)
}
