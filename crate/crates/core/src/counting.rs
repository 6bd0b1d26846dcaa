//! Closed-form counts of core partitions.
//!
//! Binomials follow the zero-extension convention: `C(n, k) = 0` whenever
//! `n < 0`, `k < 0` or `k > n`. Divisions by `a` (or `a + b`, `s + d`) are
//! exact and asserted.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numtheory::require_coprime;
use crate::partition::CoreSpec;
use crate::zcoords::{orbit_count_check, solution_set, WindowConstraint};

pub fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn exact_div(n: BigUint, d: u64) -> BigUint {
    let (q, r) = n.div_rem(&BigUint::from(d));
    assert!(r.is_zero(), "non-exact division by {d}");
    q
}

fn at_least(name: &'static str, min: u64, value: u64) -> Result<()> {
    if value < min {
        Err(Error::BelowMinimum { name, min, value })
    } else {
        Ok(())
    }
}

/// Number of `z ∈ Z^a` with `z_i >= s_i` and `Σ z_i = b`, where `a = s.len()`.
pub fn count_lower_bounded_solutions(b: i64, s: &[i64]) -> BigUint {
    let a = s.len() as i64;
    let floor: i64 = s.iter().sum();
    binom(b + a - floor - 1, a - 1)
}

/// `Cat_{a,b} = C(a+b, a)/(a+b)`, the number of `(a, b)`-cores.
pub fn cat(a: u64, b: u64) -> Result<BigUint> {
    require_coprime(a, b)?;
    Ok(exact_div(binom((a + b) as i64, a as i64), a + b))
}

/// `a`-cores whose largest part is `x`, occurring exactly `i` times.
pub fn count_largest_exact(a: u64, x: u64, i: u64) -> Result<BigUint> {
    at_least("a", 2, a)?;
    at_least("x", 1, x)?;
    at_least("i", 1, i)?;
    let (a, x, i) = (a as i64, x as i64, i as i64);
    Ok(binom(x + a - 2 - i, a - 1 - i))
}

/// `a`-cores with largest part `x`.
pub fn count_largest(a: u64, x: u64) -> Result<BigUint> {
    at_least("a", 2, a)?;
    let (a, x) = (a as i64, x as i64);
    Ok(binom(x + a - 2, x))
}

/// `a`-cores with largest part `x` and second largest part `y` (so at least
/// two parts).
pub fn count_largest_second(a: u64, x: u64, y: u64) -> Result<BigUint> {
    at_least("a", 2, a)?;
    at_least("x", 1, x)?;
    if y == 0 || y > x {
        return Err(Error::SecondPartOutOfRange { x, y });
    }
    let gap = x - y;
    let (a_i, y_i) = (a as i64, y as i64);
    Ok(match gap.cmp(&(a - 1)) {
        std::cmp::Ordering::Less => binom(y_i + a_i - 3, y_i),
        std::cmp::Ordering::Equal => binom(y_i + a_i - 2, y_i),
        std::cmp::Ordering::Greater => BigUint::zero(),
    })
}

/// Window constraints for the extra moduli of an `(a, b0, rest...)`-core.
pub fn derived_constraints(a: u64, b0: u64, rest: &[u64]) -> Result<Vec<WindowConstraint>> {
    rest.iter()
        .map(|&b| WindowConstraint::from_modulus(a as usize, b0, b))
        .collect()
}

/// Number of `(a, b0, rest...)`-cores, counted as lattice points.
///
/// Debug builds also count the full rotation-stable family and check that it
/// is exactly `a` times larger.
pub fn count_via_lattice(a: u64, b0: u64, rest: &[u64]) -> Result<BigUint> {
    at_least("a", 2, a)?;
    require_coprime(a, b0)?;
    let constraints = derived_constraints(a, b0, rest)?;
    let direct = solution_set(a as usize, b0, &constraints)?.len() as u64;
    if cfg!(debug_assertions) {
        let orbits = orbit_count_check(a as usize, b0, |z| {
            constraints.iter().all(|w| w.satisfied_by(z))
        })?;
        if orbits.y1 != direct || orbits.y2 != a * direct {
            return Err(Error::InvariantViolation(format!(
                "lattice count {direct} disagrees with orbit counts {orbits:?}"
            )));
        }
    }
    Ok(BigUint::from(direct))
}

/// Number of cores for an arbitrary spec with a coprime pair, via the
/// lattice-point count. Redundant multiples are dropped first; the pair
/// `(a, b0)` with the fewest compositions of `b0` into `a` parts is used.
pub fn count_cores(spec: &CoreSpec) -> Result<BigUint> {
    let spec = spec.reduced();
    let pairs = spec.coprime_pairs();
    let cost = |a: u64, b0: u64| binom((a + b0 - 1) as i64, (a - 1) as i64);
    let (a, b0) = pairs
        .into_iter()
        .flat_map(|(a, b)| [(a, b), (b, a)])
        .min_by_key(|&(a, b0)| (cost(a, b0), a))
        .ok_or(Error::PossiblyInfinite)?;
    let rest: Vec<u64> = spec
        .moduli()
        .iter()
        .copied()
        .filter(|&m| m != a && m != b0)
        .collect();
    count_via_lattice(a, b0, &rest)
}

/// Number of `(a, b0, b1)`-cores when `a | b0 + b1`, summing over how many
/// z-entries take each value `1..=m` with `m = (b0 + b1)/a`.
pub fn count_firstcor(a: u64, b0: u64, b1: u64) -> Result<BigUint> {
    at_least("a", 2, a)?;
    require_coprime(a, b0)?;
    if (b0 + b1) % a != 0 {
        return Err(Error::NotDivisible {
            a,
            what: "b0+b1",
            value: b0 + b1,
        });
    }
    let m = (b0 + b1) / a;

    // value: the entry size being placed; free: slots not yet assigned
    fn go(value: u64, left: u64, free: u64) -> BigUint {
        if value == 0 {
            return if left == 0 { BigUint::one() } else { BigUint::zero() };
        }
        let mut total = BigUint::zero();
        for count in 0..=(left / value).min(free) {
            let rest = go(value - 1, left - count * value, free - count);
            if !rest.is_zero() {
                total += binom(free as i64, count as i64) * rest;
            }
        }
        total
    }

    Ok(exact_div(go(m.min(b0), b0, a), a))
}

/// Number of `(s, s+d, s+2d)`-cores.
pub fn count_ssd(s: u64, d: u64) -> Result<BigUint> {
    at_least("s", 1, s)?;
    require_coprime(s, d)?;
    let n = (s + d) as i64;
    let s_i = s as i64;
    let total: BigUint = (0..=s_i / 2)
        .map(|y2| binom(n, y2) * binom(n - y2, s_i - 2 * y2))
        .sum();
    Ok(exact_div(total, s + d))
}

/// Number of `(s, s+d, s+2d, s+3d)`-cores.
pub fn count_ssd3(s: u64, d: u64) -> Result<BigUint> {
    at_least("s", 1, s)?;
    require_coprime(s, d)?;
    let n = (s + d) as i64;
    let s_i = s as i64;
    let total: BigUint = (0..=s_i / 2)
        .map(|k| (binom(n - k - 1, k - 1) + binom(n - k, k)) * binom(n - k, s_i - 2 * k))
        .sum();
    Ok(exact_div(total, s + d))
}

/// Number of `(a, b, c)`-cores for `3 < a < b` coprime, `a | 2b + c` and
/// `c > ab/2 - 2b`.
pub fn count_abc(a: u64, b: u64, c: u64) -> Result<BigUint> {
    if a <= 3 {
        return Err(Error::ATooSmall(a));
    }
    if a >= b {
        return Err(Error::ANotLessThanB { a, b });
    }
    require_coprime(a, b)?;
    if (2 * b + c) % a != 0 {
        return Err(Error::NotDivisible {
            a,
            what: "2b+c",
            value: 2 * b + c,
        });
    }
    // c > ab/2 - 2b, doubled to stay in integers
    if 2 * c + 4 * b <= a * b {
        return Err(Error::CTooSmall { a, b, c });
    }
    let m = ((c + 2 * b) / a) as i64;
    let (a_i, b_i) = (a as i64, b as i64);
    let tail = b_i + a_i - m - 3;
    let value = BigInt::from(cat(a, b)?) - BigInt::from(m + 1) * BigInt::from(binom(tail, a_i - 2))
        + BigInt::from(binom(tail, a_i - 1));
    value.to_biguint().ok_or_else(|| {
        Error::InvariantViolation(format!("negative count {value} for ({a},{b},{c})"))
    })
}

/// `(a+b+1)(a-1)(b-1)/24`, the mean size of an `(a, b)`-core.
pub fn average_size_formula(a: u64, b: u64) -> Result<Ratio<BigInt>> {
    require_coprime(a, b)?;
    let num = BigInt::from(a + b + 1) * BigInt::from(a.saturating_sub(1)) * BigInt::from(b.saturating_sub(1));
    Ok(Ratio::new(num, BigInt::from(24)))
}
