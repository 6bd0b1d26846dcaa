//! The tilted `a`-abacus and its coordinates.
//!
//! Positions on the abacus are the integers; position `n` lives in row
//! `n mod a`, and the line `L` separates positions `< 0` from positions
//! `>= 0`. Black beads are NE steps of the partition boundary, white beads SE
//! steps. For a partition `(λ_1, ..., λ_n)` the black beads sit at
//! `j - 1 - λ_j` for `j >= 1` (with `λ_j = 0` past the last part), so a part is
//! the number of white beads to the right of its black bead and the number of
//! black beads left of `L` equals the number of white beads right of `L`.
//!
//! An `a`-core is exactly a partition whose rows are all "white then black".
//! Row `i` is then described by its first black bead, which sits at position
//! `i + a*c_i`. With this convention `(9,6,3,1,1,1)` has c-coordinates
//! `(1,2,0,-3)` for `a = 4`.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Integer vector of length `a` with zero sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawC")]
pub struct CCoords {
    a: usize,
    c: Vec<i64>,
}

#[derive(Deserialize)]
struct RawC {
    a: usize,
    c: Vec<i64>,
}

impl TryFrom<RawC> for CCoords {
    type Error = Error;

    fn try_from(raw: RawC) -> Result<Self> {
        CCoords::new(raw.a, raw.c)
    }
}

impl CCoords {
    pub fn new(a: usize, c: Vec<i64>) -> Result<Self> {
        check_modulus(a)?;
        if c.len() != a {
            return Err(Error::WrongLength {
                expected: a,
                got: c.len(),
            });
        }
        let sum: i64 = c.iter().sum();
        if sum != 0 {
            return Err(Error::NonZeroSum(sum));
        }
        Ok(Self { a, c })
    }

    pub fn zero(a: usize) -> Result<Self> {
        Self::new(a, vec![0; a])
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn values(&self) -> &[i64] {
        &self.c
    }

    /// `c_i` with the index taken modulo `a`.
    pub fn get(&self, i: i64) -> i64 {
        self.c[i.rem_euclid(self.a as i64) as usize]
    }
}

/// Rational vector `x_i = c_i + i/a - (a-1)/(2a)`, stored as numerators over
/// the fixed denominator `2a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawX")]
pub struct XCoords {
    a: usize,
    num2a: Vec<i64>,
}

#[derive(Deserialize)]
struct RawX {
    a: usize,
    num2a: Vec<i64>,
}

impl TryFrom<RawX> for XCoords {
    type Error = Error;

    fn try_from(raw: RawX) -> Result<Self> {
        XCoords::new(raw.a, raw.num2a)
    }
}

impl XCoords {
    /// Validates the zero sum and the fixed fractional parts.
    pub fn new(a: usize, num2a: Vec<i64>) -> Result<Self> {
        check_modulus(a)?;
        if num2a.len() != a {
            return Err(Error::WrongLength {
                expected: a,
                got: num2a.len(),
            });
        }
        let sum: i64 = num2a.iter().sum();
        if sum != 0 {
            return Err(Error::NonZeroXSum(sum));
        }
        let two_a = 2 * a as i64;
        for (i, &n) in num2a.iter().enumerate() {
            if (n - offset2a(a, i)).rem_euclid(two_a) != 0 {
                return Err(Error::BadFractionalPart { index: i, a });
            }
        }
        Ok(Self { a, num2a })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    /// Numerators over `2a`.
    pub fn numerators(&self) -> &[i64] {
        &self.num2a
    }

    /// Numerator over `2a` of `x_i`, index taken modulo `a`.
    pub fn numerator(&self, i: i64) -> i64 {
        self.num2a[i.rem_euclid(self.a as i64) as usize]
    }

    pub fn values(&self) -> Vec<Ratio<i64>> {
        let two_a = 2 * self.a as i64;
        self.num2a.iter().map(|&n| Ratio::new(n, two_a)).collect()
    }
}

fn check_modulus(a: usize) -> Result<()> {
    if a < 2 {
        Err(Error::AbacusTooSmall(a))
    } else {
        Ok(())
    }
}

/// `2a * (i/a - (a-1)/(2a))`.
fn offset2a(a: usize, i: usize) -> i64 {
    2 * i as i64 - a as i64 + 1
}

/// c-coordinates of an `a`-core.
pub fn partition_to_c(p: &Partition, a: usize) -> Result<CCoords> {
    check_modulus(a)?;
    let n = p.len() as i64;
    let lo = -(p.largest_part() as i64);
    // black[k] records whether position lo + k is black, for positions in [lo, n)
    let mut black = vec![false; (n - lo) as usize];
    for (j, &part) in p.parts().iter().enumerate() {
        black[(j as i64 - part as i64 - lo) as usize] = true;
    }
    let is_black = |pos: i64| pos >= n || black[(pos - lo) as usize];

    let a_i = a as i64;
    let mut c = Vec::with_capacity(a);
    for row in 0..a_i {
        // first position >= lo in this row
        let start = lo + (row - lo).rem_euclid(a_i);
        let mut pos = start;
        while !is_black(pos) {
            pos += a_i;
        }
        let first = pos;
        while pos < n {
            if !is_black(pos) {
                return Err(Error::NotACore { a });
            }
            pos += a_i;
        }
        c.push((first - row).div_euclid(a_i));
    }
    debug_assert_eq!(c.iter().sum::<i64>(), 0);
    Ok(CCoords { a, c })
}

/// The `a`-core whose abacus has c-coordinates `c`.
pub fn c_to_partition(c: &CCoords) -> Partition {
    let a = c.a as i64;
    let first: Vec<i64> = (0..a).map(|i| i + a * c.c[i as usize]).collect();
    let lo = *first.iter().min().expect("a >= 2");
    let hi = *first.iter().max().expect("a >= 2");
    let mut parts = Vec::new();
    let mut whites = 0u64;
    for pos in (lo..hi).rev() {
        if pos >= first[pos.rem_euclid(a) as usize] {
            if whites > 0 {
                parts.push(whites);
            }
        } else {
            whites += 1;
        }
    }
    parts.reverse();
    Partition::from_sorted(parts)
}

pub fn c_to_x(c: &CCoords) -> XCoords {
    let two_a = 2 * c.a as i64;
    let num2a = c
        .c
        .iter()
        .enumerate()
        .map(|(i, &ci)| two_a * ci + offset2a(c.a, i))
        .collect();
    XCoords { a: c.a, num2a }
}

pub fn x_to_c(x: &XCoords) -> CCoords {
    let two_a = 2 * x.a as i64;
    let c = x
        .num2a
        .iter()
        .enumerate()
        .map(|(i, &n)| (n - offset2a(x.a, i)) / two_a)
        .collect();
    CCoords { a: x.a, c }
}

/// `ψ_a`: the x-coordinates of an `a`-core.
pub fn partition_to_x(p: &Partition, a: usize) -> Result<XCoords> {
    partition_to_c(p, a).map(|c| c_to_x(&c))
}

pub fn x_to_partition(x: &XCoords) -> Partition {
    c_to_partition(&x_to_c(x))
}

/// Size of the partition encoded by `c`: `Σ (a/2 c_k² + k c_k)`.
pub fn size_from_c(c: &CCoords) -> BigUint {
    let a = BigInt::from(c.a);
    let mut twice = BigInt::from(0);
    for (k, &ck) in c.c.iter().enumerate() {
        let ck = BigInt::from(ck);
        twice += &a * &ck * &ck + BigInt::from(2 * k) * &ck;
    }
    debug_assert!(!twice.is_negative());
    let (q, r) = (twice.magnitude() / 2u32, twice.magnitude() % 2u32);
    debug_assert_eq!(r, BigUint::from(0u32));
    q
}

/// Self-conjugacy read off the coordinates: `c_i = -c_{a-1-i}`.
pub fn is_selfconjugate_c(c: &CCoords) -> bool {
    let a = c.a;
    (0..a).all(|i| c.c[i] == -c.c[a - 1 - i])
}

/// Whether the core encoded by `c` is also a `b`-core:
/// `c_{(i+b) mod a} - c_i <= floor((i+b)/a)` for every row `i`.
pub fn is_bcore_c(c: &CCoords, b: u64) -> bool {
    let a = c.a as i64;
    let b = b as i64;
    (0..a).all(|i| c.get(i + b) - c.get(i) <= (i + b).div_euclid(a))
}

/// Same criterion in x-coordinates: `x_{(i+b) mod a} - x_i <= b/a`.
pub fn is_bcore_x(x: &XCoords, b: u64) -> bool {
    let a = x.a as i64;
    let b = b as i64;
    // both sides scaled by 2a
    (0..a).all(|i| x.numerator(i + b) - x.numerator(i) <= 2 * b)
}
