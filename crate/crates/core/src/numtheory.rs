//! Small integer helpers shared by the coordinate and counting modules.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn coprime(a: u64, b: u64) -> bool {
    a.gcd(&b) == 1
}

pub(crate) fn require_coprime(a: u64, b: u64) -> Result<()> {
    if coprime(a, b) {
        Ok(())
    } else {
        Err(Error::NotCoprime { a, b })
    }
}

/// Inverse of `x` modulo `m`, if it exists. Returns a value in `[0, m)`.
pub fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let g = x.rem_euclid(m).extended_gcd(&m);
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m))
}
