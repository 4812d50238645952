//! Elementary number theory on machine integers: divisors, the Möbius
//! function, Euler's totient and Ramanujan sums.
//!
//! Factorisation is by trial division, which is plenty for the window sizes
//! this crate works with.

use num_integer::Integer;

use crate::error::{Error, Result};

fn require_positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(format!("{what} requires a positive argument")))
    } else {
        Ok(())
    }
}

/// Prime factorisation as `(prime, exponent)` pairs in ascending order.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    require_positive(n, "factorize")?;
    let mut rest = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    require_positive(n, "divisors")?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// The number-theoretic Möbius function.
pub fn mobius(n: u64) -> Result<i64> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Euler's totient.
pub fn totient(n: u64) -> Result<u64> {
    let factors = factorize(n)?;
    Ok(factors.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// Ramanujan's sum: the sum of `ω^j` over all primitive `d`-th roots of
/// unity `ω`.
///
/// Computed exactly as `Σ_{e | gcd(j mod d, d)} e·μ(d/e)`, with
/// `gcd(0, d) = d`.
pub fn ramanujan_sum(j: i64, d: u64) -> Result<i64> {
    require_positive(d, "ramanujan_sum")?;
    let r = j.rem_euclid(d as i64) as u64;
    let g = if r == 0 { d } else { r.gcd(&d) };
    let mut total = 0i64;
    for e in divisors(g)? {
        total += e as i64 * mobius(d / e)?;
    }
    Ok(total)
}
