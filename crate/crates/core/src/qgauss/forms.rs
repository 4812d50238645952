//! Closed-form q-analogues and the families built from them.

use crate::error::Result;
use crate::qpoly::{eps, q_binomial, q_exp, q_int, IntPolynomial};
use crate::semigroup::{Component, SemigroupInstance, Window};

use super::PolyFamily;

/// `[exp_λ(m)]_q` extended by `1` at `m = 0` and `0` for `m < 0`.
pub fn exp_or_one(lambda: i64, m: i64) -> Result<IntPolynomial> {
    match m {
        0 => Ok(IntPolynomial::one()),
        m if m < 0 => Ok(IntPolynomial::zero()),
        m => q_exp(lambda, m as u64),
    }
}

/// `Σ_{k ≤ n/2} ([n]_q / [n-k]_q) qbinom(n-k, k)`, a q-analogue of the
/// Lucas numbers.
pub fn lucas(n: u64) -> Result<IntPolynomial> {
    let n = n as i64;
    let mut total = IntPolynomial::zero();
    for k in 0..=n / 2 {
        total += &(&q_int(n as u64) * &q_binomial(n - k, k)).exact_div(&q_int((n - k) as u64))?;
    }
    Ok(total)
}

/// `[exp_2(n)]_q + 2 ε_n(q)`, for `c_2 = 3, c_3 = 2`.
pub fn two_power_plus_sign(n: u64) -> Result<IntPolynomial> {
    Ok(q_exp(2, n)? + eps(n)?.scale(&2.into()))
}

/// `qbinom(n, (n-k)/2)` when `n - k` is even, else `0`: festoons of `k`
/// beads for `D(t) = 1 + t²`.
pub fn riordan_even(n: i64, k: i64) -> IntPolynomial {
    if (n - k).rem_euclid(2) == 0 {
        q_binomial(n, (n - k) / 2)
    } else {
        IntPolynomial::zero()
    }
}

/// `qbinom(2n-k-1, n-k)`: festoons of `k` beads for `D(t) = 1/(1-t)`.
pub fn riordan_geometric(n: i64, k: i64) -> IntPolynomial {
    q_binomial(2 * n - k - 1, n - k)
}

/// `Σ_{m=0}^{n-k-1} qbinom(n, m+k) qbinom(n-k-1, m) [exp_2(m)]_q`: improper
/// cycle tubings with `k` free vertices. At `k = n` the sum is empty, but
/// the empty tubing is counted, so the value there is `1`.
pub fn strict_tubings(n: i64, k: i64) -> Result<IntPolynomial> {
    if k == n {
        return Ok(IntPolynomial::one());
    }
    let mut total = IntPolynomial::zero();
    for m in 0..n - k {
        total += &(&(&q_binomial(n, m + k) * &q_binomial(n - k - 1, m)) * &exp_or_one(2, m)?);
    }
    Ok(total)
}

/// `qbinom(n+k-1, k) qbinom(n-1, k)`: improper cycle tubings with `k` tubes.
pub fn cycle_tubings(n: i64, k: i64) -> IntPolynomial {
    &q_binomial(n + k - 1, k) * &q_binomial(n - 1, k)
}

/// `Σ_{k=0}^{n-1} qbinom(n+k-1, k) qbinom(n-1, k)`: all improper cycle
/// tubings.
pub fn all_cycle_tubings(n: i64) -> IntPolynomial {
    (0..n).map(|k| cycle_tubings(n, k)).sum()
}

/// Cycle tubings with `k` tubes, each coloured in one of `λ` ways.
pub fn coloured_cycle_tubings(n: i64, k: i64, lambda: i64) -> Result<IntPolynomial> {
    Ok(&cycle_tubings(n, k) * &exp_or_one(lambda, k)?)
}

fn int_chain() -> SemigroupInstance {
    SemigroupInstance::chain(SemigroupInstance::PositiveInts, &[Component::Ints])
}

/// A family on `ℤ≥1[ℤ]` from a closed form in `(n, k)`.
pub fn pair_family(
    max_n: u64,
    lo: i64,
    hi: i64,
    mut f: impl FnMut(i64, i64) -> Result<IntPolynomial>,
) -> Result<PolyFamily> {
    let w = Window::rank(max_n).with_extra_bounds(lo, hi);
    PolyFamily::try_from_fn(int_chain(), w, |s| {
        f(s.as_int().expect("chain base") as i64, s.extras()[0])
    })
}

/// `f_{n,k} = qbinom(n, k)` on `ℤ≥1[ℤ]`.
pub fn qbinom_family(max_n: u64, lo: i64, hi: i64) -> Result<PolyFamily> {
    pair_family(max_n, lo, hi, |n, k| Ok(q_binomial(n, k)))
}

/// `f_n = ε_n(q)` on `ℤ≥1`.
pub fn eps_family(max_n: u64) -> Result<PolyFamily> {
    PolyFamily::try_from_fn(SemigroupInstance::PositiveInts, Window::rank(max_n), |s| {
        eps(s.as_int().expect("integer element"))
    })
}
