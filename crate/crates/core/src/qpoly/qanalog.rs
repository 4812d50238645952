use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use super::IntPolynomial;
use crate::error::{Error, Result};

/// `[n]_q = 1 + q + ... + q^{n-1}`, with `[0]_q = 0`.
pub fn q_int(n: u64) -> IntPolynomial {
    q_int_in(n, 1)
}

/// `[n]_{q^d} = 1 + q^d + ... + q^{d(n-1)}`.
pub fn q_int_in(n: u64, d: u64) -> IntPolynomial {
    assert!(d >= 1, "base exponent must be positive");
    if n == 0 {
        return IntPolynomial::zero();
    }
    let d = d as usize;
    let mut coeffs = vec![BigInt::from(0); d * (n as usize - 1) + 1];
    for i in 0..n as usize {
        coeffs[i * d] = BigInt::from(1);
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u64) -> IntPolynomial {
    static TABLE: OnceLock<Mutex<Vec<IntPolynomial>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(vec![IntPolynomial::one()]));
    let mut guard = table.lock().expect("q-factorial table poisoned");
    while guard.len() <= n as usize {
        let m = guard.len() as u64;
        let next = &guard[guard.len() - 1] * &q_int(m);
        guard.push(next);
    }
    guard[n as usize].clone()
}

/// The q-multinomial coefficient `[|α|]_q! / Π [α_i]_q!`, zero if any part is
/// negative.
pub fn q_multinomial(parts: &[i64]) -> IntPolynomial {
    if parts.iter().any(|&p| p < 0) {
        return IntPolynomial::zero();
    }
    let total: i64 = parts.iter().sum();
    let mut acc = q_factorial(total as u64);
    for &p in parts {
        if p > 1 {
            acc = acc
                .exact_div(&q_factorial(p as u64))
                .expect("q-factorials of the parts divide the q-factorial of the total");
        }
    }
    acc
}

/// The q-binomial coefficient, zero unless `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> IntPolynomial {
    if n < 0 || k < 0 || k > n {
        return IntPolynomial::zero();
    }
    let k = k.min(n - k);
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("q-binomial cache poisoned").get(&(n, k)) {
        return p.clone();
    }
    let p = q_multinomial(&[k, n - k]);
    cache
        .lock()
        .expect("q-binomial cache poisoned")
        .insert((n, k), p.clone());
    p
}

/// `ε_n(q)`: `-1` for odd `n`, `q^{n/2}` for even `n`.
pub fn eps(n: u64) -> Result<IntPolynomial> {
    match n {
        0 => Err(Error::InvalidArgument("eps(0) is undefined".into())),
        n if n % 2 == 1 => Ok(IntPolynomial::constant(-1)),
        n => Ok(IntPolynomial::monomial(1, (n / 2) as usize)),
    }
}

/// `[exp_λ(n)]_q`, the sum of q-multinomials over weak compositions of `n`
/// into `λ` parts. Negative `λ` picks up the factor `ε_n(q)`; `λ = 0` gives
/// zero.
pub fn q_exp(lambda: i64, n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("q_exp requires n >= 1".into()));
    }
    Ok(match lambda {
        0 => IntPolynomial::zero(),
        l if l < 0 => &eps(n)? * &exp_positive(l.unsigned_abs(), n),
        l => exp_positive(l as u64, n),
    })
}

// Splitting off the last part: E_λ(m) = Σ_k qbinom(m, k) E_{λ-1}(m - k).
fn exp_positive(lambda: u64, n: u64) -> IntPolynomial {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if lambda == 1 || n == 0 {
        return IntPolynomial::one();
    }
    if let Some(p) = cache.lock().expect("q_exp cache poisoned").get(&(lambda, n)) {
        return p.clone();
    }
    let mut total = IntPolynomial::zero();
    for k in 0..=n {
        total += &(&q_binomial(n as i64, k as i64) * &exp_positive(lambda - 1, n - k));
    }
    cache
        .lock()
        .expect("q_exp cache poisoned")
        .insert((lambda, n), total.clone());
    total
}
