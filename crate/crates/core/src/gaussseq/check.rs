use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{Role, SequenceSpec};
use crate::arith::{divisors, mobius};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaussFailure {
    pub element: String,
    pub rank: u64,
    /// The weighted divisor sum that `rank` fails to divide.
    pub numerator: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GaussReport {
    pub checked: usize,
    pub failures: Vec<GaussFailure>,
}

impl GaussReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The first failing element in canonical order.
    pub fn witness(&self) -> Option<&GaussFailure> {
        self.failures.first()
    }
}

/// Check `rk(s) | Σ_{t|s} φ(s/t) a_t` on every element of the window, with
/// `φ = μ` unless another weight is supplied. A supplied weight must satisfy
/// `φ(1) = ±1` and `n | Σ_{d|n} φ(d)` up to the window's maximal rank.
pub fn check_gauss(a: &SequenceSpec, phi: Option<&dyn Fn(u64) -> i64>) -> Result<GaussReport> {
    if a.role != Role::A {
        return Err(Error::InvalidArgument("check_gauss expects an a-sequence".into()));
    }
    let weight = |d: u64| -> Result<i64> {
        match phi {
            Some(f) => Ok(f(d)),
            None => mobius(d),
        }
    };
    if let Some(f) = phi {
        if f(1).abs() != 1 {
            return Err(Error::InvalidArgument(format!("weight has φ(1) = {}", f(1))));
        }
        for n in 1..=a.window.max_rank {
            let total: i64 = divisors(n)?.into_iter().map(f).sum();
            if total % n as i64 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "weight fails the divisor-sum condition at n = {n}"
                )));
            }
        }
    }
    let inst = &a.instance;
    let mut report = GaussReport::default();
    for s in a.elements()? {
        let r = inst.rank(&s)?;
        let mut total = BigInt::zero();
        for (t, d) in inst.unit_divisors(&s)? {
            let w = weight(d)?;
            if w != 0 {
                total += a.value(&t)? * w;
            }
        }
        report.checked += 1;
        if !total.is_multiple_of(&BigInt::from(r)) {
            report.failures.push(GaussFailure {
                element: inst.describe(&s),
                rank: r,
                numerator: total.to_string(),
            });
        }
    }
    Ok(report)
}

/// `a_n = tr(M^n)` for `1 <= n <= max_n`.
pub fn a_from_matrix_trace(m: &[Vec<i64>], max_n: u64) -> Result<SequenceSpec> {
    let k = m.len();
    if k == 0 || m.iter().any(|row| row.len() != k) {
        return Err(Error::InvalidArgument("matrix must be square and nonempty".into()));
    }
    let base: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut power = base.clone();
    let mut traces = Vec::with_capacity(max_n as usize);
    for _ in 0..max_n {
        traces.push((0..k).map(|i| power[i][i].clone()).sum::<BigInt>());
        power = mat_mul(&power, &base);
    }
    Ok(SequenceSpec::on_ints(Role::A, max_n, |n| {
        traces[n as usize - 1].clone()
    }))
}

fn mat_mul(x: &[Vec<BigInt>], y: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = x.len();
    (0..k)
        .map(|i| (0..k).map(|j| (0..k).map(|l| &x[i][l] * &y[l][j]).sum()).collect())
        .collect()
}
