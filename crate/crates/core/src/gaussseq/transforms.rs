use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::{Role, SequenceSpec};
use crate::arith::mobius;
use crate::error::{Error, Result};
use crate::semigroup::RankedElement;

fn require(spec: &SequenceSpec, role: Role) -> Result<()> {
    if spec.role == role {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "expected a {role:?}-sequence, got a {:?}-sequence",
            spec.role
        )))
    }
}

/// `a_s = Σ_{t|s} rk(t) b_t`.
pub fn a_from_b(b: &SequenceSpec) -> Result<SequenceSpec> {
    require(b, Role::B)?;
    let inst = &b.instance;
    SequenceSpec::try_from_fn(inst.clone(), b.window.clone(), Role::A, |s| {
        let mut total = BigInt::zero();
        for (t, _) in inst.unit_divisors(s)? {
            total += b.value(&t)? * inst.rank(&t)?;
        }
        Ok(total)
    })
}

/// `b_s = (1/rk s) Σ_{t|s} μ(s/t) a_t`, failing at the first element (in
/// canonical order) where the division is inexact.
pub fn b_from_a(a: &SequenceSpec) -> Result<SequenceSpec> {
    require(a, Role::A)?;
    let inst = &a.instance;
    SequenceSpec::try_from_fn(inst.clone(), a.window.clone(), Role::B, |s| {
        let mut total = BigInt::zero();
        for (t, d) in inst.unit_divisors(s)? {
            let mu = mobius(d)?;
            if mu != 0 {
                total += a.value(&t)? * mu;
            }
        }
        let r = inst.rank(s)?;
        let (quot, rem) = total.div_rem(&BigInt::from(r));
        if !rem.is_zero() {
            return Err(Error::NonIntegerWitness {
                element: inst.describe(s),
                rank: r,
                numerator: total.to_string(),
            });
        }
        Ok(quot)
    })
}

/// `a_s = rk(s) c_s + Σ_{t<s} c_t a_{s-t}`, summing over the support of `c`.
pub fn a_from_c(c: &SequenceSpec) -> Result<SequenceSpec> {
    require(c, Role::C)?;
    let support = weighted_support(c)?;
    let mut memo = HashMap::new();
    SequenceSpec::try_from_fn(c.instance.clone(), c.window.clone(), Role::A, |s| {
        a_rec(c, &support, s, &mut memo)
    })
}

fn weighted_support(c: &SequenceSpec) -> Result<Vec<(RankedElement, BigInt, u64)>> {
    c.support()
        .into_iter()
        .map(|t| {
            let v = c.value(&t)?;
            let r = c.instance.rank(&t)?;
            Ok((t, v, r))
        })
        .collect()
}

fn a_rec(
    c: &SequenceSpec,
    support: &[(RankedElement, BigInt, u64)],
    u: &RankedElement,
    memo: &mut HashMap<RankedElement, BigInt>,
) -> Result<BigInt> {
    if let Some(v) = memo.get(u) {
        return Ok(v.clone());
    }
    let inst = &c.instance;
    let r = inst.rank(u)?;
    let mut total = c.value(u)? * r;
    for (t, ct, rt) in support {
        if *rt >= r {
            continue;
        }
        if let Some(w) = inst.difference_set(u, t)?.pop() {
            total += ct * a_rec(c, support, &w, memo)?;
        }
    }
    memo.insert(u.clone(), total.clone());
    Ok(total)
}

/// Inverse of [`a_from_c`], solving the recurrence for `c_s` in order of
/// increasing rank. Values of `c` outside the window are taken to be zero.
pub fn c_from_a(a: &SequenceSpec) -> Result<SequenceSpec> {
    require(a, Role::A)?;
    let inst = &a.instance;
    let elements = a.elements()?;
    let mut solved: Vec<(RankedElement, BigInt, u64)> = Vec::new();
    let mut values = Vec::new();
    for s in &elements {
        let r = inst.rank(s)?;
        let mut rest = a.value(s)?;
        for (t, ct, rt) in &solved {
            if *rt >= r || ct.is_zero() {
                continue;
            }
            if let Some(w) = inst.difference_set(s, t)?.pop() {
                rest -= ct * a.value(&w)?;
            }
        }
        let (quot, rem) = rest.div_rem(&BigInt::from(r));
        if !rem.is_zero() {
            return Err(Error::NonIntegerWitness {
                element: inst.describe(s),
                rank: r,
                numerator: rest.to_string(),
            });
        }
        solved.push((s.clone(), quot.clone(), r));
        values.push((s.clone(), quot));
    }
    SequenceSpec::from_support(inst.clone(), a.window.clone(), Role::C, values)
}

/// `a_s` as the sum over ordered decompositions `s = s_1 + s_2 + ...` of
/// `rk(s_1) c_{s_1} c_{s_2} ...`, enumerated term by term.
pub fn a_from_c_compositions(c: &SequenceSpec, s: &RankedElement) -> Result<BigInt> {
    require(c, Role::C)?;
    let support = weighted_support(c)?;
    let mut total = BigInt::zero();
    for (t, ct, rt) in &support {
        if t == s {
            total += ct * BigInt::from(*rt);
        } else if let Some(w) = c.instance.difference_set(s, t)?.pop() {
            total += ct * BigInt::from(*rt) * products_over_sequences(c, &support, &w)?;
        }
    }
    Ok(total)
}

// Σ over ordered sequences of support elements summing to `u` of Π c.
fn products_over_sequences(
    c: &SequenceSpec,
    support: &[(RankedElement, BigInt, u64)],
    u: &RankedElement,
) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for (t, ct, _) in support {
        if t == u {
            total += ct;
        } else if let Some(w) = c.instance.difference_set(u, t)?.pop() {
            total += ct * products_over_sequences(c, support, &w)?;
        }
    }
    Ok(total)
}

/// `a_s` as the sum over multisets `α` of support elements with sum `s` of
/// `(rk s / |α|) · multinomial(α) · Π c_t^{α(t)}`.
pub fn a_from_c_multisets(c: &SequenceSpec, s: &RankedElement) -> Result<BigInt> {
    require(c, Role::C)?;
    let support = c.support();
    let r = c.instance.rank(s)?;
    let mut total = BigInt::zero();
    for alpha in c.instance.decompositions(s, Some(&support))? {
        let size = alpha.size();
        let mut term = factorial(size) * r;
        for (t, m) in &alpha.parts {
            term /= factorial(*m);
            term *= Pow::pow(c.value(t)?, *m);
        }
        let (quot, rem) = term.div_rem(&BigInt::from(size));
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!(
                "multiset term at {} is not divisible by {size}",
                c.instance.describe(s)
            )));
        }
        total += quot;
    }
    Ok(total)
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}
