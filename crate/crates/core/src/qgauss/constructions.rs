use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::PolyFamily;
use crate::arith::ramanujan_sum;
use crate::error::{Error, Result};
use crate::gaussseq::{Role, SequenceSpec};
use crate::qpoly::{q_exp, q_int, q_int_in, q_multinomial, IntPolynomial};
use crate::semigroup::{Bead, RankedElement, SemigroupInstance, Window};

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

/// `g_s(q) = (1/rk s) Σ_{j<rk s} (Σ_{t|s} μ_j(s/t) a_t) q^j`, the canonical
/// representative of degree below `rk(s)`.
pub fn construct_ramanujan(a: &SequenceSpec) -> Result<PolyFamily> {
    require(a, Role::A)?;
    let inst = &a.instance;
    PolyFamily::try_from_fn(inst.clone(), a.window.clone(), |s| {
        let r = inst.rank(s)?;
        let divs = inst.unit_divisors(s)?;
        let values: Vec<(BigInt, u64)> = divs.iter().map(|(t, d)| Ok((a.value(t)?, *d))).collect::<Result<_>>()?;
        let rb = BigInt::from(r);
        let mut coeffs = Vec::with_capacity(r as usize);
        for j in 0..r {
            let mut total = BigInt::zero();
            for (at, d) in &values {
                let mu = ramanujan_sum(j as i64, *d)?;
                if mu != 0 {
                    total += at * mu;
                }
            }
            let (quot, rem) = total.div_rem(&rb);
            if !rem.is_zero() {
                return Err(Error::NonIntegerCoefficient {
                    element: inst.describe(s),
                });
            }
            coeffs.push(quot);
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    })
}

/// `g_s(q) = Σ_{t|s} [rk t]_{q^{s/t}} b_t`.
pub fn construct_from_b(b: &SequenceSpec) -> Result<PolyFamily> {
    require(b, Role::B)?;
    let inst = &b.instance;
    PolyFamily::try_from_fn(inst.clone(), b.window.clone(), |s| {
        let mut total = IntPolynomial::zero();
        for (t, d) in inst.unit_divisors(s)? {
            let bt = b.value(&t)?;
            if !bt.is_zero() {
                total += &q_int_in(inst.rank(&t)?, d).scale(&bt);
            }
        }
        Ok(total)
    })
}

/// `g_s(q) = Σ_α ([rk s]_q / [|α|]_q) qbinom(|α|; α) Π_t [exp_{c_t}(α(t))]_q`
/// over multisets `α` of support elements of `c` summing to `s`.
pub fn construct_from_c(c: &SequenceSpec) -> Result<PolyFamily> {
    require(c, Role::C)?;
    let inst = &c.instance;
    let support = c.support();
    PolyFamily::try_from_fn(inst.clone(), c.window.clone(), |s| {
        let r = inst.rank(s)?;
        let mut total = IntPolynomial::zero();
        for alpha in inst.decompositions(s, Some(&support))? {
            let mults: Vec<i64> = alpha.parts.iter().map(|(_, m)| *m as i64).collect();
            let mut term = (&q_int(r) * &q_multinomial(&mults)).exact_div(&q_int(alpha.size()))?;
            for (t, m) in &alpha.parts {
                let ct = c
                    .value(t)?
                    .to_i64()
                    .ok_or_else(|| Error::InvalidArgument(format!("c at {} is too large", inst.describe(t))))?;
                term = &term * &q_exp(ct, *m)?;
            }
            total += &term;
        }
        Ok(total)
    })
}

/// `f_α(q) = ([ψ(α)]_q / [|α|]_q) qbinom(|α|; α)` on the free ranked
/// semigroup generated by `beads`.
pub fn fund_family(beads: &[Bead], window: Window) -> Result<PolyFamily> {
    let inst = SemigroupInstance::free(beads.to_vec());
    PolyFamily::try_from_fn(inst.clone(), window, |s| fund_poly(&inst, s))
}

fn fund_poly(inst: &SemigroupInstance, s: &RankedElement) -> Result<IntPolynomial> {
    let RankedElement::Free(m) = s else {
        return Err(Error::InvalidElement(s.to_string()));
    };
    let r = inst.rank(s)?;
    let parts: Vec<i64> = m.iter().map(|&k| k as i64).collect();
    let size: u64 = m.iter().sum();
    (&q_int(r) * &q_multinomial(&parts)).exact_div(&q_int(size))
}
