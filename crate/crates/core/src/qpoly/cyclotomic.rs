use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::Serialize;

use super::IntPolynomial;
use crate::arith::divisors;
use crate::error::{Error, Result};

fn table() -> &'static RwLock<HashMap<u64, Arc<IntPolynomial>>> {
    static TABLE: OnceLock<RwLock<HashMap<u64, Arc<IntPolynomial>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `q^d - 1` by the
/// cyclotomic polynomials of the proper divisors of `d`. Results are memoized.
pub fn cyclotomic(d: u64) -> Result<Arc<IntPolynomial>> {
    if d == 0 {
        return Err(Error::InvalidArgument("cyclotomic(0) is undefined".into()));
    }
    if let Some(p) = table().read().expect("cyclotomic table poisoned").get(&d) {
        return Ok(Arc::clone(p));
    }
    let mut quotient = &IntPolynomial::monomial(1, d as usize) - &IntPolynomial::one();
    for e in divisors(d)? {
        if e < d {
            let (q, r) = quotient.div_rem_monic(&*cyclotomic(e)?)?;
            debug_assert!(r.is_zero());
            quotient = q;
        }
    }
    let mut guard = table().write().expect("cyclotomic table poisoned");
    let entry = guard.entry(d).or_insert_with(|| Arc::new(quotient));
    Ok(Arc::clone(entry))
}

/// A polynomial reduced modulo the `d`-th cyclotomic polynomial; this is the
/// exact value of the polynomial at a primitive `d`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclotomicResidue {
    pub d: u64,
    pub residue: IntPolynomial,
}

impl CyclotomicResidue {
    /// The integer value, if the evaluation is rational.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.residue.as_constant()
    }

    pub fn is_integer(&self, value: &BigInt) -> bool {
        self.as_integer().as_ref() == Some(value)
    }
}

impl fmt::Display for CyclotomicResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod Φ_{})", self.residue, self.d)
    }
}

/// Evaluate `f` at a primitive `d`-th root of unity, exactly.
pub fn eval_at_primitive_root(f: &IntPolynomial, d: u64) -> Result<CyclotomicResidue> {
    if d == 0 {
        return Err(Error::InvalidArgument("root order must be positive".into()));
    }
    // Φ_d divides q^d - 1, so folding first keeps the long division short.
    let folded = f.reduce_mod_qn_minus_1(d as usize)?;
    let (_, residue) = folded.div_rem_monic(&*cyclotomic(d)?)?;
    Ok(CyclotomicResidue { d, residue })
}
