use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{a_from_c, b_from_a, Role, SequenceSpec};
use crate::error::{Error, Result};
use crate::semigroup::SemigroupInstance;

/// A truncated formal Laurent series `Σ_{low <= e < order} a_e x^e` with
/// rational coefficients. Coefficients at exponents `>= order` are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    low: i64,
    order: i64,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// The series with the given coefficients starting at `x^low`, known for
    /// exponents below `order`. Missing coefficients are zero.
    pub fn new(low: i64, coeffs: Vec<BigRational>, order: i64) -> Result<Self> {
        if order < low {
            return Err(Error::InvalidArgument(format!(
                "truncation order {order} is below the lowest exponent {low}"
            )));
        }
        let len = (order - low) as usize;
        let mut coeffs = coeffs;
        coeffs.resize(len, BigRational::zero());
        coeffs.truncate(len);
        Ok(Self { low, order, coeffs })
    }

    pub fn from_ints(low: i64, coeffs: &[i64], order: i64) -> Result<Self> {
        Self::new(
            low,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            order,
        )
    }

    /// A polynomial `c_0 + c_1 x + ...`, known up to `order`.
    pub fn polynomial(coeffs: &[i64], order: i64) -> Result<Self> {
        Self::from_ints(0, coeffs, order)
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `x^e`; `None` beyond the truncation order.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e >= self.order {
            None
        } else if e < self.low {
            Some(BigRational::zero())
        } else {
            Some(self.coeffs[(e - self.low) as usize].clone())
        }
    }

    /// The lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.low + i as i64)
    }

    fn precision(&self) -> i64 {
        self.order - self.low
    }

    pub fn add(&self, other: &Self) -> Self {
        let low = self.low.min(other.low);
        let order = self.order.min(other.order);
        let coeffs = (low..order)
            .map(|e| self.coeff(e).unwrap_or_default() + other.coeff(e).unwrap_or_default())
            .collect();
        Self { low, order, coeffs }
    }

    pub fn neg(&self) -> Self {
        Self {
            low: self.low,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let low = self.low + other.low;
        let prec = self.precision().min(other.precision());
        let mut coeffs = vec![BigRational::zero(); prec as usize];
        for (i, a) in self.coeffs.iter().enumerate().take(prec as usize) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(prec as usize - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self {
            low,
            order: low + prec,
            coeffs,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let prec = self.precision();
        let mut coeffs = vec![BigRational::zero(); prec as usize];
        if let Some(c) = coeffs.first_mut() {
            *c = BigRational::one();
        }
        let mut acc = Self {
            low: 0,
            order: prec,
            coeffs,
        };
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse, defined when some coefficient is nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::InvalidArgument("cannot invert a series with no known nonzero term".into()))?;
        let shift = (v - self.low) as usize;
        let unit: Vec<BigRational> = self.coeffs[shift..].to_vec();
        let prec = unit.len();
        let mut inv = vec![BigRational::zero(); prec];
        inv[0] = unit[0].recip();
        for n in 1..prec {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &unit[k] * &inv[n - k];
            }
            inv[n] = -acc * &inv[0];
        }
        Ok(Self {
            low: -v,
            order: -v + prec as i64,
            coeffs: inv,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Coefficients as integers, failing at the first non-integer.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerCoefficient {
                        element: format!("x^{}", self.low + i as i64),
                    })
                }
            })
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "{}x^{} + ", c, self.low + i as i64)?;
            }
        }
        write!(f, "O(x^{})", self.order)
    }
}

/// Solve `C(x) = x D(C(x))` for a power series `C` with `C(0) = 0`, up to and
/// including `x^order`. Each coefficient `c_n = [x^{n-1}] D(C)` depends only
/// on `c_1, ..., c_{n-1}`, provided `D` has no negative powers.
pub fn solve_functional_equation(d: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    if let Some(v) = d.valuation() {
        if v < 0 {
            return Err(Error::NoSolution(format!(
                "D has a term t^{v}; x D(C) would have negative powers for every power series C"
            )));
        }
    }
    if d.order() < order as i64 {
        return Err(Error::InvalidArgument(format!(
            "D is known only below t^{}, need up to t^{}",
            d.order(),
            order as i64 - 1
        )));
    }
    let mut c = vec![BigRational::zero(); order + 1];
    for n in 1..=order {
        // D(C) modulo x^n, by Horner's rule on the known part of C.
        let partial = TruncatedSeries {
            low: 0,
            order: n as i64,
            coeffs: c[..n].to_vec(),
        };
        let mut value = TruncatedSeries::polynomial(&[], n as i64)?;
        for e in (0..n as i64).rev() {
            let de = d.coeff(e).expect("order checked above");
            let constant = TruncatedSeries::new(0, vec![de], n as i64)?;
            value = value.mul(&partial).add(&constant);
        }
        let cn = value.coeff(n as i64 - 1).expect("within truncation order");
        if !cn.is_integer() {
            return Err(Error::NonIntegerCoefficient {
                element: format!("x^{n}"),
            });
        }
        c[n] = cn;
    }
    TruncatedSeries::new(0, c, order as i64 + 1)
}

/// `#X_{n,k} = [t^{n-k}] D(t)^n`.
pub fn riordan_count(d: &TruncatedSeries, n: u64, k: i64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("riordan_count requires n >= 1".into()));
    }
    let e = n as i64 - k;
    let power = d.pow(n as u32);
    let c = power
        .coeff(e)
        .ok_or_else(|| Error::InvalidArgument(format!("D^{n} is only known below t^{}", power.order())))?;
    if !c.is_integer() {
        return Err(Error::NonIntegerCoefficient {
            element: format!("({n},{k})"),
        });
    }
    Ok(c.to_integer())
}

fn require_ints(spec: &SequenceSpec) -> Result<()> {
    if spec.instance == SemigroupInstance::PositiveInts {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "series identities are only available on ℤ≥1".into(),
        ))
    }
}

fn series_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(a.len() - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `Σ_n c_n x^n = 1 - Π_m (1 - x^m)^{b_m}`, expanded up to `x^order`.
pub fn c_from_b_series(b: &SequenceSpec, order: u64) -> Result<SequenceSpec> {
    require_ints(b)?;
    let len = order as usize + 1;
    let mut product = vec![BigInt::zero(); len];
    product[0] = BigInt::one();
    for m in 1..=order {
        let bm = b.at(m)?;
        if bm.is_zero() {
            continue;
        }
        let mut factor = vec![BigInt::zero(); len];
        factor[0] = BigInt::one();
        if bm > BigInt::zero() {
            factor[m as usize] = BigInt::from(-1);
        } else {
            for j in (m as usize..len).step_by(m as usize) {
                factor[j] = BigInt::one();
            }
        }
        let times: u64 = num_traits::ToPrimitive::to_u64(&num_traits::Signed::abs(&bm))
            .ok_or_else(|| Error::InvalidArgument(format!("exponent b_{m} is too large")))?;
        for _ in 0..times {
            product = series_mul(&product, &factor);
        }
    }
    Ok(SequenceSpec::on_ints(Role::C, order, |n| -product[n as usize].clone()))
}

/// The b-sequence of `c` up to `x^order`, via the a-sequence, cross-checked
/// against the product identity.
pub fn b_from_c_series(c: &SequenceSpec, order: u64) -> Result<SequenceSpec> {
    require_ints(c)?;
    let mut values = Vec::new();
    for n in 1..=order {
        values.push(c.at(n)?);
    }
    let c = SequenceSpec::on_ints(Role::C, order, |n| values[n as usize - 1].clone());
    let b = b_from_a(&a_from_c(&c)?)?;
    if !c_from_b_series(&b, order)?.same_values(&c)? {
        return Err(Error::InexactDivision(
            "the product expansion of b does not reproduce c".into(),
        ));
    }
    Ok(b)
}
