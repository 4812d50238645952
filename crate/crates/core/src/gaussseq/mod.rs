//! Integer sequences on semigroup windows and the three equivalent
//! parametrisations of a Gauss congruence.
//!
//! An a-sequence satisfies Gauss congruence exactly when it can be written
//! as `a_s = Σ_{t|s} rk(t) b_t` or as `a_s = Σ rk(s_1) c_{s_1} c_{s_2} ...`
//! over ordered decompositions with integer `b` or `c`. The transforms here
//! move between the three, failing with a witness when integrality breaks.

mod check;
mod series;
mod transforms;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{RankedElement, SemigroupInstance, Window};

pub use check::{a_from_matrix_trace, check_gauss, GaussFailure, GaussReport};
pub use series::{b_from_c_series, c_from_b_series, riordan_count, solve_functional_equation, TruncatedSeries};
pub use transforms::{a_from_b, a_from_c, a_from_c_compositions, a_from_c_multisets, b_from_a, c_from_a};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    A,
    B,
    C,
}

/// Integer values on a finite window. For roles `B` and `C` the values are a
/// finitely supported map and anything not listed reads as zero; role `A`
/// must be total on the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    pub instance: SemigroupInstance,
    pub window: Window,
    pub role: Role,
    values: BTreeMap<RankedElement, BigInt>,
}

impl SequenceSpec {
    /// Evaluate `f` on every element of the window.
    pub fn from_fn(
        instance: SemigroupInstance,
        window: Window,
        role: Role,
        mut f: impl FnMut(&RankedElement) -> BigInt,
    ) -> Result<Self> {
        let mut values = BTreeMap::new();
        for s in instance.window_elements(&window)? {
            let v = f(&s);
            if role == Role::A || !v.is_zero() {
                values.insert(s, v);
            }
        }
        Ok(Self {
            instance,
            window,
            role,
            values,
        })
    }

    pub(crate) fn try_from_fn(
        instance: SemigroupInstance,
        window: Window,
        role: Role,
        mut f: impl FnMut(&RankedElement) -> Result<BigInt>,
    ) -> Result<SequenceSpec> {
        let mut values = Vec::new();
        for s in instance.window_elements(&window)? {
            let v = f(&s)?;
            values.push((s, v));
        }
        match role {
            Role::A => {
                let map = values.into_iter().collect();
                Ok(Self {
                    instance,
                    window,
                    role,
                    values: map,
                })
            }
            _ => SequenceSpec::from_support(instance, window, role, values),
        }
    }

    /// A `B` or `C` sequence given by its nonzero values.
    pub fn from_support(
        instance: SemigroupInstance,
        window: Window,
        role: Role,
        support: impl IntoIterator<Item = (RankedElement, BigInt)>,
    ) -> Result<Self> {
        if role == Role::A {
            return Err(Error::InvalidArgument(
                "a-sequences must be given on the whole window".into(),
            ));
        }
        let mut values = BTreeMap::new();
        for (s, v) in support {
            instance.validate(&s)?;
            if !v.is_zero() {
                values.insert(s, v);
            }
        }
        Ok(Self {
            instance,
            window,
            role,
            values,
        })
    }

    /// A sequence on `ℤ≥1` up to `max_n`, given by a function of `n`.
    pub fn on_ints(role: Role, max_n: u64, mut f: impl FnMut(u64) -> BigInt) -> Self {
        let values: BTreeMap<RankedElement, BigInt> = (1..=max_n)
            .map(|n| (RankedElement::Int(n), f(n)))
            .filter(|(_, v)| role == Role::A || !v.is_zero())
            .collect();
        Self {
            instance: SemigroupInstance::PositiveInts,
            window: Window::rank(max_n),
            role,
            values,
        }
    }

    /// A sequence on `ℤ≥1` from a list `[v_1, v_2, ...]`.
    pub fn from_int_values(role: Role, vals: &[i64]) -> Self {
        Self::on_ints(role, vals.len() as u64, |n| BigInt::from(vals[n as usize - 1]))
    }

    /// The value at `s`; zero off the support for roles `B` and `C`.
    pub fn value(&self, s: &RankedElement) -> Result<BigInt> {
        match self.values.get(s) {
            Some(v) => Ok(v.clone()),
            None if self.role == Role::A => Err(Error::MissingValue(self.instance.describe(s))),
            None => Ok(BigInt::zero()),
        }
    }

    /// The value at `n` on `ℤ≥1`.
    pub fn at(&self, n: u64) -> Result<BigInt> {
        self.value(&RankedElement::Int(n))
    }

    /// Elements with a nonzero value, in canonical order.
    pub fn support(&self) -> Vec<RankedElement> {
        let mut out: Vec<RankedElement> = self
            .values
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, _)| s.clone())
            .collect();
        self.instance.sort_canonical(&mut out);
        out
    }

    /// The window's elements in canonical order.
    pub fn elements(&self) -> Result<Vec<RankedElement>> {
        self.instance.window_elements(&self.window)
    }

    /// `(element, value)` over the window in canonical order.
    pub fn entries(&self) -> Result<Vec<(RankedElement, BigInt)>> {
        self.elements()?
            .into_iter()
            .map(|s| {
                let v = self.value(&s)?;
                Ok((s, v))
            })
            .collect()
    }

    /// Values over the window in canonical order.
    pub fn values_in_order(&self) -> Result<Vec<BigInt>> {
        Ok(self.entries()?.into_iter().map(|(_, v)| v).collect())
    }

    /// Same values, different role tag. Used when a sequence of one kind is
    /// reinterpreted, e.g. a hatted c-sequence.
    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    /// Equality of values on the window, ignoring how zero entries are stored.
    pub fn same_values(&self, other: &SequenceSpec) -> Result<bool> {
        Ok(self.instance == other.instance && self.entries()? == other.entries()?)
    }
}
