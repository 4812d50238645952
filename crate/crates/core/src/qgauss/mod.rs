//! Polynomial families indexed by semigroup elements: constructions from
//! a-, b- and c-sequences, q-Gauss checkers, and operations that carry
//! q-Gauss congruences along morphisms.

mod calculus;
mod checks;
mod constructions;
pub mod forms;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qpoly::IntPolynomial;
use crate::semigroup::{RankedElement, SemigroupInstance, Window};

pub use calculus::{chain_prefix, chain_suffix, multiply, pullback, pushforward, Pushforward};
pub use checks::{check_qgauss_definition, check_qgauss_roots, equivalent_mod};
pub use constructions::{construct_from_b, construct_from_c, construct_ramanujan, fund_family};

/// A polynomial for every element of a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFamily {
    pub instance: SemigroupInstance,
    pub window: Window,
    polys: BTreeMap<RankedElement, IntPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub element: RankedElement,
    pub poly: IntPolynomial,
}

impl PolyFamily {
    pub fn from_fn(
        instance: SemigroupInstance,
        window: Window,
        mut f: impl FnMut(&RankedElement) -> IntPolynomial,
    ) -> Result<Self> {
        Self::try_from_fn(instance, window, |s| Ok(f(s)))
    }

    pub fn try_from_fn(
        instance: SemigroupInstance,
        window: Window,
        mut f: impl FnMut(&RankedElement) -> Result<IntPolynomial>,
    ) -> Result<Self> {
        let mut polys = BTreeMap::new();
        for s in instance.window_elements(&window)? {
            let p = f(&s)?;
            polys.insert(s, p);
        }
        Ok(Self {
            instance,
            window,
            polys,
        })
    }

    /// A family on `ℤ≥1` up to `max_n`.
    pub fn on_ints(max_n: u64, mut f: impl FnMut(u64) -> IntPolynomial) -> Self {
        let polys = (1..=max_n).map(|n| (RankedElement::Int(n), f(n))).collect();
        Self {
            instance: SemigroupInstance::PositiveInts,
            window: Window::rank(max_n),
            polys,
        }
    }

    pub fn get(&self, s: &RankedElement) -> Result<&IntPolynomial> {
        self.polys
            .get(s)
            .ok_or_else(|| Error::MissingValue(self.instance.describe(s)))
    }

    /// The polynomial at `n` on `ℤ≥1`.
    pub fn at(&self, n: u64) -> Result<&IntPolynomial> {
        self.get(&RankedElement::Int(n))
    }

    /// Window elements in canonical order.
    pub fn elements(&self) -> Result<Vec<RankedElement>> {
        self.instance.window_elements(&self.window)
    }

    pub fn entries(&self) -> Result<Vec<(RankedElement, IntPolynomial)>> {
        self.elements()?
            .into_iter()
            .map(|s| {
                let p = self.get(&s)?.clone();
                Ok((s, p))
            })
            .collect()
    }

    /// Each polynomial reduced modulo `q^{rk(s)} - 1`.
    pub fn reduced(&self) -> Result<Self> {
        let mut out = self.clone();
        for (s, p) in out.polys.iter_mut() {
            let r = self.instance.rank(s)?;
            *p = p.reduce_mod_qn_minus_1(r as usize)?;
        }
        Ok(out)
    }

    /// A copy with `q^{rk(s) - 1}` added at `s`, for negative tests.
    pub fn corrupted(&self, s: &RankedElement) -> Result<Self> {
        let r = self.instance.rank(s)?;
        let mut out = self.clone();
        let p = out
            .polys
            .get_mut(s)
            .ok_or_else(|| Error::MissingValue(self.instance.describe(s)))?;
        *p += &IntPolynomial::monomial(1, r as usize - 1);
        Ok(out)
    }

    /// Serializable `(element, polynomial)` records in canonical order.
    pub fn records(&self) -> Result<Vec<FamilyRecord>> {
        Ok(self
            .entries()?
            .into_iter()
            .map(|(element, poly)| FamilyRecord { element, poly })
            .collect())
    }
}
