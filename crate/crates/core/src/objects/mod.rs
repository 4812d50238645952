//! Finite sets with a rotation action: words, compositions and festoons,
//! and verifiers for Lyndon structures and cyclic sieving.
//!
//! Every object is a sequence of symbols, one per vertex slot of the cycle
//! graph `Γ_n`, and the generator of `C_n` rotates the sequence by one slot.

mod festoons;
mod verify;
mod words;

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::{RankedElement, SemigroupInstance, Window};

pub use festoons::{
    barrier_festoons, festoons_by_content, festoons_colored, festoons_repeated, hat, signed_festoons, BarrierRule,
};
pub use verify::{verify_csp, verify_lyndon, verify_signed_csp};
pub use words::{compositions, maj, maj_polynomial, words_with_content, Alphabet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectKind {
    Word,
    Composition,
    Festoon,
    SignedFestoon,
    Tubing,
}

/// One vertex slot of a festoon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BeadSlot {
    /// The bead's type, as the semigroup element it stands for.
    #[serde(rename = "type")]
    pub ty: String,
    pub color: u32,
    /// Whether the bead starts at this slot.
    pub start: bool,
    /// Whether a barrier sits just before this slot.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub barrier: bool,
}

/// A tube of a cycle tubing, recorded at its first slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TubeSlot {
    pub len: usize,
    pub color: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Symbol {
    Letter(i64),
    Bead(BeadSlot),
    /// The tubes starting at this slot, sorted.
    Tubes(Vec<TubeSlot>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CyclicObject {
    pub kind: ObjectKind,
    pub encoding: Vec<Symbol>,
    /// `+1`, or `-1` for negative signed festoons.
    pub sign: i8,
}

impl CyclicObject {
    pub fn new(kind: ObjectKind, encoding: Vec<Symbol>) -> Self {
        Self {
            kind,
            encoding,
            sign: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.encoding.len()
    }

    pub fn is_empty(&self) -> bool {
        self.encoding.is_empty()
    }

    /// Rotate clockwise by `k` slots: the symbol at slot `i` moves to slot
    /// `i + k`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut encoding = self.encoding.clone();
        if !encoding.is_empty() {
            let n = encoding.len();
            encoding.rotate_right(k % n);
        }
        Self {
            kind: self.kind,
            encoding,
            sign: self.sign,
        }
    }

    /// The smallest positive `k` with `rotate(k) == self`.
    pub fn period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&k| n.is_multiple_of(k) && self.encoding[..n - k] == self.encoding[k..])
            .unwrap_or(n.max(1))
    }

    /// The lexicographically least rotation of the encoding.
    pub fn min_rotation(&self) -> Vec<Symbol> {
        (0..self.period())
            .map(|k| self.rotate(k).encoding)
            .min()
            .unwrap_or_default()
    }

    pub fn letters(&self) -> Option<Vec<i64>> {
        self.encoding
            .iter()
            .map(|s| match s {
                Symbol::Letter(x) => Some(*x),
                Symbol::Bead(_) | Symbol::Tubes(_) => None,
            })
            .collect()
    }
}

/// Objects fixed by the subgroup `C_d`, i.e. by rotation through `n/d`
/// slots, where `n` is the common length.
pub fn fixed_points(set: &[CyclicObject], n: usize, d: usize) -> Result<Vec<CyclicObject>> {
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::InvalidArgument(format!("{d} does not divide {n}")));
    }
    let step = n / d;
    Ok(set
        .iter()
        .filter(|x| x.len() == n && step.is_multiple_of(x.period()))
        .cloned()
        .collect())
}

/// Orbit sizes and how many orbits have each size.
pub fn orbit_census(set: &[CyclicObject]) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for x in set {
        *census.entry(x.period()).or_insert(0) += 1;
    }
    for (size, count) in census.iter_mut() {
        *count /= *size;
    }
    census
}

/// An orbit id for each object, numbered by first appearance.
pub fn orbit_ids(set: &[CyclicObject]) -> Vec<usize> {
    let mut seen: HashMap<Vec<Symbol>, usize> = HashMap::new();
    set.iter()
        .map(|x| {
            let next = seen.len();
            *seen.entry(x.min_rotation()).or_insert(next)
        })
        .collect()
}

/// Objects generated for every element of a window, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicFamily {
    pub instance: SemigroupInstance,
    pub window: Window,
    sets: BTreeMap<RankedElement, Vec<CyclicObject>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectRecord<'a> {
    pub s: &'a RankedElement,
    pub encoding: &'a [Symbol],
    #[serde(skip_serializing_if = "is_positive")]
    pub sign: i8,
    pub orbit: usize,
}

fn is_positive(x: &i8) -> bool {
    *x > 0
}

impl CyclicFamily {
    /// Generate `X_s` for every `s` in the window. Each set is sorted and
    /// deduplicated.
    pub fn generate(
        instance: SemigroupInstance,
        window: Window,
        mut generator: impl FnMut(&RankedElement) -> Result<Vec<CyclicObject>>,
    ) -> Result<Self> {
        let mut sets = BTreeMap::new();
        for s in instance.window_elements(&window)? {
            let mut set = generator(&s)?;
            set.sort();
            set.dedup();
            sets.insert(s, set);
        }
        Ok(Self { instance, window, sets })
    }

    pub fn get(&self, s: &RankedElement) -> Result<&[CyclicObject]> {
        self.sets
            .get(s)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::MissingValue(self.instance.describe(s)))
    }

    pub fn elements(&self) -> Result<Vec<RankedElement>> {
        self.instance.window_elements(&self.window)
    }

    /// `#X_s` for every `s`, as an a-sequence.
    pub fn cardinalities(&self) -> Result<crate::gaussseq::SequenceSpec> {
        crate::gaussseq::SequenceSpec::from_fn(
            self.instance.clone(),
            self.window.clone(),
            crate::gaussseq::Role::A,
            |s| self.sets.get(s).map_or(0, Vec::len).into(),
        )
    }

    /// `#X_s^+ - #X_s^-` for every `s`, as an a-sequence.
    pub fn signed_cardinalities(&self) -> Result<crate::gaussseq::SequenceSpec> {
        crate::gaussseq::SequenceSpec::from_fn(
            self.instance.clone(),
            self.window.clone(),
            crate::gaussseq::Role::A,
            |s| {
                self.sets
                    .get(s)
                    .map_or(0, |v| v.iter().map(|x| i64::from(x.sign)).sum::<i64>())
                    .into()
            },
        )
    }

    /// A copy with one object removed from `X_s`, for negative tests.
    pub fn without_one(&self, s: &RankedElement) -> Result<Self> {
        let mut out = self.clone();
        let set = out
            .sets
            .get_mut(s)
            .ok_or_else(|| Error::MissingValue(self.instance.describe(s)))?;
        set.pop();
        Ok(out)
    }

    /// Records for a JSON-lines dump.
    pub fn records(&self) -> Result<Vec<ObjectRecord<'_>>> {
        let mut out = Vec::new();
        for (s, set) in &self.sets {
            let ids = orbit_ids(set);
            for (x, orbit) in set.iter().zip(ids) {
                out.push(ObjectRecord {
                    s,
                    encoding: &x.encoding,
                    sign: x.sign,
                    orbit,
                });
            }
        }
        Ok(out)
    }
}
