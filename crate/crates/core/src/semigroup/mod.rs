//! Concrete ranked semigroups: the positive integers, free ranked semigroups
//! on a finite set of beads, and chained products with integer coordinates.
//!
//! Every element has a flat integer coordinate vector (see
//! [`RankedElement::coords`]); the semigroup operation is coordinatewise
//! addition and the rank is a linear functional of the coordinates. This is
//! what lets morphisms be described as integer matrices.

mod morphism;

use std::fmt;

use num_integer::Integer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::arith::divisors;
use crate::error::{Error, Result};

pub use morphism::{check_morphism, MorphismKind, MorphismReport, MorphismSpec};

/// The admissible values of an extra chained coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Ints,
    NonnegInts,
    PositiveInts,
}

impl Component {
    pub fn admits(self, v: i64) -> bool {
        match self {
            Component::Ints => true,
            Component::NonnegInts => v >= 0,
            Component::PositiveInts => v >= 1,
        }
    }
}

/// A generator of a free ranked semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bead {
    pub label: String,
    pub length: i64,
}

impl Bead {
    pub fn new(label: impl Into<String>, length: i64) -> Self {
        Self {
            label: label.into(),
            length,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SemigroupInstance {
    /// `ℤ≥1` ranked by the identity.
    PositiveInts,
    /// Finitely supported multiplicity maps on `beads`, ranked by total
    /// bead length.
    FreeRanked { beads: Vec<Bead> },
    /// `base[extra_1][extra_2]...`, ranked by the base.
    Chain {
        base: Box<SemigroupInstance>,
        extras: Vec<Component>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RankedElement {
    Int(u64),
    Free(Vec<u64>),
    Chain { base: Box<RankedElement>, extras: Vec<i64> },
}

impl RankedElement {
    /// The chained element `(n, extras...)` over `ℤ≥1`.
    pub fn tuple(n: u64, extras: &[i64]) -> Self {
        RankedElement::Chain {
            base: Box::new(RankedElement::Int(n)),
            extras: extras.to_vec(),
        }
    }

    /// Flat integer coordinates: base coordinates followed by extras.
    pub fn coords(&self) -> Vec<i64> {
        match self {
            RankedElement::Int(n) => vec![*n as i64],
            RankedElement::Free(m) => m.iter().map(|&x| x as i64).collect(),
            RankedElement::Chain { base, extras } => {
                let mut c = base.coords();
                c.extend_from_slice(extras);
                c
            }
        }
    }

    /// The base `ℤ≥1` value, if the element lives over the positive integers.
    pub fn as_int(&self) -> Option<u64> {
        match self {
            RankedElement::Int(n) => Some(*n),
            RankedElement::Chain { base, .. } => base.as_int(),
            RankedElement::Free(_) => None,
        }
    }

    /// The extra coordinates of a chained element (empty otherwise).
    pub fn extras(&self) -> &[i64] {
        match self {
            RankedElement::Chain { extras, .. } => extras,
            _ => &[],
        }
    }
}

impl fmt::Display for RankedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankedElement::Int(n) => write!(f, "{n}"),
            _ => {
                let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

// A positive integer is written as a number, anything else as its flat
// coordinate list.
impl Serialize for RankedElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RankedElement::Int(n) => serializer.serialize_u64(*n),
            _ => {
                let coords = self.coords();
                let mut seq = serializer.serialize_seq(Some(coords.len()))?;
                for c in coords {
                    seq.serialize_element(&c)?;
                }
                seq.end()
            }
        }
    }
}

/// A finite window of a semigroup: all elements of rank at most `max_rank`
/// whose extra coordinates lie in `extra_bounds` and, for free instances,
/// whose size is at most `max_size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Window {
    pub max_rank: u64,
    #[serde(default)]
    pub extra_bounds: Option<(i64, i64)>,
    #[serde(default)]
    pub max_size: Option<u64>,
}

impl Window {
    pub fn rank(max_rank: u64) -> Self {
        Self {
            max_rank,
            extra_bounds: None,
            max_size: None,
        }
    }

    pub fn with_extra_bounds(mut self, lo: i64, hi: i64) -> Self {
        self.extra_bounds = Some((lo, hi));
        self
    }

    pub fn with_max_size(mut self, max_size: u64) -> Self {
        self.max_size = Some(max_size);
        self
    }
}

/// A multiset of elements, stored as distinct parts with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    pub parts: Vec<(RankedElement, u64)>,
}

impl Decomposition {
    /// Total number of parts counted with multiplicity.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|(_, m)| m).sum()
    }

    /// The parts listed with repetition.
    pub fn expanded(&self) -> Vec<RankedElement> {
        self.parts
            .iter()
            .flat_map(|(e, m)| std::iter::repeat_n(e.clone(), *m as usize))
            .collect()
    }
}

impl SemigroupInstance {
    pub fn free(beads: Vec<Bead>) -> Self {
        SemigroupInstance::FreeRanked { beads }
    }

    /// Chain `extras` onto `base`; chaining onto a chain extends it.
    pub fn chain(base: SemigroupInstance, extras: &[Component]) -> Self {
        match base {
            SemigroupInstance::Chain {
                base,
                extras: mut existing,
            } => {
                existing.extend_from_slice(extras);
                SemigroupInstance::Chain { base, extras: existing }
            }
            base => SemigroupInstance::Chain {
                base: Box::new(base),
                extras: extras.to_vec(),
            },
        }
    }

    /// Length of the coordinate vector.
    pub fn dimension(&self) -> usize {
        match self {
            SemigroupInstance::PositiveInts => 1,
            SemigroupInstance::FreeRanked { beads } => beads.len(),
            SemigroupInstance::Chain { base, extras } => base.dimension() + extras.len(),
        }
    }

    /// The rank as a linear functional on coordinates.
    pub fn rank_functional(&self) -> Vec<i64> {
        match self {
            SemigroupInstance::PositiveInts => vec![1],
            SemigroupInstance::FreeRanked { beads } => beads.iter().map(|b| b.length).collect(),
            SemigroupInstance::Chain { base, extras } => {
                let mut r = base.rank_functional();
                r.extend(std::iter::repeat_n(0, extras.len()));
                r
            }
        }
    }

    fn invalid(&self, el: &RankedElement) -> Error {
        Error::InvalidElement(self.describe(el))
    }

    /// Human-readable form of `el`, using bead labels for free instances.
    pub fn describe(&self, el: &RankedElement) -> String {
        match (self, el) {
            (SemigroupInstance::FreeRanked { beads }, RankedElement::Free(m)) if beads.len() == m.len() => {
                let parts: Vec<String> = beads
                    .iter()
                    .zip(m)
                    .filter(|(_, &k)| k > 0)
                    .map(|(b, k)| format!("{}:{}", b.label, k))
                    .collect();
                format!("{{{}}}", parts.join(","))
            }
            _ => el.to_string(),
        }
    }

    fn raw_rank(&self, el: &RankedElement) -> Option<i64> {
        match (self, el) {
            (SemigroupInstance::PositiveInts, RankedElement::Int(n)) => Some(*n as i64),
            (SemigroupInstance::FreeRanked { beads }, RankedElement::Free(m)) if beads.len() == m.len() => {
                Some(beads.iter().zip(m).map(|(b, &k)| b.length * k as i64).sum())
            }
            (SemigroupInstance::Chain { base, extras }, RankedElement::Chain { base: b, extras: e })
                if extras.len() == e.len() =>
            {
                base.raw_rank(b)
            }
            _ => None,
        }
    }

    pub fn contains(&self, el: &RankedElement) -> bool {
        let shape_ok = match (self, el) {
            (SemigroupInstance::PositiveInts, RankedElement::Int(_)) => true,
            (SemigroupInstance::FreeRanked { .. }, RankedElement::Free(m)) => m.iter().any(|&k| k > 0),
            (SemigroupInstance::Chain { base, extras }, RankedElement::Chain { base: b, extras: e }) => {
                extras.len() == e.len() && extras.iter().zip(e).all(|(c, &v)| c.admits(v)) && base.contains(b)
            }
            _ => false,
        };
        shape_ok && self.raw_rank(el).is_some_and(|r| r >= 1)
    }

    pub fn validate(&self, el: &RankedElement) -> Result<()> {
        if self.contains(el) {
            Ok(())
        } else {
            Err(self.invalid(el))
        }
    }

    pub fn rank(&self, el: &RankedElement) -> Result<u64> {
        self.validate(el)?;
        Ok(self.raw_rank(el).expect("validated element has a rank") as u64)
    }

    /// Build an element from flat coordinates, validating membership.
    pub fn from_coords(&self, coords: &[i64]) -> Result<RankedElement> {
        let el = self
            .assemble(coords)
            .ok_or_else(|| Error::InvalidElement(format!("{coords:?} does not have the shape of an element")))?;
        self.validate(&el)?;
        Ok(el)
    }

    fn assemble(&self, coords: &[i64]) -> Option<RankedElement> {
        if coords.len() != self.dimension() {
            return None;
        }
        match self {
            SemigroupInstance::PositiveInts => u64::try_from(coords[0]).ok().map(RankedElement::Int),
            SemigroupInstance::FreeRanked { .. } => coords
                .iter()
                .map(|&c| u64::try_from(c).ok())
                .collect::<Option<Vec<_>>>()
                .map(RankedElement::Free),
            SemigroupInstance::Chain { base, .. } => {
                let k = base.dimension();
                Some(RankedElement::Chain {
                    base: Box::new(base.assemble(&coords[..k])?),
                    extras: coords[k..].to_vec(),
                })
            }
        }
    }

    fn mixed(&self, s: &RankedElement, t: &RankedElement) -> Error {
        Error::MixedInstance(format!("{} and {}", s, t))
    }

    pub fn add(&self, s: &RankedElement, t: &RankedElement) -> Result<RankedElement> {
        if !self.contains(s) || !self.contains(t) {
            return Err(self.mixed(s, t));
        }
        let sum: Vec<i64> = s.coords().iter().zip(t.coords()).map(|(a, b)| a + b).collect();
        self.from_coords(&sum)
    }

    /// `d·t`.
    pub fn scale(&self, t: &RankedElement, d: u64) -> Result<RankedElement> {
        self.validate(t)?;
        let c: Vec<i64> = t.coords().iter().map(|&x| x * d as i64).collect();
        self.from_coords(&c)
    }

    /// All pairs `(t, d)` with `d·t = s`, by increasing `d`.
    pub fn unit_divisors(&self, s: &RankedElement) -> Result<Vec<(RankedElement, u64)>> {
        let r = self.rank(s)?;
        let coords = s.coords();
        let mut out = Vec::new();
        for d in divisors(r)? {
            if coords.iter().all(|c| c.is_multiple_of(&(d as i64))) {
                let c: Vec<i64> = coords.iter().map(|x| x / d as i64).collect();
                if let Ok(t) = self.from_coords(&c) {
                    out.push((t, d));
                }
            }
        }
        Ok(out)
    }

    /// The set `s/d = {t : d·t = s}`, empty or a singleton.
    pub fn root_set(&self, s: &RankedElement, d: u64) -> Result<Vec<RankedElement>> {
        self.validate(s)?;
        if d == 0 {
            return Err(Error::InvalidArgument("root order must be positive".into()));
        }
        let coords = s.coords();
        if !coords.iter().all(|c| c.is_multiple_of(&(d as i64))) {
            return Ok(Vec::new());
        }
        let c: Vec<i64> = coords.iter().map(|x| x / d as i64).collect();
        Ok(self.from_coords(&c).into_iter().collect())
    }

    /// The set `s - t = {u : u + t = s}`, empty or a singleton.
    pub fn difference_set(&self, s: &RankedElement, t: &RankedElement) -> Result<Vec<RankedElement>> {
        if !self.contains(s) || !self.contains(t) {
            return Err(self.mixed(s, t));
        }
        let diff: Vec<i64> = s.coords().iter().zip(t.coords()).map(|(a, b)| a - b).collect();
        Ok(self.from_coords(&diff).into_iter().collect())
    }

    fn has_unbounded_parts(&self) -> bool {
        match self {
            SemigroupInstance::PositiveInts => false,
            SemigroupInstance::FreeRanked { .. } => false,
            SemigroupInstance::Chain { base, extras } => {
                base.has_unbounded_parts() || extras.contains(&Component::Ints)
            }
        }
    }

    // Every element `u` with `u + v = s` for some `v` or `u = s`, where each
    // coordinate is bounded by the corresponding coordinate of `s`.
    fn bounded_parts(&self, s: &RankedElement) -> Vec<RankedElement> {
        let coords = s.coords();
        let lower: Vec<i64> = self.coordinate_lower_bounds();
        let mut out = Vec::new();
        let mut cur = lower.clone();
        loop {
            if let Ok(u) = self.from_coords(&cur) {
                out.push(u);
            }
            let mut i = 0;
            loop {
                if i == cur.len() {
                    return out;
                }
                if cur[i] < coords[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lower[i];
                i += 1;
            }
        }
    }

    fn coordinate_lower_bounds(&self) -> Vec<i64> {
        match self {
            SemigroupInstance::PositiveInts => vec![1],
            SemigroupInstance::FreeRanked { beads } => vec![0; beads.len()],
            SemigroupInstance::Chain { base, extras } => {
                let mut l = base.coordinate_lower_bounds();
                l.extend(extras.iter().map(|c| match c {
                    Component::PositiveInts => 1,
                    _ => 0,
                }));
                l
            }
        }
    }

    /// All multisets of elements summing to `s`, in canonical order.
    ///
    /// When `support` is given, parts are drawn only from it; this is
    /// required for chains with unrestricted integer coordinates, where the
    /// full set of decompositions is infinite.
    pub fn decompositions(&self, s: &RankedElement, support: Option<&[RankedElement]>) -> Result<Vec<Decomposition>> {
        self.validate(s)?;
        let mut parts: Vec<RankedElement> = match support {
            Some(sup) => {
                let mut v = Vec::new();
                for u in sup {
                    self.validate(u)?;
                    v.push(u.clone());
                }
                v
            }
            None if self.has_unbounded_parts() => {
                return Err(Error::InfiniteDecomposition(self.describe(s)));
            }
            None => self.bounded_parts(s),
        };
        let target_rank = self.rank(s)?;
        parts.retain(|u| self.rank(u).is_ok_and(|r| r <= target_rank));
        self.sort_canonical(&mut parts);
        parts.dedup();
        let part_coords: Vec<Vec<i64>> = parts.iter().map(|u| u.coords()).collect();
        let part_ranks: Vec<u64> = parts.iter().map(|u| self.rank(u).expect("validated")).collect();
        let mut out = Vec::new();
        let mut chosen: Vec<(usize, u64)> = Vec::new();
        decompose_rec(
            &part_coords,
            &part_ranks,
            &s.coords(),
            target_rank,
            parts.len(),
            &mut chosen,
            &mut |chosen| {
                out.push(Decomposition {
                    parts: chosen.iter().map(|&(i, m)| (parts[i].clone(), m)).collect(),
                });
            },
        );
        out.sort();
        Ok(out)
    }

    /// Sort elements by rank, then by coordinates.
    pub fn sort_canonical(&self, els: &mut [RankedElement]) {
        els.sort_by_cached_key(|e| (self.raw_rank(e).unwrap_or(i64::MAX), e.coords()));
    }

    /// All elements of the window in canonical order.
    pub fn window_elements(&self, window: &Window) -> Result<Vec<RankedElement>> {
        let mut out = Vec::new();
        self.collect_window(window, &mut out)?;
        self.sort_canonical(&mut out);
        Ok(out)
    }

    fn collect_window(&self, window: &Window, out: &mut Vec<RankedElement>) -> Result<()> {
        match self {
            SemigroupInstance::PositiveInts => {
                out.extend((1..=window.max_rank).map(RankedElement::Int));
            }
            SemigroupInstance::FreeRanked { beads } => {
                let max_size = match window.max_size {
                    Some(m) => m,
                    None if beads.iter().all(|b| b.length >= 1) => window.max_rank,
                    None => {
                        return Err(Error::InvalidArgument(
                            "free instances with non-positive bead lengths need a max_size".into(),
                        ))
                    }
                };
                let mut cur = vec![0u64; beads.len()];
                free_window_rec(beads, window.max_rank as i64, max_size, 0, &mut cur, out);
            }
            SemigroupInstance::Chain { base, extras } => {
                let (lo, hi) = window.extra_bounds.ok_or_else(|| {
                    Error::InvalidArgument("chained instances need extra_bounds in the window".into())
                })?;
                let mut bases = Vec::new();
                base.collect_window(window, &mut bases)?;
                let ranges: Vec<(i64, i64)> = extras
                    .iter()
                    .map(|c| match c {
                        Component::Ints => (lo, hi),
                        Component::NonnegInts => (lo.max(0), hi),
                        Component::PositiveInts => (lo.max(1), hi),
                    })
                    .collect();
                if ranges.iter().any(|(a, b)| a > b) {
                    return Ok(());
                }
                for b in bases {
                    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
                    'outer: loop {
                        out.push(RankedElement::Chain {
                            base: Box::new(b.clone()),
                            extras: cur.clone(),
                        });
                        for i in 0..cur.len() {
                            if cur[i] < ranges[i].1 {
                                cur[i] += 1;
                                continue 'outer;
                            }
                            cur[i] = ranges[i].0;
                        }
                        break;
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `el` lies inside `window`.
    pub fn in_window(&self, el: &RankedElement, window: &Window) -> bool {
        let Ok(r) = self.rank(el) else { return false };
        if r > window.max_rank {
            return false;
        }
        if let (SemigroupInstance::FreeRanked { .. }, RankedElement::Free(m)) = (self, el) {
            if let Some(ms) = window.max_size {
                if m.iter().sum::<u64>() > ms {
                    return false;
                }
            }
        }
        match (window.extra_bounds, el.extras()) {
            (_, []) => true,
            (Some((lo, hi)), e) => e.iter().all(|&v| lo <= v && v <= hi),
            (None, _) => false,
        }
    }

    /// The window bounds that `el` sits on and beyond which the instance
    /// still has elements, so that enlarging the window in that direction
    /// would add neighbours of `el`.
    pub fn window_edges(&self, el: &RankedElement, window: &Window) -> Vec<WindowEdge> {
        let mut out = Vec::new();
        if self.rank(el).is_ok_and(|r| r == window.max_rank) {
            out.push(WindowEdge::Rank);
        }
        if let (Some(ms), Some(m)) = (window.max_size, free_part(el)) {
            if m.iter().sum::<u64>() == ms {
                out.push(WindowEdge::Size);
            }
        }
        if let (SemigroupInstance::Chain { base, extras }, Some((lo, hi))) = (self, window.extra_bounds) {
            let bd = base.dimension();
            for (i, (&v, comp)) in el.extras().iter().zip(extras).enumerate() {
                if v == hi || (v == lo && comp.admits(lo - 1)) {
                    out.push(WindowEdge::Coord(bd + i));
                }
            }
        }
        out
    }
}

/// A window bound touched by an element; see
/// [`SemigroupInstance::window_edges`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowEdge {
    Rank,
    Size,
    /// A flat coordinate index.
    Coord(usize),
}

fn free_part(el: &RankedElement) -> Option<&[u64]> {
    match el {
        RankedElement::Free(m) => Some(m),
        RankedElement::Chain { base, .. } => free_part(base),
        RankedElement::Int(_) => None,
    }
}

fn free_window_rec(
    beads: &[Bead],
    max_rank: i64,
    max_size: u64,
    i: usize,
    cur: &mut Vec<u64>,
    out: &mut Vec<RankedElement>,
) {
    if i == beads.len() {
        let size: u64 = cur.iter().sum();
        let rank: i64 = beads.iter().zip(cur.iter()).map(|(b, &k)| b.length * k as i64).sum();
        if size > 0 && (1..=max_rank).contains(&rank) {
            out.push(RankedElement::Free(cur.clone()));
        }
        return;
    }
    let used: u64 = cur[..i].iter().sum();
    for k in 0..=(max_size - used) {
        cur[i] = k;
        free_window_rec(beads, max_rank, max_size, i + 1, cur, out);
    }
    cur[i] = 0;
}

// Choose multiplicities for parts with index < `limit`, largest index first,
// so each multiset is produced once.
fn decompose_rec(
    parts: &[Vec<i64>],
    ranks: &[u64],
    remaining: &[i64],
    remaining_rank: u64,
    limit: usize,
    chosen: &mut Vec<(usize, u64)>,
    emit: &mut dyn FnMut(&[(usize, u64)]),
) {
    if remaining_rank == 0 {
        if remaining.iter().all(|&c| c == 0) {
            emit(chosen);
        }
        return;
    }
    for i in (0..limit).rev() {
        let r = ranks[i];
        if r > remaining_rank {
            continue;
        }
        let mut rest = remaining.to_vec();
        for m in 1..=remaining_rank / r {
            for (x, p) in rest.iter_mut().zip(&parts[i]) {
                *x -= p;
            }
            chosen.push((i, m));
            decompose_rec(parts, ranks, &rest, remaining_rank - m * r, i, chosen, emit);
            chosen.pop();
        }
    }
}
