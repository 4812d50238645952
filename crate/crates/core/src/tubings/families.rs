use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{enumerate_tubings, Graph, Tubing};
use crate::error::{Error, Result};
use crate::objects::{CyclicFamily, CyclicObject};
use crate::semigroup::{Component, RankedElement, SemigroupInstance, Window};

/// The statistic indexing the second coordinate of a tubing family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TubingStat {
    FreeVertices,
    Tubes,
}

impl TubingStat {
    fn of(self, t: &Tubing) -> i64 {
        match self {
            TubingStat::FreeVertices => t.free_vertices().len() as i64,
            TubingStat::Tubes => t.num_tubes() as i64,
        }
    }

    /// Smallest value of the statistic on an improper tubing.
    pub fn min(self) -> i64 {
        match self {
            TubingStat::FreeVertices => 1,
            TubingStat::Tubes => 0,
        }
    }
}

/// Tubings of `Γ_n` with at least one free vertex.
pub fn improper_cycle_tubings(n: usize) -> Result<Vec<Tubing>> {
    Ok(enumerate_tubings(Graph::Cycle(n))?
        .into_iter()
        .filter(|t| !t.is_proper())
        .collect())
}

struct Cache(HashMap<u64, Vec<Tubing>>);

impl Cache {
    fn get(&mut self, n: u64) -> Result<&[Tubing]> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.0.entry(n) {
            e.insert(improper_cycle_tubings(n as usize)?);
        }
        Ok(&self.0[&n])
    }
}

fn pair(s: &RankedElement) -> Result<(u64, i64)> {
    match (s.as_int(), s.extras()) {
        (Some(n), [k]) => Ok((n, *k)),
        _ => Err(Error::InvalidElement(s.to_string())),
    }
}

/// `X_{n,k}`: improper tubings of `Γ_n` whose statistic equals `k`, on
/// `ℤ≥1[ℤ]` for `n ≤ max_n` and `min ≤ k ≤ max_n`.
pub fn tubing_family(stat: TubingStat, max_n: u64) -> Result<CyclicFamily> {
    coloured(stat, max_n, 1)
}

/// `X_{n,k}` by number of tubes, each tube in one of `lambda` colours.
pub fn coloured_tubings_family(max_n: u64, lambda: u32) -> Result<CyclicFamily> {
    coloured(TubingStat::Tubes, max_n, lambda)
}

fn coloured(stat: TubingStat, max_n: u64, lambda: u32) -> Result<CyclicFamily> {
    let inst = SemigroupInstance::chain(SemigroupInstance::PositiveInts, &[Component::Ints]);
    let window = Window::rank(max_n).with_extra_bounds(stat.min(), max_n as i64);
    let mut cache = Cache(HashMap::new());
    CyclicFamily::generate(inst, window, |s| {
        let (n, k) = pair(s)?;
        let mut out = Vec::new();
        for t in cache.get(n)?.iter().filter(|t| stat.of(t) == k) {
            out.extend(colourings(t, lambda)?);
        }
        Ok(out)
    })
}

fn colourings(t: &Tubing, lambda: u32) -> Result<Vec<CyclicObject>> {
    let mut colors = vec![0; t.num_tubes()];
    let mut out = Vec::new();
    if lambda == 0 && !colors.is_empty() {
        return Ok(out);
    }
    'next: loop {
        out.push(t.to_object_coloured(&colors)?);
        for c in colors.iter_mut() {
            *c += 1;
            if *c < lambda {
                continue 'next;
            }
            *c = 0;
        }
        return Ok(out);
    }
}

/// `X_n`: every improper tubing of `Γ_n`, on `ℤ≥1`.
pub fn all_tubings_family(max_n: u64) -> Result<CyclicFamily> {
    CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(max_n), |s| {
        let n = s.as_int().ok_or_else(|| Error::InvalidElement(s.to_string()))?;
        improper_cycle_tubings(n as usize)?
            .iter()
            .map(Tubing::to_object)
            .collect()
    })
}
