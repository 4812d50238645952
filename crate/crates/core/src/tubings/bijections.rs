use serde::Serialize;

use super::paths::{PathWord, Step};
use super::{Graph, Tube, Tubing, VertexClass};
use crate::error::{Error, Result};

/// Walk the vertices in order: each tube starting at a vertex contributes
/// `U` (outermost first), then the vertex contributes `D` if it is final and
/// `F` otherwise.
pub fn interval_tubing_to_schroder(t: &Tubing) -> Result<PathWord> {
    let Graph::Interval(n) = t.graph() else {
        return Err(Error::InvalidArgument("expected a tubing of an interval graph".into()));
    };
    let classes = t.classify_vertices();
    let mut steps = Vec::new();
    for v in 0..n {
        let opening = t.tubes().iter().filter(|tube| tube.start == v).count();
        steps.extend(std::iter::repeat_n(Step::Up, opening));
        steps.push(if classes[v] == VertexClass::Final {
            Step::Down
        } else {
            Step::Flat
        });
    }
    Ok(PathWord(steps))
}

/// Each `U` at height `h` opens a tube at the next vertex, closed just
/// before the next `F` or `D` at height `h`, or at the end of the path.
pub fn schroder_to_interval_tubing(p: &PathWord) -> Result<Tubing> {
    if !p.is_schroder() || p.steps().is_empty() {
        return Err(Error::Malformed(format!("{p} is not a nonempty Schröder path")));
    }
    let steps = p.steps();
    let heights = p.heights();
    let n = p.length() / 2;
    let mut vertices_before = Vec::with_capacity(steps.len());
    let mut seen = 0;
    for &s in steps {
        vertices_before.push(seen);
        if s != Step::Up {
            seen += 1;
        }
    }
    let mut tubes = Vec::new();
    for (i, &s) in steps.iter().enumerate() {
        if s != Step::Up {
            continue;
        }
        let h = heights[i];
        let end = (i + 1..steps.len())
            .find(|&k| steps[k] != Step::Up && heights[k] == h)
            .map_or(n, |k| vertices_before[k]);
        tubes.push(Tube::new(vertices_before[i], end - vertices_before[i]));
    }
    Tubing::new(Graph::Interval(n), tubes)
}

/// A Schröder path ending in a flat step, with a marked step `j`
/// (1-based) that is `F` or `D` and comes no later than the first flat step
/// at height 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedSchroder {
    pub path: PathWord,
    pub j: usize,
}

impl MarkedSchroder {
    pub fn validate(&self) -> Result<()> {
        let steps = self.path.steps();
        let heights = self.path.heights();
        let bad = |why: &str| Err(Error::Malformed(format!("({}, {}): {why}", self.path, self.j)));
        if !self.path.is_schroder() || steps.last() != Some(&Step::Flat) {
            return bad("not a Schröder path ending in a flat step");
        }
        let first_zero_flat = (0..steps.len())
            .find(|&k| steps[k] == Step::Flat && heights[k] == 0)
            .expect("the last step is a flat step at height 0");
        if self.j == 0 || self.j > first_zero_flat + 1 || steps[self.j - 1] == Step::Up {
            return bad("marked step is out of range or an up step");
        }
        Ok(())
    }
}

fn check_cycle(t: &Tubing, basepoint: usize) -> Result<usize> {
    let Graph::Cycle(n) = t.graph() else {
        return Err(Error::InvalidArgument("expected a tubing of a cycle graph".into()));
    };
    if basepoint >= n {
        return Err(Error::InvalidArgument(format!(
            "basepoint {basepoint} is not a vertex of Γ_{n}"
        )));
    }
    Ok(n)
}

/// Cut the cycle just after the last free vertex before `basepoint`, read
/// the resulting interval tubing as a Schröder path, and mark the step of
/// `basepoint`.
pub fn cycle_tubing_to_marked(t: &Tubing, basepoint: usize) -> Result<MarkedSchroder> {
    let n = check_cycle(t, basepoint)?;
    let free = t.free_vertices();
    if free.is_empty() {
        return Err(Error::InvalidArgument(
            "proper cycle tubings have no free vertex to cut at".into(),
        ));
    }
    let r = (1..=n)
        .find(|r| free.contains(&((basepoint + n - r) % n)))
        .expect("a free vertex exists");
    let start = (basepoint + n + 1 - r) % n;
    let tubes = t
        .tubes()
        .iter()
        .map(|tube| Tube::new((tube.start + n - start) % n, tube.len))
        .collect();
    let path = interval_tubing_to_schroder(&Tubing::new(Graph::Interval(n), tubes)?)?;
    let i = (basepoint + n - start) % n;
    let j = path
        .steps()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s != Step::Up)
        .nth(i)
        .map(|(k, _)| k + 1)
        .expect("one non-up step per vertex");
    Ok(MarkedSchroder { path, j })
}

/// Inverse of [`cycle_tubing_to_marked`].
pub fn marked_to_cycle_tubing(m: &MarkedSchroder, basepoint: usize) -> Result<Tubing> {
    m.validate()?;
    let interval = schroder_to_interval_tubing(&m.path)?;
    let n = interval.graph().order();
    if basepoint >= n {
        return Err(Error::InvalidArgument(format!(
            "basepoint {basepoint} is not a vertex of Γ_{n}"
        )));
    }
    let i = m.path.steps()[..m.j - 1].iter().filter(|&&s| s != Step::Up).count();
    let start = (basepoint + n - i) % n;
    let tubes = interval
        .tubes()
        .iter()
        .map(|t| Tube::new((t.start + start) % n, t.len))
        .collect();
    Tubing::new(Graph::Cycle(n), tubes)
}

/// Drop the final flat step, and unless it was the marked one, swap the
/// parts before and after the marked step.
pub fn marked_to_delannoy(m: &MarkedSchroder) -> Result<PathWord> {
    m.validate()?;
    let steps = m.path.steps();
    let last = steps.len() - 1;
    if m.j == steps.len() {
        return Ok(PathWord(steps[..last].to_vec()));
    }
    let mut out = steps[m.j..last].to_vec();
    out.push(steps[m.j - 1]);
    out.extend_from_slice(&steps[..m.j - 1]);
    Ok(PathWord(out))
}

/// Inverse of [`marked_to_delannoy`]. A strict Schröder path gets a final
/// flat step marked. Otherwise the pivot is the last flat step at the lowest
/// level the path reaches, or failing that the down step first reaching
/// that level. With the path written `B x A` around the pivot `x`, the
/// result is `A x B F` marked at `x`.
pub fn delannoy_to_marked(p: &PathWord) -> Result<MarkedSchroder> {
    if !p.is_delannoy() {
        return Err(Error::Malformed(format!("{p} does not return to height 0")));
    }
    let steps = p.steps();
    if p.is_strict() {
        let mut path = steps.to_vec();
        path.push(Step::Flat);
        let j = path.len();
        return Ok(MarkedSchroder {
            path: PathWord(path),
            j,
        });
    }
    let heights = p.heights();
    let low = heights.iter().copied().min().expect("nonstrict paths are nonempty");
    let pivot = match (0..steps.len())
        .rev()
        .find(|&k| steps[k] == Step::Flat && heights[k] == low)
    {
        Some(k) => k,
        None => heights.iter().position(|&h| h == low).expect("the minimum is attained") - 1,
    };
    let mut path = steps[pivot + 1..].to_vec();
    let j = path.len() + 1;
    path.push(steps[pivot]);
    path.extend_from_slice(&steps[..pivot]);
    path.push(Step::Flat);
    Ok(MarkedSchroder {
        path: PathWord(path),
        j,
    })
}

/// Bijection from improper tubings of `Γ_n` with `k` tubes to
/// Delannoy paths of length `2(n-1)` with `n-k-1` flat steps.
pub fn cycle_tubing_to_delannoy(t: &Tubing, basepoint: usize) -> Result<PathWord> {
    marked_to_delannoy(&cycle_tubing_to_marked(t, basepoint)?)
}

pub fn delannoy_to_cycle_tubing(p: &PathWord, basepoint: usize) -> Result<Tubing> {
    marked_to_cycle_tubing(&delannoy_to_marked(p)?, basepoint)
}
