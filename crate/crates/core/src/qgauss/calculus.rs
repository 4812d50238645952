use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PolyFamily;
use crate::error::{Error, Result};
use crate::qpoly::IntPolynomial;
use crate::semigroup::{
    check_morphism, MorphismKind, MorphismSpec, RankedElement, SemigroupInstance, Window, WindowEdge,
};

/// The result of a pushforward, with warnings about preimages that may have
/// been cut off by the source window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushforward {
    pub family: PolyFamily,
    pub warnings: Vec<String>,
}

fn precondition(m: &MorphismSpec, report: crate::semigroup::MorphismReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "morphism {} fails its preconditions: {report:?}",
            m.name
        )))
    }
}

/// `g_t = Σ_{s ∈ φ^{-1}(t)} f_s` over the preimages inside the source window.
///
/// Preimages outside the source window are invisible, so a warning is
/// emitted for every target element with a nonzero preimage on a window
/// bound that the image does not pin down.
pub fn pushforward(f: &PolyFamily, m: &MorphismSpec, target_window: Window) -> Result<Pushforward> {
    if m.source != f.instance {
        return Err(Error::MixedInstance(format!(
            "morphism {} does not start at the family's instance",
            m.name
        )));
    }
    precondition(
        m,
        check_morphism(m, Some(MorphismKind::RankDividing), &f.window, false)?,
    )?;
    let pinned = PinnedDirections::new(m);
    let mut sums: BTreeMap<RankedElement, IntPolynomial> = BTreeMap::new();
    let mut flagged: BTreeMap<RankedElement, String> = BTreeMap::new();
    for (s, p) in f.entries()? {
        let t = m.apply(&s)?;
        if !m.target.in_window(&t, &target_window) {
            continue;
        }
        if !p.is_zero() {
            let loose: Vec<WindowEdge> = f
                .instance
                .window_edges(&s, &f.window)
                .into_iter()
                .filter(|e| !pinned.pins(&f.instance, *e))
                .collect();
            if !loose.is_empty() {
                flagged.entry(t.clone()).or_insert_with(|| {
                    format!(
                        "preimage {} of {} touches the source window at {loose:?}",
                        f.instance.describe(&s),
                        m.target.describe(&t)
                    )
                });
            }
        }
        *sums.entry(t).or_default() += &p;
    }
    let mut warnings = Vec::new();
    if target_window.max_rank > f.window.max_rank {
        warnings.push(format!(
            "target max_rank {} exceeds source max_rank {}",
            target_window.max_rank, f.window.max_rank
        ));
    }
    warnings.extend(flagged.into_values());
    for w in &warnings {
        log::warn!("{w}");
    }
    let family = PolyFamily::from_fn(m.target.clone(), target_window, |t| {
        sums.get(t).cloned().unwrap_or_default()
    })?;
    Ok(Pushforward { family, warnings })
}

/// `f_s = g_{φ(s)}` on `source_window`.
pub fn pullback(g: &PolyFamily, m: &MorphismSpec, source_window: Window) -> Result<PolyFamily> {
    if m.target != g.instance {
        return Err(Error::MixedInstance(format!(
            "morphism {} does not end at the family's instance",
            m.name
        )));
    }
    precondition(
        m,
        check_morphism(m, Some(MorphismKind::RankMultiplying), &source_window, true)?,
    )?;
    PolyFamily::try_from_fn(m.source.clone(), source_window, |s| Ok(g.get(&m.apply(s)?)?.clone()))
}

/// The pointwise product `f_s g_s`.
pub fn multiply(f: &PolyFamily, g: &PolyFamily) -> Result<PolyFamily> {
    if f.instance != g.instance || f.window != g.window {
        return Err(Error::MixedInstance(
            "families live on different instances or windows".into(),
        ));
    }
    PolyFamily::try_from_fn(f.instance.clone(), f.window.clone(), |s| Ok(f.get(s)? * g.get(s)?))
}

fn chain_parts(inst: &SemigroupInstance) -> Result<(&SemigroupInstance, &[crate::semigroup::Component])> {
    match inst {
        SemigroupInstance::Chain { base, extras } => Ok((base, extras)),
        _ => Err(Error::InvalidArgument("chaining needs chained instances".into())),
    }
}

fn intersect(a: &Window, b: &Window) -> Window {
    let mut w = Window::rank(a.max_rank.min(b.max_rank));
    w.extra_bounds = match (a.extra_bounds, b.extra_bounds) {
        (Some((l1, h1)), Some((l2, h2))) => Some((l1.max(l2), h1.min(h2))),
        (x, y) => x.or(y),
    };
    w.max_size = match (a.max_size, b.max_size) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    };
    w
}

/// `h_{s,t,u} = f_{s,t} g_{s,u}` for `F` on `S[T]` and `G` on `S[U]`, where
/// `S` is the common base and `T`, `U` are the extra coordinates. The result
/// lives on `S[T][U]` over the intersection of the two windows.
pub fn chain_prefix(f: &PolyFamily, g: &PolyFamily) -> Result<PolyFamily> {
    let (fb, ft) = chain_parts(&f.instance)?;
    let (gb, gu) = chain_parts(&g.instance)?;
    if fb != gb {
        return Err(Error::MixedInstance("chain_prefix needs a common base".into()));
    }
    let extras: Vec<_> = ft.iter().chain(gu).copied().collect();
    let inst = SemigroupInstance::chain(fb.clone(), &extras);
    let nt = ft.len();
    PolyFamily::try_from_fn(inst, intersect(&f.window, &g.window), |s| {
        let RankedElement::Chain { base, extras } = s else {
            unreachable!()
        };
        let st = RankedElement::Chain {
            base: base.clone(),
            extras: extras[..nt].to_vec(),
        };
        let su = RankedElement::Chain {
            base: base.clone(),
            extras: extras[nt..].to_vec(),
        };
        Ok(f.get(&st)? * g.get(&su)?)
    })
}

/// `h_{s,t,u} = f_{s,t} g_{t,u}` for `F` on `S[T]`, where `t` is the last
/// extra coordinate, and `G` on `ℤ≥1[U]`. Elements with `t < 1` get `0`.
/// The result lives on `S[T][U]` over the window of `F`.
pub fn chain_suffix(f: &PolyFamily, g: &PolyFamily) -> Result<PolyFamily> {
    let (fb, ft) = chain_parts(&f.instance)?;
    let (gb, gu) = chain_parts(&g.instance)?;
    if *gb != SemigroupInstance::PositiveInts {
        return Err(Error::InvalidArgument(
            "chain_suffix needs the second family on ℤ≥1[U]".into(),
        ));
    }
    let extras: Vec<_> = ft.iter().chain(gu).copied().collect();
    let inst = SemigroupInstance::chain(fb.clone(), &extras);
    let nt = ft.len();
    PolyFamily::try_from_fn(inst, f.window.clone(), |s| {
        let RankedElement::Chain { base, extras } = s else {
            unreachable!()
        };
        let t = extras[nt - 1];
        if t < 1 {
            return Ok(IntPolynomial::zero());
        }
        let st = RankedElement::Chain {
            base: base.clone(),
            extras: extras[..nt].to_vec(),
        };
        let tu = RankedElement::tuple(t as u64, &extras[nt..]);
        Ok(f.get(&st)? * g.get(&tu)?)
    })
}

/// The row space of a morphism matrix, used to decide which coordinate
/// directions are constant on fibres.
struct PinnedDirections {
    rows: Vec<Vec<BigRational>>,
}

impl PinnedDirections {
    fn new(m: &MorphismSpec) -> Self {
        let rows = m
            .matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        Self { rows: echelon(rows) }
    }

    fn contains(&self, v: Vec<BigRational>) -> bool {
        let mut rows = self.rows.clone();
        let before = rows.len();
        rows.push(v);
        echelon(rows).len() == before
    }

    fn pins(&self, inst: &SemigroupInstance, edge: WindowEdge) -> bool {
        let dim = inst.dimension();
        let v: Vec<BigRational> = match edge {
            WindowEdge::Rank => inst
                .rank_functional()
                .into_iter()
                .map(|x| BigRational::from_integer(x.into()))
                .collect(),
            WindowEdge::Size => {
                let free_dim = match inst {
                    SemigroupInstance::Chain { base, .. } => base.dimension(),
                    other => other.dimension(),
                };
                (0..dim)
                    .map(|i| {
                        if i < free_dim {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            }
            WindowEdge::Coord(c) => (0..dim)
                .map(|i| {
                    if i == c {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        };
        self.contains(v)
    }
}

// Row-reduce and drop zero rows.
fn echelon(mut rows: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &pivot;
                for j in 0..cols {
                    let delta = &factor * &rows[rank][j];
                    rows[i][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}
