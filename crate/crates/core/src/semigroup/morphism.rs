use serde::Serialize;

use super::{Component, RankedElement, SemigroupInstance, Window};
use crate::arith::divisors;
use crate::error::{Error, Result};

/// A semigroup morphism given by an integer matrix acting on flat
/// coordinates. Every morphism used in practice (rank maps, projections,
/// coordinate permutations and affine reindexings) has this form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    pub name: String,
    pub source: SemigroupInstance,
    pub target: SemigroupInstance,
    /// One row per target coordinate, one column per source coordinate.
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismKind {
    /// `rk(φ(s))` divides `rk(s)`.
    RankDividing,
    /// `rk(s)` divides `rk(φ(s))`.
    RankMultiplying,
}

impl MorphismSpec {
    pub fn linear(
        name: impl Into<String>,
        source: SemigroupInstance,
        target: SemigroupInstance,
        matrix: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if matrix.len() != target.dimension() || matrix.iter().any(|r| r.len() != source.dimension()) {
            return Err(Error::InvalidArgument(format!(
                "matrix shape does not match {} -> {} coordinates",
                source.dimension(),
                target.dimension()
            )));
        }
        Ok(Self {
            name: name.into(),
            source,
            target,
            matrix,
        })
    }

    /// The rank function onto `ℤ≥1`.
    pub fn rank_map(source: SemigroupInstance) -> Self {
        let row = source.rank_functional();
        Self {
            name: "rank".into(),
            source,
            target: SemigroupInstance::PositiveInts,
            matrix: vec![row],
        }
    }

    /// Keep the listed extra coordinates of a chain, in the given order.
    /// With a permutation of all extras this is the reordering isomorphism;
    /// with a subset it is a projection.
    pub fn select_extras(source: SemigroupInstance, keep: &[usize]) -> Result<Self> {
        let SemigroupInstance::Chain { base, extras } = &source else {
            return Err(Error::InvalidArgument(
                "extra selection needs a chained instance".into(),
            ));
        };
        if keep.iter().any(|&i| i >= extras.len()) {
            return Err(Error::InvalidArgument(format!("extra index out of range in {keep:?}")));
        }
        let bd = base.dimension();
        let dim = source.dimension();
        let mut matrix: Vec<Vec<i64>> = (0..bd).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
        for &k in keep {
            matrix.push((0..dim).map(|j| i64::from(j == bd + k)).collect());
        }
        let kept: Vec<Component> = keep.iter().map(|&i| extras[i]).collect();
        let target = if kept.is_empty() {
            (**base).clone()
        } else {
            SemigroupInstance::chain((**base).clone(), &kept)
        };
        let name = format!("select{keep:?}");
        Ok(Self {
            name,
            source,
            target,
            matrix,
        })
    }

    pub fn apply(&self, s: &RankedElement) -> Result<RankedElement> {
        self.source.validate(s)?;
        let c = s.coords();
        let image: Vec<i64> = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(&c).map(|(a, b)| a * b).sum())
            .collect();
        self.target.from_coords(&image)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    /// Elements whose image is not an element of the target.
    pub invalid_images: Vec<String>,
    /// Pairs `(s, t)` with `φ(s + t) ≠ φ(s) + φ(t)`.
    pub additivity_failures: Vec<(String, String)>,
    /// Elements violating the requested rank relation.
    pub kind_failures: Vec<String>,
    /// `(s, d)` where `φ` fails to be a bijection `s/d → φ(s)/d`.
    pub bijection_failures: Vec<(String, u64)>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.invalid_images.is_empty()
            && self.additivity_failures.is_empty()
            && self.kind_failures.is_empty()
            && self.bijection_failures.is_empty()
    }
}

/// Verify a morphism on a window: images are valid, the map is additive on
/// pairs whose sum stays in the window, the rank relation of `kind` holds,
/// and, if `check_roots` is set, `φ` maps each root set `s/d` bijectively
/// onto `φ(s)/d`.
pub fn check_morphism(
    m: &MorphismSpec,
    kind: Option<MorphismKind>,
    window: &Window,
    check_roots: bool,
) -> Result<MorphismReport> {
    let src = &m.source;
    let els = src.window_elements(window)?;
    let mut report = MorphismReport::default();
    let mut images = Vec::with_capacity(els.len());
    for s in &els {
        match m.apply(s) {
            Ok(img) => images.push(Some(img)),
            Err(_) => {
                report.invalid_images.push(src.describe(s));
                images.push(None);
            }
        }
    }
    for (i, s) in els.iter().enumerate() {
        let Some(fs) = &images[i] else { continue };
        let rs = src.rank(s)?;
        let rf = m.target.rank(fs)?;
        let kind_ok = match kind {
            Some(MorphismKind::RankDividing) => rs % rf == 0,
            Some(MorphismKind::RankMultiplying) => rf % rs == 0,
            None => true,
        };
        if !kind_ok {
            report.kind_failures.push(src.describe(s));
        }
        if check_roots {
            for d in divisors(rs)? {
                let roots = src.root_set(s, d)?;
                let target_roots = m.target.root_set(fs, d)?;
                let mapped: Vec<RankedElement> = roots.iter().filter_map(|t| m.apply(t).ok()).collect();
                if roots.len() != target_roots.len() || mapped != target_roots {
                    report.bijection_failures.push((src.describe(s), d));
                }
            }
        }
        for (j, t) in els.iter().enumerate().skip(i) {
            let Some(ft) = &images[j] else { continue };
            let Ok(st) = src.add(s, t) else { continue };
            if !src.in_window(&st, window) {
                continue;
            }
            let lhs = m.apply(&st).ok();
            let rhs = m.target.add(fs, ft).ok();
            if lhs.is_none() || lhs != rhs {
                report.additivity_failures.push((src.describe(s), src.describe(t)));
            }
        }
    }
    Ok(report)
}
