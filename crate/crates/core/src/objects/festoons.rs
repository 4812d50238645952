use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::words::next_permutation;
use super::{BeadSlot, CyclicObject, ObjectKind, Symbol};
use crate::error::{Error, Result};
use crate::gaussseq::{Role, SequenceSpec};
use crate::semigroup::{Bead, Component, RankedElement, SemigroupInstance};

struct BeadKind {
    ty: String,
    len: usize,
    colors: u32,
    sign: i8,
}

/// Lay out beads `(type, length, colour)` clockwise, the first one starting
/// `offset` slots before slot 0.
fn place(n: usize, beads: &[(&str, usize, u32)], offset: usize, barriers: &[bool]) -> Vec<Symbol> {
    let mut enc = vec![None; n];
    let mut pos = (n - offset % n) % n;
    for (i, &(ty, len, color)) in beads.iter().enumerate() {
        for j in 0..len {
            enc[(pos + j) % n] = Some(Symbol::Bead(BeadSlot {
                ty: ty.to_string(),
                color,
                start: j == 0,
                barrier: j == 0 && barriers.get(i).copied().unwrap_or(false),
            }));
        }
        pos = (pos + len) % n;
    }
    enc.into_iter().map(|s| s.expect("beads tile the cycle")).collect()
}

/// Every festoon on `Γ_n` whose beads are `mult[i]` copies of `kinds[i]`.
///
/// A festoon is determined by the bead covering slot 0, how far before slot
/// 0 it starts, and the clockwise sequence of coloured beads from there.
fn tile(n: usize, kinds: &[BeadKind], mult: &[u64], kind: ObjectKind) -> Vec<CyclicObject> {
    let mut seq: Vec<usize> = mult
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i, m as usize))
        .collect();
    if seq.is_empty() || seq.iter().any(|&i| kinds[i].colors == 0) {
        return Vec::new();
    }
    let sign = seq.iter().fold(1i8, |acc, &i| acc * kinds[i].sign);
    let mut out = Vec::new();
    loop {
        let mut colors = vec![0u32; seq.len()];
        'colours: loop {
            let beads: Vec<(&str, usize, u32)> = seq
                .iter()
                .zip(&colors)
                .map(|(&i, &c)| (kinds[i].ty.as_str(), kinds[i].len, c))
                .collect();
            for offset in 0..kinds[seq[0]].len {
                let mut x = CyclicObject::new(kind, place(n, &beads, offset, &[]));
                x.sign = sign;
                out.push(x);
            }
            for (p, c) in colors.iter_mut().enumerate() {
                *c += 1;
                if *c < kinds[seq[p]].colors {
                    continue 'colours;
                }
                *c = 0;
            }
            break;
        }
        if !next_permutation(&mut seq) {
            return out;
        }
    }
}

/// Festoons with `alpha[i]` copies of bead `beads[i]`, each bead in a
/// single colour.
pub fn festoons_by_content(beads: &[Bead], alpha: &[u64]) -> Result<Vec<CyclicObject>> {
    if beads.len() != alpha.len() {
        return Err(Error::InvalidArgument(
            "content length differs from the number of beads".into(),
        ));
    }
    if let Some(b) = beads.iter().find(|b| b.length < 1) {
        return Err(Error::InvalidArgument(format!(
            "bead {} has length {}",
            b.label, b.length
        )));
    }
    let kinds: Vec<BeadKind> = beads
        .iter()
        .map(|b| BeadKind {
            ty: b.label.clone(),
            len: b.length as usize,
            colors: 1,
            sign: 1,
        })
        .collect();
    let n: usize = kinds.iter().zip(alpha).map(|(k, &m)| k.len * m as usize).sum();
    Ok(tile(n, &kinds, alpha, ObjectKind::Festoon))
}

fn small(v: &BigInt, what: &str) -> Result<u32> {
    v.to_u32()
        .ok_or_else(|| Error::InvalidArgument(format!("{what} {v} is not a small nonnegative count")))
}

fn colored(c: &SequenceSpec, s: &RankedElement, signed: bool) -> Result<Vec<CyclicObject>> {
    if c.role != Role::C {
        return Err(Error::InvalidArgument("festoons are coloured by a c-sequence".into()));
    }
    let inst = &c.instance;
    let n = inst.rank(s)? as usize;
    let support = c.support();
    let kind = if signed {
        ObjectKind::SignedFestoon
    } else {
        ObjectKind::Festoon
    };
    let mut out = Vec::new();
    for alpha in inst.decompositions(s, Some(&support))? {
        let mut kinds = Vec::new();
        let mut mult = Vec::new();
        for (t, m) in &alpha.parts {
            let v = c.value(t)?;
            if !signed && v.is_negative() {
                return Err(Error::InvalidArgument(format!(
                    "c at {} is negative; use signed festoons",
                    inst.describe(t)
                )));
            }
            kinds.push(BeadKind {
                ty: inst.describe(t),
                len: inst.rank(t)? as usize,
                colors: small(&v.abs(), "colour count")?,
                sign: if v.is_negative() { -1 } else { 1 },
            });
            mult.push(*m);
        }
        out.extend(tile(n, &kinds, &mult, kind));
    }
    Ok(out)
}

/// Festoons of type `s` whose beads of type `t` come in `c_t` colours.
pub fn festoons_colored(c: &SequenceSpec, s: &RankedElement) -> Result<Vec<CyclicObject>> {
    colored(c, s, false)
}

/// Festoons of type `s` coloured by `|c_t|`, each carrying the sign of the
/// product of the `c_t` over its beads.
pub fn signed_festoons(c: &SequenceSpec, s: &RankedElement) -> Result<Vec<CyclicObject>> {
    colored(c, s, true)
}

/// Festoons of type `s` made of `s/t` copies of a single bead of type `t`
/// in one of `b_t` colours.
pub fn festoons_repeated(b: &SequenceSpec, s: &RankedElement) -> Result<Vec<CyclicObject>> {
    if b.role != Role::B {
        return Err(Error::InvalidArgument(
            "repeated festoons are coloured by a b-sequence".into(),
        ));
    }
    let inst = &b.instance;
    let n = inst.rank(s)? as usize;
    let mut out = Vec::new();
    for (t, d) in inst.unit_divisors(s)? {
        let v = b.value(&t)?;
        if v.is_zero() {
            continue;
        }
        if v.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "b at {} is negative",
                inst.describe(&t)
            )));
        }
        let ty = inst.describe(&t);
        let len = inst.rank(&t)? as usize;
        for color in 0..small(&v, "colour count")? {
            let beads = vec![(ty.as_str(), len, color); d as usize];
            for offset in 0..len {
                out.push(CyclicObject::new(ObjectKind::Festoon, place(n, &beads, offset, &[])));
            }
        }
    }
    Ok(out)
}

/// The bead-counting refinement `ĉ` on `S[ℤ≥1]`: `ĉ_{(t,1)} = c_t` and zero
/// elsewhere, so festoons of type `(s, k)` have exactly `k` beads.
pub fn hat(c: &SequenceSpec) -> Result<SequenceSpec> {
    if c.role != Role::C {
        return Err(Error::InvalidArgument(
            "only c-sequences can be refined by bead count".into(),
        ));
    }
    let inst = SemigroupInstance::chain(c.instance.clone(), &[Component::PositiveInts]);
    let window = c.window.clone().with_extra_bounds(1, c.window.max_rank as i64);
    let support = c
        .support()
        .into_iter()
        .map(|t| {
            let v = c.value(&t)?;
            let el = match t {
                RankedElement::Chain { base, mut extras } => {
                    extras.push(1);
                    RankedElement::Chain { base, extras }
                }
                other => RankedElement::Chain {
                    base: Box::new(other),
                    extras: vec![1],
                },
            };
            Ok((el, v))
        })
        .collect::<Result<Vec<_>>>()?;
    SequenceSpec::from_support(inst, window, Role::C, support)
}

/// Whether barrier drawings must have a barrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BarrierRule {
    AtLeastOne,
    Any,
}

/// Single-colour festoons on `Γ_n` with barriers drawn between beads, where
/// bead length may increase clockwise only across a barrier. The sign is
/// `(-1)^{#barriers}`.
pub fn barrier_festoons(n: usize, rule: BarrierRule) -> Result<Vec<CyclicObject>> {
    if n == 0 {
        return Err(Error::InvalidArgument("barrier festoons need n ≥ 1".into()));
    }
    let mut out = Vec::new();
    for mask in 0..1u64 << (n - 1) {
        // Bit i set means a bead ends after position i.
        let mut lengths = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                lengths.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        lengths.push(run);
        let m = lengths.len();
        let labels: Vec<String> = lengths.iter().map(usize::to_string).collect();
        let beads: Vec<(&str, usize, u32)> = labels
            .iter()
            .zip(&lengths)
            .map(|(l, &len)| (l.as_str(), len, 0))
            .collect();
        let required: Vec<bool> = (0..m).map(|i| lengths[i] > lengths[(i + m - 1) % m]).collect();
        for bars in 0..1u64 << m {
            let barriers: Vec<bool> = (0..m).map(|i| bars >> i & 1 == 1).collect();
            if barriers.iter().zip(&required).any(|(&b, &r)| r && !b) {
                continue;
            }
            let count = barriers.iter().filter(|&&b| b).count();
            if rule == BarrierRule::AtLeastOne && count == 0 {
                continue;
            }
            for offset in 0..lengths[0] {
                let mut x = CyclicObject::new(ObjectKind::SignedFestoon, place(n, &beads, offset, &barriers));
                x.sign = if count % 2 == 0 { 1 } else { -1 };
                out.push(x);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::divisors;
    use crate::gaussseq::{a_from_b, a_from_c};
    use crate::objects::orbit_census;
    use std::collections::BTreeMap;

    fn int(n: u64) -> RankedElement {
        RankedElement::Int(n)
    }

    fn sigma(n: u64) -> i64 {
        divisors(n).unwrap().iter().sum::<u64>() as i64
    }

    #[test]
    fn content_examples() {
        let beads = [Bead::new("long", 2), Bead::new("short", 1)];
        assert_eq!(festoons_by_content(&beads, &[1, 2]).unwrap().len(), 4);
        for n in 1..=6 {
            assert_eq!(
                festoons_by_content(&[Bead::new("x", n)], &[1]).unwrap().len(),
                n as usize
            );
        }
        assert_eq!(festoons_by_content(&[Bead::new("x", 1)], &[3]).unwrap().len(), 1);
        assert!(festoons_by_content(&[Bead::new("z", 0)], &[1]).is_err());
    }

    #[test]
    fn festoons_tile_the_cycle() {
        let beads = [Bead::new("a", 3), Bead::new("b", 2), Bead::new("c", 1)];
        for x in festoons_by_content(&beads, &[1, 1, 2]).unwrap() {
            let mut i = 0;
            let starts: Vec<usize> = (0..7)
                .filter(|&j| matches!(&x.encoding[j], Symbol::Bead(b) if b.start))
                .collect();
            assert_eq!(starts.len(), 4);
            while i < 7 {
                let Symbol::Bead(b) = &x.encoding[i] else { panic!() };
                assert!(!b.ty.is_empty());
                i += 1;
            }
        }
    }

    #[test]
    fn coloured_counts() {
        let words = SequenceSpec::from_int_values(Role::C, &[2, 0, 0]);
        assert_eq!(festoons_colored(&words, &int(3)).unwrap().len(), 8);
        let lucas = SequenceSpec::from_int_values(Role::C, &[1, 1, 0, 0]);
        assert_eq!(festoons_colored(&lucas, &int(4)).unwrap().len(), 7);
        let empty = SequenceSpec::from_int_values(Role::C, &[0, 0, 0]);
        assert!(festoons_colored(&empty, &int(3)).unwrap().is_empty());
        let negative = SequenceSpec::from_int_values(Role::C, &[1, -1]);
        assert!(festoons_colored(&negative, &int(2)).is_err());
    }

    #[test]
    fn coloured_counts_match_a() {
        let c = SequenceSpec::from_int_values(Role::C, &[2, 1, 0, 3, 0, 0, 1, 0]);
        let a = a_from_c(&c).unwrap();
        for n in 1..=8 {
            assert_eq!(
                festoons_colored(&c, &int(n)).unwrap().len(),
                usize::try_from(a.at(n).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn repeated_counts() {
        let ones = SequenceSpec::on_ints(Role::B, 8, |_| BigInt::from(1));
        assert_eq!(festoons_repeated(&ones, &int(6)).unwrap().len(), 12);
        let first = SequenceSpec::from_int_values(Role::B, &[1, 0, 0, 0]);
        assert_eq!(festoons_repeated(&first, &int(4)).unwrap().len(), 1);
        let second = SequenceSpec::from_int_values(Role::B, &[0, 1, 0, 0]);
        assert_eq!(festoons_repeated(&second, &int(4)).unwrap().len(), 2);
        let b = SequenceSpec::from_int_values(Role::B, &[1, 2, 0, 1, 0, 3]);
        let a = a_from_b(&b).unwrap();
        for n in 1..=6 {
            assert_eq!(
                festoons_repeated(&b, &int(n)).unwrap().len(),
                usize::try_from(a.at(n).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn hatted_bead_counts() {
        let c = SequenceSpec::from_int_values(Role::C, &[1, 0, 1, 0, 2, 0]);
        let h = hat(&c).unwrap();
        let x = festoons_colored(&h, &RankedElement::tuple(6, &[2])).unwrap();
        assert_eq!(x.len(), 15);
        assert_eq!(orbit_census(&x), BTreeMap::from([(3, 1), (6, 2)]));
        let total: usize = (1..=6)
            .map(|k| festoons_colored(&h, &RankedElement::tuple(6, &[k])).unwrap().len())
            .sum();
        assert_eq!(total, festoons_colored(&c, &int(6)).unwrap().len());
    }

    #[test]
    fn partition_signed_festoons() {
        let c = SequenceSpec::from_int_values(Role::C, &[-1, -2, -3, -5, -7, -11, -15]);
        for n in 1..=7u64 {
            let x = signed_festoons(&c, &int(n)).unwrap();
            let signed: i64 = x.iter().map(|f| i64::from(f.sign)).sum();
            assert_eq!(signed, -sigma(n), "n={n}");
            let barriers = barrier_festoons(n as usize, BarrierRule::AtLeastOne).unwrap();
            assert_eq!(barriers.len(), x.len());
            assert_eq!(barriers.iter().map(|f| i64::from(f.sign)).sum::<i64>(), signed);
            assert_eq!(orbit_census(&barriers), orbit_census(&x));
        }
        let x3: i64 = signed_festoons(&c, &int(3))
            .unwrap()
            .iter()
            .map(|f| i64::from(f.sign))
            .sum();
        assert_eq!(x3, -4);
    }

    #[test]
    fn unrestricted_barriers_cancel() {
        for n in 1..=8usize {
            let y = barrier_festoons(n, BarrierRule::Any).unwrap();
            assert_eq!(y.iter().map(|f| i64::from(f.sign)).sum::<i64>(), 0);
            let x = barrier_festoons(n, BarrierRule::AtLeastOne).unwrap();
            let xp = x.iter().filter(|f| f.sign > 0).count() as i64;
            let yp = y.iter().filter(|f| f.sign > 0).count() as i64;
            assert_eq!(yp, xp + sigma(n as u64));
        }
    }

    #[test]
    fn nonnegative_signed_festoons_are_positive() {
        let c = SequenceSpec::from_int_values(Role::C, &[1, 1, 0, 0, 0]);
        let x = signed_festoons(&c, &int(5)).unwrap();
        assert!(x.iter().all(|f| f.sign == 1));
        assert_eq!(x.len(), festoons_colored(&c, &int(5)).unwrap().len());
    }
}
