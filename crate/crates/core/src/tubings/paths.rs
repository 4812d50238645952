use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gaussseq::{solve_functional_equation, TruncatedSeries};
use crate::report::{CheckReport, ElementCheck};

/// `U = (1,1)`, `D = (1,-1)`, `F = (2,0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
    Flat,
}

impl Step {
    pub fn width(self) -> usize {
        match self {
            Step::Flat => 2,
            _ => 1,
        }
    }

    pub fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
            Step::Flat => 0,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Flat => 'F',
        }
    }
}

/// A lattice path, written as a string over `U`, `D`, `F`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord(pub Vec<Step>);

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                'F' => Ok(Step::Flat),
                other => Err(Error::Malformed(format!("{other:?} is not a path step"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(PathWord)
    }
}

impl Serialize for PathWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl PathWord {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Horizontal length.
    pub fn length(&self) -> usize {
        self.0.iter().map(|s| s.width()).sum()
    }

    /// The height at which each step starts.
    pub fn heights(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |h, s| {
                let start = *h;
                *h += s.rise();
                Some(start)
            })
            .collect()
    }

    pub fn end_height(&self) -> i64 {
        self.0.iter().map(|s| s.rise()).sum()
    }

    pub fn flats(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::Flat).count()
    }

    pub fn is_delannoy(&self) -> bool {
        self.end_height() == 0
    }

    pub fn is_schroder(&self) -> bool {
        self.is_delannoy()
            && self
                .heights()
                .iter()
                .zip(&self.0)
                .all(|(&h, &s)| h + s.rise().min(0) >= 0)
    }

    /// Schröder with every flat step at positive height.
    pub fn is_strict(&self) -> bool {
        self.is_schroder()
            && self
                .heights()
                .iter()
                .zip(&self.0)
                .all(|(&h, &s)| s != Step::Flat || h > 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    Delannoy,
    Schroder,
    Strict,
}

impl PathKind {
    pub fn admits(self, p: &PathWord) -> bool {
        match self {
            PathKind::Delannoy => p.is_delannoy(),
            PathKind::Schroder => p.is_schroder(),
            PathKind::Strict => p.is_strict(),
        }
    }
}

const PATH_CAP: usize = 32;

/// All paths of the given kind and length, optionally with a fixed number
/// of flat steps, in lexicographic order `U < D < F`.
pub fn enumerate_paths(kind: PathKind, length: usize, flats: Option<usize>) -> Result<Vec<PathWord>> {
    if !length.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("path length {length} is odd")));
    }
    if length > PATH_CAP {
        return Err(Error::CapExceeded(format!("path length {length} exceeds {PATH_CAP}")));
    }
    let mut out = Vec::new();
    walk(kind, length, flats, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

fn walk(kind: PathKind, rest: usize, flats: Option<usize>, h: i64, cur: &mut Vec<Step>, out: &mut Vec<PathWord>) {
    if rest == 0 {
        if h == 0 && flats.is_none_or(|f| f == 0) {
            out.push(PathWord(cur.clone()));
        }
        return;
    }
    for step in [Step::Up, Step::Down, Step::Flat] {
        if step.width() > rest {
            continue;
        }
        let next = h + step.rise();
        let bounded = kind == PathKind::Delannoy || next >= 0;
        let strict_ok = kind != PathKind::Strict || step != Step::Flat || h > 0;
        let flats_left = match (step, flats) {
            (Step::Flat, Some(0)) => continue,
            (Step::Flat, Some(f)) => Some(f - 1),
            (_, f) => f,
        };
        if !bounded || !strict_ok || next.unsigned_abs() as usize > rest - step.width() {
            continue;
        }
        cur.push(step);
        walk(kind, rest - step.width(), flats_left, next, cur, out);
        cur.pop();
    }
}

/// Compare three computations of the number `c_n` of strict Schröder paths
/// of length `2(n-1)`: exhaustive enumeration, the solution of
/// `C = x D(C)` with `D(t) = (1-t)/(1-2t)`, and the first-return
/// decomposition `C = x + C² + C³ + ⋯`.
pub fn strict_schroder_gf_check(order: usize) -> Result<CheckReport> {
    if order == 0 || order > 14 {
        return Err(Error::InvalidArgument(format!("order {order} is outside 1..=14")));
    }
    let d: Vec<i64> = (0..order).map(|i| if i == 0 { 1 } else { 1 << (i - 1) }).collect();
    let solved = solve_functional_equation(&TruncatedSeries::from_ints(0, &d, order as i64)?, order)?;
    let recurrence = first_return_counts(order);
    let mut report = CheckReport::new("strict_schroder");
    for n in 1..=order {
        let brute = BigInt::from(enumerate_paths(PathKind::Strict, 2 * (n - 1), None)?.len());
        let gf = solved.coeff(n as i64).expect("within order").to_integer();
        let rec = &recurrence[n];
        report.push(if brute == gf && brute == *rec {
            ElementCheck::pass(n.to_string())
        } else {
            ElementCheck::fail(
                n.to_string(),
                None,
                format!("enumerated {brute}, series {gf}, decomposition {rec}"),
            )
        });
    }
    Ok(report)
}

fn first_return_counts(order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[1] = BigInt::from(1);
    for n in 2..=order {
        // [x^n] Σ_{k≥2} C^k, using only c_1 .. c_{n-1}.
        let mut power = c.clone();
        power[n] = BigInt::zero();
        let mut total = BigInt::zero();
        for _ in 2..=n {
            let mut next = vec![BigInt::zero(); order + 1];
            for (i, a) in power.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (j, b) in c[..n].iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                    if i + j <= n {
                        next[i + j] += a * b;
                    }
                }
            }
            total += &next[n];
            power = next;
        }
        c[n] = total;
    }
    c
}
