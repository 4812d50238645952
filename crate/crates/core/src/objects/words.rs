use serde::{Deserialize, Serialize};

use super::{CyclicObject, ObjectKind, Symbol};
use crate::error::{Error, Result};
use crate::qpoly::IntPolynomial;

/// All words with `alpha[i]` copies of letter `i`, in lexicographic order.
pub fn words_with_content(alpha: &[u64]) -> Vec<CyclicObject> {
    let mut letters: Vec<i64> = alpha
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i as i64, m as usize))
        .collect();
    let mut out = Vec::new();
    loop {
        out.push(CyclicObject::new(
            ObjectKind::Word,
            letters.iter().map(|&x| Symbol::Letter(x)).collect(),
        ));
        if !next_permutation(&mut letters) {
            return out;
        }
    }
}

/// Advance to the next distinct permutation in lexicographic order.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[i - 1] < v[j])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `Σ { i : w_i > w_{i+1} }` over 1-indexed positions of the linear word.
pub fn maj(word: &[i64]) -> u64 {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

/// `Σ_w q^{maj(w)}` over a set of words or compositions.
pub fn maj_polynomial(set: &[CyclicObject]) -> Result<IntPolynomial> {
    let mut total = IntPolynomial::zero();
    for x in set {
        let w = x
            .letters()
            .ok_or_else(|| Error::InvalidArgument("major index needs letters".into()))?;
        total += &IntPolynomial::monomial(1, maj(&w) as usize);
    }
    Ok(total)
}

/// An integer interval `[min, max]`, with `max` unbounded when absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Alphabet {
    pub min: Option<i64>,
    pub max: Option<i64>,
}

impl Alphabet {
    pub fn nonneg() -> Self {
        Self {
            min: Some(0),
            max: None,
        }
    }

    pub fn positive() -> Self {
        Self {
            min: Some(1),
            max: None,
        }
    }

    pub fn range(min: i64, max: i64) -> Self {
        Self {
            min: Some(min),
            max: Some(max),
        }
    }
}

/// All length-`n` words over `alphabet` with letter sum `k`, in
/// lexicographic order.
pub fn compositions(n: usize, k: i64, alphabet: Alphabet) -> Result<Vec<CyclicObject>> {
    let lo = alphabet
        .min
        .ok_or_else(|| Error::InvalidArgument("composition alphabets must be bounded below".into()))?;
    if n == 0 {
        return Err(Error::InvalidArgument("compositions need positive length".into()));
    }
    // A letter exceeds k - (n-1)·lo only if the rest cannot compensate.
    let reach = k - (n as i64 - 1) * lo;
    let hi = alphabet.max.map_or(reach, |m| m.min(reach));
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    compositions_rec(n, k, lo, hi, &mut cur, &mut out);
    Ok(out)
}

fn compositions_rec(n: usize, rest: i64, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<CyclicObject>) {
    let left = n - cur.len();
    if left == 0 {
        if rest == 0 {
            out.push(CyclicObject::new(
                ObjectKind::Composition,
                cur.iter().map(|&x| Symbol::Letter(x)).collect(),
            ));
        }
        return;
    }
    let slack = left as i64 - 1;
    for x in lo..=hi {
        let r = rest - x;
        if r < slack * lo || r > slack * hi {
            continue;
        }
        cur.push(x);
        compositions_rec(n, r, lo, hi, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::{q_binomial, q_int, q_multinomial};

    fn letters(set: &[CyclicObject]) -> Vec<Vec<i64>> {
        set.iter().map(|x| x.letters().unwrap()).collect()
    }

    #[test]
    fn small_contents() {
        let ab = words_with_content(&[1, 1]);
        assert_eq!(letters(&ab), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(maj(&[0, 1]), 0);
        assert_eq!(maj(&[1, 0]), 1);
        assert_eq!(maj_polynomial(&ab).unwrap(), q_binomial(2, 1));
        assert_eq!(maj_polynomial(&words_with_content(&[2])).unwrap(), IntPolynomial::one());
        assert_eq!(maj_polynomial(&words_with_content(&[2, 1])).unwrap(), q_int(3));
    }

    #[test]
    fn macmahon() {
        for alpha in [vec![2, 2], vec![1, 2, 3], vec![3, 1, 1, 1], vec![2, 2, 2], vec![6]] {
            let parts: Vec<i64> = alpha.iter().map(|&m| m as i64).collect();
            assert_eq!(
                maj_polynomial(&words_with_content(&alpha)).unwrap(),
                q_multinomial(&parts),
                "{alpha:?}"
            );
        }
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            letters(&compositions(2, 2, Alphabet::nonneg()).unwrap()),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(
            letters(&compositions(2, 0, Alphabet::range(-1, 1)).unwrap()),
            vec![vec![-1, 1], vec![0, 0], vec![1, -1]]
        );
        assert_eq!(
            letters(&compositions(3, 3, Alphabet::positive()).unwrap()),
            vec![vec![1, 1, 1]]
        );
        assert!(compositions(3, 1, Alphabet::positive()).unwrap().is_empty());
        assert!(compositions(
            2,
            0,
            Alphabet {
                min: None,
                max: Some(3)
            }
        )
        .is_err());
    }

    #[test]
    fn composition_counts() {
        for n in 1..=5usize {
            for k in 0..=6i64 {
                let got = compositions(n, k, Alphabet::nonneg()).unwrap().len();
                assert_eq!(got as u64, binom(n as u64 + k as u64 - 1, k as u64));
            }
        }
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
