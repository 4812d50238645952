//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

use gauss_sieve::gaussseq::{
    a_from_b, a_from_c, a_from_matrix_trace, b_from_a, c_from_a, check_gauss, riordan_count, solve_functional_equation,
    Role, SequenceSpec, TruncatedSeries,
};
use gauss_sieve::objects::{
    barrier_festoons, compositions, festoons_by_content, festoons_colored, festoons_repeated, hat, maj_polynomial,
    orbit_census, signed_festoons, verify_csp, verify_lyndon, verify_signed_csp, words_with_content, Alphabet,
    BarrierRule, CyclicFamily,
};
use gauss_sieve::qgauss::forms::{
    all_cycle_tubings, coloured_cycle_tubings, cycle_tubings, eps_family, lucas, pair_family, qbinom_family,
    riordan_even, riordan_geometric, strict_tubings, two_power_plus_sign,
};
use gauss_sieve::qgauss::{
    check_qgauss_definition, check_qgauss_roots, construct_from_b, construct_from_c, construct_ramanujan,
    equivalent_mod, fund_family, PolyFamily,
};
use gauss_sieve::qpoly::{q_binomial, q_exp, q_multinomial, IntPolynomial};
use gauss_sieve::report::CheckReport;
use gauss_sieve::semigroup::{Bead, RankedElement, SemigroupInstance, Window};
use gauss_sieve::tubings::{
    all_tubings_family, coloured_tubings_family, cycle_tubing_to_delannoy, cycle_tubing_to_marked,
    delannoy_to_cycle_tubing, enumerate_paths, enumerate_tubings, improper_cycle_tubings, interval_tubing_to_schroder,
    marked_to_delannoy, schroder_to_interval_tubing, strict_schroder_gf_check, tubing_family, Graph, PathKind,
    PathWord, Step, Tube, Tubing, TubingStat, VertexClass,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Debug)]
struct Fail(String);

impl From<gauss_sieve::Error> for Fail {
    fn from(e: gauss_sieve::Error) -> Self {
        Fail(format!("library error: {e}"))
    }
}

type Check = Result<String, Fail>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(Fail(format!($($msg)+)));
        }
    };
}

fn report_ok(r: &CheckReport, context: impl Display) -> Result<(), Fail> {
    match r.witness() {
        None => Ok(()),
        Some(w) => Err(Fail(format!(
            "{context}: {} failed at {} (d = {:?}): {}",
            r.name,
            w.element,
            w.failing_divisor,
            w.detail.as_deref().unwrap_or("")
        ))),
    }
}

// Oracles, computed from first principles without the library.

fn mobius(n: u64) -> i64 {
    let (mut m, mut r, mut p) = (n, 1, 2);
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if m > 1 {
        -r
    } else {
        r
    }
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn sigma(n: u64) -> i64 {
    divisors(n).iter().sum::<u64>() as i64
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn partitions(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}

/// `b_n = (1/n) Σ_{d|n} μ(n/d) a_d`, or `None` if some division is inexact.
fn b_oracle(a: &[BigInt]) -> Option<Vec<BigInt>> {
    (1..=a.len() as u64)
        .map(|n| {
            let sum: BigInt = divisors(n)
                .iter()
                .map(|&d| a[d as usize - 1].clone() * mobius(n / d))
                .sum();
            let (q, r) = sum.div_rem(&BigInt::from(n));
            r.is_zero().then_some(q)
        })
        .collect()
}

/// Weighted bead sequences: `T_m = Σ_l c_l T_{m-l}`, `T_0 = 1`.
fn sequence_weights(c: &[BigInt], m_max: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::one()];
    for m in 1..=m_max {
        let v = (1..=m.min(c.len())).map(|l| &c[l - 1] * &t[m - l]).sum();
        t.push(v);
    }
    t
}

/// Festoon totals `a_n = Σ_l l c_l T_{n-l}`.
fn festoon_totals(c: &[BigInt], n_max: usize) -> Vec<BigInt> {
    let t = sequence_weights(c, n_max);
    (1..=n_max)
        .map(|n| (1..=n.min(c.len())).map(|l| &c[l - 1] * l * &t[n - l]).sum())
        .collect()
}

/// Invert `festoon_totals` one term at a time.
fn c_oracle(a: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut c: Vec<BigInt> = Vec::new();
    for n in 1..=a.len() {
        let t = sequence_weights(&c, n);
        let rest: BigInt = (1..n).map(|l| &c[l - 1] * l * &t[n - l]).sum();
        let (q, r) = (&a[n - 1] - rest).div_rem(&BigInt::from(n));
        if !r.is_zero() {
            return None;
        }
        c.push(q);
    }
    Some(c)
}

/// `C = x D(C)` by fixed-point iteration on truncated coefficient vectors;
/// returns `c_1 .. c_{n_max}`.
fn solve_oracle(d: &[i64], n_max: usize) -> Vec<BigInt> {
    let mul = |p: &[BigInt], q: &[BigInt]| {
        let mut out = vec![BigInt::zero(); n_max + 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate().take(n_max + 1 - i) {
                out[i + j] += a * b;
            }
        }
        out
    };
    let mut c = vec![BigInt::zero(); n_max + 1];
    for _ in 0..=n_max {
        let mut d_of_c = vec![BigInt::zero(); n_max + 1];
        let mut power = vec![BigInt::zero(); n_max + 1];
        power[0] = BigInt::one();
        for &dj in d.iter().take(n_max + 1) {
            for (slot, p) in d_of_c.iter_mut().zip(&power) {
                *slot += p * dj;
            }
            power = mul(&power, &c);
        }
        let mut next = vec![BigInt::zero(); n_max + 1];
        next[1..].clone_from_slice(&d_of_c[..n_max]);
        c = next;
    }
    c[1..].to_vec()
}

/// Festoons with `k` beads: bead-length sequences `(l_1, …, l_k)` summing to
/// `n`, weighted by `l_1 c_{l_1} ⋯ c_{l_k}`.
fn festoons_by_beads(c: &[BigInt], n: usize, k: usize) -> BigInt {
    fn seqs(c: &[BigInt], rest: usize, left: usize) -> BigInt {
        if left == 0 {
            return if rest == 0 { BigInt::one() } else { BigInt::zero() };
        }
        (1..=rest.min(c.len()))
            .map(|l| &c[l - 1] * seqs(c, rest - l, left - 1))
            .sum()
    }
    (1..=n.min(c.len()))
        .map(|l| &c[l - 1] * l * seqs(c, n - l, k - 1))
        .sum()
}

fn trace_powers(m: &[Vec<i64>], n_max: usize) -> Vec<BigInt> {
    let size = m.len();
    let base: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut p = base.clone();
    let mut out = Vec::new();
    for _ in 0..n_max {
        out.push((0..size).map(|i| p[i][i].clone()).sum());
        p = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| (0..size).map(|k| &p[i][k] * &base[k][j]).sum())
                    .collect()
            })
            .collect();
    }
    out
}

fn large_schroder(n_max: usize) -> Vec<u64> {
    let mut r = vec![1u64];
    for m in 1..=n_max {
        r.push(r[m - 1] + (0..m).map(|i| r[i] * r[m - 1 - i]).sum::<u64>());
    }
    r
}

fn central_delannoy(m: i64) -> BigInt {
    (0..=m).map(|k| binom(m, k) * binom(m + k, k)).sum()
}

// Shared fixtures.

struct Seq {
    name: String,
    a: Vec<BigInt>,
    matrix: Option<Vec<Vec<i64>>>,
}

const CORPUS_N: usize = 12;

fn corpus() -> Vec<Seq> {
    let mut out = Vec::new();
    let mut lucas = vec![BigInt::from(1), BigInt::from(3)];
    while lucas.len() < CORPUS_N {
        let next = &lucas[lucas.len() - 1] + &lucas[lucas.len() - 2];
        lucas.push(next);
    }
    out.push(Seq {
        name: "lucas".into(),
        a: lucas,
        matrix: None,
    });
    for lambda in -3i64..=3 {
        let a = (1..=CORPUS_N as u32).map(|n| BigInt::from(lambda).pow(n)).collect();
        out.push(Seq {
            name: format!("{lambda}^n"),
            a,
            matrix: None,
        });
    }
    for sign in [1, -1] {
        let a = (1..=CORPUS_N as u64).map(|n| BigInt::from(sign * sigma(n))).collect();
        out.push(Seq {
            name: if sign > 0 { "sigma".into() } else { "-sigma".into() },
            a,
            matrix: None,
        });
    }
    let mut rng = StdRng::seed_from_u64(0x6a55);
    for i in 0..5 {
        let size = rng.gen_range(2..=4);
        let m: Vec<Vec<i64>> = (0..size)
            .map(|_| (0..size).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        out.push(Seq {
            name: format!("trace {i} {m:?}"),
            a: trace_powers(&m, CORPUS_N),
            matrix: Some(m),
        });
    }
    out
}

fn spec_a(a: &[BigInt], n: usize) -> SequenceSpec {
    SequenceSpec::on_ints(Role::A, n as u64, |k| a[k as usize - 1].clone())
}

fn vals(s: &SequenceSpec) -> Result<Vec<BigInt>, Fail> {
    Ok(s.values_in_order()?)
}

fn ints(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).expect("fits in i64")).collect()
}

fn pair(s: &RankedElement) -> (i64, i64) {
    (s.as_int().expect("chain over positive integers") as i64, s.extras()[0])
}

struct Corruption {
    family: String,
    element: String,
    definition: CheckReport,
    roots: CheckReport,
}

fn valid_families(corpus: &[Seq]) -> Result<Vec<(String, PolyFamily)>, Fail> {
    let mut out = Vec::new();
    for s in corpus {
        out.push((format!("ramanujan {}", s.name), construct_ramanujan(&spec_a(&s.a, 10))?));
    }
    for lambda in [2, 3] {
        out.push((format!("[exp_{lambda}(n)]_q"), ints_family(8, |n| q_exp(lambda, n))?));
    }
    out.push(("eps".into(), eps_family(10)?));
    out.push((
        "lucas".into(),
        PolyFamily::try_from_fn(SemigroupInstance::PositiveInts, Window::rank(10), |s| {
            lucas(s.as_int().unwrap())
        })?,
    ));
    out.push((
        "2^n + 2(-1)^n".into(),
        PolyFamily::try_from_fn(SemigroupInstance::PositiveInts, Window::rank(10), |s| {
            two_power_plus_sign(s.as_int().unwrap())
        })?,
    ));
    out.push((
        "all cycle tubings".into(),
        PolyFamily::on_ints(8, |n| all_cycle_tubings(n as i64)),
    ));
    out.push(("qbinom".into(), qbinom_family(8, 0, 8)?));
    out.push((
        "riordan even".into(),
        pair_family(8, 1, 8, |n, k| Ok(riordan_even(n, k)))?,
    ));
    out.push((
        "riordan geometric".into(),
        pair_family(8, 1, 8, |n, k| Ok(riordan_geometric(n, k)))?,
    ));
    out.push(("strict tubings".into(), pair_family(8, 1, 8, strict_tubings)?));
    out.push((
        "cycle tubings".into(),
        pair_family(8, 0, 8, |n, k| Ok(cycle_tubings(n, k)))?,
    ));
    out.push((
        "coloured tubings".into(),
        pair_family(7, 0, 7, |n, k| coloured_cycle_tubings(n, k, 2))?,
    ));
    let beads = [Bead::new("a", 1), Bead::new("b", 2), Bead::new("c", 1)];
    out.push(("fund".into(), fund_family(&beads, Window::rank(6))?));
    Ok(out)
}

fn corruptions(families: &[(String, PolyFamily)]) -> Result<Vec<Corruption>, Fail> {
    let mut out = Vec::new();
    for (name, f) in families {
        let elements = f.elements()?;
        let ranked: Vec<&RankedElement> = elements
            .iter()
            .filter(|s| f.instance.rank(s).map(|r| r >= 2).unwrap_or(false))
            .collect();
        let targets = [ranked.first(), ranked.get(ranked.len() / 2), ranked.last()];
        let mut seen = BTreeSet::new();
        for s in targets.into_iter().flatten() {
            if !seen.insert(*s) {
                continue;
            }
            let bad = f.corrupted(s)?;
            out.push(Corruption {
                family: name.clone(),
                element: f.instance.describe(s),
                definition: check_qgauss_definition(&bad)?,
                roots: check_qgauss_roots(&bad)?,
            });
        }
    }
    Ok(out)
}

// Criteria.

fn transform_roundtrips(corpus: &[Seq]) -> Check {
    for (s, m) in corpus.iter().filter_map(|s| s.matrix.as_ref().map(|m| (s, m))) {
        ensure!(
            vals(&a_from_matrix_trace(m, CORPUS_N as u64)?)? == s.a,
            "{}: library trace disagrees",
            s.name
        );
    }
    for s in corpus {
        let a = spec_a(&s.a, CORPUS_N);
        let b = b_from_a(&a)?;
        let c = c_from_a(&a)?;
        ensure!(
            Some(vals(&b)?) == b_oracle(&s.a),
            "{}: b disagrees with the Möbius oracle",
            s.name
        );
        ensure!(
            Some(vals(&c)?) == c_oracle(&s.a),
            "{}: c disagrees with the festoon oracle",
            s.name
        );
        let ab = a_from_b(&b)?;
        ensure!(vals(&ab)? == s.a, "{}: a_from_b ∘ b_from_a", s.name);
        ensure!(vals(&b_from_a(&ab)?)? == vals(&b)?, "{}: b_from_a ∘ a_from_b", s.name);
        let ac = a_from_c(&c)?;
        ensure!(vals(&ac)? == s.a, "{}: a_from_c ∘ c_from_a", s.name);
        ensure!(vals(&c_from_a(&ac)?)? == vals(&c)?, "{}: c_from_a ∘ a_from_c", s.name);
    }
    Ok(format!("{} sequences, n ≤ {CORPUS_N}", corpus.len()))
}

fn construction_coherence(corpus: &[Seq]) -> Check {
    let mut pairs = 0;
    for s in corpus {
        let a = spec_a(&s.a, 10);
        let fams = [
            ("ramanujan", construct_ramanujan(&a)?),
            ("from_b", construct_from_b(&b_from_a(&a)?)?),
            ("from_c", construct_from_c(&c_from_a(&a)?)?),
        ];
        for (name, f) in &fams {
            report_ok(&check_qgauss_definition(f)?, format!("{} {name}", s.name))?;
            report_ok(&check_qgauss_roots(f)?, format!("{} {name}", s.name))?;
        }
        for i in 0..3 {
            for j in i + 1..3 {
                report_ok(
                    &equivalent_mod(&fams[i].1, &fams[j].1)?,
                    format!("{} {} vs {}", s.name, fams[i].0, fams[j].0),
                )?;
                pairs += 1;
            }
        }
        let canonical = &fams[0].1;
        ensure!(
            fams[1].1.reduced()? == *canonical,
            "{}: reduced from_b is not the Ramanujan family",
            s.name
        );
        ensure!(
            fams[2].1.reduced()? == *canonical,
            "{}: reduced from_c is not the Ramanujan family",
            s.name
        );
        for n in 1..=10u64 {
            let p = canonical.at(n)?;
            ensure!(p.degree().is_none_or(|d| d < n as usize), "{}: degree at {n}", s.name);
            ensure!(
                p.eval_at_one() == s.a[n as usize - 1],
                "{}: value at 1 for n = {n}",
                s.name
            );
        }
    }
    Ok(format!("{} sequences, {pairs} congruent pairs, n ≤ 10", corpus.len()))
}

fn checker_equivalence(families: &[(String, PolyFamily)], corrupted: &[Corruption]) -> Check {
    for (name, f) in families {
        let d = check_qgauss_definition(f)?;
        let r = check_qgauss_roots(f)?;
        ensure!(
            d.passed() && r.passed(),
            "{name}: valid family rejected (definition {}, roots {})",
            d.passed(),
            r.passed()
        );
    }
    for c in corrupted {
        ensure!(
            c.definition.passed() == c.roots.passed(),
            "{} corrupted at {}: checkers disagree",
            c.family,
            c.element
        );
    }
    ensure!(families.len() >= 20 && corrupted.len() >= 20, "too few fixtures");
    Ok(format!(
        "{} valid families, {} corruptions",
        families.len(),
        corrupted.len()
    ))
}

fn sieve(name: &str, fam: &CyclicFamily, f: &PolyFamily, lyndon: bool) -> Result<usize, Fail> {
    if lyndon {
        report_ok(&verify_lyndon(fam)?, name)?;
    }
    let r = verify_csp(fam, f)?;
    report_ok(&r, name)?;
    Ok(r.checks.len())
}

fn free_counts(s: &RankedElement) -> &[u64] {
    match s {
        RankedElement::Free(m) => m,
        other => panic!("{other} is not a free element"),
    }
}

fn ints_family(max_n: u64, mut f: impl FnMut(u64) -> gauss_sieve::Result<IntPolynomial>) -> Result<PolyFamily, Fail> {
    Ok(PolyFamily::try_from_fn(
        SemigroupInstance::PositiveInts,
        Window::rank(max_n),
        |s| f(s.as_int().unwrap()),
    )?)
}

fn csp_suites() -> Check {
    let mut checked = 0;

    let letters: Vec<Bead> = ["a", "b", "c"].iter().map(|l| Bead::new(*l, 1)).collect();
    let inst = SemigroupInstance::free(letters);
    let words = CyclicFamily::generate(inst.clone(), Window::rank(6), |s| {
        Ok(words_with_content(free_counts(s)))
    })?;
    let multinomial = PolyFamily::from_fn(inst, Window::rank(6), |s| {
        q_multinomial(&free_counts(s).iter().map(|&m| m as i64).collect::<Vec<_>>())
    })?;
    checked += sieve("words", &words, &multinomial, true)?;

    let beads = [Bead::new("a", 1), Bead::new("b", 2), Bead::new("c", 3)];
    let inst = SemigroupInstance::free(beads.to_vec());
    let fest = CyclicFamily::generate(inst, Window::rank(8), |s| festoons_by_content(&beads, free_counts(s)))?;
    checked += sieve(
        "festoons by content",
        &fest,
        &fund_family(&beads, Window::rank(8))?,
        true,
    )?;

    let lucas_c = SequenceSpec::from_int_values(Role::C, &[1, 1, 0, 0, 0, 0, 0, 0]);
    let x = CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(8), |s| {
        festoons_colored(&lucas_c, s)
    })?;
    let lucas_numbers = [1, 3, 4, 7, 11, 18, 29, 47];
    for (n, want) in (1..=8u64).zip(lucas_numbers) {
        ensure!(x.get(&RankedElement::Int(n))?.len() == want, "Lucas festoons at {n}");
    }
    checked += sieve("Lucas festoons", &x, &ints_family(8, lucas)?, true)?;

    let c23 = SequenceSpec::from_int_values(Role::C, &[0, 3, 2, 0, 0, 0, 0, 0]);
    let x = CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(8), |s| {
        festoons_colored(&c23, s)
    })?;
    for n in 1..=8u32 {
        let want = 2i64.pow(n) + 2 * (-1i64).pow(n);
        ensure!(
            x.get(&RankedElement::Int(n.into()))?.len() as i64 == want,
            "c2 = 3, c3 = 2 festoons at {n}"
        );
    }
    checked += sieve(
        "c2 = 3, c3 = 2 festoons",
        &x,
        &ints_family(8, two_power_plus_sign)?,
        true,
    )?;

    let ones = SequenceSpec::from_int_values(Role::B, &[1; 10]);
    let x = CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(10), |s| {
        festoons_repeated(&ones, s)
    })?;
    for n in 1..=10u64 {
        ensure!(
            x.get(&RankedElement::Int(n))?.len() as i64 == sigma(n),
            "repeated festoons at {n}"
        );
    }
    checked += sieve("repeated festoons", &x, &construct_from_b(&ones)?, true)?;

    type Form = fn(i64, i64) -> gauss_sieve::Result<IntPolynomial>;
    let examples: [(&str, Vec<i64>, Form); 3] = [
        ("1 + t²", vec![1, 0, 1], |n, k| Ok(riordan_even(n, k))),
        ("1/(1-t)", vec![1; 9], |n, k| Ok(riordan_geometric(n, k))),
        ("(1-t)/(1-2t)", vec![1, 1, 2, 4, 8, 16, 32, 64, 128], strict_tubings),
    ];
    for (name, d, form) in examples {
        let c = SequenceSpec::from_int_values(Role::C, &ints(&solve_oracle(&d, 8)));
        let h = hat(&c)?;
        let x = CyclicFamily::generate(h.instance.clone(), h.window.clone(), |s| festoons_colored(&h, s))?;
        let f = PolyFamily::try_from_fn(h.instance.clone(), h.window.clone(), |s| {
            let (n, k) = pair(s);
            form(n, k)
        })?;
        checked += sieve(&format!("bead counts for D = {name}"), &x, &f, true)?;
    }

    checked += sieve(
        "tubings by free vertices",
        &tubing_family(TubingStat::FreeVertices, 6)?,
        &pair_family(6, 1, 6, strict_tubings)?,
        true,
    )?;
    checked += sieve(
        "tubings by tubes",
        &tubing_family(TubingStat::Tubes, 6)?,
        &pair_family(6, 0, 6, |n, k| Ok(cycle_tubings(n, k)))?,
        true,
    )?;
    checked += sieve(
        "two-coloured tubings",
        &coloured_tubings_family(6, 2)?,
        &pair_family(6, 0, 6, |n, k| coloured_cycle_tubings(n, k, 2))?,
        true,
    )?;
    checked += sieve(
        "all tubings",
        &all_tubings_family(6)?,
        &PolyFamily::on_ints(6, |n| all_cycle_tubings(n as i64)),
        true,
    )?;
    Ok(format!("12 families, {checked} elements"))
}

fn quantitative_values() -> Check {
    let proper = enumerate_tubings(Graph::Interval(3))?
        .into_iter()
        .filter(Tubing::is_proper)
        .count();
    ensure!(proper == 11, "I_3 has {proper} proper tubings");

    let totals: Vec<usize> = (1..=4)
        .map(|n| improper_cycle_tubings(n).map(|t| t.len()))
        .collect::<Result<_, _>>()?;
    ensure!(totals == [1, 3, 13, 63], "cycle tubing totals {totals:?}");
    for (m, &t) in totals.iter().enumerate() {
        ensure!(central_delannoy(m as i64) == BigInt::from(t), "central Delannoy at {m}");
    }

    let c = solve_oracle(&[1, 0, 1], 6);
    ensure!(ints(&c) == [1, 0, 1, 0, 2, 0], "c for 1 + t² is {c:?}");
    let h = hat(&SequenceSpec::from_int_values(Role::C, &ints(&c)))?;
    let x = festoons_colored(&h, &RankedElement::tuple(6, &[2]))?;
    let census = orbit_census(&x);
    ensure!(x.len() == 15, "#X_(6,2) = {}", x.len());
    ensure!(census == BTreeMap::from([(3, 1), (6, 2)]), "orbit census {census:?}");

    let counts: Vec<usize> = (1..=5usize)
        .map(|n| enumerate_paths(PathKind::Strict, 2 * (n - 1), None).map(|p| p.len()))
        .collect::<Result<_, _>>()?;
    ensure!(counts == [1, 1, 3, 11, 45], "strict Schröder counts {counts:?}");
    let d = TruncatedSeries::from_ints(0, &[1, 1, 2, 4, 8, 16], 6)?;
    let solved = solve_functional_equation(&d, 5)?;
    let series: Vec<BigInt> = (1..=5).map(|n| solved.coeff(n).unwrap().to_integer()).collect();
    ensure!(
        series == counts.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>(),
        "series gives {series:?}"
    );
    report_ok(&strict_schroder_gf_check(5)?, "strict Schröder")?;
    Ok("I_3: 11; cycles: 1 3 13 63; X_(6,2): 15 in orbits {3:1, 6:2}; strict: 1 1 3 11 45".into())
}

fn bijection_roundtrips() -> Check {
    let large = large_schroder(8);
    let mut interval = 0;
    for n in 1..=8usize {
        let tubings = enumerate_tubings(Graph::Interval(n))?;
        ensure!(tubings.len() as u64 == large[n], "I_{n}: {} tubings", tubings.len());
        let mut images = BTreeSet::new();
        for t in &tubings {
            let p = interval_tubing_to_schroder(t)?;
            ensure!(
                p.is_schroder() && p.length() == 2 * n,
                "I_{n}: {p} is not a Schröder path of length {}",
                2 * n
            );
            let ups = p.steps().iter().filter(|&&s| s == Step::Up).count();
            let nonfinal = t
                .classify_vertices()
                .iter()
                .filter(|&&v| v != VertexClass::Final)
                .count();
            ensure!(
                ups == t.num_tubes() && p.flats() == nonfinal,
                "I_{n}: statistics of {p}"
            );
            ensure!(schroder_to_interval_tubing(&p)? == *t, "I_{n}: {p} does not return");
            images.insert(p);
        }
        ensure!(images.len() == tubings.len(), "I_{n}: images collide");
        interval += tubings.len();
    }

    let mut cycle = 0;
    for n in 1..=8usize {
        let tubings = improper_cycle_tubings(n)?;
        ensure!(
            BigInt::from(tubings.len()) == central_delannoy(n as i64 - 1),
            "Γ_{n}: {} tubings",
            tubings.len()
        );
        for b in BTreeSet::from([0, n - 1]) {
            let mut images = BTreeSet::new();
            for t in &tubings {
                let d = cycle_tubing_to_delannoy(t, b)?;
                ensure!(
                    d.is_delannoy() && d.length() == 2 * (n - 1),
                    "Γ_{n}: {d} is not a Delannoy path"
                );
                ensure!(d.flats() + t.num_tubes() + 1 == n, "Γ_{n}: flats of {d}");
                ensure!(
                    delannoy_to_cycle_tubing(&d, b)? == *t,
                    "Γ_{n}, basepoint {b}: {d} does not return"
                );
                images.insert(d);
            }
            ensure!(images.len() == tubings.len(), "Γ_{n}: images collide");
            cycle += tubings.len();
        }
    }

    let arcs = [(7, 3), (7, 2), (3, 3), (5, 1), (3, 1)];
    let t = Tubing::new(Graph::Cycle(8), arcs.iter().map(|&(s, l)| Tube::new(s, l)).collect())?;
    let m = cycle_tubing_to_marked(&t, 0)?;
    let want: PathWord = "UUFDDFUUDDUDF".parse()?;
    ensure!(
        m.path == want && m.j == 4,
        "worked Γ_8 instance gives {} with j = {}",
        m.path,
        m.j
    );
    let d = marked_to_delannoy(&m)?;
    ensure!(d.to_string() == "DFUUDDUDDUUF", "worked Γ_8 instance maps to {d}");
    ensure!(
        delannoy_to_cycle_tubing(&d, 0)? == t,
        "worked Γ_8 instance does not return"
    );
    Ok(format!(
        "{interval} interval and {cycle} cycle roundtrips, worked Γ_8 instance"
    ))
}

fn macmahon() -> Check {
    let mut contents: Vec<Vec<u64>> = vec![vec![]];
    let mut all = Vec::new();
    while let Some(alpha) = contents.pop() {
        let size: u64 = alpha.iter().sum();
        if size > 0 {
            all.push(alpha.clone());
        }
        for part in 1..=6 - size {
            let mut next = alpha.clone();
            next.push(part);
            contents.push(next);
        }
    }
    for alpha in &all {
        let parts: Vec<i64> = alpha.iter().map(|&m| m as i64).collect();
        let words = words_with_content(alpha);
        let multinomial = q_multinomial(&parts);
        ensure!(maj_polynomial(&words)? == multinomial, "maj at {alpha:?}");
        let mut used = 0;
        let mut count = BigInt::one();
        for &m in &parts {
            used += m;
            count *= binom(used, m);
        }
        ensure!(
            count == BigInt::from(words.len()),
            "{} words of content {alpha:?}",
            words.len()
        );
    }

    let trinomial = |n: i64, k: i64| {
        (0..=n)
            .map(|i| &q_binomial(n, i) * &q_binomial(n - i, k + i))
            .sum::<IntPolynomial>()
    };
    let cases: [(
        &str,
        Alphabet,
        std::ops::RangeInclusive<i64>,
        &dyn Fn(i64, i64) -> IntPolynomial,
    ); 3] = [
        ("A = {0, 1, ...}", Alphabet::nonneg(), 0..=8, &|n, k| {
            q_binomial(n + k - 1, k)
        }),
        ("A = {1, 2, ...}", Alphabet::positive(), 1..=8, &|n, k| {
            q_binomial(k - 1, k - n)
        }),
        ("A = {-1, 0, 1}", Alphabet::range(-1, 1), -8..=8, &trinomial),
    ];
    let mut checked = 0;
    for (name, alphabet, ks, target) in cases {
        for n in 1..=6usize {
            for k in ks.clone() {
                let maj = maj_polynomial(&compositions(n, k, alphabet)?)?;
                let want = target(n as i64, k);
                ensure!(
                    maj.reduce_mod_qn_minus_1(n)? == want.reduce_mod_qn_minus_1(n)?,
                    "{name}, n = {n}, k = {k}: {maj} vs {want}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{} contents, {checked} composition fibres", all.len()))
}

fn signed_count(x: &[gauss_sieve::objects::CyclicObject]) -> i64 {
    x.iter().map(|f| i64::from(f.sign)).sum()
}

fn signed_sieving() -> Check {
    let p = partitions(10);
    let neg_p: Vec<i64> = p[1..].iter().map(|v| -v).collect();
    let c = SequenceSpec::from_int_values(Role::C, &neg_p);
    for n in 1..=10u64 {
        let x = signed_festoons(&c, &RankedElement::Int(n))?;
        ensure!(
            signed_count(&x) == -sigma(n),
            "signed festoons at {n}: {}",
            signed_count(&x)
        );
        let y = barrier_festoons(n as usize, BarrierRule::AtLeastOne)?;
        ensure!(
            signed_count(&y) == -sigma(n),
            "barrier festoons at {n}: {}",
            signed_count(&y)
        );
        ensure!(y.len() == x.len(), "barrier and signed festoons differ in size at {n}");
    }

    let a = SequenceSpec::on_ints(Role::A, 9, |n| BigInt::from(-sigma(n)));
    let f = construct_ramanujan(&a)?;
    let signed = CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(9), |s| {
        signed_festoons(&c, s)
    })?;
    report_ok(&verify_signed_csp(&signed, &f)?, "signed festoons")?;
    let barriers = CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(9), |s| {
        barrier_festoons(s.as_int().unwrap() as usize, BarrierRule::AtLeastOne)
    })?;
    report_ok(&verify_signed_csp(&barriers, &f)?, "barrier festoons")?;

    let y = CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(9), |s| {
        barrier_festoons(s.as_int().unwrap() as usize, BarrierRule::Any)
    })?;
    let zero = PolyFamily::on_ints(9, |_| IntPolynomial::zero());
    report_ok(&verify_signed_csp(&y, &zero)?, "Y_n against 0")?;
    Ok("signed counts n ≤ 10; signed sieving odd n ≤ 9 for -σ and (Y_n, 0)".into())
}

fn riordan_identity() -> Check {
    let examples: [(&str, Vec<i64>); 3] = [
        ("1 + t²", vec![1, 0, 1]),
        ("1/(1-t)", vec![1; 11]),
        (
            "(1-t)/(1-2t)",
            (0..11).map(|i| if i == 0 { 1 } else { 1 << (i - 1) }).collect(),
        ),
    ];
    let strict: Vec<BigInt> = (1..=10usize)
        .map(|n| enumerate_paths(PathKind::Strict, 2 * (n - 1), None).map(|p| BigInt::from(p.len())))
        .collect::<Result<_, _>>()?;
    let mut checked = 0;
    for (name, d) in examples {
        let c = solve_oracle(&d, 10);
        if name.starts_with("(1-t)") {
            ensure!(c == strict, "strict Schröder oracle disagrees with path counts");
        }
        let mut padded = d.clone();
        padded.resize(11, 0);
        let series = TruncatedSeries::from_ints(0, &padded, 11)?;
        let h = hat(&SequenceSpec::from_int_values(Role::C, &ints(&c[..7])))?;
        for n in 1..=10usize {
            for k in 1..=n {
                let got = riordan_count(&series, n as u64, k as i64)?;
                let want = festoons_by_beads(&c, n, k);
                ensure!(got == want, "D = {name}, ({n},{k}): series {got}, festoons {want}");
                if n <= 7 {
                    let listed = festoons_colored(&h, &RankedElement::tuple(n as u64, &[k as i64]))?.len();
                    ensure!(
                        BigInt::from(listed) == want,
                        "D = {name}, ({n},{k}): {listed} festoons listed"
                    );
                }
                checked += 1;
            }
        }
        let totals = festoon_totals(&c, 10);
        let by_k: Vec<BigInt> = (1..=10)
            .map(|n| (1..=n).map(|k| festoons_by_beads(&c, n, k)).sum())
            .collect();
        ensure!(totals == by_k, "D = {name}: bead counts do not sum to totals");
    }
    Ok(format!("{checked} entries across three series"))
}

fn negative_controls(corrupted: &[Corruption]) -> Check {
    let fib = |n: u64| {
        let (mut x, mut y) = (BigInt::one(), BigInt::one());
        for _ in 1..n {
            (x, y) = (y.clone(), x + y);
        }
        x
    };
    let sequences: [(&str, SequenceSpec, &str); 3] = [
        ("a_n = n", SequenceSpec::on_ints(Role::A, 10, BigInt::from), "2"),
        (
            "a_n = n²",
            SequenceSpec::on_ints(Role::A, 10, |n| BigInt::from(n * n)),
            "2",
        ),
        ("Fibonacci", SequenceSpec::on_ints(Role::A, 10, fib), "3"),
    ];
    for (name, a, witness) in &sequences {
        let r = check_gauss(a, None)?;
        let got = r.witness().map(|w| w.element.as_str());
        ensure!(got == Some(*witness), "{name}: witness {got:?}, expected {witness}");
        ensure!(b_from_a(a).is_err(), "{name}: b_from_a accepted a non-Gauss sequence");
    }
    for c in corrupted {
        for r in [&c.definition, &c.roots] {
            ensure!(
                !r.passed(),
                "{} corrupted at {}: {} passed",
                c.family,
                c.element,
                r.name
            );
            ensure!(
                r.failures().any(|f| f.element == c.element),
                "{} corrupted at {}: {} names other elements",
                c.family,
                c.element,
                r.name
            );
        }
    }
    let fam = all_tubings_family(5)?;
    let f = PolyFamily::on_ints(5, |n| all_cycle_tubings(n as i64));
    let four = RankedElement::Int(4);
    let witness = |r: CheckReport| r.witness().map(|w| w.element.clone());
    ensure!(
        witness(verify_csp(&fam, &f.corrupted(&four)?)?) == Some("4".into()),
        "CSP control"
    );
    ensure!(
        witness(verify_lyndon(&fam.without_one(&four)?)?).is_some(),
        "Lyndon control"
    );
    let barriers = CyclicFamily::generate(SemigroupInstance::PositiveInts, Window::rank(5), |s| {
        barrier_festoons(s.as_int().unwrap() as usize, BarrierRule::AtLeastOne)
    })?;
    let zero = PolyFamily::on_ints(5, |_| IntPolynomial::zero());
    ensure!(
        witness(verify_signed_csp(&barriers, &zero)?) == Some("1".into()),
        "signed CSP control"
    );
    Ok(format!(
        "{} non-Gauss sequences, {} corruptions, 3 sieving controls",
        sequences.len(),
        corrupted.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = corpus();
    let fixtures = valid_families(&corpus).and_then(|f| corruptions(&f).map(|c| (f, c)));
    let (families, corrupted) = match fixtures {
        Ok(x) => x,
        Err(Fail(e)) => {
            println!("FAIL  fixtures: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [(&str, &dyn Fn() -> Check); 10] = [
        ("transform roundtrips", &|| transform_roundtrips(&corpus)),
        ("construction coherence", &|| construction_coherence(&corpus)),
        ("checker equivalence", &|| checker_equivalence(&families, &corrupted)),
        ("cyclic sieving suites", &csp_suites),
        ("quantitative values", &quantitative_values),
        ("bijection roundtrips", &bijection_roundtrips),
        ("major index", &macmahon),
        ("signed sieving", &signed_sieving),
        ("riordan identity", &riordan_identity),
        ("negative controls", &|| negative_controls(&corrupted)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let line = match run() {
            Ok(detail) => format!("PASS  {:>2} {name}: {detail}", i + 1),
            Err(Fail(e)) => {
                failed += 1;
                format!("FAIL  {:>2} {name}: {e}", i + 1)
            }
        };
        println!("{line} [{:.1}s]", t.elapsed().as_secs_f64());
    }
    println!(
        "{} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
