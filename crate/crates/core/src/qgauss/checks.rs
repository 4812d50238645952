use num_bigint::BigInt;

use super::PolyFamily;
use crate::arith::{divisors, mobius};
use crate::error::{Error, Result};
use crate::qpoly::{eval_at_primitive_root, q_int, IntPolynomial};
use crate::report::{CheckReport, ElementCheck};

/// Test `[rk s]_q | Σ_{t|s} μ(s/t) f_t(q^{s/t})` by polynomial division.
pub fn check_qgauss_definition(f: &PolyFamily) -> Result<CheckReport> {
    let inst = &f.instance;
    let mut report = CheckReport::new("qgauss_definition");
    for s in f.elements()? {
        let r = inst.rank(&s)?;
        let mut total = IntPolynomial::zero();
        for (t, d) in inst.unit_divisors(&s)? {
            let mu = mobius(d)?;
            if mu != 0 {
                total += &f.get(&t)?.substitute_power(d as usize).scale(&BigInt::from(mu));
            }
        }
        let (_, rem) = total.div_rem_monic(&q_int(r))?;
        report.push(if rem.is_zero() {
            ElementCheck::pass(inst.describe(&s))
        } else {
            ElementCheck::fail(inst.describe(&s), None, format!("remainder {rem}"))
        });
    }
    Ok(report)
}

/// Test `f_s(ω_d) = Σ_{t ∈ s/d} f_t(1)` for every `d | rk(s)`, with `ω_d` a
/// primitive `d`-th root of unity. Each element reports its smallest
/// failing `d`.
pub fn check_qgauss_roots(f: &PolyFamily) -> Result<CheckReport> {
    let inst = &f.instance;
    let mut report = CheckReport::new("qgauss_roots");
    for s in f.elements()? {
        let r = inst.rank(&s)?;
        let fs = f.get(&s)?;
        let mut failure = None;
        for d in divisors(r)? {
            let mut expected = BigInt::from(0);
            for t in inst.root_set(&s, d)? {
                expected += f.get(&t)?.eval_at_one();
            }
            let value = eval_at_primitive_root(fs, d)?;
            if !value.is_integer(&expected) {
                failure = Some((d, format!("f(ω_{d}) = {value}, expected {expected}")));
                break;
            }
        }
        report.push(match failure {
            None => ElementCheck::pass(inst.describe(&s)),
            Some((d, detail)) => ElementCheck::fail(inst.describe(&s), Some(d), detail),
        });
    }
    Ok(report)
}

/// Test `f_s ≡ g_s (mod q^{rk s} - 1)` on the common window.
pub fn equivalent_mod(f: &PolyFamily, g: &PolyFamily) -> Result<CheckReport> {
    if f.instance != g.instance || f.window != g.window {
        return Err(Error::MixedInstance(
            "families live on different instances or windows".into(),
        ));
    }
    let inst = &f.instance;
    let mut report = CheckReport::new("equivalent_mod");
    for s in f.elements()? {
        let r = inst.rank(&s)?;
        let diff = (f.get(&s)? - g.get(&s)?).reduce_mod_qn_minus_1(r as usize)?;
        report.push(if diff.is_zero() {
            ElementCheck::pass(inst.describe(&s))
        } else {
            ElementCheck::fail(inst.describe(&s), None, format!("difference {diff} mod q^{r} - 1"))
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::q_binomial;
    use crate::semigroup::{Component, RankedElement, SemigroupInstance, Window};

    fn binomials(max_n: u64, lo: i64, hi: i64) -> PolyFamily {
        let inst = SemigroupInstance::chain(SemigroupInstance::PositiveInts, &[Component::Ints]);
        let w = Window::rank(max_n).with_extra_bounds(lo, hi);
        PolyFamily::from_fn(inst, w, |s| q_binomial(s.as_int().unwrap() as i64, s.extras()[0])).unwrap()
    }

    #[test]
    fn constant_q_fails_at_two() {
        let f = PolyFamily::on_ints(6, |_| IntPolynomial::monomial(1, 1));
        let def = check_qgauss_definition(&f).unwrap();
        let roots = check_qgauss_roots(&f).unwrap();
        assert_eq!(def.witness().unwrap().element, "2");
        assert_eq!(roots.witness().unwrap().element, "2");
        assert_eq!(roots.witness().unwrap().failing_divisor, Some(2));
    }

    #[test]
    fn q_power_family_passes() {
        let f = PolyFamily::on_ints(8, |n| IntPolynomial::monomial(1, n as usize));
        assert!(check_qgauss_definition(&f).unwrap().passed());
        assert!(check_qgauss_roots(&f).unwrap().passed());
    }

    #[test]
    fn q_integers_fail_at_two() {
        // [2]_q - [1]_{q^2} = q is not divisible by 1 + q.
        let f = PolyFamily::on_ints(10, q_int);
        assert_eq!(check_qgauss_definition(&f).unwrap().witness().unwrap().element, "2");
        assert_eq!(check_qgauss_roots(&f).unwrap().witness().unwrap().element, "2");
        let constant = PolyFamily::on_ints(10, |_| IntPolynomial::one());
        assert!(check_qgauss_definition(&constant).unwrap().passed());
    }

    #[test]
    fn binomial_family_roots() {
        let f = binomials(6, -1, 7);
        let el = RankedElement::tuple(4, &[2]);
        let v = eval_at_primitive_root(f.get(&el).unwrap(), 2).unwrap();
        assert_eq!(v.as_integer(), Some(BigInt::from(2)));
        let v = eval_at_primitive_root(f.get(&RankedElement::tuple(4, &[1])).unwrap(), 2).unwrap();
        assert_eq!(v.as_integer(), Some(BigInt::from(0)));
        assert!(check_qgauss_roots(&f).unwrap().passed());
        assert!(check_qgauss_definition(&f).unwrap().passed());
    }

    #[test]
    fn checkers_agree_on_corruptions() {
        let f = binomials(6, 0, 6);
        for s in f.elements().unwrap() {
            let g = f.corrupted(&s).unwrap();
            let a = check_qgauss_definition(&g).unwrap().passed();
            let b = check_qgauss_roots(&g).unwrap().passed();
            assert_eq!(a, b, "{s}");
        }
        let c = f.corrupted(&RankedElement::tuple(4, &[2])).unwrap();
        let w = check_qgauss_roots(&c).unwrap();
        assert_eq!(w.witness().unwrap().element, "(4,2)");
    }

    #[test]
    fn self_equivalence() {
        let f = binomials(5, 0, 5);
        assert!(equivalent_mod(&f, &f).unwrap().passed());
        assert!(equivalent_mod(&f, &f.reduced().unwrap()).unwrap().passed());
        let g = f.corrupted(&RankedElement::tuple(3, &[1])).unwrap();
        assert_eq!(equivalent_mod(&f, &g).unwrap().witness().unwrap().element, "(3,1)");
    }
}
