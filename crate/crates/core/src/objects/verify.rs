use num_bigint::BigInt;

use super::{fixed_points, CyclicFamily, CyclicObject};
use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::qgauss::PolyFamily;
use crate::qpoly::eval_at_primitive_root;
use crate::report::{CheckReport, ElementCheck};

fn signed_count(set: &[CyclicObject]) -> i64 {
    set.iter().map(|x| i64::from(x.sign)).sum()
}

/// Check that each `X_s` is closed under rotation, and that
/// `#X_s^{C_d} = Σ_{t ∈ s/d} #X_t` for every `d | rk(s)`.
pub fn verify_lyndon(family: &CyclicFamily) -> Result<CheckReport> {
    let inst = &family.instance;
    let mut report = CheckReport::new("lyndon");
    for s in family.elements()? {
        let n = inst.rank(&s)? as usize;
        let set = family.get(&s)?;
        let name = inst.describe(&s);
        if let Some(x) = set
            .iter()
            .find(|x| x.len() != n || set.binary_search(&x.rotate(1)).is_err())
        {
            report.push(ElementCheck::fail(
                name,
                None,
                format!("not closed under rotation at {:?}", x.encoding),
            ));
            continue;
        }
        let mut failure = None;
        for d in divisors(n as u64)? {
            let fixed = fixed_points(set, n, d as usize)?.len();
            let mut expected = 0;
            for t in inst.root_set(&s, d)? {
                expected += family.get(&t)?.len();
            }
            if fixed != expected {
                failure = Some((d, format!("{fixed} fixed by C_{d}, expected {expected}")));
                break;
            }
        }
        report.push(match failure {
            None => ElementCheck::pass(name),
            Some((d, detail)) => ElementCheck::fail(name, Some(d), detail),
        });
    }
    Ok(report)
}

fn sieve(family: &CyclicFamily, f: &PolyFamily, name: &str, signed: bool) -> Result<CheckReport> {
    if family.instance != f.instance {
        return Err(Error::MixedInstance(
            "objects and polynomials live on different instances".into(),
        ));
    }
    let inst = &family.instance;
    let mut report = CheckReport::new(name);
    for s in family.elements()? {
        let n = inst.rank(&s)? as usize;
        if signed && n.is_multiple_of(2) {
            continue;
        }
        let set = family.get(&s)?;
        let fs = f.get(&s)?;
        let mut failure = None;
        for d in divisors(n as u64)? {
            let fixed = fixed_points(set, n, d as usize)?;
            let count = if signed {
                signed_count(&fixed)
            } else {
                fixed.len() as i64
            };
            let value = eval_at_primitive_root(fs, d)?;
            if !value.is_integer(&BigInt::from(count)) {
                failure = Some((d, format!("f(ω_{d}) = {value}, fixed points {count}")));
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

/// Check `f_s(ω_d) = #X_s^{C_d}` for every `s` and `d | rk(s)`.
pub fn verify_csp(family: &CyclicFamily, f: &PolyFamily) -> Result<CheckReport> {
    sieve(family, f, "csp", false)
}

/// Check `f_s(ω_d) = #(X_s^+)^{C_d} - #(X_s^-)^{C_d}` for every `s` of odd
/// rank and `d | rk(s)`. Elements of even rank are skipped.
pub fn verify_signed_csp(family: &CyclicFamily, f: &PolyFamily) -> Result<CheckReport> {
    sieve(family, f, "signed_csp", true)
}
