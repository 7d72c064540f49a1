//! The verification battery behind `drawings verify`, collected into a
//! pass/fail table.

use std::fmt;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::arrangement::{
    b_regions_inside, classify_b_region, classify_b_region_geometric, classify_h_region,
    classify_h_region_geometric, default_weights, random_weights, refinement_map, validate_certificate,
    LWeights,
};
use crate::enumerate::{cross_check_report, ordered_partitions, signed_permutations, EnumError};
use crate::objects::Sign;
use crate::series::{self, Series};

/// Seed for the randomized weight vectors.
pub const WEIGHT_SEED: u64 = 0x5eed_2013;

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), ok, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{status}  {}", self.name)
        } else {
            write!(f, "{status}  {:<64} {}", self.name, self.detail)
        }
    }
}

/// The default weights plus three seeded random dominant weight vectors.
pub fn weight_family(n: usize) -> Vec<LWeights> {
    let mut rng = StdRng::seed_from_u64(WEIGHT_SEED ^ n as u64);
    let mut family = vec![default_weights(n)];
    family.extend((0..3).map(|_| random_weights(n, 20, &mut rng)));
    family
}

/// Geometric and combinatorial `B_n` classification agree for every signed
/// permutation and weight vector, and every certificate validates.
pub fn check_b_classifier(n: usize) -> Check {
    let perms = signed_permutations(n);
    let mut checked = 0usize;
    for w in weight_family(n) {
        for s in &perms {
            let (class, cert) = match classify_b_region_geometric(&w, s) {
                Ok(r) => r,
                Err(e) => return Check::new(format!("B classifier n={n}"), false, e.to_string()),
            };
            if class != classify_b_region(s) {
                return Check::new(format!("B classifier n={n}"), false, format!("disagree on {s}"));
            }
            if let Err(e) = validate_certificate(&w, s, &cert) {
                return Check::new(format!("B classifier n={n}"), false, format!("{s}: {e}"));
            }
            checked += 1;
        }
    }
    Check::new(
        format!("B classifier agrees, certificates valid, n={n}"),
        true,
        format!("{checked} region/weight pairs"),
    )
}

/// The refinement map hits every (partition, orientation) pair, and each
/// `H_n` region has the class shared by all `B_n` regions inside it.
pub fn check_h_structure(n: usize) -> Check {
    let name = format!("H regions are unions of like B regions, n={n}");
    let mut hits = std::collections::BTreeMap::new();
    for s in signed_permutations(n) {
        *hits.entry(refinement_map(&s)).or_insert(0usize) += 1;
    }
    let w = default_weights(n);
    for p in ordered_partitions(n) {
        for o in [Sign::Plus, Sign::Minus] {
            let inside = b_regions_inside(&p, o);
            if hits.get(&(p.clone(), o)) != Some(&inside.len()) {
                return Check::new(name, false, format!("refinement count differs for {p} {o}"));
            }
            let expected = classify_h_region(&p, o);
            if inside.iter().any(|s| classify_b_region(s) != expected) {
                return Check::new(name, false, format!("mixed B classes inside {p} {o}"));
            }
            if classify_h_region_geometric(&w, &p, o) != Ok(expected) {
                return Check::new(name, false, format!("geometric H class differs for {p} {o}"));
            }
        }
    }
    let pairs = hits.len();
    Check::new(name, pairs == 2 * ordered_partitions(n).len(), format!("{pairs} regions"))
}

/// Series identities at truncation order `order`.
pub fn check_series(order: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let b = series::b_series(order);
    let exp = series::series_exp_x(order);
    let b_target = exp.div(&(&Series::from_ints(&[2], order) - &exp)).expect("nonzero constant term");
    out.push(Check::new(format!("(sqrt f)^2 = f for e^x/(2-e^x), order {order}"), &b * &b == b_target, ""));
    let p = series::p_series(order);
    let p_target = Series::from_ints(&[1, 1], order).div(&Series::from_ints(&[1, -1], order)).expect("nonzero");
    out.push(Check::new(format!("(sqrt f)^2 = f for (1+x)/(1-x), order {order}"), &p * &p == p_target, ""));

    let egf_b = series::egf_b(order);
    let egf_p = series::egf_p(order);
    out.push(Check::new("egf_b coefficients are integers", egf_b.is_ok(), ""));
    out.push(Check::new("egf_p coefficients are integers", egf_p.is_ok(), ""));
    if let (Ok(bs), Ok(ps)) = (egf_b, egf_p) {
        let comp_ok = (0..=order).all(|n| series::b_via_composition(n) == bs[n]);
        out.push(Check::new(format!("b_via_composition = egf_b, n <= {order}"), comp_ok, ""));
        let closed_ok = (0..=order).all(|n| series::p_closed_form(n) == ps[n]);
        out.push(Check::new(format!("p closed form = egf_p, n <= {order}"), closed_ok, ""));
        let rec_ok = (1..=order).all(|n| {
            let factor = if n % 2 == 1 { n } else { n - 1 };
            ps[n] == &ps[n - 1] * BigInt::from(factor)
        });
        out.push(Check::new(format!("p recurrence, n <= {order}"), rec_ok, ""));
    }
    out
}

/// Runs the whole battery for all sizes up to `n_max`.
pub fn run_battery(n_max: usize, limit: usize) -> Result<Vec<Check>, EnumError> {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let report = cross_check_report(n, limit)?;
        checks.extend(report.lines.into_iter().map(|l| {
            Check::new(format!("n={n} {}", l.check), l.ok, format!("expected {} got {}", l.expected, l.actual))
        }));
    }
    for n in 1..=n_max {
        checks.push(check_b_classifier(n));
        checks.push(check_h_structure(n));
    }
    checks.extend(check_series(20));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_family_is_deterministic_and_dominant() {
        let a = weight_family(4);
        let b = weight_family(4);
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        for w in &a {
            assert!(LWeights::new(w.values().to_vec()).is_ok());
        }
    }

    #[test]
    fn small_battery_passes() {
        let checks = run_battery(3, 7).unwrap();
        for c in &checks {
            assert!(c.ok, "{c}");
        }
    }
}
