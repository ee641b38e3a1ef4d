//! Step translations from double-step graphs to New Amsterdam digraphs and
//! on to Manhattan digraphs, plus checkers for the congruence systems those
//! translations solve.
//!
//! All arithmetic happens over plain integers and is reduced modulo the
//! target order only when the record is built.

use serde::Serialize;

use crate::families::{CompileMode, DoubleStep, FamilyError, Manhattan, NewAmsterdam};
use crate::graphs::{diameter, Diameter};

fn require_valid(p: &DoubleStep) -> Result<(), FamilyError> {
    let v = p.validate();
    if v.is_ok() {
        Ok(())
    } else {
        Err(FamilyError::Invalid(v.violations))
    }
}

/// `NA(2N; -1, 2(b-a)-1, 2a+1, -2b+1)`.
pub fn ds_to_na(p: &DoubleStep) -> Result<NewAmsterdam, FamilyError> {
    require_valid(p)?;
    let (a, b) = (i64::from(p.a()), i64::from(p.b()));
    NewAmsterdam::new(2 * p.order(), -1, 2 * (b - a) - 1, 2 * a + 1, -2 * b + 1)
}

/// Manhattan steps on `2 N_NA` vertices:
///
/// ```text
/// a0 = 1,         a1 = 2 alpha - 1,           a2 = 1,          a3 = -2 alpha - 1
/// b0 = 2 gamma+1, b1 = 2 beta + 2 gamma - 1,  b2 = -2 gamma+1, b3 = -2 beta - 2 gamma - 1
/// ```
///
/// Hard violations of the input block the translation; warnings do not.
/// delta does not appear: it is fixed by the other three through the step sum.
pub fn na_to_mh(p: &NewAmsterdam) -> Result<Manhattan, FamilyError> {
    let v = p.validate();
    if !v.is_ok() {
        return Err(FamilyError::Invalid(v.violations));
    }
    Ok(na_steps_to_mh(p.order(), p.steps().map(i64::from)))
}

fn na_steps_to_mh(order: u32, [alpha, beta, gamma, _delta]: [i64; 4]) -> Manhattan {
    let steps = [
        1,
        2 * gamma + 1,
        2 * alpha - 1,
        2 * beta + 2 * gamma - 1,
        1,
        -2 * gamma + 1,
        -2 * alpha - 1,
        -2 * beta - 2 * gamma - 1,
    ];
    Manhattan::new(2 * order, steps).expect("order is positive")
}

/// `MH(4N; a = (1, -3, 1, 1), b = (4a+3, 4b-1, -4a-1, -4b-1))`.
///
/// Uses the signed residues `a`, `b` exactly as stored, matching
/// `na_to_mh(ds_to_na(p))` step for step.
pub fn ds_to_mh(p: &DoubleStep) -> Result<Manhattan, FamilyError> {
    require_valid(p)?;
    let (a, b) = (i64::from(p.a()), i64::from(p.b()));
    Manhattan::new(4 * p.order(), [1, 4 * a + 3, -3, 4 * b - 1, 1, -4 * a - 1, 1, -4 * b - 1])
}

fn congruent(x: i64, y: i64, modulus: u32) -> bool {
    (x - y).rem_euclid(i64::from(modulus)) == 0
}

/// Checks that `na` satisfies the double-step-to-New-Amsterdam system for
/// `ds`: order `2N`, all steps odd, `alpha+gamma = -beta-delta = 2a` and
/// `beta+gamma = -alpha-delta = 2b` (mod 2N). Returns the failed conditions.
pub fn check_ds_na_conditions(ds: &DoubleStep, na: &NewAmsterdam) -> Vec<String> {
    let mut failed = Vec::new();
    let m = na.order();
    if m != 2 * ds.order() {
        failed.push(format!("order {m} is not 2N = {}", 2 * ds.order()));
    }
    let [alpha, beta, gamma, delta] = na.steps().map(i64::from);
    if [alpha, beta, gamma, delta].iter().any(|s| s % 2 == 0) {
        failed.push("steps must all be odd".into());
    }
    let (a2, b2) = (2 * i64::from(ds.a()), 2 * i64::from(ds.b()));
    if !(congruent(alpha + gamma, a2, m) && congruent(-beta - delta, a2, m)) {
        failed.push("alpha+gamma = -beta-delta = 2a fails".into());
    }
    if !(congruent(beta + gamma, b2, m) && congruent(-alpha - delta, b2, m)) {
        failed.push("beta+gamma = -alpha-delta = 2b fails".into());
    }
    failed
}

/// Checks the New-Amsterdam-to-Manhattan system: order `2 N_NA`, all eight
/// steps odd, the Manhattan sum condition, and
/// `a0+a1 = 2 alpha`, `b1+b2 = 2 beta`, `b3-a1 = 2 delta`, `b0-a0 = 2 gamma`
/// (mod N_MH).
pub fn check_na_mh_conditions(na: &NewAmsterdam, mh: &Manhattan) -> Vec<String> {
    let mut failed = Vec::new();
    let m = mh.order();
    if m != 2 * na.order() {
        failed.push(format!("order {m} is not 2 N_NA = {}", 2 * na.order()));
    }
    let s = mh.steps().map(i64::from);
    if s.iter().any(|x| x % 2 == 0) {
        failed.push("steps must all be odd".into());
    }
    let sums = mh.condition_sums();
    if sums.iter().any(|&x| x != sums[0]) {
        failed.push("a0+a2 = -(a1+a3) = b0+b2 = -(b1+b3) fails".into());
    }
    let [alpha, beta, gamma, delta] = na.steps().map(i64::from);
    let [a0, b0, a1, b1, _a2, b2, _a3, b3] = s;
    let checks = [
        (a0 + a1, 2 * alpha, "a0+a1 = 2 alpha"),
        (b1 + b2, 2 * beta, "b1+b2 = 2 beta"),
        (b3 - a1, 2 * delta, "b3-a1 = 2 delta"),
        (b0 - a0, 2 * gamma, "b0-a0 = 2 gamma"),
    ];
    for (lhs, rhs, label) in checks {
        if !congruent(lhs, rhs, m) {
            failed.push(format!("{label} fails"));
        }
    }
    failed
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SandwichKind {
    /// `2k <= D_NA <= 2k+1`
    NaFromDs,
    /// `2k+1 <= D_MH <= 2k+2`
    MhFromDs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SandwichReport {
    pub kind: SandwichKind,
    pub ds: String,
    /// Diameter of the double-step graph.
    pub k: u32,
    pub derived_diameter: Diameter,
    pub low: u32,
    pub high: u32,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SandwichError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{0} is not connected")]
    Disconnected(String),
}

/// Builds the derived digraph for `p` and checks its diameter lies in the
/// interval predicted from the double-step diameter `k`.
pub fn check_diameter_sandwich(kind: SandwichKind, p: &DoubleStep) -> Result<SandwichReport, SandwichError> {
    let k = diameter(&p.compile(CompileMode::Strict)?)
        .finite()
        .ok_or_else(|| SandwichError::Disconnected(p.to_string()))?;
    let (derived, low) = match kind {
        SandwichKind::NaFromDs => (ds_to_na(p)?.compile(CompileMode::Strict)?, 2 * k),
        SandwichKind::MhFromDs => (ds_to_mh(p)?.compile(CompileMode::Strict)?, 2 * k + 1),
    };
    let derived_diameter = diameter(&derived);
    let high = low + 1;
    let pass = derived_diameter.finite().is_some_and(|d| (low..=high).contains(&d));
    Ok(SandwichReport { kind, ds: p.to_string(), k, derived_diameter, low, high, pass })
}

/// Every valid double-step parameter pair `1 <= a < b <= N/2` for `3 <= N <= n_max`.
pub fn valid_double_steps(n_max: u32) -> impl Iterator<Item = DoubleStep> {
    (3..=n_max).flat_map(|n| {
        (1..=n / 2).flat_map(move |a| {
            (a + 1..=n / 2).filter_map(move |b| {
                let p = DoubleStep::new(n, i64::from(a), i64::from(b)).expect("positive order");
                p.validate().is_ok().then_some(p)
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ds_to_na_basic_pair() {
        for k in 1..=6i64 {
            let n = (2 * k * k + 2 * k + 1) as u32;
            let na = ds_to_na(&DoubleStep::new(n, k, k + 1).unwrap()).unwrap();
            assert_eq!(na, NewAmsterdam::new(2 * n, -1, 1, 2 * k + 1, -2 * k - 1).unwrap());
        }
    }

    #[test]
    fn ds_to_na_thirteen() {
        let ds = DoubleStep::new(13, 2, 3).unwrap();
        let na = ds_to_na(&ds).unwrap();
        assert_eq!(na.to_string(), "na:26,-1,1,5,-5");
        assert!(check_ds_na_conditions(&ds, &na).is_empty());
        let d = diameter(&na.compile(CompileMode::Strict).unwrap()).finite().unwrap();
        assert!((4..=5).contains(&d));
    }

    #[test]
    fn na_to_mh_theorem_steps() {
        for k in 1..=5i64 {
            let na = NewAmsterdam::new(20 + 8 * k as u32, -1, 1, 2 * k + 1, -2 * k - 1).unwrap();
            let mh = na_to_mh(&na).unwrap();
            let expected = Manhattan::new(2 * na.order(), [1, 4 * k + 3, -3, 4 * k + 3, 1, -4 * k - 1, 1, -4 * k - 5])
                .unwrap();
            assert_eq!(mh, expected);
            assert!(check_na_mh_conditions(&na, &mh).is_empty());
        }
    }

    #[test]
    fn moore_na_to_twenty_vertex_mh() {
        let na = NewAmsterdam::new(10, -1, 1, 3, -3).unwrap();
        let mh = na_to_mh(&na).unwrap();
        assert_eq!(mh.to_string(), "mh:20,1,7,-3,7,1,-5,1,-9");
        assert_eq!(diameter(&mh.compile(CompileMode::Strict).unwrap()), Diameter::Finite(4));
    }

    #[test]
    fn ds_to_mh_thirteen() {
        let ds = DoubleStep::new(13, 2, 3).unwrap();
        let mh = ds_to_mh(&ds).unwrap();
        assert_eq!(mh.to_string(), "mh:52,1,11,-3,11,1,-9,1,-13");
        assert_eq!(mh, na_to_mh(&ds_to_na(&ds).unwrap()).unwrap());
        let d = diameter(&mh.compile(CompileMode::Strict).unwrap()).finite().unwrap();
        assert!((5..=6).contains(&d));
    }

    #[test]
    fn invalid_inputs_refused() {
        let bad = DoubleStep::new(6, 2, 4).unwrap();
        assert!(ds_to_na(&bad).is_err());
        assert!(ds_to_mh(&bad).is_err());
        assert!(na_to_mh(&NewAmsterdam::new(8, 1, 3, 5, 5).unwrap()).is_err());
        // gamma = delta is only a warning
        assert!(na_to_mh(&NewAmsterdam::new(8, 1, 3, 1, 3).unwrap()).is_ok());
    }

    #[test]
    fn condition_checkers_catch_errors() {
        let ds = DoubleStep::new(13, 2, 3).unwrap();
        let wrong = NewAmsterdam::new(26, -1, 1, 7, -7).unwrap();
        assert_eq!(check_ds_na_conditions(&ds, &wrong).len(), 2);
        let na = ds_to_na(&ds).unwrap();
        let wrong_mh = Manhattan::new(52, [1, 11, -3, 11, 1, -9, 1, -17]).unwrap();
        assert!(!check_na_mh_conditions(&na, &wrong_mh).is_empty());
        assert_eq!(check_ds_na_conditions(&DoubleStep::new(12, 2, 3).unwrap(), &na).len(), 1);
    }

    #[test]
    fn sandwich_examples() {
        let r = check_diameter_sandwich(SandwichKind::NaFromDs, &DoubleStep::new(5, 1, 2).unwrap()).unwrap();
        assert_eq!((r.k, r.low, r.high), (1, 2, 3));
        assert!(r.pass);
        let r = check_diameter_sandwich(SandwichKind::MhFromDs, &DoubleStep::new(13, 2, 3).unwrap()).unwrap();
        assert_eq!((r.k, r.low, r.high), (2, 5, 6));
        assert!(r.pass);
        assert!(check_diameter_sandwich(SandwichKind::NaFromDs, &DoubleStep::new(6, 2, 4).unwrap()).is_err());
    }

    #[test]
    fn valid_double_step_enumeration() {
        let all: Vec<_> = valid_double_steps(6).map(|p| p.to_string()).collect();
        // N=3: no pair fits under N/2; N=4: (1,2); N=5: (1,2); N=6: (1,2), (1,3), (2,3)
        assert_eq!(all, vec!["ds:4,1,2", "ds:5,1,2", "ds:6,1,2", "ds:6,1,3", "ds:6,2,3"]);
    }
}
