//! Step-parameter records for the three families, their validity rules, and
//! compilation to [`Digraph`].
//!
//! Steps are held as canonical residues in `0..N`. The text form
//! (`ds:N,a,b`, `na:N,alpha,beta,gamma,delta`, `mh:N,a0,b0,a1,b1,a2,b2,a3,b3`)
//! accepts any integers and prints the representative in `(-N/2, N/2]`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{gcd, residue, symmetric};
use crate::graphs::{Digraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Ds,
    Na,
    Mh,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Ds => "ds",
            Family::Na => "na",
            Family::Mh => "mh",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ds" => Ok(Family::Ds),
            "na" => Ok(Family::Na),
            "mh" => Ok(Family::Mh),
            other => Err(FamilyError::Parse(format!("unknown family {other:?} (expected ds, na or mh)"))),
        }
    }
}

/// A single validity finding. Whether it blocks compilation depends on which
/// list of [`Validation`] it lands in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    ZeroStep { step: &'static str },
    EqualSteps { first: &'static str, second: &'static str },
    OppositeSteps { first: &'static str, second: &'static str },
    GcdNotOne { gcd: u64 },
    OrderNotEven { order: u32 },
    OrderNotMultipleOfFour { order: u32 },
    EvenStep { step: &'static str, value: u32 },
    StepSumNonZero { sum: u32 },
    ManhattanSums { sums: [u32; 4] },
    Mod4Class { step: &'static str, class: u32, expected: u32 },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::ZeroStep { step } => write!(f, "step {step} is 0 mod N"),
            Issue::EqualSteps { first, second } => write!(f, "steps {first} and {second} coincide mod N"),
            Issue::OppositeSteps { first, second } => write!(f, "step {first} is -{second} mod N"),
            Issue::GcdNotOne { gcd } => write!(f, "gcd(N, a, b) = {gcd}, expected 1"),
            Issue::OrderNotEven { order } => write!(f, "order {order} is not even"),
            Issue::OrderNotMultipleOfFour { order } => write!(f, "order {order} is not a multiple of 4"),
            Issue::EvenStep { step, value } => write!(f, "step {step} = {value} is even"),
            Issue::StepSumNonZero { sum } => write!(f, "alpha+beta+gamma+delta = {sum} mod N, expected 0"),
            Issue::ManhattanSums { sums } => write!(
                f,
                "a0+a2, -(a1+a3), b0+b2, -(b1+b3) are {}, {}, {}, {} mod N; they must agree",
                sums[0], sums[1], sums[2], sums[3]
            ),
            Issue::Mod4Class { step, class, expected } => {
                write!(f, "step {step} is {class} mod 4 (class rule asks for {expected})")
            }
        }
    }
}

/// Outcome of validating a parameter record. `violations` block strict
/// compilation; `warnings` never do.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<Issue>,
    pub warnings: Vec<Issue>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompileMode {
    /// Refuse parameters with hard violations.
    #[default]
    Strict,
    /// Compile whatever the arithmetic yields; repeated arcs are merged.
    Force,
}

/// Which step pair a Manhattan vertex uses.
///
/// `Reflected` (the default) gives vertex `i` the pair `(a_j, b_j)` with
/// `j = -i mod 4`; `Direct` uses `j = i mod 4`. The two differ only by
/// swapping classes 1 and 3, which leaves the step conditions unchanged. The
/// explicit step translations in [`crate::constructions`] produce digraphs
/// with the expected diameters under `Reflected`.
///
/// The residue rule `a_j = 3`, `b_j = 1 (mod 4)` belongs to `Direct`. The map
/// `i -> -i` carries a `Reflected` digraph with steps `s` onto the `Direct`
/// digraph with steps `-s`, so under `Reflected` the same rule reads
/// `a_j = 1`, `b_j = 3 (mod 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MhLabeling {
    #[default]
    Reflected,
    Direct,
}

impl MhLabeling {
    pub fn class_of(self, vertex: usize) -> usize {
        match self {
            MhLabeling::Reflected => (4 - vertex % 4) % 4,
            MhLabeling::Direct => vertex % 4,
        }
    }

    /// Residues mod 4 the rule asks of `(a_j, b_j)` under this labeling.
    pub fn step_classes(self) -> (u32, u32) {
        match self {
            MhLabeling::Reflected => (1, 3),
            MhLabeling::Direct => (3, 1),
        }
    }

    /// Whether all eight residues follow [`MhLabeling::step_classes`].
    pub fn classes_hold(self, steps: &[u32; 8]) -> bool {
        let (a, b) = self.step_classes();
        steps.iter().enumerate().all(|(i, &x)| x % 4 == if i % 2 == 0 { a } else { b })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("order must be positive")]
    ZeroOrder,
    #[error("invalid parameters: {}", join(.0))]
    Invalid(Vec<Issue>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn join(issues: &[Issue]) -> String {
    issues.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn checked_order(order: u32) -> Result<u32, FamilyError> {
    if order == 0 {
        Err(FamilyError::ZeroOrder)
    } else {
        Ok(order)
    }
}

fn gate(validation: Validation, mode: CompileMode) -> Result<(), FamilyError> {
    match mode {
        CompileMode::Strict if !validation.is_ok() => Err(FamilyError::Invalid(validation.violations)),
        _ => Ok(()),
    }
}

fn shift(i: usize, step: u32, n: usize) -> usize {
    (i + step as usize) % n
}

/// Double-step graph `G(N; ±a, ±b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleStep {
    order: u32,
    a: u32,
    b: u32,
}

impl DoubleStep {
    pub fn new(order: u32, a: i64, b: i64) -> Result<Self, FamilyError> {
        let order = checked_order(order)?;
        Ok(DoubleStep { order, a: residue(a, order), b: residue(b, order) })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn validate(&self) -> Validation {
        let n = self.order;
        let mut v = Validation::default();
        if self.a == 0 {
            v.violations.push(Issue::ZeroStep { step: "a" });
        }
        if self.b == 0 {
            v.violations.push(Issue::ZeroStep { step: "b" });
        }
        if self.a == self.b {
            v.violations.push(Issue::EqualSteps { first: "a", second: "b" });
        } else if (self.a + self.b).is_multiple_of(n) {
            v.violations.push(Issue::OppositeSteps { first: "a", second: "b" });
        }
        let g = gcd(u64::from(n), gcd(u64::from(self.a), u64::from(self.b)));
        if g != 1 {
            v.violations.push(Issue::GcdNotOne { gcd: g });
        }
        v
    }

    /// Symmetric digraph: vertex `i` points to `i+a, i-a, i+b, i-b`, with
    /// coinciding heads merged.
    pub fn compile(&self, mode: CompileMode) -> Result<Digraph, FamilyError> {
        gate(self.validate(), mode)?;
        let n = self.order as usize;
        let (a, b) = (self.a, self.b);
        let neg = |s: u32| (self.order - s) % self.order;
        Ok(Digraph::from_out_lists_dedup((0..n).map(|i| {
            [shift(i, a, n), shift(i, neg(a), n), shift(i, b, n), shift(i, neg(b), n)]
        }))?)
    }
}

/// New Amsterdam digraph `NA(N; alpha, beta, gamma, delta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewAmsterdam {
    order: u32,
    steps: [u32; 4],
}

const NA_NAMES: [&str; 4] = ["alpha", "beta", "gamma", "delta"];
const MH_NAMES: [&str; 8] = ["a0", "b0", "a1", "b1", "a2", "b2", "a3", "b3"];

impl NewAmsterdam {
    pub fn new(order: u32, alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self, FamilyError> {
        let order = checked_order(order)?;
        let steps = [alpha, beta, gamma, delta].map(|s| residue(s, order));
        Ok(NewAmsterdam { order, steps })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `[alpha, beta, gamma, delta]` as residues.
    pub fn steps(&self) -> [u32; 4] {
        self.steps
    }

    pub fn validate(&self) -> Validation {
        let n = self.order;
        let [alpha, beta, gamma, delta] = self.steps;
        let mut v = Validation::default();
        if !n.is_multiple_of(2) {
            v.violations.push(Issue::OrderNotEven { order: n });
        }
        for (step, &value) in NA_NAMES.iter().zip(&self.steps) {
            if value % 2 == 0 {
                v.violations.push(Issue::EvenStep { step, value });
            }
        }
        if alpha == beta {
            v.violations.push(Issue::EqualSteps { first: "alpha", second: "beta" });
        }
        if gamma == delta {
            v.warnings.push(Issue::EqualSteps { first: "gamma", second: "delta" });
        }
        let sum = (self.steps.iter().map(|&s| u64::from(s)).sum::<u64>() % u64::from(n)) as u32;
        if sum != 0 {
            v.violations.push(Issue::StepSumNonZero { sum });
        }
        v
    }

    /// Even vertices step by alpha and beta, odd vertices by gamma and delta.
    pub fn compile(&self, mode: CompileMode) -> Result<Digraph, FamilyError> {
        gate(self.validate(), mode)?;
        let n = self.order as usize;
        let [alpha, beta, gamma, delta] = self.steps;
        Ok(Digraph::from_out_lists_dedup((0..n).map(|i| {
            if i % 2 == 0 {
                [shift(i, alpha, n), shift(i, beta, n)]
            } else {
                [shift(i, gamma, n), shift(i, delta, n)]
            }
        }))?)
    }
}

/// Manhattan digraph `MH(N; a0, b0, a1, b1, a2, b2, a3, b3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Manhattan {
    order: u32,
    steps: [u32; 8],
}

impl Manhattan {
    /// `steps` in the order `a0, b0, a1, b1, a2, b2, a3, b3`.
    pub fn new(order: u32, steps: [i64; 8]) -> Result<Self, FamilyError> {
        let order = checked_order(order)?;
        Ok(Manhattan { order, steps: steps.map(|s| residue(s, order)) })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn steps(&self) -> [u32; 8] {
        self.steps
    }

    /// `(a_j, b_j)` for class `j`.
    pub fn pair(&self, class: usize) -> (u32, u32) {
        (self.steps[2 * class], self.steps[2 * class + 1])
    }

    /// The four quantities `a0+a2, -(a1+a3), b0+b2, -(b1+b3)` mod N.
    pub fn condition_sums(&self) -> [u32; 4] {
        let n = i64::from(self.order);
        let s = self.steps.map(i64::from);
        [s[0] + s[4], -(s[2] + s[6]), s[1] + s[5], -(s[3] + s[7])].map(|x| x.rem_euclid(n) as u32)
    }

    pub fn validate(&self) -> Validation {
        let n = self.order;
        let mut v = Validation::default();
        if !n.is_multiple_of(4) {
            v.violations.push(Issue::OrderNotMultipleOfFour { order: n });
        }
        for (step, &value) in MH_NAMES.iter().zip(&self.steps) {
            if value % 2 == 0 {
                v.violations.push(Issue::EvenStep { step, value });
            }
        }
        for j in 0..4 {
            let (a, b) = self.pair(j);
            if a == b {
                v.violations.push(Issue::EqualSteps { first: MH_NAMES[2 * j], second: MH_NAMES[2 * j + 1] });
            }
        }
        let sums = self.condition_sums();
        if sums.iter().any(|&s| s != sums[0]) {
            v.violations.push(Issue::ManhattanSums { sums });
        }
        let (a_class, b_class) = MhLabeling::default().step_classes();
        for (idx, (step, &value)) in MH_NAMES.iter().zip(&self.steps).enumerate() {
            let expected = if idx % 2 == 0 { a_class } else { b_class };
            if value % 4 != expected {
                v.warnings.push(Issue::Mod4Class { step, class: value % 4, expected });
            }
        }
        v
    }

    pub fn compile(&self, mode: CompileMode) -> Result<Digraph, FamilyError> {
        self.compile_with_labeling(mode, MhLabeling::default())
    }

    pub fn compile_with_labeling(&self, mode: CompileMode, labeling: MhLabeling) -> Result<Digraph, FamilyError> {
        gate(self.validate(), mode)?;
        let n = self.order as usize;
        Ok(Digraph::from_out_lists_dedup((0..n).map(|i| {
            let (a, b) = self.pair(labeling.class_of(i));
            [shift(i, a, n), shift(i, b, n)]
        }))?)
    }
}

/// Any of the three parameter records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyParams {
    Ds(DoubleStep),
    Na(NewAmsterdam),
    Mh(Manhattan),
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Ds(_) => Family::Ds,
            FamilyParams::Na(_) => Family::Na,
            FamilyParams::Mh(_) => Family::Mh,
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            FamilyParams::Ds(p) => p.order(),
            FamilyParams::Na(p) => p.order(),
            FamilyParams::Mh(p) => p.order(),
        }
    }

    pub fn validate(&self) -> Validation {
        match self {
            FamilyParams::Ds(p) => p.validate(),
            FamilyParams::Na(p) => p.validate(),
            FamilyParams::Mh(p) => p.validate(),
        }
    }

    pub fn compile(&self, mode: CompileMode) -> Result<Digraph, FamilyError> {
        match self {
            FamilyParams::Ds(p) => p.compile(mode),
            FamilyParams::Na(p) => p.compile(mode),
            FamilyParams::Mh(p) => p.compile(mode),
        }
    }

    fn residues(&self) -> Vec<u32> {
        match self {
            FamilyParams::Ds(p) => vec![p.a, p.b],
            FamilyParams::Na(p) => p.steps.to_vec(),
            FamilyParams::Mh(p) => p.steps.to_vec(),
        }
    }
}

impl From<DoubleStep> for FamilyParams {
    fn from(p: DoubleStep) -> Self {
        FamilyParams::Ds(p)
    }
}

impl From<NewAmsterdam> for FamilyParams {
    fn from(p: NewAmsterdam) -> Self {
        FamilyParams::Na(p)
    }
}

impl From<Manhattan> for FamilyParams {
    fn from(p: Manhattan) -> Self {
        FamilyParams::Mh(p)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        write!(f, "{}:{n}", self.family())?;
        for s in self.residues() {
            write!(f, ",{}", symmetric(s, n))?;
        }
        Ok(())
    }
}

impl fmt::Display for DoubleStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FamilyParams::from(*self).fmt(f)
    }
}

impl fmt::Display for NewAmsterdam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FamilyParams::from(*self).fmt(f)
    }
}

impl fmt::Display for Manhattan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FamilyParams::from(*self).fmt(f)
    }
}

impl Serialize for FamilyParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for FamilyParams {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (family, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| FamilyError::Parse(format!("{s:?}: expected <family>:<order>,<steps...>")))?;
        let family: Family = family.parse()?;
        let numbers = rest
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| FamilyError::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let expected = match family {
            Family::Ds => 3,
            Family::Na => 5,
            Family::Mh => 9,
        };
        if numbers.len() != expected {
            return Err(FamilyError::Parse(format!(
                "{family} takes {expected} integers (order then steps), got {}",
                numbers.len()
            )));
        }
        let order = u32::try_from(numbers[0])
            .map_err(|_| FamilyError::Parse(format!("order {} out of range", numbers[0])))?;
        Ok(match family {
            Family::Ds => DoubleStep::new(order, numbers[1], numbers[2])?.into(),
            Family::Na => NewAmsterdam::new(order, numbers[1], numbers[2], numbers[3], numbers[4])?.into(),
            Family::Mh => {
                let steps: [i64; 8] = numbers[1..].try_into().expect("length checked");
                Manhattan::new(order, steps)?.into()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{diameter, Diameter};

    fn theorem_43_steps(k: i64) -> [i64; 8] {
        [1, 4 * k + 3, -3, 4 * k + 3, 1, -4 * k - 1, 1, -4 * k - 5]
    }

    #[test]
    fn ds_validation() {
        assert!(DoubleStep::new(13, 2, 3).unwrap().validate().is_ok());
        let v = DoubleStep::new(6, 2, 4).unwrap().validate();
        assert!(v.violations.contains(&Issue::GcdNotOne { gcd: 2 }));
        let v = DoubleStep::new(5, 1, 4).unwrap().validate();
        assert_eq!(v.violations, vec![Issue::OppositeSteps { first: "a", second: "b" }]);
        let v = DoubleStep::new(7, 3, 10).unwrap().validate();
        assert!(v.violations.contains(&Issue::EqualSteps { first: "a", second: "b" }));
        let v = DoubleStep::new(7, 0, 2).unwrap().validate();
        assert!(v.violations.contains(&Issue::ZeroStep { step: "a" }));
        assert_eq!(DoubleStep::new(0, 1, 2), Err(FamilyError::ZeroOrder));
    }

    #[test]
    fn na_validation() {
        assert!(NewAmsterdam::new(8, 1, 3, 5, 7).unwrap().validate().is_ok());
        let v = NewAmsterdam::new(8, 1, 3, 5, 5).unwrap().validate();
        assert_eq!(v.violations, vec![Issue::StepSumNonZero { sum: 6 }]);
        assert_eq!(v.warnings, vec![Issue::EqualSteps { first: "gamma", second: "delta" }]);

        // The tuple as printed for the order-10 Moore digraph: gamma = delta and the sum is off.
        let literal = NewAmsterdam::new(10, -1, 1, 3, 3).unwrap().validate();
        assert_eq!(literal.violations, vec![Issue::StepSumNonZero { sum: 6 }]);
        assert_eq!(literal.warnings, vec![Issue::EqualSteps { first: "gamma", second: "delta" }]);
        assert!(NewAmsterdam::new(10, -1, 1, 3, -3).unwrap().validate().is_ok());

        let v = NewAmsterdam::new(9, 1, 3, 5, 0).unwrap().validate();
        assert!(v.violations.contains(&Issue::OrderNotEven { order: 9 }));
        assert!(v.violations.contains(&Issue::EvenStep { step: "delta", value: 0 }));
        let v = NewAmsterdam::new(8, 3, 3, 1, 1).unwrap().validate();
        assert!(v.violations.contains(&Issue::EqualSteps { first: "alpha", second: "beta" }));
    }

    #[test]
    fn mh_validation() {
        let p = Manhattan::new(20, theorem_43_steps(1)).unwrap();
        assert_eq!(p.steps(), [1, 7, 17, 7, 1, 15, 1, 11]);
        let v = p.validate();
        assert!(v.is_ok());
        assert_eq!(p.condition_sums(), [2, 2, 2, 2]);
        assert!(v.warnings.is_empty(), "{v:?}");
        assert!(MhLabeling::Reflected.classes_hold(&p.steps()));
        // the same digraph reflected, steps negated, follows the direct rule
        assert!(MhLabeling::Direct.classes_hold(&p.steps().map(|s| (20 - s) % 20)));
        let v = Manhattan::new(20, [3, 7, -3, 7, -1, 15, 1, 11]).unwrap().validate();
        assert!(v.warnings.contains(&Issue::Mod4Class { step: "a0", class: 3, expected: 1 }));

        let mut even = theorem_43_steps(1);
        even[3] = 6;
        assert!(Manhattan::new(20, even)
            .unwrap()
            .validate()
            .violations
            .contains(&Issue::EvenStep { step: "b1", value: 6 }));

        let mut off = theorem_43_steps(1);
        off[1] += 4;
        let v = Manhattan::new(20, off).unwrap().validate();
        assert!(matches!(v.violations.as_slice(), [Issue::ManhattanSums { .. }]));

        let v = Manhattan::new(18, theorem_43_steps(1)).unwrap().validate();
        assert!(v.violations.contains(&Issue::OrderNotMultipleOfFour { order: 18 }));
    }

    #[test]
    fn compile_examples() {
        let g = DoubleStep::new(5, 1, 2).unwrap().compile(CompileMode::Strict).unwrap();
        assert!((0..5).all(|v| g.out_degree(v) == 4));
        assert_eq!(diameter(&g), Diameter::Finite(1));

        let g = NewAmsterdam::new(10, -1, 1, 3, -3).unwrap().compile(CompileMode::Strict).unwrap();
        assert!(g.arcs().all(|(t, h)| t % 2 != h % 2));
        assert_eq!(diameter(&g), Diameter::Finite(3));

        let g = Manhattan::new(20, theorem_43_steps(1)).unwrap().compile(CompileMode::Strict).unwrap();
        assert_eq!(diameter(&g), Diameter::Finite(4));
        let direct = Manhattan::new(20, theorem_43_steps(1))
            .unwrap()
            .compile_with_labeling(CompileMode::Strict, MhLabeling::Direct)
            .unwrap();
        assert_eq!(diameter(&direct), Diameter::Finite(6));
    }

    #[test]
    fn strict_refuses_forced_accepts() {
        let p = NewAmsterdam::new(10, -1, 1, 3, 3).unwrap();
        assert!(matches!(p.compile(CompileMode::Strict), Err(FamilyError::Invalid(_))));
        let g = p.compile(CompileMode::Force).unwrap();
        assert_eq!(g.out_degree(1), 1);
        assert_eq!(diameter(&g), Diameter::Finite(5));
    }

    #[test]
    fn ds_half_step_merges_arcs() {
        let g = DoubleStep::new(8, 1, 4).unwrap().compile(CompileMode::Strict).unwrap();
        assert_eq!(g.out_degree(0), 3);
    }

    #[test]
    fn text_syntax() {
        let p: FamilyParams = "na:10,-1,1,3,-3".parse().unwrap();
        assert_eq!(p, NewAmsterdam::new(10, 9, 1, 3, 7).unwrap().into());
        assert_eq!(p.to_string(), "na:10,-1,1,3,-3");
        let p: FamilyParams = "ds: 13, 2, 3".parse().unwrap();
        assert_eq!(p.to_string(), "ds:13,2,3");
        let p: FamilyParams = "mh:20,1,7,-3,7,1,-5,1,-9".parse().unwrap();
        assert_eq!(p.to_string(), "mh:20,1,7,-3,7,1,-5,1,-9");
        assert!("xx:1,2".parse::<FamilyParams>().is_err());
        assert!("ds:13,2".parse::<FamilyParams>().is_err());
        assert!("ds:13,2,q".parse::<FamilyParams>().is_err());
        assert!("ds13,2,3".parse::<FamilyParams>().is_err());
        assert!("ds:-4,1,2".parse::<FamilyParams>().is_err());
        assert_eq!("ds:0,1,2".parse::<FamilyParams>(), Err(FamilyError::ZeroOrder));
    }

    #[test]
    fn labeling_classes() {
        let r: Vec<_> = (0..8).map(|i| MhLabeling::Reflected.class_of(i)).collect();
        assert_eq!(r, vec![0, 3, 2, 1, 0, 3, 2, 1]);
        let d: Vec<_> = (0..8).map(|i| MhLabeling::Direct.class_of(i)).collect();
        assert_eq!(d, vec![0, 1, 2, 3, 0, 1, 2, 3]);
    }
}
