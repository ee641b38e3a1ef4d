//! Exhaustive minimum-diameter search over all valid step parameters of a
//! family at a fixed order, and sweeps that check the theorem predictions.

mod engine;
mod sweep;

pub use sweep::{
    line_digraph_law, sandwich_sweep, sweep_verify, LineDigraphRow, SweepRow, Theorem,
};

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{moore, moore_min_diameter, predicted_optimum, Prediction};
use crate::constructions::na_to_mh;
use crate::families::{CompileMode, DoubleStep, Family, FamilyParams, Manhattan, MhLabeling, NewAmsterdam};
use crate::graphs::diameter;
use engine::StepTable;

pub const DEFAULT_DS_CAP: u32 = 200;
pub const DEFAULT_NA_CAP: u32 = 120;
pub const DEFAULT_MH_DIRECT_CAP: u32 = 48;
pub const DEFAULT_WITNESS_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the {family} search cap {cap}")]
    CapExceeded { family: Family, order: u32, cap: u32 },
    #[error("order {order} is not admissible for {family}: {reason}")]
    BadOrder { family: Family, order: u32, reason: &'static str },
    #[error("witness {witness} has diameter {found}, search reported {expected}")]
    WitnessMismatch { witness: String, expected: u32, found: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MhMode {
    /// Search New Amsterdam digraphs on `N/2` vertices and translate.
    #[default]
    ViaNa,
    /// Enumerate Manhattan step sets directly.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Overrides the family's default order cap.
    pub cap: Option<u32>,
    pub workers: usize,
    pub mh_mode: MhMode,
    /// Direct Manhattan mode only: keep step sets that follow the mod-4
    /// residue rule of the default labeling. Without it the enumeration also
    /// reaches digraphs outside the family, some with smaller diameter.
    pub mod4_filter: bool,
    pub witness_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { cap: None, workers: 1, mh_mode: MhMode::ViaNa, mod4_filter: true, witness_cap: DEFAULT_WITNESS_CAP }
    }
}

impl SearchOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremCheck {
    Yes,
    No,
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub family: Family,
    pub order: u32,
    /// `exhaustive`, `via-na` or `direct`.
    pub mode: &'static str,
    /// `None` when no candidate is strongly connected.
    pub min_diameter: Option<u32>,
    /// Lexicographically first optima, at most the witness cap.
    pub witnesses: Vec<FamilyParams>,
    pub optimum_count: u64,
    pub candidates_examined: u64,
    /// Least diameter the Moore bound allows at this order.
    pub moore_min_diameter: u32,
    pub moore_bound_for_min: Option<u64>,
    pub prediction: Prediction,
    pub meets_theorem_prediction: TheoremCheck,
}

fn cap_check(family: Family, order: u32, cap: u32) -> Result<(), SearchError> {
    if order > cap {
        Err(SearchError::CapExceeded { family, order, cap })
    } else {
        Ok(())
    }
}

fn finish(
    family: Family,
    order: u32,
    mode: &'static str,
    tally: engine::Tally,
    witness_cap: usize,
    to_params: impl Fn(&[u32; 8]) -> FamilyParams,
) -> Result<SearchResult, SearchError> {
    let min_diameter = (tally.best != u32::MAX).then_some(tally.best);
    let witnesses: Vec<FamilyParams> = tally.witnesses.iter().take(witness_cap).map(to_params).collect();
    if let Some(expected) = min_diameter {
        verify_witnesses(&witnesses, expected)?;
    }
    Ok(assemble(family, order, mode, min_diameter, witnesses, tally.witnesses.len() as u64, tally.examined))
}

fn assemble(
    family: Family,
    order: u32,
    mode: &'static str,
    min_diameter: Option<u32>,
    witnesses: Vec<FamilyParams>,
    optimum_count: u64,
    candidates_examined: u64,
) -> SearchResult {
    let prediction = predicted_optimum(family, u64::from(order));
    let meets_theorem_prediction = match (prediction, min_diameter) {
        (Prediction::Predicted { diameter, .. }, Some(d)) if d == diameter => TheoremCheck::Yes,
        (Prediction::Predicted { .. }, _) => TheoremCheck::No,
        _ => TheoremCheck::NotCovered,
    };
    SearchResult {
        family,
        order,
        mode,
        min_diameter,
        witnesses,
        optimum_count,
        candidates_examined,
        moore_min_diameter: moore_min_diameter(family, u64::from(order)),
        moore_bound_for_min: min_diameter.and_then(|d| moore(family, d).ok()),
        prediction,
        meets_theorem_prediction,
    }
}

/// Compiles each witness and recomputes its diameter with the all-source BFS.
fn verify_witnesses(witnesses: &[FamilyParams], expected: u32) -> Result<(), SearchError> {
    for w in witnesses {
        let found = w
            .compile(CompileMode::Strict)
            .map(|g| diameter(&g).to_string())
            .unwrap_or_else(|e| e.to_string());
        if found != expected.to_string() {
            return Err(SearchError::WitnessMismatch { witness: w.to_string(), expected, found });
        }
    }
    Ok(())
}

/// Unordered step pairs `1 <= a < b <= N/2` with `gcd(N, a, b) = 1`.
pub fn search_ds(order: u32, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    if order < 3 {
        return Err(SearchError::BadOrder { family: Family::Ds, order, reason: "needs at least 3 vertices" });
    }
    cap_check(Family::Ds, order, opts.cap.unwrap_or(DEFAULT_DS_CAP))?;
    let half = order / 2;
    let tally = engine::run(half as usize, opts.workers, |item, emit| {
        let a = item as u32 + 1;
        for b in a + 1..=half {
            let p = DoubleStep::new(order, i64::from(a), i64::from(b)).expect("positive order");
            if !p.validate().is_ok() {
                continue;
            }
            emit([a, b, 0, 0, 0, 0, 0, 0], &StepTable::new(order, 1, 4, &[a, order - a, b, order - b]));
        }
    });
    finish(Family::Ds, order, "exhaustive", tally, opts.witness_cap, |w| {
        DoubleStep::new(order, i64::from(w[0]), i64::from(w[1])).expect("positive order").into()
    })
}

/// Odd `alpha < beta`, odd `gamma`, `delta = -(alpha+beta+gamma)`, `gamma <= delta`.
pub fn search_na(order: u32, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(SearchError::BadOrder { family: Family::Na, order, reason: "needs an even order of at least 4" });
    }
    cap_check(Family::Na, order, opts.cap.unwrap_or(DEFAULT_NA_CAP))?;
    let odd = move |i: usize| 2 * i as u32 + 1;
    let half = (order / 2) as usize;
    let tally = engine::run(half, opts.workers, |item, emit| {
        let alpha = odd(item);
        for beta in (alpha + 2..order).step_by(2) {
            for gamma in (1..order).step_by(2) {
                let delta = (3 * order - alpha - beta - gamma) % order;
                if gamma > delta {
                    continue;
                }
                let steps = [alpha, beta, gamma, delta];
                emit([alpha, beta, gamma, delta, 0, 0, 0, 0], &StepTable::new(order, 2, 2, &steps));
            }
        }
    });
    finish(Family::Na, order, "exhaustive", tally, opts.witness_cap, |w| na_params(order, w).into())
}

fn na_params(order: u32, w: &[u32; 8]) -> NewAmsterdam {
    let s = w.map(i64::from);
    NewAmsterdam::new(order, s[0], s[1], s[2], s[3]).expect("positive order")
}

pub fn search_mh(order: u32, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(SearchError::BadOrder { family: Family::Mh, order, reason: "needs a multiple of 4, at least 8" });
    }
    match opts.mh_mode {
        MhMode::ViaNa => search_mh_via_na(order, opts),
        MhMode::Direct => search_mh_direct(order, opts),
    }
}

fn search_mh_via_na(order: u32, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    let na_opts = SearchOptions { witness_cap: opts.witness_cap, ..opts.clone() };
    let na = search_na(order / 2, &na_opts)?;
    let witnesses = na
        .witnesses
        .iter()
        .map(|w| match w {
            FamilyParams::Na(p) => na_to_mh(p).map(FamilyParams::from).expect("search witnesses are valid"),
            _ => unreachable!("search_na yields New Amsterdam witnesses"),
        })
        .collect::<Vec<_>>();
    let min_diameter = na.min_diameter.map(|d| d + 1);
    if let Some(expected) = min_diameter {
        verify_witnesses(&witnesses, expected)?;
    }
    Ok(assemble(Family::Mh, order, "via-na", min_diameter, witnesses, na.optimum_count, na.candidates_examined))
}

/// Free odd `a0, a2, a1, b0, b1`; the sum condition fixes
/// `a3 = -(a0+a2) - a1`, `b2 = (a0+a2) - b0`, `b3 = -(a0+a2) - b1`.
fn search_mh_direct(order: u32, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    cap_check(Family::Mh, order, opts.cap.unwrap_or(DEFAULT_MH_DIRECT_CAP))?;
    let half = (order / 2) as usize;
    let odd = |i: usize| 2 * i as u32 + 1;
    let labeling = MhLabeling::default();
    let mod4 = opts.mod4_filter;
    let tally = engine::run(half * half, opts.workers, |item, emit| {
        let (a0, a2) = (odd(item / half), odd(item % half));
        let s = (a0 + a2) % order;
        for a1 in (1..order).step_by(2) {
            let a3 = (2 * order - s - a1) % order;
            for b0 in (1..order).step_by(2) {
                let b2 = (order + s - b0) % order;
                if b0 == a0 || b2 == a2 {
                    continue;
                }
                for b1 in (1..order).step_by(2) {
                    let b3 = (2 * order - s - b1) % order;
                    if b1 == a1 || b3 == a3 {
                        continue;
                    }
                    let steps = [a0, b0, a1, b1, a2, b2, a3, b3];
                    if mod4 && !labeling.classes_hold(&steps) {
                        continue;
                    }
                    let mut rows = [0u32; 8];
                    for r in 0..4 {
                        let j = labeling.class_of(r);
                        rows[2 * r] = steps[2 * j];
                        rows[2 * r + 1] = steps[2 * j + 1];
                    }
                    emit(steps, &StepTable::new(order, 4, 2, &rows));
                }
            }
        }
    });
    finish(Family::Mh, order, "direct", tally, opts.witness_cap, |w| {
        Manhattan::new(order, w.map(i64::from)).expect("positive order").into()
    })
}

/// Both Manhattan modes side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MhCrossCheck {
    pub via_na: SearchResult,
    pub direct: SearchResult,
    pub agree: bool,
}

impl MhCrossCheck {
    /// The direct enumeration is authoritative when the modes disagree.
    pub fn authoritative(&self) -> &SearchResult {
        &self.direct
    }
}

pub fn cross_check_mh(order: u32, opts: &SearchOptions) -> Result<MhCrossCheck, SearchError> {
    let via_na = search_mh(order, &SearchOptions { mh_mode: MhMode::ViaNa, ..opts.clone() })?;
    let direct = search_mh(order, &SearchOptions { mh_mode: MhMode::Direct, ..opts.clone() })?;
    let agree = via_na.min_diameter == direct.min_diameter;
    Ok(MhCrossCheck { via_na, direct, agree })
}

pub fn search(family: Family, order: u32, opts: &SearchOptions) -> Result<SearchResult, SearchError> {
    match family {
        Family::Ds => search_ds(order, opts),
        Family::Na => search_na(order, opts),
        Family::Mh => search_mh(order, opts),
    }
}
