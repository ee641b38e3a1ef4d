//! Moore-like order bounds for the three families and the order ranges the
//! basic-pair constructions reach for each diameter.
//!
//! Each Moore bound exists in a closed form and a summation form; the two
//! are computed independently and compared in tests.

use serde::Serialize;
use thiserror::Error;

pub use crate::families::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{family} needs k >= {min}, got {k}")]
    KTooSmall { family: Family, k: u32, min: u32 },
    #[error("order {order} is not a multiple of {modulus}")]
    BadOrder { order: u64, modulus: u64 },
}

fn need(family: Family, k: u32, min: u32) -> Result<(), BoundsError> {
    if k < min {
        Err(BoundsError::KTooSmall { family, k, min })
    } else {
        Ok(())
    }
}

/// `2k^2 + 2k + 1`.
pub fn moore_ds(k: u32) -> u64 {
    let k = u64::from(k);
    2 * k * k + 2 * k + 1
}

/// `1 + sum_{n=1..k} 4n`.
pub fn moore_ds_sum(k: u32) -> u64 {
    1 + (1..=u64::from(k)).map(|n| 4 * n).sum::<u64>()
}

/// `k^2 + 1` for odd `k`, `k^2` for even `k`.
pub fn moore_na(k: u32) -> Result<u64, BoundsError> {
    need(Family::Na, k, 1)?;
    let kk = u64::from(k) * u64::from(k);
    Ok(if k % 2 == 1 { kk + 1 } else { kk })
}

/// `2(1 + sum_{m=1..n} 4m)` for `k = 2n+1`, `2 sum_{m=1..n} (4m-2)` for `k = 2n`.
pub fn moore_na_sum(k: u32) -> Result<u64, BoundsError> {
    need(Family::Na, k, 1)?;
    let n = u64::from(k / 2);
    Ok(if k % 2 == 1 {
        2 * (1 + (1..=n).map(|m| 4 * m).sum::<u64>())
    } else {
        2 * (1..=n).map(|m| 4 * m - 2).sum::<u64>()
    })
}

/// `2(k-1)^2` for odd `k`, `2[(k-1)^2 + 1]` for even `k`.
pub fn moore_mh(k: u32) -> Result<u64, BoundsError> {
    need(Family::Mh, k, 2)?;
    let j = u64::from(k - 1);
    Ok(if k % 2 == 1 { 2 * j * j } else { 2 * (j * j + 1) })
}

/// Twice the New Amsterdam count one level down, summed explicitly: a
/// Manhattan digraph of diameter `k` is a line digraph of a New Amsterdam
/// digraph of diameter `k-1` with half as many vertices.
pub fn moore_mh_sum(k: u32) -> Result<u64, BoundsError> {
    need(Family::Mh, k, 2)?;
    Ok(2 * moore_na_sum(k - 1)?)
}

pub fn moore(family: Family, k: u32) -> Result<u64, BoundsError> {
    match family {
        Family::Ds => Ok(moore_ds(k)),
        Family::Na => moore_na(k),
        Family::Mh => moore_mh(k),
    }
}

pub fn moore_sum(family: Family, k: u32) -> Result<u64, BoundsError> {
    match family {
        Family::Ds => Ok(moore_ds_sum(k)),
        Family::Na => moore_na_sum(k),
        Family::Mh => moore_mh_sum(k),
    }
}

/// Smallest diameter whose Moore bound admits `order` vertices.
pub fn moore_min_diameter(family: Family, order: u64) -> u32 {
    let start = match family {
        Family::Ds => 0,
        Family::Na => 1,
        Family::Mh => 2,
    };
    (start..).find(|&k| moore(family, k).expect("k at least the minimum") >= order).expect("bounds grow")
}

/// Interval of orders, with an optional order inside it the basic-pair
/// construction does not reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderRange {
    pub low: u64,
    pub high: u64,
    pub missing: Option<u64>,
}

fn sq(x: i64) -> i64 {
    x * x
}

/// Orders for which some New Amsterdam digraph of diameter `d` is claimed:
/// `(D-1)^2 - 2D + 10 ..= D^2 + 1` for odd `D >= 3`,
/// `D^2 - 2D + 4 ..= D^2 - 2D + 6` for even `D >= 2`.
/// For even `D` the top order `D^2 - 2D + 6 = 4k^2+4k+6` (with `D = 2k+2`)
/// is only claimed through other steps and is flagged as `missing`.
pub fn achievable_range_na(d: u32) -> Result<OrderRange, BoundsError> {
    let di = i64::from(d);
    if d % 2 == 1 {
        need(Family::Na, d, 3)?;
        Ok(OrderRange { low: (sq(di - 1) - 2 * di + 10) as u64, high: (sq(di) + 1) as u64, missing: None })
    } else {
        need(Family::Na, d, 2)?;
        let high = (sq(di) - 2 * di + 6) as u64;
        Ok(OrderRange { low: (sq(di) - 2 * di + 4) as u64, high, missing: Some(high) })
    }
}

/// Orders for which some Manhattan digraph of diameter `d` is claimed:
/// `2[(D-2)^2 - 2(D-1) + 10] ..= 2[(D-1)^2 + 1]` for even `D >= 4`,
/// `2[(D-1)^2 - 2(D-1) + 4] ..= 2[(D-1)^2 - 2(D-1) + 6]` for odd `D >= 5`,
/// the latter's top order flagged as `missing`.
pub fn achievable_range_mh(d: u32) -> Result<OrderRange, BoundsError> {
    let di = i64::from(d);
    if d.is_multiple_of(2) {
        need(Family::Mh, d, 4)?;
        Ok(OrderRange {
            low: (2 * (sq(di - 2) - 2 * (di - 1) + 10)) as u64,
            high: (2 * (sq(di - 1) + 1)) as u64,
            missing: None,
        })
    } else {
        need(Family::Mh, d, 5)?;
        let high = (2 * (sq(di - 1) - 2 * (di - 1) + 6)) as u64;
        Ok(OrderRange { low: (2 * (sq(di - 1) - 2 * (di - 1) + 4)) as u64, high, missing: Some(high) })
    }
}

/// Orders where diameter `d` would be the Moore-optimal value: above the
/// bound for `d-1` (respecting the family's order parity) and at most the
/// bound for `d`.
pub fn moore_optimal_range(family: Family, d: u32) -> Result<OrderRange, BoundsError> {
    let step = match family {
        Family::Ds => 1,
        Family::Na => 2,
        Family::Mh => 4,
    };
    let high = moore(family, d)?;
    let below = match family {
        Family::Ds if d == 0 => 0,
        Family::Na if d == 1 => 0,
        Family::Mh if d == 2 => 0,
        _ => moore(family, d - 1)?,
    };
    let low = (below / step + 1) * step;
    Ok(OrderRange { low, high: high / step * step, missing: None })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Prediction {
    /// A theorem case applies and fixes the diameter.
    Predicted { diameter: u32, case: &'static str },
    /// The order lies inside the theorem's span but the construction does not reach it.
    NotCovered,
    /// No case of the theorem speaks about this order (for the given `k`).
    Outside,
}

impl Prediction {
    pub fn diameter(self) -> Option<u32> {
        match self {
            Prediction::Predicted { diameter, .. } => Some(diameter),
            _ => None,
        }
    }
}

/// Double-step graph `G(N; ±k, ±(k+1))` has diameter `k` whenever
/// `M_DS(k-1) < N <= M_DS(k)`. Returns that `k` (the least `k >= 1` with
/// `M_DS(k) >= N`).
pub fn theorem_41_k(order: u64) -> u32 {
    moore_min_diameter(Family::Ds, order).max(1)
}

/// Expected diameter of `NA(N; -1, 1, 2k+1, -2k-1)`.
pub fn theorem_42_expected_diameter(order: u64, k: u32) -> Result<Prediction, BoundsError> {
    need(Family::Na, k, 1)?;
    if !order.is_multiple_of(2) {
        return Err(BoundsError::BadOrder { order, modulus: 2 });
    }
    let k = u64::from(k);
    let base = 4 * k * k;
    let (d_odd, d_mid, d_top) = (2 * k as u32 + 1, 2 * k as u32 + 2, 2 * k as u32 + 3);
    Ok(if order == base + 2 {
        Prediction::Predicted { diameter: d_odd, case: "companion" }
    } else if (base + 4..=base + 4 * k + 2).contains(&order) {
        Prediction::Predicted { diameter: d_odd, case: "a" }
    } else if order == base + 4 * k + 4 {
        Prediction::Predicted { diameter: d_mid, case: "b" }
    } else if order == base + 4 * k + 6 {
        Prediction::NotCovered
    } else if (base + 4 * k + 8..=4 * (k + 1) * (k + 1) + 2).contains(&order) {
        Prediction::Predicted { diameter: d_top, case: "c" }
    } else {
        Prediction::Outside
    })
}

/// Expected diameter of `MH(N; 1, 4k+3, -3, 4k+3, 1, -4k-1, 1, -4k-5)`.
pub fn theorem_43_expected_diameter(order: u64, k: u32) -> Result<Prediction, BoundsError> {
    need(Family::Mh, k, 1)?;
    if !order.is_multiple_of(4) {
        return Err(BoundsError::BadOrder { order, modulus: 4 });
    }
    let k = u64::from(k);
    let base = 8 * k * k;
    let d = 2 * k as u32;
    Ok(if (base + 8..=base + 8 * k + 4).contains(&order) {
        Prediction::Predicted { diameter: d + 2, case: "1" }
    } else if order == base + 8 * k + 8 {
        Prediction::Predicted { diameter: d + 3, case: "2" }
    } else if order == base + 8 * k + 12 {
        Prediction::NotCovered
    } else if (base + 8 * k + 16..=8 * (k + 1) * (k + 1) + 4).contains(&order) {
        Prediction::Predicted { diameter: d + 4, case: "3" }
    } else {
        Prediction::Outside
    })
}

/// Smallest `k >= 1` whose theorem cases (including the uncovered order)
/// mention `order`.
pub fn infer_k(family: Family, order: u64) -> Option<u32> {
    (1..=order.max(1) as u32).find(|&k| {
        let p = match family {
            Family::Ds => return moore_ds(k) >= order,
            Family::Na => theorem_42_expected_diameter(order, k),
            Family::Mh => theorem_43_expected_diameter(order, k),
        };
        matches!(p, Ok(Prediction::Predicted { .. } | Prediction::NotCovered))
    })
}

/// Theorem prediction for the best diameter at `order` with `k` inferred.
pub fn predicted_optimum(family: Family, order: u64) -> Prediction {
    match family {
        Family::Ds => Prediction::Predicted { diameter: theorem_41_k(order), case: "4.1" },
        Family::Na | Family::Mh => match infer_k(family, order) {
            None => Prediction::Outside,
            Some(k) if family == Family::Na => theorem_42_expected_diameter(order, k).unwrap_or(Prediction::Outside),
            Some(k) => theorem_43_expected_diameter(order, k).unwrap_or(Prediction::Outside),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub family: Family,
    pub k: u32,
    pub moore_value: u64,
    pub moore_sum: u64,
    /// Orders the constructions reach at diameter `k` (New Amsterdam and Manhattan only).
    pub achievable: Option<OrderRange>,
    /// Orders for which `k` would be Moore-optimal.
    pub moore_optimal: OrderRange,
}

pub fn bounds_report(family: Family, k: u32) -> Result<BoundsReport, BoundsError> {
    let achievable = match family {
        Family::Ds => None,
        Family::Na => achievable_range_na(k).ok(),
        Family::Mh => achievable_range_mh(k).ok(),
    };
    Ok(BoundsReport {
        family,
        k,
        moore_value: moore(family, k)?,
        moore_sum: moore_sum(family, k)?,
        achievable,
        moore_optimal: moore_optimal_range(family, k)?,
    })
}
