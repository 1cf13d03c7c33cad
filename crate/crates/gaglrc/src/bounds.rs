//! Bound calculators: the Singleton-like bound for codes with locality, a
//! Gilbert-Varshamov-style achievable rate, place-count estimates for
//! extension fields and recursive towers, and asymptotic rate floors for the
//! two constructions.

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

pub type Rational = Ratio<i128>;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("need 1 <= k <= n, got n = {n}, k = {k}")]
    BadDimensions { n: u64, k: u64 },
    #[error("locality must be at least 1")]
    ZeroLocality,
    #[error("field order must be at least 2, got {0}")]
    BadFieldOrder(u64),
    #[error("relative distance must lie in [0, 1), got {0}")]
    BadDelta(f64),
    #[error("tower level must be at least 3, got {0}")]
    TowerLevelTooSmall(u32),
    #[error("distance {d} exceeds the bound {bound}")]
    DistanceAboveBound { d: u64, bound: u64 },
    #[error("no [{n}, {k}] code with locality {r} exists: the bound evaluates to {bound}")]
    InfeasibleParams { n: u64, k: u64, r: u64, bound: i64 },
}

/// d <= n - k - ceil(k/r) + 2 for an [n, k] code with locality r.
pub fn singleton_lrc(n: u64, k: u64, r: u64) -> Result<u64, BoundsError> {
    if r < 1 {
        return Err(BoundsError::ZeroLocality);
    }
    if k < 1 || k > n {
        return Err(BoundsError::BadDimensions { n, k });
    }
    let bound = n as i64 - k as i64 - k.div_ceil(r) as i64 + 2;
    if bound < 1 {
        return Err(BoundsError::InfeasibleParams { n, k, r, bound });
    }
    Ok(bound as u64)
}

/// Gap between the bound above and an achieved distance d.
pub fn lrc_defect(n: u64, k: u64, d: u64, r: u64) -> Result<u64, BoundsError> {
    let bound = singleton_lrc(n, k, r)?;
    if d > bound {
        return Err(BoundsError::DistanceAboveBound { d, bound });
    }
    Ok(bound - d)
}

/// Result of the achievable-rate optimization: `value` is `raw` clamped to
/// [0, 1], `minimizer` is the optimal interior point of the minimized
/// expression, and `clamped` records whether clamping fired.
#[derive(Debug, Clone, PartialEq)]
pub struct GvBound {
    pub value: f64,
    pub raw: f64,
    pub minimizer: f64,
    pub clamped: bool,
}

/// Achievable rate of codes with locality r and relative distance delta over
/// GF(q):
///
///   R >= 1 - min_{0 < s <= 1} [ 1/(r+1) * log_q((1 + (q-1)s)^{r+1}
///        + (q-1)(1-s)^{r+1}) - delta * log_q(s) ].
///
/// For delta = 0 the minimum is attained in the limit s -> 0, where the
/// bracket equals log_q(q)/(r+1), giving exactly r/(r+1). Otherwise the inner
/// minimum is located by a dense grid pass followed by golden-section
/// refinement to 1e-9 in s.
pub fn gv_lrc_rate(q: u64, r: u64, delta: f64) -> Result<GvBound, BoundsError> {
    if q < 2 {
        return Err(BoundsError::BadFieldOrder(q));
    }
    if r < 1 {
        return Err(BoundsError::ZeroLocality);
    }
    if !(0.0..=1.0).contains(&delta) {
        return Err(BoundsError::BadDelta(delta));
    }
    let base = r as f64 / (r as f64 + 1.0);
    if delta == 0.0 {
        return Ok(GvBound {
            value: base,
            raw: base,
            minimizer: 0.0,
            clamped: false,
        });
    }
    let qf = q as f64;
    let rf = r as f64;
    let g = |s: f64| penalty(qf, rf, delta, s);
    // Grid seed over (1e-9, 1].
    const GRID: usize = 10_000;
    let mut best_s = 1e-9;
    let mut best_v = g(best_s);
    for i in 1..=GRID {
        let s = i as f64 / GRID as f64;
        let v = g(s);
        if v < best_v {
            best_v = v;
            best_s = s;
        }
    }
    // Golden-section refinement around the grid winner.
    let (mut a, mut b) = (
        (best_s - 2.0 / GRID as f64).max(1e-9),
        (best_s + 2.0 / GRID as f64).min(1.0),
    );
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    while b - a > 1e-9 {
        let x1 = b - phi * (b - a);
        let x2 = a + phi * (b - a);
        if g(x1) <= g(x2) {
            b = x2;
        } else {
            a = x1;
        }
    }
    let minimizer = 0.5 * (a + b);
    let raw = 1.0 - g(minimizer);
    let clamped = raw < 0.0;
    Ok(GvBound {
        value: raw.clamp(0.0, 1.0),
        raw,
        minimizer,
        clamped,
    })
}

fn log_q(q: f64, x: f64) -> f64 {
    x.ln() / q.ln()
}

/// The bracket minimized over the auxiliary parameter s:
/// 1/(r+1) * log_q((1 + (q-1)s)^{r+1} + (q-1)(1-s)^{r+1}) - delta * log_q(s).
fn penalty(q: f64, r: f64, delta: f64, s: f64) -> f64 {
    let arg = (1.0 + (q - 1.0) * s).powf(r + 1.0) + (q - 1.0) * (1.0 - s).powf(r + 1.0);
    log_q(q, arg) / (r + 1.0) - delta * log_q(q, s)
}

/// Place-count order for degree r over GF(q): B_r ~ (q^{r/2} - 1) / r with
/// q^{r/2} read as q^{floor/2} through the square root. `exact` carries the
/// rational value when r is even (so q^{r/2} is an integer power).
#[derive(Debug, Clone, PartialEq)]
pub struct DvBound {
    pub value: f64,
    pub exact: Option<Rational>,
}

pub fn dv_order_r(q: u64, r: u64) -> Result<DvBound, BoundsError> {
    if q < 2 {
        return Err(BoundsError::BadFieldOrder(q));
    }
    if r < 1 {
        return Err(BoundsError::ZeroLocality);
    }
    let value = ((q as f64).powf(r as f64 / 2.0) - 1.0) / r as f64;
    let exact = r.is_multiple_of(2).then(|| {
        let power = (q as i128).pow((r / 2) as u32);
        Rational::new(power - 1, r as i128)
    });
    Ok(DvBound { value, exact })
}

/// Recursive-tower estimates at level ell >= 3: an upper bound on the genus,
/// a lower bound on the number of degree-1 places, and their ratio bound
/// B1/g >= q - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsTowerParams {
    pub genus_upper: u128,
    pub b1_lower: u128,
    pub ratio_lower: u64,
}

pub fn gs_tower_params(q: u64, ell: u32) -> Result<GsTowerParams, BoundsError> {
    if q < 2 {
        return Err(BoundsError::BadFieldOrder(q));
    }
    if ell < 3 {
        return Err(BoundsError::TowerLevelTooSmall(ell));
    }
    let q = q as u128;
    let genus_upper = q.pow(ell) + q.pow(ell - 1);
    let b1_lower = (q * q - 1) * q.pow(ell - 1) + 2 * q;
    Ok(GsTowerParams {
        genus_upper,
        b1_lower,
        ratio_lower: (q - 1) as u64,
    })
}

/// One asymptotic rate floor: either an exact rational value or the reason it
/// does not apply. `flag` carries caveats that hold even when a value exists.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticEntry {
    pub name: &'static str,
    pub value: Result<Rational, String>,
    /// True when the floor is non-positive, so the statement is vacuous.
    pub vacuous: bool,
    pub flag: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub entries: Vec<AsymptoticEntry>,
}

fn entry(name: &'static str, value: Result<Rational, String>, flag: Option<String>) -> AsymptoticEntry {
    let vacuous = matches!(&value, Ok(v) if !v.is_positive());
    AsymptoticEntry {
        name,
        value,
        vacuous,
        flag,
    }
}

fn is_perfect_square(v: u128) -> bool {
    let r = (v as f64).sqrt().round() as u128;
    r.checked_mul(r) == Some(v) || (r + 1) * (r + 1) == v || r >= 1 && (r - 1) * (r - 1) == v
}

/// Asymptotic rate floors at relative distance `delta` for locality r codes
/// over GF(q). `ell` selects the tower level of the recursive-tower entry.
pub fn asymptotic_rates(
    q: u64,
    r: u64,
    delta: Rational,
    ell: Option<u32>,
) -> Result<AsymptoticReport, BoundsError> {
    if q < 2 {
        return Err(BoundsError::BadFieldOrder(q));
    }
    if r < 1 {
        return Err(BoundsError::ZeroLocality);
    }
    if delta.is_negative() || delta >= Rational::new(1, 1) {
        return Err(BoundsError::BadDelta(delta.to_f64().unwrap_or(f64::NAN)));
    }
    let qi = q as i128;
    let ri = r as i128;
    let mut entries = Vec::new();

    // Concatenated construction over GF(q^r):
    // R >= r/(r+1) * (1 - (r+1)/2 * delta - 1/(q^{r/2} - 1)),
    // requiring q^r to be a square so q^{r/2} is an integer.
    let c1 = match (q as u128).checked_pow(r as u32) {
        None => Err("q^r overflows the exact arithmetic".to_string()),
        Some(qr) if !is_perfect_square(qr) => {
            Err(format!("needs q^r to be a perfect square, got {q}^{r}"))
        }
        Some(qr) => {
            let root = (qr as f64).sqrt().round() as i128;
            if root <= 2 {
                Err("needs q^{r/2} > 2 so the place-count term stays below 1".to_string())
            } else {
                Ok(Rational::new(ri, ri + 1)
                    * (Rational::new(1, 1)
                        - Rational::new(ri + 1, 2) * delta
                        - Rational::new(1, root - 1)))
            }
        }
    };
    let c1_flag = (q == 4 && r == 2).then(|| {
        "at q = 4, r = 2 the zero-distance floor evaluates to 4/9; \
         a commonly quoted figure of 1/3 does not match this formula"
            .to_string()
    });
    entries.push(entry("construction1-floor", c1, c1_flag));

    // Non-rational-place construction, degree-2 places, generic count:
    // R >= 2/3 * (1 - delta) - ... with b2 = (q-1)/2 - 1/q; only stated for
    // r = 2 and meaningful for q > 3.
    if r == 2 {
        let b2 = Rational::new(qi - 1, 2) - Rational::new(1, qi);
        let generic = if q > 3 {
            Ok(Rational::new(2, 3) * (Rational::new(1, 1) - Rational::new(1, 2) * (Rational::new(1, 1) / b2)) - delta)
        } else {
            Err("needs q > 3 for a positive degree-2 place density".to_string())
        };
        entries.push(entry("construction2-generic-floor", generic, None));

        // Same floor in the closed locality-2 form 2/3 (1 - q/(q^2-q-2)) - delta.
        let loc2 = if q > 3 {
            Ok(Rational::new(2, 3)
                * (Rational::new(1, 1) - Rational::new(qi, qi * qi - qi - 2))
                - delta)
        } else {
            Err("needs q > 3 so q^2 - q - 2 > q".to_string())
        };
        entries.push(entry("construction2-locality2-floor", loc2, None));
    }

    // Recursive-tower variant: b2(ell) = (q-1)/2 - q^2/(q^ell + q^{ell-1}).
    if let Some(ell) = ell {
        let tower = if ell < 3 {
            Err(format!("needs tower level >= 3, got {ell}"))
        } else if r != 2 {
            Err("stated for locality 2 only".to_string())
        } else {
            let qe = qi.checked_pow(ell).zip(qi.checked_pow(ell - 1));
            match qe {
                Some((qp, qp1)) => {
                    let b2 = Rational::new(qi - 1, 2) - Rational::new(qi * qi, qp + qp1);
                    if b2.is_positive() {
                        Ok(Rational::new(2, 3)
                            * (Rational::new(1, 1)
                                - Rational::new(1, 2) * (Rational::new(1, 1) / b2))
                            - delta)
                    } else {
                        Err("tower place density is non-positive at this (q, ell)".to_string())
                    }
                }
                None => Err("tower level overflows the exact arithmetic".to_string()),
            }
        };
        entries.push(entry("u-tower-floor", tower, None));
    }

    Ok(AsymptoticReport { entries })
}

/// b2(ell) = (q-1)/2 - q^2/(q^ell + q^{ell-1}): the degree-2 place density
/// ratio of the recursive tower at level ell.
pub fn u_tower_ratio(q: u64, ell: u32) -> Result<Rational, BoundsError> {
    if q < 2 {
        return Err(BoundsError::BadFieldOrder(q));
    }
    if ell < 3 {
        return Err(BoundsError::TowerLevelTooSmall(ell));
    }
    let qi = q as i128;
    let qp = qi.pow(ell);
    let qp1 = qi.pow(ell - 1);
    Ok(Rational::new(qi - 1, 2) - Rational::new(qi * qi, qp + qp1))
}
