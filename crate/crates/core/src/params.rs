use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{MineError, Result};

/// Exact non-negative rational, used for percentages and confidences.
pub type Rational = Ratio<u64>;

pub const DEFAULT_POOL_CAP: usize = 10_000_000;

/// Parses a plain decimal such as `"0.7"`, `"40"` or `"12.5"` into an exact
/// rational. Signs and exponents are rejected.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let bad = || MineError::Params(format!("not a decimal number: {text:?}"));
    let text = text.trim();
    let (whole, frac) = match text.split_once('.') {
        Some((w, f)) => (w, f),
        None => (text, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if frac.len() > 12 {
        return Err(MineError::Params(format!(
            "too many fractional digits in {text:?}"
        )));
    }
    let whole: u64 = if whole.is_empty() {
        0
    } else {
        whole.parse().map_err(|_| bad())?
    };
    let frac_value: u64 = if frac.is_empty() {
        0
    } else {
        frac.parse().map_err(|_| bad())?
    };
    let scale = 10u64.pow(frac.len() as u32);
    let numer = whole
        .checked_mul(scale)
        .and_then(|w| w.checked_add(frac_value))
        .ok_or_else(bad)?;
    Ok(Ratio::new(numer, scale))
}

/// Formats a rational with six fractional digits, rounding half up.
pub fn format_ratio(value: &Rational) -> String {
    let scaled = (u128::from(*value.numer()) * 1_000_000 * 2 + u128::from(*value.denom()))
        / (u128::from(*value.denom()) * 2);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

/// Minimum support as given by the user: an absolute count or a percentage
/// of the transaction count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinSupport {
    Count(u64),
    Percent(Rational),
}

impl MinSupport {
    /// Absolute count for a database of `n_transactions`. Percentages round
    /// up and never go below 1.
    pub fn resolve(self, n_transactions: usize) -> Result<u64> {
        match self {
            MinSupport::Count(0) => Err(MineError::Params(
                "minimum support count must be at least 1".into(),
            )),
            MinSupport::Count(c) => Ok(c),
            MinSupport::Percent(p) => {
                if *p.numer() == 0 || p > Ratio::from_integer(100) {
                    return Err(MineError::Params(format!(
                        "minimum support percent must be in (0, 100], got {}",
                        format_ratio(&p)
                    )));
                }
                let numer = u128::from(*p.numer()) * n_transactions as u128;
                let denom = u128::from(*p.denom()) * 100;
                Ok((numer.div_ceil(denom) as u64).max(1))
            }
        }
    }
}

impl FromStr for MinSupport {
    type Err = MineError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(pct) = s.strip_suffix('%') {
            return Ok(MinSupport::Percent(parse_decimal(pct)?));
        }
        s.parse::<u64>()
            .map(MinSupport::Count)
            .map_err(|_| MineError::Params(format!("minimum support must be N or P%, got {s:?}")))
    }
}

impl fmt::Display for MinSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinSupport::Count(c) => write!(f, "{c}"),
            MinSupport::Percent(p) => write!(f, "{}%", format_ratio(p)),
        }
    }
}

/// Thresholds shared by every miner.
#[derive(Debug, Clone, PartialEq)]
pub struct MiningParams {
    pub min_support_count: u64,
    pub min_confidence: Rational,
    /// Upper bound on the top-down candidate pool.
    pub pool_cap: usize,
}

impl MiningParams {
    pub fn new(min_support_count: u64) -> Self {
        MiningParams {
            min_support_count,
            min_confidence: Ratio::from_integer(0),
            pool_cap: DEFAULT_POOL_CAP,
        }
    }

    pub fn from_min_support(min_support: MinSupport, n_transactions: usize) -> Result<Self> {
        Ok(Self::new(min_support.resolve(n_transactions)?))
    }

    pub fn with_min_confidence(mut self, min_confidence: Rational) -> Self {
        self.min_confidence = min_confidence;
        self
    }

    pub fn with_pool_cap(mut self, pool_cap: usize) -> Self {
        self.pool_cap = pool_cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_support_count == 0 {
            return Err(MineError::Params(
                "minimum support count must be at least 1".into(),
            ));
        }
        if self.min_confidence > Ratio::from_integer(1) {
            return Err(MineError::Params(format!(
                "minimum confidence must be in [0, 1], got {}",
                format_ratio(&self.min_confidence)
            )));
        }
        if self.pool_cap == 0 {
            return Err(MineError::Params("pool cap must be positive".into()));
        }
        Ok(())
    }
}
