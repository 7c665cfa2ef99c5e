//! Truncated formal Laurent series `Σ_{i≥1} c_i T^{-i}` with lazy coefficient
//! sources.

use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Poly, PolyError};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("coefficient index {0} is out of range (indices start at 1)")]
    Index(usize),
    #[error("coefficient source failed: {0}")]
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("series has no coefficient source to extend from")]
    NoSource,
    #[error("extension to {requested} does not exceed current precision {current}")]
    NotAnExtension { current: usize, requested: usize },
    #[error("series JSON: {0}")]
    Json(String),
    #[error("series JSON has N = {n} but {len} coefficients")]
    LengthMismatch { n: usize, len: usize },
    #[error("{0} is not a proper fraction (deg num >= deg den)")]
    ImproperFraction(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Source(#[from] SourceError),
}

/// What a source knows about the value it generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceKind {
    /// The generated series is known to be irrational.
    Irrational,
    /// Coefficients beyond `len` are zero.
    Finite { len: usize },
    /// Expansion of a known rational function.
    Rational,
    Unknown,
}

/// Supplies `c_i`, the coefficient of `T^{-i}`, for `i ≥ 1`.
///
/// Implementations must be deterministic.
pub trait CoefficientSource: Send + Sync + fmt::Debug {
    fn coeff(&self, i: usize) -> Result<Rat, SourceError>;

    /// `c_1..=c_n`.
    fn coeffs(&self, n: usize) -> Result<Vec<Rat>, SourceError> {
        (1..=n).map(|i| self.coeff(i)).collect()
    }

    fn kind(&self) -> SourceKind {
        SourceKind::Unknown
    }

    /// `(num, den)` with `deg num < deg den` when the source knows the exact
    /// rational function it expands.
    fn as_rational(&self) -> Option<(Poly, Poly)> {
        None
    }
}

/// Every coefficient equal to the same value.
#[derive(Debug, Clone)]
pub struct ConstantSource(pub Rat);

impl CoefficientSource for ConstantSource {
    fn coeff(&self, i: usize) -> Result<Rat, SourceError> {
        if i == 0 {
            return Err(SourceError::Index(i));
        }
        Ok(self.0.clone())
    }

    fn kind(&self) -> SourceKind {
        SourceKind::Rational
    }

    // Σ c T^{-i} = c / (T - 1)
    fn as_rational(&self) -> Option<(Poly, Poly)> {
        Some((Poly::constant(self.0.clone()), Poly::from_ints(&[-1, 1])))
    }
}

/// Finitely many coefficients, zero afterwards.
#[derive(Debug, Clone)]
pub struct FiniteSource(pub Vec<Rat>);

impl CoefficientSource for FiniteSource {
    fn coeff(&self, i: usize) -> Result<Rat, SourceError> {
        if i == 0 {
            return Err(SourceError::Index(i));
        }
        Ok(self.0.get(i - 1).cloned().unwrap_or_else(Rat::zero))
    }

    fn kind(&self) -> SourceKind {
        SourceKind::Finite { len: self.0.len() }
    }

    fn as_rational(&self) -> Option<(Poly, Poly)> {
        let series = TruncatedSeries::from_coeffs(self.0.clone()).ok()?;
        Some(series.to_rational())
    }
}

/// The expansion at infinity of `num / den` with `deg num < deg den`.
#[derive(Debug)]
pub struct RationalFunctionSource {
    num: Poly,
    den: Poly,
    memo: Mutex<Vec<Rat>>,
}

impl RationalFunctionSource {
    pub fn new(num: Poly, den: Poly) -> Result<Self, SeriesError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero.into());
        }
        if num.degree() >= den.degree() {
            return Err(SeriesError::ImproperFraction(format!("({num}) / ({den})")));
        }
        Ok(RationalFunctionSource {
            num,
            den,
            memo: Mutex::new(Vec::new()),
        })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }
}

impl CoefficientSource for RationalFunctionSource {
    fn coeff(&self, i: usize) -> Result<Rat, SourceError> {
        if i == 0 {
            return Err(SourceError::Index(i));
        }
        let mut memo = self.memo.lock().expect("series memo poisoned");
        let d = self.den.degree().expect("nonzero denominator");
        let lc_inv = self.den.coeffs()[d].recip().expect("nonzero leading coefficient");
        // c_k = (num_{d-k} - Σ_{j=1}^{k-1} den_{d-k+j} c_j) / den_d, indices
        // outside the coefficient lists read as zero.
        while memo.len() < i {
            let k = memo.len() + 1;
            let mut acc = if k <= d {
                self.num.coeff(d - k)
            } else {
                Rat::zero()
            };
            for (j, c) in memo.iter().enumerate() {
                let j = j + 1;
                if d + j >= k {
                    let idx = d + j - k;
                    if idx < d {
                        acc -= &(&self.den.coeff(idx) * c);
                    }
                }
            }
            memo.push(acc * &lc_inv);
        }
        Ok(memo[i - 1].clone())
    }

    fn kind(&self) -> SourceKind {
        SourceKind::Rational
    }

    fn as_rational(&self) -> Option<(Poly, Poly)> {
        Some((self.num.clone(), self.den.clone()))
    }
}

/// The first `N` coefficients of a Laurent series in `T^{-1}`.
#[derive(Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
    source: Option<Arc<dyn CoefficientSource>>,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("N", &self.coeffs.len())
            .field("coeffs", &self.coeffs)
            .field("has_source", &self.source.is_some())
            .finish()
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    #[serde(rename = "N")]
    n: usize,
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    pub fn from_source(src: Arc<dyn CoefficientSource>, n: usize) -> Result<Self, SeriesError> {
        if n == 0 {
            return Err(SeriesError::ZeroPrecision);
        }
        let coeffs = src.coeffs(n)?;
        Ok(TruncatedSeries {
            coeffs,
            source: Some(src),
        })
    }

    /// A series with no source attached; it cannot be extended.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::ZeroPrecision);
        }
        Ok(TruncatedSeries {
            coeffs,
            source: None,
        })
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn source(&self) -> Option<&Arc<dyn CoefficientSource>> {
        self.source.as_ref()
    }

    /// True when the attached source guarantees every coefficient past `N`
    /// is zero, so the truncation equals the series.
    pub fn is_exact(&self) -> bool {
        matches!(
            self.source.as_ref().map(|s| s.kind()),
            Some(SourceKind::Finite { len }) if len <= self.coeffs.len()
        )
    }

    pub fn extend(&self, n: usize) -> Result<Self, SeriesError> {
        let src = self.source.as_ref().ok_or(SeriesError::NoSource)?;
        let current = self.coeffs.len();
        if n <= current {
            return Err(SeriesError::NotAnExtension {
                current,
                requested: n,
            });
        }
        let mut coeffs = self.coeffs.clone();
        for i in current + 1..=n {
            coeffs.push(src.coeff(i)?);
        }
        Ok(TruncatedSeries {
            coeffs,
            source: Some(Arc::clone(src)),
        })
    }

    /// Keeps the first `n` coefficients (no-op if `n ≥ N`).
    pub fn truncate(&self, n: usize) -> Result<Self, SeriesError> {
        if n == 0 {
            return Err(SeriesError::ZeroPrecision);
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().take(n).cloned().collect(),
            source: self.source.clone(),
        })
    }

    /// `Σ_{i≤N} c_i T^{-i}` as `P(T) / T^N`.
    pub fn to_rational(&self) -> (Poly, Poly) {
        let n = self.coeffs.len();
        let num = Poly::from_coeffs(self.coeffs.iter().rev().cloned().collect());
        (num, Poly::x_pow(n))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SeriesJson {
            n: self.coeffs.len(),
            coeffs: self.coeffs.clone(),
        })
        .expect("series serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, SeriesError> {
        let parsed: SeriesJson =
            serde_json::from_str(s).map_err(|e| SeriesError::Json(e.to_string()))?;
        if parsed.n != parsed.coeffs.len() {
            return Err(SeriesError::LengthMismatch {
                n: parsed.n,
                len: parsed.coeffs.len(),
            });
        }
        TruncatedSeries::from_coeffs(parsed.coeffs)
    }
}

/// Expands `num / den` (proper) into its first `n` coefficients of `T^{-i}`.
pub fn expand_rational(num: &Poly, den: &Poly, n: usize) -> Result<Vec<Rat>, SeriesError> {
    let src = RationalFunctionSource::new(num.clone(), den.clone())?;
    Ok((1..=n)
        .map(|i| src.coeff(i).expect("index ≥ 1"))
        .collect())
}
