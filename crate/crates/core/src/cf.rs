//! Continued-fraction expansion `[0; a_1, a_2, ...]` of proper rational
//! functions and truncated Laurent series.
//!
//! Convergents are tracked through the continuant recursion
//! `K_n = a_n K_{n-1} + K_{n-2}` with `(x_1, x_0) = (1, 0)` and
//! `(y_1, y_0) = (a_1, 1)`, so `x_n / y_n = [0; a_1, ..., a_n]`.
//!
//! # Certification
//!
//! A truncation `θ'` of `θ` at precision `N` differs from it by at most
//! `|T|^{-(N+1)}`. When `2 deg y_k ≤ N`, the convergent `x_k / y_k` of `θ'`
//! satisfies `|θ − x_k / y_k| < |y_k|^{-2}`, which makes it a convergent of
//! `θ` as well, and so `a_1..a_k` are partial quotients of `θ`. The largest
//! such `k` is the certified prefix length.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::laurent::{CoefficientSource, SeriesError, TruncatedSeries};
use crate::poly::{Poly, PolyError};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("input has a polynomial part (deg num >= deg den)")]
    NotProper,
    #[error("index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("need 1 <= m < n, got m = {m}, n = {n}")]
    BadDeltaRange { m: usize, n: usize },
    #[error("convergent {n} is beyond the certified prefix ({certified})")]
    BeyondCertified { n: usize, certified: usize },
    #[error("precision cap {cap} reached with {certified} of {target} quotients certified")]
    PrecisionCap {
        cap: usize,
        certified: usize,
        target: usize,
    },
    #[error("partial quotient {index} changed between precision {precision} and {doubled}")]
    UnstablePrefix {
        index: usize,
        precision: usize,
        doubled: usize,
    },
    #[error("certified prefix has {0} quotients; at least 2 needed")]
    TooShort(usize),
    #[error("deg y_{0} = 0")]
    DegenerateDegree(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// How much of the expanded value is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// The input is the exact value; every quotient is certified.
    Exact,
    /// The input is a truncation after `N` coefficients of `T^{-i}`.
    Truncated(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    quotients: Vec<Poly>,
    x: Vec<Poly>,
    y: Vec<Poly>,
    mu: Vec<Rat>,
    certified: usize,
    precision: Precision,
    terminated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub x: Poly,
    pub y: Poly,
    pub x_star: Poly,
    pub y_star: Poly,
}

/// One row of the machine-readable expansion report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientRecord {
    pub n: usize,
    pub a: String,
    pub deg: usize,
    pub lambda: Rat,
    pub mu: Rat,
    pub certified: bool,
}

/// Expands `num / den` for at most `max_terms` partial quotients.
pub fn expand(
    num: &Poly,
    den: &Poly,
    precision: Precision,
    max_terms: usize,
) -> Result<CfExpansion, CfError> {
    if den.is_zero() {
        return Err(CfError::ZeroDenominator);
    }
    if num.degree() >= den.degree() {
        return Err(CfError::NotProper);
    }
    let mut e = CfExpansion {
        quotients: Vec::new(),
        x: vec![Poly::zero(), Poly::one()],
        y: vec![Poly::one()],
        mu: vec![Rat::one()],
        certified: 0,
        precision,
        terminated: false,
    };
    let (mut u, mut v) = (den.clone(), num.clone());
    while e.quotients.len() < max_terms && !v.is_zero() {
        let (a, r) = u.divrem(&v)?;
        e.push(a);
        u = v;
        v = r;
    }
    e.terminated = v.is_zero();
    e.certified = match precision {
        Precision::Exact => e.quotients.len(),
        Precision::Truncated(n) => (1..=e.quotients.len())
            .take_while(|&k| 2 * e.y[k].degree().unwrap_or(0) <= n)
            .count(),
    };
    Ok(e)
}

/// Expands a truncated series, treating it as exact when its source
/// guarantees that no coefficients follow.
pub fn expand_series(series: &TruncatedSeries, max_terms: usize) -> Result<CfExpansion, CfError> {
    let (num, den) = series.to_rational();
    let precision = if series.is_exact() {
        Precision::Exact
    } else {
        Precision::Truncated(series.precision())
    };
    expand(&num, &den, precision, max_terms)
}

/// The continuant `⟨q_1, ..., q_k⟩`; the empty continuant is 1.
pub fn continuant(qs: &[Poly]) -> Poly {
    let (mut prev, mut cur) = (Poly::zero(), Poly::one());
    for q in qs {
        let next = &(q * &cur) + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Doubles the precision from `n0` until `target_terms` quotients of the
/// source's series are certified, then re-expands once at twice the final
/// precision and checks that the prefix is unchanged.
///
/// Sources that know their exact rational value are expanded exactly and
/// return a finite, terminated expansion.
pub fn certify_by_doubling(
    src: Arc<dyn CoefficientSource>,
    target_terms: usize,
    n0: usize,
    cap: usize,
) -> Result<CfExpansion, CfError> {
    if target_terms == 0 {
        return Err(CfError::InvalidArgument("target_terms must be at least 1"));
    }
    if n0 == 0 {
        return Err(CfError::InvalidArgument("starting precision must be at least 1"));
    }
    if let Some((num, den)) = src.as_rational() {
        return expand(&num, &den, Precision::Exact, target_terms);
    }
    let mut n = n0;
    let mut series = TruncatedSeries::from_source(Arc::clone(&src), n)?;
    let mut last_certified = 0;
    while n <= cap {
        let e = expand_series(&series, target_terms)?;
        if e.certified >= target_terms || (e.terminated && e.precision == Precision::Exact) {
            let doubled = series.extend(2 * n)?;
            let check = expand_series(&doubled, target_terms)?;
            if let Some(index) = first_mismatch(&e, &check) {
                return Err(CfError::UnstablePrefix {
                    index,
                    precision: n,
                    doubled: 2 * n,
                });
            }
            return Ok(e);
        }
        last_certified = e.certified;
        n *= 2;
        series = series.extend(n)?;
    }
    Err(CfError::PrecisionCap {
        cap,
        certified: last_certified,
        target: target_terms,
    })
}

fn first_mismatch(a: &CfExpansion, b: &CfExpansion) -> Option<usize> {
    let k = a.certified.min(b.certified);
    (1..=k).find(|&i| a.quotients[i - 1] != b.quotients[i - 1])
}

impl CfExpansion {
    fn push(&mut self, a: Poly) {
        let k = self.quotients.len() + 1;
        let lambda = a.leading_coeff().expect("partial quotients are nonzero").clone();
        if k == 1 {
            self.y.push(a.clone());
        } else {
            self.x.push(&(&a * &self.x[k - 1]) + &self.x[k - 2]);
            self.y.push(&(&a * &self.y[k - 1]) + &self.y[k - 2]);
        }
        self.mu.push(&self.mu[k - 1] * &lambda);
        self.quotients.push(a);
    }

    /// Number of partial quotients computed (certified or not).
    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    pub fn certified(&self) -> usize {
        self.certified
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// True when the Euclidean remainder reached zero: the expanded input is
    /// a rational function with exactly `len()` partial quotients.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    pub fn partial_quotients(&self) -> &[Poly] {
        &self.quotients
    }

    /// Certified partial quotients only.
    pub fn certified_quotients(&self) -> &[Poly] {
        &self.quotients[..self.certified]
    }

    fn check_index(&self, n: usize) -> Result<(), CfError> {
        if n == 0 || n > self.len() {
            return Err(CfError::IndexOutOfRange {
                index: n,
                len: self.len(),
            });
        }
        Ok(())
    }

    /// `a_n`, indices starting at 1.
    pub fn a(&self, n: usize) -> Result<&Poly, CfError> {
        self.check_index(n)?;
        Ok(&self.quotients[n - 1])
    }

    /// `x_n` for `0 ≤ n ≤ len()`.
    pub fn x(&self, n: usize) -> Result<&Poly, CfError> {
        self.x.get(n).ok_or(CfError::IndexOutOfRange {
            index: n,
            len: self.len(),
        })
    }

    /// `y_n` for `0 ≤ n ≤ len()`.
    pub fn y(&self, n: usize) -> Result<&Poly, CfError> {
        self.y.get(n).ok_or(CfError::IndexOutOfRange {
            index: n,
            len: self.len(),
        })
    }

    /// `λ_n`, the leading coefficient of `a_n`.
    pub fn lambda(&self, n: usize) -> Result<&Rat, CfError> {
        Ok(self.a(n)?.leading_coeff()?)
    }

    /// `μ_n = λ_1 ⋯ λ_n` (`μ_0 = 1`).
    pub fn mu(&self, n: usize) -> Result<&Rat, CfError> {
        self.mu.get(n).ok_or(CfError::IndexOutOfRange {
            index: n,
            len: self.len(),
        })
    }

    /// `Δ(m, n) = x_n y_m − x_m y_n`.
    pub fn delta(&self, m: usize, n: usize) -> Result<Poly, CfError> {
        if m == 0 || m >= n {
            return Err(CfError::BadDeltaRange { m, n });
        }
        self.check_index(n)?;
        Ok(&(&self.x[n] * &self.y[m]) - &(&self.x[m] * &self.y[n]))
    }

    pub fn convergent(&self, n: usize) -> Result<Convergent, CfError> {
        self.check_index(n)?;
        if n > self.certified {
            return Err(CfError::BeyondCertified {
                n,
                certified: self.certified,
            });
        }
        let x = self.x[n].clone();
        let y = self.y[n].clone();
        Ok(Convergent {
            x_star: x.monic()?,
            y_star: y.monic()?,
            x,
            y,
        })
    }

    /// `ν̂_n = 2 + deg a_{n+1} / deg y_n` for `1 ≤ n < certified`.
    pub fn measure_estimate(&self) -> Result<Vec<(usize, Rat)>, CfError> {
        if self.certified < 2 {
            return Err(CfError::TooShort(self.certified));
        }
        (1..self.certified)
            .map(|n| {
                let dy = self.y[n].degree().unwrap_or(0);
                if dy == 0 {
                    return Err(CfError::DegenerateDegree(n));
                }
                let da = self.quotients[n].degree().unwrap_or(0);
                let est = Rat::from(2) + Rat::frac(da as i64, dy as i64);
                Ok((n, est))
            })
            .collect()
    }

    pub fn records(&self) -> Vec<QuotientRecord> {
        self.quotients
            .iter()
            .enumerate()
            .map(|(i, a)| QuotientRecord {
                n: i + 1,
                a: a.to_string(),
                deg: a.degree().unwrap_or(0),
                lambda: a.leading_coeff().expect("nonzero quotient").clone(),
                mu: self.mu[i + 1].clone(),
                certified: i < self.certified,
            })
            .collect()
    }
}

/// Largest estimate in a `measure_estimate` table.
pub fn running_max(estimates: &[(usize, Rat)]) -> Option<Rat> {
    estimates.iter().map(|(_, v)| v).max().cloned()
}
