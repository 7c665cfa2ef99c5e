//! The infinite word over `{1, 2}` built from
//! `W_0 = ∅`, `W_1 = 1`, `W_n = W_{n-1} 2 W_{n-2} 2 W_{n-1}`,
//! together with the length sequence `ℓ_n = |W_n|`.
//!
//! Every `W_{n-1}` and `W_{n-2}` is a prefix of `W_n`, so a single growing
//! buffer holds all of them and the next level is obtained by appending
//! `2 W_{n-2} 2 W_{n-1}` to it.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::laurent::{CoefficientSource, SourceError, SourceKind};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("index {0} is out of range (indices start at {1})")]
    IndexOutOfRange(usize, usize),
    #[error("length l_{0} does not fit in memory-addressable size")]
    TooLarge(usize),
}

/// `ℓ_0 = 0`, `ℓ_1 = 1`, `ℓ_{n+1} = 2ℓ_n + ℓ_{n-1} + 2`.
#[derive(Debug)]
pub struct LengthSeq {
    memo: RwLock<Vec<BigUint>>,
}

impl Default for LengthSeq {
    fn default() -> Self {
        LengthSeq::new()
    }
}

impl LengthSeq {
    pub fn new() -> Self {
        LengthSeq {
            memo: RwLock::new(vec![BigUint::zero(), BigUint::from(1u32)]),
        }
    }

    /// Exact `ℓ_n`.
    pub fn get(&self, n: usize) -> BigUint {
        if let Some(v) = self.memo.read().expect("length memo poisoned").get(n) {
            return v.clone();
        }
        let mut memo = self.memo.write().expect("length memo poisoned");
        while memo.len() <= n {
            let k = memo.len();
            let next = &memo[k - 1] * 2u32 + &memo[k - 2] + 2u32;
            memo.push(next);
        }
        memo[n].clone()
    }

    /// `ℓ_n` as a machine integer, for sizes that index real buffers.
    pub fn get_usize(&self, n: usize) -> Result<usize, WordError> {
        self.get(n).to_usize().ok_or(WordError::TooLarge(n))
    }

    /// `L_n = 2ℓ_n − ℓ_{n−1} + 1` for `n ≥ 1`.
    pub fn big_l(&self, n: usize) -> Result<BigUint, WordError> {
        if n == 0 {
            return Err(WordError::IndexOutOfRange(0, 1));
        }
        Ok(self.get(n) * 2u32 + 1u32 - self.get(n - 1))
    }
}

/// `ℓ_n` from a throwaway sequence; prefer a shared [`LengthSeq`] in loops.
pub fn length_l(n: usize) -> BigUint {
    LengthSeq::new().get(n)
}

pub fn big_l(n: usize) -> Result<BigUint, WordError> {
    LengthSeq::new().big_l(n)
}

#[derive(Debug)]
struct WordState {
    /// Holds `W_level`.
    letters: Vec<u8>,
    level: usize,
    /// `ℓ_0..=ℓ_level` as machine integers.
    lengths: Vec<usize>,
}

/// Memoized generator for the letters of the infinite word.
#[derive(Debug)]
pub struct WordStream {
    state: RwLock<WordState>,
}

impl Default for WordStream {
    fn default() -> Self {
        WordStream::new()
    }
}

impl WordStream {
    pub fn new() -> Self {
        WordStream {
            state: RwLock::new(WordState {
                letters: vec![1],
                level: 1,
                lengths: vec![0, 1],
            }),
        }
    }

    /// The first `k` letters.
    pub fn prefix(&self, k: usize) -> Vec<u8> {
        {
            let state = self.state.read().expect("word memo poisoned");
            if state.letters.len() >= k {
                return state.letters[..k].to_vec();
            }
        }
        let mut state = self.state.write().expect("word memo poisoned");
        grow_to(&mut state, k);
        state.letters[..k].to_vec()
    }

    /// The letter `w_i`, indices starting at 1.
    pub fn letter(&self, i: usize) -> Result<u8, WordError> {
        if i == 0 {
            return Err(WordError::IndexOutOfRange(0, 1));
        }
        {
            let state = self.state.read().expect("word memo poisoned");
            if let Some(&w) = state.letters.get(i - 1) {
                return Ok(w);
            }
        }
        let mut state = self.state.write().expect("word memo poisoned");
        grow_to(&mut state, i);
        Ok(state.letters[i - 1])
    }

    /// The finite word `W_n`.
    pub fn finite_word(&self, n: usize) -> Result<Vec<u8>, WordError> {
        let len = LengthSeq::new().get_usize(n)?;
        Ok(self.prefix(len))
    }
}

fn grow_to(state: &mut WordState, k: usize) {
    while state.letters.len() < k {
        let prev = state.lengths[state.level];
        let prev2 = state.lengths[state.level - 1];
        state.letters.reserve(prev + prev2 + 2);
        state.letters.push(2);
        state.letters.extend_from_within(..prev2);
        state.letters.push(2);
        state.letters.extend_from_within(..prev);
        state.level += 1;
        state.lengths.push(state.letters.len());
    }
}

/// The first `k` letters of the infinite word.
pub fn word_prefix(k: usize) -> Vec<u8> {
    shared_word().prefix(k)
}

/// Digit-string form, e.g. `122121212212`.
pub fn prefix_string(k: usize) -> String {
    word_prefix(k).iter().map(|d| char::from(b'0' + d)).collect()
}

fn shared_word() -> &'static Arc<WordStream> {
    static WORD: OnceLock<Arc<WordStream>> = OnceLock::new();
    WORD.get_or_init(|| Arc::new(WordStream::new()))
}

/// Coefficient source `c_i = w_i` of `θ = Σ w_i T^{-i}`.
#[derive(Debug, Clone)]
pub struct ThetaSource {
    word: Arc<WordStream>,
}

impl ThetaSource {
    pub fn new(word: Arc<WordStream>) -> Self {
        ThetaSource { word }
    }
}

impl CoefficientSource for ThetaSource {
    fn coeff(&self, i: usize) -> Result<Rat, SourceError> {
        self.word
            .letter(i)
            .map(|w| Rat::from(i64::from(w)))
            .map_err(|e| SourceError::Failed(e.to_string()))
    }

    fn coeffs(&self, n: usize) -> Result<Vec<Rat>, SourceError> {
        Ok(self
            .word
            .prefix(n)
            .into_iter()
            .map(|w| Rat::from(i64::from(w)))
            .collect())
    }

    fn kind(&self) -> SourceKind {
        SourceKind::Irrational
    }
}

/// The coefficient source of `θ`, backed by the process-wide word memo.
pub fn theta_source() -> ThetaSource {
    ThetaSource::new(Arc::clone(shared_word()))
}
