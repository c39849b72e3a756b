//! The level-`l` representation of the three-strand braid group and the word
//! maps feeding it.

mod mat2;
mod tk;
mod words;

use serde::Serialize;
use thiserror::Error;

pub use mat2::Mat2;
pub use tk::{eval_braid, tk_generator, Level, TkContext};
pub use words::{
    eliminate_s3, phi_map, psi_map, Alphabet, BraidGen, BraidWord, ParseError, SigmaGen, SigmaWord,
    Word, XiGen, XiWord,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("level must be at least 1, got {0}")]
    InvalidLevel(u32),
    #[error("word syntax error at {0}")]
    Parse(#[from] ParseError),
}

/// Outcome of evaluating a loop word that should act trivially.
#[derive(Clone, Debug, Serialize)]
pub struct LanternReport {
    pub level: Level,
    pub word: SigmaWord,
    pub braid_word: BraidWord,
    /// Product of the images of the individual letters, minus the identity.
    pub residual: Mat2,
    pub identity: bool,
}

/// Evaluates `s3 s2 s1` letter by letter and compares with the identity.
pub fn lantern_check(level: Level) -> LanternReport {
    use SigmaGen::*;
    lantern_check_word(level, &SigmaWord::from_letters([(S3, 1), (S2, 1), (S1, 1)]))
}

/// Same check for an arbitrary loop word (used for negative controls).
pub fn lantern_check_word(level: Level, word: &SigmaWord) -> LanternReport {
    let ctx = TkContext::get(level);
    let mut product = ctx.identity();
    for &(s, e) in word.letters() {
        let m = ctx.sigma_generator(s).pow(e).expect("loop images are invertible");
        product = product.mul(&m);
    }
    let identity = product.is_identity();
    LanternReport {
        level,
        word: word.clone(),
        braid_word: psi_map(word),
        residual: product.sub(&ctx.identity()),
        identity,
    }
}
