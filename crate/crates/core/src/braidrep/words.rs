//! Freely reduced words over small alphabets and their text syntax.

use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A finite generating alphabet written `<prefix><index>`.
pub trait Alphabet: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const PREFIX: char;
    const NAME: &'static str;
    /// All generators, ordered by index starting at 1.
    fn all() -> &'static [Self];

    fn index(self) -> usize {
        Self::all().iter().position(|&g| g == self).unwrap() + 1
    }

    fn from_index(i: usize) -> Option<Self> {
        i.checked_sub(1).and_then(|i| Self::all().get(i).copied())
    }
}

/// Generators `g1`, `g2` of the braid group on three strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BraidGen {
    G1,
    G2,
}

/// Loops `s1`, `s2`, `s3` in the fundamental group of the four-punctured sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SigmaGen {
    S1,
    S2,
    S3,
}

/// Loops `x1`, `x2`, `x3` of the five-point family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum XiGen {
    X1,
    X2,
    X3,
}

impl Alphabet for BraidGen {
    const PREFIX: char = 'g';
    const NAME: &'static str = "braid";
    fn all() -> &'static [Self] {
        &[BraidGen::G1, BraidGen::G2]
    }
}

impl Alphabet for SigmaGen {
    const PREFIX: char = 's';
    const NAME: &'static str = "sigma";
    fn all() -> &'static [Self] {
        &[SigmaGen::S1, SigmaGen::S2, SigmaGen::S3]
    }
}

impl Alphabet for XiGen {
    const PREFIX: char = 'x';
    const NAME: &'static str = "xi";
    fn all() -> &'static [Self] {
        &[XiGen::X1, XiGen::X2, XiGen::X3]
    }
}

/// Word syntax error; `column` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

/// Freely reduced word: no zero exponents and no two adjacent letters on the
/// same generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<A: Alphabet> {
    letters: Vec<(A, i64)>,
}

pub type BraidWord = Word<BraidGen>;
pub type SigmaWord = Word<SigmaGen>;
pub type XiWord = Word<XiGen>;

impl<A: Alphabet> Default for Word<A> {
    fn default() -> Self {
        Word { letters: Vec::new() }
    }
}

impl<A: Alphabet> Word<A> {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letter(g: A, e: i64) -> Self {
        let mut w = Self::empty();
        w.push(g, e);
        w
    }

    pub fn from_letters<I: IntoIterator<Item = (A, i64)>>(letters: I) -> Self {
        let mut w = Self::empty();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    /// Appends `g^e`, cancelling against the end of the word.
    pub fn push(&mut self, g: A, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn letters(&self) -> &[(A, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, e)| e).sum()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Self {
        Self::from_letters(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::empty();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// Image under the homomorphism determined by `f` on generators.
    pub fn substitute<B: Alphabet>(&self, f: impl Fn(A) -> Word<B>) -> Word<B> {
        let mut out = Word::empty();
        for &(g, e) in &self.letters {
            out = out.concat(&f(g).pow(e));
        }
        out
    }

    /// Parses words like `g1^2 g2^-1`; whitespace and `*` separate letters.
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let chars: Vec<(usize, char)> = s.char_indices().collect();
        let err = |i: usize, message: String| ParseError {
            column: chars.get(i).map_or(s.chars().count() + 1, |_| i + 1),
            message,
        };
        let mut w = Self::empty();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i].1;
            if c.is_whitespace() || c == '*' {
                i += 1;
                continue;
            }
            if c != A::PREFIX {
                return Err(err(
                    i,
                    format!("unknown generator {c:?}; the {} alphabet uses '{}'", A::NAME, A::PREFIX),
                ));
            }
            let start = i;
            i += 1;
            let idx_start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            if idx_start == i {
                return Err(err(i, format!("expected an index after '{}'", A::PREFIX)));
            }
            let digits: String = chars[idx_start..i].iter().map(|&(_, c)| c).collect();
            let gen = digits
                .parse::<usize>()
                .ok()
                .and_then(A::from_index)
                .ok_or_else(|| err(start, format!("unknown generator {}{digits}", A::PREFIX)))?;
            let mut exp = 1i64;
            if i < chars.len() && chars[i].1 == '^' {
                i += 1;
                let exp_start = i;
                if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                    i += 1;
                }
                let num_start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                if num_start == i {
                    return Err(err(i, "expected an integer exponent after '^'".into()));
                }
                let text: String = chars[exp_start..i].iter().map(|&(_, c)| c).collect();
                exp = text
                    .parse()
                    .map_err(|_| err(exp_start, format!("exponent {text} out of range")))?;
            }
            w.push(gen, exp);
        }
        Ok(w)
    }
}

impl<A: Alphabet> fmt::Display for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", A::PREFIX, g.index())?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl<A: Alphabet> fmt::Debug for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl<A: Alphabet> Serialize for Word<A> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de, A: Alphabet> Deserialize<'de> for Word<A> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Embedding of the four-punctured-sphere loops into the pure braid group.
pub fn psi_map(w: &SigmaWord) -> BraidWord {
    use BraidGen::*;
    w.substitute(|s| match s {
        SigmaGen::S1 => BraidWord::from_letters([(G2, 1), (G1, 2), (G2, -1)]),
        SigmaGen::S2 => BraidWord::letter(G2, 2),
        // s3 = (s2 s1)^-1
        SigmaGen::S3 => BraidWord::from_letters([(G2, 1), (G1, -2), (G2, -3)]),
    })
}

/// Rewrites `s3` as `(s2 s1)^-1`.
pub fn eliminate_s3(w: &SigmaWord) -> SigmaWord {
    use SigmaGen::*;
    w.substitute(|s| match s {
        S3 => SigmaWord::from_letters([(S1, -1), (S2, -1)]),
        g => SigmaWord::letter(g, 1),
    })
}

/// Image of the five-point loops in the four-punctured-sphere group.
pub fn phi_map(w: &XiWord) -> SigmaWord {
    use SigmaGen::*;
    w.substitute(|x| match x {
        XiGen::X1 => SigmaWord::letter(S1, 2),
        XiGen::X2 => SigmaWord::letter(S2, 2),
        XiGen::X3 => SigmaWord::from_letters([(S2, -1), (S1, -1)]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_on_push() {
        let w = BraidWord::parse("g1 g2 g2^-1 g1^-1 g2^3").unwrap();
        assert_eq!(w.to_string(), "g2^3");
        assert!(BraidWord::parse("g1^2 g1^-2").unwrap().is_empty());
    }

    #[test]
    fn parse_forms() {
        let w = SigmaWord::parse("s1^-1 s2").unwrap();
        assert_eq!(w.letters(), &[(SigmaGen::S1, -1), (SigmaGen::S2, 1)]);
        assert_eq!(XiWord::parse("x3*x1").unwrap().to_string(), "x3 x1");
        assert_eq!(BraidWord::parse("g1g2^+2").unwrap().to_string(), "g1 g2^2");
        assert!(BraidWord::parse("   ").unwrap().is_empty());
    }

    #[test]
    fn parse_errors_carry_columns() {
        let e = BraidWord::parse("g1 g3").unwrap_err();
        assert_eq!(e.column, 4);
        let e = BraidWord::parse("g1 s2").unwrap_err();
        assert_eq!(e.column, 4);
        assert!(e.message.contains("unknown generator"));
        let e = BraidWord::parse("g1^").unwrap_err();
        assert_eq!(e.column, 4);
        let e = SigmaWord::parse("s").unwrap_err();
        assert_eq!(e.column, 2);
    }

    #[test]
    fn psi_images() {
        let s1 = SigmaWord::parse("s1").unwrap();
        assert_eq!(psi_map(&s1).to_string(), "g2 g1^2 g2^-1");
        assert_eq!(psi_map(&SigmaWord::parse("s2").unwrap()).to_string(), "g2^2");
        assert_eq!(psi_map(&SigmaWord::parse("s1^-1 s2").unwrap()).to_string(), "g2 g1^-2 g2");
        assert!(psi_map(&SigmaWord::empty()).is_empty());
        assert!(psi_map(&SigmaWord::parse("s3 s2 s1").unwrap()).is_empty());
    }

    #[test]
    fn phi_images() {
        let w = phi_map(&XiWord::parse("x3 x1").unwrap());
        assert_eq!(w.to_string(), "s2^-1 s1");
        assert_eq!(phi_map(&XiWord::parse("x2").unwrap()).to_string(), "s2^2");
        assert!(phi_map(&XiWord::parse("x1 x1^-1").unwrap()).is_empty());
    }

    #[test]
    fn s3_elimination_matches_psi() {
        let w = SigmaWord::parse("s3^2 s1 s3^-1").unwrap();
        assert_eq!(psi_map(&w), psi_map(&eliminate_s3(&w)));
    }
}
