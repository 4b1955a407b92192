//! Words in free groups and free monoids.
//!
//! Letters are generator indices into an [`Alphabet`]; words never carry
//! their alphabet, the caller keeps it alongside.

use std::fmt;

use crate::error::{Error, Result};

/// Ordered list of generator names. Declaration order is the letter order
/// used by every normal form in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '^' | ',' | '|' | '<' | '>'))
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(Error::InvalidAlphabet(format!("bad generator name `{name}`")));
            }
            if out.iter().any(|n| n == name) {
                return Err(Error::InvalidAlphabet(format!("duplicate generator `{name}`")));
            }
            out.push(name.to_string());
        }
        Ok(Alphabet { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.names[gen]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses whitespace-separated tokens `name` or `name^k` (k a non-zero
    /// integer). `name^-k` expands to k inverse letters. No reduction.
    pub fn parse_word(&self, text: &str) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, exp)) => {
                    if name.is_empty() || exp.is_empty() {
                        return Err(Error::MalformedToken(token.to_string()));
                    }
                    let exp: i64 = exp
                        .parse()
                        .map_err(|_| Error::MalformedToken(token.to_string()))?;
                    if exp == 0 {
                        return Err(Error::ZeroExponent(token.to_string()));
                    }
                    (name, exp)
                }
            };
            if name.contains('^') {
                return Err(Error::MalformedToken(token.to_string()));
            }
            let gen = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            let letter = Letter { gen, inverse: exp < 0 };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(FreeWord(letters))
    }

    /// Parses a word that must not contain inverse letters.
    pub fn parse_positive(&self, text: &str) -> Result<PositiveWord> {
        let w = self.parse_word(text)?;
        if let Some(l) = w.0.iter().find(|l| l.inverse) {
            return Err(Error::MalformedToken(format!("{}^-1 in a positive word", self.name(l.gen))));
        }
        Ok(PositiveWord(w.0.iter().map(|l| l.gen).collect()))
    }

    /// Renders a word with runs of equal letters collapsed (`a^2 b^-1`);
    /// the empty word renders as `1`.
    pub fn format_word(&self, w: &FreeWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.0.len() {
            let l = w.0[i];
            let mut j = i;
            while j < w.0.len() && w.0[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l.inverse { -run } else { run };
            if exp == 1 {
                parts.push(self.names[l.gen].clone());
            } else {
                parts.push(format!("{}^{}", self.names[l.gen], exp));
            }
            i = j;
        }
        parts.join(" ")
    }

    pub fn format_positive(&self, w: &PositiveWord) -> String {
        self.format_word(&w.to_free())
    }
}

/// A generator or its inverse. Ordered as `g0 < g0⁻¹ < g1 < g1⁻¹ < …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A word in the free group: a sequence of signed letters, not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        FreeWord(letters.into_iter().collect())
    }

    /// `gen^exp` as a word of |exp| letters.
    pub fn power_of_gen(gen: usize, exp: i64) -> Self {
        let l = Letter { gen, inverse: exp < 0 };
        FreeWord(vec![l; exp.unsigned_abs() as usize])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inverse)
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|l| l.gen >= rank) {
            Some(l) => Err(Error::InvalidLetter(l.gen)),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// `self^n`; negative `n` uses the formal inverse.
    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        FreeWord(v)
    }

    /// Rewrites generator indices through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> FreeWord {
        FreeWord(self.0.iter().map(|l| Letter { gen: map(l.gen), inverse: l.inverse }).collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && match (self.0.first(), self.0.last()) {
                (Some(f), Some(l)) if self.0.len() > 1 => !f.cancels(*l),
                _ => true,
            }
    }

    /// Free reduction.
    pub fn reduce(&self) -> FreeWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        FreeWord(out)
    }

    /// Returns `(core, conjugator)` with `core` cyclically reduced and
    /// `self = conjugator · core · conjugator⁻¹` in the free group.
    pub fn cyclically_reduce(&self) -> (FreeWord, FreeWord) {
        let r = self.reduce().0;
        let mut lo = 0;
        let mut hi = r.len();
        while hi - lo >= 2 && r[lo].cancels(r[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        (FreeWord(r[lo..hi].to_vec()), FreeWord(r[..lo].to_vec()))
    }

    /// Translation length on the Cayley tree: the cyclically reduced length.
    pub fn translation_length(&self) -> usize {
        self.cyclically_reduce().0.len()
    }

    /// Writes a cyclically reduced non-empty word as `root^exponent` with
    /// the exponent maximal.
    pub fn primitive_root(&self) -> Result<(FreeWord, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        let n = self.len();
        for d in 1..=n {
            if n.is_multiple_of(d) && (d..n).all(|i| self.0[i] == self.0[i - d]) {
                return Ok((FreeWord(self.0[..d].to_vec()), n / d));
            }
        }
        unreachable!("d = n always matches")
    }

    /// Signed number of occurrences of `gen`.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0.iter().filter(|l| l.gen == gen).map(|l| l.sign()).sum()
    }

    /// All cyclic permutations, starting with `self`.
    pub fn cyclic_permutations(&self) -> impl Iterator<Item = FreeWord> + '_ {
        let n = self.len();
        (0..n.max(1)).map(move |k| {
            if n == 0 {
                FreeWord::empty()
            } else {
                FreeWord(self.0[k..].iter().chain(&self.0[..k]).copied().collect())
            }
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| if l.inverse { format!("g{}^-1", l.gen) } else { format!("g{}", l.gen) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A word in the free monoid.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveWord(pub Vec<usize>);

impl PositiveWord {
    pub fn empty() -> Self {
        PositiveWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&g| g >= rank) {
            Some(&g) => Err(Error::InvalidLetter(g)),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &PositiveWord) -> PositiveWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PositiveWord(v)
    }

    pub fn to_free(&self) -> FreeWord {
        FreeWord(self.0.iter().map(|&g| Letter::pos(g)).collect())
    }
}
