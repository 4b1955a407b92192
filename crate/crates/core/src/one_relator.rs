//! One-relator presentations `⟨x₁,…,x_k | W⟩` and the decidable part of
//! their C*-simplicity and `P_nai` classification.

use std::fmt;

use crate::error::{Error, Result};
use crate::gbs::{classify_cstar, Classification, GbsGraph, Verdict};
use crate::words::{Alphabet, FreeWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneRelatorPresentation {
    alphabet: Alphabet,
    relator: FreeWord,
    conjugator: FreeWord,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PNai {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for PNai {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PNai::Yes => "Yes",
            PNai::No => "No",
            PNai::Unknown => "Unknown",
        })
    }
}

/// Which branch of the decision tree a presentation falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    OneGenerator,
    ManyGenerators,
    FreeOfRankTwo,
    ProperPower(usize),
    BaumslagSolitar(i64, i64),
    Undecided,
}

impl OneRelatorPresentation {
    /// Cyclically reduces `relator`, remembering the discarded conjugator.
    pub fn new(alphabet: Alphabet, relator: &FreeWord) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::Malformed("a presentation needs at least one generator".into()));
        }
        relator.check_rank(alphabet.len())?;
        let (relator, conjugator) = relator.cyclically_reduce();
        Ok(OneRelatorPresentation { alphabet, relator, conjugator })
    }

    /// Parses `< g1, g2, … | word >`; the word may be empty.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Malformed(text.to_string());
        let inner = text
            .trim()
            .strip_prefix('<')
            .and_then(|s| s.strip_suffix('>'))
            .ok_or_else(bad)?;
        let (gens, word) = inner.split_once('|').ok_or_else(bad)?;
        let names: Vec<&str> = gens.split(',').map(str::trim).collect();
        if names.iter().any(|n| n.is_empty() || n.contains(char::is_whitespace)) {
            return Err(bad());
        }
        let alphabet = Alphabet::new(&names)?;
        let relator = alphabet.parse_word(word)?;
        Self::new(alphabet, &relator)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rank(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relator(&self) -> &FreeWord {
        &self.relator
    }

    /// `u` with `input relator = u · relator · u⁻¹` after free reduction.
    pub fn conjugator(&self) -> &FreeWord {
        &self.conjugator
    }

    fn branch(&self) -> Branch {
        match self.rank() {
            1 => Branch::OneGenerator,
            k if k >= 3 => Branch::ManyGenerators,
            _ if self.relator.is_empty() => Branch::FreeOfRankTwo,
            _ => {
                let (_, exp) = self.relator.primitive_root().expect("non-empty and cyclically reduced");
                if exp >= 2 {
                    Branch::ProperPower(exp)
                } else if let Some((m, n)) = match_bs_relator(&self.relator) {
                    Branch::BaumslagSolitar(m, n)
                } else {
                    Branch::Undecided
                }
            }
        }
    }

    pub fn classify(&self) -> Classification {
        let c = |verdict, reason: &str| Classification { verdict, reason: reason.to_string() };
        match self.branch() {
            Branch::OneGenerator => c(Verdict::Cyclic, "one generator: cyclic, hence amenable"),
            Branch::ManyGenerators => {
                c(Verdict::CstarSimple, "at least three generators: acylindrically hyperbolic")
            }
            Branch::FreeOfRankTwo => c(
                Verdict::CstarSimple,
                "empty relator: free group of rank 2 (classical, not derived here)",
            ),
            Branch::ProperPower(e) => Classification {
                verdict: Verdict::CstarSimple,
                reason: format!(
                    "relator is a proper power (exponent {e}): hyperbolic with free subgroups, not GBS"
                ),
            },
            Branch::BaumslagSolitar(m, n) => {
                let g = GbsGraph::bs_loop(m, n).expect("labels are non-zero");
                let inner = classify_cstar(&g).expect("a single loop is connected");
                Classification {
                    verdict: inner.verdict,
                    reason: format!("Baumslag-Solitar relator BS({m},{n}); {}", inner.reason),
                }
            }
            Branch::Undecided => c(
                Verdict::Unknown,
                "two generators and no syntactic match; deciding GBS-ness needs Howie's and Magnus' algorithms, not implemented",
            ),
        }
    }

    pub fn p_nai(&self) -> PNai {
        match self.branch() {
            Branch::OneGenerator | Branch::BaumslagSolitar(..) => PNai::No,
            Branch::ManyGenerators | Branch::FreeOfRankTwo | Branch::ProperPower(_) => PNai::Yes,
            Branch::Undecided => PNai::Unknown,
        }
    }
}

impl fmt::Display for OneRelatorPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.relator.is_empty() { String::new() } else { self.alphabet.format_word(&self.relator) };
        write!(f, "< {} | {} >", self.alphabet.names().join(", "), rel)
    }
}

/// Finds `(m, n)` such that some cyclic permutation of the relator or its
/// inverse reads `t a^m t⁻¹ a^{−n}` for the two distinct generators `t`, `a`.
pub fn match_bs_relator(relator: &FreeWord) -> Option<(i64, i64)> {
    for w in [relator.clone(), relator.inverse()] {
        for c in w.cyclic_permutations() {
            if let Some(found) = read_bs_form(&c) {
                return Some(found);
            }
        }
    }
    None
}

fn read_bs_form(w: &FreeWord) -> Option<(i64, i64)> {
    let letters = w.letters();
    let t = *letters.first()?;
    if t.inverse {
        return None;
    }
    let run = |start: usize| -> (usize, Option<crate::words::Letter>) {
        let first = letters.get(start).copied();
        let len = letters[start.min(letters.len())..].iter().take_while(|&&l| Some(l) == first).count();
        (len, first)
    };
    let (m_len, a) = run(1);
    let a = a?;
    if m_len == 0 || a.gen == t.gen {
        return None;
    }
    let back = 1 + m_len;
    if letters.get(back) != Some(&t.inv()) {
        return None;
    }
    let (n_len, b) = run(back + 1);
    let b = b?;
    if b.gen != a.gen || back + 1 + n_len != letters.len() {
        return None;
    }
    let m = a.sign() * m_len as i64;
    let n = -b.sign() * n_len as i64;
    Some((m, n))
}
