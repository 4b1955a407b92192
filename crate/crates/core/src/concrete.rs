//! Exact arithmetic in a few concrete groups:
//!
//! * `BS(1,n) = ⟨a,t | tat⁻¹ = aⁿ⟩`, faithfully represented by the affine
//!   maps `a: x ↦ x+1`, `t: x ↦ nx`;
//! * the trefoil group `⟨x,y | x³ = y²⟩` as an amalgam `ℤ *_ℤ ℤ`;
//! * its HNN extension `⟨x,y,t | x³ = y², tx³t⁻¹ = xy⟩`, via Britton reduction
//!   and coset representatives.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{Alphabet, FreeWord, Letter};

// ---------------------------------------------------------------------------
// BS(1,n)

/// `BS(1,n)` with generators `a` (index 0) and `t` (index 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BsGroup {
    n: i64,
}

/// The affine map `x ↦ n^k·x + b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    n: i64,
    k: i64,
    b: BigRational,
}

fn rat_pow(n: i64, k: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(n));
    let p = num_traits::pow(base, k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

impl BsGroup {
    pub fn new(n: i64) -> Result<Self> {
        if n.abs() < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(BsGroup { n })
    }

    pub fn modulus(&self) -> i64 {
        self.n
    }

    pub fn alphabet() -> Alphabet {
        Alphabet::new(&["a", "t"]).expect("static alphabet")
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement { n: self.n, k: 0, b: BigRational::zero() }
    }

    pub fn a(&self) -> AffineElement {
        AffineElement { n: self.n, k: 0, b: BigRational::one() }
    }

    pub fn t(&self) -> AffineElement {
        AffineElement { n: self.n, k: 1, b: BigRational::zero() }
    }

    /// Image of a word over `{a, t}`.
    pub fn from_word(&self, w: &FreeWord) -> Result<AffineElement> {
        w.check_rank(2)?;
        let gens = [self.a(), self.t()];
        let invs = [self.a().invert(), self.t().invert()];
        let mut acc = self.identity();
        for l in &w.0 {
            let g = if l.inverse { &invs[l.gen] } else { &gens[l.gen] };
            acc = acc.compose(g);
        }
        Ok(acc)
    }

    pub fn equal(&self, x: &AffineElement, y: &AffineElement) -> Result<bool> {
        x.equal(y)
    }
}

impl AffineElement {
    pub fn modulus(&self) -> i64 {
        self.n
    }

    pub fn power(&self) -> i64 {
        self.k
    }

    pub fn translation(&self) -> &BigRational {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.b.is_zero()
    }

    /// `self · other`, i.e. apply `other` first: `(k₁+k₂, n^{k₁}·b₂ + b₁)`.
    pub fn compose(&self, other: &AffineElement) -> AffineElement {
        debug_assert_eq!(self.n, other.n);
        AffineElement {
            n: self.n,
            k: self.k + other.k,
            b: rat_pow(self.n, self.k) * &other.b + &self.b,
        }
    }

    pub fn multiply(&self, other: &AffineElement) -> Result<AffineElement> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        Ok(self.compose(other))
    }

    pub fn invert(&self) -> AffineElement {
        AffineElement { n: self.n, k: -self.k, b: -(rat_pow(self.n, -self.k) * &self.b) }
    }

    pub fn equal(&self, other: &AffineElement) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch(self.n, other.n));
        }
        Ok(self.k == other.k && self.b == other.b)
    }

    /// Evaluates the map at a rational point.
    pub fn apply(&self, x: &BigRational) -> BigRational {
        rat_pow(self.n, self.k) * x + &self.b
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} b={}", self.k, self.b)
    }
}

// ---------------------------------------------------------------------------
// Trefoil group

/// Coset representative of `⟨x⟩/⟨x³⟩` (`X(1)`, `X(2)`) or `⟨y⟩/⟨y²⟩` (`Y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syllable {
    X(u8),
    Y,
}

/// Amalgam normal form `z^central · s₁ ⋯ s_m` with `z = x³ = y²` central and
/// the syllables alternating between the two factors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrefoilElement {
    central: i64,
    syllables: Vec<Syllable>,
}

/// `⟨x,y | x³ = y²⟩` with generators `x` (index 0) and `y` (index 1).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Trefoil;

impl Trefoil {
    pub fn alphabet() -> Alphabet {
        Alphabet::new(&["x", "y"]).expect("static alphabet")
    }

    pub fn from_word(w: &FreeWord) -> Result<TrefoilElement> {
        w.check_rank(2)?;
        let mut e = TrefoilElement::identity();
        for &l in &w.0 {
            e.push_letter(l);
        }
        Ok(e)
    }

    pub fn x() -> TrefoilElement {
        TrefoilElement { central: 0, syllables: vec![Syllable::X(1)] }
    }

    pub fn y() -> TrefoilElement {
        TrefoilElement { central: 0, syllables: vec![Syllable::Y] }
    }

    /// `z = x³ = y²`, written `b` in the examples.
    pub fn z() -> TrefoilElement {
        TrefoilElement { central: 1, syllables: vec![] }
    }

    /// `a = x²y`.
    pub fn a() -> TrefoilElement {
        TrefoilElement { central: 0, syllables: vec![Syllable::X(2), Syllable::Y] }
    }

    /// `b = x³`.
    pub fn b() -> TrefoilElement {
        Self::z()
    }

    /// `c = xy`.
    pub fn c() -> TrefoilElement {
        TrefoilElement { central: 0, syllables: vec![Syllable::X(1), Syllable::Y] }
    }
}

impl TrefoilElement {
    pub fn identity() -> Self {
        TrefoilElement::default()
    }

    pub fn central(&self) -> i64 {
        self.central
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.central == 0 && self.syllables.is_empty()
    }

    fn push_x(&mut self) {
        match self.syllables.last_mut() {
            Some(Syllable::X(p)) if *p == 2 => {
                self.syllables.pop();
                self.central += 1;
            }
            Some(Syllable::X(p)) => *p += 1,
            _ => self.syllables.push(Syllable::X(1)),
        }
    }

    fn push_y(&mut self) {
        match self.syllables.last() {
            Some(Syllable::Y) => {
                self.syllables.pop();
                self.central += 1;
            }
            _ => self.syllables.push(Syllable::Y),
        }
    }

    /// Right multiplication by a generator; `x⁻¹ = z⁻¹x²`, `y⁻¹ = z⁻¹y`.
    pub(crate) fn push_letter(&mut self, l: Letter) {
        match (l.gen, l.inverse) {
            (0, false) => self.push_x(),
            (0, true) => {
                self.central -= 1;
                self.push_x();
                self.push_x();
            }
            (1, false) => self.push_y(),
            (1, true) => {
                self.central -= 1;
                self.push_y();
            }
            _ => unreachable!("trefoil letters are checked on entry"),
        }
    }

    fn push_syllable(&mut self, s: Syllable) {
        match s {
            Syllable::X(p) => (0..p).for_each(|_| self.push_x()),
            Syllable::Y => self.push_y(),
        }
    }

    pub fn multiply(&self, other: &TrefoilElement) -> TrefoilElement {
        let mut out = self.clone();
        out.central += other.central;
        for &s in &other.syllables {
            out.push_syllable(s);
        }
        out
    }

    pub fn invert(&self) -> TrefoilElement {
        let mut out = TrefoilElement { central: -self.central, syllables: vec![] };
        for &s in self.syllables.iter().rev() {
            match s {
                Syllable::X(p) => (0..p).for_each(|_| out.push_letter(Letter::neg(0))),
                Syllable::Y => out.push_letter(Letter::neg(1)),
            }
        }
        out
    }

    pub fn pow(&self, n: i64) -> TrefoilElement {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = TrefoilElement::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `Some(k)` iff `self = b^k = z^k`.
    pub fn power_of_b(&self) -> Option<i64> {
        self.syllables.is_empty().then_some(self.central)
    }

    /// `Some(k)` iff `self = c^k` with `c = xy`.
    pub fn power_of_c(&self) -> Option<i64> {
        if self.syllables.is_empty() {
            return (self.central == 0).then_some(0);
        }
        if !self.syllables.len().is_multiple_of(2) {
            return None;
        }
        let n = (self.syllables.len() / 2) as i64;
        let c = Trefoil::c();
        [n, -n].into_iter().find(|&k| c.pow(k) == *self)
    }

    /// A word over `{x, y}` representing the element.
    pub fn to_word(&self) -> FreeWord {
        let mut w = FreeWord::power_of_gen(0, 3 * self.central);
        for &s in &self.syllables {
            match s {
                Syllable::X(p) => w.0.extend(std::iter::repeat_n(Letter::pos(0), p as usize)),
                Syllable::Y => w.0.push(Letter::pos(1)),
            }
        }
        w
    }

    /// Canonical representative of the left coset `self·⟨c⟩` together with
    /// `k` such that `self = rep · c^k`.
    ///
    /// The representative minimises `(syllable count, syllables)` over the
    /// coset; within a coset the syllables determine the element because no
    /// non-zero power of `c` is central.
    pub fn coset_rep_c(&self) -> (TrefoilElement, i64) {
        let window = self.syllables.len() as i64 + 2;
        let c = Trefoil::c();
        let c_inv = c.invert();
        let mut best: Option<(TrefoilElement, i64)> = None;
        // walk j = 0, 1, …, window and j = -1, …, -window
        for (step, dir) in [(&c, 1i64), (&c_inv, -1i64)] {
            let mut cur = self.clone();
            let start = if dir == 1 { 0 } else { 1 };
            if start == 1 {
                cur = cur.multiply(step);
            }
            for j in start..=window {
                let candidate = (cur.clone(), -(dir * j));
                let better = match &best {
                    None => true,
                    Some((b, _)) => coset_key(&candidate.0).cmp(&coset_key(b)) == Ordering::Less,
                };
                if better {
                    best = Some(candidate);
                }
                cur = cur.multiply(step);
            }
        }
        best.expect("window is non-empty")
    }

    /// Representative of `self·⟨b⟩` (central part dropped) and `k` with `self = rep · b^k`.
    pub fn coset_rep_b(&self) -> (TrefoilElement, i64) {
        (TrefoilElement { central: 0, syllables: self.syllables.clone() }, self.central)
    }
}

fn coset_key(e: &TrefoilElement) -> (usize, &[Syllable]) {
    (e.syllables.len(), &e.syllables)
}

impl fmt::Display for TrefoilElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.central != 0 {
            parts.push(format!("z^{}", self.central));
        }
        for s in &self.syllables {
            parts.push(match s {
                Syllable::X(1) => "x".to_string(),
                Syllable::X(p) => format!("x^{p}"),
                Syllable::Y => "y".to_string(),
            });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

// ---------------------------------------------------------------------------
// HNN extension of the trefoil group

/// `⟨x,y,t | x³ = y², t x³ t⁻¹ = xy⟩` with generators `x`, `y`, `t` (indices 0, 1, 2).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HnnTrefoil;

/// Canonical form `g₀ t^{ε₁} g₁ ⋯ t^{ε_m} g_m`: Britton-reduced, and every
/// `g_i` with `i < m` is the chosen representative of its coset modulo the
/// associated subgroup that could pass through the following stable letter
/// (`⟨c⟩` before `t`, `⟨b⟩` before `t⁻¹`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnnTrefoilElement {
    head: TrefoilElement,
    tail: Vec<(bool, TrefoilElement)>,
}

impl HnnTrefoil {
    pub fn alphabet() -> Alphabet {
        Alphabet::new(&["x", "y", "t"]).expect("static alphabet")
    }

    pub fn from_word(w: &FreeWord) -> Result<HnnTrefoilElement> {
        w.check_rank(3)?;
        let mut e = HnnTrefoilElement::default();
        for &l in &w.0 {
            e.push_letter_raw(l);
        }
        e.canonicalize();
        Ok(e)
    }

    fn base(e: TrefoilElement) -> HnnTrefoilElement {
        HnnTrefoilElement { head: e, tail: vec![] }
    }

    pub fn a() -> HnnTrefoilElement {
        Self::base(Trefoil::a())
    }

    pub fn b() -> HnnTrefoilElement {
        Self::base(Trefoil::b())
    }

    pub fn c() -> HnnTrefoilElement {
        Self::base(Trefoil::c())
    }

    /// `d = t·xy·t⁻¹`.
    pub fn d() -> HnnTrefoilElement {
        let w = FreeWord(vec![Letter::pos(2), Letter::pos(0), Letter::pos(1), Letter::neg(2)]);
        Self::from_word(&w).expect("static word")
    }

    pub fn t() -> HnnTrefoilElement {
        Self::from_word(&FreeWord(vec![Letter::pos(2)])).expect("static word")
    }
}

impl HnnTrefoilElement {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn is_identity(&self) -> bool {
        self.tail.is_empty() && self.head.is_identity()
    }

    /// Number of stable letters in the reduced form.
    pub fn t_length(&self) -> usize {
        self.tail.len()
    }

    pub fn head(&self) -> &TrefoilElement {
        &self.head
    }

    /// `(ε_i = +1, g_i)` for `i ≥ 1`.
    pub fn tail(&self) -> &[(bool, TrefoilElement)] {
        &self.tail
    }

    fn trailing_mut(&mut self) -> &mut TrefoilElement {
        match self.tail.last_mut() {
            Some((_, g)) => g,
            None => &mut self.head,
        }
    }

    /// Appends a letter keeping the form Britton-reduced (not canonical).
    fn push_letter_raw(&mut self, l: Letter) {
        if l.gen < 2 {
            self.trailing_mut().push_letter(l);
            return;
        }
        let positive = !l.inverse;
        if let Some((prev_positive, g)) = self.tail.last() {
            if *prev_positive != positive {
                // t g t⁻¹ with g = b^k is c^k; t⁻¹ g t with g = c^k is b^k
                let collapsed = if *prev_positive {
                    g.power_of_b().map(|k| Trefoil::c().pow(k))
                } else {
                    g.power_of_c().map(|k| Trefoil::b().pow(k))
                };
                if let Some(h) = collapsed {
                    self.tail.pop();
                    let t = self.trailing_mut();
                    *t = t.multiply(&h);
                    return;
                }
            }
        }
        self.tail.push((positive, TrefoilElement::identity()));
    }

    /// Pushes associated-subgroup parts rightwards so every `g_i` before a
    /// stable letter is a coset representative.
    fn canonicalize(&mut self) {
        for i in 0..self.tail.len() {
            let positive = self.tail[i].0;
            let g = if i == 0 { &self.head } else { &self.tail[i - 1].1 };
            // c^k t = t b^k and b^k t⁻¹ = t⁻¹ c^k
            let (rep, carry) = if positive {
                let (rep, k) = g.coset_rep_c();
                (rep, Trefoil::b().pow(k))
            } else {
                let (rep, k) = g.coset_rep_b();
                (rep, Trefoil::c().pow(k))
            };
            if i == 0 {
                self.head = rep;
            } else {
                self.tail[i - 1].1 = rep;
            }
            let next = &mut self.tail[i].1;
            *next = carry.multiply(next);
        }
    }

    pub fn to_word(&self) -> FreeWord {
        let mut w = self.head.to_word();
        for (positive, g) in &self.tail {
            w.0.push(if *positive { Letter::pos(2) } else { Letter::neg(2) });
            w.0.extend(g.to_word().0);
        }
        w
    }

    pub fn multiply(&self, other: &HnnTrefoilElement) -> HnnTrefoilElement {
        let mut out = self.clone();
        for &l in &other.to_word().0 {
            out.push_letter_raw(l);
        }
        out.canonicalize();
        out
    }

    pub fn invert(&self) -> HnnTrefoilElement {
        HnnTrefoil::from_word(&self.to_word().inverse()).expect("letters are in range")
    }

    pub fn pow(&self, n: i64) -> HnnTrefoilElement {
        HnnTrefoil::from_word(&self.to_word().pow(n)).expect("letters are in range")
    }
}

impl fmt::Display for HnnTrefoilElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.head)?;
        for (positive, g) in &self.tail {
            write!(f, " {} [{}]", if *positive { "t" } else { "t^-1" }, g)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// ψ

/// Exponent sum of the stable letter `t`.
pub fn psi(w: &FreeWord, t: usize) -> i64 {
    w.exponent_sum(t)
}

/// Whether `g` is a principal element of a subgroup `A ∋ g` generated by
/// `subgroup_gens`: `ψ(g) = l > 0` and `ψ(A) = lℤ`.
pub fn is_principal(g: &FreeWord, subgroup_gens: &[FreeWord], t: usize) -> bool {
    use num_integer::Integer;
    let l = psi(g, t);
    let generator = subgroup_gens.iter().fold(0i64, |acc, h| acc.gcd(&psi(h, t)));
    l > 0 && generator == l
}

/// Whether the element is elliptic (ψ = 0) for the action on the Bass–Serre tree.
pub fn is_elliptic(w: &FreeWord, t: usize) -> bool {
    psi(w, t) == 0
}

// ---------------------------------------------------------------------------
// Named groups

/// The groups exposed on the command line: `bs:<n>`, `trefoil`, `hnn-trefoil`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGroup {
    Bs(BsGroup),
    Trefoil,
    HnnTrefoil,
}

impl NamedGroup {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "trefoil" => Ok(NamedGroup::Trefoil),
            "hnn-trefoil" => Ok(NamedGroup::HnnTrefoil),
            _ => {
                let n = name
                    .strip_prefix("bs:")
                    .and_then(|n| n.parse::<i64>().ok())
                    .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
                Ok(NamedGroup::Bs(BsGroup::new(n)?))
            }
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        match self {
            NamedGroup::Bs(_) => BsGroup::alphabet(),
            NamedGroup::Trefoil => Trefoil::alphabet(),
            NamedGroup::HnnTrefoil => HnnTrefoil::alphabet(),
        }
    }

    /// Canonical form of a word, rendered as text.
    pub fn eval(&self, w: &FreeWord) -> Result<String> {
        Ok(match self {
            NamedGroup::Bs(g) => g.from_word(w)?.to_string(),
            NamedGroup::Trefoil => Trefoil::from_word(w)?.to_string(),
            NamedGroup::HnnTrefoil => HnnTrefoil::from_word(w)?.to_string(),
        })
    }

    pub fn equal(&self, u: &FreeWord, v: &FreeWord) -> Result<bool> {
        Ok(match self {
            NamedGroup::Bs(g) => g.from_word(u)? == g.from_word(v)?,
            NamedGroup::Trefoil => Trefoil::from_word(u)? == Trefoil::from_word(v)?,
            NamedGroup::HnnTrefoil => HnnTrefoil::from_word(u)? == HnnTrefoil::from_word(v)?,
        })
    }
}

/// Positive integer `|q|` as a `u64`, when it fits; used for reporting.
pub fn abs_numer(q: &BigRational) -> BigInt {
    q.numer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn bs_word(text: &str) -> FreeWord {
        BsGroup::alphabet().parse_word(text).unwrap()
    }

    fn tw(text: &str) -> FreeWord {
        Trefoil::alphabet().parse_word(text).unwrap()
    }

    fn hw(text: &str) -> FreeWord {
        HnnTrefoil::alphabet().parse_word(text).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn bs_examples() {
        let g = BsGroup::new(2).unwrap();
        assert!(g.from_word(&bs_word("t a t^-1 a^-2")).unwrap().is_identity());
        let t = g.from_word(&bs_word("t")).unwrap();
        assert_eq!((t.power(), t.translation().clone()), (1, rat(0)));
        let at = g.from_word(&bs_word("a t")).unwrap();
        assert_eq!((at.power(), at.translation().clone()), (1, rat(1)));
        assert_eq!(BsGroup::new(1), Err(Error::InvalidModulus(1)));
        assert!(BsGroup::new(-3).is_ok());
    }

    #[test]
    fn bs_equality() {
        let g = BsGroup::new(2).unwrap();
        assert!(g.equal(&g.identity(), &g.from_word(&FreeWord::empty()).unwrap()).unwrap());
        let x = g.from_word(&bs_word("t a t")).unwrap();
        let y = g.from_word(&bs_word("a t t")).unwrap();
        assert_eq!((x.translation().clone(), y.translation().clone()), (rat(2), rat(1)));
        assert!(!g.equal(&x, &y).unwrap());
        let e = g.from_word(&bs_word("a t^-3 a^2")).unwrap();
        assert!(e.equal(&e.invert().compose(&e).compose(&e)).unwrap());
        let h = BsGroup::new(3).unwrap();
        assert_eq!(e.equal(&h.identity()), Err(Error::ModulusMismatch(2, 3)));
    }

    #[test]
    fn bs_matches_the_affine_action() {
        let g = BsGroup::new(-3).unwrap();
        let e = g.from_word(&bs_word("t a^2 t^-2 a^-1 t")).unwrap();
        // evaluate the composite map on 5 letter by letter, rightmost first
        let mut x = rat(5);
        for l in bs_word("t a^2 t^-2 a^-1 t").0.iter().rev() {
            x = match (l.gen, l.inverse) {
                (0, false) => x + rat(1),
                (0, true) => x - rat(1),
                (1, false) => x * rat(-3),
                (1, true) => x / rat(-3),
                _ => unreachable!(),
            };
        }
        assert_eq!(e.apply(&rat(5)), x);
    }

    #[test]
    fn bs_free_submonoid_small() {
        let g = BsGroup::new(2).unwrap();
        let gens = [g.t(), g.a().compose(&g.t())];
        let mut level = vec![g.identity()];
        let mut seen: HashSet<AffineElement> = HashSet::from([g.identity()]);
        for _ in 0..6 {
            let mut next = Vec::new();
            for e in &level {
                for s in &gens {
                    let f = e.compose(s);
                    assert!(seen.insert(f.clone()));
                    next.push(f);
                }
            }
            level = next;
        }
        assert_eq!(seen.len(), 127);
    }

    #[test]
    fn trefoil_examples() {
        assert!(Trefoil::from_word(&tw("x^3 y^-2")).unwrap().is_identity());
        let w = tw("x^2 y x^3 y^-1 x^-2 x^-3");
        assert!(Trefoil::from_word(&w).unwrap().is_identity());
        assert_eq!(Trefoil::from_word(&tw("x")).unwrap(), Trefoil::x());
        assert_eq!(Trefoil::x().to_string(), "x");
        assert_eq!(Trefoil::from_word(&tw("x^-1")).unwrap().to_string(), "z^-1 x^2");
    }

    #[test]
    fn trefoil_relations() {
        let (a, b, c) = (Trefoil::a(), Trefoil::b(), Trefoil::c());
        assert_eq!(b, a.multiply(&c.invert()).pow(3));
        assert_eq!(a.multiply(&b), b.multiply(&a));
        assert_eq!(b.multiply(&c), c.multiply(&b));
        assert_ne!(a.multiply(&c), c.multiply(&a));
    }

    #[test]
    fn trefoil_power_tests() {
        assert_eq!(Trefoil::from_word(&tw("x^6")).unwrap().power_of_b(), Some(2));
        assert_eq!(Trefoil::from_word(&tw("x y x y")).unwrap().power_of_c(), Some(2));
        assert_eq!(Trefoil::x().power_of_b(), None);
        assert_eq!(Trefoil::x().power_of_c(), None);
        for k in -4..=4 {
            assert_eq!(Trefoil::c().pow(k).power_of_c(), Some(k));
            assert_eq!(Trefoil::b().pow(k).power_of_b(), Some(k));
        }
        assert_eq!(Trefoil::b().power_of_c(), None);
        assert_eq!(Trefoil::a().pow(2).power_of_c(), None);
    }

    #[test]
    fn coset_representatives() {
        let c = Trefoil::c();
        for w in ["x^2", "y x", "x y x^2 y", "y^-1 x", ""] {
            let g = Trefoil::from_word(&tw(w)).unwrap();
            let (rep, k) = g.coset_rep_c();
            assert_eq!(rep.multiply(&c.pow(k)), g);
            for j in -3..=3 {
                let (rep2, _) = g.multiply(&c.pow(j)).coset_rep_c();
                assert_eq!(rep2, rep, "coset of {w} shifted by c^{j}");
            }
        }
        assert!(Trefoil::c().pow(5).coset_rep_c().0.is_identity());
    }

    #[test]
    fn hnn_examples() {
        assert!(HnnTrefoil::from_word(&hw("t x^3 t^-1 y^-1 x^-1")).unwrap().is_identity());
        let (c, d) = (HnnTrefoil::c(), HnnTrefoil::d());
        let comm = c.multiply(&d).multiply(&c.invert()).multiply(&d.invert());
        assert!(comm.is_identity());
        let e = HnnTrefoil::from_word(&hw("t x t^-1")).unwrap();
        assert_eq!(e.t_length(), 2);
        assert!(HnnTrefoil::from_word(&hw("x t")).is_ok());
        assert_eq!(HnnTrefoil::from_word(&FreeWord(vec![Letter::pos(3)])), Err(Error::InvalidLetter(3)));
    }

    #[test]
    fn hnn_relations() {
        let (a, b, c, d) = (HnnTrefoil::a(), HnnTrefoil::b(), HnnTrefoil::c(), HnnTrefoil::d());
        assert_eq!(d.multiply(&c), c.multiply(&d));
        assert_eq!(a.multiply(&b), b.multiply(&a));
        assert_eq!(b.multiply(&c), c.multiply(&b));
        assert_ne!(a.multiply(&d), d.multiply(&a));
        let g = a.multiply(&d).multiply(&HnnTrefoil::t());
        assert!(g.multiply(&g.invert()).is_identity());
        assert!(d.t_length() == 2);
    }

    #[test]
    fn psi_and_principal() {
        let a = Alphabet::new(&["f", "t"]).unwrap();
        assert_eq!(psi(&a.parse_word("t^-2 f t^5").unwrap(), 1), 3);
        assert_eq!(psi(&a.parse_word("f^3").unwrap(), 1), 0);
        assert!(is_elliptic(&a.parse_word("t f t^-1").unwrap(), 1));
        let g = a.parse_word("t^2 f").unwrap();
        let h = a.parse_word("t^4").unwrap();
        assert!(is_principal(&g, &[g.clone(), h.clone()], 1));
        let g1 = a.parse_word("t^4 f").unwrap();
        assert!(!is_principal(&g1, &[g1.clone(), a.parse_word("t^2").unwrap()], 1));
        assert!(!is_principal(&a.parse_word("f").unwrap(), &[], 1));
    }

    #[test]
    fn named_groups() {
        assert_eq!(NamedGroup::parse("bs:2").unwrap(), NamedGroup::Bs(BsGroup::new(2).unwrap()));
        assert_eq!(NamedGroup::parse("trefoil").unwrap(), NamedGroup::Trefoil);
        assert!(NamedGroup::parse("bs:1").is_err());
        assert!(matches!(NamedGroup::parse("free"), Err(Error::UnknownGroup(_))));
        let g = NamedGroup::parse("bs:2").unwrap();
        assert_eq!(g.eval(&bs_word("a t")).unwrap(), "k=1 b=1");
    }

    fn arb_word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((0..rank, any::<bool>()), 0..=max_len)
            .prop_map(|v| FreeWord(v.into_iter().map(|(gen, inverse)| Letter { gen, inverse }).collect()))
    }

    proptest! {
        #[test]
        fn trefoil_relator_insertion(u in arb_word(2, 6), v in arb_word(2, 6)) {
            let rel = tw("x^3 y^-2");
            let with = u.concat(&rel).concat(&v);
            prop_assert_eq!(Trefoil::from_word(&with).unwrap(), Trefoil::from_word(&u.concat(&v)).unwrap());
        }

        #[test]
        fn trefoil_homomorphism(u in arb_word(2, 8), v in arb_word(2, 8)) {
            let (x, y) = (Trefoil::from_word(&u).unwrap(), Trefoil::from_word(&v).unwrap());
            let xy = x.multiply(&y);
            prop_assert_eq!(&xy, &Trefoil::from_word(&u.concat(&v)).unwrap());
            // alternation
            for p in xy.syllables().windows(2) {
                prop_assert!(matches!((p[0], p[1]), (Syllable::X(_), Syllable::Y) | (Syllable::Y, Syllable::X(_))));
            }
            prop_assert!(x.multiply(&x.invert()).is_identity());
            prop_assert_eq!(Trefoil::from_word(&x.to_word()).unwrap(), x);
        }

        #[test]
        fn bs_homomorphism(u in arb_word(2, 8), v in arb_word(2, 8), n in prop::sample::select(vec![-3i64, -2, 2, 3, 5])) {
            let g = BsGroup::new(n).unwrap();
            let (x, y) = (g.from_word(&u).unwrap(), g.from_word(&v).unwrap());
            prop_assert_eq!(x.compose(&y), g.from_word(&u.concat(&v)).unwrap());
            prop_assert!(x.compose(&x.invert()).is_identity());
            // the relator t a t^-1 a^-n holds anywhere
            let rel = BsGroup::alphabet().parse_word(&format!("t a t^-1 a^{}", -n)).unwrap();
            prop_assert_eq!(g.from_word(&u.concat(&rel).concat(&v)).unwrap(), g.from_word(&u.concat(&v)).unwrap());
        }

        #[test]
        fn hnn_homomorphism(u in arb_word(3, 6), v in arb_word(3, 6)) {
            let (x, y) = (HnnTrefoil::from_word(&u).unwrap(), HnnTrefoil::from_word(&v).unwrap());
            prop_assert_eq!(x.multiply(&y), HnnTrefoil::from_word(&u.concat(&v)).unwrap());
            prop_assert!(x.multiply(&x.invert()).is_identity());
            prop_assert_eq!(HnnTrefoil::from_word(&x.to_word()).unwrap(), x);
        }

        #[test]
        fn hnn_relators_vanish(u in arb_word(3, 6), v in arb_word(3, 6), which in 0usize..2) {
            let rel = if which == 0 { hw("x^3 y^-2") } else { hw("t x^3 t^-1 y^-1 x^-1") };
            let with = u.concat(&rel).concat(&v);
            prop_assert_eq!(HnnTrefoil::from_word(&with).unwrap(), HnnTrefoil::from_word(&u.concat(&v)).unwrap());
        }

        #[test]
        fn hnn_bracketing_independent(u in arb_word(3, 4), v in arb_word(3, 4), w in arb_word(3, 4)) {
            let (x, y, z) = (
                HnnTrefoil::from_word(&u).unwrap(),
                HnnTrefoil::from_word(&v).unwrap(),
                HnnTrefoil::from_word(&w).unwrap(),
            );
            let left = x.multiply(&y).multiply(&z);
            let right = x.multiply(&y.multiply(&z));
            prop_assert_eq!(&left, &right);
            // reducing the reversed inverse word and inverting back lands on the same form
            let whole = u.concat(&v).concat(&w);
            prop_assert_eq!(HnnTrefoil::from_word(&whole.inverse()).unwrap().invert(), left);
        }
    }
}
