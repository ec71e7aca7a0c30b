//! Words in the generators of the round twin group `Υ_n`, the cactus group
//! `J_n` and the annular twin group on `n` strands, with their text syntax:
//!
//! | group   | letters                                   |
//! |---------|-------------------------------------------|
//! | twin    | `s1` = σ₁, `z` = ζ, `Z` = ζ⁻¹             |
//! | cactus  | `r(p,q)` = s_{p,q}                        |
//! | annular | `a3` = α₃, `h` = η, `H` = η⁻¹             |
//!
//! Letters are separated by whitespace; the empty word is written `1`.

use std::fmt;

use super::{GroupError, Permutation};

/// Letters with a formal inverse.
pub(crate) trait Invertible: Copy + Eq {
    fn inverse(self) -> Self;
}

/// Cancels adjacent inverse pairs until none remain.
pub(crate) fn reduce<L: Invertible>(letters: impl IntoIterator<Item = L>) -> Vec<L> {
    let mut stack: Vec<L> = Vec::new();
    for letter in letters {
        if stack.last() == Some(&letter.inverse()) {
            stack.pop();
        } else {
            stack.push(letter);
        }
    }
    stack
}

fn write_letters<L: fmt::Display>(f: &mut fmt::Formatter<'_>, letters: &[L]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("1");
    }
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.split_whitespace().filter(|t| *t != "1")
}

fn bad_letter(token: &str) -> GroupError {
    GroupError::InvalidLetter(token.to_string())
}

fn parse_index(token: &str, digits: &str) -> Result<usize, GroupError> {
    digits.parse().map_err(|_| bad_letter(token))
}

// ---------------------------------------------------------------- twin

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinLetter {
    Sigma(usize),
    Zeta,
    ZetaInv,
}

impl Invertible for TwinLetter {
    fn inverse(self) -> Self {
        match self {
            TwinLetter::Zeta => TwinLetter::ZetaInv,
            TwinLetter::ZetaInv => TwinLetter::Zeta,
            sigma => sigma,
        }
    }
}

impl fmt::Display for TwinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwinLetter::Sigma(i) => write!(f, "s{i}"),
            TwinLetter::Zeta => f.write_str("z"),
            TwinLetter::ZetaInv => f.write_str("Z"),
        }
    }
}

/// A word in `σ_1, ..., σ_{n-1}, ζ^{±1}`, generators of `Υ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwinWord {
    n: usize,
    letters: Vec<TwinLetter>,
}

impl TwinWord {
    pub fn new(n: usize, letters: Vec<TwinLetter>) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::RankTooSmall { n, min: 1 });
        }
        for &l in &letters {
            if let TwinLetter::Sigma(i) = l {
                if i == 0 || i >= n {
                    return Err(GroupError::IndexOutOfRange { letter: l.to_string(), n });
                }
            }
        }
        Ok(Self { n, letters })
    }

    pub fn parse(n: usize, text: &str) -> Result<Self, GroupError> {
        let letters = tokens(text)
            .map(|t| match t {
                "z" => Ok(TwinLetter::Zeta),
                "Z" => Ok(TwinLetter::ZetaInv),
                _ => match t.strip_prefix('s') {
                    Some(digits) => parse_index(t, digits).map(TwinLetter::Sigma),
                    None => Err(bad_letter(t)),
                },
            })
            .collect::<Result<_, _>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[TwinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> Self {
        Self {
            n: self.n,
            letters: reduce(self.letters.iter().copied()),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &TwinWord) -> Result<Self, GroupError> {
        same_rank(self.n, other.n)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    /// σ_i ↦ (i i+1), ζ ↦ (1 2 ... n).
    pub fn permutation(&self) -> Permutation {
        let n = self.n;
        let rotation = Permutation::rotation(n);
        self.letters.iter().fold(Permutation::identity(n), |acc, l| match l {
            TwinLetter::Sigma(i) => acc.then(&Permutation::transposition(n, *i, i + 1)),
            TwinLetter::Zeta => acc.then(&rotation),
            TwinLetter::ZetaInv => acc.then(&rotation.inverse()),
        })
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// σ_i ↦ s_{i,i+1}, ζ ↦ s_{1,n} s_{2,n}, ζ⁻¹ ↦ s_{2,n} s_{1,n}.
    ///
    /// For `n = 2` the reversal s_{2,2} is empty and ζ maps to s_{1,2}.
    pub fn kappa(&self) -> Result<CactusWord, GroupError> {
        let n = self.n;
        if n < 2 {
            return Err(GroupError::RankTooSmall { n, min: 2 });
        }
        let long = Interval { p: 1, q: n };
        let second = (n > 2).then_some(Interval { p: 2, q: n });
        let mut letters = Vec::with_capacity(2 * self.len());
        for l in &self.letters {
            match l {
                TwinLetter::Sigma(i) => letters.push(Interval { p: *i, q: i + 1 }),
                TwinLetter::Zeta => letters.extend(std::iter::once(long).chain(second)),
                TwinLetter::ZetaInv => letters.extend(second.into_iter().chain(std::iter::once(long))),
            }
        }
        Ok(CactusWord { n, letters })
    }

    /// The same twin in the annular twin group on `n + 1` strands:
    /// σ_i ↦ α_i, ζ ↦ α_n η, ζ⁻¹ ↦ η⁻¹ α_n.
    pub fn to_annular(&self) -> AnnularWord {
        let n = self.n;
        let mut letters = Vec::with_capacity(2 * self.len());
        for l in &self.letters {
            match l {
                TwinLetter::Sigma(i) => letters.push(AnnularLetter::Alpha(*i)),
                TwinLetter::Zeta => letters.extend([AnnularLetter::Alpha(n), AnnularLetter::Eta]),
                TwinLetter::ZetaInv => letters.extend([AnnularLetter::EtaInv, AnnularLetter::Alpha(n)]),
            }
        }
        AnnularWord { n: n + 1, letters }
    }
}

impl fmt::Display for TwinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

// ---------------------------------------------------------------- cactus

/// The cactus generator s_{p,q}, `p < q`, reversing the interval `[p, q]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub p: usize,
    pub q: usize,
}

impl Interval {
    pub fn new(p: usize, q: usize, n: usize) -> Result<Self, GroupError> {
        if p == 0 || p >= q || q > n {
            return Err(GroupError::BadInterval { p, q, n });
        }
        Ok(Self { p, q })
    }

    pub fn is_disjoint(self, other: Interval) -> bool {
        self.q < other.p || other.q < self.p
    }

    /// `other` lies inside `self` and differs from it.
    pub fn strictly_contains(self, other: Interval) -> bool {
        self != other && self.p <= other.p && other.q <= self.q
    }

    /// Mirror image of a sub-interval under the reversal of `self`.
    pub fn reflect(self, inner: Interval) -> Interval {
        Interval {
            p: self.p + self.q - inner.q,
            q: self.p + self.q - inner.p,
        }
    }

    /// Image under the reflection `i ↦ n + 1 - i` of `[1, n]`.
    pub fn bar(self, n: usize) -> Interval {
        Interval {
            p: n + 1 - self.q,
            q: n + 1 - self.p,
        }
    }
}

impl Invertible for Interval {
    fn inverse(self) -> Self {
        self
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r({},{})", self.p, self.q)
    }
}

/// A word in the involutions s_{p,q} generating `J_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CactusWord {
    n: usize,
    letters: Vec<Interval>,
}

impl CactusWord {
    pub fn new(n: usize, letters: Vec<Interval>) -> Result<Self, GroupError> {
        for l in &letters {
            Interval::new(l.p, l.q, n)?;
        }
        Ok(Self { n, letters })
    }

    pub fn parse(n: usize, text: &str) -> Result<Self, GroupError> {
        let letters = tokens(text)
            .map(|t| {
                let inner = t
                    .strip_prefix("r(")
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| bad_letter(t))?;
                let (p, q) = inner.split_once(',').ok_or_else(|| bad_letter(t))?;
                Interval::new(parse_index(t, p.trim())?, parse_index(t, q.trim())?, n)
            })
            .collect::<Result<_, _>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Interval] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> Self {
        Self {
            n: self.n,
            letters: reduce(self.letters.iter().copied()),
        }
    }

    /// The inverse word: letters are involutions, so this is the reversal.
    pub fn inverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn concat(&self, other: &CactusWord) -> Result<Self, GroupError> {
        same_rank(self.n, other.n)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    /// s_{p,q} ↦ reversal of `[p, q]`.
    pub fn permutation(&self) -> Permutation {
        self.letters.iter().fold(Permutation::identity(self.n), |acc, l| {
            acc.then(&Permutation::reversal(self.n, l.p, l.q))
        })
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Letterwise s_{p,q} ↦ s_{n-q+1, n-p+1}.
    pub fn bar(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().map(|l| l.bar(self.n)).collect(),
        }
    }
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

// ---------------------------------------------------------------- annular

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnnularLetter {
    Alpha(usize),
    Eta,
    EtaInv,
}

impl Invertible for AnnularLetter {
    fn inverse(self) -> Self {
        match self {
            AnnularLetter::Eta => AnnularLetter::EtaInv,
            AnnularLetter::EtaInv => AnnularLetter::Eta,
            alpha => alpha,
        }
    }
}

impl fmt::Display for AnnularLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnnularLetter::Alpha(i) => write!(f, "a{i}"),
            AnnularLetter::Eta => f.write_str("h"),
            AnnularLetter::EtaInv => f.write_str("H"),
        }
    }
}

/// A word in `α_1, ..., α_n, η^{±1}`, generators of the annular twin group
/// on `n` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnnularWord {
    n: usize,
    letters: Vec<AnnularLetter>,
}

impl AnnularWord {
    pub fn new(n: usize, letters: Vec<AnnularLetter>) -> Result<Self, GroupError> {
        if n < 2 {
            return Err(GroupError::RankTooSmall { n, min: 2 });
        }
        for &l in &letters {
            if let AnnularLetter::Alpha(i) = l {
                if i == 0 || i > n {
                    return Err(GroupError::IndexOutOfRange { letter: l.to_string(), n });
                }
            }
        }
        Ok(Self { n, letters })
    }

    pub fn parse(n: usize, text: &str) -> Result<Self, GroupError> {
        let letters = tokens(text)
            .map(|t| match t {
                "h" => Ok(AnnularLetter::Eta),
                "H" => Ok(AnnularLetter::EtaInv),
                _ => match t.strip_prefix('a') {
                    Some(digits) => parse_index(t, digits).map(AnnularLetter::Alpha),
                    None => Err(bad_letter(t)),
                },
            })
            .collect::<Result<_, _>>()?;
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[AnnularLetter] {
        &self.letters
    }

    pub fn free_reduce(&self) -> Self {
        Self {
            n: self.n,
            letters: reduce(self.letters.iter().copied()),
        }
    }

    /// α_i ↦ (i i+1) for `i < n`, α_n ↦ (1 n), η ↦ (1 2 ... n).
    pub fn permutation(&self) -> Permutation {
        let n = self.n;
        let rotation = Permutation::rotation(n);
        self.letters.iter().fold(Permutation::identity(n), |acc, l| match l {
            AnnularLetter::Alpha(i) if *i < n => acc.then(&Permutation::transposition(n, *i, i + 1)),
            AnnularLetter::Alpha(_) => acc.then(&Permutation::transposition(n, 1, n)),
            AnnularLetter::Eta => acc.then(&rotation),
            AnnularLetter::EtaInv => acc.then(&rotation.inverse()),
        })
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

impl fmt::Display for AnnularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

pub(crate) fn same_rank(a: usize, b: usize) -> Result<(), GroupError> {
    if a == b {
        Ok(())
    } else {
        Err(GroupError::RankMismatch(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twin(n: usize, text: &str) -> TwinWord {
        TwinWord::parse(n, text).unwrap()
    }

    fn cactus(n: usize, text: &str) -> CactusWord {
        CactusWord::parse(n, text).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert!(twin(3, "s1 s1").free_reduce().is_empty());
        assert!(twin(4, "z Z s2 s2").free_reduce().is_empty());
        assert_eq!(cactus(4, "r(1,3) r(1,3) r(2,4)").free_reduce(), cactus(4, "r(2,4)"));
        assert_eq!(twin(4, "s1 z s2 s2 Z s1").free_reduce(), twin(4, "1"));
        let w = twin(4, "s1 z s3 Z");
        assert_eq!(w.free_reduce(), w);
        let a = AnnularWord::parse(4, "a1 h H a1 a2").unwrap();
        assert_eq!(a.free_reduce().to_string(), "a2");
    }

    #[test]
    fn syntax_round_trip() {
        for text in ["s1 z s2 Z", "1", "z z Z s3"] {
            assert_eq!(twin(4, text).to_string(), text);
        }
        assert_eq!(cactus(5, "r(1,5) r(2,3)").to_string(), "r(1,5) r(2,3)");
        assert_eq!(AnnularWord::parse(5, "a4 h H").unwrap().to_string(), "a4 h H");
    }

    #[test]
    fn rejects_bad_letters() {
        assert_eq!(
            TwinWord::parse(3, "s3"),
            Err(GroupError::IndexOutOfRange { letter: "s3".into(), n: 3 })
        );
        assert_eq!(TwinWord::parse(3, "q"), Err(GroupError::InvalidLetter("q".into())));
        assert_eq!(CactusWord::parse(3, "r(2,2)"), Err(GroupError::BadInterval { p: 2, q: 2, n: 3 }));
        assert_eq!(CactusWord::parse(3, "r(1,4)"), Err(GroupError::BadInterval { p: 1, q: 4, n: 3 }));
        assert!(CactusWord::parse(3, "r(1 2)").is_err());
        assert!(AnnularWord::parse(3, "a0").is_err());
        assert!(AnnularWord::parse(1, "h").is_err());
    }

    #[test]
    fn twin_permutations() {
        assert_eq!(twin(3, "s1").permutation().to_string(), "(1 2)");
        assert_eq!(twin(4, "z").permutation().to_string(), "(1 2 3 4)");
        assert!(twin(4, "1").permutation().is_identity());
        assert!(twin(5, "z z z z z").is_pure());
        assert!(!twin(5, "s1").is_pure());
    }

    #[test]
    fn cactus_permutations() {
        assert_eq!(cactus(3, "r(1,3)").permutation().to_string(), "(1 3)");
        assert!(cactus(4, "r(2,4) r(2,4)").permutation().is_identity());
        for n in 3..=7 {
            let z = CactusWord::new(n, vec![Interval { p: 1, q: n }, Interval { p: 2, q: n }]).unwrap();
            assert_eq!(z.permutation(), Permutation::rotation(n));
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(twin(4, "s2").kappa().unwrap(), cactus(4, "r(2,3)"));
        assert_eq!(twin(5, "z").kappa().unwrap(), cactus(5, "r(1,5) r(2,5)"));
        let k = twin(4, "z Z").kappa().unwrap();
        assert_eq!(k, cactus(4, "r(1,4) r(2,4) r(2,4) r(1,4)"));
        assert!(k.free_reduce().is_empty());
        assert_eq!(twin(2, "z").kappa().unwrap(), cactus(2, "r(1,2)"));
        assert!(twin(1, "z").kappa().is_err());
        assert_eq!(
            twin(4, "z").permutation(),
            twin(4, "z").kappa().unwrap().permutation()
        );
    }

    #[test]
    fn bar_examples() {
        assert_eq!(cactus(5, "r(1,2)").bar(), cactus(5, "r(4,5)"));
        assert_eq!(cactus(5, "r(1,5)").bar(), cactus(5, "r(1,5)"));
        let w = cactus(6, "r(1,3) r(2,6) r(4,5)");
        assert_eq!(w.bar().bar(), w);
    }

    #[test]
    fn annular_images() {
        assert_eq!(twin(4, "z").to_annular(), AnnularWord::parse(5, "a4 h").unwrap());
        assert_eq!(twin(4, "s2").to_annular(), AnnularWord::parse(5, "a2").unwrap());
        assert_eq!(twin(4, "Z").to_annular(), AnnularWord::parse(5, "H a4").unwrap());
        let p = AnnularWord::parse(5, "a4 h").unwrap().permutation();
        assert_eq!(p.apply(5), 5);
        assert_eq!(p.to_string(), "(1 2 3 4)");
        assert_eq!(AnnularWord::parse(4, "a4").unwrap().permutation().to_string(), "(1 4)");
    }

    #[test]
    fn rank_mismatch() {
        assert_eq!(twin(3, "s1").concat(&twin(4, "s1")), Err(GroupError::RankMismatch(3, 4)));
    }
}
