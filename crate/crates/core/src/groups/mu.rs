//! The rewriting map μ, which turns a word in s_{i,i+1}, s_{1,n}, s_{2,n} and
//! s_{1,n-1} into a word in s_{i,i+1}, z = s_{1,n} s_{2,n} and s_{1,n}.

use std::fmt;

use super::words::{reduce, Invertible};
use super::{CactusWord, GroupError, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MuLetter {
    /// s_{i,i+1}
    Adjacent(usize),
    /// s_{1,n}
    Long,
    /// z = s_{1,n} s_{2,n}
    Z,
    /// z⁻¹ = s_{2,n} s_{1,n}
    ZInv,
}

impl Invertible for MuLetter {
    fn inverse(self) -> Self {
        match self {
            MuLetter::Z => MuLetter::ZInv,
            MuLetter::ZInv => MuLetter::Z,
            other => other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuWord {
    n: usize,
    letters: Vec<MuLetter>,
}

impl MuWord {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[MuLetter] {
        &self.letters
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

    /// Substitutes z ↦ s_{1,n} s_{2,n} and z⁻¹ ↦ s_{2,n} s_{1,n}.
    pub fn expand(&self) -> CactusWord {
        let n = self.n;
        let long = Interval { p: 1, q: n };
        let second = Interval { p: 2, q: n };
        let mut letters = Vec::with_capacity(2 * self.letters.len());
        for l in &self.letters {
            match l {
                MuLetter::Adjacent(i) => letters.push(Interval { p: *i, q: i + 1 }),
                MuLetter::Long => letters.push(long),
                MuLetter::Z => letters.extend([long, second]),
                MuLetter::ZInv => letters.extend([second, long]),
            }
        }
        CactusWord::new(n, letters).expect("mu letters are valid generators")
    }

    /// Reflection of every generator interval inside `[1, n]`.
    ///
    /// Letterwise, the reflection of z is s_{1,n} s_{1,n-1}, which equals z⁻¹
    /// in the cactus group; the image stays in the μ alphabet that way.
    pub fn bar(&self) -> Self {
        let n = self.n;
        let letters = self
            .letters
            .iter()
            .map(|l| match l {
                MuLetter::Adjacent(i) => MuLetter::Adjacent(n - i),
                other => other.inverse(),
            })
            .collect();
        Self { n, letters }
    }
}

impl fmt::Display for MuLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MuLetter::Adjacent(i) => write!(f, "r({},{})", i, i + 1),
            // n is not known here; MuWord's Display spells s_{1,n} out
            MuLetter::Long => f.write_str("r(1,n)"),
            MuLetter::Z => f.write_str("z"),
            MuLetter::ZInv => f.write_str("Z"),
        }
    }
}

impl fmt::Display for MuWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let items: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l {
                MuLetter::Long => format!("r(1,{})", self.n),
                other => other.to_string(),
            })
            .collect();
        f.write_str(&items.join(" "))
    }
}

enum Head {
    Adjacent(usize),
    Long,
    Second,
    Third,
}

fn classify(letter: Interval, n: usize) -> Result<Head, GroupError> {
    match (letter.p, letter.q) {
        (p, q) if q == p + 1 => Ok(Head::Adjacent(p)),
        (1, q) if q == n => Ok(Head::Long),
        (2, q) if q == n => Ok(Head::Second),
        (1, q) if q == n - 1 => Ok(Head::Third),
        _ => Err(GroupError::NotAdmissible(letter.to_string())),
    }
}

/// μ, defined on words in s_{i,i+1}, s_{1,n}, s_{2,n}, s_{1,n-1} for `n ≥ 4`:
///
/// - μ(1) = 1
/// - μ(s_{i,i+1} v) = s_{i,i+1} μ(v)
/// - μ(s_{1,n} v) = bar(μ(v)) s_{1,n}
/// - μ(s_{2,n} v) = z⁻¹ bar(μ(v)) s_{1,n}
/// - μ(s_{1,n-1} v) = z bar(μ(v)) s_{1,n}
pub fn mu(word: &CactusWord) -> Result<MuWord, GroupError> {
    let n = word.n();
    if n < 4 {
        return Err(GroupError::RankTooSmall { n, min: 4 });
    }
    let heads = word
        .letters()
        .iter()
        .map(|&l| classify(l, n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut acc = MuWord { n, letters: Vec::new() };
    for head in heads.iter().rev() {
        let prefix = match head {
            Head::Adjacent(i) => {
                acc.letters.insert(0, MuLetter::Adjacent(*i));
                continue;
            }
            Head::Long => None,
            Head::Second => Some(MuLetter::ZInv),
            Head::Third => Some(MuLetter::Z),
        };
        let mut letters: Vec<MuLetter> = prefix.into_iter().collect();
        letters.extend(acc.bar().letters);
        letters.push(MuLetter::Long);
        acc.letters = letters;
    }
    Ok(acc)
}

/// μ(u) with its trailing run of s_{1,n} removed, and the length of that run.
pub fn mu_prime(word: &CactusWord) -> Result<(MuWord, usize), GroupError> {
    let mut m = mu(word)?;
    let keep = m
        .letters
        .iter()
        .rposition(|&l| l != MuLetter::Long)
        .map_or(0, |i| i + 1);
    let k = m.letters.len() - keep;
    m.letters.truncate(keep);
    Ok((m, k))
}
