//! Relator audits: every defining relator must act trivially on the strands,
//! and, where a solver exists, must be trivial in the target group.

use super::{
    AnnularLetter, AnnularWord, CactusSolver, CactusWord, GroupError, Interval, TwinLetter, TwinWord,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    /// Υ_n; relators are also sent through κ into J_n.
    Twin,
    /// J_n.
    Cactus,
    /// The annular twin group on n strands.
    Annular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorCheck {
    pub relator: String,
    pub permutation_ok: bool,
    /// `None` when no solver applies.
    pub solver_ok: Option<bool>,
}

impl RelatorCheck {
    pub fn ok(&self) -> bool {
        self.permutation_ok && self.solver_ok != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationReport {
    pub presentation: Presentation,
    pub n: usize,
    pub checks: Vec<RelatorCheck>,
}

impl PresentationReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(RelatorCheck::ok)
    }

    pub fn failures(&self) -> Vec<&RelatorCheck> {
        self.checks.iter().filter(|c| !c.ok()).collect()
    }
}

pub fn verify_presentation(
    presentation: Presentation,
    n: usize,
    solver: &CactusSolver,
) -> Result<PresentationReport, GroupError> {
    let checks = match presentation {
        Presentation::Twin => twin_relators(n)?
            .into_iter()
            .map(|w| {
                let solver_ok = if n >= 2 {
                    solver.is_trivial(&w.kappa()?)?
                } else {
                    solver.twin_is_trivial(&w)?
                };
                Ok(RelatorCheck {
                    relator: w.to_string(),
                    permutation_ok: w.is_pure(),
                    solver_ok: Some(solver_ok),
                })
            })
            .collect::<Result<_, GroupError>>()?,
        Presentation::Cactus => cactus_relators(n)?
            .into_iter()
            .map(|w| {
                Ok(RelatorCheck {
                    relator: w.to_string(),
                    permutation_ok: w.is_pure(),
                    solver_ok: Some(solver.is_trivial(&w)?),
                })
            })
            .collect::<Result<_, GroupError>>()?,
        Presentation::Annular => annular_relators(n)?
            .into_iter()
            .map(|w| RelatorCheck {
                relator: w.to_string(),
                permutation_ok: w.is_pure(),
                solver_ok: None,
            })
            .collect(),
    };
    Ok(PresentationReport { presentation, n, checks })
}

fn twin_relators(n: usize) -> Result<Vec<TwinWord>, GroupError> {
    use TwinLetter::{Sigma, Zeta, ZetaInv};
    let mut out = Vec::new();
    for i in 1..n {
        out.push(TwinWord::new(n, vec![Sigma(i), Sigma(i)])?);
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(TwinWord::new(n, vec![Sigma(i), Sigma(j), Sigma(i), Sigma(j)])?);
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push(TwinWord::new(n, vec![Sigma(i), Zeta, Sigma(i + 1), ZetaInv])?);
    }
    Ok(out)
}

fn cactus_relators(n: usize) -> Result<Vec<CactusWord>, GroupError> {
    let intervals: Vec<Interval> = (1..=n)
        .flat_map(|p| (p + 1..=n).map(move |q| Interval { p, q }))
        .collect();
    let mut out = Vec::new();
    for &x in &intervals {
        out.push(CactusWord::new(n, vec![x, x])?);
    }
    for (a, &x) in intervals.iter().enumerate() {
        for &y in &intervals[a + 1..] {
            if x.is_disjoint(y) {
                out.push(CactusWord::new(n, vec![x, y, x, y])?);
            }
        }
    }
    for &x in &intervals {
        for &y in &intervals {
            if x.strictly_contains(y) {
                out.push(CactusWord::new(n, vec![x, y, x, x.reflect(y)])?);
            }
        }
    }
    Ok(out)
}

fn annular_relators(n: usize) -> Result<Vec<AnnularWord>, GroupError> {
    use AnnularLetter::{Alpha, Eta, EtaInv};
    if n < 2 {
        return Err(GroupError::RankTooSmall { n, min: 2 });
    }
    let neighbours = |i: usize, j: usize| j == i % n + 1 || i == j % n + 1;
    let mut out = Vec::new();
    for i in 1..=n {
        out.push(AnnularWord::new(n, vec![Alpha(i), Alpha(i)])?);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if !neighbours(i, j) {
                out.push(AnnularWord::new(n, vec![Alpha(i), Alpha(j), Alpha(i), Alpha(j)])?);
            }
        }
    }
    for i in 1..=n {
        out.push(AnnularWord::new(n, vec![Alpha(i), Eta, Alpha(i % n + 1), EtaInv])?);
    }
    Ok(out)
}
