//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on failure.

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roundtwin::groups::{verify_presentation, Presentation, TwinLetter};
use roundtwin::{
    betti_agree, boundary_matrix, cactus_equal, cactus_is_trivial, collapse, euler_consistency, free_pairs, mu,
    twin_is_trivial, vertex_link, CactusSolver, CactusWord, CubicalComplex, HomologyReport, Interval, SpaceSpec,
    Strategy, TwinWord,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn round(n: usize) -> SpaceSpec {
    SpaceSpec::round(n).unwrap()
}

fn line(n: usize) -> SpaceSpec {
    SpaceSpec::line(n).unwrap()
}

fn ensure(ok: bool, message: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message.into())
    }
}

fn cell_counts() -> Outcome {
    let expected: [(usize, &[usize]); 5] = [
        (2, &[1, 1]),
        (3, &[2, 3]),
        (4, &[6, 12, 3]),
        (5, &[24, 60, 30]),
        (6, &[120, 360, 270, 30]),
    ];
    for (n, counts) in expected {
        let got = CubicalComplex::build(round(n)).counts();
        ensure(got == counts, format!("Q{n}: {got:?}"))?;
    }
    Ok("Q2..Q6 match".into())
}

fn incidence_at_six() -> Outcome {
    let c = CubicalComplex::build(round(6));
    for v in c.cells(0) {
        let top = c.cofaces(v, 3).iter().filter(|x| x.dim() == 3).count();
        ensure(top == 2, format!("vertex {v} has {top} 3-cofaces"))?;
    }
    for (i, e) in c.cells(1).iter().enumerate() {
        let k = c.coface_slots(1, i).len();
        ensure(k == 3, format!("edge {e} has {k} 2-cofaces"))?;
    }
    let mut histogram = [0usize; 3];
    for i in 0..c.cells(2).len() {
        let k = c.coface_slots(2, i).len();
        ensure(k <= 1, format!("square with {k} 3-cofaces"))?;
        histogram[k] += 1;
    }
    ensure(histogram == [90, 180, 0], format!("2-cell histogram {histogram:?}"))?;
    Ok("vertices 2, edges 3, squares 180 x1 + 90 x0".into())
}

fn boundary_squares() -> Outcome {
    let mut checked = 0;
    for n in 2..=6 {
        for space in [round(n), line(n)] {
            let c = CubicalComplex::build(space);
            let top = c.dim().unwrap_or(0);
            for k in 1..top {
                let product = boundary_matrix(&c, k).mul(&boundary_matrix(&c, k + 1)).map_err(|e| e.to_string())?;
                ensure(product.is_zero(), format!("{space}: d{k} d{} != 0", k + 1))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} products vanish"))
}

const HOMOLOGY_TARGETS: [(bool, usize, &[usize]); 8] = [
    (true, 3, &[1, 2]),
    (true, 4, &[1, 4]),
    (true, 5, &[1, 8, 1]),
    (true, 6, &[1, 15, 14, 0]),
    (false, 3, &[1, 1]),
    (false, 4, &[1, 7]),
    (false, 5, &[1, 31]),
    (false, 6, &[1, 111, 20]),
];

fn homology_values() -> Outcome {
    for (is_round, n, betti) in HOMOLOGY_TARGETS {
        let space = if is_round { round(n) } else { line(n) };
        let report = HomologyReport::compute(&CubicalComplex::build(space)).map_err(|e| e.to_string())?;
        ensure(betti_agree(&report.betti, betti), format!("{space}: {:?}", report.betti))?;
        ensure(report.is_torsion_free(), format!("{space}: torsion {:?}", report.torsion))?;
        ensure(report.betti_euler() == report.euler, format!("{space}: Euler characteristic"))?;
    }
    Ok("Q3..Q6, M3..M6 exact, torsion-free".into())
}

fn flag_links() -> Outcome {
    let mut vertices = 0;
    for n in 1..=6 {
        for space in [round(n), line(n)] {
            for v in roundtwin::enumerate_cells(space, 0) {
                let link = vertex_link(&v).map_err(|e| e.to_string())?;
                ensure(link.is_flag(), format!("{space}: link of {v} is not flag"))?;
                vertices += 1;
            }
        }
    }
    Ok(format!("{vertices} vertex links are flag"))
}

fn collapse_invariance() -> Outcome {
    for (n, betti) in [(4, &[1, 4][..]), (6, &[1, 15, 14, 0][..])] {
        let c = CubicalComplex::build(round(n));
        let result = collapse(&c, Strategy::GreedyDescending);
        ensure(!result.log.is_empty(), format!("Q{n} did not collapse"))?;
        let report = HomologyReport::compute(&result.complex).map_err(|e| e.to_string())?;
        ensure(
            betti_agree(&report.betti, betti) && report.is_torsion_free(),
            format!("collapsed Q{n}: {:?}", report.betti),
        )?;
    }
    let q5 = CubicalComplex::build(round(5));
    ensure(free_pairs(&q5).is_empty(), "Q5 has free pairs")?;
    ensure(collapse(&q5, Strategy::GreedyDescending).log.is_empty(), "Q5 collapsed")?;
    Ok("Q4, Q6 homology unchanged; Q5 has no collapse".into())
}

fn euler_identity() -> Outcome {
    for n in 3..=7 {
        let c = euler_consistency(n);
        ensure(c.holds(), format!("n = {n}: {} vs {}", c.round, c.rhs()))?;
    }
    let seven = euler_consistency(7);
    ensure(seven.round == 90, format!("chi(Q7) = {}", seven.round))?;
    Ok("n = 3..7, chi(Q7) = 90".into())
}

fn presentation_audit() -> Outcome {
    let solver = CactusSolver::default();
    let mut relators = 0;
    for n in 1..=6 {
        let mut presentations = vec![Presentation::Twin, Presentation::Cactus];
        if n >= 2 {
            presentations.push(Presentation::Annular);
        }
        for p in presentations {
            let report = verify_presentation(p, n, &solver).map_err(|e| e.to_string())?;
            if let Some(bad) = report.failures().first() {
                return Err(format!("{p:?} n = {n}: {}", bad.relator));
            }
            if p == Presentation::Twin {
                ensure(report.checks.iter().all(|c| c.solver_ok == Some(true)), "twin relator not decided")?;
            }
            relators += report.checks.len();
        }
    }
    Ok(format!("{relators} relators"))
}

fn random_twin_word(rng: &mut ChaCha8Rng, n: usize) -> TwinWord {
    let len = rng.gen_range(0..=12);
    let letters = (0..len)
        .map(|_| match rng.gen_range(0..n + 1) {
            k if k + 1 < n => TwinLetter::Sigma(k + 1),
            k if k + 1 == n => TwinLetter::Zeta,
            _ => TwinLetter::ZetaInv,
        })
        .collect();
    TwinWord::new(n, letters).unwrap()
}

fn admissible_words(n: usize, max_len: usize) -> Vec<CactusWord> {
    let mut alphabet: Vec<Interval> = (1..n).map(|i| Interval { p: i, q: i + 1 }).collect();
    alphabet.extend([Interval { p: 1, q: n }, Interval { p: 2, q: n }, Interval { p: 1, q: n - 1 }]);
    let mut level = vec![Vec::new()];
    let mut all = level.clone();
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        all.extend(level.iter().cloned());
    }
    all.into_iter().map(|w| CactusWord::new(n, w).unwrap()).collect()
}

fn word_problems() -> Outcome {
    let cactus = |n, t| CactusWord::parse(n, t).unwrap();
    let twin = |n, t| TwinWord::parse(n, t).unwrap();
    let e = |r: Result<bool, roundtwin::GroupError>| r.map_err(|e| e.to_string());
    let spot = [
        ("s13 s12 s13 s23 in J3", e(cactus_is_trivial(&cactus(3, "r(1,3) r(1,2) r(1,3) r(2,3)")))?, true),
        ("s12 s34 s12 s34 in J4", e(cactus_is_trivial(&cactus(4, "r(1,2) r(3,4) r(1,2) r(3,4)")))?, true),
        ("s12 in J4", e(cactus_is_trivial(&cactus(4, "r(1,2)")))?, false),
        ("s13 s12 = s23 s13", e(cactus_equal(&cactus(3, "r(1,3) r(1,2)"), &cactus(3, "r(2,3) r(1,3)")))?, true),
        ("w = w", e(cactus_equal(&cactus(5, "r(1,4) r(2,5) r(3,4)"), &cactus(5, "r(1,4) r(2,5) r(3,4)")))?, true),
        ("s12 = s23", e(cactus_equal(&cactus(3, "r(1,2)"), &cactus(3, "r(2,3)")))?, false),
        ("Z s1 z s2 in twin 4", e(twin_is_trivial(&twin(4, "Z s1 z s2")))?, true),
        ("s1 s3 s1 s3 in twin 5", e(twin_is_trivial(&twin(5, "s1 s3 s1 s3")))?, true),
        ("(s1 s2)^3 in twin 3", e(twin_is_trivial(&twin(3, "s1 s2 s1 s2 s1 s2")))?, false),
    ];
    for (name, got, want) in spot {
        ensure(got == want, format!("{name}: got {got}"))?;
    }
    let m = mu(&cactus(5, "r(1,4)")).map_err(|e| e.to_string())?;
    ensure(m.expand() == cactus(5, "r(1,5) r(2,5) r(1,5)"), format!("mu(s14) = {m}"))?;
    ensure(e(cactus_equal(&m.expand(), &cactus(5, "r(1,4)")))?, "mu(s14) differs from s14")?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 4..=6 {
        for _ in 0..1000 {
            let w = random_twin_word(&mut rng, n);
            let k = w.kappa().map_err(|e| e.to_string())?;
            ensure(k.permutation() == w.permutation(), format!("kappa changes the permutation of {w}"))?;
        }
    }

    let words = admissible_words(5, 5);
    let solver = CactusSolver::default();
    for u in &words {
        let m = mu(u).map_err(|e| e.to_string())?;
        ensure(e(solver.equal(&m.expand(), u))?, format!("mu({u}) = {m} is not equal to it"))?;
    }
    Ok(format!("{} spot checks, 3000 kappa samples, {} mu words", spot.len() + 2, words.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("cell counts", cell_counts),
        ("incidence at n = 6", incidence_at_six),
        ("boundary squares to zero", boundary_squares),
        ("homology", homology_values),
        ("flag vertex links", flag_links),
        ("collapse invariance", collapse_invariance),
        ("Euler identity", euler_identity),
        ("presentation audit", presentation_audit),
        ("word problems", word_problems),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
