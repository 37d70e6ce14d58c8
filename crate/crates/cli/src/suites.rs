//! Verification suites: each check reproduces one of the toolkit's
//! headline claims by direct enumeration and returns a pass/fail result.
//! The `verify` subcommand and the acceptance test suite both run these.

use std::sync::Arc;

use bsymbol_core::bounds::{
    bsymbol_griesmer_check, exhaustive_best_db, max_db_by_griesmer, CodeParams,
};
use bsymbol_core::bsymbol::{
    bsymbol_distance, bsymbol_weight, min_bsymbol_distance, weight_via_shift_formula,
};
use bsymbol_core::codes::{hamming_weight, LinearCode, TraceCode};
use bsymbol_core::construct::{
    concat_simplex, extend_b2, shi_cyclic, sigma_block_representation, thm5_code, thm6_code,
    SigmaPermutation,
};
use bsymbol_core::galois::FiniteField;
use bsymbol_core::rng::SplitMix64;
use bsymbol_core::Error;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn result(id: usize, name: &'static str, outcome: Result<String, String>) -> CriterionResult {
    match outcome {
        Ok(detail) => CriterionResult {
            id,
            name,
            passed: true,
            detail,
        },
        Err(detail) => CriterionResult {
            id,
            name,
            passed: false,
            detail,
        },
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

/// The worked (4,2,3)^2_2 example: code, concatenation, and permutation
/// images, byte-exact.
const EXAMPLE_ROWS: [[u64; 4]; 2] = [[1, 1, 0, 0], [1, 0, 1, 1]];

const EXAMPLE_WORDS: [[u64; 4]; 4] = [
    [1, 1, 0, 0],
    [1, 0, 1, 1],
    [0, 1, 1, 1],
    [0, 0, 0, 0],
];

const EXAMPLE_CONCAT: [[u64; 12]; 4] = [
    [1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1],
    [1, 0, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0],
    [0, 1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

// Block order per image is (c, c^1, c + c^1), the unique convention under
// which the permuted concatenation equals the shift-block representation
// for every codeword (the published listing's third vector swaps its last
// two blocks, breaking that identity while the other three satisfy it).
const EXAMPLE_SIGMA: [[u64; 12]; 4] = [
    [1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1],
    [1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0],
    [0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

pub fn paper_example_code() -> Result<LinearCode, Error> {
    let gf2 = FiniteField::new(2, 1)?;
    LinearCode::from_generator(gf2, &EXAMPLE_ROWS.map(|r| r.to_vec()))
}

pub fn criterion_1_example() -> CriterionResult {
    let run = || -> Result<String, String> {
        let code = paper_example_code().map_err(err_str)?;
        let d2 = min_bsymbol_distance(&code, 2).map_err(err_str)?;
        if d2 != 3 {
            return Err(format!("d_2 = {d2}, expected 3"));
        }
        let concat = concat_simplex(&code, 2).map_err(err_str)?;
        let sigma = SigmaPermutation::new(4, 2, 2);
        for m in 0..4u64 {
            let word = code.codeword_by_index(m);
            let image = concat.codeword_by_index(m);
            let position = EXAMPLE_WORDS
                .iter()
                .position(|w| w.as_slice() == word.as_slice())
                .ok_or_else(|| format!("unexpected codeword {word:?}"))?;
            if image != EXAMPLE_CONCAT[position] {
                return Err(format!(
                    "concat image of {word:?} is {image:?}, expected {:?}",
                    EXAMPLE_CONCAT[position]
                ));
            }
            let permuted = sigma.apply(&image).map_err(err_str)?;
            if permuted != EXAMPLE_SIGMA[position] {
                return Err(format!(
                    "sigma image of {word:?} is {permuted:?}, expected {:?}",
                    EXAMPLE_SIGMA[position]
                ));
            }
            let blocks = sigma_block_representation(code.field(), &word, 2).map_err(err_str)?;
            if blocks != permuted {
                return Err("shift-block representation disagrees with sigma image".to_string());
            }
        }
        Ok("d_2 = 3; all 4 concatenated and permuted codewords byte-exact".to_string())
    };
    result(1, "worked example, byte-exact", run())
}

pub fn criterion_2_shift_formula() -> CriterionResult {
    let run = || -> Result<String, String> {
        let mut rng = SplitMix64::new(0xe907);
        let mut checked = 0u64;
        for &(p, r) in &[(2u64, 1u32), (3, 1), (2, 2)] {
            let field = FiniteField::new(p, r).map_err(err_str)?;
            let q = field.order();
            for _ in 0..1000 {
                let b = 1 + (rng.below(3)) as usize;
                let n = b as u64 + rng.below(12 - b as u64 + 1);
                let v: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
                let direct = bsymbol_weight(&v, b).map_err(err_str)?;
                let via_formula = weight_via_shift_formula(&field, &v, b).map_err(err_str)?;
                if direct != via_formula {
                    return Err(format!(
                        "q={q} b={b} v={v:?}: wt_b={direct} but formula gives {via_formula}"
                    ));
                }
                checked += 1;
            }
        }
        Ok(format!("{checked} random vectors, zero mismatches"))
    };
    result(2, "shift-formula weight oracle", run())
}

/// Deterministic random full-rank code over GF(q).
pub fn random_code(field: &Arc<FiniteField>, n: usize, k: usize, rng: &mut SplitMix64) -> LinearCode {
    let q = field.order();
    loop {
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|_| (0..n).map(|_| rng.below(q)).collect())
            .collect();
        if let Ok(code) = LinearCode::from_generator(field.clone(), &rows) {
            return code;
        }
    }
}

fn random_corpus() -> Result<Vec<(LinearCode, usize)>, String> {
    let gf2 = FiniteField::new(2, 1).map_err(err_str)?;
    let gf3 = FiniteField::new(3, 1).map_err(err_str)?;
    let mut rng = SplitMix64::new(0xc0_de5);
    let mut corpus = Vec::new();
    while corpus.len() < 50 {
        let field = if rng.below(2) == 0 { &gf2 } else { &gf3 };
        let b = 2 + rng.below(2) as usize;
        let n = b as u64 + rng.below(8 - b as u64 + 1);
        let k = 1 + rng.below(3.min(n)) as usize;
        let code = random_code(field, n as usize, k, &mut rng);
        corpus.push((code, b));
    }
    Ok(corpus)
}

pub fn criterion_3_sigma_equivalence() -> CriterionResult {
    let run = || -> Result<String, String> {
        let corpus = random_corpus()?;
        let mut words = 0u64;
        for (code, b) in &corpus {
            let concat = concat_simplex(code, *b).map_err(err_str)?;
            let sigma = SigmaPermutation::new(
                code.length() as u64,
                code.field().order(),
                *b as u64,
            );
            let size = code.size().map_err(err_str)?;
            for m in 0..size {
                let word = code.codeword_by_index(m);
                let image = concat.codeword_by_index(m);
                let permuted = sigma.apply(&image).map_err(err_str)?;
                let blocks =
                    sigma_block_representation(code.field(), &word, *b).map_err(err_str)?;
                if permuted != blocks {
                    return Err(format!(
                        "q={} n={} k={} b={b}: sigma image differs from shift blocks for {word:?}",
                        code.field().order(),
                        code.length(),
                        code.dimension()
                    ));
                }
                words += 1;
            }
        }
        Ok(format!(
            "{} codes, {words} codewords, permuted image = shift blocks throughout",
            corpus.len()
        ))
    };
    result(3, "permutation / shift-block equivalence", run())
}

pub fn criterion_4_weight_law() -> CriterionResult {
    let run = || -> Result<String, String> {
        let corpus = random_corpus()?;
        let mut words = 0u64;
        for (code, b) in &corpus {
            let q = code.field().order();
            let concat = concat_simplex(code, *b).map_err(err_str)?;
            let scale = q.pow(*b as u32 - 1) as usize;
            let size = code.size().map_err(err_str)?;
            for m in 0..size {
                let word = code.codeword_by_index(m);
                let image = concat.codeword_by_index(m);
                let lhs = hamming_weight(&image);
                let rhs = scale * bsymbol_weight(&word, *b).map_err(err_str)?;
                if lhs != rhs {
                    return Err(format!(
                        "wt_H(image) = {lhs} but q^(b-1) wt_b = {rhs} for {word:?}"
                    ));
                }
                words += 1;
            }
        }
        Ok(format!("{words} codewords satisfy the concatenation weight law"))
    };
    result(4, "concatenation weight law", run())
}

pub fn criterion_5_bound_soundness() -> CriterionResult {
    let run = || -> Result<String, String> {
        let mut codes: Vec<(LinearCode, usize)> = random_corpus()?;
        let gf2 = FiniteField::new(2, 1).map_err(err_str)?;
        let gf3 = FiniteField::new(3, 1).map_err(err_str)?;
        let gf4 = FiniteField::new(2, 2).map_err(err_str)?;
        let mut rng = SplitMix64::new(0xb0_04d);
        for i in 0..500 {
            let field = match i % 3 {
                0 => &gf2,
                1 => &gf3,
                _ => &gf4,
            };
            let n = 2 + rng.below(7);
            let k = 1 + rng.below(3.min(n)) as usize;
            let b = 1 + rng.below(n.min(3)) as usize;
            let code = random_code(field, n as usize, k, &mut rng);
            codes.push((code, b));
        }
        for (code, b) in &codes {
            let d = min_bsymbol_distance(code, *b).map_err(err_str)?;
            let params = CodeParams::new(
                code.length() as u64,
                code.dimension() as u64,
                d as u64,
                *b as u64,
                code.field().order(),
            )
            .map_err(err_str)?;
            let report = bsymbol_griesmer_check(&params).map_err(err_str)?;
            if !report.holds {
                return Err(format!(
                    "measured code ({},{},{d})^{b}_{} violates the bound: lhs {} < rhs {}",
                    code.length(),
                    code.dimension(),
                    code.field().order(),
                    report.lhs,
                    report.rhs
                ));
            }
        }
        Ok(format!("bound holds on all {} measured codes", codes.len()))
    };
    result(5, "bound soundness on measured codes", run())
}

pub fn criterion_6_reference_cyclic() -> CriterionResult {
    let run = || -> Result<String, String> {
        let cases: [(u64, u32, u64, u64, u64, (u64, u64, u64), u64); 3] = [
            (2, 1, 3, 2, 1, (7, 3, 6), 21),
            (2, 1, 4, 2, 1, (15, 4, 12), 45),
            (3, 1, 3, 2, 2, (13, 3, 12), 52),
        ];
        for (p, r, k, b, delta, expect, bound) in cases {
            let base = FiniteField::new(p, r).map_err(err_str)?;
            let built = shi_cyclic(base, k, b, delta).map_err(err_str)?;
            let got = (built.params.n, built.params.k, built.params.d_b);
            if got != expect {
                return Err(format!("shi({p}^{r},{k},{b},{delta}) gave {got:?}, expected {expect:?}"));
            }
            let report = bsymbol_griesmer_check(&built.params).map_err(err_str)?;
            if !(report.optimal && report.lhs == bound && report.rhs == bound) {
                return Err(format!(
                    "expected lhs = rhs = {bound}, got lhs {} rhs {}",
                    report.lhs, report.rhs
                ));
            }
        }
        Ok("all three reference cyclic codes meet the bound with equality".to_string())
    };
    result(6, "reference cyclic codes attain equality", run())
}

const FAMILY_CASES: [(u64, u64, u64); 5] = [(2, 2, 2), (2, 3, 2), (2, 3, 3), (3, 2, 2), (2, 4, 2)];

pub fn criterion_7_thm5_family() -> CriterionResult {
    let run = || -> Result<String, String> {
        for (q, k, b) in FAMILY_CASES {
            let base = FiniteField::new(q, 1).map_err(err_str)?;
            // thm5_code verifies parameters, the three-case weight
            // distribution, and the distance-optimality certificate.
            let built = thm5_code(base, k, b).map_err(err_str)?;
            let qk = q.pow(k as u32);
            let expect = (qk - 1, k + 1, qk - q.pow((k - b) as u32) - 1);
            let got = (built.params.n, built.params.k, built.params.d_b);
            if got != expect {
                return Err(format!("(q,k,b)=({q},{k},{b}): got {got:?}, expected {expect:?}"));
            }
        }
        Ok("5 instances: parameters, weight distribution, and certificates all exact".to_string())
    };
    result(7, "trace-plus-constant family (length q^k - 1)", run())
}

pub fn criterion_8_thm6_family() -> CriterionResult {
    let run = || -> Result<String, String> {
        for (q, k, b) in FAMILY_CASES {
            let base = FiniteField::new(q, 1).map_err(err_str)?;
            let built = thm6_code(base, k, b).map_err(err_str)?;
            let qk = q.pow(k as u32);
            let expect = (qk, k + 1, qk - q.pow((k - b) as u32));
            let got = (built.params.n, built.params.k, built.params.d_b);
            if got != expect {
                return Err(format!("(q,k,b)=({q},{k},{b}): got {got:?}, expected {expect:?}"));
            }
        }
        Ok("5 instances: parameters and certificates all exact".to_string())
    };
    result(8, "extended family (length q^k)", run())
}

pub fn criterion_9_extension_gap() -> CriterionResult {
    let run = || -> Result<String, String> {
        let seed_code = paper_example_code().map_err(err_str)?;
        let seed = TraceCode::from_linear_code(&seed_code).map_err(err_str)?;
        let seed_params = CodeParams::new(4, 2, 3, 2, 2).map_err(err_str)?;
        let seed_gap = bsymbol_griesmer_check(&seed_params)
            .map_err(err_str)?
            .gap
            .ok_or("seed violates the bound".to_string())?;
        for s in 1..=5u64 {
            let built = extend_b2(&seed, s).map_err(err_str)?;
            let expect = (3 * s + 4, 2, 3 * s + 3);
            let got = (built.params.n, built.params.k, built.params.d_b);
            if got != expect {
                return Err(format!("s={s}: got {got:?}, expected {expect:?}"));
            }
            let gap = bsymbol_griesmer_check(&built.params)
                .map_err(err_str)?
                .gap
                .ok_or("extended code violates the bound".to_string())?;
            if gap != seed_gap || gap != 1 {
                return Err(format!("s={s}: gap {gap}, expected seed gap {seed_gap} = 1"));
            }
        }
        Ok("s = 1..5: parameters (3s+4, 2, 3s+3) with gap 1 preserved".to_string())
    };
    result(9, "length extension preserves the gap", run())
}

pub fn criterion_10_exhaustive_oracle() -> CriterionResult {
    let run = || -> Result<String, String> {
        let spot = [((4, 2), 4u64), ((3, 3), 2)];
        for ((n, k), expect) in spot {
            let best = exhaustive_best_db(n, k, 2, 2).map_err(err_str)?;
            let bound = max_db_by_griesmer(n, k, 2, 2).map_err(err_str)?;
            if best != expect || bound != expect {
                return Err(format!(
                    "(n,k)=({n},{k}): exhaustive {best}, bound max {bound}, expected {expect}"
                ));
            }
        }
        for n in 2..=6u64 {
            for k in 1..=2.min(n) {
                let best = exhaustive_best_db(n, k, 2, 2).map_err(err_str)?;
                let bound = max_db_by_griesmer(n, k, 2, 2).map_err(err_str)?;
                if best > bound {
                    return Err(format!(
                        "(n,k)=({n},{k}): exhaustive best {best} exceeds bound max {bound}"
                    ));
                }
            }
        }
        Ok("exhaustive sweep agrees with the bound on every in-cap instance".to_string())
    };
    result(10, "exhaustive search oracle", run())
}

pub fn criterion_11_property_suites() -> CriterionResult {
    let run = || -> Result<String, String> {
        let q = 3;
        let mut rng = SplitMix64::new(0x11_5eed);

        // Additivity of wt_b over concatenation when the first b-1 symbols
        // match.
        for _ in 0..1000 {
            let b = 2 + rng.below(2) as usize;
            let n = b as u64 + rng.below(6);
            let u: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            let mut v: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            v[..b - 1].copy_from_slice(&u[..b - 1]);
            let mut uv = u.clone();
            uv.extend_from_slice(&v);
            let whole = bsymbol_weight(&uv, b).map_err(err_str)?;
            let parts = bsymbol_weight(&u, b).map_err(err_str)?
                + bsymbol_weight(&v, b).map_err(err_str)?;
            if whole != parts {
                return Err(format!("additivity failed: u={u:?} v={v:?} b={b}"));
            }
        }
        // Negative control: without the matching prefix the identity must
        // break at least once in 100 trials.
        let mut violated = false;
        for _ in 0..100 {
            let b = 2;
            let n = 4;
            let u: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            let mut v: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            v[0] = (u[0] + 1) % q;
            let mut uv = u.clone();
            uv.extend_from_slice(&v);
            let whole = bsymbol_weight(&uv, b).map_err(err_str)?;
            let parts = bsymbol_weight(&u, b).map_err(err_str)?
                + bsymbol_weight(&v, b).map_err(err_str)?;
            if whole != parts {
                violated = true;
                break;
            }
        }
        if !violated {
            return Err("negative control never violated additivity".to_string());
        }

        // Metric axioms on random triples.
        for _ in 0..1000 {
            let b = 1 + rng.below(3) as usize;
            let n = b as u64 + rng.below(8);
            let x: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            let y: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            let z: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            let dxy = bsymbol_distance(&x, &y, b).map_err(err_str)?;
            let dyx = bsymbol_distance(&y, &x, b).map_err(err_str)?;
            let dxz = bsymbol_distance(&x, &z, b).map_err(err_str)?;
            let dzy = bsymbol_distance(&z, &y, b).map_err(err_str)?;
            if dxy != dyx {
                return Err("symmetry failed".to_string());
            }
            if (dxy == 0) != (x == y) {
                return Err("identity of indiscernibles failed".to_string());
            }
            if dxy > dxz + dzy {
                return Err("triangle inequality failed".to_string());
            }
        }

        // Monotonicity in b and the Hamming sandwich.
        for _ in 0..1000 {
            let n = 2 + rng.below(9);
            let v: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            let wh = hamming_weight(&v);
            let mut prev = wh;
            for b in 1..=n as usize {
                let wb = bsymbol_weight(&v, b).map_err(err_str)?;
                if b > 1 && wb < prev {
                    return Err(format!("monotonicity failed at b={b} for {v:?}"));
                }
                if wb < wh || wb > (n as usize).min(b * wh) {
                    return Err(format!("weight sandwich failed at b={b} for {v:?}"));
                }
                prev = wb;
            }
        }
        Ok("additivity, metric axioms, monotonicity, and sandwich all hold".to_string())
    };
    result(11, "weight and distance property suites", run())
}

pub fn all_criteria() -> Vec<CriterionResult> {
    vec![
        criterion_1_example(),
        criterion_2_shift_formula(),
        criterion_3_sigma_equivalence(),
        criterion_4_weight_law(),
        criterion_5_bound_soundness(),
        criterion_6_reference_cyclic(),
        criterion_7_thm5_family(),
        criterion_8_thm6_family(),
        criterion_9_extension_gap(),
        criterion_10_exhaustive_oracle(),
        criterion_11_property_suites(),
    ]
}

/// Named suites exposed by the `verify` subcommand.
pub fn suite(name: &str) -> Option<Vec<CriterionResult>> {
    match name {
        "example" => Some(vec![criterion_1_example()]),
        "eq7" => Some(vec![criterion_2_shift_formula()]),
        "theorem3" => Some(vec![criterion_3_sigma_equivalence(), criterion_4_weight_law()]),
        "families" => Some(vec![
            criterion_6_reference_cyclic(),
            criterion_7_thm5_family(),
            criterion_8_thm6_family(),
            criterion_9_extension_gap(),
        ]),
        "bounds-sanity" => Some(vec![
            criterion_5_bound_soundness(),
            criterion_10_exhaustive_oracle(),
            criterion_11_property_suites(),
        ]),
        _ => None,
    }
}

pub const SUITE_NAMES: &[&str] = &["example", "eq7", "theorem3", "families", "bounds-sanity"];
