use std::collections::BTreeSet;
use std::sync::Arc;

use bsymbol_core::codes::{
    cyclic_shift, hamming_distance, hamming_weight, simplex_generator, simplex_length,
    LinearCode, TraceCode,
};
use bsymbol_core::galois::{Extension, FiniteField};
use bsymbol_core::rng::SplitMix64;
use bsymbol_core::Error;

fn example_code() -> LinearCode {
    let gf2 = FiniteField::new(2, 1).unwrap();
    LinearCode::from_generator(gf2, &[vec![1, 1, 0, 0], vec![1, 0, 1, 1]]).unwrap()
}

fn word_set(code: &LinearCode) -> BTreeSet<Vec<u64>> {
    code.enumerate().unwrap().collect()
}

#[test]
fn example_code_words() {
    let code = example_code();
    let words = word_set(&code);
    let expected: BTreeSet<Vec<u64>> = [
        vec![0, 0, 0, 0],
        vec![1, 1, 0, 0],
        vec![1, 0, 1, 1],
        vec![0, 1, 1, 1],
    ]
    .into_iter()
    .collect();
    assert_eq!(words, expected);
    assert_eq!(code.min_hamming_distance().unwrap(), 2);
}

#[test]
fn full_space_and_rank_errors() {
    let gf2 = FiniteField::new(2, 1).unwrap();
    let identity: Vec<Vec<u64>> = (0..3)
        .map(|i| (0..3).map(|j| u64::from(i == j)).collect())
        .collect();
    let full = LinearCode::from_generator(gf2.clone(), &identity).unwrap();
    assert_eq!(word_set(&full).len(), 8);
    assert_eq!(full.min_hamming_distance().unwrap(), 1);

    assert!(matches!(
        LinearCode::from_generator(gf2, &[vec![1, 1], vec![1, 1]]),
        Err(Error::RankDeficient { rows: 2, rank: 1 })
    ));
}

#[test]
fn scalar_multiples_over_gf3() {
    let gf3 = FiniteField::new(3, 1).unwrap();
    let code = LinearCode::from_generator(gf3, &[vec![1, 2]]).unwrap();
    let words: Vec<Vec<u64>> = code.enumerate().unwrap().collect();
    assert_eq!(words, vec![vec![0, 0], vec![1, 2], vec![2, 1]]);
}

#[test]
fn enumeration_cap() {
    let gf2 = FiniteField::new(2, 1).unwrap();
    let rows: Vec<Vec<u64>> = (0..3)
        .map(|i| (0..4).map(|j| u64::from(i == j)).collect())
        .collect();
    let code = LinearCode::from_generator(gf2, &rows).unwrap();
    assert!(matches!(
        code.enumerate_with_cap(4),
        Err(Error::CapExceeded { required: 8, .. })
    ));
}

#[test]
fn simplex_columns() {
    let gf2 = FiniteField::new(2, 1).unwrap();
    // Columns are the projective representatives, ordered so the worked
    // example's concatenated listing is reproduced byte-exactly.
    assert_eq!(simplex_generator(&gf2, 2), vec![vec![1, 0, 1], vec![0, 1, 1]]);

    let gen3 = simplex_generator(&gf2, 3);
    let cols: Vec<Vec<u64>> = (0..7).map(|c| gen3.iter().map(|row| row[c]).collect()).collect();
    assert_eq!(
        cols,
        vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ]
    );

    let gf3 = FiniteField::new(3, 1).unwrap();
    let gen = simplex_generator(&gf3, 2);
    let cols: Vec<Vec<u64>> = (0..4).map(|c| gen.iter().map(|row| row[c]).collect()).collect();
    assert_eq!(cols, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
    assert_eq!(simplex_length(3, 2), 4);
}

#[test]
fn simplex_is_constant_weight() {
    for &(p, r, b) in &[(2u64, 1u32, 2u32), (2, 1, 3), (3, 1, 2), (2, 2, 2)] {
        let field = FiniteField::new(p, r).unwrap();
        let q = field.order();
        let code = LinearCode::from_generator(field.clone(), &simplex_generator(&field, b)).unwrap();
        assert_eq!(code.length() as u64, simplex_length(q, b));
        let w = q.pow(b - 1) as usize;
        for word in code.enumerate().unwrap() {
            if word.iter().any(|&x| x != 0) {
                assert_eq!(hamming_weight(&word), w);
            }
        }
        assert_eq!(code.min_hamming_distance().unwrap(), w);
    }
}

#[test]
fn shifts() {
    assert_eq!(cyclic_shift(&[1, 1, 0, 0], 1), vec![1, 0, 0, 1]);
    assert_eq!(cyclic_shift(&[0, 1, 1, 1], 3), vec![1, 0, 1, 1]);
    assert_eq!(cyclic_shift(&[1, 1, 0, 0], 0), vec![1, 1, 0, 0]);
}

#[test]
fn hamming_helpers() {
    assert_eq!(hamming_weight(&[1, 0, 2, 0]), 2);
    assert_eq!(hamming_distance(&[1, 0, 2], &[1, 1, 2]).unwrap(), 1);
    assert!(matches!(
        hamming_distance(&[1], &[1, 0]),
        Err(Error::LengthMismatch { .. })
    ));
}

#[test]
fn trace_code_simplex_equivalent() {
    let gf2 = FiniteField::new(2, 1).unwrap();
    let ext = Extension::new(gf2, 2).unwrap();
    let f = ext.field().clone();
    let g = f.generator();
    let tc = TraceCode::new(ext, vec![1, g, f.mul(g, g)]).unwrap();
    let code = tc.to_linear_code().unwrap();
    assert_eq!((code.length(), code.dimension()), (3, 2));
    assert_eq!(code.min_hamming_distance().unwrap(), 2);
}

#[test]
fn trace_round_trip_preserves_code() {
    let code = example_code();
    let tc = TraceCode::from_linear_code(&code).unwrap();
    assert!(tc.defining().iter().all(|&u| u != 0)); // no zero generator column
    let back = tc.to_linear_code().unwrap();
    assert_eq!(word_set(&code), word_set(&back));

    // Random round trips over GF(3).
    let gf3 = FiniteField::new(3, 1).unwrap();
    let mut rng = SplitMix64::new(23);
    for _ in 0..20 {
        let code = random_code(&gf3, 5, 2, &mut rng);
        let back = TraceCode::from_linear_code(&code)
            .unwrap()
            .to_linear_code()
            .unwrap();
        assert_eq!(word_set(&code), word_set(&back));
    }
}

#[test]
fn zero_defining_sequence_is_rank_error() {
    let gf2 = FiniteField::new(2, 1).unwrap();
    let ext = Extension::new(gf2, 2).unwrap();
    let tc = TraceCode::new(ext, vec![0, 0, 0]).unwrap();
    assert!(matches!(
        tc.to_linear_code(),
        Err(Error::RankDeficient { .. })
    ));
}

#[test]
fn code_is_linear() {
    let gf3 = FiniteField::new(3, 1).unwrap();
    let mut rng = SplitMix64::new(29);
    for _ in 0..10 {
        let code = random_code(&gf3, 6, 2, &mut rng);
        let words = word_set(&code);
        let list: Vec<&Vec<u64>> = words.iter().collect();
        for _ in 0..50 {
            let a = list[rng.below(list.len() as u64) as usize];
            let b = list[rng.below(list.len() as u64) as usize];
            let sum: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| gf3.add(x, y)).collect();
            assert!(words.contains(&sum));
            let c = rng.below(3);
            let scaled: Vec<u64> = a.iter().map(|&x| gf3.mul(c, x)).collect();
            assert!(words.contains(&scaled));
        }
    }
}

fn random_code(field: &Arc<FiniteField>, n: usize, k: usize, rng: &mut SplitMix64) -> LinearCode {
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
