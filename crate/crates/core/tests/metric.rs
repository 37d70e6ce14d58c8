use bsymbol_core::bsymbol::{
    bsymbol_distance, bsymbol_weight, min_bsymbol_distance, read_vector, weight_enumerator,
    weight_via_shift_formula,
};
use bsymbol_core::codes::{hamming_distance, hamming_weight, LinearCode};
use bsymbol_core::galois::FiniteField;
use bsymbol_core::rng::SplitMix64;
use bsymbol_core::Error;

fn example_code() -> LinearCode {
    let gf2 = FiniteField::new(2, 1).unwrap();
    LinearCode::from_generator(gf2, &[vec![1, 1, 0, 0], vec![1, 0, 1, 1]]).unwrap()
}

#[test]
fn read_vectors() {
    assert_eq!(
        read_vector(&[1, 1, 0, 0], 2).unwrap(),
        vec![vec![1, 1], vec![1, 0], vec![0, 0], vec![0, 1]]
    );
    assert_eq!(
        read_vector(&[0, 1, 1, 1], 3).unwrap(),
        vec![vec![0, 1, 1], vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 1]]
    );
    let v = [2u64, 0, 1];
    let blocks = read_vector(&v, 1).unwrap();
    assert_eq!(blocks, vec![vec![2], vec![0], vec![1]]);
    assert!(matches!(
        read_vector(&v, 4),
        Err(Error::WindowOutOfRange { b: 4, n: 3 })
    ));
    assert!(matches!(read_vector(&v, 0), Err(Error::WindowOutOfRange { .. })));
}

#[test]
fn weights_and_distances() {
    assert_eq!(bsymbol_weight(&[1, 1, 0, 0], 2).unwrap(), 3);
    assert_eq!(bsymbol_weight(&[1, 0, 1, 1], 2).unwrap(), 4);
    assert_eq!(bsymbol_weight(&[0, 0, 0, 0], 2).unwrap(), 0);
    assert_eq!(bsymbol_distance(&[1, 1, 0, 0], &[1, 0, 1, 1], 2).unwrap(), 4);
    assert_eq!(bsymbol_distance(&[1, 1, 0, 0], &[1, 1, 0, 0], 2).unwrap(), 0);
    assert!(matches!(
        bsymbol_distance(&[1], &[1, 0], 1),
        Err(Error::LengthMismatch { .. })
    ));
}

#[test]
fn b1_is_hamming() {
    let mut rng = SplitMix64::new(31);
    for _ in 0..200 {
        let n = 1 + rng.below(10);
        let u: Vec<u64> = (0..n).map(|_| rng.below(3)).collect();
        let v: Vec<u64> = (0..n).map(|_| rng.below(3)).collect();
        assert_eq!(bsymbol_weight(&u, 1).unwrap(), hamming_weight(&u));
        assert_eq!(
            bsymbol_distance(&u, &v, 1).unwrap(),
            hamming_distance(&u, &v).unwrap()
        );
    }
}

#[test]
fn example_enumerator() {
    let code = example_code();
    let w = weight_enumerator(&code, 2).unwrap();
    let mut expected = vec![0u64; 5];
    expected[0] = 1;
    expected[3] = 1;
    expected[4] = 2;
    assert_eq!(w.counts, expected);
    assert_eq!(w.min_distance(), Some(3));
    assert_eq!(min_bsymbol_distance(&code, 2).unwrap(), 3);
    assert_eq!(w.total(), 4);
    w.check_sanity(4).unwrap();

    // b = 1 reduces to the Hamming distribution.
    let w1 = weight_enumerator(&code, 1).unwrap();
    assert_eq!(w1.counts, vec![1, 0, 1, 2, 0]);
    assert_eq!(
        w1.min_distance().unwrap(),
        code.min_hamming_distance().unwrap()
    );
}

#[test]
fn full_space_distance() {
    let gf2 = FiniteField::new(2, 1).unwrap();
    let identity: Vec<Vec<u64>> = (0..3)
        .map(|i| (0..3).map(|j| u64::from(i == j)).collect())
        .collect();
    let full = LinearCode::from_generator(gf2, &identity).unwrap();
    assert_eq!(min_bsymbol_distance(&full, 2).unwrap(), 2);
}

#[test]
fn shift_formula_worked_example() {
    let gf2 = FiniteField::new(2, 1).unwrap();
    // (0 + 2 + 2 + 2) / 2 = 3 over the four (a_0, a_1) combinations.
    assert_eq!(weight_via_shift_formula(&gf2, &[1, 1, 0, 0], 2).unwrap(), 3);
    assert_eq!(weight_via_shift_formula(&gf2, &[0, 0, 0, 0], 2).unwrap(), 0);
}

#[test]
fn shift_formula_matches_direct_weight() {
    let fields = [
        FiniteField::new(2, 1).unwrap(),
        FiniteField::new(3, 1).unwrap(),
        FiniteField::new(2, 2).unwrap(),
    ];
    let mut rng = SplitMix64::new(37);
    for field in &fields {
        let q = field.order();
        for _ in 0..1000 {
            let b = 1 + rng.below(3) as usize;
            let n = b as u64 + rng.below(12 - b as u64 + 1);
            let v: Vec<u64> = (0..n).map(|_| rng.below(q)).collect();
            assert_eq!(
                weight_via_shift_formula(field, &v, b).unwrap(),
                bsymbol_weight(&v, b).unwrap(),
                "q={q} b={b} v={v:?}"
            );
        }
    }
}

#[test]
fn metric_axioms() {
    let mut rng = SplitMix64::new(41);
    for _ in 0..1000 {
        let b = 1 + rng.below(3) as usize;
        let n = b as u64 + rng.below(8);
        let x: Vec<u64> = (0..n).map(|_| rng.below(3)).collect();
        let y: Vec<u64> = (0..n).map(|_| rng.below(3)).collect();
        let z: Vec<u64> = (0..n).map(|_| rng.below(3)).collect();
        let dxy = bsymbol_distance(&x, &y, b).unwrap();
        assert_eq!(dxy, bsymbol_distance(&y, &x, b).unwrap());
        assert_eq!(dxy == 0, x == y);
        assert!(dxy <= bsymbol_distance(&x, &z, b).unwrap() + bsymbol_distance(&z, &y, b).unwrap());
    }
}

#[test]
fn weight_monotonicity_and_bounds() {
    let mut rng = SplitMix64::new(43);
    for _ in 0..1000 {
        let n = 1 + rng.below(10);
        let v: Vec<u64> = (0..n).map(|_| rng.below(4)).collect();
        let wh = hamming_weight(&v);
        let mut prev = 0;
        for b in 1..=n as usize {
            let wb = bsymbol_weight(&v, b).unwrap();
            assert!(wb >= prev, "wt_b must be nondecreasing in b");
            assert!(wh <= wb && wb <= (n as usize).min(b * wh));
            prev = wb;
        }
    }
}

#[test]
fn full_window_weight() {
    // b = n: every window is a full rotation, so any nonzero vector has
    // weight n.
    assert_eq!(bsymbol_weight(&[0, 0, 1], 3).unwrap(), 3);
    assert_eq!(bsymbol_weight(&[0, 0, 0], 3).unwrap(), 0);
}
