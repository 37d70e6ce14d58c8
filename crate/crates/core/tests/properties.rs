use proptest::collection::vec;
use proptest::prelude::*;

use bsymbol_core::bsymbol::{bsymbol_distance, bsymbol_weight, weight_via_shift_formula};
use bsymbol_core::codes::{cyclic_shift, hamming_weight};
use bsymbol_core::galois::FiniteField;

fn vector(q: u64, max_n: usize) -> impl Strategy<Value = Vec<u64>> {
    vec(0..q, 1..=max_n)
}

proptest! {
    #[test]
    fn shift_formula_agrees_gf2(v in vector(2, 10), b in 1usize..=3) {
        prop_assume!(b <= v.len());
        let field = FiniteField::new(2, 1).unwrap();
        prop_assert_eq!(
            weight_via_shift_formula(&field, &v, b).unwrap(),
            bsymbol_weight(&v, b).unwrap()
        );
    }

    #[test]
    fn shift_formula_agrees_gf4(v in vector(4, 8), b in 1usize..=2) {
        prop_assume!(b <= v.len());
        let field = FiniteField::new(2, 2).unwrap();
        prop_assert_eq!(
            weight_via_shift_formula(&field, &v, b).unwrap(),
            bsymbol_weight(&v, b).unwrap()
        );
    }

    #[test]
    fn weight_is_shift_invariant(v in vector(3, 10), b in 1usize..=3, j in 0usize..10) {
        prop_assume!(b <= v.len());
        let j = j % v.len();
        prop_assert_eq!(
            bsymbol_weight(&cyclic_shift(&v, j), b).unwrap(),
            bsymbol_weight(&v, b).unwrap()
        );
    }

    #[test]
    fn translation_invariance(
        u in vector(3, 8),
        w in vector(3, 8),
        t in vector(3, 8),
        b in 1usize..=2
    ) {
        let n = u.len().min(w.len()).min(t.len());
        prop_assume!(b <= n);
        let field = FiniteField::new(3, 1).unwrap();
        let add = |x: &[u64], y: &[u64]| -> Vec<u64> {
            x.iter().zip(y).map(|(&a, &c)| field.add(a, c)).collect()
        };
        let (u, w, t) = (&u[..n], &w[..n], &t[..n]);
        prop_assert_eq!(
            bsymbol_distance(u, w, b).unwrap(),
            bsymbol_distance(&add(u, t), &add(w, t), b).unwrap()
        );
    }

    #[test]
    fn weight_sandwich(v in vector(4, 12), b in 1usize..=4) {
        prop_assume!(b <= v.len());
        let wb = bsymbol_weight(&v, b).unwrap();
        let wh = hamming_weight(&v);
        prop_assert!(wh <= wb);
        prop_assert!(wb <= v.len().min(b * wh));
    }
}
