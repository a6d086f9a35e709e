use graphcert::linalg::{bareiss_det, submatrix};
use graphcert::{Count, Rational};
use proptest::prelude::*;

/// Leibniz expansion over all permutations.
fn leibniz(a: &[Vec<i64>]) -> i64 {
    fn go(a: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i64) -> i64 {
        if row == a.len() {
            return sign;
        }
        let mut total = 0;
        for c in 0..a.len() {
            if !used[c] && a[row][c] != 0 {
                // each earlier-used column to the right of c is one inversion
                let inv = (c + 1..a.len()).filter(|&x| used[x]).count() as i64;
                used[c] = true;
                total += a[row][c] * go(a, row + 1, used, if inv % 2 == 0 { sign } else { -sign });
                used[c] = false;
            }
        }
        total
    }
    go(a, 0, &mut vec![false; a.len()], 1)
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (0..=max).prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-9i64..10, n), n))
}

#[test]
fn vandermonde_in_big_integers() {
    let xs: Vec<i64> = (1..=12).collect();
    let a: Vec<Vec<Count>> = xs.iter().map(|&x| (0..12).map(|k| Count::from(x).pow(k)).collect()).collect();
    let mut want = Count::from(1);
    for i in 0..12 {
        for j in i + 1..12 {
            want *= Count::from(xs[j] - xs[i]);
        }
    }
    assert_eq!(bareiss_det(a), want);
}

#[test]
fn rational_entries() {
    let a = vec![
        vec![Rational::new(1, 2), Rational::new(1, 3)],
        vec![Rational::new(1, 4), Rational::new(1, 5)],
    ];
    assert_eq!(bareiss_det(a), Rational::new(1, 10) - Rational::new(1, 12));
}

proptest! {
    #[test]
    fn matches_leibniz(a in square(6)) {
        prop_assert_eq!(bareiss_det(a.clone()), leibniz(&a));
        let big: Vec<Vec<Count>> = a.iter().map(|r| r.iter().map(|&x| Count::from(x)).collect()).collect();
        prop_assert_eq!(bareiss_det(big), Count::from(leibniz(&a)));
    }

    #[test]
    fn minors_of_submatrices(a in square(6), mask in any::<u8>()) {
        let idx: Vec<usize> = (0..a.len()).filter(|&i| mask >> i & 1 == 1).collect();
        let s = submatrix(&a, &idx, &idx);
        prop_assert_eq!(bareiss_det(s.clone()), leibniz(&s));
    }
}
