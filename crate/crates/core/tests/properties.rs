use gridpal::conjugacy::{conjugacy_class, pal_conjugate_bound, pal_conjugates, rotate};
use gridpal::palindromes::{
    check_row_col_symmetry, count_palindromic_factors, find_forbidden_pattern, hv_decompose,
    hv_recompose, is_hv_palindrome, is_non_hv_palindromic_factor_present, is_palindrome_2d,
};
use gridpal::search::fast_count;
use gridpal::word2d::nth_symbol;
use gridpal::{FactorKind, Word2D};
use proptest::prelude::*;

fn word(max: usize, q: usize) -> impl Strategy<Value = Word2D> {
    (1..=max, 1..=max).prop_flat_map(move |(m, n)| {
        prop::collection::vec(0..q, m * n)
            .prop_map(move |cells| Word2D::from_fn(m, n, |i, j| nth_symbol(cells[i * n + j])))
    })
}

/// Pair of words sharing `rows` (for `⊚`).
fn same_rows(max: usize) -> impl Strategy<Value = (Word2D, Word2D)> {
    (1..=max, 1..=max, 1..=max).prop_flat_map(|(m, n1, n2)| {
        (
            prop::collection::vec(0..3usize, m * n1),
            prop::collection::vec(0..3usize, m * n2),
        )
            .prop_map(move |(a, b)| {
                (
                    Word2D::from_fn(m, n1, |i, j| nth_symbol(a[i * n1 + j])),
                    Word2D::from_fn(m, n2, |i, j| nth_symbol(b[i * n2 + j])),
                )
            })
    })
}

/// Folds a word onto its top-left quadrant, giving an HV-palindrome.
fn hv_closure(w: &Word2D) -> Word2D {
    let (m, n) = w.shape();
    Word2D::from_fn(m, n, |i, j| w.get(i.min(m - 1 - i), j.min(n - 1 - j)))
}

/// Makes a word a 2D palindrome by copying its first half onto the rotated second half.
fn pal_closure(w: &Word2D) -> Word2D {
    let (m, n) = w.shape();
    Word2D::from_fn(m, n, |i, j| {
        if i * n + j <= (m - 1 - i) * n + (n - 1 - j) {
            w.get(i, j)
        } else {
            w.get(m - 1 - i, n - 1 - j)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reverse_and_transpose_are_involutions(x in word(6, 3)) {
        prop_assert_eq!(x.reverse().reverse(), x.clone());
        prop_assert_eq!(x.transpose().transpose(), x.clone());
        prop_assert_eq!(x.reverse().transpose(), x.transpose().reverse());
    }

    #[test]
    fn concatenation_reverses((u, v) in same_rows(4)) {
        let uv = u.col_concat(&v).unwrap();
        prop_assert_eq!(uv.reverse(), v.reverse().col_concat(&u.reverse()).unwrap());
        let (ut, vt) = (u.transpose(), v.transpose());
        prop_assert_eq!(uv.transpose(), ut.row_concat(&vt).unwrap());
        prop_assert_eq!(
            ut.row_concat(&vt).unwrap().reverse(),
            vt.reverse().row_concat(&ut.reverse()).unwrap()
        );
    }

    #[test]
    fn grid_text_round_trips(x in word(6, 4)) {
        prop_assert_eq!(Word2D::parse_grid(&x.to_grid()).unwrap(), x);
    }

    #[test]
    fn borders_are_prefix_and_suffix(x in word(5, 2)) {
        let borders = x.borders().unwrap();
        prop_assert!(borders.contains(&x));
        prop_assert!(borders.len() <= x.rows() * x.cols());
        if x.alph().len() == 1 {
            prop_assert_eq!(borders.len(), x.rows() * x.cols());
        }
        for b in borders {
            prop_assert!(b.is_prefix_of(&x) && b.is_suffix_of(&x));
        }
    }

    #[test]
    fn borders_of_palindromes_are_palindromes(x in word(6, 2)) {
        let p = pal_closure(&x);
        prop_assert!(is_palindrome_2d(&p));
        for b in p.borders().unwrap() {
            prop_assert!(is_palindrome_2d(&b), "border {} of {}", b, p);
        }
    }

    #[test]
    fn hv_characterisation(x in word(6, 3)) {
        prop_assert_eq!(is_hv_palindrome(&x), check_row_col_symmetry(&x));
        let h = hv_closure(&x);
        prop_assert!(is_hv_palindrome(&h) && is_palindrome_2d(&h));
    }

    #[test]
    fn decompose_round_trips(x in word(7, 3)) {
        let h = hv_closure(&x);
        let d = hv_decompose(&h).unwrap();
        let quadrant = (h.rows() / 2, h.cols() / 2);
        let expected = if quadrant.0 == 0 || quadrant.1 == 0 { (0, 0) } else { quadrant };
        prop_assert_eq!(d.u.shape(), expected);
        prop_assert_eq!(hv_recompose(&d).unwrap(), h);
    }

    #[test]
    fn forbidden_pattern_characterises_non_hv_factors(x in word(6, 3)) {
        prop_assert_eq!(find_forbidden_pattern(&x).is_some(), is_non_hv_palindromic_factor_present(&x));
    }

    #[test]
    fn fast_counter_matches_enumeration(x in word(5, 3)) {
        for kind in [FactorKind::Pal2d, FactorKind::Hv] {
            prop_assert_eq!(fast_count(&x, 3, kind).unwrap(), count_palindromic_factors(&x, kind).unwrap());
        }
    }

    #[test]
    fn hv_factors_never_exceed_palindromic_factors(x in word(5, 3)) {
        let pal = count_palindromic_factors(&x, FactorKind::Pal2d).unwrap();
        let hv = count_palindromic_factors(&x, FactorKind::Hv).unwrap();
        let trivial = count_palindromic_factors(&x, FactorKind::Trivial).unwrap();
        prop_assert!(trivial <= hv && hv <= pal);
        prop_assert_eq!(trivial, x.alph().len());
    }

    #[test]
    fn conjugacy_is_closed_under_rotation(x in word(4, 3), i in 0usize..8, j in 0usize..8) {
        let class = conjugacy_class(&x).unwrap();
        let y = rotate(&x, i, j).unwrap();
        prop_assert!(class.contains(&y));
        prop_assert_eq!(conjugacy_class(&y).unwrap(), class);
        let r = pal_conjugates(&x).unwrap();
        prop_assert!(r.pal_members.len() <= pal_conjugate_bound(x.rows(), x.cols()));
        prop_assert!(r.hv_members.is_subset(&r.pal_members));
    }
}
