//! The geometric enumeration and the algebraic translation must tell the
//! same story. These tests drive moderate sweeps; the acceptance suite in the
//! CLI crate runs the full-size versions.

use cutseq::bridge::{sequence_to_slope, slope_to_sequence};
use cutseq::geometry::{
    billiard_path, sturmian_prefix, torus_cutting_sequence, Aim, Point,
};
use cutseq::rational::Rational;
use cutseq::surd::QuadraticSurd;
use cutseq::transforms::{apply_matrix, ShearMatrix, SlopeVector};
use cutseq::words::{Letter, PeriodicWord, TypeClass, WordAnalysis};

use num_integer::Integer;

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

/// Intercept u/P with a prime P larger than the denominator never meets a
/// lattice point: an integer crossing would force P to divide u.
fn safe_intercept(seed: i64) -> Rational {
    const P: i64 = 1009;
    rat(1 + seed.rem_euclid(P - 1), P)
}

#[test]
fn torus_windows_match_algebraic_words() {
    for q in 1i64..=8 {
        for p in 0i64..=8 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let slope = rat(p, q);
            let word = slope_to_sequence(&slope).unwrap();
            let n = (p + q) as usize;
            for t in 0..4 {
                let intercept = safe_intercept(31 * p + 17 * q + t);
                let window = torus_cutting_sequence(&slope, &intercept, 3 * n).unwrap();
                // every window of one period length is a rotation of the word
                for start in 0..n {
                    let chunk = &window.letters()[start..start + n];
                    assert_eq!(
                        PeriodicWord::new(chunk.to_vec()).unwrap(),
                        word,
                        "{p}/{q} window at {start}"
                    );
                }
            }
        }
    }
}

#[test]
fn billiard_periods_are_even_and_match_the_formula() {
    for q in 1i64..=8 {
        for p in 0i64..=8 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let slope = rat(p, q);
            // start at (1/P, c/P) with c q != p mod P so no corner is ever hit
            let c = (1..=4).find(|c| c * q != p).expect("some c works");
            let start = Point::new(rat(1, 1009), rat(c, 1009));
            let budget = 4 * (p + q) as usize + 4;
            let path = billiard_path(&Aim::Slope(slope.clone()), &start, budget).unwrap();
            let period = path.period.unwrap_or_else(|| panic!("{p}/{q} found no period"));
            assert_eq!(period % 2, 0, "{p}/{q}");
            assert_eq!(period as i64, 2 * (p + q), "{p}/{q}");
        }
    }
}

#[test]
fn matrix_application_matches_the_oracle() {
    // every determinant-1 nonnegative matrix with entries <= 10, applied to
    // a handful of starting words
    let starts = ["(AB)*", "(B)*", "(AAB)*", "(ABB)*"];
    for a in 0i64..=10 {
        for b in 0..=10 {
            for c in 0..=10 {
                let ad = 1 + b * c;
                if a == 0 || ad % a != 0 || ad / a > 10 {
                    continue;
                }
                let m = ShearMatrix::new(a, b, c, ad / a).unwrap();
                for s in starts {
                    let w: PeriodicWord = s.parse().unwrap();
                    let image = apply_matrix(&m, &w).unwrap();
                    let v = m.apply_vector(&SlopeVector::of_word(&w));
                    let expected_slope = v.slope().unwrap();
                    // algebraic slope agrees
                    let (img_slope, _) = sequence_to_slope(&image).unwrap();
                    assert_eq!(img_slope, expected_slope, "{m} on {s}");
                    // and the geometric coding of that slope is the same word
                    let n = image.period_len();
                    let window =
                        torus_cutting_sequence(&expected_slope, &safe_intercept(a + b + c), n)
                            .unwrap();
                    assert_eq!(
                        PeriodicWord::from_finite(&window).unwrap(),
                        image,
                        "{m} on {s}"
                    );
                    // rewriting preserves validity
                    assert!(image.validate_cutting_sequence().is_valid());
                }
            }
        }
    }
}

#[test]
fn crossing_frequencies_track_the_slope() {
    // |#A/#B - s| < 2/#B, i.e. |#A - s #B| < 2, checked exactly
    let slopes = [
        QuadraticSurd::sqrt_of(2).unwrap(),
        QuadraticSurd::sqrt_of(3).unwrap(),
        QuadraticSurd::new(1, 1, 5, 2).unwrap(),
    ];
    for slope in &slopes {
        let prefix = sturmian_prefix(slope, &rat(1, 2), 10_000).unwrap();
        let a = prefix.count(Letter::A) as i64;
        let b = prefix.count(Letter::B) as i64;
        let s_b = slope.mul(&QuadraticSurd::from_integer(b)).unwrap();
        let diff = QuadraticSurd::from_integer(a).sub(&s_b).unwrap();
        let two = QuadraticSurd::from_integer(2);
        let neg_two = QuadraticSurd::from_integer(-2);
        assert_eq!(diff.cmp_exact(&two), std::cmp::Ordering::Less, "{slope}");
        assert_eq!(diff.cmp_exact(&neg_two), std::cmp::Ordering::Greater, "{slope}");
    }
}

#[test]
fn sturmian_prefixes_have_one_isolated_letter() {
    // slopes above 1 keep B isolated, below 1 keep A isolated; either way
    // exactly one of the doubles is missing from any prefix of length >= 64
    let cases = [
        QuadraticSurd::sqrt_of(2).unwrap(),
        QuadraticSurd::sqrt_of(3).unwrap(),
        QuadraticSurd::new(1, 1, 5, 2).unwrap(),
        QuadraticSurd::new(0, 1, 2, 2).unwrap(), // sqrt(2)/2 < 1
    ];
    for slope in &cases {
        for t in 1..=3 {
            let prefix = sturmian_prefix(slope, &rat(t, 7), 64).unwrap();
            assert!(prefix.exactly_one_double_absent(), "{slope} intercept {t}/7");
        }
    }
}

#[test]
fn sturmian_prefixes_are_balanced_with_staircase_complexity() {
    let slope = QuadraticSurd::sqrt_of(2).unwrap();
    let prefix = sturmian_prefix(&slope, &rat(2, 7), 2_000).unwrap();
    assert!(prefix.balance(20).is_balanced());
    for n in 1..=20 {
        assert_eq!(prefix.complexity(n).unwrap(), n + 1, "at n = {n}");
    }
    // slope above 1 keeps B isolated, so 11 never occurs
    assert_eq!(prefix.classify_type(), TypeClass::Type0);
}

#[test]
fn sturmian_prefix_recurs() {
    let slope = QuadraticSurd::sqrt_of(2).unwrap();
    let prefix = sturmian_prefix(&slope, &rat(1, 2), 2_000).unwrap();
    assert!(prefix.recurrence_check(5).unwrap());
}

#[test]
fn published_sqrt2_window_appears_at_offset_nine() {
    // the widely printed string for slope sqrt(2), intercept 1/2 starts at
    // the tenth crossing of this enumeration
    let slope = QuadraticSurd::sqrt_of(2).unwrap();
    let prefix = sturmian_prefix(&slope, &rat(1, 2), 30).unwrap();
    let text = prefix.format(cutseq::words::Alphabet::Binary);
    assert_eq!(&text[9..21], "101010010100");
}
