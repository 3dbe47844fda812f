//! Euler q-integers, q-factorials and Gaussian q-binomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::exactalg::{IntPoly, LaurentPoly};

/// The q-integer `[n]_q`.
///
/// For `n >= 0` this is `1 + q + ... + q^(n-1)`; for negative `n` it is
/// `-q^-1 [-n]_{1/q}`, a Laurent polynomial with exponents `n..=-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QInt {
    pub n: i64,
    pub value: LaurentPoly,
}

pub fn q_int(n: i64) -> QInt {
    let value = if n >= 0 {
        LaurentPoly::new(0, vec![BigInt::one(); n as usize])
    } else {
        LaurentPoly::new(n, vec![-BigInt::one(); (-n) as usize])
    };
    QInt { n, value }
}

/// `[n]_q` as an ordinary polynomial, `n >= 0`.
pub fn q_int_poly(n: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); n])
}

/// `[n]_{1/q} = 1 + q^-1 + ... + q^-(n-1)`.
pub fn q_int_inverse(n: usize) -> LaurentPoly {
    LaurentPoly::new(1 - n as i64, vec![BigInt::one(); n])
}

pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, k| &acc * &q_int_poly(k))
}

/// Gaussian binomial; zero outside `0 <= m <= n`.
pub fn q_binomial(n: usize, m: i64) -> IntPoly {
    if m < 0 || m as usize > n {
        return IntPoly::zero();
    }
    let m = m as usize;
    let den = &q_factorial(m) * &q_factorial(n - m);
    q_factorial(n)
        .div_exact(&den)
        .expect("q-factorial quotient is always a polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Rows of the q-Pascal triangle, independent of the factorial quotient.
    fn pascal_triangle(rows: usize) -> Vec<Vec<IntPoly>> {
        let mut tri: Vec<Vec<IntPoly>> = vec![vec![IntPoly::one()]];
        for n in 1..=rows {
            let prev = &tri[n - 1];
            let row = (0..=n)
                .map(|m| {
                    if m == 0 || m == n {
                        IntPoly::one()
                    } else {
                        &prev[m - 1] + &prev[m].shift(m)
                    }
                })
                .collect();
            tri.push(row);
        }
        tri
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(4).value, LaurentPoly::from_i64s(0, &[1, 1, 1, 1]));
        assert!(q_int(0).value.is_zero());
        assert_eq!(q_int(-2).value, LaurentPoly::from_i64s(-2, &[-1, -1]));
        assert_eq!(q_int(-2).value.to_string(), "-q^-2 - q^-1");
    }

    #[test]
    fn negative_matches_inversion_rule() {
        for n in 1..10 {
            let expect = &LaurentPoly::from_i64s(-1, &[-1]) * &q_int(n).value.invert_variable();
            assert_eq!(q_int(-n).value, expect);
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0), IntPoly::one());
        assert_eq!(q_factorial(4), p(&[1, 3, 5, 6, 5, 3, 1]));
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0), IntPoly::one());
        assert_eq!(q_binomial(5, 2), p(&[1, 1, 2, 2, 2, 1, 1]));
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(3, -1).is_zero());
    }

    #[test]
    fn euler_recurrences() {
        for n in 0..=200usize {
            let next = q_int_poly(n + 1);
            assert_eq!(next, &q_int_poly(n).shift(1) + &IntPoly::one());
            assert_eq!(next, &q_int_poly(n) + &IntPoly::q_pow(n));
        }
    }

    #[test]
    fn binomial_symmetry_pascal_and_specialization() {
        let tri = pascal_triangle(30);
        for (n, row) in tri.iter().enumerate() {
            for (m, expected) in row.iter().enumerate() {
                let b = q_binomial(n, m as i64);
                assert_eq!(b, q_binomial(n, (n - m) as i64));
                assert!(b.is_palindrome());
                assert_eq!(b.eval_at_one(), BigInt::from(binomial(n as u64, m as u64)));
                assert_eq!(&b, expected);
                if 1 <= m && m < n {
                    let rec =
                        &q_binomial(n - 1, m as i64 - 1) + &q_binomial(n - 1, m as i64).shift(m);
                    assert_eq!(b, rec);
                }
            }
        }
    }

    #[test]
    fn specializations_at_one() {
        let mut fact = BigInt::one();
        for n in 0..=20i64 {
            if n > 0 {
                fact *= n;
            }
            assert_eq!(q_int(n).value.eval_at_one(), BigInt::from(n));
            assert_eq!(q_int(-n).value.eval_at_one(), BigInt::from(-n));
            assert_eq!(q_factorial(n as usize).eval_at_one(), fact);
        }
    }
}
