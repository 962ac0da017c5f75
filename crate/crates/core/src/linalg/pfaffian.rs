use super::Mat;
use crate::arith::Field;
use crate::error::{Error, Result};

/// Pfaffian of an exactly skew-symmetric matrix, normalized so the
/// block-diagonal `J_n = diag([[0,1],[-1,0]], …)` has Pfaffian 1.
///
/// Reduces by unimodular congruences `M ↦ E M Eᵀ` that clear row `k` past
/// the pivot `(k, k+1)`, so that `Pf(M) = m_{k,k+1} · Pf(M without k, k+1)`.
pub fn pfaffian<F: Field>(m: &Mat<F>) -> Result<F> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if !m.is_skew() {
        return Err(Error::NotSkew);
    }
    let mut a = m.clone();
    let mut pf = F::one();
    let mut k = 0;
    while k < n {
        let Some(p) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) else {
            return Ok(F::zero());
        };
        if p != k + 1 {
            swap_sym(&mut a, k + 1, p);
            pf = -pf;
        }
        let piv = a[(k, k + 1)].clone();
        pf = pf.mul_ref(&piv);
        let inv = piv.try_inv().expect("nonzero pivot");
        for i in k + 2..n {
            if a[(k, i)].is_zero() {
                continue;
            }
            let f = a[(k, i)].mul_ref(&inv);
            // col_i -= f col_{k+1}; row_i -= f row_{k+1}
            for r in k..n {
                let t = f.mul_ref(&a[(r, k + 1)]);
                a[(r, i)] = a[(r, i)].sub_ref(&t);
            }
            for c in k..n {
                let t = f.mul_ref(&a[(k + 1, c)]);
                a[(i, c)] = a[(i, c)].sub_ref(&t);
            }
        }
        k += 2;
    }
    Ok(pf)
}

fn swap_sym<F: Field>(a: &mut Mat<F>, i: usize, j: usize) {
    a.swap_rows(i, j);
    for r in 0..a.rows() {
        let t = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det;
    use crate::Rational;

    fn q(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn standard_forms() {
        assert_eq!(
            pfaffian(&q(&[&[0, 1], &[-1, 0]])).unwrap(),
            Rational::from_i64(1)
        );
        let j2 = q(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        assert_eq!(pfaffian(&j2).unwrap(), Rational::from_i64(1));
        // [[0, I], [-I, 0]] is a reordering of J_2 by the transposition (1 2)
        let split = q(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]);
        assert_eq!(pfaffian(&split).unwrap(), Rational::from_i64(-1));
    }

    #[test]
    fn four_by_four_formula() {
        // Pf = af - be + cd for [[0,a,b,c],[.,0,d,e],[.,.,0,f]]
        let (a, b, c, d, e, f) = (2, 3, 5, 7, 11, 13);
        let m = q(&[
            &[0, a, b, c],
            &[-a, 0, d, e],
            &[-b, -d, 0, f],
            &[-c, -e, -f, 0],
        ]);
        let pf = pfaffian(&m).unwrap();
        assert_eq!(pf, Rational::from_i64(a * f - b * e + c * d));
        assert_eq!(&pf * &pf, det(&m).unwrap());
    }

    #[test]
    fn pivot_swap_needed() {
        let m = q(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]);
        let pf = pfaffian(&m).unwrap();
        assert_eq!(&pf * &pf, det(&m).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            pfaffian(&Mat::<Rational>::zeros(3, 3)),
            Err(Error::OddDimension(3))
        );
        assert_eq!(pfaffian(&q(&[&[0, 1], &[1, 0]])), Err(Error::NotSkew));
        assert_eq!(
            pfaffian(&Mat::<Rational>::zeros(2, 2)).unwrap(),
            Rational::from_i64(0)
        );
        assert_eq!(
            pfaffian(&Mat::<Rational>::zeros(0, 0)).unwrap(),
            Rational::from_i64(1)
        );
    }
}
