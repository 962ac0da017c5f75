use super::{Mat, Subspace};
use crate::arith::Field;
use crate::error::{Error, Result};

/// In-place Gauss–Jordan; returns pivot columns in increasing order.
///
/// Pivot rule: leftmost column with a nonzero entry below the current row,
/// and within that column the first such row.
fn rref_in_place<F: Field>(m: &mut Mat<F>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m[(r, c)].try_inv().expect("nonzero pivot");
        for j in c..cols {
            if !m[(r, j)].is_zero() {
                m[(r, j)] = m[(r, j)].mul_ref(&inv);
            }
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..cols {
                if !m[(r, j)].is_zero() {
                    let t = f.mul_ref(&m[(r, j)]);
                    m[(i, j)] = m[(i, j)].sub_ref(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon form and pivot columns.
pub fn rref<F: Field>(m: &Mat<F>) -> (Mat<F>, Vec<usize>) {
    let mut r = m.clone();
    let pivots = rref_in_place(&mut r);
    (r, pivots)
}

pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    rref(m).1.len()
}

/// Kernel basis: one vector per free column, in increasing column order.
pub fn kernel<F: Field>(m: &Mat<F>) -> Subspace<F> {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![F::zero(); n];
        v[f] = F::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r[(i, f)].clone();
        }
        basis.push(v);
    }
    Subspace::from_independent(n, Mat::from_cols(n, &basis))
}

/// Image basis: the pivot columns of `m` itself.
pub fn image<F: Field>(m: &Mat<F>) -> Subspace<F> {
    let (_, pivots) = rref(m);
    Subspace::from_independent(m.rows(), m.select_cols(&pivots))
}

pub fn det<F: Field>(m: &Mat<F>) -> Result<F> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut acc = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return Ok(F::zero());
        };
        if p != c {
            a.swap_rows(p, c);
            acc = -acc;
        }
        let piv = a[(c, c)].clone();
        acc = acc.mul_ref(&piv);
        let inv = piv.try_inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].mul_ref(&inv);
            for j in c + 1..n {
                if !a[(c, j)].is_zero() {
                    let t = f.mul_ref(&a[(c, j)]);
                    a[(i, j)] = a[(i, j)].sub_ref(&t);
                }
            }
        }
    }
    Ok(acc)
}

pub fn inverse<F: Field>(m: &Mat<F>) -> Result<Mat<F>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut aug = m.hstack(&Mat::identity(n));
    let pivots = rref_in_place(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::DivisionByZero);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(aug.select(&rows, &cols))
}

/// A solution `X` of `A X = B`, free variables set to zero.
///
/// Errors with [`Error::NotInSpan`] when some column of `B` is outside the
/// column space of `A`.
pub fn solve<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Result<Mat<F>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "solve with {} and {} rows",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let mut aug = a.hstack(b);
    let pivots = rref_in_place(&mut aug);
    if pivots.iter().any(|&p| p >= n) {
        return Err(Error::NotInSpan);
    }
    let mut x = Mat::zeros(n, b.cols());
    for (i, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x[(p, j)] = aug[(i, n + j)].clone();
        }
    }
    Ok(x)
}

/// Coefficients of det(I − t·m), truncated to degree `maxdeg`.
///
/// Uses the Faddeev–LeVerrier recursion, whose k-th coefficient is exactly
/// the t^k coefficient of the reversed characteristic polynomial.
pub fn det_one_minus_t<F: Field>(m: &Mat<F>, maxdeg: usize) -> Result<Vec<F>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let top = n.min(maxdeg);
    let mut coeffs = vec![F::one()];
    let mut mk = Mat::<F>::zeros(n, n);
    for k in 1..=top {
        // M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k)/k
        let mut next = m.matmul(&mk);
        for i in 0..n {
            next[(i, i)] = next[(i, i)].add_ref(&coeffs[k - 1]);
        }
        let tr = m.matmul(&next).trace();
        let k_inv = F::from_i64(k as i64).try_inv().expect("char 0");
        coeffs.push(-tr.mul_ref(&k_inv));
        mk = next;
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Cyclotomic;
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
    fn rref_examples() {
        let id = Mat::<Rational>::identity(3);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2]));
        let z = Mat::<Rational>::zeros(2, 3);
        assert_eq!(rref(&z), (z.clone(), vec![]));
        assert_eq!(
            rref(&q(&[&[1, 2], &[2, 4]])),
            (q(&[&[1, 2], &[0, 0]]), vec![0])
        );
    }

    #[test]
    fn kernel_image_examples() {
        // 1 - (-I) = 2I
        let two = q(&[&[2, 0], &[0, 2]]);
        assert_eq!(kernel(&two).dim(), 0);
        assert_eq!(image(&Mat::<Rational>::zeros(2, 2)).dim(), 0);
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(
            k.basis().columns(),
            vec![
                q(&[&[-2], &[1], &[0]]).entries().to_vec(),
                q(&[&[-3], &[0], &[1]]).entries().to_vec(),
            ]
        );
        assert_eq!(image(&m).basis(), &q(&[&[1], &[2]]));
    }

    #[test]
    fn det_examples() {
        let p12 = q(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(det(&p12).unwrap(), Rational::from_i64(-1));
        assert!(matches!(det(&q(&[&[1, 2]])), Err(Error::NotSquare { .. })));
        assert_eq!(
            det(&q(&[&[1, 2], &[3, 4]])).unwrap(),
            Rational::from_i64(-2)
        );
    }

    #[test]
    fn inverse_and_solve() {
        let a = q(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert!((&a * &inv).is_identity());
        assert_eq!(inverse(&q(&[&[1, 2], &[2, 4]])), Err(Error::DivisionByZero));
        let b = q(&[&[3], &[2]]);
        assert_eq!(solve(&a, &b).unwrap(), q(&[&[1], &[1]]));
        let tall = q(&[&[1], &[0]]);
        assert_eq!(solve(&tall, &q(&[&[0], &[1]])), Err(Error::NotInSpan));
    }

    #[test]
    fn det_one_minus_t_examples() {
        let i2 = Mat::<Rational>::identity(2);
        let ints = |v: Vec<Rational>| v.into_iter().map(|x| x.to_integer()).collect::<Vec<_>>();
        assert_eq!(
            ints(det_one_minus_t(&i2, 10).unwrap()),
            vec![1.into(), (-2).into(), 1.into()]
        );
        assert_eq!(
            ints(det_one_minus_t(&i2.scale(&Rational::from_i64(-1)), 10).unwrap()),
            vec![1.into(), 2.into(), 1.into()]
        );
        assert_eq!(det_one_minus_t(&i2, 1).unwrap().len(), 2);
        let d = Mat::diag(&[Cyclotomic::zeta(3), Cyclotomic::zeta_pow(3, 2)]);
        let p = det_one_minus_t(&d, 10).unwrap();
        assert_eq!(p, vec![Cyclotomic::from_integer(1); 3]);
    }
}
