use super::echelon::{det, image, inverse, kernel, rank, solve};
use super::Mat;
use crate::arith::Field;
use crate::error::{Error, Result};

/// A linear subspace of `F^n` given by an ordered basis (the columns of `basis`).
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Mat<F>,
}

impl<F: Field> Subspace<F> {
    /// Checks that the columns are independent.
    pub fn new(ambient: usize, basis: Mat<F>) -> Result<Self> {
        if basis.rows() != ambient {
            return Err(Error::DimensionMismatch(format!(
                "basis has {} rows in ambient dimension {ambient}",
                basis.rows()
            )));
        }
        let r = rank(&basis);
        if r != basis.cols() {
            return Err(Error::DependentColumns {
                rank: r,
                cols: basis.cols(),
            });
        }
        Ok(Subspace { ambient, basis })
    }

    pub(crate) fn from_independent(ambient: usize, basis: Mat<F>) -> Self {
        debug_assert_eq!(basis.rows(), ambient);
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Span of arbitrary vectors, keeping the first independent ones.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        image(&Mat::from_cols(ambient, vectors))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<F>> {
        self.basis.columns()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_ok()
    }

    /// Coordinates of `v` in this basis.
    pub fn coordinates(&self, v: &[F]) -> Result<Vec<F>> {
        let b = Mat::from_cols(self.ambient, &[v.to_vec()]);
        Ok(solve(&self.basis, &b)?.col(0))
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        rank(&self.basis.hstack(&other.basis)) == self.dim()
    }

    /// Equality as sets, ignoring the chosen bases.
    pub fn same_space(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    pub fn sum(&self, other: &Self) -> Self {
        image(&self.basis.hstack(&other.basis))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        // pairs (x, y) with A x = B y
        let stacked = self.basis.hstack(&other.basis.scale(&-F::one()));
        let k = kernel(&stacked);
        let top: Vec<usize> = (0..self.dim()).collect();
        let all: Vec<usize> = (0..k.dim()).collect();
        let xs = k.basis.select(&top, &all);
        Subspace::from_independent(self.ambient, self.basis.matmul(&xs))
    }
}

/// Projectors for a direct sum `w ⊕ u = F^n`: `P_W + P_U = I`,
/// `im P_W = w`, `ker P_W = u`.
pub fn complementary_projectors<F: Field>(
    w: &Subspace<F>,
    u: &Subspace<F>,
) -> Result<(Mat<F>, Mat<F>)> {
    let n = w.ambient();
    if u.ambient() != n || w.dim() + u.dim() != n {
        return Err(Error::NotComplementary);
    }
    let b = w.basis().hstack(u.basis());
    let b_inv = inverse(&b).map_err(|_| Error::NotComplementary)?;
    let mut sel = vec![F::zero(); n];
    for s in sel.iter_mut().take(w.dim()) {
        *s = F::one();
    }
    let pw = b.matmul(&Mat::diag(&sel)).matmul(&b_inv);
    let pu = Mat::identity(n).sub(&pw);
    Ok((pw, pu))
}

/// The scalar `c` with `v_1 ∧ … ∧ v_k = c · b_1 ∧ … ∧ b_k`.
pub fn wedge_coefficient<F: Field>(vectors: &[Vec<F>], reference: &Subspace<F>) -> Result<F> {
    if vectors.len() != reference.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{} vectors against a {}-dimensional reference",
            vectors.len(),
            reference.dim()
        )));
    }
    if vectors.is_empty() {
        return Ok(F::one());
    }
    let coords = solve(
        reference.basis(),
        &Mat::from_cols(reference.ambient(), vectors),
    )?;
    det(&coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn v(x: &[i64]) -> Vec<Rational> {
        x.iter().map(|&a| Rational::from_i64(a)).collect()
    }

    fn sub(n: usize, vs: &[&[i64]]) -> Subspace<Rational> {
        let cols: Vec<_> = vs.iter().map(|x| v(x)).collect();
        Subspace::new(n, Mat::from_cols(n, &cols)).unwrap()
    }

    #[test]
    fn construction_checks_independence() {
        let cols = vec![v(&[1, 2]), v(&[2, 4])];
        assert!(matches!(
            Subspace::new(2, Mat::from_cols(2, &cols)),
            Err(Error::DependentColumns { rank: 1, cols: 2 })
        ));
    }

    #[test]
    fn intersection_and_sum() {
        let a = sub(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = sub(3, &[&[0, 1, 0], &[0, 0, 1]]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.same_space(&sub(3, &[&[0, 1, 0]])));
        assert!(a.sum(&b).same_space(&Subspace::full(3)));
        assert_eq!(a.intersection(&Subspace::zero(3)).dim(), 0);
    }

    #[test]
    fn projector_examples() {
        let w = sub(2, &[&[1, 0]]);
        let u = sub(2, &[&[0, 1]]);
        let (pw, pu) = complementary_projectors(&w, &u).unwrap();
        assert_eq!(pw, Mat::diag(&v(&[1, 0])));
        assert_eq!(pu, Mat::diag(&v(&[0, 1])));
        let skew = sub(2, &[&[1, 1]]);
        let (pw, pu) = complementary_projectors(&skew, &u).unwrap();
        assert!(pw.add(&pu).is_identity());
        assert_eq!(pw.matmul(&pw), pw);
        assert!(complementary_projectors(&w, &w).is_err());
    }

    #[test]
    fn wedge_coefficient_examples() {
        let r = sub(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let vs = r.vectors();
        assert_eq!(wedge_coefficient(&vs, &r).unwrap(), Rational::from_i64(1));
        let swapped = vec![vs[1].clone(), vs[0].clone()];
        assert_eq!(
            wedge_coefficient(&swapped, &r).unwrap(),
            Rational::from_i64(-1)
        );
        let dep = vec![vs[0].clone(), vs[0].clone()];
        assert_eq!(wedge_coefficient(&dep, &r).unwrap(), Rational::from_i64(0));
        let outside = vec![v(&[0, 0, 1]), vs[0].clone()];
        assert_eq!(wedge_coefficient(&outside, &r), Err(Error::NotInSpan));
    }
}
