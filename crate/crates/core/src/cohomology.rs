//! Invariant de Rham cohomology: bases, class coordinates, subspaces of `H^k`
//! and the Poincaré pairing.
//!
//! Classes are represented by harmonic forms for the metric in which the
//! coframe monomials are orthonormal, i.e. by `ker d ∩ ker d*`. Coordinates of a
//! class are taken in that harmonic basis.

use crate::error::CohomologyError;
use crate::exterior::{KForm, LieAlgebraSpec, MonomialBasis};
use crate::field::GaussianRational;
use crate::linalg::{Matrix, Subspace};

/// A basis of `H^k`, carried by closed (harmonic) representatives.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    degree: usize,
    spec: LieAlgebraSpec,
    monomials: MonomialBasis,
    representatives: Vec<KForm>,
    gram_inverse: Matrix,
}

/// Closed forms of degree `k` form the subspace `ker d_k` of `∧^k`; the exact
/// ones `im d_{k-1}`.
pub fn closed_and_exact(spec: &LieAlgebraSpec, k: usize) -> (Subspace, Subspace) {
    let monomials = MonomialBasis::new(spec.dim(), k);
    let closed = Subspace::span(monomials.len(), &spec.differential_matrix(k).nullspace());
    let exact = if k == 0 {
        Subspace::zero(monomials.len())
    } else {
        let d_prev = spec.differential_matrix(k - 1);
        Subspace::span(monomials.len(), &d_prev.transpose().row_vectors())
    };
    (closed, exact)
}

/// Harmonic forms `ker d_k ∩ ker d*_{k-1}` as coefficient vectors.
pub(crate) fn harmonic_vectors(spec: &LieAlgebraSpec, k: usize) -> Vec<Vec<GaussianRational>> {
    let d = spec.differential_matrix(k);
    let stacked = if k == 0 {
        d
    } else {
        let adj = spec.differential_matrix(k - 1).adjoint();
        let mut rows = d.row_vectors();
        rows.extend(adj.row_vectors());
        Matrix::from_row_vectors(d.cols(), &rows)
    };
    stacked.nullspace()
}

/// `H^k` of the Chevalley–Eilenberg complex.
///
/// The caller is expected to have checked `d² = 0`; the result is meaningless otherwise.
pub fn cohomology(spec: &LieAlgebraSpec, k: usize) -> CohomologyBasis {
    let monomials = MonomialBasis::new(spec.dim(), k);
    let representatives: Vec<KForm> = harmonic_vectors(spec, k)
        .iter()
        .map(|v| KForm::from_vector(&monomials, v))
        .collect();
    let b = representatives.len();
    let mut gram = Matrix::zeros(b, b);
    for (i, a) in representatives.iter().enumerate() {
        for (j, c) in representatives.iter().enumerate() {
            gram[(i, j)] = c.inner(a);
        }
    }
    let gram_inverse = gram.inverse().expect("harmonic representatives are independent");
    CohomologyBasis { degree: k, spec: spec.clone(), monomials, representatives, gram_inverse }
}

/// Betti numbers `b_0 … b_{2n}`.
pub fn betti_numbers(spec: &LieAlgebraSpec) -> Vec<usize> {
    (0..=spec.dim()).map(|k| cohomology(spec, k).dim()).collect()
}

impl CohomologyBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn spec(&self) -> &LieAlgebraSpec {
        &self.spec
    }

    pub fn representatives(&self) -> &[KForm] {
        &self.representatives
    }

    pub fn monomials(&self) -> &MonomialBasis {
        &self.monomials
    }

    fn check_degree(&self, form: &KForm) -> Result<(), CohomologyError> {
        if form.degree() != self.degree || form.dim() != self.spec.dim() {
            return Err(CohomologyError::DegreeMismatch { expected: self.degree, found: form.degree() });
        }
        Ok(())
    }

    /// Coordinates of `[ω]` in the harmonic basis; an all-zero vector means ω is exact.
    pub fn class_coordinates(&self, form: &KForm) -> Result<Vec<GaussianRational>, CohomologyError> {
        self.check_degree(form)?;
        let d = self.spec.differential(form);
        if !d.is_zero() {
            return Err(CohomologyError::NotClosed { witness: d });
        }
        // Exact forms are orthogonal to harmonic ones, so projecting onto the
        // harmonic span recovers the class.
        let rhs: Vec<GaussianRational> = self.representatives.iter().map(|h| form.inner(h)).collect();
        Ok(self.gram_inverse.mul_vec(&rhs))
    }

    pub fn is_exact(&self, form: &KForm) -> Result<bool, CohomologyError> {
        Ok(self.class_coordinates(form)?.iter().all(GaussianRational::is_zero))
    }

    /// The harmonic representative with the given coordinates.
    pub fn representative(&self, coords: &[GaussianRational]) -> KForm {
        assert_eq!(coords.len(), self.dim());
        let mut out = KForm::zero(self.spec.dim(), self.degree);
        for (c, h) in coords.iter().zip(&self.representatives) {
            if !c.is_zero() {
                out = out.add(&h.scale(c));
            }
        }
        out
    }

    pub fn span_in_cohomology(&self, forms: &[KForm]) -> Result<CohomologySubspace, CohomologyError> {
        let coords = forms.iter().map(|f| self.class_coordinates(f)).collect::<Result<Vec<_>, _>>()?;
        Ok(CohomologySubspace {
            degree: self.degree,
            coords: Subspace::span(self.dim(), &coords),
            generators: forms.to_vec(),
        })
    }

    /// The whole of `H^k`.
    pub fn full(&self) -> CohomologySubspace {
        CohomologySubspace {
            degree: self.degree,
            coords: Subspace::full(self.dim()),
            generators: self.representatives.clone(),
        }
    }

    pub fn zero_subspace(&self) -> CohomologySubspace {
        CohomologySubspace { degree: self.degree, coords: Subspace::zero(self.dim()), generators: Vec::new() }
    }

    /// Subspace with the given coordinate span; generators are the harmonic representatives.
    pub fn subspace_from_coords(&self, coords: Subspace) -> CohomologySubspace {
        let generators = coords.basis().iter().map(|c| self.representative(c)).collect();
        CohomologySubspace { degree: self.degree, coords, generators }
    }

    /// Real basis of a conjugation-stable subspace, as harmonic real forms.
    pub fn real_representatives(&self, sub: &CohomologySubspace) -> Vec<KForm> {
        sub.coords
            .real_basis()
            .into_iter()
            .map(|v| self.representative(&v.into_iter().map(GaussianRational::real).collect::<Vec<_>>()))
            .collect()
    }
}

/// A subspace of `H^k`, held as a coordinate span in a [`CohomologyBasis`].
#[derive(Clone, Debug)]
pub struct CohomologySubspace {
    degree: usize,
    coords: Subspace,
    generators: Vec<KForm>,
}

impl CohomologySubspace {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn coords(&self) -> &Subspace {
        &self.coords
    }

    pub fn generators(&self) -> &[KForm] {
        &self.generators
    }

    fn check_ambient(&self, other: &CohomologySubspace) -> Result<(), CohomologyError> {
        if self.degree != other.degree || self.coords.ambient() != other.coords.ambient() {
            return Err(CohomologyError::AmbientMismatch);
        }
        Ok(())
    }

    pub fn meet(&self, other: &CohomologySubspace, basis: &CohomologyBasis) -> Result<CohomologySubspace, CohomologyError> {
        self.check_ambient(other)?;
        Ok(basis.subspace_from_coords(self.coords.meet(&other.coords)))
    }

    pub fn join(&self, other: &CohomologySubspace) -> Result<CohomologySubspace, CohomologyError> {
        self.check_ambient(other)?;
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(CohomologySubspace { degree: self.degree, coords: self.coords.join(&other.coords), generators })
    }

    pub fn contains_class(&self, coords: &[GaussianRational]) -> bool {
        self.coords.contains(coords)
    }

    pub fn same_as(&self, other: &CohomologySubspace) -> bool {
        self.degree == other.degree && self.coords == other.coords
    }
}

/// `⟨[a], [b]⟩`: the coefficient of the volume monomial in `a ∧ b`.
pub fn poincare_pairing(spec: &LieAlgebraSpec, a: &KForm, b: &KForm) -> Result<GaussianRational, CohomologyError> {
    if a.degree() + b.degree() != spec.dim() {
        return Err(CohomologyError::DegreeMismatch { expected: spec.dim() - a.degree(), found: b.degree() });
    }
    for f in [a, b] {
        let d = spec.differential(f);
        if !d.is_zero() {
            return Err(CohomologyError::NotClosed { witness: d });
        }
    }
    Ok(a.wedge(b).coefficient(spec.volume()))
}

/// Pairing matrix between the harmonic bases of `H^k` and `H^{2n-k}`.
pub fn pairing_matrix(left: &CohomologyBasis, right: &CohomologyBasis) -> Result<Matrix, CohomologyError> {
    let spec = left.spec();
    let mut m = Matrix::zeros(left.dim(), right.dim());
    for (i, a) in left.representatives().iter().enumerate() {
        for (j, b) in right.representatives().iter().enumerate() {
            m[(i, j)] = poincare_pairing(spec, a, b)?;
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn e(dim: usize, idx: &[usize]) -> KForm {
        KForm::monomial(dim, idx, GaussianRational::one())
    }

    #[test]
    fn torus_betti_numbers_are_binomial() {
        assert_eq!(betti_numbers(&catalog::torus(6)), vec![1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn heisenberg_exact_and_closed() {
        let spec = catalog::iwasawa().spec;
        let h2 = cohomology(&spec, 2);
        assert_eq!(h2.dim(), 8);
        // de5 = -e13 + e24 is exact
        assert!(h2.is_exact(spec.d_coframe(5)).unwrap());
        let err = h2.class_coordinates(&e(6, &[1, 5])).unwrap_err();
        assert!(matches!(err, CohomologyError::NotClosed { .. }));
        let err = h2.class_coordinates(&e(6, &[1])).unwrap_err();
        assert!(matches!(err, CohomologyError::DegreeMismatch { .. }));
    }

    #[test]
    fn torus_pairing() {
        let spec = catalog::torus(6);
        assert_eq!(poincare_pairing(&spec, &e(6, &[1, 2]), &e(6, &[3, 4, 5, 6])).unwrap(), GaussianRational::one());
        assert!(poincare_pairing(&spec, &e(6, &[1, 2]), &e(6, &[3, 4, 5])).is_err());
    }

    #[test]
    fn meet_and_join_mismatch() {
        let spec = catalog::torus(4);
        let h1 = cohomology(&spec, 1);
        let h2 = cohomology(&spec, 2);
        assert!(h1.full().join(&h2.full()).is_err());
        assert!(h1.full().meet(&h2.zero_subspace(), &h1).is_err());
    }
}
