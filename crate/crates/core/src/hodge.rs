//! Invariant Hodge theory for a coframe-orthonormal metric: star operator,
//! codifferential, Laplacian, harmonic forms, the pure-degree harmonic
//! criterion and the Hard Lefschetz check.

use serde::Serialize;

use crate::almost_complex::{conjugate_pairs, AlmostComplexStructure};
use crate::cohomology::cohomology;
use crate::error::HodgeError;
use crate::exterior::{KForm, LieAlgebraSpec, MonomialBasis};
use crate::field::GaussianRational;
use crate::linalg::{Matrix, Subspace};

/// Declares the coframe of a spec orthonormal and `e¹∧…∧e^{2n}` positive.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvariantMetric;

impl InvariantMetric {
    pub fn describe(&self) -> &'static str {
        "coframe orthonormal, orientation e1^...^e2n"
    }
}

/// `*e^I = ε e^{I^c}` with `e^I ∧ *e^I = vol`; extended ℂ-linearly.
pub fn hodge_star(form: &KForm) -> KForm {
    let dim = form.dim();
    let mut out = KForm::zero(dim, dim - form.degree());
    for (m, c) in form.terms() {
        let comp = m.complement(dim);
        let (sign, _) = m.wedge(comp).expect("complementary indices");
        let c = if sign < 0 { -c.clone() } else { c.clone() };
        out.add_term(comp, c);
    }
    out
}

/// `d* = (-1)^{m(k+1)+1} * d *` on `k`-forms in dimension `m`.
pub fn codifferential(spec: &LieAlgebraSpec, form: &KForm) -> KForm {
    let m = spec.dim();
    let k = form.degree();
    if k == 0 {
        return KForm::zero(m, 0);
    }
    let raw = hodge_star(&spec.differential(&hodge_star(form)));
    if (m * (k + 1) + 1) % 2 == 1 {
        raw.neg()
    } else {
        raw
    }
}

fn operator_matrix(dim: usize, from: usize, to: usize, f: impl Fn(&KForm) -> KForm) -> Matrix {
    let src = MonomialBasis::new(dim, from);
    let dst = MonomialBasis::new(dim, to);
    let columns: Vec<Vec<GaussianRational>> = src
        .monomials()
        .iter()
        .map(|m| f(&KForm::from_terms(dim, from, [(*m, GaussianRational::one())])).to_vector(&dst))
        .collect();
    Matrix::from_row_vectors(dst.len(), &columns).transpose()
}

/// Matrix of `Δ = d d* + d* d` on `∧^k`, in the monomial basis.
pub fn laplacian_matrix(spec: &LieAlgebraSpec, k: usize) -> Matrix {
    let dim = spec.dim();
    let n_k = MonomialBasis::new(dim, k).len();
    let mut lap = Matrix::zeros(n_k, n_k);
    if k < dim {
        let d = operator_matrix(dim, k, k + 1, |f| spec.differential(f));
        let dstar = operator_matrix(dim, k + 1, k, |f| codifferential(spec, f));
        lap = lap.add(&dstar.mul(&d));
    }
    if k > 0 {
        let d = operator_matrix(dim, k - 1, k, |f| spec.differential(f));
        let dstar = operator_matrix(dim, k, k - 1, |f| codifferential(spec, f));
        lap = lap.add(&d.mul(&dstar));
    }
    lap
}

pub fn laplacian(spec: &LieAlgebraSpec, form: &KForm) -> KForm {
    let mut out = KForm::zero(spec.dim(), form.degree());
    if form.degree() < spec.dim() {
        out = out.add(&codifferential(spec, &spec.differential(form)));
    }
    if form.degree() > 0 {
        out = out.add(&spec.differential(&codifferential(spec, form)));
    }
    out
}

/// Basis of `ker Δ_k`.
pub fn harmonic_basis(spec: &LieAlgebraSpec, k: usize) -> Vec<KForm> {
    let basis = MonomialBasis::new(spec.dim(), k);
    laplacian_matrix(spec, k).nullspace().iter().map(|v| KForm::from_vector(&basis, v)).collect()
}

/// Outcome of testing whether harmonic `k`-forms are of pure degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureDegreeReport {
    pub stage: usize,
    pub harmonic_dim: usize,
    /// `dim(H ∩ (∧^{p,q} ⊕ ∧^{q,p}))` for each conjugate pair.
    pub per_pair: Vec<((usize, usize), usize)>,
    /// The harmonic space is spanned by pure-degree harmonic forms.
    pub holds: bool,
}

/// Whether the harmonic space `H` is the direct sum of its intersections with
/// the conjugate-pair type spaces (so a basis of pure-degree harmonic forms exists).
pub fn pure_degree_harmonic_criterion(
    spec: &LieAlgebraSpec,
    j: &AlmostComplexStructure,
    k: usize,
) -> PureDegreeReport {
    let monomials = MonomialBasis::new(spec.dim(), k);
    let harmonic: Vec<Vec<GaussianRational>> =
        harmonic_basis(spec, k).iter().map(|h| h.to_vector(&monomials)).collect();
    let h_space = Subspace::span(monomials.len(), &harmonic);
    let mut total = 0;
    let per_pair = conjugate_pairs(spec.n(), k)
        .into_iter()
        .map(|(p, q)| {
            let mut forms = j.type_basis(p, q);
            if p != q {
                forms.extend(j.type_basis(q, p));
            }
            let vectors: Vec<_> = forms.iter().map(|f| f.to_vector(&monomials)).collect();
            let dim = h_space.meet(&Subspace::span(monomials.len(), &vectors)).dim();
            total += dim;
            ((p, q), dim)
        })
        .collect();
    PureDegreeReport { stage: k, harmonic_dim: h_space.dim(), per_pair, holds: total == h_space.dim() }
}

/// A closed, nondegenerate 2-form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    omega: KForm,
}

impl SymplecticForm {
    pub fn new(spec: &LieAlgebraSpec, omega: KForm) -> Result<SymplecticForm, HodgeError> {
        if omega.degree() != 2 || omega.dim() != spec.dim() {
            return Err(HodgeError::NotSymplectic("not a 2-form on this coframe".into()));
        }
        let d = spec.differential(&omega);
        if !d.is_zero() {
            return Err(HodgeError::NotSymplectic(format!("d omega = {d:?} is not zero")));
        }
        if power(&omega, spec.n()).is_zero() {
            return Err(HodgeError::NotSymplectic(format!("omega^{} vanishes", spec.n())));
        }
        Ok(SymplecticForm { omega })
    }

    pub fn form(&self) -> &KForm {
        &self.omega
    }
}

fn power(omega: &KForm, k: usize) -> KForm {
    (0..k).fold(KForm::scalar(omega.dim(), GaussianRational::one()), |acc, _| acc.wedge(omega))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HlcRow {
    pub k: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub isomorphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HlcReport {
    pub rows: Vec<HlcRow>,
    pub holds: bool,
}

impl HlcReport {
    pub fn first_failure(&self) -> Option<usize> {
        self.rows.iter().find(|r| !r.isomorphism).map(|r| r.k)
    }
}

/// Rank of `[α] ↦ [ω^k ∧ α]` from `H^{n-k}` to `H^{n+k}` for each `k`.
pub fn hlc_check(spec: &LieAlgebraSpec, omega: &SymplecticForm) -> HlcReport {
    let n = spec.n();
    let rows: Vec<HlcRow> = (0..=n)
        .map(|k| {
            let source = cohomology(spec, n - k);
            let target = cohomology(spec, n + k);
            let wk = power(omega.form(), k);
            let images: Vec<Vec<GaussianRational>> = source
                .representatives()
                .iter()
                .map(|a| target.class_coordinates(&wk.wedge(a)).expect("closed image"))
                .collect();
            let rank = Matrix::from_row_vectors(target.dim(), &images).rank();
            HlcRow {
                k,
                source_dim: source.dim(),
                target_dim: target.dim(),
                rank,
                isomorphism: rank == source.dim() && rank == target.dim(),
            }
        })
        .collect();
    let holds = rows.iter().all(|r| r.isomorphism);
    HlcReport { rows, holds }
}
