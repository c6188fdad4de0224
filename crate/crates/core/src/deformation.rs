//! Deformed structures: the Nakamura family on Iwasawa-type algebras and
//! curves `J_t = (1 - tL) J (1 - tL)⁻¹` through a given `J`.

use std::fmt;

use serde::Serialize;

use crate::almost_complex::{verdicts_all_stages, pure_type_subgroups, AlmostComplexStructure, PureFullVerdict};
use crate::error::DeformationError;
use crate::exterior::{one_form_row, one_forms_from_rows, KForm, LieAlgebraSpec, MultiIndex};
use crate::field::{GaussianRational, Rational};
use crate::linalg::Matrix;

type G = GaussianRational;

/// The six Nakamura parameters.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NakamuraParameters {
    pub t11: G,
    pub t12: G,
    pub t21: G,
    pub t22: G,
    pub t31: G,
    pub t32: G,
}

pub const PARAMETER_NAMES: [&str; 6] = ["t11", "t12", "t21", "t22", "t31", "t32"];

impl NakamuraParameters {
    pub fn zero() -> NakamuraParameters {
        NakamuraParameters::default()
    }

    pub fn get(&self, name: &str) -> Option<&G> {
        Some(match name {
            "t11" => &self.t11,
            "t12" => &self.t12,
            "t21" => &self.t21,
            "t22" => &self.t22,
            "t31" => &self.t31,
            "t32" => &self.t32,
            _ => return None,
        })
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut G> {
        Some(match name {
            "t11" => &mut self.t11,
            "t12" => &mut self.t12,
            "t21" => &mut self.t21,
            "t22" => &mut self.t22,
            "t31" => &mut self.t31,
            "t32" => &mut self.t32,
            _ => return None,
        })
    }

    /// Builder-style setter; panics on an unknown name.
    pub fn with(mut self, name: &str, value: G) -> NakamuraParameters {
        *self.get_mut(name).unwrap_or_else(|| panic!("unknown parameter {name}")) = value;
        self
    }

    pub fn entries(&self) -> [(&'static str, &G); 6] {
        [
            ("t11", &self.t11),
            ("t12", &self.t12),
            ("t21", &self.t21),
            ("t22", &self.t22),
            ("t31", &self.t31),
            ("t32", &self.t32),
        ]
    }

    /// `D(t) = t11 t22 - t12 t21`.
    pub fn d(&self) -> G {
        &(&self.t11 * &self.t22) - &(&self.t12 * &self.t21)
    }

    pub fn default_guard() -> Rational {
        Rational::new(1, 4)
    }

    /// Requires `|t_ij|² ≤ bound` for every entry.
    pub fn check_guard(&self, bound: &Rational) -> Result<(), DeformationError> {
        for (name, t) in self.entries() {
            if t.modulus_squared() > *bound {
                return Err(DeformationError::OutsideGuard { name, bound: bound.to_string() });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NakamuraClass {
    I,
    II,
    III,
}

impl fmt::Display for NakamuraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NakamuraClass::I => "(i)",
            NakamuraClass::II => "(ii)",
            NakamuraClass::III => "(iii)",
        })
    }
}

pub fn classify(t: &NakamuraParameters) -> NakamuraClass {
    if !t.d().is_zero() {
        NakamuraClass::III
    } else if [&t.t11, &t.t12, &t.t21, &t.t22].iter().all(|x| x.is_zero()) {
        NakamuraClass::I
    } else {
        NakamuraClass::II
    }
}

/// Closed-form constants of the coordinate inversion and of `dφ³_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NakamuraCoefficients {
    pub alpha: G,
    pub beta: G,
    pub gamma: G,
    pub lambda1: G,
    pub lambda2: G,
    pub lambda3: G,
    pub mu0: G,
    pub mu1: G,
    pub mu2: G,
    pub mu3: G,
    pub sigma_12: G,
    pub sigma_1_1bar: G,
    pub sigma_1_2bar: G,
    pub sigma_2_1bar: G,
    pub sigma_2_2bar: G,
}

impl NakamuraCoefficients {
    pub fn named(&self) -> [(&'static str, &G); 15] {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("lambda1", &self.lambda1),
            ("lambda2", &self.lambda2),
            ("lambda3", &self.lambda3),
            ("mu0", &self.mu0),
            ("mu1", &self.mu1),
            ("mu2", &self.mu2),
            ("mu3", &self.mu3),
            ("sigma_12", &self.sigma_12),
            ("sigma_1_1bar", &self.sigma_1_1bar),
            ("sigma_1_2bar", &self.sigma_1_2bar),
            ("sigma_2_1bar", &self.sigma_2_1bar),
            ("sigma_2_2bar", &self.sigma_2_2bar),
        ]
    }

    /// `σ₁₂ φ¹² + σ₁1̄ φ^{11̄} + σ₁2̄ φ^{12̄} + σ₂1̄ φ^{21̄} + σ₂2̄ φ^{22̄}` in the
    /// coframe `(φ¹, φ², φ³, φ̄¹, φ̄², φ̄³)`. This is `dφ³_t` only when `D(t) = 0`;
    /// for class (iii) the deformed structure equations come from the coframe itself.
    pub fn d_phi3(&self) -> KForm {
        KForm::from_terms(
            6,
            2,
            [
                (psi(&[1, 2]), self.sigma_12.clone()),
                (psi(&[1, 4]), self.sigma_1_1bar.clone()),
                (psi(&[1, 5]), self.sigma_1_2bar.clone()),
                (psi(&[2, 4]), self.sigma_2_1bar.clone()),
                (psi(&[2, 5]), self.sigma_2_2bar.clone()),
            ],
        )
    }
}

fn psi(idx: &[usize]) -> MultiIndex {
    MultiIndex::from_sorted(idx).expect("sorted")
}

pub fn nakamura_coefficients(t: &NakamuraParameters) -> Result<NakamuraCoefficients, DeformationError> {
    let one = G::one();
    let (t11, t12, t21, t22) = (&t.t11, &t.t12, &t.t21, &t.t22);
    let t22_sq: G = t22.modulus_squared().into();
    let t11_sq: G = t11.modulus_squared().into();

    let alpha_den = &(&one - &t22_sq) - &(t21 * &t12.conj());
    let alpha = alpha_den.inv().map_err(|_| DeformationError::SingularParameter("alpha"))?;
    let beta = &(t21 * &t11.conj()) + &(t22 * &t21.conj());
    let cross = &(t11 * &t12.conj()) + &(t12 * &t22.conj());
    let gamma_den = &(&(&one - &t11_sq) - &(&(&alpha * &beta) * &cross)) - &(t12 * &t21.conj());
    let gamma = gamma_den.inv().map_err(|_| DeformationError::SingularParameter("gamma"))?;

    let bracket = &(&one + &(&(&alpha * &t12.conj()) * t21)) + &(&alpha * &t22_sq);
    let lambda1 = -(t11 * &bracket);
    let lambda2 = &alpha * &cross;
    let lambda3 = -(t12 * &bracket);
    let beta_gamma = &beta * &gamma;
    let mu0 = beta_gamma.clone();
    let mu1 = &(&lambda1 * &beta_gamma) - t21;
    let mu2 = &one + &(&lambda2 * &beta_gamma);
    let mu3 = &(&lambda3 * &beta_gamma) - t22;

    let kappa = &gamma * &(&(&one + &(&(t21 * &t12.conj()) * &alpha)) + &(&t22_sq * &alpha));
    let sigma_12 = &(&(-gamma.clone()) + &(&(t21 * &lambda3.conj()) * &gamma.conj())) + &(&(t22 * &alpha.conj()) * &mu3.conj());
    Ok(NakamuraCoefficients {
        sigma_1_1bar: t21 * &kappa.conj(),
        sigma_1_2bar: t22 * &kappa.conj(),
        sigma_2_1bar: -(t11 * &kappa),
        sigma_2_2bar: -(t12 * &kappa),
        sigma_12,
        alpha,
        beta,
        gamma,
        lambda1,
        lambda2,
        lambda3,
        mu0,
        mu1,
        mu2,
        mu3,
    })
}

/// A Nakamura deformation, presented on a real coframe `x` in which `J_t` is standard.
#[derive(Clone, Debug)]
pub struct DeformedIwasawa {
    pub parameters: NakamuraParameters,
    pub class: NakamuraClass,
    pub coefficients: NakamuraCoefficients,
    /// Structure equations in the coframe `x^{2a-1} = Re φ^a_t`, `x^{2a} = Im φ^a_t`.
    pub spec: LieAlgebraSpec,
    pub j: AlmostComplexStructure,
    /// Rows: `x` in terms of the base coframe.
    pub coframe: Matrix,
    /// `φ¹_t, φ²_t, φ³_t` in terms of the base coframe.
    pub holomorphic_in_base: Vec<KForm>,
}

/// Checks `dφ¹ = dφ² = 0`, `dφ³ = -φ¹∧φ²` for the (1,0)-coframe of `j`.
pub fn is_iwasawa_shaped(spec: &LieAlgebraSpec, j: &AlmostComplexStructure) -> bool {
    if spec.dim() != 6 || j.dim() != 6 {
        return false;
    }
    let structure = j.psi_spec(spec);
    structure.d_coframe(1).is_zero()
        && structure.d_coframe(2).is_zero()
        && *structure.d_coframe(3) == KForm::from_terms(6, 2, [(psi(&[1, 2]), -G::one())])
}

/// The deformation with (1,0)-coframe
/// `φ^a_t = φ^a + t_a1 φ̄¹ + t_a2 φ̄²` for `a = 1, 2` and
/// `φ³_t = φ³ + t31 φ̄¹ + t32 φ̄² - D(t) φ̄³`.
pub fn deformed_iwasawa(
    base: &LieAlgebraSpec,
    base_j: &AlmostComplexStructure,
    t: &NakamuraParameters,
    guard: Option<&Rational>,
) -> Result<DeformedIwasawa, DeformationError> {
    if !is_iwasawa_shaped(base, base_j) {
        return Err(DeformationError::NotIwasawaShaped);
    }
    if let Some(bound) = guard {
        t.check_guard(bound)?;
    }
    let coefficients = nakamura_coefficients(t)?;
    let z = G::zero();
    let one = G::one();
    let in_psi = Matrix::from_rows(vec![
        vec![one.clone(), z.clone(), z.clone(), t.t11.clone(), t.t12.clone(), z.clone()],
        vec![z.clone(), one.clone(), z.clone(), t.t21.clone(), t.t22.clone(), z.clone()],
        vec![z.clone(), z.clone(), one.clone(), t.t31.clone(), t.t32.clone(), -t.d()],
    ]);
    let holo = in_psi.mul(base_j.psi_in_e());
    let mut real_rows = Vec::with_capacity(6);
    for a in 0..3 {
        let row = holo.row(a);
        real_rows.push(row.iter().map(|c| G::real(c.re.clone())).collect::<Vec<_>>());
        real_rows.push(row.iter().map(|c| G::real(c.im.clone())).collect::<Vec<_>>());
    }
    let coframe = Matrix::from_row_vectors(6, &real_rows);
    let spec = base
        .change_coframe(&coframe, base.names().to_vec())
        .map_err(|_| DeformationError::SingularParameter("coframe"))?;
    Ok(DeformedIwasawa {
        parameters: t.clone(),
        class: classify(t),
        coefficients,
        spec,
        j: AlmostComplexStructure::standard(6),
        coframe,
        holomorphic_in_base: one_forms_from_rows(&holo),
    })
}

/// Curve `t ↦ (1 - tL) J (1 - tL)⁻¹` through `J`.
#[derive(Clone, Debug)]
pub struct DeformationCurve {
    pub j: AlmostComplexStructure,
    pub l: Matrix,
}

impl DeformationCurve {
    pub fn new(j: AlmostComplexStructure, l: Matrix) -> Result<DeformationCurve, DeformationError> {
        check_anticommutes(j.matrix(), &l)?;
        Ok(DeformationCurve { j, l })
    }

    pub fn at(&self, t: &Rational) -> Result<AlmostComplexStructure, DeformationError> {
        curve_from_l(&self.j, &self.l, t)
    }
}

pub fn check_anticommutes(j: &Matrix, l: &Matrix) -> Result<(), DeformationError> {
    let s = l.mul(j).add(&j.mul(l));
    if s.is_zero() {
        Ok(())
    } else {
        Err(DeformationError::AnticommutationFailure { witness: s })
    }
}

pub fn curve_from_l(
    j: &AlmostComplexStructure,
    l: &Matrix,
    t: &Rational,
) -> Result<AlmostComplexStructure, DeformationError> {
    check_anticommutes(j.matrix(), l)?;
    let dim = j.dim();
    let shift = Matrix::identity(dim).sub(&l.scale(&G::real(t.clone())));
    let inv = shift.inverse().map_err(|_| DeformationError::SingularAt(t.to_string()))?;
    let jt = shift.mul(j.matrix()).mul(&inv);
    Ok(AlmostComplexStructure::from_matrix(jt)?)
}

/// The antisymmetric matrix `Γ_ij = γ(e_i, e_j)` of a 2-form.
pub fn two_form_matrix(gamma: &KForm) -> Matrix {
    let dim = gamma.dim();
    let mut m = Matrix::zeros(dim, dim);
    for (mono, c) in gamma.terms() {
        let idx = mono.indices();
        let (i, j) = (idx[0] - 1, idx[1] - 1);
        m[(i, j)] = c.clone();
        m[(j, i)] = -c.clone();
    }
    m
}

/// `V` with `γ(·,·) = g(V·,·)` for the coframe-orthonormal metric, and `L = ½ V J`.
pub fn l_from_anti_invariant(j: &AlmostComplexStructure, gamma: &KForm) -> Result<Matrix, DeformationError> {
    if !j.is_orthogonal() {
        return Err(DeformationError::NotHermitian);
    }
    if gamma.degree() != 2 || gamma.dim() != j.dim() {
        return Err(DeformationError::NotAntiInvariant { witness: gamma.clone() });
    }
    if !gamma.is_real() {
        return Err(DeformationError::NotAntiInvariant { witness: gamma.imag_part() });
    }
    let mixed = j.bigrade(gamma).component(1, 1);
    if !mixed.is_zero() {
        return Err(DeformationError::NotAntiInvariant { witness: mixed });
    }
    let v = representing_endomorphism(gamma);
    check_anticommutes(j.matrix(), &v)?;
    Ok(v.mul(j.matrix()).scale(&G::real(Rational::new(1, 2))))
}

/// `V = Γᵀ`, since `g(VX, Y) = Xᵀ Vᵀ Y`.
pub fn representing_endomorphism(gamma: &KForm) -> Matrix {
    two_form_matrix(gamma).transpose()
}

/// Summary of the stage-`k` subgroups along a curve.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct StageSummary {
    pub stage: usize,
    pub betti: usize,
    /// `dim_ℝ H^{(p,q),(q,p)}_ℝ` with labels such as `(2,0),(0,2)`.
    pub real_dims: Vec<(String, usize)>,
    /// Dimension of the `(k/2,k/2)` group (`h⁺` at stage 2).
    pub h_plus: usize,
    /// Sum of the remaining groups (`h⁻` at stage 2).
    pub h_minus: usize,
}

impl StageSummary {
    /// Whether `H^k` equals its middle-type group `H^{(k/2,k/2)}`.
    pub fn all_middle_type(&self) -> bool {
        self.h_plus == self.betti
    }
}

fn stage_summary(spec: &LieAlgebraSpec, j: &AlmostComplexStructure, k: usize) -> StageSummary {
    let groups = pure_type_subgroups(spec, j, k);
    let mut h_plus = 0;
    let mut h_minus = 0;
    let real_dims = groups
        .real
        .iter()
        .map(|((p, q), g)| {
            if p == q {
                h_plus += g.dim();
            } else {
                h_minus += g.dim();
            }
            (crate::almost_complex::pair_label(*p, *q), g.dim())
        })
        .collect();
    StageSummary { stage: k, betti: groups.basis.dim(), real_dims, h_plus, h_minus }
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub t: Rational,
    pub j: AlmostComplexStructure,
    pub stage2: StageSummary,
    pub dual: Option<StageSummary>,
    pub verdicts: Vec<PureFullVerdict>,
}

impl ScanRow {
    pub fn h_minus(&self) -> usize {
        self.stage2.h_minus
    }

    pub fn h_plus(&self) -> usize {
        self.stage2.h_plus
    }

    pub fn all_flags(&self) -> bool {
        self.verdicts.iter().all(PureFullVerdict::all_flags)
    }
}

#[derive(Clone, Debug)]
pub struct ScanTable {
    pub base_h_minus: usize,
    pub rows: Vec<ScanRow>,
    /// `h⁻(t) ≤ h⁻(0)` at every sample.
    pub upper_semicontinuous: bool,
}

/// Evaluates `J_t` at each sample and tabulates `h⁻`, `h⁺` and all-stage verdicts.
pub fn semicontinuity_scan(
    spec: &LieAlgebraSpec,
    j: &AlmostComplexStructure,
    l: &Matrix,
    samples: &[Rational],
    with_dual_stage: bool,
) -> Result<ScanTable, DeformationError> {
    check_anticommutes(j.matrix(), l)?;
    let base_h_minus = stage_summary(spec, j, 2).h_minus;
    let mut rows = Vec::with_capacity(samples.len());
    for t in samples {
        let jt = curve_from_l(j, l, t)?;
        let stage2 = stage_summary(spec, &jt, 2);
        let dual = with_dual_stage.then(|| stage_summary(spec, &jt, spec.dim() - 2));
        let verdicts = verdicts_all_stages(spec, &jt);
        rows.push(ScanRow { t: t.clone(), j: jt, stage2, dual, verdicts });
    }
    let upper_semicontinuous = rows.iter().all(|r| r.h_minus() <= base_h_minus);
    Ok(ScanTable { base_h_minus, rows, upper_semicontinuous })
}

/// The coefficient row of a 1-form, as real and imaginary parts.
pub fn split_row(f: &KForm) -> (Vec<Rational>, Vec<Rational>) {
    let row = one_form_row(f);
    (row.iter().map(|c| c.re.clone()).collect(), row.iter().map(|c| c.im.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn half() -> G {
        G::real(Rational::new(1, 2))
    }

    #[test]
    fn coefficients_at_zero() {
        let c = nakamura_coefficients(&NakamuraParameters::zero()).unwrap();
        assert_eq!(c.alpha, G::one());
        assert_eq!(c.gamma, G::one());
        assert!(c.beta.is_zero() && c.lambda1.is_zero() && c.lambda2.is_zero() && c.lambda3.is_zero());
        assert!(c.mu0.is_zero() && c.mu1.is_zero() && c.mu3.is_zero());
        assert_eq!(c.mu2, G::one());
        assert_eq!(c.sigma_12, -G::one());
        assert!(c.sigma_1_1bar.is_zero() && c.sigma_1_2bar.is_zero());
        assert!(c.sigma_2_1bar.is_zero() && c.sigma_2_2bar.is_zero());
    }

    #[test]
    fn alpha_at_t22_half() {
        let t = NakamuraParameters::zero().with("t22", half());
        let c = nakamura_coefficients(&t).unwrap();
        assert_eq!(c.alpha, G::real(Rational::new(4, 3)));
        // independent re-substitution
        assert_eq!(&c.alpha * &(&G::one() - &G::real(Rational::new(1, 4))), G::one());
    }

    #[test]
    fn singular_alpha_is_reported() {
        let t = NakamuraParameters::zero().with("t22", G::one());
        assert_eq!(nakamura_coefficients(&t), Err(DeformationError::SingularParameter("alpha")));
        let guard = NakamuraParameters::default_guard();
        assert!(t.check_guard(&guard).is_err());
        assert!(NakamuraParameters::zero().with("t22", half()).check_guard(&guard).is_ok());
    }

    #[test]
    fn classification() {
        let i = NakamuraParameters::zero().with("t31", half());
        assert_eq!(classify(&i), NakamuraClass::I);
        let ii = NakamuraParameters::zero().with("t21", half());
        assert_eq!(classify(&ii), NakamuraClass::II);
        let iii = NakamuraParameters::zero().with("t11", half()).with("t22", half());
        assert_eq!(classify(&iii), NakamuraClass::III);
        assert_eq!(iii.d(), G::real(Rational::new(1, 4)));
        assert_eq!(classify(&iii.clone().with("t32", G::i())), NakamuraClass::III);
    }

    #[test]
    fn zero_deformation_is_the_base() {
        let iw = catalog::iwasawa();
        let def = deformed_iwasawa(&iw.spec, &iw.j, &NakamuraParameters::zero(), None).unwrap();
        assert_eq!(def.spec, iw.spec);
        assert_eq!(def.coframe, Matrix::identity(6));
    }

    #[test]
    fn non_iwasawa_base_is_rejected() {
        let t = catalog::torus(6);
        let err = deformed_iwasawa(&t, &AlmostComplexStructure::standard(6), &NakamuraParameters::zero(), None);
        assert!(matches!(err, Err(DeformationError::NotIwasawaShaped)));
    }

    #[test]
    fn curve_at_zero_is_j() {
        let n6 = catalog::n6c();
        let l = l_from_anti_invariant(&n6.j, &catalog::n6c_anti_invariant()).unwrap();
        let j0 = curve_from_l(&n6.j, &l, &Rational::zero()).unwrap();
        assert_eq!(j0.matrix(), n6.j.matrix());
    }

    #[test]
    fn anticommutation_failure_carries_witness() {
        let j = AlmostComplexStructure::standard(4);
        let err = curve_from_l(&j, &Matrix::identity(4), &Rational::new(1, 2)).unwrap_err();
        match err {
            DeformationError::AnticommutationFailure { witness } => assert!(!witness.is_zero()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gamma_zero_gives_zero_l() {
        let j = AlmostComplexStructure::standard(6);
        let l = l_from_anti_invariant(&j, &KForm::zero(6, 2)).unwrap();
        assert!(l.is_zero());
    }

    #[test]
    fn invariant_form_is_not_anti_invariant() {
        let j = AlmostComplexStructure::standard(4);
        let w = KForm::monomial(4, &[1, 2], G::one());
        assert!(matches!(l_from_anti_invariant(&j, &w), Err(DeformationError::NotAntiInvariant { .. })));
    }
}
