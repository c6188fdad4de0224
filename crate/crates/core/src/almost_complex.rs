//! Almost-complex structures on a Lie algebra: the (p,q)-bigrading of forms,
//! pure-type cohomology subgroups, C∞-pure/full and pure/full verdicts,
//! integrability, Dolbeault numbers and the Frölicher dimension test.
//!
//! `J` is a real matrix acting on tangent vectors; it acts on 1-forms by
//! pullback, `J*φ = φ ∘ J`, so a 1-form with coefficient row `φ` is of type
//! (1,0) iff `φ J = i φ`.
//!
//! Homology-side notions (pure, full) are modeled at the invariant level by
//! viewing a form of degree `2n-k` as a current of dimension `k` through
//! `φ ↦ ∫ φ ∧ ·`. Bidegree `(p',q')` forms then give currents of bidimension
//! `(n-p', n-q')`, so "pure at stage k" is decided by the subgroups of
//! `H^{2n-k}`, paired with `H^k` through [`crate::cohomology::poincare_pairing`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cohomology::{cohomology, CohomologyBasis, CohomologySubspace};
use crate::error::ComplexStructureError;
use crate::exterior::{one_form_row, one_forms_from_rows, KForm, LieAlgebraSpec, MonomialBasis, MultiIndex};
use crate::field::{GaussianRational, Rational};
use crate::linalg::{Matrix, Subspace};

/// An almost-complex structure together with its (1,0)-coframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplexStructure {
    j: Matrix,
    holomorphic: Vec<KForm>,
    /// Rows: φ¹…φⁿ, φ̄¹…φ̄ⁿ in terms of the real coframe.
    psi_in_e: Matrix,
    e_in_psi: Matrix,
}

impl AlmostComplexStructure {
    /// From the matrix of `J`; the (1,0)-coframe is the `+i` eigenspace of `Jᵀ`,
    /// each vector normalized to have leading coefficient 1.
    pub fn from_matrix(j: Matrix) -> Result<AlmostComplexStructure, ComplexStructureError> {
        if !j.is_square() || !j.rows().is_multiple_of(2) {
            return Err(ComplexStructureError::NotAlmostComplex);
        }
        if !j.is_real() {
            return Err(ComplexStructureError::NotReal);
        }
        let dim = j.rows();
        if j.mul(&j) != Matrix::identity(dim).scale(&-GaussianRational::one()) {
            return Err(ComplexStructureError::NotAlmostComplex);
        }
        let shifted = j.transpose().sub(&Matrix::identity(dim).scale(&GaussianRational::i()));
        let rows: Vec<Vec<GaussianRational>> = shifted
            .nullspace()
            .into_iter()
            .map(|v| {
                let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero kernel vector").inv().unwrap();
                v.iter().map(|x| x * &lead).collect()
            })
            .collect();
        let holomorphic = one_forms_from_rows(&Matrix::from_row_vectors(dim, &rows));
        Self::assemble(j, holomorphic)
    }

    /// From `n` complex 1-forms spanning the (1,0)-space.
    pub fn from_holomorphic(holomorphic: Vec<KForm>) -> Result<AlmostComplexStructure, ComplexStructureError> {
        let dim = holomorphic.first().map_or(0, KForm::dim);
        if dim == 0 || holomorphic.len() * 2 != dim {
            return Err(ComplexStructureError::WrongCoframeSize { expected: dim / 2, found: holomorphic.len() });
        }
        if holomorphic.iter().any(|f| f.degree() != 1 || f.dim() != dim) {
            return Err(ComplexStructureError::WrongCoframeSize { expected: dim / 2, found: holomorphic.len() });
        }
        let psi = psi_matrix(&holomorphic);
        let psi_inv = psi.inverse().map_err(|_| ComplexStructureError::DependentCoframe)?;
        let n = dim / 2;
        let mut lambda = Matrix::zeros(dim, dim);
        for a in 0..dim {
            lambda[(a, a)] = if a < n { GaussianRational::i() } else { -GaussianRational::i() };
        }
        // Ψ J = Λ Ψ
        let j = psi_inv.mul(&lambda).mul(&psi);
        if !j.is_real() {
            return Err(ComplexStructureError::NotReal);
        }
        Self::assemble(j, holomorphic)
    }

    /// The structure with (1,0)-forms `e^{2a-1} + i e^{2a}`.
    pub fn standard(dim: usize) -> AlmostComplexStructure {
        let mut j = Matrix::zeros(dim, dim);
        for a in 0..dim / 2 {
            j[(2 * a + 1, 2 * a)] = GaussianRational::one();
            j[(2 * a, 2 * a + 1)] = -GaussianRational::one();
        }
        Self::from_matrix(j).expect("standard structure")
    }

    fn assemble(j: Matrix, holomorphic: Vec<KForm>) -> Result<AlmostComplexStructure, ComplexStructureError> {
        let dim = j.rows();
        if holomorphic.len() * 2 != dim {
            return Err(ComplexStructureError::WrongCoframeSize { expected: dim / 2, found: holomorphic.len() });
        }
        let psi_in_e = psi_matrix(&holomorphic);
        let e_in_psi = psi_in_e.inverse().map_err(|_| ComplexStructureError::DependentCoframe)?;
        Ok(AlmostComplexStructure { j, holomorphic, psi_in_e, e_in_psi })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    pub fn n(&self) -> usize {
        self.dim() / 2
    }

    pub fn holomorphic(&self) -> &[KForm] {
        &self.holomorphic
    }

    /// The complex coframe `(φ¹…φⁿ, φ̄¹…φ̄ⁿ)` as rows over the real coframe.
    pub fn psi_in_e(&self) -> &Matrix {
        &self.psi_in_e
    }

    /// `J*ω = ω(J·, …, J·)` for a form of any degree.
    pub fn pullback(&self, form: &KForm) -> KForm {
        form.substitute(&one_forms_from_rows(&self.j))
    }

    /// Whether `g(J·, J·) = g` for the metric making the coframe orthonormal.
    pub fn is_orthogonal(&self) -> bool {
        self.j.transpose().mul(&self.j) == Matrix::identity(self.dim())
    }

    /// Expresses a real-coframe form in the `ψ = (φ, φ̄)` coframe.
    pub fn to_psi(&self, form: &KForm) -> KForm {
        form.substitute(&one_forms_from_rows(&self.e_in_psi))
    }

    /// Inverse of [`AlmostComplexStructure::to_psi`].
    pub fn from_psi(&self, form: &KForm) -> KForm {
        form.substitute(&one_forms_from_rows(&self.psi_in_e))
    }

    /// Bidegree of a ψ-monomial.
    pub fn psi_type(&self, m: MultiIndex) -> (usize, usize) {
        let n = self.n();
        let low = (1u32 << n) - 1;
        ((m.bits() & low).count_ones() as usize, (m.bits() >> n).count_ones() as usize)
    }

    /// Splits a form into its (p,q)-components, each written in the real coframe.
    pub fn bigrade(&self, form: &KForm) -> BigradedForm {
        let in_psi = self.to_psi(form);
        let mut buckets: BTreeMap<(usize, usize), KForm> = BTreeMap::new();
        for (m, c) in in_psi.terms() {
            buckets
                .entry(self.psi_type(*m))
                .or_insert_with(|| KForm::zero(form.dim(), form.degree()))
                .add_term(*m, c.clone());
        }
        let components = buckets.into_iter().map(|(pq, f)| (pq, self.from_psi(&f))).collect();
        BigradedForm { dim: form.dim(), degree: form.degree(), components }
    }

    /// Basis of `∧^{p,q}` (products `φ^A ∧ φ̄^B`) written in the real coframe.
    pub fn type_basis(&self, p: usize, q: usize) -> Vec<KForm> {
        let dim = self.dim();
        MonomialBasis::new(dim, p + q)
            .monomials()
            .iter()
            .filter(|m| self.psi_type(**m) == (p, q))
            .map(|m| self.from_psi(&KForm::from_terms(dim, p + q, [(*m, GaussianRational::one())])))
            .collect()
    }

    /// Structure equations in the complex coframe ψ.
    pub fn psi_spec(&self, spec: &LieAlgebraSpec) -> LieAlgebraSpec {
        let n = self.n();
        let names = (1..=n).map(|a| format!("phi{a}")).chain((1..=n).map(|a| format!("phibar{a}"))).collect();
        spec.change_coframe(&self.psi_in_e, names).expect("ψ is a coframe")
    }

    /// Integrable iff no `d φ^a` has a (0,2)-component.
    pub fn check_integrability(&self, spec: &LieAlgebraSpec) -> Result<(), ComplexStructureError> {
        self.check_dim(spec)?;
        let psi = self.psi_spec(spec);
        for a in 1..=self.n() {
            let d = psi.d_coframe(a);
            let bad = KForm::from_terms(
                d.dim(),
                2,
                d.terms().filter(|(m, _)| self.psi_type(**m) == (0, 2)).map(|(m, c)| (*m, c.clone())),
            );
            if !bad.is_zero() {
                return Err(ComplexStructureError::NotIntegrable { index: a, bucket: self.from_psi(&bad) });
            }
        }
        Ok(())
    }

    pub fn is_integrable(&self, spec: &LieAlgebraSpec) -> bool {
        self.check_integrability(spec).is_ok()
    }

    fn check_dim(&self, spec: &LieAlgebraSpec) -> Result<(), ComplexStructureError> {
        if spec.dim() != self.dim() {
            return Err(ComplexStructureError::DimensionMismatch { expected: spec.dim(), found: self.dim() });
        }
        Ok(())
    }
}

fn psi_matrix(holomorphic: &[KForm]) -> Matrix {
    let dim = holomorphic[0].dim();
    let mut rows: Vec<Vec<GaussianRational>> = holomorphic.iter().map(one_form_row).collect();
    rows.extend(holomorphic.iter().map(|f| one_form_row(&f.conj())));
    Matrix::from_row_vectors(dim, &rows)
}

/// A form split by bidegree; components are written in the real coframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedForm {
    dim: usize,
    degree: usize,
    components: BTreeMap<(usize, usize), KForm>,
}

impl BigradedForm {
    pub fn component(&self, p: usize, q: usize) -> KForm {
        self.components.get(&(p, q)).cloned().unwrap_or_else(|| KForm::zero(self.dim, self.degree))
    }

    /// Nonzero bidegrees present.
    pub fn types(&self) -> Vec<(usize, usize)> {
        self.components.keys().copied().collect()
    }

    pub fn sum(&self) -> KForm {
        self.components.values().fold(KForm::zero(self.dim, self.degree), |acc, f| acc.add(f))
    }

    /// Whether all components lie in `{(p,q), (q,p)}` for a single pair.
    pub fn is_pure_pair(&self) -> bool {
        let mut pairs = self.components.keys().map(|&(p, q)| (p.max(q), p.min(q)));
        match pairs.next() {
            None => true,
            Some(first) => pairs.all(|x| x == first),
        }
    }
}

/// The unordered bidegree pairs `{(p,q),(q,p)}`, `p ≥ q`, occurring in degree `k`.
pub fn conjugate_pairs(n: usize, k: usize) -> Vec<(usize, usize)> {
    (0..=k).rev().map(|p| (p, k - p)).filter(|&(p, q)| p >= q && p <= n).collect()
}

/// All bidegrees `(p,q)` with `p + q = k`, `p, q ≤ n`, ordered by decreasing `p`.
pub fn bidegrees(n: usize, k: usize) -> Vec<(usize, usize)> {
    (0..=k).rev().map(|p| (p, k - p)).filter(|&(p, q)| p <= n && q <= n).collect()
}

/// Label such as `(2,0),(0,2)` or `(1,1)`.
pub fn pair_label(p: usize, q: usize) -> String {
    if p == q {
        format!("({p},{q})")
    } else {
        format!("({p},{q}),({q},{p})")
    }
}

/// Subspace of `H^k` spanned by closed forms lying in the span of the given bidegrees.
pub fn type_subgroup(
    spec: &LieAlgebraSpec,
    j: &AlmostComplexStructure,
    basis: &CohomologyBasis,
    types: &[(usize, usize)],
) -> CohomologySubspace {
    let k = basis.degree();
    let space: Vec<KForm> = types.iter().flat_map(|&(p, q)| j.type_basis(p, q)).collect();
    if space.is_empty() {
        return basis.zero_subspace();
    }
    let target = MonomialBasis::new(spec.dim(), k + 1);
    let columns: Vec<Vec<GaussianRational>> =
        space.iter().map(|f| spec.differential(f).to_vector(&target)).collect();
    let d = Matrix::from_row_vectors(target.len(), &columns).transpose();
    let closed: Vec<KForm> = d
        .nullspace()
        .iter()
        .map(|c| {
            c.iter().zip(&space).fold(KForm::zero(spec.dim(), k), |acc, (x, f)| {
                if x.is_zero() {
                    acc
                } else {
                    acc.add(&f.scale(x))
                }
            })
        })
        .collect();
    basis.span_in_cohomology(&closed).expect("closed forms of the right degree")
}

/// Pure-type subgroups of `H^k`: the real groups `H^{(p,q),(q,p)}_ℝ` (stored by
/// their complexification, which is conjugation-stable) and the complex `H^{(p,q)}`.
#[derive(Clone, Debug)]
pub struct StageGroups {
    pub degree: usize,
    pub basis: CohomologyBasis,
    /// Keyed by `(p,q)` with `p ≥ q`.
    pub real: Vec<((usize, usize), CohomologySubspace)>,
    pub complex: Vec<((usize, usize), CohomologySubspace)>,
}

impl StageGroups {
    pub fn real_group(&self, p: usize, q: usize) -> Option<&CohomologySubspace> {
        let key = (p.max(q), p.min(q));
        self.real.iter().find(|(pq, _)| *pq == key).map(|(_, g)| g)
    }

    pub fn complex_group(&self, p: usize, q: usize) -> Option<&CohomologySubspace> {
        self.complex.iter().find(|(pq, _)| *pq == (p, q)).map(|(_, g)| g)
    }

    /// Real dimension of `H^{(p,q),(q,p)}_ℝ`.
    pub fn real_dim(&self, p: usize, q: usize) -> usize {
        self.real_group(p, q).map_or(0, CohomologySubspace::dim)
    }
}

pub fn pure_type_subgroups(spec: &LieAlgebraSpec, j: &AlmostComplexStructure, k: usize) -> StageGroups {
    let basis = cohomology(spec, k);
    let n = spec.n();
    let real = conjugate_pairs(n, k)
        .into_iter()
        .map(|(p, q)| {
            let types = if p == q { vec![(p, q)] } else { vec![(p, q), (q, p)] };
            ((p, q), type_subgroup(spec, j, &basis, &types))
        })
        .collect();
    let complex =
        bidegrees(n, k).into_iter().map(|(p, q)| ((p, q), type_subgroup(spec, j, &basis, &[(p, q)]))).collect();
    StageGroups { degree: k, basis, real, complex }
}

/// Result of testing whether a family of subspaces forms a direct sum equal to the whole.
struct Decomposition {
    direct: bool,
    spanning: bool,
    /// A nonzero class in `G_i ∩ Σ_{j≠i} G_j`, if the sum is not direct.
    overlap: Option<Subspace>,
    /// A class outside the sum, if it does not span.
    missing: Option<Vec<GaussianRational>>,
}

fn decompose(ambient: usize, groups: &[&Subspace]) -> Decomposition {
    let total = groups.iter().fold(Subspace::zero(ambient), |acc, g| acc.join(g));
    let sum_dims: usize = groups.iter().map(|g| g.dim()).sum();
    let direct = sum_dims == total.dim();
    let mut overlap = None;
    if !direct {
        for i in 0..groups.len() {
            let others = groups
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(Subspace::zero(ambient), |acc, (_, g)| acc.join(g));
            let meet = groups[i].meet(&others);
            if !meet.is_zero() {
                overlap = Some(meet);
                break;
            }
        }
    }
    let spanning = total.dim() == ambient;
    let missing = if spanning {
        None
    } else {
        Matrix::identity(ambient).row_vectors().into_iter().find(|v| !total.contains(v))
    };
    Decomposition { direct, spanning, overlap, missing }
}

/// A failed flag together with a nonzero real class exhibiting the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub flag: &'static str,
    /// Degree of the cohomology group the witness lives in.
    pub degree: usize,
    pub form: KForm,
}

/// Pure/full verdict at one stage `k`.
#[derive(Clone, Debug)]
pub struct PureFullVerdict {
    pub stage: usize,
    pub betti: usize,
    pub cinf_pure: bool,
    pub cinf_full: bool,
    pub pure: bool,
    pub full: bool,
    pub complex_cinf_pure: bool,
    pub complex_cinf_full: bool,
    /// `dim_ℝ H^{(p,q),(q,p)}_ℝ` at stage `k`, keyed by `(p,q)` with `p ≥ q`.
    pub real_dims: Vec<((usize, usize), usize)>,
    /// `dim_ℂ H^{(p,q)}` at stage `k`.
    pub complex_dims: Vec<((usize, usize), usize)>,
    pub witnesses: Vec<Witness>,
}

impl PureFullVerdict {
    pub fn cinf_pure_and_full(&self) -> bool {
        self.cinf_pure && self.cinf_full
    }

    pub fn pure_and_full(&self) -> bool {
        self.pure && self.full
    }

    pub fn all_flags(&self) -> bool {
        self.cinf_pure && self.cinf_full && self.pure && self.full && self.complex_cinf_pure && self.complex_cinf_full
    }

    pub fn real_dim(&self, p: usize, q: usize) -> usize {
        let key = (p.max(q), p.min(q));
        self.real_dims.iter().find(|(pq, _)| *pq == key).map_or(0, |(_, d)| *d)
    }

    pub fn witness(&self, flag: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.flag == flag)
    }
}

struct RealDecomposition {
    direct: bool,
    spanning: bool,
    witnesses: (Option<KForm>, Option<KForm>),
}

fn real_decomposition(groups: &StageGroups) -> RealDecomposition {
    let basis = &groups.basis;
    let subspaces: Vec<&Subspace> = groups.real.iter().map(|(_, g)| g.coords()).collect();
    let dec = decompose(basis.dim(), &subspaces);
    let pure_witness = dec.overlap.map(|meet| {
        let sub = basis.subspace_from_coords(meet);
        basis.real_representatives(&sub).into_iter().next().expect("nonzero real class")
    });
    let full_witness = dec.missing.map(|v| basis.representative(&v));
    RealDecomposition { direct: dec.direct, spanning: dec.spanning, witnesses: (pure_witness, full_witness) }
}

/// Assembles the verdict at stage `k` from the subgroups at `k` and `2n - k`.
pub fn verdict_from_groups(stage: &StageGroups, dual: &StageGroups) -> PureFullVerdict {
    let k = stage.degree;
    let here = real_decomposition(stage);
    let there = real_decomposition(dual);
    let complex_spaces: Vec<&Subspace> = stage.complex.iter().map(|(_, g)| g.coords()).collect();
    let complex = decompose(stage.basis.dim(), &complex_spaces);

    let mut witnesses = Vec::new();
    let mut push = |flag: &'static str, degree: usize, form: Option<KForm>| {
        if let Some(form) = form {
            witnesses.push(Witness { flag, degree, form });
        }
    };
    push("cinf_pure", k, here.witnesses.0.clone());
    push("cinf_full", k, here.witnesses.1.clone());
    push("pure", dual.degree, there.witnesses.0.clone());
    push("full", dual.degree, there.witnesses.1.clone());
    if let Some(meet) = &complex.overlap {
        let sub = stage.basis.subspace_from_coords(meet.clone());
        push("complex_cinf_pure", k, sub.generators().first().cloned());
    }
    if let Some(v) = &complex.missing {
        push("complex_cinf_full", k, Some(stage.basis.representative(v)));
    }

    PureFullVerdict {
        stage: k,
        betti: stage.basis.dim(),
        cinf_pure: here.direct,
        cinf_full: here.spanning,
        pure: there.direct,
        full: there.spanning,
        complex_cinf_pure: complex.direct,
        complex_cinf_full: complex.spanning,
        real_dims: stage.real.iter().map(|(pq, g)| (*pq, g.dim())).collect(),
        complex_dims: stage.complex.iter().map(|(pq, g)| (*pq, g.dim())).collect(),
        witnesses,
    }
}

pub fn verdict(spec: &LieAlgebraSpec, j: &AlmostComplexStructure, k: usize) -> PureFullVerdict {
    let stage = pure_type_subgroups(spec, j, k);
    let dual_degree = spec.dim() - k;
    if dual_degree == k {
        return verdict_from_groups(&stage, &stage);
    }
    let dual = pure_type_subgroups(spec, j, dual_degree);
    verdict_from_groups(&stage, &dual)
}

/// Verdicts at every stage `0..=2n`, computing each stage's subgroups once.
pub fn verdicts_all_stages(spec: &LieAlgebraSpec, j: &AlmostComplexStructure) -> Vec<PureFullVerdict> {
    let groups: Vec<StageGroups> = (0..=spec.dim()).map(|k| pure_type_subgroups(spec, j, k)).collect();
    (0..=spec.dim()).map(|k| verdict_from_groups(&groups[k], &groups[spec.dim() - k])).collect()
}

/// `H^{p,q}_∂̄` of the invariant Dolbeault complex.
#[derive(Clone, Debug)]
pub struct DolbeaultGroup {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    /// `∂̄`-harmonic representatives, written in the real coframe.
    pub representatives: Vec<KForm>,
}

fn psi_type_basis(j: &AlmostComplexStructure, p: usize, q: usize) -> Vec<MultiIndex> {
    if p > j.n() || q > j.n() {
        return Vec::new();
    }
    MonomialBasis::new(j.dim(), p + q).monomials().iter().copied().filter(|m| j.psi_type(*m) == (p, q)).collect()
}

/// Matrix of `∂̄: ∧^{p,q} → ∧^{p,q+1}` in ψ-monomials.
fn dbar_matrix(psi: &LieAlgebraSpec, j: &AlmostComplexStructure, p: usize, q: usize) -> (Matrix, Vec<MultiIndex>) {
    let src = psi_type_basis(j, p, q);
    let dst = psi_type_basis(j, p, q + 1);
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (col, mono) in src.iter().enumerate() {
        let image = psi.differential(&KForm::from_terms(j.dim(), p + q, [(*mono, GaussianRational::one())]));
        for (dm, c) in image.terms() {
            if let Some(row) = dst.iter().position(|x| x == dm) {
                m[(row, col)] = c.clone();
            }
        }
    }
    (m, src)
}

/// Dolbeault cohomology `H^{p,q}`; refuses non-integrable structures.
pub fn dolbeault(
    spec: &LieAlgebraSpec,
    j: &AlmostComplexStructure,
    p: usize,
    q: usize,
) -> Result<DolbeaultGroup, ComplexStructureError> {
    j.check_integrability(spec)?;
    let psi = j.psi_spec(spec);
    Ok(dolbeault_in_psi(&psi, j, p, q))
}

fn dolbeault_in_psi(psi: &LieAlgebraSpec, j: &AlmostComplexStructure, p: usize, q: usize) -> DolbeaultGroup {
    let (d_here, src) = dbar_matrix(psi, j, p, q);
    if src.is_empty() {
        return DolbeaultGroup { p, q, dim: 0, representatives: Vec::new() };
    }
    let mut rows = d_here.row_vectors();
    if q > 0 {
        let (d_prev, _) = dbar_matrix(psi, j, p, q - 1);
        rows.extend(d_prev.adjoint().row_vectors());
    }
    let harmonic = Matrix::from_row_vectors(src.len(), &rows).nullspace();
    let representatives = harmonic
        .iter()
        .map(|v| {
            let f = KForm::from_terms(j.dim(), p + q, src.iter().copied().zip(v.iter().cloned()));
            j.from_psi(&f)
        })
        .collect();
    DolbeaultGroup { p, q, dim: harmonic.len(), representatives }
}

/// All Hodge numbers `h^{p,q}`, `0 ≤ p, q ≤ n`.
pub fn hodge_numbers(
    spec: &LieAlgebraSpec,
    j: &AlmostComplexStructure,
) -> Result<BTreeMap<(usize, usize), usize>, ComplexStructureError> {
    j.check_integrability(spec)?;
    let psi = j.psi_spec(spec);
    let n = j.n();
    let mut out = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n {
            out.insert((p, q), dolbeault_in_psi(&psi, j, p, q).dim);
        }
    }
    Ok(out)
}

/// Per-degree comparison of `Σ_{p+q=k} h^{p,q}` with `b_k`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FrolicherRow {
    pub degree: usize,
    pub hodge_sum: usize,
    pub betti: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FrolicherReport {
    pub rows: Vec<FrolicherRow>,
    /// Degeneration at `E₁` ⇔ equality in every degree.
    pub degenerate: bool,
}

pub fn frolicher_degenerate(
    spec: &LieAlgebraSpec,
    j: &AlmostComplexStructure,
) -> Result<FrolicherReport, ComplexStructureError> {
    let hodge = hodge_numbers(spec, j)?;
    let betti = crate::cohomology::betti_numbers(spec);
    let rows: Vec<FrolicherRow> = (0..=spec.dim())
        .map(|k| FrolicherRow {
            degree: k,
            hodge_sum: hodge.iter().filter(|((p, q), _)| p + q == k).map(|(_, h)| h).sum(),
            betti: betti[k],
        })
        .collect();
    let degenerate = rows.iter().all(|r| r.hodge_sum == r.betti);
    Ok(FrolicherReport { rows, degenerate })
}

/// A random almost-complex structure `P J₀ P⁻¹` for an invertible rational `P`.
pub fn conjugated_standard(dim: usize, p: &Matrix) -> Result<AlmostComplexStructure, ComplexStructureError> {
    let p_inv = p.inverse().map_err(|_| ComplexStructureError::DependentCoframe)?;
    let j0 = AlmostComplexStructure::standard(dim);
    AlmostComplexStructure::from_matrix(p.mul(j0.matrix()).mul(&p_inv))
}

/// Rational matrix entries, for rendering.
pub fn rational_rows(m: &Matrix) -> Vec<Vec<Rational>> {
    m.to_rational_rows().expect("real matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn e(dim: usize, idx: &[usize]) -> KForm {
        KForm::monomial(dim, idx, GaussianRational::one())
    }

    #[test]
    fn standard_coframe_is_e_plus_i_e() {
        let j = AlmostComplexStructure::standard(4);
        let i = GaussianRational::i();
        assert_eq!(j.holomorphic()[0], e(4, &[1]).add(&e(4, &[2]).scale(&i)));
        assert_eq!(j.holomorphic()[1], e(4, &[3]).add(&e(4, &[4]).scale(&i)));
        let again = AlmostComplexStructure::from_holomorphic(j.holomorphic().to_vec()).unwrap();
        assert_eq!(again.matrix(), j.matrix());
    }

    #[test]
    fn rejects_bad_matrices() {
        let not_j = Matrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert_eq!(AlmostComplexStructure::from_matrix(not_j), Err(ComplexStructureError::NotAlmostComplex));
        let i = GaussianRational::i();
        let phi = e(2, &[1]).add(&e(2, &[2]).scale(&i));
        // φ and φ̄ of a real form are dependent
        assert_eq!(
            AlmostComplexStructure::from_holomorphic(vec![e(2, &[1])]),
            Err(ComplexStructureError::DependentCoframe)
        );
        assert!(AlmostComplexStructure::from_holomorphic(vec![phi.clone(), phi]).is_err());
    }

    #[test]
    fn torus_two_form_types() {
        let j = AlmostComplexStructure::standard(4);
        let b = j.bigrade(&e(4, &[1, 2]));
        assert_eq!(b.types(), vec![(1, 1)]);
        let b = j.bigrade(&e(4, &[1, 3]));
        assert_eq!(b.types(), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(b.sum(), e(4, &[1, 3]));
        // Re(φ¹∧φ²)
        let re = e(4, &[1, 3]).sub(&e(4, &[2, 4]));
        assert_eq!(j.bigrade(&re).types(), vec![(0, 2), (2, 0)]);
    }

    #[test]
    fn j_invariance_matches_type_one_one() {
        let j = AlmostComplexStructure::standard(6);
        for idx in [[1, 2], [1, 3], [3, 6], [4, 5], [2, 5]] {
            let w = e(6, &idx);
            let b = j.bigrade(&w);
            let invariant = j.pullback(&w) == w;
            let no_anti = b.component(2, 0).is_zero() && b.component(0, 2).is_zero();
            assert_eq!(invariant, no_anti, "{idx:?}");
        }
    }

    #[test]
    fn n6c_anti_invariant_form() {
        let c = catalog::n6c();
        let gamma = e(6, &[3, 6]).add(&e(6, &[4, 5]));
        assert_eq!(c.j.bigrade(&gamma).types(), vec![(0, 2), (2, 0)]);
    }

    #[test]
    fn integrability() {
        let iw = catalog::iwasawa();
        assert!(iw.j.check_integrability(&iw.spec).is_ok());
        let n6 = catalog::n6c();
        match n6.j.check_integrability(&n6.spec) {
            Err(ComplexStructureError::NotIntegrable { index, bucket }) => {
                assert_eq!(index, 1);
                assert!(!bucket.is_zero());
            }
            other => panic!("expected non-integrable, got {other:?}"),
        }
        let d_phi2 = n6.spec.differential(&n6.j.holomorphic()[1]);
        assert!(!n6.j.bigrade(&d_phi2).component(0, 2).is_zero());
        assert!(dolbeault(&n6.spec, &n6.j, 1, 0).is_err());
        assert!(frolicher_degenerate(&n6.spec, &n6.j).is_err());
        let t = catalog::torus(6);
        assert!(AlmostComplexStructure::standard(6).is_integrable(&t));
    }

    #[test]
    fn torus_hodge_numbers_are_products_of_binomials() {
        let t = catalog::torus(6);
        let h = hodge_numbers(&t, &AlmostComplexStructure::standard(6)).unwrap();
        let binom = [1, 3, 3, 1];
        for ((p, q), v) in h {
            assert_eq!(v, binom[p] * binom[q]);
        }
    }

    #[test]
    fn pairs_and_bidegrees() {
        assert_eq!(conjugate_pairs(3, 2), vec![(2, 0), (1, 1)]);
        assert_eq!(conjugate_pairs(3, 4), vec![(3, 1), (2, 2)]);
        assert_eq!(conjugate_pairs(3, 3), vec![(3, 0), (2, 1)]);
        assert_eq!(bidegrees(3, 4), vec![(3, 1), (2, 2), (1, 3)]);
        assert_eq!(pair_label(2, 0), "(2,0),(0,2)");
    }
}
