//! Exterior algebra over a fixed coframe and the Chevalley–Eilenberg differential.
//!
//! Coframe indices are 1-based in the public API (`e^1 … e^{2n}`), matching the
//! way structure equations are written. Monomials are stored as bit sets, so a
//! coframe has at most 32 elements.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::StructureError;
use crate::field::GaussianRational;
use crate::linalg::Matrix;

pub const MAX_DIM: usize = 32;

/// A strictly increasing multi-index `i₁ < … < iₖ`, stored as a bit set.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiIndex(u32);

impl MultiIndex {
    pub const EMPTY: MultiIndex = MultiIndex(0);

    pub fn from_bits(bits: u32) -> MultiIndex {
        MultiIndex(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// From strictly increasing 1-based indices. Returns `None` otherwise.
    pub fn from_sorted(indices: &[usize]) -> Option<MultiIndex> {
        let mut bits = 0u32;
        let mut last = 0;
        for &i in indices {
            if i <= last || i > MAX_DIM {
                return None;
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Some(MultiIndex(bits))
    }

    /// Sorts arbitrary 1-based indices, returning the permutation sign,
    /// or `None` when an index repeats.
    pub fn normalize(indices: &[usize]) -> Option<(i8, MultiIndex)> {
        let mut v = indices.to_vec();
        let mut sign = 1i8;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) || v.iter().any(|&i| i == 0 || i > MAX_DIM) {
            return None;
        }
        MultiIndex::from_sorted(&v).map(|m| (sign, m))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..MAX_DIM).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DIM).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn complement(self, dim: usize) -> MultiIndex {
        MultiIndex(!self.0 & full_mask(dim))
    }

    /// Sign and product of `e^self ∧ e^other`, or `None` if they share an index.
    pub fn wedge(self, other: MultiIndex) -> Option<(i8, MultiIndex)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            inversions += (self.0 >> j).count_ones();
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, MultiIndex(self.0 | other.0)))
    }
}

fn full_mask(dim: usize) -> u32 {
    if dim >= 32 {
        u32::MAX
    } else {
        (1u32 << dim) - 1
    }
}

impl Ord for MultiIndex {
    /// Lexicographic order on the increasing index tuples.
    fn cmp(&self, other: &MultiIndex) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let p = diff.trailing_zeros();
        let above = if p >= 31 { 0 } else { !((1u32 << (p + 1)) - 1) };
        let (lacks, flip) = if self.0 & (1 << p) != 0 { (other.0, false) } else { (self.0, true) };
        // The side holding p is smaller unless the other side stops before p.
        let ord = if lacks & above == 0 { Ordering::Greater } else { Ordering::Less };
        if flip {
            ord.reverse()
        } else {
            ord
        }
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &MultiIndex) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(ToString::to_string).collect();
        write!(f, "e{{{}}}", idx.join(","))
    }
}

/// All degree-`k` monomials of a `dim`-element coframe, in lexicographic order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub dim: usize,
    pub degree: usize,
    monomials: Vec<MultiIndex>,
    position: HashMap<MultiIndex, usize>,
}

impl MonomialBasis {
    pub fn new(dim: usize, degree: usize) -> MonomialBasis {
        assert!(dim <= MAX_DIM);
        let mut monomials = Vec::new();
        if degree <= dim {
            let mut current = Vec::with_capacity(degree);
            fn rec(start: usize, dim: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
                if cur.len() == k {
                    out.push(MultiIndex::from_sorted(cur).unwrap());
                    return;
                }
                for i in start..=dim {
                    cur.push(i);
                    rec(i + 1, dim, k, cur, out);
                    cur.pop();
                }
            }
            rec(1, dim, degree, &mut current, &mut monomials);
        }
        let position = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialBasis { dim, degree, monomials, position }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.monomials
    }

    pub fn position(&self, m: MultiIndex) -> Option<usize> {
        self.position.get(&m).copied()
    }
}

/// A homogeneous exterior form with Gaussian-rational coefficients.
///
/// Only nonzero coefficients are stored, so structural equality is equality of forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, GaussianRational>,
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> KForm {
        assert!(dim <= MAX_DIM, "coframe too large");
        KForm { dim, degree, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: GaussianRational) -> KForm {
        let mut f = KForm::zero(dim, 0);
        f.add_term(MultiIndex::EMPTY, c);
        f
    }

    /// The coframe element `e^i` (1-based).
    pub fn coframe(dim: usize, i: usize) -> KForm {
        KForm::monomial(dim, &[i], GaussianRational::one())
    }

    /// `c · e^{i₁} ∧ … ∧ e^{iₖ}` from indices in any order; repeated indices give zero.
    pub fn monomial(dim: usize, indices: &[usize], c: GaussianRational) -> KForm {
        assert!(indices.iter().all(|&i| i >= 1 && i <= dim), "index out of range");
        let mut f = KForm::zero(dim, indices.len());
        if let Some((sign, m)) = MultiIndex::normalize(indices) {
            f.add_term(m, if sign < 0 { -c } else { c });
        }
        f
    }

    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (MultiIndex, GaussianRational)>,
    ) -> KForm {
        let mut f = KForm::zero(dim, degree);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: MultiIndex) -> GaussianRational {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: MultiIndex, c: GaussianRational) {
        assert_eq!(m.degree(), self.degree, "monomial degree mismatch");
        assert!(m.bits() & !full_mask(self.dim) == 0, "monomial outside coframe");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check_compatible(&self, other: &KForm) {
        assert_eq!(self.dim, other.dim, "forms over different coframes");
        assert_eq!(self.degree, other.degree, "forms of different degree");
    }

    pub fn add(&self, other: &KForm) -> KForm {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> KForm {
        self.scale(&-GaussianRational::one())
    }

    pub fn scale(&self, c: &GaussianRational) -> KForm {
        if c.is_zero() {
            return KForm::zero(self.dim, self.degree);
        }
        KForm {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn wedge(&self, other: &KForm) -> KForm {
        assert_eq!(self.dim, other.dim, "forms over different coframes");
        let mut out = KForm::zero(self.dim, self.degree + other.degree);
        if self.degree + other.degree > self.dim {
            return out;
        }
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((sign, m)) = a.wedge(*b) {
                    let c = x * y;
                    out.add_term(m, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    pub fn conj(&self) -> KForm {
        KForm {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    /// A form is real iff conjugation fixes it.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }

    pub fn real_part(&self) -> KForm {
        KForm::from_terms(
            self.dim,
            self.degree,
            self.terms.iter().map(|(m, c)| (*m, GaussianRational::real(c.re.clone()))),
        )
    }

    pub fn imag_part(&self) -> KForm {
        KForm::from_terms(
            self.dim,
            self.degree,
            self.terms.iter().map(|(m, c)| (*m, GaussianRational::real(c.im.clone()))),
        )
    }

    /// Coefficient vector in the lexicographic monomial basis.
    pub fn to_vector(&self, basis: &MonomialBasis) -> Vec<GaussianRational> {
        assert_eq!((basis.dim, basis.degree), (self.dim, self.degree));
        let mut v = vec![GaussianRational::zero(); basis.len()];
        for (m, c) in &self.terms {
            v[basis.position(*m).expect("monomial in basis")] = c.clone();
        }
        v
    }

    pub fn from_vector(basis: &MonomialBasis, v: &[GaussianRational]) -> KForm {
        assert_eq!(v.len(), basis.len());
        KForm::from_terms(basis.dim, basis.degree, basis.monomials().iter().copied().zip(v.iter().cloned()))
    }

    /// Rewrites the form after substituting `e^i ↦ images[i-1]`, where the images are
    /// 1-forms over a (possibly different) coframe of the same size.
    pub fn substitute(&self, images: &[KForm]) -> KForm {
        assert_eq!(images.len(), self.dim);
        let target = images.first().map_or(self.dim, KForm::dim);
        let mut out = KForm::zero(target, self.degree);
        for (m, c) in &self.terms {
            let mut acc = KForm::scalar(target, c.clone());
            for i in m.indices() {
                acc = acc.wedge(&images[i - 1]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out.add(&acc);
        }
        out
    }

    /// Inner product `Σ a_I · conj(b_I)` for which the monomials are orthonormal.
    pub fn inner(&self, other: &KForm) -> GaussianRational {
        self.check_compatible(other);
        let mut acc = GaussianRational::zero();
        for (m, a) in &self.terms {
            if let Some(b) = other.terms.get(m) {
                acc += &(a * &b.conj());
            }
        }
        acc
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}){m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A real Lie algebra given by the differentials of a coframe (its structure equations).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebraSpec {
    names: Vec<String>,
    d1: Vec<KForm>,
}

/// Outcome of the `d ∘ d = 0` check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DSquared {
    Pass,
    /// `d(d e^index) = witness ≠ 0` for the first such coframe element.
    Fail { index: usize, witness: KForm },
}

impl DSquared {
    pub fn passed(&self) -> bool {
        matches!(self, DSquared::Pass)
    }
}

impl LieAlgebraSpec {
    /// Builds a spec from coframe names and the 2-forms `d e^i`. Nothing is
    /// checked beyond shapes; call [`LieAlgebraSpec::check_d_squared`] for the Jacobi identity.
    pub fn new(names: Vec<String>, d1: Vec<KForm>) -> Result<LieAlgebraSpec, StructureError> {
        let dim = names.len();
        if dim == 0 || !dim.is_multiple_of(2) || dim > MAX_DIM {
            return Err(StructureError::BadDimension(dim));
        }
        if d1.len() != dim {
            return Err(StructureError::BadDimension(d1.len()));
        }
        for f in &d1 {
            if f.dim() != dim || f.degree() != 2 {
                return Err(StructureError::BadDifferential);
            }
        }
        Ok(LieAlgebraSpec { names, d1 })
    }

    /// Coframe `e1 … e{dim}`.
    pub fn with_default_names(d1: Vec<KForm>) -> Result<LieAlgebraSpec, StructureError> {
        let names = (1..=d1.len()).map(|i| format!("e{i}")).collect();
        LieAlgebraSpec::new(names, d1)
    }

    pub fn abelian(dim: usize) -> LieAlgebraSpec {
        LieAlgebraSpec::with_default_names(vec![KForm::zero(dim, 2); dim]).expect("even dimension")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Half the real dimension.
    pub fn n(&self) -> usize {
        self.dim() / 2
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|p| p + 1)
    }

    /// `d e^i` (1-based).
    pub fn d_coframe(&self, i: usize) -> &KForm {
        &self.d1[i - 1]
    }

    pub fn d1(&self) -> &[KForm] {
        &self.d1
    }

    pub fn is_real(&self) -> bool {
        self.d1.iter().all(KForm::is_real)
    }

    /// The volume monomial `e^{1…2n}`.
    pub fn volume(&self) -> MultiIndex {
        MultiIndex::from_bits(full_mask(self.dim()))
    }

    /// Extends `d` from the coframe as a degree-one anti-derivation.
    pub fn differential(&self, form: &KForm) -> KForm {
        assert_eq!(form.dim(), self.dim(), "form over a different coframe");
        let mut out = KForm::zero(self.dim(), form.degree() + 1);
        if form.degree() >= self.dim() {
            return out;
        }
        for (m, c) in form.terms() {
            let idx = m.indices();
            for (r, &i) in idx.iter().enumerate() {
                let before = MultiIndex::from_sorted(&idx[..r]).unwrap();
                let after = MultiIndex::from_sorted(&idx[r + 1..]).unwrap();
                let sign_r = if r % 2 == 0 { c.clone() } else { -c };
                for (dm, dc) in self.d1[i - 1].terms() {
                    let Some((s1, left)) = before.wedge(*dm) else { continue };
                    let Some((s2, full)) = left.wedge(after) else { continue };
                    let coeff = &sign_r * dc;
                    out.add_term(full, if s1 * s2 < 0 { -coeff } else { coeff });
                }
            }
        }
        out
    }

    /// Matrix of `d: ∧^k → ∧^{k+1}` in the lexicographic monomial bases (columns = sources).
    pub fn differential_matrix(&self, k: usize) -> Matrix {
        let src = MonomialBasis::new(self.dim(), k);
        let dst = MonomialBasis::new(self.dim(), k + 1);
        let mut m = Matrix::zeros(dst.len(), src.len());
        for (j, mono) in src.monomials().iter().enumerate() {
            let image = self.differential(&KForm::from_terms(self.dim(), k, [(*mono, GaussianRational::one())]));
            for (dm, c) in image.terms() {
                m[(dst.position(*dm).unwrap(), j)] = c.clone();
            }
        }
        m
    }

    /// `d² = 0` holds on all forms iff it holds on the coframe.
    pub fn check_d_squared(&self) -> DSquared {
        for (i, de) in self.d1.iter().enumerate() {
            let dd = self.differential(de);
            if !dd.is_zero() {
                return DSquared::Fail { index: i + 1, witness: dd };
            }
        }
        DSquared::Pass
    }

    /// Re-expresses the structure equations in the coframe `f^j = Σ_i A[j][i] e^i`.
    pub fn change_coframe(&self, new_in_old: &Matrix, names: Vec<String>) -> Result<LieAlgebraSpec, StructureError> {
        let dim = self.dim();
        let old_in_new = new_in_old.inverse().map_err(|_| StructureError::DependentCoframe)?;
        let images = one_forms_from_rows(&old_in_new);
        let d1 = (0..dim)
            .map(|j| {
                let mut df = KForm::zero(dim, 2);
                for i in 0..dim {
                    let a = &new_in_old[(j, i)];
                    if !a.is_zero() {
                        df = df.add(&self.d1[i].scale(a));
                    }
                }
                df.substitute(&images)
            })
            .collect();
        LieAlgebraSpec::new(names, d1)
    }
}

/// Row `i` of `m` read as the 1-form `Σ_j m[i][j] e^{j+1}`.
pub fn one_forms_from_rows(m: &Matrix) -> Vec<KForm> {
    (0..m.rows())
        .map(|i| {
            KForm::from_terms(
                m.cols(),
                1,
                (0..m.cols()).map(|j| (MultiIndex::from_bits(1 << j), m[(i, j)].clone())),
            )
        })
        .collect()
}

/// Coefficient row of a 1-form.
pub fn one_form_row(f: &KForm) -> Vec<GaussianRational> {
    assert_eq!(f.degree(), 1);
    (1..=f.dim()).map(|i| f.coefficient(MultiIndex::from_sorted(&[i]).unwrap())).collect()
}
