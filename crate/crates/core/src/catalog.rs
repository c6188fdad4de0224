//! Built-in example documents.

use crate::almost_complex::AlmostComplexStructure;
use crate::deformation::{deformed_iwasawa, DeformedIwasawa, NakamuraParameters};
use crate::dsl::{parse, DeformBlock, SpecDocument};
use crate::error::{Error, Result};
use crate::exterior::{KForm, LieAlgebraSpec};
use crate::field::{GaussianRational, Rational};

pub const NAMES: [&str; 9] = [
    "torus2",
    "torus3",
    "kt4",
    "iwasawa",
    "solv6",
    "n6c",
    "iwasawa-def-i",
    "iwasawa-def-ii",
    "iwasawa-def-iii",
];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "torus2" => include_str!("../catalog/torus2.lie"),
        "torus3" => include_str!("../catalog/torus3.lie"),
        "kt4" => include_str!("../catalog/kt4.lie"),
        "iwasawa" => include_str!("../catalog/iwasawa.lie"),
        "solv6" => include_str!("../catalog/solv6.lie"),
        "n6c" => include_str!("../catalog/n6c.lie"),
        "iwasawa-def-i" => include_str!("../catalog/iwasawa-def-i.lie"),
        "iwasawa-def-ii" => include_str!("../catalog/iwasawa-def-ii.lie"),
        "iwasawa-def-iii" => include_str!("../catalog/iwasawa-def-iii.lie"),
        _ => return None,
    })
}

/// A document resolved into the structure it describes. For a Nakamura
/// document, `spec` and `j` are the deformed ones.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub document: SpecDocument,
    pub spec: LieAlgebraSpec,
    pub j: AlmostComplexStructure,
    pub omega: Option<KForm>,
    pub nakamura: Option<DeformedIwasawa>,
}

impl Example {
    /// Resolves a document; it must declare an almost-complex structure.
    pub fn from_document(name: &str, document: SpecDocument) -> Result<Example> {
        let j = document
            .almost_complex()?
            .ok_or_else(|| Error::Usage(format!("`{name}` declares no almost-complex structure")))?;
        let mut spec = document.spec.clone();
        let mut j = j;
        let mut nakamura = None;
        if let Some(DeformBlock::Nakamura(t)) = &document.deform {
            let def = deformed_iwasawa(&spec, &j, t, Some(&NakamuraParameters::default_guard()))?;
            spec = def.spec.clone();
            j = def.j.clone();
            nakamura = Some(def);
        }
        Ok(Example { name: name.to_string(), omega: document.omega.clone(), document, spec, j, nakamura })
    }

    /// `L` and the sample list of a curve block.
    pub fn curve(&self) -> Option<(&crate::linalg::Matrix, &[Rational])> {
        match &self.document.deform {
            Some(DeformBlock::Curve { l, samples }) => Some((l, samples)),
            _ => None,
        }
    }
}

pub fn load(name: &str) -> Result<Example> {
    let text = source(name).ok_or_else(|| Error::Usage(format!("unknown catalog entry `{name}`")))?;
    Example::from_document(name, parse(text)?)
}

fn builtin(name: &str) -> Example {
    load(name).unwrap_or_else(|e| panic!("catalog entry {name}: {e}"))
}

pub fn torus2() -> Example {
    builtin("torus2")
}

pub fn torus3() -> Example {
    builtin("torus3")
}

pub fn kt4() -> Example {
    builtin("kt4")
}

pub fn iwasawa() -> Example {
    builtin("iwasawa")
}

pub fn solv6() -> Example {
    builtin("solv6")
}

pub fn n6c() -> Example {
    builtin("n6c")
}

pub fn iwasawa_def_i() -> Example {
    builtin("iwasawa-def-i")
}

pub fn iwasawa_def_ii() -> Example {
    builtin("iwasawa-def-ii")
}

pub fn iwasawa_def_iii() -> Example {
    builtin("iwasawa-def-iii")
}

/// Abelian algebra of the given dimension.
pub fn torus(dim: usize) -> LieAlgebraSpec {
    LieAlgebraSpec::abelian(dim)
}

/// `N⁶(c)` structure equations for an arbitrary nonzero `c`.
pub fn n6c_spec(c: &Rational) -> LieAlgebraSpec {
    let c = GaussianRational::real(c.clone());
    let m = |i: &[usize], s: &GaussianRational| KForm::monomial(6, i, s.clone());
    let z = KForm::zero(6, 2);
    LieAlgebraSpec::with_default_names(vec![
        m(&[1, 3], &c),
        m(&[2, 3], &-c.clone()),
        z.clone(),
        m(&[4, 6], &c),
        m(&[5, 6], &-c.clone()),
        z,
    ])
    .expect("valid structure equations")
}

/// The anti-invariant form `e³∧e⁶ + e⁴∧e⁵` generating `H^{(2,0),(0,2)}` of `N⁶(c)`.
pub fn n6c_anti_invariant() -> KForm {
    KForm::monomial(6, &[3, 6], GaussianRational::one()).add(&KForm::monomial(6, &[4, 5], GaussianRational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::render;

    #[test]
    fn every_entry_loads_and_round_trips() {
        for name in NAMES {
            let ex = load(name).unwrap();
            assert!(ex.document.warnings.is_empty(), "{name}: {:?}", ex.document.warnings);
            assert_eq!(parse(&render(&ex.document)).unwrap(), ex.document, "{name}");
            assert!(ex.spec.check_d_squared().passed(), "{name}");
        }
    }

    #[test]
    fn n6c_file_matches_programmatic_spec() {
        assert_eq!(n6c().spec, n6c_spec(&Rational::one()));
    }

    #[test]
    fn unknown_entry() {
        assert_eq!(load("nope").unwrap_err().code(), "cli_frontend::Usage");
    }
}
