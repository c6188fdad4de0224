//! Line-oriented structure-equation documents.
//!
//! ```text
//! dim 4
//! basis e1 e2 e3 e4
//! d e4 = 1*e1^e2
//! J e1 -> -1*e2          # row of J: the pullback J*e1
//! holo 1*e1 + i*e2       # alternatively, (1,0)-forms
//! metric orthonormal
//! omega = 1*e1^e3 + 1*e2^e4
//! deform nakamura t21=1/2
//! deform curve L = [[0,1],[1,0]] samples = 0, 1/4
//! ```
//!
//! Scalars follow `p/q`, `p/q+r/s*i`, `r/s*i`, `i`; a term is
//! `[scalar*]name^name…`. Missing `d` lines mean a zero differential.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::almost_complex::AlmostComplexStructure;
use crate::error::{ComplexStructureError, ParseError};
use crate::exterior::{DSquared, KForm, LieAlgebraSpec, MultiIndex, MAX_DIM};
use crate::deformation::{NakamuraParameters, PARAMETER_NAMES};
use crate::field::{GaussianRational, Rational};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexDecl {
    /// Full matrix of `J`, given row by row as pullbacks of the coframe.
    Matrix(Matrix),
    Holomorphic(Vec<KForm>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricDecl {
    Orthonormal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformBlock {
    Nakamura(Box<NakamuraParameters>),
    Curve { l: Matrix, samples: Vec<Rational> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecDocument {
    pub spec: LieAlgebraSpec,
    pub complex: Option<ComplexDecl>,
    pub metric: Option<MetricDecl>,
    pub omega: Option<KForm>,
    pub deform: Option<DeformBlock>,
    /// Non-fatal diagnostics, such as a failing `d² = 0` check.
    pub warnings: Vec<String>,
}

impl SpecDocument {
    pub fn almost_complex(&self) -> Result<Option<AlmostComplexStructure>, ComplexStructureError> {
        match &self.complex {
            None => Ok(None),
            Some(ComplexDecl::Matrix(m)) => AlmostComplexStructure::from_matrix(m.clone()).map(Some),
            Some(ComplexDecl::Holomorphic(forms)) => AlmostComplexStructure::from_holomorphic(forms.clone()).map(Some),
        }
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Cursor<'a> {
        Cursor { chars: text.chars().collect(), pos: 0, line, _text: text }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: self.line, column: self.column(), message: message.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars[self.pos..].iter().take(n).copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn identifier(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            return None;
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    /// `digits ('/' digits)?`, without surrounding whitespace.
    fn unsigned_rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let start = self.pos;
        let Some(num) = self.digits() else { return Ok(None) };
        let mut text = num;
        if self.peek() == Some('/') {
            self.pos += 1;
            let Some(den) = self.digits() else {
                return Err(self.error("expected denominator"));
            };
            text = format!("{text}/{den}");
        }
        text.parse::<Rational>().map(Some).map_err(|_| {
            let mut e = self.error(format!("invalid scalar `{text}`"));
            if let ParseError::Syntax { column, .. } = &mut e {
                *column = start + 1;
            }
            e
        })
    }

    fn imaginary_unit_follows(&self) -> bool {
        self.peek() == Some('i') && !self.peek_at(1).is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
    }

    /// Greedy Gaussian scalar: `i`, `r*i`, `r`, `r±s*i`, `r±i`.
    fn scalar(&mut self) -> Result<Option<GaussianRational>, ParseError> {
        self.skip_ws();
        if self.imaginary_unit_follows() {
            self.pos += 1;
            return Ok(Some(GaussianRational::i()));
        }
        let Some(re) = self.unsigned_rational()? else { return Ok(None) };
        if self.peek() == Some('*') && self.peek_at(1) == Some('i') {
            let save = self.pos;
            self.pos += 1;
            if self.imaginary_unit_follows() {
                self.pos += 1;
                return Ok(Some(GaussianRational::new(Rational::zero(), re)));
            }
            self.pos = save;
        }
        if let Some(sign @ ('+' | '-')) = self.peek() {
            let save = self.pos;
            self.pos += 1;
            let im = if self.imaginary_unit_follows() {
                self.pos += 1;
                Some(Rational::one())
            } else {
                match self.unsigned_rational()? {
                    Some(r) if self.peek() == Some('*') && self.peek_at(1) == Some('i') => {
                        self.pos += 1;
                        if self.imaginary_unit_follows() {
                            self.pos += 1;
                            Some(r)
                        } else {
                            None
                        }
                    }
                    _ => None,
                }
            };
            match im {
                Some(im) => {
                    let im = if sign == '-' { -im } else { im };
                    return Ok(Some(GaussianRational::new(re, im)));
                }
                None => self.pos = save,
            }
        }
        Ok(Some(GaussianRational::real(re)))
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        match self.unsigned_rational()? {
            Some(r) if negative => Ok(-r),
            Some(r) => Ok(r),
            None => Err(self.error("expected a rational number")),
        }
    }

    fn rest(&self) -> String {
        self.chars[self.pos..].iter().collect()
    }
}

struct Context {
    names: Vec<String>,
}

impl Context {
    fn index(&self, name: &str, line: usize) -> Result<usize, ParseError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i + 1)
            .ok_or_else(|| ParseError::UnknownBasisName { line, name: name.to_string() })
    }

    fn dim(&self) -> usize {
        self.names.len()
    }
}

fn parse_expr(cur: &mut Cursor<'_>, ctx: &Context, degree: usize) -> Result<KForm, ParseError> {
    let dim = ctx.dim();
    let mut form = KForm::zero(dim, degree);
    if cur.at_end() {
        return Ok(form);
    }
    if cur.rest().trim() == "0" {
        cur.pos = cur.chars.len();
        return Ok(form);
    }
    let mut first = true;
    while !cur.at_end() {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.error("expected `+` or `-` between terms"));
        };
        first = false;
        let coefficient = match cur.scalar()? {
            Some(c) => {
                cur.expect('*')?;
                c
            }
            None => GaussianRational::one(),
        };
        let mut indices = Vec::with_capacity(degree);
        loop {
            let column = {
                cur.skip_ws();
                cur.column()
            };
            let Some(name) = cur.identifier() else {
                return Err(ParseError::Syntax { line: cur.line, column, message: "expected a basis name".into() });
            };
            indices.push(ctx.index(&name, cur.line)?);
            if !cur.eat('^') {
                break;
            }
        }
        if indices.len() != degree {
            return Err(cur.error(format!("expected a {degree}-form term, found a {}-form term", indices.len())));
        }
        let coefficient = if negative { -coefficient } else { coefficient };
        if let Some((sign, mono)) = MultiIndex::normalize(&indices) {
            let c = if sign < 0 { -coefficient } else { coefficient };
            form.add_term(mono, c);
        }
    }
    Ok(form)
}

fn parse_matrix(cur: &mut Cursor<'_>) -> Result<Vec<Vec<Rational>>, ParseError> {
    cur.expect('[')?;
    let mut rows = Vec::new();
    loop {
        cur.expect('[')?;
        let mut row = Vec::new();
        if !cur.eat(']') {
            loop {
                row.push(cur.signed_rational()?);
                if cur.eat(']') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        rows.push(row);
        if cur.eat(']') {
            break;
        }
        cur.expect(',')?;
    }
    Ok(rows)
}

fn parse_deform(cur: &mut Cursor<'_>, ctx: &Context) -> Result<DeformBlock, ParseError> {
    let kind = cur.identifier().ok_or_else(|| cur.error("expected `nakamura` or `curve`"))?;
    match kind.as_str() {
        "nakamura" => {
            let mut t = NakamuraParameters::zero();
            let mut seen = Vec::new();
            while !cur.at_end() {
                let column = cur.column();
                let key = cur.identifier().ok_or_else(|| cur.error("expected a parameter name"))?;
                if !PARAMETER_NAMES.contains(&key.as_str()) || seen.contains(&key) {
                    return Err(ParseError::Syntax {
                        line: cur.line,
                        column,
                        message: format!("unknown or repeated parameter `{key}`"),
                    });
                }
                cur.expect('=')?;
                cur.skip_ws();
                let column = cur.column();
                let start = cur.pos;
                while cur.peek().is_some_and(|c| !c.is_whitespace()) {
                    cur.pos += 1;
                }
                let token: String = cur.chars[start..cur.pos].iter().collect();
                let value: GaussianRational = token.parse().map_err(|_| ParseError::Syntax {
                    line: cur.line,
                    column,
                    message: format!("invalid scalar `{token}`"),
                })?;
                *t.get_mut(&key).expect("known") = value;
                seen.push(key);
            }
            Ok(DeformBlock::Nakamura(Box::new(t)))
        }
        "curve" => {
            if cur.identifier().as_deref() != Some("L") {
                return Err(cur.error("expected `L = [[...]]`"));
            }
            cur.expect('=')?;
            let line = cur.line;
            let rows = parse_matrix(cur)?;
            let dim = ctx.dim();
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(ParseError::DimensionMismatch { line, message: format!("L must be {dim}x{dim}") });
            }
            if cur.identifier().as_deref() != Some("samples") {
                return Err(cur.error("expected `samples = t, ...`"));
            }
            cur.expect('=')?;
            let mut samples = vec![cur.signed_rational()?];
            while cur.eat(',') {
                samples.push(cur.signed_rational()?);
            }
            if !cur.at_end() {
                return Err(cur.error("unexpected trailing input"));
            }
            Ok(DeformBlock::Curve { l: Matrix::from_rational_rows(rows), samples })
        }
        other => Err(cur.error(format!("unknown deformation kind `{other}`"))),
    }
}

fn valid_name(name: &str) -> bool {
    name != "i"
}

/// Parses a document; a failing `d² = 0` check is recorded as a warning.
pub fn parse(text: &str) -> Result<SpecDocument, ParseError> {
    let mut ctx: Option<Context> = None;
    let mut dim: Option<usize> = None;
    let mut d: BTreeMap<usize, KForm> = BTreeMap::new();
    let mut j_rows: BTreeMap<usize, KForm> = BTreeMap::new();
    let mut j_line = 0;
    let mut holo: Vec<KForm> = Vec::new();
    let mut holo_line = 0;
    let mut metric = None;
    let mut omega = None;
    let mut deform = None;

    fn ensure_ctx<'c>(ctx: &'c mut Option<Context>, dim: Option<usize>, cur: &Cursor<'_>) -> Result<&'c Context, ParseError> {
        if ctx.is_none() {
            let Some(dim) = dim else {
                return Err(ParseError::Syntax { line: cur.line, column: 1, message: "`dim` must come first".into() });
            };
            *ctx = Some(Context { names: (1..=dim).map(|i| format!("e{i}")).collect() });
        }
        Ok(ctx.as_ref().expect("set above"))
    }

    for (number, raw) in text.lines().enumerate() {
        let line_no = number + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor::new(content, line_no);
        if cur.at_end() {
            continue;
        }
        let keyword_column = cur.column();
        let keyword = cur.identifier().ok_or_else(|| cur.error("expected a directive"))?;
        match keyword.as_str() {
            "dim" => {
                if dim.is_some() {
                    return Err(ParseError::Syntax { line: line_no, column: keyword_column, message: "repeated `dim`".into() });
                }
                cur.skip_ws();
                let column = cur.column();
                let n: usize = cur
                    .digits()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| cur.error("expected a dimension"))?;
                if n == 0 || !n.is_multiple_of(2) || n > MAX_DIM {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        column,
                        message: format!("dimension must be even, positive and at most {MAX_DIM}"),
                    });
                }
                dim = Some(n);
            }
            "basis" => {
                let Some(n) = dim else {
                    return Err(ParseError::Syntax { line: line_no, column: keyword_column, message: "`dim` must come first".into() });
                };
                if ctx.is_some() {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        column: keyword_column,
                        message: "`basis` must precede its uses".into(),
                    });
                }
                let mut names = Vec::new();
                while !cur.at_end() {
                    let column = cur.column();
                    let name = cur.identifier().ok_or_else(|| cur.error("expected a basis name"))?;
                    if !valid_name(&name) || names.contains(&name) {
                        return Err(ParseError::Syntax {
                            line: line_no,
                            column,
                            message: format!("invalid or repeated basis name `{name}`"),
                        });
                    }
                    names.push(name);
                }
                if names.len() != n {
                    return Err(ParseError::DimensionMismatch {
                        line: line_no,
                        message: format!("`basis` lists {} names but dim is {n}", names.len()),
                    });
                }
                ctx = Some(Context { names });
            }
            "d" => {
                let c = ensure_ctx(&mut ctx, dim, &cur)?;
                let name = cur.identifier().ok_or_else(|| cur.error("expected a basis name"))?;
                let index = c.index(&name, line_no)?;
                cur.expect('=')?;
                let form = parse_expr(&mut cur, c, 2)?;
                if d.insert(index, form).is_some() {
                    return Err(ParseError::Syntax { line: line_no, column: keyword_column, message: format!("repeated `d {name}`") });
                }
            }
            "J" => {
                let c = ensure_ctx(&mut ctx, dim, &cur)?;
                let name = cur.identifier().ok_or_else(|| cur.error("expected a basis name"))?;
                let index = c.index(&name, line_no)?;
                if !cur.eat_str("->") {
                    return Err(cur.error("expected `->`"));
                }
                let form = parse_expr(&mut cur, c, 1)?;
                if j_rows.insert(index, form).is_some() {
                    return Err(ParseError::Syntax { line: line_no, column: keyword_column, message: format!("repeated `J {name}`") });
                }
                j_line = line_no;
            }
            "holo" => {
                let c = ensure_ctx(&mut ctx, dim, &cur)?;
                holo.push(parse_expr(&mut cur, c, 1)?);
                holo_line = line_no;
            }
            "metric" => {
                match cur.identifier().as_deref() {
                    Some("orthonormal") => metric = Some(MetricDecl::Orthonormal),
                    _ => return Err(cur.error("only `metric orthonormal` is supported")),
                }
            }
            "omega" => {
                let c = ensure_ctx(&mut ctx, dim, &cur)?;
                cur.expect('=')?;
                omega = Some(parse_expr(&mut cur, c, 2)?);
            }
            "deform" => {
                let c = ensure_ctx(&mut ctx, dim, &cur)?;
                if deform.is_some() {
                    return Err(ParseError::Syntax { line: line_no, column: keyword_column, message: "repeated `deform`".into() });
                }
                deform = Some(parse_deform(&mut cur, c)?);
            }
            other => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    column: keyword_column,
                    message: format!("unknown directive `{other}`"),
                })
            }
        }
        if !cur.at_end() {
            return Err(cur.error("unexpected trailing input"));
        }
    }

    let last_line = text.lines().count().max(1);
    let probe = Cursor::new("", last_line);
    let ctx = ensure_ctx(&mut ctx, dim, &probe)?;
    let n = ctx.dim();
    let d1: Vec<KForm> = (1..=n).map(|i| d.remove(&i).unwrap_or_else(|| KForm::zero(n, 2))).collect();
    let spec = LieAlgebraSpec::new(ctx.names.clone(), d1)
        .map_err(|e| ParseError::DimensionMismatch { line: last_line, message: e.to_string() })?;

    let complex = match (j_rows.is_empty(), holo.is_empty()) {
        (true, true) => None,
        (false, false) => {
            return Err(ParseError::Syntax {
                line: j_line.max(holo_line),
                column: 1,
                message: "J given both as a matrix and as a (1,0)-coframe".into(),
            })
        }
        (false, true) => {
            if j_rows.len() != n {
                return Err(ParseError::DimensionMismatch {
                    line: j_line,
                    message: format!("J needs {n} rows, found {}", j_rows.len()),
                });
            }
            let rows: Vec<Vec<GaussianRational>> =
                j_rows.values().map(crate::exterior::one_form_row).collect();
            Some(ComplexDecl::Matrix(Matrix::from_row_vectors(n, &rows)))
        }
        (true, false) => {
            if holo.len() * 2 != n {
                return Err(ParseError::DimensionMismatch {
                    line: holo_line,
                    message: format!("expected {} `holo` lines, found {}", n / 2, holo.len()),
                });
            }
            Some(ComplexDecl::Holomorphic(holo))
        }
    };

    let mut warnings = Vec::new();
    if let DSquared::Fail { index, witness } = spec.check_d_squared() {
        warnings.push(format!(
            "d^2 != 0: d(d {}) = {}",
            spec.names()[index - 1],
            render_expr(&witness, spec.names())
        ));
    }
    Ok(SpecDocument { spec, complex, metric, omega, deform, warnings })
}

fn is_negative_scalar(c: &GaussianRational) -> bool {
    c.re.is_negative() || (c.re.is_zero() && c.im.is_negative())
}

fn render_monomial(m: MultiIndex, names: &[String]) -> String {
    m.indices().iter().map(|&i| names[i - 1].as_str()).collect::<Vec<_>>().join("^")
}

/// Renders a form in the document syntax; `0` for the zero form.
pub fn render_expr(form: &KForm, names: &[String]) -> String {
    if form.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in form.terms().enumerate() {
        let negative = is_negative_scalar(c);
        let magnitude = if negative { -c.clone() } else { c.clone() };
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let mono = render_monomial(*m, names);
        if mono.is_empty() {
            let _ = write!(out, "{magnitude}");
        } else {
            let _ = write!(out, "{magnitude}*{mono}");
        }
    }
    out
}

fn render_rational_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rational_rows()
        .expect("real matrix")
        .iter()
        .map(|r| format!("[{}]", r.iter().map(Rational::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

/// Canonical text of a document; `parse(&render(doc)) == doc`.
pub fn render(doc: &SpecDocument) -> String {
    let names = doc.spec.names();
    let mut out = String::new();
    let _ = writeln!(out, "dim {}", doc.spec.dim());
    let _ = writeln!(out, "basis {}", names.join(" "));
    for (i, name) in names.iter().enumerate() {
        let _ = writeln!(out, "d {name} = {}", render_expr(doc.spec.d_coframe(i + 1), names));
    }
    match &doc.complex {
        None => {}
        Some(ComplexDecl::Matrix(m)) => {
            for (i, name) in names.iter().enumerate() {
                let row = KForm::from_terms(
                    names.len(),
                    1,
                    m.row(i)
                        .iter()
                        .enumerate()
                        .map(|(j, c)| (MultiIndex::from_sorted(&[j + 1]).expect("single index"), c.clone())),
                );
                let _ = writeln!(out, "J {name} -> {}", render_expr(&row, names));
            }
        }
        Some(ComplexDecl::Holomorphic(forms)) => {
            for f in forms {
                let _ = writeln!(out, "holo {}", render_expr(f, names));
            }
        }
    }
    if let Some(MetricDecl::Orthonormal) = doc.metric {
        out.push_str("metric orthonormal\n");
    }
    if let Some(omega) = &doc.omega {
        let _ = writeln!(out, "omega = {}", render_expr(omega, names));
    }
    match &doc.deform {
        None => {}
        Some(DeformBlock::Nakamura(t)) => {
            out.push_str("deform nakamura");
            for (name, value) in t.entries() {
                if !value.is_zero() {
                    let _ = write!(out, " {name}={value}");
                }
            }
            out.push('\n');
        }
        Some(DeformBlock::Curve { l, samples }) => {
            let samples: Vec<String> = samples.iter().map(Rational::to_string).collect();
            let _ = writeln!(out, "deform curve L = {} samples = {}", render_rational_matrix(l), samples.join(", "));
        }
    }
    out
}
