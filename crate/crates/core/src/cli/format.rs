//! Text formats: extension files (formulations and subspace extensions),
//! section tables, symmetry certificates and witnesses. All rationals are
//! written as `p/q` (or `p` when the denominator is one); files round-trip
//! losslessly through parse and emit.

use std::fmt::Write as _;

use crate::exactnum::{RatMatrix, RatVector, Rational};
use crate::formulation::{Formulation, SubspaceExtension, SymmetryCertificate};
use crate::permgroup::{factorial, Permutation};
use crate::polytope::FacetSystem;
use crate::section::Section;
use crate::Error;

/// A parsed extension file: either a full formulation or a subspace
/// extension, with the target dimension and variable names.
#[derive(Debug, Clone, PartialEq)]
pub enum ExtensionFile {
    Formulation {
        n: usize,
        names: Vec<String>,
        formulation: Formulation,
    },
    Subspace {
        n: usize,
        names: Vec<String>,
        extension: SubspaceExtension,
    },
}

impl ExtensionFile {
    pub fn n(&self) -> usize {
        match self {
            ExtensionFile::Formulation { n, .. } | ExtensionFile::Subspace { n, .. } => *n,
        }
    }

    pub fn names(&self) -> &[String] {
        match self {
            ExtensionFile::Formulation { names, .. }
            | ExtensionFile::Subspace { names, .. } => names,
        }
    }
}

fn write_row(out: &mut String, tag: &str, row: &RatVector, rhs: Option<&Rational>) {
    out.push_str(tag);
    for entry in row.iter() {
        let _ = write!(out, " {entry}");
    }
    if let Some(rhs) = rhs {
        let _ = write!(out, " | {rhs}");
    }
    out.push('\n');
}

pub fn emit_extension(file: &ExtensionFile) -> String {
    let mut out = String::new();
    let (kind, n, names, d, m, eq, ineq, proj) = match file {
        ExtensionFile::Formulation {
            n,
            names,
            formulation,
        } => (
            "formulation",
            *n,
            names,
            formulation.dim(),
            formulation.target_dim(),
            formulation.equalities(),
            Some(formulation.inequalities()),
            formulation.projection(),
        ),
        ExtensionFile::Subspace { n, names, extension } => (
            "subspace",
            *n,
            names,
            extension.dim(),
            extension.target_dim(),
            extension.affine(),
            None,
            extension.projection(),
        ),
    };
    let _ = writeln!(out, "kind {kind}");
    let _ = writeln!(out, "n {n}");
    let _ = writeln!(out, "d {d}");
    let _ = writeln!(out, "m {m}");
    let _ = writeln!(out, "equalities {}", eq.0.nrows());
    let _ = writeln!(
        out,
        "inequalities {}",
        ineq.map_or(0, |(lhs, _)| lhs.nrows())
    );
    let _ = writeln!(out, "vars {}", names.join(" "));
    for i in 0..eq.0.nrows() {
        write_row(&mut out, "eq", eq.0.row(i), Some(&eq.1[i]));
    }
    if let Some((lhs, rhs)) = ineq {
        for i in 0..lhs.nrows() {
            write_row(&mut out, "ineq", lhs.row(i), Some(&rhs[i]));
        }
    }
    for v in 0..m {
        write_row(&mut out, "proj", proj.row(v), None);
    }
    out.push_str("end\n");
    out
}

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            iter: text.lines().enumerate(),
        }
    }

    /// Next nonempty line as (1-based line number, content).
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (idx, line) in self.iter.by_ref() {
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                return Some((idx + 1, trimmed));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), Error> {
        self.next()
            .ok_or_else(|| Error::parse(0, format!("unexpected end of file, expected {what}")))
    }
}

fn parse_keyed_usize(line: (usize, &str), key: &str) -> Result<usize, Error> {
    let (no, text) = line;
    let rest = text
        .strip_prefix(key)
        .ok_or_else(|| Error::parse(no, format!("expected `{key} <value>`")))?;
    rest.trim()
        .parse()
        .map_err(|_| Error::parse(no, format!("bad integer after `{key}`")))
}

fn parse_coeff_row(
    no: usize,
    text: &str,
    tag: &str,
    d: usize,
    with_rhs: bool,
) -> Result<(RatVector, Option<Rational>), Error> {
    let rest = text
        .strip_prefix(tag)
        .ok_or_else(|| Error::parse(no, format!("expected a `{tag}` row")))?;
    let (coeff_text, rhs_text) = if with_rhs {
        let (c, r) = rest
            .split_once('|')
            .ok_or_else(|| Error::parse(no, "missing `|` before the right-hand side"))?;
        (c, Some(r))
    } else {
        (rest, None)
    };
    let mut entries = Vec::with_capacity(d);
    for piece in coeff_text.split_whitespace() {
        entries.push(
            Rational::parse(piece).map_err(|_| Error::parse(no, format!("bad rational {piece:?}")))?,
        );
    }
    if entries.len() != d {
        return Err(Error::parse(
            no,
            format!("row has {} coefficients, expected {d}", entries.len()),
        ));
    }
    let rhs = match rhs_text {
        Some(r) => Some(
            Rational::parse(r.trim())
                .map_err(|_| Error::parse(no, format!("bad rational rhs {:?}", r.trim())))?,
        ),
        None => None,
    };
    Ok((RatVector::new(entries), rhs))
}

pub fn parse_extension(text: &str) -> Result<ExtensionFile, Error> {
    let mut lines = Lines::new(text);
    let (kind_no, kind_line) = lines.expect("`kind`")?;
    let kind = kind_line
        .strip_prefix("kind")
        .map(str::trim)
        .ok_or_else(|| Error::parse(kind_no, "expected `kind formulation|subspace`"))?;
    if kind != "formulation" && kind != "subspace" {
        return Err(Error::parse(kind_no, format!("unknown kind {kind:?}")));
    }
    let n = parse_keyed_usize(lines.expect("`n`")?, "n")?;
    let d = parse_keyed_usize(lines.expect("`d`")?, "d")?;
    let m = parse_keyed_usize(lines.expect("`m`")?, "m")?;
    let n_eq = parse_keyed_usize(lines.expect("`equalities`")?, "equalities")?;
    let n_ineq = parse_keyed_usize(lines.expect("`inequalities`")?, "inequalities")?;
    if kind == "subspace" && n_ineq != 0 {
        return Err(Error::parse(
            kind_no,
            "a subspace extension has no inequality rows",
        ));
    }
    let (vars_no, vars_line) = lines.expect("`vars`")?;
    let names: Vec<String> = vars_line
        .strip_prefix("vars")
        .ok_or_else(|| Error::parse(vars_no, "expected `vars <names>`"))?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    if names.len() != d {
        return Err(Error::parse(
            vars_no,
            format!("{} variable names, expected d = {d}", names.len()),
        ));
    }

    let mut eq_rows = Vec::with_capacity(n_eq);
    let mut eq_rhs = Vec::with_capacity(n_eq);
    for _ in 0..n_eq {
        let (no, text) = lines.expect("an `eq` row")?;
        let (row, rhs) = parse_coeff_row(no, text, "eq", d, true)?;
        eq_rows.push(row);
        eq_rhs.push(rhs.expect("rhs requested"));
    }
    let mut ineq_rows = Vec::with_capacity(n_ineq);
    let mut ineq_rhs = Vec::with_capacity(n_ineq);
    for _ in 0..n_ineq {
        let (no, text) = lines.expect("an `ineq` row")?;
        let (row, rhs) = parse_coeff_row(no, text, "ineq", d, true)?;
        ineq_rows.push(row);
        ineq_rhs.push(rhs.expect("rhs requested"));
    }
    let mut proj_rows = Vec::with_capacity(m);
    for _ in 0..m {
        let (no, text) = lines.expect("a `proj` row")?;
        let (row, _) = parse_coeff_row(no, text, "proj", d, false)?;
        proj_rows.push(row);
    }
    let (end_no, end_line) = lines.expect("`end`")?;
    if end_line != "end" {
        return Err(Error::parse(end_no, "expected `end`"));
    }
    if m != n {
        return Err(Error::parse(end_no, format!("m = {m} must equal n = {n}")));
    }

    let eq = (RatMatrix::new(eq_rows, d)?, RatVector::new(eq_rhs));
    let projection = RatMatrix::new(proj_rows, d)?;
    if kind == "formulation" {
        let ineq = (RatMatrix::new(ineq_rows, d)?, RatVector::new(ineq_rhs));
        Ok(ExtensionFile::Formulation {
            n,
            names,
            formulation: Formulation::new(eq, ineq, projection)?,
        })
    } else {
        Ok(ExtensionFile::Subspace {
            n,
            names,
            extension: SubspaceExtension::new(eq, projection)?,
        })
    }
}

/// The facet description of `Π_n` written as a trivial formulation of
/// itself: identity projection, the coordinate-sum equation, and each
/// subset inequality flipped into `<=` orientation.
pub fn facet_system_as_formulation(fs: &FacetSystem) -> Formulation {
    let n = fs.n();
    let (eq_coeffs, eq_rhs) = fs.equation();
    let eq = (
        RatMatrix::new(vec![eq_coeffs.clone()], n).expect("square"),
        RatVector::new(vec![eq_rhs.clone()]),
    );
    let mut ineq_rows = Vec::new();
    let mut ineq_rhs = Vec::new();
    for facet in fs.inequalities() {
        let mut row = RatVector::zero(n);
        for v in facet.members() {
            row[v] = Rational::from(-1i64);
        }
        ineq_rows.push(row);
        ineq_rhs.push(-&facet.rhs);
    }
    Formulation::new(
        eq,
        (
            RatMatrix::new(ineq_rows, n).expect("rows are n wide"),
            RatVector::new(ineq_rhs),
        ),
        RatMatrix::identity(n),
    )
    .expect("facet system is well formed")
}

/// Section tables: one line per vertex, `zeta-one-line : value,value,..`,
/// emitted in lexicographic vertex order.
pub fn emit_section(s: &Section) -> String {
    let mut out = String::new();
    for (k, zeta) in Permutation::enumerate(s.n())
        .expect("section construction enforced the cap")
        .iter()
        .enumerate()
    {
        let values: Vec<String> = s.value_at(k).iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "{zeta} : {}", values.join(","));
    }
    out
}

pub fn parse_section(text: &str) -> Result<Section, Error> {
    let mut rows: Vec<(usize, Permutation, RatVector)> = Vec::new();
    let mut n = None;
    for (idx, line) in text.lines().enumerate() {
        let no = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (perm_text, value_text) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(no, "expected `zeta : values`"))?;
        let perm_text = perm_text.trim();
        let degree = match n {
            Some(n) => n,
            None => {
                let commas = perm_text.matches(',').count();
                let inferred = commas + 1;
                n = Some(inferred);
                inferred
            }
        };
        let zeta = Permutation::parse(perm_text, degree)
            .map_err(|e| Error::parse(no, e.to_string()))?;
        let mut values = Vec::new();
        for piece in value_text.split(',') {
            let piece = piece.trim();
            values.push(
                Rational::parse(piece)
                    .map_err(|_| Error::parse(no, format!("bad rational {piece:?}")))?,
            );
        }
        rows.push((no, zeta, RatVector::new(values)));
    }
    let Some(n) = n else {
        return Err(Error::parse(0, "empty section file"));
    };
    if rows.len() != factorial(n) {
        return Err(Error::parse(
            0,
            format!("section has {} rows, expected n! = {}", rows.len(), factorial(n)),
        ));
    }
    let mut table: Vec<Option<RatVector>> = vec![None; rows.len()];
    for (no, zeta, value) in rows {
        let rank = zeta.lex_rank();
        if table[rank].is_some() {
            return Err(Error::parse(no, format!("vertex {zeta} listed twice")));
        }
        table[rank] = Some(value);
    }
    let table: Vec<RatVector> = table.into_iter().map(|row| row.expect("counted")).collect();
    Section::from_table(n, table)
}

pub fn emit_certificate(cert: &SymmetryCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "symmetry-certificate");
    let _ = writeln!(out, "pi {}", cert.pi);
    let _ = writeln!(out, "kappa {}", cert.kappa);
    let _ = writeln!(out, "rho-eq {}", cert.rho_eq);
    let _ = writeln!(out, "rho-ineq {}", cert.rho_ineq);
    out.push_str("end\n");
    out
}

pub fn parse_certificate(text: &str, f: &Formulation) -> Result<SymmetryCertificate, Error> {
    let mut lines = Lines::new(text);
    let (no, header) = lines.expect("`symmetry-certificate`")?;
    if header != "symmetry-certificate" {
        return Err(Error::parse(no, "expected `symmetry-certificate`"));
    }
    let mut field = |key: &str, n: usize| -> Result<Permutation, Error> {
        let (no, line) = lines.expect(key)?;
        let rest = line
            .strip_prefix(key)
            .ok_or_else(|| Error::parse(no, format!("expected `{key} <permutation>`")))?;
        Permutation::parse(rest.trim(), n).map_err(|e| Error::parse(no, e.to_string()))
    };
    let pi = field("pi", f.target_dim())?;
    let kappa = field("kappa", f.dim())?;
    let rho_eq = field("rho-eq", f.equalities().0.nrows())?;
    let rho_ineq = field("rho-ineq", f.inequalities().0.nrows())?;
    Ok(SymmetryCertificate {
        pi,
        kappa,
        rho_eq,
        rho_ineq,
    })
}

/// Default variable names for the generated files.
pub fn birkhoff_names(n: usize, with_x: bool) -> Vec<String> {
    let mut names = Vec::new();
    if with_x {
        for v in 0..n {
            names.push(format!("x{}", v + 1));
        }
    }
    for i in 0..n {
        for v in 0..n {
            names.push(format!("z{}_{}", i + 1, v + 1));
        }
    }
    names
}

pub fn coordinate_names(n: usize) -> Vec<String> {
    (0..n).map(|v| format!("x{}", v + 1)).collect()
}
