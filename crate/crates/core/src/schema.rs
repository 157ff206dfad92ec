//! On-disk definition files for carriers, pairings, matched pairs and Hopf
//! modules: one JSON schema for every kind, discriminated by a `kind` field,
//! with sparse coefficient lists and exact string coefficients.
//!
//! Coefficients are written as integers or `"p/q"` strings over the
//! rationals and as residues over a prime field; they always round-trip
//! exactly. Order-3 data (multiplication, comultiplication, actions,
//! pairings) is stored as `[i, j, k, "coeff"]` quadruples, linear maps as
//! `[row, col, "coeff"]` triples, functionals as `[i, "coeff"]` pairs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Algebra, Bialgebra, BilinearPairing, Coalgebra, HopfAlgebra};
use crate::field::{FieldSpec, Scalar};
use crate::hopf_modules::HopfModule;
use crate::linalg::{Matrix, Tensor3};
use crate::matched_pair::MatchedPair;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("cannot parse definition file: {0}")]
    Parse(String),
    #[error("missing member `{0}` for kind `{1}`")]
    Missing(&'static str, String),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("expected kind `{expected}`, found `{found}`")]
    WrongKind { expected: &'static str, found: String },
    #[error("index {index} out of range in `{member}` entry {entry} (dimension {dim})")]
    IndexOutOfRange {
        member: &'static str,
        entry: usize,
        index: usize,
        dim: usize,
    },
    #[error("bad coefficient `{text}` in `{member}` entry {entry}: {reason}")]
    BadCoefficient {
        member: &'static str,
        entry: usize,
        text: String,
        reason: String,
    },
    #[error("bad field description: {0}")]
    BadField(String),
    #[error("`basis_names` has {got} entries, dimension is {dim}")]
    BasisNamesMismatch { got: usize, dim: usize },
}

/// Ground field description, `{"kind": "Q"}` or `{"kind": "Fp", "p": 7}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind")]
pub enum FieldDef {
    Q,
    Fp { p: u64 },
}

impl FieldDef {
    pub fn to_spec(&self) -> Result<FieldSpec, SchemaError> {
        let spec = match self {
            FieldDef::Q => FieldSpec::Rationals,
            FieldDef::Fp { p } => FieldSpec::Prime(*p),
        };
        spec.validate()
            .map_err(|e| SchemaError::BadField(e.to_string()))?;
        Ok(spec)
    }

    pub fn from_spec(spec: FieldSpec) -> FieldDef {
        match spec {
            FieldSpec::Rationals => FieldDef::Q,
            FieldSpec::Prime(p) => FieldDef::Fp { p },
        }
    }
}

/// Parse a field flag of the shape `Q` or `Fp:7`.
pub fn parse_field_flag(text: &str) -> Result<FieldSpec, SchemaError> {
    if text == "Q" || text == "q" {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = text.strip_prefix("Fp:").or_else(|| text.strip_prefix("fp:")) {
        let p: u64 = p
            .parse()
            .map_err(|_| SchemaError::BadField(format!("bad prime in `{text}`")))?;
        return FieldDef::Fp { p }.to_spec();
    }
    Err(SchemaError::BadField(format!(
        "`{text}` is not `Q` or `Fp:<prime>`"
    )))
}

pub type Entry1 = (usize, String);
pub type Entry2 = (usize, usize, String);
pub type Entry3 = (usize, usize, usize, String);

/// The single schema for every carrier kind. Members irrelevant to a kind
/// are absent; decoding checks presence, index ranges and coefficients.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct DefinitionFile {
    pub field: Option<FieldDef>,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry3>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Entry1>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Entry3>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Entry1>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Entry2>>,
    /// pairing table psi(e_i, e_j) = sum_k coeff e_k, as [i, j, k, "coeff"]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Entry3>>,
    /// measuring carriers: coalgebra slot and measured algebra
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Box<DefinitionFile>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Box<DefinitionFile>>,
    /// bimeasuring carriers and the target algebra
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<Box<DefinitionFile>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<Box<DefinitionFile>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Box<DefinitionFile>>,
    /// matched pair actions n(t) and n^t, as [n, t, out, "coeff"]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub act_on_t: Option<Vec<Entry3>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub act_on_n: Option<Vec<Entry3>>,
    /// embedded matched pair, for skew pairing files
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<Box<DefinitionFile>>,
    /// Hopf module members: the Hopf algebra, action [h, m, out, "coeff"],
    /// coaction [row, col, "coeff"] with rows flattened (h, m)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<Box<DefinitionFile>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Entry3>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Entry2>>,
}

impl DefinitionFile {
    pub fn from_json(text: &str) -> Result<DefinitionFile, SchemaError> {
        serde_json::from_str(text).map_err(|e| SchemaError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("definition files always serialize")
    }

    fn field_spec(&self) -> Result<FieldSpec, SchemaError> {
        self.field
            .as_ref()
            .ok_or_else(|| SchemaError::Missing("field", self.kind.clone()))?
            .to_spec()
    }

    fn dim_or_err(&self) -> Result<usize, SchemaError> {
        let d = self
            .dim
            .ok_or_else(|| SchemaError::Missing("dim", self.kind.clone()))?;
        if let Some(names) = &self.basis_names {
            if names.len() != d {
                return Err(SchemaError::BasisNamesMismatch {
                    got: names.len(),
                    dim: d,
                });
            }
        }
        Ok(d)
    }
}

fn parse_coeff(
    field: FieldSpec,
    member: &'static str,
    entry: usize,
    text: &str,
) -> Result<Scalar, SchemaError> {
    field.parse(text).map_err(|e| SchemaError::BadCoefficient {
        member,
        entry,
        text: text.to_string(),
        reason: e.to_string(),
    })
}

fn check_index(
    member: &'static str,
    entry: usize,
    index: usize,
    dim: usize,
) -> Result<(), SchemaError> {
    if index >= dim {
        return Err(SchemaError::IndexOutOfRange {
            member,
            entry,
            index,
            dim,
        });
    }
    Ok(())
}

fn decode_tensor3(
    field: FieldSpec,
    member: &'static str,
    entries: &[Entry3],
    dims: (usize, usize, usize),
) -> Result<Tensor3, SchemaError> {
    let mut t = Tensor3::new(field, dims);
    for (e, (i, j, k, text)) in entries.iter().enumerate() {
        check_index(member, e, *i, dims.0)?;
        check_index(member, e, *j, dims.1)?;
        check_index(member, e, *k, dims.2)?;
        let v = parse_coeff(field, member, e, text)?;
        t.add_to(*i, *j, *k, &v);
    }
    Ok(t)
}

fn decode_vector(
    field: FieldSpec,
    member: &'static str,
    entries: &[Entry1],
    dim: usize,
) -> Result<Vec<Scalar>, SchemaError> {
    let mut v = crate::linalg::zero_vec(field, dim);
    for (e, (i, text)) in entries.iter().enumerate() {
        check_index(member, e, *i, dim)?;
        v[*i] = v[*i].add(&parse_coeff(field, member, e, text)?);
    }
    Ok(v)
}

fn decode_matrix(
    field: FieldSpec,
    member: &'static str,
    entries: &[Entry2],
    rows: usize,
    cols: usize,
) -> Result<Matrix, SchemaError> {
    let mut m = Matrix::zero(field, rows, cols);
    for (e, (r, c, text)) in entries.iter().enumerate() {
        check_index(member, e, *r, rows)?;
        check_index(member, e, *c, cols)?;
        let v = m.get(*r, *c).add(&parse_coeff(field, member, e, text)?);
        m.set(*r, *c, v);
    }
    Ok(m)
}

fn decode_pairing_table(
    field: FieldSpec,
    member: &'static str,
    entries: &[Entry3],
    dim_x: usize,
    dim_y: usize,
    dim_a: usize,
) -> Result<BilinearPairing, SchemaError> {
    let mut psi = BilinearPairing::zero(field, dim_x, dim_y, dim_a);
    for (e, (i, j, k, text)) in entries.iter().enumerate() {
        check_index(member, e, *i, dim_x)?;
        check_index(member, e, *j, dim_y)?;
        check_index(member, e, *k, dim_a)?;
        let mut row = psi.get(*i, *j).clone();
        row[*k] = row[*k].add(&parse_coeff(field, member, e, text)?);
        psi.set(*i, *j, row);
    }
    Ok(psi)
}

fn expect_kind(def: &DefinitionFile, expected: &'static str) -> Result<(), SchemaError> {
    if def.kind != expected {
        return Err(SchemaError::WrongKind {
            expected,
            found: def.kind.clone(),
        });
    }
    Ok(())
}

fn member<'d, T>(
    opt: &'d Option<T>,
    name: &'static str,
    kind: &str,
) -> Result<&'d T, SchemaError> {
    opt.as_ref()
        .ok_or_else(|| SchemaError::Missing(name, kind.to_string()))
}

fn decode_algebra_parts(def: &DefinitionFile) -> Result<Algebra, SchemaError> {
    let field = def.field_spec()?;
    let dim = def.dim_or_err()?;
    let mult = decode_tensor3(
        field,
        "mult",
        member(&def.mult, "mult", &def.kind)?,
        (dim, dim, dim),
    )?;
    let unit = decode_vector(field, "unit", member(&def.unit, "unit", &def.kind)?, dim)?;
    Ok(Algebra::new(field, dim, mult, unit))
}

fn decode_coalgebra_parts(def: &DefinitionFile) -> Result<Coalgebra, SchemaError> {
    let field = def.field_spec()?;
    let dim = def.dim_or_err()?;
    let comult = decode_tensor3(
        field,
        "comult",
        member(&def.comult, "comult", &def.kind)?,
        (dim, dim, dim),
    )?;
    let counit = decode_vector(
        field,
        "counit",
        member(&def.counit, "counit", &def.kind)?,
        dim,
    )?;
    Ok(Coalgebra::new(field, dim, comult, counit))
}

pub fn decode_algebra(def: &DefinitionFile) -> Result<Algebra, SchemaError> {
    expect_kind(def, "algebra")?;
    decode_algebra_parts(def)
}

pub fn decode_coalgebra(def: &DefinitionFile) -> Result<Coalgebra, SchemaError> {
    expect_kind(def, "coalgebra")?;
    decode_coalgebra_parts(def)
}

pub fn decode_bialgebra(def: &DefinitionFile) -> Result<Bialgebra, SchemaError> {
    if def.kind != "bialgebra" && def.kind != "hopf" {
        return Err(SchemaError::WrongKind {
            expected: "bialgebra",
            found: def.kind.clone(),
        });
    }
    Ok(Bialgebra::new(
        decode_algebra_parts(def)?,
        decode_coalgebra_parts(def)?,
    ))
}

pub fn decode_hopf(def: &DefinitionFile) -> Result<HopfAlgebra, SchemaError> {
    expect_kind(def, "hopf")?;
    let b = Bialgebra::new(decode_algebra_parts(def)?, decode_coalgebra_parts(def)?);
    let dim = b.dim();
    let antipode = decode_matrix(
        b.field(),
        "antipode",
        member(&def.antipode, "antipode", &def.kind)?,
        dim,
        dim,
    )?;
    Ok(HopfAlgebra::new(b, antipode))
}

pub fn decode_matched_pair(def: &DefinitionFile) -> Result<MatchedPair, SchemaError> {
    expect_kind(def, "matched_pair")?;
    let n = decode_hopf(member(&def.n, "n", &def.kind)?)?;
    let t = decode_hopf(member(&def.t, "t", &def.kind)?)?;
    let field = n.field();
    let (dn, dt) = (n.dim(), t.dim());
    let act_on_t = decode_pairing_table(
        field,
        "act_on_t",
        member(&def.act_on_t, "act_on_t", &def.kind)?,
        dn,
        dt,
        dt,
    )?;
    let act_on_n = decode_pairing_table(
        field,
        "act_on_n",
        member(&def.act_on_n, "act_on_n", &def.kind)?,
        dn,
        dt,
        dn,
    )?;
    Ok(MatchedPair {
        n,
        t,
        act_on_t,
        act_on_n,
    })
}

pub fn decode_hopf_module(def: &DefinitionFile) -> Result<HopfModule, SchemaError> {
    expect_kind(def, "hopf_module")?;
    let h = decode_hopf(member(&def.hopf, "hopf", &def.kind)?)?;
    let field = h.field();
    let dim = def.dim_or_err()?;
    let action = decode_pairing_table(
        field,
        "action",
        member(&def.action, "action", &def.kind)?,
        h.dim(),
        dim,
        dim,
    )?;
    let coaction = decode_matrix(
        field,
        "coaction",
        member(&def.coaction, "coaction", &def.kind)?,
        h.dim() * dim,
        dim,
    )?;
    Ok(HopfModule {
        h,
        dim,
        action,
        coaction,
    })
}

/// Decode the psi table of a pairing file given carrier dimensions.
pub fn decode_psi(
    def: &DefinitionFile,
    dim_x: usize,
    dim_y: usize,
    dim_a: usize,
) -> Result<BilinearPairing, SchemaError> {
    expect_kind(def, "pairing")?;
    let field = def.field_spec()?;
    decode_pairing_table(
        field,
        "psi",
        member(&def.psi, "psi", &def.kind)?,
        dim_x,
        dim_y,
        dim_a,
    )
}

fn default_names(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

fn encode_tensor3(t: &Tensor3) -> Vec<Entry3> {
    let mut out: Vec<Entry3> = t
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|((i, j, k), v)| (*i, *j, *k, v.to_coeff_string()))
        .collect();
    out.sort();
    out
}

fn encode_vector(v: &[Scalar]) -> Vec<Entry1> {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.to_coeff_string()))
        .collect()
}

fn encode_matrix(m: &Matrix) -> Vec<Entry2> {
    let mut out = Vec::new();
    for r in 0..m.rows {
        for c in 0..m.cols {
            let v = m.get(r, c);
            if !v.is_zero() {
                out.push((r, c, v.to_coeff_string()));
            }
        }
    }
    out
}

fn encode_pairing_table(psi: &BilinearPairing) -> Vec<Entry3> {
    let mut out = Vec::new();
    for i in 0..psi.dim_x {
        for j in 0..psi.dim_y {
            for (k, v) in psi.get(i, j).iter().enumerate() {
                if !v.is_zero() {
                    out.push((i, j, k, v.to_coeff_string()));
                }
            }
        }
    }
    out
}

pub fn encode_algebra(a: &Algebra, names: Option<Vec<String>>) -> DefinitionFile {
    DefinitionFile {
        field: Some(FieldDef::from_spec(a.field)),
        kind: "algebra".into(),
        dim: Some(a.dim),
        basis_names: Some(names.unwrap_or_else(|| default_names(a.dim))),
        mult: Some(encode_tensor3(&a.mult)),
        unit: Some(encode_vector(&a.unit)),
        ..DefinitionFile::default()
    }
}

pub fn encode_coalgebra(c: &Coalgebra, names: Option<Vec<String>>) -> DefinitionFile {
    DefinitionFile {
        field: Some(FieldDef::from_spec(c.field)),
        kind: "coalgebra".into(),
        dim: Some(c.dim),
        basis_names: Some(names.unwrap_or_else(|| default_names(c.dim))),
        comult: Some(encode_tensor3(&c.comult)),
        counit: Some(encode_vector(&c.counit)),
        ..DefinitionFile::default()
    }
}

pub fn encode_bialgebra(b: &Bialgebra, names: Option<Vec<String>>) -> DefinitionFile {
    DefinitionFile {
        field: Some(FieldDef::from_spec(b.field())),
        kind: "bialgebra".into(),
        dim: Some(b.dim()),
        basis_names: Some(names.unwrap_or_else(|| default_names(b.dim()))),
        mult: Some(encode_tensor3(&b.algebra.mult)),
        unit: Some(encode_vector(&b.algebra.unit)),
        comult: Some(encode_tensor3(&b.coalgebra.comult)),
        counit: Some(encode_vector(&b.coalgebra.counit)),
        ..DefinitionFile::default()
    }
}

pub fn encode_hopf(h: &HopfAlgebra, names: Option<Vec<String>>) -> DefinitionFile {
    let mut def = encode_bialgebra(&h.bialgebra, names);
    def.kind = "hopf".into();
    def.antipode = Some(encode_matrix(&h.antipode));
    def
}

pub fn encode_matched_pair(mp: &MatchedPair) -> DefinitionFile {
    DefinitionFile {
        field: Some(FieldDef::from_spec(mp.field())),
        kind: "matched_pair".into(),
        n: Some(Box::new(encode_hopf(&mp.n, None))),
        t: Some(Box::new(encode_hopf(&mp.t, None))),
        act_on_t: Some(encode_pairing_table(&mp.act_on_t)),
        act_on_n: Some(encode_pairing_table(&mp.act_on_n)),
        ..DefinitionFile::default()
    }
}

pub fn encode_hopf_module(hm: &HopfModule) -> DefinitionFile {
    DefinitionFile {
        field: Some(FieldDef::from_spec(hm.field())),
        kind: "hopf_module".into(),
        dim: Some(hm.dim),
        hopf: Some(Box::new(encode_hopf(&hm.h, None))),
        action: Some(encode_pairing_table(&hm.action)),
        coaction: Some(encode_matrix(&hm.coaction)),
        ..DefinitionFile::default()
    }
}

pub fn encode_psi(psi: &BilinearPairing) -> DefinitionFile {
    DefinitionFile {
        field: Some(FieldDef::from_spec(psi.field)),
        kind: "pairing".into(),
        psi: Some(encode_pairing_table(psi)),
        ..DefinitionFile::default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hopf_carriers_round_trip_through_json() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(5)] {
            for h in [
                catalog::group_algebra(&catalog::cyclic_group(3), field).unwrap(),
                catalog::sweedler_h4(field).unwrap(),
            ] {
                let text = encode_hopf(&h, None).to_json();
                let back = decode_hopf(&DefinitionFile::from_json(&text).unwrap()).unwrap();
                assert_eq!(back, h);
            }
        }
    }

    #[test]
    fn matched_pair_round_trips() {
        let mp = crate::matched_pair::s3_matched_pair(FieldSpec::Prime(7)).unwrap();
        let text = encode_matched_pair(&mp).to_json();
        let back = decode_matched_pair(&DefinitionFile::from_json(&text).unwrap()).unwrap();
        assert_eq!(back.act_on_t, mp.act_on_t);
        assert_eq!(back.act_on_n, mp.act_on_n);
        assert_eq!(back.n, mp.n);
        assert_eq!(back.t, mp.t);
    }

    #[test]
    fn hopf_module_round_trips() {
        let h = catalog::group_algebra(&catalog::cyclic_group(2), FieldSpec::Prime(5)).unwrap();
        let hm = crate::hopf_modules::regular_module(&h);
        let text = encode_hopf_module(&hm).to_json();
        let back = decode_hopf_module(&DefinitionFile::from_json(&text).unwrap()).unwrap();
        assert_eq!(back.coaction, hm.coaction);
        assert_eq!(back.action, hm.action);
    }

    #[test]
    fn rational_coefficients_survive_as_strings() {
        let field = FieldSpec::Rationals;
        let half = field.parse("1/2").unwrap();
        let mut psi = BilinearPairing::zero(field, 1, 1, 1);
        psi.set(0, 0, vec![half.clone()]);
        let text = encode_psi(&psi).to_json();
        assert!(text.contains("1/2"));
        let def = DefinitionFile::from_json(&text).unwrap();
        let back = decode_psi(&def, 1, 1, 1).unwrap();
        assert_eq!(back.get(0, 0)[0], half);
    }

    #[test]
    fn out_of_range_indices_are_rejected_with_a_location() {
        let text = r#"{
            "field": {"kind": "Fp", "p": 5},
            "kind": "algebra",
            "dim": 2,
            "mult": [[0, 0, 7, "1"]],
            "unit": [[0, "1"]]
        }"#;
        let def = DefinitionFile::from_json(text).unwrap();
        let err = decode_algebra(&def).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("mult") && msg.contains('7'), "{msg}");
    }

    #[test]
    fn bad_coefficients_and_missing_members_are_named() {
        let text = r#"{
            "field": {"kind": "Fp", "p": 5},
            "kind": "algebra",
            "dim": 1,
            "mult": [[0, 0, 0, "x"]],
            "unit": [[0, "1"]]
        }"#;
        let def = DefinitionFile::from_json(text).unwrap();
        assert!(decode_algebra(&def).unwrap_err().to_string().contains("x"));

        let text = r#"{"field": {"kind": "Q"}, "kind": "algebra", "dim": 1, "unit": [[0, "1"]]}"#;
        let def = DefinitionFile::from_json(text).unwrap();
        assert!(matches!(
            decode_algebra(&def).unwrap_err(),
            SchemaError::Missing("mult", _)
        ));
    }

    #[test]
    fn field_flags_parse() {
        assert_eq!(parse_field_flag("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(parse_field_flag("Fp:7").unwrap(), FieldSpec::Prime(7));
        assert!(parse_field_flag("Fp:6").is_err());
        assert!(parse_field_flag("R").is_err());
    }
}
