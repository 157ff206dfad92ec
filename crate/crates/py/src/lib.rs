//! Python bindings: catalog carriers, structural operations, enumeration
//! counts and the Hopf-module checks, with carriers passed around as opaque
//! handles and JSON definition files as the interchange format.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use bimeasure::algebra::dual_hopf;
use bimeasure::catalog;
use bimeasure::hopf_modules;
use bimeasure::matched_pair;
use bimeasure::measuring;
use bimeasure::schema::{self, DefinitionFile};
use bimeasure::structure_ops;
use bimeasure::{FieldSpec, Matrix};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(text: &str) -> PyResult<FieldSpec> {
    schema::parse_field_flag(text).map_err(err)
}

/// A finite-dimensional Hopf algebra handle.
#[pyclass]
#[derive(Clone)]
struct Carrier {
    h: bimeasure::algebra::HopfAlgebra,
}

#[pymethods]
impl Carrier {
    fn dim(&self) -> usize {
        self.h.dim()
    }

    fn field(&self) -> String {
        self.h.field().to_string()
    }

    fn validate(&self) -> bool {
        self.h.validate().is_ok()
    }

    fn is_commutative(&self) -> bool {
        self.h.algebra().is_commutative()
    }

    fn is_cocommutative(&self) -> bool {
        self.h.coalgebra().is_cocommutative()
    }

    fn dual(&self) -> PyResult<Carrier> {
        Ok(Carrier {
            h: dual_hopf(&self.h).map_err(err)?,
        })
    }

    fn abelianization(&self) -> PyResult<Carrier> {
        let qp = structure_ops::abelianization_hopf(&self.h).map_err(err)?;
        let h = qp
            .quotient_hopf()
            .ok_or_else(|| PyValueError::new_err("quotient carries no antipode"))?;
        Ok(Carrier { h })
    }

    fn cocommutative_part_dim(&self) -> PyResult<usize> {
        Ok(structure_ops::cocommutative_part_hopf(&self.h)
            .map_err(err)?
            .dim())
    }

    /// Dimension of the coinvariants of the regular Hopf module, which the
    /// fundamental isomorphism certifies to be one.
    fn regular_coinvariant_dim(&self) -> PyResult<usize> {
        let hm = hopf_modules::regular_module(&self.h);
        let iso = hopf_modules::fundamental_iso(&hm).map_err(err)?;
        let d = self.h.dim() * iso.data.dim();
        let id = Matrix::identity(self.h.field(), d);
        if iso.theta.mul(&iso.theta_inv) != id || iso.theta_inv.mul(&iso.theta) != id {
            return Err(PyValueError::new_err("fundamental map is not bijective"));
        }
        Ok(iso.data.dim())
    }

    fn to_json(&self) -> String {
        schema::encode_hopf(&self.h, None).to_json()
    }
}

/// Look up a catalog carrier, e.g. `carrier("kC3", "Fp:5")`.
#[pyfunction]
fn carrier(name: &str, field: &str) -> PyResult<Carrier> {
    let field = parse_field(field)?;
    let h = match name {
        "k" => catalog::ground_field_hopf(field),
        "kS3" => catalog::group_algebra(&catalog::symmetric_group_s3(), field).map_err(err)?,
        "kA5" => catalog::group_algebra(&catalog::alternating_group_a5(), field).map_err(err)?,
        "H4" => catalog::sweedler_h4(field).map_err(err)?,
        "truncated-poly" => match field {
            FieldSpec::Prime(p) => catalog::truncated_poly_hopf(p).map_err(err)?,
            FieldSpec::Rationals => {
                return Err(PyValueError::new_err("truncated-poly needs a prime field"))
            }
        },
        _ => {
            let n: usize = name
                .strip_prefix("kC")
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| PyValueError::new_err(format!("unknown carrier `{name}`")))?;
            catalog::group_algebra(&catalog::cyclic_group(n), field).map_err(err)?
        }
    };
    Ok(Carrier { h })
}

/// Parse a Hopf definition file.
#[pyfunction]
fn carrier_from_json(text: &str) -> PyResult<Carrier> {
    let def = DefinitionFile::from_json(text).map_err(err)?;
    Ok(Carrier {
        h: schema::decode_hopf(&def).map_err(err)?,
    })
}

/// Number of bimeasurings N (x) T -> k.
#[pyfunction]
#[pyo3(signature = (n, t, budget = 1 << 20))]
fn bimeasuring_count(n: &Carrier, t: &Carrier, budget: u64) -> PyResult<usize> {
    let field = n.h.field();
    let ground = catalog::ground_field_bialgebra(field).algebra;
    Ok(
        measuring::enumerate_bimeasurings(&n.h.bialgebra, &t.h.bialgebra, &ground, budget)
            .map_err(err)?
            .len(),
    )
}

/// The bismash product of the symmetric-group matched pair.
#[pyfunction]
fn s3_bismash(field: &str) -> PyResult<Carrier> {
    let mp = matched_pair::s3_matched_pair(parse_field(field)?).map_err(err)?;
    Ok(Carrier {
        h: matched_pair::bismash(&mp).map_err(err)?.hopf,
    })
}

/// Order of the skew-bimeasuring group of the symmetric-group pair.
#[pyfunction]
#[pyo3(signature = (field, budget = 1 << 20))]
fn s3_skew_group_order(field: &str, budget: u64) -> PyResult<usize> {
    let field = parse_field(field)?;
    let mp = matched_pair::s3_matched_pair(field).map_err(err)?;
    let ground = catalog::ground_field_bialgebra(field).algebra;
    Ok(matched_pair::enumerate_skew_bimeasurings(&mp, &ground, budget)
        .map_err(err)?
        .len())
}

#[pymodule]
fn bimeasure_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Carrier>()?;
    m.add_function(wrap_pyfunction!(carrier, m)?)?;
    m.add_function(wrap_pyfunction!(carrier_from_json, m)?)?;
    m.add_function(wrap_pyfunction!(bimeasuring_count, m)?)?;
    m.add_function(wrap_pyfunction!(s3_bismash, m)?)?;
    m.add_function(wrap_pyfunction!(s3_skew_group_order, m)?)?;
    Ok(())
}
