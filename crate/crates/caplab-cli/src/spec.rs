//! On-disk document formats: channel specs and density-matrix documents,
//! plus the small grammar of `--params` and `--range` flag values.
//!
//! Channel spec, builtin form:
//! ```json
//! {"builtin": "depolarizing", "params": {"p": 0.25, "d": 2}}
//! ```
//! Channel spec, explicit form (complex entries as `[re, im]` pairs; each
//! Kraus operator is `dim_out` rows of `dim_in` entries):
//! ```json
//! {"dim_in": 2, "dim_out": 2, "kraus": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}
//! ```
//! Density-matrix document (`matrix` is the row-major flattening):
//! ```json
//! {"dim": 2, "matrix": [[0.5,0],[0,0],[0,0],[0.5,0]]}
//! ```

use std::collections::BTreeMap;

use caplab::channels::{standard_channel, QuantumChannel};
use caplab::qmat::{ComplexMatrix, DensityMatrix};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BuiltinDoc {
    builtin: String,
    #[serde(default)]
    params: BTreeMap<String, f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitDoc {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

/// A parsed channel document, before semantic validation.
#[derive(Debug)]
pub enum ChannelSpec {
    Builtin {
        family: String,
        params: BTreeMap<String, f64>,
    },
    Explicit {
        dim_in: usize,
        dim_out: usize,
        kraus: Vec<Vec<Vec<[f64; 2]>>>,
    },
}

impl ChannelSpec {
    /// Parses the document text, reporting syntax errors with line/column
    /// context and structural errors with field context.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::Document(format!("channel spec: {e}")))?;
        let object = value
            .as_object()
            .ok_or_else(|| CliError::Document("channel spec: expected a JSON object".into()))?;
        if object.contains_key("builtin") {
            let doc: BuiltinDoc = serde_json::from_value(value.clone())
                .map_err(|e| CliError::Document(format!("channel spec: {e}")))?;
            Ok(ChannelSpec::Builtin {
                family: doc.builtin,
                params: doc.params,
            })
        } else if object.contains_key("kraus") {
            let doc: ExplicitDoc = serde_json::from_value(value.clone())
                .map_err(|e| CliError::Document(format!("channel spec: {e}")))?;
            Ok(ChannelSpec::Explicit {
                dim_in: doc.dim_in,
                dim_out: doc.dim_out,
                kraus: doc.kraus,
            })
        } else {
            Err(CliError::Document(
                "channel spec: expected either a \"builtin\" field or \
                 \"dim_in\"/\"dim_out\"/\"kraus\" fields"
                    .into(),
            ))
        }
    }

    /// Builds and validates the channel (explicit specs must pass the
    /// CPTP check; builtin specs must name a known family with in-range
    /// parameters).
    pub fn to_channel(&self) -> Result<QuantumChannel, CliError> {
        match self {
            ChannelSpec::Builtin { family, params } => Ok(standard_channel(family, params)?),
            ChannelSpec::Explicit {
                dim_in,
                dim_out,
                kraus,
            } => {
                let mut operators = Vec::with_capacity(kraus.len());
                for (k, rows) in kraus.iter().enumerate() {
                    if rows.len() != *dim_out {
                        return Err(CliError::Document(format!(
                            "channel spec: kraus[{k}] has {} rows, expected dim_out = {dim_out}",
                            rows.len()
                        )));
                    }
                    for (r, row) in rows.iter().enumerate() {
                        if row.len() != *dim_in {
                            return Err(CliError::Document(format!(
                                "channel spec: kraus[{k}] row {r} has {} entries, \
                                 expected dim_in = {dim_in}",
                                row.len()
                            )));
                        }
                    }
                    operators.push(ComplexMatrix::from_fn(*dim_out, *dim_in, |r, c| {
                        Complex64::new(rows[r][c][0], rows[r][c][1])
                    }));
                }
                Ok(QuantumChannel::new(*dim_in, *dim_out, operators, None)?)
            }
        }
    }
}

/// Parses and validates a channel document in one step.
pub fn parse_channel_spec(text: &str) -> Result<QuantumChannel, CliError> {
    ChannelSpec::parse(text)?.to_channel()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DensityDoc {
    dim: usize,
    matrix: Vec<[f64; 2]>,
}

/// Parses a density-matrix document; the matrix must be Hermitian,
/// unit-trace, and positive semidefinite.
pub fn parse_density_matrix(text: &str) -> Result<DensityMatrix, CliError> {
    let doc: DensityDoc = serde_json::from_str(text)
        .map_err(|e| CliError::Document(format!("density matrix: {e}")))?;
    let d = doc.dim;
    if doc.matrix.len() != d * d {
        return Err(CliError::Document(format!(
            "density matrix: got {} entries, expected dim^2 = {}",
            doc.matrix.len(),
            d * d
        )));
    }
    let m = ComplexMatrix::from_fn(d, d, |r, c| {
        let [re, im] = doc.matrix[r * d + c];
        Complex64::new(re, im)
    });
    Ok(DensityMatrix::new(m)?)
}

/// Parses `--params` values of the form `k=v,k=v,...` (empty allowed).
pub fn parse_params(text: &str) -> Result<BTreeMap<String, f64>, CliError> {
    let mut map = BTreeMap::new();
    for piece in text.split(',').filter(|p| !p.is_empty()) {
        let (key, value) = piece.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("--params entry {piece:?} is not of the form K=V"))
        })?;
        let parsed: f64 = value.parse().map_err(|_| {
            CliError::Usage(format!(
                "--params value for {key:?} is not a number: {value:?}"
            ))
        })?;
        map.insert(key.trim().to_string(), parsed);
    }
    Ok(map)
}

/// Parses `--range START,END,COUNT` into an inclusive evenly spaced grid.
pub fn parse_range(text: &str) -> Result<Vec<f64>, CliError> {
    let pieces: Vec<&str> = text.split(',').collect();
    if pieces.len() != 3 {
        return Err(CliError::Usage(format!(
            "--range wants START,END,COUNT, got {text:?}"
        )));
    }
    let start: f64 = pieces[0]
        .parse()
        .map_err(|_| CliError::Usage(format!("--range START is not a number: {:?}", pieces[0])))?;
    let end: f64 = pieces[1]
        .parse()
        .map_err(|_| CliError::Usage(format!("--range END is not a number: {:?}", pieces[1])))?;
    let count: usize = pieces[2].parse().map_err(|_| {
        CliError::Usage(format!("--range COUNT is not an integer: {:?}", pieces[2]))
    })?;
    if !start.is_finite() || !end.is_finite() {
        return Err(CliError::Usage("--range endpoints must be finite".into()));
    }
    if count == 0 {
        return Err(CliError::Usage("--range COUNT must be at least 1".into()));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (end - start) / (count - 1) as f64;
    Ok((0..count).map(|i| start + step * i as f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_spec_round_trips() {
        let ch =
            parse_channel_spec(r#"{"builtin":"depolarizing","params":{"p":0.25,"d":2}}"#).unwrap();
        assert_eq!(ch.dim_in(), 2);
        assert_eq!(ch.name(), Some("depolarizing(p=0.25, d=2)"));
    }

    #[test]
    fn explicit_identity_parses() {
        let ch = parse_channel_spec(
            r#"{"dim_in":2,"dim_out":2,"kraus":[[[[1,0],[0,0]],[[0,0],[1,0]]]]}"#,
        )
        .unwrap();
        assert_eq!((ch.dim_in(), ch.dim_out(), ch.kraus_rank()), (2, 2, 1));
    }

    #[test]
    fn non_trace_preserving_spec_reports_deviation() {
        // Single Kraus operator 0.5*I: E^dag E = 0.25*I, deviation 0.75.
        let err = parse_channel_spec(
            r#"{"dim_in":2,"dim_out":2,"kraus":[[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]]}"#,
        )
        .unwrap_err();
        assert_eq!(
            err.to_string(),
            "trace preservation violated, deviation 0.75"
        );
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = ChannelSpec::parse("{\"builtin\": \n oops}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "missing position context: {msg}");
    }

    #[test]
    fn missing_fields_are_named() {
        let err = ChannelSpec::parse(r#"{"dim_in":2,"kraus":[]}"#).unwrap_err();
        assert!(err.to_string().contains("dim_out"), "{err}");
        let err = ChannelSpec::parse(r#"{"dims":2}"#).unwrap_err();
        assert!(err.to_string().contains("builtin"), "{err}");
    }

    #[test]
    fn kraus_shape_mismatch_is_reported() {
        let err = parse_channel_spec(
            r#"{"dim_in":2,"dim_out":3,"kraus":[[[[1,0],[0,0]],[[0,0],[1,0]]]]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("kraus[0]"), "{err}");
    }

    #[test]
    fn density_document_parses_and_validates() {
        let rho =
            parse_density_matrix(r#"{"dim":2,"matrix":[[0.5,0],[0,0],[0,0],[0.5,0]]}"#).unwrap();
        assert_eq!(rho.dim(), 2);
        let err = parse_density_matrix(r#"{"dim":2,"matrix":[[0.9,0],[0,0],[0,0],[0.5,0]]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("trace"), "{err}");
    }

    #[test]
    fn params_grammar() {
        let map = parse_params("p=0.25,d=2").unwrap();
        assert_eq!(map["p"], 0.25);
        assert_eq!(map["d"], 2.0);
        assert!(parse_params("").unwrap().is_empty());
        assert!(parse_params("p:0.25").is_err());
        assert!(parse_params("p=abc").is_err());
    }

    #[test]
    fn range_grammar() {
        let grid = parse_range("0,1,21").unwrap();
        assert_eq!(grid.len(), 21);
        assert_eq!(grid[0], 0.0);
        assert_eq!(grid[20], 1.0);
        assert!((grid[1] - 0.05).abs() < 1e-12);
        assert_eq!(parse_range("0.3,0.9,1").unwrap(), vec![0.3]);
        assert!(parse_range("0,1").is_err());
        assert!(parse_range("0,1,0").is_err());
        assert!(parse_range("a,1,5").is_err());
    }
}
