//! File formats: thin serde DTOs for every object the command line reads
//! or writes, with exact decimal-free rational round-trips.
//!
//! Scalars travel as strings (`"3/4"`, `"2"`), parsed by the scalar type
//! itself, so a written file reparsed yields bit-identical values. The
//! DTOs only handle shape and number parsing; semantic validation (triangle
//! inequalities, Katětov bounds, group axioms) stays with the owning
//! modules so that a well-formed file with invalid content is a domain
//! verdict, not a parse failure.

use crate::katetov::KatetovFunction;
use crate::metric::FiniteMetricSpace;
use crate::roelcke::BiKatetovMatrix;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors turning text into typed objects: malformed JSON or an entry that
/// does not parse as a number, named by field.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("field {field}: cannot parse {text:?} as a rational")]
    BadNumber { field: String, text: String },
}

fn parse_scalar<S: Scalar>(text: &str, field: impl FnOnce() -> String) -> Result<S, IoError> {
    text.trim().parse().map_err(|_| IoError::BadNumber {
        field: field(),
        text: text.to_string(),
    })
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))
}

/// A finite metric space: `{"n": 3, "labels": [...]?, "d": [["0","1/2",...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub d: Vec<Vec<String>>,
}

impl MetricFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }

    /// The distance entries as scalars, errors named `d[i][j]`.
    pub fn entries<S: Scalar>(&self) -> Result<Vec<Vec<S>>, IoError> {
        self.d
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| parse_scalar(s, || format!("d[{i}][{j}]")))
                    .collect()
            })
            .collect()
    }

    pub fn from_space<S: Scalar>(space: &FiniteMetricSpace<S>) -> Self {
        MetricFile {
            n: space.n(),
            labels: space.labels().map(|l| l.to_vec()),
            d: space
                .rows()
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

/// An admissible distance profile: `{"base": [0,2], "values": ["1","3/2"]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KatetovFile {
    pub base: Vec<usize>,
    pub values: Vec<String>,
}

impl KatetovFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }

    pub fn values<S: Scalar>(&self) -> Result<Vec<S>, IoError> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, s)| parse_scalar(s, || format!("values[{i}]")))
            .collect()
    }

    pub fn from_function<S: Scalar>(f: &KatetovFunction<S>) -> Self {
        KatetovFile {
            base: f.base().to_vec(),
            values: f.values().iter().map(|v| v.to_string()).collect(),
        }
    }
}

/// A two-sided profile matrix: `{"left": metric, "right": metric, "p": [[...]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiKatetovFile {
    pub left: MetricFile,
    pub right: MetricFile,
    pub p: Vec<Vec<String>>,
}

impl BiKatetovFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }

    pub fn entries<S: Scalar>(&self) -> Result<Vec<Vec<S>>, IoError> {
        self.p
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| parse_scalar(s, || format!("p[{i}][{j}]")))
                    .collect()
            })
            .collect()
    }

    pub fn from_matrix<S: Scalar>(m: &BiKatetovMatrix<S>) -> Self {
        BiKatetovFile {
            left: MetricFile::from_space(m.left()),
            right: MetricFile::from_space(m.right()),
            p: m.rows()
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

/// A staircase relation: `{"n": 3, "cells": [[0,0],[0,1],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseFile {
    pub n: usize,
    pub cells: Vec<(usize, usize)>,
}

impl StaircaseFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }
}

/// Self-maps generating a semigroup or action: `{"n": 3, "generators": [[1,2,0],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsFile {
    pub n: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GeneratorsFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }
}

/// An integer window set: `{"window": 20, "members": [-4,0,2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowSetFile {
    pub window: i64,
    pub members: Vec<i64>,
}

impl WindowSetFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }
}

/// A Bohr specification: `{"thetas": ["1/2","1/3"], "eps": "1"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BohrFile {
    pub thetas: Vec<String>,
    pub eps: String,
}

impl BohrFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }

    pub fn thetas<S: Scalar>(&self) -> Result<Vec<S>, IoError> {
        self.thetas
            .iter()
            .enumerate()
            .map(|(i, s)| parse_scalar(s, || format!("thetas[{i}]")))
            .collect()
    }

    pub fn eps<S: Scalar>(&self) -> Result<S, IoError> {
        parse_scalar(&self.eps, || "eps".to_string())
    }
}

/// A finite group by its multiplication table: `{"table": [[0,1],[1,0]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub table: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        from_json(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::validate_metric;
    use crate::Rat;

    #[test]
    fn metric_files_round_trip_exactly() {
        let rows = vec![
            vec!["0".into(), "1/3".into(), "2/3".into()],
            vec!["1/3".into(), "0".into(), "1/3".into()],
            vec!["2/3".into(), "1/3".into(), "0".into()],
        ];
        let file = MetricFile {
            n: 3,
            labels: None,
            d: rows,
        };
        let space = validate_metric::<Rat>(file.entries().unwrap()).unwrap();
        let back = MetricFile::from_space(&space);
        assert_eq!(back, file);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(MetricFile::parse(&text).unwrap(), file);
    }

    #[test]
    fn bad_entries_name_their_field() {
        let file = MetricFile {
            n: 2,
            labels: None,
            d: vec![
                vec!["0".into(), "1..2".into()],
                vec!["1".into(), "0".into()],
            ],
        };
        assert_eq!(
            file.entries::<Rat>().err(),
            Some(IoError::BadNumber {
                field: "d[0][1]".into(),
                text: "1..2".into(),
            })
        );
    }

    #[test]
    fn malformed_json_is_reported() {
        assert!(matches!(
            MetricFile::parse("{\"n\": 2"),
            Err(IoError::Json(_))
        ));
        // A missing required field is named in the serde message.
        let err = MetricFile::parse("{\"n\": 2}").unwrap_err();
        let IoError::Json(message) = err else {
            panic!("expected a JSON error");
        };
        assert!(message.contains("d"), "message: {message}");
    }

    #[test]
    fn katetov_files_parse_values() {
        let file = KatetovFile {
            base: vec![0, 2],
            values: vec!["1".into(), "3/2".into()],
        };
        let values: Vec<Rat> = file.values().unwrap();
        assert_eq!(values[1], crate::scalar::Scalar::from_int_ratio(3, 2));
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(KatetovFile::parse(&text).unwrap(), file);
    }

    #[test]
    fn window_and_bohr_files_round_trip() {
        let set = WindowSetFile {
            window: 10,
            members: vec![-4, 0, 2],
        };
        let text = serde_json::to_string(&set).unwrap();
        assert_eq!(WindowSetFile::parse(&text).unwrap(), set);

        let bohr = BohrFile {
            thetas: vec!["1/2".into()],
            eps: "1".into(),
        };
        let eps: Rat = bohr.eps().unwrap();
        assert!(eps == crate::scalar::Scalar::from_int(1));
        let thetas: Vec<Rat> = bohr.thetas().unwrap();
        assert_eq!(thetas.len(), 1);
    }

    #[test]
    fn staircase_and_generator_files_parse() {
        let stair = StaircaseFile {
            n: 2,
            cells: vec![(0, 0), (1, 1), (2, 2)],
        };
        let text = serde_json::to_string(&stair).unwrap();
        assert_eq!(StaircaseFile::parse(&text).unwrap(), stair);
        assert!(text.contains("[[0,0],[1,1],[2,2]]"));

        let gens = GeneratorsFile {
            n: 3,
            generators: vec![vec![1, 2, 0]],
        };
        let text = serde_json::to_string(&gens).unwrap();
        assert_eq!(GeneratorsFile::parse(&text).unwrap(), gens);
    }
}
