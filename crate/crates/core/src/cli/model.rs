use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::pteg::{EventGraphSpec, Place};
use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};

pub const FORMAT_VERSION: &str = "1";

/// On-disk model: transitions by name and places referencing them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub format_version: String,
    #[serde(default)]
    pub transitions: Vec<String>,
    #[serde(default)]
    pub places: Vec<PlaceRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceRecord {
    pub from: String,
    pub to: String,
    #[serde(default)]
    pub marking: u32,
    pub lower: String,
    #[serde(default = "infinity")]
    pub upper: String,
}

fn infinity() -> String {
    "inf".to_owned()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("malformed model file: {0}")]
    Syntax(String),
    #[error("unsupported format_version `{0}` (expected \"{FORMAT_VERSION}\")")]
    Version(String),
    #[error("place #{place}: unknown transition `{name}`")]
    UnknownTransition { place: usize, name: String },
    #[error("place #{place}: bad {field} bound `{text}`: {source}")]
    Bound {
        place: usize,
        field: &'static str,
        text: String,
        source: ParseRationalError,
    },
}

fn bound(place: usize, field: &'static str, text: &str) -> Result<Rational, ModelError> {
    parse_rational(text).map_err(|source| ModelError::Bound {
        place,
        field,
        text: text.to_owned(),
        source,
    })
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        let model: ModelFile = toml::from_str(text).map_err(|e| ModelError::Syntax(e.message().to_owned()))?;
        if model.format_version != FORMAT_VERSION {
            return Err(ModelError::Version(model.format_version));
        }
        Ok(model)
    }

    pub fn emit(&self) -> String {
        toml::to_string(self).expect("model serializes")
    }

    /// Resolves names to indices and bounds to rationals. Interval checks
    /// are left to [`crate::pteg::validate_spec`].
    pub fn to_spec(&self) -> Result<EventGraphSpec, ModelError> {
        let index: HashMap<&str, usize> = self
            .transitions
            .iter()
            .enumerate()
            .map(|(k, name)| (name.as_str(), k))
            .collect();
        let mut places = Vec::with_capacity(self.places.len());
        for (k, p) in self.places.iter().enumerate() {
            let place = k + 1;
            let lookup = |name: &str| {
                index.get(name).copied().ok_or_else(|| ModelError::UnknownTransition {
                    place,
                    name: name.to_owned(),
                })
            };
            let upper = match p.upper.trim() {
                "inf" | "+inf" => None,
                text => Some(bound(place, "upper", text)?),
            };
            places.push(Place::new(
                lookup(&p.from)?,
                lookup(&p.to)?,
                p.marking,
                bound(place, "lower", &p.lower)?,
                upper,
            ));
        }
        Ok(EventGraphSpec::new(self.transitions.clone(), places))
    }

    pub fn from_spec(spec: &EventGraphSpec) -> Self {
        let places = spec
            .places
            .iter()
            .map(|p| PlaceRecord {
                from: spec.transitions[p.from].clone(),
                to: spec.transitions[p.to].clone(),
                marking: p.marking,
                lower: format_rational(&p.lower),
                upper: p.upper.as_ref().map_or_else(infinity, format_rational),
            })
            .collect();
        ModelFile {
            format_version: FORMAT_VERSION.to_owned(),
            transitions: spec.transitions.clone(),
            places,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    const SAMPLE: &str = r#"
format_version = "1"
transitions = ["t1", "t2"]

[[places]]
from = "t1"
to = "t2"
lower = "0.5"
upper = "7/2"

[[places]]
from = "t2"
to = "t1"
marking = 1
lower = "0"
"#;

    #[test]
    fn parses_names_and_exact_bounds() {
        let spec = ModelFile::parse(SAMPLE).unwrap().to_spec().unwrap();
        assert_eq!(spec.places[0], Place::new(0, 1, 0, ratio(1, 2), Some(ratio(7, 2))));
        assert_eq!(spec.places[1], Place::new(1, 0, 1, int(0), None));
    }

    #[test]
    fn round_trip() {
        let spec = ModelFile::parse(SAMPLE).unwrap().to_spec().unwrap();
        let text = ModelFile::from_spec(&spec).emit();
        assert_eq!(ModelFile::parse(&text).unwrap().to_spec().unwrap(), spec);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(ModelFile::parse("format_version = \"2\""), Err(ModelError::Version(_))));
        assert!(matches!(ModelFile::parse("transitions = 3"), Err(ModelError::Syntax(_))));
        let bad = SAMPLE.replace("\"0.5\"", "\"1e3\"");
        assert!(matches!(
            ModelFile::parse(&bad).unwrap().to_spec(),
            Err(ModelError::Bound { place: 1, field: "lower", .. })
        ));
        let bad = SAMPLE.replace("to = \"t2\"", "to = \"t9\"");
        assert_eq!(
            ModelFile::parse(&bad).unwrap().to_spec(),
            Err(ModelError::UnknownTransition {
                place: 1,
                name: "t9".into()
            })
        );
    }

    #[test]
    fn empty_model() {
        let spec = ModelFile::parse("format_version = \"1\"").unwrap().to_spec().unwrap();
        assert_eq!(spec, EventGraphSpec::default());
    }
}
