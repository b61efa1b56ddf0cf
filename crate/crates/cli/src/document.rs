//! The JSON input document: alternatives, priority, optional pay-offs and
//! weights, and named RAFs keyed by alternative label.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use indexmap::IndexMap;
use lexraf_core::relations::WeightVector;
use lexraf_core::{PriorityContext, Raf, Rational};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

/// A rational written as `"p/q"` or a finite decimal string. Bare JSON
/// integers are accepted too; JSON floats are not, since they are not exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RationalVisitor;

        impl Visitor<'_> for RationalVisitor {
            type Value = RationalText;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string such as \"4/5\" or \"0.8\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<RationalText, E> {
                v.parse().map(RationalText).map_err(E::custom)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RationalText, E> {
                i64::try_from(v)
                    .map(|v| RationalText(Rational::integer(v)))
                    .map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RationalText, E> {
                Ok(RationalText(Rational::integer(v)))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<RationalText, E> {
                Err(E::custom(format!(
                    "floating-point number {v} is not exact; write it as a string, e.g. \"{v}\""
                )))
            }
        }

        d.deserialize_any(RationalVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub alternatives: Vec<String>,
    /// A permutation of `alternatives`, most important first.
    pub priority: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payoffs: Option<IndexMap<String, RationalText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<IndexMap<String, u32>>,
    pub rafs: IndexMap<String, IndexMap<String, RationalText>>,
}

/// A validated document: one shared context, RAFs in input order.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub ctx: Arc<PriorityContext>,
    pub rafs: Vec<(String, Raf)>,
    pub weights: Option<WeightVector>,
}

impl Resolved {
    pub fn points(&self) -> Vec<Raf> {
        self.rafs.iter().map(|(_, r)| r.clone()).collect()
    }
}

fn invalid(field: impl fmt::Display, msg: impl fmt::Display) -> CliError {
    CliError::Input(format!("{field}: {msg}"))
}

/// Values of `map` in priority order; every label must appear exactly once.
fn by_priority<'a, T>(
    field: &str,
    map: &'a IndexMap<String, T>,
    priority: &[String],
) -> Result<Vec<&'a T>, CliError> {
    if let Some(extra) = map.keys().find(|k| !priority.contains(k)) {
        return Err(invalid(field, format!("unknown alternative `{extra}`")));
    }
    priority
        .iter()
        .map(|label| {
            map.get(label)
                .ok_or_else(|| invalid(field, format!("missing value for `{label}`")))
        })
        .collect()
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("document: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let mut sorted_alts = self.alternatives.clone();
        sorted_alts.sort();
        let mut sorted_prio = self.priority.clone();
        sorted_prio.sort();
        if sorted_alts != sorted_prio {
            return Err(invalid("priority", "must be a permutation of `alternatives`"));
        }
        if sorted_alts.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("alternatives", "labels must be distinct"));
        }

        let ctx = match &self.payoffs {
            Some(payoffs) => {
                let values = by_priority("payoffs", payoffs, &self.priority)?
                    .into_iter()
                    .map(|r| r.0.clone())
                    .collect();
                PriorityContext::with_payoffs(self.priority.iter().cloned(), values)
                    .map_err(|e| invalid("payoffs", e))?
            }
            None => PriorityContext::new(self.priority.iter().cloned())
                .map_err(|e| invalid("alternatives", e))?,
        };

        let weights = match &self.weights {
            Some(w) => {
                let values = by_priority("weights", w, &self.priority)?
                    .into_iter()
                    .copied()
                    .collect();
                Some(WeightVector::new(values).map_err(|e| invalid("weights", e))?)
            }
            None => None,
        };

        let rafs = self
            .rafs
            .iter()
            .map(|(name, values)| {
                let field = format!("rafs.{name}");
                let values = by_priority(&field, values, &self.priority)?
                    .into_iter()
                    .map(|r| r.0.clone())
                    .collect();
                Raf::new(values, &ctx)
                    .map(|raf| (name.clone(), raf))
                    .map_err(|e| invalid(&field, e))
            })
            .collect::<Result<_, _>>()?;

        Ok(Resolved { ctx, rafs, weights })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FORTY_TEN: &str = r#"{
        "alternatives": ["$10", "$40"],
        "priority": ["$40", "$10"],
        "payoffs": {"$10": "10", "$40": 40},
        "rafs": {
            "A": {"$10": "0.8", "$40": "1/5"},
            "B": {"$10": "9/10", "$40": "0.1"}
        }
    }"#;

    #[test]
    fn resolves_in_priority_order() {
        let doc = InputDocument::from_json(FORTY_TEN).unwrap();
        let r = doc.resolve().unwrap();
        assert_eq!(r.ctx.labels(), ["$40", "$10"]);
        assert_eq!(format!("{}", r.rafs[0].1), "(1/5, 4/5)");
        assert_eq!(format!("{}", r.rafs[1].1), "(1/10, 9/10)");
        assert_eq!(r.ctx.payoffs().unwrap()[0], Rational::integer(40));
    }

    #[test]
    fn errors_name_the_field() {
        let bad = FORTY_TEN.replace(r#""$10": "0.8", "#, "");
        let err = InputDocument::from_json(&bad).unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("rafs.A"), "{err}");

        let bad = FORTY_TEN.replace(r#""priority": ["$40", "$10"]"#, r#""priority": ["$40"]"#);
        let err = InputDocument::from_json(&bad).unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("priority"), "{err}");

        let bad = FORTY_TEN.replace(r#""1/5""#, r#""6/5""#);
        let err = InputDocument::from_json(&bad).unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("rafs.A"), "{err}");

        let bad = FORTY_TEN.replace(r#""0.1""#, "0.1");
        assert!(InputDocument::from_json(&bad).is_err());
    }

    #[test]
    fn json_round_trip() {
        let doc = InputDocument::from_json(FORTY_TEN).unwrap();
        let again = InputDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
        assert!(doc.to_json().contains(r#""4/5""#));
    }
}
