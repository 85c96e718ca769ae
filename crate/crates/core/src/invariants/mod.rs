//! Exact knot and link invariants of [`ComponentPd`] diagrams.

mod bracket;
mod pd;
mod poly;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bracket::{jones_normalized, kauffman_bracket, kauffman_bracket_skein, loop_value, writhe};
pub use pd::{ComponentPd, Passage, PdCrossing};
pub use poly::LaurentPoly;

/// Largest crossing count for which a trivial Jones polynomial is accepted as
/// an unknot certificate.
pub const DEFAULT_MAX_CROSSINGS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{crossings} crossings exceed the configured bound of {max}")]
    BoundExceeded { crossings: usize, max: usize },
    #[error("expected {expected} component(s), found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("invalid diagram code: {0}")]
    InvalidPd(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum UnknotVerdict {
    Unknot,
    Knotted { witness: LaurentPoly },
    Inconclusive { reason: String },
}

impl UnknotVerdict {
    pub fn is_unknot(&self) -> bool {
        matches!(self, UnknotVerdict::Unknot)
    }

    pub fn label(&self) -> &'static str {
        match self {
            UnknotVerdict::Unknot => "UNKNOT",
            UnknotVerdict::Knotted { .. } => "KNOTTED",
            UnknotVerdict::Inconclusive { .. } => "INCONCLUSIVE",
        }
    }
}

/// Decides knottedness of a one-component diagram.
///
/// A diagram with more than `max_certified_crossings` crossings is not
/// evaluated at all and comes back `Inconclusive`. Below the bound a
/// normalized polynomial other than 1 is a knottedness witness, and 1 is
/// accepted as an unknot certificate.
pub fn classify_knot(
    pd: &ComponentPd,
    max_certified_crossings: usize,
) -> Result<UnknotVerdict, InvariantError> {
    if pd.components != 1 {
        return Err(InvariantError::ComponentCount {
            expected: 1,
            found: pd.components,
        });
    }
    if pd.crossing_count() == 0 {
        return Ok(UnknotVerdict::Unknot);
    }
    if pd.crossing_count() > max_certified_crossings {
        return Ok(UnknotVerdict::Inconclusive {
            reason: format!(
                "{} crossings exceed the certification bound {}",
                pd.crossing_count(),
                max_certified_crossings
            ),
        });
    }
    let f = jones_normalized(pd, max_certified_crossings)?;
    Ok(if f.is_one() {
        UnknotVerdict::Unknot
    } else {
        UnknotVerdict::Knotted { witness: f }
    })
}

/// Half the signed count of crossings between the two components.
pub fn linking_number(pd: &ComponentPd) -> Result<i64, InvariantError> {
    if pd.components != 2 {
        return Err(InvariantError::ComponentCount {
            expected: 2,
            found: pd.components,
        });
    }
    pd.check()?;
    let total: i64 = pd
        .crossings
        .iter()
        .filter(|c| c.is_mixed())
        .map(|c| c.sign())
        .sum();
    if total % 2 != 0 {
        return Err(InvariantError::InvalidPd(format!(
            "odd inter-component sign sum {total}"
        )));
    }
    Ok(total / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_rejects_links() {
        let hopf = ComponentPd::from_x_codes(&[[4, 1, 3, 2], [2, 3, 1, 4]]).unwrap();
        assert!(matches!(
            classify_knot(&hopf, 16),
            Err(InvariantError::ComponentCount {
                expected: 1,
                found: 2
            })
        ));
        assert_eq!(linking_number(&hopf).unwrap().abs(), 1);
        assert!(linking_number(&ComponentPd::unknot()).is_err());
    }

    #[test]
    fn split_link_has_zero_linking() {
        let split = ComponentPd {
            crossings: vec![],
            components: 2,
            crossingless: 2,
        };
        assert_eq!(linking_number(&split).unwrap(), 0);
    }

    #[test]
    fn verdict_json() {
        let v = UnknotVerdict::Knotted {
            witness: LaurentPoly::from_terms([(-4, 1)]),
        };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"verdict":"KNOTTED","witness":{"A":{"-4":1}}}"#
        );
    }
}
