//! Scenario files: JSON descriptions of one scattering geometry.
//!
//! ```json
//! {
//!   "name": "symmetric overlap 3/4",
//!   "lengths": { "l_t1": "1", "l_r1": "1", "l_t2": "1", "l_r2": "1" },
//!   "intervals": {
//!     "t11": [["0", "1"]], "r11": [["0", "1"]],
//!     "t22": [["0", "1"]], "r22": [["0", "1"]],
//!     "t12": [["-1/4", "3/4"]],
//!     "r12": { "angles_deg": [[41.4, 104.5]] }
//!   },
//!   "oracle": { "seeds": 20, "rank_tol": 1e-9 }
//! }
//! ```
//!
//! Rationals are `"p/q"` strings or integers. Interval lists are direction
//! cosines unless given as `{"angles_deg": [...]}`. Missing intervals are
//! empty.

use std::fmt;
use std::path::Path;

use fddof::rational::{self, Rational};
use fddof::{ArrayHalfLengths, CosineApprox, DirectionSet, ScatteringGeometry};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

/// An exact rational read from `"p/q"`, `"p"`, a decimal string, or a JSON
/// integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(&self.0))
    }
}

struct ExactVisitor;

impl<'de> Visitor<'de> for ExactVisitor {
    type Value = Exact;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a rational as \"p/q\" or an integer")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Exact, E> {
        Ok(Exact(rational::int(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Exact, E> {
        i64::try_from(v)
            .map(|v| Exact(rational::int(v)))
            .map_err(|_| E::custom("integer out of range"))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> Result<Exact, E> {
        // Decimal literals are read through their shortest round-trip text,
        // so 0.75 means exactly 3/4.
        rational::parse(&v.to_string())
            .map(Exact)
            .ok_or_else(|| E::custom(format!("cannot read {v} as a rational")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Exact, E> {
        rational::parse(v)
            .map(Exact)
            .ok_or_else(|| E::custom(format!("`{v}` is not a rational")))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Exact, D::Error> {
        d.deserialize_any(ExactVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lengths {
    pub l_t1: Exact,
    pub l_r1: Exact,
    pub l_t2: Exact,
    pub l_r2: Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntervalSpec {
    Directions(Vec<[Exact; 2]>),
    Angles { angles_deg: Vec<[Exact; 2]> },
}

impl Default for IntervalSpec {
    fn default() -> Self {
        IntervalSpec::Directions(Vec::new())
    }
}

impl IntervalSpec {
    fn to_set(&self) -> fddof::Result<DirectionSet> {
        let pairs = |v: &[[Exact; 2]]| {
            v.iter()
                .map(|[a, b]| (a.0.clone(), b.0.clone()))
                .collect::<Vec<_>>()
        };
        match self {
            IntervalSpec::Directions(v) => DirectionSet::canonicalize(pairs(v)),
            IntervalSpec::Angles { angles_deg } => {
                DirectionSet::from_angles(pairs(angles_deg), &CosineApprox::default())
            }
        }
    }

    fn from_set(s: &DirectionSet) -> Self {
        IntervalSpec::Directions(
            s.intervals()
                .iter()
                .map(|iv| [Exact(iv.lo.clone()), Exact(iv.hi.clone())])
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Intervals {
    #[serde(default)]
    pub t11: IntervalSpec,
    #[serde(default)]
    pub r11: IntervalSpec,
    #[serde(default)]
    pub t22: IntervalSpec,
    #[serde(default)]
    pub r22: IntervalSpec,
    #[serde(default)]
    pub t12: IntervalSpec,
    #[serde(default)]
    pub r12: IntervalSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSettings {
    #[serde(default = "default_seeds")]
    pub seeds: u64,
    #[serde(default = "default_rank_tol")]
    pub rank_tol: f64,
}

fn default_seeds() -> u64 {
    20
}

fn default_rank_tol() -> f64 {
    fddof::oracle::DEFAULT_RANK_TOL
}

impl Default for OracleSettings {
    fn default() -> Self {
        OracleSettings {
            seeds: default_seeds(),
            rank_tol: default_rank_tol(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub lengths: Lengths,
    #[serde(default)]
    pub intervals: Intervals,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSettings>,
}

impl Scenario {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::MissingFile {
            path: path.to_owned(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|err| {
            let path = err.path().to_string();
            CliError::Schema {
                path,
                message: err.into_inner().to_string(),
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    pub fn geometry(&self) -> Result<ScatteringGeometry, CliError> {
        let set = |field: &str, spec: &IntervalSpec| {
            spec.to_set().map_err(|source| CliError::Invariant {
                field: format!("intervals.{field}"),
                source,
            })
        };
        let l = &self.lengths;
        let lengths = ArrayHalfLengths::new(
            l.l_t1.0.clone(),
            l.l_r1.0.clone(),
            l.l_t2.0.clone(),
            l.l_r2.0.clone(),
        )
        .map_err(|source| CliError::Invariant {
            field: "lengths".into(),
            source,
        })?;
        let iv = &self.intervals;
        Ok(ScatteringGeometry {
            t11: set("t11", &iv.t11)?,
            r11: set("r11", &iv.r11)?,
            t22: set("t22", &iv.t22)?,
            r22: set("r22", &iv.r22)?,
            t12: set("t12", &iv.t12)?,
            r12: set("r12", &iv.r12)?,
            lengths,
        })
    }

    pub fn from_geometry(name: impl Into<String>, g: &ScatteringGeometry) -> Self {
        let l = &g.lengths;
        Scenario {
            name: name.into(),
            lengths: Lengths {
                l_t1: Exact(l.l_t1.clone()),
                l_r1: Exact(l.l_r1.clone()),
                l_t2: Exact(l.l_t2.clone()),
                l_r2: Exact(l.l_r2.clone()),
            },
            intervals: Intervals {
                t11: IntervalSpec::from_set(&g.t11),
                r11: IntervalSpec::from_set(&g.r11),
                t22: IntervalSpec::from_set(&g.t22),
                r22: IntervalSpec::from_set(&g.r22),
                t12: IntervalSpec::from_set(&g.t12),
                r12: IntervalSpec::from_set(&g.r12),
            },
            oracle: None,
        }
    }

    pub fn oracle_settings(&self) -> OracleSettings {
        self.oracle.clone().unwrap_or_default()
    }
}
