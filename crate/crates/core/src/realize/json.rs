//! JSON form of rational arrangements:
//! `{"dim": d, "hyperplanes": [{"a": ["1","-1/2"], "b": "0"}], "region": [{"c": [...], "d": "...", "rel": ">"}]}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Arrangement, Hyperplane, OpenRegion, Strict};
use crate::error::{Error, Result};
use crate::Rational;

/// A rational written as a decimal integer or `p/q`; bare JSON integers are also accepted.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Text(String),
    Int(i64),
}

impl RawRational {
    fn parse(&self) -> Result<Rational> {
        match self {
            RawRational::Int(v) => Ok(Rational::from_integer((*v).into())),
            RawRational::Text(s) => s
                .trim()
                .parse::<Rational>()
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}"))),
        }
    }
}

fn parse_vec(v: &[RawRational]) -> Result<Vec<Rational>> {
    v.iter().map(RawRational::parse).collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHyperplane {
    a: Vec<RawRational>,
    b: RawRational,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStrict {
    c: Vec<RawRational>,
    d: RawRational,
    #[serde(default)]
    rel: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArrangement {
    #[serde(default)]
    #[allow(dead_code)]
    comment: Option<String>,
    dim: usize,
    hyperplanes: Vec<RawHyperplane>,
    #[serde(default)]
    region: Vec<RawStrict>,
}

impl TryFrom<RawArrangement> for Arrangement<Rational> {
    type Error = Error;

    fn try_from(raw: RawArrangement) -> Result<Self> {
        let hyperplanes = raw
            .hyperplanes
            .iter()
            .map(|h| Hyperplane::new(parse_vec(&h.a)?, h.b.parse()?))
            .collect::<Result<Vec<_>>>()?;
        let strict = raw
            .region
            .iter()
            .map(|s| {
                if let Some(rel) = s.rel.as_deref() {
                    if rel != ">" {
                        return Err(Error::Parse(format!("unsupported relation {rel:?}; only \">\" is allowed")));
                    }
                }
                Ok(Strict {
                    c: parse_vec(&s.c)?,
                    d: s.d.parse()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(raw.dim, hyperplanes, OpenRegion { strict })
    }
}

impl<'de> Deserialize<'de> for Arrangement<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawArrangement::deserialize(d)?;
        Arrangement::try_from(raw).map_err(D::Error::custom)
    }
}

#[derive(Serialize)]
struct OutHyperplane {
    a: Vec<String>,
    b: String,
}

#[derive(Serialize)]
struct OutStrict {
    c: Vec<String>,
    d: String,
    rel: &'static str,
}

#[derive(Serialize)]
struct OutArrangement {
    dim: usize,
    hyperplanes: Vec<OutHyperplane>,
    region: Vec<OutStrict>,
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl Serialize for Arrangement<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OutArrangement {
            dim: self.dim,
            hyperplanes: self
                .hyperplanes
                .iter()
                .map(|h| OutHyperplane {
                    a: strings(&h.a),
                    b: h.b.to_string(),
                })
                .collect(),
            region: self
                .region
                .strict
                .iter()
                .map(|r| OutStrict {
                    c: strings(&r.c),
                    d: r.d.to_string(),
                    rel: ">",
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl Arrangement<Rational> {
    pub fn from_json(text: &str) -> Result<Arrangement<Rational>> {
        let raw: RawArrangement = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Arrangement::try_from(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("arrangement serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_round_trips() {
        let text = r#"{"dim": 2, "hyperplanes": [{"a": ["1", "-1/2"], "b": "0"}, {"a": [0, 3], "b": "7/3"}],
                       "region": [{"c": ["1", "0"], "d": "-4/6", "rel": ">"}]}"#;
        let a = Arrangement::from_json(text).unwrap();
        assert_eq!(a.n(), 2);
        assert_eq!(a.hyperplanes()[0].a[1], Rational::new((-1).into(), 2.into()));
        assert_eq!(a.region().strict[0].d, Rational::new((-2).into(), 3.into()));
        let back = Arrangement::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = [
            r#"{"dim": 1, "hyperplanes": [{"a": ["1"], "b": "0"}], "region": [{"c": ["1"], "d": "0", "rel": "<"}]}"#,
            r#"{"dim": 1, "hyperplanes": [{"a": ["0"], "b": "0"}]}"#,
            r#"{"dim": 2, "hyperplanes": [{"a": ["1"], "b": "0"}]}"#,
            r#"{"dim": 1, "hyperplanes": [{"a": ["1/0"], "b": "0"}]}"#,
            r#"{"dim": 1, "hyperplanes": [{"a": ["x"], "b": "0"}]}"#,
            r#"{"dim": 1, "hyperplanes": [], "extra": 1}"#,
        ];
        for text in bad {
            assert!(Arrangement::from_json(text).is_err(), "{text}");
        }
    }
}
