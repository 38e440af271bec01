//! The JSON input document and its validation.

use std::fmt;
use std::str::FromStr;

use bcres_core::arrangement::Arrangement;
use bcres_core::ideal::{default_var_names, Monomial, MonomialIdeal};
use bcres_core::matroid::{build_matroid, default_labels, MatroidSpec};
use bcres_core::{ElementOrder, Graph, Matroid};
use num_rational::BigRational;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use crate::CliError;

/// A rational number written as `"p/q"` or `"p"`; bare JSON integers are accepted too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(pub BigRational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = Rat;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a \"p/q\" string or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
                BigRational::from_str(v.trim())
                    .map(Rat)
                    .map_err(|e| E::custom(format!("malformed rational {v:?}: {e}")))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
                Ok(Rat(BigRational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
                Ok(Rat(BigRational::from_integer(v.into())))
            }
        }

        d.deserialize_any(RatVisitor)
    }
}

fn unrat(rows: &[Vec<Rat>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MatroidInput {
    Uniform {
        p: usize,
        n: usize,
    },
    /// Circuits as 1-based element positions.
    Circuits {
        n: usize,
        circuits: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Graphic {
        edges: Vec<(usize, usize)>,
    },
    Linear {
        rows: Vec<Vec<Rat>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    DirectSum {
        parts: Vec<MatroidInput>,
    },
}

/// Externally tagged twin of [`MatroidInput`]; decoding through it keeps
/// field paths in error messages, which internal tagging loses.
#[derive(Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
enum TaggedMatroid {
    Uniform {
        p: usize,
        n: usize,
    },
    Circuits {
        n: usize,
        circuits: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    Graphic {
        edges: Vec<(usize, usize)>,
    },
    Linear {
        rows: Vec<Vec<Rat>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    DirectSum {
        parts: Vec<Value>,
    },
}

fn matroid_input(mut v: Value, prefix: &str) -> Result<MatroidInput, CliError> {
    let missing = |message: &str| CliError::Input {
        field: format!("{prefix}.type"),
        message: message.into(),
    };
    let obj = v.as_object_mut().ok_or_else(|| CliError::Input {
        field: prefix.into(),
        message: "expected an object".into(),
    })?;
    let tag = match obj.remove("type") {
        Some(Value::String(t)) => t,
        Some(_) => return Err(missing("expected a string")),
        None => return Err(missing("missing field `type`")),
    };
    let wrapped = Value::Object([(tag, v)].into_iter().collect());
    let tagged: TaggedMatroid = serde_path_to_error::deserialize(wrapped).map_err(|e| {
        let rest: Vec<String> = e.path().iter().skip(1).map(|seg| seg.to_string()).collect();
        let mut field = prefix.to_string();
        for seg in rest {
            if !seg.starts_with('[') {
                field.push('.');
            }
            field.push_str(&seg);
        }
        let message = e.into_inner().to_string();
        let field = if message.starts_with("unknown variant") { format!("{prefix}.type") } else { field };
        CliError::Input { field, message }
    })?;
    Ok(match tagged {
        TaggedMatroid::Uniform { p, n } => MatroidInput::Uniform { p, n },
        TaggedMatroid::Circuits { n, circuits, labels } => MatroidInput::Circuits { n, circuits, labels },
        TaggedMatroid::Graphic { edges } => MatroidInput::Graphic { edges },
        TaggedMatroid::Linear { rows, labels } => MatroidInput::Linear { rows, labels },
        TaggedMatroid::DirectSum { parts } => MatroidInput::DirectSum {
            parts: parts
                .into_iter()
                .enumerate()
                .map(|(k, p)| matroid_input(p, &format!("{prefix}.parts[{k}]")))
                .collect::<Result<_, _>>()?,
        },
    })
}

impl MatroidInput {
    pub fn spec(&self) -> MatroidSpec {
        match self {
            MatroidInput::Uniform { p, n } => MatroidSpec::Uniform { p: *p, n: *n },
            MatroidInput::Circuits { n, circuits, labels } => MatroidSpec::Circuits {
                n: *n,
                circuits: circuits.clone(),
                labels: labels.clone(),
            },
            MatroidInput::Graphic { edges } => MatroidSpec::Graphic { edges: edges.clone() },
            MatroidInput::Linear { rows, labels } => MatroidSpec::Linear {
                rows: unrat(rows),
                labels: labels.clone(),
            },
            MatroidInput::DirectSum { parts } => MatroidSpec::DirectSum(parts.iter().map(|p| p.spec()).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementInput {
    /// Rows of the normal matrix; column `j` is the normal of hyperplane `j`.
    pub rows: Vec<Vec<Rat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A vertex named by an integer or a string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Id(u64),
    Name(String),
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRef::Id(i) => write!(f, "{i}"),
            VertexRef::Name(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInput {
    pub edges: Vec<(VertexRef, VertexRef)>,
    /// Vertex names; defaults to the endpoints in order of first appearance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    /// Edge labels; default `1..=m`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nvars: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    /// Monomials such as `"x1*x2^2"`; `"1"` is the unit monomial.
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Payload {
    Matroid(MatroidInput),
    Arrangement(ArrangementInput),
    Graph(GraphInput),
    Ideal(IdealInput),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDocument {
    #[serde(flatten)]
    pub payload: Payload,
    /// Element labels in the order used for broken circuits.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<String>>,
}

/// The mathematical object described by a document.
#[derive(Debug, Clone)]
pub enum Subject {
    Matroid(Matroid),
    Arrangement(Arrangement),
    Graph(Graph),
    Ideal(MonomialIdeal),
}

#[derive(Deserialize)]
struct RawDocument {
    kind: String,
    payload: Value,
    #[serde(default)]
    order: Option<Vec<String>>,
}

fn field_error<E: fmt::Display>(prefix: &str, err: serde_path_to_error::Error<E>) -> CliError {
    let path = err.path().to_string();
    let field = if path == "." { prefix.to_string() } else { format!("{prefix}.{path}") };
    CliError::Input {
        field,
        message: err.into_inner().to_string(),
    }
}

fn typed<T: for<'de> Deserialize<'de>>(payload: Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(payload).map_err(|e| field_error("payload", e))
}

/// Parse and validate a document. Matroid inputs go through the circuit-axiom check.
pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let inner = e.inner();
        if inner.is_syntax() || inner.is_eof() {
            CliError::Input {
                field: format!("line {} column {}", inner.line(), inner.column()),
                message: inner.to_string(),
            }
        } else {
            field_error("document", e)
        }
    })?;
    let payload = match raw.kind.as_str() {
        "matroid" => Payload::Matroid(matroid_input(raw.payload, "payload")?),
        "arrangement" => Payload::Arrangement(typed(raw.payload)?),
        "graph" => Payload::Graph(typed(raw.payload)?),
        "ideal" => Payload::Ideal(typed(raw.payload)?),
        other => {
            return Err(CliError::Input {
                field: "kind".into(),
                message: format!("unknown kind {other:?}; expected matroid, arrangement, graph or ideal"),
            })
        }
    };
    let doc = InputDocument {
        payload,
        order: raw.order,
    };
    doc.subject()?;
    Ok(doc)
}

impl InputDocument {
    pub fn subject(&self) -> Result<Subject, CliError> {
        let in_payload = |e: bcres_core::Error| CliError::at("payload", e);
        Ok(match &self.payload {
            Payload::Matroid(m) => Subject::Matroid(build_matroid(&m.spec()).map_err(in_payload)?),
            Payload::Arrangement(a) => {
                Subject::Arrangement(Arrangement::new(unrat(&a.rows), a.labels.clone()).map_err(in_payload)?)
            }
            Payload::Graph(g) => Subject::Graph(build_graph(g)?),
            Payload::Ideal(i) => Subject::Ideal(build_ideal(i)?),
        })
    }
}

fn build_graph(g: &GraphInput) -> Result<Graph, CliError> {
    let mut vertices: Vec<String> = g.vertices.clone().unwrap_or_default();
    let fixed = g.vertices.is_some();
    let mut index = |v: &VertexRef, field: String| -> Result<usize, CliError> {
        let name = v.to_string();
        if let Some(p) = vertices.iter().position(|w| *w == name) {
            return Ok(p);
        }
        if fixed {
            return Err(CliError::Input {
                field,
                message: format!("vertex {name:?} is not listed in payload.vertices"),
            });
        }
        vertices.push(name);
        Ok(vertices.len() - 1)
    };
    let mut edges = Vec::with_capacity(g.edges.len());
    for (k, (a, b)) in g.edges.iter().enumerate() {
        let a = index(a, format!("payload.edges[{k}][0]"))?;
        let b = index(b, format!("payload.edges[{k}][1]"))?;
        edges.push((a, b));
    }
    let labels = g.labels.clone().unwrap_or_else(|| default_labels(edges.len()));
    Graph::new(vertices, edges, labels).map_err(|e| CliError::at("payload", e))
}

fn build_ideal(i: &IdealInput) -> Result<MonomialIdeal, CliError> {
    if let (Some(n), Some(v)) = (i.nvars, &i.variables) {
        if n != v.len() {
            return Err(CliError::Input {
                field: "payload.nvars".into(),
                message: format!("{n} variables declared but {} names given", v.len()),
            });
        }
    }
    let mut gens = Vec::with_capacity(i.generators.len());
    for (k, text) in i.generators.iter().enumerate() {
        let m = parse_monomial(text, i.variables.as_deref()).map_err(|message| CliError::Input {
            field: format!("payload.generators[{k}]"),
            message,
        })?;
        gens.push(m);
    }
    let used = gens.iter().filter_map(|g| g.max_var()).max().map_or(0, |v| v + 1);
    let names = match (&i.variables, i.nvars) {
        (Some(v), _) => v.clone(),
        (None, Some(n)) => {
            if used > n {
                return Err(CliError::Input {
                    field: "payload.nvars".into(),
                    message: format!("generators use x{used} but only {n} variables are declared"),
                });
            }
            default_var_names(n)
        }
        (None, None) => default_var_names(used),
    };
    MonomialIdeal::with_names(names, gens).map_err(|e| CliError::at("payload", e))
}

/// Parse `"x1*x3^2"` (or names from `variables`); `"1"` is the unit monomial.
pub fn parse_monomial(text: &str, variables: Option<&[String]>) -> Result<Monomial, String> {
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial::one());
    }
    let mut pairs = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| format!("bad exponent in {factor:?}"))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        let var = match variables {
            Some(vs) => vs
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| format!("unknown variable {name:?}"))?,
            None => {
                let idx: usize = name
                    .strip_prefix('x')
                    .and_then(|d| d.parse().ok())
                    .filter(|&d: &usize| d >= 1)
                    .ok_or_else(|| format!("expected a variable x1, x2, ... but found {name:?}"))?;
                idx - 1
            }
        };
        if var >= 64 {
            return Err(format!("variable {name:?} is beyond the 64-variable limit"));
        }
        pairs.push((var, exp));
    }
    Ok(Monomial::from_pairs(pairs))
}

/// Resolve an element order given as element labels; natural order when absent.
pub fn element_order(x: &Matroid, labels: Option<&[String]>) -> Result<ElementOrder, CliError> {
    match labels {
        None => Ok(ElementOrder::natural(x.n())),
        Some(l) => ElementOrder::from_labels(x, l).map_err(|e| CliError::at("order", e)),
    }
}
