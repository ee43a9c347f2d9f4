//! The JSON graph format.
//!
//! ```json
//! { "vertices": [{"id": 1, "color": "z"}, {"id": 2, "color": {"num": "1", "den": "z + 1"}}],
//!   "edges": [[1, 2]],
//!   "root": 1 }
//! ```
//!
//! Ids must be exactly `1..=n` in any order. A numeric color is read as a
//! diagonal entry of `Y`: `1` is `z`, `0` is `w`, anything strictly between
//! is a fractional coloring and is rejected.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Color, ColoredGraph};
use crate::error::{Error, Result};
use crate::ratfun::{RatFun, RatFunJson};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<[usize; 2]>,
    pub root: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub color: ColorJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ColorJson {
    Tag(String),
    Weight(RatFunJson),
}

impl ColoredGraph {
    pub fn to_json(&self) -> GraphJson {
        let vertices = self
            .colors()
            .iter()
            .enumerate()
            .map(|(i, c)| VertexJson {
                id: i + 1,
                color: match c {
                    Color::Z => ColorJson::Tag("z".into()),
                    Color::W => ColorJson::Tag("w".into()),
                    Color::General(r) => ColorJson::Weight(r.to_json()),
                },
            })
            .collect();
        GraphJson {
            vertices,
            edges: self.edges().map(|(i, j)| [i, j]).collect(),
            root: self.root(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph JSON serializes")
    }

    /// Parses the JSON graph format; errors name the offending field.
    pub fn from_json_str(src: &str) -> Result<ColoredGraph> {
        let v: Value = serde_json::from_str(src).map_err(|e| Error::graph("<document>", e.to_string()))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<ColoredGraph> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::graph("<document>", "expected an object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "vertices" | "edges" | "root") {
                return Err(Error::graph(key.clone(), "unknown field"));
            }
        }
        let vertices = obj
            .get("vertices")
            .ok_or_else(|| Error::graph("vertices", "missing"))?
            .as_array()
            .ok_or_else(|| Error::graph("vertices", "expected an array"))?;
        let n = vertices.len();
        let mut colors: Vec<Option<Color>> = vec![None; n];
        for (k, vert) in vertices.iter().enumerate() {
            let id_field = format!("vertices[{k}].id");
            let id = vert
                .get("id")
                .ok_or_else(|| Error::graph(&id_field, "missing"))?
                .as_u64()
                .ok_or_else(|| Error::graph(&id_field, "expected a positive integer"))?
                as usize;
            if id == 0 || id > n {
                return Err(Error::graph(&id_field, format!("id {id} outside 1..={n}")));
            }
            if colors[id - 1].is_some() {
                return Err(Error::graph(&id_field, format!("duplicate id {id}")));
            }
            let color_field = format!("vertices[{k}].color");
            let color = vert
                .get("color")
                .ok_or_else(|| Error::graph(&color_field, "missing"))?;
            colors[id - 1] = Some(parse_color(color, &color_field)?);
        }
        let colors: Vec<Color> = colors.into_iter().map(|c| c.expect("ids cover 1..=n")).collect();

        let edges_v = obj
            .get("edges")
            .ok_or_else(|| Error::graph("edges", "missing"))?
            .as_array()
            .ok_or_else(|| Error::graph("edges", "expected an array"))?;
        let mut edges = Vec::with_capacity(edges_v.len());
        for (k, e) in edges_v.iter().enumerate() {
            let field = format!("edges[{k}]");
            let pair = e
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::graph(&field, "expected a pair [i, j]"))?;
            let ends: Vec<usize> = pair
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::graph(&field, "endpoints must be vertex ids"))?;
            let (i, j) = (ends[0], ends[1]);
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::graph(&field, format!("[{i},{j}] names a missing vertex")));
            }
            if i == j {
                return Err(Error::graph(&field, format!("self-loop at vertex {i}")));
            }
            if edges.contains(&(i.min(j), i.max(j))) {
                return Err(Error::graph(&field, format!("duplicate edge [{i},{j}]")));
            }
            edges.push((i.min(j), i.max(j)));
        }

        let root = obj
            .get("root")
            .ok_or_else(|| Error::graph("root", "missing"))?
            .as_u64()
            .ok_or_else(|| Error::graph("root", "expected a vertex id"))? as usize;
        ColoredGraph::new(colors, edges, root)
    }
}

fn parse_color(v: &Value, field: &str) -> Result<Color> {
    match v {
        Value::String(s) => match s.as_str() {
            "z" => Ok(Color::Z),
            "w" => Ok(Color::W),
            other => Err(Error::graph(field, format!("unknown color tag `{other}`"))),
        },
        Value::Number(x) => {
            let t = x
                .as_f64()
                .ok_or_else(|| Error::graph(field, "unreadable number"))?;
            if t == 1.0 {
                Ok(Color::Z)
            } else if t == 0.0 {
                Ok(Color::W)
            } else if t > 0.0 && t < 1.0 {
                Err(Error::FractionalColoring)
            } else {
                Err(Error::graph(field, format!("numeric color {t} outside [0, 1]")))
            }
        }
        Value::Object(_) => {
            let j: RatFunJson = serde_json::from_value(v.clone())
                .map_err(|e| Error::graph(field, e.to_string()))?;
            let r = RatFun::from_json(&j).map_err(|e| Error::graph(field, e.to_string()))?;
            Ok(Color::general(r))
        }
        _ => Err(Error::graph(field, "expected \"z\", \"w\" or {\"num\", \"den\"}")),
    }
}
