//! Text formats: JSON space and map descriptors, TSV distance matrices and
//! edge lists.

use serde::{Deserialize, Serialize};

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::maps::SelfMap;
use crate::metric::{MetricSpace, SpaceKind};
use crate::rules::{MapRule, SpaceRule};

/// `{"kind":"table","points":n,"d":[["0","1"],…]}` or
/// `{"kind":"rule","rule":"ex2","window":N}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SpaceDescriptor {
    Table { points: usize, d: Vec<Vec<ExtDistance>> },
    Rule { rule: String, window: usize },
}

impl SpaceDescriptor {
    pub fn into_space(self) -> Result<MetricSpace> {
        match self {
            SpaceDescriptor::Table { points, d } => {
                if d.len() != points {
                    return Err(Error::PointCountMismatch { declared: points, actual: d.len() });
                }
                MetricSpace::from_rows(d)
            }
            SpaceDescriptor::Rule { rule, window } => {
                Ok(MetricSpace::from_rule(rule.parse::<SpaceRule>()?, window))
            }
        }
    }

    pub fn of(space: &MetricSpace) -> Self {
        match space.kind() {
            SpaceKind::Table { points, .. } => SpaceDescriptor::Table { points: *points, d: space.rows() },
            SpaceKind::Rule { rule, max_index } => {
                SpaceDescriptor::Rule { rule: rule.name().to_owned(), window: *max_index }
            }
        }
    }
}

fn descriptor_error(err: serde_json::Error) -> Error {
    Error::Descriptor(err.to_string())
}

pub fn parse_space_json(text: &str) -> Result<MetricSpace> {
    serde_json::from_str::<SpaceDescriptor>(text)
        .map_err(descriptor_error)?
        .into_space()
}

/// `n` lines of `n` tab-separated rationals. Blank lines are skipped.
pub fn parse_tsv(text: &str) -> Result<MetricSpace> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split('\t')
            .map(|cell| {
                cell.parse::<ExtDistance>()
                    .map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    MetricSpace::from_rows(rows)
}

/// JSON when the text starts with `{`, TSV otherwise.
pub fn parse_space(text: &str) -> Result<MetricSpace> {
    if text.trim_start().starts_with('{') {
        parse_space_json(text)
    } else {
        parse_tsv(text)
    }
}

/// `{"kind":"table","images":[0,0,1]}` or `{"kind":"rule","rule":"shift-above-1"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MapDescriptor {
    Table { images: Vec<usize> },
    Rule { rule: String },
}

impl MapDescriptor {
    pub fn into_map(self) -> Result<SelfMap> {
        match self {
            MapDescriptor::Table { images } => Ok(SelfMap::Table(images)),
            MapDescriptor::Rule { rule } => Ok(SelfMap::Rule(rule.parse::<MapRule>()?)),
        }
    }

    pub fn of(map: &SelfMap) -> Self {
        match map {
            SelfMap::Table(images) => MapDescriptor::Table { images: images.clone() },
            SelfMap::Rule(rule) => MapDescriptor::Rule { rule: rule.name().to_owned() },
        }
    }
}

pub fn parse_map_json(text: &str) -> Result<SelfMap> {
    serde_json::from_str::<MapDescriptor>(text)
        .map_err(descriptor_error)?
        .into_map()
}

/// One `u v` pair per line, 0-based; blank lines and `#` comments ignored.
/// The vertex count is `vertices` if given, else one more than the largest id.
pub fn parse_edge_list(text: &str, vertices: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: i + 1, message };
        let ids: Vec<usize> = line
            .split_whitespace()
            .map(|tok| tok.parse::<usize>().map_err(|e| parse_err(format!("`{tok}`: {e}"))))
            .collect::<Result<_>>()?;
        match ids[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(parse_err(format!("expected two vertex ids, got {}", ids.len()))),
        }
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(vertices.unwrap_or(inferred), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_descriptor() {
        let s = parse_space(r#"{"kind":"table","points":3,"d":[["0","1","3"],["1","0","2"],["3","2","0"]]}"#)
            .unwrap();
        assert_eq!(s.distance(0, 2).unwrap(), ExtDistance::from_integer(3));
        assert_eq!(SpaceDescriptor::of(&s).into_space().unwrap(), s);
    }

    #[test]
    fn rule_descriptor() {
        let s = parse_space(r#"{"kind":"rule","rule":"ex2","window":10}"#).unwrap();
        assert_eq!(s.len(), 11);
        assert_eq!(s.distance(3, 5).unwrap(), ExtDistance::ratio(6, 5));
        assert!(matches!(
            parse_space(r#"{"kind":"rule","rule":"ex9","window":10}"#),
            Err(Error::UnknownRule(_))
        ));
    }

    #[test]
    fn malformed_descriptors() {
        assert!(matches!(
            parse_space(r#"{"kind":"table","points":2,"d":[["0","1"]]}"#),
            Err(Error::PointCountMismatch { declared: 2, actual: 1 })
        ));
        assert!(matches!(
            parse_space(r#"{"kind":"table","points":2,"d":[["0","1.5"],["1.5","0"]]}"#),
            Err(Error::Descriptor(_))
        ));
        assert!(matches!(
            parse_space(r#"{"kind":"table","points":2,"d":[["0",1],[1,"0"]]}"#),
            Err(Error::Descriptor(_))
        ));
        assert!(matches!(
            parse_space(r#"{"kind":"table","points":2,"d":[["0","1","1"],["1","0"]]}"#),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn tsv_matrix() {
        let s = parse_tsv("0\t1\tinf\n1\t0\tinf\n\ninf\tinf\t0\n").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.distance(0, 2).unwrap(), ExtDistance::INFINITY);
        assert_eq!(
            parse_tsv("0\t-1\n1\t0"),
            Err(Error::Parse { line: 1, message: "negative distance `-1`".into() })
        );
        assert!(matches!(parse_tsv("0\t0.5\n0.5\t0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn map_descriptors() {
        assert_eq!(parse_map_json(r#"{"kind":"table","images":[0,0,1]}"#).unwrap(), SelfMap::Table(vec![0, 0, 1]));
        assert_eq!(
            parse_map_json(r#"{"kind":"rule","rule":"shift-above-1"}"#).unwrap(),
            SelfMap::Rule(MapRule::ShiftAboveOne)
        );
        assert!(parse_map_json(r#"{"kind":"rule","rule":"spin"}"#).is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("# triangle\n0 1\n1 2 # chord next\n\n2 0\n", None).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let g = parse_edge_list("0 1\n", Some(5)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(parse_edge_list("0 1 2\n", None).unwrap_err(), Error::Parse {
            line: 1,
            message: "expected two vertex ids, got 3".into()
        });
        assert_eq!(parse_edge_list("3 3\n", None), Err(Error::SelfLoop(3)));
        assert!(parse_edge_list("0 x\n", None).is_err());
    }
}
