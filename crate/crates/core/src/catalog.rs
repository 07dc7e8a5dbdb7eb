//! Named example spaces and the maps that come with them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distance::ExtDistance;
use crate::error::{Error, Result};
use crate::graph::{natural_distance, Graph};
use crate::maps::{ClassificationReport, SelfMap};
use crate::metric::MetricSpace;
use crate::rules::{MapRule, SpaceRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExampleId {
    /// Three points with distances 1, 2, 3.
    Ex1Finite,
    /// ℕ with `d(0,1) = 1` and every other distinct pair at 2.
    Ex1Infinite,
    /// ℕ with `d(x,y) = 1 + 1/max(x,y)` off `{0,1}`.
    Ex2,
    /// ℕ with `d(x,y) = 1 + 1/(x(y-x))`; contractions are constant here.
    Ex3,
    /// A contractive map with no fixed point.
    EmptyFixedPoint,
    /// Two chains, optionally bridged.
    Figure1Graph,
}

impl ExampleId {
    pub const ALL: [ExampleId; 6] = [
        ExampleId::Ex1Finite,
        ExampleId::Ex1Infinite,
        ExampleId::Ex2,
        ExampleId::Ex3,
        ExampleId::EmptyFixedPoint,
        ExampleId::Figure1Graph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleId::Ex1Finite => "ex1_finite",
            ExampleId::Ex1Infinite => "ex1_infinite",
            ExampleId::Ex2 => "ex2",
            ExampleId::Ex3 => "ex3",
            ExampleId::EmptyFixedPoint => "empty_fixed_point",
            ExampleId::Figure1Graph => "figure1_graph",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownExample(s.to_owned()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedMap {
    pub name: &'static str,
    pub map: SelfMap,
    /// A contraction modulus claimed for this map in its source, if any.
    pub stated_modulus: Option<ExtDistance>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example {
    pub id: ExampleId,
    pub space: MetricSpace,
    pub maps: Vec<NamedMap>,
    /// The underlying graph, for graph examples.
    pub graph: Option<Graph>,
}

impl Example {
    pub fn map(&self, name: &str) -> Option<&NamedMap> {
        self.maps.iter().find(|m| m.name == name)
    }
}

fn named(name: &'static str, map: SelfMap) -> NamedMap {
    NamedMap { name, map, stated_modulus: None }
}

pub const MIN_WINDOW: usize = 3;

/// Builds a named example. For rule spaces the window is `{0, …, window}`;
/// for `figure1_graph` it is the number of vertices per chain, bridged.
pub fn build_example(id: ExampleId, window: usize) -> Result<Example> {
    if window < MIN_WINDOW {
        return Err(Error::WindowTooSmall { min: MIN_WINDOW, got: window });
    }
    let rule_space = |rule| MetricSpace::from_rule(rule, window);
    let example = match id {
        ExampleId::Ex1Finite => Example {
            id,
            space: ex1_finite(),
            maps: vec![named("indicator-of-2", SelfMap::Table(vec![0, 0, 1]))],
            graph: None,
        },
        ExampleId::Ex1Infinite => Example {
            id,
            space: rule_space(SpaceRule::TwoLevel),
            maps: vec![named("indicator-outside-01", SelfMap::Rule(MapRule::OutsideZeroOne))],
            graph: None,
        },
        ExampleId::Ex2 => Example {
            id,
            space: rule_space(SpaceRule::ReciprocalMax),
            maps: vec![
                named("shift", SelfMap::Rule(MapRule::ShiftAboveOne)),
                NamedMap {
                    name: "two-valued",
                    map: SelfMap::Rule(MapRule::TwoValued),
                    stated_modulus: Some(ExtDistance::ratio(2, 3)),
                },
            ],
            graph: None,
        },
        ExampleId::Ex3 => Example {
            id,
            space: rule_space(SpaceRule::ReciprocalGap),
            maps: vec![named("shift", SelfMap::Rule(MapRule::ShiftAboveOne))],
            graph: None,
        },
        ExampleId::EmptyFixedPoint => Example {
            id,
            space: rule_space(SpaceRule::HarmonicRay),
            maps: vec![named("shift", SelfMap::Rule(MapRule::ShiftOntoTwo))],
            graph: None,
        },
        ExampleId::Figure1Graph => {
            let graph = figure1_graph(window, true);
            Example { id, space: natural_distance(&graph)?, maps: vec![], graph: Some(graph) }
        }
    };
    Ok(example)
}

/// `d(0,1) = 1`, `d(1,2) = 2`, `d(0,2) = 3`.
pub fn ex1_finite() -> MetricSpace {
    MetricSpace::from_fn(3, |x, y| {
        ExtDistance::from_integer(match (x, y) {
            (0, 1) => 1,
            (1, 2) => 2,
            _ => 3,
        })
    })
    .expect("three points")
}

/// Two chains `0 – 1 – … – (m-1)` and `m – … – (2m-1)`; the optional
/// bridge joins their first vertices `0` and `m`.
pub fn figure1_graph(m: usize, bridge: bool) -> Graph {
    let mut g = Graph::new(2 * m);
    for offset in [0, m] {
        for i in 1..m {
            g.add_edge(offset + i - 1, offset + i).expect("chain edge");
        }
    }
    if bridge && m > 0 {
        g.add_edge(0, m).expect("bridge edge");
    }
    g
}

/// Comparison of a stated contraction modulus with the computed one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModulusCheck {
    pub stated: ExtDistance,
    pub computed: ExtDistance,
    /// The stated modulus bounds every window ratio.
    pub holds: bool,
}

pub fn check_stated_modulus(map: &NamedMap, report: &ClassificationReport) -> Option<ModulusCheck> {
    let stated = map.stated_modulus.clone()?;
    Some(ModulusCheck {
        holds: report.k_min <= stated,
        computed: report.k_min.clone(),
        stated,
    })
}
