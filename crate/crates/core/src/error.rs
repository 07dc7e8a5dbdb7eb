use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational `{0}` (expected \"p\", \"p/q\" or \"inf\")")]
    InvalidRational(String),
    #[error("float-valued distance `{0}` rejected; use an exact rational")]
    FloatRejected(String),
    #[error("negative distance `{0}`")]
    NegativeDistance(String),
    #[error("distance table is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("descriptor declares {declared} points but the table has {actual} rows")]
    PointCountMismatch { declared: usize, actual: usize },
    #[error("space has no points")]
    EmptyWindow,
    #[error("point {point} is outside the window of {size} points")]
    OutOfWindow { point: usize, size: usize },
    #[error("every off-diagonal distance is infinite; no finite minimal distance exists")]
    NoFiniteDistance,
    #[error("distinct points {0} and {1} are at distance zero")]
    ZeroDistance(usize, usize),
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("map is not total: {got} images for a window of {expected} points")]
    MapNotTotal { expected: usize, got: usize },
    #[error("image {image} of point {point} has no distance in this space")]
    ImageUnresolvable { point: usize, image: usize },
    #[error("the quotient has a single class; only constant maps are contractive")]
    SingleClass,
    #[error("map is not contractive: pair ({0}, {1}) is not contracted")]
    NotContractive(usize, usize),
    #[error("map is not constant on the class of point {0}")]
    NotClassConstant(usize),
    #[error("contractive map has several fixed points: {0:?}")]
    MultipleFixedPoints(Vec<usize>),
    #[error("epsilon must be a rational strictly greater than 1, got {0}")]
    InvalidEpsilon(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("window must be at least {min}, got {got}")]
    WindowTooSmall { min: usize, got: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("enumeration needs an explicit table space")]
    NotFiniteTable,
    #[error("{points} points exceed the enumeration cap of {cap}")]
    EnumerationCap { points: usize, cap: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
