use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite coordinate in point {index}")]
    NonFinite { index: usize },

    #[error("tolerance {0} must lie in (0, 1e-3)")]
    InvalidTolerance(f64),

    #[error("packing radius must be 1.0, got {0}")]
    InvalidRadius(f64),

    #[error("balls {i} and {j} overlap: center distance {distance}")]
    Overlap { i: usize, j: usize, distance: f64 },

    #[error("vertex {vertex} has {degree} contacts, more than the kissing number 12")]
    DegreeOverflow { vertex: usize, degree: usize },

    #[error("{what}: cosine argument {argument} is outside [-1, 1]")]
    Domain { what: &'static str, argument: f64 },

    #[error("cap centers {i} and {j} are {distance} apart, below the minimum {minimum}")]
    CapOverlap {
        i: usize,
        j: usize,
        distance: f64,
        minimum: f64,
    },

    #[error("{0} caps of angular radius pi/6 cannot pack on the sphere (at most 12)")]
    TooManyCaps(usize),

    #[error("triangulation needs at least 4 points, got {0}")]
    TooFewPoints(usize),

    #[error("points are coplanar; their convex hull does not span the sphere")]
    HemisphereDegeneracy,

    #[error("hull facets do not form a closed triangulation: {0}")]
    NonManifold(String),

    #[error("triangle {triangle} has side {side} shorter than pi/3")]
    SideTooShort { triangle: usize, side: f64 },

    #[error("regular polygon area is only defined for 3 or 4 sides, got {0}")]
    UnsupportedSides(usize),

    #[error("neither polar convention yields minimum distance pi/3 (best {best})")]
    Convention { best: f64 },

    #[error("{what}: expected {expected}, computed {computed}")]
    Mismatch {
        what: String,
        expected: String,
        computed: String,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
}
