use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {family}{rank}")]
    UnsupportedFamily { family: String, rank: usize },
    #[error("Weyl group of order {order} exceeds the enumeration bound {bound}")]
    WeylGroupTooLarge { order: u128, bound: usize },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("point lies on the wall {0}")]
    PointOnWall(String),
    #[error("alcoves are not adjacent across the given hyperplane")]
    NotAdjacent,
    #[error("alcove is not above its neighbour across the shared wall")]
    NotAbove,
    #[error("floor vector does not describe a nonempty alcove")]
    EmptyAlcove,
    #[error("point pair is not in the regular part of V")]
    NotInVreg,
    #[error("point pair is not in the fundamental domain S")]
    NotInS,
    #[error("segment between witnesses meets a stratum of codimension at least two")]
    DegenerateSegment,
    #[error("the Kleinian model needs a simply-laced root system, got family {0}")]
    NotSimplyLaced(char),
    #[error("operation is not available for the {0} model")]
    UnsupportedModel(&'static str),
    #[error("class is zero")]
    ZeroClass,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("path is not transversal: {0}")]
    NonTransversalCrossing(String),
    #[error("path leaves the regular part of V at step {0}")]
    PathLeavesVreg(usize),
    #[error("path does not start at the projection of the covering point")]
    PathStartMismatch,
    #[error("central charge vanishes along the path")]
    VanishingCharge,
    #[error("parse error: {0}")]
    Parse(String),
}
