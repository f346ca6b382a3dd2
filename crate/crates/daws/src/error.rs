use std::fmt;

/// Errors produced by the library.
///
/// Domain violations (bad input data) and internal guards (scan caps,
/// iteration limits) are kept as distinct variants so callers can map them
/// to different exit paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The requested type/rank pair is not a simply-laced Dynkin type.
    InvalidSystem { label: char, rank: usize },
    /// Two values from different root systems were combined.
    SystemMismatch,
    /// The coordinate vector is not a root of the system.
    NotARoot(Vec<i64>),
    /// A simple-reflection index was out of range.
    BadGeneratorIndex(usize),
    /// The affine weight cannot be made dominant (negative level, or level
    /// zero with a nonzero finite part).
    OutsideTitsCone,
    /// The operation requires level(x) > 0.
    LevelZero,
    /// A positive root was required.
    NotPositive,
    /// x^{-1}(alpha) is not negative: alpha is not a downward reflection at x.
    NotDownward,
    /// x^{-1}(beta) is not positive: beta is not an upward reflection at x.
    NotUpward,
    /// The weight must be dominant.
    NotDominant,
    /// The weight must be regular.
    NotRegular,
    /// rotate180 requires equal finite parts.
    FinitePartMismatch,
    /// is_corner requires a root corresponding to a point of the graph.
    NotInGraph,
    /// QBG classification gate: the group part is longer than the bound M.
    GroupBoundExceeded { len: i64, bound: i64 },
    /// QBG classification gate: a simple pairing of the dominant weight is
    /// below the required depth.
    DepthBoundViolated {
        index: usize,
        pairing: i64,
        required: i64,
    },
    /// A scan exceeded its safety cap. Finiteness is guaranteed by theory,
    /// so hitting this indicates a bug, never silent truncation.
    CapExceeded { what: &'static str, cap: usize },
    /// An internal iteration guard tripped; unreachable on valid input.
    IterationGuard(&'static str),
    /// An oracle search exceeded its stated depth or window.
    DepthExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSystem { label, rank } => {
                write!(f, "invalid simply-laced type: {}{}", label, rank)
            }
            Error::SystemMismatch => write!(f, "values belong to different root systems"),
            Error::NotARoot(v) => write!(f, "{:?} is not a root", v),
            Error::BadGeneratorIndex(i) => write!(f, "no simple reflection with index {}", i),
            Error::OutsideTitsCone => write!(f, "weight outside Tits cone"),
            Error::LevelZero => write!(f, "operation requires level > 0"),
            Error::NotPositive => write!(f, "root must be positive"),
            Error::NotDownward => write!(f, "not a downward reflection: x^-1(alpha) is positive"),
            Error::NotUpward => write!(f, "not an upward reflection: x^-1(beta) is negative"),
            Error::NotDominant => write!(f, "weight must be dominant"),
            Error::NotRegular => write!(f, "weight must be regular"),
            Error::FinitePartMismatch => write!(f, "finite parts differ"),
            Error::NotInGraph => write!(f, "root does not correspond to a point of the graph"),
            Error::GroupBoundExceeded { len, bound } => {
                write!(f, "group part has length {} > bound M = {}", len, bound)
            }
            Error::DepthBoundViolated {
                index,
                pairing,
                required,
            } => write!(
                f,
                "<zeta, alpha_{}> = {} violates the required bound {}",
                index, pairing, required
            ),
            Error::CapExceeded { what, cap } => {
                write!(f, "safety cap {} exceeded in {}", cap, what)
            }
            Error::IterationGuard(what) => write!(f, "iteration guard tripped in {}", what),
            Error::DepthExceeded => write!(f, "search depth exceeded"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
