//! Exact computation with the ordinal structures `ℛ^ρ = (ORD, ≤, ≤₁, ≤₂)`:
//! Cantor normal form arithmetic, the component calculus for `κ_α` and
//! `max₁`, three-valued `≤₁`/`≤₂` decisions, coverings of closed sets and
//! incompressible sets, and finite pattern checks.

pub mod budget;
pub mod error;
pub mod incompressible;
pub mod nu;
pub mod oracle;
pub mod ordinal;
pub mod relation;
pub mod rho;
pub mod sample;
pub mod suite;

pub use budget::{Budget, Universe};
pub use error::{Error, Result};
pub use incompressible::{
    build_from_index_set, extend_incompressible, incompressible_cover, verify_incompressible,
    IndexedSet, Verification, VerifyReport,
};
pub use nu::{JInterval, NuInfo};
pub use oracle::{
    check_axioms, covering_search, extract_pattern, iso_check, structure_iso, to_dot,
    FinitePattern, Iso,
};
pub use ordinal::{ExtOrdinal, Ordinal, OrdinalError, Rho};
pub use relation::{
    Bound, Calculus, ComponentInfo, ComponentKind, Decision, RelationOracle, Step, Verdict,
};
pub use rho::{certify_covering, check_embedding, Certification, ClosedSet, CoveringMap, Level};
