//! Exact symbolic computation in the Leavitt path algebra of a finite
//! directed graph, realized as the Steinberg algebra of its graph groupoid.
//!
//! The crate provides, layer by layer:
//!
//! - [`graph`], [`path`], [`groupoid`] — finite graphs, finite and eventually
//!   periodic infinite paths, and the graph groupoid with its cylinder basis;
//! - [`ring`] — exact involutive coefficients (ℤ and ℤ\[i\]);
//! - [`algebra`] — normal-form arithmetic on `Σ r·1_{Z(μ,ν)}`: convolution,
//!   involution, grading, the diagonal subalgebra;
//! - [`action`] — diagonal normalizers and the partial action they induce on
//!   the infinite-path space, with the isolated-path compression lemmas;
//! - [`weyl`] — the Weyl groupoid of classes `[(n,x)]` and the isomorphism
//!   with the graph groupoid, in both directions;
//! - [`stone`] — the Boolean algebra of diagonal idempotents, the
//!   path/ultrafilter correspondence and the induced path-space map κ;
//! - [`iso`] — candidate diagonal-preserving ring *-isomorphisms, their
//!   validation, and the round trip between algebra isomorphisms and
//!   groupoid isomorphisms;
//! - [`cli`] — the `leavitt` command-line front end.
//!
//! See the crate `examples/` directory for one runnable walkthrough per
//! capability, and `tests/acceptance.rs` for the full verification suite.

pub mod action;
pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod graph;
pub mod groupoid;
pub mod iso;
pub mod path;
pub mod props;
pub mod ring;
pub mod sampling;
pub mod stone;
pub mod textio;
pub mod weyl;

pub use algebra::{AlgebraElement, Degree};
pub use graph::{EdgeId, Graph, VertexId};
pub use groupoid::{ArrowCylinder, ArrowTriple};
pub use path::{FinPath, LassoPath};
pub use ring::{RingKind, RingScalar};
