//! Monoids in monoidal categories, executable.
//!
//! Monads, applicative functors, and arrows are all monoids, each in its own
//! monoidal category of endofunctors or profunctors. This crate makes that
//! uniform account runnable: free monoids give the free monad, the free
//! applicative, and the free pre-arrow; the Cayley construction gives their
//! efficient continuation- and difference-style representations; and lax
//! monoidal functors transport monoids between the categories.
//!
//! Everything is instantiated at a small closed value universe so that the
//! structure laws can be checked by randomized testing and the asymptotic
//! claims by counting constructor allocations.

pub mod arrow;
pub mod bench;
pub mod count;
pub mod day;
pub mod free_monad;
pub mod functor;
pub mod gen;
pub mod laws;
pub mod observe;
pub mod registry;
pub mod set_monoid;
pub mod transport;
pub mod value;
pub mod writer;
pub mod yoneda;

pub use observe::Observation;
pub use value::{SampledFn, Value};
pub use writer::{Multi, Writer};
