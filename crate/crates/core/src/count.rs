//! Deterministic construction counter for complexity assertions.
//!
//! Counts structure-node constructions: free-monad `Con` nodes, free-applicative
//! `Rec` nodes, free-pre-arrow `Comp` cells, and shared-list cons cells. Tests
//! assert on these counts; wall-clock time is reported by the bench runner only.

use std::cell::Cell;

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

/// Reset this thread's counter to zero.
pub fn reset() {
    OPS.with(|c| c.set(0));
}

/// Constructions counted on this thread since the last reset.
pub fn get() -> u64 {
    OPS.with(|c| c.get())
}

/// Record one construction. Called only by counted constructors.
pub fn bump() {
    OPS.with(|c| c.set(c.get() + 1));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counter_resets_and_accumulates() {
        reset();
        assert_eq!(get(), 0);
        bump();
        bump();
        assert_eq!(get(), 2);
        reset();
        assert_eq!(get(), 0);
    }
}
