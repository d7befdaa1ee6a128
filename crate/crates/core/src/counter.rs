use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

/// Shared tally of base-ring multiplications.
///
/// Clones share the same tally. Every arithmetic context owns one; pass the
/// same counter to several contexts to aggregate their work.
#[derive(Clone, Debug, Default)]
pub struct MulCounter(Arc<AtomicU64>);

impl MulCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&self, n: u64) {
        self.0.fetch_add(n, Ordering::Relaxed);
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.0.store(0, Ordering::Relaxed);
    }

    /// Runs `f` and returns its result with the number of multiplications
    /// tallied on this counter meanwhile.
    pub fn measure<T>(&self, f: impl FnOnce() -> T) -> (T, u64) {
        let before = self.get();
        let out = f();
        (out, self.get() - before)
    }
}
