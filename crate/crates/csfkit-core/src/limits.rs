//! Process-wide size caps. The defaults keep exhaustive runs short; callers
//! may raise them.

use core::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_MAX_DEGREE: usize = 12;
pub const DEFAULT_MAX_UIO_SIZE: usize = 8;
pub const DEFAULT_MAX_SEQ_LEN: usize = 10;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);
static MAX_UIO_SIZE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_UIO_SIZE);
static MAX_SEQ_LEN: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_SEQ_LEN);

/// Largest degree accepted by symmetric-function and chromatic operations.
pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_degree(d: usize) {
    MAX_DEGREE.store(d, Ordering::Relaxed);
}

/// Largest size accepted by [`crate::uio::enumerate_uios`].
pub fn max_uio_size() -> usize {
    MAX_UIO_SIZE.load(Ordering::Relaxed)
}

pub fn set_max_uio_size(n: usize) {
    MAX_UIO_SIZE.store(n, Ordering::Relaxed);
}

/// Largest sequence length accepted by correct-sequence enumeration.
pub fn max_seq_len() -> usize {
    MAX_SEQ_LEN.load(Ordering::Relaxed)
}

pub fn set_max_seq_len(k: usize) {
    MAX_SEQ_LEN.store(k, Ordering::Relaxed);
}

pub(crate) fn check(what: &'static str, size: usize, cap: usize) -> crate::Result<()> {
    if size > cap {
        Err(crate::Error::OverCap { what, size, cap })
    } else {
        Ok(())
    }
}
