use crate::error::{Error, Result};

/// Largest coefficient box enumerated unless overridden.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// Environment variable that replaces [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "CIRCLE_ORBIT_CAP";

/// [`DEFAULT_CAP`], or the value of `CIRCLE_ORBIT_CAP` when set.
pub fn cap_from_env() -> Result<u128> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u128>()
            .map_err(|_| Error::invalid(format!("{CAP_ENV}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// Enumeration limits shared by every box search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub cap: u128,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cap: DEFAULT_CAP, workers: None }
    }
}

impl Limits {
    pub fn with_cap(cap: u128) -> Self {
        Limits { cap, workers: None }
    }

    /// Fails when `(2B+1)^dim` exceeds the cap.
    pub fn check_box(&self, bound: u64, dim: usize) -> Result<u128> {
        let side = 2 * bound as u128 + 1;
        let mut size: u128 = 1;
        for _ in 0..dim {
            size = size.saturating_mul(side);
        }
        if size > self.cap {
            return Err(Error::ResourceCap { requested: size, cap: self.cap });
        }
        Ok(size)
    }

    /// Runs `f` on a dedicated pool when a worker count is set.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(f()),
            Some(0) => Err(Error::invalid("worker count must be positive")),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}
