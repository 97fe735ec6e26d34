//! Keyed lazily-built values with at-most-once construction per key.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;

type Slot<T> = Arc<OnceLock<Result<Arc<T>>>>;

pub(crate) struct Cache<K, T> {
    slots: OnceLock<Mutex<HashMap<K, Slot<T>>>>,
}

impl<K: Hash + Eq, T> Cache<K, T> {
    pub(crate) const fn new() -> Self {
        Cache {
            slots: OnceLock::new(),
        }
    }

    /// Returns the value for `key`, running `build` if no other caller has.
    /// Concurrent callers for the same key block on the one construction;
    /// the map lock is only held to find the slot.
    pub(crate) fn get_or_build(&self, key: K, build: impl FnOnce() -> Result<T>) -> Result<Arc<T>> {
        let slot = {
            let mut map = self
                .slots
                .get_or_init(|| Mutex::new(HashMap::new()))
                .lock()
                .unwrap_or_else(|e| e.into_inner());
            map.entry(key).or_default().clone()
        };
        slot.get_or_init(|| build().map(Arc::new)).clone()
    }
}
