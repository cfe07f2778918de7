use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Mutex;

/// Thread-safe memo table. Values are computed outside the lock; if two
/// threads race on a key, the first stored value wins and both observe it.
pub(crate) struct Memo<K, V> {
    map: Mutex<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            map: Mutex::new(HashMap::new()),
        }
    }

    pub fn get_or_try_insert<E>(&self, key: K, f: impl FnOnce() -> Result<V, E>) -> Result<V, E> {
        if let Some(v) = self.map.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = f()?;
        Ok(self.map.lock().unwrap().entry(key).or_insert(v).clone())
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}
