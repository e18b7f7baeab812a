use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

/// A concurrent memo table: readers share the lock, inserts keep the first
/// value written. Values are deterministic, so a racing recomputation is
/// harmless.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn get(&self, key: &K) -> Option<V> {
        self.map.read().unwrap().get(key).cloned()
    }

    pub(crate) fn insert(&self, key: K, value: V) -> V {
        self.map.write().unwrap().entry(key).or_insert(value).clone()
    }

    pub(crate) fn clear(&self) {
        self.map.write().unwrap().clear();
    }

    pub(crate) fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }
}
