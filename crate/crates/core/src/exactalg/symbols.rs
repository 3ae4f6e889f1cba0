use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Ordered list of variable names. The first `n_geometric` symbols are the
/// homogeneous coordinates; the rest are parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    n_geometric: usize,
}

pub type Table = Arc<SymbolTable>;

const STANDARD_PARAMS: &[&str] = &[
    "a0", "a1", "a2", "a3", "a4", "a5", "b0", "b1", "b2", "b3", "b4", "b5", "c0", "c1", "c2",
    "c3", "c4", "c5", "alpha", "beta", "gamma", "delta", "epsilon", "kappa", "lambda", "mu",
    "theta", "xi", "a", "b", "r",
];

impl SymbolTable {
    pub fn new(geometric: &[&str], params: &[&str]) -> Result<Table> {
        let mut names: Vec<String> = Vec::with_capacity(geometric.len() + params.len());
        for n in geometric.iter().chain(params) {
            if names.iter().any(|m| m == n) {
                return Err(Error::DuplicateSymbol(n.to_string()));
            }
            names.push(n.to_string());
        }
        Ok(Arc::new(SymbolTable {
            names,
            n_geometric: geometric.len(),
        }))
    }

    /// `x, y, z` only.
    pub fn geometric() -> Table {
        static T: OnceLock<Table> = OnceLock::new();
        T.get_or_init(|| SymbolTable::new(&["x", "y", "z"], &[]).expect("static table"))
            .clone()
    }

    /// `x, y, z` followed by the parameters used by the built-in families.
    pub fn standard() -> Table {
        static T: OnceLock<Table> = OnceLock::new();
        T.get_or_init(|| {
            SymbolTable::new(&["x", "y", "z"], STANDARD_PARAMS).expect("static table")
        })
        .clone()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn n_geometric(&self) -> usize {
        self.n_geometric
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn is_geometric(&self, i: usize) -> bool {
        i < self.n_geometric
    }

    pub fn param_indices(&self) -> std::ops::Range<usize> {
        self.n_geometric..self.names.len()
    }
}

pub fn same_table(a: &Table, b: &Table) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_and_layout() {
        let t = SymbolTable::standard();
        assert_eq!(t.n_geometric(), 3);
        assert_eq!(t.index("z").unwrap(), 2);
        assert_eq!(t.index("a0").unwrap(), 3);
        assert!(t.index("w").is_err());
        assert!(t.is_geometric(1) && !t.is_geometric(3));
    }

    #[test]
    fn duplicates_rejected() {
        assert_eq!(
            SymbolTable::new(&["x", "y"], &["x"]).unwrap_err(),
            Error::DuplicateSymbol("x".into())
        );
    }

    #[test]
    fn equality_is_structural() {
        let a = SymbolTable::new(&["x", "y", "z"], &[]).unwrap();
        assert!(same_table(&a, &SymbolTable::geometric()));
        assert!(!same_table(&a, &SymbolTable::standard()));
    }
}
