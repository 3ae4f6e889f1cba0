use super::ratmap::{compose_reduce, RatMap};
use crate::error::{Error, Result};

/// Finite composition `f1 o f2 o ... o fn`, written left to right.
/// Pullback applies `f1^*` first.
#[derive(Debug, Clone)]
pub struct MapWord {
    letters: Vec<RatMap>,
}

impl MapWord {
    pub fn new(letters: Vec<RatMap>) -> Self {
        MapWord { letters }
    }

    pub fn letters(&self) -> &[RatMap] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced composite map.
    pub fn compose(&self) -> Result<RatMap> {
        let mut it = self.letters.iter();
        let first = it.next().ok_or(Error::ZeroMap)?.clone();
        it.try_fold(first, |acc, m| compose_reduce(&acc, m))
    }
}

/// The word composes to `target` up to a constant factor.
pub fn verify_word(word: &MapWord, target: &RatMap) -> Result<bool> {
    Ok(word.compose()?.projectively_equal(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birmap::builtins;
    use crate::exactalg::SymbolTable;

    #[test]
    fn empty_word_is_an_error() {
        assert!(MapWord::new(vec![]).compose().is_err());
    }

    #[test]
    fn rho_word_composes_to_rho() {
        let t = SymbolTable::geometric();
        let w = builtins::word("rho_word", &t).unwrap();
        assert!(verify_word(&w, &builtins::rho(&t)).unwrap());
        assert!(!verify_word(&w, &builtins::tau(&t)).unwrap());
    }
}
