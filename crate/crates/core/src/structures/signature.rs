use super::StructureError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symbol {
    pub name: String,
    pub arity: usize,
}

/// An ordered list of relation symbols. The order is canonical: relations of
/// a structure are stored and iterated in this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    symbols: Vec<Symbol>,
}

impl Signature {
    pub fn new<I, S>(symbols: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut out: Vec<Symbol> = Vec::new();
        for (name, arity) in symbols {
            let name = name.into();
            if arity == 0 {
                return Err(StructureError::ZeroArity(name));
            }
            if out.iter().any(|s| s.name == name) {
                return Err(StructureError::DuplicateSymbol(name));
            }
            out.push(Symbol { name, arity });
        }
        Ok(Signature { symbols: out })
    }

    /// The signature of (di)graphs: a single binary symbol `E`.
    pub fn graph() -> Self {
        Signature {
            symbols: vec![Symbol {
                name: "E".into(),
                arity: 2,
            }],
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &Symbol {
        &self.symbols[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    /// Maximum arity, 0 for the empty signature.
    pub fn arity(&self) -> usize {
        self.symbols.iter().map(|s| s.arity).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_nullary() {
        assert_eq!(
            Signature::new([("E", 2), ("E", 3)]),
            Err(StructureError::DuplicateSymbol("E".into()))
        );
        assert_eq!(Signature::new([("P", 0)]), Err(StructureError::ZeroArity("P".into())));
    }

    #[test]
    fn order_is_preserved() {
        let sig = Signature::new([("V", 2), ("H", 2), ("T", 3)]).unwrap();
        assert_eq!(sig.index_of("H"), Some(1));
        assert_eq!(sig.arity(), 3);
    }
}
