//! Built-in worked examples: the Euclidean bialgebra, its double, the
//! Galilei contraction of that double, and the named exponent maps that
//! produce the standard limits. Every entry doubles as golden data for
//! the regression tests.

use crate::contraction::ExponentMap;
use crate::document::{load_document, AlgebraDocument};

/// A named exponent map, given per generator of the base bialgebra
/// (`m` scales the primal block of a double, `n` the dual block).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub m: MapRule,
    pub n: MapRule,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapRule {
    /// Same exponent on every generator, any dimension.
    Uniform(i64),
    /// One exponent per generator of a fixed-dimension base.
    PerIndex(Vec<i64>),
}

impl MapRule {
    /// Concrete exponents for a base of dimension `dim`, or None when a
    /// per-index rule does not fit that dimension.
    pub fn for_dim(&self, dim: usize) -> Option<ExponentMap> {
        match self {
            MapRule::Uniform(v) => Some(ExponentMap::uniform(dim, *v)),
            MapRule::PerIndex(v) if v.len() == dim => Some(ExponentMap(v.clone())),
            MapRule::PerIndex(_) => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            MapRule::Uniform(v) => format!("{v} on every generator"),
            MapRule::PerIndex(v) => format!(
                "({})",
                v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub enum CatalogItem {
    Algebra(AlgebraDocument),
    Map(MapEntry),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub summary: &'static str,
    pub item: CatalogItem,
}

const E2_TOML: &str = include_str!("../catalog/e2.toml");
const E2_DOUBLE_TOML: &str = include_str!("../catalog/e2-double.toml");
const GALILEI_DOUBLE_TOML: &str = include_str!("../catalog/galilei-double.toml");

/// Raw document source for a catalog algebra, for display and round-trip
/// tests.
pub fn source(key: &str) -> Option<&'static str> {
    match key {
        "e2" => Some(E2_TOML),
        "e2-double" => Some(E2_DOUBLE_TOML),
        "galilei-double" => Some(GALILEI_DOUBLE_TOML),
        _ => None,
    }
}

pub fn entries() -> Vec<CatalogEntry> {
    let algebra = |key, summary, text| CatalogEntry {
        key,
        summary,
        item: CatalogItem::Algebra(
            load_document(text).unwrap_or_else(|e| panic!("catalog entry {key}: {e}")),
        ),
    };
    let map = |key, summary, m, n| CatalogEntry {
        key,
        summary,
        item: CatalogItem::Map(MapEntry { m, n }),
    };
    vec![
        algebra(
            "e2",
            "Euclidean bialgebra e(2) with the z-family cocommutator and r-matrix z J12^P1",
            E2_TOML,
        ),
        algebra(
            "e2-double",
            "classical double of e(2) with canonical cocommutator and r-matrix",
            E2_DOUBLE_TOML,
        ),
        algebra(
            "galilei-double",
            "non-relativistic contraction of the e(2) double (three brackets vanish)",
            GALILEI_DOUBLE_TOML,
        ),
        map(
            "nonrel-map",
            "speed-of-light exponents carrying e(2) to the Galilei double",
            MapRule::PerIndex(vec![1, 0, 1]),
            MapRule::PerIndex(vec![0, 1, 0]),
        ),
        map(
            "abelianizer",
            "uniform exponent 1 on both blocks; flattens any double to the abelian algebra",
            MapRule::Uniform(1),
            MapRule::Uniform(1),
        ),
        map(
            "classical-limit",
            "contract along the dual block only; the x-block becomes abelian",
            MapRule::Uniform(0),
            MapRule::Uniform(1),
        ),
        map(
            "dual-classical-limit",
            "contract along the primal block only; the X-block becomes abelian",
            MapRule::Uniform(1),
            MapRule::Uniform(0),
        ),
    ]
}

pub fn find(key: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.key == key)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::cocommutator_from_rmatrix;
    use crate::contraction::fundamental_constant;
    use crate::double::build_double;

    fn algebra(key: &str) -> AlgebraDocument {
        match find(key).unwrap().item {
            CatalogItem::Algebra(doc) => doc,
            CatalogItem::Map(_) => panic!("{key} is a map"),
        }
    }

    #[test]
    fn every_algebra_entry_validates() {
        for e in entries() {
            if let CatalogItem::Algebra(doc) = e.item {
                let b = doc.to_bialgebra().unwrap();
                assert!(b.is_valid(), "catalog entry {} is invalid", e.key);
            }
        }
    }

    #[test]
    fn e2_rmatrix_is_coboundary_for_its_cocommutator() {
        let doc = algebra("e2");
        let b = doc.to_bialgebra().unwrap();
        let rho = doc.rmatrix().unwrap().unwrap();
        assert_eq!(cocommutator_from_rmatrix(&b.c, &rho).unwrap(), b.f);
    }

    #[test]
    fn e2_double_entry_regenerates_from_the_engine() {
        let base = algebra("e2").to_bialgebra().unwrap();
        let stored = algebra("e2-double");
        let d = build_double(&base).unwrap();
        let built = d.as_bialgebra();
        let b = stored.to_bialgebra().unwrap();
        assert_eq!(b.c, built.c);
        assert_eq!(b.f, built.f);
        assert_eq!(b.names, built.names);
        assert_eq!(stored.rmatrix().unwrap().unwrap(), d.canonical_rmatrix());
    }

    #[test]
    fn galilei_double_entry_is_double_of_contracted_base() {
        let base = algebra("e2").to_bialgebra().unwrap();
        let m = match find("nonrel-map").unwrap().item {
            CatalogItem::Map(entry) => entry.m.for_dim(3).unwrap(),
            _ => unreachable!(),
        };
        let fundamental = fundamental_constant(&base, &m).unwrap();
        let contracted = fundamental.contracted;
        let d = build_double(&contracted).unwrap();
        let built = d.as_bialgebra();
        let stored = algebra("galilei-double").to_bialgebra().unwrap();
        assert_eq!(stored.c, built.c);
        assert_eq!(stored.f, built.f);
    }

    #[test]
    fn map_rules_resolve_per_dimension() {
        let e = find("abelianizer").unwrap();
        let CatalogItem::Map(m) = e.item else {
            panic!()
        };
        assert_eq!(m.m.for_dim(4).unwrap().0, vec![1, 1, 1, 1]);
        let e = find("nonrel-map").unwrap();
        let CatalogItem::Map(m) = e.item else {
            panic!()
        };
        assert_eq!(m.m.for_dim(3).unwrap().0, vec![1, 0, 1]);
        assert!(m.m.for_dim(4).is_none());
    }

    #[test]
    fn lookup_misses_return_none() {
        assert!(find("no-such-entry").is_none());
        assert!(source("no-such-entry").is_none());
    }
}
