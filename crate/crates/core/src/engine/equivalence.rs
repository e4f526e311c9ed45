//! Equivalence (same host trees) and basic hypertrees.

use std::collections::BTreeSet;

use super::basis::basic_sets;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EquivalenceMode {
    /// Non-hypertrees are refused with [`Error::NotHypertree`].
    #[default]
    Strict,
    /// Literal definition: all non-hypertrees on a universe are equivalent
    /// (they share the empty set of host trees).
    Permissive,
}

fn basic_family(h: &Hypergraph) -> Result<BTreeSet<VertexSet>> {
    Ok(basic_sets(h)?.records.into_iter().map(|r| r.set).collect())
}

/// Same vertex universe (as label sets) and the same basic sets.
pub fn equivalent(h1: &Hypergraph, h2: &Hypergraph) -> Result<bool> {
    equivalent_with(h1, h2, EquivalenceMode::Strict)
}

pub fn equivalent_with(h1: &Hypergraph, h2: &Hypergraph, mode: EquivalenceMode) -> Result<bool> {
    let h2 = h2.relabel_onto(h1)?;
    let b1 = basic_family(h1);
    let b2 = basic_family(&h2);
    match (b1, b2, mode) {
        (Ok(a), Ok(b), _) => Ok(a == b),
        (Err(Error::NotHypertree), Err(Error::NotHypertree), EquivalenceMode::Permissive) => {
            Ok(true)
        }
        (Err(Error::NotHypertree), Ok(_), EquivalenceMode::Permissive)
        | (Ok(_), Err(Error::NotHypertree), EquivalenceMode::Permissive) => Ok(false),
        (Err(e), _, _) | (_, Err(e), _) => Err(e),
    }
}

/// `h` is a hypertree equivalent to `N(h)`.
pub fn is_basic_hypertree(h: &Hypergraph) -> Result<bool> {
    equivalent(h, &h.neighborhood_hypergraph())
}

/// Characterization by witnesses: for every basic set `B` and `x ∉ B` there
/// is `y` with some edge `⊇ B ∪ {y}` and no edge `⊇ {x, y}`. "No edge holds
/// `{x, y}`" is read in the closed-neighbourhood sense, so `y = x` never
/// qualifies.
pub fn basic_by_witnesses(h: &Hypergraph) -> Result<bool> {
    let basis = basic_sets(h)?;
    let closed: Vec<VertexSet> = h.neighborhood_hypergraph().edges().to_vec();
    for r in basis.iter() {
        let containing: Vec<&VertexSet> =
            h.edges().iter().filter(|e| r.set.is_subset(e)).collect();
        let mut reach = VertexSet::new();
        for e in &containing {
            reach.union_with(e);
        }
        for x in (0..h.n()).filter(|&x| !r.set.contains(x)) {
            if !reach.iter().any(|y| !closed[x].contains(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn paper1_is_equivalent_to_its_two_big_edges() {
        let reduced = hg(&[&["1", "2", "3"], &["2", "3", "4"]]);
        assert_eq!(equivalent(&paper1(), &reduced), Ok(true));
    }

    #[test]
    fn path_and_its_neighborhood_hypergraph() {
        let p = path3();
        assert_eq!(equivalent(&p, &p.neighborhood_hypergraph()), Ok(true));
        assert_eq!(equivalent(&p, &hg(&[&["1", "2", "3"]])), Ok(false));
    }

    #[test]
    fn label_order_does_not_matter() {
        let a = hg(&[&["1", "2"], &["2", "3"]]);
        let b = hg(&[&["3", "2"], &["2", "1"]]);
        assert_eq!(equivalent(&a, &b), Ok(true));
        let other = hg(&[&["1", "2"], &["2", "4"]]);
        assert_eq!(equivalent(&a, &other), Err(Error::DifferentUniverse));
    }

    #[test]
    fn non_hypertrees_refused_unless_permissive() {
        let h1 = triangle();
        let h2 = hg(&[&["1", "2"], &["1", "3"], &["2", "3"], &["1", "2"]]);
        assert_eq!(equivalent(&h1, &h2), Err(Error::NotHypertree));
        assert_eq!(equivalent_with(&h1, &h2, EquivalenceMode::Permissive), Ok(true));
        let tree = hg(&[&["1", "2"], &["2", "3"]]);
        assert_eq!(equivalent_with(&h1, &tree, EquivalenceMode::Permissive), Ok(false));
    }

    #[test]
    fn basic_examples() {
        let p = path3();
        assert_eq!(is_basic_hypertree(&p), Ok(true));
        assert_eq!(is_basic_hypertree(&p.neighborhood_hypergraph()), Ok(false));
        assert_eq!(is_basic_hypertree(&hg(&[&["1", "2"]])), Ok(true));
        for h in [p.clone(), p.neighborhood_hypergraph(), paper1(), paper2()] {
            assert_eq!(basic_by_witnesses(&h), is_basic_hypertree(&h));
        }
    }
}
