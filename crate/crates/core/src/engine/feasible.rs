//! Which vertex pairs occur as an edge of some host tree.

use super::basis::basic_sets;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::recognition;
use crate::set::VertexSet;
use crate::tree::Pair;

/// Every pair that is an edge of some host tree, tagged with its basic set
/// `I_H(uv)`. Sorted by pair.
pub fn feasible_edges(h: &Hypergraph) -> Result<Vec<(Pair, VertexSet)>> {
    let basis = basic_sets(h)?;
    let mut out: Vec<(Pair, VertexSet)> = basis
        .iter()
        .flat_map(|r| r.delta.iter().map(move |&p| (p, r.set.clone())))
        .collect();
    out.sort_by_key(|a| a.0);
    Ok(out)
}

/// Direct test: `u` and `v` lie in different components of the 2-section
/// of the edges not containing both.
pub fn is_feasible_edge(h: &Hypergraph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::SameVertex);
    }
    if u.max(v) >= h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: u.max(v) + 1,
        });
    }
    recognition::host_tree(h)?;
    let comp = h.complement_components(&VertexSet::pair(u, v));
    Ok(comp[u] != comp[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::*;

    #[test]
    fn paper2_feasible_pairs() {
        let p = paper2();
        let f = feasible_edges(&p).unwrap();
        let pairs: Vec<Pair> = f.iter().map(|(p, _)| *p).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(f[0].1, VertexSet::pair(0, 1));
        assert_eq!(f[1].1, p.universe());
        assert_eq!(is_feasible_edge(&p, 0, 2), Ok(false));
        assert_eq!(is_feasible_edge(&p, 0, 3), Ok(true));
    }

    #[test]
    fn paper1_feasible_pairs() {
        let f = feasible_edges(&paper1()).unwrap();
        let tagged: Vec<(Pair, Vec<usize>)> = f.iter().map(|(p, s)| (*p, s.to_vec())).collect();
        assert_eq!(
            tagged,
            vec![
                ((0, 1), vec![0, 1, 2]),
                ((0, 2), vec![0, 1, 2]),
                ((1, 2), vec![1, 2]),
                ((1, 3), vec![1, 2, 3]),
                ((2, 3), vec![1, 2, 3]),
            ]
        );
    }

    #[test]
    fn trivial_and_error_cases() {
        assert_eq!(is_feasible_edge(&path3(), 0, 1), Ok(true));
        assert_eq!(is_feasible_edge(&path3(), 1, 1), Err(Error::SameVertex));
        assert_eq!(is_feasible_edge(&triangle(), 0, 1), Err(Error::NotHypertree));
        let single = hg(&[&["1", "2"]]);
        assert_eq!(feasible_edges(&single).unwrap().len(), 1);
    }
}
