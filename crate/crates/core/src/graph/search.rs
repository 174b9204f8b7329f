use std::sync::atomic::{AtomicUsize, Ordering};

use super::{Graph, Permutation};
use crate::config::Config;
use crate::error::{Error, Result};

/// True iff `p` maps edges to edges and non-edges to non-edges, i.e. its
/// permutation matrix commutes with the adjacency matrix.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    let n = g.n_vertices();
    if p.len() != n {
        return Err(Error::dimension(n, p.len()));
    }
    Ok((0..n).all(|i| {
        g.neighbors(i).len() == g.neighbors(p.apply(i)).len()
            && g.neighbors(i)
                .iter()
                .all(|&j| g.adjacent(p.apply(i), p.apply(j)))
    }))
}

pub fn are_disjoint(p: &Permutation, q: &Permutation) -> Result<bool> {
    p.is_disjoint_from(q)
}

pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    automorphisms_with(g, &Config::default())
}

/// Complete automorphism group, sorted lexicographically by image array (so
/// the identity comes first).
///
/// Vertices are assigned in order of (degree, neighbour-degree multiset,
/// index); a candidate image must share the invariant and be consistent with
/// every earlier assignment. The first level of the search is split across
/// threads when `cfg.exec` is parallel.
pub fn automorphisms_with(g: &Graph, cfg: &Config) -> Result<Vec<Permutation>> {
    let n = g.n_vertices();
    if n > cfg.max_automorphism_vertices {
        return Err(Error::Capacity {
            what: "automorphism search vertices",
            limit: cfg.max_automorphism_vertices,
            requested: n,
        });
    }
    let invariants: Vec<_> = (0..n).map(|i| g.vertex_invariant(i)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| invariants[a].cmp(&invariants[b]).then(a.cmp(&b)));

    let search = Search {
        g,
        order: &order,
        invariants: &invariants,
        limit: cfg.max_automorphisms,
        found: AtomicUsize::new(0),
    };
    let root = order[0];
    let first: Vec<usize> = (0..n)
        .filter(|&c| invariants[c] == invariants[root])
        .collect();
    let branches = cfg.exec.map(&first, |&cand| {
        let mut images = vec![usize::MAX; n];
        let mut used = vec![false; n];
        images[root] = cand;
        used[cand] = true;
        let mut out = Vec::new();
        search.descend(1, &mut images, &mut used, &mut out)?;
        Ok(out)
    });
    let mut all = Vec::new();
    for branch in branches {
        all.extend(branch?);
    }
    all.sort();
    Ok(all)
}

struct Search<'a> {
    g: &'a Graph,
    order: &'a [usize],
    invariants: &'a [(usize, Vec<usize>)],
    limit: usize,
    found: AtomicUsize,
}

impl Search<'_> {
    fn descend(
        &self,
        depth: usize,
        images: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) -> Result<()> {
        let n = images.len();
        if depth == n {
            if self.found.fetch_add(1, Ordering::Relaxed) >= self.limit {
                return Err(Error::Capacity {
                    what: "automorphism count",
                    limit: self.limit,
                    requested: self.limit + 1,
                });
            }
            out.push(Permutation::new(images.to_vec()).expect("search assigns a bijection"));
            return Ok(());
        }
        let v = self.order[depth];
        for cand in 0..n {
            if used[cand] || self.invariants[cand] != self.invariants[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.g.adjacent(w, v) == self.g.adjacent(images[w], cand));
            if !consistent {
                continue;
            }
            images[v] = cand;
            used[cand] = true;
            self.descend(depth + 1, images, used, out)?;
            used[cand] = false;
            images[v] = usize::MAX;
        }
        Ok(())
    }
}

pub fn find_disjoint_pair(g: &Graph) -> Result<Option<(Permutation, Permutation)>> {
    find_disjoint_pair_with(g, &Config::default())
}

/// First pair `(a, b)`, `a` before `b` in the sorted automorphism list, of
/// non-trivial automorphisms with disjoint supports.
pub fn find_disjoint_pair_with(
    g: &Graph,
    cfg: &Config,
) -> Result<Option<(Permutation, Permutation)>> {
    let autos = automorphisms_with(g, cfg)?;
    let nontrivial: Vec<&Permutation> = autos.iter().filter(|p| !p.is_identity()).collect();
    let supports: Vec<Vec<bool>> = nontrivial
        .iter()
        .map(|p| (0..p.len()).map(|i| p.apply(i) != i).collect())
        .collect();
    for a in 0..nontrivial.len() {
        for b in a + 1..nontrivial.len() {
            let overlap = supports[a].iter().zip(&supports[b]).any(|(&x, &y)| x && y);
            if !overlap {
                return Ok(Some((nontrivial[a].clone(), nontrivial[b].clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Exec;

    fn brute_force_automorphisms(g: &Graph) -> Vec<Permutation> {
        // Heap's algorithm over all n! permutations.
        let n = g.n_vertices();
        let mut a: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut out = Vec::new();
        let mut check = |a: &[usize]| {
            let p = Permutation::new(a.to_vec()).unwrap();
            if is_automorphism(g, &p).unwrap() {
                out.push(p);
            }
        };
        check(&a);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                check(&a);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out.sort();
        out
    }

    #[test]
    fn small_groups() {
        assert_eq!(
            automorphisms(&Graph::complete(4).unwrap()).unwrap().len(),
            24
        );
        assert_eq!(automorphisms(&Graph::cycle(5).unwrap()).unwrap().len(), 10);
        let autos = automorphisms(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(autos.len(), 12);
        assert!(autos[0].is_identity());
    }

    #[test]
    fn matches_brute_force_on_irregular_graphs() {
        let graphs = [
            Graph::from_edges(6, &[[0, 1], [1, 2], [2, 3], [3, 0], [0, 4]]).unwrap(),
            Graph::from_edges(7, &[[0, 1], [0, 2], [0, 3], [4, 5]]).unwrap(),
            Graph::from_edges(6, &[[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3], [0, 3]])
                .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(
                automorphisms(g).unwrap(),
                brute_force_automorphisms(g),
                "{g:?}"
            );
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = Graph::cycle(8).unwrap();
        let seq = automorphisms_with(&g, &Config::default().with_exec(Exec::Sequential)).unwrap();
        let par = automorphisms_with(&g, &Config::default().with_exec(Exec::Parallel)).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn group_closure_and_inverses() {
        let g = Graph::from_edges(6, &[[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]]).unwrap();
        let autos = automorphisms(&g).unwrap();
        assert_eq!(autos.len(), 72);
        for a in &autos {
            assert!(autos.binary_search(&a.inverse()).is_ok());
            for b in autos.iter().step_by(7) {
                assert!(autos.binary_search(&a.compose(b).unwrap()).is_ok());
            }
        }
    }

    #[test]
    fn capacity_errors() {
        let g = Graph::from_edges(33, &[]).unwrap();
        assert!(matches!(automorphisms(&g), Err(Error::Capacity { .. })));
        let cfg = Config {
            max_automorphisms: 100,
            ..Config::default()
        };
        let empty = Graph::from_edges(8, &[]).unwrap();
        assert!(matches!(
            automorphisms_with(&empty, &cfg),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn is_automorphism_cases() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_automorphism(&c5, &Permutation::identity(5)).unwrap());
        // Swapping two adjacent vertices of the pentagon breaks edges.
        let swap = Permutation::new(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(!is_automorphism(&c5, &swap).unwrap());
        assert!(matches!(
            is_automorphism(&c5, &Permutation::identity(4)),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn disjoint_pairs() {
        let (a, b) = find_disjoint_pair(&Graph::complete(4).unwrap())
            .unwrap()
            .unwrap();
        assert!(!a.is_identity() && !b.is_identity());
        assert!(are_disjoint(&a, &b).unwrap());
        // Lexicographic order: (2 3) = [0,1,3,2] first, then (0 1) = [1,0,2,3].
        assert_eq!(a.images(), &[0, 1, 3, 2]);
        assert_eq!(b.images(), &[1, 0, 2, 3]);
        assert!(find_disjoint_pair(&Graph::cycle(5).unwrap())
            .unwrap()
            .is_none());
        // A path on three vertices has a single non-trivial automorphism.
        let p3 = Graph::from_edges(3, &[[0, 1], [1, 2]]).unwrap();
        assert!(find_disjoint_pair(&p3).unwrap().is_none());
    }
}
