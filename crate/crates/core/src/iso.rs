//! Isomorphism testing for small graphs.
//!
//! Vertices start colored by their distance profile (how many vertices sit
//! at each BFS distance) and are refined by neighbor color multisets until
//! stable. A search then individualizes one vertex at a time, refining
//! again after each choice, until every class is a singleton.

use std::collections::{BTreeMap, HashMap};

use crate::graph::Graph;

/// Outcome of [`are_isomorphic`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoWitness {
    /// `mapping[v]` is the image in the second graph of vertex `v` of the first.
    Isomorphic(Vec<usize>),
    NonIsomorphic,
}

impl IsoWitness {
    pub fn mapping(&self) -> Option<&[usize]> {
        match self {
            IsoWitness::Isomorphic(m) => Some(m),
            IsoWitness::NonIsomorphic => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoWitness::Isomorphic(_))
    }
}

type Profile = Vec<usize>;

fn distance_profile(g: &Graph, v: usize) -> Profile {
    let mut profile = vec![0usize; g.order() + 1];
    for d in g.distances_from(v) {
        match d {
            Some(d) => profile[d] += 1,
            None => profile[g.order()] += 1,
        }
    }
    profile
}

/// Initial colors for both graphs over a shared palette, refined until stable.
fn refine_pair(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut palette: HashMap<(usize, Profile), usize> = HashMap::new();
    let mut color_of = |g: &Graph| -> Vec<usize> {
        (0..g.order())
            .map(|v| {
                let key = (g.degree(v), distance_profile(g, v));
                let next = palette.len();
                *palette.entry(key).or_insert(next)
            })
            .collect()
    };
    let cg = color_of(g);
    let ch = color_of(h);
    refine(g, h, cg, ch)
}

/// Splits classes by neighbor color multisets until nothing changes. Both
/// graphs share one palette so equal colors stay comparable.
fn refine(
    g: &Graph,
    h: &Graph,
    mut cg: Vec<usize>,
    mut ch: Vec<usize>,
) -> (Vec<usize>, Vec<usize>) {
    loop {
        let classes_before = count_classes(&cg, &ch);
        let mut signatures: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut step = |g: &Graph, c: &[usize]| -> Vec<usize> {
            (0..g.order())
                .map(|v| {
                    let mut nb: Vec<usize> = g.neighbors(v).map(|w| c[w]).collect();
                    nb.sort_unstable();
                    let next = signatures.len();
                    *signatures.entry((c[v], nb)).or_insert(next)
                })
                .collect()
        };
        let ng = step(g, &cg);
        let nh = step(h, &ch);
        cg = ng;
        ch = nh;
        if count_classes(&cg, &ch) == classes_before {
            return (cg, ch);
        }
    }
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    let mut seen: Vec<usize> = a.iter().chain(b).copied().collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &x in c {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

/// Decides `g ≅ h`, returning an explicit vertex bijection when it exists.
/// The result is deterministic for fixed inputs.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> IsoWitness {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return IsoWitness::NonIsomorphic;
    }
    if n == 0 {
        return IsoWitness::Isomorphic(Vec::new());
    }
    let (cg, ch) = refine_pair(g, h);
    match individualize(g, h, cg, ch) {
        Some(m) => IsoWitness::Isomorphic(m),
        None => IsoWitness::NonIsomorphic,
    }
}

/// Backtracking over individualizations: pin a vertex of the smallest
/// non-singleton class of `g` to each same-colored vertex of `h`, refine,
/// and recurse until every class is a singleton.
fn individualize(g: &Graph, h: &Graph, cg: Vec<usize>, ch: Vec<usize>) -> Option<Vec<usize>> {
    let hg = histogram(&cg);
    if hg != histogram(&ch) {
        return None;
    }
    let target = hg
        .iter()
        .filter(|(_, &k)| k > 1)
        .min_by_key(|(&c, &k)| (k, c))
        .map(|(&c, _)| c);
    let Some(color) = target else {
        let mut image = vec![usize::MAX; ch.iter().max().map_or(0, |m| m + 1)];
        for (w, &c) in ch.iter().enumerate() {
            image[c] = w;
        }
        let map: Vec<usize> = cg.iter().map(|&c| image[c]).collect();
        return is_isomorphism(g, h, &map).then_some(map);
    };
    let v = cg
        .iter()
        .position(|&c| c == color)
        .expect("class is nonempty");
    let fresh = cg.iter().chain(&ch).max().expect("nonempty") + 1;
    for w in (0..h.order()).filter(|&w| ch[w] == color) {
        let mut ng = cg.clone();
        let mut nh = ch.clone();
        ng[v] = fresh;
        nh[w] = fresh;
        let (ng, nh) = refine(g, h, ng, nh);
        if let Some(map) = individualize(g, h, ng, nh) {
            return Some(map);
        }
    }
    None
}

/// Checks that `mapping` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, mapping: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || mapping.len() != n {
        return false;
    }
    let mut seen = 0u64;
    for &x in mapping {
        if x >= n || seen & (1 << x) != 0 {
            return false;
        }
        seen |= 1 << x;
    }
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])))
}

/// Isomorphism-invariant fingerprint used to bucket graphs before pairwise
/// testing. Equal graphs always share a key; distinct keys prove
/// non-isomorphism.
pub fn invariant_key(g: &Graph) -> Vec<usize> {
    let mut profiles: Vec<(usize, Profile)> = (0..g.order())
        .map(|v| (g.degree(v), distance_profile(g, v)))
        .collect();
    profiles.sort();
    let mut key = vec![g.order(), g.size()];
    for (d, p) in profiles {
        key.push(d);
        key.extend(p);
    }
    key
}

/// Keeps the first representative of each isomorphism class, preserving
/// input order.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut out: Vec<Graph> = Vec::new();
    for g in graphs {
        let bucket = buckets.entry(invariant_key(&g)).or_default();
        if bucket
            .iter()
            .any(|&i| are_isomorphic(&out[i], &g).is_isomorphic())
        {
            continue;
        }
        bucket.push(out.len());
        out.push(g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn permuted_k4() {
        let g = complete(4);
        let h = g.relabel(&[2, 0, 3, 1]).unwrap();
        let w = are_isomorphic(&g, &h);
        assert!(is_isomorphism(&g, &h, w.mapping().unwrap()));
    }

    #[test]
    fn spec_negatives() {
        let two_c3 = cycle(3).disjoint_union(&cycle(3)).unwrap();
        assert_eq!(
            are_isomorphic(&cycle(6), &two_c3),
            IsoWitness::NonIsomorphic
        );
        assert_eq!(
            are_isomorphic(&prism(), &complete_bipartite(3, 3)),
            IsoWitness::NonIsomorphic
        );
    }

    #[test]
    fn petersen_relabelled() {
        let g = petersen();
        let perm = [7, 3, 9, 0, 5, 1, 8, 2, 6, 4];
        let h = g.relabel(&perm).unwrap();
        let w = are_isomorphic(&g, &h);
        assert!(is_isomorphism(&g, &h, w.mapping().unwrap()));
        assert_eq!(invariant_key(&g), invariant_key(&h));
    }

    #[test]
    fn dedup_keeps_first() {
        let k4 = complete(4);
        let k4b = k4.relabel(&[3, 2, 1, 0]).unwrap();
        let c4 = cycle(4);
        let out = dedup_isomorphic([k4.clone(), c4.clone(), k4b]);
        assert_eq!(out, vec![k4, c4]);
    }
}
