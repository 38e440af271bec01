//! Graphs, their cycle matroids, and graphs built from a prescribed list of
//! cycles together with the facet-ideal comparison for them.

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, len};
use crate::complex::{bc_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{facet_ideal, stanley_reisner_ideal, MonomialIdeal};
use crate::matroid::{default_labels, ElementOrder, Matroid, Origin};

/// Cycle enumeration runs over all sums of fundamental cycles up to this cycle-space dimension.
pub const CYCLE_SPACE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    edge_labels: Vec<String>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>, edge_labels: Vec<String>) -> Result<Self> {
        if edge_labels.len() != edges.len() {
            return Err(Error::Precondition(format!(
                "{} edge labels for {} edges",
                edge_labels.len(),
                edges.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &edge_labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= vertices.len() || b >= vertices.len()) {
            return Err(Error::UnknownElement(format!("vertex {}", a.max(b))));
        }
        Ok(Graph {
            vertices,
            edges,
            edge_labels,
        })
    }

    /// Graph on the vertex ids that occur in `edges`; edge `k` is labelled `k + 1`.
    pub fn from_edges(edges: &[(usize, usize)]) -> Self {
        let mut ids: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        ids.sort_unstable();
        ids.dedup();
        let pos = |v: usize| ids.binary_search(&v).expect("collected above");
        Graph {
            vertices: ids.iter().map(|v| v.to_string()).collect(),
            edges: edges.iter().map(|&(a, b)| (pos(a), pos(b))).collect(),
            edge_labels: default_labels(edges.len()),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
    }

    fn union_find(&self) -> (Vec<usize>, Vec<bool>) {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut in_tree = vec![false; self.edges.len()];
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                in_tree[k] = true;
            }
        }
        let roots = (0..parent.len()).map(|v| find(&mut parent, v)).collect();
        (roots, in_tree)
    }

    pub fn n_components(&self) -> usize {
        let (roots, _) = self.union_find();
        let mut r = roots;
        r.sort_unstable();
        r.dedup();
        r.len()
    }

    /// Edge sets of all simple cycles.
    pub fn cycles(&self) -> Result<Vec<u64>> {
        let m = self.edges.len();
        if m > bits::MAX_GROUND {
            return Err(Error::Bound {
                what: "edges",
                limit: bits::MAX_GROUND,
                got: m,
            });
        }
        let (_, in_tree) = self.union_find();
        let tree: Vec<usize> = (0..m).filter(|&k| in_tree[k]).collect();
        let non_tree: Vec<usize> = (0..m).filter(|&k| !in_tree[k]).collect();
        if non_tree.len() > CYCLE_SPACE_LIMIT {
            return Err(Error::Bound {
                what: "cycle space dimension",
                limit: CYCLE_SPACE_LIMIT,
                got: non_tree.len(),
            });
        }
        let fundamental: Vec<u64> = non_tree.iter().map(|&k| bit(k) | self.tree_path(&tree, self.edges[k])).collect();
        let mut cycles = Vec::new();
        for pick in 1u64..(1 << fundamental.len()) {
            let sum = bits::elems(pick).fold(0u64, |a, i| a ^ fundamental[i]);
            if self.is_simple_cycle(sum) {
                cycles.push(sum);
            }
        }
        cycles.sort_unstable_by_key(|&c| (len(c), c));
        Ok(cycles)
    }

    /// Edges on the tree path between the endpoints of `(a, b)`.
    fn tree_path(&self, tree: &[usize], (a, b): (usize, usize)) -> u64 {
        if a == b {
            return 0;
        }
        let nv = self.vertices.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; nv];
        let mut seen = vec![false; nv];
        let mut queue = std::collections::VecDeque::from([a]);
        seen[a] = true;
        while let Some(v) = queue.pop_front() {
            for &k in tree {
                let (x, y) = self.edges[k];
                let w = if x == v {
                    y
                } else if y == v {
                    x
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, k));
                    queue.push_back(w);
                }
            }
        }
        let mut path = 0u64;
        let mut v = b;
        while let Some((u, k)) = prev[v] {
            path |= bit(k);
            v = u;
        }
        path
    }

    /// Connected and every touched vertex has degree two (a self-loop counts twice).
    fn is_simple_cycle(&self, edges: u64) -> bool {
        if edges == 0 {
            return false;
        }
        let nv = self.vertices.len();
        let mut degree = vec![0usize; nv];
        for k in bits::elems(edges) {
            let (a, b) = self.edges[k];
            degree[a] += 1;
            degree[b] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        // walk from one edge and see whether every edge is reached
        let start = self.edges[edges.trailing_zeros() as usize].0;
        let mut reached = 0u64;
        let mut frontier = vec![start];
        let mut visited = vec![false; nv];
        visited[start] = true;
        while let Some(v) = frontier.pop() {
            for k in bits::elems(edges) {
                let (a, b) = self.edges[k];
                if a == v || b == v {
                    reached |= bit(k);
                    let w = if a == v { b } else { a };
                    if !visited[w] {
                        visited[w] = true;
                        frontier.push(w);
                    }
                }
            }
        }
        reached == edges
    }

    pub fn cycle_matroid(&self) -> Result<Matroid> {
        let cycles = self.cycles()?;
        Matroid::from_circuits(self.edge_labels.clone(), cycles, Origin::Graphic, false)
    }
}

/// How consecutive cycles are attached in [`build_gnr`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "type", content = "length")]
pub enum Bridge {
    /// Separate connected components.
    Disjoint,
    /// A path with the given number of edges between consecutive cycles.
    Path(usize),
    /// Consecutive cycles share one vertex.
    Wedge,
}

/// A graph whose cycles are exactly edge-disjoint cycles of the given sizes.
/// Cycle edges are numbered cycle by cycle, bridge edges after them.
pub fn build_gnr(sizes: &[usize], bridge: Bridge) -> Result<Graph> {
    if sizes.is_empty() {
        return Err(Error::Infeasible("no cycles requested".into()));
    }
    if let Some(&k) = sizes.iter().find(|&&k| k < 3) {
        return Err(Error::Infeasible(format!("a simple cycle needs at least 3 edges, got {k}")));
    }
    if bridge == Bridge::Path(0) {
        return Err(Error::Infeasible("a connecting path needs at least one edge".into()));
    }
    let mut nv = 0usize;
    let mut fresh = || {
        nv += 1;
        nv - 1
    };
    let mut edges = Vec::new();
    let mut bridges = Vec::new();
    // vertex of the previous cycle where the next one is attached
    let mut attach: Option<usize> = None;
    for &k in sizes {
        let start = match (bridge, attach) {
            (Bridge::Wedge, Some(v)) => v,
            (Bridge::Path(len), Some(v)) => {
                let mut prev = v;
                for _ in 0..len {
                    let next = fresh();
                    bridges.push((prev, next));
                    prev = next;
                }
                prev
            }
            _ => fresh(),
        };
        let mut cycle = vec![start];
        cycle.extend((1..k).map(|_| fresh()));
        edges.extend((0..k).map(|i| (cycle[i], cycle[(i + 1) % k])));
        attach = Some(cycle[1]);
    }
    edges.extend(bridges);
    let m = edges.len();
    Graph::new((0..nv).map(|v| v.to_string()).collect(), edges, default_labels(m))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetReading {
    /// How the facets are built from one removed edge per cycle.
    pub reading: String,
    pub choices: usize,
    pub any_match: bool,
    pub all_match: bool,
    /// The choice removing each cycle's order-minimal edge.
    pub min_choice_match: bool,
    pub min_choice_ideal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnrReport {
    pub n: usize,
    pub r: usize,
    pub cycles: Vec<Vec<String>>,
    pub edge_disjoint: bool,
    pub broken_circuit_ideal: String,
    /// Stanley-Reisner ideal of the broken-circuit complex equals the ideal of broken-circuit monomials.
    pub sr_matches_broken_circuits: bool,
    pub complete_intersection: bool,
    /// Cohen-Macaulay, as a consequence of being a complete intersection.
    pub cohen_macaulay: bool,
    pub readings: Vec<FacetReading>,
}

/// Largest number of removal choices enumerated per reading.
pub const GNR_CHOICE_LIMIT: usize = 1 << 16;

pub fn gnr_report(g: &Graph, order: &ElementOrder, expected_cycles: Option<usize>) -> Result<GnrReport> {
    let x = g.cycle_matroid()?;
    let cycles = x.circuits().to_vec();
    if let Some(r) = expected_cycles {
        if r != cycles.len() {
            return Err(Error::CycleCountMismatch {
                expected: r,
                found: cycles.len(),
            });
        }
    }
    let n = x.n();
    let bc = bc_complex(&x, order)?;
    let sr = stanley_reisner_ideal(&bc);
    let broken = x.broken_circuits(order)?;
    let bc_monomials = MonomialIdeal::squarefree(n, &broken.minimal);
    let bc_ideal = MonomialIdeal::with_names(sr.names().to_vec(), bc_monomials.gens().to_vec())?;
    let edge_disjoint = (0..cycles.len()).all(|i| (i + 1..cycles.len()).all(|j| cycles[i] & cycles[j] == 0));
    let complete_intersection = sr.is_complete_intersection();

    let choices: usize = cycles.iter().map(|&c| len(c)).product();
    let readings = if choices > GNR_CHOICE_LIMIT || cycles.is_empty() {
        Vec::new()
    } else {
        let min_choice: Vec<usize> = cycles.iter().map(|&c| order.min_of(c).unwrap()).collect();
        let all_choices = enumerate_choices(&cycles);
        let ground = x.ground();
        let complement = |pick: &[usize]| -> Vec<u64> { vec![pick.iter().fold(ground, |a, &e| a & !bit(e))] };
        let cyclewise = |pick: &[usize]| -> Vec<u64> { cycles.iter().zip(pick).map(|(&c, &e)| c & !bit(e)).collect() };
        let labels = x.labels().to_vec();
        let facet_ideal_of = |facets: Vec<u64>| -> MonomialIdeal {
            facet_ideal(&SimplicialComplex::from_facets(labels.clone(), facets).expect("facets inside ground"))
        };
        let mut out = Vec::new();
        for (name, build) in [
            ("complement: E minus one edge of each cycle", &complement as &dyn Fn(&[usize]) -> Vec<u64>),
            ("cycle-wise: each cycle minus one of its edges", &cyclewise),
        ] {
            let matches: Vec<bool> = all_choices.iter().map(|p| facet_ideal_of(build(p)) == sr).collect();
            let min_ideal = facet_ideal_of(build(&min_choice));
            out.push(FacetReading {
                reading: name.into(),
                choices: all_choices.len(),
                any_match: matches.iter().any(|&m| m),
                all_match: matches.iter().all(|&m| m),
                min_choice_match: min_ideal == sr,
                min_choice_ideal: min_ideal.render(),
            });
        }
        out
    };
    Ok(GnrReport {
        n,
        r: cycles.len(),
        cycles: x.circuit_labels(),
        edge_disjoint,
        broken_circuit_ideal: sr.render(),
        sr_matches_broken_circuits: bc_ideal == sr,
        complete_intersection,
        cohen_macaulay: complete_intersection,
        readings,
    })
}

fn enumerate_choices(cycles: &[u64]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for &c in cycles {
        out = out
            .into_iter()
            .flat_map(|p| {
                bits::elems(c).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

/// A 3-cycle and a 4-cycle sharing one edge, numbered so that the cycle
/// matroid has circuits `{4,5,6}`, `{1,2,3,6}` and `{1,2,3,4,5}`.
pub fn shared_edge_example() -> Graph {
    // square a-b-c-d with shared edge d-a (edge 6), triangle d-a-e via edges 4 and 5
    Graph::from_edges(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 0)])
}
