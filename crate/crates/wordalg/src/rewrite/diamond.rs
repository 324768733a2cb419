//! Finite acyclic simplification schemes and the equivalence of confluence
//! properties over them.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DiamondError {
    #[error("edge ({0}, {1}) leaves the vertex range")]
    BadEdge(usize, usize),
    #[error("simplification steps must not form cycles")]
    Cyclic,
}

/// A finite set of objects with one-step simplification arrows, required to
/// be acyclic so every simplification chain terminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplificationScheme {
    nodes: usize,
    succ: Vec<Vec<usize>>,
}

impl SimplificationScheme {
    pub fn new(nodes: usize, edges: &[(usize, usize)]) -> Result<Self, DiamondError> {
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes];
        for &(u, v) in edges {
            if u >= nodes || v >= nodes {
                return Err(DiamondError::BadEdge(u, v));
            }
            if u == v {
                return Err(DiamondError::Cyclic);
            }
            succ[u].insert(v);
        }
        let mut indegree = vec![0usize; nodes];
        for targets in &succ {
            for &v in targets {
                indegree[v] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..nodes).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if seen < nodes {
            return Err(DiamondError::Cyclic);
        }
        Ok(SimplificationScheme {
            nodes,
            succ: succ.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.nodes)
            .flat_map(|u| self.succ[u].iter().map(move |&v| (u, v)))
            .collect()
    }

    fn descendants(&self) -> Vec<Vec<bool>> {
        let mut desc = vec![vec![false; self.nodes]; self.nodes];
        for start in 0..self.nodes {
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if desc[start][v] {
                    continue;
                }
                desc[start][v] = true;
                stack.extend_from_slice(&self.succ[v]);
            }
        }
        desc
    }
}

/// The five confluence statements evaluated on one scheme. On an acyclic
/// scheme they hold or fail together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiamondReport {
    /// Every object simplifies to exactly one terminal object.
    pub unique_normal_forms: bool,
    /// "Has a common descendant" is a transitive relation.
    pub church_rosser_transitive: bool,
    /// Any two one-step simplifications of one object rejoin.
    pub locally_confluent: bool,
    /// Every weakly connected component holds exactly one terminal object.
    pub one_minimum_per_component: bool,
    /// Two objects share a component iff they share a descendant.
    pub connectivity_matches_common_descendant: bool,
}

impl DiamondReport {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.unique_normal_forms,
            self.church_rosser_transitive,
            self.locally_confluent,
            self.one_minimum_per_component,
            self.connectivity_matches_common_descendant,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let items = self.as_array();
        items.iter().all(|&b| b == items[0])
    }

    pub fn holds(&self) -> bool {
        self.as_array().into_iter().all(|b| b)
    }
}

fn find(parent: &mut Vec<usize>, v: usize) -> usize {
    if parent[v] != v {
        let root = find(parent, parent[v]);
        parent[v] = root;
    }
    parent[v]
}

pub fn diamond_report(scheme: &SimplificationScheme) -> DiamondReport {
    let n = scheme.nodes;
    let desc = scheme.descendants();
    let is_sink: Vec<bool> = (0..n).map(|v| scheme.succ[v].is_empty()).collect();
    let joins =
        |x: usize, y: usize| (0..n).any(|z| desc[x][z] && desc[y][z]);

    let unique_normal_forms = (0..n)
        .all(|v| (0..n).filter(|&s| desc[v][s] && is_sink[s]).count() == 1);

    let mut church_rosser_transitive = true;
    'cr: for x in 0..n {
        for y in 0..n {
            if !joins(x, y) {
                continue;
            }
            for z in 0..n {
                if joins(y, z) && !joins(x, z) {
                    church_rosser_transitive = false;
                    break 'cr;
                }
            }
        }
    }

    let locally_confluent = (0..n).all(|v| {
        let s = &scheme.succ[v];
        (0..s.len()).all(|i| (i + 1..s.len()).all(|j| joins(s[i], s[j])))
    });

    let mut parent: Vec<usize> = (0..n).collect();
    for (u, v) in scheme.edges() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        parent[ru] = rv;
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let components: BTreeSet<usize> = roots.iter().copied().collect();
    let one_minimum_per_component = components
        .iter()
        .all(|&r| (0..n).filter(|&v| roots[v] == r && is_sink[v]).count() == 1);

    let connectivity_matches_common_descendant =
        (0..n).all(|x| (0..n).all(|y| (roots[x] == roots[y]) == joins(x, y)));

    DiamondReport {
        unique_normal_forms,
        church_rosser_transitive,
        locally_confluent,
        one_minimum_per_component,
        connectivity_matches_common_descendant,
    }
}
