use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite poset with named elements, its full order relation and its
/// Hasse diagram. Elements keep the order in which they were given.
#[derive(Clone, PartialEq, Eq)]
pub struct FinPoset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
    hasse: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    topo: Vec<usize>,
    height: usize,
}

/// JSON form `{elements: [...], hasse: [[a, b], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub hasse: Vec<(String, String)>,
}

impl FinPoset {
    /// The poset generated by `relations` (pairs `a <= b` of element indices).
    pub fn from_relations(names: Vec<String>, relations: &[(usize, usize)]) -> Result<FinPoset> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (i, s) in names.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate element {s}")));
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::ElementNotFound(format!("relation index ({a}, {b})")));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if !leq[i][k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::NotAPoset(format!("{} and {} lie on a cycle", names[i], names[j])));
                }
            }
        }
        Ok(Self::from_order(names, index, leq))
    }

    /// The poset generated by relations between names.
    pub fn from_named_relations(names: Vec<String>, relations: &[(&str, &str)]) -> Result<FinPoset> {
        let pos: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut idx = Vec::with_capacity(relations.len());
        for (a, b) in relations {
            let ia = *pos.get(a).ok_or_else(|| Error::ElementNotFound(a.to_string()))?;
            let ib = *pos.get(b).ok_or_else(|| Error::ElementNotFound(b.to_string()))?;
            idx.push((ia, ib));
        }
        Self::from_relations(names, &idx)
    }

    fn from_order(names: Vec<String>, index: HashMap<String, usize>, leq: Vec<Vec<bool>>) -> FinPoset {
        let n = names.len();
        let mut hasse = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !leq[i][j] {
                    continue;
                }
                let covered = (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
                if !covered {
                    hasse.push((i, j));
                }
            }
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &hasse {
            up[a].push(b);
            down[b].push(a);
        }
        // linear extension by number of elements below, ties by index
        let below: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| leq[i][j]).count()).collect();
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&i| (below[i], i));
        let mut depth = vec![0usize; n];
        for &j in &topo {
            depth[j] = down[j].iter().map(|&i| depth[i] + 1).max().unwrap_or(0);
        }
        let height = depth.iter().copied().max().unwrap_or(0);
        FinPoset { names, index, leq, hasse, up, down, topo, height }
    }

    pub fn from_json(j: &PosetJson) -> Result<FinPoset> {
        let rel: Vec<(&str, &str)> = j.hasse.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Self::from_named_relations(j.elements.clone(), &rel)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.names.clone(),
            hasse: self.hasse.iter().map(|&(a, b)| (self.names[a].clone(), self.names[b].clone())).collect(),
        }
    }

    pub fn point() -> FinPoset {
        Self::from_relations(vec!["*".into()], &[]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::ElementNotFound(name.to_string()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// Upper covers of `a`.
    pub fn covers_up(&self, a: usize) -> &[usize] {
        &self.up[a]
    }

    /// Lower covers of `a`.
    pub fn covers_down(&self, a: usize) -> &[usize] {
        &self.down[a]
    }

    /// A linear extension: every element comes after everything below it.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Length of the longest strict chain.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn down_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.leq[i][a]).collect()
    }

    pub fn strict_down_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.lt(i, a)).collect()
    }

    pub fn up_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.leq[a][i]).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    /// Induced subposet on `elems` (in the given order).
    pub fn subposet(&self, elems: &[usize]) -> FinPoset {
        let names: Vec<String> = elems.iter().map(|&i| self.names[i].clone()).collect();
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let leq = elems.iter().map(|&a| elems.iter().map(|&b| self.leq[a][b]).collect()).collect();
        Self::from_order(names, index, leq)
    }

    /// Product with the componentwise order; `(a, b)` sits at `a * |Q| + b`.
    pub fn product(&self, other: &FinPoset) -> FinPoset {
        let m = other.len();
        let mut names = Vec::with_capacity(self.len() * m);
        for a in &self.names {
            for b in &other.names {
                names.push(format!("({a},{b})"));
            }
        }
        let index = names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = self.leq[i / m][j / m] && other.leq[i % m][j % m];
            }
        }
        Self::from_order(names, index, leq)
    }

    /// Is the induced order on `elems` connected (as an undirected graph)?
    pub fn is_connected_on(&self, elems: &[usize]) -> bool {
        if elems.is_empty() {
            return false;
        }
        let mut seen = vec![false; elems.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..elems.len() {
                if !seen[j] && (self.leq[elems[i]][elems[j]] || self.leq[elems[j]][elems[i]]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Strict chains `c_0 < c_1 < ... < c_k`, grouped by `k`.
    pub fn chains(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out: Vec<Vec<Vec<usize>>> = vec![(0..self.len()).map(|i| vec![i]).collect()];
        loop {
            let mut next = Vec::new();
            for ch in out.last().unwrap() {
                let top = *ch.last().unwrap();
                for j in 0..self.len() {
                    if self.lt(top, j) {
                        let mut c = ch.clone();
                        c.push(j);
                        next.push(c);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            out.push(next);
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        for n in &self.names {
            s.push_str(&format!("  \"{n}\";\n"));
        }
        for &(a, b) in &self.hasse {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", self.names[a], self.names[b]));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for FinPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.hasse.iter().map(|&(a, b)| format!("{}<{}", self.names[a], self.names[b])).collect();
        write!(f, "FinPoset[{}]", edges.join(", "))
    }
}

pub fn export_dot(p: &FinPoset) -> String {
    p.to_dot()
}
