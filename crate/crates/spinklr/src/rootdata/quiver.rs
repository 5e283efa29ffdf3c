use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::RootDataError;

/// A quiver with an automorphism, a parity on orbits and an order on them, as
/// read from the JSON input format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverInput {
    #[serde(default)]
    pub name: Option<String>,
    pub vertices: Vec<Value>,
    pub edges: Vec<(Value, Value)>,
    #[serde(default)]
    pub automorphism: BTreeMap<String, Value>,
    pub parity: BTreeMap<String, u8>,
    #[serde(default)]
    pub order: Option<Vec<Value>>,
}

fn id_of(v: &Value) -> Result<String, RootDataError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(RootDataError::InvalidInput(format!("vertex id must be a string or number, got {other}"))),
    }
}

/// Vertex ids compare numerically when every id is an integer, otherwise
/// lexicographically.
pub(crate) fn vertex_order(ids: &[String]) -> impl Fn(&String, &String) -> std::cmp::Ordering {
    let numeric = ids.iter().all(|s| s.parse::<i64>().is_ok());
    move |a: &String, b: &String| {
        if numeric {
            a.parse::<i64>().unwrap().cmp(&b.parse::<i64>().unwrap())
        } else {
            a.cmp(b)
        }
    }
}

/// The validated combinatorial data: vertices, edge multiset, automorphism.
#[derive(Clone, Debug)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub automorphism: Vec<usize>,
}

impl Quiver {
    pub fn from_input(input: &QuiverInput) -> Result<Self, RootDataError> {
        let vertices: Vec<String> = input.vertices.iter().map(id_of).collect::<Result<_, _>>()?;
        let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect();
        if index.len() != vertices.len() {
            return Err(RootDataError::InvalidInput("duplicate vertex id".into()));
        }
        if vertices.is_empty() {
            return Err(RootDataError::InvalidInput("empty vertex set".into()));
        }
        let lookup = |v: &Value| -> Result<usize, RootDataError> {
            let id = id_of(v)?;
            index
                .get(id.as_str())
                .copied()
                .ok_or_else(|| RootDataError::InvalidInput(format!("unknown vertex {id}")))
        };
        let edges = input
            .edges
            .iter()
            .map(|(s, t)| Ok((lookup(s)?, lookup(t)?)))
            .collect::<Result<Vec<_>, RootDataError>>()?;
        let mut automorphism: Vec<usize> = (0..vertices.len()).collect();
        for (k, v) in input.automorphism.iter() {
            let from = lookup(&Value::String(k.clone()))?;
            automorphism[from] = lookup(v)?;
        }
        Ok(Quiver { vertices, edges, automorphism })
    }

    /// Orbits of the automorphism, each sorted with its representative first,
    /// listed in order of representatives.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let cmp = vertex_order(&self.vertices);
        let mut seen = vec![false; self.vertices.len()];
        let mut orbits = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut x = self.automorphism[start];
            while x != start {
                seen[x] = true;
                orbit.push(x);
                x = self.automorphism[x];
            }
            orbit.sort_by(|a, b| cmp(&self.vertices[*a], &self.vertices[*b]));
            orbits.push(orbit);
        }
        orbits.sort_by(|a, b| cmp(&self.vertices[a[0]], &self.vertices[b[0]]));
        orbits
    }

    /// Checks that the automorphism is a bijection preserving the edge
    /// multiset, that no edge stays inside one orbit, and that every
    /// connected component is mapped to itself.
    pub fn check_compatible(&self) -> Result<(), RootDataError> {
        let n = self.vertices.len();
        let image: BTreeSet<usize> = self.automorphism.iter().copied().collect();
        if image.len() != n {
            return Err(RootDataError::IncompatibleAutomorphism("automorphism is not a bijection".into()));
        }
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &e in &self.edges {
            *counts.entry(e).or_default() += 1;
        }
        for (&(s, t), &c) in &counts {
            let mapped = (self.automorphism[s], self.automorphism[t]);
            if counts.get(&mapped).copied().unwrap_or(0) != c {
                return Err(RootDataError::IncompatibleAutomorphism(format!(
                    "edge {}->{} is not mapped onto an edge of equal multiplicity",
                    self.vertices[s], self.vertices[t]
                )));
            }
        }
        let mut orbit_of = vec![0; n];
        for (k, orbit) in self.orbits().iter().enumerate() {
            for &v in orbit {
                orbit_of[v] = k;
            }
        }
        for &(s, t) in &self.edges {
            if orbit_of[s] == orbit_of[t] {
                return Err(RootDataError::IncompatibleAutomorphism(format!(
                    "edge {}->{} joins two vertices of one orbit",
                    self.vertices[s], self.vertices[t]
                )));
            }
        }
        let component = self.components();
        for v in 0..n {
            if component[self.automorphism[v]] != component[v] {
                return Err(RootDataError::IncompatibleAutomorphism(format!(
                    "automorphism moves vertex {} to another connected component",
                    self.vertices[v]
                )));
            }
        }
        Ok(())
    }

    fn components(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for &(s, t) in &self.edges {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            parent[a] = b;
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}
