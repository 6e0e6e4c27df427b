use std::fmt;

use crate::ring::{VarSet, MAX_VARS};

use super::CombinatoricsError;

/// A simplicial complex on the vertices `1..=N`, stored by its facets.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Builds a complex from generating faces given as one-based vertex lists.
    /// Faces contained in other faces are dropped, so the stored facets are
    /// pairwise incomparable.
    pub fn new<F, I>(num_vertices: usize, faces: F) -> Result<Self, CombinatoricsError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        if num_vertices == 0 || num_vertices > MAX_VARS {
            return Err(CombinatoricsError::VertexCount(num_vertices));
        }
        let mut sets = Vec::new();
        for face in faces {
            let mut s = VarSet::EMPTY;
            for v in face {
                if v == 0 || v > num_vertices {
                    return Err(CombinatoricsError::VertexOutOfRange { vertex: v, num_vertices });
                }
                s = s.with(v - 1);
            }
            sets.push(s);
        }
        Self::from_sets(num_vertices, sets)
    }

    pub fn from_sets(num_vertices: usize, faces: Vec<VarSet>) -> Result<Self, CombinatoricsError> {
        if num_vertices == 0 || num_vertices > MAX_VARS {
            return Err(CombinatoricsError::VertexCount(num_vertices));
        }
        if let Some(bad) = faces.iter().find(|f| f.span() > num_vertices) {
            return Err(CombinatoricsError::VertexOutOfRange {
                vertex: bad.span(),
                num_vertices,
            });
        }
        let mut facets: Vec<VarSet> = Vec::new();
        for &f in &faces {
            if !faces.iter().any(|&g| g != f && f.is_subset(g)) && !facets.contains(&f) {
                facets.push(f);
            }
        }
        if facets.is_empty() {
            return Err(CombinatoricsError::NoFacets);
        }
        facets.sort_by(|a, b| a.lex_cmp(*b));
        Ok(SimplicialComplex { num_vertices, facets })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    /// Largest facet cardinality (dimension plus one).
    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    /// Whether all facets have the same cardinality.
    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    pub fn is_face(&self, s: VarSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Connectivity of the graph whose edges are the facets, over all `N`
    /// vertices. For complexes of dimension at most one this is the
    /// Cohen–Macaulay test; larger facets are rejected.
    pub fn is_connected_one_dim(&self) -> Result<bool, CombinatoricsError> {
        if let Some(f) = self.facets.iter().find(|f| f.len() > 2) {
            return Err(CombinatoricsError::FacetTooLarge(f.len()));
        }
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn root(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for f in &self.facets {
            let mut it = f.iter();
            if let (Some(a), Some(b)) = (it.next(), it.next()) {
                let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let r0 = root(&mut parent, 0);
        Ok((1..self.num_vertices).all(|v| root(&mut parent, v) == r0))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("num_vertices", &self.num_vertices)
            .field("facets", &self.facets)
            .finish()
    }
}

/// The boundary of an `N`-gon: facets `{i, i+1}` with indices mod `N`.
pub fn build_ngon(n: usize) -> Result<SimplicialComplex, CombinatoricsError> {
    if n < 4 {
        return Err(CombinatoricsError::NgonTooSmall(n));
    }
    SimplicialComplex::new(n, (1..=n).map(|i| [i, i % n + 1]))
}
