//! Finite abstract simplicial complexes with ghost vertices.
//!
//! A complex is a downward-closed family of faces over an ordered vertex set.
//! The empty face is always present, so the smallest representable complex is
//! `{∅}`; the void complex (no faces at all) is deliberately unrepresentable,
//! which makes `{∅}` the identity for joins. Declared vertices that occur in
//! no face are ghost vertices.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Error, Result};

/// A vertex label. Ordered with numeric awareness: runs of digits compare by
/// value, so `v2 < v10`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidLabel(label));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        natural_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic comparison with digit runs compared numerically.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut ai, mut bi) = (a.char_indices().peekable(), b.char_indices().peekable());
    loop {
        match (ai.peek().copied(), bi.peek().copied()) {
            (None, None) => return a.cmp(b), // fall back so distinct strings never tie
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((ia, ca)), Some((ib, cb))) => {
                if ca.is_ascii_digit() && cb.is_ascii_digit() {
                    let da = digit_run(a, ia);
                    let db = digit_run(b, ib);
                    let na = da.trim_start_matches('0');
                    let nb = db.trim_start_matches('0');
                    let ord = na
                        .len()
                        .cmp(&nb.len())
                        .then_with(|| na.cmp(nb))
                        .then_with(|| da.len().cmp(&db.len()));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    for _ in 0..da.len() {
                        ai.next();
                    }
                    for _ in 0..db.len() {
                        bi.next();
                    }
                } else {
                    match ca.cmp(&cb) {
                        Ordering::Equal => {
                            ai.next();
                            bi.next();
                        }
                        ord => return ord,
                    }
                }
            }
        }
    }
}

fn digit_run(s: &str, start: usize) -> &str {
    let end = s[start..]
        .find(|c: char| !c.is_ascii_digit())
        .map(|off| start + off)
        .unwrap_or(s.len());
    &s[start..end]
}

/// A face: a sorted, duplicate-free set of vertices. The empty face is valid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn new(mut vertices: Vec<VertexId>) -> Self {
        vertices.sort();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn singleton(v: VertexId) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(v))
    }

    /// Union of two faces (always a valid face value, not necessarily a face
    /// of any particular complex).
    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Face::new(v)
    }

    pub fn without(&self, v: &VertexId) -> Face {
        Face(self.0.iter().filter(|u| *u != v).cloned().collect())
    }

    pub fn with(&self, v: VertexId) -> Face {
        let mut out = self.0.clone();
        out.push(v);
        Face::new(out)
    }

    /// All faces obtained by removing one vertex.
    pub fn facets(&self) -> impl Iterator<Item = Face> + '_ {
        self.0.iter().map(move |v| self.without(v))
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subsets(&self) -> Vec<Face> {
        let n = self.0.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1 << n) {
            let verts = self
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, v)| v.clone())
                .collect();
            out.push(Face(verts));
        }
        out
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The inclusion-minimal non-faces of a complex. Singleton members coming
/// from ghost vertices are flagged separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MissingFaceSet {
    pub faces: Vec<Face>,
    pub ghost_singletons: Vec<VertexId>,
}

impl MissingFaceSet {
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn mutually_disjoint(&self) -> bool {
        for (i, a) in self.faces.iter().enumerate() {
            for b in &self.faces[i + 1..] {
                if !a.is_disjoint(b) {
                    return false;
                }
            }
        }
        true
    }
}

/// Decomposition of a complex with mutually disjoint minimal missing faces as
/// a join of one simplex and boundaries of simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinDecomposition {
    /// Vertices spanning the simplex factor (possibly empty).
    pub simplex_part: Vec<VertexId>,
    /// Vertex sets of the boundary factors; equal to the minimal missing faces.
    pub boundary_parts: Vec<Face>,
}

/// A finite abstract simplicial complex. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<VertexId>,
    faces: BTreeSet<Face>,
}

impl SimplicialComplex {
    /// Builds a complex as the downward closure of `generators` over the
    /// declared vertex set. Idempotent on already-closed input.
    pub fn build(vertices: Vec<VertexId>, generators: Vec<Face>) -> Result<Self> {
        let mut sorted = vertices;
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0].0.clone()));
            }
        }
        let vertex_set: BTreeSet<&VertexId> = sorted.iter().collect();
        for gen in &generators {
            for v in gen.vertices() {
                if !vertex_set.contains(v) {
                    return Err(Error::UndeclaredVertex(v.0.clone()));
                }
            }
        }
        let mut faces = BTreeSet::new();
        faces.insert(Face::empty());
        let mut stack: Vec<Face> = generators;
        while let Some(face) = stack.pop() {
            if faces.contains(&face) {
                continue;
            }
            for facet in face.facets() {
                stack.push(facet);
            }
            faces.insert(face);
        }
        Ok(SimplicialComplex {
            vertices: sorted,
            faces,
        })
    }

    /// Internal constructor for face families already known to be closed.
    pub(crate) fn from_closed(vertices: Vec<VertexId>, faces: BTreeSet<Face>) -> Self {
        debug_assert!(faces.contains(&Face::empty()));
        let mut sorted = vertices;
        sorted.sort();
        SimplicialComplex {
            vertices: sorted,
            faces,
        }
    }

    /// The full simplex on the given labels.
    pub fn simplex(labels: &[&str]) -> Result<Self> {
        let verts: Vec<VertexId> = labels
            .iter()
            .map(|l| VertexId::new(*l))
            .collect::<Result<_>>()?;
        let top = Face::new(verts.clone());
        Self::build(verts, vec![top])
    }

    /// The boundary of the simplex on the given labels.
    pub fn simplex_boundary(labels: &[&str]) -> Result<Self> {
        let verts: Vec<VertexId> = labels
            .iter()
            .map(|l| VertexId::new(*l))
            .collect::<Result<_>>()?;
        let top = Face::new(verts.clone());
        let gens = top.facets().collect();
        Self::build(verts, gens)
    }

    /// A single point.
    pub fn point(label: &str) -> Result<Self> {
        Self::simplex(&[label])
    }

    /// The empty complex `{∅}` on the given (ghost) vertex set.
    pub fn empty(labels: &[&str]) -> Result<Self> {
        let verts: Vec<VertexId> = labels
            .iter()
            .map(|l| VertexId::new(*l))
            .collect::<Result<_>>()?;
        Self::build(verts, vec![])
    }

    /// The cycle graph on the given labels, in order.
    pub fn cycle(labels: &[&str]) -> Result<Self> {
        let verts: Vec<VertexId> = labels
            .iter()
            .map(|l| VertexId::new(*l))
            .collect::<Result<_>>()?;
        let n = verts.len();
        let gens = (0..n)
            .map(|i| Face::new(vec![verts[i].clone(), verts[(i + 1) % n].clone()]))
            .collect();
        Self::build(verts, gens)
    }

    /// The path graph on the given labels, in order.
    pub fn path(labels: &[&str]) -> Result<Self> {
        let verts: Vec<VertexId> = labels
            .iter()
            .map(|l| VertexId::new(*l))
            .collect::<Result<_>>()?;
        let gens = verts
            .windows(2)
            .map(|w| Face::new(vec![w[0].clone(), w[1].clone()]))
            .chain(verts.iter().map(|v| Face::singleton(v.clone())))
            .collect();
        Self::build(verts, gens)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.faces.contains(face)
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn is_ghost(&self, v: &VertexId) -> bool {
        self.has_vertex(v) && !self.faces.contains(&Face::singleton(v.clone()))
    }

    pub fn ghost_vertices(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|v| self.is_ghost(v))
            .cloned()
            .collect()
    }

    pub fn non_ghost_vertices(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .filter(|v| !self.is_ghost(v))
            .cloned()
            .collect()
    }

    pub fn is_ghost_free(&self) -> bool {
        self.vertices.iter().all(|v| !self.is_ghost(v))
    }

    pub fn require_ghost_free(&self) -> Result<()> {
        let ghosts = self.ghost_vertices();
        if ghosts.is_empty() {
            Ok(())
        } else {
            let list = ghosts
                .iter()
                .map(|v| v.0.clone())
                .collect::<Vec<_>>()
                .join(",");
            Err(Error::GhostVerticesPresent(list))
        }
    }

    /// Faces not properly contained in another face. A derived view; the face
    /// family itself is the source of truth.
    pub fn maximal_faces(&self) -> Vec<Face> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.len() > f.len() && f.is_subset(g))
            })
            .cloned()
            .collect()
    }

    /// The link of a vertex: `{τ : v ∉ τ, τ ∪ {v} ∈ K}` on the vertex set
    /// `V(K) ∖ {v}`. The result may contain ghost vertices. Errors on ghost
    /// vertices, which have no link.
    pub fn link(&self, v: &VertexId) -> Result<SimplicialComplex> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v.0.clone()));
        }
        if self.is_ghost(v) {
            return Err(Error::GhostVertex(v.0.clone()));
        }
        let vertices = self
            .vertices
            .iter()
            .filter(|u| *u != v)
            .cloned()
            .collect();
        let faces = self
            .faces
            .iter()
            .filter(|f| !f.contains(v) && self.faces.contains(&f.with(v.clone())))
            .cloned()
            .collect();
        Ok(SimplicialComplex::from_closed(vertices, faces))
    }

    /// The star of a vertex, computed as `lk(v) * {v}`.
    pub fn star(&self, v: &VertexId) -> Result<SimplicialComplex> {
        let link = self.link(v)?;
        let point = SimplicialComplex::build(
            vec![v.clone()],
            vec![Face::singleton(v.clone())],
        )?;
        link.join(&point)
    }

    /// Deletion of a vertex: faces avoiding `v`, on `V(K) ∖ {v}`. Allowed for
    /// ghost vertices.
    pub fn deletion(&self, v: &VertexId) -> Result<SimplicialComplex> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v.0.clone()));
        }
        let vertices = self
            .vertices
            .iter()
            .filter(|u| *u != v)
            .cloned()
            .collect();
        let faces = self
            .faces
            .iter()
            .filter(|f| !f.contains(v))
            .cloned()
            .collect();
        Ok(SimplicialComplex::from_closed(vertices, faces))
    }

    /// The join `K1 * K2` on the disjoint union of the vertex sets.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        for v in &other.vertices {
            if self.has_vertex(v) {
                return Err(Error::OverlappingLabels(v.0.clone()));
            }
        }
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        let mut faces = BTreeSet::new();
        for a in &self.faces {
            for b in &other.faces {
                faces.insert(a.union(b));
            }
        }
        Ok(SimplicialComplex::from_closed(vertices, faces))
    }

    /// The full subcomplex on a vertex subset: every face supported in `S`.
    pub fn full_subcomplex(&self, subset: &BTreeSet<VertexId>) -> Result<SimplicialComplex> {
        for v in subset {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v.0.clone()));
            }
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| f.vertices().iter().all(|v| subset.contains(v)))
            .cloned()
            .collect();
        Ok(SimplicialComplex::from_closed(
            subset.iter().cloned().collect(),
            faces,
        ))
    }

    /// True iff `sub` (required to be a subcomplex of `self`) equals the full
    /// subcomplex of `self` on `V(sub)` as a face family.
    pub fn is_full_subcomplex(&self, sub: &SimplicialComplex) -> Result<bool> {
        for v in &sub.vertices {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v.0.clone()));
            }
        }
        for f in &sub.faces {
            if !self.faces.contains(f) {
                return Err(Error::NotASubcomplex(f.to_string()));
            }
        }
        let subset: BTreeSet<VertexId> = sub.vertices.iter().cloned().collect();
        let full = self.full_subcomplex(&subset)?;
        Ok(full.faces == sub.faces)
    }

    /// Inclusion-minimal non-faces. A minimal missing face of size ≥ 2 is
    /// `τ ∪ {v}` for some face `τ` and vertex `v ∉ τ`, so candidates are
    /// generated from faces extended by one vertex; ghost vertices contribute
    /// singleton members, flagged in the output.
    pub fn minimal_missing_faces(&self) -> MissingFaceSet {
        let mut found: BTreeSet<Face> = BTreeSet::new();
        let mut ghost_singletons = Vec::new();
        for v in &self.vertices {
            if self.is_ghost(v) {
                ghost_singletons.push(v.clone());
            }
        }
        for face in &self.faces {
            for v in &self.vertices {
                // A ghost vertex cannot enter a minimal missing face of
                // size ≥ 2 (its singleton is already missing).
                if face.contains(v) || self.is_ghost(v) {
                    continue;
                }
                let candidate = face.with(v.clone());
                if self.faces.contains(&candidate) || found.contains(&candidate) {
                    continue;
                }
                if candidate.facets().all(|f| self.faces.contains(&f)) {
                    found.insert(candidate);
                }
            }
        }
        MissingFaceSet {
            faces: found.into_iter().collect(),
            ghost_singletons,
        }
    }

    pub fn mmf_mutually_disjoint(&self) -> bool {
        self.minimal_missing_faces().mutually_disjoint()
    }

    /// Splits a complex with mutually disjoint minimal missing faces as the
    /// join of a simplex and the boundaries of the missing faces. Requires a
    /// ghost-free complex; the reconstruction is validated face-for-face.
    pub fn join_decomposition(&self) -> Result<JoinDecomposition> {
        self.require_ghost_free()?;
        let mmf = self.minimal_missing_faces();
        for (i, a) in mmf.faces.iter().enumerate() {
            for b in &mmf.faces[i + 1..] {
                if !a.is_disjoint(b) {
                    return Err(Error::MissingFacesNotDisjoint(a.to_string(), b.to_string()));
                }
            }
        }
        let in_boundary: BTreeSet<VertexId> = mmf
            .faces
            .iter()
            .flat_map(|f| f.vertices().iter().cloned())
            .collect();
        let simplex_part: Vec<VertexId> = self
            .vertices
            .iter()
            .filter(|v| !in_boundary.contains(v))
            .cloned()
            .collect();
        let decomposition = JoinDecomposition {
            simplex_part,
            boundary_parts: mmf.faces,
        };
        debug_assert_eq!(
            reconstruct_join(&decomposition).unwrap().faces,
            self.faces,
            "join decomposition failed to reconstruct the input"
        );
        Ok(decomposition)
    }

    /// Witness for the star/deletion pushout at a vertex:
    /// `faces(K) = faces(st) ∪ faces(del)` and `faces(st) ∩ faces(del) = faces(lk)`.
    pub fn star_link_deletion_pushout_check(&self, v: &VertexId) -> Result<bool> {
        let star = self.star(v)?;
        let deletion = self.deletion(v)?;
        let link = self.link(v)?;
        let union: BTreeSet<Face> = star.faces.union(&deletion.faces).cloned().collect();
        let inter: BTreeSet<Face> = star.faces.intersection(&deletion.faces).cloned().collect();
        Ok(union == self.faces && inter == link.faces)
    }

    /// Relabels vertices through a total map over the current vertex set.
    pub fn relabel(&self, map: &BTreeMap<VertexId, VertexId>) -> Result<SimplicialComplex> {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let target = map
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(v.0.clone()))?;
            vertices.push(target.clone());
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0].0.clone()));
            }
        }
        let faces = self
            .faces
            .iter()
            .map(|f| Face::new(f.vertices().iter().map(|v| map[v].clone()).collect()))
            .collect();
        Ok(SimplicialComplex::from_closed(sorted, faces))
    }

    /// Extends the vertex set with extra (ghost) vertices.
    pub fn with_vertex_set(&self, superset: &[VertexId]) -> Result<SimplicialComplex> {
        for v in &self.vertices {
            if !superset.contains(v) {
                return Err(Error::UnknownVertex(v.0.clone()));
            }
        }
        Ok(SimplicialComplex::from_closed(
            superset.to_vec(),
            self.faces.clone(),
        ))
    }

    /// Exhaustive isomorphism test over vertex bijections, restricted to
    /// complexes with at most 8 non-ghost vertices.
    pub fn is_isomorphic(&self, other: &SimplicialComplex) -> Result<bool> {
        let mine = self.non_ghost_vertices();
        let theirs = other.non_ghost_vertices();
        if mine.len() > 8 || theirs.len() > 8 {
            return Err(Error::GuardExceeded(
                "isomorphism testing is limited to 8 non-ghost vertices".into(),
            ));
        }
        if mine.len() != theirs.len() || self.faces.len() != other.faces.len() {
            return Ok(false);
        }
        let my_faces: BTreeSet<Vec<usize>> = index_faces(&self.faces, &mine);
        let their_faces: BTreeSet<Vec<usize>> = index_faces(&other.faces, &theirs);
        let n = mine.len();
        let mut perm: Vec<usize> = (0..n).collect();
        Ok(permute_search(&mut perm, 0, &my_faces, &their_faces))
    }
}

fn index_faces(faces: &BTreeSet<Face>, vertices: &[VertexId]) -> BTreeSet<Vec<usize>> {
    faces
        .iter()
        .map(|f| {
            f.vertices()
                .iter()
                .map(|v| vertices.iter().position(|u| u == v).unwrap())
                .collect()
        })
        .collect()
}

fn permute_search(
    perm: &mut Vec<usize>,
    k: usize,
    from: &BTreeSet<Vec<usize>>,
    to: &BTreeSet<Vec<usize>>,
) -> bool {
    let n = perm.len();
    if k == n {
        return from.iter().all(|f| {
            let mut mapped: Vec<usize> = f.iter().map(|i| perm[*i]).collect();
            mapped.sort_unstable();
            to.contains(&mapped)
        });
    }
    for i in k..n {
        perm.swap(k, i);
        if permute_search(perm, k + 1, from, to) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Rebuilds the complex described by a [`JoinDecomposition`]: the simplex on
/// `simplex_part` joined with the boundary of each missing face.
pub fn reconstruct_join(d: &JoinDecomposition) -> Result<SimplicialComplex> {
    let top = Face::new(d.simplex_part.clone());
    let mut acc = SimplicialComplex::build(d.simplex_part.clone(), vec![top])?;
    for part in &d.boundary_parts {
        let verts: Vec<VertexId> = part.vertices().to_vec();
        let full = Face::new(verts.clone());
        let gens = full.facets().collect();
        let boundary = SimplicialComplex::build(verts, gens)?;
        acc = acc.join(&boundary)?;
    }
    Ok(acc)
}
