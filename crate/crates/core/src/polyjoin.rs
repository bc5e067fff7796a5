//! Polyhedral join products `(K,L)^{*M}` and their structural decompositions.
//!
//! Construction goes through the support characterisation: a candidate face
//! `τ = ⊔ τ_i` with each `τ_i` a face of `K_i` belongs to the product iff the
//! support `{i : τ_i ∉ L_i}` is a face of the base. The union-over-faces
//! definition is kept as an independent oracle (see [`crate::oracle`]).
//!
//! Output vertices are namespaced as `<base vertex>.<inner label>`, which makes
//! the per-vertex joins label-disjoint by construction.

use std::collections::{BTreeMap, BTreeSet};

use crate::simplicial::{Face, SimplicialComplex, VertexId};
use crate::{Error, Result};

/// A pair `(K_i, L_i)` with `L_i` a subcomplex of `K_i`, considered on the
/// vertex set of `K_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPair {
    big: SimplicialComplex,
    small: SimplicialComplex,
}

impl ComplexPair {
    pub fn new(big: SimplicialComplex, small: SimplicialComplex) -> Result<Self> {
        for v in small.vertices() {
            if !big.has_vertex(v) {
                return Err(Error::UndeclaredVertex(v.as_str().to_owned()));
            }
        }
        for f in small.faces() {
            if !big.contains(f) {
                return Err(Error::NotASubcomplex(f.to_string()));
            }
        }
        Ok(ComplexPair { big, small })
    }

    pub fn big(&self) -> &SimplicialComplex {
        &self.big
    }

    pub fn small(&self) -> &SimplicialComplex {
        &self.small
    }

    /// `L_i` viewed on the full vertex set of `K_i`.
    pub fn small_on_big_vertices(&self) -> SimplicialComplex {
        self.small.with_vertex_set(self.big.vertices()).unwrap()
    }

    /// A face of `K_i` lies in `L_i` iff the face family of `L_i` contains it;
    /// ghost vertices of `L_i` relative to `K_i` are harmless here.
    fn small_contains(&self, face: &Face) -> bool {
        self.small.contains(face)
    }
}

/// A base complex `M` (ghost-free) together with one pair per base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyJoinSpec {
    base: SimplicialComplex,
    pairs: Vec<ComplexPair>,
}

/// The four complexes witnessing the pushout of a polyhedral join product at
/// a base vertex.
#[derive(Clone, Debug)]
pub struct PushoutPieces {
    /// `(K,L)^{*lk(i)} * L_i`
    pub link_small: SimplicialComplex,
    /// `(K,L)^{*lk(i)} * K_i`
    pub link_big: SimplicialComplex,
    /// `(K,L)^{*M∖i} * L_i`
    pub deletion_small: SimplicialComplex,
    /// `(K,L)^{*M}`
    pub whole: SimplicialComplex,
}

impl PushoutPieces {
    /// The complex-level pushout identity: the union of the two middle pieces
    /// is the whole and their intersection is the first.
    pub fn holds(&self) -> bool {
        let union: BTreeSet<Face> = self
            .link_big
            .faces()
            .union(self.deletion_small.faces())
            .cloned()
            .collect();
        let inter: BTreeSet<Face> = self
            .link_big
            .faces()
            .intersection(self.deletion_small.faces())
            .cloned()
            .collect();
        union == *self.whole.faces() && inter == *self.link_small.faces()
    }
}

/// One entry of the full-subcomplex characterisation: restricting the product
/// to `subset` is again a polyhedral join product, over the base restricted to
/// the touched vertices, with each `P_i` a full subcomplex of `K_i` and `Q_i`
/// the restriction of `L_i` to `V(P_i)`.
#[derive(Clone, Debug)]
pub struct FullSubcomplexWitness {
    pub subset: BTreeSet<VertexId>,
    pub spec: PolyJoinSpec,
}

impl PolyJoinSpec {
    pub fn new(base: SimplicialComplex, pairs: Vec<ComplexPair>) -> Result<Self> {
        base.require_ghost_free()?;
        if pairs.len() != base.vertices().len() {
            return Err(Error::ArityMismatch {
                expected: base.vertices().len(),
                got: pairs.len(),
            });
        }
        let spec = PolyJoinSpec { base, pairs };
        let mut seen = BTreeSet::new();
        for (i, _) in spec.base.vertices().iter().enumerate() {
            for v in spec.prefixed_vertices(i)? {
                if !seen.insert(v.clone()) {
                    return Err(Error::NamespaceCollision(v.as_str().to_owned()));
                }
            }
        }
        Ok(spec)
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn pairs(&self) -> &[ComplexPair] {
        &self.pairs
    }

    /// The pair attached to a base vertex.
    pub fn pair_for(&self, v: &VertexId) -> Result<&ComplexPair> {
        let idx = self
            .base
            .vertices()
            .iter()
            .position(|u| u == v)
            .ok_or_else(|| Error::UnknownVertex(v.as_str().to_owned()))?;
        Ok(&self.pairs[idx])
    }

    fn prefix(&self, i: usize, inner: &VertexId) -> Result<VertexId> {
        VertexId::new(format!("{}.{}", self.base.vertices()[i], inner))
    }

    fn prefixed_vertices(&self, i: usize) -> Result<Vec<VertexId>> {
        self.pairs[i]
            .big
            .vertices()
            .iter()
            .map(|v| self.prefix(i, v))
            .collect()
    }

    /// Relabels a complex on the vertex set of `K_i` into the output namespace.
    fn prefixed(&self, i: usize, complex: &SimplicialComplex) -> Result<SimplicialComplex> {
        let map: BTreeMap<VertexId, VertexId> = complex
            .vertices()
            .iter()
            .map(|v| Ok((v.clone(), self.prefix(i, v)?)))
            .collect::<Result<_>>()?;
        complex.relabel(&map)
    }

    /// The full vertex set of the product, in canonical order.
    pub fn output_vertices(&self) -> Result<Vec<VertexId>> {
        let mut out = Vec::new();
        for i in 0..self.pairs.len() {
            out.extend(self.prefixed_vertices(i)?);
        }
        out.sort();
        Ok(out)
    }

    /// Builds `(K,L)^{*M}` through the support characterisation.
    pub fn build(&self) -> Result<SimplicialComplex> {
        self.build_over(&self.base)
    }

    /// Same construction over an alternative base on a subset of `V(M)`.
    /// Ghost vertices in `over` are allowed: they pin the corresponding
    /// factor to `L_i`.
    fn build_over(&self, over: &SimplicialComplex) -> Result<SimplicialComplex> {
        let indices: Vec<usize> = over
            .vertices()
            .iter()
            .map(|v| {
                self.base
                    .vertices()
                    .iter()
                    .position(|u| u == v)
                    .ok_or_else(|| Error::UnknownVertex(v.as_str().to_owned()))
            })
            .collect::<Result<_>>()?;
        // Pre-relabel each K_i's face list, tagging membership in L_i.
        let mut factor_faces: Vec<Vec<(Face, bool)>> = Vec::new();
        for &i in &indices {
            let pair = &self.pairs[i];
            let faces = pair
                .big
                .faces()
                .iter()
                .map(|f| {
                    let relabeled = Face::new(
                        f.vertices()
                            .iter()
                            .map(|v| self.prefix(i, v))
                            .collect::<Result<_>>()?,
                    );
                    Ok((relabeled, pair.small_contains(f)))
                })
                .collect::<Result<Vec<_>>>()?;
            factor_faces.push(faces);
        }
        let mut vertices = Vec::new();
        for &i in &indices {
            vertices.extend(self.prefixed_vertices(i)?);
        }
        let mut faces = BTreeSet::new();
        let mut support = Face::empty();
        let mut chosen: Vec<Face> = Vec::new();
        self.collect_faces(over, &factor_faces, 0, &mut support, &mut chosen, &mut faces);
        Ok(SimplicialComplex::from_closed(vertices, faces))
    }

    fn collect_faces(
        &self,
        over: &SimplicialComplex,
        factor_faces: &[Vec<(Face, bool)>],
        depth: usize,
        support: &mut Face,
        chosen: &mut Vec<Face>,
        out: &mut BTreeSet<Face>,
    ) {
        if depth == factor_faces.len() {
            let mut all = Face::empty();
            for f in chosen.iter() {
                all = all.union(f);
            }
            out.insert(all);
            return;
        }
        let base_vertex = over.vertices()[depth].clone();
        for (face, in_small) in &factor_faces[depth] {
            let grew = !in_small;
            if grew {
                *support = support.with(base_vertex.clone());
                // Support only grows along the search, so prune as soon as it
                // leaves the base.
                if !over.contains(support) {
                    *support = support.without(&base_vertex);
                    continue;
                }
            }
            chosen.push(face.clone());
            self.collect_faces(over, factor_faces, depth + 1, support, chosen, out);
            chosen.pop();
            if grew {
                *support = support.without(&base_vertex);
            }
        }
    }

    /// The four pieces of the pushout at base vertex `i`.
    pub fn pushout_pieces(&self, v: &VertexId) -> Result<PushoutPieces> {
        let idx = self
            .base
            .vertices()
            .iter()
            .position(|u| u == v)
            .ok_or_else(|| Error::UnknownVertex(v.as_str().to_owned()))?;
        let link = self.base.link(v)?;
        let deletion = self.base.deletion(v)?;
        let over_link = self.build_over(&link)?;
        let over_deletion = self.build_over(&deletion)?;

        let pair = &self.pairs[idx];
        let small = self.prefixed(idx, &pair.small_on_big_vertices())?;
        let big = self.prefixed(idx, &pair.big)?;

        Ok(PushoutPieces {
            link_small: over_link.join(&small)?,
            link_big: over_link.join(&big)?,
            deletion_small: over_deletion.join(&small)?,
            whole: self.build()?,
        })
    }

    /// Enumerates the full subcomplexes of the product in `(N, P, Q)` form,
    /// one witness per subset of the output vertex set, in canonical subset
    /// order. Guarded at 12 total output vertices.
    pub fn enumerate_full_subcomplexes(
        &self,
        max_count: usize,
    ) -> Result<Vec<FullSubcomplexWitness>> {
        let all = self.output_vertices()?;
        if all.len() > 12 {
            return Err(Error::GuardExceeded(format!(
                "full-subcomplex enumeration is limited to 12 vertices, got {}",
                all.len()
            )));
        }
        let mut out = Vec::new();
        for mask in 0u64..(1 << all.len()) {
            if out.len() >= max_count {
                break;
            }
            let subset: BTreeSet<VertexId> = all
                .iter()
                .enumerate()
                .filter(|(j, _)| mask & (1 << j) != 0)
                .map(|(_, v)| v.clone())
                .collect();
            out.push(self.full_subcomplex_witness(&subset)?);
        }
        Ok(out)
    }

    /// The `(N, P, Q)` description of the full subcomplex on `subset`
    /// (given in output-namespace labels).
    pub fn full_subcomplex_witness(
        &self,
        subset: &BTreeSet<VertexId>,
    ) -> Result<FullSubcomplexWitness> {
        // Split the subset by base vertex.
        let mut per_vertex: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); self.pairs.len()];
        for v in subset {
            let mut found = false;
            for (i, base_v) in self.base.vertices().iter().enumerate() {
                let prefix = format!("{base_v}.");
                if let Some(inner) = v.as_str().strip_prefix(&prefix) {
                    let inner = VertexId::new(inner)?;
                    if self.pairs[i].big.has_vertex(&inner) {
                        per_vertex[i].insert(inner);
                        found = true;
                        break;
                    }
                }
            }
            if !found {
                return Err(Error::UnknownVertex(v.as_str().to_owned()));
            }
        }
        let touched: BTreeSet<VertexId> = self
            .base
            .vertices()
            .iter()
            .enumerate()
            .filter(|(i, _)| !per_vertex[*i].is_empty())
            .map(|(_, v)| v.clone())
            .collect();
        let restricted_base = self.base.full_subcomplex(&touched)?;
        let mut pairs = Vec::new();
        for (i, inner_set) in per_vertex.iter().enumerate() {
            if inner_set.is_empty() {
                continue;
            }
            let p = self.pairs[i].big.full_subcomplex(inner_set)?;
            let small_subset: BTreeSet<VertexId> = inner_set
                .iter()
                .filter(|v| self.pairs[i].small.has_vertex(v))
                .cloned()
                .collect();
            let q = self.pairs[i]
                .small
                .full_subcomplex(&small_subset)?
                .with_vertex_set(p.vertices())?;
            pairs.push(ComplexPair::new(p, q)?);
        }
        Ok(FullSubcomplexWitness {
            subset: subset.clone(),
            spec: PolyJoinSpec::new(restricted_base, pairs)?,
        })
    }
}

/// The substitution complex: the polyhedral join product on the pairs
/// `(K_i, {∅})`.
pub fn substitution_complex(
    base: &SimplicialComplex,
    parts: &[SimplicialComplex],
) -> Result<SimplicialComplex> {
    base.require_ghost_free()?;
    if parts.len() != base.vertices().len() {
        return Err(Error::ArityMismatch {
            expected: base.vertices().len(),
            got: parts.len(),
        });
    }
    let pairs = parts
        .iter()
        .map(|k| {
            let empty = SimplicialComplex::build(k.vertices().to_vec(), vec![])?;
            ComplexPair::new(k.clone(), empty)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyJoinSpec::new(base.clone(), pairs)?.build()
}

/// The composition complex: the polyhedral join product on the pairs
/// `(Δ^{|V(K_i)|−1}, K_i)`.
pub fn composition_complex(
    base: &SimplicialComplex,
    parts: &[SimplicialComplex],
) -> Result<SimplicialComplex> {
    base.require_ghost_free()?;
    if parts.len() != base.vertices().len() {
        return Err(Error::ArityMismatch {
            expected: base.vertices().len(),
            got: parts.len(),
        });
    }
    let pairs = parts
        .iter()
        .map(|k| {
            let top = Face::new(k.vertices().to_vec());
            let simplex = SimplicialComplex::build(k.vertices().to_vec(), vec![top])?;
            ComplexPair::new(simplex, k.clone())
        })
        .collect::<Result<Vec<_>>>()?;
    PolyJoinSpec::new(base.clone(), pairs)?.build()
}

/// The spec whose product realises the base itself: pairs `(point, {∅})`.
pub fn point_pair_spec(base: &SimplicialComplex, small_is_point: bool) -> Result<PolyJoinSpec> {
    let pairs = base
        .vertices()
        .iter()
        .map(|_| {
            let pt = SimplicialComplex::point("pt")?;
            let small = if small_is_point {
                pt.clone()
            } else {
                SimplicialComplex::empty(&["pt"])?
            };
            ComplexPair::new(pt, small)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyJoinSpec::new(base.clone(), pairs)
}
