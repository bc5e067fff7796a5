//! Emitters turning combinatorial data into symbolic loop-space
//! decompositions.
//!
//! The emitters are purely formal: they output the product/wedge shapes with
//! opaque atom leaves and never verify the topological hypotheses behind
//! them, which the caller asserts.

use crate::polyjoin::PolyJoinSpec;
use crate::simplicial::SimplicialComplex;
use crate::symbolic::SpaceExpr;
use crate::{Error, Result};

/// Loop space of a polyhedral product over a complex whose minimal missing
/// faces are mutually disjoint: one looped suspended smash factor per
/// missing face. `atoms[i]` stands for the space at `K.vertices()[i]`.
pub fn loop_decomposition_cone(
    k: &SimplicialComplex,
    atoms: &[SpaceExpr],
) -> Result<SpaceExpr> {
    k.require_ghost_free()?;
    if atoms.len() != k.vertices().len() {
        return Err(Error::ArityMismatch {
            expected: k.vertices().len(),
            got: atoms.len(),
        });
    }
    let mmf = k.minimal_missing_faces();
    if !mmf.mutually_disjoint() {
        let shared = mmf
            .faces
            .iter()
            .enumerate()
            .find_map(|(i, a)| {
                mmf.faces[i + 1..]
                    .iter()
                    .find(|b| !a.is_disjoint(b))
                    .map(|b| (a.clone(), b.clone()))
            })
            .expect("non-disjoint set has a crossing pair");
        return Err(Error::MissingFacesNotDisjoint(
            format!("{:?}", shared.0),
            format!("{:?}", shared.1),
        ));
    }
    let mut factors = Vec::new();
    for sigma in &mmf.faces {
        let smash: Vec<SpaceExpr> = k
            .vertices()
            .iter()
            .zip(atoms)
            .filter(|(v, _)| sigma.contains(v))
            .map(|(_, a)| a.clone())
            .collect();
        factors.push(SpaceExpr::looped(SpaceExpr::susp(
            (sigma.len() - 1) as u64,
            SpaceExpr::Smash(smash),
        )));
    }
    Ok(match factors.len() {
        0 => SpaceExpr::Point,
        1 => factors.pop().unwrap(),
        _ => SpaceExpr::Product(factors),
    })
}

/// Which pushout decomposition to emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PushoutVariant {
    /// `Ω(X,A)^{M̄} ≃ Ω(X,A)^M × ΩF`.
    Generic,
    /// `Ω(X,∗)^M × Ω(X,∗)^L × ΩH × Ω(ΣG ∧ ΩH)`.
    FullSubcomplex,
    /// `ΩF` with `F ≃ ((X,A)^L ∗ G) ∨ ((X,A)^K ⋊ G)`, valid when the
    /// comparison map is null-homotopic.
    NullInclusion,
}

impl PushoutVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(PushoutVariant::Generic),
            "full-subcomplex" => Ok(PushoutVariant::FullSubcomplex),
            "null-inclusion" => Ok(PushoutVariant::NullInclusion),
            other => Err(Error::UnknownVariant(other.to_string())),
        }
    }
}

/// Opaque atom names for the spaces entering a pushout decomposition:
/// the fibre `F`, the pieces `G` and `H`, and the polyhedral products over
/// the complexes `L`, `K`, `M`.
#[derive(Clone, Debug)]
pub struct PushoutAtoms {
    pub f: String,
    pub g: String,
    pub h: String,
    pub l_product: String,
    pub k_product: String,
    pub m_product: String,
}

impl Default for PushoutAtoms {
    fn default() -> Self {
        PushoutAtoms {
            f: "F".into(),
            g: "G".into(),
            h: "H".into(),
            l_product: "Lpp".into(),
            k_product: "Kpp".into(),
            m_product: "Mpp".into(),
        }
    }
}

pub fn loop_decomposition_pushout(variant: PushoutVariant, atoms: &PushoutAtoms) -> SpaceExpr {
    let a = |name: &str| SpaceExpr::atom(name);
    match variant {
        PushoutVariant::Generic => SpaceExpr::Product(vec![
            SpaceExpr::looped(a(&atoms.m_product)),
            SpaceExpr::looped(a(&atoms.f)),
        ]),
        PushoutVariant::FullSubcomplex => {
            let loop_h = SpaceExpr::looped(a(&atoms.h));
            SpaceExpr::Product(vec![
                SpaceExpr::looped(a(&atoms.m_product)),
                SpaceExpr::looped(a(&atoms.l_product)),
                loop_h.clone(),
                SpaceExpr::looped(SpaceExpr::Smash(vec![
                    SpaceExpr::susp(1, a(&atoms.g)),
                    loop_h,
                ])),
            ])
        }
        PushoutVariant::NullInclusion => SpaceExpr::looped(SpaceExpr::Wedge(vec![
            SpaceExpr::join(a(&atoms.l_product), a(&atoms.g)),
            SpaceExpr::half_smash(a(&atoms.k_product), a(&atoms.g)),
        ])),
    }
}

/// One per-vertex block of the polyhedral-join loop decomposition
/// `Ω(X,∗)^{L_i} × ΩH_i × Ω(ΣG_i ∧ ΩH_i)`.
#[derive(Clone, Debug)]
pub struct PolyJoinLoopFactor {
    pub vertex: String,
    /// Atom name for `Ω(X,∗)^{L_i}`.
    pub l_atom: String,
    /// `H_i`, or `pt` when the pair at this vertex is `(K_i, K_i)`.
    pub h: SpaceExpr,
    pub g_atom: String,
    /// Link of the vertex in the base with all later vertices deleted,
    /// defining `G_i`.
    pub g_link: SimplicialComplex,
    /// The base with this and all later vertices deleted.
    pub g_deletion: SimplicialComplex,
}

#[derive(Clone, Debug)]
pub struct PolyJoinLoopDecomposition {
    pub factors: Vec<PolyJoinLoopFactor>,
    pub expr: SpaceExpr,
}

/// Emits the per-vertex product formula for a polyhedral join product.
/// Vertices are eliminated from the base in reverse order, last to first;
/// the `G_i` tags record the link and deletion used at each step.
pub fn loop_decomposition_polyjoin(spec: &PolyJoinSpec) -> Result<PolyJoinLoopDecomposition> {
    for (i, pair) in spec.pairs().iter().enumerate() {
        if !pair.big().is_full_subcomplex(pair.small())? {
            return Err(Error::NotFullSubcomplex { index: i });
        }
    }
    let verts = spec.base().vertices().to_vec();
    let mut factors = Vec::new();
    let mut blocks: Vec<Vec<SpaceExpr>> = Vec::new();
    let mut working = spec.base().clone();
    // Eliminate from the last vertex down; singleton faces survive deletion,
    // so every remaining vertex stays non-ghost in `working`.
    for (i, v) in verts.iter().enumerate().rev() {
        let g_link = working.link(v)?;
        let g_deletion = working.deletion(v)?;
        let pair = &spec.pairs()[i];
        let trivial_fibre =
            pair.small_on_big_vertices().faces() == pair.big().faces();
        let l_atom = format!("Lpp.{}", v.as_str());
        let g_atom = format!("G.{}", v.as_str());
        let h = if trivial_fibre {
            SpaceExpr::Point
        } else {
            SpaceExpr::atom(format!("H.{}", v.as_str()))
        };
        factors.push(PolyJoinLoopFactor {
            vertex: v.as_str().to_string(),
            l_atom: l_atom.clone(),
            h: h.clone(),
            g_atom: g_atom.clone(),
            g_link,
            g_deletion: g_deletion.clone(),
        });
        blocks.push(vec![
            SpaceExpr::looped(SpaceExpr::atom(l_atom)),
            SpaceExpr::looped(h.clone()),
            SpaceExpr::looped(SpaceExpr::Smash(vec![
                SpaceExpr::susp(1, SpaceExpr::atom(g_atom)),
                SpaceExpr::looped(h),
            ])),
        ]);
        working = g_deletion;
    }
    factors.reverse();
    blocks.reverse();
    let mut exprs: Vec<SpaceExpr> = blocks.into_iter().flatten().collect();
    let expr = if exprs.len() == 1 {
        exprs.pop().unwrap()
    } else {
        SpaceExpr::Product(exprs)
    };
    Ok(PolyJoinLoopDecomposition { factors, expr })
}
