//! Rational ellipticity/hyperbolicity verdicts with exponent and mod-p^r
//! claims.
//!
//! Every homotopy-theoretic fact about an atom space enters through
//! [`SpaceMeta`]: flags are user assertions and are never inferred, so a
//! theorem is only ever applied inside its stated hypotheses. Verdicts carry
//! citation tags naming the criterion that produced each claim.

use serde::{Deserialize, Serialize};

use crate::polyjoin::PolyJoinSpec;
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result};

/// User-asserted homotopy-theoretic metadata for an atom space.
///
/// Boolean fields are explicit assertions with no defaults in the file
/// format; the numeric fields may be absent, which only disables the
/// suspension prime-set computation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceMeta {
    /// May be omitted in metadata files, where the map key supplies it.
    #[serde(default)]
    pub name: String,
    pub finite_cw: bool,
    pub rationally_nontrivial: bool,
    /// `A ≃_Q S^n` for some n.
    pub rationally_sphere: bool,
    pub torsion_free_homology: bool,
    /// `ΣA` is a finite-type wedge of simply-connected spheres.
    pub susp_in_w: bool,
    /// For ambient spaces `X_i`.
    pub rationally_elliptic: bool,
    /// `ΩX` is rationally homotopy equivalent to a sphere.
    pub loop_rationally_sphere: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion_primes: Option<Vec<u64>>,
}

impl SpaceMeta {
    pub fn named(name: &str) -> Self {
        SpaceMeta {
            name: name.to_owned(),
            ..Default::default()
        }
    }

    /// Flags appropriate for the sphere `S^n`, `n ≥ 1`.
    pub fn sphere(name: &str, n: u64) -> Self {
        SpaceMeta {
            name: name.to_owned(),
            finite_cw: true,
            rationally_nontrivial: true,
            rationally_sphere: true,
            torsion_free_homology: true,
            susp_in_w: true,
            rationally_elliptic: n >= 2,
            loop_rationally_sphere: n >= 2 && n % 2 == 1,
            dimension: Some(n),
            connectivity: Some(n - 1),
            torsion_primes: Some(vec![]),
        }
    }
}

/// Which primes a claim quantifies over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "exceptions")]
pub enum PrimeScope {
    AllPrimes,
    AllOddPrimes,
    /// Cofinitely many primes, exceptional set not identified.
    AllButFinitelyManyUnspecified,
    /// All primes outside the given finite set.
    ExplicitComplement(Vec<u64>),
    SomePrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClaimKind {
    NoExponent,
    FiniteExponent,
    ModPrHyperbolicAllR,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub kind: ClaimKind,
    pub scope: PrimeScope,
    pub citations: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RationalType {
    Elliptic,
    Hyperbolic,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MooreStatus {
    Holds,
    HoldsAtOddPrimes,
    Unknown,
}

/// Classification outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub rational_type: RationalType,
    pub claims: Vec<Claim>,
    pub moore_status: MooreStatus,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

/// Citation tags: stable names for the criteria behind each conclusion.
pub mod tags {
    pub const MOMENT_ANGLE: &str = "moment-angle-mmf-criterion";
    pub const CONE_PAIR_MOORE: &str = "cone-pair-wedge-criterion";
    pub const TORSION_FREE_ODD: &str = "torsion-free-odd-prime-criterion";
    pub const GENERAL_ELLIPTICITY: &str = "fibrewise-ellipticity-criterion";
    pub const POLYJOIN_HYPERBOLIC: &str = "polyjoin-hyperbolicity-criterion";
    pub const SUSPENSION_PRIMES: &str = "suspension-prime-bound";
}

fn check_dims_arity(k: &SimplicialComplex, len: usize) -> Result<()> {
    if len != k.vertices().len() {
        return Err(Error::ArityMismatch {
            expected: k.vertices().len(),
            got: len,
        });
    }
    Ok(())
}

/// Classifies the moment-angle-type product over `K` with one cell dimension
/// per vertex. Elliptic iff the minimal missing faces of `K` are mutually
/// disjoint; the dimensions do not influence the rational type.
pub fn classify_moment_angle(k: &SimplicialComplex, dims: &[u64]) -> Result<Verdict> {
    k.require_ghost_free()?;
    check_dims_arity(k, dims.len())?;
    if let Some(d) = dims.iter().find(|d| **d < 1) {
        return Err(Error::MissingHypothesis(format!(
            "cell dimensions must be at least 1, got {d}"
        )));
    }
    let disjoint = k.mmf_mutually_disjoint();
    let (rational_type, claim_kind) = if disjoint {
        (RationalType::Elliptic, ClaimKind::FiniteExponent)
    } else {
        (RationalType::Hyperbolic, ClaimKind::NoExponent)
    };
    Ok(Verdict {
        rational_type,
        claims: vec![Claim {
            kind: claim_kind,
            scope: PrimeScope::AllPrimes,
            citations: vec![tags::MOMENT_ANGLE.into()],
        }],
        moore_status: MooreStatus::Holds,
        citations: vec![tags::MOMENT_ANGLE.into()],
        notes: vec![if disjoint {
            "minimal missing faces are mutually disjoint".into()
        } else {
            "two minimal missing faces intersect".into()
        }],
    })
}

/// Classifies `(CA, A)^K` from per-vertex metadata for the `A_i`.
pub fn classify_cone_pair(k: &SimplicialComplex, metas: &[SpaceMeta]) -> Result<Verdict> {
    k.require_ghost_free()?;
    check_dims_arity(k, metas.len())?;
    if let Some(m) = metas.iter().find(|m| !m.finite_cw) {
        return Err(Error::MissingHypothesis(format!(
            "`{}` is not asserted to be a finite CW-complex (finite_cw)",
            m.name
        )));
    }

    let mmf = k.minimal_missing_faces();
    let disjoint = mmf.mutually_disjoint();
    let mmf_vertices_spherical = mmf.faces.iter().all(|f| {
        f.vertices().iter().all(|v| {
            k.vertices()
                .iter()
                .position(|u| u == v)
                .map(|i| metas[i].rationally_sphere)
                .unwrap_or(false)
        })
    });
    let all_nontrivial = metas.iter().all(|m| m.rationally_nontrivial);
    let all_susp_in_w = metas.iter().all(|m| m.susp_in_w);
    let all_torsion_free = metas.iter().all(|m| m.torsion_free_homology);

    let mut verdict = if all_nontrivial && all_susp_in_w {
        let elliptic = disjoint && mmf_vertices_spherical;
        let (rational_type, claim_kind) = if elliptic {
            (RationalType::Elliptic, ClaimKind::FiniteExponent)
        } else {
            (RationalType::Hyperbolic, ClaimKind::NoExponent)
        };
        Verdict {
            rational_type,
            claims: vec![Claim {
                kind: claim_kind,
                scope: PrimeScope::AllPrimes,
                citations: vec![tags::CONE_PAIR_MOORE.into()],
            }],
            moore_status: MooreStatus::Holds,
            citations: vec![tags::CONE_PAIR_MOORE.into()],
            notes: vec![],
        }
    } else if all_nontrivial {
        // Fibrewise criterion with Y_i = A_i; the cone factors are trivially
        // rationally elliptic.
        let elliptic = disjoint && mmf_vertices_spherical;
        Verdict {
            rational_type: if elliptic {
                RationalType::Elliptic
            } else {
                RationalType::Hyperbolic
            },
            claims: vec![],
            moore_status: MooreStatus::Unknown,
            citations: vec![tags::GENERAL_ELLIPTICITY.into()],
            notes: vec!["cone factors are trivially rationally elliptic".into()],
        }
    } else {
        Verdict {
            rational_type: RationalType::Indeterminate,
            claims: vec![],
            moore_status: MooreStatus::Unknown,
            citations: vec![],
            notes: vec![
                "failed hypothesis: some atom is not asserted rationally nontrivial".into(),
            ],
        }
    };

    if verdict.rational_type == RationalType::Hyperbolic && all_torsion_free {
        verdict.claims.push(Claim {
            kind: ClaimKind::NoExponent,
            scope: PrimeScope::AllOddPrimes,
            citations: vec![tags::TORSION_FREE_ODD.into()],
        });
        if verdict.moore_status == MooreStatus::Unknown {
            verdict.moore_status = MooreStatus::HoldsAtOddPrimes;
        }
        verdict.citations.push(tags::TORSION_FREE_ODD.into());
    }
    Ok(verdict)
}

/// Classifies a general polyhedral product from fibre metadata `Y_i` and
/// ambient ellipticity flags for the `X_i`. Elliptic iff all ambient spaces
/// are elliptic, the minimal missing faces are mutually disjoint, and every
/// missing-face vertex has a rationally spherical fibre. The criterion is an
/// equivalence, so no exponent claims are attached.
pub fn classify_general(
    k: &SimplicialComplex,
    fibre_metas: &[SpaceMeta],
    ambient_elliptic: &[bool],
) -> Result<Verdict> {
    k.require_ghost_free()?;
    check_dims_arity(k, fibre_metas.len())?;
    check_dims_arity(k, ambient_elliptic.len())?;
    if let Some(m) = fibre_metas.iter().find(|m| !m.rationally_nontrivial) {
        return Err(Error::MissingHypothesis(format!(
            "fibre `{}` is not asserted rationally nontrivial",
            m.name
        )));
    }
    let mmf = k.minimal_missing_faces();
    let cond1 = ambient_elliptic.iter().all(|b| *b);
    let cond2 = mmf.mutually_disjoint();
    let cond3 = mmf.faces.iter().all(|f| {
        f.vertices().iter().all(|v| {
            k.vertices()
                .iter()
                .position(|u| u == v)
                .map(|i| fibre_metas[i].rationally_sphere)
                .unwrap_or(false)
        })
    });
    let elliptic = cond1 && cond2 && cond3;
    let mut notes = Vec::new();
    if !cond1 {
        notes.push("some ambient space is not rationally elliptic".into());
    }
    if !cond2 {
        notes.push("two minimal missing faces intersect".into());
    }
    if !cond3 {
        notes.push("a missing-face vertex has a non-spherical fibre".into());
    }
    Ok(Verdict {
        rational_type: if elliptic {
            RationalType::Elliptic
        } else {
            RationalType::Hyperbolic
        },
        claims: vec![],
        moore_status: MooreStatus::Unknown,
        citations: vec![tags::GENERAL_ELLIPTICITY.into()],
        notes,
    })
}

/// Classifies `(X,*)` over a polyhedral join product. The criterion is
/// sufficient only: a witness vertex with a proper full subcomplex pair and
/// `lk(i) ≠ M∖i` yields Hyperbolic with cofinite claims; otherwise the
/// verdict is Indeterminate, never Elliptic.
pub fn classify_poly_join(spec: &PolyJoinSpec, x_metas: &[SpaceMeta]) -> Result<Verdict> {
    check_dims_arity(spec.base(), x_metas.len())?;
    for m in x_metas {
        if !m.rationally_elliptic {
            return Err(Error::MissingHypothesis(format!(
                "`{}` is not asserted rationally elliptic (rationally_elliptic)",
                m.name
            )));
        }
        if !m.rationally_nontrivial {
            return Err(Error::MissingHypothesis(format!(
                "`{}` is not asserted rationally nontrivial (rationally_nontrivial)",
                m.name
            )));
        }
        if m.loop_rationally_sphere {
            return Err(Error::MissingHypothesis(format!(
                "`{}` has loop space rationally a sphere (loop_rationally_sphere must be false)",
                m.name
            )));
        }
    }
    let mut witness = None;
    for v in spec.base().vertices() {
        let pair = spec.pair_for(v)?;
        let proper = pair.small_on_big_vertices().faces() != pair.big().faces();
        if !proper || !pair.big().is_full_subcomplex(pair.small())? {
            continue;
        }
        let link = spec.base().link(v)?;
        let deletion = spec.base().deletion(v)?;
        // Both live on V(M)∖{i}; the link keeps ghosts, so the face families
        // compare directly.
        if link.faces() != deletion.faces() {
            witness = Some(v.clone());
            break;
        }
    }
    match witness {
        Some(v) => Ok(Verdict {
            rational_type: RationalType::Hyperbolic,
            claims: vec![
                Claim {
                    kind: ClaimKind::ModPrHyperbolicAllR,
                    scope: PrimeScope::AllButFinitelyManyUnspecified,
                    citations: vec![tags::POLYJOIN_HYPERBOLIC.into()],
                },
                Claim {
                    kind: ClaimKind::NoExponent,
                    scope: PrimeScope::AllButFinitelyManyUnspecified,
                    citations: vec![tags::POLYJOIN_HYPERBOLIC.into()],
                },
            ],
            moore_status: MooreStatus::Unknown,
            citations: vec![tags::POLYJOIN_HYPERBOLIC.into()],
            notes: vec![format!("witness vertex: {v}")],
        }),
        None => Ok(Verdict {
            rational_type: RationalType::Indeterminate,
            claims: vec![],
            moore_status: MooreStatus::Unknown,
            citations: vec![tags::POLYJOIN_HYPERBOLIC.into()],
            notes: vec![
                "no witness vertex: the hyperbolicity criterion is sufficient, not necessary"
                    .into(),
            ],
        }),
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The finite prime set attached to a suspension: primes `q` with
/// `2q ≤ 1 + d − s`, union the asserted torsion primes. Exact integer
/// arithmetic; the numeric fields must be present.
pub fn suspension_prime_set(meta: &SpaceMeta) -> Result<Vec<u64>> {
    let d = meta.dimension.ok_or(Error::MissingNumericField("dimension"))?;
    let s = meta
        .connectivity
        .ok_or(Error::MissingNumericField("connectivity"))?;
    let torsion = meta
        .torsion_primes
        .as_ref()
        .ok_or(Error::MissingNumericField("torsion_primes"))?;
    for &p in torsion {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
    }
    let mut out: Vec<u64> = Vec::new();
    // q ≤ (1 + d − s)/2 without leaving the integers.
    let bound_doubled = (1 + d).saturating_sub(s);
    for q in 2..=bound_doubled / 2 + 1 {
        if 2 * q <= bound_doubled && is_prime(q) {
            out.push(q);
        }
    }
    out.extend(torsion.iter().copied());
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Intersection of prime scopes, for combining per-factor claims.
pub fn combine_prime_scopes(scopes: &[PrimeScope]) -> PrimeScope {
    if scopes.iter().any(|s| matches!(s, PrimeScope::SomePrime)) {
        return PrimeScope::SomePrime;
    }
    if scopes
        .iter()
        .any(|s| matches!(s, PrimeScope::AllButFinitelyManyUnspecified))
    {
        return PrimeScope::AllButFinitelyManyUnspecified;
    }
    let mut exceptions: Vec<u64> = Vec::new();
    for s in scopes {
        match s {
            PrimeScope::AllPrimes => {}
            PrimeScope::AllOddPrimes => exceptions.push(2),
            PrimeScope::ExplicitComplement(set) => exceptions.extend(set.iter().copied()),
            _ => unreachable!(),
        }
    }
    exceptions.sort_unstable();
    exceptions.dedup();
    if exceptions.is_empty() {
        PrimeScope::AllPrimes
    } else if exceptions == [2] {
        PrimeScope::AllOddPrimes
    } else {
        PrimeScope::ExplicitComplement(exceptions)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_metas(n: usize) -> Vec<SpaceMeta> {
        (0..n).map(|i| SpaceMeta::sphere(&format!("A{i}"), 1)).collect()
    }

    #[test]
    fn moment_angle_examples() {
        let c4 = SimplicialComplex::cycle(&["1", "2", "3", "4"]).unwrap();
        let v = classify_moment_angle(&c4, &[2, 2, 2, 2]).unwrap();
        assert_eq!(v.rational_type, RationalType::Elliptic);
        assert_eq!(v.moore_status, MooreStatus::Holds);
        assert_eq!(v.claims[0].kind, ClaimKind::FiniteExponent);
        assert_eq!(v.claims[0].scope, PrimeScope::AllPrimes);

        let c5 = SimplicialComplex::cycle(&["1", "2", "3", "4", "5"]).unwrap();
        let v = classify_moment_angle(&c5, &[2, 2, 2, 2, 2]).unwrap();
        assert_eq!(v.rational_type, RationalType::Hyperbolic);
        assert_eq!(v.claims[0].kind, ClaimKind::NoExponent);

        let d2 = SimplicialComplex::simplex(&["1", "2", "3"]).unwrap();
        let v = classify_moment_angle(&d2, &[1, 5, 3]).unwrap();
        assert_eq!(v.rational_type, RationalType::Elliptic);
    }

    #[test]
    fn moment_angle_rejects_ghosts_and_bad_arity() {
        let ghostly = SimplicialComplex::empty(&["1"]).unwrap();
        assert!(classify_moment_angle(&ghostly, &[2]).is_err());
        let c4 = SimplicialComplex::cycle(&["1", "2", "3", "4"]).unwrap();
        assert!(matches!(
            classify_moment_angle(&c4, &[2, 2]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn cone_pair_examples() {
        let c5 = SimplicialComplex::cycle(&["1", "2", "3", "4", "5"]).unwrap();
        let v = classify_cone_pair(&c5, &circle_metas(5)).unwrap();
        assert_eq!(v.rational_type, RationalType::Hyperbolic);
        assert_eq!(v.moore_status, MooreStatus::Holds);
        assert!(v
            .claims
            .iter()
            .any(|c| c.kind == ClaimKind::NoExponent && c.scope == PrimeScope::AllPrimes));

        let c4 = SimplicialComplex::cycle(&["1", "2", "3", "4"]).unwrap();
        let v = classify_cone_pair(&c4, &circle_metas(4)).unwrap();
        assert_eq!(v.rational_type, RationalType::Elliptic);

        // Torsion-free but the suspension class is not asserted: only the
        // odd-prime conclusion survives.
        let metas: Vec<SpaceMeta> = circle_metas(5)
            .into_iter()
            .map(|mut m| {
                m.susp_in_w = false;
                m
            })
            .collect();
        let v = classify_cone_pair(&c5, &metas).unwrap();
        assert_eq!(v.rational_type, RationalType::Hyperbolic);
        assert_eq!(v.moore_status, MooreStatus::HoldsAtOddPrimes);
        assert_eq!(v.claims.len(), 1);
        assert_eq!(v.claims[0].scope, PrimeScope::AllOddPrimes);
    }

    #[test]
    fn cone_pair_indeterminate_without_nontriviality() {
        let c5 = SimplicialComplex::cycle(&["1", "2", "3", "4", "5"]).unwrap();
        let metas: Vec<SpaceMeta> = circle_metas(5)
            .into_iter()
            .map(|mut m| {
                m.rationally_nontrivial = false;
                m.torsion_free_homology = false;
                m
            })
            .collect();
        let v = classify_cone_pair(&c5, &metas).unwrap();
        assert_eq!(v.rational_type, RationalType::Indeterminate);
        assert!(!v.notes.is_empty());
    }

    #[test]
    fn general_examples() {
        let c4 = SimplicialComplex::cycle(&["1", "2", "3", "4"]).unwrap();
        let fibres: Vec<SpaceMeta> = (0..4).map(|i| SpaceMeta::sphere(&format!("Y{i}"), 2)).collect();
        let v = classify_general(&c4, &fibres, &[true; 4]).unwrap();
        assert_eq!(v.rational_type, RationalType::Elliptic);

        let v = classify_general(&c4, &fibres, &[true, false, true, true]).unwrap();
        assert_eq!(v.rational_type, RationalType::Hyperbolic);

        let c5 = SimplicialComplex::cycle(&["1", "2", "3", "4", "5"]).unwrap();
        let fibres5: Vec<SpaceMeta> =
            (0..5).map(|i| SpaceMeta::sphere(&format!("Y{i}"), 2)).collect();
        let v = classify_general(&c5, &fibres5, &[true; 5]).unwrap();
        assert_eq!(v.rational_type, RationalType::Hyperbolic);
        assert!(v.claims.is_empty());

        let trivial: Vec<SpaceMeta> = fibres
            .iter()
            .cloned()
            .map(|mut m| {
                m.rationally_nontrivial = false;
                m
            })
            .collect();
        assert!(classify_general(&c4, &trivial, &[true; 4]).is_err());
    }

    #[test]
    fn poly_join_examples() {
        use crate::polyjoin::ComplexPair;

        let x_meta = |name: &str| {
            let mut m = SpaceMeta::named(name);
            m.rationally_elliptic = true;
            m.rationally_nontrivial = true;
            m.loop_rationally_sphere = false;
            m
        };

        // Witness vertex: proper full small pair and lk ≠ deletion.
        let base = SimplicialComplex::simplex_boundary(&["1", "2"]).unwrap();
        let pair1 = ComplexPair::new(
            SimplicialComplex::simplex(&["a", "b"]).unwrap(),
            SimplicialComplex::point("a").unwrap(),
        )
        .unwrap();
        let pair2 = ComplexPair::new(
            SimplicialComplex::point("c").unwrap(),
            SimplicialComplex::point("c").unwrap(),
        )
        .unwrap();
        let spec = PolyJoinSpec::new(base, vec![pair1.clone(), pair2.clone()]).unwrap();
        let v = classify_poly_join(&spec, &[x_meta("X1"), x_meta("X2")]).unwrap();
        assert_eq!(v.rational_type, RationalType::Hyperbolic);
        assert_eq!(v.claims.len(), 2);
        assert!(v
            .claims
            .iter()
            .all(|c| c.scope == PrimeScope::AllButFinitelyManyUnspecified));

        // Edge base: link equals deletion at both vertices.
        let edge = SimplicialComplex::simplex(&["1", "2"]).unwrap();
        let spec = PolyJoinSpec::new(edge.clone(), vec![pair1.clone(), pair2.clone()]).unwrap();
        let v = classify_poly_join(&spec, &[x_meta("X1"), x_meta("X2")]).unwrap();
        assert_eq!(v.rational_type, RationalType::Indeterminate);

        // Non-full small complex and no other witness.
        let base = SimplicialComplex::simplex_boundary(&["1", "2"]).unwrap();
        let not_full = ComplexPair::new(
            SimplicialComplex::simplex(&["a", "b"]).unwrap(),
            SimplicialComplex::simplex_boundary(&["a", "b"]).unwrap(),
        )
        .unwrap();
        let spec = PolyJoinSpec::new(base, vec![not_full, pair2]).unwrap();
        let v = classify_poly_join(&spec, &[x_meta("X1"), x_meta("X2")]).unwrap();
        assert_eq!(v.rational_type, RationalType::Indeterminate);

        // Hypothesis flags are checked up front.
        let mut bad = x_meta("X1");
        bad.loop_rationally_sphere = true;
        let base = SimplicialComplex::simplex(&["1"]).unwrap();
        let pair = ComplexPair::new(
            SimplicialComplex::point("a").unwrap(),
            SimplicialComplex::point("a").unwrap(),
        )
        .unwrap();
        let spec = PolyJoinSpec::new(base, vec![pair]).unwrap();
        assert!(matches!(
            classify_poly_join(&spec, &[bad]),
            Err(Error::MissingHypothesis(_))
        ));
    }

    #[test]
    fn prime_set_examples() {
        let mut m = SpaceMeta::named("X");
        m.dimension = Some(4);
        m.connectivity = Some(1);
        m.torsion_primes = Some(vec![]);
        assert_eq!(suspension_prime_set(&m).unwrap(), vec![2]);

        m.dimension = Some(7);
        assert_eq!(suspension_prime_set(&m).unwrap(), vec![2, 3]);

        m.dimension = Some(4);
        m.torsion_primes = Some(vec![5]);
        assert_eq!(suspension_prime_set(&m).unwrap(), vec![2, 5]);

        m.torsion_primes = None;
        assert!(matches!(
            suspension_prime_set(&m),
            Err(Error::MissingNumericField("torsion_primes"))
        ));
        m.torsion_primes = Some(vec![6]);
        assert!(matches!(suspension_prime_set(&m), Err(Error::NotPrime(6))));
    }

    #[test]
    fn combine_scope_examples() {
        use PrimeScope::*;
        assert_eq!(combine_prime_scopes(&[AllPrimes, AllOddPrimes]), AllOddPrimes);
        assert_eq!(
            combine_prime_scopes(&[ExplicitComplement(vec![2]), ExplicitComplement(vec![3])]),
            ExplicitComplement(vec![2, 3])
        );
        assert_eq!(
            combine_prime_scopes(&[AllButFinitelyManyUnspecified, AllPrimes]),
            AllButFinitelyManyUnspecified
        );
        assert_eq!(combine_prime_scopes(&[]), AllPrimes);
        assert_eq!(
            combine_prime_scopes(&[SomePrime, AllPrimes]),
            SomePrime
        );
    }
}
