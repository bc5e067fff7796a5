//! Brute-force reference implementations and the seeded test corpus.
//!
//! Everything here recomputes results from first principles — full subset
//! enumeration, literal unions, word counting — sharing no nontrivial code
//! with the main paths, so agreement between the two is meaningful.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::polyjoin::{ComplexPair, PolyJoinSpec};
use crate::simplicial::{Face, MissingFaceSet, SimplicialComplex, VertexId};
use crate::{Error, Result};

/// Minimal missing faces by enumerating every vertex subset and keeping the
/// non-faces all of whose proper subsets are faces. Guarded at 16 vertices.
pub fn brute_mmf(k: &SimplicialComplex) -> Result<MissingFaceSet> {
    let verts = k.vertices();
    if verts.len() > 16 {
        return Err(Error::GuardExceeded(format!(
            "brute-force missing-face search is limited to 16 vertices, got {}",
            verts.len()
        )));
    }
    let mut faces = Vec::new();
    let mut ghost_singletons = Vec::new();
    for mask in 1u64..(1 << verts.len()) {
        let subset = Face::new(
            verts
                .iter()
                .enumerate()
                .filter(|(j, _)| mask & (1 << j) != 0)
                .map(|(_, v)| v.clone())
                .collect(),
        );
        if k.contains(&subset) {
            continue;
        }
        let all_proper_subsets_present = subset
            .subsets()
            .into_iter()
            .filter(|s| s.len() < subset.len())
            .all(|s| k.contains(&s));
        if all_proper_subsets_present {
            if subset.len() == 1 {
                ghost_singletons.push(subset.vertices()[0].clone());
            } else {
                faces.push(subset);
            }
        }
    }
    faces.sort();
    ghost_singletons.sort();
    Ok(MissingFaceSet {
        faces,
        ghost_singletons,
    })
}

/// The polyhedral join product computed as the literal union, over the faces
/// σ of the base, of the joins using `K_i` on σ and `L_i` elsewhere.
/// Guarded at 14 output vertices.
pub fn brute_polyjoin(spec: &PolyJoinSpec) -> Result<SimplicialComplex> {
    let vertices = spec.output_vertices()?;
    if vertices.len() > 14 {
        return Err(Error::GuardExceeded(format!(
            "brute-force product is limited to 14 output vertices, got {}",
            vertices.len()
        )));
    }
    let base_verts = spec.base().vertices();
    let relabel = |i: usize, f: &Face| -> Result<Face> {
        Ok(Face::new(
            f.vertices()
                .iter()
                .map(|v| VertexId::new(format!("{}.{}", base_verts[i], v)))
                .collect::<Result<_>>()?,
        ))
    };
    let mut union: BTreeSet<Face> = BTreeSet::new();
    for sigma in spec.base().faces() {
        // Faces of the m-fold join: one face from each factor, unioned.
        let mut partial: Vec<Face> = vec![Face::empty()];
        for (i, pair) in spec.pairs().iter().enumerate() {
            let factor = if sigma.contains(&base_verts[i]) {
                pair.big().clone()
            } else {
                pair.small_on_big_vertices()
            };
            let mut next = Vec::new();
            for f in factor.faces() {
                let tagged = relabel(i, f)?;
                for built in &partial {
                    next.push(built.union(&tagged));
                }
            }
            partial = next;
        }
        union.extend(partial);
    }
    SimplicialComplex::build(vertices, union.into_iter().collect())
}

/// Every full subcomplex of the built product, one per vertex subset,
/// computed by direct restriction. Guarded at 12 output vertices.
pub fn brute_full_subcomplexes(
    spec: &PolyJoinSpec,
) -> Result<Vec<(BTreeSet<VertexId>, SimplicialComplex)>> {
    let whole = brute_polyjoin(spec)?;
    let all = whole.vertices().to_vec();
    if all.len() > 12 {
        return Err(Error::GuardExceeded(format!(
            "full-subcomplex enumeration is limited to 12 vertices, got {}",
            all.len()
        )));
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << all.len()) {
        let subset: BTreeSet<VertexId> = all
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, v)| v.clone())
            .collect();
        let restricted = whole.full_subcomplex(&subset)?;
        out.push((subset, restricted));
    }
    Ok(out)
}

/// Dimensions of the free Lie algebra on `num_generators` letters in word
/// lengths `1..=max_word_length`, by direct Lyndon-word enumeration (a word
/// is Lyndon when it is strictly smaller than each of its proper rotations).
pub fn lyndon_ranks(num_generators: usize, max_word_length: usize) -> Result<Vec<u64>> {
    if num_generators > 4 || max_word_length > 12 {
        return Err(Error::GuardExceeded(format!(
            "Lyndon enumeration is limited to 4 generators and length 12, \
             got {num_generators} generators, length {max_word_length}"
        )));
    }
    let mut counts = Vec::with_capacity(max_word_length);
    for len in 1..=max_word_length {
        let total = (num_generators as u64).pow(len as u32);
        let mut count = 0u64;
        let mut word = vec![0usize; len];
        for code in 0..total {
            let mut c = code;
            for slot in word.iter_mut().rev() {
                *slot = (c % num_generators as u64) as usize;
                c /= num_generators as u64;
            }
            let is_lyndon = (1..len).all(|r| {
                let rotation = word[r..].iter().chain(&word[..r]);
                word.iter().lt(rotation)
            });
            if is_lyndon {
                count += 1;
            }
        }
        counts.push(count);
    }
    Ok(counts)
}

/// Parameters for deterministic corpus generation.
#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub max_base_vertices: usize,
    pub max_pair_vertices: usize,
    pub seed: u64,
    pub count: usize,
}

/// The named complexes every corpus must contain: cycles C4 and C5, paths,
/// simplices, and simplex boundaries on up to `max_vertices` vertices.
pub fn named_complexes(max_vertices: usize) -> Vec<SimplicialComplex> {
    let labels: Vec<String> = (1..=max_vertices.max(5)).map(|i| i.to_string()).collect();
    let refs = |n: usize| -> Vec<&str> { labels[..n].iter().map(String::as_str).collect() };
    let mut out = Vec::new();
    if max_vertices >= 4 {
        out.push(SimplicialComplex::cycle(&refs(4)).unwrap());
    }
    if max_vertices >= 5 {
        out.push(SimplicialComplex::cycle(&refs(5)).unwrap());
    }
    for n in 1..=max_vertices {
        out.push(SimplicialComplex::simplex(&refs(n)).unwrap());
        if n >= 2 {
            out.push(SimplicialComplex::path(&refs(n)).unwrap());
            out.push(SimplicialComplex::simplex_boundary(&refs(n)).unwrap());
        }
    }
    out
}

/// A random complex on up to `max_vertices` vertices: the downward closure
/// of a random generator set. With `ghost_free`, every singleton is added.
fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize, ghost_free: bool) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let vertices: Vec<VertexId> = (1..=n)
        .map(|i| VertexId::new(i.to_string()).unwrap())
        .collect();
    let mut generators = Vec::new();
    if ghost_free {
        generators.extend(vertices.iter().cloned().map(Face::singleton));
    }
    let num_gens = rng.gen_range(0..=n + 1);
    for _ in 0..num_gens {
        let mask: u64 = rng.gen_range(1..(1u64 << n));
        generators.push(Face::new(
            vertices
                .iter()
                .enumerate()
                .filter(|(j, _)| mask & (1 << j) != 0)
                .map(|(_, v)| v.clone())
                .collect(),
        ));
    }
    SimplicialComplex::build(vertices, generators).unwrap()
}

/// Deterministic corpus of complexes: the named complexes that fit in
/// `max_vertices`, then seeded random ones up to `count` total.
pub fn complex_corpus(seed: u64, count: usize, max_vertices: usize) -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> = named_complexes(max_vertices)
        .into_iter()
        .filter(|k| k.vertices().len() <= max_vertices)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        out.push(random_complex(&mut rng, max_vertices, false));
    }
    out.truncate(count);
    out
}

/// Deterministic corpus of product specifications: ghost-free random bases
/// with random inner pairs (each small complex a random subcomplex of its
/// big complex, on the same vertex set).
pub fn spec_corpus(cs: &CorpusSpec) -> Vec<PolyJoinSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(cs.seed);
    let mut out = Vec::with_capacity(cs.count);
    while out.len() < cs.count {
        let base = random_complex(&mut rng, cs.max_base_vertices, true);
        let pairs: Vec<ComplexPair> = base
            .vertices()
            .iter()
            .map(|_| {
                let big = random_complex(&mut rng, cs.max_pair_vertices, false);
                let keep: Vec<Face> = big
                    .faces()
                    .iter()
                    .filter(|f| !f.is_empty() && rng.gen_bool(0.5))
                    .cloned()
                    .collect();
                let small = SimplicialComplex::build(big.vertices().to_vec(), keep).unwrap();
                ComplexPair::new(big, small).unwrap()
            })
            .collect();
        out.push(PolyJoinSpec::new(base, pairs).unwrap());
    }
    out
}

/// One line of the machine-readable oracle report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub cases: usize,
    pub passed: bool,
    pub detail: String,
}

fn report(check: &str, cases: usize, failures: usize) -> CheckReport {
    CheckReport {
        check: check.to_string(),
        cases,
        passed: failures == 0,
        detail: if failures == 0 {
            "all cases agree".to_string()
        } else {
            format!("{failures} disagreement(s)")
        },
    }
}

/// Runs every oracle/main-path comparison on seeded corpora and returns one
/// report per check.
pub fn run_checks(seed: u64, count: usize) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();

    let complexes = complex_corpus(seed, count, 6);
    let mut failures = 0;
    for k in &complexes {
        if k.minimal_missing_faces() != brute_mmf(k)? {
            failures += 1;
        }
    }
    reports.push(report("minimal-missing-faces", complexes.len(), failures));

    let mut failures = 0;
    let mut cases = 0;
    for k in &complexes {
        if k.mmf_mutually_disjoint() && k.is_ghost_free() {
            cases += 1;
            let d = k.join_decomposition()?;
            if &crate::simplicial::reconstruct_join(&d)? != k {
                failures += 1;
            }
        }
    }
    reports.push(report("join-decomposition-reconstruction", cases, failures));

    let mut failures = 0;
    let mut cases = 0;
    for k in &complexes {
        for v in k.non_ghost_vertices() {
            cases += 1;
            if !k.star_link_deletion_pushout_check(&v)? {
                failures += 1;
            }
        }
    }
    reports.push(report("star-deletion-pushout", cases, failures));

    let specs = spec_corpus(&CorpusSpec {
        max_base_vertices: 4,
        max_pair_vertices: 3,
        seed,
        count,
    });
    let mut failures = 0;
    for spec in &specs {
        if spec.build()? != brute_polyjoin(spec)? {
            failures += 1;
        }
    }
    reports.push(report("polyhedral-join-union", specs.len(), failures));

    let mut failures = 0;
    let mut cases = 0;
    for spec in &specs {
        for v in spec.base().non_ghost_vertices() {
            cases += 1;
            if !spec.pushout_pieces(&v)?.holds() {
                failures += 1;
            }
        }
    }
    reports.push(report("product-pushout-pieces", cases, failures));

    let small_specs: Vec<&PolyJoinSpec> = specs
        .iter()
        .filter(|s| s.output_vertices().map(|v| v.len() <= 8).unwrap_or(false))
        .take(count.min(40))
        .collect();
    let mut failures = 0;
    let mut cases = 0;
    for spec in &small_specs {
        let brute = brute_full_subcomplexes(spec)?;
        let witnesses = spec.enumerate_full_subcomplexes(usize::MAX)?;
        for ((subset, restricted), w) in brute.iter().zip(&witnesses) {
            cases += 1;
            if subset != &w.subset || &w.spec.build()? != restricted {
                failures += 1;
            }
        }
    }
    reports.push(report("full-subcomplex-reconstruction", cases, failures));

    let mut failures = 0;
    let mut cases = 0;
    for gens in 1..=3usize {
        let lyndon = lyndon_ranks(gens, 8)?;
        // All generators on 3-spheres: even loop degree 2, so rank at degree
        // 2k is the Lyndon count at word length k.
        let ranks =
            crate::symbolic::rational_rank_series(&vec![3; gens], 16)?;
        for (k, &l) in lyndon.iter().enumerate() {
            cases += 1;
            if ranks[2 * (k + 1) - 1] != l {
                failures += 1;
            }
        }
    }
    reports.push(report("free-lie-algebra-ranks", cases, failures));

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_mmf_known_values() {
        let c4 = SimplicialComplex::cycle(&["1", "2", "3", "4"]).unwrap();
        let mmf = brute_mmf(&c4).unwrap();
        let shown: Vec<Vec<&str>> = mmf
            .faces
            .iter()
            .map(|f| f.vertices().iter().map(|v| v.as_str()).collect())
            .collect();
        assert_eq!(shown, vec![vec!["1", "3"], vec!["2", "4"]]);

        let d3 = SimplicialComplex::simplex(&["1", "2", "3", "4"]).unwrap();
        assert!(brute_mmf(&d3).unwrap().is_empty());

        let two_points = SimplicialComplex::empty(&["1", "2"]).unwrap();
        let two_points = SimplicialComplex::build(
            two_points.vertices().to_vec(),
            vec![
                Face::singleton(VertexId::new("1").unwrap()),
                Face::singleton(VertexId::new("2").unwrap()),
            ],
        )
        .unwrap();
        let mmf = brute_mmf(&two_points).unwrap();
        assert_eq!(mmf.faces.len(), 1);
        assert_eq!(mmf.faces[0].len(), 2);
    }

    #[test]
    fn brute_mmf_sees_ghosts() {
        let k = SimplicialComplex::build(
            vec![VertexId::new("1").unwrap(), VertexId::new("2").unwrap()],
            vec![Face::singleton(VertexId::new("1").unwrap())],
        )
        .unwrap();
        let mmf = brute_mmf(&k).unwrap();
        assert_eq!(mmf.ghost_singletons.len(), 1);
        assert!(mmf.faces.is_empty());
    }

    #[test]
    fn lyndon_known_counts() {
        assert_eq!(lyndon_ranks(2, 5).unwrap(), vec![2, 1, 2, 3, 6]);
        assert_eq!(lyndon_ranks(1, 3).unwrap(), vec![1, 0, 0]);
        assert_eq!(lyndon_ranks(3, 3).unwrap(), vec![3, 3, 8]);
        assert!(matches!(lyndon_ranks(5, 3), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn witt_necklace_cross_check() {
        // k·d_k = Σ_{j | k} μ(j)·g^{k/j} for the free Lie algebra on g letters.
        let mobius = [0i64, 1, -1, -1, 0, -1, 1, -1, 0];
        for g in 1..=3u64 {
            let counts = lyndon_ranks(g as usize, 8).unwrap();
            for k in 1..=8usize {
                let mut total = 0i64;
                for (j, mu) in mobius.iter().enumerate().take(k + 1).skip(1) {
                    if k % j == 0 {
                        total += mu * (g as i64).pow((k / j) as u32);
                    }
                }
                assert_eq!(counts[k - 1] as i64 * k as i64, total, "g={g} k={k}");
            }
        }
    }

    #[test]
    fn corpus_is_deterministic_and_contains_named_complexes() {
        let a = complex_corpus(7, 50, 6);
        let b = complex_corpus(7, 50, 6);
        assert_eq!(a, b);
        let c4 = SimplicialComplex::cycle(&["1", "2", "3", "4"]).unwrap();
        let c5 = SimplicialComplex::cycle(&["1", "2", "3", "4", "5"]).unwrap();
        assert!(a.contains(&c4));
        assert!(a.contains(&c5));
    }

    #[test]
    fn brute_polyjoin_guard() {
        let base = SimplicialComplex::simplex(&["1", "2", "3"]).unwrap();
        let big = SimplicialComplex::simplex(&["a", "b", "c", "d", "e"]).unwrap();
        let small = SimplicialComplex::build(big.vertices().to_vec(), vec![]).unwrap();
        let pairs = vec![
            ComplexPair::new(big.clone(), small.clone()).unwrap(),
            ComplexPair::new(big.clone(), small.clone()).unwrap(),
            ComplexPair::new(big, small).unwrap(),
        ];
        let spec = PolyJoinSpec::new(base, pairs).unwrap();
        assert!(matches!(
            brute_polyjoin(&spec),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn union_definition_matches_support_characterisation() {
        let specs = spec_corpus(&CorpusSpec {
            max_base_vertices: 3,
            max_pair_vertices: 3,
            seed: 11,
            count: 60,
        });
        for spec in &specs {
            assert_eq!(spec.build().unwrap(), brute_polyjoin(spec).unwrap());
        }
    }

    #[test]
    fn all_checks_pass() {
        let reports = run_checks(5, 60).unwrap();
        for r in &reports {
            assert!(r.passed, "{}: {}", r.check, r.detail);
        }
    }
}
