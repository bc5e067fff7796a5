//! Acceptance gate: one test per criterion, each printing a pass line.
//! A failing criterion fails its test, so the suite result is the gate.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use polyprod::classify::{
    classify_cone_pair, classify_moment_angle, suspension_prime_set, RationalType, SpaceMeta,
};
use polyprod::format::{write_complex, write_spec};
use polyprod::oracle::{
    brute_full_subcomplexes, brute_mmf, brute_polyjoin, complex_corpus, lyndon_ranks, spec_corpus,
    CorpusSpec,
};
use polyprod::polyjoin::{ComplexPair, PolyJoinSpec};
use polyprod::simplicial::{reconstruct_join, Face, SimplicialComplex, VertexId};
use polyprod::symbolic::{
    loop_decomposition_cone, loop_decomposition_polyjoin, loop_decomposition_pushout, parse_expr,
    rational_rank_series, simplify, PushoutAtoms, PushoutVariant, SpaceExpr,
};

fn c4() -> SimplicialComplex {
    SimplicialComplex::cycle(&["1", "2", "3", "4"]).unwrap()
}

fn c5() -> SimplicialComplex {
    SimplicialComplex::cycle(&["1", "2", "3", "4", "5"]).unwrap()
}

fn v(l: &str) -> VertexId {
    VertexId::new(l).unwrap()
}

fn face_labels(f: &Face) -> Vec<&str> {
    f.vertices().iter().map(|v| v.as_str()).collect()
}

#[test]
fn criterion_01_polyjoin_union_equivalence() {
    let start = Instant::now();
    let specs = spec_corpus(&CorpusSpec {
        max_base_vertices: 4,
        max_pair_vertices: 3,
        seed: 101,
        count: 500,
    });
    assert!(specs.len() >= 500);
    for spec in &specs {
        assert_eq!(
            spec.build().unwrap(),
            brute_polyjoin(spec).unwrap(),
            "support characterisation disagrees with the union definition"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("PASS criterion 1: 500 products equal the brute union in {elapsed:?}");
}

#[test]
fn criterion_02_named_product_identities() {
    // Simplex base: the product is the join of the big complexes.
    let base = SimplicialComplex::simplex(&["1", "2"]).unwrap();
    let k1 = SimplicialComplex::simplex_boundary(&["a", "b"]).unwrap();
    let k2 = SimplicialComplex::path(&["x", "y", "z"]).unwrap();
    let spec = PolyJoinSpec::new(
        base,
        vec![
            ComplexPair::new(k1.clone(), SimplicialComplex::empty(&["a", "b"]).unwrap()).unwrap(),
            ComplexPair::new(k2.clone(), SimplicialComplex::point("x").unwrap()).unwrap(),
        ],
    )
    .unwrap();
    let built = spec.build().unwrap();
    let map: BTreeMap<VertexId, VertexId> = k1
        .vertices()
        .iter()
        .map(|u| (u.clone(), v(&format!("1.{u}"))))
        .chain(k2.vertices().iter().map(|u| (u.clone(), v(&format!("2.{u}")))))
        .collect();
    let expected = k1
        .relabel(&map.iter().filter(|(k, _)| k1.has_vertex(k)).map(|(a, b)| (a.clone(), b.clone())).collect())
        .unwrap()
        .join(&k2.relabel(&map.iter().filter(|(k, _)| k2.has_vertex(k)).map(|(a, b)| (a.clone(), b.clone())).collect()).unwrap())
        .unwrap();
    assert_eq!(built, expected);

    // An all-ghost base (every face empty) is rejected, and the join of the
    // small complexes — the empty-face contribution — is always present.
    assert!(PolyJoinSpec::new(
        SimplicialComplex::empty(&["1", "2"]).unwrap(),
        vec![
            ComplexPair::new(k1.clone(), k1.clone()).unwrap(),
            ComplexPair::new(k2.clone(), k2.clone()).unwrap(),
        ],
    )
    .is_err());
    for spec in spec_corpus(&CorpusSpec {
        max_base_vertices: 3,
        max_pair_vertices: 3,
        seed: 102,
        count: 40,
    }) {
        let built = spec.build().unwrap();
        let mut small_join: Option<SimplicialComplex> = None;
        for (i, pair) in spec.pairs().iter().enumerate() {
            let relabeled = pair
                .small_on_big_vertices()
                .relabel(
                    &pair
                        .big()
                        .vertices()
                        .iter()
                        .map(|u| {
                            (u.clone(), v(&format!("{}.{u}", spec.base().vertices()[i])))
                        })
                        .collect(),
                )
                .unwrap();
            small_join = Some(match small_join {
                None => relabeled,
                Some(acc) => acc.join(&relabeled).unwrap(),
            });
        }
        for f in small_join.unwrap().faces() {
            assert!(built.contains(f), "σ=∅ contribution missing");
        }
    }

    // Pairs (point, {∅}): the product reproduces the base.
    let base = c5();
    let spec = polyprod::polyjoin::point_pair_spec(&base, false).unwrap();
    let back: BTreeMap<VertexId, VertexId> = base
        .vertices()
        .iter()
        .map(|u| (v(&format!("{u}.pt")), u.clone()))
        .collect();
    assert_eq!(spec.build().unwrap().relabel(&back).unwrap(), base);

    // Pairs (point, point): the product is the full simplex.
    let spec = polyprod::polyjoin::point_pair_spec(&base, true).unwrap();
    let built = spec.build().unwrap();
    assert!(built.contains(&Face::new(built.vertices().to_vec())));

    println!("PASS criterion 2: named product identities hold exactly");
}

#[test]
fn criterion_03_mmf_oracle_agreement() {
    let corpus = complex_corpus(103, 1000, 6);
    assert!(corpus.len() >= 1000);
    for k in &corpus {
        assert_eq!(k.minimal_missing_faces(), brute_mmf(k).unwrap());
    }
    let mmf = c4().minimal_missing_faces();
    assert_eq!(
        mmf.faces.iter().map(face_labels).collect::<Vec<_>>(),
        vec![vec!["1", "3"], vec!["2", "4"]]
    );
    let mmf = c5().minimal_missing_faces();
    assert_eq!(
        mmf.faces.iter().map(face_labels).collect::<Vec<_>>(),
        vec![
            vec!["1", "3"],
            vec!["1", "4"],
            vec!["2", "4"],
            vec!["2", "5"],
            vec!["3", "5"]
        ]
    );
    assert!(!mmf.mutually_disjoint());
    println!("PASS criterion 3: missing faces match the oracle on 1000 complexes");
}

#[test]
fn criterion_04_classification_and_cross_consistency() {
    let dims4 = vec![2; 4];
    let dims5 = vec![2; 5];
    assert_eq!(
        classify_moment_angle(&c4(), &dims4).unwrap().rational_type,
        RationalType::Elliptic
    );
    assert_eq!(
        classify_moment_angle(&c5(), &dims5).unwrap().rational_type,
        RationalType::Hyperbolic
    );
    let mut disagreements = 0;
    for k in complex_corpus(104, 400, 5) {
        if !k.is_ghost_free() {
            continue;
        }
        let dims = vec![2; k.vertices().len()];
        let metas: Vec<SpaceMeta> = k
            .vertices()
            .iter()
            .map(|u| SpaceMeta::sphere(u.as_str(), 1))
            .collect();
        let a = classify_moment_angle(&k, &dims).unwrap().rational_type;
        let b = classify_cone_pair(&k, &metas).unwrap().rational_type;
        if a != b {
            disagreements += 1;
        }
    }
    assert_eq!(disagreements, 0);
    println!("PASS criterion 4: cycle classifications and cross-criterion consistency");
}

#[test]
fn criterion_05_join_decomposition() {
    for k in complex_corpus(105, 400, 6) {
        if !k.is_ghost_free() || !k.mmf_mutually_disjoint() {
            continue;
        }
        let d = k.join_decomposition().unwrap();
        assert_eq!(reconstruct_join(&d).unwrap(), k);
    }
    let d = c4().join_decomposition().unwrap();
    assert!(d.simplex_part.is_empty());
    assert_eq!(
        d.boundary_parts.iter().map(face_labels).collect::<Vec<_>>(),
        vec![vec!["1", "3"], vec!["2", "4"]]
    );
    println!("PASS criterion 5: join decompositions reconstruct exactly; C4 = ∂Δ¹ ∗ ∂Δ¹");
}

#[test]
fn criterion_06_pushout_witnesses() {
    for k in complex_corpus(106, 300, 6) {
        for u in k.non_ghost_vertices() {
            assert!(k.star_link_deletion_pushout_check(&u).unwrap());
        }
    }
    for spec in spec_corpus(&CorpusSpec {
        max_base_vertices: 3,
        max_pair_vertices: 3,
        seed: 106,
        count: 120,
    }) {
        for u in spec.base().non_ghost_vertices() {
            assert!(spec.pushout_pieces(&u).unwrap().holds());
        }
    }
    println!("PASS criterion 6: star/deletion and product pushout identities hold");
}

#[test]
fn criterion_07_full_subcomplex_enumeration() {
    let mut checked = 0;
    for spec in spec_corpus(&CorpusSpec {
        max_base_vertices: 3,
        max_pair_vertices: 3,
        seed: 107,
        count: 200,
    }) {
        if spec.output_vertices().unwrap().len() > 8 {
            continue;
        }
        let brute = brute_full_subcomplexes(&spec).unwrap();
        let witnesses = spec.enumerate_full_subcomplexes(usize::MAX).unwrap();
        assert_eq!(brute.len(), witnesses.len());
        for ((subset, restricted), w) in brute.iter().zip(&witnesses) {
            assert_eq!(subset, &w.subset);
            assert_eq!(&w.spec.build().unwrap(), restricted);
            checked += 1;
        }
    }
    assert!(checked > 1000);
    println!("PASS criterion 7: {checked} full subcomplexes match their reconstructions");
}

#[test]
fn criterion_08_symbolic_pipeline() {
    let atoms = vec![SpaceExpr::sphere(1); 4];
    let raw = loop_decomposition_cone(&c4(), &atoms).unwrap();
    let result = simplify(&raw, 16).unwrap();
    assert!(result.complete);
    assert_eq!(result.expr.to_string(), "P(Om(S^3),Om(S^3))");

    let names = PushoutAtoms::default();
    assert_eq!(
        loop_decomposition_pushout(PushoutVariant::Generic, &names).to_string(),
        "P(Om(atom:Mpp),Om(atom:F))"
    );
    assert_eq!(
        loop_decomposition_pushout(PushoutVariant::FullSubcomplex, &names).to_string(),
        "P(Om(atom:Mpp),Om(atom:Lpp),Om(atom:H),Om(Sm(Susp^1(atom:G),Om(atom:H))))"
    );
    assert_eq!(
        loop_decomposition_pushout(PushoutVariant::NullInclusion, &names).to_string(),
        "Om(W(J(atom:Lpp,atom:G),RHS(atom:Kpp,atom:G)))"
    );
    assert_eq!(
        simplify(
            &SpaceExpr::looped(SpaceExpr::half_smash(SpaceExpr::atom("H"), SpaceExpr::atom("G"))),
            16
        )
        .unwrap()
        .expr
        .to_string(),
        "P(Om(atom:H),Om(Sm(Susp^1(atom:G),Om(atom:H))))"
    );

    let spec = PolyJoinSpec::new(
        SimplicialComplex::point("1").unwrap(),
        vec![ComplexPair::new(
            SimplicialComplex::simplex(&["a", "b"]).unwrap(),
            SimplicialComplex::point("a").unwrap(),
        )
        .unwrap()],
    )
    .unwrap();
    let d = loop_decomposition_polyjoin(&spec).unwrap();
    assert_eq!(
        d.expr.to_string(),
        "P(Om(atom:Lpp.1),Om(atom:H.1),Om(Sm(Susp^1(atom:G.1),Om(atom:H.1))))"
    );
    println!("PASS criterion 8: decomposition emitters produce the expected shapes");
}

#[test]
fn criterion_09_growth_series() {
    let ranks = rational_rank_series(&[3, 3], 16).unwrap();
    let even: Vec<u64> = (1..=5).map(|k| ranks[2 * k - 1]).collect();
    assert_eq!(even, vec![2, 1, 2, 3, 6]);
    assert_eq!(even, lyndon_ranks(2, 5).unwrap());
    // rational_rank_series re-substitutes the solution and fails loudly on a
    // nonzero residual, so success here is the reconstruction check.
    let ranks = rational_rank_series(&[3, 3], 32).unwrap();
    for n in 4..=8usize {
        let sum_n: u64 = ranks[..n].iter().sum();
        let sum_2n: u64 = ranks[..2 * n].iter().sum();
        assert!(sum_2n as f64 >= 1.5 * sum_n as f64, "N={n}");
    }
    println!("PASS criterion 9: rank series matches the word-count oracle and grows");
}

#[test]
fn criterion_10_prime_sets() {
    let meta = |d, s, torsion: &[u64]| SpaceMeta {
        dimension: Some(d),
        connectivity: Some(s),
        torsion_primes: Some(torsion.to_vec()),
        ..SpaceMeta::named("A")
    };
    assert_eq!(suspension_prime_set(&meta(4, 1, &[])).unwrap(), vec![2]);
    assert_eq!(suspension_prime_set(&meta(7, 1, &[])).unwrap(), vec![2, 3]);
    assert_eq!(suspension_prime_set(&meta(4, 1, &[5])).unwrap(), vec![2, 5]);
    println!("PASS criterion 10: suspension prime sets are exact");
}

fn cli(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_polyprod"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn schema_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas")
}

/// Loads a schema, inlining references to the complex schema so it compiles
/// without a network resolver.
fn load_schema(name: &str) -> jsonschema::JSONSchema {
    let complex: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(schema_dir().join("complex.schema.json")).unwrap(),
    )
    .unwrap();
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(schema_dir().join(name)).unwrap()).unwrap();
    fn inline(v: &mut serde_json::Value, complex: &serde_json::Value) {
        match v {
            serde_json::Value::Object(map) => {
                if map.get("$ref").and_then(|r| r.as_str()) == Some("complex.schema.json") {
                    let mut inlined = complex.clone();
                    inlined.as_object_mut().unwrap().remove("$schema");
                    inlined.as_object_mut().unwrap().remove("$id");
                    *v = inlined;
                    return;
                }
                for child in map.values_mut() {
                    inline(child, complex);
                }
            }
            serde_json::Value::Array(items) => {
                for child in items {
                    inline(child, complex);
                }
            }
            _ => {}
        }
    }
    inline(&mut value, &complex);
    // The relative $id is for human cross-reference; the compiler wants an
    // absolute URL or none.
    value.as_object_mut().unwrap().remove("$id");
    jsonschema::JSONSchema::compile(&value).unwrap()
}

fn assert_valid(schema: &jsonschema::JSONSchema, text: &str) {
    let instance: serde_json::Value = serde_json::from_str(text).unwrap();
    let messages: Vec<String> = match schema.validate(&instance) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| e.to_string()).collect(),
    };
    panic!("schema violation: {messages:?}\ninstance: {text}");
}

#[test]
fn criterion_11_round_trips_and_schemas() {
    // Library-level byte stability.
    let text = write_complex(&c5());
    let again = polyprod::format::read_complex(&text).unwrap();
    assert_eq!(write_complex(&again), text);
    let spec = polyprod::polyjoin::point_pair_spec(&c4(), false).unwrap();
    let text = write_spec(&spec);
    assert_eq!(write_spec(&polyprod::format::read_spec(&text).unwrap()), text);
    for e in ["W(S^2,S^3)", "Om(RHS(atom:H,atom:G))", "Susp^2(Sm(S^1,Rem(3,16)))"] {
        assert_eq!(parse_expr(e).unwrap().to_string(), e);
    }

    // CLI JSON mode against the shipped schemas.
    let dir = std::env::temp_dir().join(format!("polyprod-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let c4_path = dir.join("c4.json");
    std::fs::write(&c4_path, write_complex(&c4())).unwrap();
    let spec_path = dir.join("spec.json");
    std::fs::write(&spec_path, write_spec(&spec)).unwrap();
    let c4_arg = c4_path.to_str().unwrap();
    let spec_arg = spec_path.to_str().unwrap();

    let complex_schema = load_schema("complex.schema.json");
    let (out, _, code) = cli(&["validate", "--input", c4_arg, "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&complex_schema, &out);
    assert_eq!(out, write_complex(&c4()), "CLI echo is byte-identical");

    let (out, _, code) = cli(&["validate", "--input", spec_arg, "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&load_schema("spec.schema.json"), &out);

    let (out, _, code) = cli(&["mmf", "--input", c4_arg, "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&load_schema("mmf.schema.json"), &out);

    let (out, _, code) = cli(&["decompose", "--input", c4_arg, "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&load_schema("decompose.schema.json"), &out);

    let verdict_schema = load_schema("verdict.schema.json");
    let (out, _, code) = cli(&["classify-mac", "--input", c4_arg, "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&verdict_schema, &out);

    let (out, _, code) = cli(&["polyjoin", "--input", spec_arg, "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&complex_schema, &out);

    let loops_schema = load_schema("loops.schema.json");
    let (out, _, code) = cli(&["loops", "--input", c4_arg, "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&loops_schema, &out);
    let (out, _, code) = cli(&["loops", "--variant", "full-subcomplex", "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&loops_schema, &out);

    let (out, _, code) = cli(&["growth", "--dims", "3,3", "--max-degree", "10", "--format", "json"]);
    assert_eq!(code, 0);
    assert_valid(&load_schema("growth.schema.json"), &out);

    let check_schema = load_schema("oracle-check.schema.json");
    let (out, _, code) = cli(&["oracle", "--seed", "9", "--count", "25"]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    for line in out.lines() {
        assert_valid(&check_schema, line);
    }

    std::fs::remove_dir_all(&dir).ok();
    println!("PASS criterion 11: serializations round-trip and CLI JSON matches the schemas");
}
