//! Confluent simplification of space expressions.
//!
//! Structural canonicalisation (flattening nested wedges/products/smashes,
//! unwrapping singletons, sorting commutative children) is applied silently;
//! the homotopy-equivalence rules are traced. The James splitting of `ΣΩS^n`
//! is expanded only up to the degree cap, leaving an explicit `Rem` marker,
//! so any output containing a marker is flagged as partial.

use crate::symbolic::SpaceExpr;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: &'static str,
    pub before: String,
    pub after: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

#[derive(Clone, Debug)]
pub struct SimplifyResult {
    pub expr: SpaceExpr,
    pub trace: RewriteTrace,
    /// False when the output still contains a James remainder marker or the
    /// step budget ran out before a normal form was reached.
    pub complete: bool,
}

const STEP_BUDGET: usize = 100_000;

/// Rewrites to normal form under the rule set, expanding James splittings up
/// to `degree_cap`.
pub fn simplify(e: &SpaceExpr, degree_cap: u64) -> Result<SimplifyResult> {
    if degree_cap < 1 {
        return Err(Error::MissingHypothesis(
            "degree cap must be at least 1".into(),
        ));
    }
    let mut current = canonical(e.clone());
    let mut trace = RewriteTrace::default();
    let mut budget_ok = true;
    while let Some((path, _)) = first_redex(&current, degree_cap) {
        if trace.steps.len() >= STEP_BUDGET {
            budget_ok = false;
            break;
        }
        let before = current.to_string();
        let (rule, next) = apply_at(&current, &path, degree_cap)
            .expect("redex location must rewrite");
        current = canonical(next);
        trace.steps.push(RewriteStep {
            rule,
            before,
            after: current.to_string(),
        });
    }
    let complete = budget_ok && !current.contains_remainder();
    Ok(SimplifyResult {
        expr: current,
        trace,
        complete,
    })
}

/// Structural canonical form: children canonicalised, nested commutative
/// nodes flattened, singleton lists unwrapped, commutative children sorted.
pub(crate) fn canonical(e: SpaceExpr) -> SpaceExpr {
    match e {
        SpaceExpr::Wedge(es) => canonical_list(es, WEDGE),
        SpaceExpr::Product(es) => canonical_list(es, PRODUCT),
        SpaceExpr::Smash(es) => canonical_list(es, SMASH),
        SpaceExpr::Join(a, b) => SpaceExpr::join(canonical(*a), canonical(*b)),
        SpaceExpr::Susp(k, e) => SpaceExpr::susp(k, canonical(*e)),
        SpaceExpr::Loop(e) => SpaceExpr::looped(canonical(*e)),
        SpaceExpr::Cone(e) => SpaceExpr::Cone(Box::new(canonical(*e))),
        SpaceExpr::RightHalfSmash(a, b) => SpaceExpr::half_smash(canonical(*a), canonical(*b)),
        leaf => leaf,
    }
}

#[derive(Clone, Copy, PartialEq)]
enum ListKind {
    Wedge,
    Product,
    Smash,
}
const WEDGE: ListKind = ListKind::Wedge;
const PRODUCT: ListKind = ListKind::Product;
const SMASH: ListKind = ListKind::Smash;

fn same_kind(e: &SpaceExpr, kind: ListKind) -> Option<&Vec<SpaceExpr>> {
    match (e, kind) {
        (SpaceExpr::Wedge(es), ListKind::Wedge) => Some(es),
        (SpaceExpr::Product(es), ListKind::Product) => Some(es),
        (SpaceExpr::Smash(es), ListKind::Smash) => Some(es),
        _ => None,
    }
}

fn canonical_list(es: Vec<SpaceExpr>, kind: ListKind) -> SpaceExpr {
    let mut flat = Vec::with_capacity(es.len());
    for e in es {
        let e = canonical(e);
        if let Some(inner) = same_kind(&e, kind) {
            flat.extend(inner.iter().cloned());
        } else {
            flat.push(e);
        }
    }
    flat.sort();
    if flat.len() == 1 {
        return flat.pop().unwrap();
    }
    match kind {
        ListKind::Wedge => SpaceExpr::Wedge(flat),
        ListKind::Product => SpaceExpr::Product(flat),
        ListKind::Smash => SpaceExpr::Smash(flat),
    }
}

/// Tries the rules at a single node, in fixed priority order. Inputs are
/// assumed canonical; outputs need re-canonicalisation.
fn try_rules(e: &SpaceExpr, degree_cap: u64) -> Option<(&'static str, SpaceExpr)> {
    match e {
        SpaceExpr::Cone(_) => Some(("cone-collapse", SpaceExpr::Point)),

        SpaceExpr::Join(a, b) => Some((
            "join-as-suspended-smash",
            SpaceExpr::susp(1, SpaceExpr::Smash(vec![(**a).clone(), (**b).clone()])),
        )),

        SpaceExpr::Susp(k, inner) => match &**inner {
            SpaceExpr::Point => Some(("susp-point", SpaceExpr::Point)),
            SpaceExpr::Sphere(n) => Some(("susp-sphere", SpaceExpr::Sphere(n + k))),
            SpaceExpr::Susp(j, e) => {
                Some(("susp-susp", SpaceExpr::susp(k + j, (**e).clone())))
            }
            SpaceExpr::Wedge(es) => Some((
                "susp-over-wedge",
                SpaceExpr::Wedge(es.iter().map(|e| SpaceExpr::susp(*k, e.clone())).collect()),
            )),
            SpaceExpr::Product(es) => {
                // Σ(A×B) ≃ ΣA ∨ ΣB ∨ Σ(A∧B), splitting off the first factor.
                let a = es[0].clone();
                let b = if es.len() == 2 {
                    es[1].clone()
                } else {
                    SpaceExpr::Product(es[1..].to_vec())
                };
                Some((
                    "susp-of-product",
                    SpaceExpr::Wedge(vec![
                        SpaceExpr::susp(*k, a.clone()),
                        SpaceExpr::susp(*k, b.clone()),
                        SpaceExpr::susp(*k, SpaceExpr::Smash(vec![a, b])),
                    ]),
                ))
            }
            SpaceExpr::Loop(l) => match &**l {
                SpaceExpr::Sphere(n) if *n >= 2 => {
                    Some(("james-splitting", james_expansion(*k, *n, degree_cap)))
                }
                _ => None,
            },
            _ => None,
        },

        SpaceExpr::Smash(es) => {
            if es.iter().any(|e| matches!(e, SpaceExpr::Point)) {
                return Some(("smash-point", SpaceExpr::Point));
            }
            let spheres: Vec<u64> = es
                .iter()
                .filter_map(|e| match e {
                    SpaceExpr::Sphere(n) => Some(*n),
                    _ => None,
                })
                .collect();
            if spheres.len() >= 2 {
                let total: u64 = spheres.iter().sum();
                let mut rest: Vec<SpaceExpr> = es
                    .iter()
                    .filter(|e| !matches!(e, SpaceExpr::Sphere(_)))
                    .cloned()
                    .collect();
                rest.push(SpaceExpr::Sphere(total));
                return Some(("sphere-smash", SpaceExpr::Smash(rest)));
            }
            if let Some(pos) = es.iter().position(|e| matches!(e, SpaceExpr::Wedge(_))) {
                let SpaceExpr::Wedge(summands) = &es[pos] else {
                    unreachable!()
                };
                let expanded = summands
                    .iter()
                    .map(|s| {
                        let mut children = es.clone();
                        children[pos] = s.clone();
                        SpaceExpr::Smash(children)
                    })
                    .collect();
                return Some(("smash-over-wedge", SpaceExpr::Wedge(expanded)));
            }
            None
        }

        SpaceExpr::Wedge(es) => {
            if es.iter().any(|e| matches!(e, SpaceExpr::Point)) {
                let rest: Vec<SpaceExpr> = es
                    .iter()
                    .filter(|e| !matches!(e, SpaceExpr::Point))
                    .cloned()
                    .collect();
                let next = if rest.is_empty() {
                    SpaceExpr::Point
                } else {
                    SpaceExpr::Wedge(rest)
                };
                return Some(("wedge-unit", next));
            }
            None
        }

        SpaceExpr::Product(es) => {
            if es.iter().any(|e| matches!(e, SpaceExpr::Point)) {
                let rest: Vec<SpaceExpr> = es
                    .iter()
                    .filter(|e| !matches!(e, SpaceExpr::Point))
                    .cloned()
                    .collect();
                let next = if rest.is_empty() {
                    SpaceExpr::Point
                } else {
                    SpaceExpr::Product(rest)
                };
                return Some(("product-unit", next));
            }
            None
        }

        SpaceExpr::Loop(inner) => match &**inner {
            SpaceExpr::Point => Some(("loop-point", SpaceExpr::Point)),
            SpaceExpr::Product(es) => Some((
                "loop-of-product",
                SpaceExpr::Product(es.iter().map(|e| SpaceExpr::looped(e.clone())).collect()),
            )),
            SpaceExpr::RightHalfSmash(h, g) => {
                // Ω(H⋊G) ≃ ΩH × Ω(ΣG ∧ ΩH)
                let loop_h = SpaceExpr::looped((**h).clone());
                Some((
                    "loop-half-smash",
                    SpaceExpr::Product(vec![
                        loop_h.clone(),
                        SpaceExpr::looped(SpaceExpr::Smash(vec![
                            SpaceExpr::susp(1, (**g).clone()),
                            loop_h,
                        ])),
                    ]),
                ))
            }
            _ => None,
        },

        _ => None,
    }
}

/// `Σ^k ΩS^n` as a wedge of spheres `S^{j(n−1)+k}` while `j(n−1)+1 ≤ cap`,
/// plus the (possibly suspended) remainder marker.
fn james_expansion(k: u64, n: u64, cap: u64) -> SpaceExpr {
    let mut summands = Vec::new();
    let mut j = 1;
    while j * (n - 1) < cap {
        summands.push(SpaceExpr::Sphere(j * (n - 1) + k));
        j += 1;
    }
    let marker = SpaceExpr::JamesRemainder { sphere: n, cap };
    summands.push(if k > 1 {
        SpaceExpr::susp(k - 1, marker)
    } else {
        marker
    });
    SpaceExpr::Wedge(summands)
}

/// Positions (paths of child indices) at which a rule applies, in post-order.
pub(crate) fn redex_paths(e: &SpaceExpr, degree_cap: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    collect_redexes(e, degree_cap, &mut Vec::new(), &mut out);
    out
}

fn collect_redexes(
    e: &SpaceExpr,
    degree_cap: u64,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for (i, child) in children(e).into_iter().enumerate() {
        path.push(i);
        collect_redexes(child, degree_cap, path, out);
        path.pop();
    }
    if try_rules(e, degree_cap).is_some() {
        out.push(path.clone());
    }
}

fn children(e: &SpaceExpr) -> Vec<&SpaceExpr> {
    match e {
        SpaceExpr::Wedge(es) | SpaceExpr::Product(es) | SpaceExpr::Smash(es) => es.iter().collect(),
        SpaceExpr::Join(a, b) | SpaceExpr::RightHalfSmash(a, b) => vec![a, b],
        SpaceExpr::Susp(_, e) | SpaceExpr::Loop(e) | SpaceExpr::Cone(e) => vec![e],
        _ => vec![],
    }
}

fn first_redex(e: &SpaceExpr, degree_cap: u64) -> Option<(Vec<usize>, &'static str)> {
    let paths = redex_paths(e, degree_cap);
    let path = paths.into_iter().next()?;
    let (rule, _) = try_rules(subtree(e, &path), degree_cap)?;
    Some((path, rule))
}

fn subtree<'a>(e: &'a SpaceExpr, path: &[usize]) -> &'a SpaceExpr {
    let mut cur = e;
    for &i in path {
        cur = children(cur)[i];
    }
    cur
}

/// Applies the highest-priority rule at `path`, returning the rule name and
/// the rewritten whole expression (not yet canonicalised).
pub(crate) fn apply_at(
    e: &SpaceExpr,
    path: &[usize],
    degree_cap: u64,
) -> Option<(&'static str, SpaceExpr)> {
    if path.is_empty() {
        return try_rules(e, degree_cap);
    }
    let idx = path[0];
    let rebuild = |replacement: SpaceExpr, e: &SpaceExpr| -> SpaceExpr {
        let mut out = e.clone();
        match &mut out {
            SpaceExpr::Wedge(es) | SpaceExpr::Product(es) | SpaceExpr::Smash(es) => {
                es[idx] = replacement
            }
            SpaceExpr::Join(a, b) | SpaceExpr::RightHalfSmash(a, b) => {
                if idx == 0 {
                    **a = replacement
                } else {
                    **b = replacement
                }
            }
            SpaceExpr::Susp(_, inner) | SpaceExpr::Loop(inner) | SpaceExpr::Cone(inner) => {
                **inner = replacement
            }
            _ => unreachable!("leaf nodes have no children"),
        }
        out
    };
    let child = children(e)[idx];
    let (rule, new_child) = apply_at(child, &path[1..], degree_cap)?;
    Some((rule, rebuild(new_child, e)))
}
