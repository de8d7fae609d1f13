//! Exhaustive desk-scale verification of the structural facts the
//! construction relies on, each checked against naive oracles or straight
//! from the definitions on every bundled system.

mod common;

use common::*;
use septree::{
    articulation_cuts, maximal_inseparable_sets, pretree_elements, quotient_blobs, realize,
    CutSystem, ElementKind, Pretree, VertexSet,
};

fn pretrees() -> Vec<(&'static str, Pretree)> {
    valid_systems()
        .into_iter()
        .map(|(name, cs)| (name, Pretree::new(cs).unwrap()))
        .collect()
}

#[test]
fn components_agree_with_closure_oracle() {
    for (_, cs) in valid_systems() {
        let space = cs.space();
        let vertices: Vec<&str> = space.vertices().collect();
        for removed in power_set(&vertices) {
            assert_eq!(
                space.components(&removed).unwrap(),
                naive_components(space, &removed),
                "components mismatch removing {removed}"
            );
        }
    }
}

#[test]
fn components_partition_and_do_not_touch() {
    for (_, cs) in valid_systems() {
        let space = cs.space();
        let vertices: Vec<&str> = space.vertices().collect();
        for removed in power_set(&vertices) {
            let comps = space.components(&removed).unwrap();
            let mut union = removed.clone();
            for comp in &comps {
                assert!(union.intersection(comp).is_empty(), "components overlap");
                union = union.union(comp);
            }
            assert_eq!(union, space.vertex_set());
            for (i, a) in comps.iter().enumerate() {
                for b in &comps[i + 1..] {
                    for u in a.iter() {
                        assert!(
                            !space.neighbors(u).any(|w| b.contains(w)),
                            "edge crosses components of {removed}"
                        );
                    }
                }
            }
        }
    }
}

/// Edge-boundary separation criterion: if some set F has its edge
/// boundary inside E but sticks out of E on both sides, then E separates.
#[test]
fn edge_boundary_criterion_holds_exhaustively() {
    for (name, cs) in valid_systems() {
        let space = cs.space();
        if space.vertex_count() > 8 {
            continue;
        }
        let vertices: Vec<&str> = space.vertices().collect();
        let all = space.vertex_set();
        for e in power_set(&vertices) {
            let separates = space.separates(&e).unwrap();
            for f in power_set(&vertices) {
                let inside = f.difference(&e);
                let outside = all.difference(&f).difference(&e);
                if inside.is_empty() || outside.is_empty() {
                    continue;
                }
                let boundary_in_e = inside
                    .iter()
                    .all(|u| space.neighbors(u).all(|w| !outside.contains(w)));
                if boundary_in_e {
                    assert!(separates, "{name}: {e} must separate (witness set {f})");
                }
            }
        }
    }
}

/// Inclusions send components to components: shrinking the removed set
/// never splits a component, it only merges them.
#[test]
fn component_inclusion_respects_nesting() {
    for (name, cs) in valid_systems() {
        let space = cs.space();
        if space.vertex_count() > 8 {
            continue;
        }
        let vertices: Vec<&str> = space.vertices().collect();
        for e in power_set(&vertices) {
            let sub_comps = space.components(&e).unwrap();
            let e_members: Vec<&str> = e.iter().collect();
            for e_prime in power_set(&e_members) {
                let big_comps = space.components(&e_prime).unwrap();
                for comp in &sub_comps {
                    let hosts = big_comps.iter().filter(|big| comp.is_subset(big)).count();
                    assert_eq!(
                        hosts, 1,
                        "{name}: component {comp} of V\\{e} must sit in exactly one component of V\\{e_prime}"
                    );
                }
            }
        }
    }
}

#[test]
fn articulation_cuts_agree_with_removal_oracle() {
    for (_, cs) in valid_systems() {
        assert_eq!(
            articulation_cuts(cs.space()),
            naive_articulations(cs.space())
        );
    }
    // hand-checked small cases
    assert_eq!(
        articulation_cuts(&path(&["a", "b", "c", "d"])),
        vec![vs(&["b"]), vs(&["c"])]
    );
    assert_eq!(articulation_cuts(&two_triangles()), vec![vs(&["v"])]);
}

#[test]
fn setwise_inseparability_is_pairwise_exhaustively() {
    for (name, cs) in valid_systems() {
        let vertices: Vec<&str> = cs.space().vertices().collect();
        if vertices.len() > 10 {
            continue;
        }
        for p in power_set(&vertices) {
            let setwise = septree::is_inseparable_set(&cs, &p).unwrap();
            let members: Vec<&str> = p.iter().collect();
            let pairwise = members.iter().enumerate().all(|(i, x)| {
                members[i + 1..]
                    .iter()
                    .all(|y| septree::inseparable(&cs, x, y).unwrap())
            });
            assert_eq!(setwise, pairwise, "{name}: mismatch on {p}");
        }
    }
}

#[test]
fn clique_enumeration_matches_subset_oracle() {
    for (name, cs) in valid_systems() {
        let by_cliques = maximal_inseparable_sets(&cs).unwrap();
        let by_subsets = naive_maximal_inseparable(cs.space(), cs.cuts());
        assert_eq!(by_cliques, by_subsets, "{name}");
    }
}

#[test]
fn maximal_sets_are_maximal_and_cover_cuts() {
    for (name, cs) in valid_systems() {
        let maximal = maximal_inseparable_sets(&cs).unwrap();
        let all = cs.space().vertex_set();
        for m in &maximal {
            for v in all.difference(m).iter() {
                let extended = m.union(&vs(&[v]));
                assert!(
                    !septree::is_inseparable_set(&cs, &extended).unwrap(),
                    "{name}: {m} extends by {v}"
                );
            }
        }
        for cut in cs.cuts() {
            assert!(septree::is_inseparable_set(&cs, cut).unwrap());
            assert!(
                maximal.iter().any(|m| cut.is_subset(m)),
                "{name}: cut {cut} not contained in any maximal set"
            );
        }
        // blob supports never collide with cut supports
        for e in pretree_elements(&cs).unwrap() {
            if e.kind == ElementKind::Blob {
                assert!(!cs.cuts().contains(&e.support));
            }
        }
    }
}

#[test]
fn betweenness_table_matches_definition_oracle() {
    for (name, p) in pretrees() {
        let space = p.space();
        let cuts = p.system().cuts().to_vec();
        let elements = p.elements().to_vec();
        for x in &elements {
            for b in &elements {
                for c in &elements {
                    assert_eq!(
                        p.between(x, b, c).unwrap(),
                        naive_between(space, &cuts, x, b, c),
                        "{name}: ({x}, {b}, {c})"
                    );
                }
            }
        }
    }
}

#[test]
fn cut_stage_betweenness_separates_sides_cleanly() {
    // For a cut A between distinct B and C, each side's remainder is
    // nonempty and confined to a single component, and the two components
    // differ.
    for (name, p) in pretrees() {
        let space = p.space();
        for a in 0..p.len() {
            if p.element(a).kind != ElementKind::Cut {
                continue;
            }
            let map = space.component_map(&p.element(a).support).unwrap();
            for b in 0..p.len() {
                for c in 0..p.len() {
                    if !p.between_idx(a, b, c) || b == c {
                        continue;
                    }
                    let ids = |i: usize| -> Vec<usize> {
                        let mut v: Vec<usize> = p
                            .element(i)
                            .support
                            .iter()
                            .filter_map(|x| map.get(x).copied())
                            .collect();
                        v.sort_unstable();
                        v.dedup();
                        v
                    };
                    let b_ids = ids(b);
                    let c_ids = ids(c);
                    assert_eq!(b_ids.len(), 1, "{name}: side B splits");
                    assert_eq!(c_ids.len(), 1, "{name}: side C splits");
                    assert_ne!(b_ids[0], c_ids[0], "{name}: sides coincide");
                }
            }
        }
    }
}

#[test]
fn distinct_maximal_sets_are_split_by_a_cut_containing_their_overlap() {
    for (name, p) in pretrees() {
        for b in 0..p.len() {
            for c in b + 1..p.len() {
                if p.element(b).kind != ElementKind::Blob || p.element(c).kind != ElementKind::Blob
                {
                    continue;
                }
                let cuts_between: Vec<usize> = (0..p.len())
                    .filter(|&a| p.element(a).kind == ElementKind::Cut && p.between_idx(a, b, c))
                    .collect();
                assert!(!cuts_between.is_empty(), "{name}: no cut between two blobs");
                let overlap = p.element(b).support.intersection(&p.element(c).support);
                for a in cuts_between {
                    assert!(
                        overlap.is_subset(&p.element(a).support),
                        "{name}: blob overlap escapes the separating cut"
                    );
                }
            }
        }
    }
}

#[test]
fn adjacent_pairs_are_cut_inside_blob() {
    for (name, p) in pretrees() {
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if !p.adjacent_idx(i, j) {
                    continue;
                }
                let (a, b) = (p.element(i), p.element(j));
                assert_ne!(
                    a.kind, b.kind,
                    "{name}: adjacent pair {a}, {b} has equal kinds"
                );
                let (cut, blob) = if a.kind == ElementKind::Cut {
                    (a, b)
                } else {
                    (b, a)
                };
                assert!(
                    cut.support.is_subset(&blob.support),
                    "{name}: adjacent cut {cut} not inside blob {blob}"
                );
            }
        }
    }
}

#[test]
fn cut_betweenness_propagates_towards_endpoints() {
    // For cuts B in (A, C) and D in (B, C), D also lies in (A, C).
    for (name, p) in pretrees() {
        for a in 0..p.len() {
            for c in 0..p.len() {
                for b in 0..p.len() {
                    if p.element(b).kind != ElementKind::Cut || !p.between_idx(b, a, c) {
                        continue;
                    }
                    for d in 0..p.len() {
                        if p.element(d).kind == ElementKind::Cut && p.between_idx(d, b, c) {
                            assert!(
                                p.between_idx(d, a, c),
                                "{name}: {} in ({}, {}) but not in ({}, {})",
                                p.element(d),
                                p.element(b),
                                p.element(c),
                                p.element(a),
                                p.element(c)
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn canonical_separations_nest_strictly() {
    // With B in (A, C) and D in (B, C), all distinct cuts B, D: the
    // canonical A-side of B sits strictly inside the canonical B-side of D.
    for (name, p) in pretrees() {
        let space = p.space();
        for a in 0..p.len() {
            for c in 0..p.len() {
                for b in 0..p.len() {
                    if p.element(b).kind != ElementKind::Cut || !p.between_idx(b, a, c) {
                        continue;
                    }
                    for d in 0..p.len() {
                        if p.element(d).kind != ElementKind::Cut
                            || !p.between_idx(d, b, c)
                            || d == a
                            || d == c
                            || b == d
                        {
                            continue;
                        }
                        let sep_b = space
                            .separation_between(
                                &p.element(b).support,
                                &p.element(a).support,
                                &p.element(c).support,
                            )
                            .unwrap()
                            .expect("betweenness promises a separation");
                        let sep_d = space
                            .separation_between(
                                &p.element(d).support,
                                &p.element(b).support,
                                &p.element(c).support,
                            )
                            .unwrap()
                            .expect("betweenness promises a separation");
                        let u = sep_b.side_u();
                        let o = sep_d.side_u();
                        assert!(
                            u.intersection(sep_d.side_v()).is_empty(),
                            "{name}: U meets W"
                        );
                        assert!(
                            u.is_subset(o) && u != o,
                            "{name}: expected {u} strictly inside {o}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn supports_cover_the_space() {
    for (name, p) in pretrees() {
        let union = p
            .elements()
            .iter()
            .fold(VertexSet::empty(), |acc, e| acc.union(&e.support));
        assert_eq!(union, p.space().vertex_set(), "{name}");
    }
}

#[test]
fn no_element_separates_another() {
    for (name, p) in pretrees() {
        for c in p.elements() {
            for a in p.elements() {
                assert!(
                    !p.space().separates_set(&c.support, &a.support).unwrap(),
                    "{name}: {c} separates {a}"
                );
            }
        }
    }
}

#[test]
fn betweenness_matches_separation_for_unswallowed_triples() {
    // For A, B not inside C: C between A and B iff C separates A from B,
    // with the converse mediated by an element inside C.
    for (name, p) in pretrees() {
        let space = p.space();
        for ci in 0..p.len() {
            let c = p.element(ci);
            for ai in 0..p.len() {
                for bi in 0..p.len() {
                    let (a, b) = (p.element(ai), p.element(bi));
                    if a.support.is_subset(&c.support) || b.support.is_subset(&c.support) {
                        continue;
                    }
                    let separates = space
                        .separates_from(&c.support, &a.support, &b.support)
                        .unwrap();
                    if p.between_idx(ci, ai, bi) {
                        assert!(
                            separates,
                            "{name}: {c} between ({a}, {b}) but does not separate"
                        );
                    }
                    if separates {
                        let witness = (0..p.len()).any(|di| {
                            p.element(di).support.is_subset(&c.support) && p.between_idx(di, ai, bi)
                        });
                        assert!(
                            witness,
                            "{name}: {c} separates ({a}, {b}) with no element of it between"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn natural_orders_sort_four_point_configurations() {
    for (name, p) in pretrees() {
        if p.len() > 15 {
            continue;
        }
        let order_of = |x: usize, w: usize| p.interval_idx(x, w).unwrap();
        let strictly_ordered = |order: &[usize], quad: [usize; 4]| {
            let pos: Vec<Option<usize>> = quad
                .iter()
                .map(|q| order.iter().position(|m| m == q))
                .collect();
            pos.iter().all(Option::is_some) && pos.windows(2).all(|w| w[0].unwrap() < w[1].unwrap())
        };
        for x in 0..p.len() {
            for y in 0..p.len() {
                for z in 0..p.len() {
                    for w in 0..p.len() {
                        // case 1
                        if p.between_idx(y, x, z) && p.between_idx(z, y, w) {
                            assert!(
                                strictly_ordered(&order_of(x, w), [x, y, z, w]),
                                "{name}: case 1 fails at ({x}, {y}, {z}, {w})"
                            );
                        }
                        // case 2
                        if p.between_idx(y, x, w) && p.between_idx(z, y, w) {
                            assert!(
                                strictly_ordered(&order_of(x, w), [x, y, z, w]),
                                "{name}: case 2 fails at ({x}, {y}, {z}, {w})"
                            );
                        }
                        // case 3
                        if y != z && p.between_idx(y, x, w) && p.between_idx(z, x, w) {
                            let order = order_of(x, w);
                            let ok = strictly_ordered(&order, [x, y, z, w])
                                || strictly_ordered(&order, [x, z, y, w]);
                            assert!(ok, "{name}: case 3 fails at ({x}, {y}, {z}, {w})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn median_is_symmetric_in_its_arguments() {
    for (name, p) in pretrees() {
        for a in 0..p.len() {
            for b in 0..p.len() {
                for c in 0..p.len() {
                    let m = p.median_idx(a, b, c).unwrap();
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        assert_eq!(m, p.median_idx(x, y, z).unwrap(), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn quotient_classes_and_missing_blobs() {
    for (name, cs) in valid_systems() {
        let maximal = maximal_inseparable_sets(&cs).unwrap();
        let classes = quotient_blobs(&cs).unwrap();
        // classes partition the vertices outside all cuts
        let free = cs
            .cuts()
            .iter()
            .fold(cs.space().vertex_set(), |acc, cut| acc.difference(cut));
        let mut covered = VertexSet::empty();
        for class in &classes {
            assert!(
                covered.intersection(class).is_empty(),
                "{name}: classes overlap"
            );
            covered = covered.union(class);
            let hosts = maximal.iter().filter(|m| class.is_subset(m)).count();
            assert_eq!(hosts, 1, "{name}: class {class} in {hosts} maximal sets");
        }
        assert_eq!(
            covered, free,
            "{name}: classes must partition the free vertices"
        );
        // maximal sets missed by every class are exactly unions of cuts
        for m in &maximal {
            let hit = classes.iter().any(|class| class.is_subset(m));
            if !hit {
                let union_of_inner_cuts = cs
                    .cuts()
                    .iter()
                    .filter(|cut| cut.is_subset(m))
                    .fold(VertexSet::empty(), |acc, cut| acc.union(cut));
                assert_eq!(
                    &union_of_inner_cuts, m,
                    "{name}: missing set {m} is not a union of cuts"
                );
            }
        }
    }
}

#[test]
fn union_of_cuts_blob_appears_on_path4() {
    let cs = CutSystem::new(path(&["a", "b", "c", "d"]), vec![vs(&["b"]), vs(&["c"])]).unwrap();
    let maximal = maximal_inseparable_sets(&cs).unwrap();
    assert!(maximal.contains(&vs(&["b", "c"])));
    let classes = quotient_blobs(&cs).unwrap();
    assert_eq!(classes, vec![vs(&["a"]), vs(&["d"])]);
    // the blob {b, c} is missed by the quotient and is a union of cuts
    assert!(classes
        .iter()
        .all(|class| !class.is_subset(&vs(&["b", "c"]))));
}

#[test]
fn realizations_are_trees_with_interval_paths() {
    for (name, p) in pretrees() {
        let t = realize(&p).unwrap();
        assert_eq!(t.edges().len(), t.node_count() - 1, "{name}");
        // realize() already verified path = interval for every pair; spot
        // the tree structure against the pretree adjacency once more.
        for &(i, j) in t.edges() {
            assert!(p.adjacent_idx(i, j), "{name}: tree edge not an adjacency");
        }
    }
}
