mod common;

use common::{brute_force_has_bowtie, random_graphic_sequence};
use potentially_bowtie::characterize::check_potentially;
use potentially_bowtie::graphkit::{
    degree_sequence, enumerate_realizations, havel_hakimi_realize, SimpleGraph,
};
use potentially_bowtie::realizer::{
    construct_family, realize_detailed, realize_with_bowtie, reattach, FamilyPattern,
    RealizationBase,
};
use potentially_bowtie::seqcore::{lay_off, parse_sequence, DegreeSequence};
use potentially_bowtie::verify::enumerate_graphic_sequences;
use potentially_bowtie::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bowtie search written independently of the library scanner: a center
/// of degree >= 4 and two vertex-disjoint edges inside its neighbourhood.
fn has_bowtie_by_neighbourhood_edges(g: &SimpleGraph) -> bool {
    (0..g.vertex_count()).any(|c| {
        let nb: Vec<usize> = g.neighbors(c).collect();
        let mut inner = Vec::new();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    inner.push((a, b));
                }
            }
        }
        inner.iter().any(|&(a, b)| {
            inner
                .iter()
                .any(|&(x, y)| x != a && x != b && y != a && y != b)
        })
    })
}

fn sorted_degrees(g: &SimpleGraph) -> Vec<u32> {
    let mut d: Vec<u32> = (0..g.vertex_count()).map(|v| g.degree(v) as u32).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn assert_realizes_with_bowtie(g: &SimpleGraph, s: &DegreeSequence) {
    assert_eq!(
        sorted_degrees(g),
        s.terms(),
        "degrees of realization of {s}"
    );
    assert!(
        has_bowtie_by_neighbourhood_edges(g),
        "no bowtie in realization of {s}"
    );
}

#[test]
fn realizes_every_accepted_sequence_up_to_eight() {
    for n in 5..=8 {
        let mut realized = 0;
        for s in enumerate_graphic_sequences(n) {
            if !check_potentially(&s).potentially {
                assert!(matches!(
                    realize_with_bowtie(&s),
                    Err(Error::NotPotentially(_))
                ));
                continue;
            }
            let g = realize_with_bowtie(&s).unwrap();
            assert_realizes_with_bowtie(&g, &s);
            assert!(brute_force_has_bowtie(&g));
            realized += 1;
        }
        assert!(realized > 0);
    }
}

/// Every family instance with at most `max_n` vertices whose sequence is
/// accepted.
fn family_instances(max_n: usize) -> Vec<FamilyPattern> {
    use FamilyPattern::*;
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend([
            ThreeFoursThrees { n },
            TwoFoursThrees { n },
            OneFourThrees { n },
        ]);
        out.extend([NearStarTail { n }, TwoFoursTwos { n }, OneFourTwos { n }]);
    }
    for a in 0..max_n {
        for b in 0..max_n {
            if 2 + a + b <= max_n {
                out.push(TwoFoursThreesTwos { a, b });
            }
            if 1 + a + b <= max_n {
                out.extend([
                    OneFourThreesTwos { a, b },
                    OneFourThreesOnes { a, c: b },
                    OneFourTwosOnes { a, c: b },
                ]);
            }
            for c in 0..max_n {
                if 1 + a + b + c <= max_n {
                    out.push(OneFourThreesTwosOnes { a, b, c });
                }
            }
        }
    }
    out.retain(|p| p.sequence().is_ok());
    out
}

#[test]
fn family_sweep_up_to_thirty() {
    let instances = family_instances(30);
    let mut kinds = std::collections::HashSet::new();
    for p in &instances {
        let s = p.sequence().unwrap();
        assert!(s.len() <= 30);
        let g = construct_family(p).unwrap_or_else(|e| panic!("{p}: {e}"));
        assert_realizes_with_bowtie(&g, &s);
        assert!(FamilyPattern::classify(&s).is_some(), "{s} not classified");
        kinds.insert(std::mem::discriminant(p));
    }
    assert_eq!(kinds.len(), 11);
    assert!(instances.len() > 500);
}

#[test]
fn family_parameters_out_of_range_are_rejected() {
    use FamilyPattern::*;
    for p in [
        ThreeFoursThrees { n: 6 },
        TwoFoursThrees { n: 7 },
        OneFourThreesOnes { a: 3, c: 1 },
        OneFourTwosOnes { a: 4, c: 1 },
        OneFourTwos { n: 6 },
        OneFourTwos { n: 7 },
        TwoFoursTwos { n: 6 },
    ] {
        assert!(
            matches!(construct_family(&p), Err(Error::BadParams(_))),
            "{p}"
        );
    }
}

#[test]
fn random_large_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut realized = 0;
    let mut by_family = 0;
    let mut attempts = 0;
    while realized < 300 && attempts < 100_000 {
        attempts += 1;
        let n = rng.gen_range(11..=40);
        let s = if attempts % 2 == 0 {
            let p = rng.gen_range(0.05..0.5);
            random_graphic_sequence(&mut rng, n, p)
        } else {
            // low-degree sequences reach the family constructions
            let terms: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=4)).collect();
            DegreeSequence::new(terms).ok()
        };
        let Some(s) = s else { continue };
        if s.len() <= 10 || !check_potentially(&s).potentially {
            continue;
        }
        let r = realize_detailed(&s).unwrap_or_else(|e| panic!("{s}: {e}"));
        assert_realizes_with_bowtie(&r.graph, &s);
        assert!(r.witness.is_valid_in(&r.graph));
        assert!(r.layoffs <= s.len() - 5);
        if matches!(r.base, RealizationBase::Family(_)) {
            by_family += 1;
        }
        realized += 1;
    }
    assert_eq!(realized, 300);
    assert!(by_family > 0);
}

#[test]
fn lay_off_depth_is_bounded() {
    for text in ["5^12", "6^14", "4^3,3^10", "7,6,5^4,4^6,3^4,2^2", "3^20,4"] {
        let s = parse_sequence(text).unwrap();
        if !check_potentially(&s).potentially {
            continue;
        }
        let r = realize_detailed(&s).unwrap();
        assert!(r.layoffs <= s.len() - 5, "{text}");
        assert_eq!(degree_sequence(&r.graph).unwrap(), s);
    }
}

#[test]
fn reattach_restores_the_parent_sequence() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.gen_range(7..=16);
        let p = rng.gen_range(0.2..0.7);
        let Some(parent) = random_graphic_sequence(&mut rng, n, p) else {
            continue;
        };
        if parent.len() < 6 {
            continue;
        }
        let t = lay_off(&parent).unwrap();
        if !check_potentially(&t.child).potentially {
            continue;
        }
        let g = realize_with_bowtie(&t.child).unwrap();
        let h = reattach(&g, &t).unwrap();
        assert_eq!(degree_sequence(&h).unwrap(), parent);
        assert!(g.edges().all(|(u, v)| h.has_edge(u, v)));
        assert!(has_bowtie_by_neighbourhood_edges(&h));
        checked += 1;
    }
}

#[test]
fn reattach_rejects_mismatched_graph() {
    let t = lay_off(&parse_sequence("4,3^4").unwrap()).unwrap();
    let wrong = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(matches!(reattach(&wrong, &t), Err(Error::TraceMismatch(_))));
}

#[test]
fn reattach_after_laying_off_a_degree_two_vertex() {
    let parent = parse_sequence("5,3,2^5").unwrap();
    let t = lay_off(&parent).unwrap();
    assert_eq!(t.child, parse_sequence("4,2^5").unwrap());
    let g = havel_hakimi_realize(&t.child).unwrap();
    let h = reattach(&g, &t).unwrap();
    assert_eq!(degree_sequence(&h).unwrap(), parent);
    assert_eq!(h.vertex_count(), 7);
}

#[test]
fn reattach_a_pendant() {
    let parent = parse_sequence("4,3,2,2,1").unwrap();
    let t = lay_off(&parent).unwrap();
    let g = havel_hakimi_realize(&t.child).unwrap();
    let h = reattach(&g, &t).unwrap();
    assert_eq!(degree_sequence(&h).unwrap(), parent);
    let leaf = h.vertex_count() - 1;
    assert_eq!(h.neighbors(leaf).collect::<Vec<_>>(), vec![0]);
}

#[test]
fn bowtie_sequence_realizations_are_all_bowties() {
    let s = parse_sequence("4,2^4").unwrap();
    let all: Vec<SimpleGraph> = enumerate_realizations(&s, 0).unwrap().collect();
    assert_eq!(all.len(), 3);
    assert!(all.iter().all(has_bowtie_by_neighbourhood_edges));
    let g = realize_with_bowtie(&s).unwrap();
    assert_eq!(g.edge_count(), 6);
}

#[test]
fn small_family_instances() {
    use FamilyPattern::*;
    let g = construct_family(&OneFourThrees { n: 7 }).unwrap();
    assert_eq!(sorted_degrees(&g), vec![4, 3, 3, 3, 3, 3, 3]);
    let g = construct_family(&NearStarTail { n: 6 }).unwrap();
    assert_eq!(sorted_degrees(&g), vec![4, 3, 2, 2, 2, 1]);
    assert!(has_bowtie_by_neighbourhood_edges(&g));

    // bowtie plus a disjoint triangle
    let g = construct_family(&OneFourTwos { n: 8 }).unwrap();
    assert_eq!(g.edge_count(), 9);
    let triangle: Vec<usize> = (0..8)
        .filter(|&v| g.degree(v) == 2 && !g.has_edge(0, v))
        .collect();
    assert_eq!(triangle.len(), 3);
    assert!(g.has_edge(triangle[0], triangle[1]) && g.has_edge(triangle[1], triangle[2]));

    let s = parse_sequence("5,3,2^5").unwrap();
    assert_realizes_with_bowtie(&realize_with_bowtie(&s).unwrap(), &s);
    let s = parse_sequence("4^3,3^6").unwrap();
    assert_realizes_with_bowtie(&realize_with_bowtie(&s).unwrap(), &s);
    assert_eq!(FamilyPattern::classify(&s), Some(ThreeFoursThrees { n: 9 }));
}
