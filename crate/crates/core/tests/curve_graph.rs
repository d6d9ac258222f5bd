mod common;

use common::{laplace_det, mat_vec, pivot_negative_definite, sylvester_negative_definite};
use num_bigint::BigInt;
use phicycle_core::{ConfigClass, Curve, CurveConfiguration, DefinitenessVerdict, Intersection, IntersectionMatrix};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn to_matrix(rows: &[Vec<i64>]) -> IntersectionMatrix {
    IntersectionMatrix::from_i64_rows(rows).unwrap()
}

fn random_symmetric(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(lo..=hi);
            m[i][j] = x;
            m[j][i] = x;
        }
    }
    m
}

/// `−M` is positive semidefinite iff every principal minor of `−M` is
/// nonnegative (all 2^n subsets, Laplace expansion).
fn all_principal_minors_nonnegative(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<i128>> = idx.iter().map(|&i| idx.iter().map(|&j| -(m[i][j] as i128)).collect()).collect();
        laplace_det(&sub) >= 0
    })
}

fn symmetric_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(-4i64..=4, n * (n + 1) / 2).prop_map(move |upper| {
            let mut m = vec![vec![0i64; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    m[i][j] = upper[k];
                    m[j][i] = upper[k];
                    k += 1;
                }
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn definiteness_is_invariant_under_relabeling(
        m in symmetric_matrix(),
        seed in any::<u64>(),
    ) {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut rng = StdRng::seed_from_u64(seed);
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let a = to_matrix(&m);
        prop_assert_eq!(a.definiteness(), a.permuted(&perm).definiteness());
    }

    #[test]
    fn verdicts_match_minor_oracles(m in symmetric_matrix()) {
        let verdict = to_matrix(&m).definiteness();
        let nd = sylvester_negative_definite(&m);
        let nsd = all_principal_minors_nonnegative(&m);
        let expected = if nd {
            DefinitenessVerdict::NegativeDefinite
        } else if nsd {
            DefinitenessVerdict::NegativeSemidefiniteSingular
        } else {
            DefinitenessVerdict::Other
        };
        prop_assert_eq!(verdict, expected);
    }
}

#[test]
fn charpoly_agrees_with_sylvester_on_random_matrices() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=6);
        // bias the diagonal negative so a good share are definite
        let mut m = random_symmetric(&mut rng, n, -2, 2);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = rng.gen_range(-8..=0);
        }
        let strict = to_matrix(&m).definiteness() == DefinitenessVerdict::NegativeDefinite;
        assert_eq!(strict, sylvester_negative_definite(&m), "{m:?}");
        assert_eq!(strict, pivot_negative_definite(&m), "{m:?}");
    }
}

/// Labeled trees on `n` vertices from Prüfer sequences.
fn trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![vec![]];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let total = n.pow(n as u32 - 2);
    for mut code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        for _ in 0..n - 2 {
            seq.push(code % n);
            code /= n;
        }
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&i| degree[i] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

fn config(e: &[i64], edges: &[(usize, usize)]) -> CurveConfiguration {
    let vertices = e
        .iter()
        .enumerate()
        .map(|(i, &x)| Curve { id: format!("v{i}"), genus: 0, e: x.into() })
        .collect();
    let edges = edges
        .iter()
        .map(|&(a, b)| Intersection { a: format!("v{a}"), b: format!("v{b}"), mult: 1 })
        .collect();
    CurveConfiguration::new(vertices, edges).unwrap()
}

fn tuples(n: usize, values: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| values.iter().map(move |&v| [t.clone(), vec![v]].concat()))
            .collect();
    }
    out
}

/// Weighted trees with every self-intersection in {−4, −3, −2} on up to
/// five vertices. The verdict must agree with the rational pivot oracle
/// everywhere. The only trees that fail to be negative definite are the
/// labelings of the all-(−2) star with four leaves (the affine D₄ graph),
/// which are semidefinite and singular.
#[test]
fn trees_with_self_intersection_at_most_minus_two() {
    let mut checked = 0;
    let mut exceptions = Vec::new();
    for n in 1..=5 {
        let shapes = trees(n);
        assert_eq!(shapes.len(), n.pow(n.saturating_sub(2) as u32));
        for edges in &shapes {
            for e in tuples(n, &[-4, -3, -2]) {
                let m = config(&e, edges).intersection_matrix();
                let rows: Vec<Vec<i64>> =
                    m.rows().iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
                let verdict = m.definiteness();
                let oracle = pivot_negative_definite(&rows);
                assert_eq!(verdict == DefinitenessVerdict::NegativeDefinite, oracle, "{e:?} {edges:?}");
                if !oracle {
                    assert_eq!(verdict, DefinitenessVerdict::NegativeSemidefiniteSingular, "{e:?} {edges:?}");
                    exceptions.push((e.clone(), edges.clone()));
                }
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 3 + 9 + 3 * 27 + 16 * 81 + 125 * 243);
    assert_eq!(exceptions.len(), 5, "{exceptions:?}");
    for (e, edges) in &exceptions {
        assert!(e.iter().all(|&x| x == -2));
        let mut deg = [0; 5];
        for &(a, b) in edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        assert!(deg.contains(&4), "{edges:?} is not a star");
    }
}

#[test]
fn minus_two_cycles_are_semidefinite_with_constant_kernel() {
    for r in 2..=7 {
        let cfg = CurveConfiguration::rational_cycle(&vec![BigInt::from(-2); r]).unwrap();
        let m = cfg.intersection_matrix();
        assert_eq!(m.definiteness(), DefinitenessVerdict::NegativeSemidefiniteSingular, "r = {r}");
        assert_eq!(m.det(), BigInt::from(0));
        let rows: Vec<Vec<i64>> =
            m.rows().iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
        assert_eq!(mat_vec(&rows, &vec![1; r]), vec![0; r], "r = {r}");
    }
}

#[test]
fn cycle_examples_from_hand_minors() {
    let m = CurveConfiguration::rational_cycle(&[(-3).into(), (-2).into(), (-2).into()])
        .unwrap()
        .intersection_matrix();
    let rows: Vec<Vec<i64>> =
        m.rows().iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
    assert_eq!(common::leading_minors(&rows), vec![-3, 5, -3]);
    assert_eq!(m.definiteness(), DefinitenessVerdict::NegativeDefinite);

    let m = CurveConfiguration::rational_cycle(&[(-1).into(), (-1).into(), (-1).into()])
        .unwrap()
        .intersection_matrix();
    let rows: Vec<Vec<i64>> =
        m.rows().iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect();
    assert_eq!(common::leading_minors(&rows), vec![-1, 0, 4]);
    assert_eq!(m.definiteness(), DefinitenessVerdict::Other);
}

fn small_configuration() -> impl Strategy<Value = CurveConfiguration> {
    (1usize..=6).prop_flat_map(|n| {
        let vertices = proptest::collection::vec((0u32..=2, -3i64..=1), n);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect();
        let mults = proptest::collection::vec(prop_oneof![4 => Just(0u32), 2 => Just(1u32), 1 => Just(2u32)], pairs.len());
        (vertices, mults).prop_map(move |(vs, ms)| {
            let vertices = vs
                .into_iter()
                .enumerate()
                .map(|(i, (g, e))| Curve { id: format!("v{i}"), genus: g, e: e.into() })
                .collect();
            let edges = pairs
                .iter()
                .zip(ms)
                .filter(|(_, m)| *m > 0)
                .map(|(&(a, b), mult)| Intersection { a: format!("v{a}"), b: format!("v{b}"), mult })
                .collect();
            CurveConfiguration::new(vertices, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rational_cycle_class_implies_degree_two(cfg in small_configuration()) {
        for part in cfg.connected_components() {
            prop_assert!(part.is_connected());
            if part.classify().unwrap() == ConfigClass::RationalCycle {
                prop_assert!(part.adjunction_residues().iter().all(|&d| d == 0));
                prop_assert!(part.degrees().iter().all(|&d| d == 2));
                prop_assert!(part.vertices().iter().all(|v| v.genus == 0));
                prop_assert_eq!(part.edges().len(), if part.len() == 2 { 1 } else { part.len() });
            }
        }
    }

    #[test]
    fn components_partition_the_configuration(cfg in small_configuration()) {
        let parts = cfg.connected_components();
        prop_assert_eq!(parts.iter().map(CurveConfiguration::len).sum::<usize>(), cfg.len());
        prop_assert_eq!(parts.iter().map(|p| p.edges().len()).sum::<usize>(), cfg.edges().len());
        match parts.len() {
            1 => prop_assert!(cfg.classify().is_ok()),
            k => prop_assert_eq!(cfg.classify(), Err(phicycle_core::Error::Disconnected(k))),
        }
    }
}
