#![allow(clippy::needless_range_loop)]

use hyperterrain_core::approx::{
    approx_tree_fast, bfs_tree, pair_left_from_start, tree_eccentricities, tree_middle_from_start, SpanningTree,
};
use hyperterrain_core::convexity::{pseudoconvexity_beta_in, quasiconvexity_eps_in};
use hyperterrain_core::exact::{
    all_pairs_distances, eccentricity_profile, hyperbolicity_exact, locality_map, OracleCaps,
};
use hyperterrain_core::extremal::{beam, middle_vertex, mutually_distant_pair};
use hyperterrain_core::generators::{complete, cycle, gen_fig3, gnm_connected, grid, path, random_tree, Fig3Params};
use hyperterrain_core::graph::{canonical_shortest_path, gromov_product_doubled, interval, slice};
use hyperterrain_core::terrain::{edge_count_identities, segment_path};
use hyperterrain_core::verify::{reverify_witness, run_suite, SuiteConfig};
use hyperterrain_core::{DistanceMatrix, Graph, Vertex};
use proptest::prelude::*;

const INF: u32 = u32::MAX / 4;

/// Floyd–Warshall over the edge set; shares no code with BFS.
fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

fn ecc_of(d: &[Vec<u32>]) -> Vec<u32> {
    d.iter().map(|r| *r.iter().max().unwrap()).collect()
}

/// Doubled δ over all ordered quadruples, straight from the definition.
fn brute_delta2(d: &[Vec<u32>]) -> u32 {
    let n = d.len();
    let mut best = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for e in 0..n {
                    let mut s = [d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]];
                    s.sort_unstable();
                    best = best.max(s[2] - s[1]);
                }
            }
        }
    }
    best
}

fn brute_beta(d: &[Vec<u32>], set: &[Vertex]) -> u32 {
    let n = d.len();
    let mut best = 0;
    for &x in set {
        for &y in set {
            for z in (0..n).filter(|z| !set.contains(z)) {
                if d[x][z] + d[z][y] == d[x][y] {
                    best = best.max(d[x][z].min(d[z][y]));
                }
            }
        }
    }
    best
}

fn tree_ecc_brute(t: &SpanningTree) -> Vec<u32> {
    let n = t.parent.len();
    let mut adj = vec![Vec::new(); n];
    for (v, &p) in t.parent.iter().enumerate() {
        if v != p {
            adj[v].push(p);
            adj[p].push(v);
        }
    }
    (0..n)
        .map(|s| {
            let mut dist = vec![u32::MAX; n];
            dist[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        stack.push(w);
                    }
                }
            }
            *dist.iter().max().unwrap()
        })
        .collect()
}

fn graphs() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (2usize..20).prop_map(|n| path(n).unwrap()),
        (3usize..20).prop_map(|n| cycle(n).unwrap()),
        (2usize..6).prop_map(|n| complete(n).unwrap()),
        (1usize..5, 2usize..6).prop_map(|(a, b)| grid(a, b).unwrap()),
        (2usize..22, any::<u64>()).prop_map(|(n, s)| random_tree(n, s).unwrap()),
        (2usize..22, 0usize..30, any::<u64>()).prop_map(|(n, extra, s)| {
            let max_m = n * (n - 1) / 2;
            gnm_connected(n, (n - 1 + extra).min(max_m), s).unwrap()
        }),
    ]
}

fn with_vertices(k: usize) -> impl Strategy<Value = (Graph, Vec<Vertex>)> {
    graphs().prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0..n, k))
    })
}

fn matrix(g: &Graph) -> DistanceMatrix {
    all_pairs_distances(g, &OracleCaps::default()).unwrap()
}

fn delta2(m: &DistanceMatrix) -> u32 {
    hyperbolicity_exact(m, &OracleCaps::default()).unwrap().delta2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bfs_agrees_with_floyd_and_is_lipschitz((g, v) in with_vertices(1)) {
        let fw = floyd(&g);
        let d = g.bfs(v[0]);
        for u in 0..g.n() {
            prop_assert_eq!(d.get(u), fw[v[0]][u]);
        }
        for (a, b) in g.edges() {
            prop_assert!(d.get(a).abs_diff(d.get(b)) <= 1);
        }
    }

    #[test]
    fn intervals_and_slices((g, v) in with_vertices(2)) {
        let fw = floyd(&g);
        let (x, y) = (v[0], v[1]);
        let dxy = fw[x][y];
        let iv = interval(&g, x, y);
        prop_assert!(iv.contains(&x) && iv.contains(&y));
        let expected: Vec<Vertex> = (0..g.n()).filter(|&z| fw[x][z] + fw[z][y] == dxy).collect();
        prop_assert_eq!(&iv, &expected);
        let mut union: Vec<Vertex> = Vec::new();
        for k in 0..=dxy {
            let s = slice(&g, x, y, k).unwrap();
            prop_assert!(s.iter().all(|&z| fw[x][z] == k));
            union.extend(s);
        }
        union.sort_unstable();
        let before = union.len();
        union.dedup();
        prop_assert_eq!(before, union.len());
        prop_assert_eq!(union, iv);
    }

    #[test]
    fn gromov_products((g, v) in with_vertices(3)) {
        let fw = floyd(&g);
        let (x, y, z) = (v[0], v[1], v[2]);
        let p = gromov_product_doubled(&g, x, y, z);
        prop_assert_eq!(p, gromov_product_doubled(&g, y, x, z));
        prop_assert_eq!(p as i64, fw[z][x] as i64 + fw[z][y] as i64 - fw[x][y] as i64);
    }

    #[test]
    fn canonical_paths_reproduce((g, v) in with_vertices(2)) {
        let p = canonical_shortest_path(&g, v[0], v[1]);
        prop_assert!(p.check_shortest(&g).is_ok());
        prop_assert_eq!(p.first(), v[0]);
        prop_assert_eq!(p.last(), v[1]);
        let again = canonical_shortest_path(&g.clone(), v[0], v[1]);
        prop_assert_eq!(p, again);
    }

    #[test]
    fn generators_are_pure(n in 2usize..40, extra in 0usize..40, seed in any::<u64>()) {
        prop_assert_eq!(random_tree(n, seed).unwrap(), random_tree(n, seed).unwrap());
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        let g = gnm_connected(n, m, seed).unwrap();
        prop_assert_eq!(g.m(), m);
        prop_assert_eq!(&g, &gnm_connected(n, m, seed).unwrap());
        prop_assert_eq!(random_tree(n, seed).unwrap().m(), n - 1);
    }

    #[test]
    fn exact_metrics(g in graphs()) {
        let fw = floyd(&g);
        let m = matrix(&g);
        let prof = eccentricity_profile(&g, &OracleCaps::default()).unwrap();
        prop_assert_eq!(&prof.ecc, &ecc_of(&fw));
        for (a, b) in g.edges() {
            prop_assert!(prof.ecc[a].abs_diff(prof.ecc[b]) <= 1);
        }
        let cert = hyperbolicity_exact(&m, &OracleCaps::default()).unwrap();
        let d2 = cert.delta2;
        prop_assert_eq!(d2, brute_delta2(&fw));
        let [a, b, c, e] = cert.witness;
        if g.n() >= 4 {
            let mut s = [fw[a][b] + fw[c][e], fw[a][c] + fw[b][e], fw[a][e] + fw[b][c]];
            s.sort_unstable();
            prop_assert_eq!(s[2] - s[1], d2);
        }
        prop_assert!(d2 <= prof.diam);
        prop_assert!(2 * prof.diam + 2 * d2 + 2 >= 4 * prof.rad);
        for k in 0..=prof.max_layer() {
            prop_assert!(m.set_diameter(&prof.c_le(k)) <= 2 * k + 2 * d2 + 1);
        }
        let loc = locality_map(&g, &prof);
        for v in 0..g.n() {
            prop_assert_eq!(loc.loc[v] == 0, prof.center.contains(&v));
            let smaller = (0..g.n()).filter(|&u| prof.ecc[u] < prof.ecc[v]).map(|u| fw[v][u]).min();
            prop_assert_eq!(loc.loc[v], smaller.unwrap_or(0));
        }
    }

    #[test]
    fn sweeps((g, v) in with_vertices(1)) {
        let fw = floyd(&g);
        let ecc = ecc_of(&fw);
        let rad = *ecc.iter().min().unwrap();
        let d2 = delta2(&matrix(&g));
        let s = mutually_distant_pair(&g, v[0]).unwrap();
        let t = &s.trace;
        prop_assert!(t.dists.windows(2).all(|w| w[0] <= w[1]));
        // the first sweep lands within 2δ of the diameter, so counting starts there
        let increases = t.dists.iter().skip(1).collect::<Vec<_>>().windows(2).filter(|w| w[0] < w[1]).count() as u32;
        prop_assert!(increases <= d2);
        let (x, y) = t.terminal_pair;
        prop_assert!(t.mutual);
        prop_assert_eq!(fw[x][y], ecc[x]);
        prop_assert_eq!(fw[x][y], ecc[y]);
        let c = middle_vertex(&canonical_shortest_path(&g, x, y));
        prop_assert!(ecc[c] <= rad + d2);
        prop_assert!(2 * ecc[c] <= 2 * fw[x][y].div_ceil(2) + 2 * d2);
        let (bx, by) = beam(&g, v[0]);
        let cb = middle_vertex(&canonical_shortest_path(&g, bx, by));
        prop_assert!(2 * ecc[cb] <= 2 * rad + 3 * d2);
        prop_assert!(ecc[cb] <= fw[bx][by].div_ceil(2) + 2 * d2);
    }

    #[test]
    fn approximations((g, v) in with_vertices(1)) {
        let fw = floyd(&g);
        let ecc = ecc_of(&fw);
        let d2 = delta2(&matrix(&g));
        let pl = pair_left_from_start(&g, v[0]).unwrap();
        for u in 0..g.n() {
            prop_assert!(pl.est[u] <= ecc[u] && ecc[u] <= pl.est[u] + d2);
        }
        let (t, tm) = tree_middle_from_start(&g, v[0]).unwrap();
        prop_assert_eq!(&tm.est, &tree_ecc_brute(&t));
        for u in 0..g.n() {
            prop_assert!(ecc[u] <= tm.est[u] && tm.est[u] <= ecc[u] + 2 * d2 + 1);
        }
        for k in 0..=d2.min(3) {
            let (t, tf) = approx_tree_fast(&g, v[0], k).unwrap();
            prop_assert_eq!(&tf.est, &tree_ecc_brute(&t));
            let bound = tf.bound(d2).unwrap();
            for u in 0..g.n() {
                prop_assert!(ecc[u] <= tf.est[u] && tf.est[u] <= ecc[u] + bound);
            }
        }
    }

    #[test]
    fn bfs_trees((g, v) in with_vertices(1)) {
        let t = bfs_tree(&g, v[0]);
        let d = g.bfs(v[0]);
        let brute = tree_ecc_brute(&t);
        prop_assert_eq!(tree_eccentricities(&g, &t).unwrap(), brute);
        // root distances survive in the tree
        for u in 0..g.n() {
            let mut depth = 0;
            let mut w = u;
            while w != t.root {
                w = t.parent[w];
                depth += 1;
            }
            prop_assert_eq!(depth, d.get(u));
        }
    }

    #[test]
    fn terrain_identities((g, v) in with_vertices(2)) {
        let prof = eccentricity_profile(&g, &OracleCaps::default()).unwrap();
        let p = canonical_shortest_path(&g, v[0], v[1]);
        let seg = segment_path(&g, &prof, &p).unwrap();
        prop_assert!(edge_count_identities(&seg, &prof).holds());
        let c = seg.counts;
        prop_assert_eq!(c.total(), p.len());
        let total: usize = seg.segments.iter().map(|s| s.len).sum();
        prop_assert_eq!(total, p.len());
    }

    #[test]
    fn pseudoconvexity((g, v) in with_vertices(4), r1 in 0u32..4, r2 in 0u32..4) {
        let fw = floyd(&g);
        let m = matrix(&g);
        let disk = |c: Vertex, r: u32| -> Vec<Vertex> { (0..g.n()).filter(|&u| fw[c][u] <= r).collect() };
        let s1 = disk(v[0], r1);
        let s2 = disk(v[1], r2);
        let b1 = pseudoconvexity_beta_in(&m, &s1).unwrap().beta_min;
        let b2 = pseudoconvexity_beta_in(&m, &s2).unwrap().beta_min;
        prop_assert_eq!(b1, brute_beta(&fw, &s1));
        prop_assert!(quasiconvexity_eps_in(&m, &s1).unwrap() <= b1);
        let both: Vec<Vertex> = s1.iter().copied().filter(|u| s2.contains(u)).collect();
        if !both.is_empty() {
            let rep = pseudoconvexity_beta_in(&m, &both).unwrap();
            prop_assert!(rep.beta_min <= b1.max(b2));
            prop_assert!(quasiconvexity_eps_in(&m, &both).unwrap() <= rep.beta_min);
        }
        let d2 = delta2(&m);
        prop_assert!(b1 <= d2.saturating_sub(1));
        let arb: Vec<Vertex> = v[2..].to_vec();
        let rep = pseudoconvexity_beta_in(&m, &arb).unwrap();
        prop_assert_eq!(rep.beta_min, brute_beta(&fw, &rep.set));
        if let Some((x, y, z)) = rep.witness {
            prop_assert_eq!(fw[x][z] + fw[z][y], fw[x][y]);
            prop_assert_eq!(fw[x][z].min(fw[z][y]), rep.beta_min);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn suite_passes_and_is_deterministic(g in graphs(), seed in 0u64..1000) {
        let cfg = SuiteConfig { seed, samples: 2000, random_paths: 50, ..SuiteConfig::default() };
        let a = run_suite(&g, "prop", &cfg).unwrap();
        let failed: Vec<_> = a.failures().map(|c| c.id).collect();
        prop_assert!(a.passed(), "failures: {:?}", failed);
        let b = run_suite(&g, "prop", &cfg).unwrap();
        prop_assert_eq!(format!("{:?}", a.checks), format!("{:?}", b.checks));
    }

    #[test]
    fn witnesses_reproduce_under_an_underestimated_delta(g in graphs(), seed in 0u64..1000) {
        let m = matrix(&g);
        let d2 = delta2(&m);
        prop_assume!(d2 > 0);
        let cfg = SuiteConfig { seed, samples: 2000, random_paths: 50, delta2_override: Some(0), ..SuiteConfig::default() };
        let rep = run_suite(&g, "prop", &cfg).unwrap();
        for c in rep.checks.iter() {
            if let Some(w) = &c.witness {
                prop_assert!(reverify_witness(&g, 0, c.id, w).unwrap(), "{} witness", c.id);
                prop_assert!(!reverify_witness(&g, d2, c.id, w).unwrap(), "{} sound at true delta", c.id);
            }
        }
    }
}

#[test]
fn fig3_formulas() {
    for k in 1..=4 {
        for p in 1..=3 {
            let f = gen_fig3(Fig3Params { k, p }).unwrap();
            let g = &f.graph;
            let ell = (k + p) as u32;
            let fw = floyd(g);
            let ecc = ecc_of(&fw);
            let rad = *ecc.iter().min().unwrap();
            let diam = *ecc.iter().max().unwrap();
            assert_eq!(rad, ell + 2, "rad k={k} p={p}");
            assert_eq!(diam, 2 * ell + 2, "diam k={k} p={p}");
            let center: Vec<&str> = (0..g.n()).filter(|&v| ecc[v] == rad).map(|v| f.name(v)).collect();
            let mut expected = vec![format!("u{}", k + 2), format!("w{}", k + 1), format!("v{}", k + 2)];
            expected.sort();
            let mut got: Vec<String> = center.iter().map(|s| s.to_string()).collect();
            got.sort();
            assert_eq!(got, expected, "center k={k} p={p}");
            assert_eq!(ecc[f.v("x")], ell + k as u32 + 2);
            assert_eq!(ecc[f.v("u1")], ell + k as u32 + 3);
        }
    }
}

/// All simple paths between two vertices, by DFS.
fn simple_paths(g: &Graph, x: Vertex, y: Vertex) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, y: Vertex, cur: &mut Vec<Vertex>, seen: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        let u = *cur.last().unwrap();
        if u == y {
            out.push(cur.clone());
            return;
        }
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                cur.push(w);
                go(g, y, cur, seen, out);
                cur.pop();
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[x] = true;
    let mut out = Vec::new();
    go(g, y, &mut vec![x], &mut seen, &mut out);
    out
}

#[test]
fn intervals_match_enumerated_shortest_paths() {
    let small = [
        grid(3, 3).unwrap(),
        cycle(7).unwrap(),
        complete(5).unwrap(),
        gnm_connected(9, 14, 3).unwrap(),
        gnm_connected(8, 12, 11).unwrap(),
    ];
    for g in &small {
        for x in 0..g.n() {
            for y in 0..g.n() {
                let paths = simple_paths(g, x, y);
                let best = paths.iter().map(|p| p.len()).min().unwrap();
                let mut on: Vec<Vertex> = paths.iter().filter(|p| p.len() == best).flatten().copied().collect();
                on.sort_unstable();
                on.dedup();
                assert_eq!(interval(g, x, y), on, "I({x}, {y})");
            }
        }
    }
}
