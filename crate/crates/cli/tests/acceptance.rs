//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sconn::*;

const SEED: u64 = 0x5eed_2026;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn from_choices(n: usize, choices: &[u8]) -> StrictDigraph {
    let edges = pairs(n)
        .into_iter()
        .zip(choices)
        .filter_map(|((u, v), &c)| match c {
            1 => Some((u, v)),
            2 => Some((v, u)),
            _ => None,
        });
    StrictDigraph::from_edges(n, edges).unwrap()
}

fn all_strict_digraphs(n: usize) -> impl Iterator<Item = StrictDigraph> {
    let p = pairs(n).len() as u32;
    (0..3u64.pow(p)).map(move |mut code| {
        let choices: Vec<u8> = (0..p)
            .map(|_| {
                let c = (code % 3) as u8;
                code /= 3;
                c
            })
            .collect();
        from_choices(n, &choices)
    })
}

/// Random strict digraph; each pair is absent with probability `1 - density`.
fn random_digraph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> StrictDigraph {
    let choices: Vec<u8> = pairs(n)
        .iter()
        .map(|_| {
            if rng.gen_bool(density) {
                rng.gen_range(1..=2)
            } else {
                0
            }
        })
        .collect();
    from_choices(n, &choices)
}

/// Disjoint union of strong pieces, each a random digraph on a spanning cycle.
fn random_strong_union(rng: &mut ChaCha8Rng, max_n: usize) -> StrictDigraph {
    let mut sizes = Vec::new();
    let mut total = 0;
    loop {
        let k = if rng.gen_bool(0.3) { 1 } else { rng.gen_range(3..=4) };
        if total + k > max_n {
            break;
        }
        sizes.push(k);
        total += k;
    }
    if sizes.len() < 2 {
        sizes = vec![1, 1, 1];
        total = 3;
    }
    let mut edges = Vec::new();
    let mut base = 0;
    for k in sizes {
        if k >= 3 {
            for i in 0..k {
                edges.push((base + i, base + (i + 1) % k));
            }
            for i in 0..k {
                for j in i + 2..k {
                    if !(i == 0 && j == k - 1) && rng.gen_bool(0.5) {
                        edges.push(if rng.gen_bool(0.5) { (base + i, base + j) } else { (base + j, base + i) });
                    }
                }
            }
        }
        base += k;
    }
    StrictDigraph::from_edges(total, edges).unwrap()
}

fn reach_all(n: usize, out: &[u16]) -> bool {
    let full: u32 = (1 << n) - 1;
    let mut inn = vec![0u16; n];
    for u in 0..n {
        for v in 0..n {
            if out[u] >> v & 1 == 1 {
                inn[v] |= 1 << u;
            }
        }
    }
    let spread = |adj: &[u16]| {
        let mut seen: u32 = 1;
        loop {
            let next = (0..n).filter(|&v| seen >> v & 1 == 1).fold(seen, |m, v| m | adj[v] as u32);
            if next == seen {
                return seen;
            }
            seen = next;
        }
    };
    spread(out) == full && spread(&inn) == full
}

fn out_masks(g: &StrictDigraph) -> Vec<u16> {
    let mut out = vec![0u16; g.n()];
    for (u, v) in g.edges() {
        out[u] |= 1 << v;
    }
    out
}

fn oracle_strong(g: &StrictDigraph) -> bool {
    g.n() > 0 && reach_all(g.n(), &out_masks(g))
}

/// Whether orienting every missing pair somehow yields a strong digraph.
fn oracle_connectable(g: &StrictDigraph) -> bool {
    let n = g.n();
    let out = out_masks(g);
    let missing: Vec<_> = pairs(n).into_iter().filter(|&(u, v)| !g.adjacent(u, v)).collect();
    (0..1u64 << missing.len()).any(|bits| {
        let mut o = out.clone();
        for (i, &(u, v)) in missing.iter().enumerate() {
            if bits >> i & 1 == 1 {
                o[u] |= 1 << v;
            } else {
                o[v] |= 1 << u;
            }
        }
        reach_all(n, &o)
    })
}

fn weakly_connected(g: &StrictDigraph) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

/// Every weak component induces a strong subdigraph.
fn weak_components_strong(g: &StrictDigraph) -> bool {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        label[s] = s;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            for &w in g.out_neighbors(v).iter().chain(g.in_neighbors(v)) {
                if label[w] == usize::MAX {
                    label[w] = s;
                    members.push(w);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let index = |v: usize| members.binary_search(&v).unwrap();
        let sub = StrictDigraph::from_edges(
            members.len(),
            g.edges().filter(|&(u, _)| label[u] == s).map(|(u, v)| (index(u), index(v))),
        )
        .unwrap();
        if !oracle_strong(&sub) {
            return false;
        }
    }
    true
}

fn min_extension(g: &StrictDigraph) -> Option<usize> {
    match brute_force_min_extension(g).ok()? {
        MinExtension::Found(p) => Some(p.len()),
        MinExtension::Impossible(_) => None,
    }
}

/// Random sample shared by criteria 2 and 5.
fn dicut_free_sample() -> Vec<StrictDigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut sample = Vec::new();
    while sample.len() < 1200 {
        let g = if sample.len() % 5 == 0 {
            random_strong_union(&mut rng, 8)
        } else {
            let n = rng.gen_range(3..=8);
            let density = rng.gen_range(0.2..0.9);
            random_digraph(&mut rng, n, density)
        };
        if find_complete_dicut(&g).is_none() {
            sample.push(g);
        }
    }
    sample
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn c1_dicut_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 3..=5 {
        for g in all_strict_digraphs(n) {
            let none = find_complete_dicut(&g).is_none();
            let connectable = if n <= 4 {
                oracle_connectable(&g)
            } else {
                match extend(&g) {
                    Ok(plan) => oracle_strong(&plan.resulting) && g.is_subgraph_of(&plan.resulting),
                    Err(_) => false,
                }
            };
            if none != connectable {
                return Err(format!("discrepancy on {g:?}"));
            }
            if n == 5 && !none && oracle_connectable(&g) {
                return Err(format!("dicut but connectable: {g:?}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("runtime {elapsed:?} over 5 min"));
    }
    Ok(format!("{checked} digraphs on 3..=5 vertices, 0 discrepancies, {elapsed:.2?}"))
}

fn c2_extension_bound(sample: &[StrictDigraph]) -> Outcome {
    let mut equality = 0;
    for g in sample {
        let plan = extend(g).map_err(|e| format!("extend failed: {e}"))?;
        if !oracle_strong(&plan.resulting) || !g.is_subgraph_of(&plan.resulting) {
            return Err(format!("not a strong extension: {g:?}"));
        }
        let r = strong_components(g).r();
        if plan.len() > r {
            return Err(format!("{} added > r = {r}: {g:?}", plan.len()));
        }
        let case = !weakly_connected(g) && weak_components_strong(g);
        if (plan.len() == r) != case {
            return Err(format!("|added| = r mismatch with equality case: {g:?}"));
        }
        equality += case as usize;
    }
    Ok(format!("{} dicut-free digraphs (n <= 8), {equality} in the equality case, 0 violations", sample.len()))
}

fn c3_tt_minus_path() -> Outcome {
    for r in 3..=6 {
        let got = min_extension(&gen_tt_minus_path(r).unwrap());
        if got != Some(r - 1) {
            return Err(format!("r = {r}: minimum {got:?}, expected {}", r - 1));
        }
    }
    Ok("minimum = r - 1 for r in 3..=6".into())
}

fn c4_bipartite() -> Outcome {
    let mut cases = 0;
    for p in 1..=4 {
        for q in 1..=5 - p {
            let got = min_extension(&gen_bipartite_plus_isolated(p, q).unwrap());
            if got != Some(p + q) {
                return Err(format!("p = {p}, q = {q}: minimum {got:?}, expected {}", p + q));
            }
            cases += 1;
        }
    }
    Ok(format!("minimum = p + q for all {cases} cases with p + q <= 5"))
}

fn c5_sandwich(sample: &[StrictDigraph]) -> Outcome {
    let mut brute = 0;
    let mut disconnected = 0;
    for g in sample {
        let b = bounds(g).map_err(|e| format!("bounds failed: {e}"))?;
        let strong = strong_components(g).r() == 1;
        if !strong && b.lower > b.constructive {
            return Err(format!("lower > constructive: {g:?}"));
        }
        if b.constructive > b.upper_theorem {
            return Err(format!("constructive > upper_theorem: {g:?}"));
        }
        if let Some(m) = b.brute_min {
            brute += 1;
            if (!strong && b.lower > m) || m > b.constructive {
                return Err(format!("brute minimum {m} out of range: {g:?}"));
            }
        }
        match (&b.upper_cyclic, b.upper_prop, b.u_minus_c_prime) {
            (Some(cy), Some(p), Some(u)) => {
                disconnected += 1;
                if cy.value > p || p != u {
                    return Err(format!("cyclic {} / s+t-c {p} / u-c' {u}: {g:?}", cy.value));
                }
            }
            (None, None, None) if weakly_connected(g) => {}
            _ => return Err(format!("disconnected bounds missing: {g:?}")),
        }
    }
    Ok(format!(
        "{} digraphs, {brute} with brute-force minimum, {disconnected} disconnected, 0 violations",
        sample.len()
    ))
}

fn c6_detector() -> Outcome {
    let mut exhaustive = 0;
    for n in 1..=5 {
        for g in all_strict_digraphs(n) {
            if find_complete_dicut(&g) != brute_force_complete_dicut(&g).unwrap() {
                return Err(format!("discrepancy on {g:?}"));
            }
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut found = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.3..1.0);
        let g = random_digraph(&mut rng, n, density);
        let fast = find_complete_dicut(&g);
        if fast != brute_force_complete_dicut(&g).unwrap() {
            return Err(format!("discrepancy on {g:?}"));
        }
        found += fast.is_some() as usize;
    }
    Ok(format!("{exhaustive} exhaustive (n <= 5) and 1000 random (n <= 12, {found} with a dicut), 0 discrepancies"))
}

fn c7_dice() -> Outcome {
    let p = win_probability(&[1, 5, 9], &[3, 4, 8]).map_err(|e| e.to_string())?;
    if p != Prob::new(5, 9) || p.wins != 5 || p.total != 9 {
        return Err(format!("win probability {p}"));
    }
    let d = DiceSet::new(vec![vec![1, 5, 9], vec![3, 4, 8], vec![2, 6, 7]]).unwrap();
    let balanced = is_balanced(&d).map_err(|e| e.to_string())?;
    if balanced != Some(Prob::new(5, 9)) {
        return Err(format!("balance {balanced:?}"));
    }
    let g = beats_digraph(&d, EdgeConvention::WinnerToLoser);
    if g.edge_count() != 3 || !g.is_tournament() || !oracle_strong(&g) {
        return Err(format!("beats-digraph {g:?}"));
    }
    Ok("P = 5/9, balanced at 5/9, beats-digraph a strong 3-cycle".into())
}

fn c8_dice_realizability() -> Outcome {
    let start = Instant::now();
    let mut realizable = 0;
    for h in all_strict_digraphs(3) {
        let found = search_balanced_realization(&h, 3, EdgeConvention::WinnerToLoser).map_err(|e| e.to_string())?;
        let none = find_complete_dicut(&h).is_none();
        if found.is_some() != none {
            return Err(format!("mismatch on {h:?}"));
        }
        if let Some(d) = found {
            let ok = is_balanced(&d).ok().flatten().is_some_and(|p| p.beats())
                && realizes(&d, &h, EdgeConvention::WinnerToLoser).unwrap();
            if !ok {
                return Err(format!("bad realization {d} for {h:?}"));
            }
            realizable += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!("runtime {elapsed:?} over 2 min"));
    }
    Ok(format!("27 three-vertex digraphs, {realizable} realizable, all matching, {elapsed:.2?}"))
}

fn c9_moon() -> Outcome {
    let mut strong = 0;
    for n in 3..=6 {
        let ps = pairs(n);
        for bits in 0..1u32 << ps.len() {
            let edges = ps
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if bits >> i & 1 == 1 { (u, v) } else { (v, u) });
            let t = StrictDigraph::from_edges(n, edges).unwrap();
            if !oracle_strong(&t) {
                continue;
            }
            strong += 1;
            let cycle = hamiltonian_cycle_strong_tournament(&t).map_err(|e| e.to_string())?;
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            let spanning = sorted == (0..n).collect::<Vec<_>>();
            if !spanning || (0..n).any(|i| !t.has_edge(cycle[i], cycle[(i + 1) % n])) {
                return Err(format!("invalid cycle {cycle:?} in {t:?}"));
            }
        }
    }
    Ok(format!("{strong} strong tournaments on 3..=6 vertices, all cycles valid"))
}

fn sconn(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sconn")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn c10_certificates() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let graph_file = dir.path().join("g.txt");
    let cert_file = dir.path().join("cert.txt");
    let tampered_file = dir.path().join("tampered.txt");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let (mut dicuts, mut tampers) = (0, 0);
    for _ in 0..100 {
        let n = rng.gen_range(3..=9);
        let density = rng.gen_range(0.3..1.0);
        let g = random_digraph(&mut rng, n, density);
        std::fs::write(&graph_file, g.to_edge_list()).unwrap();
        let (code, cert) = sconn(&["certify", path_str(&graph_file)]);
        if code != 0 && code != 1 {
            return Err(format!("certify exit {code} on {g:?}"));
        }
        std::fs::write(&cert_file, &cert).unwrap();
        let (code, report) = sconn(&["certify", path_str(&graph_file), "--verify", path_str(&cert_file)]);
        if code != 0 {
            return Err(format!("verify exit {code}: {report} on {g:?}"));
        }
        let Ok(Certificate::Dicut(c)) = parse_certificate(&cert) else {
            continue;
        };
        dicuts += 1;
        let x = c.vertices();
        let cut: Vec<_> = g.edges().filter(|&(u, v)| x.contains(&u) && !x.contains(&v)).collect();
        for &(u, v) in &cut {
            for flip in [false, true] {
                let mut edges: Vec<_> = g.edges().filter(|&e| e != (u, v)).collect();
                if flip {
                    edges.push((v, u));
                }
                let t = StrictDigraph::from_edges(n, edges).unwrap();
                std::fs::write(&tampered_file, t.to_edge_list()).unwrap();
                let (code, _) = sconn(&["certify", path_str(&tampered_file), "--verify", path_str(&cert_file)]);
                if code != 1 {
                    return Err(format!("tampered edge {u} -> {v} still verifies (exit {code})"));
                }
                tampers += 1;
            }
        }
    }
    if dicuts == 0 {
        return Err("sample contained no dicut certificates".into());
    }
    Ok(format!("100 certificates verified ({dicuts} dicuts), {tampers} single-edge tamperings all rejected"))
}

fn main() {
    let sample = dicut_free_sample();
    let criteria: Vec<Criterion> = vec![
        ("C1 dicut-free iff strongly connectable, n = 3..=5", Box::new(c1_dicut_equivalence)),
        ("C2 extension size at most r, equality case exact", Box::new(|| c2_extension_bound(&sample))),
        ("C3 transitive tournament minus path needs r - 1", Box::new(c3_tt_minus_path)),
        ("C4 bipartite plus isolated vertex needs p + q", Box::new(c4_bipartite)),
        ("C5 bound sandwich", Box::new(|| c5_sandwich(&sample))),
        ("C6 polynomial detector matches brute force", Box::new(c6_detector)),
        ("C7 dice probabilities exact", Box::new(c7_dice)),
        ("C8 dice realizable iff no complete dicut", Box::new(c8_dice_realizability)),
        ("C9 strong tournaments are Hamiltonian", Box::new(c9_moon)),
        ("C10 certificate round trip and tampering", Box::new(c10_certificates)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
