//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use homforge::cores::{are_hom_equivalent, core_of, is_core, is_isomorphic};
use homforge::minors::{is_onto, validate_gridlike, validate_minor_map, MinorMap};
use homforge::reductions::{
    all_graphs, gap_pairs, make_grid_template, relaxation_map, verify_amplify, verify_grohe, verify_pcsp,
    PromiseInstance, VerificationReport,
};
use homforge::solver::{enumerate_homs, find_hom, find_hom_td, HomSearchResult, SearchBudget};
use homforge::structures::{clique, grid_graph, random_graph, typed_grid, Homomorphism, Structure};
use homforge::treewidth::{
    exact_treewidth, grid_decomposition, heuristic_decomposition, structure_treewidth, validate_decomposition,
    TreeDecomposition,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn clean(r: &VerificationReport) -> Check {
    ensure!(
        r.counterexamples.is_empty() && r.inconclusive.is_empty(),
        "{} counterexamples, {} inconclusive; first: {:?}",
        r.counterexamples.len(),
        r.inconclusive.len(),
        r.counterexamples.first().or(r.inconclusive.first())
    );
    Ok(format!("{}/{} instances", r.passed, r.instances))
}

fn minor_fixture() -> Check {
    let mu = common::minor_example_map([&["e"], &["d"], &["b"], &["a", "c"]]);
    ensure!(validate_minor_map(&mu), "the drawn minor map does not validate");
    ensure!(!is_onto(&mu), "the drawn map should leave f uncovered");
    let split = common::minor_example_map([&["e"], &["d"], &["b"], &["a", "f"]]);
    ensure!(!validate_minor_map(&split), "a disconnected branch set was accepted");
    let onto = common::minor_example_map([&["e"], &["d", "f"], &["b"], &["a", "c"]]);
    ensure!(
        validate_minor_map(&onto) && is_onto(&onto),
        "the onto variant was rejected"
    );
    Ok("valid, disconnected variant rejected".into())
}

fn grid_treewidth() -> Check {
    let g = grid_graph(3, 3).unwrap();
    let drawn = TreeDecomposition::path((1..=6).map(|s| (s - 1..s + 3).collect()).collect());
    ensure!(
        validate_decomposition(&g, &drawn) == Ok(true),
        "six-bag decomposition invalid"
    );
    ensure!(drawn.width() == 3, "width {} instead of 3", drawn.width());
    ensure!(
        grid_decomposition(3, 3).unwrap() == drawn,
        "generated grid decomposition differs from the drawing"
    );
    let mut widths = Vec::new();
    for k in [2, 3, 4] {
        let (tw, d) = exact_treewidth(&grid_graph(k, k).unwrap()).map_err(|e| e.to_string())?;
        ensure!(tw == k as i64, "tw(grid {k}x{k}) = {tw}");
        ensure!(
            validate_decomposition(&grid_graph(k, k).unwrap(), &d) == Ok(true),
            "witness invalid for k={k}"
        );
        widths.push(tw.to_string());
    }
    Ok(format!("tw = {} for k = 2, 3, 4", widths.join(", ")))
}

fn grohe_sweep() -> Check {
    let a = typed_grid(3, 3).unwrap();
    ensure!(
        is_core(&a, SearchBudget::UNLIMITED) == Ok(true),
        "typed 3x3 grid is not a core"
    );
    let mu = MinorMap::identity(&a.gaifman_graph());
    let r = verify_grohe(&a, &mu, 3, &all_graphs(5), SearchBudget::UNLIMITED).map_err(|e| e.to_string())?;
    clean(&r)
}

fn pcsp_sweep() -> Check {
    let t = make_grid_template(2, 3).map_err(|e| e.to_string())?;
    let r = verify_pcsp(&t, &all_graphs(5), SearchBudget::UNLIMITED).map_err(|e| e.to_string())?;
    clean(&r)
}

fn grid_template_condition() -> Check {
    let t = make_grid_template(2, 3).map_err(|e| e.to_string())?;
    let homs: Vec<Homomorphism> = enumerate_homs(&t.pair.a, &t.pair.b)
        .map_err(|e| e.to_string())?
        .collect();
    let mut translations: Vec<Homomorphism> = (0..2)
        .flat_map(|di| (0..2).map(move |dj| (di, dj)))
        .map(|(di, dj)| Homomorphism::new((0..4).map(|x| (x / 2 + di) * 3 + x % 2 + dj).collect()))
        .collect();
    translations.sort_by(|a, b| a.map().cmp(b.map()));
    let mut found = homs.clone();
    found.sort_by(|a, b| a.map().cmp(b.map()));
    ensure!(
        found == translations,
        "homomorphisms are not exactly the 4 translations: {found:?}"
    );
    for g in &homs {
        ensure!(g.is_injective(), "{g:?} is not injective");
        ensure!(
            validate_gridlike(&t.pair.a, &t.rhos[0].after(g)),
            "rho after {g:?} is not grid-like"
        );
    }
    Ok(format!("{} injective translations, all grid-like", homs.len()))
}

fn amplification() -> Check {
    let graphs = all_graphs(5);
    let mut parts = Vec::new();
    for (k, l) in [(3, 5), (2, 5), (3, 3)] {
        ensure!(!gap_pairs(k, l).is_empty(), "no gap pair for ({k}, {l})");
        let r = verify_amplify(k, l, &graphs).map_err(|e| e.to_string())?;
        clean(&r).map_err(|e| format!("({k}, {l}): {e}"))?;
        parts.push(format!("({k},{l}) pairs {:?}", gap_pairs(k, l)));
    }
    Ok(parts.join("; "))
}

fn core_suite() -> Check {
    let b = SearchBudget::UNLIMITED;
    let err = |e: homforge::cores::CoreError| e.to_string();
    let c6 = homforge::structures::Graph::from_index_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
        .unwrap()
        .to_structure();
    let k2 = clique(2).unwrap();
    let k3 = clique(3).unwrap();
    ensure!(
        is_isomorphic(&core_of(&c6, b).map_err(err)?.core, &k2, b) == Ok(true),
        "core(C6) is not K2"
    );
    let union = k3.disjoint_union(&k2).unwrap();
    ensure!(
        is_isomorphic(&core_of(&union, b).map_err(err)?.core, &k3, b) == Ok(true),
        "core(K3+K2) is not K3"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut sizes = Vec::new();
    for _ in 0..50 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.1..0.5);
        let a = common::random_structure(&mut rng, n, p);
        let order = common::shuffled(&mut rng, n);
        let other = a.reordered(&order).unwrap();
        let (c1, c2) = (core_of(&a, b).map_err(err)?, core_of(&other, b).map_err(err)?);
        ensure!(
            is_isomorphic(&c1.core, &c2.core, b) == Ok(true),
            "orderings disagree on {a:?}"
        );
        for (c, src) in [(&c1, &a), (&c2, &other)] {
            ensure!(
                is_core(&c.core, b) == Ok(true),
                "computed core of {src:?} is not a core"
            );
            ensure!(
                are_hom_equivalent(&c.core, src, b) == Ok(true),
                "core not equivalent to {src:?}"
            );
            ensure!(c.retraction.is_valid(src, &c.core), "retraction invalid");
            ensure!(c.inclusion.is_valid(&c.core, src), "inclusion invalid");
        }
        sizes.push((c1.core.len(), n));
    }
    let proper = sizes.iter().filter(|&&(c, n)| c < n).count();
    let largest = sizes.iter().map(|&(c, _)| c).max().unwrap_or(0);
    Ok(format!(
        "50 random structures, {proper} proper retractions, largest core {largest}"
    ))
}

fn solver_equivalence() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut done, mut found) = (0, 0);
    while done < 100 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.05..0.3);
        let a = common::random_structure(&mut rng, n, p);
        if structure_treewidth(&a).map_err(|e| e.to_string())?.0 > 3 {
            continue;
        }
        let m = rng.gen_range(1..=5);
        let p = rng.gen_range(0.2..0.8);
        let x = common::random_structure(&mut rng, m, p);
        let d = heuristic_decomposition(&a.gaifman_graph());
        let direct = find_hom(&a, &x, SearchBudget::UNLIMITED).map_err(|e| e.to_string())?;
        let td = find_hom_td(&a, &x, &d).map_err(|e| e.to_string())?;
        ensure!(direct.decision() == td.decision(), "disagreement on {a:?} -> {x:?}");
        if let HomSearchResult::Found(h) = &td {
            ensure!(h.is_valid(&a, &x), "dynamic-programming witness invalid");
            found += 1;
        }
        done += 1;
    }
    Ok(format!("100 instances agree ({found} satisfiable)"))
}

fn relaxation() -> Check {
    let b = SearchBudget::UNLIMITED;
    let (k2, k3, k4) = (clique(2).unwrap(), clique(3).unwrap(), clique(4).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut yes, mut sound) = (0, 0);
    for seed in 0..50 {
        let n = rng.gen_range(2..=7);
        let x: Structure = random_graph(n, rng.gen_range(0.3..0.95), seed).to_structure();
        let inst = PromiseInstance::new(k2.clone(), k4.clone(), x.clone()).map_err(|e| e.to_string())?;
        let relaxed = relaxation_map(&inst, &k3, &k3, b).map_err(|e| e.to_string())?;
        ensure!(
            relaxed.a_to_c.is_valid(&k2, &k3) && relaxed.d_to_b.is_valid(&k3, &k4),
            "sandwich maps invalid"
        );
        if let HomSearchResult::Found(h) = find_hom(&k4, &x, b).map_err(|e| e.to_string())? {
            ensure!(relaxed.lift_yes(&h).is_valid(&k3, &x), "lifted yes-witness invalid");
            yes += 1;
        }
        let c_to_x = find_hom(&k3, &x, b).map_err(|e| e.to_string())?;
        if let HomSearchResult::Found(h) = &c_to_x {
            ensure!(relaxed.pull_back(h).is_valid(&k2, &x), "pulled-back witness invalid");
            sound += 1;
        }
        let a_to_x = find_hom(&k2, &x, b).map_err(|e| e.to_string())?.is_found();
        ensure!(a_to_x || !c_to_x.is_found(), "a no-instance became a yes-instance");
    }
    Ok(format!("50 instances, {yes} yes-witnesses lifted, {sound} pulled back"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("minor map fixture", minor_fixture, Duration::from_secs(1)),
        (
            "grid tree decomposition and treewidth",
            grid_treewidth,
            Duration::from_secs(30),
        ),
        ("clique gadget sweep", grohe_sweep, Duration::from_secs(600)),
        ("promise gadget sweep", pcsp_sweep, Duration::from_secs(600)),
        (
            "grid template star condition",
            grid_template_condition,
            Duration::from_secs(1),
        ),
        ("clique amplification", amplification, Duration::from_secs(300)),
        ("core suite", core_suite, Duration::from_secs(300)),
        (
            "tree-decomposition solver equivalence",
            solver_equivalence,
            Duration::from_secs(300),
        ),
        ("homomorphic relaxation", relaxation, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (i, &(name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {} {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
