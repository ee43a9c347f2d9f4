//! End-to-end acceptance run: one PASS/FAIL line per criterion, each with a
//! wall-clock budget. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nevgraph::graph::{pendant, retract, Color, ColoredGraph};
use nevgraph::laurent::{expand_at_infinity, level_curve, verify_contact_theorem, walk_generating_series};
use nevgraph::nevanlinna::{
    reciprocal_transform, representing_function, root_function, verify_comb_identity,
    verify_component_invariance, verify_relabel_invariance, verify_retract_identity, verify_schur_path,
    verify_star_identity, IdentityReport,
};
use nevgraph::numcheck::{eval_complex, pick_property_sample, resolvent_oracle, upper_point};
use nevgraph::random;
use nevgraph::sticks::stick_determinants;
use nevgraph::{RatFun, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

fn rf(s: &str) -> RatFun {
    s.parse().expect("valid rational function")
}

fn zw(colors: &str, edges: &[(usize, usize)], root: usize) -> ColoredGraph {
    let cs = colors
        .chars()
        .map(|c| if c == 'z' { Color::Z } else { Color::W })
        .collect();
    ColoredGraph::new(cs, edges.iter().copied(), root).expect("valid graph")
}

fn check(cond: bool, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ok<T>(r: Result<T>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn reduction_example() -> Outcome {
    let g = zw("zwzzzw", &[(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)], 1);
    let expected = rf("(-w^2*z^3 + 2*w^2*z + 3*w*z^2 + 2*w*z - w - z)/(w^2*z^4 - 3*w^2*z^2 + w^2 - 4*w*z^3 - 2*w*z^2 + 4*w*z + 2*w + 3*z^2 + 2*z)");
    let f = ok(root_function(&g), "f_G")?;
    check(f == expected, || format!("f_G = {f}"))?;
    let k = ok(pendant(&g, 4, &[5, 6]), "pendant")?;
    let g_k = ok(reciprocal_transform(&k, k.root()), "g_K")?;
    check(g_k == rf("(-w*z^2 + w + 2*z + 2)/(w*z - 1)"), || format!("g_K = {g_k}"))?;
    let reduced = ok(retract(&g, 4, &[5, 6]), "retract")?;
    check(reduced.color(4).diagonal() == g_k, || "cut diagonal differs from g_K".into())?;
    let f_reduced = ok(root_function(&reduced), "f of retracted graph")?;
    check(f_reduced == expected, || format!("retracted f = {f_reduced}"))?;
    Ok("f_G and its retraction match".into())
}

fn star_example() -> Outcome {
    let g = zw("zwww", &[(1, 2), (2, 3), (3, 4), (4, 1)], 1);
    let h = zw("zzw", &[(1, 2), (2, 3), (3, 1)], 1);
    let sum = &ok(reciprocal_transform(&g, 1), "g_G")? + &ok(reciprocal_transform(&h, 1), "g_H")?;
    let expected = rf("(-2*w^3*z^2 + w^3 + 5*w^2*z + 2*w^2 + 4*w*z^2 - 4*w - 6*z - 4)/((w^2 - 2)*(w*z - 1))");
    check(sum == expected, || format!("g_G + g_H = {sum}"))?;
    let product = ok(nevgraph::star_product(&g, &h), "star product")?;
    let g_star = ok(reciprocal_transform(&product, product.root()), "g of product")?;
    check(&g_star - &RatFun::z() == sum, || format!("g_(G*H) = {g_star}"))?;
    Ok("g_G + g_H = g_(G*H) - z".into())
}

fn contact_example() -> Outcome {
    let g = zw("zwzzz", &[(1, 3), (1, 4), (2, 3), (4, 5), (5, 2)], 1);
    let f = ok(root_function(&g), "f_G")?;
    let expected = rf("(w*z^3 - w*z - 2*z^2 + 1)/(-w*z^4 + 3*w*z^2 - w + 2*z^3 - 4*z + 2)");
    check(f == expected, || format!("f_G = {f}"))?;
    let curve = ok(level_curve(&f), "level curve")?;
    let s = expand_at_infinity(&curve.lambda_fn, 4);
    let leading = [rf("2"), rf("0"), rf("2"), rf("2 - 1/lambda")];
    for (k, c) in (1..=4).zip(leading) {
        check(s.coefficient(k) == c, || format!("coefficient of z^-{k} is {}", s.coefficient(k)))?;
    }
    let r = ok(verify_contact_theorem(&g), "contact")?;
    check(r.order == 4 && r.distance == 2 && r.consistent, || format!("{r:?}"))?;
    Ok("series 2/z + 0/z^2 + 2/z^3 + (2 - 1/lambda)/z^4, order 4 = 2*2".into())
}

fn contact_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut at_w = 0;
    for case in 0..200 {
        let n = rng.gen_range(1..=8);
        let g = random::single_w_graph(&mut rng, n);
        let r = ok(verify_contact_theorem(&g), "contact")?;
        check(r.consistent, || format!("case {case}: {r:?} for {}", g.to_json_string()))?;
        at_w += usize::from(r.distance == 0);
    }
    Ok(format!("200 graphs consistent ({at_w} rooted at the w vertex)"))
}

fn tally(name: &str, reports: impl IntoIterator<Item = Result<IdentityReport>>) -> std::result::Result<usize, String> {
    let mut count = 0;
    for (i, r) in reports.into_iter().enumerate() {
        let r = ok(r, &format!("{name} case {i}"))?;
        check(r.equal, || format!("{name} case {i}: {} != {}", r.lhs, r.rhs))?;
        count += 1;
    }
    Ok(count)
}

fn identity_suites() -> Outcome {
    const MAX: usize = 7;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut counts = Vec::new();

    let stars: Vec<_> = (0..100).map(|_| random::star_pair(&mut rng, MAX)).collect();
    counts.push(tally("star", stars.iter().map(|(g, h)| verify_star_identity(g, h)))?);

    let combs: Vec<_> = (0..100).map(|i| random::comb_pair(&mut rng, MAX, i % 2 == 1)).collect();
    counts.push(tally("z-comb", combs.iter().map(|(g, h)| verify_comb_identity(g, h)))?);

    let pendants: Vec<_> = (0..100).map(|_| random::pendant_instance(&mut rng, MAX)).collect();
    counts.push(tally(
        "retraction",
        pendants.iter().map(|p| verify_retract_identity(&p.graph, p.cut, &p.subgraph)),
    )?);

    let relabels: Vec<_> = (0..100)
        .map(|_| {
            let n = rng.gen_range(1..=MAX);
            let g = random::zw_graph(&mut rng, n);
            let phi = random::permutation(&mut rng, n);
            (g, phi, rng.gen_range(1..=n))
        })
        .collect();
    counts.push(tally("relabel", relabels.iter().map(|(g, phi, k)| verify_relabel_invariance(g, phi, *k)))?);

    let components: Vec<_> = (0..100)
        .map(|_| {
            let n = rng.gen_range(1..MAX);
            let m = rng.gen_range(1..=MAX - n);
            (random::zw_graph(&mut rng, n), random::zw_graph(&mut rng, m))
        })
        .collect();
    counts.push(tally("component", components.iter().map(|(g, e)| verify_component_invariance(g, e)))?);

    let schurs: Vec<_> = (0..100)
        .map(|_| {
            let n = rng.gen_range(1..=MAX);
            let g = random::zw_graph(&mut rng, n);
            let k = rng.gen_range(1..=n);
            let chain = random::schur_chain(&mut rng, n, k);
            (g, k, chain)
        })
        .collect();
    counts.push(tally("schur", schurs.iter().map(|(g, k, c)| verify_schur_path(g, *k, c)))?);

    Ok(format!("star/z-comb/retraction/relabel/component/schur: {counts:?} exact"))
}

fn matrix_power_entry(a: &[Vec<i64>], p: usize, i: usize, j: usize) -> i64 {
    let n = a.len();
    let mut v: Vec<i64> = (0..n).map(|r| i64::from(r == j)).collect();
    for _ in 0..p {
        v = (0..n).map(|r| (0..n).map(|c| a[r][c] * v[c]).sum()).collect();
    }
    v[i]
}

fn walk_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for case in 0..50 {
        let n = rng.gen_range(1..=6);
        let g = random::zw_graph(&mut rng, n);
        let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let s = ok(walk_generating_series(&g, i, j, 10), "walk series")?;
        let a = g.adjacency_counts();
        for p in 0..10 {
            let expected = RatFun::constant(-matrix_power_entry(&a, p, i - 1, j - 1));
            let got = s.coefficient(p as i64 + 1);
            check(got == expected, || format!("case {case}: coefficient {} is {got}", p + 1))?;
        }
        let order = ok(s.first_nonzero_order(), "order")?;
        let d = g.distance(i, j).expect("connected");
        check(order == d as i64 + 1, || format!("case {case}: order {order}, distance {d}"))?;
    }
    Ok("50 graphs: 10 coefficients and order = distance + 1".into())
}

fn sticks() -> Outcome {
    let fam = stick_determinants(20);
    check(fam.agree && fam.dets.len() == 21, || "derivations disagree".into())?;
    Ok("T_0..T_20 agree three ways".into())
}

fn pick_sampling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut worst_imag, mut worst_residual) = (f64::INFINITY, 0.0f64);
    for case in 0..20 {
        let n = rng.gen_range(1..=8);
        let g = random::zw_graph(&mut rng, n);
        let r = ok(pick_property_sample(&g, 1000, 800 + case), "sampling")?;
        check(r.pass, || format!("case {case}: {r:?}"))?;
        worst_imag = worst_imag.min(r.worst_imag);
        worst_residual = worst_residual.max(r.worst_residual);
    }
    Ok(format!("20 graphs, min Im f = {worst_imag:.3e}, max real |Im f| = {worst_residual:.1e}"))
}

fn resolvent_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0.0f64;
    for case in 0..100 {
        let n = rng.gen_range(1..=8);
        let g = random::zw_graph(&mut rng, n);
        let k = rng.gen_range(1..=n);
        let (z, w) = (upper_point(&mut rng), upper_point(&mut rng));
        let exact = ok(representing_function(&g, k), "f_G^k")?;
        let symbolic = ok(eval_complex(&exact, z, w, Complex64::new(0.0, 0.0)), "evaluation")?;
        let numeric = ok(resolvent_oracle(&g, k, z, w), "resolvent")?;
        let rel = (symbolic - numeric).norm() / numeric.norm();
        check(rel <= 1e-8, || format!("case {case}: relative gap {rel:e}"))?;
        worst = worst.max(rel);
    }
    Ok(format!("100 pairs, worst relative gap {worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 9] = [
        ("reduction example", 1, reduction_example),
        ("star example", 1, star_example),
        ("contact example", 1, contact_example),
        ("contact order suite", 60, contact_suite),
        ("identity suites", 120, identity_suites),
        ("walk generating functions", 30, walk_suite),
        ("stick determinants", 5, sticks),
        ("Pick and inner sampling", 60, pick_sampling),
        ("numeric resolvent oracle", 10, resolvent_agreement),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(budget);
        let (status, detail) = match outcome {
            Ok(d) if elapsed < budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {budget:?} budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} {} {name} ({:.3} s): {detail}", i + 1, elapsed.as_secs_f64());
    }
    if failures == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
