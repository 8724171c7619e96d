//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use multidom::bounds::{
    applicability_caro_yuster, bound_caro_roditty, bound_classical, bound_parametric, bound_parametric_alt, bound_rs,
    bound_rs_log, bound_rs_log_optimized, bound_rv, bound_threshold_ktuple, bound_total_rs, catalogue,
    CatalogueOptions,
};
use multidom::exact::{exact_function_number, exact_set_number, FunctionLimits, DEFAULT_SET_LIMIT};
use multidom::tuner::{compare_bounds, solve_cubic, tune_c};
use multidom::{
    generate, verify_function, verify_set, Construction, DominationSpec, Graph, GraphFamily, GraphFamilySpec,
    VertexFunction, Witness,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("worked k=5, δ=1000 example", criterion_1),
        ("applicability table for δ=1000", criterion_2),
        ("specialization identities", criterion_3),
        ("exact value below every applicable bound", criterion_4),
        ("oracle equivalences", criterion_5),
        ("construction validity", criterion_6),
        ("strong ≤ log dominance", criterion_7),
        ("CLI determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {} ({name}): {} [{:.2?}]", i + 1, outcome.detail, start.elapsed());
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn rel_err(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

fn criterion_1() -> Outcome {
    let ((cubic, tuned, rv), took) = timed(|| (solve_cubic(5, 1000), tune_c(5, 1000), bound_rv(5, 1000, 1)));
    let normalized = cubic.normalized.map(round2);
    let root = cubic.roots.last().copied().unwrap_or(f64::NAN);
    let threshold = bound_threshold_ktuple(5, 1000, 1, root).coefficient.unwrap_or(f64::NAN);
    let rv = rv.coefficient.unwrap_or(f64::NAN);
    let tuned_matches = tuned.is_some_and(|t| (t.c - root).abs() < 1e-12);
    let pass = normalized == [1.0, -5.13, 1.0, 0.4]
        && (root - 4.910).abs() <= 1e-3
        && threshold < 0.027
        && rv < 0.035
        && tuned_matches
        && took < Duration::from_secs(1);
    Outcome::new(
        pass,
        format!("cubic {normalized:?}, root {root:.4}, threshold {threshold:.5}, RV {rv:.5}, tuner agrees {tuned_matches}, {took:.2?}"),
    )
}

fn criterion_2() -> Outcome {
    let (report, took) = timed(|| compare_bounds(5, 1000, 1));
    let crossover = report.crossover.unwrap_or(f64::NAN);
    let pass = report.rv_cutoff == 72
        && report.c3_cutoff == 333
        && (crossover - 8.3).abs() <= 0.05
        && report.c3_better_ranges == [(9, 72)]
        && took < Duration::from_secs(1);
    Outcome::new(
        pass,
        format!(
            "RV cutoff {}, c=3 cutoff {}, crossover {crossover:.3}, c=3 better on {:?}, {took:.2?}",
            report.rv_cutoff, report.c3_cutoff, report.c3_better_ranges
        ),
    )
}

fn binomial(n: u64, t: u64) -> f64 {
    (0..t).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as f64
}

/// Direct k-domination formulas with δ̂ = δ − k + 1 and b = C(δ, k−1).
fn k_domination_oracle(k: u32, delta: usize) -> (f64, f64) {
    let hat = (delta as u64 + 1 - k as u64) as f64;
    let b = binomial(delta as u64, k as u64 - 1);
    let strong = 1.0 - hat / ((1.0 + hat).powf(1.0 + 1.0 / hat) * b.powf(1.0 / hat));
    let log = ((hat + 1.0).ln() + b.ln() + 1.0) / (hat + 1.0);
    (strong, log)
}

#[derive(Default)]
struct Identity {
    checked: usize,
    worst: f64,
    mismatched_applicability: usize,
}

impl Identity {
    fn record(&mut self, a: &multidom::BoundReport, b: &multidom::BoundReport) {
        if a.applicable != b.applicable {
            self.mismatched_applicability += 1;
        }
        if let (true, true, Some(x), Some(y)) = (a.applicable, b.applicable, a.coefficient, b.coefficient) {
            self.record_values(x, y);
        }
    }

    fn record_values(&mut self, x: f64, y: f64) {
        self.checked += 1;
        self.worst = self.worst.max(rel_err(x, y));
    }

    fn holds(&self) -> bool {
        self.checked > 0 && self.worst <= 1e-12
    }

    fn describe(&self, name: &str) -> String {
        let verdict = if self.holds() { "ok" } else { "VIOLATED" };
        format!(
            "{name} {verdict} ({} cases, max rel err {:.1e}, outside common domain {})",
            self.checked, self.worst, self.mismatched_applicability
        )
    }
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut classical = Identity::default();
    let mut rs_ktuple = Identity::default();
    let mut total_rs = Identity::default();
    let mut k_domination = Identity::default();
    let mut caro_roditty = Identity::default();
    let mut caro_yuster_ok = true;

    for delta in 1..=100usize {
        classical.record(&bound_rs_log(&[1], &[1], delta, 1), &bound_classical(delta, 1));

        let cr = bound_caro_roditty(delta, 1);
        let p11 = bound_parametric(1, 1, delta, 1);
        // CR is always applicable; the (1,1) form needs δ ≥ 2
        if let (Some(x), Some(y)) = (p11.strong.coefficient, cr.coefficient) {
            caro_roditty.record_values(x, y);
        }

        for k in 1..=(delta as u32).min(10) {
            rs_ktuple.record(&bound_rs(&[1], &[k], delta, 1), &bound_parametric_alt(k, k, delta, 1).strong);

            let total = bound_total_rs(&[1], &[k], delta, 1);
            let pkl = bound_parametric(k, k + 1, delta, 1);
            total_rs.record(&total.strong, &pkl.strong);
            total_rs.record(&total.log, &pkl.log);

            let alt = bound_parametric_alt(k, 1, delta, 1);
            let (strong, log) = k_domination_oracle(k, delta);
            if alt.strong.applicable {
                k_domination.record_values(alt.strong.coefficient.unwrap(), strong);
            }
            if alt.log.applicable {
                k_domination.record_values(alt.log.coefficient.unwrap(), log);
            }

            let expected = (k as f64) < (delta as f64).ln().sqrt();
            caro_yuster_ok &= applicability_caro_yuster(k, delta) == expected;
        }
    }
    caro_yuster_ok &= applicability_caro_yuster(2, 1000) && !applicability_caro_yuster(3, 1000);

    let took = start.elapsed();
    let all = [
        (&classical, "rs_log(1,1)=classical"),
        (&rs_ktuple, "rs(1,k)=alt(k,k)"),
        (&total_rs, "total_rs(1,k)=parametric(k,k+1)"),
        (&k_domination, "alt(k,1)=k-domination form"),
        (&caro_roditty, "parametric(1,1)=caro_roditty"),
    ];
    let holding = all.iter().filter(|(id, _)| id.holds()).count();
    let details: Vec<String> = all.iter().map(|(id, name)| id.describe(name)).collect();
    let pass = holding == all.len() && caro_yuster_ok && took < Duration::from_secs(5);
    Outcome::new(
        pass,
        format!(
            "{holding}/5 identities hold; {}; Caro-Yuster predicate {}",
            details.join("; "),
            if caro_yuster_ok { "ok" } else { "VIOLATED" }
        ),
    )
}

fn family(family: GraphFamily, seed: u64) -> Graph {
    generate(&GraphFamilySpec::new(family, seed)).expect("family parameters are valid")
}

/// 30 seeded G(n,p) graphs plus the named families: 50 graphs.
fn sandwich_graphs() -> Vec<(String, Graph)> {
    let mut graphs = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for seed in 0..30u64 {
        let n = 6 + (seed as usize % 9);
        let p = rng.gen_range(0.3..0.8);
        graphs.push((format!("G({n},{p:.2})#{seed}"), family(GraphFamily::Gnp { n, p }, seed)));
    }
    for n in 4..=9 {
        graphs.push((format!("C{n}"), family(GraphFamily::Cycle { n }, 0)));
    }
    for n in 3..=9 {
        graphs.push((format!("P{n}"), family(GraphFamily::Path { n }, 0)));
    }
    for n in 3..=8 {
        graphs.push((format!("K{n}"), family(GraphFamily::Complete { n }, 0)));
    }
    graphs.push(("Petersen".into(), family(GraphFamily::Petersen, 0)));
    graphs
}

fn exact_value(g: &Graph, spec: &DominationSpec) -> multidom::Result<u64> {
    if spec.is_set_type() {
        exact_set_number(g, spec, DEFAULT_SET_LIMIT).map(|r| r.value)
    } else {
        exact_function_number(g, spec, FunctionLimits { max_n: 14, max_nodes: 100_000_000 }).map(|r| r.value)
    }
}

fn criterion_4() -> Outcome {
    let specs: Vec<DominationSpec> =
        ["classical", "kdom:2", "ktuple:2", "ktuple:3", "totalk:1", "totalk:2", "bracek:2", "param:2,3"]
            .iter()
            .map(|s| s.parse().expect("spec literal"))
            .collect();
    let options = CatalogueOptions::with_thresholds([1.5, 2.0, 3.0, 0.3, 0.5]);
    let start = Instant::now();
    let graphs = sandwich_graphs();
    let (mut pairs, mut comparisons, mut violations, mut errors) = (0, 0, Vec::new(), Vec::new());
    for (name, g) in &graphs {
        for spec in &specs {
            if spec.check_feasible(g).is_err() {
                continue;
            }
            let exact = match exact_value(g, spec) {
                Ok(v) => v as f64,
                Err(e) => {
                    errors.push(format!("{name} {spec}: {e}"));
                    continue;
                }
            };
            pairs += 1;
            for row in catalogue(spec, g.min_degree(), g.n(), &options) {
                let Some(bound) = row.absolute.filter(|_| row.applicable) else {
                    continue;
                };
                comparisons += 1;
                if exact > bound + 1e-9 {
                    violations.push(format!("{name} {spec} {}: {exact} > {bound:.4}", row.name));
                }
            }
        }
    }
    let took = start.elapsed();
    let pass = graphs.len() == 50 && violations.is_empty() && errors.is_empty() && took < Duration::from_secs(120);
    let mut detail = format!(
        "{} graphs, {pairs} feasible (graph, spec) pairs, {comparisons} bound comparisons, {} violations, {} oracle errors",
        graphs.len(),
        violations.len(),
        errors.len()
    );
    for line in violations.iter().chain(&errors).take(5) {
        detail.push_str("; ");
        detail.push_str(line);
    }
    Outcome::new(pass, detail)
}

/// Minimum verified set size by enumerating every subset; `None` if no subset works.
fn brute_force(g: &Graph, spec: &DominationSpec) -> Option<u32> {
    spec.check_feasible(g).ok()?;
    (0u32..1 << g.n())
        .filter(|mask| {
            let set: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
            verify_set(g, spec, &set).unwrap().valid
        })
        .map(u32::count_ones)
        .min()
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let graphs: Vec<_> = sandwich_graphs().into_iter().filter(|(_, g)| g.n() <= 8).collect();
    let searched = |g: &Graph, spec: DominationSpec| exact_value(g, &spec).ok().map(|v| v as u32);
    let (mut checks, mut violations) = (0, Vec::new());
    for (name, g) in &graphs {
        let mut check = |label: String, left: Option<u32>, right: Option<u32>| {
            checks += 1;
            if left != right {
                violations.push(format!("{name} {label}: {left:?} vs {right:?}"));
            }
        };
        for k in 1..=3 {
            check(
                format!("γ_{{{k},1}}=γ_{k}"),
                searched(g, DominationSpec::Parametric { k, l: 1 }),
                brute_force(g, &DominationSpec::KDominating { k }),
            );
            check(
                format!("γ_{{{k},{k}}}=γ_x{k}"),
                searched(g, DominationSpec::Parametric { k, l: k }),
                brute_force(g, &DominationSpec::KTuple { k }),
            );
            check(
                format!("γ_{{{k},{}}}=γ_{k}^t", k + 1),
                searched(g, DominationSpec::Parametric { k, l: k + 1 }),
                brute_force(g, &DominationSpec::TotalK { k }),
            );
        }
        let gamma = brute_force(g, &DominationSpec::Classical);
        check("γ_{1,1}=γ".into(), searched(g, DominationSpec::Parametric { k: 1, l: 1 }), gamma);
        check("γ_{{1}}=γ".into(), searched(g, DominationSpec::BraceK { k: 1 }), gamma);
    }
    let took = start.elapsed();
    let pass = !graphs.is_empty() && violations.is_empty() && took < Duration::from_secs(60);
    let mut detail =
        format!("{} graphs with n ≤ 8, {checks} identity checks, {} violations", graphs.len(), violations.len());
    for line in violations.iter().take(5) {
        detail.push_str("; ");
        detail.push_str(line);
    }
    Outcome::new(pass, detail)
}

fn witness_valid(g: &Graph, spec: &DominationSpec, witness: &Witness) -> bool {
    match witness {
        Witness::Set(set) => verify_set(g, spec, set).is_ok_and(|r| r.valid),
        Witness::Values(values) => {
            let caps = spec.function_rule(g.n()).expect("function spec").caps;
            verify_function(g, spec, &VertexFunction::new(values.clone(), caps)).is_ok_and(|r| r.valid)
        }
    }
}

fn criterion_6() -> Outcome {
    const TRIALS: u64 = 200;
    let start = Instant::now();
    let g = family(GraphFamily::Gnp { n: 40, p: 0.3 }, 6);
    let n = g.n();
    let cases = [
        ("brace_2", DominationSpec::BraceK { k: 2 }),
        ("(2,2)", DominationSpec::Parametric { k: 2, l: 2 }),
        ("total <1,1>", DominationSpec::TotalRs { r: vec![1; n], s: vec![1; n] }),
    ];
    let mut pass = true;
    let mut parts = vec![format!("G(40,0.3) δ={}", g.min_degree())];
    for (label, spec) in cases {
        let construction = match Construction::new(&g, &spec) {
            Ok(c) => c,
            Err(e) => {
                pass = false;
                parts.push(format!("{label}: {e}"));
                continue;
            }
        };
        let trials = construction.run_trials(17, TRIALS);
        let valid = trials.iter().filter(|t| witness_valid(&g, &spec, &t.witness)).count();
        let mean = trials.iter().map(|t| t.weight as f64).sum::<f64>() / trials.len() as f64;
        let target = construction.target();
        pass &= trials.len() == TRIALS as usize && valid == trials.len() && mean <= target * 1.05;
        parts.push(format!("{label}: {valid}/{} valid, mean {mean:.2} vs bound {target:.2}", trials.len()));
    }
    let took = start.elapsed();
    pass &= took < Duration::from_secs(60);
    Outcome::new(pass, parts.join("; "))
}

fn strong_vs_log(strong: &multidom::BoundReport, log: &multidom::BoundReport) -> Option<bool> {
    match (strong.applicable && log.applicable, strong.coefficient, log.coefficient) {
        (true, Some(s), Some(l)) => Some(s <= l * (1.0 + 1e-12)),
        _ => None,
    }
}

fn criterion_7() -> Outcome {
    const TUPLES: usize = 500;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut counts = [0usize; 4];
    let mut violations = Vec::new();
    let mut draws = 0;
    while counts.iter().any(|&c| c < TUPLES) && draws < 100_000 {
        draws += 1;
        let delta = rng.gen_range(1..=300usize);
        let tau = rng.gen_range(1..=8u32);
        let s = rng.gen_range(1..=60u32);
        let k = rng.gen_range(1..=12u32);
        let l = rng.gen_range(1..=14u32);

        if counts[0] < TUPLES {
            if let Some(ok) = strong_vs_log(&bound_rs(&[tau], &[s], delta, 1), &bound_rs_log(&[tau], &[s], delta, 1)) {
                counts[0] += 1;
                if !ok {
                    violations.push(format!("rs τ={tau} s={s} δ={delta}"));
                }
            }
        }
        if counts[1] < TUPLES {
            let default = bound_rs_log(&[tau], &[s], delta, 1);
            let optimized = bound_rs_log_optimized(&[tau], &[s], delta, 1);
            if let (true, Some(d), Some(o)) = (default.applicable, default.coefficient, optimized.coefficient) {
                counts[1] += 1;
                if o > d * (1.0 + 1e-12) {
                    violations.push(format!("optimized r τ={tau} s={s} δ={delta}"));
                }
            }
        }
        if counts[2] < TUPLES {
            let forms = bound_parametric(k, l, delta, 1);
            if let Some(ok) = strong_vs_log(&forms.strong, &forms.log) {
                counts[2] += 1;
                if !ok {
                    violations.push(format!("parametric k={k} l={l} δ={delta}"));
                }
            }
        }
        if counts[3] < TUPLES {
            let forms = bound_parametric_alt(k, l, delta, 1);
            if let Some(ok) = strong_vs_log(&forms.strong, &forms.log) {
                counts[3] += 1;
                if !ok {
                    violations.push(format!("alt k={k} l={l} δ={delta}"));
                }
            }
        }
    }
    let pass = counts.iter().all(|&c| c == TUPLES) && violations.is_empty();
    let mut detail = format!(
        "rs {}, optimized-vs-default {}, parametric {}, alt {} tuples; {} violations",
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        violations.len()
    );
    for line in violations.iter().take(5) {
        detail.push_str("; ");
        detail.push_str(line);
    }
    Outcome::new(pass, detail)
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let output = Command::new(env!("CARGO_BIN_EXE_multidom")).args(args).output().map_err(|e| e.to_string())?;
    if output.status.success() {
        Ok(output.stdout)
    } else {
        Err(format!("{args:?} exited {}: {}", output.status, String::from_utf8_lossy(&output.stderr)))
    }
}

fn criterion_8() -> Outcome {
    let dir = match tempfile::tempdir() {
        Ok(d) => d,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let graph = dir.path().join("g.txt");
    let graph = graph.to_str().unwrap();
    let gen = ["gen", "--family", "gnp", "--n", "60", "--p", "0.15", "--seed", "41"];
    let construct_family = [
        "construct",
        "--family",
        "gnp",
        "--n",
        "60",
        "--p",
        "0.15",
        "--seed",
        "41",
        "--spec",
        "ktuple:2",
        "--trials",
        "64",
        "--no-timestamp",
    ];
    let construct_file = [
        "construct",
        "--graph",
        graph,
        "--spec",
        "bracek:2",
        "--seed",
        "3",
        "--trials",
        "64",
        "--verbose",
        "--no-timestamp",
    ];

    let check = || -> Result<Vec<String>, String> {
        let mut same = Vec::new();
        let first = run_cli(&gen)?;
        let second = run_cli(&gen)?;
        if first != second || first.is_empty() {
            return Err("gen output differs between runs".into());
        }
        std::fs::write(graph, &first).map_err(|e| e.to_string())?;
        same.push(format!("gen {} bytes", first.len()));

        let mut gen_to_file = gen.to_vec();
        gen_to_file.extend(["--out", graph]);
        run_cli(&gen_to_file)?;
        if std::fs::read(graph).map_err(|e| e.to_string())? != first {
            return Err("gen --out differs from stdout".into());
        }

        for args in [&construct_family[..], &construct_file[..]] {
            let a = run_cli(args)?;
            let b = run_cli(args)?;
            if a != b {
                return Err(format!("{} output differs between runs", args[..3].join(" ")));
            }
            same.push(format!("construct {} bytes", a.len()));
        }
        Ok(same)
    };
    match check() {
        Ok(same) => Outcome::new(true, format!("byte-identical reruns: {}", same.join(", "))),
        Err(e) => Outcome::new(false, e),
    }
}
