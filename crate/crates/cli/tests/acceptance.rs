//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use gotas_core::oracle::{random_space, random_unordered_space};
use gotas_core::{
    unordered_lower, unordered_upper, Approximations, Direction, Family, Gotas, SpaceDocument,
    Subset,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const CHECK_BUDGET: Duration = Duration::from_secs(60);
const CHECK_SPACES: usize = 60;
const ORACLE_SPACES: usize = 120;
const REDUCTION_SPACES: usize = 30;
const SEED: u64 = 0x6074_5eed;

type Verdict = Result<String, String>;

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/ex-3-24.json")
}

fn gotas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gotas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn load(path: &Path) -> Gotas {
    let text = std::fs::read_to_string(path).unwrap();
    SpaceDocument::from_json(&text).unwrap().build().unwrap()
}

fn labels(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_str().unwrap().to_string())
        .collect()
}

fn all_subsets(space: &Gotas) -> Vec<Subset> {
    space.universe().powerset().unwrap().collect()
}

/// Writes `spaces` as documents into `dir`, returning the paths.
fn write_spaces(dir: &Path, prefix: &str, spaces: &[Gotas]) -> Vec<PathBuf> {
    spaces
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let path = dir.join(format!("{prefix}-{i:03}.json"));
            std::fs::write(&path, SpaceDocument::from_space(s).to_json()).unwrap();
            path
        })
        .collect()
}

fn c1_golden() -> Verdict {
    let start = Instant::now();
    let space = load(&fixture());
    let a = space.subset(["a", "c"]).unwrap();
    let set = |labels: &[&str]| space.subset(labels.iter().copied()).unwrap();
    let (inc, dec) = (Direction::Inc, Direction::Dec);
    use Family::*;
    let u = set(&["a", "b", "c", "d"]);
    let expected: Vec<(&str, Subset, Subset)> = vec![
        ("R_Dec(A)", space.r_lower(&a, dec), set(&["a"])),
        ("R̄^Dec(R_Dec(A))", space.r_upper(&space.r_lower(&a, dec), dec), set(&["a", "b"])),
        ("R̄^Dec(A)", space.r_upper(&a, dec), u.clone()),
        ("R_Dec(R̄^Dec(A))", space.r_lower(&space.r_upper(&a, dec), dec), u.clone()),
        ("S_Dec(A)", space.lower(Semi, &a, dec), set(&["a"])),
        ("S̄^Dec(A)", space.upper(Semi, &a, dec), u.clone()),
        ("B_SDec", space.boundary(Semi, &a, dec), set(&["b", "c", "d"])),
        ("Neg_SInc", space.negative(Semi, &a, inc), set(&[])),
        ("γ_Dec(A)", space.lower(Gamma, &a, dec), set(&["a", "c"])),
        ("γ̄^Dec(A)", space.upper(Gamma, &a, dec), u.clone()),
        ("B_γDec", space.boundary(Gamma, &a, dec), set(&["b", "d"])),
        ("Neg_γInc", space.negative(Gamma, &a, inc), set(&[])),
        ("β_Dec(A)", space.lower(Beta, &a, dec), set(&["a", "c"])),
        ("β̄^Dec(A)", space.upper(Beta, &a, dec), set(&["a", "b", "c"])),
        ("B_βDec", space.boundary(Beta, &a, dec), set(&["b"])),
        ("Neg_βInc", space.negative(Beta, &a, inc), set(&["d"])),
    ];
    let mut wrong: Vec<String> = expected
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(name, got, want)| format!("{name} = {got}, expected {want}"))
        .collect();

    // The same values through the binary.
    let out = gotas(&["analyze", fixture().to_str().unwrap(), "--set", "a,c", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let row = |family: &str, dir: &str| {
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["family"] == family && r["direction"] == dir)
            .cloned()
            .unwrap()
    };
    let cli: Vec<(&str, Value, &[&str])> = vec![
        ("cli R_Dec(A)", row("R", "Dec")["lower"].clone(), &["a"]),
        ("cli R̄^Dec(A)", row("R", "Dec")["upper"].clone(), &["a", "b", "c", "d"]),
        ("cli S_Dec(A)", row("S", "Dec")["lower"].clone(), &["a"]),
        ("cli S̄^Dec(A)", row("S", "Dec")["upper"].clone(), &["a", "b", "c", "d"]),
        ("cli B_SDec", row("S", "Dec")["boundary"].clone(), &["b", "c", "d"]),
        ("cli Neg_SInc", row("S", "Inc")["negative"].clone(), &[]),
        ("cli γ_Dec(A)", row("Gamma", "Dec")["lower"].clone(), &["a", "c"]),
        ("cli γ̄^Dec(A)", row("Gamma", "Dec")["upper"].clone(), &["a", "b", "c", "d"]),
        ("cli B_γDec", row("Gamma", "Dec")["boundary"].clone(), &["b", "d"]),
        ("cli Neg_γInc", row("Gamma", "Inc")["negative"].clone(), &[]),
        ("cli β_Dec(A)", row("Beta", "Dec")["lower"].clone(), &["a", "c"]),
        ("cli β̄^Dec(A)", row("Beta", "Dec")["upper"].clone(), &["a", "b", "c"]),
        ("cli B_βDec", row("Beta", "Dec")["boundary"].clone(), &["b"]),
        ("cli Neg_βInc", row("Beta", "Inc")["negative"].clone(), &["d"]),
    ];
    for (name, got, want) in cli {
        if labels(&got) != want {
            wrong.push(format!("{name} = {got}, expected {want:?}"));
        }
    }
    let elapsed = start.elapsed();
    if !wrong.is_empty() {
        return Err(wrong.join("; "));
    }
    if elapsed >= GOLDEN_BUDGET {
        return Err(format!("took {elapsed:?}, budget {GOLDEN_BUDGET:?}"));
    }
    Ok(format!("30 values match in {elapsed:.2?}"))
}

fn c2_topology() -> Verdict {
    let out = gotas(&["topology", fixture().to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let opens: Vec<Vec<String>> = v["opens"].as_array().unwrap().iter().map(labels).collect();
    let expected: Vec<Vec<String>> = [
        &[][..],
        &["a"],
        &["a", "b"],
        &["c", "d"],
        &["a", "c", "d"],
        &["a", "b", "c", "d"],
    ]
    .iter()
    .map(|s| s.iter().map(|l| l.to_string()).collect())
    .collect();
    if opens == expected {
        Ok("6 opens".into())
    } else {
        Err(format!("got {opens:?}"))
    }
}

struct CheckRun {
    path: PathBuf,
    reports: Vec<Value>,
}

/// Runs `gotas check --exhaustive` on the fixture and the random spaces.
fn run_checks(paths: &[PathBuf]) -> Result<(Vec<CheckRun>, Duration), String> {
    let start = Instant::now();
    let mut runs = Vec::new();
    for path in paths {
        let out = gotas(&["check", path.to_str().unwrap(), "--exhaustive", "--format", "json"]);
        if !matches!(out.status.code(), Some(0 | 1)) {
            return Err(format!(
                "{}: {}",
                path.display(),
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        runs.push(CheckRun {
            path: path.clone(),
            reports: v["reports"].as_array().unwrap().clone(),
        });
    }
    Ok((runs, start.elapsed()))
}

fn c3_propositions(runs: &[CheckRun], elapsed: Duration) -> Verdict {
    let mut failing: std::collections::BTreeMap<String, (usize, usize)> = Default::default();
    let mut total = 0;
    let mut first: Option<String> = None;
    for run in runs {
        for r in &run.reports {
            let n = r["violations"].as_array().unwrap().len();
            if n > 0 {
                total += n;
                let entry = failing.entry(r["id"].as_str().unwrap().into()).or_default();
                entry.0 += 1;
                entry.1 += n;
                if first.is_none() {
                    let v = &r["violations"][0];
                    first = Some(format!(
                        "{} in {} at A = {} ({}): {}",
                        r["id"].as_str().unwrap(),
                        run.path.file_name().unwrap().to_string_lossy(),
                        v["a"].as_str().unwrap(),
                        v["direction"].as_str().unwrap(),
                        v["detail"].as_str().unwrap()
                    ));
                }
            }
        }
    }
    let spaces = runs.len();
    if total == 0 && elapsed < CHECK_BUDGET {
        return Ok(format!("{spaces} spaces, 0 violations, {elapsed:.2?}"));
    }
    let mut msg = format!("{spaces} spaces, {total} violations in {elapsed:.2?}");
    for (id, (in_spaces, n)) in &failing {
        msg += &format!("; {id}: {n} in {in_spaces} spaces");
    }
    if let Some(first) = first {
        msg += &format!("; first: {first}");
    }
    if elapsed >= CHECK_BUDGET {
        msg += &format!("; over budget {CHECK_BUDGET:?}");
    }
    Err(msg)
}

fn c4_oracle(dir: &Path) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let spaces: Vec<Gotas> = (0..ORACLE_SPACES)
        .map(|i| random_space(&mut rng, 1 + i % 4))
        .collect();
    let mut comparisons = 0;
    for path in write_spaces(dir, "oracle", &spaces) {
        let out = gotas(&["oracle-diff", path.to_str().unwrap(), "--format", "json"]);
        let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let mismatches = v["mismatches"].as_array().unwrap();
        if !out.status.success() || !mismatches.is_empty() {
            return Err(format!("{}: {}", path.display(), mismatches[0]));
        }
        comparisons += v["comparisons"].as_u64().unwrap();
    }
    Ok(format!("{ORACLE_SPACES} spaces, {comparisons} comparisons, 0 mismatches"))
}

fn c5_equality_order() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut comparisons = 0;
    for i in 0..REDUCTION_SPACES {
        let space = random_unordered_space(&mut rng, 1 + i % 6);
        let t = space.topology();
        for a in all_subsets(&space) {
            for f in Family::ALL {
                for d in Direction::ALL {
                    comparisons += 2;
                    if space.lower(f, &a, d) != unordered_lower(t, f, &a)
                        || space.upper(f, &a, d) != unordered_upper(t, f, &a)
                    {
                        return Err(format!("space {i}, {f} {d}, A = {a}"));
                    }
                }
            }
        }
    }
    Ok(format!("{REDUCTION_SPACES} spaces, {comparisons} comparisons"))
}

fn c6_partitions() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut comparisons = 0;
    for i in 0..REDUCTION_SPACES {
        let n = 1 + i % 6;
        let class_of: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let names: Vec<String> = (0..n).map(|x| format!("x{x}")).collect();
        let relation = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| class_of[x] == class_of[y])
            .map(|(x, y)| (names[x].clone(), names[y].clone()))
            .collect();
        let doc = SpaceDocument {
            universe: names.clone(),
            relation: Some(relation),
            base: None,
            order: Vec::new(),
            options: Default::default(),
        };
        let space = doc.build().map_err(|e| e.to_string())?;
        for mask in 0u64..(1 << n) {
            let inside = |x: usize| mask >> x & 1 == 1;
            // Pawlak: a class is in the lower approximation when all its
            // members are in A, in the upper when any member is.
            let lower: Vec<&str> = (0..n)
                .filter(|&x| (0..n).all(|y| class_of[y] != class_of[x] || inside(y)))
                .map(|x| names[x].as_str())
                .collect();
            let upper: Vec<&str> = (0..n)
                .filter(|&x| (0..n).any(|y| class_of[y] == class_of[x] && inside(y)))
                .map(|x| names[x].as_str())
                .collect();
            let a = space.universe().subset_from_mask(mask).unwrap();
            for d in Direction::ALL {
                comparisons += 2;
                if space.r_lower(&a, d).labels() != lower || space.r_upper(&a, d).labels() != upper
                {
                    return Err(format!("partition {class_of:?}, {d}, A = {a}"));
                }
            }
        }
    }
    Ok(format!("{REDUCTION_SPACES} partitions, {comparisons} comparisons"))
}

fn c7_accuracy(runs: &[CheckRun]) -> Verdict {
    let mut instances = 0;
    for run in runs {
        for id in ["3.23", "3.28a"] {
            let r = run.reports.iter().find(|r| r["id"] == id).unwrap();
            if !r["violations"].as_array().unwrap().is_empty() {
                return Err(format!("{} reports {id}: {}", run.path.display(), r["violations"][0]));
            }
        }
        // Recompute the chain directly with exact cross-multiplication.
        let space = load(&run.path);
        let ratio = |f: Family, a: &Subset, d: Direction| {
            let upper = space.upper(f, a, d).len() as u64;
            (space.lower(f, a, d).len() as u64, upper)
        };
        let le = |(p, q): (u64, u64), (r, s): (u64, u64)| p * s <= r * q;
        for a in all_subsets(&space).into_iter().filter(|a| !a.is_empty()) {
            for d in Direction::ALL {
                instances += 1;
                let r = ratio(Family::R, &a, d);
                let g = ratio(Family::Gamma, &a, d);
                let b = ratio(Family::Beta, &a, d);
                if !(le(r, g) && le(g, b)) {
                    return Err(format!(
                        "{}: A = {a} {d}: R {r:?}, γ {g:?}, β {b:?}",
                        run.path.display()
                    ));
                }
            }
        }
    }
    Ok(format!("{} spaces, {instances} instances", runs.len()))
}

fn c8_mutation() -> Verdict {
    let out = gotas(&["check", fixture().to_str().unwrap(), "--exhaustive", "--corrupt-gamma", "outer"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let fails = text.lines().filter(|l| l.split_whitespace().nth(2) == Some("FAIL")).count();
    if out.status.code() == Some(1) && fails > 0 {
        Ok(format!("{fails} propositions fail, exit 1"))
    } else {
        Err(format!("exit {:?}, {fails} FAIL rows", out.status.code()))
    }
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let random: Vec<Gotas> = (0..CHECK_SPACES)
        .map(|i| random_space(&mut rng, 3 + i % 3))
        .collect();
    let mut paths = vec![fixture()];
    paths.extend(write_spaces(dir.path(), "check", &random));
    let checks = run_checks(&paths);

    let criteria: Vec<(&str, Verdict)> = vec![
        ("C1 golden example values", c1_golden()),
        ("C2 topology generation", c2_topology()),
        (
            "C3 proposition suite",
            checks
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|(runs, t)| c3_propositions(runs, *t)),
        ),
        ("C4 oracle equivalence", c4_oracle(dir.path())),
        ("C5 equality-order reduction", c5_equality_order()),
        ("C6 Pawlak partitions", c6_partitions()),
        (
            "C7 accuracy chain",
            checks.as_ref().map_err(Clone::clone).and_then(|(runs, _)| c7_accuracy(runs)),
        ),
        ("C8 mutation sensitivity", c8_mutation()),
    ];
    let mut failed = 0;
    for (name, verdict) in &criteria {
        match verdict {
            Ok(msg) => println!("[PASS] {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name}: {msg}");
            }
        }
    }
    println!("{} criteria: {} PASS, {failed} FAIL", criteria.len(), criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
