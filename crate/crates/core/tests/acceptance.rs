use std::time::{Duration, Instant};

use envlab::charlattice::{fc_equivalent, DEFAULT_BUDGET};
use envlab::fieldcore::hom::commutant;
use envlab::fieldcore::meataxe::{distinct_factors, is_absolutely_irreducible};
use envlab::fieldcore::{Field, FieldRef, Mat, MeatAxeConfig, ModuleRep};
use envlab::groups::{corpus, diagonal_torus, sl2};
use envlab::mackey::{
    clifford_decompose, disjoint, induced_commutant_dim, irreducible_modules, is_normal, mackey_irreducible, subgroups,
};
use envlab::nori::{nilpotent_exp, nori_points, unipotent_log, NoriConfig};
use envlab::smallrep::{freudenthal_weights, table_a, IrrepLabel, SimpleType, TableARow};
use envlab::tame::{tame_weights_of_rep, TameCharacter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn row<'a>(rows: &'a [TableARow], label: &str) -> Result<&'a TableARow, String> {
    rows.iter().find(|r| r.label == label).ok_or_else(|| format!("missing row {label}"))
}

fn table_a_regeneration() -> Outcome {
    let expected = [(2, vec!["(2A1)"]), (3, vec!["(3A1)", "(3A2)"]), (4, vec!["(4A1)", "(2A1⊗2A1)", "(4B2)", "(4A3)"]),
        (5, vec!["(5A1)", "(5B2)", "(5A4)"]),
        (6, vec!["(6A1)", "(2A1⊗3A1)", "(6A3)", "(6C3)", "(6A2)", "(2A1⊗3A2)", "(6A5)"])];
    let not_self_dual = ["(3A2)", "(4A3)", "(5A4)", "(6A2)", "(2A1⊗3A2)", "(6A5)"];
    let mut total = 0;
    for (n, labels) in expected {
        let rows = table_a(n).map_err(|e| e.to_string())?;
        let got: Vec<&str> = rows.iter().map(|r| r.label.as_str()).collect();
        ensure(got == labels, || format!("n = {n}: {got:?}"))?;
        for r in &rows {
            ensure(r.self_dual != not_self_dual.contains(&r.label.as_str()), || format!("self-duality of {}", r.label))?;
        }
        total += rows.len();
    }
    ensure(total == 17, || format!("{total} rows"))?;
    let zeros = |n, label: &str| -> Result<usize, String> { Ok(row(&table_a(n).unwrap(), label)?.zero_weight_count) };
    ensure(zeros(3, "(3A1)")? == 1, || "(3A1) zeros".into())?;
    ensure(zeros(5, "(5B2)")? == 1, || "(5B2) zeros".into())?;
    ensure(zeros(4, "(4B2)")? == 0, || "(4B2) zeros".into())
}

fn nori_correctness() -> Outcome {
    let cfg = NoriConfig::default();
    for ell in [5u64, 7, 11, 13] {
        let f = Field::new(ell, 1).unwrap();
        let g = sl2(&f);
        let r = nori_points(&g, &cfg).map_err(|e| e.to_string())?;
        let order = r.order;
        ensure(r.plus_order() == order, || format!("ell = {ell}: |G+| = {}", r.plus_order()))?;
        ensure(r.nori_order() == order, || format!("ell = {ell}: |S(F_l)| = {}", r.nori_order()))?;
        ensure(r.quotient_order == 1 && r.quotient_order <= 2, || format!("ell = {ell}: quotient {}", r.quotient_order))?;
        let torus = nori_points(&diagonal_torus(&f, 2), &cfg).map_err(|e| e.to_string())?;
        ensure(torus.plus_order() == 1 && torus.nori_order() == 1, || format!("ell = {ell}: torus Nori nontrivial"))?;
    }
    Ok(())
}

fn random_unipotent(f: &FieldRef, n: usize, rng: &mut ChaCha8Rng) -> Mat {
    let ell = f.ell();
    let mut u = Mat::identity(f, n);
    for i in 0..n {
        for j in i + 1..n {
            u.set(i, j, rng.gen_range(0..ell));
        }
    }
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..ell)).collect();
        let p = Mat::from_elems(f, n, n, data).unwrap();
        if let Some(pi) = p.inverse() {
            return p.mul(&u).mul(&pi);
        }
    }
}

fn exp_log_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..1000 {
        let ell = [5u64, 7, 11][k % 3];
        let n = 1 + (k / 3) % 4;
        let f = Field::new(ell, 1).unwrap();
        let x = random_unipotent(&f, n, &mut rng);
        let log = unipotent_log(&x).map_err(|e| e.to_string())?;
        ensure(nilpotent_exp(&log).unwrap() == x, || format!("exp(log x) != x for {x:?}"))?;
        let t = rng.gen_range(0..ell as u32);
        let s = rng.gen_range(0..ell as u32);
        let xt = nilpotent_exp(&log.scale(t)).unwrap();
        let xs = nilpotent_exp(&log.scale(s)).unwrap();
        let xts = nilpotent_exp(&log.scale(f.add(t, s))).unwrap();
        ensure(xt.mul(&xs) == xts, || format!("x^t x^s != x^(t+s) for {x:?}"))?;
        ensure(xt == x.pow(t as u128), || "x^t differs from the t-th power".into())?;
    }
    Ok(())
}

fn restricted_bijection() -> Outcome {
    for (ell, d) in [(5u64, 1u32), (5, 2), (5, 3), (7, 2)] {
        let m = ell.pow(d) - 1;
        let mut seen = std::collections::HashSet::new();
        for e in 0..m {
            let chi = TameCharacter::new(ell, d, e).map_err(|e| e.to_string())?;
            let digits = chi.digits();
            ensure(!digits.iter().all(|&x| x == ell - 1), || format!("all-(l-1) string for e = {e}"))?;
            let back = TameCharacter::from_digits(ell, &digits).map_err(|e| e.to_string())?;
            ensure(back == chi, || format!("round trip failed for ({ell}, {d}, {e})"))?;
            seen.insert(digits);
        }
        ensure(seen.len() as u64 == m, || format!("({ell}, {d}): {} strings", seen.len()))?;
        let top = vec![ell - 1; d as usize];
        ensure(TameCharacter::from_digits(ell, &top).is_err(), || "all-(l-1) string accepted".into())?;
    }
    Ok(())
}

fn mackey_oracle() -> Result<String, String> {
    let cfg = MeatAxeConfig::default();
    let (mut tuples, mut agree) = (0usize, 0usize);
    let mut disagreements = Vec::new();
    for entry in corpus() {
        for sub in subgroups(&entry.group).map_err(|e| e.to_string())? {
            for w in irreducible_modules(sub.subgroup(), &entry.module_field, &cfg).map_err(|e| e.to_string())? {
                tuples += 1;
                let verdict = mackey_irreducible(&sub, &w, &cfg).map_err(|e| e.to_string())?;
                let brute = induced_commutant_dim(&sub, &w).map_err(|e| e.to_string())? == 1;
                let absolute = is_absolutely_irreducible(&envlab::mackey::induce(&sub, &w).unwrap(), &cfg).unwrap();
                if verdict.irreducible == brute && brute == absolute {
                    agree += 1;
                } else if disagreements.len() < 5 {
                    disagreements.push(format!("{} index {}", entry.name, sub.index()));
                }
            }
        }
    }
    ensure(agree == tuples, || format!("{agree}/{tuples} agree; first: {disagreements:?}"))?;
    Ok(format!("{tuples} tuples"))
}

fn clifford_shape() -> Result<String, String> {
    let cfg = MeatAxeConfig::default();
    let mut count = 0;
    for entry in corpus() {
        let irr = irreducible_modules(&entry.group, &entry.module_field, &cfg).map_err(|e| e.to_string())?;
        for sub in subgroups(&entry.group).map_err(|e| e.to_string())? {
            if !is_normal(&sub).unwrap() {
                continue;
            }
            for v in &irr {
                let s = clifford_decompose(&entry.group, sub.subgroup().generators(), v, &cfg)
                    .map_err(|e| format!("{}: {e}", entry.name))?;
                count += 1;
                let du = s.factor_dim();
                ensure(s.e * s.f * du == v.dim(), || format!("{}: e f dim U != dim V", entry.name))?;
                ensure(s.factors.iter().all(|u| u.dim() == du), || format!("{}: unequal factor dims", entry.name))?;
                for i in 0..s.e {
                    for j in 0..i {
                        ensure(disjoint(&s.factors[i], &s.factors[j]).unwrap(), || format!("{}: isomorphic factors", entry.name))?;
                    }
                }
                ensure(s.transitive, || format!("{}: blocks not permuted transitively", entry.name))?;
            }
        }
    }
    Ok(format!("{count} decompositions"))
}

fn commutant_law() -> Outcome {
    let cfg = MeatAxeConfig::default();
    let pools: Vec<(String, Vec<ModuleRep>)> = corpus()
        .into_iter()
        .filter(|e| e.group.order().unwrap() <= 24)
        .map(|e| {
            let irr: Vec<ModuleRep> = irreducible_modules(&e.group, &e.module_field, &cfg)
                .unwrap()
                .into_iter()
                .filter(|m| is_absolutely_irreducible(m, &cfg).unwrap())
                .collect();
            (e.name.to_string(), irr)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..50 {
        let (name, pool) = &pools[rng.gen_range(0..pools.len())];
        let parts = rng.gen_range(1..=3);
        let chosen: Vec<usize> = (0..parts).map(|_| rng.gen_range(0..pool.len())).collect();
        let mut sum = pool[chosen[0]].clone();
        for &c in &chosen[1..] {
            sum = sum.direct_sum(&pool[c]).unwrap();
        }
        let f = sum.field().clone();
        let n = sum.dim();
        let p = loop {
            let data = (0..n * n).map(|_| rng.gen_range(0..f.order())).collect();
            let p = Mat::from_elems(&f, n, n, data).unwrap();
            if p.is_invertible() {
                break p;
            }
        };
        let scrambled = sum.conjugate_by(&p).unwrap();
        let mut mult = std::collections::BTreeMap::new();
        for c in &chosen {
            *mult.entry(*c).or_insert(0usize) += 1;
        }
        let expected: usize = mult.values().map(|m| m * m).sum();
        let got = commutant(&scrambled).unwrap().1;
        ensure(got == expected, || format!("trial {trial} ({name}): dim End = {got}, expected {expected}"))?;
        let classes = distinct_factors(&scrambled, &cfg).unwrap();
        ensure(classes.len() == mult.len(), || format!("trial {trial}: {} classes", classes.len()))?;
    }
    Ok(())
}

fn formal_character_facts() -> Outcome {
    let t4 = table_a(4).unwrap();
    let t6 = table_a(6).unwrap();
    let eq = |a: &TableARow, b: &TableARow| fc_equivalent(&a.formal_char, &b.formal_char, DEFAULT_BUDGET).decided();
    ensure(eq(row(&t4, "(4B2)")?, row(&t4, "(2A1⊗2A1)")?) == Some(true), || "(4B2) vs (2A1⊗2A1)".into())?;
    ensure(eq(row(&t6, "(6A3)")?, row(&t6, "(6C3)")?) == Some(true), || "(6A3) vs (6C3)".into())?;
    ensure(eq(row(&t4, "(4A1)")?, row(&t4, "(4B2)")?) == Some(false), || "(4A1) vs (4B2)".into())?;
    ensure(row(&t6, "(2A1⊗3A1)")?.formal_char.has_midpoint_relation(), || "(2A1⊗3A1) lacks w1+w2=2w3".into())?;
    let a2 = SimpleType::parse("A2").unwrap();
    let std = freudenthal_weights(&IrrepLabel::simple(a2, vec![1, 0]).unwrap()).unwrap();
    let dual = freudenthal_weights(&IrrepLabel::simple(a2, vec![0, 1]).unwrap()).unwrap();
    let both = std.union(&dual).unwrap();
    ensure(!both.has_midpoint_relation(), || "SL_3 std+dual has w1+w2=2w3".into())
}

fn tame_cyclotomic_anchor() -> Outcome {
    let cfg = MeatAxeConfig::default();
    for ell in [5u64, 7, 11, 13] {
        let f = Field::new(ell, 1).unwrap();
        let g = Mat::diagonal(&f, &[f.generator()]);
        let w = tame_weights_of_rep(&g, &cfg).map_err(|e| e.to_string())?;
        ensure(w.digits == vec![1], || format!("ell = {ell}: {:?}", w.digits))?;
    }
    Ok(())
}

fn report(id: usize, name: &str, limit: Duration, outcome: Result<String, String>, start: Instant) -> bool {
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if elapsed <= limit => (true, d),
        Ok(d) => (false, format!("{d}; exceeded {limit:?}")),
        Err(e) => (false, e),
    };
    let tag = if ok { "PASS" } else { "FAIL" };
    let detail = if detail.is_empty() { String::new() } else { format!(" ({detail})") };
    println!("acceptance {id} {name}: {tag} [{:.2}s]{detail}", elapsed.as_secs_f64());
    ok
}

fn main() {
    let unit = |r: Outcome| r.map(|()| String::new());
    type Check = Box<dyn Fn() -> Result<String, String>>;
    let checks: Vec<(&str, Duration, Check)> = vec![
        ("table A regeneration", Duration::from_secs(10), Box::new(move || unit(table_a_regeneration()))),
        ("Nori correctness", Duration::from_secs(120), Box::new(move || unit(nori_correctness()))),
        ("exp/log round trip", Duration::from_secs(10), Box::new(move || unit(exp_log_round_trip()))),
        ("l-restricted bijection", Duration::from_secs(5), Box::new(move || unit(restricted_bijection()))),
        ("Mackey oracle equivalence", Duration::from_secs(600), Box::new(mackey_oracle)),
        ("Clifford shape", Duration::from_secs(600), Box::new(clifford_shape)),
        ("commutant law", Duration::from_secs(600), Box::new(move || unit(commutant_law()))),
        ("formal-character facts", Duration::from_secs(600), Box::new(move || unit(formal_character_facts()))),
        ("tame cyclotomic anchor", Duration::from_secs(600), Box::new(move || unit(tame_cyclotomic_anchor()))),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        if !report(i + 1, name, *limit, check(), start) {
            failed += 1;
        }
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
