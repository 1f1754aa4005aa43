//! Acceptance suite: one line per criterion. All comparisons are exact
//! (tolerance 0); the process exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use w0_core::cli::verify_golden;
use w0_core::linalg::{q, qf, Vector, Q};
use w0_core::oracle::{
    adjoint_highest_weights, adjoint_rep, oracle_w0_on_invariants, sym2_highest_weight, sym2_standard_rep,
};
use w0_core::orthoset::{check_type, restricted_types};
use w0_core::realforms::lookup;
use w0_core::reducer::{complex_w0_action, label_grid, quasi_split_agrees, reducer, w0_action, W0Action};
use w0_core::so1n::{so1n_dim, so1n_sign, so1n_system, tableau_unique, So1nWeight};
use w0_core::subalg::golden::GoldenTable;
use w0_core::{CartanType, Family, RootSystem};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

/// Dominant integral weights of `sys` whose ε-coordinates are bounded by `max`
/// in absolute value, stepping by 1/2.
fn bounded_weights(sys: &RootSystem, max: i64) -> Vec<Vector> {
    let vals: Vec<Q> = (-2 * max..=2 * max).map(|k| qf(k, 2)).collect();
    let n = sys.ambient_dim;
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let v = Vector(idx.iter().map(|&i| vals[i]).collect());
        if sys.check_dominant_weight(&v).is_ok() {
            out.push(v);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            idx[k] += 1;
            if idx[k] < vals.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for n in 2..=7usize {
        let name = format!("so(1,{n})");
        let r = reducer(&name).map_err(|e| e.to_string())?;
        let sys = so1n_system(n).map_err(|e| e.to_string())?;
        for lambda in bounded_weights(&sys, 6) {
            if lambda[0] > q(6) {
                continue;
            }
            let w = So1nWeight::new(n, lambda.clone()).map_err(|e| e.to_string())?;
            let closed = so1n_dim(&w) as u64;
            let brute = r.l_invariant_dim(&lambda).map_err(|e| e.to_string())?;
            if closed != brute {
                return Err(format!("{name} at {lambda}: closed form {closed}, l-branching {brute}"));
            }
            count += 1;
        }
    }
    let mut tableaux = 0;
    for l1 in 0..=12i64 {
        for l2 in 0..=l1 {
            if l1 + l2 > 12 || (l1 + l2) % 2 != 0 {
                continue;
            }
            if !tableau_unique(l1, l2) {
                return Err(format!("tableau for ({l1}, {l2}) is not unique"));
            }
            tableaux += 1;
        }
    }
    Ok(format!("{count} weights over n = 2..7, {tableaux} unique tableaux"))
}

fn criterion_2() -> Outcome {
    let forms = [
        "so(1,2)", "so(1,3)", "so(1,4)", "so(1,5)", "so(1,6)", "sl(2,R)", "sl(3,R)", "su(1,2)", "sp(2·2,R)",
    ];
    let mut checks = 0;
    for name in forms {
        let f = lookup(name).map_err(|e| e.to_string())?;
        let sys = &f.datum().ok_or("complex form")?.complex_system;
        let rep = adjoint_rep(&f).map_err(|e| e.to_string())?;
        let got = oracle_w0_on_invariants(&rep, &f).map_err(|e| format!("{name}: {e}"))?;
        let mut want = W0Action::new(0, 0);
        for l in adjoint_highest_weights(sys) {
            let a = w0_action(name, &l).map_err(|e| e.to_string())?;
            want = W0Action::new(want.plus + a.plus, want.minus + a.minus);
        }
        if got != want {
            return Err(format!("{name} adjoint: oracle {got}, reducer {want}"));
        }
        if name == "sl(3,R)" && (got.plus, got.minus) != (1, 1) {
            return Err(format!("sl(3,R) adjoint is {got}, expected +1:1, -1:1"));
        }
        checks += 1;
        if name.starts_with("so(") {
            let rep = sym2_standard_rep(&f).map_err(|e| e.to_string())?;
            let got = oracle_w0_on_invariants(&rep, &f).map_err(|e| format!("{name}: {e}"))?;
            let want = w0_action(name, &sym2_highest_weight(sys)).map_err(|e| e.to_string())?;
            if got != want {
                return Err(format!("{name} Sym²: oracle {got}, reducer {want}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} representations agree"))
}

fn criterion_3() -> Outcome {
    let types = restricted_types(8);
    for &t in &types {
        let (set, v) = check_type(t).map_err(|e| format!("{t}: {e}"))?;
        if !v.passed() {
            return Err(format!("{t}: {}", v.describe(&set.roots)));
        }
    }
    Ok(format!("{} restricted types", types.len()))
}

fn criterion_4() -> Outcome {
    let report = verify_golden(GoldenTable::builtin(), 8, false);
    if let Some(bad) = report.rows.iter().find(|r| !r.passed) {
        return Err(format!("{}:{}", bad.form, bad.detail));
    }
    let footnotes = ["so(2,4)", "so(3,3)", "so(4,6)", "so(3,5)", "so(5,7)"];
    for f in footnotes {
        if !report.rows.iter().any(|r| r.form == f) {
            return Err(format!("footnote case {f} was not checked"));
        }
    }
    let table2 = report.rows.iter().filter(|r| r.table == 2).count();
    Ok(format!("{} rows ({table2} exceptional), footnote cases included", report.rows.len()))
}

fn star_weights(n: usize, max: i64) -> Vec<Vector> {
    if n == 2 {
        return (0..=max).map(|a| Vector::from_ints(&[a])).collect();
    }
    let dim = so1n_system(n).unwrap().ambient_dim;
    let mut out = Vec::new();
    for l1 in 0..=max {
        let lo = if n == 3 { -l1 } else { 0 };
        for l2 in lo..=l1 {
            if (l1 + l2) % 2 == 0 {
                let mut v = vec![0; dim];
                v[0] = l1;
                v[1] = l2;
                out.push(Vector::from_ints(&v));
            }
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let mut pairs = 0;
    for n in 2..=7usize {
        let name = format!("so(1,{n})");
        let sign = |v: &Vector| -> Result<i32, String> {
            let a = w0_action(&name, v).map_err(|e| e.to_string())?;
            let s = match (a.plus, a.minus) {
                (1, 0) => 1,
                (0, 1) => -1,
                _ => return Err(format!("{name} at {v}: not a (*)-weight ({a})")),
            };
            let w = So1nWeight::new(n, v.clone()).map_err(|e| e.to_string())?;
            if so1n_sign(&w).map_err(|e| e.to_string())? != s {
                return Err(format!("{name} at {v}: reducer and closed form disagree"));
            }
            Ok(s)
        };
        let ws = star_weights(n, 4);
        for a in &ws {
            for b in &ws {
                if sign(&(a + b))? != sign(a)? * sign(b)? {
                    return Err(format!("{name}: σ({a} + {b}) ≠ σ({a})σ({b})"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn criterion_6() -> Outcome {
    let a1 = RootSystem::of_type(CartanType::new(Family::A, 1)).map_err(|e| e.to_string())?;
    let mut count = 0;
    for a in 0..=6i64 {
        for b in 0..=6i64 {
            let complex = complex_w0_action(a1.cartan_type, &a1.from_int_labels(&[a]), &a1.from_int_labels(&[b]))
                .map_err(|e| e.to_string())?;
            // so(1,3) labels (λ1 − λ2, λ1 + λ2) = (a, b).
            let lambda = Vector(vec![qf(a + b, 2), qf(b - a, 2)]);
            let real = w0_action("so(1,3)", &lambda).map_err(|e| e.to_string())?;
            if complex != real {
                return Err(format!("({a}, {b}): sl2(C) gives {complex}, so(1,3) gives {real}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} weights"))
}

fn criterion_7() -> Outcome {
    let mut total = 0;
    for (split, qs) in [("sl(4,R)", "su(2,2)"), ("sl(3,R)", "su(1,2)")] {
        let sys = RootSystem::of_type(lookup(split).map_err(|e| e.to_string())?.complex_type())
            .map_err(|e| e.to_string())?;
        let grid = label_grid(&sys, 2);
        let bad = quasi_split_agrees(split, qs, &grid).map_err(|e| e.to_string())?;
        if let Some(d) = bad.first() {
            return Err(format!("{split} vs {qs} at {}: {} vs {}", d.weight, d.first, d.second));
        }
        total += grid.len();
    }
    Ok(format!("{total} weights (27 for A3, 9 for A2)"))
}

fn criterion_8() -> Outcome {
    let forms = [
        "sl(2,R)", "sl(3,R)", "sl(4,R)", "sl(5,R)", "so(2,3)", "so(3,4)", "so(4,5)", "sp(2·2,R)", "sp(2·3,R)",
        "sp(2·4,R)", "so(3,3)", "so(4,4)", "G", "FI",
    ];
    let mut count = 0;
    for name in forms {
        let f = lookup(name).map_err(|e| e.to_string())?;
        if !f.is_split() {
            return Err(format!("{name} is not split"));
        }
        let sys = &f.datum().ok_or("complex form")?.complex_system;
        for l in label_grid(sys, 2) {
            let dim = w0_action(name, &l).map_err(|e| e.to_string())?.dim();
            let zero = sys
                .weight_multiplicity(&l, &Vector::zeros(sys.ambient_dim))
                .map_err(|e| e.to_string())?;
            if dim != zero {
                return Err(format!("{name} at {l}: dim {dim}, zero weight multiplicity {zero}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} weights over {} split forms", forms.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("so(1,n) closed form vs l-branching, tableau uniqueness", Duration::from_secs(60), criterion_1),
        ("matrix oracle vs reducer on generators", Duration::from_secs(30), criterion_2),
        ("strongly orthogonal sets multiply to w0", Duration::from_secs(10), criterion_3),
        ("golden tables of s", Duration::from_secs(30), criterion_4),
        ("sign is a semigroup morphism", Duration::from_secs(5), criterion_5),
        ("sl2(C) agrees with so(1,3)", Duration::from_secs(5), criterion_6),
        ("split and quasi-split forms agree", Duration::from_secs(60), criterion_7),
        ("split forms: dim = zero weight multiplicity", Duration::from_secs(60), criterion_8),
    ];
    let mut failed = 0;
    for (i, (what, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let dt = t.elapsed();
        let (status, detail) = match &outcome {
            Ok(d) if dt <= *budget => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("{d}; took longer than {budget:?}")),
            Err(e) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {status}  {what}  [exact, tolerance 0; {:.2}s of {}s]  {detail}",
            i + 1,
            dt.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
