//! Acceptance run: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use ddgalois::{parse_equation, run_classify, run_relations, Options};
use ddgalois_core::classify::{classify, delta_erasure, same_group, Branch, Constraint};
use ddgalois_core::hypergeom::{petkovsek_riccati, solve_ric2, Cardinality, Completeness};
use ddgalois_core::summability::{abramov_rational_solutions, apply_operator, is_summable, solve_telescoper};
use ddgalois_core::{KRatFunc, QPoly, QRatFunc, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

type Q = Rational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn lin(root: i64) -> QPoly {
    QPoly::from_ints(&[-root, 1])
}

fn rf_poly(p: QPoly) -> QRatFunc {
    QRatFunc::new(p, QPoly::one())
}

fn eval_poly(p: &QPoly, x: &Q) -> Q {
    p.coeffs().iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn eval(f: &QRatFunc, x: &Q) -> Q {
    eval_poly(f.num(), x) / eval_poly(f.den(), x)
}

/// Sample points that avoid every integer.
fn points(n: usize) -> Vec<Q> {
    (0..n as i64).map(|k| q(k - 20) + Q::new(1.into(), 3.into())).collect()
}

/// True when `rows * c = rhs` has a solution.
fn consistent(mut rows: Vec<Vec<Q>>, mut rhs: Vec<Q>) -> bool {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] * &inv;
                for k in c..cols {
                    let v = &rows[r][k] * &f;
                    rows[i][k] -= v;
                }
                let v = &rhs[r] * &f;
                rhs[i] -= v;
            }
        }
        r += 1;
    }
    rhs[r..].iter().all(Zero::is_zero)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn constraints(v: &Value) -> Vec<Value> {
    v["constraints"].as_array().cloned().unwrap_or_default()
}

fn relation_kinds(v: &Value) -> Vec<(String, Value)> {
    v["relations"]
        .as_array()
        .map(|rs| rs.iter().map(|r| (r["kind"].as_str().unwrap_or("").to_string(), r["witnesses"].clone())).collect())
        .unwrap_or_default()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn golden_reducible() -> Outcome {
    let ((c, r), dt) = timed(|| {
        let eq = parse_equation("y(x+2)-(2*x+1)*y(x+1)+x^2*y(x)=0").unwrap();
        (run_classify(&eq, &Options::default()), run_relations(&eq, &Options::default()))
    });
    let (Ok(c), Ok(r)) = (c, r) else { return outcome(false, "pipeline error") };
    let g_ok = c["G"]["shape"] == "TriangularReducible"
        && constraints(&c["G"])
            == vec![
                json!({"kind": "MonomialTorsion", "params": {"m": 1, "n": -1}}),
                json!({"kind": "UnipotentEmbedding", "params": {"L": ["1"]}}),
            ];
    let rel_ok = relation_kinds(&r).contains(&("UnipotentRelation".into(), json!({"L": "[1]", "g": "0"})))
        && r["relations"].as_array().unwrap().iter().all(|x| x["verified"] == true);
    let fast = dt < Duration::from_secs(1);
    outcome(g_ok && rel_ok && fast, format!("G/relations exact: {}, {:?}", g_ok && rel_ok, dt))
}

fn golden_imprimitive() -> Outcome {
    let ((c, r), dt) = timed(|| {
        let eq = parse_equation("y(x+2)+((x+1)/(2*x))*y(x)=0").unwrap();
        (run_classify(&eq, &Options::default()), run_relations(&eq, &Options::default()))
    });
    let (Ok(c), Ok(r)) = (c, r) else { return outcome(false, "pipeline error") };
    let g_ok = c["G"]["shape"] == "ImprimitiveDihedral"
        && constraints(&c["G"]) == vec![json!({"kind": "DeltaConstDet", "params": {}})];
    let kinds = relation_kinds(&r);
    let rel_ok = kinds.contains(&("ProductZero".into(), json!({})))
        && kinds.contains(&("CasoratianLogDeriv".into(), json!({"f": "1/x"})));
    let fast = dt < Duration::from_secs(1);
    outcome(g_ok && rel_ok && fast, format!("G/relations exact: {}, {:?}", g_ok && rel_ok, dt))
}

fn golden_large() -> Outcome {
    let ((c, riccati), dt) = timed(|| {
        let eq = parse_equation("y(x+2)+x*y(x+1)+y(x)=0").unwrap();
        let c = run_classify(&eq, &Options::default());
        let r1 = petkovsek_riccati(&eq.a, &eq.b, 1);
        let r2 = solve_ric2(&eq.a, &eq.b);
        (c, (r1, r2))
    });
    let Ok(c) = c else { return outcome(false, "pipeline error") };
    let g_ok = c["G"]["shape"] == "Sl2Extension"
        && constraints(&c["G"]) == vec![json!({"kind": "DetTorsion", "params": {"m": 1}})];
    let ric_ok = match riccati {
        (Ok(r1), Ok(r2)) => {
            r1.cardinality == Cardinality::Zero
                && r2.cardinality == Cardinality::Zero
                && r1.completeness == Completeness::Complete
                && r2.completeness == Completeness::Complete
        }
        _ => false,
    };
    let fast = dt < Duration::from_secs(5);
    outcome(g_ok && ric_ok && fast, format!("G exact: {g_ok}, Riccati Zero/Complete: {ric_ok}, {:?}", dt))
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> QPoly {
    let d = rng.gen_range(0..=max_deg);
    QPoly::new((0..=d).map(|_| q(rng.gen_range(-5..=5))).collect())
}

fn telescoper_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut ok, mut fails) = (0, Vec::new());
    let mut n = 0;
    while n < 200 {
        let num = random_poly(&mut rng, 5);
        let den = random_poly(&mut rng, 5);
        if den.is_zero() {
            continue;
        }
        n += 1;
        let g = QRatFunc::new(num, den);
        let f = &g.shift(1) - &g;
        match solve_telescoper(&f) {
            Ok(Some(h)) if &h.shift(1) - &h == f && (&h - &g).as_constant().is_some() => ok += 1,
            other => fails.push(format!("summable {g}: {other:?}")),
        }
    }
    let mut n = 0;
    while n < 100 {
        let (num, den) = (random_poly(&mut rng, 3), random_poly(&mut rng, 3));
        if den.is_zero() {
            continue;
        }
        let g = QRatFunc::new(num, den);
        n += 1;
        let c = q(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 });
        let pole = if rng.gen_bool(0.5) {
            lin(rng.gen_range(-3..=3)).pow(rng.gen_range(1..=3))
        } else {
            QPoly::from_ints(&[rng.gen_range(1..=5), 0, 1])
        };
        let f = &(&g.shift(1) - &g) + &QRatFunc::new(QPoly::constant(c), pole);
        match solve_telescoper(&f) {
            Ok(None) => ok += 1,
            other => fails.push(format!("planted residue {f}: {other:?}")),
        }
    }
    outcome(fails.is_empty(), format!("{ok}/300 agree{}", first(&fails)))
}

fn first(fails: &[String]) -> String {
    fails.first().map(|f| format!("; first failure: {f}")).unwrap_or_default()
}

/// `sum c / (x - p)^j` as a list of `(p, j, c)`.
type Terms = Vec<(i64, u32, i64)>;

fn terms_ratfunc(t: &Terms) -> QRatFunc {
    t.iter().fold(QRatFunc::zero(), |acc, &(p, j, c)| {
        &acc + &QRatFunc::new(QPoly::constant(q(c)), lin(p).pow(j))
    })
}

fn eval_terms(t: &Terms, x: &Q) -> Q {
    t.iter().fold(Q::zero(), |acc, &(p, j, c)| {
        let d = x - q(p);
        acc + q(c) / num_traits::pow(d, j as usize)
    })
}

/// Brute force: `sigma(g) - g = f` with `g = sum c_{p,j} / (x - p)^j`, `p` in `-5..=4`.
fn summable_oracle(f: &Terms) -> bool {
    let jmax = f.iter().map(|t| t.1).max().unwrap_or(1);
    let unknowns: Vec<(i64, u32)> = (-5..=4).flat_map(|p| (1..=jmax).map(move |j| (p, j))).collect();
    let xs = points(unknowns.len() + 20);
    let rows = xs
        .iter()
        .map(|x| {
            unknowns
                .iter()
                .map(|&(p, j)| {
                    let s = x + Q::one() - q(p);
                    let o = x - q(p);
                    Q::one() / num_traits::pow(s, j as usize) - Q::one() / num_traits::pow(o, j as usize)
                })
                .collect()
        })
        .collect();
    let rhs = xs.iter().map(|x| eval_terms(f, x)).collect();
    consistent(rows, rhs)
}

fn residue_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut ok, mut fails, mut summable) = (0, Vec::new(), 0);
    for i in 0..100 {
        let mut t: Terms = Vec::new();
        if i % 2 == 0 {
            // sigma(c/(x-p)^j) - c/(x-p)^j, poles kept in -3..=3
            for _ in 0..rng.gen_range(1..=3) {
                let (p, j, c) = (rng.gen_range(-2..=3), rng.gen_range(1..=3), rng.gen_range(-4..=4));
                t.push((p - 1, j, c));
                t.push((p, j, -c));
            }
        } else {
            for _ in 0..rng.gen_range(1..=4) {
                t.push((rng.gen_range(-3..=3), rng.gen_range(1..=3), rng.gen_range(-4..=4)));
            }
        }
        let f = terms_ratfunc(&t);
        let expected = summable_oracle(&t);
        summable += expected as usize;
        match is_summable(&f) {
            Ok(got) if got == expected => ok += 1,
            other => fails.push(format!("{f}: oracle {expected}, got {other:?}")),
        }
    }
    outcome(fails.is_empty(), format!("{ok}/100 agree ({summable} summable){}", first(&fails)))
}

fn riccati_suite() -> Outcome {
    let corpus: [(&str, Cardinality); 10] = [
        ("y(x+2) - 5*y(x+1) + 6*y(x) = 0", Cardinality::Two),
        ("y(x+2) - y(x+1) - y(x) = 0", Cardinality::Two),
        ("y(x+2) - 2*y(x+1) + y(x) = 0", Cardinality::ThreeOrMore),
        ("y(x+2) + 4*y(x+1) + 4*y(x) = 0", Cardinality::ThreeOrMore),
        ("y(x+2) - 4*y(x) = 0", Cardinality::Two),
        ("y(x+2) + y(x) = 0", Cardinality::Two),
        ("y(x+2) - x*(x+1)*y(x) = 0", Cardinality::Two),
        ("y(x+2) + x*y(x+1) + y(x) = 0", Cardinality::Zero),
        ("y(x+2) + ((x+1)/(2*x))*y(x) = 0", Cardinality::Zero),
        ("y(x+2) - (2*x+1)*y(x+1) + x^2*y(x) = 0", Cardinality::One),
    ];
    let (mut ok, mut certs, mut fails) = (0, 0, Vec::new());
    for (text, expected) in corpus {
        let eq = parse_equation(text).unwrap();
        let s = match petkovsek_riccati(&eq.a, &eq.b, 1) {
            Ok(s) => s,
            Err(e) => {
                fails.push(format!("{text}: {e}"));
                continue;
            }
        };
        let (a, b): (KRatFunc, KRatFunc) = (eq.a.embed(), eq.b.embed());
        let substituted = s.solutions.iter().all(|u| (&(&(u * &u.shift(1)) + &(&a * u)) + &b).is_zero());
        certs += s.solutions.len();
        if substituted && s.cardinality == expected && s.completeness == Completeness::Complete {
            ok += 1;
        } else {
            fails.push(format!("{text}: {:?} {:?}, substitution {substituted}", s.cardinality, s.completeness));
        }
    }
    outcome(fails.is_empty(), format!("{ok}/10 equations, {certs} certificates verified{}", first(&fails)))
}

fn random_factor_product(rng: &mut ChaCha8Rng) -> QRatFunc {
    let c = [1, -1, 2, 3, -2][rng.gen_range(0..5)];
    let mut f = QRatFunc::from_int(c);
    for _ in 0..rng.gen_range(0..=2) {
        let p = rf_poly(lin(rng.gen_range(-3..=3)));
        f = if rng.gen_bool(0.7) { &f * &p } else { &f * &p.inv().unwrap() };
    }
    f
}

fn structural_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut ok, mut fails) = (0, Vec::new());
    for _ in 0..50 {
        let (u, v) = (random_factor_product(&mut rng), random_factor_product(&mut rng));
        // (sigma - v)(sigma - u) = sigma^2 - (sigma(u) + v) sigma + u v
        let a = -(&u.shift(1) + &v);
        let b = &u * &v;
        let c = match classify(&a, &b) {
            Ok(c) => c,
            Err(e) => {
                fails.push(format!("u = {u}, v = {v}: {e}"));
                continue;
            }
        };
        let unip: Vec<&Constraint> = c.g.constraints.iter().filter(|k| k.is_unipotent()).collect();
        let rad = unip.iter().all(|k| matches!(k, Constraint::UnipotentFull | Constraint::UnipotentEmbedding(_)))
            && (!matches!(c.branch, Branch::Reducible { .. }) || unip.len() == 1);
        let closure = same_group(&delta_erasure(&c.g), &c.h);
        let split = matches!(c.branch, Branch::Reducible { .. } | Branch::Diagonal { .. });
        if rad && closure && split {
            ok += 1;
        } else {
            fails.push(format!("u = {u}, v = {v}: rad {rad}, closure {closure}, branch {}", c.branch.name()));
        }
    }
    outcome(fails.is_empty(), format!("{ok}/50 pass{}", first(&fails)))
}

/// Any `g = N / prod_{k=-6}^{3} (x - k)` with `deg N <= 10` solving the equation?
fn abramov_oracle(coeffs: &[QRatFunc], rhs: &QRatFunc) -> bool {
    let den = (-6..=3).fold(QPoly::one(), |d, k| &d * &lin(k));
    let xs = points(40);
    let rows = xs
        .iter()
        .map(|x| {
            (0..=10usize)
                .map(|d| {
                    coeffs.iter().enumerate().fold(Q::zero(), |acc, (i, p)| {
                        let xi = x + q(i as i64);
                        acc + eval(p, x) * num_traits::pow(xi.clone(), d) / eval_poly(&den, &xi)
                    })
                })
                .collect()
        })
        .collect();
    let rhs = xs.iter().map(|x| eval(rhs, x)).collect();
    consistent(rows, rhs)
}

fn abramov_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut ok, mut fails, mut empties) = (0, Vec::new(), 0);
    for i in 0..50 {
        let order = 1 + i % 2;
        let coeffs: Vec<QRatFunc> = (0..=order)
            .map(|_| {
                let mut p = QPoly::constant(q(rng.gen_range(1..=3)));
                for _ in 0..rng.gen_range(0..=2) {
                    p = &p * &lin(rng.gen_range(-3..=3));
                }
                rf_poly(p)
            })
            .collect();
        let mut g_den = QPoly::one();
        for _ in 0..rng.gen_range(0..=2) {
            g_den = &g_den * &lin(rng.gen_range(-3..=3));
        }
        let g = QRatFunc::new(random_poly(&mut rng, 2), g_den);
        let planted = i < 30;
        let rhs = if planted { apply_operator(&coeffs, &g, 1) } else { &g + &QRatFunc::from_int(rng.gen_range(-3..=3)) };
        match abramov_rational_solutions(&coeffs, &rhs, 1) {
            Ok(Some(sol)) => {
                let part = apply_operator(&coeffs, &sol.particular, 1) == rhs;
                let hom = sol.homogeneous.iter().all(|h| apply_operator(&coeffs, h, 1).is_zero());
                if part && hom {
                    ok += 1;
                } else {
                    fails.push(format!("#{i}: substitution failed"));
                }
            }
            Ok(None) => {
                empties += 1;
                if planted || abramov_oracle(&coeffs, &rhs) {
                    fails.push(format!("#{i}: Empty claim refuted"));
                } else {
                    ok += 1;
                }
            }
            Err(e) => fails.push(format!("#{i}: {e}")),
        }
    }
    outcome(fails.is_empty(), format!("{ok}/50 verified ({empties} empty claims cross-checked){}", first(&fails)))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("reducible golden", golden_reducible),
        ("imprimitive golden", golden_imprimitive),
        ("large golden", golden_large),
        ("telescoper suite", telescoper_suite),
        ("residue oracle suite", residue_suite),
        ("Riccati substitution suite", riccati_suite),
        ("structural invariants", structural_suite),
        ("Abramov suite", abramov_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += !o.pass as usize;
        println!("criterion {} [{}] {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
