//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use mwlat::bounds::{prop47_bound, table1_params, table1_row, table2_row, RunTier};
use mwlat::curve::{
    e1_curve, e1_explicit_points, CurveE1Params, CurvePoint, ExplicitSeedSet, WeierstrassCurve,
};
use mwlat::heights::{
    canonical_height_e1, is_multiple_of, legendre_gram, legendre_min_norm_bound, naive_height,
    nice_check, nice_height,
};
use mwlat::lattice::{saturate, Matrix};
use mwlat::Rational;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn qpow(base: Rational, e: u32) -> Rational {
    num_traits::pow(base, e as usize)
}

fn rel_err(got: f64, want: f64) -> f64 {
    ((got - want) / want).abs()
}

struct Outcome {
    id: &'static str,
    pass: bool,
    detail: String,
}

fn check(id: &'static str, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    match f() {
        Ok(detail) => Outcome { id, pass: true, detail },
        Err(detail) => Outcome { id, pass: false, detail },
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn criterion1() -> Result<String, String> {
    let mut notes = Vec::new();
    for s in [4, 8, 12] {
        let (row, took) = timed(|| table1_row(5, 1, s));
        let row = row.map_err(|e| format!("s = {s}: {e}"))?;
        ensure(
            row.delta_computed.exact() == Some(q(1, 16)),
            format!("s = {s}: computed {} != 1/16", row.delta_computed.expression()),
        )?;
        ensure(
            row.delta_prop47.exact() == Some(q(1, 16)),
            format!("s = {s}: analytic {} != 1/16", row.delta_prop47.expression()),
        )?;
        ensure(took < Duration::from_secs(60), format!("s = {s} took {took:?}"))?;
        notes.push(format!("s={s} {:.2?}", took));
    }
    Ok(format!("delta = 1/16 on both routes ({})", notes.join(", ")))
}

fn criterion2() -> Result<String, String> {
    let row = table1_row(5, 1, 4).map_err(|e| e.to_string())?;
    let l = &row.lattice;
    let (min, _) = l.shortest_vector().map_err(|e| e.to_string())?;
    ensure(l.rank() == 8, format!("rank {}", l.rank()))?;
    ensure(l.det() == q(1, 1), format!("det {}", l.det()))?;
    ensure(min == q(2, 1), format!("min norm {min}"))?;
    ensure(l.is_e8(), "is_e8 returned false")?;
    Ok("rank 8, det 1, even, min 2".into())
}

fn criterion3() -> Result<String, String> {
    let (row, took) = timed(|| table1_row(11, 1, 2));
    let row = row.map_err(|e| e.to_string())?;
    let computed = row.delta_computed.to_f64();
    ensure(
        rel_err(computed, 1.0 / 11.0) <= 1e-3,
        format!("computed {computed} vs 1/11"),
    )?;
    ensure(
        row.delta_prop47.exact() == Some(q(1, 11)),
        format!("analytic {}", row.delta_prop47.expression()),
    )?;
    ensure(row.dimension == 20, format!("dimension {}", row.dimension))?;
    ensure(took < Duration::from_secs(600), format!("took {took:?}"))?;
    Ok(format!(
        "computed {} (exact {}), analytic 1/11, dim 20, {:.2?}",
        row.delta_computed.render(6),
        row.delta_computed.expression(),
        took
    ))
}

fn criterion4() -> Result<String, String> {
    let v = prop47_bound(11, 11u128.pow(6), 1).map_err(|e| e.to_string())?;
    ensure(v.exact() == Some(q(1, 1331)), format!("got {}", v.expression()))?;
    // published value ~0.00075
    ensure(rel_err(v.to_f64(), 0.00075) < 0.01, format!("decimal {}", v.render(4)))?;
    Ok(format!("analytic 1/1331 = {}", v.render(4)))
}

fn criterion5() -> Result<String, String> {
    let (row, took) = timed(|| table1_row(17, 1, 4));
    let row = row.map_err(|e| e.to_string())?;
    let want = qpow(q(3, 2), 16) / qpow(q(17, 1), 4);
    ensure(
        *row.delta_prop47.square() == &want * &want,
        format!("analytic {}", row.delta_prop47.expression()),
    )?;
    ensure(
        rel_err(row.delta_prop47.to_f64(), 0.0078) < 0.01,
        format!("analytic decimal {}", row.delta_prop47.render(4)),
    )?;
    let computed = row.delta_computed.to_f64();
    ensure(
        rel_err(computed, 2.272) <= 1e-2,
        format!("computed {computed} vs 2.272"),
    )?;
    ensure(row.sha_nontrivial(), format!("sha lower bound {} not > 1", row.sha_lower))?;
    ensure(took < Duration::from_secs(7200), format!("took {took:?}"))?;
    Ok(format!(
        "computed {}, analytic {}, |Sha| >= {} ({:.1e}), {:.2?}",
        row.delta_computed.render(5),
        row.delta_prop47.render(4),
        row.sha_lower,
        row.sha_lower.to_f64().unwrap_or(f64::NAN),
        took
    ))
}

fn criterion6() -> Result<String, String> {
    // (p, f, printed value, relative tolerance)
    let rows: [(u32, u32, f64, f64); 6] = [
        (3, 1, 0.125, 5e-3),
        (3, 2, 1.953e-6, 5e-3),
        (3, 3, 3.208e-26, 5e-3),
        (5, 1, 0.005, 5e-2),
        (5, 2, 8.119e-24, 5e-3),
        (7, 1, 1.22e-4, 5e-3),
    ];
    let mut notes = Vec::new();
    for (p, f, want, tol) in rows {
        let (row, took) = timed(|| table2_row(p, f));
        let row = row.map_err(|e| format!("({p},{f}): {e}"))?;
        let got = row.delta_bound.to_f64();
        ensure(
            rel_err(got, want) <= tol,
            format!("({p},{f}): {} vs {want}", row.delta_bound.render(4)),
        )?;
        ensure(took < Duration::from_secs(60), format!("({p},{f}) took {took:?}"))?;
        notes.push(format!("({p},{f}) {}", row.delta_bound.render(4)));
    }
    // density decreases with p^f
    let mut by_size: Vec<(u32, f64)> = rows
        .iter()
        .map(|&(p, f, _, _)| (p.pow(f), table2_row(p, f).unwrap().delta_bound.ln()))
        .collect();
    by_size.sort_by_key(|r| r.0);
    ensure(
        by_size.windows(2).all(|w| w[1].1 < w[0].1),
        "density does not decrease with p^f",
    )?;
    Ok(notes.join(", "))
}

/// `det(a I + b J)` of size `k`, where the diagonal is `a + b`.
fn block_det(diag: &Rational, off: &Rational, k: u32) -> Rational {
    let a = diag - off;
    qpow(a.clone(), k - 1) * (a + off * Rational::from_integer(BigInt::from(k)))
}

fn criterion7() -> Result<String, String> {
    let g4 = saturate(&legendre_gram(4)).map_err(|e| e.to_string())?;
    ensure(g4.rank() == 2, format!("d=4 rank {}", g4.rank()))?;
    // parity classes are orthogonal; each contributes the norm of one generator
    let oracle4 = q(3, 4) * q(3, 4);
    ensure(g4.det() == oracle4, format!("d=4 det {}", g4.det()))?;

    let full = legendre_gram(6);
    for class in [[0usize, 2, 4], [1, 3, 5]] {
        let block = full.submatrix(&class, &class);
        let lat = saturate(&block).map_err(|e| e.to_string())?;
        // the class sums to zero, so two of its three vectors form a basis
        let oracle = block_det(&q(5, 3), &q(-5, 6), 2);
        ensure(oracle == q(25, 12), "oracle disagrees with 25/12")?;
        ensure(lat.det() == oracle, format!("d=6 class {class:?} det {}", lat.det()))?;
    }
    Ok("d=4 det 9/16, d=6 class det 25/12".into())
}

fn e1_q5() -> (WeierstrassCurve, Vec<CurvePoint>) {
    let params = CurveE1Params::new(5, 1, 4).unwrap();
    let f = params.field().unwrap();
    let curve = e1_curve(&params, &f).unwrap();
    let seeds = ExplicitSeedSet::solve(&f, 5).unwrap();
    let pts = e1_explicit_points(&curve, &seeds).unwrap();
    (curve, pts)
}

fn criterion8() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d776c6174);
    let (curve, pts) = e1_q5();
    let h = |p: &CurvePoint| canonical_height_e1(&curve, p).map_err(|e| e.to_string());
    let add = |a: &CurvePoint, b: &CurvePoint| curve.add(a, b).map_err(|e| e.to_string());
    let four = q(4, 1);
    let two = q(2, 1);

    // quadraticity and parallelogram law
    for p in &pts {
        ensure(h(&curve.double(p).unwrap())? == &four * h(p)?, "h(2P) != 4h(P)")?;
    }
    for _ in 0..50 {
        let a = &pts[rng.gen_range(0..pts.len())];
        let b = &pts[rng.gen_range(0..pts.len())];
        let s = add(a, b)?;
        ensure(h(&curve.double(&s).unwrap())? == &four * h(&s)?, "h(2S) != 4h(S)")?;
        let d = curve.sub(a, b).map_err(|e| e.to_string())?;
        ensure(
            h(&s)? + h(&d)? == &two * h(a)? + &two * h(b)?,
            "parallelogram law fails",
        )?;
    }

    // naive height floor on E1 points for q = 5 and 11
    for p in &pts {
        ensure(naive_height(p) >= q(2, 1), "q=5 point below (q+1)/3")?;
    }
    {
        let params = CurveE1Params::new(11, 1, 2).unwrap();
        let f = params.field().unwrap();
        let c11 = e1_curve(&params, &f).unwrap();
        let seeds = ExplicitSeedSet::solve(&f, 11).unwrap();
        for p in e1_explicit_points(&c11, &seeds).unwrap() {
            ensure(naive_height(&p) >= q(4, 1), "q=11 point below (q+1)/3")?;
        }
    }

    // no nonzero small combination is torsion
    for _ in 0..100 {
        let subset: Vec<CurvePoint> =
            (0..8).map(|_| pts[rng.gen_range(0..pts.len())].clone()).collect();
        let coeffs: Vec<i64> = (0..8).map(|_| rng.gen_range(-3..=3)).collect();
        let combo = curve.combination(&coeffs, &subset).map_err(|e| e.to_string())?;
        if !combo.is_identity() {
            ensure(!h(&combo)?.is_zero(), "nonzero combination of height 0")?;
        }
    }

    // Legendre heights are positive multiples of (d-1)/(2d)
    for d in [4usize, 6, 8, 10] {
        let g = legendre_gram(d);
        ensure(g.rank() == d - 2, format!("d={d}: rank {}", g.rank()))?;
        let unit = legendre_min_norm_bound(d);
        for _ in 0..200 {
            let c: Vec<i64> = (0..d).map(|_| rng.gen_range(-2..=2)).collect();
            let v = Matrix::from_fn(1, d, |_, j| q(c[j], 1));
            let height = v.congruence(&g)[(0, 0)].clone();
            if height.is_zero() {
                // a relation among the P_i: the identity
                continue;
            }
            ensure(height >= unit, format!("d={d}: height {height} below bound"))?;
            ensure(is_multiple_of(&height, &unit), format!("d={d}: {height} not a multiple"))?;
        }
    }

    // nice-curve height formula agrees with the canonical height
    let profile = nice_check(&curve).map_err(|e| e.to_string())?;
    ensure(profile.is_nice(), "E1 curve not nice")?;
    for _ in 0..20 {
        let a = &pts[rng.gen_range(0..pts.len())];
        let b = &pts[rng.gen_range(0..pts.len())];
        let s = add(a, b)?;
        if s.is_identity() {
            continue;
        }
        let nh = nice_height(&profile, &s).map_err(|e| e.to_string())?;
        ensure(nh == h(&s)?, format!("nice {nh} vs canonical {}", h(&s)?))?;
    }
    Ok("quadraticity, height floor, torsion-freeness, Legendre multiples, rank d-2, nice = canonical".into())
}

fn criterion9() -> Result<String, String> {
    let rows = table1_params(RunTier::VeryLong);
    ensure(
        rows.iter().any(|&(p, c, _)| p == 5 && c == 3),
        "q = 125 row missing from the very long tier",
    )?;
    Ok("q = 5^3 (dimension 248) is out of scope; the row exists only behind the very long tier".into())
}

#[test]
fn acceptance() {
    let outcomes = vec![
        check("1", criterion1),
        check("2", criterion2),
        check("3", criterion3),
        check("4", criterion4),
        check("5", criterion5),
        check("6", criterion6),
        check("7", criterion7),
        check("8", criterion8),
        check("9", criterion9),
    ];
    // direct handle writes bypass libtest capture, so the lines show in plain `cargo test`
    let mut err = std::io::stderr().lock();
    for o in &outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        writeln!(err, "{status} criterion {}: {}", o.id, o.detail).unwrap();
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
