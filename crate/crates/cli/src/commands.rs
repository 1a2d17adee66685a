use std::fmt::Write as _;
use std::fs;
use std::time::Instant;

use mwlat::bounds::{
    table1_params, table1_row, table2_params, table2_row, RunTier, Table1Row, Table2Row,
    TABLE1_CSV_HEADER, TABLE2_CSV_HEADER,
};
use mwlat::curve::{
    e1_curve, e1_explicit_points, legendre_curve, legendre_explicit_points, CurveE1Params,
    ExplicitSeedSet, LegendreParams,
};
use mwlat::heights::{in_large_degree_regime, legendre_gram, nice_check, nice_height};
use mwlat::io::{parse_model, parse_points, write_points};
use mwlat::lattice::{GramMatrix, SqrtRational, ENUMERATION_RANK_LIMIT};
use serde_json::json;

use crate::{E1Args, Failure, Format, LegendreArgs, NiceArgs, TablesArgs};

fn csv_text(header: &str, records: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let internal = |e: csv::Error| Failure {
        code: 1,
        message: e.to_string(),
    };
    w.write_record(header.split(',')).map_err(internal)?;
    for r in records {
        w.write_record(r).map_err(internal)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    Ok(String::from_utf8(bytes).expect("utf-8 csv"))
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn with_exact(v: &SqrtRational) -> String {
    match v.exact() {
        Some(x) => format!("{} [{}]", v.render(6), x),
        None => format!("{} [sqrt({})]", v.render(6), v.square()),
    }
}

pub fn e1(a: &E1Args, format: Format, verbose: bool) -> Result<String, Failure> {
    let params = CurveE1Params::new(a.p, a.c, a.s)?;
    let start = Instant::now();
    let row = table1_row(a.p, a.c, a.s)?;
    if verbose {
        eprintln!("e1 q={} r={}^{}: {:.2?}", row.q, a.p, a.s, start.elapsed());
    }
    if let Some(path) = &a.gram_out {
        fs::write(path, row.gram.to_json_string()? + "\n")?;
    }
    if let Some(path) = &a.points_out {
        let field = params.field()?;
        let curve = e1_curve(&params, &field)?;
        let seeds = ExplicitSeedSet::solve(&field, row.q)?;
        let points = curve.dedup_signs(&e1_explicit_points(&curve, &seeds)?);
        fs::write(path, write_points(&points))?;
    }
    let e8 = (row.dimension == 8).then(|| row.lattice.is_e8());
    let shortest = if row.dimension <= ENUMERATION_RANK_LIMIT {
        Some(row.lattice.shortest_vector()?.0)
    } else {
        None
    };
    Ok(match format {
        Format::Csv => csv_text(TABLE1_CSV_HEADER, &[row.csv_record()])?,
        Format::Json => {
            let mut v = row.to_json();
            v["is_e8"] = json!(e8);
            v["shortest_norm"] = json!(shortest.as_ref().map(|m| m.to_string()));
            json_text(&v)
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "curve: y^2 = x^3 + t^{} - t over GF({}^{})(t)",
                row.q, a.p, a.s
            );
            let _ = writeln!(s, "q = {}, r = {}", row.q, row.r);
            let _ = writeln!(s, "explicit points (up to sign) = {}", row.n_points);
            let _ = writeln!(s, "rank = {}", row.dimension);
            let _ = writeln!(s, "N_min = {}", row.n_min);
            let _ = writeln!(s, "det = {}", row.det);
            let _ = writeln!(s, "delta (sublattice) = {}", with_exact(&row.delta_computed));
            let _ = writeln!(
                s,
                "delta (analytic, |Sha| >= 1) = {}",
                with_exact(&row.delta_prop47)
            );
            let _ = writeln!(
                s,
                "|Sha| >= {} ({})",
                row.sha_lower,
                if row.sha_nontrivial() { "nontrivial" } else { "trivial" }
            );
            if let Some(b) = row.best_known {
                let _ = writeln!(s, "best known = {b}");
            }
            if let Some(e8) = e8 {
                let _ = writeln!(s, "lattice = E8: {e8}");
            }
            if let Some(m) = shortest {
                let _ = writeln!(s, "shortest vector norm = {m}");
            }
            s
        }
    })
}

pub fn legendre(a: &LegendreArgs, format: Format) -> Result<String, Failure> {
    let params = LegendreParams::new(a.p, a.f)?;
    let row = table2_row(a.p, a.f)?;
    if let Some(path) = &a.gram_out {
        let g = GramMatrix::new(legendre_gram(params.d))?;
        fs::write(path, g.to_json_string()? + "\n")?;
    }
    let mut transcript = Vec::new();
    if a.points {
        let curve = legendre_curve(&params)?;
        for (i, pt) in legendre_explicit_points(&params, &curve)?.iter().enumerate() {
            let (x, y) = (pt.x().expect("affine"), pt.y().expect("affine"));
            transcript.push((i, x.num().to_text(), y.num().to_text(), curve.on_curve(pt)?));
        }
    }
    Ok(match format {
        Format::Csv => csv_text(TABLE2_CSV_HEADER, &[row.csv_record()])?,
        Format::Json => {
            let mut v = row.to_json();
            if a.points {
                v["points"] = transcript
                    .iter()
                    .map(|(i, x, y, ok)| json!({ "i": i, "x": x, "y": y, "on_curve": ok }))
                    .collect();
            }
            json_text(&v)
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "curve: y^2 = x(x+1)(x+u^{}) over GF({}^{})(u)",
                row.d,
                a.p,
                2 * a.f
            );
            let _ = writeln!(s, "d = {}, rank = {}", row.d, row.dimension);
            let _ = writeln!(s, "det = {}", row.det);
            let _ = writeln!(s, "N_min bound (d-1)/(2d) = {}", row.n_min_bound);
            let _ = writeln!(s, "delta (norm bound) = {}", with_exact(&row.delta_bound));
            if let (Some(m), Some(d)) = (&row.true_min, &row.delta_true_min) {
                let _ = writeln!(
                    s,
                    "sublattice minimum = {m}, delta at that minimum = {} (not the tabulated value)",
                    with_exact(d)
                );
            }
            if let Some(b) = row.best_known {
                let _ = writeln!(s, "best known = {b}");
            }
            for (i, x, y, ok) in &transcript {
                let _ = writeln!(s, "P_{i}: x = {x}, y = {y}, on curve: {ok}");
            }
            s
        }
    })
}

fn table1_text(rows: &[Table1Row], format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => json_text(&rows.iter().map(Table1Row::to_json).collect()),
        _ => csv_text(
            TABLE1_CSV_HEADER,
            &rows.iter().map(Table1Row::csv_record).collect::<Vec<_>>(),
        )?,
    })
}

fn table2_text(rows: &[Table2Row], format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => json_text(&rows.iter().map(Table2Row::to_json).collect()),
        _ => csv_text(
            TABLE2_CSV_HEADER,
            &rows.iter().map(Table2Row::csv_record).collect::<Vec<_>>(),
        )?,
    })
}

pub fn tables(a: &TablesArgs, format: Format, verbose: bool) -> Result<String, Failure> {
    let tier = if a.very_long {
        RunTier::VeryLong
    } else if a.long {
        RunTier::Long
    } else {
        RunTier::Default
    };
    let mut failures = Vec::new();
    let mut t1 = Vec::new();
    for (p, c, s) in table1_params(tier) {
        let start = Instant::now();
        match table1_row(p, c, s) {
            Ok(row) => t1.push(row),
            Err(e) => failures.push((format!("table1 p={p} c={c} s={s}"), Failure::from(e))),
        }
        if verbose {
            eprintln!("table1 p={p} c={c} s={s}: {:.2?}", start.elapsed());
        }
    }
    let mut t2 = Vec::new();
    for (p, f) in table2_params() {
        match table2_row(p, f) {
            Ok(row) => t2.push(row),
            Err(e) => failures.push((format!("table2 p={p} f={f}"), Failure::from(e))),
        }
    }
    let ext = if format == Format::Json { "json" } else { "csv" };
    fs::create_dir_all(&a.out_dir)?;
    let t1_path = a.out_dir.join(format!("table1.{ext}"));
    let t2_path = a.out_dir.join(format!("table2.{ext}"));
    fs::write(&t1_path, table1_text(&t1, format)?)?;
    fs::write(&t2_path, table2_text(&t2, format)?)?;

    let mut s = String::new();
    for row in &t1 {
        let _ = writeln!(
            s,
            "table1 q={} r={}: delta {} (analytic {}), dim {}",
            row.q,
            row.r,
            row.delta_computed.render(4),
            row.delta_prop47.render(4),
            row.dimension
        );
    }
    for row in &t2 {
        let _ = writeln!(
            s,
            "table2 p={} f={}: delta {}, dim {}",
            row.p,
            row.f,
            row.delta_bound.render(4),
            row.dimension
        );
    }
    let _ = writeln!(s, "wrote {} and {}", t1_path.display(), t2_path.display());
    if let Some((_, first)) = failures.first() {
        let message = failures
            .iter()
            .map(|(what, f)| format!("{what}: {}", f.message))
            .collect::<Vec<_>>()
            .join("; ");
        print!("{s}");
        return Err(Failure {
            code: first.code,
            message,
        });
    }
    Ok(s)
}

pub fn nice(a: &NiceArgs, format: Format) -> Result<String, Failure> {
    let model = fs::read_to_string(&a.model)?;
    let curve = parse_model(&model)?;
    let points = match &a.points {
        Some(path) => parse_points(&curve, &fs::read_to_string(path)?)?,
        None => Vec::new(),
    };
    let profile = nice_check(&curve)?;
    if !points.is_empty() && !profile.is_nice() {
        return Err(mwlat::Error::NotNice(profile.failure().unwrap_or("").into()).into());
    }
    let mut heights = Vec::with_capacity(points.len());
    for p in &points {
        heights.push((nice_height(&profile, p)?, in_large_degree_regime(&profile, p)));
    }
    let classes: Vec<_> = profile
        .classes
        .iter()
        .map(|c| {
            json!({
                "multiplicity": c.multiplicity,
                "roots": c.roots.to_text(),
                "additive": c.additive.as_ref().map(|p| p.to_text()),
            })
        })
        .collect();
    Ok(match format {
        Format::Json => json_text(&json!({
            "nice": profile.is_nice(),
            "failure": profile.failure(),
            "d": profile.d,
            "chi": profile.chi,
            "discriminant": profile.discriminant.to_text(),
            "classes": classes,
            "infinity": {
                "multiplicity": profile.infinity.multiplicity,
                "additive": profile.infinity.additive,
                "nice": profile.infinity.nice,
            },
            "heights": heights.iter().map(|(h, large)| json!({
                "height": h.to_string(),
                "large_degree_regime": large,
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "d = chi = {}", profile.d);
            let _ = writeln!(s, "discriminant = {}", profile.discriminant.to_text());
            for c in &profile.classes {
                let _ = write!(s, "roots of multiplicity {}: {}", c.multiplicity, c.roots.to_text());
                if let Some(add) = &c.additive {
                    let _ = write!(s, ", additive part {}", add.to_text());
                }
                s.push('\n');
            }
            let _ = writeln!(
                s,
                "infinity: multiplicity {}, additive {}, nice {}",
                profile.infinity.multiplicity, profile.infinity.additive, profile.infinity.nice
            );
            match profile.failure() {
                None => {
                    let _ = writeln!(s, "nice: true");
                }
                Some(why) => {
                    let _ = writeln!(s, "nice: false ({why})");
                }
            }
            for (i, (h, large)) in heights.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "point {i}: height {h}{}",
                    if *large { " (deg f large enough)" } else { "" }
                );
            }
            s
        }
    })
}
