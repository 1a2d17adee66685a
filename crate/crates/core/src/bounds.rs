//! Density lower bounds for the two curve families and the table drivers.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::json;

use crate::curve::{
    e1_curve, e1_explicit_points, CurveE1Params, ExplicitSeedSet, LegendreParams,
};
use crate::error::{Error, Result};
use crate::field::checked_pow;
use crate::heights::{e1_min_norm, legendre_gram, legendre_min_norm_bound, E1CanonicalHeight};
use crate::lattice::density::rational_pow;
use crate::lattice::{
    gram_from_points, normalized_center_density, saturate, GramMatrix, LatticeBasis,
    SqrtRational, ENUMERATION_RANK_LIMIT,
};
use crate::Rational;

fn int(n: u128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `sqrt(sha) * r^(-floor(q/6)/2) * ((q+1)/12)^(q-1)`.
pub fn prop47_bound(q: u64, r: u128, sha_lower: u64) -> Result<SqrtRational> {
    if q < 5 || !(q + 1).is_multiple_of(6) {
        return Err(Error::InvalidParams(format!("q = {q} is not 5 mod 6")));
    }
    if sha_lower == 0 || r < 2 {
        return Err(Error::InvalidParams("need sha_lower >= 1 and r >= 2".into()));
    }
    let base = Rational::new(BigInt::from(q + 1), BigInt::from(12));
    let square = int(sha_lower as u128) * rational_pow(&int(r), -((q / 6) as i64))
        * rational_pow(&base, 2 * (q as i64 - 1));
    SqrtRational::new(square)
}

/// `(computed / analytic)^2`, a lower bound on `|Sha|` when the analytic
/// bound used `|Sha| = 1`.
pub fn sha_lower_bound(computed: &SqrtRational, analytic: &SqrtRational) -> Result<Rational> {
    if !computed.square().is_positive() || !analytic.square().is_positive() {
        return Err(Error::InvalidParams("density bounds must be positive".into()));
    }
    Ok(computed.square() / analytic.square())
}

/// Best known normalized center densities in the dimensions of the tables.
pub fn best_known(dimension: usize) -> Option<&'static str> {
    match dimension {
        2 => Some("0.288"),
        4 => Some("0.125"),
        6 => Some("0.0721"),
        8 => Some("0.0625"),
        20 => Some("0.1315"),
        24 => Some("1.003"),
        26 => Some("0.577"),
        32 => Some("2.565"),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RunTier {
    Default,
    Long,
    VeryLong,
}

/// `(p, c, s)` of the E1 rows computed at a given tier.
pub fn table1_params(tier: RunTier) -> Vec<(u32, u32, u32)> {
    let mut rows = vec![(5, 1, 4), (5, 1, 8), (5, 1, 12), (11, 1, 2), (11, 1, 6)];
    if tier >= RunTier::Long {
        rows.push((17, 1, 4));
    }
    if tier >= RunTier::VeryLong {
        // least sufficiently large r for q = 5^3
        rows.push((5, 3, 12));
    }
    rows
}

/// `(p, f)` of the Legendre rows.
pub fn table2_params() -> Vec<(u32, u32)> {
    vec![(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)]
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub params: CurveE1Params,
    pub q: u64,
    pub r: u128,
    pub dimension: usize,
    pub n_min: Rational,
    pub det: Rational,
    pub delta_computed: SqrtRational,
    pub delta_prop47: SqrtRational,
    pub sha_lower: Rational,
    pub best_known: Option<&'static str>,
    pub n_points: usize,
    pub gram: GramMatrix<Rational>,
    pub lattice: LatticeBasis,
}

impl Table1Row {
    pub fn sha_nontrivial(&self) -> bool {
        self.sha_lower > Rational::one()
    }
}

/// Full E1 pipeline: explicit points, Gram matrix, saturation, density.
pub fn table1_row(p: u32, c: u32, s: u32) -> Result<Table1Row> {
    let params = CurveE1Params::new(p, c, s)?;
    let q = params.q();
    let r = checked_pow(p as u128, s)
        .ok_or_else(|| Error::InvalidParams(format!("r = {p}^{s} overflows")))?;
    let field = params.field()?;
    let curve = e1_curve(&params, &field)?;
    let seeds = ExplicitSeedSet::solve(&field, q)?;
    let points = e1_explicit_points(&curve, &seeds)?;
    let height = E1CanonicalHeight::new(&curve)?;
    let gram = gram_from_points(&curve, &points, &height)?;
    let lattice = saturate(gram.entries())?;
    let expected = params.rank();
    if lattice.rank() != expected {
        return Err(Error::RankDeficient {
            expected,
            found: lattice.rank(),
        });
    }
    let n_min = e1_min_norm(q)?;
    let det = lattice.det();
    let density = normalized_center_density(expected, &n_min, &det)?;
    let delta_prop47 = prop47_bound(q, r, 1)?;
    let sha_lower = sha_lower_bound(&density.delta, &delta_prop47)?;
    Ok(Table1Row {
        params,
        q,
        r,
        dimension: expected,
        n_min,
        det,
        delta_computed: density.delta,
        delta_prop47,
        sha_lower,
        best_known: best_known(expected),
        n_points: gram.n_gen(),
        gram,
        lattice,
    })
}

#[derive(Clone, Debug)]
pub struct Table2Row {
    pub p: u32,
    pub f: u32,
    pub d: usize,
    pub dimension: usize,
    pub det: Rational,
    /// The lower bound `(d-1)/(2d)` used in place of `N_min`.
    pub n_min_bound: Rational,
    pub delta_bound: SqrtRational,
    /// Exact minimum of the sublattice, when the rank allows enumeration.
    pub true_min: Option<Rational>,
    pub delta_true_min: Option<SqrtRational>,
    pub best_known: Option<&'static str>,
    pub lattice: LatticeBasis,
}

/// Legendre sublattice from the closed-form pairing, with the density taken
/// at the norm lower bound.
pub fn table2_row(p: u32, f: u32) -> Result<Table2Row> {
    let params = LegendreParams::new(p, f)?;
    let d = params.d;
    let lattice = saturate(&legendre_gram(d))?;
    if lattice.rank() != params.rank() {
        return Err(Error::RankDeficient {
            expected: params.rank(),
            found: lattice.rank(),
        });
    }
    let n = lattice.rank();
    let det = lattice.det();
    let n_min_bound = legendre_min_norm_bound(d);
    let delta_bound = normalized_center_density(n, &n_min_bound, &det)?.delta;
    let (true_min, delta_true_min) = if n <= ENUMERATION_RANK_LIMIT {
        let (m, _) = lattice.shortest_vector()?;
        let delta = normalized_center_density(n, &m, &det)?.delta;
        (Some(m), Some(delta))
    } else {
        (None, None)
    };
    Ok(Table2Row {
        p,
        f,
        d,
        dimension: n,
        det,
        n_min_bound,
        delta_bound,
        true_min,
        delta_true_min,
        best_known: best_known(n),
        lattice,
    })
}

const SIG: usize = 4;

pub const TABLE1_CSV_HEADER: &str = "q,r,delta_computed,delta_prop47,dimension,best_known,sha_lower";
pub const TABLE2_CSV_HEADER: &str = "p,f,dimension,delta_bound,delta_true_min,best_known";

fn render_rational(x: &Rational) -> String {
    SqrtRational::from_rational(x).map_or_else(|_| x.to_string(), |v| v.render(SIG))
}

impl Table1Row {
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.q.to_string(),
            self.r.to_string(),
            self.delta_computed.render(SIG),
            self.delta_prop47.render(SIG),
            self.dimension.to_string(),
            self.best_known.unwrap_or("").to_string(),
            render_rational(&self.sha_lower),
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.params.p,
            "c": self.params.c,
            "s": self.params.s,
            "q": self.q,
            "r": self.r.to_string(),
            "dimension": self.dimension,
            "generators": self.n_points,
            "n_min": self.n_min.to_string(),
            "det": self.det.to_string(),
            "delta_computed": self.delta_computed.render(SIG),
            "delta_computed_exact": self.delta_computed.expression(),
            "delta_prop47": self.delta_prop47.render(SIG),
            "delta_prop47_exact": self.delta_prop47.expression(),
            "sha_lower": self.sha_lower.to_string(),
            "sha_nontrivial": self.sha_nontrivial(),
            "best_known": self.best_known,
        })
    }
}

impl Table2Row {
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            self.f.to_string(),
            self.dimension.to_string(),
            self.delta_bound.render(SIG),
            self.delta_true_min
                .as_ref()
                .map_or_else(String::new, |v| v.render(SIG)),
            self.best_known.unwrap_or("").to_string(),
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "p": self.p,
            "f": self.f,
            "d": self.d,
            "dimension": self.dimension,
            "det": self.det.to_string(),
            "n_min_bound": self.n_min_bound.to_string(),
            "delta_bound": self.delta_bound.render(SIG),
            "delta_bound_exact": self.delta_bound.expression(),
            "true_min": self.true_min.as_ref().map(|m| m.to_string()),
            "delta_true_min": self.delta_true_min.as_ref().map(|v| v.render(SIG)),
            "delta_true_min_exact": self.delta_true_min.as_ref().map(|v| v.expression()),
            "best_known": self.best_known,
        })
    }
}
