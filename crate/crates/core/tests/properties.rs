//! Property tests over fields, polynomials and the E1 group law.

use std::sync::OnceLock;

use mwlat::curve::{
    e1_curve, e1_explicit_points, CurveE1Params, CurvePoint, ExplicitSeedSet, WeierstrassCurve,
};
use mwlat::field::{Field, FieldCtx};
use mwlat::heights::{canonical_height_e1, pairing, E1CanonicalHeight};
use mwlat::poly::{Poly, RationalFunction};
use mwlat::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

fn gf(p: u32, s: usize) -> Field {
    FieldCtx::new(p, s).unwrap()
}

fn gf125() -> &'static Field {
    static F: OnceLock<Field> = OnceLock::new();
    F.get_or_init(|| gf(5, 3))
}

fn e1() -> &'static (WeierstrassCurve, Vec<CurvePoint>) {
    static E: OnceLock<(WeierstrassCurve, Vec<CurvePoint>)> = OnceLock::new();
    E.get_or_init(|| {
        let params = CurveE1Params::new(5, 1, 4).unwrap();
        let f = params.field().unwrap();
        let c = e1_curve(&params, &f).unwrap();
        let seeds = ExplicitSeedSet::solve(&f, 5).unwrap();
        let pts = e1_explicit_points(&c, &seeds).unwrap();
        (c, pts)
    })
}

fn poly(f: &Field, idx: &[u128]) -> Poly {
    Poly::from_indices(f, idx).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<u128>> {
    prop::collection::vec(0u128..125, 0..6)
}

fn nonzero_coeffs() -> impl Strategy<Value = Vec<u128>> {
    coeffs().prop_filter("nonzero", |v| v.iter().any(|&c| c != 0))
}

fn h(p: &CurvePoint) -> Rational {
    canonical_height_e1(&e1().0, p).unwrap()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in 0u128..125, b in 0u128..125, c in 0u128..125) {
        let f = gf125();
        let (a, b, c) = (f.from_index(a).unwrap(), f.from_index(b).unwrap(), f.from_index(c).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(n in coeffs(), d in nonzero_coeffs()) {
        let f = gf125();
        let r = RationalFunction::new(poly(f, &n), poly(f, &d)).unwrap();
        let again = RationalFunction::new(r.num().clone(), r.den().clone()).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert!(r.num().gcd(r.den()).is_one());
        prop_assert_eq!(r.den().leading(), Some(f.one()));
    }

    #[test]
    fn valuations_are_additive(a in nonzero_coeffs(), b in nonzero_coeffs(), c in nonzero_coeffs(), root in 0u128..125) {
        let f = gf125();
        let x = RationalFunction::new(poly(f, &a), poly(f, &c)).unwrap();
        let y: RationalFunction = poly(f, &b).into();
        let alpha = f.from_index(root).unwrap();
        let xy = &x * &y;
        prop_assert_eq!(xy.ord_at(alpha).unwrap(), x.ord_at(alpha).unwrap() + y.ord_at(alpha).unwrap());
        prop_assert_eq!(xy.ord_infinity().unwrap(), x.ord_infinity().unwrap() + y.ord_infinity().unwrap());
    }

    #[test]
    fn non_archimedean(a in nonzero_coeffs(), b in nonzero_coeffs(), root in 0u128..125) {
        let f = gf125();
        let x: RationalFunction = poly(f, &a).into();
        let y = RationalFunction::new(poly(f, &b), Poly::linear(f, f.from_index(root).unwrap())).unwrap();
        let s = &x + &y;
        let alpha = f.from_index(root).unwrap();
        if !s.is_zero() {
            let (ox, oy, os) = (x.ord_at(alpha).unwrap(), y.ord_at(alpha).unwrap(), s.ord_at(alpha).unwrap());
            prop_assert!(os >= ox.min(oy));
            if ox != oy {
                prop_assert_eq!(os, ox.min(oy));
            }
        }
    }

    #[test]
    fn heights_are_quadratic(i in 0usize..120, n in -4i64..=4) {
        let (c, pts) = e1();
        let p = &pts[i];
        let np = c.mul_scalar(n, p).unwrap();
        prop_assert_eq!(h(&np), int(n * n) * h(p));
    }

    #[test]
    fn parallelogram_law(i in 0usize..120, j in 0usize..120) {
        let (c, pts) = e1();
        let (p, q) = (&pts[i], &pts[j]);
        let s = c.add(p, q).unwrap();
        let d = c.sub(p, q).unwrap();
        prop_assert_eq!(h(&s) + h(&d), int(2) * h(p) + int(2) * h(q));
    }

    #[test]
    fn group_law_is_associative(i in 0usize..120, j in 0usize..120, k in 0usize..120) {
        let (c, pts) = e1();
        let (p, q, r) = (&pts[i], &pts[j], &pts[k]);
        let left = c.add(&c.add(p, q).unwrap(), r).unwrap();
        let right = c.add(p, &c.add(q, r).unwrap()).unwrap();
        prop_assert_eq!(left.key(), right.key());
        prop_assert!(c.on_curve(&left).unwrap());
    }

    #[test]
    fn pairing_is_bilinear(i in 0usize..120, j in 0usize..120, k in 0usize..120) {
        let (c, pts) = e1();
        let ht = E1CanonicalHeight::new(c).unwrap();
        let (p, q, r) = (&pts[i], &pts[j], &pts[k]);
        let qr = c.add(q, r).unwrap();
        let lhs = pairing(c, &ht, p, q).unwrap() + pairing(c, &ht, p, r).unwrap();
        prop_assert_eq!(lhs, pairing(c, &ht, p, &qr).unwrap());
        prop_assert_eq!(pairing(c, &ht, p, q).unwrap(), pairing(c, &ht, q, p).unwrap());
    }
}

#[test]
fn limit_definition_agrees() {
    // h(2^k P) / 4^k for k <= 2 reproduces h(P)
    let (c, pts) = e1();
    for p in pts.iter().step_by(7) {
        let mut cur = p.clone();
        for k in 1..=2u32 {
            cur = c.double(&cur).unwrap();
            assert_eq!(h(&cur) / int(4i64.pow(k)), h(p));
        }
    }
}
