use gridnet_core::bounds::{moore, moore_min_diameter};
use gridnet_core::constructions::{check_ds_na_conditions, check_na_mh_conditions, ds_to_mh, ds_to_na, na_to_mh};
use gridnet_core::graphs::{all_pairs_oracle, bfs_profile, diameter};
use gridnet_core::search::{search_ds, search_mh, search_na, MhMode};
use gridnet_core::{CompileMode, Diameter, DoubleStep, FamilyParams, Manhattan, NewAmsterdam, SearchOptions};
use proptest::prelude::*;

fn valid_ds() -> impl Strategy<Value = DoubleStep> {
    (5u32..80, 1i64..40, 1i64..40)
        .prop_filter_map("invalid", |(n, a, b)| {
            let p = DoubleStep::new(n, a, b).ok()?;
            p.validate().is_ok().then_some(p)
        })
}

fn odd(n: u32) -> impl Strategy<Value = i64> {
    (0..n / 2).prop_map(|i| i64::from(2 * i + 1))
}

fn any_params() -> impl Strategy<Value = FamilyParams> {
    prop_oneof![
        valid_ds().prop_map(FamilyParams::from),
        (2u32..30).prop_flat_map(|h| {
            let n = 2 * h;
            (Just(n), odd(n), odd(n), odd(n))
                .prop_map(|(n, a, b, c)| NewAmsterdam::new(n, a, b, c, -(a + b + c)).unwrap().into())
        }),
        (2u32..14).prop_flat_map(|q| {
            let n = 4 * q;
            (Just(n), odd(n), odd(n), odd(n), odd(n), odd(n)).prop_map(|(n, a0, a1, a2, b0, b1)| {
                let s = a0 + a2;
                Manhattan::new(n, [a0, b0, a1, b1, a2, s - b0, -s - a1, -s - b1]).unwrap().into()
            })
        }),
    ]
}

proptest! {
    #[test]
    fn translations_solve_their_congruences(ds in valid_ds()) {
        let na = ds_to_na(&ds).unwrap();
        prop_assert_eq!(na.order(), 2 * ds.order());
        prop_assert!(check_ds_na_conditions(&ds, &na).is_empty());
        let mh = na_to_mh(&na).unwrap();
        prop_assert_eq!(mh.order(), 4 * ds.order());
        prop_assert!(check_na_mh_conditions(&na, &mh).is_empty());
        prop_assert_eq!(ds_to_mh(&ds).unwrap(), mh);
    }

    #[test]
    fn display_parse_round_trip(p in any_params()) {
        let text = p.to_string();
        let back: FamilyParams = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn distances_satisfy_triangle_inequality(p in any_params()) {
        let g = p.compile(CompileMode::Force).unwrap();
        let m = all_pairs_oracle(&g).unwrap();
        let n = g.order();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if let (Some(uv), Some(vw)) = (m.get(u, v), m.get(v, w)) {
                        let uw = m.get(u, w);
                        prop_assert!(uw.is_some_and(|d| d <= uv + vw));
                    }
                }
            }
        }
    }

    #[test]
    fn bfs_rows_match_all_pairs(p in any_params()) {
        let g = p.compile(CompileMode::Force).unwrap();
        let m = all_pairs_oracle(&g).unwrap();
        for s in 0..g.order() {
            let profile = bfs_profile(&g, s).unwrap();
            prop_assert_eq!(profile.dist.as_slice(), m.row(s));
        }
    }
}

#[test]
fn case_b_instances_have_a_unique_farthest_vertex() {
    for k in 1..=6u32 {
        let n = 4 * k * k + 4 * k + 4;
        let g = NewAmsterdam::new(n, -1, 1, i64::from(2 * k + 1), -i64::from(2 * k + 1))
            .unwrap()
            .compile(CompileMode::Strict)
            .unwrap();
        for source in [0, 1] {
            let p = bfs_profile(&g, source).unwrap();
            assert_eq!(p.eccentricity, 2 * k + 2);
            assert_eq!(p.farthest.len(), 1, "k={k} source={source}: {:?}", p.farthest);
        }
    }
}

#[test]
fn search_results_respect_moore_bounds_and_reverify() {
    let opts = SearchOptions::default().with_workers(2);
    let mut results = Vec::new();
    // order 3 has no admissible pair below N/2
    assert_eq!(search_ds(3, &opts).unwrap().min_diameter, None);
    for n in 4..=40 {
        results.push(search_ds(n, &opts).unwrap());
    }
    for n in (4..=40).step_by(2) {
        results.push(search_na(n, &opts).unwrap());
    }
    for n in (8..=40).step_by(4) {
        results.push(search_mh(n, &opts).unwrap());
    }
    for r in &results {
        let d = r.min_diameter.expect("some instance is strongly connected");
        assert!(d >= moore_min_diameter(r.family, u64::from(r.order)), "{r:?}");
        assert!(u64::from(r.order) <= moore(r.family, d).unwrap(), "{r:?}");
        for w in &r.witnesses {
            assert_eq!(diameter(&w.compile(CompileMode::Strict).unwrap()), Diameter::Finite(d));
        }
    }
}

#[test]
fn manhattan_direct_search_small_orders() {
    let opts = SearchOptions { mh_mode: MhMode::Direct, workers: 4, ..SearchOptions::default() };
    for n in [20, 24, 28, 32] {
        let direct = search_mh(n, &opts).unwrap();
        let via_na = search_mh(n, &SearchOptions::default()).unwrap();
        assert_eq!(direct.min_diameter, via_na.min_diameter, "N={n}");
    }
    // Dropping the residue rule admits step sets outside the family.
    let loose = SearchOptions { mod4_filter: false, ..opts };
    assert_eq!(search_mh(28, &loose).unwrap().min_diameter, Some(5));
    assert_eq!(search_mh(28, &opts).unwrap().min_diameter, Some(6));
}
