//! Property tests for the order, homogeneity, transport and bound arithmetic.

mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use weak_ramsey::bounds::{fgh, lb_bound, log_iter, threshold_f, tower, ub_bound};
use weak_ramsey::format::{parse_coloring, parse_sequence, write_coloring, write_sequence};
use weak_ramsey::lift::{alpha, g_parities};
use weak_ramsey::primitives::{is_homogeneous, is_weakly_homogeneous};
use weak_ramsey::search;
use weak_ramsey::transforms::{coloring_to_sequence, compute_h, sequence_to_coloring};
use weak_ramsey::{Coloring, FSpec, Tuple, TupleSequence};

/// A random pair or triple coloring on `[lo, lo + width - 1]`.
fn coloring(dim: usize, max_width: u64, colors: u32) -> impl Strategy<Value = Coloring> {
    (0u64..3, dim as u64..=max_width).prop_flat_map(move |(lo, width)| {
        let hi = lo + width - 1;
        let cells = weak_ramsey::primitives::binomial(width, dim as u64) as usize;
        prop::collection::vec(0..colors, cells)
            .prop_map(move |v| Coloring::from_lex_colors(dim, colors, lo, hi, &v).unwrap())
    })
}

fn subset_of(c: &Coloring) -> impl Strategy<Value = Vec<u64>> {
    let (lo, hi) = (c.lo(), c.hi());
    prop::collection::btree_set(lo..=hi, 0..=(hi - lo + 1) as usize)
        .prop_map(|s| s.into_iter().collect())
}

fn tuple(arity: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..4, arity)
}

proptest! {
    #[test]
    fn product_order_is_a_partial_order(s in tuple(3), t in tuple(3), u in tuple(3)) {
        let (s, t, u) = (Tuple::new(s), Tuple::new(t), Tuple::new(u));
        prop_assert!(s.dominated_by(&s).unwrap());
        if s.dominated_by(&t).unwrap() && t.dominated_by(&s).unwrap() {
            prop_assert_eq!(&s, &t);
        }
        if s.dominated_by(&t).unwrap() && t.dominated_by(&u).unwrap() {
            prop_assert!(s.dominated_by(&u).unwrap());
        }
    }

    #[test]
    fn badness_matches_pairwise_scan(rows in prop::collection::vec(tuple(2), 0..7)) {
        let seq = TupleSequence::from_rows(2, rows.clone()).unwrap();
        prop_assert_eq!(seq.is_bad(), common::bad(&rows));
    }

    #[test]
    fn homogeneous_implies_weakly_homogeneous((c, h) in coloring(2, 7, 2).prop_flat_map(|c| {
        let s = subset_of(&c);
        (Just(c), s)
    })) {
        if is_homogeneous(&c, &h).unwrap() {
            prop_assert!(is_weakly_homogeneous(&c, &h).unwrap());
        }
        prop_assert_eq!(is_weakly_homogeneous(&c, &h).unwrap(), common::weak_hom(&c, &h));
    }

    #[test]
    fn contiguous_runs_of_weak_hom_sets_are_weak_hom((c, h) in coloring(3, 8, 2).prop_flat_map(|c| {
        let s = subset_of(&c);
        (Just(c), s)
    }), cut in 0usize..8, len in 0usize..8) {
        if is_weakly_homogeneous(&c, &h).unwrap() {
            let start = cut.min(h.len());
            let end = (start + len).min(h.len());
            prop_assert!(is_weakly_homogeneous(&c, &h[start..end]).unwrap());
        }
    }

    #[test]
    fn one_color_is_homogeneous_everywhere(lo in 0u64..5, width in 2u64..8) {
        let c = Coloring::constant(2, 1, lo, lo + width - 1, 0).unwrap();
        let all: Vec<u64> = (lo..lo + width).collect();
        prop_assert!(is_homogeneous(&c, &all).unwrap());
        prop_assert_eq!(search::max_weakly_homogeneous_size(&c).unwrap(), width as usize);
    }

    #[test]
    fn largest_weak_hom_set_matches_subset_scan(c in coloring(2, 8, 3)) {
        prop_assert_eq!(search::max_weakly_homogeneous_size(&c).unwrap(), common::max_weak_hom(&c));
    }

    #[test]
    fn pairs_on_a_to_the_c_points_have_weak_hom_sets(colors in 1u32..=2, seed in prop::collection::vec(0u32..2, 6)) {
        // wr_c(a) = a^c: on [0, a^c] with a = 2 every coloring has a set of size 3.
        let a = 2u64;
        let hi = a.pow(colors);
        let width = hi + 1;
        let cells = weak_ramsey::primitives::binomial(width, 2) as usize;
        let v: Vec<u32> = (0..cells).map(|i| seed[i % seed.len()] % colors).collect();
        let c = Coloring::from_lex_colors(2, colors, 0, hi, &v).unwrap();
        prop_assert!(search::find_weakly_homogeneous_of_size(&c, a as usize + 1).unwrap().is_some());
    }

    #[test]
    fn h_values_fall_along_same_colored_edges(c in coloring(2, 6, 2)) {
        let f = FSpec::Const(6);
        prop_assume!(common::f_bad(&c, &f));
        let h = compute_h(&c, &f).unwrap();
        for i in 0..h.rows() {
            for j in 0..i {
                let k = c.color(&[c.lo() + j as u64, c.lo() + i as u64]).unwrap() as usize;
                prop_assert!(h.get(i, k) < h.get(j, k));
            }
        }
        let seq = coloring_to_sequence(&c, &f).unwrap();
        let rows: Vec<Vec<u64>> = seq.items().iter().map(|t| t.coords().to_vec()).collect();
        prop_assert!(common::bad(&rows) && common::bounded(&rows, c.lo(), &f));
    }

    #[test]
    fn bad_sequences_give_bad_colorings(rows in prop::collection::vec(tuple(2), 1..6), a in 0u64..3) {
        prop_assume!(common::bad(&rows));
        let seq = TupleSequence::from_rows(2, rows.clone()).unwrap();
        let c = sequence_to_coloring(&seq, a).unwrap();
        prop_assert_eq!(c.lo(), a);
        prop_assert_eq!(c.hi(), a + rows.len() as u64 - 1);
        let mut values = vec![0; a as usize];
        values.extend(rows.iter().map(|r| r.iter().copied().max().unwrap() + 1));
        let f = FSpec::Table { values, default: 0 };
        prop_assert!(common::f_bad(&c, &f));
    }

    #[test]
    fn file_formats_round_trip(c in coloring(2, 7, 3), rows in prop::collection::vec(tuple(3), 0..6)) {
        let text = write_coloring(&c).unwrap();
        let back = parse_coloring(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(write_coloring(&back).unwrap(), text);
        let seq = TupleSequence::from_rows(3, rows).unwrap();
        let text = write_sequence(&seq);
        prop_assert_eq!(write_sequence(&parse_sequence(&text).unwrap()), text);
    }

    #[test]
    fn alpha_matches_bit_strings(x in 0u64..1 << 20, gap in 1u64..1 << 20) {
        let y = x + gap;
        let a = alpha(x, y).unwrap();
        prop_assert_eq!(a, common::alpha(x, y));
        prop_assert_eq!(x >> (a + 1), y >> (a + 1));
        prop_assert_ne!(x >> a & 1, y >> a & 1);
    }

    #[test]
    fn parities_are_bits(pts in prop::collection::btree_set(0u64..64, 3..6)) {
        let pts: Vec<u64> = pts.into_iter().collect();
        let (g0, g1) = g_parities(&pts).unwrap();
        prop_assert!(g0 <= 1 && g1 <= 1);
    }

    #[test]
    fn bounds_are_monotone(c in 1u64..4, m in 2u64..6) {
        let ub = ub_bound(2, c, m).unwrap();
        prop_assert!(ub_bound(2, c, m + 1).unwrap() > ub);
        prop_assert!(ub_bound(2, c + 1, m).unwrap() > ub);
        let (_, lb) = lb_bound(2, c, m).unwrap();
        prop_assert!(lb <= ub);
        prop_assert_eq!(lb, BigUint::from(m).pow(c as u32));
    }

    #[test]
    fn tower_of_log_inverts(x in 1u32..20) {
        let t = tower(2, &BigUint::from(x)).unwrap();
        prop_assert_eq!(log_iter(2, &t).unwrap(), BigUint::from(x));
    }

    #[test]
    fn threshold_is_a_floor_root(x in 1u64..u64::MAX, n in 1u32..5) {
        let x = BigUint::from(x);
        let r = threshold_f(2, n, &x).unwrap();
        prop_assert!(r.pow(n) <= x);
        prop_assert!((&r + 1u32).pow(n) > x);
    }

    #[test]
    fn hierarchy_is_strictly_increasing(n in 0u32..3, x in 0u64..6) {
        let v = fgh(n, x).unwrap();
        prop_assert!(v > BigUint::from(x));
        prop_assert!(fgh(n, x + 1).unwrap() > v);
        // F_3 leaves any memory budget from x = 2 on.
        if n < 2 || x < 2 {
            prop_assert!(fgh(n + 1, x).unwrap() >= v);
        }
    }
}
