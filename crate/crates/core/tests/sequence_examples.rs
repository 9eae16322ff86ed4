use std::collections::BTreeMap;

use mirror_cs::catalog::{DegenerationFamily, Family, FibrationFamily};
use mirror_cs::sequence::{builtin_template, check_sequence, extract_lanes, map_rank};
use mirror_cs::{Index, LaneCoord, Space, TableSet};

fn tables(spec: &str) -> TableSet {
    spec.parse::<Family>().unwrap().tables().unwrap()
}

#[test]
fn mirror_cs_l2_totals_on_surface_base() {
    let tmpl = builtin_template("mirror-cs").unwrap();
    for g in 2..=8u64 {
        let lanes = extract_lanes(&tmpl, &tables(&format!("k3-finite:g={g}"))).unwrap();
        let mut sums: BTreeMap<(i32, usize), u64> = BTreeMap::new();
        for lane in lanes.iter().filter(|l| l.coord.l == 2 && l.phase == 0) {
            for e in &lane.chain {
                *sums.entry((e.cycle_k, e.term)).or_default() += e.dim;
            }
        }
        let chain: Vec<u64> = sums.values().copied().collect();
        let expected = [1, 22, 2 * g + 21, 2 * g + 21, 22, 1, 0, 1, 1];
        assert!(
            chain.windows(expected.len()).any(|w| w == expected),
            "g={g}: {chain:?}"
        );
    }
}

#[test]
fn loc1_section_term_reads_h1_of_z() {
    let tmpl = builtin_template("loc1").unwrap();
    for r in 1..=5 {
        let lanes = extract_lanes(&tmpl, &tables(&format!("k3-elliptic:r={r}"))).unwrap();
        for p in [1, 2] {
            let lane = lanes
                .iter()
                .find(|l| l.coord == LaneCoord { l: 2, q: 3, p })
                .unwrap();
            let z = lane
                .chain
                .iter()
                .find(|e| tmpl.terms()[e.term].space == Space::Z(1) && e.dim > 0)
                .unwrap();
            assert_eq!((z.index.k, z.dim), (1, r));
        }
    }
}

#[test]
fn empty_tables_have_no_lanes() {
    let tmpl = builtin_template("loc2").unwrap();
    let mut set = tables("k3-elliptic:r=2");
    for s in [Space::Y, Space::Uc, Space::Z(1)] {
        let d = *set.require(s).unwrap().descriptor();
        set.insert(mirror_cs::TriFilteredTable::new(d)).unwrap();
    }
    assert!(extract_lanes(&tmpl, &set).unwrap().is_empty());
}

#[test]
fn missing_table_is_an_input_error() {
    let tmpl = builtin_template("cs").unwrap();
    assert!(extract_lanes(&tmpl, &tables("k3-elliptic:r=2")).is_err());
}

#[test]
fn eighteen_to_seventeen_breaks_a_mirror_cs_lane() {
    let tmpl = builtin_template("mirror-cs").unwrap();
    for r in 1..=4 {
        let mut set = tables(&format!("k3-elliptic:r={r}"));
        assert!(check_sequence(&tmpl, &set).unwrap().pass);
        let mut y = set.require(Space::Y).unwrap().clone();
        y.set(Index::new(2, 2, 2, 1), 17);
        set.insert(y).unwrap();
        let report = check_sequence(&tmpl, &set).unwrap();
        assert!(!report.pass);
        assert!(report
            .violations
            .iter()
            .any(|v| v.lane == Some(LaneCoord { l: 2, q: 2, p: 1 })));
    }
}

#[test]
fn nu_has_rank_two_on_h2_lim() {
    let cs = builtin_template("cs").unwrap();
    for p in 1..=20 {
        for d in [
            DegenerationFamily::TypeII { r: p },
            DegenerationFamily::TypeIII { k: p },
        ] {
            let set = Family::Degeneration(d).tables().unwrap();
            assert_eq!(map_rank(&cs, &set, 1, Some(2)).unwrap(), 2, "{d:?}");
            // coimage of restriction is the part of H^2_lim not hit by nu
            let lim = set.require(Space::Xlim).unwrap().degree_total(2);
            assert_eq!(lim - map_rank(&cs, &set, 1, Some(2)).unwrap(), 20);
        }
    }
}

#[test]
fn fibration_templates_pass_across_parameters() {
    for r in 1..=20 {
        for name in ["loc1", "loc2", "mirror-cs"] {
            let tmpl = builtin_template(name).unwrap();
            let f = Family::Fibration(FibrationFamily::EllipticCurveBase { r });
            assert!(
                check_sequence(&tmpl, &f.tables().unwrap()).unwrap().pass,
                "{name} {f}"
            );
        }
    }
}
