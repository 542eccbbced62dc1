use gqchar_core::catalog::*;
use gqchar_core::highestweight::*;
use gqchar_core::rootsystem::*;
use gqchar_core::sampling::*;
use std::collections::BTreeMap;
fn main() {
    for f in standard_entries(4) {
        let c = build_catalog(f, CatalogParams::default()).unwrap();
        let rs = compute_roots(&c.bichar, DEFAULT_OBJECT_CAP).unwrap();
        let s = sample_characters(&c, 150, 1);
        let (mut sat, mut viol, mut mism) = (0, 0, 0);
        let mut conds: BTreeMap<String, usize> = BTreeMap::new();
        let t = std::time::Instant::now();
        for l in &s {
            let v = classify_pibar(&c, l, C10Reading::Verbatim).unwrap();
            if v.passes_integrality { sat += 1 } else { viol += 1 }
            *conds.entry(v.matched_condition.clone()).or_default() += 1;
            let bfs = is_finite_dim(&c.bichar, &rs, l, 200000).unwrap();
            if bfs != v.finite { mism += 1; if mism <= 3 { println!("  MISMATCH {:?} bfs={bfs} v={:?}", l.pi_lambdas(c.ell()).iter().map(|x| x.to_string()).collect::<Vec<_>>(), v.matched_condition); } }
        }
        println!("{f}: sat {sat} viol {viol} mism {mism} {:?} {:?}", conds, t.elapsed());
    }
}
