use arctype::partitions::enumerate_marked;
use arctype::realize::{plan, realize, CertificateMode, RealizeConfig, VerifyMode};
use arctype::{arc_type, Error, MarkedPartition};

#[test]
fn every_small_partition_realizes() {
    let cfg = RealizeConfig::default();
    for d in 1..=6 {
        for p in enumerate_marked(d) {
            if !p.is_realisable() {
                assert!(matches!(plan(&p), Err(Error::NotRealisable(_))), "{p}");
                continue;
            }
            let t = std::time::Instant::now();
            let r = realize(&p, &cfg).unwrap_or_else(|e| panic!("{p}: {e}"));
            assert_eq!(r.graph.valency(), Some(d), "{p}");
            assert!(r.graph.is_connected(), "{p}");
            assert_eq!(r.graph.n(), r.blueprint.vertex_count(), "{p}");
            if r.certificate.mode == CertificateMode::Direct {
                assert_eq!(r.certificate.verified_arc_type.as_ref(), Some(&p));
            }
            eprintln!("{p}: n={} {} {:?}", r.graph.n(), r.certificate.mode, t.elapsed());
        }
    }
}

#[test]
fn compositional_agrees_with_direct() {
    let cfg = RealizeConfig {
        mode: VerifyMode::Compositional,
        ..RealizeConfig::default()
    };
    for s in ["3+1", "2+(1+1)", "1+1+(2+2)+(1+1)", "2+1+1+1"] {
        let p: MarkedPartition = s.parse().unwrap();
        let r = realize(&p, &cfg).unwrap();
        assert_eq!(r.certificate.mode, CertificateMode::Compositional);
        assert_eq!(r.certificate.blocks_pairwise_distinct, Some(true));
        assert_eq!(arc_type(&r.graph).unwrap(), p, "{s}");
    }
}
