//! Randomized comparisons against the oracle and structural identities.

mod oracle;

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use twistkit::cli::random_system;
use twistkit::coefficients::{from_twist, is_equivalent, twist, twist_classes, CoefficientSystem, Morphism, PairMorphism};
use twistkit::complex::{cylinder, polarize, DeltaComplex, SimplicialMap};
use twistkit::corpus::Kind;
use twistkit::io::Loader;
use twistkit::segal::{BarComplex, FiniteGroup, OrientationChar};
use twistkit::twisted::{induced_map, TwistedChainComplex};
use twistkit::Sign;

fn corpus() -> Vec<(String, Arc<DeltaComplex>)> {
    let l = Loader::default();
    l.corpus().names(Kind::Complex).unwrap().into_iter().map(|n| (n.clone(), l.complex_named(&n).unwrap())).collect()
}

fn seed() -> u64 {
    let s = std::env::var("TWISTKIT_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(17);
    eprintln!("seed {s}");
    s
}

#[test]
fn oracle_small_matrices() {
    assert_eq!(oracle::torsion(&vec![vec![2, 0], vec![0, 6]]), vec![2, 6]);
    assert_eq!(oracle::torsion(&vec![vec![4, 0], vec![0, 6]]), vec![2, 12]);
    assert_eq!(oracle::torsion(&vec![vec![1, 1], vec![1, -1]]), vec![2]);
    assert_eq!(oracle::torsion(&vec![vec![9, 0, 0], vec![0, 3, 0], vec![0, 0, 25]]), vec![3, 225]);
    assert_eq!(oracle::rank(&vec![vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(oracle::cyclic2_homology(1, 1), (0, vec![2]));
    assert_eq!(oracle::cyclic2_homology(-1, 0), (0, vec![2]));
}

#[test]
fn homology_and_cohomology_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    for (name, x) in corpus() {
        for _ in 0..6 {
            let system = random_system(&x, &mut rng).unwrap();
            let chain = TwistedChainComplex::new(&system);
            for n in 0..=x.dim() {
                let h = chain.homology(n).unwrap();
                assert_eq!((h.rank(), h.torsion().to_vec()), oracle::homology(&system, n), "{name} H_{n}");
                let c = chain.cohomology(n).unwrap();
                assert_eq!((c.rank(), c.torsion().to_vec()), oracle::cohomology(&system, n), "{name} H^{n}");
                for b in h.basis() {
                    assert!(h.is_cycle(b).unwrap());
                }
            }
        }
    }
}

#[test]
fn cylinder_ends_induce_equal_maps() {
    for name in ["circle3", "rp2_min", "klein"] {
        let x = Loader::default().complex_named(name).unwrap();
        let c = cylinder(&x).unwrap();
        let p = polarize(&x, None).unwrap();
        for w in twist_classes(&x, &p) {
            let l = from_twist(&p, &w, &vec![Sign::Plus; x.vertex_count()]).unwrap();
            let lc = twistkit::coefficients::pullback(&c.retraction, &l).unwrap();
            let ones = vec![Sign::Plus; x.vertex_count()];
            let i0 = PairMorphism::new(c.iota0.clone(), l.clone(), lc.clone(), ones.clone()).unwrap();
            let i1 = PairMorphism::new(c.iota1.clone(), l.clone(), lc.clone(), ones).unwrap();
            for n in 0..=x.dim() {
                assert_eq!(induced_map(&i0, n).unwrap(), induced_map(&i1, n).unwrap(), "{name} H_{n}");
            }
        }
    }
}

#[test]
fn bar_complexes_square_to_zero() {
    let groups = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))];
    for g in groups {
        let g = Arc::new(g);
        for w in OrientationChar::all(&g) {
            assert_eq!(BarComplex::new(&g, &w, 4).unwrap().square_zero_violation(), None);
        }
    }
}

fn complex_index() -> impl Strategy<Value = usize> {
    0..corpus().len()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn twist_round_trip(i in complex_index(), raw in prop::collection::vec(any::<bool>(), 16), k in 0usize..64) {
        let (_, x) = &corpus()[i];
        let p = polarize(x, None).unwrap();
        let classes = twist_classes(x, &p);
        let w = &classes[k % classes.len()];
        let mut f: Vec<Sign> = (0..x.vertex_count()).map(|v| Sign::from_bit(raw[v % raw.len()])).collect();
        for &b in p.bases() {
            f[b] = Sign::Plus;
        }
        let l = from_twist(&p, w, &f).unwrap();
        prop_assert_eq!(&twist(&l, &p), w);
        for v in 0..x.vertex_count() {
            prop_assert_eq!(l.evaluate(&p.forest_path(x, v)), f[v]);
        }
    }

    #[test]
    fn gauge_change_is_an_isomorphism(i in complex_index(), raw in prop::collection::vec(any::<bool>(), 16), s in any::<u64>()) {
        let (_, x) = &corpus()[i];
        let l0 = random_system(x, &mut ChaCha8Rng::seed_from_u64(s)).unwrap();
        let g: Vec<Sign> = (0..x.vertex_count()).map(|v| Sign::from_bit(raw[v % raw.len()])).collect();
        let signs = (0..x.edge_count()).map(|e| { let (a, b) = x.edge_endpoints(e); g[a] * l0.sign(e) * g[b] }).collect();
        let l1 = CoefficientSystem::new(x.clone(), signs).unwrap();
        let m = is_equivalent(&l0, &l1).expect("gauge-equivalent systems are isomorphic");
        prop_assert!(Morphism::new(l0.clone(), l1.clone(), m.signs().to_vec()).is_ok());
        prop_assert_eq!(Morphism::new(l0.clone(), l1.clone(), g).is_ok(), true);
        for n in 0..=x.dim() {
            let h0 = TwistedChainComplex::new(&l0).homology(n).unwrap();
            let h1 = TwistedChainComplex::new(&l1).homology(n).unwrap();
            prop_assert_eq!(h0.invariants(), h1.invariants());
        }
    }

    #[test]
    fn identity_pair_induces_identity(i in complex_index(), s in any::<u64>()) {
        let (_, x) = &corpus()[i];
        let l = random_system(x, &mut ChaCha8Rng::seed_from_u64(s)).unwrap();
        let pair = PairMorphism::new(SimplicialMap::identity(x.clone()), l.clone(), l.clone(), vec![Sign::Plus; x.vertex_count()]).unwrap();
        for n in 0..=x.dim() {
            prop_assert!(induced_map(&pair, n).unwrap().is_identity());
        }
    }
}
