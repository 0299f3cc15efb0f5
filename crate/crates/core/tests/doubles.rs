use tqd_core::cohomology::h3_group;
use tqd_core::double::DoubleTensors;
use tqd_core::groups::elementary_abelian;
use tqd_core::Cyc;

#[test]
fn every_class_on_z2_cubed_verifies() {
    let g = elementary_abelian(3);
    let h = h3_group(&g).unwrap();
    let classes = h.all_classes();
    assert_eq!(classes.len(), 128);
    for c in classes {
        let q = DoubleTensors::build(&h.element(&c)).unwrap().quasi_hopf::<Cyc>();
        let r = q.verify();
        assert!(r.all_pass(), "{c:?}: {:?}", r.failures());
    }
}
