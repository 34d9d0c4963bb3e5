use csfkit::chromatic::csf;
use csfkit::ganalogue::GHom;
use csfkit::json::{SymFJson, VPolyJson};
use csfkit::symfunc::to_e_basis;
use csfkit::uio::enumerate_uios;
use csfkit::{Partition, SymF, VPoly};

#[test]
fn symmetric_functions_round_trip() {
    for n in 1..=4 {
        for u in enumerate_uios(n).unwrap() {
            let x = csf(&u.incomparability_graph()).unwrap();
            for f in [x.clone(), to_e_basis(&x).unwrap()] {
                let text = serde_json::to_string(&SymFJson::from(&f)).unwrap();
                let back: SymFJson = serde_json::from_str(&text).unwrap();
                assert_eq!(SymF::try_from(&back).unwrap(), f);
            }
        }
    }
}

#[test]
fn vertex_polynomials_round_trip() {
    for u in enumerate_uios(4).unwrap() {
        let hom = GHom::new(&u.incomparability_graph());
        let p = hom.m(&Partition::new(vec![2, 1]).unwrap()).unwrap();
        let text = serde_json::to_string(&VPolyJson::from(&p)).unwrap();
        let back: VPolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(VPoly::try_from(&back).unwrap(), p);
    }
}

#[test]
fn malformed_input_is_rejected() {
    let bad: SymFJson = serde_json::from_str(r#"{"basis":"q","degree":1,"terms":[]}"#).unwrap();
    assert!(SymF::try_from(&bad).is_err());
    let bad: SymFJson = serde_json::from_str(r#"{"basis":"e","degree":2,"terms":[{"partition":[3],"coeff":"1"}]}"#).unwrap();
    assert!(SymF::try_from(&bad).is_err());
    let bad: VPolyJson = serde_json::from_str(r#"{"n":2,"terms":[{"exps":{"3":1},"coeff":"1"}]}"#).unwrap();
    assert!(VPoly::try_from(&bad).is_err());
    let bad: VPolyJson = serde_json::from_str(r#"{"n":2,"terms":[{"exps":{"1":1},"coeff":"x"}]}"#).unwrap();
    assert!(VPoly::try_from(&bad).is_err());
}
