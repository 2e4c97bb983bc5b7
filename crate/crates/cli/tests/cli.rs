use schubert_cli::json::{class_from_json, diagram_from_json, hilbert_from_json, tableau_from_json, Document};
use schubert_cli::{backend_classes, check_report, compare_classes, run};
use schubert_core::diagrams::{enumerate_eyd, Geometry};
use schubert_core::restriction::{hilbert_data, pullback, Backend, Problem};
use schubert_core::ring::LaurentPoly;
use schubert_core::tableaux::enumerate_svt;
use schubert_core::weyl::Kind;

fn call(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("schubert").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &str) -> Document {
    let (code, out, err) = call(&format!("{args} --format json"));
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

const A: &str = "--type A --n 7 --d 3 --w 1,3,5,2,4,6,7 --v 4,6,7,1,2,3,5";
const C: &str = "--type C --rank 4 --w 1,2,-4,-3 --v 2,-4,-3,-1";
const B: &str = "--type B --rank 5 --w 1,2,4,-5,-3 --v 2,-5,-4,-3,-1";

#[test]
fn hilbert_of_type_a_example() {
    let (code, out, _) = call(&format!("{A} --emit hilbert"));
    assert_eq!(code, 0);
    assert!(out.contains("d_w=9\n"));
    assert!(out.contains("m=[5,5,1]\n"));
    assert!(out.contains("mult=5\n"));
    assert_eq!(call(&format!("{A} --emit mult")).1, "5\n");
}

#[test]
fn counts_shifted_diagrams() {
    let (code, out, _) = call("--type C --rank 4 --lambda 2,1 --mu 4,2,1 --emit diagrams --count-only");
    assert_eq!((code, out.as_str()), (0, "7\n"));
    let (_, out, _) = call("--type C --rank 4 --lambda 2,1 --mu 4,2,1 --emit diagrams --count-only --reduced-only");
    assert_eq!(out, "4\n");
    let (_, out, _) = call("--type C --rank 4 --lambda 2,1 --mu 4,2,1 --emit tableaux --count-only");
    assert_eq!(out, "7\n");
}

#[test]
fn identity_class_is_one() {
    let (code, out, _) = call("--type A --n 4 --d 2 --w 1,2,3,4 --v 1,2,3,4 --emit class");
    assert_eq!((code, out.as_str()), (0, "1\n"));
}

#[test]
fn check_mode_agrees_on_examples() {
    assert_eq!(call(&format!("{A} --check")), (0, "3 backends agree\n".into(), String::new()));
    assert_eq!(call(&format!("{C} --check")).1, "3 backends agree\n");
    assert_eq!(call(&format!("{B} --check")).1, "4 backends agree\n");
    let doc = json(&format!("{B} --check"));
    assert!(doc.check.unwrap().agree);
}

#[test]
fn corrupted_class_is_reported() {
    let p = Problem::from_windows(Kind::A, 7, Some(3), &[1, 3, 5, 2, 4, 6, 7], &[4, 6, 7, 1, 2, 3, 5]).unwrap();
    let mut classes = backend_classes(&p, 24).unwrap();
    let bump = LaurentPoly::monomial(&[1, 0, 0, 0, 0, 0, -1]);
    classes[2].1 = &classes[2].1 + &bump;
    let m = compare_classes(&classes).unwrap_err();
    assert_eq!(m.first, "eyd");
    assert_eq!(m.second, "hecke");
    assert_eq!(m.exp, vec![1, 0, 0, 0, 0, 0, -1]);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(check_report(&classes, &mut out, &mut err), 1);
    assert!(String::from_utf8(err.clone()).unwrap().contains("eyd and hecke differ at e^{ε_1-ε_7}"));
    classes[2].1 = &classes[2].1 - &bump;
    assert_eq!(check_report(&classes, &mut out, &mut err), 0);
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        "--type A --n 4 --d 2 --w 1,2 --v 1,2,3,4",
        "--type A --n 4 --w 1,2,3,4 --v 1,2,3,4",
        "--type A --n 4 --d 2 --w 1,2,3,4 --mu 1",
        "--type A --n 4 --d 2 --w 2,1,3,4 --v 1,2,3,4",
        "--type C --n 3 --d 2 --lambda 1 --mu 2",
        "--type E --n 4 --lambda 1 --mu 2",
        "--type C --n 3 --lambda x --mu 2",
        "--type C --n 3 --lambda 1 --mu 2 --bogus",
        "--type B --n 3 --lambda 1 --mu 2 --emit character",
        "--type A --n 8 --d 4 --lambda 1 --mu 4,4,4,4 --backend hecke --cap 10",
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, 2, "{args}");
        assert!(!err.is_empty());
    }
    assert_eq!(call("--help").0, 0);
}

#[test]
fn off_variety_is_zero_with_status() {
    let doc = json("--type A --n 4 --d 2 --lambda 2,1 --mu 1 --emit class");
    assert_eq!(doc.status, "off-variety");
    assert!(doc.class.unwrap().monomials.is_empty());
    let doc = json("--type A --n 4 --d 2 --lambda 2,1 --mu 1 --emit hilbert");
    assert_eq!(doc.multiplicity, Some(0));
    assert_eq!(call("--type A --n 4 --d 2 --lambda 2,1 --mu 1 --emit class").1, "0\n");
}

#[test]
fn json_round_trips() {
    for (args, kind, rank, d) in [(A, Kind::A, 7, Some(3)), (C, Kind::C, 4, None), (B, Kind::B, 5, None)] {
        let p = Problem::from_shapes(kind, rank, d, &json(args).lambda, &json(args).mu).unwrap();
        let g = Geometry::for_kind(kind);

        let doc = json(&format!("{args} --emit class"));
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<Document>(&text).unwrap(), doc);
        let class = class_from_json(doc.class.as_ref().unwrap(), doc.rank).unwrap();
        assert_eq!(class, pullback(&p, Backend::Eyd).unwrap().value);

        let doc = json(&format!("{args} --emit hilbert"));
        assert_eq!(hilbert_from_json(doc.hilbert.as_ref().unwrap()), hilbert_data(&p).unwrap());

        let doc = json(&format!("{args} --emit diagrams"));
        let parsed: Vec<_> =
            doc.diagrams.unwrap().iter().map(|c| diagram_from_json(c, g, &doc.mu).unwrap()).collect();
        assert_eq!(parsed, enumerate_eyd(&doc.lambda, &doc.mu, g, false).unwrap());

        let doc = json(&format!("{args} --emit tableaux"));
        let parsed: Vec<_> =
            doc.tableaux.unwrap().iter().map(|t| tableau_from_json(t, g, &doc.lambda).unwrap()).collect();
        assert_eq!(parsed, enumerate_svt(&doc.lambda, &doc.mu, g, false).unwrap());
    }
}

#[test]
fn class_json_is_sorted_and_thread_independent() {
    let one = call(&format!("{A} --emit class --format json --backend hecke --threads 1")).1;
    let four = call(&format!("{A} --emit class --format json --backend hecke --threads 4")).1;
    assert_eq!(one, four);
    assert_eq!(one, call(&format!("{A} --emit class --format json --backend hecke --threads 1")).1);
    let doc: Document = serde_json::from_str(&one).unwrap();
    let exps: Vec<_> = doc.class.unwrap().monomials.into_iter().map(|m| m.exp).collect();
    assert!(exps.windows(2).all(|p| p[0] < p[1]));
}

#[test]
fn latex_mirrors_factored_form() {
    let (_, out, _) = call(&format!("{C} --format latex"));
    assert!(out.starts_with("-(e^{-2\\varepsilon_{1}}-1)(e^{-(\\varepsilon_{1}+\\varepsilon_{3})}-1)(e^{-2\\varepsilon_{3}}-1)"));
    assert_eq!(out.matches(" - ").count(), 6);
    let (_, out, _) = call(&format!("{A} --format latex"));
    assert!(out.starts_with("-(e^{\\varepsilon_{7}-\\varepsilon_{1}}-1)(e^{\\varepsilon_{7}-\\varepsilon_{2}}-1)(e^{\\varepsilon_{6}-\\varepsilon_{1}}-1)"));
}

#[test]
fn character_and_polynomial() {
    let doc = json(&format!("{A} --emit character --trunc 2"));
    let dims: Vec<String> = doc.character.unwrap().slices.into_iter().map(|s| s.dim).collect();
    assert_eq!(dims, ["1", "12", "73"]);
    let doc = json(&format!("{A} --emit hilbert-poly --trunc 2"));
    assert_eq!(doc.hilbert_polynomial.unwrap().values, ["1", "12", "73"]);
    let (_, out, _) = call(&format!("{B} --emit hilbert"));
    assert!(out.starts_with("type B Hilbert data computed in D6\n"));
}
