use braidforge_core::braidlab::{
    congruent_to_identity, expand, forget_strand, goldberg_project, make_transvection, matrix_equals,
    torus_center_action, TransvectionOutcome, TransvectionParams, XAlphabet,
};
use braidforge_core::enumeration::{pure_subgroup_table, reidemeister_schreier, rewrite_word};
use braidforge_core::oracles::{artin_eq, battery, check_equal, dehn_eq, goldberg_eq, OracleContext, Value};
use braidforge_core::perm::induced_permutation;
use braidforge_core::presentations::{braid_presentation, SurfaceParams};
use braidforge_core::{format_word, parse_word_any, reduce, smith_normal_form, GenSym, IntMatrix, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word_over(gens: Vec<GenSym>, max_len: usize) -> impl Strategy<Value = Word> {
    let k = gens.len();
    prop::collection::vec((0..k, -3i64..=3), 0..max_len).prop_map(move |raw| {
        reduce(&raw.into_iter().filter(|(_, e)| *e != 0).map(|(i, e)| (gens[i].clone(), e)).collect::<Vec<_>>())
    })
}

fn gens(names: &[&str]) -> Vec<GenSym> {
    names.iter().map(|n| GenSym::named(n)).collect()
}

fn surface_relator(g: u32) -> Word {
    let mut text = String::new();
    for r in 1..=g {
        text.push_str(&format!("[b{r}^-1,a{r}]"));
    }
    parse_word_any(&text).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_is_idempotent(raw in prop::collection::vec((0usize..3, -2i64..=2), 0..30)) {
        let g = gens(&["a", "b", "c"]);
        let raw: Vec<(GenSym, i64)> = raw.into_iter().map(|(i, e)| (g[i].clone(), e)).collect();
        let once = reduce(&raw);
        prop_assert_eq!(reduce(once.syllables()), once);
    }

    #[test]
    fn parse_format_round_trip(w in word_over(gens(&["s1", "a2", "z3", "A[1,2]", "x1"]), 20)) {
        prop_assert_eq!(parse_word_any(&format_word(&w)).unwrap(), w);
    }

    #[test]
    fn inverse_cancels(w in word_over(gens(&["a", "b"]), 20)) {
        prop_assert!((&w * &w.inverse()).is_identity());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn smith_witness(entries in prop::collection::vec(-6i64..=6, 12), rows in 1usize..=4) {
        let cols = 12 / rows.max(1);
        let m = IntMatrix::from_rows(
            cols,
            entries.chunks(cols).take(rows).map(|r| r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()),
        );
        prop_assert!(smith_normal_form(&m).verify(&m));
    }

    #[test]
    fn rho_is_a_homomorphism(
        u in word_over(gens(&["s1", "s2", "s3", "a1", "z1"]), 12),
        v in word_over(gens(&["s1", "s2", "s3", "a1", "z1"]), 12),
    ) {
        let (pu, pv) = (induced_permutation(4, &u).unwrap(), induced_permutation(4, &v).unwrap());
        prop_assert_eq!(induced_permutation(4, &(&u * &v)).unwrap(), pu.then(&pv));
    }

    #[test]
    fn dehn_accepts_relator_insertions(w in word_over(gens(&["a1", "b1", "a2", "b2"]), 20), k in 0usize..21) {
        prop_assert_eq!(dehn_eq(2, &w, &w).unwrap().value, Value::Equal);
        let rel = surface_relator(2);
        prop_assert_eq!(dehn_eq(2, &w, &(&w * &rel)).unwrap().value, Value::Equal);
        // insert a conjugated relator in the middle
        let letters: Vec<(GenSym, i64)> = w.letters().map(|(s, e)| (s.clone(), e)).collect();
        let k = k.min(letters.len());
        let (head, tail) = (Word::from_letters(letters[..k].to_vec()), Word::from_letters(letters[k..].to_vec()));
        let twisted = &(&head * &rel.inverse()) * &tail;
        prop_assert_eq!(dehn_eq(2, &w, &twisted).unwrap().value, Value::Equal);
    }

    #[test]
    fn exact_equal_implies_necessary_consistent(
        w in word_over(gens(&["s1", "s2", "z1"]), 10),
        k in 0usize..11,
        which in 0usize..16,
    ) {
        let params = SurfaceParams::new(0, 1, 3);
        let p = braid_presentation(params);
        let rel = &p.relators()[which % p.relators().len()];
        let letters: Vec<(GenSym, i64)> = w.letters().map(|(s, e)| (s.clone(), e)).collect();
        let k = k.min(letters.len());
        let v = &(&Word::from_letters(letters[..k].to_vec()) * rel) * &Word::from_letters(letters[k..].to_vec());
        prop_assert_eq!(artin_eq(3, &w, &v).unwrap().value, Value::Equal);
        for ctx in battery(params) {
            if matches!(ctx, OracleContext::ClassicalBraid(_)) {
                continue;
            }
            prop_assert!(!ctx.evaluate(&w, &v).unwrap().is_refuted(), "{}", ctx.name());
        }
    }

    #[test]
    fn rewriting_is_sound(w in word_over(gens(&["s1", "s2", "a1", "b1"]), 10)) {
        let t = pure_subgroup_table(SurfaceParams::new(1, 0, 3), 100).unwrap();
        let rp = reidemeister_schreier(&t).unwrap();
        let c = t.act(0, &w).unwrap().unwrap();
        let pure = &w * &t.transversal()[c].inverse();
        let r = rewrite_word(&rp, &t, &pure).unwrap();
        let back = rp.expand(&r);
        prop_assert_eq!(&back, &pure);
        prop_assert_eq!(t.act(0, &back).unwrap(), Some(0));
        prop_assert!(induced_permutation(3, &back).unwrap().is_identity());
    }

    #[test]
    fn forget_commutes_with_projection(raw in prop::collection::vec((0usize..12, -2i64..=2), 0..12), i in 1u32..=3) {
        let params = SurfaceParams::new(1, 1, 3);
        let mut alphabet: Vec<GenSym> = Vec::new();
        for j in 1..=3 {
            for s in XAlphabet::new(params, j).unwrap().symbols {
                if !alphabet.contains(&s) {
                    alphabet.push(s);
                }
            }
        }
        let w = reduce(&raw.into_iter().filter(|(_, e)| *e != 0).map(|(k, e)| (alphabet[k % alphabet.len()].clone(), e)).collect::<Vec<_>>());
        let mut full = goldberg_project(params, &w).unwrap();
        full.remove(i as usize - 1);
        let smaller = SurfaceParams::new(1, 1, 2);
        prop_assert_eq!(goldberg_project(smaller, &forget_strand(params, i, &w).unwrap()).unwrap(), full);
        let expanded = expand(params, &w).unwrap();
        prop_assert_eq!(goldberg_eq(params, &expanded, &w).unwrap().value, Value::ConsistentButUnverified);
    }

    #[test]
    fn transvection_matrix_law(n in 2u32..=3, x1 in -2i64..=2, y1 in -2i64..=2, x2 in -2i64..=2, y2 in -2i64..=2) {
        let tp = TransvectionParams { n, x1, y1, x2, y2 };
        prop_assert!(congruent_to_identity(&tp.matrix(), n));
        match make_transvection(tp) {
            TransvectionOutcome::Accepted { hom, matrix } => {
                prop_assert!(tp.determinant().abs() == 1);
                prop_assert!(matrix_equals(&torus_center_action(&hom).unwrap(), &matrix));
            }
            TransvectionOutcome::Rejected { det, .. } => prop_assert!(det.abs() != 1),
        }
    }
}

#[test]
fn check_equal_never_contradicts_itself() {
    let params = SurfaceParams::new(0, 1, 3);
    let ctxs = battery(params);
    let v = check_equal(&ctxs, &parse_word_any("s1 s2 s1 s2^-1").unwrap(), &parse_word_any("s2 s1").unwrap()).unwrap();
    assert_eq!(v.value, Value::Equal);
}
