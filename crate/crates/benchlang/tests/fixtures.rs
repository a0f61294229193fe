//! The shipped reference programs decide exactly the languages their
//! oracles describe, checked exhaustively up to an alphabet-dependent
//! length bound.

use benchlang::{catalog, find, CatalogError};
use crasp_core::{accepts, reachable_rules, well_formed, Word};

/// Exhaustive bound: deep for small alphabets, shallower for wide ones.
fn bound(n_syms: usize) -> usize {
    match n_syms {
        0..=2 => 12,
        3 => 8,
        _ => 6,
    }
}

#[test]
fn catalog_has_the_expected_shape() {
    let langs = catalog();
    assert_eq!(langs.len(), 22);

    let names: Vec<&str> = langs.iter().map(|l| l.name).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len(), "names are unique");

    let inexpressible: Vec<&str> = langs
        .iter()
        .filter(|l| !l.expressible)
        .map(|l| l.name)
        .collect();
    assert_eq!(
        inexpressible,
        ["parity", "d2", "d3", "d4", "tomita3", "tomita5", "tomita6"]
    );
    // No reference program claims to decide an inexpressible language.
    for l in &langs {
        assert!(l.expressible || !l.has_fixture(), "{}", l.name);
    }
    assert_eq!(langs.iter().filter(|l| l.has_fixture()).count(), 15);
}

#[test]
fn lookup_by_name() {
    assert_eq!(find("tomita5").unwrap().name, "tomita5");
    assert!(find("tomita0").is_none());
}

#[test]
fn every_fixture_parses_and_is_well_formed() {
    for lang in catalog() {
        let Ok(p) = lang.reference_program() else {
            assert!(!lang.has_fixture(), "{} fixture failed", lang.name);
            continue;
        };
        well_formed(&p).unwrap_or_else(|v| panic!("{}: {v:?}", lang.name));
        assert_eq!(p.alphabet, lang.alphabet);
    }
}

#[test]
fn missing_fixtures_are_reported_as_such() {
    let err = find("parity").unwrap().reference_program().unwrap_err();
    assert!(matches!(err, CatalogError::NoFixture(n) if n == "parity"));
}

#[test]
fn fixtures_match_their_oracles_exhaustively() {
    for lang in catalog() {
        let Some(oracle) = lang.fixture_oracle() else {
            continue;
        };
        let p = lang.reference_program().unwrap();
        let max = bound(lang.alphabet.len());
        let mut checked = 0u64;
        for w in lang.alphabet.words_up_to(max) {
            let got = accepts(&p, &w).unwrap();
            assert_eq!(
                got,
                oracle(&w),
                "{}: {:?}",
                lang.name,
                lang.alphabet.display_word(&w)
            );
            checked += 1;
        }
        assert_eq!(checked, lang.alphabet.word_count_up_to(max));
    }
}

#[test]
fn orientation_variants_differ_from_the_plain_oracles() {
    // The majority program prefers b where the language definition prefers
    // a; the existential program looks for b, not a. Both coincide with the
    // plain oracle on symmetric words only.
    let majority = find("majority").unwrap();
    let a = Word::from_ids(vec![0]);
    let b = Word::from_ids(vec![1]);
    assert!(majority.accepts(&a).unwrap());
    assert!(!majority.accepts(&b).unwrap());
    let fix = majority.fixture_oracle().unwrap();
    assert!(!fix(&a));
    assert!(fix(&b));

    let existential = find("existential").unwrap();
    assert!(existential.accepts(&a).unwrap());
    assert!(!existential.accepts(&b).unwrap());
    let fix = existential.fixture_oracle().unwrap();
    assert!(!fix(&a));
    assert!(fix(&b));
}

#[test]
fn the_existential_program_carries_two_dead_rules() {
    let p = find("existential").unwrap().reference_program().unwrap();
    let live = reachable_rules(&p);
    let live_names: Vec<&str> = p
        .rules
        .iter()
        .filter(|r| live.contains(&r.name))
        .map(|r| r.name.as_str())
        .collect();
    assert_eq!(live_names, ["B", "C2", "Out"]);
}

#[test]
fn word_validation_rejects_foreign_ids() {
    let lang = find("tomita1").unwrap();
    let w = Word::from_ids(vec![0, 2]);
    assert!(lang.accepts(&w).is_err());
}

#[test]
fn oracle_spot_checks() {
    let cases: &[(&str, &str, bool)] = &[
        ("dyck1", "[]", true),
        ("dyck1", "][", false),
        ("dyck1", "[[][]]", true),
        ("dyck1", "[[][]]][]", false),
        ("d2", "([])", true),
        ("d2", "([)]", false),
        ("d3", "{}()[]", true),
        ("d3", "{(})", false),
        ("d4", "<{[()]}>", true),
        ("d4", "<]", false),
        ("astar-bstar", "aabbb", true),
        ("astar-bstar", "aba", false),
        ("anbncn", "abc", true),
        ("anbncn", "aabbcc", true),
        ("anbncn", "aabc", false),
        ("aastar", "aa", true),
        ("aastar", "aaa", false),
        ("contains-ab", "bab", true),
        ("contains-ab", "ba", false),
        ("majority", "aab", true),
        ("majority", "ab", true),
        ("majority", "abb", false),
        ("existential", "bba", true),
        ("existential", "bbb", false),
        ("parity", "abab", true),
        ("parity", "aba", true),
        ("parity", "ab", false),
        ("pt2", "ba", false),
        ("pt2", "ab", true),
        ("pt2", "bab", true),
        ("pt3", "cabc", true),
        ("pt3", "acb", false),
        ("pt5", "abcde", true),
        ("pt5", "abced", false),
        ("pt5", "eabacbdcde", true),
        ("tomita1", "aaa", true),
        ("tomita1", "ab", false),
        ("tomita2", "abab", true),
        ("tomita2", "aba", false),
        ("tomita2", "ba", false),
        ("tomita3", "abba", true),
        ("tomita3", "abab", false),
        ("tomita3", "abaab", true),
        ("tomita3", "aababb", false),
        ("tomita4", "aabaab", true),
        ("tomita4", "aaab", false),
        ("tomita5", "abba", true),
        ("tomita5", "aab", false),
        ("tomita6", "ab", true),
        ("tomita6", "aaab", false),
        ("tomita6", "aaabbb", true),
        ("tomita7", "aabbaabb", true),
        ("tomita7", "baba", false),
        ("next-argmax", "ab", true),
        ("next-argmax", "aab", false),
        ("next-argmax", "aaaa", true),
        ("next-argmax", "abab", true),
    ];
    for &(name, text, expect) in cases {
        let lang = find(name).unwrap();
        let w = lang.alphabet.word_from_chars(text).unwrap();
        assert_eq!(lang.accepts(&w).unwrap(), expect, "{name} on {text:?}");
    }
}
