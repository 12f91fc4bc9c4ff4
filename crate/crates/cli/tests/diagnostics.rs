use pfq::{parse, SyntaxError};

fn err(src: &str) -> SyntaxError {
    parse(src).expect_err("should not parse")
}

#[test]
fn unknown_name_is_located() {
    let e = err("field Q = Q\nisotropic foo over Q\n");
    assert_eq!((e.line, e.col), (2, 11));
    assert!(e.to_string().starts_with("line 2, column 11:"), "{e}");
}

#[test]
fn unknown_field() {
    let e = err("isotropic diag(1) over K\n");
    assert_eq!(e.line, 1);
    assert!(e.expected.contains('K'), "{e}");
}

#[test]
fn bad_tower_and_element() {
    assert_eq!(err("field F = laurent(Q\n").line, 1);
    let e = err("field Q = Q\nisotropic diag(1, 2/0) over Q\n");
    assert_eq!(e.line, 2);
    let e = err("field Q = Q\nisotropic diag(1, x) over Q\n");
    assert_eq!(e.line, 2);
}

#[test]
fn mixed_fields_are_rejected() {
    let e = err("field Q = Q\nfield P = gf(5)\nlet a = diag(1) over Q\nlet b = diag(1) over P\nisometric a, b\n");
    assert_eq!(e.line, 5);
}

#[test]
fn missing_field_for_literal() {
    assert_eq!(err("isotropic diag(1, -1)\n").line, 1);
}

#[test]
fn unknown_command_and_trailing_text() {
    assert_eq!(err("frobnicate\n").col, 1);
    let e = err("field Q = Q\nisotropic diag(1) over Q expect maybe\n");
    assert_eq!(e.line, 2);
}
