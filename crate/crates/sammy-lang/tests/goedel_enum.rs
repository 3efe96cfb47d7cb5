use num_bigint::BigUint;
use sammy_lang::*;

#[test]
fn encode_decode_round_trip_on_samples() {
    let srcs = [
        "X := C1\nRETURN(X)",
        "A := C2\nB := Pow0(A, A)\nRETURN(B)",
        "INPUT F : functor\nL1: A := Source1(F)\nIF A == A GOTO L1\nRETURN(A)",
        "LongName_1: Zed := C0\nIF Zed == Zed GOTO LongName_1\nRETURN(Zed)",
    ];
    for s in srcs {
        let p = parse(s).unwrap();
        let code = encode(&p);
        let back = decode(&code).expect("decodes");
        assert_eq!(p.instructions, back.instructions, "round trip for {s}");
        assert_eq!(encode(&back), code);
    }
}

#[test]
fn encoding_is_stable_across_runs() {
    let p = parse("X := C1\nRETURN(X)").unwrap();
    assert_eq!(encode(&p), encode(&p));
}

#[test]
fn decode_rejects_junk() {
    assert!(decode(&GoedelCode(BigUint::from(0u32))).is_none());
    assert!(decode(&GoedelCode(BigUint::from(1u32))).is_none());
    assert!(decode(&GoedelCode(BigUint::from(118u32))).is_none());
}

#[test]
fn decode_image_is_stable_near_valid_codes() {
    let p = parse("A := C1\nRETURN(A)").unwrap();
    let n = encode(&p).0;
    for delta in 0u32..50 {
        let candidate = GoedelCode(&n + BigUint::from(delta));
        if let Some(q) = decode(&candidate) {
            assert_eq!(encode(&q), candidate, "encode . decode is the identity on its image");
        }
    }
}

#[test]
fn enumerate_includes_the_tiny_constant_program() {
    let want = parse("A := C1\nRETURN(A)").unwrap();
    assert!(
        enumerate(16).any(|p| p == want),
        "A := C1 / RETURN(A) should be enumerated"
    );
}

#[test]
fn enumerate_is_strictly_increasing_in_code() {
    let mut last: Option<GoedelCode> = None;
    let mut n = 0usize;
    for p in enumerate(16) {
        let c = encode(&p);
        if let Some(prev) = &last {
            assert!(prev < &c, "stream must be strictly increasing");
        }
        last = Some(c);
        n += 1;
    }
    assert!(n > 100);
}

#[test]
fn enumerated_programs_are_valid_and_round_trip() {
    for p in enumerate(16) {
        let printed = p.print();
        let reparsed = parse(&printed).expect("enumerated programs parse");
        assert_eq!(p.instructions, reparsed.instructions);
        let back = decode(&encode(&p)).expect("enumerated programs decode");
        assert_eq!(p.instructions, back.instructions);
    }
}

#[test]
fn longer_programs_have_larger_codes() {
    // every three-line program has 24 tokens over the canonical alphabet and
    // any 24-token code exceeds any 16-token code in a bijective base
    let max_two_line = enumerate(16)
        .map(|p| encode(&p))
        .max()
        .expect("nonempty stream");
    let minimal_three_line = parse("A := Source1(A)\nA := Source1(A)\nRETURN(A)").unwrap();
    assert_eq!(minimal_three_line.token_count, 24);
    assert!(encode(&minimal_three_line) > max_two_line);
}

/// Independent combinatorial count of the canonical 2-line programs.
///
/// Variable slots form restricted-growth sequences: at each slot one of the
/// `u` seen variables or (if u < 8) one fresh draw. A 2-line program is any
/// non-Return line followed by a Return. Labels appear only through IF: an
/// unlabeled IF must target the (forced) label on the Return line; a
/// self-labeled IF targets its own line.
#[test]
fn two_line_count_matches_the_grammar_oracle() {
    // distribution of final u over `len` variable slots starting from u
    fn seqs(len: usize, u: usize) -> Vec<(usize, u64)> {
        if len == 0 {
            return vec![(u, 1)];
        }
        let mut acc = std::collections::BTreeMap::new();
        let opts: Vec<usize> = if u < 8 { vec![u + 1] } else { vec![] };
        // existing choices keep u, the fresh choice bumps it
        for (uf, c) in seqs(len - 1, u) {
            *acc.entry(uf).or_insert(0u64) += c * u as u64;
        }
        for nu in opts {
            for (uf, c) in seqs(len - 1, nu) {
                *acc.entry(uf).or_insert(0u64) += c;
            }
        }
        acc.into_iter().collect()
    }
    fn total(dist: &[(usize, u64)]) -> u64 {
        dist.iter().map(|&(_, c)| c).sum()
    }
    // returns per starting u: 1..=3 variable slots
    let ret = |u: usize| -> u64 {
        total(&seqs(1, u)) + total(&seqs(2, u)) + total(&seqs(3, u))
    };

    let mut expected: u64 = 0;
    // operation assignments: var then args
    for op in OpName::ALL {
        for (u, c) in seqs(1 + op.arity(), 0) {
            expected += c * ret(u);
        }
    }
    // constant assignments and input declarations
    for (u, c) in seqs(1, 0) {
        expected += c * 11 * ret(u);
        expected += c * 3 * ret(u);
    }
    // conditionals: two operand slots; one surviving label layout each for
    // the unlabeled (forward target) and self-labeled (backward) forms
    for (u, c) in seqs(2, 0) {
        expected += c * ret(u); // IF .. GOTO L1 / L1: RETURN(..)
        expected += c * ret(u); // L1: IF .. GOTO L1 / RETURN(..)
    }

    let two_line = enumerate(16)
        .filter(|p| p.instructions.len() == 2)
        .count() as u64;
    assert_eq!(two_line, expected);
}
