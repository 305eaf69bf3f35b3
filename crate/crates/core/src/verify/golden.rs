//! Frozen expected values for the verification suite.
//!
//! Word tables are stored as plain letter strings and parsed against the
//! relevant alphabet; Sym tables as signed compositions. Everything here is
//! exact — the suite compares with zero tolerance.

/// `Q_1 … Q_7` on the Λ basis, as `(sign, composition)` rows. The sign of
/// `Λ^I` inside `Q_n` is `(-1)^{n+ℓ(I)}`.
pub const Q_ON_LAMBDA: &[&[(i64, &[u32])]] = &[
    // Q_1
    &[(1, &[1])],
    // Q_2
    &[(-1, &[2])],
    // Q_3
    &[(-1, &[2, 1]), (1, &[3])],
    // Q_4
    &[(-1, &[2, 1, 1]), (1, &[3, 1]), (-1, &[4])],
    // Q_5
    &[
        (-1, &[2, 1, 1, 1]),
        (1, &[2, 1, 2]),
        (1, &[3, 1, 1]),
        (-1, &[3, 2]),
        (-1, &[4, 1]),
        (1, &[5]),
    ],
    // Q_6
    &[
        (-1, &[2, 1, 1, 1, 1]),
        (1, &[5, 1]),
        (1, &[2, 1, 1, 2]),
        (-1, &[6]),
        (1, &[3, 1, 1, 1]),
        (-1, &[3, 1, 2]),
        (1, &[4, 2]),
        (-1, &[4, 1, 1]),
    ],
    // Q_7
    &[
        (-1, &[3, 1, 1, 2]),
        (1, &[3, 1, 1, 1, 1]),
        (-1, &[3, 1, 2, 1]),
        (1, &[3, 1, 3]),
        (1, &[3, 2, 2]),
        (-1, &[4, 1, 1, 1]),
        (1, &[4, 1, 2]),
        (-1, &[4, 3]),
        (1, &[4, 2, 1]),
        (1, &[5, 1, 1]),
        (-1, &[5, 2]),
        (-1, &[6, 1]),
        (1, &[7]),
        (-1, &[2, 1, 1, 1, 1, 1]),
        (1, &[2, 1, 1, 1, 2]),
        (1, &[2, 1, 1, 2, 1]),
        (-1, &[2, 1, 1, 3]),
        (-1, &[2, 1, 2, 2]),
    ],
];

/// `Q_1 … Q_7` of the Fibonacci code `{b, ab}`.
pub const FIB_Q: &[&[&str]] = &[
    &["b"],
    &["ab"],
    &["abb"],
    &["abbb"],
    &["abbab", "abbbb"],
    &["abbbab", "abbbbb"],
    &["abbabab", "abbbabb", "abbbbab", "abbbbbb"],
];

/// `Q_1 … Q_6` of the infinite prefix code `ba*`. The degree-5 row uses
/// the corrected word set `{bab²a, bab³, ba²b², ba³b, ba⁴, ba²ba}`: the
/// source table prints `ba²b²` twice where `ba³b` is forced by the
/// morphism `ba^n ↦ n+1` onto the integer-alphabet table.
pub const BA_STAR_Q: &[&[&str]] = &[
    &["b"],
    &["ba"],
    &["baa", "bab"],
    &["baaa", "baab", "babb"],
    &["baaaa", "baaab", "baaba", "baabb", "babba", "babbb"],
    &[
        "baaaaa", "baaaab", "baaaba", "baaabb", "baabba", "baabbb", "babbba", "babbbb",
    ],
];

/// `Q_1 … Q_6` of the integer alphabet `{1, 2, 3, …}` with `ω = id`.
pub const INTEGERS_Q: &[&[&str]] = &[
    &["1"],
    &["2"],
    &["21", "3"],
    &["211", "31", "4"],
    &["2111", "212", "311", "32", "41", "5"],
    &["21111", "2112", "3111", "312", "411", "42", "51", "6"],
];

/// `Q_1 … Q_8` of the Dyck code graded by length (odd degrees vanish).
pub const DYCK_Q: &[&[&str]] = &[
    &[],
    &["ab"],
    &[],
    &["aabb"],
    &[],
    &["aaabbb", "aababb", "aabbab"],
    &[],
    &[
        "aaaabbbb", "aaababbb", "aaabbabb", "aaabbbab", "aabaabbb", "aabababb", "aababbab",
        "aabbabab",
    ],
];

/// `Φ_1 … Φ_4` of the half-length-graded Dyck specialization, as
/// `(num, den, word)` over `{a, b}` (words re-pair into `{aa,ab,ba,bb}`).
/// The degree-4 row includes `2·aabbaabb`, the `(aabb, aabb)` forest pair
/// omitted from the source display; it is forced by `π(Φ_4) = 35`.
pub const DYCK_PHI: &[&[(i64, i64, &str)]] = &[
    &[(1, 1, "ab")],
    &[(2, 1, "aabb"), (1, 1, "abab")],
    &[
        (3, 1, "aaabbb"),
        (3, 1, "aababb"),
        (3, 2, "aabbab"),
        (3, 2, "abaabb"),
        (1, 1, "ababab"),
    ],
    &[
        (4, 1, "aaaabbbb"),
        (4, 1, "aaababbb"),
        (4, 1, "aaabbabb"),
        (4, 1, "aabaabbb"),
        (4, 1, "aabababb"),
        (2, 1, "aaabbbab"),
        (2, 1, "aababbab"),
        (2, 1, "aabbaabb"),
        (2, 1, "abaaabbb"),
        (2, 1, "abaababb"),
        (4, 3, "aabbabab"),
        (4, 3, "abaabbab"),
        (4, 3, "ababaabb"),
        (1, 1, "abababab"),
    ],
];

/// `S_1, S_2, S_3` of the `(n,p) = (2,1)` lattice family.
pub const LATTICE_21_S: &[&[&str]] = &[
    &["RU", "UR"],
    &["RRUU", "RURU", "RUUR", "URRU", "URUR"],
    &[
        "RRRUUU", "RRURUU", "RRUURU", "RRUUUR", "RURRUU", "RURURU", "RURUUR", "RUURRU",
        "RUURUR", "URRRUU", "URRURU", "URRUUR", "URURRU", "URURUR",
    ],
];

/// `Λ_1, Λ_2, Λ_3` of the `(2,1)` family: corner-avoiding paths, to be
/// signed `(-1)^{m+1}`.
pub const LATTICE_21_LAMBDA: &[&[&str]] = &[
    &["RU", "UR"],
    &["RRUU"],
    &["RRRUUU", "RRURUU"],
];

/// `Λ_1` of the `(4,2)` family: all six paths to `(2,2)`.
pub const LATTICE_42_LAMBDA_1: &[&str] = &["RRUU", "RURU", "RUUR", "URRU", "URUR", "UURR"];

/// `Λ_2` of the `(4,2)` family: the 17 paths to `(4,4)` that avoid the
/// corner `(2,2)`. Four entries of the source display drop one `→` step;
/// the list below is fixed by the corner-avoidance count `53 - 6·6 = 17`
/// and agrees with the basis-conversion route.
pub const LATTICE_42_LAMBDA_2: &[&str] = &[
    "RRRRUUUU", "RRRURUUU", "RRRUURUU", "RRRUUURU", "RRRUUUUR", "RRURRUUU", "RRURURUU",
    "RRURUURU", "RRURUUUR", "RURRRUUU", "RURRURUU", "RURRUURU", "RURRUUUR", "URRRRUUU",
    "URRRURUU", "URRRUURU", "URRRUUUR",
];

/// `e(*2!/2!)`: the Catalan numbers through order 6.
pub const E_STAR_FACTORIAL_2: &[i64] = &[1, 1, 2, 5, 14, 42, 132];

/// `e(*(2,1))`: the shifted Catalan numbers through order 3.
pub const E_STAR_2_1: &[i64] = &[1, 2, 5, 14];

/// Coefficient tables of `e(*(np, p))`.
pub const E_STAR_4_2: &[i64] = &[1, 6, 53, 554, 6362];
pub const E_STAR_6_2: &[i64] = &[1, 15, 360, 10463];
pub const E_STAR_6_3: &[i64] = &[1, 20, 662, 26780];
pub const E_STAR_12_3: &[i64] = &[1, 220, 91498, 47961320];
