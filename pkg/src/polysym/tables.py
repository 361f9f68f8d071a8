"""Transcribed reference tables for n = 3 (variables x, y, z, w).

Monomial tables map a multidegree to a list of claims:

* ``("chain", [a, b, ...])``: the monomials are pairwise proportional modulo
  the ideal (P) with nonzero constants;
* ``("zero", [a, ...])``: each monomial is congruent to 0;
* ``("plain", [a, ...])``: listed without a claim.

A multidegree in ``ALL_ZERO_*`` is claimed to lie entirely in (P).
Congruence tables list ``(multidegree, expression, name, translate counts)``
where the expression is congruent to 0.
"""

MONOMIALS_M3 = {
    (1, 1, 1): [("plain", ["[xyz]"])],
    (2, 1, 1): [("plain", ["[xy][xz]"])],
    (3, 1, 1): [("chain", ["[x^2y][xz]", "[x^2z][xy]"])],
    (2, 2, 1): [
        ("chain", ["[x^2y][yz]", "[xy^2][xz]"]),
        ("zero", ["[xyz][xy]"]),
    ],
    (4, 1, 1): [("zero", ["[x^2y][x^2z]"])],
    (3, 2, 1): [("chain", ["[x^2y][xyz]", "[x^2z][xy^2]", "[xy]^2[xz]"])],
    (2, 2, 2): [
        ("chain", ["[xyz]^2", "[x^2y][yz^2]", "[x^2z][y^2z]", "[xy^2][xz^2]"]),
        ("zero", ["[xy][xz][yz]"]),
    ],
    (4, 2, 1): [("zero", ["[xy]^2[x^2z]", "[x^2y][xy][xz]"])],
    (3, 3, 1): [("zero", ["[xyz][xy]^2", "[x^2y][xy][yz]", "[xy^2][xy][xz]"])],
    (3, 2, 2): [
        ("chain", ["[x^2y][xz][yz]", "[xy^2][xz]^2", "[x^2z][xy][yz]", "[xy]^2[xz^2]"]),
        ("zero", ["[xyz][xy][xz]"]),
    ],
    (5, 2, 1): [("zero", ["[x^2y]^2[xz]", "[x^2y][x^2z][xy]"])],
    (4, 3, 1): [("zero", [
        "[x^2y][x^2y][yz]", "[x^2y][xyz][xy]", "[x^2y][xy^2][xz]",
        "[x^2z][xy^2][xy]", "[xy]^3[xz]",
    ])],
    (4, 2, 2): [("zero", [
        "[x^2y][x^2z][yz]", "[x^2y][xyz][xz]", "[x^2y][xy][xz^2]",
        "[x^2z][xy^2][xz]", "[x^2z][xyz][xy]", "[xy]^2[xz]^2",
    ])],
    (3, 3, 2): [("zero", [
        "[x^2y][xyz][yz]", "[x^2y][xy][yz^2]", "[x^2y][xz][y^2z]",
        "[x^2z][xy^2][yz]", "[x^2z][xy][y^2z]", "[xy^2][xyz][xz]",
        "[xy^2][xy][xz^2]", "[xyz]^2[xy]", "[xy]^2[xz][yz]",
    ])],
}

ALL_ZERO_M3 = {(4, 1, 1), (4, 2, 1), (3, 3, 1), (5, 2, 1), (4, 3, 1), (4, 2, 2), (3, 3, 2)}

MONOMIALS_M4 = {
    (1, 1, 1, 1): [("plain", ["[xy][zw]", "[xz][yw]", "[xw][yz]"])],
    (2, 1, 1, 1): [("plain", [
        "[xy][xzw]", "[xz][xyw]", "[xw][xyz]",
        "[x^2y][zw]", "[x^2z][yw]", "[x^2w][yz]",
    ])],
    (3, 1, 1, 1): [("chain", ["[x^2y][xzw]", "[x^2z][xyw]", "[x^2w][xyz]", "[xy][xz][xw]"])],
    (2, 2, 1, 1): [
        ("chain", ["[xyz][xyw]", "[x^2y][yzw]", "[xy^2][xzw]"]),
        ("plain", [
            "[x^2z][y^2w]", "[x^2w][y^2z]",
            "[xy]^2[zw]", "[xy][xz][yw]", "[xy][xw][yz]",
        ]),
    ],
    (4, 1, 1, 1): [("zero", ["[x^2y][xz][xw]", "[x^2z][xy][xw]", "[x^2w][xy][xz]"])],
    (3, 2, 1, 1): [
        ("chain", [
            "[x^2y][xz][yw]", "[x^2y][xw][yz]", "[x^2z][xy][yw]",
            "[x^2w][xy][yz]", "[xy^2][xz][xw]", "[xy]^2[xzw]",
        ]),
        ("zero", ["[x^2y][xy][zw]", "[xyz][xy][xw]", "[xyw][xy][xz]"]),
    ],
    (2, 2, 2, 1): [
        ("chain", ["[xy][yz][xzw]", "[x^2z][yw][yz]", "[xz^2][xy][yw]"]),
        ("chain", ["[xz][yz][xyw]", "[x^2y][yz][zw]", "[xy^2][xz][zw]"]),
        ("chain", ["[xz][xy][yzw]", "[xz][xw][y^2z]", "[xy][xw][yz^2]"]),
        ("plain", ["[x^2w][yz]^2", "[xy]^2[z^2w]", "[xz]^2[y^2w]"]),
        ("zero", ["[xyz][xy][zw]", "[xyz][xz][yw]", "[xyz][xw][yz]"]),
    ],
    (5, 1, 1, 1): [("zero", ["[x^2y][x^2z][xw]", "[x^2y][x^2w][xz]", "[x^2z][x^2w][xy]"])],
    (4, 2, 1, 1): [("zero", [
        "[x^2y]^2[zw]", "[x^2y][x^2z][yw]", "[x^2y][x^2w][yz]", "[x^2y][xyz][xw]",
        "[x^2y][xyw][xz]", "[x^2y][xy][xzw]", "[x^2z][xy^2][xw]", "[x^2z][xyw][xy]",
        "[x^2w][xy^2][xz]", "[x^2w][xyz][xy]", "[xy]^2[xz][xw]",
    ])],
    (3, 3, 1, 1): [
        ("chain", [
            "[x^2y][xyz][yw]", "[x^2y][y^2z][xw]", "[y^2z][xy][x^2w]", "[xy^2][yz][x^2w]",
            "[x^2y][yz][xyw]", "[xy^2][xz][xyw]", "[x^2y][xz][y^2w]", "[x^2z][xy][y^2w]",
            "[x^2z][xy^2][yw]", "[xy^2][xyz][xw]", "[xy]^2[xz][yw]", "[xy]^2[yz][xw]",
            "[x^2y][xy^2][zw]", "[xy]^3[zw]",
        ]),
        ("zero", ["[xyz][xy][xyw]", "[x^2y][xy][yzw]", "[xy^2][xy][xzw]"]),
    ],
    (3, 2, 2, 1): [
        ("chain", [
            "[xyz]^2[xw]", "[x^2y][xyz][zw]", "[x^2z][xyz][yw]", "[x^2z][xy^2][zw]",
            "[x^2y][xz^2][yw]", "[x^2y][yz^2][xw]", "[x^2z][y^2z][xw]", "[xy^2][xz^2][xw]",
            "[y^2z][xz][x^2w]", "[yz^2][xy][x^2w]", "[xy]^2[xz][zw]", "[xz]^2[xy][yw]",
        ]),
        ("zero", [
            "[xy][xz][yz][xw]", "[x^2y][xz][yzw]", "[x^2z][xy][yzw]", "[x^2y][yz][xzw]",
            "[x^2z][yz][xyw]", "[x^2y][xy][z^2w]", "[x^2z][xz][y^2w]", "[xy^2][xz][xzw]",
            "[xyz][xy][xzw]", "[xz^2][xy][xyw]", "[xyz][xz][xyw]", "[xyz][yz][x^2w]",
        ]),
    ],
    (2, 2, 2, 2): [
        ("chain", [
            "[xz][yz][xw][yw]", "[x^2y][yz][zw^2]", "[xy^2][xz][zw^2]",
            "[x^2y][yw][z^2w]", "[xy^2][xw][z^2w]",
        ]),
        ("chain", [
            "[xy][yz][xw][zw]", "[x^2z][y^2w][zw]", "[x^2z][yz][yw^2]",
            "[xz^2][xy][yw^2]", "[xz^2][xw][y^2w]",
        ]),
        ("chain", [
            "[xy][xz][yw][zw]", "[x^2w][y^2z][zw]", "[x^2w][yz^2][yw]",
            "[xz][xw^2][y^2z]", "[yz^2][xy][xw^2]",
        ]),
        ("zero", [
            "[xyz][xy][zw^2]", "[xyz][xz][yw^2]", "[xyz][yz][xw^2]", "[x^2y][zw][yzw]",
            "[x^2z][yw][yzw]", "[xy][xzw][yzw]", "[xyw][xz][yzw]", "[xyz][xw][yzw]",
            "[xy^2][zw][xzw]", "[y^2z][xw][xzw]", "[xyw][yz][xzw]", "[xyz][yw][xzw]",
            "[xz^2][yw][xyw]", "[yz^2][xw][xyw]", "[xyz][zw][xyw]", "[xyw][xy][z^2w]",
            "[xzw][xz][y^2w]", "[yzw][yz][x^2w]",
        ]),
        ("plain", ["[xy]^2[zw]^2", "[xz]^2[yw]^2", "[yz]^2[xw]^2"]),
    ],
}

ALL_ZERO_M4 = {(4, 1, 1, 1), (5, 1, 1, 1), (4, 2, 1, 1)}

# (multidegree, expression = 0, name, S_3 translates, S_4 translates)
CONGRUENCES_M3 = [
    ((3, 2, 0), "[xy][x^2y]", "r_{3,2}", 6, 12),
    ((3, 1, 1), "[x^2y][xz] + [x^2z][xy]", "r_{3,1,1}", 3, 12),
    ((2, 2, 1), "[x^2y][yz] - [xy^2][xz]", "r_{2,2,1}^(1)", 3, 12),
    ((2, 2, 1), "[xy][xyz]", "r_{2,2,1}^(2)", 3, 12),
    ((4, 2, 0), "[x^2y]^2", "r_{4,2}", 6, 12),
    ((4, 1, 1), "[x^2y][x^2z]", "r_{4,1,1}", 3, 12),
    ((3, 3, 0), "[xy]^3 + 3[x^2y][xy^2]", "r_{3,3}", 3, 6),
    ((3, 2, 1), "[x^2y][xyz] - [x^2z][xy^2]", "r_{3,2,1}^(1)", 6, 24),
    ((3, 2, 1), "[xy]^2[xz] + 3[x^2z][xy^2]", "r_{3,2,1}^(2)", 6, 24),
    ((2, 2, 2), "[xy][yz][zx]", "r_{2,2,2}^(1)", 1, 4),
    ((2, 2, 2), "[xyz]^2 - [xy^2][xz^2]", "r_{2,2,2}^(2)", 3, 12),
]

# (multidegree, expression = 0, name, S_4 translates)
CONGRUENCES_M4 = [
    ((2, 1, 1, 1), "[x^2y][zw] - [xyz][xw] - [xyw][xz]", "r_{2,1,1,1}", 12),
    ((3, 1, 1, 1), "[xy][xz][xw] + 3[x^2y][xzw]", "r_{3,1,1,1}", 12),
    ((2, 2, 1, 1), "[xy]^2[zw] - 3[x^2z][y^2w] - 3[x^2w][y^2z] + 6[xyz][xyw]",
     "r_{2,2,1,1}^(1)", 6),
    ((2, 2, 1, 1), "[xy][xz][yw] - 3[x^2w][y^2z] + 3[xyz][xyw]", "r_{2,2,1,1}^(2)", 12),
    ((2, 2, 1, 1), "[x^2y][yzw] - [xyz][xyw]", "r_{2,2,1,1}^(3)", 12),
]

SECONDARY_M3 = [
    ((0, 0, 0), "1"),
    ((1, 1, 0), "[xy]"),
    ((2, 1, 0), "[x^2y]"),
    ((1, 1, 1), "[xyz]"),
    ((2, 2, 0), "[xy]^2"),
    ((2, 1, 1), "[xy][xz]"),
    ((3, 1, 1), "[x^2y][xz]"),
    ((2, 2, 1), "[x^2y][yz]"),
    ((3, 3, 0), "[x^2y][xy^2]"),
    ((3, 2, 1), "[x^2y][xyz]"),
    ((2, 2, 2), "[xyz]^2"),
    ((3, 2, 2), "[x^2y][xz][yz]"),
]

SECONDARY_M4 = [
    ((1, 1, 1, 1), "[xy][zw]"), ((1, 1, 1, 1), "[xz][yw]"), ((1, 1, 1, 1), "[xw][yz]"),
    ((2, 1, 1, 1), "[xy][xzw]"), ((2, 1, 1, 1), "[xyw][xz]"), ((2, 1, 1, 1), "[xyz][xw]"),
    ((3, 1, 1, 1), "[x^2y][xzw]"),
    ((2, 2, 1, 1), "[x^2z][y^2w]"), ((2, 2, 1, 1), "[x^2w][y^2z]"), ((2, 2, 1, 1), "[xyz][xyw]"),
    ((3, 2, 1, 1), "[x^2y][xz][yw]"),
    ((2, 2, 2, 1), "[xy][xzw][yz]"), ((2, 2, 2, 1), "[xyw][xz][yz]"),
    ((2, 2, 2, 1), "[xy][xz][yzw]"),
    ((3, 3, 1, 1), "[x^2y][xyz][yw]"),
    ((3, 2, 2, 1), "[xyz]^2[xw]"),
    ((2, 2, 2, 2), "[x^2y][yz][zw^2]"), ((2, 2, 2, 2), "[x^2z][y^2w][zw]"),
    ((2, 2, 2, 2), "[x^2w][y^2z][zw]"),
]
