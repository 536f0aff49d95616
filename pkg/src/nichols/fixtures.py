"""Named braiding specs for the worked examples (JSON form, see serialize)."""

from __future__ import annotations

from .errors import SpecError
from .serialize import parse_braiding

SPECS = {
    # rank one, q a primitive l-th root of unity
    "rank1_z2": {"kind": "diagonal", "mode": "root_of_unity", "order": 2, "exponents": [[1]]},
    "rank1_z3": {"kind": "diagonal", "mode": "root_of_unity", "order": 3, "exponents": [[1]]},
    "rank1_z5": {"kind": "diagonal", "mode": "root_of_unity", "order": 5, "exponents": [[1]]},
    "rank1_one": {"kind": "diagonal", "mode": "root_of_unity", "order": 1, "exponents": [[0]]},
    "rank1_generic": {"kind": "diagonal", "mode": "generic", "exponents": [[1]]},
    # q_ij = q^(alpha_i, alpha_j) with q = zeta_3 (so q_ii = q^2)
    "sl3": {"kind": "diagonal", "mode": "root_of_unity", "order": 3,
            "exponents": [[2, -1], [-1, 2]]},
    "sl3_generic": {"kind": "diagonal", "mode": "generic", "exponents": [[2, -1], [-1, 2]]},
    # q^2 = zeta_3, q_22 = -1, realized in Q(zeta_6)
    "sl21": {"kind": "diagonal", "mode": "root_of_unity", "order": 6,
             "exponents": [[2, -1], [-1, 3]]},
    # q = zeta_8: nodes q^2, -1 and edge q^-2
    "sl21_z8": {"kind": "diagonal", "mode": "root_of_unity", "order": 8,
                "exponents": [[2, -1], [-1, 4]]},
    # a = b = c = zeta_3 on three odd nodes q_ii = -1
    "d21alpha": {"kind": "diagonal", "mode": "root_of_unity", "order": 6,
                 "exponents": [[3, 1, 1], [1, 3, 1], [1, 1, 3]]},
    "b2_generic": {"kind": "diagonal", "mode": "generic", "exponents": [[2, -2], [-2, 4]]},
    # q_12 q_21 = 1 with q_12 != 1
    "a1xa1": {"kind": "diagonal", "mode": "root_of_unity", "order": 3,
              "exponents": [[2, 1], [-1, 2]]},
    "s3": {"kind": "group_yd", "generators": [[2, 1, 3], [1, 3, 2]], "class_rep": [2, 1, 3],
           "character": {"order": 2, "values": [[[2, 1, 3], 1]]}},
    # dihedral group of order 8, class of a reflection, sign character on its centralizer
    "d4_reflection": {"kind": "group_yd", "generators": [[2, 3, 4, 1], [1, 4, 3, 2]],
                      "class_rep": [1, 4, 3, 2],
                      "character": {"order": 2, "values": [[[1, 4, 3, 2], 1], [[3, 4, 1, 2], 1]]}},
    "z3_cyclic": {"kind": "group_yd", "generators": [[2, 3, 1]], "class_rep": [2, 3, 1],
                  "character": {"order": 3, "values": [[[2, 3, 1], 1]]}},
    "trivial_group": {"kind": "group_yd", "generators": [[1]], "class_rep": [1],
                      "character": {"order": 1, "values": []}},
}

DIAGONAL = ["rank1_z2", "rank1_z3", "rank1_z5", "sl3", "sl21", "sl21_z8", "d21alpha", "a1xa1"]
GENERIC = ["rank1_generic", "sl3_generic", "b2_generic"]
GROUP = ["s3", "d4_reflection", "z3_cyclic", "trivial_group"]


def fixture_spec(name):
    try:
        return SPECS[name]
    except KeyError:
        raise SpecError(f"unknown fixture {name!r}; known: {', '.join(sorted(SPECS))}") from None


def fixture(name):
    return parse_braiding(fixture_spec(name))
