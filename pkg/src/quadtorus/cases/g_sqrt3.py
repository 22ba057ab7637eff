"""Case data for lam = sqrt3.

The inducing domain splits into two pieces that renormalize independently:
a large piece D1 = D minus D2 with ten cells (read in the coordinates
V1(z) = ((1,1)-z)/(2-sqrt3)^4) and a small piece D2 with five cells (read in
V2(z) = (z - (72-41sqrt3)(1,1)) * (362+209sqrt3)).  Both scale by
kappa = 2 - sqrt3 with epsilon = +1.  First-return times are taken within
each piece separately.
"""

from __future__ import annotations

from ._qconst import ONE, SQRT3 as S, ZERO, fr

_K = 2 - S
_K4 = _K**4
_K5 = _K**5

# the inducing domain D, direct coordinates
_D_CON = [
    (fr(2), -S, "<", 2 - S),
    (-S, fr(2), "<", 2 - S),
    (-S, ONE, "<", 195 - 113 * S),
    (ONE, -S, "<", 195 - 113 * S),
]
# the small piece D2: all four strictly
_D2_CON = [
    (fr(2), -S, ">", 267 - 154 * S),
    (-S, fr(2), ">", 267 - 154 * S),
    (-S, ONE, ">", 98 - 57 * S),
    (ONE, -S, ">", 98 - 57 * S),
]
_D2_NEG = [
    (fr(2), -S, "<=", 267 - 154 * S),
    (-S, fr(2), "<=", 267 - 154 * S),
    (-S, ONE, "<=", 98 - 57 * S),
    (ONE, -S, "<=", 98 - 57 * S),
]

_CORNER = (1 + S, 1 + S)  # meeting point of the two bent boundary lines

_D1_CELLS = [
    # boundary-line cells first, then the open plane cells
    {
        "label": "5",
        "constraints": [(ONE, -S, "=", -ONE)],
        "tau": 3021,
        "sampler": ("segment", (ONE, 2 / S), (fr(2), S)),
    },
    {
        "label": "6",
        "constraints": [(ONE, ZERO, "=", fr(2))],
        "tau": 3593,
        "sampler": ("segment", (fr(2), S), (fr(2), 4 / S)),
    },
    {
        "label": "7",
        "constraints": [(ZERO, ONE, "=", 2 * S - 1), (ONE, ZERO, "<", 3 - 1 / S)],
        "tau": 9799,
        "sampler": ("segment", ((6 - S) / 2, 2 * S - 1), (3 - 1 / S, 2 * S - 1)),
    },
    {
        "label": "8",
        "constraints": [(fr(2), -S, "=", S - 1), (ONE, ZERO, ">", fr(2))],
        "tau": 11473,
        "sampler": ("segment", (fr(2), (5 * S - 3) / 3), _CORNER),
    },
    {
        "label": "9",
        "constraints": [(-S, fr(2), "=", S - 1), (ONE, ZERO, ">", fr(2))],
        "tau": 7907,
        "sampler": ("segment", (fr(2), (3 * S - 1) / 2), _CORNER),
    },
    {
        "label": "2",
        "constraints": [(ONE, ZERO, ">", fr(2)), (fr(2), -S, ">", S - 1)],
        "tau": 3230,
        "sampler": ("box", (fr(2), fr(9, 5)), (fr(3), fr(13, 5))),
    },
    {
        "label": "3",
        "constraints": [
            (ONE, ZERO, ">", fr(2)),
            (-S, fr(2), ">", S - 1),
            (ZERO, ONE, "<", 2 * S - 1),
        ],
        "tau": 7406,
        "sampler": ("box", (fr(2), fr(2)), (fr(14, 5), 2 * S - 1)),
    },
    {
        "label": "4",
        "constraints": [(-S, fr(2), ">", S - 1), (ZERO, ONE, ">", 2 * S - 1)],
        "tau": 9771,
        "sampler": ("box", (fr(2), fr(2)), (fr(3), fr(3))),
    },
    {
        "label": "0",
        "constraints": [(ONE, -S, ">", -ONE)],
        "tau": [1601, 1733],
        "sampler": ("box", (ZERO, ZERO), (fr(2), fr(7, 4))),
    },
    {
        "label": "1",
        "constraints": [(ONE, -S, "<", -ONE), (ONE, ZERO, "<", fr(2))],
        "tau": [3175, 3307],
        "sampler": ("box", (ZERO, ZERO), (fr(2), fr(3))),
    },
]

_T1A = (S * (1 - S), 2 * (1 - S))  # (1-sqrt3)(sqrt3, 2)
_T1B = (S, fr(2))
_T1C = (fr(2), S)
_T1D = (2 * (1 - S), S * (1 - S))

_D2_CELLS = [
    {
        "label": "b3",
        "constraints": [(-S, ONE, "=", -ONE)],
        "tau": 18171,
        "sampler": ("segment", (2 / S, ONE), (S, fr(2))),
    },
    {
        "label": "b4",
        "constraints": [(ONE, ZERO, "=", S + 1)],
        "tau": 3593,
        "sampler": ("segment", (S + 1, (3 + S) / 2), (S + 1, (6 + 2 * S) / 3)),
    },
    {
        "label": "b2",
        "constraints": [(ONE, ZERO, ">", S + 1)],
        "tau": [3175, 3307],
        "sampler": ("box", (S + 1, fr(2)), (fr(5), fr(5))),
    },
    {
        "label": "b0",
        "constraints": [(-S, ONE, ">", -ONE)],
        "tau": [19327, 19459],
        "sampler": ("box", (ZERO, ZERO), (fr(3), fr(4))),
    },
    {
        "label": "b1",
        "constraints": [(-S, ONE, "<", -ONE), (ONE, ZERO, "<", S + 1)],
        "tau": 15524,
        "sampler": ("box", (ZERO, ZERO), (S + 1, fr(3))),
    },
]

DATA = {
    "tag": "sqrt3",
    "r_budget": 200000,
    "return_budget": 25000,
    "domains": [
        {
            "id": 1,
            "region": [tuple(_D_CON) + (neg,) for neg in _D2_NEG],
            "exclude": [],
            "cells": _D1_CELLS,
            "cell_coords": "V",
            "scaling": {"kappa": _K, "v": (ONE, ONE), "c": -(97 + 56 * S)},
            "epsilon": 1,
            "delta": fr(2),
            "subst": {
                "0": "010",
                "1": "01110",
                "2": "01210",
                "3": "012100001210",
                "4": "01210000000001210",
                "5": "01510",
                "6": "01610",
                "7": "01210000500001210",
                "8": "01210012621001210",
                "9": "0121005001210",
            },
            "shat": {
                ("0", 1): 2,
                ("1", 3): 2,
                ("1", 4): 1,
            },
            "t_table": {
                ("0", 1): (0, _T1A),
                ("1", 3): (0, _T1A),
                ("1", 4): (5, _T1B),
                ("1", 1): (7, _T1C),
                ("0", 2): (0, _T1D),
                ("1", 2): (0, _T1D),
            },
            "witness": {
                "z": (1 - _K4 * (S + fr(1, 4)), 1 - _K4 * fr(7, 4)),
                "cycle": [
                    (S + fr(1, 4), fr(7, 4)),
                    (fr(3, 2) + S / 4, 3 * S / 4 + fr(1, 2)),
                    (fr(7, 4), S + fr(1, 4)),
                    (3 * S / 4 + fr(1, 2), fr(3, 2) + S / 4),
                ],
                "coords": "V",
            },
        },
        {
            "id": 2,
            "region": [tuple(_D_CON) + tuple(_D2_CON)],
            "exclude": [],
            "cells": _D2_CELLS,
            "cell_coords": "V",
            "scaling": {
                "kappa": _K,
                "v": (72 - 41 * S, 72 - 41 * S),
                "c": 362 + 209 * S,
            },
            "epsilon": 1,
            "delta": 2 * (S - 1),
            "subst": {
                "b0": ["b0", "b1", "b2", "b2", "b2", "b2", "b2", "b2", "b2", "b1", "b0"],
                "b1": ["b0", "b1", "b2", "b2", "b1", "b0"],
                "b2": ["b0"],
                "b3": ["b0", "b1", "b2", "b2", "b4", "b2", "b2", "b1", "b0"],
                "b4": ["b0", "b3", "b0"],
            },
            "shat": {
                ("b0", 10): 1,
                ("b1", 5): 1,
                ("b0", 9): 2,
                ("b1", 4): 2,
                ("b0", 8): 3,
                ("b1", 3): 3,
                ("b0", 7): 4,
                ("b0", 6): 5,
            },
            "t_table": {
                ("b0", 10): (7, (fr(2), S)),
                ("b1", 5): (7, (fr(2), S)),
                ("b0", 9): (3, (1 - S, S - 1)),
                ("b1", 4): (3, (1 - S, S - 1)),
                ("b0", 8): (10, (1 - S, fr(-3))),
                ("b1", 3): (10, (1 - S, fr(-3))),
                ("b0", 7): (5, (fr(3), 2 * S)),
                ("b0", 6): (0, (-2 * S, fr(-4))),
            },
            "witness": {
                "z": (
                    72 - 41 * S + _K5 * fr(5, 7),
                    72 - 41 * S + _K5 * (3 * S / 7),
                ),
                "cycle": [
                    (fr(5, 7), 3 * S / 7),
                    ((2 + S) * fr(5, 7), (2 + S) * 3 * S / 7),
                ],
                "coords": "V",
            },
        },
    ],
}
