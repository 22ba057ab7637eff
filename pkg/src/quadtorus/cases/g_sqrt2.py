"""Case data for lam = sqrt2.

Inducing domain is the parallelogram {sqrt2-2 < x - sqrt2 y < 0,
0 < sqrt2 x - y < 2 - sqrt2}; four cells with return times 5, 9, 3, 11
(one of them a vertical segment); scaling z -> (sqrt2-1) z with orientation
reversal (epsilon = -1).
"""

from __future__ import annotations

from ._qconst import ONE, SQRT2 as S, ZERO, fr

_K = S - 1  # sqrt2 - 1

_HALF_S = S / 2  # 1/sqrt2
_EPS = fr(1, 100)

DATA = {
    "tag": "sqrt2",
    "r_budget": 200000,
    "return_budget": 16,
    "period_rows": [
        {"label": "1", "period": 1, "points": [(ZERO, ZERO)]},
        {"label": "4", "period": 4, "points": [(ZERO, fr(1, 2))]},
        {
            "label": "8 (other boundary-segment points)",
            "period": 8,
            "points": [(ZERO, fr(3, 8))],
        },
        {"label": "6", "period": 6, "points": [(ZERO, _HALF_S)]},
        {
            "label": "2*3^n+(-1)^n",
            "formula": lambda n: 2 * 3**n + (-1) ** n,
            "base": (_HALF_S, _HALF_S),
        },
        {
            "label": "8(2*3^n+(-1)^n)",
            "formula": lambda n: 8 * (2 * 3**n + (-1) ** n),
            "base": (_HALF_S + _EPS, _HALF_S),
        },
        {
            "label": "4(3^(n+1)+1+(-1)^n)",
            "formula": lambda n: 4 * (3 ** (n + 1) + 1 + (-1) ** n),
            "base": (fr(1, 2), _K),
        },
        {
            "label": "8(3^(n+1)+1+(-1)^n)",
            "formula": lambda n: 8 * (3 ** (n + 1) + 1 + (-1) ** n),
            "base": (fr(1, 2) + _EPS, _K),
        },
        {
            "label": "2*3^(n+1)+4+(-1)^n",
            "formula": lambda n: 2 * 3 ** (n + 1) + 4 + (-1) ** n,
            "base": (_K, _K),
        },
    ],
    "domains": [
        {
            "id": 1,
            "region": [
                [
                    (ONE, -S, ">", S - 2),
                    (ONE, -S, "<", ZERO),
                    (S, -ONE, ">", ZERO),
                    (S, -ONE, "<", 2 - S),
                ]
            ],
            "exclude": [],
            "cells": [
                {
                    "label": "0",
                    "constraints": [(ONE, ZERO, "<", _K)],
                    "tau": 5,
                    "sampler": ("box", (ZERO, ZERO), (_K, ONE)),
                },
                {
                    "label": "1",
                    "constraints": [(ONE, ZERO, ">", _K), (ZERO, ONE, "<=", _K)],
                    "tau": 9,
                    "sampler": ("box", (_K, ZERO), (ONE, _K)),
                },
                {
                    "label": "2",
                    "constraints": [(ONE, ZERO, ">", _K), (ZERO, ONE, ">", _K)],
                    "tau": 3,
                    "sampler": ("box", (_K, _K), (ONE, ONE)),
                },
                {
                    "label": "3",
                    "constraints": [(ONE, ZERO, "=", _K)],
                    "tau": 11,
                    "sampler": ("segment", (_K, (2 - S) / 2), (_K, 2 - S)),
                },
            ],
            "cell_coords": "direct",
            "scaling": {"kappa": _K, "v": (ZERO, ZERO), "c": ONE},
            "epsilon": -1,
            "delta": S + 1,
            "subst": {"0": "010", "1": "000", "2": "0", "3": "030"},
            "shat": {("0", 2): -1, ("1", 2): -1, ("3", 2): -1},
            "t_table": {
                ("0", 2): (-5, (_K, 2 - S)),
                ("1", 2): (-5, (_K, 2 - S)),
                ("3", 2): (-5, (_K, 2 - S)),
                ("0", 1): (5, (2 - S, _K)),
                ("1", 1): (5, (2 - S, _K)),
                ("3", 1): (5, (2 - S, _K)),
            },
            "witness": {
                "z": ((3 - S) / 4, (2 * S - 1) / 4),
                "cycle": [
                    ((3 - S) / 4, (2 * S - 1) / 4),
                    ((3 * S - 3) / 4, (3 - S) / 4),
                    ((2 * S - 1) / 4, (3 - S) / 4),
                    ((3 - S) / 4, (3 * S - 3) / 4),
                ],
                "coords": "direct",
            },
        }
    ],
}
