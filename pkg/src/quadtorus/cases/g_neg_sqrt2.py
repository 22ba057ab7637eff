"""Case data for lam = -sqrt2.

Inducing domain {sqrt2 x + y > 2 or x + sqrt2 y > 2} in the top-right
corner; cells with return times 1, 21, 31 (the last a boundary segment);
scaling contracts by sqrt2-1 towards (1,1) with V(z) = (sqrt2+1)((1,1)-z)
and epsilon = -1.
"""

from __future__ import annotations

from ._qconst import ONE, SQRT2 as S, ZERO, fr

_K = S - 1

_HALF_S = S / 2  # 1/sqrt2
_EPS = fr(1, 100)

DATA = {
    "tag": "neg_sqrt2",
    "r_budget": 200000,
    "return_budget": 40,
    "period_rows": [
        {
            "label": "1",
            "period": 1,
            "points": [(ZERO, ZERO), (1 - _HALF_S, 1 - _HALF_S), (2 - S, 2 - S)],
        },
        {
            "label": "4",
            "period": 4,
            "points": [(fr(3, 2) - S, fr(3, 2) - S)],
        },
        {"label": "10", "period": 10, "points": [(_HALF_S, ZERO)]},
        {
            "label": "8 (other recurrent points)",
            "period": 8,
            "points": [(fr(1, 4), fr(1, 4))],
        },
        {
            "label": "2*3^(n+1)-5(-1)^n",
            "formula": lambda n: 2 * 3 ** (n + 1) - 5 * (-1) ** n,
            "base": (3 - 3 * _HALF_S, 3 - 3 * _HALF_S),
        },
        {
            "label": "8(2*3^(n+1)-5(-1)^n)",
            "formula": lambda n: 8 * (2 * 3 ** (n + 1) - 5 * (-1) ** n),
            "base": (3 - 3 * _HALF_S + _EPS, 3 - 3 * _HALF_S),
        },
        {
            "label": "4(3^(n+2)+5-5(-1)^n)",
            "formula": lambda n: 4 * (3 ** (n + 2) + 5 - 5 * (-1) ** n),
            "base": ((9 - 5 * S) / 2, 5 - 3 * S),
        },
        {
            "label": "8(3^(n+2)+5-5(-1)^n)",
            "formula": lambda n: 8 * (3 ** (n + 2) + 5 - 5 * (-1) ** n),
            "base": ((9 - 5 * S) / 2 + _EPS, 5 - 3 * S),
        },
        {
            "label": "2*3^(n+2)+20-5(-1)^n",
            "formula": lambda n: 2 * 3 ** (n + 2) + 20 - 5 * (-1) ** n,
            "base": (8 - 5 * S, 8 - 5 * S),
        },
    ],
    "domains": [
        {
            "id": 1,
            "region": [
                [(S, ONE, ">", fr(2))],
                [(ONE, S, ">", fr(2))],
            ],
            "exclude": [],
            "cells": [
                {
                    "label": "0",
                    "constraints": [(ONE, S, ">", fr(2))],
                    "tau": 1,
                    "sampler": ("box", (2 - S, 2 - S), (ONE, ONE)),
                },
                {
                    "label": "1",
                    "constraints": [(ONE, S, "<", fr(2))],
                    "tau": 21,
                    "sampler": ("box", (2 - S, 2 - S), (ONE, ONE)),
                },
                {
                    "label": "2",
                    "constraints": [(ONE, S, "=", fr(2))],
                    "tau": 31,
                    "sampler": ("segment", (2 - S, ONE), (ONE, 1 / S)),
                },
            ],
            "cell_coords": "direct",
            "scaling": {"kappa": _K, "v": (ONE, ONE), "c": -(S + 1)},
            "epsilon": -1,
            "delta": ONE,
            "subst": {"0": "010", "1": "000", "2": "020"},
            "shat": {("0", 2): -1, ("1", 2): -1, ("2", 2): -1},
            "t_table": {
                ("0", 2): (-1, (ONE, ZERO)),
                ("1", 2): (-1, (ONE, ZERO)),
                ("2", 2): (-1, (ONE, ZERO)),
                ("0", 1): (1, (ZERO, ONE)),
                ("1", 1): (1, (ZERO, ONE)),
                ("2", 1): (1, (ZERO, ONE)),
            },
            "witness": {
                "z": (fr(3, 4), (5 - S) / 4),
                "cycle": [
                    ((S + 1) / 4, fr(1, 4)),
                    ((S + 1) / 4, (S - 1) / 4),
                    (fr(1, 4), (S + 1) / 4),
                    ((S - 1) / 4, (S + 1) / 4),
                ],
                "coords": "V",
            },
        }
    ],
}
