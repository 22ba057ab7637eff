"""Case data for lam = -(1+sqrt5)/2 = -gamma.

Inducing domain is the sliver {x < y, gamma x + y >= 4 - gamma} near (1,1);
return times 42 and 28; scaling contracts by 1/gamma^2 towards (1,1) with
V(z) = gamma^4 ((1,1) - z).
"""

from __future__ import annotations

from ._qconst import GAMMA as G, ONE, SQRT5, ZERO, fr, gpow

_X0 = 1 - gpow(-5)  # boundary between the two cells

_C = 1 / (G * G + 1)
_EPS = fr(1, 200)
# fixed points of the first-return map on cells 0 and 1 (the P-cell centers)
_ALPHA = ((25 - 7 * SQRT5) / 10, (25 - 9 * SQRT5) / 5)
_BETA = (2 * SQRT5 / 5, (-15 + 11 * SQRT5) / 10)

DATA = {
    "tag": "neg_gamma",
    "r_budget": 200000,
    "period_rows": [
        {
            "label": "1",
            "period": 1,
            "points": [
                (ZERO, ZERO),
                (gpow(-2), gpow(-2)),
                (2 * gpow(-2), 2 * gpow(-2)),
            ],
        },
        {
            "label": "2",
            "period": 2,
            "points": [
                ((5 - G) * _C, 2 * gpow(-2) * _C),
                (2 * gpow(-2) * _C, (5 - G) * _C),
            ],
        },
        {
            "label": "5",
            "period": 5,
            "points": [(gpow(-4) / 2, gpow(-4) / 2)],
        },
        {
            "label": "10 (other pentagon points)",
            "period": 10,
            "points": [(fr(1, 20), fr(1, 20))],
        },
        {"label": "11", "period": 11, "points": [(1 - gpow(-5), 1 - gpow(-5))]},
        {
            "label": "25",
            "period": 25,
            "points": [(1 - gpow(-5) / 2, 1 - gpow(-5) / 2)],
        },
        {
            "label": "50 (other pentagon points)",
            "period": 50,
            "points": [(fr(19, 20), fr(19, 20))],
        },
        {
            "label": "2(35*4^n+28)/3",
            "formula": lambda n: 2 * (35 * 4**n + 28) // 3,
            "base": _ALPHA,
        },
        {
            "label": "10(35*4^n+28)/3",
            "formula": lambda n: 10 * (35 * 4**n + 28) // 3,
            "base": (_ALPHA[0] + _EPS, _ALPHA[1]),
        },
        {
            "label": "4(35*4^n-14)/3",
            "formula": lambda n: 4 * (35 * 4**n - 14) // 3,
            "base": _BETA,
        },
        {
            "label": "20(35*4^n-14)/3",
            "formula": lambda n: 20 * (35 * 4**n - 14) // 3,
            "base": (_BETA[0] + _EPS, _BETA[1]),
        },
    ],
    "return_budget": 64,
    "domains": [
        {
            "id": 1,
            "region": [[(ONE, -ONE, "<", ZERO), (G, ONE, ">=", 4 - G)]],
            "exclude": [],
            "cells": [
                {
                    "label": "0",
                    "constraints": [(ONE, ZERO, ">", _X0)],
                    "tau": 42,
                    "sampler": ("box", (_X0, _X0), (ONE, ONE)),
                },
                {
                    "label": "1",
                    "constraints": [(ONE, ZERO, "<=", _X0)],
                    "tau": 28,
                    "sampler": ("box", (fr(4, 5), fr(4, 5)), (ONE, ONE)),
                },
            ],
            "cell_coords": "direct",
            "scaling": {"kappa": gpow(-2), "v": (ONE, ONE), "c": -gpow(4)},
            "epsilon": 1,
            "delta": G,
            "subst": {"0": "010", "1": "01110"},
            "shat": {("0", 1): 2, ("1", 3): 2, ("1", 4): 1},
            "t_table": {
                ("0", 2): (-70, (-gpow(-2), -gpow(-2))),
                ("1", 2): (-70, (-gpow(-2), -gpow(-2))),
                ("1", 1): (-42, (gpow(-1), gpow(-1))),
                ("1", 4): (42, (ONE, ZERO)),
                ("0", 1): (70, (-gpow(-1), ZERO)),
                ("1", 3): (70, (-gpow(-1), ZERO)),
            },
            "witness": {
                "z": (1 - gpow(-2) / 3, 1 - gpow(-5) / 3),
                "cycle": [
                    (gpow(2) / 3, gpow(-1) / 3),
                    (fr(2, 3), G / 3),
                    ((gpow(2) + 1) / (3 * G), 2 * gpow(-1) / 3),
                    ((3 * G - 2) / 3, gpow(-3) / 3),
                ],
                "coords": "V",
            },
        }
    ],
}
