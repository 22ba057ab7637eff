"""Case data for lam = (1-sqrt5)/2 = -1/gamma.

Inducing domain {x + y >= 3 - gamma} in the top-right corner; return times 1
and 4; scaling contracts by 1/gamma^2 towards (1,1), with V(z) = (1,1) - z.
"""

from __future__ import annotations

from ._qconst import GAMMA as G, ONE, ZERO, fr, gpow

_C = 1 / (G * G + 1)
_EPS = fr(1, 100)

DATA = {
    "tag": "neg_inv_gamma",
    "r_budget": 200000,
    "return_budget": 8,
    "period_rows": [
        {
            "label": "1",
            "period": 1,
            "points": [(ZERO, ZERO), (_C, _C), (2 * _C, 2 * _C)],
        },
        {
            "label": "5 (other pentagon points)",
            "period": 5,
            "points": [(_C + _EPS, _C)],
        },
        {
            "label": "2(5*4^n+1)/3",
            "formula": lambda n: 2 * (5 * 4**n + 1) // 3,
            "base": (G * G * _C, G * G * _C),
        },
        {
            "label": "10(5*4^n+1)/3",
            "formula": lambda n: 10 * (5 * 4**n + 1) // 3,
            "base": (G * G * _C + _EPS, G * G * _C),
        },
        {
            "label": "(5*4^n-2)/3",
            "formula": lambda n: (5 * 4**n - 2) // 3,
            "base": (3 * _C, 3 * _C),
        },
        {
            "label": "5(5*4^n-2)/3",
            "formula": lambda n: 5 * (5 * 4**n - 2) // 3,
            "base": (3 * _C + _EPS, 3 * _C),
        },
    ],
    "domains": [
        {
            "id": 1,
            "region": [[(ONE, ONE, ">=", 3 - G)]],
            "exclude": [],
            "cells": [
                {
                    "label": "0",
                    "constraints": [(ONE, G, ">", fr(2))],
                    "tau": 1,
                    "sampler": ("box", (ZERO, ZERO), (ONE, ONE)),
                },
                {
                    "label": "1",
                    "constraints": [(ONE, G, "<=", fr(2))],
                    "tau": 4,
                    "sampler": ("box", (ZERO, ZERO), (ONE, ONE)),
                },
            ],
            "cell_coords": "direct",
            "scaling": {"kappa": gpow(-2), "v": (ONE, ONE), "c": -ONE},
            "epsilon": 1,
            "delta": G,
            "subst": {"0": "010", "1": "01110"},
            "shat": {("0", 1): 2, ("1", 3): 2, ("1", 4): 1},
            "t_table": {
                ("0", 2): (-5, (-gpow(-2), ZERO)),
                ("1", 2): (-5, (-gpow(-2), ZERO)),
                ("1", 1): (-1, (gpow(-1), ZERO)),
                ("1", 4): (1, (ZERO, gpow(-1))),
                ("0", 1): (5, (ZERO, -gpow(-2))),
                ("1", 3): (5, (ZERO, -gpow(-2))),
            },
            "witness": {
                "z": (1 - gpow(-1) / 3, 1 - 2 * gpow(-1) / 3),
                "cycle": [
                    (gpow(-1) / 3, 2 * gpow(-1) / 3),
                    (G / 3, gpow(-3) / 3),
                    (2 * gpow(-1) / 3, gpow(-1) / 3),
                    (gpow(-3) / 3, G / 3),
                ],
                "coords": "V",
            },
        }
    ],
}
