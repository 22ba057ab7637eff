"""Case data for lam = (1+sqrt5)/2.

The inducing domain is the unit square minus the open triangle
{y < lam*x, x + y > 1, x < lam*y} and minus the origin; the first return map
is T itself (tau = 1 on both cells).  Scaling is z -> z/lam^2 about the
origin.
"""

from __future__ import annotations

from ._qconst import GAMMA as G, ONE, ZERO, fr, gpow

_T01 = (ZERO, ONE)
_T3 = (gpow(-1), gpow(-2))
_T45 = (ZERO, -gpow(-1))

_C = 1 / (G * G + 1)  # 1/(lam^2+1), the center-scale of the P-cells
_EPS = fr(1, 100)  # verified in-cell offset for generic representatives

DATA = {
    "tag": "gamma",
    "r_budget": 200000,
    "return_budget": 8,
    "period_rows": [
        {
            "label": "1",
            "period": 1,
            "points": [(ZERO, ZERO), (G * G * _C, G * G * _C)],
        },
        {"label": "5 (other recurrent points)", "period": 5, "points": [(fr(1, 2), fr(3, 5))]},
        {
            "label": "(5*4^n+1)/3",
            "formula": lambda n: (5 * 4**n + 1) // 3,
            "base": (_C / G, 2 * _C),
        },
        {
            "label": "5(5*4^n+1)/3",
            "formula": lambda n: 5 * (5 * 4**n + 1) // 3,
            "base": (_C / G + _EPS, 2 * _C),
        },
        {
            "label": "(10*4^n-1)/3",
            "formula": lambda n: (10 * 4**n - 1) // 3,
            "base": (_C, _C),
        },
        {
            "label": "5(10*4^n-1)/3",
            "formula": lambda n: 5 * (10 * 4**n - 1) // 3,
            "base": (_C + _EPS, _C),
        },
    ],
    "domains": [
        {
            "id": 1,
            # complement of the triangle {y < G x, x+y > 1, x < G y}
            "region": [
                [(-G, ONE, ">=", ZERO)],
                [(ONE, ONE, "<=", ONE)],
                [(ONE, -G, ">=", ZERO)],
            ],
            "exclude": [(ZERO, ZERO)],
            "cells": [
                {
                    "label": "0",
                    "constraints": [(-G, ONE, ">=", ZERO)],
                    "tau": 1,
                    "sampler": ("box", (ZERO, ZERO), (ONE, ONE)),
                },
                {
                    "label": "1",
                    "constraints": [(-G, ONE, "<", ZERO)],
                    "tau": 1,
                    "sampler": ("box", (ZERO, ZERO), (ONE, ONE)),
                },
            ],
            "cell_coords": "direct",
            "scaling": {"kappa": gpow(-2), "v": (ZERO, ZERO), "c": ONE},
            "epsilon": 1,
            "delta": G,
            "subst": {"0": "0", "1": "101101"},
            "shat": {("1", k): 6 - k for k in range(1, 6)},
            "t_table": {
                ("1", 5): (1, _T01),
                ("1", 4): (2, _T01),
                ("1", 3): (3, _T3),
                ("1", 2): (4, _T45),
                ("1", 1): (5, _T45),
            },
            "witness": {
                "z": (ZERO, fr(1, 3)),
                "cycle": [
                    (ZERO, fr(1, 3)),
                    (ZERO, gpow(2) / 3),
                    (ZERO, fr(2, 3)),
                    (ZERO, gpow(-2) / 3),
                ],
                "coords": "direct",
            },
        }
    ],
}
