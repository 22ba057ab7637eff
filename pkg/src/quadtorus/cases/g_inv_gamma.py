"""Case data for lam = (-1+sqrt5)/2 = 1/gamma.

Inducing domain is the wedge {gamma x - 1 < y < x/gamma}; four cells with
return times 6, 4, 7, 5, two of them boundary segments on y = x - 1/gamma^2
and on y = 0; scaling z -> z/gamma^2 about the origin.
"""

from __future__ import annotations

from ._qconst import GAMMA as G, ONE, ZERO, fr, gpow

_C = 1 / (G * G + 1)
_EPS = fr(1, 100)

DATA = {
    "tag": "inv_gamma",
    "r_budget": 200000,
    "period_rows": [
        {"label": "1", "period": 1, "points": [(ZERO, ZERO)]},
        {
            "label": "2(5*4^n+4)/3",
            "formula": lambda n: 2 * (5 * 4**n + 4) // 3,
            "base": (G * _C, _C / G),
        },
        {
            "label": "10(5*4^n+4)/3",
            "formula": lambda n: 10 * (5 * 4**n + 4) // 3,
            "base": (G * _C + _EPS, _C / G),
        },
        {
            "label": "4(5*4^n-2)/3",
            "formula": lambda n: 4 * (5 * 4**n - 2) // 3,
            "base": (G * G * _C, _C),
        },
        {
            "label": "20(5*4^n-2)/3",
            "formula": lambda n: 20 * (5 * 4**n - 2) // 3,
            "base": (G * G * _C + _EPS, _C),
        },
        {
            "label": "5(4^(n+1)-1)/3",
            "formula": lambda n: 5 * (4 ** (n + 1) - 1) // 3,
            "base": (fr(1, 2), ZERO),
        },
        {
            "label": "10(4^(n+1)-1)/3",
            "formula": lambda n: 10 * (4 ** (n + 1) - 1) // 3,
            "base": (fr(1, 2) + _EPS, ZERO),
        },
        {
            "label": "5(2*4^(n+1)+7)/3",
            "formula": lambda n: 5 * (2 * 4 ** (n + 1) + 7) // 3,
            "base": (gpow(-1) / 2, ZERO),
        },
        {
            "label": "10(2*4^(n+1)+7)/3",
            "formula": lambda n: 10 * (2 * 4 ** (n + 1) + 7) // 3,
            "base": (fr(3, 10), ZERO),
        },
        {
            "label": "(10*4^n+11)/3",
            "formula": lambda n: (10 * 4**n + 11) // 3,
            "base": (gpow(-2), ZERO),
        },
        {
            "label": "(5*4^(n+1)+19)/3",
            "formula": lambda n: (5 * 4 ** (n + 1) + 19) // 3,
            "base": (gpow(-3), ZERO),
        },
    ],
    "return_budget": 12,
    "domains": [
        {
            "id": 1,
            "region": [[(G, -ONE, "<", ONE), (ONE, -G, ">", ZERO)]],
            "exclude": [],
            "cells": [
                {
                    "label": "1",
                    "constraints": [(ZERO, ONE, ">", ZERO), (ONE, -ONE, ">", gpow(-2))],
                    "tau": 4,
                    "sampler": ("box", (ZERO, ZERO), (ONE, ONE)),
                },
                {
                    "label": "2",
                    "constraints": [(ONE, -ONE, "=", gpow(-2))],
                    "tau": 7,
                    "sampler": ("segment", (gpow(-2), ZERO), (ONE, 1 - gpow(-2))),
                },
                {
                    "label": "3",
                    "constraints": [(ZERO, ONE, "=", ZERO), (ONE, ZERO, ">", gpow(-2))],
                    "tau": 5,
                    "sampler": ("segment", (gpow(-2), ZERO), (gpow(-1), ZERO)),
                },
                {
                    "label": "0",
                    "constraints": [(ONE, -ONE, "<", gpow(-2))],
                    "tau": 6,
                    "sampler": ("box", (ZERO, ZERO), (ONE, ONE)),
                },
            ],
            "cell_coords": "direct",
            "scaling": {"kappa": gpow(-2), "v": (ZERO, ZERO), "c": ONE},
            "epsilon": 1,
            "delta": G,
            "subst": {"0": "010", "1": "01110", "2": "012", "3": "01112"},
            "shat": {("0", 1): 2, ("1", 3): 2, ("1", 4): 1},
            "t_table": {
                ("0", 2): (-10, (-gpow(-1), -gpow(-2))),
                ("1", 2): (-10, (-gpow(-1), -gpow(-2))),
                ("2", 2): (-10, (-gpow(-1), -gpow(-2))),
                ("1", 1): (-6, (ONE, gpow(-1))),
                ("2", 1): (-6, (ONE, gpow(-1))),
                ("1", 4): (6, (gpow(-1), ZERO)),
                ("0", 1): (10, (-gpow(-2), ZERO)),
                ("1", 3): (10, (-gpow(-2), ZERO)),
            },
            "witness": {
                "z": (fr(1, 4), gpow(-3) / 4),
                "cycle": [
                    (fr(1, 4), gpow(-3) / 4),
                    (gpow(2) / 4, gpow(-1) / 4),
                    ((3 * G - 2) / 4, G / 4),
                ],
                "coords": "direct",
            },
        }
    ],
}
