"""Case data for lam = -sqrt3.

Inducing domain {x + sqrt3 y > 5 sqrt3 - 6 or y + sqrt3 x > 5 sqrt3 - 6}
near (1,1), read in the coordinates V(z) = (7+4 sqrt3)((1,1)-z), where it
becomes {x,y > 0, x + sqrt3 y < 1 or y + sqrt3 x < 1}.

Renormalization is driven by the square root of the full scaling: one step
contracts V-coordinates by 2 - sqrt3 and carries a substitution sigma1 from a
fine cell partition to a coarse letter partition; two steps compose to the
full substitution sigma = sigma1 o sigma2 with scaling (2-sqrt3)^2.  The
point V^-1(1/2, 1-sqrt3/2) is isolated in the partition (return time 183,
tenth first-return power fixes it).
"""

from __future__ import annotations

from ._qconst import ONE, SQRT3 as S, ZERO, fr

_K1 = 2 - S  # one-step contraction ratio in V-coordinates
_STAR = (fr(1, 2), 1 - S / 2)

# fine partition: sigma1 maps these labels to words in the coarse letters
_FINE_CELLS = [
    {
        "label": "star",
        "constraints": [(ONE, ZERO, "=", fr(1, 2)), (ZERO, ONE, "=", 1 - S / 2)],
        "tau": 183,
        "sampler": ("point", _STAR),
    },
    {
        "label": "7",
        "constraints": [(S, ONE, "=", ONE)],
        "sampler": ("segment", ((S - 1) / 2, (S - 1) / 2), (1 / S, ZERO)),
    },
    {
        "label": "8",
        "constraints": [(S, fr(2), "=", ONE), (ONE, ZERO, ">", 2 - S)],
        "sampler": ("segment", (2 - S, 2 - S), (1 / S, ZERO)),
    },
    {
        "label": "9",
        "constraints": [(S, fr(2), "=", ONE), (ONE, ZERO, "<", 2 - S)],
        "sampler": ("segment", (ZERO, fr(1, 2)), (2 - S, 2 - S)),
    },
    {
        "label": "5",
        "constraints": [(ONE, ZERO, "=", S - 1)],
        "sampler": ("segment", (S - 1, ZERO), (S - 1, (2 - S) / S)),
    },
    {
        "label": "2",
        "constraints": [(ONE, ZERO, ">", S - 1)],
        "sampler": ("box", (S - 1, ZERO), (ONE, fr(1, 2))),
    },
    {
        "label": "1",
        "constraints": [(S, ONE, ">", ONE), (ONE, ZERO, "<", S - 1)],
        "sampler": ("box", (ZERO, ZERO), (S - 1, ONE)),
    },
    {
        "label": "0",
        "constraints": [(S, ONE, "<", ONE)],
        "sampler": ("box", (ZERO, ZERO), (fr(3, 5), ONE)),
    },
]

# coarse partition: the letters appearing in sigma1/sigma images
_COARSE_CELLS = [
    {"label": "3", "constraints": [(S, ONE, "=", ONE), (ONE, ZERO, "<", fr(1, 2))]},
    {"label": "4", "constraints": [(S, ONE, "=", ONE), (ONE, ZERO, ">", fr(1, 2))]},
    {"label": "6", "constraints": [(fr(2), S, "=", S)]},
    {"label": "5", "constraints": [(ONE, ZERO, "=", S - 1)]},
    {"label": "2", "constraints": [(ONE, ZERO, ">", S - 1)]},
    {"label": "1", "constraints": [(S, ONE, ">", ONE), (ONE, ZERO, "<", S - 1)]},
    {"label": "0", "constraints": [(S, ONE, "<", ONE)]},
]

_SIGMA1 = {
    "0": "020",
    "1": "01000010",
    "2": "0100000000010",
    "5": "01000040",
    "7": "050",
    "8": "06000010",
    "9": "06000000000300000000040",
}

_SIGMA2 = {
    "0": "020",
    "1": "01000010",
    "2": "0100000000010",
    "3": "050000090000080",
    "4": "05000010",
    "5": "0100007000010",
    "6": "01000080",
}

DATA = {
    "tag": "neg_sqrt3",
    "r_budget": 200000,
    "return_budget": 4096,
    "extras": {
        "letter_cells": {1: _COARSE_CELLS},
        "sigma2": _SIGMA2,
        "star_point": _STAR,  # V-coordinates of the isolated point
        # On these line cells the image codes the itinerary of the whole
        # segment; the pointwise conjugacy U T = T^m U holds only on the
        # two-dimensional cells and on cell 9.
        "word_only_labels": {1: frozenset({"5", "7", "8"})},
    },
    "domains": [
        {
            "id": 1,
            "region": [
                [(ONE, S, ">", 5 * S - 6)],
                [(S, ONE, ">", 5 * S - 6)],
            ],
            "exclude": [],
            "cells": _FINE_CELLS,
            "cell_coords": "V",
            "scaling": {"kappa": _K1, "v": (ONE, ONE), "c": -(7 + 4 * S)},
            "epsilon": 1,
            "delta": (5 + S) / 2,
            "subst": _SIGMA1,
            "shat": {
                ("0", 2): 1,
                ("1", 7): 1,
                ("2", 12): 1,
                ("1", 6): 2,
                ("2", 11): 2,
                ("1", 5): 3,
                ("2", 10): 3,
                ("1", 4): 4,
                ("2", 9): 4,
                ("2", 8): 5,
                ("2", 7): 6,
            },
            "t_table": {
                ("0", 2): (11, (ONE, ZERO)),
                ("1", 7): (11, (ONE, ZERO)),
                ("2", 12): (11, (ONE, ZERO)),
                ("1", 6): (5, (-ONE, S - 1)),
                ("2", 11): (5, (-ONE, S - 1)),
                ("1", 5): (4, (S - 1, S - 2)),
                ("2", 10): (4, (S - 1, S - 2)),
                ("1", 4): (3, (-S * (S - 1), 2 * (S - 1))),
                ("2", 9): (3, (-S * (S - 1), 2 * (S - 1))),
                ("2", 8): (2, (S * (2 - S), -2 * (2 - S))),
                ("2", 7): (1, (2 * S - 4, 3 * S - 4)),
            },
            "witness": {
                "z": (
                    1 - (7 - 4 * S) * fr(2, 7),
                    1 - (7 - 4 * S) * ((S + 1) / 7),
                ),
                "cycle": [
                    (fr(2, 7), (S + 1) / 7),
                    ((3 * S - 5) / 7, (5 * S - 3) / 7),
                    ((S + 2) / 7, (S - 1) / 7),
                    ((S - 1) / 7, 3 * S / 7),
                ],
                "coords": "V",
            },
        }
    ],
}
