"""Printed group-law tables for Gamma_2, Gamma_3 and Gamma_4.

Transcribed term for term (``a<i>`` is the degree-i coefficient of the
first argument, ``b<i>`` of the second).  They are hypotheses: the
certification in :mod:`jenningslab.gamma.certify` compares each entry with
the lift-compose-reduce oracle and itemizes every mismatch.  A degree
missing from a table stands for the coefficient 0.

Two entries needed a reading decision: the x^5 commutator entry for k = 2
has an unbalanced parenthesis (closed at the end), and the k = 4 inverse
uses ``b4`` although only one argument exists (kept as printed).
"""
from __future__ import annotations

PRINTED_TABLES: dict[int, dict[str, dict[int, str]]] = {
    2: {
        "compose": {
            2: "a2 + b2",
            3: "a3 + b3 + 2*a2*b2",
            4: "a4 + b4 + 3*a3*b2 + 2*a2*b3 + a2*b2**2",
            5: "a5 + b5 + 4*a4*b2 + 3*a3*b3 + 2*a2*b4 + 3*a3*b2**2 + 2*a2*b2*b3",
            7: "a7 + b7 + a5*b3 + a3*b3 + a3*b5 + a3*b2*b3",
        },
        "inverse": {
            2: "-a2",
            3: "-a3 + 2*a2**2",
            4: "-a4 + 5*a3*a2 - 5*a2**3",
            5: "-a5 + 6*a4*a2 + 14*a2**4 + 3*a3**2 - 21*a3*a2**2",
            7: "a7",
        },
        "commutator": {
            4: "a2*b2*(b2 - a2) + (a3*b2 - a2*b3)",
            5: "2*a2*b2*(2*(a2**2 - b2**2) + 3*(b3 - a3)) + 2*(a4*b2 - a2*b4)"
               " - (a3*b2**2 - b3*a2**2)",
            7: "a3*b2 - a2*b3",
        },
    },
    3: {
        "compose": {
            3: "a3 + b4",
            4: "a4 + b4",
            5: "a5 + b5 + 3*a3*b3",
            6: "a6 + b6 + 4*a4*b3 + 3*a3*b4",
            7: "a7 + b7 + a5*b3 + a3*b3 + a3*b5",
            9: "a9 + b9 + a7*b3 + a5*b5 + a3*b7 + a3*b3 + a3*b4",
        },
        "inverse": {
            3: "-a3",
            4: "-a4",
            5: "-a5 + 3*a3**2",
            6: "-a6 + 4*a4*a3 + 3*a3*a4",
            7: "a7",
            9: "a9 + a3 + a5 + a3*a4 + a3*a5",
        },
        "commutator": {
            6: "a4*b3 - b4*a3",
            9: "a4*b3 - b4*a3",
        },
    },
    4: {
        "compose": {
            4: "a4 + b4",
            5: "a5 + b5",
            6: "a6 + b6",
            7: "a7 + b7 + 4*a4*b4",
            8: "a8 + b8 + 5*a5*b4 + 4*a4*b5",
            9: "a9 + b9 + 6*a6*b4 + 5*a5*b5 + 4*a4*b6",
            10: "a10 + b10 + 7*a7*b4 + 6*a6*b5 + 5*a5*b6 + 4*a4*b7 + 6*a4*b4**2",
            11: "a11 + b11 + 8*a8*b4 + 7*a7*b5 + 6*a6*b6 + 5*a5*b7 + 4*a4*b8"
                " + 10*a5*b4**2 + 12*a4*b4*b5",
            13: "a13 + b13 + a9*b5 + a7*b7 + a5*b9 + a7*b4",
            15: "a15 + b15 + a11*b5 + a9*b7 + a7*b9 + a5*b11 + a7*b5",
        },
        "inverse": {
            4: "-a4",
            5: "-a5",
            6: "-a6",
            7: "-a7 + 4*a4**2",
            8: "-a8 + 9*a5*a4",
            9: "-a9 + 10*a6*a4 + 5*a5**2",
            10: "-a10 + 11*a7*a4 + 11*a6*a5 - 22*a4**3",
            11: "a11 + 12*a8*a4 + 12*a7*a5 + 6*a6**2 - 78*a5*b4**2",
            13: "a13 + a7 + a5 + a7*b4",
            15: "a15",
        },
        "commutator": {
            8: "a5*b4 - b5*a4",
            9: "2*(a6*b4 - b6*a4)",
            10: "3*(a7*b4 - b7*a4) + (a6*b5 - b6*a5) + 6*a4*b4*(b4 - a4)",
            11: "4*(a8*b4 - b8*a4) + 2*(a7*b5 - b7*a5) + 10*(a5*b4**2 - b5*a4**2)"
                " + 12*a4*b4*(b5 - a5)",
            13: "a7*b4 - b7*a4",
            15: "a7*b5 - b7*a5",
        },
    },
}

# Torsion subgroups of H_1(J_k(Z)) as printed, by invariant factors.
PRINTED_TORSION: dict[int, tuple[int, ...]] = {2: (2, 2), 3: (2, 2), 4: (2, 4)}
