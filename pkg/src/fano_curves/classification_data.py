"""Embedded classification tables.

``data/classification.json`` is the canonical JSON dump of ``DATA``; the
loader refuses to run if the two disagree.
"""

DATA = {
    "contraction_types": [
        {
            "etype": "E1",
            "center": "Curve",
            "exceptional_surface": "ruled surface over the blown-up smooth curve",
            "anticanonical_restriction": "degree 1 on every ruling fiber",
        },
        {
            "etype": "E2",
            "center": "SmoothPoint",
            "exceptional_surface": "P2",
            "anticanonical_restriction": "(P2, O(2))",
        },
        {
            "etype": "E3",
            "center": "ODP",
            "exceptional_surface": "smooth quadric surface",
            "anticanonical_restriction": "(Q, O(1,1))",
        },
        {
            "etype": "E4",
            "center": "cA2Point",
            "exceptional_surface": "quadric cone",
            "anticanonical_restriction": "(Q0, O(1))",
        },
        {
            "etype": "E5",
            "center": "QuotientPoint",
            "exceptional_surface": "P2, over the quotient of A3 by -1",
            "anticanonical_restriction": "(P2, O(1))",
        },
    ],
    "e5_threefolds": [
        {
            "index": 1,
            "description": "Bl of P3 along a smooth plane cubic",
            "picard_rank": 2,
            "e5_contraction_count": 1,
            "model": None,
        },
        {
            "index": 2,
            "description": "P(O + O(2)) over P2",
            "picard_rank": 2,
            "e5_contraction_count": 1,
            "model": "p_o_o2",
        },
        {
            "index": 3,
            "description": "Bl of P3 along a plane cubic and a point off its plane",
            "picard_rank": 3,
            "e5_contraction_count": 1,
            "model": None,
        },
        {
            "index": 4,
            "description": "Bl of P1 x P2 along a conic in a fiber of the first projection",
            "picard_rank": 3,
            "e5_contraction_count": 1,
            "model": None,
        },
        {
            "index": 5,
            "description": "Bl of Bl_pt P3 along a line in the exceptional divisor",
            "picard_rank": 3,
            "e5_contraction_count": 1,
            "model": None,
        },
        {
            "index": 6,
            "description": "Bl of P(O + O(2)) along a quartic curve in a minimal moving section",
            "picard_rank": 3,
            "e5_contraction_count": 2,
            "model": "two_e5",
        },
    ],
    "non_basepoint_free": [
        {"index": 1, "description": "V1, double cover of the Veronese cone W4 branched in a cubic section"},
        {"index": 2, "description": "Bl of V1 along an elliptic curve cut by two half-anticanonical members"},
        {"index": 3, "description": "P1 x S1 with S1 a degree 1 del Pezzo surface"},
    ],
    "model_references": [
        {"model": "quartic", "collection": "picard_rank_one", "index": None, "note": "no E5 contraction; threshold 5"},
        {"model": "p_o_o2", "collection": "e5_threefolds", "index": 2, "note": "one E5 divisor"},
        {"model": "two_e5", "collection": "e5_threefolds", "index": 6, "note": "two E5 divisors"},
    ],
    "singularity_rows": [
        {"table": "T1", "sing_type": "e3", "column": "a=1", "r": None, "a": 1, "n": 1,
         "witness": {"kind": "i", "values": [1]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e3", "column": "a=1", "r": None, "a": 1, "n": 3,
         "witness": {"kind": "i", "values": [2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e3", "column": "a>1", "r": None, "a": "***", "n": None,
         "witness": None, "intersection_value": None,
         "exclusion_note": "*** : a=3, n=1 is the leftover case, d(0,-1)=1 gives a curve of degree <= 1"},
        {"table": "T1", "sing_type": "e4", "column": "a=1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e4", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e5", "column": "a=1", "r": None, "a": 1, "n": 1,
         "witness": {"kind": "i", "values": [2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e5", "column": "a=1", "r": None, "a": 1, "n": 2,
         "witness": {"kind": "i", "values": [3]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e5", "column": "a>1", "r": None, "a": 2, "n": 1,
         "witness": {"kind": "i", "values": [1]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e6", "column": "a=1", "r": None, "a": 1, "n": None,
         "witness": {"kind": "i", "values": [3]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e6", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e8", "column": "a=1", "r": None, "a": 1, "n": 1,
         "witness": {"kind": "i", "values": [2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e8", "column": "a=1", "r": None, "a": 1, "n": 3,
         "witness": {"kind": "i", "values": [4]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e8", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e9", "column": "a=1", "r": None, "a": 1, "n": 1,
         "witness": {"kind": "i", "values": [3]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e9", "column": "a=1", "r": None, "a": 1, "n": 2,
         "witness": {"kind": "i", "values": [5]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e9", "column": "a>1", "r": None, "a": 2, "n": 1,
         "witness": {"kind": "i", "values": [3]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e10", "column": "a=1", "r": None, "a": 1, "n": None,
         "witness": {"kind": "i", "values": [5]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e10", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e11", "column": "a=1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e11", "column": "a>1", "r": None, "a": 2, "n": 2,
         "witness": {"kind": "i", "values": [4]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e12", "column": "a=1", "r": None, "a": 1, "n": None,
         "witness": {"kind": "i", "values": [4]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e12", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e14", "column": "a=1", "r": None, "a": 1, "n": None,
         "witness": {"kind": "i", "values": [3]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e14", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e15", "column": "a=1", "r": None, "a": 1, "n": None,
         "witness": {"kind": "i", "values": [4]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e15", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T1", "sing_type": "e16", "column": "a=1", "r": None, "a": 1, "n": None,
         "witness": {"kind": "i", "values": [6]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T1", "sing_type": "e16", "column": "a>1", "r": None, "a": "not possible", "n": None,
         "witness": None, "intersection_value": None, "exclusion_note": "not possible"},
        {"table": "T2", "sing_type": "e1", "column": None, "r": "r >= 4", "a": 1, "n": 1,
         "witness": {"kind": "i", "values": [1, 2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e1", "column": None, "r": "r >= 4", "a": 1, "n": 2,
         "witness": {"kind": "i", "values": [1, 2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e1", "column": None, "r": None, "a": 1, "n": 4,
         "witness": {"kind": "i", "values": [2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e1", "column": None, "r": "r >= 9", "a": 2, "n": 1,
         "witness": {"kind": "i", "values": [1]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e1", "column": None, "r": "r >= 5", "a": 2, "n": 2,
         "witness": {"kind": "i", "values": [1, 2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e1", "column": None, "r": "r >= 17", "a": 4, "n": 1,
         "witness": {"kind": "i", "values": [1]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e1", "column": None, "r": "r >= 9", "a": 4, "n": 2,
         "witness": {"kind": "i", "values": [1, 2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e2", "column": None, "r": None, "a": 1, "n": 1,
         "witness": {"kind": "i", "values": [1]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e2", "column": None, "r": None, "a": 1, "n": 2,
         "witness": {"kind": "i", "values": [2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e2", "column": None, "r": "r >= 4", "a": 2, "n": 1,
         "witness": {"kind": "i", "values": [1, 2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e2", "column": None, "r": "r >= 4", "a": 2, "n": 2,
         "witness": {"kind": "i", "values": [1, 2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e7", "column": None, "r": None, "a": 1, "n": 2,
         "witness": {"kind": "i", "values": [4]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T2", "sing_type": "e13", "column": None, "r": None, "a": 1, "n": 1,
         "witness": {"kind": "i", "values": [2]}, "intersection_value": None, "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 3, "a": 1, "n": 1,
         "witness": {"kind": "d", "i": -1, "j": 0, "value": 3}, "intersection_value": "4/3", "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 3, "a": 1, "n": 2,
         "witness": {"kind": "d", "i": -1, "j": 0, "value": 2}, "intersection_value": "2/3", "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 5, "a": 2, "n": 1,
         "witness": {"kind": "d", "i": -1, "j": 0, "value": 3}, "intersection_value": "8/5", "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 6, "a": 4, "n": 2,
         "witness": {"kind": "d", "i": -1, "j": 0, "value": 3}, "intersection_value": "4/3", "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 7, "a": 2, "n": 1,
         "witness": {"kind": "d", "i": 0, "j": -3, "value": 3}, "intersection_value": "12/7", "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 7, "a": 4, "n": 2,
         "witness": {"kind": "d", "i": 0, "j": -3, "value": 3}, "intersection_value": "12/7", "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 11, "a": 4, "n": 1,
         "witness": {"kind": "d", "i": 0, "j": -5, "value": 3}, "intersection_value": "20/11", "exclusion_note": None},
        {"table": "T3", "sing_type": "e1", "column": None, "r": 13, "a": 4, "n": 1,
         "witness": {"kind": "d", "i": 0, "j": -6, "value": 3}, "intersection_value": "24/13", "exclusion_note": None},
    ],
    "exclusions": [
        {"sing_type": "e2", "r": "r < 4", "a": 2, "n": 2, "status": "excluded",
         "note": "ruled out by Kawakita Lemma 3.3"},
        {"sing_type": "e2", "r": 3, "a": 2, "n": 1, "status": "handled",
         "note": "d(0,-3) = 4 and 3(a/n)E^3 = 2"},
        {"sing_type": "e1", "r": 3, "a": 2, "n": 2, "status": "excluded",
         "note": "ruled out by Kawakita Lemma 3.3"},
        {"sing_type": "e1", "r": 3, "a": 4, "n": 1, "status": "excluded",
         "note": "ruled out by Kawakita Lemma 3.3"},
        {"sing_type": "e1", "r": 3, "a": 4, "n": 2, "status": "excluded",
         "note": "ruled out by Kawakita Lemma 3.3"},
        {"sing_type": "e1", "r": 5, "a": 4, "n": 2, "status": "excluded",
         "note": "ruled out by Kawakita Lemma 3.3"},
        {"sing_type": "e1", "r": "r = 3 or 5 mod 8", "a": 4, "n": 1, "status": "constraint",
         "note": "r must be 3 or 5 mod 8 (Kawakita erratum)"},
        {"sing_type": "e1", "r": 3, "a": 2, "n": 1, "status": "excluded",
         "note": "ruled out by Yamamoto Theorem 2.3"},
        {"sing_type": "e1", "r": 5, "a": 4, "n": 1, "status": "excluded",
         "note": "ruled out by Yamamoto Theorems 2.1 and 2.2"},
        {"sing_type": "e3", "r": None, "a": 3, "n": 1, "status": "handled",
         "note": "d(0,-1) = 1 gives a curve of anticanonical degree <= 1"},
    ],
    "notes": [
        "T2 lists e13 while the infinite families are elsewhere named as e1, e2, e7, e11; rows are kept as printed.",
        "T1 and T2 record only the claimed i-values; d(-i,0) >= 2 and i(a/n)^2 E^3 <= 1 are not rechecked.",
    ],
}
