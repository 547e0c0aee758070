#!/usr/bin/env python3
"""Generate data/hermann_actions.json.

Each catalog entry describes an isometric action on a rank-r symmetric space
from data/symmetric_spaces.json: a display label for the acting group, a
reference to the space, and the vertical/horizontal split of the positive
restricted roots.  Classical entries carry one flag pair per positive root in
canonical order (lex-positive roots sorted ascending); entries on spaces whose
restricted system has rank > 4 of exceptional type carry aggregate counts only.

The per-root order must match the library's positive_roots(): a root is
lex-positive when its first nonzero coordinate is positive, and positives are
sorted ascending lexicographically.  Run from anywhere; paths resolve relative
to the repository root (parent of this script's directory).
"""

import json
import os


# ---------------------------------------------------------------------------
# Root enumeration (mirrors the C++ builders; integer coordinates throughout).


def full_roots(kind, rank):
    """All roots of the given type as integer tuples."""
    roots = []

    def pair(v):
        roots.append(tuple(v))
        roots.append(tuple(-c for c in v))

    if kind == "A":
        dim = rank + 1
        for i in range(dim):
            for j in range(i + 1, dim):
                v = [0] * dim
                v[i], v[j] = 1, -1
                pair(v)
    elif kind in ("B", "C", "D", "BC"):
        dim = rank
        for i in range(dim):
            for j in range(i + 1, dim):
                for sj in (1, -1):
                    v = [0] * dim
                    v[i], v[j] = 1, sj
                    pair(v)
        if kind in ("B", "BC"):
            for i in range(dim):
                v = [0] * dim
                v[i] = 1
                pair(v)
        if kind in ("C", "BC"):
            for i in range(dim):
                v = [0] * dim
                v[i] = 2
                pair(v)
    elif kind == "G2":
        for i in range(3):
            for j in range(i + 1, 3):
                v = [0, 0, 0]
                v[i], v[j] = 1, -1
                pair(v)
        for i in range(3):
            v = [-1, -1, -1]
            v[i] = 2
            pair(v)
    else:
        raise ValueError("unsupported type for per-root data: " + kind)
    return roots


def lex_positive(v):
    for c in v:
        if c != 0:
            return c > 0
    return False


def positive_roots(kind, rank):
    pos = sorted(v for v in full_roots(kind, rank) if lex_positive(v))
    return pos


N_POS_FIXED = {"E6": 36, "E7": 63, "E8": 120, "F4": 24}


def n_positive(kind, rank):
    if kind in N_POS_FIXED:
        return N_POS_FIXED[kind]
    return len(positive_roots(kind, rank))


# ---------------------------------------------------------------------------
# Split patterns: map a positive root to (in_V, in_H).


def norm2(v):
    return sum(c * c for c in v)


def mixed_sign(v):
    return any(c > 0 for c in v) and any(c < 0 for c in v)


def split_flags(pattern, kind, root, arg=None):
    if pattern == "all_V":
        return True, False
    if pattern == "all_both":
        return True, True
    if pattern == "blocks_A":
        # A-type root e_i - e_j; vertical iff i, j fall in the same block
        # {0..arg-1} / {arg..dim-1}.
        i = next(k for k, c in enumerate(root) if c == 1)
        j = next(k for k, c in enumerate(root) if c == -1)
        same = (i < arg) == (j < arg)
        return (True, False) if same else (False, True)
    if pattern == "blocks_C":
        # C-type: the 2e_k roots and same-block e_i +- e_j are vertical,
        # cross-block pairs horizontal.
        support = [k for k, c in enumerate(root) if c != 0]
        if len(support) == 1:
            return True, False
        i, j = support
        same = (i < arg) == (j < arg)
        return (True, False) if same else (False, True)
    if pattern == "gl":
        # e_i - e_j vertical; e_i + e_j and 2e_i horizontal.
        return (True, False) if mixed_sign(root) else (False, True)
    if pattern == "C_vlong":
        # norm^2 2 roots in both; 2e_i vertical only.
        return (True, True) if norm2(root) == 2 else (True, False)
    if pattern == "BC_vlong":
        # e_i and e_i +- e_j in both; 2e_i vertical only.
        return (True, True) if norm2(root) <= 2 else (True, False)
    if pattern == "BC_c_short":
        # e_i +- e_j and 2e_i vertical; e_i horizontal.
        return (True, False) if norm2(root) >= 2 else (False, True)
    raise ValueError("unknown split pattern: " + pattern)


# ---------------------------------------------------------------------------
# Restricted type and rank per space (matches data/symmetric_spaces.json).


def restricted(space_label, params):
    p = params
    if space_label in ("AI", "AII", "II-A"):
        return "A", p["n"] - 1
    if space_label in ("AIII", "CII"):
        return ("BC", p["p"]) if p["p"] < p["q"] else ("C", p["p"])
    if space_label == "BDI":
        if p["p"] == 1:
            return "A", 1
        return "B", p["p"]
    if space_label == "BDI'":
        return "D", p["p"]
    if space_label == "DIII":
        n = p["n"]
        return ("BC", (n - 1) // 2) if n % 2 else ("C", n // 2)
    if space_label == "CI" or space_label == "II-C":
        return "C", p["n"]
    if space_label == "II-BD":
        n = p["n"]
        return ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)
    fixed = {
        "EI": ("E6", 6), "EII": ("F4", 4), "EIII": ("BC", 2), "EIV": ("A", 2),
        "EV": ("E7", 7), "EVI": ("F4", 4), "EVII": ("C", 3), "EVIII": ("E8", 8),
        "EIX": ("F4", 4), "FI": ("F4", 4), "FII": ("BC", 1), "G": ("G2", 2),
        "II-E6": ("E6", 6), "II-E7": ("E7", 7), "II-E8": ("E8", 8),
        "II-F4": ("F4", 4), "II-G2": ("G2", 2),
    }
    return fixed[space_label]


# ---------------------------------------------------------------------------
# Catalog rows.  (h_label, space_label, params, table, split descriptor,
# expected).  Split descriptor: ("per", pattern, arg) for a per-root split or
# ("agg",) for aggregate counts only.

ROWS = []


def row(h_label, space, params, table, split, expected):
    ROWS.append((h_label, space, params, table, split, expected))


def tri(n):
    return n * (n - 1) // 2


# --- Catalog group 2: classical spaces -----------------------------------

for n in (3, 4, 5):
    row("SO(%d)" % n, "AI", {"n": n}, 2, ("per", "all_V", None), tri(n))
for p, n in ((1, 3), (2, 4), (2, 5)):
    row("SO_0(%d,%d)" % (p, n - p), "AI", {"n": n}, 2,
        ("per", "blocks_A", p), tri(n))
for n in (3, 4):
    row("Sp(%d)" % n, "AII", {"n": n}, 2, ("per", "all_V", None), tri(n))
for n in (3, 4):
    row("SO*(%d)" % (2 * n), "AII", {"n": n}, 2,
        ("per", "all_both", None), n * (n - 1))
row("Sp(1,2)", "AII", {"n": 3}, 2, ("per", "blocks_A", 1), 3)

for p, q in ((1, 2), (2, 3), (2, 2), (3, 3)):
    exp = p * (p + 1) if p < q else p * p
    row("S(U(%d)xU(%d))" % (p, q), "AIII", {"p": p, "q": q}, 2,
        ("per", "all_V", None), exp)
for p, q in ((1, 2), (2, 3)):
    row("SO_0(%d,%d)" % (p, q), "AIII", {"p": p, "q": q}, 2,
        ("per", "BC_vlong", None), p * (2 * p + 1))
for p in (2, 3):
    row("SO*(%d)" % (2 * p), "AIII", {"p": p, "q": p}, 2,
        ("per", "C_vlong", None), p * (2 * p - 1))
row("SL(2,C).U(1)", "AIII", {"p": 2, "q": 2}, 2, ("per", "gl", None), 4)

for n in (3, 4):
    row("SU(%d)" % n, "II-A", {"n": n}, 2, ("per", "all_V", None), tri(n))
row("SO(3,C)", "II-A", {"n": 3}, 2, ("per", "all_both", None), 6)

for p, q in ((2, 3), (2, 4), (3, 4)):
    row("SO(%d)xSO(%d)" % (p, q), "BDI", {"p": p, "q": q}, 2,
        ("per", "all_V", None), p * p)
for p in (3, 4):
    row("SO(%d)xSO(%d)" % (p, p), "BDI'", {"p": p}, 2,
        ("per", "all_V", None), p * (p - 1))
for p in (3, 4):
    row("SO(%d,C)" % p, "BDI'", {"p": p}, 2, ("per", "gl", None), p * (p - 1))

row("U(4)", "DIII", {"n": 4}, 2, ("per", "all_V", None), 4)
row("U(5)", "DIII", {"n": 5}, 2, ("per", "all_V", None), 6)
row("SO(4,C)", "DIII", {"n": 4}, 2, ("per", "C_vlong", None), 6)
row("SO(5,C)", "DIII", {"n": 5}, 2, ("per", "BC_vlong", None), 10)
row("SU(2,2).U(1)", "DIII", {"n": 4}, 2, ("per", "gl", None), 4)
row("SU(1,4).U(1)", "DIII", {"n": 5}, 2, ("per", "BC_c_short", None), 6)
row("SU(2,3).U(1)", "DIII", {"n": 5}, 2, ("per", "BC_c_short", None), 6)

row("SO_0(1,4)", "II-BD", {"n": 5}, 2, ("per", "all_both", None), 8)
row("SO_0(2,3)", "II-BD", {"n": 5}, 2, ("per", "all_both", None), 8)
row("SO_0(2,4)", "II-BD", {"n": 6}, 2, ("per", "all_both", None), 12)

for n in (2, 3):
    row("U(%d)" % n, "CI", {"n": n}, 2, ("per", "all_V", None), n * n)
for n in (2, 3):
    row("SU(1,%d).U(1)" % (n - 1), "CI", {"n": n}, 2,
        ("per", "gl", None), n * n)

for p, q in ((1, 2), (2, 3), (2, 2), (3, 3)):
    exp = p * (p + 1) if p < q else p * p
    row("Sp(%d)xSp(%d)" % (p, q), "CII", {"p": p, "q": q}, 2,
        ("per", "all_V", None), exp)
row("SU(1,2).U(1)", "CII", {"p": 1, "q": 2}, 2, ("per", "all_both", None), 4)
row("SU(3,4).U(1)", "CII", {"p": 3, "q": 4}, 2, ("per", "BC_vlong", None), 21)
row("SU*(4).U(1)", "CII", {"p": 2, "q": 2}, 2, ("per", "all_both", None), 8)

row("SL(2,C).SO(2,C)", "II-C", {"n": 2}, 2, ("per", "all_both", None), 8)
row("Sp(2,R)", "II-C", {"n": 2}, 2, ("per", "gl", None), 4)
row("Sp(1,1)", "II-C", {"n": 2}, 2, ("per", "blocks_C", 1), 4)

# --- Catalog group 3: rank-6 and rank-7 exceptional spaces ---------------

for h in ("Sp(4)/{+-1}", "Sp(4,R)", "Sp(2,2)"):
    row(h, "EI", {}, 3, ("agg",), 36)

row("SU(6).SU(2)", "EII", {}, 3, ("agg",), 24)
row("Sp(1,3)", "EII", {}, 3, ("agg",), 36)
row("Sp(4,R)", "EII", {}, 3, ("agg",), 34)
row("SU(2,4).SU(2)", "EII", {}, 3, ("agg",), 30)
row("SU(3,3).SL(2,R)", "EII", {}, 3, ("agg",), 24)

row("Spin(10).U(1)", "EIII", {}, 3, ("per", "all_V", None), 6)
for h in ("Sp(2,2)", "SU(2,4).SU(2)", "SU(1,5).SL(2,R)"):
    row(h, "EIII", {}, 3, ("agg",), 10)
row("SO*(10).U(1)", "EIII", {}, 3, ("agg",), 7)
row("SO_0(2,8).U(1)", "EIII", {}, 3, ("agg",), 10)

row("F4", "EIV", {}, 3, ("per", "all_V", None), 3)
row("Sp(1,3)", "EIV", {}, 3, ("per", "all_both", None), 6)
row("F4^-20", "EIV", {}, 3, ("agg",), 3)

for h in ("E6", "E6^2", "E6^-14"):
    row(h, "II-E6", {}, 3, ("agg",), 36)
row("Sp(4,C)", "II-E6", {}, 3, ("agg",), 72)

for h in ("SU(8)/{+-1}", "SL(8,R)", "SU*(8)", "SU(4,4)"):
    row(h, "EV", {}, 3, ("agg",), 63)

row("SO'(12).SU(2)", "EVI", {}, 3, ("agg",), 24)
row("SU(4,4)", "EVI", {}, 3, ("agg",), 36)
row("SU(2,6)", "EVI", {}, 3, ("agg",), 36)
row("SO*(12).SL(2,R)", "EVI", {}, 3, ("agg",), 24)
row("SO_0(4,8).SU(2)", "EVI", {}, 3, ("agg",), 24)

row("E6.U(1)", "EVII", {}, 3, ("per", "all_V", None), 9)
row("SU*(8)", "EVII", {}, 3, ("per", "C_vlong", None), 15)
row("SU(2,6)", "EVII", {}, 3, ("per", "C_vlong", None), 15)
row("E6^-14.U(1)", "EVII", {}, 3, ("agg",), 9)

for h in ("E7", "E7^7", "E7^-5", "E7^-25"):
    row(h, "II-E7", {}, 3, ("agg",), 63)
row("SL(8,C)", "II-E7", {}, 3, ("agg",), 126)

# --- Catalog group 4: rank-8 exceptional, F4 and G2 spaces ---------------

for h in ("SO'(16)", "SO_0(8,8)"):
    row(h, "EVIII", {}, 4, ("agg",), 120)

row("E7.Sp(1)", "EIX", {}, 4, ("agg",), 24)
row("SO*(16)", "EIX", {}, 4, ("agg",), 36)
row("SO_0(4,12)", "EIX", {}, 4, ("agg",), 36)
row("E7^-5.Sp(1)", "EIX", {}, 4, ("agg",), 24)
row("E7^-25.SL(2,R)", "EIX", {}, 4, ("agg",), 24)

for h in ("E8", "E8^8", "E8^-24"):
    row(h, "II-E8", {}, 4, ("agg",), 120)
row("SO(16,C)", "II-E8", {}, 4, ("agg",), 240)

for h in ("Sp(3).Sp(1)", "Sp(1,2).Sp(1)", "Sp(3,R).SL(2,R)"):
    row(h, "FI", {}, 4, ("agg",), 24)

row("Spin(9)", "FII", {}, 4, ("per", "all_V", None), 2)
row("Sp(1,2).Sp(1)", "FII", {}, 4, ("agg",), 2)
row("SO_0(1,8)~", "FII", {}, 4, ("per", "all_both", None), 4)

for h in ("F4", "F4^4", "F4^-20"):
    row(h, "II-F4", {}, 4, ("agg",), 24)
row("Sp(3,C).SL(2,C)", "II-F4", {}, 4, ("agg",), 48)

row("SO(4)", "G", {}, 4, ("per", "all_V", None), 6)
row("SL(2,R)xSL(2,R)", "G", {}, 4, ("agg",), 6)
row("alpha(SO(4))", "G", {}, 4, ("agg",), 6)

row("G2", "II-G2", {}, 4, ("per", "all_V", None), 6)
row("G2^2", "II-G2", {}, 4, ("agg",), 6)
row("SL(2,C)xSL(2,C)", "II-G2", {}, 4, ("per", "all_both", None), 12)


# ---------------------------------------------------------------------------
# Emission.


def build_entry(h_label, space, params, table, split, expected):
    kind, rank = restricted(space, params)
    npos = n_positive(kind, rank)
    entry = {
        "h_label": h_label,
        "space": {"label": space, "params": params},
        "table": table,
        "expected_max_spec": expected,
    }
    if split[0] == "agg":
        both = expected - npos
        if both < 0 or both > npos:
            raise ValueError("inconsistent aggregate row: " + h_label)
        entry["split"] = {"count_V": npos, "count_H": both, "count_both": both}
    else:
        _, pattern, arg = split
        pos = positive_roots(kind, rank)
        per = []
        n_both = 0
        for idx, root_vec in enumerate(pos):
            in_v, in_h = split_flags(pattern, kind, root_vec, arg)
            n_both += in_v and in_h
            per.append({
                "root_index": idx,
                "root": [[c, 1] for c in root_vec],
                "in_V": in_v,
                "in_H": in_h,
            })
        if npos + n_both != expected:
            raise ValueError("split does not reproduce the expected count for "
                             + h_label + " on " + space + ": "
                             + str(npos + n_both) + " != " + str(expected))
        entry["split"] = {"per_root": per}
    return entry


def main():
    root_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out_path = os.path.join(root_dir, "data", "hermann_actions.json")
    actions = [build_entry(*r) for r in ROWS]
    tables = {t: sum(1 for a in actions if a["table"] == t) for t in (2, 3, 4)}
    doc = {
        "schema": {
            "actions": "array of isometric-action descriptors",
            "h_label": "display name of the acting group",
            "space": "reference into symmetric_spaces.json: label + exact params",
            "table": "source table id (2: classical, 3: rank 6-7, 4: rank 8/F4/G2)",
            "split": ("either per_root: [{root_index, root: [[num,den]...], in_V,"
                      " in_H}] over canonical ascending positives, or aggregate"
                      " counts {count_V, count_H, count_both}"),
            "expected_max_spec": "maximal number of distinct shape-operator "
                                 "eigenvalues on a principal orbit",
        },
        "actions": actions,
    }
    with open(out_path, "w") as f:
        json.dump(doc, f, indent=1, sort_keys=True)
        f.write("\n")
    print("wrote %s: %d actions (group 2: %d, 3: %d, 4: %d)" %
          (out_path, len(actions), tables[2], tables[3], tables[4]))


if __name__ == "__main__":
    main()
