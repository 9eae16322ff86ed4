#!/usr/bin/env python3
"""Builds mutations.json: single-entry +-1 mutations of catalog tables, each with
the set of relation families an independent re-implementation says it breaks.
"""
import importlib.util
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
spec = importlib.util.spec_from_file_location("golden", os.path.join(HERE, "..", "golden", "generate.py"))
golden = importlib.util.module_from_spec(spec)
spec.loader.exec_module(golden)

N = 2
FAMILIES = {
    "k3-elliptic:r=3": golden.elliptic(3),
    "k3-finite:g=3": golden.finite(3),
    "k3-typeII:r=3": golden.type_ii(3),
    "k3-typeIII:k=2": golden.type_iii(2),
}
TEMPLATES = {
    "loc1": (1, [("Y", 0, 0, 0), ("U", 0, 0, 0), ("Z:1", -1, -1, -1)]),
    "loc2": (1, [("Uc", 0, 0, 0), ("Y", 0, 0, 0), ("Z:1", 0, -1, 0)]),
    "mirror-cs": (2, [("Uc", 0, 0, 0), ("Y", 0, 0, 0), ("Y", 2, 0, 1), ("U", 2, 0, 1)]),
    "cs": (2, [("Total", 0, 1, 0), ("Xlim", 0, 0, 0), ("Xlim", 0, 0, -1), ("Supported", 2, 1, 0)]),
}


def cells(t):
    return {(e["k"], e["l"], e["q"], e["p"]): e["dim"] for e in t["entries"]}


def dim_of(space, m):
    if space.startswith("Z:"):
        return N - int(space[2:])
    if space in ("Total", "Supported"):
        return N + 1
    return N


def pointwise(space, m, i):
    k, l, q, p = i
    d = dim_of(space, m)
    if not 0 <= k <= 2 * d:
        return "degree-range"
    if not (0 <= p <= d and p <= q <= p + d):
        return "hodge-range"
    if space == "Y" or space.startswith("Z:"):
        if q != k:
            return "purity"
        b = m if space == "Y" else m - int(space[2:])
        return "perverse-vanishing" if (2 * l < k or l < k - b or l > k + b) else None
    if space == "U":
        return "perverse-vanishing" if (l < k or l > k + m) else None
    if space == "Uc":
        return "perverse-vanishing" if (l < k - m or l > k) else None
    if space == "Xlim":
        return "perverse-vanishing" if l != k else None
    if space == "Total":
        return "perverse-vanishing" if l not in (k, k + 1) else None
    return "perverse-vanishing" if l not in (k - 1, k) else None


def validate(space, m, t):
    out = set()
    for i, v in t.items():
        if v == 0:
            continue
        r = pointwise(space, m, i)
        if r:
            out.add(r)
        k, l, q, p = i
        if t.get((k, l, q, q - p), 0) != v:
            out.add("hodge-symmetry")
    return out


def hard_lefschetz(space, m, t):
    d = dim_of(space, m)
    for (k, l, q, p), v in t.items():
        s = d - l
        if t.get((2 * d + k - 2 * l, 2 * d - l, q + 2 * s, p + s), 0) != v:
            return {"hard-lefschetz"}
    return set()


def subvariety(m, y, zs):
    out = set()
    z = lambda r, i: zs.get(r, {}).get(i, 0)
    for (k, l, q, p), v in y.items():
        if v == 0:
            continue
        if l < k:
            for r in range(1, k - l + 1):
                w = z(r, (k - 2 * r, l - r, q - 2 * r, p - r))
                if (r < k - l and w != v) or (r == k - l and w < v):
                    out.add("subvariety")
        elif l > k:
            for r in range(1, l - k + 1):
                w = z(r, (k, l - r, q, p))
                if (r < l - k and w != v) or (r == l - k and w < v):
                    out.add("subvariety")
    for r, zt in zs.items():
        for (k, l, q, p), v in zt.items():
            if v == 0 or l == k:
                continue
            yi = (k + 2 * r, l + r, q + 2 * r, p + r) if l < k else (k, l + r, q, p)
            if y.get(yi, 0) == 0:
                out.add("subvariety")
    return out


def exact(chain):
    r = 0
    for d in chain:
        r = d - r
        if r < 0:
            return False
    return r == 0


def sequence_ok(period, terms, tabs):
    lanes = set()
    for name, ko, s, tw in terms:
        for (k, l, q, p), v in tabs[name].items():
            if v:
                lanes.add((l - s, q - 2 * tw, p - tw, (k - ko) % period))
    for l, q, p, res in lanes:
        chain = [tabs[name].get((k + ko, l + s, q + 2 * tw, p + tw), 0)
                 for k in range(res - 12, res + 14, period) for name, ko, s, tw in terms]
        if not exact(chain):
            return False
    return True


def detect(family, space, index, delta):
    tabs = {t["space"]: cells(t) for t in FAMILIES[family]}
    m = next((t.get("m") for t in FAMILIES[family] if "m" in t), None)
    tab = dict(tabs[space])
    tab[index] = tab.get(index, 0) + delta
    assert tab[index] >= 0
    tabs[space] = tab
    out = validate(space, m, tab)
    if space in ("Y", "U", "Uc") or space.startswith("Z:"):
        out |= hard_lefschetz(space, m, tab)
    if "Y" in tabs:
        zs = {1: tabs["Z:1"]}
        if family.startswith("k3-finite"):
            g = int(family.split("=")[1])
            zs[2] = {(0, 0, 0, 0): 2 * g - 2}
        out |= subvariety(m, tabs["Y"], zs)
    for name, (period, terms) in TEMPLATES.items():
        if all(t[0] in tabs for t in terms) and not sequence_ok(period, terms, tabs):
            out.add(f"exactness ({name})")
    return sorted(out)


MUTATIONS = [
    ("k3-elliptic:r=3", "Y", (2, 2, 2, 1), -1),
    ("k3-elliptic:r=3", "Y", (2, 2, 2, 0), +1),
    ("k3-elliptic:r=3", "Y", (2, 1, 2, 1), +1),
    ("k3-elliptic:r=3", "Y", (0, 1, 0, 0), -1),
    ("k3-elliptic:r=3", "Y", (2, 0, 2, 1), +1),
    ("k3-elliptic:r=3", "Y", (2, 2, 1, 0), +1),
    ("k3-elliptic:r=3", "Y", (2, 2, 2, 3), +1),
    ("k3-elliptic:r=3", "Z:1", (0, 0, 0, 0), +1),
    ("k3-elliptic:r=3", "Z:1", (1, 1, 1, 0), -1),
    ("k3-elliptic:r=3", "Uc", (1, 1, 0, 0), -1),
    ("k3-elliptic:r=3", "Uc", (3, 3, 2, 1), -1),
    ("k3-elliptic:r=3", "Uc", (2, 2, 1, 0), +1),
    ("k3-elliptic:r=3", "Uc", (2, 3, 2, 1), +1),
    ("k3-elliptic:r=3", "U", (2, 2, 3, 1), -1),
    ("k3-elliptic:r=3", "U", (1, 0, 0, 0), +1),
    ("k3-finite:g=3", "Y", (2, 2, 2, 1), -1),
    ("k3-finite:g=3", "Y", (0, 2, 0, 0), +1),
    ("k3-finite:g=3", "Y", (4, 2, 4, 2), -1),
    ("k3-finite:g=3", "Z:1", (1, 1, 1, 1), +1),
    ("k3-finite:g=3", "Z:1", (0, 1, 0, 0), -1),
    ("k3-finite:g=3", "Uc", (2, 2, 2, 1), +1),
    ("k3-finite:g=3", "Uc", (4, 2, 4, 2), -1),
    ("k3-typeII:r=3", "Total", (3, 3, 3, 1), -1),
    ("k3-typeII:r=3", "Total", (2, 2, 2, 1), +1),
    ("k3-typeII:r=3", "Total", (2, 3, 1, 1), +1),
    ("k3-typeII:r=3", "Xlim", (2, 2, 2, 1), -1),
    ("k3-typeII:r=3", "Xlim", (2, 3, 2, 1), +1),
    ("k3-typeII:r=3", "Supported", (4, 3, 5, 3), -1),
    ("k3-typeIII:k=2", "Total", (2, 2, 2, 1), +1),
    ("k3-typeIII:k=2", "Total", (4, 4, 4, 2), -1),
    ("k3-typeIII:k=2", "Total", (7, 3, 3, 1), +1),
    ("k3-typeIII:k=2", "Xlim", (2, 2, 0, 0), -1),
    ("k3-typeIII:k=2", "Xlim", (0, 0, 0, 0), +1),
]

if __name__ == "__main__":
    out = []
    for family, space, (k, l, q, p), delta in MUTATIONS:
        detected = detect(family, space, (k, l, q, p), delta)
        assert detected, (family, space, (k, l, q, p), delta)
        out.append({"family": family, "space": space,
                    "index": {"k": k, "l": l, "q": q, "p": p},
                    "delta": delta, "detected": detected})
    with open(os.path.join(HERE, "mutations.json"), "w") as f:
        json.dump(out, f, indent=1)
        f.write("\n")
    for o in out:
        print(o["family"], o["space"], tuple(o["index"].values()), o["delta"], o["detected"])
