#!/usr/bin/env python3
"""Writes the bundled corpus under crates/core/corpus/."""
import itertools
import json
import os

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "crates", "core", "corpus")


def dump(kind, name, obj):
    path = os.path.join(ROOT, kind, name + ".json")
    with open(path, "w") as f:
        json.dump(obj, f, indent=None, separators=(",", ":"))
        f.write("\n")


def complex_json(counts, faces, note=None):
    out = {"dim": len(counts) - 1, "simplices": counts, "faces": {str(n): faces[n] for n in range(1, len(counts))}}
    if note:
        out["note"] = note
    return out


def from_simplicial(tops):
    """Delta-complex of an ordered simplicial complex given by its top simplices (vertex tuples)."""
    dim = len(tops[0]) - 1
    simplices = [set() for _ in range(dim + 1)]
    for t in tops:
        for n in range(dim + 1):
            for sub in itertools.combinations(t, n + 1):
                simplices[n].add(tuple(sub))
    ordered = [sorted(s) for s in simplices]
    index = [{s: i for i, s in enumerate(level)} for level in ordered]
    faces = [[]] + [
        [[index[n - 1][s[:i] + s[i + 1:]] for i in range(n + 1)] for s in ordered[n]] for n in range(1, dim + 1)
    ]
    return ordered, index, faces


def quotient(ordered, involution):
    """Orbits of a free, order-preserving vertex involution; returns counts, faces, orbit index per simplex."""
    dim = len(ordered) - 1
    orbit = []
    reps = []
    for n in range(dim + 1):
        seen = {}
        level_reps = []
        for s in ordered[n]:
            image = tuple(involution(v) for v in s)
            key = min(s, image)
            if key not in seen:
                seen[key] = len(level_reps)
                level_reps.append(key)
        orbit.append({s: seen[min(s, tuple(involution(v) for v in s))] for s in ordered[n]})
        reps.append(level_reps)
    faces = [[]] + [[[orbit[n - 1][r[:i] + r[i + 1:]] for i in range(n + 1)] for r in reps[n]] for n in range(1, dim + 1)]
    return [len(r) for r in reps], faces, orbit


def cross_polytope(k):
    """Boundary of the k-dimensional cross-polytope; vertex 2i+s is (-1)^s e_i."""
    return [tuple(2 * i + s[i] for i in range(k)) for s in itertools.product((0, 1), repeat=k)]


def complexes():
    dump("complexes", "point", complex_json([1], [[]]))
    dump("complexes", "interval", complex_json([2, 1], [[], [[1, 0]]]))
    dump("complexes", "circle3", complex_json([3, 3], [[], [[1, 0], [2, 0], [2, 1]]]))
    dump("complexes", "triangle", complex_json([3, 3, 1], [[], [[1, 0], [2, 0], [2, 1]], [[2, 1, 0]]]))
    dump(
        "complexes",
        "circle3_pair",
        complex_json([6, 6], [[], [[1, 0], [2, 0], [2, 1], [4, 3], [5, 3], [5, 4]]], "two disjoint copies of circle3"),
    )
    dump(
        "complexes",
        "wedge",
        complex_json([5, 6], [[], [[1, 0], [2, 0], [2, 1], [3, 0], [4, 0], [4, 3]]], "two 3-cycles sharing vertex 0"),
    )
    dump(
        "complexes",
        "torus",
        complex_json([1, 3, 2], [[], [[0, 0]] * 3, [[1, 2, 0], [0, 2, 1]]], "square with opposite sides a, b identified, diagonal c"),
    )
    dump(
        "complexes",
        "klein",
        complex_json([1, 3, 2], [[], [[0, 0]] * 3, [[2, 0, 1], [1, 2, 0]]], "square abab^-1 with diagonal c"),
    )
    dump(
        "complexes",
        "rp2_min",
        complex_json(
            [2, 3, 2],
            [[], [[1, 0], [1, 0], [1, 1]], [[2, 1, 0], [2, 0, 1]]],
            "edges a, b from vertex 0 to vertex 1 and a loop c at vertex 1; triangles (c, b, a), (c, a, b) by (d0, d1, d2)",
        ),
    )
    octa, octa_index, octa_faces = from_simplicial(cross_polytope(3))
    dump(
        "complexes",
        "octahedron",
        complex_json([len(l) for l in octa], octa_faces, "boundary of the octahedron; vertex 2i+s is (-1)^s e_i"),
    )
    counts, faces, orbit = quotient(octa, lambda v: v ^ 1)
    dump("complexes", "rp2_oct", complex_json(counts, faces, "octahedron modulo the antipodal map; vertex i is {+e_i, -e_i}"))
    cell, _, _ = from_simplicial(cross_polytope(4))
    counts, faces, _ = quotient(cell, lambda v: v ^ 1)
    dump(
        "complexes",
        "rp3",
        complex_json(
            counts,
            faces,
            "boundary of the 16-cell modulo the antipodal map (4 vertices, 12 edges, 16 triangles, 8 tetrahedra); "
            "not minimal, chosen because the quotient inherits a vertex order",
        ),
    )
    dump(
        "maps",
        "antipodal",
        {"source": "octahedron", "target": "octahedron", "vertex_map": [v ^ 1 for v in range(6)]},
    )
    images = [
        [{"dim": n, "simplex": orbit[n][s], "positions": list(range(n + 1))} for s in octa[n]] for n in range(len(octa))
    ]
    dump("maps", "covering", {"source": "octahedron", "target": "rp2_oct", "images": images})


def table(elements, mul):
    index = {e: i for i, e in enumerate(elements)}
    return [[index[mul(a, b)] for b in elements] for a in elements]


def groups():
    for n in (2, 3, 4):
        dump("groups", f"Z{n}", {"order": n, "mul": [[(a + b) % n for b in range(n)] for a in range(n)], "names": [str(a) for a in range(n)]})
    klein4 = [(a, b) for a in range(2) for b in range(2)]
    dump(
        "groups",
        "Z2xZ2",
        {
            "order": 4,
            "mul": table(klein4, lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)),
            "names": [f"({a},{b})" for a, b in klein4],
        },
    )
    # permutations of {1,2,3} as tuples of images; (a*b)(x) = a(b(x))
    perms = [(1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)]
    dump(
        "groups",
        "S3",
        {
            "order": 6,
            "mul": table(perms, lambda a, b: tuple(a[b[i] - 1] for i in range(3))),
            "names": ["e", "(12)", "(13)", "(23)", "(123)", "(132)"],
        },
    )
    # dihedral group of the square: r^i s^j, with s r s = r^-1
    d4 = [(i, j) for j in range(2) for i in range(4)]
    dump(
        "groups",
        "D4",
        {
            "order": 8,
            "mul": table(d4, lambda x, y: ((x[0] + (y[0] if x[1] == 0 else -y[0])) % 4, (x[1] + y[1]) % 2)),
            "names": ["e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"],
        },
    )
    # quaternions as (sign, unit) with units 1, i, j, k
    unit_mul = {
        ("1", u): (1, u) for u in "1ijk"
    }
    unit_mul.update({(u, "1"): (1, u) for u in "1ijk"})
    unit_mul.update({(u, u): (-1, "1") for u in "ijk"})
    unit_mul.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j")})
    unit_mul.update({("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    q8 = [(s, u) for u in "1ijk" for s in (1, -1)]

    def qmul(x, y):
        s, u = unit_mul[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    dump(
        "groups",
        "Q8",
        {"order": 8, "mul": table(q8, qmul), "names": [("" if s == 1 else "-") + u for s, u in q8]},
    )


if __name__ == "__main__":
    complexes()
    groups()
