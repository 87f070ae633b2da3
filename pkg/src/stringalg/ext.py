"""Projective resolutions, Hom complexes and Ext^1 for A(n)-modules.

The indecomposable projective ``P_i`` sits at display position ``q = n - i``;
its basis at position ``c > q`` is the two alternating paths of length
``c - q`` (first letter ``a`` or ``b``), and at ``q`` the trivial path.
Elements of a free module ``P^(j) = sum P_{q_k}`` are dicts keyed by
``(k, first_letter, length)`` with ``first_letter = None`` for the trivial path.

Two independent routes to Ext^1 are provided: a minimal projective
resolution computed by linear algebra (plus the combinatorial one for band
up-and-down modules) and the cocycle complex on arrows and relations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .algebra import ComponentSpec, euler_form
from .graph import build_updown_graph, decompose_graph
from .linalg import DEFAULT_PRIME, PrimeField, nullspace, rank
from .modules import OTHER, ModuleSpec, Representation, band_count, build_module, updown_edges

Label = tuple  # (generator index, first letter or None, length)


def projective_dimension_vector(n: int, q: int) -> tuple[int, ...]:
    return tuple(0 if c < q else 1 if c == q else 2 for c in range(n + 1))


def free_basis(gens: Sequence[int], c: int) -> list[Label]:
    out = []
    for k, q in enumerate(gens):
        if q == c:
            out.append((k, None, 0))
        elif q < c:
            out += [(k, "a", c - q), (k, "b", c - q)]
    return out


def _last_letter(first, length):
    return first if length % 2 else OTHER[first]


def _apply_arrow(label: Label, letter: str) -> Label | None:
    k, first, length = label
    if length == 0:
        return (k, letter, 1)
    return None if _last_letter(first, length) == letter else (k, first, length + 1)


def _free_arrow(fld, gens, c, letter):
    src, dst = free_basis(gens, c), free_basis(gens, c + 1)
    index = {lab: i for i, lab in enumerate(dst)}
    out = fld.zeros(len(dst), len(src))
    for j, lab in enumerate(src):
        img = _apply_arrow(lab, letter)
        if img is not None:
            out[index[img], j] = fld.element(1)
    return out


def solve(fld, a: np.ndarray, y: np.ndarray) -> np.ndarray:
    """The unique ``x`` with ``a @ x = y`` for ``a`` of full column rank."""
    cols = a.shape[1]
    if cols == 0:
        return fld.zeros(0, y.shape[1])
    red, pivots = fld.rref(np.concatenate([a, y], axis=1))
    if pivots[:cols] != list(range(cols)) or any(p >= cols for p in pivots):
        raise ValueError("right-hand side is outside the column space")
    return red[:cols, cols:]


@dataclass
class ProjectiveResolution:
    """``... -> P^(1) -> P^(0) -> M``.

    ``terms[j]`` lists the display positions of the generators of ``P^(j)``;
    ``differentials[j][l]`` is the image of generator ``l`` of ``P^(j+1)`` in
    ``P^(j)`` as ``{label: coefficient}``; ``augmentation[k]`` is the vector of
    ``M`` hit by generator ``k`` of ``P^(0)``.
    """

    n: int
    terms: list
    differentials: list
    augmentation: list
    labels: list = field(default_factory=list)

    def summands(self, j: int) -> list[str]:
        return [f"P_{self.n - q}" for q in self.terms[j]] if j < len(self.terms) else []

    def dimension_vector(self, j: int) -> tuple[int, ...]:
        out = [0] * (self.n + 1)
        for q in (self.terms[j] if j < len(self.terms) else []):
            for c, d in enumerate(projective_dimension_vector(self.n, q)):
                out[c] += d
        return tuple(out)

    @property
    def length(self) -> int:
        return len([t for t in self.terms if t]) - 1


def _image_matrix(fld, rep: Representation, gens, vectors, c):
    """Matrix of ``P -> M`` at position ``c`` when generator ``k`` maps to ``vectors[k]``."""
    basis = free_basis(gens, c)
    out = fld.zeros(rep.beta[c], len(basis))
    for j, (k, first, length) in enumerate(basis):
        v = vectors[k].reshape(-1, 1)
        col = v if length == 0 else fld.matmul(rep.path_matrix(gens[k], first, length), v)
        out[:, j] = col[:, 0]
    return out


def _top(fld, rep: Representation):
    """Generators of ``rep``: standard vectors spanning a complement of the radical."""
    gens, vectors = [], []
    for c in range(rep.n + 1):
        d = rep.beta[c]
        if d == 0:
            continue
        if c > 0:
            rad = np.concatenate([rep.a[c - 1], rep.b[c - 1]], axis=1)
        else:
            rad = fld.zeros(d, 0)
        base = rank(fld, rad) if rad.size else 0
        current = rad
        for i in range(d):
            e = fld.zeros(d, 1)
            e[i, 0] = fld.element(1)
            trial = np.concatenate([current, e], axis=1)
            r = rank(fld, trial)
            if r > base:
                gens.append(c)
                vectors.append(e[:, 0])
                current, base = trial, r
    return gens, vectors


def _kernel(fld, rep: Representation, gens, vectors):
    """Kernel of ``P -> rep`` as a representation plus its inclusion matrices."""
    n = rep.n
    incl = []
    for c in range(n + 1):
        pi = _image_matrix(fld, rep, gens, vectors, c)
        incl.append(nullspace(fld, pi) if pi.shape[1] else fld.zeros(0, 0))
    beta = tuple(k.shape[1] for k in incl)
    mats = {}
    for letter in "ab":
        mats[letter] = []
        for c in range(n):
            fa = _free_arrow(fld, gens, c, letter)
            moved = fld.matmul(fa, incl[c]) if incl[c].size else fld.zeros(fa.shape[0], beta[c])
            mats[letter].append(solve(fld, incl[c + 1], moved) if beta[c + 1] else fld.zeros(0, beta[c]))
    return Representation(fld, beta, mats["a"], mats["b"]), incl


def minimal_resolution(rep: Representation, max_degree: int | None = None) -> ProjectiveResolution:
    """Minimal projective resolution computed by repeated tops and kernels."""
    fld = rep.field
    n = rep.n
    max_degree = n + 1 if max_degree is None else max_degree
    gens, vectors = _top(fld, rep)
    res = ProjectiveResolution(n, [gens], [], vectors)
    current = rep
    cur_gens, cur_vectors = gens, vectors
    for _ in range(max_degree):
        kernel, incl = _kernel(fld, current, cur_gens, cur_vectors)
        if kernel.is_zero():
            break
        k_gens, k_vectors = _top(fld, kernel)
        images = []
        for q, vec in zip(k_gens, k_vectors):
            coords = fld.matmul(incl[q], vec.reshape(-1, 1))[:, 0]
            basis = free_basis(cur_gens, q)
            images.append({basis[i]: coords[i] for i in range(len(basis)) if not fld.is_zero(coords[i])})
        res.terms.append(k_gens)
        res.differentials.append(images)
        current, cur_gens, cur_vectors = kernel, k_gens, k_vectors
    return res


# -- the combinatorial resolution of band up-and-down modules -------------------


def _graph_structure(c: ComponentSpec):
    g = build_updown_graph(c)
    nb = g.neighbours()
    return g, nb


def extremal_vertices(c: ComponentSpec):
    """(sources, sinks): vertices whose two edges both go right, resp. both go left."""
    g, nb = _graph_structure(c)
    order = []
    for comp in decompose_graph(g):
        # walk each cycle from its first vertex, leaving along the red edge
        start = comp.vertices[0]
        v, colour = start, "red"
        walk = [start]
        while True:
            v = nb[v].get(colour)
            if v is None or v == start:
                break
            walk.append(v)
            colour = "blue" if colour == "red" else "red"
        seen = set(walk)
        order += walk + [u for u in comp.vertices if u not in seen]
    sources = [v for v in order if len(nb[v]) == 2 and all(w[0] > v[0] for w in nb[v].values())]
    sinks = [v for v in order if len(nb[v]) == 2 and all(w[0] < v[0] for w in nb[v].values())]
    return sources, sinks


def _monotone_path(nb, start, colour):
    """Follow edges to the right starting with ``colour`` until the path turns back."""
    v, col, letters = start, colour, []
    while True:
        w = nb[v].get(col)
        if w is None or w[0] < v[0]:
            return v, letters
        letters.append(col)
        v, col = w, ("blue" if col == "red" else "red")


def band_resolution(spec: ModuleSpec, fld=None) -> ProjectiveResolution:
    """``0 -> P^(1) -> P^(0) -> M`` read off the up-and-down graph of a band component.

    ``P^(0)`` has one summand per source, ``P^(1)`` one per sink.  A sink
    receives an upper path (top-identity edges) and a lower one; the differential
    carries the upper path with coefficient +1 and the lower with -1, and a path
    through the marked edge of scalar ``lam`` is divided by ``lam`` so that the
    composite with ``P^(0) -> M`` vanishes.
    """
    fld = fld or PrimeField()
    c = spec.component
    if spec.kind != "updown" or c is None or c.kind != "band":
        raise ValueError("band_resolution needs an up-and-down module of a band component")
    g, nb = _graph_structure(c)
    edges, marked = updown_edges(c, spec.scalars)
    sources, sinks = extremal_vertices(c)
    src_index = {v: k for k, v in enumerate(sources)}
    images = [dict() for _ in sinks]
    sink_index = {v: k for k, v in enumerate(sinks)}
    for u in sources:
        for colour in ("red", "blue"):
            end, letters = _monotone_path(nb, u, colour)
            # top-identity edges are red at even transitions, blue at odd ones
            upper = (colour == "red") == (u[0] % 2 == 0)
            coeff = fld.element(1 if upper else -1)
            v = u
            for col in letters:
                w = nb[v][col]
                lam = marked.get(((v, w), "a" if col == "red" else "b"))
                if lam is not None:
                    coeff = fld.mul(coeff, fld.inv(fld.element(lam)))
                v = w
            label = (src_index[u], "a" if colour == "red" else "b", len(letters))
            images[sink_index[end]][label] = coeff
    vectors = []
    for (p, j) in sources:
        e = fld.zeros(c.beta[p], 1)[:, 0]
        e[j - 1] = fld.element(1)
        vectors.append(e)
    return ProjectiveResolution(
        c.n, [[p for p, _ in sources], [p for p, _ in sinks]], [images], vectors, [sources, sinks]
    )


def projective_resolution(spec: ModuleSpec, fld=None, max_degree: int | None = None) -> ProjectiveResolution:
    """Resolution of a module: combinatorial for band components, computed otherwise."""
    fld = fld or PrimeField()
    if spec.kind == "updown" and spec.component is not None and spec.component.kind == "band":
        return band_resolution(spec, fld)
    return minimal_resolution(build_module(spec, fld), max_degree)


def check_resolution(res: ProjectiveResolution, rep: Representation) -> bool:
    """Composites of consecutive maps vanish, including the augmentation."""
    fld = rep.field
    for j, images in enumerate(res.differentials):
        if j == 0:
            gens, vectors = res.terms[0], res.augmentation
            for q, img in zip(res.terms[1], images):
                total = fld.zeros(rep.beta[q], 1)
                for (k, first, length), coeff in img.items():
                    v = vectors[k].reshape(-1, 1)
                    if length:
                        v = fld.matmul(rep.path_matrix(gens[k], first, length), v)
                    total = (total + v * coeff) % fld.p if isinstance(fld, PrimeField) else total + v * coeff
                if any(not fld.is_zero(x) for x in total.flat):
                    return False
        else:
            prev = res.differentials[j - 1]
            for img in images:
                acc: dict = {}
                for (k, first, length), coeff in img.items():
                    for (k2, f2, l2), c2 in prev[k].items():
                        word = _compose(first, length, f2, l2)
                        if word is None:
                            continue
                        key = (k2, *word)
                        acc[key] = fld.element(acc.get(key, 0) + fld.mul(coeff, c2))
                if any(not fld.is_zero(x) for x in acc.values()):
                    return False
    return True


def _compose(first, length, f2, l2):
    """Label of (path of generator image) followed by (path inside P^(j+1)).

    The element ``first/length`` of ``P_{q_l}`` is applied to the image
    ``f2/l2`` of that generator: the result is ``f2/l2`` extended by the word.
    """
    if length == 0:
        return (f2, l2)
    if l2 == 0:
        return (first, length)
    if _last_letter(f2, l2) == first:
        return None
    return (f2, l2 + length)


def differential_matrix(res: ProjectiveResolution, j: int, c: int, fld) -> np.ndarray:
    """Matrix at position ``c`` of ``P^(j+1) -> P^(j)`` in the path bases."""
    src, dst = free_basis(res.terms[j + 1], c), free_basis(res.terms[j], c)
    index = {lab: i for i, lab in enumerate(dst)}
    out = fld.zeros(len(dst), len(src))
    for col, (l, first, length) in enumerate(src):
        for (k, f2, l2), coeff in res.differentials[j][l].items():
            word = _compose(first, length, f2, l2)
            if word is None:
                continue
            row = index[(k, *word)]
            out[row, col] = fld.element(out[row, col] + coeff)
    return out


# -- Hom complexes ---------------------------------------------------------------


def _delta(fld, res: ProjectiveResolution, j: int, target: Representation) -> np.ndarray:
    """Matrix of ``Hom(P^(j-1), N) -> Hom(P^(j), N)``."""
    src_gens = res.terms[j - 1]
    dst_gens = res.terms[j] if j < len(res.terms) else []
    col_off = np.cumsum([0] + [target.beta[q] for q in src_gens])
    row_off = np.cumsum([0] + [target.beta[q] for q in dst_gens])
    out = fld.zeros(int(row_off[-1]), int(col_off[-1]))
    for l, img in enumerate(res.differentials[j - 1] if j - 1 < len(res.differentials) else []):
        for (k, first, length), coeff in img.items():
            block = target.path_matrix(src_gens[k], first, length) if length else target.path_matrix(src_gens[k], "a", 0)
            block = (block * coeff) % fld.p if isinstance(fld, PrimeField) else block * coeff
            r0, c0 = int(row_off[l]), int(col_off[k])
            cur = out[r0 : r0 + block.shape[0], c0 : c0 + block.shape[1]]
            summed = cur + block
            out[r0 : r0 + block.shape[0], c0 : c0 + block.shape[1]] = summed % fld.p if isinstance(fld, PrimeField) else summed
    return out


@dataclass
class HomComplex:
    dims: list
    matrices: list

    def homology(self, fld) -> list[int]:
        ranks = [rank(fld, m) if m.size else 0 for m in self.matrices]
        out = []
        for j, d in enumerate(self.dims):
            incoming = ranks[j - 1] if j >= 1 else 0
            outgoing = ranks[j] if j < len(ranks) else 0
            out.append(d - outgoing - incoming)
        return out


def hom_complex(res: ProjectiveResolution, target: Representation, top_degree: int = 2) -> HomComplex:
    fld = target.field
    dims = [sum(target.beta[q] for q in (res.terms[j] if j < len(res.terms) else [])) for j in range(top_degree + 1)]
    mats = [_delta(fld, res, j, target) if j < len(res.terms) else fld.zeros(0, dims[j - 1]) for j in range(1, top_degree + 1)]
    return HomComplex(dims, mats)


def hom_ext_dims(m: ModuleSpec, n: ModuleSpec, fld=None) -> tuple[int, int]:
    """(dim Hom(M, N), dim Ext^1(M, N)) from a projective resolution of M."""
    fld = fld or PrimeField()
    target = build_module(n, fld)
    res = projective_resolution(m, fld, max_degree=2)
    h = hom_complex(res, target).homology(fld)
    return h[0], h[1]


def hom_ext_reps(source: Representation, target: Representation) -> tuple[int, int]:
    res = minimal_resolution(source, max_degree=2)
    h = hom_complex(res, target).homology(source.field)
    return h[0], h[1]


# -- the cocycle complex (independent check) ------------------------------------


def _kron(fld, a, b):
    out = np.kron(a, b)
    return out % fld.p if isinstance(fld, PrimeField) else out


def _eye(fld, d):
    out = fld.zeros(d, d)
    for i in range(d):
        out[i, i] = fld.element(1)
    return out


def cocycle_dims(m: Representation, n: Representation) -> tuple[int, int]:
    """(dim Hom, dim Ext^1) from ``C^0 -> C^1 -> C^2`` on vertices, arrows and relations.

    ``d0(phi)_x = phi_t M_x - N_x phi_s`` and
    ``d1(f)_{x x'} = f_{x'} M_x + N_{x'} f_x`` for each zero relation.
    Maps are vectorised column-major, so ``vec(A F B) = (B^T kron A) vec(F)``.
    """
    fld = m.field
    nn = m.n
    bm, bn = m.beta, n.beta
    c0 = [bn[p] * bm[p] for p in range(nn + 1)]
    arrows = [(x, p) for p in range(nn) for x in "ab"]
    c1 = [bn[p + 1] * bm[p] for _, p in arrows]
    rels = [(x, p) for p in range(nn - 1) for x in "ab"]
    c2 = [bn[p + 2] * bm[p] for _, p in rels]
    o0 = np.cumsum([0] + c0)
    o1 = np.cumsum([0] + c1)
    o2 = np.cumsum([0] + c2)
    d0 = fld.zeros(int(o1[-1]), int(o0[-1]))
    for i, (x, p) in enumerate(arrows):
        mx, nx = m.arrow(x, p), n.arrow(x, p)
        # phi_{p+1} M_x
        blk = _kron(fld, mx.T, _eye(fld, bn[p + 1]))
        d0[o1[i] : o1[i + 1], o0[p + 1] : o0[p + 2]] = blk
        blk = _kron(fld, _eye(fld, bm[p]), nx)
        d0[o1[i] : o1[i + 1], o0[p] : o0[p + 1]] = (-blk) % fld.p if isinstance(fld, PrimeField) else -blk
    d1 = fld.zeros(int(o2[-1]), int(o1[-1]))
    index = {a: i for i, a in enumerate(arrows)}
    for r, (x, p) in enumerate(rels):
        i, j = index[(x, p)], index[(x, p + 1)]
        d1[o2[r] : o2[r + 1], o1[j] : o1[j + 1]] = _kron(fld, m.arrow(x, p).T, _eye(fld, bn[p + 2]))
        d1[o2[r] : o2[r + 1], o1[i] : o1[i + 1]] = _kron(fld, _eye(fld, bm[p]), n.arrow(x, p + 1))
    r0 = rank(fld, d0) if d0.size else 0
    r1 = rank(fld, d1) if d1.size else 0
    return int(o0[-1]) - r0, int(o1[-1]) - r1 - r0


# -- rigidity -------------------------------------------------------------------


def _distinct_scalars(fld, rng, count, avoid=()):
    out, seen = [], set(avoid)
    while len(out) < count:
        x = fld.random_nonzero(rng)
        if x not in seen:
            seen.add(x)
            out.append(x)
    return out


def verify_rigidity(
    c: ComponentSpec, trials: int = 5, seed: int = 0, prime: int = DEFAULT_PRIME, scalars=None
) -> dict:
    """Check ``Ext^1(M, M') = 0`` for generic modules of a band or string component.

    Each trial draws pairwise distinct scalars for the bands of ``M`` and of
    ``M'``.  ``scalars`` forces a fixed assignment ``(for M, for M')`` instead,
    which is how non-generic collisions can be exhibited.
    """
    if c.kind not in ("band", "string"):
        raise ValueError("rigidity is checked for band and string components")
    fld = PrimeField(prime)
    k = band_count(c)
    table, failures = [], []
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        if scalars is None:
            drawn = _distinct_scalars(fld, rng, 2 * k)
            lam, mu = drawn[:k], drawn[k:]
        else:
            lam, mu = scalars
        m_spec, n_spec = ModuleSpec.updown(c, lam), ModuleSpec.updown(c, mu)
        hom, ext = hom_ext_dims(m_spec, n_spec, fld)
        euler = euler_form(c.beta, c.beta)
        row = {"trial": t, "hom": hom, "ext1": ext, "euler": euler}
        table.append(row)
        if ext != 0:
            collided = len(set(lam) | set(mu)) < len(lam) + len(mu)
            failures.append({**row, "reason": "non-generic scalar collision" if collided else "nonzero Ext^1"})
    return {
        "spec": {"beta": list(c.beta), "r": list(c.r), "s": list(c.s), "kind": c.kind},
        "trials": trials,
        "prime": prime,
        "passes": trials - len(failures),
        "failures": failures,
        "hom_ext_table": table,
    }


# -- the pairing graph on Hom-complex bases -------------------------------------


@dataclass
class ExtGraph:
    vertices: list
    edges: list  # (vertex, vertex, "upper" | "lower")
    components: list  # (kind, vertices, distinguished)


def ext_graph(spec: ModuleSpec) -> ExtGraph:
    """Graph on the bases of ``Hom(P^(0), M)`` and ``Hom(P^(1), M)``.

    A basis vector is ``(degree, extremal vertex, vertex of M)``.  Each path of
    the differential joins ``(0, u, x)`` to ``(1, w, y)`` whenever the same path
    leads from ``x`` to ``y`` in the up-and-down graph.  Components containing a
    diagonal vector ``(., u, u)`` are distinguished.
    """
    c = spec.component
    if spec.kind != "updown" or c is None:
        raise ValueError("ext_graph needs an up-and-down module")
    g, nb = _graph_structure(c)
    if c.kind != "band":
        raise ValueError("the pairing graph is built from the band resolution")
    fld = PrimeField()
    res = band_resolution(spec, fld)
    sources, sinks = res.labels
    verts = [(0, u, (u[0], j)) for u in sources for j in range(1, c.beta[u[0]] + 1)]
    verts += [(1, w, (w[0], j)) for w in sinks for j in range(1, c.beta[w[0]] + 1)]
    edges = []
    for l, img in enumerate(res.differentials[0]):
        w = sinks[l]
        for (k, first, length), coeff in img.items():
            u = sources[k]
            kind = "upper" if (first == "a") == (u[0] % 2 == 0) else "lower"
            for j in range(1, c.beta[u[0]] + 1):
                x = (u[0], j)
                colour = "red" if first == "a" else "blue"
                ok = True
                for _ in range(length):
                    y = nb[x].get(colour)
                    if y is None or y[0] != x[0] + 1:
                        ok = False
                        break
                    x, colour = y, ("blue" if colour == "red" else "red")
                if ok:
                    edges.append(((0, u, (u[0], j)), (1, w, x), kind))
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b, _ in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    groups: dict = {}
    for v in verts:
        groups.setdefault(find(v), []).append(v)
    comps = []
    for members in groups.values():
        mset = set(members)
        ne = sum(1 for a, _, _ in edges if a in mset)
        kind = "band" if ne == len(members) else "string" if ne == len(members) - 1 else "other"
        distinguished = any(v[1] == v[2] for v in members)
        comps.append((kind, sorted(members), distinguished))
    comps.sort(key=lambda t: t[1][0])
    return ExtGraph(verts, edges, comps)
