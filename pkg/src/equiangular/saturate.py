"""Saturated equiangular-set search: enumerate positive-definite normalized
bases of a given rank and angle, collect every unit line at angle alpha with
the whole basis, and take a maximum clique in the compatibility graph.

A normalized basis of rank r is the root-rowed Gram I + alpha*A where vertex 0
(the root) has +alpha with everything and the rest is encoded by a graph on
r-1 vertices (edges = -alpha).  Distinct isomorphism classes of that graph are
enumerated by the layered generator in graphenum; classes whose Gram is not
positive definite are pruned hereditarily (principal submatrices of PD
matrices are PD).

All search arithmetic runs on the scaled Gram H = corner*G whose entries lie
in Z for rational angles (corner = denominator) or in Z[sqrt d] for quadratic
angles (corner clears denominators); Z[sqrt d] values are integer coefficient
pairs.  Each class carries det(H) and adj(H) incrementally: extending
[[H, b],[b^T, g]] gives det' = g*det - b^T adj b and an adjugate assembled
from adj and u = adj b in O(k^2) ring operations.  With b = bscale*eps for a
sign vector eps, the three recurring tests are exact ring comparisons:

    positive definite extension:  corner*det - bscale^2 * (eps^T adj eps) > 0
    unit candidate line:          bscale^2 * (eps^T adj eps) == corner*det
    compatible candidate pair:    bscale * (adj eps_i . eps_j) == +-det

Sign-vector scans walk eps in Gray-code order, updating adj@eps in O(r).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from equiangular import bounds
from equiangular.bounds import BoundReport
from equiangular.exactnum import QuadExt, Scalar, format_scalar
from equiangular.graphenum import ClassSet, find_isomorphism, graph_classes, refine_colors
from equiangular.linalg import SymMatrix
from equiangular.seidel import (
    EquiangularSet,
    Graph,
    SeidelMatrix,
    SwitchingOp,
    _clique_number,
    graph_to_graph6,
    max_clique,
    switching_normalize,
)

# -- Z[sqrt d] as integer pairs ------------------------------------------------


def _pmul(a, b, d):
    ax, ay = a
    bx, by = b
    return (ax * bx + ay * by * d, ax * by + ay * bx)


def _pdiv(a, b, d):
    """Exact division in Z[sqrt d]; asserts divisibility."""
    ax, ay = a
    bx, by = b
    nrm = bx * bx - by * by * d
    rx = ax * bx - ay * by * d
    ry = ay * bx - ax * by
    assert nrm != 0 and rx % nrm == 0 and ry % nrm == 0
    return (rx // nrm, ry // nrm)


def _psign(a, d) -> int:
    ax, ay = a
    sa = (ax > 0) - (ax < 0)
    sb = (ay > 0) - (ay < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs = ax * ax
    rhs = ay * ay * d
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


def _to_quadext(a, d) -> QuadExt:
    return QuadExt(Fraction(a[0]), Fraction(a[1]), d)


@dataclass(frozen=True)
class _Mode:
    """Scaling data; kind "int" for rational alpha, "pair" for Q(sqrt d)."""

    kind: str
    corner: object
    bscale: object
    bscale_sq: object
    d: int = 0


def _alpha_mode(alpha: Scalar) -> _Mode:
    if isinstance(alpha, QuadExt) and alpha.b != 0:
        c = lcm(alpha.a.denominator, alpha.b.denominator)
        bx, by = int(c * alpha.a), int(c * alpha.b)
        return _Mode(
            "pair",
            corner=(c, 0),
            bscale=(bx, by),
            bscale_sq=_pmul((bx, by), (bx, by), alpha.d),
            d=alpha.d,
        )
    f = Fraction(alpha.a) if isinstance(alpha, QuadExt) else Fraction(alpha)
    return _Mode("int", corner=f.denominator, bscale=f.numerator, bscale_sq=f.numerator**2)


# -- seed data -----------------------------------------------------------------


@dataclass
class BasisSeed:
    """A positive-definite normalized rank-r basis.

    det and adjugate refer to the scaled Gram H = corner*G; in pair mode their
    entries are integer coefficient pairs over sqrt(d).
    """

    r: int
    alpha: Scalar
    graph: Graph  # the r-1 non-root vertices
    mode: _Mode
    det: object
    adjugate: list
    nonroot_graph6: str = ""

    def __post_init__(self):
        if not self.nonroot_graph6:
            self.nonroot_graph6 = graph_to_graph6(self.graph)

    def gram(self) -> SymMatrix:
        a = self.alpha
        one = Fraction(1) if not isinstance(a, QuadExt) else Fraction(1) + 0 * a
        rows = []
        for i in range(self.r):
            row = []
            for j in range(self.r):
                if i == j:
                    row.append(one)
                elif 0 in (i, j):
                    row.append(a)
                else:
                    row.append(-a if self.graph.has_edge(i - 1, j - 1) else a)
            rows.append(row)
        return SymMatrix(rows)

    def seidel(self) -> SeidelMatrix:
        rows = []
        for i in range(self.r):
            row = []
            for j in range(self.r):
                if i == j:
                    row.append(0)
                elif 0 in (i, j):
                    row.append(1)
                else:
                    row.append(-1 if self.graph.has_edge(i - 1, j - 1) else 1)
            rows.append(row)
        return SeidelMatrix(tuple(tuple(r) for r in rows))

    def det_scalar(self) -> Scalar:
        if self.mode.kind == "pair":
            return _to_quadext(self.det, self.mode.d)
        return Fraction(self.det)


@dataclass(frozen=True)
class CandidateLine:
    sign_vector: tuple[int, ...]
    coords: tuple[Scalar, ...]


@dataclass
class CandidateSet:
    seed: BasisSeed
    lines: list[CandidateLine]
    _eps: list[tuple[int, ...]] = field(default_factory=list)
    _u: list[list] = field(default_factory=list)


@dataclass
class SaturationReport:
    seed: BasisSeed
    candidate_count: int
    clique_size: int
    total: int
    clique_witness: tuple[int, ...]
    realized: EquiangularSet | None = None


@dataclass
class EnumerationResult:
    r: int
    alpha: Scalar
    seeds: list[BasisSeed]
    classes_scanned: int | None  # all (r-1)-vertex classes, when counted
    pruned: bool


# -- incremental ladder ---------------------------------------------------------


def _root_record(mode: _Mode) -> dict:
    one = 1 if mode.kind == "int" else (1, 0)
    return {"masks": [], "det": mode.corner, "adj": [[one]]}


def _extend_record(mode: _Mode, rec: dict, nb: int, quad, u: list) -> dict:
    k = len(rec["masks"])
    n = k + 1
    masks = [m | ((nb >> i & 1) << k) for i, m in enumerate(rec["masks"])]
    masks.append(nb)
    det = rec["det"]
    adj = rec["adj"]
    if mode.kind == "int":
        det_new = mode.corner * det - mode.bscale_sq * quad
        su = [mode.bscale * x for x in u]
        top = [
            [(det_new * adj[i][j] + su[i] * su[j]) // det for j in range(n)]
            for i in range(n)
        ]
        new_adj = [top[i] + [-su[i]] for i in range(n)]
        new_adj.append([-x for x in su] + [det])
    else:
        d = mode.d
        det_new = _psub(_pmul(mode.corner, det, d), _pmul(mode.bscale_sq, quad, d))
        su = [_pmul(mode.bscale, x, d) for x in u]
        top = [
            [
                _pdiv(_padd(_pmul(det_new, adj[i][j], d), _pmul(su[i], su[j], d)), det, d)
                for j in range(n)
            ]
            for i in range(n)
        ]
        new_adj = [top[i] + [(-su[i][0], -su[i][1])] for i in range(n)]
        new_adj.append([(-x[0], -x[1]) for x in su] + [det])
    return {"masks": masks, "det": det_new, "adj": new_adj}


def _padd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _psub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _pd_neighbor_masks(mode: _Mode, rec: dict) -> list[tuple]:
    """(mask, quad, u) for every one-vertex extension keeping the Gram PD;
    Gray-code walk updates the quadratic form eps^T adj eps in O(n)."""
    adj = rec["adj"]
    n = len(adj)
    k = n - 1
    out = []
    if mode.kind == "int":
        thresh = mode.corner * rec["det"]
        bsq = mode.bscale_sq
        b = [1] * n
        f = [sum(row) for row in adj]  # adj @ all-ones
        quad = sum(f)
        if bsq * quad < thresh:
            out.append((0, quad, f[:]))
        nb = 0
        for g in range(1, 1 << k):
            nb_new = g ^ (g >> 1)
            i = (nb ^ nb_new).bit_length()  # flipped graph bit + 1
            nb = nb_new
            delta = -2 * b[i]
            quad += 2 * delta * f[i] + delta * delta * adj[i][i]
            ai = adj[i]
            for t in range(n):
                f[t] += ai[t] * delta
            b[i] += delta
            if bsq * quad < thresh:
                out.append((nb, quad, f[:]))
        return out
    d = mode.d
    thresh = _pmul(mode.corner, rec["det"], d)
    bsq = mode.bscale_sq
    b = [1] * n
    fx = [sum(adj[i][j][0] for j in range(n)) for i in range(n)]
    fy = [sum(adj[i][j][1] for j in range(n)) for i in range(n)]
    qx, qy = sum(fx), sum(fy)

    def accept(qx, qy):
        return _psign(_psub(thresh, _pmul(bsq, (qx, qy), d)), d) > 0

    if accept(qx, qy):
        out.append((0, (qx, qy), list(zip(fx, fy))))
    nb = 0
    for g in range(1, 1 << k):
        nb_new = g ^ (g >> 1)
        i = (nb ^ nb_new).bit_length()
        nb = nb_new
        delta = -2 * b[i]
        ax, ay = adj[i][i]
        qx += 2 * delta * fx[i] + delta * delta * ax
        qy += 2 * delta * fy[i] + delta * delta * ay
        ai = adj[i]
        for t in range(n):
            fx[t] += ai[t][0] * delta
            fy[t] += ai[t][1] * delta
        b[i] += delta
        if accept(qx, qy):
            out.append((nb, (qx, qy), list(zip(fx, fy))))
    return out


def _pd_ladder(mode: _Mode, graph_size: int) -> list[dict]:
    """PD basis class records whose non-root graphs have graph_size vertices."""
    level = [_root_record(mode)]
    for k in range(0, graph_size):
        classes = ClassSet(k + 1)
        nxt = []
        for rec in level:
            for nb, quad, u in _pd_neighbor_masks(mode, rec):
                masks = [m | ((nb >> i & 1) << k) for i, m in enumerate(rec["masks"])]
                masks.append(nb)
                col = refine_colors(k + 1, masks)
                if col[k] != 0:
                    continue  # representative rule, see graphenum
                if classes.add(masks, col):
                    nxt.append(_extend_record(mode, rec, nb, quad, u))
        level = nxt
    return level


def _quad_u(mode: _Mode, rec: dict, nb: int):
    """(quad, u) for attaching a vertex with neighbor mask nb, computed
    directly (used to rebuild single records without a full walk)."""
    adj = rec["adj"]
    n = len(adj)
    b = [1] * n
    for i in range(n - 1):
        if nb >> i & 1:
            b[i + 1] = -1
    if mode.kind == "int":
        u = [sum(adj[i][j] * b[j] for j in range(n)) for i in range(n)]
        quad = sum(b[i] * u[i] for i in range(n))
        return quad, u
    ux = [sum(adj[i][j][0] * b[j] for j in range(n)) for i in range(n)]
    uy = [sum(adj[i][j][1] * b[j] for j in range(n)) for i in range(n)]
    quad = (
        sum(b[i] * ux[i] for i in range(n)),
        sum(b[i] * uy[i] for i in range(n)),
    )
    return quad, list(zip(ux, uy))


def _record_for_masks(mode: _Mode, masks: Sequence[int]) -> dict:
    """Rebuild the (det, adjugate) record of a known-PD graph class."""
    rec = _root_record(mode)
    for k, row in enumerate(masks):
        nb = row & ((1 << k) - 1)
        quad, u = _quad_u(mode, rec, nb)
        rec = _extend_record(mode, rec, nb, quad, u)
    return rec


def enumerate_pd_bases(
    r: int, alpha: Scalar, count_scanned: bool | None = None
) -> EnumerationResult:
    """One seed per isomorphism class of (r-1)-vertex graphs whose normalized
    Gram is positive definite.  ``count_scanned`` additionally enumerates all
    (r-1)-vertex classes (defaults to True up to 7 vertices, i.e. rank 8)."""
    if r < 2:
        raise ValueError("rank >= 2 required")
    if count_scanned is None:
        count_scanned = r - 1 <= 7
    mode = _alpha_mode(alpha)
    records = _pd_ladder(mode, r - 1)
    seeds = [
        BasisSeed(
            r=r,
            alpha=alpha,
            graph=Graph(r - 1, tuple(rec["masks"])),
            mode=mode,
            det=rec["det"],
            adjugate=rec["adj"],
        )
        for rec in records
    ]
    scanned = len(graph_classes(r - 1)) if count_scanned else None
    return EnumerationResult(r, alpha, seeds, scanned, pruned=not count_scanned)


# -- candidate lines -------------------------------------------------------------


def _candidate_data(seed: BasisSeed):
    return _candidate_data_raw(seed.mode, seed.det, seed.adjugate, seed.r)


def _candidate_data_raw(mode: _Mode, det, adj, r: int):
    """(eps, u = adjugate @ eps) for every unit candidate line, walking the
    2^(r-1) sign vectors (root sign fixed +1) in Gray-code order."""
    out = []
    eps = [1] * r
    if mode.kind == "int":
        target = mode.corner * det
        bsq = mode.bscale_sq
        u = [sum(row) for row in adj]
        quad = sum(u)
        if bsq * quad == target:
            out.append((tuple(eps), u[:]))
        gray = 0
        for g in range(1, 1 << (r - 1)):
            gray_new = g ^ (g >> 1)
            i = (gray ^ gray_new).bit_length()  # flipped sign position (>=1)
            gray = gray_new
            delta = -2 * eps[i]
            quad += 2 * delta * u[i] + delta * delta * adj[i][i]
            ai = adj[i]
            for t in range(r):
                u[t] += ai[t] * delta
            eps[i] += delta
            if bsq * quad == target:
                out.append((tuple(eps), u[:]))
        return out
    d = mode.d
    target = _pmul(mode.corner, det, d)
    bsq = mode.bscale_sq
    ux = [sum(adj[i][j][0] for j in range(r)) for i in range(r)]
    uy = [sum(adj[i][j][1] for j in range(r)) for i in range(r)]
    qx, qy = sum(ux), sum(uy)
    if _pmul(bsq, (qx, qy), d) == target:
        out.append((tuple(eps), list(zip(ux, uy))))
    gray = 0
    for g in range(1, 1 << (r - 1)):
        gray_new = g ^ (g >> 1)
        i = (gray ^ gray_new).bit_length()
        gray = gray_new
        delta = -2 * eps[i]
        ax, ay = adj[i][i]
        qx += 2 * delta * ux[i] + delta * delta * ax
        qy += 2 * delta * uy[i] + delta * delta * ay
        ai = adj[i]
        for t in range(r):
            ux[t] += ai[t][0] * delta
            uy[t] += ai[t][1] * delta
        eps[i] += delta
        if _pmul(bsq, (qx, qy), d) == target:
            out.append((tuple(eps), list(zip(ux, uy))))
    return out


def candidates(seed: BasisSeed) -> CandidateSet:
    """All unit vectors whose inner products with every basis vector are
    +-alpha, with exact coordinates in the basis."""
    data = _candidate_data(seed)
    lines = []
    for eps, u in data:
        if seed.mode.kind == "int":
            coords = tuple(Fraction(seed.mode.bscale * x, seed.det) for x in u)
        else:
            d = seed.mode.d
            detq = _to_quadext(seed.det, d)
            bs = _to_quadext(seed.mode.bscale, d)
            coords = tuple(bs * _to_quadext(x, d) / detq for x in u)
        lines.append(CandidateLine(eps, coords))
    cs = CandidateSet(seed, lines)
    cs._eps = [eps for eps, _ in data]
    cs._u = [u for _, u in data]
    return cs


def _pair_sign(seed: BasisSeed, u_i, eps_j) -> int:
    mode = seed.mode
    if mode.kind == "int":
        dot = sum(u_i[t] * eps_j[t] for t in range(seed.r))
        val = mode.bscale * dot
        det = seed.det
    else:
        dx = dy = 0
        for t in range(seed.r):
            e = eps_j[t]
            dx += u_i[t][0] * e
            dy += u_i[t][1] * e
        val = _pmul(mode.bscale, (dx, dy), mode.d)
        det = seed.det
    if val == det:
        return 1
    if val == (-det if mode.kind == "int" else (-det[0], -det[1])):
        return -1
    raise ValueError("pair is not compatible")


def _compat_adj(seed: BasisSeed, data) -> list[int]:
    return _compat_adj_raw(seed.mode, seed.det, data, seed.r)


def _compat_adj_raw(mode: _Mode, det, data, r: int) -> list[int]:
    nc = len(data)
    adj = [0] * nc
    if mode.kind == "int":
        bscale = mode.bscale
        neg = -det
        for i in range(nc):
            ui = data[i][1]
            for j in range(i + 1, nc):
                ej = data[j][0]
                dot = 0
                for t in range(r):
                    dot += ui[t] * ej[t]
                val = bscale * dot
                if val == det or val == neg:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return adj
    d = mode.d
    neg = (-det[0], -det[1])
    for i in range(nc):
        ui = data[i][1]
        for j in range(i + 1, nc):
            ej = data[j][0]
            dx = dy = 0
            for t in range(r):
                e = ej[t]
                dx += ui[t][0] * e
                dy += ui[t][1] * e
            val = _pmul(mode.bscale, (dx, dy), d)
            if val == det or val == neg:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def compatibility_graph(cands: CandidateSet) -> Graph:
    """Edges join candidate lines whose mutual inner product is +-alpha."""
    nc = len(cands.lines)
    if nc == 0:
        return Graph(1, (0,))
    data = list(zip(cands._eps, cands._u))
    return Graph(nc, tuple(_compat_adj(cands.seed, data)))


def realize(seed: BasisSeed, cands: CandidateSet, chosen: Sequence[int]) -> EquiangularSet:
    """Equiangular set made of the basis plus the chosen candidate lines,
    rebuilt from scratch and re-certified (PSD, rank = r, entries +-alpha)."""
    r = seed.r
    base = seed.seidel().rows
    n = r + len(chosen)
    rows = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            rows[i][j] = base[i][j]
    for a, ci in enumerate(chosen):
        eps = cands._eps[ci]
        for i in range(r):
            rows[i][r + a] = rows[r + a][i] = eps[i]
        for b in range(a):
            cj = chosen[b]
            s = _pair_sign(seed, cands._u[ci], cands._eps[cj])
            rows[r + a][r + b] = rows[r + b][r + a] = s
    e = EquiangularSet(seed.alpha, SeidelMatrix(tuple(tuple(x) for x in rows)))
    if e.rank != r:
        raise AssertionError("realized set must have rank exactly r")
    return e


def saturation_report(seed: BasisSeed, want_witness: bool = True) -> SaturationReport:
    cands = candidates(seed)
    graph = compatibility_graph(cands)
    nc = len(cands.lines)
    if nc == 0:
        return SaturationReport(seed, 0, 0, seed.r, (), realize(seed, cands, ()))
    if want_witness:
        omega, witness = max_clique(graph)
    else:
        omega, witness = _clique_number(graph.adj, graph.n), ()
    realized = realize(seed, cands, witness) if want_witness else None
    return SaturationReport(seed, nc, omega, seed.r + omega, witness, realized)


def _total_from_record(mode: _Mode, rec: dict, r: int) -> int:
    data = _candidate_data_raw(mode, rec["det"], rec["adj"], r)
    nc = len(data)
    if nc == 0:
        return r
    adj = _compat_adj_raw(mode, rec["det"], data, r)
    return r + _clique_number(adj, nc)


def _total_worker(args) -> int:
    mode, det, adjrows, r = args
    return _total_from_record(mode, {"det": det, "adj": adjrows}, r)


def m_alpha(
    r: int,
    alpha: Scalar,
    jobs: int = 1,
    count_scanned: bool | None = None,
) -> BoundReport:
    """Maximum number of equiangular lines of rank exactly r and angle alpha,
    by saturation over every PD basis class.

    The final enumeration level is streamed: each new class is reduced to its
    saturation total at once and its search data discarded, so the memory
    footprint stays at the previous level plus the duplicate filter.
    """
    if r < 2:
        raise ValueError("rank >= 2 required")
    if count_scanned is None:
        count_scanned = r - 1 <= 7
    mode = _alpha_mode(alpha)
    parents = _pd_ladder(mode, r - 2)
    classes = ClassSet(r - 1)
    masks_list: list[tuple[int, ...]] = []
    totals: list[int] = []
    batch: list = []
    pool = None
    if jobs > 1:
        from multiprocessing import Pool

        pool = Pool(jobs)

    def flush():
        if not batch:
            return
        if pool is not None:
            totals.extend(pool.map(_total_worker, batch, chunksize=16))
        else:
            totals.extend(_total_worker(a) for a in batch)
        batch.clear()

    k = r - 2
    try:
        for rec in parents:
            for nb, quad, u in _pd_neighbor_masks(mode, rec):
                masks = [m | ((nb >> i & 1) << k) for i, m in enumerate(rec["masks"])]
                masks.append(nb)
                col = refine_colors(k + 1, masks)
                if col[k] != 0:
                    continue
                if classes.add(masks, col):
                    child = _extend_record(mode, rec, nb, quad, u)
                    masks_list.append(tuple(masks))
                    batch.append((mode, child["det"], child["adj"], r))
                    if len(batch) >= 1024:
                        flush()
        flush()
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    if not totals:
        raise ValueError("no positive definite basis exists for this rank and angle")
    best = max(totals)
    best_idx = [i for i, t in enumerate(totals) if t == best]
    reports = []
    for i in best_idx:
        rec = _record_for_masks(mode, masks_list[i])
        seed = BasisSeed(
            r=r,
            alpha=alpha,
            graph=Graph(r - 1, masks_list[i]),
            mode=mode,
            det=rec["det"],
            adjugate=rec["adj"],
        )
        reports.append(saturation_report(seed))
    for rep in reports:
        assert rep.total == best
        assert rep.realized is not None and rep.realized.rank == r
        _assert_saturated(rep)
    scanned = len(graph_classes(r - 1)) if count_scanned else None
    return BoundReport(
        name="m_alpha",
        value=best,
        inputs={"rank": r, "alpha": format_scalar(alpha if isinstance(alpha, QuadExt) else Fraction(alpha))},
        certificate={
            "seeds": len(totals),
            "classes_scanned": scanned,
            "pruned_enumeration": not count_scanned,
            "totals_histogram": _histogram(totals),
            "maximizing_seeds": [
                {
                    "graph6": rep.seed.nonroot_graph6,
                    "candidates": rep.candidate_count,
                    "clique": rep.clique_size,
                    "witness": list(rep.clique_witness),
                }
                for rep in reports
            ],
        },
    )


def _histogram(totals: Sequence[int]) -> dict:
    out: dict[int, int] = {}
    for t in totals:
        out[t] = out.get(t, 0) + 1
    return {str(k): v for k, v in sorted(out.items())}


def _assert_saturated(rep: SaturationReport) -> None:
    """No candidate outside the clique is compatible with every clique member."""
    cands = candidates(rep.seed)
    graph = compatibility_graph(cands)
    chosen = set(rep.clique_witness)
    for v in range(len(cands.lines)):
        if v in chosen:
            continue
        if all(graph.has_edge(v, w) for w in chosen):
            raise AssertionError("clique witness is not maximal")


# -- maximum size at prescribed rank ------------------------------------------


def m_star(r: int, jobs: int = 1) -> BoundReport:
    """M*(r): maximum equiangular set of rank exactly r, by combining the
    angle restriction for counts above 2r-2, the relative bound, and
    saturation searches at the surviving angles."""
    audit = []
    values = {}
    base = 2 * r - 2  # counts beyond this force the angle restriction
    fully_certified = r in (8, 9, 10)
    # odd-integer reciprocal angles 1/3, 1/5, ... until the relative bound
    # (valid for r < (2n+1)^2, decreasing in n) rules the rest out
    best_so_far = 0
    n = 1
    while True:
        alpha = Fraction(1, 2 * n + 1)
        if r * alpha * alpha < 1:
            rel = bounds.relative_bound(r, alpha)
            if rel <= max(base, best_so_far):
                audit.append(
                    {
                        "alpha": str(alpha),
                        "method": "relative_bound",
                        "bound": rel,
                        "excluded": True,
                        "note": f"relative bound {rel} cannot beat {max(base, best_so_far)}; "
                        "smaller angles are bounded by even less",
                    }
                )
                break
        rep = m_alpha(r, alpha, jobs=jobs, count_scanned=False)
        values[str(alpha)] = rep.value
        best_so_far = max(best_so_far, rep.value)
        audit.append({"alpha": str(alpha), "method": "saturation", "value": rep.value})
        n += 1
        if 2 * n + 1 > 2 * r + 1:  # alpha below 1/(2r+1): relative bound < r+1
            break
    # conference-matrix branch for odd ranks
    restriction = bounds.neumann_restriction(r, base + 1)
    if restriction.conference_angle is not None:
        alpha_c = restriction.conference_angle
        rep = m_alpha(r, alpha_c, jobs=jobs, count_scanned=False)
        values[format_scalar(alpha_c)] = rep.value
        best_so_far = max(best_so_far, rep.value)
        audit.append(
            {"alpha": format_scalar(alpha_c), "method": "saturation", "value": rep.value}
        )
    else:
        audit.append(
            {
                "alpha": f"1/sqrt({2 * r - 1})",
                "method": "neumann_excluded",
                "excluded": True,
                "note": "conference branch requires odd rank",
            }
        )
    report = BoundReport(
        name="m_star",
        value=best_so_far,
        inputs={"rank": r},
        certificate={"per_angle": values, "audit": audit},
    )
    if not fully_certified:
        report.notes.append(
            "outside ranks 8-10 the angle list is the generalized-Neumann one; "
            "angles with 1/alpha an odd integer or sqrt(2r-1) are covered, other "
            "irrational angles are only constrained for counts above 2r-2"
        )
    return report


# -- uniqueness of the 14-line rank-8 systems ---------------------------------


def switching_isomorphism(e1: EquiangularSet, e2: EquiangularSet) -> SwitchingOp | None:
    """An explicit switching operation carrying e1's Seidel matrix to e2's,
    found through root-normalized descendant graphs; None if inequivalent."""
    if e1.n != e2.n:
        raise ValueError("systems have different sizes")
    n = e1.n
    if n == 1:
        return SwitchingOp.identity(1)
    norm1 = switching_normalize(e1, 0)
    d1 = norm1.seidel.graph().induced(range(1, n))
    for w in range(n):
        norm2 = switching_normalize(e2, w)
        others = [v for v in range(n) if v != w]
        d2 = norm2.seidel.graph().induced(others)
        mapping = find_isomorphism(n - 1, d1.adj, d2.adj)
        if mapping is None:
            continue
        target_of = {0: w}
        for i in range(1, n):
            target_of[i] = others[mapping[i - 1]]
        slot_source = {target_of[src]: src for src in range(n)}
        perm = tuple(slot_source[i] for i in range(n))
        op = _solve_signs(e1.seidel, e2.seidel, perm)
        if op is not None:
            return op
    return None


def _solve_signs(
    a1: SeidelMatrix, a2: SeidelMatrix, perm: tuple[int, ...]
) -> SwitchingOp | None:
    n = a1.n
    signs = [0] * n
    signs[0] = 1
    for j in range(1, n):
        signs[j] = a2.rows[0][j] * a1.rows[perm[0]][perm[j]]
    for i in range(n):
        for j in range(n):
            if i != j and signs[i] * signs[j] * a1.rows[perm[i]][perm[j]] != a2.rows[i][j]:
                return None
    flips = frozenset(i for i in range(n) if signs[i] == -1)
    op = SwitchingOp(flips, perm)
    assert op.apply(a1) == a2
    return op


def uniqueness_check_8_third() -> dict:
    """The two 14-line saturation maxima at rank 8, angle 1/3 are switching
    isomorphic; returns the explicit witness operation."""
    rep = m_alpha(8, Fraction(1, 3))
    winners = rep.certificate["maximizing_seeds"]
    if len(winners) != 2 or rep.value != 14:
        raise AssertionError("expected exactly two 14-line maxima")
    enum = enumerate_pd_bases(8, Fraction(1, 3))
    by_g6 = {s.nonroot_graph6: s for s in enum.seeds}
    systems = []
    for w in winners:
        seed = by_g6[w["graph6"]]
        cs = candidates(seed)
        systems.append(realize(seed, cs, tuple(w["witness"])))
    op = switching_isomorphism(systems[0], systems[1])
    return {
        "equivalent": op is not None,
        "size": 14,
        "witness": None
        if op is None
        else {"flips": sorted(op.flips), "perm": list(op.perm)},
        "systems": [s.to_json() for s in systems],
    }
