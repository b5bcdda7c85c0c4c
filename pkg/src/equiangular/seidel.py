"""Seidel matrices, Seidel graphs, switching, clique number, and base size.

Sign convention, fixed once for the whole package: the Gram matrix of a set
with angle alpha is G = I + alpha*A, and an edge of the Seidel graph joins two
vertices whose inner product is -alpha, i.e. A[i][j] = -1.  Equivalently
A = J - I - 2*Adj(S).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from equiangular import linalg
from equiangular.exactnum import (
    QuadExt,
    Scalar,
    format_scalar,
    parse_scalar,
    quad_sign,
    scalar_floor,
)
from equiangular.linalg import INDEFINITE, PsdCertificate, SymMatrix


def bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.adj) != self.n:
            raise ValueError("adjacency size mismatch")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError("edge beyond vertex range")
            if row >> v & 1:
                raise ValueError("loops not allowed")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError("adjacency not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.n) for u in bits(self.adj[v]) if u > v]

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ self.adj[v]) & ~(1 << v) for v in range(self.n)))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for i, v in enumerate(vs):
            for u in bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph(len(vs), tuple(adj))

    def components(self) -> list[tuple[int, ...]]:
        seen = 0
        out = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = [s]
            while frontier:
                v = frontier.pop()
                for u in bits(self.adj[v] & ~comp):
                    comp |= 1 << u
                    frontier.append(u)
            seen |= comp
            out.append(tuple(bits(comp)))
        return out

    def has_triangle(self) -> bool:
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if u > v and self.adj[v] & self.adj[u]:
                    return True
        return False


# -- graph6 interchange ------------------------------------------------------


def graph_to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph too large for graph6")
    bitstream = []
    for j in range(n):
        for i in range(j):
            bitstream.append(1 if g.has_edge(i, j) else 0)
    while len(bitstream) % 6:
        bitstream.append(0)
    body = []
    for k in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[k : k + 6]:
            val = val << 1 | b
        body.append(val + 63)
    return "".join(chr(c) for c in head + body)


def graph_from_graph6(text: str) -> Graph:
    data = [ord(c) - 63 for c in text.strip()]
    if any(v < 0 or v > 63 for v in data):
        raise ValueError("invalid graph6 characters")
    if data[0] == 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = data[0]
        data = data[1:]
    bitstream = []
    for v in data:
        for k in range(5, -1, -1):
            bitstream.append(v >> k & 1)
    adj = [0] * n
    pos = 0
    for j in range(n):
        for i in range(j):
            if bitstream[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


# -- maximum clique ----------------------------------------------------------


def _clique_number(adj: Sequence[int], n: int, stop_at: int | None = None) -> int:
    """Branch and bound with greedy coloring bound; optionally stops early once
    a clique of size stop_at is found."""
    if n == 0:
        return 0
    best = 0
    done = False

    def expand(cand: int, size: int):
        nonlocal best, done
        if done:
            return
        if cand == 0:
            if size > best:
                best = size
                if stop_at is not None and best >= stop_at:
                    done = True
            return
        order = []
        bounds = []
        mleft = cand
        color = 0
        while mleft:
            color += 1
            avail = mleft
            while avail:
                v = (avail & -avail).bit_length() - 1
                bit = 1 << v
                avail &= ~adj[v] & ~bit
                mleft &= ~bit
                order.append(v)
                bounds.append(color)
        prefixes = []
        prefix = 0
        for u in order:
            prefixes.append(prefix)
            prefix |= 1 << u
        for i in range(len(order) - 1, -1, -1):
            if done or size + bounds[i] <= best:
                return
            v = order[i]
            expand(cand & adj[v] & prefixes[i], size + 1)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def _exists_clique(adj: Sequence[int], cand: int, need: int) -> bool:
    """Decision: is there a clique of size need inside the candidate mask?"""
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    order = []
    bounds = []
    mleft = cand
    color = 0
    while mleft:
        color += 1
        avail = mleft
        while avail:
            v = (avail & -avail).bit_length() - 1
            bit = 1 << v
            avail &= ~adj[v] & ~bit
            mleft &= ~bit
            order.append(v)
            bounds.append(color)
    if color < need:
        return False
    prefixes = []
    prefix = 0
    for u in order:
        prefixes.append(prefix)
        prefix |= 1 << u
    for i in range(len(order) - 1, -1, -1):
        if bounds[i] < need:
            return False
        v = order[i]
        if _exists_clique(adj, cand & adj[v] & prefixes[i], need - 1):
            return True
        cand &= ~(1 << v)
    return False


def max_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Clique number plus the lexicographically smallest maximum clique."""
    omega = _clique_number(g.adj, g.n)
    witness: list[int] = []
    cand = (1 << g.n) - 1
    while len(witness) < omega:
        for v in bits(cand):
            rest = cand & g.adj[v]
            if _exists_clique(g.adj, rest, omega - len(witness) - 1):
                witness.append(v)
                cand = rest
                break
        else:  # pragma: no cover - omega guarantees progress
            raise AssertionError("witness extraction failed")
    for i, u in enumerate(witness):
        for v in witness[i + 1 :]:
            assert g.has_edge(u, v)
    return omega, tuple(witness)


# -- Seidel matrices and equiangular sets -------------------------------------


@dataclass(frozen=True)
class SeidelMatrix:
    """Integer symmetric matrix with zero diagonal and +-1 off-diagonal."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n < 1 or any(len(r) != n for r in self.rows):
            raise ValueError("square matrix required")
        for i in range(n):
            if self.rows[i][i] != 0:
                raise ValueError("diagonal must be zero")
            for j in range(i + 1, n):
                if self.rows[i][j] not in (1, -1) or self.rows[i][j] != self.rows[j][i]:
                    raise ValueError("off-diagonal entries must be symmetric +-1")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def from_graph(cls, g: Graph) -> "SeidelMatrix":
        # A = J - I - 2 Adj: edges carry -1
        rows = []
        for i in range(g.n):
            rows.append(
                tuple(
                    0 if i == j else (-1 if g.has_edge(i, j) else 1)
                    for j in range(g.n)
                )
            )
        return cls(tuple(rows))

    def graph(self) -> Graph:
        n = self.n
        adj = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if self.rows[i][j] == -1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        return Graph(n, tuple(adj))

    def char_poly(self):
        return linalg.char_poly(SymMatrix(self.rows))


@dataclass(frozen=True)
class SwitchingOp:
    """Sign flips on a vertex subset combined with a relabeling permutation;
    perm[i] gives the source vertex written to slot i."""

    flips: frozenset[int]
    perm: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "SwitchingOp":
        return cls(frozenset(), tuple(range(n)))

    @classmethod
    def flips_only(cls, flips: Iterable[int], n: int) -> "SwitchingOp":
        return cls(frozenset(flips), tuple(range(n)))

    def sign(self, v: int) -> int:
        return -1 if v in self.flips else 1

    def inverse(self) -> "SwitchingOp":
        n = len(self.perm)
        inv = [0] * n
        for i, s in enumerate(self.perm):
            inv[s] = i
        flips = frozenset(self.perm[f] for f in self.flips)
        return SwitchingOp(flips, tuple(inv))

    def apply(self, seidel: SeidelMatrix) -> SeidelMatrix:
        n = seidel.n
        if len(self.perm) != n:
            raise ValueError("permutation size mismatch")
        rows = []
        for i in range(n):
            si = self.sign(i)
            rows.append(
                tuple(
                    si * self.sign(j) * seidel.rows[self.perm[i]][self.perm[j]]
                    if i != j
                    else 0
                    for j in range(n)
                )
            )
        return SeidelMatrix(tuple(rows))


class EquiangularSet:
    """An equiangular line system: angle alpha in (0,1) plus a Seidel matrix.

    The Gram matrix I + alpha*A is certified positive semidefinite on
    construction; the certificate also fixes the exact rank.  A precomputed
    certificate may be supplied when the PSD property is inherited (switching,
    principal embeddings), which skips the elimination but keeps the invariant.
    """

    __slots__ = ("alpha", "seidel", "_psd")

    def __init__(
        self,
        alpha: Scalar,
        seidel: SeidelMatrix,
        *,
        psd_certificate: PsdCertificate | None = None,
    ):
        if not isinstance(alpha, QuadExt):
            alpha = Fraction(alpha)
        if quad_sign(alpha) <= 0 or quad_sign(alpha - 1) >= 0:
            raise ValueError("alpha must lie in (0,1)")
        self.alpha = alpha
        self.seidel = seidel
        if psd_certificate is None:
            psd_certificate = linalg.psd_check(self.gram())
            if psd_certificate.verdict == INDEFINITE:
                raise ValueError("Gram matrix I + alpha*A is not positive semidefinite")
        self._psd = psd_certificate

    @property
    def n(self) -> int:
        return self.seidel.n

    def gram(self) -> SymMatrix:
        a = self.alpha
        return SymMatrix(
            [
                [Fraction(1) + 0 * a if i == j else a * self.seidel.rows[i][j] for j in range(self.n)]
                for i in range(self.n)
            ]
        )

    @property
    def rank(self) -> int:
        return self._psd.rank

    @property
    def psd_certificate(self) -> PsdCertificate:
        return self._psd

    def to_json(self) -> str:
        return json.dumps(
            {
                "alpha": format_scalar(self.alpha),
                "seidel": [list(r) for r in self.seidel.rows],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "EquiangularSet":
        obj = json.loads(text)
        seidel = SeidelMatrix(tuple(tuple(r) for r in obj["seidel"]))
        return cls(parse_scalar(obj["alpha"]), seidel)

    def __repr__(self):
        return f"EquiangularSet(n={self.n}, alpha={format_scalar(self.alpha)}, rank={self.rank})"


def seidel_graph(e: EquiangularSet) -> Graph:
    """Graph with an edge wherever the inner product is -alpha."""
    return e.seidel.graph()


def switch(e: EquiangularSet, op: SwitchingOp) -> EquiangularSet:
    """Conjugate by the switching operation; spectrum, PSD verdict and rank are
    invariant, so the certificate carries over."""
    new = op.apply(e.seidel)
    cert = PsdCertificate(e._psd.verdict, e._psd.rank)
    return EquiangularSet(e.alpha, new, psd_certificate=cert)


def switching_normalize(e: EquiangularSet, root: int) -> EquiangularSet:
    """Flip vertices so every inner product with the root is +alpha; idempotent."""
    flips = frozenset(
        v for v in range(e.n) if v != root and e.seidel.rows[root][v] == -1
    )
    return switch(e, SwitchingOp.flips_only(flips, e.n))


def base_size_cap(alpha: Scalar) -> int:
    """The bound K <= 1/alpha + 1."""
    inv = 1 / alpha if isinstance(alpha, QuadExt) else Fraction(1) / Fraction(alpha)
    return scalar_floor(inv) + 1


def base_size(e: EquiangularSet) -> tuple[int, tuple[int, ...], SwitchingOp]:
    """Maximum K with a K-subset switchable to Gram (1+alpha)I - alphaJ.

    For each root vertex, flips make the root Seidel-adjacent to everything;
    bases through the root then correspond exactly to cliques through the root
    in the flipped graph, so K = 1 + max clique among the rest.  Scanning all
    roots covers every base; the search stops early at the 1/alpha + 1 cap.
    """
    n = e.n
    if n < 2:
        raise ValueError("base size needs at least two vectors")
    cap = base_size_cap(e.alpha)
    best = 0
    best_base: tuple[int, ...] = ()
    best_op = SwitchingOp.identity(n)
    rows = e.seidel.rows
    for root in range(n):
        flips = frozenset(v for v in range(n) if v != root and rows[root][v] == 1)
        others = [v for v in range(n) if v != root]
        adj = [0] * (n - 1)
        for x in range(n - 1):
            i = others[x]
            si = -1 if i in flips else 1
            for y in range(x + 1, n - 1):
                j = others[y]
                s = si * (-1 if j in flips else 1) * rows[i][j]
                if s == -1:
                    adj[x] |= 1 << y
                    adj[y] |= 1 << x
        omega = _clique_number(adj, n - 1, stop_at=cap - 1)
        if 1 + omega > best:
            best = 1 + omega
            witness: list[int] = []
            cand = (1 << (n - 1)) - 1
            while len(witness) < omega:
                for v in bits(cand):
                    rest = cand & adj[v]
                    if _exists_clique(adj, rest, omega - len(witness) - 1):
                        witness.append(v)
                        cand = rest
                        break
            best_base = tuple(sorted([root] + [others[x] for x in witness]))
            best_op = SwitchingOp.flips_only(flips, n)
        if best >= cap:
            break
    assert best >= 2
    # check the witness: the base is a clique in the switched Seidel graph
    switched = best_op.apply(e.seidel)
    for i, u in enumerate(best_base):
        for v in best_base[i + 1 :]:
            assert switched.rows[u][v] == -1
    return best, best_base, best_op
