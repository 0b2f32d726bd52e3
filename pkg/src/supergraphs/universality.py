"""Prime-cycle embeddings into symmetric groups.

Any graph can be realized inside compressed conjugacy supergraphs: represent
the n vertices by the conjugacy classes of p_i-cycles in a symmetric group of
degree N. When p_i + p_j <= N disjoint commuting representatives exist; the
one pair with p_i + p_j > N only has intersecting representatives, which
generate alternating groups, cutting exactly one edge. Intersecting the
per-nonedge graphs recovers the target; the strong-product identity for
compressed graphs of direct products justifies combining factors.

Scans are exhaustive over one conjugacy class with the other side pinned to a
canonical cycle (adjacency is conjugation-invariant). Non-solvability at
degrees past closure reach is certified by stabilizer-chain orders.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import perms
from .constructions import build_compressed
from .graphs import Graph, intersection, strong_product
from .groups import (
    FiniteGroup,
    SizeCapError,
    closure_set,
    is_nilpotent_gens,
    is_solvable_gens,
    product,
)

DEGREE_CAP = 13
CLOSURE_DEGREE_CAP = 9
FALLBACK_ORDER_CAP = 10**6

EMBED_KINDS = ("commuting", "nilpotent", "solvable")
SCAN_KINDS = EMBED_KINDS + ("enhanced",)


def primes_first(n: int) -> list[int]:
    """The first n primes in order."""
    if n < 1:
        raise ValueError("need n >= 1")
    found: list[int] = []
    candidate = 2
    while len(found) < n:
        if all(candidate % p for p in found):
            found.append(candidate)
        candidate += 1
    return found


# --- pair classification caches ---

_centralizer_cache: dict[tuple[int, int], list[tuple[int, ...]]] = {}
_pair_cache: dict[tuple, tuple[bool, bool]] = {}
_order_cache: dict[tuple, int] = {}
_members_flags_cache: dict[frozenset, tuple[bool, bool]] = {}


def _cycle_centralizer(degree: int, length: int) -> list[tuple[int, ...]]:
    """Centralizer of the canonical length-cycle in the symmetric group:
    powers of the cycle times arbitrary permutations of the fixed points."""
    key = (degree, length)
    cached = _centralizer_cache.get(key)
    if cached is not None:
        return cached
    out = []
    rest = list(range(length, degree))
    for k in range(length):
        head = [(i + k) % length for i in range(length)]
        for tail in itertools.permutations(rest):
            out.append(tuple(head) + tail)
    _centralizer_cache[key] = out
    return out


def _canonical_conjugate(y: tuple[int, ...], centralizer: list[tuple[int, ...]]) -> tuple[int, ...]:
    return min(perms.conjugate(y, c) for c in centralizer)


def _closure_flags(degree: int, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[bool, bool]:
    """(nilpotent, solvable) for <x, y> by full closure and series."""
    members = frozenset(closure_set(perms.compose, perms.identity_perm(degree), (x, y)))
    cached = _members_flags_cache.get(members)
    if cached is None:
        ident = perms.identity_perm(degree)
        solvable = is_solvable_gens(perms.compose, perms.invert, ident, (x, y))
        nilpotent = solvable and is_nilpotent_gens(
            perms.compose, perms.invert, ident, (x, y)
        )
        cached = (nilpotent, solvable)
        _members_flags_cache[members] = cached
    return cached


def _certified_flags(degree: int, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[bool, bool]:
    """(nilpotent, solvable) for a non-commuting pair at degrees where full
    closure is infeasible.

    The order of <x, y> comes from a stabilizer chain. If it equals s!/2 or s!
    on a support of size s >= 5 the group is the alternating or symmetric
    group of its support, hence non-solvable. Small orders fall back to
    closure; anything else is a loud failure, never a silent pass.
    """
    supp = sorted(perms.support(x) | perms.support(y))
    s = len(supp)
    cent = _cycle_centralizer(degree, len(perms.support(x)))
    key = (degree, x, _canonical_conjugate(y, cent))
    order = _order_cache.get(key)
    if order is None:
        order = perms.perm_group_order(degree, [x, key[2]])
        _order_cache[key] = order
    if s >= 5 and order in (math.factorial(s) // 2, math.factorial(s)):
        return (False, False)
    if order <= FALLBACK_ORDER_CAP:
        return _closure_flags(degree, x, y)
    raise RuntimeError(
        f"cannot certify pair with order {order} on support {s}; "
        "closure fallback is out of reach"
    )


def _pair_flags(degree: int, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[bool, bool]:
    """(nilpotent, solvable) for a non-commuting candidate pair."""
    key = (degree, x, y)
    cached = _pair_cache.get(key)
    if cached is None:
        if degree <= CLOSURE_DEGREE_CAP:
            cached = _closure_flags(degree, x, y)
        else:
            cached = _certified_flags(degree, x, y)
        _pair_cache[key] = cached
    return cached


def _cyclic_pair(degree: int, x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    """Whether two commuting permutations generate a cyclic group."""
    members = closure_set(perms.compose, perms.identity_perm(degree), (x, y))
    size = len(members)
    return any(perms.perm_order(p) == size for p in members)


@lru_cache(maxsize=None)
def class_adjacency(degree: int, p: int, q: int, kind: str) -> bool:
    """Adjacency of the p-cycle and q-cycle conjugacy classes in the compressed
    conjugacy supergraph of the given kind over the symmetric group.

    One class is pinned to a canonical cycle and the smaller class is scanned
    exhaustively; conjugation invariance makes the restriction lossless.
    """
    if kind not in SCAN_KINDS:
        raise ValueError(f"unknown scan kind {kind!r}; known {SCAN_KINDS}")
    if degree > DEGREE_CAP:
        raise SizeCapError(f"scan degree {degree} exceeds cap {DEGREE_CAP}")
    if p == q:
        raise ValueError("classes must have distinct cycle lengths")
    if p > degree or q > degree:
        raise ValueError("cycle length exceeds degree")

    if perms.cycle_count(degree, p) <= perms.cycle_count(degree, q):
        scan_len, fixed_len = p, q
    else:
        scan_len, fixed_len = q, p
    x = perms.canonical_cycle(degree, fixed_len)

    for y in perms.all_cycles(degree, scan_len):
        commutes = perms.compose(x, y) == perms.compose(y, x)
        if kind == "commuting":
            if commutes:
                return True
            continue
        if kind == "enhanced":
            if commutes and _cyclic_pair(degree, x, y):
                return True
            continue
        if commutes:
            return True  # abelian, hence nilpotent and solvable
        nilpotent, solvable = _pair_flags(degree, x, y)
        if kind == "solvable" and solvable:
            return True
        if kind == "nilpotent" and nilpotent:
            return True
    return False


def arithmetic_adjacency(degree: int, p: int, q: int) -> bool:
    """Disjointness criterion: representatives can commute iff p + q <= N."""
    return p + q <= degree


@dataclass(frozen=True)
class Step3Result:
    degree: int
    cycle_lengths: tuple[int, ...]
    graph: Graph


def step3_embedding(n: int, kind: str, with_nonedge: bool = True) -> Step3Result:
    """Realize K_n (or K_n minus one edge) by prime-cycle classes.

    With a nonedge the degree is p_{n-1} + p_n - 1, so only the two largest
    prime cycles are forced to intersect; without it the degree p_{n-1} + p_n
    lets every pair commute.
    """
    if n < 3:
        raise ValueError("prime-cycle embeddings need n >= 3")
    ps = primes_first(n)
    degree = ps[-2] + ps[-1] - (1 if with_nonedge else 0)
    if degree > DEGREE_CAP:
        raise SizeCapError(
            f"embedding degree {degree} exceeds cap {DEGREE_CAP} at n={n}"
        )
    labels = [f"{p}-cycle" for p in ps]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(n), 2)
        if class_adjacency(degree, ps[i], ps[j], kind)
    ]
    return Step3Result(degree, tuple(ps), Graph(labels, edges))


@dataclass(frozen=True)
class FactorCertificate:
    nonedge: tuple[int, int] | None
    primes: tuple[int, ...]
    degree: int
    vertex_primes: tuple[int, ...]
    graph: Graph
    checked: str  # "scan" | "arithmetic"

    def to_json_dict(self) -> dict:
        matrix = [
            [1 if self.graph.has_edge(u, v) else 0 for v in range(self.graph.n)]
            for u in range(self.graph.n)
        ]
        return {
            "nonedge": list(self.nonedge) if self.nonedge else None,
            "primes": list(self.primes),
            "degree": self.degree,
            "vertex_primes": list(self.vertex_primes),
            "graph": self.graph.to_json_dict(),
            "adjacency_matrix": matrix,
            "checked": self.checked,
        }


@dataclass(frozen=True)
class EmbeddingCertificate:
    target: Graph
    kind: str
    factors: tuple[FactorCertificate, ...]
    final_graph: Graph
    witness: tuple[int, ...]
    verified: bool
    arithmetic_only: bool

    def to_json_dict(self) -> dict:
        return {
            "target": self.target.to_json_dict(),
            "kind": self.kind,
            "factors": [f.to_json_dict() for f in self.factors],
            "final": self.final_graph.to_json_dict(),
            "witness": list(self.witness),
            "verified": self.verified,
            "arithmetic_only": self.arithmetic_only,
        }


def _factor_for_nonedge(
    target: Graph, nonedge: tuple[int, int] | None, prime_set: list[int], kind: str,
    allow_arithmetic: bool,
) -> FactorCertificate:
    """One intersection factor: primes assigned so the nonedge carries the two
    largest, adjacency decided per prime pair by scan when the degree permits."""
    n = target.n
    ps = sorted(prime_set)
    degree = ps[-1] + ps[-2] - (1 if nonedge else 0)
    vertex_primes = [0] * n
    if nonedge is None:
        for v in range(n):
            vertex_primes[v] = ps[v]
    else:
        i, j = nonedge
        rest = iter(ps[:-2])
        for v in range(n):
            if v == i:
                vertex_primes[v] = ps[-2]
            elif v == j:
                vertex_primes[v] = ps[-1]
            else:
                vertex_primes[v] = next(rest)
    if degree <= DEGREE_CAP:
        checked = "scan"
    elif allow_arithmetic:
        checked = "arithmetic"
    else:
        raise SizeCapError(
            f"factor degree {degree} exceeds cap {DEGREE_CAP}; "
            "rerun with the arithmetic fallback to downgrade"
        )
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        pu, pv = vertex_primes[u], vertex_primes[v]
        if checked == "scan":
            hit = class_adjacency(degree, pu, pv, kind)
        else:
            hit = arithmetic_adjacency(degree, pu, pv)
        if hit:
            edges.append((u, v))
    return FactorCertificate(
        nonedge, tuple(ps), degree, tuple(vertex_primes), Graph(target.labels, edges), checked
    )


def embed_graph(target: Graph, kind: str, arithmetic_fallback: bool = False) -> EmbeddingCertificate:
    """Realize the target as an intersection of one K_n-minus-an-edge factor per
    nonedge, every factor living on prime-cycle classes of a symmetric group.

    Complete targets get a single trivial factor. Factor degrees beyond the
    scan cap raise unless the arithmetic fallback is allowed, in which case the
    factor is certified by the disjointness criterion only.
    """
    if kind not in EMBED_KINDS:
        raise ValueError(f"embedding kinds are {EMBED_KINDS}; got {kind!r}")
    if target.n < 3:
        raise ValueError("embedding needs at least 3 vertices")
    nonedges = target.complement().edges()
    primes = primes_first(target.n)
    if not nonedges:
        factors = [
            _factor_for_nonedge(target, None, primes, kind, arithmetic_fallback)
        ]
    else:
        factors = [
            _factor_for_nonedge(target, ne, primes, kind, arithmetic_fallback)
            for ne in nonedges
        ]
    final = factors[0].graph
    for fac in factors[1:]:
        final = intersection(final, fac.graph)
    verified = final == target
    return EmbeddingCertificate(
        target,
        kind,
        tuple(factors),
        final,
        tuple(range(target.n)),
        verified,
        any(f.checked == "arithmetic" for f in factors),
    )


def enhanced_embed(target: Graph, prime_sets: list[list[int]] | None = None) -> EmbeddingCertificate:
    """Enhanced-power variant of the intersection embedding.

    Each factor uses its own set of n primes and the sets must be pairwise
    disjoint: diagonal representatives then have coordinates of distinct prime
    orders, so commuting coordinates generate a cyclic group of product order.
    Factors whose degree exceeds the scan cap are certified arithmetically
    (disjoint cycles of coprime prime lengths generate cyclic groups, and
    intersecting ones cannot commute).
    """
    n = target.n
    if n < 3:
        raise ValueError("embedding needs at least 3 vertices")
    nonedges = target.complement().edges()
    count = max(1, len(nonedges))
    if prime_sets is None:
        pool = primes_first(n * count)
        prime_sets = [pool[f * n : (f + 1) * n] for f in range(count)]
    else:
        if len(prime_sets) != count:
            raise ValueError(f"need one prime set per nonedge ({count})")
        if any(len(ps) != n for ps in prime_sets):
            raise ValueError(f"each prime set must hold {n} primes")
        everything = [p for ps in prime_sets for p in ps]
        if len(set(everything)) != len(everything):
            raise ValueError("prime sets must be pairwise disjoint")
    factors = []
    if not nonedges:
        factors.append(_factor_for_nonedge(target, None, prime_sets[0], "enhanced", True))
    else:
        for ne, ps in zip(nonedges, prime_sets):
            factors.append(_factor_for_nonedge(target, ne, ps, "enhanced", True))
    final = factors[0].graph
    for fac in factors[1:]:
        final = intersection(final, fac.graph)
    verified = final == target
    return EmbeddingCertificate(
        target,
        "enhanced",
        tuple(factors),
        final,
        tuple(range(n)),
        verified,
        any(f.checked == "arithmetic" for f in factors),
    )


def strong_product_identity_check(left: FiniteGroup, right: FiniteGroup, kind: str) -> bool:
    """Compressed conjugacy supergraph of a direct product versus the strong
    product of the factors' compressed graphs, compared through the explicit
    class-pairing bijection."""
    if kind not in EMBED_KINDS:
        raise ValueError(f"identity holds for kinds {EMBED_KINDS}; got {kind!r}")
    prod = product(left, right)
    combined = build_compressed(prod, kind)
    left_c = build_compressed(left, kind)
    right_c = build_compressed(right, kind)
    boxed = strong_product(left_c, right_c)
    if combined.n != boxed.n:
        return False

    left_classes = build_class_index(left)
    right_classes = build_class_index(right)
    k_right = len(right.conjugacy_classes())
    mapping = []
    for cls in prod.conjugacy_classes():
        g, h = divmod(cls.representative, right.order)
        mapping.append(left_classes[g] * k_right + right_classes[h])
    if sorted(mapping) != list(range(boxed.n)):
        return False
    for a, b in itertools.combinations(range(combined.n), 2):
        if combined.has_edge(a, b) != boxed.has_edge(mapping[a], mapping[b]):
            return False
    return True


def build_class_index(group: FiniteGroup) -> dict[int, int]:
    """Element -> index of its conjugacy class in (size, least member) order."""
    out: dict[int, int] = {}
    for idx, cls in enumerate(group.conjugacy_classes()):
        for g in cls.members:
            out[g] = idx
    return out
