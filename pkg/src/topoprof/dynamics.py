"""Finite dynamical systems as functional graphs.

A system is a finite state set {0, ..., n-1} together with a total
successor map; its dynamics graph has one outgoing edge per state.  The
module computes per-state heights (distance to the nearest periodic
state), extracts profiles, forms disjoint sums and tensor products, and
reads/writes the plain-text exchange format and DOT.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CapacityError, ParseError
from .profiles import MAX_COUNT, Profile


@dataclass(frozen=True, slots=True)
class FiniteDynamicalSystem:
    """States {0..n-1} with succ[i] the image of state i."""

    succ: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        succ = tuple(self.succ)
        n = len(succ)
        for i, s in enumerate(succ):
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < n:
                raise ValueError(f"successor of state {i} out of range [0,{n - 1}]: {s!r}")
        object.__setattr__(self, "succ", succ)

    @property
    def n(self) -> int:
        return len(self.succ)

    def __add__(self, other: object) -> "FiniteDynamicalSystem":
        if not isinstance(other, FiniteDynamicalSystem):
            return NotImplemented
        return disjoint_sum(self, other)

    def __mul__(self, other: object) -> "FiniteDynamicalSystem":
        if not isinstance(other, FiniteDynamicalSystem):
            return NotImplemented
        return tensor_product(self, other)


EMPTY_SYSTEM = FiniteDynamicalSystem()


def heights(sys: FiniteDynamicalSystem) -> tuple[int, ...]:
    """Per-state distance to the nearest periodic state.

    States on limit cycles get 0; everything else gets its distance along
    the successor map.  Cycle detection is an iterative pointer walk with
    three-color marking, followed by a breadth-first sweep of the reversed
    graph, so the whole computation is linear and recursion-free.
    """
    succ = sys.succ
    n = len(succ)
    color = bytearray(n)  # 0 unvisited, 1 on current walk, 2 finished
    periodic = bytearray(n)
    for start in range(n):
        if color[start]:
            continue
        path = []
        v = start
        while color[v] == 0:
            color[v] = 1
            path.append(v)
            v = succ[v]
        if color[v] == 1:  # the walk closed a new cycle at v
            periodic[v] = 1
            u = succ[v]
            while u != v:
                periodic[u] = 1
                u = succ[u]
        for u in path:
            color[u] = 2

    rev: list[list[int]] = [[] for _ in range(n)]
    for i, s in enumerate(succ):
        rev[s].append(i)
    out = [0] * n
    seen = bytearray(periodic)
    queue = deque(i for i in range(n) if periodic[i])
    while queue:
        v = queue.popleft()
        for u in rev[v]:
            if not seen[u]:
                seen[u] = 1
                out[u] = out[v] + 1
                queue.append(u)
    return tuple(out)


def profile_of(sys: FiniteDynamicalSystem) -> Profile:
    """Count states per height; the canonical projection onto profiles."""
    hs = heights(sys)
    if not hs:
        return Profile()
    counts = [0] * (max(hs) + 1)
    for h in hs:
        counts[h] += 1
    return Profile(tuple(counts))


def disjoint_sum(a: FiniteDynamicalSystem, b: FiniteDynamicalSystem) -> FiniteDynamicalSystem:
    """Place a and b side by side; b's states are shifted by a.n."""
    if a.n + b.n > MAX_COUNT:
        raise CapacityError(f"state count {a.n} + {b.n} exceeds 64 bits")
    return FiniteDynamicalSystem(a.succ + tuple(s + a.n for s in b.succ))


def tensor_product(a: FiniteDynamicalSystem, b: FiniteDynamicalSystem) -> FiniteDynamicalSystem:
    """Componentwise product on state pairs; pair (i,j) is state i*b.n + j."""
    if a.n and b.n and a.n * b.n > MAX_COUNT:
        raise CapacityError(f"state count {a.n} * {b.n} exceeds 64 bits")
    bn = b.n
    return FiniteDynamicalSystem(
        tuple(a.succ[i] * bn + b.succ[j] for i in range(a.n) for j in range(bn))
    )


def realize(p: Profile) -> FiniteDynamicalSystem:
    """Build a witness system whose profile is p.

    Canonical shape: p_0 fixed points at level 0, and every state of
    level i >= 1 points at the first state of level i-1.
    """
    succ: list[int] = []
    first_of_prev = 0
    for level, count in enumerate(p.counts):
        base = len(succ)
        if level == 0:
            succ.extend(range(count))  # fixed points
        else:
            succ.extend([first_of_prev] * count)
        first_of_prev = base
    return FiniteDynamicalSystem(tuple(succ))


def serialize_fds(sys: FiniteDynamicalSystem) -> str:
    """Two lines: the state count, then the space-separated successors."""
    return f"{sys.n}\n" + " ".join(str(s) for s in sys.succ) + "\n"


def parse_fds(text: str) -> FiniteDynamicalSystem:
    """Inverse of serialize_fds, with line/column positions on errors."""
    lines = text.split("\n")
    head = lines[0].strip() if lines else ""
    if not head or not head.isdigit():
        raise ParseError(f"expected a decimal state count, got {head!r}", line=1, column=1)
    n = int(head)
    body = lines[1] if len(lines) > 1 else ""
    tokens: list[tuple[str, int]] = []
    col = 0
    for tok in body.split(" "):
        if tok:
            tokens.append((tok, col + 1))
        col += len(tok) + 1
    if len(tokens) != n:
        raise ParseError(f"expected {n} successors, found {len(tokens)}", line=2, column=1)
    succ = []
    for tok, c in tokens:
        if not tok.isdigit():
            raise ParseError(f"successor is not a decimal natural: {tok!r}", line=2, column=c)
        v = int(tok)
        if v >= n:
            raise ParseError(f"successor {v} out of range [0,{n - 1}]", line=2, column=c)
        succ.append(v)
    for idx, line in enumerate(lines[2:], start=3):
        if line.strip():
            raise ParseError("unexpected content after the successor line", line=idx, column=1)
    return FiniteDynamicalSystem(tuple(succ))


def export_dot(sys: FiniteDynamicalSystem) -> str:
    """DOT digraph with nodes s0..s(n-1), a height attribute, one edge per state."""
    hs = heights(sys)
    out = ["digraph fds {"]
    for i, h in enumerate(hs):
        out.append(f"  s{i} [height={h}];")
    for i, s in enumerate(sys.succ):
        out.append(f"  s{i} -> s{s};")
    out.append("}")
    return "\n".join(out) + "\n"
