"""Finite left and right acts of a monoid, congruences, quotients, free acts,
and exhaustive enumeration of all action tables up to a carrier size.

An act stores its action as table[s][a]: for a left act this is s*a, for a
right act a*s.  Both laws then read table[s][table[t][a]] == table[st][a]
(left) and table[t][table[s][a]] == table[st][a] (right).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import (
    CompatibilityError,
    EmptyCarrierError,
    IdentityLawError,
    ValidationError,
)
from .monoid import FiniteMonoid


@dataclass(frozen=True)
class Act:
    monoid: FiniteMonoid
    side: str  # "left" | "right"
    carrier_names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]  # table[s][a]

    @property
    def size(self) -> int:
        return len(self.carrier_names)

    def apply(self, s: int, a: int) -> int:
        """s*a for a left act, a*s for a right act."""
        return self.table[s][a]

    def carrier(self) -> range:
        return range(len(self.carrier_names))

    def index(self, label: str) -> int:
        try:
            return self.carrier_names.index(label)
        except ValueError:
            raise ValidationError(f"{label!r} is not in the carrier") from None

    def label(self, a: int) -> str:
        return self.carrier_names[a]


@dataclass(frozen=True)
class ActCongruence:
    """An action-compatible partition of an act's carrier."""

    act: Act
    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class ActMorphism:
    source: Act
    target: Act
    mapping: tuple[int, ...]


def morphism_is_valid(f: ActMorphism) -> bool:
    """Check the homomorphism law (s a)θ = s(aθ) on every instance."""
    src, tgt = f.source, f.target
    if src.side != tgt.side or src.monoid != tgt.monoid:
        return False
    if len(f.mapping) != src.size:
        return False
    m = f.mapping
    for s in src.monoid.elements():
        srow, trow = src.table[s], tgt.table[s]
        for a in src.carrier():
            if m[srow[a]] != trow[m[a]]:
                return False
    return True


def _law_violation(M: FiniteMonoid, side: str, table) -> tuple | None:
    """First failing act-law instance of a raw table, or None."""
    e = M.identity
    k = len(table[0])
    for a in range(k):
        if table[e][a] != a:
            return ("identity", a)
    mul = M.mul
    for s in M.elements():
        for t in M.elements():
            st_row = table[mul[s][t]]
            if side == "left":
                srow, trow = table[s], table[t]
                for a in range(k):
                    if srow[trow[a]] != st_row[a]:
                        return ("compat", s, t, a)
            else:
                srow, trow = table[s], table[t]
                for a in range(k):
                    if trow[srow[a]] != st_row[a]:
                        return ("compat", s, t, a)
    return None


def validate_act(
    M: FiniteMonoid,
    side: str,
    names: Sequence[str],
    action_table: Sequence[Sequence[int]],
) -> Act:
    """Validate an action table, naming the failing law instance on error."""
    if side not in ("left", "right"):
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}")
    if not names:
        raise EmptyCarrierError()
    k = len(names)
    if len(set(names)) != k:
        raise ValidationError("carrier labels must be distinct")
    if len(action_table) != M.size or any(len(row) != k for row in action_table):
        raise ValidationError("action table is not total")
    for row in action_table:
        for v in row:
            if not (0 <= v < k):
                raise ValidationError(f"action entry {v} out of range")
    table = tuple(tuple(row) for row in action_table)
    bad = _law_violation(M, side, table)
    if bad is not None:
        if bad[0] == "identity":
            raise IdentityLawError(names[bad[1]])
        _, s, t, a = bad
        raise CompatibilityError(M.label(s), M.label(t), names[a], side)
    return Act(M, side, tuple(names), table)


def regular_act(M: FiniteMonoid, side: str) -> Act:
    """S acting on itself by multiplication."""
    if side == "left":
        table = M.mul
    else:
        table = tuple(tuple(M.mul[a][s] for a in M.elements()) for s in M.elements())
    return Act(M, side, M.element_names, tuple(tuple(r) for r in table))


def free_right_act(M: FiniteMonoid, k: int) -> Act:
    """The free right act on k generators: k tagged copies of S.

    Carrier element (copy i, s) is labelled "xi#s" and the action is
    (i, s)*t = (i, st); the base point of copy i is (i, 1).
    """
    if k < 1:
        raise ValidationError("free act needs at least one generator")
    n = M.size
    names = tuple(
        f"x{i + 1}#{M.element_names[s]}" for i in range(k) for s in range(n)
    )
    table = tuple(
        tuple(i * n + M.mul[s][t] for i in range(k) for s in range(n))
        for t in M.elements()
    )
    return Act(M, "right", names, table)


def free_base_point(M: FiniteMonoid, copy: int) -> int:
    """Carrier index of (copy, 1); copies are 1-based."""
    return (copy - 1) * M.size + M.identity


def congruence_closure(act: Act, seed_pairs: Iterable[tuple[int, int]]) -> ActCongruence:
    """Smallest act congruence containing the seeds.

    Merge-find with a worklist: each merge of a and b enqueues (sa, sb)
    for every s, so compatibility propagates along merge chains.
    """
    k = act.size
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    table = act.table
    els = act.monoid.elements()
    work = deque(seed_pairs)
    for a, b in work:
        if not (0 <= a < k and 0 <= b < k):
            raise ValidationError("seed pair outside the carrier")
    while work:
        a, b = work.popleft()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        for s in els:
            row = table[s]
            work.append((row[a], row[b]))
    groups: dict[int, list[int]] = {}
    for x in range(k):
        groups.setdefault(find(x), []).append(x)
    blocks = tuple(tuple(g) for g in sorted(groups.values(), key=lambda g: g[0]))
    block_of = [0] * k
    for bi, block in enumerate(blocks):
        for x in block:
            block_of[x] = bi
    return ActCongruence(act, tuple(block_of), blocks)


def is_act_congruence(act: Act, block_of: Sequence[int]) -> bool:
    """Whether a partition (as a block-index map) is action-compatible."""
    k = act.size
    for s in act.monoid.elements():
        row = act.table[s]
        rep_image: dict[int, int] = {}
        for a in range(k):
            b = block_of[a]
            img = block_of[row[a]]
            if rep_image.setdefault(b, img) != img:
                return False
    return True


def quotient_act(act: Act, cong: ActCongruence) -> tuple[Act, ActMorphism]:
    """The act on congruence blocks plus the canonical projection."""
    if cong.act != act:
        raise ValidationError("congruence does not belong to this act")
    block_of = cong.block_of
    reps = [block[0] for block in cong.blocks]
    names = tuple(f"[{act.carrier_names[r]}]" for r in reps)
    table = tuple(
        tuple(block_of[act.table[s][r]] for r in reps) for s in act.monoid.elements()
    )
    quotient = Act(act.monoid, act.side, names, table)
    return quotient, ActMorphism(act, quotient, block_of)


def subact_generated(act: Act, subset: Iterable[int]) -> frozenset[int]:
    """Smallest action-closed superset of the given carrier elements."""
    closed = set(subset)
    frontier = list(closed)
    els = act.monoid.elements()
    while frontier:
        a = frontier.pop()
        for s in els:
            b = act.table[s][a]
            if b not in closed:
                closed.add(b)
                frontier.append(b)
    return frozenset(closed)


def restrict_act(act: Act, members: Iterable[int]) -> tuple[Act, dict[int, int]]:
    """The induced act on an action-closed subset.

    Returns the restricted act and the map from old carrier indices to new.
    """
    members = sorted(set(members))
    pos = {a: i for i, a in enumerate(members)}
    for a in members:
        for s in act.monoid.elements():
            if act.table[s][a] not in pos:
                raise ValidationError("subset is not action-closed")
    names = tuple(act.carrier_names[a] for a in members)
    table = tuple(
        tuple(pos[act.table[s][a]] for a in members) for s in act.monoid.elements()
    )
    return Act(act.monoid, act.side, names, table), pos


def _canonical_table(table: tuple[tuple[int, ...], ...], k: int) -> tuple:
    """Lexicographically smallest relabelling of a table over carrier permutations."""
    from itertools import permutations

    best = None
    for perm in permutations(range(k)):
        inv = [0] * k
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(tuple(perm[row[inv[a]]] for a in range(k)) for row in table)
        if best is None or cand < best:
            best = cand
    return best


def enumerate_acts(
    M: FiniteMonoid, side: str, max_size: int, distinct: bool = False
) -> Iterator[Act]:
    """Yield every act on carriers of size 1..max_size, in deterministic order.

    Rows (one per non-identity element) are assigned in element order with
    incremental law checking, so pruning happens as early as possible.  With
    distinct=True only the lexicographically-canonical member of each
    isomorphism class is emitted.
    """
    if max_size < 1:
        raise ValidationError("max_size must be at least 1")
    if side not in ("left", "right"):
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}")
    for k in range(1, max_size + 1):
        yield from _enumerate_size(M, side, k, distinct)


def _enumerate_size(M: FiniteMonoid, side: str, k: int, distinct: bool) -> Iterator[Act]:
    n = M.size
    e = M.identity
    order = [i for i in range(n) if i != e]
    mul = M.mul
    left = side == "left"

    # triples (s,t) whose law becomes fully determined once `order[p]` lands
    check_plan: list[list[tuple[int, int]]] = []
    assigned = {e}
    for x in order:
        now = assigned | {x}
        todo = [
            (s, t)
            for s in now
            for t in now
            if mul[s][t] in now and x in (s, t, mul[s][t])
        ]
        check_plan.append(todo)
        assigned.add(x)

    rows: list[tuple[int, ...] | None] = [None] * n
    rows[e] = tuple(range(k))
    names = tuple(f"a{i}" for i in range(k))
    candidates = list(product(range(k), repeat=k))

    def consistent(pairs):
        for s, t in pairs:
            srow, trow, strow = rows[s], rows[t], rows[mul[s][t]]
            if left:
                for a in range(k):
                    if srow[trow[a]] != strow[a]:
                        return False
            else:
                for a in range(k):
                    if trow[srow[a]] != strow[a]:
                        return False
        return True

    def emit() -> Act:
        return Act(M, side, names, tuple(rows))  # type: ignore[arg-type]

    def backtrack(pos: int) -> Iterator[Act]:
        if pos == len(order):
            act = emit()
            if distinct:
                canon = _canonical_table(act.table, k)
                if act.table != canon:
                    return
            yield act
            return
        x = order[pos]
        plan = check_plan[pos]
        for cand in candidates:
            rows[x] = cand
            if consistent(plan):
                yield from backtrack(pos + 1)
        rows[x] = None

    yield from backtrack(0)
