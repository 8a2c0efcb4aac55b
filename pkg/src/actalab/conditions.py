"""Decision procedures for the act-level conditions on a finite left act:
torsion-freeness, the interpolation conditions (P), (E), (EP), (W), (PWP),
strong flatness as (P) and (E) combined, principal weak flatness, weak
flatness, and a bounded refutation procedure for flatness itself.

Every "fails" verdict carries a concrete counterexample that re-checks as a
violation; interpolant reporting on success is opt-in to keep sweeps cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .act import Act, regular_act, restrict_act
from .errors import SideMismatchError, UnknownConditionError, ValidationError
from .monoid import (
    FiniteMonoid,
    left_cancellable_elements,
    principal_right_ideal,
)
from .tensor import TensorProduct, Skeleton, gamma_pairs, standard_subact, tensor_product

CONDITION_IDS = ("TF", "P", "E", "EP", "W", "PWP", "SF")


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    verdict: str  # "holds" | "fails" | "passes-up-to-bound"
    witness: dict | None = None
    details: dict | None = None

    @property
    def holds(self) -> bool:
        return self.verdict != "fails"

    def to_dict(self) -> dict:
        out = {"condition": self.condition, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.details is not None:
            out["details"] = self.details
        return out


def _require_left(B: Act):
    if B.side != "left":
        raise SideMismatchError("condition checks run on left acts")


def _divisor_table(B: Act):
    """E[b][c] = all u with u*c = b."""
    k = B.size
    E = [[[] for _ in range(k)] for _ in range(k)]
    for u in B.monoid.elements():
        row = B.table[u]
        for c in range(k):
            E[row[c]][c].append(u)
    return E


def _image_sets(B: Act, E):
    """image[t][b][c] = {t*u : u*c = b}, the targets reachable by scaling a
    divisor of b at base c."""
    mul = B.monoid.mul
    k = B.size
    return [
        [[frozenset(mul[t][u] for u in E[b][c]) for c in range(k)] for b in range(k)]
        for t in B.monoid.elements()
    ]


class _Checker:
    """Shared precomputations for the per-act condition procedures."""

    def __init__(self, B: Act, want_witnesses: bool = False):
        _require_left(B)
        self.B = B
        self.M = B.monoid
        self.E = _divisor_table(B)
        self._images = None
        self.want = want_witnesses

    @property
    def images(self):
        if self._images is None:
            self._images = _image_sets(self.B, self.E)
        return self._images

    def _labels(self, **kw):
        out = {}
        for key, (kind, v) in kw.items():
            out[key] = self.M.label(v) if kind == "s" else self.B.label(v)
        return out

    def check(self, cond: str) -> ConditionReport:
        cond = cond.upper()
        if cond not in CONDITION_IDS:
            raise UnknownConditionError(cond)
        if cond == "SF":
            p = self.check("P")
            if not p.holds:
                return ConditionReport("SF", "fails", p.witness)
            e = self.check("E")
            if not e.holds:
                return ConditionReport("SF", "fails", e.witness)
            details = None
            if self.want:
                details = {"P": p.details, "E": e.details}
            return ConditionReport("SF", "holds", None, details)
        return getattr(self, "_check_" + cond.lower())()

    def _check_tf(self) -> ConditionReport:
        B = self.B
        for s in left_cancellable_elements(self.M):
            row = B.table[s]
            seen: dict[int, int] = {}
            for a in B.carrier():
                v = row[a]
                if v in seen:
                    w = self._labels(s=("s", s), a=("b", seen[v]), b=("b", a))
                    return ConditionReport("TF", "fails", w)
                seen[v] = a
        return ConditionReport("TF", "holds")

    def _check_p(self) -> ConditionReport:
        B, M, E = self.B, self.M, self.E
        mul = M.mul
        images = self.images
        found = [] if self.want else None
        for s in M.elements():
            srow = B.table[s]
            for s2 in M.elements():
                s2row = B.table[s2]
                for b in B.carrier():
                    sb = srow[b]
                    for b2 in B.carrier():
                        if s2row[b2] != sb:
                            continue
                        hit = None
                        for c in B.carrier():
                            tgt = images[s2][b2][c]
                            if not tgt:
                                continue
                            for u in E[b][c]:
                                if mul[s][u] in tgt:
                                    hit = (u, c)
                                    break
                            if hit:
                                break
                        if hit is None:
                            w = self._labels(
                                s=("s", s), s2=("s", s2), b=("b", b), b2=("b", b2)
                            )
                            return ConditionReport("P", "fails", w)
                        if found is not None:
                            u, c = hit
                            u2 = next(
                                v for v in E[b2][c] if mul[s2][v] == mul[s][u]
                            )
                            found.append(
                                self._labels(
                                    s=("s", s), s2=("s", s2), b=("b", b),
                                    b2=("b", b2), u=("s", u), u2=("s", u2),
                                    through=("b", c),
                                )
                            )
        details = {"instances": found} if found is not None else None
        return ConditionReport("P", "holds", None, details)

    def _check_e(self) -> ConditionReport:
        B, M, E = self.B, self.M, self.E
        mul = M.mul
        found = [] if self.want else None
        for s in M.elements():
            srow = B.table[s]
            for s2 in M.elements():
                s2row = B.table[s2]
                for b in B.carrier():
                    if srow[b] != s2row[b]:
                        continue
                    hit = None
                    for c in B.carrier():
                        for u in E[b][c]:
                            if mul[s][u] == mul[s2][u]:
                                hit = (u, c)
                                break
                        if hit:
                            break
                    if hit is None:
                        w = self._labels(s=("s", s), s2=("s", s2), b=("b", b))
                        return ConditionReport("E", "fails", w)
                    if found is not None:
                        found.append(
                            self._labels(
                                s=("s", s), s2=("s", s2), b=("b", b),
                                u=("s", hit[0]), through=("b", hit[1]),
                            )
                        )
        details = {"instances": found} if found is not None else None
        return ConditionReport("E", "holds", None, details)

    def _check_ep(self) -> ConditionReport:
        B, M, E = self.B, self.M, self.E
        mul = M.mul
        images = self.images
        found = [] if self.want else None
        for s in M.elements():
            srow = B.table[s]
            for t in M.elements():
                trow = B.table[t]
                for a in B.carrier():
                    if srow[a] != trow[a]:
                        continue
                    hit = None
                    for c in B.carrier():
                        tgt = images[t][a][c]
                        if not tgt:
                            continue
                        for u in E[a][c]:
                            if mul[s][u] in tgt:
                                hit = (u, c)
                                break
                        if hit:
                            break
                    if hit is None:
                        w = self._labels(s=("s", s), t=("s", t), a=("b", a))
                        return ConditionReport("EP", "fails", w)
                    if found is not None:
                        u, c = hit
                        v = next(w_ for w_ in E[a][c] if mul[t][w_] == mul[s][u])
                        found.append(
                            self._labels(
                                s=("s", s), t=("s", t), a=("b", a),
                                u=("s", u), v=("s", v), through=("b", c),
                            )
                        )
        details = {"instances": found} if found is not None else None
        return ConditionReport("EP", "holds", None, details)

    def _check_w(self) -> ConditionReport:
        B, M = self.B, self.M
        n = M.size
        reach = [frozenset(B.table[u]) for u in range(n)]
        pri = [principal_right_ideal(M, a).members for a in range(n)]
        found = [] if self.want else None
        for s in M.elements():
            srow = B.table[s]
            for t in M.elements():
                trow = B.table[t]
                cap = pri[s] & pri[t]
                for a in B.carrier():
                    c = srow[a]
                    for a2 in B.carrier():
                        if trow[a2] != c:
                            continue
                        u_hit = next((u for u in cap if c in reach[u]), None)
                        if u_hit is None:
                            w = self._labels(
                                s=("s", s), t=("s", t), a=("b", a), a2=("b", a2)
                            )
                            return ConditionReport("W", "fails", w)
                        if found is not None:
                            d = B.table[u_hit].index(c)
                            found.append(
                                self._labels(
                                    s=("s", s), t=("s", t), a=("b", a),
                                    a2=("b", a2), u=("s", u_hit), d=("b", d),
                                )
                            )
        details = {"instances": found} if found is not None else None
        return ConditionReport("W", "holds", None, details)

    def _check_pwp(self) -> ConditionReport:
        B, M, E = self.B, self.M, self.E
        mul = M.mul
        images = self.images
        found = [] if self.want else None
        for t in M.elements():
            trow = B.table[t]
            for a in B.carrier():
                ta = trow[a]
                for a2 in B.carrier():
                    if trow[a2] != ta:
                        continue
                    hit = None
                    for c in B.carrier():
                        tgt = images[t][a2][c]
                        if not tgt:
                            continue
                        for u in E[a][c]:
                            if mul[t][u] in tgt:
                                hit = (u, c)
                                break
                        if hit:
                            break
                    if hit is None:
                        w = self._labels(t=("s", t), a=("b", a), a2=("b", a2))
                        return ConditionReport("PWP", "fails", w)
                    if found is not None:
                        u, c = hit
                        v = next(w_ for w_ in E[a2][c] if mul[t][w_] == mul[t][u])
                        found.append(
                            self._labels(
                                t=("s", t), a=("b", a), a2=("b", a2),
                                u=("s", u), v=("s", v), through=("b", c),
                            )
                        )
        details = {"instances": found} if found is not None else None
        return ConditionReport("PWP", "holds", None, details)


def check_condition(B: Act, cond: str, want_witnesses: bool = False) -> ConditionReport:
    """Exhaustive quantifier check of one condition over B's carrier and S."""
    return _Checker(B, want_witnesses).check(cond)


def condition_profile(B: Act, conds=CONDITION_IDS) -> dict[str, ConditionReport]:
    """All requested condition verdicts with shared precomputation."""
    chk = _Checker(B)
    return {c: chk.check(c) for c in conds}


def _injective_on_classes(
    sub: TensorProduct, full: TensorProduct, member_map
) -> tuple[int, int] | None:
    """Two sub-classes landing in one full-class, if any.

    member_map sends a sub pair (a, b) to the corresponding full pair.
    """
    seen: dict[int, int] = {}
    for ci, cls in enumerate(sub.classes):
        fa, fb = member_map(*cls[0])
        fc = full.class_index(fa, fb)
        if fc in seen:
            return (seen[fc], ci)
        seen[fc] = ci
    return None


def check_pwf(B: Act) -> ConditionReport:
    """Principal weak flatness: aS ⊗ B embeds in S ⊗ B for every a.

    A failure is reported as (a, b, b2) with a ⊗ b = a ⊗ b2 in S ⊗ B but
    not in aS ⊗ B, pulled back through the elementary step
    (a*u, b) ~ (a, u*b); the raw separated pairs ride along.
    """
    _require_left(B)
    M = B.monoid
    S_right = regular_act(M, "right")
    SB = tensor_product(S_right, B)
    for a in M.elements():
        members = sorted(principal_right_ideal(M, a).members)
        K, pos = restrict_act(S_right, members)
        KB = tensor_product(K, B)
        bad = _injective_on_classes(KB, SB, lambda m, b: (members[m], b))
        if bad is not None:
            (m1, b1), (m2, b2) = KB.classes[bad[0]][0], KB.classes[bad[1]][0]
            u1 = M.mul[a].index(members[m1])
            u2 = M.mul[a].index(members[m2])
            witness = {
                "a": M.label(a),
                "b": B.label(B.table[u1][b1]),
                "b2": B.label(B.table[u2][b2]),
                "pair1": [M.label(members[m1]), B.label(b1)],
                "pair2": [M.label(members[m2]), B.label(b2)],
            }
            return ConditionReport("PWF", "fails", witness)
    return ConditionReport("PWF", "holds")


def all_right_ideals(M: FiniteMonoid) -> list[frozenset[int]]:
    """Every non-empty right ideal: unions of principal ideals, deduplicated."""
    principals = sorted(
        {principal_right_ideal(M, a).members for a in M.elements()},
        key=lambda m: sorted(m),
    )
    out = set()
    p = len(principals)
    for mask in range(1, 1 << p):
        members = frozenset().union(
            *(principals[i] for i in range(p) if mask >> i & 1)
        )
        out.add(members)
    return sorted(out, key=lambda m: (len(m), sorted(m)))


def check_wf(B: Act) -> ConditionReport:
    """Weak flatness: K ⊗ B embeds in S ⊗ B for every right ideal K."""
    _require_left(B)
    M = B.monoid
    S_right = regular_act(M, "right")
    SB = tensor_product(S_right, B)
    for members_set in all_right_ideals(M):
        members = sorted(members_set)
        K, pos = restrict_act(S_right, members)
        KB = tensor_product(K, B)
        bad = _injective_on_classes(KB, SB, lambda m, b: (members[m], b))
        if bad is not None:
            (m1, b1), (m2, b2) = KB.classes[bad[0]][0], KB.classes[bad[1]][0]
            witness = {
                "ideal": [M.label(m) for m in members],
                "pair1": [M.label(members[m1]), B.label(b1)],
                "pair2": [M.label(members[m2]), B.label(b2)],
            }
            return ConditionReport("WF", "fails", witness)
    return ConditionReport("WF", "holds")


def check_flat_bounded(B: Act, m_max: int = 2) -> ConditionReport:
    """Refutation procedure for flatness over skeletons of length <= m_max.

    For each skeleton the standard quotient connects ([x], b) to ([x'], b2)
    whenever the gamma chain holds in B; flatness forces the same equality
    over [x]S ∪ [x']S.  A failure here is a definitive non-flatness
    witness; exhausting the bound is only "passes-up-to-bound".
    """
    _require_left(B)
    if m_max < 1:
        raise ValidationError("flatness bound must be at least 1")
    M = B.monoid
    n = M.size
    checked = 0
    for m in range(1, m_max + 1):
        for entries in product(range(n), repeat=2 * m):
            checked += 1
            sk = Skeleton(entries)
            gp = gamma_pairs(B, sk)
            if not gp:
                continue
            U, x_pos, xp_pos = standard_subact(M, entries)
            UB = tensor_product(U, B)
            for b, b2 in gp:
                if not UB.same_class(x_pos, b, xp_pos, b2):
                    witness = {
                        "skeleton": list(sk.labels(M)),
                        "b": B.label(b),
                        "b2": B.label(b2),
                    }
                    return ConditionReport("FLAT", "fails", witness)
    return ConditionReport(
        "FLAT", "passes-up-to-bound", None, {"m_max": m_max, "skeletons": checked}
    )
