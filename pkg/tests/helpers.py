"""Independent oracles shared by the test modules.

These deliberately avoid the library's own search strategies: generating
sets are found by exhaustive subset search, tossing existence by full
witness enumeration, congruence minimality by scanning every partition.
"""

from itertools import combinations, product

from actalab.monoid import PairSubact, RightIdeal


def _items_and_orbits(structure):
    M = structure.monoid
    els = range(M.size)
    if isinstance(structure, RightIdeal):
        items = sorted(structure.members)
        orbits = {u: {M.mul[u][s] for s in els} for u in items}
    else:
        assert isinstance(structure, PairSubact)
        items = sorted(structure.pairs)
        orbits = {
            (u, v): {(M.mul[u][s], M.mul[v][s]) for s in els} for u, v in items
        }
    return items, orbits


def brute_min_generators(structure):
    """Smallest subset whose orbits cover the structure, by direct search."""
    items, orbits = _items_and_orbits(structure)
    universe = set(items)
    if not items:
        return ()
    for k in range(1, len(items) + 1):
        for combo in combinations(items, k):
            covered = set()
            for g in combo:
                covered |= orbits[g]
            if covered == universe:
                return combo
    raise AssertionError("structure cannot cover itself")


def generates(structure, gens) -> bool:
    items, orbits = _items_and_orbits(structure)
    covered = set()
    for g in gens:
        covered |= orbits[g]
    return covered == set(items)


def tossing_exists_brute(A, B, sk, a, b, a2, b2) -> bool:
    """Direct witness enumeration of the scheme equations for one skeleton."""
    m = sk.length
    for a_wit in product(range(A.size), repeat=m - 1):
        chain = (a,) + a_wit + (a2,)
        if any(
            A.table[sk.s(i)][chain[i - 1]] != A.table[sk.t(i)][chain[i]]
            for i in range(1, m + 1)
        ):
            continue
        for b_wit in product(range(B.size), repeat=m):
            if B.table[sk.s(1)][b_wit[0]] != b:
                continue
            if any(
                B.table[sk.t(i)][b_wit[i - 1]] != B.table[sk.s(i + 1)][b_wit[i]]
                for i in range(1, m)
            ):
                continue
            if B.table[sk.t(m)][b_wit[m - 1]] == b2:
                return True
    return False


def tossing_endpoint_table(A, B, sk):
    """All endpoint 4-tuples (a, b, a2, b2) some witness tuple validates.

    One sweep over witness combinations, marking the endpoints each one
    serves; equations are checked directly off the scheme.
    """
    m = sk.length
    out = set()
    na, nb = A.size, B.size
    for a_wit in product(range(na), repeat=m - 1):
        if m >= 2:
            if any(
                A.table[sk.s(i)][a_wit[i - 2]] != A.table[sk.t(i)][a_wit[i - 1]]
                for i in range(2, m)
            ):
                continue
            # endpoints compatible with this internal chain
            firsts = [
                x
                for x in range(na)
                if A.table[sk.s(1)][x] == A.table[sk.t(1)][a_wit[0]]
            ]
            lasts = [
                y
                for y in range(na)
                if A.table[sk.s(m)][a_wit[-1]] == A.table[sk.t(m)][y]
            ]
            if not firsts or not lasts:
                continue
        for b_wit in product(range(nb), repeat=m):
            if any(
                B.table[sk.t(i)][b_wit[i - 1]] != B.table[sk.s(i + 1)][b_wit[i]]
                for i in range(1, m)
            ):
                continue
            b = B.table[sk.s(1)][b_wit[0]]
            b2 = B.table[sk.t(m)][b_wit[m - 1]]
            if m == 1:
                for x in range(na):
                    sx = A.table[sk.s(1)][x]
                    for y in range(na):
                        if sx == A.table[sk.t(1)][y]:
                            out.add((x, b, y, b2))
            else:
                for x in firsts:
                    for y in lasts:
                        out.add((x, b, y, b2))
    return out


def all_partitions(n):
    """Every partition of range(n) as a block-index tuple (restricted growth)."""
    def rec(i, maxb, cur):
        if i == n:
            yield tuple(cur)
            return
        for b in range(maxb + 1):
            cur.append(b)
            yield from rec(i + 1, max(maxb, b + 1), cur)
            cur.pop()

    yield from rec(0, 0, [])


def semilattice_claimed_R(M, n1, s, t):
    """The case-split decomposition of R(s,t) for a two-level group union,
    as the orbit closure of its stated generators; None for the split the
    symmetry of R already covers."""
    from actalab.monoid import generated_pair_subact

    def inv(x):
        lo, ident = (0, 0) if x < n1 else (n1, n1)
        hi = n1 if x < n1 else M.size
        return next(w for w in range(lo, hi) if M.mul[x][w] == ident)

    G1 = range(0, n1)
    e, f = 0, n1
    cross = [(u, v) for u in G1 for v in G1 if M.mul[s][u] == M.mul[t][v]]
    if s >= n1 and t >= n1:
        gens = [(e, M.mul[inv(t)][s]), (M.mul[inv(s)][t], e)] + cross
    elif s >= n1 and t < n1:
        gens = [(M.mul[inv(s)][t], f), (e, M.mul[inv(t)][s])] + cross
    elif s < n1 and t < n1:
        gens = [(f, f), (M.mul[inv(s)][t], e)]
    else:
        return None
    return generated_pair_subact(M, gens).pairs


def condition_violated(B, cond, witness) -> bool:
    """Re-check a failure witness by direct quantifier scan at the instance."""
    M = B.monoid
    lab = {v: k for k, v in enumerate(M.element_names)}
    cab = {v: k for k, v in enumerate(B.carrier_names)}
    if cond == "PWP":
        t, a, a2 = lab[witness["t"]], cab[witness["a"]], cab[witness["a2"]]
        if B.table[t][a] != B.table[t][a2]:
            return False
        for c in B.carrier():
            for u in M.elements():
                for v in M.elements():
                    if (
                        B.table[u][c] == a
                        and B.table[v][c] == a2
                        and M.mul[t][u] == M.mul[t][v]
                    ):
                        return False
        return True
    if cond == "W":
        s, t = lab[witness["s"]], lab[witness["t"]]
        a, a2 = cab[witness["a"]], cab[witness["a2"]]
        c = B.table[s][a]
        if B.table[t][a2] != c:
            return False
        cap = {M.mul[s][w] for w in M.elements()} & {
            M.mul[t][w] for w in M.elements()
        }
        return not any(c in set(B.table[u]) for u in cap)
    if cond == "P":
        s, s2 = lab[witness["s"]], lab[witness["s2"]]
        b, b2 = cab[witness["b"]], cab[witness["b2"]]
        if B.table[s][b] != B.table[s2][b2]:
            return False
        for c in B.carrier():
            for u in M.elements():
                for u2 in M.elements():
                    if (
                        B.table[u][c] == b
                        and B.table[u2][c] == b2
                        and M.mul[s][u] == M.mul[s2][u2]
                    ):
                        return False
        return True
    if cond == "E":
        s, s2, b = lab[witness["s"]], lab[witness["s2"]], cab[witness["b"]]
        if B.table[s][b] != B.table[s2][b]:
            return False
        for c in B.carrier():
            for u in M.elements():
                if B.table[u][c] == b and M.mul[s][u] == M.mul[s2][u]:
                    return False
        return True
    if cond == "EP":
        s, t, a = lab[witness["s"]], lab[witness["t"]], cab[witness["a"]]
        if B.table[s][a] != B.table[t][a]:
            return False
        for c in B.carrier():
            for u in M.elements():
                for v in M.elements():
                    if (
                        B.table[u][c] == a
                        and B.table[v][c] == a
                        and M.mul[s][u] == M.mul[t][v]
                    ):
                        return False
        return True
    if cond == "TF":
        s, a, b = lab[witness["s"]], cab[witness["a"]], cab[witness["b"]]
        cancellable = len(set(M.mul[s])) == M.size
        return cancellable and a != b and B.table[s][a] == B.table[s][b]
    raise AssertionError(f"no re-checker for {cond}")
