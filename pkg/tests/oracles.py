"""Brute-force reference implementations used to cross-check the library.

Nothing here imports the search code it checks: the oracles scan complete
tables, all subsets or all permutations.
"""
from itertools import permutations, product

# Products in the KL basis of S3, row a, column b, entered by hand.
KL_S3_BASIS = ("e", "s", "t", "st", "ts", "w0")
KL_S3_TABLE = {
    "e": ("e", "s", "t", "st", "ts", "w0"),
    "s": ("s", "2s", "st", "2st", "s+w0", "2w0"),
    "t": ("t", "ts", "2t", "t+w0", "2ts", "2w0"),
    "st": ("st", "s+w0", "2st", "st+2w0", "2s+2w0", "4w0"),
    "ts": ("ts", "2ts", "t+w0", "2t+2w0", "ts+2w0", "4w0"),
    "w0": ("w0", "2w0", "2w0", "4w0", "4w0", "6w0"),
}


def parse_term_sum(text, basis=KL_S3_BASIS):
    out = [0] * len(basis)
    for term in text.split("+"):
        digits = ""
        while term and term[0].isdigit():
            digits, term = digits + term[0], term[1:]
        out[basis.index(term)] += int(digits or 1)
    return tuple(out)


def brute_commutative_monoids(n, semilattice=False):
    """Count isomorphism classes of commutative monoids of order n by scanning
    every table and every relabelling fixing the identity."""
    free = [(i, j) for i in range(1, n) for j in range(i, n)]
    classes = set()
    for values in product(range(n), repeat=len(free)):
        T = [[0] * n for _ in range(n)]
        for x in range(n):
            T[0][x] = T[x][0] = x
        for (i, j), v in zip(free, values):
            T[i][j] = T[j][i] = v
        if semilattice and any(T[i][i] != i for i in range(n)):
            continue
        if any(T[T[a][b]][c] != T[a][T[b][c]] for a in range(n) for b in range(n) for c in range(n)):
            continue
        forms = []
        for perm in permutations(range(1, n)):
            p = (0,) + perm
            inv = [0] * n
            for a, b in enumerate(p):
                inv[b] = a
            forms.append(tuple(p[T[inv[a]][inv[b]]] for a in range(n) for b in range(n)))
        classes.add(min(forms))
    return len(classes)


def brute_isomorphic(M, N):
    """Try every bijection fixing zero."""
    if M.size != N.size or M.semiring != N.semiring:
        return False
    rest_m = [m for m in range(M.size) if m != M.zero]
    rest_n = [m for m in range(N.size) if m != N.zero]
    for perm in permutations(rest_n):
        f = [0] * M.size
        f[M.zero] = N.zero
        for a, b in zip(rest_m, perm):
            f[a] = b
        if all(f[M.add[a][b]] == N.add[f[a]][f[b]] for a in range(M.size) for b in range(M.size)) and \
                all(f[g[m]] == h[f[m]] for g, h in zip(M.actions, N.actions) for m in range(M.size)):
            return True
    return False


def brute_minimal(M):
    """No subset strictly between {0} and M is closed under + and the actions."""
    if M.size < 2:
        return False
    others = [m for m in range(M.size) if m != M.zero]
    for mask in range(1, (1 << len(others)) - 1):
        S = {M.zero} | {others[i] for i in range(len(others)) if mask >> i & 1}
        if all(M.add[a][b] in S for a in S for b in S) and all(f[a] in S for f in M.actions for a in S):
            return False
    return True


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def brute_congruences(M):
    """Every partition compatible with + and the actions."""
    out = []
    for part in _set_partitions(list(range(M.size))):
        idx = {}
        for i, b in enumerate(part):
            for x in b:
                idx[x] = i
        ok = True
        for b in part:
            for x in b:
                for y in b:
                    if any(idx[M.add[x][k]] != idx[M.add[y][k]] for k in range(M.size)) or \
                            any(idx[f[x]] != idx[f[y]] for f in M.actions):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(sorted(sorted(b) for b in part))
    return out


def brute_elementary(M):
    if M.size < 2:
        return False
    return len(brute_congruences(M)) == 2
