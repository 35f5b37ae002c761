"""Classical sl(N) tensor-product machinery (N = 3, 4).

Weight multiplicities come from Gelfand-Tsetlin pattern counting and
tensor products from the Racah-Speiser reflection algorithm, so the
results are exact and independent of any diagrammatic computation.
Dominant weights are given in fundamental-weight coordinates, e.g.
(a, b) for a*lambda1 + b*lambda2 in sl3.
"""

from __future__ import annotations

from functools import lru_cache


def _partition(N: int, fund: tuple[int, ...]) -> tuple[int, ...]:
    if len(fund) != N - 1 or any(a < 0 for a in fund):
        raise ValueError(f"bad sl({N}) weight {fund}")
    parts = [0] * N
    total = 0
    for i in range(N - 2, -1, -1):
        total += fund[i]
        parts[i] = total
    return tuple(parts)


def _fund_from_partition(part) -> tuple[int, ...]:
    return tuple(part[i] - part[i + 1] for i in range(len(part) - 1))


def dual_weight(fund: tuple[int, ...]) -> tuple[int, ...]:
    """Highest weight of the dual representation."""
    return tuple(reversed(fund))


@lru_cache(maxsize=None)
def weyl_dim(N: int, fund: tuple[int, ...]) -> int:
    p = _partition(N, fund)
    num = 1
    den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= p[i] - p[j] + j - i
            den *= j - i
    return num // den


def _gt_rows(row: tuple[int, ...]):
    # all rows interlacing below `row`
    if len(row) == 1:
        yield ()
        return
    ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]

    def rec(i, acc):
        if i == len(ranges):
            yield tuple(acc)
            return
        for x in ranges[i]:
            if acc and x > acc[-1]:
                continue
            acc.append(x)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@lru_cache(maxsize=None)
def weight_multiplicities(N: int, fund: tuple[int, ...]) -> dict:
    """gl-weight -> multiplicity for the irreducible with highest weight fund."""
    top = _partition(N, fund)
    out: dict[tuple[int, ...], int] = {}

    def rec(rows):
        row = rows[-1]
        if len(row) == 1:
            totals = {len(r): sum(r) for r in rows}
            totals[0] = 0
            w = tuple(totals[k] - totals[k - 1] for k in range(1, N + 1))
            out[w] = out.get(w, 0) + 1
            return
        for nxt in _gt_rows(row):
            rec(rows + [nxt])

    rec([top])
    return dict(out)


def _parity_sign(values) -> int:
    # sign of the permutation sorting `values` into decreasing order
    inv = 0
    vals = list(values)
    n = len(vals)
    for i in range(n):
        for j in range(i + 1, n):
            if vals[i] < vals[j]:
                inv += 1
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def decompose_product(N: int, lam: tuple[int, ...], mu: tuple[int, ...]) -> tuple:
    """Decompose V_lam (x) V_mu into irreducibles; returns ((weight, mult), ...)."""
    if weyl_dim(N, mu) > weyl_dim(N, lam):
        lam, mu = mu, lam
    plam = _partition(N, lam)
    delta = tuple(range(N - 1, -1, -1))
    acc: dict[tuple[int, ...], int] = {}
    for w, m in weight_multiplicities(N, mu).items():
        y = [plam[i] + w[i] + delta[i] for i in range(N)]
        if len(set(y)) < N:
            continue
        sign = _parity_sign(y)
        ys = sorted(y, reverse=True)
        part = [ys[i] - delta[i] for i in range(N)]
        base = part[-1]
        part = tuple(x - base for x in part)
        fund = _fund_from_partition(part)
        acc[fund] = acc.get(fund, 0) + sign * m
    result = tuple(sorted((k, v) for k, v in acc.items() if v))
    assert all(v > 0 for _, v in result), "Racah-Speiser produced a negative multiplicity"
    assert sum(v * weyl_dim(N, k) for k, v in result) == weyl_dim(N, lam) * weyl_dim(
        N, mu
    ), "dimension mismatch in tensor decomposition"
    return result


def tensor_multiplicity(
    N: int, lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]
) -> int:
    """Multiplicity of V_nu inside V_lam (x) V_mu."""
    for k, v in decompose_product(N, lam, mu):
        if k == nu:
            return v
    return 0


def decompose_many(N: int, weights) -> dict:
    """Decompose a tensor product of several irreducibles; weight -> mult."""
    acc = {tuple([0] * (N - 1)): 1}
    for w in weights:
        w = tuple(w)
        nxt: dict[tuple[int, ...], int] = {}
        for k, m in acc.items():
            for k2, m2 in decompose_product(N, k, w):
                nxt[k2] = nxt.get(k2, 0) + m * m2
        acc = nxt
    return acc


def dim_invariant_space(N: int, weights) -> int:
    """Dimension of the invariant subspace of a tensor product."""
    trivial = tuple([0] * (N - 1))
    return decompose_many(N, weights).get(trivial, 0)
