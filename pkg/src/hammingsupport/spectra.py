"""Spectral decomposition of functions on H(n,q), in exact arithmetic.

The adjacency operator of H(n,q) has the n+1 eigenvalues

    lambda_i(n,q) = n(q-1) - q*i,   i = 0, ..., n,

with eigenspaces U_i(n,q).  The orthogonal projector E_i onto U_i acts by
direct summation against the Krawtchouk kernel:

    (E_i f)(x) = q^(-n) * sum_over_y K_i(d(x,y)) * f(y),

where d is Hamming distance and

    K_i(d) = sum_j (-1)^j (q-1)^(i-j) C(d,j) C(n-d,i-j).

Everything here is rational with denominator dividing q^n; there is no
tolerance parameter anywhere (exact equality or nothing).  Membership in a
direct sum U_[i,j] = U_i + ... + U_j is decided by checking that every
projection outside [i,j] vanishes, so no eigenbasis is ever materialized.

All functions are pure; cached tables are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from .core import GridFunction

# Direct summation walks all q^n * q^n vertex pairs, so cap the dense scale.
MAX_DENSE_VERTICES = 6000

_BUMP = bytes(min(i + 1, 255) for i in range(256))


class ScaleError(ValueError):
    """q^n too large for dense projector arithmetic."""


def _check_scale(n: int, q: int) -> int:
    size = q**n
    if size > MAX_DENSE_VERTICES:
        raise ScaleError(f"q^n = {size} exceeds dense limit {MAX_DENSE_VERTICES}")
    return size


def _check_eigenindex(n: int, i: int) -> None:
    if not 0 <= i <= n:
        raise ValueError(f"eigenspace index {i} out of range [0, {n}]")


def validate_range(n: int, lo: int, hi: int) -> None:
    if not 0 <= lo <= hi <= n:
        raise ValueError(f"invalid eigenspace range [{lo}, {hi}] for n = {n}")


def eigenvalue(n: int, q: int, i: int) -> int:
    """lambda_i(n,q) = n(q-1) - q*i."""
    _check_eigenindex(n, i)
    return n * (q - 1) - q * i


def krawtchouk(n: int, q: int, i: int, d: int) -> int:
    _check_eigenindex(n, i)
    _check_eigenindex(n, d)
    return sum(
        (-1) ** j * (q - 1) ** (i - j) * comb(d, j) * comb(n - d, i - j)
        for j in range(i + 1)
    )


@lru_cache(maxsize=None)
def krawtchouk_table(n: int, q: int) -> tuple[tuple[int, ...], ...]:
    """table[i][d] = K_i(d) for the (n,q) Hamming scheme."""
    return tuple(
        tuple(krawtchouk(n, q, i, d) for d in range(n + 1)) for i in range(n + 1)
    )


def eigenspace_dimension(n: int, q: int, i: int) -> int:
    """dim U_i(n,q) = C(n,i)(q-1)^i, cross-checked against trace E_i = K_i(0)."""
    dim = comb(n, i) * (q - 1) ** i
    assert dim == krawtchouk(n, q, i, 0)
    return dim


@lru_cache(maxsize=8)
def _distance_rows(n: int, q: int) -> tuple[bytes, ...]:
    """rows[x][y] = Hamming distance between the words with indices x, y."""
    _check_scale(n, q)
    rows: list[bytes] = [b"\x00"]
    size = 1
    for _ in range(n):
        new_rows: list[bytes] = []
        for row in rows:
            expanded = bytearray(size * q)
            for b in range(q):
                expanded[b::q] = row
            bumped = expanded.translate(_BUMP)
            for a in range(q):
                block = bytearray(bumped)
                block[a::q] = row
                new_rows.append(bytes(block))
        rows = new_rows
        size *= q
    return tuple(rows)


def _scaled_integers(f: GridFunction) -> tuple[list[int], int]:
    """Values as integers over a common denominator."""
    den = 1
    for v in f.values:
        den = lcm(den, v.denominator)
    return [v.numerator * (den // v.denominator) for v in f.values], den


def _bucket_sums(f: GridFunction) -> tuple[list[list[int]], int]:
    """buckets[x][d] = sum of scaled f over vertices at distance d from x."""
    size = _check_scale(f.n, f.q)
    rows = _distance_rows(f.n, f.q)
    nums, den = _scaled_integers(f)
    nonzero = [(idx, v) for idx, v in enumerate(nums) if v]
    width = f.n + 1
    buckets = []
    for x in range(size):
        row = rows[x]
        b = [0] * width
        for idx, v in nonzero:
            b[row[idx]] += v
        buckets.append(b)
    return buckets, den


def _combined_kernel(n: int, q: int, indices) -> list[int]:
    table = krawtchouk_table(n, q)
    return [sum(table[t][d] for t in indices) for d in range(n + 1)]


def _projection_from_buckets(
    f: GridFunction, buckets: list[list[int]], den: int, kernel: list[int]
) -> GridFunction:
    scale = den * f.q**f.n
    drange = range(f.n + 1)
    values = tuple(
        Fraction(sum(kernel[d] * b[d] for d in drange), scale) for b in buckets
    )
    return GridFunction(f.n, f.q, values)


def project_eigenspace(f: GridFunction, i: int) -> GridFunction:
    """E_i f by direct Krawtchouk summation over all vertex pairs."""
    _check_eigenindex(f.n, i)
    buckets, den = _bucket_sums(f)
    return _projection_from_buckets(f, buckets, den, _combined_kernel(f.n, f.q, (i,)))


def project_span(f: GridFunction, lo: int, hi: int) -> GridFunction:
    """(E_lo + ... + E_hi) f, the projection onto U_[lo,hi]."""
    validate_range(f.n, lo, hi)
    buckets, den = _bucket_sums(f)
    kernel = _combined_kernel(f.n, f.q, range(lo, hi + 1))
    return _projection_from_buckets(f, buckets, den, kernel)


def decompose(f: GridFunction) -> list[GridFunction]:
    """All projections [E_0 f, ..., E_n f]; they sum back to f exactly."""
    buckets, den = _bucket_sums(f)
    table = krawtchouk_table(f.n, f.q)
    return [
        _projection_from_buckets(f, buckets, den, list(table[i]))
        for i in range(f.n + 1)
    ]


def spectral_profile(f: GridFunction) -> tuple[int, ...]:
    """Indices i with E_i f != 0 (the empty tuple for the zero function)."""
    buckets, _ = _bucket_sums(f)
    table = krawtchouk_table(f.n, f.q)
    drange = range(f.n + 1)
    out = []
    for i in range(f.n + 1):
        kernel = table[i]
        if any(sum(kernel[d] * b[d] for d in drange) for b in buckets):
            out.append(i)
    return tuple(out)


def in_direct_sum(f: GridFunction, lo: int, hi: int) -> bool:
    """Whether f lies in U_[lo,hi](n,q).

    The zero function belongs to every subspace; callers that need a
    nonzero function must check support separately.
    """
    validate_range(f.n, lo, hi)
    buckets, _ = _bucket_sums(f)
    table = krawtchouk_table(f.n, f.q)
    drange = range(f.n + 1)
    for i in range(f.n + 1):
        if lo <= i <= hi:
            continue
        kernel = table[i]
        if any(sum(kernel[d] * b[d] for d in drange) for b in buckets):
            return False
    return True


def apply_adjacency(f: GridFunction) -> GridFunction:
    """(Af)(x) = sum of f over the neighbors of x."""
    nums, den = _scaled_integers(f)
    out = _apply_adjacency_int(nums, f.n, f.q)
    return GridFunction(f.n, f.q, tuple(Fraction(v, den) for v in out))


def _apply_adjacency_int(nums: list[int], n: int, q: int) -> list[int]:
    size = q**n
    out = [0] * size
    stride = 1
    for _ in range(n):
        period = stride * q
        for base in range(0, size, period):
            for off in range(stride):
                start = base + off
                fiber = range(start, base + period, stride)
                total = sum(nums[idx] for idx in fiber)
                for idx in fiber:
                    out[idx] += total - nums[idx]
        stride = period
    return out


def is_eigenfunction(f: GridFunction, i: int) -> bool:
    """Whether A f = lambda_i(n,q) f exactly (vacuously true for f = 0)."""
    _check_eigenindex(f.n, i)
    lam = eigenvalue(f.n, f.q, i)
    nums, _ = _scaled_integers(f)
    return _apply_adjacency_int(nums, f.n, f.q) == [lam * v for v in nums]
