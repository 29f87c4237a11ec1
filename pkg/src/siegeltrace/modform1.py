"""Level-1 elliptic modular forms and elliptic-curve Lefschetz traces.

Everything here is exact integer arithmetic on q-expansion prefixes.
Cusp form spaces are realized through the echelonized monomial basis in
the two Eisenstein series and the discriminant cusp form; Hecke traces
are read off the diagonal of T_p in that basis.  The bridge to curve
censuses is `trace_ec_a1`, the mass-weighted symmetric-power trace over
an elliptic census, which equals -Tr T(p) - 1 on the matching cusp
space; that identity is one of the standing self-checks.
"""

from __future__ import annotations

from .census import EllipticCensus, elliptic_census
from .ff import build_prime_field


def dim_cusp_sl2(k: int) -> int:
    """Dimension of the weight-k level-1 cusp space (0 for odd or small k)."""
    if k < 4 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12 - 1
    return k // 12


def _series_mul(a: list[int], b: list[int], terms: int) -> list[int]:
    out = [0] * terms
    for i, ai in enumerate(a):
        if ai == 0 or i >= terms:
            continue
        top = min(len(b), terms - i)
        for j in range(top):
            out[i + j] += ai * b[j]
    return out


def _series_pow(a: list[int], n: int, terms: int) -> list[int]:
    out = [1] + [0] * (terms - 1)
    base = list(a[:terms]) + [0] * max(0, terms - len(a))
    while n:
        if n & 1:
            out = _series_mul(out, base, terms)
        base = _series_mul(base, base, terms)
        n >>= 1
    return out


def _divisor_power_sums(k: int, terms: int) -> list[int]:
    """sigma_k(n) for n = 0..terms-1 (index 0 unused, set to 0)."""
    sig = [0] * terms
    for d in range(1, terms):
        dk = d ** k
        for n in range(d, terms, d):
            sig[n] += dk
    return sig


def eisenstein_series(k: int, terms: int) -> list[int]:
    """Normalized E_4 or E_6 q-expansion, constant term 1."""
    if k == 4:
        c, e = 240, 3
    elif k == 6:
        c, e = -504, 5
    else:
        raise ValueError("only weights 4 and 6 are generators here")
    sig = _divisor_power_sums(e, terms)
    return [1] + [c * sig[n] for n in range(1, terms)]


def delta_series(terms: int) -> list[int]:
    """Discriminant cusp form via (E4^3 - E6^2)/1728, exact division."""
    e4 = eisenstein_series(4, terms)
    e6 = eisenstein_series(6, terms)
    num = _series_pow(e4, 3, terms)
    sq = _series_mul(e6, e6, terms)
    out = []
    for a, b in zip(num, sq):
        d = a - b
        assert d % 1728 == 0
        out.append(d // 1728)
    return out


def delta_series_product(terms: int) -> list[int]:
    """Independent discriminant expansion: q times the 24th power of
    the Euler product prefix.  Test oracle for `delta_series`."""
    euler = [1] + [0] * (terms - 1)
    for n in range(1, terms):
        # multiply by (1 - q^n) in place
        for i in range(terms - 1, n - 1, -1):
            euler[i] -= euler[i - n]
    p24 = _series_pow(euler, 24, terms)
    return [0] + p24[: terms - 1]


def cusp_basis(k: int, terms: int) -> list[list[int]]:
    """Echelon basis of weight-k cusp forms: f_j = q^j + O(q^(d+1)).

    Built from delta^j E4^b E6^c monomials and integer Gauss-Jordan
    elimination; the unitriangular leading block keeps everything in Z.
    """
    d = dim_cusp_sl2(k)
    if d == 0:
        return []
    if terms <= d:
        raise ValueError("need more terms than the dimension to echelonize")
    e4 = eisenstein_series(4, terms)
    e6 = eisenstein_series(6, terms)
    delta = delta_series(terms)
    rows = []
    for j in range(1, d + 1):
        c = (k // 2) % 2
        rem = k - 12 * j - 6 * c
        assert rem >= 0 and rem % 4 == 0
        b = rem // 4
        row = _series_pow(delta, j, terms)
        row = _series_mul(row, _series_pow(e4, b, terms), terms)
        if c:
            row = _series_mul(row, e6, terms)
        rows.append(row)
    for piv in range(d):
        pivot_row = rows[piv]
        assert pivot_row[piv + 1] == 1
        for i in range(d):
            if i == piv:
                continue
            c = rows[i][piv + 1]
            if c:
                rows[i] = [x - c * y for x, y in zip(rows[i], pivot_row)]
    return rows


def trace_hecke_sl2(k: int, p: int) -> int:
    """Trace of the Hecke operator T_p on weight-k level-1 cusp forms.

    Uses (T_p f)_n = a_{np} + p^(k-1) a_{n/p} on the echelon basis, so
    only the diagonal coefficients are summed.
    """
    if k < 0 or k % 2:
        if k % 2:
            return 0
        raise ValueError("weight must be nonnegative")
    d = dim_cusp_sl2(k)
    if d == 0:
        return 0
    build_prime_field(p)  # validates p is an odd prime
    terms = p * (d + 1)
    basis = cusp_basis(k, terms)
    total = 0
    for j in range(1, d + 1):
        f = basis[j - 1]
        t = f[j * p]
        if j % p == 0:
            t += p ** (k - 1) * f[j // p]
        total += t
    return total


def sym_power_trace(n: int, a: int, p: int) -> int:
    """Trace on Sym^n of a rank-2 member with trace a and determinant p."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    u_prev, u = 1, a
    if n == 0:
        return 1
    for _ in range(n - 1):
        u_prev, u = u, a * u - p * u_prev
    return u


def trace_ec_a1(n: int, p: int, census: EllipticCensus | None = None) -> int:
    """Mass-weighted Sym^n Frobenius trace over the prime-field elliptic
    census: sum of count(a) * u_n(a) divided by the normalizer order.

    Vanishes for odd n (quadratic twisting), and for even n >= 2 equals
    -Tr T_p on weight-(n+2) cusp forms, minus 1.
    """
    if census is None:
        census = elliptic_census(build_prime_field(p))
    if census.degree != 1 or census.p != p:
        raise ValueError("need the prime-field census for this p")
    num = 0
    for a, count in census.counts.items():
        num += count * sym_power_trace(n, a, p)
    den = census.normalizer
    assert num % den == 0
    return num // den
