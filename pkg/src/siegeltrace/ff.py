"""Small odd-characteristic finite fields with quadratic character tables.

Everything downstream counts points on curves y^2 = f(x), so the only
field data that matters is cheap arithmetic on canonical integer
representatives plus a precomputed table of the quadratic character chi
(chi(0) = 0, chi(square) = +1, chi(non-square) = -1).  Elements of F_p
are the integers 0..p-1; elements of F_{p^2} = F_p(t), t^2 = d with d
the smallest positive non-residue, are encoded as the index u + p*v for
u + v*t.  Both fields keep their character table as a plain list so the
census kernels can lift it into numpy without reaching back here.
"""

from __future__ import annotations


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """F_p for an odd prime p, elements 0..p-1."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        self.p = p
        self.q = p
        self.degree = 1
        # chi[a] = a^((p-1)/2) in {-1, 0, +1}, built by marking squares.
        chi = [-1] * p
        chi[0] = 0
        for x in range(1, p):
            chi[x * x % p] = 1
        self.chi = chi
        assert sum(chi) == 0 and chi.count(1) == (p - 1) // 2

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def embed(self, n: int) -> int:
        """Canonical image of an integer."""
        return n % self.p

    def elements(self) -> range:
        return range(self.p)

    def non_residue(self) -> int:
        """Smallest positive quadratic non-residue."""
        for d in range(2, self.p):
            if self.chi[d] == -1:
                return d
        raise AssertionError("no non-residue found")  # unreachable for p > 2

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class QuadExtField:
    """F_{p^2} = F_p(t), t^2 = d, element u + v*t encoded as u + p*v."""

    def __init__(self, base: PrimeField):
        p = base.p
        self.base = base
        self.p = p
        self.q = p * p
        self.degree = 2
        self.d = base.non_residue()
        # chi on F_{p^2} factors through the norm:
        # chi_{p^2}(x) = x^((p^2-1)/2) = (N x)^((p-1)/2) = chi_p(N x),
        # and N(u + v*t) = u^2 - d*v^2.
        d, chi_p = self.d, base.chi
        chi = [0] * self.q
        for v in range(p):
            dv2 = d * v * v % p
            for u in range(p):
                chi[u + p * v] = chi_p[(u * u - dv2) % p]
        self.chi = chi
        assert chi.count(1) == (self.q - 1) // 2 and chi.count(-1) == (self.q - 1) // 2

    def coords(self, a: int) -> tuple[int, int]:
        return a % self.p, a // self.p

    def add(self, a: int, b: int) -> int:
        p = self.p
        u1, v1 = a % p, a // p
        u2, v2 = b % p, b // p
        return (u1 + u2) % p + p * ((v1 + v2) % p)

    def sub(self, a: int, b: int) -> int:
        p = self.p
        u1, v1 = a % p, a // p
        u2, v2 = b % p, b // p
        return (u1 - u2) % p + p * ((v1 - v2) % p)

    def mul(self, a: int, b: int) -> int:
        p, d = self.p, self.d
        u1, v1 = a % p, a // p
        u2, v2 = b % p, b // p
        return (u1 * u2 + d * v1 * v2) % p + p * ((u1 * v2 + u2 * v1) % p)

    def neg(self, a: int) -> int:
        p = self.p
        return -a % p + p * (-(a // p) % p)

    def norm(self, a: int) -> int:
        """N(a) = a * a^p as an element of the base field."""
        p, d = self.p, self.d
        u, v = a % p, a // p
        return (u * u - d * v * v) % p

    def frobenius(self, a: int) -> int:
        p = self.p
        return a % p + p * (-(a // p) % p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        n_inv = self.base.inv(self.norm(a))
        return self.mul(self.frobenius(a), n_inv)

    def embed(self, n: int) -> int:
        """Canonical image of an integer (lands in the prime subfield)."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"QuadExtField({self.p}^2, t^2={self.d})"


def build_prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def build_quad_ext(field: PrimeField) -> QuadExtField:
    return QuadExtField(field)
