"""Characters of irreducible representations of the rank-2 symplectic
similitude group, evaluated on Frobenius classes.

The production path is a closed formula: with H_j the complete
homogeneous trace of degree j (trace of Frobenius on Sym^j of the
4-dimensional standard module, satisfying the linear recurrence cut out
by the characteristic polynomial), the irreducible character with
highest weight (l, m), normalized so the similitude character carries
weight (l+m)/2, is

    chi_{(l,m)} = H_l H_m + p H_l H_{m-2} - H_{l+1} H_{m-1} - p H_{l-1} H_{m-1}.

The independent check is Freudenthal's multiplicity recursion: expand
the full weight multiset of the irreducible, re-sum it as a polynomial
in (a1, a2, p), and compare.  That oracle is test-grade machinery and
deliberately slow; its budget is l + m <= 24.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import SimpleNamespace

FREUDENTHAL_BUDGET = 24

# positive roots of the rank-2 symplectic root system in the orthogonal
# basis, and the half-sum rho
_POSITIVE_ROOTS = ((1, -1), (1, 1), (2, 0), (0, 2))
_RHO = (2, 1)


@dataclass(frozen=True)
class LocalSystem:
    """Highest weight (l, m), l >= m >= 0, of an irreducible local system.

    Nonzero interesting cohomology requires l + m even (`parity_even`);
    odd systems pair with the quadratic-twist involution and every
    census-weighted character sum against them vanishes.
    """

    l: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.l, int) and isinstance(self.m, int)):
            raise ValueError("local system weights must be integers")
        if not self.l >= self.m >= 0:
            raise ValueError(f"local system needs l >= m >= 0, got ({self.l}, {self.m})")

    @property
    def parity_even(self) -> bool:
        return (self.l + self.m) % 2 == 0


def _h_list(a1, a2, p, n: int) -> list:
    """H_0..H_n for the quartic x^4 - a1 x^3 + a2 x^2 - p a1 x + p^2.

    Ring-generic: works for ints, Fractions, or the sparse polynomials
    used in the symbolic tests, since only +, -, * are used.
    """
    hs = [1]
    pa1 = p * a1
    p2 = p * p
    for j in range(1, n + 1):
        v = a1 * hs[j - 1]
        if j >= 2:
            v = v - a2 * hs[j - 2]
        if j >= 3:
            v = v + pa1 * hs[j - 3]
        if j >= 4:
            v = v - p2 * hs[j - 4]
        hs.append(v)
    return hs


def h_sequence(cls, n: int) -> list:
    """H_0, H_1, ..., H_n for a Frobenius class."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _h_list(cls.a1, cls.a2, cls.p, n)


def sp4_trace(sys: LocalSystem, cls):
    """Character of the irreducible with highest weight (l, m) at cls.

    `cls` is anything with integer-like a1, a2, p attributes; exactness
    is inherited from the inputs.
    """
    l, m = sys.l, sys.m
    hs = _h_list(cls.a1, cls.a2, cls.p, l + 1)

    def h(j):
        return hs[j] if j >= 0 else 0

    p = cls.p
    return h(l) * h(m) + p * h(l) * h(m - 2) - h(l + 1) * h(m - 1) \
        - p * h(l - 1) * h(m - 1)


def weyl_dimension(sys: LocalSystem) -> int:
    """dim of the irreducible with highest weight (l, m)."""
    l, m = sys.l, sys.m
    num = (l - m + 1) * (m + 1) * (l + 2) * (l + m + 3)
    assert num % 6 == 0
    return num // 6


# ---------------------------------------------------------------------------
# Freudenthal oracle

def _dot(a, b) -> int:
    return a[0] * b[0] + a[1] * b[1]


def freudenthal_oracle(sys: LocalSystem) -> dict[tuple[int, int], int]:
    """Full weight-multiplicity table of the irreducible (l, m).

    Freudenthal's recursion over dominant weights in increasing depth
    below the highest weight, then expanded over the Weyl group orbit
    (coordinate signs and swap).  The table sums to the Weyl dimension;
    that is asserted, so a recursion bug cannot escape unnoticed.
    """
    l, m = sys.l, sys.m
    if l + m > FREUDENTHAL_BUDGET:
        raise ValueError(
            f"Freudenthal oracle budget is l + m <= {FREUDENTHAL_BUDGET}")
    lam = (l, m)

    def cone_coords(w):
        # lam - w = c1 (1,-1) + c2 (0,2); weights of the irrep satisfy
        # c1, c2 integral and >= 0
        c1 = l - w[0]
        twice_c2 = l + m - w[0] - w[1]
        if twice_c2 % 2:
            return None
        c2 = twice_c2 // 2
        if c1 < 0 or c2 < 0:
            return None
        return c1, c2

    dominants = []
    for a in range(l, -1, -1):
        for b in range(min(a, l + m - a), -1, -1):
            cc = cone_coords((a, b))
            if cc is not None:
                dominants.append((cc[0] + cc[1], (a, b)))
    dominants.sort()

    def dominant_rep(w):
        a, b = abs(w[0]), abs(w[1])
        return (a, b) if a >= b else (b, a)

    lam_rho = (l + _RHO[0], m + _RHO[1])
    norm_top = _dot(lam_rho, lam_rho)
    mult: dict[tuple[int, int], int] = {lam: 1}

    for depth, mu in dominants:
        if mu == lam:
            continue
        rhs = 0
        for alpha in _POSITIVE_ROOTS:
            k = 1
            while True:
                nu = (mu[0] + k * alpha[0], mu[1] + k * alpha[1])
                if cone_coords(nu) is None:
                    break
                w = mult.get(dominant_rep(nu), 0)
                if w:
                    rhs += w * _dot(nu, alpha)
                k += 1
        mu_rho = (mu[0] + _RHO[0], mu[1] + _RHO[1])
        denom = norm_top - _dot(mu_rho, mu_rho)
        if denom == 0:
            assert rhs == 0, "Freudenthal numerator nonzero at a singular weight"
            continue
        assert (2 * rhs) % denom == 0
        value = 2 * rhs // denom
        if value:
            mult[mu] = value

    table: dict[tuple[int, int], int] = {}
    for (a, b), v in mult.items():
        orbit = {(a, b), (-a, b), (a, -b), (-a, -b),
                 (b, a), (-b, a), (b, -a), (-b, -a)}
        for w in orbit:
            table[w] = v
    assert sum(table.values()) == weyl_dimension(sys)
    return table


# ---------------------------------------------------------------------------
# symbolic comparison: weight table -> polynomial in (a1, a2, p)

class _Poly:
    """Sparse integer (Laurent) polynomial keyed by exponent tuples.

    Just enough arithmetic for the character identities: +, -, * with
    coercion of int scalars.  Exponents may be negative, which the
    greedy rewrite below relies on for the eigenvalue variables.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def variable(cls, index: int, nvars: int = 3) -> "_Poly":
        key = tuple(1 if i == index else 0 for i in range(nvars))
        return cls({key: 1})

    @classmethod
    def const(cls, c: int, nvars: int = 3) -> "_Poly":
        return cls({(0,) * nvars: c} if c else {})

    def _coerce(self, other):
        if isinstance(other, _Poly):
            return other
        if isinstance(other, int):
            nvars = len(next(iter(self.terms), (0, 0, 0)))
            return _Poly.const(other, nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return _Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return _Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                out[key] = out.get(key, 0) + v1 * v2
        return _Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, _Poly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self == _Poly.const(other, len(next(iter(self.terms), (0, 0, 0))))
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values):
        total = 0
        for key, c in self.terms.items():
            term = c
            for v, e in zip(values, key):
                term *= v ** e
            total += term
        return total

    def __repr__(self):
        return f"_Poly({self.terms})"


# the four eigenvalues are x1, x2, p/x1, p/x2; in (x1, x2, p)-exponent
# keys the elementary symmetric data of that quartet are
_A1_EXPANDED = _Poly({(1, 0, 0): 1, (0, 1, 0): 1, (-1, 0, 1): 1, (0, -1, 1): 1})
_A2_EXPANDED = _Poly({(1, 1, 0): 1, (1, -1, 1): 1, (-1, 1, 1): 1,
                      (-1, -1, 2): 1, (0, 0, 1): 2})
_P_EXPANDED = _Poly({(0, 0, 1): 1})


def character_polynomial(sys: LocalSystem, weights=None) -> _Poly:
    """Rewrite the oracle's weight sum as a polynomial in (a1, a2, p).

    The weight (a, b) contributes x1^a x2^b p^((l+m-a-b)/2).  The sum is
    invariant under the Weyl action on exponent keys, so its
    lexicographically largest term always has a >= b >= 0 and can be
    cancelled by the matching monomial a1^(a-b) a2^b p^c, whose own
    leading term it is.  Greedy cancellation therefore terminates with
    the (unique) polynomial expression of the character.
    """
    if weights is None:
        weights = freudenthal_oracle(sys)
    l, m = sys.l, sys.m
    residue: dict[tuple[int, int, int], int] = {}
    for (a, b), v in weights.items():
        e = l + m - a - b
        assert e % 2 == 0 and e >= 0
        key = (a, b, e // 2)
        residue[key] = residue.get(key, 0) + v
    x = _Poly(residue)

    pow_cache: dict[tuple[int, int, int], _Poly] = {}

    def monomial(i, j, k):
        key = (i, j, k)
        if key not in pow_cache:
            out = _Poly.const(1)
            for _ in range(i):
                out = out * _A1_EXPANDED
            for _ in range(j):
                out = out * _A2_EXPANDED
            for _ in range(k):
                out = out * _P_EXPANDED
            pow_cache[key] = out
        return pow_cache[key]

    result: dict[tuple[int, int, int], int] = {}
    for _ in range(100000):
        if not x.terms:
            break
        lead = max(x.terms)
        c = x.terms[lead]
        a, b, k = lead
        assert a >= b >= 0, f"invariance broken at leading term {lead}"
        result[(a - b, b, k)] = result.get((a - b, b, k), 0) + c
        x = x - c * monomial(a - b, b, k)
    else:
        raise AssertionError("character rewrite did not terminate")
    return _Poly(result)


def sp4_trace_polynomial(sys: LocalSystem) -> _Poly:
    """The production character formula as a polynomial in (a1, a2, p)."""
    generic = SimpleNamespace(a1=_Poly.variable(0), a2=_Poly.variable(1),
                              p=_Poly.variable(2))
    value = sp4_trace(sys, generic)
    if isinstance(value, int):
        value = _Poly.const(value)
    return value


def freudenthal_agreement(sys: LocalSystem, samples: int = 50, seed: int = 0) -> bool:
    """Exact agreement of oracle and production character.

    Compares the two as polynomials in (a1, a2, p) and additionally
    evaluates both on `samples` random integer triples, which is the
    form the acceptance criterion states.
    """
    import random

    oracle = character_polynomial(sys)
    production = sp4_trace_polynomial(sys)
    if oracle != production:
        return False
    rng = random.Random(seed + 1000 * sys.l + sys.m)
    for _ in range(samples):
        a1 = rng.randint(-9, 9)
        a2 = rng.randint(-30, 30)
        p = rng.randint(-9, 9)
        direct = sp4_trace(sys, SimpleNamespace(a1=a1, a2=a2, p=p))
        if oracle.evaluate((a1, a2, p)) != direct:
            return False
    return True
