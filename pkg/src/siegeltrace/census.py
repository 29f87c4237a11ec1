"""Exhaustive point-counting censuses of curves over small finite fields.

Two histograms feed the trace machinery:

* the elliptic census over F_q (q = p or p^2): every model
  y^2 = x^3 + c2 x^2 + c4 x + c6 with nonzero cubic discriminant,
  keyed by the Frobenius trace a = q + 1 - #E(F_q), normalizer q(q-1);

* the genus-2 census over F_p: every squarefree binary sextic
  F(x, z) = sum f_i x^i z^(6-i), keyed by the Frobenius class (a1, a2)
  of y^2 = F read off from the point counts over F_p and F_{p^2},
  normalizer |GL_2(F_p)|.

Dividing a histogram by its normalizer turns model counts into groupoid
masses (one per isomorphism class, weighted by 1/|Aut|), which is the
measure the Lefschetz sums downstream integrate against.  The builders
enumerate coefficient blocks with numpy in machine words; everything
that leaves this module is exact Python int / Fraction arithmetic.

The enumeration never samples: the mass identities (sum = q, resp. p^3)
are zero-tolerance checks run on every build and on every cache load.
"""

from __future__ import annotations

import csv
import hashlib
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

import numpy as np

from .ff import PrimeField, QuadExtField
from .oracles import genus2_point_count_reference

FORMAT_MAGIC = "siegeltrace-census"
FORMAT_VERSION = 1

# Enumerating F_p^7 grows as p^7; this is the largest prime the exhaustive
# genus-2 builder accepts by default.
GENUS2_PRIME_BUDGET = 13


class CensusError(Exception):
    """A census invariant failed: this signals a point-counting bug."""


class CacheError(Exception):
    """A census cache file is missing, malformed, or fails integrity checks."""


# ---------------------------------------------------------------------------
# Frobenius conjugacy classes

@dataclass(frozen=True, order=True)
class FrobeniusClass:
    """Semisimple Frobenius class of an abelian surface over F_p.

    The characteristic polynomial is
    x^4 - a1 x^3 + a2 x^2 - p a1 x + p^2, so (a1, a2) are the first two
    power-sum/elementary data and all four roots have absolute value
    sqrt(p).  No validation happens here; `frobenius_class` is the
    checked constructor used on point-count data.
    """

    p: int
    a1: int
    a2: int

    def char_poly(self) -> tuple[int, int, int, int, int]:
        return (1, -self.a1, self.a2, -self.p * self.a1, self.p * self.p)


def frobenius_class(n1: int, n2: int, p: int) -> FrobeniusClass:
    """Class (a1, a2) from the point counts N1 = #C(F_p), N2 = #C(F_{p^2}).

    a1 = p + 1 - N1 and a2 = (a1^2 - (p^2 + 1 - N2)) / 2; the division
    must be exact and the Weil bounds |a1| <= 4 sqrt(p), |a2| <= 6p must
    hold, otherwise the input counts cannot come from a smooth curve.
    """
    a1 = p + 1 - n1
    num = a1 * a1 - (p * p + 1 - n2)
    if num % 2:
        raise CensusError(
            f"non-integral a2 from N1={n1}, N2={n2}, p={p}: point-counting bug")
    a2 = num // 2
    if a1 * a1 > 16 * p or abs(a2) > 6 * p:
        raise CensusError(
            f"Weil bound violated by (a1, a2) = ({a1}, {a2}) at p={p}")
    return FrobeniusClass(p, a1, a2)


def weil_root_check(cls: FrobeniusClass, tol: float = 1e-9) -> bool:
    """Numerical diagnostic: all roots of the quartic have |root| = sqrt(p).

    The only floating-point computation in the package; production
    arithmetic never depends on it.
    """
    roots = np.roots(cls.char_poly())
    target = cls.p ** 0.5
    return bool(np.all(np.abs(np.abs(roots) - target) <= tol * (1.0 + target)))


def genus2_point_count(coeffs, field) -> int:
    """#C(F_q) for y^2 = F(x, z) with F the sextic homogenization of coeffs.

    Scalar reference implementation; the census builder uses a
    vectorized equivalent that is tested against this one.
    """
    return genus2_point_count_reference(coeffs, field)


# ---------------------------------------------------------------------------
# census containers

@dataclass
class EllipticCensus:
    """Histogram of Frobenius traces over all smooth cubic models over F_q."""

    p: int
    q: int
    degree: int
    counts: dict[int, int]

    @property
    def normalizer(self) -> int:
        return self.q * (self.q - 1)

    @property
    def total_models(self) -> int:
        return sum(self.counts.values())

    def mass(self) -> Fraction:
        return Fraction(self.total_models, self.normalizer)

    def check(self) -> None:
        q = self.q
        if self.total_models != q * q * (q - 1):
            raise CensusError(
                f"elliptic census q={q}: {self.total_models} models, "
                f"expected {q * q * (q - 1)}")
        if self.mass() != q:
            raise CensusError(f"elliptic census q={q}: mass {self.mass()} != {q}")
        amax = isqrt(4 * q)
        for a, c in self.counts.items():
            if c < 0 or abs(a) > amax:
                raise CensusError(f"elliptic census q={q}: Hasse bound broken at a={a}")
            if self.counts.get(-a, 0) != c:
                raise CensusError(f"elliptic census q={q}: twist asymmetry at a={a}")


@dataclass
class CensusTable:
    """Histogram of genus-2 Frobenius classes over all squarefree sextics."""

    p: int
    counts: dict[tuple[int, int], int]

    @property
    def normalizer(self) -> int:
        p = self.p
        return (p * p - 1) * (p * p - p)  # |GL_2(F_p)|

    @property
    def total_models(self) -> int:
        return sum(self.counts.values())

    def mass(self) -> Fraction:
        return Fraction(self.total_models, self.normalizer)

    def check(self) -> None:
        p = self.p
        expected = (p - 1) * (p ** 6 - p ** 4)
        if self.total_models != expected:
            raise CensusError(
                f"genus-2 census p={p}: {self.total_models} models, expected {expected}")
        if self.mass() != p ** 3:
            raise CensusError(f"genus-2 census p={p}: mass {self.mass()} != {p ** 3}")
        for (a1, a2), c in self.counts.items():
            if c < 0 or a1 * a1 > 16 * p or abs(a2) > 6 * p:
                raise CensusError(
                    f"genus-2 census p={p}: Weil bound broken at ({a1}, {a2})")
            if self.counts.get((-a1, a2), 0) != c:
                raise CensusError(
                    f"genus-2 census p={p}: twist asymmetry at ({a1}, {a2})")

    def classes(self):
        for (a1, a2), c in sorted(self.counts.items()):
            yield FrobeniusClass(self.p, a1, a2), c


# ---------------------------------------------------------------------------
# elliptic census builder

def elliptic_census(field: PrimeField | QuadExtField) -> EllipticCensus:
    """Exhaustive census of y^2 = x^3 + c2 x^2 + c4 x + c6 over F_q.

    Enumerates all q^3 coefficient triples, drops the q^2 models whose
    cubic has a repeated root, and histograms a = q + 1 - #E(F_q).  The
    (c4, c6)-plane is processed per c2 in one shot: value multiplicities
    are correlated against the shifted character table by an exact
    float64 matmul (all entries bounded by q, far below 2^53).
    """
    q, p = field.q, field.p
    idx = np.arange(q, dtype=np.int64)
    if field.degree == 1:
        add = (idx[:, None] + idx[None, :]) % p
        mul = (idx[:, None] * idx[None, :]) % p
        neg = (-idx) % p
    else:
        u, v = idx % p, idx // p
        d = field.d
        u1, v1, u2, v2 = u[:, None], v[:, None], u[None, :], v[None, :]
        add = (u1 + u2) % p + p * ((v1 + v2) % p)
        mul = (u1 * u2 + d * v1 * v2) % p + p * ((u1 * v2 + u2 * v1) % p)
        neg = (-u) % p + p * ((-v) % p)
    chi = np.array(field.chi, dtype=np.int64)
    chi_add = chi[add].astype(np.float64)

    squares = mul[idx, idx]
    cubes = mul[squares, idx]
    e18, e4, e27 = field.embed(18), field.embed(4), field.embed(27)
    amax = isqrt(4 * q)
    hist = np.zeros(2 * amax + 1, dtype=np.int64)
    rows = np.arange(q)[:, None]

    for c2 in range(q):
        c2sq = int(mul[c2, c2])
        c2cu = int(mul[c2sq, c2])
        base = add[cubes, mul[c2, squares]]        # x^3 + c2 x^2 over x
        values = add[base[None, :], mul]           # [c4, x]
        counts = np.zeros((q, q), dtype=np.float64)
        np.add.at(counts, (rows, values), 1.0)
        corr = counts @ chi_add                    # [c4, c6] -> sum_x chi(f(x))
        corr_int = np.rint(corr).astype(np.int64)
        if not np.all(corr == corr_int):
            raise CensusError("character correlation left float64 exactness")

        # disc = 18 c2 c4 c6 - 4 c2^3 c6 + c2^2 c4^2 - 4 c4^3 - 27 c6^2
        t1 = mul[mul[int(mul[e18, c2]), idx][:, None], idx[None, :]]
        t2 = mul[int(mul[e4, c2cu]), idx][None, :]
        t3 = mul[c2sq, squares][:, None]
        t4 = mul[e4, cubes][:, None]
        t5 = mul[e27, squares][None, :]
        disc = add[add[t1, t3], add[neg[t2], add[neg[t4], neg[t5]]]]
        mask = disc != 0

        a = -corr_int[mask]
        if a.size and np.abs(a).max() > amax:
            raise CensusError(f"elliptic census q={q}: trace outside Hasse bound")
        hist += np.bincount(a + amax, minlength=2 * amax + 1)

    counts_dict = {int(a - amax): int(c) for a, c in enumerate(hist) if c}
    result = EllipticCensus(p=p, q=q, degree=field.degree, counts=counts_dict)
    result.check()
    return result


# ---------------------------------------------------------------------------
# genus-2 census builder

@lru_cache(maxsize=1)
def _sextic_disc_terms() -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Universal discriminant of the binary sextic as integer monomials.

    Expanded once per process from Res(f, f') / f6 for the generic
    degree-6 polynomial; the result is a polynomial in f0..f6 over Z
    whose reduction mod p vanishes exactly on the non-squarefree forms
    (the behavior at infinity included).  246 monomials.
    """
    import sympy

    x = sympy.symbols("x")
    fs = sympy.symbols("f0:7")
    f = sum(fs[i] * x ** i for i in range(7))
    disc = sympy.Poly(sympy.expand(sympy.Poly(f, x).discriminant()), *fs)
    return tuple((int(c), tuple(int(e) for e in mono)) for mono, c in disc.terms())


def _disc_groups_for(p: int) -> dict[int, list[tuple[int, ...]]]:
    """Discriminant monomials grouped by the f0 exponent, coefficients mod p."""
    groups: dict[int, list[tuple[int, ...]]] = {}
    for c, (e0, e1, e2, e3, e4, e5, e6) in _sextic_disc_terms():
        cm = c % p
        if cm:
            groups.setdefault(e0, []).append((cm, e1, e2, e3, e4, e5, e6))
    return groups


def _genus2_block(p: int, lo: int, hi: int,
                  disc_groups: dict[int, list[tuple[int, ...]]]) -> np.ndarray:
    """Histogram contribution of the outer-coefficient range [lo, hi).

    The outer index runs over (f6, f5, f4); the inner (f3, f2, f1, f0)
    hypercube is processed as broadcast numpy blocks.  Per model the
    block computes:

    * the affine character sum and zero count over x in F_p,
    * sum over monic irreducible quadratics g of chi(Res(g, f)), which
      carries the F_{p^2} information: a conjugate pair of points with
      minimal polynomial g contributes 2 (1 + chi(f(alpha) f(alpha^p)))
      and f(alpha) f(alpha^p) = Res(g, f),
    * the sextic discriminant (squarefree mask) by Horner in f0.

    From those, N1 and N2 and hence (a1, a2) are linear algebra:
    a1 = -(chi sum over P^1), and with z = #zeros of F on P^1(F_p),
    p^2 + 1 - N2 = z - (p + 1) - 2 sum chi(Res).
    """
    field = PrimeField(p)
    chi_list = field.chi
    chi = np.array(chi_list, dtype=np.int64)

    f3g = np.arange(p, dtype=np.int64).reshape(p, 1, 1, 1)
    f2g = np.arange(p, dtype=np.int64).reshape(1, p, 1, 1)
    f1g = np.arange(p, dtype=np.int64).reshape(1, 1, p, 1)
    f0g = np.arange(p, dtype=np.int64).reshape(1, 1, 1, p)

    pow_mod = [[pow(v, e, p) for e in range(11)] for v in range(p)]

    # monic irreducible quadratics t^2 - s t + n with the reduction tables
    # t^i = a_i t + b_i used to evaluate Res(g, f) = A^2 n + A B s + B^2
    quads = []
    for s in range(p):
        for n in range(p):
            if chi_list[(s * s - 4 * n) % p] == -1:
                a, b = [0] * 7, [0] * 7
                b[0] = 1
                for i in range(1, 7):
                    a[i] = (a[i - 1] * s + b[i - 1]) % p
                    b[i] = -a[i - 1] * n % p
                quads.append((s, n, a, b))
    assert len(quads) == (p * p - p) // 2

    def var_powers(grid, emax):
        out = [np.ones_like(grid)]
        for _ in range(emax):
            out.append(out[-1] * grid % p)
        return out

    entries = [t for grp in disc_groups.values() for t in grp]
    q1 = var_powers(f1g, max(t[1] for t in entries))
    q2 = var_powers(f2g, max(t[2] for t in entries))
    q3 = var_powers(f3g, max(t[3] for t in entries))

    a1_bound = isqrt(16 * p)
    a2_bound = 6 * p
    width = 2 * a2_bound + 1
    hist = np.zeros((2 * a1_bound + 1) * width, dtype=np.int64)

    for outer in range(lo, hi):
        f6 = outer // (p * p)
        f5 = (outer // p) % p
        f4 = outer % p

        chi_aff = np.zeros((p, p, p, p), dtype=np.int64)
        zeros_aff = np.zeros((p, p, p, p), dtype=np.int64)
        for x in range(p):
            px = pow_mod[x]
            head = (f6 * px[6] + f5 * px[5] + f4 * px[4]) % p
            partial = head + f3g * px[3] + f2g * px[2] + f1g * x
            vals = (partial + f0g) % p
            chi_aff += chi[vals]
            zeros_aff += vals == 0

        chi_res = np.zeros((p, p, p, p), dtype=np.int64)
        for s, n, a, b in quads:
            a_head = (f6 * a[6] + f5 * a[5] + f4 * a[4]) % p
            b_head = (f6 * b[6] + f5 * b[5] + f4 * b[4]) % p
            lin_a = (a_head + a[3] * f3g + a[2] * f2g + f1g) % p
            lin_b = (b_head + b[3] * f3g + b[2] * f2g + f0g) % p
            res = (n * lin_a * lin_a + s * (lin_a * lin_b) + lin_b * lin_b) % p
            chi_res += chi[res]

        disc = None
        for j in range(5, -1, -1):
            coeff = np.zeros((p, p, p, 1), dtype=np.int64)
            for cm, e1, e2, e3, e4, e5, e6 in disc_groups.get(j, ()):
                scalar = cm * pow_mod[f6][e6] % p * pow_mod[f5][e5] % p \
                    * pow_mod[f4][e4] % p
                if scalar:
                    coeff += scalar * (q3[e3] * q2[e2] % p * q1[e1] % p)
            coeff %= p
            disc = coeff if disc is None else (disc * f0g + coeff) % p
        mask = disc != 0

        a1 = -(chi_aff + chi_list[f6])
        zeros_proj = zeros_aff + (1 if f6 == 0 else 0)
        s2 = zeros_proj - (p + 1) - 2 * chi_res
        numerator = a1 * a1 - s2
        if np.any(numerator[mask] % 2):
            raise CensusError(f"genus-2 census p={p}: non-integral a2 in block")
        a2 = numerator // 2
        if np.any(a1[mask] ** 2 > 16 * p) or np.any(np.abs(a2[mask]) > a2_bound):
            raise CensusError(f"genus-2 census p={p}: Weil bound violated in block")

        keys = ((a1 + a1_bound) * width + (a2 + a2_bound))[mask]
        hist += np.bincount(keys.ravel(), minlength=hist.size)
    return hist


def genus2_census(p: int, workers: int = 1, progress=None,
                  prime_budget: int = GENUS2_PRIME_BUDGET) -> CensusTable:
    """Exhaustive census of squarefree binary sextics over F_p.

    Iterates all p^7 coefficient vectors in contiguous blocks of the
    outer (f6, f5, f4) range; `workers` > 1 distributes blocks over a
    process pool.  The histogram is a sum of per-block histograms, so
    the result is independent of partitioning.
    """
    field = PrimeField(p)  # validates p odd prime
    if p > prime_budget:
        raise CensusError(
            f"genus-2 census at p={p} exceeds the prime budget {prime_budget}")
    del field
    disc_groups = _disc_groups_for(p)
    outer_total = p ** 3

    if workers <= 1:
        blocks = [(0, outer_total)]
    else:
        step = max(1, outer_total // (workers * 4))
        blocks = [(lo, min(lo + step, outer_total))
                  for lo in range(0, outer_total, step)]

    hist = None
    if workers <= 1:
        for i, (lo, hi) in enumerate(blocks):
            part = _genus2_block(p, lo, hi, disc_groups)
            hist = part if hist is None else hist + part
            if progress:
                progress(i + 1, len(blocks))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_genus2_block, p, lo, hi, disc_groups)
                       for lo, hi in blocks]
            for i, fut in enumerate(futures):
                part = fut.result()
                hist = part if hist is None else hist + part
                if progress:
                    progress(i + 1, len(blocks))

    a1_bound = isqrt(16 * p)
    a2_bound = 6 * p
    width = 2 * a2_bound + 1
    counts: dict[tuple[int, int], int] = {}
    for key in np.nonzero(hist)[0]:
        a1 = int(key) // width - a1_bound
        a2 = int(key) % width - a2_bound
        counts[(a1, a2)] = int(hist[key])
    table = CensusTable(p=p, counts=counts)
    table.check()
    return table


# ---------------------------------------------------------------------------
# persistence

_LOCUS_COLUMNS = {
    "elliptic": ("a", "count"),
    "elliptic-ext": ("a", "count"),
    "genus2-jacobian": ("a1", "a2", "count"),
}


def _census_locus(obj) -> str:
    if isinstance(obj, CensusTable):
        return "genus2-jacobian"
    return "elliptic" if obj.degree == 1 else "elliptic-ext"


def _census_rows(obj) -> list[tuple[int, ...]]:
    if isinstance(obj, CensusTable):
        return [(a1, a2, c) for (a1, a2), c in sorted(obj.counts.items())]
    return [(a, c) for a, c in sorted(obj.counts.items())]


def _serialize(obj) -> str:
    locus = _census_locus(obj)
    columns = _LOCUS_COLUMNS[locus]
    rows = _census_rows(obj)
    body_lines = [",".join(columns)]
    body_lines += [",".join(str(v) for v in row) for row in rows]
    body = "\n".join(body_lines) + "\n"
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    header = [
        f"{FORMAT_MAGIC},{FORMAT_VERSION}",
        f"locus,{locus}",
        f"p,{obj.p}",
        f"q,{obj.p if isinstance(obj, CensusTable) else obj.q}",
        f"normalizer,{obj.normalizer}",
        f"total,{obj.total_models}",
        f"checksum,{digest}",
    ]
    return "\n".join(header) + "\n" + body


def census_checksum(obj) -> str:
    """Checksum of the canonical serialization (also stored in the file)."""
    text = _serialize(obj)
    for line in text.splitlines():
        if line.startswith("checksum,"):
            return line.split(",", 1)[1]
    raise AssertionError("serialization has no checksum line")


def census_store(obj, path) -> str:
    """Write a census to its CSV container; returns the content checksum."""
    text = _serialize(obj)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return census_checksum(obj)


def census_load(path):
    """Load a census container, re-verifying integrity and invariants.

    Checks, in order: magic and format version, stored checksum against
    the recomputed row digest, stored totals against the rows, and then
    the census's own mass/twist invariants via check().
    """
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CacheError(f"cannot read census cache {path}: {exc}") from exc

    header: dict[str, str] = {}
    body_start = None
    for i, line in enumerate(lines):
        if i == 0:
            parts = line.split(",")
            if parts[0] != FORMAT_MAGIC:
                raise CacheError(f"{path}: not a census cache (magic {parts[0]!r})")
            if int(parts[1]) != FORMAT_VERSION:
                raise CacheError(f"{path}: unsupported format version {parts[1]}")
            continue
        key, _, value = line.partition(",")
        if key in ("locus", "p", "q", "normalizer", "total", "checksum"):
            header[key] = value
        else:
            body_start = i
            break
    if body_start is None or "checksum" not in header or "locus" not in header:
        raise CacheError(f"{path}: truncated census header")

    body = "\n".join(lines[body_start:]) + "\n"
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if digest != header["checksum"]:
        raise CacheError(f"{path}: checksum mismatch (corrupted cache)")

    locus = header["locus"]
    if locus not in _LOCUS_COLUMNS:
        raise CacheError(f"{path}: unknown locus {locus!r}")
    reader = csv.reader(lines[body_start:])
    columns = next(reader)
    if tuple(columns) != _LOCUS_COLUMNS[locus]:
        raise CacheError(f"{path}: unexpected columns {columns}")

    p = int(header["p"])
    try:
        if locus == "genus2-jacobian":
            counts2 = {(int(r[0]), int(r[1])): int(r[2]) for r in reader}
            obj: CensusTable | EllipticCensus = CensusTable(p=p, counts=counts2)
        else:
            counts1 = {int(r[0]): int(r[1]) for r in reader}
            q = int(header["q"])
            obj = EllipticCensus(p=p, q=q, degree=1 if q == p else 2, counts=counts1)
    except (ValueError, IndexError) as exc:
        raise CacheError(f"{path}: malformed census rows: {exc}") from exc

    if obj.total_models != int(header["total"]):
        raise CacheError(f"{path}: stored total disagrees with rows")
    if obj.normalizer != int(header["normalizer"]):
        raise CacheError(f"{path}: stored normalizer disagrees with locus")
    try:
        obj.check()
    except CensusError as exc:
        raise CacheError(f"{path}: invariants fail on load: {exc}") from exc
    return obj


# ---------------------------------------------------------------------------
# cache-backed access

class CensusBank:
    """Memoized access to censuses, optionally backed by a cache directory.

    Resolution order per census: in-memory -> cache file (if cache_dir
    is set) -> fresh build (if auto_build).  Fresh builds are written
    back to the cache directory when one is configured.  `checksums`
    records the content checksum of everything served, for provenance.
    """

    def __init__(self, cache_dir: str | os.PathLike | None = None,
                 workers: int = 1, auto_build: bool = True):
        self.cache_dir = os.fspath(cache_dir) if cache_dir is not None else None
        self.workers = workers
        self.auto_build = auto_build
        self._memo: dict[str, EllipticCensus | CensusTable] = {}
        self.checksums: dict[str, str] = {}

    def _path(self, name: str) -> str | None:
        if self.cache_dir is None:
            return None
        return os.path.join(self.cache_dir, name + ".csv")

    def _get(self, name: str, builder):
        if name in self._memo:
            return self._memo[name]
        path = self._path(name)
        obj = None
        if path is not None and os.path.exists(path):
            obj = census_load(path)
        if obj is None:
            if not self.auto_build:
                raise CacheError(
                    f"census {name!r} not cached and auto-build is disabled")
            obj = builder()
            if path is not None:
                os.makedirs(self.cache_dir, exist_ok=True)
                census_store(obj, path)
        self._memo[name] = obj
        self.checksums[name] = census_checksum(obj)
        return obj

    def elliptic(self, p: int) -> EllipticCensus:
        return self._get(f"elliptic-p{p}",
                         lambda: elliptic_census(PrimeField(p)))

    def elliptic_ext(self, p: int) -> EllipticCensus:
        return self._get(f"elliptic-q{p * p}",
                         lambda: elliptic_census(QuadExtField(PrimeField(p))))

    def genus2(self, p: int) -> CensusTable:
        return self._get(f"genus2-p{p}",
                         lambda: genus2_census(p, workers=self.workers))
