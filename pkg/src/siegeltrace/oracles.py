"""Slow, independent reference paths used to cross-check the census kernels.

Everything here is deliberately written the naive way: scalar field
arithmetic, literal point enumeration over P^1, textbook polynomial gcd,
and explicit group orbits.  The production kernels in `census` are
vectorized and use a precomputed discriminant; tests and the selftest
battery compare the two routes (exhaustively for p = 3 and 5) so a bug
in either one surfaces as a disagreement rather than a silent miscount.
"""

from __future__ import annotations

from fractions import Fraction

from .ff import PrimeField, QuadExtField


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, index = degree)

def poly_mod_trim(f: list[int], p: int) -> list[int]:
    g = [c % p for c in f]
    while g and g[-1] == 0:
        g.pop()
    return g


def poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd over F_p by the Euclidean algorithm."""
    a, b = poly_mod_trim(f, p), poly_mod_trim(g, p)
    while b:
        # a mod b
        inv_lead = pow(b[-1], p - 2, p)
        r = a[:]
        for i in range(len(r) - 1, len(b) - 2, -1):
            if r[i]:
                c = r[i] * inv_lead % p
                shift = i - (len(b) - 1)
                for j, bj in enumerate(b):
                    r[j + shift] = (r[j + shift] - c * bj) % p
        while r and r[-1] == 0:
            r.pop()
        a, b = b, r
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [c * inv_lead % p for c in a]
    return a


def poly_derivative(f: list[int], p: int) -> list[int]:
    return poly_mod_trim([i * f[i] for i in range(1, len(f))], p)


def sextic_is_squarefree(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Squarefreeness of the binary sextic form sum f_i x^i z^(6-i).

    The form is squarefree iff the dehomogenization f(x) has degree >= 5
    (so the root at infinity, if any, is simple), f' is not identically
    zero (f' = 0 with deg >= 1 makes f a p-th power), and gcd(f, f') is
    constant.
    """
    f = poly_mod_trim(list(coeffs), p)
    if len(f) - 1 < 5:
        return False
    fp = poly_derivative(f, p)
    if not fp:
        return False
    return len(poly_gcd(f, fp, p)) == 1


# ---------------------------------------------------------------------------
# reference point counts on y^2 = F(x, z)

def genus2_point_count_reference(coeffs, field: PrimeField | QuadExtField) -> int:
    """#C(F_q) for y^2 = F(x,z), F the sextic with the given F_p coefficients.

    Counts 1 + chi(F(P)) over the q+1 points of P^1(F_q): the affine
    chart [x:1] plus the single point at infinity [1:0], where the form
    evaluates to the leading coefficient f6.
    """
    chi = field.chi
    cs = [field.embed(c) for c in coeffs]
    total = 0
    for x in field.elements():
        # Horner from the top coefficient
        acc = cs[6]
        for i in range(5, -1, -1):
            acc = field.add(field.mul(acc, x), cs[i])
        total += 1 + chi[acc]
    total += 1 + chi[cs[6]]
    return total


def elliptic_point_count_reference(c2: int, c4: int, c6: int,
                                   field: PrimeField | QuadExtField) -> int:
    """#E(F_q) for y^2 = x^3 + c2 x^2 + c4 x + c6 (single point at infinity)."""
    chi = field.chi
    total = 1
    for x in field.elements():
        x2 = field.mul(x, x)
        v = field.add(field.add(field.mul(x2, x), field.mul(c2, x2)),
                      field.add(field.mul(c4, x), c6))
        total += 1 + chi[v]
    return total


def cubic_discriminant(c2: int, c4: int, c6: int, p: int) -> int:
    """disc(x^3 + c2 x^2 + c4 x + c6) mod p; valid in every characteristic."""
    return (18 * c2 * c4 * c6 - 4 * c2 ** 3 * c6 + c2 ** 2 * c4 ** 2
            - 4 * c4 ** 3 - 27 * c6 ** 2) % p


# ---------------------------------------------------------------------------
# orbit-stabilizer enumeration for elliptic models

def elliptic_orbit_stabilizer_masses(field: PrimeField | QuadExtField):
    """Isomorphism classes of y^2 = x^3 + c2 x^2 + c4 x + c6 over F_q.

    The substitution group {x -> u^2 x + r, y -> u^3 y} of order q(q-1)
    acts on the model coefficients; each class is one orbit and its
    automorphism group is the explicit stabilizer.  Returns a list of
    (trace a, orbit size, stabilizer size) and the total mass
    sum 1/|stab| as an exact Fraction (which must equal q).
    """
    q = field.q
    units = [u for u in field.elements() if u != 0]
    subs = [(u, r) for u in units for r in field.elements()]

    def act(u, r, model):
        c2, c4, c6 = model
        # substitute x = u^2 x' + r, divide by u^6; the model stays monic
        u2 = field.mul(u, u)
        u4 = field.mul(u2, u2)
        u6 = field.mul(u4, u2)
        r2 = field.mul(r, r)
        r3 = field.mul(r2, r)
        three = field.embed(3)
        two = field.embed(2)
        n2 = field.add(c2, field.mul(three, r))
        n4 = field.add(field.add(c4, field.mul(two, field.mul(c2, r))),
                       field.mul(three, r2))
        n6 = field.add(field.add(c6, field.mul(c4, r)),
                       field.add(field.mul(c2, r2), r3))
        return (field.mul(n2, field.inv(u2)),
                field.mul(n4, field.inv(u4)),
                field.mul(n6, field.inv(u6)))

    seen: set[tuple[int, int, int]] = set()
    classes = []
    mass = Fraction(0)
    for c2 in field.elements():
        for c4 in field.elements():
            for c6 in field.elements():
                model = (c2, c4, c6)
                if model in seen:
                    continue
                if isinstance(field, PrimeField):
                    if cubic_discriminant(c2, c4, c6, field.p) == 0:
                        continue
                else:
                    if _ext_cubic_disc(c2, c4, c6, field) == 0:
                        continue
                images = [act(u, r, model) for (u, r) in subs]
                orbit = set(images)
                stab = images.count(model)
                assert len(orbit) * stab == q * (q - 1)
                a = q + 1 - elliptic_point_count_reference(c2, c4, c6, field)
                classes.append((a, len(orbit), stab))
                mass += Fraction(1, stab)
                seen.update(orbit)
    return classes, mass


def _ext_cubic_disc(c2: int, c4: int, c6: int, field: QuadExtField) -> int:
    m, a, s = field.mul, field.add, field.sub
    e = field.embed
    t1 = m(e(18), m(c2, m(c4, c6)))
    t2 = m(e(4), m(m(c2, m(c2, c2)), c6))
    t3 = m(m(c2, c2), m(c4, c4))
    t4 = m(e(4), m(c4, m(c4, c4)))
    t5 = m(e(27), m(c6, c6))
    return s(a(t1, t3), a(t2, a(t4, t5)))


# ---------------------------------------------------------------------------
# orbit-stabilizer enumeration for genus-2 sextics at p = 3

def gl2_elements(p: int):
    """All of GL_2(F_p) as (a, b, c, d) with ad - bc != 0."""
    out = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p:
                        out.append((a, b, c, d))
    return out


def substitute_form(coeffs, gamma, p: int) -> tuple[int, ...]:
    """Coefficients of F(a x + b z, c x + d z) for the sextic F."""
    a, b, c, d = gamma
    # (a x + b z)^i (c x + d z)^(6-i) expanded once per i
    out = [0] * 7
    for i, fi in enumerate(coeffs):
        if fi == 0:
            continue
        term = [1]  # polynomial in x (coeff index = power of x), deg 6 forms
        for _ in range(i):
            term = _lin_mul(term, a, b, p)
        for _ in range(6 - i):
            term = _lin_mul(term, c, d, p)
        for j, tj in enumerate(term):
            out[j] = (out[j] + fi * tj) % p
    return tuple(out)


def _lin_mul(poly: list[int], a: int, b: int, p: int) -> list[int]:
    # multiply a polynomial in x by (a x + b)
    out = [0] * (len(poly) + 1)
    for i, ci in enumerate(poly):
        out[i + 1] = (out[i + 1] + ci * a) % p
        out[i] = (out[i] + ci * b) % p
    return out


def genus2_orbit_stabilizer_histogram(p: int = 3):
    """Exhaustive GL_2(F_p)-orbit enumeration of squarefree sextics.

    Only intended for p = 3 (2187 coefficient vectors, group order 48).
    Classes are computed from scratch here: reference point counts over
    F_p and F_{p^2} and the characteristic-polynomial arithmetic, with
    squarefreeness decided by the gcd route.  Returns (histogram,
    mass_by_class) where histogram maps (a1, a2) -> model count and
    mass_by_class maps (a1, a2) -> sum of 1/|stab| as Fractions.
    """
    base = PrimeField(p)
    ext = QuadExtField(base)
    group = gl2_elements(p)
    order = len(group)

    histogram: dict[tuple[int, int], int] = {}
    mass_by_class: dict[tuple[int, int], Fraction] = {}
    seen: set[tuple[int, ...]] = set()

    def class_of(coeffs) -> tuple[int, int]:
        n1 = genus2_point_count_reference(coeffs, base)
        n2 = genus2_point_count_reference(coeffs, ext)
        a1 = p + 1 - n1
        s2 = p * p + 1 - n2
        num = a1 * a1 - s2
        assert num % 2 == 0
        return a1, num // 2

    total = p ** 7
    for idx in range(total):
        coeffs = []
        n = idx
        for _ in range(7):
            coeffs.append(n % p)
            n //= p
        coeffs = tuple(coeffs)
        if coeffs in seen:
            continue
        if not sextic_is_squarefree(coeffs, p):
            continue
        images = [substitute_form(coeffs, g, p) for g in group]
        orbit = set(images)
        stab = images.count(coeffs)
        assert stab * len(orbit) == order
        key = class_of(coeffs)
        histogram[key] = histogram.get(key, 0) + len(orbit)
        mass_by_class[key] = mass_by_class.get(key, Fraction(0)) + Fraction(1, stab)
        seen.update(orbit)
    return histogram, mass_by_class
