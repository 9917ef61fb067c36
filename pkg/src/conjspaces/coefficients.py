"""The RO(C2)-graded coefficient ring of the constant mod-2 Mackey functor.

The ring is a square-zero extension: a polynomial cone F[a, u] with
|a| = al and |u| = -1 + al (cohomologically), plus a negative cone of
monomials th[i, j] standing for theta * a^-i * u^-j with i >= 0 and
j >= 2.  Products of two negative-cone elements vanish; the positive
cone acts on the negative cone by shifting exponents while they stay in
range.  Every nonzero homogeneous piece is one-dimensional, which is
what the degree chart records.
"""

from __future__ import annotations

from dataclasses import dataclass

from .degree import RODegree
from .errors import ParseError

# positive-cone monomial: (a_exp, u_exp); negative-cone monomial: (i, j), j >= 2


@dataclass(frozen=True)
class CoeffElem:
    pos: frozenset
    neg: frozenset

    def __add__(self, other: "CoeffElem") -> "CoeffElem":
        return CoeffElem(self.pos ^ other.pos, self.neg ^ other.neg)

    def __mul__(self, other: "CoeffElem") -> "CoeffElem":
        return coeff_mul(self, other)

    def __bool__(self) -> bool:
        return bool(self.pos) or bool(self.neg)

    def __str__(self) -> str:
        return format_coeff(self)


def coeff_zero() -> CoeffElem:
    return CoeffElem(frozenset(), frozenset())


def coeff_one() -> CoeffElem:
    return CoeffElem(frozenset({(0, 0)}), frozenset())


def coeff_a(k: int = 1) -> CoeffElem:
    return coeff_pos(k, 0)


def coeff_u(n: int = 1) -> CoeffElem:
    return coeff_pos(0, n)


def coeff_pos(k: int, n: int) -> CoeffElem:
    if k < 0 or n < 0:
        raise ValueError("positive-cone exponents must be non-negative")
    return CoeffElem(frozenset({(k, n)}), frozenset())


def coeff_theta(i: int, j: int) -> CoeffElem:
    if i < 0 or j < 2:
        raise ValueError("negative-cone monomial needs i >= 0 and j >= 2")
    return CoeffElem(frozenset(), frozenset({(i, j)}))


def pos_degree(k: int, n: int) -> RODegree:
    return RODegree(-n, n + k)


def neg_degree(i: int, j: int) -> RODegree:
    return RODegree(j, -(i + j))


def pos_mul(m1: tuple[int, int], m2: tuple[int, int]) -> tuple[int, int]:
    return (m1[0] + m2[0], m1[1] + m2[1])


def pos_neg_mul(m: tuple[int, int], t: tuple[int, int]) -> tuple[int, int] | None:
    """a^k u^n * th[i, j] = th[i-k, j-n], or None once out of range."""
    k, n = m
    i, j = t
    i2, j2 = i - k, j - n
    if i2 >= 0 and j2 >= 2:
        return (i2, j2)
    return None


def coeff_mul(x: CoeffElem, y: CoeffElem) -> CoeffElem:
    pos: set = set()
    neg: set = set()
    for m1 in x.pos:
        for m2 in y.pos:
            pos ^= {pos_mul(m1, m2)}
        for t in y.neg:
            r = pos_neg_mul(m1, t)
            if r is not None:
                neg ^= {r}
    for t in x.neg:
        for m2 in y.pos:
            r = pos_neg_mul(m2, t)
            if r is not None:
                neg ^= {r}
    # neg * neg = 0: the ideal squares to zero
    return CoeffElem(frozenset(pos), frozenset(neg))


def coeff_degree(x: CoeffElem) -> RODegree | None:
    """Common degree of all terms; None for zero; raises if mixed."""
    degs = {pos_degree(*m) for m in x.pos} | {neg_degree(*t) for t in x.neg}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return degs.pop()


def is_homogeneous(x: CoeffElem) -> bool:
    try:
        coeff_degree(x)
        return True
    except ValueError:
        return False


def pos_monomial_of_degree(d: RODegree) -> tuple[int, int] | None:
    n, k = -d.p, d.p + d.q
    if n >= 0 and k >= 0:
        return (k, n)
    return None


def neg_monomial_of_degree(d: RODegree) -> tuple[int, int] | None:
    j, i = d.p, -(d.p + d.q)
    if j >= 2 and i >= 0:
        return (i, j)
    return None


def coeff_basis_monomial(d: RODegree) -> CoeffElem:
    """The unique basis monomial in degree d, or zero."""
    m = pos_monomial_of_degree(d)
    if m is not None:
        return coeff_pos(*m)
    t = neg_monomial_of_degree(d)
    if t is not None:
        return coeff_theta(*t)
    return coeff_zero()


# ---------------------------------------------------------------------------
# Mackey chart


@dataclass(frozen=True)
class MackeyShape:
    """Lewis diagram of a C2 Mackey functor over F with cyclic values.

    rho restricts from the fixed level to the free level, tr transfers
    back, theta is the residual action on the free level.  All maps are
    scalars 0/1; maps into or out of a zero group are 0.
    """

    tag: str
    dim_pt: int
    dim_c2: int
    rho: int
    tr: int
    theta: int


SHAPE_FBAR = MackeyShape("Fbar", 1, 1, rho=1, tr=0, theta=1)
SHAPE_DOT = MackeyShape("dot", 1, 0, rho=0, tr=0, theta=0)
SHAPE_L = MackeyShape("L", 1, 1, rho=0, tr=1, theta=1)
SHAPE_LMINUS = MackeyShape("Lminus", 0, 1, rho=0, tr=0, theta=1)
SHAPE_ZERO = MackeyShape("0", 0, 0, rho=0, tr=0, theta=0)

SHAPES = {s.tag: s for s in (SHAPE_FBAR, SHAPE_DOT, SHAPE_L, SHAPE_LMINUS, SHAPE_ZERO)}


def lewis_relations_hold(s: MackeyShape) -> bool:
    """tr.theta = tr, theta.rho = rho, theta^2 = id, rho.tr = 1 + theta."""
    if s.dim_c2 == 0:
        return s.rho == 0 and s.tr == 0 and s.theta == 0
    checks = [
        (s.tr * s.theta - s.tr) % 2 == 0,
        (s.theta * s.rho - s.rho) % 2 == 0,
        s.theta == 1,  # theta^2 = id over F forces theta = 1 componentwise
        (s.rho * s.tr) % 2 == (1 + s.theta) % 2,
    ]
    return all(checks)


def chart_lookup(d: RODegree) -> MackeyShape:
    """Shape of the coefficient Mackey functor in degree d."""
    p, q = d.p, d.q
    if p <= 0 and p + q == 0:
        return SHAPE_FBAR
    if p <= 0 and p + q >= 1:
        return SHAPE_DOT
    if p >= 2 and p + q == 0:
        return SHAPE_L
    if p >= 2 and p + q <= -1:
        return SHAPE_DOT
    return SHAPE_ZERO


def chart_rows(pmin: int, pmax: int, qmin: int, qmax: int) -> list[str]:
    """CSV rows p,q,shape; q descending inside p ascending."""
    if pmin > pmax or qmin > qmax:
        raise ValueError("empty chart range")
    rows = []
    for p in range(pmin, pmax + 1):
        for q in range(qmax, qmin - 1, -1):
            rows.append(f"{p},{q},{chart_lookup(RODegree(p, q)).tag}")
    return rows


# ---------------------------------------------------------------------------
# Restriction to the free level

def restriction(x: CoeffElem) -> frozenset:
    """Underlying-level image: u^n -> {n}; a-divisible and negative-cone -> empty.

    The value is a set of u-exponents in F[u^{+-1}]; homogeneous input
    gives at most a singleton.
    """
    coeff_degree(x)  # rejects non-homogeneous input
    out: set[int] = set()
    for k, n in x.pos:
        if k == 0:
            out ^= {n}
    return frozenset(out)


def u_laurent_mul(s1: frozenset, s2: frozenset) -> frozenset:
    acc: set[int] = set()
    for n1 in s1:
        for n2 in s2:
            acc ^= {n1 + n2}
    return frozenset(acc)


# ---------------------------------------------------------------------------
# Laurent-type character rings

@dataclass(frozen=True)
class LaurentRing:
    """F[a, u^{+-1}] (borel), F[a^{+-1}, u] (geomfix), or F[a, u^{+-1}]/a^n."""

    variant: str
    truncation: int | None = None

    def admits(self, a_exp: int, u_exp: int) -> bool:
        if self.variant == "borel":
            return a_exp >= 0
        if self.variant == "geomfix":
            return u_exp >= 0
        if self.variant == "truncated":
            return 0 <= a_exp < self.truncation
        raise ValueError(f"unknown variant {self.variant!r}")

    def monomial_of_degree(self, d: RODegree):
        a_exp, u_exp = d.p + d.q, -d.p
        if self.admits(a_exp, u_exp):
            return (a_exp, u_exp)
        return None

    def monomials_of_degree(self, d: RODegree) -> list:
        m = self.monomial_of_degree(d)
        return [] if m is None else [m]

    def element(self, terms) -> "LaurentElem":
        kept = frozenset(t for t in terms if self.admits(*t))
        for t in terms:
            if not self.admits(*t) and self.variant != "truncated":
                raise ValueError(f"monomial {t} outside {self.variant}")
        return LaurentElem(self, kept)


BOREL = LaurentRing("borel")
GEOMFIX = LaurentRing("geomfix")


def truncated_borel(n: int) -> LaurentRing:
    return LaurentRing("truncated", n)


def free_sphere_cohomology(n: int) -> LaurentRing:
    """Character ring of the free sphere on n*al: F[a, u^{+-1}] / a^n."""
    if n <= 0:
        raise ValueError("the sphere level n must be positive")
    return truncated_borel(n)


@dataclass(frozen=True)
class LaurentElem:
    ring: LaurentRing
    terms: frozenset  # of (a_exp, u_exp)

    def __add__(self, other: "LaurentElem") -> "LaurentElem":
        if self.ring != other.ring:
            raise ValueError("mixed rings")
        return LaurentElem(self.ring, self.terms ^ other.terms)

    def __mul__(self, other: "LaurentElem") -> "LaurentElem":
        if self.ring != other.ring:
            raise ValueError("mixed rings")
        acc: set = set()
        for a1, u1 in self.terms:
            for a2, u2 in other.terms:
                acc ^= {(a1 + a2, u1 + u2)}
        # in the truncated ring, a^n and beyond die
        kept = frozenset(t for t in acc if self.ring.admits(*t))
        if self.ring.variant != "truncated" and len(kept) != len(acc):
            raise ValueError("product left the ring")
        return LaurentElem(self.ring, kept)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        return format_laurent(self)


def phi_shadow(x: CoeffElem) -> LaurentElem:
    """Image in F[a^{+-1}, u]: the polynomial cone maps through, the
    negative cone is a-power-torsion and dies."""
    return LaurentElem(GEOMFIX, frozenset(x.pos))


def shadow_projection(e: LaurentElem, k: int) -> int:
    """pr_k: parity of the monomials with u-exponent k (the component of
    the wedge summand in integral degree k)."""
    return sum(1 for _, u_exp in e.terms if u_exp == k) % 2


# ---------------------------------------------------------------------------
# Tensor with an integer-graded trivial-action space


class CoeffRingBasis:
    """Basis monomials of the coefficient ring, tagged by cone."""

    def monomials_of_degree(self, d: RODegree) -> list:
        m = pos_monomial_of_degree(d)
        if m is not None:
            return [("au", m[0], m[1])]
        t = neg_monomial_of_degree(d)
        if t is not None:
            return [("th", t[0], t[1])]
        return []


HF_BASIS = CoeffRingBasis()


@dataclass(frozen=True)
class TensorModule:
    """RO(C2)-graded tensor of a coefficient-type ring with an
    integer-graded space; basis elements are (ring monomial, class)."""

    base: object
    space: object  # GradedVector

    def basis_at(self, d: RODegree) -> list:
        out = []
        for deg, names in self.space.names:
            shifted = RODegree(d.p - deg, d.q)
            for mono in self.base.monomials_of_degree(shifted):
                for name in names:
                    out.append((mono, name))
        out.sort(key=lambda t: (t[1], t[0]))
        return out


def tensor_with_trivial(base, space) -> TensorModule:
    return TensorModule(base, space)


# ---------------------------------------------------------------------------
# Formatting / parsing of the coefficient grammar: a^k*u^n, th[i,j], sums


def format_pos_monomial(m: tuple[int, int]) -> str:
    k, n = m
    factors = []
    if k:
        factors.append("a" if k == 1 else f"a^{k}")
    if n:
        factors.append("u" if n == 1 else f"u^{n}")
    return "*".join(factors) if factors else "1"


def format_coeff(x: CoeffElem) -> str:
    if not x:
        return "0"
    parts = [format_pos_monomial(m) for m in sorted(x.pos, key=lambda m: (m[1], m[0]))]
    parts += [f"th[{i},{j}]" for i, j in sorted(x.neg, key=lambda t: (t[1], t[0]))]
    return " + ".join(parts)


def format_laurent(e: LaurentElem) -> str:
    if not e.terms:
        return "0"
    parts = []
    for a_exp, u_exp in sorted(e.terms, key=lambda t: (t[1], t[0])):
        factors = []
        if a_exp:
            factors.append("a" if a_exp == 1 else f"a^{a_exp}")
        if u_exp:
            factors.append("u" if u_exp == 1 else f"u^{u_exp}")
        parts.append("*".join(factors) if factors else "1")
    return " + ".join(parts)


def parse_coeff(text: str) -> CoeffElem:
    """Parse sums of a^k*u^n and th[i,j] monomials."""
    result = coeff_zero()
    pos = 0
    text_len = len(text)

    def skip_ws(p: int) -> int:
        while p < text_len and text[p].isspace():
            p += 1
        return p

    def read_int(p: int) -> tuple[int, int]:
        p = skip_ws(p)
        start = p
        if p < text_len and text[p] == "-":
            p += 1
        while p < text_len and text[p].isdigit():
            p += 1
        if p == start or (p == start + 1 and text[start] == "-"):
            raise ParseError("expected an integer", text, start)
        return int(text[start:p]), p

    first = True
    while True:
        pos = skip_ws(pos)
        if pos >= text_len:
            if first:
                raise ParseError("empty coefficient expression", text, pos)
            break
        if not first:
            if text[pos] != "+":
                raise ParseError("expected '+'", text, pos)
            pos = skip_ws(pos + 1)
        first = False
        if text.startswith("th[", pos):
            i, pos = read_int(pos + 3)
            pos = skip_ws(pos)
            if pos >= text_len or text[pos] != ",":
                raise ParseError("expected ',' in th[i,j]", text, pos)
            j, pos = read_int(pos + 1)
            pos = skip_ws(pos)
            if pos >= text_len or text[pos] != "]":
                raise ParseError("expected ']' in th[i,j]", text, pos)
            pos += 1
            if i < 0 or j < 2:
                raise ParseError("th[i,j] needs i >= 0 and j >= 2", text, pos)
            result = result + coeff_theta(i, j)
            continue
        k = n = 0
        got = False
        while pos < text_len:
            pos = skip_ws(pos)
            if text.startswith("a", pos) and not text.startswith("al", pos):
                pos += 1
                e = 1
                if pos < text_len and text[pos] == "^":
                    e, pos = read_int(pos + 1)
                if e < 0:
                    raise ParseError("negative exponent", text, pos)
                k += e
                got = True
            elif text.startswith("u", pos):
                pos += 1
                e = 1
                if pos < text_len and text[pos] == "^":
                    e, pos = read_int(pos + 1)
                if e < 0:
                    raise ParseError("negative exponent", text, pos)
                n += e
                got = True
            elif text.startswith("1", pos):
                pos += 1
                got = True
            else:
                raise ParseError("expected a, u, 1 or th[i,j]", text, pos)
            nxt = skip_ws(pos)
            if nxt < text_len and text[nxt] == "*":
                pos = nxt + 1
                continue
            pos = nxt
            break
        if not got:
            raise ParseError("empty monomial", text, pos)
        result = result + coeff_pos(k, n)
    return result
