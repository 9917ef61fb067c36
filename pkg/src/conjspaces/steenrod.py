"""Mod-2 Steenrod squares on finitely presented unstable algebras.

An algebra is described by generators with positive degrees, homogeneous
relations, and the squares of the generators; the Cartan formula and
instability force everything else.  Reduction modulo the relations works
degree by degree with exact GF(2) linear algebra, so any homogeneous
relations are accepted, not just truncations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DegreeOverflowError
from .gf2 import (GF2Echelon, Monomial, MONO_ONE, Poly, binom_mod2,
                  format_monomial, mono_mul, mono_pow, poly_from_monomials,
                  poly_one, poly_zero)

GradedPoly = dict[int, Poly]  # degree -> homogeneous part


class UnstableAlgebra:
    def __init__(self,
                 generators: Iterable[tuple[str, int]],
                 relations: Iterable[Poly] = (),
                 sq: Mapping[str, Mapping[int, Poly]] | None = None,
                 bound: int = 40,
                 name: str = ""):
        self.name = name
        self.bound = int(bound)
        if self.bound < 0:
            raise ValueError("bound must be non-negative")
        self.generators = tuple(generators)
        self.degree_of: dict[str, int] = {}
        for g, d in self.generators:
            if d < 1:
                raise ValueError(f"generator {g!r} must have positive degree")
            if g in self.degree_of:
                raise ValueError(f"duplicate generator {g!r}")
            self.degree_of[g] = d
        self.relations = tuple(relations)
        for r in self.relations:
            if self.poly_degree(r) is None and r:
                raise ValueError("relations must be homogeneous")
        self._sq_rules: dict[tuple[str, int], Poly] = {}
        for g, table in (sq or {}).items():
            if g not in self.degree_of:
                raise ValueError(f"square table names unknown generator {g!r}")
            dg = self.degree_of[g]
            for i, val in table.items():
                i = int(i)
                if i <= 0:
                    raise ValueError("square indices must be positive")
                if i > dg and val:
                    raise ValueError(
                        f"Sq^{i} on {g!r} of degree {dg} must vanish")
                if i <= dg:
                    self._sq_rules[(g, i)] = val
        self._monos: dict[int, tuple[Monomial, ...]] = {}
        self._tables: dict[int, tuple] = {}
        self._sq_mono: dict[Monomial, GradedPoly] = {}
        self._gen_power_sq: dict[tuple[str, int], GradedPoly] = {}
        self._validate_top_squares()

    # -- degrees ----------------------------------------------------------

    def mono_degree(self, m: Monomial) -> int:
        return sum(self.degree_of[g] * e for g, e in m)

    def poly_degree(self, p: Poly) -> int | None:
        """Common degree, None for the zero polynomial; raises if mixed."""
        degs = {self.mono_degree(m) for m in p.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    # -- degreewise bases -------------------------------------------------

    def monomials(self, d: int) -> tuple[Monomial, ...]:
        if d < 0:
            return ()
        if d > self.bound:
            raise DegreeOverflowError(
                f"degree {d} beyond bound {self.bound} of {self.name or 'algebra'}")
        cached = self._monos.get(d)
        if cached is not None:
            return cached
        gens = [g for g, _ in self.generators]
        out: list[Monomial] = []

        def rec(idx: int, remaining: int, acc: list[tuple[str, int]]) -> None:
            if remaining == 0:
                out.append(tuple(sorted(acc)))
                return
            if idx >= len(gens):
                return
            g = gens[idx]
            dg = self.degree_of[g]
            rec(idx + 1, remaining, acc)
            e = 1
            while e * dg <= remaining:
                rec(idx + 1, remaining - e * dg, acc + [(g, e)])
                e += 1

        rec(0, d, [])
        result = tuple(sorted(out))
        self._monos[d] = result
        return result

    def _table(self, d: int):
        """(index map, monomial order, echelon of relation rows, basis)."""
        cached = self._tables.get(d)
        if cached is not None:
            return cached
        order = self.monomials(d)
        index = {m: i for i, m in enumerate(order)}
        ech = GF2Echelon()
        for r in self.relations:
            if not r:
                continue
            dr = self.poly_degree(r)
            if dr is None or dr > d:
                continue
            for m in self.monomials(d - dr):
                row = 0
                for t in (Poly(frozenset({m})) * r).terms:
                    row ^= 1 << index[t]
                ech.insert(row)
        pivot_bits = set(ech.pivots.keys())
        basis = tuple(m for i, m in enumerate(order) if i not in pivot_bits)
        result = (index, order, ech, basis)
        self._tables[d] = result
        return result

    def basis(self, d: int) -> tuple[Monomial, ...]:
        if d < 0:
            return ()
        return self._table(d)[3]

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def poincare(self, dmax: int) -> tuple[int, ...]:
        return tuple(self.dim(d) for d in range(dmax + 1))

    def basis_classes(self, dmax: int | None = None):
        """Yield (degree, monomial) over all basis monomials up to dmax."""
        top = self.bound if dmax is None else min(dmax, self.bound)
        for d in range(top + 1):
            for m in self.basis(d):
                yield d, m

    # -- reduction and products ------------------------------------------

    def reduce(self, p: Poly) -> Poly:
        by_deg: dict[int, set[Monomial]] = {}
        for m in p.terms:
            by_deg.setdefault(self.mono_degree(m), set()).add(m)
        acc: set[Monomial] = set()
        for d, monos in by_deg.items():
            index, order, ech, _ = self._table(d)
            row = 0
            for m in monos:
                row ^= 1 << index[m]
            row = ech.reduce(row)
            for i, m in enumerate(order):
                if row >> i & 1:
                    acc ^= {m}
        return Poly(frozenset(acc))

    def mul(self, x: Poly, y: Poly) -> Poly:
        return self.reduce(x * y)

    def element(self, monos: Iterable[Monomial]) -> Poly:
        return self.reduce(poly_from_monomials(monos))

    # -- Steenrod action --------------------------------------------------

    def _sq_generator(self, g: str) -> GradedPoly:
        """Total square of a generator as a graded table, reduced."""
        dg = self.degree_of[g]
        table: GradedPoly = {dg: self.reduce(Poly(frozenset({((g, 1),)})))}
        for i in range(1, dg):
            rule = self._sq_rules.get((g, i))
            if rule and dg + i <= self.bound:
                table[dg + i] = self.reduce(rule)
        if 2 * dg <= self.bound:
            top = self._sq_rules.get((g, dg))
            if top is None:
                top = Poly(frozenset({((g, 2),)}))
            table[2 * dg] = self.reduce(top)
        return {d: p for d, p in table.items() if p}

    def _validate_top_squares(self) -> None:
        for (g, i), val in self._sq_rules.items():
            dg = self.degree_of[g]
            if val:
                vd = self.poly_degree(val)
                if vd is not None and vd != dg + i:
                    raise ValueError(
                        f"Sq^{i}({g}) must be homogeneous of degree {dg + i}")
            if i == dg and 2 * dg <= self.bound:
                square = self.reduce(Poly(frozenset({((g, 2),)})))
                if self.reduce(val) != square:
                    raise ValueError(
                        f"the top square of {g!r} must equal its square")

    def _graded_mul(self, A: GradedPoly, B: GradedPoly) -> GradedPoly:
        out: GradedPoly = {}
        for d1, p1 in A.items():
            for d2, p2 in B.items():
                d = d1 + d2
                if d > self.bound:
                    continue
                prev = out.get(d, poly_zero())
                out[d] = prev + self.reduce(p1 * p2)
        return {d: p for d, p in out.items() if p}

    def _graded_square(self, A: GradedPoly) -> GradedPoly:
        out: GradedPoly = {}
        for d, p in A.items():
            if 2 * d <= self.bound:
                q = self.reduce(p.frobenius())
                if q:
                    out[2 * d] = q
        return out

    def _sq_gen_power(self, g: str, e: int) -> GradedPoly:
        cached = self._gen_power_sq.get((g, e))
        if cached is not None:
            return cached
        result: GradedPoly = {0: poly_one()}
        cur = self._sq_generator(g)
        k = e
        while k:
            if k & 1:
                result = self._graded_mul(result, cur)
            k >>= 1
            if k:
                cur = self._graded_square(cur)
        self._gen_power_sq[(g, e)] = result
        return result

    def total_sq(self, x: Poly) -> GradedPoly:
        """Total Steenrod square, truncated above the bound."""
        out: GradedPoly = {}
        for m in x.terms:
            cached = self._sq_mono.get(m)
            if cached is None:
                cached = {0: poly_one()}
                for g, e in m:
                    cached = self._graded_mul(cached, self._sq_gen_power(g, e))
                self._sq_mono[m] = cached
            for d, p in cached.items():
                prev = out.get(d, poly_zero())
                out[d] = prev + p
        return {d: p for d, p in out.items() if p}

    def sq(self, i: int, x: Poly) -> Poly:
        """Sq^i extended linearly over the terms of x."""
        if i < 0:
            raise ValueError("negative square index")
        x = self.reduce(x)
        if not x:
            return x
        for m in x.terms:
            if self.mono_degree(m) + i > self.bound:
                raise DegreeOverflowError(
                    f"Sq^{i} output degree {self.mono_degree(m) + i} beyond "
                    f"bound {self.bound}")
        out = poly_zero()
        for m in x.terms:
            d = self.mono_degree(m)
            part = self.total_sq(Poly(frozenset({m}))).get(d + i)
            if part:
                out = out + part
        return out


# ---------------------------------------------------------------------------
# Constructors for the algebras used throughout


def polynomial_algebra(gens: Iterable[tuple[str, int]], bound: int,
                       name: str = "") -> UnstableAlgebra:
    return UnstableAlgebra(gens, (), None, bound, name)


def truncated_algebra(gens: Iterable[tuple[str, int]],
                      truncations: Mapping[str, int], bound: int,
                      name: str = "") -> UnstableAlgebra:
    """F[gens] with g^{t} = 0 for each listed truncation exponent t."""
    rels = [Poly(frozenset({((g, t),)})) for g, t in sorted(truncations.items())]
    return UnstableAlgebra(gens, rels, None, bound, name)


def point_algebra(bound: int = 0) -> UnstableAlgebra:
    return UnstableAlgebra((), (), None, bound, "point")


# ---------------------------------------------------------------------------
# F[b] tensor M: elements are sums of b^e * monomial


@dataclass(frozen=True)
class BPoly:
    terms: frozenset  # of (b_exp, Monomial)

    def __add__(self, other: "BPoly") -> "BPoly":
        return BPoly(self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)


def bpoly_zero() -> BPoly:
    return BPoly(frozenset())


def bpoly_from(terms: Iterable[tuple[int, Monomial]]) -> BPoly:
    acc: set = set()
    for t in terms:
        acc ^= {t}
    return BPoly(frozenset(acc))


def bpoly_shift(x: BPoly, k: int) -> BPoly:
    return BPoly(frozenset((e + k, m) for e, m in x.terms))


def bpoly_mul(alg: UnstableAlgebra, x: BPoly, y: BPoly) -> BPoly:
    acc: set = set()
    for e1, m1 in x.terms:
        for e2, m2 in y.terms:
            prod = alg.reduce(Poly(frozenset({mono_mul(m1, m2)})))
            for m in prod.terms:
                acc ^= {(e1 + e2, m)}
    return BPoly(frozenset(acc))

def bpoly_degree(alg: UnstableAlgebra, x: BPoly) -> int | None:
    degs = {e + alg.mono_degree(m) for e, m in x.terms}
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError("element is not homogeneous")
    return degs.pop()


def bpoly_coefficient(x: BPoly, e: int) -> Poly:
    return poly_from_monomials(m for be, m in x.terms if be == e)


def max_b_exponent(x: BPoly) -> int | None:
    return max((e for e, _ in x.terms), default=None)


def format_bpoly(x: BPoly) -> str:
    if not x.terms:
        return "0"
    parts = []
    for e, m in sorted(x.terms, key=lambda t: (-t[0], t[1])):
        if e == 0:
            parts.append(format_monomial(m))
        else:
            b = "b" if e == 1 else f"b^{e}"
            parts.append(b if m == MONO_ONE else f"{b}*{format_monomial(m)}")
    return " + ".join(parts)


def steinberg(alg: UnstableAlgebra, x: Poly) -> BPoly:
    """St(x) = sum_j b^{n-j} * Sq^j x for homogeneous x of degree n."""
    x = alg.reduce(x)
    if not x:
        return bpoly_zero()
    n = alg.poly_degree(x)
    acc: set = set()
    for j in range(n + 1):
        part = alg.sq(j, x)
        for m in part.terms:
            acc ^= {(n - j, m)}
    return BPoly(frozenset(acc))


# ---------------------------------------------------------------------------
# The image functor R: the F[b]-span of the Steinberg classes


def pb_basis_at(alg: UnstableAlgebra, d: int) -> tuple[tuple[int, Monomial], ...]:
    """Basis of (F[b] tensor M)_d, ordered by b-exponent descending."""
    out = []
    for e in range(d, -1, -1):
        for m in alg.basis(d - e):
            out.append((e, m))
    return tuple(out)


def st_generators_at(alg: UnstableAlgebra, d: int,
                     classes: Iterable[Monomial] | None = None):
    """The spanning set {b^{d-2|m|} St(m)} of R in total degree d."""
    gens = []
    for n in range(d // 2 + 1):
        for m in alg.basis(n):
            if classes is not None and m not in classes:
                continue
            gens.append((m, d - 2 * n, bpoly_shift(steinberg(
                alg, Poly(frozenset({m}))), d - 2 * n)))
    return gens


@dataclass
class RModule:
    algebra: UnstableAlgebra
    bound: int
    dims: tuple[int, ...]

    def dim(self, d: int) -> int:
        return self.dims[d] if 0 <= d <= self.bound else 0


def compute_R(alg: UnstableAlgebra, bound: int,
              classes: Iterable[Monomial] | None = None) -> RModule:
    """Degreewise span of the b-multiples of the Steinberg classes.

    classes restricts the generating set; an empty iterable gives the
    zero module.
    """
    class_set = None if classes is None else set(classes)
    dims = []
    for d in range(bound + 1):
        index = {bm: i for i, bm in enumerate(pb_basis_at(alg, d))}
        ech = GF2Echelon()
        for _, _, vec in st_generators_at(alg, d, class_set):
            row = 0
            for t in vec.terms:
                row ^= 1 << index[t]
            ech.insert(row)
        dims.append(ech.rank)
    return RModule(alg, bound, tuple(dims))


def express_in_steinberg(alg: UnstableAlgebra, x: BPoly):
    """Write homogeneous x as a sum of b^k St(m); None when impossible.

    Returns {monomial: k} for the generators used.  The generators are
    triangular with leading entries b^{k+|m|} * m, so a greedy peel from
    the top b-exponent decides membership.
    """
    if not x:
        return {}
    d = bpoly_degree(alg, x)
    used: dict[Monomial, int] = {}
    current = x
    while current:
        e, m = max(current.terms, key=lambda t: (t[0], t[1]))
        n = alg.mono_degree(m)
        k = e - n
        if k < 0:
            return None
        gen = bpoly_shift(steinberg(alg, Poly(frozenset({m}))), k)
        current = current + gen
        if m in used:
            return None
        used[m] = k
        top = max_b_exponent(current)
        if top is not None and top > e:
            return None
    assert all(k + 2 * alg.mono_degree(m) == d for m, k in used.items())
    return used


def steinberg_residue(alg: UnstableAlgebra, x: BPoly) -> Poly | None:
    """Class of x in R/(b.R), written in the basis of M; None if x not in R."""
    used = express_in_steinberg(alg, x)
    if used is None:
        return None
    return poly_from_monomials(m for m, k in used.items() if k == 0)


# ---------------------------------------------------------------------------
# Doubling


@dataclass
class DoubledModule:
    """The module with (Phi M)^{2n} = M^n; odd squares vanish and
    Sq^{2i} Phi x = Phi Sq^i x.  Elements are carried by their M-classes."""

    base: UnstableAlgebra

    def dim(self, d: int) -> int:
        return 0 if d % 2 else self.base.dim(d // 2)

    def sq(self, i: int, x: Poly) -> Poly:
        if i % 2:
            return poly_zero()
        return self.base.sq(i // 2, x)

    def sq0(self, x: Poly) -> Poly:
        """The composite to M: Sq0(Phi x) = Sq^{|x|} x = x^2 in M."""
        n = self.base.poly_degree(x)
        if n is None:
            return poly_zero()
        return self.base.sq(n, x)


def doubling(alg: UnstableAlgebra) -> DoubledModule:
    return DoubledModule(alg)


# ---------------------------------------------------------------------------
# Operator identities spot check


@dataclass
class AdemReport:
    ok: bool
    checks: tuple  # of (identity, ok, witness monomial or None)


def adem_spotcheck(bound: int = 12) -> AdemReport:
    """Verify Sq1Sq1 = 0, Sq1Sq2 = Sq3, Sq2Sq2 = Sq3Sq1 on a rank-3
    polynomial algebra through the given degree."""
    alg = polynomial_algebra((("t1", 1), ("t2", 1), ("t3", 1)), bound,
                             "adem-probe")
    identities = (
        ("Sq1Sq1 = 0", 2, lambda x: alg.sq(1, alg.sq(1, x)), lambda x: poly_zero()),
        ("Sq1Sq2 = Sq3", 3, lambda x: alg.sq(1, alg.sq(2, x)), lambda x: alg.sq(3, x)),
        ("Sq2Sq2 = Sq3Sq1", 4, lambda x: alg.sq(2, alg.sq(2, x)),
         lambda x: alg.sq(3, alg.sq(1, x))),
    )
    checks = []
    all_ok = True
    for name, shift, lhs, rhs in identities:
        witness = None
        for d in range(bound - shift + 1):
            for m in alg.basis(d):
                x = Poly(frozenset({m}))
                if lhs(x) != rhs(x):
                    witness = m
                    break
            if witness is not None:
                break
        ok = witness is None
        all_ok = all_ok and ok
        checks.append((name, ok, witness))
    return AdemReport(all_ok, tuple(checks))


def binomial_square(n: int, i: int) -> int:
    """Coefficient of Sq^i on an n-th power of a degree-1 class."""
    return binom_mod2(n, i)
