"""Conjugation-space models and their frame checks.

A space model packs the even-degree cohomology of a space, the
cohomology of its fixed points, and a degree-halving basis bijection
kappa0 between them.  The frame it determines sends a class x of degree
2n to the Steinberg element

    r.sigma(x) = sum_j b^{n-j} * Sq^j kappa0(x),

whose leading b-coefficient is kappa0(x); the checks here verify that
equation, the interleaving of kappa0 with the squares, the splitting of
the fixed-point cohomology forced by purity, and the comparison of the
Borel-side image with the span of the Steinberg classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .coefficients import (HF_BASIS, LaurentElem, GEOMFIX, shadow_projection)
from .degree import RODegree
from .errors import ModelError
from .gf2 import (GF2Echelon, MONO_ONE, Monomial, Poly, format_monomial,
                  format_poly, parse_poly, poly_one, poly_zero)
from .steenrod import (BPoly, UnstableAlgebra, bpoly_coefficient, bpoly_mul,
                       compute_R, max_b_exponent, st_generators_at, steinberg,
                       steinberg_residue, truncated_algebra)


@dataclass
class SpaceModel:
    name: str
    even: UnstableAlgebra
    fixed: UnstableAlgebra
    kappa0: dict  # basis Monomial of even -> Poly in fixed
    bound: int

    def even_basis_classes(self, bound: int | None = None):
        top = self.bound if bound is None else bound
        for d in range(0, top + 1, 2):
            for m in self.even.basis(d):
                yield d, m


@dataclass
class FreeHFModule:
    """Wedge of diagonal coefficient-module shifts, one per generator."""

    generators: tuple  # of (name, level)
    finite_type: bool = True


@dataclass
class PurityResult:
    ok: bool
    module: FreeHFModule | None = None
    reason: str = ""
    degree: int | None = None
    dims: tuple | None = None


@dataclass
class Verdict:
    name: str
    ok: bool
    detail: str = ""
    witness: object = None


# ---------------------------------------------------------------------------
# kappa0 as a linear map


def kappa0_apply(model: SpaceModel, p: Poly) -> Poly:
    out = poly_zero()
    for m in model.even.reduce(p).terms:
        img = model.kappa0.get(m)
        if img is None:
            d = model.even.mono_degree(m)
            raise ModelError(
                f"kappa0 has no entry for basis monomial {format_monomial(m)} "
                f"of degree {d}", "/kappa0")
        out = out + img
    return model.fixed.reduce(out)


# ---------------------------------------------------------------------------
# Purity


def purity_check(model: SpaceModel, bound: int | None = None) -> PurityResult:
    top = model.bound if bound is None else bound
    for d in range(1, top + 1, 2):
        if model.even.dim(d):
            return PurityResult(False, None, "odd concentration", d,
                                (model.even.dim(d),))
    gens = []
    for n in range(0, top // 2 + 1):
        de, df = model.even.dim(2 * n), model.fixed.dim(n)
        if de != df:
            return PurityResult(False, None, "level dimension mismatch", n,
                                (de, df))
        for m in model.even.basis(2 * n):
            gens.append((format_monomial(m), n))
    return PurityResult(True, FreeHFModule(tuple(gens)))


def module_cohomology(module: FreeHFModule, d: RODegree) -> list:
    """Basis of the free module in degree d: (coefficient monomial, name)."""
    out = []
    for name, level in module.generators:
        shifted = d - RODegree(level, level)
        for mono in HF_BASIS.monomials_of_degree(shifted):
            out.append((mono, name))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def lift_diagonal_class(module: FreeHFModule, names: Iterable[str]):
    """The canonical lift of a sum of generators: coefficient 1 on each."""
    levels = dict(module.generators)
    out = []
    for nm in names:
        if nm not in levels:
            raise ValueError(f"unknown generator {nm!r}")
        out.append((("au", 0, 0), nm))
    return tuple(out)


def restrict_free_element(module: FreeHFModule, elem) -> tuple:
    """Underlying restriction: a generator at level n restricts to u^n
    times its underlying class, and a-divisible coefficients die."""
    levels = dict(module.generators)
    out = []
    for mono, nm in elem:
        if mono[0] == "au" and mono[1] == 0:
            out.append((mono[2] + levels[nm], nm))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Frames


@dataclass
class FrameReport:
    model: SpaceModel
    sigma: dict  # (degree, Monomial) -> BPoly
    kappa: dict  # (degree, Monomial) -> tuple of Poly, kappa_0 .. kappa_n
    verdicts: list = field(default_factory=list)


def build_frame(model: SpaceModel, bound: int | None = None) -> FrameReport:
    sigma = {}
    kappa = {}
    for d, m in model.even_basis_classes(bound):
        n = d // 2
        k0 = kappa0_apply(model, Poly(frozenset({m})))
        sigma[(d, m)] = steinberg(model.fixed, k0)
        kappa[(d, m)] = tuple(model.fixed.sq(l, k0) for l in range(n + 1))
    return FrameReport(model, sigma, kappa)


def sigma_apply(report: FrameReport, p: Poly) -> BPoly:
    """Linear extension of the frame over a sum of basis monomials."""
    model = report.model
    acc: set = set()
    for m in model.even.reduce(p).terms:
        d = model.even.mono_degree(m)
        entry = report.sigma.get((d, m))
        if entry is None:
            raise ValueError(f"frame has no entry for {format_monomial(m)}")
        acc ^= entry.terms
    return BPoly(frozenset(acc))


def verify_conjugation_equation(report: FrameReport,
                                kappa0: Mapping | None = None) -> Verdict:
    """r.sigma(x) = kappa0(x) b^n + lower terms, no b-power above n."""
    model = report.model
    table = model.kappa0 if kappa0 is None else kappa0
    for (d, m), sig in sorted(report.sigma.items()):
        n = d // 2
        top = max_b_exponent(sig)
        if top is not None and top > n:
            return Verdict("conjugation-equation", False,
                           f"b-power {top} above {n} on {format_monomial(m)}",
                           (m, sig))
        lead = bpoly_coefficient(sig, n)
        expected = model.fixed.reduce(table.get(m, poly_zero()))
        if lead != expected:
            return Verdict(
                "conjugation-equation", False,
                f"leading coefficient of {format_monomial(m)} is "
                f"{format_poly(lead)}, expected {format_poly(expected)}",
                (m, lead, expected))
    return Verdict("conjugation-equation", True)


def verify_frame_multiplicative(report: FrameReport,
                                bound: int | None = None) -> Verdict:
    model = report.model
    top = model.bound if bound is None else bound
    classes = [(d, m) for d, m in model.even_basis_classes()]
    for d1, m1 in classes:
        for d2, m2 in classes:
            if d1 + d2 > top:
                continue
            prod = model.even.reduce(Poly(frozenset({m1})) * Poly(frozenset({m2})))
            lhs = bpoly_mul(model.fixed, report.sigma[(d1, m1)],
                            report.sigma[(d2, m2)])
            rhs = sigma_apply(report, prod)
            if lhs != rhs:
                return Verdict("frame-multiplicative", False,
                               f"{format_monomial(m1)} * {format_monomial(m2)}",
                               (m1, m2))
    return Verdict("frame-multiplicative", True)


def verify_steenrod_compat(model: SpaceModel, sq_bound: int | None = None,
                           bound: int | None = None) -> Verdict:
    """kappa0 Sq^{2l} = Sq^l kappa0 on every basis class, and odd squares
    of even classes vanish."""
    top_l = (model.bound if sq_bound is None else sq_bound) // 2
    for d, m in model.even_basis_classes(bound):
        x = Poly(frozenset({m}))
        k0 = kappa0_apply(model, x)
        for l in range(1, top_l + 1):
            even_sq = model.even.sq(2 * l, x)
            lhs = kappa0_apply(model, even_sq)
            rhs = model.fixed.sq(l, k0)
            if lhs != rhs:
                return Verdict(
                    "steenrod-compat", False,
                    f"kappa0 Sq^{2 * l} != Sq^{l} kappa0 on {format_monomial(m)}",
                    (m, l, lhs, rhs))
            odd = model.even.sq(2 * l - 1, x)
            if odd:
                return Verdict("steenrod-compat", False,
                               f"Sq^{2 * l - 1} nonzero on even class "
                               f"{format_monomial(m)}", (m, 2 * l - 1))
    return Verdict("steenrod-compat", True)


def nakayama_splitting_check(model: SpaceModel,
                             module: FreeHFModule | None = None,
                             bound: int | None = None,
                             kappa0: Mapping | None = None) -> Verdict:
    """Graded comparison with the wedge of spheres forced by the levels.

    In total degree d the map sends (dual class z in degree m, b^e) to
    the generators at level n_i <= m weighted by the coefficient of z in
    Sq^{m - n_i} kappa0(x_i); mod b it is the transposed kappa0 matrix.
    The verdict asks for an isomorphism in every degree up to the bound.
    """
    if module is None:
        purity = purity_check(model)
        if not purity.ok:
            return Verdict("nakayama-splitting", False,
                           f"purity failed: {purity.reason}")
        module = purity.module
    table = model.kappa0 if kappa0 is None else kappa0
    top = model.bound if bound is None else bound
    gen_items = list(module.generators)
    kappa_cache: dict[tuple[str, int], Poly] = {}

    def kappa_entry(name: str, level: int, j: int) -> Poly:
        key = (name, j)
        if key not in kappa_cache:
            base = model.fixed.reduce(table.get(parse_mono(name), poly_zero()))
            kappa_cache[key] = model.fixed.sq(j, base)
        return kappa_cache[key]

    def parse_mono(name: str) -> Monomial:
        p = parse_poly(name, set(model.even.degree_of))
        return next(iter(p.terms)) if p.terms else MONO_ONE

    for d in range(top + 1):
        source = []
        for m_deg in range(d + 1):
            for z in model.fixed.basis(m_deg):
                source.append((m_deg, z))
        target = [(idx, d - lvl) for idx, (nm, lvl) in enumerate(gen_items)
                  if d - lvl >= 0]
        tpos = {t: i for i, t in enumerate(target)}
        if len(source) != len(target):
            return Verdict("nakayama-splitting", False,
                           f"degree {d}: source dim {len(source)} != target "
                           f"dim {len(target)}", d)
        ech = GF2Echelon()
        rank = 0
        for m_deg, z in source:
            row = 0
            for idx, (nm, lvl) in enumerate(gen_items):
                j = m_deg - lvl
                if j < 0:
                    continue
                if z in kappa_entry(nm, lvl, j).terms:
                    col = tpos.get((idx, (d - m_deg) + j))
                    if col is not None:
                        row ^= 1 << col
            if ech.insert(row):
                rank += 1
        if rank != len(target):
            return Verdict("nakayama-splitting", False,
                           f"degree {d}: rank {rank} below {len(target)}", d)
    return Verdict("nakayama-splitting", True)


def borel_vs_R(model: SpaceModel, bound: int | None = None) -> Verdict:
    """Series of the Steinberg span against even tensor F[b], plus the
    section property: the residue of r.sigma(x) modulo b recovers
    kappa0(x), so kappa0^{-1} of it is x again."""
    top = model.bound if bound is None else bound
    rmod = compute_R(model.fixed, top)
    for d in range(top + 1):
        expected = sum(model.even.dim(j) for j in range(d + 1))
        if rmod.dim(d) != expected:
            return Verdict("borel-vs-R", False,
                           f"degree {d}: R dim {rmod.dim(d)} != even*F[b] dim "
                           f"{expected}", d)
    for d, m in model.even_basis_classes():
        if d > top:
            continue
        k0 = kappa0_apply(model, Poly(frozenset({m})))
        residue = steinberg_residue(model.fixed,
                                    steinberg(model.fixed, k0))
        if residue != k0:
            return Verdict("borel-vs-R", False,
                           f"section residue of {format_monomial(m)} is not "
                           f"kappa0 of it", (m, residue))
    return Verdict("borel-vs-R", True)


def unique_section_check(model: SpaceModel, bound: int | None = None,
                         max_generators: int = 14) -> Verdict:
    """Exhaustively enumerate the candidates for the frame in each even
    degree: elements of the Steinberg span with the required leading
    coefficient, no excess b-powers, and the section residue.  Exactly
    one candidate must survive per basis class."""
    top = model.bound if bound is None else bound
    for d, m in model.even_basis_classes(top):
        n = d // 2
        k0 = kappa0_apply(model, Poly(frozenset({m})))
        gens = st_generators_at(model.fixed, d)
        if len(gens) > max_generators:
            return Verdict("unique-section", False,
                           f"degree {d}: {len(gens)} generators exceed the "
                           f"enumeration guard", d)
        survivors = []
        for mask in range(1 << len(gens)):
            acc: set = set()
            for bit in range(len(gens)):
                if mask >> bit & 1:
                    acc ^= gens[bit][2].terms
            v = BPoly(frozenset(acc))
            if not v:
                continue
            topb = max_b_exponent(v)
            if topb is None or topb > n:
                continue
            if bpoly_coefficient(v, n) != k0:
                continue
            if steinberg_residue(model.fixed, v) != k0:
                continue
            survivors.append(v)
        if len(survivors) != 1:
            return Verdict("unique-section", False,
                           f"{len(survivors)} candidates for "
                           f"{format_monomial(m)} in degree {d}",
                           (m, survivors))
        expected = steinberg(model.fixed, k0)
        if survivors[0] != expected:
            return Verdict("unique-section", False,
                           f"candidate for {format_monomial(m)} is not the "
                           f"Steinberg lift", (m, survivors[0]))
    return Verdict("unique-section", True)


def kappa_shadow_check(model: SpaceModel, report: FrameReport,
                       twists=((0, 0), (1, 0), (0, 1), (2, 1))) -> Verdict:
    """Reading the kappa table through the character shadow: twist a
    generator by a^j u^k, push the coefficient side to F[a^{+-1}, u], and
    project at each u-exponent; the result must match the table rows."""
    for (d, m), rows in sorted(report.kappa.items()):
        n = d // 2
        for j, k in twists:
            seen: dict[Monomial, set] = {}
            for l in range(n + 1):
                for z in rows[l].terms:
                    seen.setdefault(z, set()).add((j + n - l, k + l))
            for z, terms in seen.items():
                elem = LaurentElem(GEOMFIX, frozenset(terms))
                for l in range(n + 1):
                    expected = 1 if z in rows[l].terms else 0
                    if shadow_projection(elem, k + l) != expected:
                        return Verdict("kappa-shadow", False,
                                       f"projection mismatch on "
                                       f"{format_monomial(m)} at twist "
                                       f"a^{j}u^{k}", (m, z, l))
    return Verdict("kappa-shadow", True)


def frame_check(model: SpaceModel, bound: int | None = None,
                sq_bound: int | None = None) -> tuple[bool, list, FrameReport | None]:
    verdicts = []
    purity = purity_check(model, bound)
    if not purity.ok:
        verdicts.append(Verdict(
            "purity", False,
            f"{purity.reason} at {purity.degree} (dims {purity.dims})"))
        return False, verdicts, None
    gens = ", ".join(f"{nm}@{lvl}" for nm, lvl in purity.module.generators)
    verdicts.append(Verdict("purity", True, f"generators: {gens}"))
    report = build_frame(model, bound)
    verdicts.append(verify_conjugation_equation(report))
    verdicts.append(verify_steenrod_compat(model, sq_bound, bound))
    verdicts.append(verify_frame_multiplicative(report, bound))
    verdicts.append(nakayama_splitting_check(model, purity.module, bound))
    verdicts.append(borel_vs_R(model, bound))
    report.verdicts = verdicts
    return all(v.ok for v in verdicts), verdicts, report


# ---------------------------------------------------------------------------
# Built-in models


def point_model() -> SpaceModel:
    even = UnstableAlgebra((), (), None, 8, "pt even")
    fixed = UnstableAlgebra((), (), None, 8, "pt fixed")
    return SpaceModel("pt", even, fixed, {MONO_ONE: poly_one()}, 4)


def sphere_model(n: int, slack: int = 18) -> SpaceModel:
    """The representation sphere on n copies of 1 + al."""
    if n < 1:
        raise ValueError("sphere level must be positive")
    ab = 4 * n + slack
    even = truncated_algebra((("x", 2 * n),), {"x": 2}, ab, f"S^{n}+{n}al even")
    fixed = truncated_algebra((("s", n),), {"s": 2}, ab, f"S^{n} fixed")
    kappa0 = {MONO_ONE: poly_one(), (("x", 1),): Poly(frozenset({(("s", 1),)}))}
    return SpaceModel(f"S^{n}+{n}al", even, fixed, kappa0, 2 * n)


def cp_model(n: int, slack: int = 18) -> SpaceModel:
    """Complex projective space with complex conjugation."""
    if n < 1:
        raise ValueError("projective dimension must be positive")
    ab = 4 * n + slack
    even = truncated_algebra((("x", 2),), {"x": n + 1}, ab, f"CP^{n} even")
    fixed = truncated_algebra((("t", 1),), {"t": n + 1}, ab, f"RP^{n} fixed")
    kappa0 = {}
    for k in range(n + 1):
        key = MONO_ONE if k == 0 else (("x", k),)
        val = MONO_ONE if k == 0 else (("t", k),)
        kappa0[key] = Poly(frozenset({val}))
    return SpaceModel(f"CP^{n}", even, fixed, kappa0, 2 * n)


def cp_product_model(a: int, b: int, slack: int = 18) -> SpaceModel:
    if a < 1 or b < 1:
        raise ValueError("factors must be positive-dimensional")
    top = 2 * (a + b)
    ab = 2 * top + slack
    even = truncated_algebra((("x", 2), ("y", 2)), {"x": a + 1, "y": b + 1},
                             ab, f"CP^{a}xCP^{b} even")
    fixed = truncated_algebra((("t1", 1), ("t2", 1)), {"t1": a + 1, "t2": b + 1},
                              ab, f"RP^{a}xRP^{b} fixed")
    kappa0 = {}
    for i in range(a + 1):
        for j in range(b + 1):
            key = []
            val = []
            if i:
                key.append(("x", i))
                val.append(("t1", i))
            if j:
                key.append(("y", j))
                val.append(("t2", j))
            kappa0[tuple(key)] = Poly(frozenset({tuple(val)}))
    return SpaceModel(f"CP^{a}xCP^{b}", even, fixed, kappa0, top)


def builtin_models() -> list[SpaceModel]:
    models = [point_model()]
    models += [sphere_model(n) for n in range(1, 9)]
    models += [cp_model(n) for n in range(1, 9)]
    for a in range(1, 6):
        for b in range(a, 7 - a):
            models.append(cp_product_model(a, b))
    return models


# ---------------------------------------------------------------------------
# JSON round trip


def _algebra_from_dict(data, pointer: str, default_bound: int) -> UnstableAlgebra:
    if not isinstance(data, dict):
        raise ModelError("expected an object", pointer)
    gens_raw = data.get("generators")
    if not isinstance(gens_raw, list):
        raise ModelError("missing generators list", f"{pointer}/generators")
    gens = []
    for idx, g in enumerate(gens_raw):
        if (not isinstance(g, dict) or not isinstance(g.get("name"), str)
                or not isinstance(g.get("degree"), int)):
            raise ModelError("generator needs a name and an integer degree",
                             f"{pointer}/generators/{idx}")
        gens.append((g["name"], g["degree"]))
    names = [g for g, _ in gens]
    bound = data.get("bound", default_bound)
    if not isinstance(bound, int) or bound < 0:
        raise ModelError("bound must be a non-negative integer",
                         f"{pointer}/bound")
    relations = []
    for idx, r in enumerate(data.get("relations", [])):
        if not isinstance(r, str):
            raise ModelError("relation must be a string",
                             f"{pointer}/relations/{idx}")
        try:
            relations.append(parse_poly(r, names))
        except ValueError as exc:
            raise ModelError(str(exc), f"{pointer}/relations/{idx}") from exc
    sq_tables: dict = {}
    sq_raw = data.get("sq", {})
    if not isinstance(sq_raw, dict):
        raise ModelError("sq must be an object", f"{pointer}/sq")
    for g, table in sq_raw.items():
        if g not in names:
            raise ModelError(f"unknown generator {g!r}", f"{pointer}/sq/{g}")
        if not isinstance(table, dict):
            raise ModelError("expected an object of squares",
                             f"{pointer}/sq/{g}")
        sq_tables[g] = {}
        for i, val in table.items():
            try:
                idx = int(i)
            except ValueError as exc:
                raise ModelError("square index must be an integer",
                                 f"{pointer}/sq/{g}/{i}") from exc
            if not isinstance(val, str):
                raise ModelError("square value must be a string",
                                 f"{pointer}/sq/{g}/{i}")
            try:
                sq_tables[g][idx] = parse_poly(val, names)
            except ValueError as exc:
                raise ModelError(str(exc), f"{pointer}/sq/{g}/{i}") from exc
    try:
        return UnstableAlgebra(gens, relations, sq_tables, bound,
                               data.get("name", ""))
    except ValueError as exc:
        raise ModelError(str(exc), pointer) from exc


def load_model(source) -> SpaceModel:
    """Build a model from a JSON file path, JSON text, or a dict."""
    if isinstance(source, dict):
        data = source
    else:
        text = source
        if "{" not in str(source):
            with open(source, "r", encoding="utf-8") as fh:
                text = fh.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ModelError(
                f"malformed JSON at line {exc.lineno}, column {exc.colno}: "
                f"{exc.msg}") from exc
    if not isinstance(data, dict):
        raise ModelError("model must be a JSON object")
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ModelError("missing model name", "/name")
    bound = data.get("bound")
    if not isinstance(bound, int) or bound < 0:
        raise ModelError("bound must be a non-negative integer", "/bound")
    if "even" not in data:
        raise ModelError("missing even cohomology", "/even")
    if "fixed" not in data:
        raise ModelError("missing fixed-point cohomology", "/fixed")
    even = _algebra_from_dict(data["even"], "/even", 2 * bound)
    fixed = _algebra_from_dict(data["fixed"], "/fixed", 2 * bound)
    for g, d in even.generators:
        if d % 2:
            raise ModelError(f"generator {g!r} has odd degree {d}",
                             "/even/generators")
    if even.bound < bound:
        raise ModelError("even bound below the model bound", "/even/bound")
    if fixed.bound < bound:
        raise ModelError("fixed bound below the model bound", "/fixed/bound")
    kraw = data.get("kappa0")
    if not isinstance(kraw, dict):
        raise ModelError("missing kappa0 table", "/kappa0")
    kappa0: dict[Monomial, Poly] = {}
    even_names = [g for g, _ in even.generators]
    fixed_names = [g for g, _ in fixed.generators]
    for key, val in kraw.items():
        try:
            kp = even.reduce(parse_poly(key, even_names))
        except ValueError as exc:
            raise ModelError(f"bad key: {exc}", f"/kappa0/{key}") from exc
        if len(kp.terms) != 1:
            raise ModelError("key must be a single basis monomial",
                             f"/kappa0/{key}")
        mono = next(iter(kp.terms))
        if not isinstance(val, str):
            raise ModelError("value must be a string", f"/kappa0/{key}")
        try:
            img = fixed.reduce(parse_poly(val, fixed_names))
        except ValueError as exc:
            raise ModelError(f"bad value: {exc}", f"/kappa0/{key}") from exc
        d = even.mono_degree(mono)
        if d % 2:
            raise ModelError(f"key degree {d} is odd", f"/kappa0/{key}")
        if img:
            vd = fixed.poly_degree(img)
            if vd is not None and vd != d // 2:
                raise ModelError(
                    f"value degree {vd} is not half of {d}", f"/kappa0/{key}")
        if mono in kappa0:
            raise ModelError("duplicate key", f"/kappa0/{key}")
        kappa0[mono] = img
    if MONO_ONE not in kappa0:
        kappa0[MONO_ONE] = poly_one()
    for n in range(0, bound // 2 + 1):
        basis = even.basis(2 * n)
        fixed_basis = fixed.basis(n)
        findex = {m: i for i, m in enumerate(fixed_basis)}
        ech = GF2Echelon()
        for m in basis:
            if m not in kappa0:
                raise ModelError(
                    f"no entry for basis monomial {format_monomial(m)} of "
                    f"degree {2 * n}", "/kappa0")
            row = 0
            for t in kappa0[m].terms:
                row ^= 1 << findex[t]
            ech.insert(row)
        if ech.rank < len(fixed_basis):
            raise ModelError(f"kappa0 not surjective in degree {2 * n}",
                             "/kappa0")
    return SpaceModel(name, even, fixed, kappa0, bound)


def _algebra_to_dict(alg: UnstableAlgebra) -> dict:
    out = {
        "generators": [{"name": g, "degree": d} for g, d in alg.generators],
        "relations": [format_poly(r) for r in alg.relations],
        "bound": alg.bound,
    }
    sq: dict = {}
    for (g, i), val in sorted(alg._sq_rules.items()):
        sq.setdefault(g, {})[str(i)] = format_poly(val)
    if sq:
        out["sq"] = sq
    if alg.name:
        out["name"] = alg.name
    return out


def model_to_dict(model: SpaceModel) -> dict:
    kappa0 = {}
    for m in sorted(model.kappa0):
        kappa0[format_monomial(m)] = format_poly(model.kappa0[m])
    return {
        "name": model.name,
        "even": _algebra_to_dict(model.even),
        "fixed": _algebra_to_dict(model.fixed),
        "kappa0": kappa0,
        "bound": model.bound,
    }


def save_model(model: SpaceModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(model), fh, indent=2, sort_keys=True)
        fh.write("\n")
