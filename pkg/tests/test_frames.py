"""Conjugation-space models: purity, frames, splittings, uniqueness.

Frozen oracles: for the projective plane with fixed points the real
projective plane,

    r.sigma(x)   = b*t + t^2        kappa table (t, t^2)
    r.sigma(x^2) = b^2*t^2          kappa table (t^2, 0, 0)

and for representation spheres the frame is a single leading term.
"""

import json

import pytest

from conjspaces import frames as fr
from conjspaces.coefficients import chart_lookup
from conjspaces.degree import RODegree
from conjspaces.errors import ModelError
from conjspaces.gf2 import MONO_ONE, Poly, poly_gen, poly_one, poly_zero
from conjspaces.steenrod import bpoly_coefficient, format_bpoly, max_b_exponent

X1 = (("x", 1),)
X2 = (("x", 2),)


def test_builtin_catalogue():
    models = fr.builtin_models()
    names = [m.name for m in models]
    assert names[0] == "pt"
    assert "S^3+3al" in names
    assert "CP^8" in names
    assert "CP^2xCP^3" in names
    assert "CP^3xCP^2" not in names  # unordered products listed once
    assert len(names) == len(set(names))
    assert len(models) == 26


def test_purity_positive():
    res = fr.purity_check(fr.cp_model(2))
    assert res.ok
    assert res.module.generators == (("1", 0), ("x", 1), ("x^2", 2))
    res2 = fr.purity_check(fr.sphere_model(3))
    assert res2.ok
    assert res2.module.generators == (("1", 0), ("x", 3))


def test_purity_dimension_mismatch():
    # fixed points too small: kappa0 still surjective degreewise is not
    # even required here, purity fails on the level dimensions
    even = fr.truncated_algebra((("x", 2), ("y", 2)), {"x": 2, "y": 2}, 20)
    fixed = fr.truncated_algebra((("t", 1),), {"t": 2}, 20)
    model = fr.SpaceModel("mismatch", even, fixed,
                          {MONO_ONE: poly_one(),
                           X1: poly_gen("t"), (("y", 1),): poly_gen("t")}, 4)
    res = fr.purity_check(model)
    assert not res.ok
    assert res.reason == "level dimension mismatch"
    assert res.degree == 1
    assert res.dims == (2, 1)


def test_purity_odd_class():
    even = fr.UnstableAlgebra((("e", 3),), (Poly(frozenset({(("e", 2),)})),),
                              None, 20)
    fixed = fr.truncated_algebra((("t", 1),), {"t": 2}, 20)
    model = fr.SpaceModel("odd", even, fixed, {MONO_ONE: poly_one()}, 6)
    res = fr.purity_check(model)
    assert not res.ok and res.reason == "odd concentration" and res.degree == 3


def test_module_cohomology():
    module = fr.FreeHFModule((("1", 0), ("x", 1)))
    at = fr.module_cohomology(module, RODegree(1, 1))
    # the unit summand contributes its (1+al) cell, x its unit cell
    assert (("au", 0, 0), "x") in at
    assert len(at) == sum(
        chart_lookup(RODegree(1, 1) - RODegree(lvl, lvl)).dim_pt
        for lvl in (0, 1))
    lift = fr.lift_diagonal_class(module, ["1", "x"])
    assert fr.restrict_free_element(module, lift) == ((0, "1"), (1, "x"))
    with pytest.raises(ValueError):
        fr.lift_diagonal_class(module, ["nope"])


def test_frame_frozen_cp2():
    model = fr.cp_model(2)
    report = fr.build_frame(model)
    assert format_bpoly(report.sigma[(2, X1)]) == "b*t + t^2"
    assert format_bpoly(report.sigma[(4, X2)]) == "b^2*t^2"
    assert report.kappa[(2, X1)] == (poly_gen("t"), poly_gen("t", 2))
    assert report.kappa[(4, X2)] == (poly_gen("t", 2), poly_zero(), poly_zero())
    assert fr.verify_conjugation_equation(report).ok


def test_frame_sphere_single_term():
    for n in (1, 2, 3, 5):
        model = fr.sphere_model(n)
        report = fr.build_frame(model)
        sig = report.sigma[(2 * n, X1)]
        assert len(sig.terms) == 1
        assert max_b_exponent(sig) == n
        assert bpoly_coefficient(sig, n) == poly_gen("s")


def test_conjugation_equation_mutation():
    model = fr.cp_model(2)
    report = fr.build_frame(model)
    corrupted = dict(model.kappa0)
    corrupted[X1], corrupted[X2] = corrupted[X2], corrupted[X1]
    verdict = fr.verify_conjugation_equation(report, corrupted)
    assert not verdict.ok
    assert "leading coefficient" in verdict.detail
    assert verdict.witness is not None


def test_steenrod_compat_all_builtins():
    for model in fr.builtin_models():
        assert fr.verify_steenrod_compat(model).ok, model.name


def test_steenrod_compat_mutation():
    # degree-preserving swap t1 <-> t2 on the line factors: kappa0 stays
    # a graded bijection, so the conjugation equation still holds, but
    # the squares distinguish the two truncation heights
    model = fr.cp_product_model(1, 2)
    bad = dict(model.kappa0)
    bad[X1], bad[(("y", 1),)] = bad[(("y", 1),)], bad[X1]
    mutant = fr.SpaceModel(model.name, model.even, model.fixed, bad, model.bound)
    verdict = fr.verify_steenrod_compat(mutant)
    assert not verdict.ok
    assert fr.verify_conjugation_equation(fr.build_frame(mutant)).ok


def test_degree_breaking_mutation():
    # swapping the images of x^2 and x^3 is not degree-preserving, so
    # the b-power cap fires and the splitting matrix loses rank
    model = fr.cp_model(3)
    bad = dict(model.kappa0)
    bad[X2], bad[(("x", 3),)] = bad[(("x", 3),)], bad[X2]
    mutant = fr.SpaceModel(model.name, model.even, model.fixed, bad, model.bound)
    verdict = fr.verify_conjugation_equation(fr.build_frame(mutant))
    assert not verdict.ok and "b-power" in verdict.detail
    purity = fr.purity_check(mutant)
    assert not fr.nakayama_splitting_check(mutant, purity.module).ok


def test_nakayama_positive_and_mutations():
    model = fr.cp_model(2)
    purity = fr.purity_check(model)
    assert fr.nakayama_splitting_check(model, purity.module).ok
    dropped = fr.FreeHFModule(purity.module.generators[:-1])
    verdict = fr.nakayama_splitting_check(model, dropped)
    assert not verdict.ok and "dim" in verdict.detail
    zeroed = dict(model.kappa0)
    zeroed[X1] = poly_zero()
    verdict2 = fr.nakayama_splitting_check(model, purity.module, kappa0=zeroed)
    assert not verdict2.ok and "rank" in verdict2.detail


def test_borel_vs_r():
    for model in (fr.cp_model(1), fr.cp_model(3), fr.sphere_model(2),
                  fr.cp_product_model(1, 2)):
        assert fr.borel_vs_R(model).ok, model.name
    # a fixed-point algebra larger than the even side breaks the series
    even = fr.UnstableAlgebra((), (), None, 20)
    fixed = fr.truncated_algebra((("t", 1),), {"t": 2}, 20)
    bad = fr.SpaceModel("bad", even, fixed, {MONO_ONE: poly_one()}, 4)
    verdict = fr.borel_vs_R(bad)
    assert not verdict.ok


def test_unique_sections():
    for model in (fr.sphere_model(1), fr.cp_model(2)):
        assert fr.unique_section_check(model, bound=6).ok, model.name
    guard = fr.unique_section_check(fr.cp_model(2), max_generators=0)
    assert not guard.ok and "enumeration guard" in guard.detail


def test_kappa_shadow():
    for model in (fr.sphere_model(2), fr.cp_model(3)):
        report = fr.build_frame(model)
        assert fr.kappa_shadow_check(model, report).ok, model.name


def test_frame_multiplicative():
    model = fr.cp_product_model(1, 1)
    report = fr.build_frame(model)
    assert fr.verify_frame_multiplicative(report).ok


def test_frame_check_end_to_end():
    ok, verdicts, report = fr.frame_check(fr.cp_model(2))
    assert ok and report is not None
    assert [v.name for v in verdicts] == [
        "purity", "conjugation-equation", "steenrod-compat",
        "frame-multiplicative", "nakayama-splitting", "borel-vs-R"]
    even = fr.UnstableAlgebra((("e", 3),), (Poly(frozenset({(("e", 2),)})),),
                              None, 20)
    fixed = fr.truncated_algebra((("t", 1),), {"t": 2}, 20)
    bad = fr.SpaceModel("odd", even, fixed, {MONO_ONE: poly_one()}, 6)
    ok2, verdicts2, report2 = fr.frame_check(bad)
    assert not ok2 and report2 is None
    assert verdicts2[0].name == "purity" and not verdicts2[0].ok


# ---------------------------------------------------------------------------
# JSON round trip


def test_model_round_trip(tmp_path):
    model = fr.cp_product_model(1, 2)
    path = tmp_path / "model.json"
    fr.save_model(model, str(path))
    back = fr.load_model(str(path))
    assert back.name == model.name
    assert back.bound == model.bound
    assert back.kappa0 == model.kappa0
    for d in range(model.bound + 1):
        assert back.even.dim(d) == model.even.dim(d)
        assert back.fixed.dim(d) == model.fixed.dim(d)
    ok, _, _ = fr.frame_check(back)
    assert ok


def test_load_model_from_text():
    data = fr.model_to_dict(fr.cp_model(1))
    model = fr.load_model(json.dumps(data))
    assert model.name == "CP^1"


def _base_dict():
    return {
        "name": "toy", "bound": 2,
        "even": {"generators": [{"name": "x", "degree": 2}],
                 "relations": ["x^2"], "bound": 12},
        "fixed": {"generators": [{"name": "t", "degree": 1}],
                  "relations": ["t^2"], "bound": 12},
        "kappa0": {"1": "1", "x": "t"},
    }


def test_load_model_accepts_base():
    model = fr.load_model(_base_dict())
    ok, _, _ = fr.frame_check(model)
    assert ok


@pytest.mark.parametrize("mutate,needle", [
    (lambda d: d.pop("name"), "/name"),
    (lambda d: d.pop("bound"), "/bound"),
    (lambda d: d.pop("even"), "/even"),
    (lambda d: d.pop("fixed"), "/fixed"),
    (lambda d: d["even"].pop("generators"), "/even/generators"),
    (lambda d: d["even"]["generators"].append({"name": "e", "degree": 3}),
     "odd degree"),
    (lambda d: d["even"]["relations"].append("x + 1"), "homogeneous"),
    (lambda d: d["even"]["relations"].append("x*y"), "/even/relations/1"),
    (lambda d: d.__setitem__("kappa0", {"1": "1"}), "no entry"),
    (lambda d: d["kappa0"].__setitem__("x", "q"), "/kappa0/x"),
    (lambda d: d["kappa0"].__setitem__("x", "0"), "not surjective in degree 2"),
    (lambda d: d["kappa0"].__setitem__("x", "1"), "degree"),
    (lambda d: d["even"].__setitem__("bound", 1), "/even/bound"),
    (lambda d: d["even"].__setitem__("sq", {"q": {}}), "/even/sq/q"),
])
def test_load_model_errors(mutate, needle):
    data = _base_dict()
    mutate(data)
    with pytest.raises(ModelError) as exc:
        fr.load_model(data)
    assert needle in str(exc.value), str(exc.value)


def test_load_model_malformed_json():
    with pytest.raises(ModelError) as exc:
        fr.load_model("{not json")
    assert "line" in str(exc.value)


def test_kappa0_apply_missing_entry():
    model = fr.cp_model(2)
    stripped = fr.SpaceModel(model.name, model.even, model.fixed,
                             {MONO_ONE: poly_one(), X1: poly_gen("t")},
                             model.bound)
    with pytest.raises(ModelError) as exc:
        fr.kappa0_apply(stripped, Poly(frozenset({X2})))
    assert "x^2" in str(exc.value)
