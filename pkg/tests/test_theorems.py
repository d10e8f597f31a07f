import random

import pytest

from niemytzki.setdsl import All, Union, normalize, random_expr
from niemytzki.theorems import (
    BOUNDARY_ORDER,
    PROPERTY_ORDER,
    UnknownProperty,
    classify,
    explain,
)
from niemytzki.trivalent import FALSE, TRUE, UNKNOWN


def verdicts(report, names):
    return {name: report.properties[name] for name in names}


class TestFlagshipClassifications:
    def test_tangent_ball_extreme(self):
        r = classify("empty", 2)
        assert r.properties["perfect"] is TRUE
        for name in ("lindelof", "normal", "paracompact", "countably_paracompact",
                     "weakly_paracompact", "locally_compact", "metrizable"):
            assert r.properties[name] is FALSE, name
        assert r.properties["separable"] is TRUE
        assert r.boundary_dim == -1

    def test_euclidean_extreme(self):
        r = classify("all", 3)
        for name in ("metrizable", "second_countable", "hereditarily_lindelof",
                     "locally_compact", "perfect", "lindelof", "normal",
                     "paracompact", "countably_paracompact", "sigma_compact",
                     "boundary_z_embedded", "boundary_cstar_embedded"):
            assert r.properties[name] is TRUE, name
        assert r.dim == 3
        assert r.boundary_dim == 2

    def test_countable_dense_boundary_set(self):
        r = classify("rationals", 2)
        assert r.properties["perfect"] is FALSE
        assert r.properties["lindelof"] is FALSE

    def test_co_countable_dense_boundary_set(self):
        r = classify("!rationals", 2)
        assert r.properties["second_countable"] is TRUE
        assert r.properties["sigma_compact"] is FALSE

    def test_cantor_and_its_complement(self):
        for text in ("cantor", "!cantor"):
            r = classify(text, 2)
            assert r.properties["perfect"] is TRUE, text
            assert r.properties["lindelof"] is FALSE, text

    def test_bernstein(self):
        r = classify("bernstein", 2)
        assert r.properties["lindelof"] is TRUE
        assert r.properties["normal"] is TRUE
        assert r.properties["perfect"] is FALSE
        assert r.dim == 2


class TestConstantsAndBoundaryBlock:
    def test_constants_hold_for_every_boundary_set(self):
        rng = random.Random(13)
        for _ in range(40):
            r = classify(random_expr(rng, 2, max_depth=3), 2)
            for name in ("separable", "first_countable", "tychonoff",
                         "completely_hausdorff"):
                assert r.properties[name] is TRUE
            assert r.boundary["hereditarily_collectionwise_normal"] is TRUE

    def test_boundary_block_mirrors_the_space(self):
        rng = random.Random(14)
        for _ in range(40):
            r = classify(random_expr(rng, 3, max_depth=3), 3)
            assert r.boundary["perfect"] is r.properties["perfect"]
            assert r.boundary["lindelof"] is r.properties["lindelof"]
            assert r.boundary["sigma_compact"] is r.properties["sigma_compact"]

    def test_weakly_paracompact_only_settled_for_the_empty_set(self):
        assert classify("empty", 2).properties["weakly_paracompact"] is FALSE
        assert classify("cantor", 2).properties["weakly_paracompact"] is UNKNOWN
        assert classify("all", 2).properties["weakly_paracompact"] is UNKNOWN

    def test_dim_is_open_without_normality(self):
        assert classify("empty", 4).dim is None
        assert classify("all", 4).dim == 4

    def test_boundary_dim_table(self):
        assert classify("point(0)", 2).boundary_dim == 0
        assert classify("lattice", 3).boundary_dim == 0
        assert classify("cball(0,0;1)", 3).boundary_dim == 2
        assert classify("oball(0;1)", 2).boundary_dim == 1
        assert classify("cantor | lattice", 2).boundary_dim is None


class TestEquivalenceClasses:
    def test_verdict_groups_are_identical(self):
        rng = random.Random(15)
        for _ in range(60):
            r = classify(random_expr(rng, 2, max_depth=4), 2)
            quadruple = {r.properties[n] for n in
                         ("lindelof", "normal", "paracompact", "countably_paracompact")}
            triple = {r.properties[n] for n in
                      ("metrizable", "second_countable", "hereditarily_lindelof")}
            pair = {r.properties[n] for n in
                    ("boundary_z_embedded", "boundary_cstar_embedded", "normal")}
            assert len(quadruple) == 1 and len(triple) == 1 and len(pair) == 1

    def test_implications_never_break(self):
        rng = random.Random(16)
        for _ in range(60):
            r = classify(random_expr(rng, 3, max_depth=4), 3)
            p = r.properties
            for ante, cons in (("sigma_compact", "second_countable"),
                               ("sigma_compact", "perfect"),
                               ("sigma_compact", "lindelof"),
                               ("second_countable", "lindelof"),
                               ("locally_compact", "metrizable")):
                if p[ante] is TRUE:
                    assert p[cons] is not FALSE, (ante, cons)

    def test_full_boundary_gives_the_euclidean_report(self):
        rng = random.Random(17)
        reference = classify(All(), 2)
        for _ in range(30):
            e = normalize(Union((All(), random_expr(rng, 2, max_depth=2))))
            r = classify(e, 2)
            assert r.properties == reference.properties
            assert r.dim == reference.dim


class TestTrace:
    def test_every_decided_property_has_a_step(self):
        r = classify("bernstein", 2)
        for name in PROPERTY_ORDER:
            if r.properties[name] is not UNKNOWN:
                assert explain(r, name), name
        for name in BOUNDARY_ORDER:
            if r.boundary[name] is not UNKNOWN:
                assert explain(r, f"boundary.{name}"), name

    def test_bernstein_lindelof_trace_cites_the_axiom_and_the_rule(self):
        steps = explain(classify("bernstein", 2), "lindelof")
        rules = [s.rule for s in steps]
        assert "AX-bernstein" in rules
        assert "R4" in rules
        axiom = next(s for s in steps if s.rule == "AX-bernstein")
        assert axiom.citation == "do not contain uncountable compacta"
        main = next(s for s in steps if s.rule == "R4")
        assert main.citation == "The space (X_n, τ(A)) is paracompact."

    def test_separable_is_a_constant_rule(self):
        steps = explain(classify("cantor", 2), "separable")
        assert [s.rule for s in steps] == ["R7"]

    def test_unknown_property_name_raises(self):
        r = classify("cantor", 2)
        with pytest.raises(UnknownProperty):
            explain(r, "compactly_generated")

    def test_dim_and_boundary_namespaces(self):
        r = classify("all", 2)
        assert explain(r, "dim")[0].rule == "R8"
        assert explain(r, "boundary.dim")[0].rule == "B3"
        assert explain(r, "boundary.perfect")


class TestReportJson:
    def test_schema_fields(self):
        data = classify("cantor | point(2)", 2).to_json()
        assert data["space"] == "cantor | point(2)"
        assert data["dimension"] == 2
        assert set(data) == {"space", "dimension", "properties", "boundary_subspace", "trace"}
        assert data["properties"]["perfect"] == "true"
        assert data["boundary_subspace"]["hereditarily_collectionwise_normal"] == "true"
        assert all({"rule", "citation", "verdict"} <= set(t) for t in data["trace"])

    def test_dim_serialization(self):
        assert classify("all", 2).to_json()["properties"]["dim"] == 2
        assert classify("empty", 2).to_json()["properties"]["dim"] == "unknown"
