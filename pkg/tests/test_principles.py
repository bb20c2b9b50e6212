import pytest
from hypothesis import given, strategies as st

from conftest import assert_close, vectors
from fairalloc import (
    DIORTHOTIC,
    MAXIMIZE,
    MINIMIZE,
    PRINCIPLES,
    RHO_INF,
    AllocationContext,
    DispersionMetric,
    PrincipleSpec,
    ValueVector,
    ZeroInputError,
    direction,
    foster,
    mean,
    score_dianemetic,
    score_diorthotic,
)

STD = DispersionMetric("std_dev")


def _ctx(x, y, u):
    return AllocationContext(ValueVector(x), ValueVector(y), ValueVector(u))


def _spec(principle, **kwargs):
    return PrincipleSpec(principle=principle, **kwargs)


SCENARIO5_CTX = _ctx([0.9, 0.1], [0.6, 0.4], [0.7, 0.95])
SCENARIO4_CTX = _ctx([0.9, 0.1], [0.8, 0.2], [1.0, 0.5])


class TestSpecValidation:
    def test_threshold_only_for_sufficiency(self):
        with pytest.raises(ValueError):
            _spec("equality", threshold=1.0, metric=STD)
        with pytest.raises(ValueError):
            _spec("sufficiency")

    def test_metric_only_for_dispersion_principles(self):
        with pytest.raises(ValueError):
            _spec("difference", metric=STD)

    def test_variants_checked(self):
        with pytest.raises(ValueError):
            _spec("difference", variant="foster")
        with pytest.raises(ValueError):
            _spec("sufficiency", threshold=1.0, variant="noop")

    def test_basis_rejected_for_equality_of_opportunity(self):
        with pytest.raises(ValueError):
            _spec("equality_of_opportunity", basis="output")

    def test_rho_weights_only_for_diorthotic_greater_good(self):
        _spec("greater_good", mode=DIORTHOTIC, rho=2.0)
        with pytest.raises(ValueError):
            _spec("greater_good", rho=2.0)
        with pytest.raises(ValueError):
            _spec("difference", mode=DIORTHOTIC, weights=(1.0, 1.0))

    def test_default_bases(self):
        assert _spec("difference").resolved_basis() == "output"
        assert _spec("greater_good").resolved_basis() == "utility"
        assert _spec("equality_of_opportunity").resolved_basis() == "input"
        assert _spec("sufficiency", threshold=0.5).resolved_basis() == "output"


class TestDianemetic:
    def test_difference_on_utilities(self):
        spec = _spec("difference", variant="rawlsian", basis="utility")
        result = score_dianemetic(spec, SCENARIO5_CTX)
        assert_close(result.value, 0.7)
        assert result.direction == MAXIMIZE

    def test_greater_good(self):
        result = score_dianemetic(_spec("greater_good"), SCENARIO4_CTX)
        assert_close(result.value, 1.5)
        assert result.direction == MAXIMIZE

    def test_equality_on_equal_utilities(self):
        spec = _spec("equality", basis="utility", metric=STD)
        ctx = _ctx([1, 1], [0.3, 0.7], [0.5, 0.5])
        result = score_dianemetic(spec, ctx)
        assert result.value == 0.0
        assert result.direction == MINIMIZE

    def test_harsanyian_variant_takes_the_mean(self):
        spec = _spec("difference", variant="harsanyian", basis="utility")
        assert_close(score_dianemetic(spec, SCENARIO4_CTX).value, 0.75)

    def test_proportion_needs_positive_inputs(self):
        ctx = _ctx([1, 0], [0.5, 0.5], [0.5, 0.5])
        with pytest.raises(ZeroInputError):
            score_dianemetic(_spec("proportion", metric=STD), ctx)

    def test_sufficiency_share(self):
        spec = _spec("sufficiency", basis="utility", threshold=0.5)
        assert score_dianemetic(spec, SCENARIO4_CTX).value == 1.0


class TestDiorthotic:
    def test_difference_on_outputs(self):
        spec = _spec("difference", mode=DIORTHOTIC, basis="output")
        ctx = _ctx([8, 12], [3.5, 3.5], [3.325, 2.975])
        result = score_diorthotic(spec, ctx)
        assert_close(result.value, 3.5)
        assert result.direction == MAXIMIZE

    def test_greater_good_at_frontier_endpoint(self):
        spec = _spec("greater_good", mode=DIORTHOTIC)
        ctx = _ctx([8, 12], [7.0, 0.0], [6.65, 0.0])
        result = score_diorthotic(spec, ctx)
        assert_close(result.value, 6.65)

    def test_proportion_dispersion_of_ratios(self):
        spec = _spec("proportion", mode=DIORTHOTIC, basis="output", metric=STD)
        ctx = _ctx([8, 12], [2.8, 4.2], [2.66, 3.57])
        result = score_diorthotic(spec, ctx)
        assert result.value == pytest.approx(0.0, abs=1e-9)
        assert result.direction == MAXIMIZE

    def test_proportion_noop_scores_zero(self):
        spec = _spec("proportion", mode=DIORTHOTIC, variant="noop")
        assert score_diorthotic(spec, SCENARIO4_CTX).value == 0.0

    def test_equality_foster_default_and_sen(self):
        ctx = _ctx([8, 12], [3.5, 3.5], [3.325, 2.975])
        assert_close(
            score_diorthotic(_spec("equality", mode=DIORTHOTIC), ctx).value,
            foster(ctx.outputs),
        )
        assert_close(
            score_diorthotic(_spec("equality", mode=DIORTHOTIC, variant="sen"), ctx).value,
            3.5,
        )

    def test_equality_of_opportunity_negates_dispersion(self):
        spec = _spec("equality_of_opportunity", mode=DIORTHOTIC, metric=STD)
        assert_close(score_diorthotic(spec, _ctx([8, 12], [1, 1], [1, 1])).value, -2.0)

    def test_greater_good_isoelastic_parameters(self):
        spec = _spec("greater_good", mode=DIORTHOTIC, rho=RHO_INF)
        ctx = _ctx([1, 1], [1, 1], [0.4, 0.9])
        assert_close(score_diorthotic(spec, ctx).value, 0.4)

    def test_mode_mismatch_rejected(self):
        with pytest.raises(ValueError):
            score_diorthotic(_spec("greater_good"), SCENARIO4_CTX)
        with pytest.raises(ValueError):
            score_dianemetic(_spec("greater_good", mode=DIORTHOTIC), SCENARIO4_CTX)


class TestProperties:
    @given(
        st.lists(
            st.lists(st.floats(min_value=0.05, max_value=5.0), min_size=2, max_size=2),
            min_size=2,
            max_size=8,
        )
    )
    def test_argmax_consistency_across_modes(self, utility_rows):
        ctxs = [_ctx([1.0, 2.0], [0.5, 0.5], u) for u in utility_rows]
        gg_dia = _spec("greater_good")
        gg_dio = _spec("greater_good", mode=DIORTHOTIC)
        by_dia = max(range(len(ctxs)), key=lambda i: score_dianemetic(gg_dia, ctxs[i]).value)
        by_dio = max(range(len(ctxs)), key=lambda i: score_diorthotic(gg_dio, ctxs[i]).value)
        assert by_dia == by_dio
        diff_dia = _spec("difference", basis="utility")
        diff_dio = _spec("difference", mode=DIORTHOTIC, basis="utility")
        by_dia = max(range(len(ctxs)), key=lambda i: score_dianemetic(diff_dia, ctxs[i]).value)
        by_dio = max(range(len(ctxs)), key=lambda i: score_diorthotic(diff_dio, ctxs[i]).value)
        assert by_dia == by_dio

    @given(vectors(min_size=2, max_size=12, positive=True))
    def test_equal_vector_optimal_for_dispersion_principles(self, y):
        equal = ValueVector([mean(y)] * len(y))
        spec = _spec("equality", metric=STD)
        ctx_any = _ctx([1.0] * len(y), list(y.values), [1.0] * len(y))
        ctx_equal = _ctx([1.0] * len(y), list(equal.values), [1.0] * len(y))
        assert (
            score_dianemetic(spec, ctx_equal).value
            <= score_dianemetic(spec, ctx_any).value + 1e-12
        )

    @given(vectors(min_size=2, max_size=12), st.data())
    def test_sufficiency_monotone_in_outputs(self, y, data):
        i = data.draw(st.integers(0, len(y) - 1))
        bump = data.draw(st.floats(min_value=0.0, max_value=10.0))
        threshold = data.draw(st.floats(min_value=0.0, max_value=1e6))
        spec = _spec("sufficiency", threshold=threshold)
        ones = [1.0] * len(y)
        raised = list(y.values)
        raised[i] += bump
        before = score_dianemetic(spec, _ctx(ones, list(y.values), ones)).value
        after = score_dianemetic(spec, _ctx(ones, raised, ones)).value
        assert after >= before

    @given(vectors(min_size=2, max_size=10, positive=True))
    def test_basis_swap_coherence_with_identity_utility(self, y):
        # u = y makes output-basis and utility-basis scores identical
        values = list(y.values)
        ctx = _ctx([1.0] * len(y), values, values)
        for principle in PRINCIPLES:
            if principle == "equality_of_opportunity":
                continue
            kwargs = {}
            if principle == "sufficiency":
                kwargs["threshold"] = 0.5
            if principle in ("equality", "proportion"):
                kwargs["metric"] = STD
            on_y = _spec(principle, basis="output", **kwargs)
            on_u = _spec(principle, basis="utility", **kwargs)
            assert score_dianemetic(on_y, ctx).value == score_dianemetic(on_u, ctx).value

    def test_direction_table(self):
        assert direction(_spec("equality", metric=STD)) == MINIMIZE
        assert direction(_spec("proportion")) == MINIMIZE
        assert direction(_spec("equality_of_opportunity")) == MINIMIZE
        assert direction(_spec("difference")) == MAXIMIZE
        assert direction(_spec("sufficiency", threshold=1.0)) == MAXIMIZE
        for principle in PRINCIPLES:
            kwargs = {"threshold": 1.0} if principle == "sufficiency" else {}
            assert direction(_spec(principle, mode=DIORTHOTIC, **kwargs)) == MAXIMIZE
