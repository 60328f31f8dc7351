import random

import pytest

from ordifind.context import FormalContext, row_set
from ordifind.factorize import (
    FactorTick,
    OrdinalFactor,
    factor_ticks,
    ordifind,
)
from ordifind.ferrers import ConceptChain
from ordifind.lattice import build_lattice
from ordifind.metrics import (
    distance,
    hamming,
    position,
    rank_objects,
    selection_distance,
    supported_positions,
)

from oracles import random_context


def synthetic_factor(*gained_sets):
    ticks = tuple(
        FactorTick(concept_id=i, gained=frozenset(g)) for i, g in enumerate(gained_sets)
    )
    return OrdinalFactor(chain=ConceptChain(()), ticks=ticks, new_coverage=0)


def concept_by_intent(ctx, lat, *attribute_names):
    wanted = frozenset(ctx.attribute_index(n) for n in attribute_names)
    matches = [cid for cid, c in enumerate(lat.concepts) if c.intent == wanted]
    assert len(matches) == 1
    return matches[0]


class TestPosition:
    def test_reddit_supports_ads_then_private_messages(self, socmed, socmed_lattice):
        low = concept_by_intent(socmed, socmed_lattice, "ads", "private messages")
        mid = concept_by_intent(socmed, socmed_lattice, "ads")
        chain = ConceptChain((low, mid, socmed_lattice.top_id))
        factor = OrdinalFactor(
            chain=chain,
            ticks=factor_ticks(socmed_lattice, chain),
            new_coverage=0,
        )
        assert position(socmed, factor, socmed.object_index("Reddit")) == 2

    def test_object_without_attributes_sits_at_zero(self):
        ctx = FormalContext.from_rows(("g", "h"), ("m",), [[0], []])
        factor = synthetic_factor({0})
        assert position(ctx, factor, 1) == 0

    def test_facebook_has_no_premium(self, socmed):
        factor = synthetic_factor({socmed.attribute_index("premium")})
        assert position(socmed, factor, socmed.object_index("Facebook")) == 0

    def test_monotone_under_row_inclusion(self, socmed, socmed_factorization):
        fb = socmed.object_index("Facebook")
        ig = socmed.object_index("Instagram")
        assert row_set(socmed, fb) < row_set(socmed, ig)
        for factor in socmed_factorization.factors:
            assert position(socmed, factor, ig) >= position(socmed, factor, fb)

    def test_monotone_on_random_contexts(self):
        rng = random.Random(41)
        for _ in range(15):
            ctx = random_context(rng, 6, 6)
            lat = build_lattice(ctx)
            fz = ordifind(ctx, lat)
            for g1 in range(ctx.n_objects):
                for g2 in range(ctx.n_objects):
                    if row_set(ctx, g1) <= row_set(ctx, g2):
                        for factor in fz.factors:
                            assert position(ctx, factor, g2) >= position(
                                ctx, factor, g1
                            )

    def test_full_support_reaches_tick_count(self, socmed, socmed_factorization):
        # an object supporting a whole factor sits at its tick count
        for factor in socmed_factorization.factors:
            demanded = frozenset().union(*(t.gained for t in factor.ticks))
            for g in range(socmed.n_objects):
                if demanded <= row_set(socmed, g):
                    assert position(socmed, factor, g) == len(factor.ticks)


class TestDistances:
    def test_facebook_instagram_asymmetry(self, socmed):
        fb = socmed.object_index("Facebook")
        ig = socmed.object_index("Instagram")
        assert distance(socmed, fb, ig) == 0
        assert distance(socmed, ig, fb) == 1
        assert hamming(socmed, fb, ig) == 1

    def test_self_distance_zero(self, socmed):
        for g in range(socmed.n_objects):
            assert distance(socmed, g, g) == 0
            assert hamming(socmed, g, g) == 0

    def test_hamming_symmetric_on_all_pairs(self, socmed):
        for g1 in range(socmed.n_objects):
            for g2 in range(socmed.n_objects):
                assert hamming(socmed, g1, g2) == hamming(socmed, g2, g1)

    def test_zero_iff_subset_or_equal(self, socmed):
        for g1 in range(socmed.n_objects):
            for g2 in range(socmed.n_objects):
                assert (distance(socmed, g1, g2) == 0) == (
                    row_set(socmed, g1) <= row_set(socmed, g2)
                )
                assert (hamming(socmed, g1, g2) == 0) == (
                    row_set(socmed, g1) == row_set(socmed, g2)
                )

    def test_triangle_inequality(self, socmed):
        n = socmed.n_objects
        for g1 in range(n):
            for g2 in range(n):
                for g3 in range(n):
                    assert hamming(socmed, g1, g3) <= hamming(
                        socmed, g1, g2
                    ) + hamming(socmed, g2, g3)


class TestSelectionDistance:
    def test_all_zero_selection_is_free(self, socmed, socmed_factorization):
        zeros = [0] * socmed_factorization.width
        for g in range(socmed.n_objects):
            assert selection_distance(socmed, socmed_factorization, g, zeros) == 0

    def test_own_positions_are_free(self, socmed, socmed_factorization):
        for g in range(socmed.n_objects):
            sel = supported_positions(socmed, socmed_factorization, g)
            assert selection_distance(socmed, socmed_factorization, g, sel) == 0

    def test_tiktok_missing_usa_and_premium(self, socmed, socmed_factorization):
        # factor 2's first three ticks demand USA-based, ads, premium;
        # TikTok has only ads
        factor = socmed_factorization.factors[1]
        demanded = frozenset().union(*(t.gained for t in factor.ticks[:3]))
        assert demanded == {
            socmed.attribute_index(n) for n in ("USA-based", "ads", "premium")
        }
        sel = [0] * socmed_factorization.width
        sel[1] = 3
        tiktok = socmed.object_index("TikTok")
        assert selection_distance(socmed, socmed_factorization, tiktok, sel) == 2

    def test_position_out_of_range_rejected(self, socmed, socmed_factorization):
        sel = [0] * socmed_factorization.width
        sel[0] = len(socmed_factorization.factors[0].ticks) + 1
        with pytest.raises(ValueError, match="out of range"):
            selection_distance(socmed, socmed_factorization, 0, sel)

    def test_wrong_selection_length_rejected(self, socmed, socmed_factorization):
        with pytest.raises(ValueError, match="positions"):
            selection_distance(socmed, socmed_factorization, 0, [0])

    def test_monotone_in_each_position(self, socmed, socmed_factorization):
        fz = socmed_factorization
        rng = random.Random(42)
        for _ in range(25):
            sel = [rng.randint(0, len(f.ticks)) for f in fz.factors]
            for g in range(socmed.n_objects):
                base = selection_distance(socmed, fz, g, sel)
                for i, factor in enumerate(fz.factors):
                    if sel[i] < len(factor.ticks):
                        raised = list(sel)
                        raised[i] += 1
                        assert (
                            selection_distance(socmed, fz, g, raised) >= base
                        )


class TestRankObjects:
    def test_zero_selection_keeps_input_order(self, socmed, socmed_factorization):
        ranked = rank_objects(socmed, socmed_factorization, [0] * socmed_factorization.width)
        assert ranked == [(g, 0) for g in range(socmed.n_objects)]

    def test_clicked_object_ranks_first_block(self, socmed, socmed_factorization):
        tw = socmed.object_index("Twitter")
        sel = supported_positions(socmed, socmed_factorization, tw)
        ranked = rank_objects(socmed, socmed_factorization, sel)
        distances = dict(ranked)
        assert distances[tw] == 0
        seen_positive = False
        for g, d in ranked:
            if d > 0:
                seen_positive = True
            else:
                assert not seen_positive  # zeros come before positives

    def test_matches_direct_recomputation(self, socmed, socmed_factorization):
        fz = socmed_factorization
        sel = [min(2, len(f.ticks)) for f in fz.factors]
        ranked = rank_objects(socmed, fz, sel)
        expected = sorted(
            (
                (g, selection_distance(socmed, fz, g, sel))
                for g in range(socmed.n_objects)
            ),
            key=lambda item: item[1],
        )
        assert ranked == expected

    def test_stable_ties(self, socmed, socmed_factorization):
        ranked = rank_objects(socmed, socmed_factorization, [0] * socmed_factorization.width)
        same_d = [g for g, d in ranked if d == 0]
        assert same_d == sorted(same_d)


class TestReconstruction:
    def test_incidence_recoverable_from_positions(self, socmed, socmed_factorization):
        self._check(socmed, socmed_factorization)

    def test_incidence_recoverable_on_random(self):
        rng = random.Random(43)
        for _ in range(15):
            ctx = random_context(rng, 6, 6)
            lat = build_lattice(ctx)
            self._check(ctx, ordifind(ctx, lat))

    @staticmethod
    def _check(ctx, fz):
        for g in range(ctx.n_objects):
            reachable = set()
            for factor in fz.factors:
                pos = position(ctx, factor, g)
                for tick in factor.ticks[:pos]:
                    reachable |= tick.gained
            assert reachable == row_set(ctx, g)
