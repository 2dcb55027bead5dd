"""Tests for staged mutation sequences and their equivalence checks.

Claims covered:
    - the named sequences carry the right stage shapes and mutation counts
    - apply_sequence replays each stage backwards and rejects order-dependent
      stages and repeated vertices
    - the two-node transposition sequences reproduce the frozen stage tables
      and land on slot-permuted, arrow-reversed seeds
    - the three flip sequences land on the independently rebuilt
      flipped-triangulation seed
    - the composite twelve-step sequence reaches the reversed-word seed
    - sequences correspond across the Langlands dual, stagewise
    - the outer-node permutations of the triality diagram act on its triangle
"""
from __future__ import annotations

import random

import pytest

from confseed import golden
from confseed.root_data import g2_weight_dual, root_datum, standard_longest_word
from confseed.seed_builder import build_triangle_seed, reverse_word_seed
from confseed.seed_core import mutate, quiver_isomorphic
from confseed.sequence_verifier import (
    MutationSequence,
    StageOrderError,
    apply_sequence,
    builtin_sequences,
    flip_target,
    verify_dynkin_automorphism_d4,
    verify_flip,
    verify_langlands_pairing,
    verify_s3,
)
from confseed.surface_glue import build_conf_m_seed

G2_TRI = build_triangle_seed(root_datum("g2"))
G2_QUAD = build_conf_m_seed(root_datum("g2"), 4)


# == 1. the named sequences ==================================================

class TestBuiltinSequences:
    def test_catalog(self):
        seqs = builtin_sequences()
        assert set(seqs) == {
            "g2_swap13", "g2_swap23", "g2_swap12", "g2_flip",
            "a2_flip", "a3_flip",
        }

    def test_mutation_counts(self):
        seqs = builtin_sequences()
        count = lambda s: sum(len(st) for st in s.stages)
        assert count(seqs["g2_swap13"]) == 4
        assert count(seqs["g2_swap23"]) == 4
        assert count(seqs["g2_swap12"]) == 12
        assert count(seqs["g2_flip"]) == 18
        assert count(seqs["a2_flip"]) == 4
        assert count(seqs["a3_flip"]) == 10

    def test_stage_shapes(self):
        seqs = builtin_sequences()
        assert tuple(len(st) for st in seqs["g2_flip"].stages) == \
            (1, 3, 5, 5, 3, 1)
        assert tuple(len(st) for st in seqs["g2_swap13"].stages) == (1, 2, 1)

    def test_reversed_and_conjugated(self):
        seq = builtin_sequences()["g2_swap13"]
        assert seq.reversed().stages == tuple(reversed(seq.stages))
        swap = {nm: nm for nm in G2_TRI.names}
        swap["x_a2"], swap["x_b1"] = "x_b1", "x_a2"
        conj = seq.conjugated(swap)
        assert conj.stages[0] == ("x_b1",)


# == 2. staged application ===================================================

class TestApplySequence:
    def test_stage_tables_are_recorded(self):
        seq = builtin_sequences()["g2_swap13"]
        res = apply_sequence(G2_TRI, seq)
        assert len(res.stage_weights) == 3
        start = {nm: G2_TRI.weight(nm) for nm in G2_TRI.names}
        assert res.stage_weights == golden.stage_tables("g2_swap13", start)

    def test_singleton_stages_match_plain_mutation(self):
        seq = MutationSequence("demo", (("x_a2",), ("x_a1",)))
        res = apply_sequence(G2_TRI, seq)
        assert res.final == mutate(mutate(G2_TRI, "x_a2"), "x_a1")

    def test_order_dependent_stage_rejected(self):
        # x_a1 and x_a2 are joined by an arrow, so they do not commute
        seq = MutationSequence("bad", (("x_a1", "x_a2"),))
        with pytest.raises(StageOrderError):
            apply_sequence(G2_TRI, seq)

    def test_repeated_vertex_rejected(self):
        seq = MutationSequence("bad", (("x_a2", "x_a2"),))
        with pytest.raises(ValueError):
            apply_sequence(G2_TRI, seq)


# == 3. transpositions and flips =============================================

class TestTranspositions:
    def test_swap13(self):
        seqs = builtin_sequences()
        assert verify_s3(G2_TRI, seqs["g2_swap13"], (2, 1, 0),
                         expect_reversed=True).passed

    def test_swap23(self):
        seqs = builtin_sequences()
        assert verify_s3(G2_TRI, seqs["g2_swap23"], (0, 2, 1),
                         expect_reversed=True).passed

    def test_swap12_composite(self):
        seqs = builtin_sequences()
        assert verify_s3(G2_TRI, seqs["g2_swap12"], (1, 0, 2),
                         expect_reversed=True).passed

    def test_swap12_reaches_the_reversed_word(self):
        datum = root_datum("g2")
        final = apply_sequence(G2_TRI, builtin_sequences()["g2_swap12"]).final
        assert quiver_isomorphic(final, reverse_word_seed(datum)) is not None

    def test_wrong_permutation_fails(self):
        seqs = builtin_sequences()
        assert not verify_s3(G2_TRI, seqs["g2_swap13"], (0, 2, 1),
                             expect_reversed=True).passed


class TestFlips:
    def test_g2(self):
        assert verify_flip(root_datum("g2"), G2_QUAD,
                           builtin_sequences()["g2_flip"]).passed

    def test_a2(self):
        datum = root_datum("a2")
        quad = build_conf_m_seed(datum, 4)
        assert verify_flip(datum, quad, builtin_sequences()["a2_flip"]).passed

    def test_a3(self):
        datum = root_datum("a3")
        quad = build_conf_m_seed(datum, 4)
        assert verify_flip(datum, quad, builtin_sequences()["a3_flip"]).passed

    def test_flip_target_differs_from_start(self):
        datum = root_datum("a2")
        quad = build_conf_m_seed(datum, 4)
        assert quiver_isomorphic(quad, flip_target(datum)) is None

    def test_g2_stage_tables(self):
        res = apply_sequence(G2_QUAD, builtin_sequences()["g2_flip"])
        start = {nm: G2_QUAD.weight(nm) for nm in G2_QUAD.names}
        assert res.stage_weights == golden.stage_tables("g2_flip", start)


# == 4. duality pairings =====================================================

class TestLanglandsPairings:
    PAIRING = {
        "x_a0": "x_b3", "x_a1": "x_b2", "x_a2": "x_b1", "x_a3": "x_b0",
        "x_b0": "x_a3", "x_b1": "x_a2", "x_b2": "x_a1", "x_b3": "x_a0",
        "x_a": "x_b", "x_b": "x_a",
    }

    def test_swaps_pair_up(self):
        seqs = builtin_sequences()
        rep = verify_langlands_pairing(
            G2_TRI, seqs["g2_swap13"], seqs["g2_swap23"], self.PAIRING,
            weight_map=g2_weight_dual, relabel=self.PAIRING,
            slot_perm=(1, 0, 2),
        )
        assert rep.passed

    def test_flip_pairs_with_its_reverse(self):
        quad_pairing = {
            nm: (nm[:-1] + "b" if nm.endswith("a") else nm[:-1] + "a")
            for nm in G2_QUAD.names
        }
        seq = builtin_sequences()["g2_flip"]
        dual = seq.conjugated(quad_pairing, name="g2_flip_dual").reversed()
        rep = verify_langlands_pairing(
            G2_QUAD, seq, dual, quad_pairing,
            weight_map=g2_weight_dual, stage_reversal=True,
        )
        assert rep.passed

    def test_mismatched_pairing_fails(self):
        seqs = builtin_sequences()
        rep = verify_langlands_pairing(
            G2_TRI, seqs["g2_swap13"], seqs["g2_swap13"], self.PAIRING,
            weight_map=g2_weight_dual, relabel=self.PAIRING,
            slot_perm=(1, 0, 2),
        )
        assert not rep.passed


# == 5. triality =============================================================

class TestTriality:
    def test_all_outer_permutations_act(self):
        tri = build_triangle_seed(root_datum("d4"))
        rng = random.Random(1)
        perms = [("a1", "a2", "a3"), ("a2", "a3", "a1"), ("a3", "a1", "a2"),
                 ("a2", "a1", "a3"), ("a1", "a3", "a2"), ("a3", "a2", "a1")]
        for perm in perms:
            sigma = dict(zip(("a1", "a2", "a3"), perm))
            sigma["b"] = "b"
            assert verify_dynkin_automorphism_d4(tri, sigma).passed

    def test_moving_the_center_fails(self):
        tri = build_triangle_seed(root_datum("d4"))
        sigma = {"a1": "b", "b": "a1", "a2": "a2", "a3": "a3"}
        assert not verify_dynkin_automorphism_d4(tri, sigma).passed
