import math

import numpy as np
import pytest

from statpos import (
    SmoothingConfig,
    TaggerConfig,
    Tagset,
    brute_force_decode,
    decode_with_trace,
    score_sequence,
    tag_bigram,
    tag_hmm,
    tag_sentence,
    tag_trigram,
    tag_unigram,
)
from statpos import kernels
from statpos.errors import EmptySentence, InstanceTooLarge, LengthMismatch, UnknownTag

from conftest import model_from
from randgen import make_rng, random_model, random_sentence

DP_METHODS = ("bigram", "trigram", "hmm")
RAW = SmoothingConfig(alpha=0.0, lambda3=1.0, lambda2=0.0, lambda1=0.0)


def cfg(method, smoothing=None):
    return TaggerConfig(method=method, smoothing=smoothing or SmoothingConfig())


class TestUnigram:
    def test_majority_tag_wins(self, small_tagset):
        m = model_from(["x/NN y/VM", "x/NN z/VM", "x/JJ w/VM"], small_tagset)
        assert tag_unigram(["x"], m, cfg("unigram")) == [("x", "NN")]

    def test_unique_tag(self, small_tagset):
        m = model_from(["x/NN q/QC"], small_tagset)
        assert tag_unigram(["q"], m, cfg("unigram")) == [("q", "QC")]

    def test_tie_breaks_lexicographically(self, small_tagset):
        m = model_from(["x/NN y/VM", "x/VM y/NN"], small_tagset)
        assert tag_unigram(["x"], m, cfg("unigram")) == [("x", "NN")]

    def test_unknown_word_open_class_policy(self, small_tagset):
        m = model_from(["x/NN y/NN z/VM"], small_tagset)
        assert tag_unigram(["oov"], m, cfg("unigram")) == [("oov", "NN")]

    def test_unknown_word_single_tag_policy(self, small_tagset):
        m = model_from(["x/NN y/NN"], small_tagset)
        c = cfg("unigram", SmoothingConfig(unknown_policy="QC"))
        assert tag_unigram(["oov"], m, c) == [("oov", "QC")]

    def test_permutation_equivariance(self, small_tagset):
        m = model_from(["x/NN y/VM z/JJ", "x/NN w/QC"], small_tagset)
        fwd = tag_unigram(["x", "y", "z"], m, cfg("unigram"))
        rev = tag_unigram(["z", "y", "x"], m, cfg("unigram"))
        assert dict(fwd) == dict(rev)

    def test_empty_sentence(self, small_tagset):
        m = model_from(["x/NN"], small_tagset)
        with pytest.raises(EmptySentence):
            tag_unigram([], m, cfg("unigram"))


class TestDecoders:
    def test_single_path_bigram(self, small_tagset):
        m = model_from(["a/NN b/VM"], small_tagset)
        assert tag_bigram(["a", "b"], m, cfg("bigram")) == [("a", "NN"), ("b", "VM")]

    def test_context_resolves_ambiguity(self, small_tagset):
        # frozen from the enumeration oracle
        m = model_from(["m/NN v/VM", "v/NN m/VM"], small_tagset)
        expected = [("m", "NN"), ("v", "VM")]
        assert brute_force_decode(["m", "v"], m, cfg("bigram")) == expected
        assert tag_bigram(["m", "v"], m, cfg("bigram")) == expected

    def test_single_path_trigram(self, small_tagset):
        m = model_from(["a/NN b/VM c/JJ"], small_tagset)
        expected = [("a", "NN"), ("b", "VM"), ("c", "JJ")]
        assert tag_trigram(["a", "b", "c"], m, cfg("trigram")) == expected

    def test_one_word_trigram(self, small_tagset):
        m = model_from(["a/NN b/VM c/JJ"], small_tagset)
        assert tag_trigram(["a"], m, cfg("trigram")) == [("a", "NN")]

    def test_single_path_hmm(self, small_tagset):
        m = model_from(["a/NN b/VM c/JJ"], small_tagset)
        expected = [("a", "NN"), ("b", "VM"), ("c", "JJ")]
        assert tag_hmm(["a", "b", "c"], m, cfg("hmm")) == expected

    @pytest.mark.parametrize("method", DP_METHODS)
    def test_length_one_sentences(self, method, small_tagset):
        m = model_from(["a/NN b/VM"], small_tagset)
        out = tag_sentence(["a"], m, cfg(method))
        assert len(out) == 1

    @pytest.mark.parametrize("method", DP_METHODS)
    def test_determinism(self, method, small_tagset):
        m = model_from(["a/NN b/VM", "b/NN a/VM", "a/JJ b/QC"], small_tagset)
        first = tag_sentence(["a", "b", "a"], m, cfg(method))
        assert all(tag_sentence(["a", "b", "a"], m, cfg(method)) == first
                   for _ in range(3))

    @pytest.mark.parametrize("method", list(DP_METHODS) + ["unigram"])
    def test_count_scaling_invariance(self, method, small_tagset):
        lines = ["a/NN b/VM", "b/NN a/VM", "a/JJ c/QC"]
        m1 = model_from(lines, small_tagset)
        m4 = model_from(lines * 4, small_tagset)
        for words in (["a"], ["a", "b"], ["c", "a", "b"]):
            assert tag_sentence(words, m1, cfg(method)) == tag_sentence(words, m4, cfg(method))

    @pytest.mark.parametrize("method", DP_METHODS)
    def test_empty_sentence(self, method, small_tagset):
        m = model_from(["a/NN"], small_tagset)
        with pytest.raises(EmptySentence):
            tag_sentence([], m, cfg(method))


class TestContextSensitivityFixture:
    """Word x is NN sentence-initially but VM after NN; only context-aware
    methods recover the held-out tagging."""

    def held_out(self, small_tagset):
        model = model_from(["x/NN u/VM"] * 3 + ["n/NN x/VM"] * 2, small_tagset)
        return model, ["n", "x"], ["NN", "VM"]

    def test_context_methods_recover(self, small_tagset):
        model, words, gold = self.held_out(small_tagset)
        for method in DP_METHODS:
            tagged = tag_sentence(words, model, cfg(method))
            assert [t for _, t in tagged] == gold

    def test_unigram_necessarily_errs(self, small_tagset):
        model, words, gold = self.held_out(small_tagset)
        tagged = tag_unigram(words, model, cfg("unigram"))
        predicted = [t for _, t in tagged]
        assert predicted != gold
        assert sum(p == g for p, g in zip(predicted, gold)) == 1


class TestScoreSequence:
    def test_hand_computed_bigram_score(self, small_tagset):
        # all five ratios are 1 on the single-path corpus, so log-score is 0
        m = model_from(["a/NN b/VM"], small_tagset)
        assert score_sequence(["a", "b"], ["NN", "VM"], m, cfg("bigram", RAW)) == 0.0

    def test_decoder_output_is_argmax(self, small_tagset):
        m = model_from(["a/NN b/VM", "b/NN a/JJ"], small_tagset)
        for method in DP_METHODS:
            c = cfg(method)
            tagged = tag_sentence(["a", "b"], m, c)
            best = score_sequence(["a", "b"], [t for _, t in tagged], m, c)
            oracle = brute_force_decode(["a", "b"], m, c)
            assert best == pytest.approx(
                score_sequence(["a", "b"], [t for _, t in oracle], m, c), abs=1e-9)

    def test_unigram_score_is_order_free(self, small_tagset):
        m = model_from(["a/NN b/VM", "b/NN a/VM"], small_tagset)
        c = cfg("unigram")
        s1 = score_sequence(["a", "b"], ["NN", "VM"], m, c)
        s2 = score_sequence(["b", "a"], ["NN", "VM"], m, c)
        assert s1 == pytest.approx(s2, abs=1e-12)

    def test_length_mismatch(self, small_tagset):
        m = model_from(["a/NN"], small_tagset)
        with pytest.raises(LengthMismatch):
            score_sequence(["a", "b"], ["NN"], m, cfg("bigram"))

    def test_unknown_tag(self, small_tagset):
        m = model_from(["a/NN"], small_tagset)
        with pytest.raises(UnknownTag):
            score_sequence(["a"], ["ZZZ"], m, cfg("bigram"))

    def test_raw_alpha_can_reach_neg_inf(self, small_tagset):
        m = model_from(["a/NN b/VM"], small_tagset)
        assert score_sequence(["a", "b"], ["VM", "NN"], m, cfg("bigram", RAW)) == -math.inf


class TestBruteForce:
    def test_guard(self, small_tagset):
        m = model_from(["a/NN"], small_tagset)
        with pytest.raises(InstanceTooLarge):
            brute_force_decode(["a"] * 9, m, cfg("bigram"))

    def test_empty(self, small_tagset):
        m = model_from(["a/NN"], small_tagset)
        with pytest.raises(EmptySentence):
            brute_force_decode([], m, cfg("bigram"))


class TestOracleEquivalence:
    @pytest.mark.parametrize("method", DP_METHODS)
    def test_random_instances(self, method):
        rng = make_rng(42)
        c = cfg(method)
        for _ in range(40):
            model, _ = random_model(rng)
            words = random_sentence(rng)
            expected = brute_force_decode(words, model, c)
            got = tag_sentence(words, model, c)
            assert got == expected
            s_got = score_sequence(words, [t for _, t in got], model, c)
            s_exp = score_sequence(words, [t for _, t in expected], model, c)
            assert s_got == pytest.approx(s_exp, abs=1e-9)


class TestKernelParity:
    """The numba build and the pure-numpy fallback agree exactly."""

    @pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
    def test_bigram_kernel(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            n, T = rng.integers(1, 7), int(rng.integers(2, 6))
            emit = np.log(rng.random((n, T)))
            start = np.log(rng.random(T))
            trans = np.log(rng.random((T, T)))
            end = np.log(rng.random(T))
            p1, s1 = kernels._viterbi_bigram_py(emit, start, trans, end)
            p2, s2 = kernels._viterbi_bigram_jit(emit, start, trans, end)
            assert list(p1) == list(p2)
            assert s1 == pytest.approx(s2, abs=1e-12)

    @pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
    def test_trigram_kernel(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            n, T = rng.integers(1, 6), int(rng.integers(2, 5))
            emit = np.log(rng.random((n, T)))
            start2 = np.log(rng.random(T))
            tri = np.log(rng.random((T + 1, T, T)))
            tri_end = np.log(rng.random((T + 1, T)))
            p1, s1 = kernels._viterbi_trigram_py(emit, start2, tri, tri_end)
            p2, s2 = kernels._viterbi_trigram_jit(emit, start2, tri, tri_end)
            assert list(p1) == list(p2)
            assert s1 == pytest.approx(s2, abs=1e-12)


class TestDecodeTrace:
    @pytest.mark.parametrize("method", ("unigram",) + DP_METHODS)
    def test_trace_max_equals_path_score(self, method, small_tagset):
        m = model_from(["a/NN b/VM", "b/NN a/JJ", "c/QC a/NN"], small_tagset)
        tagged, trace = decode_with_trace(["a", "b", "c"], m, cfg(method))
        assert len(trace.positions) == 3
        assert trace.path_score == pytest.approx(
            score_sequence(["a", "b", "c"], [t for _, t in tagged], m, cfg(method)),
            abs=1e-9)
        for pos in trace.positions:
            assert max(pos.values()) == pytest.approx(trace.path_score, abs=1e-9)
