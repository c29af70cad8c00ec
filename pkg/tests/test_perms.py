import pytest
from hypothesis import given, settings, strategies as st

from arccalc.perms import (
    FormalSum,
    all_perms,
    as_perm,
    boundary,
    boundary_of_sum,
    compose,
    cycle_count,
    face,
    hat,
    homotopy_d,
    homotopy_d_on_sum,
    identity,
    inverse,
    is_perm,
    rotation,
    singleton,
)

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda k: st.permutations(list(range(k))).map(tuple)
)


def same_degree_pair():
    return st.integers(min_value=1, max_value=8).flatmap(
        lambda k: st.tuples(
            st.permutations(list(range(k))).map(tuple),
            st.permutations(list(range(k))).map(tuple),
        )
    )


class TestBasics:
    def test_is_perm(self):
        assert is_perm((0,)) and is_perm((1, 2, 0))
        assert not is_perm((0, 0, 2)) and not is_perm((3, 1))

    def test_as_perm_rejects(self):
        with pytest.raises(ValueError):
            as_perm((1, 1))
        with pytest.raises(ValueError):
            as_perm(())

    def test_compose_examples(self):
        assert compose((1, 2, 0), (1, 2, 0)) == (2, 0, 1)
        assert compose((0, 2, 1), (1, 2, 0)) == (2, 1, 0)

    def test_compose_identity_law(self):
        for k in range(1, 6):
            for a in all_perms(k):
                assert compose(a, identity(k)) == a
                assert compose(identity(k), a) == a

    def test_compose_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose((0, 1), (0, 1, 2))

    @given(same_degree_pair())
    def test_compose_applies_right_first(self, pair):
        a, b = pair
        assert all(compose(a, b)[x] == a[b[x]] for x in range(len(a)))

    @given(perms)
    def test_inverse(self, a):
        k = len(a)
        assert compose(a, inverse(a)) == identity(k)
        assert compose(inverse(a), a) == identity(k)


class TestCycleCount:
    def test_examples(self):
        assert cycle_count(identity(4)) == 4
        assert cycle_count((1, 2, 0)) == 1
        assert cycle_count((3, 1, 0, 2)) == 2

    def test_invariant_under_inverse_and_conjugation_exhaustive(self):
        for k in range(1, 7):
            words = list(all_perms(k))
            counts = {a: cycle_count(a) for a in words}
            for a in words:
                assert cycle_count(inverse(a)) == counts[a]
            for b in words:
                b_inv = inverse(b)
                for a in words:
                    assert counts[compose(compose(b, a), b_inv)] == counts[a]

    def test_invariant_sampled_degrees_7_8(self):
        import random

        rng = random.Random(78)
        for k in (7, 8):
            base = list(range(k))
            for _ in range(2000):
                a = tuple(rng.sample(base, k))
                b = tuple(rng.sample(base, k))
                c = cycle_count(a)
                assert cycle_count(inverse(a)) == c
                assert cycle_count(compose(compose(b, a), inverse(b))) == c

    @given(same_degree_pair())
    @settings(deadline=None)
    def test_invariant_property(self, pair):
        a, b = pair
        assert cycle_count(compose(compose(b, a), inverse(b))) == cycle_count(a)
        assert cycle_count(inverse(a)) == cycle_count(a)


class TestHatAndRotation:
    def test_rotation(self):
        assert rotation(4) == (1, 2, 3, 0)
        assert rotation(1) == (0,)

    def test_hat_examples(self):
        assert hat((1, 2, 0)) == (0, 2, 3, 1)
        assert cycle_count(hat((1, 0))) == cycle_count((1, 0)) + 1

    @given(same_degree_pair())
    def test_hat_is_multiplicative(self, pair):
        a, b = pair
        assert hat(compose(a, b)) == compose(hat(a), hat(b))


class TestFaces:
    def test_examples(self):
        assert face((0, 2, 1), 0) == (1, 0)
        assert face((0, 2, 1), 2) == (0, 1)

    def test_identity_faces(self):
        for k in range(2, 7):
            for j in range(k):
                assert face(identity(k), j) == identity(k - 1)

    def test_rejects(self):
        with pytest.raises(ValueError):
            face((0, 1), 2)
        with pytest.raises(ValueError):
            face((0,), 0)


class TestBoundary:
    def test_cancellation_examples(self):
        assert boundary((0, 2, 1)).terms == ((1, (1, 0)),)
        assert boundary((1, 2, 0)).terms == ((1, (0, 1)),)

    def test_identity_boundary_parity(self):
        # identity of degree g+1: zero when g is odd, identity when g is even
        for g in range(1, 7):
            b = boundary(identity(g + 1))
            if g % 2 == 1:
                assert b.is_zero()
            else:
                assert b == singleton(identity(g))

    def test_boundary_squared_vanishes_exhaustive(self):
        for k in range(3, 8):
            assert all(boundary_of_sum(boundary(a)).is_zero() for a in all_perms(k))

    def test_even_degree_correction(self):
        for g in (2, 4, 6):
            tau = (2, 0, 1) + tuple(range(3, g + 1))
            assert boundary(tau) == boundary(identity(g + 1))


class TestHomotopy:
    def test_identity_exhaustive(self):
        for k in range(2, 7):
            for a in all_perms(k):
                lhs = boundary(homotopy_d(a)) + homotopy_d_on_sum(boundary(a))
                assert lhs == singleton(a), a

    def test_degree_one_excluded(self):
        # prepending a fixed point to the sole degree-1 word and taking the
        # boundary gives zero, not the word: the identity starts at degree 2
        assert boundary(homotopy_d((0,))).is_zero()


class TestFormalSum:
    def test_normalization_merges_and_drops(self):
        s = FormalSum.from_terms([(1, (0, 1)), (2, (0, 1)), (-3, (0, 1)), (5, (1, 0))])
        assert s.terms == ((5, (1, 0)),)
        assert s.coefficient((0, 1)) == 0

    def test_mixed_degree_rejected(self):
        with pytest.raises(ValueError):
            FormalSum.from_terms([(1, (0, 1)), (1, (0, 1, 2))])

    def test_algebra(self):
        a = singleton((0, 1))
        b = singleton((1, 0))
        assert (a + b - a) == b
        assert (a - a).is_zero()
        assert a.scale(0).is_zero()
        assert (-a).coefficient((0, 1)) == -1

    def test_json_round_trip(self):
        s = FormalSum.from_terms([(2, (1, 0, 2)), (-1, (0, 1, 2))])
        data = s.to_json()
        assert data == [
            {"coeff": -1, "perm": [0, 1, 2]},
            {"coeff": 2, "perm": [1, 0, 2]},
        ]
        assert FormalSum.from_json(data) == s
