import pytest

from lexcount.engine import count_avoiders
from lexcount.formulas import count_2143_closed
from lexcount.posets import build
from lexcount.transfer import (a_vector, b_matrix, char_poly, char_poly_string,
                               count_2143, recurrence_extend)


class TestBMatrix:
    def test_b3(self):
        assert b_matrix(3) == ((1, 1, 1), (2, 2, 1), (2, 2, 1))

    def test_b4(self):
        assert b_matrix(4) == ((1, 1, 1, 1),
                               (3, 3, 2, 1),
                               (5, 5, 3, 1),
                               (5, 5, 3, 1))

    def test_boundary_structure(self):
        for n in range(1, 8):
            bm = b_matrix(n)
            # j = 1 and k = n entries are all 1
            assert bm[0] == (1,) * n
            assert all(bm[j][n - 1] == 1 for j in range(n))
            # the last two rows coincide
            if n >= 2:
                assert bm[n - 1] == bm[n - 2]

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            b_matrix(0)


class TestAVector:
    def test_base_case(self):
        assert a_vector(3, 1) == (0, 0, 1)
        assert a_vector(1, 1) == (1,)

    def test_growth(self):
        assert sum(a_vector(3, 2)) == 5
        assert sum(a_vector(3, 3)) == 21

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            a_vector(0, 2)
        with pytest.raises(ValueError):
            a_vector(2, 0)


class TestCount2143:
    @pytest.mark.parametrize("s,t,expected", [
        (1, 1, 1), (5, 1, 1),
        (2, 3, 5), (3, 3, 21), (4, 3, 89),
        (4, 4, 1094), (5, 4, 9841), (6, 4, 88574),
        (2, 5, 42), (3, 5, 728), (4, 5, 14041),
    ])
    def test_frozen_values(self, s, t, expected):
        assert count_2143(s, t) == expected

    def test_matches_enumeration(self):
        for s in range(1, 5):
            for t in range(1, 5):
                if s * t > 14:
                    continue
                direct = count_avoiders(build("EN", s, t), [(2, 1, 4, 3)])
                assert count_2143(s, t) == direct, (s, t)

    def test_matches_closed_forms(self):
        for t in range(1, 5):
            for s in range(1, 10):
                assert count_2143(s, t) == count_2143_closed(s, t)


class TestCharPoly:
    def test_small_polys(self):
        assert char_poly(1) == (1, -1)
        assert char_poly(2) == (1, -2)
        assert char_poly(3) == (1, -4, -1)
        assert char_poly(4) == (1, -8, -9)

    def test_t5(self):
        assert char_poly(5) == (1, -16, -57, 1)

    def test_string_form(self):
        assert char_poly_string(3) == "1 - 4x - x^2"
        assert char_poly_string(4) == "1 - 8x - 9x^2"

    @pytest.mark.parametrize("t", [2, 3, 4, 5])
    def test_recurrence_reproduces_counts(self, t):
        cp = char_poly(t)
        d = len(cp) - 1
        seed = [count_2143(s, t) for s in range(1, d + 1)]
        got = recurrence_extend(seed, cp, 6)
        want = tuple(count_2143(s, t) for s in range(1, d + 7))
        assert got == want


class TestRecurrenceExtend:
    def test_fibonacci_like_t3(self):
        # a_n = 4 a_{n-1} + a_{n-2} from 1, 5
        assert recurrence_extend([1, 5], (1, -4, -1), 3) == (1, 5, 21, 89, 377)

    def test_t4(self):
        got = recurrence_extend([1, 14], (1, -8, -9), 3)
        assert got == (1, 14, 121, 1094, 9841)
        assert recurrence_extend([1, 14, 121], (1, -8, -9), 2)[-1] == 1094 * 8 + 121 * 9

    def test_validates_inputs(self):
        with pytest.raises(ValueError):
            recurrence_extend([1, 2], (2, -1), 1)  # constant term not 1
        with pytest.raises(ValueError):
            recurrence_extend([1], (1, -4, -1), 1)  # too few seed terms
