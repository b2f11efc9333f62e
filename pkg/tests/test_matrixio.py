import numpy as np
import pytest
from numpy.testing import assert_array_equal

import specrad as sr
from specrad.matrixio import FORMAT_MM, FORMAT_MM_ARRAY, FORMAT_MM_COORDINATE


class TestCsv:
    def test_cyclic(self, tmp_path):
        path = tmp_path / "cyclic.csv"
        path.write_text("0,1,0\n0,0,1\n1,0,0\n")
        m = sr.parse_matrix_file(path, "csv")
        assert_array_equal(m.entries, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])

    def test_ragged_row_reports_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,2\n3\n")
        with pytest.raises(sr.ParseError) as exc:
            sr.parse_matrix_file(path, "csv")
        assert exc.value.line == 2

    def test_wrong_row_count_is_not_square(self, tmp_path):
        path = tmp_path / "rect.csv"
        path.write_text("1,2\n3,4\n5,6\n")
        with pytest.raises(sr.NotSquareError) as exc:
            sr.parse_matrix_file(path, "csv")
        assert (exc.value.rows, exc.value.cols) == (3, 2)

    def test_bad_token(self, tmp_path):
        path = tmp_path / "tok.csv"
        path.write_text("1,x\n0,1\n")
        with pytest.raises(sr.ParseError) as exc:
            sr.parse_matrix_file(path, "csv")
        assert exc.value.line == 1 and "x" in exc.value.reason

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(sr.ParseError):
            sr.parse_matrix_file(path, "csv")

    def test_negative_entry_forwarded(self, tmp_path):
        path = tmp_path / "neg.csv"
        path.write_text("1,-2\n0,1\n")
        with pytest.raises(sr.NegativeEntryError):
            sr.parse_matrix_file(path, "csv")

    def test_round_trip_is_bit_exact(self, tmp_path):
        rng = np.random.default_rng(41)
        values = rng.uniform(0.0, 1.0, (5, 5)) * 10.0 ** rng.integers(-300, 300, (5, 5))
        original = sr.make_matrix(values)
        path = tmp_path / "roundtrip.csv"
        sr.write_matrix_csv(original, path)
        parsed = sr.parse_matrix_file(path, "csv")
        assert_array_equal(parsed.entries, original.entries)


class TestMatrixMarket:
    def test_array_one_by_one(self, tmp_path):
        path = tmp_path / "one.mtx"
        path.write_text("%%MatrixMarket matrix array real general\n1 1\n2.5\n")
        m = sr.parse_matrix_file(path, FORMAT_MM_ARRAY)
        assert_array_equal(m.entries, [[2.5]])

    def test_array_is_column_major(self, tmp_path):
        path = tmp_path / "cm.mtx"
        path.write_text(
            "%%MatrixMarket matrix array real general\n% a comment\n2 2\n1\n2\n3\n4\n"
        )
        m = sr.parse_matrix_file(path, FORMAT_MM)
        assert_array_equal(m.entries, [[1.0, 3.0], [2.0, 4.0]])

    def test_coordinate_with_default_zeros(self, tmp_path):
        path = tmp_path / "coo.mtx"
        path.write_text(
            "%%MatrixMarket matrix coordinate real general\n3 3 2\n1 2 5.0\n3 1 7.0\n"
        )
        m = sr.parse_matrix_file(path, FORMAT_MM)
        expected = np.zeros((3, 3))
        expected[0, 1] = 5.0
        expected[2, 0] = 7.0
        assert_array_equal(m.entries, expected)

    def test_coordinate_duplicate_entry(self, tmp_path):
        path = tmp_path / "dup.mtx"
        path.write_text(
            "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n1 1 2.0\n"
        )
        with pytest.raises(sr.ParseError) as exc:
            sr.parse_matrix_file(path, FORMAT_MM)
        assert exc.value.line == 4

    def test_coordinate_index_out_of_range(self, tmp_path):
        path = tmp_path / "oob.mtx"
        path.write_text("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1.0\n")
        with pytest.raises(sr.ParseError):
            sr.parse_matrix_file(path, FORMAT_MM)

    def test_not_square(self, tmp_path):
        path = tmp_path / "rect.mtx"
        path.write_text("%%MatrixMarket matrix array real general\n2 3\n0\n0\n0\n0\n0\n0\n")
        with pytest.raises(sr.NotSquareError):
            sr.parse_matrix_file(path, FORMAT_MM)

    def test_bad_header(self, tmp_path):
        path = tmp_path / "hdr.mtx"
        path.write_text("%%MatrixMarket matrix array complex general\n1 1\n1\n")
        with pytest.raises(sr.ParseError) as exc:
            sr.parse_matrix_file(path, FORMAT_MM)
        assert exc.value.line == 1

    def test_layout_mismatch_with_requested_format(self, tmp_path):
        path = tmp_path / "mix.mtx"
        path.write_text("%%MatrixMarket matrix array real general\n1 1\n1\n")
        with pytest.raises(sr.ParseError):
            sr.parse_matrix_file(path, FORMAT_MM_COORDINATE)

    def test_too_few_array_values(self, tmp_path):
        path = tmp_path / "short.mtx"
        path.write_text("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n")
        with pytest.raises(sr.ParseError):
            sr.parse_matrix_file(path, FORMAT_MM)

    def test_unknown_format_name(self, tmp_path):
        path = tmp_path / "x.csv"
        path.write_text("1\n")
        with pytest.raises(ValueError):
            sr.parse_matrix_file(path, "xml")
