import csv
import io
from fractions import Fraction

import pytest

from mec_atlas.families import star_graph
from mec_atlas.graph import make_graph
from mec_atlas.graphgen import canonical_id
from mec_atlas.oracle import count_acyclic_orientations
from mec_atlas.polycomb import Polynomial
from mec_atlas.survey import (
    SURVEY_FIELDS,
    enumerate_graph,
    invariant_check,
    run_survey,
    survey_csv,
    survey_record,
)


def _rows(records):
    return list(csv.DictReader(io.StringIO(survey_csv(records))))


def test_record_fields():
    paw = make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    r = survey_record(paw)
    assert (r.p, r.edge_count, r.max_degree) == (4, 4, 3)
    assert r.avg_degree == 2
    assert r.clustering_coefficient == Fraction(3, 5)
    assert not r.triangle_free
    assert r.induced_3paths == 2
    assert r.avg_class_size * r.mec_count == count_acyclic_orientations(paw)
    assert len(r.immorality_ratio_rows) == r.mec_count
    assert all(ratio is None or 0 <= ratio <= 1 for _, ratio in r.immorality_ratio_rows)


def test_ratio_rows_without_induced_paths():
    k3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    row = dict(zip(SURVEY_FIELDS, survey_record(k3).row()))
    assert row["immorality_ratio_rows"] == "6:-"
    assert row["clustering_coefficient"] == "1"


def test_p4_survey():
    records = run_survey(4)
    assert len(records) == 6
    assert [r.canonical_id for r in records] == sorted(r.canonical_id for r in records)
    rows = _rows(records)
    assert list(rows[0].keys()) == list(SURVEY_FIELDS)
    for row, rec in zip(rows, records):
        assert Fraction(row["avg_degree"]) == rec.avg_degree
        assert float(row["avg_degree_dec"]) == pytest.approx(float(rec.avg_degree), rel=1e-11)


def test_triangle_free_p5_has_zero_clustering():
    rows = _rows(run_survey(5, triangle_free=True))
    assert len(rows) == 6
    assert all(r["clustering_coefficient"] == "0" and r["triangle_free"] == "true" for r in rows)


def test_p7_triangle_free_trends():
    records = run_survey(7, triangle_free=True)
    top_degree = max(r.max_degree for r in records)
    (star_row,) = [r for r in records if r.max_degree == top_degree]
    assert star_row.canonical_id == canonical_id(star_graph(6))
    assert star_row.mec_count == 2 ** 6 - 6 == 58
    # complete bipartite graphs carry far more classes than the star
    assert max(r.mec_count for r in records) > star_row.mec_count
    for r in records:
        assert r.mec_count >= 1


def test_survey_parallel_is_identical():
    assert survey_csv(run_survey(6, workers=1)) == survey_csv(run_survey(6, workers=3))


def test_invariant_check_general_p4():
    rep = invariant_check(4)
    assert rep.graphs == 6
    polys = [poly for poly, _ in rep.collisions]
    assert Polynomial([1, 2, 1]) in polys
    for _, ids in rep.collisions:
        assert len(ids) >= 2


@pytest.mark.parametrize("p", [4, 5, 6, 7])
def test_invariant_check_triangle_free(p):
    rep = invariant_check(p, triangle_free=True)
    assert rep.collisions == []


def test_enumerate_graph_multiplies_components():
    g = make_graph(6, [(0, 1), (1, 2), (3, 4)])
    rep = enumerate_graph(g)
    assert rep.components == [[0, 1, 2], [3, 4], [5]]
    assert rep.polynomial == Polynomial([1, 1])
    assert rep.spectrum == {2: 1, 6: 1}
    assert rep.orientations == 8 == count_acyclic_orientations(g)
    assert rep.count == 2
