"""Constructed drawings used as stored upper-bound certificates.

Both constructions place one side on a vertical axis (split 2 above / 1
below) and the other on a horizontal axis (split 2 left / 3 right) with
straight edges, which crosses nested same-side fans; the two cycles of the
join are then routed through the remaining gaps.  Each drawing is validated
on construction, so a bug here fails loudly rather than corrupting bounds.
"""

from __future__ import annotations

from .drawings import Drawing, validate_drawing
from .graphs import complete_bipartite, construct_named


def k35_four_crossing_drawing() -> Drawing:
    """K_{3,5} drawn with four crossings (vertices 0-2 one side, 3-7 other)."""
    g = complete_bipartite(3, 5)
    pairs = [
        ((0, 4), (1, 3)),
        ((0, 6), (1, 5)),
        ((0, 7), (1, 5)),
        ((0, 7), (1, 6)),
    ]
    order = {
        g.edge_index[(0, 7)]: [2, 3],
        g.edge_index[(1, 5)]: [2, 1],
    }
    d = Drawing.make(g, pairs, order)
    res = validate_drawing(d)
    if not res.valid:  # pragma: no cover
        raise AssertionError(f"stored K35 drawing invalid: {res.reason}")
    return d


def c3_join_c5_six_crossing_drawing() -> Drawing:
    """The join of a triangle (0-2) and a five-cycle (3-7) drawn with six
    crossings: four among the bipartite fan edges, one for each cycle's
    closing edge."""
    g = construct_named("join(C3,C5)")
    pairs = [
        ((0, 3), (1, 4)),
        ((0, 6), (1, 5)),
        ((0, 7), (1, 5)),
        ((0, 7), (1, 6)),
        ((0, 2), (4, 5)),
        ((1, 2), (3, 7)),
    ]
    order = {
        g.edge_index[(0, 7)]: [2, 3],
        g.edge_index[(1, 5)]: [2, 1],
    }
    d = Drawing.make(g, pairs, order)
    res = validate_drawing(d)
    if not res.valid:  # pragma: no cover
        raise AssertionError(f"stored C3 v C5 drawing invalid: {res.reason}")
    return d


def known_certificates() -> list:
    """(host graph, drawing) pairs consulted for upper-bound hints."""
    return [
        (complete_bipartite(3, 5), k35_four_crossing_drawing()),
        (construct_named("join(C3,C5)"), c3_join_c5_six_crossing_drawing()),
    ]
