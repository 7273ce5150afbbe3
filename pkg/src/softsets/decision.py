"""Multi-source decision procedure driven by similarity profiles.

Candidates are scored against an ideal structure per primary parameter of
the ideal; each parameter picks the best-scoring candidate and the selected
items are the inner intersection of the ideal's and the winner's assignments
at that parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    NoCandidatesError,
    TypeTwoSoftSet,
    _require_same_universe,
    t1_intersection,
)
from .measures import similarity_profile


@dataclass(frozen=True)
class DecisionRow:
    """Scores and outcome for one primary parameter of the ideal."""

    parameter: str
    scores: tuple[Fraction, ...]  # one per candidate, input order
    winner_index: int
    tie: bool
    selection: dict[str, tuple[str, ...]]  # underlying param -> chosen items


@dataclass(frozen=True)
class DecisionReport:
    rows: tuple[DecisionRow, ...]

    def winners(self) -> dict[str, int]:
        return {row.parameter: row.winner_index for row in self.rows}


def decide(ideal: TypeTwoSoftSet, candidates: Sequence[TypeTwoSoftSet]) -> DecisionReport:
    """Score every candidate against the ideal and pick per-parameter winners.

    The ideal's primary parameters drive the loop; a candidate lacking a
    parameter scores 0 there.  Ties go to the lowest candidate index and are
    flagged so callers can apply a secondary criterion.  An all-zero row still
    elects candidate 0 (flagged as a tie when there are several candidates),
    with a possibly empty selection.
    """
    if not candidates:
        raise NoCandidatesError("at least one candidate is required")
    for cand in candidates:
        _require_same_universe(ideal, cand)
    profiles = [similarity_profile(ideal, cand) for cand in candidates]
    rows = []
    for a, inner in zip(ideal.primary, ideal.inners):
        scores = tuple(p.scores.get(a, Fraction(0)) for p in profiles)
        best = max(scores)
        winner = scores.index(best)
        tie = scores.count(best) > 1
        winner_set = candidates[winner]
        if a in winner_set.primary:
            chosen = t1_intersection(inner, winner_set.inner(a))
            selection = {b: tuple(sorted(img)) for b, img in chosen.as_dict().items()}
        else:
            selection = {}
        rows.append(DecisionRow(a, scores, winner, tie, selection))
    return DecisionReport(tuple(rows))
