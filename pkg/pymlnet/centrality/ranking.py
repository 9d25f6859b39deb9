import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from scipy import stats

from ..mlnet.model import ActorId, MultilayerNetwork
from .betweenness import BetweennessScore, MultilayerBetweenness, classic_betweenness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankDelta:
    """Position change of an actor between the classic and the multi-layer ranking.

    ``delta = classic_rank - ml_rank``: positive when the actor climbs under the multi-layer measure.
    """

    actor: ActorId
    classic_rank: int
    ml_rank: int
    delta: int


@dataclass(frozen=True)
class RankCorrelation:
    spearman: float | None
    kendall: float | None
    max_abs_delta: int


def rank_positions(scores: Mapping[ActorId, Fraction | int]) -> dict[ActorId, int]:
    """1-based ranks by descending score, ties broken by ascending actor index."""
    ordered = sorted(scores, key=lambda actor: (-scores[actor], actor.index))
    return {actor: position for position, actor in enumerate(ordered, start=1)}


def rank_delta_report(network: MultilayerNetwork, options: dict[str, Any] | None = None) -> list[RankDelta]:
    """Compare the classic ranking on the super-sociomatrix with the multi-layer ranking.

    Args:
        network: The network.
        options: ``classic_mode`` selects the classic flavour (default ``fractional``);
            the rest is passed to ``MultilayerBetweenness``.

    Returns:
        One row per actor, ordered by classic rank.
    """
    if options is None:
        options = {}
    mode = options.get("classic_mode", "fractional")

    betweenness = MultilayerBetweenness(network, options)
    classic = classic_betweenness(network.flatten(network.all_layers()), mode)
    return rank_deltas(classic, betweenness.ml_betweenness_all())


def rank_deltas(classic: Mapping[ActorId, Fraction | int], ml: Mapping[ActorId, Fraction | int]) -> list[RankDelta]:
    classic_ranks, ml_ranks = rank_positions(classic), rank_positions(ml)
    rows = [
        RankDelta(
            actor=actor,
            classic_rank=classic_ranks[actor],
            ml_rank=ml_ranks[actor],
            delta=classic_ranks[actor] - ml_ranks[actor],
        )
        for actor in classic_ranks
    ]
    return sorted(rows, key=lambda row: row.classic_rank)


def rank_correlation(scores: list[BetweennessScore], mode: str = "fractional") -> RankCorrelation:
    """Spearman and Kendall correlation between the classic and multi-layer scores.

    Correlations are ``None`` when undefined (fewer than two actors or a constant score vector).
    """
    classic = {s.actor: s.classic_fractional if mode == "fractional" else s.classic_count for s in scores}
    ml = {s.actor: s.ml_count for s in scores}
    deltas = rank_deltas(classic, ml)

    x = [float(classic[s.actor]) for s in scores]
    y = [float(ml[s.actor]) for s in scores]

    def _clean(value: float) -> float | None:
        return None if math.isnan(value) else float(value)

    spearman = kendall = None
    if len(scores) >= 2 and len(set(x)) > 1 and len(set(y)) > 1:
        spearman = _clean(stats.spearmanr(x, y).statistic)
        kendall = _clean(stats.kendalltau(x, y).statistic)
    else:
        logger.warning("rank correlation undefined for constant or too short score vectors")

    return RankCorrelation(
        spearman=spearman, kendall=kendall, max_abs_delta=max((abs(d.delta) for d in deltas), default=0)
    )
