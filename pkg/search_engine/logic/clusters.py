"""
Goal Clusters

Goals that transitively share a metavariable must be searched together;
all other goals can be searched independently.
"""
import logging
from typing import Dict, List, Tuple

from .formula import GoalState
from .union_find import UnionFind

logger = logging.getLogger(__name__)

Cluster = Tuple[int, ...]


def goal_clusters(gs: GoalState) -> List[Cluster]:
    """Partition the goal indices of `gs` into clusters.

    A term index maps each metavariable to the first goal seen with it;
    every later goal mentioning the same metavariable is merged into that
    goal's class. Goals without metavariables end up as singletons.
    """
    uf = UnionFind(len(gs.goals))
    index: Dict[str, int] = {}
    for i, goal in enumerate(gs.goals):
        for name in sorted(goal.metavars()):
            owner = index.setdefault(name, i)
            if owner != i:
                uf.union(owner, i)
    clusters = [tuple(members) for members in uf.groups()]
    logger.debug(f"Clusters: {len(gs.goals)} goals -> {len(clusters)} clusters")
    return clusters
