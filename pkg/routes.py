"""
Routes Module

HTTP surface for running whole searches as a batch service. Each request
runs one search to completion; nothing steps or steers a running search.
"""
import logging
from typing import List

from fastapi import APIRouter, HTTPException
from fastapi.responses import Response

from models.request_models import ClusterRequest, ProveRequest, ProveResponse
from search_engine.config import RuleSpec, SearchConfig
from search_engine.engine import prove
from search_engine.logic import GoalState, GoalSyntaxError, goal_clusters, is_valid, parse_goal_state
from utils.tree_export import dump_result, export_dot


def _parse_goal_or_422(text: str):
    try:
        return parse_goal_state(text)
    except GoalSyntaxError as e:
        raise HTTPException(
            status_code=422,
            detail={"message": e.message, "line": e.line, "column": e.column},
        )


def cluster_report(goal_state: GoalState) -> List[dict]:
    """Clusters with 1-based goal numbers; ground clusters get a truth-table verdict"""
    report = []
    for cluster in goal_clusters(goal_state):
        goals = [goal_state.goals[i] for i in cluster]
        ground = not any(g.metavars() for g in goals)
        report.append({
            "goals": [i + 1 for i in cluster],
            "text": [str(g) for g in goals],
            "valid": all(is_valid(g) for g in goals) if ground else None,
        })
    return report


def setup_prove_routes(default_rules: List[RuleSpec], default_max_steps: int = 1000) -> APIRouter:
    """
    Setup search routes

    Args:
        default_rules: Rule table used when a request brings none
        default_max_steps: Step budget used when a request sets none

    Returns:
        Configured APIRouter
    """
    router = APIRouter()

    def run(request: ProveRequest):
        goal_state = _parse_goal_or_422(request.goal)
        rules = [entry.to_spec() for entry in request.rules] if request.rules is not None else list(default_rules)
        config = SearchConfig(
            rules=rules,
            clustering=request.clusters,
            prune_inapplicable=request.prune_inapplicable,
            max_steps=request.max_steps if request.max_steps is not None else default_max_steps,
        )
        issues = config.validate()
        if issues:
            raise HTTPException(status_code=422, detail="; ".join(issues))
        result = prove(goal_state, config)
        logging.info(f"Routes: {request.goal!r} -> {result.status.value} in {result.steps} steps")
        return result, dump_result(result, str(goal_state))

    @router.get("/rules")
    def get_rules():
        """The server's default rule table"""
        return [spec.to_dict() for spec in default_rules]

    @router.post("/prove", response_model=ProveResponse)
    def prove_goal(request: ProveRequest):
        """Run one best-first search and return its status and tree dump"""
        result, dump = run(request)
        return ProveResponse(
            status=result.status.value,
            steps=result.steps,
            failure=str(result.failure) if result.failure else None,
            dump=dump,
        )

    @router.post("/prove/dot")
    def prove_goal_dot(request: ProveRequest):
        """Run one best-first search and return the tree as Graphviz DOT"""
        _, dump = run(request)
        return Response(content=export_dot(dump), media_type="text/vnd.graphviz")

    @router.post("/clusters")
    def clusters(request: ClusterRequest):
        """Goal clusters of a goal state, goal numbers 1-based"""
        goal_state = _parse_goal_or_422(request.goal)
        return {"goal": str(goal_state), "clusters": cluster_report(goal_state)}

    return router
