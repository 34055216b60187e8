"""
Unification

First-order syntactic unification over formulas with an occurs check.
Substitutions are kept idempotent: every binding is applied to the
existing range as soon as it is added.
"""
from __future__ import annotations

from typing import List, Optional, Tuple

from pyrsistent import pmap

from .formula import (
    BINARY,
    Formula,
    Meta,
    Substitution,
    apply_substitution,
    metavars_of,
)


def _bind(name: str, term: Formula, subst: Substitution) -> Optional[Substitution]:
    if name in metavars_of(term):
        return None
    single = {name: term}
    rebound = {k: apply_substitution(v, single) for k, v in subst.items()}
    rebound[name] = term
    return pmap(rebound)


def unify(f1: Formula, f2: Formula, subst: Optional[Substitution] = None) -> Optional[Substitution]:
    """Most general extension of `subst` making both formulas equal, or None"""
    current = pmap() if subst is None else subst
    pending: List[Tuple[Formula, Formula]] = [(f1, f2)]
    while pending:
        a, b = pending.pop()
        a = apply_substitution(a, current)
        b = apply_substitution(b, current)
        if a == b:
            continue
        if isinstance(a, Meta):
            current = _bind(a.name, b, current)
        elif isinstance(b, Meta):
            current = _bind(b.name, a, current)
        elif isinstance(a, BINARY) and type(a) is type(b):
            pending.append((a.right, b.right))
            pending.append((a.left, b.left))
            continue
        else:
            return None
        if current is None:
            return None
    return current


def is_idempotent(subst: Substitution) -> bool:
    domain = set(subst.keys())
    return all(not (metavars_of(v) & domain) for v in subst.values())
