"""Finite commutative ring laboratory."""

import json

from ._ringlab import *  # noqa: F401,F403
from ._ringlab import __version__, _classify_json, _radical_json, _sweep_jsonl


def classify(expr, method="both", order_cap=4096, enumeration_cap=1024):
    """Decide nil-clean, weakly nil-clean, nil-neat and weakly nil-neat for an expression."""
    return json.loads(_classify_json(expr, method, order_cap, enumeration_cap))


def radical(expr, order_cap=4096):
    """Nilradical, Jacobson radical and, for group rings, the Karpilovsky ideal."""
    return json.loads(_radical_json(expr, order_cap))


def verify_theorem(max_ring_order=9, max_product_order=12, max_group_order=4,
                   max_groupring_order=1024, jobs=1):
    """Run the group-ring sweep. Returns (header, records, summary)."""
    lines = [json.loads(line) for line in _sweep_jsonl(
        max_ring_order, max_product_order, max_group_order, max_groupring_order, jobs).splitlines()]
    return lines[0], lines[1:-1], lines[-1]
