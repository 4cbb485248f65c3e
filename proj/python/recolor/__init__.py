"""Best-choice recoloring of degenerate chordal graphs.

Vertices are 0-based ints, colors are 1..t. Colorings are plain lists and
recoloring sequences are lists of (vertex, new_color) pairs.
"""

import json as _json

from ._core import (
    Graph,
    NotChordal,
    RecolorError,
    StateCapExceeded,
    apply_sequence,
    best_choice_sequence,
    best_choice_trace,
    degeneracy,
    enumerate_colorings,
    greedy_color,
    is_proper,
    load_graph,
    mcs_peo,
    random_coloring,
    recoloring_bound,
    rt_connected,
    rt_diameter,
    rt_distance,
    rt_shortest_path,
)
from . import _core

DEFAULT_STATE_CAP = 2_000_000


def _instance(text):
    j = _json.loads(text)
    graph = Graph(j["n"], [(u, v) for u, nbrs in enumerate(j["adj"]) for v in nbrs if u < v])
    return {"graph": graph, "decomposition": j["decomposition"], "ordering": j["ordering"]["order"]}


def gen_ktree(n, k, seed):
    """Random k-tree; returns graph, decomposition dict and construction order."""
    return _instance(_core._gen_ktree(n, k, seed))


def gen_chordal(n, d, seed):
    return _instance(_core._gen_chordal(n, d, seed))


def gen_partial_ktree(n, k, keep, seed):
    return _instance(_core._gen_partial_ktree(n, k, keep, seed))


def analyze(g, start, t, steps, order=None, naughty=False, d=-1):
    """Runs the invariant checkers; returns the report as a dict."""
    return _json.loads(_core._analyze(g, start, t, steps, order, naughty, d))


def merge_by_coloring(g, decomposition, alpha, t):
    out = _json.loads(_core._merge_by_coloring(g, _json.dumps(decomposition), alpha, t))
    out["graph"] = Graph(out["n"], [(u, v) for u, nbrs in enumerate(out["adj"]) for v in nbrs if u < v])
    return out


def pipeline(g, decomposition, alpha, beta, t, bridge="oracle", state_cap=DEFAULT_STATE_CAP):
    if bridge not in ("oracle", "none"):
        raise ValueError("bridge must be 'oracle' or 'none'")
    return _json.loads(_core._pipeline(g, _json.dumps(decomposition), alpha, beta, t, bridge == "oracle", state_cap))


def run_experiment(family="ktree", n_min=10, n_max=100, d=2, t_rule="2d+1", trials=10, seed=1,
                   threads=1, naughty=False, oracle=False):
    """Returns (rows_csv, summary_dict)."""
    csv, summary = _core._run_experiment(family, n_min, n_max, d, t_rule, trials, seed, threads, naughty, oracle)
    return csv, _json.loads(summary)
