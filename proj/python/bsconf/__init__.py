"""Python access to the bsconf core."""

import json

from ._core import (
    Error,
    NAdic,
    NAryNumber,
    compare,
    h2_displacement,
    ideal_contains,
    normalize,
    poset_dot,
    run_cli,
    separation_bound,
    word_length,
    word_length_bfs,
)
from . import _core


def poset(n):
    return json.loads(_core.poset_json(n))


def tree_ball(n, zero_set, radius):
    return json.loads(_core.tree_ball_json(n, list(zero_set), radius))


def verify_s(n, zero_set, frac_depth=3):
    return json.loads(_core.verify_s(n, list(zero_set), frac_depth))


def qi_facts(i, steps, max_degree, max_coeff=32, max_terms=2):
    return json.loads(_core.qi_facts_json(i, steps, max_degree, max_coeff, max_terms))


def cli(*argv):
    rc, out, err = run_cli([str(a) for a in argv])
    return rc, out, err
