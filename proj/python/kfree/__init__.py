"""K_{r+1}-free graph families, exact verifiers and theorem scans."""

import json

from ._kfree import (
    DEFAULT_NODE_BUDGET,
    Graph,
    blow_up,
    canonical_form,
    canonical_spec,
    chromatic_number,
    clique_number,
    complement,
    complete,
    contains_subgraph,
    cycle,
    find_clique,
    find_homomorphism,
    from_graph6,
    generate,
    is_k_colorable,
    is_regular,
    iso_reduced_graphs,
    isomorphic,
    join,
    labeled_graph_count,
    lemma_vertex,
    max_degree,
    maximal_completion,
    min_degree,
    psi,
    to_graph6,
    turan,
)
from . import _kfree


def check_theorem(id, r=2, k=1, n_min=1, n_max=7, mode="exhaustive"):
    return json.loads(_kfree._check_theorem(id, r, k, n_min, n_max, mode))


def audit(spec):
    return json.loads(_kfree._audit(spec))


def default_suite_config():
    return json.loads(_kfree._default_suite_config())


def run_suite(config):
    return json.loads(_kfree._run_suite(json.dumps(config)))


def check_certificate(cert):
    if not isinstance(cert, str):
        cert = json.dumps(cert)
    return _kfree._check_certificate(cert)
