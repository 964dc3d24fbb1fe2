import json
import random

import pytest
from hypothesis import given, settings

from nbseq.generators import (
    all_labeled_graphs,
    gen_complete_bipartite,
    gen_complete_multipartite,
    gen_k_uniform,
    gen_two_uniform,
    graph_from_edge_mask,
    random_genspec,
)
from nbseq.graph import Graph, add_true_twin, disjoint_union
from nbseq.sequences import SolverCapError
from nbseq.uniformity import (
    BruteForce,
    LengthWitness,
    MultipartiteWitness,
    StructuralDecomposition,
    UniformityReport,
    classify_open_uniform,
    classify_total_uniform,
    is_2_uniform_structural,
    is_complete,
    is_complete_bipartite,
    is_complete_multipartite,
    is_k_uniform_bruteforce,
    recognize_uniform_structural,
    reduce_true_twins,
    report_from_json,
    residual_uniformity_check,
    structural_k,
    verify_report,
)

from conftest import complete, cycle, graphs, path

K22 = gen_complete_bipartite(2, 2)
K1_K22 = disjoint_union(Graph(1), K22)
K3_K3 = disjoint_union(complete(3), complete(3))


def test_bruteforce_examples():
    r = is_k_uniform_bruteforce(complete(6))
    assert r.outcome() == ("uniform", 1)
    assert isinstance(r.certificate, BruteForce) and r.certificate.lengths == (1,)

    r = is_k_uniform_bruteforce(path(4))
    assert r.outcome() == ("non_uniform", None)
    assert sorted(map(len, r.certificate.sequences)) == [2, 3]
    assert verify_report(path(4), r)

    assert is_k_uniform_bruteforce(Graph(3)).outcome() == ("uniform", 3)


def test_complete_predicates():
    assert is_complete(complete(4)) and is_complete(Graph(1))
    assert not is_complete(Graph(0)) and not is_complete(path(3))
    assert is_complete_bipartite(gen_complete_bipartite(2, 3)) == ({0, 1}, {2, 3, 4})
    assert is_complete_bipartite(cycle(4)) == ({0, 2}, {1, 3})
    assert is_complete_bipartite(path(4)) is None
    assert is_complete_bipartite(complete(3)) is None
    assert is_complete_multipartite(complete(3)) == [{0}, {1}, {2}]
    assert is_complete_multipartite(gen_complete_multipartite([2, 2, 2])) == [{0, 1}, {2, 3}, {4, 5}]
    assert is_complete_multipartite(Graph(3)) is None
    assert is_complete_multipartite(Graph(1)) is None


def test_complete_bipartite_exhaustive_n4():
    # P4 fails: every 2-partition into independent sets misses a cross edge
    for g in all_labeled_graphs(4):
        parts = is_complete_bipartite(g)
        brute = None
        for m in range(1, 15):
            a = {v for v in range(4) if m >> v & 1}
            b = set(range(4)) - a
            if all(g.has_edge(u, v) != ((u in a) == (v in a)) for u in range(4) for v in range(u + 1, 4)):
                brute = (a, b)
        assert (parts is None) == (brute is None)


def test_is_2_uniform_structural():
    assert is_2_uniform_structural(cycle(4)) == [({0}, {2}), ({1}, {3})]
    assert is_2_uniform_structural(complete(3)) is None
    assert is_2_uniform_structural(gen_complete_multipartite([2, 2, 2])) == [({0}, {1}), ({2}, {3}), ({4}, {5})]
    assert is_2_uniform_structural(K3_K3) == [({0, 1, 2}, {3, 4, 5})]
    assert is_2_uniform_structural(Graph(0)) is None


def test_reduce_true_twins():
    q, classes = reduce_true_twins(complete(5))
    assert q == Graph(1) and classes == [{0, 1, 2, 3, 4}]
    q, classes = reduce_true_twins(cycle(4))
    assert q == cycle(4) and classes == [{0}, {1}, {2}, {3}]
    q, classes = reduce_true_twins(add_true_twin(cycle(4), 0))
    assert q == cycle(4) and classes == [{0, 4}, {1}, {2}, {3}]


def test_structural_examples():
    r = recognize_uniform_structural(K1_K22)
    assert r.outcome() == ("uniform", 3)
    assert [c.k for c in r.certificate.components] == [1, 2]
    assert verify_report(K1_K22, r)

    r = recognize_uniform_structural(K3_K3)
    assert r.outcome() == ("uniform", 2)
    assert [c.k for c in r.certificate.components] == [1, 1]
    assert r.certificate.twin_classes == ((0, 1, 2), (3, 4, 5))

    r = recognize_uniform_structural(path(4))
    assert r.outcome() == ("non_uniform", None)
    assert verify_report(path(4), r)

    assert recognize_uniform_structural(Graph(0)).outcome() == ("uniform", 0)


def test_structural_witness_maps_twins_back():
    # P4 component with a twinned inner vertex, beside a 2-uniform piece
    g = disjoint_union(add_true_twin(path(4), 1), cycle(4))
    r = recognize_uniform_structural(g)
    assert r.status == "non_uniform"
    assert verify_report(g, r)


def test_structural_without_affordable_witness():
    g = disjoint_union(path(6), complete(2))
    r = recognize_uniform_structural(g, cap=4)
    assert r.status == "non_uniform"
    assert r.certificate == LengthWitness()
    assert not verify_report(g, r)


def test_residual_examples():
    assert residual_uniformity_check(K1_K22, 0)
    assert all(residual_uniformity_check(complete(5), v) for v in range(5))
    assert residual_uniformity_check(K3_K3, 0)
    with pytest.raises(ValueError):
        residual_uniformity_check(path(4), 0)


def test_total_open_examples():
    k33 = gen_complete_bipartite(3, 3)
    for fn in (classify_total_uniform, classify_open_uniform):
        r = fn(k33)
        assert r.outcome() == ("uniform", 2)
        assert isinstance(r.certificate, MultipartiteWitness)
        assert verify_report(k33, r)

    k12 = gen_complete_bipartite(1, 2)
    assert classify_total_uniform(k12).outcome() == ("uniform", 2)
    r = classify_open_uniform(k12)
    assert r.outcome() == ("non_uniform", None)
    assert verify_report(k12, r)

    # C6: total dominating ONS all have length 4, dominating ONS 2..4
    r = classify_total_uniform(cycle(6))
    assert r.outcome() == ("uniform", 4) and r.certificate == BruteForce((4,))
    assert verify_report(cycle(6), r)
    r = classify_open_uniform(cycle(6))
    assert r.outcome() == ("non_uniform", None)
    assert sorted(map(len, r.certificate.sequences)) == [2, 4]

    for g in (Graph(0), Graph(2), disjoint_union(complete(3), Graph(1))):
        assert classify_total_uniform(g).status == "undefined"
        assert classify_open_uniform(g).status == "undefined"
        assert verify_report(g, classify_open_uniform(g))


def test_total_open_cap():
    g = disjoint_union(path(20), complete(2))
    with pytest.raises(SolverCapError):
        classify_total_uniform(g)
    # structural answers need no solver
    big = gen_complete_multipartite([10, 10, 10])
    assert classify_open_uniform(big).outcome() == ("uniform", 2)
    star = gen_complete_bipartite(1, 30)
    assert classify_open_uniform(star).status == "non_uniform"


def test_all_certificates_replay_small():
    for n in range(6):
        for g in all_labeled_graphs(n):
            for r in (
                recognize_uniform_structural(g),
                is_k_uniform_bruteforce(g),
                classify_total_uniform(g),
                classify_open_uniform(g),
            ):
                assert verify_report(g, r), (g, r)
                assert report_from_json(r.to_json()).to_dict() == r.to_dict()


def test_tampered_certificates_rejected():
    g = disjoint_union(Graph(1), cycle(4))
    r = recognize_uniform_structural(g)
    d = json.loads(r.to_json())
    d["k"] = 2
    assert not verify_report(g, report_from_json(json.dumps(d)))
    d = json.loads(r.to_json())
    d["certificate"]["components"][1]["pieces"] = [[[1, 2], [3, 4]]]
    assert not verify_report(g, report_from_json(json.dumps(d)))
    d = json.loads(r.to_json())
    d["certificate"]["twin_classes"] = [[0], [1, 3], [2], [4]]
    assert not verify_report(g, report_from_json(json.dumps(d)))
    # a structural certificate replayed on a different graph
    assert not verify_report(path(5), r)

    bad = UniformityReport("closed", "non_uniform", None, LengthWitness(((0, 1), (0, 1, 2))))
    assert not verify_report(cycle(4), bad)
    bad = UniformityReport("total", "uniform", 2, MultipartiteWitness(((0, 1), (2, 3))))
    assert not verify_report(path(4), bad)
    bad = UniformityReport("closed", "uniform", 2, BruteForce((2, 3)))
    assert not verify_report(path(4), bad)


def test_report_json_schema():
    r = recognize_uniform_structural(K1_K22)
    d = json.loads(r.to_json())
    assert set(d) == {"kind", "status", "k", "certificate"}
    assert d["certificate"]["type"] == "structural"
    assert d["certificate"]["components"][1] == {
        "vertices": [1, 2, 3, 4],
        "k": 2,
        "pieces": [[[1], [2]], [[3], [4]]],
    }
    with pytest.raises(ValueError):
        report_from_json('{"kind": "weird", "status": "uniform", "k": 1, "certificate": null}')


def test_agreement_exhaustive_small():
    for n in range(7):
        for g in all_labeled_graphs(n):
            assert recognize_uniform_structural(g).outcome() == is_k_uniform_bruteforce(g).outcome()


def test_twin_invariance():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 9)
        g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        h = add_true_twin(g, rng.randrange(n))
        before = recognize_uniform_structural(g).outcome()
        assert recognize_uniform_structural(h).outcome() == before
        assert is_k_uniform_bruteforce(h).outcome() == before


def test_component_additivity():
    rng = random.Random(5)
    for seed in range(200):
        parts = [gen_k_uniform(random_genspec(seed * 10 + i, 8))[0] for i in range(rng.randint(1, 3))]
        ks = [structural_k(p) for p in parts]
        union = disjoint_union(*parts)
        assert structural_k(union) == sum(ks)
        if union.n <= 14:
            assert is_k_uniform_bruteforce(union).k == sum(ks)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_structural_certificates_replay(g):
    r = recognize_uniform_structural(g)
    assert verify_report(g, r)
    assert structural_k(g) == r.k


def test_residual_rejects_non_uniform_residual():
    # sanity: the check is not vacuous
    g, _ = gen_k_uniform(random_genspec(1, 12))
    assert all(residual_uniformity_check(g, v) for v in range(g.n))
    assert structural_k(gen_two_uniform([(2, 3)])) == 2
