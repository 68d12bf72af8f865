"""Acceptance criteria, one test per criterion.

Each criterion test records a PASS/FAIL line; conftest.py prints them in
the terminal summary.  ``python3 -m tests.test_acceptance`` runs this file alone.
"""

import random
import time
from contextlib import contextmanager

from evolalg import formats
from evolalg.cli import main
from evolalg.evolution import is_regular, new_algebra
from evolalg.fields import GF, QQ, determinant
from evolalg.functor import build_algebra, rebase, recover_graph
from evolalg.graph import graph_isomorphism, is_automorphism, new_graph
from evolalg.groups import CATALOG, group_from_permutations, group_isomorphic
from evolalg.monomial import algebra_automorphisms, algebra_isomorphism

from . import oracles
from .conftest import classes, random_graph, small_classes
from .test_functor import random_monomial
from .test_monomial import as_raw, random_regular

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        status = "PASS" if ok else "FAIL"
        RESULTS[number] = f"criterion {number} {status}: {title} ({elapsed:.1f}s, budget {budget}s)"
        print(RESULTS[number])


def test_class_counts():
    assert [len(classes(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_criterion_1_determinant_one():
    with criterion(1, "determinant of every graph algebra is 1 over Q and GF(2)", 10):
        start = time.perf_counter()
        rng = random.Random(1)
        graphs = small_classes(5) + [random_graph(rng, 12) for _ in range(200)]
        assert len(graphs) == 52 + 200
        for G in graphs:
            for F in (QQ, GF(2)):
                assert determinant(build_algebra(G, F).matrix) == 1
        assert time.perf_counter() - start < 10


def test_criterion_2_automorphism_groups_agree():
    with criterion(2, "algebra automorphisms match graph automorphisms on all classes up to 5 vertices", 120):
        for G in small_classes(5):
            brute = oracles.graph_automorphisms(G.n, G.edges)
            aut = algebra_automorphisms(build_algebra(G, QQ))
            assert aut.order == len(brute)
            H = group_from_permutations(aut.group.degree, aut.group.generators)
            K = group_from_permutations(G.n, brute)
            assert group_isomorphic(H, K)
            edge_index = {e: G.n + k for k, e in enumerate(G.edges)}
            elements = aut.elements()
            assert len(elements) == len(brute)
            for m in elements:
                assert all(s == 1 for s in m.scales)
                vert = m.sigma[:G.n]
                assert is_automorphism(vert, G) and tuple(vert) in set(brute)
                for (u, w), k in edge_index.items():
                    assert m.sigma[k] == edge_index[tuple(sorted((vert[u], vert[w])))]


def test_criterion_3_recovery():
    with criterion(3, "graph recovery: exact round trip, monomial robustness, iso equivalence", 120):
        for G in small_classes(5):
            assert recover_graph(build_algebra(G, QQ))[0] == G
        rng = random.Random(3)
        F = GF(7)
        for _ in range(100):
            G = random_graph(rng, 8)
            X = rebase(build_algebra(G, F), random_monomial(rng, F, G.n + G.m))
            H, _ = recover_graph(X)
            assert graph_isomorphism(G, H) is not None
        reps = classes(4)
        # relabelled copies make the "present" direction non-trivial
        copies = [G.relabel(rng.sample(range(4), 4)) for G in reps]
        for A in reps:
            for B in copies:
                g = graph_isomorphism(A, B) is not None
                XA, XB = build_algebra(A, QQ), build_algebra(B, QQ)
                a = XA.dim == XB.dim and algebra_isomorphism(XA, XB) is not None
                assert a == g


def test_criterion_4_monomial_oracle():
    with criterion(4, "algebra automorphisms equal brute-force enumeration over GF(5)", 60):
        rng = random.Random(4)
        F = GF(5)
        for _ in range(20):
            X = random_regular(rng, F, 5)
            assert as_raw(algebra_automorphisms(X).elements()) == oracles.algebra_automorphisms(X)
        D = new_algebra(QQ, [[1, 0], [0, 2]])
        aut = algebra_automorphisms(D)
        assert aut.order == 2 and not aut.all_scales_one()
        assert as_raw(aut.elements()) == oracles.algebra_automorphisms(D)


def _realize(tmp_path, name, t):
    grp = tmp_path / f"{name}.grp"
    grp.write_text(formats.write_group_table(CATALOG[name]()))
    alg, rep = tmp_path / f"{name}_{t}.alg", tmp_path / f"{name}_{t}.rep"
    code = main(["realize", str(grp), "--variant", str(t), "--out", str(alg), "--report", str(rep)])
    return code, rep.read_text() if rep.exists() else "", alg


def test_criterion_5_realization(tmp_path):
    with criterion(5, "realize exits 0 with isomorphic: yes for the catalog at t = 0, 1", 300):
        for name in ("Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "S3", "D4"):
            for t in (0, 1):
                code, report, _ = _realize(tmp_path, name, t)
                assert code == 0 and "isomorphic: yes" in report.splitlines()
        dims = []
        for t in (0, 1, 2):
            code, _, alg = _realize(tmp_path, "Z3", t)
            assert code == 0
            dims.append(formats.read_algebra(alg.read_text()).dim)
        assert len(set(dims)) == 3


def test_criterion_6_negative_controls(tmp_path, capsys):
    with criterion(6, "non-regular inputs exit 4; Z4 against a Z2xZ2 algebra is not isomorphic", 60):
        bad = tmp_path / "singular.alg"
        bad.write_text(formats.write_algebra(new_algebra(QQ, [[1, 0], [0, 0]])))
        assert not is_regular(formats.read_algebra(bad.read_text()))
        assert main(["aut", str(bad)]) == 4
        assert main(["recover", str(bad)]) == 4
        code, _, alg = _realize(tmp_path, "Z2xZ2", 0)
        assert code == 0
        z4 = tmp_path / "z4.grp"
        z4.write_text(formats.write_group_table(CATALOG["Z4"]()))
        capsys.readouterr()
        assert main(["verify", str(z4), str(alg)]) == 1
        assert "isomorphic: no" in capsys.readouterr().out.splitlines()


def test_degenerate_regularity():
    assert not is_regular(new_algebra(QQ, [[0]]))
    assert is_regular(build_algebra(new_graph(0, []), QQ))


if __name__ == "__main__":
    import sys

    import pytest
    sys.exit(pytest.main([__file__, "-q"]))
