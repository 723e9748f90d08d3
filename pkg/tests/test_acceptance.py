"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line with its timing; the lines are printed
in the terminal summary (see conftest.py) so they show up in any run.
"""

import itertools
import time

import pytest

from cambrian.coxeter import canonicalize, identity
from cambrian.lattice import (
    is_distributive,
    is_graded,
    is_extremal,
    is_left_modular_element,
    is_left_modular_element_def,
    is_semidistributive,
    is_trim,
    join_irreducibles,
    lattice_length,
    meet_irreducibles,
    sublattice_interval,
)
from cambrian.sortable import (
    all_reduced_words,
    cambrian_interval,
    coxeter_element,
    is_sortable,
    is_sortable_recursive,
    sorting_chain,
    sorting_word,
)
from cambrian.systems import affine_c3, dihedral, rank3, type_a, type_b3, type_h3
from cambrian.verify import (
    all_coxeter_elements,
    figure_1a_lattice,
    figure_1b_lattice,
    figure_2_data,
    figure_2_lattice,
    summarize,
    sweep,
)
from cambrian.weak import enumerate_elements, order_ideal, weak_join, weak_meet
from latticegen import random_lattices

RESULTS = {}

TITLES = {
    1: "worked sorting example in affine C3",
    2: "26-element affine C3 interval",
    3: "unique meet-irreducible avoiding s0",
    4: "trim vs semidistributive fixtures",
    5: "trimness sweep over rank 2, rank 3 and affine C3",
    6: "Tamari lattice in A3",
    7: "oracle equivalences on fixtures and 200 random lattices",
    8: "lattice meets/joins agree with weak order",
}


def record(n, ok, seconds, detail=""):
    RESULTS[n] = (ok, seconds, detail)


def finish(n, checks, start, budget=None, detail=""):
    elapsed = time.perf_counter() - start
    if budget is not None:
        checks[f"under {budget} s"] = elapsed < budget
    ok = all(checks.values())
    record(n, ok, elapsed, detail)
    assert ok, {k: v for k, v in checks.items() if not v}


@pytest.fixture(scope="module")
def c3():
    return affine_c3()


@pytest.fixture(scope="module")
def gamma(c3):
    return coxeter_element(c3, "s0 s1 s2 s3")


@pytest.fixture(scope="module")
def fig2(c3, gamma):
    return cambrian_interval(identity(c3), c3.element("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3"), gamma)


def test_criterion_1(c3, gamma):
    start = time.perf_counter()
    w = canonicalize(c3, c3.parse_word("s2 s3 s2 s0"))
    w2 = canonicalize(c3, c3.parse_word("s0 s2 s3 s1"))
    sw, sw2 = sorting_word(w, gamma), sorting_word(w2, gamma)
    checks = {
        "4 reduced words": len(all_reduced_words(w)) == 4,
        "5 reduced words": len(all_reduced_words(w2)) == 5,
        "sorting word": sw.render() == "s0 s2 s3 | s2",
        "sorting word 2": sw2.render() == "s0 s2 s3 | s1",
        "blocks": [set(b) for b in sw.blocks] == [{0, 2, 3}, {2}],
        "blocks 2": [set(b) for b in sw2.blocks] == [{0, 2, 3}, {1}],
        "sortable": is_sortable(w, gamma),
        "not sortable": not is_sortable(w2, gamma),
    }
    finish(1, checks, start, budget=1.0)


def test_criterion_2(c3, gamma):
    start = time.perf_counter()
    fig2 = cambrian_interval(identity(c3), c3.element("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3"), gamma)
    data = figure_2_data()
    L = fig2.lattice
    chain = sorting_chain(fig2.top, gamma)
    index = [fig2.index(x) for x in chain]
    checks = {
        "26 elements": len(fig2) == 26,
        "labels": set(L.labels) == set(data["labels"]),
        "covers": {(L.labels[a], L.labels[b]) for a, b in L.covers} == {tuple(c) for c in data["covers"]},
        "length 10": lattice_length(L) == 10,
        "join-irreducibles": {L.labels[x] for x in join_irreducibles(L)} == set(data["join_irreducibles"]),
        "meet-irreducibles": {L.labels[x] for x in meet_irreducibles(L)} == set(data["meet_irreducibles"]),
        "ten irreducibles each": len(data["join_irreducibles"]) == len(data["meet_irreducibles"]) == 10,
        "trim": is_trim(L),
        "not graded": not is_graded(L),
        "chain of 11": len(chain) == 11,
        "chain left-modular": all(is_left_modular_element(L, i) for i in index),
    }
    finish(2, checks, start, budget=10.0)


def test_criterion_3(c3, fig2):
    start = time.perf_counter()
    L = fig2.lattice
    s0 = L.index("s0")
    avoiding = [L.labels[x] for x in meet_irreducibles(L) if not L.le(s0, x)]
    checks = {"only s2 s3 s2 s3": avoiding == ["s2 s3 s2 s3"]}
    finish(3, checks, start, detail=", ".join(avoiding))


def test_criterion_4():
    start = time.perf_counter()
    a, b = figure_1a_lattice(), figure_1b_lattice()
    checks = {
        "1a trim": is_trim(a),
        "1a not semidistributive": not is_semidistributive(a),
        "1a length 4": lattice_length(a) == 4,
        "1a |J|=|M|=4": len(join_irreducibles(a)) == len(meet_irreducibles(a)) == 4,
        "1b semidistributive": is_semidistributive(b),
        "1b not trim": not is_trim(b),
        "1b length 3": lattice_length(b) == 3,
        "1b |J|=|M|=4": len(join_irreducibles(b)) == len(meet_irreducibles(b)) == 4,
    }
    finish(4, checks, start)


def sweep_plan():
    """(system, max_len) pairs: complete enumeration for finite groups,
    length caps for infinite ones."""
    plan = [(dihedral(m), m) for m in range(2, 9)]
    plan.append((dihedral(0), 12))
    for labels in itertools.product([2, 3, 4, 5], repeat=3):
        system = rank3(*labels)
        plan.append((system, 15 if system.is_finite() else 12))
    plan.append((affine_c3(), 10))
    return plan


@pytest.mark.slow
def test_criterion_5():
    start = time.perf_counter()
    totals = {"reports": 0, "checked": 0, "skipped": 0, "intervals": 0, "failures": 0}
    plan = sweep_plan()
    for system, max_len in plan:
        summary = summarize(sweep([system], gammas="all", max_len=max_len, max_elems=10**7, intervals="all"))
        for k in totals:
            totals[k] += summary[k]
    checks = {
        "73 systems": len(plan) == 73,
        "no failures": totals["failures"] == 0,
        "nothing skipped": totals["skipped"] == 0,
        "something checked": totals["checked"] > 0,
    }
    detail = f"{totals['checked']} tops, {totals['intervals']} intervals, {totals['failures']} failures"
    finish(5, checks, start, budget=300.0, detail=detail)


def test_criterion_6():
    start = time.perf_counter()
    a3 = type_a(3)
    gamma = coxeter_element(a3, "s1 s2 s3")
    L = cambrian_interval(identity(a3), a3.element("s1 s2 s1 s3 s2 s1"), gamma).lattice
    checks = {"14 elements": L.size == 14, "trim": is_trim(L), "not graded": not is_graded(L)}
    finish(6, checks, start)


def longest(system):
    """Longest element of a finite group, found by enumeration."""
    return max(enumerate_elements(system, 20), key=lambda x: x.length)


def fixture_ideals():
    c3 = affine_c3()
    return [
        c3.element("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3"),
        c3.element("s3 s2 s1 s0 s2 s1 s3 s2"),
        longest(type_a(2)),
        longest(type_a(3)),
        longest(type_b3()),
        longest(type_h3()),
        dihedral(0).element("s1 s2 s1 s2 s1 s2 s1 s2 s1 s2"),
    ]


def fixture_intervals():
    out = []
    for top in fixture_ideals():
        system = top.system
        for gamma in all_coxeter_elements(system):
            if is_sortable(top, gamma):
                out.append(cambrian_interval(identity(system), top, gamma))
            else:
                # largest sortable elements below a non-sortable top
                ideal = [x for x in order_ideal(top) if is_sortable(x, gamma)]
                out.append(cambrian_interval(identity(system), ideal[-1], gamma))
    return out


def test_criterion_7():
    start = time.perf_counter()
    checks = {}
    elements = 0
    for top in fixture_ideals():
        for gamma in all_coxeter_elements(top.system):
            for w in order_ideal(top):
                elements += 1
                if is_sortable(w, gamma) != is_sortable_recursive(w, gamma):
                    checks[f"recursion {w.label} {gamma.order}"] = False
    lattices = [figure_1a_lattice(), figure_1b_lattice(), figure_2_lattice()]
    lattices += [iv.lattice for iv in fixture_intervals()]
    samples = random_lattices(200, max_size=12)
    bad = {"left-modular": 0, "irreducible counts": 0, "graded extremal": 0, "trim intervals": 0}
    for L in lattices + samples:
        if any(is_left_modular_element(L, x) != is_left_modular_element_def(L, x) for x in range(L.size)):
            bad["left-modular"] += 1
        if is_semidistributive(L) and len(join_irreducibles(L)) != len(meet_irreducibles(L)):
            bad["irreducible counts"] += 1
        if is_graded(L) and is_extremal(L) and not is_distributive(L):
            bad["graded extremal"] += 1
        if is_trim(L) and not all(
            is_trim(sublattice_interval(L, a, b))
            for a, b in itertools.product(range(L.size), repeat=2)
            if L.le(a, b)
        ):
            bad["trim intervals"] += 1
    checks.update({k: v == 0 for k, v in bad.items()})
    checks["200 random lattices"] = len(samples) == 200
    detail = f"{elements} element checks, {len(lattices)} fixtures + {len(samples)} random lattices"
    finish(7, checks, start, detail=detail)


def test_criterion_8(fig2):
    start = time.perf_counter()
    intervals = [fig2] + fixture_intervals()
    disagreements = 0
    pairs = 0
    for iv in intervals:
        L = iv.lattice
        cap = iv.top.length
        for i, j in itertools.combinations_with_replacement(range(L.size), 2):
            x, y = iv.elements[i], iv.elements[j]
            pairs += 1
            if weak_meet(x, y) != iv.elements[L.meet(i, j)]:
                disagreements += 1
            if weak_join(x, y, cap) != iv.elements[L.join(i, j)]:
                disagreements += 1
    checks = {"no disagreements": disagreements == 0}
    finish(8, checks, start, detail=f"{len(intervals)} intervals, {pairs} pairs, {disagreements} disagreements")
