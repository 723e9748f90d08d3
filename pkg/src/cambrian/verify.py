"""Executable checks of the trimness theorem and its supporting lemmas on
concrete Cambrian intervals, plus the transcribed figure fixtures and the
batch sweep driver.
"""

from __future__ import annotations

import itertools
import json
import logging
import random
from functools import reduce
from importlib import resources
from typing import Iterable, Sequence

from .coxeter import CoxeterSystem, Element
from .lattice import (
    FiniteLattice,
    PropertyReport,
    Verdict,
    check_distributive,
    check_extremal,
    check_graded,
    check_semidistributive,
    check_trim,
    find_left_modular_chain,
    is_left_modular_element,
    is_left_modular_element_def,
    join_irreducibles,
    lattice_length,
    meet_irreducibles,
    sublattice_interval,
)
from .sortable import (
    CambrianInterval,
    CoxeterElement,
    cambrian_interval,
    is_sortable,
    sorting_chain,
)
from .systems import system_name
from .weak import ElementLimitExceeded, enumerate_elements, ideal_bits, in_ideal, weak_join, weak_meet

log = logging.getLogger(__name__)

DEFAULT_SEED = 0xCA3B41A4


def _data(name: str) -> dict:
    return json.loads(resources.files("cambrian").joinpath("data", name).read_text(encoding="utf-8"))


def figure_1a_lattice() -> FiniteLattice:
    return FiniteLattice.from_json(_data("figure1a.json"))


def figure_1b_lattice() -> FiniteLattice:
    return FiniteLattice.from_json(_data("figure1b.json"))


def figure_2_data() -> dict:
    """Transcribed nodes (sorting words as printed), covers, thick chain and
    irreducible lists of the affine C3 interval."""
    return _data("figure2.json")


def figure_2_lattice() -> FiniteLattice:
    data = figure_2_data()
    index = {lab: i for i, lab in enumerate(data["labels"])}
    return FiniteLattice(data["labels"], [(index[a], index[b]) for a, b in data["covers"]])


def _instance(system: CoxeterSystem, gamma: CoxeterElement, **extra) -> dict:
    out = {"system": system_name(system), "gamma": gamma.render(system)}
    out.update(extra)
    return out


def graded_implies_distributive(L: FiniteLattice) -> Verdict:
    graded = check_graded(L)
    if not graded.holds:
        return Verdict(True, {"graded": False})
    dist = check_distributive(L)
    return Verdict(dist.holds, {"graded": True, "distributive": dist.witness})


def verify_theorem_trim(
    system: CoxeterSystem,
    gamma: CoxeterElement,
    u: Element,
    v: Element,
    max_elems: int | None = None,
    semidistributive: bool = True,
) -> PropertyReport:
    interval = cambrian_interval(u, v, gamma, max_elems=max_elems)
    L = interval.lattice
    verdicts = {
        "trim": check_trim(L),
        "graded_implies_distributive": graded_implies_distributive(L),
    }
    if semidistributive:
        verdicts["semidistributive"] = check_semidistributive(L)
    inst = _instance(system, gamma, bottom=u.label, top=v.label, size=L.size, length=lattice_length(L))
    return PropertyReport(verdicts, inst)


def verify_left_modular_chain(system: CoxeterSystem, gamma: CoxeterElement, w: Element) -> PropertyReport:
    """The sorting-word prefixes form a maximal left-modular chain of [e, w]."""
    chain = sorting_chain(w, gamma)
    interval = cambrian_interval(system.identity(), w, gamma)
    L = interval.lattice
    idx = [interval.index(x) for x in chain]
    covers = set(L.covers)
    broken = next(([a, b] for a, b in zip(idx, idx[1:]) if (a, b) not in covers), None)
    maximal = broken is None and idx[0] == L.bottom and idx[-1] == L.top
    bad = [i for i in idx if not is_left_modular_element(L, i)]
    bad_def = [i for i in idx if not is_left_modular_element_def(L, i)]
    verdicts = {
        "chain_maximal": Verdict(maximal and len(chain) - 1 == lattice_length(L) == w.length, {"break": broken}),
        "chain_left_modular": Verdict(not bad, {"chain": idx, "not_left_modular": bad}),
        "chain_left_modular_by_definition": Verdict(not bad_def, {"not_left_modular": bad_def}),
    }
    return PropertyReport(verdicts, _instance(system, gamma, top=w.label))


def verify_meet_irreducible_count(system: CoxeterSystem, gamma: CoxeterElement, w: Element) -> PropertyReport:
    L = cambrian_interval(system.identity(), w, gamma).lattice
    nm = len(meet_irreducibles(L))
    nj = len(join_irreducibles(L))
    verdicts = {
        "meet_irreducibles_equal_length": Verdict(nm == w.length, {"meet_irreducibles": nm, "length": w.length}),
        "join_irreducibles_equal_meet_irreducibles": Verdict(nj == nm, {"join_irreducibles": nj}),
    }
    return PropertyReport(verdicts, _instance(system, gamma, top=w.label))


def verify_lemma_covering_join(system: CoxeterSystem, gamma: CoxeterElement, interval: CambrianInterval) -> PropertyReport:
    """For u <= v with s1 not below u but below v, s1 v u covers u; and when
    u is covered by v the join is v itself."""
    s1 = system.generator(gamma.initial)
    L = interval.lattice
    elements = interval.elements
    top = interval.top
    covers = set(L.covers)
    checked = 0
    failure = None
    for i, u in enumerate(elements):
        if in_ideal(s1, u):
            continue
        for j, v in enumerate(elements):
            if not (in_ideal(s1, v) and in_ideal(u, v)):
                continue
            checked += 1
            join = weak_join(s1, u, cap=top.length, bound=top)
            k = elements.index(join) if join in elements else None
            if k is None or (i, k) not in covers or ((i, j) in covers and k != j):
                failure = {"u": u.label, "v": v.label, "join": getattr(join, "label", None)}
                break
        if failure:
            break
    inst = _instance(system, gamma, bottom=interval.bottom.label, top=top.label, pairs=checked)
    return PropertyReport({"covering_join": Verdict(failure is None, failure)}, inst)


def verify_lemma_meet_irreducibles(system: CoxeterSystem, gamma: CoxeterElement, w: Element) -> PropertyReport:
    """Meet-irreducibles of [e, w] avoiding s1 lie above every element
    avoiding s1, and exactly one meet-irreducible avoids s1."""
    s = gamma.initial
    inst = _instance(system, gamma, top=w.label)
    if s not in w.left_descents:
        vacuous = Verdict(True, {"vacuous": True})
        return PropertyReport({"avoiders_below_meet_irreducibles": vacuous, "unique_avoiding_meet_irreducible": vacuous}, inst)
    interval = cambrian_interval(system.identity(), w, gamma)
    L = interval.lattice
    avoid = [i for i, x in enumerate(interval.elements) if s not in x.left_descents]
    mi = set(meet_irreducibles(L))
    avoid_mi = [i for i in avoid if i in mi]
    bad = next(([u, v] for v in avoid_mi for u in avoid if not L.le(u, v)), None)
    labels = [L.labels[i] for i in avoid_mi]
    top_of_avoiders = reduce(L.join, avoid)
    verdicts = {
        "avoiders_below_meet_irreducibles": Verdict(bad is None, {"pair": bad}),
        "unique_avoiding_meet_irreducible": Verdict(
            len(avoid_mi) == 1 and avoid_mi[0] == top_of_avoiders, {"meet_irreducibles": labels}
        ),
    }
    return PropertyReport(verdicts, inst)


def verify_sortable_closure(
    system: CoxeterSystem,
    gamma: CoxeterElement,
    interval: CambrianInterval,
    seed: int = DEFAULT_SEED,
    samples: int = 100,
    max_subset: int = 5,
) -> PropertyReport:
    """Weak-order meets and joins of sortable subsets are sortable and agree
    with the interval lattice."""
    L = interval.lattice
    elements = interval.elements
    cap = interval.top.length
    rng = random.Random(seed)
    subsets = [list(p) for p in itertools.combinations(range(len(elements)), 2)]
    subsets += [[i] for i in range(len(elements))]
    for _ in range(samples):
        k = rng.randint(1, min(max_subset, len(elements)))
        subsets.append(rng.sample(range(len(elements)), k))
    meet_fail = join_fail = None
    for A in subsets:
        xs = [elements[i] for i in A]
        m = reduce(weak_meet, xs)
        if meet_fail is None and (not is_sortable(m, gamma) or m != elements[reduce(L.meet, A)]):
            meet_fail = {"subset": [x.label for x in xs], "meet": m.label}
        j = reduce(lambda a, b: weak_join(a, b, cap), xs)
        if join_fail is None and (not j or not is_sortable(j, gamma) or j != elements[reduce(L.join, A)]):
            join_fail = {"subset": [x.label for x in xs], "join": getattr(j, "label", None)}
    inst = _instance(system, gamma, top=interval.top.label, subsets=len(subsets), seed=seed)
    return PropertyReport(
        {"meets_sortable": Verdict(meet_fail is None, meet_fail), "joins_sortable": Verdict(join_fail is None, join_fail)},
        inst,
    )


def all_coxeter_elements(system: CoxeterSystem) -> list[CoxeterElement]:
    return [CoxeterElement(p) for p in itertools.permutations(range(system.rank))]


def _check_lattice(L: FiniteLattice) -> tuple[bool, bool]:
    """(trim, graded implies distributive) without building witnesses."""
    trim = check_extremal(L).holds and find_left_modular_chain(L) is not None
    return trim, graded_implies_distributive(L).holds


def sweep(
    systems: Sequence[CoxeterSystem],
    gammas: str | Iterable[Sequence[int]] = "all",
    max_len: int = 6,
    max_elems: int = 5000,
    intervals: str = "all",
) -> list[PropertyReport]:
    """Check trimness on [e, w] for every sortable w with l(w) <= max_len.

    With ``intervals="all"`` every subinterval [u, w] is checked as well,
    which covers each closed interval [u, v] with l(v) <= max_len once.
    Intervals whose ideal exceeds ``max_elems`` are recorded as skipped.
    """
    if max_len < 0 or max_elems <= 0:
        raise ValueError("limits must be positive")
    if intervals not in ("all", "principal"):
        raise ValueError(f"intervals must be 'all' or 'principal', not {intervals!r}")
    reports = []
    for system in systems:
        gs = all_coxeter_elements(system) if gammas == "all" else [CoxeterElement(tuple(g)) for g in gammas]
        elements = enumerate_elements(system, max_len)
        log.info("%s: %d elements of length <= %d", system_name(system), len(elements), max_len)
        for gamma in gs:
            for w in elements:
                if not is_sortable(w, gamma):
                    continue
                inst = _instance(system, gamma, top=w.label)
                size = ideal_bits(w).bit_count()
                if size > max_elems:
                    inst.update(status="skipped", reason=f"order ideal has {size} > {max_elems} elements")
                    reports.append(PropertyReport({}, inst))
                    continue
                L = cambrian_interval(system.identity(), w, gamma).lattice
                trim, gid = _check_lattice(L)
                verdicts = {
                    "trim": Verdict(trim),
                    "graded_implies_distributive": Verdict(gid),
                }
                checked = 1
                if intervals == "all":
                    bad_trim = bad_dist = None
                    for a in range(L.size):
                        if a == L.bottom:
                            continue
                        checked += 1
                        t, d = _check_lattice(sublattice_interval(L, a, L.top))
                        if not t and bad_trim is None:
                            bad_trim = L.labels[a]
                        if not d and bad_dist is None:
                            bad_dist = L.labels[a]
                    verdicts["subintervals_trim"] = Verdict(bad_trim is None, {"bottom": bad_trim})
                    verdicts["subintervals_graded_implies_distributive"] = Verdict(bad_dist is None, {"bottom": bad_dist})
                inst.update(status="checked", size=L.size, intervals=checked)
                reports.append(PropertyReport(verdicts, inst))
    return reports


def summarize(reports: Sequence[PropertyReport]) -> dict:
    checked = [r for r in reports if r.instance.get("status") == "checked"]
    return {
        "reports": len(reports),
        "checked": len(checked),
        "skipped": len(reports) - len(checked),
        "intervals": sum(r.instance.get("intervals", 0) for r in checked),
        "failures": sum(1 for r in checked if not r.ok),
    }
