import pytest

from cambrian.coxeter import build_system, identity
from cambrian.lattice import is_trim, join_irreducibles, lattice_length, meet_irreducibles
from cambrian.sortable import cambrian_interval, coxeter_element, is_sortable, sorting_label
from cambrian.systems import affine_c3, dihedral, type_a, type_b3, type_h3
from cambrian.verify import (
    all_coxeter_elements,
    figure_1a_lattice,
    figure_1b_lattice,
    figure_2_data,
    summarize,
    sweep,
    verify_lemma_covering_join,
    verify_lemma_meet_irreducibles,
    verify_left_modular_chain,
    verify_meet_irreducible_count,
    verify_sortable_closure,
    verify_theorem_trim,
)
from cambrian.weak import enumerate_elements, weak_join
from conftest import SEED


@pytest.fixture(scope="module")
def fig2_interval(c3, c3_gamma, fig2_top):
    return cambrian_interval(identity(c3), fig2_top, c3_gamma)


@pytest.fixture(scope="module")
def a2_gamma(a2):
    return coxeter_element(a2, "s1 s2")


class TestTheoremTrim:
    def test_figure_2(self, c3, c3_gamma, fig2_top):
        report = verify_theorem_trim(c3, c3_gamma, identity(c3), fig2_top)
        assert report.ok
        assert report.instance["size"] == 26 and report.instance["length"] == 10
        assert report["graded_implies_distributive"].witness == {"graded": False}

    def test_point(self, c3, c3_gamma):
        w = c3.element("s0 s2 s3 s2")
        assert verify_theorem_trim(c3, c3_gamma, w, w).ok

    def test_pentagon(self, a2, a2_gamma):
        report = verify_theorem_trim(a2, a2_gamma, identity(a2), a2.element("s1 s2 s1"))
        assert report.ok and report.instance["size"] == 5


class TestLeftModularChain:
    def test_figure_2(self, c3, c3_gamma, fig2_top):
        report = verify_left_modular_chain(c3, c3_gamma, fig2_top)
        assert report.ok
        assert len(report["chain_left_modular"].witness["chain"]) == 11

    def test_generator(self, c3, c3_gamma):
        assert verify_left_modular_chain(c3, c3_gamma, c3.element("s1")).ok

    def test_pentagon(self, a2, a2_gamma):
        report = verify_left_modular_chain(a2, a2_gamma, a2.element("s1 s2 s1"))
        assert report.ok
        assert report["chain_left_modular"].witness["chain"] == [0, 1, 3, 4]


class TestMeetIrreducibleCount:
    @pytest.mark.parametrize("word, count", [("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3", 10), ("", 0)])
    def test_c3(self, c3, c3_gamma, word, count):
        report = verify_meet_irreducible_count(c3, c3_gamma, c3.element(word))
        assert report.ok and report["meet_irreducibles_equal_length"].witness["meet_irreducibles"] == count

    def test_a2_chain(self, a2, a2_gamma):
        # s2 is not a prefix of s1 s2, so the interval is a 3-chain
        interval = cambrian_interval(identity(a2), a2.element("s1 s2"), a2_gamma)
        assert [x.label for x in interval] == ["ε", "s1", "s1 s2"]
        report = verify_meet_irreducible_count(a2, a2_gamma, a2.element("s1 s2"))
        assert report.ok and report["meet_irreducibles_equal_length"].witness["meet_irreducibles"] == 2


class TestCoveringJoin:
    def test_figure_2(self, c3, c3_gamma, fig2_interval):
        report = verify_lemma_covering_join(c3, c3_gamma, fig2_interval)
        assert report.ok and report.instance["pairs"] > 0
        L = fig2_interval.lattice
        u = c3.element("s2 s3")
        j = weak_join(c3.element("s0"), u, 10)
        assert j == c3.element("s0 s2 s3")
        assert (fig2_interval.index(u), fig2_interval.index(j)) in set(L.covers)

    def test_trivial(self, c3):
        assert weak_join(c3.element("s0"), identity(c3), 1) == c3.element("s0")

    def test_pentagon(self, a2, a2_gamma):
        interval = cambrian_interval(identity(a2), a2.element("s1 s2 s1"), a2_gamma)
        report = verify_lemma_covering_join(a2, a2_gamma, interval)
        assert report.ok and report.instance["pairs"] > 0


class TestMeetIrreducibleLemma:
    def test_figure_2(self, c3, c3_gamma, fig2_top):
        report = verify_lemma_meet_irreducibles(c3, c3_gamma, fig2_top)
        assert report.ok
        assert report["unique_avoiding_meet_irreducible"].witness["meet_irreducibles"] == \
            figure_2_data()["meet_irreducibles_not_above_initial"] == ["s2 s3 s2 s3"]

    def test_pentagon(self, a2, a2_gamma):
        report = verify_lemma_meet_irreducibles(a2, a2_gamma, a2.element("s1 s2 s1"))
        assert report.ok
        assert report["unique_avoiding_meet_irreducible"].witness["meet_irreducibles"] == ["s2"]

    def test_rank_one(self):
        system = build_system([[1]])
        gamma = coxeter_element(system)
        assert verify_lemma_meet_irreducibles(system, gamma, system.generator(0)).ok

    def test_vacuous_without_initial_descent(self, c3, c3_gamma):
        report = verify_lemma_meet_irreducibles(c3, c3_gamma, c3.element("s2 s3"))
        assert report.ok and report["unique_avoiding_meet_irreducible"].witness == {"vacuous": True}


class TestSortableClosure:
    def test_figure_2(self, c3, c3_gamma, fig2_interval):
        report = verify_sortable_closure(c3, c3_gamma, fig2_interval, seed=SEED)
        assert report.ok and report.instance["subsets"] > 100

    def test_examples(self, c3, c3_gamma):
        j = weak_join(c3.element("s0 s1"), c3.element("s2 s3"), 10)
        # s2 s3 is not below s0 s1 s2 s3, so the join is longer
        assert sorting_label(j, c3_gamma) == "s0 s1 s2 s3 s1 s2 s3"
        assert is_sortable(j, c3_gamma) and sorting_label(j, c3_gamma) in figure_2_data()["labels"]
        atoms = weak_join(weak_join(c3.element("s0"), c3.element("s2"), 10), c3.element("s3"), 10)
        assert is_sortable(atoms, c3_gamma)
        assert sorting_label(atoms, c3_gamma) in figure_2_data()["labels"]

    def test_deterministic(self, c3, c3_gamma, fig2_interval):
        a = verify_sortable_closure(c3, c3_gamma, fig2_interval, seed=SEED).to_json()
        b = verify_sortable_closure(c3, c3_gamma, fig2_interval, seed=SEED).to_json()
        assert a == b


class TestFigures:
    def test_figure_1(self):
        a, b = figure_1a_lattice(), figure_1b_lattice()
        assert (a.size, lattice_length(a), is_trim(a)) == (7, 4, True)
        assert (b.size, lattice_length(b), is_trim(b)) == (6, 3, False)

    def test_figure_2_irreducible_lists(self, fig2_interval):
        data = figure_2_data()
        L = fig2_interval.lattice
        assert len(data["join_irreducibles"]) == len(data["meet_irreducibles"]) == 10
        assert {L.labels[x] for x in join_irreducibles(L)} == set(data["join_irreducibles"])
        assert {L.labels[x] for x in meet_irreducibles(L)} == set(data["meet_irreducibles"])


class TestSweep:
    def test_a3(self):
        system = type_a(3)
        reports = sweep([system], max_len=6)
        summary = summarize(reports)
        assert summary["failures"] == 0 and summary["skipped"] == 0
        assert summary["checked"] == 6 * 14
        w0 = system.element("s1 s2 s1 s3 s2 s1")
        for gamma in all_coxeter_elements(system):
            interval = cambrian_interval(identity(system), w0, gamma)
            assert len(interval) == 14 and is_trim(interval.lattice)

    @pytest.mark.parametrize("m", range(2, 9))
    def test_dihedral(self, m):
        system = dihedral(m)
        reports = sweep([system], max_len=m)
        assert summarize(reports)["failures"] == 0
        # every sortable element is reached once per Coxeter element
        assert len(reports) == 2 * (m + 2)

    def test_rank_one(self):
        system = build_system([[1]])
        reports = sweep([system], max_len=3)
        assert len(reports) == 2 and all(r.ok for r in reports)

    def test_max_len_zero(self, c3):
        reports = sweep([c3], max_len=0)
        assert len(reports) == 24 and all(r.ok and r.instance["size"] == 1 for r in reports)

    def test_skips_are_recorded(self, c3):
        reports = sweep([c3], gammas=[(0, 1, 2, 3)], max_len=6, max_elems=10)
        summary = summarize(reports)
        assert summary["skipped"] > 0 and summary["failures"] == 0
        assert all("reason" in r.instance for r in reports if r.instance["status"] == "skipped")

    def test_bad_arguments(self, c3):
        with pytest.raises(ValueError):
            sweep([c3], max_len=-1)
        with pytest.raises(ValueError):
            sweep([c3], intervals="some")


FIXTURE_SYSTEMS = [
    ("A2", lambda: type_a(2), 3),
    ("A3", lambda: type_a(3), 6),
    ("B3", type_b3, 9),
    ("H3", type_h3, 8),
    ("I2(5)", lambda: dihedral(5), 5),
    ("I2(inf)", lambda: dihedral(0), 8),
    ("C3", affine_c3, 6),
]


@pytest.mark.parametrize("name, make, max_len", FIXTURE_SYSTEMS, ids=[f[0] for f in FIXTURE_SYSTEMS])
def test_lemmas_on_fixture_intervals(name, make, max_len):
    system = make()
    elements = enumerate_elements(system, max_len)
    for gamma in all_coxeter_elements(system):
        for w in elements:
            if not is_sortable(w, gamma):
                continue
            interval = cambrian_interval(identity(system), w, gamma)
            for report in (
                verify_theorem_trim(system, gamma, identity(system), w),
                verify_left_modular_chain(system, gamma, w),
                verify_meet_irreducible_count(system, gamma, w),
                verify_lemma_covering_join(system, gamma, interval),
                verify_lemma_meet_irreducibles(system, gamma, w),
            ):
                assert report.ok, report.to_json()


@pytest.mark.parametrize("name, make, max_len", FIXTURE_SYSTEMS, ids=[f[0] for f in FIXTURE_SYSTEMS])
def test_sortable_closure_on_fixture_intervals(name, make, max_len):
    system = make()
    elements = [w for w in enumerate_elements(system, max_len) if w.length == max_len]
    for gamma in all_coxeter_elements(system)[:2]:
        for w in elements:
            if is_sortable(w, gamma):
                interval = cambrian_interval(identity(system), w, gamma)
                report = verify_sortable_closure(system, gamma, interval, seed=SEED, samples=20)
                assert report.ok, report.to_json()
