"""One test per acceptance criterion; each records a PASS/FAIL line.

Run with ``pytest -v tests/test_acceptance.py``; the lines are gathered in
an "acceptance criteria" section of the terminal summary.
"""

import time

import pytest

from poptamari import sortable as srt
from poptamari import weak_order as wo
from poptamari.corpus import IRREGULAR, corpus
from poptamari.nu_tamari import m_tamari_path
from poptamari.verify import SUITES, CheckResult


def _run(suite: str) -> tuple[CheckResult, float]:
    start = time.perf_counter()
    res = SUITES[suite]()
    return res, time.perf_counter() - start


def _report(record, number: int, title: str, ok: bool, seconds: float, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" [{detail}]" if detail else ""
    record(f"{status} criterion {number}: {title} ({seconds:.2f}s){suffix}")


def _check(record, number: int, title: str, suite: str, limit: float | None = None, extra=None):
    res, seconds = _run(suite)
    problems = list(res.failures)
    if extra is not None:
        problems += extra()
    if limit is not None and seconds >= limit:
        problems.append(f"took {seconds:.1f}s, limit {limit}s")
    ok = res.passed and not problems
    _report(record, number, title, ok, seconds, "; ".join(problems[:3]) or f"{res.checked} checks")
    assert ok, problems


def test_pop_on_312_avoiders(acceptance_report):
    _check(acceptance_report, 1, "Pop on Av_n(312) is projected pop-stack-sort, n <= 6", "pop-av312", limit=10)


def test_max_orbits_on_312_avoiders(acceptance_report):
    def literal():
        got = [len(wo.max_orbit_permutations(n)) for n in range(2, 8)]
        return [] if got == [1, 1, 2, 5, 14, 42] else [f"counts {got}"]

    _check(acceptance_report, 2, "max orbit size n, suffix n1, Catalan counts", "max-orbit-perms", extra=literal)


def test_quotient_pop(acceptance_report):
    _check(acceptance_report, 3, "quotient Pop for sylvester on S_n, n <= 5; diamond counterexample", "quotient-pop")


def test_pop_trivial_families(acceptance_report):
    _check(acceptance_report, 4, "Boolean and partition lattices Pop-trivial, chains not", "pop-trivial")


def test_bracket_bijection(acceptance_report):
    def corpus_shape():
        nus = set(corpus())
        problems = []
        wanted = {m_tamari_path(1, n) for n in range(1, 7)} | {m_tamari_path(2, n) for n in range(1, 5)}
        if not wanted <= nus:
            problems.append("m-Tamari paths missing from corpus")
        m_tam = {m_tamari_path(m, n) for m in range(1, 4) for n in range(0, 7)}
        irregular = [nu for nu in IRREGULAR if len(nu) <= 12 and nu not in m_tam]
        if len(set(irregular)) < 20:
            problems.append(f"only {len(irregular)} irregular base paths")
        return problems

    _check(acceptance_report, 5, "path/bracket round trip and componentwise meet on the corpus",
           "bracket-bijection", extra=corpus_shape)


def test_pop_bracket(acceptance_report):
    _check(acceptance_report, 6, "bracket Pop equals meet of covers from the Hasse diagram", "pop-bracket")


def test_theta(acceptance_report):
    _check(acceptance_report, 7, "theta equals exhaustive max orbit; seven-vector trajectory", "theta")


def test_max_orbit_count(acceptance_report):
    _check(acceptance_report, 8, "max-orbit characterization, orbit test and closed count agree",
           "max-orbit-count", limit=60)


def test_primitive_count(acceptance_report):
    _check(acceptance_report, 9, "primitive ballot paths, generating tree, |U| = |Y|", "primitive-count")


def test_one_sortable(acceptance_report):
    _check(acceptance_report, 10, "1-sortable count 2^|A|, alpha and beta inverse", "one-sortable")


def test_two_sortable(acceptance_report):
    def literal():
        problems = []
        tam = [len(srt.enumerate_t_sortable_brute(m_tamari_path(1, n), 2)) for n in range(1, 6)]
        if tam != [1, 2, 5, 12, 29]:
            problems.append(f"Tamari counts {tam}")
        for m in (2, 3):
            got = [len(srt.enumerate_t_sortable_brute(m_tamari_path(m, n), 2)) for n in range(1, 5)]
            if got != [1, 3, 10, 33]:
                problems.append(f"m={m} counts {got}")
        return problems

    start = time.perf_counter()
    _check(acceptance_report, 11, "2-sortable recursion, closed forms, Pell and m >= 2 counts",
           "two-sortable", limit=120, extra=literal)
    assert time.perf_counter() - start < 120


def test_property_suites(acceptance_report):
    _check(acceptance_report, 12, "meet projection, Pop bounds, unimpeded persistence, m-Tamari bounds",
           "properties")


@pytest.mark.parametrize("suite", ["m-independence"])
def test_supporting_suites_pass(suite):
    res, _ = _run(suite)
    assert res.passed, res.failures
