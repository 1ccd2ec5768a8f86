from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from eqschubert.polyalg import EPS, X, A, Polynomial, Var

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

variables = st.builds(Var, st.sampled_from([EPS, X, A]), st.integers(1, 4))
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monomials = st.lists(variables, max_size=3).map(
    lambda vs: tuple(sorted({v: sum(1 for w in vs if w == v) for v in vs}.items()))
)


@st.composite
def polynomials(draw, max_terms: int = 4) -> Polynomial:
    terms = draw(st.dictionaries(monomials, coefficients, max_size=max_terms))
    return Polynomial(terms)


def frac(text: str) -> Fraction:
    return Fraction(text)


# -- acceptance summary ----------------------------------------------------------------

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed:
        status = "PASS" if report.passed else "FAIL"
        if name not in _ACCEPTANCE or status == "FAIL":
            _ACCEPTANCE[name] = (status, report.nodeid)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status, _ = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{status}  {name}")
