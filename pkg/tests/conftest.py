import time
from contextlib import contextmanager
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

DENS = st.sampled_from([1, 2, 3, 4, 8])


@st.composite
def rationals(draw, bound=6, dens=DENS):
    d = draw(dens)
    return Fraction(draw(st.integers(-bound * d, bound * d)), d)


@st.composite
def nonzero_rationals(draw, bound=6):
    v = draw(rationals(bound))
    return v if v != 0 else Fraction(1, 3)


KS = st.sampled_from([Fraction(1), Fraction(2), Fraction(3, 2), Fraction(1, 2), Fraction(5)])


@st.composite
def oracle_points(draw, bound=6):
    kind = draw(st.sampled_from("AAAAAAI" + "V"))
    if kind == "A":
        return ("A", draw(rationals(bound)), draw(rationals(bound)))
    if kind == "I":
        return ("I", draw(rationals(bound)))
    return ("V",)


@st.composite
def oracle_lines(draw, bound=6):
    kind = draw(st.sampled_from("GGGGGGX" + "L"))
    if kind == "G":
        return ("G", draw(rationals(bound)), draw(rationals(bound)))
    if kind == "X":
        return ("X", draw(rationals(bound)))
    return ("L",)


# -- acceptance reporting -----------------------------------------------------

CRITERIA: dict[int, str] = {}


@contextmanager
def criterion(n: int, title: str, seconds: float):
    """Record a pass/fail line for acceptance criterion ``n`` with its timing."""
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        dt = time.perf_counter() - t0
        note = "" if dt <= seconds else ", over time budget"
        CRITERIA[n] = f"{status} criterion {n}: {title} ({dt:.2f} s, budget {seconds:g} s{note})"
        print("\n" + CRITERIA[n])


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])
