import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from nmonoid.words import Context, Word

settings.register_profile(
    "default", deadline=None, max_examples=100, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

C12 = Context(1, 2)
C22 = Context(2, 2)


def W(ctx, text):
    return ctx.word(text)


@st.composite
def words(draw, ctx, maxlen=3):
    coords = tuple(
        draw(st.text(alphabet=ctx.letters, max_size=maxlen)) for _ in range(ctx.n)
    )
    return Word(ctx, coords)


@st.composite
def contexts(draw, max_n=3, max_k=3):
    return Context(draw(st.integers(1, max_n)), draw(st.integers(2, max_k)))


@pytest.fixture
def c12():
    return C12


@pytest.fixture
def c22():
    return C22


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
