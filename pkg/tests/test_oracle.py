import random

import pytest
from conftest import C12, C22
from hypothesis import given
from hypothesis import strategies as st

from nmonoid.codes import Code, enumeration_cap, one_step_restriction
from nmonoid.errors import EnumerationCapExceeded, LevelTooSmall
from nmonoid.oracle import oracle_compose_check, oracle_equal, truncated_action
from nmonoid.sampling import random_rm0_table
from nmonoid.tables import Table, identity, morphism_equal, normalize, restrict, zero
from nmonoid.words import Context

RM2_TABLE = {"0,0": "e,e", "0,1": "e,0", "1,0": "0,e"}


def as_text(action):
    return {str(x): str(y) for x, y in action.as_dict().items()}


def test_truncated_action_examples():
    assert as_text(truncated_action(identity(C12), 1)) == {"0": "0", "1": "1"}
    f = Table(C12, {"0": "0", "1": "00"})
    assert as_text(truncated_action(f, 1)) == {"0": "0", "1": "00"}
    assert as_text(truncated_action(f, 2)) == {"00": "00", "01": "01", "10": "000", "11": "001"}
    assert len(truncated_action(zero(C22), 2)) == 0
    with pytest.raises(LevelTooSmall):
        truncated_action(Table(C12, {"00": "0"}), 1)
    with enumeration_cap(16):
        with pytest.raises(EnumerationCapExceeded):
            truncated_action(identity(C22), 3)


def test_oracle_equal_examples():
    f = Table(C22, RM2_TABLE)
    assert oracle_equal(f, f)
    r = restrict(f, one_step_restriction(f.domain, C22.word("0,1"), 1))
    assert oracle_equal(f, r)
    assert not oracle_equal(Table(C12, {"0": "0", "1": "10"}), Table(C12, {"0": "0", "1": "0"}))


def test_dense_mode_respects_cap():
    f = Table(C22, {"0000,0000": "e,e"})
    with enumeration_cap(100):
        with pytest.raises(EnumerationCapExceeded):
            oracle_equal(f, f, method="dense")
        assert oracle_equal(f, f)


def test_oracle_compose_check_examples():
    assert oracle_compose_check(identity(C22), identity(C22))
    f1 = restrict(identity(C22), Code(C22, ["0,1", "1,0"]))
    assert oracle_compose_check(Table(C22, RM2_TABLE), f1)
    # A wrong composite is caught.
    assert not oracle_compose_check(Table(C22, RM2_TABLE), f1, identity(C22))


def test_object_dtype_for_long_values():
    # Values past 2**62 in base 10 switch the arrays to Python integers.
    ctx = Context(1, 10)
    long = "9" * 25
    f = Table(ctx, {"1": long, "2": "0"})
    action = truncated_action(f, 1)
    assert action.vals[0].dtype == object
    assert as_text(action) == {"1": long, "2": "0"}


@given(st.integers(0, 10**6))
def test_dense_and_cell_modes_agree(seed):
    rng = random.Random(seed)
    ctx = Context(rng.randint(1, 2), rng.randint(2, 3))
    f = random_rm0_table(rng, ctx, 2)
    g = normalize(f) if rng.random() < 0.5 else random_rm0_table(rng, ctx, 2)
    dense = oracle_equal(f, g, method="dense")
    assert dense == oracle_equal(f, g, method="cells")
    assert dense == morphism_equal(f, g)
