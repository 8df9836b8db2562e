import pytest

import oracles


@pytest.mark.parametrize("key", sorted(oracles.FROZEN))
def test_frozen_value_matches_rederived_oracle(key):
    assert float(oracles.derive()[key]) == pytest.approx(oracles.FROZEN[key], rel=1e-15, abs=1e-15)
