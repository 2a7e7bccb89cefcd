import doctest

import pytest

from satenhance import linalg, wavelet


@pytest.mark.parametrize("module", [linalg, wavelet], ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.attempted > 0 and result.failed == 0
