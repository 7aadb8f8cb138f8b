import pytest

from perdet.laurent import evaluate
from perdet.verify import SUITES, TESLER_PENTAGON_POLYNOMIAL, run_suite


@pytest.mark.parametrize("suite", list(SUITES))
def test_suite_passes_at_default_size(suite):
    lines = []
    assert run_suite(suite, SUITES[suite][1], lines.append, timing=False)
    assert lines and all(line.startswith("PASS ") for line in lines)


def test_cokernel_carlitz_3_covers_every_box():
    lines = []
    run_suite("cokernel-carlitz", 3, lines.append, timing=False)
    assert len(lines) == 3 * 4 ** 3


def test_tesler_product_value():
    assert evaluate(TESLER_PENTAGON_POLYNOMIAL, 1) == 12500
