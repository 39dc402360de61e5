from fractions import Fraction

import pytest
from hypothesis import settings

from h2jordan.fields import FieldSpec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

Q = FieldSpec.rational()
QI = FieldSpec.gaussian()
GF5 = FieldSpec.prime(5)
GF7 = FieldSpec.prime(7)
GF13 = FieldSpec.prime(13)
EPS_FIELDS = [QI, GF5, GF13]
ALL_FIELDS = [Q, QI, GF5, GF7, GF13]


def fields_id(F):
    return F.name


@pytest.fixture(params=ALL_FIELDS, ids=fields_id)
def field(request):
    return request.param


@pytest.fixture(params=EPS_FIELDS, ids=fields_id)
def eps_field(request):
    return request.param


def matmul(a, b):
    """Plain nested-list matrix product, used as an oracle."""
    n, m, k = len(a), len(b), len(b[0])
    return [[sum((a[i][t] * b[t][j] for t in range(m)), Fraction(0)) for j in range(k)]
            for i in range(n)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
