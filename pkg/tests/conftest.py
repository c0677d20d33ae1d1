import pytest

from nonassoc import (
    coarse_groupoid,
    cyclic_group,
    moufang_loop_12,
    mp_action_left,
    mp_discrete_right,
    pair_quasigroupoid,
    quasigroup_as_quasigroupoid,
)


def z3_translation(a, x):
    return (a + x) % 3


FLIP = [[0, 1], [1, 0]]


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def m12():
    return moufang_loop_12()


@pytest.fixture(scope="session")
def coarse2():
    return coarse_groupoid(2)


def build_family(z2, z3, m12):
    """The matched pairs exercised throughout: both canonical families, one
    genuinely nonassociative member, and the two one-object (quasigroup)
    cases."""
    return {
        "discrete-right pair(z2,2)": mp_discrete_right(pair_quasigroupoid(z2, 2)),
        "discrete-right coarse(2)": mp_discrete_right(coarse_groupoid(2)),
        "discrete-right pair(m12,2)": mp_discrete_right(pair_quasigroupoid(m12, 2)),
        "action-left z2 flip": mp_action_left(z2, 2, FLIP),
        "action-left z3 translation": mp_action_left(z3, 3, z3_translation),
        "one-object z2": mp_discrete_right(quasigroup_as_quasigroupoid(z2)),
        "one-object m12": mp_discrete_right(quasigroup_as_quasigroupoid(m12)),
    }


@pytest.fixture(scope="session")
def mp_family(z2, z3, m12):
    return build_family(z2, z3, m12)
