import pytest
from hypothesis import settings

from cellkit.coxeter import datum_from_type
from cellkit.grouptheory import FiniteGroup, h2_classes, subgroup_classes

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile("ci")


_DATUMS = {}


def shared_datum(label):
    if label not in _DATUMS:
        _DATUMS[label] = datum_from_type(label)
    return _DATUMS[label]


@pytest.fixture(scope="session")
def datum():
    return shared_datum


@pytest.fixture(scope="session")
def S3():
    return FiniteGroup.symmetric(3)


@pytest.fixture(scope="session")
def S4():
    return FiniteGroup.symmetric(4)


@pytest.fixture(scope="session")
def S5():
    return FiniteGroup.symmetric(5)


@pytest.fixture(scope="session")
def klein():
    return FiniteGroup.from_generators([(1, 0, 3, 2), (2, 3, 0, 1)], 4)


@pytest.fixture(scope="session")
def s4_classes(S4):
    return subgroup_classes(S4)


@pytest.fixture(scope="session")
def s5_classes(S5):
    return subgroup_classes(S5)


def subgroup_by_name(classes, name):
    from cellkit.fusioncat import subgroup_name

    for cls in classes:
        if subgroup_name(cls) == name:
            return cls
    raise KeyError(name)


@pytest.fixture(scope="session")
def by_name():
    return subgroup_by_name


@pytest.fixture(scope="session")
def nontrivial_cocycle():
    def get(group):
        result = h2_classes(group)
        assert result.class_count == 2
        return result.representatives[1]

    return get
