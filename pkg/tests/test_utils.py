# Third Party
import pytest

# This Module
from bcnqkit import utils


@utils.make_dependent()
def first(log):
    log.append("first")
    return ["first"]


@utils.make_dependent(first)
def second(log):
    log.append("second")
    return ["second"]


@utils.make_dependent(first, second)
def third(log):
    log.append("third")
    return ["third"]


def test_dependencies_run_first():
    log = []

    assert third.to_function()(log) == ["first", "second", "third"]
    assert log == ["first", "second", "third"]


def test_reduce_dependencies():
    order = utils.reduce_dependencies(second, third)

    assert [f.__name__ for f in order] == ["first", "second", "third"]


def test_wrapped_function_keeps_its_name():
    assert second.__name__ == "second"


def test_circular_dependencies():
    @utils.make_dependent()
    def left():
        return []

    @utils.make_dependent(left)
    def right():
        return []

    left._dependencies = (right,)

    with pytest.raises(ValueError):
        left.to_function()


def test_check_type():
    assert utils.check_type("12", int) == 12

    with pytest.raises(TypeError):
        utils.check_type("twelve", int)


@pytest.mark.parametrize(
    "string, expected", [("yes", True), ("0", False), ("maybe", None)]
)
def test_string_to_bool(string, expected):
    assert utils.string_to_bool(string, default=None) is expected


def test_max_cells(monkeypatch):
    monkeypatch.delenv(utils.MAX_CELLS_VARIABLE, raising=False)
    assert utils.max_cells() == utils.DEFAULT_MAX_CELLS

    monkeypatch.setenv(utils.MAX_CELLS_VARIABLE, "6")
    assert utils.max_cells() == 6

    monkeypatch.setenv(utils.MAX_CELLS_VARIABLE, "lots")
    with pytest.raises(TypeError):
        utils.max_cells()


def test_boolean_setting(monkeypatch):
    monkeypatch.setenv("BCNQKIT_TEST_FLAG", "no")

    assert utils.get_setting("BCNQKIT_TEST_FLAG", True, bool) is False
