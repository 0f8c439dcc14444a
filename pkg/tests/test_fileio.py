import pytest

from actlab.errors import ParseError
from actlab.fileio import (
    catalog_names,
    dump_act,
    dump_monoid,
    load_act,
    load_monoid,
    parse_act,
    parse_monoid,
)


def test_monoid_round_trip(rz3):
    text = "# the three element example\nmonoid 3\n0 1 2\n1 1 2\n\n2 1 2\n"
    M = parse_monoid(text)
    assert M == rz3
    assert parse_monoid(dump_monoid(M)) == M


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("monoid x\n", 1),
    ("monoid 2\n0 1\n", 2),
    ("monoid 2\n0 1\n1 z\n", 3),
    ("monoid 2\n0 1\n1 0\n0 1\n", 4),
    ("# c\nmonoid 2\n1 0\n0 1\n", 4),
])
def test_monoid_errors_have_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_monoid(text)
    assert info.value.line == line


def test_act_files(tmp_path, rz3):
    (tmp_path / "m.monoid").write_text(dump_monoid(rz3))
    (tmp_path / "a.act").write_text("act m.monoid 2\n0 1\n0 1\n0 1\n")
    A = load_act(tmp_path / "a.act")
    assert A.size == 2 and A.monoid == rz3
    (tmp_path / "e.act").write_text("act rz3 0\n")
    assert load_act(tmp_path / "e.act").size == 0
    assert parse_act(dump_act(A, "rz3")) == A


@pytest.mark.parametrize("text", [
    "act rz3\n",
    "act nowhere 1\n0\n0\n0\n",
    "act rz3 1\n0\n0\n",
    "act rz3 0\n0\n",
    "act rz3 2\n1 0\n0 1\n0 1\n",
])
def test_act_errors(text):
    with pytest.raises(ParseError):
        parse_act(text)


def test_catalog_files_load():
    for name in catalog_names():
        load_monoid(__import__("actlab.fileio").fileio.CATALOG_DIR / f"{name}.monoid")
