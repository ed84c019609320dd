import pytest

from conftest import GF2, GF3, QQ
from koszul_check.exceptions import InputParseError
from koszul_check.utils.config import Settings, load_settings


def test_defaults():
    settings = Settings()
    assert settings.max_degree == 8
    assert settings.max_syzygy == 6
    assert settings.field is None
    assert settings.oracle_field == GF2
    assert settings.to_dict() == {
        "maxDegree": 8,
        "maxSyzygy": 6,
        "field": None,
        "oracleField": "p2",
        "oracleDegree": 4,
        "budget": 10 ** 6,
    }


def test_merged_accepts_both_spellings():
    settings = Settings().merged({"maxDegree": 5, "max_syzygy": 2, "oracle-field": "p3", "field": "q"})
    assert settings.max_degree == 5
    assert settings.max_syzygy == 2
    assert settings.oracle_field == GF3
    assert settings.field == QQ


def test_none_values_are_skipped():
    settings = Settings(max_degree=5).merged({"max_degree": None, "budget": None})
    assert settings == Settings(max_degree=5)


@pytest.mark.parametrize("overrides, location", [
    ({"maxDegree": True}, "max_degree"),
    ({"budget": -1}, "budget"),
    ({"max_syzygy": "3"}, "max_syzygy"),
    ({"field": "p4"}, "field"),
])
def test_bad_values_are_rejected(overrides, location):
    with pytest.raises(InputParseError) as info:
        Settings().merged(overrides)
    assert info.value.location == location


def test_unknown_setting():
    with pytest.raises(InputParseError, match="unknown setting"):
        Settings().merged({"colour": 3})


def test_load_from_own_table(tmp_path):
    path = tmp_path / "koszul.toml"
    path.write_text("[koszul-check]\nmaxDegree = 4\noracleField = \"p3\"\n", encoding="utf-8")
    settings = load_settings(str(path))
    assert settings.max_degree == 4
    assert settings.oracle_field == GF3


def test_load_from_pyproject(tmp_path):
    path = tmp_path / "pyproject.toml"
    path.write_text("[tool.koszul-check]\nmax_syzygy = 3\n", encoding="utf-8")
    assert load_settings(str(path), base=Settings(max_degree=5)) == Settings(max_degree=5, max_syzygy=3)


def test_file_without_table_gives_base(tmp_path):
    path = tmp_path / "other.toml"
    path.write_text("[something]\nx = 1\n", encoding="utf-8")
    assert load_settings(str(path)) == Settings()
    assert load_settings(None) == Settings()


def test_missing_and_broken_files(tmp_path):
    with pytest.raises(InputParseError, match="does not exist"):
        load_settings(str(tmp_path / "absent.toml"))
    broken = tmp_path / "broken.toml"
    broken.write_text("[koszul-check\n", encoding="utf-8")
    with pytest.raises(InputParseError) as info:
        load_settings(str(broken))
    assert info.value.location == str(broken)
