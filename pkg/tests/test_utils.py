import pytest

from config import parse_seed_list
from services.errors import DomainError, GraphParseError
from utils.helpers import format_vertex_set, get_setting_or_param, load_graphs


def test_get_setting_or_param_prefers_param():
    assert get_setting_or_param(3, 6, "max_n") == 3


def test_get_setting_or_param_falls_back_to_setting():
    assert get_setting_or_param(None, 6, "max_n") == 6


def test_get_setting_or_param_missing_both():
    with pytest.raises(DomainError) as exc_info:
        get_setting_or_param(None, None, "max_n")
    assert "max_n deve ser fornecido" in str(exc_info.value)


def test_parse_seed_list_range_and_csv():
    assert parse_seed_list("0-19") == list(range(20))
    assert parse_seed_list("3,1, 4") == [3, 1, 4]


def test_load_graphs_rejects_empty_input():
    with pytest.raises(GraphParseError):
        load_graphs("\n# só comentário\n")


def test_format_vertex_set_with_names():
    assert format_vertex_set([0, 2], ["x", "y", "z"]) == "{x,z}"
    assert format_vertex_set([1]) == "{1}"
