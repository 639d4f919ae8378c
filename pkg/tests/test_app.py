import logging
from app import App, DEFAULT_CONFIG


def test_defaults():
    assert App.config('format') == 'json'
    assert App.config('stable') is False
    assert App.limit('chains') == 7
    assert App.limit('catalan') is None
    assert App.config('missing') is None


def test_load_default_file():
    App.load(DEFAULT_CONFIG)
    assert App.config('json_indent') is None
    assert App.limit('enumerate') == 8
    assert App.limit('permutahedron') == 8


def test_load_merges_limits(tmp_path):
    path = tmp_path / 'park.yml'
    path.write_text("format: 'csv'\njson_indent: 2\nlimits:\n  enumerate: 9\n", encoding='utf-8')
    App.load(path)
    assert App.config('format') == 'csv'
    assert App.config('json_indent') == 2
    assert App.limit('enumerate') == 9
    assert App.limit('hasse') == 9
    assert App.limit('noncrossing') == 10


def test_missing_file_keeps_defaults(tmp_path, caplog):
    with caplog.at_level(logging.ERROR, logger='app'):
        App.load(tmp_path / 'nope.yml')
    assert 'not found' in caplog.text
    assert App.limit('chains') == 7


def test_set_and_reset():
    App.set('stable', True)
    assert App.config('stable') is True
    App.reset()
    assert App.config('stable') is False
