from __future__ import annotations

from permbox.base.filestore import LocalFileStore
from permbox.base.ioapi.csv import read_df, write_df
from permbox.base.ioapi.json import read_json, write_json
from permbox.base.ioapi.txt import read_text, write_lines
from permbox.base.runtime import configure_filestore, get_providers


def test_runtime_providers_local_default() -> None:
    providers = get_providers(force_reload=True)
    assert providers.source == 'local'
    assert providers.filestore is not None


def test_configure_custom_store(tmp_path) -> None:
    store = LocalFileStore(root=str(tmp_path))
    providers = configure_filestore(store=store)
    try:
        assert providers.source == 'custom'
        assert get_providers().filestore is store
    finally:
        get_providers(force_reload=True)


def test_ioapi_roundtrip_through_store(tmp_path) -> None:
    import pandas as pd

    store = LocalFileStore(root=str(tmp_path))
    write_lines('out/a.txt', ['0 1', '1 1'], store=store)
    assert read_text('out/a.txt', store=store) == '0 1\n1 1\n'
    assert store.exists('out/a.txt')

    write_json('meta.json', {'id': 'P1', 'value': '92416'}, store=store)
    assert read_json('meta.json', store=store) == {'id': 'P1', 'value': '92416'}

    big = str(2**80)
    write_df('t.csv', pd.DataFrame({'n': ['0'], 'value': [big]}, dtype=object), store=store)
    df = read_df('t.csv', store=store)
    assert list(df.columns) == ['n', 'value']
    assert df.loc[0, 'value'] == big


def test_local_store_write_leaves_no_temp_files(tmp_path) -> None:
    store = LocalFileStore(root=str(tmp_path))
    store.write_bytes('bfiles/p1.txt', b'0 1\n')
    store.write_bytes('bfiles/p1.txt', b'0 1\n1 1\n')
    assert store.read_bytes('bfiles/p1.txt') == b'0 1\n1 1\n'
    assert sorted(p.name for p in (tmp_path / 'bfiles').iterdir()) == ['p1.txt']


def test_local_store_rejects_directory_target(tmp_path) -> None:
    import pytest

    (tmp_path / 'out').mkdir()
    store = LocalFileStore(root=str(tmp_path))
    with pytest.raises(ValueError, match='directory'):
        store.write_bytes('out', b'x')


def test_ioapi_default_store_uses_configured_root(store_root) -> None:
    write_lines('b/p2.txt', ['0 1'])
    assert (store_root / 'b' / 'p2.txt').read_text(encoding='utf-8') == '0 1\n'
    assert read_text('b/p2.txt') == '0 1\n'
