from __future__ import annotations

import importlib

MODULES = [
    'permbox',
    'permbox.base.runtime',
    'permbox.base.ioapi',
    'permbox.base.filestore',
    'permbox.common.series',
    'permbox.twobyfour.perm_core',
    'permbox.twobyfour.gf_catalog',
    'permbox.twobyfour.enumeration_oracle',
    'permbox.twobyfour.class_sampler',
    'permbox.twobyfour.asymptotics',
    'permbox.twobyfour.run_workbench',
]

def test_core_imports() -> None:
    for module in MODULES:
        importlib.import_module(module)


def test_public_names_resolve() -> None:
    for module in MODULES:
        mod = importlib.import_module(module)
        for name in getattr(mod, '__all__', ()):
            assert hasattr(mod, name), f'{module}.{name}'


def test_console_entry_point_is_callable() -> None:
    from permbox.twobyfour.run_workbench import main

    assert callable(main)
