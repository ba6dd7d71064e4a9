"""
bytes — нижний уровень ioapi: выбор хранилища и передача байтов.

Если store не передан, используется хранилище процесса из runtime.
"""

from __future__ import annotations

from permbox.base.filestore.base import FileStore
from permbox.base.runtime import get_filestore


def _store(store: FileStore | None) -> FileStore:
    return store if store is not None else get_filestore()


def read_bytes(path: str, store: FileStore | None = None) -> bytes:
    return _store(store).read_bytes(path)


def write_bytes(path: str, data: bytes, store: FileStore | None = None) -> None:
    _store(store).write_bytes(path, bytes(data))


def exists(path: str, store: FileStore | None = None) -> bool:
    return _store(store).exists(path)
