"""
LocalFileStore — FileStore на локальной файловой системе.

Запись атомарна: данные уходят во временный файл рядом с целью и
подменяют её через os.replace. Прерванная выгрузка длинного ряда не
оставляет обрезанный b-file.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from permbox.base.filestore.base import FileStore


class LocalFileStore(FileStore):
    def __init__(self, root: str | None = None):
        # относительные пути считаются от root, без root от cwd
        self._root = Path(root).expanduser().resolve() if root else None

    @property
    def root(self) -> Path | None:
        return self._root

    def resolve(self, path: str) -> Path:
        p = Path(str(path).replace("\\", "/")).expanduser()
        if self._root is not None and not p.is_absolute():
            p = self._root / p
        return p

    def read_bytes(self, path: str) -> bytes:
        return self.resolve(path).read_bytes()

    def write_bytes(self, path: str, data: bytes) -> None:
        target = self.resolve(path)
        if target.is_dir():
            raise ValueError(f"output path is a directory: {path}")
        target.parent.mkdir(parents=True, exist_ok=True)

        fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=target.parent)
        try:
            with os.fdopen(fd, "wb") as f:
                f.write(data)
            os.replace(tmp_name, target)
        except BaseException:
            Path(tmp_name).unlink(missing_ok=True)
            raise

    def exists(self, path: str) -> bool:
        return self.resolve(path).exists()
