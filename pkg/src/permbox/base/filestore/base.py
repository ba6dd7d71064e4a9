"""
FileStore — интерфейс транспорта файлов для выгрузок стенда.

Стенд только пишет результаты (b-file, csv, json, списки перестановок)
и читает их обратно в тестах, поэтому интерфейс сведён к трём операциям.
Форматы живут выше, в ioapi.
"""

from __future__ import annotations

from typing import Protocol


class FileStore(Protocol):
    def read_bytes(self, path: str) -> bytes:
        ...

    def write_bytes(self, path: str, data: bytes) -> None:
        """Записывает файл целиком; недостающие каталоги создаются."""
        ...

    def exists(self, path: str) -> bool:
        ...
