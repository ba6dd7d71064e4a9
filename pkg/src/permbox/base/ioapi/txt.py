"""
txt — чтение/запись текстовых файлов поверх FileStore.

Основной потребитель — b-file выгрузки ("n a(n)" по строке) и списки перестановок.
Кодировка utf-8, переводы строк всегда "\n": выгрузки сравниваются побайтно.
"""

from __future__ import annotations

from permbox.base.filestore.base import FileStore
from permbox.base.ioapi.bytes import read_bytes, write_bytes


def read_text(path: str, encoding: str = "utf-8", store: FileStore | None = None) -> str:
    """Читает текстовый файл целиком и возвращает строку."""
    data = read_bytes(path, store=store)
    return data.decode(encoding)


def write_text(path: str, text: str, encoding: str = "utf-8", store: FileStore | None = None) -> None:
    """Пишет строку в файл (полностью)."""
    write_bytes(path, str(text).encode(encoding), store=store)


def write_lines(path: str, lines: list[str], encoding: str = "utf-8", store: FileStore | None = None) -> None:
    """Пишет строки через "\n" с завершающим переводом строки."""
    text = "".join(f"{line}\n" for line in lines)
    write_text(path, text, encoding=encoding, store=store)
