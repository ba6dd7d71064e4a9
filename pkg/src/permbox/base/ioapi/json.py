"""
json — запись/чтение JSON поверх FileStore.

Большие целые и рациональные числа передаются строками, поэтому
сериализация детерминирована (sort_keys не используется: порядок полей задаёт вызывающий).
"""

from __future__ import annotations

import json as _json
from typing import Any

from permbox.base.filestore.base import FileStore
from permbox.base.ioapi.bytes import read_bytes, write_bytes


def dumps(obj: Any) -> str:
    """Стабильный JSON-текст с отступом 2 и завершающим переводом строки."""
    return _json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def read_json(path: str, store: FileStore | None = None, encoding: str = "utf-8") -> Any:
    return _json.loads(read_bytes(path, store=store).decode(encoding))


def write_json(path: str, obj: Any, store: FileStore | None = None, encoding: str = "utf-8") -> None:
    write_bytes(path, dumps(obj).encode(encoding), store=store)
