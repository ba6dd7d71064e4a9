"""
csv — чтение/запись CSV в DataFrame поверх FileStore.

Коэффициенты рядов переполняют int64 уже около n = 33, поэтому
числовые колонки пишутся строками (dtype=object), без научной нотации.
"""

from __future__ import annotations

from io import StringIO

import pandas as pd

from permbox.base.filestore.base import FileStore
from permbox.base.ioapi.bytes import read_bytes, write_bytes


def read_df(path: str, store: FileStore | None = None, encoding: str = "utf-8", **kwargs) -> pd.DataFrame:
    data = read_bytes(path, store=store)
    text = data.decode(encoding)
    return pd.read_csv(StringIO(text), dtype=str, **kwargs)


def df_to_text(df: pd.DataFrame, **kwargs) -> str:
    """Рендерит DataFrame в CSV-текст с "\n" как разделителем строк."""
    sio = StringIO()
    df.to_csv(sio, index=False, lineterminator="\n", **kwargs)
    return sio.getvalue()


def write_df(path: str, df: pd.DataFrame, store: FileStore | None = None, encoding: str = "utf-8", **kwargs) -> None:
    write_bytes(path, df_to_text(df, **kwargs).encode(encoding), store=store)
