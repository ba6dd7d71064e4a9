"""
ioapi — единый API чтения/записи форматов поверх FileStore.

Рекомендованный импорт:
    from permbox.base import ioapi as ia
"""

from permbox.base.ioapi import bytes, csv, json, txt

__all__ = ["bytes", "csv", "json", "txt"]
