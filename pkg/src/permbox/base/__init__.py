"""
base — нейтральный слой инфраструктуры.

Назначение:
- дать единый транспорт файлов (filestore)
- дать единый API записи результатов (ioapi): txt, csv, json
- держать кэшированный провайдер хранилища по умолчанию (runtime)
"""

from permbox.base import runtime  # noqa: F401
