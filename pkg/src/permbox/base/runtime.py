"""
runtime — единственная точка, где определяется хранилище файлов по умолчанию.

Доменный код не создаёт LocalFileStore сам: он либо получает store явно,
либо берёт его отсюда. Переменные окружения не читаются: корень задаётся
вызовом configure_filestore() или через явный store.
"""

from __future__ import annotations

from dataclasses import dataclass

from permbox.base.filestore import FileStore, LocalFileStore


@dataclass(frozen=True)
class Providers:
    filestore: FileStore
    source: str  # "local" | "custom"


_PROVIDERS: Providers | None = None


def _build_local_providers(root: str | None = None) -> Providers:
    """Локальные провайдеры: относительные пути считаются от root (или от cwd)."""
    return Providers(filestore=LocalFileStore(root=root), source="local")


def configure_filestore(store: FileStore | None = None, root: str | None = None) -> Providers:
    """Задаёт хранилище процесса: готовый store или локальный корень."""
    global _PROVIDERS
    if store is not None:
        _PROVIDERS = Providers(filestore=store, source="custom")
    else:
        _PROVIDERS = _build_local_providers(root)
    return _PROVIDERS


def get_providers(force_reload: bool = False) -> Providers:
    """Возвращает активные провайдеры. Кэшируется на время процесса."""
    global _PROVIDERS
    if _PROVIDERS is None or force_reload:
        _PROVIDERS = _build_local_providers()
    return _PROVIDERS


def get_filestore() -> FileStore:
    return get_providers().filestore
