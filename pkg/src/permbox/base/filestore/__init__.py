from permbox.base.filestore.base import FileStore
from permbox.base.filestore.local import LocalFileStore

__all__ = ["FileStore", "LocalFileStore"]
