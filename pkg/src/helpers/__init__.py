from .file_helper import file_helper

__all__ = [
    "file_helper",
]
