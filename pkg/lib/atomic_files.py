"""
Atomic file output for experiment records.
Writes go to a temp file in the target directory, then replace the target.
"""
import os
import tempfile
from pathlib import Path
from typing import Union


def resolve_output_path(path: Union[str, Path]) -> Path:
    """
    Resolve an output path, anchoring relative paths at settings.output_dir.

    Args:
        path: Absolute or relative output path

    Returns:
        Path: Absolute target path
    """
    # Import here to avoid circular dependency
    from api.config import settings

    path = Path(path)
    if not path.is_absolute():
        path = Path(settings.output_dir) / path
    return path.resolve()


def write_text_atomic(path: Union[str, Path], text: str) -> Path:
    """
    Write text so readers see either the old file or the complete new one.

    Args:
        path: Target path (parent directories are created)
        text: File contents

    Returns:
        Path: The path written
    """
    target = resolve_output_path(path)
    target.parent.mkdir(parents=True, exist_ok=True)

    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target
