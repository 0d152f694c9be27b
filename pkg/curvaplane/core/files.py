import hashlib
import os
import tempfile
from pathlib import Path
from typing import Union

from curvaplane.core.logging import get_logger

logger = get_logger(__name__)

PathLike = Union[str, Path]


def write_text_atomic(path: PathLike, text: str) -> None:
    """Write text to ``path`` through a temporary file and a rename.

    Args:
        path: Destination file
        text: Content to write
    """
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except Exception:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info(f"Wrote {len(text)} characters to {target}")


def sha256_of_file(path: PathLike) -> str:
    """Hex digest of a file's bytes."""
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for block in iter(lambda: handle.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()
