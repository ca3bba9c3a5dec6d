"""Writing report artifacts"""

import logging
import os
import sys
from datetime import datetime, timedelta
from pathlib import Path
from typing import List, Optional

log = logging.getLogger("assoc")

# names of the files written into a directory, one per line
MANIFEST = ".assoc-artifacts"


def output_dir() -> Path:
    return Path(os.getenv("ASSOC_OUTPUT_DIR", "."))


def resolve_output(path: Optional[str]) -> Optional[Path]:
    """Bare file names land in ASSOC_OUTPUT_DIR; anything with a directory is kept"""
    if not path or path == "-":
        return None
    p = Path(path)
    if p.parent == Path("."):
        p = output_dir() / p
    return p


def read_manifest(directory: Path) -> List[str]:
    manifest = directory / MANIFEST
    if not manifest.is_file():
        return []
    return [line for line in manifest.read_text(encoding="utf-8").splitlines() if line]


def _write_manifest(directory: Path, names: List[str]) -> None:
    manifest = directory / MANIFEST
    if names:
        manifest.write_text("".join(f"{name}\n" for name in names), encoding="utf-8")
    elif manifest.exists():
        manifest.unlink()


def write_artifact(text: str, path: Optional[str] = None) -> Optional[Path]:
    """Write to `path`, or to stdout when no path is given; written files join the manifest"""
    if not text.endswith("\n"):
        text += "\n"
    target = resolve_output(path)
    if target is None:
        sys.stdout.write(text)
        return None
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    names = read_manifest(target.parent)
    if target.name not in names:
        _write_manifest(target.parent, names + [target.name])
    log.info(f"💾 Wrote {target} ({len(text)} bytes)")
    return target


def cleanup_stale_artifacts(directory: Path, max_age_minutes: int = 24 * 60) -> int:
    """Remove files this tool wrote into `directory` that are older than max_age_minutes"""
    names = read_manifest(directory)
    if not names:
        return 0
    cutoff = datetime.now() - timedelta(minutes=max_age_minutes)

    cleaned, kept = 0, []
    for name in names:
        file = directory / name
        if not file.is_file():
            continue
        if datetime.fromtimestamp(file.stat().st_mtime) >= cutoff:
            kept.append(name)
            continue
        try:
            file.unlink()
            cleaned += 1
            log.info(f"🧹 Cleaned stale artifact: {name}")
        except OSError as e:
            kept.append(name)
            log.warning(f"Failed to clean {name}: {e}")
    _write_manifest(directory, kept)
    return cleaned
