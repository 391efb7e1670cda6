"""Chunk-granular resume state stored as plain text."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Set

_FINGERPRINT_PREFIX = "fingerprint="
_DONE_PREFIX = "done="


class CheckpointError(ValueError):
    """Raised when a checkpoint file cannot be read."""


class CheckpointMismatchError(CheckpointError):
    """Raised when a checkpoint belongs to a different search configuration."""


def atomic_write_text(path: Path, text: str) -> None:
    """Write ``text`` next to ``path`` and rename it into place."""

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    staging = path.with_name(path.name + ".tmp")
    with open(staging, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
        handle.flush()
        os.fsync(handle.fileno())
    os.replace(staging, path)


@dataclass
class Checkpoint:
    """Fingerprint of the configuration plus the ids of completed chunks."""

    path: Path
    fingerprint: str
    done: Set[int] = field(default_factory=set)

    @classmethod
    def load(cls, path: Path) -> "Checkpoint":
        path = Path(path)
        lines = [line.strip() for line in path.read_text(encoding="utf-8").splitlines()]
        lines = [line for line in lines if line]
        if not lines or not lines[0].startswith(_FINGERPRINT_PREFIX):
            raise CheckpointError(f"{path}: first line must be 'fingerprint=<hex>'")
        done = set()
        for number, line in enumerate(lines[1:], start=2):
            if not line.startswith(_DONE_PREFIX):
                raise CheckpointError(f"{path}:{number}: unexpected line {line!r}")
            try:
                done.add(int(line[len(_DONE_PREFIX) :]))
            except ValueError as exc:
                raise CheckpointError(f"{path}:{number}: malformed chunk id") from exc
        return cls(path=path, fingerprint=lines[0][len(_FINGERPRINT_PREFIX) :], done=done)

    @classmethod
    def open(cls, path: Path, fingerprint: str) -> "Checkpoint":
        """Resume from ``path`` or start a fresh checkpoint there.

        Raises:
            CheckpointMismatchError: if ``path`` records another fingerprint.
        """

        path = Path(path)
        if not path.exists():
            checkpoint = cls(path=path, fingerprint=fingerprint)
            checkpoint.save()
            return checkpoint
        checkpoint = cls.load(path)
        if checkpoint.fingerprint != fingerprint:
            raise CheckpointMismatchError(
                f"{path} was written for configuration {checkpoint.fingerprint[:12]}..., "
                f"not {fingerprint[:12]}..."
            )
        return checkpoint

    def render(self) -> str:
        lines = [f"{_FINGERPRINT_PREFIX}{self.fingerprint}"]
        lines.extend(f"{_DONE_PREFIX}{chunk_id}" for chunk_id in sorted(self.done))
        return "\n".join(lines) + "\n"

    def save(self) -> None:
        atomic_write_text(self.path, self.render())

    def is_done(self, chunk_id: int) -> bool:
        return chunk_id in self.done

    def mark_done(self, chunk_id: int) -> None:
        self.done.add(chunk_id)
        self.save()


__all__ = ["Checkpoint", "CheckpointError", "CheckpointMismatchError", "atomic_write_text"]
