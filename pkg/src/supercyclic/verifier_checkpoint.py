"""Plain-text resumable checkpoints for long verification campaigns.

A checkpoint stores how far a campaign got through its deterministic stream
plus any violations found so far.  Resuming replays nothing: the driver
skips the already-examined prefix.  Resuming against a different campaign
or parameter set fails loudly instead of silently mixing runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError
from .reports import escape_value, unescape_value


@dataclass(frozen=True)
class CheckpointConfig:
    path: str | Path
    every: int = 500


@dataclass(frozen=True)
class CheckpointState:
    campaign: str
    key: str
    examined: int
    checked: int
    complete: bool
    violations: tuple[tuple[str, str, str, str], ...]  # check, graph, witness, extra


def save_checkpoint(path: str | Path, state: CheckpointState) -> None:
    lines = [
        "checkpoint=1",
        f"campaign={escape_value(state.campaign)}",
        f"key={escape_value(state.key)}",
        f"examined={state.examined}",
        f"checked={state.checked}",
        f"complete={1 if state.complete else 0}",
        f"violations={len(state.violations)}",
    ]
    for i, (check, graph, witness, extra) in enumerate(state.violations):
        lines.append(f"violation.{i}.check={escape_value(check)}")
        lines.append(f"violation.{i}.graph={escape_value(graph)}")
        lines.append(f"violation.{i}.witness={escape_value(witness)}")
        lines.append(f"violation.{i}.extra={escape_value(extra)}")
    tmp = str(path) + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def load_checkpoint(path: str | Path, campaign: str,
                    key: str) -> CheckpointState | None:
    """Read a checkpoint; None when the file does not exist yet."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except FileNotFoundError:
        return None
    fields: dict[str, str] = {}
    for ln in raw.splitlines():
        if not ln.strip():
            continue
        k, sep, v = ln.partition("=")
        if not sep:
            raise InputError(f"malformed checkpoint line {ln!r} in {path}")
        fields[k] = v
    if fields.get("checkpoint") != "1":
        raise InputError(f"{path} is not a checkpoint file")
    got_campaign = unescape_value(fields.get("campaign", ""))
    got_key = unescape_value(fields.get("key", ""))
    if (got_campaign, got_key) != (campaign, key):
        raise InputError(
            f"checkpoint {path} belongs to campaign {got_campaign!r} with "
            f"parameters {got_key!r}; refusing to resume {campaign!r} "
            f"with {key!r}")
    count = int(fields.get("violations", "0"))
    violations = tuple(
        (unescape_value(fields[f"violation.{i}.check"]),
         unescape_value(fields[f"violation.{i}.graph"]),
         unescape_value(fields[f"violation.{i}.witness"]),
         unescape_value(fields.get(f"violation.{i}.extra", "")))
        for i in range(count))
    return CheckpointState(
        campaign=campaign, key=key,
        examined=int(fields["examined"]),
        checked=int(fields["checked"]),
        complete=fields.get("complete") == "1",
        violations=violations)
