"""Invertible correspondences between the path families.

Three constructions, each with its exact inverse:

* ``plain_to_ddp`` / ``ddp_to_plain`` — the reflection map.  Every
  below-axis excursion of a plain path is turned into a pair of right
  steps bracketing its flipped interior (an unclosed final excursion
  yields a single right step).  This matches plain paths of length ``n``
  one-to-one with DDPs of length ``n``.
* ``updown_forward`` / ``updown_inverse`` — trades the last up step off
  the axis for a right step and drops the trailing down step, matching
  odd-length DDPs that end in a down step with even-length DDPs that
  contain a right step.
* ``ascent_remove`` / ``ascent_insert`` — deletes a 1-ascent together
  with the down step that must follow it, remembering what preceded it
  (path start, a down step, or a right step).  This pairs (path,
  1-ascent) choices of length ``n + 2`` with (path, slot) choices of
  length ``n``.

``r_pair_decomposition`` is not a map but a counting consequence: it
totals right steps of even length by summing, over all admissible
position pairs, the product of the free-segment counts.

Every function validates its domain eagerly and only ever emits valid
paths, so downstream checks can assume class validity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .formulas import central_binomial, dyck_count
from .paths import PathWord, is_dispersed_dyck, is_plain_path

__all__ = [
    "SlotKind",
    "SlotRef",
    "BijectionRecord",
    "plain_to_ddp",
    "ddp_to_plain",
    "updown_forward",
    "updown_inverse",
    "ascent_remove",
    "ascent_insert",
    "r_pair_decomposition",
]

_FLIP = {"U": "D", "D": "U"}


class SlotKind(Enum):
    """What precedes an insertion point: the path start, a down step, or a right step."""

    START = "Start"
    DOWN_STEP = "DownStep"
    RIGHT_STEP = "RightStep"


@dataclass(frozen=True, slots=True)
class SlotRef:
    """An insertion point in a path; ``index`` is the 0-based step position, None for Start."""

    kind: SlotKind
    index: int | None = None

    def __post_init__(self) -> None:
        if self.kind is SlotKind.START:
            if self.index is not None:
                raise ValueError("a Start slot carries no step index")
        elif self.index is None or self.index < 0:
            raise ValueError(f"a {self.kind.value} slot needs a step index >= 0")

    def to_json_dict(self) -> dict:
        return {"kind": self.kind.value, "index": self.index}


START = SlotRef(SlotKind.START)


@dataclass(frozen=True)
class BijectionRecord:
    """One application of a map: input word, output word, and the slot if one is involved."""

    input: PathWord
    output: PathWord
    slot: SlotRef | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "input": self.input.word,
                "output": self.output.word,
                "slot": self.slot.to_json_dict() if self.slot else None,
            }
        )


def _require_ddp(path: PathWord) -> str:
    if not is_dispersed_dyck(path):
        raise ValueError(f"{path.word!r} is not a dispersed Dyck path")
    return path.word


def plain_to_ddp(path: PathWord) -> PathWord:
    """Reflect a plain path into a dispersed Dyck path of the same length.

    Scanning left to right: a down step leaving height 0 opens a
    below-axis excursion and becomes a right step; the steps strictly
    inside the excursion are flipped (U <-> D); the up step that first
    returns the excursion to height 0 becomes the closing right step.  An
    excursion that never returns flips through the end of the word and
    contributes a single right step.
    """
    if not is_plain_path(path):
        raise ValueError(f"{path.word!r} is not a plain path")
    out = list(path.word)
    n = len(out)
    height = 0
    i = 0
    while i < n:
        ch = out[i]
        if ch == "D" and height == 0:
            # find the step that closes the excursion: first return to height 0
            depth = -1
            close = None
            for j in range(i + 1, n):
                depth += 1 if out[j] == "U" else -1
                if depth == 0:
                    close = j
                    break
            end = n if close is None else close
            out[i] = "R"
            for t in range(i + 1, end):
                out[t] = _FLIP[out[t]]
            if close is not None:
                out[close] = "R"
            i = end + 1
        else:
            height += 1 if ch == "U" else -1
            i += 1
    return PathWord("".join(out))


def ddp_to_plain(path: PathWord) -> PathWord:
    """Exact inverse of :func:`plain_to_ddp`.

    Numbering right steps from 0 left to right, each even-indexed right
    step becomes a down step, each odd-indexed one an up step, and the
    steps strictly between the two (or after a final unpaired even right
    step) are flipped back.
    """
    word = _require_ddp(path)
    out = list(word)
    n = len(out)
    rights = [i for i, ch in enumerate(out) if ch == "R"]
    for pair_start in range(0, len(rights), 2):
        x = rights[pair_start]
        out[x] = "D"
        if pair_start + 1 < len(rights):
            x2 = rights[pair_start + 1]
            out[x2] = "U"
            end = x2
        else:
            end = n
        for t in range(x + 1, end):
            out[t] = _FLIP[out[t]]
    return PathWord("".join(out))


def updown_forward(path: PathWord) -> PathWord:
    """Map an odd-length DDP ending in a down step to an even-length DDP with a right step.

    The greatest-position up step leaving height 0 becomes a right step
    and the trailing down step is deleted; everything after the replaced
    step ran strictly above the axis, so the result is a valid DDP with
    one up step fewer.
    """
    word = _require_ddp(path)
    n = len(word)
    if n % 2 == 0 or not word.endswith("D"):
        raise ValueError(
            f"{word!r} is not an odd-length dispersed Dyck path ending in a down step"
        )
    height = 0
    last_up_from_axis = -1
    for i, ch in enumerate(word):
        if ch == "U":
            if height == 0:
                last_up_from_axis = i
            height += 1
        elif ch == "D":
            height -= 1
    # a DDP ending in a down step left the axis at least once
    return PathWord(word[:last_up_from_axis] + "R" + word[last_up_from_axis + 1 : n - 1])


def updown_inverse(path: PathWord) -> PathWord:
    """Exact inverse of :func:`updown_forward`.

    The greatest-position right step becomes an up step and a trailing
    down step is appended.
    """
    word = _require_ddp(path)
    if len(word) % 2:
        raise ValueError(f"{word!r} has odd length; expected an even-length path")
    last_right = word.rfind("R")
    if last_right < 0:
        raise ValueError(f"{word!r} has no right step to trade for an up step")
    return PathWord(word[:last_right] + "U" + word[last_right + 1 :] + "D")


def ascent_remove(path: PathWord, pos: int) -> tuple[PathWord, SlotRef]:
    """Delete the 1-ascent at ``pos`` and its following down step.

    Returns the shortened path plus the slot describing what precedes the
    deletion point there: ``Start`` when ``pos`` is 0, otherwise the down
    or right step at ``pos - 1`` (same index in the shortened path).
    """
    word = _require_ddp(path)
    n = len(word)
    if not (
        0 <= pos < n
        and word[pos] == "U"
        and (pos == 0 or word[pos - 1] != "U")
        and (pos + 1 == n or word[pos + 1] != "U")
    ):
        raise ValueError(f"position {pos} is not the up step of a 1-ascent in {word!r}")
    # in a DDP a 1-ascent is never last and never precedes a right step
    if pos + 1 == n or word[pos + 1] != "D":
        raise ValueError(f"{word!r}: step {pos + 1} after the 1-ascent is not a down step")
    shortened = PathWord(word[:pos] + word[pos + 2 :])
    if pos == 0:
        return shortened, START
    kind = SlotKind.DOWN_STEP if word[pos - 1] == "D" else SlotKind.RIGHT_STEP
    return shortened, SlotRef(kind, pos - 1)


def ascent_insert(path: PathWord, slot: SlotRef) -> PathWord:
    """Insert an up-down pair right after ``slot``; exact inverse of :func:`ascent_remove`.

    The inserted up step is a 1-ascent of the result because the step in
    front of it is the path start, a down step, or a right step.
    """
    word = _require_ddp(path)
    if slot.kind is SlotKind.START:
        at = 0
    else:
        expected = "D" if slot.kind is SlotKind.DOWN_STEP else "R"
        idx = slot.index
        if idx is None or not 0 <= idx < len(word) or word[idx] != expected:
            raise ValueError(
                f"slot {slot.kind.value}@{idx} does not reference a "
                f"{expected!r} step of {word!r}"
            )
        at = idx + 1
    return PathWord(word[:at] + "UD" + word[at:])


def r_pair_decomposition(n: int) -> int:
    """Right-step total of even length ``n`` via the consecutive-pair decomposition.

    Right steps come in consecutive pairs at positions ``(x, x')`` with
    ``x`` even and ``x'`` odd; the segments before, between and after the
    pair are a free DDP, a free Dyck path and a free DDP.  Summing the
    product of those counts over all admissible pairs and doubling counts
    every right step of every path of length ``n`` exactly once.
    """
    if n < 2 or n % 2:
        raise ValueError(f"pair decomposition needs an even length >= 2, got {n}")
    total = 0
    for x in range(0, n, 2):
        for xp in range(x + 1, n, 2):
            total += (
                central_binomial(x)
                * dyck_count(xp - x - 1)
                * central_binomial(n - xp - 1)
            )
    return 2 * total
