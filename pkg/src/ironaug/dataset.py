"""SemEval-2018 Task 3 Subtask A corpus handling.

The corpus ships as UTF-8 tab-separated files: one header line, then
``index<TAB>label<TAB>tweet`` rows. Tweets may contain tabs themselves, so
everything from the third column onward is rejoined into the text field.
Text is kept raw (no lowercasing, no emoji stripping); any normalization is
the classifier tokenizer's job.

Label 1 means ironic and is the positive class everywhere downstream.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO, Iterator, Union

from .errors import IronAugError

NON_IRONIC = 0
IRONIC = 1


class DecodeError(IronAugError):
    """Source bytes are not valid UTF-8."""


class FormatError(IronAugError):
    """A data line violates the expected column/label format."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyDataset(IronAugError):
    """File contained a header but no data rows."""


class InsufficientExamples(IronAugError):
    """A class has fewer members than the requested sample size."""


@dataclass(frozen=True)
class LabeledExample:
    """One tweet with its binary irony label and corpus index."""

    id: int
    text: str
    label: int


@dataclass(frozen=True)
class DatasetSplit:
    """An ordered, immutable collection of labeled examples."""

    name: str
    examples: tuple[LabeledExample, ...]

    @property
    def class_counts(self) -> dict[int, int]:
        counts = Counter(ex.label for ex in self.examples)
        return {NON_IRONIC: counts.get(NON_IRONIC, 0), IRONIC: counts.get(IRONIC, 0)}

    def __len__(self) -> int:
        return len(self.examples)

    def __iter__(self) -> Iterator[LabeledExample]:
        return iter(self.examples)

    def texts(self) -> list[str]:
        return [ex.text for ex in self.examples]

    def labels(self) -> list[int]:
        return [ex.label for ex in self.examples]

    def ids(self) -> list[int]:
        return [ex.id for ex in self.examples]


@dataclass(frozen=True)
class CountProfile:
    """Expected size and per-class counts for a split."""

    total: int
    ironic: int
    non_ironic: int


# Published sizes of the official distribution: 3,834 training tweets
# (1,911 ironic / 1,923 non-ironic) and 784 test tweets (311 / 473).
CANONICAL_PROFILES = {
    "train": CountProfile(total=3834, ironic=1911, non_ironic=1923),
    "test": CountProfile(total=784, ironic=311, non_ironic=473),
}

Source = Union[bytes, str, Path, BinaryIO]


def _read_bytes(source: Source) -> bytes:
    if isinstance(source, bytes):
        return source
    if isinstance(source, (str, Path)):
        return Path(source).read_bytes()
    return source.read()


def parse_split(source: Source, name: str = "custom") -> DatasetSplit:
    """Parse a tab-separated corpus file into a DatasetSplit.

    ``source`` may be raw bytes, a path, or a binary file object. The first
    line is treated as a header and skipped. File order is preserved.

    Raises DecodeError for non-UTF-8 input, FormatError (with the offending
    line number) for malformed rows, and EmptyDataset when no data rows
    remain after the header.
    """
    raw = _read_bytes(source)
    try:
        decoded = raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise DecodeError(f"source is not valid UTF-8: {exc}") from None

    examples = []
    for lineno, line in enumerate(decoded.split("\n"), start=1):
        line = line.rstrip("\r")
        if lineno == 1 or line == "":
            continue
        cols = line.split("\t")
        if len(cols) < 3:
            raise FormatError(
                f"expected 3 tab-separated columns, found {len(cols)}", lineno
            )
        idx_raw, label_raw = cols[0], cols[1]
        text = "\t".join(cols[2:])
        try:
            idx = int(idx_raw)
        except ValueError:
            raise FormatError(f"non-integer index {idx_raw!r}", lineno) from None
        if idx < 0:
            raise FormatError(f"negative index {idx}", lineno)
        try:
            label = int(label_raw)
        except ValueError:
            raise FormatError(f"non-integer label {label_raw!r}", lineno) from None
        if label not in (NON_IRONIC, IRONIC):
            raise FormatError(f"label {label} outside {{0, 1}}", lineno)
        if not text.strip():
            raise FormatError("empty tweet text", lineno)
        examples.append(LabeledExample(id=idx, text=text, label=label))

    if not examples:
        raise EmptyDataset(f"no data rows in split {name!r}")
    return DatasetSplit(name=name, examples=tuple(examples))


@dataclass
class ValidationReport:
    """Findings from auditing a split; passes iff every list is empty."""

    split_name: str
    duplicate_ids: list[int]
    empty_texts: list[int]
    count_mismatches: list[str]

    @property
    def passed(self) -> bool:
        return not (self.duplicate_ids or self.empty_texts or self.count_mismatches)

    def to_dict(self) -> dict:
        return {
            "split_name": self.split_name,
            "passed": self.passed,
            "duplicate_ids": self.duplicate_ids,
            "empty_texts": self.empty_texts,
            "count_mismatches": self.count_mismatches,
        }


def validate_split(
    split: DatasetSplit, expected: CountProfile | None = None
) -> ValidationReport:
    """Audit a split for duplicate ids, empty texts, and count mismatches.

    Findings are report entries, never exceptions.
    """
    seen: set[int] = set()
    duplicates = []
    empty = []
    for ex in split.examples:
        if ex.id in seen:
            duplicates.append(ex.id)
        seen.add(ex.id)
        if not ex.text.strip():
            empty.append(ex.id)

    mismatches = []
    if expected is not None:
        counts = split.class_counts
        if len(split) != expected.total:
            mismatches.append(f"total: expected {expected.total}, found {len(split)}")
        if counts[IRONIC] != expected.ironic:
            mismatches.append(
                f"ironic: expected {expected.ironic}, found {counts[IRONIC]}"
            )
        if counts[NON_IRONIC] != expected.non_ironic:
            mismatches.append(
                f"non_ironic: expected {expected.non_ironic}, found {counts[NON_IRONIC]}"
            )

    return ValidationReport(
        split_name=split.name,
        duplicate_ids=duplicates,
        empty_texts=empty,
        count_mismatches=mismatches,
    )


def subsample(split: DatasetSplit, n_per_class: int, seed: int) -> DatasetSplit:
    """Draw a class-balanced subsample of 2 * n_per_class examples.

    Sampling is without replacement, deterministic in (split, n_per_class,
    seed), and preserves the relative order of the surviving examples.
    """
    if n_per_class <= 0:
        raise ValueError(f"n_per_class must be positive, got {n_per_class}")
    by_label: dict[int, list[int]] = {NON_IRONIC: [], IRONIC: []}
    for i, ex in enumerate(split.examples):
        by_label.setdefault(ex.label, []).append(i)
    for label in (NON_IRONIC, IRONIC):
        if len(by_label[label]) < n_per_class:
            raise InsufficientExamples(
                f"class {label} has {len(by_label[label])} examples, "
                f"need {n_per_class}"
            )
    rng = random.Random(seed)
    chosen: list[int] = []
    for label in (NON_IRONIC, IRONIC):
        chosen.extend(rng.sample(by_label[label], n_per_class))
    chosen.sort()
    return DatasetSplit(
        name=split.name, examples=tuple(split.examples[i] for i in chosen)
    )


def train_dev_split(
    split: DatasetSplit, dev_fraction: float = 0.1, seed: int = 0
) -> tuple[DatasetSplit, DatasetSplit]:
    """Carve a stratified development split off a training split.

    Each class contributes round(count * dev_fraction) examples (at least 1,
    and always leaving at least 1 behind). Deterministic in the seed.
    """
    if not 0.0 < dev_fraction < 1.0:
        raise ValueError(f"dev_fraction must be in (0, 1), got {dev_fraction}")
    rng = random.Random(seed)
    dev_indices: set[int] = set()
    for label in (NON_IRONIC, IRONIC):
        idxs = [i for i, ex in enumerate(split.examples) if ex.label == label]
        if not idxs:
            continue
        n_dev = min(len(idxs) - 1, max(1, round(len(idxs) * dev_fraction)))
        if n_dev > 0:
            dev_indices.update(rng.sample(idxs, n_dev))
    train_examples = tuple(
        ex for i, ex in enumerate(split.examples) if i not in dev_indices
    )
    dev_examples = tuple(
        ex for i, ex in enumerate(split.examples) if i in dev_indices
    )
    return (
        DatasetSplit(name=split.name, examples=train_examples),
        DatasetSplit(name="dev", examples=dev_examples),
    )


def to_jsonl(split: DatasetSplit) -> str:
    """Serialize a split as JSON Lines, one {id, text, label} object per row."""
    lines = [
        json.dumps({"id": ex.id, "text": ex.text, "label": ex.label},
                   ensure_ascii=False)
        for ex in split.examples
    ]
    return "\n".join(lines) + "\n" if lines else ""


def write_jsonl(split: DatasetSplit, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_jsonl(split), encoding="utf-8")
    return path


def read_jsonl(path: str | Path, name: str | None = None) -> DatasetSplit:
    """Load a split previously written by write_jsonl."""
    path = Path(path)
    examples = []
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            examples.append(
                LabeledExample(id=int(row["id"]), text=str(row["text"]),
                               label=int(row["label"]))
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad JSONL row: {exc}", lineno) from None
    if not examples:
        raise EmptyDataset(f"no rows in {path}")
    return DatasetSplit(name=name or path.stem, examples=tuple(examples))


# --- synthetic corpus -------------------------------------------------------
#
# Desk-scale stand-in for the real tweets: ironic rows carry exaggerated
# positive sentiment about annoyances (plus markers like "#not"), neutral
# rows are flat factual statements. The lexical signal is strong on purpose
# so that miniature randomly-initialized backbones can learn it in a couple
# of epochs.

_IRONIC_TEMPLATES = [
    "oh {exclaim}, {annoyance} again. just what i needed #not",
    "i just love {annoyance}. best {moment} ever",
    "wow, {annoyance}. absolutely thrilled about that",
    "{annoyance} right before {event}? fantastic, really living the dream",
    "so happy to {chore} at {time}. truly blessed",
    "can't wait to {chore} tomorrow, said no one ever",
    "nothing says {moment} like {annoyance}. wonderful",
    "yay, {annoyance}. my favourite thing in the whole world",
    "sure, {annoyance} is fine. everything is totally great #not",
    "what a joy to {chore} while {annoyance}. delightful",
]

_NEUTRAL_TEMPLATES = [
    "heading to {place} for {event} later today",
    "the {thing} is due on {day}, about halfway done",
    "just finished {chore}, making {meal} now",
    "watching {event} at {place} with a few friends",
    "picked up a new {thing} from the library this morning",
    "meeting {person} at {place} on {day} afternoon",
    "the weather near {place} stayed mild for most of the day",
    "bus to {place} runs every twenty minutes on {day}",
    "poster for {event} went up outside {place}",
    "{person} sent over the {thing} before {meal}",
]

_FILLERS = {
    "exclaim": ["brilliant", "perfect", "super", "marvellous"],
    "annoyance": [
        "the wifi dying", "a 6am fire alarm", "another delayed train",
        "a flat tyre", "the printer jamming", "a meeting that could be an email",
        "stepping in a puddle", "my phone battery at 1%",
    ],
    "moment": ["monday morning", "a long weekend", "the holidays", "lunch break"],
    "event": ["the exam", "the deadline", "the match", "the conference call"],
    "chore": ["do the taxes", "clean the oven", "write the appendix",
              "fold laundry", "wake up for physio"],
    "time": ["5am", "six in the morning", "dawn", "midnight"],
    "place": ["the station", "campus", "the park", "the old market"],
    "thing": ["report", "novel", "umbrella", "lab manual", "spreadsheet"],
    "day": ["tuesday", "friday", "the 14th", "saturday"],
    "meal": ["dinner", "soup", "pasta", "breakfast"],
    "person": ["sam", "the landlord", "my sister", "the tutor"],
}


def _fill(template: str, rng: random.Random) -> str:
    out = template
    for key, pool in _FILLERS.items():
        while "{" + key + "}" in out:
            out = out.replace("{" + key + "}", rng.choice(pool), 1)
    return out


def synthesize_split(
    n_ironic: int, n_non_ironic: int, seed: int = 0, name: str = "custom"
) -> DatasetSplit:
    """Generate a deterministic synthetic split with exact class counts."""
    rng = random.Random(seed)
    labels = [IRONIC] * n_ironic + [NON_IRONIC] * n_non_ironic
    rng.shuffle(labels)
    examples = []
    for i, label in enumerate(labels, start=1):
        pool = _IRONIC_TEMPLATES if label == IRONIC else _NEUTRAL_TEMPLATES
        examples.append(
            LabeledExample(id=i, text=_fill(rng.choice(pool), rng), label=label)
        )
    return DatasetSplit(name=name, examples=tuple(examples))


def write_tsv(split: DatasetSplit, path: str | Path) -> Path:
    """Write a split in the official distribution format (header + TSV)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = ["Tweet index\tLabel\tTweet text"]
    rows.extend(f"{ex.id}\t{ex.label}\t{ex.text}" for ex in split.examples)
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return path
