"""Report data model and JSONL corpus I/O.

Interchange format: one UTF-8 JSON object per line with fields ``id``,
``lang`` ("zh" | "en"), ``original``, ``standard``. Loading is strict — the
first malformed record aborts with its line number, and a duplicate id
aborts naming both offending lines. Extra fields in a record are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterator


class Language(str, Enum):
    ZH = "zh"
    EN = "en"


class CorpusError(Exception):
    """Base class for corpus data errors."""


class RecordError(CorpusError):
    """A bad JSONL record; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class MalformedRecord(RecordError):
    pass


class MissingField(RecordError):
    def __init__(self, field: str, line: int | None = None) -> None:
        self.field = field
        super().__init__(f"missing field {field!r}", line)


class EmptyField(RecordError):
    def __init__(self, field: str, line: int | None = None) -> None:
        self.field = field
        super().__init__(f"field {field!r} is empty", line)


class UnknownLanguage(RecordError):
    def __init__(self, tag: object, line: int | None = None) -> None:
        self.tag = tag
        super().__init__(f"unknown language tag {tag!r} (expected 'zh' or 'en')", line)


class DuplicateId(CorpusError):
    def __init__(self, pair_id: str, first_line: int | None = None,
                 second_line: int | None = None) -> None:
        self.pair_id = pair_id
        self.first_line = first_line
        self.second_line = second_line
        where = "" if first_line is None else f" (lines {first_line} and {second_line})"
        super().__init__(f"duplicate id {pair_id!r}{where}")


@dataclass(frozen=True)
class Report:
    """One report text with a language tag."""

    id: str
    lang: Language
    text: str

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("report id must be nonempty")
        if not self.text.strip():
            raise ValueError("report text must be nonempty")
        if "\n" in self.text or "\r" in self.text:
            raise ValueError("report text must not contain newlines")


@dataclass(frozen=True)
class ReportPair:
    """An (original, standard) supervision pair."""

    id: str
    lang: Language
    original: str
    standard: str

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("pair id must be nonempty")
        if not self.original.strip():
            raise ValueError("pair original must be nonempty")
        if not self.standard.strip():
            raise ValueError("pair standard must be nonempty")


_PAIR_FIELDS = ("id", "lang", "original", "standard")


@dataclass(frozen=True)
class Corpus:
    """Ordered sequence of report pairs with unique ids (file order)."""

    pairs: tuple[ReportPair, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(self.pairs))
        seen: set[str] = set()
        for pair in self.pairs:
            if pair.id in seen:
                raise DuplicateId(pair.id)
            seen.add(pair.id)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[ReportPair]:
        return iter(self.pairs)

    def __getitem__(self, index: int) -> ReportPair:
        return self.pairs[index]

    def ids(self) -> tuple[str, ...]:
        return tuple(pair.id for pair in self.pairs)

    def only_lang(self, lang: Language) -> "Corpus":
        return Corpus(tuple(p for p in self.pairs if p.lang is lang))


def parse_pair_record(line: str, line_number: int | None = None) -> ReportPair:
    """Parse one JSONL record into a ReportPair; unknown extra fields ignored."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"invalid JSON: {exc.msg}", line_number) from exc
    if not isinstance(obj, dict):
        raise MalformedRecord("record is not a JSON object", line_number)
    for field in _PAIR_FIELDS:
        if field not in obj:
            raise MissingField(field, line_number)
        if not isinstance(obj[field], str):
            raise MalformedRecord(f"field {field!r} is not a string", line_number)
    try:
        lang = Language(obj["lang"])
    except ValueError:
        raise UnknownLanguage(obj["lang"], line_number) from None
    for field in ("id", "original", "standard"):
        if not obj[field].strip():
            raise EmptyField(field, line_number)
    return ReportPair(id=obj["id"], lang=lang,
                      original=obj["original"], standard=obj["standard"])


def dumps_pair_record(pair: ReportPair) -> str:
    """Canonical one-line JSON for a pair (fixed field order, UTF-8 verbatim)."""
    return json.dumps(
        {"id": pair.id, "lang": pair.lang.value,
         "original": pair.original, "standard": pair.standard},
        ensure_ascii=False, separators=(",", ":"),
    )


def load_corpus(path) -> Corpus:
    """Load a JSONL corpus, preserving file order. Blank lines are skipped."""
    pairs: list[ReportPair] = []
    seen: dict[str, int] = {}
    with open(path, encoding="utf-8") as fh:
        for number, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            pair = parse_pair_record(line, line_number=number)
            if pair.id in seen:
                raise DuplicateId(pair.id, seen[pair.id], number)
            seen[pair.id] = number
            pairs.append(pair)
    return Corpus(tuple(pairs))


def write_corpus(corpus: Corpus, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for pair in corpus:
            fh.write(dumps_pair_record(pair))
            fh.write("\n")


def is_cjk_ideograph(ch: str) -> bool:
    """True for CJK Unified Ideographs (URO, Extension A, and SIP/TIP planes)."""
    cp = ord(ch)
    return (0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF
            or 0x20000 <= cp <= 0x2EBEF or 0x30000 <= cp <= 0x3134A)


def detect_language(text: str) -> Language:
    """Classify text as zh when the CJK share of alphabetic codepoints exceeds 0.3.

    Clinical Chinese reports embed Latin abbreviations (OD/OS, C/D), so a
    simple majority vote over ideographs is robust. Deterministic and total
    on nonempty strings.
    """
    if not text:
        raise ValueError("cannot detect language of empty text")
    alphabetic = 0
    cjk = 0
    for ch in text:
        if ch.isalpha():
            alphabetic += 1
            if is_cjk_ideograph(ch):
                cjk += 1
    if alphabetic == 0:
        return Language.EN
    return Language.ZH if cjk / alphabetic > 0.3 else Language.EN
