"""Append-only JSONL store of verified (r,c)-graphs keyed by canonical form."""

from __future__ import annotations

import csv
import io
import json
import logging
import threading
from dataclasses import asdict, dataclass, field, fields
from importlib import resources
from pathlib import Path
from typing import Iterable

from .canon import canonical_form
from .graph import GraphError, SmallGraph, rc_signature
from .graph6 import g6_decode
from .planarity import is_planar

log = logging.getLogger(__name__)

CSV_COLUMNS = ["id", "g6", "n", "r", "c", "planar", "circulant_spec", "constant_link", "source", "certified_smallest"]


@dataclass(frozen=True)
class CatalogRecord:
    id: str
    g6: str
    n: int
    r: int
    c: int
    planar: bool
    circulant_spec: str | None = None
    constant_link: str | None = None
    source: str = ""
    certified_smallest: bool = False

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_dict(cls, data: dict) -> CatalogRecord:
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})


@dataclass
class IngestReport:
    accepted: int = 0
    rejected: int = 0
    duplicates: int = 0
    errors: list[str] = field(default_factory=list)
    ids: list[str] = field(default_factory=list)


def constant_link(g: SmallGraph) -> str | None:
    """Canonical graph6 of the common link, or None when links differ."""
    forms = {canonical_form(g.link(v)) for v in range(g.n)}
    if len(forms) != 1:
        return None
    return forms.pop().graph6


def make_record(
    g: SmallGraph,
    source: str = "",
    circulant_spec: str | None = None,
    certified_smallest: bool = False,
) -> CatalogRecord | None:
    """Build a record for an (r,c)-graph; None if the graph is not (r,c)-constant."""
    if g.n == 0:
        return None
    sig = rc_signature(g)
    if sig is None:
        return None
    form = canonical_form(g)
    return CatalogRecord(
        id=form.digest(),
        g6=form.graph6,
        n=g.n,
        r=sig.r,
        c=sig.c,
        planar=is_planar(g),
        circulant_spec=circulant_spec,
        constant_link=constant_link(g),
        source=source,
        certified_smallest=certified_smallest,
    )


def check_record(rec: CatalogRecord) -> str | None:
    """Reason the record fails re-verification, or None."""
    try:
        g = g6_decode(rec.g6)
    except GraphError as exc:
        return f"undecodable graph6: {exc}"
    if g.n != rec.n:
        return f"order {g.n} != stored {rec.n}"
    sig = rc_signature(g)
    if sig is None or (sig.r, sig.c) != (rec.r, rec.c):
        return f"signature {sig} != stored ({rec.r}, {rec.c})"
    if is_planar(g) != rec.planar:
        return "planar flag disagrees with the graph"
    if canonical_form(g).digest() != rec.id:
        return "id is not the canonical digest"
    return None


class Catalog:
    """In-memory index over an optional JSONL file; ingests append to the file."""

    def __init__(self, path: str | Path | None = None) -> None:
        self.path = Path(path) if path is not None else None
        self._records: dict[str, CatalogRecord] = {}
        self.quarantined: list[tuple[str, str]] = []
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._load(self.path.read_text(encoding="utf-8").splitlines())

    def _load(self, lines: Iterable[str]) -> None:
        for lineno, line in enumerate(lines, 1):
            if not line.strip():
                continue
            try:
                rec = CatalogRecord.from_dict(json.loads(line))
            except (ValueError, TypeError) as exc:
                self.quarantined.append((line, f"line {lineno}: {exc}"))
                continue
            problem = check_record(rec)
            if problem is None and rec.id in self._records:
                problem = "duplicate id"
            if problem is not None:
                log.warning("quarantined catalog line %d: %s", lineno, problem)
                self.quarantined.append((line, f"line {lineno}: {problem}"))
                continue
            self._records[rec.id] = rec

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, record_id: str) -> bool:
        return record_id in self._records

    def records(self) -> list[CatalogRecord]:
        return sorted(self._records.values(), key=lambda rec: (rec.n, rec.id))

    def get(self, record_id: str) -> CatalogRecord | None:
        return self._records.get(record_id)

    def _append(self, recs: list[CatalogRecord]) -> None:
        if self.path is None or not recs:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as fh:
            for rec in recs:
                fh.write(rec.to_json() + "\n")

    def add(self, rec: CatalogRecord) -> bool:
        """Store a pre-built record; False if its id is already present."""
        with self._lock:
            if rec.id in self._records:
                return False
            self._records[rec.id] = rec
            self._append([rec])
            return True

    def add_graph(self, g: SmallGraph, source: str = "", **meta) -> CatalogRecord | None:
        rec = make_record(g, source, **meta)
        if rec is None or not self.add(rec):
            return None
        return rec

    def ingest(self, g6_lines: Iterable[str], source: str = "") -> IngestReport:
        report = IngestReport()
        fresh = []
        with self._lock:
            for lineno, line in enumerate(g6_lines, 1):
                text = line.strip()
                if not text:
                    continue
                try:
                    g = g6_decode(text)
                except GraphError as exc:
                    report.rejected += 1
                    report.errors.append(f"line {lineno}: {exc}")
                    continue
                rec = make_record(g, source)
                if rec is None:
                    report.rejected += 1
                    report.errors.append(f"line {lineno}: not (r,c)-constant")
                    continue
                if rec.id in self._records:
                    report.duplicates += 1
                    continue
                self._records[rec.id] = rec
                fresh.append(rec)
                report.accepted += 1
                report.ids.append(rec.id)
            self._append(fresh)
        return report

    def query(
        self,
        r: int | None = None,
        c: int | None = None,
        n_max: int | None = None,
        planar: bool | None = None,
    ) -> list[CatalogRecord]:
        return [
            rec
            for rec in self.records()
            if (r is None or rec.r == r)
            and (c is None or rec.c == c)
            and (n_max is None or rec.n <= n_max)
            and (planar is None or rec.planar == planar)
        ]

    def spectrum(self, r: int) -> dict[int, int]:
        """Realised c for degree r, each mapped to the smallest stored order."""
        out: dict[int, int] = {}
        for rec in self.query(r=r):
            out[rec.c] = min(out.get(rec.c, rec.n), rec.n)
        return dict(sorted(out.items()))

    def co_spectrum(self, c: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for rec in self.query(c=c):
            out[rec.r] = min(out.get(rec.r, rec.n), rec.n)
        return dict(sorted(out.items()))

    def export(self, fmt: str = "jsonl") -> str:
        recs = self.records()
        if fmt == "jsonl":
            return "".join(rec.to_json() + "\n" for rec in recs)
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for rec in recs:
                writer.writerow(asdict(rec))
            return buf.getvalue()
        raise ValueError(f"unknown export format {fmt!r}")

    def import_jsonl(self, text: str) -> IngestReport:
        """Load exported records, re-verifying each; bad lines are quarantined."""
        report = IngestReport()
        before = len(self.quarantined)
        for line in text.splitlines():
            if not line.strip():
                continue
            try:
                rec = CatalogRecord.from_dict(json.loads(line))
            except (ValueError, TypeError) as exc:
                report.rejected += 1
                self.quarantined.append((line, str(exc)))
                continue
            problem = check_record(rec)
            if problem is not None:
                report.rejected += 1
                self.quarantined.append((line, problem))
                continue
            if self.add(rec):
                report.accepted += 1
                report.ids.append(rec.id)
            else:
                report.duplicates += 1
        report.errors = [reason for _, reason in self.quarantined[before:]]
        return report


def seed_catalog(path: str | Path | None = None) -> Catalog:
    """Catalog preloaded with the bundled witnesses (re-verified on load)."""
    cat = Catalog(path)
    text = resources.files("rcgraphs").joinpath("data/seed.jsonl").read_text(encoding="utf-8")
    cat.import_jsonl(text)
    return cat


def record_graph(rec: CatalogRecord) -> SmallGraph:
    return g6_decode(rec.g6)

