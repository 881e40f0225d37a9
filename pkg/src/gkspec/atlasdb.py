"""Group-record database: text format, parser, embedded corpus, filters.

Record format (UTF-8, '#' starts a comment to end of line, a blank line
separates records)::

    group L2(23)
    order 2^3 3 11 23
    mu 11,12,23
    pi 2,3,11,23
    flag has9 false
    flag has25 false
    note spectrum verified by psl2 oracle

Keys: ``group`` (required, first line of a record), ``order`` (space
separated prime powers ``p^e``), ``mu`` (spectrum generators, comma
separated), ``pi`` (required, comma separated primes), ``flag has9|has25
true|false``, ``note`` (free text, repeatable).  Unknown keys are
rejected with a line number.

The membership flags are first-class data: several exclusions rest on
spectra from the literature that this toolkit cannot recompute, and the
filters must never treat missing knowledge as absence.  Provenance for
every such fact lives in the record's notes.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .groups import Psl2Report, parse_psl2_name, psl2_spectrum
from .orderset import Factorization, OrderSet, _is_prime, factorize


class ParseError(ValueError):
    """Malformed database text; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class RecordError(ValueError):
    """A parsed record violates an internal consistency invariant."""

    def __init__(self, name: str, message: str):
        super().__init__(f"record {name}: {message}")
        self.record_name = name


@dataclass(frozen=True)
class GroupRecord:
    """One database entry for a finite simple group.

    pi is always present.  order, mu and the two membership flags are
    optional; when present they must be mutually consistent (validated at
    construction): pi equals the primes of order, the primes of mu lie in
    pi, and each flag agrees with mu membership.
    """

    name: str
    pi: tuple[int, ...]
    order: Factorization | None = None
    mu: OrderSet | None = None
    has9: bool | None = None
    has25: bool | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.name or any(ch.isspace() for ch in self.name):
            raise RecordError(self.name or "<blank>", "name must be a single token")
        if not self.pi:
            raise RecordError(self.name, "pi must be non-empty")
        if tuple(sorted(set(self.pi))) != self.pi:
            raise RecordError(self.name, "pi must be sorted and distinct")
        for p in self.pi:
            if not _is_prime(p):
                raise RecordError(self.name, f"{p} in pi is not prime")
        if self.order is not None and self.order.primes != self.pi:
            raise RecordError(self.name, "pi does not match the primes of order")
        if self.mu is not None:
            if not set(self.mu.pi()) <= set(self.pi):
                raise RecordError(self.name, "mu has primes outside pi")
            for flag_value, n in ((self.has9, 9), (self.has25, 25)):
                if flag_value is not None and flag_value != self.mu.contains(n):
                    raise RecordError(
                        self.name, f"flag has{n} contradicts the mu expansion"
                    )

    def spectrum_has(self, n: int) -> bool | None:
        """Membership of n, when decidable: flag first, then mu, else None."""
        if n == 9 and self.has9 is not None:
            return self.has9
        if n == 25 and self.has25 is not None:
            return self.has25
        if self.mu is not None:
            return self.mu.contains(n)
        return None

    def serialize(self) -> str:
        lines = [f"group {self.name}"]
        if self.order is not None:
            lines.append(f"order {self.order}")
        if self.mu is not None:
            lines.append(f"mu {self.mu.serialize()}")
        lines.append("pi " + ",".join(str(p) for p in self.pi))
        if self.has9 is not None:
            lines.append(f"flag has9 {'true' if self.has9 else 'false'}")
        if self.has25 is not None:
            lines.append(f"flag has25 {'true' if self.has25 else 'false'}")
        for note in self.notes:
            lines.append(f"note {note}")
        return "\n".join(lines) + "\n"


def _parse_order(text: str, line_no: int) -> Factorization:
    pairs = []
    for token in text.split():
        base, _, exp = token.partition("^")
        try:
            pairs.append((int(base), int(exp) if exp else 1))
        except ValueError:
            raise ParseError(line_no, f"bad order token {token!r}") from None
    try:
        return Factorization(tuple(pairs))
    except ValueError as exc:
        raise ParseError(line_no, str(exc)) from None


def _parse_ints(text: str, line_no: int) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ParseError(line_no, f"bad integer list {text!r}") from None


def parse_records(text: str) -> list[GroupRecord]:
    """Parse database text into validated records.

    Raises ParseError (with a line number) on syntax problems and
    RecordError (with the record name) on invariant violations.
    """
    records: list[GroupRecord] = []
    current: dict | None = None
    current_line = 0

    def flush():
        nonlocal current
        if current is None:
            return
        if "pi" not in current:
            raise ParseError(current_line, f"record {current['name']} lacks pi")
        records.append(
            GroupRecord(
                name=current["name"],
                pi=tuple(sorted(set(current["pi"]))),
                order=current.get("order"),
                mu=current.get("mu"),
                has9=current.get("has9"),
                has25=current.get("has25"),
                notes=tuple(current.get("notes", [])),
            )
        )
        current = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush()
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "group":
            flush()
            if not rest:
                raise ParseError(line_no, "group needs a name")
            current = {"name": rest, "notes": []}
            current_line = line_no
            continue
        if current is None:
            raise ParseError(line_no, f"{key!r} before any 'group' line")
        if key == "order":
            current["order"] = _parse_order(rest, line_no)
        elif key == "mu":
            try:
                current["mu"] = OrderSet.from_generators(_parse_ints(rest, line_no))
            except ValueError as exc:
                raise ParseError(line_no, str(exc)) from None
        elif key == "pi":
            current["pi"] = _parse_ints(rest, line_no)
        elif key == "flag":
            flag_name, _, value = rest.partition(" ")
            if flag_name not in ("has9", "has25") or value not in ("true", "false"):
                raise ParseError(line_no, f"bad flag line {line!r}")
            current[flag_name] = value == "true"
        elif key == "note":
            current["notes"].append(rest)
        else:
            raise ParseError(line_no, f"unknown key {key!r}")
    flush()
    names = [r.name for r in records]
    if len(set(names)) != len(names):
        dup = next(n for n in names if names.count(n) > 1)
        raise RecordError(dup, "duplicate record name")
    return records


def serialize_records(records) -> str:
    return "\n".join(r.serialize() for r in records)


def load_embedded() -> list[GroupRecord]:
    """The corpus shipped with the package."""
    text = (
        resources.files("gkspec").joinpath("data/simple_groups.db").read_text("utf-8")
    )
    return parse_records(text)


def load_path(path) -> list[GroupRecord]:
    with open(path, encoding="utf-8") as fh:
        return parse_records(fh.read())


@dataclass(frozen=True)
class FilterQuery:
    """Select simple groups by prime content and excluded element orders.

    A record passes when its primes lie inside ambient_pi, it meets
    target_primes in at least min_hits primes, and none of excluded_orders
    belongs to its spectrum.  Records that survive the prime conditions but
    cannot decide an excluded order (no flag, no mu) are reported as
    insufficient, never passed.
    """

    ambient_pi: tuple[int, ...]
    excluded_orders: tuple[int, ...]
    target_primes: tuple[int, ...]
    min_hits: int = 1

    def __post_init__(self):
        if self.min_hits < 1:
            raise ValueError("min_hits must be >= 1")


@dataclass(frozen=True)
class FilterResult:
    matches: tuple[tuple[str, tuple[int, ...]], ...]
    insufficient: tuple[str, ...]


def run_filter(db, query: FilterQuery) -> FilterResult:
    """Apply a FilterQuery to a record list; deterministic, name-sorted."""
    ambient = set(query.ambient_pi)
    targets = set(query.target_primes)
    matches = []
    insufficient = []
    for record in sorted(db, key=lambda r: r.name):
        if not set(record.pi) <= ambient:
            continue
        hits = tuple(sorted(set(record.pi) & targets))
        if len(hits) < query.min_hits:
            continue
        verdicts = [record.spectrum_has(n) for n in query.excluded_orders]
        if any(v is True for v in verdicts):
            continue
        if any(v is None for v in verdicts):
            insufficient.append(record.name)
            continue
        matches.append((record.name, hits))
    return FilterResult(tuple(matches), tuple(insufficient))


# The two embedded selection queries over pi(J4) = the ten primes below.
_PI_J4 = (2, 3, 5, 7, 11, 23, 29, 31, 37, 43)

LEMMA_QUERIES: dict[str, FilterQuery] = {
    "8": FilterQuery(
        ambient_pi=_PI_J4,
        excluded_orders=(9, 25),
        target_primes=(11, 23, 29, 31, 37, 43),
        min_hits=2,
    ),
    "9": FilterQuery(
        ambient_pi=_PI_J4,
        excluded_orders=(9, 25),
        target_primes=(5, 23, 29, 37, 43),
        min_hits=2,
    ),
}


class CrosscheckError(ValueError):
    """An independent oracle contradicts a stored record."""


@dataclass(frozen=True)
class CrosscheckReport:
    name: str
    status: str  # "verified" (oracle matched) or "cited" (no oracle in range)
    detail: str


def record_from_psl2(report: Psl2Report) -> GroupRecord:
    """A database record built from an enumeration report."""
    return GroupRecord(
        name=f"L2({report.q})",
        pi=report.spectrum.pi(),
        order=factorize(report.group_order),
        mu=report.spectrum,
        has9=report.spectrum.contains(9),
        has25=report.spectrum.contains(25),
        notes=("spectrum computed by exhaustive matrix enumeration",),
    )


def crosscheck_record(record: GroupRecord, max_q: int = 64) -> CrosscheckReport:
    """Re-derive a record from an independent oracle where one exists.

    Groups of type L2(q) with q <= max_q are recomputed by matrix
    enumeration; any disagreement in order, pi, mu or flags is a hard
    CrosscheckError.  Everything else is reported as cited data (its
    internal consistency was already validated at construction).
    """
    q = parse_psl2_name(record.name)
    if q is None or q > max_q:
        return CrosscheckReport(
            record.name, "cited", "no in-range oracle; cited data, internally consistent"
        )
    report = psl2_spectrum(q)
    oracle = record_from_psl2(report)
    problems = []
    if record.order is not None and record.order != oracle.order:
        problems.append("order")
    if record.pi != oracle.pi:
        problems.append("pi")
    if record.mu is not None and record.mu != oracle.mu:
        problems.append("mu")
    for flag_name, stored, truth in (
        ("has9", record.has9, oracle.has9),
        ("has25", record.has25, oracle.has25),
    ):
        if stored is not None and stored != truth:
            problems.append(flag_name)
    if problems:
        raise CrosscheckError(
            f"record {record.name} disagrees with the enumeration oracle: "
            + ", ".join(problems)
        )
    return CrosscheckReport(
        record.name, "verified", f"matches the PSL2({q}) enumeration oracle"
    )
