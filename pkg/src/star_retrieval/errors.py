"""Exception hierarchy shared by all star_retrieval modules."""

from __future__ import annotations


class StarError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(StarError):
    """A line of an input file is not well-formed JSON."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class SchemaError(StarError):
    """A record violates the corpus or query schema."""


class ArityError(StarError):
    """Row cell count does not match the header."""


class EmptyError(StarError):
    """An operation received an empty collection it cannot work on."""


class EmptyInputError(StarError):
    """Text input is empty after trimming."""


class RemoteError(StarError):
    """A remote backend failed after all retries."""

    def __init__(self, status: int, body: object):
        super().__init__(f"remote call failed with status {status}: {_short(body)}")
        self.status = status
        self.body = body


class DimensionMismatchError(StarError):
    """Vector dimensionality differs from what the context requires."""


class InconsistentAssignmentError(StarError):
    """Cluster assignment does not match the points/rows it claims to cover."""


class GenerationError(StarError):
    """Query generation failed for one or more clusters with fallback disabled."""

    def __init__(self, failures: list[tuple[int, Exception]]):
        clusters = ", ".join(str(c) for c, _ in failures)
        super().__init__(f"query generation failed for clusters: {clusters}")
        self.failures = failures


class DegenerateFusionError(StarError):
    """Fused vector has (near-)zero norm and cannot be normalized."""


class PipelineStageError(StarError):
    """A representation-building stage failed for a specific table."""

    def __init__(self, table_id: str, stage: str, cause: Exception):
        super().__init__(f"table {table_id!r} failed at stage {stage!r}: {cause}")
        self.table_id = table_id
        self.stage = stage
        self.cause = cause


class DuplicateIdError(StarError):
    """Table id already present in the index."""


class FingerprintMismatchError(StarError):
    """Configuration fingerprint differs from the one the index was built with."""


class EmptyIndexError(StarError):
    """Search requested against an index with no entries."""


class VersionError(StarError):
    """Index file carries an unsupported format version."""


class CorruptIndexError(StarError):
    """Index file is truncated, mangled or fails its checksum."""


class MissingGoldError(StarError):
    """Evaluation queries reference table ids absent from the corpus."""

    def __init__(self, missing: set[str]):
        listed = ", ".join(sorted(missing))
        super().__init__(f"gold table ids missing from corpus: {listed}")
        self.missing = frozenset(missing)


def _short(body: object, limit: int = 200) -> str:
    text = repr(body)
    return text if len(text) <= limit else text[: limit - 3] + "..."
