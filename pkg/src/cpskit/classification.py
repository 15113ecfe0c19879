"""CUTEst-style problem classification strings.

A classification looks like ``SUR2-AY-V-0``: objective kind, constraint
kind, regularity, derivative order, then origin, internal-variable flag,
then the dimension (``V`` for variable) and the number of constraints.
``parse`` and ``render`` are exact inverses on every valid string.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedClassification

OBJECTIVE_KINDS = "NCLQSO"
CONSTRAINT_KINDS = "UXBNLQO"
REGULARITIES = "RI"
ORIGINS = "AMR"


@dataclass(frozen=True)
class Classification:
    """Parsed form of a classification string.

    ``dimension`` / ``n_constraints`` are ``None`` when the string carries
    ``V`` (the quantity can be chosen at setup time).
    """

    objective_kind: str
    constraint_kind: str
    regularity: str
    derivative_order: int
    origin: str
    internal_vars: bool
    dimension: int | None
    n_constraints: int | None

    def render(self):
        dim = "V" if self.dimension is None else str(self.dimension)
        con = "V" if self.n_constraints is None else str(self.n_constraints)
        return "{}{}{}{}-{}{}-{}-{}".format(
            self.objective_kind,
            self.constraint_kind,
            self.regularity,
            self.derivative_order,
            self.origin,
            "Y" if self.internal_vars else "N",
            dim,
            con,
        )


def _expect_char(text, pos, allowed, what):
    if pos >= len(text):
        raise MalformedClassification(text, pos, f"missing {what}")
    c = text[pos]
    if c not in allowed:
        raise MalformedClassification(
            text, pos, f"{what} must be one of {allowed!r}, got {c!r}"
        )
    return c


def _take_count(text, pos, what, minimum):
    """Read 'V' or an integer token ending at the next '-' or end of string."""
    end = text.find("-", pos)
    if end == -1:
        end = len(text)
    token = text[pos:end]
    if not token:
        raise MalformedClassification(text, pos, f"missing {what}")
    if token == "V":
        return None, end
    if not token.isdigit():
        bad = next(i for i, c in enumerate(token) if not c.isdigit())
        raise MalformedClassification(
            text, pos + bad, f"{what} must be 'V' or an integer"
        )
    value = int(token)
    if value < minimum:
        raise MalformedClassification(text, pos, f"{what} must be >= {minimum}")
    if token != str(value):  # e.g. leading zeros would not round-trip
        raise MalformedClassification(text, pos, f"{what} has leading zeros")
    return value, end


def parse_classification(text):
    """Parse a classification string, reporting the first offending position."""
    pos = 0
    objective = _expect_char(text, pos, OBJECTIVE_KINDS, "objective kind")
    constraint = _expect_char(text, pos + 1, CONSTRAINT_KINDS, "constraint kind")
    regularity = _expect_char(text, pos + 2, REGULARITIES, "regularity")
    order = _expect_char(text, pos + 3, "012", "derivative order")
    _expect_char(text, 4, "-", "separator")
    origin = _expect_char(text, 5, ORIGINS, "origin")
    internal = _expect_char(text, 6, "YN", "internal-variable flag")
    _expect_char(text, 7, "-", "separator")
    dimension, end = _take_count(text, 8, "dimension", minimum=1)
    _expect_char(text, end, "-", "separator")
    n_constraints, end = _take_count(text, end + 1, "constraint count", minimum=0)
    if end != len(text):
        raise MalformedClassification(text, end, "trailing characters")
    return Classification(
        objective_kind=objective,
        constraint_kind=constraint,
        regularity=regularity,
        derivative_order=int(order),
        origin=origin,
        internal_vars=internal == "Y",
        dimension=dimension,
        n_constraints=n_constraints,
    )


def render_classification(c):
    return c.render()
