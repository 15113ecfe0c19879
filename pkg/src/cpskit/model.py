"""Core data model: variable types, known optima, setup records, CPS structures
and evaluation request/result records.

All indices that appear in these records (element domains, element numbers,
sparse matrix triplets) are 1-based, matching the usual mathematical
convention for test-problem collections.  Vectors are numpy float arrays.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .classification import Classification
from .errors import DimensionMismatch
from .sparse import SparseSymMatrix


class VarType(enum.Enum):
    """Variable kind; renders to the single characters 'c', 'i' or 's'."""

    CONTINUOUS = "c"
    INTEGER = "i"
    CATEGORICAL = "s"

    @property
    def char(self):
        return self.value

    @classmethod
    def from_char(cls, c):
        return cls(c)


@dataclass(frozen=True)
class FStar:
    """Objective value at a known minimizer, or a marker when no value is known.

    ``kind`` is one of ``"known"`` (finite ``value``), ``"unbounded"`` (the
    objective decreases without bound) or ``"unknown"``.
    """

    kind: str
    value: float | None = None
    note: str = ""

    @classmethod
    def known(cls, value):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError("known objective value must be finite")
        return cls("known", value)

    @classmethod
    def unbounded(cls):
        return cls("unbounded")

    @classmethod
    def unknown(cls, note=""):
        return cls("unknown", note=note)

    def render(self):
        """Format the way catalog tables print it: %+.8e, '-Inf' or 'unknown'."""
        if self.kind == "known":
            return "%+.8e" % self.value
        if self.kind == "unbounded":
            return "-Inf"
        return "unknown"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "unknown":
            return cls.unknown()
        if text == "-Inf":
            return cls.unbounded()
        return cls.known(float(text))


@dataclass(frozen=True)
class SetupResult:
    """The eight outputs of a setup call, with all vectors fully materialized.

    Bounds use ``-inf``/``+inf`` for absent bounds; a variable with equal
    lower and upper bound is fixed.  ``clower``/``cupper`` are empty for
    unconstrained problems.
    """

    x0: np.ndarray
    fstar: FStar
    xtype: tuple
    xlower: np.ndarray
    xupper: np.ndarray
    clower: np.ndarray
    cupper: np.ndarray
    classification: "Classification"

    @property
    def n(self):
        return self.x0.size

    @property
    def m(self):
        return self.clower.size

    def __post_init__(self):
        n = self.x0.size
        if len(self.xtype) != n or self.xlower.size != n or self.xupper.size != n:
            raise DimensionMismatch("setup vectors must all have length n")
        if np.any(self.xlower > self.xupper):
            raise ValueError("xlower must not exceed xupper")
        # Clamp the starting point into the box; fixed variables end up at
        # their fixed value.
        clamped = np.clip(self.x0, self.xlower, self.xupper)
        object.__setattr__(self, "x0", clamped)

    def free_mask(self):
        """Boolean mask of variables that are not fixed."""
        return self.xlower < self.xupper


def _as_index_tuple(indices):
    out = tuple(int(i) for i in indices)
    if not out:
        raise ValueError("element domain must be nonempty")
    if any(b <= a for a, b in zip(out, out[1:])):
        raise ValueError("element domain must be strictly increasing")
    if out[0] < 1:
        raise ValueError("element domain indices are 1-based")
    return out


@dataclass(frozen=True)
class CpsStructure:
    """Decomposition record: problem name, element domains and parameters.

    ``eldom[i]`` lists the 1-based variable indices element ``i+1`` depends
    on, strictly increasing.  ``param`` is an ordered tuple of ``(name,
    value)`` pairs whose values are forwarded to element evaluations.
    """

    name: str
    eldom: tuple
    param: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "eldom", tuple(_as_index_tuple(dom) for dom in self.eldom)
        )
        object.__setattr__(self, "param", tuple(self.param))
        if not self.eldom:
            raise ValueError("a CPS structure needs at least one element")

    @property
    def n_elements(self):
        return len(self.eldom)

    def param_values(self):
        return tuple(value for _, value in self.param)

    def mel(self):
        return max(len(dom) for dom in self.eldom)


@dataclass(frozen=True)
class EvalRequest:
    """Which outputs to compute; anything not requested is not calculated."""

    want_gradient: bool = False
    want_hessian: bool = False


VALUE_ONLY = EvalRequest()
WITH_GRADIENT = EvalRequest(want_gradient=True)
FULL = EvalRequest(want_gradient=True, want_hessian=True)


@dataclass(frozen=True)
class EvalResult:
    """Full-problem value and, when requested, gradient and sparse Hessian."""

    f: float
    g: np.ndarray | None = None
    H: SparseSymMatrix | None = None


@dataclass(frozen=True)
class ElementEvalResult:
    """One element function's value and, on request, its dense derivatives.

    ``gi`` and ``Hi`` are expressed in the coordinates of the element's
    domain, in the domain's (increasing) order.
    """

    fi: float
    gi: np.ndarray | None = None
    Hi: np.ndarray | None = None

    def __post_init__(self):
        if self.Hi is not None:
            Hi = np.asarray(self.Hi, dtype=float)
            # Store the symmetrized matrix so |Hi - Hi.T| == 0 holds exactly.
            object.__setattr__(self, "Hi", (Hi + Hi.T) / 2.0)
        if self.gi is not None:
            object.__setattr__(self, "gi", np.asarray(self.gi, dtype=float))
