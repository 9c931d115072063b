"""SpectrumTable and its CSV form.

Layout::

    # dpcomb spectrum
    # theta=0.29999999999999999
    # n=5
    # mode=ideal
    ...
    k,T            (or k,T,T_alt)
    0,1
    ...

Numbers use 17 significant digits so a table survives a write/read round
trip bit for bit.
"""
import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import NumericalCorruptionError

log = logging.getLogger(__name__)

MAGIC = "# dpcomb spectrum"
OVERSHOOT = 1e-12


def fmt(x):
    return format(float(x), ".17g")


@dataclass
class SpectrumTable:
    k: np.ndarray
    T: np.ndarray
    T_alt: np.ndarray = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.k = np.asarray(self.k, dtype=np.float64)
        self.T = _checked(self.T, "T")
        if self.T_alt is not None:
            self.T_alt = _checked(self.T_alt, "T_alt")
        if self.T.shape != self.k.shape or (self.T_alt is not None and self.T_alt.shape != self.k.shape):
            raise ValueError("column lengths differ")
        if np.any(np.diff(self.k) < 0):
            raise ValueError("rows must be sorted by k")

    @property
    def columns(self):
        return ("k", "T") if self.T_alt is None else ("k", "T", "T_alt")

    def write(self, fh):
        fh.write(MAGIC + "\n")
        for key, value in self.metadata.items():
            fh.write(f"# {key}={'' if value is None else value}\n")
        fh.write(",".join(self.columns) + "\n")
        cols = [self.k, self.T] if self.T_alt is None else [self.k, self.T, self.T_alt]
        for row in zip(*cols):
            fh.write(",".join(fmt(v) for v in row) + "\n")

    def save(self, path):
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            self.write(fh)


def _checked(values, name):
    values = np.asarray(values, dtype=np.float64)
    if np.any(~np.isfinite(values)) or np.any(values < 0.0):
        raise NumericalCorruptionError(f"{name} column has negative or non-finite entries")
    if np.any(values > 1.0 + OVERSHOOT):
        raise NumericalCorruptionError(f"{name} exceeds 1 by {values.max() - 1.0:.3g}")
    over = values > 1.0
    if np.any(over):
        log.warning("clamping %d %s value(s) marginally above 1 (max excess %.2g)",
                    int(over.sum()), name, float(values.max() - 1.0))
        values = np.where(over, 1.0, values)
    return values


def read_table(path):
    metadata = {}
    header = None
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        first = fh.readline().rstrip("\n")
        if first != MAGIC:
            raise ValueError(f"{path}: not a dpcomb spectrum file")
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                metadata[key] = value
            elif header is None:
                header = tuple(line.split(","))
            elif line:
                rows.append([float(v) for v in line.split(",")])
    if header not in (("k", "T"), ("k", "T", "T_alt")):
        raise ValueError(f"{path}: unexpected column header {header}")
    data = np.array(rows, dtype=np.float64).reshape(-1, len(header))
    alt = data[:, 2] if len(header) == 3 else None
    return SpectrumTable(data[:, 0], data[:, 1], alt, metadata)


def count_peaks(T, threshold):
    """Strict local maxima of a sampled curve above ``threshold``.

    A flat top of equal samples counts once.
    """
    T = np.asarray(T, dtype=np.float64)
    peaks = 0
    i = 1
    while i < T.size - 1:
        if T[i] > T[i - 1]:
            j = i
            while j + 1 < T.size and T[j + 1] == T[i]:
                j += 1
            if j + 1 < T.size and T[j + 1] < T[i] and T[i] > threshold:
                peaks += 1
            i = j + 1
        else:
            i += 1
    return peaks
