"""CSV and JSON emission for matrices, wavevectors, and analysis reports.

Matrices serialise as triplets `row,col,re,im` over the signed grid indices
{-N..N} (so rows compare directly with the textbook displays), with exact
rationals rendered as `p/q` strings and floats as shortest round-trip
decimals.  Only nonzero entries are emitted.  The JSON form carries the full
metadata {dim, lower_bw, upper_bw, boundary, mode, entries} and is therefore
self-describing; the CSV readers accept dim/boundary/mode hints for the
metadata triplets cannot carry.

Output is deterministic: entries are sorted, floats use repr, and no
timestamps or environment data appear anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .analysis import ConvergenceRow, TraceParadoxReport
from .banded import BandedMatrix
from .errors import ValidationError
from .grid import Boundary, Grid, WaveVector
from .scalars import ComplexRational, NumericMode

MATRIX_HEADER = "row,col,re,im"
VECTOR_HEADER = "n,re,im"
TRACE_HEADER = "D,boundary,trace_re,trace_im,fallacy_re,fallacy_im,max_deviation"
CONVERGENCE_HEADER = "ell,max_interior_error,observed_order"
DISPERSION_HEADER = "m,eigenvalue,residual"


def format_real(value, mode: NumericMode) -> str:
    if mode is NumericMode.EXACT:
        return str(Fraction(value))
    return repr(float(value))


def parse_real(text: str):
    """Inverse of format_real; floats are recognised by '.', 'e', or specials."""
    if any(ch in text for ch in ".eE") or text in ("inf", "-inf", "nan"):
        return float(text)
    return Fraction(text)


def _split(value) -> Tuple[object, object]:
    if isinstance(value, ComplexRational):
        return value.re, value.im
    value = complex(value)
    return value.real, value.imag


def _join(re, im, mode: NumericMode):
    if mode is NumericMode.EXACT:
        return ComplexRational(Fraction(re), Fraction(im))
    return complex(re) + 1j * float(im)


def _sniff_mode(texts) -> NumericMode:
    for text in texts:
        if any(ch in text for ch in ".eE"):
            return NumericMode.FLOAT
    return NumericMode.EXACT


def _rows(text: str, header: str) -> List[List[str]]:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != header:
        raise ValidationError(f"expected header {header!r}")
    return [line.split(",") for line in lines[1:]]


# -- matrices -------------------------------------------------------------------


def matrix_to_csv(matrix: BandedMatrix) -> str:
    lines = [MATRIX_HEADER]
    for n, m, value in matrix.nonzero_entries():
        re, im = _split(value)
        lines.append(
            f"{n},{m},{format_real(re, matrix.mode)},{format_real(im, matrix.mode)}"
        )
    return "\n".join(lines) + "\n"


def matrix_from_csv(
    text: str,
    boundary: Boundary = Boundary.OPEN,
    dim: Optional[int] = None,
    mode: Optional[NumericMode] = None,
) -> BandedMatrix:
    rows = _rows(text, MATRIX_HEADER)
    if mode is None:
        mode = _sniff_mode(field for row in rows for field in row[2:])
    entries = {}
    extent = 0
    for row in rows:
        if len(row) != 4:
            raise ValidationError(f"bad matrix triplet: {','.join(row)!r}")
        n, m = int(row[0]), int(row[1])
        entries[(n, m)] = _join(parse_real(row[2]), parse_real(row[3]), mode)
        extent = max(extent, abs(n), abs(m))
    if dim is None:
        dim = 2 * extent + 1
    return BandedMatrix.from_entries(dim, entries, boundary, mode)


def matrix_to_json(matrix: BandedMatrix) -> str:
    exact = matrix.mode is NumericMode.EXACT
    entries = []
    for n, m, value in matrix.nonzero_entries():
        re, im = _split(value)
        entries.append(
            {
                "row": n,
                "col": m,
                "re": format_real(re, matrix.mode) if exact else float(re),
                "im": format_real(im, matrix.mode) if exact else float(im),
            }
        )
    payload = {
        "dim": matrix.dim,
        "lower_bw": matrix.lower_bw,
        "upper_bw": matrix.upper_bw,
        "boundary": matrix.boundary.value,
        "mode": matrix.mode.value,
        "entries": entries,
    }
    return json.dumps(payload, indent=2) + "\n"


def matrix_from_json(text: str) -> BandedMatrix:
    payload = json.loads(text)
    mode = NumericMode(payload["mode"])
    boundary = Boundary(payload["boundary"])
    entries = {
        (item["row"], item["col"]): _join(item["re"], item["im"], mode)
        for item in payload["entries"]
    }
    return BandedMatrix.from_entries(payload["dim"], entries, boundary, mode)


# -- wavevectors -----------------------------------------------------------------


def wavevector_to_csv(vector: WaveVector) -> str:
    lines = [VECTOR_HEADER]
    for n in vector.grid.indices():
        re, im = _split(vector.entry(n))
        lines.append(
            f"{n},{format_real(re, vector.mode)},{format_real(im, vector.mode)}"
        )
    return "\n".join(lines) + "\n"


def wavevector_from_csv(
    text: str, grid: Grid, mode: Optional[NumericMode] = None
) -> WaveVector:
    rows = _rows(text, VECTOR_HEADER)
    if mode is None:
        mode = _sniff_mode(field for row in rows for field in row[1:])
    values = {}
    for row in rows:
        if len(row) != 3:
            raise ValidationError(f"bad vector row: {','.join(row)!r}")
        values[int(row[0])] = _join(parse_real(row[1]), parse_real(row[2]), mode)
    try:
        entries = [values[n] for n in grid.indices()]
    except KeyError as exc:
        raise ValidationError(f"missing entry for row {exc}") from exc
    return WaveVector(grid, entries, mode)


def wavevector_to_json(vector: WaveVector) -> str:
    exact = vector.mode is NumericMode.EXACT
    entries = []
    for n in vector.grid.indices():
        re, im = _split(vector.entry(n))
        entries.append(
            {
                "n": n,
                "re": format_real(re, vector.mode) if exact else float(re),
                "im": format_real(im, vector.mode) if exact else float(im),
            }
        )
    payload = {"dim": vector.grid.dim, "mode": vector.mode.value, "entries": entries}
    return json.dumps(payload, indent=2) + "\n"


def wavevector_from_json(text: str, grid: Grid) -> WaveVector:
    payload = json.loads(text)
    mode = NumericMode(payload["mode"])
    if payload["dim"] != grid.dim:
        raise ValidationError(f"vector dimension {payload['dim']} does not match grid {grid.dim}")
    values = {item["n"]: _join(item["re"], item["im"], mode) for item in payload["entries"]}
    return WaveVector(grid, [values[n] for n in grid.indices()], mode)


# -- trace report ------------------------------------------------------------------


def _report_fields(report: TraceParadoxReport, mode: NumericMode):
    tr_re, tr_im = _split(report.trace_commutator)
    fa_re, fa_im = _split(report.fallacy_value)
    return [
        str(report.dim),
        report.boundary.value,
        format_real(tr_re, mode),
        format_real(tr_im, mode),
        format_real(fa_re, mode),
        format_real(fa_im, mode),
        format_real(report.max_deviation_from_unit, mode),
    ]


def _report_mode(report: TraceParadoxReport) -> NumericMode:
    return (
        NumericMode.EXACT
        if isinstance(report.trace_commutator, ComplexRational)
        else NumericMode.FLOAT
    )


def trace_report_to_csv(report: TraceParadoxReport) -> str:
    fields = _report_fields(report, _report_mode(report))
    return TRACE_HEADER + "\n" + ",".join(fields) + "\n"


def trace_report_from_csv(text: str) -> TraceParadoxReport:
    rows = _rows(text, TRACE_HEADER)
    if len(rows) != 1 or len(rows[0]) != 7:
        raise ValidationError("expected exactly one trace report row")
    row = rows[0]
    mode = _sniff_mode(row[2:])
    return TraceParadoxReport(
        dim=int(row[0]),
        boundary=Boundary(row[1]),
        trace_commutator=_join(parse_real(row[2]), parse_real(row[3]), mode),
        fallacy_value=_join(parse_real(row[4]), parse_real(row[5]), mode),
        max_deviation_from_unit=parse_real(row[6]),
    )


def trace_report_to_json(report: TraceParadoxReport) -> str:
    mode = _report_mode(report)
    exact = mode is NumericMode.EXACT
    fields = _report_fields(report, mode)
    payload = {
        "D": report.dim,
        "boundary": report.boundary.value,
        "trace_re": fields[2] if exact else float(fields[2]),
        "trace_im": fields[3] if exact else float(fields[3]),
        "fallacy_re": fields[4] if exact else float(fields[4]),
        "fallacy_im": fields[5] if exact else float(fields[5]),
        "max_deviation": fields[6] if exact else float(fields[6]),
    }
    return json.dumps(payload, indent=2) + "\n"


def trace_report_from_json(text: str) -> TraceParadoxReport:
    payload = json.loads(text)
    values = [
        payload["trace_re"],
        payload["trace_im"],
        payload["fallacy_re"],
        payload["fallacy_im"],
    ]
    mode = (
        NumericMode.EXACT if all(isinstance(v, str) for v in values) else NumericMode.FLOAT
    )
    deviation = payload["max_deviation"]
    return TraceParadoxReport(
        dim=payload["D"],
        boundary=Boundary(payload["boundary"]),
        trace_commutator=_join(values[0], values[1], mode),
        fallacy_value=_join(values[2], values[3], mode),
        max_deviation_from_unit=Fraction(deviation) if isinstance(deviation, str) else float(deviation),
    )


# -- convergence rows -----------------------------------------------------------------


def convergence_to_csv(rows: Sequence[ConvergenceRow]) -> str:
    lines = [CONVERGENCE_HEADER]
    for row in rows:
        order = "" if row.observed_order is None else repr(row.observed_order)
        lines.append(f"{row.ell!r},{row.max_interior_error!r},{order}")
    return "\n".join(lines) + "\n"


def convergence_from_csv(text: str) -> List[ConvergenceRow]:
    rows = _rows(text, CONVERGENCE_HEADER)
    out = []
    for row in rows:
        if len(row) != 3:
            raise ValidationError(f"bad convergence row: {','.join(row)!r}")
        order = None if row[2] == "" else float(row[2])
        out.append(ConvergenceRow(float(row[0]), float(row[1]), order))
    return out


def convergence_to_json(rows: Sequence[ConvergenceRow]) -> str:
    payload = [
        {
            "ell": row.ell,
            "max_interior_error": row.max_interior_error,
            "observed_order": row.observed_order,
        }
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def convergence_from_json(text: str) -> List[ConvergenceRow]:
    payload = json.loads(text)
    return [
        ConvergenceRow(
            float(item["ell"]),
            float(item["max_interior_error"]),
            None if item["observed_order"] is None else float(item["observed_order"]),
        )
        for item in payload
    ]


# -- dispersion probe -------------------------------------------------------------------


def dispersion_to_csv(m: int, eigenvalue: float, residual: float) -> str:
    return DISPERSION_HEADER + f"\n{m},{eigenvalue!r},{residual!r}\n"


def dispersion_from_csv(text: str) -> Tuple[int, float, float]:
    rows = _rows(text, DISPERSION_HEADER)
    if len(rows) != 1 or len(rows[0]) != 3:
        raise ValidationError("expected exactly one dispersion row")
    row = rows[0]
    return int(row[0]), float(row[1]), float(row[2])


def dispersion_to_json(m: int, eigenvalue: float, residual: float) -> str:
    payload = {"m": m, "eigenvalue": eigenvalue, "residual": residual}
    return json.dumps(payload, indent=2) + "\n"


def dispersion_from_json(text: str) -> Tuple[int, float, float]:
    payload = json.loads(text)
    return int(payload["m"]), float(payload["eigenvalue"]), float(payload["residual"])
