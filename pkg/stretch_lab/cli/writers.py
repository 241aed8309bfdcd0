import io
import json
import sys

import matplotlib
import numpy as np
import pandas as pd
from matplotlib.figure import Figure

from stretch_lab.numerics import ExtScalar
from stretch_lab.utils import write_output

SERIALIZE_LOG_THRESHOLD = 700


def serialize_value(value):
    """Locale independent text for one cell

    Floats are written with repr, so they read back exactly. Extended
    scalars out of the native range become {"log": logmag}.
    """
    if isinstance(value, str):
        return value
    if isinstance(value, ExtScalar):
        if value.sign != 0 and abs(value.logmag) > SERIALIZE_LOG_THRESHOLD:
            obj = {"log": float(value.logmag)}
            if value.sign < 0:
                obj["sign"] = -1
            return json.dumps(obj)
        return repr(value.to_real())
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _readable(value):
    if isinstance(value, str):
        return value
    if isinstance(value, ExtScalar):
        if value.sign != 0 and abs(value.logmag) > SERIALIZE_LOG_THRESHOLD:
            return "%sexp(%.6g)" % ("-" if value.sign < 0 else "", value.logmag)
        value = value.to_real()
    if isinstance(value, (bool, np.bool_, int, np.integer)):
        return str(value)
    return "%.6g" % value


def _format_cells(frame, formatter):
    return pd.DataFrame(
        {column: [formatter(v) for v in frame[column]] for column in frame.columns},
        columns=frame.columns,
    )


class Writer:
    """Base class for output formats

    Parameters
    ----------
    header : list of strings, optional (Default: None)
        report lines written before the rows
    """

    def __init__(self, header=None):
        self.header = list(header or [])

    def render(self, frame):
        """Returns the output for the rows of frame as text or bytes

        frame : pandas.DataFrame
            one row per record, cells are strings, native numbers or
            ExtScalar
        """

        raise NotImplementedError

    def write(self, frame, path=None):
        """Renders frame to path, or to stdout if path is None"""
        data = self.render(frame)
        if path is not None:
            write_output(path, data)
        elif isinstance(data, bytes):
            sys.stdout.buffer.write(data)
        else:
            sys.stdout.write(data)


class TableWriter(Writer):
    def render(self, frame):
        lines = ["# %s" % line for line in self.header]
        if len(frame.columns) > 0:
            lines.append(_format_cells(frame, _readable).to_string(index=False))
        return "\n".join(lines) + "\n"


class CsvWriter(Writer):
    """Comma separated rows preceded by '#' report lines

    Output is byte-identical across runs on the same rows.
    """

    def render(self, frame):
        text = "".join("# %s\n" % line for line in self.header)
        if len(frame.columns) > 0:
            text += _format_cells(frame, serialize_value).to_csv(
                index=False, lineterminator="\n"
            )
        return text


class SvgWriter(Writer):
    """Decay plot of the selected columns against t

    Extended scalar columns are drawn on a natural log scale. Rows are split
    into one line per core_id when the frame has that column. The svg is a
    pure function of the rows.

    Parameters
    ----------
    columns : list of strings, optional (Default: None)
        columns to draw, every column but t and core_id if None
    title : string, optional (Default: "")
    """

    def __init__(self, header=None, columns=None, title=""):
        super().__init__(header)
        self.columns = columns
        self.title = title

    @staticmethod
    def _values(series):
        values = []
        for value in series:
            if isinstance(value, ExtScalar):
                value = value.logmag if value.sign > 0 else np.nan
            values.append(float(value))
        return np.array(values)

    def render(self, frame):
        columns = self.columns
        if columns is None:
            columns = [c for c in frame.columns if c not in ("t", "core_id")]
        columns = [c for c in columns if c in frame.columns]

        if "core_id" in frame.columns:
            groups = [
                (str(key), rows) for key, rows in frame.groupby("core_id", sort=False)
            ]
        else:
            groups = [("", frame)]

        rc = {"svg.hashsalt": "stretch-lab", "svg.fonttype": "path"}
        with matplotlib.rc_context(rc):
            fig = Figure(figsize=(8, 5))
            ax = fig.add_subplot(1, 1, 1)
            for key, rows in groups:
                t = rows["t"].to_numpy(dtype=float)
                for column in columns:
                    is_log = any(isinstance(v, ExtScalar) for v in rows[column])
                    label = "log %s" % column if is_log else column
                    if key:
                        label = "%s: %s" % (key, label)
                    ax.plot(t, self._values(rows[column]), label=label)
            ax.set_xlabel("t")
            if self.title:
                ax.set_title(self.title)
            if len(columns) > 0:
                ax.legend()
            buf = io.BytesIO()
            fig.savefig(buf, format="svg", metadata={"Date": None})
        return buf.getvalue()


WRITERS = {"table": TableWriter, "csv": CsvWriter, "svg": SvgWriter}


def frame_from_rows(rows, columns):
    """DataFrame with object cells, keeping ExtScalar values intact"""
    return pd.DataFrame(rows, columns=columns, dtype=object)
