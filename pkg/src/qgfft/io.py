"""Deterministic JSON/CSV serialisation (floats always carry 17 significant digits)."""
import csv
import io
import json
import math

import numpy as np


def dumps(obj, indent=None):
    """Serialise ``obj`` with ``%.17g`` floats and sorted-free, insertion-order keys."""
    out = io.StringIO()
    _write(obj, out, indent, 0)
    return out.getvalue() + "\n"


def _write(obj, out, indent, level):
    if isinstance(obj, (bool, np.bool_)):
        out.write("true" if obj else "false")
    elif obj is None:
        out.write("null")
    elif isinstance(obj, (int, np.integer)):
        out.write(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            raise ValueError("non-finite float cannot be serialised")
        out.write("%.17g" % x)
    elif isinstance(obj, str):
        out.write(json.dumps(obj))
    elif isinstance(obj, dict):
        items = list(obj.items())
        if not items:
            out.write("{}")
            return
        out.write("{")
        for i, (k, v) in enumerate(items):
            if i:
                out.write("," if indent is not None else ", ")
            _newline(out, indent, level + 1)
            out.write(json.dumps(str(k)) + ": ")
            _write(v, out, indent, level + 1)
        _newline(out, indent, level)
        out.write("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.write("[")
        for i, v in enumerate(obj):
            if i:
                out.write(", ")
            _write(v, out, None, level + 1)
        out.write("]")
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")


def _newline(out, indent, level):
    if indent is not None:
        out.write("\n" + " " * (indent * level))


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON ({exc})") from exc


def write_text(path, text):
    if path is None or path == "-":
        print(text, end="")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def signal_to_csv(values):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, z in enumerate(values):
        writer.writerow([i, "%.17g" % z.real, "%.17g" % z.imag])
    return buf.getvalue()


def signal_from_csv(path):
    values = []
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh)):
            if not row:
                continue
            try:
                idx, re, im = int(row[0]), float(row[1]), float(row[2])
            except (ValueError, IndexError) as exc:
                raise ValueError(f"{path}:{lineno + 1}: expected index,re,im") from exc
            if idx != len(values):
                raise ValueError(f"{path}:{lineno + 1}: indices must run 0, 1, 2, ...")
            values.append(complex(re, im))
    return np.array(values)
