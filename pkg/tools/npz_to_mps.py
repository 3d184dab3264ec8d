"""Regenerate the Netlib test fixtures in tests/data/netlib from npz archives.

The npz layout is the scipy benchmark one: arrays c, A_ub, b_ub, A_eq, b_eq
(plus the published optimal objective under "obj").  Row and column names
are synthesized; coefficients are written at full double precision.

Usage: python tools/npz_to_mps.py SRC_DIR DEST_DIR
"""

import os
import sys

import numpy as np


def npz_to_mps(name, data):
    c = data["c"]
    A_ub, b_ub = data["A_ub"], data["b_ub"]
    A_eq, b_eq = data["A_eq"], data["b_eq"]
    n = len(c)
    cols = [f"X{j + 1}" for j in range(n)]

    lines = [f"NAME          {name.upper()}", "ROWS", " N  COST"]
    rows = []
    for i in range(len(b_ub)):
        rows.append((f"R{i + 1}", "L", A_ub[i], b_ub[i]))
    for i in range(len(b_eq)):
        rows.append((f"E{i + 1}", "E", A_eq[i], b_eq[i]))
    for rname, kind, _, _ in rows:
        lines.append(f" {kind}  {rname}")

    lines.append("COLUMNS")
    for j, col in enumerate(cols):
        entries = []
        if c[j] != 0.0:
            entries.append(("COST", c[j]))
        for rname, _, arow, _ in rows:
            if arow[j] != 0.0:
                entries.append((rname, arow[j]))
        for rname, value in entries:
            lines.append(f"    {col}  {rname}  {float(value)!r}")

    lines.append("RHS")
    for rname, _, _, rhs in rows:
        if rhs != 0.0:
            lines.append(f"    RHS  {rname}  {float(rhs)!r}")
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


def main(src_dir, dest_dir):
    os.makedirs(dest_dir, exist_ok=True)
    for fname in sorted(os.listdir(src_dir)):
        if not fname.endswith(".npz"):
            continue
        name = os.path.splitext(fname)[0].lower()
        data = np.load(os.path.join(src_dir, fname), allow_pickle=True)
        if len(data["bounds"]):
            raise SystemExit(f"{fname}: bounded problems are not handled by this converter")
        text = npz_to_mps(name, data)
        with open(os.path.join(dest_dir, f"{name}.mps"), "w") as fh:
            fh.write(text)
        print(f"{name}: obj {float(data['obj']):.10g}")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
