"""Generate the small MPS fixtures under tests/data/fixtures.

Twenty well-formed files exercising every row kind, RANGES, and all the
continuous bound kinds, plus one malformed file per parser error class.
Deterministic: fixture k is produced from seed k.
"""

import os
import sys

import numpy as np

MALFORMED = {
    "bad_section.mps": """NAME          BADSEC
ROWS
 N  COST
 E  R1
COLUMS
    X1  COST  1.0  R1  1.0
RHS
    RHS  R1  1.0
ENDATA
""",
    "bad_row_kind.mps": """NAME          BADROW
ROWS
 N  COST
 Q  R1
COLUMNS
    X1  COST  1.0
RHS
ENDATA
""",
    "bad_bound_kind.mps": """NAME          BADBND
ROWS
 N  COST
 E  R1
COLUMNS
    X1  COST  1.0  R1  1.0
RHS
    RHS  R1  1.0
BOUNDS
 XX BND  X1  4.0
ENDATA
""",
    "integer_bound.mps": """NAME          INTBND
ROWS
 N  COST
 E  R1
COLUMNS
    X1  COST  1.0  R1  1.0
RHS
    RHS  R1  1.0
BOUNDS
 BV BND  X1
ENDATA
""",
    "undeclared_row.mps": """NAME          NOROW
ROWS
 N  COST
 E  R1
COLUMNS
    X1  COST  1.0  R9  1.0
RHS
    RHS  R1  1.0
ENDATA
""",
    "undeclared_column.mps": """NAME          NOCOL
ROWS
 N  COST
 E  R1
COLUMNS
    X1  COST  1.0  R1  1.0
RHS
    RHS  R1  1.0
BOUNDS
 UP BND  X9  4.0
ENDATA
""",
    "duplicate_coef.mps": """NAME          DUPC
ROWS
 N  COST
 E  R1
COLUMNS
    X1  COST  1.0  R1  1.0
    X1  R1  2.0
RHS
    RHS  R1  1.0
ENDATA
""",
    "duplicate_row.mps": """NAME          DUPR
ROWS
 N  COST
 E  R1
 L  R1
COLUMNS
    X1  COST  1.0  R1  1.0
RHS
ENDATA
""",
    "missing_endata.mps": """NAME          NOEND
ROWS
 N  COST
 E  R1
COLUMNS
    X1  COST  1.0  R1  1.0
RHS
    RHS  R1  1.0
""",
    "bad_number.mps": """NAME          BADNUM
ROWS
 N  COST
 E  R1
COLUMNS
    X1  COST  one  R1  1.0
RHS
    RHS  R1  1.0
ENDATA
""",
}


def random_fixture(seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(2, 6))
    n = int(rng.integers(2, 7))
    kinds = [str(rng.choice(["L", "G", "E"])) for _ in range(m)]
    rows = [f"R{i + 1}" for i in range(m)]
    cols = [f"X{j + 1}" for j in range(n)]

    lines = [f"NAME          FIX{seed:02d}", "ROWS", " N  COST"]
    lines += [f" {kind}  {name}" for kind, name in zip(kinds, rows)]
    lines.append("COLUMNS")
    for j, col in enumerate(cols):
        if rng.random() < 0.8:
            lines.append(f"    {col}  COST  {round(float(rng.uniform(-5, 5)), 3)!r}")
        for i, row in enumerate(rows):
            if rng.random() < 0.6:
                lines.append(f"    {col}  {row}  {round(float(rng.uniform(-4, 4)), 3)!r}")
    lines.append("RHS")
    for row in rows:
        if rng.random() < 0.8:
            lines.append(f"    RHS  {row}  {round(float(rng.uniform(-3, 3)), 3)!r}")
    ranged = [row for row in rows if rng.random() < 0.3]
    if ranged:
        lines.append("RANGES")
        for row in ranged:
            lines.append(f"    RNG  {row}  {round(float(rng.uniform(0.5, 2.0)), 3)!r}")
    bound_lines = []
    for col in cols:
        p = rng.random()
        if p < 0.2:
            bound_lines.append(f" UP BND  {col}  {round(float(rng.uniform(1, 6)), 3)!r}")
        elif p < 0.3:
            bound_lines.append(f" LO BND  {col}  {round(float(rng.uniform(-2, 1)), 3)!r}")
        elif p < 0.35:
            bound_lines.append(f" FX BND  {col}  {round(float(rng.uniform(0, 2)), 3)!r}")
        elif p < 0.4:
            bound_lines.append(f" FR BND  {col}")
        elif p < 0.45:
            bound_lines.append(f" MI BND  {col}")
        elif p < 0.5:
            bound_lines.append(f" PL BND  {col}")
    if bound_lines:
        lines.append("BOUNDS")
        lines += bound_lines
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


def main(dest):
    os.makedirs(dest, exist_ok=True)
    for seed in range(1, 21):
        with open(os.path.join(dest, f"fix{seed:02d}.mps"), "w") as fh:
            fh.write(random_fixture(seed))
    for name, text in MALFORMED.items():
        with open(os.path.join(dest, name), "w") as fh:
            fh.write(text)
    print(f"wrote {20 + len(MALFORMED)} fixtures to {dest}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/fixtures")
