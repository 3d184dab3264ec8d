"""
From MPS to standard form
=========================

The solver works on min <c, x> s.t. Ax = b, 0 <= x, x_I <= u_I.  Inequality
rows get slacks, shifted and fixed variables are substituted out, and free
variables are split.  The variable map carries enough information to map a
standard-form point back to the original variables.
"""

import numpy as np

from galp import parse_mps, to_standard_form, map_back, objective

text = """NAME SHAPES
ROWS
 N  OBJ
 L  CAP
 E  MIX
COLUMNS
    X  OBJ  1.0  CAP  2.0
    X  MIX  1.0
    Y  OBJ  -2.0  CAP  1.0
    Y  MIX  1.0
    Z  OBJ  0.5  MIX  -1.0
RHS
    RHS  CAP  10.0  MIX  3.0
BOUNDS
 LO BND  X  1.0
 FR BND  Z
ENDATA
"""

lp, vmap = to_standard_form(parse_mps(text))

print("standard form: m =", lp.m, " n =", lp.n)
print("A =\n", lp.A.toarray())
print("b =", lp.b)
print("c =", lp.c)
print("upper =", lp.upper)
print("objective offset from the shifted lower bound:", vmap.offset)

# any standard-form point maps back to original variables
x = np.array([1.0, 2.0, 0.5, 0.2, 3.0])
x_orig = map_back(vmap, x)
for name, value in zip(vmap.names, x_orig):
    print(f"  {name} = {value}")
print("objective:", objective(lp, x, vmap.offset))
