#!/usr/bin/env python3
"""MILP backend driver: solves an exported MPS file with HiGHS via scipy.

Usage: milp_backend.py MODEL.mps OUT.sol [TIME_LIMIT_S]

Reads the scheduler's MPS dialect (OBJSENSE/ROWS/COLUMNS/RHS/BOUNDS with BV
bounds only) and writes the solution-file format the scheduler consumes:
an `=status=` line, an `=obj=` line, then `name value` pairs.
"""

import sys

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import csr_matrix


def parse_mps(path):
    maximize = False
    row_sense = {}
    row_order = []
    obj_row = None
    col_order = []
    col_index = {}
    entries = []  # (row, col, coef)
    obj = {}
    rhs = {}
    section = None
    with open(path) as f:
        for raw in f:
            if not raw.strip() or raw.startswith("*"):
                continue
            indented = raw[0] in " \t"
            tok = raw.split()
            if not indented:
                section = tok[0]
                continue
            if section == "OBJSENSE":
                maximize = tok[0].upper().startswith("MAX")
            elif section == "ROWS":
                sense, name = tok
                if sense == "N":
                    obj_row = name
                else:
                    row_sense[name] = sense
                    row_order.append(name)
            elif section == "COLUMNS":
                col = tok[0]
                if col not in col_index:
                    col_index[col] = len(col_order)
                    col_order.append(col)
                for row, value in zip(tok[1::2], tok[2::2]):
                    if row == obj_row:
                        obj[col] = obj.get(col, 0.0) + float(value)
                    else:
                        entries.append((row, col, float(value)))
            elif section == "RHS":
                for row, value in zip(tok[1::2], tok[2::2]):
                    rhs[row] = float(value)
            elif section == "BOUNDS":
                if tok[0] != "BV":
                    raise SystemExit(f"unsupported bound type {tok[0]}")
    return maximize, row_sense, row_order, col_order, col_index, entries, obj, rhs


def main():
    if len(sys.argv) < 3:
        raise SystemExit(__doc__)
    mps_path, sol_path = sys.argv[1], sys.argv[2]
    time_limit = float(sys.argv[3]) if len(sys.argv) > 3 else None

    maximize, row_sense, row_order, col_order, col_index, entries, obj, rhs = parse_mps(mps_path)
    n = len(col_order)
    c = np.zeros(n)
    for col, value in obj.items():
        c[col_index[col]] = value
    if maximize:
        c = -c

    constraints = []
    if row_order:
        row_index = {name: i for i, name in enumerate(row_order)}
        data = [e[2] for e in entries]
        rows = [row_index[e[0]] for e in entries]
        cols = [col_index[e[1]] for e in entries]
        matrix = csr_matrix((data, (rows, cols)), shape=(len(row_order), n))
        lower = np.full(len(row_order), -np.inf)
        upper = np.full(len(row_order), np.inf)
        for name, i in row_index.items():
            b = rhs.get(name, 0.0)
            sense = row_sense[name]
            if sense in ("L", "E"):
                upper[i] = b
            if sense in ("G", "E"):
                lower[i] = b
        constraints = [LinearConstraint(matrix, lower, upper)]

    options = {"mip_rel_gap": 0.0}
    if time_limit is not None:
        options["time_limit"] = time_limit
    result = milp(
        c,
        constraints=constraints,
        integrality=np.ones(n),
        bounds=Bounds(np.zeros(n), np.ones(n)),
        options=options,
    )

    with open(sol_path, "w") as out:
        if result.status == 0:
            status = "optimal"
        elif result.status == 1 and result.x is not None:
            status = "feasible_time_limit"
        elif result.status == 2:
            status = "infeasible"
        else:
            out.write("=status= error\n")
            out.write(f"# solver status {result.status}: {result.message}\n")
            return
        out.write(f"=status= {status}\n")
        if result.x is not None:
            objective = float(np.dot(c, result.x))
            if maximize:
                objective = -objective
            out.write(f"=obj= {objective:.9g}\n")
            for name, i in zip(col_order, range(n)):
                value = result.x[i]
                if abs(value) > 1e-9:
                    out.write(f"{name} {value:.9g}\n")


if __name__ == "__main__":
    main()
