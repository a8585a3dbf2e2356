"""Solve the emitted LP models with scipy's MILP solver (HiGHS) and compare
against the exact search of the vnfdeploy CLI."""
import argparse
import itertools
import pathlib
import re
import subprocess
import sys
import tempfile

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp

TERM = re.compile(r"([+-]?)\s*(\d[\d.eE+-]*)?\s*([A-Za-z_]\w*)")


def parse_lp(text):
    """Objective, rows and binaries of the LP subset the CLI writes."""
    section = None
    objective = {}
    rows = []
    binaries = []
    statement = ""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        lower = line.lower()
        if lower in ("minimize", "subject to", "binaries", "end"):
            if section == "minimize":
                objective = parse_expr(statement.split(":", 1)[1])
                statement = ""
            section = lower
            continue
        if section == "binaries":
            binaries.extend(line.split())
            continue
        statement += " " + line
        if section != "subject to" or not re.search(r"(<=|>=|=)\s*[-+\d.eE]+\s*$", statement):
            continue
        name, body = statement.split(":", 1)
        statement = ""
        sense = re.search(r"<=|>=|=", body).group(0)
        lhs, rhs = body.split(sense)
        rows.append((name.strip(), parse_expr(lhs), sense, float(rhs)))
    return objective, rows, binaries


def parse_expr(text):
    coeffs = {}
    for sign, value, var in TERM.findall(text):
        c = float(value) if value else 1.0
        coeffs[var] = coeffs.get(var, 0.0) + (-c if sign == "-" else c)
    return coeffs


def solve_lp(text):
    objective, rows, binaries = parse_lp(text)
    names = sorted(set(objective) | set(binaries) | {v for _, e, _, _ in rows for v in e})
    if not names:
        return 0.0
    index = {n: i for i, n in enumerate(names)}
    c = np.zeros(len(names))
    for var, coef in objective.items():
        c[index[var]] = coef
    a = np.zeros((len(rows), len(names)))
    lo = np.full(len(rows), -np.inf)
    hi = np.full(len(rows), np.inf)
    for r, (_, expr, sense, rhs) in enumerate(rows):
        for var, coef in expr.items():
            a[r, index[var]] = coef
        if sense in ("<=", "="):
            hi[r] = rhs
        if sense in (">=", "="):
            lo[r] = rhs
    integrality = np.array([1 if n in set(binaries) else 0 for n in names])
    upper = np.array([1.0 if n in set(binaries) else np.inf for n in names])
    res = milp(c, constraints=LinearConstraint(a, lo, hi), integrality=integrality,
               bounds=Bounds(np.zeros(len(names)), upper),
               options={"mip_rel_gap": 1e-9, "time_limit": 120})
    if res.status == 2:
        return None
    if res.status != 0:
        raise RuntimeError(f"milp status {res.status}: {res.message}")
    return float(res.fun)


def solve_cli(cli, instance, lp_path):
    proc = subprocess.run([cli, "solve", str(instance), "--emit-lp", str(lp_path)],
                          capture_output=True, text=True, check=False)
    if proc.returncode not in (0, 3):
        raise RuntimeError(f"{instance}: exit {proc.returncode}\n{proc.stdout}{proc.stderr}")
    match = re.search(r"objective_gflops_s: (\S+)", proc.stdout)
    return None if proc.returncode == 3 else float(match.group(1))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("cli")
    parser.add_argument("fixtures", nargs="*")
    args = parser.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        work = pathlib.Path(tmp)
        instances = [pathlib.Path(f) for f in args.fixtures]
        grid = itertools.product([2, 3, 4], [30000, 90000, 150000], [2240, 4480], [1, 2])
        for s, d0, ce, seed in grid:
            path = work / f"S{s}_d{d0}_ce{ce}_r{seed}.json"
            subprocess.run([args.cli, "gen", "--mix", str(s), "--central-dist", str(d0), "--edge-capacity",
                            str(ce), "--seed", str(seed), "--out", str(path)], check=True, capture_output=True)
            instances.append(path)

        failures = 0
        feasible = 0
        for instance in instances:
            lp_path = work / (instance.stem + ".lp")
            exact = solve_cli(args.cli, instance, lp_path)
            relaxed = solve_lp(lp_path.read_text())
            if exact is None or relaxed is None:
                ok = exact is None and relaxed is None
            else:
                feasible += 1
                ok = abs(exact - relaxed) <= 1e-6 * max(1.0, abs(exact))
            failures += not ok
            print(f"{instance.stem}: search {exact} milp {relaxed} {'ok' if ok else 'MISMATCH'}")
        print(f"{len(instances)} instances, {feasible} feasible, {failures} mismatches")
        return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
