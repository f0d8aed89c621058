"""Report generation: CSV tables plus matplotlib figures.

`write_report(out_dir)` produces, side by side:

* weak_order.csv / weak_ratio.png -- Eeta counts in the weak order and the
  decaying fraction of responder wins;
* tamari_series.csv / tamari_growth.png -- counting-series coefficients,
  the coefficient-ratio convergence to the growth rate, and the fitted
  amplitude;
* typea_series.csv / typea_growth.png -- likewise for the root-poset family;
* conjectures.csv -- the two conjecture checkers' computed/predicted pairs;
* radical_report.json -- the closed-form diagnostic for the root-poset
  generating function.
"""

from __future__ import annotations

import csv
import json
import math
import os
from fractions import Fraction

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from . import dyck, tamari, weak
from .conjectures import YoungFibonacci, ss_conjecture_check, yf_conjecture_check
from .series import asymptotic_gamma, bisect_root


def _ratio_rows(coeffs):
    rows = []
    for n in range(2, len(coeffs)):
        if coeffs[n - 1]:
            rows.append((n, coeffs[n] / coeffs[n - 1]))
    return rows


def write_report(out_dir, order=200, weak_max=8, yf_max=12, ss_max=10):
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    # weak order ----------------------------------------------------------
    weak_rows = []
    for n in range(1, weak_max + 1):
        count = weak.count_eeta_sn(n)
        weak_rows.append((n, math.factorial(n), count, count / math.factorial(n)))
    path = os.path.join(out_dir, "weak_order.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "factorial", "eeta_wins", "ratio"])
        writer.writerows(weak_rows)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy([r[0] for r in weak_rows], [r[3] for r in weak_rows], "o-")
    ax.set_xlabel("n")
    ax.set_ylabel("|E| / n!")
    ax.set_title("Fraction of responder wins in the weak order")
    ax.grid(True, alpha=0.3)
    path = os.path.join(out_dir, "weak_ratio.png")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    paths.append(path)

    # tamari --------------------------------------------------------------
    _, f_series = tamari.g_f_series(order)
    f_coeffs = f_series.assert_integral()
    rho_tam = float(
        bisect_root([-4, -8, 60, -148, -20, -155, -32, 32], 2, 4, Fraction(1, 10**7))
    )
    gamma_tam, _ = asymptotic_gamma(f_coeffs, rho_tam)
    path = os.path.join(out_dir, "tamari_series.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "eeta_wins"])
        for n in range(1, order + 1):
            writer.writerow([n, f_coeffs[n]])
    paths.append(path)
    paths.append(
        _growth_figure(
            os.path.join(out_dir, "tamari_growth.png"),
            f_coeffs,
            rho_tam,
            gamma_tam,
            "312-avoider responder wins",
        )
    )

    # type A ---------------------------------------------------------------
    w_series = dyck.type_a_series(order)
    w_coeffs = w_series.assert_integral()
    rho_a = float(
        1 / bisect_root([1, -4, 4, -4], Fraction(1, 4), Fraction(2, 5), Fraction(1, 10**9))
    )
    gamma_a, _ = asymptotic_gamma(w_coeffs, rho_a, exponent_shift=1)
    path = os.path.join(out_dir, "typea_series.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "eeta_wins"])
        for n in range(1, order + 1):
            writer.writerow([n, w_coeffs[n]])
    paths.append(path)
    paths.append(
        _growth_figure(
            os.path.join(out_dir, "typea_growth.png"),
            w_coeffs,
            rho_a,
            gamma_a,
            "root-poset ideal responder wins",
            exponent_shift=1,
        )
    )

    path = os.path.join(out_dir, "radical_report.json")
    rep = dyck.radical_report(min(order, 60))
    rep["residual_first_nonzero"] = (
        None
        if rep["residual_first_nonzero"] is None
        else [rep["residual_first_nonzero"][0], str(rep["residual_first_nonzero"][1])]
    )
    with open(path, "w") as fh:
        json.dump(rep, fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths.append(path)

    # conjectures -----------------------------------------------------------
    path = os.path.join(out_dir, "conjectures.csv")
    yf_lattice = YoungFibonacci(yf_max)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["conjecture", "n", "computed", "predicted", "match"])
        for n in range(2, yf_max + 1):
            rep = yf_conjecture_check(n, yf_lattice)
            writer.writerow(
                ["two_digit_rank", rep["n"], rep["computed"], rep["predicted"], rep["match"]]
            )
        for n in range(1, ss_max + 1):
            rep = ss_conjecture_check(n)
            writer.writerow(
                [
                    "triangle_string",
                    rep["n"],
                    rep["states"] - len(rep["mismatches"]),
                    rep["states"],
                    rep["match"],
                ]
            )
    paths.append(path)
    return paths


def _growth_figure(path, coeffs, rho, gamma, title, exponent_shift=0):
    rows = _ratio_rows(coeffs)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.plot([r[0] for r in rows], [r[1] for r in rows], label="a(n)/a(n-1)")
    ax1.axhline(rho, linestyle="--", color="gray", label=f"rho = {rho:.5f}")
    ax1.set_xlabel("n")
    ax1.set_ylabel("coefficient ratio")
    ax1.legend()
    ax1.grid(True, alpha=0.3)
    # normalized amplitude s_n -> gamma
    xs, ys = [], []
    for n in range(max(2, len(coeffs) // 4), len(coeffs)):
        a = coeffs[n]
        if a == 0:
            continue
        log_s = (
            math.log(a)
            + 0.5 * math.log(math.pi)
            + 1.5 * math.log(n)
            - (n + exponent_shift) * math.log(rho)
        )
        if abs(log_s) < 700:
            xs.append(n)
            ys.append(math.exp(log_s))
    ax2.plot(xs, ys, label="normalized amplitude")
    ax2.axhline(gamma, linestyle="--", color="gray", label=f"gamma fit = {gamma:.5f}")
    ax2.set_xlabel("n")
    ax2.legend()
    ax2.grid(True, alpha=0.3)
    fig.suptitle(title)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path
