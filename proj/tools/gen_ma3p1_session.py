#!/usr/bin/env python3
# Copyright 2026 The jetreduce Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes sessions/ma3p1.session from tests/data/ma3p1_reference_conditions.txt."""

import pathlib
import re

import sympy as sp

ROOT = pathlib.Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data" / "ma3p1_reference_conditions.txt"
OUT = ROOT / "sessions" / "ma3p1.session"


def fsym(i, j):
    i, j = sorted((i, j))
    return sp.Symbol(f"f{i}{j}")


def to_session(expr):
    text = sp.sstr(sp.expand(expr), order="lex").replace("**", "^")
    return re.sub(r"f(\d)(\d)", r"f;\1\2", text)


LICENSE = [line.rstrip() for line in pathlib.Path(__file__).read_text().splitlines()[1:14]] + [""]


def main():
    hess = sp.Matrix(4, 4, lambda i, j: fsym(i + 1, j + 1))
    lines = LICENSE + [
        "# Monge-Ampere equation in 3+1 dimensions, homogeneous and unshifted.",
        "# Generated by tools/gen_ma3p1_session.py; edit the generator instead.",
        "",
        "signature 4 4",
        "function f(u1,u2,u3,u4)",
        "",
        "# Cofactors of the Hessian of f.",
    ]
    for i in range(1, 5):
        for j in range(i, 5):
            lines.append(f"let Hf{i}{j} = {to_session(hess.cofactor(i - 1, j - 1))}")
    lines += [
        "",
        "field X1 = translation 1",
        "field X2 = translation 2",
        "field X3 = translation 3",
        "field X4 = translation 4",
        "field X5 = [x1 - f;1, x2 - f;2, x3 - f;3, x4 - f;4]",
        "",
        "system MA",
        "  ma 3p1 kappa=k alpha=0 homogeneous",
    ]
    pairs = [(i, j) for i in range(1, 5) for j in range(i, 5)]
    k1 = " + ".join(f"Hf{i}{j}*k{33 + q}" for q, (i, j) in enumerate(pairs))
    lines.append(f"  impose k1: k1 + {k1}")
    for raw in DATA.read_text().splitlines():
        if not raw.strip() or raw.startswith("#"):
            continue
        label, expr = (s.strip() for s in raw.split(":", 1))
        if label == "k4":
            lines.append("  # printed without the kappa_35 factor on its second term")
            expr = expr.replace("(f;22*f;44 - f;24^2) +", "(f;22*f;44 - f;24^2)*k35 +")
        lines.append(f"  impose {label}: {expr}")
    lines += [
        "end",
        "",
        "system TARGET",
    ]
    for a in range(1, 5):
        for b in range(a + 1, 5):
            lines.append(f"  eq u[{b},{a}] - u[{a},{b}]")
    lines.append("  eq " + " + ".join(f"k{33 + q}*u[{i},{j}]" for q, (i, j) in enumerate(pairs)))
    lines += ["end", "", "transform CANON z w"]
    lines += [f"  z{i} = x{i} - f;{i}" for i in range(1, 5)]
    lines += [f"  w{i} = u{i}" for i in range(1, 5)]
    lines += ["end", ""]
    OUT.write_text("\n".join(lines))


if __name__ == "__main__":
    main()
