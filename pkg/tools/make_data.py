"""Regenerate the module files shipped in src/cyclocat/data (deterministic)."""

import os
import random
import sys

from cyclocat import fileio
from cyclocat.linalg import Matrix
from cyclocat.modules import (
    CYCLIC,
    Z2,
    GradingScheme,
    ModuleMorphism,
    counterexample_module,
    direct_sum,
    free_module,
    random_module,
    rectangle_module,
    simple_module,
    tensor,
    interval_module,
)
from cyclocat.stable import Presentation, R0, eta, restrict_P0

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "cyclocat", "data")


def factorization_fixture(seed=7):
    """(X, Y in ker P1, f = g0 o eta) with a known ground-truth g0 != 0."""
    sch = GradingScheme(Z2, 3, 5)
    rng = random.Random(seed)
    X = random_module(sch, 6, rng)
    while True:
        # Y: induced from a twisted piece plus a full d0-rectangle near X
        Z = tensor(interval_module(sch, (0, 1), 1, 2), interval_module(sch, (-2, 0), 1, 2))
        Y = direct_sum(tensor(Z, rectangle_module(sch, (-2, -1), 3, 1)), R0(restrict_P0(X)))
        pres = Presentation(R0(restrict_P0(X)))
        basis = pres.hom_basis(Y)
        coeffs = [rng.randint(-2, 2) for _ in basis]
        v = [sum((c * b[i] for c, b in zip(coeffs, basis)), sch.field.zero) for i in range(len(basis[0]))]
        g0 = pres.morphism(Y, v)
        f = g0.compose(eta(X))
        if not f.is_zero():
            return f
        X = random_module(sch, 6, rng)


def main():
    os.makedirs(OUT, exist_ok=True)
    sch = GradingScheme(Z2, 3, 5)
    files = {
        "counterexample_3_5.json": fileio.module_to_json(counterexample_module(3, 5)),
        "free_3_5.json": fileio.module_to_json(free_module(sch, (0, 0))),
        "simple_3_5.json": fileio.module_to_json(simple_module(sch, (0, 0))),
        "factorize_3_5.json": fileio.morphism_to_json(factorization_fixture()),
    }
    for name, text in files.items():
        with open(os.path.join(OUT, name), "w", encoding="utf-8") as fh:
            fh.write(text)
        print("wrote", name)


if __name__ == "__main__":
    sys.exit(main())
