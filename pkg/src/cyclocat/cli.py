"""Command-line interface.

Exit codes: 0 when every requested check passes, 1 when a mathematical check
fails, 2 for invalid input.
"""

import argparse
import sys

from cyclocat import fileio
from cyclocat.modules import CYCLIC, Z2, GradingScheme, ModuleError, counterexample_module, validate, validate_morphism

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _yes(flag):
    return "yes" if flag else "no"


def _read_module(path):
    try:
        return fileio.read_module(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except fileio.FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_morphism(path):
    try:
        return fileio.read_morphism(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except fileio.FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def cmd_verify_theorem(args):
    from cyclocat.quantum import verify_main_theorem

    try:
        report = verify_main_theorem(args.n, args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(report.to_json() if args.json else report.to_text())
    if args.report:
        _write(args.report, report.to_json() + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_module(args):
    from cyclocat import stable

    M = _read_module(args.infile)
    sch = M.scheme
    if args.action == "check":
        print(f"scheme: {sch.describe()}")
        print(f"total dimension: {M.total_dim} in {len(M.dims)} degrees")
        print("valid: yes")
        return EXIT_OK
    if args.action == "decompose":
        ok = True
        for label, R in (("P0 (d1 survives)", stable.restrict_P0(M)), ("P1 (d0 survives)", stable.restrict_P1(M))):
            dec = stable.decompose_intervals(R)
            sound = stable.interval_soundness(R, dec)
            ok &= sound
            print(f"restriction {label}")
            print(dec.to_text(sch))
            print(f"ranks reproduced: {_yes(sound)}")
        return EXIT_OK if ok else EXIT_FAIL
    if args.action == "class":
        from cyclocat.k0 import class_of, quotient_class

        if sch.kind != Z2:
            raise InputError("classes are defined only for the Z2 scheme")
        c = class_of(M)
        red, cyc = quotient_class(c)
        print(f"class: {c}")
        print(f"class is 0 in K0: {_yes(c.is_zero())}")
        print(f"in Z[x,y]/([{sch.n}]_x,[{sch.m}]_y): {red}")
        print(f"{cyc.rep} in Z[q]/Φ_{sch.n * sch.m}")
        return EXIT_OK
    if args.action == "kernels":
        k0_ = stable.in_kernel_P0(M)
        k1_ = stable.in_kernel_P1(M)
        proj = stable.is_projective(M)
        print(f"ker P0: {_yes(k0_)}, ker P1: {_yes(k1_)}, projective: {_yes(proj)}")
        return EXIT_OK
    raise InputError(f"unknown module action {args.action!r}")


def cmd_r0(args):
    from cyclocat.stable import R0, restrict_P0

    X = _read_module(args.infile)
    R = R0(restrict_P0(X))
    problems = validate(R)
    _write(args.out, fileio.module_to_json(R))
    print(f"R0(P0 X): dimension {R.total_dim} (= {X.scheme.n} * {X.total_dim})")
    print(f"valid: {_yes(not problems)}")
    return EXIT_OK if not problems and R.total_dim == X.scheme.n * X.total_dim else EXIT_FAIL


def cmd_eta(args):
    from cyclocat.stable import eta

    X = _read_module(args.infile)
    e = eta(X)
    inj = e.is_injective()
    commutes = not validate_morphism(e) and not validate(e.target)
    print(f"injective: {_yes(inj)}, commutes: {_yes(commutes)}")
    return EXIT_OK if inj and commutes else EXIT_FAIL


def cmd_factorize(args):
    from cyclocat.stable import ContractViolation, eta, factor_through_eta, factor_through_eta1, in_kernel_P0, in_kernel_P1

    f = _read_morphism(args.f)
    X, Y = f.source, f.target
    if X.scheme.kind != Z2:
        raise InputError("factorization lemma: the induction needs the Z2 scheme")
    if args.through == "eta":
        if not in_kernel_P1(Y):
            raise InputError("factorization lemma: precondition violated, the target is not in ker P1")
        unit, solver = eta(X), factor_through_eta
    else:
        from cyclocat.stable import eta1

        if not in_kernel_P0(Y):
            raise InputError("factorization lemma: precondition violated, the target is not in ker P0")
        unit, solver = eta1(X), factor_through_eta1
    try:
        g = solver(f, check_kernel=False)
    except ContractViolation as exc:
        print(f"factorization lemma: {exc}")
        return EXIT_FAIL
    exact = g.compose(unit) == f and not validate_morphism(g)
    if args.out:
        _write(args.out, fileio.morphism_to_json(g))
    symbol = "η" if args.through == "eta" else "η₁"
    if exact:
        print(f"g found, g∘{symbol} = f: exact")
        return EXIT_OK
    print(f"g found, g∘{symbol} = f: FAILED")
    return EXIT_FAIL


def cmd_counterexample(args):
    from cyclocat.stable import in_kernel_P0, in_kernel_P1, is_projective

    if (args.n, args.m) != (3, 5):
        raise InputError("only n=3, m=5 is available: the 15-dimensional example is the single instance given")
    M = counterexample_module(3, 5)
    if args.out:
        _write(args.out, fileio.module_to_json(M))
    valid = not validate(M)
    proj = is_projective(M)
    k0_, k1_ = in_kernel_P0(M), in_kernel_P1(M)
    print(f"valid: {_yes(valid)}")
    print(f"projective: {_yes(proj)}")
    print(f"ker P0: {_yes(k0_)}, ker P1: {_yes(k1_)}")
    return EXIT_OK if valid and not proj and k0_ and k1_ else EXIT_FAIL


def cmd_stable_hom(args):
    from cyclocat.stable import stable_hom

    X, Y = _read_module(args.x), _read_module(args.y)
    if X.scheme != Y.scheme:
        raise InputError("the two modules use different schemes")
    print(stable_hom(X, Y, representatives=False).to_text())
    return EXIT_OK


def cmd_single_algebra(args):
    from cyclocat.k0 import single_algebra_k0

    if args.n < 2:
        raise InputError("n must be at least 2")
    facts = single_algebra_k0(args.n)
    print(facts.to_text())
    return EXIT_OK if facts.passed else EXIT_FAIL


def cmd_random_module(args):
    from cyclocat import modules

    try:
        sch = GradingScheme(args.scheme, args.n, args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.max_dim < 1:
        raise InputError("--max-dim must be positive")
    try:
        if args.kind == "any":
            M = modules.random_module(sch, args.max_dim, args.seed)
        elif args.kind == "projective":
            M = modules.random_projective(sch, args.max_dim, args.seed)
        else:
            M = modules.random_kernel_module(sch, 0 if args.kind == "ker0" else 1, args.max_dim, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = fileio.module_to_json(M)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="cyclocat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify-theorem", help="run the four-step check of K0 = Z[q]/Phi_nm")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--report", help="also write the report as JSON to this path")
    v.add_argument("--json", action="store_true", help="print JSON instead of text")
    v.set_defaults(func=cmd_verify_theorem)

    mo = sub.add_parser("module", help="inspect a module file")
    mo.add_argument("action", choices=["check", "decompose", "class", "kernels"])
    mo.add_argument("--in", dest="infile", required=True)
    mo.set_defaults(func=cmd_module)

    r = sub.add_parser("r0", help="write R0(P0 X)")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_r0)

    e = sub.add_parser("eta", help="check the unit X -> R0(P0 X)")
    e.add_argument("--in", dest="infile", required=True)
    e.set_defaults(func=cmd_eta)

    fz = sub.add_parser("factorize", help="factor a morphism X -> Y (Y in ker P1) through eta")
    fz.add_argument("--f", required=True, help="morphism file")
    fz.add_argument("--out", help="write g to this morphism file")
    fz.add_argument("--through", choices=["eta", "eta1"], default="eta")
    fz.set_defaults(func=cmd_factorize)

    c = sub.add_parser("counterexample", help="the 15-dimensional module in both kernels (cyclic scheme)")
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--m", type=int, default=5)
    c.add_argument("--out")
    c.set_defaults(func=cmd_counterexample)

    sh = sub.add_parser("stable-hom", help="dimension of the stable Hom space")
    sh.add_argument("--x", required=True)
    sh.add_argument("--y", required=True)
    sh.set_defaults(func=cmd_stable_hom)

    sa = sub.add_parser("single-algebra", help="K0 facts for one algebra H_n")
    sa.add_argument("--n", type=int, required=True)
    sa.set_defaults(func=cmd_single_algebra)

    rm = sub.add_parser("random-module", help="write a random module")
    rm.add_argument("--scheme", choices=[Z2, CYCLIC], default=Z2)
    rm.add_argument("--n", type=int, default=3)
    rm.add_argument("--m", type=int, default=5)
    rm.add_argument("--max-dim", type=int, default=20)
    rm.add_argument("--kind", choices=["any", "ker0", "ker1", "projective"], default="any")
    rm.add_argument("--seed", type=int, required=True)
    rm.add_argument("--out")
    rm.set_defaults(func=cmd_random_module)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ModuleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
