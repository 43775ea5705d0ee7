"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failure, 2 plan error
(missing C1/C2, unavailable LSESC family, bad arguments), 3 I/O or parse
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from . import butson, latin, scarpis
from .errors import FormatError, PlanError, VerificationError


def _print_verify_failure(report: butson.VerifyReport) -> None:
    if report.bad_row_pair:
        print(f"FAIL: rows {report.bad_row_pair} are not orthogonal")
    if report.bad_col_pair:
        print(f"FAIL: columns {report.bad_col_pair} are not orthogonal")


def cmd_fourier(args: argparse.Namespace) -> int:
    matrix = butson.fourier(args.n)
    provenance: dict[str, Any] = {"construction": "fourier", "plan": {"n": args.n}}
    butson.write_matrix(matrix, args.output, fmt=args.format, provenance=provenance)
    print(f"wrote BH({matrix.m},{matrix.n}) to {args.output}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    matrix, _ = butson.read_matrix(args.path)
    report = butson.verify(matrix)
    if not report.ok:
        _print_verify_failure(report)
        return 1
    print(f"ok: BH({matrix.m},{matrix.n})")
    if args.analyze:
        _print_analysis(matrix)
    return 0


def _print_analysis(matrix: butson.ButsonMatrix) -> None:
    if matrix.m % 2 or matrix.n % 2:
        print("C1 pairs: n/a (needs even order and root order)")
    else:
        pairs = butson.find_c1_pairs(matrix)
        listed = " ".join(f"({t},{s})" for t, s in pairs) or "none"
        print(f"C1 pairs: {listed}")
        print(f"d_H = {len(pairs)}")
    if matrix.m % 2:
        print("C2 cells: n/a (needs even root order)")
    else:
        cells = butson.find_c2_cells(matrix)
        listed = " ".join(f"({i},{j})" for i, j in cells) or "none"
        print(f"C2 cells: {listed}")


def _load_verified(path: str) -> butson.ButsonMatrix:
    matrix, _ = butson.read_matrix(path)
    report = butson.verify(matrix)
    if not report.ok:
        _print_verify_failure(report)
        raise VerificationError(f"input {path} failed verification")
    return matrix


def _load_family(source: str, order: int, count: int) -> tuple[list[latin.LatinTensor], dict[str, Any]]:
    if source == "classical":
        tensors = latin.classical_tensor_set(order)
        return tensors, {"source": "classical", "order": order}
    squares = latin.read_latin_set(source)
    if any(square.n != order for square in squares):
        raise PlanError(f"LSESC file squares must have order {order}")
    if len(squares) != count:
        raise PlanError(f"LSESC file must hold {count} squares, found {len(squares)}")
    return [latin.encode(square) for square in squares], {"source": "file", "path": source}


def _parse_permutation(text: str, n: int) -> list[int]:
    try:
        order = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError as exc:
        raise PlanError(f"bad permutation {text!r}") from exc
    if sorted(order) != list(range(1, n + 1)):
        raise PlanError(f"{text!r} is not a permutation of 1..{n}")
    return order


def cmd_construct(args: argparse.Namespace) -> int:
    inputs = [str(p) for p in args.inputs]
    if not 1 <= len(inputs) <= 2:
        raise PlanError("construct takes one or two input matrices")
    matrices = [_load_verified(p) for p in inputs]
    if len(matrices) == 2:
        g, h = matrices
    else:
        g, h = None, matrices[0]

    pre_permuted = None
    if args.pre_permute_cols:
        order = _parse_permutation(args.pre_permute_cols, h.n)
        if g is not None:
            g = butson.permute_columns(g, order)
        else:
            h = butson.permute_columns(h, order)
        pre_permuted = order

    if args.kind == "phi":
        family_order, family_count = h.n - 1, h.n - 2
    else:
        if h.n % 2:
            raise PlanError(f"psi needs an even order, got {h.n}")
        family_order, family_count = h.n // 2 - 1, h.n // 2 - 2
    tensors, family_info = _load_family(args.lsesc, family_order, family_count)

    plan_info: dict[str, Any] = {"lsesc": family_info}
    if pre_permuted is not None:
        plan_info["pre_permuted_cols"] = pre_permuted

    if args.kind == "phi":
        plan = scarpis.PhiPlan(
            h=h, tensors=tuple(tensors), g=g, deleted_row=args.delete_row
        )
        result = scarpis.phi(plan)
        plan_info["deleted_row"] = args.delete_row
        plan_text = f"deleted row {args.delete_row}"
    else:
        psi_plan = scarpis.PsiPlan(
            h=h,
            tensors=tuple(tensors),
            g=g,
            c1_pair=tuple(args.c1_pair) if args.c1_pair else None,
            c2_cell=tuple(args.c2_cell) if args.c2_cell else None,
        )
        resolved = scarpis.resolve_psi(psi_plan)
        result = scarpis.psi(resolved)
        plan_info["c1_pair"] = list(resolved.c1_pair)
        plan_info["c2_cell"] = list(resolved.c2_cell)
        plan_text = f"C1 pair {resolved.c1_pair}, C2 cell {resolved.c2_cell}"

    if args.dephase:
        result = butson.dephase(result)
    provenance = {
        "construction": args.kind,
        "inputs": [butson.matrix_digest(mat) for mat in matrices],
        "plan": plan_info,
        "dephased": bool(args.dephase),
    }
    butson.write_matrix(result, args.output, fmt=args.format, provenance=provenance)
    print(f"wrote BH({result.m},{result.n}) to {args.output}")
    print(f"plan: {plan_text}, LSESC {family_info['source']} order {family_order}")
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    if args.kind == "phi":
        if args.card is None or args.n is None:
            raise PlanError("count phi needs --mols, --card and --n")
        print(scarpis.count_phi_outputs(args.mols, args.card, args.n))
    else:
        if args.card2 is None or not args.dh:
            raise PlanError("count psi needs --mols, --card2 and --dh")
        print(scarpis.count_psi_outputs(args.mols, args.card2, args.dh))
    return 0


def cmd_lsesc(args: argparse.Namespace) -> int:
    if args.action == "classical":
        squares = latin.classical_lsesc_set(args.q)
        latin.write_latin_set(squares, args.output)
        print(f"wrote {len(squares)} squares of order {args.q} to {args.output}")
        return 0
    squares = latin.read_latin_set(args.path)
    if args.action == "conjugate":
        conjugated = [latin.conjugate_lsesc_mols(square) for square in squares]
        latin.write_latin_set(conjugated, args.output)
        print(f"wrote {len(conjugated)} conjugated squares to {args.output}")
        return 0
    # check
    pairs = [
        (i, j) for i in range(len(squares)) for j in range(i + 1, len(squares))
    ]
    lsesc_ok = all(latin.are_lsesc(squares[i], squares[j]) for i, j in pairs)
    mols_ok = all(latin.are_mols(squares[i], squares[j]) for i, j in pairs)
    print(f"squares: {len(squares)}, order {squares[0].n}")
    print(f"pairwise LSESC: {'yes' if lsesc_ok else 'no'}")
    print(f"pairwise MOLS: {'yes' if mols_ok else 'no'}")
    return 0 if lsesc_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhmat",
        description="Construct and verify Butson-Hadamard matrices with exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fourier = sub.add_parser("fourier", help="write the order-n Fourier matrix")
    p_fourier.add_argument("n", type=int)
    p_fourier.add_argument("output", type=Path)
    p_fourier.add_argument("--format", choices=("json", "text"), default="json")
    p_fourier.set_defaults(func=cmd_fourier)

    p_verify = sub.add_parser("verify", help="exactly verify a matrix file")
    p_verify.add_argument("path", type=Path)
    p_verify.add_argument(
        "--analyze", action="store_true", help="also report C1 pairs, C2 cells and d_H"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_construct = sub.add_parser("construct", help="run a construction on input files")
    p_construct.add_argument("kind", choices=("phi", "psi"))
    p_construct.add_argument("inputs", nargs="+", type=Path, metavar="INPUT")
    p_construct.add_argument("-o", "--output", required=True, type=Path)
    p_construct.add_argument("--format", choices=("json", "text"), default="json")
    p_construct.add_argument("--delete-row", type=int, default=1, metavar="T")
    p_construct.add_argument(
        "--c1-pair", type=int, nargs=2, metavar=("T", "S"), default=None
    )
    p_construct.add_argument(
        "--c2-cell", type=int, nargs=2, metavar=("I", "J"), default=None
    )
    p_construct.add_argument(
        "--lsesc",
        default="classical",
        help="'classical' or a path to a Latin-square set file",
    )
    p_construct.add_argument(
        "--pre-permute-cols",
        default=None,
        metavar="PERM",
        help="column permutation applied to the x-source first, e.g. '1,4,3,5,2,6'",
    )
    p_construct.add_argument("--dephase", action="store_true")
    p_construct.set_defaults(func=cmd_construct)

    p_count = sub.add_parser("count", help="evaluate the output-count formulas")
    p_count.add_argument("kind", choices=("phi", "psi"))
    p_count.add_argument("--mols", type=int, required=True)
    p_count.add_argument("--card", type=int, default=None)
    p_count.add_argument("--card2", type=int, default=None)
    p_count.add_argument("--n", type=int, default=None)
    p_count.add_argument("--dh", type=int, nargs="+", default=None)
    p_count.set_defaults(func=cmd_count)

    p_lsesc = sub.add_parser("lsesc", help="emit, check or conjugate LSESC families")
    lsesc_sub = p_lsesc.add_subparsers(dest="action", required=True)
    p_classical = lsesc_sub.add_parser("classical")
    p_classical.add_argument("q", type=int)
    p_classical.add_argument("output", type=Path)
    p_classical.set_defaults(func=cmd_lsesc)
    p_check = lsesc_sub.add_parser("check")
    p_check.add_argument("path", type=Path)
    p_check.set_defaults(func=cmd_lsesc)
    p_conj = lsesc_sub.add_parser("conjugate")
    p_conj.add_argument("path", type=Path)
    p_conj.add_argument("output", type=Path)
    p_conj.set_defaults(func=cmd_lsesc)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (PlanError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
