"""Command line front end.

Subcommands: simulate, predict, verify, sweep, compare. All output is CSV on
standard output (or ``--out`` for sweep). Exit codes: 0 success, 1 usage or
validation error, 2 formula/simulation mismatch in ``verify``.
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

from listaccess.core import CostModel, ListState
from listaccess.errors import InvalidParam, ListAccessError
from listaccess.policies import PolicyKind, SimulationResult, serve
from listaccess.predictor import Prediction, predict, predict_t1, predict_t2
from listaccess.seqgen import (
    RequestSequence,
    SequenceKind,
    SequenceSpec,
    parse_sequence_file,
    random_permutation,
    random_subsequence,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2

RECORD_COLUMNS = (
    "n", "k", "type", "algorithm", "model", "seed",
    "simulated_cost", "predicted_cost", "match",
)
TRACE_COLUMNS = ("j", "item", "position", "cost")
SWEEP_COLUMNS = ("swept_var", "C1", "C2")
FIGURE_DEFAULT_K = 5
FIGURE_DEFAULT_N = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for mismatches here.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class ExperimentRecord:
    n: int
    k: Optional[int]
    type: str
    algorithm: str
    model: str
    seed: Optional[int]
    simulated_cost: int
    predicted_cost: Optional[int] = None

    @property
    def match(self) -> Optional[bool]:
        if self.predicted_cost is None:
            return None
        return self.simulated_cost == self.predicted_cost

    def row(self) -> List[str]:
        def cell(value) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)

        return [
            cell(self.n), cell(self.k), self.type, self.algorithm, self.model,
            cell(self.seed), cell(self.simulated_cost), cell(self.predicted_cost),
            cell(self.match),
        ]


def _writer(stream: TextIO):
    return csv.writer(stream, lineterminator="\n")


def _id_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        start, stop = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 1..10, got {text!r}")
    if start < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"range must satisfy 1 <= start <= stop, got {text!r}")
    return start, stop


def _add_sequence_flags(p: argparse.ArgumentParser, with_file: bool = True) -> None:
    p.add_argument("--n", type=int, help="list size")
    p.add_argument("--k", type=int, help="number of block repetitions")
    p.add_argument("--type", choices=[t.value for t in SequenceKind], dest="seq_type")
    p.add_argument("--perm", type=_id_list, help="T3 permutation, e.g. 2,1,3")
    p.add_argument("--subseq", type=_id_list, help="T4 block, e.g. 1,3")
    p.add_argument("--q", type=int, help="T4 block size when --subseq is drawn at random")
    p.add_argument("--seed", type=int, help="seed for a random --perm/--subseq")
    p.add_argument("--strict", action="store_true", help="T4 block must follow list order")
    if with_file:
        p.add_argument("--seq-file", type=Path, help="read requests from a sequence file")


def _build_spec(args) -> SequenceSpec:
    if args.n is None or args.k is None or args.seq_type is None:
        raise UsageError("--n, --k and --type are required (or use --seq-file)")
    kind = SequenceKind(args.seq_type)
    perm, subseq = args.perm, args.subseq
    if kind is SequenceKind.T3 and perm is None:
        if args.seed is None:
            raise UsageError("t3 needs --perm or --seed")
        perm = random_permutation(args.n, args.seed, exclude_identity_and_reversal=True)
    if kind is SequenceKind.T4 and subseq is None:
        if args.seed is None or args.q is None:
            raise UsageError("t4 needs --subseq or both --q and --seed")
        subseq = random_subsequence(args.n, args.q, args.seed, strict=args.strict)
    return SequenceSpec(kind, args.n, args.k, perm=perm, subseq=subseq, strict=args.strict)


def _load_workload(args) -> Tuple[RequestSequence, Optional[SequenceSpec]]:
    if getattr(args, "seq_file", None) is not None:
        if args.seq_type is not None:
            raise UsageError("--seq-file and --type are mutually exclusive")
        try:
            data = args.seq_file.read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.seq_file}: {exc.strerror}")
        _, seq = parse_sequence_file(data)
        return seq, None
    spec = _build_spec(args)
    return spec.build(), spec


def _record(
    seq: RequestSequence,
    spec: Optional[SequenceSpec],
    algo: PolicyKind,
    model: CostModel,
    seed: Optional[int],
    result: SimulationResult,
) -> ExperimentRecord:
    predicted = None
    if spec is not None and algo is PolicyKind.MTF:
        predicted = predict(spec).for_model(model)
    return ExperimentRecord(
        n=seq.n,
        k=spec.k if spec is not None else None,
        type=spec.kind.value.upper() if spec is not None else "custom",
        algorithm=algo.value.upper(),
        model=model.value,
        seed=seed,
        simulated_cost=result.total_cost,
        predicted_cost=predicted,
    )


def cmd_simulate(args, out: TextIO) -> int:
    seq, spec = _load_workload(args)
    algo, model = PolicyKind(args.algo), CostModel(args.model)
    result = serve(ListState.initial(seq.n), seq, algo, model)
    w = _writer(out)
    w.writerow(RECORD_COLUMNS)
    w.writerow(_record(seq, spec, algo, model, args.seed, result).row())
    if args.trace:
        out.write("\n")
        w.writerow(TRACE_COLUMNS)
        for r in result.per_request:
            w.writerow((r.j, r.item, r.position, r.cost))
    return EXIT_OK


def cmd_compare(args, out: TextIO) -> int:
    seq, spec = _load_workload(args)
    model = CostModel(args.model)
    initial = ListState.initial(seq.n)
    w = _writer(out)
    w.writerow(RECORD_COLUMNS)
    for algo in PolicyKind:
        result = serve(initial, seq, algo, model)
        w.writerow(_record(seq, spec, algo, model, args.seed, result).row())
    return EXIT_OK


def cmd_predict(args, out: TextIO) -> int:
    spec = _build_spec(args)
    p: Prediction = predict(spec)
    w = _writer(out)
    w.writerow(("n", "k", "type", "block_length", "first_block", "stabilized", "total", "partial_total"))
    w.writerow((spec.n, spec.k, spec.kind.value.upper(), p.block_length,
                p.first_block, p.stabilized, p.total, p.partial_total))
    return EXIT_OK


def verification_records(
    max_n: int, max_k: int, samples: int, seed: int, model: CostModel = CostModel.FULL
) -> List[ExperimentRecord]:
    """Predict-vs-serve records for every type over ``1..max_n`` x ``1..max_k``.

    T3 needs ``n >= 3`` and T4 ``n >= 2``; each random instance gets its own
    seed, drawn in row order from ``seed``, and recorded for replay.
    """
    rng = random.Random(seed)
    records = []

    def run(spec: SequenceSpec, instance_seed: Optional[int]) -> None:
        seq = spec.build()
        result = serve(ListState.initial(spec.n), seq, PolicyKind.MTF, model)
        records.append(_record(seq, spec, PolicyKind.MTF, model, instance_seed, result))

    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            run(SequenceSpec(SequenceKind.T1, n, k), None)
            run(SequenceSpec(SequenceKind.T2, n, k), None)
            if n >= 3:
                for _ in range(samples):
                    s = rng.randrange(2**32)
                    perm = random_permutation(n, s, exclude_identity_and_reversal=True)
                    run(SequenceSpec(SequenceKind.T3, n, k, perm=perm), s)
            if n >= 2:
                for _ in range(samples):
                    s = rng.randrange(2**32)
                    q = random.Random(s).randint(1, n - 1)
                    run(SequenceSpec(SequenceKind.T4, n, k, subseq=random_subsequence(n, q, s)), s)
    return records


def cmd_verify(args, out: TextIO) -> int:
    if args.max_n < 1 or args.max_k < 1 or args.samples < 0:
        raise UsageError("--max-n and --max-k must be >= 1, --samples >= 0")
    records = verification_records(args.max_n, args.max_k, args.samples, args.seed, CostModel(args.model))
    if args.self_test_corrupt and records:
        r = records[0]
        records[0] = ExperimentRecord(r.n, r.k, r.type, r.algorithm, r.model, r.seed,
                                      r.simulated_cost, r.predicted_cost + 1)
    w = _writer(out)
    w.writerow(RECORD_COLUMNS)
    for r in records:
        w.writerow(r.row())
    bad = [r for r in records if not r.match]
    if bad:
        print(f"mismatch: {','.join(bad[0].row())} ({len(bad)} of {len(records)} rows)",
              file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def sweep_rows(figure: int, start: int, stop: int, n: int = FIGURE_DEFAULT_N,
               k: int = FIGURE_DEFAULT_K) -> List[Tuple[int, int, int]]:
    """(swept value, T1 total, T2 total) series for the three comparison plots.

    Figure 2 sweeps n at fixed k, figure 3 sweeps k at fixed n and figure 4
    sweeps n = k together.
    """
    rows = []
    for t in range(start, stop + 1):
        if figure == 2:
            nn, kk = t, k
        elif figure == 3:
            nn, kk = n, t
        elif figure == 4:
            nn, kk = t, t
        else:
            raise InvalidParam(f"unknown figure {figure}")
        rows.append((t, predict_t1(nn, kk).total, predict_t2(nn, kk).total))
    return rows


def cmd_sweep(args, out: TextIO) -> int:
    start, stop = args.range
    rows = sweep_rows(args.figure, start, stop, n=args.n, k=args.k)
    buf = io.StringIO()
    w = _writer(buf)
    w.writerow(SWEEP_COLUMNS)
    w.writerows(rows)
    if args.out is None:
        out.write(buf.getvalue())
    else:
        try:
            args.out.write_text(buf.getvalue(), encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="listaccess", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("simulate", help="serve a request sequence and report its cost")
    _add_sequence_flags(p)
    p.add_argument("--algo", choices=[a.value for a in PolicyKind], default="mtf")
    p.add_argument("--model", choices=[m.value for m in CostModel], default="full")
    p.add_argument("--trace", action="store_true", help="append a per-request trace")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("predict", help="closed-form MTF cost for a T1-T4 sequence")
    _add_sequence_flags(p, with_file=False)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", help="check predictions against simulation over a sweep")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--samples", type=int, default=5, help="random T3/T4 instances per (n, k)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--model", choices=[m.value for m in CostModel], default="full")
    p.add_argument("--self-test-corrupt", action="store_true",
                   help="perturb one prediction to exercise the mismatch path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="T1/T2 cost series for the comparison figures")
    p.add_argument("--figure", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--range", type=_int_range, required=True, help="inclusive, e.g. 1..10")
    p.add_argument("--n", type=int, default=FIGURE_DEFAULT_N, help="fixed n for figure 3")
    p.add_argument("--k", type=int, default=FIGURE_DEFAULT_K, help="fixed k for figure 2")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", help="MTF, TRANS and FC on the same sequence")
    _add_sequence_flags(p)
    p.add_argument("--model", choices=[m.value for m in CostModel], default="full")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except ListAccessError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
