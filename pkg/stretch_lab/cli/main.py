"""Command line front end

    stretch-lab <subcommand> --input FILE [--t-min R --t-max R --steps N]
        [--format table|csv|svg] [--output FILE] [--cut N] [--apply-witness]

Exit codes: 0 success, 2 parse or invariant error, 3 numeric domain error,
4 I/O error.
"""
import argparse
import logging
import sys

import pandas as pd

from stretch_lab.exceptions import (
    CancellationError,
    DivisionByZero,
    DomainError,
    EmptySelection,
    IndeterminateError,
    InvariantError,
    IoError,
    ParseError,
    ProportionalWeights,
    UnknownComponent,
)
from stretch_lab.utils import write_output
from stretch_lab.version import version

from .compare import run_compare
from .config import FORMATS, QUANTITIES, SweepConfig
from .document import InputDocument, format_document, parse_input
from .sweep import run_asymptote, run_height, run_leaf, run_sweep, run_truncate
from .writers import WRITERS, SvgWriter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERIC = 3
EXIT_IO = 4

NUMERIC_ERRORS = (
    DomainError,
    CancellationError,
    DivisionByZero,
    IndeterminateError,
    EmptySelection,
    UnknownComponent,
    ProportionalWeights,
)

SVG_COLUMNS = {
    "sweep": ["h_prime", "h", "h_star", "log_asymptote"],
    "leaf": ["h_star", "leaf_length"],
    "height": ["h", "h_max"],
    "asymptote": ["asymptotic_length"],
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="JSON document, - for stdin")
    common.add_argument("--output", default=None, help="output file (default stdout)")
    common.add_argument("--format", default="table", choices=FORMATS, dest="fmt")
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for progress, -vv for debugging output",
    )

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--t-min", type=float, default=0.0)
    grid.add_argument("--t-max", type=float, default=4.0)
    grid.add_argument("--steps", type=int, default=41)
    grid.add_argument(
        "--quantities",
        default=None,
        help="comma separated subset of %s" % ",".join(QUANTITIES),
    )

    parser = argparse.ArgumentParser(
        prog="stretch-lab",
        description="Lengths and distances along cylindrical stretch rays",
    )
    parser.add_argument("--version", action="version", version=version)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", parents=[common, grid], help="core length brackets")
    p.add_argument("--cut", type=int, default=0)

    p = sub.add_parser("compare", parents=[common, grid], help="two ray analysis")
    p.add_argument(
        "--apply-witness",
        action="store_true",
        help="also bound the distances with h shifted by the witness offset",
    )
    p.add_argument(
        "--curves",
        action="store_true",
        help="add the transverse curves of the document to the bounds",
    )
    p.add_argument("--rays", default=None, help="ids of the two rays, as g,h")

    p = sub.add_parser("leaf", parents=[common, grid], help="closed horocyclic leaves")
    p.add_argument("--d", type=float, default=None, help="depth of the leaf")

    p = sub.add_parser("height", parents=[common, grid], help="cylinder heights")
    p.add_argument("--cut", type=int, default=0)

    sub.add_parser("asymptote", parents=[common, grid], help="decay law constants")
    sub.add_parser("truncate", parents=[common], help="truncated cylinders")
    return parser


def _decode(data):
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as err:
        line = data.count(b"\n", 0, err.start) + 1
        column = err.start - data.rfind(b"\n", 0, err.start)
        raise ParseError(
            "invalid utf-8 byte 0x%02x" % data[err.start], line=line, column=column
        ) from err


def _read_document(path):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as f:
                data = f.read()
    except OSError as err:
        raise IoError("cannot read %s: %s" % (path, err)) from err
    return parse_input(_decode(data))


def _config(args):
    quantities = None
    if args.quantities is not None:
        quantities = [q.strip() for q in args.quantities.split(",") if q.strip()]
    return SweepConfig(
        t_min=args.t_min,
        t_max=args.t_max,
        steps=args.steps,
        quantities=quantities,
        output=args.output,
        fmt=args.fmt,
    )


def _pick_rays(doc, names):
    if names is not None:
        ids = [name.strip() for name in names.split(",")]
        if len(ids) != 2:
            raise ParseError("--rays needs two ids, got %r" % names)
        return doc.ray(ids[0]), doc.ray(ids[1])
    if len(doc.rays) < 2:
        raise ParseError("compare needs two rays", field="rays")
    return doc.rays[0], doc.rays[1]


def _writer(cfg, command, header=None):
    if cfg.fmt == "svg":
        return SvgWriter(header, columns=SVG_COLUMNS.get(command), title=command)
    return WRITERS[cfg.fmt](header)


def run(args):
    doc = _read_document(args.input)

    if args.command == "truncate":
        text = format_document(
            InputDocument([run_truncate(ray) for ray in doc.rays], doc.curves)
        )
        if args.output is None:
            sys.stdout.write(text)
        else:
            write_output(args.output, text)
        return

    if len(doc.rays) == 0:
        raise ParseError("document has no rays", field="rays")
    cfg = _config(args)
    logger.info("%s with %r", args.command, cfg)

    if args.command == "compare":
        g, h = _pick_rays(doc, args.rays)
        report, lines, frame = run_compare(
            g,
            h,
            cfg,
            curves=doc.curves if args.curves else None,
            apply_witness=args.apply_witness,
        )
        logger.info("%r", report)
        _writer(cfg, args.command, lines).write(frame, cfg.output)
        return

    frames = []
    for ray in doc.rays:
        if args.command == "sweep":
            frames.append(run_sweep(ray, cfg, cut=args.cut))
        elif args.command == "leaf":
            frames.append(run_leaf(ray, cfg, d=args.d))
        elif args.command == "height":
            frames.append(run_height(ray, cfg, cut=args.cut))
        else:
            frames.append(run_asymptote(ray, cfg))

    header = None
    if len(frames) > 1:
        # core labels are only unique within a ray
        header = ["rays %s" % ",".join(ray.ray_id for ray in doc.rays)]
        for ray, frame in zip(doc.rays, frames):
            frame["core_id"] = ["%s/%s" % (ray.ray_id, j) for j in frame["core_id"]]
    frame = pd.concat(frames, ignore_index=True)
    _writer(cfg, args.command, header).write(frame, cfg.output)


def main(argv=None):
    """Runs the command line and returns the exit code"""
    args = build_parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        run(args)
    except (ParseError, InvariantError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_INVALID
    except NUMERIC_ERRORS as err:
        print("numeric error: %s" % err, file=sys.stderr)
        return EXIT_NUMERIC
    except IoError as err:
        print("i/o error: %s" % err, file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
