"""Command-line interface: ``qgfft {gen,spectrum,basis,fft,ifft,filter,verify}``.

Exit codes: 0 success, 2 invalid graph, 3 shape/format/file error,
4 verification failure.
"""
import argparse
import math
import sys

from . import io
from .eigenbasis import primitive_spectrum
from .fft import is_power_of_two
from .graph import (
    Graph,
    GraphValidationError,
    VertexSignal,
    bowtie,
    complete_bipartite,
    cycle_graph,
    validate,
)
from .spectrum import eigensolve_delta1
from .transform import build_basis, dft_from_json, dft_to_json, fft_forward, fft_inverse, spectral_filter
from .verification import run_checks

EXIT_OK, EXIT_GRAPH, EXIT_FORMAT, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(ValueError):
    """Bad shapes, sizes or file contents; mapped to exit code 3."""


def load_graph(path):
    graph = Graph.from_json(io.load_json(path))
    validate(graph)
    return graph


def _check_N(N):
    if N is None or N < 2 or not is_power_of_two(N):
        raise UsageError(f"N must be a power of two >= 2, got {N}")
    return N


def _infer_N(size, graph):
    n1, rem = divmod(size - graph.vertex_count, graph.edge_count)
    if rem or n1 < 1:
        raise UsageError(f"{size} values do not fit V + (N - 1) E for this graph")
    return n1 + 1


def load_signal(path, graph, N=None):
    """Signal JSON, or ``index,re,im`` CSV when the path ends in ``.csv``."""
    if str(path).lower().endswith(".csv"):
        values = io.signal_from_csv(path)
        sig = VertexSignal(_infer_N(len(values), graph), values)
    else:
        sig = VertexSignal.from_json(io.load_json(path))
    if N is not None and N != sig.N:
        raise UsageError(f"--N {N} does not match the signal (N={sig.N})")
    _check_N(sig.N)
    if len(sig) != graph.refined_size(sig.N):
        raise UsageError(f"signal has {len(sig)} values, expected {graph.refined_size(sig.N)}")
    return sig


def write_signal(path, sig):
    if path is not None and str(path).lower().endswith(".csv"):
        io.write_text(path, io.signal_to_csv(sig.values))
    else:
        io.write_text(path, io.dumps(sig.to_json()))


def _fmt(x):
    return "%.12g" % x


def cmd_gen(args):
    if args.family == "k-bipartite":
        if len(args.params) != 2:
            raise UsageError("usage: gen k-bipartite M N")
        graph = complete_bipartite(*args.params)
    elif args.family == "cycle":
        if len(args.params) != 1:
            raise UsageError("usage: gen cycle V")
        graph = cycle_graph(args.params[0])
    else:
        if args.params:
            raise UsageError("bowtie takes no parameters")
        graph = bowtie()
    io.write_text(args.output, io.dumps(graph.to_json(), indent=2))
    return EXIT_OK


def cmd_spectrum(args):
    graph = load_graph(args.graph)
    spec = eigensolve_delta1(graph)
    prim = primitive_spectrum(graph, spec)
    lines = [f"graph {graph.name or '(unnamed)'}: V={graph.vertex_count} E={graph.edge_count}",
             "mu                   multiplicity"]
    lines += [f"{_fmt(mu):<20} {k}" for mu, k in zip(spec.mu, spec.multiplicity)]
    lines += ["omega                omega/pi     dim   kind"]
    lines += [f"{_fmt(b.omega):<20} {_fmt(b.omega / math.pi):<12} {b.dim:<5} {b.kind}" for b in prim.blocks]
    lines.append(f"total dimension {sum(prim.dims)} = 2E")
    print("\n".join(lines))
    if args.output is not None:
        io.write_text(args.output, io.dumps(spec.to_json(), indent=2))
    return EXIT_OK


def cmd_basis(args):
    graph = load_graph(args.graph)
    io.write_text(args.output, io.dumps(primitive_spectrum(graph).to_json()))
    return EXIT_OK


def cmd_fft(args):
    graph = load_graph(args.graph)
    sig = load_signal(args.signal, graph, args.N)
    basis = build_basis(graph, sig.N)
    dft = fft_forward(sig, basis)
    io.write_text(args.output, io.dumps(dft_to_json(dft, basis), indent=1))
    return EXIT_OK


def cmd_ifft(args):
    graph = load_graph(args.graph)
    data = io.load_json(args.dft)
    try:
        inferred = 2 * (max(int(b["m"]) for b in data["blocks"]) + 1)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed DFT JSON: {exc}") from exc
    N = _check_N(args.N if args.N is not None else inferred)
    if N != inferred:
        raise UsageError(f"--N {N} does not match the DFT blocks (N={inferred})")
    basis = build_basis(graph, N)
    write_signal(args.output, fft_inverse(dft_from_json(data, basis), basis))
    return EXIT_OK


def cmd_filter(args):
    graph = load_graph(args.graph)
    sig = load_signal(args.signal, graph, args.N)
    basis = build_basis(graph, sig.N)
    cut = args.keep_below
    write_signal(args.output, spectral_filter(sig, basis, lambda lam: lam < cut))
    return EXIT_OK


def cmd_verify(args):
    graph = load_graph(args.graph)
    N = _check_N(args.N)
    checks = run_checks(graph, N, tolerance=args.tolerance)
    passed = all(c.passed for c in checks)
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name}: measured {c.measured:.3e}, tolerance {c.tolerance:.1e}")
    print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    if args.output is not None:
        summary = {
            "graph": graph.name,
            "N": N,
            "passed": passed,
            "checks": [c.to_json() for c in checks],
        }
        io.write_text(args.output, io.dumps(summary, indent=2))
    return EXIT_OK if passed else EXIT_VERIFY


def build_parser():
    parser = argparse.ArgumentParser(prog="qgfft", description="Fourier transforms on refined quantum graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_, graph=True):
        p = sub.add_parser(name, help=help_)
        if graph:
            p.add_argument("graph", help="graph JSON file")
        p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")
        p.set_defaults(func=func)
        return p

    p = command("gen", cmd_gen, "write a graph from a named family", graph=False)
    p.add_argument("family", choices=("k-bipartite", "cycle", "bowtie"))
    p.add_argument("params", nargs="*", type=int)

    command("spectrum", cmd_spectrum, "print discrete and primitive spectra; --output writes JSON")
    command("basis", cmd_basis, "primitive eigenfunction blocks as JSON")

    p = command("fft", cmd_fft, "forward transform of a signal")
    p.add_argument("signal", help="signal JSON or .csv")
    p.add_argument("--N", type=int, default=None)

    p = command("ifft", cmd_ifft, "inverse transform of a DFT file")
    p.add_argument("dft", help="DFT JSON")
    p.add_argument("--N", type=int, default=None)

    p = command("filter", cmd_filter, "keep only eigenvalues strictly below a cutoff")
    p.add_argument("signal", help="signal JSON or .csv")
    p.add_argument("--keep-below", type=float, required=True, metavar="LAMBDA")
    p.add_argument("--N", type=int, default=None)

    p = command("verify", cmd_verify, "run the invariant checks at one size")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=None, help="replace every default tolerance")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphValidationError as exc:
        print(f"qgfft: invalid graph: {exc}", file=sys.stderr)
        return EXIT_GRAPH
    except (ValueError, OSError) as exc:
        print(f"qgfft: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
