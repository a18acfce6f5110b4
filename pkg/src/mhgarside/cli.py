"""Command-line entry point.

Exit status: 0 when the requested check passes, 1 when it fails, 2 when the
input cannot be read.
"""

import argparse
import sys
from contextlib import contextmanager

from . import garside as G
from .arrangement import check_proper, check_simplicial, format_covectors, sign_string
from .cells import format_complex
from .errors import (
    ArrangementError,
    ComplexError,
    MhGarsideError,
    NotCentrallySymmetric,
    WordFormatError,
)
from .fixtures import load_fixture, load_input
from .hemisphere import HemisphereMaps, PropertyResult, check_lmh, check_mh, check_qmh, find_involution
from .matroid import check_om_circuit_axioms, circuits_from_topes, om_rank
from .oracle import PathOracle
from .presentation import abelianization, format_presentation, presentation, reduce_presentation
from .salvetti import build_salvetti
from .verify import verify_garside

PROPERTIES = ("qmh", "lmh", "mh", "flat", "involutive", "simplicial", "proper", "symmetric", "om-axioms")
BUILD_TARGETS = ("dual", "completed", "salvetti", "completed-salvetti", "presentation")


class InputError(Exception):
    pass


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _load(args):
    if bool(args.fixture) == bool(args.input):
        raise InputError("give exactly one of --fixture and --input")
    try:
        return load_fixture(args.fixture) if args.fixture else load_input(args.input)
    except (ArrangementError, ComplexError, OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    except MhGarsideError as exc:
        raise InputError(str(exc)) from exc


def _lattice(loaded, what):
    if loaded.lattice is None:
        raise InputError(f"{what} needs an arrangement, covector or wiring input")
    return loaded.lattice


def _fmt_witness(q, witness):
    parts = []
    for w in witness:
        if isinstance(w, int) and q is not None and 0 <= w < len(q):
            cov = q.covector
            parts.append(sign_string(cov[w]) if cov is not None else q.labels[w])
        elif isinstance(w, tuple) and all(isinstance(s, int) and s in (-1, 0, 1) for s in w) and w:
            parts.append(sign_string(w))
        else:
            parts.append(str(w))
    return "(" + ",".join(parts) + ")"


def _line(q, res):
    out = f"{res.name} {'PASS' if res.passed else 'FAIL'}"
    if not res.passed and res.witness is not None:
        out += " witness=" + _fmt_witness(q, res.witness)
    if res.detail:
        out += f" [{res.detail}]"
    return out


# ------------------------------------------------------------- commands ---

def _check_one(loaded, prop, args):
    """Returns a list of PropertyResult and the complex used (for labels)."""
    q = None
    if prop in ("qmh", "lmh", "mh", "flat", "involutive"):
        q = loaded.complex(args.completed)
    if prop == "qmh":
        qmh, add, agree = check_qmh(q)
        extra = PropertyResult("formulations_agree", agree)
        return [qmh, add, extra], q
    if prop == "lmh":
        return [check_lmh(q)], q
    if prop == "mh":
        rep = check_mh(q)
        return [rep.qmh, rep.lmh, rep.mh, rep.additive_identity], q
    if prop == "flat":
        maps = HemisphereMaps(q)
        if not maps.total:
            return [PropertyResult("flat", False, maps.first_tie[:2], "hemisphere maps have ties")], q
        ok, witness = PathOracle(q, maps, confine_to_cell=args.confine_to_cell).check_flat()
        return [PropertyResult("flat", ok, witness and (witness[0], witness[1]),
                               "" if ok else f"{witness[2]} !~ {witness[3]}")], q
    if prop == "involutive":
        try:
            phi = find_involution(q)
        except MhGarsideError as exc:
            return [PropertyResult("involutive", False, exc.witness, str(exc))], q
        return [PropertyResult("involutive", True, detail=f"phi has {len(phi.phi)} vertices")], q
    if prop == "simplicial":
        if loaded.lattice is None:
            ok, witness = G.star_is_boolean(loaded.given_complex)
            return [PropertyResult("simplicial", ok, witness)], loaded.given_complex
        ok, witness = check_simplicial(loaded.lattice)
        if ok:
            return [PropertyResult("simplicial", True)], None
        tope, facets, rank = witness
        return [PropertyResult("simplicial", False, (tope, f"facets={facets}", f"rank={rank}"))], None
    if prop == "proper":
        if loaded.normals is not None:
            return [PropertyResult("proper", check_proper(loaded.normals))], None
        _lattice(loaded, "proper")
        return [PropertyResult("proper", True, detail="assumed for covector input")], None
    if prop == "symmetric":
        fl = _lattice(loaded, "symmetric")
        bad = [x for x in fl.covectors if tuple(-s for s in x) not in fl]
        return [PropertyResult("symmetric", not bad, (bad[0],) if bad else None)], None
    if prop == "om-axioms":
        cs = circuits_from_topes(_lattice(loaded, "om-axioms"))
        rep = check_om_circuit_axioms(cs)
        out = []
        for name, (ok, wit) in (("incomparable", rep.incomparable), ("star_closed", rep.star_closed),
                                ("elimination", rep.elimination)):
            out.append(PropertyResult(f"axiom_{name}", ok, wit))
        detail = f"{len(cs)} circuits"
        if len(cs):
            detail += f", rank {om_rank(cs)}"
        out.append(PropertyResult("om-axioms", rep.passed, detail=detail))
        return out, None
    raise InputError(f"unknown property {prop!r}")


def cmd_check(args):
    try:
        loaded = _load(args)
    except InputError as exc:
        if args.property == "symmetric" and isinstance(exc.__cause__, NotCentrallySymmetric):
            print(f"symmetric FAIL witness={_fmt_witness(None, exc.__cause__.witness or ())}")
            return 1
        raise
    results, q = _check_one(loaded, args.property, args)
    for r in results:
        print(_line(q, r))
    return 0 if all(r.passed for r in results) else 1


def cmd_mh_report(args):
    args.property = "mh"
    return cmd_check(args)


def cmd_ingest(args):
    loaded = _load(args)
    print(f"input {loaded.name} kind={loaded.kind}")
    if loaded.lattice is not None:
        fl = loaded.lattice
        print(f"elements {fl.n} covectors {len(fl)} topes {len(fl.topes)} rank {fl.rank}")
        if args.output:
            with _output(args.output) as fh:
                fh.write(format_covectors(fl))
    q = loaded.complex(args.completed)
    print("cells " + " ".join(f"dim{d}={c}" for d, c in enumerate(q.cell_counts())))
    return 0


def cmd_build(args):
    loaded = _load(args)
    target = args.target
    if target == "dual":
        text = format_complex(loaded.dual)
    elif target == "completed":
        text = format_complex(loaded.completed)
    elif target in ("salvetti", "completed-salvetti"):
        q = loaded.completed if target == "completed-salvetti" else loaded.dual
        text = format_complex(build_salvetti(q).complex)
    else:
        q = loaded.completed
        pres = presentation(build_salvetti(q))
        if args.reduce:
            pres = reduce_presentation(pres, q)
        text = format_presentation(pres)
        if args.reduce:
            rank, torsion = abelianization(pres)
            text = f"# abelianization rank {rank} torsion {torsion}\n" + text
    with _output(args.output) as fh:
        fh.write(text)
    return 0


def cmd_dual(args):
    args.target = "completed" if args.completed else "dual"
    args.reduce = False
    return cmd_build(args)


def cmd_circuits(args):
    fl = _lattice(_load(args), "circuits")
    cs = circuits_from_topes(fl)
    with _output(args.output) as fh:
        for c in cs.as_sign_vectors():
            fh.write(sign_string(c) + "\n")
    if len(cs):
        print(f"# {len(cs)} circuits, rank {om_rank(cs)}", file=sys.stderr)
    return 0


def _context(loaded, args):
    return G.make_context(loaded.completed, confine_to_cell=args.confine_to_cell)


def _read_words(args, sal):
    texts = list(args.word or [])
    for path in args.files:
        try:
            with open(path, encoding="utf-8") as fh:
                texts.extend(line.split("#", 1)[0] for line in fh)
        except OSError as exc:
            raise InputError(str(exc)) from exc
    words = []
    for text in texts:
        if text.strip():
            try:
                words.append(G.parse_word(sal, text))
            except WordFormatError as exc:
                raise InputError(str(exc)) from exc
    return words


def cmd_word(args):
    loaded = _load(args)
    ctx = _context(loaded, args)
    sal = build_salvetti(ctx.q, ctx.maps)
    words = _read_words(args, sal)
    if not words:
        raise InputError("no words given")
    if args.mode == "normal-form":
        for letters, source in words:
            print(G.format_element(ctx, G.word_to_element(ctx, sal, letters, source)))
        return 0
    if args.mode == "trivial":
        status = 0
        for letters, source in words:
            ok = G.is_trivial(ctx, sal, letters, source)
            print("TRIVIAL" if ok else "NONTRIVIAL")
            status = status or (0 if ok else 1)
        return status
    if len(words) != 2:
        raise InputError(f"equal needs exactly two words, got {len(words)}")
    (w1, s1), (w2, s2) = words
    e1 = G.word_to_element(ctx, sal, w1, s1)
    e2 = G.word_to_element(ctx, sal, w2, s2)
    ok = e1 == e2
    print("EQUAL" if ok else "NOT-EQUAL")
    return 0 if ok else 1


def cmd_verify(args):
    loaded = _load(args)
    try:
        ctx = _context(loaded, args)
    except MhGarsideError as exc:
        print(f"{type(exc).__name__}: {exc}")
        return 1
    report = verify_garside(ctx, args.max_len)
    for r in report.results:
        print(_line(None, r) + f" checked={report.counts[r.name]}")
    print("ALL PASS" if report.passed else "SOME FAIL")
    return 0 if report.passed else 1


def _read_paths(args):
    texts = list(args.path or [])
    for path in args.files:
        try:
            with open(path, encoding="utf-8") as fh:
                texts.extend(line.split("#", 1)[0] for line in fh)
        except OSError as exc:
            raise InputError(str(exc)) from exc
    return [t.split() for t in texts if t.strip()]


def cmd_oracle(args):
    loaded = _load(args)
    q = loaded.complex(args.completed)
    maps = HemisphereMaps(q)
    if not maps.total:
        print(f"oracle needs a QMH complex; tie at {maps.first_tie}")
        return 1
    o = PathOracle(q, maps, confine_to_cell=args.confine_to_cell)
    lab = q.labels

    def path_of(tokens):
        try:
            return tuple(q.label_index[t] for t in tokens)
        except KeyError as exc:
            raise InputError(f"unknown vertex {exc.args[0]!r}") from None

    def show(p):
        return " ".join(lab[v] for v in p)

    if args.op == "flat":
        ok, witness = o.check_flat()
        print("flat PASS" if ok else f"flat FAIL witness=({show(witness[2])} | {show(witness[3])})")
        return 0 if ok else 1
    paths = [path_of(t) for t in _read_paths(args)]
    if args.op == "minimal":
        if len(paths) != 1 or len(paths[0]) != 2:
            raise InputError("minimal needs one line with two vertices")
        for p in o.minimal_paths(*paths[0]):
            print(show(p))
        return 0
    if not paths:
        raise InputError("no paths given")
    try:
        if args.op == "class":
            for p in paths:
                c = o.class_of(p)
                print(f"rep {show(c.representative)} size {len(c.members)} length {c.length}")
        elif args.op == "moves":
            for p in paths:
                for r in sorted(o.moves(p)):
                    print(show(r))
        elif args.op == "divisors":
            for c in sorted(o.divisors(paths[0]), key=lambda c: (c.length, c.representative)):
                print(show(c.representative))
        elif args.op in ("meet", "join"):
            if len(paths) != 2:
                raise InputError(f"{args.op} needs two paths")
            c = getattr(o, args.op)(paths[0], paths[1])
            print(show(c.representative))
        elif args.op == "equivalent":
            if len(paths) != 2:
                raise InputError("equivalent needs two paths")
            ok = o.equivalent(*paths)
            print("EQUIVALENT" if ok else "NOT-EQUIVALENT")
            return 0 if ok else 1
    except MhGarsideError as exc:
        if isinstance(exc, (WordFormatError,)):
            raise InputError(str(exc)) from exc
        print(f"{type(exc).__name__}: {exc}")
        return 1
    return 0


# --------------------------------------------------------------- parser ---

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixture", help="bundled fixture: I22..I28 (any I2<m>), S4, GEN4, NONPAP")
    common.add_argument("--input", help="arrangement, covector, wiring or complex file")
    common.add_argument("--output", help="write results here instead of standard output")
    common.add_argument("--max-len", type=int, default=3, help="length bound for verify (default 3)")
    common.add_argument("--confine-to-cell", action="store_true",
                        help="only allow elementary moves whose paths stay inside one cell")
    common.add_argument("--completed", action="store_true",
                        help="use the completed complex (one extra top cell) for lattice inputs")

    parser = argparse.ArgumentParser(prog="mhgarside", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", parents=[common], help="read an input and summarize it")
    p.set_defaults(func=cmd_ingest)
    p = sub.add_parser("check", parents=[common], help="run one structural check")
    p.add_argument("property", choices=PROPERTIES)
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("mh-report", parents=[common], help="qmh, lmh, mh and the additive identity")
    p.set_defaults(func=cmd_mh_report)
    p = sub.add_parser("build", parents=[common], help="construct and write a derived object")
    p.add_argument("target", choices=BUILD_TARGETS)
    p.add_argument("--reduce", action="store_true", help="Tietze-reduce the presentation")
    p.set_defaults(func=cmd_build)
    p = sub.add_parser("dual", parents=[common], help="write the dual complex")
    p.set_defaults(func=cmd_dual)
    p = sub.add_parser("circuits", parents=[common], help="list the circuits")
    p.set_defaults(func=cmd_circuits)
    p = sub.add_parser("word", parents=[common], help="word problem in the fundamental groupoid")
    p.add_argument("mode", choices=("normal-form", "equal", "trivial"))
    p.add_argument("files", nargs="*", help="word files, one word per line")
    p.add_argument("--word", action="append", help="a word given inline (repeatable)")
    p.set_defaults(func=cmd_word)
    p = sub.add_parser("verify", parents=[common], help="bounded check of the Garside axioms")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("oracle", parents=[common], help="brute-force path operations")
    p.add_argument("op", choices=("class", "moves", "minimal", "flat", "divisors", "meet", "join", "equivalent"))
    p.add_argument("files", nargs="*", help="path files, one path (vertex ids) per line")
    p.add_argument("--path", action="append", help="a path given inline (repeatable)")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None):
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # file operands given after options land in ``extra``
    if extra and (not hasattr(args, "files") or any(x.startswith("-") for x in extra)):
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    if extra:
        args.files = list(args.files) + extra
    if getattr(args, "max_len", 1) < 1:
        print("error: --max-len must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MhGarsideError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
