"""``subwords`` command-line front end.

Exit status: 0 on success, 1 on domain errors (bad file, malformed SLP or
signature, foreign letters), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import _kernels
from .core import Alphabet, AlphabetError, ForeignLetterError, Word, arch_factorize
from .indexes import iota, zeta
from .signature import (
    SignatureFormatError,
    compose,
    iota_from_signature,
    loads,
    signature_of_word,
    to_json,
    zeta_from_signature,
)
from .slp import ExpansionTooLarge, SlpError, expand, expansion_length, parse_slp, slp_indexes

DOT = "·".encode("utf-8")


class CliError(Exception):
    pass


class UsageError(CliError):
    pass


def _out(args, text, payload):
    if args.json:
        sys.stdout.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        if isinstance(text, str):
            text = text.encode("utf-8")
        sys.stdout.flush()
        sys.stdout.buffer.write(text + b"\n")
        sys.stdout.buffer.flush()


def _read(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _word(args) -> Word:
    if args.file is not None:
        if args.word is not None:
            raise UsageError("give either WORD or --file, not both")
        data = _read(args.file)
    elif args.word is not None:
        data = os.fsencode(args.word)
    else:
        raise UsageError("a WORD or --file is required")
    alphabet = Alphabet(os.fsencode(args.alphabet)) if args.alphabet else None
    if alphabet is None and not data:
        raise CliError("cannot infer an alphabet from an empty word; pass --alphabet")
    return Word.from_bytes(data, alphabet)


def _latin(b: bytes) -> str:
    return b.decode("latin-1")


def cmd_factorize(args):
    u = _word(args)
    fact = arch_factorize(u)
    arches = fact.arches(u)
    rest = fact.rest(u)
    text = b"|".join(arches) + DOT + rest
    _out(
        args,
        text,
        {
            "arches": [_latin(a) for a in arches],
            "rest": _latin(rest),
            "lambdas": list(fact.lambdas),
            "iota": fact.arch_count,
        },
    )


def cmd_iota(args):
    value = iota(_word(args))
    _out(args, str(value), {"iota": value})


def cmd_zeta(args):
    value = zeta(_word(args))
    _out(args, str(value), {"zeta": value})


def _signature_text(sig) -> str:
    lines = [f"e = {_latin(sig.e)}"]
    for k, (count, rest) in enumerate(sig.entries):
        suffix = _latin(sig.suffix(k)) or "ε"
        rest_letters = to_json(sig)["entries"][k]["rest"]
        rest_text = "{" + ",".join(rest_letters) + "}" if rest_letters else "∅"
        lines.append(f"{suffix} ↦ ⟨{count}, {rest_text}⟩")
    lines.append(f"iota = {iota_from_signature(sig)}")
    lines.append(f"zeta = {zeta_from_signature(sig)}")
    return "\n".join(lines)


def cmd_signature(args):
    u = _word(args)
    if len(u) == 0:
        raise CliError("the empty word has no signature")
    sig = signature_of_word(u)
    _out(args, _signature_text(sig), to_json(sig))


def _load_signature(path):
    try:
        text = _read(path).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CliError(f"{path}: not UTF-8 text") from exc
    try:
        return loads(text)
    except SignatureFormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def cmd_compose(args):
    sig = compose(_load_signature(args.sig1), _load_signature(args.sig2))
    _out(args, _signature_text(sig), to_json(sig))


def cmd_slp(args):
    slp = parse_slp(_read(args.path))
    if args.iota or args.zeta:
        result = slp_indexes(slp)
        value = result.iota if args.iota else result.zeta
        key = "iota" if args.iota else "zeta"
        _out(args, str(value), {key: str(value)})
    elif args.length:
        n = expansion_length(slp)
        _out(args, str(n), {"length": str(n)})
    else:
        word = expand(slp, args.max_len)
        _out(args, word.text, {"expansion": _latin(word.text)})


def cmd_selftest(args):
    from .selftest import run_selftest

    report = run_selftest(
        seed=args.seed,
        cases=args.cases,
        max_len=args.max_len,
        alphabet_size=args.alphabet_size,
    )
    if args.json:
        _out(args, "", report.as_dict())
    else:
        for line in report.lines():
            print(line)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subwords",
        description="Subword universality indexes of words and SLP-compressed words.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s (backend: {_kernels.BACKEND})"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def word_command(name, func, help_text, file_ok=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("word", nargs="?", help="word as raw bytes")
        if file_ok:
            p.add_argument("--file", metavar="PATH", help="read the word from a file")
        else:
            p.set_defaults(file=None)
        p.add_argument(
            "--alphabet", metavar="CHARS", help="reference alphabet (default: letters of the word)"
        )
        common(p)
        p.set_defaults(func=func)
        return p

    word_command("factorize", cmd_factorize, "arch factorization", file_ok=False)
    word_command("iota", cmd_iota, "subword universality index")
    word_command("zeta", cmd_zeta, "circular subword universality index")
    word_command("signature", cmd_signature, "subword universality signature")

    p = sub.add_parser("compose", help="combine two signature JSON files")
    p.add_argument("sig1")
    p.add_argument("sig2")
    common(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("slp", help="work on an SLP file without expanding it")
    p.add_argument("path")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--iota", action="store_true")
    mode.add_argument("--zeta", action="store_true")
    mode.add_argument("--length", action="store_true")
    mode.add_argument("--expand", action="store_true")
    p.add_argument("--max-len", type=int, default=1 << 24, metavar="N")
    common(p)
    p.set_defaults(func=cmd_slp)

    p = sub.add_parser("selftest", help="run the oracle suites on random inputs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=2000)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--alphabet-size", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"subwords: error: {exc}", file=sys.stderr)
        return 2
    except (
        CliError,
        SlpError,
        ExpansionTooLarge,
        SignatureFormatError,
        AlphabetError,
        ForeignLetterError,
    ) as exc:
        print(f"subwords: error: {exc}", file=sys.stderr)
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
