"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when the inputs are
rejected (bad key, capacity exceeded, corrupt image, ...).
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import bench as bench_mod
from . import dh, elgamal, keyfile, lsb, pipeline, rsa
from .errors import StegoCryptError
from .metrics import CSV_HEADER, quality_report
from .numtheory import to_hex
from .raster import load_image, save_image


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _rng(seed: int | None) -> random.Random:
    return random.SystemRandom() if seed is None else random.Random(seed)


def _seed(text: str) -> int:
    value = int(text, 10)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit decimal integer")
    return value


def _read_input(args) -> bytes:
    if getattr(args, "message", None) is not None:
        return args.message.encode("utf-8")
    if args.infile == "-":
        return sys.stdin.buffer.read()
    return Path(args.infile).read_bytes()


def _write_output(data: bytes, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _add_message_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="infile", help="message file ('-' for stdin)")
    src.add_argument("--message", help="message text (UTF-8)")


def cmd_keygen(args) -> int:
    rng = _rng(args.seed)
    out = args.out
    if args.cipher == "rsa":
        pair = rsa.keygen(args.bits or 1024, args.e, rng)
        keyfile.write_key(pair.public, f"{out}.pub")
        keyfile.write_key(pair.private, f"{out}.priv")
    elif args.cipher == "elgamal":
        pub, priv = elgamal.keygen(args.bits or 512, rng)
        keyfile.write_key(pub, f"{out}.pub")
        keyfile.write_key(priv, f"{out}.priv")
    else:
        params = dh.gen_params(args.bits or 512, rng)
        pair = dh.gen_keypair(params, rng)
        Path(f"{out}.params").write_text(keyfile.dumps_dh(params), encoding="ascii")
        Path(f"{out}.pair").write_text(keyfile.dumps_dh(params, pair), encoding="ascii")
    return 0


def cmd_dh_demo(args) -> int:
    rng = _rng(args.seed)
    if args.params:
        params, _ = keyfile.loads_dh(Path(args.params).read_text(encoding="ascii"))
        params.validate()
    else:
        params = dh.gen_params(args.bits, rng)
    adam = dh.gen_keypair(params, rng)
    barbie = dh.gen_keypair(params, rng)
    s_a = dh.shared_secret(params, adam.private_key, barbie.public_key)
    s_b = dh.shared_secret(params, barbie.private_key, adam.public_key)
    lines = [
        ("p", to_hex(params.p)),
        ("g", to_hex(params.g)),
        ("q", to_hex(params.q)),
        ("a", to_hex(adam.private_key)),
        ("A", to_hex(adam.public_key)),
        ("b", to_hex(barbie.private_key)),
        ("B", to_hex(barbie.public_key)),
        ("S_A", to_hex(s_a)),
        ("S_B", to_hex(s_b)),
        ("agree", "yes" if s_a == s_b else "no"),
    ]
    print("\n".join(f"{k}={v}" for k, v in lines))
    return 0 if s_a == s_b else 2


def cmd_encrypt(args) -> int:
    key = keyfile.read_key(args.key)
    env = pipeline.seal(_read_input(args), key, _rng(args.seed))
    _write_output(pipeline.serialize_envelope(env), args.out)
    return 0


def cmd_decrypt(args) -> int:
    key = keyfile.read_key(args.key)
    env = pipeline.parse_envelope(Path(args.infile).read_bytes())
    _write_output(pipeline.open_envelope(env, key), args.out)
    return 0


def cmd_embed(args) -> int:
    cover = load_image(args.cover)
    data = _read_input(args)
    if args.mode == "delimited":
        stego = lsb.embed_delimited(cover, data)
    else:
        stego = lsb.embed_framed(cover, data)
    save_image(stego, args.out)
    return 0


def cmd_extract(args) -> int:
    stego = load_image(args.image)
    if args.mode == "delimited":
        data = lsb.extract_delimited(stego)
    else:
        data = lsb.extract_framed(stego)
    _write_output(data, args.out)
    return 0


def cmd_hide(args) -> int:
    cover = load_image(args.cover)
    key = keyfile.read_key(args.key)
    save_image(pipeline.hide(cover, _read_input(args), key, _rng(args.seed)), args.out)
    return 0


def cmd_reveal(args) -> int:
    stego = load_image(args.image)
    key = keyfile.read_key(args.key)
    _write_output(pipeline.reveal(stego, key), args.out)
    return 0


def cmd_metrics(args) -> int:
    if args.lsb_table:
        if args.message is None:
            raise UsageError("metrics --lsb-table requires --message")
        images = [(Path(p).stem, load_image(p)) for p in args.lsb_table]
        sys.stdout.write(bench_mod.lsb_table(images, args.message.encode("utf-8")))
        return 0
    if not (args.original and args.candidate):
        raise UsageError("metrics needs --original and --candidate, or --lsb-table")
    report = quality_report(load_image(args.original), load_image(args.candidate))
    name = args.name or Path(args.candidate).stem
    print(CSV_HEADER)
    print(report.csv_row(name))
    return 0


def cmd_bench(args) -> int:
    seed = 0 if args.seed is None else args.seed
    sys.stdout.write(
        bench_mod.bench_table(args.cipher, args.bits, args.message_bytes, args.repetitions, seed)
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stegocrypt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    p = sub.add_parser("keygen", help="generate RSA, ElGamal or DH key files")
    p.add_argument("--cipher", choices=("rsa", "elgamal", "dh"), required=True)
    p.add_argument("--bits", type=int, help="modulus size (default 1024 for rsa, 512 otherwise)")
    p.add_argument("--e", type=int, default=rsa.DEFAULT_E, help="RSA public exponent")
    p.add_argument("--out", required=True, help="output prefix; writes PREFIX.pub/.priv (dh: .params/.pair)")
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("dh-demo", help="run a two-party Diffie-Hellman exchange")
    p.add_argument("--bits", type=int, default=64)
    p.add_argument("--params", help="existing DH params file instead of generating")
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_dh_demo)

    p = sub.add_parser("encrypt", help="encrypt a message into a cipher envelope file")
    p.add_argument("--key", required=True)
    _add_message_source(p)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a cipher envelope file")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_decrypt)

    p = sub.add_parser("embed", help="hide plaintext bytes in an image")
    p.add_argument("--cover", required=True)
    _add_message_source(p)
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=("delimited", "framed"), default="delimited")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover bytes embedded with 'embed'")
    p.add_argument("--image", required=True)
    p.add_argument("--mode", choices=("delimited", "framed"), default="delimited")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("hide", help="encrypt a message and embed it in a cover image")
    p.add_argument("--cover", required=True)
    _add_message_source(p)
    p.add_argument("--key", required=True, help="RSA or ElGamal public key file")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_hide)

    p = sub.add_parser("reveal", help="extract and decrypt a message hidden with 'hide'")
    p.add_argument("--image", required=True)
    p.add_argument("--key", required=True, help="matching private key file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_reveal)

    p = sub.add_parser("metrics", help="MSE/PSNR of two images, or an LSB quality table")
    p.add_argument("--original")
    p.add_argument("--candidate")
    p.add_argument("--name", help="row label (default: candidate file stem)")
    p.add_argument("--lsb-table", nargs="+", metavar="COVER", help="covers to embed --message into")
    p.add_argument("--message")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("bench", help="time RSA vs ElGamal and print a CSV table")
    p.add_argument("--cipher", nargs="+", choices=bench_mod.CIPHERS, default=list(bench_mod.CIPHERS))
    p.add_argument("--bits", nargs="+", type=int, default=[512, 1024])
    p.add_argument("--message-bytes", type=int, default=256)
    p.add_argument("--repetitions", type=int, default=10)
    p.add_argument("--seed", type=_seed)
    p.set_defaults(func=cmd_bench)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    except (StegoCryptError, OSError) as exc:
        sys.stderr.write(f"stegocrypt: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
