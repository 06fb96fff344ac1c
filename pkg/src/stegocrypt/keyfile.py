"""Key-value text files for key material.

One ``name=value`` line per field, fixed order, no blank lines; every
number is lowercase hex without leading zeros. RSA and ElGamal files start
with a ``kind=`` line; DH files do not.
"""

from __future__ import annotations

import os
from typing import Union

from .dh import DhKeyPair, DhParams
from .elgamal import ElGamalPrivateKey, ElGamalPublicKey
from .errors import DomainError, KeyFileError
from .numtheory import from_hex, to_hex
from .rsa import RsaPrivateKey, RsaPublicKey

AnyKey = Union[RsaPublicKey, RsaPrivateKey, ElGamalPublicKey, ElGamalPrivateKey]

_LAYOUTS = {
    "rsa-public": (RsaPublicKey, ("n", "e")),
    "rsa-private": (RsaPrivateKey, ("n", "d")),
    "elgamal-public": (ElGamalPublicKey, ("r", "g", "z")),
    "elgamal-private": (ElGamalPrivateKey, ("r", "g", "s")),
}
_KIND_OF = {cls: kind for kind, (cls, _) in _LAYOUTS.items()}


def _render(pairs: list[tuple[str, str]]) -> str:
    return "".join(f"{k}={v}\n" for k, v in pairs)


def _parse_lines(text: str) -> list[tuple[str, str]]:
    if text.endswith("\n"):
        text = text[:-1]
    pairs = []
    for line in text.split("\n"):
        name, sep, value = line.partition("=")
        if not sep or not name:
            raise KeyFileError(f"malformed key file line: {line!r}")
        pairs.append((name, value))
    return pairs


def _numbers(pairs: list[tuple[str, str]], expected: tuple[str, ...]) -> dict[str, int]:
    names = tuple(k for k, _ in pairs)
    if names != expected:
        raise KeyFileError(f"expected fields {', '.join(expected)} in order, got {', '.join(names)}")
    try:
        return {k: from_hex(v) for k, v in pairs}
    except DomainError as exc:
        raise KeyFileError(str(exc)) from None


def dumps_key(key: AnyKey) -> str:
    kind = _KIND_OF[type(key)]
    _, fields = _LAYOUTS[kind]
    return _render([("kind", kind)] + [(f, to_hex(getattr(key, f))) for f in fields])


def loads_key(text: str) -> AnyKey:
    pairs = _parse_lines(text)
    if pairs[0][0] != "kind" or pairs[0][1] not in _LAYOUTS:
        raise KeyFileError(f"unknown key kind line: {pairs[0][0]}={pairs[0][1]}")
    cls, fields = _LAYOUTS[pairs[0][1]]
    return cls(**_numbers(pairs[1:], fields))


def dumps_dh(params: DhParams, keypair: DhKeyPair | None = None) -> str:
    pairs = [("p", params.p), ("g", params.g), ("q", params.q)]
    if keypair is not None:
        pairs += [("priv", keypair.private_key), ("pub", keypair.public_key)]
    return _render([(k, to_hex(v)) for k, v in pairs])


def loads_dh(text: str) -> tuple[DhParams, DhKeyPair | None]:
    pairs = _parse_lines(text)
    if len(pairs) == 3:
        v = _numbers(pairs, ("p", "g", "q"))
        return DhParams(v["p"], v["g"], v["q"]), None
    v = _numbers(pairs, ("p", "g", "q", "priv", "pub"))
    return DhParams(v["p"], v["g"], v["q"]), DhKeyPair(v["priv"], v["pub"])


def write_key(key: AnyKey, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps_key(key))


def read_key(path: str | os.PathLike) -> AnyKey:
    with open(path, encoding="ascii") as fh:
        return loads_key(fh.read())
