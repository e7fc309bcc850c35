"""Embedded word constants for the growing family and its derivation chain.

The three binary words A, B, C generate the family A^n B C^m whose unbounded
growth this package certifies.  REFERENCE_CHAIN tabulates the expected outer
words and cut offsets for all 14 stages of the certification chain, stored in
token form (Z for 00, O for 1101).  Everything is integrity-checked at import.
"""

import hashlib

A = "000011011101110100"

B = (
    "000000110111010000001101001101000011011101110111011101110100000011011101"
    "110100000011011101110100000011011101110100000011011101110100110111011101"
    "110111010011011101110111011101000000000011011101110100001101110100000011"
    "011101110100000011011101110100000011011101110100000000110111011101110100"
    "110111011101000011011101001101110111011101110100110100110111011101000000"
    "110111011101000000110111011101000000110111011101110111010011010000110111"
    "010011010000110111010011010000110111010011010000110111010011010000000000"
    "110100110100000011011101110100000000000000110100000000000000110111011101"
    "000000110111011101000000110111011101110111010011010011010011010011011101"
    "110100000011011101110100110111011101110111010011011101110111011101001101"
    "110111011101110100110111011101110111010000000000000011011101110100000011"
    "011101110100110100110100000011011101110100000000110111010000000011011101"
    "000000001101110100000000000000000000000011011101001101000011011101001101"
    "001101110111010011011101110111011101001101000011011101001101001101001101"
    "110111010000001101110111010000000011011101001101000011011101001101001101"
    "110111010011011101110111011101001101000011011101001101000011011101001101"
    "000011011101001101000011011101001101110111010000000000110111011101000000"
    "110111011101000000110111011101001101110111010000110111010000000011011101"
    "001101110111010000001101110111011101110100110111011101001101110111011101"
    "110100000011011101110100000011011101110100000011011101110111011101110111"
    "011101110100110100001101110100110100000011010000000000110111011101000000"
    "110111011101000000110111011101001101110111010011010011010000000000110111"
    "011101110111011101110100110100110111011101000000110111011101001101110111"
    "010011010011010011011101110100000011011101110100110100110100000011010011"
    "010011010011010000001101110111011101110100110111011101000000110111011101"
    "001101000011011101001101000000110111011101110111010011011101110111011101"
    "001101000011011101001101000000110100000011011101110111011101000000110111"
    "011101000000110111011101000000000011011101110100000011011101110111011101"
    "001101110111010011011101110100110100001101110100110100001101110100110100"
    "110111011101000000000011011101110100000011011101110100000011011101110100"
    "000011011101110100000000001101000000000000000000000011011101110111011101"
    "001101001101001101000011011101110111010000000000000011010011010000110111"
    "011101110100000000110111011101110100110100001101110100110100001101110100"
    "11010000000000110111011101"
)

C = "000000110111011101000000110111011101000000110111011101"

# (left-word tokens, right-word tokens, cut offset) for chain stages 1..14
REFERENCE_CHAIN = (
    ("ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0),
    ("ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1),
    ("ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0),
    ("ZZZOOO", "ZZZOOOZZZOOOZZZOOO", 2),
    ("ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1),
    ("ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0),
    ("ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1),
    ("ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0),
    ("ZZZOOO", "ZZOOOZZZOOOZZZOOOZ", 1),
    ("ZZOOOZ", "ZOOOZZZOOOZZZOOOZZ", 2),
    ("ZOOOZZ", "ZOOOZZZOOOZZZOOOZZ", 0),
    ("ZOOOZZ", "ZOOOZZZOOOZZZOOOZZ", 0),
    ("ZOOOZZ", "ZZOOOZZZOOOZZZOOOZ", 1),
    ("ZZOOOZ", "ZZZOOOZZZOOOZZZOOO", 0),
)

_EXPECTED = (
    ("A", A, 18, "d126c7e6c66aeecb574284c7128ed6bf138c274117ee1338f6a85933425f6a28"),
    ("B", B, 2402, "4101e105c4a10d7b6b5b4515db7ed23517174151b529824c2196820744d9bf7b"),
    ("C", C, 54, "48359c09f7c91523110b0785a223735501824fa61400d6d00c673aaa08383f22"),
)


def _verify_constants():
    for name, word, length, digest in _EXPECTED:
        if len(word) != length or set(word) > {"0", "1"}:
            raise RuntimeError(f"embedded constant {name} is corrupted")
        if hashlib.sha256(word.encode("ascii")).hexdigest() != digest:
            raise RuntimeError(f"embedded constant {name} fails its checksum")
    if len(REFERENCE_CHAIN) != 14:
        raise RuntimeError("reference chain must have 14 stages")
    for left, right, offset in REFERENCE_CHAIN:
        if set(left + right) > {"Z", "O"} or offset not in (0, 1, 2):
            raise RuntimeError("reference chain entry is corrupted")


_verify_constants()
