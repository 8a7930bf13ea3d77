"""Published worked examples, transcribed with their own ideal labels.

Each ring lists its ideals as explicit element sets under the published
labels, so the label bijection to canonical order is recovered by set
equality rather than assumed.
"""

from itertools import product


def _ints(spec_moduli, values):
    """Integers of Z_n (n = prod of coprime moduli) as CRT residue tuples."""
    return {tuple(v % k for k in spec_moduli) for v in values}


def _bits(*words):
    return {tuple(int(c) for c in w) for w in words}


Z2xZ4_ALL = set(product(range(2), range(4)))
Z2_3_ALL = set(product(range(2), repeat=3))

# ring -> label -> member set (residue tuples in canonical factor order)
IDEAL_SETS = {
    "Z4": {"O": {(0,)}, "R": {(0,), (2,)}, "E": {(k,) for k in range(4)}},
    "Z2xZ2": {
        "O": {(0, 0)},
        "R": _bits("00", "01"),
        "B": _bits("00", "10"),
        "E": _bits("00", "01", "10", "11"),
    },
    "Z6": {
        "O": _ints((2, 3), [0]),
        "R": _ints((2, 3), [0, 3]),
        "B": _ints((2, 3), [0, 2, 4]),
        "E": _ints((2, 3), range(6)),
    },
    "Z8": {
        "O": {(0,)},
        "R": {(0,), (4,)},
        "B": {(0,), (2,), (4,), (6,)},
        "E": {(k,) for k in range(8)},
    },
    "Z2xZ4": {
        "O": {(0, 0)},
        "R": {(0, 0), (0, 2)},
        "B": {(0, k) for k in range(4)},
        "C": {(0, 0), (1, 0)},
        "D": {(a, b) for a in range(2) for b in (0, 2)},
        "E": Z2xZ4_ALL,
    },
    "Z2xZ2xZ2": {
        "O": _bits("000"),
        "X": _bits("000", "001"),
        "Y": _bits("000", "010"),
        "T": _bits("000", "100"),
        "Z": _bits("000", "001", "010", "011"),
        "U": _bits("000", "001", "100", "101"),
        "V": _bits("000", "010", "100", "110"),
        "E": Z2_3_ALL,
    },
}

# Implication tables: columns in the listed order, row operand first.
IMP_TABLES = {
    "Z4": ("ORE", {"O": "EEE", "R": "REE", "E": "ORE"}),
    "Z2xZ2": ("ORBE", {"O": "EEEE", "R": "BEBE", "B": "RREE", "E": "ORBE"}),
    "Z6": ("ORBE", {"O": "EEEE", "R": "BEBE", "B": "RREE", "E": "ORBE"}),
    "Z8": ("ORBE", {"O": "EEEE", "R": "BEEE", "B": "RBEE", "E": "ORBE"}),
    "Z2xZ4": ("ORBCDE", {
        "O": "EEEEEE",
        "R": "DEEDEE",
        "B": "CDECDE",
        "C": "BBBEEE",
        "D": "RBBDEE",
        "E": "ORBCDE",
    }),
    "Z2xZ2xZ2": ("OXYZTUVE", {
        "O": "EEEEEEEE",
        "X": "VEVEVEVE",
        "Y": "UUEEUUEE",
        "Z": "TUVETUVE",
        "T": "ZZZZEEEE",
        "U": "YZYZVEVE",
        "V": "XXZZUUEE",
        "E": "OXYZTUVE",
    }),
}

_C8 = {"00000001", "00000011", "00000101", "00010001", "00001111", "00110011", "01010101", "11111111"}

MEMBERSHIP_CODES = {
    "Z4": {"0001", "0101", "1111"},
    "Z2xZ2": {"1000", "1100", "1010", "1111"},
    "Z6": {"000001", "001001", "010101", "111111"},
    "Z8": {"00000001", "00010001", "01010101", "11111111"},
    "Z2xZ4": {"00000001", "00000101", "00001111", "00010001", "01010101", "11111111"},
    "Z2xZ2xZ2": _C8,
}

# The last Z2xZ4 word is printed with 8 bits; the 6-bit 000001 is meant.
REDUCED_CODES = {
    "Z4": {"111", "011", "001"},
    "Z2xZ2": {"1111", "0101", "0011", "0001"},
    "Z6": {"1111", "0101", "0011", "0001"},
    "Z8": {"1111", "0111", "0011", "0001"},
    "Z2xZ4": {"111111", "011011", "001001", "000111", "000011", "000001"},
    "Z2xZ2xZ2": _C8,
}

# Addition tables of the two six-element MV-algebras.
# Chain Id(Z32): O < B < D < R < C < E.
OPLUS_Z32 = ("ORBCDE", {
    "O": "ORBCDE",
    "R": "RECEEE",
    "B": "BCDERE",
    "C": "CEEEEE",
    "D": "DERECE",
    "E": "EEEEEE",
})
Z32_CHAIN = "OBDRCE"
OPLUS_Z2xZ4 = ("ORBCDE", {
    "O": "ORBCDE",
    "R": "RBBDEE",
    "B": "BBBEEE",
    "C": "CDECDE",
    "D": "DEEDEE",
    "E": "EEEEEE",
})
STAR_SIX = {"O": "E", "E": "O", "R": "D", "B": "C", "D": "R", "C": "B"}

TABLE1_MV = {2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 3}
TABLE1_BOOLE = {2: 1, 3: 0, 4: 1, 5: 0, 6: 0, 7: 0, 8: 1}

TABLE2 = [
    ("Z2", "Boolean"), ("Z3", "Boolean"), ("Z4", "MV"), ("Z2xZ2", "Boolean"),
    ("Z5", "Boolean"), ("Z6", "Boolean"), ("Z7", "Boolean"), ("Z8", "MV"),
    ("Z4xZ2", "MV"), ("Z2xZ2xZ2", "Boolean"), ("Z9", "MV"), ("Z3xZ3", "Boolean"),
    ("Z10", "Boolean"),
]

# n -> [(exponents of p, tag)]
TABLE3 = {
    2: [((1,), "Boole chain")],
    3: [((2,), "MV chain")],
    4: [((3,), "MV chain"), ((1, 1), "Boole")],
    5: [((4,), "MV chain")],
    6: [((5,), "MV chain"), ((1, 2), "MV")],
    7: [((6,), "MV chain")],
    8: [((7,), "MV chain"), ((1, 3), "MV"), ((1, 1, 1), "Boole")],
}
