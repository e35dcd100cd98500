"""Reference data for n = 3: class listings and operation tables.

Everything here is transcribed, nothing is computed. ``CLASS_LISTING`` maps a
class index to its sub-classes as (hamming distance, rule numbers in printed
order). Operation tables keep their printed layout: op name and axis on the
first line, then a row label and 16 cells per line. The printed CVT block for
class 3 is empty, so it is absent here.

The class 1 tables appear twice in the source (once in the running text, once
with the other classes); both copies are kept and checked.
"""

from __future__ import annotations

import hashlib
import json

CLASS_LISTING = {
    1: (
        (0, (0,)),
        (1, (2, 32, 8, 4)),
        (2, (34, 10, 40, 12, 6, 36)),
        (3, (42, 14, 44, 38)),
        (4, (46,)),
    ),
    2: (
        (0, (170,)),
        (1, (162, 168, 138, 174)),
        (2, (160, 130, 136, 172, 142, 166)),
        (3, (128, 140, 164, 134)),
        (4, (132,)),
    ),
    3: (
        (0, (204,)),
        (1, (200, 206, 236, 196)),
        (2, (192, 202, 232, 238, 198, 228)),
        (3, (194, 224, 234, 230)),
        (4, (226,)),
    ),
    4: (
        (0, (102,)),
        (1, (98, 110, 100, 70)),
        (2, (96, 66, 106, 108, 78, 68)),
        (3, (64, 104, 74, 76)),
        (4, (72,)),
    ),
    5: (
        (0, (240,)),
        (1, (242, 208, 248, 244)),
        (2, (210, 250, 216, 252, 246, 212)),
        (3, (218, 254, 220, 214)),
        (4, (222,)),
    ),
    6: (
        (0, (90,)),
        (1, (82, 88, 122, 94)),
        (2, (80, 114, 120, 92, 126, 86)),
        (3, (112, 124, 84, 118)),
        (4, (116,)),
    ),
    7: (
        (0, (60,)),
        (1, (56, 62, 28, 52)),
        (2, (48, 58, 24, 30, 54, 20)),
        (3, (50, 16, 26, 22)),
        (4, (18,)),
    ),
    8: (
        (0, (150,)),
        (1, (146, 158, 148, 182)),
        (2, (144, 178, 154, 156, 190, 180)),
        (3, (176, 152, 186, 188)),
        (4, (184,)),
    ),
    9: (
        (0, (255,)),
        (1, (253, 223, 247, 251)),
        (2, (221, 245, 215, 243, 249, 219)),
        (3, (213, 241, 211, 217)),
        (4, (209,)),
    ),
    10: (
        (0, (85,)),
        (1, (93, 87, 117, 81)),
        (2, (95, 125, 119, 83, 113, 89)),
        (3, (127, 115, 91, 121)),
        (4, (123,)),
    ),
    11: (
        (0, (51,)),
        (1, (55, 49, 19, 59)),
        (2, (63, 53, 23, 17, 57, 27)),
        (3, (61, 31, 21, 25)),
        (4, (29,)),
    ),
    12: (
        (0, (153,)),
        (1, (157, 145, 155, 185)),
        (2, (159, 189, 149, 147, 177, 187)),
        (3, (191, 151, 181, 179)),
        (4, (183,)),
    ),
    13: (
        (0, (15,)),
        (1, (13, 47, 7, 11)),
        (2, (45, 5, 39, 3, 9, 43)),
        (3, (37, 1, 35, 41)),
        (4, (33,)),
    ),
    14: (
        (0, (165,)),
        (1, (173, 167, 133, 161)),
        (2, (175, 141, 135, 163, 129, 169)),
        (3, (143, 131, 171, 137)),
        (4, (139,)),
    ),
    15: (
        (0, (195,)),
        (1, (199, 193, 227, 203)),
        (2, (207, 197, 231, 225, 201, 235)),
        (3, (205, 239, 229, 233)),
        (4, (237,)),
    ),
    16: (
        (0, (105,)),
        (1, (109, 97, 107, 73)),
        (2, (111, 77, 101, 99, 65, 75)),
        (3, (79, 103, 69, 67)),
        (4, (71,)),
    ),
}

SUMMARY_XOR_CLASS_1 = """\
XOR 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
0 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
2 2 0 6 4 10 8 14 12 34 32 38 36 42 40 46 44
4 4 6 0 2 12 14 8 10 36 38 32 34 44 46 40 42
6 6 4 2 0 14 12 10 8 38 36 34 32 46 44 42 40
8 8 10 12 14 0 2 4 6 40 42 44 46 32 34 36 38
10 10 8 14 12 2 0 6 4 42 40 46 44 34 32 38 36
12 12 14 8 10 4 6 0 2 44 46 40 42 36 38 32 34
14 14 12 10 8 6 4 2 0 46 44 42 40 38 36 34 32
32 32 34 36 38 40 42 44 46 0 2 4 6 8 10 12 14
34 34 32 38 36 42 40 46 44 2 0 6 4 10 8 14 12
36 36 38 32 34 44 46 40 42 4 6 0 2 12 14 8 10
38 38 36 34 32 46 44 42 40 6 4 2 0 14 12 10 8
40 40 42 44 46 32 34 36 38 8 10 12 14 0 2 4 6
42 42 40 46 44 34 32 38 36 10 8 14 12 2 0 6 4
44 44 46 40 42 36 38 32 34 12 14 8 10 4 6 0 2
46 46 44 42 40 38 36 34 32 14 12 10 8 6 4 2 0
"""

SUMMARY_CVT_CLASS_1 = """\
CVT 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
2 0 4 0 4 0 4 0 4 0 4 0 4 0 4 0 4
4 0 0 8 8 0 0 8 8 0 0 8 8 0 0 8 8
6 0 4 8 12 0 4 8 12 0 4 8 12 0 4 8 12
8 0 0 0 0 16 16 16 16 0 0 0 0 16 16 16 16
10 0 4 0 4 16 20 16 20 0 4 0 4 16 20 16 20
12 0 0 8 8 16 16 24 24 0 0 8 8 16 16 24 24
14 0 4 8 12 16 20 24 28 0 4 8 12 16 20 24 28
32 0 0 0 0 0 0 0 0 64 64 64 64 64 64 64 64
34 0 4 0 4 0 4 0 4 64 68 64 68 64 68 64 68
36 0 0 8 8 0 0 8 8 64 64 72 72 64 64 72 72
38 0 4 8 12 0 4 8 12 64 68 72 76 64 68 72 76
40 0 0 0 0 16 16 16 16 64 64 64 64 80 80 80 80
42 0 4 0 4 16 20 16 20 64 68 64 68 80 84 80 84
44 0 0 8 8 16 16 24 24 64 64 72 72 80 80 88 88
46 0 4 8 12 16 20 24 28 64 68 72 76 80 84 88 92
"""

XOR_CLASS_1 = """\
XOR 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
0 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
2 2 0 6 4 10 8 14 12 34 32 38 36 42 40 46 44
4 4 6 0 2 12 14 8 10 36 38 32 34 44 46 40 42
6 6 4 2 0 14 12 10 8 38 36 34 32 46 44 42 40
8 8 10 12 14 0 2 4 6 40 42 44 46 32 34 36 38
10 10 8 14 12 2 0 6 4 42 40 46 44 34 32 38 36
12 12 14 8 10 4 6 0 2 44 46 40 42 36 38 32 34
14 14 12 10 8 6 4 2 0 46 44 42 40 38 36 34 32
32 32 34 36 38 40 42 44 46 0 2 4 6 8 10 12 14
34 34 32 38 36 42 40 46 44 2 0 6 4 10 8 14 12
36 36 38 32 34 44 46 40 42 4 6 0 2 12 14 8 10
38 38 36 34 32 46 44 42 40 6 4 2 0 14 12 10 8
40 40 42 44 46 32 34 36 38 8 10 12 14 0 2 4 6
42 42 40 46 44 34 32 38 36 10 8 14 12 2 0 6 4
44 44 46 40 42 36 38 32 34 12 14 8 10 4 6 0 2
46 46 44 42 40 38 36 34 32 14 12 10 8 6 4 2 0
"""

XOR_CLASS_2 = """\
XOR 128 130 132 134 136 138 140 142 160 162 164 166 168 170 172 174
128 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
130 2 0 6 4 10 8 14 12 34 32 38 36 42 40 46 44
132 4 6 0 2 12 14 8 10 36 38 32 34 44 46 40 42
134 6 4 2 0 14 12 10 8 38 36 34 32 46 44 42 40
136 8 10 12 14 0 2 4 6 40 42 44 46 32 34 36 38
138 10 8 14 12 2 0 6 4 42 40 46 44 34 32 38 36
140 12 14 8 10 4 6 0 2 44 46 40 42 36 38 32 34
142 14 12 10 8 6 4 2 0 46 44 42 40 38 36 34 32
160 32 34 36 38 40 42 44 46 0 2 4 6 8 10 12 14
162 34 32 38 36 42 40 46 44 2 0 6 4 10 8 14 12
164 36 38 32 34 44 46 40 42 4 6 0 2 12 14 8 10
166 38 36 34 32 46 44 42 40 6 4 2 0 14 12 10 8
168 40 42 44 46 32 34 36 38 8 10 12 14 0 2 4 6
170 42 40 46 44 34 32 38 36 10 8 14 12 2 0 6 4
172 44 46 40 42 36 38 32 34 12 14 8 10 4 6 0 2
174 46 44 42 40 38 36 34 32 14 12 10 8 6 4 2 0
"""

XOR_CLASS_3 = """\
XOR 192 194 196 198 200 202 204 206 224 226 228 230 232 234 236 238
192 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
194 2 0 6 4 10 8 14 12 34 32 38 36 42 40 46 44
196 4 6 0 2 12 14 8 10 36 38 32 34 44 46 40 42
198 6 4 2 0 14 12 10 8 38 36 34 32 46 44 42 40
200 8 10 12 14 0 2 4 6 40 42 44 46 32 34 36 38
202 10 8 14 12 2 0 6 4 42 40 46 44 34 32 38 36
204 12 14 8 10 4 6 0 2 44 46 40 42 36 38 32 34
206 14 12 10 8 6 4 2 0 46 44 42 40 38 36 34 32
224 32 34 36 38 40 42 44 46 0 2 4 6 8 10 12 14
226 34 32 38 36 42 40 46 44 2 0 6 4 10 8 14 12
228 36 38 32 34 44 46 40 42 4 6 0 2 12 14 8 10
230 38 36 34 32 46 44 42 40 6 4 2 0 14 12 10 8
232 40 42 44 46 32 34 36 38 8 10 12 14 0 2 4 6
234 42 40 46 44 34 32 38 36 10 8 14 12 2 0 6 4
236 44 46 40 42 36 38 32 34 12 14 8 10 4 6 0 2
238 46 44 42 40 38 36 34 32 14 12 10 8 6 4 2 0
"""

CVT_CLASS_1 = """\
CVT 0 2 4 6 8 10 12 14 32 34 36 38 40 42 44 46
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
2 0 4 0 4 0 4 0 4 0 4 0 4 0 4 0 4
4 0 0 8 8 0 0 8 8 0 0 8 8 0 0 8 8
6 0 4 8 12 0 4 8 12 0 4 8 12 0 4 8 12
8 0 0 0 0 16 16 16 16 0 0 0 0 16 16 16 16
10 0 4 0 4 16 20 16 20 0 4 0 4 16 20 16 20
12 0 0 8 8 16 16 24 24 0 0 8 8 16 16 24 24
14 0 4 8 12 16 20 24 28 0 4 8 12 16 20 24 28
32 0 0 0 0 0 0 0 0 64 64 64 64 64 64 64 64
34 0 4 0 4 0 4 0 4 64 68 64 68 64 68 64 68
36 0 0 8 8 0 0 8 8 64 64 72 72 64 64 72 72
38 0 4 8 12 0 4 8 12 64 68 72 76 64 68 72 76
40 0 0 0 0 16 16 16 16 64 64 64 64 80 80 80 80
42 0 4 0 4 16 20 16 20 64 68 64 68 80 84 80 84
44 0 0 8 8 16 16 24 24 64 64 72 72 80 80 88 88
46 0 4 8 12 16 20 24 28 64 68 72 76 80 84 88 92
"""

CVT_CLASS_2 = """\
CVT 128 130 132 134 136 138 140 142 160 162 164 166 168 170 172 174
128 256 256 256 256 256 256 256 256 256 256 256 256 256 256 256 256
130 256 260 256 260 256 260 256 260 256 260 256 260 256 260 256 260
132 256 256 264 264 256 256 264 264 256 256 264 264 256 256 264 264
134 256 260 264 268 256 260 264 268 256 260 264 268 256 260 264 268
136 256 256 256 256 272 272 272 272 256 256 256 256 272 272 272 272
138 256 260 256 260 272 276 272 276 256 260 256 260 272 276 272 276
140 256 256 264 264 272 272 280 280 256 256 264 264 272 272 280 280
142 256 260 264 268 272 276 280 284 256 260 264 268 272 276 280 284
160 256 256 256 256 256 256 256 256 320 320 320 320 320 320 320 320
162 256 260 256 260 256 260 256 260 320 324 320 324 320 324 320 324
164 256 256 264 264 256 256 264 264 320 320 328 328 320 320 328 328
166 256 260 264 268 256 260 264 268 320 324 328 332 320 324 328 332
168 256 256 256 256 272 272 272 272 320 320 320 320 336 336 336 336
170 256 260 256 260 272 276 272 276 320 324 320 324 336 340 336 340
172 256 256 264 264 272 272 280 280 320 320 328 328 336 336 344 344
174 256 260 264 268 272 276 280 284 320 324 328 332 336 340 344 348
"""


def parse_table(text: str) -> tuple[str, list[int], dict[int, list[int]]]:
    lines = text.strip().splitlines()
    head = lines[0].split()
    axis = [int(v) for v in head[1:]]
    rows = {}
    for line in lines[1:]:
        label, *cells = (int(v) for v in line.split())
        rows[label] = cells
    return head[0].lower(), axis, rows


# (op, class index) -> printed table
TABLES = {
    ("xor", 1): XOR_CLASS_1,
    ("xor", 2): XOR_CLASS_2,
    ("xor", 3): XOR_CLASS_3,
    ("cvt", 1): CVT_CLASS_1,
    ("cvt", 2): CVT_CLASS_2,
}

SUMMARY_TABLES = {
    ("xor", 1): SUMMARY_XOR_CLASS_1,
    ("cvt", 1): SUMMARY_CVT_CLASS_1,
}

AFFINE_ORDER = tuple(sub[0][1][0] for _, sub in sorted(CLASS_LISTING.items()))


def canonical_bytes() -> bytes:
    payload = {
        "classes": {str(k): [[d, list(v)] for d, v in sub] for k, sub in sorted(CLASS_LISTING.items())},
        "tables": {f"{op}{k}": text for (op, k), text in sorted(TABLES.items())},
        "summary_tables": {f"{op}{k}": text for (op, k), text in sorted(SUMMARY_TABLES.items())},
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


def checksum() -> str:
    return hashlib.sha256(canonical_bytes()).hexdigest()


CHECKSUM = "090967f21e727a0b1fcf50d4ba6d373ed2cddbec3dc1ca3395750c5860b4bb38"
