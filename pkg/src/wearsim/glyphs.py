"""Embedded 8x8 bitmap glyph set (original artwork, drawn for this project).

Each glyph is an 8x8 cell; artwork occupies columns 0-4 and rows 0-6, with
row 7 reserved for descenders and columns 5-7 left blank for letter spacing.
Covers A-Z, a-z, 0-9, the German letters ä ö ü Ä Ö Ü ß and common punctuation.
"""

GLYPH_W = 8
GLYPH_H = 8

# '#' = pixel on, '.' = off.  Short rows are right-padded, missing rows are blank.
_ART = {
    " ": "",
    "0": ".###.\n#...#\n#..##\n#.#.#\n##..#\n#...#\n.###.",
    "1": "..#..\n.##..\n..#..\n..#..\n..#..\n..#..\n.###.",
    "2": ".###.\n#...#\n....#\n...#.\n..#..\n.#...\n#####",
    "3": ".###.\n#...#\n....#\n..##.\n....#\n#...#\n.###.",
    "4": "...#.\n..##.\n.#.#.\n#..#.\n#####\n...#.\n...#.",
    "5": "#####\n#....\n####.\n....#\n....#\n#...#\n.###.",
    "6": "..##.\n.#...\n#....\n####.\n#...#\n#...#\n.###.",
    "7": "#####\n....#\n...#.\n..#..\n..#..\n..#..\n..#..",
    "8": ".###.\n#...#\n#...#\n.###.\n#...#\n#...#\n.###.",
    "9": ".###.\n#...#\n#...#\n.####\n....#\n...#.\n.##..",
    "A": ".###.\n#...#\n#...#\n#####\n#...#\n#...#\n#...#",
    "B": "####.\n#...#\n#...#\n####.\n#...#\n#...#\n####.",
    "C": ".###.\n#...#\n#....\n#....\n#....\n#...#\n.###.",
    "D": "####.\n#...#\n#...#\n#...#\n#...#\n#...#\n####.",
    "E": "#####\n#....\n#....\n####.\n#....\n#....\n#####",
    "F": "#####\n#....\n#....\n####.\n#....\n#....\n#....",
    "G": ".###.\n#...#\n#....\n#.###\n#...#\n#...#\n.###.",
    "H": "#...#\n#...#\n#...#\n#####\n#...#\n#...#\n#...#",
    "I": ".###.\n..#..\n..#..\n..#..\n..#..\n..#..\n.###.",
    "J": "..###\n...#.\n...#.\n...#.\n...#.\n#..#.\n.##..",
    "K": "#...#\n#..#.\n#.#..\n##...\n#.#..\n#..#.\n#...#",
    "L": "#....\n#....\n#....\n#....\n#....\n#....\n#####",
    "M": "#...#\n##.##\n#.#.#\n#.#.#\n#...#\n#...#\n#...#",
    "N": "#...#\n##..#\n#.#.#\n#..##\n#...#\n#...#\n#...#",
    "O": ".###.\n#...#\n#...#\n#...#\n#...#\n#...#\n.###.",
    "P": "####.\n#...#\n#...#\n####.\n#....\n#....\n#....",
    "Q": ".###.\n#...#\n#...#\n#...#\n#.#.#\n#..#.\n.##.#",
    "R": "####.\n#...#\n#...#\n####.\n#.#..\n#..#.\n#...#",
    "S": ".####\n#....\n#....\n.###.\n....#\n....#\n####.",
    "T": "#####\n..#..\n..#..\n..#..\n..#..\n..#..\n..#..",
    "U": "#...#\n#...#\n#...#\n#...#\n#...#\n#...#\n.###.",
    "V": "#...#\n#...#\n#...#\n#...#\n#...#\n.#.#.\n..#..",
    "W": "#...#\n#...#\n#...#\n#.#.#\n#.#.#\n##.##\n#...#",
    "X": "#...#\n#...#\n.#.#.\n..#..\n.#.#.\n#...#\n#...#",
    "Y": "#...#\n#...#\n.#.#.\n..#..\n..#..\n..#..\n..#..",
    "Z": "#####\n....#\n...#.\n..#..\n.#...\n#....\n#####",
    "a": "\n\n.###.\n....#\n.####\n#...#\n.####",
    "b": "#....\n#....\n####.\n#...#\n#...#\n#...#\n####.",
    "c": "\n\n.###.\n#....\n#....\n#....\n.###.",
    "d": "....#\n....#\n.####\n#...#\n#...#\n#...#\n.####",
    "e": "\n\n.###.\n#...#\n#####\n#....\n.###.",
    "f": "..##.\n.#..#\n.#...\n###..\n.#...\n.#...\n.#...",
    "g": "\n\n.####\n#...#\n#...#\n.####\n....#\n.###.",
    "h": "#....\n#....\n####.\n#...#\n#...#\n#...#\n#...#",
    "i": "..#..\n.....\n.##..\n..#..\n..#..\n..#..\n.###.",
    "j": "...#.\n.....\n..##.\n...#.\n...#.\n...#.\n#..#.\n.##..",
    "k": "#....\n#....\n#..#.\n#.#..\n##...\n#.#..\n#..#.",
    "l": ".##..\n..#..\n..#..\n..#..\n..#..\n..#..\n.###.",
    "m": "\n\n##.#.\n#.#.#\n#.#.#\n#.#.#\n#.#.#",
    "n": "\n\n####.\n#...#\n#...#\n#...#\n#...#",
    "o": "\n\n.###.\n#...#\n#...#\n#...#\n.###.",
    "p": "\n\n####.\n#...#\n#...#\n####.\n#....\n#....",
    "q": "\n\n.####\n#...#\n#...#\n.####\n....#\n....#",
    "r": "\n\n#.##.\n##..#\n#....\n#....\n#....",
    "s": "\n\n.####\n#....\n.###.\n....#\n####.",
    "t": ".#...\n.#...\n###..\n.#...\n.#...\n.#..#\n..##.",
    "u": "\n\n#...#\n#...#\n#...#\n#..##\n.##.#",
    "v": "\n\n#...#\n#...#\n#...#\n.#.#.\n..#..",
    "w": "\n\n#...#\n#.#.#\n#.#.#\n#.#.#\n.#.#.",
    "x": "\n\n#...#\n.#.#.\n..#..\n.#.#.\n#...#",
    "y": "\n\n#...#\n#...#\n#...#\n.####\n....#\n.###.",
    "z": "\n\n#####\n...#.\n..#..\n.#...\n#####",
    "Ä": ".#.#.\n.###.\n#...#\n#...#\n#####\n#...#\n#...#",
    "Ö": ".#.#.\n.###.\n#...#\n#...#\n#...#\n#...#\n.###.",
    "Ü": ".#.#.\n#...#\n#...#\n#...#\n#...#\n#...#\n.###.",
    "ä": ".#.#.\n.....\n.###.\n....#\n.####\n#...#\n.####",
    "ö": ".#.#.\n.....\n.###.\n#...#\n#...#\n#...#\n.###.",
    "ü": ".#.#.\n.....\n#...#\n#...#\n#...#\n#..##\n.##.#",
    "ß": ".###.\n#...#\n#..#.\n#.##.\n#...#\n#...#\n#.##.",
    ".": "\n\n\n\n\n.##..\n.##..",
    ",": "\n\n\n\n\n..#..\n..#..\n.#...",
    ":": "\n\n.##..\n.##..\n.....\n.##..\n.##..",
    ";": "\n\n.##..\n.##..\n.....\n.##..\n..#..\n.#...",
    "!": "..#..\n..#..\n..#..\n..#..\n..#..\n.....\n..#..",
    "?": ".###.\n#...#\n....#\n..##.\n..#..\n.....\n..#..",
    "-": "\n\n\n.###.",
    "+": "\n..#..\n..#..\n#####\n..#..\n..#..",
    "/": "....#\n...#.\n...#.\n..#..\n.#...\n.#...\n#....",
    "(": "...#.\n..#..\n.#...\n.#...\n.#...\n..#..\n...#.",
    ")": ".#...\n..#..\n...#.\n...#.\n...#.\n..#..\n.#...",
    "%": "##..#\n##..#\n...#.\n..#..\n.#...\n#..##\n#..##",
    "=": "\n\n#####\n.....\n#####",
    "<": "...#.\n..#..\n.#...\n#....\n.#...\n..#..\n...#.",
    ">": ".#...\n..#..\n...#.\n....#\n...#.\n..#..\n.#...",
    "_": "\n\n\n\n\n\n\n#####",
    "'": "..#..\n..#..",
    '"': ".#.#.\n.#.#.",
}


def _parse(art: str) -> tuple[int, ...]:
    rows = art.split("\n") if art else []
    out = []
    for r in range(GLYPH_H):
        line = rows[r] if r < len(rows) else ""
        bits = 0
        for c, ch in enumerate(line[:GLYPH_W]):
            if ch == "#":
                bits |= 1 << c
        out.append(bits)
    return tuple(out)


GLYPHS: dict[str, tuple[int, ...]] = {ch: _parse(art) for ch, art in _ART.items()}


def supported(ch: str) -> bool:
    return ch in GLYPHS


def glyph_rows(ch: str) -> tuple[int, ...]:
    """Row bitmasks for one character; bit c of row r is pixel (c, r)."""
    return GLYPHS[ch]
