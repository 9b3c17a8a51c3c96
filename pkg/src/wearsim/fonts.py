"""Length-based font-size selection for a fixed-resolution display.

The display has one hardware font; larger text is produced by pre-rendered
bitmap scaling.  Metrics follow a monospace model: at pixel size s every
glyph advances ceil(0.6*s) px and a line occupies s+2 px (2 px leading,
the last line needs none).
"""

import math
from dataclasses import dataclass, field

SCREEN_W = 320
SCREEN_H = 240


class EmptyText(ValueError):
    pass


class DoesNotFit(ValueError):
    """No catalog size can place the text inside the box."""


@dataclass(frozen=True)
class FontCatalog:
    sizes: tuple[int, ...] = (10, 14, 18, 24)

    def __post_init__(self):
        if list(self.sizes) != sorted(set(self.sizes)):
            raise ValueError("font sizes must be strictly increasing")
        if 10 not in self.sizes:
            raise ValueError("baseline size 10 must be present")

    @staticmethod
    def advance(size: int) -> int:
        return math.ceil(0.6 * size)

    @staticmethod
    def line_height(size: int) -> int:
        return size + 2


DEFAULT_CATALOG = FontCatalog()


@dataclass(frozen=True)
class TextBox:
    width: int
    height: int

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("box must be positive")
        if self.width > SCREEN_W or self.height > SCREEN_H:
            raise ValueError(f"box exceeds {SCREEN_W}x{SCREEN_H}")


@dataclass(frozen=True)
class FitResult:
    size: int
    line_starts: tuple[int, ...]  # offset into the source text of each line
    lines: tuple[str, ...] = field(default=())


def _wrap_greedy(text: str, max_chars: int) -> list[tuple[int, str]] | None:
    """Greedy word wrap; returns (start offset, line) pairs or None on overflow."""
    lines: list[tuple[int, str]] = []
    line_start = 0
    line_len = 0
    pos = 0
    for word in text.split(" "):
        if len(word) > max_chars:
            return None
        if line_len == 0:
            line_start, line_len = pos, len(word)
        elif line_len + 1 + len(word) <= max_chars:
            line_len += 1 + len(word)
        else:
            lines.append((line_start, text[line_start:line_start + line_len]))
            line_start, line_len = pos, len(word)
        pos += len(word) + 1
    lines.append((line_start, text[line_start:line_start + line_len]))
    return lines


def _fits(text: str, box: TextBox, size: int, wrap: bool) -> list[tuple[int, str]] | None:
    adv = FontCatalog.advance(size)
    if not wrap:
        if len(text) * adv <= box.width and size <= box.height:
            return [(0, text)]
        return None
    max_chars = box.width // adv
    if max_chars < 1:
        return None
    lines = _wrap_greedy(text, max_chars)
    if lines is None:
        return None
    n = len(lines)
    if n * size + (n - 1) * 2 <= box.height:
        return lines
    return None


def fit_font_size(text: str, box: TextBox, catalog: FontCatalog = DEFAULT_CATALOG,
                  wrap: bool = False) -> FitResult:
    """Pick the largest catalog size whose layout fits the box.

    Raises EmptyText for "" and DoesNotFit when even the smallest size
    overflows.
    """
    if text == "":
        raise EmptyText("cannot fit empty text")
    for size in sorted(catalog.sizes, reverse=True):
        lines = _fits(text, box, size, wrap)
        if lines is not None:
            return FitResult(size=size,
                             line_starts=tuple(start for start, _ in lines),
                             lines=tuple(line for _, line in lines))
    raise DoesNotFit(f"text of {len(text)} chars overflows {box.width}x{box.height}")


def fits_box(text: str, box: TextBox, size: int, wrap: bool = False) -> bool:
    """True when the text lays out inside the box at the given size."""
    return _fits(text, box, size, wrap) is not None
