"""Deterministic bitmap text rendering and asset-pack generation.

Rendering scales the embedded 8x8 glyph set to the requested pixel size with
integer nearest-neighbour sampling, so equal inputs produce byte-identical
pixel buffers on every platform.  Assets are written as binary PPM (P6) with
content-addressed file names, which makes pack generation idempotent.
"""

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .fonts import DEFAULT_CATALOG, DoesNotFit, EmptyText, FontCatalog, TextBox, fit_font_size
from .glyphs import GLYPH_H, GLYPH_W, glyph_rows, supported

Color = tuple[int, int, int]

PALETTE: dict[str, Color] = {
    "black": (0, 0, 0),
    "white": (255, 255, 255),
    "red": (220, 0, 0),
    "green": (0, 160, 0),
    "yellow": (240, 180, 0),
    "gray": (128, 128, 128),
    "blue": (0, 90, 200),
}

# label boxes per asset category, derived from the screen layout
CATEGORY_BOXES: dict[str, TextBox] = {
    "button": TextBox(97, 47),
    "tile": TextBox(56, 47),
    "header": TextBox(100, 20),
    "central": TextBox(104, 180),
}
DEFAULT_CATEGORY = "central"


class UnsupportedGlyph(ValueError):
    def __init__(self, chars: list[str]):
        self.chars = chars
        points = ", ".join(f"U+{ord(c):04X} {c!r}" for c in chars)
        super().__init__(f"no glyph for: {points}")


class UnknownColor(ValueError):
    pass


@dataclass(frozen=True)
class RenderedAsset:
    width: int
    height: int
    pixels: bytes  # row-major RGB
    text: str
    size: int
    color: Color


def _check_glyphs(text: str) -> None:
    bad = sorted({c for c in text if c != "\n" and not supported(c)})
    if bad:
        raise UnsupportedGlyph(bad)


def render_text(text: str, size: int, color: Color,
                catalog: FontCatalog = DEFAULT_CATALOG) -> RenderedAsset:
    """Rasterize text at a catalog size; '\\n' starts a new line."""
    if size not in catalog.sizes:
        raise ValueError(f"size {size} not in catalog {catalog.sizes}")
    _check_glyphs(text)
    lines = text.split("\n")
    adv = catalog.advance(size)
    width = max(adv * max(len(line) for line in lines), 1)
    height = len(lines) * size + (len(lines) - 1) * 2
    buf = bytearray(width * height * 3)
    r, g, b = color
    for li, line in enumerate(lines):
        top = li * (size + 2)
        for ci, ch in enumerate(line):
            rows = glyph_rows(ch)
            left = ci * adv
            for y in range(size):
                src_row = rows[y * GLYPH_H // size]
                base = ((top + y) * width + left) * 3
                for x in range(adv):
                    if src_row >> (x * GLYPH_W // adv) & 1:
                        i = base + x * 3
                        buf[i] = r
                        buf[i + 1] = g
                        buf[i + 2] = b
    return RenderedAsset(width=width, height=height, pixels=bytes(buf),
                         text=text, size=size, color=color)


def ppm_bytes(asset: RenderedAsset) -> bytes:
    return b"P6\n%d %d\n255\n" % (asset.width, asset.height) + asset.pixels


def write_ppm(asset: RenderedAsset, path: Path) -> None:
    path.write_bytes(ppm_bytes(asset))


def read_ppm(path: Path) -> tuple[int, int, bytes]:
    data = path.read_bytes()
    if not data.startswith(b"P6"):
        raise ValueError(f"{path}: not a P6 PPM")
    parts = data.split(b"\n", 3)
    w, h = (int(v) for v in parts[1].split())
    return w, h, parts[3]


def asset_name(text: str, size: int, color: Color) -> str:
    key = f"{text}|{size}|{color[0]},{color[1]},{color[2]}"
    return hashlib.sha256(key.encode("utf-8")).hexdigest()[:16] + ".ppm"


def generate_asset_pack(corpus_path: Path, colors: list[str], out_dir: Path,
                        catalog: FontCatalog = DEFAULT_CATALOG) -> list[dict]:
    """Render every corpus line in every color; returns the manifest rows.

    Corpus lines are `text` or `category<TAB>text`.  Per-line failures are
    recorded in the manifest and the run continues.  Existing files are left
    alone (names are content hashes), so re-running adds nothing.
    """
    for name in colors:
        if name not in PALETTE:
            raise UnknownColor(f"unknown color {name!r} (have {sorted(PALETTE)})")
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest: list[dict] = []
    for raw in corpus_path.read_text(encoding="utf-8").splitlines():
        if not raw.strip():
            continue
        category, _, rest = raw.partition("\t")
        if rest:
            text = rest
        else:
            category, text = DEFAULT_CATEGORY, raw
        if category not in CATEGORY_BOXES:
            category = DEFAULT_CATEGORY
        box = CATEGORY_BOXES[category]
        for cname in colors:
            color = PALETTE[cname]
            row = {"text": text, "category": category, "color": cname}
            try:
                fit = fit_font_size(text, box, catalog, wrap=True)
                asset = render_text("\n".join(fit.lines), fit.size, color, catalog)
            except (UnsupportedGlyph, DoesNotFit, EmptyText) as exc:
                row.update(status="error", error=str(exc))
                manifest.append(row)
                continue
            fname = asset_name(asset.text, asset.size, color)
            target = out_dir / fname
            if not target.exists():
                write_ppm(asset, target)
            row.update(status="ok", file=fname, size=asset.size,
                       width=asset.width, height=asset.height)
            manifest.append(row)
    with (out_dir / "manifest.jsonl").open("w", encoding="utf-8") as fh:
        for row in manifest:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    return manifest
