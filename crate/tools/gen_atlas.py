#!/usr/bin/env python3
"""Generate the bundled monospaced glyph atlas.

Renders [A-Za-z0-9] into fixed 16x24 cells using Pillow's bundled font,
thresholds to binary ink, and writes:

  crates/core/assets/atlas.pgm  - P5 strip, one cell per glyph, ink=0 blank=255
  crates/core/assets/atlas.txt  - manifest: header + one "char offset advance" line per glyph

The checked-in output is the source of truth; this script only documents
how it was produced.
"""

import os
import sys

from PIL import Image, ImageDraw, ImageFont

CELL_W, CELL_H = 16, 24
CHARSET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
INK_THRESHOLD = 150
BASELINE_Y = 18


def render_glyph(ch, font):
    img = Image.new("L", (CELL_W, CELL_H), 255)
    draw = ImageDraw.Draw(img)
    draw.text((CELL_W // 2, BASELINE_Y), ch, font=font, fill=0, anchor="ms")
    px = img.load()
    return [[1 if px[x, y] < INK_THRESHOLD else 0 for x in range(CELL_W)] for y in range(CELL_H)]


def pick_font_size():
    size = 22
    while size > 8:
        font = ImageFont.load_default(size=size)
        probe = Image.new("L", (64, 64), 255)
        draw = ImageDraw.Draw(probe)
        ok = True
        for ch in CHARSET:
            x0, y0, x1, y1 = draw.textbbox((32, 40), ch, font=font, anchor="ms")
            if x1 - x0 > CELL_W - 2 or y1 - y0 > CELL_H - 2:
                ok = False
                break
            if 40 - y0 > BASELINE_Y or y1 - 40 > CELL_H - BASELINE_Y:
                ok = False
                break
        if ok:
            return size, font
        size -= 1
    raise SystemExit("no font size fits the cell")


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "crates/core/assets"
    size, font = pick_font_size()
    glyphs = [render_glyph(ch, font) for ch in CHARSET]

    for i, a in enumerate(glyphs):
        ink = sum(map(sum, a))
        if ink < 8:
            raise SystemExit(f"glyph {CHARSET[i]!r} nearly empty ({ink} px)")
        for j in range(i):
            if glyphs[j] == a:
                raise SystemExit(f"glyphs {CHARSET[j]!r} and {CHARSET[i]!r} identical")

    strip_w = CELL_W * len(CHARSET)
    rows = bytearray()
    for y in range(CELL_H):
        for g in glyphs:
            rows.extend(0 if v else 255 for v in g[y])

    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "atlas.pgm"), "wb") as f:
        f.write(f"P5\n{strip_w} {CELL_H}\n255\n".encode())
        f.write(bytes(rows))
    with open(os.path.join(out_dir, "atlas.txt"), "w") as f:
        f.write(f"cell {CELL_W} {CELL_H}\n")
        for i, ch in enumerate(CHARSET):
            f.write(f"{ch} {i * CELL_W} {CELL_W}\n")
    print(f"wrote {len(CHARSET)} glyphs at font size {size} -> {out_dir}")


if __name__ == "__main__":
    main()
