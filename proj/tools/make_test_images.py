#!/usr/bin/env python3
"""Writes the 128x128 natural-image crops used by the segmentation tests.

The sources are the sample photographs bundled with scikit-image.
Run from the repository root: python3 tools/make_test_images.py
"""
import pathlib

import skimage.data

CROPS = {
    "astronaut": (40, 180),
    "coffee": (140, 250),
    "chelsea": (90, 160),
    "rocket": (180, 260),
    "immunohistochemistry": (200, 200),
    "hubble_deep_field": (400, 450),
}
SIZE = 128


def main():
    out_dir = pathlib.Path("tests/data")
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, (row, col) in CROPS.items():
        img = getattr(skimage.data, name)()[row:row + SIZE, col:col + SIZE, :3]
        assert img.shape == (SIZE, SIZE, 3), name
        with open(out_dir / f"{name}_128.ppm", "wb") as f:
            f.write(f"P6\n{SIZE} {SIZE}\n255\n".encode())
            f.write(img.astype("uint8").tobytes())


if __name__ == "__main__":
    main()
