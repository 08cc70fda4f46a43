#!/usr/bin/env python3
"""Regenerates tests/oracle_data.h.

The frozen values come from independent reference implementations:
  - Pillow's bicubic resampling (mode 'F', no quantization) for the resize
    oracle. Pillow uses the a=-0.5 kernel, half-pixel centers, antialiasing
    on downscale, and border-window renormalization.
  - scikit-image's structural_similarity (gaussian_weights=True, sigma=1.5,
    use_sample_covariance=False, data_range=1) for the SSIM oracle.

Input images are generated from closed-form expressions so the C++ tests can
rebuild them bit-for-bit without reading files.

Usage: python3 tests/oracles/generate_reference_values.py > tests/oracle_data.h
"""

import math
import sys

import numpy as np
from PIL import Image
import PIL
import skimage
from skimage.metrics import structural_similarity


def ramp(c, h, w):
    """Flat ramp over flattened (c,y,x) index, values inside [0.1, 0.9]."""
    total = c * h * w
    idx = np.arange(total, dtype=np.float64).reshape(c, h, w)
    return (0.1 + 0.8 * idx / (total - 1)).astype(np.float32)


def pil_resize_chw(img, out_h, out_w):
    out = np.empty((img.shape[0], out_h, out_w), dtype=np.float32)
    for c in range(img.shape[0]):
        plane = Image.fromarray(img[c], mode="F")
        out[c] = np.asarray(plane.resize((out_w, out_h), Image.BICUBIC),
                            dtype=np.float32)
    return out


def noisy_pair(k, c=3, h=32, w=32):
    cc, yy, xx = np.meshgrid(np.arange(c), np.arange(h), np.arange(w),
                             indexing="ij")
    a = 0.5 + 0.35 * np.sin(0.9 * xx + 1.3 * yy + 2.1 * cc + 0.7 * k)
    amp = 0.02 + 0.015 * k
    n = amp * np.sin(12.9898 * (xx + 1) + 78.233 * (yy + 1) + 37.719 * (cc + 1)
                     + 3.3 * (k + 1))
    b = np.clip(a + n, 0.0, 1.0)
    return a, b


def emit_array(name, ctype, values, fmt):
    print(f"inline constexpr {ctype} {name}[] = {{")
    line = "   "
    for v in values:
        piece = " " + (fmt % v) + ","
        if len(line) + len(piece) > 78:
            print(line)
            line = "   "
        line += piece
    if line.strip():
        print(line)
    print("};")
    print()


def main():
    print("// Generated by tests/oracles/generate_reference_values.py —")
    print("// do not edit by hand. Reference library versions:")
    print(f"//   Pillow {PIL.__version__}, scikit-image {skimage.__version__},"
          f" numpy {np.__version__}")
    print("#ifndef SRTGAN_TESTS_ORACLE_DATA_H_")
    print("#define SRTGAN_TESTS_ORACLE_DATA_H_")
    print()
    print("namespace oracle {")
    print()

    # Bicubic: 3x13x17 ramp -> x0.5 down (3x7x9) -> x2 up (3x14x18).
    src = ramp(3, 13, 17)
    down_h = int(math.floor(0.5 * 13 + 0.5))
    down_w = int(math.floor(0.5 * 17 + 0.5))
    down = pil_resize_chw(src, down_h, down_w)
    up = pil_resize_chw(down, 2 * down_h, 2 * down_w)
    print("// Pillow BICUBIC of the [0.1,0.9] index ramp (see generator script).")
    print(f"inline constexpr int kRampC = 3, kRampH = 13, kRampW = 17;")
    print(f"inline constexpr int kDownH = {down_h}, kDownW = {down_w};")
    print()
    emit_array("kRampDown", "float", down.ravel(), "%.9gf")
    emit_array("kRampUp", "float", up.ravel(), "%.9gf")

    # SSIM over 10 deterministic noisy pairs, 3x32x32, channel-averaged.
    refs = []
    for k in range(10):
        a, b = noisy_pair(k)
        vals = [structural_similarity(a[c], b[c], gaussian_weights=True,
                                      sigma=1.5, use_sample_covariance=False,
                                      data_range=1.0) for c in range(3)]
        refs.append(float(np.mean(vals)))
    print("// scikit-image SSIM per noisy pair (channel-averaged).")
    emit_array("kSsimRef", "double", refs, "%.17g")

    print("}  // namespace oracle")
    print()
    print("#endif  // SRTGAN_TESTS_ORACLE_DATA_H_")


if __name__ == "__main__":
    sys.exit(main())
