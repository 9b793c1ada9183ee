"""Compare the classical error-diffusion dithers on ramps and synthetic images.

Renders Floyd-Steinberg, Ostromoukhov, and white-noise halftones of a
horizontal gray ramp plus a few synthetic color images, then prints a
tone-PSNR / SSIM table. Outputs land in demos/out/classic/.

Run:  python demos/classic_dithering.py
"""

import os

import numpy as np

from rehalf import data, halftone, imgio, metrics

OUT = os.path.join(os.path.dirname(__file__), "out", "classic")

def _noise_dither(gray, seed):
    # per-pixel Bernoulli thresholding, the flat-spectrum baseline
    rng = np.random.default_rng(seed)
    return (rng.random(gray.shape) < gray).astype(np.uint8)


METHODS = {
    "floyd-steinberg": lambda g, seed: halftone.floyd_steinberg(g),
    "ostromoukhov": lambda g, seed: halftone.ostromoukhov(g),
    "white-noise": _noise_dither,
}


def ramp_panel():
    # left-to-right sweep from black to white, one row per method
    h, w = 96, 512
    ramp = np.tile(np.linspace(0.0, 1.0, w, dtype=np.float64), (h, 1))
    imgio.save_gray_png(os.path.join(OUT, "ramp_input.png"), ramp)
    for name, fn in METHODS.items():
        out = fn(ramp, 0)
        imgio.save_binary_png(os.path.join(OUT, f"ramp_{name}.png"), out)
        print(f"ramp {name:16s} mean={out.mean():.4f} (input mean {ramp.mean():.4f})")


def image_table():
    images = data.synthetic_color_dataset(count=6, size=128, seed=7)
    for name, fn in METHODS.items():
        pairs = []
        for i, img in enumerate(images):
            gray = halftone.plain_gray(img)
            half = fn(gray, 100 + i)
            pairs.append((f"img{i}", half, gray))
            if i == 0:
                imgio.save_binary_png(os.path.join(OUT, f"sample_{name}.png"), half)
        report = metrics.halftone_report(pairs)
        print(f"{name:16s} tone PSNR {report.mean('tone_psnr'):6.2f} dB"
              f"   SSIM {report.mean('ssim'):.4f}")


def main():
    os.makedirs(OUT, exist_ok=True)
    ramp_panel()
    print()
    image_table()
    print(f"\nwrote panels to {OUT}")


if __name__ == "__main__":
    main()
