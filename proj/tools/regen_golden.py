#!/usr/bin/env python3
# Copyright 2026 The GEF Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the golden CSV files used by the CLI end-to-end tests.

Every value is computed here from first principles with numpy/scipy and
never by running the gef binary, so the goldens are an independent oracle:

  bode            principal complex power of the base quadratic, np.unwrap
  chars           quadratic band edges, scipy.integrate.quad for the ERB,
                  bounded scalar maximization of the group delay
  impulse         scipy.special.jv Bessel form; gammatone column scaled to
                  the envelope maximum of |h| located with scipy.optimize
  cascade-check   identity parameters (the deviation is checked by bound)
  filter          scipy.signal.step of 1/base(s)^2
  bank            scipy.signal.lsim (first-order hold) per channel in
                  scaled time on a generated seconds-domain input
  equiv           direct convolution of the exact impulse response with the
                  fixture input by adaptive quadrature

Usage: python3 tools/regen_golden.py [output_dir]   (default tests/golden)
The command lines each golden belongs to are listed in GOLDEN_COMMANDS and
mirrored in tests/e2e/test_cli.cpp.
"""

import math
import sys
from pathlib import Path

import numpy as np
from scipy import integrate, optimize, signal, special

GOLDEN_COMMANDS = {
    "bode.csv": "bode --Ap 0.05 --Bu 5/2 --grid 0.1:4:41:log",
    "chars.csv": "chars --Ap 0.1 --sweep 3/2:1/2:3",
    "impulse.csv": "impulse --Bu 5/2 --t-max 50 --step 0.5 --gtf",
    "cascade.csv": "cascade-check --Bu 7/3",
    "filter_step.csv": "filter --signal step --Bu 2 --step 0.05 --duration 20 --method {ode,integral}",
    "bank.csv": "bank --input bank_input.csv --cf-map list:500,1000 --Bu 2 --method ode --ode-divisor 4",
    "equiv_integer.csv": "equiv integer --step 0.05 --duration 30 --outputs <file>",
    "equiv_half_integer.csv": "equiv half-integer --step 0.01 --duration 10 --outputs <file>",
}


def fmt(v):
    if isinstance(v, str):
        return v
    if v == 0.0:
        return "0"
    if math.isnan(v):
        return "nan"
    return repr(float(v))


def write(path, header, rows):
    with open(path, "w", newline="\n") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(fmt(v) for v in row) + "\n")


def base(a, b, beta):
    return (a * a + b * b - beta * beta) + 2j * a * beta


def h_exact(b_u, a, b, t):
    t = np.asarray(t, dtype=float)
    nu = b_u - 0.5
    out = np.zeros_like(t)
    pos = t > 0
    tp = t[pos]
    out[pos] = (math.sqrt(math.pi) / math.gamma(b_u) * np.exp(-a * tp)
                * (tp / (2 * b)) ** nu * special.jv(nu, b * tp))
    return out


def bode(out):
    a, b, b_u = 0.05, 1.0, 2.5
    betas = np.geomspace(0.1, 4.0, 41)
    p = base(a, b, betas) ** (-b_u)
    mag = 20 * np.log10(np.abs(p))
    mag -= mag.max()
    ph = np.unwrap(np.angle(p)) / (2 * math.pi)
    ph -= ph[0]
    write(out / "bode.csv", ["beta", "mag_db", "phase_cycles"], zip(betas, mag, ph))


def characteristics(a, b, b_u):
    c = a * a + b * b
    peak = math.sqrt(b * b - a * a)

    def q(n_db):
        r = 10 ** (n_db / (10 * b_u))
        mid = c - 2 * a * a
        disc = math.sqrt(mid * mid - c * c + 4 * r * a * a * b * b)
        return peak / (math.sqrt(mid + disc) - math.sqrt(mid - disc))

    def power(beta):
        return abs(base(a, b, beta)) ** (-2 * b_u)

    total = 0.0
    for lo, hi in [(0, peak), (peak, 2 * peak), (2 * peak, np.inf)]:
        total += integrate.quad(power, lo, hi, epsabs=0, epsrel=1e-13, limit=500)[0]
    erb = total / power(peak)

    def delay(beta):
        return b_u / (2 * math.pi) * 2 * a * (c + beta * beta) / abs(base(a, b, beta)) ** 2

    res = optimize.minimize_scalar(lambda x: -delay(x), bounds=(0.5 * peak, 1.5 * peak),
                                   method="bounded", options={"xatol": 1e-12})
    n = delay(res.x)
    q3, q10, q15 = q(3), q(10), q(15)
    q_erb = peak / erb
    return [peak, q_erb, q3, q10, q15, n, q_erb / n, q_erb / q10, q3 / q15]


def chars(out):
    rows = [[fmt(x)] + characteristics(0.1, 1.0, x) for x in (1.5, 2.0, 2.5, 3.0)]
    write(out / "chars.csv", ["B_u", "beta_peak", "Q_erb", "Q3", "Q10", "Q15", "N",
                              "Qerb_over_N", "Qerb_over_Q10", "Q3_over_Q15"], rows)


def envelope_max(b_u, a, b):
    """Peak of the smooth envelope through the local maxima of |h|."""
    step = math.pi / (32 * b)
    t_end = max(3 * (b_u + 0.5) / a, 40 * math.pi / b)
    t = np.arange(0, t_end + 2 * step, step)
    mag = np.abs(h_exact(b_u, a, b, t))
    peaks = []
    for i in range(1, len(t) - 1):
        if mag[i] >= mag[i - 1] and mag[i] > mag[i + 1]:
            r = optimize.minimize_scalar(
                lambda x: -abs(h_exact(b_u, a, b, np.array([x]))[0]),
                bounds=(t[i - 1], t[i + 1]), method="bounded", options={"xatol": 1e-12})
            peaks.append((r.x, -r.fun))
    k = max(range(len(peaks)), key=lambda i: peaks[i][1])
    (t0, v0), (t1, v1), (t2, v2) = peaks[k - 1], peaks[k], peaks[k + 1]
    coef = np.polyfit([t0, t1, t2], [v0, v1, v2], 2)
    t_star = -coef[1] / (2 * coef[0])
    return max(np.polyval(coef, t_star), v1)


def impulse(out):
    a, b, b_u = 0.1, 1.0, 2.5
    t = np.arange(0, 101) * 0.5
    h = h_exact(b_u, a, b, t)
    gamma = b_u - 1
    t_pk = gamma / a
    scale = envelope_max(b_u, a, b) / (math.exp(-gamma) * (b * t_pk) ** gamma)
    g = scale * np.exp(-a * t) * (b * t) ** gamma * np.cos(b * t - b_u * math.pi / 2)
    write(out / "impulse.csv", ["t_tilde", "h", "h_gtf"], zip(t, h, g))


def cascade(out):
    write(out / "cascade.csv",
          ["B_u", "m", "n", "max_deviation", "beta_at_max", "tolerance", "overflow", "passed"],
          [["7/3", "7", "3", 0.0, 0.0, 1e-10, "0", "1"]])


def base_system(a, b, b_u):
    den = np.array([1.0])
    for _ in range(b_u):
        den = np.polymul(den, [1.0, 2 * a, a * a + b * b])
    return signal.lti([1.0], den)


def filter_step(out):
    t = np.arange(0, 401) * 0.05
    _, y = signal.step(base_system(0.1, 1.0, 2), T=t)
    write(out / "filter_step.csv", ["t_tilde", "q"], zip(t, y))


def bank(out):
    rate = 48000.0
    t = np.arange(0, 481) / rate
    u = np.sin(2 * math.pi * 700 * t) * np.sin(math.pi * t / t[-1]) ** 2
    write(out / "bank_input.csv", ["t", "value"], zip(t, u))
    sys_ = base_system(0.1, 1.0, 2)
    rows = []
    for cf in (500.0, 1000.0):
        omega = 2 * math.pi * cf
        _, y, _ = signal.lsim(sys_, u, omega * t, interp=True)
        rows += [[cf, ti, yi] for ti, yi in zip(t, y)]
    write(out / "bank.csv", ["cf_hz", "t_seconds", "q"], rows)


def convolve(h, u, t):
    if t == 0:
        return 0.0
    val = 0.0
    edges = np.linspace(0, t, int(math.ceil(t / 2)) + 1)
    for lo, hi in zip(edges[:-1], edges[1:]):
        val += integrate.quad(lambda x: h(t - x) * u(x), lo, hi,
                              epsabs=1e-15, epsrel=1e-13, limit=200)[0]
    return val


def equiv(out):
    h3 = lambda x: h_exact(3.0, 0.1, 1.0, np.array([x]))[0]
    u_int = lambda x: (x * math.cos(10 * x) * math.exp(-x / 2)
                       + x ** 3 * math.exp(-x) * math.cos(x))
    t = np.arange(0, 601) * 0.05
    write(out / "equiv_integer.csv", ["t_tilde", "oracle"],
          [(ti, convolve(h3, u_int, ti)) for ti in t])

    h52 = lambda x: h_exact(2.5, 0.1, 1.0, np.array([x]))[0]
    u_half = lambda x: math.exp(-0.1 * x) * special.j0(x)
    t = np.arange(0, 1001) * 0.01
    write(out / "equiv_half_integer.csv", ["t_tilde", "oracle"],
          [(ti, convolve(h52, u_half, ti)) for ti in t])


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "tests" / "golden"
    out.mkdir(parents=True, exist_ok=True)
    for fn in (bode, chars, impulse, cascade, filter_step, bank, equiv):
        fn(out)
    print(f"wrote goldens to {out}")


if __name__ == "__main__":
    main()
