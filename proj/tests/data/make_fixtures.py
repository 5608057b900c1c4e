#!/usr/bin/env python3
# Copyright 2026 The sntest Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the recorded test fixtures in this directory.

The fixtures are oracle values computed with independent implementations,
frozen here so the C++ tests can assert against pre-recorded numbers:

  sw_oracle.json    Shapiro-Wilk (W, p) for 50 frozen datasets, computed by a
                    double-precision port of Royston's AS R94 algorithm
                    (Applied Statistics 44(4), 1995) and cross-checked against
                    scipy.stats.shapiro (agreement ~1e-9 on W).
  mple_oracle.json  Maximum penalized likelihood fits for frozen datasets,
                    computed with scipy.stats.skewnorm.logpdf and
                    scipy.optimize.minimize (best of Nelder-Mead and Powell).
  marks_total.csv   A synthetic 532-row mark-sheet-style CSV used by the CLI
                    integration tests (includes a few unparseable rows).

Requires numpy and scipy. Run from this directory:  python3 make_fixtures.py
"""

import json

import numpy as np
from scipy import optimize, stats
from scipy.stats import norm, skewnorm

# ---------------------------------------------------------------------------
# Double-precision Royston (1995) Shapiro-Wilk, complete samples only.
# ---------------------------------------------------------------------------

C1 = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056]
C2 = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633]
C3 = [0.544, -0.39978, 0.025054, -6.714e-4]
C4 = [1.3822, -0.77857, 0.062767, -0.0020322]
C5 = [-1.5861, -0.31082, -0.083751, 0.0038915]
C6 = [-0.4803, -0.082676, 0.0030302]
G = [-2.273, 0.459]


def _poly(c, x):
    r = 0.0
    for ci in reversed(c):
        r = r * x + ci
    return r


def sw_coefficients(n):
    """Full antisymmetric coefficient vector for ascending order statistics."""
    if n == 3:
        m = np.sqrt(0.5)
        return np.array([-m, 0.0, m])
    n2 = n // 2
    an = float(n)
    m = norm.ppf((np.arange(1, n2 + 1) - 0.375) / (an + 0.25))
    summ2 = 2.0 * np.sum(m * m)
    ssumm2 = np.sqrt(summ2)
    rsn = 1.0 / np.sqrt(an)
    a1 = _poly(C1, rsn) - m[0] / ssumm2
    if n > 5:
        a2 = _poly(C2, rsn) - m[1] / ssumm2
        fac = np.sqrt((summ2 - 2.0 * m[0] ** 2 - 2.0 * m[1] ** 2)
                      / (1.0 - 2.0 * a1 ** 2 - 2.0 * a2 ** 2))
        lower = np.concatenate(([-a1, -a2], m[2:] / fac))
    else:
        fac = np.sqrt((summ2 - 2.0 * m[0] ** 2) / (1.0 - 2.0 * a1 ** 2))
        lower = np.concatenate(([-a1], m[1:] / fac))
    if n % 2 == 0:
        return np.concatenate((lower, -lower[::-1]))
    return np.concatenate((lower, [0.0], -lower[::-1]))


def sw_test(x):
    x = np.sort(np.asarray(x, dtype=float))
    n = len(x)
    a = sw_coefficients(n)
    xc = x - x.mean()
    ac = a - a.mean()
    ssx = float(xc @ xc)
    ssa = float(ac @ ac)
    sax = float(ac @ xc)
    ssassx = np.sqrt(ssa * ssx)
    w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx)
    w = 1.0 - w1
    if n == 3:
        pw = 1.90985931710274 * (np.arcsin(np.sqrt(w)) - 1.04719755119660)
        return w, float(min(max(pw, 0.0), 1.0))
    y = np.log(w1)
    an = float(n)
    if n <= 11:
        gamma = _poly(G, an)
        if y >= gamma:
            return w, 1e-99
        y = -np.log(gamma - y)
        mu = _poly(C3, an)
        sig = np.exp(_poly(C4, an))
    else:
        mu = _poly(C5, np.log(an))
        sig = np.exp(_poly(C6, np.log(an)))
    return w, float(norm.sf((y - mu) / sig))


# ---------------------------------------------------------------------------
# Independent maximum penalized likelihood fit (scipy-based).
# ---------------------------------------------------------------------------

PEN_C1 = 0.87591
PEN_C2 = 0.85625


def cp_to_dp(mean, sd, g1):
    b = np.sqrt(2.0 / np.pi)
    c = (4.0 - np.pi) / 2.0
    s = np.cbrt(g1 / c)
    t = s / np.sqrt(1.0 + s * s)
    delta = t / b
    lam = delta / np.sqrt(1.0 - delta * delta)
    omega = sd / np.sqrt(1.0 - t * t)
    return mean - omega * t, omega, lam


def penalized_nll(theta, x):
    xi, logw, lam = theta
    ll = skewnorm.logpdf(x, lam, loc=xi, scale=np.exp(logw)).sum()
    return -(ll - PEN_C1 * np.log1p(PEN_C2 * lam * lam))


def mple(x):
    g1 = float(np.clip(stats.skew(x), -0.95, 0.95))
    xi0, w0, l0 = cp_to_dp(float(x.mean()), float(x.std()), g1)
    start = [xi0, np.log(w0), l0]
    best = None
    for method, opts in (
        ("Nelder-Mead", dict(xatol=1e-12, fatol=1e-12, maxiter=40000, maxfev=40000)),
        ("Powell", dict(xtol=1e-12, ftol=1e-12, maxiter=40000)),
    ):
        r = optimize.minimize(penalized_nll, start, args=(x,), method=method, options=opts)
        if best is None or r.fun < best.fun:
            best = r
    xi, logw, lam = best.x
    omega = float(np.exp(logw))
    loglik = float(skewnorm.logpdf(x, lam, loc=xi, scale=omega).sum())
    return float(xi), omega, float(lam), float(-best.fun), loglik


# ---------------------------------------------------------------------------
# Fixture generation.
# ---------------------------------------------------------------------------

def gen_sw_oracle():
    rng = np.random.default_rng(20260114)
    sources = [
        ("normal", lambda n: rng.normal(50.0, 10.0, n)),
        ("skewnorm", lambda n: skewnorm.rvs(4.0, loc=60.0, scale=12.0, size=n, random_state=rng)),
        ("exponential", lambda n: rng.exponential(2.0, n)),
        ("uniform", lambda n: rng.uniform(0.0, 100.0, n)),
        ("student_t5", lambda n: rng.standard_t(5, n)),
    ]
    sizes = [10, 10, 50, 50, 100, 100, 500, 532, 2000]
    entries = []
    k = 0
    while len(entries) < 50:
        n = sizes[len(entries) % len(sizes)]
        name, gen = sources[k % len(sources)]
        k += 1
        x = np.asarray(gen(n), dtype=float)
        w, p = sw_test(x)
        ws, ps = stats.shapiro(x)
        assert abs(w - ws) < 2e-8, (name, n, w, ws)
        assert abs(p - ps) <= 5e-6 * max(ps, 1e-300), (name, n, p, ps)
        entries.append({
            "id": f"{name}_n{n}_{len(entries):02d}",
            "n": n,
            "w": w,
            "p": p,
            "values": [float(v) for v in x],
        })
    # Royston's published driver dataset (AS R94): W = 0.83467, p = 0.000914.
    royston = [.139, .157, .175, .256, .344, .413, .503, .577, .614, .655,
               .954, 1.392, 1.557, 1.648, 1.690, 1.994, 2.174, 2.206, 3.245,
               3.510, 3.571, 4.354, 4.980, 6.084, 8.351]
    w, p = sw_test(royston)
    entries.append({"id": "royston1995_driver_n25", "n": 25, "w": w, "p": p,
                    "values": royston})
    with open("sw_oracle.json", "w") as f:
        json.dump({"algorithm": "royston-1995-as-r94 (double precision)",
                   "cross_checked_with": "scipy.stats.shapiro 1.15.3",
                   "datasets": entries}, f, indent=1)
    print(f"sw_oracle.json: {len(entries)} datasets")


def gen_mple_oracle():
    cases = [
        ("sn_mid", 3.0, 10.0, 5.0, 200, 101),
        ("sn_mid2", 3.0, 10.0, 5.0, 200, 202),
        ("normal", 0.0, 50.0, 8.0, 500, 303),
        ("sn_neg", -4.0, 50.0, 12.0, 500, 404),
        ("sn_sharp", 8.0, 0.0, 1.0, 1000, 505),
        ("sn_large", 3.0, 10.0, 5.0, 2000, 606),
    ]
    entries = []
    for name, a, loc, scale, n, seed in cases:
        x = skewnorm.rvs(a, loc=loc, scale=scale, size=n,
                         random_state=np.random.default_rng(seed))
        xi, omega, lam, plk, ll = mple(x)
        entries.append({
            "id": f"{name}_n{n}",
            "true": {"lambda": a, "xi": loc, "omega": scale},
            "fit": {"xi": xi, "omega": omega, "lambda": lam,
                    "penalized_loglik": plk, "loglik": ll},
            "values": [float(v) for v in x],
        })
        print(f"  {name}_n{n}: xi={xi:.4f} omega={omega:.4f} lambda={lam:.4f} plk={plk:.6f}")
    with open("mple_oracle.json", "w") as f:
        json.dump({"optimizer": "scipy.optimize.minimize best-of(Nelder-Mead, Powell)",
                   "penalty": "0.87591*log1p(0.85625*lambda^2)",
                   "datasets": entries}, f, indent=1)
    print(f"mple_oracle.json: {len(entries)} datasets")


def gen_marks_csv():
    rng = np.random.default_rng(777)
    marks = skewnorm.rvs(4.0, loc=55.0, scale=14.0, size=532, random_state=rng)
    mid = skewnorm.rvs(3.0, loc=22.0, scale=7.0, size=532, random_state=rng)
    lines = ["student,Total,Midterm"]
    for i, (t, m) in enumerate(zip(marks, mid), start=1):
        lines.append(f"S{i:04d},{t:.2f},{m:.2f}")
    # Unparseable rows the reader must skip (and count in a warning).
    lines.insert(100, "S9998,,31.00")
    lines.insert(200, "S9999,AB,AB")
    with open("marks_total.csv", "w", newline="") as f:
        f.write("\r\n".join(lines) + "\r\n")
    print(f"marks_total.csv: {len(lines) - 1} data rows (2 unparseable)")


if __name__ == "__main__":
    gen_sw_oracle()
    gen_mple_oracle()
    gen_marks_csv()
