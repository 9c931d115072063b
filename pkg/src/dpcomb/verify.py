"""Cross-path verification suite behind ``dpcomb verify``."""
import math
from dataclasses import dataclass

import numpy as np

from . import comb, oracle, regularized, transfer


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name:<28} {self.detail}"


def closed_vs_products(thetas=np.arange(1, 10) / 10, ns=range(1, 13), points=500, tol=1e-10):
    ks = np.linspace(math.pi / points, math.pi, points)
    worst = 0.0
    for th in thetas:
        for n in ns:
            diff = np.abs(comb.transmission_closed_form(th, ks, n)
                          - transfer.transmission_from_products(th, n, ks))
            worst = max(worst, float(diff.max()))
    return Check("closed_form_vs_products", worst <= tol, f"max |dT| = {worst:.2e} (tol {tol:g})")


def scalar_products(tol=1e-10):
    # factor-by-factor through transfer.single_matrix; compares complex t and r,
    # since a sign or phase slip in the off-diagonal leaves T itself unchanged
    worst = 0.0
    for th in (0.2, 0.55, 0.9, 1.7):
        for n in (1, 2, 3, 6, 11):
            for k in np.linspace(0.1, 3.0, 7):
                m = transfer.comb_matrix(transfer.CombSpec(n, th), float(k))
                got = transfer.amplitudes_from_matrix(m)
                ref = comb.amplitudes_closed_form(th, float(k), n)
                worst = max(worst, abs(got.t - ref.t), abs(got.r - ref.r))
    return Check("scalar_matrix_path", worst <= tol, f"max |dt|, |dr| = {worst:.2e} (tol {tol:g})")


def invariances(samples=2000, tol=1e-12, seed=0):
    rng = np.random.default_rng(seed)
    thetas = rng.uniform(0.05, 0.95, samples)
    ks = rng.uniform(0.0, math.pi, samples)
    ns = rng.integers(1, 13, samples)
    worst = {"periodicity": 0.0, "mirror": 0.0, "theta_sign": 0.0, "theta_inverse": 0.0}
    for th, k, n in zip(thetas, ks, ns):
        base = comb.transmission_closed_form(th, k, n)
        worst["periodicity"] = max(worst["periodicity"], abs(comb.transmission_closed_form(th, k + math.pi, n) - base))
        worst["mirror"] = max(worst["mirror"], abs(comb.transmission_closed_form(th, math.pi - k, n) - base))
        worst["theta_sign"] = max(worst["theta_sign"], abs(comb.transmission_closed_form(-th, k, n) - base))
        worst["theta_inverse"] = max(worst["theta_inverse"], abs(comb.transmission_closed_form(1 / th, k, n) - base))
    return [Check(name, err <= tol, f"max |dT| = {err:.2e} (tol {tol:g})") for name, err in worst.items()]


def resonance_values(tol=1e-10):
    worst = 0.0
    for th in (0.1, 0.3, 0.5):
        for n in range(2, 11):
            for kj in comb.resonances(th, n):
                worst = max(worst, 1.0 - comb.transmission_closed_form(th, kj, n))
    return Check("resonances_reach_one", worst <= tol, f"max 1 - T(k_j) = {worst:.2e} (tol {tol:g})")


def even_identity(tol=1e-12):
    worst = 0.0
    for th in (0.1, 0.5, 0.9):
        for n in range(2, 41, 2):
            m = transfer.comb_matrix(transfer.CombSpec(n, th), math.pi / 2)
            worst = max(worst, m.distance(transfer.IDENTITY))
    return Check("even_n_identity_at_pi_2", worst <= tol, f"max |M - I| = {worst:.2e} (tol {tol:g})")


def eta_example(tol=1e-4):
    eta = regularized.example_potential(0.2).eta
    return Check("eta_theta_0.2", abs(eta - 0.21296) <= tol, f"eta = {eta:.7f} (target 0.21296 +- {tol:g})")


def half_bound_state(tol=1e-8):
    worst = 0.0
    for th in (0.2, 0.5, 2.0):
        pair = oracle.integrate_dipole(regularized.example_potential(th), 0.0, 1.0)
        worst = max(worst, abs(pair.y1 - th), abs(pair.y1p))
    return Check("half_bound_state_k0", worst <= tol, f"max |y(1) - theta|, |y'(1)| = {worst:.2e}")


def oracle_vs_analytic(tol=1e-6):
    worst = 0.0
    for th in (0.2, 0.5, 2.0):
        pot = regularized.example_potential(th)
        for eps in (0.05, 0.1, 0.2):
            for k in (0.5, 1.0, 2.5):
                a = regularized.dipole_matrix_analytic(th, pot.eta, 0.0, k, eps)
                b = oracle.dipole_matrix_numeric(pot, 0.0, k, eps)
                worst = max(worst, a.distance(b))
    return Check("oracle_vs_analytic_dipole", worst <= tol, f"max entry diff = {worst:.2e} (tol {tol:g})")


def convergence_points(theta, count=20, margin=0.05):
    """Off-resonance points: equispaced on both sides outside the pass-band."""
    band = comb.passband(theta)
    half = count // 2
    left = np.linspace(margin, band.lo - margin, half)
    right = np.linspace(band.hi + margin, math.pi - margin, count - half)
    return np.concatenate([left, right])


def convergence_ratios(theta=0.2, ns=(2, 3, 4), epsilons=(0.1, 0.05, 0.025)):
    pot = regularized.example_potential(theta)
    ks = convergence_points(theta)
    ratios = {}
    for n in ns:
        exact = comb.transmission_closed_form(theta, ks, n)
        errs = [np.abs(regularized.regularized_transmission_grid(
            regularized.DipoleArraySpec(pot, n, eps), ks) - exact) for eps in epsilons]
        ratios[n] = np.array([errs[i] / errs[i + 1] for i in range(len(errs) - 1)])
    return ks, ratios


def epsilon_convergence(lo=1.6, hi=2.6):
    _, ratios = convergence_ratios()
    allr = np.concatenate([r.ravel() for r in ratios.values()])
    ok = bool(np.all((allr >= lo) & (allr <= hi)))
    return Check("epsilon_convergence", ok,
                 f"halving ratios in [{allr.min():.2f}, {allr.max():.2f}] (need [{lo}, {hi}])")


def run(level="fast"):
    if level not in ("fast", "full"):
        raise ValueError(f"unknown level {level!r}")
    checks = [closed_vs_products(), scalar_products(), *invariances(), resonance_values(), even_identity()]
    if level == "full":
        checks += [eta_example(), half_bound_state(), oracle_vs_analytic(), epsilon_convergence()]
    return checks
