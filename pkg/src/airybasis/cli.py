"""Command-line front end: figure data emission and self-verification.

Subcommands
    eigs            energy table E_0..E_{N-1} of V = lambda|x|
    eigenfunctions  columnar samples of the lowest eigenfunctions
    bounce          mean-position trajectory of a Gaussian packet
    grin            intensity map |E(x,z)|^2 of the GRIN wavelet
    verify          run the internal invariant suite

Options resolve as flags > config file (key=value lines) > defaults.
Output is deterministic: the same configuration produces byte-identical
files, with all numbers printed to 9 significant digits.

Exit codes: 0 success, 1 usage error, 2 precision/convergence error,
3 verification failure.
"""

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import airy, continuum, statemaps
from .dynamics import (GaussianPacketParams, evolve, gaussian_packet, project,
                       trajectory)
from .errors import DomainError, PrecisionError
from .grin import GrinMedium, WaveletParams, airy_wavelet, intensity_map
from .quadrature import inner_product, make_grid
from .spectrum import build_basis, even_energy, odd_energy

__all__ = ["main"]

_T_G = 2.0 ** (-1.0 / 3.0)

_DEFAULTS = {
    "lambda": 1.0,
    "xmin": -40.0,
    "xmax": 40.0,
    "points": 8001,
    "nstates": 6,
    "format": "csv",
    "out": "-",
    "x0": 10.0,
    "sigma": 2.0,
    "tg": _T_G,
    "tmax": 250.0,
    "dt": 0.05,
    "q": -1.472910,
    "kappa": 1.0,
    "zmax": 200.0,
    "nz": 400,
    "fuzz-energy": 0.0,
}

_FLOAT_KEYS = {"lambda", "xmin", "xmax", "x0", "sigma", "tg", "tmax", "dt",
               "q", "kappa", "zmax", "fuzz-energy"}
_INT_KEYS = {"points", "nstates", "nz"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; the contract wants 1
    def error(self, message):
        raise UsageError(message)


def _fmt(value):
    return f"{value:.9g}"


def _coerce(key, raw):
    try:
        if key in _FLOAT_KEYS:
            return float(raw)
        if key in _INT_KEYS:
            return int(raw)
    except ValueError:
        raise UsageError(f"bad value {raw!r} for option {key!r}")
    if key == "format" and raw not in ("csv", "json"):
        raise UsageError(f"format must be csv or json, not {raw!r}")
    return raw


def _read_config(path):
    opts = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}")
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, _, raw = line.partition("=")
        key = key.strip()
        if key not in _DEFAULTS:
            raise UsageError(f"{path}:{lineno}: unknown option {key!r}")
        opts[key] = _coerce(key, raw.strip())
    return opts


_ATTR_FOR_KEY = {"lambda": "lam", "fuzz-energy": "fuzz_energy"}


def _resolve(args, keys):
    """Merge flag values, config file entries and defaults."""
    config = _read_config(args.config) if args.config else {}
    merged = {}
    for key in keys:
        flag = getattr(args, _ATTR_FOR_KEY.get(key, key))
        if flag is not None:
            merged[key] = flag
        elif key in config:
            merged[key] = config[key]
        else:
            merged[key] = _DEFAULTS[key]
    return merged


def _validate_common(opt):
    if not opt["lambda"] > 0.0:
        raise UsageError("--lambda must be positive")
    if not opt["xmin"] < opt["xmax"]:
        raise UsageError("--xmin must be below --xmax")
    if opt["points"] < 3:
        raise UsageError("--points must be at least 3")
    if opt["nstates"] < 1:
        raise UsageError("--nstates must be at least 1")


def _emit(opt, columns, rows, out_path, fmt):
    """Serialize one table deterministically."""
    meta = {k: opt[k] for k in sorted(opt)}
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(
                ",".join(v if isinstance(v, str) else _fmt(v) for v in row)
            )
        text = "\n".join(lines) + "\n"
    else:
        data_rows = [
            [v if isinstance(v, str) else float(_fmt(v)) for v in row]
            for row in rows
        ]
        text = json.dumps(
            {"meta": meta, "data": {"columns": columns, "rows": data_rows}},
            indent=1,
        ) + "\n"
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _energies(lam, n):
    out = []
    for i in range(n):
        if i % 2 == 0:
            out.append(("even", even_energy(i // 2, lam)))
        else:
            out.append(("odd", odd_energy(i // 2, lam)))
    return out


def cmd_eigs(args):
    opt = _resolve(args, ["lambda", "nstates", "format", "out"])
    if not opt["lambda"] > 0.0:
        raise UsageError("--lambda must be positive")
    if opt["nstates"] < 1:
        raise UsageError("--nstates must be at least 1")
    rows = [
        (n, parity, energy)
        for n, (parity, energy) in enumerate(_energies(opt["lambda"],
                                                       opt["nstates"]))
    ]
    _emit(opt, ["n", "parity", "energy"], rows, opt["out"], opt["format"])
    return 0


def cmd_eigenfunctions(args):
    opt = _resolve(
        args, ["lambda", "xmin", "xmax", "points", "nstates", "format", "out"]
    )
    _validate_common(opt)
    grid = make_grid(opt["xmin"], opt["xmax"], opt["points"])
    basis = build_basis(opt["lambda"], opt["nstates"], grid)
    columns = ["x"] + [f"psi_{n}" for n in range(opt["nstates"])]
    psi = basis.psi_matrix
    rows = [
        tuple([grid.points[i]] + [float(psi[n, i]) for n in range(len(psi))])
        for i in range(len(grid.points))
    ]
    _emit(opt, columns, rows, opt["out"], opt["format"])
    return 0


def cmd_bounce(args):
    opt = _resolve(
        args,
        ["lambda", "xmin", "xmax", "points", "nstates", "format", "out",
         "x0", "sigma", "tg", "tmax", "dt"],
    )
    # the packet needs room and many states; defaults differ from the
    # eigenfunction commands
    if args.xmin is None and args.config is None:
        opt["xmin"], opt["xmax"], opt["points"] = -45.0, 45.0, 9001
    if args.nstates is None and args.config is None:
        opt["nstates"] = 120
    _validate_common(opt)
    if not opt["sigma"] > 0.0:
        raise UsageError("--sigma must be positive")
    if not (opt["tmax"] > 0.0 and opt["dt"] > 0.0 and opt["tg"] > 0.0):
        raise UsageError("--tmax, --dt and --tg must be positive")
    grid = make_grid(opt["xmin"], opt["xmax"], opt["points"])
    basis = build_basis(opt["lambda"], opt["nstates"], grid)
    packet = GaussianPacketParams(x0=opt["x0"], sigma=opt["sigma"])
    times = np.arange(0.0, opt["tmax"] * opt["tg"], opt["dt"] * opt["tg"])
    rows = trajectory(packet, basis, times)
    _emit(opt, ["t", "mean_x"], rows, opt["out"], opt["format"])
    return 0


def _grin_computation_grid(lam, nstates, display_halfwidth):
    """Grid wide enough for the basis, regardless of the display window."""
    top = _energies(lam, nstates)[-1][1]
    need = top / lam + 8.5 * (2.0 * lam) ** (-1.0 / 3.0)
    half = float(np.ceil(max(need, display_halfwidth + 2.0)))
    n = 2 * int(round(half / 0.02)) + 1
    return make_grid(-half, half, n)


def cmd_grin(args):
    opt = _resolve(
        args,
        ["lambda", "xmin", "xmax", "points", "nstates", "format", "out",
         "q", "kappa", "zmax", "nz"],
    )
    # figure defaults per the map geometry: lambda 0.1, display |x|<=30
    if args.lam is None and args.config is None:
        opt["lambda"] = 0.1
    if args.xmin is None and args.config is None:
        opt["xmin"], opt["xmax"] = -30.0, 30.0
    if args.nstates is None and args.config is None:
        opt["nstates"] = 60
    _validate_common(opt)
    if not opt["kappa"] > 0.0:
        raise UsageError("--kappa must be positive")
    if not (opt["zmax"] > 0.0 and opt["nz"] >= 1):
        raise UsageError("--zmax and --nz must be positive")

    halfwidth = max(abs(opt["xmin"]), abs(opt["xmax"]))
    grid = _grin_computation_grid(opt["lambda"], opt["nstates"], halfwidth)
    basis = build_basis(opt["lambda"], opt["nstates"], grid)
    medium = GrinMedium(kappa=opt["kappa"], lam=opt["lambda"])
    field = airy_wavelet(WaveletParams(q=opt["q"]), grid)
    zs = np.linspace(0.0, opt["zmax"], opt["nz"])
    im = intensity_map(field, medium, basis, zs)

    # display slice, decimated to about 0.1 spacing
    x = grid.points
    keep = np.where((x >= opt["xmin"]) & (x <= opt["xmax"]))[0]
    stride = max(1, int(round(0.1 / grid.spacing)))
    keep = keep[::stride]
    columns = ["z"] + [f"I(x={_fmt(x[i])})" for i in keep]
    rows = [tuple([zs[j]] + list(im[j, keep])) for j in range(len(zs))]
    _emit(opt, columns, rows, opt["out"], opt["format"])
    return 0


# ---------------------------------------------------------------------------
# verification suite

def _verify_checks(fuzz):
    """Yield (name, ok, detail) tuples; order is fixed."""
    grid = make_grid(-40.0, 40.0, 8001)
    basis = build_basis(1.0, 20, grid)
    lam8 = [_energies(8.0, 12)[i][1] for i in range(12)]
    lam1 = [_energies(1.0, 12)[i][1] for i in range(12)]

    zt = airy.zero_table(30)
    yield ("zero-interlacing",
           all(zt.ai_prime_zeros[k] > zt.ai_zeros[k] > zt.ai_prime_zeros[k + 1]
               for k in range(29)),
           "a'_n and a_n strictly interlace over 30 zeros")

    resid = max(abs(airy.airy_ai(z).value) for z in zt.ai_zeros)
    resid_p = max(abs(airy.airy_ai_prime(z).value) for z in zt.ai_prime_zeros)
    yield ("zero-residual", resid < 1e-9 and resid_p < 1e-9,
           f"|Ai(a_n)| <= {resid:.1e}, |Ai'(a'_n)| <= {resid_p:.1e}")

    xs = np.linspace(-12.0, 6.0, 3601)
    h = xs[1] - xs[0]
    v = airy.ai_values(xs)
    lap = (-v[4:] + 16 * v[3:-1] - 30 * v[2:-2] + 16 * v[1:-3] - v[:-4]) / (
        12 * h * h
    )
    ode = float(np.max(np.abs(lap - xs[2:-2] * v[2:-2])))
    yield ("airy-ode-residual", ode < 1e-6, f"max |Ai'' - x Ai| = {ode:.1e}")

    gram = basis.psi_matrix @ (grid.weights[None, :] * basis.psi_matrix).T
    gdev = float(np.max(np.abs(gram - np.eye(20))))
    yield ("orthonormality", gdev < 1e-6, f"Gram deviation {gdev:.1e}")

    sdev = max(abs(e8 / e1 - 4.0) for e8, e1 in zip(lam8, lam1))
    yield ("energy-scaling", sdev < 1e-12,
           f"max |E(lam=8)/E(lam=1) - 4| = {sdev:.1e}")

    from .oracle import build_hamiltonian, diagonalize
    pairs = diagonalize(build_hamiltonian(1.0, grid), 6)
    odev = max(abs(pairs[n][0] - lam1[n]) for n in range(6))
    yield ("oracle-agreement", odev < 1e-4,
           f"max finite-difference energy error {odev:.1e}")

    # psi''' jumps at the potential kink, so the stencil is only valid
    # where it does not straddle x = 0
    away = np.abs(grid.points[2:-2]) > 3.0 * grid.spacing
    worst = 0.0
    for st in basis.states[:6]:
        y = st.samples.samples.real
        lap = (-y[4:] + 16 * y[3:-1] - 30 * y[2:-2] + 16 * y[1:-3]
               - y[:-4]) / (12 * grid.spacing**2)
        r = -0.5 * lap + (np.abs(grid.points[2:-2]) - st.energy) * y[2:-2]
        worst = max(worst, float(np.max(np.abs(r[away]))))
    yield ("eigenstate-ode-residual", worst < 1e-4,
           f"max Schrodinger residual {worst:.1e} away from the kink")

    edge = max(
        max(abs(st.samples.samples[0]), abs(st.samples.samples[-1]))
        for st in basis.states
    )
    yield ("boundary-decay", edge < 1e-8, f"max edge amplitude {edge:.1e}")

    packet = gaussian_packet(GaussianPacketParams(x0=3.0, sigma=1.0), grid)
    coeffs = project(packet, basis)
    times = np.linspace(0.0, 100.0 * _T_G, 21)
    norms = [evolve(coeffs, basis, t).norm() for t in times]
    ndrift = float(np.max(np.abs(np.array(norms) - norms[0])))
    yield ("unitarity-norm-drift", ndrift < 1e-8,
           f"norm drift {ndrift:.1e} over t in [0, 100 t_g]")

    # evolution phases may be deliberately fuzzed; the reference side
    # always uses the true energies
    fuzzed = basis.energies + fuzz * (-1.0) ** np.arange(20)
    dev = 0.0
    for t in times[1:6]:
        ph = np.exp(-1j * t * fuzzed)
        phi_t = (coeffs.c * ph) @ basis.psi_matrix
        lhs = np.sum(grid.weights * np.conj(packet.samples) * phi_t)
        rhs = np.sum(np.abs(coeffs.c) ** 2 * np.exp(-1j * t * basis.energies))
        dev = max(dev, abs(lhs - rhs))
    yield ("evolution-consistency", dev < 1e-8,
           f"autocorrelation identity deviation {dev:.1e}")

    pts = np.linspace(-6.0, 3.0, 5)
    bdev = max(
        abs(statemaps.airy_from_momentum(float(x)).real
            - airy.airy_ai(float(x)).value)
        for x in pts
    )
    yield ("fourier-bridge", bdev < 1e-3,
           f"momentum-integral vs direct Ai deviation {bdev:.1e}")

    dg = make_grid(-20.0, 8.0, 5601)
    hd = dg.spacing
    worst = 0.0
    for gam in (-2.0, 0.0, 1.0, 5.0):
        wf = continuum.displaced_airy(continuum.DisplacedAiryParams(gam), dg)
        y = wf.samples.real
        lap = (-y[4:] + 16 * y[3:-1] - 30 * y[2:-2] + 16 * y[1:-3]
               - y[:-4]) / (12 * hd * hd)
        r = -lap + (dg.points[2:-2] - gam) * y[2:-2]
        nrm = float(np.sqrt(np.sum(y[2:-2] ** 2)))
        worst = max(worst, float(np.sqrt(np.sum(r**2))) / nrm)
    yield ("displaced-airy-eigenrelation", worst < 1e-5,
           f"max relative operator residual {worst:.1e}")

    defect = 0.0
    for x in (0.0, 1.0, -2.5):
        vec = statemaps.fock_position_state(x, 200)
        c = vec.coeffs
        c_next = (np.sqrt(2.0) * x * c[200] - np.sqrt(200.0) * c[199]) / (
            np.sqrt(201.0)
        )
        s = float(np.sum(c**2))
        predicted = x - np.sqrt(201.0 / 2.0) * c[200] * c_next / s
        defect = max(defect,
                     abs(statemaps.quadrature_expectation(vec) - predicted))
    yield ("fock-quadrature-defect", defect < 1e-12,
           f"truncation-defect identity residual {defect:.1e}")

    ggrid = _grin_computation_grid(0.1, 60, 30.0)
    gbasis = build_basis(0.1, 60, ggrid)
    medium = GrinMedium(kappa=1.0, lam=0.1)
    field = airy_wavelet(WaveletParams(q=-1.472910), ggrid)
    im = intensity_map(field, medium, gbasis, np.linspace(0.0, 60.0, 50))
    mdev = float(np.max(np.abs(im - im[:, ::-1])))
    rdev = float(np.max(np.abs(im @ ggrid.weights - 1.0)))
    yield ("grin-map-symmetry", mdev < 1e-8 and rdev < 1e-8,
           f"mirror deviation {mdev:.1e}, row-norm deviation {rdev:.1e}")


def cmd_verify(args):
    opt = _resolve(args, ["lambda", "format", "out", "fuzz-energy"])
    results = list(_verify_checks(opt["fuzz-energy"]))
    rows = [
        (name, "pass" if ok else "FAIL", detail)
        for name, ok, detail in results
    ]
    _emit(opt, ["check", "status", "detail"], rows, opt["out"], opt["format"])
    failed = [name for name, ok, _ in results if not ok]
    if failed:
        sys.stderr.write(
            f"{len(failed)} of {len(results)} checks failed: "
            + ", ".join(failed) + "\n"
        )
        return 3
    return 0


# ---------------------------------------------------------------------------

def _add_common(sub):
    sub.add_argument("--lambda", dest="lam", type=float, default=None,
                     help="potential slope (default 1.0)")
    sub.add_argument("--xmin", type=float, default=None)
    sub.add_argument("--xmax", type=float, default=None)
    sub.add_argument("--points", type=int, default=None,
                     help="grid point count (odd keeps Simpson exact)")
    sub.add_argument("--nstates", type=int, default=None,
                     help="number of eigenstates")
    sub.add_argument("--format", choices=("csv", "json"), default=None)
    sub.add_argument("--out", default=None, help="output path, - for stdout")
    sub.add_argument("--config", default=None,
                     help="key=value option file, overridden by flags")


def _build_parser():
    parser = _Parser(prog="airybasis",
                     description="Airy eigenbasis of V = lambda|x|: spectra, "
                                 "packet dynamics, GRIN maps, verification.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("eigs", help="energy table")
    _add_common(sub)
    sub.set_defaults(func=cmd_eigs)

    sub = subs.add_parser("eigenfunctions", help="eigenfunction samples")
    _add_common(sub)
    sub.set_defaults(func=cmd_eigenfunctions)

    sub = subs.add_parser("bounce", help="packet mean-position trajectory")
    _add_common(sub)
    sub.add_argument("--x0", type=float, default=None, help="packet center")
    sub.add_argument("--sigma", type=float, default=None, help="packet width")
    sub.add_argument("--tg", type=float, default=None,
                     help="time unit (default 2^(-1/3))")
    sub.add_argument("--tmax", type=float, default=None,
                     help="scan length in units of tg")
    sub.add_argument("--dt", type=float, default=None,
                     help="time step in units of tg")
    sub.set_defaults(func=cmd_bounce)

    sub = subs.add_parser("grin", help="GRIN intensity map")
    _add_common(sub)
    sub.add_argument("--q", type=float, default=None,
                     help="wavelet shift parameter")
    sub.add_argument("--kappa", type=float, default=None)
    sub.add_argument("--zmax", type=float, default=None)
    sub.add_argument("--nz", type=int, default=None, help="z sample count")
    sub.set_defaults(func=cmd_grin)

    sub = subs.add_parser("verify", help="run the invariant suite")
    _add_common(sub)
    sub.add_argument("--fuzz-energy", dest="fuzz_energy", type=float,
                     default=None,
                     help="perturb evolution phases to prove the "
                          "consistency check bites")
    sub.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except PrecisionError as exc:
        sys.stderr.write(f"precision error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
