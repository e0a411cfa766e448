"""
App Module
Argument parsing and dispatch for the casimir-kit command line
"""

import argparse
import sys
from typing import Dict, List, Optional, Sequence, TextIO

from config import default_settings, load_config_file, logging_config, output_config
from core.errors import CasimirError, ConvergenceError, DomainError, UsageError
from casimir import one_dimensional as c1d
from casimir import plane_plane as c3d
from casimir.pfa import (OscillatorParams, PlaneSphereConfig, force_plane_sphere_pfa,
                         frequency_shift, gradient_plane_sphere_pfa)
from cli.models import parse_material, parse_mirror
from cli.sweep import (QUANTITIES, SweepSpec, TemperatureSweepSpec, is_one_dimensional,
                       parallel_map, run_sweep, run_temperature_sweep)
from utils.data_manager import ResultWriter, format_number
from utils.helpers import Timer, distance_grid
from utils.logger import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CONVERGENCE = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting on bad usage"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--config', help="YAML configuration file")
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help="Log level (logs go to stderr)")
    common.add_argument('--format', dest='fmt', default='csv', choices=['csv', 'json'],
                        help="Table format")
    common.add_argument('--out', help="Write output to this path instead of stdout")
    common.add_argument('--quiet', action='store_true', help="No progress bar")
    common.add_argument('--threads', type=int, help="Worker threads (overrides CASIMIR_KIT_THREADS)")
    common.add_argument('--verbose-errors', action='store_true',
                        help="Add err_est and n_terms columns")
    common.add_argument('--ev', action='store_true', help="Model frequencies are given in eV")
    return common


def _add_materials(parser: argparse.ArgumentParser, default: Optional[str] = 'perfect'):
    parser.add_argument('--model', default=default, help="Material of both mirrors")
    parser.add_argument('--model2', help="Material of the second mirror (default: --model)")


def _add_mirrors(parser: argparse.ArgumentParser):
    parser.add_argument('--mirror', default='perfect', help="1D mirror: perfect, transparent, omega:V")
    parser.add_argument('--mirror2', help="Second 1D mirror (default: --mirror)")


def _add_grid(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument('--lmin', type=float, required=required, help="Smallest distance (m)")
    parser.add_argument('--lmax', type=float, required=required, help="Largest distance (m)")
    parser.add_argument('--points', type=int, default=50, help="Number of grid points")
    parser.add_argument('--spacing', default='log', choices=['log', 'linear'])


def build_parser() -> argparse.ArgumentParser:
    """Parser with one sub-command per observable family"""
    common = _common_options()
    parser = _Parser(prog='casimir-kit', description="Casimir forces between mirrors")
    sub = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_Parser)
    sub.required = True

    for name, text in (('pressure', "Plane-plane pressure (Pa)"),
                       ('eta', "Reduction factor P / P_ideal")):
        p = sub.add_parser(name, parents=[common], help=text)
        _add_materials(p)
        p.add_argument('--T', type=float, required=True, help="Temperature (K)")
        p.add_argument('--L', type=float, required=True, help="Separation (m)")

    p = sub.add_parser('sweep', parents=[common], help="Sweep a quantity over distances")
    p.add_argument('--quantity', required=True, choices=QUANTITIES)
    _add_materials(p)
    _add_mirrors(p)
    _add_grid(p, required=False)
    p.add_argument('--T', type=float, help="Temperature of a distance sweep (K)")
    p.add_argument('--L', type=float, help="Separation of a temperature sweep (m)")
    p.add_argument('--tmin', type=float, help="Lowest temperature (K)")
    p.add_argument('--tmax', type=float, help="Highest temperature (K)")
    p.add_argument('--R', type=float, help="Sphere radius for pfa quantities (m)")
    p.add_argument('--omega', type=float, help="Real frequency for spectral1d (rad/s)")
    p.add_argument('--dim', default='3d', choices=['1d', '3d'])

    p = sub.add_parser('force1d', parents=[common], help="1D Casimir force (N)")
    _add_mirrors(p)
    p.add_argument('--T', type=float, required=True, help="Temperature (K)")
    p.add_argument('--L', type=float, required=True, help="Separation (m)")

    p = sub.add_parser('thermo', parents=[common], help="Free energy, entropy, internal energy")
    p.add_argument('--dim', default='3d', choices=['1d', '3d'])
    _add_materials(p)
    _add_mirrors(p)
    p.add_argument('--T', type=float, required=True, help="Temperature (K, > 0)")
    p.add_argument('--L', type=float, required=True, help="Separation (m)")

    p = sub.add_parser('pfa', parents=[common], help="Plane-sphere force in the PFA")
    _add_materials(p)
    p.add_argument('--T', type=float, required=True, help="Temperature (K)")
    p.add_argument('--L', type=float, required=True, help="Closest distance (m)")
    p.add_argument('--R', type=float, required=True, help="Sphere radius (m)")
    p.add_argument('--K0', type=float, help="Oscillator stiffness")
    p.add_argument('--I', type=float, help="Oscillator moment of inertia (kg m^2)")
    p.add_argument('--b', type=float, help="Oscillator lever arm (m)")

    p = sub.add_parser('compare-models', parents=[common],
                       help="eta_P of a Drude and a plasma description versus distance")
    p.add_argument('--drude', default='drude-gold', help="Dissipative material")
    p.add_argument('--plasma', default='plasma-gold', help="Lossless material")
    _add_grid(p)
    p.add_argument('--T', type=float, required=True, help="Temperature (K)")

    p = sub.add_parser('spectral1d', parents=[common], help="g(omega) - 1 of a 1D cavity")
    _add_mirrors(p)
    p.add_argument('--L', type=float, required=True, help="Separation (m)")
    p.add_argument('--omega', type=float, help="Single real frequency (rad/s)")
    p.add_argument('--omega-min', type=float, help="Frequency grid start (rad/s)")
    p.add_argument('--omega-max', type=float, help="Frequency grid end (rad/s)")
    p.add_argument('--points', type=int, default=200)
    return parser


class _Command:
    """Parsed arguments plus the shared runtime objects of one invocation"""

    def __init__(self, args: argparse.Namespace, stream: TextIO):
        self.args = args
        self.stream = stream
        self.settings = default_settings()
        self.writer = ResultWriter(args.fmt)
        self.threads = args.threads if args.threads is not None else output_config.resolve_threads()
        if self.threads < 1:
            raise UsageError(f"--threads must be >= 1, got {self.threads}")
        self.progress = output_config.progress and not args.quiet

    def materials(self):
        first = parse_material(self.args.model, self.args.ev)
        second = first if self.args.model2 is None else parse_material(self.args.model2, self.args.ev)
        return first, second

    def mirrors(self):
        first = parse_mirror(self.args.mirror, self.args.ev)
        second = first if self.args.mirror2 is None else parse_mirror(self.args.mirror2, self.args.ev)
        return first, second

    def emit_value(self, value: float, row: Dict, columns: List[str]):
        """Bare number by default; a one-row table for json or --verbose-errors"""
        if self.args.fmt == 'json' or self.args.verbose_errors:
            self.emit_table([row], columns)
            return
        self.writer.emit_text(format_number(value) + "\n", out=self.args.out, stream=self.stream)

    def emit_table(self, rows: List[Dict], columns: List[str]):
        self.writer.write(rows, columns, out=self.args.out, stream=self.stream)

    def table_columns(self, *columns: str) -> List[str]:
        extra = ['err_est', 'n_terms'] if self.args.verbose_errors else []
        return list(columns) + extra


def _cmd_pressure(cmd: _Command):
    args = cmd.args
    model1, model2 = cmd.materials()
    result = c3d.pressure(c3d.PlaneCavity(model1, model2, args.L), args.T, cmd.settings)
    name = 'pressure' if args.command == 'pressure' else 'eta'
    value = result.P if name == 'pressure' else result.eta_P
    error = result.error_estimate if name == 'pressure' else \
        abs(result.error_estimate / c3d.ideal_pressure(args.L))
    row = {'L_m': args.L, name: value, 'err_est': error, 'n_terms': result.n_matsubara}
    cmd.emit_value(value, row, cmd.table_columns('L_m', name))


def _cmd_force1d(cmd: _Command):
    args = cmd.args
    mirror1, mirror2 = cmd.mirrors()
    result = c1d.force_1d_auto(c1d.Cavity1D(mirror1, mirror2, args.L), args.T, cmd.settings)
    row = {'L_m': args.L, 'force1d': result.F, 'err_est': result.tail_estimate,
           'n_terms': result.n_matsubara}
    cmd.emit_value(result.F, row, cmd.table_columns('L_m', 'force1d'))


def _cmd_sweep(cmd: _Command):
    args = cmd.args
    over_temperature = args.tmin is not None or args.tmax is not None
    if over_temperature:
        if args.L is None or args.tmin is None or args.tmax is None:
            raise UsageError("a temperature sweep needs --L, --tmin and --tmax")
        if args.lmin is not None or args.lmax is not None or args.T is not None:
            raise UsageError("--lmin, --lmax and --T only apply to distance sweeps")
    elif args.lmin is None or args.lmax is None or args.T is None:
        raise UsageError("a distance sweep needs --lmin, --lmax and --T")
    elif args.L is not None:
        raise UsageError("--L only applies to temperature sweeps")

    one_dimensional = is_one_dimensional(args.quantity, args.dim)
    models = (None, None) if one_dimensional else cmd.materials()
    mirrors = cmd.mirrors() if one_dimensional else (None, None)
    targets = dict(quantity=args.quantity, model1=models[0], model2=models[1],
                   mirror1=mirrors[0], mirror2=mirrors[1], R=args.R, omega=args.omega,
                   dim=args.dim)
    if over_temperature:
        spec = TemperatureSweepSpec(L=args.L, t_min=args.tmin, t_max=args.tmax,
                                    points=args.points, spacing=args.spacing, **targets)
        rows = run_temperature_sweep(spec, cmd.settings, threads=cmd.threads,
                                     progress=cmd.progress)
        cmd.emit_table(rows, cmd.table_columns('T_K', 'L_m', args.quantity))
        return
    spec = SweepSpec(l_min=args.lmin, l_max=args.lmax, points=args.points, spacing=args.spacing,
                     T=args.T, **targets)
    rows = run_sweep(spec, cmd.settings, threads=cmd.threads, progress=cmd.progress)
    cmd.emit_table(rows, cmd.table_columns('L_m', args.quantity))


def _cmd_thermo(cmd: _Command):
    args = cmd.args
    if args.dim == '1d':
        mirror1, mirror2 = cmd.mirrors()
        result = c1d.thermodynamics_1d(c1d.Cavity1D(mirror1, mirror2, args.L), args.T,
                                       cmd.settings)
    else:
        model1, model2 = cmd.materials()
        result = c3d.thermodynamics_3d(c3d.PlaneCavity(model1, model2, args.L), args.T,
                                       cmd.settings)
    cmd.emit_table([result.to_dict()],
                   ['L_m', 'T_K', 'free_energy', 'entropy', 'internal_energy'])


def _cmd_pfa(cmd: _Command):
    args = cmd.args
    oscillator = (args.K0, args.I, args.b)
    if any(v is not None for v in oscillator) and any(v is None for v in oscillator):
        raise UsageError("--K0, --I and --b must be given together")
    model1, model2 = cmd.materials()
    cfg = PlaneSphereConfig(R=args.R, L=args.L, material_plane=model1, material_sphere=model2)
    force = force_plane_sphere_pfa(cfg, args.T, cmd.settings)
    row = {'L_m': args.L, 'R_m': args.R, 'force_N': force.force,
           'gradient_N_per_m': gradient_plane_sphere_pfa(cfg, args.T, cmd.settings),
           'aspect_ratio': force.aspect_ratio, 'err_est': abs(force.force) * force.relative_difference,
           'n_terms': 0}
    columns = ['L_m', 'R_m', 'force_N', 'gradient_N_per_m', 'aspect_ratio']
    if args.K0 is not None:
        omega0_sq, omega_sq = frequency_shift(OscillatorParams(*oscillator), cfg, args.T,
                                              cmd.settings)
        row.update({'omega0_sq': omega0_sq, 'omega_sq': omega_sq})
        columns += ['omega0_sq', 'omega_sq']
    cmd.emit_table([row], cmd.table_columns(*columns))


def _cmd_compare_models(cmd: _Command):
    args = cmd.args
    drude = parse_material(args.drude, args.ev)
    plasma = parse_material(args.plasma, args.ev)
    if args.points < 2:
        raise UsageError("--points must be >= 2")
    if not 0.0 < args.lmin < args.lmax:
        raise DomainError(f"need 0 < lmin < lmax, got {args.lmin!r}, {args.lmax!r}")
    grid = distance_grid(args.lmin, args.lmax, args.points, args.spacing)

    def row(L: float) -> Dict:
        a = c3d.pressure(c3d.PlaneCavity(drude, drude, L), args.T, cmd.settings)
        b = c3d.pressure(c3d.PlaneCavity(plasma, plasma, L), args.T, cmd.settings)
        return {'L_m': L, 'eta_drude': a.eta_P, 'eta_plasma': b.eta_P, 'ratio': b.P / a.P,
                'err_est': max(abs(a.error_estimate / a.P), abs(b.error_estimate / b.P)),
                'n_terms': max(a.n_matsubara, b.n_matsubara)}

    rows = parallel_map(row, grid, threads=cmd.threads, progress=cmd.progress,
                        description='compare-models')
    cmd.emit_table(rows, cmd.table_columns('L_m', 'eta_drude', 'eta_plasma', 'ratio'))


def _cmd_spectral1d(cmd: _Command):
    args = cmd.args
    mirror1, mirror2 = cmd.mirrors()
    cavity = c1d.Cavity1D(mirror1, mirror2, args.L)
    if args.omega is not None:
        value = c1d.spectral_density_1d(cavity, args.omega)
        row = {'omega_rad_s': args.omega, 'g_minus_1': value, 'err_est': 0.0, 'n_terms': 0}
        cmd.emit_value(value, row, cmd.table_columns('omega_rad_s', 'g_minus_1'))
        return
    if args.omega_min is None or args.omega_max is None:
        raise UsageError("spectral1d needs --omega or both --omega-min and --omega-max")
    if args.points < 2:
        raise UsageError("--points must be >= 2")
    grid = distance_grid(args.omega_min, args.omega_max, args.points, 'linear')
    rows = [{'omega_rad_s': w, 'g_minus_1': c1d.spectral_density_1d(cavity, w),
             'err_est': 0.0, 'n_terms': 0} for w in grid]
    cmd.emit_table(rows, cmd.table_columns('omega_rad_s', 'g_minus_1'))


HANDLERS = {
    'pressure': _cmd_pressure,
    'eta': _cmd_pressure,
    'sweep': _cmd_sweep,
    'force1d': _cmd_force1d,
    'thermo': _cmd_thermo,
    'pfa': _cmd_pfa,
    'compare-models': _cmd_compare_models,
    'spectral1d': _cmd_spectral1d,
}


def run(argv: Optional[Sequence[str]] = None, stream: Optional[TextIO] = None,
        error_stream: Optional[TextIO] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
        stream: Where data goes (default stdout)
        error_stream: Where error messages go (default stderr)

    Returns:
        Exit code: 0 success, 1 domain error, 2 convergence failure, 64 usage error
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stream = stream or sys.stdout
    error_stream = error_stream or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.config:
            load_config_file(args.config)
        setup_logging(level=args.log_level or logging_config.level,
                      log_file=logging_config.log_file,
                      console=logging_config.console)
        logger.info("running %s", args.command)
        with Timer(args.command) as timer:
            HANDLERS[args.command](_Command(args, stream))
        logger.info(timer.describe())
        return EXIT_OK
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    except UsageError as exc:
        error_stream.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ConvergenceError as exc:
        error_stream.write(f"convergence error: {exc}\n")
        return EXIT_CONVERGENCE
    except (CasimirError, ValueError, ArithmeticError, OSError) as exc:
        error_stream.write(f"error: {exc}\n")
        return EXIT_DOMAIN
