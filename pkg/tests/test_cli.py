"""
Tests for the command line: argument parsing, output formats and exit codes
"""

import io
import json
import math

import pytest

from cli import EXIT_CONVERGENCE, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, run
from cli.models import parse_material, parse_mirror
from core.constants import KB, ev_to_rad_per_s
from core.errors import DomainError, UsageError
from materials.dielectric import (DrudeModel, PerfectConductor, PlasmaModel, TabulatedModel,
                                  Vacuum, gold_drude)
from scattering.mirror1d import MirrorKind
from casimir.one_dimensional import force_1d_perfect
from casimir.plane_plane import ideal_pressure

FAST_CONFIG = ("matsubara:\n  rel_tol: 1.0e-9\n"
               "quadrature:\n  rel_tol: 1.0e-8\n")


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stream=out, error_stream=err)
    return code, out.getvalue(), err.getvalue()


def table(text):
    lines = text.strip().splitlines()
    header = lines[0].split(',')
    return header, [dict(zip(header, map(float, line.split(',')))) for line in lines[1:]]


@pytest.fixture
def fast_config(tmp_path):
    path = tmp_path / "fast.yaml"
    path.write_text(FAST_CONFIG)
    return str(path)


class TestSinglePoint:
    def test_pressure(self):
        code, out, _ = invoke('pressure', '--model', 'perfect', '--T', '0', '--L', '1e-6')
        assert code == EXIT_OK
        assert float(out) == pytest.approx(ideal_pressure(1e-6), rel=1e-6)
        assert out.endswith("\n") and "e-03" in out

    def test_eta(self):
        code, out, _ = invoke('eta', '--model', 'perfect', '--T', '0', '--L', '1e-6')
        assert code == EXIT_OK
        assert float(out) == pytest.approx(1.0, rel=1e-6)

    def test_json(self):
        code, out, _ = invoke('pressure', '--T', '0', '--L', '1e-6', '--format', 'json')
        assert code == EXIT_OK
        records = json.loads(out)
        assert list(records[0]) == ['L_m', 'pressure']

    def test_verbose_errors(self):
        code, out, _ = invoke('pressure', '--T', '0', '--L', '1e-6', '--verbose-errors')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['L_m', 'pressure', 'err_est', 'n_terms']
        assert rows[0]['err_est'] >= 0.0

    def test_force1d(self):
        code, out, _ = invoke('force1d', '--mirror', 'perfect', '--T', '0', '--L', '1e-6')
        assert code == EXIT_OK
        assert float(out) == pytest.approx(force_1d_perfect(1e-6), rel=1e-8)

    def test_thermo_1d(self):
        code, out, _ = invoke('thermo', '--dim', '1d', '--mirror', 'perfect', '--T', '300',
                              '--L', '1e-6')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['L_m', 'T_K', 'free_energy', 'entropy', 'internal_energy']
        assert rows[0]['T_K'] == 300.0

    def test_spectral_density_at_zero_frequency(self):
        code, out, _ = invoke('spectral1d', '--mirror', 'perfect', '--L', '1e-6', '--omega', '0')
        assert code == EXIT_OK
        assert float(out) == -1.0

    def test_spectral_density_grid(self):
        code, out, _ = invoke('spectral1d', '--mirror', 'omega:1e16', '--L', '1e-6',
                              '--omega-min', '1e14', '--omega-max', '1e15', '--points', '5')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['omega_rad_s', 'g_minus_1']
        assert len(rows) == 5

    def test_pfa_with_oscillator(self, fast_config):
        code, out, _ = invoke('pfa', '--config', fast_config, '--model', 'perfect', '--T', '300',
                              '--L', '1e-6', '--R', '1e-4', '--K0', '1e-12', '--I', '1e-18',
                              '--b', '1e-4')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['L_m', 'R_m', 'force_N', 'gradient_N_per_m', 'aspect_ratio',
                          'omega0_sq', 'omega_sq']
        assert rows[0]['force_N'] < 0.0
        assert rows[0]['omega_sq'] < rows[0]['omega0_sq']

    def test_output_file(self, tmp_path):
        out_path = tmp_path / "results" / "p.txt"
        code, out, _ = invoke('pressure', '--T', '0', '--L', '1e-6', '--out', str(out_path))
        assert code == EXIT_OK
        assert out == ""
        assert float(out_path.read_text()) == pytest.approx(ideal_pressure(1e-6), rel=1e-6)


class TestSweeps:
    def test_force_sweep_keeps_grid_order(self):
        code, out, _ = invoke('sweep', '--quantity', 'force1d', '--mirror', 'perfect', '--T', '0',
                              '--lmin', '1e-6', '--lmax', '1e-4', '--points', '5', '--quiet',
                              '--threads', '3')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['L_m', 'force1d']
        distances = [row['L_m'] for row in rows]
        assert distances == sorted(distances)
        assert distances[0] == pytest.approx(1e-6) and distances[-1] == pytest.approx(1e-4)
        for row in rows:
            assert row['force1d'] == pytest.approx(force_1d_perfect(row['L_m']), rel=1e-8)

    def test_threads_do_not_change_output(self):
        argv = ('sweep', '--quantity', 'eta', '--model', 'drude-gold', '--T', '300',
                '--lmin', '1e-6', '--lmax', '1e-5', '--points', '3', '--quiet')
        _, serial, _ = invoke(*argv, '--threads', '1')
        _, parallel, _ = invoke(*argv, '--threads', '3')
        assert serial == parallel

    def test_linear_spacing_with_errors(self):
        code, out, _ = invoke('sweep', '--quantity', 'pressure', '--model', 'perfect', '--T', '300',
                              '--lmin', '1e-6', '--lmax', '3e-6', '--points', '3',
                              '--spacing', 'linear', '--verbose-errors', '--quiet')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['L_m', 'pressure', 'err_est', 'n_terms']
        assert rows[1]['L_m'] == pytest.approx(2e-6)
        assert all(row['n_terms'] >= 1 for row in rows)

    def test_temperature_sweep(self):
        code, out, _ = invoke('sweep', '--quantity', 'force1d', '--L', '5e-5', '--tmin', '300',
                              '--tmax', '600', '--points', '3', '--spacing', 'linear', '--quiet')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['T_K', 'L_m', 'force1d']
        assert [row['T_K'] for row in rows] == pytest.approx([300.0, 450.0, 600.0])
        for row in rows:
            assert row['L_m'] == 5e-5
            assert row['force1d'] == pytest.approx(-KB * row['T_K'] / (2.0 * 5e-5), rel=1e-6)

    def test_compare_models(self):
        code, out, _ = invoke('compare-models', '--T', '300', '--lmin', '1e-6', '--lmax', '1e-5',
                              '--points', '2', '--quiet')
        assert code == EXIT_OK
        header, rows = table(out)
        assert header == ['L_m', 'eta_drude', 'eta_plasma', 'ratio']
        assert rows[0]['eta_drude'] < rows[0]['eta_plasma']
        assert all(row['ratio'] > 1.0 for row in rows)

    def test_pfa_quantity_needs_radius(self):
        code, _, err = invoke('sweep', '--quantity', 'pfa-force', '--T', '0', '--lmin', '1e-6',
                              '--lmax', '1e-5', '--quiet')
        assert code == EXIT_DOMAIN
        assert "radius" in err

    def test_bad_grid(self):
        code, _, _ = invoke('sweep', '--quantity', 'pressure', '--T', '0', '--lmin', '1e-5',
                            '--lmax', '1e-6', '--quiet')
        assert code == EXIT_DOMAIN


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        (),
        ('teleport',),
        ('pressure', '--T', '0'),
        ('pressure', '--model', 'gold', '--T', '0', '--L', '1e-6'),
        ('pressure', '--T', 'warm', '--L', '1e-6'),
        ('spectral1d', '--L', '1e-6'),
        ('pfa', '--T', '0', '--L', '1e-6', '--R', '1e-4', '--K0', '1.0'),
        ('pressure', '--T', '0', '--L', '1e-6', '--threads', '0'),
        ('sweep', '--quantity', 'pressure', '--lmin', '1e-6', '--lmax', '1e-5'),
        ('sweep', '--quantity', 'pressure', '--L', '1e-6', '--tmin', '1'),
        ('sweep', '--quantity', 'pressure', '--T', '0', '--L', '1e-6', '--tmin', '1',
         '--tmax', '2'),
    ])
    def test_usage_errors(self, argv):
        code, _, err = invoke(*argv)
        assert code == EXIT_USAGE
        assert err.startswith("usage error")

    @pytest.mark.parametrize("argv", [
        ('pressure', '--T', '0', '--L=-1e-6'),
        ('pressure', '--T', '-5', '--L', '1e-6'),
        ('force1d', '--mirror', 'omega:-3', '--T', '0', '--L', '1e-6'),
        ('thermo', '--dim', '1d', '--T', '0', '--L', '1e-6'),
        ('sweep', '--quantity', 'pressure', '--L', '1e-6', '--tmin', '0', '--tmax', '300'),
        ('sweep', '--quantity', 'pressure', '--L', '1e-6', '--tmin', '300', '--tmax', '100'),
    ])
    def test_domain_errors(self, argv):
        code, _, err = invoke(*argv)
        assert code == EXIT_DOMAIN
        assert err.startswith("error")

    def test_convergence_error(self, tmp_path):
        path = tmp_path / "tight.yaml"
        path.write_text("matsubara:\n  n_max: 10\n")
        code, _, err = invoke('force1d', '--config', str(path), '--T', '1', '--L', '1e-6')
        assert code == EXIT_CONVERGENCE
        assert "convergence" in err

    def test_bad_configuration(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("physics:\n  warp_factor: 9\n")
        code, _, _ = invoke('pressure', '--config', str(path), '--T', '0', '--L', '1e-6')
        assert code == EXIT_DOMAIN

    def test_bad_thread_variable(self, monkeypatch):
        monkeypatch.setenv("CASIMIR_KIT_THREADS", "0")
        code, _, _ = invoke('pressure', '--T', '0', '--L', '1e-6')
        assert code == EXIT_DOMAIN

    def test_help(self, capsys):
        assert run(['--help']) == EXIT_OK
        assert "pressure" in capsys.readouterr().out

    def test_logging_goes_to_stderr(self, capsys):
        code, out, _ = invoke('pressure', '--T', '0', '--L', '1e-6', '--log-level', 'INFO')
        assert code == EXIT_OK
        captured = capsys.readouterr()
        assert "running pressure" in captured.err
        assert "running" not in out


class TestModelParsing:
    def test_aliases(self):
        assert isinstance(parse_material('perfect'), PerfectConductor)
        assert isinstance(parse_material('vacuum'), Vacuum)
        assert parse_material('drude-gold') == gold_drude()
        assert isinstance(parse_material('plasma-gold'), PlasmaModel)

    def test_parameters(self):
        assert parse_material('drude:1e16,5e13') == DrudeModel(omega_p=1e16, gamma=5e13)
        assert parse_material('plasma:1e16') == PlasmaModel(omega_p=1e16)

    def test_electronvolts(self):
        model = parse_material('drude:9.0,0.035', ev=True)
        assert model.omega_p == pytest.approx(ev_to_rad_per_s(9.0))
        assert model.gamma == pytest.approx(ev_to_rad_per_s(0.035))

    def test_tabulated(self, tmp_path):
        path = tmp_path / "gold.csv"
        path.write_text("omega_rad_s,eps_imag\n1e14,50.0\n1e15,1.0\n1e16,0.1\n")
        model = parse_material(f'tabulated:{path}')
        assert isinstance(model, TabulatedModel) and model.tail is None
        model = parse_material(f'tabulated:{path},drude-tail:1e16,5e13')
        assert model.tail == DrudeModel(omega_p=1e16, gamma=5e13)

    @pytest.mark.parametrize("spec", ['gold', 'drude:1e16', 'drude:abc,1', 'plasma-gold:3',
                                      'tabulated:', 'plasma:1,2'])
    def test_malformed(self, spec):
        with pytest.raises(UsageError):
            parse_material(spec)

    def test_out_of_domain(self):
        with pytest.raises(DomainError):
            parse_material('drude:-1,1')

    def test_mirrors(self):
        assert parse_mirror('perfect').kind is MirrorKind.PERFECT
        assert parse_mirror('transparent').kind is MirrorKind.TRANSPARENT
        mirror = parse_mirror('omega:2.5', ev=True)
        assert mirror.Omega == pytest.approx(ev_to_rad_per_s(2.5))
        with pytest.raises(UsageError):
            parse_mirror('silver')
        with pytest.raises(DomainError):
            parse_mirror('omega:-1')
        assert math.isfinite(parse_mirror('omega:1e15').penetration_length)
