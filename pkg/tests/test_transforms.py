import numpy as np
import pytest
from scipy.special import dawsn

from conftest import max_abs, rel_l2
from hardylog import library as lib
from hardylog.grid import (PreconditionError, SampledFunction, power_decay,
                           make_ladder)
from hardylog.transforms import (boundary_value, hilbert_transform,
                                 poisson_extend, poisson_kernel, poisson_slice,
                                 szego_project)


class TestPoissonKernel:
    def test_values(self):
        assert abs(poisson_kernel(1.0, 0.0) - 1.0 / np.pi) < 1e-15
        assert abs(poisson_kernel(2.0, 0.0) - 1.0 / (2 * np.pi)) < 1e-15

    def test_even_and_positive(self):
        x = np.linspace(-5, 5, 101)
        k = poisson_kernel(0.7, x)
        assert np.all(k > 0)
        assert np.allclose(k, k[::-1])

    def test_unit_mass(self):
        x = np.linspace(-2e4, 2e4, 400001)
        mass = np.trapezoid(poisson_kernel(3.0, x), x)
        assert abs(mass - 1.0) < 1e-3

    def test_rejects_nonpositive_height(self):
        with pytest.raises(PreconditionError):
            poisson_kernel(0.0, 1.0)


class TestPoissonExtend:
    def test_constant_exact_on_direct_path(self, rig_grid):
        one = lib.constant(rig_grid, 1.0)
        lad = make_ladder(1e-3, 1e3, 12)
        fld = poisson_extend(one, lad)
        assert max_abs(fld.values, 1.0) < 1e-12

    def test_semigroup_slice(self, rig_grid):
        p1 = lib.poisson_bump(rig_grid)
        x = rig_grid.nodes
        out = poisson_slice(p1, 2.0)
        assert max_abs(out.values.real, 3.0 / (np.pi * (x * x + 9.0))) <= 1e-4

    def test_harmonic_cosine_multiplier(self, rig_grid):
        # single-bin cosine through the pure one-period multiplier path
        a = lib.harmonic_freq(rig_grid, 1.0)
        x = rig_grid.nodes
        f0 = SampledFunction(rig_grid, np.cos(a * x), lib.LOG_GROWTH,
                             continuation=lambda u: np.cos(a * u), bounded=True)
        out = poisson_slice(f0, 1.0, pad_factor=1)
        # direct path handles log_growth; compare against the exact damping
        assert max_abs(out.values.real, np.exp(-a) * np.cos(a * x)) < 5e-4

    def test_windowed_cos_damping(self, rig_grid):
        wc = lib.windowed_cos(rig_grid)
        out = poisson_slice(wc, 1.0)
        central = np.abs(rig_grid.nodes) <= rig_grid.L / 2
        target = np.exp(-1.0) * np.cos(rig_grid.nodes)
        assert max_abs(out.values.real[central] - target[central]) < 2e-3

    def test_rejects_unresolvable_height(self, rig_grid):
        f = lib.gaussian(rig_grid)
        lad = make_ladder(rig_grid.dx / 8, 2.0, 8)
        with pytest.raises(PreconditionError):
            poisson_extend(f, lad)

    def test_log_growth_needs_continuation(self, rig_grid):
        vals = np.sign(rig_grid.nodes)
        bare = SampledFunction(rig_grid, vals, lib.LOG_GROWTH, bounded=True)
        with pytest.raises(PreconditionError):
            poisson_slice(bare, 1.0)

    def test_direct_path_closed_forms(self, rig_grid):
        x = rig_grid.nodes
        sg = lib.sign_step(rig_grid)
        for y in (1.0, 100.0, 1000.0):
            out = poisson_slice(sg, y)
            assert max_abs(out.values.real,
                           (2 / np.pi) * np.arctan(x / y)) < 1e-4
        la = lib.log_abs(rig_grid)
        for y in (1.0, 1000.0):
            out = poisson_slice(la, y)
            target = 0.5 * np.log(x * x + y * y)
            assert max_abs(out.values.real - target) < 0.02


class TestHilbert:
    def test_conjugate_kernel(self, rig_grid):
        p1 = lib.poisson_bump(rig_grid)
        x = rig_grid.nodes
        q1 = x / (np.pi * (1.0 + x * x))
        h = hilbert_transform(p1)
        assert rel_l2(h.values.real, q1) <= 1e-4

    def test_windowed_cos_to_sin(self, rig_grid):
        wc = lib.windowed_cos(rig_grid)
        h = hilbert_transform(wc)
        central = np.abs(rig_grid.nodes) <= rig_grid.L / 2
        assert max_abs((h.values.real - np.sin(rig_grid.nodes))[central]) <= 1e-3

    def test_involution_on_mean_free(self, rig_grid):
        f = lib.gaussian_deriv(rig_grid)
        hh = hilbert_transform(hilbert_transform(f))
        assert rel_l2(hh.values.real, -f.values.real) <= 1e-6

    def test_gaussian_dawson(self, rig_grid):
        f = lib.gaussian(rig_grid)
        h = hilbert_transform(f)
        target = 2.0 / np.sqrt(np.pi) * dawsn(rig_grid.nodes)
        assert rel_l2(h.values.real, target) <= 1e-4

    def test_kills_constants(self, rig_grid):
        one = lib.constant(rig_grid, 2.5)
        h = hilbert_transform(one)
        assert max_abs(h.values) < 1e-12

    def test_output_decay_bookkeeping(self, rig_grid):
        assert hilbert_transform(lib.gaussian(rig_grid)).decay == power_decay(2.0)
        # mean-free power input keeps an integrable (conservative) tag
        q = lib.conjugate_bump(rig_grid)
        p = SampledFunction(rig_grid, q.values, power_decay(2.0))
        assert hilbert_transform(p).decay == power_decay(1.5)
        # nonzero-mean power input is flagged non-integrable
        p1 = lib.poisson_bump(rig_grid)
        assert hilbert_transform(p1).decay.tag == "log_growth"


class TestSzego:
    def test_fixes_nonnegative_spectrum(self, rig_grid):
        rng = np.random.default_rng(3)
        n = rig_grid.n
        spec = np.zeros(n, dtype=np.complex128)
        spec[: n // 2] = rng.normal(size=n // 2) + 1j * rng.normal(size=n // 2)
        f0 = SampledFunction(rig_grid, np.fft.ifft(spec), lib.LOG_GROWTH,
                             bounded=True)
        p = szego_project(f0)
        assert rel_l2(p.values, f0.values) <= 1e-10

    def test_idempotent(self, rig_grid):
        rng = np.random.default_rng(4)
        f0 = SampledFunction(
            rig_grid, rng.normal(size=rig_grid.n) +
            1j * rng.normal(size=rig_grid.n), lib.LOG_GROWTH, bounded=True)
        p1 = szego_project(f0)
        p2 = szego_project(p1)
        assert rel_l2(p2.values, p1.values) <= 1e-10

    def test_windowed_cos_projection(self, rig_grid):
        wc = lib.windowed_cos(rig_grid)
        p = szego_project(wc)
        central = np.abs(rig_grid.nodes) <= rig_grid.L / 2
        target = 0.5 * np.exp(1j * rig_grid.nodes)
        assert max_abs((p.values - target)[central]) <= 1e-3

    def test_conjugate_identity(self, rig_grid):
        rng = np.random.default_rng(5)
        vals = rng.normal(size=rig_grid.n) + 1j * rng.normal(size=rig_grid.n)
        f0 = SampledFunction(rig_grid, vals, lib.LOG_GROWTH, bounded=True)
        conj_f0 = SampledFunction(rig_grid, np.conj(vals), lib.LOG_GROWTH,
                                  bounded=True)
        lhs = szego_project(f0).values + np.conj(szego_project(conj_f0).values)
        # flat (zero-frequency) component appears twice; Nyquist is dropped
        spec = np.fft.fft(vals)
        spec_adj = spec.copy()
        spec_adj[0] *= 2.0
        spec_adj[rig_grid.n // 2] = 0.0
        target = np.fft.ifft(spec_adj)
        assert rel_l2(lhs, target) <= 1e-10

    def test_holomorphy_link(self, rig_grid):
        # one-period operators: P_y f + i P_y Hf = 2 P_y(szego f) - flat term
        f = lib.gaussian(rig_grid, 1.0, 2.0)
        y = 2.0
        hf = hilbert_transform(f, pad_factor=1)
        lhs = poisson_slice(f, y, pad_factor=1).values + \
            1j * poisson_slice(hf.with_values(hf.values, power_decay(2.0)),
                               y, pad_factor=1).values
        proj = szego_project(f)
        rhs = 2.0 * poisson_slice(
            SampledFunction(rig_grid, proj.values, power_decay(2.0)),
            y, pad_factor=1).values
        flat = np.mean(f.values)
        assert max_abs(lhs - (rhs - flat)) <= 1e-10 * max_abs(f.values)

    def test_commutes_with_extension(self, rig_grid):
        p1 = lib.poisson_bump(rig_grid)
        h1 = hilbert_transform(p1, pad_factor=1)
        lhs = poisson_slice(SampledFunction(rig_grid, h1.values, power_decay(2.0)),
                            2.0, pad_factor=1)
        s = poisson_slice(p1, 2.0, pad_factor=1)
        rhs = hilbert_transform(SampledFunction(rig_grid, s.values,
                                                power_decay(2.0)), pad_factor=1)
        assert rel_l2(lhs.values, rhs.values) <= 1e-8


class TestBoundaryValue:
    def test_constant_field(self, rig_grid):
        lad = make_ladder(0.1, 10, 8)
        fld = lib.field_constant(rig_grid, lad, 3.0)
        bv = boundary_value(fld)
        assert max_abs(bv.f0.values, 3.0) == 0.0
        assert bv.gap == 0.0
        assert not bv.flagged

    def test_recovers_smooth_data(self, rig_grid):
        f = lib.gaussian(rig_grid)
        lad = make_ladder(0.5 * rig_grid.dx, 4.0, 16)
        fld = poisson_extend(f, lad)
        bv = boundary_value(fld)
        # kernel concentration: error O(y_min)
        assert max_abs(bv.f0.values, f.values) <= 2.0 * lad.levels[0]

    def test_closed_form_field(self, rig_grid, rig_ladder):
        fld = lib.field_inv_square(rig_grid, rig_ladder)
        bv = boundary_value(fld)
        target = 1.0 / (rig_grid.nodes + 1j) ** 2
        assert max_abs(bv.f0.values, target) <= 2.2e-3

    def test_flag_on_wide_gap(self, rig_grid):
        lad = make_ladder(0.1, 10, 8)
        vals = np.zeros((8, rig_grid.n), dtype=complex)
        vals[0] = 1.0
        vals[1] = 2.0
        from hardylog.grid import HalfPlaneField, RAPID
        fld = HalfPlaneField(rig_grid, lad, vals, RAPID)
        bv = boundary_value(fld)
        assert bv.flagged and bv.gap == 1.0
