import numpy as np
import pytest

from conftest import max_abs
from hardylog import library as lib
from hardylog.factor import product
from hardylog.grid import (PreconditionError, SampledFunction, make_ladder,
                           power_decay)
from hardylog.hankel import boundedness_study, hankel_apply, hankel_form
from hardylog.transforms import boundary_value, poisson_extend, szego_project


@pytest.fixture(scope="module")
def pair_ladder(rig_grid):
    return make_ladder(0.5 * rig_grid.dx, 1.5, 8)


class TestHankelApply:
    def test_constant_symbol_annihilates_projected_mean_free(self, rig_grid):
        one = lib.constant(rig_grid, 1.0)
        f0 = szego_project(lib.gaussian_deriv(rig_grid))
        out = hankel_apply(one, f0)
        # conjugation flips the spectrum to the nonpositive side; only the
        # flat component could survive and f0 is mean-free
        assert max_abs(out.values) <= 1e-12 * max_abs(f0.values)

    def test_zero_symbol(self, rig_grid):
        zero = lib.constant(rig_grid, 0.0)
        f0 = szego_project(lib.gaussian_deriv(rig_grid))
        assert max_abs(hankel_apply(zero, f0).values) == 0.0

    def test_antilinearity(self, rig_grid):
        b0 = lib.exp_osc(rig_grid, 1.0)
        f0 = szego_project(lib.gaussian_deriv(rig_grid))
        fi = f0.with_values(1j * f0.values)
        lhs = hankel_apply(b0, fi).values
        rhs = -1j * hankel_apply(b0, f0).values
        assert max_abs(lhs, rhs) <= 1e-12 * max_abs(rhs)

    def test_rejects_unbounded_symbol(self, rig_grid):
        la = lib.log_abs(rig_grid)
        f0 = szego_project(lib.gaussian_deriv(rig_grid))
        with pytest.raises(PreconditionError):
            hankel_apply(la, f0)

    def test_rejects_non_integrable_argument(self, rig_grid):
        b0 = lib.exp_osc(rig_grid, 1.0)
        with pytest.raises(PreconditionError):
            hankel_apply(b0, lib.sign_step(rig_grid))


class TestHankelForm:
    def test_zero_symbol(self, rig_grid, pair_ladder):
        zero = lib.constant(rig_grid, 0.0)
        f = poisson_extend(szego_project(lib.gaussian_deriv(rig_grid)),
                           pair_ladder)
        g = lib.field_constant(rig_grid, pair_ladder, 1.0)
        assert hankel_form(zero, f, g) == 0.0

    def test_constant_against_mean_free(self, rig_grid, pair_ladder):
        one = lib.constant(rig_grid, 1.0)
        f = poisson_extend(szego_project(lib.gaussian_deriv(rig_grid)),
                           pair_ladder)
        g = lib.field_constant(rig_grid, pair_ladder, 1.0)
        val = hankel_form(one, f, g)
        # residue is the trapezoid end-correction on the power tails
        assert abs(val) <= 1e-5

    def test_matches_operator_pairing(self, rig_grid, pair_ladder):
        b0 = lib.exp_osc(rig_grid, 1.0)
        f = poisson_extend(szego_project(lib.gaussian_deriv(rig_grid)),
                           pair_ladder)
        g = poisson_extend(lib.bmo_mixture(rig_grid,
                                           np.random.default_rng(11)),
                           pair_ladder)
        form = hankel_form(b0, f, g)
        w0 = boundary_value(product(f, g)).f0
        applied = hankel_apply(b0, SampledFunction(rig_grid, w0.values,
                                                   power_decay(2.0)))
        # projection keeps the flat component, so the plain average of the
        # operator output reproduces the pairing
        alt = 2.0 * rig_grid.L * np.mean(applied.values)
        assert abs(form - alt) <= 1e-6

    def test_linear_in_symbol(self, rig_grid, pair_ladder):
        b1 = lib.exp_osc(rig_grid, 1.0)
        b2 = SampledFunction(rig_grid, 2.0 * b1.values, b1.decay,
                             continuation=None, bounded=True)
        f = poisson_extend(szego_project(lib.gaussian_deriv(rig_grid)),
                           pair_ladder)
        g = lib.field_blaschke(rig_grid, pair_ladder)
        assert abs(hankel_form(b2, f, g) -
                   2.0 * hankel_form(b1, f, g)) <= 1e-12


class TestStudy:
    def test_deterministic(self, rig_grid):
        b0 = lib.exp_osc(rig_grid, 1.0)
        lad = make_ladder(0.5 * rig_grid.dx, 2 * rig_grid.L, 16)
        bf = lib.field_exp_osc(rig_grid, lad, 1.0)
        s1 = boundedness_study(b0, trials=3, seed=77, b_field=bf)
        s2 = boundedness_study(b0, trials=3, seed=77, b_field=bf)
        assert s1 == s2

    def test_symbol_doubling_doubles_forms(self, rig_grid):
        lad = make_ladder(0.5 * rig_grid.dx, 2 * rig_grid.L, 16)
        b1 = lib.exp_osc(rig_grid, 1.0)
        b2 = SampledFunction(rig_grid, 2.0 * b1.values, b1.decay,
                             continuation=b1.continuation, bounded=True)
        bf1 = lib.field_exp_osc(rig_grid, lad, 1.0)
        from hardylog.grid import HalfPlaneField
        bf2 = HalfPlaneField(rig_grid, lad, 2.0 * bf1.values, bf1.decay)
        s1 = boundedness_study(b1, trials=3, seed=5, b_field=bf1)
        s2 = boundedness_study(b2, trials=3, seed=5, b_field=bf2)
        assert abs(s2["max_form"] - 2.0 * s1["max_form"]) <= 1e-12

    def test_constant_symbol_degenerate(self, rig_grid):
        study = boundedness_study(lib.constant(rig_grid, 2.0), trials=2,
                                  seed=9)
        assert study["degenerate"] is True
        assert study["max_ratio"] is None
        assert study["max_form"] > 0.0
