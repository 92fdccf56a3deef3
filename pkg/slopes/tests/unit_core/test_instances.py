from fractions import Fraction

from robba.instances import InstanceGenerator, context_for, standard_parameters
from robba.matrices import identity_matrix
from robba.slope_engine import compare_polygons, diagonal_exponents


class TestInstanceGenerator:
    def test_same_seed_same_instances(self, ctx):
        a, b = InstanceGenerator(ctx, 7), InstanceGenerator(ctx, 7)
        assert [a.element() for _ in range(5)] == [b.element() for _ in range(5)]

    def test_elements_are_nonzero(self, ctx):
        gen = InstanceGenerator(ctx, 1)
        assert not any(gen.element().is_zero for _ in range(20))

    def test_comparison_module_specializes(self, ctx):
        gen = InstanceGenerator(ctx, 3)
        for _ in range(3):
            module = gen.comparison_module()
            assert all(a.is_zero or a.min_exponent >= 0 for row in module.matrix for a in row)
            report = compare_polygons(module, seed=3)
            assert report.special is not None
            assert report.special.endpoint == report.generic.endpoint

    def test_triangularize_case_diagonal(self, ctx):
        case = InstanceGenerator(ctx, 5).triangularize_case()
        exps = diagonal_exponents(case.D)
        assert exps == sorted(exps, reverse=True)
        assert case.r == Fraction(1, 2)

    def test_triangularize_case_diagonal_is_one_mod_p(self, ctx):
        # A D^-1 の対角は 1 + (p の倍数)。ゼロの対角は作らない
        gen = InstanceGenerator(ctx, 42)
        for _ in range(25):
            case = gen.triangularize_case()
            A, exps = case.module.matrix, diagonal_exponents(case.D)
            for i, e in enumerate(exps):
                assert (A[i][i].scale_p(-e) - 1).valuation >= 1

    def test_good_model_radius(self, ctx):
        case = InstanceGenerator(ctx, 5).good_model_case()
        assert case.r == Fraction(1, 10)
        assert len(case.A) == len(case.D)

    def test_slope_multiset_size(self, ctx):
        assert len(InstanceGenerator(ctx, 0).slope_multiset(4)) == 4


def test_standard_parameters():
    params = standard_parameters()
    assert len(params) == 23
    assert (2, 4) not in params
    assert (0, 1) in params


def test_context_for_widens_window(ctx):
    # 単位行列（次数 0）の rank 4 でも候補ベクトルの次数 q^4 が必要
    wide = context_for(ctx, identity_matrix(ctx, 4), 4)
    assert wide.hi_cap == 625 + 8
    assert wide.prec == ctx.prec
