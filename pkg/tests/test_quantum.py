"""Quantum deformation: coproducts, deformed relations, classical limit."""

import numpy as np
import pytest

from ckgeom import (
    DeformationKind,
    GENERATOR_NAMES,
    KappaPair,
    coassociativity_defect,
    cocommutator_map,
    coproduct_classical,
    coproduct_rep,
    deformation_scale,
    deformed_relation_defect,
    first_order_delta,
    rmatrix,
)

from helpers import NINE

ZS = (0.1, 0.3)


@pytest.mark.parametrize("kp", NINE, ids=lambda kp: f"{kp.k1:g},{kp.k2:g}")
@pytest.mark.parametrize("z", ZS)
def test_deformed_relations_close(kp, z):
    assert deformed_relation_defect(kp, z) < 1e-9


@pytest.mark.parametrize("kp", NINE, ids=lambda kp: f"{kp.k1:g},{kp.k2:g}")
@pytest.mark.parametrize("z", ZS)
def test_coassociativity(kp, z):
    assert coassociativity_defect(kp, z) < 1e-10


@pytest.mark.parametrize("kp", NINE, ids=lambda kp: f"{kp.k1:g},{kp.k2:g}")
def test_primitive_generator(kp):
    # the generator dual to the deformation direction stays primitive
    z = 0.2
    classical = coproduct_classical(kp, "J01")
    deformed = coproduct_rep(kp, z, "J01")
    assert np.max(np.abs(classical - deformed)) < 1e-14


@pytest.mark.parametrize("kp", NINE, ids=lambda kp: f"{kp.k1:g},{kp.k2:g}")
def test_coproduct_tends_to_classical(kp):
    # slope of the deviation in z stays bounded, so Delta_z -> Delta_0
    for gen in GENERATOR_NAMES:
        d1 = np.max(
            np.abs(
                coproduct_rep(kp, 1e-3, gen)
                - coproduct_classical(kp, gen)
            )
        )
        assert d1 < 1e-2


@pytest.mark.parametrize("kp", NINE, ids=lambda kp: f"{kp.k1:g},{kp.k2:g}")
def test_first_order_term_is_the_cocommutator(kp):
    for z in (1e-3, 1e-4):
        got = first_order_delta(kp, z)
        want = cocommutator_map(kp, rmatrix(DeformationKind.FIRST_KIND, z))
        for idx in range(3):
            defect = (got.image(idx) - want.image(idx)).max_abs()
            assert defect < 10.0 * z * z


def test_deformation_scale_limits():
    kp = KappaPair(1.0, 1.0)
    assert deformation_scale(kp, 1e-9) == pytest.approx(1.0, abs=1e-9)
    assert deformation_scale(KappaPair(1.0, 0.0), 0.3) == 1.0


def test_relation_defect_grows_from_zero():
    kp = KappaPair(1.0, 1.0)
    small = deformed_relation_defect(kp, 1e-6)
    assert small < 1e-11
