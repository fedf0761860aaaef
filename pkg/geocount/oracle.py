"""
Floating point models of S2, RP2 and the Grassmannians of 2-planes in R^4.

The models evaluate the exponential map in closed form at pi*h and count conjugate
directions from finite difference Jacobians. They are only used to cross-check the exact
engine, nothing here is fed back into it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import errors
from . import catalog
from .root_datum import root_value

POINT_TOLERANCE = 1e-9
RANK_TOLERANCE = 1e-5
DIFFERENCE_STEP = 1e-6

SUPPORTED_SPACES = ("S2", "RP2", "Gr2R4", "Gr2R4+")

_BASE_POINT = np.array([0.0, 0.0, 1.0])


@dataclass(frozen=True)
class NumericPoint:
    """
    A point of a supported space in ambient coordinates.

    S2 points are unit vectors, RP2 points the projection matrix onto their line,
    Gr2R4 points the projection matrix onto the plane and Gr2R4+ points the Pluecker
    vector of an oriented orthonormal basis of the plane.
    """

    coordinates: tuple[float, ...]
    space_tag: str

    def array(self) -> np.ndarray:
        return np.array(self.coordinates)


def _require_supported(space_tag: str):
    if space_tag not in SUPPORTED_SPACES:
        raise RuntimeError(errors.ORACLE_UNSUPPORTED_SPACE, space_tag)


def _sphere_point(parameters: np.ndarray) -> np.ndarray:
    """exp_p(pi x) on the unit sphere around p = e_3, for x in the tangent plane R^2."""
    radius = np.linalg.norm(parameters)
    # sin(pi r) / r = pi sinc(r) stays smooth at r = 0
    tangent = np.pi * np.sinc(radius) * parameters
    return np.cos(np.pi * radius) * _BASE_POINT + np.array([tangent[0], tangent[1], 0.0])


def _plane_basis(parameters: np.ndarray) -> np.ndarray:
    """
    Return exp(X) [e_1, e_2] for X = [[0, -C^T], [C, 0]], C = pi * parameters as a 2x2 matrix.

    With C^T C = V diag(s^2) V^T the result is [V cos(s) V^T ; C V diag(sin(s)/s) V^T].
    """
    c = np.pi * parameters.reshape(2, 2)
    eigenvalues, v = np.linalg.eigh(c.T @ c)
    s = np.sqrt(np.clip(eigenvalues, 0.0, None))
    upper = v @ np.diag(np.cos(s)) @ v.T
    lower = c @ v @ np.diag(np.sinc(s / np.pi)) @ v.T
    return np.vstack([upper, lower])


def _pluecker(basis: np.ndarray) -> np.ndarray:
    first, second = basis[:, 0], basis[:, 1]
    return np.array([first[i] * second[j] - first[j] * second[i] for i in range(4) for j in range(i + 1, 4)])


def _model(space_tag: str, parameters: np.ndarray) -> np.ndarray:
    """Evaluate the ambient model on full tangent parameters (2 for the surfaces, 4 for the Grassmannians)."""
    if space_tag == "S2":
        return _sphere_point(parameters)
    if space_tag == "RP2":
        point = _sphere_point(parameters)
        return np.outer(point, point).ravel()
    basis = _plane_basis(parameters)
    if space_tag == "Gr2R4":
        return (basis @ basis.T).ravel()
    return _pluecker(basis)


def _tangent_parameters(space_tag: str, h: Sequence[Fraction]) -> np.ndarray:
    """Embed a torus vector into the full tangent space of the model."""
    values = [float(entry) for entry in h]
    if space_tag in ("S2", "RP2"):
        return np.array([values[0], 0.0])
    return np.array([values[0], 0.0, 0.0, values[1]])


def numeric_exp(space_tag: str, h: Sequence[Fraction]) -> NumericPoint:
    """Return exp_p(pi h) for the supported space."""
    _require_supported(space_tag)
    point = _model(space_tag, _tangent_parameters(space_tag, h))
    return NumericPoint(tuple(float(entry) for entry in point), space_tag)


def numeric_distance(first: NumericPoint, second: NumericPoint) -> float:
    """Return the euclidean distance of the ambient coordinates, which identify antipodes for RP2."""
    return float(np.linalg.norm(first.array() - second.array()))


def numeric_jacobian_index(space_tag: str, h: Sequence[Fraction]) -> int:
    """
    Return the dimension of the kernel of the differential of exp_p at pi h.

    The Jacobian of the ambient model is approximated by central differences and its rank
    counted by singular values above RANK_TOLERANCE.
    """
    _require_supported(space_tag)
    center = _tangent_parameters(space_tag, h)
    columns = []
    for k in range(len(center)):
        step = np.zeros(len(center))
        step[k] = DIFFERENCE_STEP
        columns.append((_model(space_tag, center + step) - _model(space_tag, center - step)) / (2 * DIFFERENCE_STEP))
    singular_values = np.linalg.svd(np.column_stack(columns), compute_uv=False)
    return len(center) - int(np.sum(singular_values > RANK_TOLERANCE))


def numeric_root_index(space_tag: str, h: Sequence[Fraction]) -> int:
    """Return the sum of the multiplicities of the positive roots with sin(pi alpha(h)) = 0 and alpha(h) != 0, in floats."""
    _require_supported(space_tag)
    datum = catalog.preset(space_tag).datum
    index = 0
    for root_index in datum.positive_indices:
        value = float(root_value(datum, root_index, h))
        if abs(value) > POINT_TOLERANCE and abs(np.sin(np.pi * value)) <= POINT_TOLERANCE:
            index += datum.roots[root_index].multiplicity
    return index


def numeric_index(space_tag: str, h: Sequence[Fraction]) -> int:
    """
    Return the index of h, counted from the root values and confirmed by the Jacobian.

    Raises ORACLE_INDEX_MISMATCH when both counts differ.
    """
    from_roots = numeric_root_index(space_tag, h)
    from_jacobian = numeric_jacobian_index(space_tag, h)
    if from_roots != from_jacobian:
        raise RuntimeError(errors.ORACLE_INDEX_MISMATCH,
                           "(" + ", ".join(str(entry) for entry in h) + ")", from_roots, from_jacobian)
    return from_roots
