"""
The Weyl group as an explicit finite group of matrices acting on the torus.

Elements are enumerated breadth first from the simple reflections, so element 0 is the
identity and the elements are ordered by word length, then lexicographically by word.
Subgroups are described by sorted element indices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import constants
from . import errors
from . import exact
from .exact import RationalMatrix, RationalVector
from .logger import main_logger
from .root_datum import RootDatum, reflection_matrix, root_value


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element. The word lists positions in the simple roots, applied right to left."""

    matrix: RationalMatrix
    word: tuple[int, ...]

    def act(self, h: Sequence[Fraction]) -> RationalVector:
        return self.matrix.apply(h)


@dataclass(frozen=True)
class SubgroupDescriptor:
    element_indices: tuple[int, ...]
    generator_indices: tuple[int, ...]

    def order(self) -> int:
        return len(self.element_indices)

    def __contains__(self, element_index: int) -> bool:
        return element_index in self.element_indices


class WeylGroup:
    """The enumerated Weyl group of a root datum, identity first."""

    def __init__(self, datum: RootDatum, elements: Sequence[WeylElement], generators: Sequence[RationalMatrix]):
        self.datum = datum
        self.elements = tuple(elements)
        self.generators = tuple(generators)
        self._index = {element.matrix: index for index, element in enumerate(self.elements)}
        self._gram_inverse = exact.inverse(datum.gram)
        self._products = {}

    def order(self) -> int:
        return len(self.elements)

    def index_of(self, matrix: RationalMatrix) -> int | None:
        return self._index.get(matrix)

    def _require_index(self, matrix: RationalMatrix) -> int:
        index = self.index_of(matrix)
        if index is None:
            raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "a product of Weyl group elements is no element")
        return index

    def multiply(self, i: int, j: int) -> int:
        """Return the index of elements[i] * elements[j]."""
        key = (i, j)
        if key not in self._products:
            self._products[key] = self._require_index(self.elements[i].matrix @ self.elements[j].matrix)
        return self._products[key]

    def inverse(self, i: int) -> int:
        """Return the index of the inverse, which is gram^-1 M^T gram for an isometry M."""
        matrix = self.elements[i].matrix
        return self._require_index(self._gram_inverse @ matrix.transpose() @ self.datum.gram)

    def act(self, i: int, h: Sequence[Fraction]) -> RationalVector:
        return self.elements[i].act(h)

    def whole(self) -> SubgroupDescriptor:
        return SubgroupDescriptor(tuple(range(self.order())), tuple(range(1, len(self.generators) + 1)))

    def reflection_index(self, root_index: int) -> int:
        """Return the element index of the reflection in the root hyperplane of the root at root_index."""
        return self._require_index(reflection_matrix(self.datum, root_index))


def act(element: WeylElement, h: Sequence[Fraction]) -> RationalVector:
    return element.act(h)


def reflection_word(datum: RootDatum, root_index: int) -> tuple[int, ...]:
    """
    Return a word in the simple reflections (positions in simple_indices) for r_alpha.

    A positive root that is not a multiple of a simple root has a simple root alpha_i with
    <alpha, alpha_i> > 0, and r_i(alpha) is a positive root of smaller height. Then
    r_alpha = r_i r_(r_i alpha) r_i.
    """
    covector = datum.roots[root_index].covector
    if root_index not in datum.positive_indices:
        covector = tuple(-entry for entry in covector)

    prefix = []
    while True:
        for position, simple_index in enumerate(datum.simple_indices):
            simple = datum.roots[simple_index].covector
            if exact.rank(RationalMatrix.from_rows([covector, simple])) == 1:
                return tuple(prefix) + (position,) + tuple(reversed(prefix))
        for position, simple_index in enumerate(datum.simple_indices):
            simple = datum.roots[simple_index].covector
            pairing = exact.pair(covector, simple, datum.gram)
            if pairing > 0:
                covector = exact.sub(covector, exact.scale(2 * pairing / exact.norm_squared(simple, datum.gram), simple))
                prefix.append(position)
                break
        else:
            raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "no simple root reduces the height of a root")


def reflection(datum: RootDatum, root_index: int) -> WeylElement:
    """Return r_alpha(H) = H - alpha(H) H_alpha^v as a Weyl group element."""
    return WeylElement(reflection_matrix(datum, root_index), reflection_word(datum, root_index))


def _check_element(datum: RootDatum, matrix: RationalMatrix):
    if matrix.transpose() @ datum.gram @ matrix != datum.gram:
        raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "a Weyl group element does not preserve the inner product")
    for root in datum.roots:
        image = datum.index_of(matrix.apply(root.covector))
        if image is None or datum.roots[image].multiplicity != root.multiplicity:
            raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION,
                               "a Weyl group element does not permute the roots with their multiplicities")


def enumerate_weyl_group(datum: RootDatum, max_order: int = constants.DEFAULT_MAX_WEYL_ORDER,
                         check_elements: bool = True) -> WeylGroup:
    """
    Enumerate the closure of the simple reflections.

    Raises WEYL_GROUP_TOO_LARGE with the cap and the number of elements found so far
    once the closure exceeds max_order.
    """
    generators = [reflection_matrix(datum, index) for index in datum.simple_indices]
    identity = RationalMatrix.identity(datum.rank)

    elements = [WeylElement(identity, ())]
    seen = {identity}
    queue = deque([elements[0]])

    while queue:
        element = queue.popleft()
        for position, generator in enumerate(generators):
            product = element.matrix @ generator
            if product in seen:
                continue
            if len(elements) >= max_order:
                raise RuntimeError(errors.WEYL_GROUP_TOO_LARGE, max_order, len(elements) + 1)
            seen.add(product)
            new_element = WeylElement(product, element.word + (position,))
            elements.append(new_element)
            queue.append(new_element)

    if check_elements:
        for element in elements:
            _check_element(datum, element.matrix)

    main_logger.debug("Enumerated a Weyl group of order %d", len(elements))

    return WeylGroup(datum, elements, generators)


def generated_subgroup(w_group: WeylGroup, generator_indices: Iterable[int]) -> SubgroupDescriptor:
    """Return the subgroup generated by the supplied elements (the identity for no generators)."""
    generator_indices = tuple(sorted(set(generator_indices)))
    members = {0}
    queue = deque([0])
    while queue:
        current = queue.popleft()
        for generator in generator_indices:
            product = w_group.multiply(current, generator)
            if product not in members:
                members.add(product)
                queue.append(product)
    return SubgroupDescriptor(tuple(sorted(members)), generator_indices)


def _subgroup_from_members(w_group: WeylGroup, members: Iterable[int]) -> SubgroupDescriptor:
    """Describe a set of elements known to be a subgroup, choosing generators greedily in element order."""
    members = tuple(sorted(set(members)))
    generators = []
    spanned = {0}
    for index in members:
        if index not in spanned:
            generators.append(index)
            spanned = set(generated_subgroup(w_group, generators).element_indices)
    if spanned != set(members):
        raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "the selected Weyl group elements are no subgroup")
    return SubgroupDescriptor(members, tuple(generators))


def stabilizer(w_group: WeylGroup, h: Sequence[Fraction]) -> SubgroupDescriptor:
    """
    Return W_H = {w : w h = h}.

    The result is cross-checked against the subgroup generated by the reflections
    in the root hyperplanes through h.
    """
    h = tuple(h)
    members = [index for index, element in enumerate(w_group.elements) if element.act(h) == h]
    datum = w_group.datum
    reflections = [w_group.reflection_index(i) for i in datum.positive_indices if root_value(datum, i, h) == 0]
    generated = generated_subgroup(w_group, reflections)
    if set(generated.element_indices) != set(members):
        raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION,
                           "the stabilizer differs from the group generated by the reflections fixing the point")
    return generated


def centralizer_mod_lattice(w_group: WeylGroup, h: Sequence[Fraction], gamma) -> SubgroupDescriptor:
    """Return W^q = {w : w h - h in gamma}, for a lattice offering contains(v)."""
    h = tuple(h)
    members = [index for index, element in enumerate(w_group.elements) if gamma.contains(exact.sub(element.act(h), h))]
    return _subgroup_from_members(w_group, members)


def parallel_subgroup(w_group: WeylGroup, datum: RootDatum, h: Sequence[Fraction]) -> SubgroupDescriptor:
    """
    Return W^q_0, generated by the reflections r_alpha with alpha(h) an integer.

    The root hyperplane alpha = 0 is parallel to the diagram hyperplane alpha = k through h.
    """
    reflections = [w_group.reflection_index(i) for i in datum.positive_indices
                   if exact.is_integral(root_value(datum, i, h))]
    return generated_subgroup(w_group, reflections)


def _check_normal(w_group: WeylGroup, sub: SubgroupDescriptor, normal_sub: SubgroupDescriptor):
    normal_members = set(normal_sub.element_indices)
    if not normal_members <= set(sub.element_indices):
        raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "W^q_0 is not contained in W^q")
    checked = normal_sub.generator_indices or normal_sub.element_indices
    for g in sub.element_indices:
        g_inverse = w_group.inverse(g)
        for n in checked:
            if w_group.multiply(w_group.multiply(g, n), g_inverse) not in normal_members:
                raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "W^q_0 is not normal in W^q")


def quotient_size(w_group: WeylGroup, sub: SubgroupDescriptor, normal_sub: SubgroupDescriptor) -> int:
    """Return |W^q| / |W^q_0| after checking containment and normality."""
    _check_normal(w_group, sub, normal_sub)
    if sub.order() % normal_sub.order() != 0:
        raise RuntimeError(errors.INTERNAL_INVARIANT_VIOLATION, "the subgroup order does not divide the group order")
    return sub.order() // normal_sub.order()


def cosets(w_group: WeylGroup, sub: SubgroupDescriptor, normal_sub: SubgroupDescriptor) -> list[tuple[int, ...]]:
    """
    Return the left cosets g W^q_0 of W^q_0 in W^q.

    Each coset is sorted, and the cosets are ordered by their smallest element, so the
    coset of the identity comes first.
    """
    _check_normal(w_group, sub, normal_sub)
    remaining = set(sub.element_indices)
    result = []
    for g in sub.element_indices:
        if g not in remaining:
            continue
        coset = tuple(sorted(w_group.multiply(g, n) for n in normal_sub.element_indices))
        remaining.difference_update(coset)
        result.append(coset)
    return result
