from functools import reduce
from math import gcd

from arithmetic.brauer_qz import relative_brauer_local
from models.invariant_class import RelativeBrauerShape
from models.special_fibre import FibreComponent, GluingSpec, SpecialFibre
from utils.clogger import get_logger
from utils.number_theory import is_power_of, require_prime

_logger = get_logger("RegularModels")


def index_from_model(fb: SpecialFibre) -> int:
    """
    Index of the generic fibre of a regular model: the gcd of e * f over the special fibre components.

    Args:
        fb (SpecialFibre): Component data of the special fibre.

    Returns:
        int: The index.
    """
    if not fb.components:
        raise ValueError("A special fibre needs at least one component")
    return reduce(gcd, (component.weight for component in fb.components))


def good_reduction_fibre() -> SpecialFibre:
    """A smooth special fibre: one reduced, geometrically connected component."""
    return SpecialFibre((FibreComponent("Y", 1, 1),))


def relative_brauer_from_model(fb: SpecialFibre) -> RelativeBrauerShape:
    """
    The full relative Brauer group (1/ix)Z/Z with ix read off the model.

    The model only determines the index, so the shape is built with period equal to index.
    """
    ix = index_from_model(fb)
    return relative_brauer_local(ix, ix)


def glue_circle(gluing: GluingSpec) -> SpecialFibre:
    """
    The special fibre obtained by gluing the n conjugate copies of C over F_{q^n} in a circle.

    Over F_q the fibre is a single reduced component with constant field F_{q^n}; over the
    algebraic closure its dual graph is a cycle through the n copies.

    Args:
        gluing (GluingSpec): Circle length n >= 2, field size q and genus of C.

    Returns:
        SpecialFibre: One component (e=1, f=n) with the cycle as dual graph.
    """
    if not gluing.automorphism_free:
        _logger.warning(f"gluing a curve with automorphisms (n={gluing.n}, q={gluing.q}); the deformation argument needs Aut(C) = 1")
    else:
        _logger.warning(f"accepting without check that C over F_{gluing.q} has no automorphisms")

    vertices = [f"C{i}" for i in range(gluing.n)]
    edges = tuple((vertices[i], vertices[(i + 1) % gluing.n]) for i in range(gluing.n))
    return SpecialFibre((FibreComponent("C", 1, gluing.n),), edges)


def glued_genus(gluing: GluingSpec) -> int:
    """Arithmetic genus of the circle of n copies of C: n * g_C + 1 (n copies plus one loop)."""
    return gluing.n * gluing.genus_c + 1


def obstructs_section(fb: SpecialFibre, p: int) -> bool:
    """
    True when the index read off the model is not a power of the residue characteristic p.

    The caller asserts positive genus; then a section over the completion is impossible.
    """
    require_prime(p)
    return not is_power_of(index_from_model(fb), p)
