"""Numerical semigroups via Apéry sets and enumeration of ratio-covarieties."""

import logging

from .core import (
    Classification,
    DomainError,
    Invariants,
    NumericalSemigroup,
    NumericalSemigroupError,
    UsageError,
    delta,
    from_dict,
    from_generators,
    intersect,
    render,
)
from .covariety import (
    CovarietyDescriptor,
    CovarietyTree,
    DescriptorError,
    children,
    enumerate_tree,
    finite_descriptor,
    ratio_chain,
    verify_axioms,
)
from .gencov import OmegaChain, generated_covariety, omega_chain
from .kernels import BACKEND as KERNEL_BACKEND
from .rfm import (
    RfmFamily,
    RSet,
    genus_range,
    is_mr,
    is_rfm_set,
    maximal_elements,
    mr_witness,
    rfm_closure,
    rfm_enumerate,
    rfm_enumerate_genus,
    rfm_minimal_generators,
    rfm_rank,
)

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
