"""gl2lab: exact combinatorics, representation theory and symbolic
deformation-ring identities for GL2 over unramified extensions of Qp."""

__version__ = "0.1.0"
