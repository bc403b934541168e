"""clusterkit: exact computation for cluster algebras of geometric type."""

__version__ = "0.1.0"
