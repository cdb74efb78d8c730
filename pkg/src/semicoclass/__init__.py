"""Coclass graphs of finite nilpotent semigroups via contracted semigroup algebras."""
__version__ = "0.1.0"
