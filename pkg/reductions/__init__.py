# reductions/__init__.py
# Executable hardness constructions: gadget builders and certificate translators.

from reductions.instance import ReductionError, ReductionInstance, load_bundle, save_bundle

__all__ = ["ReductionError", "ReductionInstance", "load_bundle", "save_bundle"]
