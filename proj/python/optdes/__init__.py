"""Approximate D-/A-optimal continuous experimental designs."""

try:
    from . import _core as _c  # installed layout
except ImportError:  # in-tree testing: the extension sits on sys.path alone
    import _core as _c

globals().update({k: v for k, v in vars(_c).items() if not k.startswith("_")})
__doc__ = _c.__doc__
del _c
