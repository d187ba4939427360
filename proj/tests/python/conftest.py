import pathlib
import shutil
import sys

_ROOT = pathlib.Path(__file__).resolve().parents[2]
_PKG_DIR = _ROOT / "python"
_BUILD_DIR = _ROOT / "build" / "python"


def _ensure_extension():
    """Make the source tree importable when the wheel is not installed."""
    target = _PKG_DIR / "invtopos"
    if list(target.glob("_invtopos*.so")):
        return
    for so in _BUILD_DIR.glob("_invtopos*.so"):
        shutil.copy2(so, target / so.name)


try:
    import invtopos  # noqa: F401
except ImportError:
    _ensure_extension()
    sys.path.insert(0, str(_PKG_DIR))
