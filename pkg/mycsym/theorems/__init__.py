"""Registry entries, one module per family of results; importing a module registers its theorems."""
import glob
from os.path import basename, dirname, isfile, join

modules = sorted(glob.glob(join(dirname(__file__), '*.py')))
__all__ = [basename(f)[:-3] for f in modules if isfile(f) and not f.endswith('__init__.py')]
