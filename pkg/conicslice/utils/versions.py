import os
import platform
import sys
from importlib.metadata import PackageNotFoundError, version

import numpy as np


DEPENDENCIES = ("conicslice", "numpy", "scipy", "click")


def get_versions():
    """
    Collect the system information and the versions of the dependencies.

    Returns
    -------
    dict
        Two dictionaries under the keys ``"system"`` and ``"dependencies"``.
        Missing distributions are reported as ``None``.
    """
    system = {
        "python": sys.version.replace(os.linesep, " "),
        "executable": sys.executable,
        "machine": platform.platform(),
        "float_eps": repr(float(np.finfo(float).eps)),
    }
    dependencies = {}
    for name in DEPENDENCIES:
        try:
            dependencies[name] = version(name)
        except PackageNotFoundError:
            dependencies[name] = None
    return {"system": system, "dependencies": dependencies}


def _format_section(title, info):
    width = max(map(len, info)) + 1
    lines = [title, "-" * len(title)]
    lines.extend(f"{key:>{width}}: {value}" for key, value in info.items())
    return "\n".join(lines)


def show_versions(file=None):
    """
    Display the system information and the versions of the dependencies.

    When reporting issues, please include this information.

    Parameters
    ----------
    file : file-like, optional
        Stream to write to. Defaults to the standard output.
    """
    info = get_versions()
    print(_format_section("System settings", info["system"]), file=file)
    print(file=file)
    print(
        _format_section("Python dependencies", info["dependencies"]),
        file=file,
    )
