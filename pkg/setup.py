from __future__ import print_function

import sys

from setuptools import find_packages, setup

from pydend import __version__

if sys.version_info < (3, 9):
    error = "ERROR: PyDend requires Python 3.9+ ... exiting."
    print(error, file=sys.stderr)
    sys.exit(1)


install_requires = [
    "numpy>=1.25",
    "pydantic>=2",
    "typing_extensions",
]

with open("README.rst", "rt") as readme:
    long_description = readme.read().strip()

packages = find_packages(exclude=["examples", "tests"])

setup(
    name="PyDend",
    version=__version__,
    description="Exact dendriform and restricted pre-Lie algebra computations over prime fields",
    keywords="dendriform,pre-lie,restricted lie algebra,rota-baxter,aybe,computer algebra",
    long_description=long_description,
    install_requires=install_requires,
    license="MIT",
    packages=packages,
    zip_safe=False,
    include_package_data=True,
    entry_points={
        "console_scripts": ["pydend=pydend.cli:main"],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    package_data={
        "pydend": ["py.typed", "fixtures/*.json"],
        "pydend.algebra_config": ["py.typed"],
        "pydend.laws": ["py.typed"],
        "pydend.structures": ["py.typed"],
    },
)
