import sys
from pathlib import Path

from setuptools import find_packages, setup

# Get the project root directory
root_dir = Path(__file__).parent

# Add the package directory to the Python path
package_dir = root_dir / "halmos_kit"
sys.path.append(str(package_dir))

# Read the requirements from the requirements.txt file
requirements_path = root_dir / "requirements.txt"
with open(requirements_path) as fid:
    requirements = [l.strip() for l in fid.readlines() if l.strip()]

# Import the version from the package
from version import __version__

# Setup configuration
setup(
    name="halmos-kit",
    version=__version__,
    description="Canonical decomposition of a pair of orthogonal projections, "
    "with the calculus of the algebra they generate",
    long_description=open(root_dir / "README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    license="MIT",
    install_requires=requirements,
    packages=find_packages(where=root_dir, exclude=["examples", "examples.*"]),
    include_package_data=True,
    package_data={
        "halmos_kit": ["tests/golden/*.json"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    extras_require={
        "test": ["pytest>=8.0.0", "hypothesis>=6.100.0"],
    },
    entry_points={
        "console_scripts": [
            "halmos-kit = halmos_kit.cli:main",
        ]
    },
)
