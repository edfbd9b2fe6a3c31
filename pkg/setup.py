import setuptools
import os

# read the contents of your README file
this_dir = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(this_dir, "README.md")) as f:
    long_description = f.read()

setuptools.setup(
    name="py-qpp",
    version="0.1.0",
    description="Exact-arithmetic verification of q-series identities for partitions, spt and overpartition pairs",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=[
        "q-series",
        "partitions",
        "overpartitions",
        "spt",
        "chebyshev",
        "exact arithmetic",
    ],
    license="MIT",
    packages=setuptools.find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
    install_requires=[
        "loguru~=0.7.2",
    ],
    extras_require={
        "test": ["pytest>=7"],
    },
    entry_points={
        "console_scripts": [
            "qpp=py_qpp.cli:main",
        ],
    },
    python_requires=">=3.8",
)
