import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="paritygames",
    version="0.1.0",
    description="Random parity games, self-winning cycle propagation and exact solvers.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    classifiers=[
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.10",
    install_requires=[
        "frozendict==2.3.8",
        "numpy",
        "tqdm",
        "matplotlib",
        "increase_recursionlimit==1.0.0",
    ],
    entry_points={
        "console_scripts": ["paritygames=paritygames.cli:main"],
    },
)
