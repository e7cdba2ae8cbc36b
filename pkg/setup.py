from setuptools import setup, find_packages

tests_require = ["pytest", "pytest-runner", "pytest-cov", "coverage", "sympy"]
docs_require = ["sphinx_rtd_theme", "sphinx-autodoc-annotation", "recommonmark"]

with open("README.md", "r") as src:
    LONG_DESCRIPTION = src.read()

setup(
    name="almostprime",
    description="Sieve bounds and counts for primes p with p+2 and p+6 almost prime.",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    version="0.1.0",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
    ],
    packages=find_packages(exclude=["test*"]),
    python_requires=">=3.8",
    install_requires=["numpy", "scipy", "pandas", "tables", "tqdm"],
    extras_require={"dev": docs_require + tests_require, "docs": docs_require},
    tests_require=tests_require,
    test_suite="test",
    entry_points={"console_scripts": ["almostprime=almostprime.cli:main"]},
    include_package_data=True,
    license="MIT",
)
