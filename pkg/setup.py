from setuptools import setup, find_packages

DEV_TOOLS = {"pytest", "pytest-cov", "black", "flake8", "mypy", "pre-commit"}


def _name(requirement: str) -> str:
    for sep in ("<", ">", "=", "~", "!", "["):
        requirement = requirement.split(sep)[0]
    return requirement.strip()


with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="hyperelliptic-census",
    version="1.0.0",
    description="Census of hyperelliptic curves over GF(2^n) and parity obstructions for their Weil polynomials",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    python_requires=">=3.9",
    install_requires=[r for r in requirements if _name(r) not in DEV_TOOLS],
    extras_require={"dev": [r for r in requirements if _name(r) in DEV_TOOLS]},
    entry_points={
        "console_scripts": [
            "hyperelliptic-census=hyperelliptic_census.cli:cli",
        ],
    },
)
