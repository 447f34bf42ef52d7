#!/usr/bin/env python3
"""
Setup script for ConeCheck - symmetric cone verification tool

This makes conecheck globally accessible as a command-line tool.

Installation:
    pip install -e .

Usage after installation:
    conecheck verify --algebra "sym:3 x spin:4"
    conecheck metric --algebra rn:3 --a 1,2,4 --b 2,1,1
    conecheck decompose --algebra spin:3 --point 2,1,0
"""
from setuptools import setup

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

setup(
    name="conecheck",
    version="1.0.0",
    author="ConeCheck",
    description="Numerical verification of Euclidean Jordan algebra and symmetric cone geometry",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["factors"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Developers",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.10",
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "conecheck=conecheck:main_sync",
        ],
    },
    py_modules=[
        "conecheck",
        "config",
        "exceptions",
        "logging_config",
        "validation",
        "eigensolver",
        "algebra",
        "spectral",
        "cone_metrics",
        "isometries",
        "idempotents",
        "reports",
        "suites",
    ],
)
