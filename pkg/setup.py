# Copyright 2026 The Refinery Authors. All Rights Reserved.

import setuptools


def get_long_description():
    with open('README.md') as f:
        long_description = f.read()
    return long_description


def get_version():
    version_path = "refinery/version.py"
    with open(version_path) as f:
        exec(compile(f.read(), version_path, "exec"))
    return locals()['__version__']


def get_requirements():
    with open("requirements.txt") as f:
        return f.read().splitlines()


required = get_requirements()

setuptools.setup(
    name="refinery",
    version=get_version(),
    author="The Refinery Authors",
    description="Refinery: congruences, factor congruences and the strict refinement property of finite algebras.",
    keywords="universal algebra, congruence lattice, direct product decomposition",
    long_description=get_long_description(),
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(include=("refinery", "refinery.*")),
    entry_points={"console_scripts": ["refinery=refinery.apis.cli:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
    install_requires=required,
)
