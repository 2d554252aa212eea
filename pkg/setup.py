# setup.py
from setuptools import setup, find_packages

setup(
    name="extlift",
    version="0.1",
    packages=find_packages(exclude=["tests", "examples*"]),
    py_modules=["main"],
    install_requires=[
        "click>=8.1",
        "numpy>=1.26",
        "pydantic>=2.11",
        "reportlab>=4.4",
        "sympy>=1.14",
    ],
    entry_points={
        "console_scripts": [
            "extlift=presentation.cli:cli",
        ],
    },
)
