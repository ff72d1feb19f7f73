# setup.py
from setuptools import find_packages, setup

setup(
    name="splitting_src",
    version="0.1.0",
    packages=find_packages("src"),  # find packages under src/
    package_dir={"": "src"},  # maps top-level imports to src/
    install_requires=[
        "python-dotenv>=1.0.0,<2.0.0",
        "pydantic>=2.6.0,<3.0.0",
        "PyYAML>=6.0.1,<7.0.0",
        "numpy>=1.26.0,<3.0.0",
        "pandas>=2.1.0,<3.0.0",
        "openpyxl>=3.1.2,<4.0.0",
        "sympy>=1.12,<2.0",
    ],
)
