from setuptools import setup, find_packages

setup(
    name="SectionFlow",
    version="1.0.0",
    install_requires=[
        'pytest',
        'setuptools>=63.2.0',
        'aiofiles~=23.2.1',
        'sympy>=1.12',
        'numpy>=1.24',
    ],
    packages=find_packages(exclude=("tests", "examples", "examples.*")),
    py_modules=["sectionflow"],
    entry_points={"console_scripts": ["sectionflow=sectionflow:main"]},
)
