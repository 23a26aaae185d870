from setuptools import setup, find_packages

setup(
    name="aajones",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    package_data={"aajones": ["data/*.csv"]},
    install_requires=[
        # Core dependencies
        "numpy",  # For vectorized state enumeration
        "sympy",  # For exact rational spans and symbolic export
        "networkx",  # For checkerboard graphs, triangles and articulation points
        "pydantic>=2.0.0",  # For JSON report schemas
        "pandas",  # For CSV batch tables
        "tqdm",  # For progress bars
        "PyYAML",  # For the settings file
        "python-dotenv>=1.0.0",
    ],
    extras_require={
        "dev": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": [
            "aajones=aajones.cli:main",
        ],
    },
    description="Kauffman bracket, Jones polynomial and almost alternating diagram analytics",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
)
