from setuptools import find_packages, setup

setup(
    name="coalgebra_tools",
    version="0.1",
    packages=[
        "global_variables",
        "scalars",
        "monoid_series",
        "bialgebra",
        "convolution",
        "independence",
        "dual_filtration",
        "cli",
    ],
    install_requires=["numpy", "pandas", "pyyaml", "sympy", "tqdm"],
    entry_points={"console_scripts": ["coalg = cli.commands:main"]},
)
