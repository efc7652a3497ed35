from setuptools import setup

setup(
    name="coalgebra_tools",
    version="0.1",
    package_dir={"": "src"},
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
