import sys

from cli.commands import main

# Same entry point as the installed `coalg` script, e.g.
#   python run.py unipotent --file frob.json --element xbar --horizon 10
#   python run.py verify --suite all --seed 42
if __name__ == "__main__":
    sys.exit(main())
