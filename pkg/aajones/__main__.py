import sys

from aajones.cli import main

sys.exit(main())
