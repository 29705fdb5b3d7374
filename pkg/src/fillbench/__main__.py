import sys

from fillbench.cli import main

sys.exit(main())
