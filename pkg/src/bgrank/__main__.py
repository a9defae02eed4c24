import sys

from bgrank.cli import main

sys.exit(main())
