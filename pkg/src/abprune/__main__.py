import sys

from abprune.cli import main

sys.exit(main())
