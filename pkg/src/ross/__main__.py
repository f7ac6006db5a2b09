import sys

from ross.cli import main

sys.exit(main())
