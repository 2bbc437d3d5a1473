import sys

from affenv.cli import main

sys.exit(main())
