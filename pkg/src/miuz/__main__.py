import sys

from miuz.cli import main

sys.exit(main())
