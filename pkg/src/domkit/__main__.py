import sys

from domkit.cli import main

sys.exit(main())
