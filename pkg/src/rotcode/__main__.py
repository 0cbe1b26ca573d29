import sys

from rotcode.cli import main

sys.exit(main())
