import sys

from circproto.cli import main

sys.exit(main())
