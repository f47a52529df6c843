import sys
from chordmood.cli import main

sys.exit(main())
